//! Equivalence classes of lattice points with equal weight and grade.
//!
//! Two points of `ℤ⁴` have the same weight and grade exactly when they
//! differ by an integer multiple of a fixed shift vector. Each class that
//! meets the region has a canonical representative indexed by `(j, k, s)`;
//! this module builds those representatives, enumerates classes, and checks
//! that the representatives partition the region with the advertised class
//! sizes. Weighting representatives by class size gives a second route to
//! the graded character.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kr::{
    as_i64, enumerate_region, floor_third, in_region, t2_coefficient, u1_coefficient, wt_gr,
    Family, GradedDecomposition, QuadIndex,
};
use crate::lattice::Weight;

/// Index `(j, k, s)` of a class representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassKey {
    pub family: Family,
    pub j: u64,
    pub k: u64,
    pub s: u64,
}

impl ClassKey {
    pub fn new(family: Family, j: u64, k: u64, s: u64) -> Self {
        ClassKey { family, j, k, s }
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}(j={}, k={}, s={})",
            self.family, self.j, self.k, self.s
        )
    }
}

/// Generator of the equivalence along which weight and grade are constant.
pub fn shift_vector(family: Family) -> Result<[i64; 4]> {
    family.require_quad("shift_vector")?;
    Ok(match family {
        Family::U1 => [3, -1, 0, -1],
        _ => [1, 0, 1, -1],
    })
}

fn violated(m: u64, what: impl Into<String>) -> Error {
    Error::InvalidKey {
        m,
        violated: what.into(),
    }
}

/// Range checks on `(j, k, s)`, without the nonvanishing side condition.
fn check_ranges(m: u64, key: ClassKey) -> Result<()> {
    let ClassKey { family, j, k, s } = key;
    family.require_quad("class keys")?;
    match family {
        Family::U1 => {
            if k > m / 3 {
                return Err(violated(m, "k <= floor(m/3)"));
            }
            if j < 2 * k {
                return Err(violated(m, "2k <= j"));
            }
            if j + k > m {
                return Err(violated(m, "j <= m - k"));
            }
            if s > k {
                return Err(violated(m, "s <= k"));
            }
        }
        _ => {
            if j + k > m {
                return Err(violated(m, "j + k <= m"));
            }
            if s > j {
                return Err(violated(m, "s <= j"));
            }
        }
    }
    Ok(())
}

/// `(r₁, r₄)` with `j − 2k = r₁ + 3r₄`, `0 ≤ r₁ ≤ 2`.
fn u1_residues(j: u64, k: u64) -> (u64, u64) {
    let d = j - 2 * k;
    (d % 3, d / 3)
}

/// Nonvanishing condition `r₄ + k ≤ ⌊m/3⌋ + ⌊(m mod 3 − 2r₁)/3⌋` for `U1`.
pub fn u1_side_condition(m: u64, j: u64, k: u64) -> bool {
    let (r1, r4) = u1_residues(j, k);
    as_i64(r4 + k) <= as_i64(m / 3) + floor_third(as_i64(m % 3) - 2 * as_i64(r1))
}

/// Full validity: ranges plus, for `U1`, the side condition.
pub fn check_key(m: u64, key: ClassKey) -> Result<()> {
    check_ranges(m, key)?;
    if key.family == Family::U1 && !u1_side_condition(m, key.j, key.k) {
        return Err(violated(
            m,
            "r4 + k <= floor(m/3) + floor((m mod 3 - 2 r1)/3)",
        ));
    }
    Ok(())
}

/// Canonical representative of the class indexed by `key`.
pub fn representative(m: u64, key: ClassKey) -> Result<QuadIndex> {
    check_key(m, key)?;
    let ClassKey { family, j, k, s } = key;
    Ok(match family {
        Family::U1 => {
            let (r1, r4) = u1_residues(j, k);
            QuadIndex::new(r1, k + r4 - s, s, r4)
        }
        _ => QuadIndex::new(j - s, s, 0, m - j - k),
    })
}

/// Region points on the line `r + ℤ·shift`, in increasing shift order.
pub fn class_members(family: Family, m: u64, r: QuadIndex) -> Result<Vec<QuadIndex>> {
    if !in_region(family, m, r)? {
        return Err(Error::OutsideRegion {
            family,
            m,
            index: r,
        });
    }
    let v = shift_vector(family)?;
    // Walk down to the first ℓ leaving ℤ₊⁴; every shift direction has a
    // negative coordinate on each side, so both walks terminate.
    let mut lo = 0;
    while r.shifted(v, lo - 1).is_some() {
        lo -= 1;
    }
    let mut line = Vec::new();
    let mut ell = lo;
    while let Some(p) = r.shifted(v, ell) {
        line.push((ell, p, in_region(family, m, p)?));
        ell += 1;
    }
    let members: Vec<(i64, QuadIndex)> = line
        .iter()
        .filter(|(_, _, inside)| *inside)
        .map(|&(ell, p, _)| (ell, p))
        .collect();
    let first = members.first().expect("r itself is a member").0;
    let last = members.last().expect("r itself is a member").0;
    assert_eq!(
        (last - first + 1) as usize,
        members.len(),
        "{family} class of {r} is not an interval along the shift line"
    );
    Ok(members.into_iter().map(|(_, p)| p).collect())
}

/// Printed cardinality of the class of `key` inside the region.
pub fn class_size_formula(m: u64, key: ClassKey) -> Result<u64> {
    check_ranges(m, key)?;
    let value = match key.family {
        Family::U1 => u1_coefficient(m, key.j, key.k),
        _ => t2_coefficient(m, key.j, key.k),
    };
    u64::try_from(value).map_err(|_| violated(m, format!("class size formula is {value} < 0")))
}

/// Range-valid keys for `m`, in `(j, k, s)` order; for `U1` this includes keys
/// failing the side condition.
pub fn candidate_keys(family: Family, m: u64) -> Result<Vec<ClassKey>> {
    family.require_quad("candidate_keys")?;
    let mut out = Vec::new();
    for k in 0..=m {
        for j in 0..=m - k {
            for s in 0..=j.max(k) {
                let key = ClassKey::new(family, j, k, s);
                if check_ranges(m, key).is_ok() {
                    out.push(key);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Keys whose representative is defined.
pub fn valid_keys(family: Family, m: u64) -> Result<Vec<ClassKey>> {
    Ok(candidate_keys(family, m)?
        .into_iter()
        .filter(|&key| check_key(m, key).is_ok())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionIssue {
    /// A representative lies outside the region.
    RepresentativeOutside { key: ClassKey, rep: QuadIndex },
    /// A representative's weight or grade differs from the one its key predicts.
    WrongLabel {
        key: ClassKey,
        expected: (Weight, u64),
        actual: (Weight, u64),
    },
    /// A region point lies in the classes of two different keys.
    Overlap {
        point: QuadIndex,
        first: ClassKey,
        second: ClassKey,
    },
    /// A region point is in no representative's class.
    Uncovered(QuadIndex),
    /// Class size disagrees with the printed formula.
    SizeMismatch {
        key: ClassKey,
        formula: u64,
        actual: u64,
    },
    /// The side condition and the nonvanishing of the formula disagree.
    SideCondition { key: ClassKey, formula: u64 },
    /// Formula sum over all keys differs from the region size.
    MassMismatch { formula_total: u64, region: u64 },
}

impl fmt::Display for PartitionIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionIssue::RepresentativeOutside { key, rep } => {
                write!(f, "representative {rep} of {key} is outside the region")
            }
            PartitionIssue::WrongLabel {
                key,
                expected,
                actual,
            } => write!(
                f,
                "{key}: expected weight {} grade {}, got weight {} grade {}",
                expected.0, expected.1, actual.0, actual.1
            ),
            PartitionIssue::Overlap {
                point,
                first,
                second,
            } => write!(f, "{point} lies in the classes of {first} and {second}"),
            PartitionIssue::Uncovered(p) => write!(f, "{p} is not covered by any class"),
            PartitionIssue::SizeMismatch {
                key,
                formula,
                actual,
            } => write!(f, "{key}: class size {actual}, formula {formula}"),
            PartitionIssue::SideCondition { key, formula } => {
                write!(
                    f,
                    "{key}: side condition disagrees with formula value {formula}"
                )
            }
            PartitionIssue::MassMismatch {
                formula_total,
                region,
            } => write!(f, "formula total {formula_total} != region size {region}"),
        }
    }
}

/// Label `(weight, grade)` the key's representative must carry.
pub fn expected_label(m: u64, key: ClassKey) -> (Weight, u64) {
    let ClassKey { family, j, k, s } = key;
    match family {
        Family::U1 => (Weight::new(as_i64(m - j - k), as_i64(k)), j - k + s),
        _ => (Weight::new(as_i64(j), as_i64(k)), 3 * m - 2 * j - 3 * k + s),
    }
}

/// Checks that the representatives form a complete, irredundant set for the
/// classes of the region, with class sizes given by the formula.
pub fn verify_partition(family: Family, m: u64) -> Result<Vec<PartitionIssue>> {
    let region = enumerate_region(family, m)?;
    let mut issues = Vec::new();
    let mut owner: BTreeMap<QuadIndex, ClassKey> = BTreeMap::new();
    let mut formula_total = 0u64;

    for key in candidate_keys(family, m)? {
        let formula = class_size_formula(m, key)?;
        formula_total += formula;
        if family == Family::U1 && u1_side_condition(m, key.j, key.k) != (formula > 0) {
            issues.push(PartitionIssue::SideCondition { key, formula });
        }
        let Ok(rep) = representative(m, key) else {
            continue;
        };
        if !in_region(family, m, rep)? {
            issues.push(PartitionIssue::RepresentativeOutside { key, rep });
            continue;
        }
        let actual = wt_gr(family, m, rep)?;
        let expected = expected_label(m, key);
        if actual != expected {
            issues.push(PartitionIssue::WrongLabel {
                key,
                expected,
                actual,
            });
        }
        let members = class_members(family, m, rep)?;
        if members.len() as u64 != formula {
            issues.push(PartitionIssue::SizeMismatch {
                key,
                formula,
                actual: members.len() as u64,
            });
        }
        for point in members {
            if let Some(&first) = owner.get(&point) {
                issues.push(PartitionIssue::Overlap {
                    point,
                    first,
                    second: key,
                });
            } else {
                owner.insert(point, key);
            }
        }
    }

    for &point in &region {
        if !owner.contains_key(&point) {
            issues.push(PartitionIssue::Uncovered(point));
        }
    }
    if formula_total != region.len() as u64 {
        issues.push(PartitionIssue::MassMismatch {
            formula_total,
            region: region.len() as u64,
        });
    }
    Ok(issues)
}

/// Graded character assembled from representatives weighted by class size.
pub fn rebuild_from_representatives(family: Family, m: u64) -> Result<GradedDecomposition> {
    let mut g = GradedDecomposition::new();
    for key in valid_keys(family, m)? {
        let (mu, n) = wt_gr(family, m, representative(m, key)?)?;
        g.add(n, mu, class_size_formula(m, key)?);
    }
    Ok(g)
}

/// Partition reports for every `m` in `0..=max_m`, computed in parallel.
pub fn verify_partition_sweep(
    family: Family,
    max_m: u64,
) -> Result<Vec<(u64, Vec<PartitionIssue>)>> {
    (0..=max_m)
        .into_par_iter()
        .map(|m| verify_partition(family, m).map(|r| (m, r)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kr::{compare, kr_graded_character};

    fn q(r1: u64, r2: u64, r3: u64, r4: u64) -> QuadIndex {
        QuadIndex::new(r1, r2, r3, r4)
    }

    /// Independent class computation: group region points by (weight, grade).
    fn classes_by_label(family: Family, m: u64) -> BTreeMap<(Weight, u64), Vec<QuadIndex>> {
        let mut out: BTreeMap<_, Vec<_>> = BTreeMap::new();
        for r in enumerate_region(family, m).unwrap() {
            out.entry(wt_gr(family, m, r).unwrap()).or_default().push(r);
        }
        out
    }

    #[test]
    fn shift_vectors() {
        assert_eq!(shift_vector(Family::U1).unwrap(), [3, -1, 0, -1]);
        assert_eq!(shift_vector(Family::T2).unwrap(), [1, 0, 1, -1]);
        assert!(shift_vector(Family::U2).is_err());
    }

    #[test]
    fn shift_preserves_labels() {
        for family in [Family::U1, Family::T2] {
            let v = shift_vector(family).unwrap();
            let base = q(20, 20, 20, 20);
            for ell in -5..=5 {
                let p = base.shifted(v, ell).unwrap();
                assert_eq!(
                    wt_gr(family, 40, p).unwrap(),
                    wt_gr(family, 40, base).unwrap()
                );
            }
        }
    }

    #[test]
    fn representatives() {
        assert_eq!(
            representative(3, ClassKey::new(Family::U1, 3, 0, 0)).unwrap(),
            q(0, 1, 0, 1)
        );
        for m in [0, 4, 9] {
            assert_eq!(
                representative(m, ClassKey::new(Family::U1, 0, 0, 0)).unwrap(),
                QuadIndex::ZERO
            );
        }
        assert_eq!(
            representative(1, ClassKey::new(Family::T2, 1, 0, 0)).unwrap(),
            q(1, 0, 0, 0)
        );
    }

    #[test]
    fn invalid_keys_name_the_inequality() {
        let err = representative(3, ClassKey::new(Family::U1, 2, 0, 0)).unwrap_err();
        assert!(err.to_string().contains("r4 + k"), "{err}");
        let err = representative(3, ClassKey::new(Family::U1, 1, 1, 0)).unwrap_err();
        assert!(err.to_string().contains("2k <= j"), "{err}");
        let err = representative(2, ClassKey::new(Family::T2, 2, 1, 0)).unwrap_err();
        assert!(err.to_string().contains("j + k <= m"), "{err}");
        let err = class_size_formula(2, ClassKey::new(Family::T2, 1, 0, 2)).unwrap_err();
        assert!(err.to_string().contains("s <= j"), "{err}");
    }

    #[test]
    fn members() {
        assert_eq!(
            class_members(Family::U1, 6, q(0, 1, 0, 1)).unwrap(),
            vec![q(0, 1, 0, 1), q(3, 0, 0, 0)]
        );
        assert_eq!(
            class_members(Family::U1, 3, q(0, 1, 0, 1)).unwrap(),
            vec![q(0, 1, 0, 1)]
        );
        for family in [Family::U1, Family::T2] {
            assert_eq!(
                class_members(family, 5, QuadIndex::ZERO).unwrap(),
                vec![QuadIndex::ZERO]
            );
        }
        assert!(matches!(
            class_members(Family::U1, 3, q(2, 0, 0, 0)),
            Err(Error::OutsideRegion { .. })
        ));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(
            class_size_formula(6, ClassKey::new(Family::U1, 3, 0, 0)).unwrap(),
            2
        );
        assert_eq!(
            class_size_formula(3, ClassKey::new(Family::U1, 3, 0, 0)).unwrap(),
            1
        );
        assert_eq!(
            class_size_formula(1, ClassKey::new(Family::T2, 0, 0, 0)).unwrap(),
            1
        );
    }

    #[test]
    fn classes_match_label_grouping() {
        for family in [Family::U1, Family::T2] {
            for m in 0..=9 {
                for (_, points) in classes_by_label(family, m) {
                    for &p in &points {
                        assert_eq!(class_members(family, m, p).unwrap(), points);
                    }
                }
            }
        }
    }

    #[test]
    fn partitions_small() {
        for family in [Family::U1, Family::T2] {
            for m in 0..=12 {
                assert_eq!(
                    verify_partition(family, m).unwrap(),
                    vec![],
                    "{family} m={m}"
                );
                assert!(compare(
                    &rebuild_from_representatives(family, m).unwrap(),
                    &kr_graded_character(family, m)
                )
                .is_empty());
            }
        }
    }
}
