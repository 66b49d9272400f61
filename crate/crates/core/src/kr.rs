//! Graded characters of the four Kirillov–Reshetikhin families.
//!
//! `U1`/`U2` are the untwisted modules with highest weight `mω₁`/`mω₂`,
//! `T1`/`T2` their twisted counterparts. The untwisted `mω₂` and twisted
//! `mω₁` families are ladders `Σ_r t^{m−r} V(rω_i)`; the other two are sums
//! over lattice points of a polytope in `ℤ₊⁴` pushed through a weight map and
//! a grade map. Alongside the closed form, the module also evaluates the
//! older fermionic-style generating functions so the two can be compared.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::characters::{Character, IrrDecomposition};
use crate::error::{Error, Result};
use crate::lattice::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Untwisted, highest weight `mω₁`.
    U1,
    /// Untwisted, highest weight `mω₂`.
    U2,
    /// Twisted, highest weight `mω₁`.
    T1,
    /// Twisted, highest weight `mω₂`.
    T2,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::U1, Family::U2, Family::T1, Family::T2];

    pub fn name(self) -> &'static str {
        match self {
            Family::U1 => "u1",
            Family::U2 => "u2",
            Family::T1 => "t1",
            Family::T2 => "t2",
        }
    }

    /// `ω₁` or `ω₂`.
    pub fn fundamental_weight(self) -> Weight {
        match self {
            Family::U1 | Family::T1 => Weight::OMEGA1,
            Family::U2 | Family::T2 => Weight::OMEGA2,
        }
    }

    pub fn highest_weight(self, m: u64) -> Weight {
        self.fundamental_weight() * as_i64(m)
    }

    pub fn is_quad_indexed(self) -> bool {
        matches!(self, Family::U1 | Family::T2)
    }

    pub(crate) fn require_quad(self, operation: &'static str) -> Result<()> {
        if self.is_quad_indexed() {
            Ok(())
        } else {
            Err(Error::NotQuadIndexed {
                family: self,
                operation,
            })
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "u1" => Ok(Family::U1),
            "u2" => Ok(Family::U2),
            "t1" => Ok(Family::T1),
            "t2" => Ok(Family::T2),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

pub(crate) fn as_i64(x: u64) -> i64 {
    i64::try_from(x).expect("value exceeds i64")
}

/// A point `(r₁, r₂, r₃, r₄)` of `ℤ₊⁴`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QuadIndex(pub [u64; 4]);

impl QuadIndex {
    pub const ZERO: QuadIndex = QuadIndex([0; 4]);

    pub const fn new(r1: u64, r2: u64, r3: u64, r4: u64) -> Self {
        QuadIndex([r1, r2, r3, r4])
    }

    /// `self + ℓ·v`, or `None` if a coordinate goes negative.
    pub fn shifted(self, v: [i64; 4], ell: i64) -> Option<QuadIndex> {
        let mut out = [0u64; 4];
        for i in 0..4 {
            let x = as_i64(self.0[i]) + ell * v[i];
            out[i] = u64::try_from(x).ok()?;
        }
        Some(QuadIndex(out))
    }
}

impl fmt::Display for QuadIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// Weight and grade attached to a lattice point.
pub fn wt_gr(family: Family, m: u64, r: QuadIndex) -> Result<(Weight, u64)> {
    family.require_quad("wt_gr")?;
    let m = as_i64(m);
    let [r1, r2, r3, r4] = r.0;
    let [s1, s2, s3, s4] = r.0.map(as_i64);
    Ok(match family {
        Family::U1 => (
            Weight::new(m - s1 - 3 * s2 - 3 * s3, s2 + s3 - s4),
            r1 + r2 + 2 * r3 + 2 * r4,
        ),
        Family::T2 => (
            Weight::new(s1 + s2 - s3, m - s1 - s2 - s4),
            r1 + 2 * r2 + 2 * r3 + 3 * r4,
        ),
        Family::U2 | Family::T1 => unreachable!(),
    })
}

/// Membership in the family's polytope.
pub fn in_region(family: Family, m: u64, r: QuadIndex) -> Result<bool> {
    family.require_quad("in_region")?;
    let [r1, r2, r3, r4] = r.0;
    Ok(match family {
        Family::U1 => r4 <= r2 && 2 * r1 + 3 * r2 + 3 * r3 <= m,
        Family::T2 => r3 <= r1 && r1 + r2 + r3 + r4 <= m,
        Family::U2 | Family::T1 => unreachable!(),
    })
}

/// All lattice points of the region, in lexicographic order.
pub fn enumerate_region(family: Family, m: u64) -> Result<Vec<QuadIndex>> {
    family.require_quad("enumerate_region")?;
    let mut out = Vec::new();
    match family {
        Family::U1 => {
            for r1 in 0..=m / 2 {
                let left = m - 2 * r1;
                for r2 in 0..=left / 3 {
                    for r3 in 0..=(left - 3 * r2) / 3 {
                        for r4 in 0..=r2 {
                            out.push(QuadIndex::new(r1, r2, r3, r4));
                        }
                    }
                }
            }
        }
        Family::T2 => {
            for r1 in 0..=m {
                for r2 in 0..=m - r1 {
                    for r3 in 0..=r1.min(m - r1 - r2) {
                        for r4 in 0..=m - r1 - r2 - r3 {
                            out.push(QuadIndex::new(r1, r2, r3, r4));
                        }
                    }
                }
            }
        }
        Family::U2 | Family::T1 => unreachable!(),
    }
    for &r in &out {
        let (mu, _) = wt_gr(family, m, r)?;
        assert!(
            mu.is_dominant(),
            "{family} region point {r} has non-dominant weight {mu}"
        );
    }
    Ok(out)
}

/// A graded character written in the irreducible basis:
/// grade `n` ↦ `Σ_μ m_{μ,n} V(μ)`. Canonical: no empty grades.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedDecomposition {
    grades: BTreeMap<u64, IrrDecomposition>,
}

impl GradedDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, grade: u64, mu: Weight, mult: u64) {
        if mult > 0 {
            self.grades.entry(grade).or_default().add(mu, mult);
        }
    }

    pub fn from_components(items: impl IntoIterator<Item = (u64, Weight, u64)>) -> Self {
        let mut g = Self::new();
        for (n, mu, k) in items {
            g.add(n, mu, k);
        }
        g
    }

    pub fn grade(&self, n: u64) -> Option<&IrrDecomposition> {
        self.grades.get(&n)
    }

    pub fn grades(&self) -> impl Iterator<Item = (u64, &IrrDecomposition)> + '_ {
        self.grades.iter().map(|(&n, d)| (n, d))
    }

    pub fn multiplicity(&self, grade: u64, mu: Weight) -> u64 {
        self.grades.get(&grade).map_or(0, |d| d.multiplicity(mu))
    }

    /// `(grade, weight, mult)` triples sorted by grade, then weight.
    pub fn components(&self) -> impl Iterator<Item = (u64, Weight, u64)> + '_ {
        self.grades
            .iter()
            .flat_map(|(&n, d)| d.iter().map(move |(mu, k)| (n, mu, k)))
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }
}

fn ladder(family: Family, m: u64) -> GradedDecomposition {
    let omega = family.fundamental_weight();
    GradedDecomposition::from_components((0..=m).map(|r| (m - r, omega * as_i64(r), 1)))
}

/// Graded character from the closed form: ladders for `U2`/`T1`, lattice
/// point sums for `U1`/`T2`.
pub fn kr_graded_character(family: Family, m: u64) -> GradedDecomposition {
    if !family.is_quad_indexed() {
        return ladder(family, m);
    }
    let mut g = GradedDecomposition::new();
    for r in enumerate_region(family, m).expect("quad-indexed family") {
        let (mu, n) = wt_gr(family, m, r).expect("quad-indexed family");
        g.add(n, mu, 1);
    }
    g
}

/// `⌊x / 3⌋`, rounding toward negative infinity.
pub fn floor_third(x: i64) -> i64 {
    x.div_euclid(3)
}

/// Coefficient of the `U1` generating function at `(j, k)` before clamping.
pub fn u1_coefficient(m: u64, j: u64, k: u64) -> i64 {
    let (m, j, k) = (as_i64(m), as_i64(j), as_i64(k));
    1 + floor_third(j - 2 * k) + floor_third(m + k - 2 * j).min(0)
}

/// Coefficient of the `T2` generating function at `(j, k)`.
pub fn t2_coefficient(m: u64, j: u64, k: u64) -> i64 {
    1 + as_i64(k).min(as_i64(m) - as_i64(j) - as_i64(k))
}

/// A generating-function coefficient that was negative before clamping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NegativeCoefficient {
    pub family: Family,
    pub m: u64,
    pub j: u64,
    pub k: u64,
    pub value: i64,
}

/// Generating-function form together with every coefficient that had to be
/// clamped to zero.
pub fn conjecture_with_report(
    family: Family,
    m: u64,
) -> (GradedDecomposition, Vec<NegativeCoefficient>) {
    let mut g = GradedDecomposition::new();
    let mut negatives = Vec::new();
    let mut clamp = |j: u64, k: u64, value: i64| -> u64 {
        if value < 0 {
            log::warn!("{family} m={m}: coefficient at (j={j}, k={k}) is {value}; clamped to 0");
            negatives.push(NegativeCoefficient {
                family,
                m,
                j,
                k,
                value,
            });
        }
        value.max(0) as u64
    };
    match family {
        Family::U2 | Family::T1 => return (ladder(family, m), negatives),
        Family::U1 => {
            for k in 0..=m / 3 {
                for j in 2 * k..=m - k {
                    let c = clamp(j, k, u1_coefficient(m, j, k));
                    let mu = Weight::new(as_i64(m - j - k), as_i64(k));
                    for s in 0..=k {
                        g.add(j - k + s, mu, c);
                    }
                }
            }
        }
        Family::T2 => {
            for j in 0..=m {
                for k in 0..=m - j {
                    let c = clamp(j, k, t2_coefficient(m, j, k));
                    let mu = Weight::new(as_i64(j), as_i64(k));
                    let base = 3 * m - 2 * j - 3 * k;
                    for s in 0..=j {
                        g.add(base + s, mu, c);
                    }
                }
            }
        }
    }
    (g, negatives)
}

/// Generating-function form of the graded character.
pub fn conjecture_graded_character(family: Family, m: u64) -> GradedDecomposition {
    conjecture_with_report(family, m).0
}

/// One `(grade, weight)` where two graded characters disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub grade: u64,
    pub weight: Weight,
    pub left: u64,
    pub right: u64,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "grade {} weight {}: {} vs {}",
            self.grade, self.weight, self.left, self.right
        )
    }
}

/// Every `(grade, weight)` with differing multiplicities; empty iff equal.
pub fn compare(a: &GradedDecomposition, b: &GradedDecomposition) -> Vec<Mismatch> {
    let keys: std::collections::BTreeSet<(u64, Weight)> = a
        .components()
        .chain(b.components())
        .map(|(n, mu, _)| (n, mu))
        .collect();
    keys.into_iter()
        .filter_map(|(grade, weight)| {
            let (left, right) = (a.multiplicity(grade, weight), b.multiplicity(grade, weight));
            (left != right).then_some(Mismatch {
                grade,
                weight,
                left,
                right,
            })
        })
        .collect()
}

/// Grade-by-grade expansion into weight multiplicities.
pub fn expand_weights(g: &GradedDecomposition) -> BTreeMap<u64, Character> {
    g.grades().map(|(n, d)| (n, d.to_character())).collect()
}

/// `(grade, Σ mult · dim)` sorted by grade.
pub fn graded_dimensions(g: &GradedDecomposition) -> Vec<(u64, BigUint)> {
    g.grades().map(|(n, d)| (n, d.dimension())).collect()
}

/// Components violating `mω_i − μ ∈ Q⁺`.
pub fn support_violations(family: Family, m: u64, g: &GradedDecomposition) -> Vec<(u64, Weight)> {
    let top = family.highest_weight(m);
    g.components()
        .filter(|&(_, mu, _)| !top.dominates(mu))
        .map(|(n, mu, _)| (n, mu))
        .collect()
}
