//! A Chevalley basis of G2 and the graded module `K = V(ω₂) ⊕ ℂ`.
//!
//! Basis order: `x⁺_α` for the positive roots in [`POSITIVE_ROOTS`] order
//! (indices 0..6), then `x⁻_α` in the same order (6..12), then `h₁ = h_{α₁}`
//! and `h₂ = h_{α₂}` (12, 13).
//!
//! Sign convention: for every non-simple positive root `γ`, the extraspecial
//! pair `(α, β)` (α the earliest positive root with `γ − α` a positive root)
//! has `N_{α,β} = +(p + 1)`, where `p` is the largest integer with `β − pα` a
//! root. All other constants follow from `N_{β,α} = −N_{α,β}`,
//! `N_{−α,−β} = −N_{α,β}`, the cyclic rule for `α + β + γ = 0`, and the
//! four-root identity. `[x⁺_α, x⁻_α]` is the coroot `h_α`.

#![allow(clippy::needless_range_loop)]

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::characters::Character;
use crate::lattice::{is_root, positive_roots, SimpleIndex, Weight, HIGHEST_ROOT, POSITIVE_ROOTS};

pub const DIM: usize = 14;
const H1: usize = 12;
const H2: usize = 13;

/// An element of G2 written in the Chevalley basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LieElement(pub [i64; DIM]);

impl LieElement {
    pub const ZERO: LieElement = LieElement([0; DIM]);

    pub fn basis(i: usize) -> Self {
        let mut c = [0; DIM];
        c[i] = 1;
        LieElement(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn bracket(&self, other: &LieElement) -> LieElement {
        bracket_table().bracket(self, other)
    }
}

impl Add for LieElement {
    type Output = LieElement;
    fn add(mut self, rhs: LieElement) -> LieElement {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
        self
    }
}

impl Sub for LieElement {
    type Output = LieElement;
    fn sub(self, rhs: LieElement) -> LieElement {
        self + (-rhs)
    }
}

impl Neg for LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        LieElement(self.0.map(|c| -c))
    }
}

impl Mul<LieElement> for i64 {
    type Output = LieElement;
    fn mul(self, rhs: LieElement) -> LieElement {
        LieElement(rhs.0.map(|c| self * c))
    }
}

fn root_index(alpha: Weight) -> Option<usize> {
    let i = positive_roots().position(|r| r == alpha);
    i.or_else(|| positive_roots().position(|r| r == -alpha).map(|i| i + 6))
}

/// Basis element `x_α` for a (positive or negative) root.
pub fn x(alpha: Weight) -> LieElement {
    LieElement::basis(root_index(alpha).unwrap_or_else(|| panic!("{alpha} is not a root")))
}

pub fn x_pos(i: usize) -> LieElement {
    LieElement::basis(i)
}

pub fn x_neg(i: usize) -> LieElement {
    LieElement::basis(i + 6)
}

pub fn h(i: SimpleIndex) -> LieElement {
    LieElement::basis(match i {
        SimpleIndex::One => H1,
        SimpleIndex::Two => H2,
    })
}

/// Root attached to a basis index, or `None` for the Cartan elements.
pub fn basis_root(i: usize) -> Option<Weight> {
    match i {
        0..=5 => Some(POSITIVE_ROOTS[i].weight),
        6..=11 => Some(-POSITIVE_ROOTS[i - 6].weight),
        _ => None,
    }
}

/// Coroot `h_α` in the basis `h₁, h₂`.
fn coroot(alpha: Weight) -> LieElement {
    let (p, q) = alpha.to_root_coords();
    let len = alpha.norm_sq();
    let (c1, c2) = (p * Weight::ALPHA1.norm_sq(), q * Weight::ALPHA2.norm_sq());
    assert!(c1 % len == 0 && c2 % len == 0);
    (c1 / len) * h(SimpleIndex::One) + (c2 / len) * h(SimpleIndex::Two)
}

fn is_positive(alpha: Weight) -> bool {
    positive_roots().any(|r| r == alpha)
}

fn order(alpha: Weight) -> usize {
    positive_roots()
        .position(|r| r == alpha)
        .expect("positive root")
}

/// Largest `p` with `β − pα` a root.
fn string_below(alpha: Weight, beta: Weight) -> i64 {
    let mut p = 0;
    while is_root(beta - alpha * (p + 1)) {
        p += 1;
    }
    p
}

/// Structure constants `N_{α,β}` with `[x_α, x_β] = N_{α,β} x_{α+β}`.
struct StructureConstants {
    /// `N_{ξ,η}` for positive `ξ` earlier than positive `η`.
    special: HashMap<(Weight, Weight), i64>,
}

impl StructureConstants {
    fn build() -> Self {
        let mut sc = StructureConstants {
            special: HashMap::new(),
        };
        for zeta in positive_roots() {
            let mut pairs: Vec<(Weight, Weight)> = positive_roots()
                .filter(|&xi| is_positive(zeta - xi) && order(xi) < order(zeta - xi))
                .map(|xi| (xi, zeta - xi))
                .collect();
            pairs.sort_by_key(|&(xi, _)| order(xi));
            let Some(&(alpha, beta)) = pairs.first() else {
                continue;
            };
            let n_ab = string_below(alpha, beta) + 1;
            sc.special.insert((alpha, beta), n_ab);
            for &(xi, eta) in &pairs[1..] {
                // Four-root identity for α + β − ξ − η = 0, scaled by 6 so
                // every term is integral (squared lengths are 2 or 6).
                let mut scaled = 0;
                if is_root(beta - xi) {
                    scaled += sc.n(beta, -xi) * sc.n(alpha, -eta) * 6 / (beta - xi).norm_sq();
                }
                if is_root(alpha - xi) {
                    scaled += sc.n(-xi, alpha) * sc.n(beta, -eta) * 6 / (alpha - xi).norm_sq();
                }
                let num = scaled * zeta.norm_sq();
                assert_eq!(num % (6 * n_ab), 0, "inexact structure constant");
                let value = num / (6 * n_ab);
                let expected = string_below(xi, eta) + 1;
                assert_eq!(
                    value.abs(),
                    expected,
                    "sign bookkeeping failed for ({xi}, {eta})"
                );
                sc.special.insert((xi, eta), value);
            }
        }
        sc
    }

    fn n(&self, a: Weight, b: Weight) -> i64 {
        let sum = a + b;
        if sum == Weight::ZERO || !is_root(sum) {
            return 0;
        }
        match (is_positive(a), is_positive(b)) {
            (true, true) => {
                if order(a) < order(b) {
                    self.special[&(a, b)]
                } else {
                    -self.special[&(b, a)]
                }
            }
            (false, false) => -self.n(-a, -b),
            _ => {
                // a + b + c = 0 with N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
                let c = -sum;
                let (num, den) = if is_positive(b) == is_positive(c) {
                    (self.n(b, c) * c.norm_sq(), a.norm_sq())
                } else {
                    (self.n(c, a) * c.norm_sq(), b.norm_sq())
                };
                assert_eq!(num % den, 0, "inexact structure constant");
                num / den
            }
        }
    }
}

/// `[e_i, e_j]` for every pair of basis elements.
pub struct BracketTable {
    table: Vec<[LieElement; DIM]>,
}

impl BracketTable {
    pub fn build() -> Self {
        let sc = StructureConstants::build();
        let basic = |i: usize, j: usize| -> LieElement {
            match (basis_root(i), basis_root(j)) {
                (Some(a), Some(b)) if a + b == Weight::ZERO => coroot(a),
                (Some(a), Some(b)) => {
                    let n = sc.n(a, b);
                    if n == 0 {
                        LieElement::ZERO
                    } else {
                        n * x(a + b)
                    }
                }
                (None, Some(b)) => {
                    let s = if i == H1 {
                        SimpleIndex::One
                    } else {
                        SimpleIndex::Two
                    };
                    b.coroot_value(s) * LieElement::basis(j)
                }
                (Some(a), None) => {
                    let s = if j == H1 {
                        SimpleIndex::One
                    } else {
                        SimpleIndex::Two
                    };
                    -(a.coroot_value(s) * LieElement::basis(i))
                }
                (None, None) => LieElement::ZERO,
            }
        };
        let table = (0..DIM)
            .map(|i| std::array::from_fn(|j| basic(i, j)))
            .collect();
        BracketTable { table }
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> LieElement {
        self.table[i][j]
    }

    pub fn bracket(&self, u: &LieElement, v: &LieElement) -> LieElement {
        let mut out = LieElement::ZERO;
        for (i, &a) in u.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.0.iter().enumerate() {
                if b != 0 {
                    out = out + (a * b) * self.table[i][j];
                }
            }
        }
        out
    }

    /// Matrix of `ad e_i`; column `j` holds `[e_i, e_j]`.
    fn ad(&self, i: usize) -> [[i64; DIM]; DIM] {
        let mut m = [[0; DIM]; DIM];
        for j in 0..DIM {
            for (row, &c) in self.table[i][j].0.iter().enumerate() {
                m[row][j] = c;
            }
        }
        m
    }
}

pub fn bracket_table() -> &'static BracketTable {
    static TABLE: OnceLock<BracketTable> = OnceLock::new();
    TABLE.get_or_init(BracketTable::build)
}

fn killing_matrix() -> &'static [[i64; DIM]; DIM] {
    static KILLING: OnceLock<[[i64; DIM]; DIM]> = OnceLock::new();
    KILLING.get_or_init(|| {
        let t = bracket_table();
        let ads: Vec<_> = (0..DIM).map(|i| t.ad(i)).collect();
        let mut k = [[0; DIM]; DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                let mut tr = 0;
                for r in 0..DIM {
                    for s in 0..DIM {
                        tr += ads[i][r][s] * ads[j][s][r];
                    }
                }
                k[i][j] = tr;
            }
        }
        k
    })
}

/// `tr(ad x · ad y)`.
pub fn killing_form(u: &LieElement, v: &LieElement) -> i64 {
    let k = killing_matrix();
    let mut out = 0;
    for i in 0..DIM {
        for j in 0..DIM {
            out += u.0[i] * k[i][j] * v.0[j];
        }
    }
    out
}

/// Weights of the adjoint representation read off the action of `h₁, h₂`.
/// Returns `None` if some basis vector is not an eigenvector.
pub fn adjoint_weights() -> Option<Character> {
    let t = bracket_table();
    let mut c = Character::new();
    for j in 0..DIM {
        let mut wt = [0; 2];
        for (slot, hi) in [H1, H2].into_iter().enumerate() {
            let image = t.basis_bracket(hi, j);
            let scale = image.0[j];
            if image != scale * LieElement::basis(j) {
                return None;
            }
            wt[slot] = scale;
        }
        c.add_term(Weight::new(wt[0], wt[1]), 1);
    }
    Some(c)
}

/// An element `(y, a)` of `K = V(ω₂) ⊕ ℂ`, with `V(ω₂)` realised as the
/// adjoint module. `K[0] = V(ω₂)`, `K[1] = ℂ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KModuleElement {
    pub y: LieElement,
    pub a: i64,
}

impl KModuleElement {
    pub const ZERO: KModuleElement = KModuleElement {
        y: LieElement::ZERO,
        a: 0,
    };

    pub fn new(y: LieElement, a: i64) -> Self {
        KModuleElement { y, a }
    }

    /// The 15 basis vectors: the adjoint basis, then `(0, 1)`.
    pub fn basis() -> Vec<KModuleElement> {
        (0..DIM)
            .map(|i| KModuleElement::new(LieElement::basis(i), 0))
            .chain(std::iter::once(KModuleElement::new(LieElement::ZERO, 1)))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.y.is_zero() && self.a == 0
    }
}

impl Add for KModuleElement {
    type Output = KModuleElement;
    fn add(self, rhs: Self) -> Self {
        KModuleElement::new(self.y + rhs.y, self.a + rhs.a)
    }
}

impl Sub for KModuleElement {
    type Output = KModuleElement;
    fn sub(self, rhs: Self) -> Self {
        KModuleElement::new(self.y - rhs.y, self.a - rhs.a)
    }
}

impl Mul<KModuleElement> for i64 {
    type Output = KModuleElement;
    fn mul(self, rhs: KModuleElement) -> KModuleElement {
        KModuleElement::new(self * rhs.y, self * rhs.a)
    }
}

/// `(x ⊗ tʳ)(y, a) = (δ_{r,0}[x, y], δ_{r,1}⟨x, y⟩)`.
pub fn kr1_action(x: &LieElement, r: u32, v: &KModuleElement) -> KModuleElement {
    match r {
        0 => KModuleElement::new(x.bracket(&v.y), 0),
        1 => KModuleElement::new(LieElement::ZERO, killing_form(x, &v.y)),
        _ => KModuleElement::ZERO,
    }
}

/// `(dim K[0], dim K[1])`.
pub fn k_graded_dimensions() -> [usize; 2] {
    [DIM, 1]
}

/// Highest-weight vector `(x⁺_θ, 0)` of `K`, θ the highest root.
pub fn kr1_generator() -> KModuleElement {
    KModuleElement::new(x(HIGHEST_ROOT), 0)
}

/// Rank of a set of integer vectors.
pub fn rank(vectors: &[LieElement]) -> usize {
    let mut rows: Vec<[i128; DIM]> = vectors.iter().map(|v| v.0.map(i128::from)).collect();
    let mut rank = 0;
    for col in 0..DIM {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank];
        for r in rank + 1..rows.len() {
            let f = rows[r][col];
            if f != 0 {
                let mut g = 0i128;
                for c in 0..DIM {
                    rows[r][c] = rows[r][c] * p[col] - f * p[c];
                    g = gcd(g, rows[r][c]);
                }
                if g > 1 {
                    rows[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Dimension of `U(g₀)·v` inside the adjoint module.
pub fn adjoint_span_dimension(v: &LieElement) -> usize {
    let mut basis: Vec<LieElement> = vec![*v];
    let mut frontier = vec![*v];
    while let Some(u) = frontier.pop() {
        for i in 0..DIM {
            let w = LieElement::basis(i).bracket(&u);
            let mut grown = basis.clone();
            grown.push(w);
            if rank(&grown) > basis.len() {
                basis.push(w);
                frontier.push(w);
            }
        }
    }
    rank(&basis)
}

/// A failed relation check on `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationFailure {
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for RelationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

/// Checks that `v = (x⁺_θ, 0)` satisfies the defining relations of the
/// KR module with highest weight `ω₂` (m = 1), that `K` is a module for the
/// current algebra, and the properties of `(x⁻_θ ⊗ t)v`.
pub fn verify_kr1_relations() -> Vec<RelationFailure> {
    let mut failures = Vec::new();
    let mut fail = |check: &'static str, detail: String| {
        failures.push(RelationFailure { check, detail });
    };
    let v = kr1_generator();
    let m = 1;
    let top = Weight::OMEGA2 * m;

    for (i, alpha) in positive_roots().enumerate() {
        for r in 0..=3 {
            if !kr1_action(&x_pos(i), r, &v).is_zero() {
                fail("n+[t] v = 0", format!("x+_{alpha} t^{r}"));
            }
        }
    }

    for s_idx in SimpleIndex::ALL {
        for s in 0..=3u32 {
            let lhs = kr1_action(&h(s_idx), s, &v);
            let rhs = if s == 0 {
                top.coroot_value(s_idx) * v
            } else {
                KModuleElement::ZERO
            };
            if lhs != rhs {
                fail("(h t^s) v = δ m ω(h) v", format!("h_{s_idx:?} t^{s}"));
            }
        }
    }

    if !kr1_action(&x(-Weight::ALPHA1), 0, &v).is_zero() {
        fail("x-_a1 v = 0", String::new());
    }

    let mut w = v;
    for _ in 0..=m {
        w = kr1_action(&x(-Weight::ALPHA2), 0, &w);
    }
    if !w.is_zero() {
        fail("(x-_a2)^(m+1) v = 0", String::new());
    }

    if !kr1_action(&x(-Weight::ALPHA2), 1, &v).is_zero() {
        fail("(x-_a2 t) v = 0", String::new());
    }

    let u = kr1_action(&x(-HIGHEST_ROOT), 1, &v);
    if u.is_zero() {
        fail("(x-_theta t) v != 0", String::new());
    }
    for (i, alpha) in positive_roots().enumerate() {
        if !kr1_action(&x_pos(i), 0, &u).is_zero() {
            fail("n+ (x-_theta t) v = 0", format!("x+_{alpha}"));
        }
    }

    let basis = KModuleElement::basis();
    for i in 0..DIM {
        for j in 0..DIM {
            let (xi, xj) = (LieElement::basis(i), LieElement::basis(j));
            let commutator = xi.bracket(&xj);
            for p in 0..=2u32 {
                for q in 0..=2 - p {
                    for (bi, wv) in basis.iter().enumerate() {
                        let lhs = kr1_action(&commutator, p + q, wv);
                        let rhs = kr1_action(&xi, p, &kr1_action(&xj, q, wv))
                            - kr1_action(&xj, q, &kr1_action(&xi, p, wv));
                        if lhs != rhs {
                            fail(
                                "module axiom",
                                format!("e{i} t^{p}, e{j} t^{q} on basis vector {bi}"),
                            );
                        }
                    }
                }
            }
        }
    }

    let span = adjoint_span_dimension(&v.y);
    if span != DIM {
        fail("U(g0) v = V(ω2)", format!("span has dimension {span}"));
    }
    failures
}

/// Jacobi identity failures over all basis triples.
pub fn jacobi_failures() -> Vec<(usize, usize, usize)> {
    let t = bracket_table();
    let mut out = Vec::new();
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                let (a, b, c) = (
                    LieElement::basis(i),
                    LieElement::basis(j),
                    LieElement::basis(k),
                );
                let sum = t.bracket(&t.bracket(&a, &b), &c)
                    + t.bracket(&t.bracket(&b, &c), &a)
                    + t.bracket(&t.bracket(&c, &a), &b);
                if !sum.is_zero() {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

/// Triples where `⟨[x, y], z⟩ + ⟨y, [x, z]⟩ ≠ 0`.
pub fn killing_invariance_failures() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                let (a, b, c) = (
                    LieElement::basis(i),
                    LieElement::basis(j),
                    LieElement::basis(k),
                );
                if killing_form(&a.bracket(&b), &c) + killing_form(&b, &a.bracket(&c)) != 0 {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::irreducible_character;
    use crate::lattice::RootLength;

    #[test]
    fn simple_root_brackets() {
        let a1 = Weight::ALPHA1;
        let a2 = Weight::ALPHA2;
        assert_eq!(x(a1).bracket(&x(-a1)), h(SimpleIndex::One));
        assert_eq!(x(a2).bracket(&x(-a2)), h(SimpleIndex::Two));
        let c = x(a1).bracket(&x(a2));
        assert!(c == x(a1 + a2) || c == -x(a1 + a2), "{c:?}");
        assert_eq!(h(SimpleIndex::Two).bracket(&x(a1)), -x(a1));
        assert_eq!(h(SimpleIndex::One).bracket(&x(a1)), 2 * x(a1));
    }

    #[test]
    fn structure_constant_magnitudes() {
        // |N_{α,β}| = p + 1 for every pair with α + β a root.
        let t = bracket_table();
        for i in 0..12 {
            for j in 0..12 {
                let (a, b) = (basis_root(i).unwrap(), basis_root(j).unwrap());
                if a + b != Weight::ZERO && is_root(a + b) {
                    let n = t.basis_bracket(i, j).0[root_index(a + b).unwrap()];
                    assert_eq!(n.abs(), string_below(a, b) + 1, "N({a}, {b})");
                }
            }
        }
    }

    #[test]
    fn antisymmetry() {
        let t = bracket_table();
        for i in 0..DIM {
            for j in 0..DIM {
                assert_eq!(t.basis_bracket(i, j), -t.basis_bracket(j, i));
            }
        }
    }

    #[test]
    fn jacobi_and_invariance() {
        assert_eq!(jacobi_failures(), vec![]);
        assert_eq!(killing_invariance_failures(), vec![]);
    }

    #[test]
    fn killing_values() {
        assert_eq!(killing_form(&h(SimpleIndex::One), &x(Weight::ALPHA1)), 0);
        for a in positive_roots() {
            for b in positive_roots() {
                if a != b {
                    assert_eq!(killing_form(&x(a), &x(-b)), 0);
                }
            }
        }
        let short = killing_form(&x(Weight::ALPHA1), &x(-Weight::ALPHA1));
        assert_ne!(short, 0);
        for r in POSITIVE_ROOTS
            .iter()
            .filter(|r| r.length == RootLength::Short)
        {
            assert_eq!(killing_form(&x(r.weight), &x(-r.weight)), short);
        }
        for i in 0..DIM {
            for j in 0..DIM {
                let (a, b) = (LieElement::basis(i), LieElement::basis(j));
                assert_eq!(killing_form(&a, &b), killing_form(&b, &a));
            }
        }
    }

    #[test]
    fn adjoint_weights_form_the_adjoint_character() {
        assert_eq!(
            adjoint_weights().unwrap(),
            irreducible_character(Weight::OMEGA2).unwrap()
        );
    }

    #[test]
    fn action_formula() {
        let y = x(Weight::ALPHA2);
        let e = x(-Weight::ALPHA2);
        let v = KModuleElement::new(y, 5);
        assert_eq!(kr1_action(&e, 0, &v), KModuleElement::new(e.bracket(&y), 0));
        assert_eq!(
            kr1_action(&e, 1, &v),
            KModuleElement::new(LieElement::ZERO, killing_form(&e, &y))
        );
        assert!(kr1_action(&e, 2, &v).is_zero());
        assert!(kr1_action(&e, 1, &v).a != 0);
    }

    #[test]
    fn kr1_relations_hold() {
        assert_eq!(verify_kr1_relations(), vec![]);
        assert_eq!(k_graded_dimensions(), [14, 1]);
        assert_eq!(adjoint_span_dimension(&kr1_generator().y), 14);
    }

    #[test]
    fn rank_of_dependent_vectors() {
        let a = x(Weight::ALPHA1) + 3 * h(SimpleIndex::One);
        let b = 2 * x(Weight::ALPHA1) - h(SimpleIndex::Two);
        assert_eq!(rank(&[a, b, a + b]), 2);
        assert_eq!(rank(&[LieElement::ZERO]), 0);
    }
}
