//! The G2 weight lattice.
//!
//! Weights are stored in the fundamental-weight basis `a·ω₁ + b·ω₂`. The
//! simple roots are `α₁ = 2ω₁ − ω₂` (short) and `α₂ = −3ω₁ + 2ω₂` (long),
//! so `ω₁ = 2α₁ + α₂` and `ω₂ = 3α₁ + 2α₂`. For G2 the weight lattice and
//! the root lattice coincide, and both changes of basis are integral.
//!
//! The invariant form is normalised so that short roots have squared
//! length 2; its Gram matrix in the ω-basis is `[[2, 3], [3, 6]]`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// An element `a·ω₁ + b·ω₂` of the weight lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight::new(0, 0);
    pub const OMEGA1: Weight = Weight::new(1, 0);
    pub const OMEGA2: Weight = Weight::new(0, 1);
    pub const ALPHA1: Weight = Weight::new(2, -1);
    pub const ALPHA2: Weight = Weight::new(-3, 2);
    /// Half the sum of the positive roots, `ω₁ + ω₂`.
    pub const RHO: Weight = Weight::new(1, 1);

    pub const fn new(a: i64, b: i64) -> Self {
        Weight { a, b }
    }

    /// Builds `p·α₁ + q·α₂`.
    pub const fn from_root_coords(p: i64, q: i64) -> Self {
        Weight::new(2 * p - 3 * q, -p + 2 * q)
    }

    /// Returns `(p, q)` with `self = p·α₁ + q·α₂`.
    pub const fn to_root_coords(self) -> (i64, i64) {
        (2 * self.a + 3 * self.b, self.a + 2 * self.b)
    }

    /// Sum of the root coordinates.
    pub const fn height(self) -> i64 {
        let (p, q) = self.to_root_coords();
        p + q
    }

    /// Value of the weight on the simple coroot `h_{α_i}`, i.e. its i-th
    /// ω-coordinate.
    pub fn coroot_value(self, i: SimpleIndex) -> i64 {
        match i {
            SimpleIndex::One => self.a,
            SimpleIndex::Two => self.b,
        }
    }

    pub const fn is_dominant(self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    /// True when `self − other` is a nonnegative combination of simple roots.
    pub fn dominates(self, other: Weight) -> bool {
        let (p, q) = (self - other).to_root_coords();
        p >= 0 && q >= 0
    }

    pub fn inner(self, other: Weight) -> i64 {
        2 * self.a * other.a + 3 * (self.a * other.b + self.b * other.a) + 6 * self.b * other.b
    }

    pub fn norm_sq(self) -> i64 {
        self.inner(self)
    }

    pub fn reflect(self, i: SimpleIndex) -> Weight {
        self - i.root() * self.coroot_value(i)
    }

    /// The unique dominant weight in the Weyl orbit of `self`.
    pub fn dominant_representative(self) -> Weight {
        let mut w = self;
        loop {
            if w.a < 0 {
                w = w.reflect(SimpleIndex::One);
            } else if w.b < 0 {
                w = w.reflect(SimpleIndex::Two);
            } else {
                return w;
            }
        }
    }

    pub fn weyl_orbit(self) -> BTreeSet<Weight> {
        let mut orbit = BTreeSet::from([self]);
        let mut frontier = vec![self];
        while let Some(w) = frontier.pop() {
            for i in SimpleIndex::ALL {
                let r = w.reflect(i);
                if orbit.insert(r) {
                    frontier.push(r);
                }
            }
        }
        orbit
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        *self = *self + rhs;
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, rhs: Weight) {
        *self = *self - rhs;
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.a, -self.b)
    }
}

impl Mul<i64> for Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        Weight::new(self.a * k, self.b * k)
    }
}

/// Index of a simple root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleIndex {
    One,
    Two,
}

impl SimpleIndex {
    pub const ALL: [SimpleIndex; 2] = [SimpleIndex::One, SimpleIndex::Two];

    pub fn root(self) -> Weight {
        match self {
            SimpleIndex::One => Weight::ALPHA1,
            SimpleIndex::Two => Weight::ALPHA2,
        }
    }

    pub fn from_number(i: u8) -> Option<Self> {
        match i {
            1 => Some(SimpleIndex::One),
            2 => Some(SimpleIndex::Two),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootLength {
    Short,
    Long,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Root {
    pub weight: Weight,
    pub length: RootLength,
}

const fn root(p: i64, q: i64, length: RootLength) -> Root {
    Root {
        weight: Weight::from_root_coords(p, q),
        length,
    }
}

/// Positive roots ordered by height, simple roots first.
pub const POSITIVE_ROOTS: [Root; 6] = [
    root(1, 0, RootLength::Short),
    root(0, 1, RootLength::Long),
    root(1, 1, RootLength::Short),
    root(2, 1, RootLength::Short),
    root(3, 1, RootLength::Long),
    root(3, 2, RootLength::Long),
];

/// The highest root `3α₁ + 2α₂`, which equals `ω₂`.
pub const HIGHEST_ROOT: Weight = Weight::from_root_coords(3, 2);

pub fn positive_roots() -> impl Iterator<Item = Weight> {
    POSITIVE_ROOTS.iter().map(|r| r.weight)
}

pub fn is_root(w: Weight) -> bool {
    positive_roots().any(|r| r == w || -r == w)
}

/// All twelve roots: positives in `POSITIVE_ROOTS` order, then their negatives.
pub fn all_roots() -> impl Iterator<Item = Weight> {
    positive_roots().chain(positive_roots().map(|r| -r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn root_coordinates_of_fundamental_weights() {
        assert_eq!(Weight::OMEGA1.to_root_coords(), (2, 1));
        assert_eq!(Weight::ZERO.to_root_coords(), (0, 0));
        assert_eq!(Weight::OMEGA2.to_root_coords(), (3, 2));
        assert_eq!(HIGHEST_ROOT, Weight::OMEGA2);
    }

    #[test]
    fn simple_reflections() {
        assert_eq!(Weight::OMEGA1.reflect(SimpleIndex::One), Weight::new(-1, 1));
        assert_eq!(Weight::OMEGA1.reflect(SimpleIndex::Two), Weight::OMEGA1);
        assert_eq!(Weight::OMEGA2.reflect(SimpleIndex::One), Weight::OMEGA2);
    }

    #[test]
    fn coxeter_element_has_order_six() {
        // s1 s2 is a rotation of order 6, so 12 alternating reflections are the identity
        // and no shorter even word is.
        let w = Weight::new(3, 7);
        let mut x = w;
        for step in 1..=12 {
            x = x.reflect(if step % 2 == 1 {
                SimpleIndex::Two
            } else {
                SimpleIndex::One
            });
            if step % 2 == 0 && step < 12 {
                assert_ne!(x, w, "returned after {step} reflections");
            }
        }
        assert_eq!(x, w);
    }

    #[test]
    fn orbits() {
        assert_eq!(Weight::ZERO.weyl_orbit(), BTreeSet::from([Weight::ZERO]));

        let short: BTreeSet<Weight> = POSITIVE_ROOTS
            .iter()
            .filter(|r| r.length == RootLength::Short)
            .flat_map(|r| [r.weight, -r.weight])
            .collect();
        assert_eq!(Weight::OMEGA1.weyl_orbit(), short);

        assert_eq!(Weight::new(1, 1).weyl_orbit().len(), 12);
        assert_eq!(Weight::OMEGA2.weyl_orbit().len(), 6);
    }

    #[test]
    fn gram_matrix() {
        let (a1, a2) = (Weight::ALPHA1, Weight::ALPHA2);
        assert_eq!(a1.inner(a1), 2);
        assert_eq!(a2.inner(a2), 6);
        assert_eq!(a1.inner(a2), -3);
        assert_eq!(Weight::OMEGA1.inner(Weight::OMEGA2), 3);
        assert_eq!(Weight::OMEGA1.norm_sq(), 2);
        assert_eq!(Weight::OMEGA2.norm_sq(), 6);
    }

    #[test]
    fn dominance() {
        assert!(Weight::new(0, 0).is_dominant());
        assert!(Weight::new(2, 1).is_dominant());
        assert!(!Weight::new(-1, 1).is_dominant());
    }

    #[test]
    fn root_lengths_match_tags() {
        let mut short = 0;
        let mut long = 0;
        for r in POSITIVE_ROOTS {
            let (p, q) = r.weight.to_root_coords();
            assert!(p >= 0 && q >= 0);
            match (r.length, r.weight.norm_sq()) {
                (RootLength::Short, 2) => short += 1,
                (RootLength::Long, 6) => long += 1,
                other => panic!("mis-tagged root {}: {other:?}", r.weight),
            }
        }
        assert_eq!((short, long), (3, 3));
        assert_eq!(all_roots().collect::<BTreeSet<_>>().len(), 12);
        // Roots form a single orbit per length.
        assert_eq!(
            Weight::OMEGA2.weyl_orbit().len() + Weight::OMEGA1.weyl_orbit().len(),
            12
        );
    }

    fn weight() -> impl Strategy<Value = Weight> {
        (-50i64..50, -50i64..50).prop_map(|(a, b)| Weight::new(a, b))
    }

    fn index() -> impl Strategy<Value = SimpleIndex> {
        prop_oneof![Just(SimpleIndex::One), Just(SimpleIndex::Two)]
    }

    proptest! {
        #[test]
        fn reflection_is_involution(w in weight(), i in index()) {
            prop_assert_eq!(w.reflect(i).reflect(i), w);
        }

        #[test]
        fn reflection_preserves_form(v in weight(), w in weight(), i in index()) {
            prop_assert_eq!(v.reflect(i).inner(w.reflect(i)), v.inner(w));
        }

        #[test]
        fn root_coords_bijective(w in weight(), p in -50i64..50, q in -50i64..50) {
            let (x, y) = w.to_root_coords();
            prop_assert_eq!(Weight::from_root_coords(x, y), w);
            prop_assert_eq!(Weight::from_root_coords(p, q).to_root_coords(), (p, q));
        }

        #[test]
        fn orbit_has_one_dominant_member(w in weight()) {
            let orbit = w.weyl_orbit();
            prop_assert_eq!(12 % orbit.len(), 0);
            let dominant: Vec<_> = orbit.iter().filter(|x| x.is_dominant()).collect();
            prop_assert_eq!(dominant.len(), 1);
            prop_assert_eq!(*dominant[0], w.dominant_representative());
        }

        #[test]
        fn form_is_symmetric_and_bilinear(u in weight(), v in weight(), w in weight(), k in -5i64..5) {
            prop_assert_eq!(u.inner(v), v.inner(u));
            prop_assert_eq!((u + v * k).inner(w), u.inner(w) + k * v.inner(w));
        }
    }
}
