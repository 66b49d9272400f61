//! Formal characters of finite-dimensional G2-modules.
//!
//! Irreducible characters come from Freudenthal's recursion over the
//! dominant weights below the highest weight, processed in decreasing
//! order of `|μ + ρ|²`. Dimensions are checked independently against the
//! Weyl dimension formula.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{positive_roots, SimpleIndex, Weight};

/// A finite formal sum `Σ c_μ e(μ)` with nonzero integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Character {
    terms: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn new() -> Self {
        Self::default()
    }

    /// The character `e(μ)`.
    pub fn monomial(mu: Weight) -> Self {
        let mut c = Self::new();
        c.add_term(mu, 1);
        c
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut c = Self::new();
        for (mu, k) in terms {
            c.add_term(mu, k);
        }
        c
    }

    pub fn add_term(&mut self, mu: Weight, k: i64) {
        if k == 0 {
            return;
        }
        let entry = self.terms.entry(mu).or_insert(0);
        *entry = entry
            .checked_add(k)
            .expect("character coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&mu);
        }
    }

    /// `self += k · other`
    pub fn add_scaled(&mut self, other: &Character, k: i64) {
        for (&mu, &c) in &other.terms {
            self.add_term(
                mu,
                c.checked_mul(k).expect("character coefficient overflow"),
            );
        }
    }

    pub fn multiplicity(&self, mu: Weight) -> i64 {
        self.terms.get(&mu).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.terms.iter().map(|(&w, &k)| (w, k))
    }

    pub fn support(&self) -> impl Iterator<Item = Weight> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients; the dimension for a genuine module.
    pub fn mass(&self) -> BigInt {
        self.terms.values().map(|&k| BigInt::from(k)).sum()
    }

    pub fn multiply(&self, other: &Character) -> Character {
        let mut out = Character::new();
        for (&mu, &c1) in &self.terms {
            for (&nu, &c2) in &other.terms {
                out.add_term(
                    mu + nu,
                    c1.checked_mul(c2).expect("character coefficient overflow"),
                );
            }
        }
        out
    }

    pub fn is_weyl_invariant(&self) -> bool {
        self.terms.iter().all(|(&mu, &k)| {
            SimpleIndex::ALL
                .iter()
                .all(|&i| self.multiplicity(mu.reflect(i)) == k)
        })
    }
}

/// Multiplicities of irreducible constituents, keyed by dominant highest weight.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct IrrDecomposition {
    parts: BTreeMap<Weight, u64>,
}

impl IrrDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    /// Panics if `lambda` is not dominant.
    pub fn add(&mut self, lambda: Weight, mult: u64) {
        assert!(lambda.is_dominant(), "non-dominant highest weight {lambda}");
        if mult > 0 {
            *self.parts.entry(lambda).or_insert(0) += mult;
        }
    }

    pub fn from_parts(parts: impl IntoIterator<Item = (Weight, u64)>) -> Self {
        let mut d = Self::new();
        for (w, k) in parts {
            d.add(w, k);
        }
        d
    }

    pub fn multiplicity(&self, lambda: Weight) -> u64 {
        self.parts.get(&lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Weight, u64)> + '_ {
        self.parts.iter().map(|(&w, &k)| (w, k))
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `Σ mult · dim V(λ)`
    pub fn dimension(&self) -> BigUint {
        self.iter()
            .map(|(w, k)| weyl_dim(w).expect("keys are dominant") * k)
            .sum()
    }

    pub fn to_character(&self) -> Character {
        let mut c = Character::new();
        for (w, k) in self.iter() {
            let k = i64::try_from(k).expect("multiplicity exceeds i64");
            c.add_scaled(&irreducible_character(w).expect("keys are dominant"), k);
        }
        c
    }
}

impl fmt::Display for IrrDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let mut parts: Vec<_> = self.iter().collect();
        parts.sort_by_key(|&(w, _)| std::cmp::Reverse((w.height(), w.a)));
        for (n, (w, k)) in parts.into_iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if k == 1 {
                write!(f, "V{w}")?;
            } else {
                write!(f, "{k}V{w}")?;
            }
        }
        Ok(())
    }
}

fn dominant_below(lambda: Weight) -> Vec<Weight> {
    let top = lambda.height();
    let mut out = Vec::new();
    for b in 0..=top / 5 {
        for a in 0..=(top - 5 * b) / 3 {
            let mu = Weight::new(a, b);
            if lambda.dominates(mu) {
                out.push(mu);
            }
        }
    }
    out
}

fn freudenthal(lambda: Weight) -> Character {
    let rho = Weight::RHO;
    let top = (lambda + rho).norm_sq();
    let mut dominant = dominant_below(lambda);
    dominant.sort_by_key(|&mu| (std::cmp::Reverse((mu + rho).norm_sq()), mu));

    let mut mult: HashMap<Weight, i64> = HashMap::new();
    let lookup = |mult: &HashMap<Weight, i64>, nu: Weight| -> Option<i64> {
        let rep = nu.dominant_representative();
        if lambda.dominates(rep) {
            Some(
                *mult
                    .get(&rep)
                    .expect("higher dominant weight processed first"),
            )
        } else {
            None
        }
    };

    for mu in dominant {
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut num: i64 = 0;
        for alpha in positive_roots() {
            let mut nu = mu + alpha;
            while let Some(m) = lookup(&mult, nu) {
                num += m * nu.inner(alpha);
                nu += alpha;
            }
        }
        num *= 2;
        let den = top - (mu + rho).norm_sq();
        assert!(
            den > 0,
            "Freudenthal denominator vanished at {mu} in V({lambda})"
        );
        assert_eq!(
            num % den,
            0,
            "inexact Freudenthal division at {mu} in V({lambda})"
        );
        mult.insert(mu, num / den);
    }

    let mut c = Character::new();
    for (&mu, &k) in &mult {
        for nu in mu.weyl_orbit() {
            c.add_term(nu, k);
        }
    }
    c
}

fn memo() -> &'static RwLock<HashMap<Weight, Character>> {
    static MEMO: OnceLock<RwLock<HashMap<Weight, Character>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Character of the irreducible module `V(λ)`.
pub fn irreducible_character(lambda: Weight) -> Result<Character> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda));
    }
    if let Some(c) = memo().read().unwrap().get(&lambda) {
        return Ok(c.clone());
    }
    let c = freudenthal(lambda);
    memo()
        .write()
        .unwrap()
        .entry(lambda)
        .or_insert_with(|| c.clone());
    Ok(c)
}

/// Same as [`irreducible_character`] without touching the memo table.
pub fn irreducible_character_uncached(lambda: Weight) -> Result<Character> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda));
    }
    Ok(freudenthal(lambda))
}

/// Weyl dimension formula `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dim(lambda: Weight) -> Result<BigUint> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda));
    }
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for alpha in positive_roots() {
        num *= u64::try_from((lambda + Weight::RHO).inner(alpha)).expect("positive");
        den *= u64::try_from(Weight::RHO.inner(alpha)).expect("positive");
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// Writes a Weyl-invariant character as a nonnegative combination of
/// irreducible characters by peeling off the highest remaining weight.
pub fn decompose(c: &Character) -> Result<IrrDecomposition> {
    debug_assert!(
        c.is_weyl_invariant(),
        "decompose needs a Weyl-invariant character"
    );
    let mut rest = c.clone();
    let mut out = IrrDecomposition::new();
    while let Some((mu, k)) = rest.iter().max_by_key(|&(w, _)| (w.height(), w.a, w.b)) {
        if !mu.is_dominant() {
            return Err(Error::NotIrreducibleSum(format!(
                "highest remaining weight {mu} is not dominant"
            )));
        }
        if k < 0 {
            return Err(Error::NotIrreducibleSum(format!(
                "negative multiplicity {k} at highest remaining weight {mu}"
            )));
        }
        rest.add_scaled(&irreducible_character(mu)?, -k);
        out.add(mu, k as u64);
    }
    Ok(out)
}

/// Decomposition of `V(λ) ⊗ V(μ)`.
pub fn tensor(lambda: Weight, mu: Weight) -> Result<IrrDecomposition> {
    let product = irreducible_character(lambda)?.multiply(&irreducible_character(mu)?);
    decompose(&product)
}

/// Total mass as an unsigned integer; panics on a negative mass.
pub fn mass_unsigned(c: &Character) -> BigUint {
    let m = c.mass();
    assert!(!m.is_negative(), "negative character mass");
    m.to_biguint().expect("nonnegative")
}
