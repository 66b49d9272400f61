//! Sweeps over `m` shared by the command-line tool and the acceptance tests.

use rayon::prelude::*;

use crate::chevalley::{self, RelationFailure};
use crate::equivalence::{rebuild_from_representatives, verify_partition, PartitionIssue};
use crate::kr::{
    compare, conjecture_with_report, kr_graded_character, support_violations, Family, Mismatch,
    NegativeCoefficient,
};

/// Result of comparing closed form and generating function at one `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureCheck {
    pub family: Family,
    pub m: u64,
    pub mismatches: Vec<Mismatch>,
    pub negative_coefficients: Vec<NegativeCoefficient>,
}

impl ConjectureCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn conjecture_check(family: Family, m: u64) -> ConjectureCheck {
    let (conj, negative_coefficients) = conjecture_with_report(family, m);
    ConjectureCheck {
        family,
        m,
        mismatches: compare(&kr_graded_character(family, m), &conj),
        negative_coefficients,
    }
}

/// Conjecture checks for `m = 0..=max_m`, sorted by `m`.
pub fn conjecture_sweep(family: Family, max_m: u64) -> Vec<ConjectureCheck> {
    (0..=max_m)
        .into_par_iter()
        .map(|m| conjecture_check(family, m))
        .collect()
}

/// Partition and two-route checks at one `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCheck {
    pub family: Family,
    pub m: u64,
    pub partition: Vec<PartitionIssue>,
    /// Differences between the representative route and direct enumeration.
    pub rebuild: Vec<Mismatch>,
}

impl ClassCheck {
    pub fn passed(&self) -> bool {
        self.partition.is_empty() && self.rebuild.is_empty()
    }
}

/// Panics for families without a quadruple index.
pub fn class_check(family: Family, m: u64) -> ClassCheck {
    let partition = verify_partition(family, m).expect("quad-indexed family");
    let rebuilt = rebuild_from_representatives(family, m).expect("quad-indexed family");
    ClassCheck {
        family,
        m,
        partition,
        rebuild: compare(&rebuilt, &kr_graded_character(family, m)),
    }
}

pub fn class_sweep(family: Family, max_m: u64) -> Vec<ClassCheck> {
    (0..=max_m)
        .into_par_iter()
        .map(|m| class_check(family, m))
        .collect()
}

/// Components of the closed-form graded character violating `mω_i − μ ∈ Q⁺`.
pub fn support_sweep(family: Family, max_m: u64) -> Vec<(u64, Vec<(u64, crate::Weight)>)> {
    (0..=max_m)
        .into_par_iter()
        .map(|m| {
            (
                m,
                support_violations(family, m, &kr_graded_character(family, m)),
            )
        })
        .collect()
}

/// Results of the structure-constant and explicit-module checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChevalleyCheck {
    pub jacobi_failures: usize,
    pub invariance_failures: usize,
    pub adjoint_weights_ok: bool,
    pub relations: Vec<RelationFailure>,
}

impl ChevalleyCheck {
    pub fn passed(&self) -> bool {
        self.jacobi_failures == 0
            && self.invariance_failures == 0
            && self.adjoint_weights_ok
            && self.relations.is_empty()
    }
}

pub fn chevalley_check() -> ChevalleyCheck {
    let adjoint =
        crate::characters::irreducible_character(crate::Weight::OMEGA2).expect("ω₂ is dominant");
    ChevalleyCheck {
        jacobi_failures: chevalley::jacobi_failures().len(),
        invariance_failures: chevalley::killing_invariance_failures().len(),
        adjoint_weights_ok: chevalley::adjoint_weights().as_ref() == Some(&adjoint),
        relations: chevalley::verify_kr1_relations(),
    }
}
