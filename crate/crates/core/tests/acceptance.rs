//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::time::{Duration, Instant};

use num_bigint::BigUint;

use g2kr::characters::{decompose, irreducible_character, mass_unsigned, tensor, weyl_dim};
use g2kr::kr::{kr_graded_character, Family, GradedDecomposition};
use g2kr::lattice::{RootLength, POSITIVE_ROOTS};
use g2kr::verify::{chevalley_check, class_sweep, conjecture_sweep, support_sweep};
use g2kr::{Character, IrrDecomposition, Weight};

const MAX_M: u64 = 30;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn w(a: i64, b: i64) -> Weight {
    Weight::new(a, b)
}

fn within(elapsed: Duration, budget: Duration) -> Outcome {
    check(
        elapsed <= budget,
        format!("{elapsed:?} (budget {budget:?})"),
    )
}

fn basic_characters() -> Outcome {
    let start = Instant::now();
    let v1 = irreducible_character(Weight::OMEGA1).unwrap();
    let v2 = irreducible_character(Weight::OMEGA2).unwrap();
    let elapsed = start.elapsed();

    let mut expected1 = Character::monomial(Weight::ZERO);
    for r in POSITIVE_ROOTS
        .iter()
        .filter(|r| r.length == RootLength::Short)
    {
        expected1.add_term(r.weight, 1);
        expected1.add_term(-r.weight, 1);
    }
    let ok = v1 == expected1
        && mass_unsigned(&v1) == BigUint::from(7u32)
        && mass_unsigned(&v2) == BigUint::from(14u32)
        && v2.multiplicity(Weight::ZERO) == 2;
    let time = within(elapsed, Duration::from_millis(1));
    check(
        ok && time.ok,
        format!("dims 7/14, zero weight mult 2; {}", time.detail),
    )
}

fn dimension_oracle() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    let mut bad = Vec::new();
    for a in 0..=6 {
        for b in 0..=6 - a {
            count += 1;
            let c = irreducible_character(w(a, b)).unwrap();
            if mass_unsigned(&c) != weyl_dim(w(a, b)).unwrap() {
                bad.push(w(a, b));
            }
        }
    }
    let time = within(start.elapsed(), Duration::from_secs(1));
    check(
        bad.is_empty() && count == 28 && time.ok,
        format!("{count} weights, mismatches {bad:?}; {}", time.detail),
    )
}

fn tensor_fixtures() -> Outcome {
    let t11 = tensor(Weight::OMEGA1, Weight::OMEGA1).unwrap();
    let want11 =
        IrrDecomposition::from_parts([(w(2, 0), 1), (w(0, 1), 1), (w(1, 0), 1), (w(0, 0), 1)]);

    let mut k = irreducible_character(Weight::OMEGA2).unwrap();
    k.add_term(Weight::ZERO, 1);
    let kk = decompose(&k.multiply(&k)).unwrap();
    let want_kk = IrrDecomposition::from_parts([
        (w(0, 2), 1),
        (w(3, 0), 1),
        (w(2, 0), 1),
        (w(0, 1), 3),
        (w(0, 0), 2),
    ]);
    check(
        t11 == want11 && kk == want_kk && kk.dimension() == BigUint::from(225u32),
        format!(
            "V(ω₁)⊗V(ω₁) = {t11}; (V(ω₂)⊕ℂ)^⊗2 = {kk}, dim {}",
            kk.dimension()
        ),
    )
}

fn small_kr_fixtures() -> Outcome {
    let gd = |items: Vec<(u64, Weight, u64)>| GradedDecomposition::from_components(items);
    let cases = [
        (Family::U1, 1, gd(vec![(0, w(1, 0), 1)])),
        (Family::U1, 2, gd(vec![(0, w(2, 0), 1), (1, w(1, 0), 1)])),
        (
            Family::U1,
            3,
            gd(vec![
                (0, w(3, 0), 1),
                (1, w(2, 0), 1),
                (1, w(0, 1), 1),
                (2, w(0, 1), 1),
                (3, w(0, 0), 1),
            ]),
        ),
        (Family::U2, 1, gd(vec![(0, w(0, 1), 1), (1, w(0, 0), 1)])),
    ];
    let bad: Vec<_> = cases
        .iter()
        .filter(|(f, m, want)| kr_graded_character(*f, *m) != *want)
        .map(|(f, m, _)| format!("{f} m={m}"))
        .collect();
    check(bad.is_empty(), format!("4 fixtures, failing {bad:?}"))
}

fn conjecture_equivalence() -> Outcome {
    let start = Instant::now();
    let mut failing = Vec::new();
    let mut negatives = Vec::new();
    for family in Family::ALL {
        for c in conjecture_sweep(family, MAX_M) {
            if !c.passed() {
                failing.push(format!("{family} m={}", c.m));
            }
            negatives.extend(c.negative_coefficients);
        }
    }
    let time = within(start.elapsed(), Duration::from_secs(10));
    for n in &negatives {
        println!(
            "    clamped negative coefficient: {} m={} j={} k={} value={}",
            n.family, n.m, n.j, n.k, n.value
        );
    }
    check(
        failing.is_empty() && time.ok,
        format!(
            "4 families × m ≤ {MAX_M}, failing {failing:?}, {} negative pre-clamp coefficients; {}",
            negatives.len(),
            time.detail
        ),
    )
}

fn partition_sweep() -> Outcome {
    let mut failing = Vec::new();
    for family in [Family::U1, Family::T2] {
        for c in class_sweep(family, MAX_M) {
            if !c.partition.is_empty() {
                failing.push(format!("{family} m={}: {}", c.m, c.partition[0]));
            }
        }
    }
    check(
        failing.is_empty(),
        format!("u1/t2 m ≤ {MAX_M}, failing {failing:?}"),
    )
}

fn two_route_equality() -> Outcome {
    let mut failing = Vec::new();
    for family in [Family::U1, Family::T2] {
        for c in class_sweep(family, MAX_M) {
            if !c.rebuild.is_empty() {
                failing.push(format!("{family} m={}", c.m));
            }
        }
    }
    check(
        failing.is_empty(),
        format!("u1/t2 m ≤ {MAX_M}, failing {failing:?}"),
    )
}

fn support_invariant() -> Outcome {
    let mut failing = Vec::new();
    for family in Family::ALL {
        for (m, v) in support_sweep(family, MAX_M) {
            if !v.is_empty() {
                failing.push(format!("{family} m={m}"));
            }
        }
    }
    check(
        failing.is_empty(),
        format!("4 families × m ≤ {MAX_M}, failing {failing:?}"),
    )
}

fn chevalley_suite() -> Outcome {
    let start = Instant::now();
    let c = chevalley_check();
    let time = within(start.elapsed(), Duration::from_secs(5));
    check(
        c.passed() && time.ok,
        format!(
            "jacobi failures {}, invariance failures {}, adjoint weights {}, relation failures {}; {}",
            c.jacobi_failures,
            c.invariance_failures,
            c.adjoint_weights_ok,
            c.relations.len(),
            time.detail
        ),
    )
}

fn ladder_property() -> Outcome {
    let mut failing = Vec::new();
    for family in [Family::U2, Family::T1] {
        for m in 0..=MAX_M {
            let g = kr_graded_character(family, m);
            let omega = family.fundamental_weight();
            let ok = g.grades().count() as u64 == m + 1
                && (0..=m).all(|n| {
                    g.grade(n) == Some(&IrrDecomposition::from_parts([(omega * (m - n) as i64, 1)]))
                });
            if !ok {
                failing.push(format!("{family} m={m}"));
            }
        }
    }
    check(
        failing.is_empty(),
        format!("u2/t1 m ≤ {MAX_M}, failing {failing:?}"),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 basic characters", basic_characters),
        ("2 dimension oracle agreement", dimension_oracle),
        ("3 tensor fixtures", tensor_fixtures),
        ("4 small KR fixtures", small_kr_fixtures),
        ("5 conjecture equivalence sweep", conjecture_equivalence),
        ("6 partition sweep", partition_sweep),
        ("7 two-route equality", two_route_equality),
        ("8 support invariant", support_invariant),
        ("9 chevalley suite", chevalley_suite),
        ("10 ladder property", ladder_property),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = run();
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {name}: {}", outcome.detail);
        if !outcome.ok {
            failed += 1;
        }
    }
    println!("acceptance: {}/10 passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
