//! Table, JSON and CSV rendering of command results.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::Number;

use g2kr::characters::{irreducible_character, mass_unsigned, tensor as tensor_product, weyl_dim};
use g2kr::kr::{
    conjecture_with_report, expand_weights, kr_graded_character, Family, GradedDecomposition,
};
use g2kr::verify::{chevalley_check, class_sweep, conjecture_sweep};
use g2kr::Weight;

use crate::{Basis, Format, Output, Target};

fn big(n: &BigUint) -> Number {
    Number::from_str(&n.to_string()).expect("decimal integer")
}

fn pair(w: Weight) -> [i64; 2] {
    [w.a, w.b]
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn ok(text: String) -> Output {
    Output {
        text,
        success: true,
    }
}

#[derive(Serialize)]
struct WeightMult {
    weight: [i64; 2],
    mult: i64,
}

#[derive(Serialize)]
struct CharJson {
    weight: [i64; 2],
    dim: Number,
    terms: Vec<WeightMult>,
}

pub fn character(lambda: Weight, fmt: Format) -> Result<Output, String> {
    let c = irreducible_character(lambda).map_err(|e| e.to_string())?;
    let dim = mass_unsigned(&c);
    let text = match fmt {
        Format::Json => json_line(&CharJson {
            weight: pair(lambda),
            dim: big(&dim),
            terms: c
                .iter()
                .map(|(w, k)| WeightMult {
                    weight: pair(w),
                    mult: k,
                })
                .collect(),
        }),
        Format::Csv => {
            let mut s = String::from("weight_a,weight_b,mult\n");
            for (w, k) in c.iter() {
                writeln!(s, "{},{},{k}", w.a, w.b).unwrap();
            }
            s
        }
        Format::Table => {
            let mut terms: Vec<_> = c.iter().collect();
            terms.sort_by_key(|&(w, _)| std::cmp::Reverse((w.height(), w.a)));
            let mut s = format!("V{lambda}: {} weights, dimension {dim}\n", terms.len());
            writeln!(s, "{:>12}  {:>6}", "weight", "mult").unwrap();
            for (w, k) in terms {
                writeln!(s, "{:>12}  {k:>6}", w.to_string()).unwrap();
            }
            s
        }
    };
    Ok(ok(text))
}

#[derive(Serialize)]
struct TensorComponent {
    weight: [i64; 2],
    mult: u64,
    dim: Number,
}

#[derive(Serialize)]
struct TensorJson {
    lambda: [i64; 2],
    mu: [i64; 2],
    dim: Number,
    components: Vec<TensorComponent>,
}

pub fn tensor(lambda: Weight, mu: Weight, fmt: Format) -> Result<Output, String> {
    let d = tensor_product(lambda, mu).map_err(|e| e.to_string())?;
    let rows: Vec<(Weight, u64, BigUint)> = d
        .iter()
        .map(|(w, k)| (w, k, weyl_dim(w).expect("dominant")))
        .collect();
    let total = d.dimension();
    let text = match fmt {
        Format::Json => json_line(&TensorJson {
            lambda: pair(lambda),
            mu: pair(mu),
            dim: big(&total),
            components: rows
                .iter()
                .map(|(w, k, dim)| TensorComponent {
                    weight: pair(*w),
                    mult: *k,
                    dim: big(dim),
                })
                .collect(),
        }),
        Format::Csv => {
            let mut s = String::from("weight_a,weight_b,mult,dim\n");
            for (w, k, dim) in &rows {
                writeln!(s, "{},{},{k},{dim}", w.a, w.b).unwrap();
            }
            s
        }
        Format::Table => {
            let mut s = format!("V{lambda} ⊗ V{mu} = {d}\n");
            writeln!(s, "{:>12}  {:>6}  {:>12}", "weight", "mult", "dim").unwrap();
            for (w, k, dim) in &rows {
                writeln!(s, "{:>12}  {k:>6}  {dim:>12}", w.to_string()).unwrap();
            }
            let (dl, dm) = (weyl_dim(lambda).unwrap(), weyl_dim(mu).unwrap());
            writeln!(s, "dimension: {dl} × {dm} = {total}").unwrap();
            s
        }
    };
    Ok(ok(text))
}

#[derive(Serialize)]
struct KrComponent {
    grade: u64,
    weight: [i64; 2],
    mult: u64,
}

#[derive(Serialize)]
struct KrJson {
    family: &'static str,
    m: u64,
    source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    basis: Option<&'static str>,
    components: Vec<KrComponent>,
}

/// `(grade, weight, mult, dim)` rows in the requested basis.
fn kr_rows(g: &GradedDecomposition, basis: Basis) -> Vec<(u64, Weight, u64, BigUint)> {
    match basis {
        Basis::Irrep => g
            .components()
            .map(|(n, w, k)| (n, w, k, weyl_dim(w).expect("dominant") * k))
            .collect(),
        Basis::Weight => expand_weights(g)
            .into_iter()
            .flat_map(|(n, c)| {
                c.iter()
                    .map(|(w, k)| {
                        let k = u64::try_from(k).expect("positive weight multiplicity");
                        (n, w, k, BigUint::from(k))
                    })
                    .collect::<Vec<_>>()
            })
            .collect(),
    }
}

pub fn kr(family: Family, m: u64, basis: Basis, conjecture: bool, fmt: Format) -> Output {
    let g = if conjecture {
        conjecture_with_report(family, m).0
    } else {
        kr_graded_character(family, m)
    };
    let source = if conjecture { "conjecture" } else { "theorem" };
    let rows = kr_rows(&g, basis);
    let text = match fmt {
        Format::Json => json_line(&KrJson {
            family: family.name(),
            m,
            source,
            basis: (basis == Basis::Weight).then_some("weight"),
            components: rows
                .iter()
                .map(|(n, w, k, _)| KrComponent {
                    grade: *n,
                    weight: pair(*w),
                    mult: *k,
                })
                .collect(),
        }),
        Format::Csv => {
            let mut s = String::from("grade,weight_a,weight_b,mult,dim\n");
            for (n, w, k, dim) in &rows {
                writeln!(s, "{n},{},{},{k},{dim}", w.a, w.b).unwrap();
            }
            s
        }
        Format::Table => {
            let mut s = format!("{family} m={m} ({source})\n");
            match basis {
                Basis::Irrep => {
                    for (n, d) in g.grades() {
                        writeln!(s, "  t^{n:<3} dim {:>10}  {d}", d.dimension()).unwrap();
                    }
                }
                Basis::Weight => {
                    writeln!(s, "{:>6}  {:>12}  {:>6}", "grade", "weight", "mult").unwrap();
                    for (n, w, k, _) in &rows {
                        writeln!(s, "{n:>6}  {:>12}  {k:>6}", w.to_string()).unwrap();
                    }
                }
            }
            let total: BigUint = g.grades().map(|(_, d)| d.dimension()).sum();
            writeln!(s, "total dimension {total}").unwrap();
            s
        }
    };
    ok(text)
}

#[derive(Serialize)]
struct CheckRow {
    check: &'static str,
    family: Option<&'static str>,
    m: Option<u64>,
    status: &'static str,
    issues: Vec<String>,
}

#[derive(Serialize)]
struct NegativeRow {
    family: &'static str,
    m: u64,
    j: u64,
    k: u64,
    value: i64,
}

#[derive(Serialize)]
struct VerifyJson {
    target: &'static str,
    max_m: u64,
    passed: bool,
    checks: Vec<CheckRow>,
    negative_coefficients: Vec<NegativeRow>,
}

fn status(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

pub fn verify(target: Target, family: Option<Family>, max_m: u64, fmt: Format) -> Output {
    let families = |default: &[Family]| -> Vec<Family> {
        family.map_or_else(|| default.to_vec(), |f| vec![f])
    };
    let mut checks = Vec::new();
    let mut negatives = Vec::new();

    if matches!(target, Target::Conjecture | Target::All) {
        for f in families(&Family::ALL) {
            for c in conjecture_sweep(f, max_m) {
                negatives.extend(c.negative_coefficients.iter().map(|n| NegativeRow {
                    family: n.family.name(),
                    m: n.m,
                    j: n.j,
                    k: n.k,
                    value: n.value,
                }));
                checks.push(CheckRow {
                    check: "conjecture",
                    family: Some(f.name()),
                    m: Some(c.m),
                    status: status(c.passed()),
                    issues: c.mismatches.iter().map(ToString::to_string).collect(),
                });
            }
        }
    }
    if matches!(target, Target::Classes | Target::All) {
        let defaults = [Family::U1, Family::T2];
        for f in families(&defaults)
            .into_iter()
            .filter(|f| f.is_quad_indexed())
        {
            for c in class_sweep(f, max_m) {
                let issues = c
                    .partition
                    .iter()
                    .map(ToString::to_string)
                    .chain(c.rebuild.iter().map(|x| format!("two-route: {x}")))
                    .collect();
                checks.push(CheckRow {
                    check: "classes",
                    family: Some(f.name()),
                    m: Some(c.m),
                    status: status(c.passed()),
                    issues,
                });
            }
        }
    }
    if matches!(target, Target::Chevalley | Target::All) {
        let c = chevalley_check();
        let mut issues: Vec<String> = c.relations.iter().map(ToString::to_string).collect();
        if c.jacobi_failures > 0 {
            issues.push(format!("jacobi fails on {} triples", c.jacobi_failures));
        }
        if c.invariance_failures > 0 {
            issues.push(format!(
                "killing invariance fails on {} triples",
                c.invariance_failures
            ));
        }
        if !c.adjoint_weights_ok {
            issues.push("adjoint weights differ from ch V(ω₂)".to_string());
        }
        checks.push(CheckRow {
            check: "chevalley",
            family: None,
            m: None,
            status: status(c.passed()),
            issues,
        });
    }

    let passed = checks.iter().all(|c| c.status == "pass");
    let target_name = match target {
        Target::Conjecture => "conjecture",
        Target::Classes => "classes",
        Target::Chevalley => "chevalley",
        Target::All => "all",
    };
    let text = match fmt {
        Format::Json => json_line(&VerifyJson {
            target: target_name,
            max_m,
            passed,
            checks,
            negative_coefficients: negatives,
        }),
        Format::Csv => {
            let mut s = String::from("check,family,m,status,issues\n");
            for c in &checks {
                writeln!(
                    s,
                    "{},{},{},{},\"{}\"",
                    c.check,
                    c.family.unwrap_or(""),
                    c.m.map(|m| m.to_string()).unwrap_or_default(),
                    c.status,
                    c.issues.join("; ").replace('"', "\"\"")
                )
                .unwrap();
            }
            s
        }
        Format::Table => {
            let mut s = String::new();
            for c in &checks {
                let label = match (c.family, c.m) {
                    (Some(f), Some(m)) => format!("{} {f} m={m}", c.check),
                    _ => c.check.to_string(),
                };
                writeln!(s, "{:<28} {}", label, c.status.to_uppercase()).unwrap();
                for issue in &c.issues {
                    writeln!(s, "    {issue}").unwrap();
                }
            }
            for n in &negatives {
                writeln!(
                    s,
                    "clamped negative coefficient: {} m={} j={} k={} value={}",
                    n.family, n.m, n.j, n.k, n.value
                )
                .unwrap();
            }
            let failed = checks.iter().filter(|c| c.status != "pass").count();
            writeln!(
                s,
                "{}: {} checks, {failed} failed",
                if passed { "PASS" } else { "FAIL" },
                checks.len()
            )
            .unwrap();
            s
        }
    };
    Output {
        text,
        success: passed,
    }
}
