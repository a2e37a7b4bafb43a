//! The work behind each subcommand, returning renderable values so that the
//! binary only parses arguments and prints.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use coxdesc_core::arith::Rational;
use coxdesc_core::coxeter::{CoxeterSpec, SubsetMask};
use coxdesc_core::descent::{AjkkMode, DescentAlgebra, DescentElement};
use coxdesc_core::oracle::{OraclePlan, PrimeCheck, VerificationVerdict};
use serde_json::{json, Value};

use crate::cache::GroupCache;
use crate::error::CliResult;
use crate::table::Table;
use crate::weights::weights_json;

pub fn build_algebra(spec: &CoxeterSpec, cache: &GroupCache) -> CliResult<DescentAlgebra> {
    Ok(DescentAlgebra::new(cache.load_or_build(spec)?))
}

fn label(j: SubsetMask) -> String {
    format!("{j}")
}

fn members(js: &[SubsetMask]) -> String {
    js.iter().map(|&j| label(j)).collect::<Vec<_>>().join(" ")
}

pub fn group_info(alg: &DescentAlgebra) -> Table {
    let atlas = alg.atlas();
    let rows = atlas
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let k = c.representative;
            vec![
                json!(i + 1),
                json!(label(k)),
                json!(members(&c.members)),
                json!(atlas.parabolic_order(k)),
                json!(atlas.normalizer_order(k)),
                json!(atlas.closure_type_counts()[i]),
                json!(atlas.coxeter_class_size(k)),
            ]
        })
        .collect();
    Table {
        title: format!(
            "{}: order {}, {} parabolic classes",
            alg.group().spec().label(),
            alg.group().order(),
            atlas.num_classes()
        ),
        columns: ["class", "representative", "members", "|W_K|", "|N_K|", "multiplicity", "|class of c_K|"]
            .map(String::from)
            .to_vec(),
        rows,
    }
}

/// a_{JKK} over class representatives: row J, column K.
pub fn ajkk_table(alg: &DescentAlgebra, mode: AjkkMode) -> Table {
    let reps = alg.atlas().representatives();
    let a = alg.a_matrix(mode);
    let mut columns = vec!["J\\K".to_string()];
    columns.extend(reps.iter().map(|&k| label(k)));
    let rows = reps
        .iter()
        .zip(&a)
        .map(|(&j, row)| std::iter::once(json!(label(j))).chain(row.iter().map(|&v| json!(v))).collect())
        .collect();
    let what = match mode {
        AjkkMode::Corrected => "a_JKK",
        AjkkMode::BbhtNaive => "a_JKK (naive formula)",
        AjkkMode::Counted => "a_JKK (counted)",
    };
    Table {
        title: format!("{} {}", alg.group().spec().label(), what),
        columns,
        rows,
    }
}

/// Every nonzero a_{JKL}, J and K in ascending mask order.
pub fn structure_table(alg: &DescentAlgebra) -> Table {
    let rank = alg.rank();
    let mut rows = Vec::new();
    for j in SubsetMask::all(rank) {
        for k in SubsetMask::all(rank) {
            for &(l, a) in alg.constants().row(j, k) {
                rows.push(vec![json!(label(j)), json!(label(k)), json!(label(l)), json!(a)]);
            }
        }
    }
    Table {
        title: format!("{} a_JKL", alg.group().spec().label()),
        columns: ["J", "K", "L", "a_JKL"].map(String::from).to_vec(),
        rows,
    }
}

/// "48 λ{s1} + 48 λ{s2} + λ{s1,s2,s3,s4}", terms ordered by |J| then mask.
pub fn symbolic(terms: &[(SubsetMask, u64)]) -> String {
    let mut terms = terms.to_vec();
    terms.sort_by_key(|(j, _)| (j.len(), j.bits()));
    let parts: Vec<String> = terms
        .iter()
        .map(|&(j, c)| if c == 1 { format!("λ{}", label(j)) } else { format!("{} λ{}", c, label(j)) })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn spectrum_table(alg: &DescentAlgebra, d: &DescentElement) -> CliResult<Table> {
    let report = alg.spectrum(d)?;
    let classes = alg.atlas().classes();
    let rows = report
        .eigenvalues
        .iter()
        .map(|e| {
            vec![
                json!(e.class + 1),
                json!(label(e.representative)),
                json!(e.multiplicity),
                json!(e.value.to_string()),
                json!(symbolic(&e.form.expand(classes))),
            ]
        })
        .collect();
    Ok(Table {
        title: format!("{}: spectrum of left multiplication on the group algebra", alg.group().spec().label()),
        columns: ["class", "representative", "multiplicity", "value", "delta"].map(String::from).to_vec(),
        rows,
    })
}

/// Runs the per-prime checks on up to `available_parallelism` threads. Results
/// come back in the order of `primes`.
pub fn check_primes_parallel(plan: &OraclePlan, primes: &[u64]) -> CliResult<Vec<PrimeCheck>> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(primes.len()).max(1);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<CliResult<PrimeCheck>>>> = Mutex::new((0..primes.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= primes.len() {
                    break;
                }
                let r = plan.check_prime(primes[i]).map_err(Into::into);
                results.lock().expect("no worker panics while holding the lock")[i] = Some(r);
            });
        }
    });
    results
        .into_inner()
        .expect("workers finished")
        .into_iter()
        .map(|r| r.expect("every index was claimed"))
        .collect()
}

pub fn run_verify(alg: &DescentAlgebra, d: &DescentElement, primes: &[u64], certify: bool) -> CliResult<VerificationVerdict> {
    let plan = OraclePlan::new(alg, d)?;
    let (used, skipped) = plan.select_primes(primes, certify)?;
    let checks = check_primes_parallel(&plan, &used)?;
    Ok(plan.verdict(checks, skipped))
}

pub fn verdict_json(alg: &DescentAlgebra, d: &DescentElement, v: &VerificationVerdict) -> Value {
    json!({
        "group": alg.group().spec().label(),
        "order": v.order,
        "weights": weights_json(d),
        "scale": v.scale.to_string(),
        "primes": v.primes(),
        "matched": v.checks.iter().map(|c| c.matched).collect::<Vec<_>>(),
        "skipped": v.skipped,
        "certified": v.certified,
        "bound_bits": v.bound_bits,
        "predicted_factors": v.predicted_factors.iter()
            .map(|(delta, m)| json!({"delta": delta.to_string(), "multiplicity": m}))
            .collect::<Vec<_>>(),
    })
}

pub struct Counterexample {
    pub naive: Table,
    pub corrected: Table,
    pub naive_solution: Vec<Rational>,
    pub corrected_solution: Vec<Rational>,
    pub order: usize,
}

/// The H3 counterexample: both a_{JKK} tables and the solutions of A m = (|W|, ...).
pub fn counterexample(cache: &GroupCache) -> CliResult<Counterexample> {
    let alg = build_algebra(&CoxeterSpec::named("H3")?, cache)?;
    Ok(Counterexample {
        naive: ajkk_table(&alg, AjkkMode::BbhtNaive),
        corrected: ajkk_table(&alg, AjkkMode::Corrected),
        naive_solution: alg.class_sizes_from_a(AjkkMode::BbhtNaive)?,
        corrected_solution: alg.class_sizes_from_a(AjkkMode::Corrected)?,
        order: alg.group().order(),
    })
}

impl Counterexample {
    fn vector(v: &[Rational]) -> String {
        format!("({})", v.iter().map(Rational::to_string).collect::<Vec<_>>().join(", "))
    }

    fn sum(v: &[Rational]) -> Rational {
        v.iter().cloned().sum()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.naive.to_text());
        out.push_str(&format!(
            "solution of A m = ({}, ...): {}  sum {}\n\n",
            self.order,
            Self::vector(&self.naive_solution),
            Self::sum(&self.naive_solution)
        ));
        out.push_str(&self.corrected.to_text());
        out.push_str(&format!(
            "solution of A m = ({}, ...): {}  sum {}\n",
            self.order,
            Self::vector(&self.corrected_solution),
            Self::sum(&self.corrected_solution)
        ));
        let negative = self.naive_solution.iter().any(|m| m.signum() == std::cmp::Ordering::Less);
        if negative {
            out.push_str("the naive solution has negative entries, so it cannot count elements\n");
        }
        out
    }

    /// Both tables in one CSV with a leading mode column; the row labelled m
    /// holds the solution of A m = (|W|, ...).
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["mode".to_string()];
        header.extend(self.corrected.columns.iter().cloned());
        w.write_record(&header).expect("in-memory write");
        for (mode, table, solution) in [
            ("naive", &self.naive, &self.naive_solution),
            ("corrected", &self.corrected, &self.corrected_solution),
        ] {
            for row in &table.rows {
                let cells = row.iter().map(|v| match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                });
                w.write_record(std::iter::once(mode.to_string()).chain(cells)).expect("in-memory write");
            }
            let m = solution.iter().map(Rational::to_string);
            w.write_record([mode.to_string(), "m".to_string()].into_iter().chain(m)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
    }

    pub fn to_json(&self) -> Value {
        let v = |x: &[Rational]| x.iter().map(|r| r.to_string()).collect::<Vec<_>>();
        json!({
            "naive": self.naive.to_json(),
            "naive_solution": v(&self.naive_solution),
            "naive_sum": Self::sum(&self.naive_solution).to_string(),
            "corrected": self.corrected.to_json(),
            "corrected_solution": v(&self.corrected_solution),
            "corrected_sum": Self::sum(&self.corrected_solution).to_string(),
        })
    }
}
