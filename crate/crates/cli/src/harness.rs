//! The acceptance criteria, runnable one at a time or as a batch.

use std::sync::mpsc;
use std::time::{Duration, Instant};

use gvdkit::corpus::{
    random_connected_bipartite, random_homogeneous_ideal, random_pure_complex, rng,
};
use gvdkit::gvd::{
    invariants_asserted, invariants_via_recursion, is_c_saturated, is_gvd, nonpositivity_audit,
    one_step_split, verify_h_identity, verify_series_identity, Degeneracy, UnmixedPolicy,
};
use gvdkit::hilbert::{hilbert_function_oracle, invariants_direct, HilbertData};
use gvdkit::simplicial::{
    is_vertex_decomposable_pure, reg_via_vd_recursion, stanley_reisner_ideal, SimplicialComplex,
};
use gvdkit::toric::{
    bipartite_a, edge_split, ferrers_graph, ferrers_invariants, glue_cycle, grd_graph, toric_ideal,
    Graph, Partition,
};
use gvdkit::{catalog, CmStatus, Hilbertian, Ideal, InvariantReport, MonomialOrder};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug)]
pub struct HarnessConfig {
    pub seed: u64,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        Self { seed: 1 }
    }
}

/// Outcome of one criterion before timing is applied.
struct Check {
    expected: String,
    actual: String,
    passed: bool,
}

impl Check {
    fn new(expected: impl Into<String>, actual: impl Into<String>, passed: bool) -> Self {
        Self {
            expected: expected.into(),
            actual: actual.into(),
            passed,
        }
    }
}

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub budget: Option<Duration>,
    run: fn(&HarnessConfig) -> Check,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget_ms: Option<u64>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let budget = self
            .budget_ms
            .map(|b| format!(", budget {:.0} s", b as f64 / 1000.0))
            .unwrap_or_default();
        format!(
            "[{}] {:>2} {:<14} expected: {} | actual: {} ({:.2} s{budget})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.expected,
            self.actual,
            self.elapsed_ms as f64 / 1000.0,
        )
    }
}

const SECOND: Duration = Duration::from_secs(1);

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "groebner",
            budget: Some(SECOND),
            run: groebner_golden,
        },
        Criterion {
            id: 2,
            name: "hilbert-oracle",
            budget: Some(30 * SECOND),
            run: hilbert_oracle,
        },
        Criterion {
            id: 3,
            name: "series-identity",
            budget: None,
            run: series_identity,
        },
        Criterion {
            id: 4,
            name: "h-identity",
            budget: None,
            run: h_identity,
        },
        Criterion {
            id: 5,
            name: "examples",
            budget: None,
            run: reference_examples,
        },
        Criterion {
            id: 6,
            name: "recursion",
            budget: None,
            run: recursion_equals_direct,
        },
        Criterion {
            id: 7,
            name: "ferrers",
            budget: Some(180 * SECOND),
            run: ferrers,
        },
        Criterion {
            id: 8,
            name: "grd",
            budget: Some(120 * SECOND),
            run: grd,
        },
        Criterion {
            id: 9,
            name: "gluing",
            budget: None,
            run: gluing,
        },
        Criterion {
            id: 10,
            name: "monotonicity",
            budget: None,
            run: monotonicity,
        },
        Criterion {
            id: 11,
            name: "nonpositivity",
            budget: None,
            run: nonpositivity,
        },
        Criterion {
            id: 12,
            name: "simplicial",
            budget: None,
            run: simplicial,
        },
    ]
}

/// Resolves `--only` selectors (numbers or names); empty selects everything.
pub fn select(only: &[String]) -> Result<Vec<Criterion>, String> {
    let all = criteria();
    if only.is_empty() {
        return Ok(all);
    }
    let mut keep = vec![false; all.len()];
    for key in only {
        let key = key.trim();
        let pos = all
            .iter()
            .position(|c| c.name == key || c.id.to_string() == key)
            .ok_or_else(|| format!("unknown criterion `{key}`"))?;
        keep[pos] = true;
    }
    Ok(all
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(c, _)| c)
        .collect())
}

pub fn run_criterion(c: &Criterion, cfg: &HarnessConfig) -> CriterionResult {
    let start = Instant::now();
    let check = (c.run)(cfg);
    let elapsed = start.elapsed();
    let in_budget = c.budget.is_none_or(|b| elapsed <= b);
    CriterionResult {
        id: c.id,
        name: c.name.to_string(),
        expected: check.expected,
        actual: if in_budget {
            check.actual
        } else {
            format!("{} (over budget)", check.actual)
        },
        passed: check.passed && in_budget,
        elapsed_ms: elapsed.as_millis() as u64,
        budget_ms: c.budget.map(|b| b.as_millis() as u64),
    }
}

/// Runs the criteria on the current rayon pool. Criteria still running when
/// `deadline` passes are reported as failed. Results come back in id order.
pub fn run_all(
    selected: Vec<Criterion>,
    cfg: HarnessConfig,
    deadline: Option<Duration>,
) -> Vec<CriterionResult> {
    let names: Vec<(u8, &'static str, Option<Duration>)> =
        selected.iter().map(|c| (c.id, c.name, c.budget)).collect();
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        selected.par_iter().for_each_with(tx, |tx, c| {
            let _ = tx.send(run_criterion(c, &cfg));
        });
    });
    let start = Instant::now();
    let mut results = Vec::new();
    while results.len() < names.len() {
        let received = match deadline {
            Some(limit) => match limit.checked_sub(start.elapsed()) {
                Some(left) => rx.recv_timeout(left).ok(),
                None => None,
            },
            None => rx.recv().ok(),
        };
        match received {
            Some(r) => results.push(r),
            None => break,
        }
    }
    for (id, name, budget) in names {
        if !results.iter().any(|r| r.id == id) {
            results.push(CriterionResult {
                id,
                name: name.to_string(),
                expected: "completion".into(),
                actual: "timed out".into(),
                passed: false,
                elapsed_ms: start.elapsed().as_millis() as u64,
                budget_ms: budget.map(|b| b.as_millis() as u64),
            });
        }
    }
    results.sort_by_key(|r| r.id);
    results
}

fn toric_corpus(seed: u64, count: usize) -> Vec<(String, Graph, Ideal)> {
    let mut r = rng(seed);
    (0..count)
        .map(|k| {
            let g = random_connected_bipartite(&mut r, 8);
            let ideal = toric_ideal(&g, None).expect("bipartite").ideal;
            (format!("graph #{k}"), g, ideal)
        })
        .collect()
}

/// Catalog entries, 30 toric ideals, 20 Stanley–Reisner ideals and 20 random
/// homogeneous ideals.
fn mixed_corpus(seed: u64) -> Vec<(String, Ideal)> {
    let mut out: Vec<(String, Ideal)> = catalog::all()
        .into_iter()
        .map(|(n, i)| (n.to_string(), i))
        .collect();
    out.extend(toric_corpus(seed, 30).into_iter().map(|(n, _, i)| (n, i)));
    let mut r = rng(seed.wrapping_add(1));
    for k in 0..20 {
        let c = random_pure_complex(&mut r, 7);
        out.push((
            format!("complex #{k}"),
            stanley_reisner_ideal(&c).expect("small complex"),
        ));
    }
    for k in 0..20 {
        out.push((
            format!("random #{k}"),
            random_homogeneous_ideal(&mut r, 4, 3),
        ));
    }
    out
}

fn triple_text(r: &InvariantReport) -> String {
    match r.reg {
        Some(reg) => format!("reg {reg}, e {}, a {}", r.e, r.a),
        None => format!("reg ?, e {}, a {}", r.e, r.a),
    }
}

fn failures_text(total: usize, unit: &str, failures: &[String]) -> String {
    match failures.first() {
        None => format!("{total} {unit}, 0 failures"),
        Some(first) => format!(
            "{total} {unit}, {} failures (first: {first})",
            failures.len()
        ),
    }
}

fn groebner_golden(_: &HarnessConfig) -> Check {
    let ideal = catalog::binomial_pair();
    let lex = MonomialOrder::lex(4);
    let mut got: Vec<String> = ideal
        .groebner(&lex)
        .elements()
        .iter()
        .map(|p| p.to_string())
        .collect();
    let reference = Ideal::parse(ideal.ring(), &["y*z - x*w", "x*y", "y^2*z"]).expect("parses");
    let mut want: Vec<String> = reference
        .generators()
        .iter()
        .map(|p| p.monic(&lex).to_string())
        .collect();
    got.sort();
    want.sort();
    Check::new(
        format!("{{{}}}", want.join(", ")),
        format!("{{{}}}", got.join(", ")),
        got == want,
    )
}

fn hilbert_oracle(cfg: &HarnessConfig) -> Check {
    let mut r = rng(cfg.seed.wrapping_add(2));
    let ideals: Vec<Ideal> = (0..60)
        .map(|_| random_homogeneous_ideal(&mut r, 5, 4))
        .collect();
    let failures: Vec<String> = ideals
        .par_iter()
        .flat_map_iter(|ideal| {
            let data = HilbertData::of(ideal).expect("homogeneous");
            (0..=12i64).filter_map(move |k| {
                let counted = hilbert_function_oracle(ideal, k).expect("homogeneous");
                (data.series_coefficient(k as u64) != counted.into())
                    .then(|| format!("{ideal} in degree {k}"))
            })
        })
        .collect();
    Check::new(
        "series coefficients = standard monomial counts, degrees 0..12",
        failures_text(ideals.len(), "ideals", &failures),
        failures.is_empty(),
    )
}

fn series_identity(cfg: &HarnessConfig) -> Check {
    let mut corpus: Vec<(String, Ideal)> = catalog::all()
        .into_iter()
        .map(|(n, i)| (n.to_string(), i))
        .collect();
    corpus.extend(
        toric_corpus(cfg.seed.wrapping_add(3), 30)
            .into_iter()
            .map(|(n, _, i)| (n, i)),
    );
    let per_ideal: Vec<(usize, Vec<String>)> = corpus
        .par_iter()
        .map(|(name, ideal)| {
            let n = ideal.ring().len();
            let mut count = 0;
            let mut bad = Vec::new();
            for y in 0..n {
                let split =
                    one_step_split(ideal, y, &MonomialOrder::y_block(y, n)).expect("valid order");
                if split.valid {
                    count += 1;
                    if !verify_series_identity(ideal, &split).unwrap_or(false) {
                        bad.push(format!("{name} at {}", split.y_name()));
                    }
                }
            }
            is_gvd(ideal, UnmixedPolicy::Structural).for_each_split(&mut |node, split| {
                count += 1;
                if !verify_series_identity(node, split).unwrap_or(false) {
                    bad.push(format!("{name}: {node} at {}", split.y_name()));
                }
            });
            (count, bad)
        })
        .collect();
    let total: usize = per_ideal.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = per_ideal.into_iter().flat_map(|(_, b)| b).collect();
    Check::new(
        "H(R/I) = H(R/(N+<y>)) + t H(R/C) on every valid split",
        failures_text(total, "valid splits", &failures),
        failures.is_empty() && total > 0,
    )
}

fn h_identity(cfg: &HarnessConfig) -> Check {
    let corpus = mixed_corpus(cfg.seed.wrapping_add(4));
    let per_ideal: Vec<(usize, Vec<String>)> = corpus
        .par_iter()
        .map(|(name, ideal)| {
            let tree = is_gvd(ideal, UnmixedPolicy::Structural);
            let mut count = 0;
            let mut bad = Vec::new();
            if tree.is_certified() {
                tree.for_each_split(&mut |node, split| {
                    if split.degeneracy == Degeneracy::Nondegenerate {
                        count += 1;
                        if !verify_h_identity(node, split).unwrap_or(false) {
                            bad.push(format!("{name}: {node} at {}", split.y_name()));
                        }
                    }
                });
            }
            (count, bad)
        })
        .collect();
    let total: usize = per_ideal.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = per_ideal.into_iter().flat_map(|(_, b)| b).collect();
    Check::new(
        "h(R/I) = h(R/N) + t h(R/C) on nondegenerate certified splits",
        failures_text(total, "splits", &failures),
        failures.is_empty() && total > 0,
    )
}

fn reference_examples(_: &HarnessConfig) -> Check {
    let mut parts = Vec::new();
    let mut ok = true;

    let six = catalog::six_variable_gvd();
    let tree = is_gvd(&six, UnmixedPolicy::Structural);
    let direct = invariants_direct(&six, CmStatus::Certified).ok();
    let rec = invariants_via_recursion(&tree).ok();
    let six_ok = tree.is_certified()
        && direct.as_ref().map(|d| (d.reg, d.e)) == Some((Some(3), 8))
        && rec.as_ref().map(|r| (r.reg, r.e)) == Some((Some(3), 8));
    ok &= six_ok;
    parts.push(format!(
        "six-variable: certified {}, {}",
        tree.is_certified(),
        direct
            .as_ref()
            .map(triple_text)
            .unwrap_or_else(|| "error".into())
    ));

    let weak = catalog::six_variable_weakly_gvd();
    let weak_tree = is_gvd(&weak, UnmixedPolicy::Structural);
    let asserted = invariants_asserted(&weak).ok();
    let reg_ideal = asserted
        .as_ref()
        .and_then(|a| a.combined.reg)
        .map(|r| r + 1);
    ok &= !weak_tree.is_certified() && reg_ideal == Some(4);
    parts.push(format!(
        "weakly: certified {}, reg(I) {}",
        weak_tree.is_certified(),
        reg_ideal.map_or("?".into(), |r| r.to_string())
    ));

    let pair = catalog::binomial_pair();
    let pair_tree = is_gvd(&pair, UnmixedPolicy::Structural);
    let asserted = invariants_asserted(&pair).ok();
    let combined = asserted.as_ref().map(|a| (a.combined.reg, a.combined.e));
    ok &= !pair_tree.is_certified() && combined == Some((Some(2), 4));
    parts.push(format!(
        "binomial pair: certified {}, asserted {}",
        pair_tree.is_certified(),
        asserted
            .as_ref()
            .map(|a| triple_text(&a.combined))
            .unwrap_or_else(|| "error".into())
    ));

    Check::new(
        "six-variable: certified true, reg 3, e 8; weakly: certified false, reg(I) 4; binomial pair: certified false, reg 2, e 4",
        parts.join("; "),
        ok,
    )
}

fn recursion_equals_direct(cfg: &HarnessConfig) -> Check {
    let corpus = mixed_corpus(cfg.seed.wrapping_add(6));
    let outcomes: Vec<Option<Option<String>>> = corpus
        .par_iter()
        .map(|(name, ideal)| {
            let tree = is_gvd(ideal, UnmixedPolicy::Structural);
            if !tree.is_certified() {
                return None;
            }
            let rec = invariants_via_recursion(&tree).ok();
            let direct = invariants_direct(ideal, CmStatus::Certified).ok();
            let same = matches!((&rec, &direct), (Some(r), Some(d)) if r.triple() == d.triple());
            Some((!same).then(|| name.clone()))
        })
        .collect();
    let certified = outcomes.iter().filter(|o| o.is_some()).count();
    let failures: Vec<String> = outcomes.into_iter().flatten().flatten().collect();
    Check::new(
        "(reg, e, a) by recursion = direct on every certified ideal",
        failures_text(certified, "certified ideals", &failures),
        failures.is_empty() && certified > 0,
    )
}

fn ferrers(_: &HarnessConfig) -> Check {
    let partitions: Vec<Partition> = (1..=9).flat_map(Partition::all_of_size).collect();
    let failures: Vec<String> = partitions
        .par_iter()
        .filter_map(|lambda| {
            let closed = ferrers_invariants(lambda);
            let ideal = toric_ideal(&ferrers_graph(lambda), None).ok()?.ideal;
            match invariants_direct(&ideal, CmStatus::Certified) {
                Ok(d) if d.triple() == closed.triple() && d.dim == closed.dim => None,
                Ok(d) => Some(format!(
                    "{lambda}: closed {} vs direct {}",
                    triple_text(&closed),
                    triple_text(&d)
                )),
                Err(e) => Some(format!("{lambda}: {e}")),
            }
        })
        .collect();
    let anchor = Partition::new(vec![3, 3, 3, 2]).expect("valid");
    let anchor_reg = toric_ideal(&ferrers_graph(&anchor), None)
        .ok()
        .and_then(|t| invariants_direct(&t.ideal, CmStatus::Certified).ok())
        .and_then(|r| r.reg);
    let complete_ok = (1..=4usize).all(|n| {
        (1..=4usize).all(|m| {
            let lambda = Partition::new(vec![m; n]).expect("valid");
            let ideal = toric_ideal(&ferrers_graph(&lambda), None)
                .expect("bipartite")
                .ideal;
            let direct = invariants_direct(&ideal, CmStatus::Certified)
                .ok()
                .and_then(|r| r.reg);
            direct == Some(n.min(m) as i64 - 1) && ferrers_invariants(&lambda).reg == direct
        })
    });
    Check::new(
        "closed form = direct for all partitions of <= 9 cells; (3,3,3,2) reg 2; K_{n,m} reg min(n,m)-1",
        format!(
            "{}; (3,3,3,2) reg {}; K_{{n,m}} {}",
            failures_text(partitions.len(), "partitions", &failures),
            anchor_reg.map_or("?".into(), |r| r.to_string()),
            if complete_ok { "ok" } else { "mismatch" }
        ),
        failures.is_empty() && anchor_reg == Some(2) && complete_ok,
    )
}

fn grd(_: &HarnessConfig) -> Check {
    let cases: Vec<(usize, usize)> = (3..=4).flat_map(|r| (1..=3).map(move |d| (r, d))).collect();
    let rows: Vec<(String, bool)> = cases
        .par_iter()
        .map(|&(r, d)| {
            let g = grd_graph(r, d).expect("valid parameters");
            let ideal = toric_ideal(&g, None).expect("bipartite").ideal;
            let Ok(rep) = invariants_direct(&ideal, CmStatus::Certified) else {
                return (format!("G({r},{d}): error"), false);
            };
            let (ri, di) = (r as i64, d as i64);
            let ok = rep.reg.map(|x| x + 1) == Some(ri)
                && rep.e == di * ri - (di - 1)
                && rep.a == 1 - di - ri
                && bipartite_a(&g, rep.reg.unwrap_or_default()).ok() == Some(rep.a);
            (
                format!(
                    "G({r},{d}): reg(I) {}, e {}, a {}",
                    rep.reg.map_or(-1, |x| x + 1),
                    rep.e,
                    rep.a
                ),
                ok,
            )
        })
        .collect();
    let ok = rows.iter().all(|(_, ok)| *ok);
    let bad: Vec<&str> = rows
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(s, _)| s.as_str())
        .collect();
    Check::new(
        "reg(I) = r, e = dr-(d-1), a = 1-d-r for r in {3,4}, d in {1,2,3}",
        if ok {
            format!("{} graphs agree", rows.len())
        } else {
            bad.join("; ")
        },
        ok,
    )
}

fn gluing(_: &HarnessConfig) -> Check {
    let g = Graph::cycle(4).expect("valid");
    let base_ideal = toric_ideal(&g, None).expect("bipartite").ideal;
    let base_tree = is_gvd(&base_ideal, UnmixedPolicy::Structural);
    let Ok(base) = invariants_via_recursion(&base_tree) else {
        return Check::new("certified base", "the square is not certified", false);
    };
    let mut rows = Vec::new();
    let mut ok = true;
    for d in 2..=3i64 {
        let h = glue_cycle(&g, "e1", 2 * d as usize).expect("valid gluing");
        let ideal = toric_ideal(&h, None).expect("bipartite").ideal;
        let predicted = (base.reg.map(|r| r + d - 1), d * base.e, base.a - (d - 1));
        let direct = invariants_direct(&ideal, CmStatus::Certified)
            .ok()
            .map(|r| r.triple());
        let tree = is_gvd(&ideal, UnmixedPolicy::Structural);
        let rec = invariants_via_recursion(&tree).ok().map(|r| r.triple());
        let agree = direct == Some(predicted) && rec == Some(predicted);
        ok &= agree;
        rows.push(format!(
            "2d={}: predicted reg {}, e {}, a {}; direct {}; recursion {}",
            2 * d,
            predicted.0.unwrap_or(-1),
            predicted.1,
            predicted.2,
            if direct == Some(predicted) {
                "agrees"
            } else {
                "differs"
            },
            if rec == Some(predicted) {
                "agrees"
            } else {
                "differs"
            },
        ));
    }
    Check::new(
        "gluing a 2d-cycle onto C_4: reg + (d-1), e * d, a - (d-1)",
        rows.join("; "),
        ok,
    )
}

fn monotonicity(cfg: &HarnessConfig) -> Check {
    let corpus = toric_corpus(cfg.seed.wrapping_add(10), 25);
    let per_graph: Vec<(usize, Vec<String>)> = corpus
        .par_iter()
        .map(|(name, g, ideal)| {
            let full = invariants_direct(ideal, CmStatus::Certified).expect("homogeneous");
            let mut bad = Vec::new();
            for label in g.labels() {
                let (n, _) = edge_split(g, &label).expect("bipartite");
                let sub = invariants_direct(&n, CmStatus::Certified).expect("homogeneous");
                if sub.reg > full.reg || sub.a > full.a || sub.e > full.e {
                    bad.push(format!("{name} minus {label}"));
                }
            }
            (g.edge_count(), bad)
        })
        .collect();
    let total: usize = per_graph.iter().map(|(c, _)| c).sum();
    let failures: Vec<String> = per_graph.into_iter().flat_map(|(_, b)| b).collect();
    Check::new(
        "reg, a (in K[E(G)]) and e do not increase under edge deletion",
        failures_text(total, "deletions", &failures),
        failures.is_empty(),
    )
}

fn nonpositivity(cfg: &HarnessConfig) -> Check {
    let corpus = mixed_corpus(cfg.seed.wrapping_add(11));
    let audit = match nonpositivity_audit(&corpus, UnmixedPolicy::Structural) {
        Ok(a) => a,
        Err(e) => return Check::new("audit", e.to_string(), false),
    };
    let graphs = toric_corpus(cfg.seed.wrapping_add(12), 30);
    let not_hilbertian: Vec<String> = graphs
        .par_iter()
        .filter_map(|(name, _, ideal)| {
            let rep = invariants_direct(ideal, CmStatus::Certified).ok()?;
            (rep.hilbertian != Hilbertian::Hilbertian).then(|| name.clone())
        })
        .collect();
    let pair = catalog::c_unsaturated_pair();
    let pair_rejected = is_gvd(&pair, UnmixedPolicy::Structural).is_certified()
        && !is_c_saturated(&pair, UnmixedPolicy::Structural).is_certified();
    Check::new(
        "a <= 0 when certified, a < 0 when C-saturated, bipartite toric Hilbertian, <yz, x+z> not C-saturated",
        format!(
            "{} certified ({} C-saturated), {} violations; {} of {} graphs not Hilbertian; <yz, x+z> {}",
            audit.checked,
            audit.c_saturated,
            audit.violations.len(),
            not_hilbertian.len(),
            graphs.len(),
            if pair_rejected { "rejected" } else { "accepted" }
        ),
        audit.passed() && audit.checked > 0 && not_hilbertian.is_empty() && pair_rejected,
    )
}

fn simplicial(cfg: &HarnessConfig) -> Check {
    let mut r = rng(cfg.seed.wrapping_add(13));
    let complexes: Vec<SimplicialComplex> =
        (0..120).map(|_| random_pure_complex(&mut r, 8)).collect();
    let outcomes: Vec<Option<Option<String>>> = complexes
        .par_iter()
        .enumerate()
        .map(|(k, c)| {
            let trace = is_vertex_decomposable_pure(c).ok()??;
            let rec = reg_via_vd_recursion(c, &trace).ok();
            let direct = stanley_reisner_ideal(c)
                .ok()
                .and_then(|i| invariants_direct(&i, CmStatus::Certified).ok())
                .and_then(|rep| rep.reg);
            Some((rec.is_none() || rec != direct).then(|| format!("complex #{k}")))
        })
        .collect();
    let decomposable = outcomes.iter().filter(|o| o.is_some()).count();
    let failures: Vec<String> = outcomes.into_iter().flatten().flatten().collect();
    let triangle = SimplicialComplex::new(
        vec!["x".into(), "y".into(), "z".into()],
        &[vec!["x", "y"], vec!["y", "z"], vec!["x", "z"]],
    )
    .expect("valid");
    let tri = stanley_reisner_ideal(&triangle)
        .ok()
        .and_then(|i| invariants_direct(&i, CmStatus::Certified).ok());
    let tri_rec = is_vertex_decomposable_pure(&triangle)
        .ok()
        .flatten()
        .and_then(|t| reg_via_vd_recursion(&triangle, &t).ok());
    let tri_ok = tri.as_ref().is_some_and(|t| {
        t.reg == Some(2) && t.a == 0 && t.hilbertian == Hilbertian::AlmostHilbertian
    }) && tri_rec == Some(2);
    Check::new(
        "recursion = direct reg on decomposable complexes; boundary of a triangle: reg 2, a 0, AlmostHilbertian",
        format!(
            "{}; triangle: {}",
            failures_text(decomposable, "decomposable complexes", &failures),
            tri.as_ref().map(|t| format!("{}, {}", triple_text(t), t.hilbertian)).unwrap_or_else(|| "error".into())
        ),
        failures.is_empty() && decomposable > 0 && tri_ok,
    )
}
