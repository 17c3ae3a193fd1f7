use std::fs;
use std::path::Path;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use gvdkit::gvd::{invariants_asserted, invariants_via_recursion, search_with};
use gvdkit::hilbert::invariants_direct;
use gvdkit::io::{read_complex, read_graph, read_ideal, IdealSpec};
use gvdkit::simplicial::{
    is_vertex_decomposable_pure, reg_via_vd_recursion, stanley_reisner_ideal,
};
use gvdkit::toric::{
    bipartite_a, ferrers_graph, ferrers_invariants, glue_cycle, grd_graph, toric_ideal, Graph,
    Partition,
};
use gvdkit::{CmStatus, Hilbertian, Ideal, InvariantReport, Provenance};
use serde_json::{json, Value};

use crate::cli::{
    Command, Expect, Format, GvdCommand, RunConfig, SearchFlags, SrCommand, ToricCommand,
};
use crate::harness::{run_all, select, HarnessConfig};
use crate::render::{outline, tree_outline};

/// How a successful run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    /// The computation finished but the verdict did not match an expectation.
    VerdictFailure,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Self::Success => 0,
            Self::VerdictFailure => 1,
        }
    }
}

/// Error in the input (file, flags or an algebraic precondition); exit code 2.
pub fn input_error_code() -> i32 {
    2
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("{}: cannot read file", path.display()))
}

fn load<T>(path: &Path, parse: fn(&str) -> gvdkit::Result<T>) -> Result<T> {
    let text = read(path)?;
    parse(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

/// Output sink honouring `--format`.
struct Out {
    format: Format,
    text: String,
}

impl Out {
    fn new(format: Format) -> Self {
        Self {
            format,
            text: String::new(),
        }
    }

    fn emit(&mut self, value: &Value) {
        match self.format {
            Format::Json => {
                self.text
                    .push_str(&serde_json::to_string_pretty(value).expect("serializable"));
                self.text.push('\n');
            }
            Format::Text => self.text.push_str(&outline(value)),
        }
    }
}

/// Runs one command and returns what to print plus the exit status.
pub fn run(config: &RunConfig) -> Result<(String, Status)> {
    if config.threads > 0 {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build_global();
    }
    let mut out = Out::new(config.format.unwrap_or(Format::Json));
    let status = match &config.command {
        Command::Invariants { ideal, assume_cm } => {
            let ideal = load(ideal, read_ideal)?;
            let cm = if *assume_cm {
                CmStatus::Asserted
            } else {
                CmStatus::Unknown
            };
            let report = invariants_direct(&ideal, cm)?;
            out.emit(&json!({ "ideal": IdealSpec::from(&ideal), "report": report }));
            Status::Success
        }
        Command::Gvd(cmd) => gvd(cmd, &mut out)?,
        Command::Toric(ToricCommand::Build { graph, walk_bound }) => {
            let g = load(graph, read_graph)?;
            out.emit(&toric_build(&g, *walk_bound)?);
            Status::Success
        }
        Command::Ferrers {
            partition,
            verify_direct,
        } => {
            let lambda = Partition::parse(partition)?;
            let g = ferrers_graph(&lambda);
            let ideal = toric_ideal(&g, None)?.ideal;
            let closed = ferrers_invariants(&lambda);
            let mut doc = json!({
                "partition": lambda,
                "graph": g,
                "ideal": IdealSpec::from(&ideal),
                "closedForm": closed,
            });
            let status = attach_direct(&mut doc, &ideal, &closed, *verify_direct)?;
            out.emit(&doc);
            status
        }
        Command::Glue {
            graph,
            edge,
            cycle,
            verify_direct,
        } => {
            let g = load(graph, read_graph)?;
            out.emit(&glue(&g, edge, *cycle, *verify_direct)?);
            Status::Success
        }
        Command::Grd {
            r,
            d,
            verify_direct,
        } => {
            let g = grd_graph(*r, *d)?;
            let ideal = toric_ideal(&g, None)?.ideal;
            let closed = grd_closed_form(&g, *r as i64, *d as i64);
            let mut doc = json!({
                "r": r,
                "d": d,
                "graph": g,
                "ideal": IdealSpec::from(&ideal),
                "closedForm": closed,
            });
            let status = attach_direct(&mut doc, &ideal, &closed, *verify_direct)?;
            out.emit(&doc);
            status
        }
        Command::Sr(cmd) => sr(cmd, &mut out)?,
        Command::Verify { only, json } => {
            let selected = select(only).map_err(|e| anyhow!(e))?;
            let deadline = config.timeout_secs.map(Duration::from_secs);
            let results = run_all(selected, HarnessConfig { seed: config.seed }, deadline);
            let all_passed = results.iter().all(|r| r.passed);
            let format = if *json {
                Format::Json
            } else {
                config.format.unwrap_or(Format::Text)
            };
            match format {
                Format::Json => {
                    out.text = serde_json::to_string_pretty(&json!({
                        "passed": all_passed,
                        "criteria": results,
                    }))?;
                    out.text.push('\n');
                }
                Format::Text => {
                    for r in &results {
                        out.text.push_str(&r.line());
                        out.text.push('\n');
                    }
                    let passed = results.iter().filter(|r| r.passed).count();
                    out.text
                        .push_str(&format!("{passed}/{} criteria passed\n", results.len()));
                }
            }
            if all_passed {
                Status::Success
            } else {
                Status::VerdictFailure
            }
        }
    };
    Ok((out.text, status))
}

fn gvd(cmd: &GvdCommand, out: &mut Out) -> Result<Status> {
    match cmd {
        GvdCommand::Check {
            ideal,
            search,
            expect,
        } => {
            let ideal = load(ideal, read_ideal)?;
            let tree = search_with(&ideal, search.options());
            let certified = tree.is_certified();
            out.emit(&json!({
                "certified": certified,
                "reliesOnAssumption": tree.relies_on_assumption(),
                "search": search_json(search),
                "tree": tree.report(),
            }));
            Ok(match expect {
                Some(Expect::Gvd) if !certified => Status::VerdictFailure,
                Some(Expect::NotGvd) if certified => Status::VerdictFailure,
                _ => Status::Success,
            })
        }
        GvdCommand::Trace { ideal, search } => {
            let ideal = load(ideal, read_ideal)?;
            let tree = search_with(&ideal, search.options());
            let report = serde_json::to_value(tree.report())?;
            match out.format {
                Format::Text => out.text.push_str(&tree_outline(&report)),
                Format::Json => out.emit(&report),
            }
            Ok(Status::Success)
        }
        GvdCommand::Invariants {
            ideal,
            search,
            assume_cm,
        } => {
            let ideal = load(ideal, read_ideal)?;
            let tree = search_with(&ideal, search.options());
            let certified = tree.is_certified();
            let cm = if certified {
                CmStatus::Certified
            } else if *assume_cm {
                CmStatus::Asserted
            } else {
                CmStatus::Unknown
            };
            let direct = invariants_direct(&ideal, cm)?;
            let recursion = if certified {
                Some(invariants_via_recursion(&tree)?)
            } else {
                None
            };
            let asserted = if !certified && *assume_cm {
                Some(
                    invariants_asserted(&ideal)
                        .map_err(|e| anyhow!("no valid nondegenerate split to combine: {e}"))?,
                )
            } else {
                None
            };
            let agree = recursion.as_ref().map(|r| r.triple() == direct.triple());
            out.emit(&json!({
                "certified": certified,
                "search": search_json(search),
                "direct": direct,
                "recursion": recursion,
                "asserted": asserted,
                "agree": agree,
            }));
            Ok(Status::Success)
        }
    }
}

fn search_json(search: &SearchFlags) -> Value {
    let o = search.options();
    json!({
        "unmixed": if search.assume_unmixed { "assume-unmixed" } else { "structural" },
        "orders": o.orders,
        "cSaturated": o.c_saturated,
    })
}

fn toric_build(g: &Graph, walk_bound: Option<usize>) -> Result<Value> {
    let toric = toric_ideal(g, walk_bound)?;
    let cm = if toric.certified {
        CmStatus::Certified
    } else {
        CmStatus::Unknown
    };
    let report = invariants_direct(&toric.ideal, cm)?;
    let (core, stripped) = g.strip_leaves();
    let core_report = if toric.certified && core.edge_count() > 0 {
        Some(invariants_direct(
            &toric_ideal(&core, None)?.ideal,
            CmStatus::Certified,
        )?)
    } else {
        None
    };
    Ok(json!({
        "bipartite": g.is_bipartite(),
        "generatorsCertified": toric.certified,
        "binomials": toric.cycles,
        "ideal": IdealSpec::from(&toric.ideal),
        "report": report,
        "leafStripping": stripped,
        "coreReport": core_report,
    }))
}

fn attach_direct(
    doc: &mut Value,
    ideal: &Ideal,
    closed: &InvariantReport,
    verify: bool,
) -> Result<Status> {
    if !verify {
        return Ok(Status::Success);
    }
    let direct = invariants_direct(ideal, CmStatus::Certified)?;
    let agree = direct.triple() == closed.triple() && direct.dim == closed.dim;
    doc["direct"] = serde_json::to_value(&direct)?;
    doc["agree"] = json!(agree);
    Ok(if agree {
        Status::Success
    } else {
        Status::VerdictFailure
    })
}

fn grd_closed_form(g: &Graph, r: i64, d: i64) -> InvariantReport {
    let dim = g.vertex_count() - 1;
    InvariantReport {
        h_poly: None,
        dim,
        reg: Some(r - 1),
        e: d * r - (d - 1),
        a: 1 - d - r,
        hilbertian: Hilbertian::Hilbertian,
        provenance: Provenance::ClosedForm,
        cm: CmStatus::Certified,
    }
}

fn glue(g: &Graph, edge: &str, cycle: usize, verify_direct: bool) -> Result<Value> {
    let h = glue_cycle(g, edge, cycle)?;
    let base_ideal = toric_ideal(g, None)?.ideal;
    let ideal = toric_ideal(&h, None)?.ideal;
    let d = (cycle / 2) as i64;
    let base_tree = gvdkit::gvd::is_gvd(&base_ideal, gvdkit::gvd::UnmixedPolicy::Structural);
    let base = if base_tree.is_certified() {
        Some(invariants_via_recursion(&base_tree)?)
    } else {
        None
    };
    let predicted = base.as_ref().map(|b| {
        let reg = b.reg.map(|r| r + d - 1);
        InvariantReport {
            h_poly: None,
            dim: h.vertex_count() - h.component_count(),
            reg,
            e: d * b.e,
            a: b.a - (d - 1),
            hilbertian: if b.a - (d - 1) < 0 {
                Hilbertian::Hilbertian
            } else {
                Hilbertian::AlmostHilbertian
            },
            provenance: Provenance::ClosedForm,
            cm: CmStatus::Certified,
        }
    });
    let mut doc = json!({
        "graph": h,
        "ideal": IdealSpec::from(&ideal),
        "base": base,
        "predicted": predicted,
    });
    if verify_direct {
        let direct = invariants_direct(&ideal, CmStatus::Certified)?;
        if let Some(p) = &predicted {
            doc["agree"] = json!(p.triple() == direct.triple());
        }
        doc["direct"] = serde_json::to_value(&direct)?;
        if h.is_bipartite() {
            doc["aFromRegularity"] = json!(bipartite_a(&h, direct.reg.unwrap_or_default())?);
        }
    }
    Ok(doc)
}

fn sr(cmd: &SrCommand, out: &mut Out) -> Result<Status> {
    match cmd {
        SrCommand::Invariants { complex } => {
            let c = load(complex, read_complex)?;
            let ideal = stanley_reisner_ideal(&c)?;
            let trace = if c.is_pure() {
                is_vertex_decomposable_pure(&c)?
            } else {
                None
            };
            let cm = if trace.is_some() {
                CmStatus::Certified
            } else {
                CmStatus::Unknown
            };
            let direct = invariants_direct(&ideal, cm)?;
            let recursion = trace
                .as_ref()
                .map(|t| reg_via_vd_recursion(&c, t))
                .transpose()?;
            out.emit(&json!({
                "complex": c,
                "pure": c.is_pure(),
                "ideal": IdealSpec::from(&ideal),
                "vertexDecomposable": trace.is_some(),
                "direct": direct,
                "recursionReg": recursion,
                "agree": recursion.map(|r| Some(r) == direct.reg),
            }));
            Ok(Status::Success)
        }
        SrCommand::VdCheck { complex, expect_vd } => {
            let c = load(complex, read_complex)?;
            if !c.is_pure() {
                bail!("{}: {}", complex.display(), gvdkit::Error::NotPure);
            }
            let trace = is_vertex_decomposable_pure(&c)?;
            let found = trace.is_some();
            out.emit(&json!({
                "complex": c,
                "vertexDecomposable": found,
                "trace": trace,
            }));
            Ok(if *expect_vd && !found {
                Status::VerdictFailure
            } else {
                Status::Success
            })
        }
    }
}
