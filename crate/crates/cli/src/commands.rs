use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use pst_core::catalog::{self, CatalogEntry, PrintedCoupling};
use pst_core::graph::{intersection_numbers, load_document, stratify, Graph, InputDocument, PdrReport};
use pst_core::oracle::{full_transfer_experiment, OracleError};
use pst_core::pipeline::{Analysis, Network, PipelineError};
use pst_core::pst::{
    evolve as run_evolve, round_trip_error, system_residual, time_grid, CouplingDesign, DesignParams,
    PhaseFactor, PstError,
};
use pst_core::Tolerances;

use crate::output::{emit, to_json};
use crate::{CliError, DesignArgs, EvolveArgs, SourceArgs, VerifyArgs};

const TOLERANCE_VAR: &str = "PST_SEED_TOLERANCE";

/// Default tolerances, with the 1e-9 transfer family replaced by
/// `PST_SEED_TOLERANCE` when it is set.
pub fn tolerances() -> Result<Tolerances, CliError> {
    let tol = Tolerances::default();
    match std::env::var(TOLERANCE_VAR) {
        Err(_) => Ok(tol),
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(v) if v.is_finite() && v > 0.0 => Ok(tol.with_transfer_family(v)),
            _ => Err(CliError::Parse(format!("{TOLERANCE_VAR}={raw} is not a positive number"))),
        },
    }
}

fn pipeline_error(e: PipelineError) -> CliError {
    match e {
        PipelineError::Graph(e) => CliError::Parse(e.to_string()),
        PipelineError::Pst(e) => pst_error(e),
        PipelineError::Spectral(e) => CliError::Tolerance(e.to_string()),
        e @ (PipelineError::NotPseudoDistanceRegular(_)
        | PipelineError::Inconsistent
        | PipelineError::RouteMismatch { .. }) => CliError::Infeasible(e.to_string()),
    }
}

fn pst_error(e: PstError) -> CliError {
    match e {
        PstError::Infeasible(m) => CliError::Infeasible(m),
        PstError::InverseIdentity(_) => CliError::Tolerance(e.to_string()),
        e => CliError::Parse(e.to_string()),
    }
}

fn read_document(path: &Path) -> Result<InputDocument, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    load_document(&text).map_err(|e| CliError::Parse(e.to_string()))
}

fn catalog_entry(name: &str) -> Result<CatalogEntry, CliError> {
    catalog::entry(name).map_err(|e| CliError::Parse(e.to_string()))
}

/// The graph behind a source, if it has one, with its reference vertex.
fn source_graph(src: &SourceArgs) -> Result<Option<(Graph, usize)>, CliError> {
    if let Some(name) = &src.catalog {
        let e = catalog_entry(name)?;
        let reference = src.reference.unwrap_or(e.reference);
        return Ok(e.graph().cloned().map(|g| (g, reference)));
    }
    let path = src.input.as_ref().expect("clap enforces a source");
    match read_document(path)? {
        InputDocument::Graph(doc) => {
            let g = doc.into_graph().map_err(|e| CliError::Parse(e.to_string()))?;
            Ok(Some((g, src.reference.unwrap_or(0))))
        }
        InputDocument::Array(_) => Ok(None),
    }
}

struct Loaded {
    network: Network,
    entry: Option<CatalogEntry>,
}

fn load(src: &SourceArgs) -> Result<Loaded, CliError> {
    if let Some(name) = &src.catalog {
        let entry = catalog_entry(name)?;
        let network = match (entry.graph(), src.reference) {
            (Some(g), Some(r)) => Network::from_graph(g.clone(), r),
            _ => entry.network(),
        }
        .map_err(pipeline_error)?;
        return Ok(Loaded {
            network,
            entry: Some(entry),
        });
    }
    let doc = read_document(src.input.as_ref().expect("clap enforces a source"))?;
    let network = Network::from_document(doc, src.reference.unwrap_or(0)).map_err(pipeline_error)?;
    Ok(Loaded { network, entry: None })
}

fn analyzed(src: &SourceArgs, tol: &Tolerances) -> Result<(Loaded, Analysis), CliError> {
    let loaded = load(src)?;
    let analysis = loaded.network.analyze(tol).map_err(pipeline_error)?;
    Ok((loaded, analysis))
}

/// Local numbers (c, a, b) of one vertex.
fn local<T: ToString>((c, a, b): &(T, T, T)) -> Value {
    json!({"c": c.to_string(), "a": a.to_string(), "b": b.to_string()})
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn analyze(args: &SourceArgs, tol: &Tolerances) -> Result<(), CliError> {
    let mut doc = serde_json::Map::new();
    if let Some((g, reference)) = source_graph(args)? {
        let s = stratify(&g, reference).map_err(|e| CliError::Parse(e.to_string()))?;
        doc.insert("vertices".into(), json!(g.n_vertices()));
        doc.insert("edges".into(), json!(g.n_edges()));
        doc.insert("reference".into(), json!(reference));
        doc.insert("strata".into(), json!(s.strata()));
        doc.insert("valencies".into(), json!(s.valencies()));
        if let PdrReport::NotPseudoDistanceRegular(w) = intersection_numbers(&g, &s) {
            doc.insert("pseudo_distance_regular".into(), json!(false));
            doc.insert(
                "witness".into(),
                json!({
                    "stratum": w.stratum,
                    "first": w.first,
                    "second": w.second,
                    "first_numbers": local(&w.first_numbers),
                    "second_numbers": local(&w.second_numbers),
                }),
            );
            doc.insert("name".into(), json!(g.name().unwrap_or("graph")));
            emit(args.out.as_deref(), "analysis.json", &to_json(&Value::Object(doc)))?;
            return Ok(());
        }
    }
    let (loaded, analysis) = analyzed(args, tol)?;
    let net = &loaded.network;
    doc.insert("name".into(), json!(net.name()));
    doc.insert("valencies".into(), json!(net.valencies()));
    doc.insert("diameter".into(), json!(net.diameter()));
    doc.insert("pseudo_distance_regular".into(), json!(true));
    if let Some(num) = net.numbers() {
        doc.insert(
            "intersection_numbers".into(),
            json!({
                "b": strings(num.b_array()),
                "c": strings(num.c_array()),
                "a": strings(num.a_array()),
            }),
        );
    }
    doc.insert(
        "qd".into(),
        json!({"alpha": strings(net.qd().alpha()), "omega": strings(net.qd().omega())}),
    );
    doc.insert(
        "feasibility".into(),
        json!({
            "feasible": analysis.feasibility.feasible,
            "obstructions": analysis.feasibility.obstructions,
            "note": analysis.feasibility.describe(),
        }),
    );
    emit(args.out.as_deref(), "analysis.json", &to_json(&Value::Object(doc)))
}

pub fn spectrum(args: &SourceArgs, tol: &Tolerances) -> Result<(), CliError> {
    let (_, analysis) = analyzed(args, tol)?;
    emit(args.out.as_deref(), "spectrum.json", &to_json(&analysis.report()))
}

fn build_design(args: &DesignArgs, loaded: &Loaded, analysis: &Analysis) -> Result<CouplingDesign, CliError> {
    let pf = PhaseFactor::from_value(args.phase_factor).map_err(pst_error)?;
    if !(args.t0 > 0.0 && args.t0.is_finite()) {
        return Err(pst_error(PstError::InvalidTime(args.t0)));
    }
    if args.paper_couplings {
        if args.branch.is_some() {
            return Err(CliError::Parse("--branch and --paper-couplings are exclusive".into()));
        }
        let printed = loaded
            .entry
            .as_ref()
            .and_then(|e| e.expected.couplings.as_ref())
            .ok_or_else(|| CliError::Parse("--paper-couplings needs a catalog entry with tabulated couplings".into()))?;
        return Ok(CouplingDesign::from_printed(
            &analysis.pm,
            args.theta,
            args.t0,
            &PrintedCoupling::pairs(printed),
            pf,
        ));
    }
    analysis
        .design(&DesignParams {
            theta: args.theta,
            t0: args.t0,
            branch_l: args.branch.clone(),
            override_f: None,
            phase_factor: pf,
        })
        .map_err(pst_error)
}

#[derive(Serialize)]
struct DesignReport<'a> {
    name: &'a str,
    #[serde(flatten)]
    design: &'a CouplingDesign,
    round_trip_error: f64,
    system_residual: f64,
}

pub fn design(args: &DesignArgs, tol: &Tolerances) -> Result<(), CliError> {
    let (loaded, analysis) = analyzed(&args.source, tol)?;
    let design = build_design(args, &loaded, &analysis)?;
    let report = DesignReport {
        name: loaded.network.name(),
        design: &design,
        round_trip_error: round_trip_error(&design, &analysis.pm),
        system_residual: system_residual(&design, &analysis.pm),
    };
    emit(args.source.out.as_deref(), "design.json", &to_json(&report))?;
    if report.round_trip_error > tol.round_trip {
        return Err(CliError::Tolerance(format!(
            "round-trip error {:.3e} exceeds {:.1e}",
            report.round_trip_error, tol.round_trip
        )));
    }
    Ok(())
}

fn parse_grid(text: Option<&str>, t0: f64) -> Result<Vec<f64>, CliError> {
    let (t_min, t_max, samples) = match text {
        None => (0.0, 2.0 * t0, 201),
        Some(s) => {
            let parts: Vec<&str> = s.split(':').collect();
            let bad = || CliError::Parse(format!("--grid {s}: expected t_min:t_max:samples"));
            if parts.len() != 3 {
                return Err(bad());
            }
            let t_min: f64 = parts[0].trim().parse().map_err(|_| bad())?;
            let t_max: f64 = parts[1].trim().parse().map_err(|_| bad())?;
            let samples: usize = parts[2].trim().parse().map_err(|_| bad())?;
            (t_min, t_max, samples)
        }
    };
    if samples < 2 || !(t_min.is_finite() && t_max.is_finite()) || t_min >= t_max {
        return Err(CliError::Parse("grid needs t_min < t_max and at least 2 samples".into()));
    }
    if t0 < t_min || t0 > t_max {
        return Err(CliError::Parse(format!("t0 = {t0} lies outside the grid [{t_min}, {t_max}]")));
    }
    Ok(time_grid(t_min, t_max, samples, t0))
}

#[derive(Serialize)]
struct EvolveReport<'a> {
    name: &'a str,
    design: &'a CouplingDesign,
    #[serde(flatten)]
    transfer: &'a pst_core::pst::TransferReport,
}

pub fn evolve(args: &EvolveArgs, tol: &Tolerances) -> Result<(), CliError> {
    let d = &args.design;
    let (loaded, analysis) = analyzed(&d.source, tol)?;
    let design = build_design(d, &loaded, &analysis)?;
    let grid = parse_grid(args.grid.as_deref(), design.t0)?;
    let report = run_evolve(&design, &analysis.pm, &grid, tol).map_err(pst_error)?;
    let out = d.source.out.as_deref();
    emit(out, "curve.csv", &report.to_csv())?;
    if out.is_some() {
        let doc = EvolveReport {
            name: loaded.network.name(),
            design: &design,
            transfer: &report,
        };
        emit(out, "transfer.json", &to_json(&doc))?;
    }
    if !report.perfect {
        return Err(CliError::Tolerance(format!(
            "|f_D(t0)| = {:.12}, leakage {:.3e}",
            report.fidelity_at_t0, report.max_leakage
        )));
    }
    Ok(())
}

pub fn verify(args: &VerifyArgs, tol: &Tolerances) -> Result<(), CliError> {
    let d = &args.design;
    let (loaded, analysis) = analyzed(&d.source, tol)?;
    let design = build_design(d, &loaded, &analysis)?;
    let report = full_transfer_experiment(&loaded.network, &analysis, &design, args.d, None, tol).map_err(|e| match e {
        OracleError::DimensionCap { .. } => CliError::DimensionCap(e.to_string()),
        e => CliError::Parse(e.to_string()),
    })?;
    emit(d.source.out.as_deref(), "verify.json", &to_json(&report))?;
    let c = &report.checks;
    if c.hermiticity_error > tol.transfer || c.conservation_error > tol.transfer || c.unitarity_error > tol.transfer {
        return Err(CliError::Tolerance("dense Hamiltonian failed a structural check".into()));
    }
    if report.phase_factor_resolved.is_none() {
        return Err(CliError::Tolerance(
            "no phase factor reproduces the reduced amplitudes".into(),
        ));
    }
    Ok(())
}

pub fn catalog_list(out: Option<&Path>) -> Result<(), CliError> {
    let list: Vec<Value> = catalog::entries()
        .iter()
        .map(|e| {
            json!({
                "name": e.name,
                "description": e.description,
                "feasible": e.expected.feasible,
                "notes": e.notes,
            })
        })
        .collect();
    emit(out, "catalog.json", &to_json(&list))
}

pub fn catalog_export(name: &str, out: Option<&Path>) -> Result<(), CliError> {
    let e = catalog_entry(name)?;
    emit(out, &format!("{name}.json"), &e.document().to_canonical())
}
