//! One function per subcommand. Each returns the text to print on stdout.

use std::fs;
use std::path::Path;

use log::{info, warn};
use serde_json::{json, Value};
use tropfw_core::degeneracy::{
    all_minors_report, find_similar_pair, random_sample_experiment, verify_similar_pair, RandomRationalSpec,
    TheoremStatus, WitnessVerdict,
};
use tropfw_core::fermat_weber::{fw_polytope_with, FwMethod};
use tropfw_core::rational::{format_rational, parse_rational};
use tropfw_core::treespace::{
    fw_intersect_treespace, leaf_count_for, table1_experiment, ultrametric_violation, Table1Config,
    UltrametricVector,
};
use tropfw_core::{is_essential, is_fw_point, k_ellipse, min_sum_combinatorial, min_sum_lp, trop_dist};
use tropfw_core::{Budgets, EllipseSpec, Rational};

use crate::failure::Failure;
use crate::input::{self, sha256_hex};
use crate::report::RunReport;
use crate::svg;

pub type Outcome = Result<Output, Failure>;

/// What a command prints: a report destined for JSON or a bare line.
pub enum Output {
    Report(Box<RunReport>),
    Line(String),
}

fn report(r: RunReport) -> Outcome {
    Ok(Output::Report(Box::new(r)))
}

fn to_value<T: serde::Serialize>(v: &T) -> Result<Value, Failure> {
    Ok(serde_json::to_value(v)?)
}

fn params_digest(v: &Value) -> String {
    sha256_hex(v.to_string().as_bytes())
}

pub fn dist(file: &Path, i: usize, j: usize) -> Outcome {
    let sample = input::load(file)?.matrix()?;
    let m = sample.m();
    for k in [i, j] {
        if k == 0 || k > m {
            return Err(Failure::usage(format!("point index {k} is out of range 1..={m}")));
        }
    }
    let d = trop_dist(sample.row(i - 1), sample.row(j - 1))?;
    Ok(Output::Line(format_rational(&d)))
}

pub struct FwOptions {
    pub hull_check: bool,
    pub oracle: bool,
    pub method: FwMethod,
}

pub fn fw(file: &Path, opts: &FwOptions, budgets: &Budgets) -> Outcome {
    let loaded = input::load(file)?;
    let sample = loaded.matrix()?;
    let d = min_sum_lp(&sample)?;
    let fw = fw_polytope_with(&sample, opts.method, budgets)?;
    if fw.d != d {
        return Err(Failure::internal(format!("polytope level {} differs from the LP optimum {d}", fw.d)));
    }
    let mut details = serde_json::Map::new();
    details.insert("m".into(), json!(sample.m()));
    details.insert("n".into(), json!(sample.n()));
    if let Some(labels) = &loaded.labels {
        details.insert("labels".into(), json!(labels));
    }

    if opts.oracle {
        let c = min_sum_combinatorial(&sample, budgets)?;
        if c != d {
            return Err(Failure::internal(format!("oracle mismatch: LP gives {d}, assignment pairs give {c}")));
        }
        info!("assignment-pair oracle agrees: d = {c}");
        details.insert("oracle_d".into(), json!(format_rational(&c)));
    }

    if opts.hull_check {
        for v in fw.vertices() {
            if !is_fw_point(&v, &sample, &d)? {
                return Err(Failure::internal(format!("vertex {:?} does not attain d", v.coords())));
            }
        }
        let other = match opts.method {
            FwMethod::Extended => FwMethod::Direct,
            FwMethod::Direct => FwMethod::Extended,
        };
        let alt = fw_polytope_with(&sample, other, budgets)?;
        if alt.polytope.vertices != fw.polytope.vertices {
            return Err(Failure::internal("the two polytope constructions disagree on the vertex set"));
        }
        info!("hull check passed on {} vertices", fw.polytope.len());
        details.insert("hull_check".into(), json!("passed"));
    }

    let mut r = RunReport::new("fw", loaded.digest)
        .with_d(&d)
        .with_vertices(&fw.polytope.vertices, fw.affine_dim())
        .with_details(Value::Object(details));
    r.flags.unique = Some(fw.unique);
    if sample.m() >= 2 {
        r.flags.essential = Some(is_essential(&sample)?.essential);
    }
    report(r)
}

pub fn ellipse(file: &Path, a: &str, svg_path: Option<&Path>) -> Outcome {
    let loaded = input::load(file)?;
    let foci = loaded.matrix()?;
    let a = parse_rational(a).map_err(|e| Failure::usage(format!("--a: {e}")))?;
    let result = k_ellipse(&EllipseSpec { foci: foci.clone(), a: a.clone() }).map_err(|e| match e {
        tropfw_core::Error::Precondition(msg) => Failure::precondition(format!(
            "{msg}; a k-ellipse needs a level at least the minimal distance sum of its foci"
        )),
        e => e.into(),
    })?;
    let mut details = json!({
        "a": format_rational(&a),
        "locus": result.locus,
        "vertex_count": result.polytope.len(),
    });
    if let Some(path) = svg_path {
        if foci.n() == 3 {
            let focus_coords: Vec<Vec<Rational>> = foci.rows().iter().map(|r| r.coords().to_vec()).collect();
            let title = format!("tropical {}-ellipse, a = {}", foci.m(), format_rational(&a));
            let text = svg::render(&result.polytope.vertices, &focus_coords, &title);
            fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
            details["svg"] = json!(path.display().to_string());
        } else {
            warn!("SVG output is only drawn for n = 3; n = {} gets the vertex list only", foci.n());
        }
    }
    report(
        RunReport::new("ellipse", loaded.digest)
            .with_d(&result.d)
            .with_vertices(&result.polytope.vertices, result.polytope.affine_dim)
            .with_details(details),
    )
}

pub fn treespace_check(file: &Path) -> Outcome {
    let loaded = input::load(file)?;
    let n_leaves = leaf_count_for(loaded.n)?;
    let mut results = Vec::new();
    let mut all = true;
    for (k, p) in loaded.raw.iter().enumerate() {
        let violation = ultrametric_violation(p, n_leaves)?;
        all &= violation.is_none();
        results.push(json!({
            "point": k + 1,
            "ultrametric": violation.is_none(),
            "violation": violation.map(|(i, j, l)| [i + 1, j + 1, l + 1]),
        }));
    }
    report(RunReport::new("treespace check", loaded.digest).with_details(json!({
        "n_leaves": n_leaves,
        "all_ultrametric": all,
        "results": results,
    })))
}

pub fn treespace_intersect(file: &Path, budgets: &Budgets) -> Outcome {
    let loaded = input::load(file)?;
    let trees = loaded
        .raw
        .iter()
        .enumerate()
        .map(|(k, p)| UltrametricVector::new(p.clone()).map_err(|e| Failure::precondition(format!("point {}: {e}", k + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    let r = fw_intersect_treespace(&trees, budgets)?;
    let mut out = RunReport::new("treespace intersect", loaded.digest)
        .with_d(&r.fw.d)
        .with_vertices(&r.fw.polytope.vertices, r.fw.affine_dim());
    out.flags.unique = Some(r.unique_point.is_some());
    let details = json!({
        "n_leaves": r.n_leaves,
        "cones_tested": r.cones_tested,
        "max_dim": r.max_dim,
        "treespace_vertices": to_value(&r)?["vertices"],
        "unique_point": to_value(&r)?["unique_point"],
        "unique_representative": r.unique_representative().map(|v| v.iter().map(format_rational).collect::<Vec<_>>()),
        "unique_is_all_ones": r.unique_is_all_ones(),
        "cones": to_value(&r.cones)?,
    });
    report(out.with_details(details))
}

pub fn treespace_experiment(config: &Table1Config, budgets: &Budgets) -> Outcome {
    let digest = params_digest(&to_value(config)?);
    let r = table1_experiment(config, budgets)?;
    report(RunReport::new("treespace experiment", digest).with_details(to_value(&r)?))
}

pub fn degeneracy_witness(file: &Path, budgets: &Budgets) -> Outcome {
    let loaded = input::load(file)?;
    let sample = loaded.matrix()?;
    let verdict = find_similar_pair(&sample, budgets);
    if let Some(pair) = verdict.pair() {
        if !verify_similar_pair(&sample, pair) {
            return Err(Failure::internal("the returned pair is not a valid witness"));
        }
    }
    let mut r = RunReport::new("degeneracy witness", loaded.digest).with_details(to_value(&verdict)?);
    r.flags.witness = Some(
        match verdict {
            WitnessVerdict::Found { .. } => "found",
            WitnessVerdict::None => "none",
            WitnessVerdict::Unknown { .. } => "unknown",
        }
        .into(),
    );
    report(r)
}

pub fn degeneracy_tropdet(file: &Path, budgets: &Budgets) -> Outcome {
    let loaded = input::load(file)?;
    let minors = all_minors_report(&loaded.raw, budgets)?;
    let summary = if minors.any_singular { "singular minor found" } else { "no singular minor" };
    let mut details = to_value(&minors)?;
    details["summary"] = json!(summary);
    report(RunReport::new("degeneracy tropdet", loaded.digest).with_details(details))
}

pub struct MonteCarlo {
    pub m: usize,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub spec: RandomRationalSpec,
}

pub fn degeneracy_montecarlo(mc: &MonteCarlo, budgets: &Budgets) -> Outcome {
    let params = json!({"m": mc.m, "n": mc.n, "trials": mc.trials, "seed": mc.seed, "spec": to_value(&mc.spec)?});
    let stats = random_sample_experiment(mc.m, mc.n, mc.trials, mc.seed, &mc.spec, budgets)?;
    if let Some(h) = stats.hits.iter().find(|h| h.check.status == TheoremStatus::Contradiction) {
        return Err(Failure::internal(format!(
            "trial {} is essential with a unique point but has no similar-pair witness",
            h.trial
        )));
    }
    report(RunReport::new("degeneracy montecarlo", params_digest(&params)).with_details(to_value(&stats)?))
}
