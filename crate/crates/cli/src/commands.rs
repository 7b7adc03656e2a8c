//! Subcommand implementations.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use motifph::classic::OrbitSet;
use motifph::graph::PairLabel;
use motifph::motif::motif_densities;
use motifph::pipelines::ego::ego_distinct;
use motifph::pipelines::manifest::OrbitSetName;
use motifph::pipelines::{
    ego_distance, export_features, iso_gate, sensitivity_run, EgoParams, IsoOptions, LoadedManifest, NamedPair,
    RunMetadata,
};
use motifph::{
    build_complex, compute_persistence, compute_weighting, Filtration, FiltrationSpec, Graph, NodeRule,
    PersistenceDiagram, Weighting,
};

use crate::config::ConfigFile;
use crate::output::{emit, OutputSet};
use crate::{usage, Format, GlobalArgs};

/// Flags merged with the config file.
#[derive(Debug)]
pub struct Options {
    pub filtrations: Vec<Filtration>,
    pub k: Vec<usize>,
    pub seed: Option<u64>,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub node_rule: Option<NodeRule>,
    pub orbit_set: Option<OrbitSetName>,
    config: ConfigFile,
}

fn kebab<T: serde::de::DeserializeOwned>(what: &str, s: &str) -> Result<T> {
    serde_json::from_value(Value::String(s.to_string())).map_err(|_| usage(format!("unknown {what} {s:?}")))
}

impl Options {
    pub fn resolve(args: &GlobalArgs) -> Result<Self> {
        let config = match &args.config {
            Some(p) => ConfigFile::load(p).map_err(|e| usage(format!("{e:#}")))?,
            None => ConfigFile::default(),
        };
        let u = |e: anyhow::Error| usage(format!("{e:#}"));
        let filtrations = config.pick_list(args.filtration.clone(), "filtration").map_err(u)?;
        let k = config.pick_list(args.k.clone(), "k").map_err(u)?;
        if k.contains(&0) {
            return Err(usage("expansion level k must be at least 1"));
        }
        let jobs = config.pick(args.jobs, "jobs").map_err(u)?;
        if jobs == Some(0) {
            return Err(usage("--jobs must be at least 1"));
        }
        let node_rule = match config.pick(args.node_rule.clone(), "node-rule").map_err(u)? {
            Some(s) => Some(kebab("node rule", &s)?),
            None => None,
        };
        let orbit_set = match config.pick(args.orbit_set.clone(), "orbit-set").map_err(u)? {
            Some(s) => Some(kebab("orbit set", &s)?),
            None => None,
        };
        Ok(Options {
            filtrations,
            k,
            seed: config.pick(args.seed, "seed").map_err(u)?,
            jobs,
            out: match &args.out {
                Some(p) => Some(p.clone()),
                // relative to the config file
                None => config.pick::<PathBuf>(None, "out").map_err(u)?.map(|p| {
                    let base = args.config.as_deref().and_then(Path::parent).unwrap_or(Path::new(""));
                    base.join(p)
                }),
            },
            format: config.pick(args.format, "format").map_err(u)?.unwrap_or_default(),
            node_rule,
            orbit_set,
            config,
        })
    }

    /// A subcommand flag, else its config key.
    fn pick<T: std::str::FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        self.config.pick(flag, key).map_err(|e| usage(format!("{e:#}")))
    }

    fn spec(&self, filtration: Filtration, k: usize) -> FiltrationSpec {
        FiltrationSpec {
            node_rule: self.node_rule.unwrap_or_default(),
            orbits: self.orbit_set.map(OrbitSet::from).unwrap_or_default(),
            ..FiltrationSpec::new(filtration, k)
        }
    }
}

/// JSON number, with infinities spelled out.
fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else if x > 0.0 {
        json!("inf")
    } else {
        json!("-inf")
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

pub fn weights(opts: &Options, path: &Path, index: usize) -> Result<()> {
    let filtrations = if opts.filtrations.is_empty() {
        vec![
            Filtration::Triangles,
            Filtration::Squares,
            Filtration::Pentagons,
            Filtration::CycleSum,
        ]
    } else {
        opts.filtrations.clone()
    };
    if filtrations.contains(&Filtration::VietorisRips) {
        return Err(usage("mV is built from distances and has no weighting"));
    }
    let g = Graph::read(path, index)?;
    if filtrations.iter().any(|f| f.is_motif()) {
        let clamped = motif_densities(&g).clamped;
        if clamped > 0 {
            log::warn!("{clamped} motif density values exceeded 1 and were clamped");
        }
    }

    let mut edge_cols: Vec<(Filtration, Vec<f64>)> = Vec::new();
    let mut node_cols: Vec<(Filtration, Vec<f64>)> = Vec::new();
    for &f in &filtrations {
        match compute_weighting(&g, &opts.spec(f, 1)) {
            Weighting::Edge { edges, .. } => edge_cols.push((f, edges.values().to_vec())),
            Weighting::Node(nodes) => node_cols.push((f, nodes.values().to_vec())),
            Weighting::Metric => unreachable!("mV rejected above"),
        }
    }

    let text = match opts.format {
        Format::Csv => {
            let mut out = String::new();
            if !edge_cols.is_empty() {
                out.push_str("u,v");
                for (f, _) in &edge_cols {
                    write!(out, ",{f}")?;
                }
                out.push('\n');
                for (e, &(u, v)) in g.edges().iter().enumerate() {
                    write!(out, "{u},{v}")?;
                    for (_, col) in &edge_cols {
                        write!(out, ",{}", col[e])?;
                    }
                    out.push('\n');
                }
            }
            if !node_cols.is_empty() {
                if !out.is_empty() {
                    out.push('\n');
                }
                out.push_str("node");
                for (f, _) in &node_cols {
                    write!(out, ",{f}")?;
                }
                out.push('\n');
                for v in 0..g.n_nodes() {
                    write!(out, "{v}")?;
                    for (_, col) in &node_cols {
                        write!(out, ",{}", col[v])?;
                    }
                    out.push('\n');
                }
            }
            out
        }
        Format::Json => {
            let edges: Vec<Value> = g
                .edges()
                .iter()
                .enumerate()
                .map(|(e, &(u, v))| {
                    let mut row = Map::new();
                    row.insert("u".into(), json!(u));
                    row.insert("v".into(), json!(v));
                    for (f, col) in &edge_cols {
                        row.insert(f.to_string(), num(col[e]));
                    }
                    Value::Object(row)
                })
                .collect();
            let nodes: Vec<Value> = (0..g.n_nodes())
                .map(|v| {
                    let mut row = Map::new();
                    row.insert("node".into(), json!(v));
                    for (f, col) in &node_cols {
                        row.insert(f.to_string(), num(col[v]));
                    }
                    Value::Object(row)
                })
                .collect();
            let mut doc = Map::new();
            if !edge_cols.is_empty() {
                doc.insert("edges".into(), Value::Array(edges));
            }
            if !node_cols.is_empty() {
                doc.insert("nodes".into(), Value::Array(nodes));
            }
            pretty(&Value::Object(doc))
        }
    };
    emit(opts.out.as_deref(), &text)
}

fn single<T: Copy>(values: &[T], default: Option<T>, flag: &str) -> Result<T> {
    match (values, default) {
        ([one], _) => Ok(*one),
        ([], Some(d)) => Ok(d),
        ([], None) => Err(usage(format!("{flag} is required"))),
        _ => Err(usage(format!("{flag} takes a single value here"))),
    }
}

fn diagram_json(d: &PersistenceDiagram, spec: &FiltrationSpec, keep_zero: bool) -> String {
    let points: Vec<Value> = d
        .points()
        .iter()
        .filter(|p| keep_zero || p.death > p.birth)
        .map(|p| json!({"dim": p.dim, "birth": num(p.birth), "death": num(p.death)}))
        .collect();
    pretty(&json!({"filtration": spec.filtration, "k": spec.k, "points": points}))
}

pub fn ph(opts: &Options, path: &Path, index: usize, keep_zero: bool, dump: Option<&Path>) -> Result<()> {
    let filtration = single(&opts.filtrations, None, "--filtration")?;
    let k = single(&opts.k, Some(1), "--k")?;
    let spec = opts.spec(filtration, k);
    let g = Graph::read(path, index)?;
    if g.n_nodes() == 0 {
        return Err(motifph::Error::Input(format!("{}: graph has no nodes", path.display())).into());
    }
    let weighting = compute_weighting(&g, &spec);
    let complex = build_complex(&g, &weighting, spec.node_rule, k);
    log::info!("complex: {} simplices", complex.len());
    let diagram = compute_persistence(&complex);
    if let Some(p) = dump {
        emit(Some(p), &complex.dump())?;
    }
    let text = match opts.format {
        Format::Csv => diagram.to_csv(keep_zero),
        Format::Json => diagram_json(&diagram, &spec, keep_zero),
    };
    emit(opts.out.as_deref(), &text)
}

/// Load a manifest with command-line overrides applied.
fn load_manifest(opts: &Options, path: &Path) -> Result<LoadedManifest> {
    let mut loaded = LoadedManifest::load(path)?;
    let m = &mut loaded.manifest;
    if !opts.filtrations.is_empty() {
        m.filtrations = motifph::pipelines::manifest::FiltrationSelection::List(opts.filtrations.clone());
    }
    if !opts.k.is_empty() {
        m.k = opts.k.clone();
    }
    if let Some(seed) = opts.seed {
        m.seed = seed;
    }
    if let Some(rule) = opts.node_rule {
        m.node_rule = rule;
    }
    if let Some(set) = opts.orbit_set {
        m.orbit_set = set;
    }
    m.validate()?;
    Ok(loaded)
}

fn output_dir(opts: &Options, loaded: &LoadedManifest) -> PathBuf {
    opts.out.clone().unwrap_or_else(|| loaded.output_dir())
}

fn table_name(loaded: &LoadedManifest) -> String {
    if loaded.manifest.name.is_empty() {
        loaded
            .path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    } else {
        loaded.manifest.name.clone()
    }
}

fn finish(mut out: OutputSet, mut meta: RunMetadata) -> Result<()> {
    meta.outputs = out.names();
    meta.outputs.push("run.json".into());
    out.write("run.json", &meta.to_json())?;
    out.commit();
    Ok(())
}

fn named_pairs(loaded: &LoadedManifest) -> Result<Vec<NamedPair>> {
    let pairs: Vec<NamedPair> = loaded
        .pairs()?
        .into_iter()
        .map(|(left_id, right_id, pair)| NamedPair {
            left_id,
            right_id,
            pair,
        })
        .collect();
    if pairs.is_empty() {
        return Err(motifph::Error::Input("manifest yields no pairs".into()).into());
    }
    Ok(pairs)
}

pub fn iso(opts: &Options, path: &Path) -> Result<()> {
    let loaded = load_manifest(opts, path)?;
    let m = &loaded.manifest;
    let pairs = named_pairs(&loaded)?;
    let (sweep, skipped) = m.sweep();
    for (f, k) in &skipped {
        log::info!("skipping {f} at k={k}");
    }
    let iso_opts = IsoOptions {
        node_rule: m.node_rule,
        orbits: m.orbit_set.into(),
    };
    let report = iso_gate(&pairs, &sweep, &skipped, iso_opts)?;
    for r in &report.rates {
        log::info!("{} k={}: {:.2}", r.filtration, r.k, r.rate());
    }

    let mut out = OutputSet::create(&output_dir(opts, &loaded))?;
    match opts.format {
        Format::Csv => {
            out.write("pairs.csv", &report.pairs_csv())?;
            out.write("rates.csv", &report.rates_csv())?;
            out.write("table.csv", &report.table_csv(&table_name(&loaded)))?;
        }
        Format::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "pair": r.pair,
                        "left": r.left,
                        "right": r.right,
                        "label": r.label,
                        "filtration": r.filtration,
                        "k": r.k,
                        "dim": r.verdict.dim,
                        "distance": num(r.verdict.distance),
                        "distinct": r.verdict.distinct,
                    })
                })
                .collect();
            let rates: Vec<Value> = report
                .rates
                .iter()
                .map(|r| {
                    json!({"filtration": r.filtration, "k": r.k, "pairs": r.pairs,
                           "distinct": r.distinct, "rate": r.rate()})
                })
                .collect();
            let skipped: Vec<Value> = report
                .skipped
                .iter()
                .map(|(f, k)| json!({"filtration": f, "k": k}))
                .collect();
            out.write("iso.json", &pretty(&json!({"pairs": rows, "rates": rates, "skipped": skipped})))?;
        }
    }
    let meta = RunMetadata::new(
        "iso",
        loaded.sha256.clone(),
        json!({
            "name": table_name(&loaded),
            "filtrations": m.filtrations.resolve(),
            "k": m.k,
            "node_rule": m.node_rule,
            "orbit_set": m.orbit_set,
            "pairs": pairs.len(),
        }),
    );
    finish(out, meta)
}

pub fn sensitivity(opts: &Options, path: &Path, runs: Option<usize>, steps: Option<usize>) -> Result<()> {
    let loaded = load_manifest(opts, path)?;
    let m = &loaded.manifest;
    let mut cfg = m
        .sensitivity
        .ok_or_else(|| usage(format!("{}: manifest has no sensitivity section", path.display())))?;
    if let Some(r) = opts.pick(runs, "runs")? {
        cfg.runs = r;
    }
    if let Some(s) = opts.pick(steps, "steps")? {
        cfg.steps = s;
    }
    let filtrations = m.filtrations.resolve();
    let table = sensitivity_run(&cfg, &filtrations, m.seed, m.node_rule)?;
    let noops: usize = table.noop_steps.iter().map(Vec::len).sum();
    if noops > 0 {
        log::warn!("{noops} rewiring steps found no valid swap and left the graph unchanged");
    }

    let mut out = OutputSet::create(&output_dir(opts, &loaded))?;
    match opts.format {
        Format::Csv => {
            out.write("sensitivity_summary.csv", &table.summary_csv())?;
            out.write("sensitivity_runs.csv", &table.runs_csv())?;
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&table)?;
            s.push('\n');
            out.write("sensitivity.json", &s)?;
        }
    }
    let mut meta = RunMetadata::new(
        "sensitivity",
        loaded.sha256.clone(),
        json!({
            "generator": cfg.generator,
            "perturbation": cfg.perturbation,
            "runs": cfg.runs,
            "steps": cfg.steps,
            "seed": m.seed,
            "filtrations": filtrations,
            "node_rule": m.node_rule,
            "noop_steps": noops,
        }),
    );
    meta.seeds = table.seeds.clone();
    finish(out, meta)
}

pub fn egodist(opts: &Options, path: &Path) -> Result<()> {
    let loaded = load_manifest(opts, path)?;
    let pairs = named_pairs(&loaded)?;
    let params = EgoParams::default();
    let distances: Vec<f64> = pairs
        .par_iter()
        .map(|p| ego_distance(&p.pair.left, &p.pair.right, &params))
        .collect();
    let verdict = |d: f64| if ego_distinct(d) { "distinct" } else { "indistinguishable" };

    let mut out = OutputSet::create(&output_dir(opts, &loaded))?;
    match opts.format {
        Format::Csv => {
            let mut csv = String::from("pair,left,right,label,distance,verdict\n");
            for (i, (p, d)) in pairs.iter().zip(&distances).enumerate() {
                writeln!(
                    csv,
                    "{i},{},{},{},{d},{}",
                    p.left_id,
                    p.right_id,
                    p.pair.label.as_str(),
                    verdict(*d)
                )?;
            }
            out.write("ego.csv", &csv)?;
        }
        Format::Json => {
            let rows: Vec<Value> = pairs
                .iter()
                .zip(&distances)
                .enumerate()
                .map(|(i, (p, &d))| {
                    json!({"pair": i, "left": p.left_id, "right": p.right_id, "label": p.pair.label,
                           "distance": num(d), "distinct": ego_distinct(d)})
                })
                .collect();
            out.write("ego.json", &pretty(&Value::Array(rows)))?;
        }
    }
    let distinct = distances.iter().filter(|&&d| ego_distinct(d)).count();
    let unsound = pairs
        .iter()
        .zip(&distances)
        .filter(|(p, &d)| p.pair.label == PairLabel::Isomorphic && ego_distinct(d))
        .count();
    if unsound > 0 {
        log::warn!("{unsound} pairs labeled isomorphic were separated by the ego distance");
    }
    log::info!("ego distance separates {distinct} of {} pairs", pairs.len());
    let meta = RunMetadata::new(
        "egodist",
        loaded.sha256.clone(),
        json!({"cap": "1/2", "step": "1/100", "bins": params.bins(), "pairs": pairs.len(), "distinct": distinct}),
    );
    finish(out, meta)
}

pub fn export(
    opts: &Options,
    path: &Path,
    rows: Option<usize>,
    cols: Option<usize>,
    bandwidth: Option<f64>,
) -> Result<()> {
    let loaded = load_manifest(opts, path)?;
    let m = &loaded.manifest;
    let graphs: Vec<(String, Graph)> = loaded.all_graphs().map(|g| (g.id.clone(), g.graph.clone())).collect();
    if graphs.is_empty() {
        return Err(motifph::Error::Input("manifest datasets hold no graphs".into()).into());
    }
    let mut params = m.image.unwrap_or_default();
    if let Some(r) = opts.pick(rows, "rows")? {
        params.rows = r;
    }
    if let Some(c) = opts.pick(cols, "cols")? {
        params.cols = c;
    }
    if let Some(b) = opts.pick(bandwidth, "bandwidth")? {
        if !(b > 0.0 && b.is_finite()) {
            return Err(usage("--bandwidth must be positive"));
        }
        params.bandwidth = Some(b);
    }
    let (sweep, skipped) = m.sweep();
    for (f, k) in &skipped {
        log::info!("skipping {f} at k={k}");
    }

    let mut out = OutputSet::create(&output_dir(opts, &loaded))?;
    let mut grids = Vec::new();
    for &(f, k) in &sweep {
        let spec = FiltrationSpec {
            node_rule: m.node_rule,
            orbits: m.orbit_set.into(),
            ..FiltrationSpec::new(f, k)
        };
        let table = export_features(&graphs, &spec, &params)?;
        let stem = format!("features_{}_k{k}", f.abbrev());
        match opts.format {
            Format::Csv => out.write(&format!("{stem}.csv"), &table.to_csv())?,
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&table)?;
                s.push('\n');
                out.write(&format!("{stem}.json"), &s)?
            }
        };
        grids.push(json!({
            "filtration": f,
            "k": k,
            "grid": table.grid,
            "bandwidth": table.bandwidth,
            "essential_death": table.essential_death,
        }));
    }
    let meta = RunMetadata::new(
        "export",
        loaded.sha256.clone(),
        json!({
            "image": params,
            "graphs": graphs.len(),
            "node_rule": m.node_rule,
            "orbit_set": m.orbit_set,
            "tables": grids,
        }),
    );
    finish(out, meta).context("writing run metadata")
}
