//! Success-rate sweeps: for each filtration and expansion level, the
//! fraction of pairs whose diagrams are told apart.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::classic::OrbitSet;
use crate::error::Error;
use crate::filtration::{Filtration, FiltrationSpec, NodeRule};
use crate::graph::{Graph, GraphPair, PairLabel};
use crate::pipelines::Combination;
use crate::persistence::{bottleneck_all_dims, diagram_for, Verdict, DISTINCT_THRESHOLD};

/// A pair to compare, with display ids.
#[derive(Clone, Debug)]
pub struct NamedPair {
    pub left_id: String,
    pub right_id: String,
    pub pair: GraphPair,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairResult {
    pub pair: usize,
    pub left: String,
    pub right: String,
    pub label: PairLabel,
    pub filtration: Filtration,
    pub k: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RateRow {
    pub filtration: Filtration,
    pub k: usize,
    pub pairs: usize,
    pub distinct: usize,
}

impl RateRow {
    pub fn rate(&self) -> f64 {
        if self.pairs == 0 {
            0.0
        } else {
            self.distinct as f64 / self.pairs as f64
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoReport {
    pub rows: Vec<PairResult>,
    pub rates: Vec<RateRow>,
    pub skipped: Vec<Combination>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct IsoOptions {
    pub node_rule: NodeRule,
    pub orbits: OrbitSet,
}

/// Run every `(filtration, k)` in `sweep` over `pairs`. Each distinct graph
/// is reduced once per combination. A pair labeled isomorphic that comes
/// out distinct aborts with [`Error::Soundness`].
pub fn iso_gate(
    pairs: &[NamedPair],
    sweep: &[(Filtration, usize)],
    skipped: &[(Filtration, usize)],
    opts: IsoOptions,
) -> Result<IsoReport, Error> {
    if pairs.is_empty() {
        return Err(Error::Input("no pairs to compare".into()));
    }
    // deduplicate graphs
    let mut slot: HashMap<&Graph, usize> = HashMap::new();
    let mut unique: Vec<&Graph> = Vec::new();
    let mut sides = Vec::with_capacity(pairs.len());
    for p in pairs {
        let mut id = |g| {
            *slot.entry(g).or_insert_with(|| {
                unique.push(g);
                unique.len() - 1
            })
        };
        sides.push((id(&p.pair.left), id(&p.pair.right)));
    }

    let mut rows = Vec::new();
    let mut rates = Vec::new();
    for &(filtration, k) in sweep {
        let spec = FiltrationSpec {
            node_rule: opts.node_rule,
            orbits: opts.orbits,
            ..FiltrationSpec::new(filtration, k)
        };
        let diagrams: Vec<_> = unique.par_iter().map(|g| diagram_for(g, &spec)).collect();
        let verdicts: Vec<Verdict> = sides
            .par_iter()
            .map(|&(a, b)| {
                let (dim, distance) = bottleneck_all_dims(&diagrams[a], &diagrams[b]);
                Verdict {
                    distinct: distance > DISTINCT_THRESHOLD,
                    dim,
                    distance,
                }
            })
            .collect();
        let mut distinct = 0;
        for (i, (p, verdict)) in pairs.iter().zip(verdicts).enumerate() {
            if verdict.distinct && p.pair.label == PairLabel::Isomorphic {
                return Err(Error::Soundness(format!(
                    "pair {i} ({} vs {}) is labeled isomorphic but {filtration} at k={k} separates it (distance {})",
                    p.left_id, p.right_id, verdict.distance
                )));
            }
            distinct += usize::from(verdict.distinct);
            rows.push(PairResult {
                pair: i,
                left: p.left_id.clone(),
                right: p.right_id.clone(),
                label: p.pair.label,
                filtration,
                k,
                verdict,
            });
        }
        rates.push(RateRow {
            filtration,
            k,
            pairs: pairs.len(),
            distinct,
        });
    }
    Ok(IsoReport {
        rows,
        rates,
        skipped: skipped.to_vec(),
    })
}

impl IsoReport {
    /// `pair,left,right,label,filtration,k,dim,distance,verdict`
    pub fn pairs_csv(&self) -> String {
        let mut out = String::from("pair,left,right,label,filtration,k,dim,distance,verdict\n");
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                r.pair,
                r.left,
                r.right,
                r.label.as_str(),
                r.filtration,
                r.k,
                r.verdict.dim,
                r.verdict.distance,
                if r.verdict.distinct { "distinct" } else { "indistinguishable" }
            )
            .unwrap();
        }
        out
    }

    /// `filtration,k,pairs,distinct,rate`; skipped combinations have empty
    /// counts.
    pub fn rates_csv(&self) -> String {
        let mut out = String::from("filtration,k,pairs,distinct,rate\n");
        for r in &self.rates {
            writeln!(out, "{},{},{},{},{:.2}", r.filtration, r.k, r.pairs, r.distinct, r.rate()).unwrap();
        }
        for (f, k) in &self.skipped {
            writeln!(out, "{f},{k},,,").unwrap();
        }
        out
    }

    /// One row per k, one column per filtration, two-decimal rates; `-` for
    /// skipped combinations.
    pub fn table_csv(&self, name: &str) -> String {
        let mut filtrations: Vec<Filtration> = Vec::new();
        let mut levels: Vec<usize> = Vec::new();
        for (f, k) in self
            .rates
            .iter()
            .map(|r| (r.filtration, r.k))
            .chain(self.skipped.iter().copied())
        {
            if !filtrations.contains(&f) {
                filtrations.push(f);
            }
            if !levels.contains(&k) {
                levels.push(k);
            }
        }
        filtrations.sort();
        levels.sort();
        let mut out = String::from("data,k");
        for f in &filtrations {
            write!(out, ",{f}").unwrap();
        }
        out.push('\n');
        for k in levels {
            write!(out, "{name},{k}").unwrap();
            for f in &filtrations {
                match self.rates.iter().find(|r| r.filtration == *f && r.k == k) {
                    Some(r) => write!(out, ",{:.2}", r.rate()).unwrap(),
                    None => out.push_str(",-"),
                }
            }
            out.push('\n');
        }
        out
    }
}
