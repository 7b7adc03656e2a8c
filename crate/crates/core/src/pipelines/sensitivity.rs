//! Perturbation sensitivity: how far the normalized dimension-0 diagram
//! drifts from its starting point as edges are rewired or removed.
//!
//! Run `r` uses seed `seed_base + r` for both the random graph and the
//! perturbation sequence (on separate generator streams).

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::error::Error;
use crate::filtration::{Filtration, FiltrationSpec, NodeRule};
use crate::graph::{generate, perturb_remove, perturb_rewire, Graph, GeneratorSpec};
use crate::persistence::{bottleneck, diagram_for, normalize_diagram, PersistenceDiagram, PersistencePoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Perturbation {
    Rewire,
    Remove,
}

impl Perturbation {
    pub fn as_str(self) -> &'static str {
        match self {
            Perturbation::Rewire => "rewire",
            Perturbation::Remove => "remove",
        }
    }
}

fn default_steps() -> usize {
    50
}

fn default_runs() -> usize {
    50
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SensitivityConfig {
    /// The seed inside is ignored; run seeds come from the base seed.
    pub generator: GeneratorSpec,
    pub perturbation: Perturbation,
    #[serde(default = "default_steps")]
    pub steps: usize,
    #[serde(default = "default_runs")]
    pub runs: usize,
}

impl SensitivityConfig {
    pub fn validate(&self) -> Result<(), Error> {
        self.generator.validate()?;
        if self.runs == 0 {
            return Err(Error::Parameter("sensitivity needs at least one run".into()));
        }
        Ok(())
    }
}

/// Distances per filtration, run and step.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SensitivityTable {
    pub filtrations: Vec<Filtration>,
    pub seeds: Vec<u64>,
    pub steps: usize,
    /// `distances[f][run][step]`, step 0 included.
    pub distances: Vec<Vec<Vec<f64>>>,
    /// Rewiring steps that could not be realized, per run.
    pub noop_steps: Vec<Vec<usize>>,
}

/// Normalized diagram with essential classes closed at 1, the end of the
/// normalized range, so that a change in the number of components costs a
/// finite amount.
pub fn sensitivity_diagram(g: &Graph, spec: &FiltrationSpec) -> PersistenceDiagram {
    let d = diagram_for(g, spec);
    let (normalized, _) = normalize_diagram(&d);
    let points = normalized
        .in_dim(0)
        .map(|p| PersistencePoint {
            death: if p.is_essential() { 1.0 } else { p.death },
            ..*p
        })
        .collect();
    PersistenceDiagram::new(points, 0)
}

pub fn sensitivity_run(
    cfg: &SensitivityConfig,
    filtrations: &[Filtration],
    seed_base: u64,
    node_rule: NodeRule,
) -> Result<SensitivityTable, Error> {
    cfg.validate()?;
    let seeds: Vec<u64> = (0..cfg.runs as u64).map(|r| seed_base.wrapping_add(r)).collect();
    let runs: Vec<(Vec<Vec<f64>>, Vec<usize>)> = seeds
        .par_iter()
        .map(|&seed| -> Result<_, Error> {
            let g = generate(&cfg.generator.with_seed(seed))?;
            let trajectory = match cfg.perturbation {
                Perturbation::Rewire => perturb_rewire(&g, cfg.steps, seed)?,
                Perturbation::Remove => perturb_remove(&g, cfg.steps, seed)?,
            };
            let per_filtration = filtrations
                .iter()
                .map(|&f| {
                    let spec = FiltrationSpec {
                        node_rule,
                        ..FiltrationSpec::new(f, 1)
                    };
                    let base = sensitivity_diagram(&trajectory.graphs[0], &spec);
                    trajectory
                        .graphs
                        .iter()
                        .map(|h| bottleneck(&base, &sensitivity_diagram(h, &spec), 0))
                        .collect()
                })
                .collect();
            Ok((per_filtration, trajectory.noop_steps))
        })
        .collect::<Result<_, Error>>()?;

    let mut distances = vec![Vec::with_capacity(cfg.runs); filtrations.len()];
    let mut noop_steps = Vec::with_capacity(cfg.runs);
    for (per_filtration, noops) in runs {
        for (slot, d) in distances.iter_mut().zip(per_filtration) {
            slot.push(d);
        }
        noop_steps.push(noops);
    }
    Ok(SensitivityTable {
        filtrations: filtrations.to_vec(),
        seeds,
        steps: cfg.steps,
        distances,
        noop_steps,
    })
}

/// Sample mean and standard deviation (n − 1 denominator; 0 for one value).
pub fn mean_sd(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PairedTest {
    pub mean_difference: f64,
    pub t: f64,
    pub df: f64,
    /// One-sided p-value for `mean(a − b) > 0`.
    pub p_value: f64,
}

/// One-sided paired t-test of `a > b`.
pub fn paired_t_greater(a: &[f64], b: &[f64]) -> PairedTest {
    assert_eq!(a.len(), b.len(), "paired samples must have equal length");
    assert!(a.len() >= 2, "paired test needs at least two pairs");
    let diffs: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    let (mean, sd) = mean_sd(&diffs);
    let n = diffs.len() as f64;
    let df = n - 1.0;
    if sd == 0.0 {
        let (t, p) = match mean.partial_cmp(&0.0) {
            Some(std::cmp::Ordering::Greater) => (f64::INFINITY, 0.0),
            Some(std::cmp::Ordering::Less) => (f64::NEG_INFINITY, 1.0),
            _ => (0.0, 0.5),
        };
        return PairedTest {
            mean_difference: mean,
            t,
            df,
            p_value: p,
        };
    }
    let t = mean / (sd / n.sqrt());
    let dist = StudentsT::new(0.0, 1.0, df).expect("df is positive");
    PairedTest {
        mean_difference: mean,
        t,
        df,
        p_value: dist.sf(t),
    }
}

impl SensitivityTable {
    pub fn index_of(&self, f: Filtration) -> Option<usize> {
        self.filtrations.iter().position(|&x| x == f)
    }

    /// Distances of filtration `f` at `step`, one per run.
    pub fn at_step(&self, f: Filtration, step: usize) -> Option<Vec<f64>> {
        self.index_of(f)
            .map(|i| self.distances[i].iter().map(|run| run[step]).collect())
    }

    /// `filtration,step,mean,sd,runs`
    pub fn summary_csv(&self) -> String {
        let mut out = String::from("filtration,step,mean,sd,runs\n");
        for (i, f) in self.filtrations.iter().enumerate() {
            for step in 0..=self.steps {
                let column: Vec<f64> = self.distances[i].iter().map(|run| run[step]).collect();
                let (mean, sd) = mean_sd(&column);
                writeln!(out, "{f},{step},{mean},{sd},{}", column.len()).unwrap();
            }
        }
        out
    }

    /// `filtration,run,seed,step,distance`
    pub fn runs_csv(&self) -> String {
        let mut out = String::from("filtration,run,seed,step,distance\n");
        for (i, f) in self.filtrations.iter().enumerate() {
            for (run, (seed, row)) in self.seeds.iter().zip(&self.distances[i]).enumerate() {
                for (step, d) in row.iter().enumerate() {
                    writeln!(out, "{f},{run},{seed},{step},{d}").unwrap();
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GeneratorModel;

    fn config(runs: usize) -> SensitivityConfig {
        SensitivityConfig {
            generator: GeneratorSpec {
                model: GeneratorModel::ErdosRenyi { p: 0.1 },
                n: 30,
                seed: 0,
            },
            perturbation: Perturbation::Remove,
            steps: 5,
            runs,
        }
    }

    #[test]
    fn step_zero_is_zero_and_runs_are_reproducible() {
        let fs = [Filtration::CycleSum, Filtration::Degree];
        let a = sensitivity_run(&config(3), &fs, 7, NodeRule::GlobalMin).unwrap();
        let b = sensitivity_run(&config(3), &fs, 7, NodeRule::GlobalMin).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.seeds, vec![7, 8, 9]);
        for f in &a.distances {
            for run in f {
                assert_eq!(run.len(), 6);
                assert_eq!(run[0], 0.0);
                assert!(run.iter().all(|d| d.is_finite()));
            }
        }
    }

    #[test]
    fn t_test_direction() {
        let a = [1.0, 2.0, 3.0, 4.0];
        let b = [0.5, 1.0, 2.9, 3.0];
        let t = paired_t_greater(&a, &b);
        assert!(t.mean_difference > 0.0 && t.p_value < 0.5);
        let r = paired_t_greater(&b, &a);
        assert!((t.p_value + r.p_value - 1.0).abs() < 1e-12);
        assert_eq!(paired_t_greater(&[1.0, 2.0], &[0.0, 1.0]).p_value, 0.0);
    }

    #[test]
    fn mean_and_sd() {
        let (m, s) = mean_sd(&[2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0]);
        assert_eq!(m, 5.0);
        assert!((s - (32.0f64 / 7.0).sqrt()).abs() < 1e-12);
    }
}
