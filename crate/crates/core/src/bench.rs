//! Timing harness: measure the counting-polynomial routines on seeded
//! random graphs and render the classic `n / samples / mean seconds` table.

use std::time::Instant;

use crate::fcalc::{self, derive_seed};
use crate::generators::erdos_renyi;
use crate::graph::Graph;
use crate::{Error, Result};

/// Which route to time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchAlgo {
    Bruteforce,
    GaussBonnet,
    PoincareHopf,
}

impl BenchAlgo {
    fn run(self, g: &Graph, seed: u64) {
        match self {
            BenchAlgo::Bruteforce => {
                fcalc::f_vector_bruteforce(g);
            }
            BenchAlgo::GaussBonnet => {
                fcalc::f_function_gb(g).expect("integer coefficients on valid graphs");
            }
            BenchAlgo::PoincareHopf => {
                fcalc::f_function_ph(g, seed);
            }
        }
    }
}

/// One table row: vertex count, sample count, mean wall-clock seconds.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub samples: usize,
    pub mean_seconds: f64,
}

/// Time `algo` on `samples` fresh `ER(n, p)` graphs for each `n`, after one
/// untimed warmup per size.  Graphs and algorithm randomness both derive
/// from `seed`, so repeated runs time identical inputs (the seconds still
/// vary with the machine, of course).
pub fn run_bench(
    ns: &[usize],
    p: f64,
    samples: usize,
    algo: BenchAlgo,
    seed: u64,
) -> Result<Vec<BenchRow>> {
    if samples == 0 {
        return Err(Error::InvalidParameter(
            "need at least one sample per size".to_string(),
        ));
    }
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let instance = |i: u64| -> Result<(Graph, u64)> {
            let gseed = derive_seed(seed, [n as u64, i]);
            Ok((erdos_renyi(n, p, gseed)?, derive_seed(gseed, [1])))
        };

        let (g, s) = instance(0)?;
        algo.run(&g, s);

        let mut total = 0.0;
        for i in 0..samples {
            let (g, s) = instance(i as u64)?;
            let start = Instant::now();
            algo.run(&g, s);
            total += start.elapsed().as_secs_f64();
        }
        rows.push(BenchRow {
            n,
            samples,
            mean_seconds: total / samples as f64,
        });
    }
    Ok(rows)
}

/// Render rows as TSV with a header line.
pub fn render_tsv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n\tsamples\tmean_seconds\n");
    for row in rows {
        out.push_str(&format!(
            "{}\t{}\t{:.6}\n",
            row.n, row.samples, row.mean_seconds
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn produces_one_row_per_size() {
        let rows = run_bench(&[5, 7], 0.5, 2, BenchAlgo::PoincareHopf, 11).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!((rows[0].n, rows[0].samples), (5, 2));
        assert_eq!((rows[1].n, rows[1].samples), (7, 2));
        assert!(rows.iter().all(|r| r.mean_seconds >= 0.0));

        for algo in [BenchAlgo::Bruteforce, BenchAlgo::GaussBonnet] {
            let rows = run_bench(&[5], 0.5, 1, algo, 11).unwrap();
            assert_eq!(rows.len(), 1);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(
            run_bench(&[5], 0.5, 0, BenchAlgo::PoincareHopf, 0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            run_bench(&[5], 1.5, 1, BenchAlgo::PoincareHopf, 0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn tsv_has_the_table_shape() {
        let rows = vec![
            BenchRow {
                n: 10,
                samples: 5,
                mean_seconds: 0.001234,
            },
            BenchRow {
                n: 20,
                samples: 5,
                mean_seconds: 0.5,
            },
        ];
        let tsv = render_tsv(&rows);
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines[0], "n\tsamples\tmean_seconds");
        assert_eq!(lines[1], "10\t5\t0.001234");
        assert_eq!(lines[2], "20\t5\t0.500000");
        assert_eq!(lines.len(), 3);

        // Every data cell parses back as a number.
        for line in &lines[1..] {
            let cells: Vec<&str> = line.split('\t').collect();
            assert_eq!(cells.len(), 3);
            cells[0].parse::<usize>().unwrap();
            cells[1].parse::<usize>().unwrap();
            cells[2].parse::<f64>().unwrap();
        }
    }
}
