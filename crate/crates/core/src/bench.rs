//! Differential timing of enumeration strategies and solver pruning.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::assign::{ListAssignment, Strategy};
use crate::choose::{decide, ChoiceMode, DecideOptions, Status};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub strategy: Strategy,
    pub pruning: bool,
    pub status: Status,
    pub assignments_checked: u64,
    pub solver_nodes: u64,
    pub wall_ms: f64,
    pub witness: Option<ListAssignment>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub graph: String,
    pub k: usize,
    pub mode: ChoiceMode,
    pub rows: Vec<BenchRow>,
    /// All rows reached the same status and the same witness.
    pub agree: bool,
}

pub fn bench(
    g: &Graph,
    name: &str,
    k: usize,
    mode: ChoiceMode,
    strategies: &[Strategy],
    pruning: &[bool],
    base: &DecideOptions,
) -> BenchReport {
    let mut rows = Vec::new();
    for &strategy in strategies {
        for &p in pruning {
            let options = DecideOptions { strategy, pruning: p, ..*base };
            let started = Instant::now();
            let v = decide(g, k, mode, &options);
            rows.push(BenchRow {
                strategy,
                pruning: p,
                status: v.status,
                assignments_checked: v.assignments_checked,
                solver_nodes: v.solver_nodes,
                wall_ms: started.elapsed().as_secs_f64() * 1e3,
                witness: v.witness,
            });
        }
    }
    let agree = rows.windows(2).all(|w| w[0].status == w[1].status && w[0].witness == w[1].witness);
    BenchReport { graph: name.to_string(), k, mode, rows, agree }
}

pub fn render_table(report: &BenchReport) -> String {
    let mut out = format!("{} k={} mode={:?}\n", report.graph, report.k, report.mode);
    out.push_str(&format!(
        "{:<18} {:>7} {:>14} {:>12} {:>14} {:>10}\n",
        "strategy", "pruning", "status", "assignments", "solver nodes", "ms"
    ));
    for row in &report.rows {
        out.push_str(&format!(
            "{:<18} {:>7} {:>14} {:>12} {:>14} {:>10.1}\n",
            row.strategy.tag(),
            if row.pruning { "on" } else { "off" },
            format!("{:?}", row.status),
            row.assignments_checked,
            row.solver_nodes,
            row.wall_ms
        ));
    }
    out.push_str(if report.agree { "verdicts agree\n" } else { "FAULT: configurations disagree\n" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    const ALL: [Strategy; 2] = [Strategy::RestrictedGrowth, Strategy::CanonicalFilter];

    #[test]
    fn p5_strategies_agree() {
        let r = bench(&path(5), "P5", 2, ChoiceMode::Proportional, &ALL, &[true], &DecideOptions::default());
        assert!(r.agree);
        assert!(r.rows.iter().all(|row| row.status == Status::Choosable));
        assert!(r.rows[1].assignments_checked <= r.rows[0].assignments_checked);
    }

    #[test]
    fn c4_same_witness() {
        let c4 = cycle(4).unwrap();
        let r = bench(&c4, "C4", 2, ChoiceMode::Proportional, &ALL, &[true, false], &DecideOptions::default());
        assert!(r.agree);
        assert!(r.rows.iter().all(|row| row.witness == r.rows[0].witness && row.witness.is_some()));
    }
}
