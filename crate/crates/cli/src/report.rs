//! Serializable instrumentation reports for runs and benchmark sweeps.

use bipenum::EnumStats;
use serde::Serialize;

/// Edit tallies broken out by kind, plus their sum.
#[derive(Debug, Serialize)]
pub struct EditCounts {
    pub list_unlinks: u64,
    pub list_links: u64,
    pub flag_writes: u64,
    pub label_writes: u64,
    pub total: u64,
}

/// Instrumentation summary of one enumeration run.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub mode: &'static str,
    pub vertices: usize,
    pub edges: usize,
    pub degeneracy: usize,
    pub solutions: u64,
    pub wall_ms: f64,
    pub edits: EditCounts,
    /// Total edits divided by solutions (0 when nothing was emitted).
    pub edits_per_solution: f64,
    /// Total edits divided by degeneracy·solutions, with degeneracy clamped
    /// to at least 1 so edgeless graphs stay well-defined.
    pub edits_per_degeneracy_solution: f64,
    pub peak_log_entries: usize,
    pub live_units: usize,
}

impl RunReport {
    pub fn new(
        mode: &'static str,
        vertices: usize,
        edges: usize,
        degeneracy: usize,
        stats: &EnumStats,
        wall_ms: f64,
    ) -> RunReport {
        let total = stats.edits.total();
        let per_solution = if stats.solutions == 0 {
            0.0
        } else {
            total as f64 / stats.solutions as f64
        };
        RunReport {
            mode,
            vertices,
            edges,
            degeneracy,
            solutions: stats.solutions,
            wall_ms,
            edits: EditCounts {
                list_unlinks: stats.edits.list_unlinks,
                list_links: stats.edits.list_links,
                flag_writes: stats.edits.flag_writes,
                label_writes: stats.edits.label_writes,
                total,
            },
            edits_per_solution: per_solution,
            edits_per_degeneracy_solution: per_solution / degeneracy.max(1) as f64,
            peak_log_entries: stats.peak_log_entries,
            live_units: stats.live_units,
        }
    }

    /// One-line human-readable form, written to stderr after streaming runs.
    pub fn human_line(&self) -> String {
        format!(
            "{}: n={} m={} k={} solutions={} edits={} edits/solution={:.2} peak_log={} live_units={} wall_ms={:.3}",
            self.mode,
            self.vertices,
            self.edges,
            self.degeneracy,
            self.solutions,
            self.edits.total,
            self.edits_per_solution,
            self.peak_log_entries,
            self.live_units,
            self.wall_ms,
        )
    }
}

/// JSON shape for a whole `bench` sweep.
#[derive(Debug, Serialize)]
pub struct BenchReport {
    pub family: &'static str,
    pub mode: &'static str,
    pub seed: u64,
    pub cap: u64,
    pub rows: Vec<BenchRow>,
}

/// One size in a `bench` sweep.
#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub size: String,
    #[serde(flatten)]
    pub report: RunReport,
}
