//! Replays an edge stream against a maintained state, writing per-batch
//! metrics and, optionally, the change log.

use std::collections::HashMap;
use std::io::Write;
use std::time::Duration;

use bicliq_core::oracle::baseline_diff;
use bicliq_core::{BipartiteGraph, ChangeSet, Edge, EdgeBatch, MaintainedState, SizeThreshold, StoreMode};
use serde::Serialize;

use crate::error::CliError;
use crate::format::{Labels, OpKind, StreamOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Add,
    Delete,
    Mixed,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Add => "add",
            Mode::Delete => "delete",
            Mode::Mixed => "mixed",
        }
    }
}

/// One CSV row. Field order is the column order.
#[derive(Debug, Clone, Serialize)]
pub struct BatchMetrics {
    pub iteration: usize,
    pub batch_size: usize,
    pub num_new: usize,
    pub num_subsumed: usize,
    pub change_edges: usize,
    pub time_new_ms: f64,
    pub time_sub_ms: f64,
    pub time_total_ms: f64,
    pub store_count: usize,
    pub graph_edges: usize,
}

pub struct Session {
    pub state: MaintainedState,
    pub labels: Labels,
    pub mode: Mode,
    pub verify: bool,
}

/// Milliseconds, rounded to the microsecond.
fn ms(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

impl Session {
    pub fn new(graph: BipartiteGraph, labels: Labels, threshold: SizeThreshold, signature: StoreMode, mode: Mode, verify: bool) -> Self {
        Session {
            state: MaintainedState::new(graph, threshold, signature),
            labels,
            mode,
            verify,
        }
    }

    fn describe(&self, op: &StreamOp) -> String {
        let at = if op.line > 0 { format!("line {}: ", op.line) } else { String::new() };
        format!("{at}{} {}", op.kind.symbol(), self.labels.show_edge(op.edge))
    }

    /// Replays `ops` in order against the current graph and returns the net
    /// additions and deletions.
    fn net_change(&self, ops: &[StreamOp]) -> Result<(EdgeBatch, EdgeBatch), CliError> {
        let g = self.state.graph();
        let mut present: HashMap<Edge, bool> = HashMap::new();
        let mut order = Vec::new();
        for op in ops {
            match (self.mode, op.kind) {
                (Mode::Add, OpKind::Remove) | (Mode::Delete, OpKind::Add) => {
                    return Err(CliError::Stream(format!(
                        "{}: operation not allowed in {} mode",
                        self.describe(op),
                        self.mode.name()
                    )));
                }
                _ => {}
            }
            let now = *present.entry(op.edge).or_insert_with(|| {
                order.push(op.edge);
                g.has_edge(op.edge)
            });
            match (op.kind, now) {
                (OpKind::Add, true) => {
                    return Err(CliError::Stream(format!("{}: edge already present", self.describe(op))))
                }
                (OpKind::Remove, false) => {
                    return Err(CliError::Stream(format!("{}: edge not present", self.describe(op))))
                }
                _ => {}
            }
            present.insert(op.edge, op.kind == OpKind::Add);
        }
        let (mut adds, mut dels) = (Vec::new(), Vec::new());
        for e in order {
            match (g.has_edge(e), present[&e]) {
                (false, true) => adds.push(e),
                (true, false) => dels.push(e),
                _ => {}
            }
        }
        Ok((adds.into(), dels.into()))
    }

    /// Applies one batch of stream operations.
    pub fn step(&mut self, iteration: usize, ops: &[StreamOp]) -> Result<(ChangeSet, BatchMetrics), CliError> {
        let (adds, dels) = self.net_change(ops)?;
        let before = self.verify.then(|| self.state.graph().clone());
        let result = match self.mode {
            Mode::Add => self.state.add_batch_timed(&adds),
            Mode::Delete => self.state.remove_batch_timed(&dels),
            Mode::Mixed => self.state.apply_mixed_timed(&adds, &dels),
        };
        let (cs, times) = result.map_err(|e| CliError::Stream(format!("batch {iteration}: {e}")))?;
        let cs = cs.sorted();
        if let Some(before) = before {
            let expected = baseline_diff(&before, self.state.graph(), self.state.threshold()).sorted();
            if expected != cs {
                return Err(CliError::Verify(format!(
                    "batch {iteration}: engine reported {} new / {} subsumed, baseline {} / {}",
                    cs.new.len(),
                    cs.del.len(),
                    expected.new.len(),
                    expected.del.len()
                )));
            }
        }
        let metrics = BatchMetrics {
            iteration,
            batch_size: ops.len(),
            num_new: cs.new.len(),
            num_subsumed: cs.del.len(),
            change_edges: cs.change_edges(),
            time_new_ms: ms(times.enumerate),
            time_sub_ms: ms(times.split),
            time_total_ms: ms(times.total),
            store_count: self.state.store().len(),
            graph_edges: self.state.graph().num_edges(),
        };
        Ok((cs, metrics))
    }

    /// Processes `ops` in batches of `batch_size`.
    pub fn run<M: Write, C: Write>(
        &mut self,
        ops: &[StreamOp],
        batch_size: usize,
        metrics: M,
        mut changes: Option<C>,
    ) -> Result<usize, CliError> {
        let mut csv = csv::WriterBuilder::new().has_headers(false).from_writer(metrics);
        csv.write_record([
            "iteration",
            "batch_size",
            "num_new",
            "num_subsumed",
            "change_edges",
            "time_new_ms",
            "time_sub_ms",
            "time_total_ms",
            "store_count",
            "graph_edges",
        ])
        .map_err(csv_error)?;
        let mut batches = 0;
        for (i, chunk) in ops.chunks(batch_size).enumerate() {
            let (cs, row) = self.step(i + 1, chunk)?;
            csv.serialize(&row).map_err(csv_error)?;
            if let Some(out) = changes.as_mut() {
                self.log_changes(out, i + 1, &cs)
                    .map_err(|e| CliError::io("change log", e))?;
            }
            batches += 1;
        }
        csv.flush().map_err(|e| CliError::io("metrics", e))?;
        Ok(batches)
    }

    fn log_changes<C: Write>(&self, out: &mut C, iteration: usize, cs: &ChangeSet) -> std::io::Result<()> {
        for b in &cs.new {
            writeln!(out, "N {iteration} {}", self.labels.show_biclique(b))?;
        }
        for b in &cs.del {
            writeln!(out, "S {iteration} {}", self.labels.show_biclique(b))?;
        }
        Ok(())
    }
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::io("metrics", e.into())
}
