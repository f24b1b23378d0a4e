use serde::{Deserialize, Serialize};

use crate::metric::HyperbolicityReport;
use crate::towers::{CompareReport, TowerReport, VERDICT_NOTE};

pub const SCHEMA_VERSION: u32 = 1;

/// Machine-readable result of one experiment.
///
/// Keys are emitted in declaration order. δ values are doubled integers
/// (`_x2` suffix); fields that a command does not produce are `null`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub command: String,
    pub engine: String,
    pub radius: Option<u32>,
    pub core_radius: Option<u32>,
    pub n_vertices: Option<usize>,
    pub core_size: Option<usize>,
    pub delta_base_x2: Option<i64>,
    pub delta_all_x2: Option<i64>,
    pub delta_slim_x2: Option<i64>,
    pub delta_naive_x2: Option<i64>,
    pub witness_base: Option<Vec<usize>>,
    pub witness_all: Option<Vec<usize>>,
    pub witness_slim: Option<Vec<usize>>,
    pub method: String,
    pub growth: Option<Vec<usize>>,
    pub levels: Option<Vec<LevelRow>>,
    pub verdict: Option<String>,
    pub verdict_note: Option<String>,
    pub truncated: Option<String>,
    pub compare: Option<CompareSection>,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRow {
    pub level: usize,
    pub order: u64,
    pub radius: u32,
    pub n_vertices: usize,
    pub core_size: usize,
    pub delta_base_x2: i64,
    pub delta_all_x2: i64,
    pub delta_slim_x2: Option<i64>,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareSection {
    pub left: String,
    pub right: String,
    pub delta_left_x2: i64,
    pub delta_right_x2: i64,
    pub delta_product_x2: i64,
    pub consistent: bool,
    pub gap_x2: i64,
}

impl ReportDocument {
    pub fn empty(command: &str, engine: String) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            engine,
            radius: None,
            core_radius: None,
            n_vertices: None,
            core_size: None,
            delta_base_x2: None,
            delta_all_x2: None,
            delta_slim_x2: None,
            delta_naive_x2: None,
            witness_base: None,
            witness_all: None,
            witness_slim: None,
            method: String::new(),
            growth: None,
            levels: None,
            verdict: None,
            verdict_note: None,
            truncated: None,
            compare: None,
            elapsed_ms: 0,
        }
    }

    pub fn fill_delta(&mut self, rep: &HyperbolicityReport) {
        self.core_size = Some(rep.core_size);
        self.delta_base_x2 = Some(rep.delta_base.doubled());
        self.delta_all_x2 = rep.delta_all.map(|v| v.doubled());
        self.delta_slim_x2 = rep.delta_slim.map(|v| v.doubled());
        self.delta_naive_x2 = rep.delta_naive.map(|v| v.doubled());
        self.witness_base = Some(rep.witness_base.to_vec());
        self.witness_all = rep.witness_all.map(|w| w.to_vec());
        self.witness_slim = rep.witness_slim.map(|w| w.to_vec());
        self.method = rep.method.clone();
    }

    pub fn fill_tower(&mut self, rep: &TowerReport) {
        self.levels = Some(
            rep.levels
                .iter()
                .map(|l| LevelRow {
                    level: l.level,
                    order: l.order,
                    radius: l.radius,
                    n_vertices: l.n_vertices,
                    core_size: l.core_size,
                    delta_base_x2: l.delta_base.doubled(),
                    delta_all_x2: l.delta_all.doubled(),
                    delta_slim_x2: l.delta_slim.map(|v| v.doubled()),
                    elapsed_ms: l.elapsed.as_millis() as u64,
                })
                .collect(),
        );
        self.verdict = Some(rep.verdict.to_string());
        self.verdict_note = Some(VERDICT_NOTE.into());
        self.truncated = rep
            .truncated
            .as_ref()
            .map(|(level, why)| format!("stopped at level {level}: {why}"));
    }

    pub fn fill_compare(&mut self, rep: &CompareReport) {
        self.compare = Some(CompareSection {
            left: rep.left.to_string(),
            right: rep.right.to_string(),
            delta_left_x2: rep.delta_left.doubled(),
            delta_right_x2: rep.delta_right.doubled(),
            delta_product_x2: rep.delta_product.doubled(),
            consistent: rep.consistent,
            gap_x2: rep.gap.doubled(),
        });
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    /// Tower companion: `level,order,delta_all_x2`.
    pub fn tower_csv(&self) -> Option<String> {
        let levels = self.levels.as_ref()?;
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(["level", "order", "delta_all_x2"]).ok()?;
        for l in levels {
            w.write_record([
                l.level.to_string(),
                l.order.to_string(),
                l.delta_all_x2.to_string(),
            ])
            .ok()?;
        }
        String::from_utf8(w.into_inner().ok()?).ok()
    }

    /// Growth companion: `radius,size`.
    pub fn growth_csv(&self) -> Option<String> {
        let growth = self.growth.as_ref()?;
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(["radius", "size"]).ok()?;
        for (r, n) in growth.iter().enumerate() {
            w.write_record([r.to_string(), n.to_string()]).ok()?;
        }
        String::from_utf8(w.into_inner().ok()?).ok()
    }
}
