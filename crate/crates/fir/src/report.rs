use std::fmt::Write as _;
use std::time::Instant;

use fir_core::criteria::{verdict, CriteriaError, CriterionReport, FINITE_CASE_NOTE};
use fir_core::oracle::{dixon_table, CharacterTable, OracleError};
use fir_core::FiniteGroup;
use serde::Serialize;
use thiserror::Error;

use crate::spec::{BuildError, GroupSpec};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("oracle disagrees with the criteria for {group}: oracle {oracle}, verdict {verdict}")]
    OracleDisagrees { group: String, oracle: bool, verdict: bool },
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CriteriaBlock {
    pub gaschuetz: bool,
    pub weisner: bool,
    pub akizuki: bool,
    pub verdict: bool,
    pub char: u32,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SufficientBlock {
    pub burnside: bool,
    pub kochendorffer: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct NilpotentBlock {
    pub is_nilpotent: bool,
    pub center_cyclic: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OracleBlock {
    /// Sorted degree multiset.
    pub degrees: Vec<usize>,
    pub faithful: bool,
    /// Smallest kernel order over all irreducible characters; 1 exactly when a faithful one exists.
    pub witness_kernel_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub group: String,
    pub order: usize,
    pub pi: Vec<u32>,
    pub minimal_normal_orders: Vec<usize>,
    pub criteria: CriteriaBlock,
    pub sufficient: SufficientBlock,
    pub nilpotent: NilpotentBlock,
    pub oracle: Option<OracleBlock>,
    pub timing_ms: Option<f64>,
    #[serde(skip)]
    pub center_order: usize,
    #[serde(skip)]
    pub criteria_detail: Option<CriterionReport>,
}

pub fn oracle_block(group: &FiniteGroup, table: &CharacterTable) -> Result<OracleBlock, OracleError> {
    let mut min_kernel = group.order();
    for row in 0..table.len() {
        min_kernel = min_kernel.min(table.kernel_of(row, group)?.order());
    }
    Ok(OracleBlock {
        degrees: table.sorted_degrees(),
        faithful: table.faithful_irreducible_exists(group)?.exists,
        witness_kernel_order: min_kernel,
    })
}

/// Runs every criterion at `characteristic` and, if asked, the character-table oracle.
pub fn analyze_group(
    name: &str,
    group: &FiniteGroup,
    characteristic: u64,
    with_oracle: bool,
) -> Result<AnalysisReport, AnalysisError> {
    let report = verdict(group, characteristic)?;
    let oracle = if with_oracle {
        let block = oracle_block(group, &dixon_table(group)?)?;
        let at_zero = report.verdict_for(0);
        if block.faithful != at_zero {
            return Err(AnalysisError::OracleDisagrees { group: name.to_string(), oracle: block.faithful, verdict: at_zero });
        }
        Some(block)
    } else {
        None
    };
    let minimal = group.minimal_normal_subgroups();
    Ok(AnalysisReport {
        group: name.to_string(),
        order: group.order(),
        pi: report.primes.clone(),
        minimal_normal_orders: minimal.iter().map(|n| n.order()).collect(),
        criteria: CriteriaBlock {
            gaschuetz: report.gaschuetz,
            weisner: report.weisner,
            akizuki: report.akizuki,
            verdict: report.verdict,
            char: report.characteristic,
        },
        sufficient: SufficientBlock { burnside: report.sufficient.burnside, kochendorffer: report.sufficient.kochendorffer },
        nilpotent: NilpotentBlock {
            is_nilpotent: report.nilpotent.is_nilpotent,
            center_cyclic: report.nilpotent.center_cyclic,
        },
        oracle,
        timing_ms: None,
        center_order: group.center().order(),
        criteria_detail: Some(report),
    })
}

pub fn analyze(spec: &GroupSpec, characteristic: u64, with_oracle: bool, timing: bool) -> Result<AnalysisReport, AnalysisError> {
    let start = Instant::now();
    let group = spec.build()?;
    let mut report = analyze_group(&spec.to_string(), &group, characteristic, with_oracle)?;
    if timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(report)
}

fn set<T: ToString>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(T::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.criteria;
        let _ = writeln!(out, "group                 {}", self.group);
        let _ = writeln!(out, "order                 {}", self.order);
        let _ = writeln!(out, "pi                    {}", set(&self.pi));
        let _ = writeln!(out, "minimal normal orders {:?}", self.minimal_normal_orders);
        let _ = writeln!(out, "center order          {}", self.center_order);
        let _ = writeln!(out, "nilpotent             {}", self.nilpotent.is_nilpotent);
        let _ = writeln!(out, "center cyclic         {}", self.nilpotent.center_cyclic);
        let _ = writeln!(out, "characteristic        {}", c.char);
        let _ = writeln!(out, "gaschuetz             {}", c.gaschuetz);
        let _ = writeln!(out, "weisner               {}", c.weisner);
        let _ = writeln!(out, "akizuki               {}", c.akizuki);
        let _ = writeln!(out, "burnside sufficient   {}", self.sufficient.burnside);
        let _ = writeln!(out, "kochendorffer suff.   {}", self.sufficient.kochendorffer);
        if let Some(detail) = &self.criteria_detail {
            for p in &detail.per_prime {
                let comps: Vec<String> = p.components.iter().map(|x| format!("(r={},g={},s={})", x.r, x.g, x.s)).collect();
                let _ = writeln!(
                    out,
                    "  T_{:<3} dim {:<2} cyclic {:<5} hyperplane {:<5} components {}",
                    p.p,
                    p.dim,
                    p.gaschuetz,
                    p.weisner,
                    comps.join(" ")
                );
            }
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(out, "oracle degrees        {}", set(&o.degrees));
            let _ = writeln!(out, "oracle faithful       {}", o.faithful);
            let _ = writeln!(out, "min kernel order      {}", o.witness_kernel_order);
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(out, "time                  {t:.1} ms");
        }
        let _ = writeln!(out, "verdict               {}", c.verdict);
        let _ = writeln!(out, "note: {FINITE_CASE_NOTE}");
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassColumn {
    pub size: usize,
    pub representative: usize,
    pub element_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterRow {
    pub degree: usize,
    pub kernel_order: usize,
    /// Per class, multiplicity of `zeta^j` for `j < exponent`.
    pub values: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub group: String,
    pub order: usize,
    pub exponent: usize,
    pub ell: u32,
    pub classes: Vec<ClassColumn>,
    pub rows: Vec<CharacterRow>,
}

pub fn table_report(name: &str, group: &FiniteGroup) -> Result<TableReport, AnalysisError> {
    let t = dixon_table(group)?;
    let classes = t
        .classes
        .classes
        .iter()
        .map(|c| ClassColumn { size: c.len(), representative: c[0], element_order: group.element_order(c[0]) })
        .collect();
    let mut rows = Vec::with_capacity(t.len());
    for r in 0..t.len() {
        rows.push(CharacterRow {
            degree: t.degrees[r],
            kernel_order: t.kernel_of(r, group)?.order(),
            values: t.multiplicities[r].clone(),
        });
    }
    Ok(TableReport { group: name.to_string(), order: group.order(), exponent: t.exponent, ell: t.ell, classes, rows })
}

/// `Σ m_j ζ^j` written as e.g. `2z0+z3`.
fn value_text(m: &[u32]) -> String {
    let terms: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(j, &c)| if c == 1 { format!("z{j}") } else { format!("{c}z{j}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

impl TableReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.degree).collect()
    }

    pub fn to_text(&self) -> String {
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut head = vec!["deg".to_string(), "ker".to_string()];
        head.extend(self.classes.iter().map(|c| format!("{}o{}", c.size, c.element_order)));
        cells.push(head);
        for r in &self.rows {
            let mut line = vec![r.degree.to_string(), r.kernel_order.to_string()];
            line.extend(r.values.iter().map(|m| value_text(m)));
            cells.push(line);
        }
        let cols = cells[0].len();
        let width: Vec<usize> = (0..cols).map(|c| cells.iter().map(|l| l[c].len()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}: order {}, exponent {}, z = primitive {}-th root of unity (computed mod {})",
            self.group, self.order, self.exponent, self.exponent, self.ell
        );
        for line in &cells {
            let padded: Vec<String> = line.iter().zip(&width).map(|(s, &w)| format!("{s:>w$}")).collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        }
        out
    }
}
