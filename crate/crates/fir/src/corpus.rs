//! The builtin corpus and the cross-module invariant sweep.

use std::fmt::Write as _;
use std::time::Instant;

use fir_core::criteria::{fite_nilpotent, verdict};
use fir_core::oracle::dixon_table;
use fir_core::FiniteGroup;
use rayon::prelude::*;
use serde::Serialize;

use crate::spec::GroupSpec;

pub const CHARACTERISTICS: [u64; 4] = [2, 3, 5, 7];

pub fn builtin_corpus() -> Vec<GroupSpec> {
    let text = [
        "cyclic:1",
        "cyclic:2",
        "cyclic:3",
        "cyclic:4",
        "cyclic:5",
        "cyclic:6",
        "cyclic:7",
        "cyclic:8",
        "cyclic:9",
        "cyclic:10",
        "cyclic:11",
        "cyclic:12",
        "product:cyclic:2*cyclic:2",
        "product:cyclic:3*cyclic:3",
        "sym:3",
        "sym:4",
        "alt:4",
        "perm:(1 2 3 4 5);(1 2 3)",
        "dihedral:3",
        "dihedral:4",
        "dihedral:5",
        "dihedral:6",
        "q8",
        "burnside",
        "isaacs",
        "gdq:1,2",
        "gdq:1,3",
        "gdq:1,4",
        "gdq:1,5",
        "gdq:2,2",
        "gdq:2,3",
        "gdq:2,4",
        "gdq:2,5",
        "gdq:3,2",
        "gdq:3,3",
        "diag:2,3",
        "product:cyclic:2*sym:3",
        "product:cyclic:6*sym:3",
        "product:q8*cyclic:3",
    ];
    text.iter().map(|s| s.parse().expect("builtin spec parses")).collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Violation {
    pub invariant: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusRow {
    pub group: String,
    pub order: usize,
    pub pi: Vec<u32>,
    pub gaschuetz: bool,
    pub weisner: bool,
    pub akizuki: bool,
    pub verdict: bool,
    pub burnside: bool,
    pub kochendorffer: bool,
    pub nilpotent: bool,
    pub center_cyclic: bool,
    pub oracle_faithful: Option<bool>,
    pub degrees: Option<Vec<usize>>,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub elapsed_ms: f64,
}

impl CorpusRow {
    fn failed(group: String, invariant: &'static str, detail: String) -> Self {
        CorpusRow {
            group,
            order: 0,
            pi: Vec::new(),
            gaschuetz: false,
            weisner: false,
            akizuki: false,
            verdict: false,
            burnside: false,
            kochendorffer: false,
            nilpotent: false,
            center_cyclic: false,
            oracle_faithful: None,
            degrees: None,
            violations: vec![Violation { invariant, detail }],
            elapsed_ms: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

macro_rules! check {
    ($out:expr, $cond:expr, $name:literal, $($fmt:tt)*) => {
        if !$cond {
            $out.push(Violation { invariant: $name, detail: format!($($fmt)*) });
        }
    };
}

/// All criteria and (optionally) the oracle on one group, with every cross-module invariant.
pub fn check_group(name: &str, group: &FiniteGroup, with_oracle: bool) -> CorpusRow {
    let start = Instant::now();
    let report = match verdict(group, 0) {
        Ok(r) => r,
        Err(e) => return CorpusRow::failed(name.to_string(), "criteria-error", e.to_string()),
    };
    let v0 = report.verdict;
    let mut bad = Vec::new();

    check!(bad, report.criteria_agree(), "criteria-agree",
        "gaschuetz {} weisner {} akizuki {} verdict {}", report.gaschuetz, report.weisner, report.akizuki, v0);
    for p in &report.per_prime {
        check!(bad, p.agree(), "per-prime-agree",
            "p={} cyclic {} hyperplane {} akizuki {}", p.p, p.gaschuetz, p.weisner, p.akizuki);
    }
    check!(bad, !report.sufficient.burnside || v0, "burnside-sufficient", "condition holds but verdict is false");
    check!(bad, !report.sufficient.kochendorffer || v0, "kochendorffer-sufficient", "condition holds but verdict is false");
    if report.nilpotent.is_nilpotent {
        check!(bad, v0 == report.nilpotent.center_cyclic, "fite",
            "nilpotent, center cyclic {} but verdict {}", report.nilpotent.center_cyclic, v0);
    }
    check!(bad, fite_nilpotent(group) == report.nilpotent.is_nilpotent.then_some(v0), "fite",
        "fite_nilpotent disagrees with the report");

    for &c in &CHARACTERISTICS {
        let expected = v0 && !report.primes.contains(&(c as u32));
        match verdict(group, c) {
            Ok(r) => check!(bad, r.verdict == expected, "characteristic", "char {c}: verdict {} expected {expected}", r.verdict),
            Err(e) => bad.push(Violation { invariant: "characteristic", detail: format!("char {c}: {e}") }),
        }
    }

    let minimal = group.minimal_normal_subgroups();
    for n in &minimal {
        check!(bad, group.is_normal(n) && !n.is_trivial() && group.order() % n.order() == 0, "minimal-normal",
            "subgroup of order {} is not a nontrivial normal subgroup", n.order());
    }

    let (mut oracle_faithful, mut degrees) = (None, None);
    if with_oracle {
        match dixon_table(group) {
            Err(e) => bad.push(Violation { invariant: "oracle-error", detail: e.to_string() }),
            Ok(t) => {
                let n = group.order();
                check!(bad, t.len() == t.classes.len(), "rows-classes", "{} rows for {} classes", t.len(), t.classes.len());
                let sq: usize = t.degrees.iter().map(|d| d * d).sum();
                check!(bad, sq == n, "degree-sum", "sum of squared degrees {sq} for order {n}");
                check!(bad, t.multiplicities[0].iter().all(|m| m[0] == 1), "trivial-first", "first row is not trivial");
                for a in 0..t.len() {
                    for b in 0..t.len() {
                        let want = if a == b { (n % t.ell as usize) as u32 } else { 0 };
                        check!(bad, t.inner_product_mod_ell(a, b) == want, "orthogonality", "rows {a} and {b}");
                    }
                }
                let mut meet = group.whole();
                for row in 0..t.len() {
                    match t.kernel_of(row, group) {
                        Ok(k) => {
                            check!(bad, group.is_normal(&k), "kernel-normal", "kernel of row {row}");
                            meet = group.intersection(&meet, &k);
                        }
                        Err(e) => bad.push(Violation { invariant: "kernel-normal", detail: format!("row {row}: {e}") }),
                    }
                }
                check!(bad, meet.is_trivial(), "kernels-meet-trivially", "common kernel of order {}", meet.order());
                match t.faithful_irreducible_exists(group) {
                    Ok(f) => {
                        check!(bad, f.exists == v0, "oracle-agree", "oracle {} verdict {v0}", f.exists);
                        oracle_faithful = Some(f.exists);
                    }
                    Err(e) => bad.push(Violation { invariant: "oracle-error", detail: e.to_string() }),
                }
                degrees = Some(t.sorted_degrees());
            }
        }
    }

    CorpusRow {
        group: name.to_string(),
        order: group.order(),
        pi: report.primes.clone(),
        gaschuetz: report.gaschuetz,
        weisner: report.weisner,
        akizuki: report.akizuki,
        verdict: v0,
        burnside: report.sufficient.burnside,
        kochendorffer: report.sufficient.kochendorffer,
        nilpotent: report.nilpotent.is_nilpotent,
        center_cyclic: report.nilpotent.center_cyclic,
        oracle_faithful,
        degrees,
        violations: bad,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn run_one(spec: &GroupSpec, with_oracle: bool) -> CorpusRow {
    let name = spec.to_string();
    match spec.build() {
        Ok(g) => check_group(&name, &g, with_oracle),
        Err(e) => CorpusRow::failed(name, "build-error", e.to_string()),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub with_oracle: bool,
    pub rows: Vec<CorpusRow>,
}

/// Rows come back sorted by spec text whatever `jobs` is.
pub fn run_corpus(specs: &[GroupSpec], with_oracle: bool, jobs: usize) -> CorpusReport {
    let mut rows: Vec<CorpusRow> = if jobs <= 1 {
        specs.iter().map(|s| run_one(s, with_oracle)).collect()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| specs.par_iter().map(|s| run_one(s, with_oracle)).collect()),
            Err(_) => specs.iter().map(|s| run_one(s, with_oracle)).collect(),
        }
    };
    rows.sort_by(|a, b| a.group.cmp(&b.group));
    CorpusReport { with_oracle, rows }
}

fn flag(b: bool) -> &'static str {
    if b {
        "T"
    } else {
        "F"
    }
}

impl CorpusReport {
    pub fn violations(&self) -> usize {
        self.rows.iter().map(|r| r.violations.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.violations() == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("corpus serializes")
    }

    pub fn to_text(&self) -> String {
        let width = self.rows.iter().map(|r| r.group.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$}  {:>5}  G W A V  Bu Ko Nil  Orc  status", "group", "order");
        for r in &self.rows {
            let oracle = r.oracle_faithful.map_or("-", flag);
            let status = if r.passed() { "ok".to_string() } else { format!("FAIL ({})", r.violations.len()) };
            let _ = writeln!(
                out,
                "{:<width$}  {:>5}  {} {} {} {}  {:<2} {:<2} {:<3}  {:<3}  {}",
                r.group,
                r.order,
                flag(r.gaschuetz),
                flag(r.weisner),
                flag(r.akizuki),
                flag(r.verdict),
                flag(r.burnside),
                flag(r.kochendorffer),
                flag(r.nilpotent),
                oracle,
                status
            );
            for v in &r.violations {
                let _ = writeln!(out, "    {}: {}", v.invariant, v.detail);
            }
        }
        let _ = writeln!(out, "{} groups, {} violations", self.rows.len(), self.violations());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_specs_round_trip() {
        for s in builtin_corpus() {
            assert_eq!(s.to_string().parse::<GroupSpec>().unwrap(), s);
        }
    }

    #[test]
    fn small_sweep_is_clean() {
        let specs: Vec<GroupSpec> = ["cyclic:6", "sym:3", "burnside"].iter().map(|s| s.parse().unwrap()).collect();
        let r = run_corpus(&specs, true, 2);
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.rows[0].group, "burnside");
    }
}
