//! Group-spec parsing, reports and the corpus runner behind the `fir` binary.

pub mod corpus;
pub mod report;
pub mod spec;

pub use corpus::{builtin_corpus, check_group, run_corpus, CorpusReport, CorpusRow, Violation};
pub use report::{analyze, analyze_group, table_report, AnalysisError, AnalysisReport, TableReport};
pub use spec::{order_cap_from_env, GroupSpec, SpecError};
