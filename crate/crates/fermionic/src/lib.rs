//! File formats, oracle reports and verification suites for `fermionic-core`,
//! and the library side of the `fermionic` command-line tool.

pub mod criteria;
pub mod json;
pub mod output;
pub mod report;

pub use criteria::{Criterion, OracleSettings, Suite};
pub use json::{poly_from_json, poly_to_json, PolyJson};
pub use output::Format;
pub use report::OracleReport;
