//! JSON bundles in, reports and constructed entities out.

pub mod bundle;
pub mod report;
pub mod tasks;

pub use bundle::{parse_bundle, serialize_bundle, Bundle, RawBundle, DIMENSION_CAP};
pub use report::{emit_report, exit_code, Format, Report, Status};
pub use tasks::{run_all, run_task, TASK_KINDS};
