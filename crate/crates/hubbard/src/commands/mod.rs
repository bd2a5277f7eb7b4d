//! Subcommand bodies. Each writes its artifacts into the output directory and
//! returns the master seed it used.

mod costs;
mod encode;
mod oracle;
mod signal;
mod utility;

pub use costs::{costs, CostsReport};
pub use encode::{encode, EncodeReport};
pub use oracle::{oracle, OracleReport, PeakCheck};
pub use signal::{resolution_scenarios, signal, ScenarioSummary, Scenarios, SignalReport};
pub use utility::{utility, UtilityReport};
