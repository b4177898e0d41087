//! Polyomino generation, the verification battery, and its reports.

pub mod battery;
pub mod generate;
pub mod report;

pub use battery::{run_battery, verify_cells, BatteryConfig, BatterySummary, Checks, Fault, Outcome, VerificationReport};
pub use generate::{generate_polyominoes, generate_up_to, GeneratorConfig, MAX_GENERATED_CELLS};
