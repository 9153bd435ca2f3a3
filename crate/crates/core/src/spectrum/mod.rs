//! Whole-cavity spectra: enumeration, parameter sweeps and checks against
//! bundled reference tables.

mod config;
mod enumerate;
pub mod fixtures;
mod sweep;
mod validate;

pub use config::{CavityConfig, ModeRecord};
pub use enumerate::{enumerate_modes, Limit, CUTOFF_SLACK};
pub use fixtures::{fixture_names, load_fixture, parse_fixture, FixtureRow, ReferenceFixture};
pub use sweep::{cone_sweep, dispersion_table, wedge_sweep, ConeSweepRow, DispersionRow, WedgeSweepRow};
pub use validate::{validate, validate_fixture, RowCheck, ValidationReport};
