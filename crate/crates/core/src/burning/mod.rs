//! The round-based burning game.

mod constructive;
mod simulate;
mod solver;
mod spread;

pub use constructive::{burn_via_independent_set, burn_via_independent_set_with};
pub use simulate::{
    is_burning_sequence, propagate_step, run_schedule, FireState, Schedule, Verdict,
};
pub use solver::{burning_number_exact, burning_number_exact_with, SolveResult};
pub use spread::{max_spread, max_spread_with};
