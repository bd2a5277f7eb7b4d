use alloc::format;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Even split of an overall failure tolerance `delta_bar`: half to
/// statistical failure, half to the circuits, and the circuit half shared
/// equally by ground-state preparation, rotation synthesis, distillation and
/// data errors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AccuracyBudget {
    pub delta_bar: f64,
    pub delta_s: f64,
    pub delta_c: f64,
    pub delta_gs: f64,
    pub delta_syn: f64,
    pub delta_dist: f64,
    pub delta_data: f64,
}

pub fn split_budget(delta_bar: f64) -> Result<AccuracyBudget> {
    if !(delta_bar > 0.0 && delta_bar < 1.0) {
        return Err(Error::range(
            "delta_bar",
            format!("{delta_bar} not in (0, 1)"),
        ));
    }
    let delta_c = delta_bar / 2.0;
    let quarter = delta_c / 4.0;
    Ok(AccuracyBudget {
        delta_bar,
        delta_s: delta_bar / 2.0,
        delta_c,
        delta_gs: quarter,
        delta_syn: quarter,
        delta_dist: quarter,
        delta_data: quarter,
    })
}
