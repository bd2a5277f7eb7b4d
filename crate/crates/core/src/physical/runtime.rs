use serde::{Deserialize, Serialize};

use super::config::ArchitectureConfig;
use super::layout::PhysicalLayout;
use crate::{Error, Result};

/// Wall-clock time of a full run and the fraction of machine time spent on
/// each activity.
///
/// Per widget the three activities take `intra` (graph-state preparation and
/// measurement), `t_supply` (distillation at the factories' rate plus
/// injection) and `inter` (Bell pairs for the hand-over to the other
/// fridge). With two or more fridges they overlap, so a widget costs their
/// maximum and the pipeline adds one preparation to fill; a single fridge has
/// no hand-over. Shares are the activity times normalized by their sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RuntimeBreakdown {
    pub total_seconds: f64,
    pub widgets: u64,
    pub intra_seconds: f64,
    pub t_supply_seconds: f64,
    pub inter_seconds: f64,
    pub widget_seconds: f64,
    pub share_t: f64,
    pub share_inter: f64,
    pub share_intra: f64,
}

impl RuntimeBreakdown {
    pub fn share_sum(&self) -> f64 {
        self.share_t + self.share_inter + self.share_intra
    }
}

/// Intramodule T consumption rate, the demand the factories must meet.
pub fn t_demand(distance: u64, config: &ArchitectureConfig) -> f64 {
    1.0 / config.seconds_per_t(distance)
}

pub fn runtime_breakdown(
    total_t: u64,
    layout: &PhysicalLayout,
    config: &ArchitectureConfig,
) -> Result<RuntimeBreakdown> {
    config.validate()?;
    let widgets = total_t.div_ceil(config.t_per_widget);
    let w = config.t_per_widget as f64;
    let intra = w * config.seconds_per_t(layout.distance);
    let injection = w * config.injection_cycles * config.cycle_time;
    let distill = if widgets == 0 {
        0.0
    } else if layout.t_supply_rate > 0.0 {
        w / layout.t_supply_rate
    } else {
        return Err(Error::contract(
            "T gates requested from a layout without factories",
        ));
    };
    let t_supply = distill + injection;
    let inter = if config.fridges > 1 {
        let pairs = (layout.logical_qubits * layout.distance) as f64;
        pairs / (config.bell_pair_rate * config.bell_fidelity)
    } else {
        0.0
    };
    let (widget_seconds, fill) = if config.fridges > 1 {
        (intra.max(t_supply).max(inter), intra)
    } else {
        (intra.max(t_supply), 0.0)
    };
    let total_seconds = if widgets == 0 {
        0.0
    } else {
        widgets as f64 * widget_seconds + fill
    };
    let sum = intra + t_supply + inter;
    Ok(RuntimeBreakdown {
        total_seconds,
        widgets,
        intra_seconds: intra,
        t_supply_seconds: t_supply,
        inter_seconds: inter,
        widget_seconds,
        share_t: t_supply / sum,
        share_inter: inter / sum,
        share_intra: intra / sum,
    })
}

#[cfg(test)]
mod tests {
    use super::super::layout::provision_layout;
    use super::*;

    #[test]
    fn shares_sum_to_one() {
        let c = ArchitectureConfig::default();
        let l = provision_layout(50, t_demand(15, &c), 15, &c).unwrap();
        let r = runtime_breakdown(123_456_789, &l, &c).unwrap();
        assert!((r.share_sum() - 1.0).abs() < 1e-12);
        assert!(r.total_seconds > 0.0);
        assert_eq!(r.widgets, 123_457);
    }

    #[test]
    fn single_fridge_has_no_hand_over() {
        let c = ArchitectureConfig {
            fridges: 1,
            ..ArchitectureConfig::default()
        };
        let l = provision_layout(20, t_demand(11, &c), 11, &c).unwrap();
        let r = runtime_breakdown(10_000, &l, &c).unwrap();
        assert_eq!(r.share_inter, 0.0);
        assert_eq!(r.inter_seconds, 0.0);
    }

    #[test]
    fn unbounded_factories_leave_injection_floor() {
        let c = ArchitectureConfig::default();
        let mut l = provision_layout(20, t_demand(11, &c), 11, &c).unwrap();
        l.t_supply_rate = f64::INFINITY;
        let r = runtime_breakdown(10_000, &l, &c).unwrap();
        let floor = c.t_per_widget as f64 * c.injection_cycles * c.cycle_time;
        assert_eq!(r.t_supply_seconds, floor);
        assert!(r.share_t > 0.0);
    }

    #[test]
    fn runtime_grows_with_t_count() {
        let c = ArchitectureConfig::default();
        let l = provision_layout(20, t_demand(11, &c), 11, &c).unwrap();
        let mut last = 0.0;
        for t in [1u64, 999, 1000, 1001, 50_000, 10_000_000] {
            let r = runtime_breakdown(t, &l, &c).unwrap();
            assert!(r.total_seconds >= last);
            last = r.total_seconds;
        }
    }
}
