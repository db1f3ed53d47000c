use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use gvdlab_core::budget::Budget;

pub const BUDGET_ENV: &str = "GVDLAB_BUDGET_SECS";

/// Wall-clock and node caps shared by every worker thread.
#[derive(Debug, Default)]
pub struct SharedBudget {
    deadline: Option<Instant>,
    nodes_left: Option<AtomicU64>,
}

impl SharedBudget {
    pub fn new(secs: Option<f64>, max_nodes: Option<u64>) -> Self {
        SharedBudget {
            deadline: secs.map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0))),
            nodes_left: max_nodes.map(AtomicU64::new),
        }
    }

    /// Reads the time cap from the environment.
    pub fn from_env(max_nodes: Option<u64>) -> anyhow::Result<Self> {
        let secs = match std::env::var(BUDGET_ENV) {
            Ok(s) if !s.trim().is_empty() => Some(
                s.trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite() && *x >= 0.0)
                    .ok_or_else(|| anyhow::anyhow!("{BUDGET_ENV} must be a non-negative number of seconds"))?,
            ),
            _ => None,
        };
        Ok(Self::new(secs, max_nodes))
    }
}

impl Budget for SharedBudget {
    fn exhausted(&self) -> bool {
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            return true;
        }
        match &self.nodes_left {
            None => false,
            Some(n) => n.fetch_update(Ordering::Relaxed, Ordering::Relaxed, |k| k.checked_sub(1)).is_err(),
        }
    }
}
