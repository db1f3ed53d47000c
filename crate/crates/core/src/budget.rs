//! Cooperative limits on long searches.

use core::cell::Cell;

/// Something the search polls between nodes.
pub trait Budget {
    /// Called once per visited node; `true` stops the search.
    fn exhausted(&self) -> bool;
}

/// Never runs out.
pub struct Unlimited;

impl Budget for Unlimited {
    fn exhausted(&self) -> bool {
        false
    }
}

/// Stops after a fixed number of polls.
pub struct NodeLimit {
    left: Cell<u64>,
}

impl NodeLimit {
    pub fn new(n: u64) -> Self {
        NodeLimit { left: Cell::new(n) }
    }
}

impl Budget for NodeLimit {
    fn exhausted(&self) -> bool {
        match self.left.get() {
            0 => true,
            k => {
                self.left.set(k - 1);
                false
            }
        }
    }
}

/// Stops as soon as either budget does.
pub struct Both<'a>(pub &'a dyn Budget, pub &'a dyn Budget);

impl Budget for Both<'_> {
    fn exhausted(&self) -> bool {
        self.0.exhausted() || self.1.exhausted()
    }
}

impl<F: Fn() -> bool> Budget for F {
    fn exhausted(&self) -> bool {
        self()
    }
}
