/// Default largest group order for the closed-form engine.
pub const FORMULA_MAX_ORDER: usize = 48;
/// Default largest group order for brute-force oracle sweeps.
pub const ORACLE_MAX_ORDER: usize = 24;

/// Scale bounds enforced by the expensive operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub formula_max_order: usize,
    pub oracle_max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { formula_max_order: FORMULA_MAX_ORDER, oracle_max_order: ORACLE_MAX_ORDER }
    }
}

impl Limits {
    /// Raises both bounds to `max_order`.
    pub fn with_override(max_order: usize) -> Self {
        Limits { formula_max_order: max_order, oracle_max_order: max_order }
    }

    pub fn unbounded() -> Self {
        Self::with_override(usize::MAX)
    }
}
