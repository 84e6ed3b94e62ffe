//! Numeric thresholds shared by every module.

/// Classification and comparison thresholds.
///
/// `eps_class` separates the trace trichotomy (elliptic/parabolic/hyperbolic)
/// and order-two detection; `eps_cmp` is the matrix/coordinate comparison
/// threshold. Closed-form double-precision arithmetic keeps errors well below
/// both defaults at desk scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps_class: f64,
    pub eps_cmp: f64,
}

impl Tolerance {
    pub const DEFAULT_EPS_CLASS: f64 = 1e-9;
    pub const DEFAULT_EPS_CMP: f64 = 1e-8;

    /// Both thresholds must lie in (0, 1e-3).
    pub fn new(eps_class: f64, eps_cmp: f64) -> Option<Self> {
        let ok = |e: f64| e > 0.0 && e < 1e-3;
        (ok(eps_class) && ok(eps_cmp)).then_some(Self { eps_class, eps_cmp })
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            eps_class: Self::DEFAULT_EPS_CLASS,
            eps_cmp: Self::DEFAULT_EPS_CMP,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range() {
        assert!(Tolerance::new(0.0, 1e-8).is_none());
        assert!(Tolerance::new(1e-9, 1e-2).is_none());
        assert!(Tolerance::new(1e-9, 1e-8).is_some());
    }
}
