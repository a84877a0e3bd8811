//! Triangular fuzzy numbers.
//!
//! A [`TriFuzzy`] is stored as `(lower, modal, upper)`. Source tables that
//! list the modal value first have to be reordered on ingestion.

use crate::error::{Error, Result};

/// Triangular fuzzy number with a piecewise-linear hat membership.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriFuzzy {
    lower: f64,
    modal: f64,
    upper: f64,
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

impl TriFuzzy {
    pub fn new(lower: f64, modal: f64, upper: f64) -> Result<Self> {
        if !(lower.is_finite() && modal.is_finite() && upper.is_finite()) {
            return Err(Error::NonFinite);
        }
        if !(lower <= modal && modal <= upper) {
            return Err(Error::OrderingViolation {
                lower,
                modal,
                upper,
            });
        }
        Ok(TriFuzzy {
            lower,
            modal,
            upper,
        })
    }

    pub fn crisp(value: f64) -> Result<Self> {
        Self::new(value, value, value)
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn modal(&self) -> f64 {
        self.modal
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn is_crisp(&self) -> bool {
        self.lower == self.modal && self.modal == self.upper
    }

    /// Degree to which `x` belongs to this number.
    ///
    /// A degenerate side (`modal == lower` or `upper == modal`) has no
    /// ascending/descending ramp: membership is 1 at the modal value and 0
    /// strictly beyond it.
    pub fn membership(&self, x: f64) -> f64 {
        if x == self.modal {
            1.0
        } else if x < self.modal {
            if x < self.lower || self.modal == self.lower {
                0.0
            } else {
                (x - self.lower) / (self.modal - self.lower)
            }
        } else if x > self.upper || self.upper == self.modal {
            0.0
        } else {
            (self.upper - x) / (self.upper - self.modal)
        }
    }

    /// The α-cut `[lower + α(modal − lower), upper − α(upper − modal)]`.
    pub fn alpha_interval(&self, alpha: f64) -> Result<Interval> {
        check_alpha(alpha)?;
        Ok(self.cut(alpha))
    }

    /// Point at offset `level` from the lower end toward the modal value.
    pub fn rise(&self, level: f64) -> f64 {
        if self.modal == self.lower {
            self.modal
        } else {
            // convex form keeps both endpoints exact at level 0 and 1
            self.lower * (1.0 - level) + self.modal * level
        }
    }

    /// Point at offset `level` from the upper end toward the modal value.
    pub fn fall(&self, level: f64) -> f64 {
        if self.upper == self.modal {
            self.modal
        } else {
            self.upper * (1.0 - level) + self.modal * level
        }
    }

    fn cut(&self, alpha: f64) -> Interval {
        Interval {
            lo: self.rise(alpha),
            hi: self.fall(alpha),
        }
    }
}
