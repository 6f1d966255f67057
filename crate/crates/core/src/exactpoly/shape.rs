use num_traits::Signed;
use serde::Serialize;

use super::LaurentPoly;
use crate::error::{Error, Result};

/// Unimodality and log-concavity of a nonnegative coefficient sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub unimodal: bool,
    pub log_concave: bool,
}

impl LaurentPoly {
    /// Shape of the dense coefficient sequence between the lowest and
    /// highest exponent (interior zeros included).
    pub fn shape_report(&self) -> Result<ShapeReport> {
        if let Some((e, _)) = self.terms().find(|(_, c)| c.is_negative()) {
            return Err(Error::NegativeCoefficient(e));
        }
        let a = self.coeffs();
        let mut falling = false;
        let mut unimodal = true;
        for w in a.windows(2) {
            if w[1] < w[0] {
                falling = true;
            } else if w[1] > w[0] && falling {
                unimodal = false;
                break;
            }
        }
        let log_concave = a.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2]);
        Ok(ShapeReport {
            unimodal,
            log_concave,
        })
    }
}
