//! Bracket coefficients entering the closed action formulas.
//!
//! Each family is a difference `[[k]]_{v^a} - [[k]]_{v^b}` of geometric
//! brackets, or a single bracket when `b` is absent. The values in
//! [`CoefficientTable::frozen`] were fitted against the Hecke-Clifford
//! oracle and are checked against it by the test suite.

use serde::Serialize;

use crate::laurent::{bracket_geom, LaurentPoly};

/// `[[k]]_{v^step}` or `[[k]]_{v^step} - [[k]]_{v^minus}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bracket {
    pub step: i64,
    pub minus: Option<i64>,
}

impl Bracket {
    pub const fn single(step: i64) -> Self {
        Self { step, minus: None }
    }

    pub const fn diff(step: i64, minus: i64) -> Self {
        Self {
            step,
            minus: Some(minus),
        }
    }

    pub fn eval(&self, k: u32) -> LaurentPoly {
        let base = bracket_geom(k, self.step);
        match self.minus {
            Some(m) => &base - &bracket_geom(k, m),
            None => base,
        }
    }
}

/// The bracket families of the `E_h`, `F_h` and `Kbar_n` formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientTable {
    /// Multiplies the even shift terms of `E_h` and `F_h`, at `a0 + 1`.
    pub even_shift: Bracket,
    /// Merging two odd entries into an even one under `E_h`, at `a_{h,k} + 1`.
    pub e_odd_merge: Bracket,
    /// Merging two odd entries into an even one under `F_h`, at `a_{h+1,k} + 1`.
    pub f_odd_merge: Bracket,
    /// Turning an odd entry even under `Kbar_n`, at `a_{n,k}`.
    pub kbar_even: Bracket,
}

impl CoefficientTable {
    pub const fn frozen() -> Self {
        Self {
            even_shift: Bracket::single(2),
            e_odd_merge: Bracket::diff(2, 4),
            f_odd_merge: Bracket::diff(4, 2),
            kbar_even: Bracket::single(4),
        }
    }
}

impl Default for CoefficientTable {
    fn default() -> Self {
        Self::frozen()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_values() {
        let t = CoefficientTable::frozen();
        assert_eq!(
            t.even_shift.eval(3),
            LaurentPoly::from_terms([(0, 1), (2, 1), (4, 1)])
        );
        assert_eq!(
            t.e_odd_merge.eval(2),
            LaurentPoly::from_terms([(2, 1), (4, -1)])
        );
        assert_eq!(
            t.f_odd_merge.eval(2),
            LaurentPoly::from_terms([(2, -1), (4, 1)])
        );
        assert_eq!(
            t.kbar_even.eval(2),
            LaurentPoly::from_terms([(0, 1), (4, 1)])
        );
        assert!(t.e_odd_merge.eval(1).is_zero());
    }
}
