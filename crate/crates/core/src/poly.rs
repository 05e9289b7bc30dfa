//! Sparse polynomials in `q`, `t`, `x` with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponents of `q`, `t` and `x`, in that order.
pub type Exponents = (u32, u32, u32);

/// A polynomial as a map from exponent triple to a non-zero coefficient.
///
/// Zero coefficients are never stored, so map equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialMap {
    terms: BTreeMap<Exponents, i64>,
}

impl MonomialMap {
    pub fn zero() -> Self {
        MonomialMap::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = MonomialMap::zero();
        p.terms.insert((0, 0, 0), c);
        p.terms.retain(|_, c| *c != 0);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, i64> {
        &self.terms
    }

    pub fn coefficient(&self, exps: Exponents) -> i64 {
        self.terms.get(&exps).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(exps).or_insert(0);
        *entry = entry
            .checked_add(coeff)
            .ok_or(Error::Overflow("polynomial coefficient"))?;
        if *entry == 0 {
            self.terms.remove(&exps);
        }
        Ok(())
    }

    /// Adds `other` term by term.
    pub fn merge(&mut self, other: &MonomialMap) -> Result<()> {
        for (&exps, &c) in &other.terms {
            self.add_term(exps, c)?;
        }
        Ok(())
    }

    /// `(q + x)^m` expanded by the binomial theorem.
    pub fn q_plus_x_pow(m: u32) -> Result<Self> {
        let mut p = MonomialMap::zero();
        let mut binom: i64 = 1;
        for j in 0..=m {
            p.add_term((m - j, 0, j), binom)?;
            binom = binom
                .checked_mul(i64::from(m - j))
                .ok_or(Error::Overflow("binomial coefficient"))?
                / i64::from(j + 1);
        }
        Ok(p)
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Highest q-degree first reads like a binomial expansion.
        for (i, (&(eq, et, ex), &c)) in self.terms.iter().rev().enumerate() {
            let mut vars = Vec::new();
            for (name, e) in [("q", eq), ("t", et), ("x", ex)] {
                match e {
                    0 => {}
                    1 => vars.push(name.to_string()),
                    _ => vars.push(format!("{name}^{e}")),
                }
            }
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                f.write_str(&vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_vanish() {
        let mut p = MonomialMap::zero();
        p.add_term((1, 0, 0), 3).unwrap();
        p.add_term((1, 0, 0), -3).unwrap();
        assert!(p.is_zero());
        assert_eq!(p, MonomialMap::zero());
        assert!(MonomialMap::constant(0).is_zero());
    }

    #[test]
    fn binomial_expansions() {
        assert_eq!(MonomialMap::q_plus_x_pow(0).unwrap(), MonomialMap::constant(1));
        let p = MonomialMap::q_plus_x_pow(1).unwrap();
        assert_eq!(p.to_string(), "q + x");
        let p = MonomialMap::q_plus_x_pow(3).unwrap();
        assert_eq!(p.to_string(), "q^3 + 3*q^2*x + 3*q*x^2 + x^3");
        let p = MonomialMap::q_plus_x_pow(6).unwrap();
        assert_eq!(p.coefficient((3, 0, 3)), 20);
        assert_eq!(p.terms().values().sum::<i64>(), 64);
    }

    #[test]
    fn overflow_is_reported() {
        let mut p = MonomialMap::constant(i64::MAX);
        assert_eq!(p.add_term((0, 0, 0), 1), Err(Error::Overflow("polynomial coefficient")));
    }

    #[test]
    fn display_signs() {
        let mut p = MonomialMap::zero();
        p.add_term((0, 2, 0), -1).unwrap();
        p.add_term((0, 0, 0), 2).unwrap();
        assert_eq!(p.to_string(), "-t^2 + 2");
    }
}
