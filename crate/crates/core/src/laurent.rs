//! Sparse Laurent polynomials with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// Integer-coefficient Laurent polynomial, stored as exponent -> coefficient
/// with zero coefficients absent. Equality is coefficient-wise.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// Sums (exponent, coefficient) contributions, dropping zero totals.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut poly = LaurentPoly::zero();
        for (exp, coeff) in terms {
            poly.add_term(exp, coeff);
        }
        poly
    }

    fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients, i.e. the evaluation at t = 1.
    pub fn coeff_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplication by t^delta.
    pub fn shifted(&self, delta: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e + delta, c)).collect(),
        }
    }

    /// Substitution t -> t^(-1).
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Exact division; fails if the divisor is zero, a leading coefficient
    /// does not divide, or a nonzero remainder survives.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, Error> {
        if divisor.is_zero() {
            return Err(Error::NonExactDivision);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // normalize both to ordinary polynomials with nonzero constant term
        let self_min = self.min_exp().expect("nonzero");
        let div_min = divisor.min_exp().expect("nonzero");
        let mut rem = self.shifted(-self_min);
        let div = divisor.shifted(-div_min);
        let div_max = div.max_exp().expect("nonzero");
        let div_lead = div.coeff(div_max);

        let mut quotient = LaurentPoly::zero();
        while let Some(rem_max) = rem.max_exp() {
            if rem_max < div_max {
                return Err(Error::NonExactDivision);
            }
            let lead = rem.coeff(rem_max);
            if lead % div_lead != 0 {
                return Err(Error::NonExactDivision);
            }
            let factor = LaurentPoly::monomial(rem_max - div_max, lead / div_lead);
            rem = &rem - &(&factor * &div);
            quotient = &quotient + &factor;
        }
        Ok(quotient.shifted(self_min - div_min))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (exp, coeff) in rhs.terms() {
            out.add_term(exp, coeff);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (exp, coeff) in rhs.terms() {
            out.add_term(exp, -coeff);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, coeff)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " {} ", if coeff < 0 { "-" } else { "+" })?;
            } else if coeff < 0 {
                write!(f, "-")?;
            }
            let mag = coeff.abs();
            match exp {
                0 => write!(f, "{mag}")?,
                1 if mag == 1 => write!(f, "t")?,
                1 => write!(f, "{mag}*t")?,
                _ if mag == 1 => write!(f, "t^{exp}")?,
                _ => write!(f, "{mag}*t^{exp}")?,
            }
        }
        Ok(())
    }
}
