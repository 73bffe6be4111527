//! Monomials `X^r` with nonnegative rational exponent vectors.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exponent::{format_rational, Rational};

/// The monomial `X_1^{r_1} ... X_d^{r_d}`. Coefficients are never tracked.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<Rational>,
}

impl Monomial {
    pub fn new(exps: Vec<Rational>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if let Some(neg) = exps.iter().find(|r| r.is_negative()) {
            return Err(Error::NegativeExponent(format_rational(neg)));
        }
        Ok(Monomial { exps })
    }

    /// `X^0 = 1` in `dim` variables.
    pub fn one(dim: usize) -> Result<Self> {
        Monomial::new(vec![Rational::zero(); dim])
    }

    /// Builds a monomial from `(numer, denom)` pairs.
    ///
    /// # Panics
    ///
    /// Panics on a zero denominator, a negative entry or an empty slice.
    pub fn from_ratios(ratios: &[(i64, i64)]) -> Self {
        let exps = ratios.iter().map(|&(n, d)| Rational::new(n.into(), d.into())).collect();
        Monomial::new(exps).expect("valid exponent vector")
    }

    /// The pure power `X_var^exp` in `dim` variables (`var` is 0-based).
    pub fn pure_power(dim: usize, var: usize, exp: Rational) -> Result<Self> {
        if var >= dim {
            return Err(Error::VariableIndex { index: var, dim });
        }
        let mut exps = vec![Rational::zero(); dim];
        exps[var] = exp;
        Monomial::new(exps)
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[Rational] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(Zero::is_zero)
    }

    pub fn multiply(&self, other: &Monomial) -> Result<Monomial> {
        check_dim(self.dim(), other.dim())?;
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Ok(Monomial { exps })
    }

    /// `self | other`, i.e. `other` lies in the principal ideal of `self`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| b >= a))
    }

    /// The cofactor `h` with `self * h = other`, when `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Result<Option<Monomial>> {
        if !self.divides(other)? {
            return Ok(None);
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| b - a).collect();
        Ok(Some(Monomial { exps }))
    }
}

/// Coordinatewise maximum of the exponent vectors.
pub fn lcm<'a, I>(monomials: I) -> Result<Monomial>
where
    I: IntoIterator<Item = &'a Monomial>,
{
    let mut iter = monomials.into_iter();
    let first = iter.next().ok_or(Error::EmptyLcm)?;
    let mut exps = first.exps.clone();
    for m in iter {
        check_dim(exps.len(), m.dim())?;
        for (acc, e) in exps.iter_mut().zip(&m.exps) {
            if e > acc {
                *acc = e.clone();
            }
        }
    }
    Ok(Monomial { exps })
}

impl fmt::Display for Monomial {
    /// `X1^3/2*X2`, or `1` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, e) in self.exps.iter().enumerate().filter(|(_, e)| !e.is_zero()) {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "X{}", i + 1)?;
            if !(e.is_integer() && e.numer() == &1.into()) {
                write!(f, "^{}", format_rational(e))?;
            }
        }
        Ok(())
    }
}
