//! Extended exponents, rays and infinitesimally perturbed coordinates.
//!
//! Every ideal in this crate is built from [`Ray`]s: a pair `(alpha, eps)`
//! standing for the exponent set `{r >= alpha}` when `eps` is closed and
//! `{r > alpha}` when it is open. `alpha` ranges over the nonnegative
//! rationals extended by `inf`; a ray at `inf` is empty, which encodes the
//! convention `X_i^inf = 0`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact exponent type used throughout the crate.
pub type Rational = BigRational;

/// Parses `"p"` or `"p/q"` with unsigned decimal digits.
pub(crate) fn parse_rational(text: &str) -> Option<Rational> {
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    if !digits(num) || !digits(den) {
        return None;
    }
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num.parse().ok()?, den))
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Repr {
    // Variant order gives the total order: every finite value sits below inf.
    Finite(Rational),
    Infinity,
}

/// A nonnegative rational, or `inf`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtExp(Repr);

impl ExtExp {
    pub const INFINITY: ExtExp = ExtExp(Repr::Infinity);

    pub fn finite(value: Rational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::NegativeExponent(format_rational(&value)));
        }
        Ok(ExtExp(Repr::Finite(value)))
    }

    pub fn zero() -> Self {
        ExtExp(Repr::Finite(Rational::zero()))
    }

    /// Shorthand for the finite value `numer/denom`.
    ///
    /// # Panics
    ///
    /// Panics if the value is negative or `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::finite(BigRational::new(numer.into(), denom.into())).expect("nonnegative ratio")
    }

    pub fn integer(value: u64) -> Self {
        ExtExp(Repr::Finite(BigRational::from_integer(value.into())))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self.0, Repr::Infinity)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match &self.0 {
            Repr::Finite(r) => Some(r),
            Repr::Infinity => None,
        }
    }
}

impl From<u64> for ExtExp {
    fn from(value: u64) -> Self {
        ExtExp::integer(value)
    }
}

impl fmt::Display for ExtExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Finite(r) => f.write_str(&format_rational(r)),
            Repr::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtExp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(ExtExp::INFINITY);
        }
        if let Some(rest) = s.strip_prefix('-') {
            return Err(Error::NegativeExponent(format!("-{rest}")));
        }
        match parse_rational(s) {
            Some(r) => ExtExp::finite(r),
            None => Err(Error::NegativeExponent(s.to_owned())),
        }
    }
}

/// Closed (`0`) or open (`1`) boundary of a ray.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Flag {
    #[default]
    Closed,
    Open,
}

impl Flag {
    pub fn from_bit(bit: u8) -> Option<Flag> {
        match bit {
            0 => Some(Flag::Closed),
            1 => Some(Flag::Open),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Flag::Closed => 0,
            Flag::Open => 1,
        }
    }
}

/// `r >=_eps alpha`: `r >= alpha` for a closed flag, `r > alpha` for an open
/// one. Against `alpha = inf` the relation holds exactly when `r = inf`.
pub fn geq_eps(r: &ExtExp, alpha: &ExtExp, eps: Flag) -> bool {
    if alpha.is_infinite() {
        return r.is_infinite();
    }
    match eps {
        Flag::Closed => r >= alpha,
        Flag::Open => r > alpha,
    }
}

/// The exponent set `{r finite : r >=_eps alpha}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ray {
    pub alpha: ExtExp,
    pub eps: Flag,
}

impl Ray {
    pub fn new(alpha: ExtExp, eps: Flag) -> Self {
        Ray { alpha, eps }
    }

    pub fn closed(alpha: ExtExp) -> Self {
        Ray::new(alpha, Flag::Closed)
    }

    pub fn open(alpha: ExtExp) -> Self {
        Ray::new(alpha, Flag::Open)
    }

    /// `Ray(0, 0)`: every exponent qualifies.
    pub fn full() -> Self {
        Ray::closed(ExtExp::zero())
    }

    /// `Ray(inf, 0)`, the canonical empty ray.
    pub fn empty() -> Self {
        Ray::closed(ExtExp::INFINITY)
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_infinite()
    }

    pub fn is_full(&self) -> bool {
        self.eps == Flag::Closed && self.alpha.as_finite().is_some_and(Zero::is_zero)
    }

    /// Whether the finite exponent `r` lies in the ray.
    pub fn admits(&self, r: &Rational) -> bool {
        match self.alpha.as_finite() {
            None => false,
            Some(a) => match self.eps {
                Flag::Closed => r >= a,
                Flag::Open => r > a,
            },
        }
    }

    /// Rays at `inf` all denote the empty set; this picks the closed spelling.
    pub fn normalized(&self) -> Ray {
        if self.is_empty() {
            Ray::empty()
        } else {
            self.clone()
        }
    }

    /// Set inclusion of the exponent sets, over the nonnegative rationals.
    pub fn is_subset_of(&self, other: &Ray) -> bool {
        if self.is_empty() {
            return true;
        }
        if other.is_empty() {
            return false;
        }
        if other.is_full() {
            return true;
        }
        match self.alpha.cmp(&other.alpha) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => !(self.eps == Flag::Closed && other.eps == Flag::Open),
        }
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.eps {
            Flag::Closed => write!(f, "[{}, inf)", self.alpha),
            Flag::Open => write!(f, "({}, inf)", self.alpha),
        }
    }
}

/// Whether a witness coordinate sits exactly on its base value or an
/// infinitesimal amount above it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Offset {
    Exact,
    Plus,
}

/// A rational coordinate, possibly nudged up by a positive infinitesimal.
///
/// The derived order is the order of the perturbed values: `v < v+ < w` for
/// every rational `w > v`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PerturbedCoord {
    pub base: Rational,
    pub offset: Offset,
}

impl PerturbedCoord {
    pub fn exact(base: Rational) -> Self {
        PerturbedCoord { base, offset: Offset::Exact }
    }

    pub fn plus(base: Rational) -> Self {
        PerturbedCoord { base, offset: Offset::Plus }
    }

    pub fn is_open(&self) -> bool {
        self.offset == Offset::Plus
    }
}

impl fmt::Display for PerturbedCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.base))?;
        if self.is_open() {
            f.write_str("+")?;
        }
        Ok(())
    }
}

/// Membership of a perturbed coordinate in a ray. `v+` clears an open bound
/// at `alpha` exactly when `v >= alpha`, so the flag only matters for exact
/// coordinates.
pub fn perturbed_satisfies(p: &PerturbedCoord, ray: &Ray) -> bool {
    let Some(alpha) = ray.alpha.as_finite() else {
        return false;
    };
    match p.offset {
        Offset::Exact => ray.admits(&p.base),
        Offset::Plus => &p.base >= alpha,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn geq_eps_examples() {
        let two = ExtExp::integer(2);
        assert!(geq_eps(&two, &two, Flag::Closed));
        assert!(!geq_eps(&two, &two, Flag::Open));
        assert!(geq_eps(&ExtExp::INFINITY, &ExtExp::INFINITY, Flag::Open));
        assert!(geq_eps(&ExtExp::ratio(14, 3), &ExtExp::ratio(9, 8), Flag::Open));
        assert!(!geq_eps(&two, &ExtExp::INFINITY, Flag::Closed));
        assert!(geq_eps(&ExtExp::INFINITY, &two, Flag::Open));
    }

    #[test]
    fn perturbed_examples() {
        let two = ExtExp::integer(2);
        assert!(perturbed_satisfies(&PerturbedCoord::plus(q(2, 1)), &Ray::open(two.clone())));
        assert!(!perturbed_satisfies(&PerturbedCoord::exact(q(2, 1)), &Ray::open(two)));
        assert!(!perturbed_satisfies(&PerturbedCoord::plus(q(3, 2)), &Ray::empty()));
    }

    #[test]
    fn infinity_tops_the_order() {
        assert!(ExtExp::INFINITY > ExtExp::ratio(1_000_000, 1));
        assert_eq!(ExtExp::INFINITY, ExtExp::INFINITY);
        assert!(ExtExp::ratio(1, 3) < ExtExp::ratio(1, 2));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("inf".parse::<ExtExp>().unwrap(), ExtExp::INFINITY);
        assert_eq!("6/4".parse::<ExtExp>().unwrap(), ExtExp::ratio(3, 2));
        assert_eq!(ExtExp::ratio(6, 4).to_string(), "3/2");
        assert_eq!(ExtExp::integer(7).to_string(), "7");
        assert!("-1".parse::<ExtExp>().is_err());
        assert!("1/0".parse::<ExtExp>().is_err());
        assert!(ExtExp::finite(q(-1, 2)).is_err());
    }

    #[test]
    fn subset_of_rays() {
        let r = |a: i64, e: Flag| Ray::new(ExtExp::ratio(a, 1), e);
        assert!(r(2, Flag::Open).is_subset_of(&r(2, Flag::Closed)));
        assert!(!r(2, Flag::Closed).is_subset_of(&r(2, Flag::Open)));
        assert!(r(3, Flag::Closed).is_subset_of(&r(2, Flag::Open)));
        assert!(Ray::empty().is_subset_of(&r(5, Flag::Open)));
        assert!(!Ray::full().is_subset_of(&r(0, Flag::Open)));
        assert!(r(0, Flag::Open).is_subset_of(&Ray::full()));
    }

    fn small_ext() -> impl Strategy<Value = ExtExp> {
        prop_oneof![
            4 => (0i64..20, 1i64..5).prop_map(|(n, d)| ExtExp::ratio(n, d)),
            1 => Just(ExtExp::INFINITY),
        ]
    }

    fn flag() -> impl Strategy<Value = Flag> {
        prop_oneof![Just(Flag::Closed), Just(Flag::Open)]
    }

    proptest! {
        #[test]
        fn transitivity_bridge(r in small_ext(), a in small_ext(), e in flag(), bump in 0i64..10) {
            if let Some(rv) = r.as_finite() {
                let bigger = ExtExp::finite(rv + q(bump, 3)).unwrap();
                if geq_eps(&r, &a, e) {
                    prop_assert!(geq_eps(&bigger, &a, e));
                }
            }
        }

        #[test]
        fn open_implies_closed(r in small_ext(), a in small_ext()) {
            if !a.is_infinite() && geq_eps(&r, &a, Flag::Open) {
                prop_assert!(geq_eps(&r, &a, Flag::Closed));
            }
        }

        #[test]
        fn perturbed_flag_independence(v in (0i64..20, 1i64..5), a in (0i64..20, 1i64..5)) {
            let v = q(v.0, v.1);
            let a = ExtExp::ratio(a.0, a.1);
            let exact = PerturbedCoord::exact(v.clone());
            prop_assert_eq!(
                perturbed_satisfies(&exact, &Ray::closed(a.clone())),
                ExtExp::finite(v.clone()).unwrap() >= a
            );
            let plus = PerturbedCoord::plus(v);
            prop_assert_eq!(
                perturbed_satisfies(&plus, &Ray::closed(a.clone())),
                perturbed_satisfies(&plus, &Ray::open(a))
            );
        }

        #[test]
        fn subset_matches_sampled_membership(a in small_ext(), e in flag(), b in small_ext(), f in flag()) {
            let (x, y) = (Ray::new(a, e), Ray::new(b, f));
            // Every bound and its neighbours at distance 1/97 decide inclusion.
            let mut samples = vec![q(0, 1)];
            for bound in [&x.alpha, &y.alpha].into_iter().filter_map(ExtExp::as_finite) {
                samples.push(bound.clone());
                samples.push(bound + q(1, 97));
            }
            let sampled = samples.iter().all(|s| !x.admits(s) || y.admits(s));
            prop_assert_eq!(x.is_subset_of(&y), sampled);
        }
    }
}
