#![allow(dead_code)]

use midr::exponent::{ExtExp, Flag, Rational, Ray};
use midr::ideal::{AfgIdeal, BoxIdeal, Decomposition, FiniteGeneratorSet, IrreducibleIdeal};
use midr::monomial::Monomial;
use midr::oracle::{GridOracle, Subject};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonnegative rational with denominator at most `max_den`, below `max + 1`.
pub fn rational<R: Rng>(rng: &mut R, max_den: i64, max: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(0..=max * den);
    Rational::new(num.into(), den.into())
}

pub fn flag<R: Rng>(rng: &mut R) -> Flag {
    if rng.gen_bool(0.5) {
        Flag::Open
    } else {
        Flag::Closed
    }
}

pub fn ray<R: Rng>(rng: &mut R, p_inf: f64) -> Ray {
    if rng.gen_bool(p_inf) {
        Ray::new(ExtExp::INFINITY, flag(rng))
    } else {
        Ray::new(ExtExp::finite(rational(rng, 12, 3)).unwrap(), flag(rng))
    }
}

pub fn box_ideal<R: Rng>(rng: &mut R, dim: usize) -> BoxIdeal {
    // Some coordinates left unconstrained, as real inputs often are.
    let rays = (0..dim).map(|_| if rng.gen_bool(0.15) { Ray::full() } else { ray(rng, 0.05) }).collect();
    BoxIdeal::new(rays).unwrap()
}

pub fn afg<R: Rng>(rng: &mut R, dim: usize, max_boxes: usize) -> AfgIdeal {
    let n = rng.gen_range(0..=max_boxes);
    AfgIdeal::new(dim, (0..n).map(|_| box_ideal(rng, dim)).collect()).unwrap()
}

pub fn irreducible<R: Rng>(rng: &mut R, dim: usize) -> IrreducibleIdeal {
    IrreducibleIdeal::new((0..dim).map(|_| ray(rng, 0.3)).collect()).unwrap()
}

pub fn decomposition<R: Rng>(rng: &mut R, dim: usize, max_components: usize) -> Decomposition {
    let n = rng.gen_range(0..=max_components);
    Decomposition::new(dim, (0..n).map(|_| irreducible(rng, dim)).collect()).unwrap()
}

pub fn monomial<R: Rng>(rng: &mut R, dim: usize) -> Monomial {
    Monomial::new((0..dim).map(|_| rational(rng, 6, 3)).collect()).unwrap()
}

pub fn generators<R: Rng>(rng: &mut R, dim: usize, min: usize, max: usize) -> FiniteGeneratorSet {
    let n = rng.gen_range(min..=max);
    FiniteGeneratorSet::new(dim, (0..n).map(|_| monomial(rng, dim)).collect()).unwrap()
}

/// The default grid for `subjects`, with random points drawn from `seed`.
pub fn oracle(subjects: &[Subject<'_>], seed: u64) -> GridOracle {
    GridOracle::new(subjects, &mut rng(seed))
}
