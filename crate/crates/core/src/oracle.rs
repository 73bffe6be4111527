//! Brute-force membership over a finite grid of rational points.
//!
//! The grid is the ground truth the rest of the crate is checked against.
//! It reads bounds straight off the ideal data and evaluates the defining
//! conditions on integers, sharing no code with the membership methods of
//! [`crate::ideal`].
//!
//! For each coordinate the grid holds `0` and `v - 1/Q, v, v + 1/Q` for every
//! bound `v` met on that coordinate, where `Q = 2 L + 1` and `L` is the lcm
//! of all bound denominators. Distinct bounds differ by at least `1/L`, so
//! `v + 1/Q` sits strictly between `v` and the next bound and stands in for
//! the perturbed value `v+`. Uniformly random rational points are appended.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::exponent::{Flag, Offset, PerturbedCoord, Rational, Ray};
use crate::ideal::{AfgIdeal, BoxIdeal, Decomposition, FiniteGeneratorSet, IrreducibleIdeal};
use crate::monomial::Monomial;

/// Common denominator guaranteed for random points (lcm of 1..=12).
const RANDOM_DENOMS: i64 = 27720;

/// Anything whose membership the oracle can evaluate.
#[derive(Clone, Copy, Debug)]
pub enum Subject<'a> {
    Box(&'a BoxIdeal),
    Irreducible(&'a IrreducibleIdeal),
    Sum(&'a AfgIdeal),
    Intersection(&'a Decomposition),
    Gens(&'a FiniteGeneratorSet),
}

impl Subject<'_> {
    fn dim(&self) -> usize {
        match self {
            Subject::Box(b) => b.dim(),
            Subject::Irreducible(j) => j.dim(),
            Subject::Sum(a) => a.dim(),
            Subject::Intersection(d) => d.dim(),
            Subject::Gens(g) => g.dim(),
        }
    }

    fn bounds(&self, out: &mut [Vec<Rational>]) {
        let rays = |rays: &[Ray], out: &mut [Vec<Rational>]| {
            for (slot, r) in out.iter_mut().zip(rays) {
                if let Some(a) = r.alpha.as_finite() {
                    slot.push(a.clone());
                }
            }
        };
        match self {
            Subject::Box(b) => rays(b.rays(), out),
            Subject::Irreducible(j) => rays(j.rays(), out),
            Subject::Sum(a) => a.boxes().iter().for_each(|b| rays(b.rays(), out)),
            Subject::Intersection(d) => d.components().iter().for_each(|j| rays(j.rays(), out)),
            Subject::Gens(g) => {
                for m in g.gens() {
                    for (slot, e) in out.iter_mut().zip(m.exps()) {
                        slot.push(e.clone());
                    }
                }
            }
        }
    }
}

/// A ray bound scaled to an integer; `None` is `inf`.
#[derive(Clone, Copy)]
struct Bound {
    value: Option<i128>,
    open: bool,
}

impl Bound {
    fn admits(self, x: i128) -> bool {
        match self.value {
            None => false,
            Some(a) if self.open => x > a,
            Some(a) => x >= a,
        }
    }
}

/// A finite point set together with a brute-force membership evaluator.
#[derive(Clone, Debug)]
pub struct GridOracle {
    dim: usize,
    scale: BigInt,
    q: BigInt,
    points: Vec<Vec<i128>>,
}

impl GridOracle {
    /// The default grid for `subjects` plus 100 random points.
    pub fn new<R: Rng + ?Sized>(subjects: &[Subject<'_>], rng: &mut R) -> Self {
        Self::with_random_points(subjects, 100, rng)
    }

    /// # Panics
    ///
    /// Panics if `subjects` is empty, mixes dimensions, or has bounds whose
    /// scaled values overflow `i128`.
    pub fn with_random_points<R: Rng + ?Sized>(subjects: &[Subject<'_>], random_points: usize, rng: &mut R) -> Self {
        let dim = subjects.first().expect("at least one subject").dim();
        assert!(subjects.iter().all(|s| s.dim() == dim), "subjects must share a dimension");
        let mut per_coord = vec![Vec::new(); dim];
        for s in subjects {
            s.bounds(&mut per_coord);
        }
        let l = per_coord.iter().flatten().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let q: BigInt = &l * 2 + 1;
        let scale = (&l * &q).lcm(&BigInt::from(RANDOM_DENOMS));
        let step = (&scale / &q).to_i128().expect("grid scale fits in i128");
        let scaled = |r: &Rational| -> i128 {
            (r.numer() * (&scale / r.denom())).to_i128().expect("grid value fits in i128")
        };

        let mut axes: Vec<Vec<i128>> = Vec::with_capacity(dim);
        let mut top = 0i128;
        for bounds in &per_coord {
            let mut axis = vec![0i128];
            for v in bounds.iter().map(scaled) {
                top = top.max(v);
                axis.extend([v - step, v, v + step].into_iter().filter(|x| *x >= 0));
            }
            axis.sort_unstable();
            axis.dedup();
            axes.push(axis);
        }

        let mut points = vec![Vec::with_capacity(dim)];
        for axis in &axes {
            points = points
                .into_iter()
                .flat_map(|p: Vec<i128>| {
                    axis.iter().map(move |&x| {
                        let mut p = p.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }

        // Random rationals with denominators up to 12, up to one past the
        // largest bound.
        let unit = scaled(&Rational::one());
        let span = (top / unit + 2) as i64;
        for _ in 0..random_points {
            let p = (0..dim)
                .map(|_| {
                    let den = rng.gen_range(1..=12i64);
                    let num = rng.gen_range(0..span * den);
                    num as i128 * (unit / den as i128)
                })
                .collect();
            points.push(p);
        }
        GridOracle { dim, scale, q, points }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The grid as monomials, in bitmap order.
    pub fn points(&self) -> Vec<Monomial> {
        self.points.iter().map(|p| self.to_monomial(p)).collect()
    }

    fn to_monomial(&self, p: &[i128]) -> Monomial {
        let exps = p.iter().map(|&x| Rational::new(BigInt::from(x), self.scale.clone())).collect();
        Monomial::new(exps).expect("grid points are nonnegative")
    }

    fn scale_value(&self, r: &Rational) -> Option<i128> {
        let num = r.numer() * &self.scale;
        let (quot, rem) = num.div_rem(r.denom());
        if rem.is_zero() {
            quot.to_i128()
        } else {
            None
        }
    }

    fn bounds_of(&self, rays: &[Ray]) -> Vec<Bound> {
        rays.iter()
            .map(|r| Bound {
                value: r.alpha.as_finite().map(|a| self.scale_value(a).expect("bound lies on the grid")),
                open: r.eps == Flag::Open,
            })
            .collect()
    }

    /// Membership of every grid point, in [`GridOracle::points`] order.
    pub fn membership(&self, subject: &Subject<'_>) -> Vec<bool> {
        assert_eq!(subject.dim(), self.dim, "subject dimension");
        let eval = self.evaluator(subject);
        self.points.iter().map(|p| eval(p)).collect()
    }

    /// Membership of an arbitrary monomial whose coordinates lie on the
    /// grid's lattice `(1/scale) Z`; `None` when they do not.
    pub fn member_at(&self, subject: &Subject<'_>, m: &Monomial) -> Option<bool> {
        let p: Option<Vec<i128>> = m.exps().iter().map(|r| self.scale_value(r)).collect();
        Some(self.evaluator(subject)(&p?))
    }

    /// Replaces every `v+` by `v + 1/Q`, the grid's stand-in for it.
    pub fn concretize(&self, point: &[PerturbedCoord]) -> Monomial {
        let nudge = Rational::new(BigInt::one(), self.q.clone());
        let exps = point
            .iter()
            .map(|c| match c.offset {
                Offset::Exact => c.base.clone(),
                Offset::Plus => &c.base + &nudge,
            })
            .collect();
        Monomial::new(exps).expect("witness coordinates are nonnegative")
    }

    fn evaluator<'s>(&self, subject: &Subject<'s>) -> Box<dyn Fn(&[i128]) -> bool + 's> {
        let in_box = |b: &[Bound], p: &[i128]| b.iter().zip(p).all(|(r, &x)| r.admits(x));
        let in_irr = |b: &[Bound], p: &[i128]| b.iter().zip(p).any(|(r, &x)| r.admits(x));
        match *subject {
            Subject::Box(b) => {
                let b = self.bounds_of(b.rays());
                Box::new(move |p| in_box(&b, p))
            }
            Subject::Irreducible(j) => {
                let j = self.bounds_of(j.rays());
                Box::new(move |p| in_irr(&j, p))
            }
            Subject::Sum(a) => {
                let boxes: Vec<_> = a.boxes().iter().map(|b| self.bounds_of(b.rays())).collect();
                Box::new(move |p| boxes.iter().any(|b| in_box(b, p)))
            }
            Subject::Intersection(d) => {
                let comps: Vec<_> = d.components().iter().map(|j| self.bounds_of(j.rays())).collect();
                Box::new(move |p| comps.iter().all(|j| in_irr(j, p)))
            }
            Subject::Gens(g) => {
                let gens: Vec<Vec<i128>> = g
                    .gens()
                    .iter()
                    .map(|m| m.exps().iter().map(|e| self.scale_value(e).expect("generator lies on the grid")).collect())
                    .collect();
                Box::new(move |p| gens.iter().any(|g| g.iter().zip(p).all(|(a, x)| x >= a)))
            }
        }
    }
}

/// Convenience: membership bitmap of `subject` on its own default grid.
pub fn grid_oracle<R: Rng + ?Sized>(subject: Subject<'_>, rng: &mut R) -> (Vec<Monomial>, Vec<bool>) {
    let oracle = GridOracle::new(&[subject], rng);
    (oracle.points(), oracle.membership(&subject))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn bx(a: &[&str], e: &[u8]) -> BoxIdeal {
        BoxIdeal::from_parts(a, e).unwrap()
    }

    #[test]
    fn corner_of_closed_box_is_member() {
        let b = bx(&["2", "3/2"], &[0, 0]);
        let oracle = GridOracle::new(&[Subject::Box(&b)], &mut StdRng::seed_from_u64(1));
        let corner = Monomial::from_ratios(&[(2, 1), (3, 2)]);
        assert_eq!(oracle.member_at(&Subject::Box(&b), &corner), Some(true));
    }

    #[test]
    fn corner_of_open_box_is_not_member() {
        let b = bx(&["2", "3/2"], &[0, 1]);
        let oracle = GridOracle::new(&[Subject::Box(&b)], &mut StdRng::seed_from_u64(1));
        let corner = Monomial::from_ratios(&[(2, 1), (3, 2)]);
        assert_eq!(oracle.member_at(&Subject::Box(&b), &corner), Some(false));
    }

    #[test]
    fn example_intersection_matches_box() {
        let comps = vec![
            IrreducibleIdeal::from_parts(&["2", "inf"], &[1, 0]).unwrap(),
            IrreducibleIdeal::from_parts(&["inf", "3/2"], &[0, 0]).unwrap(),
            IrreducibleIdeal::from_parts(&["5/3", "inf"], &[0, 0]).unwrap(),
            IrreducibleIdeal::from_parts(&["inf", "1"], &[0, 1]).unwrap(),
        ];
        let d = Decomposition::new(2, comps).unwrap();
        let b = bx(&["2", "3/2"], &[1, 0]);
        let subjects = [Subject::Intersection(&d), Subject::Box(&b)];
        let oracle = GridOracle::new(&subjects, &mut StdRng::seed_from_u64(7));
        assert_eq!(oracle.membership(&subjects[0]), oracle.membership(&subjects[1]));
        // 0 and three neighbours each for 2 and 5/3 on x; 0 and 3 each for
        // 3/2 and 1 on y (where 1 - 1/Q is also kept).
        assert_eq!(oracle.len(), 7 * 7 + 100);
    }

    #[test]
    fn plus_coordinates_land_between_bounds() {
        let b = bx(&["1/2"], &[1]);
        let oracle = GridOracle::new(&[Subject::Box(&b)], &mut StdRng::seed_from_u64(3));
        let w = oracle.concretize(&[PerturbedCoord::plus(Rational::new(1.into(), 2.into()))]);
        assert_eq!(oracle.member_at(&Subject::Box(&b), &w), Some(true));
        let w = oracle.concretize(&[PerturbedCoord::exact(Rational::new(1.into(), 2.into()))]);
        assert_eq!(oracle.member_at(&Subject::Box(&b), &w), Some(false));
    }
}
