//! Constructive rules for combining pure-power ideals.
//!
//! On a single variable, an intersection of rays is again a ray (largest
//! bound, open wins on ties) and so is a sum (smallest bound, closed wins on
//! ties). Grouping by variable turns an intersection of pure powers into a
//! box and a sum of pure powers into an irreducible.

use crate::error::{check_dim, Error, Result};
use crate::exponent::{ExtExp, Flag, Ray};
use crate::ideal::{AfgIdeal, BoxIdeal, FiniteGeneratorSet, IrreducibleIdeal, PurePowerIdeal};
use crate::monomial::{lcm, Monomial};

/// The ray of `⋂_t J_{i,alpha_t,eps_t}` on one variable.
///
/// The bound is the largest input bound (`0` for no input); the result is
/// open iff some ray attaining that bound is open.
pub fn merge_intersect_same_var<'a>(rays: impl IntoIterator<Item = &'a Ray>) -> Ray {
    let mut best: Option<Ray> = None;
    for ray in rays {
        best = Some(match best {
            None => ray.clone(),
            Some(cur) => match ray.alpha.cmp(&cur.alpha) {
                std::cmp::Ordering::Greater => ray.clone(),
                std::cmp::Ordering::Less => cur,
                std::cmp::Ordering::Equal => Ray::new(cur.alpha, cur.eps.max(ray.eps)),
            },
        });
    }
    best.map_or_else(Ray::full, |r| r.normalized())
}

/// The ray of `Σ_t J_{i,alpha_t,eps_t}` on one variable.
///
/// The bound is the smallest input bound (`inf` for no input); the result is
/// closed iff some ray attaining that bound is closed.
pub fn merge_sum_same_var<'a>(rays: impl IntoIterator<Item = &'a Ray>) -> Ray {
    let mut best: Option<Ray> = None;
    for ray in rays {
        best = Some(match best {
            None => ray.clone(),
            Some(cur) => match ray.alpha.cmp(&cur.alpha) {
                std::cmp::Ordering::Less => ray.clone(),
                std::cmp::Ordering::Greater => cur,
                std::cmp::Ordering::Equal => Ray::new(cur.alpha, cur.eps.min(ray.eps)),
            },
        });
    }
    best.map_or_else(Ray::empty, |r| r.normalized())
}

fn group_by_var(terms: &[PurePowerIdeal], dim: usize) -> Result<Vec<Vec<&Ray>>> {
    let mut groups = vec![Vec::new(); dim];
    for t in terms {
        groups
            .get_mut(t.var)
            .ok_or(Error::VariableIndex { index: t.var, dim })?
            .push(&t.ray);
    }
    Ok(groups)
}

/// `⋂_t J_{i_t,alpha_t,eps_t}` as a box. Variables without a term are
/// unconstrained.
pub fn intersect_pure(terms: &[PurePowerIdeal], dim: usize) -> Result<BoxIdeal> {
    let groups = group_by_var(terms, dim)?;
    BoxIdeal::new(groups.into_iter().map(merge_intersect_same_var).collect())
}

/// `Σ_t J_{i_t,alpha_t,eps_t}` as an irreducible. Variables without a term
/// contribute no generator.
pub fn sum_pure(terms: &[PurePowerIdeal], dim: usize) -> Result<IrreducibleIdeal> {
    let groups = group_by_var(terms, dim)?;
    IrreducibleIdeal::new(groups.into_iter().map(merge_sum_same_var).collect())
}

/// `I_{alpha,eps} = ⋂_i J_{i,alpha_i,eps_i}`.
pub fn box_as_intersection(b: &BoxIdeal) -> Vec<PurePowerIdeal> {
    b.rays().iter().cloned().enumerate().map(|(i, r)| PurePowerIdeal::new(i, r)).collect()
}

/// `J_{alpha,eps} = Σ_i J_{i,alpha_i,eps_i}`.
pub fn irr_as_sum(j: &IrreducibleIdeal) -> Vec<PurePowerIdeal> {
    j.rays().iter().cloned().enumerate().map(|(i, r)| PurePowerIdeal::new(i, r)).collect()
}

/// Intersection of two sums of boxes: the sum of all pairwise box
/// intersections.
pub fn intersect_afg(a: &AfgIdeal, b: &AfgIdeal) -> Result<AfgIdeal> {
    check_dim(a.dim(), b.dim())?;
    let mut boxes = Vec::new();
    for x in a.boxes() {
        for y in b.boxes() {
            let mut terms = box_as_intersection(x);
            terms.extend(box_as_intersection(y));
            boxes.push(intersect_pure(&terms, a.dim())?);
        }
    }
    Ok(AfgIdeal::new(a.dim(), boxes)?.simplified())
}

/// Sum of two sums of boxes.
pub fn sum_afg(a: &AfgIdeal, b: &AfgIdeal) -> Result<AfgIdeal> {
    check_dim(a.dim(), b.dim())?;
    let boxes = a.boxes().iter().chain(b.boxes()).cloned().collect();
    AfgIdeal::new(a.dim(), boxes)
}

/// `⋂_i (S_i)R = (lcm(f_1, ..., f_k) : f_i ∈ S_i)R`, with dominated
/// generators removed along the way.
pub fn intersect_finite_generated(sets: &[FiniteGeneratorSet]) -> Result<FiniteGeneratorSet> {
    let Some(first) = sets.first() else {
        return Err(Error::EmptyFamily);
    };
    let dim = first.dim();
    let mut acc = FiniteGeneratorSet::new(dim, vec![Monomial::one(dim)?])?;
    for s in sets {
        check_dim(dim, s.dim())?;
        let mut gens = Vec::with_capacity(acc.gens().len() * s.gens().len());
        for f in acc.gens() {
            for g in s.gens() {
                gens.push(lcm([f, g])?);
            }
        }
        acc = FiniteGeneratorSet::new(dim, gens)?.minimized();
    }
    Ok(acc)
}

/// Splits `(G)R` at a member `b` into the `d` ideals `(G ∪ {X_j^{b_j}})R`,
/// whose intersection is `(G)R` again.
pub fn split_at_monomial(g: &FiniteGeneratorSet, b: &Monomial) -> Result<Vec<FiniteGeneratorSet>> {
    if !g.member(b)? {
        return Err(Error::NotInIdeal);
    }
    (0..g.dim())
        .map(|j| {
            let mut gens = g.gens().to_vec();
            gens.push(Monomial::pure_power(g.dim(), j, b.exps()[j].clone())?);
            FiniteGeneratorSet::new(g.dim(), gens)
        })
        .collect()
}

/// `(S)R = Σ_{X^r ∈ S} I_{r,0}`.
pub fn finite_gen_to_afg(s: &FiniteGeneratorSet) -> AfgIdeal {
    let boxes = s.gens().iter().map(BoxIdeal::principal).collect();
    AfgIdeal::new(s.dim(), boxes).expect("generator dimensions already checked")
}

/// The pure power `J_{i,alpha,eps}` for a 0-based variable index.
pub fn pure_power(var: usize, alpha: ExtExp, eps: Flag) -> PurePowerIdeal {
    PurePowerIdeal::new(var, Ray::new(alpha, eps))
}
