//! The ideal representations and their membership tests.
//!
//! A monomial ideal is determined by the set of monomials it contains, so
//! every representation here is judged by a membership predicate:
//!
//! * [`BoxIdeal`] `I_{alpha,eps}`: generated by every `X^r` whose exponents
//!   satisfy *all* coordinate rays. That generating set is already closed
//!   under taking multiples, so `m` is a member iff `m` itself satisfies all
//!   rays.
//! * [`IrreducibleIdeal`] `J_{alpha,eps}`: generated by the pure powers
//!   `X_i^{r_i}` with `r_i` in ray `i`; `m` is a member iff *some* coordinate
//!   satisfies its ray.
//! * [`AfgIdeal`]: a finite sum of boxes, whose monomial set is the union.
//! * [`Decomposition`]: a finite intersection of irreducibles.
//! * [`FiniteGeneratorSet`]: an explicit finite list of generators.
//!
//! Ray vectors always have full length: `Ray(0, 0)` is the vacuous
//! constraint in a box, `Ray(inf, _)` contributes no generator to an
//! irreducible.

use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::exponent::{perturbed_satisfies, ExtExp, Flag, PerturbedCoord, Ray};
use crate::monomial::Monomial;

fn rays_from_parts(alphas: &[&str], eps: &[u8]) -> Result<Vec<Ray>> {
    check_dim(alphas.len(), eps.len())?;
    alphas
        .iter()
        .zip(eps)
        .map(|(a, &e)| {
            let alpha: ExtExp = a.parse()?;
            let flag = Flag::from_bit(e).ok_or(Error::InvalidFlag(e))?;
            Ok(Ray::new(alpha, flag))
        })
        .collect()
}

fn nonempty(rays: Vec<Ray>) -> Result<Vec<Ray>> {
    if rays.is_empty() {
        Err(Error::ZeroDimension)
    } else {
        Ok(rays)
    }
}

fn write_rays(f: &mut fmt::Formatter<'_>, tag: &str, rays: &[Ray]) -> fmt::Result {
    write!(f, "{tag}[")?;
    for (i, r) in rays.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", r.alpha)?;
    }
    f.write_str(";")?;
    for (i, r) in rays.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", r.eps.bit())?;
    }
    f.write_str("]")
}

/// `J_{i,alpha,eps}`, generated by the pure powers `X_i^r` with `r` in the
/// ray. `var` is 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PurePowerIdeal {
    pub var: usize,
    pub ray: Ray,
}

impl PurePowerIdeal {
    pub fn new(var: usize, ray: Ray) -> Self {
        PurePowerIdeal { var, ray }
    }

    pub fn is_zero(&self) -> bool {
        self.ray.is_empty()
    }

    pub fn member(&self, m: &Monomial) -> Result<bool> {
        let r = m.exps().get(self.var).ok_or(Error::VariableIndex { index: self.var, dim: m.dim() })?;
        Ok(self.ray.admits(r))
    }

    /// The same ideal as a one-variable irreducible in `dim` variables.
    pub fn to_irreducible(&self, dim: usize) -> Result<IrreducibleIdeal> {
        if self.var >= dim {
            return Err(Error::VariableIndex { index: self.var, dim });
        }
        let mut rays = vec![Ray::empty(); dim];
        rays[self.var] = self.ray.clone();
        IrreducibleIdeal::new(rays)
    }
}

impl fmt::Display for PurePowerIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Jp[{},{},{}]", self.var + 1, self.ray.alpha, self.ray.eps.bit())
    }
}

/// `J_{alpha,eps}`: the m-irreducible monomial ideals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleIdeal {
    rays: Vec<Ray>,
}

impl IrreducibleIdeal {
    pub fn new(rays: Vec<Ray>) -> Result<Self> {
        Ok(IrreducibleIdeal { rays: nonempty(rays)? })
    }

    /// Builds `J` from bound strings (`"3/2"`, `"inf"`) and flag bits.
    pub fn from_parts(alphas: &[&str], eps: &[u8]) -> Result<Self> {
        Self::new(rays_from_parts(alphas, eps)?)
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(vec![Ray::empty(); dim])
    }

    /// `J_{0,0}`, which contains `X^0 = 1`.
    pub fn unit(dim: usize) -> Result<Self> {
        Self::new(vec![Ray::full(); dim])
    }

    pub fn dim(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn is_zero(&self) -> bool {
        self.rays.iter().all(Ray::is_empty)
    }

    pub fn is_unit(&self) -> bool {
        self.rays.iter().any(Ray::is_full)
    }

    pub fn member(&self, m: &Monomial) -> Result<bool> {
        check_dim(self.dim(), m.dim())?;
        Ok(self.rays.iter().zip(m.exps()).any(|(ray, r)| ray.admits(r)))
    }

    pub fn contains_point(&self, point: &[PerturbedCoord]) -> bool {
        self.rays.iter().zip(point).any(|(ray, p)| perturbed_satisfies(p, ray))
    }

    /// Ideal inclusion `self ⊆ other`, decided ray by ray.
    pub fn is_subset_of(&self, other: &IrreducibleIdeal) -> bool {
        if self.is_zero() || other.is_unit() {
            return true;
        }
        self.rays.iter().zip(&other.rays).all(|(a, b)| a.is_subset_of(b))
    }

    /// Canonical spelling: empty rays get the closed flag.
    pub fn normalized(&self) -> IrreducibleIdeal {
        IrreducibleIdeal { rays: self.rays.iter().map(Ray::normalized).collect() }
    }
}

impl fmt::Display for IrreducibleIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rays(f, "J", &self.rays)
    }
}

/// What kind of ideal a box turns out to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxKind {
    Zero,
    /// All flags closed: the principal ideal of the corner monomial.
    Principal,
    OpenBox,
}

/// `I_{alpha,eps}`, the almost-principal ideals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxIdeal {
    rays: Vec<Ray>,
}

impl BoxIdeal {
    pub fn new(rays: Vec<Ray>) -> Result<Self> {
        Ok(BoxIdeal { rays: nonempty(rays)? })
    }

    /// Builds `I` from bound strings (`"3/2"`, `"inf"`) and flag bits.
    pub fn from_parts(alphas: &[&str], eps: &[u8]) -> Result<Self> {
        Self::new(rays_from_parts(alphas, eps)?)
    }

    /// `I_{r,0} = (X^r)R`.
    pub fn principal(m: &Monomial) -> Self {
        let rays = m.exps().iter().map(|r| Ray::closed(ExtExp::finite(r.clone()).expect("monomial exponents are nonnegative"))).collect();
        BoxIdeal { rays }
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(vec![Ray::empty(); dim])
    }

    pub fn unit(dim: usize) -> Result<Self> {
        Self::new(vec![Ray::full(); dim])
    }

    pub fn dim(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn is_zero(&self) -> bool {
        self.rays.iter().any(Ray::is_empty)
    }

    pub fn is_unit(&self) -> bool {
        self.rays.iter().all(Ray::is_full)
    }

    pub fn classify(&self) -> BoxKind {
        if self.is_zero() {
            BoxKind::Zero
        } else if self.rays.iter().all(|r| r.eps == Flag::Closed) {
            BoxKind::Principal
        } else {
            BoxKind::OpenBox
        }
    }

    pub fn member(&self, m: &Monomial) -> Result<bool> {
        check_dim(self.dim(), m.dim())?;
        Ok(self.rays.iter().zip(m.exps()).all(|(ray, r)| ray.admits(r)))
    }

    pub fn contains_point(&self, point: &[PerturbedCoord]) -> bool {
        self.rays.iter().zip(point).all(|(ray, p)| perturbed_satisfies(p, ray))
    }

    /// Ideal inclusion `self ⊆ other`, decided ray by ray.
    pub fn is_subset_of(&self, other: &BoxIdeal) -> bool {
        if self.is_zero() {
            return true;
        }
        !other.is_zero() && self.rays.iter().zip(&other.rays).all(|(a, b)| a.is_subset_of(b))
    }

    /// The lowest point of the region, with open flags as `v+`. `None` for
    /// the zero box.
    pub fn corner(&self) -> Option<Vec<PerturbedCoord>> {
        self.rays
            .iter()
            .map(|r| {
                let base = r.alpha.as_finite()?.clone();
                Some(match r.eps {
                    Flag::Closed => PerturbedCoord::exact(base),
                    Flag::Open => PerturbedCoord::plus(base),
                })
            })
            .collect()
    }

    /// Canonical spelling: every zero box becomes `I[inf,...;0,...]`.
    pub fn normalized(&self) -> BoxIdeal {
        if self.is_zero() {
            BoxIdeal { rays: vec![Ray::empty(); self.dim()] }
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for BoxIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rays(f, "I", &self.rays)
    }
}

/// Finite generation of a single-form ideal.
pub trait FinitelyGenerated {
    fn is_finitely_generated(&self) -> bool;
}

impl FinitelyGenerated for PurePowerIdeal {
    fn is_finitely_generated(&self) -> bool {
        self.ray.is_empty() || self.ray.eps == Flag::Closed
    }
}

impl FinitelyGenerated for IrreducibleIdeal {
    fn is_finitely_generated(&self) -> bool {
        self.rays.iter().all(|r| r.is_empty() || r.eps == Flag::Closed)
    }
}

impl FinitelyGenerated for BoxIdeal {
    fn is_finitely_generated(&self) -> bool {
        self.is_zero() || self.rays.iter().all(|r| r.eps == Flag::Closed)
    }
}

/// A finite sum of boxes. The empty sum is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AfgIdeal {
    dim: usize,
    boxes: Vec<BoxIdeal>,
}

impl AfgIdeal {
    pub fn new(dim: usize, boxes: Vec<BoxIdeal>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for b in &boxes {
            check_dim(dim, b.dim())?;
        }
        Ok(AfgIdeal { dim, boxes })
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(dim, Vec::new())
    }

    pub fn unit(dim: usize) -> Result<Self> {
        Self::new(dim, vec![BoxIdeal::unit(dim)?])
    }

    pub fn from_box(b: BoxIdeal) -> Self {
        AfgIdeal { dim: b.dim(), boxes: vec![b] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn boxes(&self) -> &[BoxIdeal] {
        &self.boxes
    }

    pub fn into_boxes(self) -> Vec<BoxIdeal> {
        self.boxes
    }

    /// True when the sum has no nonzero box.
    pub fn is_zero(&self) -> bool {
        self.boxes.iter().all(BoxIdeal::is_zero)
    }

    pub fn member(&self, m: &Monomial) -> Result<bool> {
        check_dim(self.dim, m.dim())?;
        Ok(self.boxes.iter().any(|b| b.rays.iter().zip(m.exps()).all(|(ray, r)| ray.admits(r))))
    }

    pub fn contains_point(&self, point: &[PerturbedCoord]) -> bool {
        self.boxes.iter().any(|b| b.contains_point(point))
    }

    /// The same sum with zero, duplicate and dominated boxes dropped.
    pub fn simplified(&self) -> AfgIdeal {
        AfgIdeal { dim: self.dim, boxes: prune_boxes(self.boxes.iter().cloned()) }
    }
}

/// Removes zero boxes and every box contained in another one. The first of
/// two equal boxes survives.
pub(crate) fn prune_boxes(boxes: impl IntoIterator<Item = BoxIdeal>) -> Vec<BoxIdeal> {
    let mut kept: Vec<BoxIdeal> = Vec::new();
    for b in boxes {
        if b.is_zero() || kept.iter().any(|k| b.is_subset_of(k)) {
            continue;
        }
        kept.retain(|k| !k.is_subset_of(&b));
        kept.push(b);
    }
    kept
}

/// Removes unit components and every component containing another one.
/// A zero component swallows everything else.
pub(crate) fn prune_components(components: impl IntoIterator<Item = IrreducibleIdeal>) -> Vec<IrreducibleIdeal> {
    let mut kept: Vec<IrreducibleIdeal> = Vec::new();
    for j in components {
        if j.is_unit() || kept.iter().any(|k| k.is_subset_of(&j)) {
            continue;
        }
        kept.retain(|k| !j.is_subset_of(k));
        kept.push(j);
    }
    kept
}

/// A finite intersection of irreducibles. The empty intersection is the unit
/// ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    dim: usize,
    components: Vec<IrreducibleIdeal>,
}

impl Decomposition {
    pub fn new(dim: usize, components: Vec<IrreducibleIdeal>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for j in &components {
            check_dim(dim, j.dim())?;
        }
        Ok(Decomposition { dim, components })
    }

    pub fn unit(dim: usize) -> Result<Self> {
        Self::new(dim, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[IrreducibleIdeal] {
        &self.components
    }

    pub fn into_components(self) -> Vec<IrreducibleIdeal> {
        self.components
    }

    pub fn member(&self, m: &Monomial) -> Result<bool> {
        check_dim(self.dim, m.dim())?;
        Ok(self.components.iter().all(|j| j.rays.iter().zip(m.exps()).any(|(ray, r)| ray.admits(r))))
    }

    pub fn contains_point(&self, point: &[PerturbedCoord]) -> bool {
        self.components.iter().all(|j| j.contains_point(point))
    }
}

/// `(gens)R` for an explicit finite generator list. No generators means the
/// zero ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGeneratorSet {
    dim: usize,
    gens: Vec<Monomial>,
}

impl FiniteGeneratorSet {
    pub fn new(dim: usize, gens: Vec<Monomial>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        for g in &gens {
            check_dim(dim, g.dim())?;
        }
        Ok(FiniteGeneratorSet { dim, gens })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn member(&self, m: &Monomial) -> Result<bool> {
        check_dim(self.dim, m.dim())?;
        for g in &self.gens {
            if g.divides(m)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Drops duplicates and generators divisible by another generator.
    pub fn minimized(&self) -> FiniteGeneratorSet {
        let mut kept: Vec<Monomial> = Vec::new();
        for g in &self.gens {
            if kept.iter().any(|k| k.divides(g).unwrap_or(false)) {
                continue;
            }
            kept.retain(|k| !g.divides(k).unwrap_or(false));
            kept.push(g.clone());
        }
        FiniteGeneratorSet { dim: self.dim, gens: kept }
    }
}
