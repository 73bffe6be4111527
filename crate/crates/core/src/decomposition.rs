//! Conversion between sums of boxes and finite m-irreducible decompositions,
//! and the containment test used to compare ideals.
//!
//! Both conversions distribute one operation over the other. A sum of boxes
//! `Σ_t ⋂_i J_{i,...}` becomes `⋂_{(i_1..i_k)} Σ_t J_{i_t,...}` and every
//! inner sum of pure powers collapses to one irreducible; the reverse
//! direction swaps the roles of sum and intersection. The expansion is
//! folded one term at a time, so the `d^k` choice tuples are produced
//! incrementally and dominated terms are dropped between steps.

use std::fmt;

use crate::algebra::{box_as_intersection, intersect_pure, irr_as_sum, sum_pure};
use crate::error::{check_dim, Result};
use crate::exponent::PerturbedCoord;
use crate::ideal::{prune_boxes, prune_components, AfgIdeal, BoxIdeal, Decomposition, IrreducibleIdeal};

/// A finite m-irreducible decomposition of a sum of boxes.
///
/// The empty sum (zero ideal) decomposes as the single zero component;
/// unit components are never emitted, so the unit ideal decomposes as the
/// empty intersection.
pub fn decompose(a: &AfgIdeal) -> Decomposition {
    let dim = a.dim();
    let mut components = vec![IrreducibleIdeal::zero(dim).expect("dim > 0")];
    for b in a.boxes().iter().filter(|b| !b.is_zero()) {
        let pure = box_as_intersection(b);
        let mut next = Vec::with_capacity(components.len() * dim);
        for j in &components {
            let base = irr_as_sum(j);
            for p in &pure {
                let mut terms = base.clone();
                terms.push(p.clone());
                next.push(sum_pure(&terms, dim).expect("indices below dim"));
            }
        }
        components = prune_components(next);
    }
    Decomposition::new(dim, components).expect("dimensions agree")
}

/// A sum of boxes equal to a finite intersection of irreducibles.
///
/// The empty intersection gives the single unit box; zero boxes are dropped,
/// so a zero ideal comes back as the empty sum.
pub fn recompose(d: &Decomposition) -> AfgIdeal {
    let dim = d.dim();
    let mut boxes = vec![BoxIdeal::unit(dim).expect("dim > 0")];
    for j in d.components() {
        let pure = irr_as_sum(j);
        let mut next = Vec::with_capacity(boxes.len() * dim);
        for b in &boxes {
            let base = box_as_intersection(b);
            for p in &pure {
                let mut terms = base.clone();
                terms.push(p.clone());
                next.push(intersect_pure(&terms, dim).expect("indices below dim"));
            }
        }
        boxes = prune_boxes(next);
    }
    AfgIdeal::new(dim, boxes).expect("dimensions agree")
}

/// A point of the inner ideal's region lying outside the outer one.
///
/// Coordinates may be perturbed (`v+`): an open boundary cannot be
/// witnessed by a single monomial, only by every monomial close enough
/// above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub point: Vec<PerturbedCoord>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.point.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Outcome of a containment query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Containment {
    Holds,
    Fails(Witness),
}

impl Containment {
    pub fn holds(&self) -> bool {
        matches!(self, Containment::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Containment::Holds => None,
            Containment::Fails(w) => Some(w),
        }
    }
}

/// Decides `inner ⊆ outer`.
///
/// Every region involved is upward closed. A nonzero box's region is the
/// upward closure of its corner, read with `v+` on open coordinates, so the
/// box lies inside the union of `outer`'s regions exactly when its corner
/// does: if the corner sits in some outer box, so does everything above it;
/// if it misses every outer box, nudging each `v+` up by less than the
/// smallest gap between bound values gives a monomial that still misses
/// them all. The failing corner is returned as the witness.
pub fn contains(outer: &AfgIdeal, inner: &AfgIdeal) -> Result<Containment> {
    check_dim(outer.dim(), inner.dim())?;
    for b in inner.boxes() {
        let Some(corner) = b.corner() else { continue };
        if !outer.contains_point(&corner) {
            return Ok(Containment::Fails(Witness { point: corner }));
        }
    }
    Ok(Containment::Holds)
}

/// Ideal equality, by containment both ways.
pub fn equal(a: &AfgIdeal, b: &AfgIdeal) -> Result<bool> {
    Ok(contains(a, b)?.holds() && contains(b, a)?.holds())
}

/// Drops components that the rest of the intersection already lies in.
///
/// Components are scanned once in input order; a component kept at its turn
/// can never become removable later, since removals only shrink the rest
/// and so enlarge its intersection.
pub fn remove_redundant(d: &Decomposition) -> Decomposition {
    let dim = d.dim();
    let mut components = d.components().to_vec();
    let mut t = 0;
    while t < components.len() {
        let rest: Vec<_> = components.iter().enumerate().filter(|&(s, _)| s != t).map(|(_, j)| j.clone()).collect();
        let rest = recompose(&Decomposition::new(dim, rest).expect("dimensions agree"));
        let target = recompose(&Decomposition::new(dim, vec![components[t].clone()]).expect("dimensions agree"));
        if contains(&target, &rest).expect("dimensions agree").holds() {
            components.remove(t);
        } else {
            t += 1;
        }
    }
    Decomposition::new(dim, components).expect("dimensions agree")
}

/// Result of the m-irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// The ideal equals this irreducible (the unit `J_{0,0}` for `R`).
    Irreducible(IrreducibleIdeal),
    /// The ideal is `first ∩ ⋂ rest`, and both factors strictly contain it.
    Reducible { first: IrreducibleIdeal, rest: Decomposition },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible(_))
    }
}

/// Tests whether a sum of boxes is m-irreducible, i.e. has an irredundant
/// decomposition with at most one component.
pub fn is_m_irreducible(a: &AfgIdeal) -> Irreducibility {
    let dim = a.dim();
    let mut components = remove_redundant(&decompose(a)).into_components();
    match components.len() {
        0 => Irreducibility::Irreducible(IrreducibleIdeal::unit(dim).expect("dim > 0")),
        1 => Irreducibility::Irreducible(components.remove(0)),
        _ => {
            let first = components.remove(0);
            let rest = Decomposition::new(dim, components).expect("dimensions agree");
            Irreducibility::Reducible { first, rest }
        }
    }
}
