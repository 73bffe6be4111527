//! The boundary of a two-variable ideal's region, as a descending staircase.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::exponent::{format_rational, Flag, PerturbedCoord, Rational};
use crate::ideal::AfgIdeal;
use crate::monomial::Monomial;

/// One outer corner of the region. An open flag means the corner's edge on
/// that axis is excluded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corner {
    pub x: Rational,
    pub y: Rational,
    pub x_open: bool,
    pub y_open: bool,
}

impl Corner {
    fn admits(&self, x: &Rational, y: &Rational) -> bool {
        let ok = |v: &Rational, bound: &Rational, open: bool| if open { v > bound } else { v >= bound };
        ok(x, &self.x, self.x_open) && ok(y, &self.y, self.y_open)
    }

    fn perturbed(&self) -> (PerturbedCoord, PerturbedCoord) {
        let coord = |v: &Rational, open: bool| {
            if open {
                PerturbedCoord::plus(v.clone())
            } else {
                PerturbedCoord::exact(v.clone())
            }
        };
        (coord(&self.x, self.x_open), coord(&self.y, self.y_open))
    }
}

#[derive(Serialize)]
struct CornerRecord {
    x: String,
    y: String,
    x_open: bool,
    y_open: bool,
}

/// Corners ordered by strictly increasing `x` and strictly decreasing `y`,
/// both read in the perturbed order (`v < v+`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircasePath {
    corners: Vec<Corner>,
}

impl StaircasePath {
    pub fn corners(&self) -> &[Corner] {
        &self.corners
    }

    /// Whether `m` lies on or above the path.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        check_dim(2, m.dim())?;
        let (x, y) = (&m.exps()[0], &m.exps()[1]);
        Ok(self.corners.iter().any(|c| c.admits(x, y)))
    }

    /// `[{"x":"1","y":"1","x_open":false,"y_open":false}, ...]`
    pub fn to_json(&self) -> String {
        let records: Vec<_> = self
            .corners
            .iter()
            .map(|c| CornerRecord { x: format_rational(&c.x), y: format_rational(&c.y), x_open: c.x_open, y_open: c.y_open })
            .collect();
        serde_json::to_string(&records).expect("corner records serialize")
    }

    /// A standalone SVG drawing: shaded region, boundary, and one marker per
    /// corner (hollow when an edge is open).
    pub fn to_svg(&self) -> String {
        const SIZE: f64 = 400.0;
        const PAD: f64 = 30.0;
        let f = |r: &Rational| r.to_f64().unwrap_or(0.0);
        let extent = self.corners.iter().flat_map(|c| [f(&c.x), f(&c.y)]).fold(0.0f64, f64::max);
        let extent = if extent > 0.0 { extent * 1.25 } else { 1.0 };
        let px = |v: f64| PAD + v / extent * (SIZE - 2.0 * PAD);
        let py = |v: f64| SIZE - PAD - v / extent * (SIZE - 2.0 * PAD);

        let mut boundary = String::new();
        if let Some(first) = self.corners.first() {
            let _ = write!(boundary, "M {:.2} {:.2}", px(f(&first.x)), py(extent));
            for (i, c) in self.corners.iter().enumerate() {
                if i > 0 {
                    let _ = write!(boundary, " H {:.2}", px(f(&c.x)));
                }
                let _ = write!(boundary, " V {:.2}", py(f(&c.y)));
            }
            let _ = write!(boundary, " H {:.2}", px(extent));
        }
        let region = format!("{boundary} V {:.2} Z", py(extent));

        let mut svg = String::new();
        let _ = writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#);
        let _ = writeln!(svg, r#"  <line x1="{PAD}" y1="{0}" x2="{1}" y2="{0}" stroke="black"/>"#, SIZE - PAD, SIZE - PAD);
        let _ = writeln!(svg, r#"  <line x1="{PAD}" y1="{PAD}" x2="{PAD}" y2="{0}" stroke="black"/>"#, SIZE - PAD);
        if !self.corners.is_empty() {
            let _ = writeln!(svg, r##"  <path d="{region}" fill="#9ecae1" stroke="none"/>"##);
            let _ = writeln!(svg, r##"  <path d="{boundary}" fill="none" stroke="#08519c" stroke-width="2"/>"##);
        }
        for c in &self.corners {
            let fill = if c.x_open || c.y_open { "white" } else { "#08519c" };
            let _ = writeln!(
                svg,
                r##"  <circle cx="{:.2}" cy="{:.2}" r="4" fill="{fill}" stroke="#08519c"><title>({}{}, {}{})</title></circle>"##,
                px(f(&c.x)),
                py(f(&c.y)),
                format_rational(&c.x),
                if c.x_open { "+" } else { "" },
                format_rational(&c.y),
                if c.y_open { "+" } else { "" },
            );
        }
        svg.push_str("</svg>\n");
        svg
    }
}

/// The staircase of a nonzero sum of boxes in two variables.
pub fn staircase_2d(a: &AfgIdeal) -> Result<StaircasePath> {
    check_dim(2, a.dim())?;
    let boxes = a.simplified().into_boxes();
    if boxes.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let mut corners: Vec<Corner> = boxes
        .iter()
        .map(|b| {
            let r = b.rays();
            let finite = |i: usize| r[i].alpha.as_finite().expect("zero boxes were dropped").clone();
            Corner { x: finite(0), y: finite(1), x_open: r[0].eps == Flag::Open, y_open: r[1].eps == Flag::Open }
        })
        .collect();
    corners.sort_by_key(|c| c.perturbed().0);
    Ok(StaircasePath { corners })
}
