//! Monomial ideals with nonnegative rational exponents.
//!
//! The ring is `A[X_1, ..., X_d]` with exponents allowed to be any
//! nonnegative rationals, and every question here is about monomial ideals,
//! which are determined by the monomials they contain. The crate provides:
//!
//! * exact exponents with `inf` ([`exponent`]), monomials ([`monomial`]);
//! * the ideal forms: pure powers, m-irreducible `J`, box `I`, sums of boxes,
//!   intersections of irreducibles, finite generator sets ([`ideal`]);
//! * the per-variable merge rules and lcm intersections ([`algebra`]);
//! * conversion between sums of boxes and finite m-irreducible
//!   decompositions, redundancy removal, the m-irreducibility test, and a
//!   containment decision with witnesses ([`decomposition`]);
//! * a brute-force grid oracle for testing ([`oracle`]), a text syntax
//!   ([`syntax`]), JSON forms ([`json`]) and two-variable staircases
//!   ([`staircase`]).
//!
//! ```
//! use midr::decomposition::{decompose, remove_redundant};
//! use midr::syntax::{parse_expr, print_intersection};
//!
//! // (X^{1/3} Y^{2/3}, X^{2/3} Y^{1/3}) as a sum of two principal boxes.
//! let a = parse_expr("I[1/3,2/3;0,0] + I[2/3,1/3;0,0]", 2).unwrap().elaborate(2);
//! let d = remove_redundant(&decompose(&a));
//! assert_eq!(print_intersection(&d), "cap(J[1/3,inf;0,0],J[2/3,2/3;0,0],J[inf,1/3;0,0])");
//! ```
//!
//! The guide in `book/` walks through the concepts; its code blocks are
//! compiled and run as doctests of this crate.

pub mod algebra;
pub mod decomposition;
pub mod error;
pub mod exponent;
pub mod ideal;
pub mod json;
pub mod monomial;
pub mod oracle;
pub mod staircase;
pub mod syntax;

pub use error::{Error, Result};

// One item per chapter so a failing snippet points at its chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/exponents.md")]
    struct Exponents;
    #[doc = include_str!("../../../book/src/ideals.md")]
    struct Ideals;
    #[doc = include_str!("../../../book/src/algebra.md")]
    struct Algebra;
    #[doc = include_str!("../../../book/src/decomposition.md")]
    struct Decomposition;
    #[doc = include_str!("../../../book/src/containment.md")]
    struct Containment;
    #[doc = include_str!("../../../book/src/syntax.md")]
    struct Syntax;
}
