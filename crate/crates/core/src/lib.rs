//! Exact characteristic-class calculus.
//!
//! The crate computes with Chern data of vector bundles in truncated graded
//! rings: rings of projective spaces, their products, free "formal base"
//! rings, and projective bundles with the Grothendieck relation. On top of
//! the ring layer it provides
//!
//! * the Chern-class calculus of bundle operations (duals, sums, tensors,
//!   symmetric and exterior powers, determinants, twists, Frobenius
//!   pullbacks) together with Chern characters, Segre classes, discriminants
//!   and slope invariants ([`bundle`]),
//! * symmetric-function templates realizing the splitting principle
//!   ([`symfunc`]),
//! * splitting types of bundles on the projective line, with the positivity
//!   dictionary and section bounds ([`split`]),
//! * Todd classes, Euler characteristics and Hilbert polynomials, including
//!   the asymptotic vanishing check on projective bundles ([`rr`]),
//! * an integral plethysm construction from signed tableaux, with
//!   equivariance and composition checks ([`plethysm`]),
//! * a small bundle-expression language shared by the library and the CLI
//!   ([`expr`]).
//!
//! All arithmetic is exact (`BigRational` scalars, `BigInt` plethysm
//! coefficients); no floating point is used anywhere.

pub mod bundle;
pub mod chow;
pub mod error;
pub mod expr;
pub mod plethysm;
pub mod rat;
pub mod rr;
pub mod split;
pub mod symfunc;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book_doctests {
    //! Runs every Rust snippet in the book as a doc-test, keeping the guide
    //! and the library in sync.
    macro_rules! book_chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            #[allow(unused)]
            mod $name {}
        };
    }
    book_chapter!(readme, "../../../README.md");
    book_chapter!(introduction, "../../../book/src/introduction.md");
    book_chapter!(rings, "../../../book/src/rings.md");
    book_chapter!(bundles, "../../../book/src/bundles.md");
    book_chapter!(splitting_principle, "../../../book/src/splitting-principle.md");
    book_chapter!(splitting_types, "../../../book/src/splitting-types.md");
    book_chapter!(riemann_roch, "../../../book/src/riemann-roch.md");
    book_chapter!(plethysm, "../../../book/src/plethysm.md");
    book_chapter!(cli, "../../../book/src/cli.md");
}
