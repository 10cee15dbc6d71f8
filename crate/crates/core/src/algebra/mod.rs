//! Exact arithmetic over a prime field, dual numbers over it, matrix rank
//! and division-free characteristic polynomials.

mod charpoly;
mod dual;
mod field;
pub(crate) mod matrix;

pub use charpoly::char_poly_coeffs;
pub use dual::{Dual, DualRing};
pub use field::{FieldElement, PrimeField, DEFAULT_PRIME};
pub use matrix::{rank, Matrix};

/// Commutative ring with explicit context, so one algorithm serves both
/// plain field elements and dual numbers.
pub trait Ring {
    type Elem: Copy + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem {
        self.sub(self.zero(), a)
    }
}
