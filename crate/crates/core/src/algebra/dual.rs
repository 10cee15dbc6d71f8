use super::field::{FieldElement, PrimeField};
use super::Ring;

/// `re + eps * ε` with `ε² = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Dual {
    pub re: FieldElement,
    pub eps: FieldElement,
}

impl Dual {
    pub fn constant(re: FieldElement) -> Self {
        Dual {
            re,
            eps: FieldElement::default(),
        }
    }
}

/// Dual numbers over a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualRing {
    pub field: PrimeField,
}

impl DualRing {
    pub fn new(field: PrimeField) -> Self {
        DualRing { field }
    }

    /// The variable `re + ε`.
    pub fn variable(&self, re: FieldElement) -> Dual {
        Dual {
            re,
            eps: self.field.one(),
        }
    }
}

impl Ring for DualRing {
    type Elem = Dual;

    fn zero(&self) -> Dual {
        Dual::constant(self.field.zero())
    }

    fn one(&self) -> Dual {
        Dual::constant(self.field.one())
    }

    fn add(&self, a: Dual, b: Dual) -> Dual {
        let f = &self.field;
        Dual {
            re: f.add(a.re, b.re),
            eps: f.add(a.eps, b.eps),
        }
    }

    fn sub(&self, a: Dual, b: Dual) -> Dual {
        let f = &self.field;
        Dual {
            re: f.sub(a.re, b.re),
            eps: f.sub(a.eps, b.eps),
        }
    }

    fn mul(&self, a: Dual, b: Dual) -> Dual {
        let f = &self.field;
        Dual {
            re: f.mul(a.re, b.re),
            eps: f.add(f.mul(a.re, b.eps), f.mul(a.eps, b.re)),
        }
    }
}
