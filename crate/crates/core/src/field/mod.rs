//! Fields of characteristic two.
//!
//! Elements do not carry their field: every operation goes through a field
//! context implementing [`Field`]. Three contexts are provided:
//!
//! * [`BinaryField`]: GF(2^m) in a polynomial basis, elements are bit masks.
//! * [`RationalFunctionField`]: GF(2^m)(t), elements are reduced fractions.
//! * [`crate::ext::ExtensionField`]: simple extensions k\[Y\]/(π) of any of the above.

mod binary;
mod function;

pub use binary::{BinaryField, DEFAULT_MODULI};
pub use function::{Frac, RationalFunctionField};

use std::fmt;

use crate::error::Result;

/// Arithmetic in a field of characteristic two.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Ord + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;

    fn is_one(&self, x: &Self::Elem) -> bool {
        *x == self.one()
    }

    /// Addition; subtraction and negation coincide with it.
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    /// x ↦ x², an additive ring endomorphism.
    fn frobenius(&self, x: &Self::Elem) -> Self::Elem {
        self.mul(x, x)
    }

    fn pow(&self, x: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.frobenius(&base);
            }
        }
        acc
    }

    fn is_square(&self, x: &Self::Elem) -> bool;

    /// Square root; fails with [`crate::Error::NotASquare`] on non-squares.
    fn sqrt(&self, x: &Self::Elem) -> Result<Self::Elem>;

    /// `Some(m)` when the field is finite with 2^m elements.
    fn finite_degree(&self) -> Option<u32>;

    fn is_perfect(&self) -> bool {
        self.finite_degree().is_some()
    }

    /// The `index`-th element of a finite field, for `index < 2^m`.
    /// Always `None` for infinite fields.
    fn element(&self, index: u64) -> Option<Self::Elem>;

    fn from_bit(&self, bit: bool) -> Self::Elem {
        if bit {
            self.one()
        } else {
            self.zero()
        }
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// Fields with a textual scalar syntax, used by the expression parser and the
/// JSON interfaces.
pub trait TextField: Field {
    /// Canonical rendering; `parse(render(x)) == x`.
    fn render(&self, x: &Self::Elem) -> String;

    /// Value of an integer literal. For GF(2^m) this is the bit encoding in
    /// the modulus basis.
    fn literal(&self, value: u64) -> Result<Self::Elem>;

    /// The indeterminate `t` of a function field.
    fn generator(&self) -> Option<Self::Elem>;

    /// Field descriptor string accepted by [`crate::descriptor::FieldDescriptor`].
    fn descriptor(&self) -> String;

    fn parse(&self, text: &str) -> Result<Self::Elem>
    where
        Self: Sized,
    {
        crate::parse::parse_scalar(self, text)
    }
}
