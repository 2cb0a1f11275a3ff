//! The local algebras L[X]/((X^{2^n} − a)^m) and their distinguished linear
//! forms t.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{reduce_power, Poly};

/// L[X]/((X^{2^n} − a)^m), with elements stored in the power basis of the
/// class γ of X.
#[derive(Clone, Debug)]
pub struct LocalAlgebra<E: Field> {
    field: E,
    a: E::Elem,
    n: u32,
    m: u32,
    modulus: Poly<E>,
}

impl<E: Field> LocalAlgebra<E> {
    /// Requires m ≥ 1, and m ≥ 2 when n ≥ 1 (the form t needs both
    /// exponents 2^n and 2^n·m − 1 to be distinct basis indices).
    pub fn new(field: E, a: E::Elem, n: u32, m: u32) -> Result<Self> {
        if m == 0 || (n >= 1 && m < 2) {
            return Err(Error::BadMultiplicity(m));
        }
        if n > 16 {
            return Err(Error::UnsupportedDegree(n));
        }
        let base = Poly::monomial(&field, field.one(), 1 << n).add(&field, &Poly::constant(&field, a.clone()));
        let modulus = base.pow(&field, u64::from(m));
        Ok(Self {
            field,
            a,
            n,
            m,
            modulus,
        })
    }

    pub fn field(&self) -> &E {
        &self.field
    }

    pub fn a(&self) -> &E::Elem {
        &self.a
    }

    pub fn depth(&self) -> u32 {
        self.n
    }

    pub fn multiplicity(&self) -> u32 {
        self.m
    }

    /// (X^{2^n} − a)^m.
    pub fn modulus(&self) -> &Poly<E> {
        &self.modulus
    }

    pub fn dim(&self) -> usize {
        (1usize << self.n) * self.m as usize
    }

    pub fn reduce(&self, p: &Poly<E>) -> Poly<E> {
        p.rem(&self.field, &self.modulus).expect("monic modulus")
    }

    pub fn mul(&self, x: &Poly<E>, y: &Poly<E>) -> Poly<E> {
        self.reduce(&x.mul(&self.field, y))
    }

    /// γ^i in the power basis.
    pub fn power(&self, i: u64) -> Poly<E> {
        reduce_power(&self.field, i, &self.modulus).expect("monic modulus")
    }

    /// Coordinates of x in the basis (γ − a)^j, for n = 0.
    pub fn shifted_coords(&self, x: &Poly<E>) -> Vec<E::Elem> {
        let shifted = self.reduce(x).taylor_shift(&self.field, &self.a);
        (0..self.dim()).map(|j| shifted.coeff(&self.field, j)).collect()
    }

    /// The L-linear form t. For n = 0 it is 1 on every (γ − a)^j; for n ≥ 1 it is
    /// 1 on γ^{2^n} and γ^{2^n·m − 1} and 0 on the other powers.
    pub fn t(&self, x: &Poly<E>) -> E::Elem {
        let k = &self.field;
        let r = self.reduce(x);
        if self.n == 0 {
            k.sum(self.shifted_coords(&r).iter())
        } else {
            let lo = 1usize << self.n;
            let hi = lo * self.m as usize - 1;
            k.add(&r.coeff(k, lo), &r.coeff(k, hi))
        }
    }

    /// t(γ^j) for j below the dimension.
    pub fn t_values(&self) -> Vec<E::Elem> {
        (0..self.dim() as u64).map(|j| self.t(&self.power(j))).collect()
    }
}

/// γ^i reduced in L[X]/((X^{2^n} − a)^m).
pub fn local_reduce_power<E: Field>(alg: &LocalAlgebra<E>, i: u64) -> Poly<E> {
    alg.power(i)
}
