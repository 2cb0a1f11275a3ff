//! Simple extensions L = k[Y]/(π) and their trace forms.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::forms::{gauss_reduce, GramMatrix};
use crate::matrix::Matrix;
use crate::poly::{factor, Poly};

/// The field k[Y]/(π) for a monic irreducible π. Elements are polynomials in
/// Y of degree below deg π.
#[derive(Clone, Debug)]
pub struct ExtensionField<F: Field> {
    base: F,
    modulus: Poly<F>,
    // Tr(Y^i) for i < deg π
    trace_powers: Vec<F::Elem>,
}

impl<F: Field> ExtensionField<F> {
    /// Irreducibility of `modulus` is checked when the base is finite and
    /// trusted otherwise.
    pub fn new(base: F, modulus: Poly<F>) -> Result<Self> {
        let d = modulus.degree().ok_or(Error::ConstantPolynomial)?;
        if d == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if !modulus.is_monic(&base) {
            return Err(Error::NotMonic);
        }
        if base.finite_degree().is_some() {
            let fd = factor(&base, &modulus)?;
            if fd.entries.len() != 1 || fd.entries[0].multiplicity != 1 {
                return Err(Error::NotIrreducible);
            }
        }
        let mut ext = Self {
            base,
            modulus,
            trace_powers: Vec::new(),
        };
        ext.trace_powers = (0..d)
            .map(|j| {
                let k = &ext.base;
                let yj = Poly::monomial(k, k.one(), j);
                let mut acc = k.zero();
                let mut cur = yj;
                for i in 0..d {
                    acc = k.add(&acc, &cur.coeff(k, i));
                    cur = cur.shift(k, 1).rem(k, &ext.modulus).expect("monic modulus");
                }
                acc
            })
            .collect();
        Ok(ext)
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn modulus(&self) -> &Poly<F> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.trace_powers.len()
    }

    /// The class a of Y, a root of π.
    pub fn root(&self) -> Poly<F> {
        Poly::x(&self.base).rem(&self.base, &self.modulus).expect("monic modulus")
    }

    pub fn embed(&self, c: F::Elem) -> Poly<F> {
        Poly::constant(&self.base, c)
    }

    pub fn from_poly(&self, p: &Poly<F>) -> Poly<F> {
        p.rem(&self.base, &self.modulus).expect("monic modulus")
    }

    /// The element as a scalar of k, when it lies there.
    pub fn to_base(&self, x: &Poly<F>) -> Option<F::Elem> {
        match x.degree() {
            None => Some(self.base.zero()),
            Some(0) => Some(x.coeff(&self.base, 0)),
            Some(_) => None,
        }
    }

    /// Tr_{L/k}(x), the trace of multiplication by x.
    pub fn trace(&self, x: &Poly<F>) -> F::Elem {
        let k = &self.base;
        k.sum(
            x.coeffs()
                .iter()
                .zip(&self.trace_powers)
                .map(|(c, t)| k.mul(c, t))
                .collect::<Vec<_>>()
                .iter(),
        )
    }

    /// Gram matrix of (x, y) ↦ Tr(xy) in the power basis.
    pub fn trace_gram(&self) -> Matrix<F> {
        let k = &self.base;
        let d = self.degree();
        let mut g = Matrix::zeros(k, d, d);
        for i in 0..d {
            for j in 0..d {
                let p = Poly::monomial(k, k.one(), i + j).rem(k, &self.modulus).expect("monic");
                g.set(i, j, self.trace(&p));
            }
        }
        g
    }

    /// Coordinates of x in the basis 1, a², a⁴, ..., a^(2(d-1)), when it is one.
    fn square_basis_coords(&self, x: &Poly<F>) -> Option<Vec<F::Elem>> {
        let k = &self.base;
        let d = self.degree();
        let a2 = self.mul(&self.root(), &self.root());
        let mut cols = Vec::with_capacity(d);
        let mut cur = self.one();
        for _ in 0..d {
            cols.push(cur.clone());
            cur = self.mul(&cur, &a2);
        }
        let mut m = Matrix::zeros(k, d, d);
        for (j, c) in cols.iter().enumerate() {
            for i in 0..d {
                m.set(i, j, c.coeff(k, i));
            }
        }
        let inv = m.inverse(k).ok()?;
        let rhs: Vec<F::Elem> = (0..d).map(|i| x.coeff(k, i)).collect();
        Some(inv.mul_vec(k, &rhs))
    }
}

impl<F: Field> Field for ExtensionField<F> {
    type Elem = Poly<F>;

    fn zero(&self) -> Poly<F> {
        Poly::zero()
    }

    fn one(&self) -> Poly<F> {
        Poly::one(&self.base)
    }

    fn is_zero(&self, x: &Poly<F>) -> bool {
        x.is_zero()
    }

    fn add(&self, x: &Poly<F>, y: &Poly<F>) -> Poly<F> {
        x.add(&self.base, y)
    }

    fn mul(&self, x: &Poly<F>, y: &Poly<F>) -> Poly<F> {
        x.mul(&self.base, y).rem(&self.base, &self.modulus).expect("monic modulus")
    }

    fn inv(&self, x: &Poly<F>) -> Result<Poly<F>> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        x.inv_mod(&self.base, &self.modulus)
            .map_err(|_| Error::NotInvertible)
    }

    /// Over a finite base every element is a square. Otherwise L = k(a²) and
    /// x is a square iff its coordinates in the basis (a^{2i}) are squares in k.
    fn is_square(&self, x: &Poly<F>) -> bool {
        if self.base.finite_degree().is_some() {
            return true;
        }
        self.square_basis_coords(x)
            .is_some_and(|c| c.iter().all(|v| self.base.is_square(v)))
    }

    fn sqrt(&self, x: &Poly<F>) -> Result<Poly<F>> {
        if let Some(m) = self.base.finite_degree() {
            let total = m as usize * self.degree();
            let mut r = x.clone();
            for _ in 1..total {
                r = self.frobenius(&r);
            }
            return Ok(r);
        }
        let coords = self.square_basis_coords(x).ok_or(Error::NotASquare)?;
        let k = &self.base;
        let roots = coords
            .iter()
            .map(|c| k.sqrt(c))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::NotASquare)?;
        Ok(self.from_poly(&Poly::from_coeffs(k, roots)))
    }

    fn finite_degree(&self) -> Option<u32> {
        self.base
            .finite_degree()
            .map(|m| m * self.degree() as u32)
    }

    fn element(&self, index: u64) -> Option<Poly<F>> {
        let m = self.base.finite_degree()?;
        let total = m as usize * self.degree();
        if total < 64 && index >> total != 0 {
            return None;
        }
        let mask = (1u64 << m) - 1;
        let coeffs = (0..self.degree())
            .map(|i| {
                let digit = if m as usize * i >= 64 { 0 } else { (index >> (m as usize * i)) & mask };
                self.base.element(digit)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Poly::from_coeffs(&self.base, coeffs))
    }
}

/// A basis of k[Y]/(π) that is orthonormal for (x, y) ↦ Tr(xy), obtained by
/// reducing the trace Gram matrix.
pub fn trace_orthonormal_basis<F: Field>(ext: &ExtensionField<F>) -> Result<Vec<Poly<F>>> {
    let k = ext.base();
    let gram = GramMatrix::new(ext.trace_gram())?;
    let red = gauss_reduce(k, &gram)
        .map_err(|e| Error::ReductionFailed(format!("trace form: {e}")))?;
    let d = ext.degree();
    if red.rank != d {
        return Err(Error::ReductionFailed("degenerate trace form".into()));
    }
    Ok((0..d)
        .map(|j| Poly::from_coeffs(k, (0..d).map(|i| red.p.get(i, j).clone()).collect()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{BinaryField, RationalFunctionField, TextField};
    use crate::parse::parse_poly;

    fn artin_schreier() -> ExtensionField<RationalFunctionField> {
        let k = RationalFunctionField::over_gf2();
        let pi = parse_poly(&k, "x^2+x+t").unwrap();
        ExtensionField::new(k, pi).unwrap()
    }

    #[test]
    fn root_arithmetic() {
        let l = artin_schreier();
        let k = l.base().clone();
        let a = l.root();
        let t = l.embed(k.t());
        assert_eq!(l.mul(&a, &a), l.add(&a, &t));
        assert!(l.is_zero(&l.add(&a, &a)));
        let inv = l.inv(&a).unwrap();
        assert_eq!(l.mul(&a, &inv), l.one());
        // a(a+1) = t, so a⁻¹ = (a+1)/t
        let expect = l.mul(&l.add(&a, &l.one()), &l.embed(k.inv(&k.t()).unwrap()));
        assert_eq!(inv, expect);
    }

    #[test]
    fn traces() {
        let l = artin_schreier();
        let k = l.base().clone();
        assert!(k.is_zero(&l.trace(&l.one())));
        assert!(k.is_one(&l.trace(&l.root())));
        let basis = trace_orthonormal_basis(&l).unwrap();
        let a = l.root();
        assert_eq!(basis, vec![a.clone(), l.add(&a, &l.one())]);
    }

    #[test]
    fn degree_one_extension_is_the_base() {
        let k = RationalFunctionField::over_gf2();
        let l = ExtensionField::new(k.clone(), parse_poly(&k, "x+t").unwrap()).unwrap();
        assert_eq!(l.root(), l.embed(k.t()));
        assert_eq!(l.trace(&l.embed(k.t())), k.t());
        assert_eq!(trace_orthonormal_basis(&l).unwrap(), vec![l.one()]);
    }

    #[test]
    fn finite_trace_basis() {
        let k = BinaryField::gf2();
        let l = ExtensionField::new(k.clone(), parse_poly(&k, "x^2+x+1").unwrap()).unwrap();
        let basis = trace_orthonormal_basis(&l).unwrap();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                assert_eq!(l.trace(&l.mul(x, y)), u64::from(i == j));
            }
        }
        assert_eq!(l.finite_degree(), Some(2));
        for idx in 0..4 {
            let x = l.element(idx).unwrap();
            assert_eq!(l.frobenius(&l.sqrt(&x).unwrap()), x);
            assert_eq!(l.trace(&l.frobenius(&x)), k.frobenius(&l.trace(&x)));
        }
        assert!(l.element(4).is_none());
    }

    #[test]
    fn reducible_modulus_rejected() {
        let k = BinaryField::gf2();
        let e = ExtensionField::new(k.clone(), parse_poly(&k, "x^2+1").unwrap());
        assert_eq!(e.unwrap_err(), Error::NotIrreducible);
    }

    #[test]
    fn squares_over_function_field() {
        let l = artin_schreier();
        let k = l.base().clone();
        let x = l.add(&l.root(), &l.embed(k.parse("t^3+1").unwrap()));
        let sq = l.frobenius(&x);
        assert!(l.is_square(&sq));
        assert_eq!(l.sqrt(&sq).unwrap(), x);
        assert!(!l.is_square(&l.embed(k.t())));
        // a = t + a², coordinates (t, 1)
        assert!(!l.is_square(&l.root()));
    }
}
