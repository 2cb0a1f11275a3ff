//! Dense univariate polynomials over a [`Field`].

mod decomp;
mod factor;

pub use decomp::{
    inseparability_depth, validate_factored_input, FactorDecomposition, FactorEntry,
};
pub use factor::{factor, factor_with_seed, squarefree_decomposition, DEFAULT_SEED, SPLIT_RETRY_CAP};

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, TextField};

/// Coefficients are stored constant term first with no trailing zeros; the
/// zero polynomial has no coefficients.
pub struct Poly<F: Field> {
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Clone for Poly<F> {
    fn clone(&self) -> Self {
        Self {
            coeffs: self.coeffs.clone(),
        }
    }
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> PartialOrd for Poly<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down.
impl<F: Field> Ord for Poly<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one(k: &F) -> Self {
        Self {
            coeffs: vec![k.one()],
        }
    }

    /// The indeterminate X.
    pub fn x(k: &F) -> Self {
        Self {
            coeffs: vec![k.zero(), k.one()],
        }
    }

    pub fn constant(k: &F, c: F::Elem) -> Self {
        Self::from_coeffs(k, vec![c])
    }

    pub fn monomial(k: &F, c: F::Elem, exponent: usize) -> Self {
        if k.is_zero(&c) {
            return Self::zero();
        }
        let mut coeffs = vec![k.zero(); exponent + 1];
        coeffs[exponent] = c;
        Self { coeffs }
    }

    /// Builds a polynomial from coefficients, constant term first.
    pub fn from_coeffs(k: &F, coeffs: Vec<F::Elem>) -> Self {
        let mut p = Self { coeffs };
        p.trim(k);
        p
    }

    fn trim(&mut self, k: &F) {
        while self.coeffs.last().is_some_and(|c| k.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of stored coefficients, i.e. `degree + 1` (0 for the zero polynomial).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: &F, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| k.zero())
    }

    pub fn is_monic(&self, k: &F) -> bool {
        self.leading().is_some_and(|c| k.is_one(c))
    }

    pub fn is_one(&self, k: &F) -> bool {
        self.coeffs.len() == 1 && k.is_one(&self.coeffs[0])
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, k: &F, other: &Self) -> Self {
        let (long, short) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = k.add(c, s);
        }
        Self::from_coeffs(k, coeffs)
    }

    /// Same as [`Poly::add`]: characteristic two.
    pub fn sub(&self, k: &F, other: &Self) -> Self {
        self.add(k, other)
    }

    pub fn scale(&self, k: &F, c: &F::Elem) -> Self {
        if k.is_zero(c) {
            return Self::zero();
        }
        Self::from_coeffs(k, self.coeffs.iter().map(|x| k.mul(x, c)).collect())
    }

    pub fn mul(&self, k: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![k.zero(); self.len() + other.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if k.is_zero(b) {
                    continue;
                }
                out[i + j] = k.add(&out[i + j], &k.mul(a, b));
            }
        }
        Self::from_coeffs(k, out)
    }

    /// Multiplication by X^shift.
    pub fn shift(&self, k: &F, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![k.zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, k: &F, mut e: u64) -> Self {
        let mut acc = Self::one(k);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(k, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square(k);
            }
        }
        acc
    }

    /// Squaring is coefficientwise Frobenius at doubled exponents.
    pub fn square(&self, k: &F) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![k.zero(); 2 * self.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = k.frobenius(c);
        }
        Self { coeffs }
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, k: &F, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = k.inv(lead)?;
        let dd = divisor.len() - 1;
        if self.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![k.zero(); self.len() - dd];
        for i in (dd..rem.len()).rev() {
            if k.is_zero(&rem[i]) {
                continue;
            }
            let c = k.mul(&rem[i], &lead_inv);
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = k.add(&rem[idx], &k.mul(&c, dc));
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(k, quot), Self::from_coeffs(k, rem)))
    }

    pub fn rem(&self, k: &F, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(k, divisor)?.1)
    }

    /// Exact quotient; fails with `ProductMismatch` when the division leaves a remainder.
    pub fn div_exact(&self, k: &F, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(k, divisor)?;
        if !r.is_zero() {
            return Err(Error::ProductMismatch);
        }
        Ok(q)
    }

    pub fn divides(&self, k: &F, other: &Self) -> Result<bool> {
        Ok(other.rem(k, self)?.is_zero())
    }

    pub fn monic(&self, k: &F) -> Result<Self> {
        match self.leading() {
            None => Ok(Self::zero()),
            Some(c) => Ok(self.scale(k, &k.inv(c)?)),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(k: &F, a: &Self, b: &Self) -> Self {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.rem(k, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(k).expect("leading coefficient is invertible")
    }

    /// Returns `(g, s, t)` with `g = s·a + t·b` monic.
    pub fn xgcd(k: &F, a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(k), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(k, &r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(k, &q.mul(k, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(k, &q.mul(k, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(c) => {
                let inv = k.inv(c).expect("nonzero leading coefficient");
                (r0.scale(k, &inv), s0.scale(k, &inv), t0.scale(k, &inv))
            }
        }
    }

    pub fn lcm(k: &F, a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            return Self::zero();
        }
        let g = Self::gcd(k, a, b);
        let q = a.div_exact(k, &g).expect("gcd divides");
        q.mul(k, b).monic(k).expect("nonzero")
    }

    /// Inverse of `self` modulo `modulus`.
    pub fn inv_mod(&self, k: &F, modulus: &Self) -> Result<Self> {
        let (g, s, _) = Self::xgcd(k, self, modulus);
        if !g.is_one(k) {
            return Err(Error::NotInvertible);
        }
        s.rem(k, modulus)
    }

    /// Formal derivative; every even-exponent term vanishes.
    pub fn derivative(&self, k: &F) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| if i % 2 == 1 { c.clone() } else { k.zero() })
            .collect();
        Self::from_coeffs(k, coeffs)
    }

    pub fn eval(&self, k: &F, x: &F::Elem) -> F::Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
    }

    /// Evaluation at an element of another ring, given the embedding of the
    /// coefficients and that ring's operations.
    pub fn eval_with<T: Clone>(
        &self,
        zero: T,
        embed: impl Fn(&F::Elem) -> T,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
        x: &T,
    ) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(zero, |acc, c| add(&mul(&acc, x), &embed(c)))
    }

    pub fn compose(&self, k: &F, inner: &Self) -> Self {
        self.eval_with(
            Self::zero(),
            |c| Self::constant(k, c.clone()),
            |a, b| a.add(k, b),
            |a, b| a.mul(k, b),
            inner,
        )
    }

    /// P(X) ↦ P(X^factor).
    pub fn inflate(&self, k: &F, factor: usize) -> Self {
        if self.is_zero() || factor == 1 {
            return self.clone();
        }
        let mut coeffs = vec![k.zero(); (self.len() - 1) * factor + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * factor] = c.clone();
        }
        Self { coeffs }
    }

    /// Inverse of [`Poly::inflate`] for factor two; `None` unless every odd
    /// coefficient vanishes.
    pub fn deflate2(&self, k: &F) -> Option<Self> {
        if !self.in_k_of_x2(k) {
            return None;
        }
        Some(Self::from_coeffs(
            k,
            self.coeffs.iter().step_by(2).cloned().collect(),
        ))
    }

    /// True iff every odd-exponent coefficient is zero.
    pub fn in_k_of_x2(&self, k: &F) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| k.is_zero(c))
    }

    /// P(X) ↦ P(X + c).
    pub fn taylor_shift(&self, k: &F, c: &F::Elem) -> Self {
        let mut coeffs = self.coeffs.clone();
        let n = coeffs.len();
        // Horner-style synthetic shifts
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = k.mul(&coeffs[j + 1], c);
                coeffs[j] = k.add(&coeffs[j], &t);
            }
        }
        Self::from_coeffs(k, coeffs)
    }

    /// Square root of a polynomial all of whose odd coefficients vanish and
    /// whose even coefficients are squares.
    pub fn sqrt(&self, k: &F) -> Result<Self> {
        let half = self.deflate2(k).ok_or(Error::NotSquareShape)?;
        let coeffs = half
            .coeffs
            .iter()
            .map(|c| k.sqrt(c))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::NotSquareShape)?;
        Ok(Self::from_coeffs(k, coeffs))
    }

    /// `base^e mod modulus` by square and multiply.
    pub fn pow_mod(k: &F, base: &Self, mut e: u64, modulus: &Self) -> Result<Self> {
        let mut acc = Self::one(k).rem(k, modulus)?;
        let mut b = base.rem(k, modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(k, &b).rem(k, modulus)?;
            }
            e >>= 1;
            if e > 0 {
                b = b.square(k).rem(k, modulus)?;
            }
        }
        Ok(acc)
    }

    /// Applies `f` to every coefficient, e.g. to move into a larger field.
    pub fn map<G: Field>(&self, target: &G, f: impl Fn(&F::Elem) -> G::Elem) -> Poly<G> {
        Poly::from_coeffs(target, self.coeffs.iter().map(f).collect())
    }

    pub fn map_coeffs(&self, k: &F, f: impl Fn(&F::Elem) -> F::Elem) -> Self {
        Self::from_coeffs(k, self.coeffs.iter().map(f).collect())
    }

    pub fn product<'a>(k: &F, items: impl IntoIterator<Item = &'a Self>) -> Self
    where
        F: 'a,
    {
        items
            .into_iter()
            .fold(Self::one(k), |acc, p| acc.mul(k, p))
    }
}

/// X^i mod f.
pub fn reduce_power<F: Field>(k: &F, i: u64, f: &Poly<F>) -> Result<Poly<F>> {
    Poly::pow_mod(k, &Poly::x(k), i, f)
}

/// C(i, j) mod 2 by Lucas' rule: odd iff the bits of `j` are contained in those of `i`.
pub fn binom_parity(i: u64, j: u64) -> bool {
    i & j == j
}

impl<F: TextField> Poly<F> {
    /// Renders with the variable name `var`, highest degree first, e.g.
    /// `x^6+x^5+t*x^2+(t^2+1)`.
    pub fn render(&self, k: &F, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if k.is_zero(c) {
                continue;
            }
            let monomial = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let coeff = k.render(c);
            let compound = coeff.contains(['+', '/', '*']);
            let coeff = if compound {
                format!("({coeff})")
            } else {
                coeff
            };
            terms.push(match (i, k.is_one(c)) {
                (0, _) => coeff,
                (_, true) => monomial,
                (_, false) => format!("{coeff}*{monomial}"),
            });
        }
        terms.join("+")
    }
}
