//! Linear forms on products of quotient algebras k[X]/(f_i) and their
//! transfers (x, y) ↦ s(xy).

use crate::error::{Error, Result};
use crate::ext::{trace_orthonormal_basis, ExtensionField};
use crate::field::Field;
use crate::forms::{classify, gauss_reduce, is_unit_certifiable, GramMatrix};
use crate::local::LocalAlgebra;
use crate::matrix::Matrix;
use crate::poly::{binom_parity, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockClaim {
    Unit,
    Hyperbolic,
}

impl BlockClaim {
    pub fn as_str(self) -> &'static str {
        match self {
            BlockClaim::Unit => "unit",
            BlockClaim::Hyperbolic => "hyperbolic",
        }
    }
}

/// A linear form on k[X]/(modulus), stored by its values on 1, α, ..., α^{d−1}.
#[derive(Clone, Debug)]
pub struct FormBlock<F: Field> {
    pub modulus: Poly<F>,
    pub values: Vec<F::Elem>,
    pub claim: BlockClaim,
}

impl<F: Field> PartialEq for FormBlock<F> {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.values == other.values && self.claim == other.claim
    }
}

impl<F: Field> FormBlock<F> {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// s(P mod modulus).
    pub fn eval(&self, k: &F, p: &Poly<F>) -> F::Elem {
        let r = p.rem(k, &self.modulus).expect("monic modulus");
        k.sum(
            r.coeffs()
                .iter()
                .zip(&self.values)
                .map(|(c, v)| k.mul(c, v))
                .collect::<Vec<_>>()
                .iter(),
        )
    }

    /// Hankel matrix (s(α^{i+j})).
    pub fn gram(&self, k: &F) -> Matrix<F> {
        let d = self.dim();
        let mut powers = Vec::with_capacity(2 * d);
        let mut cur = Poly::one(k);
        for _ in 0..(2 * d).saturating_sub(1) {
            powers.push(self.eval(k, &cur));
            cur = cur.shift(k, 1).rem(k, &self.modulus).expect("monic modulus");
        }
        let mut g = Matrix::zeros(k, d, d);
        for i in 0..d {
            for j in 0..d {
                g.set(i, j, powers[i + j].clone());
            }
        }
        g
    }

    /// Whether the Gram matrix has the claimed type.
    pub fn claim_holds(&self, k: &F) -> bool {
        let Ok(g) = GramMatrix::new(self.gram(k)) else {
            return false;
        };
        match self.claim {
            BlockClaim::Unit => is_unit_certifiable(k, &g),
            BlockClaim::Hyperbolic => {
                let c = classify(k, &g);
                c.alternating && c.nondegenerate
            }
        }
    }
}

/// A linear form on ∏ k[X]/(f_i), one block per factor.
#[derive(Clone, Debug, PartialEq)]
pub struct TransferForm<F: Field> {
    pub blocks: Vec<FormBlock<F>>,
}

impl<F: Field> TransferForm<F> {
    pub fn single(block: FormBlock<F>) -> Self {
        Self {
            blocks: vec![block],
        }
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(FormBlock::dim).sum()
    }

    pub fn moduli(&self) -> Vec<Poly<F>> {
        self.blocks.iter().map(|b| b.modulus.clone()).collect()
    }

    /// Some block is unit and the others are unit or hyperbolic, so the
    /// orthogonal sum is isometric to the unit form.
    pub fn claims_certify_unit(&self) -> bool {
        self.blocks.iter().any(|b| b.claim == BlockClaim::Unit)
    }

    pub fn check_claims(&self, k: &F) -> Result<()> {
        for (i, b) in self.blocks.iter().enumerate() {
            if !b.claim_holds(k) {
                return Err(Error::CertificateFailure(format!(
                    "block {i} is not {}",
                    b.claim.as_str()
                )));
            }
        }
        Ok(())
    }
}

/// Block-diagonal Gram matrix of the transfer.
pub fn gram<F: Field>(k: &F, form: &TransferForm<F>) -> Matrix<F> {
    let blocks: Vec<_> = form.blocks.iter().map(|b| b.gram(k)).collect();
    Matrix::block_diag(k, &blocks)
}

pub fn direct_sum<F: Field>(k: &F, forms: &[TransferForm<F>]) -> Result<TransferForm<F>> {
    let blocks: Vec<FormBlock<F>> = forms.iter().flat_map(|f| f.blocks.iter().cloned()).collect();
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            if !Poly::gcd(k, &a.modulus, &b.modulus).is_one(k) {
                return Err(Error::NotCoprimeBlocks);
            }
        }
    }
    Ok(TransferForm { blocks })
}

fn require_monic_nonconstant<F: Field>(k: &F, g: &Poly<F>) -> Result<usize> {
    let d = g.degree().filter(|&d| d > 0).ok_or(Error::ConstantPolynomial)?;
    if !g.is_monic(k) {
        return Err(Error::NotMonic);
    }
    Ok(d)
}

/// On k[X]/(g) with g ∈ k[X²]: zero on 1, ..., α^{d−2} and one on α^{d−1}.
/// The transfer is hyperbolic.
pub fn even_form<F: Field>(k: &F, g: &Poly<F>) -> Result<TransferForm<F>> {
    let d = g.degree().ok_or(Error::NotEvenPolynomial)?;
    if d == 0 || !g.in_k_of_x2(k) {
        return Err(Error::NotEvenPolynomial);
    }
    if !g.is_monic(k) {
        return Err(Error::NotMonic);
    }
    let mut values = vec![k.zero(); d];
    values[d - 1] = k.one();
    Ok(TransferForm::single(FormBlock {
        modulus: g.clone(),
        values,
        claim: BlockClaim::Hyperbolic,
    }))
}

/// On k[X]/((X − a)^m): one on every (α − a)^j.
pub fn sep_local_form<F: Field>(k: &F, a: F::Elem, m: u32) -> Result<TransferForm<F>> {
    let alg = LocalAlgebra::new(k.clone(), a, 0, m)?;
    Ok(TransferForm::single(FormBlock {
        modulus: alg.modulus().clone(),
        values: alg.t_values(),
        claim: BlockClaim::Unit,
    }))
}

/// On k[X]/((X^{2^n} − a)^m), a not a square: one on α^{2^n} and α^{2^n·m−1},
/// zero on the other powers.
pub fn insep_local_form<F: Field>(k: &F, a: F::Elem, n: u32, m: u32) -> Result<TransferForm<F>> {
    if n == 0 {
        return Err(Error::BadDepth(0));
    }
    if m < 2 {
        return Err(Error::BadMultiplicity(m));
    }
    if k.is_square(&a) {
        return Err(Error::SquareParameter);
    }
    let alg = LocalAlgebra::new(k.clone(), a, n, m)?;
    Ok(TransferForm::single(FormBlock {
        modulus: alg.modulus().clone(),
        values: alg.t_values(),
        claim: BlockClaim::Unit,
    }))
}

fn require_separable<F: Field>(k: &F, pi: &Poly<F>) -> Result<()> {
    require_monic_nonconstant(k, pi)?;
    let d = pi.derivative(k);
    if d.is_zero() || !Poly::gcd(k, pi, &d).is_one(k) {
        return Err(Error::InseparableCore);
    }
    Ok(())
}

/// s(α^i) = Tr(t(γ^i)) for i below d·2^n·m, by reduction in the local algebra
/// over L = k[Y]/(π).
fn composed_values<F: Field>(alg: &LocalAlgebra<ExtensionField<F>>, ext: &ExtensionField<F>, count: usize) -> Vec<F::Elem> {
    let l = alg.field();
    let mut cur = Poly::one(l);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(ext.trace(&alg.t(&cur)));
        cur = alg.reduce(&cur.shift(l, 1));
    }
    out
}

/// On k[X]/(π^m) for separable π: P ↦ Tr_{L/k}(t(P̃)) with t the
/// multiplicity-m local form at a root a of π.
pub fn sep_power_form<F: Field>(k: &F, pi: &Poly<F>, m: u32) -> Result<TransferForm<F>> {
    require_separable(k, pi)?;
    if m == 0 {
        return Err(Error::BadMultiplicity(0));
    }
    let ext = ExtensionField::new(k.clone(), pi.clone())?;
    let alg = LocalAlgebra::new(ext.clone(), ext.root(), 0, m)?;
    let modulus = pi.pow(k, u64::from(m));
    let count = modulus.degree().unwrap_or(0);
    Ok(TransferForm::single(FormBlock {
        modulus,
        values: composed_values(&alg, &ext, count),
        claim: BlockClaim::Unit,
    }))
}

/// On k[X]/(π(X^{2^n})^m) for separable π, n ≥ 1, m ≥ 2: P ↦ Tr_{L/k}(t(P̃))
/// with t the form of [`insep_local_form`] at a root a of π.
pub fn insep_power_form<F: Field>(k: &F, pi: &Poly<F>, n: u32, m: u32) -> Result<TransferForm<F>> {
    require_separable(k, pi)?;
    if n == 0 {
        return Err(Error::BadDepth(0));
    }
    if m < 2 {
        return Err(Error::BadMultiplicity(m));
    }
    let ext = ExtensionField::new(k.clone(), pi.clone())?;
    let alg = LocalAlgebra::new(ext.clone(), ext.root(), n, m)?;
    let modulus = pi.inflate(k, 1 << n).pow(k, u64::from(m));
    let count = modulus.degree().unwrap_or(0);
    Ok(TransferForm::single(FormBlock {
        modulus,
        values: composed_values(&alg, &ext, count),
        claim: BlockClaim::Unit,
    }))
}

/// On k[X]/(g) with g = h², h(0) ≠ 0: one on 1 and zero on α, ..., α^{d−1}.
pub fn square_block_form<F: Field>(k: &F, g: &Poly<F>) -> Result<TransferForm<F>> {
    let d = require_monic_nonconstant(k, g)?;
    if !g.in_k_of_x2(k) || !g.coeffs().iter().all(|c| k.is_square(c)) {
        return Err(Error::NotSquareShape);
    }
    if k.is_zero(&g.coeff(k, 0)) {
        return Err(Error::ZeroConstantTerm);
    }
    let mut values = vec![k.zero(); d];
    values[0] = k.one();
    Ok(TransferForm::single(FormBlock {
        modulus: g.clone(),
        values,
        claim: BlockClaim::Unit,
    }))
}

/// Evaluation at 0 on k[X]/(X).
pub fn point_form<F: Field>(k: &F) -> TransferForm<F> {
    TransferForm::single(FormBlock {
        modulus: Poly::x(k),
        values: vec![k.one()],
        claim: BlockClaim::Unit,
    })
}

/// Parameters of the closed formulas for s(α^i) at high powers.
#[derive(Clone, Debug)]
pub enum ClosedForm<F: Field> {
    /// Σ_{j<m} C(i, j) a^{i−j}, for i ≥ m.
    SepLocal { a: F::Elem, m: u32 },
    /// The three-case formula on k[X]/((X^{2^n} − a)^m), for i ≥ 2^n·m.
    InsepLocal { a: F::Elem, n: u32, m: u32 },
    /// As `SepLocal` with a^e replaced by Tr(a^e), a a root of π.
    SepPower { pi: Poly<F>, m: u32 },
    /// As `InsepLocal` with a^e replaced by Tr(a^e), a a root of π.
    InsepPower { pi: Poly<F>, n: u32, m: u32 },
}

fn sep_formula<E>(i: u64, m: u32, p: impl Fn(u64) -> E, add: impl Fn(E, E) -> E, zero: E) -> Result<E> {
    if i < u64::from(m) {
        return Err(Error::OutOfRange {
            index: i as usize,
            threshold: m as usize,
        });
    }
    Ok((0..u64::from(m))
        .filter(|&j| binom_parity(i, j))
        .fold(zero, |acc, j| add(acc, p(i - j))))
}

fn insep_formula<E>(i: u64, n: u32, m: u32, p: impl Fn(u64) -> E, zero: E) -> Result<E> {
    if n == 0 {
        return Err(Error::BadDepth(0));
    }
    let q = 1u64 << n;
    let m = u64::from(m);
    if i < q * m {
        return Err(Error::OutOfRange {
            index: i as usize,
            threshold: (q * m) as usize,
        });
    }
    if (i + 1).is_multiple_of(q) {
        // i = 2^n·u − 1 with u > m
        let u = (i + 1) / q;
        return Ok(if binom_parity(i, q * m - 1) { p(u - m) } else { zero });
    }
    if i.is_multiple_of(q) && (i / q) % 2 == 1 {
        // i = 2^n(2u + 1)
        let u = (i / q - 1) / 2;
        let eps = (0..q * (m - 1))
            .filter(|&j| binom_parity(2 * q * u, j))
            .count()
            % 2;
        return Ok(if eps == 1 { p(2 * u) } else { zero });
    }
    Ok(zero)
}

pub fn closed_form_value<F: Field>(k: &F, form: &ClosedForm<F>, i: u64) -> Result<F::Elem> {
    let add = |x: F::Elem, y: F::Elem| k.add(&x, &y);
    match form {
        ClosedForm::SepLocal { a, m } => sep_formula(i, *m, |e| k.pow(a, e), add, k.zero()),
        ClosedForm::InsepLocal { a, n, m } => insep_formula(i, *n, *m, |e| k.pow(a, e), k.zero()),
        ClosedForm::SepPower { pi, m } => {
            let ext = ExtensionField::new(k.clone(), pi.clone())?;
            let a = ext.root();
            sep_formula(i, *m, |e| ext.trace(&ext.pow(&a, e)), add, k.zero())
        }
        ClosedForm::InsepPower { pi, n, m } => {
            let ext = ExtensionField::new(k.clone(), pi.clone())?;
            let a = ext.root();
            insep_formula(i, *n, *m, |e| ext.trace(&ext.pow(&a, e)), k.zero())
        }
    }
}

/// Orthonormal basis of k[X]/(π(X^{2^n})^m) for the form of
/// [`sep_power_form`] (n = 0) or [`insep_power_form`] (n ≥ 1), over a finite
/// base. With (γ_i) a trace-orthonormal basis of L and (Q_j) an orthonormal
/// basis of the local algebra, P_ij is the unique polynomial of degree below
/// d·2^n·m congruent to σ(γ_i Q_j) modulo (X^{2^n} − σ(a))^m for every
/// conjugate σ. Output order: j outer, i inner.
pub fn crt_orthonormal_basis<F: Field>(k: &F, pi: &Poly<F>, n: u32, m: u32) -> Result<Vec<Poly<F>>> {
    let q = k.finite_degree().ok_or(Error::UnsupportedField)?;
    require_separable(k, pi)?;
    let ext = ExtensionField::new(k.clone(), pi.clone())?;
    let d = ext.degree();
    let a = ext.root();
    let gammas = trace_orthonormal_basis(&ext)?;
    let alg = LocalAlgebra::new(ext.clone(), a.clone(), n, m)?;
    let dim = alg.dim();

    let mut local_gram = Matrix::zeros(&ext, dim, dim);
    let mut cur = Poly::one(&ext);
    let mut powers = Vec::with_capacity(2 * dim);
    for _ in 0..2 * dim - 1 {
        powers.push(alg.t(&cur));
        cur = alg.reduce(&cur.shift(&ext, 1));
    }
    for i in 0..dim {
        for j in 0..dim {
            local_gram.set(i, j, powers[i + j].clone());
        }
    }
    let red = gauss_reduce(&ext, &GramMatrix::new(local_gram)?)?;
    if red.rank != dim {
        return Err(Error::ReductionFailed("local form is degenerate".into()));
    }
    let qs: Vec<Poly<ExtensionField<F>>> = (0..dim)
        .map(|j| Poly::from_coeffs(&ext, (0..dim).map(|i| red.p.get(i, j).clone()).collect()))
        .collect();

    // conjugates σ_c = x ↦ x^{|k|^c}
    let sigma = |x: &Poly<F>, c: usize| {
        let mut r = x.clone();
        for _ in 0..c * q as usize {
            r = ext.frobenius(&r);
        }
        r
    };
    let moduli: Vec<Poly<ExtensionField<F>>> = (0..d)
        .map(|c| {
            Poly::monomial(&ext, ext.one(), 1 << n)
                .add(&ext, &Poly::constant(&ext, sigma(&a, c)))
                .pow(&ext, u64::from(m))
        })
        .collect();
    let product = Poly::product(&ext, moduli.iter());
    let idempotents = moduli
        .iter()
        .map(|mc| {
            let cofactor = product.div_exact(&ext, mc)?;
            let inv = cofactor.inv_mod(&ext, mc)?;
            Ok(cofactor.mul(&ext, &inv))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut out = Vec::with_capacity(d * dim);
    for qj in &qs {
        for gamma in &gammas {
            let target = qj.scale(&ext, gamma);
            let mut lift = Poly::zero();
            for (c, e) in idempotents.iter().enumerate() {
                let conj = target.map_coeffs(&ext, |x| sigma(x, c));
                lift = lift.add(&ext, &conj.mul(&ext, e));
            }
            let lift = lift.rem(&ext, &product)?;
            let coeffs = lift
                .coeffs()
                .iter()
                .map(|x| ext.to_base(x).ok_or(Error::DescentFailure))
                .collect::<Result<Vec<_>>>()?;
            out.push(Poly::from_coeffs(k, coeffs));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{BinaryField, RationalFunctionField, TextField};
    use crate::parse::parse_poly;

    fn k() -> RationalFunctionField {
        RationalFunctionField::over_gf2()
    }

    #[test]
    fn even_form_on_quadratic() {
        let k = k();
        let f = even_form(&k, &parse_poly(&k, "x^2+t").unwrap()).unwrap();
        assert_eq!(f.blocks[0].values, vec![k.zero(), k.one()]);
        let g = gram(&k, &f);
        assert_eq!(g.to_rows(), vec![vec![k.zero(), k.one()], vec![k.one(), k.zero()]]);
        assert!(f.blocks[0].claim_holds(&k));
        let f = even_form(&k, &parse_poly(&k, "(x^2+t)^2").unwrap()).unwrap();
        assert!(f.blocks[0].claim_holds(&k));
        assert_eq!(
            even_form(&k, &parse_poly(&k, "x^2+x").unwrap()).unwrap_err(),
            Error::NotEvenPolynomial
        );
    }

    #[test]
    fn sep_local_values() {
        let k = k();
        let f = sep_local_form(&k, k.t(), 3).unwrap();
        let b = &f.blocks[0];
        assert!(b.claim_holds(&k));
        // s(α²) = a² when m = 2
        let f2 = sep_local_form(&k, k.t(), 2).unwrap();
        let x2 = parse_poly(&k, "x^2").unwrap();
        assert_eq!(f2.blocks[0].eval(&k, &x2), k.parse("t^2").unwrap());
        let f1 = sep_local_form(&k, k.t(), 1).unwrap();
        let x5 = parse_poly(&k, "x^5").unwrap();
        assert_eq!(f1.blocks[0].eval(&k, &x5), k.parse("t^5").unwrap());
    }

    #[test]
    fn insep_local_values() {
        let k = k();
        let f = insep_local_form(&k, k.t(), 1, 2).unwrap();
        assert_eq!(f.blocks[0].values, vec![k.zero(), k.zero(), k.one(), k.one()]);
        assert!(f.blocks[0].claim_holds(&k));
        assert_eq!(
            insep_local_form(&k, k.parse("t^2").unwrap(), 1, 2).unwrap_err(),
            Error::SquareParameter
        );
        assert_eq!(insep_local_form(&k, k.t(), 1, 1).unwrap_err(), Error::BadMultiplicity(1));
    }

    #[test]
    fn closed_form_examples() {
        let k = k();
        let form = ClosedForm::InsepLocal { a: k.t(), n: 1, m: 2 };
        assert_eq!(closed_form_value(&k, &form, 5).unwrap(), k.zero());
        assert_eq!(closed_form_value(&k, &form, 6).unwrap(), k.parse("t^2").unwrap());
        assert_eq!(closed_form_value(&k, &form, 7).unwrap(), k.parse("t^2").unwrap());
        assert_eq!(
            closed_form_value(&k, &form, 3).unwrap_err(),
            Error::OutOfRange { index: 3, threshold: 4 }
        );
        let sep = ClosedForm::SepLocal { a: k.t(), m: 1 };
        for i in 1..6 {
            assert_eq!(closed_form_value(&k, &sep, i).unwrap(), k.pow(&k.t(), i));
        }
        let direct = insep_local_form(&k, k.t(), 1, 2).unwrap();
        for i in 4..20 {
            let xi = Poly::monomial(&k, k.one(), i as usize);
            assert_eq!(direct.blocks[0].eval(&k, &xi), closed_form_value(&k, &form, i).unwrap());
        }
    }

    #[test]
    fn square_block() {
        let k2 = BinaryField::gf2();
        let f = square_block_form(&k2, &parse_poly(&k2, "x^2+1").unwrap()).unwrap();
        assert_eq!(gram(&k2, &f), Matrix::identity(&k2, 2));
        let k = k();
        let g = parse_poly(&k, "(x^2+t)^2").unwrap();
        assert!(square_block_form(&k, &g).unwrap().blocks[0].claim_holds(&k));
        assert_eq!(
            square_block_form(&k, &parse_poly(&k, "x^2").unwrap()).unwrap_err(),
            Error::ZeroConstantTerm
        );
        assert_eq!(
            square_block_form(&k, &parse_poly(&k, "x^2+t").unwrap()).unwrap_err(),
            Error::NotSquareShape
        );
    }

    #[test]
    fn point_and_sums() {
        let k = k();
        let p = point_form(&k);
        assert_eq!(gram(&k, &p), Matrix::identity(&k, 1));
        let e = even_form(&k, &parse_poly(&k, "x^2+t").unwrap()).unwrap();
        let s = direct_sum(&k, &[p.clone(), e.clone()]).unwrap();
        let g = GramMatrix::new(gram(&k, &s)).unwrap();
        assert!(s.claims_certify_unit());
        assert!(is_unit_certifiable(&k, &g));
        let hh = direct_sum(&k, &[e.clone(), even_form(&k, &parse_poly(&k, "x^2+t+1").unwrap()).unwrap()]).unwrap();
        assert!(!hh.claims_certify_unit());
        assert!(!is_unit_certifiable(&k, &GramMatrix::new(gram(&k, &hh)).unwrap()));
        assert_eq!(direct_sum(&k, &[e.clone(), e]).unwrap_err(), Error::NotCoprimeBlocks);
    }

    #[test]
    fn finite_sep_power() {
        let k2 = BinaryField::gf2();
        let f = sep_power_form(&k2, &parse_poly(&k2, "x^2+x+1").unwrap(), 1).unwrap();
        let c = classify(&k2, &GramMatrix::new(gram(&k2, &f)).unwrap());
        assert!(c.nondegenerate && !c.alternating);
        let lin = sep_power_form(&k2, &parse_poly(&k2, "x+1").unwrap(), 1).unwrap();
        assert_eq!(lin.blocks[0].values, vec![1]);
        assert_eq!(
            sep_power_form(&k(), &parse_poly(&k(), "x^2+t").unwrap(), 1).unwrap_err(),
            Error::InseparableCore
        );
    }

    #[test]
    fn crt_basis_small() {
        let k2 = BinaryField::gf2();
        let pi = parse_poly(&k2, "x^2+x+1").unwrap();
        for (n, m) in [(0, 1), (0, 3), (1, 2)] {
            let basis = crt_orthonormal_basis(&k2, &pi, n, m).unwrap();
            let form = if n == 0 {
                sep_power_form(&k2, &pi, m).unwrap()
            } else {
                insep_power_form(&k2, &pi, n, m).unwrap()
            };
            let b = &form.blocks[0];
            assert_eq!(basis.len(), b.dim());
            for (i, x) in basis.iter().enumerate() {
                for (j, y) in basis.iter().enumerate() {
                    assert_eq!(b.eval(&k2, &x.mul(&k2, y)), u64::from(i == j), "n={n} m={m}");
                }
            }
        }
        let kt = k();
        assert_eq!(
            crt_orthonormal_basis(&kt, &parse_poly(&kt, "x^2+x+t").unwrap(), 0, 1).unwrap_err(),
            Error::UnsupportedField
        );
    }
}
