//! Symmetric matrices with prescribed minimal polynomial: decision, block
//! planning, orthonormalization and the conjugated companion matrix.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::forms::{gauss_reduce, GramMatrix};
use crate::matrix::Matrix;
use crate::poly::{FactorDecomposition, Poly};
use crate::transfer::{
    direct_sum, even_form, gram, insep_power_form, point_form, sep_power_form, square_block_form,
    TransferForm,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    Realizable,
    NotRealizable,
}

/// Why [`decide`] answered as it did, by index into the decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    SeparableFactor(usize),
    RepeatedInseparableFactor(usize),
    DistinctInseparableFactors,
}

/// f is the minimal polynomial of a symmetric matrix unless it is a product
/// of pairwise distinct inseparable irreducibles.
pub fn decide<F: Field>(fd: &FactorDecomposition<F>) -> Decision {
    decide_with_witness(fd).0
}

pub fn decide_with_witness<F: Field>(fd: &FactorDecomposition<F>) -> (Decision, Witness) {
    if let Some(i) = fd.entries.iter().position(|e| e.is_separable()) {
        return (Decision::Realizable, Witness::SeparableFactor(i));
    }
    if let Some(i) = fd.entries.iter().position(|e| e.multiplicity >= 2) {
        return (Decision::Realizable, Witness::RepeatedInseparableFactor(i));
    }
    (Decision::NotRealizable, Witness::DistinctInseparableFactors)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// Some irreducible factor is separable.
    SeparablePresent,
    /// Every factor is inseparable and one has multiplicity at least two.
    AllInseparable,
    /// Eigenvalue mode for an inseparable irreducible f: the point X = 0 is
    /// adjoined, giving X·f.
    PointExtended,
}

impl Case {
    pub fn as_str(self) -> &'static str {
        match self {
            Case::SeparablePresent => "separable_present",
            Case::AllInseparable => "all_inseparable",
            Case::PointExtended => "point_extended",
        }
    }
}

/// A block whose transfer is isometric to the unit form.
#[derive(Clone, Debug)]
pub enum UnitBlock<F: Field> {
    /// k[X]/(π^m), π separable.
    SepPower { pi: Poly<F>, m: u32 },
    /// k[X]/(π(X^{2^n})^m), π separable, n ≥ 1, m ≥ 2.
    InsepPower { pi: Poly<F>, n: u32, m: u32 },
    /// k[X]/(g) with g a square with nonzero constant term.
    SquareBlock { g: Poly<F> },
    /// k[X]/(X).
    Point,
}

impl<F: Field> UnitBlock<F> {
    pub fn form(&self, k: &F) -> Result<TransferForm<F>> {
        match self {
            UnitBlock::SepPower { pi, m } => sep_power_form(k, pi, *m),
            UnitBlock::InsepPower { pi, n, m } => insep_power_form(k, pi, *n, *m),
            UnitBlock::SquareBlock { g } => square_block_form(k, g),
            UnitBlock::Point => Ok(point_form(k)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RealizationPlan<F: Field> {
    pub case: Case,
    pub unit_blocks: Vec<UnitBlock<F>>,
    /// g ∈ k[X²], carrying a hyperbolic form.
    pub even_block: Option<Poly<F>>,
}

impl<F: Field> RealizationPlan<F> {
    /// Block forms in order: unit blocks, then the even block.
    pub fn forms(&self, k: &F) -> Result<Vec<TransferForm<F>>> {
        let mut out = self
            .unit_blocks
            .iter()
            .map(|b| b.form(k))
            .collect::<Result<Vec<_>>>()?;
        if let Some(g) = &self.even_block {
            out.push(even_form(k, g)?);
        }
        Ok(out)
    }

    pub fn form(&self, k: &F) -> Result<TransferForm<F>> {
        direct_sum(k, &self.forms(k)?)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RealizeOptions {
    /// Reduce each unit block on its own, the last one together with the even
    /// block, and glue the bases block-diagonally.
    pub per_block: bool,
    /// Use a unit square-block form on g instead of the hyperbolic even form
    /// when g is a square with nonzero constant term.
    pub square_even_block: bool,
}

fn rest_product<F: Field>(k: &F, fd: &FactorDecomposition<F>, skip: &[usize]) -> Result<Option<Poly<F>>> {
    let g = fd
        .entries
        .iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .fold(Poly::one(k), |acc, (_, e)| acc.mul(k, &e.power(k)));
    if g.is_one(k) {
        return Ok(None);
    }
    if !g.in_k_of_x2(k) {
        return Err(Error::PlanInvariantViolated("even part is not in k[X^2]".into()));
    }
    Ok(Some(g))
}

pub fn plan<F: Field>(
    k: &F,
    fd: &FactorDecomposition<F>,
    options: RealizeOptions,
) -> Result<RealizationPlan<F>> {
    let separable: Vec<usize> = (0..fd.entries.len())
        .filter(|&i| fd.entries[i].is_separable())
        .collect();
    let (case, chosen) = if separable.is_empty() {
        let host = (0..fd.entries.len())
            .filter(|&i| fd.entries[i].multiplicity >= 2)
            .min_by(|&i, &j| fd.entries[i].irreducible(k).cmp(&fd.entries[j].irreducible(k)))
            .ok_or(Error::NotRealizable)?;
        (Case::AllInseparable, vec![host])
    } else {
        let odd: Vec<usize> = separable
            .iter()
            .copied()
            .filter(|&i| fd.entries[i].multiplicity % 2 == 1)
            .collect();
        // with every separable multiplicity even, one even power still hosts a unit form
        let chosen = if odd.is_empty() { vec![separable[0]] } else { odd };
        (Case::SeparablePresent, chosen)
    };
    let mut unit_blocks: Vec<UnitBlock<F>> = chosen
        .iter()
        .map(|&i| {
            let e = &fd.entries[i];
            if e.is_separable() {
                UnitBlock::SepPower {
                    pi: e.core.clone(),
                    m: e.multiplicity,
                }
            } else {
                UnitBlock::InsepPower {
                    pi: e.core.clone(),
                    n: e.depth,
                    m: e.multiplicity,
                }
            }
        })
        .collect();
    let mut even_block = rest_product(k, fd, &chosen)?;
    if options.square_even_block {
        if let Some(g) = &even_block {
            if square_block_form(k, g).is_ok() {
                unit_blocks.push(UnitBlock::SquareBlock { g: g.clone() });
                even_block = None;
            }
        }
    }
    Ok(RealizationPlan {
        case,
        unit_blocks,
        even_block,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub symmetric: bool,
    pub min_poly_ok: bool,
    pub char_poly_ok: bool,
    /// Qᵀ Q equals the Gram matrix of the assembled form.
    pub gram_ok: bool,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.symmetric && self.min_poly_ok && self.char_poly_ok && self.gram_ok
    }
}

#[derive(Clone, Debug)]
pub struct Realization<F: Field> {
    pub f: Poly<F>,
    /// μ_M and χ_M; equal to f, or X·f in eigen mode.
    pub target: Poly<F>,
    pub plan: RealizationPlan<F>,
    pub form: TransferForm<F>,
    pub gram: Matrix<F>,
    pub c: Matrix<F>,
    pub q: Matrix<F>,
    pub m: Matrix<F>,
    pub certificate: Certificate,
    /// Set in eigen mode when no symmetric matrix of size deg f has f as
    /// characteristic polynomial.
    pub size_n_impossible: bool,
}

fn reduce_full<F: Field>(k: &F, s: Matrix<F>) -> Result<Matrix<F>> {
    let n = s.rows();
    let red = gauss_reduce(k, &GramMatrix::new(s)?)?;
    if red.rank != n {
        return Err(Error::CertificateFailure(format!(
            "transfer form has rank {} < {n}",
            red.rank
        )));
    }
    Ok(red.q)
}

fn assemble<F: Field>(
    k: &F,
    f: &Poly<F>,
    target: Poly<F>,
    plan: RealizationPlan<F>,
    options: RealizeOptions,
) -> Result<Realization<F>> {
    let forms = plan.forms(k)?;
    let form = direct_sum(k, &forms)?;
    form.check_claims(k)?;
    let s = gram(k, &form);
    let q = if options.per_block && forms.len() > 1 {
        let units = plan.unit_blocks.len();
        let mut groups: Vec<Vec<&TransferForm<F>>> = forms.iter().map(|f| vec![f]).collect();
        if plan.even_block.is_some() && units >= 1 {
            let even = groups.pop().expect("even block present");
            groups.last_mut().expect("a unit block").extend(even);
        }
        let qs = groups
            .iter()
            .map(|g| {
                let blocks: Vec<_> = g.iter().map(|f| gram(k, f)).collect();
                reduce_full(k, Matrix::block_diag(k, &blocks))
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::block_diag(k, &qs)
    } else {
        reduce_full(k, s.clone())?
    };
    let c = Matrix::block_companion(k, &form.moduli())?;
    let p = q.inverse(k)?;
    let m = q.mul(k, &c)?.mul(k, &p)?;
    let certificate = Certificate {
        symmetric: m.is_symmetric(),
        min_poly_ok: m.min_poly(k)? == target,
        char_poly_ok: m.char_poly(k)? == target,
        gram_ok: q.transpose().mul(k, &q)? == s,
    };
    if !certificate.passed() {
        return Err(Error::CertificateFailure(format!("{certificate:?}")));
    }
    Ok(Realization {
        f: f.clone(),
        target,
        plan,
        form,
        gram: s,
        c,
        q,
        m,
        certificate,
        size_n_impossible: false,
    })
}

fn check_decomposition<F: Field>(k: &F, f: &Poly<F>, fd: &FactorDecomposition<F>) -> Result<()> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if !f.is_monic(k) {
        return Err(Error::NotMonic);
    }
    if fd.expand(k) != *f {
        return Err(Error::ProductMismatch);
    }
    Ok(())
}

/// A symmetric M with μ_M = χ_M = f.
pub fn realize<F: Field>(
    k: &F,
    f: &Poly<F>,
    fd: &FactorDecomposition<F>,
    options: RealizeOptions,
) -> Result<Realization<F>> {
    check_decomposition(k, f, fd)?;
    if decide(fd) == Decision::NotRealizable {
        return Err(Error::NotRealizable);
    }
    let plan = plan(k, fd, options)?;
    assemble(k, f, f.clone(), plan, options)
}

/// A symmetric matrix having a root of the irreducible f as an eigenvalue:
/// of size deg f when f is separable, otherwise of size deg f + 1 with
/// μ_M = χ_M = X·f.
pub fn realize_eigen<F: Field>(
    k: &F,
    f: &Poly<F>,
    fd: &FactorDecomposition<F>,
    options: RealizeOptions,
) -> Result<Realization<F>> {
    check_decomposition(k, f, fd)?;
    if fd.entries.len() != 1 || fd.entries[0].multiplicity != 1 {
        return Err(Error::NotIrreducible);
    }
    if fd.entries[0].is_separable() {
        return realize(k, f, fd, options);
    }
    let plan = RealizationPlan {
        case: Case::PointExtended,
        unit_blocks: vec![UnitBlock::Point],
        even_block: Some(f.clone()),
    };
    let target = f.shift(k, 1);
    let mut r = assemble(k, f, target, plan, options)?;
    r.size_n_impossible = true;
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    /// μ_M = f.
    MinPoly,
    /// χ_M = f.
    CharPoly,
    /// f divides χ_M.
    Eigen,
}

#[derive(Clone, Debug)]
pub struct VerifyReport<F: Field> {
    pub square: bool,
    pub symmetric: bool,
    pub min_poly: Option<Poly<F>>,
    pub char_poly: Option<Poly<F>>,
    pub min_poly_ok: bool,
    pub char_poly_ok: bool,
    pub divides_char_poly: bool,
    pub passed: bool,
}

pub fn verify<F: Field>(k: &F, m: &Matrix<F>, f: &Poly<F>, mode: VerifyMode) -> VerifyReport<F> {
    if !m.is_square() {
        return VerifyReport {
            square: false,
            symmetric: false,
            min_poly: None,
            char_poly: None,
            min_poly_ok: false,
            char_poly_ok: false,
            divides_char_poly: false,
            passed: false,
        };
    }
    let mu = m.min_poly(k).expect("square matrix");
    let chi = m.char_poly(k).expect("square matrix");
    let symmetric = m.is_symmetric();
    let min_poly_ok = mu == *f;
    let char_poly_ok = chi == *f;
    let divides_char_poly = !f.is_zero() && f.divides(k, &chi).unwrap_or(false);
    let passed = symmetric
        && match mode {
            VerifyMode::MinPoly => min_poly_ok,
            VerifyMode::CharPoly => char_poly_ok,
            VerifyMode::Eigen => divides_char_poly,
        };
    VerifyReport {
        square: true,
        symmetric,
        min_poly: Some(mu),
        char_poly: Some(chi),
        min_poly_ok,
        char_poly_ok,
        divides_char_poly,
        passed,
    }
}
