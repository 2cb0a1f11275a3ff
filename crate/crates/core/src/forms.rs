//! Symmetric bilinear forms given by Gram matrices, and the characteristic-2
//! Gauss reduction that writes a form as a sum of squares φ•φ of linear forms.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// A symmetric Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix<F: Field>(Matrix<F>);

impl<F: Field> GramMatrix<F> {
    pub fn new(m: Matrix<F>) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<F> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub alternating: bool,
    pub nondegenerate: bool,
    pub diagonal_all_squares: bool,
}

pub fn classify<F: Field>(k: &F, s: &GramMatrix<F>) -> Classification {
    let m = s.matrix();
    let n = m.rows();
    let diagonal = (0..n).map(|i| m.get(i, i));
    Classification {
        alternating: diagonal.clone().all(|d| k.is_zero(d)),
        nondegenerate: m.rank(k) == n,
        diagonal_all_squares: diagonal.clone().all(|d| k.is_square(d)),
    }
}

/// True when the form is isometric to the unit form: nonzero, non-degenerate,
/// non-alternating, and b(x, x) a square for all x. Since
/// b(x, x) = Σ x_i² b(e_i, e_i), the last condition is checked on the diagonal.
pub fn is_unit_certifiable<F: Field>(k: &F, s: &GramMatrix<F>) -> bool {
    if s.dim() == 0 {
        return false;
    }
    let c = classify(k, s);
    !c.alternating && c.nondegenerate && c.diagonal_all_squares
}

/// Output of [`gauss_reduce`]: rows of `u` are the φ_i with S = Uᵀ U, `q`
/// completes `u` to an invertible matrix and `p = q⁻¹` satisfies
/// Pᵀ S P = diag(I_r, 0).
#[derive(Clone, Debug)]
pub struct ReductionResult<F: Field> {
    pub u: Matrix<F>,
    pub q: Matrix<F>,
    pub p: Matrix<F>,
    pub rank: usize,
}

fn outer_sub<F: Field>(k: &F, b: &mut Matrix<F>, phi: &[F::Elem]) {
    let n = phi.len();
    for i in 0..n {
        if k.is_zero(&phi[i]) {
            continue;
        }
        for j in 0..n {
            if k.is_zero(&phi[j]) {
                continue;
            }
            let v = k.add(b.get(i, j), &k.mul(&phi[i], &phi[j]));
            b.set(i, j, v);
        }
    }
}

fn add_vec<F: Field>(k: &F, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
    x.iter().zip(y).map(|(a, b)| k.add(a, b)).collect()
}

/// Writes S = Σ φ_i•φ_i with linearly independent φ_i.
///
/// A nonzero diagonal entry B_ii = u² (lowest index first) is peeled with
/// φ = u·x_i + u⁻¹ Σ_{j≠i} B_ij x_j. When the remainder is alternating, the
/// first pair i < j with a = B_ij ≠ 0 is peeled as ψ2•ψ3 + ψ3•ψ2 with
/// ψ2 = a·x_i + ψ and ψ3 = x_j + a⁻¹ψ', and the most recent φ is split into
/// φ+ψ2, φ+ψ3, φ+ψ2+ψ3.
pub fn gauss_reduce<F: Field>(k: &F, s: &GramMatrix<F>) -> Result<ReductionResult<F>> {
    let n = s.dim();
    let mut b = s.matrix().clone();
    let mut phis: Vec<Vec<F::Elem>> = Vec::new();
    while !b.is_zero(k) {
        if let Some(i) = (0..n).find(|&i| !k.is_zero(b.get(i, i))) {
            let u = k.sqrt(b.get(i, i)).map_err(|_| Error::NonSquarePivot(i))?;
            let u_inv = k.inv(&u)?;
            let phi: Vec<F::Elem> = (0..n)
                .map(|j| if j == i { u.clone() } else { k.mul(&u_inv, b.get(i, j)) })
                .collect();
            outer_sub(k, &mut b, &phi);
            phis.push(phi);
            continue;
        }
        let (i, j) = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !k.is_zero(b.get(i, j)))
            .expect("nonzero alternating matrix has an off-diagonal entry");
        let last = phis.pop().ok_or(Error::AlternatingForm)?;
        let a = b.get(i, j).clone();
        let a_inv = k.inv(&a)?;
        let rest = |l: usize| l != i && l != j;
        let psi: Vec<F::Elem> = (0..n)
            .map(|l| if rest(l) { b.get(j, l).clone() } else { k.zero() })
            .collect();
        let psi_p: Vec<F::Elem> = (0..n)
            .map(|l| if rest(l) { b.get(i, l).clone() } else { k.zero() })
            .collect();
        let mut psi2 = psi.clone();
        psi2[i] = a.clone();
        let mut psi3: Vec<F::Elem> = psi_p.iter().map(|x| k.mul(&a_inv, x)).collect();
        psi3[j] = k.one();
        let mut next = Matrix::zeros(k, n, n);
        for l in (0..n).filter(|&l| rest(l)) {
            for m in (0..n).filter(|&m| rest(m)) {
                let cross = k.add(&k.mul(&psi[l], &psi_p[m]), &k.mul(&psi_p[l], &psi[m]));
                next.set(l, m, k.add(b.get(l, m), &k.mul(&a_inv, &cross)));
            }
        }
        b = next;
        let first = add_vec(k, &last, &psi2);
        let second = add_vec(k, &last, &psi3);
        let third = add_vec(k, &first, &psi3);
        phis.extend([first, second, third]);
    }

    let r = phis.len();
    let u = if r == 0 {
        Matrix::zeros(k, 0, n)
    } else {
        Matrix::from_rows(phis.clone())?
    };
    if u.rank(k) != r {
        return Err(Error::ReductionFailed("linear forms are dependent".into()));
    }
    if r > 0 && u.transpose().mul(k, &u)? != *s.matrix() {
        return Err(Error::ReductionFailed("Uᵀ U differs from S".into()));
    }

    let mut rows = phis;
    for idx in 0..n {
        if rows.len() == n {
            break;
        }
        let mut unit = vec![k.zero(); n];
        unit[idx] = k.one();
        rows.push(unit);
        if Matrix::from_rows(rows.clone())?.rank(k) < rows.len() {
            rows.pop();
        }
    }
    let q = if n == 0 { Matrix::zeros(k, 0, 0) } else { Matrix::from_rows(rows)? };
    let p = q.inverse(k)?;
    Ok(ReductionResult { u, q, p, rank: r })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CongruenceMode {
    /// Qᵀ S Q = I.
    Orthonormalizes,
    /// Qᵀ Q = S.
    Factors,
}

pub fn congruence_check<F: Field>(
    k: &F,
    s: &Matrix<F>,
    q: &Matrix<F>,
    mode: CongruenceMode,
) -> bool {
    let qt = q.transpose();
    let lhs = match mode {
        CongruenceMode::Orthonormalizes => qt.mul(k, s).and_then(|x| x.mul(k, q)),
        CongruenceMode::Factors => qt.mul(k, q),
    };
    match (lhs, mode) {
        (Ok(x), CongruenceMode::Orthonormalizes) => x.is_square() && x == Matrix::identity(k, x.rows()),
        (Ok(x), CongruenceMode::Factors) => x == *s,
        (Err(_), _) => false,
    }
}
