//! Dense matrices over a field, with companion matrices and the minimal and
//! characteristic polynomials.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, TextField};
use crate::poly::Poly;

/// Row-major dense matrix.
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Clone for Matrix<F> {
    fn clone(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        }
    }
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Eq for Matrix<F> {}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows).finish()
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(k: &F, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![k.zero(); rows * cols],
        }
    }

    pub fn identity(k: &F, n: usize) -> Self {
        let mut m = Self::zeros(k, n, n);
        for i in 0..n {
            m.set(i, i, k.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: F::Elem) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, k: &F, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(k, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if k.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if k.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = k.add(&out.data[idx], &k.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, k: &F, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| k.add(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, k: &F, c: &F::Elem) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| k.mul(a, c)).collect(),
        }
    }

    pub fn mul_vec(&self, k: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        (0..self.rows)
            .map(|i| k.sum(self.row(i).iter().zip(v).map(|(a, b)| k.mul(a, b)).collect::<Vec<_>>().iter()))
            .collect()
    }

    pub fn is_zero(&self, k: &F) -> bool {
        self.data.iter().all(|a| k.is_zero(a))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self, k: &F) -> F::Elem {
        k.sum((0..self.rows.min(self.cols)).map(|i| self.get(i, i)))
    }

    /// Row echelon form in place; returns the pivot columns.
    fn echelon(&mut self, k: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !k.is_zero(self.get(i, c))) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = k.inv(self.get(r, c)).expect("nonzero pivot");
            for j in c..self.cols {
                let v = k.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || k.is_zero(self.get(i, c)) {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = k.add(self.get(i, j), &k.mul(&factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self, k: &F) -> usize {
        self.clone().echelon(k).len()
    }

    pub fn inverse(&self, k: &F) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquareShape);
        }
        let n = self.rows;
        let mut aug = Self::zeros(k, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, k.one());
        }
        let pivots = aug.echelon(k);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut out = Self::zeros(k, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    pub fn det(&self, k: &F) -> Result<F::Elem> {
        if !self.is_square() {
            return Err(Error::NotSquareShape);
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = k.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !k.is_zero(m.get(i, c))) else {
                return Ok(k.zero());
            };
            m.swap_rows(c, p);
            let pivot = m.get(c, c).clone();
            det = k.mul(&det, &pivot);
            let inv = k.inv(&pivot)?;
            for i in c + 1..n {
                if k.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = k.mul(m.get(i, c), &inv);
                for j in c..n {
                    let v = k.add(m.get(i, j), &k.mul(&factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn block_diag(k: &F, blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(k, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Matrix of multiplication by X on k[X]/(f) in the basis 1, X, ..., X^(n-1):
    /// ones on the subdiagonal and the coefficients of f in the last column.
    pub fn companion(k: &F, f: &Poly<F>) -> Result<Self> {
        let n = f.degree().ok_or(Error::ConstantPolynomial)?;
        if n == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if !f.is_monic(k) {
            return Err(Error::NotMonic);
        }
        let mut m = Self::zeros(k, n, n);
        for i in 0..n {
            if i + 1 < n {
                m.set(i + 1, i, k.one());
            }
            m.set(i, n - 1, f.coeff(k, i));
        }
        Ok(m)
    }

    pub fn block_companion(k: &F, moduli: &[Poly<F>]) -> Result<Self> {
        let blocks = moduli
            .iter()
            .map(|f| Self::companion(k, f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::block_diag(k, &blocks))
    }

    /// Characteristic polynomial det(X·I − M) by Berkowitz's division-free
    /// recurrence.
    pub fn char_poly(&self, k: &F) -> Result<Poly<F>> {
        if !self.is_square() {
            return Err(Error::NotSquareShape);
        }
        let n = self.rows;
        // coefficients highest degree first
        let mut p: Vec<F::Elem> = vec![k.one()];
        for r in 0..n {
            // leading (r+1)x(r+1) block: A = top-left r x r, c = column r above
            // the diagonal, row = row r left of the diagonal, a = entry (r, r)
            let a = self.get(r, r).clone();
            let c: Vec<F::Elem> = (0..r).map(|i| self.get(i, r).clone()).collect();
            let row: Vec<F::Elem> = self.row(r)[..r].to_vec();
            let mut t = Vec::with_capacity(r + 2);
            t.push(k.one());
            t.push(a);
            let mut v = c;
            for _ in 0..r {
                t.push(k.sum(row.iter().zip(&v).map(|(x, y)| k.mul(x, y)).collect::<Vec<_>>().iter()));
                v = (0..r)
                    .map(|i| {
                        k.sum((0..r).map(|j| k.mul(self.get(i, j), &v[j])).collect::<Vec<_>>().iter())
                    })
                    .collect();
            }
            // p_new[i] = Σ_j t[i-j] p[j], length r+2
            let next = (0..r + 2)
                .map(|i| {
                    k.sum(
                        (0..=r.min(i))
                            .filter(|&j| j < p.len())
                            .map(|j| k.mul(&t[i - j], &p[j]))
                            .collect::<Vec<_>>()
                            .iter(),
                    )
                })
                .collect();
            p = next;
        }
        p.reverse();
        Ok(Poly::from_coeffs(k, p))
    }

    /// Minimal polynomial as the lcm of the annihilators of the standard basis
    /// vectors, each found from its Krylov sequence.
    pub fn min_poly(&self, k: &F) -> Result<Poly<F>> {
        if !self.is_square() {
            return Err(Error::NotSquareShape);
        }
        let n = self.rows;
        let mut acc = Poly::one(k);
        for e in 0..n {
            if acc.degree() == Some(n) {
                break;
            }
            let mut v = vec![k.zero(); n];
            v[e] = k.one();
            let ann = self.local_annihilator(k, v);
            acc = Poly::lcm(k, &acc, &ann);
        }
        Ok(acc)
    }

    fn local_annihilator(&self, k: &F, start: Vec<F::Elem>) -> Poly<F> {
        let n = self.rows;
        // reduced Krylov vectors: (vector with a pivot entry scaled to 1,
        // pivot index, polynomial p with vector = p(M)·start)
        let mut basis: Vec<(Vec<F::Elem>, usize, Poly<F>)> = Vec::new();
        let mut w = start;
        let mut j = 0;
        loop {
            let mut r = w.clone();
            let mut combo = Poly::monomial(k, k.one(), j);
            for (b, piv, p) in &basis {
                if k.is_zero(&r[*piv]) {
                    continue;
                }
                let c = r[*piv].clone();
                for (x, y) in r.iter_mut().zip(b) {
                    *x = k.add(x, &k.mul(&c, y));
                }
                combo = combo.add(k, &p.scale(k, &c));
            }
            match r.iter().position(|x| !k.is_zero(x)) {
                None => return combo.monic(k).expect("nonzero annihilator"),
                Some(piv) => {
                    let inv = k.inv(&r[piv]).expect("nonzero");
                    let r = r.iter().map(|x| k.mul(x, &inv)).collect();
                    basis.push((r, piv, combo.scale(k, &inv)));
                }
            }
            w = self.mul_vec(k, &w);
            j += 1;
            debug_assert!(j <= n);
        }
    }

    /// p(M) by Horner's rule.
    pub fn eval_poly(&self, k: &F, p: &Poly<F>) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquareShape);
        }
        let n = self.rows;
        let mut acc = Self::zeros(k, n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(k, self)?;
            for i in 0..n {
                let v = k.add(acc.get(i, i), c);
                acc.set(i, i, v);
            }
        }
        Ok(acc)
    }
}

impl<F: TextField> Matrix<F> {
    pub fn render_rows(&self, k: &F) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| k.render(x)).collect())
            .collect()
    }

    pub fn parse_rows(k: &F, rows: &[Vec<String>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| k.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }

    /// Aligned plain-text rendering, one row per line.
    pub fn pretty(&self, k: &F) -> String {
        let cells = self.render_rows(k);
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| format!("{c:>width$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}
