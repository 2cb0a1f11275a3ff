//! Factorization over GF(2^m): squarefree decomposition, distinct-degree
//! splitting, and equal-degree splitting with the absolute trace map.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{FactorDecomposition, FactorEntry, Poly};

pub const DEFAULT_SEED: u64 = 0x2c0f_fee5;

/// Attempts per equal-degree split before giving up.
pub const SPLIT_RETRY_CAP: usize = 64;

pub fn factor<F: Field>(k: &F, f: &Poly<F>) -> Result<FactorDecomposition<F>> {
    factor_with_seed(k, f, DEFAULT_SEED)
}

/// Complete factorization of `f` over a finite field.
pub fn factor_with_seed<F: Field>(k: &F, f: &Poly<F>, seed: u64) -> Result<FactorDecomposition<F>> {
    let field_degree = k.finite_degree().ok_or(Error::UnsupportedField)?;
    let unit = f.leading().cloned().ok_or(Error::ConstantPolynomial)?;
    if f.degree() == Some(0) {
        return Err(Error::ConstantPolynomial);
    }
    let monic = f.monic(k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = Vec::new();
    for (piece, multiplicity) in squarefree_decomposition(k, &monic)? {
        for (group, d) in distinct_degree(k, &piece, field_degree)? {
            for irreducible in equal_degree(k, &group, d, field_degree, &mut rng)? {
                entries.push(FactorEntry {
                    core: irreducible,
                    depth: 0,
                    multiplicity,
                });
            }
        }
    }
    entries.sort_by(|a, b| a.core.cmp(&b.core));
    Ok(FactorDecomposition { unit, entries })
}

/// Splits a monic polynomial over a perfect field into pairwise coprime
/// squarefree pieces `(g_i, i)` with `f = ∏ g_i^i`.
pub fn squarefree_decomposition<F: Field>(k: &F, f: &Poly<F>) -> Result<Vec<(Poly<F>, u32)>> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let d = f.derivative(k);
    if d.is_zero() {
        // f = h²
        let h = f.sqrt(k)?;
        for (g, e) in squarefree_decomposition(k, &h)? {
            out.push((g, 2 * e));
        }
        return Ok(out);
    }
    let mut c = Poly::gcd(k, f, &d);
    let mut w = f.div_exact(k, &c)?;
    let mut i = 1;
    while !w.is_one(k) {
        let y = Poly::gcd(k, &w, &c);
        let z = w.div_exact(k, &y)?;
        if !z.is_one(k) {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(k, &w)?;
    }
    if !c.is_one(k) {
        let h = c.sqrt(k)?;
        for (g, e) in squarefree_decomposition(k, &h)? {
            out.push((g, 2 * e));
        }
    }
    Ok(out)
}

/// h ↦ h^(2^m) mod f.
fn frobenius_mod<F: Field>(k: &F, h: &Poly<F>, f: &Poly<F>, field_degree: u32) -> Result<Poly<F>> {
    let mut r = h.clone();
    for _ in 0..field_degree {
        r = r.square(k).rem(k, f)?;
    }
    Ok(r)
}

/// Groups the irreducible factors of a squarefree monic `f` by degree.
fn distinct_degree<F: Field>(
    k: &F,
    f: &Poly<F>,
    field_degree: u32,
) -> Result<Vec<(Poly<F>, usize)>> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = Poly::x(k);
    let mut h = x.rem(k, &rest)?;
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = frobenius_mod(k, &h, &rest, field_degree)?;
        let g = Poly::gcd(k, &rest, &h.add(k, &x));
        if !g.is_one(k) {
            rest = rest.div_exact(k, &g)?;
            h = h.rem(k, &rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    Ok(out)
}

fn random_poly<F: Field>(k: &F, below: usize, field_degree: u32, rng: &mut ChaCha8Rng) -> Poly<F> {
    let order = 1u64 << field_degree;
    let coeffs = (0..below)
        .map(|_| k.element(rng.gen_range(0..order)).expect("finite field element"))
        .collect();
    Poly::from_coeffs(k, coeffs)
}

/// Splits a product of distinct irreducibles of degree `d` using
/// T(r) = r + r² + ... + r^(2^(md-1)) mod f, whose value on each factor lies in GF(2).
fn equal_degree<F: Field>(
    k: &F,
    f: &Poly<F>,
    d: usize,
    field_degree: u32,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Poly<F>>> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let trace_len = field_degree as usize * d;
    for _ in 0..SPLIT_RETRY_CAP {
        let r = random_poly(k, n, field_degree, rng);
        if r.is_constant() {
            continue;
        }
        let mut power = r.rem(k, f)?;
        let mut trace = power.clone();
        for _ in 1..trace_len {
            power = power.square(k).rem(k, f)?;
            trace = trace.add(k, &power);
        }
        let g = Poly::gcd(k, f, &trace);
        let deg = g.degree().unwrap_or(0);
        if deg > 0 && deg < n {
            let h = f.div_exact(k, &g)?;
            let mut out = equal_degree(k, &g, d, field_degree, rng)?;
            out.extend(equal_degree(k, &h, d, field_degree, rng)?);
            return Ok(out);
        }
    }
    Err(Error::SplitFailed(SPLIT_RETRY_CAP))
}
