use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

/// One irreducible factor ρ = π(X^{2^depth}) of multiplicity `multiplicity`,
/// with π separable.
#[derive(Clone, Debug)]
pub struct FactorEntry<F: Field> {
    pub core: Poly<F>,
    pub depth: u32,
    pub multiplicity: u32,
}

impl<F: Field> PartialEq for FactorEntry<F> {
    fn eq(&self, other: &Self) -> bool {
        self.core == other.core
            && self.depth == other.depth
            && self.multiplicity == other.multiplicity
    }
}

impl<F: Field> FactorEntry<F> {
    /// ρ = π(X^{2^depth}).
    pub fn irreducible(&self, k: &F) -> Poly<F> {
        self.core.inflate(k, 1usize << self.depth)
    }

    /// ρ^multiplicity.
    pub fn power(&self, k: &F) -> Poly<F> {
        self.irreducible(k).pow(k, u64::from(self.multiplicity))
    }

    pub fn is_separable(&self) -> bool {
        self.depth == 0
    }

    /// Degree of ρ.
    pub fn degree(&self) -> usize {
        self.core.degree().unwrap_or(0) << self.depth
    }
}

/// A complete factorization `unit · ∏ ρ_i^{m_i}` into pairwise coprime
/// monic irreducibles.
#[derive(Clone, Debug)]
pub struct FactorDecomposition<F: Field> {
    pub unit: F::Elem,
    pub entries: Vec<FactorEntry<F>>,
}

impl<F: Field> PartialEq for FactorDecomposition<F> {
    fn eq(&self, other: &Self) -> bool {
        self.unit == other.unit && self.entries == other.entries
    }
}

impl<F: Field> FactorDecomposition<F> {
    pub fn expand(&self, k: &F) -> Poly<F> {
        self.entries
            .iter()
            .fold(Poly::constant(k, self.unit.clone()), |acc, e| {
                acc.mul(k, &e.power(k))
            })
    }

    pub fn degree(&self) -> usize {
        self.entries
            .iter()
            .map(|e| e.degree() * e.multiplicity as usize)
            .sum()
    }
}

/// Writes an irreducible `rho` as π(X^{2^n}) with π separable, by halving
/// exponents while every exponent is even.
pub fn inseparability_depth<F: Field>(k: &F, rho: &Poly<F>) -> Result<(Poly<F>, u32)> {
    if rho.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let mut core = rho.clone();
    let mut depth = 0;
    while let Some(half) = core.deflate2(k) {
        core = half;
        depth += 1;
    }
    let d = core.derivative(k);
    if d.is_zero() || !Poly::gcd(k, &core, &d).is_one(k) {
        return Err(Error::NotIrreducibleHint);
    }
    // π(X^2) with square coefficients is the square of a polynomial
    if depth > 0 && core.coeffs().iter().all(|c| k.is_square(c)) {
        return Err(Error::NotIrreducibleHint);
    }
    Ok((core, depth))
}

/// Checks a user-supplied factorization of `f` structurally: monic factors,
/// pairwise coprime, product equal to `f`. Separable cores and depths are
/// re-derived. Irreducibility itself is trusted.
pub fn validate_factored_input<F: Field>(
    k: &F,
    f: &Poly<F>,
    claimed: &[(Poly<F>, u32)],
) -> Result<FactorDecomposition<F>> {
    if !f.is_monic(k) {
        return Err(Error::NotMonic);
    }
    for (rho, m) in claimed {
        if rho.degree().unwrap_or(0) == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if !rho.is_monic(k) {
            return Err(Error::NotMonic);
        }
        if *m == 0 {
            return Err(Error::BadMultiplicity(0));
        }
    }
    for (i, (a, _)) in claimed.iter().enumerate() {
        for (b, _) in &claimed[i + 1..] {
            if !Poly::gcd(k, a, b).is_one(k) {
                return Err(Error::NotCoprime);
            }
        }
    }
    let product = claimed
        .iter()
        .fold(Poly::one(k), |acc, (rho, m)| acc.mul(k, &rho.pow(k, u64::from(*m))));
    if product != *f {
        return Err(Error::ProductMismatch);
    }
    let entries = claimed
        .iter()
        .map(|(rho, m)| {
            let (core, depth) = inseparability_depth(k, rho)?;
            Ok(FactorEntry {
                core,
                depth,
                multiplicity: *m,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FactorDecomposition {
        unit: k.one(),
        entries,
    })
}
