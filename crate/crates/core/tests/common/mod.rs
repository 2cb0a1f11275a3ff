#![allow(dead_code)]

use std::path::PathBuf;

use charsym::json::parse_matrix;
use charsym::parse::{parse_factored, parse_poly};
use charsym::poly::{validate_factored_input, FactorDecomposition};
use charsym::{Matrix, Poly, RationalFunctionField, TextField};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fixture_matrix<F: TextField>(k: &F, name: &str) -> Matrix<F> {
    parse_matrix(k, &fixture_text(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn kt() -> RationalFunctionField {
    RationalFunctionField::over_gf2()
}

/// Parses a factored expression such as `(x^2+t)^3*(x+1)` both as a
/// polynomial and as a claimed factorization.
pub fn factored<F: TextField>(k: &F, text: &str) -> (Poly<F>, FactorDecomposition<F>) {
    let f = parse_poly(k, text).unwrap();
    let claim = parse_factored(k, text).unwrap();
    let fd = validate_factored_input(k, &f, &claim).unwrap_or_else(|e| panic!("{text}: {e}"));
    (f, fd)
}

/// All monic polynomials of the given degree over a finite field.
pub fn monic_polys<F: charsym::Field>(k: &F, degree: usize) -> Vec<Poly<F>> {
    let q = 1u64 << k.finite_degree().expect("finite field");
    let count = q.pow(degree as u32);
    (0..count)
        .map(|mut idx| {
            let mut coeffs = Vec::with_capacity(degree + 1);
            for _ in 0..degree {
                coeffs.push(k.element(idx % q).unwrap());
                idx /= q;
            }
            coeffs.push(k.one());
            Poly::from_coeffs(k, coeffs)
        })
        .collect()
}

/// Function-field inputs for the realization corpus, mixing both cases,
/// depths 0 to 2 and multiplicities 1 to 4.
pub const CORPUS_SEPARABLE_PRESENT: &[&str] = &[
    "(x+t)",
    "(x^2+x+t)",
    "(x^2+x+t)^3",
    "(x+t)^2",
    "(x+1)*(x^2+t)",
    "(x+t)^3*(x^2+t)^2",
    "(x^2+x+t)*(x^4+t)",
    "(x^3+t)*(x^2+t)^2",
    "x*(x+1)^2*(x^2+t+1)",
    "(x+t)^4",
    "(x^3+x+t)^2*(x+1)",
    "(x^2+x+t)^2*(x^2+x+t^3)",
    "(x+1/t)^2*(x^2+t)",
    "x*(x^4+x^2+t)",
    "(x+t+1)*(x^8+x^4+t)",
    "(x^2+x+t)^4*(x^2+t)",
    "(x+1)^3*(x+t)^2*(x^2+t)",
    "(x^3+t)^3",
    "(x^2+x+t^3)*(x^2+t^3)",
    "x^2*(x^4+t)",
];

pub const CORPUS_ALL_INSEPARABLE: &[&str] = &[
    "(x^2+t)^3",
    "(x^2+t)^2",
    "(x^2+t)^4",
    "(x^4+t)^2",
    "(x^2+t)^2*(x^2+t+1)",
    "(x^2+t)^3*(x^4+t)",
    "(x^4+x^2+t)^2",
    "(x^2+t^3)^2*(x^2+t)",
    "(x^2+t+1)^2*(x^2+t)^2",
    "(x^2+1/t)^2",
    "(x^4+t)^2*(x^2+t+1)",
];

pub const CORPUS_NOT_REALIZABLE: &[&str] = &[
    "(x^2+t)",
    "(x^2+t)*(x^4+t)",
    "(x^4+x^2+t)",
    "(x^2+t)*(x^2+t+1)*(x^4+t^3)",
];
