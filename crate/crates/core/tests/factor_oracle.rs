//! Factorization against brute-force trial division over small fields.

mod common;

use charsym::poly::{factor, factor_with_seed};
use charsym::{BinaryField, Field, Poly};

use common::monic_polys;

/// Monic irreducibles up to `max_degree`, sieved by trial division.
fn irreducibles<F: Field>(k: &F, max_degree: usize) -> Vec<Poly<F>> {
    let mut out: Vec<Poly<F>> = Vec::new();
    for d in 1..=max_degree {
        for f in monic_polys(k, d) {
            if out
                .iter()
                .all(|g| 2 * g.degree().unwrap() > d || !g.divides(k, &f).unwrap())
            {
                out.push(f);
            }
        }
    }
    out
}

/// (irreducible, multiplicity) by repeated trial division, sorted.
fn trial_factor<F: Field>(k: &F, f: &Poly<F>, irr: &[Poly<F>]) -> Vec<(Poly<F>, u32)> {
    let mut rest = f.clone();
    let mut out = Vec::new();
    for g in irr {
        let mut m = 0;
        while g.divides(k, &rest).unwrap() {
            rest = rest.div_exact(k, g).unwrap();
            m += 1;
        }
        if m > 0 {
            out.push((g.clone(), m));
        }
    }
    assert!(rest.is_one(k));
    out.sort();
    out
}

fn exhaustive<F: Field>(k: &F, max_degree: usize) -> usize {
    let irr = irreducibles(k, max_degree);
    let mut count = 0;
    for d in 1..=max_degree {
        for f in monic_polys(k, d) {
            let fd = factor(k, &f).unwrap();
            assert_eq!(fd.expand(k), f);
            let mut got: Vec<_> = fd
                .entries
                .iter()
                .map(|e| (e.irreducible(k), e.multiplicity))
                .collect();
            got.sort();
            assert_eq!(got, trial_factor(k, &f, &irr), "{f:?}");
            for e in &fd.entries {
                // perfect field: every irreducible is separable
                assert_eq!(e.depth, 0);
                assert!(Poly::gcd(k, &e.core, &e.core.derivative(k)).is_one(k));
            }
            count += 1;
        }
    }
    count
}

#[test]
fn gf2_up_to_degree_6() {
    assert_eq!(exhaustive(&BinaryField::gf2(), 6), 126);
}

#[test]
fn gf4_up_to_degree_4() {
    assert_eq!(exhaustive(&BinaryField::with_default_modulus(2).unwrap(), 4), 340);
}

#[test]
fn seed_does_not_change_result() {
    let k = BinaryField::with_default_modulus(3).unwrap();
    for f in monic_polys(&k, 3) {
        assert_eq!(factor_with_seed(&k, &f, 1).unwrap(), factor_with_seed(&k, &f, 99).unwrap());
    }
}
