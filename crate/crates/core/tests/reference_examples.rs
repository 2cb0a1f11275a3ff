mod common;

use std::collections::BTreeMap;

use charsym::ext::{trace_orthonormal_basis, ExtensionField};
use charsym::forms::{gauss_reduce, GramMatrix};
use charsym::parse::parse_poly;
use charsym::realize::{realize, RealizeOptions};
use charsym::transfer::{gram, sep_power_form};
use charsym::{Field, Matrix, Poly};

use common::*;

#[test]
fn reduction_reproduces_printed_q() {
    let k = kt();
    let s = fixture_matrix(&k, "example1_S.json");
    let red = gauss_reduce(&k, &GramMatrix::new(s).unwrap()).unwrap();
    assert_eq!(red.rank, 6);
    assert_eq!(red.q, fixture_matrix(&k, "example1_Q.json"));
}

#[test]
fn realization_reproduces_printed_m() {
    let k = kt();
    let (f, fd) = factored(&k, "(x^2+x+t)^3");
    let r = realize(&k, &f, &fd, RealizeOptions::default()).unwrap();
    assert_eq!(r.gram, fixture_matrix(&k, "example1_S.json"));
    assert_eq!(r.m, fixture_matrix(&k, "example1_M.json"));
}

// The printed second form of this decomposition uses a different pivot
// scaling, so only the first row and the factorization are pinned.
#[test]
fn inseparable_example_reduction() {
    let k = kt();
    let s = fixture_matrix(&k, "example2_S.json");
    let printed = fixture_matrix(&k, "example2_Q.json");
    let red = gauss_reduce(&k, &GramMatrix::new(s.clone()).unwrap()).unwrap();
    assert_eq!(red.rank, 6);
    assert_eq!(red.q.row(0), printed.row(0));
    assert_eq!(red.q.transpose().mul(&k, &red.q).unwrap(), s);
    let (f, fd) = factored(&k, "(x^2+t)^3");
    let r = realize(&k, &f, &fd, RealizeOptions::default()).unwrap();
    assert_eq!(r.gram, s);
    assert!(r.m.is_symmetric());
    // the printed basis conjugates C to the printed M
    let c = Matrix::companion(&k, &f).unwrap();
    let m = printed.mul(&k, &c).unwrap().mul(&k, &printed.inverse(&k).unwrap()).unwrap();
    assert_eq!(m, fixture_matrix(&k, "example2_M.json"));
}

#[test]
fn example3_basis_conjugates_companion() {
    let k = kt();
    let f = parse_poly(&k, "(x^2+x+t)^3").unwrap();
    let p = fixture_matrix(&k, "example3_P.json");
    let c = Matrix::companion(&k, &f).unwrap();
    let m = p.inverse(&k).unwrap().mul(&k, &c).unwrap().mul(&k, &p).unwrap();
    assert_eq!(m, fixture_matrix(&k, "example3_M.json"));
    let s = fixture_matrix(&k, "example1_S.json");
    let pt_s_p = p.transpose().mul(&k, &s).unwrap().mul(&k, &p).unwrap();
    assert_eq!(pt_s_p, Matrix::identity(&k, 6));
}

#[test]
fn example3_lifts() {
    let k = kt();
    let lifts: BTreeMap<String, String> = serde_json::from_str(&fixture_text("example3_lifts.json")).unwrap();
    let pi = parse_poly(&k, "x^2+x+t").unwrap();
    let l = ExtensionField::new(k.clone(), pi.clone()).unwrap();
    let a = l.root();
    let gammas = trace_orthonormal_basis(&l).unwrap();
    assert_eq!(gammas, vec![a.clone(), l.add(&a, &l.one())]);

    // Q1 = 1, Q2 = 1 + (X−a)², Q3 = (X−a) + (X−a)², as polynomials over L
    let x_minus_a = Poly::from_coeffs(&l, vec![a.clone(), l.one()]);
    let sq = x_minus_a.mul(&l, &x_minus_a);
    let qs = [Poly::one(&l), sq.add(&l, &Poly::one(&l)), x_minus_a.add(&l, &sq)];
    let local_modulus = sq.mul(&l, &x_minus_a);

    let p = fixture_matrix(&k, "example3_P.json");
    for (j, q) in qs.iter().enumerate() {
        for (i, g) in gammas.iter().enumerate() {
            let lift = parse_poly(&k, &lifts[&format!("P{}{}", i + 1, j + 1)]).unwrap();
            let over_l = lift.map(&l, |c| l.embed(c.clone()));
            let target = q.scale(&l, g);
            let diff = over_l.add(&l, &target);
            assert!(diff.rem(&l, &local_modulus).unwrap().is_zero(), "P{}{}", i + 1, j + 1);
            assert!(lift.degree().unwrap() < 6);
            // column 2j + i of P holds the coordinates of the lift
            for r in 0..6 {
                assert_eq!(*p.get(r, 2 * j + i), lift.coeff(&k, r));
            }
        }
    }
}

#[test]
fn example3_lifts_orthonormal() {
    let k = kt();
    let pi = parse_poly(&k, "x^2+x+t").unwrap();
    let form = sep_power_form(&k, &pi, 3).unwrap();
    let s = gram(&k, &form);
    let p = fixture_matrix(&k, "example3_P.json");
    assert_eq!(p.transpose().mul(&k, &s).unwrap().mul(&k, &p).unwrap(), Matrix::identity(&k, 6));
}
