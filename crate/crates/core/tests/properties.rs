mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use charsym::forms::{gauss_reduce, GramMatrix};
use charsym::poly::{binom_parity, factor, inseparability_depth};
use charsym::realize::{realize, verify, RealizeOptions, VerifyMode};
use charsym::{BinaryField, Field, Frac, Matrix, Poly, RationalFunctionField, TextField};

fn gf(m: u32) -> BinaryField {
    BinaryField::with_default_modulus(m).unwrap()
}

fn t_poly(bits: u64) -> Poly<BinaryField> {
    let k = BinaryField::gf2();
    Poly::from_coeffs(&k, (0..64).map(|i| (bits >> i) & 1).collect())
}

fn frac(num: u64, den: u64) -> Frac {
    let k = RationalFunctionField::over_gf2();
    k.fraction(t_poly(num), t_poly(den.max(1))).unwrap()
}

fn small_frac() -> impl Strategy<Value = Frac> {
    (0u64..64, 1u64..32).prop_map(|(n, d)| frac(n, d))
}

fn check_axioms<F: Field>(k: &F, x: &F::Elem, y: &F::Elem, z: &F::Elem) {
    assert_eq!(k.add(&k.add(x, y), z), k.add(x, &k.add(y, z)));
    assert_eq!(k.mul(&k.mul(x, y), z), k.mul(x, &k.mul(y, z)));
    assert_eq!(k.mul(x, &k.add(y, z)), k.add(&k.mul(x, y), &k.mul(x, z)));
    assert_eq!(k.mul(x, y), k.mul(y, x));
    assert!(k.is_zero(&k.add(x, x)));
    if !k.is_zero(x) {
        assert_eq!(k.mul(x, &k.inv(x).unwrap()), k.one());
    }
    // Frobenius is additive
    assert_eq!(k.frobenius(&k.add(x, y)), k.add(&k.frobenius(x), &k.frobenius(y)));
    assert_eq!(k.sqrt(&k.frobenius(x)).unwrap(), *x);
}

proptest! {
    #[test]
    fn binary_field_axioms(m in prop::sample::select(vec![1u32, 2, 3, 4, 8]), a: u64, b: u64, c: u64) {
        let k = gf(m);
        let mask = (1u64 << m) - 1;
        check_axioms(&k, &(a & mask), &(b & mask), &(c & mask));
        // every element is a square
        prop_assert_eq!(k.frobenius(&k.sqrt(&(a & mask)).unwrap()), a & mask);
    }

    #[test]
    fn function_field_axioms(x in small_frac(), y in small_frac(), z in small_frac()) {
        let k = RationalFunctionField::over_gf2();
        check_axioms(&k, &x, &y, &z);
        prop_assert_eq!(k.parse(&k.render(&x)).unwrap(), x);
    }

    #[test]
    fn squares_in_function_field(x in small_frac()) {
        let k = RationalFunctionField::over_gf2();
        let t = k.t();
        prop_assert!(k.is_square(&k.frobenius(&x)));
        if !k.is_zero(&x) {
            // x²·t is never a square
            prop_assert!(!k.is_square(&k.mul(&k.frobenius(&x), &t)));
        }
    }

    #[test]
    fn divrem_identity(a in prop::collection::vec(0u64..4, 0..12), b in prop::collection::vec(0u64..4, 1..8)) {
        let k = gf(2);
        let a = Poly::from_coeffs(&k, a);
        let b = Poly::from_coeffs(&k, b);
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&k, &b).unwrap();
        prop_assert_eq!(q.mul(&k, &b).add(&k, &r), a);
        prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
    }

    #[test]
    fn depth_reconstruction(bits in 0u64..16, n in 0u32..3) {
        // π = x^2 + x + c is separable for every c; inflate by 2^n
        let k = RationalFunctionField::over_gf2();
        let c = k.from_poly(t_poly(bits | 2));
        let pi = Poly::from_coeffs(&k, vec![c, k.one(), k.one()]);
        let rho = pi.inflate(&k, 1 << n);
        let (core, depth) = inseparability_depth(&k, &rho).unwrap();
        prop_assert_eq!(core, pi);
        prop_assert_eq!(depth, n);
    }

    #[test]
    fn gauss_on_gram_of_invertible(n in 1usize..7, seed: u64) {
        let k = gf(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..8)).collect()).collect();
        let a = Matrix::from_rows(rows).unwrap();
        prop_assume!(a.rank(&k) == n);
        let s = a.transpose().mul(&k, &a).unwrap();
        let red = gauss_reduce(&k, &GramMatrix::new(s.clone()).unwrap()).unwrap();
        prop_assert_eq!(red.rank, n);
        prop_assert_eq!(red.u.transpose().mul(&k, &red.u).unwrap(), s.clone());
        prop_assert_eq!(red.q.mul(&k, &red.p).unwrap(), Matrix::identity(&k, n));
        let pt_s_p = red.p.transpose().mul(&k, &s).unwrap().mul(&k, &red.p).unwrap();
        prop_assert_eq!(pt_s_p, Matrix::identity(&k, n));
    }

    #[test]
    fn binom_parity_matches_factorials(i in 0u64..40, j in 0u64..40) {
        prop_assume!(j <= i);
        let mut c: u128 = 1;
        for r in 0..j {
            c = c * u128::from(i - r) / u128::from(r + 1);
        }
        prop_assert_eq!(binom_parity(i, j), c % 2 == 1);
    }

    #[test]
    fn min_poly_divides_char_poly(n in 1usize..7, entries in prop::collection::vec(small_frac(), 36)) {
        let k = RationalFunctionField::over_gf2();
        let rows = (0..n).map(|i| entries[i * 6..i * 6 + n].to_vec()).collect();
        let m = Matrix::<RationalFunctionField>::from_rows(rows).unwrap();
        let mu = m.min_poly(&k).unwrap();
        let chi = m.char_poly(&k).unwrap();
        prop_assert!(mu.divides(&k, &chi).unwrap());
        prop_assert!(m.eval_poly(&k, &mu).unwrap().is_zero(&k));
        prop_assert_eq!(chi.degree(), Some(n));
    }

    #[test]
    fn realizations_are_cyclic_and_symmetric(coeffs in prop::collection::vec(0u64..4, 1..7)) {
        let k = gf(2);
        let mut c = coeffs;
        c.push(1);
        let f = Poly::from_coeffs(&k, c);
        let fd = factor(&k, &f).unwrap();
        let r = realize(&k, &f, &fd, RealizeOptions::default()).unwrap();
        prop_assert!(verify(&k, &r.m, &f, VerifyMode::MinPoly).passed);
        prop_assert!(verify(&k, &r.m, &f, VerifyMode::CharPoly).passed);
        let paired = realize(&k, &f, &fd, RealizeOptions { per_block: true, square_even_block: true }).unwrap();
        prop_assert!(paired.certificate.passed());
    }
}
