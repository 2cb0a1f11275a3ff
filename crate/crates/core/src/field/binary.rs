use crate::error::{Error, Result};
use crate::field::{Field, TextField};

/// Default moduli for GF(2^m), 1 ≤ m ≤ 16: the smallest irreducible
/// trinomial, or pentanomial when no trinomial exists. Entry `m - 1`.
pub const DEFAULT_MODULI: [u64; 16] = [
    0x3, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b, 0x203, 0x409, 0x805, 0x1009, 0x201b, 0x4021,
    0x8003, 0x1002b,
];

const MAX_DEGREE: u32 = 63;

/// GF(2^m) = GF(2)\[g\]/(modulus). Elements are bit masks below `2^m`, bit `i`
/// holding the coefficient of `g^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryField {
    degree: u32,
    modulus: u64,
}

impl BinaryField {
    /// Builds GF(2^m) from an explicit modulus, rejecting reducible ones.
    pub fn new(degree: u32, modulus: u64) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(degree));
        }
        if bit_degree(modulus) != Some(degree) {
            return Err(Error::ReducibleModulus(modulus));
        }
        let irreducible = if degree <= 16 {
            irreducible_by_trial_division(modulus)
        } else {
            irreducible_ben_or(modulus)
        };
        if !irreducible {
            return Err(Error::ReducibleModulus(modulus));
        }
        Ok(Self { degree, modulus })
    }

    pub fn with_default_modulus(degree: u32) -> Result<Self> {
        match degree {
            1..=16 => Self::new(degree, DEFAULT_MODULI[degree as usize - 1]),
            _ => Err(Error::UnsupportedDegree(degree)),
        }
    }

    pub fn gf2() -> Self {
        Self {
            degree: 1,
            modulus: 0x3,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        1u64 << self.degree
    }

    fn mask(&self) -> u64 {
        if self.degree == 64 {
            u64::MAX
        } else {
            (1u64 << self.degree) - 1
        }
    }
}

fn bit_degree(p: u64) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(63 - p.leading_zeros())
    }
}

/// a·b mod m over GF(2), with deg a, deg b < deg m ≤ 63.
fn mulmod(mut a: u64, mut b: u64, m: u64) -> u64 {
    let d = bit_degree(m).unwrap_or(0);
    let top = 1u64 << d;
    let mut acc = 0u64;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & top != 0 {
            a ^= m;
        }
    }
    acc
}

fn rem(mut a: u64, m: u64) -> u64 {
    let dm = bit_degree(m).expect("nonzero modulus");
    while let Some(da) = bit_degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = rem(a, b);
        a = b;
        b = r;
    }
    a
}

fn irreducible_by_trial_division(p: u64) -> bool {
    let d = bit_degree(p).unwrap_or(0);
    if d == 0 {
        return false;
    }
    // every candidate divisor of degree 1..=d/2
    let limit = 1u64 << (d / 2 + 1);
    (2..limit).all(|q| rem(p, q) != 0)
}

/// Ben-Or: p of degree d is irreducible iff gcd(x^(2^i) - x, p) = 1 for i ≤ d/2.
fn irreducible_ben_or(p: u64) -> bool {
    let d = bit_degree(p).unwrap_or(0);
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = 0b10u64;
    let mut power = x;
    for _ in 0..d / 2 {
        power = mulmod(power, power, p);
        if gcd(p, power ^ x) != 1 {
            return false;
        }
    }
    true
}

impl Field for BinaryField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }

    fn add(&self, x: &u64, y: &u64) -> u64 {
        x ^ y
    }

    fn mul(&self, x: &u64, y: &u64) -> u64 {
        if self.degree == 1 {
            return x & y;
        }
        mulmod(*x, *y, self.modulus)
    }

    fn inv(&self, x: &u64) -> Result<u64> {
        if *x == 0 {
            return Err(Error::DivisionByZero);
        }
        // x^(2^m - 2)
        Ok(self.pow(x, self.order() - 2))
    }

    fn is_square(&self, _x: &u64) -> bool {
        true
    }

    fn sqrt(&self, x: &u64) -> Result<u64> {
        // x^(2^(m-1))
        let mut r = *x;
        for _ in 1..self.degree {
            r = self.frobenius(&r);
        }
        Ok(r)
    }

    fn finite_degree(&self) -> Option<u32> {
        Some(self.degree)
    }

    fn element(&self, index: u64) -> Option<u64> {
        (index <= self.mask()).then_some(index)
    }
}

impl TextField for BinaryField {
    fn render(&self, x: &u64) -> String {
        x.to_string()
    }

    fn literal(&self, value: u64) -> Result<u64> {
        if value > self.mask() {
            return Err(Error::Parse(format!(
                "literal {value} is outside GF(2^{})",
                self.degree
            )));
        }
        Ok(value)
    }

    fn generator(&self) -> Option<u64> {
        None
    }

    fn descriptor(&self) -> String {
        if self.degree == 1 {
            "gf2".to_string()
        } else {
            format!("gf(2^{}):{:b}", self.degree, self.modulus)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli_are_irreducible() {
        for m in 1..=16 {
            let f = BinaryField::with_default_modulus(m).unwrap();
            assert!(irreducible_ben_or(f.modulus()), "m = {m}");
        }
    }

    #[test]
    fn trial_division_and_ben_or_agree() {
        for p in 2u64..(1 << 11) {
            assert_eq!(
                irreducible_by_trial_division(p),
                irreducible_ben_or(p),
                "p = {p:#b}"
            );
        }
    }

    #[test]
    fn rejects_reducible_modulus() {
        assert_eq!(BinaryField::new(2, 0b101), Err(Error::ReducibleModulus(0b101)));
        assert!(BinaryField::new(3, 0b111).is_err());
    }

    #[test]
    fn gf4_examples() {
        let k = BinaryField::with_default_modulus(2).unwrap();
        assert_eq!(k.add(&0b10, &0b11), 0b01);
        assert_eq!(k.mul(&0b10, &0b10), 0b11);
        assert_eq!(k.frobenius(&0b10), 0b11);
        assert_eq!(k.mul(&0b10, &k.inv(&0b10).unwrap()), 1);
    }

    #[test]
    fn gf8_sqrt_is_fourth_power() {
        let k = BinaryField::with_default_modulus(3).unwrap();
        for x in 0..8u64 {
            let r = k.sqrt(&x).unwrap();
            assert_eq!(r, k.pow(&x, 4));
            assert_eq!(k.mul(&r, &r), x);
        }
    }

    #[test]
    fn large_degree_field() {
        let k = BinaryField::new(31, (1 << 31) | (1 << 3) | 1).unwrap();
        let x = 0x1234_5678u64;
        assert_eq!(k.mul(&x, &k.inv(&x).unwrap()), 1);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(BinaryField::gf2().inv(&0), Err(Error::DivisionByZero));
    }
}
