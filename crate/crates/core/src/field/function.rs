use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{BinaryField, Field, TextField};
use crate::poly::Poly;

/// The rational function field GF(2^m)(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunctionField {
    base: BinaryField,
}

/// A reduced fraction num/den of polynomials in t. The denominator is monic
/// and coprime to the numerator; zero is 0/1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Frac {
    num: Poly<BinaryField>,
    den: Poly<BinaryField>,
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        self.num
            .cmp(&other.num)
            .then_with(|| self.den.cmp(&other.den))
    }
}

impl Frac {
    pub fn numerator(&self) -> &Poly<BinaryField> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<BinaryField> {
        &self.den
    }
}

impl RationalFunctionField {
    pub fn new(base: BinaryField) -> Self {
        Self { base }
    }

    /// GF(2)(t).
    pub fn over_gf2() -> Self {
        Self::new(BinaryField::gf2())
    }

    pub fn base(&self) -> &BinaryField {
        &self.base
    }

    /// The indeterminate t.
    pub fn t(&self) -> Frac {
        Frac {
            num: Poly::x(&self.base),
            den: Poly::one(&self.base),
        }
    }

    pub fn from_poly(&self, num: Poly<BinaryField>) -> Frac {
        Frac {
            num,
            den: Poly::one(&self.base),
        }
    }

    /// Reduces num/den to canonical form.
    pub fn fraction(&self, num: Poly<BinaryField>, den: Poly<BinaryField>) -> Result<Frac> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.normalize(num, den))
    }

    fn normalize(&self, num: Poly<BinaryField>, den: Poly<BinaryField>) -> Frac {
        let k = &self.base;
        if num.is_zero() {
            return Frac {
                num,
                den: Poly::one(k),
            };
        }
        let g = Poly::gcd(k, &num, &den);
        let (mut num, mut den) = if g.is_one(k) {
            (num, den)
        } else {
            (
                num.div_exact(k, &g).expect("gcd divides"),
                den.div_exact(k, &g).expect("gcd divides"),
            )
        };
        let lead = *den.leading().expect("nonzero denominator");
        if lead != 1 {
            let inv = k.inv(&lead).expect("nonzero");
            num = num.scale(k, &inv);
            den = den.scale(k, &inv);
        }
        Frac { num, den }
    }

    fn render_t_poly(&self, p: &Poly<BinaryField>) -> String {
        p.render(&self.base, "t")
    }
}

impl Field for RationalFunctionField {
    type Elem = Frac;

    fn zero(&self) -> Frac {
        Frac {
            num: Poly::zero(),
            den: Poly::one(&self.base),
        }
    }

    fn one(&self) -> Frac {
        Frac {
            num: Poly::one(&self.base),
            den: Poly::one(&self.base),
        }
    }

    fn is_zero(&self, x: &Frac) -> bool {
        x.num.is_zero()
    }

    fn add(&self, x: &Frac, y: &Frac) -> Frac {
        let k = &self.base;
        if x.num.is_zero() {
            return y.clone();
        }
        if y.num.is_zero() {
            return x.clone();
        }
        if x.den == y.den {
            return self.normalize(x.num.add(k, &y.num), x.den.clone());
        }
        let g = Poly::gcd(k, &x.den, &y.den);
        let xd = x.den.div_exact(k, &g).expect("gcd divides");
        let yd = y.den.div_exact(k, &g).expect("gcd divides");
        let num = x.num.mul(k, &yd).add(k, &y.num.mul(k, &xd));
        let den = x.den.mul(k, &yd);
        self.normalize(num, den)
    }

    fn mul(&self, x: &Frac, y: &Frac) -> Frac {
        let k = &self.base;
        if x.num.is_zero() || y.num.is_zero() {
            return self.zero();
        }
        let g1 = Poly::gcd(k, &x.num, &y.den);
        let g2 = Poly::gcd(k, &y.num, &x.den);
        let a = x.num.div_exact(k, &g1).expect("gcd divides");
        let d = y.den.div_exact(k, &g1).expect("gcd divides");
        let c = y.num.div_exact(k, &g2).expect("gcd divides");
        let b = x.den.div_exact(k, &g2).expect("gcd divides");
        let num = a.mul(k, &c);
        let den = b.mul(k, &d);
        // already coprime; only the leading coefficient may need fixing
        let lead = *den.leading().expect("nonzero");
        if lead == 1 {
            Frac { num, den }
        } else {
            let inv = k.inv(&lead).expect("nonzero");
            Frac {
                num: num.scale(k, &inv),
                den: den.scale(k, &inv),
            }
        }
    }

    fn inv(&self, x: &Frac) -> Result<Frac> {
        if x.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.normalize(x.den.clone(), x.num.clone()))
    }

    fn frobenius(&self, x: &Frac) -> Frac {
        let k = &self.base;
        // squares of coprime polynomials stay coprime, monic stays monic
        Frac {
            num: x.num.square(k),
            den: x.den.square(k),
        }
    }

    /// num/den is a square iff both lie in k[t²] (the base is perfect).
    fn is_square(&self, x: &Frac) -> bool {
        let k = &self.base;
        x.num.in_k_of_x2(k) && x.den.in_k_of_x2(k)
    }

    fn sqrt(&self, x: &Frac) -> Result<Frac> {
        let k = &self.base;
        if !self.is_square(x) {
            return Err(Error::NotASquare);
        }
        let num = x.num.sqrt(k).map_err(|_| Error::NotASquare)?;
        let den = x.den.sqrt(k).map_err(|_| Error::NotASquare)?;
        Ok(Frac { num, den })
    }

    fn finite_degree(&self) -> Option<u32> {
        None
    }

    fn element(&self, _index: u64) -> Option<Frac> {
        None
    }
}

impl TextField for RationalFunctionField {
    fn render(&self, x: &Frac) -> String {
        let num = self.render_t_poly(&x.num);
        if x.den.is_one(&self.base) {
            return num;
        }
        let num = if num.contains(['+', '*']) {
            format!("({num})")
        } else {
            num
        };
        format!("{num}/({})", self.render_t_poly(&x.den))
    }

    fn literal(&self, value: u64) -> Result<Frac> {
        let c = self.base.literal(value)?;
        Ok(self.from_poly(Poly::constant(&self.base, c)))
    }

    fn generator(&self) -> Option<Frac> {
        Some(self.t())
    }

    fn descriptor(&self) -> String {
        if self.base.degree() == 1 {
            "f2(t)".to_string()
        } else {
            format!("{}(t)", self.base.descriptor())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> RationalFunctionField {
        RationalFunctionField::over_gf2()
    }

    #[test]
    fn add_cancels() {
        let k = k();
        let t = k.parse("t").unwrap();
        let t1 = k.parse("t+1").unwrap();
        assert_eq!(k.add(&t, &t1), k.one());
        assert!(k.is_zero(&k.add(&t, &t)));
    }

    #[test]
    fn inverse_and_cancellation() {
        let k = k();
        let t = k.t();
        let inv = k.inv(&t).unwrap();
        assert_eq!(k.render(&inv), "1/(t)");
        let p = k.parse("t^2+t").unwrap();
        assert_eq!(k.mul(&p, &inv), k.parse("t+1").unwrap());
    }

    #[test]
    fn frobenius_and_sqrt() {
        let k = k();
        let x = k.parse("t+1").unwrap();
        assert_eq!(k.frobenius(&x), k.parse("t^2+1").unwrap());
        assert!(!k.is_square(&k.t()));
        assert_eq!(k.sqrt(&k.t()), Err(Error::NotASquare));
        assert_eq!(k.sqrt(&k.parse("t^2+1").unwrap()).unwrap(), x);
    }

    #[test]
    fn canonical_denominator() {
        let k = k();
        let x = k.parse("(t^2+t)/(t^3+t)").unwrap();
        assert_eq!(k.render(&x), "1/(t+1)");
        let y = k.parse("(t^2+t+1)/t").unwrap();
        assert_eq!(k.render(&y), "(t^2+t+1)/(t)");
    }

    #[test]
    fn over_gf4_render_round_trip() {
        let k = RationalFunctionField::new(BinaryField::with_default_modulus(2).unwrap());
        let x = k.parse("(2*t^2+3)/(3*t+1)").unwrap();
        let text = k.render(&x);
        assert_eq!(k.parse(&text).unwrap(), x);
        assert!(x.denominator().is_monic(k.base()));
    }
}
