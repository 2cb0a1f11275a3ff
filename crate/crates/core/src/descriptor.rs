//! Field descriptor strings: `gf2`, `gf(2^m)[:modulus-bits]`, `f2(t)` and
//! `gf(2^m)[:modulus-bits](t)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{BinaryField, RationalFunctionField, TextField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldDescriptor {
    Binary(BinaryField),
    Function(RationalFunctionField),
}

fn parse_binary(text: &str) -> Result<BinaryField> {
    if text == "gf2" || text == "gf(2)" || text == "f2" {
        return Ok(BinaryField::gf2());
    }
    let bad = || Error::Parse(format!("unrecognized field `{text}`"));
    let rest = text.strip_prefix("gf(2^").ok_or_else(bad)?;
    let (deg, rest) = rest.split_once(')').ok_or_else(bad)?;
    let degree: u32 = deg.parse().map_err(|_| bad())?;
    if rest.is_empty() {
        return BinaryField::with_default_modulus(degree);
    }
    let bits = rest.strip_prefix(':').ok_or_else(bad)?;
    let modulus = u64::from_str_radix(bits, 2)
        .map_err(|_| Error::Parse(format!("modulus `{bits}` is not a bit string")))?;
    BinaryField::new(degree, modulus)
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_lowercase();
        match text.strip_suffix("(t)") {
            Some(base) => Ok(FieldDescriptor::Function(RationalFunctionField::new(
                parse_binary(base)?,
            ))),
            None => Ok(FieldDescriptor::Binary(parse_binary(&text)?)),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Binary(k) => f.write_str(&k.descriptor()),
            FieldDescriptor::Function(k) => f.write_str(&k.descriptor()),
        }
    }
}

impl FieldDescriptor {
    pub fn is_function_field(&self) -> bool {
        matches!(self, FieldDescriptor::Function(_))
    }
}
