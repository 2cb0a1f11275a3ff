//! JSON encodings. Scalars are strings in the field's text syntax, matrices
//! are arrays of rows, polynomials are strings in `x`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::TextField;
use crate::matrix::Matrix;
use crate::parse::parse_poly;
use crate::poly::Poly;
use crate::realize::{Certificate, Realization, VerifyReport};
use crate::transfer::{BlockClaim, FormBlock, TransferForm};

pub type MatrixJson = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub modulus: String,
    pub values: Vec<String>,
    pub claim: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub blocks: Vec<BlockJson>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub symmetric: bool,
    pub min_poly_ok: bool,
    pub char_poly_ok: bool,
    pub gram_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationJson {
    pub field: String,
    pub f: String,
    pub target: String,
    pub case: String,
    pub blocks: Vec<BlockJson>,
    #[serde(rename = "C")]
    pub c: MatrixJson,
    #[serde(rename = "Q")]
    pub q: MatrixJson,
    #[serde(rename = "M")]
    pub m: MatrixJson,
    pub certificate: CertificateJson,
    pub size_n_impossible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub square: bool,
    pub symmetric: bool,
    pub min_poly: Option<String>,
    pub char_poly: Option<String>,
    pub min_poly_ok: bool,
    pub char_poly_ok: bool,
    pub divides_char_poly: bool,
    pub passed: bool,
}

pub fn poly_to_string<F: TextField>(k: &F, p: &Poly<F>) -> String {
    p.render(k, "x")
}

pub fn matrix_to_json<F: TextField>(k: &F, m: &Matrix<F>) -> MatrixJson {
    m.render_rows(k)
}

pub fn matrix_from_json<F: TextField>(k: &F, rows: &MatrixJson) -> Result<Matrix<F>> {
    Matrix::parse_rows(k, rows)
}

pub fn parse_matrix<F: TextField>(k: &F, text: &str) -> Result<Matrix<F>> {
    let rows: MatrixJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
    matrix_from_json(k, &rows)
}

fn block_to_json<F: TextField>(k: &F, b: &FormBlock<F>) -> BlockJson {
    BlockJson {
        modulus: poly_to_string(k, &b.modulus),
        values: b.values.iter().map(|v| k.render(v)).collect(),
        claim: b.claim.as_str().to_string(),
    }
}

pub fn form_to_json<F: TextField>(k: &F, form: &TransferForm<F>) -> FormJson {
    FormJson {
        blocks: form.blocks.iter().map(|b| block_to_json(k, b)).collect(),
    }
}

pub fn form_from_json<F: TextField>(k: &F, json: &FormJson) -> Result<TransferForm<F>> {
    let blocks = json
        .blocks
        .iter()
        .map(|b| {
            let claim = match b.claim.as_str() {
                "unit" => BlockClaim::Unit,
                "hyperbolic" => BlockClaim::Hyperbolic,
                other => return Err(Error::Parse(format!("unknown claim `{other}`"))),
            };
            let modulus = parse_poly(k, &b.modulus)?;
            let values = b.values.iter().map(|v| k.parse(v)).collect::<Result<Vec<_>>>()?;
            if modulus.degree() != Some(values.len()) {
                return Err(Error::DimensionMismatch(format!(
                    "{} values for modulus of degree {:?}",
                    values.len(),
                    modulus.degree()
                )));
            }
            Ok(FormBlock {
                modulus,
                values,
                claim,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TransferForm { blocks })
}

impl From<Certificate> for CertificateJson {
    fn from(c: Certificate) -> Self {
        CertificateJson {
            symmetric: c.symmetric,
            min_poly_ok: c.min_poly_ok,
            char_poly_ok: c.char_poly_ok,
            gram_ok: c.gram_ok,
        }
    }
}

pub fn realization_to_json<F: TextField>(k: &F, r: &Realization<F>) -> RealizationJson {
    RealizationJson {
        field: k.descriptor(),
        f: poly_to_string(k, &r.f),
        target: poly_to_string(k, &r.target),
        case: r.plan.case.as_str().to_string(),
        blocks: form_to_json(k, &r.form).blocks,
        c: matrix_to_json(k, &r.c),
        q: matrix_to_json(k, &r.q),
        m: matrix_to_json(k, &r.m),
        certificate: r.certificate.into(),
        size_n_impossible: r.size_n_impossible,
    }
}

pub fn verify_to_json<F: TextField>(k: &F, rep: &VerifyReport<F>) -> VerifyJson {
    VerifyJson {
        square: rep.square,
        symmetric: rep.symmetric,
        min_poly: rep.min_poly.as_ref().map(|p| poly_to_string(k, p)),
        char_poly: rep.char_poly.as_ref().map(|p| poly_to_string(k, p)),
        min_poly_ok: rep.min_poly_ok,
        char_poly_ok: rep.char_poly_ok,
        divides_char_poly: rep.divides_char_poly,
        passed: rep.passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{BinaryField, RationalFunctionField};
    use crate::transfer::sep_power_form;

    #[test]
    fn form_round_trip() {
        let k = RationalFunctionField::over_gf2();
        let pi = parse_poly(&k, "x^2+x+t").unwrap();
        let form = sep_power_form(&k, &pi, 3).unwrap();
        let json = serde_json::to_string(&form_to_json(&k, &form)).unwrap();
        let back: FormJson = serde_json::from_str(&json).unwrap();
        assert_eq!(form_from_json(&k, &back).unwrap(), form);
    }

    #[test]
    fn matrix_round_trip() {
        let k = RationalFunctionField::over_gf2();
        let m = parse_matrix(&k, r#"[["t", "1/(t^2+1)"], ["0", "t^3+t"]]"#).unwrap();
        let text = serde_json::to_string(&matrix_to_json(&k, &m)).unwrap();
        assert_eq!(parse_matrix(&k, &text).unwrap(), m);
        let g = BinaryField::with_default_modulus(2).unwrap();
        assert!(parse_matrix(&g, r#"[["4"]]"#).is_err());
        assert!(parse_matrix(&g, r#"[["1","2"],["3"]]"#).is_err());
    }
}
