use std::path::Path;

use anyhow::{anyhow, Context};
use serde_json::json;

use charsym::forms::{gauss_reduce, GramMatrix};
use charsym::json::{form_to_json, matrix_to_json, parse_matrix, poly_to_string, realization_to_json, verify_to_json};
use charsym::parse::{parse_factored, parse_poly};
use charsym::poly::{factor_with_seed, validate_factored_input, FactorDecomposition, DEFAULT_SEED};
use charsym::realize::{
    decide_with_witness, realize, realize_eigen, verify, Decision, Realization, RealizeOptions, VerifyMode,
    Witness,
};
use charsym::transfer::{
    even_form, gram, insep_local_form, insep_power_form, point_form, sep_local_form, sep_power_form,
    square_block_form, TransferForm,
};
use charsym::{Error, Poly, TextField};

use crate::{Build, Command, FormKind, Mode, Target};

pub enum Failure {
    /// Exit 2, with the regular report.
    NotRealizable(String),
    /// Exit 4, with the regular report.
    Rejected(String),
    /// Exit 3.
    Parse(anyhow::Error),
    /// Exit 4.
    Invalid(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Parse(anyhow!(e)),
            _ => Failure::Invalid(anyhow!(e)),
        }
    }
}

fn parse_err(e: Error, what: &str) -> Failure {
    match e {
        Error::Parse(_) => Failure::Parse(anyhow!(e).context(format!("in {what}"))),
        other => Failure::Invalid(anyhow!(other).context(format!("in {what}"))),
    }
}

fn read_matrix<F: TextField>(k: &F, path: &Path) -> Result<charsym::Matrix<F>, Failure> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::Parse)?;
    parse_matrix(k, &text).map_err(|e| parse_err(e, &path.display().to_string()))
}

fn decomposition<F: TextField>(k: &F, target: &Target) -> Result<(Poly<F>, FactorDecomposition<F>), Failure> {
    let f = parse_poly(k, &target.poly).map_err(|e| parse_err(e, "--poly"))?;
    let fd = match &target.factors {
        Some(text) => {
            let claim = parse_factored(k, text).map_err(|e| parse_err(e, "--factors"))?;
            validate_factored_input(k, &f, &claim)?
        }
        None if k.finite_degree().is_some() => factor_with_seed(k, &f, target.seed.unwrap_or(DEFAULT_SEED))?,
        None => {
            return Err(Failure::Parse(anyhow!(
                "--factors is required over the function field {}",
                k.descriptor()
            )))
        }
    };
    Ok((f, fd))
}

fn witness_text<F: TextField>(k: &F, fd: &FactorDecomposition<F>, w: Witness) -> String {
    let name = |i: usize| poly_to_string(k, &fd.entries[i].irreducible(k));
    match w {
        Witness::SeparableFactor(i) => format!("factor {} is separable", name(i)),
        Witness::RepeatedInseparableFactor(i) => format!(
            "inseparable factor {} has multiplicity {}",
            name(i),
            fd.entries[i].multiplicity
        ),
        Witness::DistinctInseparableFactors => {
            "product of pairwise distinct inseparable irreducibles".to_string()
        }
    }
}

fn options(build: &Build) -> RealizeOptions {
    RealizeOptions {
        per_block: build.per_block,
        square_even_block: build.square_even_block,
    }
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("serializable")
}

fn render_realization<F: TextField>(k: &F, r: &Realization<F>, as_json: bool) -> String {
    if as_json {
        return serde_json::to_string_pretty(&realization_to_json(k, r)).expect("serializable");
    }
    let c = &r.certificate;
    let mut out = format!(
        "field: {}\nf: {}\ncase: {}\nblocks: {}\n",
        k.descriptor(),
        poly_to_string(k, &r.f),
        r.plan.case.as_str(),
        r.form
            .blocks
            .iter()
            .map(|b| format!("{} ({})", poly_to_string(k, &b.modulus), b.claim.as_str()))
            .collect::<Vec<_>>()
            .join(", ")
    );
    if r.size_n_impossible {
        out += &format!(
            "note: no symmetric matrix of size {} has this eigenvalue; size {} with minimal polynomial {}\n",
            r.f.degree().unwrap_or(0),
            r.m.rows(),
            poly_to_string(k, &r.target)
        );
    }
    out += &format!("M =\n{}\n", r.m.pretty(k));
    out += &format!(
        "certificate: symmetric={} min_poly={} char_poly={} gram={}",
        c.symmetric, c.min_poly_ok, c.char_poly_ok, c.gram_ok
    );
    out
}

fn gram_form<F: TextField>(
    k: &F,
    form: FormKind,
    poly: Option<&str>,
    param: Option<&str>,
    m: u32,
    n: u32,
) -> Result<TransferForm<F>, Failure> {
    let need_poly = || -> Result<Poly<F>, Failure> {
        let text = poly.ok_or_else(|| Failure::Parse(anyhow!("--poly is required for this form")))?;
        parse_poly(k, text).map_err(|e| parse_err(e, "--poly"))
    };
    let need_param = || -> Result<F::Elem, Failure> {
        let text = param.ok_or_else(|| Failure::Parse(anyhow!("--param is required for this form")))?;
        k.parse(text).map_err(|e| parse_err(e, "--param"))
    };
    Ok(match form {
        FormKind::SepPower => sep_power_form(k, &need_poly()?, m)?,
        FormKind::InsepPower => insep_power_form(k, &need_poly()?, n, m)?,
        FormKind::SepLocal => sep_local_form(k, need_param()?, m)?,
        FormKind::InsepLocal => insep_local_form(k, need_param()?, n, m)?,
        FormKind::Even => even_form(k, &need_poly()?)?,
        FormKind::Square => square_block_form(k, &need_poly()?)?,
        FormKind::Point => point_form(k),
    })
}

pub fn run<F: TextField>(k: &F, command: &Command) -> Result<String, Failure> {
    match command {
        Command::Check { common, target } => {
            let (f, fd) = decomposition(k, target)?;
            let (decision, w) = decide_with_witness(&fd);
            let label = match decision {
                Decision::Realizable => "Realizable",
                Decision::NotRealizable => "NotRealizable",
            };
            let witness = witness_text(k, &fd, w);
            let out = if common.json {
                pretty(json!({
                    "field": k.descriptor(),
                    "f": poly_to_string(k, &f),
                    "decision": label,
                    "witness": witness,
                }))
            } else {
                format!("{label}: {witness}")
            };
            match decision {
                Decision::Realizable => Ok(out),
                Decision::NotRealizable => Err(Failure::NotRealizable(out)),
            }
        }
        Command::Realize { common, target, build } | Command::Eigen { common, target, build } => {
            let (f, fd) = decomposition(k, target)?;
            let result = if matches!(command, Command::Realize { .. }) {
                realize(k, &f, &fd, options(build))
            } else {
                realize_eigen(k, &f, &fd, options(build))
            };
            match result {
                Ok(r) => Ok(render_realization(k, &r, common.json)),
                Err(Error::NotRealizable) => {
                    let w = witness_text(k, &fd, decide_with_witness(&fd).1);
                    let out = if common.json {
                        pretty(json!({"f": poly_to_string(k, &f), "decision": "NotRealizable", "witness": w}))
                    } else {
                        format!("NotRealizable: {w}")
                    };
                    Err(Failure::NotRealizable(out))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify { common, poly, matrix, mode } => {
            let f = parse_poly(k, poly).map_err(|e| parse_err(e, "--poly"))?;
            let m = read_matrix(k, matrix)?;
            let mode = match mode {
                Mode::MinPoly => VerifyMode::MinPoly,
                Mode::CharPoly => VerifyMode::CharPoly,
                Mode::Eigen => VerifyMode::Eigen,
            };
            let rep = verify(k, &m, &f, mode);
            let out = if common.json {
                serde_json::to_string_pretty(&verify_to_json(k, &rep)).expect("serializable")
            } else {
                let show = |p: &Option<Poly<F>>| p.as_ref().map_or("-".to_string(), |p| poly_to_string(k, p));
                format!(
                    "{}\nsymmetric: {}\nminimal polynomial: {}\ncharacteristic polynomial: {}",
                    if rep.passed { "pass" } else { "fail" },
                    rep.symmetric,
                    show(&rep.min_poly),
                    show(&rep.char_poly)
                )
            };
            if rep.passed {
                Ok(out)
            } else {
                Err(Failure::Rejected(out))
            }
        }
        Command::Gram { common, form, poly, param, mult, depth } => {
            let form = gram_form(k, *form, poly.as_deref(), param.as_deref(), *mult, *depth)?;
            let g = gram(k, &form);
            Ok(if common.json {
                pretty(json!({"form": form_to_json(k, &form), "gram": matrix_to_json(k, &g)}))
            } else {
                let blocks = form
                    .blocks
                    .iter()
                    .map(|b| {
                        format!(
                            "{} ({}): {}",
                            poly_to_string(k, &b.modulus),
                            b.claim.as_str(),
                            b.values.iter().map(|v| k.render(v)).collect::<Vec<_>>().join(", ")
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n");
                format!("{blocks}\nS =\n{}", g.pretty(k))
            })
        }
        Command::Reduce { common, matrix } => {
            let s = read_matrix(k, matrix)?;
            let red = gauss_reduce(k, &GramMatrix::new(s)?)?;
            Ok(if common.json {
                pretty(json!({
                    "rank": red.rank,
                    "U": matrix_to_json(k, &red.u),
                    "Q": matrix_to_json(k, &red.q),
                    "P": matrix_to_json(k, &red.p),
                }))
            } else {
                format!(
                    "rank: {}\nU =\n{}\nQ =\n{}\nP =\n{}",
                    red.rank,
                    red.u.pretty(k),
                    red.q.pretty(k),
                    red.p.pretty(k)
                )
            })
        }
    }
}
