//! Parsing of matrix, vector and lattice inputs.
//!
//! Matrices come either from a text file (one row per line, whitespace
//! separated integers, `#` comments allowed) or inline as a bracketed
//! literal like `[[1,2],[3,4]]`. A `--matrix` argument starting with `[`
//! is treated as a literal, anything else as a path.

use std::collections::BTreeMap;
use std::fs;

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

use dualkummer::intlin::IntMatrix;
use dualkummer::lattice::BBLattice;

pub fn read_matrix(arg: &str) -> Result<IntMatrix> {
    if arg.trim_start().starts_with('[') {
        parse_matrix_literal(arg)
    } else {
        let text = fs::read_to_string(arg).with_context(|| format!("reading matrix file {arg}"))?;
        parse_matrix_text(&text)
    }
}

pub fn parse_matrix_text(text: &str) -> Result<IntMatrix> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row: Result<Vec<BigInt>, _> = line
            .split_whitespace()
            .map(|tok| tok.parse::<BigInt>())
            .collect();
        rows.push(row.with_context(|| format!("line {}: expected integers", lineno + 1))?);
    }
    IntMatrix::from_rows(rows).map_err(|e| anyhow::anyhow!("invalid matrix: {e}"))
}

pub fn parse_matrix_literal(text: &str) -> Result<IntMatrix> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("[[")
        .and_then(|s| s.strip_suffix("]]"))
        .context("matrix literal must look like [[1,2],[3,4]]")?;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for row in inner.split("],[") {
        if row.is_empty() {
            bail!("matrix literal has an empty row");
        }
        let parsed: Result<Vec<BigInt>, _> = row.split(',').map(str::parse).collect();
        rows.push(parsed.context("matrix literal entries must be integers")?);
    }
    IntMatrix::from_rows(rows).map_err(|e| anyhow::anyhow!("invalid matrix: {e}"))
}

pub fn parse_int_vector(text: &str) -> Result<Vec<BigInt>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<BigInt>()
                .with_context(|| format!("bad vector entry `{tok}`"))
        })
        .collect()
}

/// A lattice together with named reference vectors usable in `--vectors`.
pub struct LatticeInput {
    pub lattice: BBLattice,
    pub names: BTreeMap<String, Vec<BigInt>>,
}

/// Builtin lattices: `kum2` is `U^3 ⊕ ⟨−6⟩` with constant 3 and
/// half-dimension 2, with `h` (isotropic) and `x` (its hyperbolic partner)
/// predefined, plus `e1..e3`/`f1..f3` for the hyperbolic pairs and `g` for
/// the ⟨−6⟩ generator. `u` is a single hyperbolic plane with constant 1.
pub fn builtin_lattice(name: &str, half_dim: Option<usize>) -> Result<LatticeInput> {
    match name {
        "kum2" => {
            let base = BBLattice::kummer_fourfold();
            let lattice = match half_dim {
                None => base,
                Some(n) => BBLattice::new(base.gram().clone(), base.fujiki_constant().clone(), n)
                    .map_err(|e| anyhow::anyhow!("{e}"))?,
            };
            let mut names = BTreeMap::new();
            let unit = |i: usize| {
                let mut v = vec![BigInt::from(0); 7];
                v[i] = BigInt::from(1);
                v
            };
            for k in 0..3 {
                names.insert(format!("e{}", k + 1), unit(2 * k));
                names.insert(format!("f{}", k + 1), unit(2 * k + 1));
            }
            names.insert("g".into(), unit(6));
            names.insert("h".into(), unit(0));
            names.insert("x".into(), unit(1));
            Ok(LatticeInput { lattice, names })
        }
        "u" => {
            let lattice = BBLattice::new(
                BBLattice::hyperbolic_gram(),
                BigRational::from_integer(1.into()),
                half_dim.unwrap_or(1),
            )
            .map_err(|e| anyhow::anyhow!("{e}"))?;
            let mut names = BTreeMap::new();
            names.insert("e".into(), vec![BigInt::from(1), BigInt::from(0)]);
            names.insert("f".into(), vec![BigInt::from(0), BigInt::from(1)]);
            Ok(LatticeInput { lattice, names })
        }
        other => bail!("unknown lattice `{other}` (builtins: kum2, u)"),
    }
}

/// Resolves a `--vectors` list: comma-separated tokens, each either a name
/// defined by the lattice/`--define`, or an inline `:`-separated integer
/// tuple like `1:0:2:0:0:0:0`.
pub fn resolve_vectors(
    spec: &str,
    names: &BTreeMap<String, Vec<BigInt>>,
    rank: usize,
) -> Result<Vec<Vec<BigInt>>> {
    let mut out = Vec::new();
    for tok in spec.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            bail!("empty vector token");
        }
        let v = if let Some(v) = names.get(tok) {
            v.clone()
        } else if tok.contains(':') {
            let parsed: Result<Vec<BigInt>, _> = tok.split(':').map(str::parse).collect();
            parsed.with_context(|| format!("bad inline vector `{tok}`"))?
        } else {
            bail!("unknown vector name `{tok}` (define it with --define {tok}=a,b,…)");
        };
        if v.len() != rank {
            bail!("vector `{tok}` has length {}, lattice rank is {rank}", v.len());
        }
        out.push(v);
    }
    Ok(out)
}

/// Parses one `--define name=1,2,3` argument.
pub fn parse_define(arg: &str) -> Result<(String, Vec<BigInt>)> {
    let (name, rest) = arg
        .split_once('=')
        .context("--define needs the form name=a,b,c")?;
    Ok((name.trim().to_string(), parse_int_vector(rest)?))
}
