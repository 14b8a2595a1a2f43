//! Functional-equation input files.
//!
//! ```text
//! # comment
//! m = 3
//! var = x
//! subst y = 1/3
//! +5 * [(1-2x)/((1-x)^3 (1+x))]
//! -34 * [1]
//! ```
//!
//! Header lines may appear anywhere; every other nonblank line is one or
//! more formal-sum terms.

use std::collections::BTreeMap;

use super::expr::{parse_formal_sum, Expr, FormalSum};
use super::{tensor_invariant, TensorElement};
use crate::{Error, Result};

/// Parsed file contents before substitution.
#[derive(Clone, Debug)]
pub struct FeFile {
    pub m: u32,
    pub var: String,
    pub subst: BTreeMap<String, Expr>,
    pub sum: FormalSum,
}

impl FeFile {
    pub fn parse(text: &str) -> Result<FeFile> {
        let mut m = None;
        let mut var = None;
        let mut subst = BTreeMap::new();
        let mut sum = FormalSum::default();
        let mut offset = 0;
        for raw in text.split_inclusive('\n') {
            let line_start = offset;
            offset += raw.len();
            let line = raw.split('#').next().unwrap_or("");
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let lead = line_start + (line.len() - line.trim_start().len());
            let located = |e: Error| match e {
                Error::Parse { pos, msg } => Error::Parse { pos: pos + lead, msg },
                other => other,
            };
            if let Some(rest) = trimmed.strip_prefix("subst ") {
                let (name, value) = rest
                    .split_once('=')
                    .ok_or_else(|| Error::Parse { pos: lead, msg: "expected 'subst <var> = <expr>'".into() })?;
                subst.insert(name.trim().to_string(), Expr::parse(value.trim()).map_err(located)?);
            } else if let Some((key, value)) = trimmed.split_once('=').filter(|(k, _)| !k.contains('[')) {
                match key.trim() {
                    "m" => {
                        let v: u32 = value.trim().parse().map_err(|_| Error::Parse { pos: lead, msg: format!("bad order '{}'", value.trim()) })?;
                        m = Some(v);
                    }
                    "var" => var = Some(value.trim().to_string()),
                    other => return Err(Error::Parse { pos: lead, msg: format!("unknown header '{other}'") }),
                }
            } else {
                let mut part = parse_formal_sum(trimmed).map_err(located)?;
                sum.terms.append(&mut part.terms);
            }
        }
        let m = m.ok_or_else(|| Error::InvalidArgument("missing 'm = 3|4' header".into()))?;
        if !(3..=4).contains(&m) {
            return Err(Error::Unsupported(format!("tensor criterion for m = {m}; only 3 and 4 are supported")));
        }
        Ok(FeFile { m, var: var.unwrap_or_else(|| "x".into()), subst, sum })
    }

    /// The combination after applying the header substitutions.
    pub fn specialized(&self) -> Result<FormalSum> {
        let s = self.sum.substitute(&self.subst)?;
        let free = s.variables();
        if free.iter().any(|v| *v != self.var) {
            return Err(Error::InvalidArgument(format!(
                "free variables {:?} remain; only '{}' may be left after substitution",
                free, self.var
            )));
        }
        Ok(s)
    }
}

/// Result of checking one file.
#[derive(Clone, Debug)]
pub struct FeOutcome {
    pub m: u32,
    pub var: String,
    pub terms: usize,
    pub merged_terms: usize,
    pub tensor: TensorElement,
}

impl FeOutcome {
    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }
}

/// Parse, specialize and compute the tensor invariant of a file's contents.
pub fn check_fe(text: &str) -> Result<FeOutcome> {
    let file = FeFile::parse(text)?;
    let sum = file.specialized()?;
    let merged_terms = sum.merged(&file.var)?.len();
    let tensor = tensor_invariant(&sum, file.m, &file.var)?;
    Ok(FeOutcome { m: file.m, var: file.var, terms: sum.len(), merged_terms, tensor })
}
