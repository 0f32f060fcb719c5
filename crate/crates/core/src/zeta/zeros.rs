//! Tables of nontrivial-zero ordinates t_k (ρ_k = 1/2 + i t_k).

use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;

use super::evaluate::zeta;
use crate::error::{Error, Result};

/// |ζ(1/2 + it)| must fall below this for an ordinate to validate.
pub const VALIDATION_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationFailure {
    pub line: usize,
    pub ordinate: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source: String,
    validated: bool,
    failures: Vec<ValidationFailure>,
}

impl ZeroTable {
    pub fn empty() -> Self {
        Self {
            ordinates: Vec::new(),
            source: "empty".into(),
            validated: true,
            failures: Vec::new(),
        }
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// True only when every ordinate passed the critical-line residual
    /// check; tables loaded without validation report false.
    pub fn validated(&self) -> bool {
        self.validated
    }

    pub fn failures(&self) -> &[ValidationFailure] {
        &self.failures
    }

    /// The first `n` ordinates as a new table with the same status.
    pub fn truncated(&self, n: usize) -> Self {
        let n = n.min(self.len());
        let kept = &self.ordinates[..n];
        Self {
            ordinates: kept.to_vec(),
            source: self.source.clone(),
            validated: self.validated,
            failures: self
                .failures
                .iter()
                .filter(|f| kept.contains(&f.ordinate))
                .cloned()
                .collect(),
        }
    }
}

/// Parses one ordinate per line (blank lines and `#` comments ignored).
pub fn load_zero_table<R: Read>(source: R, description: &str, validate: bool) -> Result<ZeroTable> {
    let reader = BufReader::new(source);
    let mut ordinates = Vec::new();
    let mut lines = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let t: f64 = text.parse().map_err(|_| Error::Format {
            line: lineno,
            message: format!("cannot parse ordinate {text:?}"),
        })?;
        if !t.is_finite() || t <= 0.0 {
            return Err(Error::Format {
                line: lineno,
                message: format!("ordinate {text} must be positive"),
            });
        }
        if ordinates.is_empty() && t <= 14.0 {
            return Err(Error::Format {
                line: lineno,
                message: format!("first ordinate {text} is below the first zero"),
            });
        }
        if let Some(&prev) = ordinates.last() {
            if t <= prev {
                return Err(Error::Format {
                    line: lineno,
                    message: format!("ordinates must be strictly ascending ({text} after {prev})"),
                });
            }
        }
        ordinates.push(t);
        lines.push(lineno);
    }

    let failures = if validate {
        let residuals: Vec<Result<f64>> = ordinates
            .par_iter()
            .map(|&t| Ok(zeta(Complex64::new(0.5, t))?.norm()))
            .collect();
        let mut failures = Vec::new();
        for ((&t, &line), r) in ordinates.iter().zip(&lines).zip(residuals) {
            let r = r?;
            if !(r < VALIDATION_THRESHOLD) {
                failures.push(ValidationFailure {
                    line,
                    ordinate: t,
                    residual: r,
                });
            }
        }
        failures
    } else {
        Vec::new()
    };
    Ok(ZeroTable {
        ordinates,
        source: description.to_string(),
        validated: validate && failures.is_empty(),
        failures,
    })
}

pub fn load_zero_file(path: &Path, validate: bool) -> Result<ZeroTable> {
    let file = std::fs::File::open(path)?;
    load_zero_table(file, &path.display().to_string(), validate)
}
