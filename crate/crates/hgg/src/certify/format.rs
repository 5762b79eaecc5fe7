//! Certificate file format: UTF-8 text, whitespace-insensitive outside
//! tokens.
//!
//! ```text
//! label: C-59
//! alpha: 0,0,1/12,5/12,7/12,11/12
//! beta: 1/3,2/3,1/4,3/4,1/4,3/4
//! convention: xy-xinv-yinv
//! X:
//! -3 0 0 0 0 0
//! …                                (n² row-major rationals)
//! begin program
//! let w1 = comm(a, b);
//! …
//! return c, w3^180 w5
//! end program
//! expect q1:
//! …                                (n² row-major rationals)
//! expect q2:
//! …
//! ```
//!
//! `label`, `alpha`, `beta`, `convention` and the program block are required;
//! `X:` and the two `expect` blocks are optional. Lines starting with `#` are
//! ignored.

use std::fs;
use std::path::Path;

use num_rational::BigRational;

use super::Certificate;
use crate::cyclotomic::ParameterVector;
use crate::exactmat::{parse_program, CommutatorConvention, RationalMatrix};
use crate::{Error, Result};

/// Serializes a certificate to its textual form.
pub fn certificate_to_string(cert: &Certificate) -> String {
    let mut out = String::new();
    out.push_str(&format!("label: {}\n", cert.label));
    out.push_str(&format!("alpha: {}\n", cert.alpha));
    out.push_str(&format!("beta: {}\n", cert.beta));
    out.push_str(&format!("convention: {}\n", cert.convention));
    if let Some(x) = &cert.basis {
        out.push_str("X:\n");
        push_matrix(&mut out, x);
    }
    out.push_str("begin program\n");
    out.push_str(&cert.program.to_string());
    out.push_str("\nend program\n");
    if let Some(m) = &cert.expected_q1 {
        out.push_str("expect q1:\n");
        push_matrix(&mut out, m);
    }
    if let Some(m) = &cert.expected_q2 {
        out.push_str("expect q2:\n");
        push_matrix(&mut out, m);
    }
    out
}

fn push_matrix(out: &mut String, m: &RationalMatrix) {
    for i in 0..m.dim() {
        let row: Vec<String> = m.row(i).iter().map(|e| e.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

struct Lines<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn current_number(&self) -> usize {
        self.pos + 1
    }

    fn next_meaningful(&mut self) -> Option<(usize, &'a str)> {
        while self.pos < self.lines.len() {
            let line = self.lines[self.pos].trim();
            let number = self.current_number();
            self.pos += 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((number, line));
        }
        None
    }
}

/// Reads `n*n` whitespace-separated rationals starting at the current line.
fn parse_matrix_block(lines: &mut Lines<'_>, n: usize, what: &str) -> Result<RationalMatrix> {
    let mut values: Vec<BigRational> = Vec::with_capacity(n * n);
    while values.len() < n * n {
        let Some((number, line)) = lines.next_meaningful() else {
            return Err(Error::parse(
                lines.current_number(),
                1,
                format!("unexpected end of file inside {what} block"),
            ));
        };
        for (col, token) in line.split_whitespace().enumerate() {
            let value: BigRational = token.parse().map_err(|_| {
                Error::parse(number, col + 1, format!("bad rational `{token}` in {what} block"))
            })?;
            values.push(value);
            if values.len() > n * n {
                return Err(Error::parse(
                    number,
                    col + 1,
                    format!("too many entries in {what} block (expected {})", n * n),
                ));
            }
        }
    }
    let rows = values
        .chunks(n)
        .map(|chunk| chunk.to_vec())
        .collect::<Vec<_>>();
    RationalMatrix::from_rows(rows)
}

/// Parses a certificate from its textual form.
pub fn certificate_from_str(src: &str) -> Result<Certificate> {
    let mut lines = Lines {
        lines: src.lines().collect(),
        pos: 0,
    };
    let mut label: Option<String> = None;
    let mut alpha: Option<ParameterVector> = None;
    let mut beta: Option<ParameterVector> = None;
    let mut convention: Option<CommutatorConvention> = None;
    let mut basis: Option<RationalMatrix> = None;
    let mut program = None;
    let mut expected_q1 = None;
    let mut expected_q2 = None;

    let dim = |alpha: &Option<ParameterVector>, number: usize| -> Result<usize> {
        alpha
            .as_ref()
            .map(ParameterVector::degree)
            .ok_or_else(|| Error::parse(number, 1, "matrix block before `alpha:` header"))
    };

    while let Some((number, line)) = lines.next_meaningful() {
        if let Some(rest) = line.strip_prefix("label:") {
            label = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("alpha:") {
            alpha = Some(rest.trim().parse().map_err(|e| relocate(e, number))?);
        } else if let Some(rest) = line.strip_prefix("beta:") {
            beta = Some(rest.trim().parse().map_err(|e| relocate(e, number))?);
        } else if let Some(rest) = line.strip_prefix("convention:") {
            convention = Some(rest.trim().parse().map_err(|e| relocate(e, number))?);
        } else if line == "X:" {
            let n = dim(&alpha, number)?;
            basis = Some(parse_matrix_block(&mut lines, n, "X")?);
        } else if line == "begin program" {
            let mut body = String::new();
            let start = lines.current_number();
            loop {
                let Some((_, inner)) = lines.next_meaningful() else {
                    return Err(Error::parse(start, 1, "missing `end program`"));
                };
                if inner == "end program" {
                    break;
                }
                body.push_str(inner);
                body.push('\n');
            }
            let parsed = parse_program(&body).map_err(|e| relocate_into_block(e, start))?;
            program = Some(parsed);
        } else if let Some(rest) = line.strip_prefix("expect q1:") {
            let n = dim(&alpha, number)?;
            expect_empty_rest(rest, number)?;
            expected_q1 = Some(parse_matrix_block(&mut lines, n, "expect q1")?);
        } else if let Some(rest) = line.strip_prefix("expect q2:") {
            let n = dim(&alpha, number)?;
            expect_empty_rest(rest, number)?;
            expected_q2 = Some(parse_matrix_block(&mut lines, n, "expect q2")?);
        } else {
            return Err(Error::parse(number, 1, format!("unrecognized line `{line}`")));
        }
    }

    fn missing(name: &str) -> Error {
        Error::parse(1, 1, format!("missing required `{name}` header"))
    }
    let label = label.ok_or_else(|| missing("label:"))?;
    let alpha = alpha.ok_or_else(|| missing("alpha:"))?;
    let beta = beta.ok_or_else(|| missing("beta:"))?;
    let convention = convention.ok_or_else(|| missing("convention:"))?;
    let program =
        program.ok_or_else(|| Error::parse(1, 1, "missing program block"))?;
    if program.returns.len() != 2 {
        return Err(Error::parse(
            1,
            1,
            "certificate program must return exactly two expressions",
        ));
    }
    // every referenced name must be a base atom or a prior binding
    let mut defined: Vec<String> = vec!["a".into(), "b".into(), "c".into(), "q1".into()];
    for (name, expr) in &program.bindings {
        let mut used = Vec::new();
        expr.referenced_names(&mut used);
        for u in used {
            if !defined.contains(&u) {
                return Err(Error::parse(1, 1, format!("undefined name `{u}` in program")));
            }
        }
        defined.push(name.clone());
    }
    for r in &program.returns {
        let mut used = Vec::new();
        r.referenced_names(&mut used);
        for u in used {
            if !defined.contains(&u) {
                return Err(Error::parse(1, 1, format!("undefined name `{u}` in program")));
            }
        }
    }

    Ok(Certificate {
        label,
        alpha,
        beta,
        basis,
        convention,
        program,
        expected_q1,
        expected_q2,
    })
}

fn expect_empty_rest(rest: &str, number: usize) -> Result<()> {
    if rest.trim().is_empty() {
        Ok(())
    } else {
        Err(Error::parse(
            number,
            1,
            "matrix entries must start on the following line",
        ))
    }
}

fn relocate(e: Error, line: usize) -> Error {
    match e {
        Error::Parse {
            column, message, ..
        } => Error::Parse {
            line,
            column,
            message,
        },
        other => other,
    }
}

fn relocate_into_block(e: Error, block_start: usize) -> Error {
    match e {
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line: block_start + line,
            column,
            message,
        },
        other => other,
    }
}

/// Saves a certificate to a file.
pub fn save_certificate(cert: &Certificate, path: &Path) -> Result<()> {
    fs::write(path, certificate_to_string(cert)).map_err(|e| Error::io(path, e))
}

/// Loads a certificate from a file.
pub fn load_certificate(path: &Path) -> Result<Certificate> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    certificate_from_str(&text)
}
