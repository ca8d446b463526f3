//! Text front end: polynomial expressions and the arrangement file format.

use crate::arrangement::{Arrangement, Subspace};
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElement};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingContext;

/// Parses expressions like `x0^2 - 3*x1*x2 + 1/2*x3^4`. Factors may be
/// separated by `*` or juxtaposed; whitespace is free; `a/b` coefficients
/// work over any field (over F_p they mean a * b^{-1}).
pub fn parse_polynomial(ring: RingContext, input: &str) -> Result<Polynomial> {
    parse_polynomial_inner(ring, input).map_err(|message| Error::Parse { line: 1, message })
}

pub(crate) fn parse_polynomial_inner(
    ring: RingContext,
    input: &str,
) -> std::result::Result<Polynomial, String> {
    let mut p = Parser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.at_end() {
        return Err("empty polynomial".to_string());
    }
    let mut acc = Polynomial::zero(ring);
    let mut first = true;
    loop {
        p.skip_ws();
        let mut negate = false;
        match p.peek() {
            Some(b'+') => {
                p.bump();
            }
            Some(b'-') => {
                negate = true;
                p.bump();
            }
            _ if first => {}
            None => break,
            Some(c) => return Err(format!("expected '+' or '-', found '{}'", c as char)),
        }
        first = false;
        let term = p.parse_term(ring)?;
        acc = if negate {
            acc.sub(&term).expect("same ring")
        } else {
            acc.add(&term).expect("same ring")
        };
        p.skip_ws();
        if p.at_end() {
            break;
        }
    }
    Ok(acc)
}

/// Parses the arrangement file format:
///
/// ```text
/// # lines in P^3 over F_32003
/// ring n=3 field=32003
/// subspace: x0; x1
/// subspace: x2; x3
/// ```
///
/// The header names the projective dimension (variables x0..xn) and the
/// field, a prime or `Q`. Each `subspace:` line lists the subspace's
/// defining linear forms separated by `;`. `#` starts a comment, blank
/// lines are skipped, and errors carry 1-based line numbers.
pub fn parse_arrangement(input: &str) -> Result<Arrangement> {
    let mut ring: Option<RingContext> = None;
    let mut subspaces: Vec<Subspace> = vec![];
    let mut last_line = 0;
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fail = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match ring {
            None => {
                ring = Some(parse_ring_header(line).map_err(fail)?);
            }
            Some(r) => {
                let rest = line
                    .strip_prefix("subspace")
                    .and_then(|s| s.trim_start().strip_prefix(':'))
                    .ok_or_else(|| fail("expected a `subspace:` line".to_string()))?;
                let mut forms = vec![];
                for chunk in rest.split(';') {
                    if chunk.trim().is_empty() {
                        return Err(fail("empty form in subspace".to_string()));
                    }
                    forms.push(parse_polynomial_inner(r, chunk).map_err(fail)?);
                }
                let subspace = Subspace::new(r, forms).map_err(|e| fail(e.to_string()))?;
                if subspaces.contains(&subspace) {
                    return Err(fail("duplicate subspace".to_string()));
                }
                subspaces.push(subspace);
            }
        }
    }
    if ring.is_none() {
        return Err(Error::Parse {
            line: last_line.max(1),
            message: "missing `ring n=<n> field=<p|Q>` header".to_string(),
        });
    }
    if subspaces.is_empty() {
        return Err(Error::Parse {
            line: last_line.max(1),
            message: "file defines no subspaces".to_string(),
        });
    }
    Arrangement::new(subspaces)
}

fn parse_ring_header(line: &str) -> std::result::Result<RingContext, String> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("ring") {
        return Err("expected `ring n=<n> field=<p|Q>` header".to_string());
    }
    let mut n: Option<usize> = None;
    let mut field: Option<FieldDescriptor> = None;
    for token in tokens {
        let Some((key, value)) = token.split_once('=') else {
            return Err(format!("expected key=value in header, found '{token}'"));
        };
        match key {
            "n" => {
                let v: usize = value
                    .parse()
                    .map_err(|_| format!("bad projective dimension '{value}'"))?;
                n = Some(v);
            }
            "field" => {
                field = Some(if value == "Q" {
                    FieldDescriptor::Rationals
                } else {
                    let p: u32 = value
                        .parse()
                        .map_err(|_| format!("bad field '{value}' (a prime or Q)"))?;
                    FieldDescriptor::prime(p).map_err(|e| e.to_string())?
                });
            }
            _ => return Err(format!("unknown header key '{key}'")),
        }
    }
    let n = n.ok_or("header is missing n=<n>")?;
    let field = field.ok_or("header is missing field=<p|Q>")?;
    if n == 0 {
        return Err("projective dimension must be at least 1".to_string());
    }
    RingContext::new(n + 1, field).map_err(|e| e.to_string())
}

/// Renders an arrangement in the file format `parse_arrangement` reads;
/// the round trip reproduces the arrangement exactly.
pub fn arrangement_to_string(x: &Arrangement) -> String {
    let ring = x.ring();
    let field = match ring.field() {
        FieldDescriptor::Prime(p) => p.to_string(),
        FieldDescriptor::Rationals => "Q".to_string(),
    };
    let mut out = format!("ring n={} field={}\n", ring.projective_dim(), field);
    for s in x.subspaces() {
        let forms: Vec<String> = s.forms().iter().map(|f| f.to_string()).collect();
        out.push_str(&format!("subspace: {}\n", forms.join("; ")));
    }
    out
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.bump();
        }
    }

    fn parse_number(&mut self) -> std::result::Result<i64, String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err("expected a number".to_string());
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| "integer literal too large".to_string())
    }

    /// One product of coefficient and variable-power factors.
    fn parse_term(&mut self, ring: RingContext) -> std::result::Result<Polynomial, String> {
        let field = ring.field();
        let mut coeff: FieldElement = field.one();
        let mut exps = vec![0u32; ring.num_vars()];
        let mut saw_factor = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.parse_number()?;
                    let value = if self.peek() == Some(b'/') {
                        self.bump();
                        let d = self.parse_number()?;
                        field
                            .from_fraction(n, d)
                            .map_err(|_| "division by zero in coefficient".to_string())?
                    } else {
                        field.from_i64(n)
                    };
                    coeff = coeff.mul(&value);
                }
                Some(b'x') => {
                    self.bump();
                    let idx = self.parse_number()? as usize;
                    if idx >= ring.num_vars() {
                        return Err(format!(
                            "variable x{idx} out of range (ring has x0..x{})",
                            ring.num_vars() - 1
                        ));
                    }
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.bump();
                        let raw = self.parse_number()?;
                        e = u32::try_from(raw).map_err(|_| "exponent too large".to_string())?;
                    }
                    exps[idx] += e;
                }
                _ => {
                    if !saw_factor {
                        return Err(match self.peek() {
                            Some(c) => format!("unexpected character '{}'", c as char),
                            None => "unexpected end of input".to_string(),
                        });
                    }
                    break;
                }
            }
            saw_factor = true;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.bump();
                // A '*' promises another factor.
                self.skip_ws();
                match self.peek() {
                    Some(c) if c.is_ascii_digit() || c == b'x' => {}
                    Some(c) => {
                        return Err(format!("unexpected character '{}' after '*'", c as char))
                    }
                    None => return Err("unexpected end of input after '*'".to_string()),
                }
            }
        }
        Ok(Polynomial::term(ring, coeff, Monomial::new(exps)))
    }
}
