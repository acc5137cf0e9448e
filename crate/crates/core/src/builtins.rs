//! Textual specifications of groups, pairings and algebras.
//!
//! Algebras:
//! `twisted:<cocycle>`, `pauli:n`, `grassmann:r`, `local:v,c`, `paperB`, `paperA2`, `field`,
//! `tensor(a, b, ...)`, `dsum(a, b, ...)`, or a path to a JSON algebra file.
//!
//! Cocycles: `trivial:<moduli>`, `pauli:n` (also `pauliN`), `std:n,k` (standard cocycle on
//! `Z_n x Z_n` with `xi = zeta_n^k`), or a path to a JSON cocycle file.
//!
//! Pairings: `grassmann`, `pauli:n`, `trivial[:<moduli>]`, `std:n,k`, or a JSON file.
//!
//! Groups: moduli separated by `x` or `,` (`2x2`, `[2,2]`), `trivial`, or `{"moduli": …}`.

use std::path::Path;

use thiserror::Error;

use crate::algebra::{self, AlgebraError, GradedAlgebra, PresentationExample};
use crate::group::{GroupError, GroupSpec};
use crate::io::{self, IoError, Pairing};
use crate::pairing::{Bicharacter, Cocycle, PairingError};
use crate::scalar::Cyclotomic;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot parse specification at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("cannot read {path}: {message}")]
    File { path: String, message: String },
    #[error("{path}: {source}")]
    Json { path: String, source: IoError },
    #[error("{path}: expected a {expected}, found a {found}")]
    WrongKind { path: String, expected: &'static str, found: &'static str },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn load_json(path: &str) -> Result<serde_json::Value, SpecError> {
    let text = std::fs::read_to_string(Path::new(path))
        .map_err(|e| SpecError::File { path: path.to_string(), message: e.to_string() })?;
    io::parse_json(&text).map_err(|source| SpecError::Json { path: path.to_string(), source })
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, SpecError> {
        Err(SpecError::Parse { offset: self.pos, message: message.into() })
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{c}'"))
        }
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let len = self.rest().find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(self.rest().len());
        let s = &self.rest()[..len];
        self.pos += len;
        s
    }

    fn int(&mut self) -> Result<i64, SpecError> {
        self.skip_ws();
        let rest = self.rest();
        let sign = usize::from(rest.starts_with('-'));
        let len = rest[sign..].find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len() - sign) + sign;
        match rest[..len].parse() {
            Ok(v) if len > sign => {
                self.pos += len;
                Ok(v)
            }
            _ => self.error("expected an integer"),
        }
    }

    fn uint(&mut self) -> Result<u32, SpecError> {
        let start = self.pos;
        let v = self.int()?;
        u32::try_from(v).or_else(|_| {
            self.pos = start;
            self.error("expected a non-negative integer")
        })
    }

    /// Moduli such as `2x2x3`.
    fn moduli(&mut self) -> Result<GroupSpec, SpecError> {
        let mut m = vec![self.uint()?];
        while self.rest().starts_with('x') {
            self.pos += 1;
            m.push(self.uint()?);
        }
        Ok(GroupSpec::new(m)?)
    }

    /// A file path running to the next top-level `,` or `)`.
    fn path(&mut self) -> &'a str {
        self.skip_ws();
        let len = self.rest().find([',', ')']).unwrap_or(self.rest().len());
        let s = self.rest()[..len].trim_end();
        self.pos += len;
        s
    }

    fn end(&mut self) -> Result<(), SpecError> {
        self.skip_ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            self.error(format!("unexpected trailing input {:?}", self.rest()))
        }
    }

    fn cocycle(&mut self) -> Result<Cocycle, SpecError> {
        let start = self.pos;
        let name = self.ident();
        match name {
            "trivial" => {
                if !self.eat(':') {
                    return self.error("trivial cocycle needs a group, e.g. trivial:2x2");
                }
                Ok(Cocycle::trivial(self.moduli()?))
            }
            "pauli" => {
                self.expect(':')?;
                let n = self.uint()?;
                pauli_cocycle(n).or_else(|e| self.error(e))
            }
            "std" => {
                self.expect(':')?;
                let n = self.uint()?;
                self.expect(',')?;
                let k = self.int()?;
                if n == 0 {
                    return self.error("std:n,k needs n >= 1");
                }
                Ok(Cocycle::standard(n, Cyclotomic::zeta(n, k))?)
            }
            _ => {
                if let Some(n) = name.strip_prefix("pauli").and_then(|d| d.parse::<u32>().ok()) {
                    return pauli_cocycle(n).or_else(|e| self.error(e));
                }
                self.pos = start;
                let path = self.path();
                match io::pairing_from_json(&load_json(path)?) {
                    Ok(Pairing::Cocycle(tau)) => Ok(tau),
                    Ok(Pairing::Bicharacter(_)) => {
                        Err(SpecError::WrongKind { path: path.into(), expected: "cocycle", found: "bicharacter" })
                    }
                    Err(source) => Err(SpecError::Json { path: path.into(), source }),
                }
            }
        }
    }

    fn algebra(&mut self) -> Result<GradedAlgebra, SpecError> {
        let start = self.pos;
        let name = self.ident();
        match name {
            "tensor" | "dsum" => {
                self.expect('(')?;
                let mut acc = self.algebra()?;
                while self.eat(',') {
                    let next = self.algebra()?;
                    acc = if name == "tensor" {
                        algebra::tensor_product(&acc, &next)
                    } else {
                        algebra::direct_sum(&acc, &next)?
                    };
                }
                self.expect(')')?;
                Ok(acc)
            }
            "twisted" => {
                self.expect(':')?;
                Ok(algebra::twisted_group_algebra(&self.cocycle()?))
            }
            "pauli" => {
                self.expect(':')?;
                Ok(algebra::pauli_matrix_algebra(self.uint()?)?)
            }
            "grassmann" => {
                self.expect(':')?;
                Ok(algebra::truncated_grassmann(self.uint()?)?)
            }
            "local" => {
                self.expect(':')?;
                let v = self.uint()?;
                self.expect(',')?;
                let c = self.uint()?;
                Ok(algebra::truncated_polynomial_local(v, c)?)
            }
            "paperB" => Ok(algebra::from_presentation_example(PresentationExample::B)),
            "paperA2" => Ok(algebra::from_presentation_example(PresentationExample::A2)),
            "field" => Ok(algebra::ground_field()),
            _ => {
                self.pos = start;
                let path = self.path();
                if path.is_empty() {
                    return self.error("expected an algebra");
                }
                io::algebra_from_json(&load_json(path)?).map_err(|source| SpecError::Json { path: path.into(), source })
            }
        }
    }
}

fn pauli_cocycle(n: u32) -> Result<Cocycle, String> {
    if n < 2 {
        return Err(format!("Pauli cocycle needs n >= 2, got {n}"));
    }
    Ok(Cocycle::pauli(n))
}

pub fn parse_algebra(spec: &str) -> Result<GradedAlgebra, SpecError> {
    let mut p = Parser::new(spec);
    let a = p.algebra()?;
    p.end()?;
    Ok(a)
}

pub fn parse_cocycle(spec: &str) -> Result<Cocycle, SpecError> {
    let mut p = Parser::new(spec);
    let tau = p.cocycle()?;
    p.end()?;
    Ok(tau)
}

pub fn parse_pairing(spec: &str) -> Result<Pairing, SpecError> {
    let mut p = Parser::new(spec);
    let start = p.pos;
    let out = match p.ident() {
        "grassmann" => Pairing::Bicharacter(Bicharacter::grassmann()),
        "pauli" => {
            p.expect(':')?;
            let n = p.uint()?;
            if n < 2 {
                return p.error("Pauli bicharacter needs n >= 2");
            }
            Pairing::Bicharacter(Bicharacter::pauli(n))
        }
        "trivial" => {
            let group = if p.eat(':') { p.moduli()? } else { GroupSpec::cyclic(2) };
            Pairing::Bicharacter(Bicharacter::trivial(group))
        }
        "std" => {
            p.pos = start;
            Pairing::Cocycle(p.cocycle()?)
        }
        _ => {
            p.pos = start;
            let path = p.rest().trim();
            p.pos = p.text.len();
            io::pairing_from_json(&load_json(path)?).map_err(|source| SpecError::Json { path: path.into(), source })?
        }
    };
    p.end()?;
    Ok(out)
}

pub fn parse_group(spec: &str) -> Result<GroupSpec, SpecError> {
    let s = spec.trim();
    if s == "trivial" {
        return Ok(GroupSpec::trivial());
    }
    if s.starts_with('{') {
        let v = io::parse_json(s).map_err(|source| SpecError::Json { path: "<argument>".into(), source })?;
        return serde_json::from_value(v).map_err(|e| SpecError::Parse { offset: 0, message: e.to_string() });
    }
    let inner = s.trim_start_matches('[').trim_end_matches(']');
    let moduli = inner
        .split(['x', ','])
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| SpecError::Parse { offset: 0, message: format!("bad group {spec:?}: {e}") })?;
    Ok(GroupSpec::new(moduli)?)
}
