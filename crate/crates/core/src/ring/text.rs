//! Textual serialization of ring elements, and the matching parser.
//!
//! The format is the one used by the CLI and the test fixtures: integers in
//! decimal, fractions as `p/q` (denominator omitted when 1), residues as
//! `r mod m`, polynomials as sign-separated terms in descending graded-lex
//! order with `*` between factors and `^` for exponents. Coefficients from a
//! base ring without a usable sign (residues, nested polynomials) are
//! parenthesized. Serialization of a canonical element followed by parsing
//! returns the identical element, and re-serialization the identical bytes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::poly::{Monomial, MultiPoly};
use crate::ring::{Elem, PolyRing, Ring};

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::IntegersMod(m) => write!(f, "Z/{m}"),
            Ring::Polynomial(pr) => write!(f, "{}[{}]", pr.base, pr.vars.join(",")),
        }
    }
}

impl Ring {
    pub fn to_text(&self, e: &Elem) -> String {
        match (self, e) {
            (Ring::Integers, Elem::Int(n)) => n.to_string(),
            (Ring::Rationals, Elem::Rat(q)) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            (Ring::IntegersMod(m), Elem::Mod(r)) => format!("{r} mod {m}"),
            (Ring::Polynomial(pr), Elem::Poly(p)) => poly_to_text(pr, p),
            _ => panic!("ring element {e:?} does not belong to {self} (in to_text)"),
        }
    }

    pub fn parse(&self, s: &str) -> Result<Elem> {
        let mut sc = Scanner::new(s);
        let e = self.parse_scanner(&mut sc)?;
        sc.skip_ws();
        if !sc.at_end() {
            return Err(self.parse_err(s, "trailing input"));
        }
        Ok(e)
    }

    fn parse_err(&self, input: &str, detail: &str) -> Error {
        Error::Parse {
            what: format!("element of {self} from {input:?}"),
            detail: detail.to_string(),
        }
    }

    fn parse_scanner(&self, sc: &mut Scanner) -> Result<Elem> {
        match self {
            Ring::Integers => {
                let n = sc.signed_int().ok_or_else(|| self.parse_err(sc.src, "expected integer"))?;
                Ok(Elem::Int(n))
            }
            Ring::Rationals => {
                let n = sc.signed_int().ok_or_else(|| self.parse_err(sc.src, "expected numerator"))?;
                if sc.eat('/') {
                    let d = sc
                        .unsigned_int()
                        .ok_or_else(|| self.parse_err(sc.src, "expected denominator"))?;
                    if d.is_zero() {
                        return Err(self.parse_err(sc.src, "zero denominator"));
                    }
                    Ok(Elem::Rat(num_rational::BigRational::new(n, BigInt::from(d))))
                } else {
                    Ok(Elem::Rat(num_rational::BigRational::from_integer(n)))
                }
            }
            Ring::IntegersMod(m) => {
                let n = sc.signed_int().ok_or_else(|| self.parse_err(sc.src, "expected residue"))?;
                sc.skip_ws();
                if sc.peek_ident() {
                    let id = sc.ident();
                    if id != "mod" {
                        return Err(self.parse_err(sc.src, "expected `mod`"));
                    }
                    let given = sc
                        .unsigned_int()
                        .ok_or_else(|| self.parse_err(sc.src, "expected modulus"))?;
                    if given != *m {
                        return Err(self.parse_err(sc.src, "modulus does not match the ring"));
                    }
                }
                Ok(self.from_int(n))
            }
            Ring::Polynomial(pr) => parse_poly(self, pr, sc),
        }
    }
}

fn monomial_text(pr: &PolyRing, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (name, &e) in pr.vars.iter().zip(&m.0) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Whether coefficients of this base ring carry a printable sign.
fn signed_base(base: &Ring) -> bool {
    matches!(base, Ring::Integers | Ring::Rationals)
}

fn coeff_parts(base: &Ring, c: &Elem) -> (bool, String) {
    match (base, c) {
        (Ring::Integers, Elem::Int(n)) => (n.is_negative(), n.abs().to_string()),
        (Ring::Rationals, Elem::Rat(q)) => {
            let abs = q.abs();
            (q.is_negative(), base.to_text(&Elem::Rat(abs)))
        }
        _ => (false, format!("({})", base.to_text(c))),
    }
}

fn poly_to_text(pr: &PolyRing, p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let base = &pr.base;
    let mut out = String::new();
    for (idx, (m, c)) in p.terms.iter().rev().enumerate() {
        let (neg, abs) = coeff_parts(base, c);
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mono = monomial_text(pr, m);
        if mono.is_empty() {
            out.push_str(&abs);
        } else if base.is_one(c) || (signed_base(base) && abs == "1") {
            out.push_str(&mono);
        } else {
            out.push_str(&abs);
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

fn parse_poly(ring: &Ring, pr: &PolyRing, sc: &mut Scanner) -> Result<Elem> {
    let base = &pr.base;
    let nvars = pr.vars.len();
    let mut terms: BTreeMap<Monomial, Elem> = BTreeMap::new();
    let mut first = true;
    loop {
        sc.skip_ws();
        let neg = if sc.eat('-') {
            true
        } else if sc.eat('+') || first {
            false
        } else if sc.at_end() {
            break;
        } else {
            return Err(ring.parse_err(sc.src, "expected `+` or `-` between terms"));
        };
        first = false;

        let mut coeff = base.one();
        let mut exps = vec![0u32; nvars];
        loop {
            sc.skip_ws();
            if sc.eat('(') {
                let inner = sc.balanced()?;
                let c = base.parse(&inner)?;
                coeff = base.mul(&coeff, &c);
            } else if sc.peek_digit() {
                let n = sc.unsigned_int().unwrap();
                let c = if *base == Ring::Rationals && sc.eat('/') {
                    let d = sc
                        .unsigned_int()
                        .ok_or_else(|| ring.parse_err(sc.src, "expected denominator"))?;
                    if d.is_zero() {
                        return Err(ring.parse_err(sc.src, "zero denominator"));
                    }
                    Elem::Rat(num_rational::BigRational::new(
                        BigInt::from(n),
                        BigInt::from(d),
                    ))
                } else {
                    base.from_int(BigInt::from(n))
                };
                coeff = base.mul(&coeff, &c);
            } else if sc.peek_ident() {
                let name = sc.ident();
                let Some(vi) = pr.vars.iter().position(|v| *v == name) else {
                    return Err(ring.parse_err(sc.src, &format!("unknown variable {name:?}")));
                };
                let exp: u32 = if sc.eat('^') {
                    let e = sc
                        .unsigned_int()
                        .ok_or_else(|| ring.parse_err(sc.src, "expected exponent"))?;
                    u32::try_from(e).map_err(|_| ring.parse_err(sc.src, "exponent too large"))?
                } else {
                    1
                };
                exps[vi] = exps[vi]
                    .checked_add(exp)
                    .ok_or_else(|| ring.parse_err(sc.src, "exponent too large"))?;
            } else {
                return Err(ring.parse_err(sc.src, "expected a coefficient or variable"));
            }
            sc.skip_ws();
            if !sc.eat('*') {
                break;
            }
        }
        if neg {
            coeff = base.neg(&coeff);
        }
        if !base.is_zero(&coeff) {
            let m = Monomial(exps);
            let entry = terms.remove(&m);
            let total = match entry {
                Some(prev) => base.add(&prev, &coeff),
                None => coeff,
            };
            if !base.is_zero(&total) {
                terms.insert(m, total);
            }
        }
        sc.skip_ws();
        if sc.at_end() {
            break;
        }
    }
    Ok(Elem::Poly(MultiPoly { terms }))
}

struct Scanner<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c as u8) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn peek_digit(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_some_and(|b| b.is_ascii_digit())
    }

    fn peek_ident(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_some_and(|b| b.is_ascii_alphabetic())
    }

    fn unsigned_int(&mut self) -> Option<BigUint> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        self.src[start..self.pos].parse().ok()
    }

    fn signed_int(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let n = BigInt::from(self.unsigned_int()?);
        Some(if neg { -n } else { n })
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        self.src[start..self.pos].to_string()
    }

    /// Consume up to the parenthesis matching an already-consumed `(` and
    /// return the inner text.
    fn balanced(&mut self) -> Result<String> {
        let start = self.pos;
        let mut depth = 1usize;
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        let inner = self.src[start..self.pos].to_string();
                        self.pos += 1;
                        return Ok(inner);
                    }
                }
                _ => {}
            }
            self.pos += 1;
        }
        Err(Error::Parse {
            what: "parenthesized coefficient".into(),
            detail: "unbalanced parentheses".into(),
        })
    }
}
