//! Pluggable exact coefficient rings.
//!
//! A [`Ring`] value describes which ring computations happen in; the elements
//! themselves ([`Elem`]) are plain data. Every operation is a method on the
//! descriptor, so the same element type serves integers, rationals, modular
//! residues and sparse polynomials over any of these.
//!
//! All representations are canonical: fractions are reduced with a positive
//! denominator, residues lie in `[0, m)`, and polynomials store no zero
//! coefficients. Equal elements are therefore structurally equal.

mod poly;
mod text;

pub use poly::{Monomial, MultiPoly};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{DivError, Error, Result};

/// Descriptor of an exact commutative coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Rationals,
    /// Integers modulo `m`, with `m >= 2`.
    IntegersMod(BigUint),
    Polynomial(Box<PolyRing>),
}

/// Multivariate polynomial ring over a base ring, with named variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub base: Ring,
    pub vars: Vec<String>,
}

/// An element of some ring; which ring is determined by context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elem {
    Int(BigInt),
    Rat(BigRational),
    /// Residue in `[0, m)`.
    Mod(BigUint),
    Poly(MultiPoly),
}

/// Residue moduli above this bound make exhaustive searches (square roots,
/// quadratic splitting) an error instead of a stall.
pub const MOD_SEARCH_CAP: u64 = 1 << 20;

fn mismatch(ring: &Ring, op: &str, e: &Elem) -> ! {
    panic!("ring element {e:?} does not belong to {ring} (in {op})");
}

impl Ring {
    pub fn integers_mod(m: u64) -> Ring {
        Ring::IntegersMod(BigUint::from(m))
    }

    pub fn poly<S: Into<String>>(base: Ring, vars: impl IntoIterator<Item = S>) -> Ring {
        Ring::Polynomial(Box::new(PolyRing {
            base,
            vars: vars.into_iter().map(Into::into).collect(),
        }))
    }

    /// Checks the descriptor invariants: modulus at least 2, distinct
    /// well-formed variable names.
    pub fn validate(&self) -> Result<()> {
        match self {
            Ring::Integers | Ring::Rationals => Ok(()),
            Ring::IntegersMod(m) => {
                if *m < BigUint::from(2u32) {
                    Err(Error::InvalidRing(format!("modulus {m} is below 2")))
                } else {
                    Ok(())
                }
            }
            Ring::Polynomial(pr) => {
                if pr.vars.is_empty() {
                    return Err(Error::InvalidRing("polynomial ring with no variables".into()));
                }
                for (i, v) in pr.vars.iter().enumerate() {
                    if v.is_empty()
                        || !v.chars().next().unwrap().is_ascii_alphabetic()
                        || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                        || v == "mod"
                    {
                        return Err(Error::InvalidRing(format!("bad variable name {v:?}")));
                    }
                    if pr.vars[..i].contains(v) {
                        return Err(Error::InvalidRing(format!("duplicate variable {v:?}")));
                    }
                }
                pr.base.validate()
            }
        }
    }

    pub fn nvars(&self) -> usize {
        match self {
            Ring::Polynomial(pr) => pr.vars.len(),
            _ => 0,
        }
    }

    pub fn zero(&self) -> Elem {
        match self {
            Ring::Integers => Elem::Int(BigInt::zero()),
            Ring::Rationals => Elem::Rat(BigRational::zero()),
            Ring::IntegersMod(_) => Elem::Mod(BigUint::zero()),
            Ring::Polynomial(_) => Elem::Poly(MultiPoly::zero()),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_int(BigInt::one())
    }

    pub fn from_int<T: Into<BigInt>>(&self, n: T) -> Elem {
        let n = n.into();
        match self {
            Ring::Integers => Elem::Int(n),
            Ring::Rationals => Elem::Rat(BigRational::from_integer(n)),
            Ring::IntegersMod(m) => Elem::Mod(n.mod_floor(&BigInt::from(m.clone())).to_biguint().unwrap()),
            Ring::Polynomial(pr) => Elem::Poly(MultiPoly::constant(
                &pr.base,
                pr.vars.len(),
                pr.base.from_int(n),
            )),
        }
    }

    /// Structural membership check (shape, residue bounds, term arity); used
    /// at input boundaries.
    pub fn contains(&self, e: &Elem) -> bool {
        match (self, e) {
            (Ring::Integers, Elem::Int(_)) => true,
            (Ring::Rationals, Elem::Rat(_)) => true,
            (Ring::IntegersMod(m), Elem::Mod(r)) => r < m,
            (Ring::Polynomial(pr), Elem::Poly(p)) => p.terms.iter().all(|(m, c)| {
                m.0.len() == pr.vars.len() && !pr.base.is_zero(c) && pr.base.contains(c)
            }),
            _ => false,
        }
    }

    pub fn is_zero(&self, e: &Elem) -> bool {
        match e {
            Elem::Int(n) => n.is_zero(),
            Elem::Rat(q) => q.is_zero(),
            Elem::Mod(r) => r.is_zero(),
            Elem::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self, e: &Elem) -> bool {
        *e == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Ring::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            (Ring::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Ring::IntegersMod(m), Elem::Mod(x), Elem::Mod(y)) => Elem::Mod((x + y) % m),
            (Ring::Polynomial(pr), Elem::Poly(x), Elem::Poly(y)) => {
                Elem::Poly(x.add(y, &pr.base))
            }
            _ => mismatch(self, "add", if self.contains(a) { b } else { a }),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (self, a) {
            (Ring::Integers, Elem::Int(x)) => Elem::Int(-x),
            (Ring::Rationals, Elem::Rat(x)) => Elem::Rat(-x),
            (Ring::IntegersMod(m), Elem::Mod(x)) => {
                if x.is_zero() {
                    Elem::Mod(BigUint::zero())
                } else {
                    Elem::Mod(m - x)
                }
            }
            (Ring::Polynomial(pr), Elem::Poly(x)) => Elem::Poly(x.neg(&pr.base)),
            _ => mismatch(self, "neg", a),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (Ring::Integers, Elem::Int(x), Elem::Int(y)) => Elem::Int(x * y),
            (Ring::Rationals, Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Ring::IntegersMod(m), Elem::Mod(x), Elem::Mod(y)) => Elem::Mod((x * y) % m),
            (Ring::Polynomial(pr), Elem::Poly(x), Elem::Poly(y)) => {
                Elem::Poly(x.mul(y, &pr.base))
            }
            _ => mismatch(self, "mul", if self.contains(a) { b } else { a }),
        }
    }

    pub fn pow(&self, a: &Elem, mut k: u64) -> Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Returns `q` with `b * q = a` when such `q` exists and is unique.
    ///
    /// Over rings with zero divisors a solvable division may have several
    /// quotients; those report [`DivError::NoExactQuotient`] rather than pick
    /// one arbitrarily. Division by a non-constant polynomial over a base
    /// with zero divisors is decided conservatively: a `NoExactQuotient` there
    /// means the leading-term algorithm could not certify one.
    pub fn exact_div(&self, a: &Elem, b: &Elem) -> Result<Elem, DivError> {
        if self.is_zero(b) {
            return Err(DivError::DivisionByZero);
        }
        match (self, a, b) {
            (Ring::Integers, Elem::Int(x), Elem::Int(y)) => {
                let (q, r) = x.div_rem(y);
                if r.is_zero() {
                    Ok(Elem::Int(q))
                } else {
                    Err(DivError::NoExactQuotient)
                }
            }
            (Ring::Rationals, Elem::Rat(x), Elem::Rat(y)) => Ok(Elem::Rat(x / y)),
            (Ring::IntegersMod(m), Elem::Mod(x), Elem::Mod(y)) => {
                let g = y.gcd(m);
                if !(x % &g).is_zero() {
                    return Err(DivError::NoExactQuotient);
                }
                if !g.is_one() {
                    // g solutions exist; refuse to pick one.
                    return Err(DivError::NoExactQuotient);
                }
                let inv = mod_inverse(y, m).expect("unit after gcd check");
                Ok(Elem::Mod((x * inv) % m))
            }
            (Ring::Polynomial(pr), Elem::Poly(x), Elem::Poly(y)) => {
                poly_exact_div(pr, x, y).map(Elem::Poly)
            }
            _ => mismatch(self, "exact_div", if self.contains(a) { b } else { a }),
        }
    }

    /// Some square root of `a`, if one exists. Supported over the integers,
    /// the rationals, and residue rings (exhaustive search, capped).
    pub fn is_square(&self, a: &Elem) -> Result<Option<Elem>> {
        match (self, a) {
            (Ring::Integers, Elem::Int(x)) => Ok(int_sqrt(x).map(Elem::Int)),
            (Ring::Rationals, Elem::Rat(q)) => {
                if q.is_negative() {
                    return Ok(None);
                }
                let n = int_sqrt(q.numer());
                let d = int_sqrt(q.denom());
                Ok(match (n, d) {
                    (Some(n), Some(d)) => Some(Elem::Rat(BigRational::new(n, d))),
                    _ => None,
                })
            }
            (Ring::IntegersMod(m), Elem::Mod(x)) => {
                let cap = BigUint::from(MOD_SEARCH_CAP);
                if *m > cap {
                    return Err(Error::CapExceeded {
                        what: "residue square-root search".into(),
                        requested: usize::MAX,
                        cap: MOD_SEARCH_CAP as usize,
                    });
                }
                let mut r = BigUint::zero();
                while r < *m {
                    if (&r * &r) % m == *x {
                        return Ok(Some(Elem::Mod(r)));
                    }
                    r += 1u32;
                }
                Ok(None)
            }
            (Ring::Polynomial(_), Elem::Poly(_)) => Err(Error::UnsupportedRing {
                op: "is_square".into(),
                ring: self.to_string(),
            }),
            _ => mismatch(self, "is_square", a),
        }
    }
}

fn int_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    if &r * &r == *x {
        Some(r)
    } else {
        None
    }
}

fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let ext = a.extended_gcd(&m);
    if !ext.gcd.is_one() {
        return None;
    }
    Some(ext.x.mod_floor(&m).to_biguint().unwrap())
}

/// Long division by leading terms. Complete over integral-domain bases; over
/// bases with zero divisors it may conservatively fail (see `exact_div`).
fn poly_exact_div(pr: &PolyRing, a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, DivError> {
    let base = &pr.base;
    // Constant divisor: divide coefficientwise, which is complete and
    // propagates the base ring's uniqueness semantics.
    if let Some((m, c)) = b.leading() {
        if m.is_one() && b.terms.len() == 1 {
            let mut out = MultiPoly::zero();
            for (mono, coeff) in &a.terms {
                let q = base.exact_div(coeff, c)?;
                out.terms.insert(mono.clone(), q);
            }
            return Ok(out);
        }
    }
    let (lead_m, lead_c) = b.leading().expect("nonzero divisor");
    let mut rem = a.clone();
    let mut quot = MultiPoly::zero();
    while let Some((rm, rc)) = rem.leading() {
        let Some(qm) = rm.div(lead_m) else {
            return Err(DivError::NoExactQuotient);
        };
        let qc = base.exact_div(rc, lead_c)?;
        let term = MultiPoly {
            terms: [(qm, qc)].into_iter().collect(),
        };
        rem = rem.sub(&term.mul(b, base), base);
        quot = quot.add(&term, base);
    }
    Ok(quot)
}

/// A supported ring homomorphism for base change.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingMap {
    Identity(Ring),
    /// Reduction of the integers modulo `m`.
    IntegersToMod(BigUint),
    /// Inclusion of the integers into the rationals.
    IntegersToRationals,
    /// Evaluation of every variable of a polynomial ring at base-ring values.
    Evaluate { source: PolyRing, values: Vec<Elem> },
}

impl RingMap {
    pub fn reduce_mod(m: u64) -> RingMap {
        RingMap::IntegersToMod(BigUint::from(m))
    }

    pub fn source(&self) -> Ring {
        match self {
            RingMap::Identity(r) => r.clone(),
            RingMap::IntegersToMod(_) | RingMap::IntegersToRationals => Ring::Integers,
            RingMap::Evaluate { source, .. } => Ring::Polynomial(Box::new(source.clone())),
        }
    }

    pub fn target(&self) -> Ring {
        match self {
            RingMap::Identity(r) => r.clone(),
            RingMap::IntegersToMod(m) => Ring::IntegersMod(m.clone()),
            RingMap::IntegersToRationals => Ring::Rationals,
            RingMap::Evaluate { source, .. } => source.base.clone(),
        }
    }

    pub fn apply(&self, e: &Elem) -> Result<Elem> {
        match self {
            RingMap::Identity(_) => Ok(e.clone()),
            RingMap::IntegersToMod(m) => match e {
                Elem::Int(n) => Ok(Ring::IntegersMod(m.clone()).from_int(n.clone())),
                _ => Err(Error::UnsupportedMap("expected integer element".into())),
            },
            RingMap::IntegersToRationals => match e {
                Elem::Int(n) => Ok(Elem::Rat(BigRational::from_integer(n.clone()))),
                _ => Err(Error::UnsupportedMap("expected integer element".into())),
            },
            RingMap::Evaluate { source, values } => match e {
                Elem::Poly(p) => {
                    if values.len() != source.vars.len() {
                        return Err(Error::UnsupportedMap(format!(
                            "expected {} evaluation values, got {}",
                            source.vars.len(),
                            values.len()
                        )));
                    }
                    Ok(p.evaluate(values, &source.base))
                }
                _ => Err(Error::UnsupportedMap("expected polynomial element".into())),
            },
        }
    }
}

impl Elem {
    /// Convenience accessor for integer elements in tests and the CLI.
    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Elem::Int(n) => Some(n),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zi(n: i64) -> Elem {
        Ring::Integers.from_int(n)
    }

    #[test]
    fn integer_arithmetic() {
        let r = Ring::Integers;
        assert_eq!(r.add(&zi(2), &zi(3)), zi(5));
        assert_eq!(r.mul(&zi(-4), &zi(6)), zi(-24));
    }

    #[test]
    fn mod_arithmetic_wraps() {
        let r = Ring::integers_mod(4);
        let three = r.from_int(3);
        assert_eq!(r.add(&three, &three), r.from_int(2));
        let r5 = Ring::integers_mod(5);
        assert_eq!(r5.mul(&r5.from_int(3), &r5.from_int(4)), r5.from_int(2));
    }

    #[test]
    fn polynomial_cancellation() {
        let r = Ring::poly(Ring::Integers, ["t"]);
        let t_plus = r.parse("t + 1").unwrap();
        let t_minus = r.parse("t - 1").unwrap();
        assert_eq!(r.add(&t_plus, &t_minus), r.parse("2*t").unwrap());
    }

    #[test]
    fn rational_mul_reduces() {
        let r = Ring::Rationals;
        let half = r.parse("1/2").unwrap();
        let two_thirds = r.parse("2/3").unwrap();
        assert_eq!(r.mul(&half, &two_thirds), r.parse("1/3").unwrap());
    }

    #[test]
    fn two_variable_product() {
        let r = Ring::poly(Ring::Integers, ["s", "t"]);
        let s = r.parse("s").unwrap();
        let t = r.parse("t").unwrap();
        assert_eq!(r.mul(&s, &t), r.parse("s*t").unwrap());
    }

    #[test]
    fn exact_division_over_integers() {
        let r = Ring::Integers;
        assert_eq!(r.exact_div(&zi(125), &zi(5)), Ok(zi(25)));
        assert_eq!(r.exact_div(&zi(7), &zi(2)), Err(DivError::NoExactQuotient));
        assert_eq!(r.exact_div(&zi(7), &zi(0)), Err(DivError::DivisionByZero));
    }

    #[test]
    fn exact_division_mod_8_is_ambiguous() {
        // Enumerate the residues: both 2 and 6 solve 2q = 4 (mod 8), so no
        // unique quotient may be returned.
        let witnesses: Vec<u64> = (0..8).filter(|q| (2 * q) % 8 == 4).collect();
        assert_eq!(witnesses, vec![2, 6]);
        let r = Ring::integers_mod(8);
        assert_eq!(
            r.exact_div(&r.from_int(4), &r.from_int(2)),
            Err(DivError::NoExactQuotient)
        );
    }

    #[test]
    fn square_detection() {
        let r = Ring::Integers;
        assert_eq!(r.is_square(&zi(81)).unwrap(), Some(zi(9)));
        // 5^3 is not a square.
        assert_eq!(r.is_square(&zi(125)).unwrap(), None);
        let r5 = Ring::integers_mod(5);
        let root = r5.is_square(&r5.from_int(4)).unwrap().unwrap();
        assert_eq!(r5.mul(&root, &root), r5.from_int(4));
    }

    #[test]
    fn polynomial_exact_division() {
        let r = Ring::poly(Ring::Integers, ["x"]);
        let num = r.parse("x^2 - 1").unwrap();
        let den = r.parse("x - 1").unwrap();
        assert_eq!(r.exact_div(&num, &den), Ok(r.parse("x + 1").unwrap()));
        assert_eq!(
            r.exact_div(&r.parse("x + 1").unwrap(), &r.parse("2").unwrap()),
            Err(DivError::NoExactQuotient)
        );
    }

    #[test]
    fn descriptor_validation() {
        assert!(Ring::integers_mod(1).validate().is_err());
        assert!(Ring::poly(Ring::Integers, ["s", "s"]).validate().is_err());
        assert!(Ring::poly(Ring::Integers, ["mod"]).validate().is_err());
        assert!(Ring::poly(Ring::integers_mod(4), ["x"]).validate().is_ok());
    }

    #[test]
    #[should_panic(expected = "does not belong")]
    fn mixed_descriptor_panics() {
        let r = Ring::Integers;
        let q = Ring::Rationals.one();
        let _ = r.add(&zi(1), &q);
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Ring>();
        assert_send_sync::<Elem>();
        assert_send_sync::<RingMap>();
    }
}
