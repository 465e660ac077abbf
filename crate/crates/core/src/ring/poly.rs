//! Sparse multivariate polynomials with graded-lexicographic term order.
//!
//! Coefficients live in an arbitrary base ring; the base descriptor is passed
//! into every operation rather than stored per element. Zero coefficients are
//! never stored, so structural equality of term maps is semantic equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::ring::{Elem, Ring};

/// An exponent vector, ordered graded-lexicographically: higher total degree
/// first, ties broken by the exponents read along the declared variable order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.0.len(), other.0.len(), "monomial arity mismatch");
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise quotient, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.0.len(), other.0.len(), "monomial arity mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Term map of a sparse polynomial. The zero polynomial is the empty map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    pub terms: BTreeMap<Monomial, Elem>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(base: &Ring, nvars: usize, c: Elem) -> Self {
        let mut terms = BTreeMap::new();
        if !base.is_zero(&c) {
            terms.insert(Monomial::one(nvars), c);
        }
        MultiPoly { terms }
    }

    pub fn variable(base: &Ring, nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(exps), base.one());
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial, base: &Ring) -> Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| base.zero())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn insert_term(&mut self, base: &Ring, m: Monomial, c: Elem) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !base.is_zero(&c) {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = base.add(o.get(), &c);
                if base.is_zero(&sum) {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self, base: &Ring) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(base, m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, base: &Ring) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), base.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self, base: &Ring) -> Self {
        self.add(&other.neg(base), base)
    }

    pub fn mul(&self, other: &Self, base: &Ring) -> Self {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = base.mul(ca, cb);
                if !base.is_zero(&c) {
                    out.insert_term(base, ma.mul(mb), c);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Elem, base: &Ring) -> Self {
        let mut out = MultiPoly::zero();
        for (m, a) in &self.terms {
            let p = base.mul(a, c);
            if !base.is_zero(&p) {
                out.insert_term(base, m.clone(), p);
            }
        }
        out
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Elem)> {
        self.terms.iter().next_back()
    }

    /// Substitute `values[i]` (elements of the base ring) for variable `i`.
    pub fn evaluate(&self, values: &[Elem], base: &Ring) -> Elem {
        let mut acc = base.zero();
        for (m, c) in &self.terms {
            assert_eq!(m.0.len(), values.len(), "evaluation arity mismatch");
            let mut term = c.clone();
            for (exp, v) in m.0.iter().zip(values) {
                if *exp > 0 {
                    term = base.mul(&term, &base.pow(v, u64::from(*exp)));
                }
            }
            acc = base.add(&acc, &term);
        }
        acc
    }
}
