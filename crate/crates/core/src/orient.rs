//! Finite permutation actions, signs, and orientation bookkeeping.
//!
//! An orientation of an `n`-element set is an even-classes-of-orderings
//! datum: the two-element quotient of the bijections `[n] → X` by the
//! alternating group. A group acting on `X` acts trivially on orientations
//! exactly when every generator acts by an even permutation, the same
//! criterion that governs whether the discriminant algebra of an algebra
//! splits.

use itertools::Itertools;

use crate::error::{Error, Result};

/// A permutation of `{0, …, n−1}` stored as its image vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::BadPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation from 1-based images (the usual cycle tables).
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let shifted: Vec<usize> = images
            .iter()
            .map(|&v| v.checked_sub(1).ok_or_else(|| Error::BadPermutation(format!("{images:?}"))))
            .collect::<Result<_>>()?;
        Permutation::from_images(shifted)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn sign(&self) -> i8 {
        let mut odd = false;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    odd = !odd;
                }
            }
        }
        if odd {
            -1
        } else {
            1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }
}

/// A finite group acting on `{0, …, n−1}` through explicit generators.
#[derive(Clone, Debug)]
pub struct FiniteAction {
    degree: usize,
    generators: Vec<Permutation>,
}

impl FiniteAction {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::BadPermutation(format!(
                    "generator of degree {} in an action of degree {degree}",
                    g.degree()
                )));
            }
        }
        Ok(FiniteAction { degree, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }
}

/// How each generator acts on the two orientations: `+1` fixes them, `−1`
/// swaps them. Needs at least two points for orientations to make sense.
pub fn orientation_action(x: &FiniteAction) -> Result<Vec<i8>> {
    if x.degree() < 2 {
        return Err(Error::RankTooSmall {
            min: 2,
            got: x.degree(),
        });
    }
    Ok(x.generators().iter().map(Permutation::sign).collect())
}

/// Whether the action is alternating: every generator even.
pub fn is_alternating(x: &FiniteAction) -> bool {
    x.generators().iter().all(Permutation::is_even)
}

/// Verifies, by exhaustive enumeration, that orientations of a disjoint
/// union of an `m`-set and an `n`-set correspond to pairs of orientations up
/// to the simultaneous flip: concatenating orderings multiplies signs, the
/// induced map is well-defined on the flip classes, and both orientations of
/// the union are reached.
pub fn orientation_product_check(m: usize, n: usize) -> Result<bool> {
    if m < 2 || n < 2 {
        return Err(Error::RankTooSmall {
            min: 2,
            got: m.min(n),
        });
    }
    let mut reached = [false, false];
    for p in (0..m).permutations(m) {
        let p = Permutation::from_images(p).expect("permutation");
        for q in (0..n).permutations(n) {
            let q = Permutation::from_images(q).expect("permutation");
            let mut concat = p.images().to_vec();
            concat.extend(q.images().iter().map(|&v| v + m));
            let c = Permutation::from_images(concat).expect("permutation");
            // The orientation of the union is the product of the two
            // orientations; this is exactly invariance under the
            // simultaneous flip.
            if c.sign() != p.sign() * q.sign() {
                return Ok(false);
            }
            reached[if c.sign() == 1 { 0 } else { 1 }] = true;
        }
    }
    Ok(reached[0] && reached[1])
}
