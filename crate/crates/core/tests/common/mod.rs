//! Shared test support: a dense tensor-power oracle and deterministic
//! random generators.
//!
//! The oracle stores elements of `A^⊗n` as the full `nⁿ` coefficient array
//! and multiplies them by expanding every slot product through the structure
//! constants. It is exponentially expensive and exists only to cross-check
//! the orbit-basis code paths at ranks 2–3.

#![allow(dead_code)]

use discalg::delta::AlternatingInvariant;
use discalg::ferrand::{MultiDegree, SymmetricInvariant};
use discalg::orient::Permutation;
use discalg::ring::{Elem, Ring};
use discalg::{AlgebraElement, FreeAlgebra};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A monic polynomial of the given degree with coefficients in [−9, 9].
pub fn random_monogenic(ring: &Ring, rank: usize, rng: &mut ChaCha8Rng) -> FreeAlgebra {
    loop {
        let mut coeffs = vec![ring.one()];
        for _ in 0..rank {
            coeffs.push(ring.from_int(rng.random_range(-9i64..=9)));
        }
        if let Ok(alg) = FreeAlgebra::monogenic(ring.clone(), &coeffs) {
            return alg;
        }
    }
}

pub fn random_element(alg: &FreeAlgebra, rng: &mut ChaCha8Rng) -> AlgebraElement {
    let coords = (0..alg.rank())
        .map(|_| alg.ring().from_int(rng.random_range(-9i64..=9)))
        .collect();
    alg.element(coords).expect("well-formed coordinates")
}

pub fn random_tuple(alg: &FreeAlgebra, rng: &mut ChaCha8Rng) -> Vec<AlgebraElement> {
    (0..alg.rank()).map(|_| random_element(alg, rng)).collect()
}

/// A random invariant supported on a few orbits with small coefficients.
pub fn random_invariant(alg: &FreeAlgebra, rng: &mut ChaCha8Rng) -> SymmetricInvariant {
    let ring = alg.ring();
    let mut inv = SymmetricInvariant::zero(alg.rank());
    for alpha in MultiDegree::enumerate(alg.rank()) {
        if rng.random_range(0..3) == 0 {
            inv.add_term(ring, alpha, ring.from_int(rng.random_range(-4i64..=4)));
        }
    }
    inv
}

/// Dense element of `A^⊗n`: entry `f` is the coefficient of
/// `θ_{f(1)} ⊗ ⋯ ⊗ θ_{f(n)}`, addressed in mixed radix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseTensor {
    pub n: usize,
    pub entries: Vec<Elem>,
}

fn index_of(n: usize, f: &[usize]) -> usize {
    f.iter().fold(0, |acc, &d| acc * n + d)
}

fn tuple_of(n: usize, mut idx: usize) -> Vec<usize> {
    let mut f = vec![0usize; n];
    for slot in (0..n).rev() {
        f[slot] = idx % n;
        idx /= n;
    }
    f
}

impl DenseTensor {
    pub fn zero(alg: &FreeAlgebra) -> Self {
        let n = alg.rank();
        DenseTensor {
            n,
            entries: vec![alg.ring().zero(); n.pow(n as u32)],
        }
    }

    pub fn from_pure(alg: &FreeAlgebra, elems: &[AlgebraElement]) -> Self {
        let n = alg.rank();
        assert_eq!(elems.len(), n);
        let ring = alg.ring();
        let mut out = DenseTensor::zero(alg);
        for idx in 0..out.entries.len() {
            let f = tuple_of(n, idx);
            let mut prod = ring.one();
            for (slot, &j) in f.iter().enumerate() {
                prod = ring.mul(&prod, &elems[slot].coords[j]);
                if ring.is_zero(&prod) {
                    break;
                }
            }
            out.entries[idx] = prod;
        }
        out
    }

    pub fn add(&self, other: &Self, alg: &FreeAlgebra) -> Self {
        let ring = alg.ring();
        DenseTensor {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| ring.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Elem, alg: &FreeAlgebra) -> Self {
        let ring = alg.ring();
        DenseTensor {
            n: self.n,
            entries: self.entries.iter().map(|a| ring.mul(a, c)).collect(),
        }
    }

    /// Product in `A^⊗n`: slotwise algebra products expanded through the
    /// structure constants.
    pub fn mul(&self, other: &Self, alg: &FreeAlgebra) -> Self {
        let n = self.n;
        let ring = alg.ring();
        let mut out = DenseTensor::zero(alg);
        for (fi, cf) in self.entries.iter().enumerate() {
            if ring.is_zero(cf) {
                continue;
            }
            let f = tuple_of(n, fi);
            for (gi, cg) in other.entries.iter().enumerate() {
                if ring.is_zero(cg) {
                    continue;
                }
                let g = tuple_of(n, gi);
                let cfg = ring.mul(cf, cg);
                // DFS over the target index in each slot.
                fn rec(
                    alg: &FreeAlgebra,
                    f: &[usize],
                    g: &[usize],
                    slot: usize,
                    acc: &Elem,
                    idx: usize,
                    out: &mut Vec<Elem>,
                ) {
                    let ring = alg.ring();
                    let n = alg.rank();
                    if slot == n {
                        out[idx] = ring.add(&out[idx], acc);
                        return;
                    }
                    for k in 0..n {
                        let c = alg.structure_constant(f[slot], g[slot], k);
                        if ring.is_zero(c) {
                            continue;
                        }
                        let next = ring.mul(acc, c);
                        rec(alg, f, g, slot + 1, &next, idx * n + k, out);
                    }
                }
                rec(alg, &f, &g, 0, &cfg, 0, &mut out.entries);
            }
        }
        out
    }

    /// Reads off orbit coordinates, verifying the tensor is symmetric.
    pub fn to_symmetric(&self, alg: &FreeAlgebra) -> Option<SymmetricInvariant> {
        let n = self.n;
        let ring = alg.ring();
        let mut inv = SymmetricInvariant::zero(n);
        for alpha in MultiDegree::enumerate(n) {
            let rep = alpha.representative();
            let value = &self.entries[index_of(n, &rep)];
            for perm in distinct_permutations(&rep) {
                if &self.entries[index_of(n, &perm)] != value {
                    return None;
                }
            }
            inv.add_term(ring, alpha, value.clone());
        }
        Some(inv)
    }

    pub fn from_symmetric(alg: &FreeAlgebra, inv: &SymmetricInvariant) -> Self {
        let n = alg.rank();
        let ring = alg.ring();
        let mut out = DenseTensor::zero(alg);
        for (alpha, c) in inv.terms() {
            for perm in distinct_permutations(&alpha.representative()) {
                let idx = index_of(n, &perm);
                out.entries[idx] = ring.add(&out.entries[idx], c);
            }
        }
        out
    }

    /// Rebuilds the dense tensor of an alternating invariant from its orbit
    /// coordinates (even/odd halves of the basis orbit plus the symmetric
    /// rest).
    pub fn from_alternating(alg: &FreeAlgebra, inv: &AlternatingInvariant) -> Self {
        let sym = DenseTensor::from_symmetric(alg, &inv.sym);
        let basis = alg.basis();
        let even = gamma_dense(alg, &basis, PermParity::Even).scale(&inv.c_plus, alg);
        let odd = gamma_dense(alg, &basis, PermParity::Odd).scale(&inv.c_minus, alg);
        sym.add(&even, alg).add(&odd, alg)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum PermParity {
    All,
    Even,
    Odd,
}

/// `Σ_σ a_{σ(1)} ⊗ ⋯ ⊗ a_{σ(n)}` over the chosen class of permutations,
/// computed entirely in the dense model.
pub fn gamma_dense(alg: &FreeAlgebra, tuple: &[AlgebraElement], parity: PermParity) -> DenseTensor {
    use itertools::Itertools;
    let n = alg.rank();
    let mut out = DenseTensor::zero(alg);
    for perm in (0..n).permutations(n) {
        let p = Permutation::from_images(perm.clone()).expect("permutation");
        let keep = match parity {
            PermParity::All => true,
            PermParity::Even => p.is_even(),
            PermParity::Odd => !p.is_even(),
        };
        if !keep {
            continue;
        }
        let permuted: Vec<AlgebraElement> = (0..n).map(|i| tuple[perm[i]].clone()).collect();
        out = out.add(&DenseTensor::from_pure(alg, &permuted), alg);
    }
    out
}

/// All distinct permutations of a multiset.
pub fn distinct_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(items.len());
    fn rec(remaining: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining.is_empty() {
            out.push(cur.clone());
            return;
        }
        let mut last: Option<usize> = None;
        for idx in 0..remaining.len() {
            let v = remaining[idx];
            if last == Some(v) {
                continue;
            }
            last = Some(v);
            remaining.remove(idx);
            cur.push(v);
            rec(remaining, cur, out);
            cur.pop();
            remaining.insert(idx, v);
        }
    }
    rec(&mut sorted, &mut cur, &mut out);
    out
}
