//! The ring homomorphism from symmetric invariant tensors to the base ring.
//!
//! For a rank-`n` algebra `A` with basis `θ`, the symmetric invariants of
//! `A^⊗n` have a basis of orbit sums `γ^α(θ)` indexed by multidegrees `α`
//! (how many tensor slots carry each basis vector). The homomorphism `Φ`
//! sends `γ^α(θ)` to the coefficient of `λ^α` in the norm form
//! `det(Σᵢ λᵢ·M_{θᵢ})`, and `a ⊗ ⋯ ⊗ a` to the norm of `a`. Everything here
//! is computed division-free: from the symbolic norm form in general, and
//! for the all-ones multidegree by inclusion-exclusion over 2ⁿ determinants.
//!
//! [`ferrand_via_rewriting`] evaluates the same values by a completely
//! different route (rewriting orbit sums as polynomials in the elementary
//! invariants `e_k`, then substituting characteristic-polynomial
//! coefficients); it serves as an independent oracle at small ranks.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use crate::algebra::{AlgebraElement, FreeAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::ring::{Elem, Monomial, MultiPoly, PolyRing, Ring};

/// Symbolic norm forms in `n` variables are capped at this rank by default.
pub const NORM_FORM_CAP: usize = 8;

/// The rewriting oracle is intended for desk-scale cross-checks only.
pub const REWRITE_CAP: usize = 4;

/// A multidegree over the basis positions of a rank-`n` algebra: how many of
/// the `n` tensor slots carry each basis vector. Entries sum to `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiDegree(Vec<u32>);

impl MultiDegree {
    pub fn new(rank: usize, degrees: Vec<u32>) -> Result<Self> {
        if degrees.len() != rank {
            return Err(Error::DimensionMismatch(format!(
                "multidegree of length {} for rank {}",
                degrees.len(),
                rank
            )));
        }
        let total: u32 = degrees.iter().sum();
        if total as usize != rank {
            return Err(Error::DimensionMismatch(format!(
                "multidegree entries sum to {total}, expected {rank}"
            )));
        }
        Ok(MultiDegree(degrees))
    }

    pub fn from_counts(rank: usize, degrees: &[u32]) -> Result<Self> {
        MultiDegree::new(rank, degrees.to_vec())
    }

    pub fn all_ones(rank: usize) -> Self {
        MultiDegree(vec![1; rank])
    }

    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&d| d == 1)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    /// The weakly increasing representative tuple of this orbit: position
    /// indices repeated with their multiplicities.
    pub fn representative(&self) -> Vec<usize> {
        let mut rep = Vec::with_capacity(self.0.len());
        for (i, &d) in self.0.iter().enumerate() {
            for _ in 0..d {
                rep.push(i);
            }
        }
        rep
    }

    /// All multidegrees of the given rank (weak compositions of n into n
    /// parts).
    pub fn enumerate(rank: usize) -> Vec<MultiDegree> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; rank];
        fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiDegree>) {
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.push(MultiDegree(cur.clone()));
                return;
            }
            for d in 0..=left {
                cur[pos] = d;
                rec(pos + 1, left - d, cur, out);
            }
        }
        if rank > 0 {
            rec(0, rank as u32, &mut cur, &mut out);
        }
        out
    }
}

/// An element of the symmetric invariants of `A^⊗n`, stored as coefficients
/// on the orbit basis `γ^α(θ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricInvariant {
    rank: usize,
    terms: BTreeMap<MultiDegree, Elem>,
}

impl SymmetricInvariant {
    pub fn zero(rank: usize) -> Self {
        SymmetricInvariant {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiDegree, &Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &MultiDegree, ring: &Ring) -> Elem {
        self.terms
            .get(alpha)
            .cloned()
            .unwrap_or_else(|| ring.zero())
    }

    pub fn add_term(&mut self, ring: &Ring, alpha: MultiDegree, c: Elem) {
        use std::collections::btree_map::Entry;
        assert_eq!(alpha.0.len(), self.rank, "multidegree rank mismatch");
        match self.terms.entry(alpha) {
            Entry::Vacant(v) => {
                if !ring.is_zero(&c) {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = ring.add(o.get(), &c);
                if ring.is_zero(&sum) {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self, ring: &Ring) -> Self {
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(ring, a.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Elem, ring: &Ring) -> Self {
        let mut out = SymmetricInvariant::zero(self.rank);
        for (a, v) in &self.terms {
            out.add_term(ring, a.clone(), ring.mul(v, c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Indicator invariant: coefficient 1 on a single orbit.
    pub fn indicator(ring: &Ring, alpha: MultiDegree) -> Self {
        let rank = alpha.0.len();
        let mut inv = SymmetricInvariant::zero(rank);
        inv.add_term(ring, alpha, ring.one());
        inv
    }
}

/// The norm of `λ₁θ₁ + ⋯ + λₙθₙ` as a polynomial over the auxiliary
/// variables; homogeneous of total degree `n`.
#[derive(Clone, Debug)]
pub struct NormForm {
    pub vars: PolyRing,
    pub poly: Elem,
}

impl NormForm {
    pub fn coeff(&self, alpha: &MultiDegree) -> Elem {
        let Elem::Poly(p) = &self.poly else {
            unreachable!("norm form is a polynomial")
        };
        p.coeff(&Monomial(alpha.0.clone()), &self.vars.base)
    }

    /// Substitutes base-ring values for the auxiliary variables.
    pub fn evaluate(&self, values: &[Elem]) -> Elem {
        let Elem::Poly(p) = &self.poly else {
            unreachable!("norm form is a polynomial")
        };
        p.evaluate(values, &self.vars.base)
    }
}

/// Computes `det(Σᵢ λᵢ·M_{θᵢ})` symbolically. Capped at [`NORM_FORM_CAP`].
pub fn norm_form(a: &FreeAlgebra) -> Result<NormForm> {
    norm_form_capped(a, NORM_FORM_CAP)
}

pub fn norm_form_capped(a: &FreeAlgebra, cap: usize) -> Result<NormForm> {
    let n = a.rank();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "symbolic norm form".into(),
            requested: n,
            cap,
        });
    }
    let base = a.ring().clone();
    let names: Vec<String> = (1..=n).map(|i| format!("l{i}")).collect();
    let lring = Ring::poly(base.clone(), names.clone());
    let mats: Vec<Matrix> = (0..n).map(|i| a.mult_matrix(&a.basis_element(i))).collect();
    let mut entries = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let mut terms = BTreeMap::new();
            for (i, m) in mats.iter().enumerate() {
                let v = m.at(r, c);
                if !base.is_zero(v) {
                    let mut exps = vec![0u32; n];
                    exps[i] = 1;
                    terms.insert(Monomial(exps), v.clone());
                }
            }
            entries.push(Elem::Poly(MultiPoly { terms }));
        }
    }
    let det = linalg::det_division_free(&Matrix::new(lring.clone(), n, n, entries)?)?;
    let Ring::Polynomial(pr) = lring else { unreachable!() };
    Ok(NormForm {
        vars: *pr,
        poly: det,
    })
}

/// `Φ(γ^α(θ))`: the coefficient of `λ^α` in the norm form. The all-ones
/// multidegree avoids the symbolic expansion by polarization.
pub fn phi_orbit(a: &FreeAlgebra, alpha: &MultiDegree) -> Result<Elem> {
    phi_orbit_capped(a, alpha, NORM_FORM_CAP, linalg::POLARIZATION_CAP)
}

pub fn phi_orbit_capped(
    a: &FreeAlgebra,
    alpha: &MultiDegree,
    symbolic_cap: usize,
    polarization_cap: usize,
) -> Result<Elem> {
    if alpha.degrees().len() != a.rank() {
        return Err(Error::DimensionMismatch(
            "multidegree does not match algebra rank".into(),
        ));
    }
    if alpha.is_all_ones() {
        let mats: Vec<Matrix> = (0..a.rank())
            .map(|i| a.mult_matrix(&a.basis_element(i)))
            .collect();
        return linalg::multilinear_coeff_capped(&mats, polarization_cap);
    }
    Ok(norm_form_capped(a, symbolic_cap)?.coeff(alpha))
}

/// `Φ(γ^α(θ))` forced through the symbolic norm form, for cross-checks.
pub fn phi_orbit_symbolic(a: &FreeAlgebra, alpha: &MultiDegree) -> Result<Elem> {
    Ok(norm_form(a)?.coeff(alpha))
}

/// `Φ` applied to a symmetric invariant in orbit coordinates.
pub fn phi(a: &FreeAlgebra, t: &SymmetricInvariant) -> Result<Elem> {
    phi_capped(a, t, NORM_FORM_CAP, linalg::POLARIZATION_CAP)
}

pub fn phi_capped(
    a: &FreeAlgebra,
    t: &SymmetricInvariant,
    symbolic_cap: usize,
    polarization_cap: usize,
) -> Result<Elem> {
    if t.rank() != a.rank() {
        return Err(Error::DimensionMismatch(
            "invariant does not match algebra rank".into(),
        ));
    }
    let ring = a.ring();
    let needs_form = t.terms().any(|(alpha, _)| !alpha.is_all_ones());
    let form = if needs_form {
        Some(norm_form_capped(a, symbolic_cap)?)
    } else {
        None
    };
    let mut acc = ring.zero();
    for (alpha, c) in t.terms() {
        let value = match &form {
            Some(f) => f.coeff(alpha),
            None => phi_orbit_capped(a, alpha, symbolic_cap, polarization_cap)?,
        };
        acc = ring.add(&acc, &ring.mul(c, &value));
    }
    Ok(acc)
}

/// The elementary invariant `e_k(x)`: the sum over all ways of placing `x`
/// in `k` of the `n` tensor slots and `1` in the rest, expanded on the orbit
/// basis.
pub fn elementary_invariant(
    a: &FreeAlgebra,
    x: &AlgebraElement,
    k: usize,
) -> Result<SymmetricInvariant> {
    let n = a.rank();
    if k == 0 || k > n {
        return Err(Error::DimensionMismatch(format!(
            "elementary invariant index {k} out of range 1..={n}"
        )));
    }
    let ring = a.ring();
    let unit = a.unit_element();
    let mut inv = SymmetricInvariant::zero(n);
    for alpha in MultiDegree::enumerate(n) {
        // Coefficient of the representative pure tensor θ_f: the z^k
        // coefficient of Π_i (u_{f(i)} + z·c_{f(i)}).
        let mut zpoly: Vec<Elem> = vec![ring.one()];
        for &j in &alpha.representative() {
            let u = &unit.coords[j];
            let c = &x.coords[j];
            let mut next = vec![ring.zero(); zpoly.len() + 1];
            for (d, cur) in zpoly.iter().enumerate() {
                next[d] = ring.add(&next[d], &ring.mul(cur, u));
                next[d + 1] = ring.add(&next[d + 1], &ring.mul(cur, c));
            }
            zpoly = next;
        }
        inv.add_term(ring, alpha, zpoly[k].clone());
    }
    Ok(inv)
}

/// Expands a tuple of elements into orbit coordinates, calling `leaf` with
/// each index function's count vector, the function itself, and its
/// accumulated coefficient product. Zero branches are pruned.
pub(crate) fn expand_tuple(
    ring: &Ring,
    coords: &[&[Elem]],
    mut leaf: impl FnMut(&[u32], &[usize], &Elem),
) {
    let n = coords.len();
    let mut counts = vec![0u32; coords[0].len()];
    let mut picks = vec![0usize; n];
    fn rec(
        ring: &Ring,
        coords: &[&[Elem]],
        pos: usize,
        acc: &Elem,
        counts: &mut Vec<u32>,
        picks: &mut Vec<usize>,
        leaf: &mut impl FnMut(&[u32], &[usize], &Elem),
    ) {
        if pos == coords.len() {
            leaf(counts, picks, acc);
            return;
        }
        for (j, c) in coords[pos].iter().enumerate() {
            if ring.is_zero(c) {
                continue;
            }
            let next = ring.mul(acc, c);
            counts[j] += 1;
            picks[pos] = j;
            rec(ring, coords, pos + 1, &next, counts, picks, leaf);
            counts[j] -= 1;
        }
    }
    let one = ring.one();
    rec(ring, coords, 0, &one, &mut counts, &mut picks, &mut leaf);
}

/// `γ^{Σₙ}(a₁,…,aₙ) = Σ_{σ∈Σₙ} a_{σ(1)}⊗⋯⊗a_{σ(n)}` in orbit coordinates:
/// each index function `f` contributes `Πᵢ c_{i,f(i)}` with multiplicity
/// `|Stab(f)|`, the product of factorials of its fibre sizes.
pub fn gamma_sym(a: &FreeAlgebra, tuple: &[AlgebraElement]) -> Result<SymmetricInvariant> {
    let n = a.rank();
    if tuple.len() != n || tuple.iter().any(|e| e.coords.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "gamma needs an {n}-tuple of rank-{n} elements, got {} entries",
            tuple.len()
        )));
    }
    let ring = a.ring().clone();
    let coords: Vec<&[Elem]> = tuple.iter().map(|e| e.coords.as_slice()).collect();
    let mut inv = SymmetricInvariant::zero(n);
    expand_tuple(&ring, &coords, |counts, _picks, prod| {
        let stab: BigInt = counts
            .iter()
            .map(|&c| factorial(c))
            .product();
        let alpha = MultiDegree(counts.to_vec());
        inv.add_term(&ring, alpha, ring.mul(prod, &ring.from_int(stab)));
    });
    Ok(inv)
}

pub(crate) fn factorial(k: u32) -> BigInt {
    (1..=i64::from(k)).map(BigInt::from).product()
}

/// Parity of an index tuple viewed as a permutation; true means odd.
pub(crate) fn inversion_parity(picks: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..picks.len() {
        for j in i + 1..picks.len() {
            if picks[i] > picks[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// Evaluates `Φ(γ^α(θ))` by the inductive elementary-symmetric rewriting:
/// peel off the product `Π e_{α(i)}(θᵢ)`, whose value is `Π s_{α(i)}(θᵢ)`,
/// subtract the lower-order orbit terms of its expansion, and recurse. The
/// recursion is over multidegrees on the extended family `(1, θ₁, …, θₙ)`
/// and terminates because every correction term carries strictly more unit
/// slots. Intended as an independent oracle; capped at [`REWRITE_CAP`].
pub fn ferrand_via_rewriting(a: &FreeAlgebra, alpha: &MultiDegree) -> Result<Elem> {
    let n = a.rank();
    if n > REWRITE_CAP {
        return Err(Error::CapExceeded {
            what: "elementary-symmetric rewriting".into(),
            requested: n,
            cap: REWRITE_CAP,
        });
    }
    if alpha.degrees().len() != n {
        return Err(Error::DimensionMismatch(
            "multidegree does not match algebra rank".into(),
        ));
    }
    let mut fam = vec![0u32; n + 1];
    fam[1..].copy_from_slice(alpha.degrees());
    let mut memo = HashMap::new();
    rewrite(a, &fam, &mut memo)
}

type FamDeg = Vec<u32>;

/// Product-side invariant over the family `(1, θ₁, …, θₙ)`, indexed by
/// family multidegrees.
type FamInvariant = BTreeMap<FamDeg, Elem>;

fn rewrite(a: &FreeAlgebra, fam: &FamDeg, memo: &mut HashMap<FamDeg, Elem>) -> Result<Elem> {
    if let Some(v) = memo.get(fam) {
        return Ok(v.clone());
    }
    let ring = a.ring().clone();
    let n = a.rank();
    let unit_slots = fam[0];
    if unit_slots as usize == n {
        memo.insert(fam.clone(), ring.one());
        return Ok(ring.one());
    }
    // Value side: Π s_{α(i)}(θᵢ).
    let mut value = ring.one();
    #[allow(clippy::needless_range_loop)]
    for i in 1..=n {
        if fam[i] > 0 {
            let s = a.s_k(&a.basis_element(i - 1), fam[i] as usize)?;
            value = ring.mul(&value, &s);
        }
    }
    // Tensor side: the product of the matching elementary invariants.
    let mut tensor: FamInvariant = BTreeMap::new();
    let mut empty = vec![0u32; n + 1];
    empty[0] = n as u32;
    tensor.insert(empty, ring.one());
    for i in 1..=n {
        if fam[i] > 0 {
            let mut factor: FamInvariant = BTreeMap::new();
            let mut deg = vec![0u32; n + 1];
            deg[i] = fam[i];
            deg[0] = n as u32 - fam[i];
            factor.insert(deg, ring.one());
            tensor = fam_mul(a, &tensor, &factor)?;
        }
    }
    let lead = tensor.remove(fam).unwrap_or_else(|| ring.zero());
    if !ring.is_one(&lead) {
        return Err(Error::Internal(format!(
            "rewriting expansion has leading coefficient {lead:?}, expected 1"
        )));
    }
    let mut result = value;
    for (deg, coeff) in tensor {
        if deg[0] <= unit_slots {
            return Err(Error::Internal(
                "rewriting correction term does not gain unit slots".into(),
            ));
        }
        let sub = rewrite(a, &deg, memo)?;
        result = ring.sub(&result, &ring.mul(&coeff, &sub));
    }
    memo.insert(fam.clone(), result.clone());
    Ok(result)
}

/// Product of two family-orbit invariants. Pure tensors multiply slotwise;
/// slot products of two non-unit family members re-expand through the
/// structure constants. Only weakly increasing tuples are accumulated, which
/// reads off the orbit coefficients without any division.
fn fam_mul(a: &FreeAlgebra, x: &FamInvariant, y: &FamInvariant) -> Result<FamInvariant> {
    let ring = a.ring().clone();
    let n = a.rank();
    let mut out: FamInvariant = BTreeMap::new();
    for (dx, cx) in x {
        for (dy, cy) in y {
            let cxy = ring.mul(cx, cy);
            if ring.is_zero(&cxy) {
                continue;
            }
            for s in distinct_tuples(dx) {
                for t in distinct_tuples(dy) {
                    // Slotwise family products, each a vector over the family.
                    let combos: Vec<Vec<(usize, Elem)>> = (0..n)
                        .map(|slot| fam_slot_product(a, s[slot], t[slot]))
                        .collect();
                    expand_sorted(&ring, &combos, &cxy, &mut out);
                }
            }
        }
    }
    Ok(out)
}

/// The product of family members `i` and `j` (0 is the unit), as a sparse
/// vector over family indices.
fn fam_slot_product(a: &FreeAlgebra, i: usize, j: usize) -> Vec<(usize, Elem)> {
    let ring = a.ring();
    match (i, j) {
        (0, 0) => vec![(0, ring.one())],
        (0, k) | (k, 0) => vec![(k, ring.one())],
        (i, j) => (0..a.rank())
            .filter_map(|k| {
                let c = a.structure_constant(i - 1, j - 1, k);
                if ring.is_zero(c) {
                    None
                } else {
                    Some((k + 1, c.clone()))
                }
            })
            .collect(),
    }
}

/// Expands a slotwise product, accumulating only weakly increasing tuples.
fn expand_sorted(
    ring: &Ring,
    combos: &[Vec<(usize, Elem)>],
    scale: &Elem,
    out: &mut FamInvariant,
) {
    fn rec(
        ring: &Ring,
        combos: &[Vec<(usize, Elem)>],
        pos: usize,
        last: usize,
        acc: &Elem,
        tuple: &mut Vec<usize>,
        out: &mut FamInvariant,
    ) {
        if pos == combos.len() {
            let nfam = combos.len() + 1;
            let mut deg = vec![0u32; nfam];
            for &idx in tuple.iter() {
                deg[idx] += 1;
            }
            use std::collections::btree_map::Entry;
            match out.entry(deg) {
                Entry::Vacant(v) => {
                    if !ring.is_zero(acc) {
                        v.insert(acc.clone());
                    }
                }
                Entry::Occupied(mut o) => {
                    let sum = ring.add(o.get(), acc);
                    if ring.is_zero(&sum) {
                        o.remove();
                    } else {
                        *o.get_mut() = sum;
                    }
                }
            }
            return;
        }
        for (idx, c) in &combos[pos] {
            if *idx < last {
                continue; // not the sorted representative
            }
            let next = ring.mul(acc, c);
            if ring.is_zero(&next) {
                continue;
            }
            tuple.push(*idx);
            rec(ring, combos, pos + 1, *idx, &next, tuple, out);
            tuple.pop();
        }
    }
    let mut tuple = Vec::with_capacity(combos.len());
    rec(ring, combos, 0, 0, scale, &mut tuple, out);
}

/// All distinct tuples (weakly increasing first, then permutations) with the
/// given family content.
fn distinct_tuples(deg: &FamDeg) -> Vec<Vec<usize>> {
    let mut items = Vec::new();
    for (i, &d) in deg.iter().enumerate() {
        for _ in 0..d {
            items.push(i);
        }
    }
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
    rec(&mut items, &mut cur, &mut out);
    out
}
