//! Finite free commutative algebras presented by structure constants.
//!
//! A [`FreeAlgebra`] of rank `n` over a coefficient ring stores the full
//! `n×n×n` multiplication table of a chosen module basis `θ₁,…,θₙ` together
//! with the coordinates of the unit. Construction always verifies
//! commutativity, unitality and associativity of the table; a bad table is
//! rejected rather than allowed to corrupt every later computation.

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::ring::{Elem, Ring, RingMap};

/// Coordinates of an algebra element in the distinguished basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    pub coords: Vec<Elem>,
}

impl AlgebraElement {
    pub fn new(coords: Vec<Elem>) -> Self {
        AlgebraElement { coords }
    }
}

/// A commutative algebra, free of rank `n` as a module over its coefficient
/// ring, with multiplication given by structure constants:
/// `θᵢ·θⱼ = Σₖ c[i][j][k]·θₖ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAlgebra {
    ring: Ring,
    rank: usize,
    /// Row-major `[i][j][k]` table of structure constants.
    structure: Vec<Elem>,
    unit: Vec<Elem>,
}

/// Outcome of validating an algebra's multiplication table.
#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl FreeAlgebra {
    /// Builds an algebra from its multiplication table, rejecting tables that
    /// fail the commutativity, unit or associativity axioms.
    pub fn new(ring: Ring, rank: usize, structure: Vec<Elem>, unit: Vec<Elem>) -> Result<Self> {
        ring.validate()?;
        if rank == 0 {
            return Err(Error::RankTooSmall { min: 1, got: 0 });
        }
        if structure.len() != rank * rank * rank {
            return Err(Error::DimensionMismatch(format!(
                "structure table needs {} entries, got {}",
                rank * rank * rank,
                structure.len()
            )));
        }
        if unit.len() != rank {
            return Err(Error::DimensionMismatch(format!(
                "unit vector needs {} entries, got {}",
                rank,
                unit.len()
            )));
        }
        for e in structure.iter().chain(&unit) {
            if !ring.contains(e) {
                return Err(Error::DimensionMismatch(format!(
                    "entry {e:?} is not an element of {ring}"
                )));
            }
        }
        let alg = FreeAlgebra {
            ring,
            rank,
            structure,
            unit,
        };
        let report = alg.check_axioms();
        if !report.ok() {
            return Err(Error::AxiomViolation(report.violations.join("; ")));
        }
        Ok(alg)
    }

    /// Builds an algebra without running the axiom checks. Intended for
    /// diagnostics ([`FreeAlgebra::check_axioms`] on untrusted tables); all
    /// computation entry points assume a valid table.
    pub fn new_unchecked(ring: Ring, rank: usize, structure: Vec<Elem>, unit: Vec<Elem>) -> Result<Self> {
        ring.validate()?;
        if rank == 0 {
            return Err(Error::RankTooSmall { min: 1, got: 0 });
        }
        if structure.len() != rank * rank * rank || unit.len() != rank {
            return Err(Error::DimensionMismatch("structure table shape".into()));
        }
        Ok(FreeAlgebra {
            ring,
            rank,
            structure,
            unit,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Elem {
        &self.structure[(i * self.rank + j) * self.rank + k]
    }

    /// Checks the three multiplication-table axioms and reports every
    /// violation found (capped per axiom to keep reports readable).
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.rank;
        let mut report = AxiomReport::default();
        'comm: for i in 0..n {
            for j in 0..i {
                for k in 0..n {
                    if self.structure_constant(i, j, k) != self.structure_constant(j, i, k) {
                        report
                            .violations
                            .push(format!("not commutative at (θ{},θ{})", i + 1, j + 1));
                        break 'comm;
                    }
                }
            }
        }
        let unit = AlgebraElement::new(self.unit.clone());
        for j in 0..n {
            let prod = self.mul_raw(&unit, &self.basis_element(j));
            if prod.coords != self.basis_element(j).coords {
                report
                    .violations
                    .push(format!("unit does not fix θ{}", j + 1));
                break;
            }
        }
        'assoc: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ij = self.mul_raw(&self.basis_element(i), &self.basis_element(j));
                    let left = self.mul_raw(&ij, &self.basis_element(k));
                    let jk = self.mul_raw(&self.basis_element(j), &self.basis_element(k));
                    let right = self.mul_raw(&self.basis_element(i), &jk);
                    if left != right {
                        report.violations.push(format!(
                            "not associative at (θ{},θ{},θ{})",
                            i + 1,
                            j + 1,
                            k + 1
                        ));
                        break 'assoc;
                    }
                }
            }
        }
        report
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement::new(vec![self.ring.zero(); self.rank])
    }

    pub fn unit_element(&self) -> AlgebraElement {
        AlgebraElement::new(self.unit.clone())
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut coords = vec![self.ring.zero(); self.rank];
        coords[i] = self.ring.one();
        AlgebraElement::new(coords)
    }

    pub fn basis(&self) -> Vec<AlgebraElement> {
        (0..self.rank).map(|i| self.basis_element(i)).collect()
    }

    /// Validates coordinates against the rank and the coefficient ring.
    pub fn element(&self, coords: Vec<Elem>) -> Result<AlgebraElement> {
        if coords.len() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "element needs {} coordinates, got {}",
                self.rank,
                coords.len()
            )));
        }
        for c in &coords {
            if !self.ring.contains(c) {
                return Err(Error::DimensionMismatch(format!(
                    "coordinate {c:?} is not an element of {}",
                    self.ring
                )));
            }
        }
        Ok(AlgebraElement::new(coords))
    }

    /// Convenience constructor from small integers.
    pub fn element_from_ints(&self, coords: &[i64]) -> Result<AlgebraElement> {
        self.element(coords.iter().map(|&c| self.ring.from_int(c)).collect())
    }

    pub fn add(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(
            x.coords
                .iter()
                .zip(&y.coords)
                .map(|(a, b)| self.ring.add(a, b))
                .collect(),
        )
    }

    pub fn sub(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(
            x.coords
                .iter()
                .zip(&y.coords)
                .map(|(a, b)| self.ring.sub(a, b))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Elem, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(x.coords.iter().map(|a| self.ring.mul(c, a)).collect())
    }

    fn mul_raw(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let n = self.rank;
        let r = &self.ring;
        let mut out = vec![r.zero(); n];
        for i in 0..n {
            if r.is_zero(&x.coords[i]) {
                continue;
            }
            for j in 0..n {
                if r.is_zero(&y.coords[j]) {
                    continue;
                }
                let xy = r.mul(&x.coords[i], &y.coords[j]);
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.structure_constant(i, j, k);
                    if !r.is_zero(c) {
                        *slot = r.add(slot, &r.mul(&xy, c));
                    }
                }
            }
        }
        AlgebraElement::new(out)
    }

    /// Product of two elements, by bilinear contraction with the structure
    /// constants.
    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        if x.coords.len() != self.rank || y.coords.len() != self.rank {
            return Err(Error::DimensionMismatch("element rank mismatch".into()));
        }
        Ok(self.mul_raw(x, y))
    }

    pub fn pow(&self, x: &AlgebraElement, k: u64) -> Result<AlgebraElement> {
        let mut acc = self.unit_element();
        for _ in 0..k {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// Matrix of multiplication by `x` in the distinguished basis; column `j`
    /// holds the coordinates of `x·θⱼ`.
    pub fn mult_matrix(&self, x: &AlgebraElement) -> Matrix {
        let n = self.rank;
        let mut m = Matrix::zero(self.ring.clone(), n, n);
        for j in 0..n {
            let col = self.mul_raw(x, &self.basis_element(j));
            for i in 0..n {
                m.set(i, j, col.coords[i].clone());
            }
        }
        m
    }

    /// Coefficients of the characteristic polynomial of `x`, descending.
    pub fn char_poly_of(&self, x: &AlgebraElement) -> Result<Vec<Elem>> {
        linalg::char_poly(&self.mult_matrix(x))
    }

    pub fn trace(&self, x: &AlgebraElement) -> Elem {
        self.mult_matrix(x).trace()
    }

    pub fn norm(&self, x: &AlgebraElement) -> Result<Elem> {
        linalg::det(&self.mult_matrix(x))
    }

    /// The signed characteristic-polynomial coefficient `sₖ`, so that the
    /// characteristic polynomial is `λⁿ − s₁λⁿ⁻¹ + ⋯ + (−1)ⁿ sₙ`. `s₁` is the
    /// trace and `sₙ` the norm.
    pub fn s_k(&self, x: &AlgebraElement, k: usize) -> Result<Elem> {
        if k == 0 || k > self.rank {
            return Err(Error::DimensionMismatch(format!(
                "s_k index {k} out of range 1..={}",
                self.rank
            )));
        }
        let coeffs = self.char_poly_of(x)?;
        let c = &coeffs[k];
        Ok(if k.is_multiple_of(2) {
            c.clone()
        } else {
            self.ring.neg(c)
        })
    }

    /// The discriminant bilinear form `det(Tr(aᵢ·bⱼ))` on two `n`-tuples.
    pub fn disc_bilinear(
        &self,
        a: &[AlgebraElement],
        b: &[AlgebraElement],
    ) -> Result<Elem> {
        let n = self.rank;
        if a.len() != n || b.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "discriminant form needs two {n}-tuples"
            )));
        }
        let mut m = Matrix::zero(self.ring.clone(), n, n);
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                m.set(i, j, self.trace(&self.mul(ai, bj)?));
            }
        }
        linalg::det(&m)
    }

    /// Discriminant of the algebra with respect to its distinguished basis.
    pub fn discriminant(&self) -> Result<Elem> {
        let basis = self.basis();
        self.disc_bilinear(&basis, &basis)
    }

    /// The algebra `R[X]/(p)` for a monic `p`, on the power basis
    /// `1, x, …, xⁿ⁻¹`. Coefficients are given in descending degree.
    pub fn monogenic(ring: Ring, coeffs: &[Elem]) -> Result<Self> {
        ring.validate()?;
        if coeffs.is_empty() || !ring.is_one(&coeffs[0]) {
            return Err(Error::NonMonic);
        }
        let n = coeffs.len() - 1;
        if n == 0 {
            return Err(Error::RankTooSmall { min: 1, got: 0 });
        }
        // Coordinates of xⁿ from the relation p(x) = 0.
        let head: Vec<Elem> = (0..n).map(|k| ring.neg(&coeffs[n - k])).collect();
        // powers[m] = coordinates of x^m for m = 0 .. 2n−2.
        let mut powers: Vec<Vec<Elem>> = Vec::with_capacity(2 * n - 1);
        for m in 0..n {
            let mut v = vec![ring.zero(); n];
            v[m] = ring.one();
            powers.push(v);
        }
        for _ in n..(2 * n - 1).max(n) {
            let prev = powers.last().unwrap();
            let carry = prev[n - 1].clone();
            let mut next = vec![ring.zero(); n];
            next[1..n].clone_from_slice(&prev[..n - 1]);
            for k in 0..n {
                next[k] = ring.add(&next[k], &ring.mul(&carry, &head[k]));
            }
            powers.push(next);
        }
        let mut structure = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                structure.extend(powers[i + j].iter().cloned());
            }
        }
        let mut unit = vec![ring.zero(); n];
        unit[0] = ring.one();
        FreeAlgebra::new(ring, n, structure, unit)
    }

    /// Same as [`FreeAlgebra::monogenic`], from small integer coefficients.
    pub fn monogenic_from_ints(ring: Ring, coeffs: &[i64]) -> Result<Self> {
        let coeffs: Vec<Elem> = coeffs.iter().map(|&c| ring.from_int(c)).collect();
        FreeAlgebra::monogenic(ring, &coeffs)
    }

    /// The product algebra `A × B` on the concatenated bases.
    pub fn product(a: &FreeAlgebra, b: &FreeAlgebra) -> Result<FreeAlgebra> {
        if a.ring != b.ring {
            return Err(Error::DimensionMismatch(
                "product factors over different rings".into(),
            ));
        }
        let ring = a.ring.clone();
        let n = a.rank + b.rank;
        let mut structure = vec![ring.zero(); n * n * n];
        let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
        for i in 0..a.rank {
            for j in 0..a.rank {
                for k in 0..a.rank {
                    structure[idx(i, j, k)] = a.structure_constant(i, j, k).clone();
                }
            }
        }
        for i in 0..b.rank {
            for j in 0..b.rank {
                for k in 0..b.rank {
                    structure[idx(a.rank + i, a.rank + j, a.rank + k)] =
                        b.structure_constant(i, j, k).clone();
                }
            }
        }
        let mut unit = a.unit.clone();
        unit.extend(b.unit.iter().cloned());
        FreeAlgebra::new(ring, n, structure, unit)
    }

    /// The split algebra `Rⁿ` with its idempotent basis.
    pub fn split(ring: Ring, n: usize) -> Result<FreeAlgebra> {
        if n == 0 {
            return Err(Error::RankTooSmall { min: 1, got: 0 });
        }
        let mut structure = vec![ring.zero(); n * n * n];
        for i in 0..n {
            structure[(i * n + i) * n + i] = ring.one();
        }
        let unit = vec![ring.one(); n];
        FreeAlgebra::new(ring, n, structure, unit)
    }

    /// `R ⊕ E` with `E` spanned by `k` generators multiplying to zero; the
    /// result has rank `k + 1` on the basis `(1, e₁, …, e_k)`.
    pub fn square_zero(ring: Ring, k: usize) -> Result<FreeAlgebra> {
        let n = k + 1;
        let mut structure = vec![ring.zero(); n * n * n];
        let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
        for j in 0..n {
            structure[idx(0, j, j)] = ring.one();
            structure[idx(j, 0, j)] = ring.one();
        }
        let mut unit = vec![ring.zero(); n];
        unit[0] = ring.one();
        FreeAlgebra::new(ring, n, structure, unit)
    }

    /// Applies a coefficient-ring homomorphism to the whole table.
    pub fn base_change(&self, map: &RingMap) -> Result<FreeAlgebra> {
        if map.source() != self.ring {
            return Err(Error::UnsupportedMap(format!(
                "map expects source {}, algebra is over {}",
                map.source(),
                self.ring
            )));
        }
        let structure = self
            .structure
            .iter()
            .map(|e| map.apply(e))
            .collect::<Result<Vec<_>>>()?;
        let unit = self
            .unit
            .iter()
            .map(|e| map.apply(e))
            .collect::<Result<Vec<_>>>()?;
        FreeAlgebra::new(map.target(), self.rank, structure, unit)
    }

    /// Maps an element along the same homomorphism used for base change.
    pub fn map_element(&self, map: &RingMap, x: &AlgebraElement) -> Result<AlgebraElement> {
        Ok(AlgebraElement::new(
            x.coords
                .iter()
                .map(|e| map.apply(e))
                .collect::<Result<Vec<_>>>()?,
        ))
    }
}

/// An algebra homomorphism given by the images of the source basis; checked
/// on construction to be unital and multiplicative.
#[derive(Clone, Debug)]
pub struct AlgebraHom {
    source: FreeAlgebra,
    target: FreeAlgebra,
    images: Vec<AlgebraElement>,
}

impl AlgebraHom {
    pub fn new(
        source: FreeAlgebra,
        target: FreeAlgebra,
        images: Vec<AlgebraElement>,
    ) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::DimensionMismatch(
                "homomorphism between algebras over different rings".into(),
            ));
        }
        if images.len() != source.rank {
            return Err(Error::DimensionMismatch(format!(
                "need {} basis images, got {}",
                source.rank,
                images.len()
            )));
        }
        let hom = AlgebraHom {
            source,
            target,
            images,
        };
        let unit_image = hom.apply(&hom.source.unit_element())?;
        if unit_image != hom.target.unit_element() {
            return Err(Error::AxiomViolation("map does not send 1 to 1".into()));
        }
        for i in 0..hom.source.rank {
            for j in 0..=i {
                let lhs = hom.target.mul(&hom.images[i], &hom.images[j])?;
                let prod = hom
                    .source
                    .mul(&hom.source.basis_element(i), &hom.source.basis_element(j))?;
                let rhs = hom.apply(&prod)?;
                if lhs != rhs {
                    return Err(Error::AxiomViolation(format!(
                        "map does not respect θ{}·θ{}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(hom)
    }

    pub fn identity(a: &FreeAlgebra) -> Self {
        AlgebraHom {
            source: a.clone(),
            target: a.clone(),
            images: a.basis(),
        }
    }

    pub fn source(&self) -> &FreeAlgebra {
        &self.source
    }

    pub fn target(&self) -> &FreeAlgebra {
        &self.target
    }

    pub fn basis_image(&self, i: usize) -> &AlgebraElement {
        &self.images[i]
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        if x.coords.len() != self.source.rank {
            return Err(Error::DimensionMismatch("element rank mismatch".into()));
        }
        let mut acc = self.target.zero_element();
        for (c, img) in x.coords.iter().zip(&self.images) {
            acc = self.target.add(&acc, &self.target.scale(c, img));
        }
        Ok(acc)
    }

    /// Conservative check that the map preserves characteristic polynomials:
    /// verified on every basis element and every pairwise sum of basis
    /// elements. Use [`AlgebraHom::is_norm_preserving_on`] to strengthen the
    /// check with extra sample elements.
    pub fn is_norm_preserving(&self) -> Result<bool> {
        if self.source.rank != self.target.rank {
            return Err(Error::DimensionMismatch(
                "norm preservation needs equal ranks".into(),
            ));
        }
        let mut probes = self.source.basis();
        for i in 0..self.source.rank {
            for j in 0..i {
                probes.push(
                    self.source
                        .add(&self.source.basis_element(i), &self.source.basis_element(j)),
                );
            }
        }
        self.is_norm_preserving_on(&probes)
    }

    /// Checks characteristic-polynomial preservation on the given elements.
    pub fn is_norm_preserving_on(&self, probes: &[AlgebraElement]) -> Result<bool> {
        for x in probes {
            let src = self.source.char_poly_of(x)?;
            let dst = self.target.char_poly_of(&self.apply(x)?)?;
            if src != dst {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn binomial(n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::from(0);
        }
        let mut acc = BigInt::from(1);
        for i in 0..k {
            acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        acc
    }

    fn zring() -> Ring {
        Ring::Integers
    }

    fn quadratic() -> FreeAlgebra {
        // Z[x]/(x² − 3x + 2) on the basis (1, x).
        FreeAlgebra::monogenic_from_ints(zring(), &[1, -3, 2]).unwrap()
    }

    fn cyclotomic5() -> FreeAlgebra {
        FreeAlgebra::monogenic_from_ints(zring(), &[1, 1, 1, 1, 1]).unwrap()
    }

    #[test]
    fn element_products() {
        let a = quadratic();
        let x = a.basis_element(1);
        let xx = a.mul(&x, &x).unwrap();
        assert_eq!(xx, a.element_from_ints(&[-2, 3]).unwrap());
        let y = a.element_from_ints(&[5, -7]).unwrap();
        assert_eq!(a.mul(&a.unit_element(), &y).unwrap(), y);

        let zeta = cyclotomic5();
        let z3 = zeta.basis_element(3);
        let z1 = zeta.basis_element(1);
        assert_eq!(
            zeta.mul(&z3, &z1).unwrap(),
            zeta.element_from_ints(&[-1, -1, -1, -1]).unwrap()
        );
        // ζ⁵ = 1.
        assert_eq!(zeta.pow(&z1, 5).unwrap(), zeta.unit_element());
    }

    #[test]
    fn multiplication_matrices() {
        let a = quadratic();
        let x = a.basis_element(1);
        let m = a.mult_matrix(&x);
        let z = |v: i64| zring().from_int(v);
        assert_eq!(
            (0..2)
                .flat_map(|i| (0..2).map(move |j| (i, j)))
                .map(|(i, j)| m.at(i, j).clone())
                .collect::<Vec<_>>(),
            vec![z(0), z(-2), z(1), z(3)]
        );
        assert_eq!(
            a.mult_matrix(&a.unit_element()),
            Matrix::identity(zring(), 2)
        );
        // y = 7 − 3x acts by [[7, 6], [−3, −2]].
        let y = a.element_from_ints(&[7, -3]).unwrap();
        let my = a.mult_matrix(&y);
        assert_eq!(
            vec![
                my.at(0, 0).clone(),
                my.at(0, 1).clone(),
                my.at(1, 0).clone(),
                my.at(1, 1).clone()
            ],
            vec![z(7), z(6), z(-3), z(-2)]
        );
    }

    #[test]
    fn trace_norm_sk() {
        let zeta = cyclotomic5();
        let z = |v: i64| zring().from_int(v);
        assert_eq!(zeta.s_k(&zeta.basis_element(1), 1).unwrap(), z(-1));
        assert_eq!(zeta.s_k(&zeta.unit_element(), 1).unwrap(), z(4));
        let z3 = zeta.basis_element(3);
        assert_eq!(zeta.s_k(&z3, 2).unwrap(), z(1));
        assert_eq!(zeta.trace(&zeta.basis_element(1)), z(-1));
        assert!(zeta.s_k(&z3, 0).is_err());
        assert!(zeta.s_k(&z3, 5).is_err());
    }

    #[test]
    fn discriminants() {
        let z = |v: i64| zring().from_int(v);
        assert_eq!(cyclotomic5().discriminant().unwrap(), z(125));
        assert_eq!(FreeAlgebra::split(zring(), 2).unwrap().discriminant().unwrap(), z(1));
        // X³ − sX² + tX − u at (s,t,u) = (0,−3,1).
        let cubic = FreeAlgebra::monogenic_from_ints(zring(), &[1, 0, -3, -1]).unwrap();
        assert_eq!(cubic.discriminant().unwrap(), z(81));
    }

    #[test]
    fn disc_bilinear_alternating() {
        let zeta = cyclotomic5();
        let basis = zeta.basis();
        let mut repeated = basis.clone();
        repeated[2] = repeated[0].clone();
        assert_eq!(
            zeta.disc_bilinear(&repeated, &basis).unwrap(),
            zring().from_int(0)
        );
        let split = FreeAlgebra::split(zring(), 3).unwrap();
        let b = split.basis();
        assert_eq!(split.disc_bilinear(&b, &b).unwrap(), zring().from_int(1));
    }

    #[test]
    fn monogenic_power_basis() {
        let zeta = cyclotomic5();
        assert_eq!(zeta.rank(), 4);
        // x·x³ must wrap to −1 −x −x² −x³.
        let wrap = zeta
            .mul(&zeta.basis_element(1), &zeta.basis_element(3))
            .unwrap();
        assert_eq!(wrap, zeta.element_from_ints(&[-1, -1, -1, -1]).unwrap());

        // xⁿ − 1 gives the cyclic-shift table.
        let circ = FreeAlgebra::monogenic_from_ints(zring(), &[1, 0, 0, 0, 0, -1]).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let prod = circ
                    .mul(&circ.basis_element(i), &circ.basis_element(j))
                    .unwrap();
                assert_eq!(prod, circ.basis_element((i + j) % 5));
            }
        }
    }

    #[test]
    fn products_and_square_zero() {
        let z = |v: i64| zring().from_int(v);
        let zz = FreeAlgebra::product(
            &FreeAlgebra::split(zring(), 1).unwrap(),
            &FreeAlgebra::split(zring(), 1).unwrap(),
        )
        .unwrap();
        assert_eq!(zz, FreeAlgebra::split(zring(), 2).unwrap());

        let gauss = FreeAlgebra::monogenic_from_ints(zring(), &[1, 0, 1]).unwrap();
        let prod = FreeAlgebra::product(&gauss, &gauss).unwrap();
        assert_eq!(prod.rank(), 4);
        assert_eq!(prod.discriminant().unwrap(), z(16));

        for k in 1..=3 {
            let sz = FreeAlgebra::square_zero(zring(), k).unwrap();
            assert_eq!(sz.discriminant().unwrap(), z(0));
            for i in 1..=k {
                assert_eq!(sz.trace(&sz.basis_element(i)), z(0));
            }
        }
        let dual = FreeAlgebra::square_zero(zring(), 1).unwrap();
        let eps = dual.basis_element(1);
        assert_eq!(dual.mul(&eps, &eps).unwrap(), dual.zero_element());
    }

    #[test]
    fn base_change_examples() {
        let zeta = cyclotomic5();
        let mod5 = zeta.base_change(&RingMap::reduce_mod(5)).unwrap();
        assert_eq!(
            mod5.discriminant().unwrap(),
            Ring::integers_mod(5).from_int(0)
        );
        let id = zeta.base_change(&RingMap::Identity(zring())).unwrap();
        assert_eq!(id, zeta);

        // Generic cubic specialized at (s,t,u) = (0,−3,1).
        let r3 = Ring::poly(zring(), ["s", "t", "u"]);
        let e = |s: &str| r3.parse(s).unwrap();
        let generic =
            FreeAlgebra::monogenic(r3.clone(), &[e("1"), e("-s"), e("t"), e("-u")]).unwrap();
        let Ring::Polynomial(pr) = &r3 else { unreachable!() };
        let eval = RingMap::Evaluate {
            source: (**pr).clone(),
            values: vec![zring().from_int(0), zring().from_int(-3), zring().from_int(1)],
        };
        let concrete = generic.base_change(&eval).unwrap();
        assert_eq!(
            concrete,
            FreeAlgebra::monogenic_from_ints(zring(), &[1, 0, -3, -1]).unwrap()
        );
    }

    #[test]
    fn bad_tables_rejected() {
        // Commutative, unital, but (θ₂θ₂)θ₃ = 0 while θ₂(θ₂θ₃) = θ₃.
        let z = zring();
        let n = 3;
        let mut structure = vec![z.zero(); n * n * n];
        let mut set = |i: usize, j: usize, k: usize, v: i64| {
            structure[(i * n + j) * n + k] = z.from_int(v);
        };
        for j in 0..n {
            set(0, j, j, 1);
            set(j, 0, j, 1);
        }
        set(1, 1, 2, 1); // θ₂θ₂ = θ₃
        set(1, 2, 1, 1); // θ₂θ₃ = θ₂
        set(2, 1, 1, 1);
        let unit = vec![z.from_int(1), z.from_int(0), z.from_int(0)];
        let err = FreeAlgebra::new(z.clone(), n, structure, unit);
        assert!(matches!(err, Err(Error::AxiomViolation(_))));
        assert!(FreeAlgebra::monogenic_from_ints(z, &[2, 1, 1]).is_err());
    }

    #[test]
    fn norm_preserving_maps() {
        let z = zring();
        // Z[x]/((x−1)(x−3)) → Z², x ↦ (1,3) preserves characteristic
        // polynomials; x ↦ (1,1) does not.
        let src = FreeAlgebra::monogenic_from_ints(z.clone(), &[1, -4, 3]).unwrap();
        let tgt = FreeAlgebra::split(z.clone(), 2).unwrap();
        let good = AlgebraHom::new(
            src.clone(),
            tgt.clone(),
            vec![
                tgt.element_from_ints(&[1, 1]).unwrap(),
                tgt.element_from_ints(&[1, 3]).unwrap(),
            ],
        )
        .unwrap();
        assert!(good.is_norm_preserving().unwrap());

        let collapse = AlgebraHom::new(
            src.clone(),
            tgt.clone(),
            vec![
                tgt.element_from_ints(&[1, 1]).unwrap(),
                tgt.element_from_ints(&[1, 1]).unwrap(),
            ],
        )
        .unwrap();
        assert!(!collapse.is_norm_preserving().unwrap());

        assert!(AlgebraHom::identity(&src).is_norm_preserving().unwrap());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }
}
