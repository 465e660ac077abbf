//! Division-free exact linear algebra over any coefficient ring.
//!
//! Determinants expand by Laplace along rows with dynamic programming over
//! column subsets (2ⁿ·n ring multiplications, no divisions), so they are
//! valid over rings with zero divisors. Over the integers a fraction-free
//! Bareiss elimination is used instead as an accelerator; the two paths are
//! checked against each other in the test suite.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Elem, Monomial, MultiPoly, PolyRing, Ring};

/// Matrices above this size would make the subset-DP determinant (2ⁿ states)
/// unreasonable; the cap can be raised explicitly by callers that mean it.
pub const DET_DIMENSION_CAP: usize = 16;

/// Default cap for the 2ⁿ-determinant polarization of `multilinear_coeff`.
pub const POLARIZATION_CAP: usize = 12;

/// A dense matrix over a fixed coefficient ring, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn new(ring: Ring, rows: usize, cols: usize, entries: Vec<Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut entries = vec![ring.zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = ring.one();
        }
        Matrix {
            ring,
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn zero(ring: Ring, rows: usize, cols: usize) -> Self {
        let entries = vec![ring.zero(); rows * cols];
        Matrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols || self.ring != other.ring {
            return Err(Error::DimensionMismatch("matrix addition".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows || self.ring != other.ring {
            return Err(Error::DimensionMismatch("matrix multiplication".into()));
        }
        let mut out = Matrix::zero(self.ring.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    acc = self
                        .ring
                        .add(&acc, &self.ring.mul(self.at(i, k), other.at(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Elem {
        let mut acc = self.ring.zero();
        for i in 0..self.rows.min(self.cols) {
            acc = self.ring.add(&acc, self.at(i, i));
        }
        acc
    }
}

/// Determinant. Division-free subset expansion in general; fraction-free
/// Bareiss elimination over the integers.
pub fn det(m: &Matrix) -> Result<Elem> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.ring == Ring::Integers {
        return Ok(det_bareiss_int(m));
    }
    det_division_free(m)
}

/// Laplace expansion with dynamic programming over column subsets.
pub fn det_division_free(m: &Matrix) -> Result<Elem> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(m.ring.one());
    }
    if n > DET_DIMENSION_CAP {
        return Err(Error::CapExceeded {
            what: "subset-DP determinant".into(),
            requested: n,
            cap: DET_DIMENSION_CAP,
        });
    }
    let ring = &m.ring;
    // minor[s] = det of the rows 0..|s| on the column set s; every strict
    // subset of s is numerically smaller, so one ascending pass suffices.
    let mut minor: Vec<Elem> = vec![ring.zero(); 1 << n];
    minor[0] = ring.one();
    for s in 1usize..(1 << n) {
        let row = (s.count_ones() - 1) as usize;
        let mut acc = ring.zero();
        let mut positive = true;
        // Walk the columns of s from highest to lowest so the cofactor sign
        // starts at +1 for the last column of the subset.
        let mut cols: Vec<usize> = (0..n).filter(|j| s & (1 << j) != 0).collect();
        cols.reverse();
        for j in cols {
            let entry = m.at(row, j);
            if !ring.is_zero(entry) {
                let term = ring.mul(entry, &minor[s & !(1 << j)]);
                acc = if positive {
                    ring.add(&acc, &term)
                } else {
                    ring.sub(&acc, &term)
                };
            }
            positive = !positive;
        }
        minor[s] = acc;
    }
    Ok(minor[(1 << n) - 1].clone())
}

/// Fraction-free Gaussian elimination; all divisions are exact over ℤ.
fn det_bareiss_int(m: &Matrix) -> Elem {
    let n = m.rows;
    if n == 0 {
        return Elem::Int(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| m.at(i, j).as_int().expect("integer matrix").clone())
                .collect()
        })
        .collect();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for r in 0..n - 1 {
        if a[r][r].is_zero() {
            let Some(p) = (r + 1..n).find(|&i| !a[i][r].is_zero()) else {
                return Elem::Int(BigInt::zero());
            };
            a.swap(r, p);
            sign = -sign;
        }
        for i in r + 1..n {
            for j in r + 1..n {
                let num = &a[r][r] * &a[i][j] - &a[i][r] * &a[r][j];
                a[i][j] = num / &prev;
            }
            a[i][r] = BigInt::zero();
        }
        prev = a[r][r].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Elem::Int(if sign < 0 { -d } else { d })
}

/// Coefficients of `det(λI − M)` in descending degree; the leading entry is 1.
///
/// Computed as a determinant over `R[λ]`, so no division by integers occurs
/// and residue rings are safe.
pub fn char_poly(m: &Matrix) -> Result<Vec<Elem>> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let ring = m.ring.clone();
    let lring = Ring::poly(ring.clone(), ["lambda"]);
    let Ring::Polynomial(pr) = &lring else { unreachable!() };
    let lam = Elem::Poly(MultiPoly::variable(&ring, 1, 0));
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let c = Elem::Poly(MultiPoly::constant(&ring, 1, m.at(i, j).clone()));
            let e = if i == j {
                lring.sub(&lam, &c)
            } else {
                lring.neg(&c)
            };
            entries.push(e);
        }
    }
    let d = det_division_free(&Matrix::new(lring.clone(), n, n, entries)?)?;
    let Elem::Poly(p) = d else { unreachable!() };
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in (0..=n).rev() {
        coeffs.push(p.coeff(&Monomial(vec![k as u32]), &pr.base));
    }
    Ok(coeffs)
}

/// Coefficient of `λ₁λ₂⋯λₙ` in `det(Σᵢ λᵢ Mᵢ)`, by polarization:
/// `Σ_{S ⊆ [n]} (−1)^{n−|S|} det(Σ_{i∈S} Mᵢ)`. Uses 2ⁿ determinants and no
/// symbolic expansion.
pub fn multilinear_coeff(ms: &[Matrix]) -> Result<Elem> {
    multilinear_coeff_capped(ms, POLARIZATION_CAP)
}

pub fn multilinear_coeff_capped(ms: &[Matrix], cap: usize) -> Result<Elem> {
    let n = ms.len();
    assert!(n > 0, "need at least one matrix");
    let ring = ms[0].ring().clone();
    for m in ms {
        if !m.is_square() || m.rows() != n || *m.ring() != ring {
            return Err(Error::DimensionMismatch(
                "polarization needs n matching n x n matrices".into(),
            ));
        }
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "polarization".into(),
            requested: n,
            cap,
        });
    }
    let mut acc = ring.zero();
    for s in 1usize..(1 << n) {
        let mut sum = Matrix::zero(ring.clone(), n, n);
        for (i, m) in ms.iter().enumerate() {
            if s & (1 << i) != 0 {
                sum = sum.add(m)?;
            }
        }
        let d = det(&sum)?;
        let even = (n - s.count_ones() as usize).is_multiple_of(2);
        acc = if even {
            ring.add(&acc, &d)
        } else {
            ring.sub(&acc, &d)
        };
    }
    Ok(acc)
}

/// Coefficient of the monomial with exponents `alpha` in a polynomial over
/// `pr`; zero when the monomial is absent.
pub fn coeff_of(p: &Elem, pr: &PolyRing, alpha: &[u32]) -> Result<Elem> {
    if alpha.len() != pr.vars.len() {
        return Err(Error::DimensionMismatch(format!(
            "exponent vector of length {} against {} variables",
            alpha.len(),
            pr.vars.len()
        )));
    }
    let Elem::Poly(p) = p else {
        panic!("coeff_of expects a polynomial element");
    };
    Ok(p.coeff(&Monomial(alpha.to_vec()), &pr.base))
}

/// Evaluates a monic coefficient list (descending powers) at a square matrix.
pub fn eval_poly_at_matrix(coeffs: &[Elem], m: &Matrix) -> Result<Matrix> {
    let n = m.rows();
    let ring = m.ring().clone();
    let mut acc = Matrix::zero(ring.clone(), n, n);
    for c in coeffs {
        acc = acc.mul(m)?;
        let mut diag = Matrix::zero(ring.clone(), n, n);
        for i in 0..n {
            diag.set(i, i, c.clone());
        }
        acc = acc.add(&diag)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmat(n: usize, vals: &[i64]) -> Matrix {
        let ring = Ring::Integers;
        let entries = vals.iter().map(|&v| ring.from_int(v)).collect();
        Matrix::new(ring, n, n, entries).unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det(&zmat(2, &[0, -2, 1, 3])).unwrap(), Ring::Integers.from_int(2));
        assert_eq!(
            det(&Matrix::identity(Ring::Integers, 4)).unwrap(),
            Ring::Integers.from_int(1)
        );
    }

    #[test]
    fn symbolic_determinant() {
        let r = Ring::poly(Ring::Integers, ["l1", "l2"]);
        let e = |s: &str| r.parse(s).unwrap();
        let m = Matrix::from_rows(
            r.clone(),
            vec![
                vec![e("7*l2"), e("-2*l1 + 6*l2")],
                vec![e("l1 - 3*l2"), e("3*l1 - 2*l2")],
            ],
        )
        .unwrap();
        let d = det(&m).unwrap();
        // The λ₁² and λ₂² coefficients are the determinants of the two
        // summand matrices (2 and 4); the mixed coefficient is 9.
        assert_eq!(d, e("2*l1^2 + 9*l1*l2 + 4*l2^2"));
        let Ring::Polynomial(pr) = &r else { unreachable!() };
        assert_eq!(
            coeff_of(&d, pr, &[1, 1]).unwrap(),
            Ring::Integers.from_int(9)
        );
    }

    #[test]
    fn characteristic_polynomials() {
        let m = zmat(2, &[0, -2, 1, 3]);
        let cp = char_poly(&m).unwrap();
        let z = |v: i64| Ring::Integers.from_int(v);
        assert_eq!(cp, vec![z(1), z(-3), z(2)]);

        let m2 = zmat(2, &[6, 4, -2, 0]);
        assert_eq!(char_poly(&m2).unwrap(), vec![z(1), z(-6), z(8)]);
    }

    #[test]
    fn companion_char_poly_over_generic_ring() {
        let r = Ring::poly(Ring::Integers, ["s", "t", "u"]);
        let e = |s: &str| r.parse(s).unwrap();
        // Companion matrix of X^3 - sX^2 + tX - u.
        let m = Matrix::from_rows(
            r.clone(),
            vec![
                vec![e("0"), e("0"), e("u")],
                vec![e("1"), e("0"), e("-t")],
                vec![e("0"), e("1"), e("s")],
            ],
        )
        .unwrap();
        let cp = char_poly(&m).unwrap();
        assert_eq!(cp, vec![e("1"), e("-s"), e("t"), e("-u")]);
    }

    #[test]
    fn polarization_examples() {
        // n matrices all equal to the identity: coefficient of λ₁⋯λₙ in
        // (λ₁+⋯+λₙ)ⁿ is n!.
        for n in 1..=6usize {
            let ms: Vec<Matrix> = (0..n).map(|_| Matrix::identity(Ring::Integers, n)).collect();
            let c = multilinear_coeff(&ms).unwrap();
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(c, Ring::Integers.from_int(fact));
        }
        // Two equal matrices: coefficient of λ₁λ₂ in det((λ₁+λ₂)M) = 2 det M.
        let m = zmat(2, &[3, 1, 4, 5]);
        let c = multilinear_coeff(&[m.clone(), m.clone()]).unwrap();
        assert_eq!(c, Ring::Integers.from_int(2 * 11));
        // The two action matrices with mixed coefficient 9.
        let mx = zmat(2, &[0, -2, 1, 3]);
        let my = zmat(2, &[7, 6, -3, -2]);
        assert_eq!(
            multilinear_coeff(&[mx, my]).unwrap(),
            Ring::Integers.from_int(9)
        );
    }

    #[test]
    fn polarization_cap() {
        let ms: Vec<Matrix> = (0..13).map(|_| Matrix::identity(Ring::Integers, 13)).collect();
        assert!(matches!(
            multilinear_coeff(&ms),
            Err(Error::CapExceeded { .. })
        ));
        assert!(multilinear_coeff_capped(&ms, 13).is_ok());
    }

    #[test]
    fn multinomial_coefficient() {
        let r = Ring::poly(Ring::Integers, ["l1", "l2", "l3"]);
        let s = r.parse("l1 + l2 + l3").unwrap();
        let cube = r.pow(&s, 3);
        let Ring::Polynomial(pr) = &r else { unreachable!() };
        assert_eq!(
            coeff_of(&cube, pr, &[1, 1, 1]).unwrap(),
            Ring::Integers.from_int(6)
        );
        assert_eq!(
            coeff_of(&cube, pr, &[0, 0, 0]).unwrap(),
            Ring::Integers.from_int(0)
        );
        let r2 = Ring::poly(Ring::Integers, ["l1", "l2"]);
        let p = r2.parse("-2*l1^2 + 9*l1*l2 - 14*l2^2").unwrap();
        let Ring::Polynomial(pr2) = &r2 else { unreachable!() };
        assert_eq!(coeff_of(&p, pr2, &[1, 1]).unwrap(), Ring::Integers.from_int(9));
        assert!(coeff_of(&p, pr2, &[1, 1, 1]).is_err());
    }

    #[test]
    fn non_square_rejected() {
        let m = Matrix::zero(Ring::Integers, 2, 3);
        assert!(matches!(det(&m), Err(Error::NonSquare { .. })));
    }
}
