//! Discriminant algebras as explicit quadratic rings.
//!
//! The discriminant algebra of a rank-`n` algebra `A` is free of rank 2 with
//! basis `{1, g}`, where `g` is the class of the alternating orbit sum of the
//! basis tuple. It is presented as `R[X]/(X² − TX + N)` with
//!
//! * `T = Φ(γ^{Σₙ}(θ))`, computed by polarization, and
//! * `N = g·σ(g)`, computed either from the identity `T² − 4N = disc A`
//!   (the fast route, used whenever dividing by 4 has a unique result) or by
//!   the division-free expansion of the product of the even and odd orbit
//!   sums (the general route, needed e.g. in characteristic 2).
//!
//! Alternating invariants, their reduction into the quadratic algebra, the
//! standard involution, splitting and isomorphism tests over ℤ and ℚ, the
//! product monoid on quadratic rings, and the maps induced by norm-preserving
//! algebra homomorphisms all live here.

use itertools::Itertools;

use crate::algebra::{AlgebraElement, AlgebraHom, FreeAlgebra};
use crate::error::{DivError, Error, Result};
use crate::ferrand::{
    self, expand_tuple, factorial, inversion_parity, MultiDegree, SymmetricInvariant,
};
use crate::linalg;
use crate::ring::{Elem, Ring, RingMap};

/// Default cap for the general (division-free) norm route; its cost grows
/// like `(n!/2)·nⁿ⁺¹` ring operations, so rank 8 is already a long sit.
pub const GENERAL_PATH_CAP: usize = 8;

/// Default cap for the fast route (2ⁿ determinants for the trace).
pub const FAST_PATH_CAP: usize = 12;

/// An element of the alternating invariants of `A^⊗n` in the orbit basis:
/// the multidegree orbits with a repeated slot (`sym`), plus the two halves
/// of the all-distinct orbit: `c_plus` on the even orbit sum of the basis
/// tuple and `c_minus` on the odd one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingInvariant {
    pub sym: SymmetricInvariant,
    pub c_plus: Elem,
    pub c_minus: Elem,
}

impl AlternatingInvariant {
    pub fn zero(ring: &Ring, rank: usize) -> Self {
        AlternatingInvariant {
            sym: SymmetricInvariant::zero(rank),
            c_plus: ring.zero(),
            c_minus: ring.zero(),
        }
    }

    pub fn add(&self, other: &Self, ring: &Ring) -> Self {
        AlternatingInvariant {
            sym: self.sym.add(&other.sym, ring),
            c_plus: ring.add(&self.c_plus, &other.c_plus),
            c_minus: ring.add(&self.c_minus, &other.c_minus),
        }
    }
}

/// Expands `γ^{Aₙ}(a₁,…,aₙ)` (the even orbit sum) into orbit coordinates.
///
/// Each index function contributes the product of the chosen coordinates:
/// bijections land on `c_plus` or `c_minus` according to their sign, and
/// non-injective functions land on their orbit with multiplicity
/// `|Stab(f)|/2`, which is an integer because a repeated slot always
/// stabilizes under a transposition.
pub fn gamma_alternating(
    a: &FreeAlgebra,
    tuple: &[AlgebraElement],
) -> Result<AlternatingInvariant> {
    let n = a.rank();
    if tuple.len() != n || tuple.iter().any(|e| e.coords.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "gamma needs an {n}-tuple of rank-{n} elements, got {} entries",
            tuple.len()
        )));
    }
    let ring = a.ring().clone();
    let coords: Vec<&[Elem]> = tuple.iter().map(|e| e.coords.as_slice()).collect();
    let mut out = AlternatingInvariant::zero(&ring, n);
    expand_tuple(&ring, &coords, |counts, picks, prod| {
        if counts.iter().all(|&c| c <= 1) {
            if inversion_parity(picks) {
                out.c_minus = ring.add(&out.c_minus, prod);
            } else {
                out.c_plus = ring.add(&out.c_plus, prod);
            }
        } else {
            let stab: num_bigint::BigInt = counts.iter().map(|&c| factorial(c)).product();
            let half = stab / 2;
            let alpha = MultiDegree::new(n, counts.to_vec()).expect("counts sum to n");
            out.sym
                .add_term(&ring, alpha, ring.mul(prod, &ring.from_int(half)));
        }
    });
    Ok(out)
}

/// A quadratic algebra `R[X]/(X² − TX + N)` on the basis `(1, X̄)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticAlgebra {
    ring: Ring,
    t: Elem,
    n: Elem,
}

/// An element `r·1 + d·X̄` of a quadratic algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaElement {
    pub r: Elem,
    pub d: Elem,
}

impl QuadraticAlgebra {
    pub fn new(ring: Ring, t: Elem, n: Elem) -> Result<Self> {
        ring.validate()?;
        if !ring.contains(&t) || !ring.contains(&n) {
            return Err(Error::DimensionMismatch(format!(
                "quadratic presentation coefficients must lie in {ring}"
            )));
        }
        Ok(QuadraticAlgebra { ring, t, n })
    }

    /// The split algebra `R[X]/(X² − X) ≅ R²`.
    pub fn split(ring: Ring) -> Result<Self> {
        let t = ring.one();
        let n = ring.zero();
        QuadraticAlgebra::new(ring, t, n)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn t(&self) -> &Elem {
        &self.t
    }

    pub fn n(&self) -> &Elem {
        &self.n
    }

    pub fn disc(&self) -> Elem {
        let t2 = self.ring.mul(&self.t, &self.t);
        let four_n = self.ring.mul(&self.ring.from_int(4), &self.n);
        self.ring.sub(&t2, &four_n)
    }

    pub fn element(&self, r: Elem, d: Elem) -> DeltaElement {
        DeltaElement { r, d }
    }

    pub fn one(&self) -> DeltaElement {
        DeltaElement {
            r: self.ring.one(),
            d: self.ring.zero(),
        }
    }

    /// The distinguished generator `X̄`.
    pub fn generator(&self) -> DeltaElement {
        DeltaElement {
            r: self.ring.zero(),
            d: self.ring.one(),
        }
    }

    pub fn add(&self, x: &DeltaElement, y: &DeltaElement) -> DeltaElement {
        DeltaElement {
            r: self.ring.add(&x.r, &y.r),
            d: self.ring.add(&x.d, &y.d),
        }
    }

    pub fn sub(&self, x: &DeltaElement, y: &DeltaElement) -> DeltaElement {
        DeltaElement {
            r: self.ring.sub(&x.r, &y.r),
            d: self.ring.sub(&x.d, &y.d),
        }
    }

    pub fn scale(&self, c: &Elem, x: &DeltaElement) -> DeltaElement {
        DeltaElement {
            r: self.ring.mul(c, &x.r),
            d: self.ring.mul(c, &x.d),
        }
    }

    /// Multiplication from `X̄² = T·X̄ − N`.
    pub fn mul(&self, x: &DeltaElement, y: &DeltaElement) -> DeltaElement {
        let r = &self.ring;
        let dd = r.mul(&x.d, &y.d);
        DeltaElement {
            r: r.sub(&r.mul(&x.r, &y.r), &r.mul(&dd, &self.n)),
            d: r.add(
                &r.add(&r.mul(&x.r, &y.d), &r.mul(&x.d, &y.r)),
                &r.mul(&dd, &self.t),
            ),
        }
    }

    pub fn trace(&self, x: &DeltaElement) -> Elem {
        let r = &self.ring;
        r.add(&r.add(&x.r, &x.r), &r.mul(&x.d, &self.t))
    }

    pub fn norm(&self, x: &DeltaElement) -> Elem {
        let r = &self.ring;
        let rr = r.mul(&x.r, &x.r);
        let rdt = r.mul(&r.mul(&x.r, &x.d), &self.t);
        let ddn = r.mul(&r.mul(&x.d, &x.d), &self.n);
        r.add(&r.add(&rr, &rdt), &ddn)
    }

    /// The standard involution `σ(x) = Tr(x) − x`.
    pub fn involution(&self, x: &DeltaElement) -> DeltaElement {
        let r = &self.ring;
        DeltaElement {
            r: r.add(&x.r, &r.mul(&x.d, &self.t)),
            d: r.neg(&x.d),
        }
    }

    /// Whether `X² − TX + N` has a root in the coefficient ring. Supported
    /// over the integers, the rationals, and residue rings.
    pub fn is_split(&self) -> Result<bool> {
        match &self.ring {
            Ring::Integers | Ring::Rationals => {
                // A root in R needs the discriminant to be a square; over ℤ
                // the root (T ± w)/2 is then automatically integral since
                // w ≡ T (mod 2).
                Ok(self.ring.is_square(&self.disc())?.is_some())
            }
            Ring::IntegersMod(m) => {
                if *m > num_bigint::BigUint::from(crate::ring::MOD_SEARCH_CAP) {
                    return Err(Error::CapExceeded {
                        what: "residue root search".into(),
                        requested: usize::MAX,
                        cap: crate::ring::MOD_SEARCH_CAP as usize,
                    });
                }
                let r = &self.ring;
                let mut x = num_bigint::BigUint::ZERO;
                while x < *m {
                    let e = Elem::Mod(x.clone());
                    let val = r.add(&r.sub(&r.mul(&e, &e), &r.mul(&self.t, &e)), &self.n);
                    if r.is_zero(&val) {
                        return Ok(true);
                    }
                    x += 1u32;
                }
                Ok(false)
            }
            _ => Err(Error::UnsupportedRing {
                op: "quadratic splitting test".into(),
                ring: self.ring.to_string(),
            }),
        }
    }

    /// Canonical representative over ℤ: quadratic rings over the integers
    /// are classified by their discriminant, and the representative has
    /// `T = D mod 2` and `N = (T² − D)/4`.
    pub fn canonical_z(&self) -> Result<QuadraticAlgebra> {
        if self.ring != Ring::Integers {
            return Err(Error::UnsupportedRing {
                op: "canonical form".into(),
                ring: self.ring.to_string(),
            });
        }
        let d = self.disc();
        let two = self.ring.from_int(2);
        let rem = match self.ring.exact_div(&d, &two) {
            Ok(_) => self.ring.zero(),
            Err(DivError::NoExactQuotient) => self.ring.one(),
            Err(e) => return Err(Error::Internal(e.to_string())),
        };
        let t = rem;
        let num = self.ring.sub(&self.ring.mul(&t, &t), &d);
        let n = self
            .ring
            .exact_div(&num, &self.ring.from_int(4))
            .map_err(|_| {
                Error::Internal(format!(
                    "discriminant {} is not 0 or 1 mod 4",
                    self.ring.to_text(&d)
                ))
            })?;
        QuadraticAlgebra::new(Ring::Integers, t, n)
    }

    /// Isomorphism test: canonical forms over ℤ, discriminant square-class
    /// plus degeneracy over ℚ. Other rings only get exact `(T, N)` equality,
    /// reported as unsupported here.
    pub fn is_isomorphic(&self, other: &QuadraticAlgebra) -> Result<bool> {
        if self.ring != other.ring {
            return Ok(false);
        }
        match &self.ring {
            Ring::Integers => Ok(self.canonical_z()? == other.canonical_z()?),
            Ring::Rationals => {
                let d1 = self.disc();
                let d2 = other.disc();
                let z1 = self.ring.is_zero(&d1);
                let z2 = self.ring.is_zero(&d2);
                if z1 || z2 {
                    return Ok(z1 && z2);
                }
                Ok(self
                    .ring
                    .is_square(&self.ring.mul(&d1, &d2))?
                    .is_some())
            }
            _ => Err(Error::UnsupportedRing {
                op: "quadratic isomorphism test".into(),
                ring: self.ring.to_string(),
            }),
        }
    }

    /// The quadratic algebra as a rank-2 structure-constant algebra on the
    /// basis `(1, X̄)`.
    pub fn as_algebra(&self) -> Result<FreeAlgebra> {
        let r = &self.ring;
        let z = r.zero();
        let o = r.one();
        let structure = vec![
            // 1·1 = 1, 1·X = X
            o.clone(),
            z.clone(),
            z.clone(),
            o.clone(),
            // X·1 = X, X·X = −N + T·X
            z.clone(),
            o.clone(),
            r.neg(&self.n),
            self.t.clone(),
        ];
        FreeAlgebra::new(r.clone(), 2, structure, vec![o, z])
    }

    /// Applies a coefficient homomorphism to the presentation.
    pub fn base_change(&self, map: &RingMap) -> Result<QuadraticAlgebra> {
        if map.source() != self.ring {
            return Err(Error::UnsupportedMap(format!(
                "map expects source {}, algebra is over {}",
                map.source(),
                self.ring
            )));
        }
        QuadraticAlgebra::new(map.target(), map.apply(&self.t)?, map.apply(&self.n)?)
    }
}

/// Reduction of an alternating invariant into the discriminant algebra `q`
/// of `a` (which must be `discriminant_algebra(a)`): the symmetric part maps
/// through Φ, the even orbit sum to `X̄`, and the odd orbit sum to `T − X̄`.
pub fn reduce(
    a: &FreeAlgebra,
    t: &AlternatingInvariant,
    q: &QuadraticAlgebra,
) -> Result<DeltaElement> {
    reduce_capped(a, t, q, ferrand::NORM_FORM_CAP, linalg::POLARIZATION_CAP)
}

fn reduce_capped(
    a: &FreeAlgebra,
    t: &AlternatingInvariant,
    q: &QuadraticAlgebra,
    symbolic_cap: usize,
    polarization_cap: usize,
) -> Result<DeltaElement> {
    let ring = a.ring();
    let sym_value = ferrand::phi_capped(a, &t.sym, symbolic_cap, polarization_cap)?;
    Ok(DeltaElement {
        r: ring.add(&sym_value, &ring.mul(&t.c_minus, q.t())),
        d: ring.sub(&t.c_plus, &t.c_minus),
    })
}

/// Which route computes the norm of the generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum NormPath {
    /// Fast when the division by 4 is uniquely possible, general otherwise.
    #[default]
    Auto,
    Fast,
    General,
    /// Run both and fail loudly on disagreement.
    Both,
}

#[derive(Clone, Debug)]
pub struct DeltaOptions {
    pub path: NormPath,
    pub fast_cap: usize,
    pub general_cap: usize,
    pub symbolic_cap: usize,
}

impl Default for DeltaOptions {
    fn default() -> Self {
        DeltaOptions {
            path: NormPath::Auto,
            fast_cap: FAST_PATH_CAP,
            general_cap: GENERAL_PATH_CAP,
            symbolic_cap: ferrand::NORM_FORM_CAP,
        }
    }
}

impl DeltaOptions {
    pub fn with_path(path: NormPath) -> Self {
        DeltaOptions {
            path,
            ..Default::default()
        }
    }

    /// Raises every cap to at least `cap`.
    pub fn override_caps(mut self, cap: usize) -> Self {
        self.fast_cap = self.fast_cap.max(cap);
        self.general_cap = self.general_cap.max(cap);
        self.symbolic_cap = self.symbolic_cap.max(cap);
        self
    }
}

/// The discriminant algebra of `a`, presented as `R[X]/(X² − TX + N)`.
///
/// Ranks 0 and 1 are split by convention. The returned presentation always
/// satisfies `T² − 4N = disc(a)` exactly; a route that cannot certify this
/// is an internal error, never a silent wrong answer.
pub fn discriminant_algebra(a: &FreeAlgebra) -> Result<QuadraticAlgebra> {
    discriminant_algebra_with(a, &DeltaOptions::default())
}

pub fn discriminant_algebra_with(
    a: &FreeAlgebra,
    opts: &DeltaOptions,
) -> Result<QuadraticAlgebra> {
    let ring = a.ring().clone();
    let n = a.rank();
    if n <= 1 {
        return QuadraticAlgebra::split(ring);
    }
    if n > opts.fast_cap {
        return Err(Error::CapExceeded {
            what: "discriminant algebra".into(),
            requested: n,
            cap: opts.fast_cap,
        });
    }
    let t = ferrand::phi_orbit_capped(
        a,
        &MultiDegree::all_ones(n),
        opts.symbolic_cap,
        opts.fast_cap,
    )?;
    let disc = a.discriminant()?;
    let norm = match opts.path {
        NormPath::Fast => norm_fast(&ring, &t, &disc).map_err(|e| {
            Error::FastPathUnavailable(format!("dividing T² − disc by 4 failed: {e}"))
        })?,
        NormPath::General => norm_general(a, &t, opts)?,
        NormPath::Both => {
            let fast = norm_fast(&ring, &t, &disc).map_err(|e| {
                Error::FastPathUnavailable(format!("dividing T² − disc by 4 failed: {e}"))
            })?;
            let general = norm_general(a, &t, opts)?;
            if fast != general {
                return Err(Error::Internal(format!(
                    "norm routes disagree: fast {} vs general {}",
                    ring.to_text(&fast),
                    ring.to_text(&general)
                )));
            }
            fast
        }
        NormPath::Auto => match norm_fast(&ring, &t, &disc) {
            Ok(v) => {
                // Cheap ranks re-derive the norm without the division and
                // must agree; this guards the fast route in debug builds.
                if cfg!(debug_assertions) && n <= 4 {
                    let general = norm_general(a, &t, opts)?;
                    if v != general {
                        return Err(Error::Internal(format!(
                            "norm routes disagree: fast {} vs general {}",
                            ring.to_text(&v),
                            ring.to_text(&general)
                        )));
                    }
                }
                v
            }
            Err(_) => norm_general(a, &t, opts)?,
        },
    };
    let q = QuadraticAlgebra::new(ring.clone(), t, norm)?;
    if q.disc() != disc {
        return Err(Error::Internal(format!(
            "presentation discriminant {} does not match algebra discriminant {}",
            ring.to_text(&q.disc()),
            ring.to_text(&disc)
        )));
    }
    Ok(q)
}

fn norm_fast(ring: &Ring, t: &Elem, disc: &Elem) -> Result<Elem, DivError> {
    let num = ring.sub(&ring.mul(t, t), disc);
    ring.exact_div(&num, &ring.from_int(4))
}

/// `N = Σ_{σ odd} γ^{Aₙ}(θ·θ_σ)` reduced into the quadratic algebra; the
/// image must land in `R` (zero generator coordinate).
fn norm_general(a: &FreeAlgebra, t: &Elem, opts: &DeltaOptions) -> Result<Elem> {
    let n = a.rank();
    if n > opts.general_cap {
        return Err(Error::CapExceeded {
            what: "division-free norm route".into(),
            requested: n,
            cap: opts.general_cap,
        });
    }
    let ring = a.ring().clone();
    let basis = a.basis();
    let mut total = AlternatingInvariant::zero(&ring, n);
    for perm in (0..n).permutations(n) {
        if !inversion_parity(&perm) {
            continue;
        }
        let tuple: Vec<AlgebraElement> = (0..n)
            .map(|i| a.mul(&basis[i], &basis[perm[i]]))
            .collect::<Result<_>>()?;
        let g = gamma_alternating(a, &tuple)?;
        total = total.add(&g, &ring);
    }
    let d = ring.sub(&total.c_plus, &total.c_minus);
    if !ring.is_zero(&d) {
        return Err(Error::Internal(
            "generator norm did not land in the base ring".into(),
        ));
    }
    let sym_value = ferrand::phi_capped(a, &total.sym, opts.symbolic_cap, opts.fast_cap)?;
    Ok(ring.add(&sym_value, &ring.mul(&total.c_minus, t)))
}

/// Product on quadratic algebras realized through the discriminant algebra
/// of the rank-4 product algebra. Associative and commutative with unit the
/// split algebra, up to isomorphism.
pub fn star_product(q1: &QuadraticAlgebra, q2: &QuadraticAlgebra) -> Result<QuadraticAlgebra> {
    if q1.ring() != q2.ring() {
        return Err(Error::DimensionMismatch(
            "star product of algebras over different rings".into(),
        ));
    }
    let prod = FreeAlgebra::product(&q1.as_algebra()?, &q2.as_algebra()?)?;
    discriminant_algebra(&prod)
}

/// The map of discriminant algebras induced by a universally norm-preserving
/// homomorphism: determined by the image of the generator.
#[derive(Clone, Debug)]
pub struct DeltaHom {
    source: QuadraticAlgebra,
    target: QuadraticAlgebra,
    gen_image: DeltaElement,
}

impl DeltaHom {
    pub fn source(&self) -> &QuadraticAlgebra {
        &self.source
    }

    pub fn target(&self) -> &QuadraticAlgebra {
        &self.target
    }

    pub fn gen_image(&self) -> &DeltaElement {
        &self.gen_image
    }

    pub fn apply(&self, x: &DeltaElement) -> DeltaElement {
        let scaled = self.target.scale(&x.d, &self.gen_image);
        self.target.add(
            &self.target.element(x.r.clone(), self.target.ring().zero()),
            &scaled,
        )
    }
}

/// Builds the induced map on discriminant algebras, verifying that the
/// underlying homomorphism preserves characteristic polynomials first.
pub fn delta_of_hom(f: &AlgebraHom) -> Result<DeltaHom> {
    if !f.is_norm_preserving()? {
        return Err(Error::NotNormPreserving);
    }
    let source = discriminant_algebra(f.source())?;
    let target = discriminant_algebra(f.target())?;
    let images: Vec<AlgebraElement> = (0..f.source().rank())
        .map(|i| f.basis_image(i).clone())
        .collect();
    let g = gamma_alternating(f.target(), &images)?;
    let gen_image = reduce(f.target(), &g, &target)?;
    Ok(DeltaHom {
        source,
        target,
        gen_image,
    })
}
