//! Acceptance suite: the end-to-end numeric gates for the crate, each with a
//! pinned exact expectation and a wall-clock budget. Every test prints one
//! `acceptance <n> (<name>): PASS/FAIL` line (run with `--nocapture` to see
//! them on success).

mod common;

use std::time::{Duration, Instant};

use common::{random_element, random_invariant, random_monogenic, random_tuple, rng, DenseTensor};
use discalg::delta::{
    self, discriminant_algebra, discriminant_algebra_with, gamma_alternating, reduce,
    DeltaOptions, NormPath, QuadraticAlgebra,
};
use discalg::ferrand::{self, MultiDegree};
use discalg::orient;
use discalg::ring::{Elem, Ring, RingMap};
use discalg::FreeAlgebra;
use rand::Rng as _;

fn z() -> Ring {
    Ring::Integers
}

fn zel(v: i64) -> Elem {
    z().from_int(v)
}

/// Runs a criterion body, enforcing its wall-clock budget and printing the
/// verdict line.
fn criterion<F: FnOnce() -> Result<(), String>>(number: u32, name: &str, budget: Duration, body: F) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    match &outcome {
        Ok(()) if elapsed <= budget => {
            println!(
                "acceptance {number} ({name}): PASS in {:.0} ms (budget {:.0} ms)",
                elapsed.as_secs_f64() * 1e3,
                budget.as_secs_f64() * 1e3
            );
        }
        Ok(()) => {
            println!(
                "acceptance {number} ({name}): FAIL: exceeded budget: {:.0} ms > {:.0} ms",
                elapsed.as_secs_f64() * 1e3,
                budget.as_secs_f64() * 1e3
            );
            panic!("criterion {number} exceeded its runtime budget");
        }
        Err(msg) => {
            println!("acceptance {number} ({name}): FAIL: {msg}");
            panic!("criterion {number} failed: {msg}");
        }
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

#[test]
fn acceptance_01_cyclotomic_reproduction() {
    criterion(1, "cyclotomic-quintic", Duration::from_secs(1), || {
        let alg = FreeAlgebra::monogenic_from_ints(z(), &[1, 1, 1, 1, 1])
            .map_err(|e| e.to_string())?;
        let q = discriminant_algebra(&alg).map_err(|e| e.to_string())?;
        expect("T", q.t().clone(), zel(-1))?;
        expect("N", q.n().clone(), zel(-31))?;
        expect("disc", q.disc(), zel(125))?;
        Ok(())
    });
}

#[test]
fn acceptance_02_cubic_closed_form() {
    criterion(2, "cubic-closed-form", Duration::from_secs(5), || {
        // Symbolic: over Z[s,t,u].
        let r3 = Ring::poly(z(), ["s", "t", "u"]);
        let e = |txt: &str| r3.parse(txt).unwrap();
        let generic = FreeAlgebra::monogenic(r3.clone(), &[e("1"), e("-s"), e("t"), e("-u")])
            .map_err(|e| e.to_string())?;
        let q = discriminant_algebra(&generic).map_err(|e| e.to_string())?;
        expect("symbolic T", q.t().clone(), e("s*t - 3*u"))?;
        expect(
            "symbolic N",
            q.n().clone(),
            e("9*u^2 - 6*s*t*u + t^3 + s^3*u"),
        )?;

        // Concrete: 100 random specializations.
        let mut r = rng(102);
        for _ in 0..100 {
            let (s, t, u) = (
                r.random_range(-9i64..=9),
                r.random_range(-9i64..=9),
                r.random_range(-9i64..=9),
            );
            let alg = FreeAlgebra::monogenic_from_ints(z(), &[1, -s, t, -u])
                .map_err(|e| e.to_string())?;
            let q = discriminant_algebra(&alg).map_err(|e| e.to_string())?;
            let want_t = s * t - 3 * u;
            let want_n = 9 * u * u - 6 * s * t * u + t * t * t + s * s * s * u;
            expect(&format!("T at ({s},{t},{u})"), q.t().clone(), zel(want_t))?;
            expect(&format!("N at ({s},{t},{u})"), q.n().clone(), zel(want_n))?;
        }
        Ok(())
    });
}

#[test]
fn acceptance_03_schur_trace_table() {
    criterion(3, "schur-trace-table", Duration::from_secs(2), || {
        let required: [i64; 10] = [0, -3, 0, -5, 0, 105, 0, 81, 0, 6765];
        let mut computed = Vec::new();
        for n in 2..=11usize {
            let mut coeffs = vec![0i64; n + 1];
            coeffs[0] = 1;
            coeffs[n] = -1;
            let alg = FreeAlgebra::monogenic_from_ints(z(), &coeffs).map_err(|e| e.to_string())?;
            // Polarization route only.
            let t = ferrand::phi_orbit(&alg, &MultiDegree::all_ones(n)).map_err(|e| e.to_string())?;
            computed.push(t);
        }
        println!(
            "  computed T(2..11) = {:?}",
            computed.iter().map(|t| z().to_text(t)).collect::<Vec<_>>()
        );
        println!("  required T(2..11) = {required:?}");
        for (i, want) in required.iter().enumerate() {
            let n = i + 2;
            expect(&format!("T({n})"), computed[i].clone(), zel(*want))?;
        }
        Ok(())
    });
}

#[test]
fn acceptance_04_even_rank_closed_form() {
    criterion(4, "even-circulant-closed-form", Duration::from_secs(5), || {
        let mut computed = Vec::new();
        for n in [4usize, 6] {
            let mut coeffs = vec![0i64; n + 1];
            coeffs[0] = 1;
            coeffs[n] = -1;
            let alg = FreeAlgebra::monogenic_from_ints(z(), &coeffs).map_err(|e| e.to_string())?;
            let q = discriminant_algebra(&alg).map_err(|e| e.to_string())?;
            computed.push((n, q.t().clone(), q.n().clone(), q.disc()));
        }
        for (n, t, nm, d) in &computed {
            println!(
                "  computed Δ(x^{n}-1): (T, N) = ({}, {}), disc = {}",
                z().to_text(t),
                z().to_text(nm),
                z().to_text(d)
            );
        }
        println!("  required: (0, -64) and (0, 11664)");
        for (n, t, nm, _) in &computed {
            let want_n = if *n == 4 { -64 } else { 11664 };
            expect(&format!("T(x^{n}-1)"), t.clone(), zel(0))?;
            expect(&format!("N(x^{n}-1)"), nm.clone(), zel(want_n))?;
        }
        Ok(())
    });
}

#[test]
fn acceptance_05_discriminant_identification() {
    criterion(5, "discriminant-identification", Duration::from_secs(60), || {
        let mut corpus: Vec<FreeAlgebra> = Vec::new();
        let mut r = rng(105);
        for rank in 2..=6usize {
            for _ in 0..65 {
                corpus.push(random_monogenic(&z(), rank, &mut r));
            }
        }
        for (ra, rb) in [(2usize, 2usize), (2, 3), (3, 3)] {
            for _ in 0..30 {
                let a = random_monogenic(&z(), ra, &mut r);
                let b = random_monogenic(&z(), rb, &mut r);
                corpus.push(FreeAlgebra::product(&a, &b).unwrap());
            }
        }
        for k in 1..=4 {
            corpus.push(FreeAlgebra::square_zero(z(), k).unwrap());
        }
        let mut checked = corpus.len();
        // Base-changed entries are verified inline over their own rings.
        let verify = |alg: &FreeAlgebra| -> Result<(), String> {
            let q = discriminant_algebra(alg).map_err(|e| e.to_string())?;
            let d = alg.discriminant().map_err(|e| e.to_string())?;
            if q.disc() != d {
                return Err(format!(
                    "T² − 4N = {} but disc = {}",
                    alg.ring().to_text(&q.disc()),
                    alg.ring().to_text(&d)
                ));
            }
            Ok(())
        };
        for alg in &corpus {
            verify(alg)?;
        }
        for m in [3u64, 5, 7] {
            for rank in 2..=4usize {
                for _ in 0..7 {
                    let alg = random_monogenic(&z(), rank, &mut r)
                        .base_change(&RingMap::reduce_mod(m))
                        .unwrap();
                    verify(&alg)?;
                    checked += 1;
                }
            }
        }
        for m in [2u64, 4] {
            for rank in 2..=3usize {
                for _ in 0..8 {
                    let alg = random_monogenic(&z(), rank, &mut r)
                        .base_change(&RingMap::reduce_mod(m))
                        .unwrap();
                    verify(&alg)?;
                    checked += 1;
                }
            }
        }
        for rank in 2..=4usize {
            for _ in 0..4 {
                let alg = random_monogenic(&z(), rank, &mut r)
                    .base_change(&RingMap::IntegersToRationals)
                    .unwrap();
                verify(&alg)?;
                checked += 1;
            }
        }
        if checked < 500 {
            return Err(format!("corpus too small: {checked} < 500"));
        }
        println!("  corpus size: {checked}");
        Ok(())
    });
}

#[test]
fn acceptance_06_base_factor_exactness() {
    criterion(6, "unit-factor-exactness", Duration::from_secs(30), || {
        let mut r = rng(106);
        let trivial = FreeAlgebra::split(z(), 1).unwrap();
        let mut count = 0;
        while count < 50 {
            let rank = 2 + (count % 4); // ranks 2..=5
            let alg = random_monogenic(&z(), rank, &mut r);
            let extended = FreeAlgebra::product(&trivial, &alg).unwrap();
            let q = discriminant_algebra(&alg).map_err(|e| e.to_string())?;
            let qe = discriminant_algebra(&extended).map_err(|e| e.to_string())?;
            expect(&format!("Δ(Z×A) rank {rank}"), qe, q)?;
            count += 1;
        }
        Ok(())
    });
}

#[test]
fn acceptance_07_product_theorem() {
    criterion(7, "product-theorem", Duration::from_secs(60), || {
        let mut r = rng(107);
        let mut pairs = Vec::new();
        for (ra, rb) in [(2usize, 2usize), (2, 3), (3, 3)] {
            for _ in 0..7 {
                pairs.push((
                    random_monogenic(&z(), ra, &mut r),
                    random_monogenic(&z(), rb, &mut r),
                ));
            }
        }
        assert!(pairs.len() >= 20);
        for (a, b) in &pairs {
            let direct = discriminant_algebra(&FreeAlgebra::product(a, b).unwrap())
                .map_err(|e| e.to_string())?;
            let qa = discriminant_algebra(a).map_err(|e| e.to_string())?;
            let qb = discriminant_algebra(b).map_err(|e| e.to_string())?;
            let through = delta::star_product(&qa, &qb).map_err(|e| e.to_string())?;
            expect(
                "canonical forms",
                direct.canonical_z().map_err(|e| e.to_string())?,
                through.canonical_z().map_err(|e| e.to_string())?,
            )?;
        }
        Ok(())
    });
}

#[test]
fn acceptance_08_characteristic_two_soundness() {
    criterion(8, "characteristic-two-soundness", Duration::from_secs(30), || {
        let mut r = rng(108);
        let general = DeltaOptions::with_path(NormPath::General);
        for i in 0..30 {
            let rank = 2 + (i % 3); // ranks 2..=4
            let alg = random_monogenic(&z(), rank, &mut r);
            let qz = discriminant_algebra(&alg).map_err(|e| e.to_string())?;
            for m in [2u64, 4] {
                let map = RingMap::reduce_mod(m);
                let native =
                    discriminant_algebra_with(&alg.base_change(&map).unwrap(), &general)
                        .map_err(|e| e.to_string())?;
                let reduced = qz.base_change(&map).map_err(|e| e.to_string())?;
                expect(&format!("Δ mod {m} rank {rank}"), native, reduced)?;
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_09_oracle_equivalence() {
    criterion(9, "oracle-equivalence", Duration::from_secs(30), || {
        let mut r = rng(109);
        // Rewriting oracle against the norm-form route, every multidegree.
        for i in 0..20 {
            let rank = 2 + (i % 3); // ranks 2..=4
            let alg = random_monogenic(&z(), rank, &mut r);
            for alpha in MultiDegree::enumerate(rank) {
                let via_rewrite =
                    ferrand::ferrand_via_rewriting(&alg, &alpha).map_err(|e| e.to_string())?;
                let via_form = ferrand::phi_orbit(&alg, &alpha).map_err(|e| e.to_string())?;
                expect(&format!("rank {rank} α {:?}", alpha.degrees()), via_rewrite, via_form)?;
            }
        }
        // Dense tensor brute force: Φ is multiplicative.
        for rank in 2..=3usize {
            for _ in 0..10 {
                let alg = random_monogenic(&z(), rank, &mut r);
                let s = random_invariant(&alg, &mut r);
                let t = random_invariant(&alg, &mut r);
                let dense_product = DenseTensor::from_symmetric(&alg, &s)
                    .mul(&DenseTensor::from_symmetric(&alg, &t), &alg)
                    .to_symmetric(&alg)
                    .ok_or("dense product is not symmetric")?;
                let lhs = ferrand::phi(&alg, &dense_product).map_err(|e| e.to_string())?;
                let rhs = z().mul(
                    &ferrand::phi(&alg, &s).map_err(|e| e.to_string())?,
                    &ferrand::phi(&alg, &t).map_err(|e| e.to_string())?,
                );
                expect("Φ(s·t) = Φ(s)Φ(t)", lhs, rhs)?;
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_10_quadratic_self_identity() {
    criterion(10, "quadratic-self-identity", Duration::from_secs(5), || {
        let mut r = rng(110);
        for _ in 0..50 {
            let t = r.random_range(-20i64..=20);
            let n = r.random_range(-20i64..=20);
            let alg = FreeAlgebra::monogenic_from_ints(z(), &[1, -t, n])
                .map_err(|e| e.to_string())?;
            let q = discriminant_algebra(&alg).map_err(|e| e.to_string())?;
            expect(&format!("T for (T,N)=({t},{n})"), q.t().clone(), zel(t))?;
            expect(&format!("N for (T,N)=({t},{n})"), q.n().clone(), zel(n))?;
        }
        Ok(())
    });
}

#[test]
fn acceptance_11_split_and_orientation_checks() {
    criterion(11, "split-orientation-checks", Duration::from_secs(5), || {
        for n in 2..=6usize {
            let q = discriminant_algebra(&FreeAlgebra::split(z(), n).unwrap())
                .map_err(|e| e.to_string())?;
            expect(
                &format!("canonical Δ(Z^{n})"),
                q.canonical_z().map_err(|e| e.to_string())?,
                QuadraticAlgebra::split(z()).unwrap(),
            )?;
        }
        let rq = Ring::Rationals;
        let split_cubic = FreeAlgebra::monogenic_from_ints(rq.clone(), &[1, 0, -3, -1]).unwrap();
        let q = discriminant_algebra(&split_cubic).map_err(|e| e.to_string())?;
        expect("split(x³−3x−1)", q.is_split().map_err(|e| e.to_string())?, true)?;
        let nonsplit_cubic = FreeAlgebra::monogenic_from_ints(rq, &[1, 0, -1, -1]).unwrap();
        let q = discriminant_algebra(&nonsplit_cubic).map_err(|e| e.to_string())?;
        expect("split(x³−x−1)", q.is_split().map_err(|e| e.to_string())?, false)?;
        // The orientation mirror of the two-element quotient.
        expect(
            "orientation product (2,2)",
            orient::orientation_product_check(2, 2).map_err(|e| e.to_string())?,
            true,
        )?;
        expect(
            "orientation product (2,3)",
            orient::orientation_product_check(2, 3).map_err(|e| e.to_string())?,
            true,
        )?;
        Ok(())
    });
}

#[test]
fn acceptance_12_lemma_property_suites() {
    criterion(12, "lemma-property-suites", Duration::from_secs(60), || {
        use common::{gamma_dense, PermParity};
        use discalg::orient::Permutation;
        use itertools::Itertools;

        let mut r = rng(112);
        // Orbit-sum multiplication identity: dense at ranks 2–3, projected
        // into Δ at rank 4. ≥ 200 cases.
        let mut mult_cases = 0;
        for rank in 2..=3usize {
            for _ in 0..75 {
                let alg = random_monogenic(&z(), rank, &mut r);
                let a = random_tuple(&alg, &mut r);
                let b = random_tuple(&alg, &mut r);
                let lhs = gamma_dense(&alg, &a, PermParity::Even)
                    .mul(&gamma_dense(&alg, &b, PermParity::Even), &alg);
                let mut rhs = DenseTensor::zero(&alg);
                for perm in (0..rank).permutations(rank) {
                    if !Permutation::from_images(perm.clone()).unwrap().is_even() {
                        continue;
                    }
                    let ab: Vec<_> = (0..rank)
                        .map(|i| alg.mul(&a[i], &b[perm[i]]).unwrap())
                        .collect();
                    rhs = rhs.add(&gamma_dense(&alg, &ab, PermParity::Even), &alg);
                }
                if lhs != rhs {
                    return Err(format!("dense multiplication identity failed at rank {rank}"));
                }
                mult_cases += 1;
            }
        }
        for _ in 0..60 {
            let alg = random_monogenic(&z(), 4, &mut r);
            let q = discriminant_algebra(&alg).map_err(|e| e.to_string())?;
            let a = random_tuple(&alg, &mut r);
            let b = random_tuple(&alg, &mut r);
            let ga = reduce(&alg, &gamma_alternating(&alg, &a).unwrap(), &q).unwrap();
            let gb = reduce(&alg, &gamma_alternating(&alg, &b).unwrap(), &q).unwrap();
            let lhs = q.mul(&ga, &gb);
            let mut rhs = q.element(zel(0), zel(0));
            for perm in (0..4usize).permutations(4) {
                if !Permutation::from_images(perm.clone()).unwrap().is_even() {
                    continue;
                }
                let ab: Vec<_> = (0..4)
                    .map(|i| alg.mul(&a[i], &b[perm[i]]).unwrap())
                    .collect();
                let term = reduce(&alg, &gamma_alternating(&alg, &ab).unwrap(), &q).unwrap();
                rhs = q.add(&rhs, &term);
            }
            if lhs != rhs {
                return Err("projected multiplication identity failed at rank 4".into());
            }
            mult_cases += 1;
        }
        if mult_cases < 200 {
            return Err(format!("multiplication suite ran only {mult_cases} cases"));
        }

        // Pairing identity: ≥ 200 cases over ranks 2–4.
        let mut pairing_cases = 0;
        for rank in 2..=4usize {
            for _ in 0..70 {
                let alg = random_monogenic(&z(), rank, &mut r);
                let q = discriminant_algebra(&alg).map_err(|e| e.to_string())?;
                let a = random_tuple(&alg, &mut r);
                let b = random_tuple(&alg, &mut r);
                let ga = reduce(&alg, &gamma_alternating(&alg, &a).unwrap(), &q).unwrap();
                let gb = reduce(&alg, &gamma_alternating(&alg, &b).unwrap(), &q).unwrap();
                let da = q.sub(&ga, &q.involution(&ga));
                let db = q.sub(&gb, &q.involution(&gb));
                if q.mul(&da, &db) != q.element(alg.disc_bilinear(&a, &b).unwrap(), zel(0)) {
                    return Err(format!("pairing identity failed at rank {rank}"));
                }
                pairing_cases += 1;
            }
        }
        if pairing_cases < 200 {
            return Err(format!("pairing suite ran only {pairing_cases} cases"));
        }

        // Involution axioms: ≥ 200 cases.
        let mut involution_cases = 0;
        for rank in 2..=4usize {
            for _ in 0..24 {
                let alg = random_monogenic(&z(), rank, &mut r);
                let q = discriminant_algebra(&alg).map_err(|e| e.to_string())?;
                for _ in 0..3 {
                    let e = q.element(
                        zel(r.random_range(-9i64..=9)),
                        zel(r.random_range(-9i64..=9)),
                    );
                    let s = q.involution(&e);
                    if q.involution(&s) != e
                        || q.mul(&e, &s) != q.element(q.norm(&e), zel(0))
                        || q.add(&e, &s) != q.element(q.trace(&e), zel(0))
                    {
                        return Err("involution axiom failed".into());
                    }
                    involution_cases += 1;
                }
            }
        }
        // A couple of elements also exercise the element arithmetic against
        // the rank-2 structure-constant model.
        let sample = FreeAlgebra::monogenic_from_ints(z(), &[1, -3, 2]).unwrap();
        let q = discriminant_algebra(&sample).unwrap();
        let as_alg = q.as_algebra().map_err(|e| e.to_string())?;
        for _ in 0..10 {
            let x = random_element(&as_alg, &mut r);
            let y = random_element(&as_alg, &mut r);
            let via_alg = as_alg.mul(&x, &y).unwrap();
            let via_quad = q.mul(
                &q.element(x.coords[0].clone(), x.coords[1].clone()),
                &q.element(y.coords[0].clone(), y.coords[1].clone()),
            );
            if via_alg.coords != vec![via_quad.r.clone(), via_quad.d.clone()] {
                return Err("quadratic multiplication disagrees with its table".into());
            }
            involution_cases += 1;
        }
        if involution_cases < 200 {
            return Err(format!("involution suite ran only {involution_cases} cases"));
        }
        println!(
            "  cases: multiplication {mult_cases}, pairing {pairing_cases}, involution {involution_cases}"
        );
        Ok(())
    });
}
