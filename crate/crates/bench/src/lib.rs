//! Benchmark-only crate; see `benches/kernels.rs`.

use discalg::ring::Ring;
use discalg::FreeAlgebra;

/// `Z[x]/(xⁿ − 1)`, the standard benchmark family.
pub fn circulant(n: usize) -> FreeAlgebra {
    let mut coeffs = vec![0i64; n + 1];
    coeffs[0] = 1;
    coeffs[n] = -1;
    FreeAlgebra::monogenic_from_ints(Ring::Integers, &coeffs).expect("monic")
}
