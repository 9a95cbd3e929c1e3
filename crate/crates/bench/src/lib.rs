//! Fixtures shared by the benchmarks.

use cyclic_moduli::{to_coeffs, CyclicQuiver, Divisor, K1Quiver, K1Rep, ProjPoint, Rational, Section};

/// Canonical quiver with `n` nodes, twist `t`, and map degrees as even as
/// possible.
pub fn balanced_quiver(n: usize, t: i64) -> CyclicQuiver {
    let total = n as i64 * t;
    let parts: Vec<i64> = (0..n as i64).map(|i| total / n as i64 + i64::from(i < total % n as i64)).collect();
    let mut degrees = vec![0];
    for p in &parts[..n - 1] {
        let last = *degrees.last().unwrap();
        degrees.push(last + p - t);
    }
    CyclicQuiver::new(t, degrees)
        .and_then(|q| q.reindex_canonical())
        .expect("balanced degrees admit stable reps")
}

/// Monic section with simple zeros at `0, 1, …, degree - 1`.
pub fn distinct_gamma(degree: i64) -> Section {
    Section::monic((0..degree).map(ProjPoint::from_int))
}

/// Section of degree `2m` with `m` double zeros.
pub fn doubled_gamma(m: i64) -> Section {
    Section::new(
        Rational::from_integer(1.into()),
        Divisor::from_pairs((0..m).map(|x| (ProjPoint::from_int(x), 2))),
    )
    .expect("nonzero scale")
}

/// A `(k,1)` rep whose odd maps have disjoint zeros, so the reduction
/// has a unique solution.
/// Splitting `(k-1, …, 1, 0)`; needs `t ≥ k(k+1)/2 + k(k-1)/2 + 1`.
pub fn k1_rep(k: usize, t: i64) -> K1Rep {
    let k_i = k as i64;
    let tail = -(k_i * (k_i - 1) / 2) - 1;
    let split: Vec<i64> = (0..k as i64).rev().collect();
    let quiver = K1Quiver::new(t, split, tail).expect("valid splitting");
    let monic = |deg: i64, shift: i64| to_coeffs(&Section::monic((0..deg).map(|x| ProjPoint::from_int(x + shift))));
    let odd = (0..k).map(|i| monic(quiver.odd_degree(i), 20 * i as i64)).collect();
    let even = (0..k).map(|i| monic(quiver.even_degree(i), 3 * i as i64 + 1)).collect();
    K1Rep::new(quiver, odd, even).expect("degrees match")
}
