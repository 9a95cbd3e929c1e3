#![allow(dead_code)]

use std::collections::BTreeSet;

use cyclic_moduli::{CoeffForm, CyclicQuiver, CyclicRep, Divisor, K1Quiver, K1Rep, ProjPoint, Rational, Section};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat(rng: &mut StdRng) -> Rational {
    let num = rng.gen_range(-6i64..=6);
    let den = rng.gen_range(1i64..=4);
    Rational::new(num.into(), den.into())
}

pub fn nonzero_rat(rng: &mut StdRng) -> Rational {
    loop {
        let r = rat(rng);
        if r != q(0) {
            return r;
        }
    }
}

/// A point from a small pool so repeats are common.
pub fn point(rng: &mut StdRng) -> ProjPoint {
    if rng.gen_ratio(1, 8) {
        ProjPoint::Infinity
    } else {
        ProjPoint::affine(Rational::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=2).into()))
    }
}

pub fn divisor(rng: &mut StdRng, degree: usize) -> Divisor {
    Divisor::from_points((0..degree).map(|_| point(rng)))
}

pub fn section(rng: &mut StdRng, degree: usize) -> Section {
    Section::new(nonzero_rat(rng), divisor(rng, degree)).unwrap()
}

pub fn distinct_points(rng: &mut StdRng, count: usize) -> Vec<ProjPoint> {
    let mut pool: Vec<i64> = (-20..=20).collect();
    pool.shuffle(rng);
    let mut pts: Vec<ProjPoint> = pool[..count].iter().map(|&x| ProjPoint::from_int(x)).collect();
    if count > 0 && rng.gen_ratio(1, 4) {
        pts[0] = ProjPoint::Infinity;
    }
    pts
}

/// Canonical admissible quiver with `n` nodes and twist `t`.
pub fn admissible_quiver(rng: &mut StdRng, n: usize, t: i64) -> CyclicQuiver {
    let total = n as i64 * t;
    // random composition of nt into n nonnegative parts
    let mut cuts: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(0..=total)).collect();
    cuts.sort_unstable();
    let mut parts = Vec::with_capacity(n);
    let mut prev = 0;
    for c in cuts {
        parts.push(c - prev);
        prev = c;
    }
    parts.push(total - prev);
    let mut degrees = vec![rng.gen_range(-3i64..=3)];
    for p in &parts[..n - 1] {
        let last = *degrees.last().unwrap();
        degrees.push(last + p - t);
    }
    CyclicQuiver::new(t, degrees).unwrap().reindex_canonical().unwrap()
}

/// Random quiver with `n ≤ 5`, `t ≤ 4`, `nt ≤ 10`.
pub fn small_quiver(rng: &mut StdRng) -> CyclicQuiver {
    loop {
        let n = rng.gen_range(2..=5);
        let t = rng.gen_range(0..=4);
        if n as i64 * t <= 10 {
            return admissible_quiver(rng, n, t);
        }
    }
}

/// Random rep; each map vanishes with probability `zero_odds` (always when
/// its degree is negative).
pub fn random_rep(rng: &mut StdRng, quiver: &CyclicQuiver, zero_odds: f64) -> CyclicRep {
    let maps = quiver
        .map_degrees()
        .iter()
        .map(|&d| {
            if d < 0 || rng.gen_bool(zero_odds) {
                Section::zero(d)
            } else {
                section(rng, d as usize)
            }
        })
        .collect();
    CyclicRep::new(quiver.clone(), maps).unwrap()
}

/// Quiver of any node degrees in a small window, not necessarily admissible.
pub fn any_quiver(rng: &mut StdRng, max_n: usize) -> CyclicQuiver {
    let n = rng.gen_range(2..=max_n);
    let t = rng.gen_range(0..=3);
    let degrees = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
    CyclicQuiver::new(t, degrees).unwrap()
}

/// Arrow-closed coordinate subsets checked one by one.
pub fn naive_stable(rep: &CyclicRep) -> bool {
    let q = rep.quiver();
    let n = q.n();
    let total = q.total_degree();
    for mask in 1u32..(1 << n) - 1 {
        let inside = |i: usize| mask >> i & 1 == 1;
        let closed = (0..n).all(|i| !inside(i) || rep.maps()[i].is_zero() || inside((i + 1) % n));
        if !closed {
            continue;
        }
        let size = mask.count_ones() as i64;
        let deg: i64 = (0..n).filter(|&i| inside(i)).map(|i| q.degrees()[i]).sum();
        if n as i64 * deg >= size * total {
            return false;
        }
    }
    true
}

/// All ordered tuples `(D_1, …, D_n)` of divisors with `deg D_i = sizes[i]`
/// and `Σ D_i = D`, found by placing the points of `D` one at a time.
pub fn brute_splittings(d: &Divisor, sizes: &[usize]) -> BTreeSet<Vec<Divisor>> {
    fn go(pts: &[ProjPoint], sizes: &[usize], cur: &mut Vec<Vec<ProjPoint>>, out: &mut BTreeSet<Vec<Divisor>>) {
        let Some((p, rest)) = pts.split_first() else {
            out.insert(cur.iter().map(|v| Divisor::from_points(v.iter().cloned())).collect());
            return;
        };
        for i in 0..sizes.len() {
            if cur[i].len() < sizes[i] {
                cur[i].push(p.clone());
                go(rest, sizes, cur, out);
                cur[i].pop();
            }
        }
    }
    let pts = d.expanded();
    assert_eq!(pts.len(), sizes.iter().sum::<usize>());
    let mut out = BTreeSet::new();
    go(&pts, sizes, &mut vec![Vec::new(); sizes.len()], &mut out);
    out
}

/// Words over `parts.len()` letters using letter `i` exactly `parts[i]`
/// times, counted by listing them.
pub fn brute_multinomial(parts: &[usize]) -> BigUint {
    fn go(left: &mut [usize]) -> u64 {
        if left.iter().all(|&l| l == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                total += go(left);
                left[i] += 1;
            }
        }
        total
    }
    BigUint::from(go(&mut parts.to_vec()))
}

pub fn form(rng: &mut StdRng, degree: i64) -> CoeffForm {
    let coeffs = (0..=degree).map(|_| q(rng.gen_range(-5..=5))).collect();
    CoeffForm::new(degree, coeffs).unwrap()
}

pub fn nonzero_form(rng: &mut StdRng, degree: i64) -> CoeffForm {
    loop {
        let f = form(rng, degree);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn k1_quiver(rng: &mut StdRng, max_k: usize) -> K1Quiver {
    loop {
        let k = rng.gen_range(1..=max_k);
        let t = rng.gen_range(1..=5);
        let tail = rng.gen_range(-4..=0);
        let mut a: Vec<i64> = Vec::new();
        let mut next = rng.gen_range(-1..=2);
        for _ in 0..k {
            a.push(next);
            next -= rng.gen_range(1..=2);
        }
        // a is strictly decreasing by construction
        if let Ok(qk) = K1Quiver::new(t, a, tail) {
            return qk;
        }
    }
}

pub fn k1_rep(rng: &mut StdRng, qk: &K1Quiver) -> K1Rep {
    let odd = (0..qk.k()).map(|i| nonzero_form(rng, qk.odd_degree(i))).collect();
    let even = (0..qk.k()).map(|i| form(rng, qk.even_degree(i))).collect();
    K1Rep::new(qk.clone(), odd, even).unwrap()
}
