//! Points of the cyclic moduli space over a fixed Hitchin base point.
//!
//! Over `γ ≠ 0` a point is an ordered splitting of the divisor of `γ` into
//! divisors of the map degrees; the scalar of `γ` sits on `φ_n`. Over `γ = 0`
//! the fibre is the A-type quiver variety `∏ ℙ^{d_{i+1}-d_i+t}`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::divisor::{divisor_contains, Divisor, ProjPoint, Section};
use crate::error::{Error, Result};
use crate::quiver::CyclicQuiver;
use crate::rep::{CanonicalRep, CyclicRep};
use crate::Rational;

/// Canonical representatives of all points over one base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibreSet {
    pub base_point: Section,
    pub points: Vec<CanonicalRep>,
    pub is_nilcone: bool,
    pub nilcone_dims: Option<Vec<i64>>,
}

/// The fibre over zero: `φ_n` vanishes and the rest is a point of a product
/// of projective spaces of the listed dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilconeDescriptor {
    pub dims: Vec<i64>,
    /// One-based index of the map forced to vanish.
    pub vanishing_map: usize,
}

#[derive(Serialize)]
struct FibreJson {
    gamma: String,
    count: usize,
    points: Vec<PointJson>,
    nilcone: bool,
    nilcone_dims: Vec<i64>,
}

#[derive(Serialize)]
struct PointJson {
    phis: Vec<String>,
}

impl Serialize for FibreSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FibreJson {
            gamma: self.base_point.to_string(),
            count: self.points.len(),
            points: self
                .points
                .iter()
                .map(|p| PointJson {
                    phis: p.maps().iter().map(ToString::to_string).collect(),
                })
                .collect(),
            nilcone: self.is_nilcone,
            nilcone_dims: self.nilcone_dims.clone().unwrap_or_default(),
        }
        .serialize(s)
    }
}

impl FibreSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn require_canonical(q: &CyclicQuiver) -> Result<()> {
    if !q.admits_stable() {
        return Err(Error::NoStableIndexing);
    }
    if !q.is_canonical() {
        return Err(Error::InvalidQuiver(
            "quiver is not in canonical indexing; reindex it first".into(),
        ));
    }
    Ok(())
}

/// Size-`k` sub-multisets of `avail` (multiplicities over a fixed point
/// order), in lexicographic order of their sorted point lists.
fn sub_multisets(avail: &[u32], k: u32) -> Vec<Vec<u32>> {
    fn go(avail: &[u32], idx: usize, left: u32, suffix_cap: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx == avail.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if suffix_cap[idx + 1] + avail[idx] < left {
            return;
        }
        let hi = avail[idx].min(left);
        let lo = left.saturating_sub(suffix_cap[idx + 1]);
        for take in (lo..=hi).rev() {
            cur.push(take);
            go(avail, idx + 1, left - take, suffix_cap, cur, out);
            cur.pop();
        }
    }
    let mut suffix_cap = vec![0u32; avail.len() + 1];
    for i in (0..avail.len()).rev() {
        suffix_cap[i] = suffix_cap[i + 1] + avail[i];
    }
    let mut out = Vec::new();
    go(avail, 0, k, &suffix_cap, &mut Vec::with_capacity(avail.len()), &mut out);
    out
}

/// All ordered splittings of `avail` into parts of the given sizes; the last
/// part takes whatever remains.
fn splittings(avail: &[u32], sizes: &[u32]) -> Vec<Vec<Vec<u32>>> {
    if sizes.len() == 1 {
        return vec![vec![avail.to_vec()]];
    }
    let mut out = Vec::new();
    for first in sub_multisets(avail, sizes[0]) {
        let rest: Vec<u32> = avail.iter().zip(&first).map(|(a, f)| a - f).collect();
        for mut tail in splittings(&rest, &sizes[1..]) {
            tail.insert(0, first.clone());
            out.push(tail);
        }
    }
    out
}

/// Enumerates the fibre over a nonzero `γ`, one canonical representative per
/// ordered distribution of the zeros of `γ`, in lexicographic order of
/// `(D_1, …, D_{n-1})`.
pub fn enumerate_fibre(q: &CyclicQuiver, gamma: &Section) -> Result<FibreSet> {
    require_canonical(q)?;
    let n = q.n() as i64;
    let expected = n * q.twist();
    if gamma.degree() != expected {
        return Err(Error::DegreeMismatch(format!(
            "base point must be a section of O({expected}), got degree {}",
            gamma.degree()
        )));
    }
    let (scale, zeros) = match gamma {
        Section::Zero { .. } => return Err(Error::ZeroGamma),
        Section::NonZero { scale, zeros } => (scale, zeros),
    };
    let support: Vec<ProjPoint> = zeros.iter().map(|(p, _)| p.clone()).collect();
    let avail: Vec<u32> = zeros.profile();
    let sizes: Vec<u32> = q.map_degrees().iter().map(|&d| d as u32).collect();

    let to_divisor = |mults: &[u32]| -> Divisor {
        support.iter().cloned().zip(mults.iter().copied()).collect()
    };

    // Split on the choice of D_1; rayon's indexed collect keeps the order.
    let firsts = sub_multisets(&avail, sizes[0]);
    let points: Vec<CanonicalRep> = firsts
        .par_iter()
        .flat_map_iter(|first| {
            let rest: Vec<u32> = avail.iter().zip(first).map(|(a, f)| a - f).collect();
            splittings(&rest, &sizes[1..]).into_iter().map(move |mut tail| {
                tail.insert(0, first.clone());
                tail
            })
        })
        .map(|parts| {
            let last = parts.len() - 1;
            let maps: Vec<Section> = parts
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    let s = if i == last { scale.clone() } else { Rational::one() };
                    Section::new(s, to_divisor(m)).expect("scale is nonzero")
                })
                .collect();
            let rep = CyclicRep::new(q.clone(), maps).expect("part sizes match map degrees");
            CanonicalRep::from_rep(rep).expect("interior scales are one")
        })
        .collect();

    debug_assert!(points.iter().all(|p| {
        let head = p.maps()[..p.maps().len() - 1]
            .iter()
            .fold(Section::constant(Rational::one()).unwrap(), |acc, m| acc.mul(m));
        head.zeros().is_some_and(|d| divisor_contains(d, zeros))
    }));

    Ok(FibreSet {
        base_point: gamma.clone(),
        points,
        is_nilcone: false,
        nilcone_dims: None,
    })
}

/// Like [`enumerate_fibre`], but answers `γ = 0` with the nilpotent-cone
/// description instead of an error.
pub fn fibre_or_nilcone(q: &CyclicQuiver, gamma: &Section) -> Result<FibreSet> {
    if gamma.is_zero() {
        require_canonical(q)?;
        let expected = q.n() as i64 * q.twist();
        if gamma.degree() != expected {
            return Err(Error::DegreeMismatch(format!(
                "base point must be a section of O({expected}), got degree {}",
                gamma.degree()
            )));
        }
        return Ok(FibreSet {
            base_point: gamma.clone(),
            points: Vec::new(),
            is_nilcone: true,
            nilcone_dims: Some(nilcone_fibre(q)?.dims),
        });
    }
    enumerate_fibre(q, gamma)
}

/// Number of points over any `γ` whose zeros have the given multiplicities.
///
/// Convolves, point by point, the ways to share each multiplicity among the
/// `n` maps, keeping only partial fillings that respect the map degrees.
pub fn count_fibre(q: &CyclicQuiver, profile: &[u32]) -> Result<BigUint> {
    require_canonical(q)?;
    let nt = q.n() as i64 * q.twist();
    let sum: i64 = profile.iter().map(|&m| i64::from(m)).sum();
    if sum != nt {
        return Err(Error::ProfileMismatch(format!("profile sums to {sum}, expected {nt}")));
    }
    if profile.contains(&0) {
        return Err(Error::ProfileMismatch("multiplicities must be positive".into()));
    }
    let sizes: Vec<u32> = q.map_degrees().iter().map(|&d| d as u32).collect();
    Ok(count_splittings(profile, &sizes))
}

/// Ordered splittings of a multiset with multiplicity `profile` into parts of
/// the given sizes (which must sum to the profile total).
pub(crate) fn count_splittings(profile: &[u32], sizes: &[u32]) -> BigUint {
    let k = sizes.len();
    let head = &sizes[..k - 1];
    let mut states: HashMap<Vec<u32>, BigUint> = HashMap::from([(vec![0; k - 1], BigUint::one())]);
    let mut seen = 0u32;
    for &m in profile {
        seen += m;
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::new();
        for (filled, ways) in &states {
            let mut cur = filled.clone();
            distribute(m, 0, head, &mut cur, &mut |state| {
                let last_fill = seen - state.iter().sum::<u32>();
                if last_fill <= sizes[k - 1] {
                    *next.entry(state.to_vec()).or_insert_with(BigUint::zero) += ways;
                }
            });
        }
        states = next;
    }
    states.remove(head).unwrap_or_default()
}

fn distribute(left: u32, idx: usize, caps: &[u32], cur: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if idx == caps.len() {
        emit(cur);
        return;
    }
    let room = caps[idx] - cur[idx];
    for c in 0..=room.min(left) {
        cur[idx] += c;
        distribute(left - c, idx + 1, caps, cur, emit);
        cur[idx] -= c;
    }
}

/// The nilpotent-cone fibre `∏_{i<n} ℙ^{d_{i+1}-d_i+t}` with `φ_n = 0`.
pub fn nilcone_fibre(q: &CyclicQuiver) -> Result<NilconeDescriptor> {
    require_canonical(q)?;
    let degrees = q.map_degrees();
    Ok(NilconeDescriptor {
        dims: degrees[..q.n() - 1].to_vec(),
        vanishing_map: q.n(),
    })
}
