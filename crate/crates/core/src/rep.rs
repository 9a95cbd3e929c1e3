//! Representations of `(1,…,1)` cyclic quivers: stability, Hitchin image,
//! the `(ℂ^×)^{n-1}` torus action and its normal forms, and the flow into the
//! nilpotent cone.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::divisor::Section;
use crate::error::{Error, Result};
use crate::quiver::CyclicQuiver;
use crate::Rational;

/// Maps `φ_1, …, φ_n` of a representation; `φ_i` is a section of
/// `O(d_{i+1} - d_i + t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicRep {
    quiver: CyclicQuiver,
    maps: Vec<Section>,
}

/// A representation whose first `n - 1` maps have scale one; `φ_n` carries
/// the residual scalar of the torus orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalRep(CyclicRep);

/// Outcome of the slope test, with a destabilizing subbundle on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub stable: bool,
    /// One-based node indices of a `Φ`-invariant coordinate subbundle whose
    /// slope is at least the total slope.
    pub witness: Option<Vec<usize>>,
}

impl CyclicRep {
    pub fn new(quiver: CyclicQuiver, maps: Vec<Section>) -> Result<Self> {
        if maps.len() != quiver.n() {
            return Err(Error::DegreeMismatch(format!(
                "quiver has {} arrows but {} maps were given",
                quiver.n(),
                maps.len()
            )));
        }
        for (i, m) in maps.iter().enumerate() {
            let want = quiver.map_degree(i);
            if m.degree() != want {
                return Err(Error::DegreeMismatch(format!(
                    "phi_{} must be a section of O({want}), got degree {}",
                    i + 1,
                    m.degree()
                )));
            }
        }
        Ok(CyclicRep { quiver, maps })
    }

    pub fn quiver(&self) -> &CyclicQuiver {
        &self.quiver
    }

    pub fn maps(&self) -> &[Section] {
        &self.maps
    }

    pub fn zero_count(&self) -> usize {
        self.maps.iter().filter(|m| m.is_zero()).count()
    }

    pub fn is_stable(&self) -> bool {
        self.stability().stable
    }

    /// Slope stability over the arrow-closed coordinate subbundles.
    ///
    /// Cutting the cycle at the vanishing maps leaves chains; a coordinate
    /// subbundle is `Φ`-invariant exactly when it meets each chain in a
    /// suffix. A dynamic program over chains finds the proper nonempty choice
    /// of suffixes with the largest slope excess.
    pub fn stability(&self) -> StabilityReport {
        let n = self.quiver.n();
        let total = self.quiver.total_degree();
        let weight: Vec<i64> = self
            .quiver
            .degrees()
            .iter()
            .map(|&d| n as i64 * d - total)
            .collect();
        let zero_at: Vec<usize> = (0..n).filter(|&i| self.maps[i].is_zero()).collect();
        if zero_at.is_empty() {
            return StabilityReport {
                stable: true,
                witness: None,
            };
        }

        // Chains, each listed from its head to the node whose outgoing map vanishes.
        let chains: Vec<Vec<usize>> = zero_at
            .iter()
            .enumerate()
            .map(|(k, &end)| {
                let prev = zero_at[(k + zero_at.len() - 1) % zero_at.len()];
                let start = (prev + 1) % n;
                let len = (end + n - start) % n + 1;
                (0..len).map(|o| (start + o) % n).collect()
            })
            .collect();

        // state index: bit 0 = some chain contributes nodes, bit 1 = some chain is not full
        let mut best: [Option<(i64, Vec<usize>)>; 4] = [Some((0, Vec::new())), None, None, None];
        for chain in &chains {
            let len = chain.len();
            let suffix_sum = |l: usize| -> i64 { chain[len - l..].iter().map(|&v| weight[v]).sum() };
            let mut options: Vec<(usize, usize, i64)> = vec![(0b10, 0, 0), (0b01, len, suffix_sum(len))];
            if let Some(l) = (1..len).max_by_key(|&l| (suffix_sum(l), std::cmp::Reverse(l))) {
                options.push((0b11, l, suffix_sum(l)));
            }
            let mut next: [Option<(i64, Vec<usize>)>; 4] = [None, None, None, None];
            for (state, entry) in best.iter().enumerate() {
                let Some((value, picks)) = entry else { continue };
                for &(flags, l, gain) in &options {
                    let s = state | flags;
                    let v = value + gain;
                    if next[s].as_ref().is_none_or(|(bv, _)| v > *bv) {
                        let mut p = picks.clone();
                        p.push(l);
                        next[s] = Some((v, p));
                    }
                }
            }
            best = next;
        }

        match &best[0b11] {
            Some((value, picks)) if *value >= 0 => {
                let mut nodes: Vec<usize> = chains
                    .iter()
                    .zip(picks)
                    .flat_map(|(c, &l)| c[c.len() - l..].iter().map(|&v| v + 1))
                    .collect();
                nodes.sort_unstable();
                StabilityReport {
                    stable: false,
                    witness: Some(nodes),
                }
            }
            _ => StabilityReport {
                stable: true,
                witness: None,
            },
        }
    }

    /// `γ = φ_1 ⋯ φ_n`, with `char_λ(Φ) = det(λ - Φ) = λ^n - γ`.
    pub fn hitchin_image(&self) -> Section {
        self.maps
            .iter()
            .skip(1)
            .fold(self.maps[0].clone(), |acc, m| acc.mul(m))
    }

    /// `φ_i ↦ λ_i φ_i` for `i < n` and `φ_n ↦ (λ_1 ⋯ λ_{n-1})^{-1} φ_n`.
    pub fn torus_act(&self, scalars: &[Rational]) -> Result<CyclicRep> {
        let n = self.quiver.n();
        if scalars.len() != n - 1 {
            return Err(Error::ScalarCount {
                expected: n - 1,
                got: scalars.len(),
            });
        }
        if scalars.iter().any(Zero::is_zero) {
            return Err(Error::ZeroScalar);
        }
        let prod: Rational = scalars.iter().fold(Rational::one(), |a, l| a * l);
        let mut maps: Vec<Section> = self.maps[..n - 1]
            .iter()
            .zip(scalars)
            .map(|(m, l)| m.scaled(l))
            .collect();
        maps.push(self.maps[n - 1].scaled(&prod.recip()));
        Ok(CyclicRep {
            quiver: self.quiver.clone(),
            maps,
        })
    }

    /// Scales `φ_1, …, φ_{n-1}` to one and moves their product onto `φ_n`.
    pub fn canonical_form(&self) -> Result<CanonicalRep> {
        let n = self.quiver.n();
        let mut prod = Rational::one();
        let mut maps = Vec::with_capacity(n);
        for (i, m) in self.maps[..n - 1].iter().enumerate() {
            let scale = m.scale().ok_or(Error::ZeroInteriorMap(i + 1))?;
            prod *= scale;
            maps.push(m.with_scale(Rational::one()));
        }
        maps.push(self.maps[n - 1].scaled(&prod));
        Ok(CanonicalRep(CyclicRep {
            quiver: self.quiver.clone(),
            maps,
        }))
    }

    /// Orbit representative valid for every zero pattern: with any vanishing
    /// map the torus can normalize all remaining scales to one; otherwise the
    /// product of scales is the only invariant.
    fn orbit_normal_form(&self) -> CyclicRep {
        if self.zero_count() == 0 {
            return self.canonical_form().expect("no map vanishes").0;
        }
        CyclicRep {
            quiver: self.quiver.clone(),
            maps: self.maps.iter().map(|m| m.with_scale(Rational::one())).collect(),
        }
    }

    /// Isomorphism of representations, i.e. equality of torus orbits.
    pub fn equivalent(&self, other: &CyclicRep) -> Result<bool> {
        if self.quiver != other.quiver {
            return Err(Error::QuiverMismatch);
        }
        Ok(self.orbit_normal_form() == other.orbit_normal_form())
    }

    /// Limit of `(φ_1, …, φ_{n-1}, c φ_n)` as `c → 0`.
    pub fn flow_limit(&self) -> CyclicRep {
        let mut maps = self.maps.clone();
        let last = maps.len() - 1;
        maps[last] = Section::zero(maps[last].degree());
        CyclicRep {
            quiver: self.quiver.clone(),
            maps,
        }
    }
}

impl CanonicalRep {
    /// Wraps a representation already in canonical form.
    pub fn from_rep(rep: CyclicRep) -> Result<Self> {
        let c = rep.canonical_form()?;
        if c.0 != rep {
            return Err(Error::InvalidSection("representation is not in canonical form".into()));
        }
        Ok(c)
    }

    pub fn rep(&self) -> &CyclicRep {
        &self.0
    }

    pub fn into_rep(self) -> CyclicRep {
        self.0
    }
}

impl std::ops::Deref for CanonicalRep {
    type Target = CyclicRep;

    fn deref(&self) -> &CyclicRep {
        &self.0
    }
}
