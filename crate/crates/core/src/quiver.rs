//! Labelled cyclic quivers of type `(1,…,1)` with a twist degree, and the
//! symbolic description of their moduli spaces.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json::biguint;

/// A cyclic quiver `•_{1,d_1} → … → •_{1,d_n} → •_{1,d_1}` twisted by `O(t)`.
///
/// Map `φ_i : U_i → U_{i+1} ⊗ O(t)` is a section of `O(d_{i+1} - d_i + t)`,
/// indices taken mod `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicQuiver {
    twist: i64,
    degrees: Vec<i64>,
}

/// Symbolic structure of the moduli space of a canonical cyclic quiver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuliDescriptor {
    /// Sheets of the covering over the nonzero Hitchin base.
    #[serde(serialize_with = "biguint")]
    pub sheet_count: BigUint,
    /// Dimensions of the projective factors of the nilpotent cone.
    pub nilcone_dims: Vec<i64>,
    /// Rank of the tautological bundle whose total space is the moduli space.
    pub bundle_rank: i64,
    pub rep_dim: i64,
    pub moduli_dim: i64,
    /// `gcd(n, Σ d_i) = 1`; otherwise strictly semistable points may exist.
    pub coprime: bool,
}

/// The chain obtained by deleting the arrow carrying `φ_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ATypeQuiver {
    pub twist: i64,
    pub degrees: Vec<i64>,
}

impl ATypeQuiver {
    /// Degrees of the `n - 1` chain maps.
    pub fn map_degrees(&self) -> Vec<i64> {
        self.degrees.windows(2).map(|w| w[1] - w[0] + self.twist).collect()
    }
}

impl CyclicQuiver {
    pub fn new(twist: i64, degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() < 2 {
            return Err(Error::InvalidQuiver(format!(
                "a cyclic quiver needs at least 2 nodes, got {}",
                degrees.len()
            )));
        }
        if twist < 0 {
            return Err(Error::InvalidQuiver(format!("twist degree must be >= 0, got {twist}")));
        }
        Ok(CyclicQuiver { twist, degrees })
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn total_degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// Degree of `φ_{i+1}` (zero-based `i`), i.e. `d_{i+2} - d_{i+1} + t` mod `n`.
    pub fn map_degree(&self, i: usize) -> i64 {
        let n = self.n();
        self.degrees[(i + 1) % n] - self.degrees[i] + self.twist
    }

    pub fn map_degrees(&self) -> Vec<i64> {
        (0..self.n()).map(|i| self.map_degree(i)).collect()
    }

    pub fn is_coprime(&self) -> bool {
        (self.n() as i64).gcd(&self.total_degree()) == 1
    }

    /// Whether stable representations exist: every cyclic map degree is
    /// nonnegative. Rotation invariant, and it implies `t ≥ d_i - d_{i+1}`
    /// for `i < n` in every rotation.
    pub fn admits_stable(&self) -> bool {
        self.map_degrees().iter().all(|&d| d >= 0)
    }

    fn rotation(&self, r: usize) -> CyclicQuiver {
        let mut degrees = self.degrees.clone();
        degrees.rotate_left(r);
        CyclicQuiver {
            twist: self.twist,
            degrees,
        }
    }

    /// Slope comparison of the tails `U_j ⊕ … ⊕ U_n` (`j ≥ 2`) against the
    /// total slope; these are the invariant subbundles when only `φ_n`
    /// vanishes. `strict` asks for all tails strictly below.
    fn last_map_may_vanish(&self, strict: bool) -> bool {
        let n = self.n() as i64;
        let total = self.total_degree();
        let mut tail = 0i64;
        let mut len = 0i64;
        for &d in self.degrees[1..].iter().rev() {
            tail += d;
            len += 1;
            let lhs = n * tail;
            let rhs = len * total;
            if lhs > rhs || (strict && lhs == rhs) {
                return false;
            }
        }
        true
    }

    /// Rotates the nodes so that `φ_n` is the map allowed to vanish.
    ///
    /// Preference order among rotations: `φ_n = 0` gives a stable
    /// representation, then a semistable one, then any; ties go to the
    /// lexicographically smallest degree list.
    pub fn reindex_canonical(&self) -> Result<CyclicQuiver> {
        if !self.admits_stable() {
            return Err(Error::NoStableIndexing);
        }
        let rotations: Vec<CyclicQuiver> = (0..self.n()).map(|r| self.rotation(r)).collect();
        let pick = |pred: &dyn Fn(&CyclicQuiver) -> bool| {
            rotations
                .iter()
                .filter(|q| pred(q))
                .min_by(|a, b| a.degrees.cmp(&b.degrees))
                .cloned()
        };
        Ok(pick(&|q| q.last_map_may_vanish(true))
            .or_else(|| pick(&|q| q.last_map_may_vanish(false)))
            .or_else(|| pick(&|_| true))
            .expect("a quiver has at least one rotation"))
    }

    pub fn is_canonical(&self) -> bool {
        self.reindex_canonical().is_ok_and(|c| &c == self)
    }

    /// Multinomial `(nt)! / ∏ (d_{i+1} - d_i + t)!`, the sheet count over the
    /// nonzero Hitchin base. Zero if some map degree is negative.
    pub fn eta(&self) -> BigUint {
        let parts = self.map_degrees();
        if parts.iter().any(|&p| p < 0) {
            return BigUint::ZERO;
        }
        multinomial(&parts.iter().map(|&p| p as u64).collect::<Vec<_>>())
    }

    pub fn moduli_descriptor(&self) -> ModuliDescriptor {
        let parts = self.map_degrees();
        let n = self.n();
        let rep_dim: i64 = parts.iter().map(|p| p + 1).sum();
        ModuliDescriptor {
            sheet_count: self.eta(),
            nilcone_dims: parts[..n - 1].to_vec(),
            bundle_rank: parts[n - 1] + 1,
            rep_dim,
            moduli_dim: rep_dim - (n as i64 - 1),
            coprime: self.is_coprime(),
        }
    }

    pub fn associated_a_type(&self) -> ATypeQuiver {
        ATypeQuiver {
            twist: self.twist,
            degrees: self.degrees.clone(),
        }
    }
}

/// `(Σ k_i)! / ∏ k_i!` computed as a product of binomials.
pub fn multinomial(parts: &[u64]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0u64;
    for &k in parts {
        total += k;
        acc *= binomial(total, k);
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
