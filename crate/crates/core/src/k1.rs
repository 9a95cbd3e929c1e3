//! Type `(k,1)` cyclic quivers `•_{k,·} ⇄ •_{1,d_2}` whose rank-`k` node
//! splits as `O(a_1) ⊕ … ⊕ O(a_k)` with distinct degrees.
//!
//! Map `φ_{2i-1} : O(a_i) → O(d_2) ⊗ O(t)` and `φ_{2i} : O(d_2) → O(a_i) ⊗ O(t)`.
//! The triangular automorphisms `ψ_{ij} : O(a_i) → O(a_j)` (`i > j`) are used
//! to kill the top coefficients of the odd maps, after which the moduli space
//! splits into adjusted `(1,1)` factors.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::divisor::ProjPoint;
use crate::error::{Error, Result};
use crate::fibre::count_splittings;
use crate::form::{from_coeffs, reduce_top, CoeffForm};
use crate::json::biguint;
use crate::poly::{self, Poly};
use crate::quiver::binomial;
use crate::Rational;

/// Splitting type `a_1 > … > a_k`, tail degree `d_2`, twist `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct K1Quiver {
    twist: i64,
    splitting: Vec<i64>,
    tail: i64,
}

/// A `(1,1)` cyclic quiver `•_{1,head} ⇄ •_{1,tail}` whose non-vanishing map
/// `head → tail` has lost `reduction` dimensions of freedom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjustedQuiver {
    pub twist: i64,
    pub head: i64,
    pub tail: i64,
    pub reduction: i64,
}

/// Product decomposition of a `(k,1)` moduli space into adjusted factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionDescriptor {
    pub factors: Vec<AdjustedQuiver>,
    /// Sheets of the fibre over the first `k - 1` factors.
    #[serde(serialize_with = "biguint")]
    pub cover_count: BigUint,
    /// Projective dimension of the fibre over the locus where the residual vanishes.
    pub special_locus_dim: i64,
}

/// The residual `γ - Σ_{i<k} φ_{2i-1} φ_{2i}` described by the zeros left after
/// ignoring the reduced top degrees, or the zero residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Profile(Vec<u32>),
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum K1FibreCount {
    Finite {
        #[serde(serialize_with = "biguint")]
        count: BigUint,
    },
    SpecialLocus {
        projective_dim: i64,
    },
}

/// A representation with maps stored as coefficient forms; reduced odd maps
/// need not split over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K1Rep {
    quiver: K1Quiver,
    odd: Vec<CoeffForm>,
    even: Vec<CoeffForm>,
}

/// Result of the Euclidean reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub rep: K1Rep,
    /// `(i, j, ψ_{ij})` for `i > j` (one-based), `ψ_{ij} : O(a_i) → O(a_j)`,
    /// with `φ'_{2i-1} = φ_{2i-1} + Σ_{j<i} ψ_{ij} φ_{2j-1}` in the input maps.
    pub multipliers: Vec<(usize, usize, CoeffForm)>,
    /// `s` of the chart `w ↦ w + s z` in which the top coefficients vanish;
    /// zero for the standard chart at `∞`.
    pub chart_shift: Rational,
}

/// Characteristic polynomial `det(λ - Φ)` of the block Higgs field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyReport {
    /// Matrix size `r = k + 1`.
    pub rank: usize,
    /// `coefficients[j]` is the coefficient of `λ^j` as a polynomial in `z`.
    pub coefficients: Vec<Vec<Rational>>,
    /// Largest `j < r` with a nonzero coefficient.
    pub subleading_exponent: Option<usize>,
}

impl K1Quiver {
    pub fn new(twist: i64, splitting: Vec<i64>, tail: i64) -> Result<Self> {
        if twist < 0 {
            return Err(Error::InvalidSplitting(format!("twist must be >= 0, got {twist}")));
        }
        if splitting.is_empty() {
            return Err(Error::InvalidSplitting("splitting type is empty".into()));
        }
        if splitting.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidSplitting(format!(
                "degrees must be strictly decreasing, got {splitting:?}"
            )));
        }
        let k = splitting.len() as i64;
        let total: i64 = splitting.iter().sum::<i64>() + tail;
        let smallest = *splitting.last().expect("nonempty");
        if total >= (k + 1) * smallest {
            return Err(Error::InvalidSplitting(format!(
                "total slope {total}/{} must lie below every a_i",
                k + 1
            )));
        }
        if let Some(a) = splitting.iter().find(|&&a| -a + tail + twist < 0) {
            return Err(Error::InvalidSplitting(format!(
                "map O({a}) -> O({tail}) ⊗ O({twist}) has negative degree"
            )));
        }
        Ok(K1Quiver {
            twist,
            splitting,
            tail,
        })
    }

    pub fn k(&self) -> usize {
        self.splitting.len()
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn splitting(&self) -> &[i64] {
        &self.splitting
    }

    pub fn tail(&self) -> i64 {
        self.tail
    }

    /// Degree of `φ_{2i-1}` for zero-based summand `i`.
    pub fn odd_degree(&self, i: usize) -> i64 {
        -self.splitting[i] + self.tail + self.twist
    }

    /// Degree of `φ_{2i}` for zero-based summand `i`.
    pub fn even_degree(&self, i: usize) -> i64 {
        self.splitting[i] - self.tail + self.twist
    }

    /// Degree of `ψ` from summand `i` into summand `j < i`.
    fn automorphism_degree(&self, j: usize, i: usize) -> i64 {
        self.splitting[j] - self.splitting[i]
    }

    /// `b_i = Σ_{j<i} (a_j - a_i + 1)`.
    pub fn reduction_amounts(&self) -> Vec<i64> {
        (0..self.k())
            .map(|i| (0..i).map(|j| self.automorphism_degree(j, i) + 1).sum())
            .collect()
    }

    fn check_reducible(&self) -> Result<Vec<i64>> {
        let b = self.reduction_amounts();
        for (i, &bi) in b.iter().enumerate() {
            if bi > self.odd_degree(i) {
                return Err(Error::InvalidSplitting(format!(
                    "reduction by {bi} would leave phi_{} (degree {}) with no free coefficient",
                    2 * i + 1,
                    self.odd_degree(i)
                )));
            }
        }
        Ok(b)
    }

    /// Σ over maps of (dimension left after reduction) minus the `k` scalings,
    /// and the same total summed over the adjusted factors.
    pub fn dimension_law(&self) -> Result<(i64, i64)> {
        let b = self.check_reducible()?;
        let k = self.k() as i64;
        let lhs: i64 = (0..self.k())
            .map(|i| (self.odd_degree(i) + 1 - b[i]) + (self.even_degree(i) + 1))
            .sum::<i64>()
            - k;
        let rhs: i64 = decompose(self)?.factors.iter().map(AdjustedQuiver::moduli_dim).sum();
        Ok((lhs, rhs))
    }
}

impl AdjustedQuiver {
    pub fn new(twist: i64, head: i64, tail: i64, reduction: i64) -> Result<Self> {
        let q = AdjustedQuiver {
            twist,
            head,
            tail,
            reduction,
        };
        if reduction < 0 || q.odd_degree() < reduction || q.even_degree() < 0 {
            return Err(Error::InvalidSplitting(format!(
                "adjusted quiver ({head},{tail}) with t={twist} cannot lose {reduction} dimensions"
            )));
        }
        Ok(q)
    }

    /// Degree of the map `O(head) → O(tail) ⊗ O(t)` before reduction.
    pub fn odd_degree(&self) -> i64 {
        self.tail - self.head + self.twist
    }

    pub fn even_degree(&self) -> i64 {
        self.head - self.tail + self.twist
    }

    /// Zeros left to distribute once the reduced top degrees are ignored.
    pub fn residual_degree(&self) -> i64 {
        2 * self.twist - self.reduction
    }

    /// Dimension of the nilpotent-cone fibre `ℙ^{odd - b}`.
    pub fn nilcone_dim(&self) -> i64 {
        self.odd_degree() - self.reduction
    }

    pub fn moduli_dim(&self) -> i64 {
        (self.odd_degree() + 1 - self.reduction) + (self.even_degree() + 1) - 1
    }

    /// Sheets over a residual with distinct zeros.
    pub fn generic_count(&self) -> BigUint {
        binomial(self.residual_degree() as u64, self.nilcone_dim() as u64)
    }

    /// Points over a residual with the given multiplicity profile.
    pub fn fibre_count(&self, profile: &[u32]) -> Result<BigUint> {
        let sum: i64 = profile.iter().map(|&m| i64::from(m)).sum();
        if sum != self.residual_degree() {
            return Err(Error::ProfileMismatch(format!(
                "residual profile sums to {sum}, expected {}",
                self.residual_degree()
            )));
        }
        if profile.contains(&0) {
            return Err(Error::ProfileMismatch("multiplicities must be positive".into()));
        }
        Ok(count_splittings(
            profile,
            &[self.nilcone_dim() as u32, self.even_degree() as u32],
        ))
    }
}

pub fn reduction_amounts(q: &K1Quiver) -> Vec<i64> {
    q.reduction_amounts()
}

/// Adjusted factors `Q_i^{-b_i}` with nodes `(a_i, d_2)`, and the covering
/// data of the last factor over the others.
pub fn decompose(q: &K1Quiver) -> Result<DecompositionDescriptor> {
    let b = q.check_reducible()?;
    let factors = (0..q.k())
        .map(|i| AdjustedQuiver::new(q.twist, q.splitting[i], q.tail, b[i]))
        .collect::<Result<Vec<_>>>()?;
    let last = factors.last().expect("k >= 1");
    Ok(DecompositionDescriptor {
        cover_count: last.generic_count(),
        special_locus_dim: last.nilcone_dim(),
        factors,
    })
}

/// Fibre count of the last factor over a fixed choice of the other factors.
pub fn k1_fibre_count(q: &K1Quiver, residual: &Residual) -> Result<K1FibreCount> {
    let d = decompose(q)?;
    let last = d.factors.last().expect("k >= 1");
    match residual {
        Residual::Zero => Ok(K1FibreCount::SpecialLocus {
            projective_dim: d.special_locus_dim,
        }),
        Residual::Profile(p) => Ok(K1FibreCount::Finite {
            count: last.fibre_count(p)?,
        }),
    }
}

/// Profile of a residual form after removing the `b_k`-fold zero at `∞` that
/// the reduction forces.
pub fn residual_profile(q: &K1Quiver, residual: &CoeffForm) -> Result<Residual> {
    let expected = 2 * q.twist;
    if residual.degree() != expected {
        return Err(Error::DegreeMismatch(format!(
            "residual must have degree {expected}, got {}",
            residual.degree()
        )));
    }
    let section = from_coeffs(residual)?;
    let Some(zeros) = section.zeros() else {
        return Ok(Residual::Zero);
    };
    let b = *q.check_reducible()?.last().expect("k >= 1");
    let at_inf = i64::from(zeros.multiplicity(&ProjPoint::Infinity));
    if at_inf < b {
        return Err(Error::ProfileMismatch(format!(
            "residual vanishes to order {at_inf} at infinity, reduction needs {b}"
        )));
    }
    let profile = zeros
        .iter()
        .map(|(p, m)| if p.is_infinity() { m - b as u32 } else { m })
        .filter(|&m| m > 0)
        .collect();
    Ok(Residual::Profile(profile))
}

impl K1Rep {
    pub fn new(quiver: K1Quiver, odd: Vec<CoeffForm>, even: Vec<CoeffForm>) -> Result<Self> {
        let k = quiver.k();
        if odd.len() != k || even.len() != k {
            return Err(Error::DegreeMismatch(format!(
                "expected {k} odd and {k} even maps, got {} and {}",
                odd.len(),
                even.len()
            )));
        }
        for i in 0..k {
            if odd[i].degree() != quiver.odd_degree(i) {
                return Err(Error::DegreeMismatch(format!(
                    "phi_{} must have degree {}, got {}",
                    2 * i + 1,
                    quiver.odd_degree(i),
                    odd[i].degree()
                )));
            }
            if even[i].degree() != quiver.even_degree(i) {
                return Err(Error::DegreeMismatch(format!(
                    "phi_{} must have degree {}, got {}",
                    2 * i + 2,
                    quiver.even_degree(i),
                    even[i].degree()
                )));
            }
        }
        Ok(K1Rep { quiver, odd, even })
    }

    /// Builds a rep from maps listed in order `φ_1, φ_2, …, φ_{2k}`.
    pub fn from_interleaved(quiver: K1Quiver, maps: Vec<CoeffForm>) -> Result<Self> {
        if maps.len() != 2 * quiver.k() {
            return Err(Error::DegreeMismatch(format!(
                "expected {} maps, got {}",
                2 * quiver.k(),
                maps.len()
            )));
        }
        let (mut odd, mut even) = (Vec::new(), Vec::new());
        for (i, m) in maps.into_iter().enumerate() {
            if i % 2 == 0 {
                odd.push(m);
            } else {
                even.push(m);
            }
        }
        Self::new(quiver, odd, even)
    }

    pub fn quiver(&self) -> &K1Quiver {
        &self.quiver
    }

    pub fn odd_maps(&self) -> &[CoeffForm] {
        &self.odd
    }

    pub fn even_maps(&self) -> &[CoeffForm] {
        &self.even
    }

    /// `φ_1, φ_2, …, φ_{2k}`.
    pub fn interleaved(&self) -> Vec<CoeffForm> {
        self.odd
            .iter()
            .zip(&self.even)
            .flat_map(|(o, e)| [o.clone(), e.clone()])
            .collect()
    }

    /// Necessary condition for stability.
    pub fn odd_maps_nonzero(&self) -> bool {
        self.odd.iter().all(|f| !f.is_zero())
    }

    /// `Σ φ_{2i-1} φ_{2i}` as a form of degree `2t`.
    pub fn sum_of_products(&self) -> CoeffForm {
        self.partial_sum(self.quiver.k())
    }

    fn partial_sum(&self, upto: usize) -> CoeffForm {
        let mut acc = CoeffForm::zero(2 * self.quiver.twist);
        for i in 0..upto {
            acc = acc
                .add(&self.odd[i].mul(&self.even[i]))
                .expect("every product has degree 2t");
        }
        acc
    }

    /// `γ - Σ_{i<k} φ_{2i-1} φ_{2i} = φ_{2k-1} φ_{2k}`.
    pub fn residual(&self) -> CoeffForm {
        let k = self.quiver.k();
        self.odd[k - 1].mul(&self.even[k - 1])
    }

    /// `det(λ - Φ)` by permutation expansion of the `(k+1) × (k+1)` block matrix.
    pub fn char_poly(&self) -> CharPolyReport {
        let k = self.quiver.k();
        let r = k + 1;
        // entry[row][col] as a polynomial in λ whose coefficients are polynomials in z
        let mut entry: Vec<Vec<Vec<Poly>>> = vec![vec![Vec::new(); r]; r];
        for (i, row) in entry.iter_mut().enumerate() {
            row[i] = vec![Vec::new(), poly::one()];
        }
        for i in 0..k {
            // Φ[k][i] = φ_{2i+1} : O(a_i) → O(d_2);  Φ[i][k] = φ_{2i+2} : O(d_2) → O(a_i)
            entry[k][i] = vec![negate(self.odd[i].coeffs())];
            entry[i][k] = vec![negate(self.even[i].coeffs())];
        }
        let mut coefficients: Vec<Poly> = vec![Vec::new(); r + 1];
        let mut perm: Vec<usize> = (0..r).collect();
        for_each_permutation(&mut perm, 0, &mut |p| {
            let mut term: Vec<Poly> = vec![poly::one()];
            for (row, &col) in p.iter().enumerate() {
                let e = &entry[row][col];
                if e.iter().all(|c| poly::degree(c).is_none()) {
                    return;
                }
                term = lambda_mul(&term, e);
            }
            let sign = permutation_sign(p);
            for (j, c) in term.iter().enumerate() {
                add_into(&mut coefficients[j], c, sign);
            }
        });
        for c in &mut coefficients {
            poly::trim(c);
        }
        let subleading_exponent = (0..r).rev().find(|&j| !coefficients[j].is_empty());
        CharPolyReport {
            rank: r,
            coefficients,
            subleading_exponent,
        }
    }

    /// Hitchin image read off the determinant: minus the coefficient of
    /// `λ^{r-2}`, as a form of degree `2t`.
    pub fn hitchin_image(&self) -> CoeffForm {
        let report = self.char_poly();
        let degree = 2 * self.quiver.twist;
        let mut c = negate(&report.coefficients[report.rank - 2]);
        c.resize((degree + 1) as usize, Rational::zero());
        CoeffForm::new(degree, c).expect("coefficient has degree 2t")
    }

    /// Kills the top `b_i` coefficients of every odd map by a triangular
    /// change of frame of `O(a_1) ⊕ … ⊕ O(a_k)`, conjugating the whole Higgs
    /// field so the result is an isomorphic representation.
    ///
    /// Summands are processed in increasing order. Summand 2 uses
    /// [`reduce_top`] against `φ_1`; later summands solve for all their
    /// multipliers at once. If the working chart at `∞` is degenerate the
    /// reduction is retried in the charts `w ↦ w + s z`, `s = 1, 2, …`.
    ///
    /// If the lower odd maps share a factor their multiples may span fewer
    /// than `b_i` dimensions. The system is then solved with the free
    /// multiplier coefficients set to zero when it is consistent, and fails
    /// with [`Error::NoReducedForm`] when no tried chart makes it so.
    pub fn reduce(&self) -> Result<Reduction> {
        if let Some(i) = self.odd.iter().position(CoeffForm::is_zero) {
            return Err(Error::ZeroOddMap(2 * i + 1));
        }
        let b = self.quiver.check_reducible()?;
        let max_shift: i64 = self.odd.iter().map(CoeffForm::degree).sum::<i64>() + self.quiver.k() as i64 + 1;
        let mut failure = Error::ChartDegenerate;
        for s in 0..=max_shift {
            let s = Rational::from_integer(s.into());
            let odd: Vec<CoeffForm> = self.odd.iter().map(|f| f.shear(&s)).collect();
            let even: Vec<CoeffForm> = self.even.iter().map(|f| f.shear(&s)).collect();
            match reduce_in_chart(&self.quiver, odd, even, &b) {
                Ok((odd, even, m)) => {
                    let back = -s.clone();
                    let k = self.quiver.k();
                    let mut multipliers = Vec::new();
                    for i in 0..k {
                        for j in 0..i {
                            multipliers.push((i + 1, j + 1, m[j][i].shear(&back)));
                        }
                    }
                    let rep = K1Rep {
                        quiver: self.quiver.clone(),
                        odd: odd.iter().map(|f| f.shear(&back)).collect(),
                        even: even.iter().map(|f| f.shear(&back)).collect(),
                    };
                    return Ok(Reduction {
                        rep,
                        multipliers,
                        chart_shift: s,
                    });
                }
                Err(e @ (Error::ChartDegenerate | Error::NoReducedForm(_))) => failure = e,
                Err(e) => return Err(e),
            }
        }
        Err(failure)
    }
}

type Frame = Vec<Vec<CoeffForm>>;

fn reduce_in_chart(
    q: &K1Quiver,
    mut odd: Vec<CoeffForm>,
    mut even: Vec<CoeffForm>,
    b: &[i64],
) -> Result<(Vec<CoeffForm>, Vec<CoeffForm>, Frame)> {
    let k = q.k();
    // m[j][i] : O(a_i) → O(a_j), degree a_j - a_i; identity on the diagonal.
    let mut m: Frame = (0..k)
        .map(|j| {
            (0..k)
                .map(|i| {
                    if i == j {
                        CoeffForm::from_ints(0, &[1]).expect("constant")
                    } else {
                        CoeffForm::zero(q.automorphism_degree(j, i))
                    }
                })
                .collect()
        })
        .collect();

    for i in 1..k {
        let step: Vec<CoeffForm> = if i == 1 {
            let (_, psi) = reduce_top(&odd[1], &odd[0], b[1] as usize)?;
            vec![psi]
        } else {
            joint_multipliers(q, &odd, i, b[i] as usize)?
        };
        for (j, c) in step.iter().enumerate() {
            odd[i] = odd[i].add(&odd[j].mul(c)).expect("degrees match");
            even[j] = even[j].sub(&c.mul(&even[i])).expect("degrees match");
        }
        for row in m.iter_mut().take(i) {
            let mut col = row[i].clone();
            for (j, c) in step.iter().enumerate() {
                col = col.add(&row[j].mul(c)).expect("degrees match");
            }
            row[i] = col;
        }
    }
    Ok((odd, even, m))
}

/// Multipliers `c_j` (`j < i`, `deg c_j = a_j - a_i`) such that
/// `odd[i] + Σ odd[j] c_j` has its top `count` coefficients equal to zero.
fn joint_multipliers(q: &K1Quiver, odd: &[CoeffForm], i: usize, count: usize) -> Result<Vec<CoeffForm>> {
    let top = odd[i].degree();
    let mut columns: Vec<(usize, usize)> = Vec::with_capacity(count);
    for j in 0..i {
        for l in 0..=q.automorphism_degree(j, i) as usize {
            columns.push((j, l));
        }
    }
    debug_assert_eq!(columns.len(), count);
    let coeff_at = |f: &CoeffForm, idx: i64| -> Rational {
        if idx < 0 {
            Rational::zero()
        } else {
            f.coeff(idx as usize)
        }
    };
    let mut rows: Vec<Vec<Rational>> = (0..count as i64)
        .map(|r| {
            let target = top - r;
            let mut row: Vec<Rational> = columns
                .iter()
                .map(|&(j, l)| coeff_at(&odd[j], target - l as i64))
                .collect();
            row.push(-coeff_at(&odd[i], target));
            row
        })
        .collect();
    let solution = solve(&mut rows).ok_or(Error::NoReducedForm(2 * i + 1))?;
    let mut out: Vec<CoeffForm> = (0..i).map(|j| CoeffForm::zero(q.automorphism_degree(j, i))).collect();
    for (&(j, l), v) in columns.iter().zip(solution) {
        out[j] = out[j]
            .add(&CoeffForm::monomial(out[j].degree(), l, v))
            .expect("same degree");
    }
    Ok(out)
}

/// Gauss–Jordan elimination on an augmented square system. A singular but
/// consistent system gets the solution with every free variable zero;
/// `None` if inconsistent.
fn solve(rows: &mut [Vec<Rational>]) -> Option<Vec<Rational>> {
    let n = rows.len();
    let mut pivots = Vec::with_capacity(n);
    for col in 0..n {
        let row = pivots.len();
        let Some(pivot) = (row..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, pivot);
        let p = rows[row][col].clone();
        for v in rows[row].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r != row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let (src, dst) = if r < row {
                    let (a, b) = rows.split_at_mut(row);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = rows.split_at_mut(r);
                    (&a[row], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= &f * s;
                }
            }
        }
        pivots.push(col);
    }
    if rows[pivots.len()..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][n].clone();
    }
    Some(x)
}

fn negate(p: &[Rational]) -> Poly {
    p.iter().map(|c| -c.clone()).collect()
}

fn add_into(acc: &mut Poly, p: &[Rational], sign: i32) {
    if acc.len() < p.len() {
        acc.resize(p.len(), Rational::zero());
    }
    for (a, c) in acc.iter_mut().zip(p) {
        if sign > 0 {
            *a += c;
        } else {
            *a -= c;
        }
    }
}

/// Product of two polynomials in `λ` with polynomial coefficients.
fn lambda_mul(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut out: Vec<Poly> = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let prod = poly::mul(x, y);
            add_into(&mut out[i + j], &prod, 1);
        }
    }
    out
}

fn for_each_permutation(p: &mut Vec<usize>, start: usize, f: &mut dyn FnMut(&[usize])) {
    if start == p.len() {
        f(p);
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        for_each_permutation(p, start + 1, f);
        p.swap(start, i);
    }
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
