//! Points, effective divisors and completely split sections of `O(d)` on the
//! rational projective line.
//!
//! A nonzero section is stored as a scale times its divisor of zeros. The
//! point at infinity `[1:0]` is an ordinary point here, so the divisor of a
//! section of `O(d)` always has degree exactly `d`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// A point `[a:b]` of the rational projective line in normalized form.
///
/// Affine points `[a:1]` order by value and `∞ = [1:0]` sorts last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjPoint {
    Affine(Rational),
    Infinity,
}

impl ProjPoint {
    /// Normalizes homogeneous coordinates `[a:b]`.
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if b.is_zero() {
            if a.is_zero() {
                return Err(Error::InvalidSection("point [0:0] is not on the projective line".into()));
            }
            Ok(ProjPoint::Infinity)
        } else {
            Ok(ProjPoint::Affine(a / b))
        }
    }

    pub fn affine(x: impl Into<Rational>) -> Self {
        ProjPoint::Affine(x.into())
    }

    pub fn from_int(x: i64) -> Self {
        ProjPoint::Affine(Rational::from_integer(x.into()))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    /// Normalized homogeneous coordinates: `[x:1]` or `[1:0]`.
    pub fn coords(&self) -> (Rational, Rational) {
        match self {
            ProjPoint::Affine(x) => (x.clone(), Rational::one()),
            ProjPoint::Infinity => (Rational::one(), Rational::zero()),
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Affine(x) => write!(f, "({}:{})", x.numer(), x.denom()),
            ProjPoint::Infinity => f.write_str("inf"),
        }
    }
}

/// An effective divisor: finitely many points with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor {
    points: BTreeMap<ProjPoint, u32>,
}

impl Divisor {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a divisor from `(point, multiplicity)` pairs. Repeated points
    /// accumulate; zero multiplicities are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (ProjPoint, u32)>>(pairs: I) -> Self {
        let mut d = Divisor::new();
        for (p, m) in pairs {
            d.add_point(p, m);
        }
        d
    }

    /// Each listed point with multiplicity one (repeats accumulate).
    pub fn from_points<I: IntoIterator<Item = ProjPoint>>(points: I) -> Self {
        Self::from_pairs(points.into_iter().map(|p| (p, 1)))
    }

    pub fn add_point(&mut self, p: ProjPoint, mult: u32) {
        if mult > 0 {
            *self.points.entry(p).or_insert(0) += mult;
        }
    }

    pub fn degree(&self) -> i64 {
        self.points.values().map(|&m| i64::from(m)).sum()
    }

    pub fn multiplicity(&self, p: &ProjPoint) -> u32 {
        self.points.get(p).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Distinct points in increasing order with their multiplicities.
    pub fn iter(&self) -> impl Iterator<Item = (&ProjPoint, u32)> {
        self.points.iter().map(|(p, &m)| (p, m))
    }

    pub fn support_len(&self) -> usize {
        self.points.len()
    }

    /// The sorted list of points, each repeated by its multiplicity.
    pub fn expanded(&self) -> Vec<ProjPoint> {
        self.points
            .iter()
            .flat_map(|(p, &m)| std::iter::repeat(p.clone()).take(m as usize))
            .collect()
    }

    /// Multiplicities of the distinct points, in point order.
    pub fn profile(&self) -> Vec<u32> {
        self.points.values().copied().collect()
    }

    /// Multiset sum.
    pub fn sum(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (p, m) in other.iter() {
            out.add_point(p.clone(), m);
        }
        out
    }

    /// Whether every multiplicity of `self` is at most that in `big`.
    pub fn is_contained_in(&self, big: &Divisor) -> bool {
        self.points.iter().all(|(p, &m)| m <= big.multiplicity(p))
    }

    /// `self - small`, if `small` is contained in `self`.
    pub fn checked_sub(&self, small: &Divisor) -> Option<Divisor> {
        if !small.is_contained_in(self) {
            return None;
        }
        let mut out = BTreeMap::new();
        for (p, &m) in &self.points {
            let r = m - small.multiplicity(p);
            if r > 0 {
                out.insert(p.clone(), r);
            }
        }
        Some(Divisor { points: out })
    }
}

impl FromIterator<(ProjPoint, u32)> for Divisor {
    fn from_iter<T: IntoIterator<Item = (ProjPoint, u32)>>(iter: T) -> Self {
        Divisor::from_pairs(iter)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, m) in self.iter() {
            if m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{m}")?;
            }
        }
        Ok(())
    }
}

/// `small ⊆ big` as effective divisors.
pub fn divisor_contains(small: &Divisor, big: &Divisor) -> bool {
    small.is_contained_in(big)
}

/// A section of `O(d)` that splits completely over the rationals, or the
/// zero section of `O(d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Section {
    Zero { degree: i64 },
    NonZero { scale: Rational, zeros: Divisor },
}

impl Section {
    pub fn zero(degree: i64) -> Self {
        Section::Zero { degree }
    }

    pub fn new(scale: Rational, zeros: Divisor) -> Result<Self> {
        if scale.is_zero() {
            return Err(Error::InvalidSection("scale of a nonzero section must be nonzero".into()));
        }
        Ok(Section::NonZero { scale, zeros })
    }

    /// Nonzero constant section of `O(0)`.
    pub fn constant(c: Rational) -> Result<Self> {
        Self::new(c, Divisor::new())
    }

    /// Scale one, zeros at the listed points.
    pub fn monic<I: IntoIterator<Item = ProjPoint>>(points: I) -> Self {
        Section::NonZero {
            scale: Rational::one(),
            zeros: Divisor::from_points(points),
        }
    }

    /// Ambient degree `d` of `O(d)`.
    pub fn degree(&self) -> i64 {
        match self {
            Section::Zero { degree } => *degree,
            Section::NonZero { zeros, .. } => zeros.degree(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Section::Zero { .. })
    }

    pub fn scale(&self) -> Option<&Rational> {
        match self {
            Section::Zero { .. } => None,
            Section::NonZero { scale, .. } => Some(scale),
        }
    }

    pub fn zeros(&self) -> Option<&Divisor> {
        match self {
            Section::Zero { .. } => None,
            Section::NonZero { zeros, .. } => Some(zeros),
        }
    }

    /// Product of sections; degrees add and zero absorbs.
    pub fn mul(&self, other: &Section) -> Section {
        match (self, other) {
            (
                Section::NonZero { scale: s1, zeros: z1 },
                Section::NonZero { scale: s2, zeros: z2 },
            ) => Section::NonZero {
                scale: s1 * s2,
                zeros: z1.sum(z2),
            },
            _ => Section::Zero {
                degree: self.degree() + other.degree(),
            },
        }
    }

    /// Multiplies by a scalar; scaling by zero yields the zero section.
    pub fn scaled(&self, c: &Rational) -> Section {
        match self {
            Section::NonZero { scale, zeros } if !c.is_zero() => Section::NonZero {
                scale: scale * c,
                zeros: zeros.clone(),
            },
            _ => Section::Zero { degree: self.degree() },
        }
    }

    /// Same zeros, given scale.
    pub fn with_scale(&self, c: Rational) -> Section {
        match self {
            Section::NonZero { zeros, .. } if !c.is_zero() => Section::NonZero {
                scale: c,
                zeros: zeros.clone(),
            },
            _ => Section::Zero { degree: self.degree() },
        }
    }
}

impl fmt::Display for Section {
    /// Canonical text form: `0`, a bare scale for constants, or
    /// `scale*(a:b)(c:d)^2...inf` with points in increasing order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Section::Zero { .. } => f.write_str("0"),
            Section::NonZero { scale, zeros } => {
                write_rational(f, scale)?;
                if !zeros.is_empty() {
                    write!(f, "*{zeros}")?;
                }
                Ok(())
            }
        }
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        let sign = if q.is_negative() { "-" } else { "" };
        write!(f, "{sign}{}/{}", q.numer().abs(), q.denom())
    }
}
