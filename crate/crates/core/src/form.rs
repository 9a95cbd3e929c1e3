//! Binary forms `Σ c_j z^j w^(d-j)` of fixed ambient degree, stored lowest
//! coefficient first, and their conversion to and from split sections.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::divisor::{Divisor, ProjPoint, Section};
use crate::error::{Error, Result};
use crate::poly;
use crate::Rational;

/// Coefficients of a binary form of ambient degree `d`: `coeffs[j]` is the
/// coefficient of `z^j w^(d-j)`. Degrees below zero carry no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffForm {
    degree: i64,
    coeffs: Vec<Rational>,
}

impl CoeffForm {
    pub fn new(degree: i64, coeffs: Vec<Rational>) -> Result<Self> {
        let expected = (degree + 1).max(0) as usize;
        if coeffs.len() != expected {
            return Err(Error::DegreeMismatch(format!(
                "form of degree {degree} needs {expected} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(CoeffForm { degree, coeffs })
    }

    pub fn from_ints(degree: i64, coeffs: &[i64]) -> Result<Self> {
        Self::new(
            degree,
            coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect(),
        )
    }

    pub fn zero(degree: i64) -> Self {
        CoeffForm {
            degree,
            coeffs: vec![Rational::zero(); (degree + 1).max(0) as usize],
        }
    }

    /// The monomial `c z^j w^(d-j)`.
    pub fn monomial(degree: i64, j: usize, c: Rational) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[j] = c;
        f
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^j w^(d-j)`; zero outside the range.
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `z^d`, the value at `∞` in the affine chart `w = 1`.
    pub fn top(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &CoeffForm) -> CoeffForm {
        let degree = self.degree + other.degree;
        if degree < 0 || self.coeffs.is_empty() || other.coeffs.is_empty() {
            return CoeffForm::zero(degree);
        }
        CoeffForm {
            degree,
            coeffs: poly::mul(&self.coeffs, &other.coeffs),
        }
    }

    pub fn add(&self, other: &CoeffForm) -> Result<CoeffForm> {
        self.check_same_degree(other)?;
        Ok(CoeffForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &CoeffForm) -> Result<CoeffForm> {
        self.check_same_degree(other)?;
        Ok(CoeffForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scaled(&self, c: &Rational) -> CoeffForm {
        CoeffForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> CoeffForm {
        self.scaled(&-Rational::one())
    }

    fn check_same_degree(&self, other: &CoeffForm) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!(
                "cannot add forms of degree {} and {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    /// Value at a point, using normalized coordinates `[x:1]` or `[1:0]`.
    pub fn eval(&self, p: &ProjPoint) -> Rational {
        match p {
            ProjPoint::Affine(x) => poly::eval(&self.coeffs, x),
            ProjPoint::Infinity => self.top(),
        }
    }

    /// The form `f(z, w + s z)`. Its top coefficient is `f(1, s)`, the value
    /// at `[1:s]`; `s ↦ -s` inverts the substitution.
    pub fn shear(&self, s: &Rational) -> CoeffForm {
        if self.degree < 0 || s.is_zero() {
            return self.clone();
        }
        let d = self.degree as usize;
        let mut out = vec![Rational::zero(); d + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // (w + s z)^(d-j) = Σ_l binom(d-j, l) s^l z^l w^(d-j-l)
            let e = d - j;
            let mut binom = BigInt::one();
            let mut s_pow = Rational::one();
            for l in 0..=e {
                out[j + l] += c * &s_pow * Rational::from_integer(binom.clone());
                binom = binom * BigInt::from(e - l) / BigInt::from(l + 1);
                s_pow *= s;
            }
        }
        CoeffForm {
            degree: self.degree,
            coeffs: out,
        }
    }
}

impl fmt::Display for CoeffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Expands `scale · ∏ (b_k z - a_k w)` over the zeros `[a_k : b_k]`.
pub fn to_coeffs(s: &Section) -> CoeffForm {
    match s {
        Section::Zero { degree } => CoeffForm::zero(*degree),
        Section::NonZero { scale, zeros } => {
            let mut acc: poly::Poly = vec![scale.clone()];
            let mut inf = 0u32;
            for (p, m) in zeros.iter() {
                match p {
                    ProjPoint::Affine(a) => {
                        let lin = vec![-a.clone(), Rational::one()];
                        for _ in 0..m {
                            acc = poly::mul(&acc, &lin);
                        }
                    }
                    ProjPoint::Infinity => inf += m,
                }
            }
            // Each ∞ factor is -w: multiplies by -1 without raising the z-degree.
            if inf % 2 == 1 {
                for c in &mut acc {
                    *c = -c.clone();
                }
            }
            let degree = zeros.degree();
            acc.resize((degree + 1) as usize, Rational::zero());
            CoeffForm { degree, coeffs: acc }
        }
    }
}

/// Recovers the split section from its coefficients; fails unless the form
/// factors into linear factors over the rationals.
pub fn from_coeffs(f: &CoeffForm) -> Result<Section> {
    if f.is_zero() {
        return Ok(Section::zero(f.degree));
    }
    let d = f.degree as usize;
    let affine = poly::trimmed(f.coeffs.clone());
    let e = affine.len() - 1;
    let inf_mult = (d - e) as u32;
    let mut zeros = Divisor::new();
    zeros.add_point(ProjPoint::Infinity, inf_mult);

    let mut rest = affine.clone();
    for root in rational_roots(&affine) {
        let lin = vec![-root.clone(), Rational::one()];
        let mut m = 0u32;
        loop {
            let (q, r) = poly::div_rem(&rest, &lin);
            if !r.is_empty() {
                break;
            }
            rest = q;
            m += 1;
        }
        zeros.add_point(ProjPoint::Affine(root), m);
    }
    if rest.len() != 1 {
        return Err(Error::IrrationalRoots);
    }
    let mut scale = affine[e].clone();
    if inf_mult % 2 == 1 {
        scale = -scale;
    }
    Section::new(scale, zeros)
}

/// Distinct rational roots of a nonzero polynomial (multiplicities are
/// recovered by the caller). Exact: the square-free part
/// is cleared to a primitive integer polynomial with leading coefficient `L`,
/// the substitution `y = L z` makes it monic, and the integer roots of that
/// are isolated by Sturm bisection within the Cauchy bound.
pub(crate) fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    let p = poly::trimmed(p.to_vec());
    if p.len() <= 1 {
        return Vec::new();
    }
    let g = poly::gcd(&p, &poly::derivative(&p));
    let (sq, _) = poly::div_rem(&p, &g);
    let ints = primitive_integer(&sq);
    let e = ints.len() - 1;
    if e == 0 {
        return Vec::new();
    }
    let lead = ints[e].clone();
    // h(y) = L^(e-1) sq(y / L), monic with integer coefficients.
    let mut h = Vec::with_capacity(e + 1);
    let mut pow = BigInt::one();
    let mut pows = vec![BigInt::one(); e];
    for k in 1..e {
        pow *= &lead;
        pows[k] = pow.clone();
    }
    for j in 0..e {
        h.push(Rational::from_integer(&ints[j] * &pows[e - 1 - j]));
    }
    h.push(Rational::one());
    let bound: BigInt = h[..e].iter().map(|c| c.numer().abs()).max().unwrap_or_default() + 1;
    let bound = i64::try_from(bound).unwrap_or(i64::MAX / 4);
    poly::integer_roots_in(&h, -bound - 1, bound)
        .into_iter()
        .map(|y| Rational::new(BigInt::from(y), lead.clone()))
        .collect()
}

/// Scales a rational polynomial to a primitive integer polynomial with a
/// positive leading coefficient.
fn primitive_integer(p: &[Rational]) -> Vec<BigInt> {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -1 } else { 1 };
    let divisor = content * sign;
    for c in &mut ints {
        *c = &*c / &divisor;
    }
    ints
}

/// Eliminates the top `m` coefficients of `f` by adding a multiple of `g`.
///
/// Returns `(f', ψ)` with `f' = f + g·ψ`, `deg ψ = deg f - deg g` and the
/// coefficients of `z^(deg f)`, …, `z^(deg f - m + 1)` of `f'` equal to zero.
pub fn reduce_top(f: &CoeffForm, g: &CoeffForm, m: usize) -> Result<(CoeffForm, CoeffForm)> {
    if f.degree < g.degree || g.degree < 0 {
        return Err(Error::DegreeMismatch(format!(
            "cannot reduce a form of degree {} by one of degree {}",
            f.degree, g.degree
        )));
    }
    let mult_degree = f.degree - g.degree;
    if m as i64 > mult_degree + 1 {
        return Err(Error::DegreeMismatch(format!(
            "can eliminate at most {} top coefficients, asked for {m}",
            mult_degree + 1
        )));
    }
    let lead = g.top();
    if lead.is_zero() {
        return Err(Error::ChartDegenerate);
    }
    let df = f.degree as usize;
    let dg = g.degree as usize;
    let mut out = f.coeffs.clone();
    let mut psi = vec![Rational::zero(); mult_degree as usize + 1];
    for k in (df + 1 - m..=df).rev() {
        let c = &out[k] / &lead;
        if c.is_zero() {
            continue;
        }
        let shift = k - dg;
        for (j, gj) in g.coeffs.iter().enumerate() {
            out[shift + j] -= &c * gj;
        }
        psi[shift] -= c;
    }
    Ok((
        CoeffForm {
            degree: f.degree,
            coeffs: out,
        },
        CoeffForm {
            degree: mult_degree,
            coeffs: psi,
        },
    ))
}
