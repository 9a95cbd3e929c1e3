//! Dense univariate polynomials over the rationals, lowest coefficient first.
//! Only what the form arithmetic and root isolation need.

use num_traits::{One, Signed, Zero};

use crate::Rational;

pub(crate) type Poly = Vec<Rational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn trimmed(mut p: Poly) -> Poly {
    trim(&mut p);
    p
}

/// Degree of a trimmed polynomial; `None` for zero.
pub(crate) fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub(crate) fn derivative(p: &[Rational]) -> Poly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
        .collect()
}

pub(crate) fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Euclidean division; `b` must be nonzero.
pub(crate) fn div_rem(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut rem = trimmed(a.to_vec());
    let lead = b[db].clone();
    let Some(da) = degree(&rem) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(db + 1) {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    trim(&mut rem);
    (trimmed(quot), rem)
}

/// Monic greatest common divisor; zero if both inputs are zero.
pub(crate) fn gcd(a: &[Rational], b: &[Rational]) -> Poly {
    let mut x = trimmed(a.to_vec());
    let mut y = trimmed(b.to_vec());
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in &mut x {
            *c /= &lead;
        }
    }
    x
}

/// Number of sign changes of the Sturm chain evaluated at `x`.
fn sign_changes(chain: &[Poly], x: &Rational) -> usize {
    let mut changes = 0;
    let mut last = 0i8;
    for p in chain {
        let v = eval(p, x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Sturm chain of a square-free polynomial.
pub(crate) fn sturm_chain(p: &[Rational]) -> Vec<Poly> {
    let mut chain = vec![trimmed(p.to_vec()), trimmed(derivative(p))];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let (_, r) = div_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

/// Integer roots of a square-free polynomial `p` inside `(lo, hi]`, found by
/// Sturm bisection down to unit intervals.
pub(crate) fn integer_roots_in(p: &[Rational], lo: i64, hi: i64) -> Vec<i64> {
    let chain = sturm_chain(p);
    let mut out = Vec::new();
    let q = |v: i64| Rational::from_integer(v.into());
    let mut stack = vec![(lo, hi, sign_changes(&chain, &q(lo)), sign_changes(&chain, &q(hi)))];
    while let Some((a, b, va, vb)) = stack.pop() {
        if va <= vb {
            continue;
        }
        if b - a == 1 {
            if eval(p, &q(b)).is_zero() {
                out.push(b);
            }
            continue;
        }
        let m = a + (b - a) / 2;
        let vm = sign_changes(&chain, &q(m));
        stack.push((a, m, va, vm));
        stack.push((m, b, vm, vb));
    }
    out.sort_unstable();
    out
}

pub(crate) fn one() -> Poly {
    vec![Rational::one()]
}
