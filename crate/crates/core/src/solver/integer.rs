use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;
use crate::bounds::cubesum_coordinate_bound;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegerPoint {
    pub x: BigInt,
    pub y: BigInt,
}

impl IntegerPoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        IntegerPoint { x: x.into(), y: y.into() }
    }
}

impl fmt::Display for IntegerPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn exact_cube_root(n: &BigInt) -> Option<BigInt> {
    let c = n.cbrt();
    (&c * &c * &c == *n).then_some(c)
}

fn nonzero(m: &BigInt) -> Result<()> {
    if m.is_zero() {
        Err(Error::InvalidInput("m = 0: every (x, -x) is a solution".into()))
    } else {
        Ok(())
    }
}

/// All integer `(x, y)` with `x³ + y³ = m`, by scanning `|x| ≤ B` for the
/// coordinate bound `B`.
pub fn solve_cubesum_bruteforce(m: &BigInt) -> Result<Vec<IntegerPoint>> {
    nonzero(m)?;
    let b = cubesum_coordinate_bound(m)?;
    let mut out = Vec::new();
    let mut x = -b.clone();
    while x <= b {
        let rest = m - &x * &x * &x;
        if let Some(y) = exact_cube_root(&rest) {
            if y.abs() <= b {
                out.push(IntegerPoint { x: x.clone(), y });
            }
        }
        x += 1;
    }
    Ok(out)
}

/// Same solutions via `m = (x + y)(x² - xy + y²)`: for each divisor `a` of
/// `m` (with the sign of `m`, since the second factor is positive) solve
/// `x + y = a`, `xy = (a² - m/a) / 3`.
pub fn solve_cubesum_divisor(m: &BigInt) -> Result<Vec<IntegerPoint>> {
    nonzero(m)?;
    let abs = m.abs();
    let mut divisors = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= abs {
        if (&abs % &d).is_zero() {
            divisors.push(d.clone());
            let other = &abs / &d;
            if other != d {
                divisors.push(other);
            }
        }
        d += 1;
    }
    let mut out = Vec::new();
    for d in divisors {
        let a = if m.is_negative() { -d } else { d };
        let c: BigInt = m / &a;
        let num = &a * &a - &c;
        if !(&num % 3u32).is_zero() {
            continue;
        }
        let xy = num / 3u32;
        let disc = &a * &a - &xy * 4u32;
        if disc.is_negative() {
            continue;
        }
        let root = disc.sqrt();
        if &root * &root != disc || (&a + &root).is_odd() {
            continue;
        }
        let x: BigInt = (&a + &root) / 2u32;
        let y: BigInt = (&a - &root) / 2u32;
        out.push(IntegerPoint { x: x.clone(), y: y.clone() });
        out.push(IntegerPoint { x: y, y: x });
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Smallest `n ≥ 1` that is a sum of two cubes of natural numbers `x ≤ y`
/// in at least `ways` different ways. Only `ways = 2` is supported.
pub fn taxicab_smallest(ways: u32) -> Result<BigInt> {
    if ways != 2 {
        return Err(Error::Unsupported(format!("only ways = 2 is supported, got {ways}")));
    }
    let mut n: u64 = 1;
    loop {
        if representations(n).len() >= ways as usize {
            return Ok(BigInt::from(n));
        }
        n += 1;
    }
}

/// Representations `n = x³ + y³` with `1 ≤ x ≤ y`.
pub(crate) fn representations(n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut x = 1u64;
    while 2 * x * x * x <= n {
        let rest = n - x * x * x;
        let y = rest.cbrt();
        if y * y * y == rest {
            out.push((x, y));
        }
        x += 1;
    }
    out
}

/// `max(|p|, |q|, |r|)` for `(x, y) = (p/r, q/r)` with `gcd(p, q, r) = 1`,
/// `r > 0`.
pub fn nf_height(x: &Rational, y: &Rational) -> BigInt {
    let r = x.denom().lcm(y.denom());
    let p = x.numer() * (&r / x.denom());
    let q = y.numer() * (&r / y.denom());
    let g = p.gcd(&q).gcd(&r);
    let (p, q, r) = (p / &g, q / &g, r / &g);
    p.abs().max(q.abs()).max(r)
}

/// Whether the rational point `(x, y)` lies on `x³ + y³ = m`.
pub fn on_cubesum(x: &Rational, y: &Rational, m: &BigInt) -> bool {
    x * x * x + y * y * y == Rational::from_integer(m.clone())
}
