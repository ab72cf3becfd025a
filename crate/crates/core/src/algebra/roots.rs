//! Rational roots of univariate polynomials over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Rational, Rationals};
use super::unipoly::{squarefree_part, UniPoly};
use crate::error::{Error, Result};

/// All rational roots, sorted ascending, without multiplicity.
pub fn rational_roots(a: &UniPoly<Rationals>) -> Result<Vec<Rational>> {
    Ok(split_rational_roots(a)?.0)
}

/// Rational roots plus the number of distinct complex roots that are not
/// rational.
pub fn split_rational_roots(a: &UniPoly<Rationals>) -> Result<(Vec<Rational>, usize)> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial("rational_roots"));
    }
    let sf = squarefree_part(a)?;
    let n = sf.degree().unwrap_or(0);
    if n == 0 {
        return Ok((Vec::new(), 0));
    }
    let mut ints = primitive_integer_form(&sf);
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(Rational::zero());
        ints.remove(0);
    }
    // Any rational root p/q of sum c_i t^i has q | c_n, so m = c_n * r is an
    // integer root of the monic polynomial c_n^(n-1) P(m / c_n).
    let deg = ints.len() - 1;
    let lead = ints[deg].clone();
    let mut monic = Vec::with_capacity(deg + 1);
    let mut scale = BigInt::one();
    for i in (0..=deg).rev() {
        // coefficient of m^i is c_i * c_n^(n-1-i)
        if i == deg {
            monic.push(BigInt::one());
        } else {
            monic.push(&ints[i] * &scale);
            scale *= &lead;
        }
    }
    monic.reverse();
    for m in integer_roots(&monic) {
        roots.push(Rational::new(m, lead.clone()));
    }
    roots.sort();
    let unresolved = n - roots.len();
    Ok((roots, unresolved))
}

/// Integer coefficients with content 1 and positive leading coefficient.
pub fn primitive_integer_form(a: &UniPoly<Rationals>) -> Vec<BigInt> {
    let lcm = a.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = a.coeffs().iter().map(|c| (c * &lcm).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() {
        for c in ints.iter_mut() {
            *c /= &content;
        }
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        for c in ints.iter_mut() {
            *c = -&*c;
        }
    }
    ints
}

/// Integer roots of a squarefree monic integer polynomial, found by Sturm
/// bisection over integer intervals.
fn integer_roots(coeffs: &[BigInt]) -> Vec<BigInt> {
    let p = UniPoly::new(Rationals, "m", coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect());
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let seq = sturm_sequence(&p);
    let bound = coeffs.iter().map(|c| c.abs()).max().unwrap_or_default() + BigInt::one();
    let mut out = Vec::new();
    let lo = -bound.clone();
    let hi = bound;
    let vlo = sign_changes(&seq, &lo);
    let vhi = sign_changes(&seq, &hi);
    let mut stack = vec![(lo, vlo, hi, vhi)];
    while let Some((lo, vlo, hi, vhi)) = stack.pop() {
        if vlo <= vhi {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            if p.eval(&Rational::from_integer(hi.clone())).is_zero() {
                out.push(hi);
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        let vmid = sign_changes(&seq, &mid);
        stack.push((lo, vlo, mid.clone(), vmid));
        stack.push((mid, vmid, hi, vhi));
    }
    out.sort();
    out
}

fn sturm_sequence(p: &UniPoly<Rationals>) -> Vec<UniPoly<Rationals>> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        if seq[n - 1].is_constant() {
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]).expect("nonzero divisor");
        seq.push(-&r);
    }
    seq
}

/// Sign changes of the Sturm sequence at `x`; the number of roots in
/// `(a, b]` is `V(a) - V(b)`.
fn sign_changes(seq: &[UniPoly<Rationals>], x: &BigInt) -> usize {
    let x = Rational::from_integer(x.clone());
    let mut last = 0i8;
    let mut changes = 0;
    for s in seq {
        let v = s.eval(&x);
        let sg = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if sg != 0 {
            if last != 0 && sg != last {
                changes += 1;
            }
            last = sg;
        }
    }
    changes
}
