//! Sylvester resultants and discriminants with polynomial coefficients.

use super::field::Field;
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};

/// Sylvester matrix of `a` and `b` with respect to variable `var`; the
/// `deg b` rows built from `a` come first.
pub fn sylvester_matrix<K: Field>(a: &MultiPoly<K>, b: &MultiPoly<K>, var: &str) -> Result<Vec<Vec<MultiPoly<K>>>> {
    let idx = a.var_index(var)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial("resultant"));
    }
    a.checked_sub(b)?;
    let ca = a.coeffs_in(idx);
    let cb = b.coeffs_in(idx);
    let m = ca.len() - 1;
    let n = cb.len() - 1;
    let size = m + n;
    let zero = a.zero_like();
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in ca.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in cb.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact in the polynomial ring.
pub fn bareiss_det<K: Field>(mut m: Vec<Vec<MultiPoly<K>>>, one: &MultiPoly<K>) -> MultiPoly<K> {
    let n = m.len();
    if n == 0 {
        return one.clone();
    }
    let mut negate = false;
    let mut prev = one.clone();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return one.zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Resultant of `a` and `b` with respect to `var`: the Sylvester determinant
/// using the formal `var`-degrees of the inputs.
pub fn resultant<K: Field>(a: &MultiPoly<K>, b: &MultiPoly<K>, var: &str) -> Result<MultiPoly<K>> {
    let matrix = sylvester_matrix(a, b, var)?;
    let one = a.constant_like(a.field().one());
    Ok(bareiss_det(matrix, &one))
}

/// `(-1)^(d(d-1)/2) * Res(a, da/dvar) / lc(a)`, so that the discriminant of
/// `x^2 + b x + c` is `b^2 - 4c`.
pub fn discriminant<K: Field>(a: &MultiPoly<K>, var: &str) -> Result<MultiPoly<K>> {
    let idx = a.var_index(var)?;
    let d = match a.degree_in(idx) {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::DegreeTooLow(format!("discriminant needs degree >= 1 in {var}"))),
    };
    let lc = a.coeffs_in(idx).pop().expect("nonzero");
    let res = resultant(a, &a.derivative(idx), var)?;
    let q = res
        .div_exact(&lc)
        .ok_or_else(|| Error::InvalidInput("leading coefficient does not divide the resultant".into()))?;
    let sign_odd = (d as u64 * (d as u64 - 1) / 2) % 2 == 1;
    Ok(if sign_odd { -&q } else { q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{int, Rationals};

    fn ring() -> [MultiPoly<Rationals>; 4] {
        let v = ["x", "t", "b", "c"];
        ["x", "t", "b", "c"].map(|n| MultiPoly::var(Rationals, &v, n).unwrap())
    }

    fn k(p: &MultiPoly<Rationals>, n: i64) -> MultiPoly<Rationals> {
        p.constant_like(int(n))
    }

    #[test]
    fn shared_root_gives_zero() {
        let [x, ..] = ring();
        let a = &(&x.pow(2) - &x.scale(&int(3))) + &k(&x, 2);
        let b = &x - &k(&x, 1);
        assert!(resultant(&a, &b, "x").unwrap().is_zero());
    }

    #[test]
    fn small_sylvester_values() {
        let [x, t, ..] = ring();
        let a = &x.pow(2) - &k(&x, 1);
        let b = x.scale(&int(2));
        assert_eq!(resultant(&a, &b, "x").unwrap(), k(&x, -4));
        // rows of (x - t) first: det [[1, -t], [1, -1]] = t - 1
        let r = resultant(&(&x - &t), &(&x - &k(&x, 1)), "x").unwrap();
        assert_eq!(r, &t - &k(&x, 1));
    }

    #[test]
    fn discriminant_examples() {
        let [x, _, b, c] = ring();
        assert_eq!(discriminant(&(&x.pow(2) - &k(&x, 1)), "x").unwrap(), k(&x, 4));
        assert!(discriminant(&x.pow(2), "x").unwrap().is_zero());
        let quad = &(&x.pow(2) + &(&b * &x)) + &c;
        assert_eq!(discriminant(&quad, "x").unwrap(), &b.pow(2) - &c.scale(&int(4)));
        assert!(matches!(discriminant(&k(&x, 3), "x"), Err(Error::DegreeTooLow(_))));
    }

    #[test]
    fn zero_input_rejected() {
        let [x, ..] = ring();
        assert!(resultant(&x.zero_like(), &x, "x").is_err());
    }
}
