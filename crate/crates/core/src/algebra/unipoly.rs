//! Dense univariate polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients from low to high degree with no
/// trailing zeros. The zero polynomial has an empty coefficient vector and
/// degree `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<K: Field> {
    field: K,
    var: String,
    coeffs: Vec<K::Elem>,
}

impl<K: Field> UniPoly<K> {
    pub fn new(field: K, var: &str, coeffs: Vec<K::Elem>) -> Self {
        let mut p = UniPoly { field, var: var.to_string(), coeffs };
        p.trim();
        p
    }

    pub fn from_i64(field: K, var: &str, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&n| field.from_i64(n)).collect();
        Self::new(field, var, c)
    }

    pub fn zero(field: K, var: &str) -> Self {
        Self::new(field, var, Vec::new())
    }

    pub fn constant(field: K, var: &str, c: K::Elem) -> Self {
        Self::new(field, var, vec![c])
    }

    pub fn one(field: K, var: &str) -> Self {
        let one = field.one();
        Self::constant(field, var, one)
    }

    /// The polynomial `var`.
    pub fn x(field: K, var: &str) -> Self {
        let (z, o) = (field.zero(), field.one());
        Self::new(field, var, vec![z, o])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    fn like(&self, coeffs: Vec<K::Elem>) -> Self {
        Self::new(self.field.clone(), &self.var, coeffs)
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[K::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> K::Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&K::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| self.field.is_one(c))
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        self.like(self.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    pub fn eval(&self, x: &K::Elem) -> K::Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        self.like(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| f.mul(c, &f.from_i64(k as i64)))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.clone(), &self.var);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `t -> t^k` substitution.
    pub fn inflate(&self, k: usize) -> Self {
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut c = vec![self.field.zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i * k] = a.clone();
        }
        self.like(c)
    }

    /// Euclidean division; errors when dividing by zero.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.field.ensure_same(&d.field)?;
        let dl = d.leading_coeff().ok_or(Error::DivisionByZero)?;
        let inv = self.field.inv(dl).expect("nonzero");
        let f = &self.field;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f.clone(), &self.var), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, dc));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((self.like(quot), self.like(rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Quotient when `d` divides exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(self.field.clone(), &inner.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(self.field.clone(), &inner.var, c.clone());
        }
        acc
    }
}

/// Monic greatest common divisor.
pub fn uni_gcd<K: Field>(a: &UniPoly<K>, b: &UniPoly<K>) -> Result<UniPoly<K>> {
    a.field.ensure_same(&b.field)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    while !r1.is_zero() {
        let r = r0.rem(&r1)?;
        r0 = r1;
        r1 = r;
    }
    Ok(r0.monic())
}

/// Monic squarefree part `a / gcd(a, a')`. Characteristic zero only.
pub fn squarefree_part<K: Field>(a: &UniPoly<K>) -> Result<UniPoly<K>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree_part"));
    }
    if a.field.characteristic() != 0 {
        return Err(Error::Unsupported("squarefree part via a/gcd(a,a') needs characteristic zero".into()));
    }
    if a.is_constant() {
        return Ok(UniPoly::one(a.field.clone(), &a.var));
    }
    let g = uni_gcd(a, &a.derivative())?;
    Ok(a.div_exact(&g).expect("gcd divides").monic())
}

impl<K: Field> fmt::Display for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let field = &self.field;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            let neg = field.is_negative(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if k == 0 || !field.is_one(&abs) {
                field.fmt_elem(&abs, f)?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, k)?,
            }
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self)
    }
}

impl<K: Field> Add for &UniPoly<K> {
    type Output = UniPoly<K>;
    fn add(self, rhs: &UniPoly<K>) -> UniPoly<K> {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        self.like((0..n).map(|k| f.add(&self.coeff(k), &rhs.coeff(k))).collect())
    }
}

impl<K: Field> Sub for &UniPoly<K> {
    type Output = UniPoly<K>;
    fn sub(self, rhs: &UniPoly<K>) -> UniPoly<K> {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        self.like((0..n).map(|k| f.sub(&self.coeff(k), &rhs.coeff(k))).collect())
    }
}

impl<K: Field> Mul for &UniPoly<K> {
    type Output = UniPoly<K>;
    fn mul(self, rhs: &UniPoly<K>) -> UniPoly<K> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.field.clone(), &self.var);
        }
        let f = &self.field;
        let mut c = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] = f.add(&c[i + j], &f.mul(a, b));
            }
        }
        self.like(c)
    }
}

impl<K: Field> Neg for &UniPoly<K> {
    type Output = UniPoly<K>;
    fn neg(self) -> UniPoly<K> {
        self.like(self.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }
}
