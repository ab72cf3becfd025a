//! Sparse multivariate polynomials over a [`Field`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable of the owning polynomial.
pub type Monomial = Vec<u32>;

/// Sparse polynomial: exponent vector -> nonzero coefficient.
///
/// Keys are ordered lexicographically with variable 0 most significant, so the
/// last entry of `terms` is the lex-leading term.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<K: Field> {
    field: K,
    vars: Vec<String>,
    terms: BTreeMap<Monomial, K::Elem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic on two polynomials.
pub fn poly_arith<K: Field>(a: &MultiPoly<K>, b: &MultiPoly<K>, op: ArithOp) -> Result<MultiPoly<K>> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

impl<K: Field> MultiPoly<K> {
    pub fn zero(field: K, vars: &[&str]) -> Self {
        Self::zero_in(field, vars.iter().map(|v| v.to_string()).collect())
    }

    pub fn zero_in(field: K, vars: Vec<String>) -> Self {
        MultiPoly { field, vars, terms: BTreeMap::new() }
    }

    pub fn constant_in(field: K, vars: Vec<String>, c: K::Elem) -> Self {
        let mut p = Self::zero_in(field, vars);
        if !p.field.is_zero(&c) {
            let n = p.vars.len();
            p.terms.insert(vec![0; n], c);
        }
        p
    }

    pub fn one_in(field: K, vars: Vec<String>) -> Self {
        let one = field.one();
        Self::constant_in(field, vars, one)
    }

    /// The polynomial consisting of the variable `name`.
    pub fn var(field: K, vars: &[&str], name: &str) -> Result<Self> {
        Self::var_in(field, vars.iter().map(|v| v.to_string()).collect(), name)
    }

    pub fn var_in(field: K, vars: Vec<String>, name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let one = field.one();
        Ok(Self::from_terms(field, vars, [(e, one)]))
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, summing repeats
    /// and dropping zeros.
    pub fn from_terms<I>(field: K, vars: Vec<String>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, K::Elem)>,
    {
        let mut p = Self::zero_in(field, vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    /// Same ring, new content.
    pub fn like(&self, terms: BTreeMap<Monomial, K::Elem>) -> Self {
        let mut p = MultiPoly { field: self.field.clone(), vars: self.vars.clone(), terms };
        let field = p.field.clone();
        p.terms.retain(|_, c| !field.is_zero(c));
        p
    }

    pub fn zero_like(&self) -> Self {
        Self::zero_in(self.field.clone(), self.vars.clone())
    }

    pub fn constant_like(&self, c: K::Elem) -> Self {
        Self::constant_in(self.field.clone(), self.vars.clone(), c)
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &K::Elem)> + '_ {
        self.terms.iter()
    }

    pub fn term_map(&self) -> &BTreeMap<Monomial, K::Elem> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn coeff(&self, e: &[u32]) -> K::Elem {
        self.terms.get(e).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn constant_term(&self) -> K::Elem {
        self.coeff(&vec![0; self.nvars()])
    }

    /// Lex-leading term (variable 0 most significant).
    pub fn lex_leading(&self) -> Option<(&Monomial, &K::Elem)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, e: Monomial, c: K::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = self.field.add(o.get(), &c);
                if self.field.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        self.field.ensure_same(&other.field)?;
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(self.vars.join(","), other.vars.join(",")));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), self.field.neg(c));
        }
        Ok(r)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut r = self.zero_like();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, self.field.mul(c1, c2));
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        if self.field.is_zero(c) {
            return self.zero_like();
        }
        let terms = self.terms.iter().map(|(e, a)| (e.clone(), self.field.mul(a, c))).collect();
        self.like(terms)
    }

    pub fn mul_monomial(&self, m: &[u32], c: &K::Elem) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, a)| (e.iter().zip(m).map(|(x, y)| x + y).collect(), self.field.mul(a, c)))
            .collect();
        self.like(terms)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.constant_like(self.field.one());
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

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[idx]).max()
    }

    /// Joint degree in a subset of variables; `None` for zero.
    pub fn degree_in_set(&self, idxs: &[usize]) -> Option<u32> {
        self.terms.keys().map(|e| idxs.iter().map(|&i| e[i]).sum()).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn involves(&self, idx: usize) -> bool {
        self.terms.keys().any(|e| e[idx] > 0)
    }

    pub fn derivative(&self, idx: usize) -> Self {
        let mut r = self.zero_like();
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[idx] -= 1;
            let k = self.field.from_i64(e[idx] as i64);
            r.add_term(e2, self.field.mul(c, &k));
        }
        r
    }

    /// Evaluates at a full point.
    pub fn eval(&self, point: &[K::Elem]) -> K::Elem {
        assert_eq!(point.len(), self.nvars());
        let f = &self.field;
        let mut acc = f.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = f.mul(&t, &f.pow(x, k as u64));
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Substitutes a scalar for one variable; the variable stays in the list.
    pub fn eval_var(&self, idx: usize, value: &K::Elem) -> Self {
        let f = &self.field;
        let mut r = self.zero_like();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[idx] = 0;
            r.add_term(e2, f.mul(c, &f.pow(value, e[idx] as u64)));
        }
        r
    }

    /// Replaces variable `idx` by `image` (same ring).
    pub fn substitute(&self, idx: usize, image: &Self) -> Self {
        let coeffs = self.coeffs_in(idx);
        // Horner in the substituted variable
        let mut acc = self.zero_like();
        for c in coeffs.iter().rev() {
            acc = &(&acc * image) + c;
        }
        acc
    }

    /// Maps each variable `i` to `images[i]`, all living in a common target ring.
    pub fn compose(&self, images: &[MultiPoly<K>]) -> Result<MultiPoly<K>> {
        if images.len() != self.nvars() {
            return Err(Error::InvalidInput(format!(
                "compose needs {} images, got {}",
                self.nvars(),
                images.len()
            )));
        }
        let target = images
            .first()
            .map(|p| p.zero_like())
            .ok_or_else(|| Error::InvalidInput("compose with no variables".into()))?;
        for im in images {
            target.compatible(im)?;
        }
        // cache powers of each image
        let mut powers: Vec<Vec<MultiPoly<K>>> = images.iter().map(|im| vec![im.constant_like(im.field.one())]).collect();
        let mut acc = target.clone();
        for (e, c) in &self.terms {
            let mut t = target.constant_like(c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    t = &t * &powers[i][k as usize];
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Coefficients with respect to variable `idx`: `self = sum_k c_k * v^k`.
    /// The coefficients live in the same ring and do not involve `v`.
    pub fn coeffs_in(&self, idx: usize) -> Vec<Self> {
        let deg = match self.degree_in(idx) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![self.zero_like(); deg + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[idx] as usize;
            e2[idx] = 0;
            out[k].add_term(e2, c.clone());
        }
        out
    }

    /// Moves the polynomial into a ring with variable list `new_vars`.
    /// Every variable actually occurring must be present in `new_vars`.
    pub fn embed(&self, new_vars: &[String]) -> Result<Self> {
        let mut map = Vec::with_capacity(self.nvars());
        for (i, v) in self.vars.iter().enumerate() {
            match new_vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None if !self.involves(i) => map.push(None),
                None => return Err(Error::UnknownVariable(v.clone())),
            }
        }
        let mut r = Self::zero_in(self.field.clone(), new_vars.to_vec());
        for (e, c) in &self.terms {
            let mut e2 = vec![0; new_vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    e2[j] += k;
                }
            }
            r.add_term(e2, c.clone());
        }
        Ok(r)
    }

    pub fn embed_str(&self, new_vars: &[&str]) -> Result<Self> {
        let v: Vec<String> = new_vars.iter().map(|s| s.to_string()).collect();
        self.embed(&v)
    }

    /// Views a polynomial involving only `var` as a univariate one.
    pub fn to_uni(&self, var: &str) -> Result<UniPoly<K>> {
        let idx = self.var_index(var)?;
        let mut coeffs = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != idx && k > 0) {
                return Err(Error::InvalidInput(format!("polynomial involves variables other than {var}")));
            }
            let k = e[idx] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, self.field.zero());
            }
            coeffs[k] = c.clone();
        }
        Ok(UniPoly::new(self.field.clone(), var, coeffs))
    }

    pub fn from_uni(u: &UniPoly<K>, vars: Vec<String>) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v == u.var())
            .ok_or_else(|| Error::UnknownVariable(u.var().to_string()))?;
        let n = vars.len();
        let terms = u.coeffs().iter().enumerate().map(|(k, c)| {
            let mut e = vec![0; n];
            e[idx] = k as u32;
            (e, c.clone())
        });
        Ok(Self::from_terms(u.field().clone(), vars, terms.collect::<Vec<_>>()))
    }

    pub fn map_field<L: Field>(&self, target: L, mut f: impl FnMut(&K::Elem) -> L::Elem) -> MultiPoly<L> {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), f(c))).collect::<Vec<_>>();
        MultiPoly::from_terms(target, self.vars.clone(), terms)
    }

    /// Exact division under lex order; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.lex_leading()?;
        let dc_inv = self.field.inv(dc)?;
        let mut rem = self.clone();
        let mut quot = self.zero_like();
        while let Some((m, c)) = rem.lex_leading() {
            if m.iter().zip(dm).any(|(a, b)| a < b) {
                return None;
            }
            let qm: Monomial = m.iter().zip(dm).map(|(a, b)| a - b).collect();
            let qc = self.field.mul(c, &dc_inv);
            // leading term cancels exactly; lex order guarantees progress
            let sub = d.mul_monomial(&qm, &qc);
            rem = &rem - &sub;
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Remainder on division by `d`, which must have leading coefficient 1 in
    /// variable `idx`. The remainder has `idx`-degree below that of `d`.
    pub fn rem_monic_in(&self, idx: usize, d: &Self) -> Result<Self> {
        let dc = d.coeffs_in(idx);
        let ddeg = dc.len().checked_sub(1).ok_or(Error::ZeroPolynomial("divisor"))?;
        let lead = &dc[ddeg];
        if !(lead.is_constant() && self.field.is_one(&lead.constant_term())) {
            return Err(Error::Precondition("divisor is not monic in the chosen variable".into()));
        }
        let mut rem = self.clone();
        loop {
            let deg = match rem.degree_in(idx) {
                Some(k) if k as usize >= ddeg => k as usize,
                _ => return Ok(rem),
            };
            let top = rem.coeffs_in(idx).swap_remove(deg);
            let mut shift = vec![0; self.nvars()];
            shift[idx] = (deg - ddeg) as u32;
            let one = self.field.one();
            let sub = &top.mul_monomial(&shift, &one) * d;
            rem = &rem - &sub;
        }
    }

    /// Same polynomial with every coefficient multiplied by the inverse of the
    /// lex-leading coefficient.
    pub fn monic_lex(&self) -> Self {
        match self.lex_leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero");
                self.scale(&inv)
            }
        }
    }
}

impl<K: Field> fmt::Display for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = &self.field;
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = field.is_negative(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = e.iter().all(|&k| k == 0);
            let mut first = true;
            if !field.is_one(&abs) || is_const {
                field.fmt_elem(&abs, f)?;
                first = false;
            }
            for (v, &k) in self.vars.iter().zip(e) {
                if k == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{v}")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self)
    }
}

// Operator impls panic on ring mismatch; use the `checked_*` methods when the
// operands come from different sources.
impl<'a, K: Field> Add<&'a MultiPoly<K>> for &'a MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn add(self, rhs: &'a MultiPoly<K>) -> MultiPoly<K> {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a, K: Field> Sub<&'a MultiPoly<K>> for &'a MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn sub(self, rhs: &'a MultiPoly<K>) -> MultiPoly<K> {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a, K: Field> Mul<&'a MultiPoly<K>> for &'a MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn mul(self, rhs: &'a MultiPoly<K>) -> MultiPoly<K> {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl<K: Field> Neg for &MultiPoly<K> {
    type Output = MultiPoly<K>;
    fn neg(self) -> MultiPoly<K> {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), self.field.neg(c))).collect();
        self.like(terms)
    }
}
