use std::fmt;

use crate::algebra::{uni_gcd, Field, MultiPoly, UniPoly};
use crate::error::{Error, Result};

/// The point `(p/r, q/r)` over `K(t)`, stored with `gcd(p, q, r) = 1` and
/// `r` monic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FunctionFieldPoint<K: Field> {
    p: UniPoly<K>,
    q: UniPoly<K>,
    r: UniPoly<K>,
}

impl<K: Field> FunctionFieldPoint<K> {
    pub fn new(p: UniPoly<K>, q: UniPoly<K>, r: UniPoly<K>) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if p.var() != r.var() || q.var() != r.var() {
            return Err(Error::VariableMismatch(p.var().to_string(), r.var().to_string()));
        }
        p.field().ensure_same(r.field())?;
        q.field().ensure_same(r.field())?;
        let g = if p.is_zero() && q.is_zero() { r.monic() } else { uni_gcd(&uni_gcd_any(&p, &q)?, &r)? };
        let split = |a: &UniPoly<K>| a.div_exact(&g).expect("gcd divides");
        let (p, q, r) = (split(&p), split(&q), split(&r));
        let lc = r.leading_coeff().cloned().expect("nonzero");
        let inv = r.field().inv(&lc).expect("nonzero");
        Ok(FunctionFieldPoint { p: p.scale(&inv), q: q.scale(&inv), r: r.scale(&inv) })
    }

    /// A point with polynomial coordinates.
    pub fn polynomial(p: UniPoly<K>, q: UniPoly<K>) -> Result<Self> {
        let one = UniPoly::one(p.field().clone(), p.var());
        Self::new(p, q, one)
    }

    pub fn p(&self) -> &UniPoly<K> {
        &self.p
    }

    pub fn q(&self) -> &UniPoly<K> {
        &self.q
    }

    pub fn r(&self) -> &UniPoly<K> {
        &self.r
    }

    pub fn field(&self) -> &K {
        self.r.field()
    }
}

fn uni_gcd_any<K: Field>(a: &UniPoly<K>, b: &UniPoly<K>) -> Result<UniPoly<K>> {
    match (a.is_zero(), b.is_zero()) {
        (true, _) => Ok(b.monic()),
        (_, true) => Ok(a.monic()),
        _ => uni_gcd(a, b),
    }
}

impl<K: Field> fmt::Display for FunctionFieldPoint<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.p, self.q, self.r)
    }
}

/// `sup deg(p, q, r)`; the zero polynomial contributes nothing.
pub fn ff_height<K: Field>(pt: &FunctionFieldPoint<K>) -> u64 {
    [&pt.p, &pt.q, &pt.r].iter().filter_map(|u| u.degree()).max().unwrap_or(0) as u64
}

/// Whether `r^d f(p/r, q/r, t)` vanishes identically, `d` being the
/// `(x, y)`-degree of `f`.
pub fn verify_ff_solution<K: Field>(f: &MultiPoly<K>, pt: &FunctionFieldPoint<K>) -> Result<bool> {
    f.field().ensure_same(pt.field())?;
    let f = f.embed_str(&["x", "y", "t"])?;
    let d = match f.degree_in_set(&[0, 1]) {
        Some(d) => d,
        None => return Ok(true),
    };
    let field = pt.field().clone();
    let var = pt.r.var().to_string();
    let t = UniPoly::x(field.clone(), &var);
    let mut total = UniPoly::zero(field.clone(), &var);
    let mut pows: [Vec<UniPoly<K>>; 4] = Default::default();
    let bases = [&pt.p, &pt.q, &pt.r, &t];
    let mut power = |i: usize, k: u32| -> UniPoly<K> {
        let cache = &mut pows[i];
        if cache.is_empty() {
            cache.push(UniPoly::one(field.clone(), &var));
        }
        while cache.len() <= k as usize {
            let next = &cache[cache.len() - 1] * bases[i];
            cache.push(next);
        }
        cache[k as usize].clone()
    };
    for (e, c) in f.terms() {
        let term = &(&(&power(0, e[0]) * &power(1, e[1])) * &power(2, d - e[0] - e[1])) * &power(3, e[2]);
        total = &total + &term.scale(c);
    }
    Ok(total.is_zero())
}
