//! Sorted-term representation and the Buchberger loop.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::{divides, MonomialOrder};
use crate::algebra::{Field, Monomial, MultiPoly};
use crate::error::{Error, Result};

/// Terms sorted by the monomial order, largest first; no zero coefficients.
pub(crate) type InternalPoly<K> = Vec<(Monomial, <K as Field>::Elem)>;

pub(crate) struct Kernel<K: Field> {
    field: K,
    order: MonomialOrder,
}

impl<K: Field> Kernel<K> {
    pub(crate) fn new(field: K, order: MonomialOrder) -> Self {
        Kernel { field, order }
    }

    pub(crate) fn import(&self, p: &MultiPoly<K>) -> InternalPoly<K> {
        let mut terms: InternalPoly<K> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        terms
    }

    pub(crate) fn export(&self, p: &InternalPoly<K>, template: &MultiPoly<K>) -> MultiPoly<K> {
        MultiPoly::from_terms(self.field.clone(), template.vars().to_vec(), p.iter().cloned())
    }

    pub(crate) fn monic(&self, mut p: InternalPoly<K>) -> InternalPoly<K> {
        if let Some((_, lc)) = p.first() {
            if !self.field.is_one(lc) {
                let inv = self.field.inv(lc).expect("nonzero");
                for (_, c) in p.iter_mut() {
                    *c = self.field.mul(c, &inv);
                }
            }
        }
        p
    }

    /// `p - c * m * g`, merging two sorted term lists.
    fn sub_scaled(&self, p: &InternalPoly<K>, c: &K::Elem, m: &[u32], g: &InternalPoly<K>) -> InternalPoly<K> {
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut i = 0;
        let mut it = g.iter().map(|(gm, gc)| {
            let mm: Monomial = gm.iter().zip(m).map(|(a, b)| a + b).collect();
            (mm, self.field.mul(gc, c))
        });
        let mut next = it.next();
        loop {
            match (p.get(i), next.take()) {
                (None, None) => break,
                (Some(t), None) => {
                    out.push(t.clone());
                    i += 1;
                }
                (None, Some((mm, cc))) => {
                    out.push((mm, self.field.neg(&cc)));
                    next = it.next();
                }
                (Some(t), Some((mm, cc))) => match self.order.cmp(&t.0, &mm) {
                    Ordering::Greater => {
                        out.push(t.clone());
                        i += 1;
                        next = Some((mm, cc));
                    }
                    Ordering::Less => {
                        out.push((mm, self.field.neg(&cc)));
                        next = it.next();
                    }
                    Ordering::Equal => {
                        let s = self.field.sub(&t.1, &cc);
                        if !self.field.is_zero(&s) {
                            out.push((mm, s));
                        }
                        i += 1;
                        next = it.next();
                    }
                },
            }
        }
        out
    }

    /// Full reduction modulo monic `basis`.
    pub(crate) fn normal_form(&self, mut p: InternalPoly<K>, basis: &[InternalPoly<K>]) -> InternalPoly<K> {
        let mut rem: InternalPoly<K> = Vec::new();
        // `p` is consumed from the front; keep an offset instead of shifting
        while !p.is_empty() {
            let (lm, lc) = &p[0];
            let divisor = basis.iter().find(|g| divides(&g[0].0, lm));
            match divisor {
                Some(g) => {
                    let m: Monomial = lm.iter().zip(&g[0].0).map(|(a, b)| a - b).collect();
                    let c = lc.clone();
                    p = self.sub_scaled(&p, &c, &m, g);
                }
                None => {
                    let t = p.remove(0);
                    rem.push(t);
                }
            }
        }
        rem
    }

    pub(crate) fn spoly(&self, f: &InternalPoly<K>, g: &InternalPoly<K>) -> InternalPoly<K> {
        let (fm, fc) = &f[0];
        let (gm, gc) = &g[0];
        let l = lcm(fm, gm);
        let mf: Monomial = l.iter().zip(fm).map(|(a, b)| a - b).collect();
        let mg: Monomial = l.iter().zip(gm).map(|(a, b)| a - b).collect();
        let fi = self.field.inv(fc).expect("nonzero");
        let gi = self.field.inv(gc).expect("nonzero");
        let zero: InternalPoly<K> = Vec::new();
        let a = self.sub_scaled(&zero, &self.field.neg(&fi), &mf, f);
        self.sub_scaled(&a, &gi, &mg, g)
    }

    /// Reduced Gröbner basis of the input, sorted by leading monomial
    /// descending.
    pub(crate) fn groebner(&self, input: Vec<InternalPoly<K>>, max_reductions: usize) -> Result<Vec<InternalPoly<K>>> {
        let mut basis: Vec<InternalPoly<K>> = Vec::new();
        for p in input.into_iter().filter(|p| !p.is_empty()) {
            let p = self.monic(self.normal_form(p, &basis));
            if !p.is_empty() {
                basis.push(p);
            }
        }
        if let Some(unit) = basis.iter().find(|p| p[0].0.iter().all(|&e| e == 0)) {
            return Ok(vec![unit.clone()]);
        }
        let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
        for j in 0..basis.len() {
            for i in 0..j {
                pending.insert((i, j));
            }
        }
        let mut reductions = 0usize;
        while let Some(&(i, j)) = pending.iter().min_by(|a, b| self.pair_key(&basis, **a, **b)) {
            pending.remove(&(i, j));
            let (lmi, lmj) = (&basis[i][0].0, &basis[j][0].0);
            if coprime(lmi, lmj) {
                continue;
            }
            let l = lcm(lmi, lmj);
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && divides(&basis[k][0].0, &l)
                    && !pending.contains(&ordered(i, k))
                    && !pending.contains(&ordered(j, k))
            });
            if chain {
                continue;
            }
            reductions += 1;
            if reductions > max_reductions {
                return Err(Error::ResourceLimit(format!(
                    "Buchberger stopped after {max_reductions} S-polynomial reductions"
                )));
            }
            let s = self.spoly(&basis[i], &basis[j]);
            let h = self.normal_form(s, &basis);
            if h.is_empty() {
                continue;
            }
            let h = self.monic(h);
            if h[0].0.iter().all(|&e| e == 0) {
                return Ok(vec![h]);
            }
            let n = basis.len();
            basis.push(h);
            for k in 0..n {
                pending.insert((k, n));
            }
        }
        Ok(self.reduce_basis(basis))
    }

    fn pair_key(&self, basis: &[InternalPoly<K>], a: (usize, usize), b: (usize, usize)) -> Ordering {
        let la = lcm(&basis[a.0][0].0, &basis[a.1][0].0);
        let lb = lcm(&basis[b.0][0].0, &basis[b.1][0].0);
        let da: u32 = la.iter().sum();
        let db: u32 = lb.iter().sum();
        da.cmp(&db).then_with(|| self.order.cmp(&la, &lb)).then_with(|| a.cmp(&b))
    }

    fn reduce_basis(&self, basis: Vec<InternalPoly<K>>) -> Vec<InternalPoly<K>> {
        // minimal: drop elements whose leading monomial is divisible by another's
        let mut minimal: Vec<InternalPoly<K>> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let redundant = basis.iter().enumerate().any(|(j, h)| {
                j != i && divides(&h[0].0, &g[0].0) && (h[0].0 != g[0].0 || j < i)
            });
            if !redundant {
                minimal.push(g.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<InternalPoly<K>> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let g = &minimal[i];
            let head = g[0].clone();
            let tail = self.normal_form(g[1..].to_vec(), &others);
            let mut r = vec![head];
            r.extend(tail);
            reduced.push(self.monic(r));
        }
        reduced.sort_by(|a, b| self.order.cmp(&b[0].0, &a[0].0));
        reduced
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}
