//! Buchberger Gröbner bases, elimination and rational solving.

mod kernel;
mod solve;

use std::cmp::Ordering;

use crate::algebra::{Field, Monomial, MultiPoly};
use crate::error::{Error, Result};

pub use solve::{solve_rational, solve_rational_with, RationalSolutions};

use kernel::{InternalPoly, Kernel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

/// A monomial order together with the variable precedence; `vars[0]` is the
/// most significant variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub vars: Vec<String>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, vars: &[&str]) -> Self {
        MonomialOrder { kind, vars: vars.iter().map(|s| s.to_string()).collect() }
    }

    pub fn lex(vars: &[&str]) -> Self {
        Self::new(OrderKind::Lex, vars)
    }

    pub fn degrevlex(vars: &[&str]) -> Self {
        Self::new(OrderKind::DegRevLex, vars)
    }

    pub fn with_vars(kind: OrderKind, vars: Vec<String>) -> Self {
        MonomialOrder { kind, vars }
    }

    /// Compares exponent vectors laid out in `self.vars` order.
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::Lex => a.cmp(b),
            OrderKind::DegRevLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            // smaller exponent in the last differing variable wins
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

/// Tuning knobs for [`buchberger_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of S-polynomial reductions before giving up.
    pub max_reductions: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_reductions: 20_000 }
    }
}

/// Generators of an ideal under a fixed monomial order. Generators live in
/// the ring whose variable list is `order.vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis<K: Field> {
    generators: Vec<MultiPoly<K>>,
    order: MonomialOrder,
    is_groebner: bool,
}

impl<K: Field> IdealBasis<K> {
    /// Wraps arbitrary generators; `is_groebner` is false.
    pub fn new(generators: &[MultiPoly<K>], order: &MonomialOrder) -> Result<Self> {
        let generators = generators.iter().map(|g| g.embed(&order.vars)).collect::<Result<Vec<_>>>()?;
        Ok(IdealBasis { generators, order: order.clone(), is_groebner: false })
    }

    pub fn generators(&self) -> &[MultiPoly<K>] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_groebner(&self) -> bool {
        self.is_groebner
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| !g.is_zero() && g.is_constant())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().filter_map(|g| leading_monomial(g, &self.order)).collect()
    }

    /// For a Gröbner basis: every variable has a pure power among the leading
    /// monomials. The unit ideal counts as zero-dimensional (empty variety).
    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        let lms = self.leading_monomials();
        (0..self.order.vars.len()).all(|i| {
            lms.iter().any(|m| m[i] > 0 && m.iter().enumerate().all(|(j, &k)| j == i || k == 0))
        })
    }

    /// Monomials not divisible by any leading monomial; their number is the
    /// dimension of the quotient ring. Requires a zero-dimensional Gröbner
    /// basis.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_groebner {
            return Err(Error::Precondition("standard monomials need a Gröbner basis".into()));
        }
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional("quotient ring is infinite-dimensional".into()));
        }
        if self.is_unit() {
            return Ok(Vec::new());
        }
        let lms = self.leading_monomials();
        let n = self.order.vars.len();
        let caps: Vec<u32> = (0..n)
            .map(|i| {
                lms.iter()
                    .filter(|m| m.iter().enumerate().all(|(j, &k)| j == i || k == 0))
                    .map(|m| m[i])
                    .min()
                    .expect("zero-dimensional")
            })
            .collect();
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        'outer: loop {
            if !lms.iter().any(|m| divides(m, &cur)) {
                out.push(cur.clone());
            }
            for i in 0..n {
                cur[i] += 1;
                if cur[i] < caps[i] {
                    continue 'outer;
                }
                cur[i] = 0;
            }
            break;
        }
        Ok(out)
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Leading monomial of `f` under `order`; `f` must live in the order's ring.
pub fn leading_monomial<K: Field>(f: &MultiPoly<K>, order: &MonomialOrder) -> Option<Monomial> {
    f.terms().map(|(m, _)| m).max_by(|a, b| order.cmp(a, b)).cloned()
}

/// Normal form of `f` modulo the generators of `basis` (full reduction).
pub fn reduce<K: Field>(f: &MultiPoly<K>, basis: &IdealBasis<K>) -> Result<MultiPoly<K>> {
    let f = f.embed(&basis.order.vars)?;
    if let Some(g) = basis.generators.first() {
        f.field().ensure_same(g.field())?;
    }
    let kernel = Kernel::new(f.field().clone(), basis.order.clone());
    let gens: Vec<InternalPoly<K>> = basis
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| kernel.monic(kernel.import(g)))
        .collect();
    let nf = kernel.normal_form(kernel.import(&f), &gens);
    Ok(kernel.export(&nf, &f))
}

/// Reduced Gröbner basis with the default resource cap.
pub fn buchberger<K: Field>(gens: &[MultiPoly<K>], order: &MonomialOrder) -> Result<IdealBasis<K>> {
    buchberger_with(gens, order, GroebnerConfig::default())
}

/// Reduced Gröbner basis: minimal, monic, inter-reduced, sorted by leading
/// monomial in descending order.
pub fn buchberger_with<K: Field>(gens: &[MultiPoly<K>], order: &MonomialOrder, config: GroebnerConfig) -> Result<IdealBasis<K>> {
    let first = gens.first().ok_or_else(|| Error::InvalidInput("empty generator list".into()))?;
    let field = first.field().clone();
    let mut imported = Vec::with_capacity(gens.len());
    let kernel = Kernel::new(field.clone(), order.clone());
    for g in gens {
        field.ensure_same(g.field())?;
        let g = g.embed(&order.vars)?;
        imported.push(kernel.import(&g));
    }
    let reduced = kernel.groebner(imported, config.max_reductions)?;
    let template = MultiPoly::zero_in(field, order.vars.clone());
    let generators = reduced.iter().map(|p| kernel.export(p, &template)).collect();
    Ok(IdealBasis { generators, order: order.clone(), is_groebner: true })
}

/// Direct check of Buchberger's criterion: every S-polynomial of a pair of
/// generators reduces to zero modulo the generators.
pub fn satisfies_buchberger_criterion<K: Field>(basis: &IdealBasis<K>) -> bool {
    let Some(first) = basis.generators.first() else {
        return true;
    };
    let kernel = Kernel::new(first.field().clone(), basis.order.clone());
    let gens: Vec<InternalPoly<K>> = basis
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| kernel.monic(kernel.import(g)))
        .collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let s = kernel.spoly(&gens[i], &gens[j]);
            if !kernel.normal_form(s, &gens).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Elimination ideal `I ∩ K[keep]` from a lex Gröbner basis whose order ranks
/// every eliminated variable above every kept one.
pub fn eliminate<K: Field>(basis: &IdealBasis<K>, keep: &[&str]) -> Result<IdealBasis<K>> {
    if !basis.is_groebner {
        return Err(Error::Precondition("elimination needs a Gröbner basis".into()));
    }
    let vars = &basis.order.vars;
    for k in keep {
        if !vars.iter().any(|v| v == k) {
            return Err(Error::UnknownVariable(k.to_string()));
        }
    }
    if keep.len() == vars.len() {
        return Ok(basis.clone());
    }
    if basis.order.kind != OrderKind::Lex {
        return Err(Error::Precondition("elimination needs a lex order".into()));
    }
    let kept_mask: Vec<bool> = vars.iter().map(|v| keep.contains(&v.as_str())).collect();
    let first_kept = kept_mask.iter().position(|&b| b).unwrap_or(vars.len());
    if kept_mask[first_kept..].iter().any(|&b| !b) {
        return Err(Error::Precondition("eliminated variables must rank above kept ones".into()));
    }
    let new_vars: Vec<String> = vars[first_kept..].to_vec();
    let generators = basis
        .generators
        .iter()
        .filter(|g| (0..first_kept).all(|i| !g.involves(i)))
        .map(|g| g.embed(&new_vars))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealBasis {
        generators,
        order: MonomialOrder::with_vars(OrderKind::Lex, new_vars),
        is_groebner: true,
    })
}
