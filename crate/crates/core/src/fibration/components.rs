//! Components of a reduced plane curve with only nodes, via node counts and
//! splitting off rational lines.

use std::collections::BTreeMap;

use crate::algebra::{int, uni_gcd, Field, Monomial, MultiPoly, Rational, Rationals, UniPoly};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, solve_rational, MonomialOrder};

use super::FIBER_VARS;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberAnalysis {
    pub degree: u32,
    pub nodes: u64,
    /// Components that are lines defined over `Q`.
    pub rational_lines: u64,
    /// Components of geometric genus 0, each counted once.
    pub rational_components: u64,
}

fn arithmetic_genus(m: u32) -> u64 {
    let m = m as u64;
    if m < 2 {
        0
    } else {
        (m - 1) * (m - 2) / 2
    }
}

fn small_pairs() -> impl Iterator<Item = (i64, i64)> {
    // (0, 0) first, then by growing max-norm
    let mut v: Vec<(i64, i64)> = (-5..=5i64).flat_map(|a| (-5..=5i64).map(move |b| (a, b))).collect();
    v.sort_by_key(|&(a, b)| (a.abs().max(b.abs()), a.abs() + b.abs(), -a, -b));
    v.into_iter()
}

fn checked_form(f: &MultiPoly<Rationals>) -> Result<(MultiPoly<Rationals>, u32)> {
    let f = f.embed_str(&FIBER_VARS)?;
    let m = f.total_degree().ok_or_else(|| Error::DegenerateFamily("fiber vanishes identically".into()))?;
    if f.terms().any(|(e, _)| e.iter().sum::<u32>() != m) {
        return Err(Error::InvalidInput("fiber is not a homogeneous form in x, y, z".into()));
    }
    Ok((f, m))
}

/// True when some singular point of `F` lies on the line `z + a x + b y = 0`.
fn singular_on_line(partials: &[MultiPoly<Rationals>; 3], a: &Rational, b: &Rational) -> Result<bool> {
    let q = Rationals;
    let x = MultiPoly::var(q, &FIBER_VARS, "x")?;
    let y = MultiPoly::var(q, &FIBER_VARS, "y")?;
    let z_img = &x.scale(&-a.clone()) - &y.scale(b);
    let restricted = partials
        .iter()
        .map(|p| p.compose(&[x.clone(), y.clone(), z_img.clone()]))
        .collect::<Result<Vec<_>>>()?;
    if restricted.iter().all(|r| r.is_zero()) {
        return Ok(true);
    }
    // the point (1 : 0) of the line
    if restricted.iter().all(|r| q.is_zero(&r.eval(&[q.one(), q.zero(), q.zero()]))) {
        return Ok(true);
    }
    let mut g: Option<UniPoly<Rationals>> = None;
    for r in &restricted {
        let u = r.eval_var(1, &q.one()).to_uni("x")?;
        if u.is_zero() {
            continue;
        }
        g = Some(match g {
            None => u,
            Some(acc) => uni_gcd(&acc, &u)?,
        });
    }
    Ok(g.is_some_and(|g| !g.is_constant()))
}

/// `F(x, y, 1 - a x - b y)` in `Q[x, y]` for a line `z + a x + b y = 0`
/// that avoids every singular point.
fn good_affine_chart(f: &MultiPoly<Rationals>) -> Result<MultiPoly<Rationals>> {
    let q = Rationals;
    let partials = [f.derivative(0), f.derivative(1), f.derivative(2)];
    let x = MultiPoly::var(q, &FIBER_VARS, "x")?;
    let y = MultiPoly::var(q, &FIBER_VARS, "y")?;
    let one = x.constant_like(q.one());
    for (a, b) in small_pairs().take(40) {
        let (a, b) = (int(a), int(b));
        if singular_on_line(&partials, &a, &b)? {
            continue;
        }
        let z_img = &(&one - &x.scale(&a)) - &y.scale(&b);
        return f.compose(&[x.clone(), y.clone(), z_img])?.embed_str(&["x", "y"]);
    }
    Err(Error::Unsupported("fiber has a non-reduced component".into()))
}

/// Number of singular points, all of which must be nodes. Non-isolated
/// singularities (multiple components) and worse singular points are
/// unsupported.
pub fn node_count(f: &MultiPoly<Rationals>) -> Result<u64> {
    let (f, _) = checked_form(f)?;
    let g = good_affine_chart(&f)?;
    let (gx, gy) = (g.derivative(0), g.derivative(1));
    let order = MonomialOrder::degrevlex(&["x", "y"]);
    let gb = buchberger(&[g.clone(), gx.clone(), gy.clone()], &order)?;
    if gb.is_unit() {
        return Ok(0);
    }
    if !gb.is_zero_dimensional() {
        return Err(Error::Unsupported("fiber has a multiple component".into()));
    }
    let hessian = &(&gx.derivative(0) * &gy.derivative(1)) - &(&gx.derivative(1) * &gx.derivative(1));
    let with_h = buchberger(&[g, gx, gy, hessian], &order)?;
    if !with_h.is_unit() {
        return Err(Error::Unsupported("fiber has a singular point that is not a node".into()));
    }
    // at a node the local algebra (g, g_x, g_y) has length 1
    Ok(gb.standard_monomials()?.len() as u64)
}

/// Changes coordinates so that `x^m` has a nonzero coefficient.
fn make_x_general(f: &MultiPoly<Rationals>, m: u32) -> Result<MultiPoly<Rationals>> {
    let q = Rationals;
    let x = MultiPoly::var(q, &FIBER_VARS, "x")?;
    let y = MultiPoly::var(q, &FIBER_VARS, "y")?;
    let z = MultiPoly::var(q, &FIBER_VARS, "z")?;
    for (a, b) in small_pairs() {
        let (a, b) = (int(a), int(b));
        if q.is_zero(&f.eval(&[q.one(), a.clone(), b.clone()])) {
            continue;
        }
        let g = f.compose(&[x.clone(), &y + &x.scale(&a), &z + &x.scale(&b)])?;
        debug_assert!(!q.is_zero(&g.coeff(&[m, 0, 0])));
        return Ok(g);
    }
    Err(Error::Unsupported("no coordinate change found".into()))
}

/// Groups `p` by its exponents in `coords`; each group is a polynomial in the
/// remaining variables `unknowns`.
fn coefficient_equations(p: &MultiPoly<Rationals>, coords: &[usize], unknowns: &[&str]) -> Result<Vec<MultiPoly<Rationals>>> {
    let idx = unknowns.iter().map(|v| p.var_index(v)).collect::<Result<Vec<_>>>()?;
    let mut groups: BTreeMap<Vec<u32>, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (e, c) in p.terms() {
        let key: Vec<u32> = coords.iter().map(|&i| e[i]).collect();
        let m: Monomial = idx.iter().map(|&i| e[i]).collect();
        groups.entry(key).or_default().push((m, c.clone()));
    }
    let vars: Vec<String> = unknowns.iter().map(|s| s.to_string()).collect();
    Ok(groups.into_values().map(|t| MultiPoly::from_terms(Rationals, vars.clone(), t)).collect())
}

fn ring(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Rational linear factors `x - a y - b z` of `g` (whose `x^m` coefficient is
/// nonzero).
fn linear_factors(g: &MultiPoly<Rationals>) -> Result<Vec<MultiPoly<Rationals>>> {
    let names = ["x", "y", "z", "a", "b"];
    let q = Rationals;
    let big = g.embed(&ring(&names))?;
    let v = |n: &str| MultiPoly::var(q, &names, n);
    let image_x = &(&v("a")? * &v("y")?) + &(&v("b")? * &v("z")?);
    let sub = big.compose(&[image_x, v("y")?, v("z")?, v("a")?, v("b")?, ])?;
    let eqs = coefficient_equations(&sub, &[1, 2], &["a", "b"])?;
    let sols = solve_rational(&eqs)?;
    let x = MultiPoly::var(q, &FIBER_VARS, "x")?;
    let y = MultiPoly::var(q, &FIBER_VARS, "y")?;
    let z = MultiPoly::var(q, &FIBER_VARS, "z")?;
    Ok(sols
        .points
        .iter()
        .map(|p| &(&x - &y.scale(&p[0])) - &z.scale(&p[1]))
        .collect())
}

/// Rational components of a nodal form of degree `m ≤ 5` with `delta` nodes
/// and no rational line among its components.
///
/// Without rational lines the only `Q`-factorizations are into pieces of
/// degree 2 and 3 (or one piece), and a Galois orbit of components of
/// degree 1 or 2 is rational; going through the cases, the count depends on
/// `(m, delta)` alone.
fn rational_count_without_lines(m: u32, delta: u64) -> Option<u64> {
    match (m, delta) {
        (0, 0) => Some(0),
        // conic, or a conjugate pair of lines
        (2, 0) => Some(1),
        (2, 1) => Some(2),
        // smooth or nodal cubic, or three conjugate lines
        (3, 0) => Some(0),
        (3, 1) => Some(1),
        (3, 3) => Some(3),
        (4, 0..=6) => Some(delta.saturating_sub(2)),
        (5, 0..=10) => Some(delta.saturating_sub(5)),
        _ => None,
    }
}

/// Counts the rational components of a reduced nodal fiber (a form in
/// `x, y, z`), each counted once. Rational lines are split off exactly; what
/// remains must have degree at most 5 unless its node count forces
/// irreducibility.
pub fn fiber_rational_components(f: &MultiPoly<Rationals>) -> Result<FiberAnalysis> {
    let (f, m) = checked_form(f)?;
    let nodes = node_count(&f)?;
    // a reducible curve of degree m has at least m - 1 singular points
    if nodes + 1 < m as u64 || m <= 1 {
        let rational = u64::from(nodes == arithmetic_genus(m));
        return Ok(FiberAnalysis { degree: m, nodes, rational_lines: u64::from(m == 1), rational_components: rational });
    }
    let g = make_x_general(&f, m)?;
    let lines = linear_factors(&g)?;
    let mut rest = g;
    for l in &lines {
        rest = rest
            .div_exact(l)
            .ok_or_else(|| Error::InvalidInput("linear factor does not divide; fiber not reduced".into()))?;
    }
    let n = lines.len() as u64;
    let mr = m - n as u32;
    let (rest_nodes, rest_count) = if mr == 0 {
        (0, 0)
    } else {
        let dr = node_count(&rest)?;
        let count = if dr + 1 < mr as u64 {
            u64::from(dr == arithmetic_genus(mr))
        } else {
            rational_count_without_lines(mr, dr).ok_or_else(|| {
                Error::Unsupported(format!("residual curve of degree {mr} with {dr} nodes is beyond the supported cases"))
            })?
        };
        (dr, count)
    };
    // transversal meetings: lines pairwise, and each line with the rest
    let expected = rest_nodes + n * n.saturating_sub(1) / 2 + n * mr as u64;
    if expected != nodes {
        return Err(Error::Unsupported(format!(
            "node count {nodes} does not match factor data {expected}; components meet non-transversally"
        )));
    }
    Ok(FiberAnalysis { degree: m, nodes, rational_lines: n, rational_components: n + rest_count })
}
