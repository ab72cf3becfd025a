//! A polynomial `f(x, y, t)` viewed as a family of plane curves over the
//! `t`-line, and the invariants `d, e, g, s, k, ω²` of that family.
//!
//! Fibers are studied in `P²` by homogenizing the `(x, y)`-part with `z`;
//! the fiber over `t = ∞` is the `u = 0` fiber of `u^e f(x, y, 1/u)`.

mod components;

use num_bigint::BigInt;

use crate::algebra::{rational_roots, squarefree_part, uni_gcd, Field, MultiPoly, Rational, Rationals, UniPoly};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, eliminate, MonomialOrder};

pub use components::{fiber_rational_components, node_count, FiberAnalysis};

pub const FAMILY_VARS: [&str; 3] = ["x", "y", "t"];
pub const FIBER_VARS: [&str; 3] = ["x", "y", "z"];

/// Moves `f` into the ring `Q[x, y, t]`.
pub fn as_family(f: &MultiPoly<Rationals>) -> Result<MultiPoly<Rationals>> {
    f.embed_str(&FAMILY_VARS)
}

/// `(d, e)`: joint degree in `(x, y)` and degree in `t`.
pub fn degrees(f: &MultiPoly<Rationals>) -> Result<(u32, u32)> {
    let f = as_family(f)?;
    let d = f.degree_in_set(&[0, 1]).ok_or(Error::ZeroPolynomial("degrees"))?;
    if d == 0 {
        return Err(Error::DegreeTooLow("f does not involve x or y".into()));
    }
    Ok((d, f.degree_in(2).unwrap_or(0)))
}

/// Genus of a smooth plane curve of degree `d`.
pub fn generic_genus(d: u32) -> u64 {
    let d = d as u64;
    if d < 2 {
        return 0;
    }
    (d - 1) * (d - 2) / 2
}

/// `ω²` of a smooth surface of bidegree `(d, e)` in `P² × P¹`, where
/// `ω = O(d - 3, e)`.
pub fn omega_sq_bidegree(d: u32, e: u32) -> BigInt {
    let (d, e) = (BigInt::from(d), BigInt::from(e));
    BigInt::from(3) * e * (&d - 1) * (&d - 3)
}

/// Parameters of the singular fibers: the roots of `finite_parameters`
/// (monic, squarefree), plus `t = ∞` when flagged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularFiberLocus {
    pub finite_parameters: UniPoly<Rationals>,
    pub infinity_is_singular: bool,
}

/// Number of singular fibers, counting `t = ∞` when singular.
pub fn count_singular_fibers(locus: &SingularFiberLocus) -> u64 {
    locus.finite_parameters.degree().unwrap_or(0) as u64 + u64::from(locus.infinity_is_singular)
}

/// Homogenizes the `(x, y)` part with `z` at degree `d`; result lives in
/// `Q[x, y, z, t]`.
pub(crate) fn homogenize(f: &MultiPoly<Rationals>, d: u32) -> MultiPoly<Rationals> {
    let vars: Vec<String> = ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect();
    let terms = f.terms().map(|(e, c)| (vec![e[0], e[1], d - e[0] - e[1], e[2]], c.clone()));
    MultiPoly::from_terms(Rationals, vars, terms.collect::<Vec<_>>())
}

/// `u^e f(x, y, 1/u)`, renamed back to `t`.
pub(crate) fn reverse_parameter(f: &MultiPoly<Rationals>, e: u32) -> MultiPoly<Rationals> {
    let terms = f.terms().map(|(m, c)| (vec![m[0], m[1], e - m[2]], c.clone()));
    MultiPoly::from_terms(Rationals, f.vars().to_vec(), terms.collect::<Vec<_>>())
}

/// The three chart systems whose common zeros are the singular points of
/// the projective curve `F = 0`: the affine chart `z = 1`, the chart
/// `(1 : y : 0)` of the line at infinity, and the point `(0 : 1 : 0)`.
/// `F` lives in `Q[x, y, z, t]`; the systems keep `t` when `with_t`.
struct ChartSystems {
    affine: Vec<MultiPoly<Rationals>>,
    at_infinity: Vec<MultiPoly<Rationals>>,
    point: Vec<MultiPoly<Rationals>>,
}

fn chart_systems(big_f: &MultiPoly<Rationals>, with_t: bool) -> Result<ChartSystems> {
    let q = Rationals;
    let (zero, one) = (q.zero(), q.one());
    let fx = big_f.derivative(0);
    let fy = big_f.derivative(1);
    let fz = big_f.derivative(2);
    let tail: &[&str] = if with_t { &["t"] } else { &[] };
    let ring = |names: &[&str]| -> Vec<String> { names.iter().chain(tail).map(|s| s.to_string()).collect() };
    // Euler: d F = x F_x + y F_y + z F_z, so one partial is implied in each chart
    let affine = [big_f, &fx, &fy]
        .iter()
        .map(|p| p.eval_var(2, &one).embed(&ring(&["x", "y"])))
        .collect::<Result<Vec<_>>>()?;
    let at_infinity = [big_f, &fy, &fz]
        .iter()
        .map(|p| p.eval_var(0, &one).eval_var(2, &zero).embed(&ring(&["y"])))
        .collect::<Result<Vec<_>>>()?;
    let point = [big_f, &fx, &fz]
        .iter()
        .map(|p| p.eval_var(0, &zero).eval_var(1, &one).eval_var(2, &zero).embed(&ring(&[])))
        .collect::<Result<Vec<_>>>()?;
    Ok(ChartSystems { affine, at_infinity, point })
}

/// Generator of `I ∩ Q[t]` for a system in `[.., t]`; `None` for the zero
/// ideal.
fn t_eliminant(system: &[MultiPoly<Rationals>]) -> Result<Option<UniPoly<Rationals>>> {
    let vars: Vec<&str> = system[0].vars().iter().map(|s| s.as_str()).collect();
    if vars.len() == 1 {
        let mut g: Option<UniPoly<Rationals>> = None;
        for p in system {
            let u = p.to_uni("t")?;
            g = match g {
                None => Some(u),
                Some(acc) if acc.is_zero() && u.is_zero() => Some(acc),
                Some(acc) => Some(uni_gcd(&acc, &u)?),
            };
        }
        let g = g.expect("nonempty system");
        return Ok(if g.is_zero() { None } else { Some(g) });
    }
    let gb = buchberger(system, &MonomialOrder::lex(&vars))?;
    let elim = eliminate(&gb, &["t"])?;
    match elim.generators() {
        [] => Ok(None),
        [g] => Ok(Some(g.to_uni("t")?.monic())),
        many => {
            // a reduced lex basis of a principal ideal has one element; fold defensively
            let mut acc = many[0].to_uni("t")?;
            for g in &many[1..] {
                acc = uni_gcd(&acc, &g.to_uni("t")?)?;
            }
            Ok(Some(acc))
        }
    }
}

/// Whether the projective plane curve `F(x, y, z) = 0` (homogeneous, in
/// `Q[x, y, z, t]` with `t` absent) has a singular point over `Q̄`.
pub(crate) fn projective_curve_is_singular(big_f: &MultiPoly<Rationals>) -> Result<bool> {
    let sys = chart_systems(big_f, false)?;
    if sys.point.iter().all(|p| p.is_zero()) {
        return Ok(true);
    }
    for s in [&sys.affine, &sys.at_infinity] {
        if s.iter().all(|p| p.is_zero()) {
            return Ok(true);
        }
        let vars: Vec<&str> = s[0].vars().iter().map(|v| v.as_str()).collect();
        let gb = buchberger(s, &MonomialOrder::degrevlex(&vars))?;
        if !gb.is_unit() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Locates the singular fibers of the family `f(x, y, t) = 0`.
pub fn singular_fiber_locus(f: &MultiPoly<Rationals>) -> Result<SingularFiberLocus> {
    let f = as_family(f)?;
    let (d, e) = degrees(&f)?;
    let big_f = homogenize(&f, d);
    let sys = chart_systems(&big_f, true)?;
    let mut product = UniPoly::one(Rationals, "t");
    for s in [&sys.affine, &sys.at_infinity, &sys.point] {
        match t_eliminant(s)? {
            None => {
                return Err(Error::DegenerateFamily(
                    "every fiber is singular (the singular locus dominates the t-line)".into(),
                ))
            }
            Some(g) => product = &product * &g,
        }
    }
    let finite_parameters = squarefree_part(&product)?;

    let rev = reverse_parameter(&f, e);
    let fiber_at_infinity = homogenize(&rev, d).eval_var(3, &Rationals.zero());
    let infinity_is_singular = projective_curve_is_singular(&fiber_at_infinity)?;
    Ok(SingularFiberLocus { finite_parameters, infinity_is_singular })
}

/// Where the number `k` came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Computed,
    UserSupplied,
}

impl Source {
    pub fn as_str(&self) -> &'static str {
        match self {
            Source::Computed => "computed",
            Source::UserSupplied => "user-supplied",
        }
    }
}

/// The fiber over a rational parameter, as a form in `Q[x, y, z]`.
pub fn fiber_at(f: &MultiPoly<Rationals>, t0: &Rational) -> Result<MultiPoly<Rationals>> {
    let f = as_family(f)?;
    let (d, _) = degrees(&f)?;
    homogenize(&f, d).eval_var(3, t0).embed_str(&FIBER_VARS)
}

/// The fiber over `t = ∞`, as a form in `Q[x, y, z]`.
pub fn fiber_at_infinity(f: &MultiPoly<Rationals>) -> Result<MultiPoly<Rationals>> {
    let f = as_family(f)?;
    let (d, e) = degrees(&f)?;
    homogenize(&reverse_parameter(&f, e), d).eval_var(3, &Rationals.zero()).embed_str(&FIBER_VARS)
}

/// Total number of rational (geometric genus 0) components of the singular
/// fibers, each distinct component counted once. Fibers must sit over
/// rational parameters and have only nodes; anything else is reported as
/// unsupported so that the caller can supply `k` directly.
pub fn rational_components(f: &MultiPoly<Rationals>, locus: &SingularFiberLocus) -> Result<(u64, Source)> {
    let roots = rational_roots(&locus.finite_parameters)?;
    let n = locus.finite_parameters.degree().unwrap_or(0);
    if roots.len() < n {
        return Err(Error::Unsupported(format!(
            "{} singular parameter(s) are irrational (roots of {}); supply k explicitly",
            n - roots.len(),
            locus.finite_parameters
        )));
    }
    let mut k = 0;
    let with_hint = |t: String, e: Error| match e {
        Error::Unsupported(m) => Error::Unsupported(format!("fiber t = {t}: {m}; supply k explicitly")),
        other => other,
    };
    for t0 in &roots {
        let fiber = fiber_at(f, t0)?;
        k += fiber_rational_components(&fiber).map_err(|e| with_hint(t0.to_string(), e))?.rational_components;
    }
    if locus.infinity_is_singular {
        let fiber = fiber_at_infinity(f)?;
        k += fiber_rational_components(&fiber).map_err(|e| with_hint("∞".into(), e))?.rational_components;
    }
    Ok((k, Source::Computed))
}

/// User-supplied values that replace computed ones.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Overrides {
    pub k: Option<u64>,
    pub s: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInvariants {
    pub d: u32,
    pub e: u32,
    pub g: u64,
    /// Singular fibers, counting `t = ∞`.
    pub s: u64,
    pub s_source: Source,
    /// Singular fibers over finite parameters only (when computed).
    pub s_finite: Option<u64>,
    pub k: u64,
    pub k_source: Source,
    /// `3e(d-1)(d-3)`, valid when the closure in `P² × P¹` is smooth.
    pub omega_sq: Option<Rational>,
    pub locus: Option<SingularFiberLocus>,
}

impl FamilyInvariants {
    /// The plane-curve bound needs `d ≥ 4`.
    pub fn usable_for_plane_bound(&self) -> bool {
        self.d >= 4
    }

    pub fn genus_at_least_two(&self) -> bool {
        self.g >= 2
    }
}

/// Assembles `d, e, g, s, k, ω²`. Overrides take precedence; the locus is
/// computed only when `s` or `k` is missing.
pub fn extract_invariants(f: &MultiPoly<Rationals>, overrides: Overrides) -> Result<FamilyInvariants> {
    let f = as_family(f)?;
    let (d, e) = degrees(&f)?;
    let g = generic_genus(d);
    let locus = if overrides.s.is_none() || overrides.k.is_none() {
        Some(singular_fiber_locus(&f)?)
    } else {
        None
    };
    let (s, s_source, s_finite) = match (overrides.s, &locus) {
        (Some(s), _) => (s, Source::UserSupplied, locus.as_ref().map(|l| l.finite_parameters.degree().unwrap_or(0) as u64)),
        (None, Some(l)) => (count_singular_fibers(l), Source::Computed, Some(l.finite_parameters.degree().unwrap_or(0) as u64)),
        (None, None) => unreachable!("locus computed when s is missing"),
    };
    let (k, k_source) = match (overrides.k, &locus) {
        (Some(k), _) => (k, Source::UserSupplied),
        (None, Some(l)) => rational_components(&f, l)?,
        (None, None) => unreachable!("locus computed when k is missing"),
    };
    Ok(FamilyInvariants {
        d,
        e,
        g,
        s,
        s_source,
        s_finite,
        k,
        k_source,
        omega_sq: Some(Rational::from_integer(omega_sq_bidegree(d, e))),
        locus,
    })
}
