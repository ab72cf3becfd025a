use crate::algebra::{resultant, Field, MultiPoly, Rational, Rationals, UniPoly};
use crate::error::{Error, Result};
use crate::groebner::{solve_rational_with, GroebnerConfig};

use super::point::{ff_height, verify_ff_solution, FunctionFieldPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// `r = 1`: polynomial points only.
    Polynomial,
    /// `r` monic of each degree `0..=N`.
    Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FfSearch {
    /// Verified, normalized, deduplicated; sorted by height then text.
    pub points: Vec<FunctionFieldPoint<Rationals>>,
    /// Non-rational roots met while solving the coefficient systems.
    pub unresolved_branches: usize,
    pub systems_solved: usize,
}

pub fn search_ff_solutions(f: &MultiPoly<Rationals>, n: u32, mode: SearchMode) -> Result<FfSearch> {
    search_ff_solutions_with(f, n, mode, GroebnerConfig::default())
}

/// Points of `f(x, y, t) = 0` over `Q(t)` of height at most `n` whose
/// coefficients are rational.
///
/// The ansatz is `x = p/r, y = q/r` with `deg p, deg q ≤ n` and `r` monic of
/// degree `j`. For `j ≥ 1`, coprimality is imposed through
/// `w · Res_t(r, p + λq) = 1` for each `λ = 0..=j`: a coprime triple passes
/// for at least one of these `λ`, and the extra equation keeps the
/// coefficient system zero-dimensional.
pub fn search_ff_solutions_with(f: &MultiPoly<Rationals>, n: u32, mode: SearchMode, config: GroebnerConfig) -> Result<FfSearch> {
    let f = f.embed_str(&["x", "y", "t"])?;
    let d = f.degree_in_set(&[0, 1]).ok_or(Error::ZeroPolynomial("search"))?;
    if d == 0 {
        return Err(Error::DegreeTooLow("f does not involve x or y".into()));
    }
    let max_j = match mode {
        SearchMode::Polynomial => 0,
        SearchMode::Rational => n,
    };
    let mut found: Vec<FunctionFieldPoint<Rationals>> = Vec::new();
    let mut unresolved = 0usize;
    let mut systems = 0usize;
    for j in 0..=max_j {
        let lambdas: Vec<i64> = if j == 0 { vec![0] } else { (0..=j as i64).collect() };
        for lambda in lambdas {
            let ansatz = Ansatz::new(n, j, j > 0);
            let system = ansatz.system(&f, d, lambda)?;
            systems += 1;
            let sols = solve_rational_with(&system, config).map_err(|e| match e {
                Error::ResourceLimit(m) => Error::ResourceLimit(format!(
                    "height bound N = {n} is infeasible at denominator degree {j}: {m}"
                )),
                Error::NotZeroDimensional(m) => Error::NotZeroDimensional(format!(
                    "coefficient system at denominator degree {j} has a positive-dimensional solution set \
                     (infinitely many points, e.g. a genus 0 curve): {m}"
                )),
                other => other,
            })?;
            unresolved += sols.unresolved_branches;
            for values in &sols.points {
                let pt = ansatz.point(values)?;
                if ff_height(&pt) <= n as u64 && verify_ff_solution(&f, &pt)? && !found.contains(&pt) {
                    found.push(pt);
                }
            }
        }
    }
    found.sort_by_cached_key(|p| (ff_height(p), p.to_string()));
    Ok(FfSearch { points: found, unresolved_branches: unresolved, systems_solved: systems })
}

/// Coefficient unknowns `w, p_0..p_n, q_0..q_n, r_0..r_{j-1}` followed by `t`.
struct Ansatz {
    n: u32,
    j: u32,
    with_w: bool,
    vars: Vec<String>,
}

impl Ansatz {
    fn new(n: u32, j: u32, with_w: bool) -> Self {
        let mut vars = Vec::new();
        if with_w {
            vars.push("w".to_string());
        }
        vars.extend((0..=n).map(|i| format!("p{i}")));
        vars.extend((0..=n).map(|i| format!("q{i}")));
        vars.extend((0..j).map(|i| format!("r{i}")));
        vars.push("t".to_string());
        Ansatz { n, j, with_w, vars }
    }

    fn var(&self, name: &str) -> MultiPoly<Rationals> {
        MultiPoly::var_in(Rationals, self.vars.clone(), name).expect("ansatz variable")
    }

    fn generic(&self, prefix: &str, degree: u32, monic: bool) -> MultiPoly<Rationals> {
        let t = self.var("t");
        let mut acc = MultiPoly::zero_in(Rationals, self.vars.clone());
        for i in (0..=degree).rev() {
            let c = if monic && i == degree { acc.constant_like(Rationals.one()) } else { self.var(&format!("{prefix}{i}")) };
            acc = &(&acc * &t) + &c;
        }
        acc
    }

    fn system(&self, f: &MultiPoly<Rationals>, d: u32, lambda: i64) -> Result<Vec<MultiPoly<Rationals>>> {
        let p = self.generic("p", self.n, false);
        let q = self.generic("q", self.n, false);
        let r = self.generic("r", self.j, true);
        let t = self.var("t");
        // r^d f(p/r, q/r, t)
        let homog = MultiPoly::from_terms(
            Rationals,
            ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect(),
            f.terms().map(|(e, c)| (vec![e[0], e[1], d - e[0] - e[1], e[2]], c.clone())).collect::<Vec<_>>(),
        );
        let sub = homog.compose(&[p.clone(), q.clone(), r.clone(), t])?;
        let t_idx = self.vars.len() - 1;
        let unknowns: Vec<String> = self.vars[..t_idx].to_vec();
        let mut system: Vec<MultiPoly<Rationals>> =
            sub.coeffs_in(t_idx).iter().filter(|c| !c.is_zero()).map(|c| c.embed(&unknowns)).collect::<Result<_>>()?;
        if self.with_w {
            let lam = p.constant_like(Rational::from_integer(lambda.into()));
            let res = resultant(&r, &(&p + &(&lam * &q)), "t")?;
            let eq = &(&self.var("w") * &res) - &res.constant_like(Rationals.one());
            system.push(eq.embed(&unknowns)?);
        }
        if system.is_empty() {
            return Err(Error::NotZeroDimensional("f vanishes identically on the ansatz".into()));
        }
        Ok(system)
    }

    fn point(&self, values: &[Rational]) -> Result<FunctionFieldPoint<Rationals>> {
        let off = usize::from(self.with_w);
        let m = self.n as usize + 1;
        let p = values[off..off + m].to_vec();
        let q = values[off + m..off + 2 * m].to_vec();
        let mut r = values[off + 2 * m..].to_vec();
        r.push(Rationals.one());
        FunctionFieldPoint::new(UniPoly::new(Rationals, "t", p), UniPoly::new(Rationals, "t", q), UniPoly::new(Rationals, "t", r))
    }
}
