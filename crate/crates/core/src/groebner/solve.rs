//! Rational points of zero-dimensional systems by lex triangularization.

use super::{buchberger_with, GroebnerConfig, MonomialOrder, OrderKind};
use crate::algebra::{split_rational_roots, uni_gcd, Field, MultiPoly, Rational, Rationals, UniPoly};
use crate::error::{Error, Result};

/// Solutions with all coordinates rational, in the variable order of the
/// input system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSolutions {
    pub vars: Vec<String>,
    pub points: Vec<Vec<Rational>>,
    /// Roots met during back-substitution that are not rational; each one is
    /// a branch of solutions this solver does not follow.
    pub unresolved_branches: usize,
}

pub fn solve_rational(system: &[MultiPoly<Rationals>]) -> Result<RationalSolutions> {
    solve_rational_with(system, GroebnerConfig::default())
}

pub fn solve_rational_with(system: &[MultiPoly<Rationals>], config: GroebnerConfig) -> Result<RationalSolutions> {
    let first = system.first().ok_or_else(|| Error::InvalidInput("empty system".into()))?;
    let vars = first.vars().to_vec();
    let n = vars.len();
    let order = MonomialOrder::with_vars(OrderKind::Lex, vars.clone());
    let gb = buchberger_with(system, &order, config)?;
    if gb.is_unit() {
        return Ok(RationalSolutions { vars, points: Vec::new(), unresolved_branches: 0 });
    }
    if !gb.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional(format!(
            "some variable of [{}] has no pure-power leading term",
            vars.join(", ")
        )));
    }
    // tiers[k]: basis elements whose most significant variable is k
    let mut tiers: Vec<Vec<&MultiPoly<Rationals>>> = vec![Vec::new(); n];
    for g in gb.generators() {
        if let Some(k) = (0..n).find(|&i| g.involves(i)) {
            tiers[k].push(g);
        }
    }
    let mut partial: Vec<Vec<Rational>> = vec![Vec::new()]; // values for vars k..n, stored reversed
    let mut unresolved = 0usize;
    for k in (0..n).rev() {
        let mut next = Vec::new();
        for values in &partial {
            let mut g: Option<UniPoly<Rationals>> = None;
            for poly in &tiers[k] {
                let mut q = (*poly).clone();
                for (offset, v) in values.iter().enumerate() {
                    q = q.eval_var(n - 1 - offset, v);
                }
                let u = q.to_uni(&vars[k])?;
                g = Some(match g {
                    None => u,
                    Some(acc) if u.is_zero() => acc,
                    Some(acc) if acc.is_zero() => u,
                    Some(acc) => uni_gcd(&acc, &u)?,
                });
            }
            let g = g.ok_or_else(|| Error::NotZeroDimensional(format!("no eliminant for {}", vars[k])))?;
            if g.is_zero() {
                return Err(Error::NotZeroDimensional(format!("{} is free over a partial solution", vars[k])));
            }
            let (roots, rest) = split_rational_roots(&g)?;
            unresolved += rest;
            for r in roots {
                let mut v = values.clone();
                v.push(r);
                next.push(v);
            }
        }
        partial = next;
    }
    let mut points: Vec<Vec<Rational>> = partial
        .into_iter()
        .map(|mut v| {
            v.reverse();
            v
        })
        .filter(|pt| system.iter().all(|f| Rationals.is_zero(&f.eval(pt))))
        .collect();
    points.sort();
    points.dedup();
    Ok(RationalSolutions { vars, points, unresolved_branches: unresolved })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::parse::parse_rational;

    fn sys(polys: &[&str], vars: &[&str]) -> Vec<MultiPoly<Rationals>> {
        polys.iter().map(|s| parse_rational(s, vars).unwrap()).collect()
    }

    #[test]
    fn intersection_of_parabolas() {
        let s = solve_rational(&sys(&["x^2 - y", "y^2 - x"], &["x", "y"])).unwrap();
        assert_eq!(s.points, vec![vec![int(0), int(0)], vec![int(1), int(1)]]);
        // y^2 + y + 1 carries the two complex points
        assert_eq!(s.unresolved_branches, 2);
    }

    #[test]
    fn triangular_linear() {
        let s = solve_rational(&sys(&["x - 2", "y - 1"], &["x", "y"])).unwrap();
        assert_eq!(s.points, vec![vec![int(2), int(1)]]);
    }

    #[test]
    fn no_rational_root() {
        let s = solve_rational(&sys(&["x^2 + 1"], &["x"])).unwrap();
        assert!(s.points.is_empty());
        assert_eq!(s.unresolved_branches, 2);
    }

    #[test]
    fn positive_dimensional_rejected() {
        let r = solve_rational(&sys(&["x - y"], &["x", "y"]));
        assert!(matches!(r, Err(Error::NotZeroDimensional(_))));
    }

    #[test]
    fn inconsistent_system() {
        let s = solve_rational(&sys(&["x - 1", "x - 2"], &["x"])).unwrap();
        assert!(s.points.is_empty());
    }
}
