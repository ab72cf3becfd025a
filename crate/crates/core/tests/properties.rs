use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use hbound_core::algebra::{discriminant, int, rat, squarefree_part, uni_gcd, MultiPoly, PrimeField, Rational, Rationals, UniPoly};
use hbound_core::bounds::{self, Assumptions, PointData};
use hbound_core::fibration::{self, count_singular_fibers, singular_fiber_locus};
use hbound_core::geography::{self, SurfaceNumbers};
use hbound_core::groebner::{buchberger, reduce, solve_rational, MonomialOrder};
use hbound_core::parse::parse_rational;
use hbound_core::solver::{self, ff_height, verify_ff_solution, FunctionFieldPoint, SearchMode};

fn uni(c: &[i64]) -> UniPoly<Rationals> {
    UniPoly::from_i64(Rationals, "x", c)
}

fn small_uni() -> impl Strategy<Value = UniPoly<Rationals>> {
    prop::collection::vec(-4i64..=4, 1..=4).prop_map(|c| uni(&c))
}

fn nonzero_uni() -> impl Strategy<Value = UniPoly<Rationals>> {
    small_uni().prop_filter("nonzero", |p| !p.is_zero())
}

fn xyz_poly() -> impl Strategy<Value = MultiPoly<Rationals>> {
    prop::collection::vec(((0u32..=2, 0u32..=2, 0u32..=2), -5i64..=5), 0..=4).prop_map(|terms| {
        MultiPoly::from_terms(
            Rationals,
            ["x", "y", "z"].iter().map(|s| s.to_string()).collect(),
            terms.into_iter().map(|((a, b, c), k)| (vec![a, b, c], int(k))),
        )
    })
}

fn fp_uni(p: u64) -> impl Strategy<Value = UniPoly<PrimeField>> {
    prop::collection::vec(0i64..p as i64, 1..=3)
        .prop_map(move |c| UniPoly::from_i64(PrimeField::new(p).unwrap(), "t", &c))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn rationals_stay_normalized(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        let x = rat(a, b) * rat(c, d) + rat(a, d) - rat(c, b);
        prop_assert!(x.denom().is_positive());
        prop_assert_eq!(num_integer::Integer::gcd(x.numer(), x.denom()), if x.numer().is_zero() { x.denom().clone() } else { BigInt::from(1) });
    }

    #[test]
    fn gcd_divides_and_is_greatest(a in nonzero_uni(), b in nonzero_uni(), c in nonzero_uni()) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = uni_gcd(&ac, &bc).unwrap();
        prop_assert!(ac.rem(&g).unwrap().is_zero());
        prop_assert!(bc.rem(&g).unwrap().is_zero());
        prop_assert!(g.rem(&c).unwrap().is_zero());
    }

    #[test]
    fn squarefree_part_is_squarefree_divisor(a in nonzero_uni(), b in nonzero_uni()) {
        let f = &(&a * &a) * &b;
        let s = squarefree_part(&f).unwrap();
        prop_assert!(f.rem(&s).unwrap().is_zero());
        if s.degree().unwrap_or(0) >= 1 {
            let m = MultiPoly::from_uni(&s, vec!["x".into()]).unwrap();
            prop_assert!(!discriminant(&m, "x").unwrap().is_zero());
        }
    }

    #[test]
    fn multiplication_distributes(a in xyz_poly(), b in xyz_poly(), c in xyz_poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn buchberger_is_idempotent(a in xyz_poly(), b in xyz_poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let order = MonomialOrder::degrevlex(&["x", "y", "z"]);
        let g = buchberger(&[a.clone(), b.clone()], &order).unwrap();
        let again = buchberger(g.generators(), &order).unwrap();
        prop_assert_eq!(g.generators(), again.generators());
        prop_assert!(reduce(&a, &g).unwrap().is_zero());
        prop_assert!(reduce(&b, &g).unwrap().is_zero());
    }

    #[test]
    fn planted_points_are_recovered(pts in prop::collection::btree_set((-3i64..=3, -3i64..=3), 1..=3)) {
        // x ranges over the planted abscissae, y over the ordinates, and the
        // sum-of-squares factor pins each grid point to a planted one.
        let vars = ["x", "y"];
        let x = MultiPoly::var(Rationals, &vars, "x").unwrap();
        let y = MultiPoly::var(Rationals, &vars, "y").unwrap();
        let one = x.constant_like(int(1));
        let xs: std::collections::BTreeSet<i64> = pts.iter().map(|p| p.0).collect();
        let ys: std::collections::BTreeSet<i64> = pts.iter().map(|p| p.1).collect();
        let lin = |v: &MultiPoly<Rationals>, a: i64| v - &one.scale(&int(a));
        let fx = xs.iter().fold(one.clone(), |acc, &a| &acc * &lin(&x, a));
        let fy = ys.iter().fold(one.clone(), |acc, &b| &acc * &lin(&y, b));
        let fxy = pts.iter().fold(one.clone(), |acc, &(a, b)| {
            let (dx, dy) = (lin(&x, a), lin(&y, b));
            &acc * &(&(&dx * &dx) + &(&dy * &dy))
        });
        let system = vec![fx, fy, fxy];
        let sol = solve_rational(&system).unwrap();
        for p in &sol.points {
            for f in &system {
                prop_assert!(f.eval(p).is_zero());
            }
        }
        let got: std::collections::BTreeSet<(Rational, Rational)> =
            sol.points.iter().map(|p| (p[0].clone(), p[1].clone())).collect();
        let want: std::collections::BTreeSet<(Rational, Rational)> = pts.iter().map(|&(a, b)| (int(a), int(b))).collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn twists_compose(p in fp_uni(3), q in fp_uni(3), a in 0u32..=2, b in 0u32..=2) {
        let r = UniPoly::from_i64(PrimeField::new(3).unwrap(), "t", &[1]);
        let pt = FunctionFieldPoint::new(p, q, r).unwrap();
        let two_steps = solver::twist_solution(&solver::twist_solution(&pt, a).unwrap(), b).unwrap();
        prop_assert_eq!(two_steps, solver::twist_solution(&pt, a + b).unwrap());
    }

    #[test]
    fn common_factor_changes_nothing(c in nonzero_uni()) {
        let f = parse_rational("y^3 - x^4 + 6*t*x^3 - 11*t^2*x^2 + 6*t^3*x", &["x", "y", "t"]).unwrap();
        let c = UniPoly::new(Rationals, "t", c.coeffs().to_vec());
        let t = UniPoly::from_i64(Rationals, "t", &[0, 1]);
        let zero = UniPoly::zero(Rationals, "t");
        let one = UniPoly::one(Rationals, "t");
        let plain = FunctionFieldPoint::new(t.clone(), zero.clone(), one.clone()).unwrap();
        let scaled = FunctionFieldPoint::new(&t * &c, &zero * &c, &one * &c).unwrap();
        prop_assert_eq!(ff_height(&plain), ff_height(&scaled));
        prop_assert!(verify_ff_solution(&f, &scaled).unwrap());
        prop_assert_eq!(&plain, &scaled);
    }

    #[test]
    fn cubesum_solutions_are_swap_closed(m in -3000i64..3000) {
        prop_assume!(m != 0);
        let sols = solver::solve_cubesum_divisor(&BigInt::from(m)).unwrap();
        for p in &sols {
            let swapped = solver::IntegerPoint::new(p.y.clone(), p.x.clone());
            prop_assert!(sols.contains(&swapped));
        }
    }

    #[test]
    fn coordinate_bound_contract(m in -100_000i64..100_000) {
        prop_assume!(m != 0);
        let b = bounds::cubesum_coordinate_bound(&BigInt::from(m)).unwrap();
        let four_m = BigInt::from(4 * m.abs());
        prop_assert!(&b * &b * 3 <= four_m);
        prop_assert!(four_m < (&b + 1) * (&b + 1) * 3);
    }

    #[test]
    fn margins_agree_with_holds(c1 in -40i64..40, c2 in -40i64..40) {
        for c in geography::check_surface_geography(&BigInt::from(c1), &BigInt::from(c2)) {
            let expected = match c.relation {
                geography::Relation::AtMost => !c.margin.is_negative(),
                geography::Relation::Equal => c.margin.is_zero(),
            };
            prop_assert_eq!(c.holds, expected);
        }
    }

    #[test]
    fn noether_statements_agree(g in 2u64..6, gb in 0u64..4, w in -30i64..30, d in -30i64..30, l in -10i64..10) {
        let n = SurfaceNumbers::family(g, gb, int(w), int(d)).with_lambda(rat(w + d, 12));
        let n2 = SurfaceNumbers::family(g, gb, int(w), int(d)).with_lambda(int(l));
        for n in [n, n2] {
            let a = geography::check_noether_formula(&n).unwrap().holds;
            let b = geography::check_surface_noether(&n).unwrap().holds;
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn my_boundary(g in 2u64..6, gb in 0u64..4, d in 0i64..30) {
        let k = geography::fiber_base_product(g, gb);
        let omega = &k + int(3 * d);
        let n = SurfaceNumbers::family(g, gb, omega, int(d));
        prop_assert!(geography::check_my_family(&n).unwrap().margin.is_zero());
    }
}

#[test]
fn hard_precondition_removes_the_bound() {
    let none = Assumptions::default();
    let b = bounds::moriwaki(&PointData::section(int(0)), &int(12), &int(36), 0, &none);
    assert!(b.bound.is_none() && b.inapplicable_reason.is_some());
    let b = bounds::tan_plane(3, 5, 2, &Assumptions::all());
    assert!(b.bound.is_none());
}

#[test]
fn plane_bound_is_monotone() {
    let a = Assumptions::all();
    for d in 4..=8 {
        for s in 0..10 {
            for k in 0..10 {
                let here = bounds::tan_plane(d, s, k, &a).bound.unwrap();
                assert!(bounds::tan_plane(d, s + 1, k, &a).bound.unwrap() >= here);
                assert!(bounds::tan_plane(d, s, k + 1, &a).bound.unwrap() >= here);
            }
        }
    }
}

#[test]
fn general_bound_directions() {
    let a = Assumptions::all();
    let at = |dp: i64, s: u64, w: i64| bounds::tan_general(3, &PointData::section(int(0)).with_dp(dp), s, &int(w), &a).bound.unwrap();
    for dp in -2..4 {
        for s in 0..6 {
            for w in 0..6 {
                assert!(at(dp + 1, s, w) > at(dp, s, w));
                assert!(at(dp, s + 1, w) > at(dp, s, w));
                assert!(at(dp, s, w + 1) < at(dp, s, w));
            }
        }
    }
}

trait WithDp {
    fn with_dp(self, dp: i64) -> Self;
}

impl WithDp for PointData {
    fn with_dp(self, dp: i64) -> Self {
        PointData::new(self.height, int(dp), 1).unwrap()
    }
}

#[test]
fn genus_and_omega_grid() {
    for d in 4..=12 {
        assert!(fibration::generic_genus(d) >= 3);
    }
    for d in 1..=8u32 {
        for e in 0..=8u32 {
            let closed = BigInt::from(3 * e as i64 * (d as i64 - 1) * (d as i64 - 3));
            assert_eq!(fibration::omega_sq_bidegree(d, e), closed);
            if e > 0 {
                assert_eq!(closed.is_zero(), d == 1 || d == 3);
            }
        }
    }
}

#[test]
fn locus_translates_and_ignores_scaling() {
    let vars = ["x", "y", "t"];
    let f = parse_rational("y^2 - x*(x-1)*(x-t)", &vars).unwrap();
    let base = singular_fiber_locus(&f).unwrap();
    let base_roots = hbound_core::algebra::rational_roots(&base.finite_parameters).unwrap();
    for c in [int(1), int(-2), rat(1, 3)] {
        let shifted = f.substitute(2, &parse_rational(&format!("t + {c}"), &vars).unwrap());
        let loc = singular_fiber_locus(&shifted).unwrap();
        let mut roots = hbound_core::algebra::rational_roots(&loc.finite_parameters).unwrap();
        roots.sort();
        let mut expected: Vec<Rational> = base_roots.iter().map(|r| r - &c).collect();
        expected.sort();
        assert_eq!(roots, expected);
        assert_eq!(count_singular_fibers(&loc), count_singular_fibers(&base));
    }
    for k in [int(3), rat(-2, 7)] {
        assert_eq!(count_singular_fibers(&singular_fiber_locus(&f.scale(&k)).unwrap()), 3);
    }
}

#[test]
fn found_points_respect_height_and_plane_bound() {
    let vars = ["x", "y", "t"];
    for (text, n) in [("y^3 - x^4 + 6*t*x^3 - 11*t^2*x^2 + 6*t^3*x", 1), ("(t^4+t)*y^3 - (t^3+1)*x^4 - t*x^3 + t^4", 1)] {
        let f = parse_rational(text, &vars).unwrap();
        let found = solver::search_ff_solutions(&f, n, SearchMode::Polynomial).unwrap();
        assert!(!found.points.is_empty());
        // k = 0 gives the smallest value of a bound that is nondecreasing in k.
        let inv = fibration::extract_invariants(&f, fibration::Overrides { k: Some(0), s: None }).unwrap();
        let bound = bounds::tan_plane_bound(&inv, &Assumptions::all()).bound.unwrap();
        for p in &found.points {
            assert!(verify_ff_solution(&f, p).unwrap());
            let h = ff_height(p);
            assert!(h <= n as u64);
            assert!(Rational::from_integer(BigInt::from(h)) <= bound, "{text}: h = {h} > {bound}");
        }
    }
}
