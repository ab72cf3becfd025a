use num_bigint::BigInt;
use num_traits::Zero;

use hbound_core::algebra::{int, rational_roots, Field, MultiPoly, PrimeField, Rational, Rationals, UniPoly};
use hbound_core::bounds::{self, Assumptions, BoundReport, PointData};
use hbound_core::fibration::{self, Overrides};
use hbound_core::geography::{self, CheckResult, Relation, Rule, SurfaceNumbers};
use hbound_core::groebner::GroebnerConfig;
use hbound_core::parse::parse_poly;
use hbound_core::solver::{self, FunctionFieldPoint, SearchMode};

use crate::report::{Report, Value};
use crate::{BoundCmd, CheckCmd, Cli, CliError, Cmd, FamilyNumbers, MethodArg, ModeArg, PolyArgs};

type CmdResult = std::result::Result<(), CliError>;

const FLAG_NAMES: [&str; 5] = ["minimal", "ks-full-rank", "semistable", "non-isotrivial", "stable"];

pub(crate) fn command_name(cmd: &Cmd) -> String {
    match cmd {
        Cmd::SolveInteger { .. } => "solve-integer".into(),
        Cmd::Taxicab { .. } => "taxicab".into(),
        Cmd::Height { .. } => "height".into(),
        Cmd::Invariants { .. } => "invariants".into(),
        Cmd::Bound { which } => format!(
            "bound {}",
            match which {
                BoundCmd::TanPlane { .. } => "tan-plane",
                BoundCmd::TanGeneral { .. } => "tan-general",
                BoundCmd::Moriwaki { .. } => "moriwaki",
                BoundCmd::Vojta { .. } => "vojta",
                BoundCmd::CharP { .. } => "char-p",
                BoundCmd::Inseparable { .. } => "inseparable",
            }
        ),
        Cmd::Search { .. } => "search".into(),
        Cmd::Check { which } => format!(
            "check {}",
            match which {
                CheckCmd::Noether { .. } => "noether",
                CheckCmd::Chx { .. } => "chx",
                CheckCmd::My { .. } => "my",
                CheckCmd::NoetherIneq { .. } => "noether-ineq",
                CheckCmd::Geography { .. } => "geography",
                CheckCmd::Ehm { .. } => "ehm",
                CheckCmd::LogMy { .. } => "log-my",
            }
        ),
        Cmd::GeographyRegion { .. } => "geography-region".into(),
        Cmd::Twist { .. } => "twist".into(),
    }
}

struct Flags {
    assumptions: Assumptions,
    stable: bool,
}

fn flags(cli: &Cli) -> std::result::Result<Flags, CliError> {
    let mut f = Flags { assumptions: Assumptions::default(), stable: false };
    for raw in &cli.assert_flags {
        let name = raw.trim();
        match name {
            "" => {}
            "minimal" | "relatively-minimal" => f.assumptions.relatively_minimal = true,
            "ks-full-rank" => f.assumptions.ks_full_rank = true,
            "semistable" => f.assumptions.semistable = true,
            "non-isotrivial" => f.assumptions.non_isotrivial = true,
            "stable" => f.stable = true,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown assumption flag `{other}` (expected one of {})",
                    FLAG_NAMES.join(", ")
                )))
            }
        }
    }
    Ok(f)
}

fn role_names(cli: &Cli) -> std::result::Result<Vec<String>, CliError> {
    let names: Vec<String> = cli.vars.split(',').map(|s| s.trim().to_string()).collect();
    if names.len() != 3 || names.iter().any(String::is_empty) {
        return Err(CliError::Usage(format!("--vars needs three names for x, y, t; got `{}`", cli.vars)));
    }
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != 3 {
        return Err(CliError::Usage("--vars names must be distinct".into()));
    }
    Ok(names)
}

fn poly_text(args: &PolyArgs) -> std::result::Result<Option<String>, CliError> {
    match (&args.poly, &args.file) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either --poly or --file, not both".into())),
        (Some(p), None) => Ok(Some(p.clone())),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map(|s| Some(s.trim().to_string()))
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display()))),
        (None, None) => Ok(None),
    }
}

fn require_poly_text(args: &PolyArgs) -> std::result::Result<String, CliError> {
    poly_text(args)?.ok_or_else(|| CliError::Usage("a polynomial is required (--poly or --file)".into()))
}

/// Parses in the user's variable names, then renames them to `x, y, t`.
fn family_poly<K: Field>(cli: &Cli, text: &str, field: K) -> std::result::Result<MultiPoly<K>, CliError> {
    let names = role_names(cli)?;
    let parsed = parse_poly(text, &names, field.clone())?.poly;
    let terms = parsed.terms().map(|(e, c)| (e.clone(), c.clone())).collect::<Vec<_>>();
    Ok(MultiPoly::from_terms(field, ["x", "y", "t"].iter().map(|s| s.to_string()).collect(), terms))
}

fn uni_in_t<K: Field>(text: &str, field: K) -> std::result::Result<UniPoly<K>, CliError> {
    let p = parse_poly(text, &["t".to_string()], field)?.poly;
    Ok(p.to_uni("t")?)
}

fn q(v: &Rational) -> Value {
    Value::num(v)
}

fn opt_q(v: &Option<Rational>) -> Value {
    v.as_ref().map(q).unwrap_or(Value::Null)
}

pub(crate) fn dispatch(cli: &Cli, report: &mut Report) -> CmdResult {
    match &cli.cmd {
        Cmd::SolveInteger { m, method } => solve_integer(report, m, *method),
        Cmd::Taxicab { ways } => taxicab(report, *ways),
        Cmd::Height { x, y, m } => height(report, x, y, m.as_ref()),
        Cmd::Invariants { poly, k, s } => invariants(cli, report, poly, Overrides { k: *k, s: *s }),
        Cmd::Bound { which } => bound(cli, report, which),
        Cmd::Search { poly, n, mode, max_reductions } => search(cli, report, poly, *n, *mode, *max_reductions),
        Cmd::Check { which } => check(cli, report, which),
        Cmd::GeographyRegion { c1_min, c1_max, c2_min, c2_max } => {
            region(report, (*c1_min, *c1_max), (*c2_min, *c2_max))
        }
        Cmd::Twist { poly, p, n, px, py, pr } => twist(cli, report, poly, *p, *n, px, py, pr),
    }
}

fn points_value(pts: &[solver::IntegerPoint]) -> Value {
    Value::List(pts.iter().map(|p| Value::record(vec![("x", Value::num(&p.x)), ("y", Value::num(&p.y))])).collect())
}

fn solve_integer(report: &mut Report, m: &BigInt, method: MethodArg) -> CmdResult {
    report.input("m", Value::num(m));
    let method_name = match method {
        MethodArg::Divisor => "divisor",
        MethodArg::Bruteforce => "bruteforce",
        MethodArg::Both => "both",
    };
    report.input("method", Value::text(method_name));
    let bound = bounds::cubesum_coordinate_bound(m)?;
    report.result("coordinate_bound", Value::num(&bound));
    let pts = match method {
        MethodArg::Divisor => solver::solve_cubesum_divisor(m)?,
        MethodArg::Bruteforce => solver::solve_cubesum_bruteforce(m)?,
        MethodArg::Both => {
            let a = solver::solve_cubesum_divisor(m)?;
            let b = solver::solve_cubesum_bruteforce(m)?;
            report.result("methods_agree", Value::Bool(a == b));
            a
        }
    };
    report.result("count", Value::num(pts.len()));
    report.result("solutions", points_value(&pts));
    Ok(())
}

fn taxicab(report: &mut Report, ways: u32) -> CmdResult {
    report.input("ways", Value::num(ways));
    let n = solver::taxicab_smallest(ways)?;
    let m = n.clone();
    report.result("n", Value::num(&n));
    let pts: Vec<solver::IntegerPoint> =
        solver::solve_cubesum_divisor(&m)?.into_iter().filter(|p| p.x > BigInt::zero() && p.x <= p.y).collect();
    report.result("representations", points_value(&pts));
    report.caveat("representations use positive cubes with x <= y");
    Ok(())
}

fn height(report: &mut Report, x: &Rational, y: &Rational, m: Option<&BigInt>) -> CmdResult {
    report.input("x", q(x)).input("y", q(y));
    report.result("height", Value::num(solver::nf_height(x, y)));
    if let Some(m) = m {
        report.input("m", Value::num(m));
        report.result("on_curve", Value::Bool(solver::on_cubesum(x, y, m)));
    }
    Ok(())
}

fn invariants(cli: &Cli, report: &mut Report, poly: &PolyArgs, overrides: Overrides) -> CmdResult {
    let text = require_poly_text(poly)?;
    report.input("poly", Value::text(&text));
    let f = family_poly(cli, &text, Rationals)?;
    // Without a usable k the other invariants are still worth reporting.
    let (inv, k_failure) = match fibration::extract_invariants(&f, overrides) {
        Err(hbound_core::Error::Unsupported(m)) if overrides.k.is_none() => {
            (fibration::extract_invariants(&f, Overrides { k: Some(0), ..overrides })?, Some(m))
        }
        other => (other?, None),
    };
    write_invariants(report, &inv, k_failure)?;
    Ok(())
}

fn write_invariants(report: &mut Report, inv: &fibration::FamilyInvariants, k_failure: Option<String>) -> CmdResult {
    report.result("d", Value::num(inv.d));
    report.result("e", Value::num(inv.e));
    report.result("g", Value::num(inv.g));
    report.result("s", Value::num(inv.s));
    report.result("s_source", Value::text(inv.s_source.as_str()));
    report.result("s_finite", inv.s_finite.map(Value::num).unwrap_or(Value::Null));
    if let Some(locus) = &inv.locus {
        report.result("discriminant_factor", Value::text(&locus.finite_parameters));
        let roots = rational_roots(&locus.finite_parameters)?;
        report.result("rational_singular_parameters", Value::List(roots.iter().map(q).collect()));
        report.result("infinity_singular", Value::Bool(locus.infinity_is_singular));
    }
    match &k_failure {
        None => {
            report.result("k", Value::num(inv.k));
            report.result("k_source", Value::text(inv.k_source.as_str()));
        }
        Some(m) => {
            report.result("k", Value::Null);
            report.result("k_source", Value::text("unavailable"));
            report.caveat(format!("k not computed ({m}); pass --k"));
        }
    }
    report.result("omega_sq", opt_q(&inv.omega_sq));
    report.result("usable_for_plane_bound", Value::Bool(inv.usable_for_plane_bound()));
    report.result("genus_at_least_two", Value::Bool(inv.genus_at_least_two()));
    report.caveat("g is the genus of a smooth plane curve of degree d; the generic fiber is assumed smooth");
    report.caveat("s and k count the fiber over t = ∞ when it is singular");
    if inv.omega_sq.is_some() {
        report.caveat("omega_sq = 3e(d-1)(d-3) assumes the closure in P² × P¹ is smooth");
    }
    Ok(())
}

fn write_bound(report: &mut Report, b: &BoundReport, h: &Option<Rational>) {
    report.result("kind", Value::text(b.kind.id()));
    for (k, v) in &b.inputs {
        report.input(k, Value::num(v));
    }
    report.result("applicable", Value::Bool(b.is_applicable()));
    report.result("bound", opt_q(&b.bound));
    report.result(
        "inapplicable_reason",
        b.inapplicable_reason.as_ref().map(Value::text).unwrap_or(Value::Null),
    );
    if let Some(h) = h {
        report.input("h", q(h));
        report.result("within_bound", b.bound.as_ref().map(|bd| Value::Bool(h <= bd)).unwrap_or(Value::Null));
    }
    for a in &b.assumptions {
        report.assumptions.push((a.name.to_string(), a.asserted));
    }
    for c in &b.caveats {
        report.caveat(c);
    }
}

fn point(h: &Option<Rational>, dp: &Rational) -> std::result::Result<PointData, CliError> {
    Ok(PointData::new(h.clone().unwrap_or_else(|| int(0)), dp.clone(), 1)?)
}

fn bound(cli: &Cli, report: &mut Report, which: &BoundCmd) -> CmdResult {
    let fl = flags(cli)?;
    let a = &fl.assumptions;
    match which {
        BoundCmd::TanPlane { d, s, k, poly, point: pt } => {
            let b = match poly_text(poly)? {
                Some(text) => {
                    if d.is_some() {
                        return Err(CliError::Usage("--d is read from the polynomial; drop it or the polynomial".into()));
                    }
                    report.input("poly", Value::text(&text));
                    let f = family_poly(cli, &text, Rationals)?;
                    let inv = fibration::extract_invariants(&f, Overrides { k: *k, s: *s })?;
                    report.result("g", Value::num(inv.g));
                    report.result("s_source", Value::text(inv.s_source.as_str()));
                    bounds::tan_plane_bound(&inv, a)
                }
                None => {
                    let missing: Vec<&str> = [("--d", d.is_none()), ("--s", s.is_none()), ("--k", k.is_none())]
                        .iter()
                        .filter(|(_, m)| *m)
                        .map(|(n, _)| *n)
                        .collect();
                    if !missing.is_empty() {
                        return Err(CliError::Usage(format!(
                            "missing {} (or give a polynomial)",
                            missing.join(", ")
                        )));
                    }
                    bounds::tan_plane(d.unwrap(), s.unwrap(), k.unwrap(), a)
                }
            };
            write_bound(report, &b, &pt.h);
            let sd = b.bound.as_ref().and_then(bounds::search_degree);
            report.result("search_degree", sd.map(Value::num).unwrap_or(Value::Null));
        }
        BoundCmd::TanGeneral { g, dp, s, omega2, point: pt } => {
            let b = bounds::tan_general(*g, &point(&pt.h, dp)?, *s, omega2, a);
            write_bound(report, &b, &pt.h);
        }
        BoundCmd::Moriwaki { dp, c1sq, c2, gb, point: pt } => {
            let b = bounds::moriwaki(&point(&pt.h, dp)?, c1sq, c2, *gb, a);
            write_bound(report, &b, &pt.h);
        }
        BoundCmd::Vojta { dp, epsilon, constant, point: pt } => {
            let b = bounds::vojta(&point(&pt.h, dp)?, epsilon, constant)?;
            write_bound(report, &b, &pt.h);
        }
        BoundCmd::CharP { dp, g, p, e, point: pt } => {
            let b = bounds::char_p(&point(&pt.h, dp)?, *g, *p, *e, a)?;
            write_bound(report, &b, &pt.h);
        }
        BoundCmd::Inseparable { gb, s, point: pt } => {
            let b = bounds::inseparable(*gb, *s, a);
            write_bound(report, &b, &pt.h);
        }
    }
    Ok(())
}

fn ff_point_value<K: Field>(pt: &FunctionFieldPoint<K>) -> Value {
    Value::record(vec![
        ("p", Value::text(pt.p())),
        ("q", Value::text(pt.q())),
        ("r", Value::text(pt.r())),
        ("height", Value::num(solver::ff_height(pt))),
    ])
}

fn search(cli: &Cli, report: &mut Report, poly: &PolyArgs, n: u32, mode: ModeArg, max: Option<usize>) -> CmdResult {
    let text = require_poly_text(poly)?;
    report.input("poly", Value::text(&text));
    report.input("n", Value::num(n));
    let (mode, name) = match mode {
        ModeArg::Polynomial => (SearchMode::Polynomial, "polynomial"),
        ModeArg::Rational => (SearchMode::Rational, "rational"),
    };
    report.input("mode", Value::text(name));
    let mut config = GroebnerConfig::default();
    if let Some(m) = max {
        config.max_reductions = m;
        report.input("max_reductions", Value::num(m));
    }
    let f = family_poly(cli, &text, Rationals)?;
    let found = solver::search_ff_solutions_with(&f, n, mode, config)?;
    report.result("count", Value::num(found.points.len()));
    report.result("points", Value::List(found.points.iter().map(ff_point_value).collect()));
    report.result("systems_solved", Value::num(found.systems_solved));
    report.result("unresolved_branches", Value::num(found.unresolved_branches));
    report.caveat("points are x = p/r, y = q/r with rational coefficients; each was verified by substitution");
    if found.unresolved_branches > 0 {
        report.caveat("some coefficient systems had irrational solutions, which are not listed");
    }
    Ok(())
}

fn family_numbers(report: &mut Report, n: &FamilyNumbers, need: &[&str]) -> std::result::Result<SurfaceNumbers, CliError> {
    let present = [
        ("g", n.g.is_some()),
        ("gb", n.gb.is_some()),
        ("omega2", n.omega2.is_some()),
        ("delta", n.delta.is_some()),
        ("lambda", n.lambda.is_some()),
    ];
    let missing: Vec<String> =
        need.iter().filter(|k| present.iter().any(|(n, p)| n == *k && !p)).map(|k| format!("--{k}")).collect();
    if !missing.is_empty() {
        return Err(CliError::Usage(format!("missing {}", missing.join(", "))));
    }
    if let Some(g) = n.g {
        report.input("g", Value::num(g));
    }
    if let Some(g) = n.gb {
        report.input("g_B", Value::num(g));
    }
    if let Some(v) = &n.omega2 {
        report.input("omega_sq", q(v));
    }
    if let Some(v) = &n.delta {
        report.input("delta", q(v));
    }
    if let Some(v) = &n.lambda {
        report.input("lambda", q(v));
    }
    Ok(SurfaceNumbers {
        g: n.g,
        g_b: n.gb,
        omega_sq: n.omega2.clone(),
        delta: n.delta.clone(),
        lambda: n.lambda.clone(),
        ..Default::default()
    })
}

fn check_value(c: &CheckResult) -> Value {
    Value::record(vec![
        ("rule", Value::text(c.rule.id())),
        (
            "relation",
            Value::text(match c.relation {
                Relation::AtMost => "lhs <= rhs",
                Relation::Equal => "lhs = rhs",
            }),
        ),
        ("holds", Value::Bool(c.holds)),
        ("lhs", q(&c.lhs)),
        ("rhs", q(&c.rhs)),
        ("margin", q(&c.margin)),
        ("applicable", Value::Bool(c.applicable)),
        (
            "preconditions",
            Value::Record(c.preconditions.iter().map(|p| (p.name.clone(), Value::Bool(p.satisfied))).collect()),
        ),
    ])
}

fn write_checks(report: &mut Report, checks: &[CheckResult]) {
    report.result("all_hold", Value::Bool(checks.iter().all(|c| c.holds)));
    report.result("checks", Value::List(checks.iter().map(check_value).collect()));
    for c in checks {
        for cv in &c.caveats {
            report.caveat(format!("{}: {cv}", c.rule.id()));
        }
    }
}

fn check(cli: &Cli, report: &mut Report, which: &CheckCmd) -> CmdResult {
    let fl = flags(cli)?;
    let checks = match which {
        CheckCmd::Noether { n } => {
            let nums = family_numbers(report, n, &["omega2", "delta", "lambda"])?;
            let mut v = vec![geography::check_noether_formula(&nums)?];
            if nums.g.is_some() && nums.g_b.is_some() {
                v.push(geography::check_surface_noether(&nums)?);
            }
            v
        }
        CheckCmd::Chx { n } => {
            let nums = family_numbers(report, n, &["g", "omega2", "delta"])?;
            report.assumptions.push(("stable".into(), fl.stable));
            vec![geography::check_chx(&nums, fl.stable)?]
        }
        CheckCmd::My { n } => {
            let nums = family_numbers(report, n, &["g", "gb", "omega2", "delta"])?;
            vec![geography::check_my_family(&nums)?]
        }
        CheckCmd::NoetherIneq { n } => {
            let nums = family_numbers(report, n, &["g", "gb", "omega2", "delta"])?;
            vec![geography::check_noether_inequality_family(&nums)?]
        }
        CheckCmd::Ehm { n, o_term } => {
            let nums = family_numbers(report, n, &["omega2", "delta"])?;
            report.input("o_term", q(o_term));
            vec![geography::check_ehm(&nums, o_term)?]
        }
        CheckCmd::Geography { c1sq, c2 } => {
            report.input("c1_sq", Value::num(c1sq)).input("c2", Value::num(c2));
            geography::check_surface_geography(c1sq, c2)
        }
        CheckCmd::LogMy { g, gb, s, omega2, omega_p } => {
            report
                .input("g", Value::num(g))
                .input("g_B", Value::num(gb))
                .input("s", Value::num(s))
                .input("omega_sq", q(omega2))
                .input("omega_dot_p", q(omega_p));
            let r = geography::log_my_identity(*g, *gb, *s, omega2, omega_p)?;
            report.result("c2_log", q(&r.c2_log));
            report.result("c1_sq_log", q(&r.c1_sq_log));
            report.result("tan_bound_rhs", q(&r.tan_bound_rhs));
            report.result("log_my_holds", Value::Bool(r.log_my_holds));
            report.result("height_inequality_holds", Value::Bool(r.height_inequality_holds));
            report.result("identity_holds", Value::Bool(r.identity_holds));
            report.result("height_bound_log_form", q(&r.height_bound_log_form));
            report.result("height_bound_3s_form", q(&r.height_bound_3s_form));
            report.result("gap", q(&r.gap));
            let adj = geography::adjunction_height(omega_p);
            report.result("p_sq", q(&adj.p_sq));
            report.result("omega_p_sq_contribution", q(&adj.omega_p_sq_contribution));
            report.caveat("the log form has coefficient 1 on s; the 3s form has coefficient 3 and is weaker by gap");
            return Ok(());
        }
    };
    write_checks(report, &checks);
    Ok(())
}

fn region(report: &mut Report, c1: (i64, i64), c2: (i64, i64)) -> CmdResult {
    report.input("c1_sq_range", Value::text(format!("{}..={}", c1.0, c1.1)));
    report.input("c2_range", Value::text(format!("{}..={}", c2.0, c2.1)));
    let cells = (c1.1 - c1.0 + 1).max(0) as u128 * (c2.1 - c2.0 + 1).max(0) as u128;
    if cells > 4_000_000 {
        return Err(hbound_core::Error::ResourceLimit(format!("{cells} grid cells exceed the limit of 4000000")).into());
    }
    let rows = geography::geography_region(c1, c2);
    let mut csv = String::from("c1_sq,c2");
    for r in Rule::SURFACE {
        csv.push(',');
        csv.push_str(r.id());
    }
    csv.push('\n');
    let mut values = Vec::with_capacity(rows.len());
    for row in &rows {
        csv.push_str(&format!("{},{}", row.c1_sq, row.c2));
        let mut fields = vec![("c1_sq".to_string(), Value::num(&row.c1_sq)), ("c2".to_string(), Value::num(&row.c2))];
        for (rule, holds) in &row.results {
            csv.push_str(if *holds { ",1" } else { ",0" });
            fields.push((rule.id().to_string(), Value::Bool(*holds)));
        }
        csv.push('\n');
        values.push(Value::Record(fields));
    }
    report.result("rows", Value::List(values));
    report.raw_text = Some(csv);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn twist(
    cli: &Cli,
    report: &mut Report,
    poly: &PolyArgs,
    p: u64,
    n: u32,
    px: &Option<String>,
    py: &Option<String>,
    pr: &str,
) -> CmdResult {
    let text = require_poly_text(poly)?;
    report.input("poly", Value::text(&text)).input("p", Value::num(p)).input("n", Value::num(n));
    let field = PrimeField::new(p)?;
    let f = family_poly(cli, &text, field)?;
    let twisted = solver::frobenius_twist(&f, n)?;
    report.result("twisted_poly", Value::text(&twisted));
    match (px, py) {
        (None, None) => {}
        (Some(px), Some(py)) => {
            let pt = FunctionFieldPoint::new(
                uni_in_t(px, field)?,
                uni_in_t(py, field)?,
                uni_in_t(pr, field)?,
            )?;
            report.input("point", ff_point_value(&pt));
            let on_original = solver::verify_ff_solution(&f, &pt)?;
            let image = solver::twist_solution(&pt, n)?;
            let on_twisted = solver::verify_ff_solution(&twisted, &image)?;
            report.result("point_on_original", Value::Bool(on_original));
            report.result("twisted_point", ff_point_value(&image));
            report.result("twisted_point_on_twisted", Value::Bool(on_twisted));
            if !on_original {
                report.caveat("the point does not lie on the original curve, so its twist carries no information");
            }
        }
        _ => return Err(CliError::Usage("give both --px and --py, or neither".into())),
    }
    Ok(())
}
