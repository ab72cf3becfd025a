//! Equalities and inequalities between the numerical invariants of a
//! fibered surface `X → B` and of the surface itself.
//!
//! Family numbers: fiber genus `g`, base genus `g_B`, `ω² = ω²_{X/B}`, `δ`,
//! `λ = deg f_*ω_{X/B}`. Surface numbers: `c₁²`, `c₂`. With
//! `K = (2g - 2)(2g_B - 2)` one has `c₁² = ω² + 2K` and `c₂ = K + δ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::algebra::{int, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurfaceNumbers {
    pub g: Option<u64>,
    pub g_b: Option<u64>,
    pub omega_sq: Option<Rational>,
    pub delta: Option<Rational>,
    pub lambda: Option<Rational>,
    pub s: Option<u64>,
    pub c1_sq: Option<Rational>,
    pub c2: Option<Rational>,
}

fn need<T: Clone>(v: &Option<T>, name: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::InvalidInput(format!("missing {name}")))
}

fn r(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(2g - 2)(2g_B - 2)`, i.e. `ω · f*K_B`.
pub fn fiber_base_product(g: u64, g_b: u64) -> Rational {
    (r(2 * g) - int(2)) * (r(2 * g_b) - int(2))
}

impl SurfaceNumbers {
    pub fn family(g: u64, g_b: u64, omega_sq: Rational, delta: Rational) -> Self {
        SurfaceNumbers { g: Some(g), g_b: Some(g_b), omega_sq: Some(omega_sq), delta: Some(delta), ..Default::default() }
    }

    pub fn with_lambda(mut self, lambda: Rational) -> Self {
        self.lambda = Some(lambda);
        self
    }
}

/// Fills in `c₁² = ω² + 2K` and `c₂ = K + δ`.
pub fn surface_from_family(n: &SurfaceNumbers) -> Result<SurfaceNumbers> {
    let k = fiber_base_product(need(&n.g, "g")?, need(&n.g_b, "g_B")?);
    let omega_sq = need(&n.omega_sq, "omega_sq")?;
    let delta = need(&n.delta, "delta")?;
    Ok(SurfaceNumbers { c1_sq: Some(omega_sq + &k * int(2)), c2: Some(k + delta), ..n.clone() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    NoetherFormula,
    SurfaceNoether,
    Chx,
    MyFamily,
    NoetherInequalityFamily,
    Ehm,
    MiyaokaYau,
    Mod12,
    C1SqPositive,
    C2Positive,
    NoetherLine,
}

impl Rule {
    pub fn id(&self) -> &'static str {
        match self {
            Rule::NoetherFormula => "noether-formula",
            Rule::SurfaceNoether => "surface-noether",
            Rule::Chx => "chx",
            Rule::MyFamily => "my-family",
            Rule::NoetherInequalityFamily => "noether-ineq-family",
            Rule::Ehm => "ehm",
            Rule::MiyaokaYau => "my",
            Rule::Mod12 => "mod-12",
            Rule::C1SqPositive => "c1sq-positive",
            Rule::C2Positive => "c2-positive",
            Rule::NoetherLine => "noether-line",
        }
    }

    /// Rules reported by [`check_surface_geography`], in order.
    pub const SURFACE: [Rule; 5] = [Rule::MiyaokaYau, Rule::Mod12, Rule::C1SqPositive, Rule::C2Positive, Rule::NoetherLine];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `lhs ≤ rhs`
    AtMost,
    /// `lhs = rhs`
    Equal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Precondition {
    pub name: String,
    pub satisfied: bool,
}

/// `holds` records the comparison only; `applicable` records whether every
/// precondition of the rule is met.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub rule: Rule,
    pub relation: Relation,
    pub holds: bool,
    pub lhs: Rational,
    pub rhs: Rational,
    /// `rhs - lhs`.
    pub margin: Rational,
    pub applicable: bool,
    pub preconditions: Vec<Precondition>,
    pub caveats: Vec<String>,
}

impl CheckResult {
    fn new(rule: Rule, relation: Relation, lhs: Rational, rhs: Rational, preconditions: Vec<(&str, bool)>) -> Self {
        let margin = &rhs - &lhs;
        let holds = match relation {
            Relation::AtMost => !margin.is_negative(),
            Relation::Equal => margin.is_zero(),
        };
        let preconditions: Vec<Precondition> =
            preconditions.into_iter().map(|(n, ok)| Precondition { name: n.to_string(), satisfied: ok }).collect();
        let applicable = preconditions.iter().all(|p| p.satisfied);
        CheckResult { rule, relation, holds, lhs, rhs, margin, applicable, preconditions, caveats: Vec::new() }
    }

    fn caveat(mut self, c: &str) -> Self {
        self.caveats.push(c.to_string());
        self
    }
}

/// `12λ = ω² + δ`.
pub fn check_noether_formula(n: &SurfaceNumbers) -> Result<CheckResult> {
    let lhs = need(&n.omega_sq, "omega_sq")? + need(&n.delta, "delta")?;
    let rhs = need(&n.lambda, "lambda")? * int(12);
    Ok(CheckResult::new(Rule::NoetherFormula, Relation::Equal, lhs, rhs, vec![]))
}

/// `c₁² + c₂ = 12χ` on the surface, with `χ = λ + (g - 1)(g_B - 1)`.
pub fn check_surface_noether(n: &SurfaceNumbers) -> Result<CheckResult> {
    let full = surface_from_family(n)?;
    let (g, g_b) = (need(&n.g, "g")?, need(&n.g_b, "g_B")?);
    let chi = need(&n.lambda, "lambda")? + (r(g) - int(1)) * (r(g_b) - int(1));
    let lhs = full.c1_sq.expect("filled") + full.c2.expect("filled");
    Ok(CheckResult::new(Rule::SurfaceNoether, Relation::Equal, lhs, chi * int(12), vec![]))
}

/// `(1 - 1/g) δ ≤ (2 + 1/g) ω²` for stable families.
pub fn check_chx(n: &SurfaceNumbers, stable_asserted: bool) -> Result<CheckResult> {
    let g = need(&n.g, "g")?;
    if g == 0 {
        return Err(Error::Precondition("the inequality needs g >= 1 (division by g)".into()));
    }
    let inv_g = Rational::new(BigInt::from(1), BigInt::from(g));
    let lhs = (int(1) - &inv_g) * need(&n.delta, "delta")?;
    let rhs = (int(2) + &inv_g) * need(&n.omega_sq, "omega_sq")?;
    Ok(CheckResult::new(
        Rule::Chx,
        Relation::AtMost,
        lhs,
        rhs,
        vec![("g >= 2", g >= 2), ("stable (asserted)", stable_asserted)],
    ))
}

fn general_type_context(g: u64, g_b: u64) -> Vec<(&'static str, bool)> {
    vec![("g >= 2", g >= 2), ("g_B >= 2", g_b >= 2)]
}

/// `ω² ≤ K + 3δ`: the Miyaoka-Yau inequality in family numbers.
pub fn check_my_family(n: &SurfaceNumbers) -> Result<CheckResult> {
    let (g, g_b) = (need(&n.g, "g")?, need(&n.g_b, "g_B")?);
    let lhs = need(&n.omega_sq, "omega_sq")?;
    let rhs = fiber_base_product(g, g_b) + need(&n.delta, "delta")? * int(3);
    Ok(CheckResult::new(Rule::MyFamily, Relation::AtMost, lhs, rhs, general_type_context(g, g_b)))
}

/// `δ ≤ 5ω² + 9K + 36`: Noether's inequality in family numbers.
pub fn check_noether_inequality_family(n: &SurfaceNumbers) -> Result<CheckResult> {
    let (g, g_b) = (need(&n.g, "g")?, need(&n.g_b, "g_B")?);
    let lhs = need(&n.delta, "delta")?;
    let rhs = need(&n.omega_sq, "omega_sq")? * int(5) + fiber_base_product(g, g_b) * int(9) + int(36);
    Ok(CheckResult::new(Rule::NoetherInequalityFamily, Relation::AtMost, lhs, rhs, general_type_context(g, g_b)))
}

/// `δ ≤ (1 + o) ω²` with the `o(1/g)` term supplied as a number.
pub fn check_ehm(n: &SurfaceNumbers, o_term: &Rational) -> Result<CheckResult> {
    let lhs = need(&n.delta, "delta")?;
    let rhs = (int(1) + o_term) * need(&n.omega_sq, "omega_sq")?;
    Ok(CheckResult::new(Rule::Ehm, Relation::AtMost, lhs, rhs, vec![("generic family (asserted)", true)])
        .caveat("generic-family hypothesis asserted; o(1/g) user-supplied"))
}

/// Miyaoka-Yau, `c₁² + c₂ ≡ 0 (mod 12)`, `c₁² > 0`, `c₂ > 0`, and
/// Noether's line `5c₁² - c₂ + 36 ≥ 0` (`+ 30` when `c₁²` is odd).
pub fn check_surface_geography(c1_sq: &BigInt, c2: &BigInt) -> Vec<CheckResult> {
    let q = |n: &BigInt| Rational::from_integer(n.clone());
    let (a, b) = (q(c1_sq), q(c2));
    let my = CheckResult::new(Rule::MiyaokaYau, Relation::AtMost, a.clone(), &b * int(3), vec![]);
    let residue = (c1_sq + c2).mod_floor(&BigInt::from(12));
    let mod12 = CheckResult::new(Rule::Mod12, Relation::Equal, q(&residue), int(0), vec![]);
    // strict positivity over the integers: 1 ≤ c
    let pos1 = CheckResult::new(Rule::C1SqPositive, Relation::AtMost, int(1), a.clone(), vec![]);
    let pos2 = CheckResult::new(Rule::C2Positive, Relation::AtMost, int(1), b.clone(), vec![]);
    let constant = if c1_sq.is_even() { 36 } else { 30 };
    let noether = CheckResult::new(Rule::NoetherLine, Relation::AtMost, b, a * int(5) + int(constant), vec![]);
    vec![my, mod12, pos1, pos2, noether]
}

/// Invariants of the log surface attached to a section `P`, and the two
/// forms of the resulting height bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogMyRecord {
    /// `(2g - 1)(2g_B - 2 + s)`.
    pub c2_log: Rational,
    /// `ω² + ⟨ω·P⟩ + 2 c2_log`.
    pub c1_sq_log: Rational,
    /// Right side of `ω² + ⟨ω·P⟩ ≤ c2_log`.
    pub tan_bound_rhs: Rational,
    /// `c₁² ≤ 3c₂` for the log surface.
    pub log_my_holds: bool,
    /// `ω² + ⟨ω·P⟩ ≤ c2_log`.
    pub height_inequality_holds: bool,
    /// `c1_sq_log - 3 c2_log = ω² + ⟨ω·P⟩ - c2_log`, checked exactly.
    pub identity_holds: bool,
    /// Bound on `⟨ω·P⟩` from the log surface: `c2_log - ω²` (coefficient 1 on `s`).
    pub height_bound_log_form: Rational,
    /// The same bound with `d(P) = 2g_B - 2` and coefficient 3 on `s`:
    /// `(2g - 1)(2g_B - 2 + 3s) - ω²`.
    pub height_bound_3s_form: Rational,
    /// `height_bound_3s_form - height_bound_log_form = 2s(2g - 1)`.
    pub gap: Rational,
}

pub fn log_my_identity(g: u64, g_b: u64, s: u64, omega_sq: &Rational, omega_dot_p: &Rational) -> Result<LogMyRecord> {
    if g < 2 {
        return Err(Error::Precondition(format!("needs g >= 2, got g = {g}")));
    }
    let two_g_minus_1 = r(2 * g - 1);
    let base = r(2 * g_b) - int(2);
    let c2_log = &two_g_minus_1 * (&base + r(s));
    let c1_sq_log = omega_sq + omega_dot_p + &c2_log * int(2);
    let lhs = omega_sq + omega_dot_p;
    let identity_holds = &c1_sq_log - &c2_log * int(3) == &lhs - &c2_log;
    let log_form = &c2_log - omega_sq;
    let three_s_form = &two_g_minus_1 * (&base + r(3 * s)) - omega_sq;
    Ok(LogMyRecord {
        log_my_holds: c1_sq_log <= &c2_log * int(3),
        height_inequality_holds: lhs <= c2_log,
        identity_holds,
        gap: &three_s_form - &log_form,
        height_bound_log_form: log_form,
        height_bound_3s_form: three_s_form,
        tan_bound_rhs: c2_log.clone(),
        c2_log,
        c1_sq_log,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionRecord {
    /// `P² = -⟨ω·P⟩`.
    pub p_sq: Rational,
    /// `ω(P)² - ω² = 2⟨ω·P⟩ + P² = ⟨ω·P⟩`.
    pub omega_p_sq_contribution: Rational,
}

pub fn adjunction_height(omega_dot_p: &Rational) -> AdjunctionRecord {
    let p_sq = -omega_dot_p.clone();
    let contribution = omega_dot_p * int(2) + &p_sq;
    AdjunctionRecord { p_sq, omega_p_sq_contribution: contribution }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionRow {
    pub c1_sq: BigInt,
    pub c2: BigInt,
    pub results: Vec<(Rule, bool)>,
}

/// Evaluates [`check_surface_geography`] on the integer grid
/// `c1_range × c2_range` (inclusive bounds; empty when `lo > hi`).
pub fn geography_region(c1_range: (i64, i64), c2_range: (i64, i64)) -> Vec<RegionRow> {
    let mut rows = Vec::new();
    for c1 in c1_range.0..=c1_range.1 {
        for c2 in c2_range.0..=c2_range.1 {
            let (a, b) = (BigInt::from(c1), BigInt::from(c2));
            let results = check_surface_geography(&a, &b).into_iter().map(|c| (c.rule, c.holds)).collect();
            rows.push(RegionRow { c1_sq: a, c2: b, results });
        }
    }
    rows
}
