//! Height bounds for points of a family, as exact rational calculators, and
//! the coordinate bound for `x³ + y³ = m` over the integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::{floor, int, is_prime, Rational};
use crate::error::{Error, Result};
use crate::fibration::FamilyInvariants;

/// Height and discriminant of a point, with the degree of the cover over
/// which it is defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointData {
    pub height: Rational,
    pub discriminant: Rational,
    pub cover_degree: u64,
}

impl PointData {
    pub fn new(height: Rational, discriminant: Rational, cover_degree: u64) -> Result<Self> {
        if cover_degree == 0 {
            return Err(Error::InvalidInput("cover degree must be at least 1".into()));
        }
        Ok(PointData { height, discriminant, cover_degree })
    }

    /// A section over `P¹`: discriminant `-2`, cover degree 1.
    pub fn section(height: Rational) -> Self {
        PointData { height, discriminant: int(-2), cover_degree: 1 }
    }

    /// `d(P) = (2 g_T - 2) / [T : B]`.
    pub fn discriminant_of_cover(genus_t: u64, cover_degree: u64) -> Result<Rational> {
        if cover_degree == 0 {
            return Err(Error::InvalidInput("cover degree must be at least 1".into()));
        }
        Ok(Rational::new(BigInt::from(2 * genus_t as i128 - 2), BigInt::from(cover_degree)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundKind {
    TanPlane,
    TanGeneral,
    Moriwaki,
    Vojta,
    CharP,
    Inseparable,
}

impl BoundKind {
    pub fn id(&self) -> &'static str {
        match self {
            BoundKind::TanPlane => "tan-plane",
            BoundKind::TanGeneral => "tan-general",
            BoundKind::Moriwaki => "moriwaki",
            BoundKind::Vojta => "vojta",
            BoundKind::CharP => "char-p",
            BoundKind::Inseparable => "inseparable",
        }
    }
}

/// Hypotheses a bound rests on. They are taken on trust and echoed in
/// reports.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Assumptions {
    pub relatively_minimal: bool,
    pub ks_full_rank: bool,
    pub semistable: bool,
    pub non_isotrivial: bool,
}

impl Assumptions {
    pub fn all() -> Self {
        Assumptions { relatively_minimal: true, ks_full_rank: true, semistable: true, non_isotrivial: true }
    }

    fn asserted(&self, name: &str) -> bool {
        match name {
            "relatively-minimal" => self.relatively_minimal,
            "ks-full-rank" => self.ks_full_rank,
            "semistable" => self.semistable,
            "non-isotrivial" => self.non_isotrivial,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssumptionStatus {
    pub name: &'static str,
    pub asserted: bool,
    /// A hard assumption must be asserted for a bound to be given.
    pub hard: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub inputs: Vec<(String, String)>,
    /// Absent exactly when a hard precondition fails.
    pub bound: Option<Rational>,
    pub inapplicable_reason: Option<String>,
    pub assumptions: Vec<AssumptionStatus>,
    pub caveats: Vec<String>,
}

impl BoundReport {
    fn new(kind: BoundKind, inputs: Vec<(&str, String)>, assumptions: &Assumptions, needed: &[(&'static str, bool)]) -> Self {
        let statuses: Vec<AssumptionStatus> = needed
            .iter()
            .map(|&(name, hard)| AssumptionStatus { name, asserted: assumptions.asserted(name), hard })
            .collect();
        let mut caveats = Vec::new();
        for s in statuses.iter().filter(|s| !s.asserted && !s.hard) {
            caveats.push(format!("conditional on the unasserted assumption {}", s.name));
        }
        let inapplicable_reason = statuses
            .iter()
            .find(|s| s.hard && !s.asserted)
            .map(|s| format!("requires the assumption {}", s.name));
        BoundReport {
            kind,
            inputs: inputs.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            bound: None,
            inapplicable_reason,
            assumptions: statuses,
            caveats,
        }
    }

    fn with_bound(mut self, value: Rational) -> Self {
        if self.inapplicable_reason.is_none() {
            self.bound = Some(value);
        }
        self
    }

    fn inapplicable(mut self, reason: String) -> Self {
        self.bound = None;
        self.inapplicable_reason.get_or_insert(reason);
        self
    }

    pub fn is_applicable(&self) -> bool {
        self.bound.is_some()
    }
}

fn r(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

const INFINITY_CAVEAT: &str = "s counts the fiber over t = ∞ when it is singular";

/// `h ≤ ((d² - 3d + 1)(s - 1) + k) / (d - 3)` for a plane family of degree
/// `d ≥ 4`.
pub fn tan_plane(d: u32, s: u64, k: u64, assumptions: &Assumptions) -> BoundReport {
    let report = BoundReport::new(
        BoundKind::TanPlane,
        vec![("d", d.to_string()), ("s", s.to_string()), ("k", k.to_string())],
        assumptions,
        &[("relatively-minimal", false), ("non-isotrivial", false)],
    );
    if d <= 3 {
        return report.inapplicable(format!("needs d >= 4, got d = {d}"));
    }
    let d = d as i64;
    let value = (int(d * d - 3 * d + 1) * (r(s) - int(1)) + r(k)) / int(d - 3);
    let mut report = report.with_bound(value);
    report.caveats.push(INFINITY_CAVEAT.into());
    report
}

pub fn tan_plane_bound(inv: &FamilyInvariants, assumptions: &Assumptions) -> BoundReport {
    let mut report = tan_plane(inv.d, inv.s, inv.k, assumptions);
    report.inputs.push(("k_source".into(), inv.k_source.as_str().into()));
    report
}

/// `h(P) ≤ (2g - 1)(d(P) + 3s) - ω²` for fibers of genus `g ≥ 2`.
pub fn tan_general(g: u64, point: &PointData, s: u64, omega_sq: &Rational, assumptions: &Assumptions) -> BoundReport {
    let report = BoundReport::new(
        BoundKind::TanGeneral,
        vec![
            ("g", g.to_string()),
            ("d(P)", point.discriminant.to_string()),
            ("s", s.to_string()),
            ("omega_sq", omega_sq.to_string()),
        ],
        assumptions,
        &[("relatively-minimal", false)],
    );
    if g < 2 {
        return report.inapplicable(format!("needs genus at least 2, got g = {g}"));
    }
    let value = r(2 * g - 1) * (&point.discriminant + r(3 * s)) - omega_sq;
    let mut report = report.with_bound(value);
    report.caveats.push(INFINITY_CAVEAT.into());
    if report.bound.as_ref().is_some_and(|b| b.is_negative()) {
        report.caveats.push("negative bound: no such point exists".into());
    }
    report
}

/// `h(P) ≤ 4d(P) + 4c₂ - c₁² - 4(g_B - 1)`, given a Kodaira-Spencer map of
/// full rank.
pub fn moriwaki(point: &PointData, c1_sq: &Rational, c2: &Rational, g_b: u64, assumptions: &Assumptions) -> BoundReport {
    let report = BoundReport::new(
        BoundKind::Moriwaki,
        vec![
            ("d(P)", point.discriminant.to_string()),
            ("c1_sq", c1_sq.to_string()),
            ("c2", c2.to_string()),
            ("g_B", g_b.to_string()),
        ],
        assumptions,
        &[("ks-full-rank", true)],
    );
    let value = int(4) * &point.discriminant + int(4) * c2 - c1_sq - int(4) * (r(g_b) - int(1));
    report.with_bound(value)
}

/// `h(P) ≤ (2 + ε) d(P) + C` with the constant `C` supplied by the caller.
pub fn vojta(point: &PointData, epsilon: &Rational, constant: &Rational) -> Result<BoundReport> {
    if !epsilon.is_positive() {
        return Err(Error::InvalidInput(format!("epsilon must be positive, got {epsilon}")));
    }
    let mut report = BoundReport::new(
        BoundKind::Vojta,
        vec![
            ("d(P)", point.discriminant.to_string()),
            ("epsilon", epsilon.to_string()),
            ("C", constant.to_string()),
        ],
        &Assumptions::default(),
        &[],
    );
    report.caveats.push("O(1) user-supplied".into());
    Ok(report.with_bound((int(2) + epsilon) * &point.discriminant + constant))
}

/// Leading term `p^e (2g - 2) d(P)` of the bound in characteristic `p` for
/// points of inseparable degree `p^e`.
pub fn char_p(point: &PointData, g: u64, p: u64, e_insep: u32, assumptions: &Assumptions) -> Result<BoundReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let report = BoundReport::new(
        BoundKind::CharP,
        vec![
            ("p", p.to_string()),
            ("e", e_insep.to_string()),
            ("g", g.to_string()),
            ("d(P)", point.discriminant.to_string()),
        ],
        assumptions,
        &[("non-isotrivial", false)],
    );
    let pe = Rational::from_integer(num_traits::pow(BigInt::from(p), e_insep as usize));
    let value = pe * (int(2 * g as i64) - int(2)) * &point.discriminant;
    let mut report = report.with_bound(value);
    report.caveats.push("O(sqrt(h)) term omitted; the bound is asymptotic".into());
    report.caveats.push("d(p) and h(p) read as d(P) and h(P) of the same point".into());
    Ok(report)
}

/// `h(P) ≤ 2g_B - 2 + s` for purely inseparable points.
pub fn inseparable(g_b: u64, s: u64, assumptions: &Assumptions) -> BoundReport {
    let report = BoundReport::new(
        BoundKind::Inseparable,
        vec![("g_B", g_b.to_string()), ("s", s.to_string())],
        assumptions,
        &[("semistable", false), ("non-isotrivial", false)],
    );
    report.with_bound(r(2 * g_b) - int(2) + r(s))
}

/// Largest degree worth searching below a height bound; `None` when the
/// bound is negative.
pub fn search_degree(bound: &Rational) -> Option<u64> {
    let f = floor(bound);
    if f.is_negative() {
        None
    } else {
        u64::try_from(f).ok()
    }
}

/// `floor(2 sqrt(|m| / 3))`: the largest `B` with `3B² ≤ 4|m|`.
pub fn cubesum_coordinate_bound(m: &BigInt) -> Result<BigInt> {
    if m.is_zero() {
        return Err(Error::InvalidInput("m = 0: every (x, -x) is a solution".into()));
    }
    // 3B² ≤ 4|m| ⇔ B² ≤ floor(4|m| / 3)
    let cap: BigInt = (m.abs() * 4u32) / 3u32;
    Ok(cap.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn val(r: &BoundReport) -> Rational {
        r.bound.clone().expect("bound present")
    }

    #[test]
    fn plane_examples() {
        let a = Assumptions::all();
        assert_eq!(val(&tan_plane(4, 5, 2, &a)), int(22));
        assert_eq!(val(&tan_plane(4, 1, 0, &a)), int(0));
        assert_eq!(val(&tan_plane(5, 3, 4, &a)), int(13));
        let low = tan_plane(3, 5, 2, &a);
        assert!(low.bound.is_none() && low.inapplicable_reason.is_some());
    }

    #[test]
    fn plane_bound_is_exact() {
        // d = 6: (19 · 1 + 0) / 3
        assert_eq!(val(&tan_plane(6, 2, 0, &Assumptions::all())), rat(19, 3));
    }

    #[test]
    fn general_examples() {
        let a = Assumptions::all();
        let sec = PointData::section(int(0));
        assert_eq!(val(&tan_general(3, &sec, 5, &int(9), &a)), int(56));
        assert_eq!(val(&tan_general(2, &sec, 1, &int(0), &a)), int(3));
        let p = PointData::new(int(0), int(0), 1).unwrap();
        let neg = tan_general(3, &p, 0, &int(9), &a);
        assert_eq!(val(&neg), int(-9));
        assert!(neg.caveats.iter().any(|c| c.contains("negative")));
        assert!(tan_general(1, &sec, 1, &int(0), &a).bound.is_none());
    }

    #[test]
    fn moriwaki_examples() {
        let a = Assumptions::all();
        let p = |d| PointData::new(int(0), int(d), 1).unwrap();
        assert_eq!(val(&moriwaki(&p(-2), &int(12), &int(36), 0, &a)), int(128));
        assert_eq!(val(&moriwaki(&p(0), &int(0), &int(0), 1, &a)), int(0));
        assert_eq!(val(&moriwaki(&p(2), &int(0), &int(24), 2, &a)), int(100));
        let without = moriwaki(&p(2), &int(0), &int(24), 2, &Assumptions::default());
        assert!(without.bound.is_none());
        assert!(without.inapplicable_reason.unwrap().contains("ks-full-rank"));
    }

    #[test]
    fn vojta_examples() {
        let p = |d| PointData::new(int(0), int(d), 1).unwrap();
        assert_eq!(val(&vojta(&p(10), &rat(1, 2), &int(7)).unwrap()), int(32));
        assert_eq!(val(&vojta(&p(0), &int(1), &int(0)).unwrap()), int(0));
        assert_eq!(val(&vojta(&p(-2), &rat(1, 10), &int(100)).unwrap()), rat(479, 5));
        assert!(vojta(&p(1), &int(0), &int(0)).is_err());
        assert!(vojta(&p(1), &int(-1), &int(0)).is_err());
    }

    #[test]
    fn char_p_examples() {
        let a = Assumptions::all();
        let p = |d| PointData::new(int(0), int(d), 1).unwrap();
        assert_eq!(val(&char_p(&p(3), 2, 2, 1, &a).unwrap()), int(12));
        assert_eq!(val(&char_p(&p(0), 2, 5, 0, &a).unwrap()), int(0));
        assert_eq!(val(&char_p(&p(1), 3, 3, 2, &a).unwrap()), int(36));
        assert!(matches!(char_p(&p(1), 3, 4, 1, &a), Err(Error::NotPrime(4))));
    }

    #[test]
    fn inseparable_examples() {
        let a = Assumptions::all();
        assert_eq!(val(&inseparable(0, 3, &a)), int(1));
        assert_eq!(val(&inseparable(1, 0, &a)), int(0));
        assert_eq!(val(&inseparable(2, 5, &a)), int(7));
        let soft = inseparable(2, 5, &Assumptions::default());
        assert!(soft.bound.is_some());
        assert_eq!(soft.caveats.len(), 2);
    }

    #[test]
    fn cubesum_examples() {
        let b = |m: i64| cubesum_coordinate_bound(&BigInt::from(m)).unwrap();
        assert_eq!(b(1729), BigInt::from(48));
        assert_eq!(b(3), BigInt::from(2));
        assert_eq!(b(1), BigInt::from(1));
        assert_eq!(b(-1729), BigInt::from(48));
        assert!(cubesum_coordinate_bound(&BigInt::from(0)).is_err());
    }

    #[test]
    fn cubesum_isqrt_contract() {
        for m in (-3000i64..3000).filter(|&m| m != 0) {
            let bound = cubesum_coordinate_bound(&BigInt::from(m)).unwrap();
            let four_m = BigInt::from(4 * m.abs());
            assert!(&bound * &bound * 3 <= four_m);
            assert!((&bound + 1) * (&bound + 1) * 3 > four_m);
        }
    }

    #[test]
    fn plane_monotone_grid() {
        let a = Assumptions::all();
        for d in 4..9 {
            for s in 0..8 {
                for k in 0..8 {
                    let here = val(&tan_plane(d, s, k, &a));
                    assert!(val(&tan_plane(d, s + 1, k, &a)) >= here);
                    assert!(val(&tan_plane(d, s, k + 1, &a)) >= here);
                }
            }
        }
    }

    #[test]
    fn general_monotone_grid() {
        let a = Assumptions::all();
        for g in 2..6 {
            for dp in -4..4 {
                for s in 0..5 {
                    for w in 0..5 {
                        let p = |d| PointData::new(int(0), int(d), 1).unwrap();
                        let here = val(&tan_general(g, &p(dp), s, &int(w), &a));
                        assert!(val(&tan_general(g, &p(dp + 1), s, &int(w), &a)) > here);
                        assert!(val(&tan_general(g, &p(dp), s + 1, &int(w), &a)) > here);
                        assert!(val(&tan_general(g, &p(dp), s, &int(w + 1), &a)) < here);
                    }
                }
            }
        }
    }

    #[test]
    fn search_degree_floors() {
        assert_eq!(search_degree(&rat(19, 3)), Some(6));
        assert_eq!(search_degree(&int(0)), Some(0));
        assert_eq!(search_degree(&int(-1)), None);
    }

    #[test]
    fn cover_discriminant() {
        assert_eq!(PointData::discriminant_of_cover(0, 1).unwrap(), int(-2));
        assert_eq!(PointData::discriminant_of_cover(2, 4).unwrap(), rat(1, 2));
        assert!(PointData::new(int(0), int(0), 0).is_err());
    }
}
