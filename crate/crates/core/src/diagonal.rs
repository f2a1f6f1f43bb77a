//! Nef-diagonal verdicts for curves, complete intersections and del Pezzo
//! varieties.
//!
//! Criteria that can rule nefness out, in the order they are tried:
//!
//! - a table of known exceptions, each with a negative intersection of
//!   effective cycles or a named reason;
//! - `deg Delta^2 = deg c_n < 0`;
//! - a finite cover `X -> P^n` of degree `d` with `deg c_n > (n+1) d`.
//!
//! Positive answers come from homogeneity, group structure on elliptic
//! curves, or being a fake projective space.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::chern::{
    betti_ci, euler_ci_formula, euler_ci_points, euler_ci_recursive, euler_ci_series,
    euler_delpezzo_closed, quadrics_b, CIType,
};
use crate::cones::{spherical_nef_diagonal_check, CycleDataset};
use crate::error::{Error, Result};
use crate::exactnum::{ExactInt, IntPolynomial};
use crate::verdict::{Reason, Status, Verdict};

const EXCEPTIONS: &str = include_str!("../data/exceptions.json");

/// Description attached to the one case the criteria leave undecided.
pub const TWO_QUADRICS_QUESTION: &str =
    "open: nefness of the diagonal of odd-dimensional complete intersections of two quadrics is unknown, already in dimension 3";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn matches(self, n: u32) -> bool {
        match self {
            Parity::Even => n % 2 == 0,
            Parity::Odd => n % 2 == 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Pattern {
    Ci {
        degrees: Vec<u64>,
        #[serde(default)]
        dimension: Option<u32>,
        #[serde(default)]
        parity: Option<Parity>,
    },
    Delpezzo {
        degree: u32,
        dimension: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub a: String,
    pub b: String,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionEntry {
    pub name: String,
    #[serde(rename = "match")]
    pub pattern: Pattern,
    pub witness: Option<Witness>,
    pub note: String,
}

impl ExceptionEntry {
    fn matches_ci(&self, ci: &CIType) -> bool {
        match &self.pattern {
            Pattern::Ci { degrees, dimension, parity } => {
                degrees.as_slice() == ci.degrees()
                    && dimension.map_or(true, |n| n == ci.dimension())
                    && parity.map_or(true, |p| p.matches(ci.dimension()))
            }
            Pattern::Delpezzo { .. } => false,
        }
    }

    fn matches_delpezzo(&self, n: u32, d: u32) -> bool {
        matches!(self.pattern, Pattern::Delpezzo { degree, dimension } if degree == d && dimension == n)
    }

    pub fn verdict(&self, subject: &str) -> Verdict {
        let detail = if subject == self.name {
            format!("{subject}: {}", self.note)
        } else {
            format!("{subject}: {}, {}", self.name, self.note)
        };
        match &self.witness {
            Some(w) => Verdict::not_nef(
                Reason::NegativeEffectivePair {
                    a: w.a.clone(),
                    b: w.b.clone(),
                    value: BigInt::from(w.value),
                },
                detail,
            ),
            None => Verdict::not_nef(Reason::KnownException { entry: self.name.clone() }, detail),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionTable {
    pub entries: Vec<ExceptionEntry>,
}

impl ExceptionTable {
    pub fn parse(document: &str) -> Result<Self> {
        let table: Self =
            serde_json::from_str(document).map_err(|e| Error::SchemaError(e.to_string()))?;
        for entry in &table.entries {
            if entry.witness.as_ref().is_some_and(|w| w.value >= 0) {
                return Err(Error::SchemaError(format!(
                    "exception {} carries a non-negative witness",
                    entry.name
                )));
            }
        }
        Ok(table)
    }

    /// The shipped table.
    pub fn builtin() -> &'static Self {
        static TABLE: OnceLock<ExceptionTable> = OnceLock::new();
        TABLE.get_or_init(|| Self::parse(EXCEPTIONS).expect("embedded exceptions.json is valid"))
    }

    pub fn lookup_ci(&self, ci: &CIType) -> Option<&ExceptionEntry> {
        self.entries.iter().find(|e| e.matches_ci(ci))
    }

    pub fn lookup_delpezzo(&self, n: u32, degree: u32) -> Option<&ExceptionEntry> {
        self.entries.iter().find(|e| e.matches_delpezzo(n, degree))
    }
}

/// Smooth curves: `P^1` and elliptic curves have nef diagonal, higher genus
/// ones have `deg Delta^2 = 2 - 2g < 0`.
pub fn verdict_curve(genus: u64) -> Verdict {
    curve_verdict(&BigInt::from(genus), format!("curve of genus {genus}"))
}

fn curve_verdict(genus: &BigInt, detail: String) -> Verdict {
    if genus.is_zero() {
        Verdict::nef(Reason::Homogeneous, detail)
    } else if genus.is_one() {
        Verdict::nef(Reason::GroupVariety, detail)
    } else {
        let euler = BigInt::from(2) - BigInt::from(2) * genus;
        Verdict::negative_self_intersection(euler, detail)
    }
}

/// Outcome of comparing `deg c_n` with `(n+1) * prod(d_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionCheck {
    pub violated: bool,
    pub euler: ExactInt,
    pub bound: ExactInt,
}

/// A general linear projection `X -> P^n` is finite of degree `prod(d_i)`;
/// if `deg c_n` exceeds `(n+1)` times that degree the diagonal is not nef.
pub fn projection_bound_violated(ci: &CIType) -> ProjectionCheck {
    let euler = euler_ci_formula(ci);
    let bound = BigInt::from(ci.dimension() + 1) * ci.degree_product();
    ProjectionCheck { violated: euler > bound, euler, bound }
}

pub fn verdict_ci(ci: &CIType) -> Verdict {
    let n = ci.dimension();
    if ci.is_projective_space() {
        return Verdict::nef(Reason::Homogeneous, format!("{ci}: projective space P^{n}"));
    }
    if n == 1 {
        let euler = euler_ci_formula(ci);
        let genus = (BigInt::from(2) - &euler) / 2;
        return curve_verdict(&genus, format!("{ci}: curve of genus {genus}"));
    }
    if ci.is_quadric() {
        return Verdict::nef(Reason::Homogeneous, format!("{ci}: smooth quadric"));
    }
    if ci.is_two_quadrics() && n % 2 == 1 {
        return Verdict::open(
            Reason::OpenQuestion { reference: TWO_QUADRICS_QUESTION.into() },
            format!("{ci}: odd-dimensional complete intersection of two quadrics"),
        );
    }
    if let Some(entry) = ExceptionTable::builtin().lookup_ci(ci) {
        return entry.verdict(&ci.to_string());
    }
    let check = projection_bound_violated(ci);
    if check.euler.is_negative() {
        let detail = format!("{ci}: deg c_{n} = {}", check.euler);
        return Verdict::negative_self_intersection(check.euler, detail);
    }
    if check.violated {
        let detail = format!("{ci}: deg c_{n} = {} > {}", check.euler, check.bound);
        return Verdict::not_nef(
            Reason::ProjectionBound { euler: check.euler, bound: check.bound },
            detail,
        );
    }
    Verdict::open(Reason::Unclassified, format!("{ci}: deg c_{n} = {}", check.euler))
}

/// The three del Pezzo varieties of degree 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sextic {
    /// `P^1 x P^1 x P^1`, dimension 3.
    P1P1P1,
    /// `P(T_{P^2})`, the flag variety, dimension 3.
    Flag,
    /// `P^2 x P^2`, dimension 4.
    P2P2,
}

impl Sextic {
    pub fn dimension(self) -> u32 {
        match self {
            Sextic::P1P1P1 | Sextic::Flag => 3,
            Sextic::P2P2 => 4,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Sextic::P1P1P1 => "P^1 x P^1 x P^1",
            Sextic::Flag => "P(T_P^2)",
            Sextic::P2P2 => "P^2 x P^2",
        }
    }

    pub fn all() -> [Sextic; 3] {
        [Sextic::P1P1P1, Sextic::Flag, Sextic::P2P2]
    }
}

impl std::str::FromStr for Sextic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p1p1p1" | "p1xp1xp1" => Ok(Sextic::P1P1P1),
            "flag" | "ptp2" => Ok(Sextic::Flag),
            "p2p2" | "p2xp2" => Ok(Sextic::P2P2),
            _ => Err(Error::InvalidInput(format!(
                "unknown degree-6 variant {s:?}; expected p1p1p1, flag or p2p2"
            ))),
        }
    }
}

/// Whether a smooth del Pezzo variety of dimension `n` and degree `degree`
/// exists.
pub fn delpezzo_exists(n: u32, degree: u32) -> bool {
    n >= 3
        && match degree {
            1..=4 => true,
            5 => n <= 6,
            6 => n <= 4,
            7 => n == 3,
            _ => false,
        }
}

fn delpezzo_name(n: u32, degree: u32) -> String {
    format!("del Pezzo {n}-fold of degree {degree}")
}

pub fn verdict_delpezzo(n: u32, degree: u32) -> Result<Verdict> {
    verdict_delpezzo_variant(n, degree, None)
}

/// As [`verdict_delpezzo`]; `variant` only names which degree-6 variety is
/// meant and must fit the dimension.
pub fn verdict_delpezzo_variant(n: u32, degree: u32, variant: Option<Sextic>) -> Result<Verdict> {
    if !delpezzo_exists(n, degree) {
        return Err(Error::InvalidDelPezzo { dimension: n, degree });
    }
    if let Some(v) = variant {
        if degree != 6 || v.dimension() != n {
            return Err(Error::InvalidInput(format!(
                "variant {} does not exist in dimension {n} and degree {degree}",
                v.describe()
            )));
        }
    }
    let name = delpezzo_name(n, degree);
    let verdict = match degree {
        1 | 2 => {
            let euler = euler_delpezzo_closed(n, degree)?;
            if n % 2 == 1 {
                let detail = format!("{name}: deg c_{n} = {euler}");
                Verdict::negative_self_intersection(euler, detail)
            } else {
                // finite of degree 2^n resp. 2 over P^n
                let cover = if degree == 1 { BigInt::one() << n } else { BigInt::from(2) };
                let bound = cover * (n + 1);
                let detail = format!("{name}: deg c_{n} = {euler} > {bound}");
                Verdict::not_nef(Reason::ProjectionBound { euler, bound }, detail)
            }
        }
        3 | 4 => {
            let degrees = if degree == 3 { vec![3] } else { vec![2, 2] };
            let mut v = verdict_ci(&CIType::new(degrees, n)?);
            v.detail = format!("{name} = {}", v.detail);
            v
        }
        5 => match n {
            3 => Verdict::nef(
                Reason::FakeProjectiveSpace,
                format!("{name}: linear section of G(2,5) with the Betti numbers of P^3"),
            ),
            4 => ExceptionTable::builtin()
                .lookup_delpezzo(n, degree)
                .expect("exception table covers the degree-5 fourfold")
                .verdict(&name),
            5 => {
                let mut v = spherical_nef_diagonal_check(&CycleDataset::odd_symplectic_g2c5())?;
                v.detail = format!("{name}: {}", v.detail);
                v
            }
            _ => Verdict::nef(Reason::Homogeneous, format!("{name}: the Grassmannian G(2,5)")),
        },
        6 => {
            let which = match variant {
                Some(v) => v.describe().to_string(),
                None if n == 3 => "P^1 x P^1 x P^1 or P(T_P^2)".to_string(),
                None => Sextic::P2P2.describe().to_string(),
            };
            Verdict::nef(Reason::Homogeneous, format!("{name}: {which}"))
        }
        _ => Verdict::not_nef(
            Reason::BirationalContraction,
            format!("{name}: blow-up of P^3 at a point"),
        ),
    };
    Ok(verdict)
}

/// One row of the del Pezzo classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelPezzoRow {
    pub degree: u32,
    pub dimensions: String,
    pub model: String,
}

pub fn table_delpezzo() -> Vec<DelPezzoRow> {
    let row = |degree, dimensions: &str, model: &str| DelPezzoRow {
        degree,
        dimensions: dimensions.into(),
        model: model.into(),
    };
    vec![
        row(1, "n >= 3", "hypersurface of degree 6 in P(3,2,1,...,1)"),
        row(2, "n >= 3", "hypersurface of degree 4 in P(2,1,...,1), a double cover of P^n branched along a quartic"),
        row(3, "n >= 3", "cubic hypersurface in P^(n+1)"),
        row(4, "n >= 3", "complete intersection of two quadrics in P^(n+2)"),
        row(5, "3 <= n <= 6", "linear section of the Grassmannian G(2,5) in its Pluecker embedding"),
        row(6, "n = 3 or 4", "P^1 x P^1 x P^1 or P(T_P^2) (n = 3), P^2 x P^2 (n = 4)"),
        row(7, "n = 3", "blow-up of P^3 at a point"),
    ]
}

/// What [`nef_big_filter`] is asked about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Variety {
    CompleteIntersection(CIType),
    DelPezzo { dimension: u32, degree: u32 },
}

/// True exactly when the diagonal is nef and big: projective spaces, odd
/// dimensional quadrics, and the del Pezzo threefold of degree 5.
pub fn nef_big_filter(x: &Variety) -> Result<bool> {
    match x {
        Variety::CompleteIntersection(ci) => {
            Ok(ci.is_projective_space() || (ci.is_quadric() && ci.dimension() % 2 == 1))
        }
        &Variety::DelPezzo { dimension, degree } => {
            if !delpezzo_exists(dimension, degree) {
                return Err(Error::InvalidDelPezzo { dimension, degree });
            }
            Ok((dimension, degree) == (3, 5))
        }
    }
}

/// Poincare polynomials of `X = (2,2)` of dimension `2n+1` and of the fiber
/// `F = (2,2)` of dimension `2n-2` of the evaluation map from lines, with
/// the remainder of `p_X p_F` modulo `1 + t^2`.
///
/// If `T_X` were nef, `p_X p_F = p_M (1 + t^2)` for the family of lines `M`,
/// so a nonzero remainder rules that out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationObstruction {
    pub n: u32,
    pub p_x: IntPolynomial,
    pub p_f: IntPolynomial,
    pub remainder: IntPolynomial,
}

pub fn cp_fibration_obstruction(n: u32) -> Result<FibrationObstruction> {
    if n == 0 {
        return Err(Error::InvalidInput("the obstruction needs n >= 1".into()));
    }
    let p_x = betti_ci(&CIType::new(vec![2, 2], 2 * n + 1)?)?.poincare_polynomial();
    let p_f = if n == 1 {
        // four points
        IntPolynomial::constant(euler_ci_points(&[2, 2]))
    } else {
        betti_ci(&CIType::new(vec![2, 2], 2 * (n - 1))?)?.poincare_polynomial()
    };
    let one_plus_t2 = IntPolynomial::new(vec![BigInt::one(), BigInt::zero(), BigInt::one()]);
    let remainder = (&p_x * &p_f).rem_monic(&one_plus_t2)?;
    if remainder.is_zero() {
        return Err(Error::ScanViolation {
            case: format!("(2,2;{})", 2 * n + 1),
            law: "p_X p_F is not divisible by 1 + t^2".into(),
        });
    }
    Ok(FibrationObstruction { n, p_x, p_f, remainder })
}

/// Ranges for [`scan_ci`]: dimensions `1..=max_n`, degrees `2..=max_degree`,
/// up to `max_r` equations, and up to `max_quadric_r` quadrics for the
/// separate quadric laws.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanBounds {
    pub max_n: u32,
    pub max_degree: u64,
    pub max_r: usize,
    pub max_quadric_r: u32,
}

impl ScanBounds {
    pub fn new(max_n: u32, max_degree: u64, max_r: usize) -> Self {
        Self { max_n, max_degree, max_r, max_quadric_r: (max_r as u32).max(8) }
    }
}

/// Counts per verdict and per law from an exhaustive scan. Reports over
/// disjoint ranges combine with [`ScanReport::merge`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub cases: u64,
    pub by_status: BTreeMap<String, u64>,
    pub by_criterion: BTreeMap<String, u64>,
    pub laws: BTreeMap<String, u64>,
    /// Every case whose verdict is not `NotNef`.
    pub not_ruled_out: Vec<String>,
}

pub const LAW_ORACLES: &str = "three Euler characteristic routes agree";
pub const LAW_HYPERSURFACE_SIGN: &str = "hypersurface of degree >= 3: sign (-1)^n";
pub const LAW_MULTI_SIGN: &str = "r >= 2 with a degree >= 3: sign (-1)^n";
pub const LAW_EVEN_BOUND: &str = "even n: deg c_n > (n+1) prod d_i";
pub const LAW_QUADRIC_RECURSION: &str = "quadrics: b(n,r) recursion matches deg c_n";
pub const LAW_QUADRIC_POSITIVE: &str = "r >= 3 quadrics: b(n,r) > 0";
pub const LAW_QUADRIC_BOUND: &str = "r >= 3 quadrics, even n: b(n,r) > n+1";
pub const LAW_CLASSIFIED: &str = "every case classified";
pub const LAW_POSITIVE_LIST: &str = "only P^n, quadrics, (2,2) and elliptic curves survive";
pub const LAW_WITNESS: &str = "witnesses re-verify";

impl ScanReport {
    pub fn merge(&mut self, other: ScanReport) {
        self.cases += other.cases;
        for (k, v) in other.by_status {
            *self.by_status.entry(k).or_default() += v;
        }
        for (k, v) in other.by_criterion {
            *self.by_criterion.entry(k).or_default() += v;
        }
        for (k, v) in other.laws {
            *self.laws.entry(k).or_default() += v;
        }
        self.not_ruled_out.extend(other.not_ruled_out);
        self.not_ruled_out.sort();
    }

    fn pass(&mut self, law: &str) {
        *self.laws.entry(law.to_string()).or_default() += 1;
    }

    pub fn status_count(&self, status: Status) -> u64 {
        self.by_status.get(&status.to_string()).copied().unwrap_or(0)
    }
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cases: {}", self.cases)?;
        for (status, count) in &self.by_status {
            writeln!(f, "  {status}: {count}")?;
        }
        writeln!(f, "criteria:")?;
        for (criterion, count) in &self.by_criterion {
            writeln!(f, "  {criterion}: {count}")?;
        }
        writeln!(f, "laws (checks passed):")?;
        for (law, count) in &self.laws {
            writeln!(f, "  {law}: {count}")?;
        }
        write!(f, "not ruled out: {}", self.not_ruled_out.join(" "))
    }
}

fn violation(ci: impl fmt::Display, law: &str) -> Error {
    Error::ScanViolation { case: ci.to_string(), law: law.to_string() }
}

/// Non-decreasing lists of length `r` with entries in `2..=max_degree`.
fn degree_lists(r: usize, max_degree: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u64>| {
                let lo = prefix.last().copied().unwrap_or(2);
                (lo..=max_degree).map(move |d| {
                    let mut next = prefix.clone();
                    next.push(d);
                    next
                })
            })
            .collect();
    }
    out
}

fn sign_ok(euler: &BigInt, n: u32) -> bool {
    if n % 2 == 0 {
        euler.is_positive()
    } else {
        euler.is_negative()
    }
}

/// Whether the case belongs to the list that survives the criteria.
fn on_positive_list(ci: &CIType) -> bool {
    if ci.dimension() == 1 {
        // genus <= 1: line, conic, plane cubic, (2,2) in P^3
        return matches!(ci.degrees(), [] | [2] | [3] | [2, 2]);
    }
    ci.is_projective_space() || ci.is_quadric() || (ci.is_two_quadrics() && ci.dimension() % 2 == 1)
}

fn witness_reverifies(ci: &CIType, v: &Verdict, euler: &BigInt) -> bool {
    if !v.reason.witness_is_consistent() {
        return false;
    }
    match &v.reason {
        Reason::NegativeSelfIntersection { euler: e } => e == euler,
        Reason::ProjectionBound { euler: e, bound } => {
            e == euler && *bound == BigInt::from(ci.dimension() + 1) * ci.degree_product()
        }
        Reason::NegativeEffectivePair { .. } | Reason::KnownException { .. } => {
            ExceptionTable::builtin().lookup_ci(ci).is_some()
        }
        _ => v.status != Status::NotNef,
    }
}

fn scan_case(ci: &CIType, report: &mut ScanReport) -> Result<()> {
    let n = ci.dimension();
    let degrees = ci.degrees();
    let r = degrees.len();
    let euler = euler_ci_formula(ci);
    if euler != euler_ci_series(ci) || euler != euler_ci_recursive(ci) {
        return Err(violation(ci, LAW_ORACLES));
    }
    report.pass(LAW_ORACLES);

    let top = degrees.last().copied().unwrap_or(1);
    let hypersurface = r == 1 && top >= 3;
    let multi = r >= 2 && top >= 3;
    if hypersurface && (n, top) != (1, 3) {
        if !sign_ok(&euler, n) {
            return Err(violation(ci, LAW_HYPERSURFACE_SIGN));
        }
        report.pass(LAW_HYPERSURFACE_SIGN);
    }
    if multi {
        if !sign_ok(&euler, n) {
            return Err(violation(ci, LAW_MULTI_SIGN));
        }
        report.pass(LAW_MULTI_SIGN);
    }
    if n % 2 == 0 && ((hypersurface && (n, top) != (2, 3)) || multi) {
        if !projection_bound_violated(ci).violated {
            return Err(violation(ci, LAW_EVEN_BOUND));
        }
        report.pass(LAW_EVEN_BOUND);
    }

    let v = verdict_ci(ci);
    report.cases += 1;
    *report.by_status.entry(v.status.to_string()).or_default() += 1;
    *report.by_criterion.entry(v.reason.criterion().to_string()).or_default() += 1;
    if v.is_unclassified() {
        return Err(violation(ci, LAW_CLASSIFIED));
    }
    report.pass(LAW_CLASSIFIED);
    if (v.status != Status::NotNef) != on_positive_list(ci) {
        return Err(violation(ci, LAW_POSITIVE_LIST));
    }
    report.pass(LAW_POSITIVE_LIST);
    if v.status != Status::NotNef {
        report.not_ruled_out.push(ci.to_string());
    }
    if !witness_reverifies(ci, &v, &euler) {
        return Err(violation(ci, LAW_WITNESS));
    }
    report.pass(LAW_WITNESS);
    Ok(())
}

fn scan_quadrics(bounds: &ScanBounds, report: &mut ScanReport) -> Result<()> {
    for n in 1..=bounds.max_n {
        for r in 1..=bounds.max_quadric_r {
            let case = format!("b({n},{r})");
            let b = quadrics_b(n, r)?;
            let ci = CIType::new(vec![2; r as usize], n)?;
            let mut signed = euler_ci_formula(&ci);
            if n % 2 == 1 {
                signed = -signed;
            }
            let direct = num_rational::BigRational::new(signed, BigInt::one() << r);
            if b != direct {
                return Err(violation(case, LAW_QUADRIC_RECURSION));
            }
            report.pass(LAW_QUADRIC_RECURSION);
            if r >= 3 {
                if !b.is_positive() {
                    return Err(violation(case, LAW_QUADRIC_POSITIVE));
                }
                report.pass(LAW_QUADRIC_POSITIVE);
                if n % 2 == 0 && (n, r) != (2, 3) {
                    if b <= num_rational::BigRational::from_integer(BigInt::from(n + 1)) {
                        return Err(violation(case, LAW_QUADRIC_BOUND));
                    }
                    report.pass(LAW_QUADRIC_BOUND);
                }
            }
        }
    }
    Ok(())
}

/// Runs every law and the verdict procedure over all canonical types in
/// range. Any failure is an implementation bug and is returned as a
/// [`Error::ScanViolation`].
pub fn scan_ci(bounds: ScanBounds) -> Result<ScanReport> {
    if bounds.max_n == 0 || bounds.max_degree < 2 || bounds.max_r == 0 {
        return Err(Error::InvalidInput(
            "scan bounds need max_n >= 1, max_degree >= 2, max_r >= 1".into(),
        ));
    }
    let mut report = ScanReport::default();
    for r in 0..=bounds.max_r {
        let lists = degree_lists(r, bounds.max_degree);
        for n in 1..=bounds.max_n {
            for degrees in &lists {
                scan_case(&CIType::new(degrees.clone(), n)?, &mut report)?;
            }
        }
    }
    scan_quadrics(&bounds, &mut report)?;
    report.not_ruled_out.sort();
    Ok(report)
}

/// Genus of a smooth complete-intersection curve, from `deg c_1 = 2 - 2g`.
pub fn curve_genus(ci: &CIType) -> Option<ExactInt> {
    if ci.dimension() != 1 {
        return None;
    }
    let (g, rem) = (BigInt::from(2) - euler_ci_formula(ci)).div_rem(&BigInt::from(2));
    rem.is_zero().then_some(g)
}

/// Genus as a machine integer when it fits.
pub fn curve_genus_u64(ci: &CIType) -> Option<u64> {
    curve_genus(ci).and_then(|g| g.to_u64())
}
