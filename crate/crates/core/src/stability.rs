//! Representation-stability reports: support cones, vanishing lines `c = bk`,
//! generator windows, and free-module splittings `ch A = ch O · ch G`.
//!
//! Everything is in renormalized currency: the generators of `A_n(X)` are
//! `ĝ = H*(X, sΩ) ⊗ Â_n`, and `A_n(X) = Sym(ĝ)` when multiplication is trivial.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::charring::FBCharacter;
use crate::conf::{self, SpaceCohomology};
use crate::error::{Error, Result};
use crate::koszul;

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

fn qi(p: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(p))
}

/// Smallest cone through the origin of the `(k, c)`-plane containing a support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportCone {
    pub points: BTreeSet<(usize, i64)>,
    pub b_lower: BigRational,
    pub b_upper: BigRational,
}

impl SupportCone {
    pub fn from_points(points: impl IntoIterator<Item = (usize, i64)>) -> Result<Self> {
        let points: BTreeSet<(usize, i64)> = points.into_iter().collect();
        if points.is_empty() {
            return Err(Error::InvalidArgument("support cone of an empty support".into()));
        }
        if points.iter().any(|&(k, _)| k == 0) {
            return Err(Error::InvalidArgument("support cone needs graded degrees ≥ 1".into()));
        }
        let slopes = points.iter().map(|&(k, c)| q(c, k as i64));
        let b_lower = slopes.clone().min().unwrap();
        let b_upper = slopes.max().unwrap();
        Ok(SupportCone {
            points,
            b_lower,
            b_upper,
        })
    }

    pub fn contains(&self, k: usize, c: i64) -> bool {
        let slope = q(c, k as i64);
        k >= 1 && self.b_lower <= slope && slope <= self.b_upper
    }

    /// Checks that every `k ≥ 1` piece of `sym_exp(f)` lies in the cone.
    pub fn certify_sym_exp(&self, f: &FBCharacter) -> Result<bool> {
        let exp = f.sym_exp()?;
        let inside = exp.pieces().filter(|(d, _)| d.k >= 1).all(|(d, _)| self.contains(d.k, d.c));
        Ok(inside)
    }
}

pub fn support_cone(f: &FBCharacter) -> Result<SupportCone> {
    SupportCone::from_points(f.pieces().map(|(d, _)| (d.k, d.c)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Iterate,
    TopTriv,
    FiGen,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Iterate => "iterate",
            Mode::TopTriv => "toptriv",
            Mode::FiGen => "figen",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Inclusive graded-degree interval `[lo, hi]`; empty when `hi < lo`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SplitChars {
    /// Character of the operator algebra `O`.
    pub operator: FBCharacter,
    /// Character of the generators `G`, with `ch A = ch O · ch G`.
    pub quotient: FBCharacter,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilityReport {
    pub mode: Mode,
    pub n: usize,
    pub d: usize,
    pub c0: Option<i64>,
    pub m: Option<usize>,
    /// Cohomology gap; `None` means unbounded.
    pub s: Option<i64>,
    pub i: Option<i64>,
    pub max_degree: usize,
    pub b: BigRational,
    pub vanishing: String,
    /// Cohomological degree `i` ↦ graded degrees of possible generators of `H^i`.
    pub generator_windows: BTreeMap<i64, Window>,
    /// Graded degree `k` ↦ cohomological support window of the complement of the operators.
    pub support_windows: BTreeMap<usize, Window>,
    pub acting_algebra: Option<String>,
    pub statements: Vec<String>,
    pub split: Option<SplitChars>,
}

impl StabilityReport {
    fn new(mode: Mode, n: usize, d: usize, max_degree: usize, b: BigRational) -> Self {
        StabilityReport {
            mode,
            n,
            d,
            c0: None,
            m: None,
            s: None,
            i: None,
            max_degree,
            vanishing: String::new(),
            b,
            generator_windows: BTreeMap::new(),
            support_windows: BTreeMap::new(),
            acting_algebra: None,
            statements: Vec::new(),
            split: None,
        }
    }
}

/// `(2d−1)(n−1)/n`, the slope below which `ĝ` has no pieces beyond degree 1.
pub fn base_slope(n: usize, d: usize) -> BigRational {
    q((2 * d as i64 - 1) * (n as i64 - 1), n as i64)
}

/// `b = min((2d−1)(n−1)/n, c0+1)`.
pub fn iterate_bound(n: usize, d: usize, c0: i64) -> BigRational {
    base_slope(n, d).min(qi(c0 + 1))
}

/// `b = min((2d−1)m/(m+1), s)`; `s = None` is unbounded.
pub fn toptriv_bound(d: usize, m: usize, s: Option<i64>) -> BigRational {
    let slope = q((2 * d as i64 - 1) * m as i64, m as i64 + 1);
    match s {
        Some(s) => slope.min(qi(s)),
        None => slope,
    }
}

/// Graded degrees of possible generators of `H^i` after removing the degree-1
/// pieces at `c ≤ c0`; needs `c0 < (2d−1)(n−1)/n`.
pub fn generator_window_bounds(n: usize, d: usize, c0: i64, i: i64) -> Result<Window> {
    let b0 = base_slope(n, d);
    if c0 < 0 || qi(c0) >= b0 {
        return Err(Error::Hypothesis(format!(
            "generator windows need 0 ≤ c0 < (2d−1)(n−1)/n = {b0}, got c0 = {c0}"
        )));
    }
    let hi = if qi(c0 + 1) <= b0 {
        i - c0
    } else {
        (qi(i - c0) / (b0 - qi(c0))).floor().to_integer().try_into().expect("window overflow")
    };
    Ok(Window { lo: 1, hi })
}

pub fn generator_window(space: &SpaceCohomology, n: usize, c0: i64, i: i64) -> Result<Window> {
    space.validate()?;
    if !space.trivial_multiplication {
        return Err(Error::Hypothesis(
            "generator windows need the free-module structure given by trivial multiplication".into(),
        ));
    }
    generator_window_bounds(n, space.d, c0, i)
}

/// `a / o` in the character ring; `o` must have the unit as its degree-0 slice.
pub fn divide(a: &FBCharacter, o: &FBCharacter) -> Result<FBCharacter> {
    if o.slice(0) != FBCharacter::unit(0).slice(0) {
        return Err(Error::MissingUnit);
    }
    let max_degree = a.max_degree().min(o.max_degree());
    let mut g = FBCharacter::empty(max_degree);
    for k in 0..=max_degree {
        // G_k = A_k − Σ_{j ≥ 1} O_j G_{k−j}
        let mut slice = a.filter(|d| d.k == k);
        for j in 1..=k {
            let oj = o.filter(|d| d.k == j);
            let gk = g.filter(|d| d.k == k - j);
            slice = slice.sub(&oj.induction_product(&gk));
        }
        g = g.add(&slice);
    }
    if !g.pieces().all(|(_, f)| f.is_virtual_character()) {
        return Err(Error::Calibration("character division produced a non-integral result".into()));
    }
    Ok(g)
}

/// Pieces of `f` at `k ≥ 1` with `c < b·k`.
pub fn below_line(f: &FBCharacter, b: &BigRational) -> Vec<(usize, i64, i64)> {
    f.pieces()
        .filter(|(d, _)| d.k >= 1 && qi(d.c) < b * qi(d.k as i64))
        .map(|(d, _)| (d.k, d.c, d.w))
        .collect()
}

fn certify_vanishing(what: &str, f: &FBCharacter, b: &BigRational) -> Result<()> {
    if let Some((k, c, w)) = below_line(f, b).first() {
        return Err(Error::Calibration(format!(
            "{what} has a piece at (k,c,w)=({k},{c},{w}) below the line c = {b}·k"
        )));
    }
    Ok(())
}

fn vanishing_text(object: &str, b: &BigRational) -> String {
    format!("H^c({object})_k = 0 for c < {b}·k")
}

/// The line `c = bk` read as a generator bound `k ≤ c/b`.
fn generator_text(b: &BigRational) -> String {
    let inverse = b.recip();
    if inverse.is_one() {
        "generators of H^c in graded degrees ≤ c".into()
    } else if inverse.is_integer() {
        format!("generators of H^c in graded degrees ≤ {}c", inverse)
    } else {
        format!("generators of H^c in graded degrees ≤ ({inverse})c")
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be ≥ 2, got {n}")));
    }
    Ok(())
}

fn windows_up_to(n: usize, d: usize, c0: i64, max_i: i64) -> Result<BTreeMap<i64, Window>> {
    (c0.max(0)..=max_i)
        .map(|i| Ok((i, generator_window_bounds(n, d, c0, i)?)))
        .collect()
}

/// Deletes the degree-1 pieces of `ĝ` at `c ≤ c0` and reports the vanishing line
/// of what remains; with trivial multiplication the split characters are exact.
pub fn iterate_indecomposables(space: &SpaceCohomology, n: usize, c0: i64, max_degree: usize) -> Result<StabilityReport> {
    space.validate()?;
    check_n(n)?;
    if c0 < 0 {
        return Err(Error::InvalidArgument(format!("c0 must be ≥ 0, got {c0}")));
    }
    let b = iterate_bound(n, space.d, c0);
    let mut report = StabilityReport::new(Mode::Iterate, n, space.d, max_degree, b.clone());
    report.c0 = Some(c0);
    report.vanishing = vanishing_text(&format!("A^({c0})"), &b);
    if space.trivial_multiplication {
        let g = conf::generator_character(space, n, max_degree)?;
        let deleted = g.filter(|d| d.k == 1 && d.c <= c0);
        let rest = g.sub(&deleted);
        let operator = deleted.sym_exp()?;
        let quotient = rest.sym_exp()?;
        if operator.induction_product(&quotient) != g.sym_exp()? {
            return Err(Error::Calibration("O·A^(c0) differs from A_n(X)".into()));
        }
        certify_vanishing(&format!("A^({c0})"), &quotient, &b)?;
        if qi(c0) < base_slope(n, space.d) {
            report.generator_windows = windows_up_to(n, space.d, c0, max_degree as i64)?;
        }
        report.statements.push(format!(
            "vanishing certified on all computed slices k ≤ {max_degree}"
        ));
        report.split = Some(SplitChars { operator, quotient });
    } else {
        report
            .statements
            .push("multiplication not asserted trivial: bound and vanishing line only".into());
    }
    Ok(report)
}

fn toptriv_checks(space: &SpaceCohomology, m: usize) -> Result<Option<i64>> {
    space.validate()?;
    if m < 1 {
        return Err(Error::InvalidArgument("m must be ≥ 1".into()));
    }
    if !space.irreducible {
        return Err(Error::Hypothesis("the operator splitting needs an irreducible space".into()));
    }
    if space.top_triv < m {
        return Err(Error::Hypothesis(format!(
            "the operator splitting up to degree {m} needs top_triv ≥ {m}, the space asserts {}",
            space.top_triv
        )));
    }
    Ok(if space.gap_s > 0 {
        Some(space.gap_s as i64)
    } else {
        space.derived_gap()
    })
}

/// Support windows of `G` per graded degree, shifted into renormalized currency.
pub fn toptriv_support_windows(d: usize, m: usize, max_degree: usize) -> BTreeMap<usize, Window> {
    let dd = 2 * d as i64 - 1;
    (1..=max_degree)
        .map(|k| {
            let top = dd * k as i64;
            let lo = if k <= m { top - 2 * d as i64 + 2 } else { top - 2 * d as i64 + 1 };
            (k, Window { lo, hi: top })
        })
        .collect()
}

/// Free-module splitting for `n = 2` and TopTriv_m spaces: `O = Sym(Â_2 up to degree m)`.
pub fn toptriv_split(space: &SpaceCohomology, m: usize, max_degree: usize) -> Result<StabilityReport> {
    let s = toptriv_checks(space, m)?;
    let d = space.d;
    let b = toptriv_bound(d, m, s);
    let mut report = StabilityReport::new(Mode::TopTriv, 2, d, max_degree, b.clone());
    report.m = Some(m);
    report.s = s;
    report.vanishing = vanishing_text("G", &b);
    report.support_windows = toptriv_support_windows(d, m, max_degree);
    let operators = koszul::operator_lie_char(2, d, m, max_degree)?;
    let operator = operators.sym_exp()?;
    report.acting_algebra = Some(format!("free tca on Â_2 restricted to graded degrees ≤ {m}"));
    report.statements.push(generator_text(&b));
    if space.trivial_multiplication {
        let a = conf::conf_cohomology(space, 2, max_degree, true)?.character;
        let quotient = divide(&a, &operator)?;
        let generators = conf::generator_character(space, 2, max_degree)?;
        if quotient != generators.sub(&operators).sym_exp()? {
            return Err(Error::Calibration("A/O differs from Sym(ĝ − ô)".into()));
        }
        if operator.induction_product(&quotient) != a {
            return Err(Error::Calibration("O·G differs from A_2(X)".into()));
        }
        if !quotient.is_effective() {
            return Err(Error::Calibration("G is not effective".into()));
        }
        certify_vanishing("G", &quotient, &b)?;
        report.statements.push(format!(
            "vanishing certified on all computed slices k ≤ {max_degree}"
        ));
        report.split = Some(SplitChars { operator, quotient });
    } else {
        report.statements.push(
            "multiplication not asserted trivial: operator character and support windows only".into(),
        );
        report.split = Some(SplitChars {
            operator,
            quotient: FBCharacter::empty(max_degree),
        });
    }
    Ok(report)
}

/// `G` by dividing `ch A_2(X)` successively by `O_j = Sym(Â_2,j)`, `j = 1..m`.
pub fn iterated_quotient_char(space: &SpaceCohomology, m: usize, max_degree: usize) -> Result<FBCharacter> {
    let s = toptriv_checks(space, m)?;
    if !space.trivial_multiplication {
        return Err(Error::Hypothesis("iterated quotients need trivial multiplication".into()));
    }
    let operators = koszul::operator_lie_char(2, space.d, m, max_degree)?;
    let mut g = conf::conf_cohomology(space, 2, max_degree, true)?.character;
    for j in 1..=m {
        let oj = operators.filter(|d| d.k == j).sym_exp()?;
        g = divide(&g, &oj)?;
    }
    certify_vanishing("G", &g, &toptriv_bound(space.d, m, s))?;
    Ok(g)
}

/// Qualitative finite generation of `H^i(A^(c0))` over `Sym` or `Alt` of the
/// degree-`c0` classes, with the explicit generator window when available.
pub fn finite_generation_report(space: &SpaceCohomology, n: usize, c0: i64, i: i64) -> Result<StabilityReport> {
    space.validate()?;
    check_n(n)?;
    let b0 = base_slope(n, space.d);
    if c0 < 0 || qi(c0) >= b0 {
        return Err(Error::Hypothesis(format!(
            "finite generation needs 0 ≤ c0 < (2d−1)(n−1)/n = {b0}, got c0 = {c0}"
        )));
    }
    let b = iterate_bound(n, space.d, c0);
    let mut report = StabilityReport::new(Mode::FiGen, n, space.d, 0, b.clone());
    report.c0 = Some(c0);
    report.i = Some(i);
    report.vanishing = vanishing_text(&format!("A^({c0})"), &b);
    let algebra = if c0.is_even() { "Sym" } else { "Alt" };
    let acting = format!("{algebra}(H^{c0}(X, sΩ)_1)");
    report.statements.push(format!(
        "⊕_t H^({i}+{c0}t)(A^({}))_(t+1) is a finitely generated module over {acting}",
        c0 - 1
    ));
    report.statements.push(
        "the multiplication map is surjective in graded degrees t ≫ 0; no effective threshold t is available".into(),
    );
    report.acting_algebra = Some(acting);
    if space.trivial_multiplication {
        report.generator_windows.insert(i, generator_window(space, n, c0, i)?);
    }
    Ok(report)
}
