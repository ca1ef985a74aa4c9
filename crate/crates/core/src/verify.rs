//! Named verification suite: engine results pinned against independent
//! oracles and exact re-derivations.
//!
//! Every check is parameterized over a [`Formulas`] table so the suite's
//! teeth can be demonstrated: swapping in a formula perturbed by one in an
//! exponent must make at least one check fail. [`Formulas::pristine`]
//! routes through the real engine entry points; mutations only exist for
//! that falsification testing.

use serde::{Deserialize, Serialize};

use crate::element_orders::{
    construct_even_order_element, darafsheh_max_even_order, dixon_mortimer_lower_log2,
    epsilon_enclosure, order_dimension_lower_bound, sieve, verify_theorem43_side_conditions,
    OrderMethod, Parity,
};
use crate::error::Result;
use crate::exactmath::{
    certified_strictly_greater, log2_of_natural, refine_to_decision, DyadicRational, Log2Interval,
    Natural, DEFAULT_PRECISION,
};
use crate::factorial_bounds::{
    counting_dimension_lower_bound, counting_dimension_lower_bound_raw, counting_lower_expression,
    elementary_power_exponent, gl_order_exact, scan_dimensions, stirling_lower_expression,
    verify_induction_chain, DimensionBound, EngineKind, FactorialBoundEngine, GroupKind,
};
use crate::oracles::{
    factorial_exact, gl_max_even_order_exhaustive, landau_constrained_exact,
    permutation_order_and_parity, PartitionConstraint,
};

/// Which section of the suite to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteSelection {
    All,
    /// Counting-side checks: telescoping identities, the induction chain,
    /// and the counting flagship values.
    Lemma31,
    /// Order-side checks: side conditions, the witness construction, and
    /// the order flagship value.
    Thm43,
    /// Engine-versus-oracle cross checks.
    Oracles,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Single-spot perturbation of one engine formula, shifting one exponent
/// by the given offset. Used to demonstrate that the suite detects broken
/// engines; never active in production paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaMutation {
    /// `L = n + (n-2) 2^n + 2` with `2^n -> 2^(n+d)`.
    ElementaryLowerPow2Shift(i8),
    /// Power reduction `n^k` with `k -> k+d`.
    ElementaryPowerExponentShift(i8),
    /// Upper bound `n 2^n` with `2^n -> 2^(n+d)`.
    ElementaryUpperPow2Shift(i8),
    /// Stirling lower expression scaled by `2^d`.
    StirlingLowerScale(i8),
    /// Even-order ceiling `2^(N-1) - 2` with `N-1 -> N-1+d`.
    DarafshehExponentShift(i8),
    /// GL counting exponent `N^2 -> N^2 + d`.
    GlUpperExponentShift(i8),
    /// Analytic order bound scaled by `2^d`.
    DixonMortimerScale(i8),
}

impl FormulaMutation {
    /// Every single-exponent perturbation the falsification tests sweep.
    pub fn all() -> Vec<FormulaMutation> {
        use FormulaMutation::*;
        let mut out = Vec::new();
        for d in [-1i8, 1] {
            out.push(ElementaryLowerPow2Shift(d));
            out.push(ElementaryPowerExponentShift(d));
            out.push(ElementaryUpperPow2Shift(d));
            out.push(StirlingLowerScale(d));
            out.push(DarafshehExponentShift(d));
            out.push(GlUpperExponentShift(d));
            out.push(DixonMortimerScale(d));
        }
        out
    }
}

/// Formula table the checks evaluate. Pristine instances delegate to the
/// real engines; mutated instances perturb exactly one formula.
#[derive(Clone, Copy, Debug)]
pub struct Formulas {
    mutation: Option<FormulaMutation>,
    precision: u32,
}

fn shifted(base: u64, d: i8) -> u64 {
    if d >= 0 {
        base + u64::from(d.unsigned_abs())
    } else {
        base - u64::from(d.unsigned_abs())
    }
}

impl Formulas {
    pub fn pristine() -> Self {
        Formulas {
            mutation: None,
            precision: DEFAULT_PRECISION,
        }
    }

    pub fn mutated(mutation: FormulaMutation) -> Self {
        Formulas {
            mutation: Some(mutation),
            precision: DEFAULT_PRECISION,
        }
    }

    fn elementary_lower(&self, n: u32) -> Result<Natural> {
        match self.mutation {
            Some(FormulaMutation::ElementaryLowerPow2Shift(d)) => {
                let term = Natural::from(u64::from(n) - 2).times_pow2(shifted(u64::from(n), d));
                Ok(&(&term + u64::from(n)) + 2u64)
            }
            _ => crate::factorial_bounds::elementary_lower_log2_factorial_pow2(n),
        }
    }

    fn elementary_power_exponent(&self, n: u32) -> Result<Natural> {
        let (k, pow) = elementary_power_exponent(n)?;
        match self.mutation {
            Some(FormulaMutation::ElementaryPowerExponentShift(d)) => {
                let k = u32::try_from(shifted(u64::from(k), d)).expect("exponent fits u32");
                Ok(Natural::from(u64::from(n)).pow(k))
            }
            _ => Ok(pow),
        }
    }

    fn elementary_upper(&self, n: u32) -> Result<Natural> {
        match self.mutation {
            Some(FormulaMutation::ElementaryUpperPow2Shift(d)) => {
                Ok(Natural::from(u64::from(n)).times_pow2(shifted(u64::from(n), d)))
            }
            _ => crate::factorial_bounds::elementary_upper_log2_factorial_pow2(n),
        }
    }

    fn stirling_lower(&self, domain: &Natural, bits: u32) -> Result<Log2Interval> {
        let expr = stirling_lower_expression(domain, bits)?;
        Ok(match self.mutation {
            Some(FormulaMutation::StirlingLowerScale(d)) => expr.scale_pow2(i64::from(d)),
            _ => expr,
        })
    }

    fn darafsheh_exact(&self, dim: u32) -> Result<Natural> {
        match self.mutation {
            Some(FormulaMutation::DarafshehExponentShift(d)) => {
                Natural::pow2(shifted(u64::from(dim) - 1, d)).checked_sub(&Natural::from(2u64))
            }
            _ => darafsheh_max_even_order(dim),
        }
    }

    fn darafsheh_log2(&self, m: u32, bits: u32) -> Result<Log2Interval> {
        let Some(FormulaMutation::DarafshehExponentShift(d)) = self.mutation else {
            return crate::element_orders::darafsheh_max_even_order_log2(
                &Natural::pow2(u64::from(m)),
                bits,
            );
        };
        if m <= 12 {
            let exact = self.darafsheh_exact(1u32 << m)?;
            log2_of_natural(&exact, bits)
        } else {
            // shifted window [N-2+d, N-1+d] for N = 2^m
            let hi = DyadicRational::from_natural(&Natural::pow2(u64::from(m)))
                .sub(&DyadicRational::one())
                .add(&DyadicRational::from_i64(i64::from(d)));
            let lo = hi.sub(&DyadicRational::one());
            Ok(Log2Interval::new(lo, hi))
        }
    }

    /// GL-side counting ceiling, as the log2-space value `N^2 (+d)` for
    /// `N = 2^m`.
    fn gl_counting_exponent(&self, m: u32) -> Natural {
        let base = crate::factorial_bounds::gl_counting_exponent(m);
        match self.mutation {
            Some(FormulaMutation::GlUpperExponentShift(d)) => {
                if d >= 0 {
                    &base + u64::from(d.unsigned_abs())
                } else {
                    base.checked_sub(&Natural::from(u64::from(d.unsigned_abs())))
                        .expect("N^2 >= 1")
                }
            }
            _ => base,
        }
    }

    /// GL order window exponent for raw dimension `N`: upper `N^2 + d`.
    fn gl_upper_square_exponent(&self, dim: u64) -> Natural {
        let base = &Natural::from(dim) * &Natural::from(dim);
        match self.mutation {
            Some(FormulaMutation::GlUpperExponentShift(d)) => {
                if d >= 0 {
                    &base + u64::from(d.unsigned_abs())
                } else {
                    base.checked_sub(&Natural::from(u64::from(d.unsigned_abs())))
                        .expect("N^2 >= 1")
                }
            }
            _ => base,
        }
    }

    fn dixon_mortimer(&self, points: &Natural, bits: u32) -> Result<Log2Interval> {
        let base = dixon_mortimer_lower_log2(points, bits)?;
        Ok(match self.mutation {
            Some(FormulaMutation::DixonMortimerScale(d)) => base.scale_pow2(i64::from(d)),
            _ => base,
        })
    }

    fn epsilon(&self, bits: u32) -> Log2Interval {
        let base = epsilon_enclosure(bits);
        match self.mutation {
            Some(FormulaMutation::DixonMortimerScale(d)) => base.scale_pow2(i64::from(d)),
            _ => base,
        }
    }

    /// Counting bound through this formula table. Pristine delegates to
    /// the engine itself.
    fn counting_bound(&self, n: u32, kind: GroupKind, engine_kind: EngineKind) -> Result<u32> {
        if self.mutation.is_none() {
            return Ok(counting_dimension_lower_bound(
                n,
                kind,
                &FactorialBoundEngine::new(engine_kind, self.precision),
            )?
            .m_min);
        }
        let offset = match kind {
            GroupKind::Alt => 1u64,
            GroupKind::Sym => 0,
        };
        let lower: Box<dyn Fn(u32) -> Result<Log2Interval>> = match engine_kind {
            EngineKind::Elementary => {
                let expo = self
                    .elementary_power_exponent(n)?
                    .checked_sub(&Natural::from(offset))?;
                Box::new(move |_| Ok(Log2Interval::point_natural(&expo)))
            }
            EngineKind::Stirling => {
                let this = *self;
                let domain = Natural::pow2(u64::from(n));
                Box::new(move |bits| {
                    Ok(this
                        .stirling_lower(&domain, bits)?
                        .sub(&Log2Interval::point_u64(offset)))
                })
            }
            EngineKind::Exact => {
                let expr = counting_lower_expression(
                    n,
                    kind,
                    &FactorialBoundEngine::new(EngineKind::Exact, self.precision),
                )?;
                Box::new(move |bits| expr.eval(bits))
            }
        };
        let bound = scan_dimensions(
            &format!("mutated counting bound, n={n}"),
            self.precision,
            1,
            n + 32,
            lower,
            |m, _| Ok(Log2Interval::point_natural(&self.gl_counting_exponent(m))),
        )?;
        Ok(bound.m_min)
    }

    /// Analytic order bound through this formula table.
    fn order_bound_analytic(&self, n: u32) -> Result<u32> {
        if self.mutation.is_none() {
            return Ok(
                order_dimension_lower_bound(n, OrderMethod::Analytic, self.precision)?.m_min,
            );
        }
        let points = Natural::pow2(u64::from(n));
        let bound: DimensionBound = scan_dimensions(
            &format!("mutated order bound, n={n}"),
            self.precision,
            2,
            n + 32,
            |bits| self.dixon_mortimer(&points, bits),
            |m, bits| self.darafsheh_log2(m, bits),
        )?;
        Ok(bound.m_min)
    }
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

fn check_from_result(name: &str, outcome: Result<(bool, String)>) -> CheckResult {
    match outcome {
        Ok((passed, detail)) => check(name, passed, detail),
        Err(e) => check(name, false, format!("error: {e}")),
    }
}

/// Runs the selected suite against the production formulas.
pub fn run_suite(selection: SuiteSelection) -> SuiteReport {
    run_suite_with(selection, &Formulas::pristine(), false)
}

/// Runs the selected suite against an explicit formula table; with
/// `fail_fast` the run stops at the first failing check. This is the
/// falsification hook: a table mutated by one exponent must fail.
pub fn run_suite_with(
    selection: SuiteSelection,
    formulas: &Formulas,
    fail_fast: bool,
) -> SuiteReport {
    let mut checks: Vec<CheckResult> = Vec::new();
    let lemma31 = matches!(selection, SuiteSelection::All | SuiteSelection::Lemma31);
    let thm43 = matches!(selection, SuiteSelection::All | SuiteSelection::Thm43);
    let oracles = matches!(selection, SuiteSelection::All | SuiteSelection::Oracles);

    macro_rules! push {
        ($result:expr) => {
            let r = $result;
            let failed = !r.passed;
            checks.push(r);
            if fail_fast && failed {
                return SuiteReport { checks };
            }
        };
    }

    // --- cheap exact-arithmetic checks first ---

    if lemma31 {
        push!(check_from_result(
            "lemma31/closed-form-vs-literal-sum",
            closed_form_vs_literal_sum(formulas),
        ));
        push!(check_from_result(
            "lemma31/power-exponent-vs-telescoping",
            power_exponent_vs_telescoping(formulas),
        ));
        push!(check_from_result(
            "lemma31/inequality-4-at-128",
            inequality_4_at_128(formulas),
        ));
        push!(check_from_result(
            "lemma31/induction-step-2-to-128",
            induction_chain_check(),
        ));
        push!(check_from_result(
            "lemma31/64-bit-exponent-chain",
            conclusion_64_check(formulas),
        ));
        push!(check_from_result(
            "lemma31/counting-flagships",
            counting_flagships(formulas),
        ));
    }

    if thm43 {
        push!(check_from_result(
            "thm43/epsilon-window",
            epsilon_window(formulas),
        ));
        push!(check_from_result(
            "thm43/side-conditions",
            side_conditions_check(),
        ));
        push!(check_from_result(
            "thm43/witness-invariants",
            witness_invariants(),
        ));
        push!(check_from_result(
            "thm43/constructive-dominates-analytic",
            constructive_dominates(formulas),
        ));
        push!(check_from_result(
            "thm43/order-flagship",
            order_flagship(formulas),
        ));
    }

    if oracles {
        push!(check_from_result(
            "oracles/factorial-association",
            factorial_association(),
        ));
        push!(check_from_result(
            "oracles/sieve-against-trial-division",
            sieve_check(),
        ));
        push!(check_from_result(
            "oracles/factorial-sandwich",
            factorial_sandwich(formulas),
        ));
        push!(check_from_result(
            "oracles/gl-order-window",
            gl_order_window(formulas),
        ));
        push!(check_from_result(
            "oracles/darafsheh-attainment-n4",
            darafsheh_attainment(formulas, 4),
        ));
        push!(check_from_result(
            "oracles/landau-vs-construction",
            landau_vs_construction(),
        ));
        push!(check_from_result(
            "oracles/counting-raw-vs-exact-gl",
            counting_raw_vs_exact(),
        ));
        // the expensive sweep last
        push!(check_from_result(
            "oracles/darafsheh-attainment-n5",
            darafsheh_attainment(formulas, 5),
        ));
    }

    SuiteReport { checks }
}

fn closed_form_vs_literal_sum(formulas: &Formulas) -> Result<(bool, String)> {
    for n in 2u32..=64 {
        let mut sum = Natural::from(u64::from(n));
        for i in 1..n {
            sum += &Natural::from(u64::from(n - i)).times_pow2(u64::from(n - i));
        }
        if formulas.elementary_lower(n)? != sum {
            return Ok((false, format!("closed form diverges from the sum at n={n}")));
        }
    }
    Ok((
        true,
        "n + (n-2)2^n + 2 equals the literal sum for n=2..=64".into(),
    ))
}

fn power_exponent_vs_telescoping(formulas: &Formulas) -> Result<(bool, String)> {
    for n in [4u32, 8, 12, 16, 32, 64, 128] {
        let pow = formulas.elementary_power_exponent(n)?;
        let l = formulas.elementary_lower(n)?;
        if pow > l {
            return Ok((
                false,
                format!("power exponent exceeds the telescoping bound at n={n}"),
            ));
        }
    }
    Ok((true, "n^k <= L(n) on all sampled n".into()))
}

fn inequality_4_at_128(formulas: &Formulas) -> Result<(bool, String)> {
    let lhs = Natural::from(128u64).pow(19);
    let l = formulas.elementary_lower(128)?;
    let holds = lhs < l;
    let pow = formulas.elementary_power_exponent(128)?;
    let pinned = pow == Natural::pow2(133);
    Ok((
        holds && pinned,
        format!("128^19 = 2^133 < L(128); exponent reduction lands on 2^133: {pinned}"),
    ))
}

fn induction_chain_check() -> Result<(bool, String)> {
    let report = verify_induction_chain(128)?;
    let passed = report.checks.iter().filter(|c| c.passed).count();
    Ok((
        report.all_passed,
        format!("{passed}/{} induction steps hold", report.checks.len()),
    ))
}

fn conclusion_64_check(formulas: &Formulas) -> Result<(bool, String)> {
    // exponent-level reading of the 64-bit chain:
    // 2^(64^11) < 2^64! < 2^(64^13)
    let lower_ok = Natural::from(64u64).pow(11) <= formulas.elementary_lower(64)?;
    let upper_ok = formulas.elementary_upper(64)? < Natural::from(64u64).pow(13);
    Ok((
        lower_ok && upper_ok,
        format!("64^11 <= L(64): {lower_ok}; n*2^n < 64^13: {upper_ok}"),
    ))
}

fn counting_flagships(formulas: &Formulas) -> Result<(bool, String)> {
    let e128 = formulas.counting_bound(128, GroupKind::Alt, EngineKind::Elementary)?;
    let s128 = formulas.counting_bound(128, GroupKind::Alt, EngineKind::Stirling)?;
    let e64 = formulas.counting_bound(64, GroupKind::Alt, EngineKind::Elementary)?;
    let ok = e128 == 67 && s128 == 68 && e64 == 33;
    Ok((
        ok,
        format!("elementary(128)={e128} (want 67), stirling(128)={s128} (want 68), elementary(64)={e64} (want 33)"),
    ))
}

fn epsilon_window(formulas: &Formulas) -> Result<(bool, String)> {
    let eps = formulas.epsilon(128);
    let lo_bound = DyadicRational::from_u64(169).div_ceil(&DyadicRational::from_u64(100), 96)?;
    let hi_bound = DyadicRational::from_u64(170).div_floor(&DyadicRational::from_u64(100), 96)?;
    let ok = eps.lo() > &lo_bound && eps.hi() < &hi_bound;
    Ok((
        ok,
        format!(
            "epsilon in [{:.6}, {:.6}], window (1.69, 1.70)",
            eps.lo().to_f64(),
            eps.hi().to_f64()
        ),
    ))
}

fn side_conditions_check() -> Result<(bool, String)> {
    let report = verify_theorem43_side_conditions(DEFAULT_PRECISION)?;
    let detail = report
        .conditions
        .iter()
        .map(|c| format!("{}: {}", c.name, if c.passed { "pass" } else { "FAIL" }))
        .collect::<Vec<_>>()
        .join("; ");
    Ok((report.all_passed, detail))
}

fn witness_invariants() -> Result<(bool, String)> {
    let table = sieve(2048);
    for points in 7u64..=1000 {
        let w = construct_even_order_element(points, 32)?;
        let (order, parity) = permutation_order_and_parity(&w.structure);
        if parity != Parity::Even {
            return Ok((false, format!("odd parity at {points} points")));
        }
        if order != w.order {
            return Ok((false, format!("lcm route disagrees at {points} points")));
        }
        if w.structure.moved_points() > points {
            return Ok((false, format!("witness overflows {points} points")));
        }
        let z = w.largest_prime.expect("witness uses at least the 3-cycle");
        let next = table
            .odd_primes()
            .find(|&p| p > z)
            .expect("prime table extends past z");
        if w.structure.moved_points() + next <= points {
            return Ok((false, format!("z={z} not maximal at {points} points")));
        }
    }
    Ok((
        true,
        "parity, order, footprint, maximality hold for 7..=1000 points".into(),
    ))
}

fn constructive_dominates(formulas: &Formulas) -> Result<(bool, String)> {
    for nu in 7u32..=14 {
        let points_u = 1u64 << nu;
        let w = construct_even_order_element(points_u, DEFAULT_PRECISION)?;
        let points = Natural::from(points_u);
        let dominates = refine_to_decision(
            DEFAULT_PRECISION,
            "constructed order vs analytic bound",
            |bits| {
                let lhs = log2_of_natural(&w.order, bits)?;
                let rhs = formulas.dixon_mortimer(&points, bits)?;
                Ok(certified_strictly_greater(&lhs, &rhs))
            },
        )?;
        if !dominates {
            return Ok((false, format!("construction falls short at 2^{nu} points")));
        }
    }
    Ok((
        true,
        "constructed order exceeds the analytic bound for 2^7..=2^14".into(),
    ))
}

fn order_flagship(formulas: &Formulas) -> Result<(bool, String)> {
    let m = formulas.order_bound_analytic(128)?;
    Ok((m == 67, format!("order-analytic(128) = {m} (want 67)")))
}

fn factorial_association() -> Result<(bool, String)> {
    let mut acc = Natural::one();
    for v in 2u64..=16 {
        acc *= v;
    }
    let ok = factorial_exact(16)? == acc && acc == Natural::from(20_922_789_888_000u64);
    Ok((ok, "16! agrees across association orders".into()))
}

fn sieve_check() -> Result<(bool, String)> {
    let table = sieve(1_000_000);
    if table.len() != 78_498 {
        return Ok((false, format!("pi(10^6) = {} (want 78498)", table.len())));
    }
    let trial: Vec<u64> = (2u64..=1000)
        .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect();
    let prefix: Vec<u64> = table
        .primes()
        .iter()
        .copied()
        .take_while(|&p| p <= 1000)
        .collect();
    let ok = prefix == trial;
    Ok((
        ok,
        "pi(10^6) = 78498; primes to 1000 match trial division".into(),
    ))
}

fn factorial_sandwich(formulas: &Formulas) -> Result<(bool, String)> {
    for n in 2u32..=12 {
        let exact_fact = factorial_exact(1u64 << n)?;
        let exact = log2_of_natural(&exact_fact, 96)?;
        let lower = DyadicRational::from_natural(&formulas.elementary_lower(n)?);
        let power = formulas.elementary_power_exponent(n)?;
        let upper = DyadicRational::from_natural(&formulas.elementary_upper(n)?);
        if exact.lo() <= &lower {
            return Ok((false, format!("telescoping lower bound fails at n={n}")));
        }
        if DyadicRational::from_natural(&power) > lower {
            return Ok((false, format!("power exponent above L at n={n}")));
        }
        if exact.hi() >= &upper {
            return Ok((false, format!("generic upper bound fails at n={n}")));
        }
        // tightness: the upper exponent stays within a factor two of truth
        if upper >= exact.lo().scale_pow2(1) {
            return Ok((false, format!("upper bound slack exceeds 2x at n={n}")));
        }
        let domain = Natural::pow2(u64::from(n));
        let stirling_lo = formulas.stirling_lower(&domain, 96)?;
        if certified_strictly_greater(&exact, &stirling_lo) != Some(true) {
            return Ok((false, format!("Stirling lower bound fails at n={n}")));
        }
        let stirling = crate::factorial_bounds::stirling_log2_factorial_bounds(&domain, 96)?;
        if exact.hi() >= stirling.hi() {
            return Ok((false, format!("Stirling upper bound fails at n={n}")));
        }
    }
    Ok((
        true,
        "exact log2(2^n!) strictly inside both enclosures, n=2..=12".into(),
    ))
}

fn gl_order_window(formulas: &Formulas) -> Result<(bool, String)> {
    for dim in 1u64..=64 {
        let exact = gl_order_exact(dim as u32)?;
        let upper = formulas.gl_upper_square_exponent(dim);
        let window_holds = if exact.is_one() {
            // |GL(1,2)| = 1: log2 = 0; need 0 < upper and 0 > upper - 2
            let zero = Log2Interval::point_u64(0);
            let up = Log2Interval::point_natural(&upper);
            certified_strictly_greater(&up, &zero) == Some(true)
                && certified_strictly_greater(&zero, &up.sub(&Log2Interval::point_u64(2)))
                    == Some(true)
        } else {
            refine_to_decision(DEFAULT_PRECISION, "GL order window", |bits| {
                let log_iv = log2_of_natural(&exact, bits)?;
                let up = Log2Interval::point_natural(&upper);
                let low = up.sub(&Log2Interval::point_u64(2));
                let above = certified_strictly_greater(&up, &log_iv);
                let below = certified_strictly_greater(&log_iv, &low);
                Ok(match (above, below) {
                    (Some(a), Some(b)) => Some(a && b),
                    _ => None,
                })
            })?
        };
        if !window_holds {
            return Ok((
                false,
                format!("|GL({dim},2)| escapes (2^(E-2), 2^E) with E={upper}"),
            ));
        }
    }
    Ok((true, "2^(N^2-2) < |GL(N,2)| < 2^(N^2) for N=1..=64".into()))
}

fn darafsheh_attainment(formulas: &Formulas, dim: u32) -> Result<(bool, String)> {
    let enumerated = gl_max_even_order_exhaustive(dim)?;
    let formula = formulas.darafsheh_exact(dim)?;
    let ok = enumerated == formula;
    Ok((
        ok,
        format!("GL({dim},2) exhaustive max even order {enumerated}, formula {formula}"),
    ))
}

fn landau_vs_construction() -> Result<(bool, String)> {
    let constraint = PartitionConstraint {
        require_even_parity: true,
        require_even_order: true,
    };
    for points in 7u32..=40 {
        let oracle = landau_constrained_exact(points, constraint)?;
        let witness = construct_even_order_element(u64::from(points), 32)?;
        if oracle < witness.order {
            return Ok((
                false,
                format!("oracle maximum below the constructed order at {points} points"),
            ));
        }
    }
    Ok((
        true,
        "constrained Landau maximum >= constructed order, 7..=40 points".into(),
    ))
}

fn counting_raw_vs_exact() -> Result<(bool, String)> {
    for n in [4u32, 5] {
        let engine = FactorialBoundEngine::new(EngineKind::Exact, DEFAULT_PRECISION);
        let n_min = counting_dimension_lower_bound_raw(n, GroupKind::Alt, &engine)?;
        let n_min = n_min.to_u64().expect("desk-scale dimension");
        let group = factorial_exact(1u64 << n)?;
        let half = Natural::from(group.as_biguint() >> 1);
        for dim in 1..n_min {
            if half <= gl_order_exact(dim as u32)? {
                return Ok((
                    false,
                    format!("engine ruled out N={dim} at n={n} but |Alt| <= |GL| exactly"),
                ));
            }
        }
    }
    Ok((
        true,
        "every raw rule-out is confirmed by exact |Alt| > |GL(N,2)|".into(),
    ))
}
