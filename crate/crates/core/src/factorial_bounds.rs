//! Counting engine: certified bounds on `log2(2^n!)`, exact and bounded
//! `|GL(N, 2)|`, and the dimension lower bound they force.
//!
//! A dimension `m` is ruled out exactly when the engine's certified lower
//! bound on `log2|G|` strictly exceeds `2^(2m)`, the exponent bound
//! `|GL(F^(2^m))| < 2^((2^m)^2)`. Everything is decided by comparisons of
//! exact dyadics; overlapping enclosures trigger precision refinement and
//! never count as a verdict in either direction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{
    certified_strictly_greater, ln2_interval, log2_e_interval, log2_of_natural, refine_to_decision,
    DyadicRational, Log2Interval, Natural,
};

/// Which permutation group on F2^n is being embedded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    /// Alternating group; `|Alt(F2^n)| = 2^n! / 2`.
    Alt,
    /// Symmetric group; `|Sym(F2^n)| = 2^n!`.
    Sym,
}

impl GroupKind {
    /// `log2|G| = log2(2^n!) - offset`.
    fn log2_offset(self) -> u64 {
        match self {
            GroupKind::Alt => 1,
            GroupKind::Sym => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::Alt => "alt",
            GroupKind::Sym => "sym",
        }
    }
}

impl std::fmt::Display for GroupKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Strategy for bounding `log2(2^n!)` from below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EngineKind {
    /// Telescoping/counting argument; integer arithmetic only.
    Elementary,
    /// Finite Stirling inequality; needs certified log2(e).
    Stirling,
    /// Exact factorial; only at desk scale (2^n <= 2^20).
    Exact,
}

/// Engine selection plus the fractional precision its enclosures start at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorialBoundEngine {
    pub kind: EngineKind,
    pub precision: u32,
}

impl FactorialBoundEngine {
    pub fn new(kind: EngineKind, precision: u32) -> Self {
        FactorialBoundEngine { kind, precision }
    }
}

/// One certified rule-out: at dimension `2^m`, the lower bound on
/// `log2|G|` (its enclosure's lower endpoint) strictly exceeded the upper
/// bound on `log2|GL|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuledOutDimension {
    pub m: u32,
    pub lhs_log2_lo: DyadicRational,
    pub rhs_log2_hi: DyadicRational,
}

/// Result of a dimension scan: every `m < m_min` was ruled out by the
/// recorded strict comparison, and `m_min` itself certifiably was not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionBound {
    pub m_min: u32,
    pub evidence: Vec<RuledOutDimension>,
}

/// Telescoping lower exponent: `log2(2^n!) > L(n) = n + (n-2) 2^n + 2`.
///
/// `L` is the closed form of `n + sum_{i=1}^{n-1} 2^(n-i) (n-i)`, the
/// exponent left after peeling the factors of `2^n!` down to `1!` while
/// paying at most `n-i` halvings per factor at stage `i`.
pub fn elementary_lower_log2_factorial_pow2(n: u32) -> Result<Natural> {
    if n < 2 {
        return Err(Error::domain(format!(
            "telescoping bound needs n >= 2, got {n}"
        )));
    }
    // n + (n-2)*2^n + 2
    let term = Natural::from(u64::from(n) - 2).times_pow2(u64::from(n));
    Ok(&(&term + u64::from(n)) + 2u64)
}

/// Largest `k` with `n^k <= L(n)`, together with `n^k` itself.
///
/// `n^k` is the power-of-`n` exponent certified by the telescoping bound:
/// `2^(n^k) <= 2^L < 2^n!`. It is deliberately weaker than `L`; it is the
/// exponent the counting comparison scans with, and is what makes the
/// n=128 result land at `m >= 67` (via `128^19 = 2^133`) rather than the
/// sharper value the raw `L` would give.
pub fn elementary_power_exponent(n: u32) -> Result<(u32, Natural)> {
    let l = elementary_lower_log2_factorial_pow2(n)?;
    let base = Natural::from(u64::from(n));
    let mut k = 1u32;
    let mut pow = base.clone();
    loop {
        let next = &pow * &base;
        if next > l {
            return Ok((k, pow));
        }
        pow = next;
        k += 1;
    }
}

/// Generic upper exponent: `log2(2^n!) <= n 2^n` (each of the `2^n`
/// factors is at most `2^n`).
pub fn elementary_upper_log2_factorial_pow2(n: u32) -> Result<Natural> {
    if n < 2 {
        return Err(Error::domain(format!(
            "factorial upper bound needs n >= 2, got {n}"
        )));
    }
    Ok(Natural::from(u64::from(n)).times_pow2(u64::from(n)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionCheck {
    pub n: u32,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionChainReport {
    pub checks: Vec<InductionCheck>,
    pub all_passed: bool,
}

/// Machine-checks the induction step `n^20 + 2^n n + 2^n < (n+1)^20` for
/// every `2 <= n <= n_max`, in exact integer arithmetic.
///
/// This is the step that closes the upper bound `2^n! < 2^(n^20)` by
/// induction; it is only checked (and only claimed) for `n_max <= 128`.
pub fn verify_induction_chain(n_max: u32) -> Result<InductionChainReport> {
    if !(2..=128).contains(&n_max) {
        return Err(Error::domain(format!(
            "induction step is only established for 2 <= n <= 128, got {n_max}"
        )));
    }
    let mut checks = Vec::with_capacity(n_max as usize - 1);
    let mut all = true;
    for n in 2..=n_max {
        let lhs = {
            let n_nat = Natural::from(u64::from(n));
            let pow20 = n_nat.pow(20);
            let two_n = Natural::pow2(u64::from(n));
            &(&pow20 + &(&two_n * u64::from(n))) + &two_n
        };
        let rhs = Natural::from(u64::from(n) + 1).pow(20);
        let passed = lhs < rhs;
        all &= passed;
        checks.push(InductionCheck { n, passed });
    }
    Ok(InductionChainReport {
        checks,
        all_passed: all,
    })
}

/// Finite Stirling enclosure of `log2(N!)`:
/// `[N log2 N - N log2 e,  N log2 N - N log2 e + log2 N]`, outward rounded.
///
/// The upper form `N! <= N (N/e)^N` only holds from `N = 7` on (it fails
/// for 2..=6, e.g. 6! = 720 > 694.2); below that the upper endpoint falls
/// back to an enclosure of the exact value so the containment contract
/// survives at desk scale.
pub fn stirling_log2_factorial_bounds(n: &Natural, frac_bits: u32) -> Result<Log2Interval> {
    if n < &Natural::from(2u64) {
        return Err(Error::domain("Stirling bounds need N >= 2"));
    }
    let log2_n = log2_of_natural(n, frac_bits)?;
    let diff = stirling_lower_expression(n, frac_bits)?;
    let lo = diff.lo().clone();
    let hi = if n >= &Natural::from(7u64) {
        diff.add(&log2_n).hi().clone()
    } else {
        // one ulp of padding keeps the exact value strictly interior
        let small = n.to_u64().expect("N < 7 fits u64");
        log2_of_natural(&Natural::factorial(small)?, frac_bits)?
            .hi()
            .add(&DyadicRational::new(1.into(), -i64::from(frac_bits)))
    };
    Ok(Log2Interval::new(lo, hi))
}

/// Enclosure of the Stirling lower expression `N log2 N - N log2 e`.
pub(crate) fn stirling_lower_expression(n: &Natural, frac_bits: u32) -> Result<Log2Interval> {
    let log2_n = log2_of_natural(n, frac_bits)?;
    let log2_e = log2_e_interval(frac_bits);
    Ok(log2_n.mul_scalar(n).sub(&log2_e.mul_scalar(n)))
}

/// Certified enclosure of `log2|G|` for `G` = Alt or Sym on F2^n, by the
/// chosen engine.
pub fn group_log2_order(
    n: u32,
    kind: GroupKind,
    engine: &FactorialBoundEngine,
) -> Result<Log2Interval> {
    if n < 2 {
        return Err(Error::domain(format!(
            "group order bounds need n >= 2, got {n}"
        )));
    }
    let offset = Log2Interval::point_u64(kind.log2_offset());
    let sym = match engine.kind {
        EngineKind::Elementary => {
            let lo = elementary_lower_log2_factorial_pow2(n)?;
            let hi = elementary_upper_log2_factorial_pow2(n)?;
            Log2Interval::new(
                DyadicRational::from_natural(&lo),
                DyadicRational::from_natural(&hi),
            )
        }
        EngineKind::Stirling => {
            let domain = Natural::pow2(u64::from(n));
            stirling_log2_factorial_bounds(&domain, engine.precision)?
        }
        EngineKind::Exact => {
            let fact = exact_domain_factorial(n)?;
            log2_of_natural(&fact, engine.precision)?
        }
    };
    Ok(sym.sub(&offset))
}

/// `(2^n)!`, gated on the exact-scale cap `2^n <= 2^20`.
fn exact_domain_factorial(n: u32) -> Result<Natural> {
    if n > 20 {
        return Err(Error::capability(format!(
            "exact engine needs 2^n <= 2^20; 2^{n} is out of reach"
        )));
    }
    Natural::factorial(1u64 << n)
}

/// Exact `|GL(N, 2)| = prod_{h=0}^{N-1} (2^N - 2^h)`.
pub fn gl_order_exact(dim: u32) -> Result<Natural> {
    if dim < 1 {
        return Err(Error::domain("GL order needs N >= 1"));
    }
    if dim > 512 {
        return Err(Error::capability(format!(
            "exact |GL({dim}, 2)| is out of the exact range (N <= 512); use gl_log2_order_bounds"
        )));
    }
    let two_n = Natural::pow2(u64::from(dim));
    let mut acc = Natural::one();
    for h in 0..dim {
        let factor = two_n.checked_sub(&Natural::pow2(u64::from(h)))?;
        acc *= &factor;
    }
    Ok(acc)
}

/// `log2|GL(N, 2)|` window `[N^2 - 2, N^2]` for any `N >= 1`.
///
/// Upper: every factor `2^N - 2^h < 2^N`. Lower: the order is
/// `2^(N^2) prod_{k=1}^{N} (1 - 2^-k)` and the infinite product exceeds
/// 1/4, so the order exceeds `2^(N^2 - 2)`.
pub fn gl_log2_order_bounds(dim: &Natural) -> Result<Log2Interval> {
    if dim.is_zero() {
        return Err(Error::domain("GL order bounds need N >= 1"));
    }
    let n_sq = dim * dim;
    let hi = DyadicRational::from_natural(&n_sq);
    let lo = hi.sub(&DyadicRational::from_u64(2));
    Ok(Log2Interval::new(lo, hi))
}

/// Upper-bound exponent used on the GL side of the counting comparison:
/// `log2|GL(F^(2^m))| < (2^m)^2 = 2^(2m)`.
pub(crate) fn gl_counting_exponent(m: u32) -> Natural {
    Natural::pow2(2 * u64::from(m))
}

/// Shared scan: walk `m` upward, rule out while the lower-bound expression
/// certifiably exceeds the ceiling, stop at the first `m` where the
/// non-exceedance is itself certified. Precision doubles on overlap, up to
/// the cap, per decision.
pub(crate) fn scan_dimensions(
    context: &str,
    start_precision: u32,
    start_m: u32,
    max_m: u32,
    mut lhs: impl FnMut(u32) -> Result<Log2Interval>,
    mut rhs: impl FnMut(u32, u32) -> Result<Log2Interval>,
) -> Result<DimensionBound> {
    let mut evidence = Vec::new();
    let mut m = start_m;
    while m <= max_m {
        let ctx = format!("{context}, candidate dimension 2^{m}");
        let verdict = refine_to_decision(start_precision, &ctx, |bits| {
            let lower = lhs(bits)?;
            let ceiling = rhs(m, bits)?;
            Ok(certified_strictly_greater(&lower, &ceiling)
                .map(|ruled_out| (ruled_out, lower.lo().clone(), ceiling.hi().clone())))
        })?;
        match verdict {
            (true, lhs_lo, rhs_hi) => {
                evidence.push(RuledOutDimension {
                    m,
                    lhs_log2_lo: lhs_lo,
                    rhs_log2_hi: rhs_hi,
                });
                m += 1;
            }
            (false, _, _) => {
                return Ok(DimensionBound { m_min: m, evidence });
            }
        }
    }
    Err(Error::capability(format!(
        "{context}: dimension scan exceeded its sanity cap 2^{max_m}"
    )))
}

/// Smallest `m` (with `W = F^(2^m)`) that the counting argument cannot
/// rule out: every `m' < m_min` satisfies the certified strict comparison
/// `lower(log2|G|) > 2^(2m')`.
pub fn counting_dimension_lower_bound(
    n: u32,
    kind: GroupKind,
    engine: &FactorialBoundEngine,
) -> Result<DimensionBound> {
    if n < 4 {
        return Err(Error::domain(format!(
            "counting bound needs n >= 4, got {n}"
        )));
    }
    let expr = counting_lower_expression(n, kind, engine)?;
    let context = format!("counting bound, n={n}, {kind}");
    scan_dimensions(
        &context,
        engine.precision,
        1,
        n + 32,
        |bits| expr.eval(bits),
        |m, _| Ok(Log2Interval::point_natural(&gl_counting_exponent(m))),
    )
}

/// Raw-dimension variant: smallest integer `N >= 1` (not restricted to
/// powers of two) with `lower(log2|G|) > N^2` no longer certified. Used by
/// the oracle cross-checks against exact `|GL(N, 2)|`.
pub fn counting_dimension_lower_bound_raw(
    n: u32,
    kind: GroupKind,
    engine: &FactorialBoundEngine,
) -> Result<Natural> {
    if n < 4 {
        return Err(Error::domain(format!(
            "counting bound needs n >= 4, got {n}"
        )));
    }
    let expr = counting_lower_expression(n, kind, engine)?;
    let context = format!("raw counting bound, n={n}, {kind}");
    let ruled_out = |dim: &Natural| -> Result<bool> {
        let sq = Log2Interval::point_natural(&(dim * dim));
        refine_to_decision(engine.precision, &context, |bits| {
            Ok(certified_strictly_greater(&expr.eval(bits)?, &sq))
        })
    };

    // Exponential stretch to bracket the boundary, then binary search.
    let mut lo = Natural::one(); // invariant from first check: ruled out
    if !ruled_out(&lo)? {
        return Ok(lo);
    }
    let mut hi = Natural::from(2u64);
    while ruled_out(&hi)? {
        lo = hi.clone();
        hi = &hi * 2u64;
    }
    // lo ruled out, hi not: narrow down
    while (&lo + 1u64) < hi {
        let mid = Natural::from((lo.as_biguint() + hi.as_biguint()) >> 1);
        if ruled_out(&mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(hi)
}

/// Precision-indexed enclosure of the engine's certified lower bound on
/// `log2|G|`.
pub(crate) enum CountingLowerExpression {
    Point(Log2Interval),
    Stirling { domain: Natural, offset: u64 },
    Exact { factorial: Natural, offset: u64 },
}

impl CountingLowerExpression {
    pub(crate) fn eval(&self, frac_bits: u32) -> Result<Log2Interval> {
        match self {
            CountingLowerExpression::Point(iv) => Ok(iv.clone()),
            CountingLowerExpression::Stirling { domain, offset } => {
                Ok(stirling_lower_expression(domain, frac_bits)?
                    .sub(&Log2Interval::point_u64(*offset)))
            }
            CountingLowerExpression::Exact { factorial, offset } => {
                Ok(log2_of_natural(factorial, frac_bits)?.sub(&Log2Interval::point_u64(*offset)))
            }
        }
    }
}

pub(crate) fn counting_lower_expression(
    n: u32,
    kind: GroupKind,
    engine: &FactorialBoundEngine,
) -> Result<CountingLowerExpression> {
    let offset = kind.log2_offset();
    Ok(match engine.kind {
        EngineKind::Elementary => {
            let (_, pow) = elementary_power_exponent(n)?;
            let exponent = pow.checked_sub(&Natural::from(offset))?;
            CountingLowerExpression::Point(Log2Interval::point_natural(&exponent))
        }
        EngineKind::Stirling => CountingLowerExpression::Stirling {
            domain: Natural::pow2(u64::from(n)),
            offset,
        },
        EngineKind::Exact => CountingLowerExpression::Exact {
            factorial: exact_domain_factorial(n)?,
            offset,
        },
    })
}

/// Enclosure of `ln(x)` for a natural `x >= 1`: `log2(x) * ln 2`.
pub(crate) fn ln_of_natural(x: &Natural, frac_bits: u32) -> Result<Log2Interval> {
    log2_of_natural(x, frac_bits)?.mul_pos(&ln2_interval(frac_bits))
}
