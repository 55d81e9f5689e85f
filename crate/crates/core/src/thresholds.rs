//! Closed-form edge thresholds for perfect matchings, perfect `K_r`-packings
//! and equitable colourings, together with the Turán edge counts they are
//! built from.
//!
//! Everything here is exact integer arithmetic with overflow checks, except
//! [`appendix_h`] which is a real-valued bound.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{ensure_range, Error, Result};

/// Which argument of a two-term `min`/`max` attains the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    First,
    Second,
    Tie,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ThresholdValue {
    pub value: u64,
    pub branch: Branch,
    /// Both arguments of the `min`/`max`, in order.
    pub terms: [u64; 2],
}

impl ThresholdValue {
    fn max_of(a: u64, b: u64) -> Self {
        let (value, branch) = match a.cmp(&b) {
            std::cmp::Ordering::Greater => (a, Branch::First),
            std::cmp::Ordering::Less => (b, Branch::Second),
            std::cmp::Ordering::Equal => (a, Branch::Tie),
        };
        ThresholdValue { value, branch, terms: [a, b] }
    }

    fn min_of(a: u64, b: u64) -> Self {
        let (value, branch) = match a.cmp(&b) {
            std::cmp::Ordering::Less => (a, Branch::First),
            std::cmp::Ordering::Greater => (b, Branch::Second),
            std::cmp::Ordering::Equal => (a, Branch::Tie),
        };
        ThresholdValue { value, branch, terms: [a, b] }
    }
}

fn mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

fn add(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

/// `C(m, 2)`.
pub fn binom2(m: u64) -> Result<u64> {
    if m < 2 {
        return Ok(0);
    }
    // one of m, m-1 is even
    if m.is_multiple_of(2) {
        mul(m / 2, m - 1, "C(m,2)")
    } else {
        mul(m, (m - 1) / 2, "C(m,2)")
    }
}

/// Exact `e(T(m, s))` from the class sizes: with `m = qs + a`, `0 <= a < s`,
/// this is `C(m,2) - a*C(q+1,2) - (s-a)*C(q,2)`.
pub fn turan_edges(m: u64, s: u64) -> Result<u64> {
    ensure_range!(s >= 1, "Turán graph needs s >= 1, got s={s}");
    Ok(binom2(m)? - turan_complement_edges(m, s)?)
}

/// Exact `e(complement of T(m, s))`: the edges inside the near-equal classes.
pub fn turan_complement_edges(m: u64, s: u64) -> Result<u64> {
    ensure_range!(s >= 1, "Turán graph needs s >= 1, got s={s}");
    let (q, a) = (m / s, m % s);
    add(
        mul(a, binom2(q + 1)?, "e(T complement)")?,
        mul(s - a, binom2(q)?, "e(T complement)")?,
        "e(T complement)",
    )
}

/// The two inequalities of the Turán bound, checked exactly:
/// `e(T(m,s)) <= (1 - 1/s) m^2 / 2` and
/// `e(complement T(m,s)) >= m^2/(2s) - m/2`.
pub fn turan_bound_holds(m: u64, s: u64) -> Result<bool> {
    let e = turan_edges(m, s)? as u128;
    let ec = turan_complement_edges(m, s)? as u128;
    let (m, s) = (m as u128, s as u128);
    let upper = 2 * s * e <= (s - 1) * m * m;
    let lower = 2 * s * ec + s * m >= m * m;
    Ok(upper && lower)
}

/// `h(n, d) = C(n-d-1, 2) + d(d+1)`, the edge count of the matching-free
/// graph `H(n, d)`.
pub fn h(n: u64, d: u64) -> Result<u64> {
    ensure_range!(n.is_multiple_of(2), "h(n,d) needs even n, got n={n}");
    ensure_range!(2 * d < n, "h(n,d) needs d < n/2, got n={n}, d={d}");
    add(binom2(n - d - 1)?, mul(d, d + 1, "h(n,d)")?, "h(n,d)")
}

/// Largest edge count of an `n`-vertex graph with minimum degree at least
/// `d` and no perfect matching: `max{h(n,d), h(n, n/2-1)}`.
pub fn f2(n: u64, d: u64) -> Result<ThresholdValue> {
    ensure_range!(n.is_multiple_of(2) && n >= 4, "f2 needs even n >= 4, got n={n}");
    ensure_range!(d >= 1 && 2 * d < n, "f2 needs 1 <= d < n/2, got n={n}, d={d}");
    Ok(ThresholdValue::max_of(h(n, d)?, h(n, n / 2 - 1)?))
}

fn check_nr(n: u64, r: u64) -> Result<()> {
    ensure_range!(r >= 3, "need r >= 3, got r={r}");
    ensure_range!(n.is_multiple_of(r) && n > 0, "need r | n with n > 0, got n={n}, r={r}");
    Ok(())
}

/// Minimum-degree range `r-1 <= D <= (r-1)n/r - 1` of the packing threshold.
pub fn g_range(n: u64, r: u64) -> RangeInclusive<u64> {
    r.saturating_sub(1)..=(r.saturating_sub(1) * (n / r.max(1))).saturating_sub(1)
}

/// Maximum-degree range `n/r <= D <= n-r` of the colouring threshold.
pub fn f_range(n: u64, r: u64) -> RangeInclusive<u64> {
    (n / r.max(1))..=n.saturating_sub(r)
}

/// `g(n,r,D) = max{C(n,2) - C(n/r+1,2), D(n-D) + C(n-1-D,2) + e(T(D,r-2))}`:
/// every graph with `delta >= D` and more than `g` edges has a perfect
/// `K_r`-packing.
pub fn g(n: u64, r: u64, d: u64) -> Result<ThresholdValue> {
    check_nr(n, r)?;
    ensure_range!(
        g_range(n, r).contains(&d),
        "g needs r-1 <= D <= (r-1)n/r-1, got n={n}, r={r}, D={d}"
    );
    let first = binom2(n)? - binom2(n / r + 1)?;
    let second = add(
        add(mul(d, n - d, "g")?, binom2(n - 1 - d)?, "g")?,
        turan_edges(d, r - 2)?,
        "g",
    )?;
    Ok(ThresholdValue::max_of(first, second))
}

/// `f(n,r,D) = min{C(n/r+1,2), D + e(complement T(n-D-1, r-2))}`: every
/// graph with `Delta <= D` and fewer than `f` edges has an equitable
/// `n/r`-colouring.
pub fn f(n: u64, r: u64, d: u64) -> Result<ThresholdValue> {
    check_nr(n, r)?;
    ensure_range!(
        f_range(n, r).contains(&d),
        "f needs n/r <= D <= n-r, got n={n}, r={r}, D={d}"
    );
    let first = binom2(n / r + 1)?;
    let second = add(d, turan_complement_edges(n - d - 1, r - 2)?, "f")?;
    Ok(ThresholdValue::min_of(first, second))
}

/// `g(n,r,D) + f(n,r,n-1-D) == C(n,2)` for `D` in the `g` range.
pub fn duality_check(n: u64, r: u64, d: u64) -> Result<bool> {
    let gv = g(n, r, d)?;
    let fv = f(n, r, n - 1 - d)?;
    Ok(add(gv.value, fv.value, "duality")? == binom2(n)?)
}

/// True iff `f(n,r,D)` is attained by `C(n/r+1, 2)` (first branch or tie).
pub fn first_branch_regime(n: u64, r: u64, d: u64) -> Result<bool> {
    Ok(f(n, r, d)?.branch != Branch::Second)
}

/// `r >= 3`, `r | n >= 2r` and `n/r <= D <= n/(r-1)`: the regime where the
/// clique construction alone is extremal for every admissible `D`.
pub fn low_degree_hypothesis(n: u64, r: u64, d: u64) -> bool {
    r >= 3 && n.is_multiple_of(r) && n >= 2 * r && d * r >= n && d * (r - 1) <= n
}

/// `r >= 4`, `r | n >= 3r` and `n/r <= D < (n+r)/(r-1)`.
pub fn extended_low_degree_hypothesis(n: u64, r: u64, d: u64) -> bool {
    r >= 4 && n.is_multiple_of(r) && n >= 3 * r && d * r >= n && d * (r - 1) < n + r
}

fn check_appendix(n: u64, r: u64) -> Result<()> {
    check_nr(n, r)?;
    ensure_range!(n >= 2 * r, "need n >= 2r, got n={n}, r={r}");
    Ok(())
}

/// `x + (n-x-1)^2 / (2(r-2)) - (n-x-1)/2`, the real relaxation of
/// `D + e(complement T(n-D-1, r-2))`.
pub fn appendix_h(n: u64, r: u64, x: f64) -> f64 {
    let (n, r) = (n as f64, r as f64);
    let t = n - x - 1.0;
    x + t * t / (2.0 * (r - 2.0)) - t / 2.0
}

/// Grid step for [`appendix_h_monotone`].
pub const APPENDIX_GRID_STEP: f64 = 1.0 / 16.0;

/// Samples [`appendix_h`] on `[0, n/(r-1)]` (and `[0, (n+r)/(r-1)]` when
/// `n >= 3r`) with step 1/16 and checks that successive values strictly
/// decrease.
pub fn appendix_h_monotone(n: u64, r: u64) -> Result<bool> {
    check_appendix(n, r)?;
    let mut upper = n as f64 / (r - 1) as f64;
    if n >= 3 * r {
        upper = (n + r) as f64 / (r - 1) as f64;
    }
    let mut xs: Vec<f64> = (0..)
        .map(|i| i as f64 * APPENDIX_GRID_STEP)
        .take_while(|x| *x < upper)
        .collect();
    xs.push(upper);
    let values: Vec<f64> = xs.iter().map(|&x| appendix_h(n, r, x)).collect();
    Ok(values.windows(2).all(|w| w[1] < w[0]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_edge_examples() {
        assert_eq!(turan_edges(6, 3).unwrap(), 12);
        assert_eq!(turan_edges(7, 3).unwrap(), 16);
        for k in 0..50 {
            assert_eq!(turan_edges(k, 1).unwrap(), 0);
        }
        assert_eq!(turan_edges(3, 5).unwrap(), 3);
        assert!(turan_edges(3, 0).is_err());
        // bound is tight when s | m: 2*3*12 == 2*36
        assert!(turan_bound_holds(6, 3).unwrap());
        assert_eq!(2 * 3 * turan_edges(6, 3).unwrap(), 2 * 36);
    }

    #[test]
    fn h_examples() {
        assert_eq!(h(6, 0).unwrap(), 10);
        assert_eq!(h(6, 1).unwrap(), 8);
        assert_eq!(h(6, 2).unwrap(), 9);
        assert!(h(6, 3).is_err());
        assert!(h(7, 1).is_err());
    }

    #[test]
    fn f2_examples() {
        let v = f2(6, 1).unwrap();
        assert_eq!((v.value, v.branch), (9, Branch::Second));
        let v = f2(6, 2).unwrap();
        assert_eq!((v.value, v.branch), (9, Branch::Tie));
        let v = f2(4, 1).unwrap();
        assert_eq!((v.value, v.branch), (3, Branch::Tie));
        assert!(f2(6, 0).is_err());
        assert!(f2(2, 1).is_err());
    }

    #[test]
    fn g_examples() {
        let v = g(12, 3, 2).unwrap();
        assert_eq!((v.value, v.branch, v.terms), (56, Branch::Tie, [56, 56]));
        let v = g(6, 3, 3).unwrap();
        assert_eq!((v.value, v.branch, v.terms), (12, Branch::First, [12, 10]));
        let v = g(24, 3, 2).unwrap();
        assert_eq!((v.value, v.branch, v.terms), (254, Branch::Second, [240, 254]));
        assert!(g(12, 3, 1).is_err());
        assert!(g(12, 3, 8).is_err());
        assert!(g(13, 3, 4).is_err());
        assert!(g(12, 2, 1).is_err());
    }

    #[test]
    fn f_examples() {
        let v = f(6, 3, 2).unwrap();
        assert_eq!((v.value, v.branch, v.terms), (3, Branch::First, [3, 5]));
        let v = f(12, 3, 4).unwrap();
        assert_eq!((v.value, v.branch, v.terms), (10, Branch::First, [10, 25]));
        let v = f(24, 3, 21).unwrap();
        assert_eq!((v.value, v.branch, v.terms), (22, Branch::Second, [36, 22]));
        assert!(f(12, 3, 3).is_err());
        assert!(f(12, 3, 10).is_err());
    }

    #[test]
    fn duality_examples() {
        assert_eq!(g(12, 3, 7).unwrap().value, 56);
        assert!(duality_check(12, 3, 7).unwrap());
        assert!(duality_check(24, 3, 2).unwrap());
        assert_eq!(g(6, 3, 2).unwrap().value, 12);
        assert_eq!(f(6, 3, 3).unwrap().value, 3);
        assert!(duality_check(6, 3, 2).unwrap());
    }

    #[test]
    fn first_branch_examples() {
        assert!(first_branch_regime(12, 3, 4).unwrap());
        assert!(!first_branch_regime(24, 3, 21).unwrap());
        assert!(extended_low_degree_hypothesis(12, 4, 3));
        assert!(first_branch_regime(12, 4, 3).unwrap());
        assert!(first_branch_regime(12, 3, 1).is_err());
    }

    #[test]
    fn appendix_examples() {
        let (n, r) = (12u64, 3u64);
        let at0 = appendix_h(n, r, 0.0);
        let expect = (11.0f64 * 11.0) / 2.0 - 11.0 / 2.0;
        assert!((at0 - expect).abs() < 1e-12);
        assert!(appendix_h_monotone(12, 3).unwrap());
        assert!(appendix_h_monotone(24, 4).unwrap());
        assert!(appendix_h_monotone(3, 3).is_err());
        assert!(appendix_h_monotone(12, 5).is_err());
        assert!(appendix_h_monotone(6, 3).unwrap());
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(binom2(u64::MAX), Err(Error::Overflow("C(m,2)")));
    }
}
