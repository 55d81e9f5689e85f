use packlab::thresholds::{self, Branch};

fn c2(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

/// Edges of T(m, s) from class sizes computed here.
fn turan_oracle(m: u64, s: u64) -> u64 {
    let sizes: Vec<u64> = (0..s).map(|i| (m + i) / s).collect();
    c2(m) - sizes.iter().map(|&x| c2(x)).sum::<u64>()
}

fn f_oracle(n: u64, r: u64, d: u64) -> u64 {
    let rest = n - d - 1;
    let cliques: u64 = (0..r - 2).map(|i| c2((rest + i) / (r - 2))).sum();
    c2(n / r + 1).min(d + cliques)
}

fn g_oracle(n: u64, r: u64, d: u64) -> u64 {
    let second = d * (n - d) + c2(n - 1 - d) + turan_oracle(d, r - 2);
    (c2(n) - c2(n / r + 1)).max(second)
}

fn sweep() -> impl Iterator<Item = (u64, u64)> {
    (3..=8u64).flat_map(|r| (1..=120 / r).map(move |k| (k * r, r)))
}

#[test]
fn turan_edges_match_oracle() {
    for m in 0..=200 {
        for s in 1..=20 {
            assert_eq!(thresholds::turan_edges(m, s).unwrap(), turan_oracle(m, s));
            assert_eq!(
                thresholds::turan_edges(m, s).unwrap() + thresholds::turan_complement_edges(m, s).unwrap(),
                c2(m)
            );
        }
    }
}

#[test]
fn turan_bound_holds_everywhere() {
    for s in 3..=200 {
        for m in s..=200 {
            assert!(thresholds::turan_bound_holds(m, s).unwrap(), "m={m} s={s}");
            // e(T(m,s)) <= (1 - 1/s) m^2 / 2, cross-multiplied
            assert!(2 * s * turan_oracle(m, s) <= (s - 1) * m * m);
        }
    }
}

#[test]
fn f_and_g_match_oracles() {
    for (n, r) in sweep() {
        for d in thresholds::f_range(n, r) {
            assert_eq!(thresholds::f(n, r, d).unwrap().value, f_oracle(n, r, d), "f({n},{r},{d})");
        }
        for d in thresholds::g_range(n, r) {
            assert_eq!(thresholds::g(n, r, d).unwrap().value, g_oracle(n, r, d), "g({n},{r},{d})");
        }
    }
}

#[test]
fn duality_and_range_bijection() {
    let mut triples = 0;
    for (n, r) in sweep() {
        let f_range = thresholds::f_range(n, r);
        for d in thresholds::g_range(n, r) {
            assert!(f_range.contains(&(n - 1 - d)));
            assert!(thresholds::duality_check(n, r, d).unwrap());
            let total = thresholds::g(n, r, d).unwrap().value + thresholds::f(n, r, n - 1 - d).unwrap().value;
            assert_eq!(total, c2(n));
            triples += 1;
        }
        for d in f_range {
            assert!(thresholds::g_range(n, r).contains(&(n - 1 - d)));
        }
    }
    assert!(triples > 1000);
}

#[test]
fn f_is_non_increasing() {
    for (n, r) in sweep() {
        let values: Vec<u64> = thresholds::f_range(n, r)
            .map(|d| thresholds::f(n, r, d).unwrap().value)
            .collect();
        assert!(values.windows(2).all(|w| w[0] >= w[1]), "n={n} r={r}: {values:?}");
    }
}

#[test]
fn f2_is_the_larger_h() {
    for n in (2..=200u64).step_by(2) {
        let h = |x: u64| c2(n - x - 1) + x * (x + 1);
        for d in 0..n / 2 {
            assert_eq!(thresholds::h(n, d).unwrap(), h(d));
            if d >= 1 && n >= 4 {
                assert_eq!(thresholds::f2(n, d).unwrap().value, h(d).max(h(n / 2 - 1)));
            }
        }
    }
    assert!(thresholds::f2(2, 0).is_err());
}

#[test]
fn first_branch_on_low_and_moderate_degree_ranges() {
    for r in 3..=10u64 {
        for n in (2 * r..=300).step_by(r as usize) {
            for d in thresholds::f_range(n, r) {
                let low_degree = d * (r - 1) <= n;
                let moderate_degree = r >= 4 && n >= 3 * r && d * (r - 1) < n + r;
                if low_degree || moderate_degree {
                    assert!(thresholds::first_branch_regime(n, r, d).unwrap(), "({n},{r},{d})");
                    let v = thresholds::f(n, r, d).unwrap();
                    assert_eq!(v.value, c2(n / r + 1));
                    assert_ne!(v.branch, Branch::Second);
                }
                assert_eq!(thresholds::low_degree_hypothesis(n, r, d), low_degree);
            }
        }
    }
}

#[test]
fn appendix_monotone_on_grids() {
    for r in 3..=10u64 {
        for n in (2 * r..=200).step_by(r as usize) {
            assert!(thresholds::appendix_h_monotone(n, r).unwrap(), "n={n} r={r}");
        }
    }
    let (n, r) = (12u64, 3u64);
    let at0 = thresholds::appendix_h(n, r, 0.0);
    let expect = ((n - 1) * (n - 1)) as f64 / (2.0 * (r - 2) as f64) - (n - 1) as f64 / 2.0;
    assert!((at0 - expect).abs() < 1e-9);
}
