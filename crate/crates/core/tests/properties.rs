mod common;

use num_complex::Complex64;
use proptest::prelude::*;

use common::*;
use zdlab::analysis::{delta_table, log_grid, parse_delta_csv, OutputFormat, Report};
use zdlab::arith::{eval_arithmetic, restricted_divisor_count, FactorTable, FnSpec};
use zdlab::explicit::{delta_samples, evaluate_explicit, DeltaSample, Target, TruncationConfig};
use zdlab::numeric::gcd;
use zdlab::summatory::{
    circle_lattice_sum, divisor_sum_exact, divisor_sum_hyperbola, floor_sum, fractional_part_sum,
    harmonic_sum, squarefree_divisor_sum,
};
use zdlab::voronoi::sierpinski_sum;
use zdlab::zeta::{load_zero_file, load_zero_table, stieltjes, zeta, zeta_real};
use zdlab::Abscissa;

const MULTIPLICATIVE: [FnSpec; 9] = [
    FnSpec::Divisors,
    FnSpec::DivisorsK(3),
    FnSpec::DivisorsK(5),
    FnSpec::Sigma(0),
    FnSpec::Sigma(1),
    FnSpec::Sigma(2),
    FnSpec::Moebius,
    FnSpec::TwoOmega,
    FnSpec::TwoBigOmega,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn multiplicative_on_coprime_pairs(m in 1u64..10_000, n in 1u64..10_000) {
        prop_assume!(gcd(m, n) == 1);
        for f in MULTIPLICATIVE {
            let mn = eval_arithmetic(f, m * n, None).unwrap();
            let prod = eval_arithmetic(f, m, None).unwrap() * eval_arithmetic(f, n, None).unwrap();
            prop_assert_eq!(mn, prod, "{} at {}·{}", f, m, n);
        }
    }

    #[test]
    fn counting_sums_are_monotone(n in 1u64..5_000_000, step in 1u64..1000) {
        let (a, b) = (Abscissa::from(n), Abscissa::from(n + step));
        prop_assert!(divisor_sum_hyperbola(a).unwrap().exact() <= divisor_sum_hyperbola(b).unwrap().exact());
        prop_assert!(squarefree_divisor_sum(a).unwrap().exact() <= squarefree_divisor_sum(b).unwrap().exact());
        prop_assert!(circle_lattice_sum(a) <= circle_lattice_sum(b));
        prop_assert!(divisor_sum_hyperbola(a).unwrap().exact()
            <= divisor_sum_hyperbola(Abscissa::half_above(n)).unwrap().exact());
    }

    #[test]
    fn floor_sum_is_divisor_sum(n in 1u64..100_000_000) {
        prop_assert_eq!(floor_sum(n.into()).unwrap(), divisor_sum_exact(n));
    }

    #[test]
    fn fractional_parts_complement_floors(n in 1u64..200_000) {
        let x = Abscissa::from(n);
        let lhs = fractional_part_sum(x, None).unwrap();
        let rhs = n as f64 * harmonic_sum(x, None).unwrap() - floor_sum(x).unwrap() as f64;
        prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1.0), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn delta_csv_round_trips(
        rows in prop::collection::vec((1.0f64..1e12, -1e15f64..1e15, -1e15f64..1e15), 1..20)
    ) {
        let samples: Vec<DeltaSample> =
            rows.iter().map(|&(x, e, p)| DeltaSample::new(x, e, p)).collect();
        let text = Report::from_table(delta_table(&samples)).render(OutputFormat::Csv).unwrap();
        let back = parse_delta_csv(&text).unwrap();
        prop_assert_eq!(back.len(), samples.len());
        let again = Report::from_table(delta_table(&back)).render(OutputFormat::Csv).unwrap();
        prop_assert_eq!(again, text);
    }
}

#[test]
fn omega_bounds_d_with_squarefree_equality() {
    let n_max = 100_000u64;
    let table = FactorTable::new(n_max).unwrap();
    for n in 1..=n_max {
        let f = table.factorize(n).unwrap();
        let d = eval_arithmetic(FnSpec::Divisors, n, Some(&table)).unwrap();
        let lo = 1i64 << f.omega();
        let hi = 1i64 << f.big_omega();
        assert!(lo <= d && d <= hi, "{n}");
        assert_eq!(lo == d, f.is_squarefree(), "{n}");
        assert_eq!(d == hi, f.is_squarefree(), "{n}");
    }
}

#[test]
fn restricted_counts_partition_divisors() {
    for q in [3u64, 4, 5] {
        for n in 1..=1000u64 {
            let total: i64 = (0..q)
                .map(|a| {
                    let d = (1..=n).filter(|d| n % d == 0 && d % q == a).count() as i64;
                    if gcd(a, q) == 1 && a != 0 {
                        assert_eq!(restricted_divisor_count(n, q, a).unwrap(), d);
                    }
                    d
                })
                .sum();
            assert_eq!(total, eval_arithmetic(FnSpec::Divisors, n, None).unwrap());
        }
    }
}

#[test]
fn circle_counts_match_enumeration() {
    for n in (0..=10_000).step_by(7).chain([9999, 10_000]) {
        assert_eq!(
            circle_lattice_sum(n.into()) as i64,
            lattice_count(n as i64),
            "{n}"
        );
    }
}

#[test]
fn laurent_remainder_is_cubic() {
    let g0 = stieltjes(0).unwrap();
    let g1 = stieltjes(1).unwrap();
    let mut prev = f64::INFINITY;
    for k in 1..=4 {
        let h = 10f64.powi(-k);
        let s = 1.0 + h;
        let r = ((s - 1.0) * zeta_real(s).unwrap() - 1.0 - g0 * h + g1 * h * h).abs();
        // the cubic coefficient is γ₂/2 ≈ −0.005
        assert!(r <= 0.01 * h.powi(3) + 1e-14, "k={k}: {r}");
        assert!(r < prev);
        prev = r;
    }
}

#[test]
fn trivial_zeros_vanish() {
    for n in 1..=5 {
        let v = zeta(Complex64::new(-2.0 * n as f64, 0.0)).unwrap();
        assert!(v.norm() < 1e-10, "zeta(-{}) = {v}", 2 * n);
    }
}

#[test]
fn table_ordinates_are_sign_changes_of_hardy_z() {
    let zeros = load_zero_file(&zeros_path(), false).unwrap();
    assert_eq!(zeros.len(), 1000);
    for &t in zeros.ordinates().iter().take(200) {
        let (a, b) = (hardy_z(t - 1e-4), hardy_z(t + 1e-4));
        assert!(a * b < 0.0, "no sign change at {t}: {a} {b}");
    }
    let moved = format!("{}\n", zeros.ordinates()[0] + 0.01);
    let bad = load_zero_table(moved.as_bytes(), "moved", true).unwrap();
    assert!(!bad.validated());
}

#[test]
fn explicit_residual_obeys_triangle_bound() {
    let zeros = load_zero_file(&zeros_path(), true).unwrap();
    let cfg = TruncationConfig::default();
    for target in Target::ALL {
        for x in log_grid(100.0, 1e6, 3.0).unwrap() {
            let e = evaluate_explicit(target, x, &zeros, &cfg).unwrap();
            let r0 = e.residual_at(0).unwrap();
            for n in [1, 10, 100] {
                let bound = r0.abs() + e.zero_sum_at(n).unwrap().abs();
                assert!(
                    e.residual_at(n).unwrap().abs() <= bound + 1e-9,
                    "{target} {x} {n}"
                );
            }
        }
    }
}

#[test]
fn two_omega_residual_envelope_at_powers_of_ten() {
    let zeros = load_zero_file(&zeros_path(), true).unwrap();
    let cfg = TruncationConfig {
        num_zero_pairs: 0,
        ..Default::default()
    };
    for k in 2..=8 {
        let x = Abscissa::half_above(10u64.pow(k));
        let e = evaluate_explicit(Target::TwoOmegaSum, x, &zeros, &cfg).unwrap();
        let r = e.residual_at(0).unwrap() / x.value().sqrt();
        assert!(r.abs() <= 1.0, "10^{k}: {r}");
    }
}

#[test]
fn midpoint_average_is_exact_at_integers() {
    let zeros = load_zero_file(&zeros_path(), true).unwrap();
    let cfg = TruncationConfig::default();
    for n in [10u64, 99, 1000, 12345] {
        let e = evaluate_explicit(Target::DivisorSum, n.into(), &zeros, &cfg).unwrap();
        let want = (divisor_sum_exact(n - 1) + divisor_sum_exact(n)) as f64 / 2.0;
        assert_eq!(e.exact, Some(want), "{n}");
        assert!(e.midpoint_averaged);
    }
}

#[test]
fn sierpinski_doubling_change_shrinks() {
    let x = Abscissa::half_above(1000);
    let mut prev = f64::INFINITY;
    for n in [500usize, 2000, 8000] {
        let change = (sierpinski_sum(x, 2 * n).unwrap() - sierpinski_sum(x, n).unwrap()).abs();
        let envelope = x.value().sqrt() / (n as f64).sqrt() * 10.0;
        assert!(change <= envelope, "N={n}: {change} > {envelope}");
        assert!(change < prev * 2.0);
        prev = change;
    }
}

#[test]
fn delta_columns_are_consistent() {
    let grid = log_grid(10.0, 1e5, 1.3).unwrap();
    for t in Target::ALL {
        for s in delta_samples(t, &grid).unwrap() {
            assert_eq!(s.delta, s.exact - s.predicted);
            assert_eq!(s.delta_over_x14, s.delta / s.x.powf(0.25));
            assert_eq!(s.delta_over_x12, s.delta / s.x.sqrt());
        }
    }
}

#[test]
fn oracle_sieves_agree_with_library_tables() {
    let d = divisor_counts(5000);
    let w = two_omega_values(5000);
    for n in 1..=5000u64 {
        assert_eq!(
            eval_arithmetic(FnSpec::Divisors, n, None).unwrap() as u64,
            d[n as usize]
        );
        assert_eq!(
            eval_arithmetic(FnSpec::TwoOmega, n, None).unwrap() as u64,
            w[n as usize]
        );
    }
}
