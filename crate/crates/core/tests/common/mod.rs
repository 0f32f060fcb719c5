//! Independent oracles used only by the integration tests.

#![allow(dead_code)]

use std::f64::consts::PI;
use std::path::PathBuf;

use num_complex::Complex64;

pub fn zeros_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/zeta_zeros_1000.txt")
}

// ---------- quadrature ----------

/// Gauss–Legendre nodes and weights on [−1, 1] by Newton iteration.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Composite Gauss–Legendre on [a, b] with `panels` equal panels.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    thread_local! {
        static RULE: Vec<(f64, f64)> = gauss_legendre(20);
    }
    RULE.with(|rule| {
        let h = (b - a) / panels as f64;
        let mut total = 0.0;
        for p in 0..panels {
            let lo = a + p as f64 * h;
            let mid = lo + h / 2.0;
            let s: f64 = rule.iter().map(|&(x, w)| w * f(mid + x * h / 2.0)).sum();
            total += s * h / 2.0;
        }
        total
    })
}

/// J_n(z) = (1/π) ∫_0^π cos(nθ − z sin θ) dθ.
pub fn bessel_j_quad(n: i32, z: f64) -> f64 {
    let nf = n as f64;
    integrate(|t| (nf * t - z * t.sin()).cos(), 0.0, PI, 200) / PI
}

/// Y_n(z) = (1/π) ∫_0^π sin(z sin θ − nθ) dθ
///        − (1/π) ∫_0^∞ (e^{nt} + (−1)^n e^{−nt}) e^{−z sinh t} dt.
pub fn bessel_y_quad(n: i32, z: f64) -> f64 {
    let nf = n as f64;
    let first = integrate(|t| (z * t.sin() - nf * t).sin(), 0.0, PI, 200);
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let upper = (60.0 / z).asinh() + 1.0;
    let second = integrate(
        |t| ((nf * t).exp() + sign * (-nf * t).exp()) * (-z * t.sinh()).exp(),
        0.0,
        upper,
        400,
    );
    (first - second) / PI
}

/// K_1(z) = ∫_0^∞ e^{−z cosh t} cosh t dt.
pub fn bessel_k1_quad(z: f64) -> f64 {
    let upper = (80.0 / z).acosh().max(1.0) + 1.0;
    integrate(|t| (-z * t.cosh()).exp() * t.cosh(), 0.0, upper, 400)
}

// ---------- zeta ----------

/// B_2, B_4, …, B_24.
const BERNOULLI_EVEN: [f64; 12] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
];

fn em_corrections(s: Complex64, n: f64) -> Complex64 {
    // Σ_k B_2k/(2k)! s(s+1)…(s+2k−2) N^{−s−2k+1}
    let mut total = Complex64::new(0.0, 0.0);
    let mut rising = s; // s(s+1)…(s+2k−2)
    let mut fact = 2.0; // (2k)!
    let mut npow = Complex64::new(n, 0.0).powc(-s - 1.0);
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let kk = k + 1;
        total += rising * npow * (*b / fact);
        let a = s + (2 * kk - 1) as f64;
        let c = s + (2 * kk) as f64;
        rising *= a * c;
        fact *= ((2 * kk + 1) * (2 * kk + 2)) as f64;
        npow /= n * n;
    }
    total
}

/// ζ(s) by Euler–Maclaurin with 12 correction terms. N stays small for
/// small |s| since the head cancels against N^{1−s}/(s−1) when Re s < 0.
pub fn zeta_em(s: Complex64) -> Complex64 {
    let n = if s.norm() < 10.0 {
        20.0
    } else {
        (30.0 + 2.0 * s.norm()).ceil()
    };
    let mut head = Complex64::new(0.0, 0.0);
    for k in 1..(n as u64) {
        head += if s.im == 0.0 {
            Complex64::new((k as f64).powf(-s.re), 0.0)
        } else {
            Complex64::new(k as f64, 0.0).powc(-s)
        };
    }
    let ns = Complex64::new(n, 0.0).powc(-s);
    head + ns * n / (s - 1.0) + ns / 2.0 + em_corrections(s, n)
}

pub fn zeta_em_real(s: f64) -> f64 {
    zeta_em(Complex64::new(s, 0.0)).re
}

/// ζ(s) − 1/(s − 1) for real s near 1, with the pole cancelled analytically.
pub fn zeta_regular_part(s: f64) -> f64 {
    let n = 40.0f64;
    let head: f64 = (1..40u64).map(|k| (k as f64).powf(-s)).sum();
    let u = (1.0 - s) * n.ln();
    // (N^{1−s} − 1)/(s − 1)
    let pole = if u == 0.0 {
        -n.ln()
    } else {
        -n.ln() * u.exp_m1() / u
    };
    head + pole + n.powf(-s) / 2.0 + em_corrections(Complex64::new(s, 0.0), n).re
}

/// Four-point central difference with step h.
pub fn derivative(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (8.0 * (f(x + h) - f(x - h)) - (f(x + 2.0 * h) - f(x - 2.0 * h))) / (12.0 * h)
}

/// Same for a complex function along the real direction.
pub fn derivative_c(f: impl Fn(Complex64) -> Complex64, s: Complex64, h: f64) -> Complex64 {
    (8.0 * (f(s + h) - f(s - h)) - (f(s + 2.0 * h) - f(s - 2.0 * h))) / (12.0 * h)
}

/// Hardy's Z(t) = e^{iθ(t)} ζ(1/2 + it), θ from its Stirling expansion.
pub fn hardy_z(t: f64) -> f64 {
    let theta = t / 2.0 * (t / (2.0 * PI)).ln() - t / 2.0 - PI / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t.powi(3));
    let z = zeta_em(Complex64::new(0.5, t));
    (Complex64::from_polar(1.0, theta) * z).re
}

// ---------- arithmetic ----------

/// d(n) for 0..=n by a divisor sieve.
pub fn divisor_counts(n: usize) -> Vec<u64> {
    let mut d = vec![0u64; n + 1];
    for j in 1..=n {
        for k in (j..=n).step_by(j) {
            d[k] += 1;
        }
    }
    d
}

/// 2^{ω(n)} for 0..=n, marking each prime's multiples.
pub fn two_omega_values(n: usize) -> Vec<u64> {
    let mut v = vec![1u64; n + 1];
    let mut composite = vec![false; n + 1];
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        for k in (p..=n).step_by(p) {
            v[k] *= 2;
            if k > p {
                composite[k] = true;
            }
        }
    }
    v
}

pub fn prefix(values: &[u64]) -> Vec<i128> {
    let mut out = Vec::with_capacity(values.len());
    let mut acc = 0i128;
    for (i, &v) in values.iter().enumerate() {
        if i > 0 {
            acc += v as i128;
        }
        out.push(acc);
    }
    out
}

/// Σ_{k ≤ n} ⌊n/k⌋ term by term.
pub fn naive_floor_sum(n: u64) -> i128 {
    (1..=n).map(|k| (n / k) as i128).sum()
}

/// Σ_{m ≤ n} #{d | m : d ≡ a mod q}, by counting multiples of each such d.
pub fn restricted_count_sieve(n: usize, q: usize, a: usize) -> Vec<u64> {
    let mut c = vec![0u64; n + 1];
    for d in (1..=n).filter(|d| d % q == a % q) {
        for m in (d..=n).step_by(d) {
            c[m] += 1;
        }
    }
    c
}

/// Lattice points with 0 < a² + b² ≤ n, by scanning the square.
pub fn lattice_count(n: i64) -> i64 {
    let r = (n as f64).sqrt() as i64 + 1;
    let mut c = 0;
    for a in -r..=r {
        for b in -r..=r {
            let s = a * a + b * b;
            if s > 0 && s <= n {
                c += 1;
            }
        }
    }
    c
}

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
