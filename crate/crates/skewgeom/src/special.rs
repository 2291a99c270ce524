//! Scalar special functions backing the inference layer: log-gamma,
//! regularized incomplete gamma, and the standard normal cdf/quantile.

const MAX_ITER: usize = 300;

/// Lanczos approximation (g = 7, 9 terms), ~15 significant digits for z > 0.
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the gamma function for z > 0.
pub fn ln_gamma(z: f64) -> f64 {
    debug_assert!(z > 0.0);
    if z < 0.5 {
        // reflection: Γ(z)Γ(1−z) = π / sin(πz)
        let pi = std::f64::consts::PI;
        return (pi / (pi * z).sin()).ln() - ln_gamma(1.0 - z);
    }
    let z = z - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// Regularized lower incomplete gamma P(a, x) = γ(a, x)/Γ(a), a > 0, x ≥ 0.
pub fn regularized_gamma_p(a: f64, x: f64) -> f64 {
    let (p, _) = regularized_gamma_pair(a, x);
    p
}

/// Regularized upper incomplete gamma Q(a, x) = 1 − P(a, x).
pub fn regularized_gamma_q(a: f64, x: f64) -> f64 {
    let (_, q) = regularized_gamma_pair(a, x);
    q
}

/// Both P(a, x) and Q(a, x), series for x < a + 1, Lentz continued
/// fraction otherwise, so the smaller of the pair is never formed by
/// cancellation.
fn regularized_gamma_pair(a: f64, x: f64) -> (f64, f64) {
    debug_assert!(a > 0.0 && x >= 0.0);
    if x == 0.0 {
        return (0.0, 1.0);
    }
    let log_prefactor = -x + a * x.ln() - ln_gamma(a);
    let prefactor = log_prefactor.exp();
    if x < a + 1.0 {
        let p = gamma_series(a, x, prefactor);
        (p, 1.0 - p)
    } else {
        let q = gamma_cf(a, x, prefactor);
        (1.0 - q, q)
    }
}

fn gamma_series(a: f64, x: f64, prefactor: f64) -> f64 {
    let mut term = 1.0 / a;
    let mut sum = term;
    let mut ap = a;
    for _ in 0..MAX_ITER {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if term.abs() < sum.abs() * f64::EPSILON {
            break;
        }
    }
    prefactor * sum
}

fn gamma_cf(a: f64, x: f64, prefactor: f64) -> f64 {
    let tiny = 1e-300;
    let b0 = x + 1.0 - a;
    let mut f = if b0.abs() < tiny { tiny } else { b0 };
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / f;
    for n in 1..=MAX_ITER {
        let an = -(n as f64) * (n as f64 - a);
        let bn = x + 2.0 * n as f64 + 1.0 - a;
        d = bn + an * d;
        if d.abs() < tiny {
            d = tiny;
        }
        c = bn + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < f64::EPSILON {
            break;
        }
    }
    prefactor / f
}

/// Standard normal cdf via the incomplete gamma identity
/// Φ(x) = (1 + sign(x)·P(1/2, x²/2)) / 2.
pub fn normal_cdf(x: f64) -> f64 {
    let p = regularized_gamma_p(0.5, 0.5 * x * x);
    if x >= 0.0 {
        0.5 * (1.0 + p)
    } else {
        0.5 * (1.0 - p)
    }
}

/// Standard normal quantile. Acklam's rational approximation refined by a
/// single Halley step against `normal_cdf`; accurate to ~1e-14 over (0, 1).
pub fn normal_quantile(p: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0, "quantile requires p in (0,1), got {p}");
    const A: [f64; 6] = [
        -3.969_683_028_665_376e1,
        2.209_460_984_245_205e2,
        -2.759_285_104_469_687e2,
        1.383_577_518_672_690e2,
        -3.066_479_806_614_716e1,
        2.506_628_277_459_239,
    ];
    const B: [f64; 5] = [
        -5.447_609_879_822_406e1,
        1.615_858_368_580_409e2,
        -1.556_989_798_598_866e2,
        6.680_131_188_771_972e1,
        -1.328_068_155_288_572e1,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_293e-3,
        -3.223_964_580_411_365e-1,
        -2.400_758_277_161_838,
        -2.549_732_539_343_734,
        4.374_664_141_464_968,
        2.938_163_982_698_783,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_462e-3,
        3.224_671_290_700_398e-1,
        2.445_134_137_142_996,
        3.754_408_661_907_416,
    ];
    const P_LOW: f64 = 0.02425;

    let x = if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };

    // One Halley refinement.
    let e = normal_cdf(x) - p;
    let pdf = (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let u = e / pdf;
    x - u / (1.0 + 0.5 * x * u)
}

/// b^e by squaring; exact at b = 1 and monotone-safe for b in [0, 1].
#[inline]
pub(crate) fn powu(base: f64, mut exp: u64) -> f64 {
    let mut acc = 1.0;
    let mut b = base;
    loop {
        if exp & 1 == 1 {
            acc *= b;
        }
        exp >>= 1;
        if exp == 0 || acc == 0.0 {
            return acc;
        }
        b *= b;
    }
}
