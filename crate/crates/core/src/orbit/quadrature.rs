//! Adaptive Gauss–Kronrod quadrature for pairs of integrands.

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

fn kronrod<F: Fn(f64) -> [f64; 2]>(f: &F, a: f64, b: f64) -> ([f64; 2], f64) {
    let c = (a + b) / 2.0;
    let h = (b - a) / 2.0;
    let mut k = [0.0; 2];
    let mut g = [0.0; 2];
    let fc = f(c);
    for d in 0..2 {
        k[d] = WGK[7] * fc[d];
        g[d] = WG[3] * fc[d];
    }
    for i in 0..7 {
        let x = h * XGK[i];
        let (f1, f2) = (f(c - x), f(c + x));
        for d in 0..2 {
            k[d] += WGK[i] * (f1[d] + f2[d]);
            if i % 2 == 1 {
                g[d] += WG[i / 2] * (f1[d] + f2[d]);
            }
        }
    }
    let err = (0..2).map(|d| ((k[d] - g[d]) * h).abs()).fold(0.0, f64::max);
    ([k[0] * h, k[1] * h], err)
}

/// Integrates both components of `f` over `[a, b]` to absolute tolerance
/// `tol`, repeatedly bisecting the interval with the largest Kronrod–Gauss
/// disagreement. Stops after a fixed number of subdivisions.
pub fn integrate<F: Fn(f64) -> [f64; 2]>(f: &F, a: f64, b: f64, tol: f64) -> [f64; 2] {
    const MAX_INTERVALS: usize = 400;
    let mut parts = vec![(a, b, kronrod(f, a, b))];
    loop {
        let total: f64 = parts.iter().map(|p| p.2 .1).sum();
        let value = parts.iter().fold([0.0; 2], |acc, p| [acc[0] + p.2 .0[0], acc[1] + p.2 .0[1]]);
        let floor = 64.0 * f64::EPSILON * (value[0].abs() + value[1].abs());
        if total <= tol.max(floor) || parts.len() >= MAX_INTERVALS || !total.is_finite() {
            return value;
        }
        let (i, _) = parts.iter().enumerate().max_by(|x, y| x.1 .2 .1.total_cmp(&y.1 .2 .1)).expect("nonempty");
        let (lo, hi, _) = parts.swap_remove(i);
        let m = (lo + hi) / 2.0;
        if m <= lo || m >= hi {
            return value;
        }
        parts.push((lo, m, kronrod(f, lo, m)));
        parts.push((m, hi, kronrod(f, m, hi)));
    }
}

/// Integral over `[lo, hi]` after `t = lo + (hi − lo)(1 − cos πs)/2`, which
/// absorbs inverse square-root singularities at either end.
pub fn integrate_clustered<F: Fn(f64) -> [f64; 2]>(f: &F, lo: f64, hi: f64, tol: f64) -> [f64; 2] {
    let w = hi - lo;
    if w <= 0.0 {
        return [0.0, 0.0];
    }
    let g = |s: f64| {
        let (sn, cs) = (std::f64::consts::PI * s).sin_cos();
        let t = lo + w * (1.0 - cs) / 2.0;
        let jac = w * std::f64::consts::PI * sn / 2.0;
        let v = f(t);
        [v[0] * jac, v[1] * jac]
    };
    integrate(&g, 0.0, 1.0, tol)
}
