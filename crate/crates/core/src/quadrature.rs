//! Gauss–Legendre rules and semi-infinite power-law tail integration.

use crate::math::Real;

const GL_ORDER: usize = 16;

/// Nodes and weights of the `GL_ORDER`-point Gauss–Legendre rule on [-1, 1].
fn gauss_legendre() -> ([f64; GL_ORDER], [f64; GL_ORDER]) {
    let mut nodes = [0.0; GL_ORDER];
    let mut weights = [0.0; GL_ORDER];
    let n = GL_ORDER;
    for i in 0..n {
        // Chebyshev initial guess, then Newton on P_n.
        let mut x = (core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
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
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Integrates `g` over `[a, b]` with one Gauss–Legendre panel.
pub(crate) fn gl_panel(g: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let (nodes, weights) = gauss_legendre();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    nodes.iter().zip(weights.iter()).map(|(x, w)| w * g(mid + half * x)).sum::<f64>() * half
}

/// Result of a semi-infinite integral.
#[derive(Debug, Clone, Copy)]
pub(crate) struct TailIntegral {
    pub value: f64,
    pub error_estimate: f64,
}

/// Panels double in length from `start`; 64 doublings reach `start · 1.8e19`.
const TAIL_PANELS: usize = 64;

/// `∫_start^∞ g(r) dr` for `g(r) ~ A r^{-decay}` with `decay > 1`.
///
/// `core_scale` is the radius beyond which `g` behaves like its power law;
/// it only enters the error estimate of the analytic remainder.
pub(crate) fn semi_infinite(g: impl Fn(f64) -> f64, start: f64, decay: f64, core_scale: f64) -> TailIntegral {
    let mut value = 0.0;
    let mut a = start;
    for _ in 0..TAIL_PANELS {
        let b = 2.0 * a;
        value += gl_panel(&g, a, b);
        a = b;
    }
    let remainder = if decay > 1.0 { g(a) * a / (decay - 1.0) } else { f64::INFINITY };
    // the power-law remainder is off by a relative O((core / a)²)
    let rel = (core_scale / a).powi(2);
    TailIntegral {
        value: value + remainder,
        error_estimate: remainder.abs() * rel * decay.max(1.0) + value.abs() * 1e-14,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let v = gl_panel(&|x: f64| x.powi(30) + 3.0 * x * x, -1.0, 1.0);
        assert!((v - (2.0 / 31.0 + 2.0)).abs() < 1e-14);
    }

    #[test]
    fn semi_infinite_power_law() {
        // ∫_1^∞ (1 + r²)^{-1} dr = π/4
        let t = semi_infinite(|r| 1.0 / (1.0 + r * r), 1.0, 2.0, 1.0);
        assert!((t.value - core::f64::consts::FRAC_PI_4).abs() < 1e-13);
        // slow decay r^{-1.05}: ∫_1^∞ r^{-1.05} = 20
        let t = semi_infinite(|r: f64| r.powf(-1.05), 1.0, 1.05, 1.0);
        assert!((t.value - 20.0).abs() < 1e-10, "{}", t.value);
    }
}
