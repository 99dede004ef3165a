//! Checks against closed forms and independent quadrature written here.

use std::f64::consts::PI;
use std::sync::Arc;

use renyi_flow_core::entropy::{fisher, renyi, shannon};
use renyi_flow_core::evolve::{exact_barenblatt, l1_error};
use renyi_flow_core::grid::unit_sphere_area;
use renyi_flow_core::profiles::{barenblatt_matched, continuum_profile};
use renyi_flow_core::{solve, GaussianComponent, GaussianMixture, Grid, SolverConfig};

/// Adaptive Simpson on `[a, b]`.
fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    #[allow(clippy::too_many_arguments)]
    fn step(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
            return left + right + (left + right - whole) / 15.0;
        }
        step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) + step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fm, fb, whole, tol, 50)
}

/// `∫_{R^n} g(|y|) dy` for radial `g`, split into unit panels; for unbounded
/// support the substitution `r = s / (1 - s)` maps the tail to `[0, 1)`.
fn radial_integral(n: usize, g: &dyn Fn(f64) -> f64, support: Option<f64>) -> f64 {
    let area = unit_sphere_area(n);
    let w = |r: f64| area * r.powi(n as i32 - 1) * g(r);
    match support {
        Some(r) => simpson(&w, 0.0, r, 1e-13),
        None => {
            let core = simpson(&w, 0.0, 1.0, 1e-13);
            let outer = |s: f64| {
                if s >= 1.0 {
                    return 0.0;
                }
                let r = 1.0 / (1.0 - s);
                w(r) * r * r
            };
            core + simpson(&outer, 0.0, 1.0, 1e-13)
        }
    }
}

#[test]
fn continuum_profiles_have_prescribed_moments() {
    for (p, n) in [(0.75, 1), (0.9, 1), (2.0, 1), (3.0, 1), (0.8, 3), (2.0, 3), (1.5, 2)] {
        let b = continuum_profile(p, n, 1.0).unwrap();
        let support = b.support_radius();
        let mass = radial_integral(n, &|r| b.value(r), support);
        let energy = radial_integral(n, &|r| r * r * b.value(r), support);
        assert!((mass - 1.0).abs() < 1e-7, "p {p} n {n} mass {mass}");
        assert!((energy - 1.0).abs() < 1e-7, "p {p} n {n} energy {energy}");
    }
}

#[test]
fn gaussian_entropies_match_closed_forms() {
    let g = Arc::new(Grid::line(16.0, 3201).unwrap());
    for var in [0.5, 1.0, 2.0] {
        let f = GaussianMixture::gaussian(1, var).unwrap().sample(&g).unwrap();
        let h = 0.5 * (2.0 * PI * std::f64::consts::E * var).ln();
        assert!((shannon(&f).unwrap() - h).abs() < 1e-9);
        for p in [0.5f64, 2.0, 3.0] {
            let r = 0.5 * (2.0 * PI * var).ln() + 0.5 * p.ln() / (p - 1.0);
            assert!((renyi(&f, p).unwrap() - r).abs() < 1e-9, "var {var} p {p}");
        }
        assert!((fisher(&f).unwrap() * var - 1.0).abs() < 1e-4);
    }
}

#[test]
fn radial_gaussian_fisher_information() {
    let g = Arc::new(Grid::radial(3, 9.0, 1801).unwrap());
    let f = GaussianMixture::gaussian(3, 1.0).unwrap().sample(&g).unwrap();
    assert!((f.mass() - 1.0).abs() < 1e-8);
    assert!((f.energy() - 3.0).abs() < 1e-7);
    assert!((fisher(&f).unwrap() - 3.0).abs() < 1e-3);
}

fn two_bump() -> GaussianMixture {
    GaussianMixture::new(
        1,
        vec![
            GaussianComponent { weight: 0.5, mean: -1.5, variance: 0.4 },
            GaussianComponent { weight: 0.5, mean: 1.5, variance: 0.4 },
        ],
    )
    .unwrap()
}

#[test]
fn heat_solver_converges_at_second_order() {
    let m = two_bump();
    let t_end = 0.5;
    let err = |pts| {
        let g = Arc::new(Grid::line(10.0, pts).unwrap());
        let traj = solve(&m.sample(&g).unwrap(), &SolverConfig::uniform(1.0, 1, t_end, 2)).unwrap();
        let exact = m.heat_evolved(t_end).sample(&g).unwrap();
        l1_error(&traj.snapshots[1].density, &exact).unwrap()
    };
    let (e1, e2, e3) = (err(201), err(401), err(801));
    assert!(e3 < 5e-4, "{e3}");
    for ratio in [e1 / e2, e2 / e3] {
        assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");
    }
}

#[test]
fn radial_pme_follows_selfsimilar_solution() {
    let g = Arc::new(Grid::radial(3, 4.0, 801).unwrap());
    let (b, v0) = barenblatt_matched(2.0, 3, 1.0, &g).unwrap();
    let times = [0.0, 0.25, 0.5];
    let num = solve(&v0, &SolverConfig::new(2.0, 3, 0.5, times.to_vec())).unwrap();
    let exact = exact_barenblatt(&b, &g, &times).unwrap();
    for (a, e) in num.snapshots.iter().zip(&exact.snapshots) {
        assert!(l1_error(&a.density, &e.density).unwrap() < 5e-3, "t {}", a.t);
        assert!((a.density.mass() - e.density.mass()).abs() < 1e-8);
    }
}

#[test]
fn zkb_energy_grows_along_closed_form() {
    // E(t) = E0 θ^{2/λ} with θ = 1 + t / clock_scale
    let g = Arc::new(Grid::line(10.0, 2001).unwrap());
    let (b, _) = barenblatt_matched(2.0, 1, 1.0, &g).unwrap();
    let times = [0.0, 0.5, 1.0, 2.0];
    let exact = exact_barenblatt(&b, &g, &times).unwrap();
    for s in &exact.snapshots {
        let theta = 1.0 + s.t / b.clock_scale();
        let e = theta.powf(2.0 / b.lambda);
        assert!((s.energy / e - 1.0).abs() < 1e-8, "t {}", s.t);
    }
}
