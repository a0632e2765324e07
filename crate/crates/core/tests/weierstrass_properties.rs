use std::f64::consts::{PI, TAU};

use cmc_core::weierstrass::{
    catalog, first_fundamental_form, immerse, metric_factor, period, CatalogSurface, LoopSpec, WeierstrassSurface,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn cmax(v: &cmc_core::weierstrass::CVec3) -> f64 {
    v.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Parameter point inside the region used for each catalog surface.
fn point_for(s: &WeierstrassSurface) -> BoxedStrategy<Complex64> {
    if s.punctures().is_empty() {
        (0.0..1.5f64, 0.0..TAU).prop_map(|(r, a)| Complex64::from_polar(r, a)).boxed()
    } else {
        (0.5..2.0f64, -0.9 * PI..0.9 * PI).prop_map(|(r, a)| Complex64::from_polar(r, a)).boxed()
    }
}

fn surface_and_point() -> impl Strategy<Value = (WeierstrassSurface, Complex64)> {
    prop::sample::select(CatalogSurface::ALL.to_vec()).prop_flat_map(|cs| {
        let s = cs.surface();
        let pt = point_for(&s);
        (Just(s), pt)
    })
}

fn stencil(s: &WeierstrassSurface, theta: f64, z: Complex64, h: f64) -> [nalgebra::Vector3<f64>; 5] {
    let at = |w: Complex64| immerse(s, theta, &s.default_path(z).then(w)).unwrap();
    [at(z), at(z + h), at(z - h), at(z + c(0.0, h)), at(z - c(0.0, h))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associate_immersions_are_isometric((s, z) in surface_and_point(), theta in 0.0..TAU) {
        let e0 = first_fundamental_form(&s, 0.0, z, 1e-4).unwrap();
        let et = first_fundamental_form(&s, theta, z, 1e-4).unwrap();
        let scale = e0[0].max(e0[2]);
        for k in 0..3 {
            prop_assert!((et[k] - e0[k]).abs() < 1e-6 * scale);
        }
        let lambda = metric_factor(&s, z).unwrap();
        prop_assert!((et[0] - lambda * lambda).abs() < 1e-6 * scale);
    }

    #[test]
    fn coordinates_are_harmonic((s, z) in surface_and_point(), theta in 0.0..TAU) {
        // five-point Laplacian is O(h^2); halving h must shrink it about fourfold
        let lap = |h: f64| {
            let [f0, fx1, fx0, fy1, fy0] = stencil(&s, theta, z, h);
            ((fx1 + fx0 + fy1 + fy0 - 4.0 * f0) / (h * h)).norm()
        };
        let scale = metric_factor(&s, z).unwrap();
        let (coarse, fine) = (lap(4e-2), lap(2e-2));
        prop_assert!(fine < 1e-2 * scale.max(1.0) || fine < 0.3 * coarse, "coarse {coarse} fine {fine}");
    }

    #[test]
    fn periods_do_not_depend_on_the_loop(r in 0.1..3.0f64, dx in -0.5..0.5f64, dy in -0.5..0.5f64) {
        let s = catalog("catenoid").unwrap();
        let center = c(dx * r, dy * r);
        let p = period(&s, &LoopSpec::circle(center, r).unwrap()).unwrap().value;
        let expected = [c(0.0, 0.0), c(0.0, 0.0), c(0.0, TAU)];
        for k in 0..3 {
            prop_assert!((p[k] - expected[k]).norm() < 1e-8);
        }
    }

    #[test]
    fn reversing_a_loop_negates_its_period(cx in -2.0..2.0f64, cy in -2.0..2.0f64, r in 0.1..2.0f64) {
        let s = catalog("catenoid").unwrap();
        let lp = LoopSpec::circle(c(cx, cy), r).unwrap();
        prop_assume!(lp.distance_to(c(0.0, 0.0)) > 1e-2);
        let forward = period(&s, &lp).unwrap().value;
        let back = period(&s, &lp.clone().reversed()).unwrap().value;
        prop_assert_eq!(forward, -back);
    }
}

#[test]
fn periods_add_over_adjacent_loops() {
    let s = catalog("catenoid").unwrap();
    let (a, b, m, d, e, f) = (c(-1.0, -1.0), c(1.0, -1.0), c(1.0, 1.0), c(-1.0, 1.0), c(0.3, -1.0), c(0.3, 1.0));
    let whole = period(&s, &LoopSpec::polygon(vec![a, b, m, d, a]).unwrap()).unwrap().value;
    let left = period(&s, &LoopSpec::polygon(vec![a, e, f, d, a]).unwrap()).unwrap().value;
    let right = period(&s, &LoopSpec::polygon(vec![e, b, m, f, e]).unwrap()).unwrap().value;
    assert!(cmax(&(whole - (left + right))) < 1e-9);
    assert!((whole[2] - c(0.0, TAU)).norm() < 1e-8);
    assert!(cmax(&right) < 1e-9);
}

#[test]
fn enneper_has_no_periods() {
    let s = catalog("enneper").unwrap();
    for (center, r) in [(c(0.0, 0.0), 1.0), (c(2.0, -1.0), 0.5), (c(0.3, 0.3), 3.0)] {
        assert!(period(&s, &LoopSpec::circle(center, r).unwrap()).unwrap().value.iter().map(|v| v.norm()).fold(0.0, f64::max) < 1e-9);
    }
}
