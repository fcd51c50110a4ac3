use hypzero::checks::sigma_shift_error;
use hypzero::coeffs::{gamma_closed, gamma_recursive};
use hypzero::rootfind::{find_family_zeros, vieta};
use hypzero::spectral::{jacobi_eval, jacobi_zeros, verify_spectrum};
use hypzero::zerofunc::{f_closed, f_recursive, g_chain, g_closed, residual};
use hypzero::{CoefficientBundle, Complex, ParameterSet, ZeroOptions, ZeroSet};
use proptest::prelude::*;

fn real_family() -> impl Strategy<Value = ParameterSet> {
    (
        1usize..=7,
        prop::collection::vec(0.5f64..3.0, 0..=2),
        prop::collection::vec(0.5f64..3.0, 0..=2),
    )
        .prop_filter_map("valid family", |(n, a, b)| {
            ParameterSet::real(n, &a, &b).ok()
        })
}

fn separated_points() -> impl Strategy<Value = ZeroSet> {
    prop::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 2..=6)
        .prop_map(|v| ZeroSet::from_zeros(v.into_iter().map(|(x, y)| Complex::new(x, y)).collect()))
        .prop_filter("separated", |zs| zs.min_separation() > 0.2)
}

fn family_zeros(p: &ParameterSet) -> Option<(CoefficientBundle, ZeroSet)> {
    let b = CoefficientBundle::new(p).ok()?;
    let zs = find_family_zeros(&b, &ZeroOptions::default()).ok()?;
    zs.is_separated().then_some((b, zs))
}

fn rel(a: Complex, b: Complex) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn gamma_routes_agree(p in real_family()) {
        let a = gamma_closed(&p).unwrap();
        let b = gamma_recursive(&p).unwrap();
        for (x, y) in a.iter().zip(&b) {
            prop_assert!(rel(*x, *y) < 1e-12);
        }
    }

    #[test]
    fn real_families_have_conjugate_closed_zeros(p in real_family()) {
        let Some((_, zs)) = family_zeros(&p) else { return Ok(()) };
        let scale = 1.0 + zs.max_modulus();
        for z in zs.zeros() {
            let best = zs.zeros().iter().map(|w| (w - z.conj()).norm()).fold(f64::INFINITY, f64::min);
            prop_assert!(best < 1e-9 * scale);
        }
    }

    #[test]
    fn vieta_round_trip(p in real_family()) {
        let Some((b, zs)) = family_zeros(&p) else { return Ok(()) };
        let back = vieta(zs.zeros());
        let norm: f64 = b.gammas.iter().map(|g| g.norm()).sum();
        let err: f64 = back.iter().zip(&b.gammas).map(|(x, y)| (x - y).norm()).sum();
        prop_assert!(err < 1e-10 * norm, "{err} vs {norm}");
    }

    #[test]
    fn residual_vanishes_and_spectrum_matches(p in real_family()) {
        let Some((b, zs)) = family_zeros(&p) else { return Ok(()) };
        let scale = (1.0 + zs.max_modulus()).powi(p.q() as i32 + 1);
        let r = residual(&p, &b, &zs).unwrap();
        prop_assert!(r.iter().all(|f| f.norm() < 1e-8 * scale));
        prop_assert!(verify_spectrum(&p, &b, &zs).unwrap().max_rel_error < 1e-6);
    }

    #[test]
    fn closed_forms_match_recursion(zs in separated_points()) {
        let f = f_recursive(&zs, 4).unwrap();
        for j in 1..=4 {
            for (x, y) in f_closed(&zs, j).unwrap().iter().zip(&f[j - 1]) {
                prop_assert!(rel(*x, *y) < 1e-9);
            }
        }
        for j in 0..=3 {
            for (x, y) in g_closed(&zs, j).unwrap().iter().zip(&g_chain(&zs, j).unwrap()) {
                prop_assert!(rel(*x, *y) < 1e-9);
            }
        }
    }

    #[test]
    fn sigma_shift_identities(zs in separated_points()) {
        prop_assert!(sigma_shift_error(&zs).unwrap() < 1e-10);
    }

    #[test]
    fn jacobi_zeros_are_real_nodes(n in 1usize..=10, alpha in -0.9f64..3.0, beta in -0.9f64..3.0) {
        let xs = jacobi_zeros(alpha, beta, n).unwrap();
        prop_assert_eq!(xs.len(), n);
        prop_assert!(xs.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(xs.iter().all(|x| x.abs() < 1.0));
        let scale = (-1..=1).map(|k| jacobi_eval(alpha, beta, n, k as f64 * 0.999).abs()).fold(1.0, f64::max);
        prop_assert!(xs.iter().all(|&x| jacobi_eval(alpha, beta, n, x).abs() < 1e-8 * scale));
    }
}
