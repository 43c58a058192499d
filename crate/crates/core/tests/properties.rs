use std::f64::consts::PI;

use nalgebra::Vector3;
use proptest::prelude::*;
use qflow::coords::{SphericalPoint, SphericalVector};
use qflow::currents::{gordon_current_j2, schrodinger_current_j1, velocity, SpinVector};
use qflow::eigenstates::SchrodingerState;
use qflow::specialfns::spherical_harmonic;
use qflow::units::{convert_length, convert_time, convert_velocity, UnitSystem};

fn point() -> impl Strategy<Value = SphericalPoint> {
    (0.05f64..15.0, 0.02f64..PI - 0.02, 0.0f64..2.0 * PI).prop_map(|(r, t, p)| SphericalPoint::new(r, t, p).unwrap())
}

fn hydrogen() -> impl Strategy<Value = SchrodingerState> {
    (1u32..=4)
        .prop_flat_map(|n| (Just(n), 0..n))
        .prop_flat_map(|(n, l)| (Just(n), Just(l), -(l as i32)..=(l as i32)))
        .prop_map(|(n, l, m)| SchrodingerState::hydrogen(n, l, m).unwrap())
}

proptest! {
    #[test]
    fn harmonic_conjugation(l in 0u32..8, m_frac in 0.0f64..1.0, theta in 0.0f64..PI, phi in 0.0f64..6.3) {
        let m = ((l as f64 + 0.999) * m_frac) as i32;
        let y = spherical_harmonic(l, m, theta, phi).unwrap();
        let ym = spherical_harmonic(l, -m, theta, phi).unwrap();
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((ym - y.conj() * sign).norm() < 1e-12);
    }

    #[test]
    fn unit_round_trip(x in -1e6f64..1e6) {
        let (a, s) = (UnitSystem::Atomic, UnitSystem::SI);
        for back in [
            convert_velocity(convert_velocity(x, a, s), s, a),
            convert_length(convert_length(x, a, s), s, a),
            convert_time(convert_time(x, a, s), s, a),
        ] {
            prop_assert!((back - x).abs() <= 1e-14 * x.abs().max(1e-300));
        }
    }

    #[test]
    fn spin_flip_reverses_gordon_current(state in hydrogen(), p in point()) {
        let up = gordon_current_j2(&state, &SpinVector::up(), &p).unwrap();
        let down = gordon_current_j2(&state, &SpinVector::down(), &p).unwrap();
        prop_assert!((up + down).norm() <= 1e-15 * up.norm().max(1e-300));
    }

    #[test]
    fn gordon_current_linear_in_spin(state in hydrogen(), p in point(), x in -1.0f64..1.0, y in -1.0f64..1.0, z in -1.0f64..1.0) {
        prop_assume!(x * x + y * y + z * z > 1e-3);
        let s = SpinVector::along(Vector3::new(x, y, z)).unwrap();
        let j = gordon_current_j2(&state, &s, &p).unwrap();
        let neg = gordon_current_j2(&state, &-s, &p).unwrap();
        prop_assert!((j + neg).norm() <= 1e-15 * j.norm().max(1e-300));
        // J2 is perpendicular to the spin
        let s_local = s.local(&p);
        prop_assert!(j.dot(&s_local).abs() <= 1e-12 * j.norm() * s_local.norm() + 1e-300);
    }

    #[test]
    fn hydrogen_flow_is_azimuthal(state in hydrogen(), p in point()) {
        let j1 = schrodinger_current_j1(&state, &p).unwrap();
        prop_assert!(j1.r == 0.0 && j1.theta == 0.0);
        if state.density(&p) > 1e-25 {
            let v = velocity(&state, &SpinVector::up(), &p).unwrap();
            prop_assert!(v.r.abs() <= 1e-12 * v.norm() && v.theta.abs() <= 1e-12 * v.norm());
        }
    }

    #[test]
    fn cartesian_round_trip(p in point(), vr in -5.0f64..5.0, vt in -5.0f64..5.0, vp in -5.0f64..5.0) {
        let back = SphericalPoint::from_cartesian(&p.to_cartesian());
        prop_assert!((back.r - p.r).abs() < 1e-12 * p.r);
        prop_assert!((back.theta - p.theta).abs() < 1e-12);
        let v = SphericalVector::new(vr, vt, vp);
        let w = SphericalVector::from_cartesian(&v.to_cartesian(&p), &p);
        prop_assert!((w - v).norm() < 1e-12 * v.norm().max(1.0));
    }
}
