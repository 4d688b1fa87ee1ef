use std::collections::BTreeSet;

use n2sc_core::*;
use proptest::prelude::*;

fn lvl(n: u32) -> Level {
    Level::new(n).unwrap()
}

/// Brute-force quotient: every raw label, keyed by the unordered pair it forms
/// with its image under (l, m) -> (n - l, m + n + 2).
fn brute_force_orbits(n: u32) -> BTreeSet<[(u32, u32); 2]> {
    let k = 2 * n + 4;
    let mut out = BTreeSet::new();
    for l in 0..=n {
        for m in 0..k {
            if (l + m) % 2 != 0 {
                continue;
            }
            let mut pair = [(l, m), (n - l, (m + n + 2) % k)];
            pair.sort();
            out.insert(pair);
        }
    }
    out
}

#[test]
fn spectrum_matches_brute_force_quotient() {
    for n in 0..=64 {
        let level = lvl(n);
        let sectors = spectrum(level);
        assert_eq!(sectors.len() as u32, (n + 1) * (n + 2) / 2);
        let ours: BTreeSet<_> = sectors
            .iter()
            .map(|o| {
                let [a, b] = o.representatives();
                [(a.l, a.m), (b.l, b.m)]
            })
            .collect();
        assert_eq!(ours, brute_force_orbits(n), "n = {n}");
        assert!(sectors.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn identification_is_fixed_point_free() {
    for n in 0..=64 {
        let level = lvl(n);
        for o in spectrum(level) {
            for x in o.representatives() {
                assert_ne!(x, x.partner(level));
                assert_eq!(x.partner(level).partner(level), x);
            }
        }
    }
}

#[test]
fn phase_half_shift() {
    for n in 0..=64 {
        let level = lvl(n);
        for o in spectrum(level) {
            let [a, b] = phase_pair(level, o);
            assert_eq!(a - b, PhaseExponent::HALF, "n = {n}, {o}");
        }
    }
}

#[test]
fn weight_shift_by_modulus_is_integral() {
    for n in 0..=40 {
        let level = lvl(n);
        let k = i64::from(level.modulus());
        for o in spectrum(level) {
            let x = o.canonical();
            let (l, m) = (i64::from(x.l), i64::from(x.m));
            let shifted = Rational::new(l * (l + 2) - (m - k) * (m - k), 4 * (i64::from(n) + 2));
            assert!((weight(level, x) - shifted).is_integer());
        }
    }
}

#[test]
fn qdim_is_orbit_invariant_and_unit_predicate_matches() {
    for n in 0..=64 {
        let level = lvl(n);
        for o in spectrum(level) {
            // evaluate on the partner's l through a one-element orbit query
            let p = o.partner();
            let h = f64::from(n + 2);
            let pi = std::f64::consts::PI;
            let other = (f64::from(p.l + 1) * pi / h).sin() / (pi / h).sin();
            assert!((qdim(level, o) - other).abs() < 1e-12);
            assert_eq!(is_unit(level, o), (qdim(level, o) - 1.0).abs() < 1e-9, "n = {n}, {o}");
        }
    }
}

#[test]
fn spectrum_points_are_discrete_series() {
    for n in 0..=20 {
        let level = lvl(n);
        let mut seen = BTreeSet::new();
        for o in spectrum(level) {
            let (l, m) = o.discrete_series_form(level).expect("every orbit has |m| <= l");
            assert!(seen.insert((l, m)), "two orbits share ({l},{m})");
            let c = level.central_charge();
            let h = Rational::new(l * (l + 2) - m * m, 4 * (i64::from(n) + 2));
            let q = Rational::new(-m, i64::from(n) + 2);
            match unitarity_class(c, h, q) {
                UnitarityClass::Ns3 { n: k, .. } => assert_eq!(k, n),
                other => panic!("n = {n}, {o}: {other:?}"),
            }
        }
    }
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent(n in 0u32..80, l in 0i64..80, m in -500i64..500) {
        let level = lvl(n);
        let l = l % (i64::from(n) + 1);
        let m = if (l + m) % 2 == 0 { m } else { m + 1 };
        let x = RawLabel::new(level, l, m).unwrap();
        let o = canonicalize(level, x).unwrap();
        prop_assert_eq!(canonicalize(level, o.canonical()).unwrap(), o);
        prop_assert_eq!(canonicalize(level, x.partner(level)).unwrap(), o);
        prop_assert!(o.canonical() < o.partner());
        prop_assert!(o.contains(x));
    }

    #[test]
    fn statistics_phase_has_bounded_denominator(n in 0u32..200, l in 0u32..200, m in 0u32..404) {
        let level = lvl(n);
        let l = l % (n + 1);
        let m = (m - m % 2 + l % 2) % level.modulus();
        let p = statistics_phase(level, RawLabel { l, m });
        prop_assert_eq!(i64::from(4 * (n + 2)) % p.order(), 0);
    }
}
