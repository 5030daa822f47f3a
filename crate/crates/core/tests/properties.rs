use std::sync::Arc;

use proptest::prelude::*;
use wittkit::scalar::Rational;
use wittkit::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

/// Sums of up to four monomials `q·√d` or `q·j√d` with small radicands.
fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((rational(), prop::sample::select(vec![1u64, 2, 3, 5, 6, 7]), any::<bool>()), 0..4)
        .prop_map(|terms| {
            terms.into_iter().fold(Scalar::zero(), |acc, (q, d, imag)| {
                let part = if imag { Part::Imag } else { Part::Real };
                acc + Scalar::monomial(q, d, part)
            })
        })
}

fn gaussian() -> impl Strategy<Value = Scalar> {
    (rational(), rational()).prop_map(|(re, im)| Scalar::from_gaussian(re, im))
}

fn presets() -> Vec<Arc<Signature>> {
    vec![
        Signature::g_nn(1).into_arc(),
        Signature::g_nn(2).into_arc(),
        Signature::g3().into_arc(),
        Signature::g13().into_arc(),
        Signature::g_1n(2).into_arc(),
    ]
}

fn multivector(sig: Arc<Signature>) -> impl Strategy<Value = Multivector> {
    let blades = sig.blade_count() as u32;
    prop::collection::vec((0..blades, gaussian()), 0..6)
        .prop_map(move |terms| Multivector::from_terms(&sig, terms))
}

fn vector(sig: Arc<Signature>) -> impl Strategy<Value = Multivector> {
    let n = sig.dim();
    prop::collection::vec(gaussian(), n).prop_map(move |c| Multivector::vector(&sig, &c))
}

fn triple_in_preset() -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    prop::sample::select(presets()).prop_flat_map(|sig| {
        (multivector(sig.clone()), multivector(sig.clone()), multivector(sig))
    })
}

fn vectors_in_preset() -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    prop::sample::select(presets())
        .prop_flat_map(|sig| (vector(sig.clone()), vector(sig.clone()), vector(sig)))
}

proptest! {
    #[test]
    fn scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Scalar::zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
    }

    #[test]
    fn monomial_inverse(q in rational(), d in prop::sample::select(vec![1u64, 2, 3, 6, 10, 21]), imag in any::<bool>()) {
        prop_assume!(q != Rational::from_integer(0.into()));
        let x = Scalar::monomial(q, d, if imag { Part::Imag } else { Part::Real });
        prop_assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn scalar_json_round_trip(a in scalar()) {
        prop_assert_eq!(Scalar::from_json(&a.to_json()).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gp_is_associative((x, y, z) in triple_in_preset()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn reverse_is_anti_automorphism((x, y, _z) in triple_in_preset()) {
        prop_assert_eq!((&x * &y).reverse(), &y.reverse() * &x.reverse());
        prop_assert_eq!(x.reverse().reverse(), x);
    }

    #[test]
    fn vector_square_is_scalar_and_sym_dot((x, y, _z) in vectors_in_preset()) {
        let sq = &x * &x;
        prop_assert!(sq.as_scalar().is_some());
        prop_assert_eq!(x.sym_dot(&x).unwrap(), sq);
        prop_assert_eq!(x.sym_dot(&y).unwrap(), y.sym_dot(&x).unwrap());
    }

    #[test]
    fn wedge_alternating_and_associative((x, y, z) in vectors_in_preset()) {
        prop_assert!(x.wedge(&x).unwrap().is_zero());
        prop_assert_eq!(x.wedge(&y).unwrap(), -y.wedge(&x).unwrap());
        prop_assert_eq!(x.wedge(&y).unwrap().wedge(&z).unwrap(), x.wedge(&y.wedge(&z).unwrap()).unwrap());
    }

    #[test]
    fn multivector_json_round_trip((x, _y, _z) in triple_in_preset()) {
        let back = Multivector::from_json(&x.to_json(), Some(x.signature())).unwrap();
        prop_assert_eq!(back, x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fast_apply_matches_dense(k in 1usize..=6, minus in any::<bool>(), seed in any::<u64>()) {
        let variant = if minus { Variant::Minus } else { Variant::Plain };
        let mut rng = wittkit::random::rng(seed);
        let x: Vec<Scalar> = (0..1 << k).map(|_| wittkit::random::random_scalar(&mut rng, true)).collect();
        let dense = omega(k, variant).unwrap().entries;
        prop_assert_eq!(fast_apply(k, variant, &x).unwrap(), dense.mul_vec(&x).unwrap());
    }

    #[test]
    fn g22_coordinates_round_trip(entries in prop::collection::vec(gaussian(), 16)) {
        let sb = spectral_basis_nn(2).unwrap();
        let m = Matrix::from_rows(entries.chunks(4).map(|r| r.to_vec()).collect()).unwrap();
        let g = sb.from_matrix(&m).unwrap();
        prop_assert_eq!(sb.to_matrix(&g).unwrap(), m.clone());
        let json = m.to_json();
        prop_assert_eq!(MvMatrix::from_json(&json).unwrap(), m);
    }
}
