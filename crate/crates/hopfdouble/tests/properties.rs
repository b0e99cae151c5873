use std::sync::OnceLock;

use hopfdouble::doubles::quantum_double;
use hopfdouble::functors::*;
use hopfdouble::modcats::*;
use hopfdouble::registry::{build_pairing, build_test_modules};
use hopfdouble::{FieldSpec, HopfAlgebraData, HopfPairing, Matrix, Scalar};
use proptest::prelude::*;
use rand::SeedableRng;

const Q: FieldSpec = FieldSpec::Rationals;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        let e = v.into_iter().map(|x| Q.from_i64(x)).collect();
        Matrix::from_dense(Q, rows, cols, e).unwrap()
    })
}

fn sized_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c))
}

struct Setting {
    pairing: HopfPairing,
    double: HopfAlgebraData,
    fixtures: Vec<YdModule>,
}

fn settings() -> &'static [Setting] {
    static S: OnceLock<Vec<Setting>> = OnceLock::new();
    S.get_or_init(|| {
        ["eval-c2", "eval-c3", "trivial-c2-c3", "sign-s3-c2", "quotient-c4-c2"]
            .iter()
            .map(|n| {
                let pairing = build_pairing(n).unwrap();
                let double = quantum_double(&pairing).unwrap();
                let fixtures = build_test_modules(&pairing).unwrap().into_iter().filter(|v| v.dim <= 2).collect();
                Setting { pairing, double, fixtures }
            })
            .collect()
    })
}

fn yd_module() -> impl Strategy<Value = (usize, YdModule)> {
    (0..settings().len(), 1usize..=2, any::<u64>()).prop_filter_map("no module for this seed", |(i, dim, seed)| {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        random_yd_module(&settings()[i].pairing, dim, &mut rng).map(|v| (i, v))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_commutes_with_transpose(a in sized_matrix(), b in sized_matrix()) {
        prop_assert_eq!(a.kron(&b).transpose(), a.transpose().kron(&b.transpose()));
    }

    #[test]
    fn kron_mixed_product(a in matrix(2, 3), b in matrix(3, 2), c in matrix(3, 2), d in matrix(2, 2)) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn then_kron_is_composition_with_kron(a in matrix(2, 6), f in matrix(2, 3), g in matrix(3, 2)) {
        prop_assert_eq!(a.then_kron(&[&f, &g]), a.mul(&f.kron(&g)));
    }

    #[test]
    fn rank_nullity(a in sized_matrix()) {
        let k = a.kernel_basis();
        prop_assert_eq!(k.rows() + a.rank(), a.cols());
        prop_assert!(a.mul(&k.transpose()).is_zero());
        prop_assert_eq!(k.rank(), k.rows());
    }

    #[test]
    fn invertible_matrices_invert(a in matrix(3, 3)) {
        match a.invert() {
            Ok(b) => {
                prop_assert_eq!(a.mul(&b), Matrix::identity(Q, 3));
                prop_assert_eq!(a.rank(), 3);
            }
            Err(_) => prop_assert!(a.rank() < 3),
        }
    }

    #[test]
    fn quotient_section_splits_projection(rel in (0usize..=3).prop_flat_map(|r| matrix(r, 4))) {
        let q = Quotient::by_relations(Q, 4, &rel);
        prop_assert_eq!(q.dim(), 4 - rel.rank());
        prop_assert_eq!(q.section.mul(&q.projection), Matrix::identity(Q, q.dim()));
        prop_assert!(rel.mul(&q.projection).is_zero());
        prop_assert_eq!(q.projection.rank(), q.dim());
    }

    #[test]
    fn scalars_render_and_parse(n in -50i64..50, d in 1i64..20) {
        let x = Q.ratio(n, d).unwrap();
        prop_assert_eq!(Q.parse_scalar(&x.render()), Some(x.clone()));
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn prime_field_arithmetic(a in 0i64..11, b in 0i64..11, c in 0i64..11) {
        let f = FieldSpec::prime(11).unwrap();
        let (a, b, c): (Scalar, Scalar, Scalar) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert!(a.pow(10).is_one());
        }
    }

    #[test]
    fn action_coaction_correspondence(n in 1usize..=3, nc in 1usize..=3, seed in any::<u64>()) {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let e: Vec<Scalar> = (0..n * n * nc).map(|_| Q.from_i64(rand::Rng::gen_range(&mut rng, -2..=2))).collect();
        let co = Matrix::from_dense(Q, n, n * nc, e).unwrap();
        for side in [Side::Left, Side::Right] {
            let act = action_from_coaction(&co, side, nc);
            prop_assert_eq!(act.shape(), (nc * n, n));
            prop_assert_eq!(coaction_from_action(&act, side, nc), co.clone());
        }
    }

    #[test]
    fn cotensor_dimension_plus_rank(rc in matrix(2, 4), lc in matrix(3, 6)) {
        let u = cotensor(&rc, &lc, 2);
        let diff = rc.kron(&Matrix::identity(Q, 3)).sub(&Matrix::identity(Q, 2).kron(&lc));
        prop_assert_eq!(u.dim() + diff.rank(), 6);
        prop_assert!(u.basis.mul(&diff).is_zero());
    }

    #[test]
    fn tensor_over_algebra_kills_relations(ra in matrix(4, 2), la in matrix(6, 3)) {
        let q = tensor_over_algebra(&ra, &la, 2, 3);
        let rel = ra.kron(&Matrix::identity(Q, 3)).sub(&Matrix::identity(Q, 2).kron(&la));
        prop_assert!(rel.mul(&q.projection).is_zero());
        prop_assert_eq!(q.dim() + rel.rank(), 6);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_modules_are_yd_and_round_trip((i, v) in yd_module()) {
        let s = &settings()[i];
        prop_assert!(v.verify().unwrap().overall());
        let r = yd_to_rep(&v, &s.double).unwrap();
        prop_assert!(r.verify().unwrap().overall());
        prop_assert_eq!(rep_to_yd(&r, &s.pairing).unwrap(), v.clone());
        prop_assert!(check_theta_triangle(&v, &s.double).unwrap().overall());
    }

    #[test]
    fn tensor_products_stay_in_the_category((i, v) in yd_module()) {
        let s = &settings()[i];
        for w in &s.fixtures {
            let t = yd_tensor(&v, w).unwrap();
            prop_assert!(t.verify().unwrap().overall());
            prop_assert!(check_monoidal(&v, w, &s.double).unwrap().overall());
        }
    }

    #[test]
    fn duals_and_swaps_are_involutive((_i, v) in yd_module()) {
        let dv = yd_dualize(&v);
        prop_assert!(dv.verify().unwrap().overall());
        prop_assert_eq!(yd_dualize(&dv), v.clone());
        let sw = yd_swap(&v).unwrap();
        prop_assert!(sw.verify().unwrap().overall());
    }

    #[test]
    fn coinvariants_recover_the_dimension((i, v) in yd_module()) {
        let p = &settings()[i].pairing;
        let m = v_star_tensor_k(&v).unwrap();
        prop_assert!(m.verify().unwrap().overall());
        let (cf, u) = coinvariants_functor(&m).unwrap();
        prop_assert_eq!(cf.dim, v.dim);
        prop_assert!(cf.verify().unwrap().overall());
        let n = two_sided_dualize(&m);
        prop_assert_eq!(two_sided_dualize(&n), m.clone());
        prop_assert!(n.verify().unwrap().overall());
        let aug = augmentation_quotient(&n.right_action, &p.k_alg.unit.transpose());
        prop_assert_eq!(aug.dim(), u.dim());
    }

    #[test]
    fn dual_side_tensors_stay_in_the_category((i, v) in yd_module()) {
        let p = &settings()[i].pairing;
        let n = two_sided_dualize(&v_star_tensor_k(&v).unwrap());
        let unit = two_sided_dualize(&TwoSidedModule::unit_k(p));
        let (t, q) = dual_tensor(&n, &unit).unwrap();
        prop_assert_eq!(q.dim(), n.dim);
        prop_assert!(t.verify().unwrap().overall());
        prop_assert!(check_j(&n, &unit).unwrap().overall());
    }
}
