use hopfdouble::doubles::quantum_double;
use hopfdouble::functors::*;
use hopfdouble::hopf::dual;
use hopfdouble::modcats::*;
use hopfdouble::registry::{build_pairing, build_test_modules, two_sided_fixtures};
use hopfdouble::{FieldSpec, Matrix};

fn q(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(FieldSpec::Rationals, rows)
}

#[test]
fn trivial_yd_goes_to_trivial_rep_and_back() {
    let p = build_pairing("eval-sweedler4").unwrap();
    let d = quantum_double(&p).unwrap();
    let t = YdModule::trivial(&p, YdFlavor::HModKComod);
    let r = yd_to_rep(&t, &d).unwrap();
    assert_eq!(r, RepModule::trivial(&d));
    assert_eq!(rep_to_yd(&RepModule::trivial(&d), &p).unwrap(), t);
    assert_eq!(yd_swap(&t).unwrap(), YdModule::trivial(&p.swapped(), YdFlavor::HModKComod));
    assert_eq!(yd_dualize(&t), YdModule::trivial(&p, YdFlavor::KComodHMod));
}

#[test]
fn sign_module_over_kc2_by_hand() {
    let p = build_pairing("eval-c2").unwrap();
    let d = quantum_double(&p).unwrap();
    // g·v = −v, v ↦ v⊗g
    let v = YdModule::new(YdFlavor::HModKComod, &p, q(&[&[1], &[-1]]), q(&[&[0, 1]]));
    assert!(v.verify().unwrap().overall());
    // (e_i*⋈g^j)·v = (−1)^j δ_{i1} v
    let r = yd_to_rep(&v, &d).unwrap();
    assert_eq!(r.action, q(&[&[0], &[0], &[1], &[-1]]));
}

#[test]
fn regular_rep_of_kc2_double_is_a_4_dim_yd_module() {
    let p = build_pairing("eval-c2").unwrap();
    let d = quantum_double(&p).unwrap();
    let y = rep_to_yd(&RepModule::regular(&d), &p).unwrap();
    assert_eq!(y.dim, 4);
    assert!(y.verify().unwrap().overall());
}

#[test]
fn psi_of_trivial_rep_over_trivial_pairing() {
    let p = build_pairing("trivial-c2-c3").unwrap();
    let d = quantum_double(&p).unwrap();
    let ctx = DoiContext::canonical(&p).unwrap();
    let m = psi(&RepModule::trivial(&d), &p, &ctx);
    let kd = dual(&p.k_alg);
    let (nk, nh) = (kd.dim, p.h_alg.dim);
    assert_eq!(m.dim, nk);
    // e_i* ↦ Σ c (e_b*) ⊗ (e_a* ⊗ 1_{H*}) over Δ(e_i*) = Σ c e_a*⊗e_b*
    let one_hd: Vec<(usize, hopfdouble::Scalar)> = p.h_alg.counit.row_data().iter().enumerate().flat_map(|(j, r)| r.iter().map(move |(_, x)| (j, x.clone()))).collect();
    let mut items = Vec::new();
    for i in 0..nk {
        for (col, c) in kd.comult.row(i) {
            let (a, b) = (col / nk, col % nk);
            for (j, x) in &one_hd {
                items.push((i, b * (nk * nh) + a * nh + j, c * x));
            }
        }
    }
    let hand = Matrix::from_triplets(FieldSpec::Rationals, nk, nk * nk * nh, items);
    assert_eq!(m.coaction, hand);
    assert!(m.verify().unwrap().overall());
}

#[test]
fn phi_dimension_is_dim_minus_augmentation_rank() {
    let p = build_pairing("eval-c3").unwrap();
    let d = quantum_double(&p).unwrap();
    let ctx = DoiContext::canonical(&p).unwrap();
    for v in build_test_modules(&p).unwrap() {
        let m = psi(&yd_to_rep(&v, &d).unwrap(), &p, &ctx);
        let rel = m.right_action.sub(&Matrix::identity(FieldSpec::Rationals, m.dim).kron(&ctx.c_counit));
        let (rep, _) = phi(&m, &d).unwrap();
        assert_eq!(rep.dim, m.dim - rel.rank());
        assert_eq!(rep.dim, v.dim);
    }
}

#[test]
fn unit_object_dualizes_to_k_star() {
    let p = build_pairing("sign-s3-c2").unwrap();
    let k = TwoSidedModule::unit_k(&p);
    let kd = dual(&p.k_alg);
    let du = two_sided_dualize(&k);
    assert_eq!(du.left_action, kd.mult);
    assert_eq!(du.right_action, kd.mult);
    assert_eq!(du.left_coaction, kd.comult);
    // k* ↦ Σ k*₁ ⊗ σ_l(k*₂)
    assert_eq!(du.right_coaction, kd.comult.then_kron(&[&kd.id(), &p.sigma_l()]));
    assert_eq!(two_sided_dualize(&du), k);
}

#[test]
fn bridge_sends_unit_to_unit() {
    for name in ["eval-sweedler4", "sign-s3-c2", "quotient-c4-c2"] {
        let p = build_pairing(name).unwrap();
        let ctx = DoiContext::canonical(&p).unwrap();
        let n = two_sided_dualize(&TwoSidedModule::unit_k(&p));
        let b = bridge_doihopf(&n, &ctx).unwrap();
        assert_eq!(b, ctx.unit_object(), "{}", name);
        assert_eq!(doihopf_to_two_sided(&b, &p), n);
    }
}

#[test]
fn bridge_round_trip_and_validity_on_fixtures() {
    let p = build_pairing("eval-sweedler4").unwrap();
    let ctx = DoiContext::canonical(&p).unwrap();
    for n in two_sided_fixtures(&p).unwrap() {
        let b = bridge_doihopf(&n, &ctx).unwrap();
        assert!(b.verify().unwrap().overall());
        assert_eq!(doihopf_to_two_sided(&b, &p), n);
    }
}

#[test]
fn v_star_tensor_k_of_trivial_is_k() {
    for name in ["eval-c3", "sign-s3-c2", "trivial-c2-c3"] {
        let p = build_pairing(name).unwrap();
        let t = YdModule::trivial(&p, YdFlavor::HModKComod);
        assert_eq!(v_star_tensor_k(&t).unwrap(), TwoSidedModule::unit_k(&p), "{}", name);
    }
}

#[test]
fn v_star_tensor_k_of_regular_double_module_is_valid() {
    let p = build_pairing("eval-sweedler4").unwrap();
    let d = quantum_double(&p).unwrap();
    let y = rep_to_yd(&RepModule::regular(&d), &p).unwrap();
    let m = v_star_tensor_k(&y).unwrap();
    assert_eq!(m.dim, 64);
    assert!(m.verify().unwrap().overall());
}

#[test]
fn coinvariants_of_unit_are_trivial() {
    let p = build_pairing("eval-s3").unwrap();
    let (cf, u) = coinvariants_functor(&TwoSidedModule::unit_k(&p)).unwrap();
    assert_eq!(u.dim(), 1);
    assert_eq!(cf, YdModule::trivial(&p, YdFlavor::KComodHMod));
}

#[test]
fn coinvariants_of_v_star_tensor_k_have_dim_of_v() {
    let p = build_pairing("quotient-c4-c2").unwrap();
    for v in build_test_modules(&p).unwrap() {
        let (cf, _) = coinvariants_functor(&v_star_tensor_k(&v).unwrap()).unwrap();
        assert_eq!(cf.dim, v.dim);
        assert!(cf.verify().unwrap().overall());
    }
}

#[test]
fn q_star_on_unit_object_passes() {
    let p = build_pairing("eval-c3").unwrap();
    let d = quantum_double(&p).unwrap();
    let ctx = DoiContext::canonical(&p).unwrap();
    let r = q_star_check(&TwoSidedModule::unit_k(&p), &ctx, &d).unwrap();
    assert!(r.overall(), "{:?}", r.failing());
}

#[test]
fn q_star_detects_a_corrupted_coaction() {
    let p = build_pairing("eval-c2").unwrap();
    let d = quantum_double(&p).unwrap();
    let ctx = DoiContext::canonical(&p).unwrap();
    let mut m = TwoSidedModule::unit_k(&p);
    // the right coaction now sends 1 ↦ 1⊗1 + g⊗g
    m.right_coaction = m.right_coaction.add(&Matrix::from_triplets(FieldSpec::Rationals, 2, 4, vec![(0, 3, FieldSpec::Rationals.one())]));
    assert!(!m.verify().unwrap().overall());
    let r = q_star_check(&m, &ctx, &d).unwrap();
    assert!(!r.overall());
    assert!(r.failing().iter().any(|id| id.starts_with("doi-hopf.")));
}

#[test]
fn j_dimensions_over_kc2() {
    let p = build_pairing("eval-c2").unwrap();
    let objs = two_sided_fixtures(&p).unwrap();
    assert!(objs.iter().any(|o| o.dim == 4) && objs.iter().any(|o| o.dim == 2));
    for a in &objs {
        for b in &objs {
            let (j, src, dst) = j_map(a, b).unwrap();
            assert_eq!(src.dim, dst.dim);
            assert_eq!(j.rank(), src.dim);
        }
    }
}

#[test]
fn box_and_dual_tensors_of_valid_objects_are_valid() {
    let p = build_pairing("sign-s3-c2").unwrap();
    let objs = two_sided_fixtures(&p).unwrap();
    for a in &objs {
        for b in &objs {
            let (t, _) = dual_tensor(a, b).unwrap();
            assert!(t.verify().unwrap().overall());
            let (bx, _) = box_tensor(&two_sided_dualize(a), &two_sided_dualize(b)).unwrap();
            assert!(bx.verify().unwrap().overall());
        }
    }
}

#[test]
fn hit_action_of_regular_comodule_is_a_module() {
    for name in ["s3", "sweedler4", "taft-3-7-2"] {
        let h = hopfdouble::registry::build_hopf_named(name).unwrap();
        let act = action_from_coaction(&h.comult, Side::Right, h.dim);
        assert!(RepModule::new(&dual(&h), act.clone()).verify().unwrap().overall(), "{}", name);
        assert_eq!(coaction_from_action(&act, Side::Right, h.dim), h.comult);
        let left = action_from_coaction(&h.comult, Side::Left, h.dim);
        assert_eq!(coaction_from_action(&left, Side::Left, h.dim), h.comult);
    }
}
