//! Hopf pairings `σ: K*⊗H → k`.
//!
//! A pairing is stored on the bases of `K` and `H`: `form[i][j] = σ(e_i*, f_j)`.
//! `K*` always means `dual(K)` on the dual basis, whose product is the
//! transpose of `Δ_K`.

use crate::error::{HopfError, Result};
use crate::exactmath::Matrix;
use crate::hopf::{convolution, dual, tensor_product, variant, verify_hopf_map, HopfAlgebraData, Variant};
use crate::report::VerificationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPairing {
    pub name: String,
    pub k_alg: HopfAlgebraData,
    pub h_alg: HopfAlgebraData,
    pub form: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairingKind {
    Evaluation,
    Trivial,
    FromMap(Matrix),
}

impl HopfPairing {
    pub fn new(name: impl Into<String>, k_alg: HopfAlgebraData, h_alg: HopfAlgebraData, form: Matrix) -> Result<Self> {
        if k_alg.field != h_alg.field || form.field() != k_alg.field {
            return Err(HopfError::FieldMismatch);
        }
        if form.shape() != (k_alg.dim, h_alg.dim) {
            return Err(HopfError::ShapeMismatch(format!(
                "form is {:?}, expected ({}, {})",
                form.shape(),
                k_alg.dim,
                h_alg.dim
            )));
        }
        Ok(HopfPairing { name: name.into(), k_alg, h_alg, form })
    }

    /// `K*` on the dual basis.
    pub fn k_dual(&self) -> HopfAlgebraData {
        dual(&self.k_alg)
    }

    /// The form as a functional `K*⊗H → k`, shape `(dim K · dim H, 1)`.
    pub fn functional(&self) -> Matrix {
        form_functional(&self.form)
    }

    /// `σ_r: H → K`, `h ↦ Σ_i σ(e_i*, h) e_i`.
    pub fn sigma_r(&self) -> Matrix {
        self.form.transpose()
    }

    /// `σ_l: K* → H*`, `k* ↦ σ(k*, −)`.
    pub fn sigma_l(&self) -> Matrix {
        self.form.clone()
    }

    /// The swapped pairing `σ'(h, k*) = σ(k*, h)` on `H** ⊗ K*`, i.e. a
    /// pairing of `(H*)*` with `K*`.
    pub fn swapped(&self) -> HopfPairing {
        HopfPairing {
            name: format!("swap({})", self.name),
            k_alg: dual(&self.h_alg),
            h_alg: dual(&self.k_alg),
            form: self.form.transpose(),
        }
    }

    pub fn verified(self) -> Result<Self> {
        let r = verify_pairing(&self);
        if r.overall() {
            Ok(self)
        } else {
            Err(HopfError::Validation(Box::new(r)))
        }
    }
}

/// Reshapes a `(a, b)` form into a functional on `A⊗B`.
pub fn form_functional(form: &Matrix) -> Matrix {
    let (a, b) = form.shape();
    let items = form
        .row_data()
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i * b + j, 0, v.clone())))
        .collect();
    Matrix::from_triplets(form.field(), a * b, 1, items)
}

/// Conditions (i)–(iv), plus the derived antipode condition reported separately.
pub fn verify_pairing(p: &HopfPairing) -> VerificationReport {
    let mut r = VerificationReport::new(format!("pairing {}", p.name));
    let kd = p.k_dual();
    let h = &p.h_alg;
    let (nk, nh) = (kd.dim, h.dim);
    let f = h.field;
    if p.form.shape() != (nk, nh) {
        r.fail_counts("shape", vec![], p.form.rows() * p.form.cols(), nk * nh);
        return r;
    }
    let sig = p.functional();
    let idk = kd.id();
    let idh = h.id();

    // (i) σ(aa', h) = Σ σ(a, h₁) σ(a', h₂)
    let lhs = Matrix::identity(f, nk * nk * nh).then_kron(&[&kd.mult, &idh]).mul(&sig);
    let rhs = Matrix::identity(f, nk * nk * nh)
        .then_kron(&[&idk, &idk, &h.comult])
        .then_perm(&[nk, nk, nh, nh], &[0, 2, 1, 3])
        .then_kron(&[&sig, &sig]);
    r.check_map("pairing-i", &lhs, &rhs, &[nk, nk, nh], &[1]);

    // (ii) σ(a, hh') = Σ σ(a₁, h) σ(a₂, h')
    let lhs = Matrix::identity(f, nk * nh * nh).then_kron(&[&idk, &h.mult]).mul(&sig);
    let rhs = Matrix::identity(f, nk * nh * nh)
        .then_kron(&[&kd.comult, &idh, &idh])
        .then_perm(&[nk, nk, nh, nh], &[0, 2, 1, 3])
        .then_kron(&[&sig, &sig]);
    r.check_map("pairing-ii", &lhs, &rhs, &[nk, nh, nh], &[1]);

    // (iii) σ(1, h) = ε(h)
    let lhs = kd.unit.kron(&idh).mul(&sig);
    r.check_map("pairing-iii", &lhs, &h.counit, &[nh], &[1]);

    // (iv) σ(a, 1) = ε(a)
    let lhs = idk.kron(&h.unit).mul(&sig);
    r.check_map("pairing-iv", &lhs, &kd.counit, &[nk], &[1]);

    // (v) σ(a, S h) = σ(S a, h)
    let lhs = idk.kron(&h.antipode).mul(&sig);
    let rhs = kd.antipode.kron(&idh).mul(&sig);
    r.check_map("pairing-v", &lhs, &rhs, &[nk, nh], &[1]);
    r
}

/// `(σ_l, σ_r)` after checking that both are Hopf algebra maps and `σ_l = σ_r*`.
pub fn induced_maps(p: &HopfPairing) -> Result<(Matrix, Matrix)> {
    let sr = p.sigma_r();
    let sl = p.sigma_l();
    let rr = verify_hopf_map(&p.h_alg, &p.k_alg, &sr);
    if !rr.overall() {
        return Err(HopfError::NotHopfMap(format!("sigma_r fails {:?}", rr.failing())));
    }
    let rl = verify_hopf_map(&p.k_dual(), &dual(&p.h_alg), &sl);
    if !rl.overall() {
        return Err(HopfError::NotHopfMap(format!("sigma_l fails {:?}", rl.failing())));
    }
    if sl != sr.transpose() {
        return Err(HopfError::NotHopfMap("sigma_l differs from the dual of sigma_r".into()));
    }
    Ok((sl, sr))
}

/// `σ̄ = σ∘(id⊗S⁻¹)` as a `(dim K, dim H)` form.
pub fn sigma_bar(p: &HopfPairing) -> Matrix {
    p.form.mul(&p.h_alg.antipode_inv.transpose())
}

/// Checks `σ∗σ̄ = σ̄∗σ = ε⊗ε` in `Hom(K*ᶜᵒᵖ⊗H, k)`.
pub fn verify_sigma_bar(p: &HopfPairing) -> VerificationReport {
    let mut r = VerificationReport::new(format!("sigma-bar {}", p.name));
    let kc = variant(&p.k_dual(), Variant::Cop);
    let t = tensor_product(&kc, &p.h_alg).expect("fields agree");
    let c = t.coalgebra();
    let ground = HopfAlgebraData::ground(p.h_alg.field).algebra();
    let s = p.functional();
    let sb = form_functional(&sigma_bar(p));
    let ee = t.counit.clone();
    let dims = [kc.dim, p.h_alg.dim];
    r.check_map("sigma-conv-sigmabar", &convolution(&c, &ground, &s, &sb), &ee, &dims, &[1]);
    r.check_map("sigmabar-conv-sigma", &convolution(&c, &ground, &sb, &s), &ee, &dims, &[1]);
    r
}

pub fn standard_pairing(kind: PairingKind, k_alg: &HopfAlgebraData, h_alg: &HopfAlgebraData) -> Result<HopfPairing> {
    let field = h_alg.field;
    if k_alg.field != field {
        return Err(HopfError::FieldMismatch);
    }
    let (name, form) = match kind {
        PairingKind::Evaluation => {
            if !k_alg.structure_eq(h_alg) {
                return Err(HopfError::AlgebraMismatch);
            }
            (format!("eval-{}", h_alg.name), Matrix::identity(field, h_alg.dim))
        }
        PairingKind::Trivial => (format!("trivial-{}-{}", k_alg.name, h_alg.name), k_alg.unit.transpose().mul(&h_alg.counit.transpose())),
        PairingKind::FromMap(f) => {
            let r = verify_hopf_map(h_alg, k_alg, &f);
            if !r.overall() {
                return Err(HopfError::NotHopfMap(format!("{:?}", r.failing())));
            }
            (format!("map-{}-{}", h_alg.name, k_alg.name), f.transpose())
        }
    };
    HopfPairing::new(name, k_alg.clone(), h_alg.clone(), form)?.verified()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::{build_hopf, build_pairing, ExampleKey};

    #[test]
    fn trivial_pairing_passes_and_sigma_bar_is_sigma() {
        let p = build_pairing("trivial-c2-c3").unwrap();
        assert!(verify_pairing(&p).overall());
        assert_eq!(sigma_bar(&p), p.form);
        let (_, sr) = induced_maps(&p).unwrap();
        // σ_r(h) = ε(h)·1
        let expect = p.h_alg.counit.mul(&p.k_alg.unit);
        assert_eq!(sr, expect);
    }

    #[test]
    fn evaluation_sigma_r_is_identity() {
        for name in ["eval-sweedler4", "eval-c2", "eval-s3"] {
            let p = build_pairing(name).unwrap();
            let (sl, sr) = induced_maps(&p).unwrap();
            assert_eq!(sr, p.h_alg.id());
            assert_eq!(sl, sr.transpose());
        }
    }

    #[test]
    fn sigma_bar_on_c2_and_sweedler() {
        let p = build_pairing("eval-c2").unwrap();
        assert_eq!(sigma_bar(&p), p.form);
        let p = build_pairing("eval-sweedler4").unwrap();
        let sb = sigma_bar(&p);
        assert_eq!(sb, p.h_alg.antipode_inv.transpose());
        assert!(verify_sigma_bar(&p).overall());
    }

    #[test]
    fn perturbed_sweedler_fails_condition_i() {
        let p = build_pairing("eval-sweedler4").unwrap();
        let mut dense = p.form.to_dense();
        dense[1] = p.form.field().one();
        let form = Matrix::from_dense(p.form.field(), 4, 4, dense).unwrap();
        let bad = HopfPairing { form, ..p };
        let r = verify_pairing(&bad);
        let e = r.get("pairing-i").unwrap();
        assert!(!e.pass);
        assert_eq!(e.witness.as_ref().unwrap().indices.len(), 4);
    }

    #[test]
    fn sign_pairing_sigma_r_is_the_map() {
        let p = build_pairing("sign-s3-c2").unwrap();
        let (_, sr) = induced_maps(&p).unwrap();
        assert_eq!(sr.rank(), 2);
        assert_eq!(sr.shape(), (6, 2));
        // identity and 3-cycles go to 1, transpositions to g
        for i in 0..6 {
            let want = if i < 3 { 0 } else { 1 };
            assert!(sr.get(i, want).is_one());
        }
    }

    #[test]
    fn evaluation_needs_equal_algebras() {
        let c2 = build_hopf(&ExampleKey::Cyclic(2)).unwrap();
        let c3 = build_hopf(&ExampleKey::Cyclic(3)).unwrap();
        assert!(matches!(standard_pairing(PairingKind::Evaluation, &c2, &c3), Err(HopfError::AlgebraMismatch)));
        let bad = Matrix::zeros(c2.field, 3, 2);
        assert!(matches!(standard_pairing(PairingKind::FromMap(bad), &c2, &c3), Err(HopfError::NotHopfMap(_))));
    }

    #[test]
    fn condition_v_holds_on_registry() {
        for name in crate::registry::pairing_names() {
            let p = build_pairing(name).unwrap();
            assert!(verify_pairing(&p).passed("pairing-v"), "{}", name);
            assert!(verify_sigma_bar(&p).overall(), "{}", name);
        }
    }
}
