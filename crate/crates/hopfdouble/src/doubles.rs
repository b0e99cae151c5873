//! The quantum double `K*ᶜᵒᵖ ⋈_σ H` on the basis `e_i*⊗f_j` (index `i·dim H + j`).
//!
//! Sweedler indices on `k*` below are legs of `Δ_{K*}`; the reversed order in
//! the formulas is what makes the coalgebra that of `K*ᶜᵒᵖ⊗H`.

use crate::error::Result;
use crate::exactmath::Matrix;
use crate::hopf::{dual, HopfAlgebraData};
use crate::pairing::{form_functional, sigma_bar, standard_pairing, HopfPairing, PairingKind};

/// `(k*⋈h)(k'*⋈h') = Σ σ(k'*₃, h₁) k*k'*₂ ⋈ h₂h' σ̄(k'*₁, h₃)`.
pub fn double_mult(p: &HopfPairing) -> Matrix {
    let kd = dual(&p.k_alg);
    let h = &p.h_alg;
    let (nk, nh) = (kd.dim, h.dim);
    let f = h.field;
    let sig = p.functional();
    let sbar = form_functional(&sigma_bar(p));
    // (k, h₁, h₂, h₃, k'₁, k'₂, k'₃, h')
    Matrix::identity(f, nk * nh * nk * nh)
        .then_kron(&[&kd.id(), &h.comult2(), &kd.comult2(), &h.id()])
        .then_perm(&[nk, nh, nh, nh, nk, nk, nk, nh], &[6, 1, 0, 5, 2, 7, 4, 3])
        .then_kron(&[&sig, &kd.mult, &h.mult, &sbar])
}

/// `Δ(k*⋈h) = Σ (k*₂⋈h₁)⊗(k*₁⋈h₂)`.
pub fn double_comult(kd: &HopfAlgebraData, h: &HopfAlgebraData) -> Matrix {
    let (nk, nh) = (kd.dim, h.dim);
    Matrix::identity(h.field, nk * nh)
        .then_kron(&[&kd.comult, &h.comult])
        .then_perm(&[nk, nk, nh, nh], &[1, 2, 0, 3])
}

/// `S(k*⋈h) = (1⋈S_H(h))(S_{K*}⁻¹(k*)⋈1)` using the given product.
fn double_antipode(kd: &HopfAlgebraData, h: &HopfAlgebraData, mult: &Matrix) -> Matrix {
    let (nk, nh) = (kd.dim, h.dim);
    let from_h = kd.unit.kron(&h.id());
    let from_k = kd.id().kron(&h.unit);
    Matrix::identity(h.field, nk * nh)
        .then_kron(&[&kd.antipode_inv, &h.antipode])
        .then_perm(&[nk, nh], &[1, 0])
        .then_kron(&[&from_h, &from_k])
        .mul(mult)
}

fn assemble(name: String, kd: &HopfAlgebraData, h: &HopfAlgebraData, mult: Matrix) -> Result<HopfAlgebraData> {
    let comult = double_comult(kd, h);
    let antipode = double_antipode(kd, h, &mult);
    HopfAlgebraData::new(name, h.field, mult, kd.unit.kron(&h.unit), comult, kd.counit.kron(&h.counit), antipode)
}

/// The generalized quantum double of a pairing, checked against the axiom suite.
pub fn quantum_double(p: &HopfPairing) -> Result<HopfAlgebraData> {
    let kd = dual(&p.k_alg);
    assemble(format!("double({})", p.name), &kd, &p.h_alg, double_mult(p))?.verified()
}

/// `D(H) = H*ᶜᵒᵖ ⋈ H` from its own formula
/// `(f⋈h)(f'⋈h') = Σ ⟨f'₃,h₁⟩ ff'₂ ⋈ h₂h' ⟨S⁻¹(f'₁),h₃⟩`.
pub fn drinfeld_double(h: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    let hd = dual(h);
    let n = h.dim;
    let f = h.field;
    let eval = form_functional(&h.id());
    let sinv_eval = hd.antipode_inv.kron(&h.id()).mul(&eval);
    let mult = Matrix::identity(f, n * n * n * n)
        .then_kron(&[&hd.id(), &h.comult2(), &hd.comult2(), &h.id()])
        .then_perm(&[n, n, n, n, n, n, n, n], &[6, 1, 0, 5, 2, 7, 4, 3])
        .then_kron(&[&eval, &hd.mult, &h.mult, &sinv_eval]);
    assemble(format!("D({})", h.name), &hd, h, mult)?.verified()
}

/// `quantum_double` of the evaluation pairing on `h`.
pub fn double_of_evaluation(h: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    quantum_double(&standard_pairing(PairingKind::Evaluation, h, h)?)
}
