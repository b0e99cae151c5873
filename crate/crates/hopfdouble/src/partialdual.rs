//! Comodule algebras, module coalgebras, partially admissible mapping
//! systems (PAMS) and the left partial dual `C*#B`.
//!
//! For a PAMS `B ⇄ A ⇄ C` the ambient Hopf algebra is `A`. The carrier of the
//! partial dual is `C*⊗B` with basis `x_i*⊗b_j` at index `i·dim B + j`.
//! Report entries are prefixed by the condition they belong to: `c1`…`c6`
//! for the primal conditions, `c1*`…`c6*` for their dual forms and `l1`,
//! `l2` for the two consequences listed after them.

use crate::error::{HopfError, Result};
use crate::exactmath::{coordinates, same_row_space, FieldSpec, Matrix};
use crate::hopf::{
    convolution, convolution_inverse, dual, tensor_product, variant, Algebra, Coalgebra, HopfAlgebraData, Variant,
};
use crate::pairing::{induced_maps, HopfPairing};
use crate::report::VerificationReport;

/// A left comodule algebra `B` with coaction `ρ: B → A⊗B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    pub dim: usize,
    pub mult: Matrix,
    pub unit: Matrix,
    pub coaction: Matrix,
}

/// A right module coalgebra `C` with action `◁: C⊗A → C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCoalgebra {
    pub dim: usize,
    pub comult: Matrix,
    pub counit: Matrix,
    pub action: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pams {
    pub ambient: HopfAlgebraData,
    pub b: ComoduleAlgebra,
    pub c: ModuleCoalgebra,
    pub iota: Matrix,
    pub zeta: Matrix,
    pub pi: Matrix,
    pub gamma: Matrix,
    pub zeta_bar: Option<Matrix>,
    pub gamma_bar: Option<Matrix>,
}

/// A quasi-Hopf algebra without antipode; the associator lives in the
/// triple tensor power, stored as a `(1, n³)` row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiHopfData {
    pub dim: usize,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
    pub associator: Matrix,
    pub associator_inv: Matrix,
}

impl ComoduleAlgebra {
    pub fn algebra(&self) -> Algebra {
        Algebra { dim: self.dim, mult: self.mult.clone(), unit: self.unit.clone() }
    }
}

impl ModuleCoalgebra {
    pub fn coalgebra(&self) -> Coalgebra {
        Coalgebra { dim: self.dim, comult: self.comult.clone(), counit: self.counit.clone() }
    }
}

impl Pams {
    /// Assembles a PAMS and caches the convolution inverses that exist.
    pub fn new(
        ambient: HopfAlgebraData,
        b: ComoduleAlgebra,
        c: ModuleCoalgebra,
        maps: [Matrix; 4],
    ) -> Pams {
        let [iota, zeta, pi, gamma] = maps;
        let zeta_bar = convolution_inverse(&ambient.coalgebra(), &b.algebra(), &zeta).ok();
        let gamma_bar = convolution_inverse(&c.coalgebra(), &ambient.algebra(), &gamma).ok();
        Pams { ambient, b, c, iota, zeta, pi, gamma, zeta_bar, gamma_bar }
    }

    pub fn with_zeta(&self, zeta: Matrix) -> Pams {
        Pams::new(self.ambient.clone(), self.b.clone(), self.c.clone(), [self.iota.clone(), zeta, self.pi.clone(), self.gamma.clone()])
    }

    pub fn with_gamma(&self, gamma: Matrix) -> Pams {
        Pams::new(self.ambient.clone(), self.b.clone(), self.c.clone(), [self.iota.clone(), self.zeta.clone(), self.pi.clone(), gamma])
    }

    pub fn with_pi(&self, pi: Matrix) -> Pams {
        Pams::new(self.ambient.clone(), self.b.clone(), self.c.clone(), [self.iota.clone(), self.zeta.clone(), pi, self.gamma.clone()])
    }

    fn field(&self) -> FieldSpec {
        self.ambient.field
    }

    /// `1_C = π(1_A)`.
    pub fn unit_c(&self) -> Matrix {
        self.ambient.unit.mul(&self.pi)
    }

    /// `ε_B = ε_A∘ι`.
    pub fn counit_b(&self) -> Matrix {
        self.iota.mul(&self.ambient.counit)
    }

    /// The right `C`-coaction `(id⊗π)Δ` on `A`.
    pub fn c_coaction(&self) -> Matrix {
        self.ambient.comult.then_kron(&[&self.ambient.id(), &self.pi])
    }
}

/// `K^op⊗H ⊇ H` and `K^op⊗H ↠ K^op` with `ζ(k⊗h)=ε(k)h`, `γ(k)=k⊗1`.
pub fn canonical_pams(p: &HopfPairing) -> Result<Pams> {
    let (_, sr) = induced_maps(p)?;
    let k = &p.k_alg;
    let h = &p.h_alg;
    let (nk, nh) = (k.dim, h.dim);
    let f = h.field;
    let ambient = tensor_product(&variant(k, Variant::Op), h)?;
    let sinv_sr = h.antipode_inv.mul(&sr);
    // ρ(h) = Σ (σ_r(S⁻¹h₃) ⊗ h₁) ⊗ h₂
    let rho = h.comult2().then_perm(&[nh, nh, nh], &[2, 0, 1]).then_kron(&[&sinv_sr, &h.id(), &h.id()]);
    // ι(h) = Σ σ_r(S⁻¹h₂) ⊗ h₁
    let iota = h.comult.then_perm(&[nh, nh], &[1, 0]).then_kron(&[&sinv_sr, &h.id()]);
    // l ◁ (k⊗h) = k·l·σ_r(h)
    let action = Matrix::identity(f, nk * nk * nh)
        .then_kron(&[&k.id(), &k.id(), &sr])
        .then_perm(&[nk, nk, nk], &[1, 0, 2])
        .mul(&k.mult3());
    let pi = Matrix::identity(f, nk * nh).then_kron(&[&k.id(), &sr]).mul(&k.mult);
    let zeta = k.counit.kron(&h.id());
    let gamma = k.id().kron(&h.unit);
    let b = ComoduleAlgebra { dim: nh, mult: h.mult.clone(), unit: h.unit.clone(), coaction: rho };
    let c = ModuleCoalgebra { dim: nk, comult: k.comult.clone(), counit: k.counit.clone(), action };
    Ok(Pams::new(ambient, b, c, [iota, zeta, pi, gamma]))
}

/// Distinct condition prefixes of the failing entries, in ledger order.
pub fn failed_conditions(r: &VerificationReport) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for e in r.entries.iter().filter(|e| !e.pass) {
        let c = e.id.split('.').next().unwrap_or("").to_string();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn check_rank(r: &mut VerificationReport, id: &str, m: &Matrix, want: usize) {
    let got = m.rank();
    if got == want {
        r.pass(id);
    } else {
        r.fail_counts(id, vec![], got, want);
    }
}

fn check_conv_inverse(r: &mut VerificationReport, id: &str, c: &Coalgebra, a: &Algebra, f: &Matrix) {
    match convolution_inverse(c, a, f) {
        Ok(g) => {
            let ee = c.counit.mul(&a.unit);
            let ok = convolution(c, a, f, &g) == ee && convolution(c, a, &g, f) == ee;
            r.flag(id, ok);
        }
        Err(_) => r.flag(id, false),
    }
}

/// Structure checks for `B` as a left comodule algebra.
fn check_comodule_algebra(r: &mut VerificationReport, pre: &str, a: &HopfAlgebraData, b: &ComoduleAlgebra) {
    let (na, nb) = (a.dim, b.dim);
    let f = a.field;
    let idb = Matrix::identity(f, nb);
    let rho = &b.coaction;
    r.check_map(format!("{}.b-associative", pre), &b.mult.kron(&idb).mul(&b.mult), &idb.kron(&b.mult).mul(&b.mult), &[nb, nb, nb], &[nb]);
    r.check_map(format!("{}.b-unit", pre), &b.unit.kron(&idb).mul(&b.mult), &idb, &[nb], &[nb]);
    r.check_map(format!("{}.rho-coassociative", pre), &rho.then_kron(&[&a.comult, &idb]), &rho.then_kron(&[&a.id(), rho]), &[nb], &[na, na, nb]);
    r.check_map(format!("{}.rho-counital", pre), &rho.then_kron(&[&a.counit, &idb]), &idb, &[nb], &[nb]);
    let lhs = b.mult.mul(rho);
    let rhs = Matrix::identity(f, nb * nb)
        .then_kron(&[rho, rho])
        .then_perm(&[na, nb, na, nb], &[0, 2, 1, 3])
        .then_kron(&[&a.mult, &b.mult]);
    r.check_map(format!("{}.rho-multiplicative", pre), &lhs, &rhs, &[nb, nb], &[na, nb]);
    r.check_map(format!("{}.rho-unital", pre), &b.unit.mul(rho), &a.unit.kron(&b.unit), &[1], &[na, nb]);
}

/// Structure checks for `C` as a right module coalgebra.
fn check_module_coalgebra(r: &mut VerificationReport, pre: &str, a: &HopfAlgebraData, c: &ModuleCoalgebra) {
    let (na, nc) = (a.dim, c.dim);
    let f = a.field;
    let idc = Matrix::identity(f, nc);
    let act = &c.action;
    r.check_map(format!("{}.c-coassociative", pre), &c.comult.then_kron(&[&c.comult, &idc]), &c.comult.then_kron(&[&idc, &c.comult]), &[nc], &[nc, nc, nc]);
    r.check_map(format!("{}.c-counit", pre), &c.comult.then_kron(&[&c.counit, &idc]), &idc, &[nc], &[nc]);
    let lhs = act.kron(&a.id()).mul(act);
    let rhs = idc.kron(&a.mult).mul(act);
    r.check_map(format!("{}.action-associative", pre), &lhs, &rhs, &[nc, na, na], &[nc]);
    r.check_map(format!("{}.action-unital", pre), &idc.kron(&a.unit).mul(act), &idc, &[nc], &[nc]);
    let lhs = act.mul(&c.comult);
    let rhs = Matrix::identity(f, nc * na)
        .then_kron(&[&c.comult, &a.comult])
        .then_perm(&[nc, nc, na, na], &[0, 2, 1, 3])
        .then_kron(&[act, act]);
    r.check_map(format!("{}.action-comultiplicative", pre), &lhs, &rhs, &[nc, na], &[nc, nc]);
    r.check_map(format!("{}.action-counital", pre), &act.mul(&c.counit), &c.counit.kron(&a.counit), &[nc, na], &[1]);
}

/// The full condition ledger, primal and dual forms.
pub fn verify_pams(s: &Pams) -> VerificationReport {
    let mut r = VerificationReport::new("pams");
    let a = &s.ambient;
    let (na, nb, nc) = (a.dim, s.b.dim, s.c.dim);
    let f = s.field();
    let ida = a.id();
    let idb = Matrix::identity(f, nb);
    let idc = Matrix::identity(f, nc);
    let shapes = [
        (s.iota.shape(), (nb, na)),
        (s.zeta.shape(), (na, nb)),
        (s.pi.shape(), (na, nc)),
        (s.gamma.shape(), (nc, na)),
        (s.b.coaction.shape(), (nb, na * nb)),
        (s.c.action.shape(), (nc * na, nc)),
    ];
    if shapes.iter().any(|(g, w)| g != w) {
        r.flag("shape", false);
        return r;
    }
    let (iota, zeta, pi, gamma) = (&s.iota, &s.zeta, &s.pi, &s.gamma);
    let rho = &s.b.coaction;
    let act = &s.c.action;
    let chi = s.c_coaction();
    let one_c = s.unit_c();
    let eps_b = s.counit_b();

    // (1)
    check_comodule_algebra(&mut r, "c1", a, &s.b);
    check_module_coalgebra(&mut r, "c1", a, &s.c);
    check_rank(&mut r, "c1.iota-injective", iota, nb);
    r.check_map("c1.iota-multiplicative", &s.b.mult.mul(iota), &iota.kron(iota).mul(&a.mult), &[nb, nb], &[na]);
    r.check_map("c1.iota-unital", &s.b.unit.mul(iota), &a.unit, &[1], &[na]);
    r.check_map("c1.iota-colinear", &iota.mul(&a.comult), &rho.then_kron(&[&ida, iota]), &[nb], &[na, na]);
    check_rank(&mut r, "c1.pi-surjective", pi, nc);
    r.check_map("c1.pi-comultiplicative", &pi.mul(&s.c.comult), &a.comult.then_kron(&[pi, pi]), &[na], &[nc, nc]);
    r.check_map("c1.pi-counital", &pi.mul(&s.c.counit), &a.counit, &[na], &[1]);
    r.check_map("c1.pi-linear", &a.mult.mul(pi), &pi.kron(&ida).mul(act), &[na, na], &[nc]);

    // (2)
    let coinv = chi.sub(&ida.kron(&one_c)).transpose().kernel_basis();
    r.flag("c2.image-equals-coinvariants", same_row_space(iota, &coinv));
    if coinv.rows() * nc == na {
        r.pass("c2.coinvariant-dimension");
    } else {
        r.fail_counts("c2.coinvariant-dimension", vec![], coinv.rows() * nc, na);
    }

    // (3)
    check_conv_inverse(&mut r, "c3.zeta-invertible", &a.coalgebra(), &s.b.algebra(), zeta);
    check_conv_inverse(&mut r, "c3.gamma-invertible", &s.c.coalgebra(), &a.algebra(), gamma);

    // (4) ζ(ι(b)a) = bζ(a); (γ⊗id)Δ_C = χγ
    let lhs = iota.kron(&ida).mul(&a.mult).mul(zeta);
    let rhs = idb.kron(zeta).mul(&s.b.mult);
    r.check_map("c4.zeta-b-linear", &lhs, &rhs, &[nb, na], &[nb]);
    r.check_map("c4.gamma-c-colinear", &gamma.mul(&chi), &s.c.comult.then_kron(&[gamma, &idc]), &[nc], &[na, nc]);

    // (5)
    r.check_map("c5.zeta-unit", &a.unit.mul(zeta), &s.b.unit, &[1], &[nb]);
    r.check_map("c5.zeta-counit", &zeta.mul(&eps_b), &a.counit, &[na], &[1]);
    r.check_map("c5.gamma-unit", &one_c.mul(gamma), &a.unit, &[1], &[na]);
    r.check_map("c5.gamma-counit", &gamma.mul(&a.counit), &s.c.counit, &[nc], &[1]);

    // (6) (ι∘ζ)∗(γ∘π) = id
    let lhs = convolution(&a.coalgebra(), &a.algebra(), &zeta.mul(iota), &pi.mul(gamma));
    r.check_map("c6.convolution-identity", &lhs, &ida, &[na], &[na]);

    // consequences
    r.check_map("l1.zeta-iota", &iota.mul(zeta), &idb, &[nb], &[nb]);
    r.check_map("l1.pi-gamma", &gamma.mul(pi), &idc, &[nc], &[nc]);
    r.check_map("l2.zeta-gamma", &gamma.mul(zeta), &s.c.counit.mul(&s.b.unit), &[nc], &[nb]);

    verify_dual_forms(s, &mut r);
    r
}

/// The dual diagram `C* ⇄ A* ⇄ B*`, checked on explicitly transposed maps.
fn verify_dual_forms(s: &Pams, r: &mut VerificationReport) {
    let ad = dual(&s.ambient);
    let (na, nb, nc) = (ad.dim, s.b.dim, s.c.dim);
    let f = ad.field;
    let ida = ad.id();
    let idb = Matrix::identity(f, nb);
    let idc = Matrix::identity(f, nc);
    let pi_d = s.pi.transpose();
    let gamma_d = s.gamma.transpose();
    let iota_d = s.iota.transpose();
    let zeta_d = s.zeta.transpose();
    // C* algebra, right A*-comodule; B* coalgebra, left A*-module
    let cd_mult = s.c.comult.transpose();
    let cd_unit = s.c.counit.transpose();
    let cd_coact = s.c.action.transpose();
    let bd_comult = s.b.mult.transpose();
    let bd_counit = s.b.unit.transpose();
    let bd_act = s.b.coaction.transpose();
    let cd = Algebra { dim: nc, mult: cd_mult.clone(), unit: cd_unit.clone() };
    let bd = Coalgebra { dim: nb, comult: bd_comult.clone(), counit: bd_counit.clone() };

    // (1*)
    check_rank(r, "c1*.pi-injective", &pi_d, nc);
    r.check_map("c1*.pi-multiplicative", &cd_mult.mul(&pi_d), &pi_d.kron(&pi_d).mul(&ad.mult), &[nc, nc], &[na]);
    r.check_map("c1*.pi-unital", &cd_unit.mul(&pi_d), &ad.unit, &[1], &[na]);
    r.check_map("c1*.pi-colinear", &pi_d.mul(&ad.comult), &cd_coact.then_kron(&[&pi_d, &ida]), &[nc], &[na, na]);
    check_rank(r, "c1*.iota-surjective", &iota_d, nb);
    r.check_map("c1*.iota-comultiplicative", &iota_d.mul(&bd_comult), &ad.comult.then_kron(&[&iota_d, &iota_d]), &[na], &[nb, nb]);
    r.check_map("c1*.iota-counital", &iota_d.mul(&bd_counit), &ad.counit, &[na], &[1]);
    r.check_map("c1*.iota-linear", &ad.mult.mul(&iota_d), &ida.kron(&iota_d).mul(&bd_act), &[na, na], &[nb]);

    // (2*) left coinvariants of (ι*⊗id)Δ
    let chi_d = ad.comult.then_kron(&[&iota_d, &ida]);
    let one_bd = ad.unit.mul(&iota_d);
    let coinv = chi_d.sub(&one_bd.kron(&ida)).transpose().kernel_basis();
    r.flag("c2*.image-equals-coinvariants", same_row_space(&pi_d, &coinv));
    if coinv.rows() * nb == na {
        r.pass("c2*.coinvariant-dimension");
    } else {
        r.fail_counts("c2*.coinvariant-dimension", vec![], coinv.rows() * nb, na);
    }

    // (3*)
    check_conv_inverse(r, "c3*.gamma-invertible", &ad.coalgebra(), &cd, &gamma_d);
    check_conv_inverse(r, "c3*.zeta-invertible", &bd, &ad.algebra(), &zeta_d);

    // (4*) γ*(a*π*(c*)) = γ*(a*)c*; (id⊗ζ*)Δ_{B*} = χ*ζ*
    let lhs = ida.kron(&pi_d).mul(&ad.mult).mul(&gamma_d);
    let rhs = gamma_d.kron(&idc).mul(&cd_mult);
    r.check_map("c4*.gamma-c-linear", &lhs, &rhs, &[na, nc], &[nc]);
    r.check_map("c4*.zeta-b-colinear", &zeta_d.mul(&chi_d), &bd_comult.then_kron(&[&idb, &zeta_d]), &[nb], &[nb, na]);

    // (5*)
    let eps_cd = pi_d.mul(&ad.counit);
    r.check_map("c5*.gamma-unit", &ad.unit.mul(&gamma_d), &cd_unit, &[1], &[nc]);
    r.check_map("c5*.gamma-counit", &gamma_d.mul(&eps_cd), &ad.counit, &[na], &[1]);
    r.check_map("c5*.zeta-unit", &one_bd.mul(&zeta_d), &ad.unit, &[1], &[na]);
    r.check_map("c5*.zeta-counit", &zeta_d.mul(&ad.counit), &bd_counit, &[nb], &[1]);

    // (6*) (ζ*∘ι*)∗(π*∘γ*) = id
    let lhs = convolution(&ad.coalgebra(), &ad.algebra(), &iota_d.mul(&zeta_d), &gamma_d.mul(&pi_d));
    r.check_map("c6*.convolution-identity", &lhs, &ida, &[na], &[na]);

    r.check_map("l1*.gamma-pi", &pi_d.mul(&gamma_d), &idc, &[nc], &[nc]);
    r.check_map("l1*.iota-zeta", &zeta_d.mul(&iota_d), &idb, &[nb], &[nb]);
    r.check_map("l2*.gamma-zeta", &zeta_d.mul(&gamma_d), &bd_counit.mul(&cd_unit), &[nb], &[nc]);
}

/// Product of two elements of the `k`-fold tensor power of an algebra with
/// product `mult` on an `n`-dimensional space.
pub fn tensor_power_mul(mult: &Matrix, n: usize, k: usize, x: &Matrix, y: &Matrix) -> Matrix {
    let f = mult.field();
    let total = n.pow(k as u32);
    let dims = vec![n; k];
    let mut acc = Vec::new();
    for (i, a) in x.row(0) {
        let ii = crate::report::split_index(*i, &dims);
        for (j, b) in y.row(0) {
            let jj = crate::report::split_index(*j, &dims);
            let mut partial = vec![(0usize, a * b)];
            for t in 0..k {
                let row = mult.row(ii[t] * n + jj[t]);
                let mut next = Vec::with_capacity(partial.len() * row.len());
                for (p, pv) in &partial {
                    for (c, v) in row {
                        next.push((p * n + c, pv * v));
                    }
                }
                partial = next;
            }
            acc.extend(partial);
        }
    }
    Matrix::from_rows(f, total, vec![acc])
}

/// Inverse of `u` in the `k`-fold tensor power, from the minimal polynomial
/// of `u` (found among its first powers).
pub fn invert_in_tensor_power(mult: &Matrix, unit: &Matrix, n: usize, k: usize, u: &Matrix) -> Result<Matrix> {
    let mut one = unit.clone();
    for _ in 1..k {
        one = one.kron(unit);
    }
    let total = n.pow(k as u32);
    let bound = total.min(256);
    let mut powers = vec![one.clone()];
    loop {
        let next = tensor_power_mul(mult, n, k, powers.last().unwrap(), u);
        let mut basis = powers[0].clone();
        for p in &powers[1..] {
            basis = basis.vstack(p);
        }
        if let Some(c) = coordinates(&basis, &next) {
            // uᵐ = Σ cᵢ uⁱ, so u·(u^{m-1} − Σ_{i≥1} cᵢ u^{i-1}) = c₀
            let c0 = c.get(0, 0);
            let c0_inv = c0.inv().ok_or(HopfError::AssociatorNotInvertible)?;
            let m = powers.len();
            let mut inv = powers[m - 1].clone();
            for i in 1..m {
                let ci = c.get(0, i);
                if !ci.is_zero() {
                    inv = inv.sub(&powers[i - 1].scale(&ci));
                }
            }
            let inv = inv.scale(&c0_inv);
            let check = tensor_power_mul(mult, n, k, u, &inv);
            if check != one || tensor_power_mul(mult, n, k, &inv, u) != one {
                return Err(HopfError::AssociatorNotInvertible);
            }
            return Ok(inv);
        }
        if powers.len() >= bound {
            return Err(HopfError::AssociatorNotInvertible);
        }
        powers.push(next);
    }
}

/// Ingredients of the partial dual shared by its structure maps.
struct DualParts {
    nb: usize,
    nc: usize,
    na: usize,
    /// right `A*`-coaction of `C*`, `(nc, nc·na)`
    coact: Matrix,
    /// `h⇀x*`, `(na·nc, nc)`
    hit: Matrix,
    cd_mult: Matrix,
    cd_unit: Matrix,
}

fn parts(s: &Pams) -> DualParts {
    let (na, nb, nc) = (s.ambient.dim, s.b.dim, s.c.dim);
    let coact = s.c.action.transpose();
    // (h⇀x*)(c) = x*(c◁h): row (a, l) holds coordinates of e_a ⇀ e_l*
    let mut items = Vec::new();
    for (row, r) in s.c.action.row_data().iter().enumerate() {
        let (l, a) = (row / na, row % na);
        for (i, v) in r {
            items.push((a * nc + i, l, v.clone()));
        }
    }
    let hit = Matrix::from_triplets(s.field(), na * nc, nc, items);
    DualParts { nb, nc, na, coact, hit, cd_mult: s.c.comult.transpose(), cd_unit: s.c.counit.transpose() }
}

/// `(x*#b)(y*#c) = Σ x*(b₁⇀y*) # b₂c`.
fn smash_mult(s: &Pams, d: &DualParts) -> Matrix {
    let (na, nb, nc) = (d.na, d.nb, d.nc);
    let f = s.field();
    let idc = Matrix::identity(f, nc);
    let idb = Matrix::identity(f, nb);
    Matrix::identity(f, nc * nb * nc * nb)
        .then_kron(&[&idc, &s.b.coaction, &idc, &idb])
        .then_perm(&[nc, na, nb, nc, nb], &[0, 1, 3, 2, 4])
        .then_kron(&[&idc, &d.hit, &s.b.mult])
        .then_kron(&[&d.cd_mult, &idb])
}

/// Builds `C*#B` with its comultiplication, counit and associator.
pub fn partial_dual(s: &Pams) -> Result<QuasiHopfData> {
    let d = parts(s);
    let (na, nb, nc) = (d.na, d.nb, d.nc);
    let n = nc * nb;
    let f = s.field();
    let a = &s.ambient;
    let mult = smash_mult(s, &d);
    let unit = d.cd_unit.kron(&s.b.unit);
    let eps = d.cd_unit.clone(); // ε_C as the unit of C*
    let embed_b = eps.kron(&Matrix::identity(f, nb)); // b ↦ ε#b

    // G[i] = γ(x_i)Δ-split: Δ_A(γ(x_i)) as rows (nc, na·na)
    let g_delta = s.gamma.mul(&a.comult);

    // Δ(x*#1) = Σ_i (x*₁ # ζ[γ(x_i)↼x*₂]) ⊗ (x_i*#1)
    // W[(a,i)] = ζ(γ(x_i)↼e_a*) = Σ_q Δ_A(γ x_i)[(a,q)] ζ(e_q)
    let mut w_rows = Vec::with_capacity(na * nc);
    for aa in 0..na {
        for i in 0..nc {
            let items: Vec<(usize, usize, crate::exactmath::Scalar)> = g_delta
                .row(i)
                .iter()
                .filter(|(col, _)| col / na == aa)
                .map(|(col, v)| (col % na, 0, v.clone()))
                .collect();
            let vec = Matrix::from_triplets(f, na, 1, items).transpose();
            w_rows.push(vec.mul(&s.zeta).row(0).clone());
        }
    }
    let w = Matrix::from_rows(f, nb, w_rows);
    let mut dx_items = Vec::new();
    for l in 0..nc {
        for (col, cv) in d.coact.row(l) {
            let (m, aa) = (col / na, col % na);
            for i in 0..nc {
                for (bcol, wv) in w.row(aa * nc + i) {
                    // (e_m* # b) ⊗ (e_i* # 1)
                    let left = m * nb + bcol;
                    for (ucol, uv) in s.b.unit.row(0) {
                        let right = i * nb + ucol;
                        dx_items.push((l, left * n + right, &(cv * wv) * uv));
                    }
                }
            }
        }
    }
    let delta_x = Matrix::from_triplets(f, nc, n * n, dx_items);

    // Δ(ε#b) = Σ_i (ε # ζ[γ(x_i)b₁]) ⊗ (x_i* # b₂)
    let mut db_rows = Vec::with_capacity(nb);
    for bi in 0..nb {
        let mut acc = Vec::new();
        for (col, rv) in s.b.coaction.row(bi) {
            let (aa, b2) = (col / nb, col % nb);
            for i in 0..nc {
                let ga = Matrix::from_rows(f, na, vec![s.gamma.row(i).clone()]);
                let ea = Matrix::from_triplets(f, 1, na, vec![(0, aa, f.one())]);
                let z = crate::hopf::mul_elems(&a.mult, &ga, &ea).mul(&s.zeta);
                let left = z.mul(&embed_b);
                for (lc, lv) in left.row(0) {
                    acc.push((lc * n + i * nb + b2, rv * lv));
                }
            }
        }
        db_rows.push(acc);
    }
    let delta_b = Matrix::from_rows(f, n * n, db_rows);

    // Δ(x*#b) = Δ(x*#1)Δ(ε#b)
    let mut rows = Vec::with_capacity(n);
    for l in 0..nc {
        let x = Matrix::from_rows(f, n * n, vec![delta_x.row(l).clone()]);
        for bi in 0..nb {
            let y = Matrix::from_rows(f, n * n, vec![delta_b.row(bi).clone()]);
            rows.push(tensor_power_mul(&mult, n, 2, &x, &y).row(0).clone());
        }
    }
    let comult = Matrix::from_rows(f, n * n, rows);
    let counit = s.unit_c().transpose().kron(&s.counit_b());

    // φ⁻¹ = Σ_{i,j} (ε#ζ[γ(x_i)γ(x_j)₁]) ⊗ (x_i*#ζ[γ(x_j)₂]) ⊗ (x_j*#1)
    let mut items = Vec::new();
    for j in 0..nc {
        for (col, dv) in g_delta.row(j) {
            let (a1, a2) = (col / na, col % na);
            let e1 = Matrix::from_triplets(f, 1, na, vec![(0, a1, f.one())]);
            let z2 = Matrix::from_triplets(f, 1, na, vec![(0, a2, f.one())]).mul(&s.zeta);
            for i in 0..nc {
                let gi = Matrix::from_rows(f, na, vec![s.gamma.row(i).clone()]);
                let z1 = crate::hopf::mul_elems(&a.mult, &gi, &e1).mul(&s.zeta).mul(&embed_b);
                for (c1, v1) in z1.row(0) {
                    for (c2, v2) in z2.row(0) {
                        for (c3, v3) in s.b.unit.row(0) {
                            let idx = (c1 * n + i * nb + c2) * n + j * nb + c3;
                            items.push((0, idx, &(&(dv * v1) * v2) * v3));
                        }
                    }
                }
            }
        }
    }
    let associator_inv = Matrix::from_triplets(f, 1, n * n * n, items);
    let associator = invert_in_tensor_power(&mult, &unit, n, 3, &associator_inv)?;
    Ok(QuasiHopfData { dim: n, mult, unit, comult, counit, associator, associator_inv })
}

impl QuasiHopfData {
    /// `1⊗1⊗1` in the triple tensor power.
    pub fn triple_unit(&self) -> Matrix {
        self.unit.kron(&self.unit).kron(&self.unit)
    }

    pub fn associator_is_trivial(&self) -> bool {
        self.associator == self.triple_unit() && self.associator_inv == self.triple_unit()
    }
}

/// Compares `partial_dual(canonical_pams(σ))` with `quantum_double(σ)`.
pub fn check_double_realization(p: &HopfPairing) -> VerificationReport {
    let mut r = VerificationReport::new(format!("realization {}", p.name));
    let s = match canonical_pams(p) {
        Ok(s) => s,
        Err(_) => {
            r.flag("pams", false);
            return r;
        }
    };
    let q = match partial_dual(&s) {
        Ok(q) => q,
        Err(_) => {
            r.flag("associator-trivial", false);
            return r;
        }
    };
    let d = match crate::doubles::quantum_double(p) {
        Ok(d) => d,
        Err(_) => {
            r.flag("double", false);
            return r;
        }
    };
    let n = d.dim;
    r.check_map("associator-trivial", &q.associator, &q.triple_unit(), &[1], &[n, n, n]);
    r.check_map("associator-inverse-trivial", &q.associator_inv, &q.triple_unit(), &[1], &[n, n, n]);
    r.check_map("mult", &q.mult, &d.mult, &[n, n], &[n]);
    r.check_map("unit", &q.unit, &d.unit, &[1], &[n]);
    r.check_map("comult", &q.comult, &d.comult, &[n], &[n, n]);
    r.check_map("counit", &q.counit, &d.counit, &[n], &[1]);

    // k* ↦ Σ k*₂ ⊗ (k*₁ ⊗ σ_l(k*₃))
    let kd = dual(&p.k_alg);
    let (nk, nh) = (kd.dim, p.h_alg.dim);
    let expected = kd.comult2().then_perm(&[nk, nk, nk], &[1, 0, 2]).then_kron(&[&kd.id(), &kd.id(), &p.sigma_l()]);
    r.check_map("kcop-coaction", &s.c.action.transpose(), &expected, &[nk], &[nk, nk, nh]);

    // Δ(x*#b) = Σ (x*₁#ζ(b₁)) ⊗ (γ*(x*₂)#b₂)
    let (na, nc, nb) = (s.ambient.dim, s.c.dim, s.b.dim);
    let f = p.h_alg.field;
    let tensor_form = Matrix::identity(f, nc * nb)
        .then_kron(&[&s.c.action.transpose(), &s.b.coaction])
        .then_perm(&[nc, na, na, nb], &[0, 2, 1, 3])
        .then_kron(&[&Matrix::identity(f, nc), &s.zeta, &s.gamma.transpose(), &Matrix::identity(f, nb)]);
    r.check_map("comult-tensor-form", &q.comult, &tensor_form, &[n], &[n, n]);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::{build_pairing, pairing_names};

    #[test]
    fn trivial_pairing_iota_is_one_tensor_h() {
        let p = build_pairing("trivial-c2-c3").unwrap();
        let s = canonical_pams(&p).unwrap();
        let expect = p.k_alg.unit.kron(&p.h_alg.id());
        assert_eq!(s.iota, expect);
    }

    #[test]
    fn pi_on_kc2_by_hand() {
        let p = build_pairing("eval-c2").unwrap();
        let s = canonical_pams(&p).unwrap();
        // basis (k,h): 1⊗1, 1⊗g, g⊗1, g⊗g ↦ 1, g, g, 1
        let q = p.h_alg.field;
        let hand = Matrix::from_i64(q, &[&[1, 0], &[0, 1], &[0, 1], &[1, 0]]);
        assert_eq!(s.pi, hand);
    }

    #[test]
    fn canonical_pams_pass_everywhere() {
        for name in pairing_names() {
            let p = build_pairing(name).unwrap();
            let s = canonical_pams(&p).unwrap();
            let r = verify_pams(&s);
            assert!(r.overall(), "{} {:?}", name, r.failing());
            assert_eq!(s.zeta_bar.as_ref().unwrap(), &p.k_alg.counit.kron(&p.h_alg.antipode));
            let gb = p.k_alg.antipode_inv.kron(&p.h_alg.unit);
            assert_eq!(s.gamma_bar.as_ref().unwrap(), &gb);
        }
    }

    #[test]
    fn zeta_bar_mutation_breaks_condition_six() {
        let p = build_pairing("eval-sweedler4").unwrap();
        let s = canonical_pams(&p).unwrap();
        let m = s.with_zeta(s.zeta_bar.clone().unwrap());
        let r = verify_pams(&m);
        assert!(failed_conditions(&r).contains(&"c6".to_string()));
        assert!(r.get("c6.convolution-identity").unwrap().witness.is_some());
    }

    #[test]
    fn antipode_gamma_mutation_breaks_pi_gamma() {
        let p = build_pairing("eval-c3").unwrap();
        let s = canonical_pams(&p).unwrap();
        let g = p.k_alg.antipode.kron(&p.h_alg.unit);
        let r = verify_pams(&s.with_gamma(g));
        assert!(!r.passed("l1.pi-gamma"));
    }

    #[test]
    fn realization_small_cases() {
        for name in ["eval-c2", "eval-sweedler4", "sign-s3-c2", "trivial-c2-c3"] {
            let r = check_double_realization(&build_pairing(name).unwrap());
            assert!(r.overall(), "{} {:?}", name, r.failing());
        }
    }

    #[test]
    fn partial_dual_dimension_is_product() {
        let p = build_pairing("quotient-c4-c2").unwrap();
        let q = partial_dual(&canonical_pams(&p).unwrap()).unwrap();
        assert_eq!(q.dim, 2 * 4);
        assert!(q.associator_is_trivial());
    }

    #[test]
    fn nontrivial_element_inverse() {
        let h = crate::registry::build_hopf_named("sweedler4").unwrap();
        // u = 1⊗1⊗1 + x⊗x⊗1 is invertible with inverse 1⊗1⊗1 − x⊗x⊗1
        let f = h.field;
        let one = h.unit.kron(&h.unit).kron(&h.unit);
        let x = Matrix::from_triplets(f, 1, 4, vec![(0, 2, f.one())]);
        let n = x.kron(&x).kron(&h.unit);
        let u = one.add(&n);
        let inv = invert_in_tensor_power(&h.mult, &h.unit, 4, 3, &u).unwrap();
        assert_eq!(inv, one.sub(&n));
    }
    #[test]
    fn trivial_pi_mutation_breaks_coinvariants() {
        let p = build_pairing("eval-c3").unwrap();
        let s = canonical_pams(&p).unwrap();
        let pi = p.k_alg.id().kron(&p.h_alg.counit);
        let r = verify_pams(&s.with_pi(pi));
        assert!(!r.passed("c2.image-equals-coinvariants"));
        assert!(r.passed("c2.coinvariant-dimension"));
    }

    #[test]
    fn realization_large_cases() {
        for name in ["eval-s3", "eval-taft-3-7-2", "eval-c3"] {
            let t = std::time::Instant::now();
            let r = check_double_realization(&build_pairing(name).unwrap());
            eprintln!("{} {:?}", name, t.elapsed());
            assert!(r.overall(), "{} {:?}", name, r.failing());
        }
    }
}
