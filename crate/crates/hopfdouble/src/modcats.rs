//! Module and comodule categories over a pairing, their validators and the
//! linear constructions between them.
//!
//! Coactions follow one internal convention: a right coaction of `C` on `V`
//! is a `(dim V, dim V·dim C)` matrix with target `V⊗C`, a left one has
//! target `C⊗V`. Both the round-bracket and angle-bracket notations of the
//! formulas map onto these two shapes.

use rand::Rng;

use crate::error::{HopfError, Result};
use crate::exactmath::{coordinates, FieldSpec, Matrix};
use crate::hopf::{dual, HopfAlgebraData};
use crate::pairing::{form_functional, HopfPairing};
use crate::partialdual::Pams;
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum YdFlavor {
    /// left `H`-module, right `K`-comodule
    HModKComod,
    /// right `H`-module, left `K`-comodule
    KComodHMod,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdModule {
    pub flavor: YdFlavor,
    pub pairing: HopfPairing,
    pub dim: usize,
    pub action: Matrix,
    pub coaction: Matrix,
}

/// The data defining relative Doi-Hopf modules: the algebra `C*`, its right
/// `A*`-coaction and the embedding `ι: B → A` used by the reconstruction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoiContext {
    pub a_dual: HopfAlgebraData,
    pub c_dim: usize,
    pub c_mult: Matrix,
    pub c_unit: Matrix,
    /// `x* ↦ x*(1_C)` as a `(dim C, 1)` functional
    pub c_counit: Matrix,
    pub c_coaction: Matrix,
    pub b_dim: usize,
    pub iota: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoiHopfModule {
    pub over: DoiContext,
    pub dim: usize,
    pub left_action: Matrix,
    pub right_action: Matrix,
    pub coaction: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoSidedSide {
    /// `K`-`H`-bimodules with `K`-`K`-bicomodule structure
    KSide,
    /// `K*`-`K*`-bimodules with left `K*`- and right `H*`-coactions
    DualSide,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSidedModule {
    pub side: TwoSidedSide,
    pub pairing: HopfPairing,
    pub dim: usize,
    pub left_action: Matrix,
    pub right_action: Matrix,
    pub left_coaction: Matrix,
    pub right_coaction: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepModule {
    pub algebra: HopfAlgebraData,
    pub dim: usize,
    pub action: Matrix,
}

/// A subspace given by the rows of a basis matrix; the basis is also the
/// inclusion map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub basis: Matrix,
}

/// A quotient `V/U` with projection `(dim V, dim V/U)` and a section chosen
/// from the non-pivot columns of the reduced relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub projection: Matrix,
    pub section: Matrix,
}

pub enum Object<'a> {
    Yd(&'a YdModule),
    DoiHopf(&'a DoiHopfModule),
    TwoSided(&'a TwoSidedModule),
    Rep(&'a RepModule),
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.section.rows()
    }

    /// `V/span(rows of relations)` inside a space of dimension `n`.
    pub fn by_relations(field: FieldSpec, n: usize, relations: &Matrix) -> Quotient {
        let e = relations.rref();
        let mut pivot_row = vec![None; n];
        for (r, &c) in e.pivot_cols.iter().enumerate() {
            pivot_row[c] = Some(r);
        }
        let free: Vec<usize> = (0..n).filter(|c| pivot_row[*c].is_none()).collect();
        let mut slot = vec![usize::MAX; n];
        for (t, &c) in free.iter().enumerate() {
            slot[c] = t;
        }
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            match pivot_row[i] {
                None => rows.push(vec![(slot[i], field.one())]),
                Some(r) => rows.push(
                    e.rows[r].iter().filter(|(c, _)| *c != i).map(|(c, v)| (slot[*c], -v)).collect(),
                ),
            }
        }
        let projection = Matrix::from_rows(field, free.len(), rows);
        let section = Matrix::from_triplets(field, free.len(), n, free.iter().enumerate().map(|(t, &c)| (t, c, field.one())).collect());
        Quotient { projection, section }
    }
}

/// Coordinates of `src·map` in the basis `dst`, when the image lands there.
pub fn restrict(src: &Matrix, map: &Matrix, dst: &Matrix) -> Option<Matrix> {
    let img = src.mul(map);
    if dst.rows() == 0 {
        return if img.is_zero() { Some(Matrix::zeros(map.field(), src.rows(), 0)) } else { None };
    }
    coordinates(dst, &img)
}

/// `⟨e_i*, e_j⟩ = δ_ij` as a functional on `V*⊗V`.
pub fn evaluation(field: FieldSpec, n: usize) -> Matrix {
    form_functional(&Matrix::identity(field, n))
}

// ---------------------------------------------------------------------------
// shared axiom checks

fn check_left_action(r: &mut VerificationReport, pre: &str, mult: &Matrix, unit: &Matrix, act: &Matrix, n: usize) {
    let na = unit.cols();
    let f = act.field();
    let idv = Matrix::identity(f, n);
    let lhs = mult.kron(&idv).mul(act);
    let rhs = Matrix::identity(f, na).kron(act).mul(act);
    r.check_map(format!("{}-associative", pre), &lhs, &rhs, &[na, na, n], &[n]);
    r.check_map(format!("{}-unital", pre), &unit.kron(&idv).mul(act), &idv, &[n], &[n]);
}

fn check_right_action(r: &mut VerificationReport, pre: &str, mult: &Matrix, unit: &Matrix, act: &Matrix, n: usize) {
    let na = unit.cols();
    let f = act.field();
    let idv = Matrix::identity(f, n);
    let lhs = idv.kron(mult).mul(act);
    let rhs = act.kron(&Matrix::identity(f, na)).mul(act);
    r.check_map(format!("{}-associative", pre), &lhs, &rhs, &[n, na, na], &[n]);
    r.check_map(format!("{}-unital", pre), &idv.kron(unit).mul(act), &idv, &[n], &[n]);
}

fn check_right_coaction(r: &mut VerificationReport, pre: &str, comult: &Matrix, counit: &Matrix, co: &Matrix, n: usize) {
    let nc = counit.rows();
    let f = co.field();
    let idv = Matrix::identity(f, n);
    let lhs = co.then_kron(&[co, &Matrix::identity(f, nc)]);
    let rhs = co.then_kron(&[&idv, comult]);
    r.check_map(format!("{}-coassociative", pre), &lhs, &rhs, &[n], &[n, nc, nc]);
    r.check_map(format!("{}-counital", pre), &co.then_kron(&[&idv, counit]), &idv, &[n], &[n]);
}

fn check_left_coaction(r: &mut VerificationReport, pre: &str, comult: &Matrix, counit: &Matrix, co: &Matrix, n: usize) {
    let nc = counit.rows();
    let f = co.field();
    let idv = Matrix::identity(f, n);
    let lhs = co.then_kron(&[&Matrix::identity(f, nc), co]);
    let rhs = co.then_kron(&[comult, &idv]);
    r.check_map(format!("{}-coassociative", pre), &lhs, &rhs, &[n], &[nc, nc, n]);
    r.check_map(format!("{}-counital", pre), &co.then_kron(&[counit, &idv]), &idv, &[n], &[n]);
}

fn shape_guard(items: &[(&Matrix, (usize, usize))]) -> Result<()> {
    for (m, want) in items {
        if m.shape() != *want {
            return Err(HopfError::ShapeMismatch(format!("structure matrix {:?}, expected {:?}", m.shape(), want)));
        }
    }
    Ok(())
}

pub fn verify_object(x: Object<'_>) -> Result<VerificationReport> {
    match x {
        Object::Yd(v) => v.verify(),
        Object::DoiHopf(m) => m.verify(),
        Object::TwoSided(m) => m.verify(),
        Object::Rep(m) => m.verify(),
    }
}

// ---------------------------------------------------------------------------
// Yetter-Drinfeld modules

impl YdModule {
    pub fn new(flavor: YdFlavor, pairing: &HopfPairing, action: Matrix, coaction: Matrix) -> YdModule {
        let dim = action.cols();
        YdModule { flavor, pairing: pairing.clone(), dim, action, coaction }
    }

    /// `h·v = ε(h)v` and `v ↦ v⊗1` (or `1⊗v`) on a one-dimensional space.
    pub fn trivial(p: &HopfPairing, flavor: YdFlavor) -> YdModule {
        YdModule::trivial_of_dim(p, flavor, 1)
    }

    pub fn trivial_of_dim(p: &HopfPairing, flavor: YdFlavor, n: usize) -> YdModule {
        let f = p.h_alg.field;
        let idv = Matrix::identity(f, n);
        let (action, coaction) = match flavor {
            YdFlavor::HModKComod => (p.h_alg.counit.kron(&idv), idv.kron(&p.k_alg.unit)),
            YdFlavor::KComodHMod => (idv.kron(&p.h_alg.counit), p.k_alg.unit.kron(&idv)),
        };
        YdModule::new(flavor, p, action, coaction)
    }

    pub fn is_trivial(&self) -> bool {
        *self == YdModule::trivial_of_dim(&self.pairing, self.flavor, self.dim)
    }

    pub fn field(&self) -> FieldSpec {
        self.pairing.h_alg.field
    }

    pub fn verify(&self) -> Result<VerificationReport> {
        let h = &self.pairing.h_alg;
        let k = &self.pairing.k_alg;
        let (nh, nk, n) = (h.dim, k.dim, self.dim);
        let f = self.field();
        let mut r = VerificationReport::new(format!("yd {:?} dim {}", self.flavor, n));
        let sr = self.pairing.sigma_r();
        let sr_sinv = sr.mul(&k.antipode_inv);
        let idv = Matrix::identity(f, n);
        match self.flavor {
            YdFlavor::HModKComod => {
                shape_guard(&[(&self.action, (nh * n, n)), (&self.coaction, (n, n * nk))])?;
                check_left_action(&mut r, "action", &h.mult, &h.unit, &self.action, n);
                check_right_coaction(&mut r, "coaction", &k.comult, &k.counit, &self.coaction, n);
                // (h·v)₀⊗(h·v)₁ = Σ h₂·v₀ ⊗ σ_r(h₃) v₁ S⁻¹σ_r(h₁)
                let lhs = self.action.mul(&self.coaction);
                let rhs = Matrix::identity(f, nh * n)
                    .then_kron(&[&h.comult2(), &self.coaction])
                    .then_perm(&[nh, nh, nh, n, nk], &[1, 3, 2, 4, 0])
                    .then_kron(&[&self.action, &sr, &k.id(), &sr_sinv])
                    .then_kron(&[&idv, &k.mult3()]);
                r.check_map("yd-compatibility", &lhs, &rhs, &[nh, n], &[n, nk]);
            }
            YdFlavor::KComodHMod => {
                shape_guard(&[(&self.action, (n * nh, n)), (&self.coaction, (n, nk * n))])?;
                check_right_action(&mut r, "action", &h.mult, &h.unit, &self.action, n);
                check_left_coaction(&mut r, "coaction", &k.comult, &k.counit, &self.coaction, n);
                // (v·h)₋₁⊗(v·h)₀ = Σ S⁻¹σ_r(h₃) v₋₁ σ_r(h₁) ⊗ v₀·h₂
                let lhs = self.action.mul(&self.coaction);
                let rhs = Matrix::identity(f, n * nh)
                    .then_kron(&[&self.coaction, &h.comult2()])
                    .then_perm(&[nk, n, nh, nh, nh], &[4, 0, 2, 1, 3])
                    .then_kron(&[&sr_sinv, &k.id(), &sr, &self.action])
                    .then_kron(&[&k.mult3(), &idv]);
                r.check_map("yd-compatibility", &lhs, &rhs, &[n, nh], &[nk, n]);
            }
        }
        Ok(r)
    }
}

/// The tensor product of two Yetter-Drinfeld modules of the same flavor.
pub fn yd_tensor(v: &YdModule, w: &YdModule) -> Result<YdModule> {
    if v.flavor != w.flavor {
        return Err(HopfError::FlavorMismatch);
    }
    if v.pairing != w.pairing {
        return Err(HopfError::AlgebraMismatch);
    }
    let h = &v.pairing.h_alg;
    let k = &v.pairing.k_alg;
    let (nh, nk, a, b) = (h.dim, k.dim, v.dim, w.dim);
    let f = v.field();
    let ida = Matrix::identity(f, a);
    let idb = Matrix::identity(f, b);
    let (action, coaction) = match v.flavor {
        YdFlavor::HModKComod => {
            let act = Matrix::identity(f, nh * a * b)
                .then_kron(&[&h.comult, &ida, &idb])
                .then_perm(&[nh, nh, a, b], &[0, 2, 1, 3])
                .then_kron(&[&v.action, &w.action]);
            // (v₀⊗w₀)⊗w₁v₁
            let co = Matrix::identity(f, a * b)
                .then_kron(&[&v.coaction, &w.coaction])
                .then_perm(&[a, nk, b, nk], &[0, 2, 3, 1])
                .then_kron(&[&ida, &idb, &k.mult]);
            (act, co)
        }
        YdFlavor::KComodHMod => {
            let act = Matrix::identity(f, a * b * nh)
                .then_kron(&[&ida, &idb, &h.comult])
                .then_perm(&[a, b, nh, nh], &[0, 2, 1, 3])
                .then_kron(&[&v.action, &w.action]);
            // w₋₁v₋₁⊗(v₀⊗w₀)
            let co = Matrix::identity(f, a * b)
                .then_kron(&[&v.coaction, &w.coaction])
                .then_perm(&[nk, a, nk, b], &[2, 0, 1, 3])
                .then_kron(&[&k.mult, &ida, &idb]);
            (act, co)
        }
    };
    Ok(YdModule::new(v.flavor, &v.pairing, action, coaction))
}

// ---------------------------------------------------------------------------
// representations

impl RepModule {
    pub fn new(algebra: &HopfAlgebraData, action: Matrix) -> RepModule {
        RepModule { algebra: algebra.clone(), dim: action.cols(), action }
    }

    pub fn regular(a: &HopfAlgebraData) -> RepModule {
        RepModule::new(a, a.mult.clone())
    }

    pub fn trivial(a: &HopfAlgebraData) -> RepModule {
        RepModule::new(a, a.counit.clone())
    }

    pub fn verify(&self) -> Result<VerificationReport> {
        let a = &self.algebra;
        shape_guard(&[(&self.action, (a.dim * self.dim, self.dim))])?;
        let mut r = VerificationReport::new(format!("rep dim {}", self.dim));
        check_left_action(&mut r, "action", &a.mult, &a.unit, &self.action, self.dim);
        Ok(r)
    }
}

/// The diagonal action `a·(v⊗w) = Σ a₁v ⊗ a₂w`.
pub fn rep_tensor(v: &RepModule, w: &RepModule) -> RepModule {
    let a = &v.algebra;
    let f = a.field;
    let (n, m) = (v.dim, w.dim);
    let act = Matrix::identity(f, a.dim * n * m)
        .then_kron(&[&a.comult, &Matrix::identity(f, n), &Matrix::identity(f, m)])
        .then_perm(&[a.dim, a.dim, n, m], &[0, 2, 1, 3])
        .then_kron(&[&v.action, &w.action]);
    RepModule::new(a, act)
}

// ---------------------------------------------------------------------------
// relative Doi-Hopf modules

impl DoiContext {
    pub fn from_pams(s: &Pams) -> DoiContext {
        DoiContext {
            a_dual: dual(&s.ambient),
            c_dim: s.c.dim,
            c_mult: s.c.comult.transpose(),
            c_unit: s.c.counit.transpose(),
            c_counit: s.unit_c().transpose(),
            c_coaction: s.c.action.transpose(),
            b_dim: s.b.dim,
            iota: s.iota.clone(),
        }
    }

    pub fn canonical(p: &HopfPairing) -> Result<DoiContext> {
        Ok(DoiContext::from_pams(&crate::partialdual::canonical_pams(p)?))
    }

    /// `C*` acting on itself with its coaction; the unit object.
    pub fn unit_object(&self) -> DoiHopfModule {
        DoiHopfModule {
            over: self.clone(),
            dim: self.c_dim,
            left_action: self.c_mult.clone(),
            right_action: self.c_mult.clone(),
            coaction: self.c_coaction.clone(),
        }
    }
}

impl DoiHopfModule {
    pub fn verify(&self) -> Result<VerificationReport> {
        let c = &self.over;
        let ad = &c.a_dual;
        let (nc, na, n) = (c.c_dim, ad.dim, self.dim);
        shape_guard(&[
            (&self.left_action, (nc * n, n)),
            (&self.right_action, (n * nc, n)),
            (&self.coaction, (n, n * na)),
        ])?;
        let f = ad.field;
        let idc = Matrix::identity(f, nc);
        let mut r = VerificationReport::new(format!("doi-hopf dim {}", n));
        check_left_action(&mut r, "left-action", &c.c_mult, &c.c_unit, &self.left_action, n);
        check_right_action(&mut r, "right-action", &c.c_mult, &c.c_unit, &self.right_action, n);
        let lhs = self.left_action.kron(&idc).mul(&self.right_action);
        let rhs = idc.kron(&self.right_action).mul(&self.left_action);
        r.check_map("bimodule", &lhs, &rhs, &[nc, n, nc], &[n]);
        check_right_coaction(&mut r, "coaction", &ad.comult, &ad.counit, &self.coaction, n);
        // (x*·m)₀⊗(x*·m)₁ = Σ x*₁·m₀ ⊗ x*₂m₁
        let lhs = self.left_action.mul(&self.coaction);
        let rhs = Matrix::identity(f, nc * n)
            .then_kron(&[&c.c_coaction, &self.coaction])
            .then_perm(&[nc, na, n, na], &[0, 2, 1, 3])
            .then_kron(&[&self.left_action, &ad.mult]);
        r.check_map("left-compatibility", &lhs, &rhs, &[nc, n], &[n, na]);
        // (m·x*)₀⊗(m·x*)₁ = Σ m₀·x*₁ ⊗ m₁x*₂
        let lhs = self.right_action.mul(&self.coaction);
        let rhs = Matrix::identity(f, n * nc)
            .then_kron(&[&self.coaction, &c.c_coaction])
            .then_perm(&[n, na, nc, na], &[0, 2, 1, 3])
            .then_kron(&[&self.right_action, &ad.mult]);
        r.check_map("right-compatibility", &lhs, &rhs, &[n, nc], &[n, na]);
        Ok(r)
    }
}

// ---------------------------------------------------------------------------
// two-sided two-cosided relative Hopf modules

impl TwoSidedModule {
    /// `K` with `l·k·σ_r(h)` and both coactions `Δ`; the unit on the `K`-side.
    pub fn unit_k(p: &HopfPairing) -> TwoSidedModule {
        let k = &p.k_alg;
        let f = k.field;
        let nk = k.dim;
        let ra = Matrix::identity(f, nk * p.h_alg.dim).then_kron(&[&k.id(), &p.sigma_r()]).mul(&k.mult);
        TwoSidedModule {
            side: TwoSidedSide::KSide,
            pairing: p.clone(),
            dim: nk,
            left_action: k.mult.clone(),
            right_action: ra,
            left_coaction: k.comult.clone(),
            right_coaction: k.comult.clone(),
        }
    }

    fn field(&self) -> FieldSpec {
        self.pairing.h_alg.field
    }

    pub fn verify(&self) -> Result<VerificationReport> {
        let p = &self.pairing;
        let f = self.field();
        let n = self.dim;
        let idv = Matrix::identity(f, n);
        let mut r = VerificationReport::new(format!("two-sided {:?} dim {}", self.side, n));
        // left algebra L, right algebra R, left coalgebra P, right coalgebra Q and a map R → Q
        let kd;
        let hd;
        let (l, rr, pc, qc, map) = match self.side {
            TwoSidedSide::KSide => (&p.k_alg, &p.h_alg, &p.k_alg, &p.k_alg, p.sigma_r()),
            TwoSidedSide::DualSide => {
                kd = dual(&p.k_alg);
                hd = dual(&p.h_alg);
                (&kd, &kd, &kd, &hd, p.sigma_l())
            }
        };
        let (nl, nr, np, nq) = (l.dim, rr.dim, pc.dim, qc.dim);
        shape_guard(&[
            (&self.left_action, (nl * n, n)),
            (&self.right_action, (n * nr, n)),
            (&self.left_coaction, (n, np * n)),
            (&self.right_coaction, (n, n * nq)),
        ])?;
        let (la, ra, lc, rc) = (&self.left_action, &self.right_action, &self.left_coaction, &self.right_coaction);
        check_left_action(&mut r, "left-action", &l.mult, &l.unit, la, n);
        check_right_action(&mut r, "right-action", &rr.mult, &rr.unit, ra, n);
        let lhs = la.kron(&rr.id()).mul(ra);
        let rhs = l.id().kron(ra).mul(la);
        r.check_map("bimodule", &lhs, &rhs, &[nl, n, nr], &[n]);
        check_left_coaction(&mut r, "left-coaction", &pc.comult, &pc.counit, lc, n);
        check_right_coaction(&mut r, "right-coaction", &qc.comult, &qc.counit, rc, n);
        let lhs = lc.then_kron(&[&pc.id(), rc]);
        let rhs = rc.then_kron(&[lc, &qc.id()]);
        r.check_map("bicomodule", &lhs, &rhs, &[n], &[np, n, nq]);
        // the left coaction against the left action
        let lhs = la.mul(lc);
        let rhs = Matrix::identity(f, nl * n)
            .then_kron(&[&l.comult, lc])
            .then_perm(&[nl, nl, np, n], &[0, 2, 1, 3])
            .then_kron(&[&l.mult, la]);
        r.check_map("compat-left-left", &lhs, &rhs, &[nl, n], &[np, n]);
        match self.side {
            TwoSidedSide::KSide => {
                // (m·h)₋₁⊗(m·h)₀ = Σ m₋₁σ_r(h₁) ⊗ m₀·h₂
                let lhs = ra.mul(lc);
                let rhs = Matrix::identity(f, n * nr)
                    .then_kron(&[lc, &rr.comult])
                    .then_perm(&[np, n, nr, nr], &[0, 2, 1, 3])
                    .then_kron(&[&pc.id(), &map, &idv, &rr.id()])
                    .then_kron(&[&pc.mult, ra]);
                r.check_map("compat-right-left", &lhs, &rhs, &[n, nr], &[np, n]);
                // (k·m)₀⊗(k·m)₁ = Σ k₁·m₀ ⊗ k₂m₁
                let lhs = la.mul(rc);
                let rhs = Matrix::identity(f, nl * n)
                    .then_kron(&[&l.comult, rc])
                    .then_perm(&[nl, nl, n, nq], &[0, 2, 1, 3])
                    .then_kron(&[la, &qc.mult]);
                r.check_map("compat-left-right", &lhs, &rhs, &[nl, n], &[n, nq]);
            }
            TwoSidedSide::DualSide => {
                // (n·k*)₋₁⊗(n·k*)₀ = Σ n₋₁k*₁ ⊗ n₀·k*₂
                let lhs = ra.mul(lc);
                let rhs = Matrix::identity(f, n * nr)
                    .then_kron(&[lc, &rr.comult])
                    .then_perm(&[np, n, nr, nr], &[0, 2, 1, 3])
                    .then_kron(&[&pc.mult, ra]);
                r.check_map("compat-right-left", &lhs, &rhs, &[n, nr], &[np, n]);
                // (k*·n)₀⊗(k*·n)₁ = Σ k*₁·n₀ ⊗ σ_l(k*₂)n₁
                let lhs = la.mul(rc);
                let rhs = Matrix::identity(f, nl * n)
                    .then_kron(&[&l.comult, rc])
                    .then_perm(&[nl, nl, n, nq], &[0, 2, 1, 3])
                    .then_kron(&[&l.id(), &idv, &map, &qc.id()])
                    .then_kron(&[la, &qc.mult]);
                r.check_map("compat-left-right", &lhs, &rhs, &[nl, n], &[n, nq]);
            }
        }
        // (m·r)₀⊗(m·r)₁ = Σ m₀·r₁ ⊗ m₁ map(r₂)
        let lhs = ra.mul(rc);
        let rhs = Matrix::identity(f, n * nr)
            .then_kron(&[rc, &rr.comult])
            .then_perm(&[n, nq, nr, nr], &[0, 2, 1, 3])
            .then_kron(&[&idv, &rr.id(), &qc.id(), &map])
            .then_kron(&[ra, &qc.mult]);
        r.check_map("compat-right-right", &lhs, &rhs, &[n, nr], &[n, nq]);
        Ok(r)
    }
}

/// Is `f: X → Y` (a `(dim X, dim Y)` matrix) compatible with all four
/// structures of two two-sided modules on the same side?
pub fn check_two_sided_morphism(r: &mut VerificationReport, pre: &str, x: &TwoSidedModule, y: &TwoSidedModule, f: &Matrix) {
    let nl = x.left_action.rows() / x.dim.max(1);
    let nr = x.right_action.rows() / x.dim.max(1);
    let np = x.left_coaction.cols() / x.dim.max(1);
    let nq = x.right_coaction.cols() / x.dim.max(1);
    let fd = f.field();
    let (a, b) = (x.dim, y.dim);
    let i = |n| Matrix::identity(fd, n);
    r.check_map(format!("{}-left-action", pre), &x.left_action.mul(f), &i(nl).kron(f).mul(&y.left_action), &[nl, a], &[b]);
    r.check_map(format!("{}-right-action", pre), &x.right_action.mul(f), &f.kron(&i(nr)).mul(&y.right_action), &[a, nr], &[b]);
    r.check_map(format!("{}-left-coaction", pre), &x.left_coaction.mul(&i(np).kron(f)), &f.mul(&y.left_coaction), &[a], &[np, b]);
    r.check_map(format!("{}-right-coaction", pre), &x.right_coaction.mul(&f.kron(&i(nq))), &f.mul(&y.right_coaction), &[a], &[b, nq]);
}

/// `M□_K N` for `K`-side objects, with its inclusion into `M⊗N`.
pub fn box_tensor(m: &TwoSidedModule, n: &TwoSidedModule) -> Result<(TwoSidedModule, Subspace)> {
    if m.side != TwoSidedSide::KSide || n.side != TwoSidedSide::KSide {
        return Err(HopfError::FlavorMismatch);
    }
    let p = &m.pairing;
    let (k, h) = (&p.k_alg, &p.h_alg);
    let (nk, nh, a, b) = (k.dim, h.dim, m.dim, n.dim);
    let f = k.field;
    let (ia, ib) = (Matrix::identity(f, a), Matrix::identity(f, b));
    let sub = cotensor(&m.right_coaction, &n.left_coaction, nk);
    let u = &sub.basis;
    let la = Matrix::identity(f, nk * a * b)
        .then_kron(&[&k.comult, &ia, &ib])
        .then_perm(&[nk, nk, a, b], &[0, 2, 1, 3])
        .then_kron(&[&m.left_action, &n.left_action]);
    let ra = Matrix::identity(f, a * b * nh)
        .then_kron(&[&ia, &ib, &h.comult])
        .then_perm(&[a, b, nh, nh], &[0, 2, 1, 3])
        .then_kron(&[&m.right_action, &n.right_action]);
    let lc = m.left_coaction.kron(&ib);
    let rc = ia.kron(&n.right_coaction);
    let closed = |src: &Matrix, map: &Matrix, dst: &Matrix| restrict(src, map, dst).ok_or(HopfError::CoactionNotClosed);
    let out = TwoSidedModule {
        side: TwoSidedSide::KSide,
        pairing: p.clone(),
        dim: u.rows(),
        left_action: closed(&k.id().kron(u), &la, u)?,
        right_action: closed(&u.kron(&h.id()), &ra, u)?,
        left_coaction: closed(u, &lc, &k.id().kron(u))?,
        right_coaction: closed(u, &rc, &u.kron(&k.id()))?,
    };
    Ok((out, sub))
}

/// `M⊗_{K*}N` for dual-side objects, with its quotient data on `M⊗N`.
pub fn dual_tensor(m: &TwoSidedModule, n: &TwoSidedModule) -> Result<(TwoSidedModule, Quotient)> {
    if m.side != TwoSidedSide::DualSide || n.side != TwoSidedSide::DualSide {
        return Err(HopfError::FlavorMismatch);
    }
    let p = &m.pairing;
    let kd = dual(&p.k_alg);
    let hd = dual(&p.h_alg);
    let (nk, nh, a, b) = (kd.dim, hd.dim, m.dim, n.dim);
    let f = kd.field;
    let (ia, ib) = (Matrix::identity(f, a), Matrix::identity(f, b));
    let q = tensor_over_algebra(&m.right_action, &n.left_action, a, b);
    let (s, pr) = (&q.section, &q.projection);
    let la = m.left_action.kron(&ib);
    let ra = ia.kron(&n.right_action);
    let lc = Matrix::identity(f, a * b)
        .then_kron(&[&m.left_coaction, &n.left_coaction])
        .then_perm(&[nk, a, nk, b], &[0, 2, 1, 3])
        .then_kron(&[&kd.mult, &ia, &ib]);
    let rc = Matrix::identity(f, a * b)
        .then_kron(&[&m.right_coaction, &n.right_coaction])
        .then_perm(&[a, nh, b, nh], &[0, 2, 1, 3])
        .then_kron(&[&ia, &ib, &hd.mult]);
    let out = TwoSidedModule {
        side: TwoSidedSide::DualSide,
        pairing: p.clone(),
        dim: q.dim(),
        left_action: kd.id().kron(s).mul(&la).mul(pr),
        right_action: s.kron(&kd.id()).mul(&ra).mul(pr),
        left_coaction: s.mul(&lc).mul(&kd.id().kron(pr)),
        right_coaction: s.mul(&rc).mul(&pr.kron(&hd.id())),
    };
    Ok((out, q))
}

// ---------------------------------------------------------------------------
// constructions

/// `M□_C N`: kernel of `ρ_M⊗id − id⊗λ_N` inside `M⊗N`.
pub fn cotensor(right_coaction: &Matrix, left_coaction: &Matrix, _nc: usize) -> Subspace {
    let f = right_coaction.field();
    let a = right_coaction.rows();
    let b = left_coaction.rows();
    let d = right_coaction.kron(&Matrix::identity(f, b)).sub(&Matrix::identity(f, a).kron(left_coaction));
    Subspace { basis: d.transpose().kernel_basis() }
}

/// `M⊗_A N`: the quotient of `M⊗N` by `m·a⊗n − m⊗a·n`.
pub fn tensor_over_algebra(right_action: &Matrix, left_action: &Matrix, a: usize, b: usize) -> Quotient {
    let f = right_action.field();
    let rel = right_action.kron(&Matrix::identity(f, b)).sub(&Matrix::identity(f, a).kron(left_action));
    Quotient::by_relations(f, a * b, &rel)
}

/// `{m : Σ m₀⊗m₁ = m⊗1}` for a right coaction and the unit `(1, dim C)`.
pub fn coinvariants(right_coaction: &Matrix, unit: &Matrix) -> Subspace {
    let f = right_coaction.field();
    let n = right_coaction.rows();
    let d = right_coaction.sub(&Matrix::identity(f, n).kron(unit));
    Subspace { basis: d.transpose().kernel_basis() }
}

/// `M/span{m·x* − ε(x*)m}` for a right action and a `(dim C*, 1)` counit.
pub fn augmentation_quotient(right_action: &Matrix, counit: &Matrix) -> Quotient {
    let f = right_action.field();
    let n = right_action.cols();
    let rel = right_action.sub(&Matrix::identity(f, n).kron(counit));
    Quotient::by_relations(f, n, &rel)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A right `C`-coaction gives the left `C*`-action `x*⇀v = Σ v₀⟨x*,v₁⟩`; a
/// left one gives the right action `v↼x* = Σ ⟨x*,v₋₁⟩v₀`.
pub fn action_from_coaction(coaction: &Matrix, side: Side, nc: usize) -> Matrix {
    let f = coaction.field();
    let n = coaction.rows();
    let mut items = Vec::new();
    for (v, row) in coaction.row_data().iter().enumerate() {
        for (col, x) in row {
            match side {
                Side::Right => {
                    let (w, c) = (col / nc, col % nc);
                    items.push((c * n + v, w, x.clone()));
                }
                Side::Left => {
                    let (c, w) = (col / n, col % n);
                    items.push((v * nc + c, w, x.clone()));
                }
            }
        }
    }
    Matrix::from_triplets(f, nc * n, n, items)
}

/// Inverse of [`action_from_coaction`]; `side` names the coaction side.
pub fn coaction_from_action(action: &Matrix, side: Side, nc: usize) -> Matrix {
    let f = action.field();
    let n = action.cols();
    let mut items = Vec::new();
    for (rix, row) in action.row_data().iter().enumerate() {
        for (w, x) in row {
            match side {
                Side::Right => {
                    let (c, v) = (rix / n, rix % n);
                    items.push((v, w * nc + c, x.clone()));
                }
                Side::Left => {
                    let (v, c) = (rix / nc, rix % nc);
                    items.push((v, c * n + w, x.clone()));
                }
            }
        }
    }
    Matrix::from_triplets(f, n, n * nc, items)
}

// ---------------------------------------------------------------------------
// random Yetter-Drinfeld modules

/// Solves `residual(X) = 0` for an affine residual in the entries of a
/// `rows × cols` matrix: a particular solution and a kernel basis.
fn solve_affine(field: FieldSpec, rows: usize, cols: usize, residual: impl Fn(&Matrix) -> Matrix) -> Option<(Matrix, Matrix)> {
    let n = rows * cols;
    let c = flatten(&residual(&Matrix::zeros(field, rows, cols)));
    let mut items = Vec::new();
    for u in 0..n {
        let e = Matrix::from_triplets(field, rows, cols, vec![(u / cols, u % cols, field.one())]);
        let col = flatten(&residual(&e)).sub(&c);
        for (j, v) in col.row(0) {
            items.push((*j, u, v.clone()));
        }
    }
    let sys = Matrix::from_triplets(field, c.cols(), n, items);
    let x = sys.solve(&c.scale(&field.from_i64(-1)).transpose())?;
    Some((x.transpose(), sys.kernel_basis()))
}

fn flatten(m: &Matrix) -> Matrix {
    let cols = m.cols();
    let mut row = Vec::new();
    for (i, r) in m.row_data().iter().enumerate() {
        for (j, v) in r {
            row.push((i * cols + j, v.clone()));
        }
    }
    Matrix::from_rows(m.field(), m.rows() * cols, vec![row])
}

fn unflatten(v: &Matrix, rows: usize, cols: usize) -> Matrix {
    let items = v.row(0).iter().map(|(k, x)| (k / cols, k % cols, x.clone())).collect();
    Matrix::from_triplets(v.field(), rows, cols, items)
}

/// A basis of the module maps `V → W` between two modules of the same
/// flavor, each as a `(dim V, dim W)` matrix.
pub fn yd_hom_basis(v: &YdModule, w: &YdModule) -> Result<Vec<Matrix>> {
    if v.flavor != w.flavor {
        return Err(HopfError::FlavorMismatch);
    }
    let f = v.field();
    let (nh, nk) = (v.pairing.h_alg.dim, v.pairing.k_alg.dim);
    let (ih, ik) = (Matrix::identity(f, nh), Matrix::identity(f, nk));
    let residual = |x: &Matrix| {
        let (a, c) = match v.flavor {
            YdFlavor::HModKComod => (
                v.action.mul(x).sub(&ih.kron(x).mul(&w.action)),
                v.coaction.mul(&x.kron(&ik)).sub(&x.mul(&w.coaction)),
            ),
            YdFlavor::KComodHMod => (
                v.action.mul(x).sub(&x.kron(&ih).mul(&w.action)),
                v.coaction.mul(&ik.kron(x)).sub(&x.mul(&w.coaction)),
            ),
        };
        flatten(&a).hstack(&flatten(&c))
    };
    let (_, kernel) = solve_affine(f, v.dim, w.dim, residual).ok_or(HopfError::SingularMatrix)?;
    Ok((0..kernel.rows())
        .map(|i| unflatten(&Matrix::from_rows(f, kernel.cols(), vec![kernel.row(i).clone()]), v.dim, w.dim))
        .collect())
}

/// A nontrivial left-right module of dimension `dim`: either the action or
/// the coaction is fixed to be trivial and the other is drawn from the
/// solutions of the compatibility and (co)unit equations, keeping only
/// candidates that pass every axiom.
pub fn random_yd_module<R: Rng>(p: &HopfPairing, dim: usize, rng: &mut R) -> Option<YdModule> {
    let f = p.h_alg.field;
    let (nh, nk) = (p.h_alg.dim, p.k_alg.dim);
    let triv = YdModule::trivial_of_dim(p, YdFlavor::HModKComod, dim);
    let fix_action = rng.gen_bool(0.5);
    let idv = Matrix::identity(f, dim);
    let (rows, cols) = if fix_action { (dim, dim * nk) } else { (nh * dim, dim) };
    let build = |x: &Matrix| {
        if fix_action {
            YdModule::new(YdFlavor::HModKComod, p, triv.action.clone(), x.clone())
        } else {
            YdModule::new(YdFlavor::HModKComod, p, x.clone(), triv.coaction.clone())
        }
    };
    let residual = |x: &Matrix| {
        let m = build(x);
        let lhs = m.action.mul(&m.coaction);
        let sr = p.sigma_r();
        let k = &p.k_alg;
        let rhs = Matrix::identity(f, nh * dim)
            .then_kron(&[&p.h_alg.comult2(), &m.coaction])
            .then_perm(&[nh, nh, nh, dim, nk], &[1, 3, 2, 4, 0])
            .then_kron(&[&m.action, &sr, &k.id(), &sr.mul(&k.antipode_inv)])
            .then_kron(&[&idv, &k.mult3()]);
        let unit = if fix_action {
            m.coaction.then_kron(&[&idv, &k.counit]).sub(&idv)
        } else {
            p.h_alg.unit.kron(&idv).mul(&m.action).sub(&idv)
        };
        flatten(&lhs.sub(&rhs)).hstack(&flatten(&unit))
    };
    let (part, kernel) = solve_affine(f, rows, cols, residual)?;
    let d = kernel.rows();
    let coeffs: Vec<Vec<i64>> = if 3usize.pow(d.min(12) as u32) <= 243 {
        (0..3usize.pow(d as u32))
            .map(|mut t| {
                (0..d)
                    .map(|_| {
                        let c = (t % 3) as i64 - 1;
                        t /= 3;
                        c
                    })
                    .collect()
            })
            .collect()
    } else {
        (0..243).map(|_| (0..d).map(|_| rng.gen_range(-1..=1)).collect()).collect()
    };
    let mut valid = Vec::new();
    for c in coeffs {
        let mut x = part.clone();
        for (i, ci) in c.iter().enumerate() {
            if *ci != 0 {
                x = x.add(&Matrix::from_rows(f, kernel.cols(), vec![kernel.row(i).clone()]).scale(&f.from_i64(*ci)));
            }
        }
        let m = build(&unflatten(&x, rows, cols));
        if !m.is_trivial() && m.verify().map(|r| r.overall()).unwrap_or(false) && !valid.contains(&m) {
            valid.push(m);
        }
    }
    if valid.is_empty() {
        None
    } else {
        let i = rng.gen_range(0..valid.len());
        Some(valid.swap_remove(i))
    }
}
