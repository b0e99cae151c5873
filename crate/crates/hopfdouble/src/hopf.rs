//! Hopf algebras as structure constants.
//!
//! With basis `e_0..e_{n-1}`:
//! * `mult` is `(n², n)`: row `i·n+j` holds the coordinates of `e_i·e_j`;
//! * `comult` is `(n, n²)`: row `i`, column `j·n+k` is the coefficient of
//!   `e_j⊗e_k` in `Δ(e_i)`;
//! * `unit` is `(1, n)` and `counit` is `(n, 1)`;
//! * `antipode` is `(n, n)` with row `i` equal to `S(e_i)`.
//!
//! These are exactly the row-convention matrices of the structure maps, so
//! composites such as `(Δ⊗id)Δ` are `comult · (comult ⊗ id)`.

use crate::error::{HopfError, Result};
use crate::exactmath::{FieldSpec, Matrix};
use crate::report::VerificationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    pub name: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
    pub antipode: Matrix,
    pub antipode_inv: Matrix,
}

/// An algebra given by its product and unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub dim: usize,
    pub mult: Matrix,
    pub unit: Matrix,
}

/// A coalgebra given by its coproduct and counit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub dim: usize,
    pub comult: Matrix,
    pub counit: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Op,
    Cop,
    OpCop,
}

impl HopfAlgebraData {
    /// Checks shapes and caches `S⁻¹`. Does not run the axiom suite.
    pub fn new(
        name: impl Into<String>,
        field: FieldSpec,
        mult: Matrix,
        unit: Matrix,
        comult: Matrix,
        counit: Matrix,
        antipode: Matrix,
    ) -> Result<Self> {
        let n = unit.cols();
        let shapes = [
            ("mult", mult.shape(), (n * n, n)),
            ("unit", unit.shape(), (1, n)),
            ("comult", comult.shape(), (n, n * n)),
            ("counit", counit.shape(), (n, 1)),
            ("antipode", antipode.shape(), (n, n)),
        ];
        for (what, got, want) in shapes {
            if got != want {
                return Err(HopfError::ShapeMismatch(format!("{} has shape {:?}, expected {:?}", what, got, want)));
            }
        }
        for m in [&mult, &unit, &comult, &counit, &antipode] {
            if m.field() != field {
                return Err(HopfError::FieldMismatch);
            }
        }
        let antipode_inv = antipode.invert()?;
        Ok(HopfAlgebraData { name: name.into(), field, dim: n, mult, unit, comult, counit, antipode, antipode_inv })
    }

    /// Runs [`verify_hopf`] and rejects failures.
    pub fn verified(self) -> Result<Self> {
        let r = verify_hopf(&self);
        if r.overall() {
            Ok(self)
        } else {
            Err(HopfError::Validation(Box::new(r)))
        }
    }

    /// The one-dimensional Hopf algebra `k`.
    pub fn ground(field: FieldSpec) -> Self {
        let one = Matrix::identity(field, 1);
        HopfAlgebraData::new("k", field, one.clone(), one.clone(), one.clone(), one.clone(), one).unwrap()
    }

    pub fn id(&self) -> Matrix {
        Matrix::identity(self.field, self.dim)
    }

    pub fn algebra(&self) -> Algebra {
        Algebra { dim: self.dim, mult: self.mult.clone(), unit: self.unit.clone() }
    }

    pub fn coalgebra(&self) -> Coalgebra {
        Coalgebra { dim: self.dim, comult: self.comult.clone(), counit: self.counit.clone() }
    }

    /// `(Δ⊗id)Δ`, the left-nested double coproduct.
    pub fn comult2(&self) -> Matrix {
        self.comult.then_kron(&[&self.comult, &self.id()])
    }

    /// Left-nested triple coproduct `h ↦ h₁⊗h₂⊗h₃⊗h₄`.
    pub fn comult3(&self) -> Matrix {
        let id = self.id();
        self.comult2().then_kron(&[&self.comult, &id, &id])
    }

    /// `μ(μ⊗id)`, the product of three factors.
    pub fn mult3(&self) -> Matrix {
        self.mult.kron(&self.id()).mul(&self.mult)
    }

    /// `ηε`, the unit of the convolution algebra `End(H)`.
    pub fn unit_counit(&self) -> Matrix {
        self.counit.mul(&self.unit)
    }

    pub fn is_commutative(&self) -> bool {
        swap_inputs(&self.mult, self.dim, self.dim) == self.mult
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comult.then_perm(&[self.dim, self.dim], &[1, 0]) == self.comult
    }

    /// Equality of all structure constants, ignoring the name.
    pub fn structure_eq(&self, o: &HopfAlgebraData) -> bool {
        self.field == o.field
            && self.dim == o.dim
            && self.mult == o.mult
            && self.unit == o.unit
            && self.comult == o.comult
            && self.counit == o.counit
            && self.antipode == o.antipode
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// Product of the tensor algebra `A⊗B` from the products of `A` and `B`.
pub fn tensor_mult(ma: &Matrix, a: usize, mb: &Matrix, b: usize) -> Matrix {
    Matrix::identity(ma.field(), a * b * a * b).then_perm(&[a, b, a, b], &[0, 2, 1, 3]).then_kron(&[ma, mb])
}

/// Product of two elements given as row vectors.
pub fn mul_elems(mult: &Matrix, x: &Matrix, y: &Matrix) -> Matrix {
    x.kron(y).mul(mult)
}

/// Precomposes a map out of `V⊗W` with the flip `W⊗V → V⊗W`.
pub fn swap_inputs(m: &Matrix, v: usize, w: usize) -> Matrix {
    m.transpose().then_perm(&[v, w], &[1, 0]).transpose()
}

/// The full Hopf axiom ledger.
pub fn verify_hopf(h: &HopfAlgebraData) -> VerificationReport {
    let mut r = VerificationReport::new(format!("hopf {}", h.name));
    let n = h.dim;
    let id = h.id();
    let f = h.field;
    let k1 = Matrix::identity(f, 1);

    let lhs = h.mult.kron(&id).mul(&h.mult);
    let rhs = id.kron(&h.mult).mul(&h.mult);
    r.check_map("associativity", &lhs, &rhs, &[n, n, n], &[n]);

    let left = h.unit.kron(&id).mul(&h.mult);
    let right = id.kron(&h.unit).mul(&h.mult);
    let ok = r.check_map("unit", &left, &id, &[n], &[n]);
    if ok {
        r.entries.pop();
        r.check_map("unit", &right, &id, &[n], &[n]);
    }

    let lhs = h.comult.then_kron(&[&h.comult, &id]);
    let rhs = h.comult.then_kron(&[&id, &h.comult]);
    r.check_map("coassociativity", &lhs, &rhs, &[n], &[n, n, n]);

    let left = h.comult.then_kron(&[&h.counit, &id]);
    let right = h.comult.then_kron(&[&id, &h.counit]);
    let ok = r.check_map("counit", &left, &id, &[n], &[n]);
    if ok {
        r.entries.pop();
        r.check_map("counit", &right, &id, &[n], &[n]);
    }

    let lhs = h.mult.mul(&h.comult);
    let rhs = Matrix::identity(f, n * n)
        .then_kron(&[&h.comult, &h.comult])
        .then_perm(&[n, n, n, n], &[0, 2, 1, 3])
        .then_kron(&[&h.mult, &h.mult]);
    let ok = r.check_map("comult-algebra-map", &lhs, &rhs, &[n, n], &[n, n]);
    if ok {
        r.entries.pop();
        r.check_map("comult-algebra-map", &h.unit.mul(&h.comult), &h.unit.kron(&h.unit), &[1], &[n, n]);
    }

    let lhs = h.mult.mul(&h.counit);
    let rhs = h.counit.kron(&h.counit);
    let ok = r.check_map("counit-algebra-map", &lhs, &rhs, &[n, n], &[1]);
    if ok {
        r.entries.pop();
        r.check_map("counit-algebra-map", &h.unit.mul(&h.counit), &k1, &[1], &[1]);
    }

    let ee = h.unit_counit();
    let lhs = h.comult.then_kron(&[&h.antipode, &id]).mul(&h.mult);
    r.check_map("antipode-left", &lhs, &ee, &[n], &[n]);
    let lhs = h.comult.then_kron(&[&id, &h.antipode]).mul(&h.mult);
    r.check_map("antipode-right", &lhs, &ee, &[n], &[n]);

    r.check_map("antipode-inverse", &h.antipode.mul(&h.antipode_inv), &id, &[n], &[n]);
    r
}

/// The dual Hopf algebra on the dual basis.
pub fn dual(h: &HopfAlgebraData) -> HopfAlgebraData {
    HopfAlgebraData {
        name: dual_name(&h.name),
        field: h.field,
        dim: h.dim,
        mult: h.comult.transpose(),
        unit: h.counit.transpose(),
        comult: h.mult.transpose(),
        counit: h.unit.transpose(),
        antipode: h.antipode.transpose(),
        antipode_inv: h.antipode_inv.transpose(),
    }
}

fn dual_name(name: &str) -> String {
    match name.strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
        Some(inner) => inner.to_string(),
        None => format!("dual({})", name),
    }
}

pub fn variant(h: &HopfAlgebraData, which: Variant) -> HopfAlgebraData {
    let n = h.dim;
    let flip_mult = |m: &Matrix| swap_inputs(m, n, n);
    let flip_comult = |m: &Matrix| m.then_perm(&[n, n], &[1, 0]);
    let (mult, comult, s, sinv, tag) = match which {
        Variant::Op => (flip_mult(&h.mult), h.comult.clone(), h.antipode_inv.clone(), h.antipode.clone(), "op"),
        Variant::Cop => (h.mult.clone(), flip_comult(&h.comult), h.antipode_inv.clone(), h.antipode.clone(), "cop"),
        Variant::OpCop => {
            (flip_mult(&h.mult), flip_comult(&h.comult), h.antipode.clone(), h.antipode_inv.clone(), "opcop")
        }
    };
    HopfAlgebraData {
        name: format!("{}^{}", h.name, tag),
        field: h.field,
        dim: n,
        mult,
        unit: h.unit.clone(),
        comult,
        counit: h.counit.clone(),
        antipode: s,
        antipode_inv: sinv,
    }
}

/// Componentwise structure on `H⊗K` with basis `e_i⊗f_j ↦ i·dim K + j`.
pub fn tensor_product(h: &HopfAlgebraData, k: &HopfAlgebraData) -> Result<HopfAlgebraData> {
    if h.field != k.field {
        return Err(HopfError::FieldMismatch);
    }
    let (a, b) = (h.dim, k.dim);
    let f = h.field;
    let mult = tensor_mult(&h.mult, a, &k.mult, b);
    let comult = Matrix::identity(f, a * b).then_kron(&[&h.comult, &k.comult]).then_perm(&[a, a, b, b], &[0, 2, 1, 3]);
    Ok(HopfAlgebraData {
        name: format!("{}*{}", h.name, k.name),
        field: f,
        dim: a * b,
        mult,
        unit: h.unit.kron(&k.unit),
        comult,
        counit: h.counit.kron(&k.counit),
        antipode: h.antipode.kron(&k.antipode),
        antipode_inv: h.antipode_inv.kron(&k.antipode_inv),
    })
}

/// `f∗g = μ_A(f⊗g)Δ_C` for maps `C → A`.
pub fn convolution(c: &Coalgebra, a: &Algebra, f: &Matrix, g: &Matrix) -> Matrix {
    c.comult.then_kron(&[f, g]).mul(&a.mult)
}

/// The two-sided convolution inverse of `f: C → A`, found by solving the
/// linear system `f∗g = g∗f = ηε` for the entries of `g`.
pub fn convolution_inverse(c: &Coalgebra, a: &Algebra, f: &Matrix) -> Result<Matrix> {
    let (nc, na) = (c.dim, a.dim);
    if f.shape() != (nc, na) {
        return Err(HopfError::ShapeMismatch(format!("map of shape {:?} between spaces of dims {} and {}", f.shape(), nc, na)));
    }
    let field = f.field();
    let mut items = Vec::new();
    // equation (side, c, a'') ; unknown (c2, a')
    for cc in 0..nc {
        for (col, d) in c.comult.row(cc) {
            let (c1, c2) = (col / nc, col % nc);
            // f∗g: f(c1) g(c2)
            for (x, fv) in f.row(c1) {
                let dv = d * fv;
                for y in 0..na {
                    for (z, m) in a.mult.row(x * na + y) {
                        items.push((cc * na + z, c2 * na + y, &dv * m));
                    }
                }
            }
            // g∗f: g(c1) f(c2)
            for (x, fv) in f.row(c2) {
                let dv = d * fv;
                for y in 0..na {
                    for (z, m) in a.mult.row(y * na + x) {
                        items.push((nc * na + cc * na + z, c1 * na + y, &dv * m));
                    }
                }
            }
        }
    }
    let sys = Matrix::from_triplets(field, 2 * nc * na, nc * na, items);
    let ee = c.counit.mul(&a.unit);
    let mut rhs = Vec::new();
    for side in 0..2 {
        for cc in 0..nc {
            for (z, v) in ee.row(cc) {
                rhs.push((side * nc * na + cc * na + z, 0, v.clone()));
            }
        }
    }
    let rhs = Matrix::from_triplets(field, 2 * nc * na, 1, rhs);
    let x = sys.solve(&rhs).ok_or(HopfError::NotConvolutionInvertible)?;
    let items = x.row_data().iter().enumerate().flat_map(|(k, r)| r.iter().map(move |(_, v)| (k / na, k % na, v.clone()))).collect();
    Ok(Matrix::from_triplets(field, nc, na, items))
}

/// Is `f: H → K` a Hopf algebra map? Reports each compatibility.
pub fn verify_hopf_map(h: &HopfAlgebraData, k: &HopfAlgebraData, f: &Matrix) -> VerificationReport {
    let mut r = VerificationReport::new(format!("hopf map {} -> {}", h.name, k.name));
    let (a, b) = (h.dim, k.dim);
    if f.shape() != (a, b) {
        r.fail_counts("shape", vec![], f.rows() * f.cols(), a * b);
        return r;
    }
    r.check_map("mult", &h.mult.mul(f), &f.kron(f).mul(&k.mult), &[a, a], &[b]);
    r.check_map("unit", &h.unit.mul(f), &k.unit, &[1], &[b]);
    r.check_map("comult", &h.comult.then_kron(&[f, f]), &f.mul(&k.comult), &[a], &[b, b]);
    r.check_map("counit", &f.mul(&k.counit), &h.counit, &[a], &[1]);
    r.check_map("antipode", &h.antipode.mul(f), &f.mul(&k.antipode), &[a], &[b]);
    r
}

/// `m^e` by repeated multiplication.
pub fn matrix_power(m: &Matrix, e: usize) -> Matrix {
    let mut acc = Matrix::identity(m.field(), m.rows());
    for _ in 0..e {
        acc = acc.mul(m);
    }
    acc
}
