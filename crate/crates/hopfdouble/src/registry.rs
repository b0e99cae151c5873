//! Built-in examples. Names returned by [`hopf_names`] and
//! [`pairing_names`] are stable command-line identifiers.
//!
//! Bases:
//! * `kC_n`: `1, g, …, g^{n-1}`;
//! * `kS_3`: `e, (1 2 3), (1 3 2), (1 2), (1 3), (2 3)`;
//! * Taft and Sweedler algebras: `g^i x^j` at index `j·n + i`
//!   (so Sweedler's basis is `1, g, x, gx`);
//! * `dual-*`: the dual basis of the named algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{HopfError, Result};
use crate::exactmath::{FieldSpec, Matrix, Scalar};
use crate::hopf::{dual, mul_elems, tensor_mult, HopfAlgebraData};
use crate::modcats::{YdFlavor, YdModule};
use crate::pairing::{standard_pairing, HopfPairing, PairingKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExampleKey {
    Cyclic(usize),
    Symmetric3,
    DualCyclic(usize),
    DualSymmetric3,
    Sweedler4,
    Taft { n: usize, p: u64, q: u64 },
}

impl ExampleKey {
    pub fn parse(name: &str) -> Result<Self> {
        let unknown = || HopfError::UnknownExample(name.to_string());
        if name == "s3" {
            return Ok(ExampleKey::Symmetric3);
        }
        if name == "dual-s3" {
            return Ok(ExampleKey::DualSymmetric3);
        }
        if name == "sweedler4" {
            return Ok(ExampleKey::Sweedler4);
        }
        if let Some(rest) = name.strip_prefix("dual-c") {
            return rest.parse().map(ExampleKey::DualCyclic).map_err(|_| unknown());
        }
        if let Some(rest) = name.strip_prefix('c') {
            return rest.parse().map(ExampleKey::Cyclic).map_err(|_| unknown());
        }
        if let Some(rest) = name.strip_prefix("taft-") {
            let parts: Vec<&str> = rest.split('-').collect();
            if parts.len() == 3 {
                let n = parts[0].parse().map_err(|_| unknown())?;
                let p = parts[1].parse().map_err(|_| unknown())?;
                let q = parts[2].parse().map_err(|_| unknown())?;
                return Ok(ExampleKey::Taft { n, p, q });
            }
        }
        Err(unknown())
    }

    pub fn name(&self) -> String {
        match self {
            ExampleKey::Cyclic(n) => format!("c{}", n),
            ExampleKey::Symmetric3 => "s3".into(),
            ExampleKey::DualCyclic(n) => format!("dual-c{}", n),
            ExampleKey::DualSymmetric3 => "dual-s3".into(),
            ExampleKey::Sweedler4 => "sweedler4".into(),
            ExampleKey::Taft { n, p, q } => format!("taft-{}-{}-{}", n, p, q),
        }
    }
}

/// Registry algebras, in listing order.
pub fn hopf_names() -> Vec<&'static str> {
    vec![
        "c2", "c3", "c4", "c5", "c6", "s3", "dual-c2", "dual-c3", "dual-c4", "dual-c5", "dual-c6", "dual-s3",
        "sweedler4", "taft-3-7-2",
    ]
}

/// Registry pairings, in listing order.
pub fn pairing_names() -> Vec<&'static str> {
    vec![
        "eval-c2",
        "eval-c3",
        "eval-s3",
        "eval-sweedler4",
        "eval-taft-3-7-2",
        "trivial-c2-c3",
        "sign-s3-c2",
        "quotient-c4-c2",
    ]
}

/// Group algebra from a multiplication table and inverses.
fn group_algebra(name: &str, field: FieldSpec, table: &[Vec<usize>], inverse: &[usize]) -> Result<HopfAlgebraData> {
    let n = table.len();
    let one = field.one();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            mult.push((i * n + j, table[i][j], one.clone()));
        }
    }
    let mult = Matrix::from_triplets(field, n * n, n, mult);
    let e = (0..n).find(|&i| (0..n).all(|j| table[i][j] == j)).expect("group has an identity");
    let unit = Matrix::from_triplets(field, 1, n, vec![(0, e, one.clone())]);
    let comult = Matrix::from_triplets(field, n, n * n, (0..n).map(|i| (i, i * n + i, one.clone())).collect());
    let counit = Matrix::from_triplets(field, n, 1, (0..n).map(|i| (i, 0, one.clone())).collect());
    let antipode = Matrix::from_triplets(field, n, n, (0..n).map(|i| (i, inverse[i], one.clone())).collect());
    HopfAlgebraData::new(name, field, mult, unit, comult, counit, antipode)
}

fn cyclic(n: usize) -> Result<HopfAlgebraData> {
    if n == 0 {
        return Err(HopfError::BadParams("cyclic group of order 0".into()));
    }
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let inverse: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    group_algebra(&format!("c{}", n), FieldSpec::Rationals, &table, &inverse)
}

/// `S_3` as permutations of `{1,2,3}` in the documented basis order.
pub fn s3_elements() -> Vec<[usize; 3]> {
    // image of (1,2,3)
    vec![[1, 2, 3], [2, 3, 1], [3, 1, 2], [2, 1, 3], [3, 2, 1], [1, 3, 2]]
}

/// Sign of each `S_3` basis element: `0` for even, `1` for odd.
pub fn s3_parity() -> Vec<usize> {
    vec![0, 0, 0, 1, 1, 1]
}

fn symmetric3() -> Result<HopfAlgebraData> {
    let el = s3_elements();
    let index = |p: [usize; 3]| el.iter().position(|q| *q == p).unwrap();
    // (στ)(x) = σ(τ(x))
    let compose = |s: [usize; 3], t: [usize; 3]| [s[t[0] - 1], s[t[1] - 1], s[t[2] - 1]];
    let table: Vec<Vec<usize>> = el.iter().map(|&s| el.iter().map(|&t| index(compose(s, t))).collect()).collect();
    let inverse: Vec<usize> = (0..6).map(|i| (0..6).find(|&j| table[i][j] == 0).unwrap()).collect();
    group_algebra("s3", FieldSpec::Rationals, &table, &inverse)
}

/// Taft algebra `T_n(q)`: `gⁿ = 1`, `xⁿ = 0`, `xg = q·gx`, `Δx = x⊗1 + g⊗x`.
fn taft_like(name: &str, field: FieldSpec, n: usize, q: Scalar) -> Result<HopfAlgebraData> {
    let d = n * n;
    let idx = |i: usize, j: usize| j * n + i;
    // (g^i x^j)(g^k x^l) = q^{jk} g^{i+k} x^{j+l}
    let mut items = Vec::new();
    for j in 0..n {
        for i in 0..n {
            for l in 0..n {
                for k in 0..n {
                    if j + l < n {
                        items.push((idx(i, j) * d + idx(k, l), idx((i + k) % n, j + l), q.pow((j * k) as u64)));
                    }
                }
            }
        }
    }
    let mult = Matrix::from_triplets(field, d * d, d, items);
    let one = field.one();
    let unit = Matrix::from_triplets(field, 1, d, vec![(0, 0, one.clone())]);
    let basis = |b: usize| Matrix::from_triplets(field, 1, d, vec![(0, b, one.clone())]);
    let g = basis(idx(1, 0));
    let x = basis(idx(0, 1));
    let g_inv = basis(idx(n - 1, 0));
    let mult2 = tensor_mult(&mult, d, &mult, d);
    let dg = g.kron(&g);
    let dx = x.kron(&unit).add(&g.kron(&x));
    let sg = g_inv.clone();
    let sx = mul_elems(&mult, &g_inv, &x).scale(&-&one);
    let mut comult_rows = Vec::with_capacity(d);
    let mut antipode_rows = Vec::with_capacity(d);
    for j in 0..n {
        for i in 0..n {
            let mut delta = unit.kron(&unit);
            let mut s = unit.clone();
            for _ in 0..i {
                delta = mul_elems(&mult2, &delta, &dg);
                s = mul_elems(&mult, &sg, &s);
            }
            let mut sxj = unit.clone();
            for _ in 0..j {
                delta = mul_elems(&mult2, &delta, &dx);
                sxj = mul_elems(&mult, &sx, &sxj);
            }
            // S(g^i x^j) = S(x)^j S(g)^i
            let s = mul_elems(&mult, &sxj, &s);
            comult_rows.push(delta.row(0).clone());
            antipode_rows.push(s.row(0).clone());
        }
    }
    let comult = Matrix::from_rows(field, d * d, comult_rows);
    let antipode = Matrix::from_rows(field, d, antipode_rows);
    let counit = Matrix::from_triplets(field, d, 1, (0..n).map(|i| (idx(i, 0), 0, one.clone())).collect());
    HopfAlgebraData::new(name, field, mult, unit, comult, counit, antipode)
}

fn taft(n: usize, p: u64, q: u64) -> Result<HopfAlgebraData> {
    let field = FieldSpec::prime(p)?;
    if n < 2 {
        return Err(HopfError::BadParams("Taft algebras need n >= 2".into()));
    }
    let qs = field.from_i64(q as i64);
    let primitive = qs.pow(n as u64).is_one() && (1..n).all(|m| !qs.pow(m as u64).is_one());
    if !primitive {
        return Err(HopfError::BadParams(format!("{} is not a primitive {}-th root of unity mod {}", q, n, p)));
    }
    taft_like(&format!("taft-{}-{}-{}", n, p, q), field, n, qs)
}

pub fn build_hopf(key: &ExampleKey) -> Result<HopfAlgebraData> {
    let h = match key {
        ExampleKey::Cyclic(n) => cyclic(*n)?,
        ExampleKey::Symmetric3 => symmetric3()?,
        ExampleKey::DualCyclic(n) => dual(&cyclic(*n)?),
        ExampleKey::DualSymmetric3 => dual(&symmetric3()?),
        ExampleKey::Sweedler4 => {
            let q = FieldSpec::Rationals;
            taft_like("sweedler4", q, 2, q.from_i64(-1))?
        }
        ExampleKey::Taft { n, p, q } => taft(*n, *p, *q)?,
    };
    h.renamed(key.name()).verified()
}

pub fn build_hopf_named(name: &str) -> Result<HopfAlgebraData> {
    build_hopf(&ExampleKey::parse(name)?)
}

pub fn build_pairing(name: &str) -> Result<HopfPairing> {
    let p = match name {
        "trivial-c2-c3" => standard_pairing(PairingKind::Trivial, &build_hopf_named("c2")?, &build_hopf_named("c3")?)?,
        "sign-s3-c2" => {
            let c2 = build_hopf_named("c2")?;
            let s3 = build_hopf_named("s3")?;
            let f = c2.field;
            let items = s3_parity().into_iter().enumerate().map(|(i, s)| (i, s, f.one())).collect();
            let sign = Matrix::from_triplets(f, 6, 2, items);
            standard_pairing(PairingKind::FromMap(sign), &c2, &s3)?
        }
        "quotient-c4-c2" => {
            let c2 = build_hopf_named("c2")?;
            let c4 = build_hopf_named("c4")?;
            let f = c2.field;
            let items = (0..4).map(|i| (i, i % 2, f.one())).collect();
            let quot = Matrix::from_triplets(f, 4, 2, items);
            standard_pairing(PairingKind::FromMap(quot), &c2, &c4)?
        }
        _ => {
            let base = name.strip_prefix("eval-").ok_or_else(|| HopfError::UnknownExample(name.to_string()))?;
            if !hopf_names().contains(&base) {
                return Err(HopfError::UnknownExample(name.to_string()));
            }
            let h = build_hopf_named(base)?;
            standard_pairing(PairingKind::Evaluation, &h, &h)?
        }
    };
    Ok(HopfPairing { name: name.to_string(), ..p })
}

/// Fixture YD modules (left `H`-module, right `K`-comodule) for a pairing:
/// the trivial module, the regular double module pulled back to a YD
/// module, their tensor product, and seeded small samples.
pub fn build_test_modules(p: &HopfPairing) -> Result<Vec<YdModule>> {
    let mut out = Vec::new();
    let triv = YdModule::trivial(p, YdFlavor::HModKComod);
    out.push(triv.clone());
    let d = crate::doubles::quantum_double(p)?;
    let reg = crate::modcats::RepModule::regular(&d);
    let reg_yd = crate::functors::rep_to_yd(&reg, p)?;
    out.push(yd_tensor_checked(&triv, &reg_yd)?);
    out.push(reg_yd);
    out.extend(sample_yd_modules(p, 0x5eed, 2));
    Ok(out)
}

fn yd_tensor_checked(a: &YdModule, b: &YdModule) -> Result<YdModule> {
    crate::modcats::yd_tensor(a, b)
}

/// Small YD modules obtained from one-dimensional data and by sampling
/// compatible coactions for sign-like actions (seeded, deterministic).
pub fn sample_yd_modules(p: &HopfPairing, seed: u64, count: usize) -> Vec<YdModule> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 8 * (count + 1) {
        attempts += 1;
        let dim = rng.gen_range(1..=2);
        if let Some(m) = crate::modcats::random_yd_module(p, dim, &mut rng) {
            if !m.is_trivial() && !out.iter().any(|o: &YdModule| o == &m) {
                out.push(m);
            }
        }
    }
    out
}

/// Dual-side two-sided fixtures: the unit object and `V*⊗K` for the
/// fixture modules of dimension at most 2, at most three in all.
pub fn two_sided_fixtures(p: &HopfPairing) -> Result<Vec<crate::modcats::TwoSidedModule>> {
    use crate::functors::{two_sided_dualize, v_star_tensor_k};
    let mut out = vec![two_sided_dualize(&crate::modcats::TwoSidedModule::unit_k(p))];
    for v in build_test_modules(p)?.iter().filter(|v| v.dim <= 2) {
        let m = two_sided_dualize(&v_star_tensor_k(v)?);
        if out.len() < 3 && !out.contains(&m) {
            out.push(m);
        }
    }
    Ok(out)
}

/// Corrupted mapping systems, each paired with the condition it must violate.
pub fn mutant_names() -> Vec<(&'static str, &'static str)> {
    vec![("mutant-zeta-bar", "c6"), ("mutant-gamma-antipode", "l1"), ("mutant-trivial-pi", "c2")]
}

/// The canonical system of a registry pairing, or one of the mutants:
/// `ζ` replaced by `ζ̄` over Sweedler's algebra, `γ(k) = S(k)⊗1` over
/// `kC₃`, and `π(k⊗h) = kε(h)` over `kC₃`.
pub fn build_pams(name: &str) -> Result<crate::partialdual::Pams> {
    use crate::partialdual::canonical_pams;
    match name {
        "mutant-zeta-bar" => {
            let s = canonical_pams(&build_pairing("eval-sweedler4")?)?;
            let zb = s.zeta_bar.clone().ok_or(HopfError::NotConvolutionInvertible)?;
            Ok(s.with_zeta(zb))
        }
        "mutant-gamma-antipode" => {
            let p = build_pairing("eval-c3")?;
            Ok(canonical_pams(&p)?.with_gamma(p.k_alg.antipode.kron(&p.h_alg.unit)))
        }
        "mutant-trivial-pi" => {
            let p = build_pairing("eval-c3")?;
            Ok(canonical_pams(&p)?.with_pi(p.k_alg.id().kron(&p.h_alg.counit)))
        }
        _ => canonical_pams(&build_pairing(name)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{matrix_power, verify_hopf};

    #[test]
    fn every_registry_algebra_passes() {
        for name in hopf_names() {
            let h = build_hopf_named(name).unwrap();
            assert!(verify_hopf(&h).overall(), "{}", name);
        }
    }

    #[test]
    fn c2_antipode_is_identity() {
        let h = build_hopf_named("c2").unwrap();
        assert_eq!(h.dim, 2);
        assert_eq!(h.antipode, h.id());
    }

    #[test]
    fn sweedler_antipode_order_four() {
        let h = build_hopf_named("sweedler4").unwrap();
        assert_eq!(matrix_power(&h.antipode, 4), h.id());
        assert_ne!(matrix_power(&h.antipode, 2), h.id());
        // S(x) = -gx
        let q = h.field;
        assert_eq!(h.antipode.dense_row(2), vec![q.zero(), q.zero(), q.zero(), q.from_i64(-1)]);
    }

    #[test]
    fn taft_3_7_2() {
        let h = build_hopf_named("taft-3-7-2").unwrap();
        assert_eq!(h.dim, 9);
        assert_eq!(h.field, FieldSpec::Prime(7));
        assert!(matches!(build_hopf(&ExampleKey::Taft { n: 3, p: 7, q: 3 }), Err(HopfError::BadParams(_))));
        assert!(matches!(build_hopf(&ExampleKey::Taft { n: 3, p: 9, q: 2 }), Err(HopfError::BadParams(_))));
    }

    #[test]
    fn builds_are_deterministic() {
        for name in hopf_names() {
            assert_eq!(build_hopf_named(name).unwrap(), build_hopf_named(name).unwrap());
        }
    }

    #[test]
    fn registry_pairings_verify() {
        for name in pairing_names() {
            let p = build_pairing(name).unwrap();
            assert!(crate::pairing::verify_pairing(&p).overall(), "{}", name);
        }
        assert!(matches!(build_pairing("eval-c99x"), Err(HopfError::UnknownExample(_))));
    }

    #[test]
    fn sign_pairing_is_surjective_not_injective() {
        let p = build_pairing("sign-s3-c2").unwrap();
        let sr = p.sigma_r();
        assert_eq!(sr.rank(), 2);
        assert!(sr.rank() < 6);
    }

    #[test]
    fn s3_table_closes() {
        let h = build_hopf_named("s3").unwrap();
        // (1 2 3)^3 = e and (1 2)(1 2) = e
        let x = Matrix::from_triplets(h.field, 1, 6, vec![(0, 1, h.field.one())]);
        let x3 = mul_elems(&h.mult, &mul_elems(&h.mult, &x, &x), &x);
        assert_eq!(x3, h.unit);
        let t = Matrix::from_triplets(h.field, 1, 6, vec![(0, 3, h.field.one())]);
        assert_eq!(mul_elems(&h.mult, &t, &t), h.unit);
    }
}
