//! Exact scalars and sparse exact matrices.
//!
//! Matrices are stored row by row, each row a sorted list of nonzero
//! entries. Linear maps between the spaces of this crate use the row
//! convention: row `i` of a map matrix is the image of basis vector `e_i`,
//! so the composite "first `f`, then `g`" is the product `f * g`.
//! Tensor bases are flattened with the leftmost factor slowest.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{HopfError, Result};

/// The ground field: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Prime field of order `p`; rejects composites and `p >= 2^32`.
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || p >= (1u64 << 32) || !is_prime(p) {
            return Err(HopfError::BadParams(format!("{} is not a supported prime", p)));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Mod { value: n.rem_euclid(*p as i64) as u64, p: *p },
        }
    }

    /// `num/den`; `None` when `den` vanishes in the field.
    pub fn ratio(&self, num: i64, den: i64) -> Option<Scalar> {
        self.from_i64(den).inv().map(|d| &self.from_i64(num) * &d)
    }

    /// Parses `"p/q"` or an integer literal.
    pub fn parse_scalar(&self, s: &str) -> Option<Scalar> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
            None => (s.parse::<BigInt>().ok()?, BigInt::one()),
        };
        if d.is_zero() {
            return None;
        }
        match self {
            FieldSpec::Rationals => Some(Scalar::Rat(BigRational::new(n, d))),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(*p);
                let reduce = |x: &BigInt| {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.to_u64().unwrap_or(0)
                };
                let num = Scalar::Mod { value: reduce(&n), p: *p };
                let den = Scalar::Mod { value: reduce(&d), p: *p };
                den.inv().map(|di| &num * &di)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{}", p),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Rationals are kept in lowest terms, residues in `0..p`,
/// so equality is representational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u64, p: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Mod { p, .. } => FieldSpec::Prime(*p),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Mod { value, p } => Scalar::Mod { value: pow_mod(*value, *p - 2, *p), p: *p },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `p/q` for rationals (`p` alone when integral), the residue for prime fields.
    pub fn render(&self) -> String {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => value.to_string(),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn mismatch() -> ! {
    panic!("scalars from different fields combined")
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod { value: (a + b) % p, p: *p }
            }
            _ => mismatch(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod { value: (a + p - b) % p, p: *p }
            }
            _ => mismatch(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod { value: ((*a as u128 * *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => mismatch(),
        }
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, p } => Scalar::Mod { value: (p - value) % p, p: *p },
        }
    }
}

/// Sparse row: strictly increasing column indices, no stored zeros.
pub type Row = Vec<(usize, Scalar)>;

/// Sorts and merges duplicate columns, dropping zeros.
fn normalize_row(mut items: Vec<(usize, Scalar)>) -> Row {
    if items.len() <= 1 {
        items.retain(|(_, v)| !v.is_zero());
        return items;
    }
    items.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: Row = Vec::with_capacity(items.len());
    for (c, v) in items {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = &*lv + &v,
            _ => {
                if let Some((_, lv)) = out.last() {
                    if lv.is_zero() {
                        out.pop();
                    }
                }
                out.push((c, v));
            }
        }
    }
    if let Some((_, lv)) = out.last() {
        if lv.is_zero() {
            out.pop();
        }
    }
    out
}

fn row_axpy(target: &Row, coef: &Scalar, src: &Row) -> Row {
    // target + coef * src
    let mut out = Vec::with_capacity(target.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < src.len() {
        let take = match (target.get(i), src.get(j)) {
            (Some(a), Some(b)) => a.0.cmp(&b.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match take {
            Ordering::Less => {
                out.push(target[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((src[j].0, coef * &src[j].1));
                j += 1;
            }
            Ordering::Equal => {
                let v = &target[i].1 + &(coef * &src[j].1);
                if !v.is_zero() {
                    out.push((target[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Exact matrix over one field, stored sparsely by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Row>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let one = field.one();
        Matrix { field, rows: n, cols: n, data: (0..n).map(|i| vec![(i, one.clone())]).collect() }
    }

    /// Builds from a row-major dense grid.
    pub fn from_dense(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(HopfError::ShapeMismatch(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        let mut data = vec![Vec::new(); rows];
        for (k, v) in entries.into_iter().enumerate() {
            if !v.is_zero() {
                data[k / cols.max(1)].push((k % cols, v));
            }
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// Integer-entry convenience constructor.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let entries = rows.iter().flat_map(|row| row.iter().map(|&v| field.from_i64(v))).collect();
        Matrix::from_dense(field, r, c, entries).expect("ragged integer matrix")
    }

    /// Builds from `(row, col, value)` triples; repeated positions add up.
    pub fn from_triplets(field: FieldSpec, rows: usize, cols: usize, items: Vec<(usize, usize, Scalar)>) -> Self {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (r, c, v) in items {
            assert!(r < rows && c < cols, "triplet out of range");
            buckets[r].push((c, v));
        }
        Matrix { field, rows, cols, data: buckets.into_iter().map(normalize_row).collect() }
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Row>) -> Self {
        let data: Vec<Row> = rows.into_iter().map(normalize_row).collect();
        Matrix { field, rows: data.len(), cols, data }
    }

    /// A single row vector.
    pub fn row_vector(field: FieldSpec, entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Matrix::from_dense(field, 1, n, entries).expect("row vector")
    }

    /// A single column vector.
    pub fn col_vector(field: FieldSpec, entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Matrix::from_dense(field, n, 1, entries).expect("column vector")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn row(&self, i: usize) -> &Row {
        &self.data[i]
    }
    pub fn row_data(&self) -> &[Row] {
        &self.data
    }
    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.data[i].binary_search_by(|e| e.0.cmp(&j)) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// Row-major dense entries.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.rows * self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out[i * self.cols + j] = v.clone();
            }
        }
        out
    }

    /// Dense entries of row `i`.
    pub fn dense_row(&self, i: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.cols];
        for (j, v) in &self.data[i] {
            out[*j] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut buckets: Vec<Row> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                buckets[*j].push((i, v.clone()));
            }
        }
        Matrix { field: self.field, rows: self.cols, cols: self.rows, data: buckets }
    }

    fn same_shape(&self, o: &Matrix) {
        assert_eq!(self.shape(), o.shape(), "matrix shape mismatch");
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        self.same_shape(o);
        let one = self.field.one();
        let data = self.data.iter().zip(&o.data).map(|(a, b)| row_axpy(a, &one, b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        self.same_shape(o);
        let m1 = -&self.field.one();
        let data = self.data.iter().zip(&o.data).map(|(a, b)| row_axpy(a, &m1, b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.field, self.rows, self.cols);
        }
        let data = self.data.iter().map(|r| r.iter().map(|(j, v)| (*j, c * v)).collect()).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Matrix product `self · o`.
    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = Vec::new();
                for (k, a) in row {
                    for (j, b) in &o.data[*k] {
                        acc.push((*j, a * b));
                    }
                }
                normalize_row(acc)
            })
            .collect();
        Matrix { field: self.field, rows: self.rows, cols: o.cols, data }
    }

    /// Kronecker product: entry ((i·b.rows+i'),(j·b.cols+j')) = a[i,j]·b[i',j'].
    pub fn kron(&self, b: &Matrix) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * b.rows);
        for ra in &self.data {
            for rb in &b.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (j, x) in ra {
                    for (jj, y) in rb {
                        row.push((j * b.cols + jj, x * y));
                    }
                }
                data.push(row);
            }
        }
        Matrix { field: self.field, rows: self.rows * b.rows, cols: self.cols * b.cols, data }
    }

    /// `self · (f_0 ⊗ f_1 ⊗ …)` without materializing the Kronecker product.
    pub fn then_kron(&self, fs: &[&Matrix]) -> Matrix {
        let in_dims: Vec<usize> = fs.iter().map(|f| f.rows).collect();
        let out_dims: Vec<usize> = fs.iter().map(|f| f.cols).collect();
        assert_eq!(in_dims.iter().product::<usize>(), self.cols, "then_kron shape mismatch");
        let out_cols: usize = out_dims.iter().product();
        let nf = fs.len();
        let mut idx = vec![0usize; nf];
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: Vec<(usize, Scalar)> = Vec::new();
                for (c, coef) in row {
                    let mut rem = *c;
                    for t in (0..nf).rev() {
                        idx[t] = rem % in_dims[t];
                        rem /= in_dims[t];
                    }
                    let mut partial: Vec<(usize, Scalar)> = vec![(0, coef.clone())];
                    for t in 0..nf {
                        let frow = &fs[t].data[idx[t]];
                        if frow.is_empty() {
                            partial.clear();
                            break;
                        }
                        let mut next = Vec::with_capacity(partial.len() * frow.len());
                        for (p, pv) in &partial {
                            for (j, fv) in frow {
                                next.push((p * out_dims[t] + j, pv * fv));
                            }
                        }
                        partial = next;
                    }
                    acc.extend(partial);
                }
                normalize_row(acc)
            })
            .collect();
        Matrix { field: self.field, rows: self.rows, cols: out_cols, data }
    }

    /// Reorders tensor factors of the column space: output factor `t` is
    /// input factor `perm[t]`, where the columns factor as `dims`.
    pub fn then_perm(&self, dims: &[usize], perm: &[usize]) -> Matrix {
        assert_eq!(dims.iter().product::<usize>(), self.cols, "then_perm shape mismatch");
        let nf = dims.len();
        let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        let mut idx = vec![0usize; nf];
        let data = self
            .data
            .iter()
            .map(|row| {
                let items = row
                    .iter()
                    .map(|(c, v)| {
                        let mut rem = *c;
                        for t in (0..nf).rev() {
                            idx[t] = rem % dims[t];
                            rem /= dims[t];
                        }
                        let mut nc = 0;
                        for t in 0..nf {
                            nc = nc * out_dims[t] + idx[perm[t]];
                        }
                        (nc, v.clone())
                    })
                    .collect();
                normalize_row(items)
            })
            .collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Stacks rows of `self` above rows of `o`.
    pub fn vstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols, "vstack shape mismatch");
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Places the columns of `o` to the right of those of `self`.
    pub fn hstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.rows, o.rows, "hstack shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().map(|(j, v)| (j + self.cols, v.clone())));
                r
            })
            .collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols + o.cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let data = idx.iter().map(|&i| self.data[i].clone()).collect();
        Matrix { field: self.field, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &j) in idx.iter().enumerate() {
            pos[j] = k;
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let items = r.iter().filter(|(j, _)| pos[*j] != usize::MAX).map(|(j, v)| (pos[*j], v.clone())).collect();
                normalize_row(items)
            })
            .collect();
        Matrix { field: self.field, rows: self.rows, cols: idx.len(), data }
    }

    /// Row-reduced echelon form of the row space: the nonzero rows, each with
    /// leading coefficient 1, leading columns strictly increasing.
    pub fn rref(&self) -> Echelon {
        let mut pivots: BTreeMap<usize, Row> = BTreeMap::new();
        for row in &self.data {
            if let Some(r) = reduce_against(row.clone(), &pivots) {
                let lead = r[0].0;
                let inv = r[0].1.inv().expect("nonzero lead");
                let r: Row = r.into_iter().map(|(j, v)| (j, &v * &inv)).collect();
                pivots.insert(lead, r);
            }
        }
        // back substitution, largest pivot first
        let keys: Vec<usize> = pivots.keys().rev().cloned().collect();
        let mut done: BTreeMap<usize, Row> = BTreeMap::new();
        for k in keys {
            let mut r = pivots.remove(&k).unwrap();
            loop {
                let hit = r.iter().skip(1).find(|(j, _)| done.contains_key(j)).map(|(j, v)| (*j, v.clone()));
                match hit {
                    Some((j, v)) => r = row_axpy(&r, &-&v, &done[&j]),
                    None => break,
                }
            }
            done.insert(k, r);
        }
        let pivot_cols: Vec<usize> = done.keys().cloned().collect();
        let rows: Vec<Row> = done.into_values().collect();
        Echelon { field: self.field, cols: self.cols, pivot_cols, rows }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivot_cols.len()
    }

    /// Basis of `{v : self·v = 0}`, returned as the rows of a matrix in
    /// reduced echelon form (leading entries at increasing indices).
    pub fn kernel_basis(&self) -> Matrix {
        let e = self.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &e.pivot_cols {
                v[p] = true;
            }
            v
        };
        let one = self.field.one();
        let mut free_rows: Vec<Vec<(usize, Scalar)>> =
            (0..self.cols).filter(|&f| !is_pivot[f]).map(|f| vec![(f, one.clone())]).collect();
        let free_index: Vec<usize> = {
            let mut v = vec![usize::MAX; self.cols];
            let mut k = 0;
            for (f, p) in is_pivot.iter().enumerate() {
                if !p {
                    v[f] = k;
                    k += 1;
                }
            }
            v
        };
        for (r, &p) in e.rows.iter().zip(&e.pivot_cols) {
            for (j, v) in r.iter().skip(1) {
                let k = free_index[*j];
                if k != usize::MAX {
                    free_rows[k].push((p, -v));
                }
            }
        }
        let basis = Matrix::from_rows(self.field, self.cols, free_rows);
        let canon = basis.rref();
        Matrix::from_rows(self.field, self.cols, canon.rows)
    }

    pub fn invert(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(HopfError::ShapeMismatch(format!("cannot invert a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let e = aug.rref();
        if n > 0 && (e.pivot_cols.len() < n || e.pivot_cols[n - 1] != n - 1) {
            return Err(HopfError::SingularMatrix);
        }
        let rows = e.rows.into_iter().take(n).map(|r| r.into_iter().filter(|(j, _)| *j >= n).map(|(j, v)| (j - n, v)).collect()).collect();
        Ok(Matrix::from_rows(self.field, n, rows))
    }

    /// Some `x` with `self·x = b`, free variables set to zero.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "solve shape mismatch");
        let n = self.cols;
        let e = self.hstack(b).rref();
        if e.pivot_cols.iter().any(|&p| p >= n) {
            return None;
        }
        let mut items = Vec::new();
        for (r, &p) in e.rows.iter().zip(&e.pivot_cols) {
            for (j, v) in r {
                if *j >= n {
                    items.push((p, j - n, v.clone()));
                }
            }
        }
        Some(Matrix::from_triplets(self.field, n, b.cols, items))
    }

    /// Right inverse `s` of a surjection `q` (`q·s = I`), with each column of
    /// `s` supported on the echelon pivot columns of `q`.
    pub fn solve_right_inverse_section(&self) -> Result<Matrix> {
        let e = self.rref();
        if e.pivot_cols.len() < self.rows {
            return Err(HopfError::NotSurjective);
        }
        let sub = self.select_cols(&e.pivot_cols);
        let inv = sub.invert().map_err(|_| HopfError::NotSurjective)?;
        let items = inv
            .data
            .iter()
            .enumerate()
            .flat_map(|(k, r)| r.iter().map(move |(j, v)| (k, *j, v.clone())))
            .map(|(k, j, v)| (e.pivot_cols[k], j, v))
            .collect();
        Ok(Matrix::from_triplets(self.field, self.cols, self.rows, items))
    }

    /// First position where the two matrices differ, scanning row-major.
    pub fn first_difference(&self, o: &Matrix) -> Option<(usize, usize, Scalar, Scalar)> {
        if self.shape() != o.shape() {
            return Some((self.rows, self.cols, self.field.zero(), self.field.zero()));
        }
        for (i, (a, b)) in self.data.iter().zip(&o.data).enumerate() {
            if a != b {
                let d = row_axpy(a, &-&self.field.one(), b);
                let j = d[0].0;
                return Some((i, j, self.get(i, j), o.get(i, j)));
            }
        }
        None
    }
}

fn reduce_against(row: Row, pivots: &BTreeMap<usize, Row>) -> Option<Row> {
    let mut r = row;
    let mut cursor = 0;
    loop {
        let hit = r.iter().find(|(j, _)| *j >= cursor && pivots.contains_key(j)).map(|(j, v)| (*j, v.clone()));
        match hit {
            Some((j, v)) => {
                r = row_axpy(&r, &-&v, &pivots[&j]);
                cursor = j + 1;
            }
            None => break,
        }
    }
    if r.is_empty() {
        None
    } else {
        Some(r)
    }
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct Echelon {
    pub field: FieldSpec,
    pub cols: usize,
    pub pivot_cols: Vec<usize>,
    pub rows: Vec<Row>,
}

impl Echelon {
    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.cols, self.rows.clone())
    }
}

/// Row span membership: is each row of `sub` in the row space of `space`?
pub fn rows_in_span(space: &Matrix, sub: &Matrix) -> bool {
    let r = space.rank();
    space.vstack(sub).rank() == r
}

/// Do the two matrices have the same row space?
pub fn same_row_space(a: &Matrix, b: &Matrix) -> bool {
    let ra = a.rank();
    ra == b.rank() && a.vstack(b).rank() == ra
}

/// Coordinates of `v` (rows) in the basis given by the rows of `basis`.
pub fn coordinates(basis: &Matrix, v: &Matrix) -> Option<Matrix> {
    // basisᵀ · xᵀ = vᵀ
    basis.transpose().solve(&v.transpose()).map(|x| x.transpose())
}
