//! Finitely generated abelian groups and homomorphisms between them.
//!
//! Groups are presented by lists of cyclic orders (`0` for a copy of `Z`).
//! Everything reduces to the Smith normal form of an integer matrix, computed
//! over arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FgabError {
    #[error("matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("ragged matrix rows")]
    Ragged,
    #[error("homomorphism is not well defined at entry ({row}, {col})")]
    IllDefined { row: usize, col: usize },
    #[error("cyclic orders must be non-negative")]
    NegativeOrder,
}

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal(rows: usize, cols: usize, entries: &[BigInt]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, e) in entries.iter().enumerate().take(rows.min(cols)) {
            m.data[i * cols + i] = e.clone();
        }
        m
    }

    /// From row-major data. `cols` is needed to describe `r x 0` matrices.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>], cols: usize) -> Result<Self, FgabError> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(FgabError::Ragged);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(l, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, x.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &x[j]).sum())
            .collect()
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "hstack shape");
        let cols = self.cols + other.cols;
        let mut out = IntMatrix::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * cols + j] = self.get(i, j).clone();
            }
            for j in 0..other.cols {
                out.data[i * cols + self.cols + j] = other.get(i, j).clone();
            }
        }
        out
    }

    /// Columns `range` of `self`, keeping only the first `rows` rows.
    fn submatrix(&self, rows: usize, cols: std::ops::Range<usize>) -> IntMatrix {
        let width = cols.len();
        let mut out = IntMatrix::zeros(rows, width);
        for i in 0..rows {
            for (jj, j) in cols.clone().enumerate() {
                out.data[i * width + jj] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += factor * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = factor * self.get(src, j);
            self.data[dst * self.cols + j] += v;
        }
    }

    /// `col[dst] += factor * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = factor * self.get(i, src);
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }
}

impl Serialize for IntMatrix {
    /// Row-major nested arrays; entries beyond `i64` are written as strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Row<'a>(&'a [BigInt]);
        impl Serialize for Row<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for e in self.0 {
                    match e.to_i64() {
                        Some(v) => seq.serialize_element(&v)?,
                        None => seq.serialize_element(&e.to_string())?,
                    }
                }
                seq.end()
            }
        }
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            seq.serialize_element(&Row(&self.data[r * self.cols..(r + 1) * self.cols]))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows: Vec<Vec<i64>> = Vec::deserialize(deserializer)?;
        let cols = rows.first().map_or(0, Vec::len);
        IntMatrix::from_rows(&rows, cols).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.to_rows() {
            let cells: Vec<String> = r.iter().map(BigInt::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `u * a * v = d`, with the inverses of `u` and `v` alongside.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    /// The diagonal of `d`, nonzero entries first.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

/// Smith normal form: unimodular `u`, `v` with `u a v = diag(d_1, d_2, ..)`,
/// `d_1 | d_2 | ..`, all `d_i >= 0` and zeros last.
pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let (m, n) = (a.rows, a.cols);
    let mut s = Snf {
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        d: a.clone(),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs_entry(&s.d, (t..m).flat_map(|i| (t..n).map(move |j| (i, j)))) else {
            break;
        };
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);
        loop {
            let pivot = s.d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..m {
                let q = s.d.get(i, t) / &pivot;
                if !q.is_zero() {
                    s.add_row(i, t, &-q);
                }
                clean &= s.d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                let q = s.d.get(t, j) / &pivot;
                if !q.is_zero() {
                    s.add_col(j, t, &-q);
                }
                clean &= s.d.get(t, j).is_zero();
            }
            if !clean {
                let cross = (t..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
                let (pi, pj) = min_abs_entry(&s.d, cross).expect("pivot is nonzero");
                s.swap_rows(t, pi);
                s.swap_cols(t, pj);
                continue;
            }
            let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| !s.d.get(i, j).is_multiple_of(&pivot)));
            match bad_row {
                Some(i) => s.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if s.d.get(t, t).is_negative() {
            s.negate_row(t);
        }
    }
    s
}

fn min_abs_entry(d: &IntMatrix, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    cells
        .filter(|&(i, j)| !d.get(i, j).is_zero())
        .min_by(|&(a, b), &(c, e)| d.get(a, b).abs().cmp(&d.get(c, e).abs()))
}

impl Snf {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// `row[dst] += f row[src]`; the inverse absorbs `col[src] -= f col[dst]`.
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.d.add_row(dst, src, f);
        self.u.add_row(dst, src, f);
        self.u_inv.add_col(src, dst, &-f);
    }

    /// `col[dst] += f col[src]`; the inverse absorbs `row[src] -= f row[dst]`.
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.d.add_col(dst, src, f);
        self.v.add_col(dst, src, f);
        self.v_inv.add_row(src, dst, &-f);
    }

    fn negate_row(&mut self, r: usize) {
        self.d.negate_row(r);
        self.u.negate_row(r);
        for i in 0..self.u_inv.rows {
            let v = -self.u_inv.get(i, r);
            self.u_inv.set(i, r, v);
        }
    }
}

/// A finitely generated abelian group in invariant-factor form: torsion
/// factors `d_1 | d_2 | ..` (each `>= 2`) followed by `0`s for copies of `Z`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FGAbelianGroup {
    factors: Vec<BigInt>,
}

impl FGAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FGAbelianGroup {
            factors: vec![BigInt::zero(); rank],
        }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_cyclic_orders(&[BigInt::from(order)]).expect("non-negative")
    }

    /// `(Z/p)^r`.
    pub fn elementary(p: u64, rank: usize) -> Self {
        Self::from_cyclic_orders(&vec![BigInt::from(p); rank]).expect("non-negative")
    }

    /// Normalize an arbitrary direct sum of cyclic groups.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Result<Self, FgabError> {
        if orders.iter().any(Signed::is_negative) {
            return Err(FgabError::NegativeOrder);
        }
        let diag = IntMatrix::diagonal(orders.len(), orders.len(), orders);
        Ok(Self::from_snf_diagonal(&smith_normal_form(&diag).diagonal(), orders.len()))
    }

    /// Group `Z^dim / <d_1 e_1, .., d_r e_r>` given SNF diagonal entries.
    fn from_snf_diagonal(diag: &[BigInt], dim: usize) -> Self {
        let mut torsion: Vec<BigInt> = diag.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect();
        torsion.sort();
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        let free = dim - nonzero;
        torsion.extend(std::iter::repeat_n(BigInt::zero(), free));
        FGAbelianGroup { factors: torsion }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_zero()).cloned().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank() > 0 {
            None
        } else {
            Some(self.factors.iter().product())
        }
    }

    /// Number of elements `x` with `n x = 0`; `None` when infinite.
    pub fn count_killed_by(&self, n: &BigInt) -> Option<BigInt> {
        if self.free_rank() > 0 {
            return if n.is_zero() { None } else { Some(self.factors.iter().filter(|d| !d.is_zero()).map(|d| d.gcd(n)).product()) };
        }
        Some(self.factors.iter().map(|d| if n.is_zero() { d.clone() } else { d.gcd(n) }).product())
    }
}

pub fn isomorphic(g: &FGAbelianGroup, h: &FGAbelianGroup) -> bool {
    g == h
}

/// `Z^r ⊕ Z/d_1 ⊕ ..`; the trivial group prints as `0`.
impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank() {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let torsion = self.torsion();
        let mut i = 0;
        while i < torsion.len() {
            let run = torsion[i..].iter().take_while(|d| **d == torsion[i]).count();
            parts.push(if run == 1 {
                format!("Z/{}", torsion[i])
            } else {
                format!("(Z/{})^{run}", torsion[i])
            });
            i += run;
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

impl Serialize for FGAbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.factors.len()))?;
        for d in &self.factors {
            match d.to_u64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&d.to_string())?,
            }
        }
        seq.end()
    }
}

/// A homomorphism between direct sums of cyclic groups. Column `j` of the
/// matrix is the image of the `j`-th source generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    source: Vec<BigInt>,
    target: Vec<BigInt>,
    matrix: IntMatrix,
}

/// A subgroup of the source together with explicit generators.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub group: FGAbelianGroup,
    /// `(generator in source coordinates, its order)`, order `0` meaning infinite.
    pub generators: Vec<(Vec<BigInt>, BigInt)>,
}

impl Homomorphism {
    pub fn new(source: Vec<BigInt>, target: Vec<BigInt>, matrix: IntMatrix) -> Result<Self, FgabError> {
        if source.iter().chain(&target).any(Signed::is_negative) {
            return Err(FgabError::NegativeOrder);
        }
        if matrix.rows != target.len() || matrix.cols != source.len() {
            return Err(FgabError::Shape {
                rows: matrix.rows,
                cols: matrix.cols,
                expected_rows: target.len(),
                expected_cols: source.len(),
            });
        }
        for (j, a) in source.iter().enumerate() {
            for (i, b) in target.iter().enumerate() {
                let image = matrix.get(i, j) * a;
                let ok = if b.is_zero() { image.is_zero() } else { image.is_multiple_of(b) };
                if !ok {
                    return Err(FgabError::IllDefined { row: i, col: j });
                }
            }
        }
        Ok(Homomorphism { source, target, matrix })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(source: &[i64], target: &[i64], rows: &[Vec<i64>]) -> Result<Self, FgabError> {
        let matrix = IntMatrix::from_rows(rows, source.len())?;
        Self::new(
            source.iter().map(|&x| BigInt::from(x)).collect(),
            target.iter().map(|&x| BigInt::from(x)).collect(),
            matrix,
        )
    }

    pub fn source_orders(&self) -> &[BigInt] {
        &self.source
    }

    pub fn target_orders(&self) -> &[BigInt] {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn source_group(&self) -> FGAbelianGroup {
        FGAbelianGroup::from_cyclic_orders(&self.source).expect("checked")
    }

    pub fn target_group(&self) -> FGAbelianGroup {
        FGAbelianGroup::from_cyclic_orders(&self.target).expect("checked")
    }

    /// Image of `x`, reduced into `[0, b_i)` on torsion coordinates.
    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        reduce(&self.matrix.mul_vec(x), &self.target)
    }

    /// `[M | diag(b)]`: its integer kernel projects onto `{x : M x = 0 in target}`.
    fn relation_block(&self) -> IntMatrix {
        let m = self.target.len();
        self.matrix.hstack(&IntMatrix::diagonal(m, m, &self.target))
    }

    /// Basis `{d_i * u_inv[:, i]}` of the lattice `{x in Z^n : M x = 0 in target}`.
    fn preimage_of_zero(&self) -> (Snf, usize) {
        let n = self.source.len();
        let block = self.relation_block();
        let snf = smith_normal_form(&block);
        let rank = snf.rank();
        let null_cols = snf.v.submatrix(n, rank..block.cols);
        let basis = smith_normal_form(&null_cols);
        let r = basis.rank();
        (basis, r)
    }

    pub fn kernel(&self) -> Kernel {
        let n = self.source.len();
        let (lattice, r) = self.preimage_of_zero();
        let d = lattice.diagonal();
        // Source relations diag(a) in lattice coordinates: D' C = U A.
        let ua = lattice.u.mul(&IntMatrix::diagonal(n, n, &self.source));
        let mut c = IntMatrix::zeros(r, n);
        for i in 0..n {
            for j in 0..n {
                let e = ua.get(i, j);
                if i < r {
                    let (q, rem) = e.div_rem(&d[i]);
                    assert!(rem.is_zero(), "source relations lie in the kernel lattice");
                    c.set(i, j, q);
                } else {
                    assert!(e.is_zero(), "source relations lie in the kernel lattice");
                }
            }
        }
        let csnf = smith_normal_form(&c);
        let e = csnf.diagonal();
        let mut generators = Vec::new();
        for col in 0..r {
            let order = e.get(col).cloned().unwrap_or_else(BigInt::zero);
            if order.is_one() {
                continue;
            }
            // lattice basis vector l = d_i u_inv[:, i]; generator = sum_i l_i * w_i
            let w = csnf.u_inv.column(col);
            let mut x = vec![BigInt::zero(); n];
            for (i, wi) in w.iter().enumerate() {
                if wi.is_zero() {
                    continue;
                }
                for (row, xr) in x.iter_mut().enumerate() {
                    *xr += wi * &d[i] * lattice.u_inv.get(row, i);
                }
            }
            generators.push((reduce(&x, &self.source), order));
        }
        Kernel {
            group: FGAbelianGroup::from_snf_diagonal(&e, r),
            generators,
        }
    }

    pub fn image(&self) -> FGAbelianGroup {
        let (lattice, _) = self.preimage_of_zero();
        FGAbelianGroup::from_snf_diagonal(&lattice.diagonal(), self.source.len())
    }

    pub fn cokernel(&self) -> FGAbelianGroup {
        let snf = smith_normal_form(&self.relation_block());
        FGAbelianGroup::from_snf_diagonal(&snf.diagonal(), self.target.len())
    }

    /// The restriction to the source generators listed in `cols`.
    pub fn restrict_columns(&self, cols: &[usize]) -> Homomorphism {
        let mut matrix = IntMatrix::zeros(self.target.len(), cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for i in 0..self.target.len() {
                matrix.set(i, jj, self.matrix.get(i, j).clone());
            }
        }
        Homomorphism {
            source: cols.iter().map(|&j| self.source[j].clone()).collect(),
            target: self.target.clone(),
            matrix,
        }
    }
}

fn reduce(x: &[BigInt], orders: &[BigInt]) -> Vec<BigInt> {
    x.iter()
        .zip(orders)
        .map(|(v, o)| if o.is_zero() { v.clone() } else { v.mod_floor(o) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn mat(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
        IntMatrix::from_rows(rows, cols).unwrap()
    }

    fn check_snf(a: &IntMatrix) -> Snf {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d);
        assert!(s.u.mul(&s.u_inv) == IntMatrix::identity(a.rows()));
        assert!(s.v.mul(&s.v_inv) == IntMatrix::identity(a.cols()));
        s
    }

    #[test]
    fn snf_examples() {
        let id = IntMatrix::identity(3);
        let s = check_snf(&id);
        assert_eq!(s.d, id);
        let z = IntMatrix::zeros(2, 3);
        assert_eq!(check_snf(&z).d, z);
        let s = check_snf(&mat(&[vec![2, 4], vec![6, 8]], 2));
        // d1 = gcd of entries, d1 * d2 = |det| = 8
        assert_eq!(s.diagonal(), big(&[2, 4]));
        let s = check_snf(&mat(&[vec![2, 0], vec![0, 3]], 2));
        assert_eq!(s.diagonal(), big(&[1, 6]));
        check_snf(&IntMatrix::zeros(0, 3));
        check_snf(&IntMatrix::zeros(3, 0));
    }

    #[test]
    fn determinant_small() {
        assert_eq!(mat(&[vec![2, 4], vec![6, 8]], 2).determinant(), BigInt::from(-8));
        assert_eq!(mat(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]], 3).determinant(), BigInt::from(-5));
    }

    #[test]
    fn group_normalization_and_display() {
        let g = FGAbelianGroup::from_cyclic_orders(&big(&[2, 3])).unwrap();
        assert!(isomorphic(&g, &FGAbelianGroup::cyclic(6)));
        assert!(!isomorphic(&FGAbelianGroup::free(1), &FGAbelianGroup::cyclic(2)));
        let g = FGAbelianGroup::from_cyclic_orders(&big(&[0, 4, 1, 2, 0])).unwrap();
        assert_eq!(g.invariant_factors(), big(&[2, 4, 0, 0]).as_slice());
        assert_eq!(g.to_string(), "Z^2 ⊕ Z/2 ⊕ Z/4");
        assert_eq!(FGAbelianGroup::elementary(2, 3).to_string(), "(Z/2)^3");
        assert_eq!(FGAbelianGroup::trivial().to_string(), "0");
        assert_eq!(FGAbelianGroup::cyclic(1), FGAbelianGroup::trivial());
        assert_eq!(FGAbelianGroup::free(1).to_string(), "Z");
    }

    #[test]
    fn parity_map_to_z2() {
        // x -> sum of even-index coordinates mod 2, Z^4 -> Z/2
        let phi = Homomorphism::from_i64(&[0, 0, 0, 0], &[2], &[vec![1, 0, 1, 0]]).unwrap();
        assert_eq!(phi.kernel().group, FGAbelianGroup::free(4));
        assert!(phi.cokernel().is_trivial());
        assert_eq!(phi.image(), FGAbelianGroup::cyclic(2));
    }

    #[test]
    fn maps_on_z() {
        let zero = Homomorphism::from_i64(&[0], &[0], &[vec![0]]).unwrap();
        assert_eq!(zero.kernel().group, FGAbelianGroup::free(1));
        assert!(zero.image().is_trivial());
        let double = Homomorphism::from_i64(&[0], &[0], &[vec![2]]).unwrap();
        assert!(double.kernel().group.is_trivial());
        assert_eq!(double.cokernel(), FGAbelianGroup::cyclic(2));
        assert_eq!(double.image(), FGAbelianGroup::free(1));
    }

    #[test]
    fn torsion_kernel_generators() {
        // Z/4 -> Z/2, 1 -> 1: kernel is generated by 2 with order 2
        let phi = Homomorphism::from_i64(&[4], &[2], &[vec![1]]).unwrap();
        let k = phi.kernel();
        assert_eq!(k.group, FGAbelianGroup::cyclic(2));
        assert_eq!(k.generators, vec![(big(&[2]), BigInt::from(2))]);
        // Z/6 -> Z/6 multiplication by 2
        let phi = Homomorphism::from_i64(&[6], &[6], &[vec![2]]).unwrap();
        assert_eq!(phi.kernel().group, FGAbelianGroup::cyclic(2));
        assert_eq!(phi.image(), FGAbelianGroup::cyclic(3));
        assert_eq!(phi.cokernel(), FGAbelianGroup::cyclic(2));
    }

    #[test]
    fn ill_defined_maps_are_rejected() {
        assert_eq!(
            Homomorphism::from_i64(&[2], &[0], &[vec![1]]),
            Err(FgabError::IllDefined { row: 0, col: 0 })
        );
        assert_eq!(
            Homomorphism::from_i64(&[3], &[2], &[vec![1]]),
            Err(FgabError::IllDefined { row: 0, col: 0 })
        );
        assert!(matches!(Homomorphism::from_i64(&[0], &[0, 0], &[vec![1]]), Err(FgabError::Shape { .. })));
    }

    #[test]
    fn maps_with_empty_target() {
        let phi = Homomorphism::new(big(&[0, 2]), vec![], IntMatrix::zeros(0, 2)).unwrap();
        assert_eq!(phi.kernel().group, FGAbelianGroup::from_cyclic_orders(&big(&[0, 2])).unwrap());
        assert!(phi.image().is_trivial());
        assert!(phi.cokernel().is_trivial());
    }

    #[test]
    fn matrix_json() {
        let m = mat(&[vec![1, -2], vec![0, 3]], 2);
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, "[[1,-2],[0,3]]");
        assert_eq!(serde_json::from_str::<IntMatrix>(&text).unwrap(), m);
    }
}
