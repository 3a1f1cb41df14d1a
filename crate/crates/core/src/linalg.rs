//! Dense exact linear algebra over the rationals: matrices, reduced row
//! echelon form, fraction-free rank, kernels and canonical subspaces.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{denominator_lcm, fmt_q, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Index<(usize, usize)> for Matrix {
    type Output = Q;

    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Q>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            data.extend(r.iter().cloned());
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix column");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self[(i, j)].clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self[(i, j)].clone());
            }
        }
        m
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let idx = r * m.cols + j;
                if !m.data[idx].is_zero() {
                    m.data[idx] *= &inv;
                }
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let rv = m[(r, j)].clone();
                    if !rv.is_zero() {
                        let idx = i * m.cols + j;
                        m.data[idx] -= &f * rv;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    /// Exact rank by fraction-free (Bareiss) elimination on the row-scaled
    /// integer matrix; `i128` first, `BigInt` if an intermediate overflows.
    pub fn rank(&self) -> usize {
        let rows = self.integer_rows();
        let small: Option<Vec<Vec<i128>>> = rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_i128()).collect())
            .collect();
        if let Some(small) = small {
            if let Some(r) = bareiss_rank_i128(small) {
                return r;
            }
        }
        bareiss_rank_big(rows)
    }

    /// Rows scaled by the lcm of their denominators; rank and the vanishing
    /// pattern of every minor are unchanged.
    pub fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .filter_map(|i| {
                let row = self.row(i);
                if row.iter().all(Zero::is_zero) {
                    return None;
                }
                let l = denominator_lcm(row);
                Some(
                    row.iter()
                        .map(|x| (x * Q::from_integer(l.clone())).to_integer())
                        .collect(),
                )
            })
            .collect()
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self[(i, j)].clone());
            }
            aug.set(i, n + i, Q::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r[(i, n + j)].clone());
            }
        }
        Some(inv)
    }

    /// Determinant by cofactor-free Gaussian elimination.
    pub fn determinant(&self) -> Q {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Q::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &piv;
                for j in c..n {
                    let rv = m[(c, j)].clone();
                    let idx = i * n + j;
                    m.data[idx] -= &f * rv;
                }
            }
        }
        det
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(fmt_q).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn bareiss_rank_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(p, r);
        let piv = a[r][c];
        for i in r + 1..rows {
            let lead = a[i][c];
            for j in c + 1..cols {
                let x = piv.checked_mul(a[i][j])?;
                let y = lead.checked_mul(a[r][j])?;
                a[i][j] = x.checked_sub(y)? / prev;
            }
            a[i][c] = 0;
        }
        prev = piv;
        r += 1;
    }
    Some(r)
}

fn bareiss_rank_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let piv = a[r][c].clone();
        for i in r + 1..rows {
            let lead = a[i][c].clone();
            for j in c + 1..cols {
                let v = (&piv * &a[i][j] - &lead * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = piv;
        r += 1;
    }
    r
}

/// Coefficients `c_0 = 1, c_1, ..., c_n` of `det(t I - A) = sum c_k t^(n-k)`
/// for an integer matrix, by Faddeev-LeVerrier (all divisions are exact).
pub fn charpoly_integer(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    charpoly_prefix(a, a.len())
}

/// `c_0, ..., c_upto` only (`upto <= n`).
pub fn charpoly_prefix(a: &[Vec<BigInt>], upto: usize) -> Vec<BigInt> {
    let n = a.len();
    let mut coeffs = vec![BigInt::one()];
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=upto.min(n) {
        // M_k = A M_{k-1} + c_{k-1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !m[l][j].is_zero() {
                        next[i][j] += &a[i][l] * &m[l][j];
                    }
                }
            }
            next[i][i] += &coeffs[k - 1];
        }
        m = next;
        // c_k = -tr(A M_k) / k
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                if !a[i][l].is_zero() && !m[l][i].is_zero() {
                    tr += &a[i][l] * &m[l][i];
                }
            }
        }
        coeffs.push(-tr / BigInt::from(k));
    }
    coeffs
}

/// For each `m` in `0..=min(rows, cols)`, the sum of squares of all `m x m`
/// minors of the row-scaled integral form of `a` (Cauchy-Binet: the `m`-th
/// elementary symmetric function of the Gram matrix). Entry `m` is zero iff
/// every `m`-minor of `a` vanishes, i.e. iff the `m`-th exterior power of `a`
/// is the zero map.
pub fn exterior_power_norms(a: &Matrix) -> Vec<BigInt> {
    let gram = gram_matrix(a);
    let cp = charpoly_integer(&gram);
    let full = a.rows().min(a.cols());
    (0..=full).map(|m| signed_coefficient(&cp, m)).collect()
}

/// Entry `m` of [`exterior_power_norms`] alone; stops the characteristic
/// polynomial at degree `m`.
pub fn exterior_power_norm(a: &Matrix, m: usize) -> BigInt {
    let gram = gram_matrix(a);
    if m > gram.len() {
        // an m-minor needs m nonzero rows and m nonzero columns
        return BigInt::zero();
    }
    signed_coefficient(&charpoly_prefix(&gram, m), m)
}

fn signed_coefficient(cp: &[BigInt], m: usize) -> BigInt {
    match cp.get(m) {
        Some(c) if m % 2 == 1 => -c.clone(),
        Some(c) => c.clone(),
        None => BigInt::zero(),
    }
}

/// Gram matrix of the row-scaled integral form of `a`, with zero rows and
/// columns dropped, on whichever side is smaller.
fn gram_matrix(a: &Matrix) -> Vec<Vec<BigInt>> {
    let rows: Vec<Vec<BigInt>> = a.integer_rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    let nz_cols: Vec<usize> = (0..a.cols())
        .filter(|&j| rows.iter().any(|r| !r[j].is_zero()))
        .collect();
    let reduced: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| nz_cols.iter().map(|&j| r[j].clone()).collect())
        .collect();
    let p = reduced.len();
    let qn = nz_cols.len();
    // Gram matrix on the smaller side; both share the same nonzero spectrum.
    if p <= qn {
        (0..p)
            .map(|i| {
                (0..p)
                    .map(|j| {
                        reduced[i]
                            .iter()
                            .zip(&reduced[j])
                            .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
                    })
                    .collect()
            })
            .collect()
    } else {
        (0..qn)
            .map(|i| {
                (0..qn)
                    .map(|j| {
                        reduced
                            .iter()
                            .fold(BigInt::zero(), |acc, r| acc + &r[i] * &r[j])
                    })
                    .collect()
            })
            .collect()
    }
}

/// A linear subspace of `Q^ambient`, stored by its unique reduced row echelon
/// basis. Equality of two subspaces is equality of these bases.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
    layer: Option<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows == other.rows
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
            layer: None,
        }
    }

    /// Span of the coordinate vectors `e_k` for `k` in `indices`.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vecs: Vec<Vec<Q>> = indices
            .into_iter()
            .map(|k| {
                let mut v = vec![Q::zero(); ambient];
                v[k] = Q::one();
                v
            })
            .collect();
        Self::span(ambient, &vecs)
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, 0..ambient)
    }

    pub fn span(ambient: usize, vectors: &[Vec<Q>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let (r, pivots) = Matrix::from_rows(ambient, vectors).rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Self {
            ambient,
            rows,
            pivots,
            layer: None,
        }
    }

    pub fn with_layer(mut self, layer: usize) -> Self {
        self.layer = Some(layer);
        self
    }

    pub fn layer(&self) -> Option<usize> {
        self.layer
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after subtracting its projection along the echelon
    /// basis; zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o -= &f * r;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vecs = self.rows.clone();
        vecs.extend(other.rows.iter().cloned());
        Subspace::span(self.ambient, &vecs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // a in ker [A^T | -B^T] gives sum a_i u_i = sum b_j w_j
        let k = self.dim();
        let l = other.dim();
        let mut m = Matrix::zeros(self.ambient, k + l);
        for (j, u) in self.rows.iter().enumerate() {
            for (i, x) in u.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        for (j, w) in other.rows.iter().enumerate() {
            for (i, x) in w.iter().enumerate() {
                m.set(i, k + j, -x.clone());
            }
        }
        let vecs: Vec<Vec<Q>> = m
            .nullspace()
            .into_iter()
            .map(|sol| {
                let mut v = vec![Q::zero(); self.ambient];
                for (a, u) in sol[..k].iter().zip(&self.rows) {
                    for (o, x) in v.iter_mut().zip(u) {
                        *o += a * x;
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &vecs)
    }

    /// Columns that are not pivots; the coordinate vectors on these columns
    /// span a complement of the subspace.
    pub fn complement_columns(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Restricts every basis vector to the coordinates in `range`. Only
    /// meaningful when the subspace is supported on that range.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> Subspace {
        let vecs: Vec<Vec<Q>> = self.rows.iter().map(|r| r[range.clone()].to_vec()).collect();
        Subspace::span(range.len(), &vecs)
    }

    /// Embeds a subspace of `Q^k` at `offset` inside `Q^ambient`.
    pub fn embed(&self, ambient: usize, offset: usize) -> Subspace {
        let vecs: Vec<Vec<Q>> = self
            .rows
            .iter()
            .map(|r| {
                let mut v = vec![Q::zero(); ambient];
                v[offset..offset + r.len()].clone_from_slice(r);
                v
            })
            .collect();
        Subspace::span(ambient, &vecs)
    }

    /// Whether every basis vector is supported inside `range`.
    pub fn supported_in(&self, range: std::ops::Range<usize>) -> bool {
        self.rows.iter().all(|r| {
            r.iter()
                .enumerate()
                .all(|(i, x)| range.contains(&i) || x.is_zero())
        })
    }

    /// Stable text form of the echelon basis, one bracketed row per vector.
    pub fn canonical_text(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(fmt_q).collect::<Vec<_>>().join(" ")))
            .collect();
        format!("{}:{}", self.ambient, rows.join(""))
    }
}

/// Whether a vector has a negative leading (first nonzero) entry.
pub fn leading_negative(v: &[Q]) -> bool {
    v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        let v: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect();
        Matrix::from_rows(cols, &v)
    }

    #[test]
    fn rank_and_rref_agree() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.rref().1, vec![0, 1]);
        assert_eq!(Matrix::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn rank_big_fallback() {
        let big = 1i64 << 62;
        let a = m(&[&[big, big - 1, 3], &[big - 7, big, 5], &[1, 2, 3]]);
        let expected = a.rref().1.len();
        assert_eq!(a.rank(), expected);
    }

    #[test]
    fn nullspace_and_inverse() {
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(Zero::is_zero));
        let b = m(&[&[2, 1], &[1, 1]]);
        let inv = b.inverse().unwrap();
        assert_eq!(b.mul(&inv), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn determinant_values() {
        assert_eq!(m(&[&[2, 1], &[1, 1]]).determinant(), qi(1));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), qi(-1));
    }

    #[test]
    fn charpoly_of_small_matrix() {
        // [[2,1],[1,1]]: t^2 - 3t + 1
        let a = vec![
            vec![BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(1)],
        ];
        let cp = charpoly_integer(&a);
        assert_eq!(cp, vec![BigInt::from(1), BigInt::from(-3), BigInt::from(1)]);
    }

    #[test]
    fn exterior_norms_count_minors() {
        // rank one: every 2-minor vanishes, 1-minors do not
        let a = m(&[&[1, 2], &[2, 4], &[0, 0]]);
        let e = exterior_power_norms(&a);
        assert_eq!(e[1], BigInt::from(1 + 4 + 4 + 16));
        assert!(e[2].is_zero());
    }

    #[test]
    fn subspace_canonical_equality() {
        let u = Subspace::span(3, &[vec![qi(1), qi(1), qi(0)], vec![qi(0), qi(1), qi(1)]]);
        let w = Subspace::span(3, &[vec![qi(1), qi(0), qi(-1)], vec![qi(2), qi(2), qi(0)]]);
        assert_eq!(u, w);
        assert!(u.contains(&[qi(1), qi(2), qi(1)]));
        assert!(!u.contains(&[qi(1), qi(0), qi(0)]));
        assert_eq!(u.coordinates(&[qi(1), qi(2), qi(1)]), Some(vec![qi(1), qi(2)]));
    }

    #[test]
    fn sum_and_intersection() {
        let u = Subspace::coordinate(3, [0, 1]);
        let w = Subspace::coordinate(3, [1, 2]);
        assert_eq!(u.intersection(&w), Subspace::coordinate(3, [1]));
        assert_eq!(u.sum(&w), Subspace::full(3));
        assert_eq!(u.complement_columns(), vec![2]);
        let v = Subspace::span(3, &[vec![q(1, 2), qi(0), qi(0)]]);
        assert_eq!(v, Subspace::coordinate(3, [0]));
    }
}
