//! Dense exact matrices over the scalar rings, with fraction-free
//! elimination, field solves and kernels, and a canonical Hermite normal
//! form over the Euclidean rings Z[ω] and Z[i].
//!
//! Everything here is sized for the toolkit's workloads (≤ 28×28); matrices
//! are immutable values and all operations are pure.

use crate::error::{Error, Result};
use crate::ring::{ComplexRing, FieldElem, Frac, IntegralRing, RingElem};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<R: RingElem> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: RingElem> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::InvalidInput("empty matrix".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let nrows = rows.len();
        Ok(Self {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = R::one();
        }
        m
    }

    pub fn diagonal(entries: &[R]) -> Self {
        let mut m = Self::zero(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            *m.at_mut(i, i) = e.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut R {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<S: RingElem>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| x.add(y))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn scale(&self, k: &R) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul(k)).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.mul(other.at(k, j));
                    let cur = out.at(i, j).add(&t);
                    *out.at_mut(i, j) = cur;
                }
            }
        }
        Ok(out)
    }

    /// M · v for a column vector v.
    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * vec{}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = R::zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.at(i, j).mul(&v[j]));
                }
                acc
            })
            .collect())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).conj();
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.matmul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.matmul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<R> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev = R::one();
        for k in 0..n {
            if m.at(k, k).is_zero() {
                let swap = (k + 1..n).find(|&i| !m.at(i, k).is_zero());
                match swap {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(R::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m
                        .at(i, j)
                        .mul(m.at(k, k))
                        .sub(&m.at(i, k).mul(m.at(k, j)));
                    *m.at_mut(i, j) = num
                        .exact_div(&prev)
                        .expect("Bareiss division is exact");
                }
                *m.at_mut(i, k) = R::zero();
            }
            prev = m.at(k, k).clone();
        }
        let det = m.at(n - 1, n - 1).clone();
        Ok(if sign_flip { det.neg() } else { det })
    }

    /// Rank over the fraction field, by fraction-free echelon reduction.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut r = 0;
        let mut prev = R::one();
        for c in 0..cols {
            if r == rows {
                break;
            }
            let pivot = (r..rows).find(|&i| !m.at(i, c).is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(r, p);
            for i in r + 1..rows {
                for j in c + 1..cols {
                    let num = m
                        .at(i, j)
                        .mul(m.at(r, c))
                        .sub(&m.at(i, c).mul(m.at(r, j)));
                    *m.at_mut(i, j) = num
                        .exact_div(&prev)
                        .expect("Bareiss division is exact");
                }
                *m.at_mut(i, c) = R::zero();
            }
            prev = m.at(r, c).clone();
            r += 1;
        }
        r
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Canonical byte encoding of the whole matrix (shape + entries).
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.data.len() * 4 + 8);
        out.extend_from_slice(&(self.rows as u32).to_le_bytes());
        out.extend_from_slice(&(self.cols as u32).to_le_bytes());
        for e in &self.data {
            e.write_canonical_bytes(&mut out);
        }
        out
    }
}

impl<R: IntegralRing> Matrix<R> {
    pub fn to_field(&self) -> Matrix<Frac<R>> {
        self.map(|x| Frac::from_ring(x.clone()))
    }
}

impl<R: IntegralRing> Matrix<Frac<R>> {
    /// `Some` when every entry is integral.
    pub fn to_ring(&self) -> Option<Matrix<R>> {
        let mut data = Vec::with_capacity(self.data.len());
        for e in &self.data {
            data.push(e.to_ring()?);
        }
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

impl<R: FieldElem> Matrix<R> {
    /// Reduced row echelon form; returns (rref, pivot columns).
    fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, c).inv().expect("pivot nonzero");
            for j in c..cols {
                *m.at_mut(r, j) = m.at(r, j).mul(&inv);
            }
            for i in 0..rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in c..cols {
                        let t = m.at(r, j).mul(&f);
                        *m.at_mut(i, j) = m.at(i, j).sub(&t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Solves A·x = b for square invertible A.
    pub fn solve(&self, b: &[R]) -> Result<Vec<R>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "matrix {}x{}, rhs {}",
                self.rows,
                self.cols,
                b.len()
            )));
        }
        // augment and reduce
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != self.cols || pivots.iter().any(|&c| c >= self.cols) {
            return Err(Error::SingularMatrix);
        }
        Ok((0..self.rows).map(|i| r.at(i, self.cols).clone()).collect())
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = R::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
            return Err(Error::SingularMatrix);
        }
        let mut out = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *out.at_mut(i, j) = r.at(i, n + j).clone();
            }
        }
        Ok(out)
    }

    /// Basis of the right kernel {v : A·v = 0}. Dimension = cols − rank.
    pub fn kernel(&self) -> Vec<Vec<R>> {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::BTreeMap<usize, usize> = pivots
            .iter()
            .enumerate()
            .map(|(row, &col)| (col, row))
            .collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains_key(&free) {
                continue;
            }
            let mut v = vec![R::zero(); self.cols];
            v[free] = R::one();
            for (&pc, &pr) in &pivot_set {
                v[pc] = r.at(pr, free).neg();
            }
            basis.push(v);
        }
        basis
    }
}

/// Canonical Hermite normal form of the row span of `vectors` over a
/// Euclidean ring. Returns the nonzero echelon rows: same module span,
/// canonical pivot associates, entries above each pivot reduced to the
/// canonical residue. Two inputs span the same module iff their normal
/// forms are equal.
pub fn hnf_span<R: ComplexRing>(vectors: &[Vec<R>]) -> Result<Vec<Vec<R>>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let cols = vectors[0].len();
    if vectors.iter().any(|v| v.len() != cols) {
        return Err(Error::DimensionMismatch("ragged vectors".into()));
    }
    let mut rows: Vec<Vec<R>> = vectors.to_vec();
    let nrows = rows.len();
    let mut r = 0;
    for c in 0..cols {
        if r >= nrows {
            break;
        }
        // gcd phase: reduce column c below row r to a single nonzero entry
        loop {
            let mut nz: Vec<usize> = (r..nrows).filter(|&i| !rows[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            if nz.len() == 1 {
                rows.swap(r, nz[0]);
                break;
            }
            // smallest-norm entry becomes the divisor
            nz.sort_by_key(|&i| rows[i][c].norm_to_int());
            let i0 = nz[0];
            for &i in &nz[1..] {
                let (q, _) = rows[i][c].div_rem(&rows[i0][c])?;
                if q.is_zero() {
                    continue;
                }
                for j in 0..cols {
                    let t = q.mul(&rows[i0][j]);
                    rows[i][j] = rows[i][j].sub(&t);
                }
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        // unit-normalize the pivot
        let (canon, unit) = rows[r][c].canonical_associate();
        if unit != R::one() {
            for j in 0..cols {
                rows[r][j] = rows[r][j].mul(&unit);
            }
        }
        debug_assert_eq!(rows[r][c], canon);
        // reduce the entries above the pivot to canonical residues
        let pivot = rows[r][c].clone();
        for i in 0..r {
            let rem = rows[i][c].rem_canonical(&pivot)?;
            let q = rows[i][c]
                .sub(&rem)
                .exact_div(&pivot)
                .expect("residue difference divisible by pivot");
            if q.is_zero() {
                continue;
            }
            for j in 0..cols {
                let t = q.mul(&rows[r][j]);
                rows[i][j] = rows[i][j].sub(&t);
            }
        }
        r += 1;
    }
    rows.truncate(r);
    Ok(rows)
}

/// True when `v` is an exact ring-linear combination of the HNF `basis`.
pub fn in_span<R: ComplexRing>(basis: &[Vec<R>], v: &[R]) -> bool {
    // reduce v against the echelon basis
    let mut v = v.to_vec();
    let cols = v.len();
    for row in basis {
        let Some(c) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if v[c].is_zero() {
            continue;
        }
        let Some(q) = v[c].exact_div(&row[c]) else {
            return false;
        };
        for j in 0..cols {
            let t = q.mul(&row[j]);
            v[j] = v[j].sub(&t);
        }
    }
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{EisensteinInt, Frac, ZInt};

    fn ei(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }
    fn theta() -> EisensteinInt {
        EisensteinInt::ramified_prime()
    }

    #[test]
    fn matmul_identity_and_omega_cube() {
        let omega = EisensteinInt::ring_generator();
        let d = Matrix::diagonal(&[omega.clone(), ei(1, 0)]);
        let i2 = Matrix::<EisensteinInt>::identity(2);
        assert_eq!(i2.matmul(&d).unwrap(), d);
        let cube = d.matmul(&d).unwrap().matmul(&d).unwrap();
        assert_eq!(cube, i2);
    }

    #[test]
    fn hyperbolic_square_is_three() {
        // [[0, θ], [−θ, 0]]² = diag(3, 3)
        let m = Matrix::from_rows(vec![
            vec![ei(0, 0), theta()],
            vec![theta().neg(), ei(0, 0)],
        ])
        .unwrap();
        let sq = m.matmul(&m).unwrap();
        assert_eq!(sq, Matrix::diagonal(&[ei(3, 0), ei(3, 0)]));
    }

    #[test]
    fn adjoint_properties() {
        let omega = EisensteinInt::ring_generator();
        let d = Matrix::diagonal(&[omega.clone()]);
        assert_eq!(d.adjoint(), Matrix::diagonal(&[omega.conj()]));
        // [[0, θ̄], [θ, 0]] is self-adjoint
        let h = Matrix::from_rows(vec![
            vec![ei(0, 0), theta().conj()],
            vec![theta(), ei(0, 0)],
        ])
        .unwrap();
        assert_eq!(h.adjoint(), h);
        let a = Matrix::from_rows(vec![vec![ei(1, 2), ei(3, 0)], vec![ei(0, 1), ei(-1, 1)]])
            .unwrap();
        let b = Matrix::from_rows(vec![vec![ei(2, -1), ei(0, 0)], vec![ei(1, 1), ei(4, 2)]])
            .unwrap();
        assert_eq!(a.adjoint().adjoint(), a);
        assert_eq!(
            a.matmul(&b).unwrap().adjoint(),
            b.adjoint().matmul(&a.adjoint()).unwrap()
        );
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            Matrix::<EisensteinInt>::identity(5).determinant().unwrap(),
            ei(1, 0)
        );
        // det [[0, θ], [θ̄, 0]] = −θθ̄ = −3
        let h = Matrix::from_rows(vec![
            vec![ei(0, 0), theta()],
            vec![theta().conj(), ei(0, 0)],
        ])
        .unwrap();
        assert_eq!(h.determinant().unwrap(), ei(-3, 0));
        // singular
        let s = Matrix::from_rows(vec![vec![ei(1, 0), ei(2, 0)], vec![ei(2, 0), ei(4, 0)]])
            .unwrap();
        assert_eq!(s.determinant().unwrap(), ei(0, 0));
    }

    #[test]
    fn determinant_multiplicative() {
        let a = Matrix::from_rows(vec![
            vec![ei(1, 2), ei(3, -1), ei(0, 0)],
            vec![ei(0, 1), ei(-1, 1), ei(2, 0)],
            vec![ei(1, 0), ei(0, 0), ei(1, 1)],
        ])
        .unwrap();
        let b = Matrix::from_rows(vec![
            vec![ei(2, -1), ei(0, 0), ei(1, 0)],
            vec![ei(1, 1), ei(4, 2), ei(0, -1)],
            vec![ei(0, 0), ei(1, 0), ei(3, 1)],
        ])
        .unwrap();
        let lhs = a.matmul(&b).unwrap().determinant().unwrap();
        let rhs = a.determinant().unwrap().mul(&b.determinant().unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn solve_round_trip() {
        let a = Matrix::from_rows(vec![
            vec![ei(1, 2), ei(3, -1), ei(0, 0)],
            vec![ei(0, 1), ei(-1, 1), ei(2, 0)],
            vec![ei(1, 0), ei(0, 0), ei(1, 1)],
        ])
        .unwrap()
        .to_field();
        let b: Vec<_> = [ei(1, 0), ei(0, 1), ei(-2, 3)]
            .into_iter()
            .map(Frac::from_ring)
            .collect();
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), b);
        // diag(θ) x = 3 has solution −θ
        let d = Matrix::diagonal(&[theta()]).to_field();
        let x = d.solve(&[Frac::from_ring(ei(3, 0))]).unwrap();
        assert_eq!(x[0].to_ring().unwrap(), theta().neg());
    }

    #[test]
    fn singular_solve_reported() {
        let s = Matrix::from_rows(vec![vec![ei(1, 0), ei(2, 0)], vec![ei(2, 0), ei(4, 0)]])
            .unwrap()
            .to_field();
        let b = vec![Frac::from_ring(ei(1, 0)), Frac::from_ring(ei(0, 0))];
        assert!(matches!(s.solve(&b), Err(Error::SingularMatrix)));
    }

    #[test]
    fn kernel_dimensions() {
        let id = Matrix::<Frac<ZInt>>::identity(4);
        assert!(id.kernel().is_empty());
        let z = Matrix::<ZInt>::zero(3, 5).to_field();
        assert_eq!(z.kernel().len(), 5);
        for v in z.kernel() {
            assert!(z.mul_vec(&v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn hnf_simple_spans() {
        // span{e1, e2} → identity-shaped basis
        let e1 = vec![ei(1, 0), ei(0, 0)];
        let e2 = vec![ei(0, 0), ei(1, 0)];
        let h = hnf_span(&[e1.clone(), e2.clone()]).unwrap();
        assert_eq!(h, vec![e1, e2]);
        // span{θe1, 3e1} = span{θe1}
        let te1 = vec![theta(), ei(0, 0)];
        let th1 = vec![ei(3, 0), ei(0, 0)];
        let h = hnf_span(&[te1.clone(), th1]).unwrap();
        let h2 = hnf_span(&[te1]).unwrap();
        assert_eq!(h, h2);
        assert_eq!(h.len(), 1);
        assert_eq!(h[0][0].norm_to_int(), 3.into());
    }

    #[test]
    fn hnf_idempotent_and_order_free() {
        let vs = vec![
            vec![ei(2, 1), ei(0, 3), ei(1, 1)],
            vec![ei(0, 0), theta(), ei(4, -1)],
            vec![ei(1, -1), ei(2, 2), ei(0, 0)],
            vec![ei(3, 0), ei(1, 0), ei(1, 0)],
        ];
        let h = hnf_span(&vs).unwrap();
        assert_eq!(hnf_span(&h).unwrap(), h);
        let mut rev = vs.clone();
        rev.reverse();
        assert_eq!(hnf_span(&rev).unwrap(), h);
        // every input vector lies in the span of the normal form
        for v in &vs {
            assert!(in_span(&h, v));
        }
    }

    #[test]
    fn rank_and_pow() {
        let m = Matrix::from_rows(vec![
            vec![ei(1, 0), ei(2, 0), ei(3, 0)],
            vec![ei(2, 0), ei(4, 0), ei(6, 0)],
            vec![ei(0, 1), ei(0, 0), ei(1, 0)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
        let omega = EisensteinInt::ring_generator();
        let d = Matrix::diagonal(&[omega]);
        assert_eq!(d.pow(3).unwrap(), Matrix::identity(1));
    }
}
