//! Hermitian lattices: an ambient space with a Hermitian Gram matrix plus a
//! canonical (Hermite normal form) basis of the lattice inside it.
//!
//! The Hermitian form is linear in the first slot and conjugate-linear in
//! the second, stored in the column convention ⟨x,y⟩ = y†·G·x, so that an
//! isometry M satisfies M†·G·M = G. The hyperbolic cell is oriented so that
//! ⟨x,y⟩ contains θ·x_{n−1}·conj(y_n) (resp. 1+i), which makes every vector
//! of the seed root table a root: norm −3 (resp. −2).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{hnf_span, in_span, Matrix};
use crate::ring::{ComplexRing, EisensteinInt, GaussianInt, RingElem, ZInt};

/// ⟨x,y⟩ with respect to `gram`; linear in x, conjugate-linear in y.
pub fn inner<R: ComplexRing>(gram: &Matrix<R>, x: &[R], y: &[R]) -> Result<R> {
    let n = gram.nrows();
    if x.len() != n || y.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "inner product: gram {}x{}, vectors {} and {}",
            n,
            gram.ncols(),
            x.len(),
            y.len()
        )));
    }
    let mut acc = R::zero();
    for k in 0..n {
        if y[k].is_zero() {
            continue;
        }
        let yk = y[k].conj();
        for j in 0..n {
            if gram.at(k, j).is_zero() || x[j].is_zero() {
                continue;
            }
            acc = acc.add(&yk.mul(gram.at(k, j)).mul(&x[j]));
        }
    }
    Ok(acc)
}

/// ⟨x,x⟩, always conjugation-fixed.
pub fn norm_of<R: ComplexRing>(gram: &Matrix<R>, x: &[R]) -> Result<R> {
    inner(gram, x, x)
}

/// Result of the two inclusions making up L = pL*.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualityCheck {
    /// L ⊆ pL*: every pairwise inner product of basis vectors divisible by p.
    pub lattice_in_scaled_dual: bool,
    /// pL* ⊆ L: p·(basis Gram)⁻¹ has all entries in the ring.
    pub scaled_dual_in_lattice: bool,
}

impl DualityCheck {
    pub fn holds(&self) -> bool {
        self.lattice_in_scaled_dual && self.scaled_dual_in_lattice
    }
}

#[derive(Clone, Debug)]
pub struct HermitianLattice<R: ComplexRing> {
    ambient_gram: Matrix<R>,
    basis: Vec<Vec<R>>,
    basis_gram: Matrix<R>,
}

impl<R: ComplexRing> HermitianLattice<R> {
    /// Builds a lattice from the ambient Gram matrix and a generating set;
    /// the stored basis is the canonical normal form of the span.
    pub fn new(ambient_gram: Matrix<R>, generators: &[Vec<R>]) -> Result<Self> {
        if !ambient_gram.is_square() {
            return Err(Error::NotSquare {
                rows: ambient_gram.nrows(),
                cols: ambient_gram.ncols(),
            });
        }
        if ambient_gram.adjoint() != ambient_gram {
            return Err(Error::InvalidInput("ambient Gram is not Hermitian".into()));
        }
        let n = ambient_gram.nrows();
        if generators.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch(
                "generator length differs from ambient dimension".into(),
            ));
        }
        let basis = hnf_span(generators)?;
        if basis.is_empty() {
            return Err(Error::InvalidInput("lattice has rank zero".into()));
        }
        let basis_gram = gram_of(&ambient_gram, &basis)?;
        Ok(Self {
            ambient_gram,
            basis,
            basis_gram,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_gram.nrows()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_gram(&self) -> &Matrix<R> {
        &self.ambient_gram
    }

    pub fn basis(&self) -> &[Vec<R>] {
        &self.basis
    }

    /// Gram matrix of the stored basis: Γ[j][k] = ⟨b_j, b_k⟩.
    pub fn basis_gram(&self) -> &Matrix<R> {
        &self.basis_gram
    }

    pub fn inner(&self, x: &[R], y: &[R]) -> Result<R> {
        inner(&self.ambient_gram, x, y)
    }

    pub fn norm(&self, x: &[R]) -> Result<R> {
        norm_of(&self.ambient_gram, x)
    }

    pub fn contains(&self, v: &[R]) -> bool {
        v.len() == self.ambient_dim() && in_span(&self.basis, v)
    }

    /// Integral coordinates of `v` in the stored basis, when `v` lies in the
    /// lattice.
    pub fn coords(&self, v: &[R]) -> Option<Vec<R>> {
        if v.len() != self.ambient_dim() {
            return None;
        }
        let mut v = v.to_vec();
        let mut coords = vec![R::zero(); self.basis.len()];
        for (r, row) in self.basis.iter().enumerate() {
            let c = row.iter().position(|x| !x.is_zero())?;
            if v[c].is_zero() {
                continue;
            }
            let q = v[c].exact_div(&row[c])?;
            for j in 0..v.len() {
                let t = q.mul(&row[j]);
                v[j] = v[j].sub(&t);
            }
            coords[r] = q;
        }
        if v.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    /// Ambient vector with the given basis coordinates.
    pub fn from_coords(&self, coords: &[R]) -> Result<Vec<R>> {
        if coords.len() != self.basis.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coords for rank {}",
                coords.len(),
                self.basis.len()
            )));
        }
        let mut v = vec![R::zero(); self.ambient_dim()];
        for (c, row) in coords.iter().zip(&self.basis) {
            for (vj, rj) in v.iter_mut().zip(row) {
                *vj = vj.add(&c.mul(rj));
            }
        }
        Ok(v)
    }

    /// Both inclusions of L = pL*, checked separately.
    pub fn theta_duality(&self, p: &R) -> Result<DualityCheck> {
        let mut lattice_in_scaled_dual = true;
        'outer: for j in 0..self.rank() {
            for k in 0..self.rank() {
                if self.basis_gram.at(j, k).exact_div(p).is_none() {
                    lattice_in_scaled_dual = false;
                    break 'outer;
                }
            }
        }
        let gram_f = self.basis_gram.to_field();
        let inv = gram_f.inverse().map_err(|_| Error::SingularMatrix)?;
        let scaled = inv.scale(&crate::ring::Frac::from_ring(p.clone()));
        let scaled_dual_in_lattice = scaled.to_ring().is_some();
        Ok(DualityCheck {
            lattice_in_scaled_dual,
            scaled_dual_in_lattice,
        })
    }

    /// Sublattice spanned by ambient vectors, under the same form.
    pub fn sublattice_span(&self, vectors: &[Vec<R>]) -> Result<Self> {
        Self::new(self.ambient_gram.clone(), vectors)
    }

    /// Module equality via canonical basis comparison.
    pub fn span_equals(&self, other: &Self) -> bool {
        self.ambient_gram == other.ambient_gram && self.basis == other.basis
    }

    /// Gram matrix of the underlying Z-module in the interleaved basis
    /// {v_1, g·v_1, v_2, g·v_2, …} with g = ω (resp. i), under the scaled
    /// real form κ·Re⟨x,y⟩ (κ = 2/3 resp. 1). Errors when any entry fails
    /// to be integral, which happens exactly for lattices without the
    /// divisibility property.
    pub fn underlying_z_gram(&self) -> Result<Matrix<ZInt>> {
        let g = R::ring_generator();
        let r = self.rank();
        let mut zbasis: Vec<Vec<R>> = Vec::with_capacity(2 * r);
        for row in &self.basis {
            zbasis.push(row.clone());
            zbasis.push(row.iter().map(|x| x.mul(&g)).collect());
        }
        let mut out = Matrix::zero(2 * r, 2 * r);
        for i in 0..2 * r {
            for j in 0..2 * r {
                let ip = self.inner(&zbasis[i], &zbasis[j])?;
                let val = ip.scaled_re().ok_or_else(|| {
                    Error::NonIntegral(format!(
                        "Z-form entry ({i},{j}) = κ·Re({ip}) is not an integer"
                    ))
                })?;
                *out.at_mut(i, j) = ZInt(val);
            }
        }
        Ok(out)
    }
}

// Basis Gram in the same column convention: entry (k, j) pairs conj of the
// k-th coordinate with the j-th, i.e. G_b[k][j] = ⟨b_j, b_k⟩.
fn gram_of<R: ComplexRing>(ambient_gram: &Matrix<R>, basis: &[Vec<R>]) -> Result<Matrix<R>> {
    let r = basis.len();
    let mut gram = Matrix::zero(r, r);
    for k in 0..r {
        for j in 0..r {
            *gram.at_mut(k, j) = inner(ambient_gram, &basis[j], &basis[k])?;
        }
    }
    Ok(gram)
}

/// Signature (positives, negatives) of a nondegenerate symmetric integer
/// matrix, by exact symmetric congruence diagonalization.
pub fn signature(sym: &Matrix<ZInt>) -> Result<(usize, usize)> {
    if !sym.is_square() {
        return Err(Error::NotSquare {
            rows: sym.nrows(),
            cols: sym.ncols(),
        });
    }
    if sym.transpose() != *sym {
        return Err(Error::InvalidInput("matrix is not symmetric".into()));
    }
    let n = sym.nrows();
    let mut m = sym.clone();
    let mut pos = 0usize;
    let mut neg = 0usize;
    for k in 0..n {
        if m.at(k, k).is_zero() {
            // try a diagonal entry further down
            if let Some(j) = (k + 1..n).find(|&j| !m.at(j, j).is_zero()) {
                swap_sym(&mut m, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !m.at(k, j).is_zero()) {
                // all remaining diagonal entries vanish; row/col addition
                // produces 2·m[k][j] on the diagonal
                add_sym(&mut m, k, j);
            } else if (k..n).all(|i| (k..n).all(|j| m.at(i, j).is_zero())) {
                return Err(Error::DegenerateForm);
            } else {
                return Err(Error::DegenerateForm);
            }
        }
        let p = m.at(k, k).clone();
        if p.0.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if m.at(i, k).is_zero() {
                continue;
            }
            let a = m.at(i, k).clone();
            // row_i ← p·row_i − a·row_k, and the same on columns
            for j in 0..n {
                let t = p.mul(m.at(i, j)).sub(&a.mul(m.at(k, j)));
                *m.at_mut(i, j) = t;
            }
            for j in 0..n {
                let t = p.mul(m.at(j, i)).sub(&a.mul(m.at(j, k)));
                *m.at_mut(j, i) = t;
            }
            reduce_row_col(&mut m, i, n);
        }
    }
    Ok((pos, neg))
}

fn swap_sym(m: &mut Matrix<ZInt>, i: usize, j: usize) {
    let n = m.nrows();
    for c in 0..n {
        let t = m.at(i, c).clone();
        *m.at_mut(i, c) = m.at(j, c).clone();
        *m.at_mut(j, c) = t;
    }
    for r in 0..n {
        let t = m.at(r, i).clone();
        *m.at_mut(r, i) = m.at(r, j).clone();
        *m.at_mut(r, j) = t;
    }
}

fn add_sym(m: &mut Matrix<ZInt>, i: usize, j: usize) {
    let n = m.nrows();
    for c in 0..n {
        let t = m.at(i, c).add(m.at(j, c));
        *m.at_mut(i, c) = t;
    }
    for r in 0..n {
        let t = m.at(r, i).add(m.at(r, j));
        *m.at_mut(r, i) = t;
    }
}

// Keep entries small: divide row i and column i by their common content.
// Congruence by diag(…, 1/g, …) scales m[i][i] by 1/g², so it applies only
// when g² divides the diagonal entry; signs are unchanged either way.
fn reduce_row_col(m: &mut Matrix<ZInt>, i: usize, n: usize) {
    use num_integer::Integer;
    let mut g = BigInt::from(0);
    for j in 0..n {
        g = g.gcd(&m.at(i, j).0);
    }
    if g > BigInt::from(1) {
        let g2 = &g * &g;
        if (&m.at(i, i).0 % &g2).is_zero() {
            for j in 0..n {
                if j == i {
                    *m.at_mut(i, i) = ZInt(&m.at(i, i).0 / &g2);
                } else {
                    *m.at_mut(i, j) = ZInt(&m.at(i, j).0 / &g);
                    *m.at_mut(j, i) = ZInt(&m.at(j, i).0 / &g);
                }
            }
        }
    }
}

/// The sixteen root-table vectors in ambient E^14 coordinates: the central
/// root, then the three chains (b_i, c_i, d_i, e_i, f_i) for i = 1, 2, 3.
/// Blocks are coordinates 4i..4i+4; the hyperbolic cell is coordinates 12, 13.
pub fn eisenstein_seed_vectors() -> Vec<(String, Vec<EisensteinInt>)> {
    let e = |a: i64, b: i64| EisensteinInt::new(a, b);
    let zero = || vec![e(0, 0); 14];
    let theta = EisensteinInt::ramified_prime();
    let theta_bar = theta.conj();
    let omega_bar = EisensteinInt::new(0, 1).conj(); // ω̄ = −1−ω

    let mut out = Vec::new();
    let mut a_vec = zero();
    a_vec[12] = e(1, 0);
    a_vec[13] = omega_bar;
    out.push(("a".to_string(), a_vec));

    for block in 0..3usize {
        let base = 4 * block;
        let tag = block + 1;

        let mut b = zero();
        b[base + 3] = theta_bar.clone();
        b[13] = e(1, 0);
        out.push((format!("b{tag}"), b));

        let mut c = zero();
        c[base + 1] = e(1, 0);
        c[base + 2] = e(1, 0);
        c[base + 3] = e(1, 0);
        out.push((format!("c{tag}"), c));

        let mut d = zero();
        d[base + 1] = theta.clone();
        out.push((format!("d{tag}"), d));

        let mut ev = zero();
        ev[base] = e(-1, 0);
        ev[base + 1] = e(-1, 0);
        ev[base + 2] = e(1, 0);
        out.push((format!("e{tag}"), ev));

        let mut fv = zero();
        fv[base] = theta_bar.clone();
        out.push((format!("f{tag}"), fv));
    }
    out
}

/// Ambient Gram of E^{1,13}: diag(−1,…,−1) on twelve coordinates plus the
/// hyperbolic cell (0 θ̄ / θ 0) on the last two.
pub fn eisenstein_ambient_gram() -> Matrix<EisensteinInt> {
    let e = |a: i64, b: i64| EisensteinInt::new(a, b);
    let mut g = Matrix::zero(14, 14);
    for i in 0..12 {
        *g.at_mut(i, i) = e(-1, 0);
    }
    let theta = EisensteinInt::ramified_prime();
    *g.at_mut(12, 13) = theta.conj();
    *g.at_mut(13, 12) = theta;
    g
}

/// The rank-14 lattice over Z[ω] spanned by the sixteen table roots, carrying
/// the diag(−1¹²) ⊕ hyperbolic form.
pub fn build_eisenstein_lattice() -> HermitianLattice<EisensteinInt> {
    let gens: Vec<Vec<EisensteinInt>> = eisenstein_seed_vectors()
        .into_iter()
        .map(|(_, v)| v)
        .collect();
    HermitianLattice::new(eisenstein_ambient_gram(), &gens)
        .expect("seed lattice construction cannot fail")
}

/// Ambient Gram of the Gaussian space G^{1,7}: diag(−1,…,−1) on six
/// coordinates plus the hyperbolic cell (0 1−i / 1+i 0) on the last two.
pub fn gaussian_ambient_gram() -> Matrix<GaussianInt> {
    let g1 = |a: i64, b: i64| GaussianInt::new(a, b);
    let mut g = Matrix::zero(8, 8);
    for i in 0..6 {
        *g.at_mut(i, i) = g1(-1, 0);
    }
    let p = GaussianInt::ramified_prime();
    *g.at_mut(6, 7) = p.conj();
    *g.at_mut(7, 6) = p;
    g
}

/// Rank-8 lattice over Z[i]: three copies of the D4 lattice (each as a
/// rank-2 Gaussian lattice) plus the hyperbolic cell.
pub fn build_gaussian_lattice() -> HermitianLattice<GaussianInt> {
    let g1 = |a: i64, b: i64| GaussianInt::new(a, b);
    let zero = || vec![g1(0, 0); 8];
    let mut gens = Vec::new();
    for block in 0..3usize {
        let base = 2 * block;
        let mut v1 = zero();
        v1[base] = g1(1, 1); // 1+i
        gens.push(v1);
        let mut v2 = zero();
        v2[base] = g1(1, 0);
        v2[base + 1] = g1(1, 0);
        gens.push(v2);
    }
    let mut h1 = zero();
    h1[6] = g1(1, 0);
    gens.push(h1);
    let mut h2 = zero();
    h2[7] = g1(1, 0);
    gens.push(h2);
    HermitianLattice::new(gaussian_ambient_gram(), &gens)
        .expect("Gaussian lattice construction cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::IntegralRing;

    fn ei(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn seed_roots_have_norm_minus_three() {
        let g = eisenstein_ambient_gram();
        for (label, v) in eisenstein_seed_vectors() {
            assert_eq!(norm_of(&g, &v).unwrap(), ei(-3, 0), "root {label}");
        }
    }

    #[test]
    fn seed_inner_products_match_chain() {
        let g = eisenstein_ambient_gram();
        let roots: std::collections::BTreeMap<_, _> =
            eisenstein_seed_vectors().into_iter().collect();
        let theta = EisensteinInt::ramified_prime();
        let ip = |x: &str, y: &str| inner(&g, &roots[x], &roots[y]).unwrap();
        assert_eq!(ip("a", "b1"), theta);
        assert_eq!(ip("b1", "c1"), theta);
        assert_eq!(ip("c1", "d1"), theta);
        assert_eq!(ip("d1", "e1"), theta);
        assert_eq!(ip("e1", "f1"), theta);
        assert_eq!(ip("b1", "b2"), ei(0, 0));
        assert_eq!(ip("c1", "e1"), ei(0, 0));
        assert_eq!(ip("a", "c1"), ei(0, 0));
        // Hermitian symmetry
        assert_eq!(ip("b1", "a"), theta.conj());
    }

    #[test]
    fn lattice_rank_and_membership() {
        let lat = build_eisenstein_lattice();
        assert_eq!(lat.rank(), 14);
        for (_, v) in eisenstein_seed_vectors() {
            assert!(lat.contains(&v));
            let c = lat.coords(&v).unwrap();
            assert_eq!(lat.from_coords(&c).unwrap(), v);
        }
        // the ambient unit vector e1 is not in the lattice
        let mut e1 = vec![ei(0, 0); 14];
        e1[0] = ei(1, 0);
        assert!(!lat.contains(&e1));
    }

    #[test]
    fn theta_duality_of_l() {
        let lat = build_eisenstein_lattice();
        let d = lat.theta_duality(&EisensteinInt::ramified_prime()).unwrap();
        assert!(d.lattice_in_scaled_dual);
        assert!(d.scaled_dual_in_lattice);
        assert!(d.holds());
    }

    #[test]
    fn ambient_lattice_fails_duality() {
        // the full ambient module with the same form: diag entries −1 are
        // not divisible by θ
        let gram = eisenstein_ambient_gram();
        let gens: Vec<Vec<EisensteinInt>> = (0..14)
            .map(|i| {
                let mut v = vec![ei(0, 0); 14];
                v[i] = ei(1, 0);
                v
            })
            .collect();
        let amb = HermitianLattice::new(gram, &gens).unwrap();
        let d = amb.theta_duality(&EisensteinInt::ramified_prime()).unwrap();
        assert!(!d.lattice_in_scaled_dual);
        assert!(!d.holds());
    }

    #[test]
    fn gaussian_lattice_duality() {
        let lat = build_gaussian_lattice();
        assert_eq!(lat.rank(), 8);
        let d = lat.theta_duality(&GaussianInt::ramified_prime()).unwrap();
        assert!(d.holds());
    }

    #[test]
    fn hyperbolic_cell_z_form_signature() {
        let lat = build_eisenstein_lattice();
        let mut e13 = vec![ei(0, 0); 14];
        e13[12] = ei(1, 0);
        let mut e14 = vec![ei(0, 0); 14];
        e14[13] = ei(1, 0);
        let cell = lat.sublattice_span(&[e13, e14]).unwrap();
        let z = cell.underlying_z_gram().unwrap();
        assert_eq!(z.nrows(), 4);
        assert_eq!(signature(&z).unwrap(), (2, 2));
    }

    #[test]
    fn non_integral_z_form_detected() {
        let lat = build_eisenstein_lattice();
        let mut e1 = vec![ei(0, 0); 14];
        e1[0] = ei(1, 0);
        let sub = lat.sublattice_span(&[e1]).unwrap();
        assert!(matches!(
            sub.underlying_z_gram(),
            Err(Error::NonIntegral(_))
        ));
    }

    #[test]
    fn signature_basic() {
        let d = Matrix::diagonal(&[ZInt::new(1)]);
        assert_eq!(signature(&d).unwrap(), (1, 0));
        let m = Matrix::from_rows(vec![
            vec![ZInt::new(0), ZInt::new(1)],
            vec![ZInt::new(1), ZInt::new(0)],
        ])
        .unwrap();
        assert_eq!(signature(&m).unwrap(), (1, 1));
        let deg = Matrix::diagonal(&[ZInt::new(1), ZInt::new(0)]);
        assert!(matches!(signature(&deg), Err(Error::DegenerateForm)));
    }

    #[test]
    fn span_equality_of_seed_roots_and_lattice() {
        let lat = build_eisenstein_lattice();
        let gens: Vec<Vec<EisensteinInt>> = eisenstein_seed_vectors()
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        let re = lat.sublattice_span(&gens).unwrap();
        assert!(lat.span_equals(&re));
        // a single root spans a rank-1 sublattice
        let one = lat.sublattice_span(&gens[..1].to_vec()).unwrap();
        assert_eq!(one.rank(), 1);
    }

    #[test]
    fn basis_gram_entries_divisible_by_theta() {
        let lat = build_eisenstein_lattice();
        let theta = EisensteinInt::ramified_prime();
        let g = lat.basis_gram();
        for j in 0..14 {
            for k in 0..14 {
                assert!(g.at(j, k).exact_div(&theta).is_some());
            }
        }
        // determinant of the basis Gram has absolute norm 3^14 (|det| = 3^7)
        let det = g.determinant().unwrap();
        assert_eq!(det.norm_to_int(), BigInt::from(3).pow(14));
    }
}
