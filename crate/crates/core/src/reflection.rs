//! Complex reflections of Hermitian lattices and the group machinery built
//! on them: word evaluation, element orders, braid and commutation tests.
//!
//! A group element is stored as its matrix on lattice-basis coordinates,
//! where lattice preservation makes every entry a ring element. The ambient
//! fraction-field matrix is available for full-rank lattices.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lattice::HermitianLattice;
use crate::linalg::Matrix;
use crate::ring::{ComplexRing, Frac, RingElem};

/// An invertible exact matrix acting on lattice-basis coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement<R: ComplexRing> {
    matrix: Matrix<R>,
}

impl<R: ComplexRing> GroupElement<R> {
    pub fn from_matrix(matrix: Matrix<R>) -> Self {
        Self { matrix }
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            matrix: Matrix::identity(rank),
        }
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.matrix.nrows())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            matrix: self.matrix.matmul(&other.matrix)?,
        })
    }
}

/// Shared state for group computations over one lattice: the basis Gram and
/// its inverse over the fraction field.
pub struct ReflectionContext<R: ComplexRing> {
    lattice: HermitianLattice<R>,
    gram_field: Matrix<Frac<R>>,
    gram_inv: Matrix<Frac<R>>,
}

impl<R: ComplexRing> ReflectionContext<R> {
    pub fn new(lattice: HermitianLattice<R>) -> Result<Self> {
        let gram_field = lattice.basis_gram().to_field();
        let gram_inv = gram_field.inverse().map_err(|_| Error::SingularMatrix)?;
        Ok(Self {
            lattice,
            gram_field,
            gram_inv,
        })
    }

    pub fn lattice(&self) -> &HermitianLattice<R> {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    /// adjoint(M)·Γ·M = Γ on basis coordinates.
    pub fn is_isometry(&self, el: &GroupElement<R>) -> Result<bool> {
        let m = &el.matrix;
        let lhs = m
            .adjoint()
            .matmul(self.lattice.basis_gram())?
            .matmul(m)?;
        Ok(lhs == *self.lattice.basis_gram())
    }

    /// Exact inverse: Γ⁻¹·adjoint(M)·Γ when M is an isometry, otherwise a
    /// fraction-field inverse. Errors when the inverse is not integral.
    pub fn inverse(&self, el: &GroupElement<R>) -> Result<GroupElement<R>> {
        let m_field = el.matrix.to_field();
        let candidate = self
            .gram_inv
            .matmul(&m_field.adjoint())?
            .matmul(&self.gram_field)?;
        let product = candidate.matmul(&m_field)?;
        let ok = product == Matrix::identity(self.rank());
        let inv_field = if ok { candidate } else { m_field.inverse()? };
        let matrix = inv_field
            .to_ring()
            .ok_or_else(|| Error::NonIntegral("inverse matrix has denominators".into()))?;
        Ok(GroupElement { matrix })
    }
}

/// The reflection x ↦ x − (1−μ)·⟨x,r⟩/⟨r,r⟩·r as a matrix on lattice-basis
/// coordinates. `r` must be a lattice root (norm −3 Eisenstein, −2 Gaussian)
/// and μ a non-identity unit; a non-integral result signals a divisibility
/// violation and is reported as an error.
pub fn complex_reflection<R: ComplexRing>(
    lattice: &HermitianLattice<R>,
    root: &[R],
    mu: &R,
) -> Result<GroupElement<R>> {
    if !mu.is_unit() || *mu == R::one() {
        return Err(Error::InvalidInput(format!("μ = {mu} is not a nontrivial unit")));
    }
    let norm = lattice.norm(root)?;
    if norm != R::from_pair(R::ROOT_NORM, 0) {
        return Err(Error::NotARoot(format!(
            "norm is {norm}, expected {}",
            R::ROOT_NORM
        )));
    }
    let root_coords = lattice
        .coords(root)
        .ok_or_else(|| Error::NotARoot("vector lies outside the lattice".into()))?;
    let rank = lattice.rank();
    // column j of the matrix holds the basis coordinates of R(b_j):
    //   e_j − (1−μ)·⟨b_j,r⟩/⟨r,r⟩ · coords(r)
    let norm_f = Frac::from_ring(norm);
    let scale = Frac::from_ring(R::one().sub(mu));
    let mut cols: Vec<Vec<Frac<R>>> = Vec::with_capacity(rank);
    for j in 0..rank {
        let ip = lattice.inner(&lattice.basis()[j], root)?;
        let coef = scale
            .mul(&Frac::from_ring(ip))
            .exact_div(&norm_f)
            .expect("root norm is nonzero");
        let mut col: Vec<Frac<R>> = root_coords
            .iter()
            .map(|c| coef.mul(&Frac::from_ring(c.clone())).neg())
            .collect();
        col[j] = col[j].add(&Frac::one());
        cols.push(col);
    }
    let mut m = Matrix::zero(rank, rank);
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            *m.at_mut(i, j) = v.clone();
        }
    }
    let matrix = m
        .to_ring()
        .ok_or_else(|| Error::NonIntegral("reflection matrix has denominators".into()))?;
    Ok(GroupElement { matrix })
}

/// Reflections depend only on the mirror: rescaling the root by a unit
/// yields the identical matrix.
pub fn unit_rescaling_invariance<R: ComplexRing>(
    lattice: &HermitianLattice<R>,
    root: &[R],
    unit: &R,
    mu: &R,
) -> Result<bool> {
    if !unit.is_unit() {
        return Err(Error::InvalidInput(format!("{unit} is not a unit")));
    }
    let scaled: Vec<R> = root.iter().map(|c| c.mul(unit)).collect();
    let a = complex_reflection(lattice, root, mu)?;
    let b = complex_reflection(lattice, &scaled, mu)?;
    Ok(a == b)
}

/// The ambient-coordinate matrix of an element, defined for full-rank
/// lattices: Bᵀ·M·(Bᵀ)⁻¹ over the fraction field.
pub fn ambient_matrix<R: ComplexRing>(
    lattice: &HermitianLattice<R>,
    el: &GroupElement<R>,
) -> Result<Matrix<Frac<R>>> {
    if lattice.rank() != lattice.ambient_dim() {
        return Err(Error::InvalidInput(
            "ambient action requires a full-rank lattice".into(),
        ));
    }
    let bt = Matrix::from_rows(lattice.basis().to_vec())?
        .transpose()
        .to_field();
    let bt_inv = bt.inverse()?;
    bt.matmul(&el.matrix.to_field())?.matmul(&bt_inv)
}

/// A word in named generators, each letter with exponent ±1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupWord {
    letters: Vec<(String, i8)>,
}

impl GroupWord {
    /// Parses whitespace-separated labels with an optional `'` suffix for
    /// the inverse, e.g. `"a b1 c1' a"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (label, exp) = match tok.strip_suffix('\'') {
                Some(base) => (base, -1),
                None => (tok, 1),
            };
            if label.is_empty() {
                return Err(Error::InvalidInput(format!("bad word token: {tok:?}")));
            }
            letters.push((label.to_string(), exp));
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[(String, i8)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Left-to-right product of the assigned generator matrices.
pub fn word_to_matrix<R: ComplexRing>(
    word: &GroupWord,
    assignment: &BTreeMap<String, GroupElement<R>>,
    ctx: &ReflectionContext<R>,
) -> Result<GroupElement<R>> {
    let mut acc = GroupElement::identity(ctx.rank());
    let mut inverses: BTreeMap<&str, GroupElement<R>> = BTreeMap::new();
    for (label, exp) in &word.letters {
        let gen = assignment
            .get(label)
            .ok_or_else(|| Error::UnassignedLabel(label.clone()))?;
        let factor = if *exp == 1 {
            gen.clone()
        } else {
            match inverses.get(label.as_str()) {
                Some(inv) => inv.clone(),
                None => {
                    let inv = ctx.inverse(gen)?;
                    inverses.insert(label, inv.clone());
                    inv
                }
            }
        };
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderResult {
    Finite(u64),
    ExceedsCap,
}

impl OrderResult {
    pub fn finite(&self) -> Option<u64> {
        match self {
            OrderResult::Finite(k) => Some(*k),
            OrderResult::ExceedsCap => None,
        }
    }
}

/// Least k ≤ cap with M^k = I, by iterated multiplication.
pub fn element_order<R: ComplexRing>(el: &GroupElement<R>, cap: u64) -> Result<OrderResult> {
    if cap == 0 {
        return Err(Error::InvalidInput("order cap must be positive".into()));
    }
    let id = Matrix::identity(el.matrix.nrows());
    let mut acc = el.matrix.clone();
    for k in 1..=cap {
        if acc == id {
            return Ok(OrderResult::Finite(k));
        }
        acc = acc.matmul(&el.matrix)?;
    }
    Ok(OrderResult::ExceedsCap)
}

/// Least k ≤ cap with M^k a power of the scalar ring generator times the
/// identity (the projectivized order).
pub fn projective_order<R: ComplexRing>(el: &GroupElement<R>, cap: u64) -> Result<OrderResult> {
    if cap == 0 {
        return Err(Error::InvalidInput("order cap must be positive".into()));
    }
    let n = el.matrix.nrows();
    let mut scalars = Vec::new();
    let mut u = R::one();
    loop {
        scalars.push(Matrix::identity(n).scale(&u));
        u = u.mul(&R::ring_generator());
        if u == R::one() {
            break;
        }
    }
    let mut acc = el.matrix.clone();
    for k in 1..=cap {
        if scalars.contains(&acc) {
            return Ok(OrderResult::Finite(k));
        }
        acc = acc.matmul(&el.matrix)?;
    }
    Ok(OrderResult::ExceedsCap)
}

/// MNM = NMN.
pub fn braids<R: ComplexRing>(m: &GroupElement<R>, n: &GroupElement<R>) -> Result<bool> {
    let lhs = m.matrix.matmul(&n.matrix)?.matmul(&m.matrix)?;
    let rhs = n.matrix.matmul(&m.matrix)?.matmul(&n.matrix)?;
    Ok(lhs == rhs)
}

/// MN = NM.
pub fn commutes<R: ComplexRing>(m: &GroupElement<R>, n: &GroupElement<R>) -> Result<bool> {
    Ok(m.matrix.matmul(&n.matrix)? == n.matrix.matmul(&m.matrix)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_eisenstein_lattice, eisenstein_seed_vectors};
    use crate::ring::{EisensteinInt, IntegralRing};

    fn ei(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    fn seed_reflections() -> (
        ReflectionContext<EisensteinInt>,
        BTreeMap<String, GroupElement<EisensteinInt>>,
        BTreeMap<String, Vec<EisensteinInt>>,
    ) {
        let lat = build_eisenstein_lattice();
        let omega = EisensteinInt::ring_generator();
        let mut gens = BTreeMap::new();
        let mut roots = BTreeMap::new();
        for (label, v) in eisenstein_seed_vectors() {
            let r = complex_reflection(&lat, &v, &omega).unwrap();
            gens.insert(label.clone(), r);
            roots.insert(label, v);
        }
        let ctx = ReflectionContext::new(lat).unwrap();
        (ctx, gens, roots)
    }

    #[test]
    fn triflection_in_f1_is_diagonal_on_ambient() {
        let lat = build_eisenstein_lattice();
        let omega = EisensteinInt::ring_generator();
        let f1 = eisenstein_seed_vectors()
            .into_iter()
            .find(|(l, _)| l == "f1")
            .unwrap()
            .1;
        let r = complex_reflection(&lat, &f1, &omega).unwrap();
        let amb = ambient_matrix(&lat, &r).unwrap();
        let mut expect = Matrix::<EisensteinInt>::identity(14);
        *expect.at_mut(0, 0) = omega.clone();
        assert_eq!(amb, expect.to_field());
    }

    #[test]
    fn reflection_contract_on_seeds() {
        let (ctx, gens, roots) = seed_reflections();
        let omega = EisensteinInt::ring_generator();
        for (label, el) in &gens {
            // M·r = ω·r in basis coordinates
            let rc = ctx.lattice().coords(&roots[label]).unwrap();
            let img = el.matrix().mul_vec(&rc).unwrap();
            let scaled: Vec<_> = rc.iter().map(|c| c.mul(&omega)).collect();
            assert_eq!(img, scaled, "root scaling for {label}");
            // isometry, order 3, single moved direction
            assert!(ctx.is_isometry(el).unwrap());
            assert_eq!(
                element_order(el, 10).unwrap(),
                OrderResult::Finite(3),
                "order of {label}"
            );
            let diff = el
                .matrix()
                .sub(&Matrix::identity(14))
                .unwrap();
            assert_eq!(diff.rank(), 1, "rank(M−I) for {label}");
        }
    }

    #[test]
    fn fixes_orthogonal_vectors() {
        let (ctx, gens, roots) = seed_reflections();
        // c1 ⊥ a, so R(a) fixes c1
        let c1 = ctx.lattice().coords(&roots["c1"]).unwrap();
        assert_eq!(gens["a"].matrix().mul_vec(&c1).unwrap(), c1);
    }

    #[test]
    fn braid_and_commute_pattern_samples() {
        let (_, gens, _) = seed_reflections();
        assert!(braids(&gens["a"], &gens["b1"]).unwrap());
        assert!(!commutes(&gens["a"], &gens["b1"]).unwrap());
        assert!(commutes(&gens["a"], &gens["c1"]).unwrap());
        assert!(!braids(&gens["a"], &gens["c1"]).unwrap());
        assert!(commutes(&gens["a"], &gens["a"]).unwrap());
    }

    #[test]
    fn unit_rescaling_gives_same_matrix() {
        let lat = build_eisenstein_lattice();
        let omega = EisensteinInt::ring_generator();
        let roots = eisenstein_seed_vectors();
        for u in EisensteinInt::units() {
            for (_, v) in roots.iter().take(5) {
                assert!(unit_rescaling_invariance(&lat, v, &u, &omega).unwrap());
            }
        }
    }

    #[test]
    fn word_evaluation() {
        let (ctx, gens, _) = seed_reflections();
        let empty = GroupWord::parse("").unwrap();
        assert!(word_to_matrix(&empty, &gens, &ctx).unwrap().is_identity());
        let cubed = GroupWord::parse("a a a").unwrap();
        assert!(word_to_matrix(&cubed, &gens, &ctx).unwrap().is_identity());
        let inv_pair = GroupWord::parse("b1 b1'").unwrap();
        assert!(word_to_matrix(&inv_pair, &gens, &ctx)
            .unwrap()
            .is_identity());
        let unknown = GroupWord::parse("z9").unwrap();
        assert!(matches!(
            word_to_matrix(&unknown, &gens, &ctx),
            Err(Error::UnassignedLabel(_))
        ));
    }

    #[test]
    fn spider_word_has_order_twenty() {
        let (ctx, gens, _) = seed_reflections();
        let spider = GroupWord::parse("a b1 c1 a b2 c2 a b3 c3").unwrap();
        let m = word_to_matrix(&spider, &gens, &ctx).unwrap();
        assert_eq!(element_order(&m, 100).unwrap(), OrderResult::Finite(20));
    }

    #[test]
    fn order_of_inverse_matches() {
        let (ctx, gens, _) = seed_reflections();
        let w = GroupWord::parse("a b1").unwrap();
        let m = word_to_matrix(&w, &gens, &ctx).unwrap();
        let mi = ctx.inverse(&m).unwrap();
        assert_eq!(element_order(&m, 200).unwrap(), element_order(&mi, 200).unwrap());
    }

    #[test]
    fn non_root_rejected() {
        let lat = build_eisenstein_lattice();
        let omega = EisensteinInt::ring_generator();
        let mut e1 = vec![ei(0, 0); 14];
        e1[0] = ei(1, 0);
        assert!(matches!(
            complex_reflection(&lat, &e1, &omega),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn tetraflection_order_four() {
        use crate::lattice::build_gaussian_lattice;
        use crate::ring::GaussianInt;
        let lat = build_gaussian_lattice();
        let i_unit = GaussianInt::ring_generator();
        let mut r = vec![GaussianInt::new(0, 0); 8];
        r[0] = GaussianInt::new(1, 1);
        assert_eq!(lat.norm(&r).unwrap(), GaussianInt::new(-2, 0));
        let m = complex_reflection(&lat, &r, &i_unit).unwrap();
        assert_eq!(element_order(&m, 10).unwrap(), OrderResult::Finite(4));
        let rc = lat.coords(&r).unwrap();
        let img = m.matrix().mul_vec(&rc).unwrap();
        let scaled: Vec<_> = rc.iter().map(|c| c.mul(&i_unit)).collect();
        assert_eq!(img, scaled);
        let ctx = ReflectionContext::new(lat).unwrap();
        assert!(ctx.is_isometry(&m).unwrap());
    }

    #[test]
    fn projective_order_divides_order() {
        let (ctx, gens, _) = seed_reflections();
        let w = GroupWord::parse("a b1 c1 a b2 c2 a b3 c3").unwrap();
        let m = word_to_matrix(&w, &gens, &ctx).unwrap();
        let po = projective_order(&m, 100).unwrap().finite().unwrap();
        assert_eq!(20 % po, 0);
    }

    #[test]
    fn norm_sanity() {
        // θθ̄ = 3 keeps the seed-root norms in 3Z
        let theta = EisensteinInt::ramified_prime();
        assert_eq!(theta.norm_to_int(), 3.into());
    }
}
