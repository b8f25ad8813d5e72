//! Finite quotients: reduction of isometries modulo the ramified prime, the
//! induced F2 quadratic form and its type, breadth-first matrix-group
//! closure, and Schreier–Sims order computation on vector orbits.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::HermitianLattice;
use crate::linalg::Matrix;
use crate::reflection::GroupElement;
use crate::ring::{ComplexRing, GaussianInt, IntegralRing, PrimeField, RingElem};

/// Matrix of the induced action on lat/(p·lat) in the lattice basis. The
/// modulus must be a unit multiple of the ring's ramified prime; the stored
/// basis-coordinate matrix already preserves the lattice, so reduction is
/// entrywise. Functorial: reduce(MN) = reduce(M)·reduce(N).
pub fn reduce_lattice_isometry<R: ComplexRing>(
    el: &GroupElement<R>,
    modulus: &R,
) -> Result<Matrix<R::Residue>> {
    let p = R::ramified_prime();
    let ok = R::units().iter().any(|u| p.mul(u) == *modulus);
    if !ok {
        return Err(Error::UnsupportedModulus(modulus.to_string()));
    }
    Ok(el.matrix().map(|x| x.reduce_ramified()))
}

/// A quadratic form on F2^n given by its full value table (n ≤ 16).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticFormF2 {
    dim: usize,
    values: Vec<u8>, // indexed by coordinate bitmask
}

impl QuadraticFormF2 {
    pub fn from_fn(dim: usize, f: impl Fn(u32) -> u8) -> Result<Self> {
        if dim > 16 {
            return Err(Error::EnumerationTooLarge(format!("dimension {dim}")));
        }
        let values = (0..(1u32 << dim)).map(|v| f(v) & 1).collect();
        Ok(Self { dim, values })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn value(&self, v: u32) -> u8 {
        self.values[v as usize]
    }

    /// The polarization b(x,y) = q(x+y) + q(x) + q(y).
    pub fn bilinear(&self, x: u32, y: u32) -> u8 {
        self.value(x ^ y) ^ self.value(x) ^ self.value(y)
    }

    /// b is nondegenerate: no nonzero vector pairs to zero with everything.
    pub fn is_nondegenerate(&self) -> bool {
        let n = self.dim;
        (1..(1u32 << n)).all(|x| (0..n).any(|j| self.bilinear(x, 1 << j) == 1))
    }

    /// Number of vectors (including zero) with q(v) = 0.
    pub fn isotropic_count(&self) -> usize {
        self.values.iter().filter(|&&v| v == 0).count()
    }

    /// True when every value of the table agrees with `other` under the
    /// linear substitution v ↦ M·v given by column bitmasks.
    pub fn preserved_by(&self, m: &Matrix<crate::ring::F2>) -> bool {
        let n = self.dim;
        if m.nrows() != n || m.ncols() != n {
            return false;
        }
        (0..(1u32 << n)).all(|v| {
            let mut img = 0u32;
            for i in 0..n {
                let mut bit = 0u8;
                for j in 0..n {
                    if v >> j & 1 == 1 {
                        bit ^= m.at(i, j).0;
                    }
                }
                img |= u32::from(bit & 1) << i;
            }
            self.value(img) == self.value(v)
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormType {
    Plus,
    Minus,
}

/// Reference form of the given type in even dimension 2m: m hyperbolic
/// planes, or m−1 hyperbolic planes plus one anisotropic plane x²+xy+y².
pub fn reference_form(dim: usize, ty: FormType) -> Result<QuadraticFormF2> {
    if dim == 0 || dim % 2 != 0 {
        return Err(Error::InvalidInput(format!("dimension {dim} is not even")));
    }
    QuadraticFormF2::from_fn(dim, move |v| {
        let mut acc = 0u8;
        let pairs = dim / 2;
        for p in 0..pairs {
            let x = (v >> (2 * p)) as u8 & 1;
            let y = (v >> (2 * p + 1)) as u8 & 1;
            if p + 1 == pairs && ty == FormType::Minus {
                acc ^= (x & y) ^ x ^ y; // x² + xy + y² over F2
            } else {
                acc ^= x & y;
            }
        }
        acc
    })
}

/// Type of a nondegenerate even-dimensional form, decided by comparing the
/// isotropic count against both reference forms.
pub fn form_type(q: &QuadraticFormF2) -> Result<(FormType, usize)> {
    if q.dim() % 2 != 0 || q.dim() == 0 {
        return Err(Error::DegenerateForm);
    }
    if !q.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let count = q.isotropic_count();
    let plus = reference_form(q.dim(), FormType::Plus)?.isotropic_count();
    let minus = reference_form(q.dim(), FormType::Minus)?.isotropic_count();
    if count == plus {
        Ok((FormType::Plus, count))
    } else if count == minus {
        Ok((FormType::Minus, count))
    } else {
        Err(Error::InvalidInput(format!(
            "isotropic count {count} matches neither reference ({plus} / {minus})"
        )))
    }
}

/// q([x]) = (⟨x,x⟩ / 2) mod 2 on lat/(1+i)·lat. Requires every pairwise
/// inner product of the basis divisible by 1+i, which makes the class
/// function well defined.
pub fn induced_quadratic_form(lat: &HermitianLattice<GaussianInt>) -> Result<QuadraticFormF2> {
    let p = GaussianInt::ramified_prime();
    let gram = lat.basis_gram();
    for i in 0..lat.rank() {
        for j in 0..lat.rank() {
            if gram.at(i, j).exact_div(&p).is_none() {
                return Err(Error::NonIntegral(format!(
                    "basis inner product ({i},{j}) = {} is not divisible by 1+i",
                    gram.at(i, j)
                )));
            }
        }
    }
    let n = lat.rank();
    let two = BigInt::from(2);
    let mut values = Vec::with_capacity(1 << n);
    for mask in 0..(1u32 << n) {
        // norm of the 0/1-coordinate lift: Σ_{j,k ∈ mask} ⟨b_j, b_k⟩
        let mut acc = GaussianInt::zero();
        for k in 0..n {
            if mask >> k & 1 == 0 {
                continue;
            }
            for j in 0..n {
                if mask >> j & 1 == 1 {
                    acc = acc.add(gram.at(k, j));
                }
            }
        }
        let norm = acc
            .as_int()
            .ok_or_else(|| Error::NonIntegral("norm is not real".into()))?;
        let (half, rem) = norm.div_rem(&two);
        if !rem.is_zero() {
            return Err(Error::NonIntegral(format!("odd norm {norm}")));
        }
        values.push(u8::try_from(half.mod_floor(&two)).expect("mod 2"));
    }
    Ok(QuadraticFormF2 {
        dim: n,
        values,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClosureResult {
    Order(u64),
    ExceedsCap,
}

impl ClosureResult {
    pub fn order(&self) -> Option<u64> {
        match self {
            ClosureResult::Order(n) => Some(*n),
            ClosureResult::ExceedsCap => None,
        }
    }
}

/// Breadth-first closure of the monoid generated by invertible matrices,
/// hashed by canonical serialization. Returns the exact group order when it
/// is at most `cap`, otherwise reports that the cap was exceeded.
pub fn bfs_group_closure<S: RingElem>(
    generators: &[Matrix<S>],
    cap: u64,
) -> Result<ClosureResult> {
    if generators.is_empty() {
        return Err(Error::InvalidInput("no generators".into()));
    }
    let n = generators[0].nrows();
    for g in generators {
        if !g.is_square() || g.nrows() != n {
            return Err(Error::DimensionMismatch(
                "generators must be square of equal size".into(),
            ));
        }
    }
    let identity = Matrix::<S>::identity(n);
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    seen.insert(identity.canonical_bytes());
    let mut frontier = VecDeque::from([identity]);
    let mut count: u64 = 1;
    while let Some(m) = frontier.pop_front() {
        for g in generators {
            let next = m.matmul(g)?;
            let key = next.canonical_bytes();
            if seen.insert(key) {
                count += 1;
                if count > cap {
                    return Ok(ClosureResult::ExceedsCap);
                }
                frontier.push_back(next);
            }
        }
    }
    Ok(ClosureResult::Order(count))
}

// ---- packed closure fast path ----

// word-size matrix as component pairs, row-major
struct Packed {
    data: Vec<(i64, i64)>,
}

fn pack_matrix<R: ComplexRing>(m: &Matrix<R>) -> Option<Packed> {
    let n = m.nrows();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (a, b) = m.at(i, j).components();
            data.push((i64::try_from(a).ok()?, i64::try_from(b).ok()?));
        }
    }
    Some(Packed { data })
}

fn packed_mul<R: ComplexRing>(n: usize, a: &Packed, b: &Packed) -> Option<Packed> {
    let mut data = vec![(0i64, 0i64); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a.data[i * n + k];
            if x == (0, 0) {
                continue;
            }
            for j in 0..n {
                let y = b.data[k * n + j];
                if y == (0, 0) {
                    continue;
                }
                let t = R::mul_pair_i64(x, y)?;
                let cell = &mut data[i * n + j];
                cell.0 = cell.0.checked_add(t.0)?;
                cell.1 = cell.1.checked_add(t.1)?;
            }
        }
    }
    Some(Packed { data })
}

fn packed_key(p: &Packed, buf: &mut Vec<u8>) {
    buf.clear();
    for &(a, b) in &p.data {
        for v in [a, b] {
            // zig-zag varint
            let mut u = ((v << 1) ^ (v >> 63)) as u64;
            loop {
                let byte = (u & 0x7f) as u8;
                u >>= 7;
                if u == 0 {
                    buf.push(byte);
                    break;
                }
                buf.push(byte | 0x80);
            }
        }
    }
}

fn packed_closure<R: ComplexRing>(
    n: usize,
    gens: &[Packed],
    cap: u64,
) -> Option<ClosureResult> {
    let mut identity = Packed {
        data: vec![(0, 0); n * n],
    };
    for i in 0..n {
        identity.data[i * n + i] = (1, 0);
    }
    let mut key = Vec::new();
    packed_key(&identity, &mut key);
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    seen.insert(key.clone());
    let mut frontier = VecDeque::from([identity]);
    let mut count: u64 = 1;
    while let Some(m) = frontier.pop_front() {
        for g in gens {
            let next = packed_mul::<R>(n, &m, g)?;
            packed_key(&next, &mut key);
            if !seen.contains(&key) {
                seen.insert(key.clone());
                count += 1;
                if count > cap {
                    return Some(ClosureResult::ExceedsCap);
                }
                frontier.push_back(next);
            }
        }
    }
    Some(ClosureResult::Order(count))
}

/// Same contract as [`bfs_group_closure`], preferring a word-size packed
/// representation with overflow-checked arithmetic; any overflow falls back
/// to the big-integer closure, so results are always exact.
pub fn bfs_group_closure_packed<R: ComplexRing>(
    generators: &[Matrix<R>],
    cap: u64,
) -> Result<ClosureResult> {
    if generators.is_empty() {
        return Err(Error::InvalidInput("no generators".into()));
    }
    let n = generators[0].nrows();
    let square = generators.iter().all(|g| g.is_square() && g.nrows() == n);
    if !square {
        return Err(Error::DimensionMismatch(
            "generators must be square of equal size".into(),
        ));
    }
    let packed: Option<Vec<Packed>> = generators.iter().map(pack_matrix).collect();
    if let Some(pg) = packed {
        if let Some(result) = packed_closure::<R>(n, &pg, cap) {
            return Ok(result);
        }
    }
    bfs_group_closure(generators, cap)
}

// ---- permutation Schreier–Sims ----

type Perm = Vec<u32>;

fn perm_identity(n: usize) -> Perm {
    (0..n as u32).collect()
}

fn perm_is_identity(p: &Perm) -> bool {
    p.iter().enumerate().all(|(i, &x)| x == i as u32)
}

// apply p then q
fn perm_compose(p: &Perm, q: &Perm) -> Perm {
    p.iter().map(|&x| q[x as usize]).collect()
}

fn perm_inverse(p: &Perm) -> Perm {
    let mut inv = vec![0u32; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

struct BsgsLevel {
    base: u32,
    gens: Vec<Perm>,
    transversal: BTreeMap<u32, Perm>, // point -> u with base^u = point
}

struct Bsgs {
    degree: usize,
    levels: Vec<BsgsLevel>,
}

impl Bsgs {
    fn new(degree: usize) -> Self {
        Self {
            degree,
            levels: Vec::new(),
        }
    }

    fn order(&self) -> u64 {
        self.levels
            .iter()
            .map(|l| l.transversal.len() as u64)
            .product()
    }

    // divide g through the transversals starting at `start`; returns the
    // level where it sticks and the residue
    fn strip(&self, g: &Perm, start: usize) -> (usize, Perm) {
        let mut h = g.clone();
        for i in start..self.levels.len() {
            let img = h[self.levels[i].base as usize];
            match self.levels[i].transversal.get(&img) {
                None => return (i, h),
                Some(u) => h = perm_compose(&h, &perm_inverse(u)),
            }
        }
        (self.levels.len(), h)
    }

    // generators of the stabilizer chain at level i: everything inserted at
    // depth ≥ i fixes the earlier base points
    fn level_gens(&self, i: usize) -> Vec<Perm> {
        self.levels[i..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    fn recompute_orbit(&mut self, i: usize) {
        let gens = self.level_gens(i);
        let base = self.levels[i].base;
        let mut transversal = BTreeMap::new();
        transversal.insert(base, perm_identity(self.degree));
        let mut queue = VecDeque::from([base]);
        while let Some(p) = queue.pop_front() {
            let up = transversal[&p].clone();
            for g in &gens {
                let q = g[p as usize];
                if !transversal.contains_key(&q) {
                    transversal.insert(q, perm_compose(&up, g));
                    queue.push_back(q);
                }
            }
        }
        self.levels[i].transversal = transversal;
    }

    fn insert(&mut self, g: Perm) {
        let (lvl, h) = self.strip(&g, 0);
        if perm_is_identity(&h) {
            return;
        }
        self.add_at_level(lvl, h);
        // the new generator enters G^(j) for every j ≤ lvl, so the Schreier
        // condition must be re-established from lvl back up to the top
        self.verify_from(lvl);
    }

    fn add_at_level(&mut self, lvl: usize, h: Perm) {
        if lvl == self.levels.len() {
            // greedy base choice: first point moved by the residue
            let base = h
                .iter()
                .enumerate()
                .find(|(i, &x)| x != *i as u32)
                .map(|(i, _)| i as u32)
                .expect("non-identity residue moves a point");
            self.levels.push(BsgsLevel {
                base,
                gens: Vec::new(),
                transversal: BTreeMap::new(),
            });
        }
        self.levels[lvl].gens.push(h);
    }

    // first Schreier generator at level i that does not sift to the identity
    fn find_failing_schreier(&self, i: usize) -> Option<(usize, Perm)> {
        let gens = self.level_gens(i);
        for (p, up) in &self.levels[i].transversal {
            for g in &gens {
                let q = g[*p as usize];
                let uq = &self.levels[i].transversal[&q];
                // u_p · g · u_q⁻¹ fixes the base
                let sg = perm_compose(&perm_compose(up, g), &perm_inverse(uq));
                if perm_is_identity(&sg) {
                    continue;
                }
                let (lvl, h) = self.strip(&sg, i + 1);
                if !perm_is_identity(&h) {
                    return Some((lvl, h));
                }
            }
        }
        None
    }

    // verify levels start, start−1, …, 0; a failing residue is inserted at
    // its deeper level, which is then verified first
    fn verify_from(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let iu = i as usize;
            self.recompute_orbit(iu);
            match self.find_failing_schreier(iu) {
                Some((lvl, h)) => {
                    self.add_at_level(lvl, h);
                    i = lvl as isize;
                }
                None => i -= 1,
            }
        }
    }
}

/// Exact order of the permutation group generated by `perms` (all on the
/// same ground set), as a product of orbit lengths along a stabilizer chain.
pub fn schreier_sims_order(perms: &[Perm]) -> Result<u64> {
    if perms.is_empty() {
        return Err(Error::InvalidInput("no generators".into()));
    }
    let n = perms[0].len();
    for p in perms {
        if p.len() != n {
            return Err(Error::DimensionMismatch("permutation degrees differ".into()));
        }
        let mut seen = vec![false; n];
        for &x in p {
            if x as usize >= n || seen[x as usize] {
                return Err(Error::InvalidInput("not a permutation".into()));
            }
            seen[x as usize] = true;
        }
    }
    let mut chain = Bsgs::new(n);
    for p in perms {
        chain.insert(p.clone());
    }
    Ok(chain.order())
}

/// Permutations induced by invertible matrices over a prime field acting on
/// the nonzero vectors of F_q^n. Vector index: Σ coord_i · q^i, minus one to
/// skip the zero vector.
pub fn matrices_to_vector_permutations<F: PrimeField>(
    gens: &[Matrix<F>],
) -> Result<Vec<Perm>> {
    if gens.is_empty() {
        return Err(Error::InvalidInput("no generators".into()));
    }
    let n = gens[0].nrows();
    if n > 12 {
        return Err(Error::EnumerationTooLarge(format!("dimension {n}")));
    }
    let q = u64::from(F::CHAR);
    let total = q.pow(n as u32);
    let decode = |idx: u64| -> Vec<F> {
        let mut v = Vec::with_capacity(n);
        let mut rest = idx;
        for _ in 0..n {
            v.push(F::from_u8((rest % q) as u8));
            rest /= q;
        }
        v
    };
    let encode = |v: &[F]| -> u64 {
        let mut idx = 0u64;
        for c in v.iter().rev() {
            idx = idx * q + u64::from(c.to_u8());
        }
        idx
    };
    let mut perms = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.is_square() || g.nrows() != n {
            return Err(Error::DimensionMismatch("generator sizes differ".into()));
        }
        let mut perm = Vec::with_capacity((total - 1) as usize);
        for idx in 1..total {
            let v = decode(idx);
            let img = g.mul_vec(&v)?;
            let code = encode(&img);
            if code == 0 {
                return Err(Error::InvalidInput("matrix is singular".into()));
            }
            perm.push((code - 1) as u32);
        }
        perms.push(perm);
    }
    Ok(perms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_gaussian_lattice;
    use crate::reflection::complex_reflection;
    use crate::ring::{EisensteinInt, F2, F3};

    #[test]
    fn reference_form_counts() {
        let plus2 = reference_form(2, FormType::Plus).unwrap();
        assert_eq!(plus2.isotropic_count(), 3);
        assert_eq!(form_type(&plus2).unwrap(), (FormType::Plus, 3));
        let minus2 = reference_form(2, FormType::Minus).unwrap();
        assert_eq!(minus2.isotropic_count(), 1);
        assert_eq!(form_type(&minus2).unwrap(), (FormType::Minus, 1));
        // dimension 8: 2^7 ± 2^3
        let plus8 = reference_form(8, FormType::Plus).unwrap();
        assert_eq!(plus8.isotropic_count(), 136);
        let minus8 = reference_form(8, FormType::Minus).unwrap();
        assert_eq!(minus8.isotropic_count(), 120);
    }

    #[test]
    fn degenerate_form_rejected() {
        let q = QuadraticFormF2::from_fn(2, |v| (v & 1) as u8).unwrap();
        assert!(matches!(form_type(&q), Err(Error::DegenerateForm)));
    }

    #[test]
    fn induced_form_on_gaussian_lattice() {
        let lat = build_gaussian_lattice();
        let q = induced_quadratic_form(&lat).unwrap();
        assert_eq!(q.dim(), 8);
        assert_eq!(q.value(0), 0);
        let (ty, count) = form_type(&q).unwrap();
        assert_eq!(ty, FormType::Minus);
        assert_eq!(count, 120);
    }

    #[test]
    fn induced_form_well_defined_on_classes() {
        use num_bigint::BigInt;
        let lat = build_gaussian_lattice();
        let q = induced_quadratic_form(&lat).unwrap();
        let p = GaussianInt::ramified_prime();
        // [x] and [x + (1+i)y] agree for a few dozen lift pairs
        for xm in [1u32, 5, 37, 129, 200, 255] {
            for ym in [0u32, 3, 77, 255] {
                let to_coords = |m: u32| -> Vec<GaussianInt> {
                    (0..8)
                        .map(|i| {
                            GaussianInt::from_bigints(
                                BigInt::from((m >> i) & 1),
                                BigInt::from(0),
                            )
                        })
                        .collect()
                };
                let x = lat.from_coords(&to_coords(xm)).unwrap();
                let shift = lat.from_coords(&to_coords(ym)).unwrap();
                let shifted: Vec<GaussianInt> = x
                    .iter()
                    .zip(&shift)
                    .map(|(a, s)| a.add(&s.mul(&p)))
                    .collect();
                let norm = lat.norm(&shifted).unwrap().as_int().unwrap();
                let half: BigInt = norm / 2;
                let val = u8::try_from(half.mod_floor(&BigInt::from(2))).unwrap();
                assert_eq!(val, q.value(xm));
            }
        }
    }

    #[test]
    fn reduction_is_functorial_and_involutive() {
        let lat = build_gaussian_lattice();
        let i_unit = GaussianInt::ring_generator();
        let p = GaussianInt::ramified_prime();
        let mut r1 = vec![GaussianInt::new(0, 0); 8];
        r1[0] = GaussianInt::new(1, 1);
        let mut r2 = vec![GaussianInt::new(0, 0); 8];
        r2[0] = GaussianInt::new(1, 0);
        r2[1] = GaussianInt::new(1, 0);
        let m1 = complex_reflection(&lat, &r1, &i_unit).unwrap();
        let m2 = complex_reflection(&lat, &r2, &i_unit).unwrap();
        let red1 = reduce_lattice_isometry(&m1, &p).unwrap();
        let red2 = reduce_lattice_isometry(&m2, &p).unwrap();
        // tetraflections become involutions
        let id = Matrix::<F2>::identity(8);
        assert_ne!(red1, id);
        assert_eq!(red1.matmul(&red1).unwrap(), id);
        // functorial
        let prod = m1.mul(&m2).unwrap();
        assert_eq!(
            reduce_lattice_isometry(&prod, &p).unwrap(),
            red1.matmul(&red2).unwrap()
        );
        // wrong modulus rejected
        assert!(reduce_lattice_isometry(&m1, &GaussianInt::new(2, 0)).is_err());
    }

    #[test]
    fn bfs_small_reflection_chains() {
        let cfg = crate::roots::seed_y555_roots();
        let omega = EisensteinInt::ring_generator();
        // A1: one triflection on its own span
        let f1 = cfg.root("f1").unwrap().clone();
        let span1 = cfg.lattice().sublattice_span(&[f1.clone()]).unwrap();
        let t1 = complex_reflection(&span1, &f1, &omega).unwrap();
        assert_eq!(
            bfs_group_closure(&[t1.matrix().clone()], 100).unwrap(),
            ClosureResult::Order(3)
        );
        // A2: two braiding triflections generate a group of order 24
        let e1 = cfg.root("e1").unwrap().clone();
        let span2 = cfg
            .lattice()
            .sublattice_span(&[e1.clone(), f1.clone()])
            .unwrap();
        let g1 = complex_reflection(&span2, &e1, &omega).unwrap();
        let g2 = complex_reflection(&span2, &f1, &omega).unwrap();
        assert_eq!(
            bfs_group_closure(&[g1.matrix().clone(), g2.matrix().clone()], 1000).unwrap(),
            ClosureResult::Order(24)
        );
        // generator order does not matter
        assert_eq!(
            bfs_group_closure(&[g2.matrix().clone(), g1.matrix().clone()], 1000).unwrap(),
            ClosureResult::Order(24)
        );
        // cap respected
        assert_eq!(
            bfs_group_closure(&[g1.matrix().clone(), g2.matrix().clone()], 10).unwrap(),
            ClosureResult::ExceedsCap
        );
    }

    #[test]
    fn packed_closure_agrees_with_generic() {
        let cfg = crate::roots::seed_y555_roots();
        let omega = EisensteinInt::ring_generator();
        let f1 = cfg.root("f1").unwrap().clone();
        let e1 = cfg.root("e1").unwrap().clone();
        let span2 = cfg
            .lattice()
            .sublattice_span(&[e1.clone(), f1.clone()])
            .unwrap();
        let g1 = complex_reflection(&span2, &e1, &omega).unwrap();
        let g2 = complex_reflection(&span2, &f1, &omega).unwrap();
        let gens = [g1.matrix().clone(), g2.matrix().clone()];
        assert_eq!(
            bfs_group_closure_packed(&gens, 1000).unwrap(),
            bfs_group_closure(&gens, 1000).unwrap()
        );
    }

    #[test]
    fn schreier_sims_basics() {
        // single transposition
        let swap: Perm = vec![1, 0, 2];
        assert_eq!(schreier_sims_order(&[swap]).unwrap(), 2);
        // S4 from a transposition and a 4-cycle
        let t: Perm = vec![1, 0, 2, 3];
        let c: Perm = vec![1, 2, 3, 0];
        assert_eq!(schreier_sims_order(&[t, c]).unwrap(), 24);
    }

    #[test]
    fn schreier_sims_agrees_with_bfs_on_reduced_chain() {
        let cfg = crate::roots::seed_y555_roots();
        let omega = EisensteinInt::ring_generator();
        let theta = EisensteinInt::ramified_prime();
        let f1 = cfg.root("f1").unwrap().clone();
        let e1 = cfg.root("e1").unwrap().clone();
        let span2 = cfg
            .lattice()
            .sublattice_span(&[e1.clone(), f1.clone()])
            .unwrap();
        let g1 = complex_reflection(&span2, &e1, &omega).unwrap();
        let g2 = complex_reflection(&span2, &f1, &omega).unwrap();
        let r1 = reduce_lattice_isometry(&g1, &theta).unwrap();
        let r2 = reduce_lattice_isometry(&g2, &theta).unwrap();
        let bfs = bfs_group_closure(&[r1.clone(), r2.clone()], 10_000)
            .unwrap()
            .order()
            .unwrap();
        let perms = matrices_to_vector_permutations::<F3>(&[r1, r2]).unwrap();
        let ss = schreier_sims_order(&perms).unwrap();
        assert_eq!(bfs, ss);
        assert_eq!(ss, 24);
    }
}
