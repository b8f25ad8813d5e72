//! Exhaustive short-vector enumeration in definite sublattices, used as an
//! independent oracle for the constrained root searches.
//!
//! The search runs over the underlying Z-lattice. Coordinate boxes come from
//! the diagonal of the inverse Gram; inside the box a rational LDL
//! decomposition prunes by exact partial sums, so the enumeration is both
//! complete and exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::HermitianLattice;
use crate::linalg::Matrix;
use crate::ring::{ComplexRing, Frac, RingElem, ZInt};

type Q = Frac<ZInt>;

fn q_int(v: i64) -> Q {
    Frac::from_ring(ZInt::new(v))
}

fn q_le(a: &Q, b: &Q) -> bool {
    // denominators are positive
    a.numerator().0.clone() * b.denominator() <= b.numerator().0.clone() * a.denominator()
}

fn q_floor(a: &Q) -> BigInt {
    a.numerator().0.div_floor(a.denominator())
}

fn q_ceil(a: &Q) -> BigInt {
    -((-a.numerator().0.clone()).div_floor(a.denominator()))
}

/// Rational upper bound for sqrt(t), t ≥ 0.
fn q_sqrt_upper(t: &Q) -> Q {
    let prod = t.numerator().0.clone() * t.denominator();
    let root = prod.sqrt() + 1;
    Frac::new(ZInt(root), t.denominator().clone()).expect("positive denominator")
}

/// LDL data for a positive definite rational matrix: q(x) = Σ d_i (x_i + Σ_{j>i} u_ij x_j)².
struct Ldl {
    d: Vec<Q>,
    u: Vec<Vec<Q>>, // u[i][j] defined for j > i
}

fn ldl(a: &Matrix<ZInt>) -> Result<Ldl> {
    let n = a.nrows();
    let mut q: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| Frac::from_ring(a.at(i, j).clone())).collect())
        .collect();
    let mut d = Vec::with_capacity(n);
    let mut u = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        let di = q[i][i].clone();
        if q_le(&di, &q_int(0)) {
            return Err(Error::InvalidInput(
                "matrix is not positive definite".into(),
            ));
        }
        for j in i + 1..n {
            u[i][j] = q[i][j].exact_div(&di).expect("pivot nonzero");
        }
        for k in i + 1..n {
            for l in i + 1..n {
                let t = q[k][i].mul(&q[i][l]).exact_div(&di).expect("pivot nonzero");
                q[k][l] = q[k][l].sub(&t);
            }
        }
        d.push(di);
    }
    Ok(Ldl { d, u })
}

/// All integer vectors x ≠ 0 with xᵀAx ≤ bound, for positive definite A.
/// Errors when the coordinate box volume exceeds `volume_cap`.
pub fn short_z_vectors(
    a: &Matrix<ZInt>,
    bound: &BigInt,
    volume_cap: u64,
) -> Result<Vec<Vec<BigInt>>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    let n = a.nrows();
    if bound.is_negative() {
        return Ok(Vec::new());
    }
    // box bound from the dual Gram: x_i² ≤ bound · (A⁻¹)_ii
    let inv = a.to_field().inverse().map_err(|_| Error::SingularMatrix)?;
    let mut volume = BigInt::from(1);
    for i in 0..n {
        let cap_i = inv.at(i, i).mul(&Frac::from_ring(ZInt(bound.clone())));
        let s = q_sqrt_upper(&cap_i);
        let b = q_floor(&s) + 1;
        volume *= b * 2 + 1;
    }
    if volume > BigInt::from(volume_cap) {
        return Err(Error::EnumerationTooLarge(format!(
            "box volume {volume} exceeds cap {volume_cap}"
        )));
    }

    let dec = ldl(a)?;
    let bound_q = Frac::from_ring(ZInt(bound.clone()));
    let mut x = vec![BigInt::zero(); n];
    let mut out = Vec::new();

    // enumerate from the last coordinate down; budgets stay exact rationals
    fn rec(
        dec: &Ldl,
        level: isize,
        budget: &Q,
        x: &mut Vec<BigInt>,
        out: &mut Vec<Vec<BigInt>>,
    ) {
        if level < 0 {
            if x.iter().any(|c| !c.is_zero()) {
                out.push(x.clone());
            }
            return;
        }
        let i = level as usize;
        let n = x.len();
        let mut center = Q::zero();
        for j in i + 1..n {
            center = center.add(&dec.u[i][j].mul(&Frac::from_ring(ZInt(x[j].clone()))));
        }
        let ratio = budget.exact_div(&dec.d[i]).expect("positive diagonal");
        let s = q_sqrt_upper(&ratio);
        let lo = q_ceil(&center.neg().sub(&s));
        let hi = q_floor(&center.neg().add(&s));
        let mut xi = lo;
        while xi <= hi {
            let shifted = Frac::from_ring(ZInt(xi.clone())).add(&center);
            let term = dec.d[i].mul(&shifted).mul(&shifted);
            if q_le(&term, budget) {
                x[i] = xi.clone();
                let next = budget.sub(&term);
                rec(dec, level - 1, &next, x, out);
                x[i] = BigInt::zero();
            }
            xi += 1;
        }
    }

    rec(&dec, n as isize - 1, &bound_q, &mut x, &mut out);
    out.sort();
    Ok(out)
}

/// All lattice vectors with |norm| ≤ `norm_bound` in a negative definite
/// sublattice of rank ≤ 8, including the zero vector. Returns (vector, norm)
/// pairs in a deterministic order.
pub fn enumerate_short_vectors<R: ComplexRing>(
    lat: &HermitianLattice<R>,
    norm_bound: u64,
    volume_cap: u64,
) -> Result<Vec<(Vec<R>, R)>> {
    if lat.rank() > 8 {
        return Err(Error::EnumerationTooLarge(format!(
            "rank {} exceeds the enumeration limit",
            lat.rank()
        )));
    }
    let z = lat.underlying_z_gram()?;
    let a = z.neg();
    // |norm| ≤ B over the ring maps to κ·B over Z
    let zbound = match R::RESIDUE_CHAR {
        3 => BigInt::from(norm_bound * 2 / 3),
        _ => BigInt::from(norm_bound),
    };
    let zvecs = short_z_vectors(&a, &zbound, volume_cap)?;
    let g = R::ring_generator();
    let rank = lat.rank();
    let mut out = Vec::with_capacity(zvecs.len() + 1);
    let zero = vec![R::zero(); lat.ambient_dim()];
    out.push((zero.clone(), R::zero()));
    for zv in zvecs {
        // interleaved Z-basis (v_j, g·v_j)
        let mut coords = Vec::with_capacity(rank);
        for j in 0..rank {
            let c = R::from_bigints(zv[2 * j].clone(), BigInt::zero())
                .add(&R::from_bigints(zv[2 * j + 1].clone(), BigInt::zero()).mul(&g));
            coords.push(c);
        }
        let v = lat.from_coords(&coords)?;
        let norm = lat.norm(&v)?;
        out.push((v, norm));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_eisenstein_lattice, eisenstein_seed_vectors};
    use crate::ring::EisensteinInt;

    #[test]
    fn rank_one_root_lattice_has_six_units() {
        let lat = build_eisenstein_lattice();
        let f1 = eisenstein_seed_vectors()
            .into_iter()
            .find(|(l, _)| l == "f1")
            .unwrap()
            .1;
        let sub = lat.sublattice_span(&[f1]).unwrap();
        let vs = enumerate_short_vectors(&sub, 3, 1_000_000).unwrap();
        // zero + the six unit multiples of the root
        assert_eq!(vs.len(), 7);
        let nonzero: Vec<_> = vs
            .iter()
            .filter(|(_, n)| !n.is_zero())
            .collect();
        assert_eq!(nonzero.len(), 6);
        for (_, n) in nonzero {
            assert_eq!(*n, EisensteinInt::new(-3, 0));
        }
    }

    #[test]
    fn bound_zero_gives_only_zero() {
        let lat = build_eisenstein_lattice();
        let f1 = eisenstein_seed_vectors()
            .into_iter()
            .find(|(l, _)| l == "f1")
            .unwrap()
            .1;
        let sub = lat.sublattice_span(&[f1]).unwrap();
        let vs = enumerate_short_vectors(&sub, 0, 1_000_000).unwrap();
        assert_eq!(vs.len(), 1);
        assert!(vs[0].1.is_zero());
    }

    #[test]
    fn e8_block_has_240_roots() {
        let lat = build_eisenstein_lattice();
        let roots: std::collections::BTreeMap<_, _> =
            eisenstein_seed_vectors().into_iter().collect();
        let block: Vec<Vec<EisensteinInt>> = ["c1", "d1", "e1", "f1"]
            .iter()
            .map(|l| roots[&l.to_string()].clone())
            .collect();
        let sub = lat.sublattice_span(&block).unwrap();
        assert_eq!(sub.rank(), 4);
        let vs = enumerate_short_vectors(&sub, 3, 100_000_000).unwrap();
        let count = vs
            .iter()
            .filter(|(_, n)| *n == EisensteinInt::new(-3, 0))
            .count();
        assert_eq!(count, 240);
        // nothing besides zero and the roots within this bound
        assert_eq!(vs.len(), 241);
    }

    #[test]
    fn indefinite_sublattice_rejected() {
        let lat = build_eisenstein_lattice();
        let mut e13 = vec![EisensteinInt::new(0, 0); 14];
        e13[12] = EisensteinInt::new(1, 0);
        let mut e14 = vec![EisensteinInt::new(0, 0); 14];
        e14[13] = EisensteinInt::new(1, 0);
        let cell = lat.sublattice_span(&[e13, e14]).unwrap();
        assert!(enumerate_short_vectors(&cell, 3, 1_000_000).is_err());
    }
}
