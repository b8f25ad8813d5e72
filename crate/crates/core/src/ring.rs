//! Exact scalar arithmetic: Eisenstein integers Z[ω], Gaussian integers Z[i],
//! rational integers, the residue fields F2 and F3, and fraction fields with
//! integer denominators.
//!
//! All integer components are arbitrary precision. Every operation is exact;
//! nothing here rounds except Euclidean division, whose rounding rule is part
//! of its contract.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Common surface of every exact scalar used by the matrix code.
pub trait RingElem: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Complex conjugation; the identity on rings fixed by it.
    fn conj(&self) -> Self;
    /// Exact division: `Some(q)` iff `self == q * other`.
    fn exact_div(&self, other: &Self) -> Option<Self>;
    /// Appends a canonical byte encoding (equal values, equal bytes).
    fn write_canonical_bytes(&self, out: &mut Vec<u8>);
}

/// Scalars forming a field.
pub trait FieldElem: RingElem {
    /// `None` iff zero.
    fn inv(&self) -> Option<Self>;
}

/// Finite prime fields, convertible to and from small integers.
pub trait PrimeField: FieldElem + Copy {
    const CHAR: u8;
    fn from_u8(v: u8) -> Self;
    fn to_u8(&self) -> u8;
}

/// Rings whose elements have integer components: Z[ω], Z[i], and Z itself.
/// These are the rings that fraction fields are built over.
pub trait IntegralRing: RingElem {
    /// gcd of the absolute values of all integer components.
    fn content(&self) -> BigInt;
    /// Multiplies every component by `k`.
    fn mul_int(&self, k: &BigInt) -> Self;
    /// Divides every component by `k`, which must divide exactly.
    fn div_int_exact(&self, k: &BigInt) -> Self;
    /// x * conj(x) as a nonnegative rational integer.
    fn norm_to_int(&self) -> BigInt;
    /// `Some(a)` when the value is the rational integer `a`.
    fn as_int(&self) -> Option<BigInt>;
}

/// The two imaginary quadratic rings of the toolkit. `Residue` is the field
/// the ring maps onto modulo its ramified prime (θ = 1+2ω over Z[ω] gives F3,
/// 1+i over Z[i] gives F2).
pub trait ComplexRing: IntegralRing {
    type Residue: FieldElem + Copy;
    /// 3 for Z[ω], 2 for Z[i].
    const RESIDUE_CHAR: u8;
    /// Short ring tag used in serialized files: "E" or "G".
    const RING_TAG: &'static str;
    /// Norm of a root in this ring's lattices: −3 for Z[ω], −2 for Z[i].
    const ROOT_NORM: i64;

    fn from_pair(a: i64, b: i64) -> Self;
    fn from_bigints(a: BigInt, b: BigInt) -> Self;
    fn components(&self) -> (&BigInt, &BigInt);
    /// ω resp. i: the generator adjoined to Z.
    fn ring_generator() -> Self;
    /// θ = 1+2ω resp. 1+i.
    fn ramified_prime() -> Self;
    /// Unit group in the fixed backtracking order.
    fn units() -> Vec<Self>;
    fn is_unit(&self) -> bool {
        self.norm_to_int() == BigInt::from(1)
    }
    /// True when the value is fixed by conjugation.
    fn is_real(&self) -> bool;
    /// 2·Re(x) as an exact integer.
    fn twice_re(&self) -> BigInt;
    /// κ·Re(x) for the ring's integral form scaling (κ = 2/3 resp. 1);
    /// `None` when the result is not an integer.
    fn scaled_re(&self) -> Option<BigInt>;
    /// Rounded division: each coordinate of the exact fraction x/y rounded to
    /// the nearest integer, ties toward zero. Guarantees N(r) < N(y).
    fn div_rem(&self, other: &Self) -> Result<(Self, Self)>;
    /// Remainder with translation-invariant rounding (ties round up), so the
    /// result depends only on the residue class. Used for canonical forms.
    fn rem_canonical(&self, modulus: &Self) -> Result<Self>;
    /// The canonical associate together with the unit u such that
    /// `canonical = u * self`: lexicographically smallest (a, b) among unit
    /// multiples with a > 0, falling back to a = 0, b > 0.
    fn canonical_associate(&self) -> (Self, Self);
    /// Image in the residue field modulo the ramified prime.
    fn reduce_ramified(&self) -> Self::Residue;
    /// The ring's multiplication rule on word-size component pairs;
    /// `None` on overflow. Semantics agree with [`RingElem::mul`].
    fn mul_pair_i64(x: (i64, i64), y: (i64, i64)) -> Option<(i64, i64)>;
}

/// Rounded quotient n/d with d > 0, ties toward zero.
fn round_div_ties_to_zero(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d); // truncating: r has the sign of n
    let two_r_abs = r.abs() * 2;
    if two_r_abs > *d {
        if r.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

/// Rounded quotient n/d with d > 0, ties toward +∞ (translation invariant).
fn round_div_half_up(n: &BigInt, d: &BigInt) -> BigInt {
    let num: BigInt = n * 2 + d;
    num.div_floor(&(d * 2))
}

macro_rules! quadratic_ring {
    ($name:ident, $gen_sym:literal) => {
        #[derive(Clone, PartialEq, Eq, Hash, Debug)]
        pub struct $name {
            a: BigInt,
            b: BigInt,
        }

        impl $name {
            pub fn new<A: Into<BigInt>, B: Into<BigInt>>(a: A, b: B) -> Self {
                Self {
                    a: a.into(),
                    b: b.into(),
                }
            }

            pub fn from_int<A: Into<BigInt>>(a: A) -> Self {
                Self::new(a.into(), BigInt::zero())
            }

            pub fn a(&self) -> &BigInt {
                &self.a
            }

            pub fn b(&self) -> &BigInt {
                &self.b
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.b.is_zero() {
                    write!(f, "{}", self.a)
                } else if self.a.is_zero() {
                    write!(f, "{}{}", self.b, $gen_sym)
                } else if self.b.is_negative() {
                    write!(f, "{}{}{}", self.a, self.b, $gen_sym)
                } else {
                    write!(f, "{}+{}{}", self.a, self.b, $gen_sym)
                }
            }
        }
    };
}

quadratic_ring!(EisensteinInt, "ω");
quadratic_ring!(GaussianInt, "i");

impl RingElem for EisensteinInt {
    fn zero() -> Self {
        Self::new(0, 0)
    }
    fn one() -> Self {
        Self::new(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Self::new(&self.a + &other.a, &self.b + &other.b)
    }
    fn sub(&self, other: &Self) -> Self {
        Self::new(&self.a - &other.a, &self.b - &other.b)
    }
    // (a+bω)(c+dω) = (ac − bd) + (ad + bc − bd)ω  since ω² = −1−ω
    fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.a, &self.b);
        let (c, d) = (&other.a, &other.b);
        let bd = b * d;
        Self::new(a * c - &bd, a * d + b * c - &bd)
    }
    fn neg(&self) -> Self {
        Self::new(-&self.a, -&self.b)
    }
    // conj(a+bω) = (a−b) − bω  since ω̄ = ω² = −1−ω
    fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -&self.b)
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let num = self.mul(&other.conj());
        let den = other.norm_to_int();
        let (qa, ra) = num.a.div_rem(&den);
        let (qb, rb) = num.b.div_rem(&den);
        if ra.is_zero() && rb.is_zero() {
            Some(Self::new(qa, qb))
        } else {
            None
        }
    }
    fn write_canonical_bytes(&self, out: &mut Vec<u8>) {
        write_bigint_bytes(&self.a, out);
        write_bigint_bytes(&self.b, out);
    }
}

impl RingElem for GaussianInt {
    fn zero() -> Self {
        Self::new(0, 0)
    }
    fn one() -> Self {
        Self::new(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Self::new(&self.a + &other.a, &self.b + &other.b)
    }
    fn sub(&self, other: &Self) -> Self {
        Self::new(&self.a - &other.a, &self.b - &other.b)
    }
    // (a+bi)(c+di) = (ac − bd) + (ad + bc)i
    fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.a, &self.b);
        let (c, d) = (&other.a, &other.b);
        Self::new(a * c - b * d, a * d + b * c)
    }
    fn neg(&self) -> Self {
        Self::new(-&self.a, -&self.b)
    }
    fn conj(&self) -> Self {
        Self::new(self.a.clone(), -&self.b)
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let num = self.mul(&other.conj());
        let den = other.norm_to_int();
        let (qa, ra) = num.a.div_rem(&den);
        let (qb, rb) = num.b.div_rem(&den);
        if ra.is_zero() && rb.is_zero() {
            Some(Self::new(qa, qb))
        } else {
            None
        }
    }
    fn write_canonical_bytes(&self, out: &mut Vec<u8>) {
        write_bigint_bytes(&self.a, out);
        write_bigint_bytes(&self.b, out);
    }
}

macro_rules! integral_ring_quadratic {
    ($name:ident, $norm:expr) => {
        impl IntegralRing for $name {
            fn content(&self) -> BigInt {
                self.a.gcd(&self.b)
            }
            fn mul_int(&self, k: &BigInt) -> Self {
                Self::new(&self.a * k, &self.b * k)
            }
            fn div_int_exact(&self, k: &BigInt) -> Self {
                debug_assert!((&self.a % k).is_zero() && (&self.b % k).is_zero());
                Self::new(&self.a / k, &self.b / k)
            }
            fn norm_to_int(&self) -> BigInt {
                let f: fn(&BigInt, &BigInt) -> BigInt = $norm;
                f(&self.a, &self.b)
            }
            fn as_int(&self) -> Option<BigInt> {
                if self.b.is_zero() {
                    Some(self.a.clone())
                } else {
                    None
                }
            }
        }
    };
}

integral_ring_quadratic!(EisensteinInt, |a, b| a * a - a * b + b * b);
integral_ring_quadratic!(GaussianInt, |a, b| a * a + b * b);

macro_rules! complex_ring_common {
    ($name:ident) => {
        fn from_pair(a: i64, b: i64) -> Self {
            Self::new(a, b)
        }
        fn from_bigints(a: BigInt, b: BigInt) -> Self {
            Self::new(a, b)
        }
        fn components(&self) -> (&BigInt, &BigInt) {
            (&self.a, &self.b)
        }
        fn div_rem(&self, other: &Self) -> Result<(Self, Self)> {
            if other.is_zero() {
                return Err(Error::DivisionByZero);
            }
            let num = self.mul(&other.conj());
            let den = other.norm_to_int();
            let q = Self::new(
                round_div_ties_to_zero(&num.a, &den),
                round_div_ties_to_zero(&num.b, &den),
            );
            let r = self.sub(&q.mul(other));
            Ok((q, r))
        }
        fn rem_canonical(&self, modulus: &Self) -> Result<Self> {
            if modulus.is_zero() {
                return Err(Error::DivisionByZero);
            }
            let num = self.mul(&modulus.conj());
            let den = modulus.norm_to_int();
            let q = Self::new(
                round_div_half_up(&num.a, &den),
                round_div_half_up(&num.b, &den),
            );
            Ok(self.sub(&q.mul(modulus)))
        }
        fn canonical_associate(&self) -> (Self, Self) {
            if self.is_zero() {
                return (Self::zero(), Self::one());
            }
            // rank 0: a > 0, rank 1: a = 0 and b > 0; lex (a, b) within a rank
            fn rank(x: &BigInt, y: &BigInt) -> u8 {
                if x.is_positive() {
                    0
                } else if x.is_zero() && y.is_positive() {
                    1
                } else {
                    2
                }
            }
            let mut best: Option<(Self, Self)> = None;
            for u in Self::units() {
                let cand = self.mul(&u);
                let take = match &best {
                    None => true,
                    Some((cur, _)) => {
                        let (rc, rb) = (rank(&cand.a, &cand.b), rank(&cur.a, &cur.b));
                        rc < rb || (rc == rb && (&cand.a, &cand.b) < (&cur.a, &cur.b))
                    }
                };
                if take {
                    best = Some((cand, u));
                }
            }
            best.expect("nonzero element has associates")
        }
    };
}

impl ComplexRing for EisensteinInt {
    type Residue = F3;
    const RESIDUE_CHAR: u8 = 3;
    const RING_TAG: &'static str = "E";
    const ROOT_NORM: i64 = -3;

    complex_ring_common!(EisensteinInt);

    fn ring_generator() -> Self {
        Self::new(0, 1)
    }
    // θ = ω − ω̄ = 1 + 2ω
    fn ramified_prime() -> Self {
        Self::new(1, 2)
    }
    fn units() -> Vec<Self> {
        // 1, −1, ω, −ω, ω², −ω²  (fixed backtracking order)
        vec![
            Self::new(1, 0),
            Self::new(-1, 0),
            Self::new(0, 1),
            Self::new(0, -1),
            Self::new(-1, -1),
            Self::new(1, 1),
        ]
    }
    fn is_real(&self) -> bool {
        self.b.is_zero()
    }
    // Re(a+bω) = a − b/2
    fn twice_re(&self) -> BigInt {
        &self.a * 2 - &self.b
    }
    // (2/3)·Re(a+bω) = (2a − b)/3
    fn scaled_re(&self) -> Option<BigInt> {
        let t = self.twice_re();
        let (q, r) = t.div_rem(&BigInt::from(3));
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
    // ω ≡ 1 (mod θ), so a+bω ↦ a+b mod 3
    fn reduce_ramified(&self) -> F3 {
        let m = (&self.a + &self.b).mod_floor(&BigInt::from(3));
        F3(u8::try_from(m).expect("mod 3 fits"))
    }
    fn mul_pair_i64((a, b): (i64, i64), (c, d): (i64, i64)) -> Option<(i64, i64)> {
        let ac = a.checked_mul(c)?;
        let bd = b.checked_mul(d)?;
        let ad = a.checked_mul(d)?;
        let bc = b.checked_mul(c)?;
        Some((ac.checked_sub(bd)?, ad.checked_add(bc)?.checked_sub(bd)?))
    }
}

impl ComplexRing for GaussianInt {
    type Residue = F2;
    const RESIDUE_CHAR: u8 = 2;
    const RING_TAG: &'static str = "G";
    const ROOT_NORM: i64 = -2;

    complex_ring_common!(GaussianInt);

    fn ring_generator() -> Self {
        Self::new(0, 1)
    }
    fn ramified_prime() -> Self {
        Self::new(1, 1)
    }
    fn units() -> Vec<Self> {
        // 1, −1, i, −i
        vec![
            Self::new(1, 0),
            Self::new(-1, 0),
            Self::new(0, 1),
            Self::new(0, -1),
        ]
    }
    fn is_real(&self) -> bool {
        self.b.is_zero()
    }
    fn twice_re(&self) -> BigInt {
        &self.a * 2
    }
    // κ = 1 for the Gaussian integral form
    fn scaled_re(&self) -> Option<BigInt> {
        Some(self.a.clone())
    }
    // i ≡ 1 (mod 1+i), so a+bi ↦ a+b mod 2
    fn reduce_ramified(&self) -> F2 {
        let m = (&self.a + &self.b).mod_floor(&BigInt::from(2));
        F2(u8::try_from(m).expect("mod 2 fits"))
    }
    fn mul_pair_i64((a, b): (i64, i64), (c, d): (i64, i64)) -> Option<(i64, i64)> {
        let ac = a.checked_mul(c)?;
        let bd = b.checked_mul(d)?;
        let ad = a.checked_mul(d)?;
        let bc = b.checked_mul(c)?;
        Some((ac.checked_sub(bd)?, ad.checked_add(bc)?))
    }
}

/// Reduction of `x` modulo the ramified prime; `modulus` must be a unit
/// multiple of it.
pub fn reduce_mod<R: ComplexRing>(x: &R, modulus: &R) -> Result<R::Residue> {
    let p = R::ramified_prime();
    let ok = R::units().iter().any(|u| p.mul(u) == *modulus);
    if !ok {
        return Err(Error::UnsupportedModulus(modulus.to_string()));
    }
    Ok(x.reduce_ramified())
}

/// Rational integers wrapped as a ring element (conjugation-fixed).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ZInt(pub BigInt);

impl ZInt {
    pub fn new<A: Into<BigInt>>(a: A) -> Self {
        Self(a.into())
    }
}

impl fmt::Display for ZInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl RingElem for ZInt {
    fn zero() -> Self {
        Self(BigInt::zero())
    }
    fn one() -> Self {
        Self(BigInt::from(1))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Self(-&self.0)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.0.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&other.0);
        if r.is_zero() {
            Some(Self(q))
        } else {
            None
        }
    }
    fn write_canonical_bytes(&self, out: &mut Vec<u8>) {
        write_bigint_bytes(&self.0, out);
    }
}

impl IntegralRing for ZInt {
    fn content(&self) -> BigInt {
        self.0.abs()
    }
    fn mul_int(&self, k: &BigInt) -> Self {
        Self(&self.0 * k)
    }
    fn div_int_exact(&self, k: &BigInt) -> Self {
        debug_assert!((&self.0 % k).is_zero());
        Self(&self.0 / k)
    }
    fn norm_to_int(&self) -> BigInt {
        &self.0 * &self.0
    }
    fn as_int(&self) -> Option<BigInt> {
        Some(self.0.clone())
    }
}

macro_rules! prime_field {
    ($name:ident, $p:literal) => {
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
        pub struct $name(pub u8);

        impl $name {
            pub fn new(v: i64) -> Self {
                Self((v.rem_euclid($p)) as u8)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }

        impl RingElem for $name {
            fn zero() -> Self {
                Self(0)
            }
            fn one() -> Self {
                Self(1)
            }
            fn is_zero(&self) -> bool {
                self.0 == 0
            }
            fn add(&self, other: &Self) -> Self {
                Self((self.0 + other.0) % $p)
            }
            fn sub(&self, other: &Self) -> Self {
                Self((self.0 + $p - other.0) % $p)
            }
            fn mul(&self, other: &Self) -> Self {
                Self((self.0 * other.0) % $p)
            }
            fn neg(&self) -> Self {
                Self(($p - self.0) % $p)
            }
            fn conj(&self) -> Self {
                *self
            }
            fn exact_div(&self, other: &Self) -> Option<Self> {
                other.inv().map(|i| self.mul(&i))
            }
            fn write_canonical_bytes(&self, out: &mut Vec<u8>) {
                out.push(self.0);
            }
        }

        impl FieldElem for $name {
            fn inv(&self) -> Option<Self> {
                if self.0 == 0 {
                    return None;
                }
                for c in 1..$p {
                    if (self.0 * c) % $p == 1 {
                        return Some(Self(c));
                    }
                }
                unreachable!("prime modulus");
            }
        }

        impl PrimeField for $name {
            const CHAR: u8 = $p;
            fn from_u8(v: u8) -> Self {
                Self(v % $p)
            }
            fn to_u8(&self) -> u8 {
                self.0
            }
        }
    };
}

prime_field!(F2, 2);
prime_field!(F3, 3);

/// Element of the fraction field of `R`: numerator over a positive integer
/// denominator, kept reduced (content gcd 1).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Frac<R: IntegralRing> {
    num: R,
    den: BigInt,
}

impl<R: IntegralRing> Frac<R> {
    pub fn new(num: R, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(mut num: R, mut den: BigInt) -> Self {
        if den.is_negative() {
            num = num.neg();
            den = -den;
        }
        if num.is_zero() {
            return Self {
                num,
                den: BigInt::from(1),
            };
        }
        let g = num.content().gcd(&den);
        if g > BigInt::from(1) {
            num = num.div_int_exact(&g);
            den = den / g;
        }
        Self { num, den }
    }

    pub fn from_ring(r: R) -> Self {
        Self {
            num: r,
            den: BigInt::from(1),
        }
    }

    pub fn numerator(&self) -> &R {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// `Some(r)` when the fraction is integral.
    pub fn to_ring(&self) -> Option<R> {
        if self.den == BigInt::from(1) {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn is_integral(&self) -> bool {
        self.den == BigInt::from(1)
    }
}

impl<R: IntegralRing> fmt::Display for Frac<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == BigInt::from(1) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

impl<R: IntegralRing> RingElem for Frac<R> {
    fn zero() -> Self {
        Self::from_ring(R::zero())
    }
    fn one() -> Self {
        Self::from_ring(R::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul_int(&other.den)
            .add(&other.num.mul_int(&self.den));
        Self::reduced(num, &self.den * &other.den)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        Self::reduced(self.num.mul(&other.num), &self.den * &other.den)
    }
    fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn conj(&self) -> Self {
        Self {
            num: self.num.conj(),
            den: self.den.clone(),
        }
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
    fn write_canonical_bytes(&self, out: &mut Vec<u8>) {
        self.num.write_canonical_bytes(out);
        write_bigint_bytes(&self.den, out);
    }
}

impl<R: IntegralRing> FieldElem for Frac<R> {
    // (n/d)⁻¹ = d·conj(n) / N(n)
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let num = self.num.conj().mul_int(&self.den);
        let den = self.num.norm_to_int();
        Some(Self::reduced(num, den))
    }
}

fn write_bigint_bytes(x: &BigInt, out: &mut Vec<u8>) {
    let bytes = x.to_signed_bytes_le();
    out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
    out.extend_from_slice(&bytes);
}

/// N(x) = x·conj(x) as a nonnegative integer (the field norm).
pub fn field_norm<R: IntegralRing>(x: &R) -> BigInt {
    x.norm_to_int()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ei(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }
    fn gi(a: i64, b: i64) -> GaussianInt {
        GaussianInt::new(a, b)
    }

    #[test]
    fn omega_squared_relation() {
        let omega = EisensteinInt::ring_generator();
        // ω·ω = −1−ω
        assert_eq!(omega.mul(&omega), ei(-1, -1));
        // ω² + ω + 1 = 0
        let sum = omega.mul(&omega).add(&omega).add(&EisensteinInt::one());
        assert!(sum.is_zero());
    }

    #[test]
    fn theta_squared_is_minus_three() {
        let theta = EisensteinInt::ramified_prime();
        assert_eq!(theta.mul(&theta), ei(-3, 0));
        assert_eq!(theta.norm_to_int(), 3.into());
        // θ̄ = −θ
        assert_eq!(theta.conj(), theta.neg());
    }

    #[test]
    fn gaussian_basics() {
        let x = gi(1, 1);
        let y = gi(1, -1);
        assert_eq!(x.mul(&y), gi(2, 0));
        assert_eq!(x.conj(), y);
        assert_eq!(x.norm_to_int(), 2.into());
    }

    #[test]
    fn conj_is_automorphism() {
        let x = ei(3, -2);
        let y = ei(-1, 5);
        assert_eq!(x.conj().conj(), x);
        assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
        assert_eq!(ei(0, 1).conj(), ei(-1, -1)); // ω̄ = −1−ω
    }

    #[test]
    fn norm_examples() {
        assert_eq!(ei(2, 1).norm_to_int(), 3.into()); // N(2+ω) = 4−2+1
        assert_eq!(gi(1, 1).norm_to_int(), 2.into());
        assert_eq!(field_norm(&EisensteinInt::ramified_prime()), 3.into());
    }

    #[test]
    fn euclidean_division() {
        let theta = EisensteinInt::ramified_prime();
        // 3 = θ·(−θ)
        let (q, r) = ei(3, 0).div_rem(&theta).unwrap();
        assert_eq!(q, theta.neg());
        assert!(r.is_zero());
        // identity divisor
        let x = ei(7, -4);
        let (q, r) = x.div_rem(&EisensteinInt::one()).unwrap();
        assert_eq!(q, x);
        assert!(r.is_zero());
        // division by zero reported
        assert!(x.div_rem(&EisensteinInt::zero()).is_err());
        // Gaussian remainder bound N(r) ≤ 1 for 1/(1+i)
        let (_, r) = gi(1, 0).div_rem(&gi(1, 1)).unwrap();
        assert!(r.norm_to_int() <= 1.into());
    }

    #[test]
    fn remainder_norm_contraction() {
        // N(r) ≤ (3/4)N(y) Eisenstein, N(r) ≤ (1/2)N(y) Gaussian
        let cases = [
            (ei(123, -45), ei(7, 3)),
            (ei(-8, 17), ei(2, -5)),
            (ei(1, 0), ei(1, 1)),
        ];
        for (x, y) in cases {
            let (q, r) = x.div_rem(&y).unwrap();
            assert_eq!(q.mul(&y).add(&r), x);
            assert!(r.norm_to_int() * 4 <= y.norm_to_int() * 3);
        }
        let (q, r) = gi(100, -3).div_rem(&gi(3, 7)).unwrap();
        assert_eq!(q.mul(&gi(3, 7)).add(&r), gi(100, -3));
        assert!(r.norm_to_int() * 2 <= gi(3, 7).norm_to_int());
    }

    #[test]
    fn canonical_remainder_is_class_function() {
        let p = EisensteinInt::ramified_prime();
        let x = ei(5, -7);
        let shifted = x.add(&p.mul(&ei(12, -9)));
        assert_eq!(
            x.rem_canonical(&p).unwrap(),
            shifted.rem_canonical(&p).unwrap()
        );
    }

    #[test]
    fn reduce_mod_examples() {
        let theta = EisensteinInt::ramified_prime();
        assert_eq!(reduce_mod(&theta, &theta).unwrap(), F3(0));
        assert_eq!(reduce_mod(&ei(0, 1), &theta).unwrap(), F3(1)); // ω ≡ 1
        let onei = GaussianInt::ramified_prime();
        assert_eq!(reduce_mod(&onei, &onei).unwrap(), F2(0));
        // non-associate modulus rejected
        assert!(reduce_mod(&ei(1, 0), &ei(2, 0)).is_err());
    }

    #[test]
    fn reduce_mod_is_ring_hom() {
        let xs = [ei(4, -1), ei(-2, 7), ei(0, 3), ei(5, 5)];
        for x in &xs {
            for y in &xs {
                assert_eq!(
                    x.add(y).reduce_ramified(),
                    x.reduce_ramified().add(&y.reduce_ramified())
                );
                assert_eq!(
                    x.mul(y).reduce_ramified(),
                    x.reduce_ramified().mul(&y.reduce_ramified())
                );
            }
        }
    }

    #[test]
    fn canonical_associate_of_theta() {
        let theta = EisensteinInt::ramified_prime();
        let (canon, unit) = theta.canonical_associate();
        assert_eq!(canon, theta.mul(&unit));
        // every associate has the same canonical form
        for u in EisensteinInt::units() {
            let (c2, _) = theta.mul(&u).canonical_associate();
            assert_eq!(c2, canon);
        }
        assert!(canon.a().is_positive());
    }

    #[test]
    fn fraction_reduction_and_inverse() {
        let f = Frac::new(ei(2, 4), BigInt::from(-6)).unwrap();
        assert_eq!(*f.denominator(), 3.into());
        assert_eq!(*f.numerator(), ei(-1, -2));
        let g = f.inv().unwrap();
        assert_eq!(f.mul(&g), Frac::one());
        // 3/θ = −θ
        let three = Frac::from_ring(ei(3, 0));
        let theta = Frac::from_ring(EisensteinInt::ramified_prime());
        let q = three.mul(&theta.inv().unwrap());
        assert_eq!(q.to_ring().unwrap(), EisensteinInt::ramified_prime().neg());
    }

    #[test]
    fn field_norm_multiplicative_spotcheck() {
        let xs = [ei(3, 2), ei(-5, 1), ei(0, -4)];
        for x in &xs {
            for y in &xs {
                assert_eq!(
                    x.mul(y).norm_to_int(),
                    x.norm_to_int() * y.norm_to_int()
                );
            }
        }
    }
}
