//! Coefficient rings for the Hecke algebra and everything built on it.
//!
//! All higher layers are generic over [`CoeffRing`]: the same code runs over
//! the generic ring `Z[q^{±1}, Q^{±1}]`, over the rationals at a concrete
//! parameter choice, and over a prime field.  The ring object carries the
//! parameter values, symbolica-style, and elements stay plain data.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;

/// Ring operations plus access to the invertible parameters q and Q.
pub trait CoeffRing: Clone + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;
    /// `q^i * Q^j`.  Both parameters are invertible, so any exponents work.
    fn monomial(&self, i: i32, j: i32) -> Self::Elem;
    fn fmt_elem(&self, a: &Self::Elem) -> String;

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }
    fn q(&self) -> Self::Elem {
        self.monomial(1, 0)
    }
    fn big_q(&self) -> Self::Elem {
        self.monomial(0, 1)
    }
    /// `q - 1`, the recurring coefficient of the quadratic relation.
    fn q_minus_one(&self) -> Self::Elem {
        self.sub(&self.q(), &self.one())
    }
    fn big_q_minus_one(&self) -> Self::Elem {
        self.sub(&self.big_q(), &self.one())
    }
    /// Scale-and-add, the inner loop of all linear algebra here.
    fn axpy(&self, acc: &mut Self::Elem, c: &Self::Elem, x: &Self::Elem) {
        let p = self.mul(c, x);
        self.add_assign(acc, &p);
    }
}

/// Rings whose nonzero elements are invertible; enables plain elimination.
pub trait CoeffField: CoeffRing {
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
}

/// The universal coefficient ring `Z[q^{±1}, Q^{±1}]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenericRing;

impl CoeffRing for GenericRing {
    type Elem = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one()
    }
    fn is_zero(&self, a: &LaurentPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.add(b)
    }
    fn sub(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.sub(b)
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.mul(b)
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        a.neg()
    }
    fn from_int(&self, n: i64) -> LaurentPoly {
        LaurentPoly::from_int(n)
    }
    fn monomial(&self, i: i32, j: i32) -> LaurentPoly {
        LaurentPoly::monomial(1.into(), i, j)
    }
    fn fmt_elem(&self, a: &LaurentPoly) -> String {
        a.to_string()
    }
    fn add_assign(&self, a: &mut LaurentPoly, b: &LaurentPoly) {
        a.add_assign(b);
    }
}

/// The rationals with q, Q sent to fixed nonzero values.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalSpec {
    q: BigRational,
    big_q: BigRational,
    q_inv: BigRational,
    big_q_inv: BigRational,
}

impl RationalSpec {
    pub fn new(q: BigRational, big_q: BigRational) -> Result<Self, crate::Error> {
        if q.is_zero() || big_q.is_zero() {
            return Err(crate::Error::InvalidSpecialization(
                "q and Q must be nonzero".into(),
            ));
        }
        Ok(RationalSpec {
            q_inv: q.recip(),
            big_q_inv: big_q.recip(),
            q,
            big_q,
        })
    }

    pub fn from_ints(q: i64, big_q: i64) -> Result<Self, crate::Error> {
        RationalSpec::new(
            BigRational::from_integer(q.into()),
            BigRational::from_integer(big_q.into()),
        )
    }

    pub fn q_value(&self) -> &BigRational {
        &self.q
    }
    pub fn big_q_value(&self) -> &BigRational {
        &self.big_q
    }
}

fn rational_pow(base: &BigRational, inv: &BigRational, e: i32) -> BigRational {
    let (b, n) = if e >= 0 { (base, e) } else { (inv, -e) };
    let mut acc = BigRational::one();
    for _ in 0..n {
        acc *= b;
    }
    acc
}

impl CoeffRing for RationalSpec {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn monomial(&self, i: i32, j: i32) -> BigRational {
        rational_pow(&self.q, &self.q_inv, i) * rational_pow(&self.big_q, &self.big_q_inv, j)
    }
    fn fmt_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

impl CoeffField for RationalSpec {
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

/// The prime field `F_p` with q, Q sent to fixed nonzero residues.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrimeFieldSpec {
    p: u64,
    q: u64,
    big_q: u64,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeFieldSpec {
    pub fn new(p: u64, q: i64, big_q: i64) -> Result<Self, crate::Error> {
        if !is_prime(p) || p >= (1 << 31) {
            return Err(crate::Error::InvalidSpecialization(format!(
                "characteristic {} is not a prime below 2^31",
                p
            )));
        }
        let reduce = |n: i64| -> u64 { n.rem_euclid(p as i64) as u64 };
        let (q, big_q) = (reduce(q), reduce(big_q));
        if q == 0 || big_q == 0 {
            return Err(crate::Error::InvalidSpecialization(
                "q and Q must be invertible mod p".into(),
            ));
        }
        Ok(PrimeFieldSpec { p, q, big_q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn pow(&self, base: u64, e: u64) -> u64 {
        let mut acc: u64 = 1;
        let mut b = base % self.p;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = (acc as u128 * b as u128 % self.p as u128) as u64;
            }
            b = (b as u128 * b as u128 % self.p as u128) as u64;
            e >>= 1;
        }
        acc
    }

    fn inv_u64(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "division by zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }
}

impl CoeffRing for PrimeFieldSpec {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (*a as u128 * *b as u128 % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn monomial(&self, i: i32, j: i32) -> u64 {
        let qp = if i >= 0 {
            self.pow(self.q, i as u64)
        } else {
            self.pow(self.inv_u64(self.q), (-i) as u64)
        };
        let bp = if j >= 0 {
            self.pow(self.big_q, j as u64)
        } else {
            self.pow(self.inv_u64(self.big_q), (-j) as u64)
        };
        self.mul(&qp, &bp)
    }
    fn fmt_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl CoeffField for PrimeFieldSpec {
    fn inv(&self, a: &u64) -> u64 {
        self.inv_u64(*a)
    }
}

/// A concrete choice of target field and parameter values.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Specialization {
    Rational(RationalSpec),
    Prime(PrimeFieldSpec),
}

impl Specialization {
    pub fn rational(q: BigRational, big_q: BigRational) -> Result<Self, crate::Error> {
        Ok(Specialization::Rational(RationalSpec::new(q, big_q)?))
    }

    pub fn prime(p: u64, q: i64, big_q: i64) -> Result<Self, crate::Error> {
        Ok(Specialization::Prime(PrimeFieldSpec::new(p, q, big_q)?))
    }

    pub fn describe(&self) -> String {
        match self {
            Specialization::Rational(s) => format!("Q0 q={} Q={}", s.q_value(), s.big_q_value()),
            Specialization::Prime(s) => format!("F{} q={} Q={}", s.p, s.q, s.big_q),
        }
    }
}

/// Ring homomorphism `Z[q^{±1},Q^{±1}] -> R` determined by the parameter
/// values of `ring`.
pub fn specialize_in<R: CoeffRing>(ring: &R, a: &LaurentPoly) -> R::Elem {
    let mut acc = ring.zero();
    for (&(i, j), c) in a.iter() {
        let m = ring.monomial(i, j);
        let c = bigint_in(ring, c);
        ring.axpy(&mut acc, &c, &m);
    }
    acc
}

pub fn bigint_in<R: CoeffRing>(ring: &R, c: &BigInt) -> R::Elem {
    // digits in base 2^32, horner
    let mut acc = ring.zero();
    let base = ring.from_int(1i64 << 32);
    for d in c.abs().iter_u32_digits().rev() {
        acc = ring.mul(&acc, &base);
        ring.add_assign(&mut acc, &ring.from_int(d as i64));
    }
    if c.is_negative() {
        acc = ring.neg(&acc);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn specialize_examples() {
        // Q + (Q-1)q at q=1, Q=1 over the rationals -> 1
        let g = GenericRing;
        let p = g.add(&g.big_q(), &g.mul(&g.big_q_minus_one(), &g.q()));
        let s = RationalSpec::from_ints(1, 1).unwrap();
        assert_eq!(specialize_in(&s, &p), s.one());
        // q^-2 at q=2 -> 1/4
        let s = RationalSpec::from_ints(2, 1).unwrap();
        assert_eq!(
            specialize_in(&s, &LaurentPoly::q_pow(-2)),
            BigRational::new(1.into(), 4.into())
        );
        // Q*q at q=3, Q=5 in F_7 -> 15 mod 7 = 1
        let s = PrimeFieldSpec::new(7, 3, 5).unwrap();
        let p = g.mul(&g.q(), &g.big_q());
        assert_eq!(specialize_in(&s, &p), 1);
    }

    #[test]
    fn specialize_is_ring_hom() {
        let mut rng = StdRng::seed_from_u64(23);
        let g = GenericRing;
        let rat = RationalSpec::from_ints(5, -3).unwrap();
        let fp = PrimeFieldSpec::new(13, 2, 6).unwrap();
        for _ in 0..100 {
            let mut a = LaurentPoly::zero();
            let mut b = LaurentPoly::zero();
            for _ in 0..4 {
                a.add_assign(&LaurentPoly::monomial(
                    BigInt::from(rng.gen_range(-9i64..=9)),
                    rng.gen_range(-2..=2),
                    rng.gen_range(-2..=2),
                ));
                b.add_assign(&LaurentPoly::monomial(
                    BigInt::from(rng.gen_range(-9i64..=9)),
                    rng.gen_range(-2..=2),
                    rng.gen_range(-2..=2),
                ));
            }
            let sum = g.add(&a, &b);
            let prod = g.mul(&a, &b);
            assert_eq!(
                specialize_in(&rat, &sum),
                rat.add(&specialize_in(&rat, &a), &specialize_in(&rat, &b))
            );
            assert_eq!(
                specialize_in(&rat, &prod),
                rat.mul(&specialize_in(&rat, &a), &specialize_in(&rat, &b))
            );
            assert_eq!(
                specialize_in(&fp, &sum),
                fp.add(&specialize_in(&fp, &a), &specialize_in(&fp, &b))
            );
            assert_eq!(
                specialize_in(&fp, &prod),
                fp.mul(&specialize_in(&fp, &a), &specialize_in(&fp, &b))
            );
        }
    }

    #[test]
    fn prime_field_inverses() {
        let fp = PrimeFieldSpec::new(101, 7, 9).unwrap();
        for a in 1..101u64 {
            assert_eq!(fp.mul(&a, &fp.inv(&a)), 1);
        }
        assert!(PrimeFieldSpec::new(10, 3, 3).is_err());
        assert!(PrimeFieldSpec::new(7, 7, 1).is_err());
    }
}
