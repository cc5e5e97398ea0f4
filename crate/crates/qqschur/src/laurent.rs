//! Exact arithmetic in the Laurent polynomial ring `Z[q, q^-1, Q, Q^-1]`.
//!
//! Every stored coefficient is a nonzero arbitrary-precision integer, so
//! equality is exact termwise equality.  The text form is a sum of signed
//! monomials `c*q^i*Q^j`, emitted in lexicographically descending order of
//! the exponent pair `(i, j)`; that order is fixed so golden files are
//! byte-stable.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Element of `Z[q^{±1}, Q^{±1}]`, kept in canonical sparse form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    /// (power of q, power of Q) -> nonzero coefficient.
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1.into(), 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        LaurentPoly::monomial(n.into(), 0, 0)
    }

    /// `c * q^i * Q^j`; collapses to zero when `c == 0`.
    pub fn monomial(c: BigInt, i: i32, j: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        LaurentPoly { terms }
    }

    /// The variable q (or its inverse powers).
    pub fn q_pow(i: i32) -> Self {
        LaurentPoly::monomial(1.into(), i, 0)
    }

    /// The variable Q (or its inverse powers).
    pub fn qq_pow(j: i32) -> Self {
        LaurentPoly::monomial(1.into(), 0, j)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i32, i32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: i32, j: i32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// True when the element is `±q^i Q^j`, i.e. a unit of the ring.
    pub fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().abs().is_one()
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            let entry = self.terms.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            let entry = self.terms.entry(*e).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(other);
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.sub_assign(other);
        r
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<(i32, i32), BigInt> = BTreeMap::new();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                let e = (i1 + i2, j1 + j2);
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }

    pub fn mul_int(&self, n: i64) -> Self {
        if n == 0 {
            return LaurentPoly::zero();
        }
        let n: BigInt = n.into();
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * &n)).collect(),
        }
    }

    /// Multiply by the unit `c * q^i * Q^j`.
    pub fn mul_monomial(&self, c: &BigInt, i: i32, j: i32) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|((a, b), k)| ((a + i, b + j), k * c))
                .collect(),
        }
    }

    /// Inverse of a unit monomial; `None` for everything else.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit_monomial() {
            return None;
        }
        let ((i, j), c) = self.terms.iter().next().unwrap();
        Some(LaurentPoly::monomial(c.clone(), -i, -j))
    }

    /// Lexicographically largest exponent pair together with its coefficient.
    fn lead(&self) -> Option<((i32, i32), &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    fn exp_range(&self) -> Option<((i32, i32), (i32, i32))> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        let mut min = first;
        let mut max = first;
        for &(i, j) in self.terms.keys() {
            min.0 = min.0.min(i);
            min.1 = min.1.min(j);
            max.0 = max.0.max(i);
            max.1 = max.1.max(j);
        }
        Some((min, max))
    }

    /// Exact division: returns `self / d` when `d` divides `self` in the
    /// Laurent ring, `None` otherwise.  Greedy leading-term division; the
    /// quotient's exponents are confined to the box implied by the factor
    /// ranges, which bounds the loop even for non-divisors.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if d.is_unit_monomial() {
            let ((i, j), c) = d.lead().unwrap();
            let cinv = if c.is_one() { 1 } else { -1 };
            return Some(self.mul_monomial(&BigInt::from(cinv), -i, -j));
        }
        let (smin, smax) = self.exp_range()?;
        let (dmin, dmax) = d.exp_range()?;
        // exponent box of any exact quotient
        let qmin = (smin.0 - dmax.0, smin.1 - dmax.1);
        let qmax = (smax.0 - dmin.0, smax.1 - dmin.1);
        let (dlead_e, dlead_c) = d.lead().unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((rlead_e, rlead_c)) = rem.lead() {
            let e = (rlead_e.0 - dlead_e.0, rlead_e.1 - dlead_e.1);
            if e.0 < qmin.0 || e.0 > qmax.0 || e.1 < qmin.1 || e.1 > qmax.1 {
                return None;
            }
            let (c, r) = num_integer::div_rem(rlead_c.clone(), dlead_c.clone());
            if !r.is_zero() {
                return None;
            }
            let t = LaurentPoly::monomial(c, e.0, e.1);
            rem.sub_assign(&t.mul(d));
            quot.add_assign(&t);
        }
        Some(quot)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((i, j), c)) in self.terms.iter().rev().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}*q^{}*Q^{}", c.abs(), i, j)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
