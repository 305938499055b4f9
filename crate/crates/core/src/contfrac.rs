//! Simple continued fractions and their convergents.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::{Error, Rational};

/// Upper bound on the number of convergents examined before giving up.
pub const MAX_CONVERGENTS: usize = 64;

/// Exact decimal digits kept when approximating an irrational target.
pub const PRECISION_DIGITS: u32 = 40;

/// Partial quotients of a non-negative rational, in order.
pub fn partial_quotients(x: &Rational) -> Vec<BigUint> {
    let mut out = Vec::new();
    let (mut p, mut q) = (x.numer().clone(), x.denom().clone());
    while !q.is_zero() {
        let (a, r) = p.div_rem(&q);
        out.push(a);
        p = q;
        q = r;
    }
    out
}

/// Iterator over the convergents `p_k / q_k` of a rational's continued fraction.
pub struct Convergents {
    quotients: alloc::vec::IntoIter<BigUint>,
    prev: (BigUint, BigUint),
    prev2: (BigUint, BigUint),
}

impl Convergents {
    pub fn new(x: &Rational) -> Self {
        Self {
            quotients: partial_quotients(x).into_iter(),
            prev: (BigUint::one(), BigUint::zero()),
            prev2: (BigUint::zero(), BigUint::one()),
        }
    }
}

impl Iterator for Convergents {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        let a = self.quotients.next()?;
        let p = &a * &self.prev.0 + &self.prev2.0;
        let q = &a * &self.prev.1 + &self.prev2.1;
        self.prev2 = core::mem::replace(&mut self.prev, (p.clone(), q.clone()));
        // consecutive convergents are coprime, q >= 1 from the first term on
        Some(Rational::from_biguint(p, q).expect("convergent denominator is positive"))
    }
}

/// First convergent `c` of `x` with `|c - x| <= rel_tol * x`.
pub fn convergents_within(x: &Rational, rel_tol: &Rational) -> Result<Rational, Error> {
    if x.is_zero() {
        return Err(Error::NonPositiveTarget);
    }
    if rel_tol.is_zero() || *rel_tol >= Rational::one() {
        return Err(Error::ToleranceOutOfRange);
    }
    let bound = rel_tol * x;
    Convergents::new(x)
        .take(MAX_CONVERGENTS)
        .find(|c| c.abs_diff(x) <= bound)
        .ok_or(Error::NoConvergence(MAX_CONVERGENTS))
}

/// `2^(num/den)` truncated to [`PRECISION_DIGITS`] decimal places, computed with an
/// exact integer root.
pub fn root_of_two(num: u32, den: u32) -> Rational {
    assert!(den > 0, "root degree must be positive");
    let scale = Pow::pow(BigUint::from(10u32), PRECISION_DIGITS);
    let radicand = Pow::pow(BigUint::from(2u32), num) * Pow::pow(&scale, den);
    Rational::from_biguint(radicand.nth_root(den), scale).expect("scale is positive")
}
