//! Non-negative exact rationals over `BigUint`.

use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Div, Mul};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::Error;

/// A reduced fraction `numer / denom` with `denom > 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: BigUint,
    denom: BigUint,
}

impl Rational {
    /// Builds `p / q` from signed integers. Rejects `q = 0` and negative values.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, Error> {
        let (p, q) = (p.into(), q.into());
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if !p.is_zero() && p.sign() != q.sign() {
            return Err(Error::Negative(alloc::format!("{p}/{q}")));
        }
        Self::from_biguint(p.magnitude().clone(), q.magnitude().clone())
    }

    pub fn from_biguint(numer: BigUint, denom: BigUint) -> Result<Self, Error> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(numer, denom))
    }

    fn reduced(numer: BigUint, denom: BigUint) -> Self {
        let g = numer.gcd(&denom);
        if g.is_one() {
            Self { numer, denom }
        } else {
            Self {
                numer: numer / &g,
                denom: denom / g,
            }
        }
    }

    pub fn integer(n: impl Into<BigUint>) -> Self {
        Self {
            numer: n.into(),
            denom: BigUint::one(),
        }
    }

    pub fn one() -> Self {
        Self::integer(1u32)
    }

    pub fn two() -> Self {
        Self::integer(2u32)
    }

    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// `numer * denom`, the quantity both the Brefeld and symmetric measures start from.
    pub fn height(&self) -> BigUint {
        &self.numer * &self.denom
    }

    /// Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Self {
            numer: self.denom.clone(),
            denom: self.numer.clone(),
        }
    }

    /// Integer power; negative exponents invert. Panics for `0^negative`.
    pub fn pow(&self, exp: i32) -> Self {
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let e = exp.unsigned_abs();
        Self {
            numer: Pow::pow(&base.numer, e),
            denom: Pow::pow(&base.denom, e),
        }
    }

    pub fn abs_diff(&self, other: &Self) -> Self {
        let lhs = &self.numer * &other.denom;
        let rhs = &other.numer * &self.denom;
        let diff = if lhs >= rhs { lhs - rhs } else { rhs - lhs };
        Self::reduced(diff, &self.denom * &other.denom)
    }

    /// Nearest `f64` (within a couple of ulps); huge operands are pre-shifted.
    pub fn to_f64(&self) -> f64 {
        const KEEP: u64 = 1000;
        let bits = self.numer.bits().max(self.denom.bits());
        let (n, d) = if bits > KEEP {
            let shift = bits - KEEP;
            (&self.numer >> shift, &self.denom >> shift)
        } else {
            (self.numer.clone(), self.denom.clone())
        };
        match (n.to_f64(), d.to_f64()) {
            (Some(n), Some(d)) if d != 0.0 => n / d,
            _ => f64::INFINITY,
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational::reduced(&self.numer * &rhs.numer, &self.denom * &rhs.denom)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        &self * &rhs
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational::reduced(&self.numer * &rhs.denom, &self.denom * &rhs.numer)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p/q`, `p:q`, a bare integer, or a plain decimal such as `0.01`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let malformed = || Error::MalformedRatio(s.to_string());
        let uint = |t: &str| -> Result<BigUint, Error> {
            let t = t.trim();
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            t.parse::<BigUint>().map_err(|_| malformed())
        };
        if s.starts_with('-') {
            return Err(Error::Negative(s.to_string()));
        }
        if let Some((p, q)) = s.split_once(['/', ':']) {
            return Rational::from_biguint(uint(p)?, uint(q)?);
        }
        if let Some((whole, frac)) = s.split_once('.') {
            let whole = if whole.is_empty() {
                BigUint::zero()
            } else {
                uint(whole)?
            };
            if frac.is_empty() {
                return Ok(Rational::integer(whole));
            }
            let scale = Pow::pow(BigUint::from(10u32), frac.len());
            return Rational::from_biguint(whole * &scale + uint(frac)?, scale);
        }
        Ok(Rational::integer(uint(s)?))
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::integer(n)
    }
}

/// Least common multiple of a non-empty list of positive integers.
pub fn lcm_all<'a, I>(values: I) -> Result<BigUint, Error>
where
    I: IntoIterator<Item = &'a BigUint>,
{
    let mut acc: Option<BigUint> = None;
    for v in values {
        if v.is_zero() {
            return Err(Error::ZeroInLcm);
        }
        acc = Some(match acc {
            None => v.clone(),
            Some(a) => a.lcm(v),
        });
    }
    acc.ok_or(Error::EmptyList)
}
