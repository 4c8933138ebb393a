//! Exact integer and rational arithmetic primitives.
//!
//! Everything here is 128-bit checked arithmetic: an operation either returns
//! the mathematically exact result or reports [`Error::Overflow`]. There is no
//! floating point and nothing ever wraps.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exact signed integer used for every coefficient and root in the crate.
pub type Int = i128;

pub(crate) fn add(a: Int, b: Int) -> Result<Int> {
    a.checked_add(b).ok_or(Error::Overflow("add"))
}

pub(crate) fn sub(a: Int, b: Int) -> Result<Int> {
    a.checked_sub(b).ok_or(Error::Overflow("sub"))
}

pub(crate) fn mul(a: Int, b: Int) -> Result<Int> {
    a.checked_mul(b).ok_or(Error::Overflow("mul"))
}

pub(crate) fn neg(a: Int) -> Result<Int> {
    a.checked_neg().ok_or(Error::Overflow("neg"))
}

/// Greatest common divisor, always nonnegative; `gcd(0, 0) = 0`.
///
/// The only failing inputs are magnitude-`2^127` edge cases (`i128::MIN`
/// paired with `0` or itself), whose gcd does not fit in an `Int`.
pub fn gcd(a: Int, b: Int) -> Result<Int> {
    let mut x = a.unsigned_abs();
    let mut y = b.unsigned_abs();
    while y != 0 {
        (x, y) = (y, x % y);
    }
    Int::try_from(x).map_err(|_| Error::Overflow("gcd"))
}

/// Largest `s >= 0` with `s * s <= n`. Rejects negative input.
pub fn isqrt(n: Int) -> Result<Int> {
    if n < 0 {
        return Err(Error::NegativeSquareRoot(n));
    }
    Ok(isqrt_u128(n as u128) as Int)
}

// Newton iteration on u128 with a final downward adjustment. For n <= i128::MAX
// the root is below 2^64, so the x*x probes cannot overflow u128.
fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = 1u128 << (n.ilog2() / 2 + 1);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            break;
        }
        x = y;
    }
    while x * x > n {
        x -= 1;
    }
    x
}

/// The nonnegative `k` with `k * k == n`, if it exists. Negative `n` and
/// non-squares yield `None`; this is a value, not an error.
pub fn as_perfect_square(n: Int) -> Option<Int> {
    if n < 0 {
        return None;
    }
    let s = isqrt_u128(n as u128);
    if s * s == n as u128 {
        Some(s as Int)
    } else {
        None
    }
}

/// The integer `r >= 1` with `r^n == b`, if it exists. Requires `b >= 1`
/// and `n >= 1`.
pub fn as_perfect_nth_power(b: Int, n: Int) -> Result<Option<Int>> {
    if b < 1 || n < 1 {
        return Err(Error::NonPositivePowerArgs { base: b, exp: n });
    }
    if b == 1 {
        return Ok(Some(1));
    }
    if n == 1 {
        return Ok(Some(b));
    }
    if n >= 127 {
        // 2^127 already exceeds Int::MAX, so the only base with such a power is 1.
        return Ok(None);
    }
    let n = n as u32;
    // Binary search for the root; pow_capped keeps intermediate products in range.
    let (mut lo, mut hi) = (1 as Int, 1 as Int);
    while pow_capped(hi, n, b) < b {
        lo = hi;
        hi *= 2;
    }
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        match pow_capped(mid, n, b).cmp(&b) {
            Ordering::Equal => return Ok(Some(mid)),
            Ordering::Less => lo = mid + 1,
            Ordering::Greater => hi = mid - 1,
        }
    }
    Ok(None)
}

// r^n for r >= 1, saturating at cap + 1 once the product exceeds cap.
fn pow_capped(r: Int, n: u32, cap: Int) -> Int {
    let mut acc: Int = 1;
    for _ in 0..n {
        acc = match acc.checked_mul(r) {
            Some(v) if v <= cap => v,
            _ => return cap + 1,
        };
    }
    acc
}

/// True iff `d` divides `n`. Rejects `d == 0`.
pub fn divides(d: Int, n: Int) -> Result<bool> {
    if d == 0 {
        return Err(Error::ZeroDivisor);
    }
    if d == 1 || d == -1 {
        return Ok(true);
    }
    Ok(n.checked_rem(d).expect("rem cannot overflow for |d| >= 2") == 0)
}

/// All positive divisors of `|n|`, ascending. Rejects `n == 0`.
pub fn divisors(n: Int) -> Result<Vec<Int>> {
    if n == 0 {
        return Err(Error::DivisorsOfZero);
    }
    let n = n.unsigned_abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i: u128 = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i as Int);
            if i != n / i {
                large.push((n / i) as Int);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// Primality by trial division up to the integer square root.
pub fn is_prime(p: Int) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d: Int = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Exact rational in lowest terms with a strictly positive denominator.
/// The value is an integer iff `den == 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Int,
    den: Int,
}

impl Rational {
    /// Lowest-terms representative of `num / den`. Rejects `den == 0`;
    /// the sign always moves to the numerator.
    pub fn new(num: Int, den: Int) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd(num, den)?;
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = neg(num)?;
            den = neg(den)?;
        }
        Ok(Rational { num, den })
    }

    pub fn from_int(n: Int) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn num(&self) -> Int {
        self.num
    }

    pub fn den(&self) -> Int {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn checked_add(&self, other: &Rational) -> Result<Rational> {
        let num = add(mul(self.num, other.den)?, mul(other.num, self.den)?)?;
        Rational::new(num, mul(self.den, other.den)?)
    }

    pub fn checked_sub(&self, other: &Rational) -> Result<Rational> {
        let num = sub(mul(self.num, other.den)?, mul(other.num, self.den)?)?;
        Rational::new(num, mul(self.den, other.den)?)
    }

    pub fn checked_mul(&self, other: &Rational) -> Result<Rational> {
        Rational::new(mul(self.num, other.num)?, mul(self.den, other.den)?)
    }
}

/// Exact `(r1 + r2, r1 * r2)`, each in lowest terms.
pub fn rational_sum_product(r1: &Rational, r2: &Rational) -> Result<(Rational, Rational)> {
    Ok((r1.checked_add(r2)?, r1.checked_mul(r2)?))
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_fractions(self.num, self.den, other.num, other.den)
    }
}

// Overflow-free comparison of a/b vs c/d (b, d > 0) by comparing integer
// parts and recursing on inverted fractional parts, as in the continued
// fraction expansion.
fn cmp_fractions(a: Int, b: Int, c: Int, d: Int) -> Ordering {
    let (q1, q2) = (a.div_euclid(b), c.div_euclid(d));
    if q1 != q2 {
        return q1.cmp(&q2);
    }
    let (r1, r2) = (a.rem_euclid(b), c.rem_euclid(d));
    match (r1 == 0, r2 == 0) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        // r1/b vs r2/d with 0 < r < denominator: compare reciprocals, flipped.
        (false, false) => cmp_fractions(d, r2, b, r1),
    }
}
