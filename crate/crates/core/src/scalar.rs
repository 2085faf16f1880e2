//! Exact scalars over the three division rings ℝ, ℂ and ℍ with rational
//! coefficients.
//!
//! Every scalar is stored as a rational quaternion `a + b·i + c·j + d·k`
//! together with the ring it lives in. Real scalars keep `b = c = d = 0`,
//! complex scalars keep `c = d = 0`, so ℚ ⊂ ℚ(i) ⊂ ℍ(ℚ) is a chain of
//! subrings and mixed arithmetic promotes to the larger ring.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub type Rational = BigRational;

/// The division ring a scalar, vector or matrix lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    R,
    C,
    H,
}

impl Ring {
    /// Dimension of the ring as a real vector space.
    pub fn real_dim(self) -> usize {
        match self {
            Ring::R => 1,
            Ring::C => 2,
            Ring::H => 4,
        }
    }

    pub fn join(self, other: Ring) -> Ring {
        self.max(other)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Ring::R => "R",
            Ring::C => "C",
            Ring::H => "H",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Ring> {
        match s {
            "R" => Some(Ring::R),
            "C" => Some(Ring::C),
            "H" => Some(Ring::H),
            _ => None,
        }
    }

    /// Real basis `1, i, j, k` truncated to the ring.
    pub fn units(self) -> Vec<Scalar> {
        (0..self.real_dim()).map(|idx| Scalar::basis_unit(self, idx)).collect()
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Debug)]
pub struct Scalar {
    ring: Ring,
    c: [Rational; 4],
}

fn rat(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

#[inline]
fn mulq(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() || b.is_zero() {
        Rational::zero()
    } else {
        a * b
    }
}

impl Scalar {
    pub fn zero(ring: Ring) -> Self {
        Scalar {
            ring,
            c: [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn one(ring: Ring) -> Self {
        Self::from_rational(ring, Rational::one())
    }

    pub fn from_i64(ring: Ring, v: i64) -> Self {
        Self::from_rational(ring, rat(v))
    }

    pub fn from_ratio(ring: Ring, num: i64, den: i64) -> Self {
        Self::from_rational(ring, BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(ring: Ring, q: Rational) -> Self {
        let mut s = Self::zero(ring);
        s.c[0] = q;
        s
    }

    pub fn complex(re: Rational, im: Rational) -> Self {
        Scalar {
            ring: Ring::C,
            c: [re, im, Rational::zero(), Rational::zero()],
        }
    }

    pub fn complex_i64(re: i64, im: i64) -> Self {
        Self::complex(rat(re), rat(im))
    }

    pub fn quaternion(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Scalar {
            ring: Ring::H,
            c: [a, b, c, d],
        }
    }

    pub fn quaternion_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::quaternion(rat(a), rat(b), rat(c), rat(d))
    }

    /// Build a scalar from its real coordinates; the slice length selects the ring.
    pub fn from_coeffs(ring: Ring, coeffs: &[Rational]) -> Self {
        let mut s = Self::zero(ring);
        for (slot, v) in s.c.iter_mut().zip(coeffs.iter().take(ring.real_dim())) {
            *slot = v.clone();
        }
        s
    }

    /// `1, i, j, k` for `idx = 0..4`, living in `ring`.
    pub fn basis_unit(ring: Ring, idx: usize) -> Self {
        assert!(idx < ring.real_dim(), "unit {idx} does not exist in {ring}");
        let mut s = Self::zero(ring);
        s.c[idx] = Rational::one();
        s
    }

    pub fn i() -> Self {
        Self::complex_i64(0, 1)
    }

    pub fn j() -> Self {
        Self::quaternion_i64(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::quaternion_i64(0, 0, 0, 1)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn coeff(&self, idx: usize) -> &Rational {
        &self.c[idx]
    }

    /// Real coordinates, `ring.real_dim()` of them.
    pub fn coeffs(&self) -> &[Rational] {
        &self.c[..self.ring.real_dim()]
    }

    pub fn re(&self) -> &Rational {
        &self.c[0]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    /// True for pure imaginary scalars (zero real part).
    pub fn is_imaginary(&self) -> bool {
        self.c[0].is_zero()
    }

    /// Central in its own ring: everything in ℝ and ℂ, only reals in ℍ.
    pub fn is_central(&self) -> bool {
        match self.ring {
            Ring::R | Ring::C => true,
            Ring::H => self.is_real(),
        }
    }

    /// The same value viewed in a larger ring.
    pub fn promote(&self, ring: Ring) -> Self {
        assert!(ring >= self.ring || self.fits(ring), "cannot demote {self} to {ring}");
        Scalar {
            ring,
            c: self.c.clone(),
        }
    }

    /// Whether the value already lies in the subring `ring`.
    pub fn fits(&self, ring: Ring) -> bool {
        self.c[ring.real_dim()..].iter().all(Zero::is_zero)
    }

    pub fn conj(&self) -> Self {
        match self.ring {
            Ring::R => self.clone(),
            _ => Scalar {
                ring: self.ring,
                c: [self.c[0].clone(), -&self.c[1], -&self.c[2], -&self.c[3]],
            },
        }
    }

    /// `x·conj(x)`, a nonnegative rational.
    pub fn norm_sq(&self) -> Rational {
        self.c.iter().fold(Rational::zero(), |acc, v| acc + mulq(v, v))
    }

    /// Two-sided inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.ring == Ring::R {
            return Some(Self::from_rational(Ring::R, self.c[0].recip()));
        }
        let n = self.norm_sq().recip();
        Some(self.conj().scale(&n))
    }

    /// Multiply by a rational (central, so the side does not matter).
    pub fn scale(&self, q: &Rational) -> Self {
        Scalar {
            ring: self.ring,
            c: [
                mulq(&self.c[0], q),
                mulq(&self.c[1], q),
                mulq(&self.c[2], q),
                mulq(&self.c[3], q),
            ],
        }
    }

    pub fn mul_ref(&self, other: &Scalar) -> Scalar {
        let ring = self.ring.join(other.ring);
        let (a, b) = (&self.c, &other.c);
        match ring {
            Ring::R => Scalar::from_rational(Ring::R, mulq(&a[0], &b[0])),
            Ring::C => Scalar {
                ring,
                c: [
                    mulq(&a[0], &b[0]) - mulq(&a[1], &b[1]),
                    mulq(&a[0], &b[1]) + mulq(&a[1], &b[0]),
                    Rational::zero(),
                    Rational::zero(),
                ],
            },
            Ring::H => Scalar {
                ring,
                c: [
                    mulq(&a[0], &b[0]) - mulq(&a[1], &b[1]) - mulq(&a[2], &b[2]) - mulq(&a[3], &b[3]),
                    mulq(&a[0], &b[1]) + mulq(&a[1], &b[0]) + mulq(&a[2], &b[3]) - mulq(&a[3], &b[2]),
                    mulq(&a[0], &b[2]) - mulq(&a[1], &b[3]) + mulq(&a[2], &b[0]) + mulq(&a[3], &b[1]),
                    mulq(&a[0], &b[3]) + mulq(&a[1], &b[2]) - mulq(&a[2], &b[1]) + mulq(&a[3], &b[0]),
                ],
            },
        }
    }

    /// Exact decimal form of each coordinate, `"p"` or `"p/q"`.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(|q| q.to_string()).collect()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (idx, unit) in ["", "i", "j", "k"].iter().enumerate() {
            let v = &self.c[idx];
            if v.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if v.is_negative() { " - " } else { " + " })?;
            } else if v.is_negative() {
                f.write_str("-")?;
            }
            let mag = v.abs();
            if unit.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(unit)?;
            first = false;
        }
        Ok(())
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let ring = self.ring.join(rhs.ring);
        Scalar {
            ring,
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let ring = self.ring.join(rhs.ring);
        Scalar {
            ring,
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
                &self.c[3] - &rhs.c[3],
            ],
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            ring: self.ring,
            c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]],
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.mul_ref(&rhs)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.ring = self.ring.join(rhs.ring);
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.ring = self.ring.join(rhs.ring);
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_table() {
        let (i, j, k) = (Scalar::i().promote(Ring::H), Scalar::j(), Scalar::k());
        let minus_one = Scalar::from_i64(Ring::H, -1);
        assert_eq!(&i * &i, minus_one);
        assert_eq!(&j * &j, minus_one);
        assert_eq!(&k * &k, minus_one);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
    }

    #[test]
    fn inverse_is_two_sided() {
        let x = Scalar::quaternion_i64(1, -2, 3, 5);
        let inv = x.inv().unwrap();
        assert!((&x * &inv).is_one());
        assert!((&inv * &x).is_one());
        assert!(Scalar::zero(Ring::C).inv().is_none());
    }

    #[test]
    fn centrality() {
        assert!(Scalar::i().is_central());
        assert!(!Scalar::i().promote(Ring::H).is_central());
        assert!(Scalar::from_i64(Ring::H, 7).is_central());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(Scalar::quaternion_i64(1, -1, 0, 2).to_string(), "1 - i + 2k");
        assert_eq!(Scalar::from_ratio(Ring::R, -3, 4).to_string(), "-3/4");
        assert_eq!(Scalar::complex_i64(0, -1).to_string(), "-i");
    }
}
