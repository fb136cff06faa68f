//! Dense integer polynomials in the formal residue field size `q`.
//!
//! Every count and dimension in the crate is a [`QPoly`]. Coefficients are
//! arbitrary precision so nothing overflows silently, and the representation
//! is normalized: the highest stored coefficient is never zero, and the zero
//! polynomial stores nothing.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest residue field size for which the symbolic results are valid.
pub const MIN_Q: u64 = 4;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

/// The arithmetic operations of [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs([c])
    }

    /// `coeff * q^exp`.
    pub fn monomial(coeff: i64, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = BigInt::from(coeff);
        Self::from_big(coeffs)
    }

    /// Builds a polynomial from coefficients listed low to high.
    pub fn from_coeffs<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_big(coeffs.into_iter().map(BigInt::from).collect())
    }

    pub fn from_big(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Coefficients low to high; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(QPoly::one(), |acc, _| &acc * self)
    }

    /// Exact value at `q = q0`. Rejects `q0 < 4`.
    pub fn eval(&self, q0: u64) -> Result<BigInt> {
        if q0 < MIN_Q {
            return Err(Error::QTooSmall(q0));
        }
        Ok(self.eval_unchecked(&BigInt::from(q0)))
    }

    /// Horner evaluation with no range check, for identities that hold for
    /// every integer.
    pub fn eval_unchecked(&self, q0: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q0 + c)
    }

    /// Value at `q0` as an `i128`, panicking on overflow.
    pub fn eval_i128(&self, q0: u64) -> Result<i128> {
        let v = self.eval(q0)?;
        Ok(v.to_i128().expect("polynomial value exceeds i128"))
    }

    /// Compares by eventual sign of the difference, i.e. by value for all
    /// sufficiently large `q`.
    pub fn cmp_asymptotic(&self, other: &Self) -> std::cmp::Ordering {
        let diff = self - other;
        match diff.coeffs.last() {
            None => std::cmp::Ordering::Equal,
            Some(c) if c.is_positive() => std::cmp::Ordering::Greater,
            Some(_) => std::cmp::Ordering::Less,
        }
    }
}

/// Exact ring arithmetic.
pub fn poly_arith(op: PolyOp, p1: &QPoly, p2: &QPoly) -> QPoly {
    match op {
        PolyOp::Add => p1 + p2,
        PolyOp::Sub => p1 - p2,
        PolyOp::Mul => p1 * p2,
    }
}

/// Number of units of `R / p^k`: `1` for `k = 0`, `q^(k-1) (q - 1)` otherwise.
pub fn phi(k: u32) -> QPoly {
    if k == 0 {
        QPoly::one()
    } else {
        QPoly::q().pow(k - 1) * QPoly::from_coeffs([-1, 1])
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> QPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(if negate_b { x - y } else { x + y });
    }
    QPoly::from_big(out)
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_big(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

impl AddAssign for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        *self = &*self - rhs;
    }
}

impl SubAssign for QPoly {
    fn sub_assign(&mut self, rhs: QPoly) {
        *self = &*self - &rhs;
    }
}

impl Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a QPoly> for QPoly {
    fn sum<I: Iterator<Item = &'a QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| acc + p)
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

/// Expanded form, highest degree first: `q^7 - 3q^6 + 3q^5 - q^4`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = mag.is_one();
            match exp {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{exp}")?,
                _ => write!(f, "{mag}q^{exp}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

// JSON form: coefficient array, low to high. Coefficients outside i64 are
// written as decimal strings.
impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoeffVisitor;

        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }

        impl<'de> Visitor<'de> for CoeffVisitor {
            type Value = QPoly;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of integer coefficients")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<QPoly, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(c) = seq.next_element::<Coeff>()? {
                    coeffs.push(match c {
                        Coeff::Int(v) => BigInt::from(v),
                        Coeff::Text(s) => s.parse().map_err(de::Error::custom)?,
                    });
                }
                Ok(QPoly::from_big(coeffs))
            }
        }

        deserializer.deserialize_seq(CoeffVisitor)
    }
}
