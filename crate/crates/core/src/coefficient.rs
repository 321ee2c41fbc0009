//! Coefficient rings for structure constants: the rationals and the dual
//! numbers `a + t b` with `t² = 0`.

use std::fmt;

use serde::Serialize;

use crate::scalar::Scalar;

/// The ring operations the identity checks need.
pub trait Coefficient: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn from_scalar(s: &Scalar) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn signed(&self, negative: bool) -> Self {
        if negative {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl Coefficient for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }

    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }

    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }
}

/// `re + t·eps` with `t² = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualNumber {
    pub re: Scalar,
    pub eps: Scalar,
}

impl DualNumber {
    pub fn new(re: Scalar, eps: Scalar) -> Self {
        DualNumber { re, eps }
    }

    pub fn t() -> Self {
        DualNumber::new(Scalar::zero(), Scalar::one())
    }
}

impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.eps.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}t", self.eps),
            (false, false) => write!(f, "{} + {}t", self.re, self.eps),
        }
    }
}

impl Coefficient for DualNumber {
    fn zero() -> Self {
        DualNumber::new(Scalar::zero(), Scalar::zero())
    }

    fn from_scalar(s: &Scalar) -> Self {
        DualNumber::new(s.clone(), Scalar::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.eps.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        DualNumber::new(&self.re + &other.re, &self.eps + &other.eps)
    }

    fn mul(&self, other: &Self) -> Self {
        DualNumber::new(&self.re * &other.re, &self.re * &other.eps + &self.eps * &other.re)
    }

    fn neg(&self) -> Self {
        DualNumber::new(-&self.re, -&self.eps)
    }
}
