//! Dense polynomials in a formal variable `x` with coefficients in
//! `Z[q,q^-1]`; used for content polynomials.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::laurent::LaurentQ;

/// `coeffs[i]` is the coefficient of `x^i`; trailing zeros stripped.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyX {
    coeffs: Vec<LaurentQ>,
}

impl PolyX {
    pub fn zero() -> Self {
        PolyX { coeffs: vec![] }
    }

    pub fn one() -> Self {
        PolyX { coeffs: vec![LaurentQ::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<LaurentQ>) -> Self {
        let mut p = PolyX { coeffs };
        p.normalize();
        p
    }

    /// The linear polynomial `x + c`.
    pub fn x_plus(c: LaurentQ) -> Self {
        PolyX { coeffs: vec![c, LaurentQ::one()] }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(LaurentQ::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> LaurentQ {
        self.coeffs.get(i).cloned().unwrap_or_else(LaurentQ::zero)
    }

    pub fn scale(&self, c: &LaurentQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyX {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitute `x -> a*x + b`.
    pub fn compose_affine(&self, a: &LaurentQ, b: &LaurentQ) -> Self {
        // Horner: p(ax+b) = (...(c_d (ax+b) + c_{d-1})(ax+b) + ...)
        let mut out = PolyX::zero();
        let lin = PolyX::from_coeffs(vec![b.clone(), a.clone()]);
        for c in self.coeffs.iter().rev() {
            out = &(&out * &lin) + &PolyX::from_coeffs(vec![c.clone()]);
        }
        out
    }
}

impl Add for &PolyX {
    type Output = PolyX;
    fn add(self, rhs: &PolyX) -> PolyX {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) + &rhs.coeff(i));
        }
        PolyX::from_coeffs(coeffs)
    }
}

impl Sub for &PolyX {
    type Output = PolyX;
    fn sub(self, rhs: &PolyX) -> PolyX {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) - &rhs.coeff(i));
        }
        PolyX::from_coeffs(coeffs)
    }
}

impl Mul for &PolyX {
    type Output = PolyX;
    fn mul(self, rhs: &PolyX) -> PolyX {
        if self.is_zero() || rhs.is_zero() {
            return PolyX::zero();
        }
        let mut coeffs = vec![LaurentQ::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        PolyX::from_coeffs(coeffs)
    }
}

impl fmt::Display for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_compose() {
        // x(x+1) = x^2 + x
        let p = &PolyX::x_plus(LaurentQ::zero()) * &PolyX::x_plus(LaurentQ::one());
        assert_eq!(p.coeff(2), LaurentQ::one());
        assert_eq!(p.coeff(1), LaurentQ::one());
        assert!(p.coeff(0).is_zero());
        // substitute x -> qx - 1 into x + 1: qx
        let lin = PolyX::x_plus(LaurentQ::one());
        let sub = lin.compose_affine(&LaurentQ::q(), &LaurentQ::from_int(-1));
        assert_eq!(sub, PolyX::from_coeffs(vec![LaurentQ::zero(), LaurentQ::q()]));
    }
}
