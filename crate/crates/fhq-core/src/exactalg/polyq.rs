//! Dense integer polynomials in `q` and the fraction field `Q(q)` in
//! canonical reduced form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentQ;

/// Dense polynomial in `q` with integer coefficients; `coeffs[i]` is the
/// coefficient of `q^i`, trailing zeros stripped.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn zero() -> Self {
        PolyZ { coeffs: vec![] }
    }

    pub fn one() -> Self {
        PolyZ { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = PolyZ { coeffs };
        p.normalize();
        p
    }

    pub fn monomial(deg: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        PolyZ { coeffs }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
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

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> (BigInt, PolyZ) {
        if self.is_zero() {
            return (BigInt::zero(), PolyZ::zero());
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        let p = PolyZ {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        };
        (c, p)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyZ {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Exact division by an integer; panics if not exact.
    fn div_int_exact(&self, c: &BigInt) -> Self {
        PolyZ {
            coeffs: self
                .coeffs
                .iter()
                .map(|x| {
                    let (q, r) = x.div_rem(c);
                    assert!(r.is_zero(), "non-exact integer division of polynomial");
                    q
                })
                .collect(),
        }
    }

    /// Pseudo-remainder: `lc(g)^(deg f - deg g + 1) * f = q*g + r`.
    fn pseudo_rem(&self, g: &PolyZ) -> PolyZ {
        let dg = g.degree().expect("pseudo_rem by zero");
        let mut r = self.clone();
        let lg = g.leading();
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let lr = r.leading();
            // r = lg * r - lr * q^(dr-dg) * g
            let mut shifted = vec![BigInt::zero(); dr - dg];
            shifted.extend(g.coeffs.iter().map(|c| c * &lr));
            let shifted = PolyZ { coeffs: shifted };
            r = &r.scale(&lg) - &shifted;
        }
        r
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &PolyZ) -> PolyZ {
        if self.is_zero() {
            let (_, p) = other.primitive_part();
            let c = self.content().gcd(&other.content());
            return p.scale(&c);
        }
        if other.is_zero() {
            return other.gcd(self);
        }
        let c = self.content().gcd(&other.content());
        let (_, mut f) = self.primitive_part();
        let (_, mut g) = other.primitive_part();
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = f.pseudo_rem(&g);
            f = g;
            g = r.primitive_part().1;
        }
        f.primitive_part().1.scale(&c)
    }

    /// Exact division; panics when `other` does not divide `self` over the
    /// integers. When the quotient has integer coefficients every leading
    /// division below is exact.
    pub fn div_exact(&self, other: &PolyZ) -> PolyZ {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return PolyZ::zero();
        }
        let dg = other.degree().unwrap();
        let df = self.degree().unwrap();
        assert!(df >= dg, "non-exact polynomial division");
        let lg = other.leading();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); df - dg + 1];
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let lr = r.leading();
            let (qc, rem) = lr.div_rem(&lg);
            assert!(rem.is_zero(), "non-exact polynomial division");
            q[dr - dg] = qc.clone();
            let mut shifted = vec![BigInt::zero(); dr - dg];
            shifted.extend(other.coeffs.iter().map(|c| c * &qc));
            r = &r - &PolyZ { coeffs: shifted };
        }
        assert!(r.is_zero(), "non-exact polynomial division");
        PolyZ::from_coeffs(q)
    }

    pub fn eval_q1(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn to_laurent(&self) -> LaurentQ {
        let mut out = LaurentQ::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            out.add_term(i as i64, c.clone());
        }
        out
    }
}

impl Add for &PolyZ {
    type Output = PolyZ;
    fn add(self, rhs: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        PolyZ::from_coeffs(coeffs)
    }
}

impl Sub for &PolyZ {
    type Output = PolyZ;
    fn sub(self, rhs: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        PolyZ::from_coeffs(coeffs)
    }
}

impl Neg for &PolyZ {
    type Output = PolyZ;
    fn neg(self) -> PolyZ {
        PolyZ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PolyZ {
    type Output = PolyZ;
    fn mul(self, rhs: &PolyZ) -> PolyZ {
        if self.is_zero() || rhs.is_zero() {
            return PolyZ::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyZ::from_coeffs(coeffs)
    }
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

impl fmt::Debug for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

/// Element of the fraction field `Q(q)`, stored as a reduced fraction of
/// integer polynomials with the denominator having positive leading
/// coefficient and no common factor (including integer content) with the
/// numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalQ {
    num: PolyZ,
    den: PolyZ,
}

impl RationalQ {
    pub fn new(num: PolyZ, den: PolyZ) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RationalQ { num, den };
        r.reduce();
        r
    }

    pub fn zero() -> Self {
        RationalQ { num: PolyZ::zero(), den: PolyZ::one() }
    }

    pub fn one() -> Self {
        RationalQ { num: PolyZ::one(), den: PolyZ::one() }
    }

    pub fn from_int(c: i64) -> Self {
        RationalQ { num: PolyZ::from_int(c), den: PolyZ::one() }
    }

    pub fn from_poly(p: PolyZ) -> Self {
        RationalQ { num: p, den: PolyZ::one() }
    }

    /// Lossless embedding of `Z[q,q^-1]`: clear negative powers into the
    /// denominator.
    pub fn from_laurent(x: &LaurentQ) -> Self {
        let low = x.min_exp().unwrap_or(0).min(0);
        let mut coeffs = vec![BigInt::zero(); (x.max_exp().unwrap_or(0) - low + 1).max(1) as usize];
        for (e, c) in x.iter() {
            coeffs[(e - low) as usize] = c.clone();
        }
        let num = PolyZ::from_coeffs(coeffs);
        let den = PolyZ::monomial((-low) as usize, BigInt::one());
        RationalQ::new(num, den)
    }

    /// Back to `Z[q,q^-1]` when the denominator is `d * q^m`; `None` when
    /// the value is genuinely rational.
    pub fn to_laurent(&self) -> Option<LaurentQ> {
        let dd = self.den.degree()?;
        // denominator must be a monomial
        if (0..dd).any(|i| !self.den.coeff(i).is_zero()) {
            return None;
        }
        let d = self.den.leading();
        self.num.to_laurent().shifted(-(dd as i64)).div_exact_int(&d)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = PolyZ::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_zero() && g != PolyZ::one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        // integer content and sign
        let cn = self.num.content();
        let cd = self.den.content();
        let mut c = cn.gcd(&cd);
        if self.den.leading().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            self.num = self.num.div_int_exact(&c);
            self.den = self.den.div_int_exact(&c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &PolyZ {
        &self.num
    }

    pub fn denominator(&self) -> &PolyZ {
        &self.den
    }

    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        RationalQ::new(self.den.clone(), self.num.clone())
    }
}

impl Add for &RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: &RationalQ) -> RationalQ {
        RationalQ::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: &RationalQ) -> RationalQ {
        RationalQ::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &RationalQ) -> RationalQ {
        RationalQ::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalQ {
    type Output = RationalQ;
    fn div(self, rhs: &RationalQ) -> RationalQ {
        assert!(!rhs.is_zero(), "division by zero");
        RationalQ::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == PolyZ::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
