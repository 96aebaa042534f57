//! Sparse Laurent polynomials in `q` with arbitrary-precision integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of `Z[q, q^-1]`: a finite map from exponents to nonzero
/// arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentQ {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        LaurentQ { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// The generator `q`.
    pub fn q() -> Self {
        Self::monomial(1, BigInt::one())
    }

    /// `c * q^e`, dropped if `c = 0`.
    pub fn monomial(e: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentQ { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(e, BigInt::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(0, BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::monomial(0, c)
    }

    /// The q-number `[m]_q`: `1 + q + ... + q^(m-1)` for `m >= 0` and
    /// `-q^-1 - q^-2 - ... - q^m` for `m < 0`.
    pub fn qnumber(m: i64) -> Self {
        let mut out = LaurentQ::zero();
        if m >= 0 {
            for e in 0..m {
                out.add_term(e, BigInt::one());
            }
        } else {
            for e in m..0 {
                out.add_term(e, -BigInt::one());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    /// Smallest exponent with nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent with nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by `q^e` in place.
    pub fn shift(&mut self, e: i64) {
        if e == 0 || self.terms.is_empty() {
            return;
        }
        self.terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(k, v)| (k + e, v))
            .collect();
    }

    pub fn shifted(&self, e: i64) -> Self {
        let mut out = self.clone();
        out.shift(e);
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQ {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Substitute `q = 1`, a ring homomorphism onto the integers.
    pub fn eval_q1(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Evaluate at an arbitrary integer value of `q`; requires `v != 0`
    /// when negative exponents are present (panics otherwise).
    pub fn eval_int(&self, v: &BigInt) -> BigInt {
        let mut num = BigInt::zero();
        let low = self.min_exp().unwrap_or(0).min(0);
        for (e, c) in &self.terms {
            num += c * v.pow((*e - low) as u32);
        }
        // divide by v^(-low); exact because every term carried the factor
        if low < 0 {
            let d = v.pow((-low) as u32);
            assert!(!d.is_zero(), "evaluation at q=0 with negative exponents");
            num / d
        } else {
            num
        }
    }

    /// Substitute `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        LaurentQ {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// If `self = ±q^m`, return `(sign, m)`.
    pub fn as_unit_monomial(&self) -> Option<(i8, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if c.is_one() {
            Some((1, *e))
        } else if (-c).is_one() {
            Some((-1, *e))
        } else {
            None
        }
    }

    /// Exact division by `±q^m`; the only units of the ring.
    pub fn div_unit_monomial(&self, sign: i8, m: i64) -> Self {
        let mut out = self.shifted(-m);
        if sign < 0 {
            out = -&out;
        }
        out
    }

    /// Exact division by an integer; `None` if any coefficient is not
    /// divisible.
    pub fn div_exact_int(&self, d: &BigInt) -> Option<Self> {
        assert!(!d.is_zero());
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (quo, rem) = num_integer::Integer::div_rem(c, d);
            if !rem.is_zero() {
                return None;
            }
            terms.insert(*e, quo);
        }
        Some(LaurentQ { terms })
    }

    /// True when all coefficients are integers times `q^0` -- i.e. the
    /// element is a plain integer.
    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| *e == 0)
    }

    fn fmt_with_var(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // print highest powers first
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = abs.is_one();
            match (*e, unit_coeff) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{abs}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with_var(f)
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with_var(f)
    }
}

impl AddAssign<&LaurentQ> for LaurentQ {
    fn add_assign(&mut self, rhs: &LaurentQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentQ> for LaurentQ {
    fn sub_assign(&mut self, rhs: &LaurentQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        // keep the shorter operand outermost
        let (a, b) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentQ::zero();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl MulAssign<&LaurentQ> for LaurentQ {
    fn mul_assign(&mut self, rhs: &LaurentQ) {
        *self = &*self * rhs;
    }
}

/// JSON form: object mapping exponent (as a string) to the decimal string
/// of the coefficient, e.g. `{"-1": "1", "0": "2"}` for `2 + q^-1`.
impl Serialize for LaurentQ {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> = self
            .terms
            .iter()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentQ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut out = LaurentQ::zero();
        for (e, c) in map {
            let e: i64 = e.parse().map_err(D::Error::custom)?;
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn li(v: i64) -> LaurentQ {
        LaurentQ::from_int(v)
    }

    #[test]
    fn qnumber_examples() {
        assert!(LaurentQ::qnumber(0).is_zero());
        // [3]_q = 1 + q + q^2
        let mut expect = li(1);
        expect += &LaurentQ::q_pow(1);
        expect += &LaurentQ::q_pow(2);
        assert_eq!(LaurentQ::qnumber(3), expect);
        // [-2]_q = -q^-1 - q^-2
        let mut expect = LaurentQ::zero();
        expect.add_term(-1, BigInt::from(-1));
        expect.add_term(-2, BigInt::from(-1));
        assert_eq!(LaurentQ::qnumber(-2), expect);
        assert_eq!(LaurentQ::qnumber(1), li(1));
    }

    #[test]
    fn qnumber_difference_recurrence() {
        // [m]_q - [m-1]_q = q^(m-1) for all m
        for m in -10..=10 {
            let diff = &LaurentQ::qnumber(m) - &LaurentQ::qnumber(m - 1);
            assert_eq!(diff, LaurentQ::q_pow(m - 1), "m={m}");
        }
    }

    #[test]
    fn qnumber_addition_law() {
        // [m1 + m2]_q = [m1]_q * q^(m2) + [m2]_q
        for m1 in -10..=10 {
            for m2 in -10..=10 {
                let lhs = LaurentQ::qnumber(m1 + m2);
                let mut rhs = LaurentQ::qnumber(m1).shifted(m2);
                rhs += &LaurentQ::qnumber(m2);
                assert_eq!(lhs, rhs, "m1={m1} m2={m2}");
            }
        }
    }

    #[test]
    fn ring_ops() {
        let a = &LaurentQ::qnumber(3) * &LaurentQ::qnumber(-2);
        let b = &LaurentQ::qnumber(-2) * &LaurentQ::qnumber(3);
        assert_eq!(a, b);
        // (q - 1)[3]_q = q^3 - 1
        let mut qm1 = LaurentQ::q();
        qm1 -= &li(1);
        let p = &qm1 * &LaurentQ::qnumber(3);
        let mut expect = LaurentQ::q_pow(3);
        expect -= &li(1);
        assert_eq!(p, expect);
    }

    #[test]
    fn q1_specialization_is_homomorphism() {
        let xs = [
            LaurentQ::qnumber(4),
            LaurentQ::qnumber(-3),
            LaurentQ::q_pow(2),
            li(7),
        ];
        for a in &xs {
            for b in &xs {
                assert_eq!((a * b).eval_q1(), a.eval_q1() * b.eval_q1());
                assert_eq!((a + b).eval_q1(), a.eval_q1() + b.eval_q1());
            }
        }
    }

    #[test]
    fn unit_monomials() {
        assert_eq!(LaurentQ::q_pow(-3).as_unit_monomial(), Some((1, -3)));
        let m = LaurentQ::monomial(2, BigInt::from(-1));
        assert_eq!(m.as_unit_monomial(), Some((-1, 2)));
        assert_eq!(LaurentQ::qnumber(2).as_unit_monomial(), None);
        let x = LaurentQ::qnumber(5);
        let y = x.shifted(4);
        assert_eq!(y.div_unit_monomial(1, 4), x);
    }

    #[test]
    fn json_round_trip() {
        let x = &LaurentQ::qnumber(-3) * &LaurentQ::qnumber(5);
        let s = serde_json::to_string(&x).unwrap();
        let back: LaurentQ = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn display_form() {
        let mut x = LaurentQ::q_pow(2);
        x -= &li(1);
        x.add_term(-1, BigInt::from(3));
        assert_eq!(x.to_string(), "q^2 - 1 + 3*q^-1");
        assert_eq!(LaurentQ::zero().to_string(), "0");
    }
}
