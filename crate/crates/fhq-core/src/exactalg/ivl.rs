//! Integer-valued polynomials in `t` with Laurent-polynomial coefficients,
//! stored in the binomial basis: `sum_r c_r(q) * C(t, r)`.
//!
//! Integrality of every integer evaluation is structural in this basis, and
//! interpolation through consecutive integer nodes is division-free via
//! forward differences.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::binomial::{binomial, binomial_product_coeff};
use super::laurent::LaurentQ;

/// Element of `R[q, q^-1]` (`R` the ring of integer-valued polynomials):
/// a finite map `r -> c_r(q)` denoting `sum_r c_r(q) * C(t, r)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IvlPoly {
    terms: BTreeMap<u32, LaurentQ>,
}

/// Interpolation failure: the fitted polynomial does not lie in
/// `R[q,q^-1]`, i.e. some coefficient is not a Laurent polynomial with
/// integer coefficients.
#[derive(Debug, thiserror::Error)]
#[error("interpolant is not integer-valued in the binomial basis")]
pub struct NonIntegral;

impl IvlPoly {
    pub fn zero() -> Self {
        IvlPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(LaurentQ::one())
    }

    pub fn constant(c: LaurentQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        IvlPoly { terms }
    }

    /// `c(q) * C(t, r)`.
    pub fn term(r: u32, c: LaurentQ) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(r, c);
        }
        IvlPoly { terms }
    }

    /// The polynomial `t` itself (`= C(t,1)`).
    pub fn t() -> Self {
        Self::term(1, LaurentQ::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree in `t`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, r: u32) -> LaurentQ {
        self.terms.get(&r).cloned().unwrap_or_else(LaurentQ::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u32, &LaurentQ)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, r: u32, c: &LaurentQ) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(r) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Evaluate at the integer `t = n`, exactly.
    pub fn eval(&self, n: i64) -> LaurentQ {
        let mut out = LaurentQ::zero();
        for (r, c) in &self.terms {
            let b = binomial(n, *r);
            out += &c.scale(&b);
        }
        out
    }

    /// If the polynomial is constant in `t`, return that constant.
    pub fn as_t_constant(&self) -> Option<LaurentQ> {
        match self.degree() {
            None => Some(LaurentQ::zero()),
            Some(0) => Some(self.coeff(0)),
            Some(_) => None,
        }
    }

    pub fn scale(&self, c: &LaurentQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (r, v) in &self.terms {
            out.add_term(*r, &(v * c));
        }
        out
    }

    /// Substitute `q = 1` in every coefficient.
    pub fn eval_q1(&self) -> IvlPoly {
        let mut out = Self::zero();
        for (r, c) in &self.terms {
            out.add_term(*r, &LaurentQ::from_bigint(c.eval_q1()));
        }
        out
    }

    /// True when no coefficient involves `q` (all are plain integers).
    pub fn is_q_free(&self) -> bool {
        self.terms.values().all(LaurentQ::is_constant)
    }
}

impl AddAssign<&IvlPoly> for IvlPoly {
    fn add_assign(&mut self, rhs: &IvlPoly) {
        for (r, c) in &rhs.terms {
            self.add_term(*r, c);
        }
    }
}

impl SubAssign<&IvlPoly> for IvlPoly {
    fn sub_assign(&mut self, rhs: &IvlPoly) {
        for (r, c) in &rhs.terms {
            self.add_term(*r, &-c);
        }
    }
}

impl Add for &IvlPoly {
    type Output = IvlPoly;
    fn add(self, rhs: &IvlPoly) -> IvlPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &IvlPoly {
    type Output = IvlPoly;
    fn sub(self, rhs: &IvlPoly) -> IvlPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &IvlPoly {
    type Output = IvlPoly;
    fn neg(self) -> IvlPoly {
        let mut out = IvlPoly::zero();
        for (r, c) in &self.terms {
            out.add_term(*r, &-c);
        }
        out
    }
}

impl Mul for &IvlPoly {
    type Output = IvlPoly;
    fn mul(self, rhs: &IvlPoly) -> IvlPoly {
        let mut out = IvlPoly::zero();
        for (i, ci) in &self.terms {
            for (j, cj) in &rhs.terms {
                let cij = ci * cj;
                for k in (*i.max(j))..=(i + j) {
                    let n = binomial_product_coeff(*i, *j, k);
                    out.add_term(k, &cij.scale(&n));
                }
            }
        }
        out
    }
}

impl fmt::Display for IvlPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (r, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match r {
                0 => write!(f, "({c})")?,
                _ => write!(f, "({c})*C(t,{r})")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IvlPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// JSON form: object mapping `r` (as a string) to the JSON form of the
/// Laurent coefficient.
impl Serialize for IvlPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, &LaurentQ> =
            self.terms.iter().map(|(r, c)| (r.to_string(), c)).collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IvlPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, LaurentQ>::deserialize(deserializer)?;
        let mut out = IvlPoly::zero();
        for (r, c) in map {
            let r: u32 = r.parse().map_err(D::Error::custom)?;
            out.add_term(r, &c);
        }
        Ok(out)
    }
}

/// Rewrite `C(t - a, r)` in the `C(t, k)` basis via Vandermonde:
/// `C(t - a, r) = sum_k C(-a, r - k) * C(t, k)`.
fn shifted_binomial_basis(a: i64, r: u32) -> IvlPoly {
    let mut out = IvlPoly::zero();
    for k in 0..=r {
        let c = binomial(-a, r - k);
        out.add_term(k, &LaurentQ::from_bigint(c));
    }
    out
}

/// Interpolate the unique polynomial of degree `< points.len()` in `t`
/// through the given `(node, value)` pairs. Nodes must be pairwise
/// distinct. Consecutive integer nodes use division-free forward
/// differences; general nodes use an exact fraction-free solve, and the
/// result is verified to have Laurent-polynomial coefficients
/// ([`NonIntegral`] otherwise).
pub fn interpolate_binomial(points: &[(i64, LaurentQ)]) -> Result<IvlPoly, NonIntegral> {
    assert!(!points.is_empty(), "interpolation needs at least one point");
    let mut pts = points.to_vec();
    pts.sort_by_key(|(n, _)| *n);
    for w in pts.windows(2) {
        assert!(w[0].0 != w[1].0, "interpolation nodes must be distinct");
    }
    let consecutive = pts.windows(2).all(|w| w[1].0 == w[0].0 + 1);
    if consecutive {
        Ok(newton_forward(&pts))
    } else {
        solve_general(&pts)
    }
}

/// Newton forward-difference interpolation on consecutive integer nodes
/// starting at `pts[0].0`; exact and division-free.
fn newton_forward(pts: &[(i64, LaurentQ)]) -> IvlPoly {
    let n_min = pts[0].0;
    let mut diffs: Vec<LaurentQ> = pts.iter().map(|(_, v)| v.clone()).collect();
    let mut out = IvlPoly::zero();
    for r in 0..pts.len() as u32 {
        // leading entry of the r-th difference row
        let lead = diffs[0].clone();
        if !lead.is_zero() {
            let basis = shifted_binomial_basis(n_min, r);
            out += &basis.scale(&lead);
        }
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
        if diffs.is_empty() {
            break;
        }
    }
    out
}

/// Fraction-free (Bareiss) solve of the binomial-basis Vandermonde system
/// for arbitrary distinct integer nodes. Back-substitution divisions are
/// checked for exactness; failure means the data does not come from
/// `R[q,q^-1]`.
fn solve_general(pts: &[(i64, LaurentQ)]) -> Result<IvlPoly, NonIntegral> {
    let m = pts.len();
    // augmented matrix over Z[q,q^-1]: integer Vandermonde block | values
    let mut a: Vec<Vec<LaurentQ>> = pts
        .iter()
        .map(|(n, v)| {
            let mut row: Vec<LaurentQ> = (0..m as u32)
                .map(|r| LaurentQ::from_bigint(binomial(*n, r)))
                .collect();
            row.push(v.clone());
            row
        })
        .collect();

    // forward elimination; Bareiss divisions are exact over any ring, and
    // the pivots are nonzero integers since the binomial-basis Vandermonde
    // at distinct nodes is invertible
    let mut prev = LaurentQ::one();
    for k in 0..m.saturating_sub(1) {
        if a[k][k].is_zero() {
            let swap = (k + 1..m).find(|&i| !a[i][k].is_zero()).ok_or(NonIntegral)?;
            a.swap(k, swap);
        }
        for i in k + 1..m {
            for j in k + 1..=m {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = exact_div(&num, &prev).expect("Bareiss division is exact");
            }
            a[i][k] = LaurentQ::zero();
        }
        prev = a[k][k].clone();
    }

    // back substitution with exactness checks
    let mut coeffs = vec![LaurentQ::zero(); m];
    for i in (0..m).rev() {
        let mut rhs = a[i][m].clone();
        for j in i + 1..m {
            rhs -= &(&a[i][j] * &coeffs[j]);
        }
        coeffs[i] = exact_div(&rhs, &a[i][i]).ok_or(NonIntegral)?;
    }
    let mut out = IvlPoly::zero();
    for (r, c) in coeffs.iter().enumerate() {
        out.add_term(r as u32, c);
    }
    Ok(out)
}

/// Exact division in `Z[q,q^-1]` when the divisor is an integer times a
/// power of `q`; `None` when not exactly divisible. Divisors arising in
/// the Bareiss recurrence here are plain integers.
fn exact_div(num: &LaurentQ, den: &LaurentQ) -> Option<LaurentQ> {
    if num.is_zero() {
        return Some(LaurentQ::zero());
    }
    if den.num_terms() != 1 {
        return None;
    }
    let (e, c) = den.iter().next().map(|(e, c)| (*e, c.clone()))?;
    num.shifted(-e).div_exact_int(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q() -> LaurentQ {
        LaurentQ::q()
    }

    #[test]
    fn eval_examples() {
        // C(t,2)*q at t=4 -> 6q
        let p = IvlPoly::term(2, q());
        assert_eq!(p.eval(4), q().scale(&BigInt::from(6)));
        // (q-1)(t-1) = (q-1)C(t,1) - (q-1); root at t=1
        let qm1 = &q() - &LaurentQ::one();
        let mut p = IvlPoly::term(1, qm1.clone());
        p -= &IvlPoly::constant(qm1);
        assert!(p.eval(1).is_zero());
        // constants
        let c = LaurentQ::qnumber(3);
        let p = IvlPoly::constant(c.clone());
        for n in -5..5 {
            assert_eq!(p.eval(n), c);
        }
    }

    #[test]
    fn interpolate_consecutive_from_zero() {
        // {(0,0),(1,0),(2,q),(3,3q)} -> q*C(t,2)
        let pts = vec![
            (0, LaurentQ::zero()),
            (1, LaurentQ::zero()),
            (2, q()),
            (3, q().scale(&BigInt::from(3))),
        ];
        let p = interpolate_binomial(&pts).unwrap();
        assert_eq!(p, IvlPoly::term(2, q()));
    }

    #[test]
    fn interpolate_single_point() {
        let v = &LaurentQ::one() + &q();
        let p = interpolate_binomial(&[(5, v.clone())]).unwrap();
        assert_eq!(p, IvlPoly::constant(v));
    }

    #[test]
    fn interpolate_offset_nodes() {
        // {(2,(q-1)),(3,2(q-1)),(4,3(q-1))} -> (q-1)(t-1) = (q-1)C(t,1) - (q-1)
        let qm1 = &q() - &LaurentQ::one();
        let pts = vec![
            (2, qm1.clone()),
            (3, qm1.scale(&BigInt::from(2))),
            (4, qm1.scale(&BigInt::from(3))),
        ];
        let p = interpolate_binomial(&pts).unwrap();
        let mut expect = IvlPoly::term(1, qm1.clone());
        expect -= &IvlPoly::constant(qm1);
        assert_eq!(p, expect);
    }

    #[test]
    fn interpolate_general_nodes_reproduces_points() {
        // non-consecutive nodes force the exact-solve path
        let target = {
            let mut p = IvlPoly::term(2, q());
            p += &IvlPoly::term(1, LaurentQ::qnumber(-2));
            p += &IvlPoly::constant(LaurentQ::from_int(7));
            p
        };
        let nodes = [0i64, 2, 5];
        let pts: Vec<_> = nodes.iter().map(|&n| (n, target.eval(n))).collect();
        let p = interpolate_binomial(&pts).unwrap();
        assert_eq!(p, target);
    }

    #[test]
    fn interpolate_non_integral_detected() {
        // value pattern 0,1 on nodes 0,2 needs c_1 = 1/2: not in R
        let pts = vec![(0, LaurentQ::zero()), (2, LaurentQ::one())];
        assert!(interpolate_binomial(&pts).is_err());
    }

    #[test]
    fn interpolation_reproduces_every_input_point() {
        let pts = vec![
            (1, LaurentQ::qnumber(2)),
            (2, LaurentQ::qnumber(-1)),
            (3, LaurentQ::zero()),
            (4, q()),
        ];
        let p = interpolate_binomial(&pts).unwrap();
        for (n, v) in &pts {
            assert_eq!(&p.eval(*n), v);
        }
    }

    #[test]
    fn product_matches_pointwise_evaluation() {
        let a = {
            let mut p = IvlPoly::term(2, q());
            p += &IvlPoly::term(1, LaurentQ::qnumber(3));
            p
        };
        let b = {
            let mut p = IvlPoly::term(3, LaurentQ::qnumber(-2));
            p += &IvlPoly::constant(LaurentQ::one());
            p
        };
        let prod = &a * &b;
        for n in 0..=10 {
            assert_eq!(prod.eval(n), &a.eval(n) * &b.eval(n), "n={n}");
        }
    }

    #[test]
    fn eval_is_linear() {
        let a = IvlPoly::term(2, q());
        let b = IvlPoly::term(1, LaurentQ::qnumber(-3));
        for n in -3..=6 {
            assert_eq!((&a + &b).eval(n), &a.eval(n) + &b.eval(n));
        }
    }

    #[test]
    fn json_round_trip() {
        let mut p = IvlPoly::term(2, q());
        p += &IvlPoly::constant(LaurentQ::qnumber(-1));
        let s = serde_json::to_string(&p).unwrap();
        let back: IvlPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
