//! Symmetric functions over `R[q,q^-1]` in the monomial basis, polynomials
//! in the elementary symmetric functions, conversions between the two, and
//! evaluation at finite multisets.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::exactalg::{IvlPoly, LaurentQ};

/// Element of `R[q,q^-1] (x) Lambda` in the monomial basis: a finite map
/// `lambda -> coefficient` meaning `sum coeff * m_lambda`. The element
/// is exact in infinitely many variables; restricting to `N >= l(lambda)`
/// variables for every `lambda` in the support is faithful.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFuncElem {
    terms: BTreeMap<Partition, IvlPoly>,
}

/// Polynomial in the elementary symmetric functions: a finite map from
/// multisets of e-indices (stored as partitions) to coefficients, meaning
/// `sum coeff * e_{eta_1} e_{eta_2} ...`. The representation is unique
/// since Lambda is free on the e_r.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct EPolyElem {
    terms: BTreeMap<Partition, IvlPoly>,
}

impl SymFuncElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial_term(Partition::empty(), IvlPoly::one())
    }

    /// `coeff * m_lambda`.
    pub fn monomial_term(lambda: Partition, coeff: IvlPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(lambda, coeff);
        }
        SymFuncElem { terms }
    }

    /// The monomial symmetric function `m_lambda`.
    pub fn monomial(lambda: Partition) -> Self {
        Self::monomial_term(lambda, IvlPoly::one())
    }

    /// The elementary symmetric function `e_r = m_(1^r)`.
    pub fn elementary(r: u32) -> Self {
        Self::monomial(Partition::from_unsorted(std::iter::repeat(1).take(r as usize)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &IvlPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> IvlPoly {
        self.terms.get(lambda).cloned().unwrap_or_else(IvlPoly::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: &IvlPoly) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &SymFuncElem) -> SymFuncElem {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &SymFuncElem) -> SymFuncElem {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &IvlPoly) -> SymFuncElem {
        let mut out = SymFuncElem::zero();
        for (l, v) in &self.terms {
            out.add_term(l.clone(), &(v * c));
        }
        out
    }

    /// Largest `|lambda|` in the support (0 for the zero element).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    /// Smallest variable count for which every supported monomial survives
    /// truncation.
    pub fn min_vars(&self) -> usize {
        self.terms.keys().map(Partition::len).max().unwrap_or(0)
    }

    /// The part of the element that is homogeneous of degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> SymFuncElem {
        let mut out = SymFuncElem::zero();
        for (l, c) in &self.terms {
            if l.size() == k {
                out.add_term(l.clone(), c);
            }
        }
        out
    }

    /// Product in `Lambda`, via the direct combinatorial rule: the
    /// coefficient of `m_nu` counts pairs of padded arrangements of the two
    /// factors summing to `nu` componentwise.
    pub fn mul(&self, rhs: &SymFuncElem) -> SymFuncElem {
        let mut out = SymFuncElem::zero();
        for (la, ca) in &self.terms {
            for (lb, cb) in &rhs.terms {
                let c = ca * cb;
                for (nu, mult) in monomial_product(la, lb) {
                    out.add_term(nu, &c.scale(&LaurentQ::from_int(mult as i64)));
                }
            }
        }
        out
    }

    /// Evaluate at a finite multiset of Laurent values with `t = t_value`:
    /// restrict to `values.len()` variables and substitute. Symmetry makes
    /// the order of `values` irrelevant.
    pub fn evaluate(&self, values: &[LaurentQ], t_value: i64) -> LaurentQ {
        let mut out = LaurentQ::zero();
        for (lambda, coeff) in &self.terms {
            let m_val = evaluate_monomial(lambda, values);
            if m_val.is_zero() {
                continue;
            }
            out += &(&coeff.eval(t_value) * &m_val);
        }
        out
    }
}

/// `m_lambda(values)`: sum over distinct arrangements of the exponent
/// vector of `lambda` padded with zeros to `values.len()` entries.
fn evaluate_monomial(lambda: &Partition, values: &[LaurentQ]) -> LaurentQ {
    let n = values.len();
    if lambda.len() > n {
        return LaurentQ::zero();
    }
    let mut exps: Vec<u32> = lambda.parts().to_vec();
    exps.resize(n, 0);
    // powers[i][k] = values[i]^k, k up to lambda_1
    let max_pow = lambda.part(0) as usize;
    let powers: Vec<Vec<LaurentQ>> = values
        .iter()
        .map(|v| {
            let mut row = Vec::with_capacity(max_pow + 1);
            row.push(LaurentQ::one());
            for k in 1..=max_pow {
                let prev = &row[k - 1];
                row.push(prev * v);
            }
            row
        })
        .collect();
    let mut out = LaurentQ::zero();
    for arrangement in distinct_permutations(&mut exps) {
        let mut term = LaurentQ::one();
        for (i, &e) in arrangement.iter().enumerate() {
            if e > 0 {
                term = &term * &powers[i][e as usize];
            }
        }
        out += &term;
    }
    out
}

/// All distinct permutations of a multiset, in lexicographic order.
fn distinct_permutations(v: &mut [u32]) -> Vec<Vec<u32>> {
    v.sort_unstable();
    let mut out = vec![v.to_vec()];
    loop {
        // next lexicographic permutation of a multiset
        let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.to_vec());
    }
    out
}

/// Structure constants of the monomial basis: `m_a * m_b = sum mult * m_nu`.
/// For each distinct arrangement `alpha` of `a` padded to `l(a)+l(b)`
/// entries, and each distinct arrangement `beta` of `b`, the sorted vector
/// `alpha + beta` contributes one pair; the multiplicity of `nu` is the
/// number of pairs producing `nu`, divided by the stabiliser overcount,
/// handled by fixing `nu`'s arrangement as the sorted sum.
fn monomial_product(a: &Partition, b: &Partition) -> BTreeMap<Partition, u64> {
    // coefficient of m_nu in m_a * m_b = number of pairs (alpha, beta) of
    // padded arrangements with alpha + beta = nu (as a fixed vector of
    // length l(nu) <= l(a) + l(b))
    let la = a.len();
    let lb = b.len();
    let width = la + lb;
    let mut alpha: Vec<u32> = a.parts().to_vec();
    alpha.resize(width, 0);
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut b_padded: Vec<u32> = b.parts().to_vec();
    b_padded.resize(width, 0);
    let betas = {
        let mut v = b_padded.clone();
        distinct_permutations(&mut v)
    };
    for alpha_arr in distinct_permutations(&mut alpha) {
        for beta_arr in &betas {
            let sum: Vec<u32> =
                alpha_arr.iter().zip(beta_arr).map(|(x, y)| x + y).collect();
            let nu = Partition::from_unsorted(sum.iter().copied());
            // only count pairs whose sum vector is already sorted descending,
            // restricted to the first l(nu) coordinates; this picks exactly
            // one representative per orbit of the diagonal action
            let mut sorted = sum.clone();
            sorted.sort_unstable_by(|x, y| y.cmp(x));
            if sum == sorted {
                *counts.entry(nu).or_insert(0) += 1;
            }
        }
    }
    counts
}

impl EPolyElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Partition::empty(), IvlPoly::one())
    }

    /// `coeff * e_eta` where `e_eta = prod_i e_{eta_i}`.
    pub fn term(eta: Partition, coeff: IvlPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(eta, coeff);
        }
        EPolyElem { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &IvlPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, eta: &Partition) -> IvlPoly {
        self.terms.get(eta).cloned().unwrap_or_else(IvlPoly::zero)
    }

    pub fn add_term(&mut self, eta: Partition, coeff: &IvlPoly) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(eta) {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &EPolyElem) -> EPolyElem {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &IvlPoly) -> EPolyElem {
        let mut out = EPolyElem::zero();
        for (e, v) in &self.terms {
            out.add_term(e.clone(), &(v * c));
        }
        out
    }

    /// Product: multiset union of e-indices, bilinear.
    pub fn mul(&self, rhs: &EPolyElem) -> EPolyElem {
        let mut out = EPolyElem::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let eta = Partition::from_unsorted(
                    ea.parts().iter().chain(eb.parts()).copied(),
                );
                out.add_term(eta, &(ca * cb));
            }
        }
        out
    }
}

/// Expand a polynomial in the `e_r` into the monomial basis.
pub fn e_to_m(p: &EPolyElem) -> SymFuncElem {
    let mut out = SymFuncElem::zero();
    for (eta, coeff) in p.iter() {
        let mut prod = SymFuncElem::one();
        for &r in eta.parts() {
            prod = prod.mul(&SymFuncElem::elementary(r));
        }
        out = out.add(&prod.scale(coeff));
    }
    out
}

/// Write a symmetric function as a polynomial in the `e_r`, degree by
/// degree via the unitriangularity of `e_{lambda'}` against `m_lambda`.
/// `e_to_m(m_to_e(f)) = f` always.
pub fn m_to_e(f: &SymFuncElem) -> EPolyElem {
    let mut out = EPolyElem::zero();
    let mut rest = f.clone();
    while !rest.is_zero() {
        // peel the largest monomial in the canonical partition order;
        // e_{lambda'} = m_lambda + (strictly smaller terms in dominance,
        // hence smaller in any linear extension refined by our order on
        // equal sizes? dominance-maximal is what matters; take a
        // dominance-maximal partition among the support of top degree)
        let k = rest.degree();
        let top = rest.homogeneous_part(k);
        let lambda = dominance_maximal(top.terms.keys().collect());
        let c = rest.coeff(&lambda);
        let eta = lambda.conjugate();
        let mut e_expanded = SymFuncElem::one();
        for &r in eta.parts() {
            e_expanded = e_expanded.mul(&SymFuncElem::elementary(r));
        }
        out.add_term(eta, &c);
        rest = rest.sub(&e_expanded.scale(&c));
    }
    out
}

/// A dominance-maximal element of a nonempty set of same-size partitions.
fn dominance_maximal(mut candidates: Vec<&Partition>) -> Partition {
    let dominates = |a: &Partition, b: &Partition| -> bool {
        // a >= b in dominance order (same size)
        let mut sa = 0u32;
        let mut sb = 0u32;
        for i in 0..a.len().max(b.len()) {
            sa += a.part(i);
            sb += b.part(i);
            if sa < sb {
                return false;
            }
        }
        true
    };
    let mut best = candidates.pop().expect("nonempty support");
    for c in candidates {
        if dominates(c, best) {
            best = c;
        }
    }
    best.clone()
}

impl fmt::Display for SymFuncElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if l.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*m{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFuncElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for EPolyElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (eta, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if eta.is_empty() {
                write!(f, "({c})")?;
            } else {
                let es: Vec<String> = eta.parts().iter().map(|r| format!("e{r}")).collect();
                write!(f, "({c})*{}", es.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EPolyElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized monomial-basis term.
#[derive(Serialize, Deserialize)]
struct MTermJson {
    partition: Partition,
    coeff: IvlPoly,
}

/// Serialized e-basis term.
#[derive(Serialize, Deserialize)]
struct ETermJson {
    epartition: Partition,
    coeff: IvlPoly,
}

impl Serialize for SymFuncElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<MTermJson> = self
            .terms
            .iter()
            .map(|(l, c)| MTermJson { partition: l.clone(), coeff: c.clone() })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFuncElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<MTermJson>::deserialize(d)?;
        let mut out = SymFuncElem::zero();
        for t in v {
            out.add_term(t.partition, &t.coeff);
        }
        Ok(out)
    }
}

impl Serialize for EPolyElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<ETermJson> = self
            .terms
            .iter()
            .map(|(l, c)| ETermJson { epartition: l.clone(), coeff: c.clone() })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for EPolyElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<ETermJson>::deserialize(d)?;
        let mut out = EPolyElem::zero();
        for t in v {
            out.add_term(t.epartition, &t.coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    /// Oracle: expand a symmetric function in `nvars` variables as an
    /// explicit multivariate polynomial (exponent vector -> coefficient).
    fn expand(f: &SymFuncElem, nvars: usize) -> BTreeMap<Vec<u32>, IvlPoly> {
        let mut out: BTreeMap<Vec<u32>, IvlPoly> = BTreeMap::new();
        for (lambda, coeff) in f.iter() {
            if lambda.len() > nvars {
                continue;
            }
            let mut exps: Vec<u32> = lambda.parts().to_vec();
            exps.resize(nvars, 0);
            for arr in distinct_permutations(&mut exps) {
                let entry = out.entry(arr).or_insert_with(IvlPoly::zero);
                *entry += coeff;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Oracle: multiply two expanded polynomials.
    fn expand_mul(
        a: &BTreeMap<Vec<u32>, IvlPoly>,
        b: &BTreeMap<Vec<u32>, IvlPoly>,
    ) -> BTreeMap<Vec<u32>, IvlPoly> {
        let mut out: BTreeMap<Vec<u32>, IvlPoly> = BTreeMap::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = out.entry(e).or_insert_with(IvlPoly::zero);
                *entry += &(ca * cb);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    #[test]
    fn monomial_mul_examples() {
        // m_(1) * m_(1) = 2 m_(1,1) + m_(2)
        let m1 = SymFuncElem::monomial(pt(&[1]));
        let p = m1.mul(&m1);
        assert_eq!(p.coeff(&pt(&[1, 1])), IvlPoly::constant(LaurentQ::from_int(2)));
        assert_eq!(p.coeff(&pt(&[2])), IvlPoly::one());
        assert_eq!(p.iter().count(), 2);
        // 1 * f = f
        let f = SymFuncElem::monomial(pt(&[3, 1]));
        assert_eq!(SymFuncElem::one().mul(&f), f);
    }

    #[test]
    fn monomial_mul_matches_expansion_oracle() {
        let shapes = [
            pt(&[1]),
            pt(&[2]),
            pt(&[1, 1]),
            pt(&[2, 1]),
            pt(&[3]),
            pt(&[2, 2]),
        ];
        for a in &shapes {
            for b in &shapes {
                let fa = SymFuncElem::monomial(a.clone());
                let fb = SymFuncElem::monomial(b.clone());
                let prod = fa.mul(&fb);
                let nvars = (a.size() + b.size()) as usize;
                let lhs = expand(&prod, nvars);
                let rhs = expand_mul(&expand(&fa, nvars), &expand(&fb, nvars));
                assert_eq!(lhs, rhs, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn generating_function_identity() {
        // sum_r e_r t^r = prod_{i<=N} (1 + x_i t) as polynomials in x_1..x_N, t:
        // equivalently, for each r <= N, e_r expanded in N variables equals the
        // r-th elementary symmetric polynomial
        for nvars in 1..=6usize {
            for r in 0..=nvars {
                let er = expand(&SymFuncElem::elementary(r as u32), nvars);
                // build the elementary polynomial directly
                let mut expect: BTreeMap<Vec<u32>, IvlPoly> = BTreeMap::new();
                // choose r indices out of nvars
                fn choose(
                    start: usize,
                    left: usize,
                    nvars: usize,
                    cur: &mut Vec<usize>,
                    out: &mut BTreeMap<Vec<u32>, IvlPoly>,
                ) {
                    if left == 0 {
                        let mut e = vec![0u32; nvars];
                        for &i in cur.iter() {
                            e[i] = 1;
                        }
                        out.insert(e, IvlPoly::one());
                        return;
                    }
                    for i in start..nvars {
                        cur.push(i);
                        choose(i + 1, left - 1, nvars, cur, out);
                        cur.pop();
                    }
                }
                choose(0, r, nvars, &mut vec![], &mut expect);
                assert_eq!(er, expect, "nvars={nvars} r={r}");
            }
        }
    }

    #[test]
    fn e_to_m_examples() {
        // e_2 = m_(1,1)
        let f = e_to_m(&EPolyElem::term(pt(&[2]), IvlPoly::one()));
        assert_eq!(f, SymFuncElem::monomial(pt(&[1, 1])));
        // e_1^2 = 2 m_(1,1) + m_(2)
        let f = e_to_m(&EPolyElem::term(pt(&[1, 1]), IvlPoly::one()));
        assert_eq!(f.coeff(&pt(&[1, 1])), IvlPoly::constant(LaurentQ::from_int(2)));
        assert_eq!(f.coeff(&pt(&[2])), IvlPoly::one());
        // e_1 * e_2 = 3 m_(1,1,1) + m_(2,1)
        let f = e_to_m(&EPolyElem::term(pt(&[2, 1]), IvlPoly::one()));
        assert_eq!(f.coeff(&pt(&[1, 1, 1])), IvlPoly::constant(LaurentQ::from_int(3)));
        assert_eq!(f.coeff(&pt(&[2, 1])), IvlPoly::one());
        assert_eq!(f.iter().count(), 2);
    }

    #[test]
    fn m_to_e_examples() {
        // m_(1,1) = e_2
        let e = m_to_e(&SymFuncElem::monomial(pt(&[1, 1])));
        assert_eq!(e, EPolyElem::term(pt(&[2]), IvlPoly::one()));
        // m_(2) = e_1^2 - 2 e_2
        let e = m_to_e(&SymFuncElem::monomial(pt(&[2])));
        assert_eq!(e.coeff(&pt(&[1, 1])), IvlPoly::one());
        assert_eq!(e.coeff(&pt(&[2])), IvlPoly::constant(LaurentQ::from_int(-2)));
        assert_eq!(e.iter().count(), 2);
        // m_(1) = e_1
        let e = m_to_e(&SymFuncElem::monomial(pt(&[1])));
        assert_eq!(e, EPolyElem::term(pt(&[1]), IvlPoly::one()));
    }

    #[test]
    fn e_m_round_trip() {
        // e_to_m(m_to_e(f)) = f for all m_lambda with |lambda| <= 5, and a
        // mixed-degree element with t-dependent coefficients
        for lam in Partition::all_up_to_size(5) {
            let f = SymFuncElem::monomial(lam.clone());
            assert_eq!(e_to_m(&m_to_e(&f)), f, "lambda={lam}");
        }
        let mut f = SymFuncElem::monomial_term(pt(&[2, 1]), IvlPoly::t());
        f = f.add(&SymFuncElem::monomial_term(
            pt(&[1]),
            IvlPoly::constant(LaurentQ::qnumber(-2)),
        ));
        f = f.add(&SymFuncElem::one());
        assert_eq!(e_to_m(&m_to_e(&f)), f);
    }

    #[test]
    fn evaluate_examples() {
        // e_1 at q-contents of (2) = {0, 1}: 1
        let e1 = SymFuncElem::elementary(1);
        let vals = vec![LaurentQ::zero(), LaurentQ::one()];
        assert_eq!(e1.evaluate(&vals, 0), LaurentQ::one());
        // e_r at fewer than r values vanishes
        let e3 = SymFuncElem::elementary(3);
        assert!(e3.evaluate(&vals, 5).is_zero());
        // m_(2) at {1, q} = 1 + q^2
        let m2 = SymFuncElem::monomial(pt(&[2]));
        let vals = vec![LaurentQ::one(), LaurentQ::q()];
        let mut expect = LaurentQ::one();
        expect += &LaurentQ::q_pow(2);
        assert_eq!(m2.evaluate(&vals, 0), expect);
    }

    #[test]
    fn evaluate_is_symmetric_and_multiplicative() {
        let vals = vec![
            LaurentQ::qnumber(2),
            LaurentQ::qnumber(-1),
            LaurentQ::q_pow(2),
            LaurentQ::from_int(3),
        ];
        let mut shuffled = vals.clone();
        shuffled.reverse();
        shuffled.swap(0, 1);
        let fs = [
            SymFuncElem::monomial(pt(&[2, 1])),
            SymFuncElem::elementary(2),
            SymFuncElem::monomial(pt(&[1, 1])),
            SymFuncElem::monomial(pt(&[3])),
        ];
        for f in &fs {
            assert_eq!(f.evaluate(&vals, 3), f.evaluate(&shuffled, 3));
            for g in &fs {
                assert_eq!(
                    f.mul(g).evaluate(&vals, 3),
                    &f.evaluate(&vals, 3) * &g.evaluate(&vals, 3)
                );
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let mut f = SymFuncElem::monomial_term(pt(&[2, 1]), IvlPoly::t());
        f = f.add(&SymFuncElem::one());
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.contains("partition"));
        let back: SymFuncElem = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let e = m_to_e(&f);
        let s = serde_json::to_string(&e).unwrap();
        assert!(s.contains("epartition"));
        let back: EPolyElem = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
        let _ = BigInt::from(0);
    }
}
