//! Exact arithmetic in the type-A Iwahori-Hecke algebra `H_n(q)` in the
//! `T_w` basis, with the quadratic relation `(T_i - q)(T_i + 1) = 0`.
//!
//! Multiplication rewrites products through the two-case rule
//! `T_w T_{s_i} = T_{w s_i}` when the length goes up, and
//! `q T_{w s_i} + (q-1) T_w` when it goes down; general right factors are
//! decomposed into reduced words, which Matsumoto's theorem makes
//! unambiguous.

mod center;
mod evaluate;

pub use center::{gamma_expand, geck_rouquier_basis, geck_rouquier_element};
pub use evaluate::{ev_n, ev_n_unscaled, jm_elementary_sum};

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::exactalg::LaurentQ;
use crate::symmgroup::{GroupAlgebraElem, Permutation};

#[derive(Debug, thiserror::Error)]
pub enum HeckeError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("index {i} out of range 1..={n}")]
    IndexOutOfRange { i: usize, n: usize },
    #[error("rank {n} exceeds the configured bound {bound}")]
    SizeGuard { n: usize, bound: usize },
    #[error("element is not central")]
    NotCentral,
    #[error("minimal-length representatives of class {0} carry different coefficients")]
    InconsistentCoefficients(Partition),
    #[error("expansion leaves a nonzero residual")]
    NonzeroResidual,
    #[error("solved coefficient is not a Laurent polynomial")]
    NotLaurent,
    #[error("linear system for the central basis is underdetermined at rank {0}")]
    Underdetermined(usize),
    #[error("central element failed verification: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    ClassGuard(#[from] crate::symmgroup::ClassSizeGuard),
}

/// Element of `H_n(q)`: the ambient rank plus a finite map from
/// permutations to nonzero Laurent coefficients.
#[derive(Clone, Default)]
pub struct HeckeElem {
    n: usize,
    terms: HashMap<Permutation, LaurentQ>,
}

impl PartialEq for HeckeElem {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.terms == other.terms
    }
}

impl Eq for HeckeElem {}

impl HeckeElem {
    pub fn zero(n: usize) -> Self {
        HeckeElem { n, terms: HashMap::new() }
    }

    /// The identity `T_id`.
    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    /// The basis element `T_w`.
    pub fn basis(w: Permutation) -> Self {
        let n = w.n();
        let mut terms = HashMap::new();
        terms.insert(w, LaurentQ::one());
        HeckeElem { n, terms }
    }

    /// `c * T_w`.
    pub fn term(w: Permutation, c: LaurentQ) -> Self {
        let n = w.n();
        let mut terms = HashMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        HeckeElem { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentQ {
        self.terms.get(w).cloned().unwrap_or_else(LaurentQ::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &LaurentQ)> {
        self.terms.iter()
    }

    /// Terms sorted by one-line notation, for deterministic output.
    pub fn sorted_terms(&self) -> Vec<(&Permutation, &LaurentQ)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn add_term(&mut self, w: Permutation, c: LaurentQ) {
        debug_assert_eq!(w.n(), self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &HeckeElem) -> HeckeElem {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &HeckeElem) -> HeckeElem {
        assert_eq!(self.n, rhs.n, "rank mismatch");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentQ) -> HeckeElem {
        let mut out = HeckeElem::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (w, v) in &self.terms {
            out.terms.insert(w.clone(), v * c);
        }
        out
    }

    /// Right multiplication by the generator `T_{s_i}`.
    pub fn mul_gen_right(&self, i: usize) -> HeckeElem {
        let mut out = HeckeElem::zero(self.n);
        out.terms.reserve(self.terms.len() * 2);
        let q = LaurentQ::q();
        let qm1 = &q - &LaurentQ::one();
        for (w, c) in &self.terms {
            let ws = w.mul_adjacent_right(i);
            if !w.has_right_descent(i) {
                // length goes up
                out.add_term(ws, c.clone());
            } else {
                out.add_term(ws, c.shifted(1));
                out.add_term(w.clone(), c * &qm1);
            }
        }
        out
    }

    /// Left multiplication by the generator `T_{s_i}`.
    pub fn mul_gen_left(&self, i: usize) -> HeckeElem {
        let qm1 = &LaurentQ::q() - &LaurentQ::one();
        let mut out = HeckeElem::zero(self.n);
        out.terms.reserve(self.terms.len() * 2);
        for (w, c) in &self.terms {
            let sw = w.mul_adjacent_left(i);
            // l(s_i w) > l(w) iff w^{-1}(i) < w^{-1}(i+1)
            if sw.length() > w.length() {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(sw, c.shifted(1));
                out.add_term(w.clone(), c * &qm1);
            }
        }
        out
    }

    /// Right multiplication by the basis element `T_v`, decomposing `v`
    /// into a reduced word.
    pub fn mul_basis_right(&self, v: &Permutation) -> HeckeElem {
        let mut out = self.clone();
        for i in v.reduced_word() {
            out = out.mul_gen_right(i);
        }
        out
    }

    /// Product in `H_n(q)`.
    pub fn mul(&self, rhs: &HeckeElem) -> Result<HeckeElem, HeckeError> {
        if self.n != rhs.n {
            return Err(HeckeError::RankMismatch(self.n, rhs.n));
        }
        let mut out = HeckeElem::zero(self.n);
        for (v, c) in &rhs.terms {
            let part = self.mul_basis_right(v).scale(c);
            for (w, cv) in part.terms {
                out.add_term(w, cv);
            }
        }
        Ok(out)
    }

    /// True iff the element commutes with every generator.
    pub fn is_central(&self) -> bool {
        (1..self.n).all(|i| self.mul_gen_right(i) == self.mul_gen_left(i))
    }

    /// Substitute `q = 1`, landing in the integral group algebra.
    pub fn specialize_q1(&self) -> GroupAlgebraElem {
        let mut out = GroupAlgebraElem::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.eval_q1());
        }
        out
    }

    /// The trace functional: the coefficient of `T_id`.
    pub fn trace_coeff(&self) -> LaurentQ {
        self.coeff(&Permutation::identity(self.n))
    }
}

/// The Jucys-Murphy element `L_i = sum_{1<=j<i} q^(j-i) T_(i,j)`; `L_1 = 0`.
pub fn jm_element(i: usize, n: usize) -> Result<HeckeElem, HeckeError> {
    if i < 1 || i > n {
        return Err(HeckeError::IndexOutOfRange { i, n });
    }
    let mut out = HeckeElem::zero(n);
    for j in 1..i {
        out.add_term(
            Permutation::transposition(i, j, n),
            LaurentQ::q_pow(j as i64 - i as i64),
        );
    }
    Ok(out)
}

/// The rescaled Jucys-Murphy element `q * L_i`; these satisfy
/// `e_r(q L_1, ..., q L_n) = sum over partitions mu of r of Gamma_mu`.
pub fn jm_element_scaled(i: usize, n: usize) -> Result<HeckeElem, HeckeError> {
    Ok(jm_element(i, n)?.scale(&LaurentQ::q()))
}

/// Coefficient of `T_u` in the product `a * b`, extracted through the
/// trace form `tau(T_w T_v) = q^(l(w)) [v = w^(-1)]` without forming the
/// full product: `coeff = q^(-l(u)) * sum_w a_w * (b T_(u^-1))_(w^-1) *
/// q^(l(w))`.
pub fn product_coeff(a: &HeckeElem, b: &HeckeElem, u: &Permutation) -> LaurentQ {
    assert_eq!(a.n(), b.n(), "rank mismatch");
    let y = b.mul_basis_right(&u.inverse());
    let mut tau = LaurentQ::zero();
    for (w, aw) in a.iter() {
        let yw = y.coeff(&w.inverse());
        if yw.is_zero() {
            continue;
        }
        tau += &(aw * &yw).shifted(w.length() as i64);
    }
    tau.shifted(-(u.length() as i64))
}

/// JSON form: `{"n": rank, "terms": [{"perm": [...], "coeff": {...}}]}`
/// with terms sorted by one-line notation.
#[derive(Serialize, Deserialize)]
struct HeckeElemJson {
    n: usize,
    terms: Vec<HeckeTermJson>,
}

#[derive(Serialize, Deserialize)]
struct HeckeTermJson {
    perm: Permutation,
    coeff: LaurentQ,
}

impl Serialize for HeckeElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .sorted_terms()
            .into_iter()
            .map(|(w, c)| HeckeTermJson { perm: w.clone(), coeff: c.clone() })
            .collect();
        HeckeElemJson { n: self.n, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HeckeElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = HeckeElemJson::deserialize(d)?;
        let mut out = HeckeElem::zero(j.n);
        for t in j.terms {
            if t.perm.n() != j.n {
                return Err(serde::de::Error::custom("term rank mismatch"));
            }
            out.add_term(t.perm, t.coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for HeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.sorted_terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let name = if w.is_identity() { "T[id]".to_string() } else { format!("T{w}") };
            if c.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "({c})*{name}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `T_w` from a generator word (not necessarily reduced): the actual
/// product `T_{i_1} ... T_{i_l}` in the algebra.
pub fn t_word(word: &[usize], n: usize) -> HeckeElem {
    let mut out = HeckeElem::one(n);
    for &i in word {
        out = out.mul_gen_right(i);
    }
    out
}
