//! Permutations of `{1..n}`: Coxeter length, reduced words, cycle types,
//! reduced cycle types, conjugacy-class enumeration and minimal-length
//! class representatives, plus the integral group algebra needed for
//! `q = 1` cross-checks.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::Partition;

/// Largest rank for which conjugacy classes are enumerated.
pub const CLASS_SIZE_GUARD: usize = 12;

#[derive(Debug, thiserror::Error)]
#[error("rank {n} exceeds the class enumeration bound {bound}")]
pub struct ClassSizeGuard {
    pub n: usize,
    pub bound: usize,
}

/// A permutation of `{1..n}` in one-line notation: `images[i-1] = w(i)`.
///
/// Composition is as functions: `(w * v)(x) = w(v(x))`, and `s_i` denotes
/// the adjacent transposition `(i, i+1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        Permutation { images: (1..=n as u8).collect() }
    }

    /// Build from one-line images; validates bijectivity.
    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v as usize > n || seen[v as usize] {
                return None;
            }
            seen[v as usize] = true;
        }
        Some(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// The transposition `(a b)` in rank `n`.
    pub fn transposition(a: usize, b: usize, n: usize) -> Self {
        assert!(a != b && a >= 1 && b >= 1 && a <= n && b <= n);
        let mut w = Self::identity(n);
        w.images.swap(a - 1, b - 1);
        w
    }

    /// The adjacent transposition `s_i = (i, i+1)`.
    pub fn adjacent(i: usize, n: usize) -> Self {
        Self::transposition(i, i + 1, n)
    }

    /// Function composition `self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "rank mismatch");
        Permutation {
            images: other.images.iter().map(|&v| self.images[v as usize - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u8 + 1;
        }
        Permutation { images }
    }

    /// Right multiplication by `s_i`: swaps positions `i` and `i+1`.
    pub fn mul_adjacent_right(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Left multiplication by `s_i`: swaps values `i` and `i+1`.
    pub fn mul_adjacent_left(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        for v in images.iter_mut() {
            if *v as usize == i {
                *v = i as u8 + 1;
            } else if *v as usize == i + 1 {
                *v = i as u8;
            }
        }
        Permutation { images }
    }

    /// Coxeter length = inversion count.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// True iff `l(w s_i) < l(w)`, i.e. `w(i) > w(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// A reduced word for `w` (generator indices), produced by repeatedly
    /// stripping the smallest right descent. Multiplying
    /// `s_{i_1} ... s_{i_l}` recovers `w`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut stack = Vec::with_capacity(w.length());
        'outer: loop {
            for i in 1..w.n() {
                if w.has_right_descent(i) {
                    w = w.mul_adjacent_right(i);
                    stack.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        stack.reverse();
        stack
    }

    /// Product `s_{word[0]} ... s_{word[last]}` in rank `n`.
    pub fn from_reduced_word(word: &[usize], n: usize) -> Permutation {
        let mut w = Permutation::identity(n);
        for &i in word {
            w = w.mul_adjacent_right(i);
        }
        w
    }

    /// Cycle type as a partition of `n`.
    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut lens = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut x = start;
            loop {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    /// Reduced cycle type: subtract 1 from each part of the cycle type and
    /// drop zeros. Stable across ranks.
    pub fn reduced_cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycle_type().parts().iter().map(|&p| p - 1))
    }

    /// Cycles of length >= 2, each rotated to start at its smallest
    /// element, sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            if cyc.len() >= 2 {
                out.push(cyc);
            }
        }
        out
    }

    /// Parse cycle notation like `(1 2 3)(4 5)`; `()` or the empty string
    /// is the identity. `n` must cover every moved point.
    pub fn from_cycle_notation(s: &str, n: usize) -> Result<Permutation, String> {
        let mut w = Permutation::identity(n);
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(w);
        }
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| format!("expected '(' in {s:?}"))?;
            let close = rest[open..]
                .find(')')
                .map(|c| open + c)
                .ok_or_else(|| format!("unbalanced parentheses in {s:?}"))?;
            let body = &rest[open + 1..close];
            let entries: Result<Vec<usize>, _> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>())
                .collect();
            let entries = entries.map_err(|e| format!("bad cycle entry in {s:?}: {e}"))?;
            for &x in &entries {
                if x == 0 || x > n {
                    return Err(format!("cycle entry {x} out of range 1..={n}"));
                }
            }
            for k in 0..entries.len() {
                let from = entries[k];
                let to = entries[(k + 1) % entries.len()];
                if w.images[from - 1] as usize != from {
                    return Err(format!("point {from} repeated in {s:?}"));
                }
                w.images[from - 1] = to as u8;
            }
            rest = rest[close + 1..].trim_start();
        }
        Permutation::from_images(w.images).ok_or_else(|| format!("not a permutation: {s:?}"))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(
                f,
                "({})",
                cyc.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// JSON form: the one-line image array.
impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.images.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let images = Vec::<u8>::deserialize(deserializer)?;
        Permutation::from_images(images)
            .ok_or_else(|| serde::de::Error::custom("not a permutation"))
    }
}

/// All permutations of `S_n`, lexicographic in one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Permutation { images: images.clone() });
        let Some(i) =
            (0..images.len().saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1])
        else {
            break;
        };
        let j = (i + 1..images.len()).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}

/// Whether `S_n` contains elements of reduced cycle type `mu`:
/// precisely when `n >= |mu| + l(mu)`.
pub fn class_exists(n: usize, mu: &Partition) -> bool {
    n as u32 >= mu.size() + mu.len() as u32
}

/// All elements of `S_n` of reduced cycle type `mu`, enumerated directly
/// from cycle structures (never by scanning all of `S_n`). Sorted in
/// one-line lexicographic order.
pub fn class_elements(n: usize, mu: &Partition) -> Result<Vec<Permutation>, ClassSizeGuard> {
    if n > CLASS_SIZE_GUARD {
        return Err(ClassSizeGuard { n, bound: CLASS_SIZE_GUARD });
    }
    if !class_exists(n, mu) {
        return Ok(vec![]);
    }
    // cycle lengths >= 2, descending
    let cycle_lens: Vec<usize> = mu.parts().iter().map(|&p| p as usize + 1).collect();
    let mut out = Vec::new();
    let mut images: Vec<u8> = (1..=n as u8).collect();
    let mut used = vec![false; n + 1];

    // place cycles one at a time; among cycles of equal length the leaders
    // (smallest elements) are forced to increase, avoiding duplicates
    fn place(
        k: usize,
        cycle_lens: &[usize],
        min_leader_for_len: &mut BTreeMap<usize, usize>,
        images: &mut Vec<u8>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        let n = images.len();
        if k == cycle_lens.len() {
            out.push(Permutation { images: images.clone() });
            return;
        }
        let len = cycle_lens[k];
        let min_leader = *min_leader_for_len.get(&len).unwrap_or(&1);
        for leader in min_leader..=n {
            if used[leader] {
                continue;
            }
            used[leader] = true;
            let prev = min_leader_for_len.insert(len, leader + 1);
            let mut chosen = Vec::with_capacity(len - 1);
            arrange(
                len - 1,
                leader,
                &mut chosen,
                k,
                cycle_lens,
                min_leader_for_len,
                images,
                used,
                out,
            );
            match prev {
                Some(p) => min_leader_for_len.insert(len, p),
                None => min_leader_for_len.remove(&len),
            };
            used[leader] = false;
        }
    }

    // choose the ordered tail of the current cycle from unused points > 0
    #[allow(clippy::too_many_arguments)]
    fn arrange(
        remaining: usize,
        leader: usize,
        chosen: &mut Vec<usize>,
        k: usize,
        cycle_lens: &[usize],
        min_leader_for_len: &mut BTreeMap<usize, usize>,
        images: &mut Vec<u8>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        let n = images.len();
        if remaining == 0 {
            // commit the cycle (leader, chosen...)
            let cycle: Vec<usize> =
                std::iter::once(leader).chain(chosen.iter().copied()).collect();
            let saved: Vec<u8> = cycle.iter().map(|&x| images[x - 1]).collect();
            for i in 0..cycle.len() {
                images[cycle[i] - 1] = cycle[(i + 1) % cycle.len()] as u8;
            }
            place(k + 1, cycle_lens, min_leader_for_len, images, used, out);
            for (i, &x) in cycle.iter().enumerate() {
                images[x - 1] = saved[i];
            }
            return;
        }
        // tail entries must exceed the leader so the leader is the minimum
        for x in leader + 1..=n {
            if used[x] {
                continue;
            }
            used[x] = true;
            chosen.push(x);
            arrange(
                remaining - 1,
                leader,
                chosen,
                k,
                cycle_lens,
                min_leader_for_len,
                images,
                used,
                out,
            );
            chosen.pop();
            used[x] = false;
        }
    }

    let mut min_leader_for_len = BTreeMap::new();
    place(0, &cycle_lens, &mut min_leader_for_len, &mut images, &mut used, &mut out);
    out.sort();
    Ok(out)
}

/// The elements of `class_elements(n, mu)` of minimal Coxeter length.
pub fn minimal_length_class_reps(
    n: usize,
    mu: &Partition,
) -> Result<Vec<Permutation>, ClassSizeGuard> {
    let elems = class_elements(n, mu)?;
    let min = elems.iter().map(Permutation::length).min();
    Ok(match min {
        None => vec![],
        Some(m) => elems.into_iter().filter(|w| w.length() == m).collect(),
    })
}

/// Formal integer combination of permutations: an element of `Z S_n`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupAlgebraElem {
    pub n: usize,
    pub terms: BTreeMap<Permutation, BigInt>,
}

impl GroupAlgebraElem {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElem { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut e = Self::zero(n);
        e.add_term(Permutation::identity(n), BigInt::from(1));
        e
    }

    pub fn add_term(&mut self, w: Permutation, c: BigInt) {
        assert_eq!(w.n(), self.n);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub fn add(&self, rhs: &GroupAlgebraElem) -> GroupAlgebraElem {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &GroupAlgebraElem) -> GroupAlgebraElem {
        assert_eq!(self.n, rhs.n);
        let mut out = Self::zero(self.n);
        for (w, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(w.compose(v), a * b);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> GroupAlgebraElem {
        let mut out = Self::zero(self.n);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The class sum `X_mu` in `Z S_n` (zero when the class is empty).
pub fn class_sum(n: usize, mu: &Partition) -> Result<GroupAlgebraElem, ClassSizeGuard> {
    let mut out = GroupAlgebraElem::zero(n);
    for w in class_elements(n, mu)? {
        out.add_term(w, BigInt::from(1));
    }
    Ok(out)
}

/// Classical Jucys-Murphy element `L_i = sum_{j<i} (i, j)` in `Z S_n`.
pub fn classical_jm(i: usize, n: usize) -> GroupAlgebraElem {
    assert!(i >= 1 && i <= n);
    let mut out = GroupAlgebraElem::zero(n);
    for j in 1..i {
        out.add_term(Permutation::transposition(i, j, n), BigInt::from(1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(5).length(), 0);
        // (1 3) in S_3 has length 3
        assert_eq!(Permutation::transposition(1, 3, 3).length(), 3);
        // longest element of S_4
        let w0 = Permutation::from_images(vec![4, 3, 2, 1]).unwrap();
        assert_eq!(w0.length(), 6);
    }

    #[test]
    fn reduced_words() {
        assert!(Permutation::identity(4).reduced_word().is_empty());
        assert_eq!(Permutation::adjacent(1, 2).reduced_word(), vec![1]);
        let t13 = Permutation::transposition(1, 3, 3);
        assert_eq!(t13.reduced_word(), vec![1, 2, 1]);
        // round trip and length agreement on all of S_5
        for w in all_permutations(5) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_reduced_word(&word, 5), w);
        }
    }

    #[test]
    fn length_changes_by_one_under_generators() {
        for n in 2..=6 {
            for w in all_permutations(n) {
                let l = w.length() as i64;
                for i in 1..n {
                    let l2 = w.mul_adjacent_right(i).length() as i64;
                    assert_eq!((l2 - l).abs(), 1);
                }
            }
        }
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(4).reduced_cycle_type(), Partition::empty());
        assert_eq!(Permutation::transposition(2, 4, 5).reduced_cycle_type(), pt(&[1]));
        let w = Permutation::from_cycle_notation("(1 2 3)(4 5)", 6).unwrap();
        assert_eq!(w.cycle_type(), pt(&[3, 2, 1]));
        assert_eq!(w.reduced_cycle_type(), pt(&[2, 1]));
    }

    #[test]
    fn reduced_cycle_type_is_conjugation_invariant() {
        for w in all_permutations(5) {
            let mu = w.reduced_cycle_type();
            for g in all_permutations(5).into_iter().step_by(7) {
                let conj = g.compose(&w).compose(&g.inverse());
                assert_eq!(conj.reduced_cycle_type(), mu);
            }
        }
    }

    #[test]
    fn class_elements_examples() {
        let c = class_elements(3, &pt(&[1])).unwrap();
        assert_eq!(c.len(), 3);
        let c = class_elements(3, &pt(&[2])).unwrap();
        assert_eq!(c.len(), 2);
        // existence condition: |mu| + l(mu) <= n
        assert!(class_elements(2, &pt(&[1, 1])).unwrap().is_empty());
        assert!(class_exists(4, &pt(&[1, 1])));
        assert!(!class_exists(3, &pt(&[1, 1])));
    }

    #[test]
    fn class_sizes_partition_the_group() {
        for n in 1..=6usize {
            let mut covered = 0usize;
            for mu in Partition::all_up_to_size(n as u32) {
                if !class_exists(n, &mu) {
                    continue;
                }
                let c = class_elements(n, &mu).unwrap();
                for w in c.iter().take(5) {
                    assert_eq!(&w.reduced_cycle_type(), &mu);
                }
                covered += c.len();
            }
            let fact: usize = (1..=n).product();
            assert_eq!(covered, fact, "n={n}");
        }
    }

    #[test]
    fn class_enumeration_matches_scan() {
        for n in 1..=6usize {
            for mu in Partition::all_up_to_size(n as u32) {
                let fast = class_elements(n, &mu).unwrap();
                let slow: Vec<Permutation> = all_permutations(n)
                    .into_iter()
                    .filter(|w| w.reduced_cycle_type() == mu)
                    .collect();
                assert_eq!(fast, slow, "n={n} mu={mu}");
            }
        }
    }

    #[test]
    fn minimal_reps_examples() {
        // in S_3, type (1): (1 2) and (2 3) have length 1; (1 3) has length 3
        let reps = minimal_length_class_reps(3, &pt(&[1])).unwrap();
        assert_eq!(reps, vec![Permutation::adjacent(1, 3), Permutation::adjacent(2, 3)]);
        let reps = minimal_length_class_reps(3, &Partition::empty()).unwrap();
        assert_eq!(reps, vec![Permutation::identity(3)]);
        // type (1,1): minimal length 2; in S_4 only (1 2)(3 4) attains it,
        // in S_5 the three disjoint pairs of adjacent transpositions do
        let reps = minimal_length_class_reps(4, &pt(&[1, 1])).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0], Permutation::from_cycle_notation("(1 2)(3 4)", 4).unwrap());
        let reps = minimal_length_class_reps(5, &pt(&[1, 1])).unwrap();
        assert_eq!(reps.len(), 3);
        assert!(reps.iter().all(|w| w.length() == 2));
    }

    #[test]
    fn cycle_notation_round_trip() {
        let w = Permutation::from_cycle_notation("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(Permutation::from_cycle_notation(&w.to_string(), 5).unwrap(), w);
        assert!(Permutation::from_cycle_notation("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::from_cycle_notation("(0 1)", 3).is_err());
    }

    #[test]
    fn classical_jucys_murphy_elementary() {
        // e_1(L_1..L_n) = X_(1): all transpositions
        for n in 2..=5 {
            let mut e1 = GroupAlgebraElem::zero(n);
            for i in 1..=n {
                e1 = e1.add(&classical_jm(i, n));
            }
            assert_eq!(e1, class_sum(n, &pt(&[1])).unwrap());
        }
    }

    #[test]
    fn classical_class_sum_product_example() {
        // X_(1)^2 = 2 X_(1,1) + 3 X_(2) + C(n,2) X_() for n = 2..6
        for n in 2..=6usize {
            let x1 = class_sum(n, &pt(&[1])).unwrap();
            let sq = x1.mul(&x1);
            let mut expect = class_sum(n, &pt(&[1, 1])).unwrap().scale(&BigInt::from(2));
            expect = expect.add(&class_sum(n, &pt(&[2])).unwrap().scale(&BigInt::from(3)));
            let binom = BigInt::from((n * (n - 1) / 2) as i64);
            expect = expect.add(&GroupAlgebraElem::identity(n).scale(&binom));
            assert_eq!(sq, expect, "n={n}");
        }
    }
}
