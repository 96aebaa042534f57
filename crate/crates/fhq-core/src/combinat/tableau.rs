//! Standard Young tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;

/// Largest diagram size for which tableaux are enumerated.
pub const TABLEAU_SIZE_GUARD: u32 = 14;

#[derive(Debug, thiserror::Error)]
#[error("diagram size {size} exceeds the tableau enumeration bound {bound}")]
pub struct TableauSizeGuard {
    pub size: u32,
    pub bound: u32,
}

/// A standard Young tableau: a bijective labelling of the boxes of a
/// Young diagram by `1..=n`, increasing along rows and columns.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardTableau {
    shape: Partition,
    /// `rows[i][j]` is the label in box (i+1, j+1).
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> u32 {
        self.shape.size()
    }

    /// 1-based `(row, col)` of the box containing `label`.
    pub fn position_of(&self, label: u32) -> (u32, u32) {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v == label {
                    return (i as u32 + 1, j as u32 + 1);
                }
            }
        }
        panic!("label {label} not present in tableau");
    }

    /// Content `j - i` of the box containing `label`.
    pub fn content_of(&self, label: u32) -> i64 {
        let (i, j) = self.position_of(label);
        j as i64 - i as i64
    }

    /// Column reading word: columns left to right, each read top to bottom.
    pub fn column_reading_word(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size() as usize);
        let cols = self.shape.part(0) as usize;
        for j in 0..cols {
            for row in &self.rows {
                if let Some(&v) = row.get(j) {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Swap the labels `m` and `m+1`; `None` when the result is not
    /// standard (the two labels share a row or column).
    pub fn swap_adjacent_labels(&self, m: u32) -> Option<StandardTableau> {
        let (r1, c1) = self.position_of(m);
        let (r2, c2) = self.position_of(m + 1);
        if r1 == r2 || c1 == c2 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[r1 as usize - 1][c1 as usize - 1] = m + 1;
        rows[r2 as usize - 1][c2 as usize - 1] = m;
        Some(StandardTableau { shape: self.shape.clone(), rows })
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(
                f,
                "{}",
                row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SYT{:?}", self.rows)
    }
}

/// Enumerate all standard Young tableaux of the given shape, sorted
/// lexicographically by column reading word.
pub fn standard_tableaux(shape: &Partition) -> Result<Vec<StandardTableau>, TableauSizeGuard> {
    if shape.size() > TABLEAU_SIZE_GUARD {
        return Err(TableauSizeGuard { size: shape.size(), bound: TABLEAU_SIZE_GUARD });
    }
    let n = shape.size();
    let ell = shape.len();
    let mut fill: Vec<Vec<u32>> = (0..ell)
        .map(|i| vec![0u32; shape.part(i) as usize])
        .collect();
    let mut filled = vec![0usize; ell]; // boxes filled so far in each row
    let mut out = Vec::new();

    fn rec(
        label: u32,
        n: u32,
        shape: &Partition,
        fill: &mut Vec<Vec<u32>>,
        filled: &mut Vec<usize>,
        out: &mut Vec<StandardTableau>,
    ) {
        if label > n {
            out.push(StandardTableau { shape: shape.clone(), rows: fill.clone() });
            return;
        }
        for i in 0..shape.len() {
            let j = filled[i];
            if j >= shape.part(i) as usize {
                continue;
            }
            // column-increasing: the box above must already be filled
            if i > 0 && filled[i - 1] <= j {
                continue;
            }
            fill[i][j] = label;
            filled[i] += 1;
            rec(label + 1, n, shape, fill, filled, out);
            filled[i] -= 1;
            fill[i][j] = 0;
        }
    }
    rec(1, n, shape, &mut fill, &mut filled, &mut out);
    out.sort_by_key(StandardTableau::column_reading_word);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn counts_match_hook_length_formula() {
        use num_bigint::BigInt;
        for lam in Partition::all_up_to_size(8) {
            let tabs = standard_tableaux(&lam).unwrap();
            assert_eq!(
                BigInt::from(tabs.len()),
                lam.num_standard_tableaux(),
                "shape {lam}"
            );
        }
        // frozen examples: single row has 1, (2,1) has 2, (4,2,1) has 35
        assert_eq!(standard_tableaux(&pt(&[6])).unwrap().len(), 1);
        assert_eq!(standard_tableaux(&pt(&[2, 1])).unwrap().len(), 2);
        assert_eq!(standard_tableaux(&pt(&[4, 2, 1])).unwrap().len(), 35);
    }

    #[test]
    fn tableaux_are_standard_and_ordered() {
        for lam in Partition::all_up_to_size(7) {
            let tabs = standard_tableaux(&lam).unwrap();
            for t in &tabs {
                // rows increase
                for row in t.rows() {
                    assert!(row.windows(2).all(|w| w[0] < w[1]));
                }
                // columns increase
                for i in 1..t.rows().len() {
                    for j in 0..t.rows()[i].len() {
                        assert!(t.rows()[i - 1][j] < t.rows()[i][j]);
                    }
                }
                // labels are exactly 1..=n
                let mut labels: Vec<u32> = t.rows().iter().flatten().copied().collect();
                labels.sort_unstable();
                assert_eq!(labels, (1..=lam.size()).collect::<Vec<_>>());
            }
            // enumeration order is lexicographic on column words
            let words: Vec<Vec<u32>> =
                tabs.iter().map(StandardTableau::column_reading_word).collect();
            let mut sorted = words.clone();
            sorted.sort();
            assert_eq!(words, sorted);
        }
    }

    #[test]
    fn size_guard() {
        assert!(standard_tableaux(&pt(&[15])).is_err());
    }

    #[test]
    fn contents_by_label() {
        // the contents of (4,2,1) as read from any tableau form the fixed multiset
        let tabs = standard_tableaux(&pt(&[4, 2, 1])).unwrap();
        for t in &tabs {
            let mut cs: Vec<i64> = (1..=7).map(|m| t.content_of(m)).collect();
            cs.sort_unstable();
            assert_eq!(cs, pt(&[4, 2, 1]).contents());
        }
    }

    #[test]
    fn swap_adjacent() {
        let tabs = standard_tableaux(&pt(&[2, 1])).unwrap();
        // the two tableaux of shape (2,1) are exchanged by swapping 2,3
        let t0 = &tabs[0];
        let t1 = t0.swap_adjacent_labels(2).unwrap();
        assert!(tabs.contains(&t1));
        assert_ne!(&t1, t0);
        // swapping labels in the same row fails
        assert!(t0.swap_adjacent_labels(1).is_none() || t1.swap_adjacent_labels(1).is_none());
    }
}
