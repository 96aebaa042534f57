//! Border strips and e-cores.

use super::partition::Partition;

/// A border strip: an edge-connected set of boxes containing no 2x2
/// square, whose removal leaves a partition diagram. Boxes are 1-based
/// `(row, col)` pairs, listed top row first, right-to-left within a row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BorderStrip {
    boxes: Vec<(u32, u32)>,
}

impl BorderStrip {
    pub fn boxes(&self) -> &[(u32, u32)] {
        &self.boxes
    }

    pub fn size(&self) -> usize {
        self.boxes.len()
    }

    /// Contents `j - i` of the boxes.
    pub fn contents(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .boxes
            .iter()
            .map(|&(i, j)| j as i64 - i as i64)
            .collect();
        out.sort_unstable();
        out
    }

    /// Top row of the strip (the row of its rightmost-top box).
    pub fn top_row(&self) -> u32 {
        self.boxes.iter().map(|&(i, _)| i).min().unwrap()
    }
}

/// All removable border strips of size `e`, ordered by the row of the
/// strip's rightmost-top box.
///
/// A removable strip spanning rows `i..=j` occupies, in each row `r` with
/// `i <= r < j`, the columns `lambda_{r+1} ..= lambda_r`, and in row `j` a
/// suffix ending at `lambda_j`; this is forced by the complement being a
/// partition together with connectivity and the 2x2-free condition.
pub fn removable_border_strips(lambda: &Partition, e: u32) -> Vec<BorderStrip> {
    assert!(e >= 1, "strip size must be positive");
    let ell = lambda.len();
    let mut out = Vec::new();
    for top in 0..ell {
        // extend the candidate strip downward row by row
        let mut used: u32 = 0; // boxes committed in rows top..j-1
        for j in top..ell {
            if j > top {
                // row j-1 contributes columns lambda_j ..= lambda_{j-1}
                used += lambda.part(j - 1) - lambda.part(j) + 1;
                if used >= e {
                    break;
                }
            }
            let remaining = e - used;
            // row j takes a suffix of `remaining` boxes ending at lambda_j
            let lam_j = lambda.part(j);
            if remaining > lam_j {
                continue; // suffix would run off the left edge
            }
            let start_col = lam_j - remaining + 1;
            // complement must stay a partition: new row j length is
            // start_col - 1, which must cover the next untouched row
            if start_col <= lambda.part(j + 1) {
                continue;
            }
            let mut boxes = Vec::with_capacity(e as usize);
            for r in top..j {
                let lo = lambda.part(r + 1);
                let hi = lambda.part(r);
                for c in (lo..=hi).rev() {
                    boxes.push((r as u32 + 1, c));
                }
            }
            for c in (start_col..=lam_j).rev() {
                boxes.push((j as u32 + 1, c));
            }
            debug_assert_eq!(boxes.len(), e as usize);
            out.push(BorderStrip { boxes });
        }
    }
    out
}

/// Remove a strip previously produced by [`removable_border_strips`].
pub fn remove_strip(lambda: &Partition, strip: &BorderStrip) -> Partition {
    let mut rows: Vec<u32> = lambda.parts().to_vec();
    for &(i, _) in strip.boxes() {
        rows[i as usize - 1] -= 1;
    }
    Partition::new(rows).expect("strip removal left a partition")
}

/// The e-core: iteratively remove size-`e` border strips (first strip in
/// the deterministic order) until none remain. The result is independent
/// of the removal order.
pub fn e_core(lambda: &Partition, e: u32) -> Partition {
    assert!(e >= 1, "e must be positive");
    let mut cur = lambda.clone();
    loop {
        let strips = removable_border_strips(&cur, e);
        match strips.first() {
            None => return cur,
            Some(s) => cur = remove_strip(&cur, s),
        }
    }
}
