//! Skew diagrams, ribbons and their geometric statistics.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};

/// Largest `N` accepted by [`enumerate_basic_skew`] unless a larger bound is passed
/// to [`enumerate_basic_skew_bounded`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 8;

/// A skew diagram `outer / inner`, stored in basic form: no empty rows and no
/// empty columns. Rows and columns are 1-indexed from the top-left corner.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewDiagram {
    outer: Partition,
    inner: Partition,
}

impl SkewDiagram {
    /// Builds `outer / inner`, dropping empty rows and columns.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::NotContained {
                outer: outer.into_parts(),
                inner: inner.into_parts(),
            });
        }
        let rows: Vec<(usize, usize)> = (0..outer.len())
            .map(|i| (inner.part(i), outer.part(i)))
            .collect();
        Ok(Self::from_row_intervals(&rows))
    }

    /// A straight shape `lambda / ∅`.
    pub fn straight(lambda: Partition) -> Self {
        Self::from_row_intervals(
            &lambda.parts().iter().map(|&p| (0, p)).collect::<Vec<_>>(),
        )
    }

    /// Canonicalizes a list of half-open row intervals `(start, end]` that
    /// come from a valid skew shape.
    fn from_row_intervals(rows: &[(usize, usize)]) -> Self {
        let rows: Vec<(usize, usize)> = rows.iter().copied().filter(|(s, e)| s < e).collect();
        let width = rows.iter().map(|&(_, e)| e).max().unwrap_or(0);
        let mut occupied = vec![false; width + 1];
        for &(s, e) in &rows {
            for flag in &mut occupied[s + 1..=e] {
                *flag = true;
            }
        }
        // rank[j] = number of occupied columns in 1..=j
        let mut rank = vec![0; width + 1];
        for j in 1..=width {
            rank[j] = rank[j - 1] + usize::from(occupied[j]);
        }
        let outer = rows.iter().map(|&(_, e)| rank[e]).collect();
        let inner = rows.iter().map(|&(s, _)| rank[s]).collect();
        SkewDiagram {
            outer: Partition::from_padded(outer),
            inner: Partition::from_padded(inner),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_cols(&self) -> usize {
        self.outer.part(0)
    }

    /// Row `i` (0-indexed) occupies columns `start+1..=end`.
    pub fn row_interval(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }

    /// Row lengths from top to bottom.
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.num_rows())
            .map(|i| self.outer.part(i) - self.inner.part(i))
            .collect()
    }

    /// Column lengths from left to right.
    pub fn col_lengths(&self) -> Vec<usize> {
        let mut lens = vec![0; self.num_cols()];
        for i in 0..self.num_rows() {
            let (s, e) = self.row_interval(i);
            for len in &mut lens[s..e] {
                *len += 1;
            }
        }
        lens
    }

    /// All cells `(row, col)`, 1-indexed, in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.size());
        for i in 0..self.num_rows() {
            let (s, e) = self.row_interval(i);
            cells.extend((s + 1..=e).map(|j| (i + 1, j)));
        }
        cells
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && {
            let (s, e) = self.row_interval(row - 1);
            s < col && col <= e
        }
    }

    /// `(rows(A), cols(A))`: the sorted row and column lengths.
    pub fn profile(&self) -> (Partition, Partition) {
        let sorted = |mut v: Vec<usize>| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::from_padded(v)
        };
        (sorted(self.row_lengths()), sorted(self.col_lengths()))
    }

    /// Edgewise connectivity. In basic form consecutive rows must overlap in
    /// at least one column.
    pub fn is_connected(&self) -> bool {
        self.size() > 0
            && (1..self.num_rows()).all(|i| self.outer.part(i) > self.inner.part(i - 1))
    }

    pub fn is_ribbon(&self) -> bool {
        self.is_connected() && self.rectangle_count(2, 2) == 0
    }

    /// Number of positions of an `m`-row by `n`-column rectangle inside the diagram.
    pub fn rectangle_count(&self, m: usize, n: usize) -> usize {
        if m == 0 || n == 0 || m > self.num_rows() {
            return 0;
        }
        // Rows top..top+m-1 share the columns (inner[top], outer[top+m-1]].
        (0..=self.num_rows() - m)
            .map(|top| {
                let start = self.inner.part(top);
                let end = self.outer.part(top + m - 1);
                (end + 1).saturating_sub(start + n)
            })
            .sum()
    }

    /// The diagram rotated by 180 degrees (`A*`).
    pub fn rotate180(&self) -> SkewDiagram {
        let width = self.num_cols();
        let rows: Vec<(usize, usize)> = (0..self.num_rows())
            .rev()
            .map(|i| {
                let (s, e) = self.row_interval(i);
                (width - e, width - s)
            })
            .collect();
        Self::from_row_intervals(&rows)
    }

    /// `(outer / inner)^t = outer^t / inner^t`.
    pub fn transpose(&self) -> SkewDiagram {
        let outer = self.outer.conjugate();
        let inner = self.inner.conjugate();
        let rows: Vec<(usize, usize)> = (0..outer.len()).map(|i| (inner.part(i), outer.part(i))).collect();
        Self::from_row_intervals(&rows)
    }

    /// The composition of row lengths, when the diagram is a ribbon.
    pub fn composition(&self) -> Result<Composition> {
        composition_of(self)
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// The ribbon with `alpha[i]` cells in row `i`, counted from the top.
pub fn ribbon_of(alpha: &Composition) -> Result<SkewDiagram> {
    if alpha.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let parts = alpha.parts();
    let len = parts.len();
    let mut outer = vec![0; len];
    let mut tail = 0;
    for i in (0..len).rev() {
        tail += parts[i];
        outer[i] = tail - (len - 1 - i);
    }
    let inner: Vec<usize> = (0..len - 1).map(|i| outer[i + 1] - 1).collect();
    SkewDiagram::new(Partition::new(outer)?, Partition::from_padded(inner))
}

/// Inverse of [`ribbon_of`].
pub fn composition_of(diagram: &SkewDiagram) -> Result<Composition> {
    if !diagram.is_ribbon() {
        return Err(Error::NotRibbon);
    }
    Composition::new(diagram.row_lengths())
}

/// A decomposition `alpha = (m, 1^k, n, 1^l)`, or of `alpha*` when `reversed`.
///
/// `m = 0` only occurs for the one-row ribbon `(N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MfPattern {
    pub m: usize,
    pub k: usize,
    pub n: usize,
    pub l: usize,
    pub reversed: bool,
}

impl MfPattern {
    /// The composition `(m, 1^k, n, 1^l)` (with `m` omitted when zero), reversed if flagged.
    pub fn composition(&self) -> Composition {
        let mut parts = Vec::with_capacity(self.k + self.l + 2);
        if self.m > 0 {
            parts.push(self.m);
        }
        parts.extend(std::iter::repeat_n(1, self.k));
        parts.push(self.n);
        parts.extend(std::iter::repeat_n(1, self.l));
        if self.reversed {
            parts.reverse();
        }
        Composition::new(parts).expect("positive parts")
    }
}

/// Matches `alpha` or `alpha*` against `(m, 1^k, n, 1^l)`: everything after the
/// leading part may contain at most one part above 1.
pub fn mf_pattern(alpha: &Composition) -> Option<MfPattern> {
    let parts = alpha.parts();
    match parts.len() {
        0 => None,
        1 => Some(MfPattern {
            m: 0,
            k: 0,
            n: parts[0],
            l: 0,
            reversed: false,
        }),
        _ => match_forward(parts, false).or_else(|| {
            let rev: Vec<usize> = parts.iter().rev().copied().collect();
            match_forward(&rev, true)
        }),
    }
}

fn match_forward(parts: &[usize], reversed: bool) -> Option<MfPattern> {
    let rest = &parts[1..];
    let mut big = rest.iter().enumerate().filter(|(_, &p)| p > 1);
    let (k, n) = match (big.next(), big.next()) {
        (None, _) => (0, 1),
        (Some((pos, &n)), None) => (pos, n),
        (Some(_), Some(_)) => return None,
    };
    Some(MfPattern {
        m: parts[0],
        k,
        n,
        l: rest.len() - k - 1,
        reversed,
    })
}

/// Every basic skew diagram with `n` cells, connected or not, sorted by `(outer, inner)`.
pub fn enumerate_basic_skew(n: usize) -> Result<Vec<SkewDiagram>> {
    enumerate_basic_skew_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_basic_skew_bounded(n: usize, max: usize) -> Result<Vec<SkewDiagram>> {
    if n == 0 || n > max {
        return Err(Error::OutOfRange {
            what: "N",
            value: n,
            min: 1,
            max,
        });
    }
    let mut out = Vec::new();
    let mut rows = Vec::new();
    extend_rows(n, &mut rows, &mut out);
    out.sort();
    Ok(out)
}

/// Grows a basic diagram one row at a time. With rows `(s_i, e_i]`, basic form
/// means `e_{i+1} >= s_i` (no gap column) and the last row starts at column 1.
fn extend_rows(remaining: usize, rows: &mut Vec<(usize, usize)>, out: &mut Vec<SkewDiagram>) {
    if remaining == 0 {
        if rows.last().is_some_and(|r| r.0 == 0) {
            out.push(SkewDiagram::from_row_intervals(rows));
        }
        return;
    }
    match rows.last().copied() {
        None => {
            // Columns left of the first row must be covered by later rows.
            for len in 1..=remaining {
                for start in 0..=remaining - len {
                    rows.push((start, start + len));
                    extend_rows(remaining - len, rows, out);
                    rows.pop();
                }
            }
        }
        Some((prev_start, prev_end)) => {
            for start in 0..=prev_start {
                let lo = prev_start.max(start + 1);
                for end in lo..=prev_end {
                    let len = end - start;
                    if start + len > remaining {
                        break;
                    }
                    rows.push((start, end));
                    extend_rows(remaining - len, rows, out);
                    rows.pop();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{composition, partition};

    fn skew(outer: Partition, inner: Partition) -> SkewDiagram {
        SkewDiagram::new(outer, inner).unwrap()
    }

    #[test]
    fn ribbon_of_examples() {
        assert_eq!(ribbon_of(&composition![2, 1, 3]).unwrap(), skew(partition![4, 3, 3], partition![2, 2]));
        assert_eq!(ribbon_of(&composition![5]).unwrap(), skew(partition![5], partition![]));
        assert_eq!(ribbon_of(&composition![1, 1, 1]).unwrap(), skew(partition![1, 1, 1], partition![]));
        assert!(matches!(ribbon_of(&Composition::new(vec![]).unwrap()), Err(Error::EmptyComposition)));
    }

    #[test]
    fn composition_of_examples() {
        assert_eq!(composition_of(&skew(partition![4, 3, 3], partition![2, 2])).unwrap(), composition![2, 1, 3]);
        assert_eq!(composition_of(&skew(partition![5], partition![])).unwrap(), composition![5]);
        assert_eq!(composition_of(&skew(partition![2, 2], partition![])), Err(Error::NotRibbon));
    }

    #[test]
    fn construction_canonicalizes() {
        // empty first column
        assert_eq!(skew(partition![3, 3], partition![1, 1]), skew(partition![2, 2], partition![]));
        // empty middle row
        assert_eq!(skew(partition![2, 1, 1], partition![1, 1]), skew(partition![2, 1], partition![1]));
        assert!(matches!(
            SkewDiagram::new(partition![2], partition![3]),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn profile_examples() {
        let a = skew(partition![4, 3, 3], partition![2, 2]);
        assert_eq!(a.profile(), (partition![3, 2, 1], partition![3, 1, 1, 1]));
        let row = skew(partition![6], partition![]);
        assert_eq!(row.profile(), (partition![6], Partition::repeated(1, 6)));
        let r = ribbon_of(&composition![1, 7, 1, 1, 1, 1]).unwrap();
        // column lengths by direct cell count
        let mut cols = vec![0usize; r.num_cols() + 1];
        for (_, c) in r.cells() {
            cols[c] += 1;
        }
        let mut cols: Vec<usize> = cols.into_iter().filter(|&c| c > 0).collect();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(r.profile().0, partition![7, 1, 1, 1, 1, 1]);
        assert_eq!(r.profile().1, Partition::new(cols).unwrap());
        assert_eq!(r.profile().1, partition![5, 2, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn rotate_and_transpose_examples() {
        let a = ribbon_of(&composition![2, 1, 3]).unwrap();
        assert_eq!(a.rotate180(), ribbon_of(&composition![3, 1, 2]).unwrap());
        let square = skew(partition![2, 2], partition![]);
        assert_eq!(square.rotate180(), square);
        assert_eq!(a.transpose(), skew(partition![3, 3, 3, 1], partition![2, 2]));
        assert_eq!(skew(partition![4], partition![]).transpose(), skew(partition![1, 1, 1, 1], partition![]));
    }

    #[test]
    fn ribbon_test_examples() {
        assert!(skew(partition![4, 3, 3], partition![2, 2]).is_ribbon());
        assert!(!skew(partition![2, 2], partition![]).is_ribbon());
        assert!(!skew(partition![3, 2, 1], partition![2, 1]).is_ribbon());
    }

    #[test]
    fn rectangle_count_examples() {
        assert_eq!(skew(partition![2, 2], partition![]).rectangle_count(2, 2), 1);
        assert_eq!(skew(partition![3, 2], partition![]).rectangle_count(1, 2), 3);
        for alpha in Composition::all(7) {
            assert_eq!(ribbon_of(&alpha).unwrap().rectangle_count(2, 2), 0);
        }
    }

    #[test]
    fn mf_pattern_examples() {
        assert_eq!(
            mf_pattern(&composition![2, 1, 3]),
            Some(MfPattern { m: 2, k: 1, n: 3, l: 0, reversed: false })
        );
        assert_eq!(mf_pattern(&composition![1, 3, 2, 1]), None);
        let ones = mf_pattern(&composition![1, 1, 1, 1, 1]).unwrap();
        assert_eq!(ones.composition(), composition![1, 1, 1, 1, 1]);
        assert_eq!(ones, MfPattern { m: 1, k: 0, n: 1, l: 3, reversed: false });
        let single = mf_pattern(&composition![7]).unwrap();
        assert_eq!(single.composition(), composition![7]);
        let rev = mf_pattern(&composition![1, 2, 1, 3]).unwrap();
        assert!(rev.reversed);
        assert_eq!(rev.composition(), composition![1, 2, 1, 3]);
    }

    #[test]
    fn enumeration_small_cases() {
        assert!(enumerate_basic_skew(0).is_err());
        assert!(enumerate_basic_skew(9).is_err());
        assert_eq!(enumerate_basic_skew(1).unwrap(), vec![skew(partition![1], partition![])]);
        let two = enumerate_basic_skew(2).unwrap();
        assert_eq!(two.len(), 3);
        assert!(two.contains(&skew(partition![2], partition![])));
        assert!(two.contains(&skew(partition![1, 1], partition![])));
        assert!(two.contains(&skew(partition![2, 1], partition![1])));
    }
}
