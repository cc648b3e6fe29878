//! Brute-force oracles written without the library's search code.

use std::collections::{BTreeMap, BTreeSet};

use schurpos::{
    enumerate_basic_skew, expand, lr::count_lr_fillings, Partition, SchurVector, SkewDiagram,
};

/// Cells `(row, col)`, 1-indexed, straight from the outer and inner shapes.
fn cells_of(outer: &[usize], inner: &[usize]) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for (i, &o) in outer.iter().enumerate() {
        let s = inner.get(i).copied().unwrap_or(0);
        for j in s + 1..=o {
            cells.push((i + 1, j));
        }
    }
    cells
}

/// Every filling with entries `1..=size`, kept when semistandard with a
/// lattice reading word (rows right to left, top to bottom).
fn brute_force_expansion(d: &SkewDiagram) -> BTreeMap<Vec<usize>, u64> {
    let cells = cells_of(d.outer().parts(), d.inner().parts());
    let size = cells.len();
    let mut entries = vec![1usize; size];
    let mut out = BTreeMap::new();
    loop {
        let at = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c)).map(|p| entries[p]);
        let semistandard = cells.iter().enumerate().all(|(p, &(r, c))| {
            at(r, c + 1).is_none_or(|right| entries[p] <= right)
                && at(r + 1, c).is_none_or(|below| entries[p] < below)
        });
        if semistandard {
            let mut word = Vec::new();
            let rows = cells.iter().map(|c| c.0).max().unwrap_or(0);
            for r in 1..=rows {
                let mut row: Vec<usize> = cells
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.0 == r)
                    .map(|(p, _)| entries[p])
                    .collect();
                row.reverse();
                word.extend(row);
            }
            let mut counts = vec![0usize; size + 2];
            let lattice = word.iter().all(|&x| {
                counts[x] += 1;
                x == 1 || counts[x] <= counts[x - 1]
            });
            if lattice {
                let content: Vec<usize> =
                    counts[1..].iter().copied().take_while(|&c| c > 0).collect();
                *out.entry(content).or_insert(0) += 1;
            }
        }
        // odometer increment
        let mut p = 0;
        loop {
            if p == size {
                return out;
            }
            if entries[p] < size {
                entries[p] += 1;
                break;
            }
            entries[p] = 1;
            p += 1;
        }
    }
}

fn as_map(v: &SchurVector) -> BTreeMap<Vec<usize>, u64> {
    v.iter().map(|(p, c)| (p.parts().to_vec(), c)).collect()
}

#[test]
fn lr_expansion_matches_brute_force() {
    for n in 1..=6 {
        for d in enumerate_basic_skew(n).unwrap() {
            let fast = expand(&d).unwrap();
            assert_eq!(as_map(&fast), brute_force_expansion(&d), "{d}");
            assert_eq!(fast.total(), count_lr_fillings(&d), "{d}");
        }
    }
}

/// Partitions fitting in an `rows × cols` box, including the empty one.
fn partitions_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        if prefix.len() == rows {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            go(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

fn is_basic(outer: &[usize], inner: &[usize]) -> bool {
    let inner_at = |i: usize| inner.get(i).copied().unwrap_or(0);
    let rows_ok = (0..outer.len()).all(|i| outer[i] > inner_at(i));
    let cols = outer.first().copied().unwrap_or(0);
    let cols_ok = (1..=cols).all(|j| (0..outer.len()).any(|i| inner_at(i) < j && j <= outer[i]));
    rows_ok && cols_ok && inner.len() <= outer.len()
}

#[test]
fn enumeration_matches_outer_inner_search() {
    for n in 1..=6 {
        let all = partitions_in_box(n, n);
        let mut oracle = BTreeSet::new();
        for outer in &all {
            let size: usize = outer.iter().sum();
            if size < n {
                continue;
            }
            for inner in &all {
                let contained = inner.len() <= outer.len()
                    && inner.iter().zip(outer).all(|(a, b)| a <= b);
                if contained && size - inner.iter().sum::<usize>() == n && is_basic(outer, inner) {
                    let d = SkewDiagram::new(
                        Partition::new(outer.clone()).unwrap(),
                        Partition::new(inner.clone()).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(d.outer().parts(), &outer[..], "basic input is already canonical");
                    oracle.insert(d);
                }
            }
        }
        let fast: BTreeSet<SkewDiagram> = enumerate_basic_skew(n).unwrap().into_iter().collect();
        assert_eq!(fast, oracle, "N = {n}");
    }
}

#[test]
fn known_enumeration_counts() {
    let counts: Vec<usize> = (1..=6).map(|n| enumerate_basic_skew(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 3, 9, 28, 87, 272]);
}

fn cell_set(d: &SkewDiagram) -> BTreeSet<(usize, usize)> {
    cells_of(d.outer().parts(), d.inner().parts()).into_iter().collect()
}

#[test]
fn rotation_and_transpose_move_cells() {
    for n in 1..=6 {
        for d in enumerate_basic_skew(n).unwrap() {
            let (rows, cols) = (d.num_rows(), d.num_cols());
            let rotated: BTreeSet<_> = cell_set(&d)
                .into_iter()
                .map(|(r, c)| (rows + 1 - r, cols + 1 - c))
                .collect();
            assert_eq!(cell_set(&d.rotate180()), rotated, "{d}");
            let flipped: BTreeSet<_> = cell_set(&d).into_iter().map(|(r, c)| (c, r)).collect();
            assert_eq!(cell_set(&d.transpose()), flipped, "{d}");
            assert_eq!(d.rotate180().rotate180(), d);
            assert_eq!(d.transpose().transpose(), d);
        }
    }
}

#[test]
fn rectangle_count_matches_cell_scan() {
    for n in 1..=6 {
        for d in enumerate_basic_skew(n).unwrap() {
            let cells = cell_set(&d);
            for m in 1..=d.num_rows() {
                for w in 1..=d.num_cols() {
                    let brute = cells
                        .iter()
                        .filter(|&&(r, c)| {
                            (r..r + m).all(|rr| (c..c + w).all(|cc| cells.contains(&(rr, cc))))
                        })
                        .count();
                    assert_eq!(d.rectangle_count(m, w), brute, "{d} {m}x{w}");
                }
            }
        }
    }
}
