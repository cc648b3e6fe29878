//! Finite partial orders and lattices on `0..n`, stored as bitset up-sets.

use crate::par::{self, Strategy};

/// A fixed-width bitset over `0..len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }
}

/// A partial order on `0..len` with its Hasse diagram.
///
/// `up[i]` holds every `j` with `i ≤ j` (including `i`), `down[j]` the converse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Order {
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    hasse: Vec<(usize, usize)>,
}

impl Order {
    /// Builds the order from a relation `leq(i, j)`, evaluated once per ordered pair.
    /// The relation is trusted to be a partial order; see [`Order::is_partial_order`].
    pub fn from_fn<F>(len: usize, strategy: Strategy, leq: F) -> Order
    where
        F: Fn(usize, usize) -> bool + Sync + Send,
    {
        let up = par::map_range(strategy, len, |i| {
            let mut row = BitSet::new(len);
            for j in 0..len {
                if i == j || leq(i, j) {
                    row.insert(j);
                }
            }
            row
        });
        Order::from_up_sets(up)
    }

    pub fn from_up_sets(up: Vec<BitSet>) -> Order {
        let len = up.len();
        let mut down = vec![BitSet::new(len); len];
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j].insert(i);
            }
        }
        let hasse = transitive_reduction(&up, &down);
        Order { up, down, hasse }
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn up_set(&self, i: usize) -> &BitSet {
        &self.up[i]
    }

    pub fn down_set(&self, i: usize) -> &BitSet {
        &self.down[i]
    }

    /// Cover relations `(lower, upper)`, sorted.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn upper_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.hasse.iter().filter(move |e| e.0 == i).map(|e| e.1)
    }

    pub fn lower_covers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.hasse.iter().filter(move |e| e.1 == i).map(|e| e.0)
    }

    /// Reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| self.leq(i, i))
            && (0..n).all(|i| self.up[i].iter().all(|j| j == i || !self.leq(j, i)))
            && (0..n).all(|i| self.up[i].iter().all(|j| self.up[j].is_subset(&self.up[i])))
    }

    /// Indices sorted so that every element comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&i| (self.down[i].count(), i));
        idx
    }

    /// `(shortest, longest)` number of cover steps from `from` to each element
    /// above it; `None` for elements not above `from`.
    fn path_lengths_from(&self, from: usize, ext: &[usize]) -> Vec<Option<(usize, usize)>> {
        let mut dist: Vec<Option<(usize, usize)>> = vec![None; self.len()];
        dist[from] = Some((0, 0));
        let succ = self.successors();
        for &v in ext {
            let Some((lo, hi)) = dist[v] else { continue };
            for &w in &succ[v] {
                dist[w] = Some(match dist[w] {
                    None => (lo + 1, hi + 1),
                    Some((a, b)) => (a.min(lo + 1), b.max(hi + 1)),
                });
            }
        }
        dist
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.len()];
        for &(a, b) in &self.hasse {
            succ[a].push(b);
        }
        succ
    }

    /// Every maximal chain of every interval `[x, y]` has the same length.
    pub fn is_graded(&self) -> bool {
        let ext = self.linear_extension();
        (0..self.len()).all(|x| {
            self.path_lengths_from(x, &ext)
                .iter()
                .flatten()
                .all(|&(lo, hi)| lo == hi)
        })
    }

    /// Least upper bound, if the pair has one.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let common = self.up[i].intersection(&self.up[j]);
        let found = common.iter().find(|&u| common.is_subset(&self.up[u]));
        found
    }

    /// Greatest lower bound, if the pair has one.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let common = self.down[i].intersection(&self.down[j]);
        let found = common.iter().find(|&u| common.is_subset(&self.down[u]));
        found
    }

    /// Every pair with a common upper bound has a least one.
    pub fn is_join_semilattice(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| !self.up[i].intersects(&self.up[j]) || self.join(i, j).is_some())
        })
    }

    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        n > 0
            && (0..n).all(|i| (i + 1..n).all(|j| self.join(i, j).is_some() && self.meet(i, j).is_some()))
    }

    /// For all `a < b < c` with `a`, `c` members, `b` is a member too.
    pub fn is_convex(&self, member: &[bool]) -> bool {
        (0..self.len()).filter(|&b| !member[b]).all(|b| {
            let below = self.down[b].iter().any(|a| a != b && member[a]);
            let above = self.up[b].iter().any(|c| c != b && member[c]);
            !(below && above)
        })
    }

    /// For each element, the number of elements on a longest chain ending at it.
    fn longest_down(&self) -> Vec<usize> {
        let mut best = vec![1; self.len()];
        let succ = self.successors();
        for v in self.linear_extension() {
            for &w in &succ[v] {
                best[w] = best[w].max(best[v] + 1);
            }
        }
        best
    }

    fn longest_up(&self) -> Vec<usize> {
        let mut best = vec![1; self.len()];
        let succ = self.successors();
        for v in self.linear_extension().into_iter().rev() {
            for &w in &succ[v] {
                best[v] = best[v].max(best[w] + 1);
            }
        }
        best
    }

    /// Number of elements on a longest chain.
    pub fn longest_chain_len(&self) -> usize {
        self.longest_down().into_iter().max().unwrap_or(0)
    }

    /// Elements lying on some chain of maximum length.
    pub fn spine(&self) -> Vec<usize> {
        let top = self.longest_chain_len();
        let down = self.longest_down();
        let up = self.longest_up();
        (0..self.len()).filter(|&v| down[v] + up[v] - 1 == top).collect()
    }

    /// Longest chain of consecutive covers that uses only elements in `allowed`.
    pub fn longest_chain_within(&self, allowed: &[bool]) -> usize {
        let mut best: Vec<usize> = allowed.iter().map(|&a| usize::from(a)).collect();
        let succ = self.successors();
        for v in self.linear_extension() {
            if !allowed[v] {
                continue;
            }
            for &w in &succ[v] {
                if allowed[w] {
                    best[w] = best[w].max(best[v] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }
}

/// Cover `i ⋖ j` when `i < j` and nothing lies strictly between.
fn transitive_reduction(up: &[BitSet], down: &[BitSet]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, row) in up.iter().enumerate() {
        let mut strictly_above = row.clone();
        strictly_above.remove(i);
        for j in strictly_above.iter() {
            let mut strictly_below = down[j].clone();
            strictly_below.remove(j);
            if !strictly_above.intersects(&strictly_below) {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// A finite lattice with tabulated meets and joins.
#[derive(Debug, Clone)]
pub struct Lattice {
    order: Order,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
}

impl Lattice {
    /// `None` unless every pair has a meet and a join.
    pub fn new(order: Order) -> Option<Lattice> {
        let n = order.len();
        if n == 0 {
            return None;
        }
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                join[i][j] = order.join(i, j)?;
                meet[i][j] = order.meet(i, j)?;
            }
        }
        Some(Lattice { order, join, meet })
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i][j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i][j]
    }

    /// Elements covering exactly one element.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.order.len())
            .filter(|&x| self.order.lower_covers(x).count() == 1)
            .collect()
    }

    /// Elements covered by exactly one element.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.order.len())
            .filter(|&x| self.order.upper_covers(x).count() == 1)
            .collect()
    }

    /// `x` is left modular when `(y ∨ x) ∧ z = y ∨ (x ∧ z)` for all `y < z`.
    pub fn is_left_modular(&self, x: usize) -> bool {
        let n = self.order.len();
        (0..n).all(|y| {
            self.order.up_set(y).iter().filter(|&z| z != y).all(|z| {
                self.meet(self.join(y, x), z) == self.join(y, self.meet(x, z))
            })
        })
    }

    /// `set` is closed under meet and join.
    pub fn is_sublattice(&self, set: &[usize]) -> bool {
        let mut member = vec![false; self.order.len()];
        for &x in set {
            member[x] = true;
        }
        set.iter().all(|&x| {
            set.iter().all(|&y| member[self.join(x, y)] && member[self.meet(x, y)])
        })
    }

    /// Meet distributes over join for all triples drawn from `set`.
    pub fn is_distributive_on(&self, set: &[usize]) -> bool {
        set.iter().all(|&x| {
            set.iter().all(|&y| {
                set.iter().all(|&z| {
                    self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
                })
            })
        })
    }
}
