//! Integer partitions and compositions.

use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
///
/// The empty partition is the unique partition of 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts that may carry trailing zeros, as produced
    /// by componentwise arithmetic on partitions. Panics on unsorted input.
    pub(crate) fn from_padded(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `value` repeated `times` times, the `a^j` shorthand.
    pub fn repeated(value: usize, times: usize) -> Self {
        if value == 0 {
            return Partition::empty();
        }
        Partition(vec![value; times])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (0-indexed), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Inclusion order: `self ⊆ other` componentwise.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// The transpose: part `j` counts the parts of `self` that are at least `j`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Dominance order `self ≤_dom other`. Both partitions must have the same size.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        dominance_leq(self, other)
    }

    /// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }
}

fn fill_partitions(remaining: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=remaining.min(cap)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// `mu ≤_dom lambda`: every prefix sum of `mu` is at most the matching prefix
/// sum of `lambda`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    let (left, right) = (mu.size(), lambda.size());
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    let mut sum_mu = 0;
    let mut sum_lambda = 0;
    for i in 0..mu.len().min(lambda.len()) {
        sum_mu += mu.0[i];
        sum_lambda += lambda.0[i];
        if sum_mu > sum_lambda {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// An ordered list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The parts listed in reverse order (`α*`).
    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// The partition obtained by sorting the parts.
    pub fn sort_to_partition(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// All compositions of `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        fill_compositions(n, None, &mut Vec::new(), &mut out);
        out
    }

    /// All compositions of `n` with exactly `len` parts, in lexicographic order.
    pub fn all_with_len(n: usize, len: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        fill_compositions(n, Some(len), &mut Vec::new(), &mut out);
        out
    }
}

fn fill_compositions(
    remaining: usize,
    len: Option<usize>,
    current: &mut Vec<usize>,
    out: &mut Vec<Composition>,
) {
    if let Some(len) = len {
        let left = len - current.len();
        if left == 0 {
            if remaining == 0 && !current.is_empty() {
                out.push(Composition(current.clone()));
            }
            return;
        }
        if remaining < left {
            return;
        }
    } else if remaining == 0 {
        if !current.is_empty() {
            out.push(Composition(current.clone()));
        }
        return;
    }
    for part in 1..=remaining {
        current.push(part);
        fill_compositions(remaining - part, len, current, out);
        current.pop();
    }
}

pub fn reverse(alpha: &Composition) -> Composition {
    alpha.reverse()
}

pub fn sort_to_partition(alpha: &Composition) -> Partition {
    alpha.sort_to_partition()
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition(p.0)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// Shorthand for building partitions in tests and examples. Panics on invalid input.
#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::Partition::new(vec![$($p),+]).expect("valid partition") };
}

/// Shorthand for building compositions. Panics on invalid input.
#[macro_export]
macro_rules! composition {
    ($($p:expr),+ $(,)?) => { $crate::Composition::new(vec![$($p),+]).expect("valid composition") };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(dominance_leq(&p(&[2, 2]), &p(&[2, 2])).unwrap());
    }

    #[test]
    fn dominance_rejects_size_mismatch() {
        let err = dominance_leq(&p(&[2]), &p(&[2, 1])).unwrap_err();
        assert!(err.to_string().starts_with("dominance requires equal size"));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 3, 3]).conjugate(), p(&[3, 3, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn reverse_and_sort_examples() {
        let c = |v: &[usize]| Composition::new(v.to_vec()).unwrap();
        assert_eq!(c(&[2, 1, 3]).reverse(), c(&[3, 1, 2]));
        assert_eq!(c(&[7]).reverse(), c(&[7]));
        assert_eq!(c(&[1, 1, 1, 1, 7, 1]).reverse(), c(&[1, 7, 1, 1, 1, 1]));
        assert_eq!(c(&[2, 1, 3]).sort_to_partition(), p(&[3, 2, 1]));
        assert_eq!(c(&[3, 2, 1]).sort_to_partition(), p(&[3, 2, 1]));
        assert_eq!(c(&[1, 7, 1, 1, 1, 1]).sort_to_partition(), p(&[7, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Partition::new(vec![1, 2]), Err(Error::NotWeaklyDecreasing(_))));
        assert!(matches!(Partition::new(vec![2, 0]), Err(Error::ZeroPart(_))));
        assert!(matches!(Composition::new(vec![1, 0, 2]), Err(Error::ZeroPart(_))));
    }

    #[test]
    fn enumeration_counts() {
        // p(n) for n = 0..=12 and 2^(n-1) compositions
        let counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &c) in counts.iter().enumerate() {
            assert_eq!(Partition::all(n).len(), c, "p({n})");
        }
        for n in 1..=10 {
            assert_eq!(Composition::all(n).len(), 1 << (n - 1));
            let by_len: usize = (1..=n).map(|l| Composition::all_with_len(n, l).len()).sum();
            assert_eq!(by_len, 1 << (n - 1));
        }
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 1..=12 {
            let all = Partition::all(n);
            for a in &all {
                assert!(dominance_leq(a, a).unwrap());
                for b in &all {
                    let ab = dominance_leq(a, b).unwrap();
                    let ba = dominance_leq(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    if !ab {
                        continue;
                    }
                    for c in &all {
                        if dominance_leq(b, c).unwrap() {
                            assert!(dominance_leq(a, c).unwrap(), "{a} {b} {c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_reverses_under_conjugation() {
        for n in 1..=10 {
            let all = Partition::all(n);
            for mu in &all {
                for lambda in &all {
                    assert_eq!(
                        dominance_leq(mu, lambda).unwrap(),
                        dominance_leq(&lambda.conjugate(), &mu.conjugate()).unwrap()
                    );
                }
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        (0usize..=20).prop_flat_map(|n| {
            let all = Partition::all(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    fn arb_composition() -> impl Strategy<Value = Composition> {
        proptest::collection::vec(1usize..=4, 1..=5).prop_map(|v| Composition::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn conjugate_is_an_involution(lambda in arb_partition()) {
            prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
            prop_assert_eq!(lambda.conjugate().size(), lambda.size());
        }

        #[test]
        fn reverse_is_an_involution(alpha in arb_composition()) {
            prop_assert_eq!(alpha.reverse().reverse(), alpha.clone());
            prop_assert_eq!(alpha.sort_to_partition(), alpha.reverse().sort_to_partition());
        }
    }
}
