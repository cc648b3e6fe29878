//! Schur expansions of skew Schur functions via Littlewood–Richardson fillings.
//!
//! A filling is enumerated cell by cell in reading order (rows top to bottom,
//! each row right to left). Column strictness, row weakness and the lattice
//! condition on the partial reading word are all checked on placement, so a
//! branch dies as soon as any of them fails.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::SkewDiagram;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default cap on `|A|` for [`expand`].
pub const DEFAULT_MAX_SIZE: usize = 16;

/// A word over the positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadingWord(pub Vec<usize>);

impl ReadingWord {
    /// Every prefix has at least as many `i`s as `(i+1)`s.
    pub fn is_lattice(&self) -> bool {
        let mut counts: Vec<usize> = Vec::new();
        for &letter in &self.0 {
            if letter == 0 {
                return false;
            }
            if counts.len() < letter {
                counts.resize(letter, 0);
            }
            counts[letter - 1] += 1;
            if letter > 1 && counts[letter - 1] > counts[letter - 2] {
                return false;
            }
        }
        true
    }

    /// The content `(c_1, c_2, ...)`, trailing zeros removed.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for &letter in &self.0 {
            if counts.len() < letter {
                counts.resize(letter, 0);
            }
            counts[letter - 1] += 1;
        }
        counts
    }
}

pub fn is_lattice_word(word: &ReadingWord) -> bool {
    word.is_lattice()
}

/// A filling of a skew diagram, entries listed in row-major order of
/// [`SkewDiagram::cells`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ssyt {
    shape: SkewDiagram,
    entries: Vec<usize>,
}

impl Ssyt {
    /// Accepts only fillings with weakly increasing rows and strictly
    /// increasing columns.
    pub fn new(shape: SkewDiagram, entries: Vec<usize>) -> Option<Self> {
        let cells = shape.cells();
        if entries.len() != cells.len() || entries.contains(&0) {
            return None;
        }
        let at = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c)).map(|i| entries[i]);
        for (idx, &(r, c)) in cells.iter().enumerate() {
            if let Some(left) = at(r, c.wrapping_sub(1)) {
                if left > entries[idx] {
                    return None;
                }
            }
            if let Some(up) = at(r.wrapping_sub(1), c) {
                if up >= entries[idx] {
                    return None;
                }
            }
        }
        Some(Ssyt { shape, entries })
    }

    pub fn shape(&self) -> &SkewDiagram {
        &self.shape
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Entries read right to left, top to bottom.
    pub fn reading_word(&self) -> ReadingWord {
        let cells = self.shape.cells();
        let mut word = Vec::with_capacity(cells.len());
        let mut start = 0;
        while start < cells.len() {
            let row = cells[start].0;
            let end = start + cells[start..].iter().take_while(|c| c.0 == row).count();
            word.extend(self.entries[start..end].iter().rev());
            start = end;
        }
        ReadingWord(word)
    }

    pub fn is_lr_filling(&self) -> bool {
        self.reading_word().is_lattice()
    }
}

/// A finite non-negative integer combination of Schur functions of a fixed degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SchurVector {
    degree: usize,
    terms: BTreeMap<Partition, u64>,
}

impl SchurVector {
    pub fn zero(degree: usize) -> Self {
        SchurVector {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Collects `(partition, coefficient)` pairs, summing repeats and dropping zeros.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, u64)>,
    {
        let mut v = SchurVector::zero(degree);
        for (p, c) in terms {
            v.add_term(p, c)?;
        }
        Ok(v)
    }

    pub fn add_term(&mut self, p: Partition, coeff: u64) -> Result<()> {
        if p.size() != self.degree {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: p.size(),
            });
        }
        if coeff > 0 {
            *self.terms.entry(p).or_insert(0) += coeff;
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, p: &Partition) -> u64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of the index partition.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, u64)> + '_ {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// ω: conjugates every index partition.
    pub fn omega(&self) -> SchurVector {
        SchurVector {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, &c)| (p.conjugate(), c)).collect(),
        }
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&c| c <= 1)
    }

    /// `self - other`, when every coefficient of the result is non-negative.
    pub fn checked_sub(&self, other: &SchurVector) -> Option<SchurVector> {
        if self.degree != other.degree {
            return None;
        }
        let mut terms = self.terms.clone();
        for (p, &c) in &other.terms {
            let entry = terms.get_mut(p)?;
            *entry = entry.checked_sub(c)?;
            if *entry == 0 {
                terms.remove(p);
            }
        }
        Some(SchurVector {
            degree: self.degree,
            terms,
        })
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "s({p})")?;
        }
        Ok(())
    }
}

pub fn omega_vec(v: &SchurVector) -> SchurVector {
    v.omega()
}

pub fn is_multiplicity_free_vec(v: &SchurVector) -> bool {
    v.is_multiplicity_free()
}

/// Outcome of comparing two Schur expansions `v1` and `v2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComparisonResult {
    Equal,
    /// `v1 - v2` is a non-zero Schur positive combination.
    Greater { difference: SchurVector },
    /// `v2 - v1` is a non-zero Schur positive combination.
    Less { difference: SchurVector },
    Incomparable,
}

impl ComparisonResult {
    pub fn tag(&self) -> &'static str {
        match self {
            ComparisonResult::Equal => "equal",
            ComparisonResult::Greater { .. } => "greater",
            ComparisonResult::Less { .. } => "less",
            ComparisonResult::Incomparable => "incomparable",
        }
    }

    /// Equal or Greater: the first argument sits weakly above the second.
    pub fn is_geq(&self) -> bool {
        matches!(self, ComparisonResult::Equal | ComparisonResult::Greater { .. })
    }

    pub fn difference(&self) -> Option<&SchurVector> {
        match self {
            ComparisonResult::Greater { difference } | ComparisonResult::Less { difference } => {
                Some(difference)
            }
            _ => None,
        }
    }

    /// The result with the arguments swapped.
    pub fn flip(self) -> ComparisonResult {
        match self {
            ComparisonResult::Greater { difference } => ComparisonResult::Less { difference },
            ComparisonResult::Less { difference } => ComparisonResult::Greater { difference },
            other => other,
        }
    }
}

impl fmt::Display for ComparisonResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

pub fn compare_vectors(v1: &SchurVector, v2: &SchurVector) -> ComparisonResult {
    if v1.degree != v2.degree {
        return ComparisonResult::Incomparable;
    }
    if v1 == v2 {
        return ComparisonResult::Equal;
    }
    if let Some(difference) = v1.checked_sub(v2) {
        return ComparisonResult::Greater { difference };
    }
    if let Some(difference) = v2.checked_sub(v1) {
        return ComparisonResult::Less { difference };
    }
    ComparisonResult::Incomparable
}

/// The Schur expansion of `s_A`, with the default size bound.
pub fn expand(diagram: &SkewDiagram) -> Result<SchurVector> {
    expand_bounded(diagram, DEFAULT_MAX_SIZE)
}

pub fn expand_bounded(diagram: &SkewDiagram, max_size: usize) -> Result<SchurVector> {
    let size = diagram.size();
    if size > max_size {
        return Err(Error::TooLarge {
            size,
            max: max_size,
        });
    }
    let mut out = SchurVector::zero(size);
    let mut walker = FillingWalker::new(diagram);
    walker.run(&mut |counts| {
        let content = Partition::from_padded(counts.to_vec());
        *out.terms.entry(content).or_insert(0) += 1;
    });
    Ok(out)
}

/// Number of LR fillings of `A`, counted without grouping by content.
pub fn count_lr_fillings(diagram: &SkewDiagram) -> u64 {
    let mut total = 0;
    FillingWalker::new(diagram).run(&mut |_| total += 1);
    total
}

/// All LR fillings of `A`, entries in the row-major order of [`SkewDiagram::cells`].
pub fn lr_fillings(diagram: &SkewDiagram) -> Vec<Ssyt> {
    let mut walker = FillingWalker::new(diagram);
    let mut found = Vec::new();
    let order = walker.order.clone();
    let n = order.len();
    walker.run_with_values(&mut |values| {
        let mut entries = vec![0; n];
        for (pos, &cell) in order.iter().enumerate() {
            entries[cell] = values[pos];
        }
        found.push(Ssyt {
            shape: diagram.clone(),
            entries,
        });
    });
    found
}

struct FillingWalker {
    /// `order[pos]` is the row-major index of the cell visited at step `pos`.
    order: Vec<usize>,
    /// Step of the cell to the right in the same row (visited just before).
    right: Vec<Option<usize>>,
    /// Step of the cell directly above.
    above: Vec<Option<usize>>,
    /// 1-based row of each step; entries never exceed it.
    row: Vec<usize>,
    values: Vec<usize>,
    counts: Vec<usize>,
}

impl FillingWalker {
    fn new(diagram: &SkewDiagram) -> Self {
        let cells = diagram.cells();
        let mut order = Vec::with_capacity(cells.len());
        let mut step_of = std::collections::HashMap::with_capacity(cells.len());
        for r in 1..=diagram.num_rows() {
            let (s, e) = diagram.row_interval(r - 1);
            for c in (s + 1..=e).rev() {
                let idx = cells.iter().position(|&x| x == (r, c)).expect("cell present");
                step_of.insert((r, c), order.len());
                order.push(idx);
            }
        }
        let mut right = Vec::with_capacity(order.len());
        let mut above = Vec::with_capacity(order.len());
        let mut row = Vec::with_capacity(order.len());
        for &idx in &order {
            let (r, c) = cells[idx];
            right.push(step_of.get(&(r, c + 1)).copied());
            above.push(if r > 1 { step_of.get(&(r - 1, c)).copied() } else { None });
            row.push(r);
        }
        let n = order.len();
        FillingWalker {
            order,
            right,
            above,
            row,
            values: vec![0; n],
            counts: vec![0; diagram.num_rows() + 1],
        }
    }

    /// Calls `leaf` with the content (letters 1.. as counts) of each LR filling.
    fn run(&mut self, leaf: &mut dyn FnMut(&[usize])) {
        self.descend(0, &mut |walker: &FillingWalker| leaf(&walker.counts[1..]));
    }

    fn run_with_values(&mut self, leaf: &mut dyn FnMut(&[usize])) {
        self.descend(0, &mut |walker: &FillingWalker| leaf(&walker.values));
    }

    fn descend(&mut self, pos: usize, leaf: &mut dyn FnMut(&FillingWalker)) {
        if pos == self.order.len() {
            leaf(self);
            return;
        }
        let lo = self.above[pos].map_or(1, |a| self.values[a] + 1);
        let mut hi = self.row[pos];
        if let Some(r) = self.right[pos] {
            hi = hi.min(self.values[r]);
        }
        for x in lo..=hi {
            // lattice: after placing x there must still be at least as many (x-1)s as xs
            if x > 1 && self.counts[x] >= self.counts[x - 1] {
                continue;
            }
            self.values[pos] = x;
            self.counts[x] += 1;
            self.descend(pos + 1, leaf);
            self.counts[x] -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::ribbon_of;
    use crate::{composition, partition};

    fn skew(outer: Partition, inner: Partition) -> SkewDiagram {
        SkewDiagram::new(outer, inner).unwrap()
    }

    fn vector(degree: usize, terms: &[(Partition, u64)]) -> SchurVector {
        SchurVector::from_terms(degree, terms.iter().cloned()).unwrap()
    }

    #[test]
    fn lattice_word_examples() {
        assert!(ReadingWord(vec![1, 1, 2, 3, 2, 1]).is_lattice());
        assert!(!ReadingWord(vec![2, 1]).is_lattice());
        assert!(!ReadingWord(vec![1, 2, 2]).is_lattice());
        assert!(ReadingWord(vec![]).is_lattice());
    }

    #[test]
    fn reading_word_of_example_tableau() {
        let shape = skew(partition![4, 3, 3], partition![2, 2]);
        // row-major: row 1 = [1, 1], row 2 = [2], row 3 = [1, 2, 3]
        let t = Ssyt::new(shape, vec![1, 1, 2, 1, 2, 3]).unwrap();
        assert_eq!(t.reading_word(), ReadingWord(vec![1, 1, 2, 3, 2, 1]));
        assert_eq!(t.reading_word().content(), vec![3, 2, 1]);
        assert!(t.is_lr_filling());
    }

    #[test]
    fn ssyt_rejects_bad_fillings() {
        let shape = skew(partition![2, 2], partition![]);
        assert!(Ssyt::new(shape.clone(), vec![1, 1, 2, 2]).is_some());
        assert!(Ssyt::new(shape.clone(), vec![1, 1, 1, 2]).is_none());
        assert!(Ssyt::new(shape, vec![2, 1, 3, 3]).is_none());
    }

    #[test]
    fn expansion_examples() {
        let a = skew(partition![3, 2, 1], partition![2, 1]);
        assert_eq!(
            expand(&a).unwrap(),
            vector(3, &[(partition![3], 1), (partition![2, 1], 2), (partition![1, 1, 1], 1)])
        );
        let b = skew(partition![2, 2], partition![1]);
        assert_eq!(expand(&b).unwrap(), vector(3, &[(partition![2, 1], 1)]));
        assert_eq!(b, ribbon_of(&composition![1, 2]).unwrap());
        let c = ribbon_of(&composition![2, 2]).unwrap();
        assert_eq!(expand(&c).unwrap(), vector(4, &[(partition![3, 1], 1), (partition![2, 2], 1)]));
    }

    #[test]
    fn expansion_respects_bound() {
        let big = ribbon_of(&composition![9, 9]).unwrap();
        assert_eq!(expand(&big), Err(Error::TooLarge { size: 18, max: 16 }));
        assert!(expand_bounded(&big, 18).is_ok());
    }

    #[test]
    fn omega_examples() {
        let v = vector(3, &[(partition![3], 1), (partition![2, 1], 2), (partition![1, 1, 1], 1)]);
        assert_eq!(v.omega(), v);
        assert_eq!(SchurVector::zero(0).omega(), SchurVector::zero(0));
        let a = skew(partition![4, 3, 3], partition![2, 2]);
        assert_eq!(expand(&a).unwrap().omega(), expand(&a.transpose()).unwrap());
    }

    #[test]
    fn multiplicity_free_examples() {
        assert!(!expand(&skew(partition![3, 2, 1], partition![2, 1])).unwrap().is_multiplicity_free());
        assert!(expand(&skew(partition![2, 2], partition![1])).unwrap().is_multiplicity_free());
        assert!(SchurVector::zero(0).is_multiplicity_free());
    }

    #[test]
    fn compare_examples() {
        let big = expand(&skew(partition![3, 2, 1], partition![2, 1])).unwrap();
        let small = expand(&skew(partition![2, 2], partition![1])).unwrap();
        let r = compare_vectors(&big, &small);
        assert_eq!(r.tag(), "greater");
        assert_eq!(compare_vectors(&big, &big), ComparisonResult::Equal);
        let r22 = expand(&ribbon_of(&composition![2, 2]).unwrap()).unwrap();
        let r13 = expand(&ribbon_of(&composition![1, 3]).unwrap()).unwrap();
        assert_eq!(
            compare_vectors(&r22, &r13),
            ComparisonResult::Greater {
                difference: vector(4, &[(partition![2, 2], 1)])
            }
        );
        assert_eq!(compare_vectors(&r13, &r22).tag(), "less");
        assert_eq!(compare_vectors(&r13, &big), ComparisonResult::Incomparable);
    }

    #[test]
    fn from_terms_rejects_inhomogeneous() {
        assert!(SchurVector::from_terms(3, [(partition![2], 1)]).is_err());
    }

    #[test]
    fn lr_fillings_are_lr_tableaux() {
        let a = skew(partition![4, 3, 3], partition![2, 2]);
        let fillings = lr_fillings(&a);
        assert_eq!(fillings.len() as u64, count_lr_fillings(&a));
        assert_eq!(fillings.len() as u64, expand(&a).unwrap().total());
        for t in &fillings {
            let checked = Ssyt::new(a.clone(), t.entries().to_vec()).expect("semistandard");
            assert!(checked.is_lr_filling());
        }
    }
}
