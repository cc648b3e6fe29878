//! Schur-positivity comparison of skew diagrams and the posets they form.
//!
//! `[B] ≤_s [A]` when `s_A - s_B` is Schur positive. Diagrams with equal skew
//! Schur functions are merged into one class.

use std::collections::BTreeMap;

use crate::diagram::{mf_pattern, ribbon_of, SkewDiagram};
use crate::error::{Error, Result};
use crate::lr::{compare_vectors, expand, ComparisonResult, SchurVector};
use crate::order::Order;
use crate::par::{self, Strategy};
use crate::partition::{dominance_leq, Composition, Partition};

/// Necessary condition for `s_A - s_B` to be Schur positive: `rows(A) ≤ rows(B)`,
/// `cols(A) ≤ cols(B)` in dominance order, and `B` contains at least as many
/// `m × n` rectangles as `A` for every `m`, `n`.
///
/// A `false` answer rules out `s_A - s_B` being Schur positive.
pub fn necessary_filter(a: &SkewDiagram, b: &SkewDiagram) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    let (rows_a, cols_a) = a.profile();
    let (rows_b, cols_b) = b.profile();
    if !dominance_leq(&rows_a, &rows_b)? || !dominance_leq(&cols_a, &cols_b)? {
        return Ok(false);
    }
    let max_rows = a.num_rows().max(b.num_rows());
    let max_cols = a.num_cols().max(b.num_cols());
    for m in 1..=max_rows {
        for n in 1..=max_cols {
            if a.rectangle_count(m, n) > b.rectangle_count(m, n) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Compares `s_A` against `s_B`. Cheap necessary conditions settle
/// incomparability first; everything else is decided on full expansions.
pub fn compare_diagrams(a: &SkewDiagram, b: &SkewDiagram) -> Result<ComparisonResult> {
    if a.size() != b.size() {
        return Ok(ComparisonResult::Incomparable);
    }
    if a.is_ribbon() && b.is_ribbon() && a.num_rows() != b.num_rows() {
        return Ok(ComparisonResult::Incomparable);
    }
    let a_over_b = necessary_filter(a, b)?;
    let b_over_a = necessary_filter(b, a)?;
    if !a_over_b && !b_over_a {
        return Ok(ComparisonResult::Incomparable);
    }
    let result = compare_vectors(&expand(a)?, &expand(b)?);
    debug_assert!(match &result {
        ComparisonResult::Equal => a_over_b && b_over_a,
        ComparisonResult::Greater { .. } => a_over_b,
        ComparisonResult::Less { .. } => b_over_a,
        ComparisonResult::Incomparable => true,
    });
    Ok(result)
}

/// One element of a Schur-positivity poset: every diagram with a given expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetClass {
    /// Sorted by `(outer, inner)`; the first member is the canonical representative.
    pub members: Vec<SkewDiagram>,
    pub expansion: SchurVector,
}

impl PosetClass {
    pub fn representative(&self) -> &SkewDiagram {
        &self.members[0]
    }

    /// Ribbon members, as compositions.
    pub fn ribbons(&self) -> Vec<Composition> {
        self.members
            .iter()
            .filter_map(|d| d.composition().ok())
            .collect()
    }
}

/// Equivalence classes of diagrams ordered by Schur positivity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetModel {
    pub classes: Vec<PosetClass>,
    pub order: Order,
}

impl PosetModel {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `classes[i] ≤_s classes[j]`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order.leq(i, j)
    }

    /// Cover relations `(lower, upper)` by class index.
    pub fn hasse(&self) -> &[(usize, usize)] {
        self.order.hasse()
    }

    /// Index of the class containing `diagram`, if present.
    pub fn class_of(&self, diagram: &SkewDiagram) -> Option<usize> {
        self.classes.iter().position(|c| c.members.contains(diagram))
    }

    pub fn membership<F>(&self, predicate: F) -> Vec<bool>
    where
        F: Fn(&PosetClass) -> bool,
    {
        self.classes.iter().map(predicate).collect()
    }
}

pub fn build_poset(diagrams: &[SkewDiagram]) -> Result<PosetModel> {
    build_poset_with(diagrams, Strategy::default())
}

/// Groups `diagrams` by expansion and orders the classes. The result does not
/// depend on `strategy`.
pub fn build_poset_with(diagrams: &[SkewDiagram], strategy: Strategy) -> Result<PosetModel> {
    if let Some(first) = diagrams.first() {
        if diagrams.iter().any(|d| d.size() != first.size()) {
            return Err(Error::MixedSizes);
        }
    }
    let expansions = par::map(strategy, diagrams, expand)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let mut grouped: BTreeMap<SchurVector, Vec<SkewDiagram>> = BTreeMap::new();
    for (d, e) in diagrams.iter().zip(expansions) {
        grouped.entry(e).or_default().push(d.clone());
    }
    let mut classes: Vec<PosetClass> = grouped
        .into_iter()
        .map(|(expansion, mut members)| {
            members.sort();
            members.dedup();
            PosetClass { members, expansion }
        })
        .collect();
    classes.sort_by(|a, b| a.representative().cmp(b.representative()));

    let order = Order::from_fn(classes.len(), strategy, |i, j| {
        compare_vectors(&classes[j].expansion, &classes[i].expansion).is_geq()
    });
    Ok(PosetModel { classes, order })
}

/// Every maximal chain between any two comparable classes has the same length.
pub fn check_graded(poset: &PosetModel) -> bool {
    poset.order.is_graded()
}

/// Every pair of classes with a common upper bound has a least upper bound.
pub fn check_join_semilattice(poset: &PosetModel) -> bool {
    poset.order.is_join_semilattice()
}

/// The classes selected by `member` form a convex subposet.
pub fn check_convex<F>(poset: &PosetModel, member: F) -> bool
where
    F: Fn(&PosetClass) -> bool,
{
    poset.order.is_convex(&poset.membership(member))
}

/// All ribbons with `n` cells and `rows` rows, optionally only the
/// multiplicity-free ones.
pub fn ribbon_diagrams(n: usize, rows: usize, mf_only: bool) -> Result<Vec<SkewDiagram>> {
    Composition::all_with_len(n, rows)
        .iter()
        .filter(|alpha| !mf_only || mf_pattern(alpha).is_some())
        .map(ribbon_of)
        .collect()
}

/// `R_{N,ℓ}`, or its multiplicity-free part `M_{N,ℓ}` when `mf_only`.
pub fn ribbon_poset(n: usize, rows: usize, mf_only: bool, strategy: Strategy) -> Result<PosetModel> {
    build_poset_with(&ribbon_diagrams(n, rows, mf_only)?, strategy)
}

/// Class predicate: contains a ribbon with exactly `rows` rows.
pub fn is_ribbon_class_with_rows(class: &PosetClass, rows: usize) -> bool {
    class
        .members
        .iter()
        .any(|d| d.is_ribbon() && d.num_rows() == rows)
}

/// Class predicate: `rows(A) = lambda` for its members.
pub fn has_row_profile(class: &PosetClass, lambda: &Partition) -> bool {
    &class.representative().profile().0 == lambda
}

/// Class predicate: `cols(A) = lambda` for its members.
pub fn has_col_profile(class: &PosetClass, lambda: &Partition) -> bool {
    &class.representative().profile().1 == lambda
}
