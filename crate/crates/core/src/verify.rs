//! Exhaustive cross-checks of the closed forms against full LR expansions.
//!
//! Every harness returns a [`Report`]; a disagreement is report content, not an
//! error. Errors are reserved for out-of-range parameters.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::diagram::{enumerate_basic_skew_bounded, mf_pattern, ribbon_of};
use crate::error::Result;
use crate::lr::{expand, is_multiplicity_free_vec, SchurVector};
use crate::mf::{self, FourCovers, OnlyCovers, RectLabel};
use crate::order::{Lattice, Order};
use crate::par::{self, Strategy};
use crate::partition::{Composition, Partition};
use crate::poset::{self, build_poset_with, compare_diagrams, ribbon_poset, PosetModel};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    /// Number of individual checks performed.
    pub checked: usize,
    pub disagreements: Vec<String>,
}

impl Report {
    pub fn is_ok(&self) -> bool {
        self.disagreements.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.disagreements.push(what());
        }
    }

    fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.disagreements.extend(other.disagreements);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "OK: 0 disagreements ({} checks)", self.checked)
        } else {
            writeln!(
                f,
                "FAIL: {} disagreements ({} checks)",
                self.disagreements.len(),
                self.checked
            )?;
            for d in &self.disagreements {
                writeln!(f, "  {d}")?;
            }
            Ok(())
        }
    }
}

/// Expansions of every ribbon in `ribbons`, keyed by composition.
fn expansion_cache(
    ribbons: impl IntoIterator<Item = Composition>,
    strategy: Strategy,
) -> Result<HashMap<Composition, SchurVector>> {
    let keys: Vec<Composition> = ribbons.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    let values = par::map(strategy, &keys, |alpha| expand(&ribbon_of(alpha)?))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(keys.into_iter().zip(values).collect())
}

/// The four Schur positive differences: `r(upper) - r(lower)` equals the
/// closed form for every instance of total size at most `max_size`.
pub fn verify_fourcovers(max_size: usize, strategy: Strategy) -> Result<Report> {
    let instances = FourCovers::all(max_size);
    let cache = expansion_cache(
        instances.iter().flat_map(|fc| {
            let (u, l) = fc.ribbons();
            [u, l]
        }),
        strategy,
    )?;
    let mut report = Report::default();
    let outcomes = par::map(strategy, &instances, |fc| {
        let (upper, lower) = fc.ribbons();
        let actual = cache[&upper].checked_sub(&cache[&lower]);
        let expected = fc.delta();
        (actual.as_ref() == Some(&expected), *fc, upper, lower)
    });
    for (ok, fc, upper, lower) in outcomes {
        report.record(ok, || {
            format!(
                "case {} (m,k,n,l)=({},{},{},{}): r({upper}) - r({lower}) differs from closed form",
                fc.case, fc.m, fc.k, fc.n, fc.l
            )
        });
    }
    Ok(report)
}

/// The four non-relations: the witness holds and the expansions confirm that
/// `s_upper - s_lower` is not Schur positive.
pub fn verify_onlycovers(max_size: usize, strategy: Strategy) -> Result<Report> {
    let instances = OnlyCovers::all(max_size);
    let outcomes = par::map(strategy, &instances, |oc| -> Result<_> {
        let (lower, upper) = oc.ribbons();
        let forbidden = compare_diagrams(&ribbon_of(&upper)?, &ribbon_of(&lower)?)?.is_geq();
        let witness = mf::onlycovers_witness(oc).holds();
        Ok((!forbidden && witness, *oc, lower, upper, forbidden))
    });
    let mut report = Report::default();
    for outcome in outcomes {
        let (ok, oc, lower, upper, forbidden) = outcome?;
        report.record(ok, || {
            format!(
                "case {} {:?}: r({lower}) vs r({upper}): {}",
                oc.case,
                (oc.m, oc.k, oc.n, oc.l, oc.m2, oc.k2, oc.n2, oc.l2),
                if forbidden { "forbidden relation holds" } else { "witness fails" }
            )
        });
    }
    Ok(report)
}

/// The closed-form order of `M_{N,ℓ}` agrees with [`compare_diagrams`] on
/// every ordered pair of labels.
pub fn verify_bigdiff(n: usize, rows: usize, strategy: Strategy) -> Result<Report> {
    let labels = mf::elements(n, rows)?;
    let diagrams = labels
        .iter()
        .map(|l| ribbon_of(&l.ribbon()))
        .collect::<Result<Vec<_>>>()?;
    let rows_out = par::map_range(strategy, labels.len(), |i| -> Result<Report> {
        let mut part = Report::default();
        for j in 0..labels.len() {
            let (x, y) = (&labels[i], &labels[j]);
            let closed = mf::leq_s_closed(x, y)?;
            let oracle = compare_diagrams(&diagrams[j], &diagrams[i])?.is_geq();
            part.record(closed == oracle, || {
                format!("{x} <= {y}: closed form says {closed}, expansion says {oracle}")
            });
        }
        Ok(part)
    });
    let mut report = Report::default();
    for r in rows_out {
        report.merge(r?);
    }
    Ok(report)
}

/// The order on labels given by the closed form.
pub fn label_order(labels: &[RectLabel], strategy: Strategy) -> Order {
    Order::from_fn(labels.len(), strategy, |i, j| {
        mf::leq_s_closed(&labels[i], &labels[j]).expect("same context")
    })
}

/// Closed-form meet and join against brute-force bounds, and closed-form
/// covers against the transitive reduction.
pub fn verify_meet_join(n: usize, rows: usize, strategy: Strategy) -> Result<Report> {
    let labels = mf::elements(n, rows)?;
    let order = label_order(&labels, strategy);
    let mut report = Report::default();
    for (i, x) in labels.iter().enumerate() {
        for (j, y) in labels.iter().enumerate() {
            let join = mf::join(x, y)?;
            let brute = order.join(i, j).map(|k| labels[k]);
            report.record(brute == Some(join), || {
                format!("join({x},{y}) = {join}, brute force {brute:?}")
            });
            let meet = mf::meet(x, y)?;
            let brute = order.meet(i, j).map(|k| labels[k]);
            report.record(brute == Some(meet), || {
                format!("meet({x},{y}) = {meet}, brute force {brute:?}")
            });
        }
    }
    let reduction: Vec<(RectLabel, RectLabel)> =
        order.hasse().iter().map(|&(i, j)| (labels[i], labels[j])).collect();
    let closed = mf::covers(n, rows)?;
    report.record(closed == reduction, || {
        format!("covers of M({n},{rows}) differ from the transitive reduction")
    });
    Ok(report)
}

/// Convexity in `P_N` of the ribbon classes with a fixed number of rows,
/// their multiplicity-free parts, and the fibers of `rows(A)` and `cols(A)`.
pub fn verify_convexity(n: usize, max_enumeration: usize, strategy: Strategy) -> Result<Report> {
    let diagrams = enumerate_basic_skew_bounded(n, max_enumeration)?;
    let p = build_poset_with(&diagrams, strategy)?;
    Ok(convexity_report(&p, n))
}

fn convexity_report(p: &PosetModel, n: usize) -> Report {
    let mut report = Report::default();
    for rows in 1..=n {
        let ok = poset::check_convex(p, |c| poset::is_ribbon_class_with_rows(c, rows));
        report.record(ok, || format!("ribbons with {rows} rows are not convex in P_{n}"));
        let ok = poset::check_convex(p, |c| {
            c.ribbons()
                .iter()
                .any(|alpha| alpha.len() == rows && mf_pattern(alpha).is_some())
        });
        report.record(ok, || {
            format!("multiplicity-free ribbons with {rows} rows are not convex in P_{n}")
        });
    }
    for lambda in Partition::all(n) {
        let ok = poset::check_convex(p, |c| poset::has_row_profile(c, &lambda));
        report.record(ok, || format!("rows(A) = ({lambda}) is not convex in P_{n}"));
        let ok = poset::check_convex(p, |c| poset::has_col_profile(c, &lambda));
        report.record(ok, || format!("cols(A) = ({lambda}) is not convex in P_{n}"));
    }
    report
}

/// The pattern test for multiplicity-free ribbons agrees with the expansion
/// for every ribbon with at most `max_size` cells.
pub fn verify_mflemma(max_size: usize, strategy: Strategy) -> Result<Report> {
    let ribbons: Vec<Composition> = (1..=max_size).flat_map(Composition::all).collect();
    let outcomes = par::map(strategy, &ribbons, |alpha| -> Result<(bool, bool)> {
        let by_pattern = mf_pattern(alpha).is_some();
        let by_expansion = is_multiplicity_free_vec(&expand(&ribbon_of(alpha)?)?);
        Ok((by_pattern, by_expansion))
    });
    let mut report = Report::default();
    for (alpha, outcome) in ribbons.iter().zip(outcomes) {
        let (by_pattern, by_expansion) = outcome?;
        report.record(by_pattern == by_expansion, || {
            format!("({alpha}): pattern says {by_pattern}, expansion says {by_expansion}")
        });
    }
    Ok(report)
}

/// Every class of `M_{N,ℓ}` is exactly `{α, α*}`.
pub fn verify_class_audit(n: usize, rows: usize, strategy: Strategy) -> Result<Report> {
    let p = ribbon_poset(n, rows, true, strategy)?;
    let mut report = Report::default();
    for class in &p.classes {
        let members: BTreeSet<Composition> = class.ribbons().into_iter().collect();
        let first = members.iter().next().cloned().expect("classes are non-empty");
        let expected: BTreeSet<Composition> = [first.reverse(), first].into_iter().collect();
        report.record(members == expected && class.members.len() == members.len(), || {
            let shown: Vec<String> = members.iter().map(|a| format!("({a})")).collect();
            format!("M({n},{rows}) class {{{}}} is not a reversal pair", shown.join(", "))
        });
    }
    Ok(report)
}

/// Lattice statistics of `M_{N,ℓ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrimReport {
    pub join_irreducibles: usize,
    pub meet_irreducibles: usize,
    /// Elements on a longest chain.
    pub longest_chain_elems: usize,
    /// Some longest chain consists of left modular elements.
    pub left_modular_max_chain: bool,
    /// Every element on every longest chain is left modular.
    pub all_spine_left_modular: bool,
    /// The union of the longest chains is a distributive sublattice.
    pub spine_distributive_sublattice: bool,
}

impl TrimReport {
    /// `(join irreducibles, meet irreducibles, longest chain, left modular chain)`.
    pub fn summary(&self) -> (usize, usize, usize, bool) {
        (
            self.join_irreducibles,
            self.meet_irreducibles,
            self.longest_chain_elems,
            self.left_modular_max_chain,
        )
    }
}

pub fn trim_report(n: usize, rows: usize) -> Result<TrimReport> {
    let labels = mf::elements(n, rows)?;
    let lattice = Lattice::new(label_order(&labels, Strategy::default()))
        .expect("the closed-form order is a lattice");
    let order = lattice.order();
    let left_modular: Vec<bool> = (0..labels.len()).map(|x| lattice.is_left_modular(x)).collect();
    let longest = order.longest_chain_len();
    let spine = order.spine();
    Ok(TrimReport {
        join_irreducibles: lattice.join_irreducibles().len(),
        meet_irreducibles: lattice.meet_irreducibles().len(),
        longest_chain_elems: longest,
        left_modular_max_chain: order.longest_chain_within(&left_modular) == longest,
        all_spine_left_modular: spine.iter().all(|&x| left_modular[x]),
        spine_distributive_sublattice: lattice.is_sublattice(&spine)
            && lattice.is_distributive_on(&spine),
    })
}

/// `M_{N,ℓ}` is trim: some longest chain of `m+1` elements is left modular and
/// there are `m` irreducibles of each kind. For `3 ≤ ℓ ≤ N-2` also `m = N-3`;
/// for `ℓ = 2` and `ℓ = N-1` the lattice is a chain.
pub fn verify_trim(n: usize, rows: usize) -> Result<Report> {
    let t = trim_report(n, rows)?;
    let m = t.longest_chain_elems - 1;
    let mut report = Report::default();
    report.record(t.join_irreducibles == m, || {
        format!("M({n},{rows}): {} join irreducibles, expected {m}", t.join_irreducibles)
    });
    report.record(t.meet_irreducibles == m, || {
        format!("M({n},{rows}): {} meet irreducibles, expected {m}", t.meet_irreducibles)
    });
    report.record(t.left_modular_max_chain, || {
        format!("M({n},{rows}): no longest chain of left modular elements")
    });
    if rows >= 3 && rows + 2 <= n {
        report.record(m + 3 == n, || {
            format!("M({n},{rows}): trim with m = {m}, expected {}", n - 3)
        });
    } else {
        let len = mf::elements(n, rows)?.len();
        report.record(len == m + 1, || format!("M({n},{rows}) is not a chain"));
    }
    Ok(report)
}

/// `elements(N,ℓ)` with the closed-form order is isomorphic to the poset
/// built from expansions, via `label_of_ribbon`.
pub fn verify_isomorphism(n: usize, rows: usize, strategy: Strategy) -> Result<Report> {
    let labels = mf::elements(n, rows)?;
    let p = ribbon_poset(n, rows, true, strategy)?;
    let mut report = Report::default();
    let mut index: BTreeMap<RectLabel, usize> = BTreeMap::new();
    for (c, class) in p.classes.iter().enumerate() {
        for alpha in class.ribbons() {
            let label = mf::label_of_ribbon(&alpha)?;
            if let Some(&prev) = index.get(&label) {
                report.record(prev == c, || format!("{label} spans two classes"));
            }
            index.insert(label, c);
        }
    }
    report.record(index.len() == labels.len() && p.len() == labels.len(), || {
        format!("M({n},{rows}): {} classes but {} labels", p.len(), labels.len())
    });
    for x in &labels {
        for y in &labels {
            let (Some(&i), Some(&j)) = (index.get(x), index.get(y)) else {
                continue;
            };
            let closed = mf::leq_s_closed(x, y)?;
            report.record(closed == p.leq(i, j), || format!("{x} <= {y} disagrees"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_harnesses_pass() {
        let s = Strategy::Sequential;
        assert!(verify_fourcovers(7, s).unwrap().is_ok());
        assert!(verify_onlycovers(7, s).unwrap().is_ok());
        assert!(verify_bigdiff(7, 3, s).unwrap().is_ok());
        assert!(verify_meet_join(8, 4, s).unwrap().is_ok());
        assert!(verify_mflemma(7, s).unwrap().is_ok());
        assert!(verify_class_audit(7, 3, s).unwrap().is_ok());
        assert!(verify_isomorphism(7, 3, s).unwrap().is_ok());
        assert!(verify_convexity(4, 8, s).unwrap().is_ok());
    }

    #[test]
    fn report_display() {
        let mut r = Report::default();
        r.record(true, String::new);
        assert_eq!(r.to_string(), "OK: 0 disagreements (1 checks)");
        r.record(false, || "bad".into());
        assert!(r.to_string().starts_with("FAIL: 1 disagreements"));
    }

    #[test]
    fn trim_small() {
        let t = trim_report(4, 2).unwrap();
        assert_eq!(t.summary(), (1, 1, 2, true));
        assert!(verify_trim(7, 3).unwrap().is_ok());
    }
}
