//! Closed-form description of the poset `M_{N,ℓ}` of multiplicity-free ribbons
//! with `N` cells and `ℓ` rows.
//!
//! Each class is labelled by a rectangle `[a, b]` with `1 ≤ a ≤ ℓ-1` and
//! `1 ≤ b ≤ N-ℓ`, standing for the ribbon `(N-ℓ-b+1, 1^{a-1}, b+1, 1^{ℓ-a-1})`.
//! The order is a product of two chain orders, except along the boundary rows
//! `a = ℓ-1` and `b = N-ℓ` where reversal identifies pairs of labels.

use std::collections::BTreeSet;
use std::fmt;

use crate::diagram::{mf_pattern, ribbon_of};
use crate::error::{Error, Result};
use crate::lr::{expand, SchurVector};
use crate::partition::{Composition, Partition};

/// The pair `(N, ℓ)` fixing one lattice `M_{N,ℓ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MfContext {
    pub n: usize,
    pub rows: usize,
}

impl MfContext {
    /// Requires `2 ≤ rows ≤ n-1`; the one-row and one-column cases are singletons.
    pub fn new(n: usize, rows: usize) -> Result<Self> {
        if rows < 2 || rows + 1 > n {
            return Err(Error::OutOfRange {
                what: "rows",
                value: rows,
                min: 2,
                max: n.saturating_sub(1),
            });
        }
        Ok(MfContext { n, rows })
    }

    /// `ℓ - 1`, the largest height.
    pub fn max_a(&self) -> usize {
        self.rows - 1
    }

    /// `N - ℓ`, the largest width.
    pub fn max_b(&self) -> usize {
        self.n - self.rows
    }

    pub fn h_order(&self) -> ChainOrder {
        ChainOrder::new(ChainKind::H, self.max_a())
    }

    pub fn w_order(&self) -> ChainOrder {
        ChainOrder::new(ChainKind::W, self.max_b())
    }

    pub fn is_valid(&self, a: usize, b: usize) -> bool {
        let (ha, wb) = (self.max_a(), self.max_b());
        (1..ha).contains(&a) && (1..wb).contains(&b)
            || a == ha && b >= 1 && 2 * b <= wb
            || b == wb && a >= 1 && 2 * a <= ha
            || a == ha && b == wb
    }

    pub fn label(&self, a: usize, b: usize) -> Result<RectLabel> {
        if !self.is_valid(a, b) {
            return Err(Error::InvalidLabel {
                a,
                b,
                n: self.n,
                rows: self.rows,
            });
        }
        Ok(RectLabel { a, b, ctx: *self })
    }

    /// The bottom element `[ℓ-1, N-ℓ]`.
    pub fn bottom(&self) -> RectLabel {
        RectLabel {
            a: self.max_a(),
            b: self.max_b(),
            ctx: *self,
        }
    }
}

/// A rectangle label `[a, b]` in a fixed `M_{N,ℓ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RectLabel {
    pub a: usize,
    pub b: usize,
    pub ctx: MfContext,
}

impl RectLabel {
    pub fn new(a: usize, b: usize, n: usize, rows: usize) -> Result<Self> {
        MfContext::new(n, rows)?.label(a, b)
    }

    pub fn ribbon(&self) -> Composition {
        ribbon_of_label(self)
    }
}

impl fmt::Display for RectLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainKind {
    /// Heights `1..=ℓ-1`.
    H,
    /// Widths `1..=N-ℓ`.
    W,
}

/// The total order on `1..=len` that ranks `x` by how close it sits to
/// `(len+1)/2 - ε`, farthest first. With `ε = 1/4` and everything scaled by 4
/// the rank is `-|4x - (2 len + 1)|`, which never ties.
///
/// For `len = 5` this is `5 < 1 < 4 < 2 < 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChainOrder {
    pub kind: ChainKind,
    pub len: usize,
}

impl ChainOrder {
    pub fn new(kind: ChainKind, len: usize) -> Self {
        ChainOrder { kind, len }
    }

    pub fn rank(&self, x: usize) -> i64 {
        debug_assert!((1..=self.len).contains(&x));
        -(4 * x as i64 - (2 * self.len as i64 + 1)).abs()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.rank(x) <= self.rank(y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        if self.leq(x, y) {
            x
        } else {
            y
        }
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        if self.leq(x, y) {
            y
        } else {
            x
        }
    }

    /// `1..=len` from bottom to top.
    pub fn sorted(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (1..=self.len).collect();
        v.sort_by_key(|&x| self.rank(x));
        v
    }

    /// Consecutive pairs `x ⋖ y` of the chain.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.sorted().windows(2).map(|w| (w[0], w[1])).collect()
    }
}

/// Rank of `x` in the height (`H`, over `1..=ℓ-1`) or width (`W`, over
/// `1..=N-ℓ`) chain of `M_{N,ℓ}`.
pub fn chain_rank(kind: ChainKind, x: usize, n: usize, rows: usize) -> Result<i64> {
    let ctx = MfContext::new(n, rows)?;
    let len = match kind {
        ChainKind::H => ctx.max_a(),
        ChainKind::W => ctx.max_b(),
    };
    if !(1..=len).contains(&x) {
        return Err(Error::OutOfRange {
            what: "chain element",
            value: x,
            min: 1,
            max: len,
        });
    }
    Ok(ChainOrder::new(kind, len).rank(x))
}

/// Every label of `M_{N,ℓ}`, sorted by `(a, b)`.
pub fn elements(n: usize, rows: usize) -> Result<Vec<RectLabel>> {
    let ctx = MfContext::new(n, rows)?;
    let mut out = Vec::new();
    for a in 1..=ctx.max_a() {
        for b in 1..=ctx.max_b() {
            if ctx.is_valid(a, b) {
                out.push(RectLabel { a, b, ctx });
            }
        }
    }
    Ok(out)
}

/// `r[a,b] = (N-ℓ-b+1, 1^{a-1}, b+1, 1^{ℓ-a-1})`.
pub fn ribbon_of_label(label: &RectLabel) -> Composition {
    let (a, b) = (label.a, label.b);
    let ctx = label.ctx;
    let mut parts = Vec::with_capacity(ctx.rows);
    parts.push(ctx.max_b() - b + 1);
    parts.extend(std::iter::repeat_n(1, a - 1));
    parts.push(b + 1);
    parts.extend(std::iter::repeat_n(1, ctx.rows - a - 1));
    Composition::new(parts).expect("positive parts")
}

/// Applies the boundary identifications `[ℓ-1, b] = [ℓ-1, N-ℓ-b]` and
/// `[a, N-ℓ] = [ℓ-1-a, N-ℓ]`, and maps the degenerate `[ℓ-1, 0]`, `[0, N-ℓ]`
/// to `[ℓ-1, N-ℓ]`.
fn canonical(ctx: MfContext, a: usize, b: usize) -> (usize, usize) {
    let (ha, wb) = (ctx.max_a(), ctx.max_b());
    match (a, b) {
        (a, 0) if a == ha => (ha, wb),
        (0, b) if b == wb => (ha, wb),
        (a, b) if a == ha && b < wb => (a, b.min(wb - b)),
        (a, b) if b == wb && a < ha => (a.min(ha - a), b),
        other => other,
    }
}

/// The canonical label of a multiplicity-free ribbon with at least two rows
/// and at least one part above 1.
pub fn label_of_ribbon(alpha: &Composition) -> Result<RectLabel> {
    if mf_pattern(alpha).is_none() {
        return Err(Error::NotMultiplicityFree(alpha.parts().to_vec()));
    }
    let ctx = MfContext::new(alpha.size(), alpha.len())?;
    let reversed = alpha.reverse();
    for a in 1..=ctx.max_a() {
        for b in 1..=ctx.max_b() {
            let candidate = ribbon_of_label(&RectLabel { a, b, ctx });
            if &candidate == alpha || candidate == reversed {
                let (a, b) = canonical(ctx, a, b);
                return ctx.label(a, b);
            }
        }
    }
    // Multiplicity-free with 2 ≤ ℓ ≤ N-1 always matches some rectangle.
    unreachable!("no rectangle label for {alpha}")
}

fn same_context(l1: &RectLabel, l2: &RectLabel) -> Result<MfContext> {
    if l1.ctx != l2.ctx {
        return Err(Error::ContextMismatch(l1.ctx.n, l1.ctx.rows, l2.ctx.n, l2.ctx.rows));
    }
    Ok(l1.ctx)
}

/// `[a1,b1] ≤_s [a2,b2]` iff `a1 ≤_h a2` and `b1 ≤_w b2`.
pub fn leq_s_closed(l1: &RectLabel, l2: &RectLabel) -> Result<bool> {
    let ctx = same_context(l1, l2)?;
    Ok(ctx.h_order().leq(l1.a, l2.a) && ctx.w_order().leq(l1.b, l2.b))
}

/// Cover relations `(lower, upper)` of `M_{N,ℓ}`, sorted.
pub fn covers(n: usize, rows: usize) -> Result<Vec<(RectLabel, RectLabel)>> {
    let ctx = MfContext::new(n, rows)?;
    let (ha, wb) = (ctx.max_a(), ctx.max_b());
    let mut out = BTreeSet::new();
    let mut push = |a1: usize, b1: usize, a2: usize, b2: usize| {
        if (a1, b1) != (a2, b2) && ctx.is_valid(a1, b1) && ctx.is_valid(a2, b2) {
            out.insert((ctx.label(a1, b1).unwrap(), ctx.label(a2, b2).unwrap()));
        }
    };
    // along the bottom edge b = N-ℓ
    for a in 1..ha / 2 {
        push(a, wb, a + 1, wb);
    }
    for (a1, a2) in ctx.h_order().covers() {
        for b in 1..wb {
            push(a1, b, a2, b);
        }
    }
    // along the edge a = ℓ-1
    for b in 1..wb / 2 {
        push(ha, b, ha, b + 1);
    }
    for (b1, b2) in ctx.w_order().covers() {
        for a in 1..ha {
            push(a, b1, a, b2);
        }
    }
    push(ha, wb, 1, wb);
    push(ha, wb, ha, 1);
    Ok(out.into_iter().collect())
}

pub fn join(l1: &RectLabel, l2: &RectLabel) -> Result<RectLabel> {
    let ctx = same_context(l1, l2)?;
    let a = ctx.h_order().join(l1.a, l2.a);
    let b = ctx.w_order().join(l1.b, l2.b);
    let (a, b) = canonical(ctx, a, b);
    ctx.label(a, b)
}

pub fn meet(l1: &RectLabel, l2: &RectLabel) -> Result<RectLabel> {
    let ctx = same_context(l1, l2)?;
    let (ha, wb) = (ctx.max_a(), ctx.max_b());
    let a = ctx.h_order().meet(l1.a, l2.a);
    let b = ctx.w_order().meet(l1.b, l2.b);
    let (a, b) = if a == ha && 2 * b > wb {
        (a, wb - b)
    } else if b == wb && 2 * a > ha {
        (ha - a, b)
    } else {
        (a, b)
    };
    let (a, b) = canonical(ctx, a, b);
    ctx.label(a, b)
}

/// The two Schubert indices `(a^b)` and `((N-ℓ)^{ℓ-a-1}, (N-ℓ-b)^a)` of a label.
pub fn schubert_pair(label: &RectLabel) -> (Partition, Partition) {
    let ctx = label.ctx;
    let first = Partition::repeated(label.a, label.b);
    let mut second = Partition::repeated(ctx.max_b(), ctx.rows - label.a - 1).into_parts();
    second.extend(Partition::repeated(ctx.max_b() - label.b, label.a).into_parts());
    (first, Partition::new(second).expect("weakly decreasing"))
}

/// The four families of Schur positive ribbon differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FourCovers {
    pub case: u8,
    pub m: usize,
    pub k: usize,
    pub n: usize,
    pub l: usize,
}

fn ribbon_parts(m: usize, k: usize, n: usize, l: usize) -> Composition {
    let mut parts = vec![m];
    parts.extend(std::iter::repeat_n(1, k));
    parts.push(n);
    parts.extend(std::iter::repeat_n(1, l));
    Composition::new(parts).expect("positive parts")
}

fn hypothesis(holds: bool, what: &str) -> Result<()> {
    if holds {
        Ok(())
    } else {
        Err(Error::Hypothesis(what.to_string()))
    }
}

impl FourCovers {
    pub fn new(case: u8, m: usize, k: usize, n: usize, l: usize) -> Result<Self> {
        hypothesis(m >= 1 && n >= 1, "m, n >= 1")?;
        match case {
            1 => hypothesis(n > m + 1, "n-1 > m")?,
            2 => {
                hypothesis(n > m, "n > m")?;
                hypothesis(l >= 1, "l >= 1")?;
            }
            3 => {
                hypothesis(n >= 2, "n >= 2")?;
                hypothesis(l > k, "l > k")?;
            }
            4 => {
                hypothesis(m >= 2 && n >= 2, "m, n >= 2")?;
                hypothesis(l > k + 1, "l-1 > k")?;
            }
            _ => return Err(Error::Hypothesis(format!("case {case} is not one of 1..=4"))),
        }
        Ok(FourCovers { case, m, k, n, l })
    }

    /// The ribbons `(upper, lower)` whose difference is the closed form.
    pub fn ribbons(&self) -> (Composition, Composition) {
        let FourCovers { m, k, n, l, .. } = *self;
        match self.case {
            1 => (ribbon_parts(n - 1, k, m + 1, l), ribbon_parts(m, k, n, l)),
            2 => (ribbon_parts(m, k, n, l), ribbon_parts(n, k, m, l)),
            3 => (ribbon_parts(m, k, n, l), ribbon_parts(m, l, n, k)),
            _ => (ribbon_parts(m, l - 1, n, k + 1), ribbon_parts(m, k, n, l)),
        }
    }

    pub fn size(&self) -> usize {
        self.m + self.k + self.n + self.l
    }

    /// The closed-form Schur expansion of `r(upper) - r(lower)`.
    pub fn delta(&self) -> SchurVector {
        let FourCovers { m, k, n, l, .. } = *self;
        let mut terms = Vec::new();
        let shape = |first: usize, second: usize, twos: usize, ones: usize| {
            let mut parts = vec![first, second];
            parts.extend(std::iter::repeat_n(2, twos));
            parts.extend(std::iter::repeat_n(1, ones));
            Partition::new(parts).expect("closed-form terms are partitions")
        };
        match self.case {
            1 => {
                for i in 0..=k.min(l) {
                    terms.push(shape(n - 1, m + 1, i, k + l - 2 * i));
                }
            }
            2 => {
                for i in 0..=k.min(l - 1) {
                    terms.push(shape(n, m + 1, i, k + l - 2 * i - 1));
                }
            }
            3 => {
                for i in 0..=(n - 2).min(m - 1) {
                    terms.push(shape(n + m - i - 1, i + 2, k, l - k - 1));
                }
            }
            _ => {
                for i in 0..=(n - 2).min(m - 2) {
                    terms.push(shape(n + m - i - 2, i + 2, k + 1, l - k - 2));
                }
            }
        }
        SchurVector::from_terms(self.size(), terms.into_iter().map(|p| (p, 1)))
            .expect("homogeneous")
    }

    /// Every instance with `m + k + n + l ≤ max_size`, all four cases.
    pub fn all(max_size: usize) -> Vec<FourCovers> {
        let mut out = Vec::new();
        for case in 1..=4 {
            for_each_mknl(max_size, |m, k, n, l| {
                if let Ok(fc) = FourCovers::new(case, m, k, n, l) {
                    out.push(fc);
                }
            });
        }
        out
    }
}

/// Closed form of `r(upper) - r(lower)` for one of the four Schur positive families.
pub fn fourcovers_delta(case: u8, m: usize, k: usize, n: usize, l: usize) -> Result<SchurVector> {
    Ok(FourCovers::new(case, m, k, n, l)?.delta())
}

fn for_each_mknl(max_size: usize, mut f: impl FnMut(usize, usize, usize, usize)) {
    for m in 1..=max_size {
        for n in 1..=max_size - m {
            for k in 0..=max_size - m - n {
                for l in 0..=max_size - m - n - k {
                    f(m, k, n, l);
                }
            }
        }
    }
}

/// An instance of the four non-relations: `lower ≰_s upper` is claimed for the
/// ribbons returned by [`OnlyCovers::ribbons`].
///
/// `(m2, k2, n2, l2)` are the primed parameters; cases 1 and 2 use `k2, l2`,
/// cases 3 and 4 use `m2, n2`, and the unused pair must equal its unprimed twin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OnlyCovers {
    pub case: u8,
    pub m: usize,
    pub k: usize,
    pub n: usize,
    pub l: usize,
    pub m2: usize,
    pub k2: usize,
    pub n2: usize,
    pub l2: usize,
}

/// Which sorted profile exhibits a dominance failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Rows,
    Cols,
}

/// Evidence that `s_upper - s_lower` is not Schur positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// `stat(upper) ≤_dom stat(lower)` would be necessary, and fails.
    Dominance {
        statistic: Statistic,
        upper_profile: Partition,
        lower_profile: Partition,
    },
    /// `s_nu` appears in `s_lower` but not in `s_upper`.
    Content {
        nu: Partition,
        lower_coefficient: u64,
        upper_coefficient: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub lower: Composition,
    pub upper: Composition,
    pub evidence: Evidence,
}

impl OnlyCovers {
    pub fn new(
        case: u8,
        (m, k, n, l): (usize, usize, usize, usize),
        (m2, k2, n2, l2): (usize, usize, usize, usize),
    ) -> Result<Self> {
        hypothesis(m >= 1 && n >= 1 && m2 >= 1 && n2 >= 1, "m, n, m', n' >= 1")?;
        hypothesis(k + l == k2 + l2, "k + l = k' + l'")?;
        hypothesis(m + n == m2 + n2, "m + n = m' + n'")?;
        match case {
            1 | 2 => hypothesis(m == m2 && n == n2, "m' = m and n' = n in cases 1 and 2")?,
            3 | 4 => hypothesis(k == k2 && l == l2, "k' = k and l' = l in cases 3 and 4")?,
            _ => return Err(Error::Hypothesis(format!("case {case} is not one of 1..=4"))),
        }
        match case {
            1 => hypothesis(n > m + 1, "n-1 > m")?,
            2 => {
                hypothesis(n > m, "n > m")?;
                hypothesis(l >= 1, "l >= 1")?;
            }
            3 => {
                hypothesis(n >= 2 && n2 >= 2, "n, n' >= 2")?;
                hypothesis(l > k, "l > k")?;
            }
            _ => {
                hypothesis(m >= 2 && n >= 2 && n2 >= 2, "m, n, n' >= 2")?;
                hypothesis(l > k + 1, "l-1 > k")?;
            }
        }
        Ok(OnlyCovers { case, m, k, n, l, m2, k2, n2, l2 })
    }

    /// `(lower, upper)` with `lower ≰_s upper`.
    pub fn ribbons(&self) -> (Composition, Composition) {
        let OnlyCovers { m, k, n, l, m2, k2, n2, l2, .. } = *self;
        match self.case {
            1 => (ribbon_parts(n - 1, k, m + 1, l), ribbon_parts(m, k2, n, l2)),
            2 => (ribbon_parts(m, k, n, l), ribbon_parts(n, k2, m, l2)),
            3 => (ribbon_parts(m, k, n, l), ribbon_parts(m2, l, n2, k)),
            _ => (ribbon_parts(m, l - 1, n, k + 1), ribbon_parts(m2, k, n2, l)),
        }
    }

    pub fn size(&self) -> usize {
        self.m + self.k + self.n + self.l
    }

    /// Every instance with `m + k + n + l ≤ max_size`, all four cases and all
    /// admissible primed parameters.
    pub fn all(max_size: usize) -> Vec<OnlyCovers> {
        let mut out = Vec::new();
        for case in 1..=4u8 {
            for_each_mknl(max_size, |m, k, n, l| {
                if case <= 2 {
                    for k2 in 0..=k + l {
                        if let Ok(oc) = OnlyCovers::new(case, (m, k, n, l), (m, k2, n, k + l - k2)) {
                            out.push(oc);
                        }
                    }
                } else {
                    for n2 in 1..m + n {
                        if let Ok(oc) = OnlyCovers::new(case, (m, k, n, l), (m + n - n2, k, n2, l)) {
                            out.push(oc);
                        }
                    }
                }
            });
        }
        out
    }
}

/// The witness that `lower ≰_s upper`: a dominance failure for cases 1 and 3,
/// a separating Schur function for cases 2 and 4.
pub fn onlycovers_witness(instance: &OnlyCovers) -> Refutation {
    let (lower, upper) = instance.ribbons();
    let evidence = match instance.case {
        1 | 3 => {
            let statistic = if instance.case == 1 { Statistic::Rows } else { Statistic::Cols };
            let pick = |alpha: &Composition| {
                let (rows, cols) = ribbon_of(alpha).expect("non-empty").profile();
                match statistic {
                    Statistic::Rows => rows,
                    Statistic::Cols => cols,
                }
            };
            Evidence::Dominance {
                statistic,
                upper_profile: pick(&upper),
                lower_profile: pick(&lower),
            }
        }
        2 => {
            let OnlyCovers { m, k, n, l, .. } = *instance;
            let mut parts = vec![n, m + 1];
            parts.extend(std::iter::repeat_n(1, k + l - 1));
            content_evidence(Partition::new(parts).expect("n > m"), &lower, &upper)
        }
        _ => {
            // ω-image of case 2 applied to the transposed ribbons
            // (k+2, 1^{n-2}, l+1, 1^{m-1}) and (l+1, 1^{n'-2}, k+2, 1^{m'-1}).
            let OnlyCovers { m, k, n, l, .. } = *instance;
            let mut parts = vec![l + 1, k + 3];
            parts.extend(std::iter::repeat_n(1, n + m - 4));
            let nu = Partition::new(parts).expect("l-1 > k").conjugate();
            content_evidence(nu, &lower, &upper)
        }
    };
    Refutation { lower, upper, evidence }
}

fn content_evidence(nu: Partition, lower: &Composition, upper: &Composition) -> Evidence {
    let coeff = |alpha: &Composition| {
        expand(&ribbon_of(alpha).expect("non-empty"))
            .expect("within bound")
            .coefficient(&nu)
    };
    Evidence::Content {
        lower_coefficient: coeff(lower),
        upper_coefficient: coeff(upper),
        nu,
    }
}

impl Refutation {
    /// The evidence actually rules out `s_upper - s_lower` being Schur positive.
    pub fn holds(&self) -> bool {
        match &self.evidence {
            Evidence::Dominance {
                upper_profile,
                lower_profile,
                ..
            } => !crate::partition::dominance_leq(upper_profile, lower_profile).unwrap_or(true),
            Evidence::Content {
                lower_coefficient,
                upper_coefficient,
                ..
            } => *lower_coefficient >= 1 && *upper_coefficient == 0,
        }
    }
}
