//! Skew Schur expansions by the Littlewood-Richardson rule, the Schur-positivity
//! order on skew diagrams, and the closed-form lattice of multiplicity-free
//! ribbons.
//!
//! ```
//! use schurpos::{expand, partition, SkewDiagram};
//!
//! let d = SkewDiagram::new(partition![3, 2, 1], partition![2, 1]).unwrap();
//! let s = expand(&d).unwrap();
//! assert_eq!(s.coefficient(&partition![2, 1]), 2);
//! ```

pub mod diagram;
pub mod error;
pub mod lr;
pub mod mf;
pub mod order;
pub mod par;
pub mod partition;
pub mod poset;
pub mod verify;

pub use diagram::{
    composition_of, enumerate_basic_skew, enumerate_basic_skew_bounded, mf_pattern, ribbon_of,
    MfPattern, SkewDiagram,
};
pub use error::{Error, Result};
pub use lr::{
    compare_vectors, expand, expand_bounded, is_lattice_word, is_multiplicity_free_vec, omega_vec,
    ComparisonResult, ReadingWord, SchurVector, Ssyt,
};
pub use mf::{
    chain_rank, covers, elements, fourcovers_delta, label_of_ribbon, leq_s_closed,
    onlycovers_witness, ribbon_of_label, schubert_pair, ChainKind, FourCovers, MfContext,
    OnlyCovers, RectLabel, Refutation,
};
pub use order::{Lattice, Order};
pub use par::Strategy;
pub use partition::{conjugate, dominance_leq, reverse, sort_to_partition, Composition, Partition};
pub use poset::{
    build_poset, build_poset_with, check_convex, check_graded, check_join_semilattice,
    compare_diagrams, necessary_filter, ribbon_poset, PosetClass, PosetModel,
};
pub use verify::{trim_report, Report, TrimReport};
