//! Alternating orbit sums over chains: w, w*_Q, w_Q, m, m*, m(d), k, the
//! chain-model sums, and the conjecture checks built on them.

pub mod appendix;
pub mod chains;
pub mod conjectures;
pub mod local;
pub mod report;
pub mod section5;

pub use chains::{chain_reduction_crosscheck, normal_chains, ChainKind, ChainOrbit, ChainReduction, ChainUniverse};
pub use conjectures::{conjecture_suite, sectional_rank, ConjectureInput, SInvariants, Verdict};
pub use local::{local_weights, orbit_sum, LocalWeights, OrderedSums, ZOracle, ZRecord};
pub use report::{catalog_report, group_report, k_of_group_system, w_of_group_system, Check, Finding, KMethod, WeightReport};
pub use section5::{chain_model_check, chain_model_sums, ChainModelReport, ChainModelSums};
pub use appendix::{appendix_identity_check, AppendixIdentity};
