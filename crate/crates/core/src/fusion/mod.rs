//! Saturated fusion systems realized by finite groups, together with the
//! local data (Out_F(Q) and its actions) that every weight sum consumes.

mod group_system;
mod local;

pub use group_system::{CentricChain, GroupSystem, SubgroupClass, DEFAULT_CHAIN_S_CAP};
pub use local::{AutHook, ClassAction, IrrAction, LocalData};

/// A centric subgroup Q with Out_F(Q) and its radical flag.
#[derive(Clone, Debug)]
pub struct CentricReport {
    pub label: String,
    pub q_order: usize,
    pub is_centric: bool,
    pub is_radical: bool,
    pub out_order: usize,
    pub local: LocalData,
}
