use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("incompatible generators: {0}")]
    IncompatibleBacking(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("group too large: closure exceeded {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("subgroup enumeration cap exceeded: group order {order} > {cap}")]
    SubgroupCap { order: usize, cap: usize },
    #[error("chain enumeration cap exceeded: |S| = {order} > {cap}")]
    ChainCap { order: usize, cap: usize },
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("not a p-group: {0}")]
    NotPGroup(String),
    #[error("not a Sylow subgroup: {0}")]
    NotSylow(String),
    #[error("element not fully centralized")]
    NotFullyCentralized,
    #[error("unsupported twisted z: {0}")]
    UnsupportedTwistedZ(String),
    #[error("unsupported irreducible character family: {0}")]
    UnsupportedIrr(String),
    #[error("no working prime found below {0}")]
    NoWorkingPrime(u64),
    #[error("unknown system: {0}")]
    UnknownSystem(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
