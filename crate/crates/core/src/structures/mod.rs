//! Combings, significant letters, generator extraction and the construction
//! of a combing from generators.

mod build;
mod combing;
mod cycles;
mod extract;
mod significant;

pub use build::{
    build_combing, c_xy_direct, first_combing_prefixes, BuildOptions, BuildReport, NeighborAutomaton, DEFAULT_STATE_CAP,
};
pub use combing::{check_combing, ft_bound_of_combing, CombingReport, FtBoundReport};
pub use cycles::{check_balanced_cycles, core_subgraph, tail_length, CoreSubgraph};
pub use extract::extract_generators;
pub use significant::{
    check_central, check_significant, search_significant, CentralReport, SigObstruction, SigSearch, SigVerdict,
    SigViolation, SigWord,
};
