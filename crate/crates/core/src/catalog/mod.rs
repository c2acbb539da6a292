//! Nonconstrained fusion systems on p^{1+2}_+: generator data, closed forms
//! for their invariants, and the reproduction of the published tables.

mod extraspecial;
mod spec;
mod system;
mod table;

pub use extraspecial::{automorphism_of, line_of, line_subgroup, line_vector, out_of_matrix, primitive_root};
pub use spec::{OutStarShape, RvSpec, MAX_GENERIC_PRIME, SYSTEM_NAMES};
pub use system::{
    class_count_oracle, CatalogCheck, CatalogSystem, ClassCountKind, ClassCountOracle, LineOrbit, VectorOrbit,
};
pub use table::{
    emit_table, render_table, CellDiff, Cells, Format, GoldenCell, GoldenRow, GoldenTable, Table, TableRow,
    GOLDEN_DIR_VAR, TABLE_PRIMES,
};
