//! The intermediate representation: extraction, flattening, fact cards,
//! diffs and the versioned JSON exchange format.

pub mod diff;
pub mod extract;
pub mod flatten;
pub mod json;
pub mod order;
pub mod types;

pub use diff::{diff_ir, ChangedPath, DiffClass, IrDiff};
pub use extract::{extract_ir, Extraction, GLOBAL_PLACEMENT, KNOWN_MATERIALS};
pub use flatten::{flatten_ir, flatten_ir_with, AliasTable};
pub use json::{from_json, to_json, to_json_pretty, IR_VERSION};
pub use types::{
    compute_fact_card, Axis, BooleanMode, ContactKind, ContactSpec, DeckIR, Dimension,
    DopingProfile, DopingSpec, ExportSpec, FactCard, OutputKind, RefinementPlacement,
    RefinementSpec, RegionSpec, ShapeKind, Triple, WindowSpec,
};
