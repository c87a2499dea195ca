//! Flattening: alias unification, canonical ordering of commutable entries,
//! and order-index renumbering. Numbers are already value-canonical at parse
//! time, so flatten never touches them. Idempotent by construction.
//!
//! Geometry Boolean operations are never reordered; their order is
//! semantics. Only doping placements, refinement placements and window
//! definitions count as commutable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::order::renumber_order_indices;
use super::types::{DeckIR, RefinementPlacement};

/// Default material alias table shipped with the toolkit.
const DEFAULT_ALIASES: &str = include_str!("../../data/aliases.json");

/// Maps material aliases to canonical names. Editable: load a replacement
/// table from JSON with [`AliasTable::from_json`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AliasTable {
    map: BTreeMap<String, String>,
}

impl AliasTable {
    /// The built-in table: Oxide→SiO2, Nitride→Si3N4, Poly→PolySi.
    pub fn builtin() -> Self {
        serde_json::from_str(DEFAULT_ALIASES).expect("built-in alias table is valid JSON")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn canonical<'a>(&'a self, material: &'a str) -> &'a str {
        self.map.get(material).map(String::as_str).unwrap_or(material)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

impl Default for AliasTable {
    fn default() -> Self {
        AliasTable::builtin()
    }
}

/// Flattens with the built-in alias table.
pub fn flatten_ir(ir: &DeckIR) -> DeckIR {
    flatten_ir_with(ir, &AliasTable::builtin())
}

/// Flattens with an explicit alias table.
pub fn flatten_ir_with(ir: &DeckIR, aliases: &AliasTable) -> DeckIR {
    let mut out = ir.clone();

    for region in &mut out.regions {
        region.material = aliases.canonical(&region.material).to_string();
    }
    out.materials.clear();
    for region in &out.regions {
        if !out.materials.iter().any(|m| *m == region.material) {
            out.materials.push(region.material.clone());
        }
    }

    out.windows.sort_by(|a, b| a.name.cmp(&b.name));
    out.dopings
        .sort_by(|a, b| (&a.placement, &a.species).cmp(&(&b.placement, &b.species)));
    out.refinements.sort_by(|a, b| {
        (placement_key(&a.placement), &a.name).cmp(&(placement_key(&b.placement), &b.name))
    });

    renumber_order_indices(&mut out);
    out
}

fn placement_key(p: &RefinementPlacement) -> String {
    match p {
        RefinementPlacement::Global { .. } => "global".to_string(),
        RefinementPlacement::Window { window } => window.clone(),
    }
}
