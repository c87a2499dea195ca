//! The semantic record extracted from a deck: dimension and up-direction,
//! materials, ordered region geometry, contacts, doping, mesh refinement and
//! export directives. Values are exact decimals so two IRs are equal exactly
//! when they mean the same deck.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::decimal::Decimal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dimension {
    TwoD,
    ThreeD,
}

/// Up direction of the simulated structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    PlusX,
    PlusY,
    PlusZ,
    MinusX,
    MinusY,
    MinusZ,
}

/// Overlap-resolution policy for Boolean geometry: new-replaces-old (ABA)
/// versus old-replaces-new (BAB).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum BooleanMode {
    Aba,
    Bab,
}

impl BooleanMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            BooleanMode::Aba => "ABA",
            BooleanMode::Bab => "BAB",
        }
    }
}

/// A coordinate or size triple.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub x: Decimal,
    pub y: Decimal,
    pub z: Decimal,
}

impl Triple {
    pub fn new(x: Decimal, y: Decimal, z: Decimal) -> Self {
        Triple { x, y, z }
    }

    pub fn from_array(a: [Decimal; 3]) -> Self {
        let [x, y, z] = a;
        Triple { x, y, z }
    }

    pub fn components(&self) -> [&Decimal; 3] {
        [&self.x, &self.y, &self.z]
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Triple) -> bool {
        self.x <= other.x && self.y <= other.y && self.z <= other.z
    }

    /// Coordinate rendering used by instructions: `(x, y, z)`.
    pub fn display_coords(&self) -> String {
        format!("({}, {}, {})", self.x.canonical(), self.y.canonical(), self.z.canonical())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeKind {
    Rectangle,
    Cuboid,
}

/// One geometry region. `boolean_op_index` is the region's ordinal position
/// in the deck's Boolean-operation order; geometry is never reordered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionSpec {
    pub name: String,
    pub material: String,
    pub shape: ShapeKind,
    pub min: Triple,
    pub max: Triple,
    pub boolean_op_index: u32,
}

impl RegionSpec {
    /// Inclusive bounding-box membership.
    pub fn contains(&self, p: &Triple) -> bool {
        self.min.le(p) && p.le(&self.max)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContactKind {
    Edge,
    /// A virtual contact point; the coordinate must fall inside the bounding
    /// box of some region.
    Point { position: Triple },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContactSpec {
    pub name: String,
    pub kind: ContactKind,
    /// Position of the attaching command among all deck commands.
    pub attach_order_index: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DopingProfile {
    Constant { concentration: Decimal },
    Gaussian { peak: Decimal, char_length: Decimal },
}

/// One doping placement: a species/profile applied to a region or window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DopingSpec {
    pub species: String,
    pub profile: DopingProfile,
    /// Region or window name the profile lands on.
    pub placement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RefinementPlacement {
    /// Global placement. `explicit` records whether the deck spells the
    /// placement out as its own statement, which is semantically redundant
    /// and therefore togglable by the diversifier.
    Global { explicit: bool },
    Window { window: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinementSpec {
    pub name: String,
    pub max_sizes: Triple,
    pub min_sizes: Triple,
    pub placement: RefinementPlacement,
    /// Position of the defining command among all deck commands.
    pub def_order_index: u32,
}

/// A named evaluation window referenced by doping or refinement placements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSpec {
    pub name: String,
    pub kind: ShapeKind,
    pub min: Triple,
    pub max: Triple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputKind {
    Bnd,
    Tdr,
}

/// Mesh build and export directives, with filename templates kept verbatim
/// (they may contain `@node@`-style placeholders).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportSpec {
    pub build_mesh: bool,
    pub save_tdr: bool,
    pub save_bnd: bool,
    pub mesh_basename: Option<String>,
    pub tdr_file: Option<String>,
    pub bnd_file: Option<String>,
}

impl ExportSpec {
    pub fn expected_outputs(&self) -> BTreeSet<OutputKind> {
        let mut set = BTreeSet::new();
        if self.save_bnd {
            set.insert(OutputKind::Bnd);
        }
        if self.save_tdr {
            set.insert(OutputKind::Tdr);
        }
        set
    }
}

/// The full intermediate representation of one deck.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeckIR {
    pub dimension: Dimension,
    pub up_direction: Axis,
    pub materials: Vec<String>,
    pub boolean_mode: BooleanMode,
    pub regions: Vec<RegionSpec>,
    pub windows: Vec<WindowSpec>,
    pub contacts: Vec<ContactSpec>,
    pub dopings: Vec<DopingSpec>,
    pub refinements: Vec<RefinementSpec>,
    pub exports: ExportSpec,
    /// Unsupported command heads seen during extraction, in source order.
    pub unrecognized: Vec<String>,
}

impl DeckIR {
    /// An IR with nothing in it: 2D, +y up, ABA, no statements.
    pub fn empty() -> Self {
        DeckIR {
            dimension: Dimension::TwoD,
            up_direction: Axis::PlusY,
            materials: Vec::new(),
            boolean_mode: BooleanMode::Aba,
            regions: Vec::new(),
            windows: Vec::new(),
            contacts: Vec::new(),
            dopings: Vec::new(),
            refinements: Vec::new(),
            exports: ExportSpec::default(),
            unrecognized: Vec::new(),
        }
    }

    pub fn region(&self, name: &str) -> Option<&RegionSpec> {
        self.regions.iter().find(|r| r.name == name)
    }

    pub fn window(&self, name: &str) -> Option<&WindowSpec> {
        self.windows.iter().find(|w| w.name == name)
    }

    /// Componentwise bounding box over all regions.
    pub fn bounding_box(&self) -> Option<(Triple, Triple)> {
        let first = self.regions.first()?;
        let mut min = first.min.clone();
        let mut max = first.max.clone();
        for r in &self.regions[1..] {
            min.x = min.x.clone().min(r.min.x.clone());
            min.y = min.y.clone().min(r.min.y.clone());
            min.z = min.z.clone().min(r.min.z.clone());
            max.x = max.x.clone().max(r.max.x.clone());
            max.y = max.y.clone().max(r.max.y.clone());
            max.z = max.z.clone().max(r.max.z.clone());
        }
        Some((min, max))
    }

    /// Every numeric leaf of the IR, in a fixed traversal order.
    pub fn numeric_leaves(&self) -> Vec<Decimal> {
        let mut out = Vec::new();
        let mut push_triple = |out: &mut Vec<Decimal>, t: &Triple| {
            out.push(t.x.clone());
            out.push(t.y.clone());
            out.push(t.z.clone());
        };
        for r in &self.regions {
            push_triple(&mut out, &r.min);
            push_triple(&mut out, &r.max);
        }
        for w in &self.windows {
            push_triple(&mut out, &w.min);
            push_triple(&mut out, &w.max);
        }
        for c in &self.contacts {
            if let ContactKind::Point { position } = &c.kind {
                push_triple(&mut out, position);
            }
        }
        for d in &self.dopings {
            match &d.profile {
                DopingProfile::Constant { concentration } => out.push(concentration.clone()),
                DopingProfile::Gaussian { peak, char_length } => {
                    out.push(peak.clone());
                    out.push(char_length.clone());
                }
            }
        }
        for r in &self.refinements {
            push_triple(&mut out, &r.max_sizes);
            push_triple(&mut out, &r.min_sizes);
        }
        out
    }
}

/// The invariant fingerprint conserved by equivalence-preserving transforms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactCard {
    pub region_count: usize,
    /// Global Boolean mode plus the ordered op-index sequence, e.g. `ABA:0,1`.
    pub boolean_order_string: String,
    pub contacts_present: bool,
    pub expected_outputs: BTreeSet<OutputKind>,
}

/// Computes the fact card of an IR. Pure: equal IRs yield equal cards.
pub fn compute_fact_card(ir: &DeckIR) -> FactCard {
    let indices: Vec<String> =
        ir.regions.iter().map(|r| r.boolean_op_index.to_string()).collect();
    FactCard {
        region_count: ir.regions.len(),
        boolean_order_string: format!("{}:{}", ir.boolean_mode.as_str(), indices.join(",")),
        contacts_present: !ir.contacts.is_empty(),
        expected_outputs: ir.exports.expected_outputs(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Decimal {
        s.parse().unwrap()
    }

    #[test]
    fn empty_ir_fact_card() {
        let card = compute_fact_card(&DeckIR::empty());
        assert_eq!(card.region_count, 0);
        assert_eq!(card.boolean_order_string, "ABA:");
        assert!(!card.contacts_present);
        assert!(card.expected_outputs.is_empty());
    }

    #[test]
    fn fact_card_reflects_regions_contacts_outputs() {
        let mut ir = DeckIR::empty();
        ir.regions.push(RegionSpec {
            name: "r1".into(),
            material: "Silicon".into(),
            shape: ShapeKind::Rectangle,
            min: Triple::new(d("0"), d("0"), d("0")),
            max: Triple::new(d("1"), d("1"), d("0")),
            boolean_op_index: 0,
        });
        ir.contacts.push(ContactSpec {
            name: "c1".into(),
            kind: ContactKind::Edge,
            attach_order_index: 5,
        });
        ir.exports.save_bnd = true;
        ir.exports.save_tdr = true;
        let card = compute_fact_card(&ir);
        assert_eq!(card.region_count, 1);
        assert_eq!(card.boolean_order_string, "ABA:0");
        assert!(card.contacts_present);
        assert_eq!(
            card.expected_outputs.into_iter().collect::<Vec<_>>(),
            vec![OutputKind::Bnd, OutputKind::Tdr]
        );
    }

    #[test]
    fn bounding_box_spans_all_regions() {
        let mut ir = DeckIR::empty();
        for (i, (lo, hi)) in [("0", "1"), ("-2", "0.5")].iter().enumerate() {
            ir.regions.push(RegionSpec {
                name: format!("r{i}"),
                material: "Silicon".into(),
                shape: ShapeKind::Rectangle,
                min: Triple::new(d(lo), d("0"), d("0")),
                max: Triple::new(d(hi), d("1"), d("0")),
                boolean_op_index: i as u32,
            });
        }
        let (min, max) = ir.bounding_box().unwrap();
        assert_eq!(min.x.canonical(), "-2");
        assert_eq!(max.x.canonical(), "1");
    }
}
