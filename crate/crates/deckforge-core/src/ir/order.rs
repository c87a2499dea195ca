//! The canonical command sequence for an IR.
//!
//! One plan drives both the code renderer and the order-index renumbering in
//! flatten, so a rendered deck re-extracts to exactly the indices flatten
//! assigned. Stage order: Boolean mode, geometry, windows, doping,
//! refinement, contacts, build-mesh, export. Contacts deliberately come
//! after refinement definitions; the checker enforces that order.

use super::types::{DeckIR, DopingProfile, RefinementPlacement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmitItem {
    BooleanMode,
    Region(usize),
    Window(usize),
    /// `define-constant-profile` for doping `i`.
    ConstantProfile(usize),
    /// `define-constant-profile-placement` for doping `i`.
    ConstantPlacement(usize),
    /// Self-placing `define-gaussian-profile` for doping `i`.
    GaussianDoping(usize),
    RefinementDef(usize),
    /// Explicit placement statement for refinement `i` (window placements
    /// and spelled-out global placements).
    RefinementPlacement(usize),
    ContactSet(usize),
    ContactAttach(usize),
    BuildMesh,
    Export,
}

/// The canonical command sequence for `ir`, one item per emitted command.
pub fn emission_plan(ir: &DeckIR) -> Vec<EmitItem> {
    let mut plan = vec![EmitItem::BooleanMode];
    for i in 0..ir.regions.len() {
        plan.push(EmitItem::Region(i));
    }
    for i in 0..ir.windows.len() {
        plan.push(EmitItem::Window(i));
    }
    for (i, doping) in ir.dopings.iter().enumerate() {
        match doping.profile {
            DopingProfile::Constant { .. } => {
                plan.push(EmitItem::ConstantProfile(i));
                plan.push(EmitItem::ConstantPlacement(i));
            }
            DopingProfile::Gaussian { .. } => plan.push(EmitItem::GaussianDoping(i)),
        }
    }
    for (i, refinement) in ir.refinements.iter().enumerate() {
        plan.push(EmitItem::RefinementDef(i));
        match &refinement.placement {
            RefinementPlacement::Global { explicit: false } => {}
            _ => plan.push(EmitItem::RefinementPlacement(i)),
        }
    }
    for i in 0..ir.contacts.len() {
        plan.push(EmitItem::ContactSet(i));
        plan.push(EmitItem::ContactAttach(i));
    }
    if ir.exports.build_mesh {
        plan.push(EmitItem::BuildMesh);
    }
    if ir.exports.save_tdr || ir.exports.save_bnd {
        plan.push(EmitItem::Export);
    }
    plan
}

/// Rewrites the order-index fields to match the canonical sequence.
pub fn renumber_order_indices(ir: &mut DeckIR) {
    for (i, region) in ir.regions.iter_mut().enumerate() {
        region.boolean_op_index = i as u32;
    }
    let plan = emission_plan(ir);
    for (position, item) in plan.iter().enumerate() {
        match item {
            EmitItem::RefinementDef(i) => {
                ir.refinements[*i].def_order_index = position as u32;
            }
            EmitItem::ContactAttach(i) => {
                ir.contacts[*i].attach_order_index = position as u32;
            }
            _ => {}
        }
    }
}
