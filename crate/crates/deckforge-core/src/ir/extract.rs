//! IR extraction: every supported command contributes to exactly one IR
//! field; command order is preserved through the order-index fields;
//! unsupported heads land in a side list rather than being dropped.

use crate::decimal::Decimal;
use crate::parser::ast::{Arg, CommandNode, ParseDiagnostic, Span};
use crate::parser::registry as reg;

use super::types::{
    Axis, BooleanMode, ContactKind, ContactSpec, DeckIR, Dimension, DopingProfile, DopingSpec,
    RefinementPlacement, RefinementSpec, RegionSpec, ShapeKind, Triple, WindowSpec,
};

/// Placement target name that means "the whole structure".
pub const GLOBAL_PLACEMENT: &str = "global";

/// Built-in material table; unknown names only warn so the table stays
/// extensible.
pub const KNOWN_MATERIALS: &[&str] = &["Silicon", "SiO2", "PolySi", "Si3N4", "GaN", "AlGaN"];

/// Successful extraction: the IR plus non-fatal findings.
#[derive(Debug, Clone)]
pub struct Extraction {
    pub ir: DeckIR,
    pub warnings: Vec<ParseDiagnostic>,
}

struct Extractor {
    ir: DeckIR,
    errors: Vec<ParseDiagnostic>,
    warnings: Vec<ParseDiagnostic>,
    mode_seen: Option<BooleanMode>,
    contact_sets: Vec<String>,
    profiles: Vec<(String, String, DopingProfile)>,
    placed_profiles: Vec<String>,
    saw_cuboid: bool,
}

/// Extracts the IR from parsed commands. Errors abort with diagnostics;
/// warnings ride along with the IR.
pub fn extract_ir(nodes: &[CommandNode]) -> Result<Extraction, Vec<ParseDiagnostic>> {
    let mut ex = Extractor {
        ir: DeckIR::empty(),
        errors: Vec::new(),
        warnings: Vec::new(),
        mode_seen: None,
        contact_sets: Vec::new(),
        profiles: Vec::new(),
        placed_profiles: Vec::new(),
        saw_cuboid: false,
    };

    for (index, node) in nodes.iter().enumerate() {
        ex.command(index as u32, node);
    }
    ex.finish();

    if ex.errors.is_empty() {
        Ok(Extraction { ir: ex.ir, warnings: ex.warnings })
    } else {
        Err(ex.errors)
    }
}

impl Extractor {
    fn error(&mut self, code: &str, message: impl Into<String>, span: Span) {
        self.errors.push(ParseDiagnostic::error(code, message, span));
    }

    fn warn(&mut self, code: &str, message: impl Into<String>, span: Span) {
        self.warnings.push(ParseDiagnostic::warning(code, message, span));
    }

    fn command(&mut self, index: u32, node: &CommandNode) {
        match node.head.as_str() {
            reg::SET_DEFAULT_BOOLEAN => self.set_default_boolean(node),
            "sdegeo:create-rectangle" => self.create_region(node, ShapeKind::Rectangle),
            "sdegeo:create-cuboid" => self.create_region(node, ShapeKind::Cuboid),
            reg::DEFINE_REFEVAL_WINDOW => self.define_window(node),
            reg::DEFINE_CONTACT_SET => self.define_contact_set(node),
            reg::SET_CONTACT => self.set_contact(index, node),
            reg::DEFINE_CONSTANT_PROFILE => self.define_constant_profile(node),
            reg::DEFINE_GAUSSIAN_PROFILE => self.define_gaussian_profile(node),
            reg::DEFINE_CONSTANT_PROFILE_PLACEMENT => self.place_profile(node),
            reg::DEFINE_REFINEMENT_SIZE => self.define_refinement(index, node),
            reg::DEFINE_REFINEMENT_PLACEMENT => self.place_refinement(node),
            reg::BUILD_MESH => self.build_mesh(node),
            reg::SAVE_TDR_BND => self.save_tdr_bnd(node),
            _ => self.ir.unrecognized.push(node.head.clone()),
        }
    }

    fn finish(&mut self) {
        self.ir.dimension = if self.saw_cuboid { Dimension::ThreeD } else { Dimension::TwoD };
        self.ir.up_direction = match self.ir.dimension {
            Dimension::TwoD => Axis::PlusY,
            Dimension::ThreeD => Axis::PlusZ,
        };
        if self.ir.dimension == Dimension::TwoD {
            let flat = self
                .ir
                .regions
                .iter()
                .all(|r| r.min.z.is_zero() && r.max.z.is_zero());
            if !flat {
                self.error(
                    "2d-nonzero-z",
                    "2D deck has a region with nonzero z extent",
                    Span::default(),
                );
            }
        }
        // Virtual contact points must sit inside some region's bounding box.
        let regions = self.ir.regions.clone();
        for contact in self.ir.contacts.clone() {
            if let ContactKind::Point { position } = &contact.kind {
                if !regions.iter().any(|r| r.contains(position)) {
                    self.error(
                        "contact-outside-regions",
                        format!(
                            "virtual contact `{}` at {} lies outside every region",
                            contact.name,
                            position.display_coords()
                        ),
                        Span::default(),
                    );
                }
            }
        }
        // Profiles that never get placed produce no doping; surface that.
        let placed = self.placed_profiles.clone();
        for (name, _, _) in self.profiles.clone() {
            if !placed.contains(&name) {
                self.warn(
                    "unplaced-profile",
                    format!("doping profile `{name}` is defined but never placed"),
                    Span::default(),
                );
            }
        }
    }

    // (sdegeo:set-default-boolean "ABA")
    fn set_default_boolean(&mut self, node: &CommandNode) {
        let Some(mode_text) = node.args.first().and_then(Arg::as_str) else {
            self.error("bad-arguments", "set-default-boolean expects a mode string", node.span);
            return;
        };
        let mode = match mode_text {
            "ABA" => BooleanMode::Aba,
            "BAB" => BooleanMode::Bab,
            other => {
                self.error(
                    "bad-arguments",
                    format!("unknown Boolean mode `{other}` (expected ABA or BAB)"),
                    node.span,
                );
                return;
            }
        };
        match self.mode_seen {
            None => {
                self.mode_seen = Some(mode);
                self.ir.boolean_mode = mode;
            }
            Some(prev) if prev == mode => {
                self.warn("duplicate-boolean-mode", "Boolean mode restated", node.span)
            }
            Some(prev) => self.error(
                "conflicting-boolean-mode",
                format!("Boolean mode already set to {}", prev.as_str()),
                node.span,
            ),
        }
    }

    // (sdegeo:create-rectangle (position ...) (position ...) "Material" "Name")
    fn create_region(&mut self, node: &CommandNode, shape: ShapeKind) {
        let (Some(a), Some(b), Some(material), Some(name)) = (
            node.args.first().and_then(as_position),
            node.args.get(1).and_then(as_position),
            node.args.get(2).and_then(Arg::as_str),
            node.args.get(3).and_then(Arg::as_str),
        ) else {
            self.error(
                "bad-arguments",
                format!("{} expects two positions, a material and a region name", node.head),
                node.span,
            );
            return;
        };
        if self.ir.region(name).is_some() {
            self.error("duplicate-region", format!("region `{name}` already defined"), node.span);
            return;
        }
        if !KNOWN_MATERIALS.contains(&material) {
            self.warn(
                "unknown-material",
                format!("material `{material}` is not in the built-in table"),
                node.span,
            );
        }
        if shape == ShapeKind::Cuboid {
            self.saw_cuboid = true;
        }
        let (min, max) = corner_box(a, b);
        if !self.ir.materials.iter().any(|m| m == material) {
            self.ir.materials.push(material.to_string());
        }
        let boolean_op_index = self.ir.regions.len() as u32;
        self.ir.regions.push(RegionSpec {
            name: name.to_string(),
            material: material.to_string(),
            shape,
            min,
            max,
            boolean_op_index,
        });
    }

    // (sdedr:define-refeval-window "name" "rectangle" (position ...) (position ...))
    fn define_window(&mut self, node: &CommandNode) {
        let (Some(name), Some(kind_text), Some(a), Some(b)) = (
            node.args.first().and_then(Arg::as_str),
            node.args.get(1).and_then(Arg::as_str),
            node.args.get(2).and_then(as_position),
            node.args.get(3).and_then(as_position),
        ) else {
            self.error(
                "bad-arguments",
                "define-refeval-window expects a name, a kind and two positions",
                node.span,
            );
            return;
        };
        let kind = match kind_text {
            "rectangle" => ShapeKind::Rectangle,
            "cuboid" => ShapeKind::Cuboid,
            other => {
                self.error("bad-arguments", format!("unknown window kind `{other}`"), node.span);
                return;
            }
        };
        if self.ir.window(name).is_some() {
            self.error("duplicate-window", format!("window `{name}` already defined"), node.span);
            return;
        }
        let (min, max) = corner_box(a, b);
        self.ir.windows.push(WindowSpec { name: name.to_string(), kind, min, max });
    }

    // (sdegeo:define-contact-set "name")
    fn define_contact_set(&mut self, node: &CommandNode) {
        let Some(name) = node.args.first().and_then(Arg::as_str) else {
            self.error("bad-arguments", "define-contact-set expects a name", node.span);
            return;
        };
        if self.contact_sets.iter().any(|c| c == name) {
            self.error(
                "duplicate-contact-set",
                format!("contact set `{name}` already defined"),
                node.span,
            );
            return;
        }
        self.contact_sets.push(name.to_string());
    }

    // (sdegeo:set-contact "name")                      -- edge contact
    // (sdegeo:set-contact "name" (position x y z))     -- virtual point
    fn set_contact(&mut self, index: u32, node: &CommandNode) {
        let Some(name) = node.args.first().and_then(Arg::as_str) else {
            self.error("bad-arguments", "set-contact expects a contact-set name", node.span);
            return;
        };
        if !self.contact_sets.iter().any(|c| c == name) {
            self.error(
                "undefined-reference",
                format!("contact set `{name}` referenced before definition"),
                node.span,
            );
            return;
        }
        let kind = match node.args.get(1) {
            None => ContactKind::Edge,
            Some(arg) => match as_position(arg) {
                Some(p) => ContactKind::Point { position: p },
                None => {
                    self.error(
                        "bad-arguments",
                        "set-contact's second argument must be a position",
                        node.span,
                    );
                    return;
                }
            },
        };
        self.ir.contacts.push(ContactSpec {
            name: name.to_string(),
            kind,
            attach_order_index: index,
        });
    }

    // (sdedr:define-constant-profile "pname" "species" concentration)
    fn define_constant_profile(&mut self, node: &CommandNode) {
        let (Some(pname), Some(species), Some(conc)) = (
            node.args.first().and_then(Arg::as_str),
            node.args.get(1).and_then(Arg::as_str),
            node.args.get(2).and_then(Arg::as_number),
        ) else {
            self.error(
                "bad-arguments",
                "define-constant-profile expects a name, a species and a concentration",
                node.span,
            );
            return;
        };
        if !self.positive(conc, "concentration", node.span) {
            return;
        }
        self.register_profile(
            pname,
            species,
            DopingProfile::Constant { concentration: conc.clone() },
            node.span,
        );
    }

    // (sdedr:define-gaussian-profile "pname" "species" peak char-length "target")
    fn define_gaussian_profile(&mut self, node: &CommandNode) {
        let (Some(pname), Some(species), Some(peak), Some(char_length), Some(target)) = (
            node.args.first().and_then(Arg::as_str),
            node.args.get(1).and_then(Arg::as_str),
            node.args.get(2).and_then(Arg::as_number),
            node.args.get(3).and_then(Arg::as_number),
            node.args.get(4).and_then(Arg::as_str),
        ) else {
            self.error(
                "bad-arguments",
                "define-gaussian-profile expects name, species, peak, char-length and target",
                node.span,
            );
            return;
        };
        if !self.positive(peak, "peak", node.span)
            || !self.positive(char_length, "char-length", node.span)
        {
            return;
        }
        if !self.placement_target_defined(target) {
            self.error(
                "undefined-reference",
                format!("placement target `{target}` referenced before definition"),
                node.span,
            );
            return;
        }
        let profile =
            DopingProfile::Gaussian { peak: peak.clone(), char_length: char_length.clone() };
        self.register_profile(pname, species, profile.clone(), node.span);
        self.placed_profiles.push(pname.to_string());
        self.ir.dopings.push(DopingSpec {
            species: species.to_string(),
            profile,
            placement: target.to_string(),
        });
    }

    // (sdedr:define-constant-profile-placement "placename" "pname" "target")
    fn place_profile(&mut self, node: &CommandNode) {
        let (Some(_placename), Some(pname), Some(target)) = (
            node.args.first().and_then(Arg::as_str),
            node.args.get(1).and_then(Arg::as_str),
            node.args.get(2).and_then(Arg::as_str),
        ) else {
            self.error(
                "bad-arguments",
                "define-constant-profile-placement expects placement, profile and target names",
                node.span,
            );
            return;
        };
        let Some((_, species, profile)) =
            self.profiles.iter().find(|(n, _, _)| n == pname).cloned()
        else {
            self.error(
                "undefined-reference",
                format!("doping profile `{pname}` referenced before definition"),
                node.span,
            );
            return;
        };
        if !self.placement_target_defined(target) {
            self.error(
                "undefined-reference",
                format!("placement target `{target}` referenced before definition"),
                node.span,
            );
            return;
        }
        self.placed_profiles.push(pname.to_string());
        self.ir.dopings.push(DopingSpec { species, profile, placement: target.to_string() });
    }

    // (sdedr:define-refinement-size "name" mx my mz nx ny nz)
    fn define_refinement(&mut self, index: u32, node: &CommandNode) {
        let name = node.args.first().and_then(Arg::as_str);
        let nums: Vec<&Decimal> = node.args.iter().skip(1).filter_map(Arg::as_number).collect();
        let (Some(name), [mx, my, mz, nx, ny, nz]) = (name, nums.as_slice()) else {
            self.error(
                "bad-arguments",
                "define-refinement-size expects a name and six sizes",
                node.span,
            );
            return;
        };
        let max_sizes = Triple::new((*mx).clone(), (*my).clone(), (*mz).clone());
        let min_sizes = Triple::new((*nx).clone(), (*ny).clone(), (*nz).clone());
        for v in [mx, my, mz, nx, ny, nz] {
            if !self.positive(v, "refinement size", node.span) {
                return;
            }
        }
        if !min_sizes.le(&max_sizes) {
            self.error(
                "refinement-sizes",
                format!("refinement `{name}` min sizes exceed max sizes"),
                node.span,
            );
            return;
        }
        if self.ir.refinements.iter().any(|r| r.name == name) {
            self.error(
                "duplicate-refinement",
                format!("refinement `{name}` already defined"),
                node.span,
            );
            return;
        }
        self.ir.refinements.push(RefinementSpec {
            name: name.to_string(),
            max_sizes,
            min_sizes,
            placement: RefinementPlacement::Global { explicit: false },
            def_order_index: index,
        });
    }

    // (sdedr:define-refinement-placement "placename" "refname" "target")
    fn place_refinement(&mut self, node: &CommandNode) {
        let (Some(_placename), Some(refname), Some(target)) = (
            node.args.first().and_then(Arg::as_str),
            node.args.get(1).and_then(Arg::as_str),
            node.args.get(2).and_then(Arg::as_str),
        ) else {
            self.error(
                "bad-arguments",
                "define-refinement-placement expects placement, refinement and target names",
                node.span,
            );
            return;
        };
        let placement = if target == GLOBAL_PLACEMENT {
            RefinementPlacement::Global { explicit: true }
        } else if self.ir.window(target).is_some() {
            RefinementPlacement::Window { window: target.to_string() }
        } else {
            self.error(
                "undefined-reference",
                format!("refinement window `{target}` referenced before definition"),
                node.span,
            );
            return;
        };
        let Some(spec) = self.ir.refinements.iter_mut().find(|r| r.name == refname) else {
            self.error(
                "undefined-reference",
                format!("refinement `{refname}` referenced before definition"),
                node.span,
            );
            return;
        };
        if spec.placement != (RefinementPlacement::Global { explicit: false }) {
            self.error(
                "duplicate-refinement-placement",
                format!("refinement `{refname}` already placed"),
                node.span,
            );
            return;
        }
        spec.placement = placement;
    }

    // (sde:build-mesh "basename")
    fn build_mesh(&mut self, node: &CommandNode) {
        if self.ir.exports.build_mesh {
            self.error("duplicate-build-mesh", "build-mesh appears twice", node.span);
            return;
        }
        let basename = node.args.first().and_then(Arg::as_str).map(str::to_string);
        self.ir.exports.build_mesh = true;
        self.ir.exports.mesh_basename = basename;
    }

    // (sdeio:save-tdr-bnd "x.tdr" "x.bnd")
    fn save_tdr_bnd(&mut self, node: &CommandNode) {
        let (Some(tdr), Some(bnd)) = (
            node.args.first().and_then(Arg::as_str),
            node.args.get(1).and_then(Arg::as_str),
        ) else {
            self.error(
                "bad-arguments",
                "save-tdr-bnd expects a .tdr and a .bnd filename",
                node.span,
            );
            return;
        };
        if self.ir.exports.save_tdr || self.ir.exports.save_bnd {
            self.error("duplicate-export", "save-tdr-bnd appears twice", node.span);
            return;
        }
        self.ir.exports.save_tdr = true;
        self.ir.exports.save_bnd = true;
        self.ir.exports.tdr_file = Some(tdr.to_string());
        self.ir.exports.bnd_file = Some(bnd.to_string());
    }

    fn register_profile(
        &mut self,
        name: &str,
        species: &str,
        profile: DopingProfile,
        span: Span,
    ) {
        if self.profiles.iter().any(|(n, _, _)| n == name) {
            self.error(
                "duplicate-profile",
                format!("doping profile `{name}` already defined"),
                span,
            );
            return;
        }
        self.profiles.push((name.to_string(), species.to_string(), profile));
    }

    fn placement_target_defined(&self, target: &str) -> bool {
        self.ir.region(target).is_some() || self.ir.window(target).is_some()
    }

    fn positive(&mut self, value: &Decimal, what: &str, span: Span) -> bool {
        if value.is_zero() || value.is_negative() {
            self.error("nonpositive-value", format!("{what} must be positive"), span);
            false
        } else {
            true
        }
    }
}

fn as_position(arg: &Arg) -> Option<Triple> {
    match arg {
        Arg::Position(p) => Some(Triple::from_array(p.clone())),
        _ => None,
    }
}

/// Componentwise min/max of two corner points.
fn corner_box(a: Triple, b: Triple) -> (Triple, Triple) {
    let min = Triple::new(
        a.x.clone().min(b.x.clone()),
        a.y.clone().min(b.y.clone()),
        a.z.clone().min(b.z.clone()),
    );
    let max = Triple::new(a.x.max(b.x), a.y.max(b.y), a.z.max(b.z));
    (min, max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_text;

    fn extract(body: &str) -> Extraction {
        let parsed = parse_text(body).expect("fixture parses");
        extract_ir(&parsed.nodes).expect("fixture extracts")
    }

    fn extract_err(body: &str) -> Vec<ParseDiagnostic> {
        let parsed = parse_text(body).expect("fixture parses");
        extract_ir(&parsed.nodes).expect_err("expected extraction errors")
    }

    const EXAMPLE_DECK: &str = r#"
(sdegeo:set-default-boolean "ABA")
(sdegeo:create-rectangle (position 0 0 0) (position 1 1 0) "Silicon" "region_1")
(sdedr:define-constant-profile "doping_1" "boron" 9.8e+12)
(sdedr:define-constant-profile-placement "doping_1_place" "doping_1" "region_1")
(sdedr:define-refinement-size "global" 10 10 0.0001 1 1 0.0001)
(sdegeo:define-contact-set "anode")
(sdegeo:set-contact "anode" (position 0 0.5 0))
(sde:build-mesh "n@node@")
(sdeio:save-tdr-bnd "n@node@.tdr" "n@node@.bnd")
"#;

    #[test]
    fn example_deck_extracts_expected_ir() {
        let ex = extract(EXAMPLE_DECK);
        let ir = ex.ir;
        assert_eq!(ir.dimension, Dimension::TwoD);
        assert_eq!(ir.up_direction, Axis::PlusY);
        assert_eq!(ir.regions.len(), 1);
        let r = &ir.regions[0];
        assert_eq!(r.material, "Silicon");
        assert_eq!(r.min.display_coords(), "(0, 0, 0)");
        assert_eq!(r.max.display_coords(), "(1, 1, 0)");
        assert_eq!(ir.contacts.len(), 1);
        match &ir.contacts[0].kind {
            ContactKind::Point { position } => {
                assert_eq!(position.display_coords(), "(0, 0.5, 0)")
            }
            other => panic!("expected point contact, got {other:?}"),
        }
        assert_eq!(ir.dopings.len(), 1);
        assert_eq!(ir.dopings[0].species, "boron");
        match &ir.dopings[0].profile {
            DopingProfile::Constant { concentration } => {
                assert_eq!(concentration.canonical(), "9.8e+12")
            }
            other => panic!("expected constant profile, got {other:?}"),
        }
        assert_eq!(ir.refinements.len(), 1);
        assert_eq!(ir.refinements[0].max_sizes.display_coords(), "(10, 10, 0.0001)");
        assert_eq!(ir.refinements[0].min_sizes.display_coords(), "(1, 1, 0.0001)");
        assert!(ir.exports.build_mesh);
        assert!(ir.exports.save_tdr && ir.exports.save_bnd);
        assert!(ir.unrecognized.is_empty());
        assert!(ex.warnings.is_empty());
    }

    #[test]
    fn empty_command_list_extracts_empty_ir() {
        let ex = extract("");
        assert_eq!(ex.ir, DeckIR::empty());
    }

    #[test]
    fn deck_numbers_are_contained_in_ir_numbers() {
        // Oracle: collect numeric tokens from the deck text, then check
        // multiset containment against the IR's numeric leaves.
        use crate::parser::lexer::{tokenize, TokenKind};
        let mut deck_numbers: Vec<String> = tokenize(EXAMPLE_DECK)
            .unwrap()
            .into_iter()
            .filter_map(|t| match t.kind {
                TokenKind::Number(n) => Some(n.canonical()),
                _ => None,
            })
            .collect();
        let mut ir_numbers: Vec<String> = extract(EXAMPLE_DECK)
            .ir
            .numeric_leaves()
            .into_iter()
            .map(|n| n.canonical())
            .collect();
        deck_numbers.sort();
        ir_numbers.sort();
        for n in &deck_numbers {
            let in_deck = deck_numbers.iter().filter(|m| *m == n).count();
            let in_ir = ir_numbers.iter().filter(|m| *m == n).count();
            assert!(in_ir >= in_deck, "number {n} appears {in_deck}x in deck, {in_ir}x in IR");
        }
    }

    #[test]
    fn reference_before_definition_is_an_error() {
        let errs = extract_err(
            r#"(sdedr:define-constant-profile "p" "boron" 1e18)
               (sdedr:define-constant-profile-placement "pp" "p" "nowhere")"#,
        );
        assert!(errs.iter().any(|e| e.code == "undefined-reference"));
    }

    #[test]
    fn conflicting_boolean_mode_is_an_error() {
        let errs = extract_err(
            r#"(sdegeo:set-default-boolean "ABA")
               (sdegeo:set-default-boolean "BAB")"#,
        );
        assert_eq!(errs[0].code, "conflicting-boolean-mode");
    }

    #[test]
    fn cuboid_makes_deck_3d_with_plus_z_up() {
        let ex = extract(
            r#"(sdegeo:create-cuboid (position 0 0 0) (position 1 1 1) "Silicon" "bulk")"#,
        );
        assert_eq!(ex.ir.dimension, Dimension::ThreeD);
        assert_eq!(ex.ir.up_direction, Axis::PlusZ);
    }

    #[test]
    fn corners_normalize_to_min_max() {
        let ex = extract(
            r#"(sdegeo:create-rectangle (position 1 0 0) (position 0 1 0) "Silicon" "r")"#,
        );
        let r = &ex.ir.regions[0];
        assert_eq!(r.min.display_coords(), "(0, 0, 0)");
        assert_eq!(r.max.display_coords(), "(1, 1, 0)");
    }

    #[test]
    fn contact_outside_every_region_is_an_error() {
        let errs = extract_err(
            r#"(sdegeo:create-rectangle (position 0 0 0) (position 1 1 0) "Silicon" "r")
               (sdegeo:define-contact-set "c")
               (sdegeo:set-contact "c" (position 5 5 0))"#,
        );
        assert!(errs.iter().any(|e| e.code == "contact-outside-regions"));
    }

    #[test]
    fn unknown_heads_are_recorded_not_dropped() {
        let ex = extract("(sde:clear)");
        assert_eq!(ex.ir.unrecognized, vec!["sde:clear".to_string()]);
    }

    #[test]
    fn duplicate_region_name_is_an_error() {
        let errs = extract_err(
            r#"(sdegeo:create-rectangle (position 0 0 0) (position 1 1 0) "Silicon" "r")
               (sdegeo:create-rectangle (position 0 0 0) (position 2 2 0) "SiO2" "r")"#,
        );
        assert_eq!(errs[0].code, "duplicate-region");
    }

    #[test]
    fn nonpositive_concentration_is_an_error() {
        let errs = extract_err(
            r#"(sdegeo:create-rectangle (position 0 0 0) (position 1 1 0) "Silicon" "r")
               (sdedr:define-constant-profile "p" "boron" 0)"#,
        );
        assert!(errs.iter().any(|e| e.code == "nonpositive-value"));
    }
}
