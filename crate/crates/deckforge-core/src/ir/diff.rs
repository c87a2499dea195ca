//! Structured IR diffing.
//!
//! A changed path is *numeric* only when it lands on a physical decimal
//! leaf (coordinates, sizes, concentrations). Order indices, names, flags
//! and enum tags are structural even though they look number-ish.

use serde::{Deserialize, Serialize};

use crate::decimal::Decimal;

use super::types::{ContactKind, DeckIR, DopingProfile, RefinementPlacement, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiffClass {
    Identical,
    NumericOnly,
    Structural,
}

/// One changed field path, with both sides rendered as text (`∅` marks an
/// absent side when list lengths differ).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChangedPath {
    pub path: String,
    pub left: String,
    pub right: String,
    pub numeric: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrDiff {
    pub changed_paths: Vec<ChangedPath>,
    pub classification: DiffClass,
}

impl IrDiff {
    pub fn is_identical(&self) -> bool {
        self.classification == DiffClass::Identical
    }
}

struct Walker {
    changed: Vec<ChangedPath>,
}

impl Walker {
    fn leaf<T: PartialEq + std::fmt::Debug>(&mut self, path: String, a: &T, b: &T) {
        if a != b {
            self.changed.push(ChangedPath {
                path,
                left: format!("{a:?}"),
                right: format!("{b:?}"),
                numeric: false,
            });
        }
    }

    fn number(&mut self, path: String, a: &Decimal, b: &Decimal) {
        if a != b {
            self.changed.push(ChangedPath {
                path,
                left: a.canonical(),
                right: b.canonical(),
                numeric: true,
            });
        }
    }

    fn triple(&mut self, path: &str, a: &Triple, b: &Triple) {
        self.number(format!("{path}.x"), &a.x, &b.x);
        self.number(format!("{path}.y"), &a.y, &b.y);
        self.number(format!("{path}.z"), &a.z, &b.z);
    }

    /// Compares lists index-by-index; surplus elements on either side become
    /// one structural path each.
    fn list<T, F>(&mut self, path: &str, a: &[T], b: &[T], mut item: F)
    where
        F: FnMut(&mut Self, String, &T, &T),
    {
        let common = a.len().min(b.len());
        for i in 0..common {
            item(self, format!("{path}[{i}]"), &a[i], &b[i]);
        }
        for i in common..a.len().max(b.len()) {
            let (left, right) = if i < a.len() {
                ("present".to_string(), "∅".to_string())
            } else {
                ("∅".to_string(), "present".to_string())
            };
            self.changed.push(ChangedPath {
                path: format!("{path}[{i}]"),
                left,
                right,
                numeric: false,
            });
        }
    }
}

/// Diffs two IRs. Symmetric up to swapping left/right in every changed path.
pub fn diff_ir(a: &DeckIR, b: &DeckIR) -> IrDiff {
    let mut w = Walker { changed: Vec::new() };

    w.leaf("dimension".into(), &a.dimension, &b.dimension);
    w.leaf("up_direction".into(), &a.up_direction, &b.up_direction);
    w.leaf("boolean_mode".into(), &a.boolean_mode, &b.boolean_mode);
    w.list("materials", &a.materials, &b.materials, |w, p, x, y| w.leaf(p, x, y));

    w.list("regions", &a.regions, &b.regions, |w, p, x, y| {
        w.leaf(format!("{p}.name"), &x.name, &y.name);
        w.leaf(format!("{p}.material"), &x.material, &y.material);
        w.leaf(format!("{p}.shape"), &x.shape, &y.shape);
        w.triple(&format!("{p}.min"), &x.min, &y.min);
        w.triple(&format!("{p}.max"), &x.max, &y.max);
        w.leaf(format!("{p}.boolean_op_index"), &x.boolean_op_index, &y.boolean_op_index);
    });

    w.list("windows", &a.windows, &b.windows, |w, p, x, y| {
        w.leaf(format!("{p}.name"), &x.name, &y.name);
        w.leaf(format!("{p}.kind"), &x.kind, &y.kind);
        w.triple(&format!("{p}.min"), &x.min, &y.min);
        w.triple(&format!("{p}.max"), &x.max, &y.max);
    });

    w.list("contacts", &a.contacts, &b.contacts, |w, p, x, y| {
        w.leaf(format!("{p}.name"), &x.name, &y.name);
        match (&x.kind, &y.kind) {
            (
                ContactKind::Point { position: px },
                ContactKind::Point { position: py },
            ) => w.triple(&format!("{p}.position"), px, py),
            (kx, ky) => w.leaf(format!("{p}.kind"), &kind_tag(kx), &kind_tag(ky)),
        }
        w.leaf(format!("{p}.attach_order_index"), &x.attach_order_index, &y.attach_order_index);
    });

    w.list("dopings", &a.dopings, &b.dopings, |w, p, x, y| {
        w.leaf(format!("{p}.species"), &x.species, &y.species);
        w.leaf(format!("{p}.placement"), &x.placement, &y.placement);
        match (&x.profile, &y.profile) {
            (
                DopingProfile::Constant { concentration: ca },
                DopingProfile::Constant { concentration: cb },
            ) => w.number(format!("{p}.concentration"), ca, cb),
            (
                DopingProfile::Gaussian { peak: pa, char_length: la },
                DopingProfile::Gaussian { peak: pb, char_length: lb },
            ) => {
                w.number(format!("{p}.peak"), pa, pb);
                w.number(format!("{p}.char_length"), la, lb);
            }
            (pa, pb) => w.leaf(format!("{p}.profile"), &profile_tag(pa), &profile_tag(pb)),
        }
    });

    w.list("refinements", &a.refinements, &b.refinements, |w, p, x, y| {
        w.leaf(format!("{p}.name"), &x.name, &y.name);
        w.triple(&format!("{p}.max_sizes"), &x.max_sizes, &y.max_sizes);
        w.triple(&format!("{p}.min_sizes"), &x.min_sizes, &y.min_sizes);
        w.leaf(format!("{p}.placement"), &placement_tag(&x.placement), &placement_tag(&y.placement));
        w.leaf(format!("{p}.def_order_index"), &x.def_order_index, &y.def_order_index);
    });

    let ea = &a.exports;
    let eb = &b.exports;
    w.leaf("exports.build_mesh".into(), &ea.build_mesh, &eb.build_mesh);
    w.leaf("exports.save_tdr".into(), &ea.save_tdr, &eb.save_tdr);
    w.leaf("exports.save_bnd".into(), &ea.save_bnd, &eb.save_bnd);
    w.leaf("exports.mesh_basename".into(), &ea.mesh_basename, &eb.mesh_basename);
    w.leaf("exports.tdr_file".into(), &ea.tdr_file, &eb.tdr_file);
    w.leaf("exports.bnd_file".into(), &ea.bnd_file, &eb.bnd_file);
    w.list("unrecognized", &a.unrecognized, &b.unrecognized, |w, p, x, y| w.leaf(p, x, y));

    let classification = if w.changed.is_empty() {
        DiffClass::Identical
    } else if w.changed.iter().all(|c| c.numeric) {
        DiffClass::NumericOnly
    } else {
        DiffClass::Structural
    };
    IrDiff { changed_paths: w.changed, classification }
}

fn kind_tag(k: &ContactKind) -> &'static str {
    match k {
        ContactKind::Edge => "edge",
        ContactKind::Point { .. } => "point",
    }
}

fn profile_tag(p: &DopingProfile) -> &'static str {
    match p {
        DopingProfile::Constant { .. } => "constant",
        DopingProfile::Gaussian { .. } => "gaussian",
    }
}

fn placement_tag(p: &RefinementPlacement) -> String {
    match p {
        RefinementPlacement::Global { explicit } => format!("global(explicit={explicit})"),
        RefinementPlacement::Window { window } => format!("window({window})"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::extract::extract_ir;
    use crate::parser::parse_text;

    fn ir_of(body: &str) -> DeckIR {
        let parsed = parse_text(body).unwrap();
        extract_ir(&parsed.nodes).unwrap().ir
    }

    const BASE: &str = r#"
(sdegeo:create-rectangle (position 0 0 0) (position 1 1 0) "Silicon" "r1")
(sdedr:define-refinement-size "global" 10 10 0.0001 1 1 0.0001)
"#;

    #[test]
    fn identical_irs_diff_identical() {
        let a = ir_of(BASE);
        let diff = diff_ir(&a, &a);
        assert!(diff.is_identical());
        assert!(diff.changed_paths.is_empty());
    }

    #[test]
    fn refinement_value_change_is_numeric_only() {
        let a = ir_of(BASE);
        let b = ir_of(&BASE.replace("1 1 0.0001", "1 1 0.0002"));
        let diff = diff_ir(&a, &b);
        assert_eq!(diff.classification, DiffClass::NumericOnly);
        assert_eq!(diff.changed_paths.len(), 1);
        let change = &diff.changed_paths[0];
        assert_eq!(change.path, "refinements[0].min_sizes.z");
        assert_eq!(change.left, "0.0001");
        assert_eq!(change.right, "0.0002");
    }

    #[test]
    fn boolean_index_swap_is_structural_with_two_paths() {
        let a = ir_of(
            r#"(sdegeo:create-rectangle (position 0 0 0) (position 1 1 0) "Silicon" "r1")
               (sdegeo:create-rectangle (position 0 1 0) (position 1 2 0) "SiO2" "r2")"#,
        );
        // Oracle: enumerate every field path by hand — swapping the two
        // boolean_op_index values must change exactly those two paths.
        let mut b = a.clone();
        b.regions[0].boolean_op_index = 1;
        b.regions[1].boolean_op_index = 0;
        let diff = diff_ir(&a, &b);
        assert_eq!(diff.classification, DiffClass::Structural);
        assert_eq!(diff.changed_paths.len(), 2);
        assert_eq!(diff.changed_paths[0].path, "regions[0].boolean_op_index");
        assert_eq!(diff.changed_paths[1].path, "regions[1].boolean_op_index");
        assert!(diff.changed_paths.iter().all(|c| !c.numeric));
    }

    #[test]
    fn diff_is_symmetric_up_to_swap() {
        let a = ir_of(BASE);
        let b = ir_of(&BASE.replace("0.0001", "0.0002"));
        let ab = diff_ir(&a, &b);
        let ba = diff_ir(&b, &a);
        assert_eq!(ab.classification, ba.classification);
        assert_eq!(ab.changed_paths.len(), ba.changed_paths.len());
        for (x, y) in ab.changed_paths.iter().zip(&ba.changed_paths) {
            assert_eq!(x.path, y.path);
            assert_eq!(x.left, y.right);
            assert_eq!(x.right, y.left);
        }
    }

    #[test]
    fn missing_command_shows_as_structural_absence() {
        let a = ir_of(BASE);
        let b = ir_of(
            r#"(sdegeo:create-rectangle (position 0 0 0) (position 1 1 0) "Silicon" "r1")"#,
        );
        let diff = diff_ir(&a, &b);
        assert_eq!(diff.classification, DiffClass::Structural);
        assert!(diff
            .changed_paths
            .iter()
            .any(|c| c.path == "refinements[0]" && c.right == "∅"));
    }
}
