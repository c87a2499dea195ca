//! The supported-command registry.
//!
//! Heads outside this set still parse; they carry an `unknown-command`
//! warning and the syntax checker decides pass/fail depending on mode.

/// Geometry commands that create a region and take part in Boolean ordering.
pub const REGION_COMMANDS: &[&str] = &["sdegeo:create-rectangle", "sdegeo:create-cuboid"];

pub const SET_DEFAULT_BOOLEAN: &str = "sdegeo:set-default-boolean";
pub const DEFINE_CONTACT_SET: &str = "sdegeo:define-contact-set";
pub const SET_CONTACT: &str = "sdegeo:set-contact";
pub const DEFINE_CONSTANT_PROFILE: &str = "sdedr:define-constant-profile";
pub const DEFINE_CONSTANT_PROFILE_PLACEMENT: &str = "sdedr:define-constant-profile-placement";
pub const DEFINE_GAUSSIAN_PROFILE: &str = "sdedr:define-gaussian-profile";
pub const DEFINE_REFEVAL_WINDOW: &str = "sdedr:define-refeval-window";
pub const DEFINE_REFINEMENT_SIZE: &str = "sdedr:define-refinement-size";
pub const DEFINE_REFINEMENT_PLACEMENT: &str = "sdedr:define-refinement-placement";
pub const BUILD_MESH: &str = "sde:build-mesh";
pub const SAVE_TDR_BND: &str = "sdeio:save-tdr-bnd";

/// Every head the toolkit understands.
pub const SUPPORTED_COMMANDS: &[&str] = &[
    "sdegeo:create-rectangle",
    "sdegeo:create-cuboid",
    SET_DEFAULT_BOOLEAN,
    DEFINE_CONTACT_SET,
    SET_CONTACT,
    DEFINE_CONSTANT_PROFILE,
    DEFINE_CONSTANT_PROFILE_PLACEMENT,
    DEFINE_GAUSSIAN_PROFILE,
    DEFINE_REFEVAL_WINDOW,
    DEFINE_REFINEMENT_SIZE,
    DEFINE_REFINEMENT_PLACEMENT,
    BUILD_MESH,
    SAVE_TDR_BND,
];

pub fn is_supported(head: &str) -> bool {
    SUPPORTED_COMMANDS.contains(&head)
}

pub fn is_region_command(head: &str) -> bool {
    REGION_COMMANDS.contains(&head)
}
