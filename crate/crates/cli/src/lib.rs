//! Library side of the `linfty-cwl` command: the definition format, queries and the runner.

pub mod document;
pub mod query;
pub mod run;

use linfty_core::gallery::{self, GalleryError};

/// A gallery instance as a pretty-printed definition document.
pub fn export_gallery(name: &str) -> Result<String, GalleryError> {
    let instance = gallery::by_name(name)?;
    Ok(document::to_json(&document::export(&instance)))
}

/// Names accepted by [`export_gallery`].
pub fn gallery_names() -> Vec<String> {
    gallery::catalogue()
}
