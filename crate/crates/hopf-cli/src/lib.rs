//! File formats, the algebra catalog, verifier suites and the subcommand
//! implementations behind the `hopf` binary.

pub mod catalog;
pub mod commands;
pub mod descriptor;
pub mod suites;

pub use catalog::{catalog, lookup, resolve, CatalogEntry};
pub use suites::{Settings, Subject, Suite};

/// Builds the subject named by a catalog key or descriptor path.
pub fn load(spec: &str, settings: Settings) -> hopf_core::Result<Subject> {
    let (name, desc) = resolve(spec)?;
    Subject::new(name, desc.build()?, settings)
}
