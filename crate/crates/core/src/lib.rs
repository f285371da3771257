pub mod constructors;
pub mod error;
pub mod extension;
pub mod format;
pub mod model;
pub mod ops;
pub mod oracle;
pub mod structure;
pub mod tripartite;
pub mod verify;
