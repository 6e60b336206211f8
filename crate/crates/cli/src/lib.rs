//! Command-line front end for `cosmetic-core`.

pub mod app;
pub mod knotfile;
pub mod linkfile;
