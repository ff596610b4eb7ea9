//! Reference data: sporadic prime graphs and the result tables.

mod sporadic;
pub mod tables;

pub use sporadic::{content_checksum, lookup_sporadic, sporadic_graphs, SporadicGraph};
pub use tables::{default_instances, verify_row, verify_tables, CheckReport, TableRow};
