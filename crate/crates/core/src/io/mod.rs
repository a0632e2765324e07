//! Mesh and report persistence.

mod mesh;
mod report;

pub use mesh::MeshPatch;
pub use report::{
    write_atomic, CongruenceRecord, ReportBody, ReportData, ReportDocument, ReportHeader, SCHEMA_VERSION,
};
