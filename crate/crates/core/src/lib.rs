pub mod colorers;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod io;
pub mod layering;
pub mod oracle;
pub mod patterns;

pub use error::{Error, Result};
pub use graph::{Coloring, Graph, Layering, Vertex};
