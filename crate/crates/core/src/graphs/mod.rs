//! Target graphs, embeddings into planes, and the verifier.

mod embedding;
mod graph;

pub use embedding::{verify_embedding, Embedding, PlaneModel, PlaneRef, VerifyReport};
pub use graph::{build_graph, Edge, Graph, GraphSpec, Vertex};
