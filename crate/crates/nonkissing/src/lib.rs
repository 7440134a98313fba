//! Non-kissing complexes of locally gentle bound quivers.
//!
//! Start with [`quiver::BoundQuiver`], complete it with [`blossom::blossom`], then enumerate
//! walks, facets, vectors and the associated surface.

pub mod blossom;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod facet;
pub mod geometry;
pub mod kiss;
pub mod linalg;
pub mod order;
pub mod quiver;
pub mod surface;
pub mod vectors;
pub mod walk;

pub use blossom::{blossom, prune, BlossomQuiver};
pub use error::{ComplexError, GeometryError, QuiverError, SurfaceError, WalkError};
pub use quiver::{BoundQuiver, RawQuiver};
pub use walk::{deep_walk, peak_walk, Letter, Walk, WalkKind};
