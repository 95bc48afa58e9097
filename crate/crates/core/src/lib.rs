//! Crystals of extremal weight modules for rank-2 hyperbolic Kac-Moody algebras.

mod memo;

pub mod algebra;
pub mod crystal;
pub mod embedding;
pub mod lspath;
pub mod multiplicity;
pub mod polyhedral;

pub use algebra::{
    classify_weight, CartanData, CartanError, Index, IntegralWeight, OrbitIndex, RootCoords,
    ShapeCase, ShapeWeight, WeightRejection,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/shapes.md")]
    struct Shapes;
    #[doc = include_str!("../../../book/src/paths.md")]
    struct Paths;
    #[doc = include_str!("../../../book/src/polyhedral.md")]
    struct Polyhedral;
    #[doc = include_str!("../../../book/src/embedding.md")]
    struct EmbeddingChapter;
    #[doc = include_str!("../../../book/src/multiplicities.md")]
    struct Multiplicities;
}
