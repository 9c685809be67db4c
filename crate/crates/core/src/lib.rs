//! Implication zroupoids: terms and identities, finite models, exhaustive
//! model search, and the classification of identities of associative type.

pub mod algebra;
pub mod assoc;
pub mod atlas;
pub mod parse;
pub mod search;
pub mod term;

/// Version string embedded in machine reports.
pub const VERSION: &str = concat!("zlab ", env!("CARGO_PKG_VERSION"));

// The guide's code blocks run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/terms.md")]
    mod terms {}
    #[doc = include_str!("../../../book/src/associative.md")]
    mod associative {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/atlas.md")]
    mod atlas {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
