//! Runs the code blocks of the guide under `book/` as doc-tests.

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/lattices.md")]
pub mod lattices {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/hibi.md")]
pub mod hibi {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/gorenstein.md")]
pub mod gorenstein {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/schubert.md")]
pub mod schubert {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/sagbi.md")]
pub mod sagbi {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub mod readme {}
