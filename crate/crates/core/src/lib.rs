pub mod arith;
pub mod curvelab;
pub mod fixtures;
pub mod groebner;
pub mod input;
pub mod linalg;
pub mod poly;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/groebner.md")]
    mod groebner {}
    #[doc = include_str!("../../../book/src/linear-algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/freeness.md")]
    mod freeness {}
    #[doc = include_str!("../../../book/src/bitangents.md")]
    mod bitangents {}
    #[doc = include_str!("../../../book/src/arrangements.md")]
    mod arrangements {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
