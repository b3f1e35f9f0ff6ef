//! The book chapters from `book/src`, embedded as rustdoc pages so every
//! code sample in the guide compiles and runs under `cargo test --doc`.
//! The book and the doc-tests are literally the same text and cannot
//! drift apart.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/integer-normal-forms.md")]
pub mod integer_normal_forms {}

#[doc = include_str!("../../../book/src/lattices-and-intersection-numbers.md")]
pub mod lattices_and_intersection_numbers {}

#[doc = include_str!("../../../book/src/polarized-tori.md")]
pub mod polarized_tori {}

#[doc = include_str!("../../../book/src/surface-cohomology.md")]
pub mod surface_cohomology {}

#[doc = include_str!("../../../book/src/kummer-automorphisms.md")]
pub mod kummer_automorphisms {}

#[doc = include_str!("../../../book/src/orbit-counting.md")]
pub mod orbit_counting {}

#[doc = include_str!("../../../book/src/representation-dimensions.md")]
pub mod representation_dimensions {}
