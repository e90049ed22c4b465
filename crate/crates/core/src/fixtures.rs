//! The curves, lines and ideals shipped in `fixtures/`, embedded at compile
//! time.

use crate::arith::{ExtensionField, Rationals};
use crate::curvelab::{PlaneCurve, ProjectiveLine};
use crate::input::{parse_document, Block, FieldSpec};
use crate::poly::MultiPoly;

pub const C48: &str = include_str!("../../../fixtures/c48.curve");
pub const C96: &str = include_str!("../../../fixtures/c96.curve");
pub const C168: &str = include_str!("../../../fixtures/c168.curve");
pub const C24A: &str = include_str!("../../../fixtures/c24a.curve");
pub const C16DELTA: &str = include_str!("../../../fixtures/c16delta.curve");
pub const C9: &str = include_str!("../../../fixtures/c9.curve");
pub const DUAL12: &str = include_str!("../../../fixtures/dual12.curve");
pub const SI: &str = include_str!("../../../fixtures/si.ideal");
pub const G8_FAMILIES: &str = include_str!("../../../fixtures/g8_families.ideal");
pub const BITANGENTS28: &str = include_str!("../../../fixtures/bitangents28.lines");

/// Every fixture by file name.
pub const ALL: [(&str, &str); 10] = [
    ("c48.curve", C48),
    ("c96.curve", C96),
    ("c168.curve", C168),
    ("c24a.curve", C24A),
    ("c16delta.curve", C16DELTA),
    ("c9.curve", C9),
    ("dual12.curve", DUAL12),
    ("si.ideal", SI),
    ("g8_families.ideal", G8_FAMILIES),
    ("bitangents28.lines", BITANGENTS28),
];

fn blocks(text: &str) -> Vec<Block> {
    parse_document(text).expect("shipped fixture parses")
}

fn rational_polys(text: &str) -> Vec<MultiPoly<Rationals>> {
    blocks(text)[0].polys(&Rationals).expect("shipped fixture parses")
}

fn rational_curve(text: &str) -> PlaneCurve<Rationals> {
    PlaneCurve::new(rational_polys(text).remove(0)).expect("shipped curve is valid")
}

/// `x^4 + y^4 + x*z^3`.
pub fn c48() -> PlaneCurve<Rationals> {
    rational_curve(C48)
}

/// The Fermat quartic.
pub fn c96() -> PlaneCurve<Rationals> {
    rational_curve(C96)
}

/// The Klein quartic.
pub fn c168() -> PlaneCurve<Rationals> {
    rational_curve(C168)
}

pub fn c9() -> PlaneCurve<Rationals> {
    rational_curve(C9)
}

/// The degree-12 curve dual to [`c48`].
pub fn dual12() -> PlaneCurve<Rationals> {
    rational_curve(DUAL12)
}

/// Generators of the ideal of coefficient equations, in `A, ..., F`.
pub fn si() -> Vec<MultiPoly<Rationals>> {
    rational_polys(SI)
}

/// The four solution families as named generator lists.
pub fn g8_families() -> Vec<(String, Vec<MultiPoly<Rationals>>)> {
    blocks(G8_FAMILIES)
        .into_iter()
        .map(|b| (b.name().unwrap_or("").to_string(), b.polys(&Rationals).expect("shipped fixture parses")))
        .collect()
}

/// The degree-16 coefficient field and the 28 lines over it.
pub fn bitangents28() -> (ExtensionField<Rationals>, Vec<ProjectiveLine<ExtensionField<Rationals>>>) {
    let b = &blocks(BITANGENTS28)[0];
    let FieldSpec::Extension(k) = b.field().expect("shipped header parses") else {
        panic!("bitangent fixture is declared over an extension field");
    };
    let lines = b.lines(&k).expect("shipped lines parse");
    (k, lines)
}

/// [`c48`] with coefficients in the field of [`bitangents28`].
pub fn c48_over(k: &ExtensionField<Rationals>) -> PlaneCurve<ExtensionField<Rationals>> {
    let f = c48().polynomial().map_coefficients(k, |c| Ok::<_, ()>(k.from_base(c.clone()))).expect("infallible");
    PlaneCurve::new(f).expect("valid")
}
