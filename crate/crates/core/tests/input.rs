use quartics::arith::{PrimeField, Rationals};
use quartics::fixtures;
use quartics::input::{parse_document, Block, FieldSpec, InputError, TextField};

fn roundtrip_polys<F: TextField>(b: &Block, k: &F) {
    let polys = b.polys(k).unwrap();
    let printed: String = polys.iter().map(|p| format!("{p}\n")).collect();
    let mut again = Block { headers: b.headers.clone(), ..Block::default() };
    again.items = parse_document(&printed).unwrap().remove(0).items;
    assert_eq!(again.polys(k).unwrap(), polys);
}

fn roundtrip_lines<F: TextField>(b: &Block, k: &F) {
    let lines = b.lines(k).unwrap();
    let printed: String = lines
        .iter()
        .map(|l| l.coeffs().iter().map(|c| format!("({})", k.format_elem(c))).collect::<Vec<_>>().join(", ") + "\n")
        .collect();
    let mut again = Block { headers: b.headers.clone(), ..Block::default() };
    again.items = parse_document(&printed).unwrap().remove(0).items;
    assert_eq!(again.lines(k).unwrap(), lines);
}

#[test]
fn every_fixture_reparses_after_printing() {
    for (name, text) in fixtures::ALL {
        for b in parse_document(text).unwrap() {
            let is_lines = name.ends_with(".lines");
            match b.field().unwrap() {
                FieldSpec::Rationals if is_lines => roundtrip_lines(&b, &Rationals),
                FieldSpec::Rationals => roundtrip_polys(&b, &Rationals),
                FieldSpec::Prime(k) => roundtrip_polys(&b, &k),
                FieldSpec::Extension(k) if is_lines => roundtrip_lines(&b, &k),
                FieldSpec::Extension(k) => roundtrip_polys(&b, &k),
            }
        }
    }
}

#[test]
fn first_bitangent_row() {
    let text = "field: Q[r]/(r^16 + 6r^12 + 39r^8 - 18r^4 + 9)\n468, 16r^13+78r^9+546r^5-990r, 3r^12-639\n";
    let b = parse_document(text).unwrap().remove(0);
    let FieldSpec::Extension(k) = b.field().unwrap() else { panic!() };
    let (_, lines) = fixtures::bitangents28();
    assert_eq!(b.lines(&k).unwrap()[0], lines[0]);
}

#[test]
fn c48_from_text() {
    let b = parse_document("field: Q\nx^4 + y^4 + x*z^3\n").unwrap().remove(0);
    assert_eq!(b.polys(&Rationals).unwrap()[0], *fixtures::c48().polynomial());
}

#[test]
fn wrong_arity() {
    let b = parse_document("1, 0, 0, extra\n").unwrap().remove(0);
    assert_eq!(b.lines(&Rationals), Err(InputError::Arity { line: 1, found: 4 }));
}

#[test]
fn syntax_errors_carry_positions() {
    let b = parse_document("# comment\nx^4 + * y\n").unwrap().remove(0);
    match b.polys(&Rationals) {
        Err(InputError::Syntax { line: 2, column, .. }) => assert!(column >= 6),
        other => panic!("{other:?}"),
    }
    let b = parse_document("1, 2 +, 3\n").unwrap().remove(0);
    assert!(matches!(b.lines(&Rationals), Err(InputError::Syntax { line: 1, .. })));
}

#[test]
fn bad_field_headers() {
    for h in ["Q[r]/(2r^2 + 1)", "Q[r]/(5)", "Fp(8)", "R", "Q[r]/r^2+1"] {
        assert!(matches!(FieldSpec::parse(h), Err(InputError::Field(_))), "{h}");
    }
    assert_eq!(FieldSpec::parse("Fp(7)").unwrap(), FieldSpec::Prime(PrimeField::new(7).unwrap()));
}

#[test]
fn coefficients_outside_the_field() {
    let b = parse_document("field: Fp(7)\nx/7 + y\n").unwrap().remove(0);
    assert!(b.polys(&PrimeField::new(7).unwrap()).is_err());
    let b = parse_document("r*x + y\n").unwrap().remove(0);
    assert!(b.polys(&Rationals).is_err());
}

#[test]
fn headers_carry_across_blocks() {
    let docs = parse_document(fixtures::C24A).unwrap();
    assert_eq!(docs.len(), 2);
    assert_eq!(docs[1].name(), Some("symmetric"));
    assert_eq!(docs[1].vars().names(), ["x", "y", "z", "a"]);
}
