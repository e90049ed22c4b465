//! Curves and lines named on the command line: a shipped fixture (`c48`,
//! `bitangents28`, ...) or a path to a file in the input grammar.

use std::path::Path;

use quartics::arith::{ExtensionField, Field, PrimeField, Rationals};
use quartics::curvelab::jacobian::{at_primes, ModularRun};
use quartics::curvelab::{run_descended, CurveError, CurveTask, PlaneCurve, ProjectiveLine, Route};
use quartics::fixtures;
use quartics::input::{parse_document, Block, FieldSpec, TextField};

/// Text of a fixture, looked up with or without its extension, or of a
/// file.
pub fn read_source(name: &str) -> Result<String, String> {
    let stem = |file: &str| file.split('.').next().unwrap_or(file).to_string();
    if let Some((_, text)) = fixtures::ALL.iter().find(|(file, _)| *file == name || stem(file) == name) {
        return Ok(text.to_string());
    }
    if Path::new(name).exists() {
        return std::fs::read_to_string(name).map_err(|e| format!("{name}: {e}"));
    }
    let known: Vec<String> = fixtures::ALL.iter().map(|(f, _)| stem(f)).collect();
    Err(format!("{name}: no such file or fixture (fixtures: {})", known.join(", ")))
}

fn first_block(name: &str) -> Result<Block, String> {
    let blocks = parse_document(&read_source(name)?).map_err(|e| format!("{name}: {e}"))?;
    blocks.into_iter().next().ok_or_else(|| format!("{name}: empty input"))
}

/// A curve over one of the supported coefficient fields.
#[derive(Clone, Debug)]
pub enum Curve {
    Rational(PlaneCurve<Rationals>),
    Prime(PlaneCurve<PrimeField>),
    Extension(PlaneCurve<ExtensionField<Rationals>>),
}

fn curve_in<F: TextField>(name: &str, block: &Block, field: &F) -> Result<PlaneCurve<F>, String> {
    let mut polys = block.polys(field).map_err(|e| format!("{name}: {e}"))?;
    if polys.is_empty() {
        return Err(format!("{name}: no polynomial given"));
    }
    PlaneCurve::new(polys.remove(0)).map_err(|e| format!("{name}: {e}"))
}

/// The first polynomial of the first block, as a plane curve.
pub fn load_curve(name: &str) -> Result<Curve, String> {
    let block = first_block(name)?;
    Ok(match block.field().map_err(|e| format!("{name}: {e}"))? {
        FieldSpec::Rationals => Curve::Rational(curve_in(name, &block, &Rationals)?),
        FieldSpec::Prime(k) => Curve::Prime(curve_in(name, &block, &k)?),
        FieldSpec::Extension(k) => Curve::Extension(curve_in(name, &block, &k)?),
    })
}

#[derive(Clone, Debug)]
pub enum Lines {
    Rational(Vec<ProjectiveLine<Rationals>>),
    Prime(PrimeField, Vec<ProjectiveLine<PrimeField>>),
    Extension(ExtensionField<Rationals>, Vec<ProjectiveLine<ExtensionField<Rationals>>>),
}

impl Lines {
    pub fn len(&self) -> usize {
        match self {
            Lines::Rational(l) => l.len(),
            Lines::Prime(_, l) => l.len(),
            Lines::Extension(_, l) => l.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The lines at the given zero-based positions.
    pub fn select(&self, indices: &[usize]) -> Result<Lines, String> {
        fn pick<T: Clone>(all: &[T], indices: &[usize]) -> Result<Vec<T>, String> {
            indices.iter().map(|&i| all.get(i).cloned().ok_or_else(|| format!("no line number {}", i + 1))).collect()
        }
        Ok(match self {
            Lines::Rational(l) => Lines::Rational(pick(l, indices)?),
            Lines::Prime(k, l) => Lines::Prime(*k, pick(l, indices)?),
            Lines::Extension(k, l) => Lines::Extension(k.clone(), pick(l, indices)?),
        })
    }
}

pub fn load_lines(name: &str) -> Result<Lines, String> {
    let block = first_block(name)?;
    let err = |e: quartics::input::InputError| format!("{name}: {e}");
    Ok(match block.field().map_err(err)? {
        FieldSpec::Rationals => Lines::Rational(block.lines(&Rationals).map_err(err)?),
        FieldSpec::Prime(k) => {
            let lines = block.lines(&k).map_err(err)?;
            Lines::Prime(k, lines)
        }
        FieldSpec::Extension(k) => {
            let lines = block.lines(&k).map_err(err)?;
            Lines::Extension(k, lines)
        }
    })
}

/// A curve and lines over one common field.
pub enum Paired {
    Rational(PlaneCurve<Rationals>, Vec<ProjectiveLine<Rationals>>),
    Prime(PlaneCurve<PrimeField>, Vec<ProjectiveLine<PrimeField>>),
    Extension(PlaneCurve<ExtensionField<Rationals>>, Vec<ProjectiveLine<ExtensionField<Rationals>>>),
}

/// Brings a curve and lines to a common field; a rational curve is lifted
/// to the field of the lines.
pub fn pair(curve: &Curve, lines: &Lines) -> Result<Paired, String> {
    match (curve, lines) {
        (Curve::Rational(c), Lines::Rational(l)) => Ok(Paired::Rational(c.clone(), l.clone())),
        (Curve::Prime(c), Lines::Prime(k, l)) if c.field() == k => Ok(Paired::Prime(c.clone(), l.clone())),
        (Curve::Extension(c), Lines::Extension(k, l)) if c.field() == k => Ok(Paired::Extension(c.clone(), l.clone())),
        (Curve::Rational(c), Lines::Extension(k, l)) => {
            let f = c.polynomial().map_coefficients(k, |a| Ok::<_, String>(k.from_base(a.clone())))?;
            Ok(Paired::Extension(PlaneCurve::new(f).map_err(|e| e.to_string())?, l.clone()))
        }
        _ => Err("the curve and the lines are over different fields".into()),
    }
}

/// Route of a computation over `Q` or `F_p`.
fn route_of<F: Field>(c: &PlaneCurve<F>) -> Route {
    Route { field: c.field().descriptor().to_string(), degree: 1 }
}

impl Curve {
    pub fn degree(&self) -> u32 {
        match self {
            Curve::Rational(c) => c.degree(),
            Curve::Prime(c) => c.degree(),
            Curve::Extension(c) => c.degree(),
        }
    }

    /// Runs `task` on the curve as given.
    pub fn visit<T: CurveTask>(&self, task: &T) -> Result<T::Output, CurveError> {
        match self {
            Curve::Rational(c) => task.run(c),
            Curve::Prime(c) => task.run(c),
            Curve::Extension(c) => task.run(c),
        }
    }

    /// Runs `task` exactly, over the smallest field found by descent for
    /// curves over an extension.
    pub fn visit_descended<T: CurveTask>(&self, task: &T) -> Result<(T::Output, Route), CurveError> {
        match self {
            Curve::Rational(c) => Ok((task.run(c)?, route_of(c))),
            Curve::Prime(c) => Ok((task.run(c)?, route_of(c))),
            Curve::Extension(c) => run_descended(c, task),
        }
    }

    /// Runs `compute` at two primes of `bits` bits; curves already over a
    /// prime field are computed once.
    pub fn at_two_primes<T: PartialEq + Clone>(
        &self,
        bits: u32,
        seed: u64,
        compute: impl FnMut(&PlaneCurve<PrimeField>) -> Result<T, CurveError>,
    ) -> Result<ModularRun<T>, CurveError> {
        let mut compute = compute;
        match self {
            Curve::Rational(c) => at_primes(c, bits, seed, 2, compute),
            Curve::Extension(c) => at_primes(c, bits, seed, 2, compute),
            Curve::Prime(c) => {
                let r = compute(c)?;
                Ok(ModularRun { primes: vec![c.field().characteristic()], results: vec![r], agreed: true })
            }
        }
    }
}
