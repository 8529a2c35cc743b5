//! Serializable result documents and their text rendering.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::gfan::{GroebnerCone, GroebnerFan};
use crate::nash::{NashResult, NobileReport};
use crate::polyhedral::{Cone, IntVector};
use crate::semigroup::SemigroupPresentation;
use crate::subalgebra::{ReducedBasis, SubalgebraOrder, SubalgebraPoly};

/// One term of a polynomial. Coefficients are `"p/q"`, or `"p"` for integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: String,
    pub exp: Vec<i64>,
}

pub type PolyDoc = Vec<TermDoc>;

pub fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Terms in decreasing order under `ord`.
pub fn poly_doc(f: &SubalgebraPoly, ord: &SubalgebraOrder) -> PolyDoc {
    f.sorted_terms(ord)
        .into_iter()
        .map(|(e, c)| TermDoc { coeff: format_rational(c), exp: e.clone() })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaysDoc {
    pub rays: Vec<IntVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeDoc {
    pub rays: Vec<IntVector>,
    pub inequalities: Vec<IntVector>,
}

impl From<&Cone> for ConeDoc {
    fn from(c: &Cone) -> Self {
        ConeDoc { rays: c.rays().to_vec(), inequalities: c.inequalities().to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupDoc {
    pub generators: Vec<IntVector>,
}

impl From<&SemigroupPresentation> for SemigroupDoc {
    fn from(p: &SemigroupPresentation) -> Self {
        SemigroupDoc { generators: p.generators().to_vec() }
    }
}

/// A maximal cone of a fan with its reduced basis and initial ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanConeDoc {
    pub rays: Vec<IntVector>,
    pub inequalities: Vec<IntVector>,
    pub witness: IntVector,
    pub reduced_basis: Vec<PolyDoc>,
    pub initial_ideal: Vec<PolyDoc>,
}

impl From<&GroebnerCone> for FanConeDoc {
    fn from(c: &GroebnerCone) -> Self {
        let ord = c.basis.order();
        FanConeDoc {
            rays: c.closure.rays().to_vec(),
            inequalities: c.closure.inequalities().to_vec(),
            witness: c.witness.clone(),
            reduced_basis: c.basis.elements().iter().map(|g| poly_doc(g, ord)).collect(),
            initial_ideal: c.initial_ideal.iter().map(|g| poly_doc(g, ord)).collect(),
        }
    }
}

fn fan_docs(fan: &GroebnerFan) -> Vec<FanConeDoc> {
    fan.maximal_cones.iter().map(FanConeDoc::from).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NashDoc {
    pub sigma: RaysDoc,
    pub semigroup: SemigroupDoc,
    pub n: u32,
    pub fan: Vec<FanConeDoc>,
    pub smooth: bool,
    pub nash_isomorphism: bool,
    pub best_effort: bool,
    /// Rows of the unimodular change of exponent coordinates.
    pub transform: Vec<IntVector>,
}

impl From<&NashResult> for NashDoc {
    fn from(r: &NashResult) -> Self {
        NashDoc {
            sigma: RaysDoc { rays: r.sigma.rays().to_vec() },
            semigroup: SemigroupDoc::from(r.presentation.as_ref()),
            n: r.n,
            fan: fan_docs(&r.fan),
            smooth: r.smooth,
            nash_isomorphism: r.nash_isomorphism,
            best_effort: r.fan.best_effort,
            transform: r.transform.rows().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanDoc {
    pub sigma: RaysDoc,
    pub semigroup: SemigroupDoc,
    pub fan: Vec<FanConeDoc>,
    pub trivial: bool,
    pub best_effort: bool,
}

impl FanDoc {
    pub fn new(presentation: &SemigroupPresentation, fan: &GroebnerFan) -> Self {
        FanDoc {
            sigma: RaysDoc { rays: fan.base.rays().to_vec() },
            semigroup: SemigroupDoc::from(presentation),
            fan: fan_docs(fan),
            trivial: crate::gfan::is_trivial(fan),
            best_effort: fan.best_effort,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbDoc {
    pub semigroup: SemigroupDoc,
    pub weight: IntVector,
    pub reduced_basis: Vec<PolyDoc>,
    pub initial_ideal: Vec<PolyDoc>,
    /// Closed Gröbner cone of the basis inside the weight cone.
    pub cone: ConeDoc,
}

impl GbDoc {
    pub fn new(
        presentation: &SemigroupPresentation,
        weight: &IntVector,
        basis: &ReducedBasis,
        initial_ideal: &[SubalgebraPoly],
        cone: &Cone,
    ) -> Self {
        let ord = basis.order();
        GbDoc {
            semigroup: SemigroupDoc::from(presentation),
            weight: weight.clone(),
            reduced_basis: basis.elements().iter().map(|g| poly_doc(g, ord)).collect(),
            initial_ideal: initial_ideal.iter().map(|g| poly_doc(g, ord)).collect(),
            cone: ConeDoc::from(cone),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NobileDoc {
    pub sigma: RaysDoc,
    pub n: u32,
    pub smooth: bool,
    pub nash_isomorphism: bool,
    pub consistent: bool,
    pub summary: String,
}

impl NobileDoc {
    pub fn new(sigma: &Cone, n: u32, report: &NobileReport) -> Self {
        NobileDoc {
            sigma: RaysDoc { rays: sigma.rays().to_vec() },
            n,
            smooth: report.smooth,
            nash_isomorphism: report.nash_isomorphism,
            consistent: report.consistent,
            summary: report.summary(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertDoc {
    pub cone: RaysDoc,
    pub dual: bool,
    pub hilbert_basis: Vec<IntVector>,
}

/// Any result the command line can emit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Document {
    Nash(NashDoc),
    Fan(FanDoc),
    Gb(GbDoc),
    Nobile(NobileDoc),
    Hilbert(HilbertDoc),
}

/// Pretty JSON with object keys in sorted order and a trailing newline.
pub fn emit_json(doc: &Document) -> Vec<u8> {
    // serde_json's default map is ordered by key
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
    out.push('\n');
    out.into_bytes()
}

fn rays_text(rays: &[IntVector]) -> String {
    rays.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn poly_text(p: &PolyDoc) -> String {
    let mut out = String::new();
    for (i, t) in p.iter().enumerate() {
        let (neg, abs) = match t.coeff.strip_prefix('-') {
            Some(a) => (true, a),
            None => (false, t.coeff.as_str()),
        };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = crate::subalgebra::format_monomial(&t.exp);
        match (mono.as_str(), abs) {
            ("1", _) => out.push_str(abs),
            (_, "1") => out.push_str(&mono),
            _ => {
                let _ = write!(out, "{abs}*{mono}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn fan_text(out: &mut String, fan: &[FanConeDoc]) {
    let _ = writeln!(out, "fan: {} maximal cone(s)", fan.len());
    for (i, c) in fan.iter().enumerate() {
        let _ = writeln!(out, "  cone {}: rays {}  witness {}", i + 1, rays_text(&c.rays), c.witness);
        for g in &c.reduced_basis {
            let _ = writeln!(out, "    {}", poly_text(g));
        }
    }
}

/// Human-readable rendering.
pub fn emit_text(doc: &Document) -> Vec<u8> {
    let mut out = String::new();
    match doc {
        Document::Nash(d) => {
            let _ = writeln!(out, "sigma: cone {}", rays_text(&d.sigma.rays));
            let _ = writeln!(out, "semigroup: {}", rays_text(&d.semigroup.generators));
            let _ = writeln!(out, "n: {}", d.n);
            fan_text(&mut out, &d.fan);
            let _ = writeln!(out, "smooth: {}", d.smooth);
            let _ = writeln!(out, "nash isomorphism: {}", d.nash_isomorphism);
            if d.best_effort {
                let _ = writeln!(out, "note: traversal in dimension > 3 is best effort");
            }
        }
        Document::Fan(d) => {
            let _ = writeln!(out, "sigma: cone {}", rays_text(&d.sigma.rays));
            let _ = writeln!(out, "semigroup: {}", rays_text(&d.semigroup.generators));
            fan_text(&mut out, &d.fan);
            let _ = writeln!(out, "trivial: {}", d.trivial);
            if d.best_effort {
                let _ = writeln!(out, "note: traversal in dimension > 3 is best effort");
            }
        }
        Document::Gb(d) => {
            let _ = writeln!(out, "semigroup: {}", rays_text(&d.semigroup.generators));
            let _ = writeln!(out, "weight: {}", d.weight);
            let _ = writeln!(out, "reduced Gröbner basis:");
            for g in &d.reduced_basis {
                let _ = writeln!(out, "  {}", poly_text(g));
            }
            let _ = writeln!(out, "initial ideal:");
            for g in &d.initial_ideal {
                let _ = writeln!(out, "  {}", poly_text(g));
            }
            let _ = writeln!(out, "Gröbner cone: rays {}", rays_text(&d.cone.rays));
        }
        Document::Nobile(d) => {
            let _ = writeln!(out, "cone {} n={}: {}", rays_text(&d.sigma.rays), d.n, d.summary);
            if !d.consistent {
                let _ = writeln!(out, "INCONSISTENT: smoothness and fan triviality disagree");
            }
        }
        Document::Hilbert(d) => {
            let target = if d.dual { "dual of cone" } else { "cone" };
            let _ = writeln!(out, "Hilbert basis of {target} {}:", rays_text(&d.cone.rays));
            for v in &d.hilbert_basis {
                let _ = writeln!(out, "  {v}");
            }
        }
    }
    out.into_bytes()
}
