//! Subcommand dispatch. Each command yields a `Report`: a JSON value, a text
//! rendering, and an optional pass/fail flag that decides the exit code.

use std::collections::BTreeMap;
use std::fmt::{Display, Write as _};
use std::io::Read as _;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use tightcheck::complex::SimplicialComplex;
use tightcheck::format::ComplexDocument;
use tightcheck::homology::{betti_vector, boundary_squared_vanishes};
use tightcheck::invariants::{
    is_orientable, is_stacked_with_boundary, manifold_status, mu_vector_with, sigma_vector,
    verify_stacked_pair,
};
use tightcheck::linalg::Rational;
use tightcheck::tightness::{
    conjecture_b_compare, morse_report_with, tight_by_definition, tight_by_mu_with,
    SigmaComparison, TightnessReport,
};
use tightcheck::Error;

use crate::args::{Command, Family, MethodArg, RunConfig};

pub const TOOL: &str = "tightcheck";

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Engine(Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Engine(Error::SweepLimit { .. }) => 3,
            Failure::Engine(Error::Consistency(_)) => 1,
            Failure::Engine(_) => 2,
        }
    }
}

impl Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => f.write_str(m),
            Failure::Engine(e) => write!(f, "{e}"),
        }
    }
}

impl From<tightcheck::complex::ComplexError> for Failure {
    fn from(e: tightcheck::complex::ComplexError) -> Self {
        Failure::Engine(e.into())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputInfo {
    pub source: String,
    pub name: Option<String>,
    pub metadata: BTreeMap<String, String>,
    pub vertices: usize,
    pub facets: usize,
}

#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub input: Option<InputInfo>,
    pub holds: Option<bool>,
    pub result: Value,
    pub text: String,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.holds == Some(false) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self, cfg: &RunConfig) -> String {
        let envelope = json!({
            "tool": TOOL,
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "config": cfg,
            "input": self.input,
            "holds": self.holds,
            "result": self.result,
        });
        serde_json::to_string_pretty(&envelope).expect("report values serialize")
    }
}

pub fn load(path: Option<&Path>) -> Result<(ComplexDocument, String), Failure> {
    let (text, source) = match path {
        None => read_stdin()?,
        Some(p) if p.as_os_str() == "-" => read_stdin()?,
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            (text, p.display().to_string())
        }
    };
    let doc =
        ComplexDocument::parse(&text).map_err(|e| Failure::Usage(format!("{source}: {e}")))?;
    Ok((doc, source))
}

fn read_stdin() -> Result<(String, String), Failure> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Failure::Usage(format!("<stdin>: {e}")))?;
    Ok((text, "<stdin>".into()))
}

fn info(doc: &ComplexDocument, source: String) -> InputInfo {
    InputInfo {
        source,
        name: doc.name.clone(),
        metadata: doc.metadata.clone(),
        vertices: doc.complex.num_vertices(),
        facets: doc.complex.facets().len(),
    }
}

fn tuple<T: Display>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(T::to_string).collect();
    format!("({})", parts.join(", "))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

pub fn execute(command: &Command, cfg: &RunConfig) -> Result<Report, Failure> {
    match command {
        Command::Gen { family, out } => generate(family, out.as_deref(), cfg),
        Command::StackedPair { ball, sphere, k } => {
            let (doc, source) = load(Some(ball))?;
            let expected = sphere.as_deref().map(|p| load(Some(p))).transpose()?;
            let r =
                verify_stacked_pair(&doc.complex, *k, expected.as_ref().map(|(d, _)| &d.complex))?;
            let mut text = format!("{}-stacked: {}\n", k, yes_no(r.stacked.holds));
            if let Some(face) = &r.stacked.offending_face {
                let _ = writeln!(text, "interior face of low dimension: {face}");
            }
            if let Some(m) = r.boundary_matches {
                let _ = writeln!(text, "boundary equals given complex: {}", yes_no(m));
            }
            Ok(Report {
                command: "stacked-pair",
                input: Some(info(&doc, source)),
                holds: Some(r.holds()),
                result: to_value(&r),
                text,
            })
        }
        Command::Check(input) => with_input(input.file.as_deref(), |x| check(x, cfg)),
        Command::Betti { input, reduced } => with_input(input.file.as_deref(), |x| {
            let b = betti_vector(x, cfg.field, *reduced);
            let label = if *reduced { "reduced betti" } else { "betti" };
            Ok((
                "betti",
                None,
                to_value(&b),
                format!("{label} over {}: {}\n", cfg.field, tuple(&b.values)),
            ))
        }),
        Command::Sigma(input) => with_input(input.file.as_deref(), |x| {
            let s = sigma_vector(x, cfg.field, &cfg.limits)?;
            Ok((
                "sigma",
                None,
                to_value(&s),
                format!("sigma over {}: {}\n", cfg.field, tuple(&s.values)),
            ))
        }),
        Command::Mu(input) => with_input(input.file.as_deref(), |x| {
            let m = mu_vector_with(x, cfg.field, &cfg.limits, cfg.mu_convention)?;
            let text = format!(
                "mu over {} ({} convention): {}\n",
                cfg.field,
                m.convention,
                tuple(&m.values)
            );
            Ok(("mu", None, to_value(&m), text))
        }),
        Command::Tight { input, method } => {
            with_input(input.file.as_deref(), |x| tight(x, *method, cfg))
        }
        Command::Stacked { input, k } => with_input(input.file.as_deref(), |x| {
            let r = is_stacked_with_boundary(x, *k)?;
            let mut text = format!("{}-stacked: {}\n", k, yes_no(r.holds));
            if let Some(face) = &r.offending_face {
                let _ = writeln!(text, "interior face of low dimension: {face}");
            }
            Ok(("stacked", Some(r.holds), to_value(&r), text))
        }),
        Command::ConjectureB { input, k } => with_input(input.file.as_deref(), |x| {
            let r = conjecture_b_compare(x, *k, cfg.field, &cfg.limits)?;
            Ok(("conjecture-b", None, to_value(&r), conjecture_text(&r)))
        }),
        Command::Props(input) => with_input(input.file.as_deref(), |x| props(x, cfg)),
    }
}

type Computed = (&'static str, Option<bool>, Value, String);

fn with_input(
    path: Option<&Path>,
    f: impl FnOnce(&SimplicialComplex) -> Result<Computed, Failure>,
) -> Result<Report, Failure> {
    let (doc, source) = load(path)?;
    let (command, holds, result, text) = f(&doc.complex)?;
    Ok(Report {
        command,
        input: Some(info(&doc, source)),
        holds,
        result,
        text,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn generate(family: &Family, out: Option<&Path>, cfg: &RunConfig) -> Result<Report, Failure> {
    let spec = family.spec(cfg.seed);
    let doc = spec.document()?;
    let cplx = doc.to_text();
    if let Some(path) = out {
        std::fs::write(path, &cplx)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    let text = match out {
        Some(path) => format!(
            "wrote {} ({} vertices, {} facets)\n",
            path.display(),
            doc.complex.num_vertices(),
            doc.complex.facets().len()
        ),
        None => cplx.clone(),
    };
    Ok(Report {
        command: "gen",
        input: None,
        holds: None,
        result: json!({ "generator": spec, "name": doc.name, "metadata": doc.metadata, "cplx": cplx }),
        text,
    })
}

fn check(x: &SimplicialComplex, cfg: &RunConfig) -> Result<Computed, Failure> {
    let status = manifold_status(x, cfg.field)?;
    let boundary = if x.is_pure() && x.dim() >= 1 {
        Some(x.boundary_complex()?)
    } else {
        None
    };
    let orientable = if status.is_closed() {
        Some(is_orientable(x, cfg.field)?)
    } else {
        None
    };
    let f = x.f_vector();
    let neighbourliness = x.neighbourliness()?;
    let result = json!({
        "dim": x.dim(),
        "f_vector": f.0,
        "euler_characteristic": f.euler_characteristic(),
        "pure": x.is_pure(),
        "components": x.connected_components(),
        "neighbourliness": neighbourliness,
        "manifold_status": status,
        "boundary_f_vector": boundary.as_ref().map(|b| b.f_vector().0),
        "orientable": orientable,
    });
    let mut text = String::new();
    let _ = writeln!(text, "dimension:        {}", x.dim());
    let _ = writeln!(text, "f-vector:         {}", tuple(&f.0));
    let _ = writeln!(text, "euler char:       {}", f.euler_characteristic());
    let _ = writeln!(text, "pure:             {}", yes_no(x.is_pure()));
    let _ = writeln!(text, "components:       {}", x.connected_components());
    let _ = writeln!(text, "neighbourliness:  {neighbourliness}");
    let _ = writeln!(text, "manifold over {}: {status}", cfg.field);
    match &boundary {
        Some(b) if !b.is_empty() => {
            let _ = writeln!(text, "boundary f-vector: {}", tuple(&b.f_vector().0));
        }
        Some(_) => {
            let _ = writeln!(text, "boundary:         empty");
        }
        None => {}
    }
    if let Some(o) = orientable {
        let _ = writeln!(text, "orientable:       {}", yes_no(o));
    }
    Ok(("check", None, result, text))
}

fn tight(x: &SimplicialComplex, method: MethodArg, cfg: &RunConfig) -> Result<Computed, Failure> {
    let by_mu = match method {
        MethodArg::Mu | MethodArg::Both => Some(tight_by_mu_with(
            x,
            cfg.field,
            &cfg.limits,
            cfg.mu_convention,
        )?),
        MethodArg::Direct => None,
    };
    let direct = match method {
        MethodArg::Direct | MethodArg::Both => {
            Some(tight_by_definition(x, cfg.field, &cfg.limits)?)
        }
        MethodArg::Mu => None,
    };
    if let (Some(a), Some(b)) = (&by_mu, &direct) {
        if a.verdict != b.verdict {
            return Err(Error::Consistency(format!(
                "mu criterion says {} but the injectivity sweep says {}",
                a.verdict, b.verdict
            ))
            .into());
        }
    }
    let tight = by_mu.iter().chain(&direct).all(TightnessReport::is_tight);
    let mut text = format!(
        "verdict over {}: {}\n",
        cfg.field,
        if tight { "tight" } else { "not tight" }
    );
    let beta = by_mu
        .as_ref()
        .or(direct.as_ref())
        .map(|r| r.beta.values.clone())
        .unwrap_or_default();
    let _ = writeln!(text, "betti: {}", tuple(&beta));
    if let Some(mu) = by_mu.as_ref().and_then(|r| r.mu.as_ref()) {
        let _ = writeln!(
            text,
            "mu:    {} ({} convention)",
            tuple(&mu.values),
            mu.convention
        );
    }
    let connected = by_mu
        .as_ref()
        .or(direct.as_ref())
        .is_some_and(|r| r.connected);
    if !connected {
        let _ = writeln!(text, "complex is disconnected");
    }
    if let Some(w) = direct.as_ref().and_then(|r| r.witness.as_ref()) {
        let _ = writeln!(
            text,
            "witness: A = {{{}}}, degree {}",
            join(&w.subset),
            w.degree
        );
    }
    let result = json!({ "tight": tight, "mu_method": by_mu, "direct_method": direct });
    Ok(("tight", Some(tight), result, text))
}

fn join<T: Display>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn sigma_line(out: &mut String, label: &str, k: usize, s: &SigmaComparison) {
    let _ = writeln!(
        out,
        "{label}: m = {}, sigma_{} = {}, formula {} ({}), formula with -delta {} ({})",
        s.vertices,
        k - 1,
        s.computed,
        s.formula,
        if s.matches { "match" } else { "differs" },
        s.formula_raw,
        if s.matches_raw { "match" } else { "differs" },
    );
}

fn conjecture_text(r: &tightcheck::tightness::ConjectureReport) -> String {
    let mut text = format!(
        "k = {}, dim = {}, {} vertices, {}-neighbourly, {} over {}\n",
        r.k, r.dim, r.vertices, r.neighbourliness, r.status, r.field
    );
    let _ = writeln!(
        text,
        "hypotheses (dimension, neighbourliness, manifold) hold: {}",
        yes_no(r.hypotheses_checked)
    );
    if let Some(s) = &r.sphere {
        sigma_line(&mut text, "sphere", r.k, s);
    }
    for (i, s) in r.links.iter().enumerate() {
        sigma_line(&mut text, &format!("link {i}"), r.k, s);
    }
    if let Some(m) = &r.mu {
        let _ = writeln!(
            text,
            "mu_{} = {}, formula {}, beta_{} = {}",
            r.k, m.computed, m.formula, r.k, m.beta
        );
    }
    text
}

#[derive(Debug, Clone, Serialize)]
struct PropCheck {
    name: &'static str,
    status: &'static str,
    detail: String,
}

impl PropCheck {
    fn new(name: &'static str, ok: bool, detail: String) -> Self {
        PropCheck {
            name,
            status: if ok { "pass" } else { "FAIL" },
            detail,
        }
    }

    fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        PropCheck {
            name,
            status: "skipped",
            detail: detail.into(),
        }
    }
}

fn props(x: &SimplicialComplex, cfg: &RunConfig) -> Result<Computed, Failure> {
    let field = cfg.field;
    let beta = betti_vector(x, field, false);
    let f = x.f_vector();
    let alt: i64 = beta
        .values
        .iter()
        .enumerate()
        .map(|(i, b)| if i % 2 == 0 { *b as i64 } else { -(*b as i64) })
        .sum();
    let mut checks = vec![
        PropCheck::new(
            "euler-relation",
            alt == f.euler_characteristic(),
            format!(
                "chi(f) = {}, alternating betti sum = {alt}",
                f.euler_characteristic()
            ),
        ),
        PropCheck::new(
            "boundary-squared",
            boundary_squared_vanishes(x, field),
            "d o d = 0 in every degree".into(),
        ),
    ];
    let cross = x.num_vertices() <= cfg.limits.direct_vertices;
    match morse_report_with(x, field, &cfg.limits, cross) {
        Ok(m) => {
            checks.push(PropCheck::new(
                "morse-inequalities",
                true,
                format!(
                    "alternating and degreewise mu >= beta at all {} degrees",
                    m.rows.len()
                ),
            ));
            if cross {
                let bad: Vec<usize> = m
                    .rows
                    .iter()
                    .filter(|r| {
                        r.alternating_criterion_confirmed == Some(false)
                            || r.degree_criterion_confirmed == Some(false)
                    })
                    .map(|r| r.ell)
                    .collect();
                checks.push(PropCheck::new(
                    "equality-iff-injective",
                    bad.is_empty(),
                    if bad.is_empty() {
                        "equality cases agree with the injectivity sweep".into()
                    } else {
                        format!("disagreement at degrees {bad:?}")
                    },
                ));
            } else {
                checks.push(PropCheck::skipped(
                    "equality-iff-injective",
                    format!(
                        "{} vertices exceed the direct limit {}",
                        x.num_vertices(),
                        cfg.limits.direct_vertices
                    ),
                ));
            }
            checks.push(PropCheck::new(
                "middle-degree-implication",
                m.middle_degree_implication,
                "equality at k-1 and k+1 forces equality at k".into(),
            ));
            let status = manifold_status(x, field)?;
            if status.is_closed() {
                let mu: Vec<Rational> = m.rows.iter().map(|r| r.mu.clone()).collect();
                let symmetric = mu.iter().eq(mu.iter().rev());
                checks.push(PropCheck::new(
                    "mu-duality",
                    symmetric,
                    format!("mu = {}", tuple(&mu)),
                ));
            } else {
                checks.push(PropCheck::skipped(
                    "mu-duality",
                    format!("not closed ({status})"),
                ));
            }
        }
        Err(Error::Consistency(msg)) => {
            checks.push(PropCheck::new("morse-inequalities", false, msg))
        }
        Err(e) => return Err(e.into()),
    }
    let ok = checks.iter().all(|c| c.status != "FAIL");
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(text, "{:8} {:26} {}", c.status, c.name, c.detail);
    }
    let _ = writeln!(
        text,
        "{}",
        if ok {
            "all checks passed"
        } else {
            "PROPERTY VIOLATION"
        }
    );
    Ok((
        "props",
        Some(ok),
        json!({ "field": field, "checks": checks }),
        text,
    ))
}
