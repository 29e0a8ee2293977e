//! Batch command line front end. Exit codes: 0 success, 1 violation or
//! mismatch (witness printed), 2 usage or input error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, LatticeError, LogicError};
use crate::fixtures::{fixture, list_fixtures, render_svg, verify_fixture, FixtureReport, Payload};
use crate::frame::{
    countermodel_search, frame_from_ortholattice, validate_c_frame, FiniteOrthoframe, FrameJson, PointSet,
};
use crate::lattice::{catalogue, find_mc8_embedding, FiniteOrtholattice};
use crate::laws::{law_check_finite, pom_generate_and_check, random_cone_law_search, Law, LawVerdict};
use crate::logic::{check_derivation, Calculus, Formula, RawDerivation, Sequent};
use crate::report::table1;
use crate::PolyCone;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "conelab", version, about = "Cones, finite ortholattices and orthologic proofs")]
pub struct Cli {
    /// Machine-readable JSON reports.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Finite ortholattices from JSON files or `catalogue:NAME`.
    Lattice {
        #[command(subcommand)]
        cmd: LatticeCmd,
    },
    /// Exact cone operations and sampled law checks.
    Cone {
        #[command(subcommand)]
        cmd: ConeCmd,
    },
    /// Partial orthomodularity on random cone triples.
    Pom {
        #[command(subcommand)]
        cmd: PomCmd,
    },
    /// The counterexample catalogue.
    Fixtures {
        #[command(subcommand)]
        cmd: FixturesCmd,
    },
    /// Formulas, proofs and countermodels.
    Logic {
        #[command(subcommand)]
        cmd: LogicCmd,
    },
    /// Orthoframes from JSON files or `catalogue:NAME`.
    Frame {
        #[command(subcommand)]
        cmd: FrameCmd,
    },
    /// Generated reports.
    Report {
        #[command(subcommand)]
        cmd: ReportCmd,
    },
}

#[derive(Subcommand, Debug)]
pub enum LatticeCmd {
    Validate {
        source: String,
    },
    Laws {
        source: String,
        #[arg(long = "law")]
        laws: Vec<String>,
    },
    Mc8 {
        source: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ConeOp {
    Polar,
    Meet,
    Join,
    Leq,
}

#[derive(Subcommand, Debug)]
pub enum ConeCmd {
    Op {
        op: ConeOp,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Laws {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long = "law")]
        laws: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PomCmd {
    Stress {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum FixturesCmd {
    List,
    Show {
        name: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// `verify all` checks every fixture.
    Verify {
        name: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    All {
        /// Directory receiving one picture per planar fixture.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum LogicCmd {
    /// Parse a formula or a sequent and print it back.
    Parse { text: String },
    Check {
        file: PathBuf,
        #[arg(long)]
        calculus: String,
    },
    Countermodel {
        sequent: String,
        #[arg(long, default_value_t = 6)]
        max_points: usize,
        #[arg(long = "premise")]
        premises: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum FrameCmd {
    ClosedSets { source: String },
    ValidateCframe { source: String },
}

#[derive(Subcommand, Debug)]
pub enum ReportCmd {
    Table1 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A finished command: text and JSON renderings plus the exit code.
struct Report {
    text: String,
    json: Value,
    code: i32,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            code: EXIT_OK,
        }
    }

    fn with_code(mut self, violation: bool) -> Self {
        if violation {
            self.code = EXIT_VIOLATION;
        }
        self
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))
}

fn load_lattice(source: &str) -> Result<FiniteOrtholattice, Error> {
    match source.strip_prefix("catalogue:") {
        Some(name) => Ok(catalogue(name)?),
        None => FiniteOrtholattice::from_json_str(&read(Path::new(source))?),
    }
}

#[derive(serde::Deserialize)]
struct FrameFile {
    #[serde(flatten)]
    frame: FrameJson,
    #[serde(default)]
    xi: Option<Vec<Vec<String>>>,
}

/// A frame with its candidate collection: the listed `xi`, the images of a
/// catalogue lattice, or else every closed set.
fn load_frame(source: &str) -> Result<(FiniteOrthoframe, Vec<PointSet>), Error> {
    if let Some(name) = source.strip_prefix("catalogue:") {
        return Ok(frame_from_ortholattice(&catalogue(name)?)?);
    }
    let f: FrameFile = serde_json::from_str(&read(Path::new(source))?)?;
    let frame = f.frame.to_frame()?;
    let xi = match f.xi {
        Some(sets) => sets
            .iter()
            .map(|s| {
                let names: Vec<&str> = s.iter().map(String::as_str).collect();
                frame.set_of(&names)
            })
            .collect::<Result<_, _>>()?,
        None => frame.closed_sets()?,
    };
    Ok((frame, xi))
}

fn parse_laws(names: &[String]) -> Result<Vec<Law>, Error> {
    names
        .iter()
        .map(|n| n.parse::<Law>().map_err(|_| Error::Usage(format!("unknown law `{n}`"))))
        .collect()
}

fn verdict_line(v: &LawVerdict) -> String {
    let mut s = match v.outcome {
        crate::laws::Outcome::Holds => format!("{:<6} holds ({} instances)", v.law.name(), v.instances_checked),
        crate::laws::Outcome::Fails => format!("{:<6} FAILS", v.law.name()),
    };
    if let Some(w) = &v.witness {
        let _ = write!(s, " at {w}");
    }
    s
}

fn lattice_cmd(cmd: LatticeCmd) -> Result<Report, Error> {
    match cmd {
        LatticeCmd::Validate { source } => match load_lattice(&source) {
            Ok(l) => Ok(Report::ok(
                format!("valid ortholattice: {l}"),
                json!({"valid": true, "elements": l.len(), "lattice": l.to_json()}),
            )),
            // a structural defect is a finding about the input, not a usage error
            Err(Error::Lattice(e)) if structural(&e) => Ok(Report {
                text: format!("invalid: {e}\n"),
                json: json!({"valid": false, "error": e.to_string()}),
                code: EXIT_VIOLATION,
            }),
            Err(e) => Err(e),
        },
        LatticeCmd::Laws { source, laws } => {
            let l = load_lattice(&source)?;
            let explicit = !laws.is_empty();
            let list = if explicit { parse_laws(&laws)? } else { Law::ALL.to_vec() };
            let mut verdicts = Vec::new();
            for law in list {
                match law_check_finite(&l, law) {
                    Ok(v) => verdicts.push(v),
                    Err(_) if !explicit => {}
                    Err(e) => return Err(e.into()),
                }
            }
            let text = verdicts.iter().map(|v| verdict_line(v) + "\n").collect();
            let failed = verdicts.iter().any(LawVerdict::fails);
            Ok(Report::ok(text, to_value(&verdicts)).with_code(failed))
        }
        LatticeCmd::Mc8 { source } => {
            let l = load_lattice(&source)?;
            let e = find_mc8_embedding(&l)?;
            let m = crate::lattice::mc8();
            let map: Option<Vec<(String, String)>> = e.as_ref().map(|map| {
                m.elements()
                    .map(|x| (m.name(x).to_string(), l.name(map[x]).to_string()))
                    .collect()
            });
            let text = match &map {
                Some(pairs) => {
                    let parts: Vec<String> = pairs.iter().map(|(a, b)| format!("{a} -> {b}")).collect();
                    format!("MC8 embedding: {}\n", parts.join(", "))
                }
                None => "no MC8 embedding\n".to_string(),
            };
            let found = map.is_some();
            Ok(Report::ok(text, json!({"embedding": map})).with_code(found))
        }
    }
}

fn structural(e: &LatticeError) -> bool {
    matches!(
        e,
        LatticeError::NotAntisymmetric(..)
            | LatticeError::NotALattice(..)
            | LatticeError::BadBound(..)
            | LatticeError::ComplementAxiom { .. }
    )
}

fn cone_cmd(cmd: ConeCmd) -> Result<Report, Error> {
    match cmd {
        ConeCmd::Op { op, files, out } => {
            let cones = files
                .iter()
                .map(|f| PolyCone::from_json_str(&read(f)?))
                .collect::<Result<Vec<_>, _>>()?;
            let need = |ok: bool, what: &str| {
                if ok {
                    Ok(())
                } else {
                    Err(Error::Usage(format!("{what}, got {} cone files", cones.len())))
                }
            };
            let result = match op {
                ConeOp::Polar => {
                    need(cones.len() == 1, "polar takes one cone")?;
                    cones[0].polar()
                }
                ConeOp::Meet | ConeOp::Join => {
                    need(!cones.is_empty(), "meet and join take at least one cone")?;
                    let mut acc = cones[0].clone();
                    for c in &cones[1..] {
                        acc = if matches!(op, ConeOp::Meet) { acc.meet(c)? } else { acc.join(c)? };
                    }
                    acc
                }
                ConeOp::Leq => {
                    need(cones.len() == 2, "leq takes two cones")?;
                    let holds = cones[0].leq(&cones[1])?;
                    return Ok(Report::ok(format!("{holds}\n"), json!({ "leq": holds })));
                }
            };
            let js = result.to_json();
            if let Some(path) = out {
                write_file(&path, &(serde_json::to_string_pretty(&js)? + "\n"))?;
            }
            Ok(Report::ok(format!("{result}\n"), js))
        }
        ConeCmd::Laws {
            dim,
            samples,
            seed,
            laws,
        } => {
            let list = if laws.is_empty() {
                Law::ALL
                    .into_iter()
                    .filter(|l| !l.needs_enumeration() && *l != Law::Aep)
                    .collect()
            } else {
                parse_laws(&laws)?
            };
            let verdicts = list
                .into_iter()
                .map(|l| random_cone_law_search(l, dim, samples, seed))
                .collect::<Result<Vec<_>, _>>()?;
            let mut text = format!("dim {dim}, {samples} samples, seed {seed}\n");
            for v in &verdicts {
                text += &(verdict_line(v) + "\n");
            }
            let failed = verdicts.iter().any(LawVerdict::fails);
            Ok(Report::ok(
                text,
                json!({"dim": dim, "samples": samples, "seed": seed, "verdicts": verdicts}),
            )
            .with_code(failed))
        }
    }
}

fn pom_cmd(cmd: PomCmd) -> Result<Report, Error> {
    let PomCmd::Stress { dim, samples, seed } = cmd;
    let s = pom_generate_and_check(dim, samples, seed)?;
    let mut text = format!(
        "dim {} samples {} candidates {} premise_hits {} nontrivial_hits {} violations={}\n",
        s.dim, s.samples, s.candidates, s.premise_hits, s.nontrivial_hits, s.violations
    );
    if let Some(w) = &s.first_violation {
        let _ = writeln!(text, "first violation: {w}");
    }
    let failed = s.violations > 0;
    Ok(Report::ok(text, to_value(&s)).with_code(failed))
}

fn svg_for(name: &str, path: &Path) -> Result<(), Error> {
    write_file(path, &render_svg(&fixture(name)?)?)
}

fn fixture_reports(reports: Vec<FixtureReport>) -> Report {
    let text = reports.iter().map(|r| r.to_string()).collect();
    let failed = reports.iter().any(|r| !r.pass);
    Report::ok(text, to_value(&reports)).with_code(failed)
}

fn verify_all_fixtures(svg_dir: Option<PathBuf>) -> Result<Report, Error> {
    let reports = crate::fixtures::verify_all()?;
    if let Some(dir) = svg_dir {
        std::fs::create_dir_all(&dir)
            .map_err(|e| Error::Usage(format!("cannot create {}: {e}", dir.display())))?;
        for name in list_fixtures() {
            let f = fixture(name)?;
            if render_svg(&f).is_ok() {
                svg_for(name, &dir.join(format!("{name}.svg")))?;
            }
        }
    }
    Ok(fixture_reports(reports))
}

fn fixtures_cmd(cmd: FixturesCmd) -> Result<Report, Error> {
    match cmd {
        FixturesCmd::List => {
            let mut text = String::new();
            let mut items = Vec::new();
            for name in list_fixtures() {
                let f = fixture(name)?;
                let _ = writeln!(text, "{:<16} {:<34} {}", name, f.carrier(), f.provenance);
                items.push(json!({"name": name, "carrier": f.carrier(), "provenance": f.provenance}));
            }
            Ok(Report::ok(text, Value::Array(items)))
        }
        FixturesCmd::Show { name, svg } => {
            let f = fixture(&name)?;
            if let Some(p) = svg {
                svg_for(&name, &p)?;
            }
            let mut text = format!("{} [{}]\n{}\n", f.name, f.carrier(), f.provenance);
            match &f.payload {
                Payload::Cones { cones, points } => {
                    for (n, c) in cones {
                        let _ = writeln!(text, "  {n} = {c}");
                    }
                    for (n, p) in points {
                        let _ = writeln!(text, "  {n} = {p}");
                    }
                }
                Payload::Lattice(l) => {
                    let _ = write!(text, "{l}");
                }
            }
            for c in &f.claims {
                let _ = writeln!(text, "  claim: {c}");
            }
            Ok(Report::ok(text, f.to_json()))
        }
        FixturesCmd::Verify { name, svg } if name == "all" => verify_all_fixtures(svg),
        FixturesCmd::Verify { name, svg } => {
            let r = verify_fixture(&name)?;
            if let Some(p) = svg {
                svg_for(&name, &p)?;
            }
            Ok(fixture_reports(vec![r]))
        }
        FixturesCmd::All { svg } => verify_all_fixtures(svg),
    }
}

fn logic_cmd(cmd: LogicCmd) -> Result<Report, Error> {
    match cmd {
        LogicCmd::Parse { text } => {
            if text.contains("|-") {
                let s = Sequent::parse(&text)?;
                Ok(Report::ok(
                    format!("{s}\n"),
                    json!({"sequent": s.to_string(), "antecedent": s.antecedent().to_string(),
                           "succedent": s.succedent.to_string(), "atoms": s.atoms()}),
                ))
            } else {
                let f = Formula::parse(&text)?;
                Ok(Report::ok(
                    format!("{f}\n"),
                    json!({"formula": f.to_string(), "atoms": f.atoms(), "size": f.size()}),
                ))
            }
        }
        LogicCmd::Check { file, calculus } => {
            let calc: Calculus = calculus.parse()?;
            let checked = RawDerivation::from_json_str(&read(&file)?)
                .and_then(RawDerivation::resolve)
                .and_then(|d| check_derivation(&d, calc).map(|()| d));
            match checked {
                Ok(d) => {
                    let concl = d.conclusion().map(|s| s.to_string()).unwrap_or_default();
                    Ok(Report::ok(
                        format!("valid {} derivation of {concl} ({} steps)\n", calc.name(), d.steps.len()),
                        json!({"valid": true, "calculus": calc.name(), "conclusion": concl, "steps": d.steps.len()}),
                    ))
                }
                Err(LogicError::Step { step, msg }) => Ok(Report {
                    text: format!("invalid: step {step}: {msg}\n"),
                    json: json!({"valid": false, "step": step, "error": msg}),
                    code: EXIT_VIOLATION,
                }),
                Err(e) => Err(e.into()),
            }
        }
        LogicCmd::Countermodel {
            sequent,
            max_points,
            premises,
        } => {
            let goal = Sequent::parse(&sequent)?;
            let prem = premises
                .iter()
                .map(|p| Sequent::parse(p))
                .collect::<Result<Vec<_>, _>>()?;
            let mut atoms = goal.atoms();
            for p in &prem {
                atoms.extend(p.atoms());
            }
            match countermodel_search(&prem, &goal, max_points, &atoms)? {
                Some(m) => {
                    let mut text = format!("countermodel on {} points: {}\n", m.frame.len(), m.frame);
                    for (a, s) in &m.assign {
                        let _ = writeln!(text, "  {a} = {}", m.frame.label(*s));
                    }
                    let lhs = m.value(&goal.antecedent())?;
                    let rhs = m.value(&goal.succedent)?;
                    let _ = writeln!(
                        text,
                        "  antecedent = {}, succedent = {}",
                        m.frame.label(lhs),
                        m.frame.label(rhs)
                    );
                    Ok(Report {
                        text,
                        json: json!({"found": true, "model": to_value(&m.to_json())}),
                        code: EXIT_VIOLATION,
                    })
                }
                None => Ok(Report::ok(
                    format!("no countermodel with at most {max_points} points\n"),
                    json!({"found": false, "max_points": max_points}),
                )),
            }
        }
    }
}

fn frame_cmd(cmd: FrameCmd) -> Result<Report, Error> {
    match cmd {
        FrameCmd::ClosedSets { source } => {
            let (f, _) = load_frame(&source)?;
            let sets = f.closed_sets()?;
            let mut text = format!("{} closed sets of {}\n", sets.len(), f);
            for s in &sets {
                let _ = writeln!(text, "  {}", f.label(*s));
            }
            let js: Vec<Vec<String>> = sets.iter().map(|s| f.names_of(*s)).collect();
            Ok(Report::ok(text, json!({ "closed_sets": js })))
        }
        FrameCmd::ValidateCframe { source } => {
            let (f, xi) = load_frame(&source)?;
            let r = validate_c_frame(&f, &xi)?;
            let name = |i: usize| f.label(xi[i]);
            use crate::frame::CFrameViolation as V;
            let text = match &r.violation {
                None => format!(
                    "c-frame: {} triples, {} premise hits, no violation\n",
                    r.triples_checked, r.premise_hits
                ),
                Some(V::NotClosedUnderMeet { a, b }) => {
                    format!("violation: {} & {} not in the collection\n", name(*a), name(*b))
                }
                Some(V::NotClosedUnderStar { a }) => {
                    format!("violation: star of {} not in the collection\n", name(*a))
                }
                Some(V::RelativeClosure { a, b, c }) => format!(
                    "violation: relative closure fails at a = {}, b = {}, c = {}\n",
                    name(*a),
                    name(*b),
                    name(*c)
                ),
            };
            let failed = !r.ok();
            Ok(Report::ok(text, to_value(&r)).with_code(failed))
        }
    }
}

fn report_cmd(cmd: ReportCmd, json_mode: bool) -> Result<Report, Error> {
    let ReportCmd::Table1 { out } = cmd;
    let t = table1()?;
    if let Some(p) = out {
        let body = if json_mode {
            serde_json::to_string_pretty(&t)? + "\n"
        } else {
            t.to_markdown()
        };
        write_file(&p, &body)?;
    }
    let failed = !t.all_verified;
    Ok(Report::ok(t.to_text(), to_value(&t)).with_code(failed))
}

fn execute(cli: Cli) -> Result<Report, Error> {
    match cli.cmd {
        Cmd::Lattice { cmd } => lattice_cmd(cmd),
        Cmd::Cone { cmd } => cone_cmd(cmd),
        Cmd::Pom { cmd } => pom_cmd(cmd),
        Cmd::Fixtures { cmd } => fixtures_cmd(cmd),
        Cmd::Logic { cmd } => logic_cmd(cmd),
        Cmd::Frame { cmd } => frame_cmd(cmd),
        Cmd::Report { cmd } => report_cmd(cmd, cli.json),
    }
}

/// Run one command line; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let json_mode = cli.json;
    match execute(cli) {
        Ok(r) => {
            let body = if json_mode {
                serde_json::to_string_pretty(&r.json).expect("json") + "\n"
            } else {
                r.text
            };
            let _ = out.write_all(body.as_bytes());
            r.code
        }
        Err(e) => {
            if json_mode {
                let _ = writeln!(out, "{}", json!({ "error": e.to_string() }));
            }
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::FixtureMismatch(_) => EXIT_VIOLATION,
                _ => EXIT_USAGE,
            }
        }
    }
}
