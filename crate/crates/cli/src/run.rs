//! Subcommands and the JSON report.
//!
//! Exit codes: 0 when every reported law holds, 1 when a law fails, 2 for
//! unreadable or rejected input, 3 when a size cap is hit.

use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value as Json};

use semiunital::algebra::fixtures::semiring_fixtures;
use semiunital::algebra::{validate_semimodule, validate_semiring, Semimodule};
use semiunital::congruence::{cancellative_reflection, is_cancellative};
use semiunital::jstructures::{
    check_jcomonad, check_jmonad, induced_monad_from_adjunction, jcomonad_to_semicomonoid,
    jmonad_to_semimonoid, jstructure_universe, roundtrip_jcomonad, roundtrip_jmonad,
    roundtrip_semicomonoid, roundtrip_semimonoid, semicomonoid_to_jcomonad, semimonoid_to_jmonad,
};
use semiunital::semistructures::{
    check_semicounital_semicoring, check_semiunital_semiring, convolution_monoid,
    enumerate_structures, sweedler_semicoring, StructureKind, Structures,
};
use semiunital::tensor::{tensor, Side};
use semiunital::variety::tensor_hom_adjunction;
use semiunital::{LawReport, DEFAULT_CAP};

use crate::format::{
    dump, dump_semicounital_semicoring, dump_semimodule, dump_semiunital_semiring, parse_file,
    Context, InputError, Item,
};

/// Carriers above this size are reported by size only.
pub const DUMP_LIMIT: usize = 1024;

const UNIVERSE_MAPS: usize = 2;

#[derive(Parser, Debug)]
#[command(name = "semiunital", version, about = "Check semiunital structures over finite semirings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Bound on enumerated hom-sets and candidate lists.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Also require the carrier to be firm (semirings) or cancellative (modules).
    #[arg(long, global = true)]
    pub strict: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Add wall-clock timings to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Print a short text summary instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a file and run the validator for its kind.
    Validate { file: PathBuf },
    /// The cancellative reflection of a semimodule (a semiring is read as its regular module).
    Reflect { file: PathBuf },
    /// The tensor product of two semimodules.
    Tensor { left: PathBuf, right: PathBuf },
    /// Run a law suite.
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
        files: Vec<PathBuf>,
    },
    /// The convolution monoid of a semicoring and a semiring.
    Convolve { coring: PathBuf, ring: PathBuf },
    /// The Sweedler semicoring of a semiring map.
    Sweedler { file: PathBuf },
    /// All semiunital semirings or semicounital semicorings on a carrier.
    Enumerate {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Pass a structure to its J-(co)monad and back.
    Roundtrip { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Semiring,
    Semicoring,
    Coherence,
    Jmonad,
    Jcomonad,
    Dual,
    Adjunction,
    Induced,
    Fixtures,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Semiring,
    Semicoring,
}

pub struct Outcome {
    pub report: Json,
    pub exit: i32,
}

impl Outcome {
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("reports serialize");
        s.push('\n');
        s
    }

    /// One line per law, then the error if any, then the exit status.
    pub fn render_human(&self) -> String {
        let r = &self.report;
        let mut out = format!("{}\n", r["command"].as_str().unwrap_or_default());
        for law in r["laws"].as_array().into_iter().flatten() {
            let mark = if law["passed"] == json!(true) { "ok  " } else { "FAIL" };
            out.push_str(&format!("  {mark} {}", law["name"].as_str().unwrap_or_default()));
            if law["passed"] == json!(false) {
                out.push_str(&format!(" [{}] witness {} {}", law["law"].as_str().unwrap_or_default(), law["witness"], law["detail"].as_str().unwrap_or_default()));
            }
            out.push('\n');
        }
        if let Some(id) = r["error"]["id"].as_str() {
            out.push_str(&format!("  error {id}: {}\n", r["error"]["message"].as_str().unwrap_or_default()));
        }
        out.push_str(&format!("exit {}\n", self.exit));
        out
    }
}

fn exit_code(e: &InputError) -> i32 {
    match e {
        InputError::Core(semiunital::Error::SizeCapExceeded { .. }) => 3,
        _ => 2,
    }
}

fn error_json(e: &InputError) -> Json {
    let mut out = Map::new();
    out.insert("id".into(), json!(e.id()));
    out.insert("message".into(), json!(e.to_string()));
    match e {
        InputError::Syntax { line, column, .. } => {
            out.insert("line".into(), json!(line));
            out.insert("column".into(), json!(column));
        }
        InputError::Semantic(r) => {
            out.insert("law".into(), json!(r.law_id));
            out.insert("witness".into(), json!(r.witness));
        }
        _ => {}
    }
    Json::Object(out)
}

struct Run<'a> {
    cli: &'a Cli,
    ctx: Context,
    laws: Vec<Json>,
    outputs: Map<String, Json>,
    timings: Map<String, Json>,
}

type Step<T> = std::result::Result<T, InputError>;

impl Run<'_> {
    fn law(&mut self, name: &str, r: &LawReport) {
        self.laws.push(json!({
            "name": name,
            "passed": r.passed,
            "law": r.law_id,
            "witness": r.witness,
            "detail": r.detail,
        }));
    }

    fn output(&mut self, key: &str, value: Json) {
        self.outputs.insert(key.into(), value);
    }

    fn timed<T>(&mut self, label: &str, f: impl FnOnce(&mut Self) -> Step<T>) -> Step<T> {
        let start = Instant::now();
        let out = f(self);
        if self.cli.timing {
            self.timings.insert(label.into(), json!(start.elapsed().as_secs_f64()));
        }
        out
    }

    fn read(&mut self, path: &std::path::Path) -> Step<Item> {
        parse_file(path, &mut self.ctx)
    }

    fn module(&mut self, path: &std::path::Path) -> Step<Arc<Semimodule>> {
        match self.read(path)? {
            Item::Semimodule(m) => Ok(m),
            Item::Semiring(s) => Ok(Arc::new(Semimodule::regular(&s))),
            Item::SemiunitalSemiring(s) => Ok(s.carrier),
            Item::SemicounitalSemicoring(c) => Ok(c.carrier),
            other => Err(wrong_kind(path, "a semimodule", other.kind())),
        }
    }

    fn carrier_module(&self, m: &Arc<Semimodule>) -> Json {
        if m.size() <= DUMP_LIMIT {
            dump_semimodule(m)
        } else {
            json!({ "kind": "semimodule", "size": m.size(), "omitted": format!("more than {DUMP_LIMIT} elements") })
        }
    }

    fn execute(&mut self) -> Step<()> {
        match &self.cli.command {
            Command::Validate { file } => {
                let item = self.read(file)?;
                let r = match &item {
                    Item::Semiring(s) => validate_semiring(s),
                    Item::Semimodule(m) => validate_semimodule(m),
                    Item::SemiunitalSemiring(s) => validate_semimodule(&s.carrier),
                    Item::SemicounitalSemicoring(c) => validate_semimodule(&c.carrier),
                    Item::SemiringMap { .. } => LawReport::pass(),
                };
                self.law(item.kind(), &r);
                self.output("structure", dump(&item));
            }
            Command::Reflect { file } => {
                let m = self.module(file)?;
                let r = cancellative_reflection(&m);
                self.law("reflection-cancellative", &cancellative_report(&r.reflected));
                self.output("size", json!(m.size()));
                self.output("kernel", json!(r.kernel));
                self.output("projection", json!(r.projection.table.to_vec()));
                self.output("reflected", dump_semimodule(&r.reflected));
            }
            Command::Tensor { left, right } => {
                let (m, n) = (self.module(left)?, self.module(right)?);
                let t = self.timed("tensor", |_| Ok(tensor(&m, &n)?))?;
                self.law("tensor-cancellative", &cancellative_report(&t.carrier));
                self.output("size", json!(t.size()));
                if m.size() * n.size() <= DUMP_LIMIT * DUMP_LIMIT {
                    let rows: Vec<Json> =
                        (0..m.size()).map(|a| json!((0..n.size()).map(|b| t.tau(a, b)).collect::<Vec<_>>())).collect();
                    self.output("tau", Json::Array(rows));
                }
                let carrier = self.carrier_module(&t.carrier);
                self.output("carrier", carrier);
            }
            Command::Check { suite, files } => self.check(*suite, files)?,
            Command::Convolve { coring, ring } => {
                let c = match self.read(coring)? {
                    Item::SemicounitalSemicoring(c) => c,
                    other => return Err(wrong_kind(coring, "a semicounital semicoring", other.kind())),
                };
                let a = match self.read(ring)? {
                    Item::SemiunitalSemiring(a) => a,
                    other => return Err(wrong_kind(ring, "a semiunital semiring", other.kind())),
                };
                let cap = self.cli.cap;
                let conv = self.timed("convolve", |_| Ok(convolution_monoid(&c, &a, cap)?))?;
                self.law("convolution-monoid", &conv.check());
                self.output("size", json!(conv.size()));
                self.output("unit", json!(conv.unit));
                self.output("maps", json!(conv.maps));
                let n = conv.size();
                let table: Vec<Json> = (0..n).map(|i| json!((0..n).map(|j| conv.product(i, j)).collect::<Vec<_>>())).collect();
                self.output("product", Json::Array(table));
            }
            Command::Sweedler { file } => {
                let (source, target, kappa) = match self.read(file)? {
                    Item::SemiringMap { source, target, kappa } => (source, target, kappa),
                    other => return Err(wrong_kind(file, "a semiring map", other.kind())),
                };
                let v = self.ctx.variety(&target);
                let c = self.timed("sweedler", |_| Ok(sweedler_semicoring(v, &source, &kappa)?))?;
                let r = check_semicounital_semicoring(&c, false)?;
                self.law("semicounital-semicoring", &r);
                self.output("size", json!(c.carrier.size()));
                self.output("semicoring", dump_semicounital_semicoring(&c));
            }
            Command::Enumerate { file, kind } => {
                let m = self.module(file)?;
                let base = m
                    .left_base()
                    .cloned()
                    .ok_or_else(|| InputError::Core(semiunital::Error::MissingAction("the carrier needs a base".into())))?;
                let v = self.ctx.variety(&base);
                let kind = match kind {
                    KindArg::Semiring => StructureKind::Semiring,
                    KindArg::Semicoring => StructureKind::Semicoring,
                };
                let cap = self.cli.cap;
                let found = self.timed("enumerate", |_| Ok(enumerate_structures(&v, &m, kind, cap)?))?;
                self.output("count", json!(found.len()));
                let list: Vec<Json> = match &found {
                    Structures::Semirings(list) => list
                        .iter()
                        .map(|s| json!({ "mu": s.mu.table.to_vec(), "eta": s.eta.table.to_vec() }))
                        .collect(),
                    Structures::Semicorings(list) => list
                        .iter()
                        .map(|c| json!({ "delta": c.delta.table.to_vec(), "epsilon": c.epsilon.table.to_vec() }))
                        .collect(),
                };
                self.output("structures", Json::Array(list));
            }
            Command::Roundtrip { file } => match self.read(file)? {
                Item::SemiunitalSemiring(s) => {
                    let v = s.variety.clone();
                    self.law("semimonoid-roundtrip", &roundtrip_semimonoid(&s)?);
                    let d = semimonoid_to_jmonad(&s, Side::Right)?;
                    let back = jmonad_to_semimonoid(&v, &d, &s.carrier)?;
                    let u = jstructure_universe(&v, &s.carrier, &d.m, UNIVERSE_MAPS)?;
                    self.law("jmonad-roundtrip", &roundtrip_jmonad(&v, &d, &s.carrier, &u)?);
                    self.output("excluded", json!(u.excluded));
                    self.output("extracted", dump_semiunital_semiring(&back));
                }
                Item::SemicounitalSemicoring(c) => {
                    let v = c.variety.clone();
                    self.law("semicomonoid-roundtrip", &roundtrip_semicomonoid(&c)?);
                    let d = semicomonoid_to_jcomonad(&c, Side::Right)?;
                    let back = jcomonad_to_semicomonoid(&v, &d, &c.carrier)?;
                    let u = jstructure_universe(&v, &c.carrier, &d.c, UNIVERSE_MAPS)?;
                    self.law("jcomonad-roundtrip", &roundtrip_jcomonad(&v, &d, &c.carrier, &u)?);
                    self.output("excluded", json!(u.excluded));
                    self.output("extracted", dump_semicounital_semicoring(&back));
                }
                other => return Err(wrong_kind(file, "a semiunital semiring or semicounital semicoring", other.kind())),
            },
        }
        Ok(())
    }

    fn one_file<'p>(&self, files: &'p [PathBuf], n: usize) -> Step<&'p [PathBuf]> {
        if files.len() == n {
            Ok(files)
        } else {
            Err(InputError::Core(semiunital::Error::ShapeMismatch(format!(
                "this suite takes {n} file(s), got {}",
                files.len()
            ))))
        }
    }

    fn check(&mut self, suite: Suite, files: &[PathBuf]) -> Step<()> {
        let strict = self.cli.strict;
        match suite {
            Suite::Semiring | Suite::Jmonad => {
                let file = &self.one_file(files, 1)?[0];
                let s = match self.read(file)? {
                    Item::SemiunitalSemiring(s) => s,
                    other => return Err(wrong_kind(file, "a semiunital semiring", other.kind())),
                };
                if suite == Suite::Semiring {
                    self.law("semiunital-semiring", &check_semiunital_semiring(&s, false)?);
                    if strict {
                        self.law("strict-semiunital-semiring", &check_semiunital_semiring(&s, true)?);
                    }
                } else {
                    for (side, name) in [(Side::Right, "right-jmonad"), (Side::Left, "left-jmonad")] {
                        let d = semimonoid_to_jmonad(&s, side)?;
                        let u = jstructure_universe(&s.variety, &s.carrier, &d.m, UNIVERSE_MAPS)?;
                        let r = self.timed(name, |_| Ok(check_jmonad(&d, &u)?))?;
                        self.law(name, &r);
                        self.output(&format!("{name}-excluded"), json!(u.excluded));
                    }
                }
            }
            Suite::Semicoring | Suite::Jcomonad => {
                let file = &self.one_file(files, 1)?[0];
                let c = match self.read(file)? {
                    Item::SemicounitalSemicoring(c) => c,
                    other => return Err(wrong_kind(file, "a semicounital semicoring", other.kind())),
                };
                if suite == Suite::Semicoring {
                    self.law("semicounital-semicoring", &check_semicounital_semicoring(&c, false)?);
                    if strict {
                        self.law("strict-semicounital-semicoring", &check_semicounital_semicoring(&c, true)?);
                    }
                } else {
                    for (side, name) in [(Side::Right, "right-jcomonad"), (Side::Left, "left-jcomonad")] {
                        let d = semicomonoid_to_jcomonad(&c, side)?;
                        let u = jstructure_universe(&c.variety, &c.carrier, &d.c, UNIVERSE_MAPS)?;
                        let r = self.timed(name, |_| Ok(check_jcomonad(&d, &u)?))?;
                        self.law(name, &r);
                        self.output(&format!("{name}-excluded"), json!(u.excluded));
                    }
                }
            }
            Suite::Coherence | Suite::Dual => {
                let file = &self.one_file(files, 1)?[0];
                let base = match self.read(file)? {
                    Item::Semiring(s) => s,
                    other => return Err(wrong_kind(file, "a semiring", other.kind())),
                };
                let v = self.ctx.variety(&base);
                let u = v.default_universe(UNIVERSE_MAPS)?;
                self.output("objects", json!(u.objects.iter().map(|x| x.size()).collect::<Vec<_>>()));
                self.output("morphisms", json!(u.morphisms.len()));
                if suite == Suite::Coherence {
                    let r = self.timed("coherence", |_| Ok(v.coherence_check(&u)?))?;
                    self.law("coherence", &r);
                } else {
                    let cap = self.cli.cap;
                    let unit = v.unit_dual()?;
                    self.law("unit-dual", &v.dual_check(&unit, &u, cap)?);
                    let free = v.free_dual(2)?;
                    self.law("free-dual", &v.dual_check(&free, &u, cap)?);
                }
            }
            Suite::Adjunction => {
                let f = self.one_file(files, 3)?;
                let (m, n, g) = (self.module(&f[0])?, self.module(&f[1])?, self.module(&f[2])?);
                let cap = self.cli.cap;
                let a = self.timed("adjunction", |_| Ok(tensor_hom_adjunction(&m, &n, &g, cap)?))?;
                self.law("tensor-hom", &a.report);
                self.output("lhs", json!(a.lhs.len()));
                self.output("rhs", json!(a.rhs.len()));
                self.output("forward", json!(a.forward));
            }
            Suite::Induced => {
                let file = &self.one_file(files, 1)?[0];
                let n = self.module(file)?;
                let base = n
                    .left_base()
                    .cloned()
                    .ok_or_else(|| InputError::Core(semiunital::Error::MissingAction("N needs a left action".into())))?;
                let v = self.ctx.variety(&base);
                let u = v.default_universe(UNIVERSE_MAPS)?;
                let cap = self.cli.cap;
                let im = self.timed("induced", |_| Ok(induced_monad_from_adjunction(&n, &u, cap)?))?;
                self.law("induced-monad", &im.report);
                self.output("objects", json!(im.universe.objects.iter().map(|x| x.size()).collect::<Vec<_>>()));
            }
            Suite::Fixtures => {
                self.one_file(files, 0)?;
                for (name, s) in semiring_fixtures() {
                    self.law(&name, &validate_semiring(&s));
                }
            }
        }
        Ok(())
    }
}

fn cancellative_report(m: &Semimodule) -> LawReport {
    if is_cancellative(m) {
        LawReport::pass()
    } else {
        LawReport::fail("cancellative", vec![], "the carrier is not cancellative")
    }
}

fn wrong_kind(path: &std::path::Path, wanted: &str, got: &str) -> InputError {
    InputError::Core(semiunital::Error::KindMismatch(format!(
        "{} holds a {got}, expected {wanted}",
        path.display()
    )))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Reflect { .. } => "reflect",
        Command::Tensor { .. } => "tensor",
        Command::Check { .. } => "check",
        Command::Convolve { .. } => "convolve",
        Command::Sweedler { .. } => "sweedler",
        Command::Enumerate { .. } => "enumerate",
        Command::Roundtrip { .. } => "roundtrip",
    }
}

/// Runs one command. The report is deterministic unless `--timing` is set.
pub fn execute(cli: &Cli) -> Outcome {
    let mut run = Run {
        cli,
        ctx: Context::default(),
        laws: Vec::new(),
        outputs: Map::new(),
        timings: Map::new(),
    };
    let result = run.execute();
    let failed = run.laws.iter().any(|l| l["passed"] == json!(false));
    let (error, exit) = match &result {
        Err(InputError::Semantic(r)) if matches!(cli.command, Command::Validate { .. }) => {
            run.law("validate", r);
            (Json::Null, 1)
        }
        Err(e) => (error_json(e), exit_code(e)),
        Ok(()) if failed => (Json::Null, 1),
        Ok(()) => (Json::Null, 0),
    };
    let mut report = Map::new();
    report.insert("command".into(), json!(command_name(&cli.command)));
    report.insert(
        "options".into(),
        json!({ "cap": cli.cap, "strict": cli.strict }),
    );
    report.insert("laws".into(), Json::Array(run.laws));
    report.insert("outputs".into(), Json::Object(run.outputs));
    report.insert("error".into(), error);
    if cli.timing {
        report.insert("timings".into(), Json::Object(run.timings));
    }
    report.insert("exit".into(), json!(exit));
    Outcome {
        report: Json::Object(report),
        exit,
    }
}
