//! The `npants` command line: one JSON document on stdout, a one-line
//! summary on stderr.
//!
//! Exit codes: 0 success, 2 validation error, 3 unrealizable or
//! inapplicable, 4 search budget exceeded, 5 numeric failure.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dt::{self, CurveSystem, DtError, DtVector};
use crate::hyperbolic::{self, FnPoint, HyperbolicError, Probe, YSite};
use crate::klein::{self, K1Decomposition, KleinError, OneSidedCurve};
use crate::moves::{self, Move, MoveError, MoveSequence, SearchOptions, DEFAULT_BUDGET};
use crate::pants::{self, canonical_key, EnumerationOptions, KeyOptions, PantsDecomposition, PantsError};
use crate::surface::{Surface, SurfaceError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_UNREALIZABLE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_NUMERIC: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "npants", version, about = "Pants decompositions of possibly non-orientable surfaces")]
pub struct Cli {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Group,
}

#[derive(Debug, Subcommand)]
pub enum Group {
    /// Surface classification.
    #[command(subcommand)]
    Surface(SurfaceCmd),
    /// Decompositions: validation, enumeration, curve counts.
    #[command(subcommand)]
    Pants(PantsCmd),
    /// Elementary moves, move graphs and path search.
    #[command(subcommand)]
    Moves(MovesCmd),
    /// Dehn-Thurston coordinates.
    #[command(subcommand)]
    Dt(DtCmd),
    /// The Klein bottle minus a disk.
    #[command(subcommand)]
    K1(K1Cmd),
    /// Fenchel-Nielsen coordinates and lengths.
    #[command(subcommand, name = "fn")]
    Fn(FnCmd),
}

#[derive(Debug, Subcommand)]
pub enum SurfaceCmd {
    /// Euler characteristic, pants count and crosscap bound of `F(g,r,s)` or `N(g,r,s)`.
    Info { surface: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OnOff {
    On,
    Off,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct KeyArgs {
    /// Identify decompositions that differ only in flips once a crosscap is present.
    #[arg(long, value_enum, default_value = "off")]
    pub absorption: OnOff,
}

impl KeyArgs {
    fn options(&self) -> KeyOptions {
        KeyOptions::absorption(self.absorption == OnOff::On)
    }
}

#[derive(Debug, Subcommand)]
pub enum PantsCmd {
    /// Check a decomposition and report its surface.
    Validate { decomposition: String },
    /// All decomposition types with a given number of pants.
    Enumerate {
        #[arg(long)]
        pants: usize,
        /// Restrict to one surface.
        #[arg(long)]
        surface: Option<String>,
        /// Allow puncture leaves.
        #[arg(long)]
        punctures: bool,
        #[command(flatten)]
        key: KeyArgs,
    },
    /// Pants curves by kind.
    Census { decomposition: String },
}

#[derive(Debug, Subcommand)]
pub enum MovesCmd {
    /// Every applicable move literal.
    List { decomposition: String },
    /// Apply move literals in order.
    Apply {
        decomposition: String,
        moves: Vec<String>,
        /// File with one move literal per line.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Shortest move sequence between the types of two decompositions.
    Path {
        from: String,
        to: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[command(flatten)]
        key: KeyArgs,
    },
    /// Type-level move graph.
    Graph {
        #[arg(long)]
        surface: String,
        #[arg(long)]
        pants: Option<usize>,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        key: KeyArgs,
    },
    /// Moves making a decomposition orientable.
    Orientify { decomposition: String },
    /// Moves bringing an orientable decomposition down to at most two crosscaps.
    Reduce { decomposition: String },
}

#[derive(Debug, Subcommand)]
pub enum DtCmd {
    Realizable { vector: String },
    Decode { vector: String },
    Encode { system: String },
    Components { vector: String },
    Chart { vector: String },
    Project { vector: String },
}

#[derive(Debug, Subcommand)]
pub enum K1Cmd {
    /// Neighbors of a 1-sided curve (an integer) or moves out of `Pair:<n>` / `C2`.
    Neighbors {
        #[arg(allow_hyphen_values = true)]
        of: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        framing: i64,
    },
    /// Shortest move sequence between two decompositions.
    Path {
        #[arg(allow_hyphen_values = true)]
        from: String,
        #[arg(allow_hyphen_values = true)]
        to: String,
        #[arg(long, default_value_t = 64)]
        radius: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        framing: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum FnCmd {
    /// Length spectrum over a probe list.
    Lengths {
        #[arg(long)]
        point: String,
        /// File of probes: a JSON array of strings or one probe per line.
        /// Without it the standard probe family is used.
        #[arg(long)]
        probes: Option<PathBuf>,
    },
    /// Coordinate action of the Y-homeomorphism.
    Y {
        #[arg(long)]
        point: String,
        /// `cc_a,cc_b,curve`; defaults to the only site of the base.
        #[arg(long)]
        site: Option<String>,
    },
    /// Slope of a probe's length under repeated full twists.
    TwistAsymptote {
        #[arg(long)]
        point: String,
        #[arg(long)]
        curve: String,
        #[arg(long)]
        probe: String,
        #[arg(long, default_value_t = 50)]
        steps: usize,
    },
}

/// A failed command with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn validation(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        CliError::validation(e.to_string())
    }
}

impl From<PantsError> for CliError {
    fn from(e: PantsError) -> Self {
        CliError::validation(e.to_string())
    }
}

impl From<MoveError> for CliError {
    fn from(e: MoveError) -> Self {
        let code = match e {
            MoveError::Inapplicable { .. } => EXIT_UNREALIZABLE,
            MoveError::BudgetExceeded(_) => EXIT_BUDGET,
            _ => EXIT_VALIDATION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<DtError> for CliError {
    fn from(e: DtError) -> Self {
        let code = match e {
            DtError::Unrealizable(_) | DtError::NotStandard(_) => EXIT_UNREALIZABLE,
            _ => EXIT_VALIDATION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<KleinError> for CliError {
    fn from(e: KleinError) -> Self {
        CliError::validation(e.to_string())
    }
}

impl From<HyperbolicError> for CliError {
    fn from(e: HyperbolicError) -> Self {
        let code = match e {
            HyperbolicError::Numeric(_) | HyperbolicError::Elliptic(_) => EXIT_NUMERIC,
            _ => EXIT_VALIDATION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command)),
            Err(e) => Err(CliError::validation(e.to_string())),
        },
        None => dispatch(&cli.command),
    };
    match result {
        Ok((doc, summary)) => Outcome {
            code: EXIT_OK,
            stdout: serde_json::to_string_pretty(&doc).expect("json") + "\n",
            stderr: summary + "\n",
        },
        Err(e) => Outcome {
            code: e.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message),
        },
    }
}

type Reply = Result<(Value, String), CliError>;

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Text of an input argument: inline JSON, `-` for stdin, or a file path.
fn read_input(arg: &str) -> Result<(String, Option<PathBuf>), CliError> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok((arg.to_string(), None));
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| CliError::validation(format!("reading stdin: {e}")))?;
        return Ok((s, None));
    }
    let path = PathBuf::from(arg);
    let text = fs::read_to_string(&path).map_err(|e| CliError::validation(format!("reading {arg}: {e}")))?;
    Ok((text, Some(path)))
}

fn parse_json(text: &str, what: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::validation(format!("{what}: {e}")))
}

fn load_decomposition(arg: &str) -> Result<PantsDecomposition, CliError> {
    let (text, _) = read_input(arg)?;
    Ok(PantsDecomposition::from_json(&text)?)
}

/// Reads a document with a `base` field, resolving a string base as a path
/// relative to the document.
fn load_with_base(arg: &str, what: &str) -> Result<Value, CliError> {
    let (text, path) = read_input(arg)?;
    let mut doc = parse_json(&text, what)?;
    if let Some(Value::String(base)) = doc.get("base").cloned() {
        let dir = path.as_deref().and_then(Path::parent).unwrap_or(Path::new("."));
        let file = dir.join(&base);
        let btext = fs::read_to_string(&file)
            .map_err(|e| CliError::validation(format!("reading base {}: {e}", file.display())))?;
        doc["base"] = parse_json(&btext, "base decomposition")?;
    }
    Ok(doc)
}

fn load_vector(arg: &str) -> Result<DtVector, CliError> {
    let doc = load_with_base(arg, "coordinate vector")?;
    let v: DtVector = serde_json::from_value(doc).map_err(|e| CliError::validation(format!("coordinate vector: {e}")))?;
    v.validate()?;
    Ok(v)
}

fn load_point(arg: &str) -> Result<FnPoint, CliError> {
    let doc = load_with_base(arg, "FN point")?;
    let p: FnPoint = serde_json::from_value(doc).map_err(|e| CliError::validation(format!("FN point: {e}")))?;
    p.validate()?;
    Ok(p)
}

fn decomposition_summary(d: &PantsDecomposition) -> Result<Value, CliError> {
    let s = d.validate()?;
    Ok(json!({
        "surface": s.to_string(),
        "name": s.name(),
        "digest": canonical_key(d, KeyOptions::default()).digest(),
        "census": to_value(&d.curve_census()),
    }))
}

fn dispatch(cmd: &Group) -> Reply {
    match cmd {
        Group::Surface(SurfaceCmd::Info { surface }) => {
            let s: Surface = surface.parse()?;
            let inv = s.invariants();
            let summary = format!("{}: chi {}, {} pants", s.name(), inv.chi, inv.pants_count);
            Ok((
                json!({"surface": s.to_string(), "name": s.name(), "invariants": to_value(&inv)}),
                summary,
            ))
        }
        Group::Pants(c) => pants_cmd(c),
        Group::Moves(c) => moves_cmd(c),
        Group::Dt(c) => dt_cmd(c),
        Group::K1(c) => k1_cmd(c),
        Group::Fn(c) => fn_cmd(c),
    }
}

fn pants_cmd(cmd: &PantsCmd) -> Reply {
    match cmd {
        PantsCmd::Validate { decomposition } | PantsCmd::Census { decomposition } => {
            let d = load_decomposition(decomposition)?;
            let doc = decomposition_summary(&d)?;
            let summary = format!("valid decomposition of {}", doc["name"].as_str().unwrap_or(""));
            Ok((doc, summary))
        }
        PantsCmd::Enumerate {
            pants: count,
            surface,
            punctures,
            key,
        } => {
            let constraint = surface.as_deref().map(str::parse::<Surface>).transpose()?;
            let opts = EnumerationOptions {
                key: key.options(),
                include_punctures: *punctures,
            };
            let types = pants::enumerate_types(*count, constraint.as_ref(), opts)?;
            let list: Vec<Value> = types
                .iter()
                .map(|d| {
                    let s = d.validate().expect("enumerated types are valid");
                    json!({
                        "digest": canonical_key(d, opts.key).digest(),
                        "surface": s.to_string(),
                        "one_sided": d.curve_census().one_sided,
                        "decomposition": to_value(d),
                    })
                })
                .collect();
            let summary = format!("{} types with {count} pants", list.len());
            Ok((
                json!({
                    "pants": count,
                    "surface": constraint.map(|s| s.to_string()),
                    "absorption": key.absorption == OnOff::On,
                    "punctures": punctures,
                    "count": list.len(),
                    "types": list,
                }),
                summary,
            ))
        }
    }
}

fn sequence_reply(seq: &MoveSequence, what: &str) -> Reply {
    let end = seq.replay()?;
    let summary = format!("{what}: {} moves", seq.len());
    Ok((
        json!({
            "length": seq.len(),
            "moves": to_value(&seq.moves),
            "start": to_value(&seq.start),
            "end": to_value(&end),
            "end_summary": decomposition_summary(&end)?,
        }),
        summary,
    ))
}

fn moves_cmd(cmd: &MovesCmd) -> Reply {
    match cmd {
        MovesCmd::List { decomposition } => {
            let d = load_decomposition(decomposition)?;
            d.validate()?;
            let list = moves::applicable_moves(&d);
            let summary = format!("{} applicable moves", list.len());
            Ok((json!({"moves": to_value(&list)}), summary))
        }
        MovesCmd::Apply {
            decomposition,
            moves: literals,
            file,
        } => {
            let d = load_decomposition(decomposition)?;
            d.validate()?;
            let mut all: Vec<String> = Vec::new();
            if let Some(f) = file {
                let text = fs::read_to_string(f).map_err(|e| CliError::validation(format!("{}: {e}", f.display())))?;
                all.extend(
                    text.lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty() && !l.starts_with('#'))
                        .map(String::from),
                );
            }
            all.extend(literals.iter().cloned());
            let parsed = all.iter().map(|l| l.parse::<Move>()).collect::<Result<Vec<_>, _>>()?;
            let seq = MoveSequence {
                start: d,
                moves: parsed,
            };
            sequence_reply(&seq, "applied")
        }
        MovesCmd::Path { from, to, budget, key } => {
            let (a, b) = (load_decomposition(from)?, load_decomposition(to)?);
            let seq = moves::find_move_path(
                &a,
                &b,
                SearchOptions {
                    key: key.options(),
                    budget: *budget,
                },
            )?;
            sequence_reply(&seq, "path")
        }
        MovesCmd::Graph {
            surface,
            pants: count,
            dot,
            key,
        } => {
            let s: Surface = surface.parse()?;
            let inv = s.invariants();
            if !inv.admits {
                return Err(CliError::validation(format!("{} has no pants decomposition", s.name())));
            }
            let count = count.unwrap_or(inv.pants_count as usize);
            let opts = EnumerationOptions {
                key: key.options(),
                include_punctures: s.punctures > 0,
            };
            let g = moves::build_move_graph(&s, count, opts)?;
            if let Some(path) = dot {
                fs::write(path, g.to_dot())
                    .map_err(|e| CliError::validation(format!("writing {}: {e}", path.display())))?;
            }
            let summary = format!(
                "{}: {} nodes, {} edges, {} components",
                s.name(),
                g.nodes.len(),
                g.edges.len(),
                g.components
            );
            Ok((to_value(&g), summary))
        }
        MovesCmd::Orientify { decomposition } => {
            let d = load_decomposition(decomposition)?;
            sequence_reply(&moves::orientify(&d)?, "orientify")
        }
        MovesCmd::Reduce { decomposition } => {
            let d = load_decomposition(decomposition)?;
            sequence_reply(&moves::reduce_crosscaps(&d)?, "reduce")
        }
    }
}

fn dt_cmd(cmd: &DtCmd) -> Reply {
    match cmd {
        DtCmd::Realizable { vector } => {
            let v = load_vector(vector)?;
            let r = v.realizable()?;
            let summary = if r.realizable { "realizable".into() } else { "not realizable".into() };
            Ok((to_value(&r), summary))
        }
        DtCmd::Decode { vector } => {
            let cs = dt::decode(&load_vector(vector)?)?;
            let summary = format!("{} arc systems", cs.pants.len());
            Ok((to_value(&cs), summary))
        }
        DtCmd::Encode { system } => {
            let doc = load_with_base(system, "curve system")?;
            let cs: CurveSystem =
                serde_json::from_value(doc).map_err(|e| CliError::validation(format!("curve system: {e}")))?;
            let v = dt::encode(&cs)?;
            Ok((to_value(&v), "encoded".into()))
        }
        DtCmd::Components { vector } => {
            let r = dt::components(&load_vector(vector)?)?;
            let summary = format!(
                "{} closed ({} 1-sided), {} arcs",
                r.closed(),
                r.one_sided(),
                r.arcs()
            );
            Ok((to_value(&r), summary))
        }
        DtCmd::Chart { vector } => {
            let c = dt::mf_chart(&load_vector(vector)?)?;
            let summary = format!("{} chart entries", c.values.len());
            Ok((to_value(&c), summary))
        }
        DtCmd::Project { vector } => {
            let p = dt::projectivize(&load_vector(vector)?)?;
            Ok((to_value(&p), "projectivized".into()))
        }
    }
}

fn k1_cmd(cmd: &K1Cmd) -> Reply {
    match cmd {
        K1Cmd::Neighbors { of, framing } => {
            if let Ok(n) = of.trim().parse::<i64>() {
                let nb = klein::neighbors(OneSidedCurve(n));
                let summary = format!("curve {n}: neighbors {} and {}", nb[0].0, nb[1].0);
                return Ok((json!({"curve": n, "neighbors": [nb[0].0, nb[1].0]}), summary));
            }
            let d: K1Decomposition = of.parse()?;
            let steps = klein::k1_move_adjacency(d, *framing);
            let summary = format!("{d}: {} moves", steps.len());
            Ok((json!({"from": d.to_string(), "steps": steps_json(&steps)}), summary))
        }
        K1Cmd::Path {
            from,
            to,
            radius,
            framing,
        } => {
            let (a, b): (K1Decomposition, K1Decomposition) = (from.parse()?, to.parse()?);
            let steps = klein::k1_path(a, b, *radius, *framing)?;
            let summary = format!("{a} -> {b}: {} moves", steps.len());
            Ok((
                json!({
                    "from": a.to_string(),
                    "to": b.to_string(),
                    "length": steps.len(),
                    "moves": steps.iter().map(|s| s.literal.clone()).collect::<Vec<_>>(),
                    "steps": steps_json(&steps),
                }),
                summary,
            ))
        }
    }
}

fn steps_json(steps: &[klein::K1Step]) -> Value {
    Value::Array(
        steps
            .iter()
            .map(|s| json!({"move": s.literal, "to": s.to.to_string()}))
            .collect(),
    )
}

fn parse_probes(text: &str) -> Result<Vec<Probe>, CliError> {
    let lines: Vec<String> = if text.trim_start().starts_with('[') {
        serde_json::from_str(text).map_err(|e| CliError::validation(format!("probe list: {e}")))?
    } else {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(String::from)
            .collect()
    };
    Ok(lines.iter().map(|l| l.parse()).collect::<Result<Vec<Probe>, _>>()?)
}

fn fn_cmd(cmd: &FnCmd) -> Reply {
    match cmd {
        FnCmd::Lengths { point, probes } => {
            let p = load_point(point)?;
            let probes = match probes {
                Some(f) => parse_probes(
                    &fs::read_to_string(f).map_err(|e| CliError::validation(format!("{}: {e}", f.display())))?,
                )?,
                None => hyperbolic::standard_probes(&p)?,
            };
            let values = hyperbolic::length_spectrum(&p, &probes)?;
            let hol = hyperbolic::Holonomy::new(&p)?;
            let summary = format!("{} probes", probes.len());
            Ok((
                json!({
                    "generators": hol.generator_names(),
                    "residual": hol.residual,
                    "spectrum": probes.iter().zip(&values).map(|(p, v)| json!({"probe": p.to_string(), "value": v})).collect::<Vec<_>>(),
                }),
                summary,
            ))
        }
        FnCmd::Y { point, site } => {
            let p = load_point(point)?;
            let site = match site {
                Some(s) => {
                    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
                    if parts.len() != 3 {
                        return Err(CliError::validation("site is cc_a,cc_b,curve"));
                    }
                    YSite {
                        crosscaps: [parts[0].into(), parts[1].into()],
                        curve: parts[2].into(),
                    }
                }
                None => {
                    let all = YSite::all(&p.base)?;
                    match all.as_slice() {
                        [one] => one.clone(),
                        _ => {
                            return Err(CliError::validation(format!(
                                "base has {} sites; pick one with --site",
                                all.len()
                            )))
                        }
                    }
                }
            };
            let q = hyperbolic::y_action(&p, &site)?;
            let det = hyperbolic::Jacobian::of_y(&p.base, &site)?.determinant();
            Ok((
                json!({"site": to_value(&site), "point": to_value(&q), "jacobian_determinant": [det.0, det.1]}),
                format!("Y at {}", site.curve),
            ))
        }
        FnCmd::TwistAsymptote {
            point,
            curve,
            probe,
            steps,
        } => {
            let p = load_point(point)?;
            let fit = hyperbolic::twist_flow_asymptotics(&p, curve, &probe.parse()?, *steps)?;
            let summary = format!("slope {:.6} = {:.6} x ell", fit.slope, fit.slope / fit.ell);
            Ok((to_value(&fit), summary))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn npants(args: &[&str]) -> Outcome {
        run(std::iter::once("npants").chain(args.iter().copied()))
    }

    #[test]
    fn surface_info() {
        let o = npants(&["surface", "info", "N(2,1)"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["invariants"]["chi"], -1);
        assert_eq!(v["invariants"]["max_crosscaps"], 2);
        assert_eq!(npants(&["surface", "info", "N(0,1)"]).code, EXIT_VALIDATION);
    }

    #[test]
    fn enumerate_one_pants() {
        let o = npants(&["pants", "enumerate", "--pants", "1"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["count"], 8);
        let o = npants(&["--jobs", "1", "pants", "enumerate", "--pants", "1", "--absorption", "on"]);
        let w: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(w["count"], 7);
    }

    #[test]
    fn exit_codes() {
        let k1 = pants::standard::k1_two_crosscaps().to_json();
        assert_eq!(npants(&["moves", "apply", &k1, "IVsplit@v0"]).code, EXIT_UNREALIZABLE);
        assert_eq!(npants(&["moves", "apply", &k1, "bogus"]).code, EXIT_VALIDATION);
        let vec = r#"{"kind":"int","base":{"pants":1,"edges":[],"leaves":[{"at":[0,0],"kind":"crosscap","label":"cc0"},{"at":[0,1],"kind":"crosscap","label":"cc1"},{"at":[0,2],"kind":"boundary","label":"b0"}]},"n":{"cc0":1,"cc1":0},"mt":{"b0":[1,0]}}"#;
        assert_eq!(npants(&["dt", "decode", vec]).code, EXIT_UNREALIZABLE);
        assert_eq!(npants(&["nonsense"]).code, EXIT_VALIDATION);
    }

    #[test]
    fn k1_commands() {
        let o = npants(&["k1", "path", "Pair:0", "C2"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["moves"], json!(["IVmerge@v0"]));
        let o = npants(&["k1", "neighbors", "-3"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["neighbors"], json!([-4, -2]));
    }
}
