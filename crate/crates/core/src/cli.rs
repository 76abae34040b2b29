//! The `onionpeel` command line. [`run`] is the whole program minus process
//! plumbing, so it can be driven in-process.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::branch::{compute_width, decompose_pipeline, treewidth_bound, BranchError, BranchJson};
use crate::embedding::{parse_epg, to_dot, write_epg, EmbedError, Embedding, VertexId};
use crate::generators::{Family, GadgetSpec, GenError};
use crate::oracles::{
    brute_branchwidth, brute_outerplanarity, certify_theorem1, OracleBudget, OracleError,
};
use crate::peel::{
    build_rooted_forest, onion_peels, saturate_inward_neighbors, verify_forest_bound, PeelError,
    RootedForest,
};
use crate::triangulate::{
    to_full_triangulation, to_triangulated_disk, DiskConversionTrace, Stage, TriangulateError,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("Io: {0}")]
    Io(String),
    #[error("Json: {0}")]
    Json(String),
    #[error("VerifyFailed: {0}")]
    Verify(String),
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Peel(#[from] PeelError),
    #[error(transparent)]
    Triangulate(#[from] TriangulateError),
    #[error(transparent)]
    Branch(#[from] BranchError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "onionpeel",
    version,
    about = "Triangulate k-outerplanar graphs and build branch decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct Io {
    /// Input EPG file (default: stdin)
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Output file (default: stdout)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated embedding as EPG
    Gen {
        family: String,
        parameter: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Ring width for random-kouter
        #[arg(long, default_value_t = 5)]
        width: u32,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Also write Graphviz DOT here
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Onion peels as JSON
    Peel(#[command(flatten)] Io),
    /// Rooted BFS forest of the saturated embedding as JSON
    Forest(#[command(flatten)] Io),
    /// Convert to a triangulated disk without adding peels
    Disk(Convert),
    /// Convert to a full triangulation with at most one extra peel
    Triangulate(Convert),
    /// Branch decomposition JSON
    Bd(#[command(flatten)] Io),
    /// Disk, forest, branch decomposition and bounds in one report
    Pipeline {
        #[command(flatten)]
        io: Io,
        /// Include wall-clock timings (makes output nondeterministic)
        #[arg(long)]
        timings: bool,
    },
    /// Exhaustive oracles
    Oracle {
        #[arg(value_enum)]
        which: OracleKind,
        #[command(flatten)]
        io: Io,
        /// Gadget size for theorem1
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 9)]
        budget_edges: usize,
        #[arg(long, default_value_t = 7)]
        budget_vertices: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget_chords: u64,
        /// Allow theorem1 with k >= 3
        #[arg(long)]
        slow: bool,
    },
    /// Re-check an EPG file and optionally a JSON artifact against it
    Verify {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Convert {
    #[command(flatten)]
    io: Io,
    /// Write the trace JSON here
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write Graphviz DOT of the result here
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OracleKind {
    Bw,
    Outerplanarity,
    Theorem1,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
struct PeelJson {
    k: usize,
    layers: Vec<Vec<VertexId>>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
struct ForestJson {
    k: usize,
    height: usize,
    roots: BTreeSet<VertexId>,
    parent: BTreeMap<VertexId, VertexId>,
}

/// Headline numbers of `pipeline`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub input_sha256: String,
    pub vertices: usize,
    pub edges: usize,
    pub k_in: usize,
    pub k_out: usize,
    pub forest_height: usize,
    pub bd_width: usize,
    pub width_bound: usize,
    pub tw_bound: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn read_input(&mut self, io: &Io) -> Result<String, CliError> {
        match &io.input {
            Some(p) => std::fs::read_to_string(p)
                .map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
            None => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
                Ok(s)
            }
        }
    }

    fn emit(&mut self, out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
        match out {
            Some(p) => write_file(p, text),
            None => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(format!("stdout: {e}"))),
        }
    }
}

fn write_file(p: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn forest_of(emb: &Embedding) -> Result<(Embedding, RootedForest), CliError> {
    let saturated = saturate_inward_neighbors(emb);
    let forest = build_rooted_forest(&saturated)?;
    Ok((saturated, forest))
}

fn pipeline_report(text: &str, emb: &Embedding, timings: bool) -> Result<RunReport, CliError> {
    let t0 = Instant::now();
    let d = decompose_pipeline(emb)?;
    let elapsed = t0.elapsed().as_secs_f64() * 1e3;
    let c = d.certificate;
    let report = RunReport {
        command: "pipeline".into(),
        input_sha256: sha256_hex(text.as_bytes()),
        vertices: emb.vertex_count(),
        edges: emb.edge_count(),
        k_in: d.conversion.trace.k_in,
        k_out: d.conversion.trace.k_out,
        forest_height: c.forest_height,
        bd_width: c.width,
        width_bound: c.width_bound,
        tw_bound: c.tw_bound,
        timings_ms: timings.then(|| BTreeMap::from([("total".to_string(), elapsed)])),
    };
    if report.k_out > report.k_in
        || report.bd_width > 2 * report.k_in
        || report.tw_bound + 1 > 3 * report.k_in.max(1)
    {
        return Err(CliError::Branch(BranchError::BoundViolated(format!(
            "{report:?}"
        ))));
    }
    Ok(report)
}

fn convert(ctx: &mut Ctx, args: &Convert, full: bool) -> Result<(), CliError> {
    let emb = parse_epg(&ctx.read_input(&args.io)?)?;
    let (result, trace) = if full {
        let t = to_full_triangulation(&emb)?;
        (t.triangulation, t.trace)
    } else {
        let d = to_triangulated_disk(&emb)?;
        (d.disk, d.trace)
    };
    ctx.emit(args.io.out.as_ref(), &write_epg(&result))?;
    if let Some(p) = &args.json {
        write_file(p, &json(&trace)?)?;
    }
    if let Some(p) = &args.dot {
        write_file(p, &to_dot(&result))?;
    }
    Ok(())
}

fn verify_failed(msg: impl Into<String>) -> CliError {
    CliError::Verify(msg.into())
}

fn verify_artifact(emb: &Embedding, text: &str) -> Result<&'static str, CliError> {
    let value: Value = serde_json::from_str(text)?;
    let has = |key: &str| value.get(key).is_some();
    if has("nodes") {
        let claimed: BranchJson = serde_json::from_value(value)?;
        let bd = claimed.decomposition()?;
        let assigned: BTreeSet<_> = bd.assignment().keys().copied().collect();
        if assigned != emb.edges().into_iter().collect() {
            return Err(verify_failed(
                "assignment does not cover exactly the graph's edges",
            ));
        }
        let (width, _) = compute_width(&bd);
        if width != claimed.width {
            return Err(verify_failed(format!(
                "claimed width {}, recomputed {width}",
                claimed.width
            )));
        }
        if width > claimed.bounds.two_h || claimed.bounds.tw != treewidth_bound(width) {
            return Err(verify_failed("bounds disagree with width"));
        }
        Ok("branch-decomposition")
    } else if has("added") {
        let trace: DiskConversionTrace = serde_json::from_value(value)?;
        let full = trace.added.iter().any(|a| a.stage == Stage::Apex);
        if let Some(a) = trace.added.iter().find(|a| !emb.are_adjacent(a.u, a.v)) {
            return Err(verify_failed(format!(
                "added edge {}-{} missing from graph",
                a.u, a.v
            )));
        }
        let shape_ok = if full {
            emb.is_triangulation()
        } else {
            emb.is_triangulated_disk()
        };
        if !shape_ok {
            return Err(verify_failed(
                "graph is not the claimed kind of triangulation",
            ));
        }
        let k = onion_peels(emb).k();
        let limit = trace.k_in + usize::from(full);
        if k != trace.k_out || k > limit {
            return Err(verify_failed(format!(
                "{k} peels; trace claims {} from {}",
                trace.k_out, trace.k_in
            )));
        }
        Ok(if full {
            "triangulation-trace"
        } else {
            "disk-trace"
        })
    } else if has("layers") {
        let claimed: PeelJson = serde_json::from_value(value)?;
        let peels = onion_peels(emb);
        if claimed.k != peels.k() || claimed.layers != peels.layers() {
            return Err(verify_failed("peels differ"));
        }
        Ok("peels")
    } else if has("parent") {
        let claimed: ForestJson = serde_json::from_value(value)?;
        let saturated = saturate_inward_neighbors(emb);
        let forest = RootedForest::from_parents(saturated.vertices(), claimed.parent.clone())?;
        let bound = verify_forest_bound(&saturated, &forest)?;
        if bound.height != claimed.height
            || bound.k != claimed.k
            || forest.roots() != &claimed.roots
        {
            return Err(verify_failed("forest summary differs"));
        }
        Ok("forest")
    } else if has("input_sha256") {
        let claimed: RunReport = serde_json::from_value(value)?;
        let mut fresh = pipeline_report(&write_epg(emb), emb, false)?;
        fresh.input_sha256 = claimed.input_sha256.clone();
        fresh.timings_ms = claimed.timings_ms.clone();
        if fresh != claimed {
            return Err(verify_failed("pipeline numbers differ"));
        }
        Ok("run-report")
    } else {
        Err(verify_failed("unrecognised artifact"))
    }
}

fn dispatch(ctx: &mut Ctx, cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen {
            family,
            parameter,
            seed,
            width,
            out,
            dot,
        } => {
            let family: Family = family
                .parse()
                .map_err(|e: GenError| CliError::Usage(e.to_string()))?;
            let emb = GadgetSpec {
                family,
                parameter,
                width,
                seed,
            }
            .build()?;
            ctx.emit(out.as_ref(), &write_epg(&emb))?;
            if let Some(p) = dot {
                write_file(&p, &to_dot(&emb))?;
            }
            Ok(())
        }
        Command::Peel(io) => {
            let emb = parse_epg(&ctx.read_input(&io)?)?;
            let p = onion_peels(&emb);
            let out = PeelJson {
                k: p.k(),
                layers: p.layers().to_vec(),
            };
            ctx.emit(io.out.as_ref(), &json(&out)?)
        }
        Command::Forest(io) => {
            let emb = parse_epg(&ctx.read_input(&io)?)?;
            let (saturated, forest) = forest_of(&emb)?;
            let bound = verify_forest_bound(&saturated, &forest)?;
            let out = ForestJson {
                k: bound.k,
                height: bound.height,
                roots: forest.roots().clone(),
                parent: forest.parents().clone(),
            };
            ctx.emit(io.out.as_ref(), &json(&out)?)
        }
        Command::Disk(args) => convert(ctx, &args, false),
        Command::Triangulate(args) => convert(ctx, &args, true),
        Command::Bd(io) => {
            let emb = parse_epg(&ctx.read_input(&io)?)?;
            let d = decompose_pipeline(&emb)?;
            ctx.emit(
                io.out.as_ref(),
                &json(&BranchJson::new(&d.tree, &d.certificate))?,
            )
        }
        Command::Pipeline { io, timings } => {
            let text = ctx.read_input(&io)?;
            let emb = parse_epg(&text)?;
            let report = pipeline_report(&text, &emb, timings)?;
            ctx.emit(io.out.as_ref(), &json(&report)?)
        }
        Command::Oracle {
            which,
            io,
            k,
            budget_edges,
            budget_vertices,
            budget_chords,
            slow,
        } => {
            let budget = OracleBudget {
                max_edges: budget_edges,
                max_vertices: budget_vertices,
                max_chord_sets: budget_chords,
            };
            let report = match which {
                OracleKind::Bw => {
                    let g = parse_epg(&ctx.read_input(&io)?)?.graph();
                    serde_json::json!({"edges": g.edge_count(), "branchwidth": brute_branchwidth(&g, &budget)?})
                }
                OracleKind::Outerplanarity => {
                    let g = parse_epg(&ctx.read_input(&io)?)?.graph();
                    serde_json::json!({"vertices": g.vertex_count(), "outerplanarity": brute_outerplanarity(&g, &budget)?})
                }
                OracleKind::Theorem1 => {
                    if k >= 3 && !slow {
                        return Err(CliError::Usage(format!(
                            "theorem1 with k = {k} needs --slow"
                        )));
                    }
                    let r = certify_theorem1(k, &budget)?;
                    let holds = r.holds;
                    ctx.emit(io.out.as_ref(), &json(&r)?)?;
                    if !holds {
                        return Err(verify_failed(format!("theorem1 not certified for k = {k}")));
                    }
                    return Ok(());
                }
            };
            ctx.emit(io.out.as_ref(), &json(&report)?)
        }
        Command::Verify { io, json: artifact } => {
            let emb = parse_epg(&ctx.read_input(&io)?)?;
            emb.validate()?;
            let checked = match &artifact {
                Some(p) => {
                    let text = std::fs::read_to_string(p)
                        .map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
                    verify_artifact(&emb, &text)?
                }
                None => "embedding",
            };
            let out = serde_json::json!({
                "ok": true,
                "checked": checked,
                "vertices": emb.vertex_count(),
                "edges": emb.edge_count(),
                "faces": emb.face_count(),
                "k": onion_peels(&emb).k(),
            });
            ctx.emit(io.out.as_ref(), &json(&out)?)
        }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code: 0 on success, 1 on domain errors, 2 on usage errors.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut ctx = Ctx { stdin, stdout };
    match dispatch(&mut ctx, cli) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("onionpeel").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gen_then_peel() {
        let (code, epg, _) = call(&["gen", "nested-triangles", "3"], "");
        assert_eq!(code, 0);
        let (code, out, _) = call(&["peel"], &epg);
        assert_eq!(code, 0);
        let p: PeelJson = serde_json::from_str(&out).unwrap();
        assert_eq!(p.k, 3);
    }

    #[test]
    fn malformed_input_is_a_domain_error() {
        let (code, _, err) = call(&["peel"], "epg 1\nv 0: 1\nv 1:\n");
        assert_eq!(code, 1);
        assert!(err.contains("AsymmetricAdjacency"), "{err}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"], "").0, 2);
        assert_eq!(call(&["gen", "no-such-family", "3"], "").0, 2);
        assert_eq!(call(&["oracle", "theorem1", "--k", "3"], "").0, 2);
    }

    #[test]
    fn pipeline_on_counterexample() {
        let (_, epg, _) = call(&["gen", "counterexample", "2"], "");
        let (code, out, _) = call(&["pipeline"], &epg);
        assert_eq!(code, 0);
        let r: RunReport = serde_json::from_str(&out).unwrap();
        assert_eq!(r.k_in, 2);
        assert!(r.bd_width <= 4 && r.tw_bound <= 5);
        assert!(r.timings_ms.is_none());
    }

    #[test]
    fn triangulating_a_square_adds_a_peel() {
        let dir = std::env::temp_dir().join(format!("onionpeel-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let trace = dir.join("trace.json");
        let (_, epg, _) = call(&["gen", "cycle", "4"], "");
        let (code, out, _) = call(&["triangulate", "--json", trace.to_str().unwrap()], &epg);
        assert_eq!(code, 0);
        let t: DiskConversionTrace =
            serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
        assert_eq!((t.k_in, t.k_out), (1, 2));
        let (code, v, err) = call(&["verify", "--json", trace.to_str().unwrap()], &out);
        assert_eq!(code, 0, "{err}");
        assert!(v.contains("triangulation-trace"));
        std::fs::remove_dir_all(dir).unwrap();
    }
}
