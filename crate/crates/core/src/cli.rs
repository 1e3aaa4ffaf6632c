//! Command-line surface. `run` never panics on bad input: it returns the
//! report text together with an exit code (0 pass, 1 verification failure,
//! 2 structural error).

use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::collections::{
    build_collection, cross_check_endomorphism_algebra, fullness_rank_check, verify_strong_exceptional,
    BoundaryChoice, Collection,
};
use crate::dimer::{check_consistency, validate_dimer, zigzag_paths, DimerModel};
use crate::error::{Error, Result};
use crate::figures::emit_figures;
use crate::fixtures;
use crate::io::parse_dimer;
use crate::lattice::Lat2;
use crate::matchings::classify_matchings;
use crate::path_algebra::PathAlgebra;
use crate::superpotential::{a0_dim_truncated, curved_diagram, render_word, small_cycle, superpotential_centrality};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "dimer-tilt", version, about = "Dimer models, their quivers and toric tilting bundles")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the fallback figure layout; never affects results.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Interior lattice point to use as origin, as `x,y`.
    #[arg(long, global = true, value_parser = parse_point)]
    pub origin: Option<Lat2>,
}

#[derive(Clone, Debug, Args)]
pub struct Input {
    /// A dimer document, or the name of a bundled fixture (c3, dp0, f0, f1, wf1).
    pub input: String,
}

#[derive(Clone, Debug, Args)]
pub struct CollectionArgs {
    #[command(flatten)]
    pub input: Input,
    /// Perfect matching at the origin; defaults to the first central candidate.
    #[arg(long)]
    pub pm: Option<String>,
    /// Matching at a boundary point shared by several, as `x,y=pmK`.
    #[arg(long = "boundary", value_parser = parse_boundary)]
    pub boundary: Vec<(Lat2, String)>,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Torus invariants and zig-zag consistency.
    Validate(Input),
    /// The dual quiver with its relations.
    Quiver(Input),
    /// Zig-zag paths and their classes.
    Zigzag(Input),
    /// Perfect matchings, classes and their classification.
    Matchings(Input),
    /// The characteristic polygon.
    Polygon(Input),
    /// The line bundle collection for a central matching.
    Collection(CollectionArgs),
    /// Strong exceptionality of the collection.
    Verify(CollectionArgs),
    /// Compare End of the collection with the quotient of the path algebra.
    Crosscheck(CollectionArgs),
    /// Small cycles, centrality and truncated dimensions of A/(W).
    Superpotential {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        lift_bound: i64,
    },
    /// The diagram of curved algebras attached to edges and nodes.
    CurvedDiagram(Input),
    /// Summary of the whole pipeline, optionally writing SVG figures.
    Report {
        #[command(flatten)]
        args: CollectionArgs,
        #[arg(long)]
        figures: bool,
        /// Directory for figures.
        #[arg(long, default_value = "figures")]
        out: PathBuf,
    },
}

fn parse_point(s: &str) -> std::result::Result<Lat2, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected `x,y`, got `{s}`"))?;
    let p = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"));
    Ok(Lat2::new(p(x)?, p(y)?))
}

fn parse_boundary(s: &str) -> std::result::Result<(Lat2, String), String> {
    let (pt, pm) = s.split_once('=').ok_or_else(|| format!("expected `x,y=pmK`, got `{s}`"))?;
    Ok((parse_point(pt)?, pm.trim().to_owned()))
}

/// Result of a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Inconsistent(_) | Error::InfiniteDimension(_) | Error::UnboundedSupport { .. } => 1,
        _ => 2,
    }
}

/// Reads a document from disk, falling back to a bundled fixture name.
pub fn load_input(input: &str) -> Result<DimerModel> {
    match std::fs::read_to_string(input) {
        Ok(doc) => parse_dimer(&doc),
        Err(e) => match fixtures::document(input) {
            Some(_) => fixtures::load(input),
            None => Err(Error::Config(format!("cannot read `{input}`: {e}"))),
        },
    }
}

pub fn run(config: &RunConfig) -> Outcome {
    match execute(config) {
        Ok((code, output)) => Outcome { code, output },
        Err(e) => Outcome {
            code: exit_code(&e),
            output: match config.format {
                Format::Json => format!("{}\n", serde_json::json!({ "error": e.to_string() })),
                Format::Text => format!("error: {e}\n"),
            },
        },
    }
}

fn emit<T: Serialize>(config: &RunConfig, value: &T, text: impl FnOnce() -> String) -> String {
    match config.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => text(),
    }
}

fn pick_d0(alg: &PathAlgebra, pm: Option<&str>, origin: Option<Lat2>) -> Result<usize> {
    match pm {
        Some(id) => alg.matchings.index_of(id),
        None => {
            let rep = classify_matchings(&alg.matchings, origin)?;
            alg.matchings.index_of(&rep.central_candidates[0])
        }
    }
}

fn boundary_choice(alg: &PathAlgebra, pairs: &[(Lat2, String)]) -> Result<BoundaryChoice> {
    if pairs.is_empty() {
        return Ok(BoundaryChoice::FirstVerifying);
    }
    let mut map = BTreeMap::new();
    for (p, id) in pairs {
        map.insert(*p, alg.matchings.index_of(id)?);
    }
    Ok(BoundaryChoice::Explicit(map))
}

fn collection_for(config: &RunConfig, args: &CollectionArgs) -> Result<(DimerModel, PathAlgebra, Collection)> {
    let model = load_input(&args.input.input)?;
    let alg = PathAlgebra::new(&model)?;
    let d0 = pick_d0(&alg, args.pm.as_deref(), config.origin)?;
    let choice = boundary_choice(&alg, &args.boundary)?;
    let c = build_collection(&alg, d0, &choice)?;
    Ok((model, alg, c))
}

fn table(rows: &[Vec<u64>]) -> String {
    let mut s = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        let _ = writeln!(s, "  {}", cells.join(" "));
    }
    s
}

fn execute(config: &RunConfig) -> Result<(i32, String)> {
    match &config.command {
        Command::Validate(Input { input }) => {
            let model = load_input(input)?;
            let v = validate_dimer(&model)?;
            let c = check_consistency(&model);
            let code = if v.passed && c.passed { 0 } else { 1 };
            #[derive(Serialize)]
            struct Out<'a> {
                validation: &'a crate::dimer::ValidationReport,
                consistency: &'a crate::dimer::ConsistencyReport,
            }
            let out = emit(config, &Out { validation: &v, consistency: &c }, || {
                let mut s = format!(
                    "nodes {}+{}, edges {}, faces {}, euler {}\n",
                    v.blacks, v.whites, v.edges, v.faces, v.euler_characteristic
                );
                for x in v.violations.iter().chain(&c.failures) {
                    let _ = writeln!(s, "FAIL {x}");
                }
                for x in &v.warnings {
                    let _ = writeln!(s, "warning: {x}");
                }
                let _ = writeln!(s, "{}", if code == 0 { "valid and consistent" } else { "failed" });
                s
            });
            Ok((code, out))
        }
        Command::Quiver(Input { input }) => {
            let alg = PathAlgebra::new(&load_input(input)?)?;
            let q = &alg.quiver;
            let out = emit(config, q, || {
                let mut s = format!("{} vertices, {} arrows\n", q.num_vertices, q.arrows.len());
                for a in &q.arrows {
                    let _ = writeln!(
                        s,
                        "a{}: {} -> {}  p+ = {:?}  p- = {:?}",
                        a.id, a.source, a.target, q.p_plus[a.id], q.p_minus[a.id]
                    );
                }
                s
            });
            Ok((0, out))
        }
        Command::Zigzag(Input { input }) => {
            let model = load_input(input)?;
            let zz = zigzag_paths(&model);
            let out = emit(config, &zz, || {
                let mut s = String::new();
                for (i, z) in zz.iter().enumerate() {
                    let edges: Vec<&str> = z.edges().map(|e| model.edges()[e].id.as_str()).collect();
                    let _ = writeln!(s, "z{i}: class {}  edges {}", z.class, edges.join(" "));
                }
                let total: Lat2 = zz.iter().map(|z| z.class).sum();
                let _ = writeln!(s, "sum of classes {total}");
                s
            });
            Ok((0, out))
        }
        Command::Matchings(Input { input }) => {
            let alg = PathAlgebra::new(&load_input(input)?)?;
            let data = &alg.matchings;
            let rep = classify_matchings(data, config.origin);
            #[derive(Serialize)]
            struct Out<'a> {
                matchings: &'a crate::matchings::MatchingData,
                classification: Option<&'a crate::matchings::ClassificationReport>,
                classification_error: Option<String>,
            }
            let out = emit(
                config,
                &Out {
                    matchings: data,
                    classification: rep.as_ref().ok(),
                    classification_error: rep.as_ref().err().map(|e| e.to_string()),
                },
                || {
                    let mut s = String::new();
                    for (m, c) in data.matchings.iter().zip(&data.classes) {
                        let _ = writeln!(s, "{}: class {c}  edges {:?}", m.id, m.edges);
                    }
                    match &rep {
                        Ok(r) => {
                            let _ = writeln!(s, "origin {}, central candidates {}", r.origin, r.central_candidates.join(" "));
                            for n in &r.notes {
                                let _ = writeln!(s, "note: {n}");
                            }
                        }
                        Err(e) => {
                            let _ = writeln!(s, "classification: {e}");
                        }
                    }
                    s
                },
            );
            Ok((0, out))
        }
        Command::Polygon(Input { input }) => {
            let alg = PathAlgebra::new(&load_input(input)?)?;
            let p = &alg.matchings.polygon;
            let out = emit(config, p, || {
                let mut s = String::new();
                let _ = writeln!(s, "vertices {:?}", p.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>());
                let _ = writeln!(s, "twice area {}", p.twice_area);
                for (pt, m) in &p.multiplicities {
                    let _ = writeln!(s, "{pt}: {m}{}", if p.interior.contains(pt) { " (interior)" } else { "" });
                }
                s
            });
            Ok((0, out))
        }
        Command::Collection(args) => {
            let (_, _, c) = collection_for(config, args)?;
            let out = emit(config, &c, || {
                let mut s = format!("d0 = {}, rays {:?}\n", c.d0, c.fan.rays.iter().map(|v| v.to_string()).collect::<Vec<_>>());
                let _ = writeln!(s, "boundary matchings {}", c.boundary_matchings.join(" "));
                for (v, b) in c.bundles.iter().enumerate() {
                    let _ = writeln!(s, "E{v}: {:?}  normal form {:?}", b.coefficients, b.normal_form);
                }
                s
            });
            Ok((0, out))
        }
        Command::Verify(args) => {
            let (_, _, c) = collection_for(config, args)?;
            let r = verify_strong_exceptional(&c)?;
            let code = if r.pass { 0 } else { 1 };
            let out = emit(config, &r, || {
                let mut s = format!("Hom dimensions:\n{}", table(&r.hom));
                let _ = writeln!(s, "order {:?}", r.order);
                for f in &r.failures {
                    let _ = writeln!(s, "FAIL {} at {:?} (support {:?})", f.reason, f.pair, f.support);
                }
                let _ = writeln!(s, "{}", if r.pass { "pass: strong exceptional collection" } else { "fail" });
                s
            });
            Ok((code, out))
        }
        Command::Crosscheck(args) => {
            let (_, alg, c) = collection_for(config, args)?;
            let x = cross_check_endomorphism_algebra(&alg, &c)?;
            let code = if x.equal { 0 } else { 1 };
            let out = emit(config, &x, || {
                let mut s = format!("path algebra quotient:\n{}", table(&x.path_table.dims));
                let _ = write!(s, "line bundles:\n{}", table(&x.toric_table.dims));
                match &x.first_mismatch {
                    None => {
                        let _ = writeln!(s, "tables equal, total dimension {}", x.path_table.total());
                    }
                    Some(m) => {
                        let _ = writeln!(
                            s,
                            "mismatch at {:?}: path side {}, bundle side {}",
                            m.pair, m.path_side, m.toric_side
                        );
                    }
                }
                s
            });
            Ok((code, out))
        }
        Command::Superpotential { input, lift_bound } => {
            let alg = PathAlgebra::new(&load_input(&input.input)?)?;
            let cycles = (0..alg.num_vertices())
                .map(|v| small_cycle(&alg, v))
                .collect::<Result<Vec<_>>>()?;
            let central = superpotential_centrality(&alg)?;
            let n = alg.num_vertices();
            let mut a0 = vec![vec![0u64; n]; n];
            for (i, row) in a0.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell = a0_dim_truncated(&alg, i, j, *lift_bound)?.count;
                }
            }
            #[derive(Serialize)]
            struct Out<'a> {
                small_cycles: &'a [crate::superpotential::SmallCycle],
                centrality: &'a crate::superpotential::CentralityReport,
                lift_bound: i64,
                a0_truncated: &'a [Vec<u64>],
            }
            let code = if central.pass { 0 } else { 1 };
            let out = emit(
                config,
                &Out {
                    small_cycles: &cycles,
                    centrality: &central,
                    lift_bound: *lift_bound,
                    a0_truncated: &a0,
                },
                || {
                    let mut s = String::new();
                    for c in &cycles {
                        let _ = writeln!(s, "omega_{}: {}  arrows {:?}", c.vertex, c.class, c.path.arrows);
                    }
                    let _ = writeln!(
                        s,
                        "W central: {}{}",
                        central.pass,
                        if central.pass { String::new() } else { format!(" (arrows {:?})", central.witnesses) }
                    );
                    let _ = write!(s, "dim A0(i, j) with |lift| <= {lift_bound}:\n{}", table(&a0));
                    s
                },
            );
            Ok((code, out))
        }
        Command::CurvedDiagram(Input { input }) => {
            let model = load_input(input)?;
            let d = curved_diagram(&model);
            let code = if d.well_formed() { 0 } else { 1 };
            let out = emit(config, &d, || {
                let mut s = String::new();
                for o in d.edge_objects.iter().chain(&d.node_objects) {
                    let terms: Vec<String> = o.curvature.iter().map(|t| render_word(t)).collect();
                    let _ = writeln!(s, "{}: {} vertices, W = {}", o.name, o.vertices.len(), terms.join(" + "));
                }
                for m in &d.morphisms {
                    let _ = writeln!(
                        s,
                        "F({}) -> F({}) at {}: a -> {}, p -> {}",
                        m.edge,
                        m.node,
                        m.position,
                        render_word(&m.image_a),
                        render_word(&m.image_p)
                    );
                }
                for p in &d.problems {
                    let _ = writeln!(s, "FAIL {p}");
                }
                s
            });
            Ok((code, out))
        }
        Command::Report { args, figures, out } => report(config, args, *figures, out),
    }
}

fn report(config: &RunConfig, args: &CollectionArgs, figures: bool, dir: &PathBuf) -> Result<(i32, String)> {
    let model = load_input(&args.input.input)?;
    let alg = PathAlgebra::new(&model)?;
    let v = validate_dimer(&model)?;
    let cons = check_consistency(&model);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "dimer: {} black, {} white, {} edges, {} faces; valid {}, consistent {}",
        v.blacks, v.whites, v.edges, v.faces, v.passed, cons.passed
    );
    let poly = &alg.matchings.polygon;
    let _ = writeln!(
        s,
        "polygon: {} matchings, twice area {}, {} interior points",
        alg.num_matchings(),
        poly.twice_area,
        poly.interior.len()
    );
    let mut code = if v.passed && cons.passed { 0 } else { 1 };
    let mut verification = None;
    let pipeline = pick_d0(&alg, args.pm.as_deref(), config.origin).and_then(|d0| {
        let c = build_collection(&alg, d0, &boundary_choice(&alg, &args.boundary)?)?;
        let r = verify_strong_exceptional(&c)?;
        let x = cross_check_endomorphism_algebra(&alg, &c)?;
        let f = fullness_rank_check(&c, &model, &alg)?;
        Ok((c, r, x, f))
    });
    match pipeline {
        Ok((c, r, x, f)) => {
            let _ = writeln!(s, "collection for {}: {} bundles", c.d0, c.len());
            let _ = writeln!(s, "strong exceptional: {} (order {:?})", r.pass, r.order);
            let _ = writeln!(s, "End cross-check: {} (total {})", x.equal, x.path_table.total());
            let _ = writeln!(
                s,
                "rank check: {} bundles, {} faces, twice area {}: {}",
                f.bundles, f.faces, f.twice_area, f.holds
            );
            for fl in &r.failures {
                let _ = writeln!(s, "FAIL {} at {:?}", fl.reason, fl.pair);
            }
            if !(r.pass && x.equal && f.holds) {
                code = 1;
            }
            verification = Some(r);
        }
        Err(e) => {
            let _ = writeln!(s, "collection: {e}");
            code = code.max(exit_code(&e));
        }
    }
    if figures {
        let figs = emit_figures(&model, poly, &alg.quiver, verification.as_ref(), config.seed)?;
        std::fs::create_dir_all(dir).map_err(|e| Error::Config(format!("cannot create {}: {e}", dir.display())))?;
        for f in &figs {
            let path = dir.join(format!("{}.svg", f.name));
            std::fs::write(&path, &f.svg).map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
            let _ = writeln!(s, "wrote {}", path.display());
        }
    }
    if config.format == Format::Json {
        #[derive(Serialize)]
        struct Out<'a> {
            summary: Vec<&'a str>,
            exit_code: i32,
        }
        return Ok((
            code,
            emit(config, &Out { summary: s.lines().collect(), exit_code: code }, String::new),
        ));
    }
    Ok((code, s))
}
