use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use flipdist::census::{aggregate, run_census, write_csv, CensusOptions, ClassMode, DEFAULT_MAX_CENSUS_SIZE};
use flipdist::combinatorics::{Chord, PairProblem, Triangulation};
use flipdist::conflict::{
    classify_edges, conflict_count, conflicts, distance_lower_bound, exists_conflict_monotone_geodesic,
    first_step_conflict_behavior, greedy_path, neighbor_conflict_profile, TieRule,
};
use flipdist::constructions::{construct, pad_with_common_triangles, FAMILIES};
use flipdist::flip_graph::{all_geodesics, distance, geodesic_first_moves, neighbors, FlipPath};
use flipdist::io::{format_chord_list, parse_triangulation, render_svg, RenderStyle};

/// Flip distance, edge conflicts and greedy conflict reduction for
/// triangulations of a marked polygon.
///
/// Triangulations are given as tree words ("10100") or chord lists
/// ("0-2,0-3", with "r" for the root vertex). Commands taking a pair read it
/// from standard input, one triangulation per line, when it is omitted.
#[derive(Parser)]
#[command(name = "flipdist", version)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PairArgs {
    /// Source triangulation.
    source: Option<String>,
    /// Target triangulation.
    target: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the tree word of a triangulation.
    Encode { triangulation: String },
    /// Print the chords of a triangulation.
    Decode { triangulation: String },
    /// Exact flip distance.
    Distance(PairArgs),
    /// Crossing pairs between the two triangulations.
    Conflicts(PairArgs),
    /// All single-flip neighbors.
    Neighbors {
        triangulation: String,
        /// Also report each neighbor's conflicts with this triangulation.
        #[arg(long)]
        target: Option<String>,
    },
    /// Greedy conflict-reduction walk from source to target.
    Greedy {
        #[command(flatten)]
        pair: PairArgs,
        /// Tie rule among minimal neighbors: lex or first.
        #[arg(long, default_value = "lex")]
        tie: String,
    },
    /// Every shortest flip path.
    Geodesics {
        #[command(flatten)]
        pair: PairArgs,
        /// Give up once more paths than this exist.
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Full report on a pair problem.
    CheckPair(PairArgs),
    /// Generate a known pair family.
    Construct {
        /// One of overshoot, bidirectional9, rising, doubled-rising, doubled-overshoot.
        family: String,
        /// Family parameter k (rising, doubled-rising).
        k: Option<usize>,
        /// Grow both triangulations by this many common triangles.
        #[arg(long, default_value_t = 0)]
        pad: usize,
    },
    /// Exhaustive census over all pair classes of one size.
    Census {
        size: usize,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long, default_value = "lex")]
        tie: String,
        /// source-orbit or pair-orbit.
        #[arg(long, default_value = "source-orbit")]
        classes: String,
        #[arg(long, default_value_t = 512)]
        block_size: usize,
        /// Directory for resumable progress.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Write every record to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Allow sizes above the guard (ASSOC_MAX_N, default 10).
        #[arg(long)]
        force: bool,
    },
    /// Draw one triangulation, or a pair superimposed, as SVG.
    Render {
        source: String,
        target: Option<String>,
        /// Write to this file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long)]
        no_labels: bool,
        #[arg(long, default_value = "blue")]
        source_color: String,
        #[arg(long, default_value = "red")]
        target_color: String,
        #[arg(long, default_value = "black")]
        common_color: String,
    },
}

enum CliError {
    Usage(String),
    Domain(flipdist::Error),
}

impl From<flipdist::Error> for CliError {
    fn from(e: flipdist::Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Domain(e.into())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Text for humans and the equivalent JSON document.
struct Report {
    text: String,
    json: Value,
}

fn parse(text: &str) -> CliResult<Triangulation> {
    Ok(parse_triangulation(text)?)
}

fn read_pair(args: PairArgs) -> CliResult<(Triangulation, Triangulation)> {
    let (s, t) = match (args.source, args.target) {
        (Some(s), Some(t)) => (s, t),
        (None, None) => {
            let lines: Vec<String> = io::stdin()
                .lock()
                .lines()
                .collect::<io::Result<Vec<_>>>()?
                .into_iter()
                .filter(|l| !l.trim().is_empty())
                .collect();
            match <[String; 2]>::try_from(lines) {
                Ok([s, t]) => (s, t),
                Err(lines) => {
                    return Err(CliError::Usage(format!(
                        "expected two triangulations on standard input, found {} lines",
                        lines.len()
                    )))
                }
            }
        }
        _ => {
            return Err(CliError::Usage(
                "give both SOURCE and TARGET, or neither to read them from standard input".into(),
            ))
        }
    };
    let (s, t) = (parse(&s)?, parse(&t)?);
    if s.size() != t.size() {
        return Err(flipdist::Error::SizeMismatch(s.size(), t.size()).into());
    }
    Ok((s, t))
}

fn chords_json(cs: &[Chord]) -> Value {
    Value::from(cs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn path_json(p: &FlipPath, t: &Triangulation) -> Value {
    json!({
        "words": p.states.iter().map(|x| x.to_word().to_string()).collect::<Vec<_>>(),
        "moves": p.moves.iter().map(|m| json!({"removed": m.removed.to_string(), "inserted": m.inserted.to_string()})).collect::<Vec<_>>(),
        "conflicts": p.states.iter().map(|x| conflict_count(x, t)).collect::<Vec<_>>(),
    })
}

fn path_text(p: &FlipPath, t: &Triangulation) -> String {
    let mut out = String::new();
    for (i, x) in p.states.iter().enumerate() {
        let mv = if i == 0 {
            String::new()
        } else {
            format!("  flip {} -> {}", p.moves[i - 1].removed, p.moves[i - 1].inserted)
        };
        out.push_str(&format!("{}  {}{}\n", x.to_word(), conflict_count(x, t), mv));
    }
    out
}

fn tie_rule(s: &str) -> CliResult<TieRule> {
    s.parse().map_err(|_| CliError::Usage(format!("unknown tie rule {s:?}; expected lex or first")))
}

fn census_max_size() -> CliResult<usize> {
    match std::env::var("ASSOC_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("ASSOC_MAX_N must be a number, found {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_CENSUS_SIZE),
    }
}

fn run(command: Command) -> CliResult<Report> {
    Ok(match command {
        Command::Encode { triangulation } => {
            let t = parse(&triangulation)?;
            let w = t.to_word().to_string();
            Report { text: format!("{w}\n"), json: json!({"size": t.size(), "word": w}) }
        }
        Command::Decode { triangulation } => {
            let t = parse(&triangulation)?;
            Report {
                text: format!("{}\n", t.chord_list()),
                json: json!({
                    "size": t.size(),
                    "word": t.to_word().to_string(),
                    "root": t.root_vertex(),
                    "chords": chords_json(t.chords()),
                }),
            }
        }
        Command::Distance(pair) => {
            let (s, t) = read_pair(pair)?;
            let d = distance(&s, &t)?;
            Report {
                text: format!("{d}\n"),
                json: json!({"source": s.to_word().to_string(), "target": t.to_word().to_string(), "distance": d}),
            }
        }
        Command::Conflicts(pair) => {
            let (s, t) = read_pair(pair)?;
            let r = conflicts(&s, &t)?;
            let mut text = format!("{}\n", r.total);
            for (c, k) in &r.per_chord {
                text.push_str(&format!("{c}: {k}\n"));
            }
            Report {
                text,
                json: json!({
                    "total": r.total,
                    "per_chord": r.per_chord.iter().map(|(c, k)| json!({"chord": c.to_string(), "conflicts": k})).collect::<Vec<_>>(),
                }),
            }
        }
        Command::Neighbors { triangulation, target } => {
            let x = parse(&triangulation)?;
            let target = target.map(|t| parse(&t)).transpose()?;
            if let Some(t) = &target {
                if t.size() != x.size() {
                    return Err(flipdist::Error::SizeMismatch(x.size(), t.size()).into());
                }
            }
            let mut text = String::new();
            let mut items = Vec::new();
            for (c, y) in neighbors(&x) {
                let inserted = y.chords().iter().find(|d| !x.contains(**d)).expect("a flip inserts a chord");
                let k = target.as_ref().map(|t| conflict_count(&y, t));
                text.push_str(&format!("{c} -> {inserted}  {}", y.to_word()));
                if let Some(k) = k {
                    text.push_str(&format!("  {k}"));
                }
                text.push('\n');
                items.push(json!({"removed": c.to_string(), "inserted": inserted.to_string(), "word": y.to_word().to_string(), "conflicts": k}));
            }
            Report { text, json: json!({"word": x.to_word().to_string(), "neighbors": items}) }
        }
        Command::Greedy { pair, tie } => {
            let tie = tie_rule(&tie)?;
            let (s, t) = read_pair(pair)?;
            let g = greedy_path(&s, &t, tie)?;
            Report {
                text: format!(
                    "length {}\ndistance {}\noverestimate {}\n{}",
                    g.length,
                    g.distance,
                    g.overestimate,
                    path_text(&g.path, &t)
                ),
                json: json!({
                    "length": g.length,
                    "distance": g.distance,
                    "overestimate": g.overestimate,
                    "path": path_json(&g.path, &t),
                }),
            }
        }
        Command::Geodesics { pair, limit } => {
            let (s, t) = read_pair(pair)?;
            let paths = all_geodesics(&s, &t, limit)?;
            let mut text = format!("{} geodesic(s) of length {}\n", paths.len(), paths[0].len());
            for (i, p) in paths.iter().enumerate() {
                text.push_str(&format!("# {}\n{}", i + 1, path_text(p, &t)));
            }
            Report {
                text,
                json: json!({
                    "count": paths.len(),
                    "length": paths[0].len(),
                    "paths": paths.iter().map(|p| path_json(p, &t)).collect::<Vec<_>>(),
                }),
            }
        }
        Command::CheckPair(pair) => {
            let (s, t) = read_pair(pair)?;
            check_pair(&s, &t)?
        }
        Command::Construct { family, k, pad } => {
            let spec = construct(&family, k).map_err(|e| match e {
                flipdist::Error::Parse { message, .. } => CliError::Usage(message),
                flipdist::Error::BadParameter if k.is_none() => {
                    CliError::Usage(format!("family {family} needs a parameter k; families: {}", FAMILIES.join(", ")))
                }
                other => CliError::Domain(other),
            })?;
            let p = pad_with_common_triangles(&spec.pair, pad);
            let (sw, tw) = p.words();
            Report {
                text: format!("{sw}\n{tw}\n"),
                json: json!({
                    "family": spec.family,
                    "parameter": spec.parameter,
                    "pad": pad,
                    "size": p.size(),
                    "source": sw.to_string(),
                    "target": tw.to_string(),
                }),
            }
        }
        Command::Census { size, threads, tie, classes, block_size, checkpoint, csv, force } => {
            let classes: ClassMode = classes.parse().map_err(|_| {
                CliError::Usage(format!("unknown class mode {classes:?}; expected source-orbit or pair-orbit"))
            })?;
            let options = CensusOptions {
                threads,
                tie_rule: tie_rule(&tie)?,
                classes,
                block_size,
                checkpoint_dir: checkpoint,
                max_size: census_max_size()?,
                force,
            };
            let records = run_census(size, &options)?;
            if let Some(path) = csv {
                let file = std::fs::File::create(&path)?;
                write_csv(io::BufWriter::new(file), &records)?;
            }
            let summary = aggregate(&records, None)?;
            Report { text: summary.to_key_value(), json: serde_json::to_value(&summary).expect("summary serializes") }
        }
        Command::Render { source, target, output, no_labels, source_color, target_color, common_color } => {
            let s = parse(&source)?;
            let t = target.map(|t| parse(&t)).transpose()?;
            let style =
                RenderStyle { source_color, target_color, common_color, labels: !no_labels, ..RenderStyle::default() };
            let svg = render_svg(&s, t.as_ref(), &style)?;
            match output {
                Some(path) => {
                    std::fs::write(&path, &svg)?;
                    Report {
                        text: format!("wrote {}\n", path.display()),
                        json: json!({"output": path.display().to_string(), "bytes": svg.len()}),
                    }
                }
                None => Report { json: json!({"svg": svg}), text: svg },
            }
        }
    })
}

fn check_pair(s: &Triangulation, t: &Triangulation) -> CliResult<Report> {
    let d = distance(s, t)?;
    let c = conflict_count(s, t);
    let class = classify_edges(s, t)?;
    let bound = distance_lower_bound(s, t)?;
    let parts = flipdist::flip_graph::decompose_on_common_edges(&PairProblem::new(s.clone(), t.clone())?).len();
    let profile = |a: &Triangulation, b: &Triangulation| -> CliResult<Vec<usize>> {
        Ok(neighbor_conflict_profile(a, b)?.into_iter().map(|(_, k)| k).collect())
    };
    let (profile_st, profile_ts) = (profile(s, t)?, profile(t, s)?);
    let greedy_st = greedy_path(s, t, TieRule::LexicographicLeast)?;
    let greedy_ts = greedy_path(t, s, TieRule::LexicographicLeast)?;
    let direction = |a: &Triangulation, b: &Triangulation| -> CliResult<Value> {
        if a == b {
            return Ok(
                json!({"first_moves": [], "min_first_step_rise": null, "all_first_moves_increase": false, "monotone_geodesic_exists": true}),
            );
        }
        let first = geodesic_first_moves(a, b)?;
        let behavior = first_step_conflict_behavior(a, b)?;
        Ok(json!({
            "first_moves": chords_json(&first),
            "min_first_step_rise": behavior.min_rise,
            "all_first_moves_increase": behavior.all_first_moves_increase,
            "monotone_geodesic_exists": exists_conflict_monotone_geodesic(a, b)?,
        }))
    };
    let (forward, backward) = (direction(s, t)?, direction(t, s)?);
    let json = json!({
        "size": s.size(),
        "source": s.to_word().to_string(),
        "target": t.to_word().to_string(),
        "distance": d,
        "conflicts": c,
        "lower_bound": bound,
        "common_edge_parts": parts,
        "classification": {
            "common": chords_json(&class.common),
            "one_off": chords_json(&class.one_off),
            "other": chords_json(&class.other),
        },
        "neighbor_conflicts_from_source": profile_st,
        "neighbor_conflicts_from_target": profile_ts,
        "greedy_forward": {"length": greedy_st.length, "overestimate": greedy_st.overestimate},
        "greedy_backward": {"length": greedy_ts.length, "overestimate": greedy_ts.overestimate},
        "forward": forward,
        "backward": backward,
        "flags": {
            "greedy_overestimates": greedy_st.overestimate > 0 || greedy_ts.overestimate > 0,
            "forced_increase_forward": forward["all_first_moves_increase"],
            "forced_increase_backward": backward["all_first_moves_increase"],
            "no_monotone_geodesic": forward["monotone_geodesic_exists"] == json!(false)
                || backward["monotone_geodesic_exists"] == json!(false),
        },
    });
    let list = |v: &[usize]| v.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
    let mut text = String::new();
    text.push_str(&format!("size {}\nsource {}\ntarget {}\n", s.size(), s.to_word(), t.to_word()));
    text.push_str(&format!("source chords {}\ntarget chords {}\n", format_chord_list(s), format_chord_list(t)));
    text.push_str(&format!("distance {d}\nconflicts {c}\nlower bound {bound}\ncommon-edge parts {parts}\n"));
    let names = |cs: &[Chord]| cs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
    text.push_str(&format!(
        "common [{}]\none-off [{}]\nother [{}]\n",
        names(&class.common),
        names(&class.one_off),
        names(&class.other)
    ));
    text.push_str(&format!("neighbor conflicts from source {}\n", list(&profile_st)));
    text.push_str(&format!("neighbor conflicts from target {}\n", list(&profile_ts)));
    text.push_str(&format!(
        "greedy forward length {} (overestimate {})\ngreedy backward length {} (overestimate {})\n",
        greedy_st.length, greedy_st.overestimate, greedy_ts.length, greedy_ts.overestimate
    ));
    for (name, dir) in [("forward", &json["forward"]), ("backward", &json["backward"])] {
        text.push_str(&format!(
            "{name}: first moves {}, min first-step rise {}, all first moves increase {}, monotone geodesic exists {}\n",
            dir["first_moves"],
            dir["min_first_step_rise"],
            dir["all_first_moves_increase"],
            dir["monotone_geodesic_exists"]
        ));
    }
    Ok(Report { text, json })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(report) => {
            let mut out = io::stdout().lock();
            let written = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("json serializes"))
            } else {
                write!(out, "{}", report.text)
            };
            match written.and_then(|_| out.flush()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            eprintln!("run `flipdist --help` for the valid forms");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
