//! `beyondcr`: build constructions, emit and render their standard drawings,
//! check drawings against beyond-planarity concepts, verify Kuratowski
//! coverage and print crossing-ratio bounds.
//!
//! Exit codes: 0 success or predicate holds, 1 predicate fails, 2 usage,
//! input or format error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use beyondcr::bounds::{crossing_lemma_bound, ratio_upper, table1_report, table1_text, threshold_grid, CountSource};
use beyondcr::drawing::compute_crossings;
use beyondcr::framework::{check_params, construction_for, Concept, FrameworkGraph};
use beyondcr::golden::golden_files;
use beyondcr::json::{drawing_value, graph_value, parse_drawing_json, to_pretty, verdict_value, Meta};
use beyondcr::kuratowski::{budget_from_env, counting_lower_bound, coverage_ledger, verify_full_coverage};
use beyondcr::layouts::{draw, LayoutVariant};
use beyondcr::random::{random_drawing, RandomSpec};
use beyondcr::svg::{to_svg, SvgStyle};
use beyondcr::{check, Drawing};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "beyondcr", version, about = "Crossing-ratio constructions for beyond-planarity concepts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Framework graph of a construction, or a random drawing with --seed.
    Gen,
    /// Standard drawing of a construction.
    Layout,
    /// Check a drawing against a concept.
    Check,
    /// Verify that the crossings of a drawing cover every Kuratowski subdivision.
    Coverage,
    /// Counting lower bound and crossing-ratio upper bound.
    Bound,
    /// Ratio table for one concept or every concept at its threshold.
    Report,
    /// Render a drawing as SVG.
    Svg,
    /// Write the golden fixture files.
    Fixtures,
}

#[derive(Args, Debug, Clone)]
struct Opts {
    #[arg(long, global = true)]
    concept: Option<Concept>,
    #[arg(long, global = true)]
    ell: Option<usize>,
    #[arg(long, global = true)]
    k: Option<usize>,
    #[arg(long, global = true)]
    variant: Option<LayoutVariant>,
    /// Input drawing (JSON).
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    /// Output file, or directory for `fixtures`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Reject concepts whose standard drawings are not straight-line.
    #[arg(long, global = true)]
    rectilinear: bool,
    /// Seed of a random drawing (gen).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Count crossings of emitted drawings instead of using closed forms (report).
    #[arg(long, global = true)]
    drawings: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Svg,
    Text,
}

/// A drawing together with whatever is known about its construction.
struct Loaded {
    drawing: Drawing,
    fg: Option<FrameworkGraph>,
    variant: Option<LayoutVariant>,
    meta: Meta,
}

/// Fully validated parameters of a construction.
struct Params {
    concept: Concept,
    ell: usize,
    k: usize,
}

fn default_k(c: Concept) -> usize {
    c.min_k().max(if c.has_k() { 2 } else { 1 })
}

impl Opts {
    fn params(&self, meta: &Meta) -> Result<Params> {
        let concept = self.concept.or(meta.concept).ok_or_else(|| anyhow!("--concept is required"))?;
        let k = self.k.or(meta.k).unwrap_or_else(|| default_k(concept));
        let ell = self.ell.or(meta.ell).ok_or_else(|| anyhow!("--ell is required"))?;
        check_params(concept, ell, k)?;
        if self.rectilinear && concept.is_fan_variant() {
            bail!("{concept}: the standard drawings of fan-planar variants are not straight-line");
        }
        Ok(Params { concept, ell, k })
    }

    fn format(&self, default: Format, allowed: &[Format]) -> Result<Format> {
        let f = self.format.unwrap_or(default);
        if !allowed.contains(&f) {
            bail!(
                "--format {} is not supported here",
                f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
            );
        }
        Ok(f)
    }

    /// The drawing from --in, or the standard drawing of the given parameters.
    fn load(&self) -> Result<Loaded> {
        if let Some(path) = &self.input {
            let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
            let (drawing, meta) = parse_drawing_json(&text).with_context(|| format!("{}", path.display()))?;
            let fg = match (meta.concept.or(self.concept), meta.ell.or(self.ell)) {
                (Some(c), Some(l)) => {
                    let k = self.k.or(meta.k).unwrap_or_else(|| default_k(c));
                    construction_for(c, l, k).ok().filter(|fg| fg.graph == drawing.graph)
                }
                _ => None,
            };
            return Ok(Loaded { drawing, fg, variant: meta.variant, meta });
        }
        let p = self.params(&Meta::default())?;
        let variant = self.variant.unwrap_or(LayoutVariant::Witness);
        let fg = construction_for(p.concept, p.ell, p.k)?;
        let drawing = draw(&fg, p.concept, variant)?;
        let meta = Meta { concept: Some(p.concept), ell: Some(p.ell), k: Some(fg.k), variant: Some(variant) };
        Ok(Loaded { drawing, fg: Some(fg), variant: Some(variant), meta })
    }
}

fn emit(opts: &Opts, text: &str) -> Result<()> {
    match &opts.out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_drawing(opts: &Opts, l: &Loaded, format: Format) -> Result<()> {
    let cs = compute_crossings(&l.drawing)?;
    let text = match format {
        Format::Json => to_pretty(&drawing_value(&l.drawing, l.fg.as_ref(), l.variant)),
        Format::Svg => to_svg(&l.drawing, &SvgStyle { framework: l.fg.as_ref(), crossings: Some(&cs), width: 0 }),
        Format::Text => format!(
            "vertices: {}\nedges: {}\ncrossings: {}\nstraight-line: {}\n",
            l.drawing.graph.n(),
            l.drawing.graph.m(),
            cs.len(),
            l.drawing.is_straight_line()
        ),
    };
    emit(opts, &text)
}

fn run(cmd: Command, opts: &Opts) -> Result<u8> {
    use Format::*;
    match cmd {
        Command::Gen => {
            if let Some(seed) = opts.seed {
                let format = opts.format(Json, &[Json, Svg, Text])?;
                let (drawing, _) = random_drawing(seed, &RandomSpec::default());
                let l = Loaded { drawing, fg: None, variant: None, meta: Meta::default() };
                emit_drawing(opts, &l, format)?;
                return Ok(0);
            }
            let format = opts.format(Json, &[Json, Text])?;
            let p = opts.params(&Meta::default())?;
            let fg = construction_for(p.concept, p.ell, p.k)?;
            let text = match format {
                Json => to_pretty(&graph_value(&fg.graph, Some(&fg), None)),
                _ => format!(
                    "vertices: {}\nedges: {}\nkuratowski subdivisions: {}\nbelow threshold: {}\n",
                    fg.graph.n(),
                    fg.graph.m(),
                    fg.kuratowski_count().map_or("overflow".into(), |c| c.to_string()),
                    fg.below_threshold
                ),
            };
            emit(opts, &text)?;
            Ok(0)
        }
        Command::Layout => {
            let format = opts.format(Json, &[Json, Svg, Text])?;
            let l = opts.load()?;
            if opts.rectilinear && !l.drawing.is_straight_line() {
                bail!("the drawing is not straight-line");
            }
            emit_drawing(opts, &l, format)?;
            Ok(0)
        }
        Command::Svg => {
            opts.format(Svg, &[Svg])?;
            let l = opts.load()?;
            emit_drawing(opts, &l, Svg)?;
            Ok(0)
        }
        Command::Check => {
            let format = opts.format(Json, &[Json, Text])?;
            let concept = opts.concept.ok_or_else(|| anyhow!("--concept is required"))?;
            if let Some(k) = opts.k.filter(|&k| concept.has_k() && k < concept.min_k()) {
                bail!("{concept} requires k >= {}, got {k}", concept.min_k());
            }
            let l = opts.load()?;
            // a k recorded for the same concept beats the default
            let k =
                opts.k.or(l.meta.k.filter(|_| l.meta.concept == Some(concept))).unwrap_or_else(|| default_k(concept));
            let cs = compute_crossings(&l.drawing)?;
            let v = check(concept, k, &l.drawing, &cs);
            let text = match format {
                Json => to_pretty(&verdict_value(&v)),
                _ => {
                    let mut s = format!("{concept}: holds: {}\n", v.holds);
                    if let Some(w) = &v.witness {
                        s.push_str(&format!("witness: {}\n", serde_json::to_string(w)?));
                    }
                    s
                }
            };
            emit(opts, &text)?;
            Ok(if v.holds { 0 } else { 1 })
        }
        Command::Coverage => {
            let format = opts.format(Text, &[Json, Text])?;
            let l = opts.load()?;
            let fg = match l.fg {
                Some(fg) => fg,
                None => bail!("coverage needs a framework drawing: give --concept/--ell/--k matching the input"),
            };
            let cs = compute_crossings(&l.drawing)?;
            let ledger = coverage_ledger(&l.drawing, &fg, &cs)?;
            let verdict = verify_full_coverage(&ledger, budget_from_env())?;
            let text = match format {
                Json => to_pretty(&json!({
                    "fully_covered": verdict.holds,
                    "uncovered": verdict.uncovered,
                    "search_nodes": verdict.nodes,
                    "kuratowski_subdivisions": fg.kuratowski_count().map(|c| c.to_string()),
                    "ledger": ledger,
                })),
                _ => {
                    let mut s = format!("fully covered: {}\n", verdict.holds);
                    if let Some(t) = verdict.uncovered {
                        s.push_str(&format!("uncovered subdivision: {t:?}\n"));
                    }
                    s.push_str(&format!(
                        "contributing crossings: {}\nignored crossings: {}\nsearch nodes: {}\n",
                        ledger.entries.len(),
                        ledger.ignored,
                        verdict.nodes
                    ));
                    s
                }
            };
            emit(opts, &text)?;
            Ok(if verdict.holds { 0 } else { 1 })
        }
        Command::Bound => {
            let format = opts.format(Text, &[Json, Text])?;
            let p = opts.params(&Meta::default())?;
            let kk = p.concept.effective_k(p.k);
            let n = beyondcr::framework::vertex_count(p.concept, p.ell as u128, kk as u128);
            let m = beyondcr::framework::edge_count(p.concept, p.ell as u128, kk as u128);
            let lb = counting_lower_bound(p.concept, p.ell, p.k)?;
            let (n64, m64) = (u64::try_from(n)?, u64::try_from(m)?);
            let up = ratio_upper(p.concept, n64, m64, kk as u64);
            let lemma = crossing_lemma_bound(n64, m64);
            let text = match format {
                Json => to_pretty(&json!({
                    "n": n.to_string(),
                    "m": m.to_string(),
                    "counting_lower_bound": lb,
                    "crossing_lemma": lemma,
                    "ratio_upper": up,
                })),
                _ => {
                    let mut s = format!("n = {n}, m = {m}\ncounting lower bound: {}\n", lb.value);
                    for t in &lb.trace {
                        s.push_str(&format!("  {t}\n"));
                    }
                    s.push_str(&format!("crossing lemma: {}\nratio upper bound: {}", lemma.value, up.value));
                    if let Some(tag) = up.tag {
                        s.push_str(&format!(" ({tag})"));
                    }
                    s.push('\n');
                    for t in &up.trace {
                        s.push_str(&format!("  {t}\n"));
                    }
                    s
                }
            };
            emit(opts, &text)?;
            Ok(0)
        }
        Command::Report => {
            let format = opts.format(Text, &[Json, Text])?;
            let source = if opts.drawings { CountSource::Drawings } else { CountSource::Formula };
            let grid = match opts.concept {
                Some(c) => {
                    let k = opts.k.unwrap_or_else(|| default_k(c));
                    let ell = opts.ell.unwrap_or_else(|| c.ell_threshold(k).max(2));
                    check_params(c, ell, k)?;
                    vec![(c, ell, k)]
                }
                None => threshold_grid(),
            };
            let reports = table1_report(&grid, source)?;
            let text = match format {
                Json => to_pretty(&serde_json::to_value(&reports)?),
                _ => table1_text(&reports),
            };
            emit(opts, &text)?;
            Ok(0)
        }
        Command::Fixtures => {
            let dir = opts.out.clone().unwrap_or_else(|| PathBuf::from("fixtures"));
            let files = golden_files()?;
            write_fixtures(&dir, &files)?;
            for (name, _) in &files {
                println!("{}", dir.join(name).display());
            }
            Ok(0)
        }
    }
}

fn write_fixtures(dir: &Path, files: &[(String, String)]) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    for (name, text) in files {
        let p = dir.join(name);
        fs::write(&p, text).with_context(|| format!("cannot write {}", p.display()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command, &cli.opts) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
