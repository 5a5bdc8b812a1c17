//! Subcommands behind the `iaa-moderation` binary.
//!
//! Every command reads its inputs, writes CSV artifacts under `--out-dir` and
//! reports the files it wrote. Output is sorted by factor and profession and
//! uses fixed decimal formatting, so reruns are byte-identical.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::elicitation::{
    fmt_similarity, parse_responses, summarize, FactorManifest, ResponsePanel,
};
use crate::error::{Error, Result};
use crate::fuzzy::{AgreementT1, RatingScale};
use crate::moderation::{
    defuzzify_factor, parse_batch, run_batch, write_audit, write_results, Ensemble, ImpactRegistry,
    ModerationConfig,
};
use crate::numeric::fmt_fixed;

#[derive(Debug, Parser)]
#[command(
    name = "iaa-moderation",
    version,
    about = "Expert-interval fuzzy modelling and risk-score moderation"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    #[arg(
        long,
        global = true,
        default_value_t = 1.0,
        allow_negative_numbers = true
    )]
    pub scale_min: f64,
    #[arg(
        long,
        global = true,
        default_value_t = 9.0,
        allow_negative_numbers = true
    )]
    pub scale_max: f64,
    /// Multiplier for the most negative joint effect.
    #[arg(long, global = true, default_value_t = 0.5)]
    pub norm_lo: f64,
    /// Multiplier for the most positive joint effect.
    #[arg(long, global = true, default_value_t = 1.5)]
    pub norm_hi: f64,
    #[arg(long, global = true, value_enum, default_value_t = EnsembleArg::Mean)]
    pub ensemble: EnsembleArg,
    /// Comma-separated positional weights for `--ensemble weighted`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub weights: Vec<f64>,
    /// Sampling step along the rating axis.
    #[arg(long, global = true, default_value_t = 0.1)]
    pub step: f64,
    /// Sampling step along the membership axis for type-2 plot grids.
    #[arg(long, global = true, default_value_t = 0.05)]
    pub y_step: f64,
    #[arg(long, global = true, default_value = ".")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnsembleArg {
    Mean,
    Min,
    Weighted,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Build per-profession IAA sets and sampled curves.
    BuildFs {
        responses: PathBuf,
        #[arg(long)]
        factor: Option<String>,
        #[arg(long)]
        profession: Option<String>,
    },
    /// Pairwise Jaccard similarity between professions, per factor.
    Similarity { responses: PathBuf },
    /// Centroid impact score per factor from its zSlice type-2 set.
    Defuzzify { responses: PathBuf },
    /// Moderate a batch of base risk scores with an impact registry.
    Moderate { registry: PathBuf, batch: PathBuf },
    /// Secondary-grade shading grid of one factor's type-2 set.
    ExportPlot {
        responses: PathBuf,
        #[arg(long)]
        factor: String,
    },
    /// Box-plot statistics of interval midpoints per factor and profession.
    Summarize {
        responses: PathBuf,
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
}

/// Files written by a command plus non-fatal notes for the user.
#[derive(Debug, Default)]
pub struct Report {
    pub written: Vec<PathBuf>,
    pub notes: Vec<String>,
}

impl GlobalOpts {
    pub fn scale(&self) -> Result<RatingScale> {
        RatingScale::new(self.scale_min, self.scale_max)
    }

    pub fn moderation_config(&self) -> Result<ModerationConfig> {
        let ensemble = match self.ensemble {
            EnsembleArg::Mean => Ensemble::Mean,
            EnsembleArg::Min => Ensemble::Min,
            EnsembleArg::Weighted => Ensemble::WeightedMean(self.weights.clone()),
        };
        let cfg = ModerationConfig {
            scale: self.scale()?,
            ensemble,
            norm_lo: self.norm_lo,
            norm_hi: self.norm_hi,
            ..ModerationConfig::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::io(path.display(), e))
}

fn load_panel(path: &Path, scale: RatingScale) -> Result<ResponsePanel> {
    parse_responses(open(path)?, scale)
}

fn file_label(s: &str) -> String {
    s.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '_' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

struct Output<'a> {
    dir: &'a Path,
    report: Report,
}

impl<'a> Output<'a> {
    fn new(dir: &'a Path) -> Result<Self> {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir.display(), e))?;
        Ok(Self {
            dir,
            report: Report::default(),
        })
    }

    fn write<F>(&mut self, name: &str, body: F) -> Result<()>
    where
        F: FnOnce(&mut BufWriter<File>) -> Result<()>,
    {
        let path = self.dir.join(name);
        let file = File::create(&path).map_err(|e| Error::io(path.display(), e))?;
        let mut w = BufWriter::new(file);
        body(&mut w)?;
        w.flush().map_err(|e| Error::io(path.display(), e))?;
        self.report.written.push(path);
        Ok(())
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::io("output", e)
}

/// Breakpoint listing: one row per cell and per point spike, with exact coverage counts.
pub fn write_fs_description<W: Write>(
    w: &mut W,
    factor: &str,
    profession: &str,
    set: &AgreementT1,
) -> Result<()> {
    let f = set.function();
    let n = set.source_count();
    writeln!(
        w,
        "# factor={factor} profession={profession} sources={n} scale={}..{}",
        f.scale().min(),
        f.scale().max()
    )
    .map_err(io_err)?;
    writeln!(w, "kind,start,end,count,grade").map_err(io_err)?;
    for ((a, b, g), c) in f.cells().zip(set.cell_counts()) {
        writeln!(
            w,
            "cell,{},{},{c},{}",
            fmt_fixed(a, 4),
            fmt_fixed(b, 4),
            fmt_fixed(g, 6)
        )
        .map_err(io_err)?;
    }
    for (x, g) in f.point_overrides() {
        let c = set.coverage_count(x);
        let xs = fmt_fixed(x, 4);
        writeln!(w, "point,{xs},{xs},{c},{}", fmt_fixed(g, 6)).map_err(io_err)?;
    }
    Ok(())
}

pub fn build_fs(
    opts: &GlobalOpts,
    responses: &Path,
    factor: Option<&str>,
    profession: Option<&str>,
) -> Result<Report> {
    let panel = load_panel(responses, opts.scale()?)?;
    let keys: Vec<(String, String)> = panel
        .keys()
        .filter(|(f, p)| factor.is_none_or(|x| x == *f) && profession.is_none_or(|x| x == *p))
        .map(|(f, p)| (f.to_string(), p.to_string()))
        .collect();
    if keys.is_empty() {
        return Err(Error::NotFound {
            what: format!(
                "factor/profession '{}/{}'",
                factor.unwrap_or("*"),
                profession.unwrap_or("*")
            ),
            available: panel.keys().map(|(f, p)| format!("{f}/{p}")).collect(),
        });
    }
    let mut out = Output::new(&opts.out_dir)?;
    for (f, p) in keys {
        let g = panel.build_group_fs(&f, &p)?;
        let stem = format!("{}__{}", file_label(&f), file_label(&p));
        out.write(&format!("fs_{stem}.csv"), |w| {
            write_fs_description(w, &f, &p, &g.set)
        })?;
        let rows = g.set.function().sample(opts.step)?;
        out.write(&format!("curve_{stem}.csv"), |w| {
            writeln!(w, "x,grade").map_err(io_err)?;
            for (x, y) in rows {
                writeln!(w, "{},{}", fmt_fixed(x, 4), fmt_fixed(y, 6)).map_err(io_err)?;
            }
            Ok(())
        })?;
    }
    Ok(out.report)
}

pub fn similarity(opts: &GlobalOpts, responses: &Path) -> Result<Report> {
    let panel = load_panel(responses, opts.scale()?)?;
    let mut matrices = Vec::new();
    let mut notes = Vec::new();
    for factor in panel.factors() {
        if panel.professions(factor).len() < 2 {
            notes.push(format!(
                "factor '{factor}' skipped: only one profession answered"
            ));
            continue;
        }
        matrices.push(panel.similarity_matrix(factor)?);
    }
    if matrices.is_empty() {
        return Err(Error::validation(
            "no factor has responses from two or more professions",
        ));
    }
    let mut out = Output::new(&opts.out_dir)?;
    out.write("similarity.csv", |w| {
        writeln!(w, "factor_id,profession_a,profession_b,similarity").map_err(io_err)?;
        for m in &matrices {
            for (i, a) in m.labels.iter().enumerate() {
                for (j, b) in m.labels.iter().enumerate() {
                    writeln!(w, "{},{a},{b},{}", m.factor, fmt_similarity(m.values[i][j]))
                        .map_err(io_err)?;
                }
            }
        }
        Ok(())
    })?;
    out.report.notes = notes;
    Ok(out.report)
}

/// Writes the registry for every factor that has a centroid. Factors whose
/// groups all have zero area are skipped and reported as an error afterwards.
pub fn defuzzify(opts: &GlobalOpts, responses: &Path) -> Result<Report> {
    let cfg = opts.moderation_config()?;
    let panel = load_panel(responses, cfg.scale)?;
    let mut registry = ImpactRegistry::new(cfg.scale);
    let mut skipped = Vec::new();
    for factor in panel.factors() {
        let z = panel.factor_zgt2(factor)?;
        match defuzzify_factor(&z, &cfg) {
            Ok(s) => registry.insert(factor, s.value())?,
            Err(Error::Undefined(_)) => skipped.push(factor.to_string()),
            Err(e) => return Err(e),
        }
    }
    let mut out = Output::new(&opts.out_dir)?;
    out.write("impact_registry.csv", |w| {
        registry.write_csv(w, cfg.round_impacts_dp as usize)
    })?;
    if !skipped.is_empty() {
        return Err(Error::domain(format!(
            "centroid undefined (zero-area sets) for factor(s): {}; other factors written to {}",
            skipped.join(", "),
            out.report.written[0].display()
        )));
    }
    Ok(out.report)
}

pub fn moderate_batch(opts: &GlobalOpts, registry: &Path, batch: &Path) -> Result<Report> {
    let cfg = opts.moderation_config()?;
    let reg = ImpactRegistry::parse_csv(open(registry)?, cfg.scale)?;
    let cases = parse_batch(open(batch)?)?;
    let results = run_batch(&cases, &reg, &cfg)?;
    let mut out = Output::new(&opts.out_dir)?;
    out.write("moderated.csv", |w| {
        write_results(w, &cases, &results, &cfg)
    })?;
    out.write("moderated_audit.txt", |w| write_audit(w, &cases, &results))?;
    Ok(out.report)
}

pub fn export_plot(opts: &GlobalOpts, responses: &Path, factor: &str) -> Result<Report> {
    let panel = load_panel(responses, opts.scale()?)?;
    let z = panel.factor_zgt2(factor)?;
    let rows = z.sample(opts.step, opts.y_step)?;
    let mut out = Output::new(&opts.out_dir)?;
    out.write(&format!("plot_{}.csv", file_label(factor)), |w| {
        writeln!(w, "x,y,z").map_err(io_err)?;
        for (x, y, s) in rows {
            writeln!(
                w,
                "{},{},{}",
                fmt_fixed(x, 4),
                fmt_fixed(y, 4),
                fmt_fixed(s, 6)
            )
            .map_err(io_err)?;
        }
        Ok(())
    })?;
    Ok(out.report)
}

pub fn summarize_panel(
    opts: &GlobalOpts,
    responses: &Path,
    manifest: Option<&Path>,
) -> Result<Report> {
    let panel = load_panel(responses, opts.scale()?)?;
    if let Some(m) = manifest {
        FactorManifest::parse(open(m)?)?.check_panel(&panel)?;
    }
    let summary = summarize(&panel)?;
    let mut out = Output::new(&opts.out_dir)?;
    out.write("summary.csv", |w| summary.write_csv(w))?;
    Ok(out.report)
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let o = &cli.opts;
    match &cli.command {
        Command::BuildFs {
            responses,
            factor,
            profession,
        } => build_fs(o, responses, factor.as_deref(), profession.as_deref()),
        Command::Similarity { responses } => similarity(o, responses),
        Command::Defuzzify { responses } => defuzzify(o, responses),
        Command::Moderate { registry, batch } => moderate_batch(o, registry, batch),
        Command::ExportPlot { responses, factor } => export_plot(o, responses, factor),
        Command::Summarize {
            responses,
            manifest,
        } => summarize_panel(o, responses, manifest.as_deref()),
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    match execute(cli) {
        Ok(report) => {
            for note in &report.notes {
                eprintln!("note: {note}");
            }
            for path in &report.written {
                eprintln!("wrote {}", path.display());
            }
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
