//! `mpcompress multichunk` and `mpcompress mpfree`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mpcompress_core::clock::StdClock;
use mpcompress_core::mpfree::{mpfree_with, MpfreeOptions, MpfreeOutput};
use mpcompress_core::multichunk::{multi_chunk_with_clock, ChunkStats};
use mpcompress_core::{ChainComplex, Error as CoreError};

use crate::scc::{read_scc, render_scc, SccError};
use crate::verify::{verify_multichunk, verify_presentation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "mpcompress", version, about = "Compress chain complexes of bipersistence modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Replace a chain complex by the smallest quasi-isomorphic one.
    Multichunk(CommonArgs),
    /// Compute minimal presentations of homology.
    Mpfree(MpfreeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threads {
    Auto,
    Count(usize),
}

impl FromStr for Threads {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            return Ok(Threads::Auto);
        }
        match s.parse::<usize>() {
            Ok(n) if n > 0 => Ok(Threads::Count(n)),
            _ => Err(format!("expected a positive integer or `auto`, got `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatsFormat {
    Kv,
    Pretty,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Input scc2020 file, `-` for stdin.
    #[arg(default_value = "-")]
    pub input: PathBuf,
    /// Output file, `-` for stdout.
    #[arg(default_value = "-")]
    pub output: PathBuf,
    /// Worker threads: a positive integer or `auto`.
    #[arg(long, env = "MPCOMPRESS_THREADS", default_value = "auto")]
    pub threads: Threads,
    /// Print statistics to stderr as key=value lines, or as a table with `=pretty`.
    #[arg(long, value_enum, num_args = 0..=1, require_equals = true, default_missing_value = "kv")]
    pub stats: Option<StatsFormat>,
    /// Cross-check the result against brute-force oracles (small inputs only).
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct MpfreeArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Homology dimension; by default every dimension with maps on both sides.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Skip multi-chunk compression before computing presentations.
    #[arg(long)]
    pub no_chunk_preprocess: bool,
    /// Use the grid-scan generator and kernel computations.
    #[arg(long)]
    pub lw_baseline: bool,
}

/// Settings of one run, independent of the argument syntax.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// `None` reads stdin.
    pub input: Option<PathBuf>,
    /// `None` writes stdout.
    pub output: Option<PathBuf>,
    /// `None` uses the available parallelism.
    pub threads: Option<usize>,
    pub dim: Option<usize>,
    pub chunk_preprocess: bool,
    pub stats: Option<StatsFormat>,
    pub verify: bool,
    pub lw_baseline: bool,
}

fn path_or_std(p: &Path) -> Option<PathBuf> {
    (p != Path::new("-")).then(|| p.to_path_buf())
}

impl RunConfig {
    fn from_common(c: &CommonArgs) -> Self {
        RunConfig {
            input: path_or_std(&c.input),
            output: path_or_std(&c.output),
            threads: match c.threads {
                Threads::Auto => None,
                Threads::Count(n) => Some(n),
            },
            dim: None,
            chunk_preprocess: true,
            stats: c.stats,
            verify: c.verify,
            lw_baseline: false,
        }
    }
}

/// Streams used by a run.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<SccError> for Failure {
    fn from(e: SccError) -> Self {
        Failure { code: e.exit_code(), message: e.to_string() }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure { code: EXIT_VALIDATION, message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: EXIT_PARSE, message: format!("{}: {e}", path.display()) }
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    let mut io = Io { stdin, stdout, stderr };
    match cli.command {
        Command::Multichunk(c) => run_multichunk(&RunConfig::from_common(&c), &mut io),
        Command::Mpfree(m) => {
            let mut cfg = RunConfig::from_common(&m.common);
            cfg.dim = m.dim;
            cfg.chunk_preprocess = !m.no_chunk_preprocess;
            cfg.lw_baseline = m.lw_baseline;
            run_mpfree(&cfg, &mut io)
        }
    }
}

fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, Failure> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        b = b.num_threads(n);
    }
    let pool =
        b.build().map_err(|e| Failure { code: EXIT_PARSE, message: format!("cannot start worker threads: {e}") })?;
    Ok(pool.install(f))
}

fn finish(result: Result<(), Failure>, io: &mut Io<'_>) -> i32 {
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(io.stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn read_input(cfg: &RunConfig, io: &mut Io<'_>) -> Result<(ChainComplex, usize), Failure> {
    let bytes = match &cfg.input {
        Some(p) => fs::read(p).map_err(|e| io_failure(p, e))?,
        None => {
            let mut buf = Vec::new();
            io.stdin.read_to_end(&mut buf).map_err(|e| io_failure(Path::new("<stdin>"), e))?;
            buf
        }
    };
    let n = bytes.len();
    Ok((read_scc(bytes.as_slice())?, n))
}

fn write_output(path: Option<&Path>, text: &str, io: &mut Io<'_>) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_failure(p, e)),
        None => io.stdout.write_all(text.as_bytes()).map_err(|e| io_failure(Path::new("<stdout>"), e)),
    }
}

/// `out.scc` becomes `out_h1.scc`.
pub fn suffixed_path(path: &Path, n: usize) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_h{n}.{}", ext.to_string_lossy()),
        None => format!("{stem}_h{n}"),
    };
    path.with_file_name(name)
}

struct Stats {
    entries: Vec<(String, String)>,
}

impl Stats {
    fn new() -> Self {
        Stats { entries: Vec::new() }
    }

    fn add(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    fn add_chunk(&mut self, prefix: &str, s: &ChunkStats) {
        for (n, l) in s.levels.iter().enumerate() {
            self.add(format!("{prefix}level{n}_global"), l.global);
            self.add(format!("{prefix}level{n}_local_positive"), l.local_positive);
            self.add(format!("{prefix}level{n}_local_negative"), l.local_negative);
        }
        self.add(format!("{prefix}phase1_additions"), s.phase1_additions);
        self.add(format!("{prefix}phase2_additions"), s.phase2_additions);
        self.add(format!("{prefix}addition_cost"), s.addition_cost);
        for (k, t) in s.phase_nanos.iter().enumerate() {
            self.add(format!("{prefix}time_phase{}_ns", k + 1), t);
        }
    }

    fn add_mpfree(&mut self, n: usize, o: &MpfreeOutput) {
        let p = format!("h{n}_");
        for (name, c) in [("min_gens", &o.min_gens), ("ker_basis", &o.ker_basis), ("reparam", &o.reparam)] {
            self.add(format!("{p}{name}_additions"), c.additions);
            self.add(format!("{p}{name}_addition_cost"), c.addition_cost);
            if name != "reparam" {
                self.add(format!("{p}{name}_initial_grades"), c.initial_grades);
                self.add(format!("{p}{name}_grade_pushes"), c.grade_pushes);
                self.add(format!("{p}{name}_grade_pops"), c.grade_pops);
                self.add(format!("{p}{name}_row_pops"), c.row_pops);
                self.add(format!("{p}{name}_lw_cells"), c.lw_cells);
            }
        }
        self.add(format!("{p}minimize_additions"), o.minimize.additions());
        self.add(format!("{p}semi_minimal_rows"), o.semi_minimal_size.0);
        self.add(format!("{p}semi_minimal_columns"), o.semi_minimal_size.1);
        self.add(format!("{p}generators"), o.presentation.n_rows());
        self.add(format!("{p}relations"), o.presentation.n_cols());
        for (name, t) in ["min_gens", "ker_basis", "reparam", "minimize"].iter().zip(o.phase_nanos) {
            self.add(format!("{p}time_{name}_ns"), t);
        }
    }

    fn emit(&self, format: StatsFormat, out: &mut dyn Write) {
        let mut s = String::new();
        match format {
            StatsFormat::Kv => {
                for (k, v) in &self.entries {
                    let _ = writeln!(s, "{k}={v}");
                }
            }
            StatsFormat::Pretty => {
                let w = self.entries.iter().map(|e| e.0.len()).max().unwrap_or(0);
                for (k, v) in &self.entries {
                    let _ = writeln!(s, "{k:<w$}  {v:>14}");
                }
            }
        }
        let _ = out.write_all(s.as_bytes());
    }
}

fn ns(d: std::time::Duration) -> u64 {
    d.as_nanos() as u64
}

/// Compresses the input complex and writes it out.
pub fn run_multichunk(cfg: &RunConfig, io: &mut Io<'_>) -> i32 {
    let result = multichunk_inner(cfg, io);
    finish(result, io)
}

fn multichunk_inner(cfg: &RunConfig, io: &mut Io<'_>) -> Result<(), Failure> {
    let start = Instant::now();
    let (input, in_bytes) = read_input(cfg, io)?;
    let t_parse = start.elapsed();
    let clock = StdClock::default();
    let (out, chunk) = with_threads(cfg.threads, || multi_chunk_with_clock(&input, &clock))??;
    let t_compute = start.elapsed();
    if cfg.verify {
        verify_multichunk(&input, &out).map_err(|m| Failure { code: EXIT_VERIFY, message: m })?;
    }
    let t_verify = start.elapsed();
    let text = render_scc(&out);
    write_output(cfg.output.as_deref(), &text, io)?;
    let total = start.elapsed();

    if let Some(format) = cfg.stats {
        let mut s = Stats::new();
        s.add("input_bytes", in_bytes);
        s.add("output_bytes", text.len());
        s.add("compression_ratio", format!("{:.6}", ratio(text.len(), in_bytes)));
        let io_ns = ns(t_parse) + ns(total - t_verify);
        s.add("time_parse_ns", ns(t_parse));
        s.add_chunk("", &chunk);
        s.add("time_verify_ns", ns(t_verify - t_compute));
        s.add("time_write_ns", ns(total - t_verify));
        s.add("time_total_ns", ns(total));
        s.add("io_share", format!("{:.6}", ratio(io_ns as usize, ns(total) as usize)));
        s.emit(format, io.stderr);
    }
    Ok(())
}

fn ratio(a: usize, b: usize) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

/// Writes one minimal presentation per selected homology dimension.
pub fn run_mpfree(cfg: &RunConfig, io: &mut Io<'_>) -> i32 {
    let result = mpfree_inner(cfg, io);
    finish(result, io)
}

fn mpfree_inner(cfg: &RunConfig, io: &mut Io<'_>) -> Result<(), Failure> {
    let start = Instant::now();
    let (input, in_bytes) = read_input(cfg, io)?;
    let t_parse = start.elapsed();
    let k = input.length();
    let dims: Vec<usize> = match cfg.dim {
        Some(n) if n >= 1 && n < k => vec![n],
        Some(n) => {
            return Err(Failure {
                code: EXIT_VALIDATION,
                message: format!(
                    "--dim {n} needs dimensions {}..={} but the input has length {k}",
                    n.saturating_sub(1),
                    n + 1
                ),
            })
        }
        None if k >= 2 => (1..k).collect(),
        None => {
            return Err(Failure {
                code: EXIT_VALIDATION,
                message: format!("mpfree needs a complex with at least two boundary maps, the input has {k}"),
            })
        }
    };
    let clock = StdClock::default();
    let options = MpfreeOptions { lw_baseline: cfg.lw_baseline };
    let (compressed, chunk, outputs) = with_threads(cfg.threads, || -> Result<_, CoreError> {
        let (work, chunk) = if cfg.chunk_preprocess {
            let (c, s) = multi_chunk_with_clock(&input, &clock)?;
            (c, Some(s))
        } else {
            (input.clone(), None)
        };
        let outs = dims.iter().map(|&n| mpfree_with(&work, n, options, &clock)).collect::<Result<Vec<_>, _>>()?;
        Ok((work, chunk, outs))
    })??;
    drop(compressed);
    let t_compute = start.elapsed();
    if cfg.verify {
        for (&n, o) in dims.iter().zip(&outputs) {
            verify_presentation(&input, n, &o.presentation).map_err(|m| Failure { code: EXIT_VERIFY, message: m })?;
        }
    }
    let t_verify = start.elapsed();

    let mut out_bytes = 0;
    for (&n, o) in dims.iter().zip(&outputs) {
        let doc = ChainComplex::from_matrices(vec![o.presentation.clone()])?.with_tokens(input.tokens().cloned());
        let text = render_scc(&doc);
        out_bytes += text.len();
        let path = match (&cfg.output, dims.len()) {
            (Some(p), 1) => Some(p.clone()),
            (Some(p), _) => Some(suffixed_path(p, n)),
            (None, _) => None,
        };
        write_output(path.as_deref(), &text, io)?;
    }
    let total = start.elapsed();

    if let Some(format) = cfg.stats {
        let mut s = Stats::new();
        s.add("input_bytes", in_bytes);
        s.add("output_bytes", out_bytes);
        s.add("compression_ratio", format!("{:.6}", ratio(out_bytes, in_bytes)));
        s.add("time_parse_ns", ns(t_parse));
        if let Some(c) = &chunk {
            s.add_chunk("multichunk_", c);
        }
        for (&n, o) in dims.iter().zip(&outputs) {
            s.add_mpfree(n, o);
        }
        s.add("time_verify_ns", ns(t_verify - t_compute));
        s.add("time_write_ns", ns(total - t_verify));
        s.add("time_total_ns", ns(total));
        let io_ns = ns(t_parse) + ns(total - t_verify);
        s.add("io_share", format!("{:.6}", ratio(io_ns as usize, ns(total) as usize)));
        s.emit(format, io.stderr);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "scc2020\n2\n3 7 5\n2 1 ; 0 1 4\n1 2 ; 2 3 4\n2 2 ; 3 5 6\n0 0 ; 0 1\n0 0 ; 0 2\n\
0 0 ; 1 3\n0 0 ; 2 3\n1 1 ; 1 2\n2 2 ; 2 4\n2 2 ; 3 4\n0 0 ;\n0 0 ;\n0 0 ;\n0 0 ;\n2 0 ;\n";

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("mpcompress").chain(args.iter().copied()), &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn multichunk_on_stdin() {
        let (code, out, _) = call(&["multichunk", "--threads", "1"], EXAMPLE);
        assert_eq!(code, 0);
        assert_eq!(out, "scc2020\n2\n2 3 2\n2 1 ; 1\n1 2 ; 0 1\n0 0 ;\n1 1 ;\n2 2 ; 0 1\n0 0 ;\n2 0 ;\n");
    }

    #[test]
    fn mpfree_on_stdin() {
        let (code, out, _) = call(&["mpfree", "--dim", "1", "--verify"], EXAMPLE);
        assert_eq!(code, 0);
        assert_eq!(out, "scc2020\n2\n2 2\n2 1 ; 1\n1 2 ; 0 1\n0 0 ;\n1 1 ;\n");
    }

    #[test]
    fn stats_are_key_value_lines() {
        let (code, _, err) = call(&["multichunk", "--stats"], EXAMPLE);
        assert_eq!(code, 0);
        assert!(err.lines().all(|l| l.contains('=')), "{err}");
        assert!(err.contains("level1_global=3"));
        let (_, _, pretty) = call(&["multichunk", "--stats=pretty"], EXAMPLE);
        assert!(!pretty.contains('='));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["multichunk"], "scc2020\n2\n1 1\n0 0 ; 3\n0 0 ;\n").0, EXIT_PARSE);
        assert_eq!(call(&["multichunk"], "scc2020\n2\n1 1\n0 0 ; 0\n1 1 ;\n").0, EXIT_VALIDATION);
        assert_eq!(call(&["mpfree", "--dim", "2"], EXAMPLE).0, EXIT_VALIDATION);
        assert_eq!(call(&["multichunk", "--threads", "0"], EXAMPLE).0, EXIT_PARSE);
        assert_eq!(call(&["--help"], "").0, EXIT_OK);
    }

    #[test]
    fn suffixes() {
        assert_eq!(suffixed_path(Path::new("a/out.scc"), 1), PathBuf::from("a/out_h1.scc"));
        assert_eq!(suffixed_path(Path::new("out"), 2), PathBuf::from("out_h2"));
    }
}
