use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use golodtight_core::fm::verify_fm;
use golodtight_core::generators;
use golodtight_core::hochster::{hochster_table, is_weakly_golod, DEFAULT_MAX_VERTICES};
use golodtight_core::io::{self, Format};
use golodtight_core::manifold::validate_manifold;
use golodtight_core::oracle::{compare, OracleKind};
use golodtight_core::report::{analyze, render_json, render_text, AnalyzeOptions};
use golodtight_core::tightness::{is_tight, TightOptions};
use golodtight_core::{BuildOptions, Error, Face, FieldSpec, SimplicialComplex};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_AUDIT: u8 = 5;
const EXIT_PREDICATE: u8 = 6;

#[derive(Parser)]
#[command(
    name = "golodtight",
    version,
    about = "Tightness, weak Golodness and Hochster tables of simplicial complexes"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Coefficient field: `q` or a prime. Repeatable.
    #[arg(long = "field", global = true, value_name = "F")]
    fields: Vec<FieldSpec>,
    /// Enumeration cap on the number of vertices.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    /// Truncation degree for Poincaré series.
    #[arg(long, global = true, value_name = "N")]
    truncate: Option<usize>,
    /// Disable every pruning rule.
    #[arg(long, global = true)]
    no_prune: bool,
    #[arg(long, global = true, value_enum, default_value_t = ReportKind::Text)]
    report: ReportKind,
    /// Worker threads (0: one per core). GOLODTIGHT_THREADS takes precedence.
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    parallel: usize,
    /// Accept vertices that lie in no facet.
    #[arg(long, global = true)]
    allow_isolated: bool,
}

impl Common {
    fn fields(&self) -> Vec<FieldSpec> {
        if self.fields.is_empty() {
            vec![FieldSpec::Prime(2), FieldSpec::Rational]
        } else {
            self.fields.clone()
        }
    }

    fn build(&self) -> BuildOptions {
        BuildOptions {
            allow_isolated: self.allow_isolated,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportKind {
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Rzk,
    Zk,
}

#[derive(Subcommand)]
enum Command {
    /// Run every predicate and the consistency audit.
    Analyze {
        file: PathBuf,
    },
    /// Write a generated complex.
    ///
    /// boundary-simplex N | cycle N | stacked-sphere D K | join A B |
    /// connected-sum A B [FACET_A FACET_B] | rp2-6 | torus-7 | sphere-bundle D |
    /// cyclic-polytope N D. Facets are comma separated labels; the matching
    /// pairs them in increasing order.
    Gen {
        name: String,
        params: Vec<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Compare a brute-force Betti computation with the Hochster prediction.
    Oracle {
        which: Which,
        file: PathBuf,
    },
    /// Nonzero reduced Betti numbers of full subcomplexes.
    Hochster {
        file: PathBuf,
    },
    Tight {
        file: PathBuf,
    },
    Golod {
        file: PathBuf,
    },
    /// Build F(M) and check its structure; optionally write it out.
    Fm {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn load(path: &Path, opts: BuildOptions) -> Result<SimplicialComplex> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let format = Format::from_path(&path.to_string_lossy());
    io::parse(&text, format, opts).with_context(|| format!("loading {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T> {
    let raw = params
        .get(i)
        .with_context(|| format!("missing parameter {what}"))?;
    raw.parse()
        .map_err(|_| anyhow::anyhow!("bad value '{raw}' for {what}"))
}

fn parse_face(s: &str) -> Result<Face> {
    let labels = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .with_context(|| format!("bad label '{t}'"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Face::from_vertices(labels))
}

fn generate(name: &str, params: &[String], opts: BuildOptions) -> Result<SimplicialComplex> {
    let small = |what: &str, v: usize, lo: usize| -> Result<usize> {
        if v < lo || v > 62 {
            bail!("{what} = {v} out of range");
        }
        Ok(v)
    };
    Ok(match name {
        "boundary-simplex" => generators::boundary_simplex(small("N", param(params, 0, "N")?, 1)?),
        "cycle" => generators::cycle(small("N", param(params, 0, "N")?, 3)?),
        "stacked-sphere" => {
            let d = small("D", param(params, 0, "D")?, 1)?;
            let k = small("K", param(params, 1, "K")?, 1)?;
            if d + k + 1 > 63 {
                bail!("too many vertices");
            }
            generators::stacked_sphere(d, k)
        }
        "join" => {
            let a = load(Path::new(&params.first().context("missing file A")?), opts)?;
            let b = load(Path::new(&params.get(1).context("missing file B")?), opts)?;
            generators::join(&a, &b)?
        }
        "connected-sum" => {
            let a = load(Path::new(&params.first().context("missing file A")?), opts)?;
            let b = load(Path::new(&params.get(1).context("missing file B")?), opts)?;
            let fa = match params.get(2) {
                Some(s) => parse_face(s)?,
                None => *a.facets().first().context("empty complex")?,
            };
            let fb = match params.get(3) {
                Some(s) => parse_face(s)?,
                None => *b.facets().first().context("empty complex")?,
            };
            let matching: Vec<(usize, usize)> = fb.vertices().zip(fa.vertices()).collect();
            generators::connected_sum(&a, fa, &b, fb, &matching)?
        }
        "rp2-6" => generators::rp2_6(),
        "torus-7" => generators::torus_7(),
        "sphere-bundle" => {
            let d = small("D", param(params, 0, "D")?, 2)?;
            if 2 * d + 3 > 63 {
                bail!("too many vertices");
            }
            generators::sphere_bundle(d)
        }
        "cyclic-polytope" => {
            let n = small("N", param(params, 0, "N")?, 3)?;
            let d = small("D", param(params, 1, "D")?, 2)?;
            if n <= d {
                bail!("need N > D");
            }
            generators::cyclic_polytope_boundary(n, d)
        }
        other => return Err(Error::UnknownGenerator(other.to_string()).into()),
    })
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<u8> {
    let c = &cli.common;
    let structured = c.report == ReportKind::Structured;
    match &cli.command {
        Command::Analyze { file } => {
            let k = load(file, c.build())?;
            if k.m() > c.max_vertices {
                return Err(Error::TooManyVertices {
                    m: k.m(),
                    cap: c.max_vertices,
                }
                .into());
            }
            let opts = AnalyzeOptions {
                fields: c.fields(),
                max_vertices: c.max_vertices,
                prune: !c.no_prune,
                truncate: c.truncate,
            };
            let r = analyze(&k, &opts);
            if structured {
                println!("{}", render_json(&r));
            } else {
                print!("{}", render_text(&r));
            }
            Ok(if r.any_errors() {
                EXIT_PREDICATE
            } else if !r.audit_clean() {
                EXIT_AUDIT
            } else {
                0
            })
        }
        Command::Gen {
            name,
            params,
            out,
            format,
        } => {
            let k = generate(name, params, c.build())?;
            let f = if *format == OutFormat::Json {
                Format::Json
            } else {
                Format::Text
            };
            emit(&io::render(&k, f), out.as_deref())?;
            Ok(0)
        }
        Command::Oracle { which, file } => {
            let k = load(file, c.build())?;
            let kind = match which {
                Which::Rzk => OracleKind::Rzk,
                Which::Zk => OracleKind::Zk,
            };
            let mut all = true;
            let mut records = Vec::new();
            for f in c.fields() {
                let cmp = compare(&k, kind, f, c.max_vertices)?;
                all &= cmp.agrees();
                records.push(cmp);
            }
            if structured {
                print!("{}", json(&records));
            } else {
                for r in &records {
                    let name = if r.kind == OracleKind::Rzk {
                        "rzk"
                    } else {
                        "zk"
                    };
                    println!(
                        "{name} over {}: predicted {:?} computed {:?} {}",
                        r.field,
                        r.predicted,
                        r.computed,
                        if r.agrees() { "PASS" } else { "FAIL" }
                    );
                }
            }
            Ok(if all { 0 } else { EXIT_AUDIT })
        }
        Command::Hochster { file } => {
            let k = load(file, c.build())?;
            let mut tables = Vec::new();
            for f in c.fields() {
                tables.push((f, hochster_table(&k, f, c.max_vertices)?));
            }
            if structured {
                let rows: Vec<_> = tables.iter().map(|(f, t)| (f, t.entries())).collect();
                print!("{}", json(&rows));
            } else {
                for (f, t) in &tables {
                    println!("field {f}");
                    let mut rows = t.entries();
                    rows.sort_by(|a, b| a.0.cmp_lex(b.0).then(a.1.cmp(&b.1)));
                    for (i, p, r) in rows {
                        println!("{i} {p} {r}");
                    }
                }
            }
            Ok(0)
        }
        Command::Tight { file } => {
            let k = load(file, c.build())?;
            let opts = TightOptions {
                prune: !c.no_prune,
                max_vertices: c.max_vertices,
            };
            let mut reports = Vec::new();
            for f in c.fields() {
                reports.push(is_tight(&k, f, opts)?);
            }
            if structured {
                print!("{}", json(&reports));
            } else {
                for r in &reports {
                    match r.witness {
                        Some((i, d)) => {
                            println!("{}: not tight (witness {i}, degree {d})", r.field)
                        }
                        None => println!("{}: tight", r.field),
                    }
                }
            }
            Ok(0)
        }
        Command::Golod { file } => {
            let k = load(file, c.build())?;
            let mut certs = Vec::new();
            for f in c.fields() {
                certs.push(is_weakly_golod(&k, f, c.max_vertices, !c.no_prune)?);
            }
            if structured {
                print!("{}", json(&certs));
            } else {
                for g in &certs {
                    match &g.witness {
                        Some(w) => println!(
                            "{}: not weakly Golod (witness ({}, {}), degree {} from ({}, {}), rank {})",
                            g.field, w.first, w.second, w.degree, w.p, w.q, w.rank
                        ),
                        None => println!("{}: weakly Golod ({} pairs computed)", g.field, g.pairs_computed),
                    }
                }
            }
            Ok(0)
        }
        Command::Fm { file, out } => {
            let k = load(file, c.build())?;
            let fields = c.fields();
            let report = validate_manifold(&k, &fields);
            let r = verify_fm(&k, &report, &fields)?;
            if let Some(p) = out {
                emit(
                    &io::render(&r.fm, Format::from_path(&p.to_string_lossy())),
                    Some(p),
                )?;
            }
            if structured {
                print!("{}", json(&r));
            } else {
                println!(
                    "F(M): {} facets added, |S(M)| = {}",
                    r.added_facets.len(),
                    r.sm.len()
                );
                for (f, bf, _) in &r.betti {
                    println!("reduced betti over {f}: {bf:?}");
                }
                for ch in &r.checks {
                    let w = ch
                        .witness
                        .as_ref()
                        .map(|w| format!(" ({w})"))
                        .unwrap_or_default();
                    println!(
                        "{}: {}{w}",
                        ch.name,
                        if ch.passed { "pass" } else { "FAIL" }
                    );
                }
            }
            Ok(if r.all_passed() { 0 } else { EXIT_AUDIT })
        }
    }
}

fn threads(flag: usize) -> Result<usize> {
    match std::env::var("GOLODTIGHT_THREADS") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("GOLODTIGHT_THREADS='{v}' is not a number")),
        Err(_) => Ok(flag),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.chain().find_map(|e| e.downcast_ref::<Error>()) {
        Some(
            Error::Parse { .. }
            | Error::EmptyInput
            | Error::LabelOutOfRange { .. }
            | Error::MissingVertex(_),
        ) => EXIT_PARSE,
        Some(
            Error::TooManyLabels(_) | Error::TooManyVertices { .. } | Error::BudgetExceeded(_),
        ) => EXIT_BUDGET,
        Some(Error::UnknownGenerator(_)) => EXIT_USAGE,
        Some(_) => EXIT_PREDICATE,
        None => EXIT_FAILURE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = threads(cli.common.parallel).and_then(|n| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("starting worker pool")?;
        run(&cli)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
