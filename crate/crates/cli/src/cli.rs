//! Command-line front end. [`run`] returns the output and exit status
//! instead of printing, so tests can call it directly.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use heptad::atlas::{builtin_seeds, census, seed};
use heptad::io::{summary_lines, ConfigFile};
use heptad::Error;

use crate::api::{self, exit_code, CremonaRequest, PathRequest, SearchParams, EXIT_NOT_CERTIFIED};
use crate::service::DEFAULT_PORT;

#[derive(Parser, Debug)]
#[command(name = "heptad", version, about = "Classify typical 7-point configurations in RP² up to Q-deformation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the class and fingerprint of a configuration file.
    Classify {
        file: PathBuf,
        /// Emit the full class report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Check the straight path between two configurations for walls.
    Path {
        start: PathBuf,
        end: PathBuf,
        /// Search for a piecewise-linear path instead.
        #[arg(long)]
        search: bool,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Apply the quadratic Cremona map based at points i, j, k.
    Cremona {
        file: PathBuf,
        i: usize,
        j: usize,
        k: usize,
        /// Write the image here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List or emit the built-in seeds.
    Seeds {
        #[command(subcommand)]
        action: SeedAction,
    },
    /// Classify random configurations and summarize.
    Census {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 100)]
        bound: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Start the local JSON service on 127.0.0.1.
    Serve {
        #[arg(long, env = "HEPTAD_PORT", default_value_t = DEFAULT_PORT)]
        port: u16,
    },
}

#[derive(Subcommand, Debug)]
enum SeedAction {
    /// Print seed names, or the whole seed file with --json.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print one seed as a configuration file.
    Emit { name: String },
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { code: 0, stdout, stderr: String::new() }
    }

    fn fail(e: &Error) -> Self {
        Output { code: exit_code(e), stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

fn read(path: &PathBuf) -> Result<ConfigFile, Output> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Output { code: 1, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) })?;
    ConfigFile::parse(&text).map_err(|e| Output::fail(&e))
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { Output::ok(text) } else { Output { code, stdout: String::new(), stderr: text } };
        }
    };
    match execute(cli.command) {
        Ok(out) | Err(out) => out,
    }
}

fn execute(command: Command) -> Result<Output, Output> {
    match command {
        Command::Classify { file, json } => {
            let f = read(&file)?;
            match api::classify(&f) {
                Ok(report) if json => Ok(Output::ok(report.to_json())),
                Ok(report) => Ok(Output::ok(summary_lines(&report).join("\n") + "\n")),
                Err((e, Some(report))) => {
                    let stdout = if json { report.to_json() } else { summary_lines(&report).join("\n") + "\n" };
                    Err(Output { stdout, ..Output::fail(&e) })
                }
                Err((e, None)) => Err(Output::fail(&e)),
            }
        }
        Command::Path { start, end, search, budget, seed, json } => {
            let req = PathRequest {
                start: read(&start)?,
                end: read(&end)?,
                search: search.then_some(SearchParams { budget, seed }),
            };
            let report = api::path(&req).map_err(|e| Output::fail(&e))?;
            let code = if report.certified { 0 } else { EXIT_NOT_CERTIFIED };
            let stdout = if json {
                api::to_json(&report)
            } else {
                let mut s = String::new();
                let [a, b] = &report.classes;
                writeln!(s, "{a} -> {b}").unwrap();
                match (&report.waypoints, search) {
                    (Some(w), _) => {
                        writeln!(s, "Q-isotopy certified ({} segments, {} checks)", w.len() - 1, report.calls.unwrap_or(0))
                            .unwrap();
                        writeln!(s, "relabeling {:?}", report.relabeling.as_deref().unwrap_or(&[])).unwrap();
                    }
                    (None, true) => writeln!(s, "no path found within budget (inconclusive)").unwrap(),
                    (None, false) if report.certified => writeln!(s, "Q-isotopy certified (0 events)").unwrap(),
                    (None, false) => {
                        writeln!(s, "{} events", report.events.len()).unwrap();
                        for e in &report.events {
                            let flag = if e.clustered { " (clustered)" } else { "" };
                            writeln!(s, "t ≈ {:.6}  {}{flag}", e.approx_t, e.wall).unwrap();
                        }
                    }
                }
                s
            };
            Ok(Output { code, stdout, stderr: String::new() })
        }
        Command::Cremona { file, i, j, k, output } => {
            let req = CremonaRequest { config: read(&file)?, base: [i, j, k] };
            let img = api::cremona_image(&req).map_err(|e| Output::fail(&e))?;
            let text = img.config.to_json();
            match output {
                Some(path) => {
                    std::fs::write(&path, &text).map_err(|e| Output {
                        code: 1,
                        stdout: String::new(),
                        stderr: format!("error: {}: {e}\n", path.display()),
                    })?;
                    Ok(Output::ok(format!("{}\n", img.class)))
                }
                None => Ok(Output::ok(text)),
            }
        }
        Command::Seeds { action: SeedAction::List { json } } => {
            if json {
                return api::seeds_json().map(Output::ok).map_err(|e| Output::fail(&e));
            }
            let seeds = builtin_seeds().map_err(|e| Output::fail(&e))?;
            Ok(Output::ok(seeds.iter().map(|s| format!("{}\t{}\n", s.name, s.class)).collect()))
        }
        Command::Seeds { action: SeedAction::Emit { name } } => {
            let s = seed(&name).map_err(|e| Output::fail(&e))?;
            Ok(Output::ok(s.config_file().to_json()))
        }
        Command::Census { samples, bound, seed, json } => {
            let r = census(samples, bound, seed).map_err(|e| Output::fail(&e))?;
            if json {
                return Ok(Output::ok(api::to_json(&r)));
            }
            let mut s = String::new();
            writeln!(s, "samples {}  typical {}  degenerate {}", r.samples, r.typical, r.degenerate).unwrap();
            for (class, n) in &r.classes {
                writeln!(s, "{class}\t{n}").unwrap();
            }
            writeln!(s, "distinct fingerprints {}", r.fingerprints.len()).unwrap();
            if !r.unseen.is_empty() {
                writeln!(s, "unseen {}", r.unseen.join(" ")).unwrap();
            }
            Ok(Output::ok(s))
        }
        Command::Serve { port } => {
            let rt = tokio::runtime::Runtime::new()
                .map_err(|e| Output { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") })?;
            rt.block_on(crate::service::serve(port))
                .map(|()| Output::default())
                .map_err(|e| Output { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") })
        }
    }
}
