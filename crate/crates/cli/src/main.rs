use std::fmt::Display;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use chipfire::certify::{certify_product, check_all_equal, reduce_alpha, CertifyOptions, Via};
use chipfire::constructions::{cartesian_product, cone};
use chipfire::divisor::{q_reduce_with_script, rank, Divisor};
use chipfire::format::{
    parse_divisor, parse_eggs, parse_mel, write_divisor, write_eggs, write_mel,
};
use chipfire::gonality::{gonality_with, GonalityOptions, Strategy};
use chipfire::invariants::*;
use chipfire::scramble::{edge_scramble, product_scramble, scramble_order, EggCut, Scramble};
use chipfire::sn::{sn_bounds, SnOptions};
use chipfire::{fixtures, generators, Multigraph, VertexSet};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "chipfire",
    version,
    about = "Gonality, divisors and scramble number of finite multigraphs"
)]
struct Cli {
    /// Print stable `key=value` lines.
    #[arg(long, global = true)]
    machine: bool,
    /// Worker threads for the gonality search (output does not depend on it).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph family in MEL format.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Basic invariants of a graph.
    Info { graph: String },
    /// Exact gonality with a witness divisor.
    Gonality {
        graph: String,
        #[arg(long)]
        lower: Option<u64>,
        #[arg(long)]
        upper: Option<u64>,
        #[arg(long, value_enum, default_value_t = SearchArg::Reduced)]
        strategy: SearchArg,
    },
    /// Rank of a divisor, truncated at `--cap`.
    Rank {
        graph: String,
        divisor: String,
        #[arg(long)]
        cap: u32,
    },
    /// The q-reduced divisor equivalent to a divisor.
    Reduce {
        graph: String,
        divisor: String,
        #[arg(long, default_value_t = 0)]
        q: usize,
        /// Also print the firing script.
        #[arg(long)]
        script: bool,
    },
    /// Order of a scramble with its hitting set and egg-cut.
    ScrambleOrder { graph: String, scramble: String },
    /// Lower and upper bounds on the scramble number.
    SnBounds {
        graph: String,
        /// Run the exhaustive search on small pieces with this egg cap.
        #[arg(long, value_name = "MAX_EGGS")]
        brute: Option<usize>,
        /// Extra scramble file (repeatable).
        #[arg(long = "scramble")]
        scrambles: Vec<String>,
        /// The graph is G □ H for these factors.
        #[arg(long, num_args = 2, value_names = ["G", "H"])]
        factors: Option<Vec<String>>,
        /// Largest piece that gets an exact gonality upper bound.
        #[arg(long, default_value_t = 12)]
        budget: usize,
    },
    /// The edge scramble of a graph.
    EdgeScramble { graph: String },
    /// The scramble of canonical copies of G minus k - 1 vertices on G □ H.
    ProductScramble {
        g: String,
        h: String,
        #[arg(long)]
        k: usize,
    },
    /// Cartesian product G □ H.
    Product { g: String, h: String },
    /// Cone over a graph with `--l` new vertices (default: as many as the graph has).
    Cone {
        graph: String,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Try to certify the gonality of G □ H from the factors.
    Certify {
        g: String,
        h: String,
        #[arg(long = "gon-G")]
        gon_g: Option<u64>,
        #[arg(long = "gon-H")]
        gon_h: Option<u64>,
        #[arg(long, default_value_t = 12)]
        budget: usize,
    },
    /// Recover the independence number from the gonality of a cone.
    ReduceAlpha {
        graph: String,
        #[arg(long, value_enum, default_value_t = ViaArg::Gonality)]
        via: ViaArg,
    },
    /// Check whether sn = gon = n - alpha follows from the minimum degree.
    AllEqual { graph: String },
    /// Write the example graphs and run their checks.
    Fixtures {
        #[arg(long)]
        check: bool,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    Path {
        m: usize,
    },
    Cycle {
        m: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    CompleteMultipartite {
        #[arg(required = true)]
        parts: Vec<usize>,
    },
    Hypercube {
        d: usize,
    },
    Grid {
        #[arg(required = true)]
        dims: Vec<usize>,
    },
    Star {
        m: usize,
    },
    RandomTree {
        m: usize,
        #[arg(long)]
        seed: u64,
    },
    RandomGraph {
        n: usize,
        p: f64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchArg {
    Reduced,
    Valence,
    Unpruned,
}

#[derive(Clone, Copy, ValueEnum)]
enum ViaArg {
    Gonality,
    Sandwich,
}

enum Failure {
    /// Bad input or a failed hypothesis: exit 2.
    Invalid(String),
    /// A bug: exit 1.
    Internal(String),
}

impl From<chipfire::Error> for Failure {
    fn from(e: chipfire::Error) -> Self {
        match e {
            chipfire::Error::Soundness(_) => Failure::Internal(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, Failure>;

struct Out {
    machine: bool,
    text: String,
}

impl Out {
    fn kv(&mut self, key: &str, value: impl Display) {
        let line = if self.machine {
            format!("{key}={value}\n")
        } else {
            format!("{}: {value}\n", key.replace('_', " "))
        };
        self.text.push_str(&line);
    }

    fn raw(&mut self, s: &str) {
        self.text.push_str(s);
    }

    /// Text-mode only.
    fn note(&mut self, s: impl Display) {
        if !self.machine {
            self.text.push_str(&format!("{s}\n"));
        }
    }
}

struct Inputs {
    stdin_taken: bool,
}

impl Inputs {
    fn text(&mut self, arg: &str) -> Result<String> {
        if arg == "-" {
            if self.stdin_taken {
                return Err(Failure::Invalid(
                    "stdin (`-`) can be used for only one argument".into(),
                ));
            }
            self.stdin_taken = true;
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Invalid(format!("stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(arg).map_err(|e| Failure::Invalid(format!("{arg}: {e}")))
        }
    }

    fn graph(&mut self, arg: &str) -> Result<Multigraph> {
        let text = self.text(arg)?;
        parse_mel(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", name(arg))))
    }

    fn divisor(&mut self, g: &Multigraph, arg: &str) -> Result<Divisor> {
        let text = self.text(arg)?;
        let chips =
            parse_divisor(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", name(arg))))?;
        Ok(Divisor::new(g, chips)?)
    }

    fn scramble(&mut self, g: &Multigraph, arg: &str) -> Result<Scramble> {
        let text = self.text(arg)?;
        let eggs = parse_eggs(&text, g.vertex_count())
            .map_err(|e| Failure::Invalid(format!("{}: {e}", name(arg))))?;
        Ok(Scramble::new(g, eggs)?)
    }
}

fn name(arg: &str) -> &str {
    if arg == "-" {
        "stdin"
    } else {
        arg
    }
}

fn vertices(s: &VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn generate(family: &Family) -> chipfire::Result<Multigraph> {
    use generators::*;
    match family {
        Family::Path { m } => path(*m),
        Family::Cycle { m } => cycle(*m),
        Family::Complete { n } => complete(*n),
        Family::CompleteBipartite { m, n } => complete_bipartite(*m, *n),
        Family::CompleteMultipartite { parts } => complete_multipartite(parts),
        Family::Hypercube { d } => hypercube(*d),
        Family::Grid { dims } => grid(dims),
        Family::Star { m } => star(*m),
        Family::RandomTree { m, seed } => random_tree(*m, *seed),
        Family::RandomGraph { n, p, seed } => random_graph(*n, *p, *seed),
    }
}

fn run(cli: Cli, out: &mut Out) -> Result<()> {
    let mut inputs = Inputs { stdin_taken: false };
    match cli.command {
        Command::Gen { family } => out.raw(&write_mel(&generate(&family)?)),
        Command::Info { graph } => {
            let g = inputs.graph(&graph)?;
            out.kv("vertices", g.vertex_count());
            out.kv("edges", g.edge_count());
            out.kv("simple", g.is_simple());
            out.kv("connected", g.is_connected());
            out.kv("components", components(&g).len());
            out.kv("min_degree", min_degree(&g));
            out.kv("edge_connectivity", edge_connectivity(&g));
            out.kv("vertex_connectivity", vertex_connectivity(&g));
            out.kv("independence_number", independence_number(&g));
            out.kv("tree", is_tree(&g));
            let b: Vec<String> = bridges(&g)
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect();
            out.kv(
                "bridges",
                if b.is_empty() {
                    "none".into()
                } else {
                    b.join(" ")
                },
            );
        }
        Command::Gonality {
            graph,
            lower,
            upper,
            strategy,
        } => {
            let g = inputs.graph(&graph)?;
            let strategy = match strategy {
                SearchArg::Reduced => Strategy::Reduced,
                SearchArg::Valence => Strategy::Valence,
                SearchArg::Unpruned => Strategy::Unpruned,
            };
            let gon = gonality_with(
                &g,
                &GonalityOptions {
                    lower,
                    upper,
                    strategy,
                },
            )?;
            if out.machine {
                out.kv("gonality", gon.value);
                out.kv(
                    "witness",
                    write_divisor(gon.witness.chips())
                        .split_whitespace()
                        .skip(1)
                        .collect::<Vec<_>>()
                        .join(" "),
                );
            } else {
                out.raw(&format!("{}\nwitness: {}\n", gon.value, gon.witness));
            }
        }
        Command::Rank {
            graph,
            divisor,
            cap,
        } => {
            let g = inputs.graph(&graph)?;
            let d = inputs.divisor(&g, &divisor)?;
            out.kv("rank", rank(&g, &d, cap)?);
        }
        Command::Reduce {
            graph,
            divisor,
            q,
            script,
        } => {
            let g = inputs.graph(&graph)?;
            let d = inputs.divisor(&g, &divisor)?;
            let r = q_reduce_with_script(&g, &d, q)?;
            out.kv("reduced", chips(&r.divisor));
            out.note(format!("as sum: {}", r.divisor));
            if script {
                out.kv("script_steps", r.script.len());
                for (i, (set, times)) in r.script.iter().enumerate() {
                    out.kv(
                        &format!("step_{i}"),
                        format!("fire {{{}}} x{times}", vertices(set)),
                    );
                }
            }
        }
        Command::ScrambleOrder { graph, scramble } => {
            let g = inputs.graph(&graph)?;
            let s = inputs.scramble(&g, &scramble)?;
            let o = scramble_order(&s);
            out.kv("eggs", s.eggs().len());
            out.kv("order", o.order);
            out.kv("hitting_number", o.hitting);
            out.kv("hitting_set", vertices(&o.hitting_set));
            out.kv("egg_cut_number", &o.egg_cut);
            if let EggCut::Finite { side, pair, .. } = &o.egg_cut {
                out.kv("egg_cut_side", vertices(side));
                out.kv("egg_cut_eggs", format!("{} {}", pair.0, pair.1));
            }
        }
        Command::SnBounds {
            graph,
            brute,
            scrambles,
            factors,
            budget,
        } => {
            let g = inputs.graph(&graph)?;
            let scrambles = scrambles
                .iter()
                .map(|f| inputs.scramble(&g, f))
                .collect::<Result<Vec<_>>>()?;
            let factors = match factors {
                Some(f) => Some((inputs.graph(&f[0])?, inputs.graph(&f[1])?)),
                None => None,
            };
            let r = sn_bounds(
                &g,
                &SnOptions {
                    gonality_budget: budget,
                    brute_max_eggs: brute,
                    scrambles,
                    factors,
                },
            )?;
            out.kv("lower", r.lower);
            out.kv("upper", r.upper);
            out.kv("lower_source", &r.lower_source);
            out.kv("upper_source", &r.upper_source);
            out.kv("exact", r.is_exact());
        }
        Command::EdgeScramble { graph } => {
            let g = inputs.graph(&graph)?;
            out.raw(&write_eggs(edge_scramble(&g)?.eggs()));
        }
        Command::ProductScramble { g, h, k } => {
            let (g, h) = (inputs.graph(&g)?, inputs.graph(&h)?);
            out.raw(&write_eggs(product_scramble(&g, &h, k)?.eggs()));
        }
        Command::Product { g, h } => {
            let (g, h) = (inputs.graph(&g)?, inputs.graph(&h)?);
            out.raw(&write_mel(&cartesian_product(&g, &h)));
        }
        Command::Cone { graph, l } => {
            let g = inputs.graph(&graph)?;
            out.raw(&write_mel(&cone(&g, l.unwrap_or(g.vertex_count()))));
        }
        Command::Certify {
            g,
            h,
            gon_g,
            gon_h,
            budget,
        } => {
            let (g, h) = (inputs.graph(&g)?, inputs.graph(&h)?);
            let cert = certify_product(
                &g,
                &h,
                &CertifyOptions {
                    gon_g,
                    gon_h,
                    budget,
                },
            )?;
            for (i, c) in cert.checks.iter().enumerate() {
                let key = format!("check_{i}");
                out.kv(
                    &key,
                    format!(
                        "{} ({}) {}",
                        c.id,
                        c.orientation,
                        if c.passed() { "passed" } else { "failed" }
                    ),
                );
                if let Some(v) = c.value {
                    out.kv(&format!("{key}_value"), v);
                }
                for (j, hyp) in c.hypotheses.iter().enumerate() {
                    let mark = if hyp.pass { "pass" } else { "fail" };
                    out.kv(
                        &format!("{key}_hypothesis_{j}"),
                        format!("{mark}; {}; {}", hyp.name, hyp.detail),
                    );
                }
            }
            match &cert.certified {
                Some(c) => {
                    out.kv("certified", true);
                    out.kv("statement", c.statement);
                    out.kv("orientation", c.orientation);
                    out.kv("gonality", c.value);
                    out.kv("scramble_number_too", c.sn_too);
                }
                None => {
                    out.kv("certified", false);
                    let b = &cert.bounds;
                    out.kv("lower", b.lower);
                    out.kv("upper", b.upper);
                    out.kv("lower_source", &b.lower_source);
                    out.kv("upper_source", &b.upper_source);
                }
            }
        }
        Command::ReduceAlpha { graph, via } => {
            let g = inputs.graph(&graph)?;
            let via = match via {
                ViaArg::Gonality => Via::Gonality,
                ViaArg::Sandwich => Via::Sandwich,
            };
            let r = reduce_alpha(&g, via)?;
            out.kv("alpha", r.alpha);
            out.kv("m", r.m);
            out.kv("cone_gonality", r.value);
            let mel = write_mel(&r.cone);
            if out.machine {
                out.kv("cone", mel.trim_end().replace('\n', ";"));
            } else {
                out.raw(&format!("cone:\n{mel}"));
            }
        }
        Command::AllEqual { graph } => {
            let g = inputs.graph(&graph)?;
            match check_all_equal(&g)? {
                Some(r) => {
                    out.kv("certified", true);
                    out.kv("value", r.value);
                    out.kv("alpha", r.alpha);
                    out.kv("edge_scramble_order", r.edge_scramble_order);
                }
                None => out.kv("certified", false),
            }
        }
        Command::Fixtures { check, dir } => fixtures_cmd(check, dir, out)?,
    }
    Ok(())
}

fn chips(d: &Divisor) -> String {
    d.chips()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn fixtures_cmd(check: bool, dir: Option<PathBuf>, out: &mut Out) -> Result<()> {
    let all = fixtures::all();
    if let Some(dir) = &dir {
        let io = |e: std::io::Error| Failure::Invalid(format!("{}: {e}", dir.display()));
        std::fs::create_dir_all(dir).map_err(io)?;
        for f in &all {
            let text = format!(
                "# {}\n# labels: {}\n{}",
                f.name,
                f.labels.join(" "),
                write_mel(&f.graph)
            );
            std::fs::write(dir.join(format!("{}.mel", f.name)), text).map_err(io)?;
        }
        let scrambles = [
            ("cube.scr", fixtures::cube_scramble()),
            ("wedge-three-valent.scr", fixtures::wedge_scramble()),
            ("immersion-g.scr", fixtures::immersion_scramble()),
        ];
        for (file, s) in scrambles {
            std::fs::write(dir.join(file), write_eggs(s.eggs())).map_err(io)?;
        }
        out.kv("written", all.len() + 3);
    }
    if !check && dir.is_none() {
        for f in &all {
            out.kv(
                &format!("fixture_{}", f.name),
                format!(
                    "{} vertices, {} edges",
                    f.graph.vertex_count(),
                    f.graph.edge_count()
                ),
            );
        }
    }
    if check {
        let checks = fixtures::run_checks()?;
        let failed = checks.iter().filter(|c| !c.pass).count();
        for (i, c) in checks.iter().enumerate() {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out.kv(
                &format!("check_{i}"),
                format!("{mark} {}: {}", c.name, c.detail),
            );
        }
        out.kv("checks_failed", failed);
        if failed > 0 {
            return Err(Failure::Internal(format!("{failed} fixture checks failed")));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let mut out = Out {
        machine: cli.machine,
        text: String::new(),
    };
    let result = run(cli, &mut out);
    print!("{}", out.text);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
