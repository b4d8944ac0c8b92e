//! Command-line surface: argument parsing, config loading and JSON emission.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bggmod::{action_matrix, jordan_profile, matrix_strings, max_block_witness, SubsystemFrame};
use crate::coxeter::{CoxeterGroup, Elem, RootSystem, DEFAULT_GROUP_BOUND};
use crate::error::{Error, Result};
use crate::galois::{is_seed, seed_normalize, GaloisConfig, GtModule, OperatorVector, Sign, Verdict};
use crate::polyring::{parse_poly, poly_to_json, Point, Shape};
use crate::rational::{self, Rational};
use crate::schubert::SchubertCalculus;

#[derive(Parser, Debug)]
#[command(name = "gt", version, about = "Exact divided differences, BGG operator modules and Gelfand-Tsetlin modules")]
pub struct Cli {
    /// Compact single-line JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,
    /// Indented JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GroupOpts {
    /// Block sizes of the type A root system, e.g. "1,2,3".
    #[arg(long)]
    pub mu: String,
}

#[derive(Args, Debug, Clone)]
pub struct FrameOpts {
    #[command(flatten)]
    pub group: GroupOpts,
    /// Simple reflections (1-based, block-major) spanning the subsystem; all when omitted.
    #[arg(long)]
    pub omega: Option<String>,
    /// The point v, comma-separated rationals.
    #[arg(long)]
    pub point: String,
}

#[derive(Args, Debug, Clone)]
pub struct ModuleOpts {
    /// GaloisConfig JSON file.
    #[arg(long)]
    pub config: PathBuf,
    /// The seed v̂, comma-separated rationals; zero when omitted.
    #[arg(long)]
    pub seed: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Elements, lengths and reduced words of S_μ.
    Group(GroupOpts),
    /// The Schubert polynomial 𝔖_σ.
    Schubert {
        #[command(flatten)]
        group: GroupOpts,
        #[arg(long)]
        sigma: String,
    },
    /// The structure constant c^ρ_{σ,τ}, or the full expansion of 𝔖_σ𝔖_τ.
    Lr {
        #[command(flatten)]
        group: GroupOpts,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        tau: String,
        #[arg(long)]
        rho: Option<String>,
    },
    /// The dual polynomial P_σ, or the chain polynomial P_{σ,τ}.
    Ps {
        #[command(flatten)]
        group: GroupOpts,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        tau: Option<String>,
    },
    /// Saturated Bruhat chains from σ to τ with their cover roots.
    Chains {
        #[command(flatten)]
        group: GroupOpts,
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        tau: String,
    },
    /// The matrix of an invariant γ on 𝒟(Ω, v).
    GammaAct {
        #[command(flatten)]
        frame: FrameOpts,
        #[arg(long)]
        gamma: String,
    },
    /// Jordan blocks of γ on 𝒟(Ω, v); the maximal-block witness when γ is omitted.
    Jordan {
        #[command(flatten)]
        frame: FrameOpts,
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Normalizes a point to a seed.
    Seed {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Applies a generator X_k^± or an invariant γ to a module vector.
    GtAct {
        #[command(flatten)]
        module: ModuleOpts,
        /// Generator block k (with --sign).
        #[arg(long, requires = "sign", conflicts_with = "gamma")]
        k: Option<usize>,
        /// "+" or "-".
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<String>,
        #[arg(long, required_unless_present = "k")]
        gamma: Option<String>,
        /// Vector JSON file; 𝔇_e at z = 0 when omitted.
        #[arg(long)]
        vector: Option<PathBuf>,
    },
    /// The simplicity criterion on a window |z|∞ ≤ R, exact where decidable.
    GtSimplicity {
        #[command(flatten)]
        module: ModuleOpts,
        #[arg(long, default_value_t = 2)]
        window: u32,
    },
    /// Whether 𝔇_to is reachable from 𝔇_from under the generators and Γ.
    GtReach {
        #[command(flatten)]
        module: ModuleOpts,
        #[arg(long)]
        from_z: Option<String>,
        #[arg(long, default_value = "e")]
        from_sigma: String,
        #[arg(long)]
        to_z: Option<String>,
        #[arg(long, default_value = "e")]
        to_sigma: String,
        #[arg(long, default_value_t = 12)]
        max_steps: usize,
    },
}

/// Enumeration bound, overridable through GT_MAX_GROUP.
pub fn group_bound() -> usize {
    std::env::var("GT_MAX_GROUP").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_GROUP_BOUND)
}

fn parse_list<T>(src: &str, what: &str, item: impl Fn(&str) -> Option<T>) -> Result<Vec<T>> {
    if src.trim().is_empty() {
        return Ok(Vec::new());
    }
    src.split(',')
        .map(|s| item(s.trim()).ok_or_else(|| Error::InvalidConfig(format!("bad {what} entry {s:?}"))))
        .collect()
}

fn parse_shape(src: &str) -> Result<Shape> {
    Ok(Shape::new(&parse_list(src, "mu", |s| s.parse().ok())?))
}

fn parse_point(src: &str, shape: &Shape) -> Result<Point> {
    let coords = src.split(',').map(|s| rational::parse(s.trim())).collect::<Result<Vec<Rational>>>()?;
    Point::new(shape, coords)
}

fn parse_shift(src: Option<&str>, n: usize) -> Result<Vec<i64>> {
    match src {
        None => Ok(vec![0; n]),
        Some(s) => {
            let z = parse_list(s, "z", |x| x.parse().ok())?;
            if z.len() != n {
                return Err(Error::ShapeMismatch(format!("z has {} entries, expected {n}", z.len())));
            }
            Ok(z)
        }
    }
}

fn build_group(opts: &GroupOpts) -> Result<Arc<CoxeterGroup>> {
    let shape = parse_shape(&opts.mu)?;
    Ok(Arc::new(CoxeterGroup::with_bound(RootSystem::type_a(&shape), group_bound())?))
}

fn build_frame(opts: &FrameOpts) -> Result<(SubsystemFrame, Point)> {
    let group = build_group(&opts.group)?;
    let omega: Vec<usize> = match &opts.omega {
        None => (0..group.num_simple()).collect(),
        Some(s) => parse_list(s, "omega", |x| x.parse::<usize>().ok().filter(|&i| i >= 1).map(|i| i - 1))?,
    };
    let point = parse_point(&opts.point, group.shape())?;
    Ok((SubsystemFrame::new(group, &omega)?, point))
}

fn read_json(path: &PathBuf) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))
}

fn build_module(opts: &ModuleOpts) -> Result<GtModule> {
    let cfg = GaloisConfig::from_json(&read_json(&opts.config)?)?;
    let seed = match &opts.seed {
        None => Point::zero(cfg.shape()),
        Some(s) => parse_point(s, cfg.shape())?,
    };
    GtModule::with_group_bound(cfg, seed, group_bound())
}

fn words(g: &CoxeterGroup, elems: impl IntoIterator<Item = Elem>) -> Vec<String> {
    elems.into_iter().map(|w| g.word_string(w)).collect()
}

fn strings(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(rational::to_string).collect()
}

/// Runs one parsed command, returning its JSON result.
pub fn run(command: &Command) -> Result<Value> {
    match command {
        Command::Group(opts) => {
            let g = build_group(opts)?;
            let elements: Vec<Value> = g
                .elements()
                .map(|w| json!({"word": g.word_string(w), "length": g.length(w), "images": g.perm(w).images()}))
                .collect();
            Ok(json!({
                "order": g.order(),
                "simple": g.root_system().simple().iter().map(|r| r.display(g.shape())).collect::<Vec<_>>(),
                "longest": g.word_string(g.longest()),
                "elements": elements,
            }))
        }
        Command::Schubert { group, sigma } => {
            let calc = SchubertCalculus::new(build_group(group)?)?;
            let w = calc.group().parse_word(sigma)?;
            Ok(poly_to_json(calc.schubert_poly(w)))
        }
        Command::Lr { group, sigma, tau, rho } => {
            let calc = SchubertCalculus::new(build_group(group)?)?;
            let g = calc.group().clone();
            let (s, t) = (g.parse_word(sigma)?, g.parse_word(tau)?);
            match rho {
                Some(r) => Ok(json!({"coef": rational::to_string(&calc.lr_coeff(s, t, g.parse_word(r)?))})),
                None => {
                    let terms: Vec<Value> = calc
                        .lr_expansion(s, t)
                        .iter()
                        .map(|(r, c)| json!({"rho": g.word_string(*r), "coef": rational::to_string(c)}))
                        .collect();
                    Ok(json!({"expansion": terms}))
                }
            }
        }
        Command::Ps { group, sigma, tau } => {
            let calc = SchubertCalculus::new(build_group(group)?)?;
            let s = calc.group().parse_word(sigma)?;
            match tau {
                None => Ok(poly_to_json(calc.ps_poly(s))),
                Some(t) => Ok(poly_to_json(&calc.ps_chain_poly(s, calc.group().parse_word(t)?)?)),
            }
        }
        Command::Chains { group, sigma, tau } => {
            let g = build_group(group)?;
            let chains = g.saturated_chains(g.parse_word(sigma)?, g.parse_word(tau)?)?;
            let out: Vec<Value> = chains
                .iter()
                .map(|c| {
                    json!({
                        "elements": words(&g, c.elements.iter().copied()),
                        "weights": c.weights.iter().map(|r| r.display(g.shape())).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(json!({"chains": out}))
        }
        Command::GammaAct { frame, gamma } => {
            let (frame, v) = build_frame(frame)?;
            let gamma = parse_poly(gamma, frame.group().shape())?;
            let m = action_matrix(&frame, &gamma, &v)?;
            Ok(json!({
                "basis": words(frame.group(), m.basis.iter().copied()),
                "matrix": matrix_strings(&m.matrix),
                "eigenvalue": rational::to_string(&m.eigenvalue),
            }))
        }
        Command::Jordan { frame, gamma } => {
            let (frame, v) = build_frame(frame)?;
            let gamma = match gamma {
                Some(g) => parse_poly(g, frame.group().shape())?,
                None => max_block_witness(&frame, &v)?,
            };
            let m = action_matrix(&frame, &gamma, &v)?;
            let p = jordan_profile(&frame, &gamma, &v)?;
            Ok(json!({
                "gamma": gamma.to_string(),
                "basis": words(frame.group(), m.basis.iter().copied()),
                "matrix": matrix_strings(&m.matrix),
                "eigenvalue": rational::to_string(&p.eigenvalue),
                "blocks": p.blocks,
                "bound": p.bound,
            }))
        }
        Command::Seed { config, point } => {
            let cfg = GaloisConfig::from_json(&read_json(config)?)?;
            let v = parse_point(point, cfg.shape())?;
            let s = seed_normalize(&v, &cfg);
            Ok(json!({
                "input_is_seed": is_seed(&v, &cfg),
                "seed": strings(s.point.coords()),
                "permutation": s.sigma.images(),
                "shift": s.shift,
            }))
        }
        Command::GtAct { module, k, sign, gamma, vector } => {
            let m = build_module(module)?;
            let x = match vector {
                Some(path) => m.vector_from_json(&read_json(path)?)?,
                None => OperatorVector::basis(m.zero_shift(), m.group().identity()),
            };
            let y = match (k, sign, gamma) {
                (Some(k), Some(sign), _) => m.act_generator(*k, Sign::parse(sign)?, &x)?,
                (_, _, Some(g)) => m.act_gamma(&parse_poly(g, m.config().shape())?, &x)?,
                _ => return Err(Error::InvalidConfig("give --k with --sign, or --gamma".into())),
            };
            Ok(m.vector_to_json(&y))
        }
        Command::GtSimplicity { module, window } => {
            let m = build_module(module)?;
            Ok(match m.simplicity_check(*window)? {
                Verdict::HoldsEverywhere => json!({"verdict": "holds_everywhere"}),
                Verdict::HoldsOnWindow(r) => json!({"verdict": "holds_on_window", "window": r}),
                Verdict::Fails { z, k, i, sign, value } => json!({
                    "verdict": "fails",
                    "z": z,
                    "k": k,
                    "i": i,
                    "sign": sign.to_string(),
                    "value": rational::to_string(&value),
                }),
            })
        }
        Command::GtReach { module, from_z, from_sigma, to_z, to_sigma, max_steps } => {
            let m = build_module(module)?;
            let n = m.nvars();
            let (fz, tz) = (parse_shift(from_z.as_deref(), n)?, parse_shift(to_z.as_deref(), n)?);
            let (fs, ts) = (m.group().parse_word(from_sigma)?, m.group().parse_word(to_sigma)?);
            let reached = m.reachability_probe((&fz, fs), (&tz, ts), *max_steps)?;
            Ok(json!({"reached": reached, "max_steps": max_steps}))
        }
    }
}

/// JSON error object {"error": {"kind", "detail"}}.
pub fn error_json(e: &Error) -> Value {
    json!({"error": {"kind": e.kind(), "detail": e.to_string()}})
}

fn emit(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    } else {
        v.to_string()
    }
}

/// Writes a line to stdout, ignoring a closed pipe.
fn print_line(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{s}");
}

/// Parses argv, runs the command and prints the result. Returns the exit
/// code: 0 on success, 1 on a domain error, 2 on a usage error.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli.command) {
        Ok(v) => {
            print_line(&emit(&v, cli.pretty));
            0
        }
        Err(e) => {
            print_line(&emit(&error_json(&e), cli.pretty));
            1
        }
    }
}
