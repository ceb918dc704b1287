use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use detcx::bbw::{bbw, bbw_tangent};
use detcx::cohomology::{
    euler_check, graded_cohomology, lift_obstruction, strrep_cohomology, CohomologyReport,
};
use detcx::complex::{build_c, build_d, build_d_ik, build_k, duality_check, ComplexDescription};
use detcx::lattice::{
    cohomology_lattice, ideal_lattice, projdim_lower_bound, projdim_witness, quotient_lattice,
    Lattice,
};
use detcx::region::RegionDiagram;
use detcx::rep::{cauchy_ext, cauchy_sym, pieri_ext, pieri_sym};
use detcx::{Error, Partition};

const OUTPUT_DIR_VAR: &str = "DETCX_OUTPUT_DIR";
const MAX_F: usize = 64;
const MAX_TWIST: i64 = 256;
const MAX_DEG: usize = 40;

#[derive(Parser, Debug)]
#[command(
    name = "detcx",
    version,
    about = "Equivariant data of determinantal complexes"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Json, global = true)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
    Svg,
}

impl Output {
    fn extension(self) -> &'static str {
        match self {
            Output::Json => "json",
            Output::Text => "txt",
            Output::Svg => "svg",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Sym,
    Ext,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    K,
    C,
    D,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Bbw,
    Strrep,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LatticeKind {
    Cohomology,
    Ideal,
    Quotient,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pushforward of S_λ(T(-1))(i) or of a line bundle twisted by a W-weight
    Bbw {
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long)]
        g: usize,
        /// Weight of length g-1 (comma separated); zeros when omitted
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        lam: Vec<i64>,
        /// Read --lam as a partition and use the tangent-bundle recipe
        #[arg(long)]
        tangent: bool,
    },
    Pieri {
        #[arg(long, value_delimiter = ',')]
        lam: Vec<u32>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::Sym)]
        kind: Kind,
    },
    Cauchy {
        #[arg(long)]
        f: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        d: u64,
        #[arg(long, value_enum, default_value_t = Kind::Sym)]
        kind: Kind,
    },
    Complex {
        #[arg(long)]
        f: usize,
        #[arg(long)]
        g: usize,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, value_enum, default_value_t = Which::D)]
        which: Which,
        /// Report the rank palindrome against D(f-g-i) instead
        #[arg(long)]
        duality: bool,
    },
    #[command(name = "d-ik")]
    DIk {
        #[arg(long)]
        f: usize,
        #[arg(long)]
        g: usize,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long)]
        k: usize,
    },
    Cohom {
        #[arg(long)]
        f: usize,
        #[arg(long)]
        g: usize,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 10)]
        maxdeg: usize,
        #[arg(long, value_enum, default_value_t = Method::Bbw)]
        method: Method,
    },
    #[command(name = "euler-check")]
    EulerCheck {
        #[arg(long)]
        f: usize,
        #[arg(long)]
        g: usize,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, default_value_t = 10)]
        maxdeg: usize,
    },
    Lattice {
        #[arg(long)]
        f: usize,
        #[arg(long)]
        g: usize,
        #[arg(long, allow_negative_numbers = true)]
        i: Option<i64>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        lam: Vec<u32>,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 10)]
        maxdeg: usize,
        #[arg(long, value_enum, default_value_t = LatticeKind::Cohomology)]
        kind: LatticeKind,
    },
    Projdim {
        #[arg(long)]
        f: usize,
        #[arg(long)]
        g: usize,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long)]
        q: usize,
        /// Single size to search; every size up to the bound when omitted
        #[arg(long)]
        j: Option<u64>,
    },
    #[command(name = "lift-check")]
    LiftCheck {
        #[arg(long)]
        g: usize,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        maxdeg: usize,
    },
    #[command(name = "region-diagram")]
    RegionDiagram {
        #[arg(long)]
        f: usize,
        #[arg(long)]
        g: usize,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long)]
        k: Option<usize>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Bbw { .. } => "bbw",
            Command::Pieri { .. } => "pieri",
            Command::Cauchy { .. } => "cauchy",
            Command::Complex { .. } => "complex",
            Command::DIk { .. } => "d-ik",
            Command::Cohom { .. } => "cohom",
            Command::EulerCheck { .. } => "euler-check",
            Command::Lattice { .. } => "lattice",
            Command::Projdim { .. } => "projdim",
            Command::LiftCheck { .. } => "lift-check",
            Command::RegionDiagram { .. } => "region-diagram",
        }
    }
}

enum Failure {
    Usage(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(m) => Failure::Usage(m),
            Error::InvariantViolation(m) => Failure::Invariant(m),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Invariant(format!("serialization failed: {e}"))
    }
}

type Outcome = std::result::Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn check_fg(f: usize, g: usize) -> Result<(), Failure> {
    if g < 1 || f < g {
        return Err(usage(format!("f >= g >= 1 required, got f={f}, g={g}")));
    }
    if f > MAX_F {
        return Err(usage(format!("f must be at most {MAX_F}, got f={f}")));
    }
    Ok(())
}

fn check_twist(i: i64) -> Result<(), Failure> {
    if i.abs() > MAX_TWIST {
        return Err(usage(format!("|i| must be at most {MAX_TWIST}, got i={i}")));
    }
    Ok(())
}

fn check_maxdeg(maxdeg: usize) -> Result<(), Failure> {
    if maxdeg > MAX_DEG {
        return Err(usage(format!(
            "maxdeg must be at most {MAX_DEG}, got maxdeg={maxdeg}"
        )));
    }
    Ok(())
}

fn check_q(q: usize, g: usize) -> Result<(), Failure> {
    if q > g - 1 {
        return Err(usage(format!(
            "q must lie in [0, g-1]=[0, {}], got q={q}",
            g - 1
        )));
    }
    Ok(())
}

fn check_k(k: usize, g: usize) -> Result<(), Failure> {
    if k > g - 1 {
        return Err(usage(format!(
            "k must lie in [0, g-1]=[0, {}], got k={k}",
            g - 1
        )));
    }
    Ok(())
}

fn canonical(v: &Value) -> Result<String, Failure> {
    // serde_json's default map is ordered, so keys come out sorted.
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn emit(output: Output, value: Value, text: impl FnOnce() -> String) -> Outcome {
    match output {
        Output::Json => canonical(&value),
        Output::Text => Ok(text()),
        Output::Svg => Err(usage("svg output is only available for region-diagram")),
    }
}

fn complex_text(c: &ComplexDescription) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>5} {:>5} {:>4} {:>4} {:>8} {:>16}  v / w",
        "pos", "norm", "part", "row", "gen_deg", "rank"
    );
    for t in &c.terms {
        let _ = writeln!(
            s,
            "{:>5} {:>5} {:>4} {:>4} {:>8} {:>16}  {} / {}",
            t.position,
            t.normalized,
            format!("{:?}", t.part).to_uppercase(),
            t.row,
            t.generator_degree,
            t.rank,
            t.v,
            t.w
        );
    }
    if let Some(sp) = c.splice {
        let _ = writeln!(s, "splice: {} -> {}", sp.from, sp.to);
    }
    s
}

fn cohom_text(r: &CohomologyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "R^{} p_* O_Z({})  f={} g={}  up to degree {}",
        r.q, r.i, r.f, r.g, r.maxdeg
    );
    for (d, sum) in r.decomposition.degrees() {
        let cells: Vec<String> = sum
            .iter()
            .map(|(b, _)| format!("S{}V⊗S{}W*", b.v, b.w))
            .collect();
        let _ = writeln!(s, "{d:>3}: {}", cells.join(" + "));
    }
    let _ = writeln!(s, "hilbert: {}", r.hilbert);
    if let Some(m) = r.required_maxdeg {
        let _ = writeln!(s, "lowest class needs maxdeg >= {m}");
    }
    s
}

fn lattice_value(lat: &Lattice) -> Result<Value, Failure> {
    Ok(serde_json::to_value(lat)?)
}

fn run(cli: &Cli) -> Outcome {
    let out = cli.output;
    if out == Output::Svg && !matches!(cli.command, Command::RegionDiagram { .. }) {
        return Err(usage("svg output is only available for region-diagram"));
    }
    match &cli.command {
        Command::Bbw { i, g, lam, tangent } => {
            check_twist(*i)?;
            if *g < 1 || *g > MAX_F {
                return Err(usage(format!("g must lie in [1, {MAX_F}], got g={g}")));
            }
            let r = if *tangent {
                let parts: Vec<u32> = lam
                    .iter()
                    .map(|&x| {
                        u32::try_from(x).map_err(|_| {
                            usage(format!("partition parts must be nonnegative, got {x}"))
                        })
                    })
                    .collect::<Result<_, _>>()?;
                bbw_tangent(*i, &Partition::new(parts)?, *g)?
            } else {
                let weight = if lam.is_empty() {
                    vec![0; g - 1]
                } else {
                    lam.clone()
                };
                bbw(*i, &weight, *g)?
            };
            let value = json!({ "i": i, "g": g, "lam": lam, "result": serde_json::to_value(&r)? });
            emit(out, value, || match (r.q(), r.w_form()) {
                (Some(q), Some(w)) => format!("q={q} W-weight={w} dim={}\n", r.dim()),
                _ => "zero\n".to_string(),
            })
        }
        Command::Pieri { lam, k, n, kind } => {
            let p = Partition::new(lam.clone())?;
            let sum = match kind {
                Kind::Sym => pieri_sym(&p, *k, *n)?,
                Kind::Ext => pieri_ext(&p, *k, *n)?,
            };
            let value = json!({ "lam": p, "k": k, "n": n, "terms": serde_json::to_value(&sum)? });
            emit(out, value, || {
                sum.keys().map(|w| format!("{w}\n")).collect::<String>()
            })
        }
        Command::Cauchy { f, g, d, kind } => {
            check_fg(*f, *g)?;
            let sum = match kind {
                Kind::Sym => cauchy_sym(*d, *f, *g)?,
                Kind::Ext => cauchy_ext(*d, *f, *g)?,
            };
            let value = json!({ "f": f, "g": g, "d": d, "total_dim": sum.total_dim().to_string(), "terms": serde_json::to_value(&sum)? });
            emit(out, value, || {
                sum.keys()
                    .map(|b| format!("S{}V⊗S{}W*\n", b.v, b.w))
                    .collect::<String>()
            })
        }
        Command::Complex {
            f,
            g,
            i,
            which,
            duality,
        } => {
            check_fg(*f, *g)?;
            check_twist(*i)?;
            if *duality {
                let r = duality_check(*i, *f, *g)?;
                if !r.ok {
                    return Err(Failure::Invariant(format!(
                        "duality fails for i={i}, f={f}, g={g}"
                    )));
                }
                let value = serde_json::to_value(&r)?;
                return emit(out, value, || {
                    format!("D({}) vs D({}): ranks {:?}\n", r.i, r.dual_i, r.ranks)
                });
            }
            let c = match which {
                Which::K => build_k(*i, *f, *g)?,
                Which::C => build_c(*i, *f, *g)?,
                Which::D => build_d(*i, *f, *g)?,
            };
            emit(out, serde_json::to_value(&c)?, || complex_text(&c))
        }
        Command::DIk { f, g, i, k } => {
            check_fg(*f, *g)?;
            check_twist(*i)?;
            check_k(*k, *g)?;
            let c = build_d_ik(*i, *k, *f, *g)?;
            emit(out, serde_json::to_value(&c)?, || complex_text(&c))
        }
        Command::Cohom {
            f,
            g,
            i,
            q,
            maxdeg,
            method,
        } => {
            check_fg(*f, *g)?;
            check_twist(*i)?;
            check_q(*q, *g)?;
            check_maxdeg(*maxdeg)?;
            let r = match method {
                Method::Bbw => graded_cohomology(*i, *q, *f, *g, *maxdeg)?,
                Method::Strrep => strrep_cohomology(*i, *q, *f, *g, *maxdeg)?,
            };
            emit(out, serde_json::to_value(&r)?, || cohom_text(&r))
        }
        Command::EulerCheck { f, g, i, maxdeg } => {
            check_fg(*f, *g)?;
            check_twist(*i)?;
            check_maxdeg(*maxdeg)?;
            let r = euler_check(*i, *f, *g, *maxdeg)?;
            if !r.balanced {
                return Err(Failure::Invariant(format!(
                    "Euler characteristic unbalanced at degree {:?}",
                    r.first_mismatch
                )));
            }
            emit(out, serde_json::to_value(&r)?, || {
                format!(
                    "balanced\nnumerator: {}\nseries: {}\n",
                    r.numerator, r.complex_side
                )
            })
        }
        Command::Lattice {
            f,
            g,
            i,
            q,
            lam,
            l,
            k,
            maxdeg,
            kind,
        } => {
            check_fg(*f, *g)?;
            check_maxdeg(*maxdeg)?;
            let lat = match kind {
                LatticeKind::Cohomology => {
                    let i = i.ok_or_else(|| usage("--i is required for a cohomology lattice"))?;
                    let q = q.ok_or_else(|| usage("--q is required for a cohomology lattice"))?;
                    check_twist(i)?;
                    check_q(q, *g)?;
                    cohomology_lattice(i, q, *f, *g, *maxdeg)?
                }
                LatticeKind::Ideal => {
                    ideal_lattice(&Partition::new(lam.clone())?, *f, *g, *maxdeg)?
                }
                LatticeKind::Quotient => {
                    let l = l.ok_or_else(|| usage("--l is required for a quotient lattice"))?;
                    let k = k.ok_or_else(|| usage("--k is required for a quotient lattice"))?;
                    quotient_lattice(l, k, *f, *g, *maxdeg)?
                }
            };
            if !lat.is_graded_connected() {
                return Err(Failure::Invariant("lattice is not graded-connected".into()));
            }
            emit(out, lattice_value(&lat)?, || lat.render_text(4))
        }
        Command::Projdim { f, g, i, q, j } => {
            check_fg(*f, *g)?;
            check_twist(*i)?;
            check_q(*q, *g)?;
            let bound = projdim_lower_bound(*i, *q, *f, *g)?;
            let sizes: Vec<u64> = match j {
                Some(j) => vec![*j],
                None => (0..=bound).collect(),
            };
            let mut witnesses = Vec::new();
            for s in sizes {
                let w = projdim_witness(s, *i, *q, *f, *g)?;
                if w.is_none() && s <= bound {
                    return Err(Failure::Invariant(format!(
                        "no witness of size {s} below the bound {bound}"
                    )));
                }
                witnesses.push(json!({ "j": s, "witness": serde_json::to_value(&w)? }));
            }
            let value = json!({ "f": f, "g": g, "i": i, "q": q, "lower_bound": bound, "witnesses": witnesses });
            emit(out, value, || format!("projective dimension >= {bound}\n"))
        }
        Command::LiftCheck { g, i, k, maxdeg } => {
            if *g < 1 {
                return Err(usage("g must be at least 1"));
            }
            check_twist(*i)?;
            check_k(*k, *g)?;
            check_maxdeg(*maxdeg)?;
            let w = lift_obstruction(*k, *i, *g, *maxdeg)?;
            let value = json!({
                "g": g, "i": i, "k": k, "d": i - *k as i64, "maxdeg": maxdeg,
                "obstructed": !w.is_empty(),
                "witnesses": serde_json::to_value(&w)?,
            });
            emit(out, value, || {
                if w.is_empty() {
                    format!("no obstruction up to degree {maxdeg}\n")
                } else {
                    format!(
                        "{} obstructing triples, first q={} λ={} λ'={}\n",
                        w.len(),
                        w[0].q,
                        w[0].lam,
                        w[0].lam_prime
                    )
                }
            })
        }
        Command::RegionDiagram { f, g, i, k } => {
            check_fg(*f, *g)?;
            check_twist(*i)?;
            let d = match k {
                Some(k) => {
                    check_k(*k, *g)?;
                    RegionDiagram::for_dik(*i, *k, *f, *g)?
                }
                None => RegionDiagram::for_d(*i, *f, *g)?,
            };
            match out {
                Output::Svg => Ok(d.render_svg()),
                _ => emit(out, serde_json::to_value(&d)?, || d.render_text()),
            }
        }
    }
}

fn error_object(kind: &str, message: &str, code: u8) -> String {
    let v = json!({ "error": { "kind": kind, "message": message, "exit_code": code } });
    serde_json::to_string(&v).unwrap_or_default()
}

fn write_to_dir(name: &str, output: Output, body: &str) -> std::io::Result<()> {
    let Some(dir) = std::env::var_os(OUTPUT_DIR_VAR) else {
        return Ok(());
    };
    let dir = PathBuf::from(dir);
    std::fs::create_dir_all(&dir)?;
    std::fs::write(dir.join(format!("{name}.{}", output.extension())), body)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            eprintln!("{}", error_object("usage", msg.trim(), 2));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(body) => {
            print!("{body}");
            if let Err(e) = write_to_dir(cli.command.name(), cli.output, &body) {
                eprintln!("{}", error_object("io", &e.to_string(), 1));
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("{}", error_object("usage", &m, 2));
            ExitCode::from(2)
        }
        Err(Failure::Invariant(m)) => {
            eprintln!("{}", error_object("invariant_violation", &m, 3));
            ExitCode::from(3)
        }
    }
}
