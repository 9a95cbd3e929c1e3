//! Command dispatch and output formatting.

use std::fmt::Write as _;

use cyclic_moduli::{
    count_fibre, decompose, fibre_or_nilcone, k1_fibre_count, nilcone_fibre, to_canonical_json, CyclicQuiver,
    CyclicRep, Error as DomainError, K1FibreCount, K1Quiver, K1Rep, Residual,
};
use serde_json::{json, Value};
use thiserror::Error;

use crate::parse::{parse_profile, parse_rep, parse_section, parse_spec, ParseError, ProfileArg, QuiverSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Fibre { gamma: String },
    Count { profile: String },
    Nilcone,
    Flow { rep: String },
    Stable { rep: String },
    Reduce { rep: String },
    Decompose,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Fibre { .. } => "fibre",
            Command::Count { .. } => "count",
            Command::Nilcone => "nilcone",
            Command::Flow { .. } => "flow",
            Command::Stable { .. } => "stable",
            Command::Reduce { .. } => "reduce",
            Command::Decompose => "decompose",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Options {
    pub json: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("error[parse]: {0}")]
    Parse(#[from] ParseError),
    #[error("error[usage]: {0}")]
    Usage(String),
    #[error("error[domain]: {0}")]
    Domain(#[from] DomainError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse(_) | CliError::Usage(_) => 2,
        }
    }
}

/// Runs one command against a quiver spec. Never panics on bad input; every
/// failure becomes a nonzero code and one line on stderr.
pub fn run(command: &Command, spec: &str, options: &Options) -> Outcome {
    match execute(command, spec, options) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("{}\n", e.to_string().replace('\n', " ")),
        },
    }
}

fn execute(command: &Command, spec: &str, options: &Options) -> Result<String, CliError> {
    let spec = parse_spec(spec)?;
    let out = match (&spec, command) {
        (QuiverSpec::Cyclic { .. }, _) => {
            let q = spec.cyclic().expect("validated by the parser");
            match command {
                Command::Analyze => analyze_cyclic(&q)?,
                Command::Fibre { gamma } => fibre(&q, gamma)?,
                Command::Count { profile } => count_cyclic(&q, profile)?,
                Command::Nilcone => nilcone(&q)?,
                Command::Flow { rep } => flow(&q, rep)?,
                Command::Stable { rep } => stable(&q, rep)?,
                Command::Reduce { .. } | Command::Decompose => return Err(wrong_kind(command, "k1")),
            }
        }
        (QuiverSpec::K1 { .. }, _) => {
            let q = spec.k1().expect("validated by the parser");
            match command {
                Command::Analyze => analyze_k1(&q)?,
                Command::Count { profile } => count_k1(&q, profile)?,
                Command::Reduce { rep } => reduce(&q, rep)?,
                Command::Decompose => decompose_k1(&q)?,
                _ => return Err(wrong_kind(command, "cyclic")),
            }
        }
    };
    Ok(if options.json {
        let mut s = to_canonical_json(&out.json).expect("values serialize");
        s.push('\n');
        s
    } else {
        out.text
    })
}

fn wrong_kind(command: &Command, kind: &str) -> CliError {
    CliError::Usage(format!("`{}` needs a {kind} quiver", command.name()))
}

struct Report {
    text: String,
    json: Value,
}

fn big(n: &impl ToString) -> Value {
    Value::Number(n.to_string().parse().expect("integer literal"))
}

fn projective_product(dims: &[i64]) -> String {
    if dims.is_empty() {
        return "point".into();
    }
    dims.iter().map(|d| format!("P^{d}")).collect::<Vec<_>>().join(" x ")
}

fn canonical(q: &CyclicQuiver) -> Result<(CyclicQuiver, String), CliError> {
    let c = q.reindex_canonical()?;
    let mut line = format!("quiver: {}", QuiverSpec::from(&c));
    if &c != q {
        let _ = write!(line, " (reindexed from {})", QuiverSpec::from(q));
    }
    line.push('\n');
    Ok((c, line))
}

fn analyze_cyclic(q: &CyclicQuiver) -> Result<Report, CliError> {
    let (c, mut text) = canonical(q)?;
    let d = c.moduli_descriptor();
    let degrees = c.map_degrees();
    let _ = writeln!(
        text,
        "map degrees: {}",
        degrees.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
    );
    let _ = writeln!(text, "eta: {}", d.sheet_count);
    let _ = writeln!(text, "nilcone: {}", projective_product(&d.nilcone_dims));
    let _ = writeln!(text, "bundle rank: {}", d.bundle_rank);
    let _ = writeln!(text, "rep dim: {}", d.rep_dim);
    let _ = writeln!(text, "moduli dim: {}", d.moduli_dim);
    let _ = writeln!(text, "coprime: {}", d.coprime);
    let json = json!({
        "quiver": QuiverSpec::from(&c).to_string(),
        "map_degrees": degrees,
        "descriptor": serde_json::to_value(&d).expect("descriptor serializes"),
    });
    Ok(Report { text, json })
}

fn fibre(q: &CyclicQuiver, gamma: &str) -> Result<Report, CliError> {
    let (c, mut text) = canonical(q)?;
    let degree = c.n() as i64 * c.twist();
    let gamma = parse_section(gamma)?.to_section(degree)?;
    let set = fibre_or_nilcone(&c, &gamma)?;
    let _ = writeln!(text, "gamma: {}", set.base_point);
    if set.is_nilcone {
        let dims = set.nilcone_dims.clone().unwrap_or_default();
        let _ = writeln!(text, "nilcone: {}", projective_product(&dims));
    } else {
        let _ = writeln!(text, "count: {}", set.len());
        for p in &set.points {
            let maps: Vec<String> = p.maps().iter().enumerate().map(|(i, m)| format!("phi{}={m}", i + 1)).collect();
            let _ = writeln!(text, "{}", maps.join("; "));
        }
    }
    let json = serde_json::to_value(&set).expect("fibre serializes");
    Ok(Report { text, json })
}

fn count_cyclic(q: &CyclicQuiver, profile: &str) -> Result<Report, CliError> {
    let c = q.reindex_canonical()?;
    let parts = match parse_profile(profile)? {
        ProfileArg::Parts(p) => p,
        ProfileArg::Zero => {
            return Err(CliError::Usage("a zero profile only applies to k1 quivers; use `nilcone`".into()));
        }
    };
    let n = count_fibre(&c, &parts)?;
    Ok(Report {
        text: format!("{n}\n"),
        json: json!({ "count": big(&n), "profile": parts }),
    })
}

fn nilcone(q: &CyclicQuiver) -> Result<Report, CliError> {
    let (c, mut text) = canonical(q)?;
    let d = nilcone_fibre(&c)?;
    let _ = writeln!(text, "nilcone: {}", projective_product(&d.dims));
    let _ = writeln!(text, "vanishing map: phi{}", d.vanishing_map);
    Ok(Report {
        text,
        json: serde_json::to_value(&d).expect("descriptor serializes"),
    })
}

fn cyclic_rep(q: &CyclicQuiver, rep: &str) -> Result<CyclicRep, CliError> {
    let lits = parse_rep(rep, q.n())?;
    let maps = lits
        .iter()
        .enumerate()
        .map(|(i, l)| l.to_section(q.map_degree(i)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CyclicRep::new(q.clone(), maps)?)
}

fn phis_text(maps: &[impl ToString]) -> String {
    maps.iter()
        .enumerate()
        .map(|(i, m)| format!("phi{}={}", i + 1, m.to_string()))
        .collect::<Vec<_>>()
        .join("; ")
}

fn flow(q: &CyclicQuiver, rep: &str) -> Result<Report, CliError> {
    let r = cyclic_rep(q, rep)?;
    let limit = r.flow_limit();
    let image = limit.hitchin_image();
    let text = format!("limit: {}\nhitchin image: {image}\n", phis_text(limit.maps()));
    let json = json!({
        "phis": limit.maps().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "hitchin_image": image.to_string(),
        "stable": limit.is_stable(),
    });
    Ok(Report { text, json })
}

fn stable(q: &CyclicQuiver, rep: &str) -> Result<Report, CliError> {
    let r = cyclic_rep(q, rep)?;
    let report = r.stability();
    let mut text = format!("stable: {}\n", report.stable);
    if let Some(w) = &report.witness {
        let names: Vec<String> = w.iter().map(|i| format!("U_{i}")).collect();
        let _ = writeln!(text, "witness: {}", names.join(" + "));
    }
    Ok(Report {
        text,
        json: serde_json::to_value(&report).expect("report serializes"),
    })
}

fn k1_spec_line(q: &K1Quiver) -> String {
    QuiverSpec::K1 {
        twist: q.twist(),
        split: q.splitting().to_vec(),
        tail: q.tail(),
    }
    .to_string()
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn analyze_k1(q: &K1Quiver) -> Result<Report, CliError> {
    let b = q.reduction_amounts();
    let d = decompose(q)?;
    let (lhs, rhs) = q.dimension_law()?;
    let odd: Vec<i64> = (0..q.k()).map(|i| q.odd_degree(i)).collect();
    let even: Vec<i64> = (0..q.k()).map(|i| q.even_degree(i)).collect();
    let mut text = format!("quiver: {}\n", k1_spec_line(q));
    let _ = writeln!(text, "odd map degrees: {}", join(&odd));
    let _ = writeln!(text, "even map degrees: {}", join(&even));
    let _ = writeln!(text, "reduction amounts: {}", join(&b));
    let _ = writeln!(text, "cover count: {}", d.cover_count);
    let _ = writeln!(text, "special locus: P^{}", d.special_locus_dim);
    let _ = writeln!(text, "dimension: {lhs} (factors {rhs})");
    let json = json!({
        "quiver": k1_spec_line(q),
        "odd_degrees": odd,
        "even_degrees": even,
        "reduction_amounts": b,
        "decomposition": serde_json::to_value(&d).expect("descriptor serializes"),
        "dimension": lhs,
        "factor_dimension": rhs,
    });
    Ok(Report { text, json })
}

fn decompose_k1(q: &K1Quiver) -> Result<Report, CliError> {
    let d = decompose(q)?;
    let mut text = String::new();
    for (i, f) in d.factors.iter().enumerate() {
        let _ = writeln!(
            text,
            "factor {}: nodes=({},{}) t={} reduction={} residual degree={}",
            i + 1,
            f.head,
            f.tail,
            f.twist,
            f.reduction,
            f.residual_degree()
        );
    }
    let _ = writeln!(text, "cover count: {}", d.cover_count);
    let _ = writeln!(text, "special locus: P^{}", d.special_locus_dim);
    Ok(Report {
        text,
        json: serde_json::to_value(&d).expect("descriptor serializes"),
    })
}

fn count_k1(q: &K1Quiver, profile: &str) -> Result<Report, CliError> {
    let residual = match parse_profile(profile)? {
        ProfileArg::Parts(p) => Residual::Profile(p),
        ProfileArg::Zero => Residual::Zero,
    };
    let c = k1_fibre_count(q, &residual)?;
    let text = match &c {
        K1FibreCount::Finite { count } => format!("{count}\n"),
        K1FibreCount::SpecialLocus { projective_dim } => format!("special locus: P^{projective_dim}\n"),
    };
    Ok(Report {
        text,
        json: serde_json::to_value(&c).expect("count serializes"),
    })
}

fn reduce(q: &K1Quiver, rep: &str) -> Result<Report, CliError> {
    let lits = parse_rep(rep, 2 * q.k())?;
    let maps = lits
        .iter()
        .enumerate()
        .map(|(m, l)| {
            let i = m / 2;
            l.to_form(if m % 2 == 0 { q.odd_degree(i) } else { q.even_degree(i) })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let r = K1Rep::from_interleaved(q.clone(), maps)?;
    let red = r.reduce()?;
    let before = r.hitchin_image();
    let after = red.rep.hitchin_image();
    let b = q.reduction_amounts();
    let maps = red.rep.interleaved();
    let mut text = format!("reduction amounts: {}\n", join(&b));
    let _ = writeln!(text, "chart shift: {}", red.chart_shift);
    for (i, m) in maps.iter().enumerate() {
        let _ = writeln!(text, "phi{}={m}", i + 1);
    }
    for (i, j, psi) in &red.multipliers {
        let _ = writeln!(text, "psi{i}{j}={psi}");
    }
    let _ = writeln!(text, "hitchin image: {after}");
    let _ = writeln!(text, "hitchin image preserved: {}", before == after);
    let json = json!({
        "reduction_amounts": b,
        "chart_shift": red.chart_shift.to_string(),
        "maps": maps.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "multipliers": red
            .multipliers
            .iter()
            .map(|(i, j, psi)| json!({ "i": i, "j": j, "psi": psi.to_string() }))
            .collect::<Vec<_>>(),
        "hitchin_image": after.to_string(),
        "hitchin_preserved": before == after,
    });
    Ok(Report { text, json })
}

/// Caps the global rayon pool at `CYCLIC_MODULI_THREADS` when set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("CYCLIC_MODULI_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("CYCLIC_MODULI_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot configure thread pool: {e}")))
}
