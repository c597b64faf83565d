//! Thin command-line front end.
//!
//! Every subcommand parses its parameters, calls into the library, and
//! emits one JSON document: `{"manifest": ..., "result": ...}`. The
//! manifest echoes the parameters, the crate version and the wall time;
//! everything under `result` is deterministic for a fixed configuration.
//! Exit codes: 0 success, 1 verification failure, 2 invalid input.

use clap::{Args, Parser, Subcommand};
use ddaha::characters::{
    ch_m_symmetric, ch_v_symmetric_conjectural, f_alternating, f_tableaux, independence_suite,
};
use ddaha::dunkl::{dunkl_apply, relation_suite, DunklParams, LaurentPolynomial};
use ddaha::induced::{
    finite_module_matrices, intertwiner_vector, irreducible_quotient_dim, is_generic,
    matrix_json, satisfies_dominance, Flavor, InducedParams, Truncation,
};
use ddaha::rational::{format_rational, parse_rational, parse_rational_vec, rat_int, Rational};
use ddaha::roots::{AffineRoot, OrderedPartition, Weight};
use ddaha::tableaux::{
    beta_from_weights, enumerate_tableaux, weightcon_check, zeta_lambda_mu, SlmWeight,
};
use ddaha::verify;
use ddaha::weyl::{
    double_coset_reps, enumerate_min_reps, f_map, g_map, is_block_antidominant, min_coset_rep,
    AffineWeylElement,
};
use serde_json::{json, Value};
use std::io::Write;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "ddaha", version, about = "Exact computations in the degenerate double affine Hecke algebra of gl_N")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON document here instead of stdout.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
    /// Output format.
    #[arg(long, global = true, default_value = "json", value_parser = ["json", "table"])]
    format: String,
    /// Worker threads (also via DDAHA_THREADS); output order never
    /// depends on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Element arithmetic: normal forms, reduced words, actions, Bruhat.
    Weyl(WeylArgs),
    /// Enumerate minimal coset and double-coset representatives.
    Cosets(CosetsArgs),
    /// Induced modules: weights, intertwiners, matrices, quotients.
    Module(ModuleArgs),
    /// Cherednik-Dunkl operators on Laurent polynomials.
    Dunkl(DunklArgs),
    /// Skew tableaux: enumeration, restriction, statistics.
    Tableaux(TableauxArgs),
    /// Character formulas: the tableau sum against the alternating sum.
    Char(CharArgs),
    /// Verification suites (exit code 1 on any failure).
    Verify(VerifyArgs),
}

#[derive(Args)]
struct WeylArgs {
    #[arg(long = "N")]
    n: usize,
    /// Comma-separated word: `pi`, `pi^-2`, `s0`, `s1`, ..., `t[1,0,-1]`.
    #[arg(long)]
    word: String,
    /// Echo the normal form, length, inversion set and a reduced word.
    #[arg(long)]
    reduce: bool,
    /// Act on an affine root given as `i,j,k` (1-based indices).
    #[arg(long)]
    act_root: Option<String>,
    /// Act on a weight: comma-separated rational coordinates.
    #[arg(long)]
    act_weight: Option<String>,
    /// Level of the weight acted on.
    #[arg(long)]
    level: Option<String>,
    /// Compare against a second word in the Bruhat order.
    #[arg(long)]
    bruhat: Option<String>,
}

#[derive(Args)]
struct CosetsArgs {
    #[arg(long = "N")]
    n: usize,
    /// Ordered partition, e.g. `2,2` (zeros allowed).
    #[arg(long)]
    beta: String,
    #[arg(long, default_value_t = 4)]
    length_bound: usize,
    #[arg(long, default_value_t = -1)]
    trace_min: i64,
    #[arg(long, default_value_t = 1)]
    trace_max: i64,
}

#[derive(Args)]
struct ModuleArgs {
    #[arg(long = "N")]
    n: usize,
    #[arg(long)]
    beta: String,
    /// Inducing weight coordinates (rationals); a block-ascending
    /// default is used when omitted.
    #[arg(long)]
    zeta: Option<String>,
    /// Level (central value) of the inducing weight.
    #[arg(long, default_value = "2")]
    kappa: String,
    /// Use the finite analogue (translations ignored).
    #[arg(long)]
    finite: bool,
    /// Report the weight decomposition of the truncation window.
    #[arg(long)]
    weights: bool,
    /// Compute `phi_w 1` for this word.
    #[arg(long)]
    intertwiner: Option<String>,
    /// Dimension of the unique irreducible quotient (finite flavor).
    #[arg(long)]
    quotient_dim: bool,
    /// Dump generator matrices (finite flavor).
    #[arg(long)]
    matrices: bool,
    #[arg(long, default_value_t = 6)]
    length_bound: usize,
    #[arg(long, default_value_t = 0)]
    trace_min: i64,
    #[arg(long, default_value_t = 0)]
    trace_max: i64,
}

#[derive(Args)]
struct DunklArgs {
    #[arg(long = "N")]
    n: usize,
    #[arg(long, default_value = "2")]
    kappa: String,
    /// Apply `D_{e_i}` for this 1-based direction index.
    #[arg(long)]
    xi: Option<usize>,
    /// Monomial exponent vector to act on, e.g. `1,0`.
    #[arg(long)]
    monomial: Option<String>,
    /// Run the exact relation suite.
    #[arg(long)]
    suite: bool,
    #[arg(long, default_value_t = 3)]
    degree: i64,
}

#[derive(Args)]
struct TableauxArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    level: i64,
    /// Integer tuple of the lower weight, e.g. `0,0`.
    #[arg(long)]
    mu: String,
    /// Integer tuple of the upper weight (or give `--beta`).
    #[arg(long)]
    lambda: Option<String>,
    /// Ordered partition determining lambda as `mu + beta`.
    #[arg(long)]
    beta: Option<String>,
    #[arg(long = "N")]
    n: usize,
    /// Keep standard tableaux only.
    #[arg(long)]
    standard: bool,
    /// Keep level-restricted standard tableaux only.
    #[arg(long)]
    restricted: bool,
}

#[derive(Args)]
struct CharArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    level: i64,
    #[arg(long)]
    mu: String,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long = "N")]
    n: usize,
    #[arg(long, default_value_t = 20)]
    q_cutoff: i64,
    /// Also run the independence evidence suite at this length bound.
    #[arg(long)]
    independence_bound: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: relations, cosets, generic, quotients, characters,
    /// independence, qmultinomial, golden, all.
    #[arg(long)]
    suite: String,
    /// Custom rank for a one-off polynomial relation suite.
    #[arg(long = "N")]
    n: Option<usize>,
    /// Custom central value for the one-off suite.
    #[arg(long)]
    kappa: Option<String>,
    /// Custom degree bound for the one-off suite.
    #[arg(long)]
    degree: Option<i64>,
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("DDAHA_THREADS")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(1);
    let outcome = match &cli.command {
        Command::Weyl(args) => cmd_weyl(args),
        Command::Cosets(args) => cmd_cosets(args),
        Command::Module(args) => cmd_module(args),
        Command::Dunkl(args) => cmd_dunkl(args),
        Command::Tableaux(args) => cmd_tableaux(args),
        Command::Char(args) => cmd_char(args, threads),
        Command::Verify(args) => cmd_verify(args),
    };
    let (name, parameters, result, exit) = match outcome {
        Ok((name, parameters, result, exit)) => (name, parameters, result, exit),
        Err(message) => {
            let error = json!({"error": {"message": message, "code": 2}});
            emit(&cli, &error);
            std::process::exit(2);
        }
    };
    let document = json!({
        "manifest": {
            "command": name,
            "parameters": parameters,
            "version": env!("CARGO_PKG_VERSION"),
            "threads": threads,
            "wall_time_ms": started.elapsed().as_millis() as u64,
        },
        "result": result,
    });
    emit(&cli, &document);
    std::process::exit(exit);
}

fn emit(cli: &Cli, value: &Value) {
    let rendered = if cli.format == "table" {
        let mut out = String::new();
        render_table(value, 0, &mut out);
        out
    } else {
        let mut s = serde_json::to_string_pretty(value).expect("serializable");
        s.push('\n');
        s
    };
    match &cli.output {
        None => print!("{rendered}"),
        Some(path) => {
            let mut f = std::fs::File::create(path).expect("writable output path");
            f.write_all(rendered.as_bytes()).expect("write output");
        }
    }
}

/// Plain indented rendering of a JSON document.
fn render_table(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_table(v, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {v}\n")),
                }
            }
        }
        Value::Array(items) => {
            for v in items {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_table(v, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {v}\n")),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{value}\n")),
    }
}

type CommandOutcome = Result<(&'static str, Value, Value, i32), String>;

fn parse_word(n: usize, word: &str) -> Result<AffineWeylElement, String> {
    let mut acc = AffineWeylElement::identity(n);
    for token in word.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let g = if token == "pi" {
            AffineWeylElement::pi(n)
        } else if let Some(power) = token.strip_prefix("pi^") {
            let k: i64 = power.parse().map_err(|_| format!("bad pi power {token:?}"))?;
            AffineWeylElement::pi_power(n, k)
        } else if let Some(index) = token.strip_prefix('s') {
            let i: usize = index.parse().map_err(|_| format!("bad letter {token:?}"))?;
            if i >= n {
                return Err(format!("letter {token:?} out of range for N = {n}"));
            }
            AffineWeylElement::simple_reflection(n, i)
        } else if let Some(rest) = token.strip_prefix("t[") {
            let inner = rest
                .strip_suffix(']')
                .ok_or_else(|| format!("unterminated translation {token:?}"))?;
            let eta: Vec<i64> = inner
                .split([';', ' '])
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().map_err(|_| format!("bad translation {token:?}")))
                .collect::<Result<_, _>>()?;
            if eta.len() != n {
                return Err(format!("translation {token:?} has wrong rank"));
            }
            AffineWeylElement::translation(eta)
        } else {
            return Err(format!("unknown token {token:?}"));
        };
        acc = acc.compose(&g);
    }
    Ok(acc)
}

fn parse_partition(n: usize, s: &str) -> Result<OrderedPartition, String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("bad partition {s:?}")))
        .collect::<Result<_, _>>()?;
    let beta = OrderedPartition::new(parts);
    if beta.n() != n {
        return Err(format!("partition {s:?} does not sum to N = {n}"));
    }
    Ok(beta)
}

fn parse_int_tuple(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("bad integer tuple {s:?}")))
        .collect()
}

fn weight_pair(
    m: usize,
    level: i64,
    mu: &str,
    lambda: &Option<String>,
    beta: &Option<String>,
    n: usize,
) -> Result<(SlmWeight, SlmWeight), String> {
    let mu_tuple = parse_int_tuple(mu)?;
    if mu_tuple.len() != m {
        return Err(format!("mu has {} entries, expected {m}", mu_tuple.len()));
    }
    let mu = SlmWeight::new(mu_tuple, level);
    let lambda = match (lambda, beta) {
        (Some(l), None) => {
            let t = parse_int_tuple(l)?;
            if t.len() != m {
                return Err(format!("lambda has {} entries, expected {m}", t.len()));
            }
            SlmWeight::new(t, level)
        }
        (None, Some(b)) => {
            let beta = parse_partition(n, b)?;
            let nu: Vec<i64> = mu
                .nu
                .iter()
                .zip(beta.parts())
                .map(|(a, &p)| a + p as i64)
                .collect();
            SlmWeight::new(nu, level)
        }
        _ => return Err("give exactly one of --lambda, --beta".to_string()),
    };
    if !mu.is_dominant_integral() || !lambda.is_dominant_integral() {
        return Err("lambda and mu must be dominant integral at the level".to_string());
    }
    if beta_from_weights(&lambda, &mu, n).is_none() {
        return Err("lambda - mu is not a weight of the N-fold tensor power".to_string());
    }
    Ok((lambda, mu))
}

fn cmd_weyl(args: &WeylArgs) -> CommandOutcome {
    if args.n < 2 {
        return Err("N must be at least 2".to_string());
    }
    let x = parse_word(args.n, &args.word)?;
    let mut result = json!({
        "element": x,
        "length": x.length(),
        "trace": x.trace(),
    });
    if args.reduce {
        let (k, letters) = x.reduced_word();
        result["reduced_word"] = json!({"pi_power": k, "letters": letters});
        result["inversion_set"] = serde_json::to_value(x.inversion_set()).unwrap();
    }
    if let Some(root) = &args.act_root {
        let parts = parse_int_tuple(root)?;
        if parts.len() != 3 {
            return Err("--act-root wants i,j,k".to_string());
        }
        let (i, j) = (parts[0] as usize, parts[1] as usize);
        if i == 0 || j == 0 || i > args.n || j > args.n || i == j {
            return Err("root indices must be distinct and 1-based".to_string());
        }
        let alpha = AffineRoot::new(i - 1, j - 1, parts[2]);
        result["root_image"] = serde_json::to_value(x.act_root(&alpha)).unwrap();
    }
    if let Some(coords) = &args.act_weight {
        let coords = parse_rational_vec(coords).map_err(|e| e.to_string())?;
        if coords.len() != args.n {
            return Err("weight coordinate count must equal N".to_string());
        }
        let level = match &args.level {
            Some(l) => parse_rational(l).map_err(|e| e.to_string())?,
            None => rat_int(0),
        };
        let zeta = Weight::new(coords, level);
        result["weight_image"] = serde_json::to_value(x.act_weight(&zeta)).unwrap();
    }
    if let Some(other) = &args.bruhat {
        let y = parse_word(args.n, other)?;
        result["bruhat_leq"] = json!(x.bruhat_leq(&y));
        result["bruhat_geq"] = json!(y.bruhat_leq(&x));
    }
    let parameters = json!({"N": args.n, "word": args.word});
    Ok(("weyl", parameters, result, 0))
}

fn cmd_cosets(args: &CosetsArgs) -> CommandOutcome {
    let beta = parse_partition(args.n, &args.beta)?;
    let reps = enumerate_min_reps(
        args.n,
        &beta,
        args.length_bound,
        args.trace_min,
        args.trace_max,
    );
    let doubles = double_coset_reps(&beta, args.length_bound, args.trace_min, args.trace_max);
    // round trips on the enumerated window
    let mut round_trip_ok = true;
    for x in &doubles {
        let eta = g_map(x);
        if !is_block_antidominant(&eta, &beta)
            || f_map(&eta, &beta).map(|y| y != *x).unwrap_or(true)
        {
            round_trip_ok = false;
        }
    }
    let factorizations: Vec<Value> = reps
        .iter()
        .take(200)
        .map(|x| {
            let (w, u) = min_coset_rep(x, &beta);
            json!({"x": x, "w": w, "u": u, "length": x.length()})
        })
        .collect();
    let result = json!({
        "minimal_representatives": reps,
        "minimal_count": reps.len(),
        "double_coset_representatives": doubles,
        "double_count": doubles.len(),
        "round_trip_ok": round_trip_ok,
        "factorizations": factorizations,
    });
    let parameters = json!({
        "N": args.n, "beta": beta, "length_bound": args.length_bound,
        "trace_min": args.trace_min, "trace_max": args.trace_max,
    });
    Ok(("cosets", parameters, result, 0))
}

fn default_slice_weight(beta: &OrderedPartition, kappa: Rational) -> Weight {
    let mut coords = Vec::new();
    for (b, &p) in beta.parts().iter().enumerate() {
        for t in 0..p {
            coords.push(rat_int((10 * (b as i64 + 1)) + t as i64));
        }
    }
    Weight::new(coords, kappa)
}

fn cmd_module(args: &ModuleArgs) -> CommandOutcome {
    let beta = parse_partition(args.n, &args.beta)?;
    let kappa = parse_rational(&args.kappa).map_err(|e| e.to_string())?;
    let zeta = match &args.zeta {
        Some(s) => {
            let coords = parse_rational_vec(s).map_err(|e| e.to_string())?;
            if coords.len() != args.n {
                return Err("zeta coordinate count must equal N".to_string());
            }
            Weight::new(coords, kappa.clone())
        }
        None => default_slice_weight(&beta, kappa.clone()),
    };
    let flavor = if args.finite { Flavor::Finite } else { Flavor::Affine };
    let params = InducedParams::new(beta.clone(), zeta.clone(), flavor)
        .map_err(|e| e.to_string())?;
    let mut result = json!({
        "zeta": zeta,
        "flavor": if args.finite { "finite" } else { "affine" },
        "generic": match is_generic(&params) {
            Ok(b) => json!(b),
            Err(e) => json!({"error": e.to_string()}),
        },
    });
    if !args.finite {
        result["satisfies_dominance"] = json!(satisfies_dominance(&params).unwrap());
    }
    if args.weights {
        let decomposition = ddaha::induced::weight_decomposition(
            &params,
            Truncation::new(args.length_bound),
            args.trace_min,
            args.trace_max,
        );
        result["weight_decomposition"] = json!(decomposition
            .iter()
            .map(|(w, d)| json!({"weight": w, "dimension": d}))
            .collect::<Vec<_>>());
    }
    if let Some(word) = &args.intertwiner {
        let w = parse_word(args.n, word)?;
        let trunc = Truncation::new(args.length_bound.max(2 * w.length() + 2));
        let phi = intertwiner_vector(&params, &w, trunc).map_err(|e| e.to_string())?;
        result["intertwiner"] = json!({
            "w": w,
            "vector": phi,
            "weight": params.key_weight(&w),
        });
    }
    if args.matrices || args.quotient_dim {
        if !args.finite {
            return Err("matrices and quotient dims need --finite".to_string());
        }
        if args.matrices {
            let module = finite_module_matrices(&params, 400).map_err(|e| e.to_string())?;
            result["dimension"] = json!(module.dim());
            result["s_matrices"] = json!(module
                .s_matrices
                .iter()
                .map(matrix_json)
                .collect::<Vec<_>>());
            result["xi_matrices"] = json!(module
                .xi_matrices
                .iter()
                .map(matrix_json)
                .collect::<Vec<_>>());
        }
        if args.quotient_dim {
            let dim = irreducible_quotient_dim(&params, 400).map_err(|e| e.to_string())?;
            result["irreducible_quotient_dim"] = json!(dim);
        }
    }
    let parameters = json!({
        "N": args.n, "beta": beta, "kappa": format_rational(&kappa),
        "finite": args.finite, "length_bound": args.length_bound,
    });
    Ok(("module", parameters, result, 0))
}

fn cmd_dunkl(args: &DunklArgs) -> CommandOutcome {
    let kappa = parse_rational(&args.kappa).map_err(|e| e.to_string())?;
    let params = DunklParams::new(kappa.clone());
    let mut result = json!({});
    let mut exit = 0;
    if let (Some(xi), Some(monomial)) = (&args.xi, &args.monomial) {
        if *xi == 0 || *xi > args.n {
            return Err("--xi is 1-based and at most N".to_string());
        }
        let exp = parse_int_tuple(monomial)?;
        if exp.len() != args.n {
            return Err("monomial exponent count must equal N".to_string());
        }
        let f = LaurentPolynomial::monomial(exp, rat_int(1));
        let mut direction = vec![Rational::from_integer(0.into()); args.n];
        direction[xi - 1] = Rational::from_integer(1.into());
        let image = dunkl_apply(&direction, &f, &params);
        result["input"] = serde_json::to_value(&f).unwrap();
        result["image"] = serde_json::to_value(&image).unwrap();
    }
    if args.suite {
        let report = relation_suite(&params, args.degree, args.n);
        if !report.pass {
            exit = 1;
        }
        result["relation_suite"] = serde_json::to_value(&report).unwrap();
    }
    let parameters = json!({
        "N": args.n, "kappa": format_rational(&kappa), "degree": args.degree,
    });
    Ok(("dunkl", parameters, result, exit))
}

fn cmd_tableaux(args: &TableauxArgs) -> CommandOutcome {
    let (lambda, mu) = weight_pair(args.m, args.level, &args.mu, &args.lambda, &args.beta, args.n)?;
    let beta = beta_from_weights(&lambda, &mu, args.n).expect("validated");
    let restricted = if args.restricted { Some(args.level) } else { None };
    let tableaux = enumerate_tableaux(
        &lambda,
        &mu,
        args.n,
        args.standard || args.restricted,
        restricted,
    );
    let zeta = zeta_lambda_mu(&lambda, &mu, args.n);
    let items: Vec<Value> = tableaux
        .iter()
        .map(|t| {
            let (ds, d) = t.d_statistics();
            let mut item = json!({
                "tableau": t,
                "standard": t.is_standard(),
                "restricted": t.is_restricted(&mu, args.level),
                "w": t.w_t(),
                "d_i": ds,
                "d": d,
            });
            if t.is_standard() && t.is_restricted(&mu, args.level) {
                if let Some(report) = weightcon_check(t, &lambda, &mu, args.n) {
                    item["pairing_inequalities_ok"] = json!(report.pass());
                }
            }
            item
        })
        .collect();
    let result = json!({
        "beta": beta,
        "zeta": zeta,
        "count": tableaux.len(),
        "tableaux": items,
    });
    let parameters = json!({
        "m": args.m, "level": args.level, "mu": args.mu, "N": args.n,
        "standard": args.standard, "restricted": args.restricted,
    });
    Ok(("tableaux", parameters, result, 0))
}

fn cmd_char(args: &CharArgs, threads: usize) -> CommandOutcome {
    let (lambda, mu) = weight_pair(args.m, args.level, &args.mu, &args.lambda, &args.beta, args.n)?;
    let cutoff = args.q_cutoff;
    let (tableau_side, alternating_side) = if threads > 1 {
        std::thread::scope(|scope| {
            let tab = scope.spawn(|| f_tableaux(&lambda, &mu, args.n).truncate(cutoff));
            let alt = scope.spawn(|| f_alternating(&lambda, &mu, args.n, cutoff));
            (tab.join().expect("tableau side"), alt.join().expect("alternating side"))
        })
    } else {
        (
            f_tableaux(&lambda, &mu, args.n).truncate(cutoff),
            f_alternating(&lambda, &mu, args.n, cutoff),
        )
    };
    let alternating_side = alternating_side.map_err(|e| e.to_string())?;
    let agree = tableau_side.eq_mod(&alternating_side, cutoff);
    let (bracket, delta) = ch_m_symmetric(&lambda, &mu, args.n).map_err(|e| e.to_string())?;
    let conjectural =
        ch_v_symmetric_conjectural(&lambda, &mu, args.n, cutoff).map_err(|e| e.to_string())?;
    let mut result = json!({
        "lambda": lambda,
        "mu": mu,
        "f_tableaux": tableau_side,
        "f_alternating": alternating_side,
        "identity_holds_mod_cutoff": agree,
        "ch_m_symmetric": bracket,
        "delta_difference": format_rational(&delta),
        "ch_v_symmetric_conjectural": conjectural,
    });
    if let Some(bound) = args.independence_bound {
        let report = independence_suite(&lambda, &mu, args.n, bound, -(args.n as i64), {
            (args.n * (args.n - 1) / 2) as i64
        })
        .map_err(|e| e.to_string())?;
        result["independence"] = serde_json::to_value(&report).unwrap();
    }
    let parameters = json!({
        "m": args.m, "level": args.level, "mu": args.mu,
        "N": args.n, "q_cutoff": cutoff,
    });
    Ok(("char", parameters, result, if agree { 0 } else { 1 }))
}

fn cmd_verify(args: &VerifyArgs) -> CommandOutcome {
    // one-off polynomial relation suite at custom sizes
    if args.n.is_some() || args.kappa.is_some() || args.degree.is_some() {
        if args.suite != "relations" {
            return Err("custom sizes apply to --suite relations only".to_string());
        }
        let n = args.n.ok_or("custom run needs --N")?;
        let kappa = parse_rational(args.kappa.as_deref().ok_or("custom run needs --kappa")?)
            .map_err(|e| e.to_string())?;
        let degree = args.degree.ok_or("custom run needs --degree")?;
        if n < 2 || degree < 0 {
            return Err("need N >= 2 and degree >= 0".to_string());
        }
        let report = relation_suite(&DunklParams::new(kappa.clone()), degree, n);
        let exit = if report.pass { 0 } else { 1 };
        let parameters = json!({
            "suite": "relations", "N": n,
            "kappa": format_rational(&kappa), "degree": degree,
        });
        return Ok(("verify", parameters, serde_json::to_value(&report).unwrap(), exit));
    }
    let reports = verify::run_suite(&args.suite)
        .ok_or_else(|| format!("unknown suite {:?}", args.suite))?;
    for report in &reports {
        eprintln!("{}", report.line());
    }
    let pass = reports.iter().all(|r| r.pass);
    let parameters = json!({"suite": args.suite});
    let result = serde_json::to_value(&reports).unwrap();
    Ok(("verify", parameters, result, if pass { 0 } else { 1 }))
}
