mod args;
mod config;
mod output;

use std::process::ExitCode;

use clap::Parser;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use practicum::practical::{density_rows, is_practical, is_practical_oracle};
use practicum::progressions::{
    ap_constructive_witness, ap_practical_stream, classify_ap, nonpractical_witness,
};
use practicum::quadratic::{
    classify_quadratic, mq, quad_constructive_witness, quad_practical_stream, QuadraticPoly,
};
use practicum::representations::{
    decompose_square_plus_practical, family_stream, goldbach_pair, palindromic_practicals,
    triples_in, verify_not_representable, FamilyVariant,
};
use practicum::{Error, Result};

use args::{ApCommand, Cli, Command, PolyCommand, QuadArgs, QuadCommand};
use config::{save_atomically, RunConfig};

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn parse_big(name: &str, s: &str) -> Result<BigUint> {
    s.parse()
        .map_err(|_| Error::InvalidInput(format!("{name}: expected a non-negative integer, got {s:?}")))
}

fn quad(q: &QuadArgs) -> Result<QuadraticPoly> {
    QuadraticPoly::new(q.a, q.b, q.c)
}

/// With --verify, re-decides practicality of each value by subset sums.
fn cross_check(cfg: &RunConfig, values: impl IntoIterator<Item = u64>) -> Result<()> {
    if !cfg.verify {
        return Ok(());
    }
    for v in values {
        if v <= cfg.oracle_bound && !is_practical_oracle(v, cfg.oracle_bound)? {
            return Err(Error::ClassificationMismatch(format!(
                "{v} was reported practical but the subset-sum oracle disagrees"
            )));
        }
    }
    Ok(())
}

fn run(cmd: Command, cfg: &RunConfig) -> Result<Value> {
    let budget = &cfg.budget;
    Ok(match cmd {
        Command::Test { n } => {
            let n = parse_big("N", &n)?;
            let verdict = is_practical(&n, budget)?;
            if cfg.verify {
                if let Some(small) = n.to_u64().filter(|&x| x >= 1 && x <= cfg.oracle_bound) {
                    if is_practical_oracle(small, cfg.oracle_bound)? != verdict.practical {
                        return Err(Error::ClassificationMismatch(format!(
                            "Stewart test and subset-sum oracle disagree on {small}"
                        )));
                    }
                }
            }
            to_value(&verdict)
        }
        Command::Oracle { n } => {
            json!({ "n": n, "practical": is_practical_oracle(n, cfg.oracle_bound)? })
        }
        Command::Sieve { limit, out } => {
            let (bitmap, _) = cfg.bitmap(limit)?;
            let mut v = json!({ "limit": limit, "count": bitmap.count_up_to(limit) });
            if let Some(path) = out {
                save_atomically(&bitmap, &path)?;
                v["out"] = json!(path.display().to_string());
            }
            v
        }
        Command::Count { x, report } => {
            let mut points = report.unwrap_or_default();
            let single = points.is_empty();
            points.push(x);
            points.sort_unstable();
            points.dedup();
            let (bitmap, _) = cfg.bitmap(*points.last().unwrap())?;
            let rows = density_rows(&bitmap, &points);
            if single {
                to_value(&rows[0])
            } else {
                to_value(&rows)
            }
        }
        Command::Ap(ApCommand::Classify { a, b }) => {
            to_value(&classify_ap(&parse_big("A", &a)?, &parse_big("B", &b)?, budget)?)
        }
        Command::Ap(ApCommand::Stream { a, b, count }) => {
            let terms = ap_practical_stream(a, b, count, cfg.scan_limit, budget)?;
            cross_check(cfg, terms.iter().copied())?;
            to_value(&terms)
        }
        Command::Ap(ApCommand::Witness { a, b, min }) => to_value(&ap_constructive_witness(
            &parse_big("A", &a)?,
            &parse_big("B", &b)?,
            &parse_big("--min", &min)?,
            budget,
        )?),
        Command::Poly(PolyCommand::Witness { coeffs }) => {
            to_value(&nonpractical_witness(&coeffs, cfg.scan_limit, budget)?)
        }
        Command::Quad(QuadCommand::Mq { q, p }) => {
            if !num_prime::nt_funcs::is_prime64(p) {
                return Err(Error::InvalidInput(format!("P = {p} is not a prime")));
            }
            to_value(&mq(&quad(&q)?, p))
        }
        Command::Quad(QuadCommand::Classify { q }) => to_value(&classify_quadratic(&quad(&q)?, budget)?),
        Command::Quad(QuadCommand::Stream { q, count }) => {
            let terms = quad_practical_stream(&quad(&q)?, count, cfg.scan_limit, budget)?;
            cross_check(cfg, terms.iter().map(|t| t.value))?;
            to_value(&terms)
        }
        Command::Quad(QuadCommand::Witness { q, min }) => {
            to_value(&quad_constructive_witness(&quad(&q)?, &parse_big("--min", &min)?, budget)?)
        }
        Command::Decompose { n } => {
            let d = decompose_square_plus_practical(&parse_big("N", &n)?)?;
            cross_check(cfg, d.practical_part.to_u64())?;
            to_value(&d)
        }
        Command::Family { j, count, repaired } => {
            let variant = if repaired { FamilyVariant::Repaired } else { FamilyVariant::Stated };
            let members = family_stream(j, count, variant)?;
            if !cfg.verify {
                return Ok(to_value(&members));
            }
            let mut rows = Vec::with_capacity(members.len());
            let mut representable = Vec::new();
            for m in members {
                let check = verify_not_representable(m)?;
                let mut row = json!({ "m": m, "not_representable": check.not_representable });
                if let Some((x, p)) = check.representation() {
                    row["x"] = json!(x);
                    row["practical_part"] = json!(p);
                    representable.push(format!("{m} = {x}^2 + {p}"));
                }
                rows.push(row);
            }
            let rows = Value::Array(rows);
            if !representable.is_empty() {
                output::emit(cfg.format, &rows)?;
                return Err(Error::ClassificationMismatch(format!(
                    "family {j} members are representable: {}",
                    representable.join(", ")
                )));
            }
            rows
        }
        Command::Goldbach { n } => {
            // past this, testing candidates directly beats sieving up to n
            let bitmap = if n <= 10_000_000 { Some(cfg.bitmap(n.max(2))?.0) } else { None };
            let pair = goldbach_pair(n, bitmap.as_ref())?;
            cross_check(cfg, [pair.p1, pair.p2])?;
            to_value(&pair)
        }
        Command::Triples { limit } => {
            let (bitmap, _) = cfg.bitmap(limit.saturating_add(2))?;
            let triples = triples_in(&bitmap, limit);
            cross_check(cfg, triples.iter().flat_map(|&m| [m - 2, m, m + 2]))?;
            to_value(&triples)
        }
        Command::Palindromic { count } => to_value(&palindromic_practicals(count)?),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = RunConfig::resolve(&cli.global).and_then(|cfg| {
        let v = run(cli.command, &cfg)?;
        output::emit(cfg.format, &v)?;
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_falsification() { 1 } else { 2 })
        }
    }
}
