use std::path::Path;

use clap::{Parser, Subcommand};
use majordex::abindex::{theta, theta_qt, to_cd};
use majordex::permstat::{carlitz_check, maj_distribution, q_eulerian, signed_maj_distribution, EnumLimits, PermError};
use majordex::poset::{FlagVector, GradedPoset};
use majordex::rlabel::{product_chain_labeling, signed_labeling, LabelError};
use majordex::verify::{self, Family};
use majordex::{AbPoly, CdPoly, QPoly, QTPoly};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::expr::{parse, EvalError, ParseError};
use crate::io::{labeled_poset_json, poset_json, IoError, PosetFile};

/// Exact computations with the Major MacMahon map, ab- and cd-indices of
/// graded posets, and permutation statistics.
#[derive(Debug, Parser)]
#[command(name = "majordex", version)]
pub struct Cli {
    /// Emit JSON, with coefficients as decimal strings.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The ab-index Ψ(P).
    Abindex { expr: String },
    /// The cd-index, when Ψ(P) has one.
    Cdindex { expr: String },
    /// Θ(Ψ(P)).
    Theta { expr: String },
    /// Θ^{q,t}(Ψ(P)).
    Thetaqt { expr: String },
    /// The h-polynomial of a simplicial poset.
    Hpoly { expr: String },
    /// The flag f-vector.
    Flagf { expr: String },
    /// Distribution of maj over permutations of the multiset 1^α1 2^α2 ...
    Majdist {
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<u32>,
    },
    /// Distribution of maj over r-signed permutations.
    Signedmaj {
        #[arg(long, value_delimiter = ',', required = true)]
        r: Vec<u32>,
    },
    /// The joint (maj, des) distribution over the symmetric group.
    Qeulerian {
        #[arg(long)]
        n: usize,
    },
    /// Checks the Carlitz identity through a power of t.
    Carlitz {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        torder: u32,
    },
    /// Runs a named identity family, or `all` of them.
    Verify {
        name: String,
        #[arg(long)]
        max_rank: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Writes a poset as JSON, or one of the standard labelings.
    Export {
        #[arg(required_unless_present_any = ["chains", "signed"])]
        expr: Option<String>,
        /// Coordinate labeling of a product of chains of these lengths.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["expr", "signed"])]
        chains: Option<Vec<u32>>,
        /// Signed labeling for these r_i.
        #[arg(long, value_delimiter = ',', conflicts_with = "expr")]
        signed: Option<Vec<u32>>,
    },
    /// Sum of the descent words of a labeled poset file.
    Bssum { expr: String },
}

pub const DEFAULT_BOUND: usize = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Io(IoError),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Limit(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse(_) => "parse",
            CliError::Io(IoError::Read { .. }) => "io",
            CliError::Io(IoError::Schema { .. }) => "schema",
            CliError::Domain(_) => "domain",
            CliError::Limit(_) => "limit",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 3,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut err = json!({ "code": self.code(), "message": self.to_string() });
        if let CliError::Parse(p) = self {
            err["line"] = json!(p.line);
            err["column"] = json!(p.column);
        }
        json!({ "error": err })
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::Io(e) => CliError::Io(e),
            EvalError::TooLarge(_) => CliError::Limit(e.to_string()),
        }
    }
}

impl From<PermError> for CliError {
    fn from(e: PermError) -> Self {
        match e {
            PermError::TooLarge { .. } => CliError::Limit(format!(
                "{e}; raise {} to allow larger enumerations",
                majordex::permstat::MAX_ENUM_ENV
            )),
            PermError::Invalid(_) => CliError::Usage(e.to_string()),
        }
    }
}

/// What a successful command prints, and the exit status: 0, or 1 when a
/// verification ran and failed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub status: u8,
}

impl Outcome {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Self {
            text: text.into(),
            json,
            status: 0,
        }
    }
}

fn poly_json(p: &QPoly) -> Value {
    Value::Object(p.terms().map(|(e, c)| (e.to_string(), json!(c.to_string()))).collect())
}

fn qt_json(p: &QTPoly) -> Value {
    Value::Object(
        p.terms()
            .map(|((q, t), c)| (format!("{q},{t}"), json!(c.to_string())))
            .collect(),
    )
}

fn ab_json(p: &AbPoly) -> Value {
    Value::Object(p.terms().map(|(w, c)| (w.to_string(), json!(c.to_string()))).collect())
}

fn cd_json(p: &CdPoly) -> Value {
    Value::Object(p.terms().map(|(w, c)| (w.to_string(), json!(c.to_string()))).collect())
}

fn set_key(set: &[u32]) -> String {
    set.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn flag_output(fv: &FlagVector) -> Outcome {
    let mut text = String::new();
    let mut map = Map::new();
    for (set, count) in fv.entries() {
        text.push_str(&format!("{{{}}}: {count}\n", set_key(&set)));
        map.insert(set_key(&set), json!(count.to_string()));
    }
    text.pop();
    Outcome::ok(text, Value::Object(map))
}

fn load(expr: &str) -> Result<crate::expr::Evaluated, CliError> {
    Ok(parse(expr)?.eval(Path::new("."))?)
}

fn load_ranked(expr: &str) -> Result<GradedPoset, CliError> {
    let p = load(expr)?.poset;
    if p.rank() == 0 {
        return Err(CliError::Domain("the poset has rank 0, so it has no ab-index".into()));
    }
    Ok(p)
}

fn family_bound(
    name: &str,
    max_rank: Option<usize>,
    max_degree: Option<usize>,
) -> Result<(Vec<Family>, usize), CliError> {
    let families = if name == "all" {
        Family::ALL.to_vec()
    } else {
        vec![name.parse::<Family>().map_err(|e| CliError::Usage(e.to_string()))?]
    };
    let bound = match (max_rank, max_degree) {
        (Some(r), Some(d)) if r != d => {
            return Err(CliError::Usage(
                "--max-rank and --max-degree set the same bound; give one".into(),
            ))
        }
        (r, d) => r.or(d).unwrap_or(DEFAULT_BOUND),
    };
    for f in &families {
        if bound > f.max_bound() {
            return Err(CliError::Usage(format!(
                "{f} accepts bounds up to {}, got {bound}",
                f.max_bound()
            )));
        }
    }
    Ok((families, bound))
}

fn run_verify(families: &[Family], bound: usize) -> Outcome {
    let mut lines = Vec::new();
    let mut results = Vec::new();
    let mut status = 0;
    for &family in families {
        match verify::run(family, bound) {
            Ok(report) => {
                lines.push(format!(
                    "{family}: PASS ({} cases, {} <= {bound})",
                    report.cases,
                    family.bound_meaning()
                ));
                results
                    .push(json!({ "family": family.name(), "status": "pass", "bound": bound, "cases": report.cases }));
            }
            Err(failure) => {
                lines.push(format!("{family}: FAIL: {}", failure.witness));
                results.push(
                    json!({ "family": family.name(), "status": "fail", "bound": bound, "witness": failure.witness }),
                );
                status = 1;
                break;
            }
        }
    }
    Outcome {
        text: lines.join("\n"),
        json: json!({ "results": results }),
        status,
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    Ok(match command {
        Command::Abindex { expr } => {
            let psi = load_ranked(expr)?.ab_index();
            Outcome::ok(psi.to_string(), ab_json(&psi))
        }
        Command::Cdindex { expr } => match to_cd(&load_ranked(expr)?.ab_index()) {
            Ok(cd) => Outcome::ok(cd.to_string(), cd_json(&cd)),
            Err(_) => Outcome::ok("not cd-expressible", Value::Null),
        },
        Command::Theta { expr } => {
            let th = theta(&load_ranked(expr)?.ab_index());
            Outcome::ok(th.to_string(), poly_json(&th))
        }
        Command::Thetaqt { expr } => {
            let th = theta_qt(&load_ranked(expr)?.ab_index());
            Outcome::ok(th.to_string(), qt_json(&th))
        }
        Command::Hpoly { expr } => {
            let h = load_ranked(expr)?
                .h_polynomial()
                .map_err(|e| CliError::Domain(e.to_string()))?;
            Outcome::ok(h.to_string(), poly_json(&h))
        }
        Command::Flagf { expr } => flag_output(&load_ranked(expr)?.flag_f()),
        Command::Majdist { alpha } => {
            let dist = maj_distribution(alpha, &EnumLimits::from_env())?;
            Outcome::ok(dist.to_string(), poly_json(&dist))
        }
        Command::Signedmaj { r } => {
            let dist = signed_maj_distribution(r, &EnumLimits::from_env())?;
            Outcome::ok(dist.to_string(), poly_json(&dist))
        }
        Command::Qeulerian { n } => {
            let a = q_eulerian(*n)?;
            Outcome::ok(a.to_string(), qt_json(&a))
        }
        Command::Carlitz { n, torder } => match carlitz_check(*n, *torder)? {
            None => Outcome::ok(
                format!("holds through t^{torder}"),
                json!({ "holds": true, "n": n, "torder": torder }),
            ),
            Some(k) => Outcome {
                text: format!("fails at t^{k}"),
                json: json!({ "holds": false, "n": n, "torder": torder, "first_mismatch": k }),
                status: 1,
            },
        },
        Command::Verify {
            name,
            max_rank,
            max_degree,
        } => {
            let (families, bound) = family_bound(name, *max_rank, *max_degree)?;
            run_verify(&families, bound)
        }
        Command::Export { expr, chains, signed } => {
            let (text, file) = if let Some(alpha) = chains {
                if alpha.is_empty() || alpha.contains(&0) {
                    return Err(CliError::Usage("--chains needs positive lengths".into()));
                }
                let lp = product_chain_labeling(alpha);
                (labeled_poset_json(&lp), PosetFile::from_labeled(&lp))
            } else if let Some(r) = signed {
                if r.is_empty() || r.contains(&0) {
                    return Err(CliError::Usage("--signed needs positive entries".into()));
                }
                let lp = signed_labeling(r);
                (labeled_poset_json(&lp), PosetFile::from_labeled(&lp))
            } else {
                let p = load(expr.as_deref().expect("clap requires one source"))?.poset;
                (poset_json(&p), PosetFile::from_poset(&p))
            };
            Outcome::ok(text, serde_json::to_value(file).expect("plain data serializes"))
        }
        Command::Bssum { expr } => {
            let Some(lp) = load(expr)?.labeled else {
                return Err(CliError::Domain(
                    "bssum needs a labeled poset file (@path with \"labels\")".into(),
                ));
            };
            match lp.bs_sum() {
                Ok(sum) => Outcome::ok(sum.to_string(), ab_json(&sum)),
                Err(e @ LabelError::NotRLabeling(_)) => Outcome {
                    text: e.to_string(),
                    json: json!({ "r_labeling": false, "message": e.to_string() }),
                    status: 1,
                },
                Err(e) => return Err(CliError::Domain(e.to_string())),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(args: &[&str]) -> String {
        let cli = Cli::try_parse_from(std::iter::once("majordex").chain(args.iter().copied())).unwrap();
        run(&cli.command).unwrap().text
    }

    #[test]
    fn computations() {
        assert_eq!(text(&["majdist", "--alpha", "1,2"]), "1 + q + q^2");
        assert_eq!(text(&["abindex", "B(2)"]), "a + b");
        assert_eq!(text(&["cdindex", "chain(3)"]), "not cd-expressible");
        assert_eq!(text(&["theta", "cross(1)"]), "1 + q");
        assert_eq!(text(&["carlitz", "--n", "3", "--torder", "6"]), "holds through t^6");
        assert!(text(&["flagf", "B(2)"]).starts_with("{}: 1\n{1}: 2"));
    }

    #[test]
    fn verify_bounds() {
        assert_eq!(family_bound("eq5", None, Some(7)).unwrap(), (vec![Family::Eq5], 7));
        assert_eq!(family_bound("all", None, None).unwrap().1, DEFAULT_BOUND);
        assert!(matches!(family_bound("eq6", None, None), Err(CliError::Usage(_))));
        assert!(matches!(family_bound("eq5", Some(3), Some(4)), Err(CliError::Usage(_))));
        assert!(matches!(family_bound("reiner", Some(9), None), Err(CliError::Usage(_))));
    }

    #[test]
    fn error_codes() {
        let e = run(&Command::Theta { expr: "B(2 *".into() }).unwrap_err();
        assert_eq!((e.code(), e.exit_code()), ("parse", 2));
        assert_eq!(e.to_json()["error"]["column"], 5);
        let e = run(&Command::Theta {
            expr: "@/nonexistent/p.json".into(),
        })
        .unwrap_err();
        assert_eq!((e.code(), e.exit_code()), ("io", 3));
        let e = run(&Command::Hpoly {
            expr: "chain(3)".into(),
        })
        .unwrap_err();
        assert_eq!((e.code(), e.exit_code()), ("domain", 2));
        let e = run(&Command::Qeulerian { n: 20 }).unwrap_err();
        assert_eq!(e.code(), "limit");
    }
}
