//! Command-line front end. Every command writes one JSON report to stdout.

use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;
use crate::expr::{parse_operator, parse_polynomial, pretty_print};
use crate::module::{
    decompose, ext_dim, hom_dim, hom_window, is_uniserial, random_scramble, split_complement,
    ClassifiedModule, WeightWindowModule,
};
use crate::oracle::{action_matrix, verify_product};
use crate::suite::{oracle_suite, relation_suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_WINDOW: usize = 40;
const DEFAULT_MAX_DEGREE: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "intdiff", version, about = "Integro-differential operator and weight module calculator")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Oracle truncation degree N.
    #[arg(long, global = true)]
    window: Option<usize>,
    /// Lowest window index for module specs.
    #[arg(long, global = true, allow_hyphen_values = true)]
    lo: Option<i64>,
    /// Highest window index for module specs.
    #[arg(long, global = true, allow_hyphen_values = true)]
    hi: Option<i64>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Compact JSON (default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical form of an expression.
    Norm { expr: String },
    /// Canonical form of a product.
    Mul { a: String, b: String },
    /// Apply an operator to a polynomial in x.
    Apply { op: String, poly: String },
    /// Homogeneous component of the given grade.
    Grade {
        expr: String,
        #[arg(allow_hyphen_values = true)]
        k: i64,
    },
    /// Membership in the ideal spanned by the e(i,j).
    #[command(name = "inF")]
    InF { expr: String },
    /// Image in the quotient by that ideal.
    B1 { expr: String },
    /// Check a product against the truncated action, or dump one action matrix.
    Oracle { a: String, b: Option<String> },
    /// Weight module computations.
    #[command(name = "mod", subcommand)]
    Module(ModCommand),
    /// Relation and oracle suites.
    Selftest {
        #[arg(long, default_value_t = 100)]
        pairs: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ModCommand {
    /// Emit a module file for "M(n,λ)" or "Kx"; scrambled when --seed is given.
    Make { spec: String },
    Decompose { input: String },
    Hom { a: String, b: String },
    Ext { a: String, b: String },
    Split { input: String },
    Uniserial { input: String },
}

/// Runs one command line (including the program name) and returns the exit
/// code with the text that goes to stdout.
pub fn run_command<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::*;
            return match e.kind() {
                DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand => {
                    (EXIT_OK, e.to_string())
                }
                _ => (EXIT_USAGE, render(&json!({ "error": e.to_string().trim_end() }), false)),
            };
        }
    };
    let pretty = cli.opts.pretty;
    match execute(&cli.command, &cli.opts) {
        Ok(report) => (EXIT_OK, render(&report, pretty)),
        Err(e) => {
            let code = if e.is_usage() { EXIT_USAGE } else { EXIT_COMPUTATION };
            (code, render(&json!({ "error": e.to_string() }), pretty))
        }
    }
}

fn render(v: &Value, pretty: bool) -> String {
    let text = if pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    };
    text.expect("reports are plain JSON")
}

fn max_degree() -> usize {
    std::env::var("INTDIFF_MAX_DEGREE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_DEGREE)
}

fn truncation(opts: &GlobalOpts) -> usize {
    opts.window.unwrap_or(DEFAULT_WINDOW).min(max_degree())
}

fn window(opts: &GlobalOpts, spec: &ClassifiedModule) -> Option<(i64, i64)> {
    if opts.lo.is_none() && opts.hi.is_none() {
        return None;
    }
    let (lo, hi) = spec.default_window();
    Some((opts.lo.unwrap_or(lo), opts.hi.unwrap_or(hi)))
}

/// A module argument is either a spec string or a path to a module file.
fn load_module(input: &str, opts: &GlobalOpts) -> crate::Result<WeightWindowModule> {
    match input.parse::<ClassifiedModule>() {
        Ok(spec) => spec.to_module(window(opts, &spec)),
        Err(spec_err) => {
            if Path::new(input).is_file() {
                let text = std::fs::read_to_string(input)
                    .map_err(|e| Error::Format(format!("{input}: {e}")))?;
                WeightWindowModule::from_json(&text)
            } else {
                Err(spec_err)
            }
        }
    }
}

fn load_spec(input: &str) -> crate::Result<ClassifiedModule> {
    input.parse()
}

fn execute(cmd: &Command, opts: &GlobalOpts) -> crate::Result<Value> {
    Ok(match cmd {
        Command::Norm { expr } => json!({ "canonical": pretty_print(&parse_operator(expr)?) }),
        Command::Mul { a, b } => {
            let p = &parse_operator(a)? * &parse_operator(b)?;
            json!({ "canonical": pretty_print(&p) })
        }
        Command::Apply { op, poly } => {
            let r = parse_operator(op)?.apply(&parse_polynomial(poly)?);
            json!({ "result": r.to_string() })
        }
        Command::Grade { expr, k } => {
            let c = parse_operator(expr)?.grade_component(*k);
            json!({ "grade": k, "component": pretty_print(&c) })
        }
        Command::InF { expr } => json!({ "in_F": parse_operator(expr)?.is_in_f() }),
        Command::B1 { expr } => {
            json!({ "image": parse_operator(expr)?.project_to_b1().to_string() })
        }
        Command::Oracle { a, b } => {
            let size = truncation(opts);
            let a = parse_operator(a)?;
            match b {
                Some(b) => {
                    let b = parse_operator(b)?;
                    match verify_product(&a, &b, size) {
                        Ok(columns) => json!({ "N": size, "ok": true, "columns_checked": columns }),
                        Err(m) => {
                            return Err(Error::Mismatch(format!("N = {size}: {m}")));
                        }
                    }
                }
                None => {
                    let t = action_matrix(&a, size);
                    json!({
                        "N": size,
                        "valid_columns": t.valid_columns().end,
                        "matrix": t.matrix.to_string_rows(),
                    })
                }
            }
        }
        Command::Module(m) => execute_mod(m, opts)?,
        Command::Selftest { pairs } => {
            let relations = relation_suite(8);
            let oracle = oracle_suite(*pairs, opts.seed.unwrap_or(0), truncation(opts));
            let passed = relations.passed() && oracle.passed();
            let report = json!({
                "passed": passed,
                "relations": relations,
                "oracle": oracle,
            });
            if !passed {
                return Err(Error::Mismatch(report.to_string()));
            }
            report
        }
    })
}

fn execute_mod(cmd: &ModCommand, opts: &GlobalOpts) -> crate::Result<Value> {
    let to_value = |v: serde_json::Result<Value>| v.map_err(|e| Error::Format(e.to_string()));
    Ok(match cmd {
        ModCommand::Make { spec } => {
            let spec = load_spec(spec)?;
            let mut m = spec.to_module(window(opts, &spec))?;
            if let Some(seed) = opts.seed {
                m = random_scramble(&m, seed);
            }
            to_value(serde_json::to_value(crate::module::ModuleFile::from(&m)))?
        }
        ModCommand::Decompose { input } => {
            let r = decompose(&load_module(input, opts)?)?;
            let mut v = to_value(serde_json::to_value(&r))?;
            v["summary"] = json!(r.to_string());
            v
        }
        ModCommand::Hom { a, b } => {
            let (ma, mb) = (load_module(a, opts)?, load_module(b, opts)?);
            let dim = hom_window(&ma, &mb)?.dim();
            if let (Ok(sa), Ok(sb)) = (load_spec(a), load_spec(b)) {
                let expected = hom_dim(&sa, &sb);
                if expected != dim {
                    return Err(Error::Mismatch(format!(
                        "windowed Hom has dimension {dim}, classification gives {expected}"
                    )));
                }
            }
            json!({ "dim": dim })
        }
        ModCommand::Ext { a, b } => to_value(serde_json::to_value(ext_dim(&load_spec(a)?, &load_spec(b)?)?))?,
        ModCommand::Split { input } => {
            let (_, report) = split_complement(&load_module(input, opts)?)?;
            to_value(serde_json::to_value(report))?
        }
        ModCommand::Uniserial { input } => {
            let r = is_uniserial(&load_module(input, opts)?)?;
            json!({ "uniserial": r.uniserial, "chain_length": r.chain_length() })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, Value) {
        let mut argv = vec!["intdiff"];
        argv.extend_from_slice(args);
        let (code, out) = run_command(argv);
        (code, serde_json::from_str(&out).unwrap_or(Value::String(out)))
    }

    #[test]
    fn norm_idempotent_projector() {
        assert_eq!(run(&["norm", "i*d*i*d"]), (0, json!({"canonical": "1 - e(0,0)"})));
    }

    #[test]
    fn hom_between_same_class() {
        assert_eq!(run(&["mod", "hom", "M(2,1/2)", "M(3,1/2)"]), (0, json!({"dim": 2})));
    }

    #[test]
    fn ext_reports_both_values() {
        assert_eq!(
            run(&["mod", "ext", "M(2,0)", "M(3,0)"]),
            (0, json!({"computed": 2, "paper_claim": 1}))
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["norm", "d*"]).0, EXIT_USAGE);
        assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run(&["mod", "hom", "M(1,0)", "M(1,0)", "--lo", "2", "--hi", "6"]).0, EXIT_COMPUTATION);
    }

    #[test]
    fn misc_commands() {
        assert_eq!(run(&["mul", "d", "i"]).1, json!({"canonical": "1"}));
        assert_eq!(run(&["apply", "d", "x^3"]).1, json!({"result": "3*x^2"}));
        assert_eq!(run(&["inF", "1 - i*d"]).1, json!({"in_F": true}));
        assert_eq!(run(&["inF", "x"]).1, json!({"in_F": false}));
        let (code, v) = run(&["oracle", "d*x", "x*d", "--window", "12"]);
        assert_eq!(code, 0);
        assert_eq!(v["ok"], json!(true));
    }
}
