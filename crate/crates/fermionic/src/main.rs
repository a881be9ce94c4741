use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fermionic::criteria::{Criterion, OracleSettings, Suite};
use fermionic::output::{render_int, render_poly, Format};
use fermionic::report::OracleReport;
use fermionic_core::characters::{ch_bigc, ch_bigc_alternating, ch_mixc, ch_pi, ch_vm, ch_vmmbar, chi};
use fermionic_core::kostka::{alternating_sum_kostka, restricted_kostka, unrestricted_kostka};
use fermionic_core::oracle::{self, Arithmetic, MixedCartan, OracleTarget};
use fermionic_core::qcomb::{f_coeff, q_binomial};
use fermionic_core::verlinde::{dim_bigc, dim_mixc};
use fermionic_core::{Composition, Error, DEFAULT_PRIME};

/// Fermionic character formulas for sl2 coinvariants, with a brute-force oracle.
#[derive(Parser, Debug)]
#[command(name = "fermionic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Args, Debug, Default)]
struct Params {
    /// Level.
    #[arg(long)]
    k: Option<u32>,
    /// Highest weight, `0 <= l <= k`.
    #[arg(long)]
    l: Option<u32>,
    /// Number of copies of the top module.
    #[arg(long = "N")]
    n: Option<u32>,
    /// Composition `m_1,...,m_k`.
    #[arg(long, value_delimiter = ',')]
    m: Option<Vec<u32>>,
    /// Composition `M_1,...,M_k`.
    #[arg(long = "M", value_delimiter = ',')]
    big: Option<Vec<u32>>,
    /// Composition `M̄_1,...,M̄_k`.
    #[arg(long = "Mbar", value_delimiter = ',')]
    big_bar: Option<Vec<u32>>,
}

#[derive(Args, Debug)]
struct OracleOpts {
    /// Prime modulus for the oracle's row reduction.
    #[arg(long, env = "FERMIONIC_PRIME", default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Seed for the evaluation points.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OracleKind {
    Chi,
    Chpi,
    Kostka,
    Chbig,
    Chmix,
    Kcal,
    Vm,
    Vmmbar,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CartanArg {
    Diagonal,
    Htilde,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character of the first family of coinvariants (needs --k --l --N).
    Chbig(Params),
    /// The same character through the alternating sum (needs --k --l --N).
    ChbigAlt(Params),
    /// Character of the mixed coinvariants (needs --k --l --M --Mbar).
    Chmix(Params),
    /// Fusion character χ_m(q,z) (needs --m).
    Chi(Params),
    /// ch π_m = z^{-|m|/2} χ_m (needs --m).
    Chpi(Params),
    /// Two-variable character of V_M (needs --M).
    Vm(Params),
    /// sl3 fusion character of V_{M,M̄} (needs --M --Mbar).
    Vmmbar(Params),
    /// Restricted Kostka polynomial; unrestricted when --k is omitted (needs --l --m).
    Kostka(Params),
    /// Alternating-sum form of the restricted Kostka polynomial (needs --k --l --m).
    AltKostka(Params),
    /// q-multinomial coefficient F_{M,m}(q) (needs --M --m).
    Fcoeff(Params),
    /// Gaussian binomial [m, n]_q.
    Qbinom {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Verlinde dimension: first family with --k --l --N, mixed with --k --l --M --Mbar.
    VerlindeDim(Params),
    /// Run the brute-force oracle and compare with the formula.
    Oracle {
        which: OracleKind,
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        opts: OracleOpts,
        /// Work over the rationals with evaluation points 1, 2, ...
        #[arg(long)]
        rational: bool,
        /// Reading of h_0 in the mixed-family ideal.
        #[arg(long, value_enum, default_value_t = CartanArg::Diagonal)]
        cartan: CartanArg,
    },
    /// Run a verification suite; exit status 1 if any case fails.
    Verify {
        #[arg(value_enum)]
        suite: Option<Suite>,
        #[arg(long = "suite", value_enum)]
        suite_flag: Option<Suite>,
        #[command(flatten)]
        opts: OracleOpts,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Degenerate { .. } => {
                eprintln!("error: {}", e);
                Failure::Verification
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("missing required flag --{}", flag)))
}

fn composition(v: Option<Vec<u32>>, flag: &str) -> Result<Composition, Failure> {
    Ok(Composition::new(need(v, flag)?)?)
}

impl Params {
    fn target(self, which: OracleKind, cartan: CartanArg) -> Result<OracleTarget, Failure> {
        let Params { k, l, n, m, big, big_bar } = self;
        Ok(match which {
            OracleKind::Chi => OracleTarget::Chi(composition(m, "m")?),
            OracleKind::Chpi => OracleTarget::ChPi(composition(m, "m")?),
            OracleKind::Kostka => OracleTarget::Kostka { k: need(k, "k")?, l: need(l, "l")?, m: composition(m, "m")? },
            OracleKind::Chbig => OracleTarget::ChBig { k: need(k, "k")?, l: need(l, "l")?, n: need(n, "N")? },
            OracleKind::Chmix => OracleTarget::ChMix {
                k: need(k, "k")?,
                l: need(l, "l")?,
                big: composition(big, "M")?,
                big_bar: composition(big_bar, "Mbar")?,
                cartan: match cartan {
                    CartanArg::Diagonal => MixedCartan::Diagonal,
                    CartanArg::Htilde => MixedCartan::HTilde,
                },
            },
            OracleKind::Kcal => OracleTarget::KCal { l: need(l, "l")?, big: composition(big, "M")? },
            OracleKind::Vm => OracleTarget::Vm(composition(big, "M")?),
            OracleKind::Vmmbar => OracleTarget::VmMbar(composition(big, "M")?, composition(big_bar, "Mbar")?),
        })
    }
}

fn criteria_output(results: &[Criterion], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = results
                .iter()
                .map(|c| {
                    let failures: Vec<serde_json::Value> = c
                        .failures()
                        .map(|f| serde_json::json!({"case": f.label, "detail": f.detail}))
                        .collect();
                    serde_json::json!({
                        "id": c.id,
                        "title": c.title,
                        "passed": c.checks_passed(),
                        "cases": c.checks.len(),
                        "failures": failures,
                    })
                })
                .collect();
            out.push_str(&serde_json::Value::Array(items).to_string());
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("criterion,case,passed\n");
            for c in results {
                for check in &c.checks {
                    out.push_str(&format!("{},\"{}\",{}\n", c.id, check.label.replace('"', "\"\""), check.passed));
                }
            }
        }
        Format::Pretty => {
            for c in results {
                for check in &c.checks {
                    let verdict = if check.passed { "ok  " } else { "FAIL" };
                    out.push_str(&format!("{} [{}] {}", verdict, c.id, check.label));
                    if let Some(d) = &check.detail {
                        out.push_str(&format!(": {}", d));
                    }
                    out.push('\n');
                }
                let verdict = if c.checks_passed() { "PASS" } else { "FAIL" };
                out.push_str(&format!("{} [{}] {} ({} cases)\n", verdict, c.id, c.title, c.checks.len()));
            }
        }
    }
    out
}

fn execute(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    let poly = |p| Ok(render_poly(&p, format));
    match cli.command {
        Command::Chbig(p) => poly(ch_bigc(need(p.k, "k")?, need(p.l, "l")?, need(p.n, "N")?)?),
        Command::ChbigAlt(p) => poly(ch_bigc_alternating(need(p.k, "k")?, need(p.l, "l")?, need(p.n, "N")?)?),
        Command::Chmix(p) => {
            let (big, bar) = (composition(p.big, "M")?, composition(p.big_bar, "Mbar")?);
            poly(ch_mixc(need(p.k, "k")?, need(p.l, "l")?, &big, &bar)?)
        }
        Command::Chi(p) => poly(chi(&composition(p.m, "m")?)),
        Command::Chpi(p) => poly(ch_pi(&composition(p.m, "m")?)),
        Command::Vm(p) => poly(ch_vm(&composition(p.big, "M")?)),
        Command::Vmmbar(p) => poly(ch_vmmbar(&composition(p.big, "M")?, &composition(p.big_bar, "Mbar")?)?),
        Command::Kostka(p) => {
            let (l, m) = (need(p.l, "l")?, composition(p.m, "m")?);
            match p.k {
                Some(k) => poly(restricted_kostka(k, l, &m)?),
                None => poly(unrestricted_kostka(l, &m)),
            }
        }
        Command::AltKostka(p) => {
            poly(alternating_sum_kostka(need(p.k, "k")?, need(p.l, "l")?, &composition(p.m, "m")?)?)
        }
        Command::Fcoeff(p) => poly(f_coeff(&composition(p.big, "M")?, &composition(p.m, "m")?)?),
        Command::Qbinom { m, n } => poly(q_binomial(m, n)),
        Command::VerlindeDim(p) => {
            let (k, l) = (need(p.k, "k")?, need(p.l, "l")?);
            let d = match (p.n, p.big, p.big_bar) {
                (Some(n), None, None) => dim_bigc(k, l, n)?,
                (None, Some(big), Some(bar)) => dim_mixc(k, l, &Composition::new(big)?, &Composition::new(bar)?)?,
                _ => return Err(Failure::Usage("give either --N, or both --M and --Mbar".into())),
            };
            Ok(render_int("dim", &d, format))
        }
        Command::Oracle { which, params, opts, rational, cartan } => {
            let target = params.target(which, cartan)?;
            let arithmetic =
                if rational { Arithmetic::Rational } else { Arithmetic::Prime { modulus: opts.prime, seed: opts.seed } };
            let run = oracle::run(&target, arithmetic)?;
            let report = OracleReport::new(&run, &target.formula()?);
            let text = match format {
                Format::Json => report.to_json() + "\n",
                Format::Csv => {
                    let mut s = String::from("degree,");
                    for v in &report.weight_vars {
                        s.push_str(&format!("\"{}\",", v));
                    }
                    s.push_str("dim\n");
                    for e in &report.graded_dims {
                        s.push_str(&e.degree.to_string());
                        for w in &e.weights {
                            s.push_str(&format!(",{}", w));
                        }
                        s.push_str(&format!(",{}\n", e.dim));
                    }
                    s
                }
                Format::Pretty => format!(
                    "{}\noracle:  {}\nformula: {}\nverdict: {}\n",
                    target.describe(),
                    run.poly,
                    target.formula()?,
                    report.verdict
                ),
            };
            if report.matches() {
                Ok(text)
            } else {
                print!("{}", text);
                Err(Failure::Verification)
            }
        }
        Command::Verify { suite, suite_flag, opts } => {
            let suite = match (suite, suite_flag) {
                (Some(a), Some(b)) if a != b => return Err(Failure::Usage("conflicting suite names".into())),
                (Some(s), _) | (None, Some(s)) => s,
                (None, None) => return Err(Failure::Usage("missing suite name".into())),
            };
            let results = suite.run(&OracleSettings::with_prime(opts.prime, opts.seed));
            for c in &results {
                eprintln!("{}", c.summary_line());
            }
            let text = criteria_output(&results, format);
            if results.iter().all(|c| c.checks_passed()) {
                Ok(text)
            } else {
                print!("{}", text);
                Err(Failure::Verification)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
