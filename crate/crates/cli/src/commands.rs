//! Argument definitions and command execution.

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use prozeta::exactalg::factor::DEFAULT_SEED;
use prozeta::lie::{build_lattice, check_lie_axioms, companion, solve_sigma, verify_quadratic_iso};
use prozeta::numberfield::{certify_irreducible, decomposition_type_seeded};
use prozeta::padic::{
    count_in_s, expected_count, transversal_distinctness, CountMethod, LocalFieldSpec,
    DEFAULT_ENUM_BUDGET,
};
use prozeta::zeta::{
    dirichlet_coeffs, euler_partial, local_factor_any, symmetry_check, vsum_coeffs, Family,
    Symmetry,
};
use prozeta::{DecompType, IntPoly};

use crate::output::*;
use crate::parse::PolyExpr;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "prozeta",
    version,
    about = "Local zeta functions of Lie lattices built from number fields"
)]
pub struct Cli {
    /// Print results as JSON
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for randomized factorization mod p
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decomposition type of p in Q[x]/(f)
    Decomp(PolyPrime),
    /// Local zeta function W(X, Y) at p as a rational function
    ZetaLocal(PolyPrime),
    /// Functional equation W(1/X, 1/Y) = ±X^a Y^b W(X, Y)
    Funceq(FuncEqArgs),
    /// Dirichlet coefficients b_{p^k} from the series and from the v-sum
    Coeffs {
        #[command(flatten)]
        target: PolyPrime,
        /// Largest k
        #[arg(long)]
        max_k: usize,
    },
    /// Coefficients of the truncated Euler product
    Euler {
        /// Monic irreducible integer polynomial in x
        #[arg(allow_hyphen_values = true)]
        poly: PolyExpr,
        /// Include primes up to this bound
        #[arg(long)]
        primes: u64,
        /// Largest index m
        #[arg(long)]
        index: u64,
    },
    /// Enumeration oracles
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Lie lattice verification
    Lie {
        #[command(subcommand)]
        command: LieCommand,
    },
}

#[derive(Debug, Args)]
pub struct PolyPrime {
    /// Monic irreducible integer polynomial in x, e.g. "x^3-2"
    #[arg(allow_hyphen_values = true)]
    pub poly: PolyExpr,
    /// Rational prime
    pub p: u64,
}

#[derive(Debug, Args)]
pub struct FuncEqArgs {
    /// Monic irreducible integer polynomial in x
    #[arg(allow_hyphen_values = true, requires = "p")]
    pub poly: Option<PolyExpr>,
    /// Rational prime
    pub p: Option<u64>,
    /// Decomposition type given directly: n=<n> e=<e1,e2,..> f=<f1,f2,..>
    #[arg(long = "type", num_args = 1..=3, conflicts_with_all = ["poly", "p"], required_unless_present = "poly")]
    pub ty: Option<Vec<String>>,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Count coset representatives in S(a) against the closed formula
    Coset {
        /// Residue field size (a prime power)
        #[arg(long)]
        q: u64,
        /// Ramification index
        #[arg(long)]
        e: u32,
        /// Valuation of a
        #[arg(long)]
        v: u32,
        /// Also check the representatives with m <= M are pairwise inequivalent
        #[arg(long)]
        max_m: Option<u32>,
        /// Largest number of representatives to materialize
        #[arg(long, env = "PROZETA_ENUM_BUDGET", default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u64,
        /// Working precision N in powers of the uniformizer
        #[arg(long, env = "PROZETA_PRECISION")]
        precision: Option<u32>,
    },
}

#[derive(Debug, Subcommand)]
pub enum LieCommand {
    /// Lie axioms and center of the lattice built from f^ell
    Check {
        /// Monic irreducible integer polynomial in x
        #[arg(allow_hyphen_values = true)]
        poly: PolyExpr,
        /// Exponent ell
        #[arg(long, default_value_t = 1)]
        ell: u32,
    },
    /// Symmetric unimodular matrix conjugating the companion matrix to its transpose
    Sigma {
        /// Monic irreducible integer polynomial in x
        #[arg(allow_hyphen_values = true)]
        poly: PolyExpr,
    },
    /// Automorphisms of the lattice of a quadratic polynomial
    Iso {
        /// Monic irreducible integer polynomial in x
        #[arg(allow_hyphen_values = true)]
        poly: PolyExpr,
    },
}

/// Input or usage problem; reported with exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError(pub String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

impl From<prozeta::Error> for CliError {
    fn from(e: prozeta::Error) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

pub fn run(cli: &Cli) -> CliResult<OutputDoc> {
    let seed = cli.seed;
    match &cli.command {
        Command::Decomp(t) => {
            let d = decomposition(t, seed)?;
            Ok(OutputDoc::Decomp(DecompDoc {
                poly: t.poly.poly.to_string(),
                p: t.p,
                ty: TypeDoc::from(&d),
            }))
        }
        Command::ZetaLocal(t) => {
            let d = decomposition(t, seed)?;
            let lf = local_factor_any(d.degree() as usize, &d)?;
            Ok(OutputDoc::LocalFactor(LocalFactorDoc {
                poly: Some(t.poly.poly.to_string()),
                p: Some(t.p),
                ty: TypeDoc::from(&d),
                family: family_name(lf.family).into(),
                value: RatFuncDoc::from(&lf.value),
                den_factored: lf.value.den_binomial_factors(),
            }))
        }
        Command::Funceq(a) => funceq(a, seed),
        Command::Coeffs { target, max_k } => coeffs(target, *max_k, seed),
        Command::Euler {
            poly,
            primes,
            index,
        } => {
            let f = &poly.poly;
            require_field(f)?;
            let table = euler_partial(f, *primes, *index)?;
            Ok(OutputDoc::Euler(EulerDoc {
                poly: f.to_string(),
                prime_bound: *primes,
                max_index: *index,
                entries: table
                    .into_iter()
                    .map(|(m, b)| EulerEntry { m, b: b.into() })
                    .collect(),
            }))
        }
        Command::Oracle {
            command:
                OracleCommand::Coset {
                    q,
                    e,
                    v,
                    max_m,
                    budget,
                    precision,
                },
        } => coset(*q, *e, *v, *max_m, *budget, *precision),
        Command::Lie { command } => lie(command),
    }
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::General => "general",
        Family::Quadratic => "quadratic",
    }
}

/// Checks that `f` is monic, irreducible and of degree at least 2.
fn require_field(f: &IntPoly) -> CliResult<()> {
    match f.degree() {
        Some(d) if d >= 2 => {}
        _ => {
            return Err(CliError(format!(
                "need a polynomial of degree at least 2, got {f}"
            )))
        }
    }
    if !f.is_monic() {
        return Err(CliError(format!("polynomial must be monic: {f}")));
    }
    certify_irreducible(f)?;
    Ok(())
}

fn decomposition(t: &PolyPrime, seed: u64) -> CliResult<DecompType> {
    require_field(&t.poly.poly)?;
    Ok(decomposition_type_seeded(&t.poly.poly, t.p, seed)?)
}

/// Symmetry predicted by a closed form, when one is known.
pub fn expected_symmetry(d: &DecompType) -> Option<Symmetry> {
    let n = d.degree() as i64;
    if n == 2 {
        let sf: i64 = d.f().iter().map(|&f| f as i64).sum();
        return Some(Symmetry {
            sign: 1,
            a: 9 * sf,
            b: 4 * sf,
        });
    }
    if d.is_unramified() {
        let sign = if d.r() % 2 == 1 { 1 } else { -1 };
        return Some(Symmetry {
            sign,
            a: 9 * n,
            b: 2 * n + 4,
        });
    }
    None
}

/// Parses `n=<n> e=<e1,..> f=<f1,..>`; `e` defaults to all ones.
pub fn parse_type_spec(parts: &[String]) -> CliResult<DecompType> {
    let mut n = None;
    let mut e = None;
    let mut f = None;
    let list = |v: &str| -> CliResult<Vec<u32>> {
        v.trim_matches(|c| c == '(' || c == ')')
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| CliError(format!("bad entry {s:?} in {v:?}")))
            })
            .collect()
    };
    for part in parts {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| CliError(format!("expected key=value, got {part:?}")))?;
        match key.trim() {
            "n" => {
                n = Some(
                    val.trim()
                        .parse::<u32>()
                        .map_err(|_| CliError(format!("bad n {val:?}")))?,
                )
            }
            "e" => e = Some(list(val)?),
            "f" => f = Some(list(val)?),
            other => {
                return Err(CliError(format!(
                    "unknown key {other:?}; expected n, e or f"
                )))
            }
        }
    }
    let f = f.ok_or_else(|| CliError("missing f=<...>".into()))?;
    let e = e.unwrap_or_else(|| vec![1; f.len()]);
    let d = DecompType::new(e, f)?;
    if let Some(n) = n {
        if n != d.degree() {
            return Err(CliError(format!(
                "{d} has total degree {}, not n = {n}",
                d.degree()
            )));
        }
    }
    Ok(d)
}

fn funceq(a: &FuncEqArgs, seed: u64) -> CliResult<OutputDoc> {
    let (poly, p, d) = match (&a.ty, &a.poly, a.p) {
        (Some(parts), _, _) => (None, None, parse_type_spec(parts)?),
        (None, Some(poly), Some(p)) => {
            let t = PolyPrime {
                poly: poly.clone(),
                p,
            };
            (
                Some(poly.poly.to_string()),
                Some(p),
                decomposition(&t, seed)?,
            )
        }
        _ => return Err(CliError("give <poly> <p> or --type n=.. e=.. f=..".into())),
    };
    if d.degree() < 2 {
        return Err(CliError("degree must be at least 2".into()));
    }
    let lf = local_factor_any(d.degree() as usize, &d)?;
    let found = symmetry_check(&lf.value);
    let expected = expected_symmetry(&d);
    let agree = expected.map(|x| found == Some(x));
    Ok(OutputDoc::FuncEq(FuncEqDoc {
        poly,
        p,
        ty: TypeDoc::from(&d),
        symmetry: found.map(SymmetryDoc::from),
        expected: expected.map(SymmetryDoc::from),
        agree,
    }))
}

fn coeffs(t: &PolyPrime, max_k: usize, seed: u64) -> CliResult<OutputDoc> {
    let d = decomposition(t, seed)?;
    let n = d.degree() as usize;
    let series = dirichlet_coeffs(n, &d, t.p, max_k)?;
    let vsum = if n >= 3 {
        Some(vsum_coeffs(n, &d, t.p, max_k)?)
    } else {
        None
    };
    let pb = BigInt::from(t.p);
    let rows: Vec<CoeffRow> = series
        .iter()
        .enumerate()
        .map(|(k, s)| CoeffRow {
            k,
            index: pb.pow(k as u32).into(),
            series: s.clone().into(),
            vsum: vsum.as_ref().map(|v| v[k].clone().into()),
        })
        .collect();
    let agree = vsum.as_ref().map(|v| v == &series);
    Ok(OutputDoc::Coeffs(CoeffsDoc {
        poly: t.poly.poly.to_string(),
        p: t.p,
        ty: TypeDoc::from(&d),
        rows,
        agree,
    }))
}

fn coset(
    q: u64,
    e: u32,
    v: u32,
    max_m: Option<u32>,
    budget: u64,
    precision: Option<u32>,
) -> CliResult<OutputDoc> {
    let deepest = (e * v).max(max_m.unwrap_or(0));
    let n = precision.unwrap_or_else(|| LocalFieldSpec::default_precision(deepest));
    let field = LocalFieldSpec::from_q(q, e, n)?;
    let (count, method) = count_in_s(&field, v, budget)?;
    let formula = expected_count(q, e, v);
    let distinctness = match max_m {
        Some(m) => {
            let r = transversal_distinctness(&field, m, budget)?;
            Some(DistinctnessDoc {
                max_m: m,
                reps: r.reps,
                pairs_checked: r.pairs_checked,
                collisions: r.collisions.len(),
            })
        }
        None => None,
    };
    Ok(OutputDoc::Coset(CosetDoc {
        q,
        e,
        v,
        precision: n,
        agree: count == formula,
        count: count.into(),
        formula: formula.into(),
        method: match method {
            CountMethod::Exhaustive => "exhaustive",
            CountMethod::DigitTree => "digit-tree",
        }
        .into(),
        distinctness,
    }))
}

fn lie(cmd: &LieCommand) -> CliResult<OutputDoc> {
    match cmd {
        LieCommand::Check { poly, ell } => {
            let f = &poly.poly;
            if *ell == 0 {
                return Err(CliError("--ell must be positive".into()));
            }
            require_field(f)?;
            let l = build_lattice(f, *ell)?;
            let r = check_lie_axioms(&l);
            Ok(OutputDoc::LieCheck(LieCheckDoc {
                poly: f.to_string(),
                ell: *ell,
                rank: l.rank(),
                antisymmetry_violations: r.antisymmetry.len(),
                jacobi_violations: r.jacobi.len(),
                center_dim: r.center_dim,
                center_is_z: r.center_is_z,
                passed: r.all_pass(),
            }))
        }
        LieCommand::Sigma { poly } => {
            let f = &poly.poly;
            if !f.is_monic() || f.degree().unwrap_or(0) < 1 {
                return Err(CliError(format!(
                    "need a monic polynomial of positive degree, got {f}"
                )));
            }
            let s = solve_sigma(f)?;
            let c = companion(f)?;
            let det = s.det();
            let symmetric = s.is_symmetric();
            let unimodular = s.is_integral() && det.is_integer() && det.to_integer().abs().is_one();
            let intertwines = &s * &c == &c.transpose() * &s;
            let sigma = (0..s.rows())
                .map(|i| {
                    s.row(i)
                        .iter()
                        .map(|x| {
                            Int(if x.is_integer() {
                                x.to_integer()
                            } else {
                                BigInt::zero()
                            })
                        })
                        .collect()
                })
                .collect();
            Ok(OutputDoc::LieSigma(LieSigmaDoc {
                poly: f.to_string(),
                sigma,
                symmetric,
                unimodular,
                intertwines,
                passed: symmetric && unimodular && intertwines,
            }))
        }
        LieCommand::Iso { poly } => {
            let f = &poly.poly;
            if f.degree() != Some(2) {
                return Err(CliError(format!("need a quadratic polynomial, got {f}")));
            }
            require_field(f)?;
            let passed = verify_quadratic_iso(f)?;
            Ok(OutputDoc::LieIso(LieIsoDoc {
                poly: f.to_string(),
                passed,
            }))
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code with the text written to stdout and stderr.
pub fn execute<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                (code, String::new(), text)
            } else {
                (code, text, String::new())
            };
        }
    };
    match run(&cli) {
        Ok(doc) => {
            let out = if cli.json {
                doc.to_json() + "\n"
            } else {
                doc.to_text()
            };
            let code = if doc.is_failure() {
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            };
            (code, out, String::new())
        }
        Err(e) => (EXIT_USAGE, String::new(), format!("error: {e}\n")),
    }
}
