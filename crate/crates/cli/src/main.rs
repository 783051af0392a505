use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use z6alg::clifford::{similarity_check, verify_clifford};
use z6alg::covariance::{
    induced_s, lorentz_component_equations, minkowski_metric, preserves_metric, rho_covariance_check,
    spin_to_lorentz,
};
use z6alg::dforms::{d3_check, PolyFn};
use z6alg::hilbert::hilbert_report;
use z6alg::oracle::{ideal_contains, nonhomogeneous_collapse_check, quotient_basis_with, OracleConfig};
use z6alg::rewrite::{has_rewriting_system, omega_scan, six_sum};
use z6alg::sampling::{self, DEFAULT_SEED};
use z6alg::{make_presentation, normalize, AlgebraType, Matrix, PhaseTable, Poly, PresentationOptions, Word};

#[derive(Parser)]
#[command(name = "z6alg", version, about = "Exact checks for Z2-, Z3- and Z6-graded algebras")]
struct Cli {
    /// Seed for randomized trials.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of randomized trials (command-specific default).
    #[arg(long, global = true)]
    trials: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct AlgebraArgs {
    /// s, s-bar, s1, s0, lambda0, lambda1, lambda, lambda-bar, combined, combined-nonhom, grassmann
    #[arg(long)]
    algebra: AlgebraType,
    /// Number of theta-type generators.
    #[arg(short = 'N', default_value_t = 2)]
    theta_count: usize,
    /// Number of xi-type generators.
    #[arg(short = 'n', default_value_t = 0)]
    xi_count: usize,
    /// Use θθ̄ = −j θ̄θ instead of θθ̄ = j θ̄θ.
    #[arg(long)]
    invariance_phase: bool,
    /// Leave out the θ̄ and ξ̄ generators of the combined algebras.
    #[arg(long)]
    no_conjugates: bool,
}

impl AlgebraArgs {
    fn presentation(&self) -> z6alg::Result<z6alg::Presentation> {
        let opts = PresentationOptions {
            phases: if self.invariance_phase {
                PhaseTable::invariance_variant()
            } else {
                PhaseTable::default()
            },
            include_conjugates: !self.no_conjugates,
            ..Default::default()
        };
        make_presentation(self.algebra, self.theta_count, self.xi_count, opts)
    }

    fn echo(&self) -> Value {
        json!({
            "algebra": self.algebra,
            "N": self.theta_count,
            "n": self.xi_count,
            "invariance_phase": self.invariance_phase,
            "conjugates": !self.no_conjugates,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a word or polynomial.
    Normalize {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Whitespace-separated generator tokens, or a sum of `coeff*word` terms.
        #[arg(long)]
        word: String,
    },
    /// Quotient basis in one degree.
    Basis {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = z6alg::oracle::DEFAULT_DEGREE_CAP)]
        cap: usize,
    },
    /// Per-degree dimensions against the closed form.
    Hilbert {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        dmax: usize,
        #[arg(long, default_value_t = z6alg::oracle::DEFAULT_DEGREE_CAP)]
        cap: usize,
    },
    /// Structural checks.
    Check {
        #[command(subcommand)]
        which: CheckCommand,
    },
    /// Ternary Clifford identities and random similarity transforms.
    CliffordVerify,
    /// Differential forms.
    Dforms {
        #[command(subcommand)]
        which: DformsCommand,
    },
    /// Induced S, Lorentz image and metric check for a 2x2 matrix.
    Lorentz {
        /// Matrix as `a,b;c,d` in scalar syntax.
        #[arg(long)]
        u: String,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Ideal inclusions along both classification diagrams.
    Homomorphisms,
    /// Which powers of ζ₁₂ make the θξθ six-sum vanish.
    OmegaScan,
    /// Vanishing of θξ under the non-homogeneous cubic relations.
    Nonhomogeneous,
    /// Six-permutation sums over generator triples of the combined algebra.
    Sixsum,
}

#[derive(Subcommand)]
enum DformsCommand {
    /// d³f = 0 on random polynomials (or on `--poly`).
    D3Check {
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 4)]
        degree: u32,
        #[arg(long)]
        poly: Option<String>,
    },
}

struct Report {
    command: &'static str,
    inputs: Value,
    passed: bool,
    result: Value,
}

enum Failure {
    Usage(String),
}

impl From<z6alg::Error> for Failure {
    fn from(e: z6alg::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn poly_terms(p: &Poly) -> Value {
    Value::Array(
        p.terms()
            .map(|(w, c)| json!({"coeff": c.to_string(), "word": w.to_string()}))
            .collect(),
    )
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Normalize { alg, word } => {
            let pres = alg.presentation()?;
            let p: Poly = word.parse()?;
            let (method, nf) = if has_rewriting_system(&pres) {
                ("rewrite", normalize(&p, &pres)?)
            } else {
                let degree = p.max_degree().unwrap_or(0);
                let slice = quotient_basis_with(&pres, degree, &OracleConfig::default())?;
                ("oracle", slice.reduce(&p)?)
            };
            let mut inputs = alg.echo();
            inputs["word"] = json!(word);
            Ok(Report {
                command: "normalize",
                inputs,
                passed: true,
                result: json!({"method": method, "normal_form": nf.to_string(), "terms": poly_terms(&nf)}),
            })
        }
        Command::Basis { alg, degree, cap } => {
            let pres = alg.presentation()?;
            let b = quotient_basis_with(&pres, *degree, &OracleConfig { degree_cap: *cap })?;
            let mut inputs = alg.echo();
            inputs["degree"] = json!(degree);
            Ok(Report {
                command: "basis",
                inputs,
                passed: true,
                result: to_value(&b),
            })
        }
        Command::Hilbert { alg, dmax, cap } => {
            let pres = alg.presentation()?;
            let r = hilbert_report(&pres, *dmax, &OracleConfig { degree_cap: *cap })?;
            let mut inputs = alg.echo();
            inputs["dmax"] = json!(dmax);
            Ok(Report {
                command: "hilbert",
                inputs,
                passed: r.matches != Some(false),
                result: to_value(&r),
            })
        }
        Command::Check { which } => run_check(which),
        Command::CliffordVerify => {
            let trials = cli.trials.unwrap_or(20);
            let report = verify_clifford();
            let mut rng = sampling::rng(cli.seed);
            let mut failures = Vec::new();
            for _ in 0..trials {
                let p = sampling::invertible_int_matrix(&mut rng, 3, 3);
                if !similarity_check(&p)?.passed {
                    failures.push(p.to_string());
                }
            }
            let passed = report.passed && failures.is_empty();
            Ok(Report {
                command: "clifford-verify",
                inputs: json!({"seed": cli.seed, "trials": trials}),
                passed,
                result: json!({
                    "identities": to_value(&report),
                    "similarity": {"trials": trials, "failures": failures},
                }),
            })
        }
        Command::Dforms {
            which: DformsCommand::D3Check { vars, degree, poly },
        } => {
            if *vars == 0 {
                return Err(Failure::Usage("--vars must be at least 1".into()));
            }
            let polys: Vec<PolyFn> = match poly {
                Some(s) => vec![s.parse()?],
                None => {
                    let mut rng = sampling::rng(cli.seed);
                    (0..cli.trials.unwrap_or(50))
                        .map(|_| sampling::polyfn(&mut rng, *vars, *degree, 5))
                        .collect()
                }
            };
            let failures: Vec<String> = polys.iter().filter(|f| !d3_check(f)).map(PolyFn::to_string).collect();
            Ok(Report {
                command: "dforms d3-check",
                inputs: json!({"vars": vars, "degree": degree, "poly": poly, "seed": cli.seed, "trials": polys.len()}),
                passed: failures.is_empty(),
                result: json!({"checked": polys.len(), "failures": failures}),
            })
        }
        Command::Lorentz { u } => {
            let u: Matrix = u.parse()?;
            if u.rows() != 2 || u.cols() != 2 {
                return Err(Failure::Usage("--u must be a 2x2 matrix".into()));
            }
            let det_u = u.det();
            let s = induced_s(&u)?;
            let det_s = s.det();
            let rho = rho_covariance_check(&u)?;
            let lambda = spin_to_lorentz(&u)?;
            let det_lambda = lambda.det();
            let g = minkowski_metric();
            let metric_preserved = preserves_metric(&lambda, &g);
            let unimodular = (&det_u * &det_u.conj()).is_one();
            let components = lorentz_component_equations(&u, &lambda);
            let checks = json!({
                "det_s_is_cube_of_det_u": det_s == det_u.pow(3)?,
                "rho_covariant": rho.rho_covariant,
                "lambda_real": lambda.is_real(),
                "det_lambda_formula": det_lambda == (&det_u * &det_u.conj()).pow(2)?,
                "component_equations": components.iter().all(|e| e.holds),
                "metric_preserved_iff_unimodular": metric_preserved == unimodular,
            });
            let passed = checks.as_object().expect("object").values().all(|v| v == &json!(true));
            Ok(Report {
                command: "lorentz",
                inputs: json!({"u": u.to_string()}),
                passed,
                result: json!({
                    "S": s,
                    "detS": det_s,
                    "detU": det_u,
                    "epsilon_preserved": rho.epsilon_preserved,
                    "Lambda": lambda,
                    "detLambda": det_lambda,
                    "metric": g,
                    "metric_preserved": metric_preserved,
                    "component_equations": components,
                    "checks": checks,
                }),
            })
        }
    }
}

fn run_check(which: &CheckCommand) -> Result<Report, Failure> {
    match which {
        CheckCommand::Homomorphisms => {
            use AlgebraType::*;
            // (container, contained, N, expected): `container ⊇ contained`
            let cases = [
                (S1, S, 2, true),
                (S0, S1, 2, true),
                (S, S1, 2, false),
                (S1, S0, 3, false),
                (Lambda1, Lambda0, 2, true),
                (Lambda, Lambda1, 2, true),
                (LambdaBar, Lambda1, 2, true),
                (Lambda1, Lambda, 2, false),
                (Lambda1, LambdaBar, 2, false),
                (Lambda0, Lambda1, 3, false),
            ];
            let mut rows = Vec::new();
            let mut passed = true;
            for (container, contained, n, expected) in cases {
                let a = make_presentation(container, n, 0, Default::default())?;
                let b = make_presentation(contained, n, 0, Default::default())?;
                let observed = ideal_contains(&a, &b, 3)?;
                passed &= observed == expected;
                rows.push(json!({
                    "container": container,
                    "contained": contained,
                    "N": n,
                    "degree": 3,
                    "expected": expected,
                    "observed": observed,
                }));
            }
            Ok(Report {
                command: "check homomorphisms",
                inputs: json!({}),
                passed,
                result: json!({"inclusions": rows}),
            })
        }
        CheckCommand::OmegaScan => {
            let rows = omega_scan()?;
            let pass_set: Vec<String> = rows
                .iter()
                .filter(|r| r.theta_xi_theta_vanishes)
                .map(|r| r.omega.to_string())
                .collect();
            let expected: BTreeSet<usize> = [4, 8].into();
            let observed: BTreeSet<usize> = rows
                .iter()
                .filter(|r| r.theta_xi_theta_vanishes)
                .map(|r| r.zeta_exponent)
                .collect();
            let passed = observed == expected && rows.iter().all(|r| r.xi_theta_xi_vanishes);
            Ok(Report {
                command: "check omega-scan",
                inputs: json!({}),
                passed,
                result: json!({"rows": to_value(&rows), "pass_set": pass_set}),
            })
        }
        CheckCommand::Nonhomogeneous => {
            let pres = make_presentation(AlgebraType::CombinedZ6NonHomogeneous, 2, 2, Default::default())?;
            let r = nonhomogeneous_collapse_check(&pres)?;
            Ok(Report {
                command: "check nonhomogeneous",
                inputs: json!({"N": 2, "n": 2}),
                passed: r.collapsed,
                result: to_value(&r),
            })
        }
        CheckCommand::Sixsum => {
            let pres = make_presentation(AlgebraType::CombinedZ6, 2, 2, Default::default())?;
            let gens = pres.alphabet().to_vec();
            let mut two_kind = (0usize, 0usize);
            let mut three_kind = (0usize, 0usize);
            let mut failing_two_kind = Vec::new();
            let mut three_kind_examples = Vec::new();
            for (ia, &a) in gens.iter().enumerate() {
                for (ib, &b) in gens.iter().enumerate().skip(ia) {
                    for &c in gens.iter().skip(ib) {
                        let kinds: BTreeSet<_> = [a.kind, b.kind, c.kind].into();
                        let s = six_sum(&Word::from(a), &Word::from(b), &Word::from(c), &pres)?;
                        let label = format!("{a} {b} {c}");
                        if kinds.len() <= 2 {
                            two_kind.0 += 1;
                            if s.is_zero() {
                                two_kind.1 += 1;
                            } else {
                                failing_two_kind.push(label);
                            }
                        } else {
                            three_kind.0 += 1;
                            if s.is_zero() {
                                three_kind.1 += 1;
                            } else if three_kind_examples.len() < 4 {
                                three_kind_examples.push(json!({"triple": label, "six_sum": s.to_string()}));
                            }
                        }
                    }
                }
            }
            Ok(Report {
                command: "check sixsum",
                inputs: json!({"algebra": "combined", "N": 2, "n": 2}),
                passed: failing_two_kind.is_empty(),
                result: json!({
                    "at_most_two_kinds": {"triples": two_kind.0, "vanishing": two_kind.1, "failing": failing_two_kind},
                    "three_kinds": {"triples": three_kind.0, "vanishing": three_kind.1, "nonvanishing_examples": three_kind_examples},
                }),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let out = json!({
                "command": report.command,
                "inputs": report.inputs,
                "passed": report.passed,
                "result": report.result,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("valid json"));
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
