//! Command-line front end: file I/O, certificate emission, and batch
//! verification on top of the library.
//!
//! Exit codes: 0 for success or a passing verdict, 2 for a definitive
//! negative verdict (failed check, nontrivial product, no order exists),
//! 1 for any error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use golod::corpus::{random_complex, random_ideal, rng_from_seed, IdealParams};
use golod::field::{FieldSpec, PrimeField, Rationals};
use golod::golod::{
    build_product_order, check_strong_gcd, golod_bound_series, parse_certificate,
    print_certificate, search_order, taylor_betti, verify_certificate, BettiTable, OrderSearch,
    SearchMode, DEFAULT_EXHAUSTIVE_CAP,
};
use golod::ideal::{
    parse_ideal, print_ideal, probe_symbolic_factorization, MonomialIdeal,
};
use golod::moment_angle::{
    betti_table_json, check_triviality, hochster_betti, triviality_json, verify_join_dual_pipeline,
    Verdict,
};
use golod::monomial::{MonomialOrderSpec, OrderKind};
use golod::simplicial::{
    complex_from_squarefree_ideal, join, parse_complex, print_complex, SimplicialComplex,
};

#[derive(Parser)]
#[command(name = "golod", version, about = "Strong gcd-condition certificates and moment-angle cohomology for monomial ideals")]
struct Cli {
    /// Coefficient field: `q` or a prime (default from GOLOD_FIELD, else q)
    #[arg(long, global = true)]
    field: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderFlag {
    Lex,
    Grlex,
}

#[derive(Clone, Copy, ValueEnum)]
enum BettiEngine {
    Taylor,
    Hochster,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Product of two ideals
    Product { a: PathBuf, b: PathBuf },
    /// k-th ordinary power of an ideal
    Power {
        ideal: PathBuf,
        #[arg(short)]
        k: u32,
    },
    /// Intersection of two ideals
    Intersect { a: PathBuf, b: PathBuf },
    /// k-th symbolic power of a squarefree ideal
    Sympow {
        ideal: PathBuf,
        #[arg(short)]
        k: u32,
    },
    /// Polarization of an ideal
    Polarize { ideal: PathBuf },
    /// Check the strong gcd-condition and print a certificate
    CheckGcd {
        ideal: PathBuf,
        /// `product`, `search`, or a certificate file to re-verify
        #[arg(long, default_value = "product")]
        order: String,
        /// Monomial order breaking degree ties in the product construction
        #[arg(long, value_enum, default_value = "lex")]
        monomial_order: OrderFlag,
        /// Cap on |G(I)| for exhaustive search
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        cap: usize,
    },
    /// Betti numbers of S/I
    Betti {
        ideal: PathBuf,
        #[arg(long, value_enum, default_value = "taylor")]
        engine: BettiEngine,
    },
    /// Golod bound series coefficients through t^d
    Series {
        ideal: PathBuf,
        #[arg(short)]
        d: usize,
    },
    /// Alexander dual of a complex
    Dual { complex: PathBuf },
    /// Join of two complexes (second factor's vertices shifted)
    Join { a: PathBuf, b: PathBuf },
    /// Stanley-Reisner ideal of a complex
    SrIdeal { complex: PathBuf },
    /// Complex of a squarefree ideal
    SrComplex { ideal: PathBuf },
    /// Triviality of the moment-angle cohomology multiplication
    MaTrivial { complex: PathBuf },
    /// Full join-dual pipeline for two complexes
    JoinDualPipeline { a: PathBuf, b: PathBuf },
    /// Probe the symbolic-power factorization I^(k) = I^(c) I^(k-c)
    ProbeSympow {
        ideal: PathBuf,
        #[arg(long, default_value_t = 6)]
        kmax: u32,
    },
    /// Emit a seeded random corpus of ideals
    GenCorpus {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        width: usize,
        #[arg(long, default_value_t = 6)]
        max_generators: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        #[arg(long)]
        squarefree: bool,
        /// Emit complexes instead of ideals
        #[arg(long)]
        complexes: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn field_spec(cli_field: &Option<String>) -> anyhow::Result<FieldSpec> {
    let raw = match cli_field {
        Some(f) => f.clone(),
        None => std::env::var("GOLOD_FIELD").unwrap_or_else(|_| "q".to_string()),
    };
    Ok(FieldSpec::parse(&raw)?)
}

fn load_ideal(path: &PathBuf) -> anyhow::Result<MonomialIdeal> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_ideal(&text)?)
}

fn load_complex(path: &PathBuf) -> anyhow::Result<SimplicialComplex> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_complex(&text)?)
}

const PASS: ExitCode = ExitCode::SUCCESS;

fn negative() -> ExitCode {
    ExitCode::from(2)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let field = field_spec(&cli.field)?;
    match cli.command {
        Command::Product { a, b } => {
            let product = load_ideal(&a)?.product(&load_ideal(&b)?)?;
            print!("{}", print_ideal(&product));
            Ok(PASS)
        }
        Command::Power { ideal, k } => {
            print!("{}", print_ideal(&load_ideal(&ideal)?.power(k)?));
            Ok(PASS)
        }
        Command::Intersect { a, b } => {
            let cap = load_ideal(&a)?.intersection(&load_ideal(&b)?)?;
            print!("{}", print_ideal(&cap));
            Ok(PASS)
        }
        Command::Sympow { ideal, k } => {
            print!("{}", print_ideal(&load_ideal(&ideal)?.symbolic_power(k)?));
            Ok(PASS)
        }
        Command::Polarize { ideal } => {
            print!("{}", print_ideal(&load_ideal(&ideal)?.polarize()?));
            Ok(PASS)
        }
        Command::CheckGcd {
            ideal,
            order,
            monomial_order,
            cap,
        } => {
            match order.as_str() {
                "product" => {
                    let i = load_ideal(&ideal)?;
                    let kind = match monomial_order {
                        OrderFlag::Lex => OrderKind::Lexicographic,
                        OrderFlag::Grlex => OrderKind::GradedLexicographic,
                    };
                    let spec = MonomialOrderSpec {
                        kind,
                        precedence: (1..=i.width()).collect(),
                    };
                    let gen_order = build_product_order(&i, &spec);
                    let report = check_strong_gcd(&i, &gen_order)?;
                    if report.passed {
                        print!("{}", print_certificate(&i, &gen_order, &report));
                        Ok(PASS)
                    } else {
                        let (u, v) = report.failing_pair.expect("failed check has a pair");
                        println!("fail: pair ({u}, {v}) has no witness");
                        Ok(negative())
                    }
                }
                "search" => {
                    let i = load_ideal(&ideal)?;
                    match search_order(&i, SearchMode::Exhaustive, cap)? {
                        OrderSearch::Found(gen_order) => {
                            let report = check_strong_gcd(&i, &gen_order)?;
                            print!("{}", print_certificate(&i, &gen_order, &report));
                            Ok(PASS)
                        }
                        OrderSearch::NoneExhaustive => {
                            println!("no order exists (exhaustive)");
                            Ok(negative())
                        }
                        OrderSearch::Unknown => unreachable!("exhaustive search is definitive"),
                    }
                }
                path => {
                    // re-verify an existing certificate file; the ideal
                    // argument must match the certified ideal
                    let text = fs::read_to_string(path)
                        .with_context(|| format!("reading certificate {path}"))?;
                    let cert = parse_certificate(&text)?;
                    let i = load_ideal(&ideal)?;
                    if cert.ideal != i {
                        bail!("certificate is for a different ideal");
                    }
                    if verify_certificate(&cert)? {
                        println!("certificate verifies");
                        Ok(PASS)
                    } else {
                        println!("certificate INVALID");
                        Ok(negative())
                    }
                }
            }
        }
        Command::Betti { ideal, engine } => {
            let i = load_ideal(&ideal)?;
            let compute = |which: BettiEngine| -> anyhow::Result<BettiTable> {
                Ok(match (which, field) {
                    (BettiEngine::Taylor, FieldSpec::Rationals) => taylor_betti(&i, &Rationals)?,
                    (BettiEngine::Taylor, FieldSpec::Prime(p)) => {
                        taylor_betti(&i, &PrimeField::new(p)?)?
                    }
                    (BettiEngine::Hochster, FieldSpec::Rationals) => {
                        hochster_betti(&i, &Rationals)?
                    }
                    (BettiEngine::Hochster, FieldSpec::Prime(p)) => {
                        hochster_betti(&i, &PrimeField::new(p)?)?
                    }
                    (BettiEngine::Both, _) => unreachable!(),
                })
            };
            match engine {
                BettiEngine::Both => {
                    let t = compute(BettiEngine::Taylor)?;
                    let h = compute(BettiEngine::Hochster)?;
                    if t == h {
                        println!("{}", serde_json::to_string_pretty(&betti_table_json(&t))?);
                        println!("engines agree");
                        Ok(PASS)
                    } else {
                        println!("ENGINES DISAGREE");
                        println!("taylor:\n{t}");
                        println!("hochster:\n{h}");
                        Ok(negative())
                    }
                }
                which => {
                    let table = compute(which)?;
                    println!("{}", serde_json::to_string_pretty(&betti_table_json(&table))?);
                    Ok(PASS)
                }
            }
        }
        Command::Series { ideal, d } => {
            let i = load_ideal(&ideal)?;
            let betti = match field {
                FieldSpec::Rationals => taylor_betti(&i, &Rationals)?,
                FieldSpec::Prime(p) => taylor_betti(&i, &PrimeField::new(p)?)?,
            };
            let series = golod_bound_series(&betti, i.width(), d)?;
            println!("{series}");
            Ok(PASS)
        }
        Command::Dual { complex } => {
            print!("{}", print_complex(&load_complex(&complex)?.alexander_dual()?));
            Ok(PASS)
        }
        Command::Join { a, b } => {
            let joined = join(&load_complex(&a)?, &load_complex(&b)?)?;
            print!("{}", print_complex(&joined.complex));
            Ok(PASS)
        }
        Command::SrIdeal { complex } => {
            print!("{}", print_ideal(&load_complex(&complex)?.stanley_reisner_ideal()?));
            Ok(PASS)
        }
        Command::SrComplex { ideal } => {
            print!("{}", print_complex(&complex_from_squarefree_ideal(&load_ideal(&ideal)?)?));
            Ok(PASS)
        }
        Command::MaTrivial { complex } => {
            let delta = load_complex(&complex)?;
            let report = match field {
                FieldSpec::Rationals => check_triviality(&delta, &Rationals)?,
                FieldSpec::Prime(p) => check_triviality(&delta, &PrimeField::new(p)?)?,
            };
            println!("{}", serde_json::to_string_pretty(&triviality_json(&report))?);
            Ok(if report.verdict == Verdict::Trivial {
                PASS
            } else {
                negative()
            })
        }
        Command::JoinDualPipeline { a, b } => {
            let (da, db) = (load_complex(&a)?, load_complex(&b)?);
            let report = match field {
                FieldSpec::Rationals => verify_join_dual_pipeline(&da, &db, &Rationals)?,
                FieldSpec::Prime(p) => verify_join_dual_pipeline(&da, &db, &PrimeField::new(p)?)?,
            };
            println!("gamma:");
            print!("{}", print_complex(&report.gamma));
            println!(
                "product identity: {}",
                if report.product_identity_holds { "holds" } else { "FAILS" }
            );
            println!("{}", serde_json::to_string_pretty(&triviality_json(&report.triviality))?);
            let ok = report.product_identity_holds
                && report.triviality.verdict == Verdict::Trivial;
            Ok(if ok { PASS } else { negative() })
        }
        Command::ProbeSympow { ideal, kmax } => {
            let report = probe_symbolic_factorization(&load_ideal(&ideal)?, kmax)?;
            print!("{report}");
            Ok(PASS)
        }
        Command::GenCorpus {
            seed,
            count,
            width,
            max_generators,
            max_degree,
            squarefree,
            complexes,
        } => {
            let mut rng = rng_from_seed(seed);
            if complexes {
                for i in 0..count {
                    println!("# complex {i}");
                    print!("{}", print_complex(&random_complex(&mut rng, width)));
                }
            } else {
                let params = IdealParams {
                    width,
                    max_generators,
                    max_degree,
                    squarefree,
                };
                for i in 0..count {
                    println!("# ideal {i}");
                    print!("{}", print_ideal(&random_ideal(&mut rng, &params)));
                }
            }
            Ok(PASS)
        }
    }
}
