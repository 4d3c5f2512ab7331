//! `hypercert`: exact checks on hyperplane families and group tuples.
//!
//! Every command reads one JSON payload (from `--input`, `--payload`, or
//! stdin) and writes one result. Exit status: 0 for any computed answer,
//! 2 for invalid input, 3 when a size guard refuses the job.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hypercert::engine::{
    genericity_check, lemma41_forward_check, pairing_identity_check, render_text, Enumeration, FujimotoShape,
    GenericityOptions, Mode,
};
use hypercert::geometry::general_position;
use hypercert::json::{
    from_json, to_json, BorelInput, ClassifyInput, ErrorOutput, FamilyInput, Lemma41Input, PairingInput,
    PropertyInput, PropertyOutput, RankOutput, TupleInput,
};
use hypercert::lattice::{classify, collapse_conclusion, has_property, tuple_rank, GroupTuple};
use hypercert::laurent::borel_check;
use hypercert::Error;

#[derive(Parser, Debug)]
#[command(name = "hypercert", version, about = "Exact genericity certificates for 2n+2 hyperplanes in P^n")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = ModeArg::Paper, global = true)]
    mode: ModeArg,

    /// Enumerate every ordering of the hyperplanes instead of the reduced set.
    #[arg(long, global = true)]
    reference_enumeration: bool,

    /// Largest n accepted by check-genericity.
    #[arg(long, default_value_t = 4, global = true)]
    max_n: usize,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Payload file, or `-` for stdin.
    #[arg(long, global = true, conflicts_with = "payload")]
    input: Option<String>,

    /// Inline JSON payload.
    #[arg(long, global = true)]
    payload: Option<String>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Certify whether 2n+2 hyperplanes in P^n are generic
    CheckGenericity,
    /// Check that every n+1 of the hyperplanes are independent
    CheckGeneralPosition,
    /// Rank of the subgroup generated by an integer tuple
    TupleRank,
    /// Test property (P_{r,s}) and the collapse conclusion on a tuple
    CheckProperty,
    /// Normal form of a tuple with property (P_{q,s}) and rank s-1
    Classify,
    /// Evaluate a Fujimoto determinant and check when it vanishes
    Lemma41,
    /// Decide whether a sum of monomial units cancels
    Borel,
    /// Check the pairing determinant against its unit-vector values
    PairingIdentity,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum ModeArg {
    Paper,
    Symbolic,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

fn read_payload(cli: &Cli) -> Result<String, Error> {
    let io_err = |e: std::io::Error| Error::Parse { literal: cli.input.clone().unwrap_or_default(), reason: e.to_string() };
    if let Some(p) = &cli.payload {
        return Ok(p.clone());
    }
    let mut buf = String::new();
    match cli.input.as_deref() {
        None | Some("-") => {
            std::io::stdin().read_to_string(&mut buf).map_err(io_err)?;
        }
        Some(path) => buf = std::fs::read_to_string(path).map_err(io_err)?,
    }
    Ok(buf)
}

fn kv(lines: &[(&str, String)]) -> String {
    lines.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

fn run(cli: &Cli) -> Result<String, Error> {
    let text = read_payload(cli)?;
    let json = cli.format == Format::Json;
    match cli.command {
        Command::CheckGenericity => {
            let f = from_json::<FamilyInput>(&text)?.to_family()?;
            if f.n() > cli.max_n {
                return Err(Error::SizeLimit(format!("n = {} exceeds --max-n {}", f.n(), cli.max_n)));
            }
            let opts = GenericityOptions {
                mode: match cli.mode {
                    ModeArg::Paper => Mode::Paper,
                    ModeArg::Symbolic => Mode::Symbolic,
                },
                enumeration: if cli.reference_enumeration { Enumeration::Reference } else { Enumeration::Reduced },
            };
            let cert = genericity_check(&f, &opts)?;
            if json {
                Ok(to_json(&cert))
            } else {
                render_text(&cert, &f)
            }
        }
        Command::CheckGeneralPosition => {
            let f = from_json::<FamilyInput>(&text)?.to_family()?;
            let gp = general_position(&f)?;
            if json {
                return Ok(to_json(&gp));
            }
            let subset = gp.violating_subset.map_or("none".into(), |v| format!("{v:?}"));
            Ok(kv(&[("general position", gp.ok.to_string()), ("violating subset", subset)]))
        }
        Command::TupleRank => {
            let a = from_json::<TupleInput>(&text)?.to_tuple()?;
            let out = RankOutput { rank: tuple_rank(&a) };
            Ok(if json { to_json(&out) } else { kv(&[("rank", out.rank.to_string())]) })
        }
        Command::CheckProperty => {
            let input: PropertyInput = from_json(&text)?;
            let a = GroupTuple::from_rows(input.tuple)?;
            let out = PropertyOutput {
                property: has_property(&a, input.r, input.s)?,
                collapse: collapse_conclusion(&a, input.r, input.s)?,
            };
            Ok(if json {
                to_json(&out)
            } else {
                kv(&[("property", out.property.to_string()), ("collapse", out.collapse.to_string())])
            })
        }
        Command::Classify => {
            let input: ClassifyInput = from_json(&text)?;
            let c = classify(&GroupTuple::from_rows(input.tuple)?, input.s)?;
            if json {
                return Ok(to_json(&c));
            }
            Ok(kv(&[
                ("kind", format!("{:?}", c.kind)),
                ("k", c.k.to_string()),
                ("breakpoints", format!("{:?}", c.breakpoints)),
                ("basis", format!("{:?}", c.basis)),
                ("reindexing", format!("{:?}", c.reindexing)),
            ]))
        }
        Command::Lemma41 => {
            let input: Lemma41Input = from_json(&text)?;
            if input.k.is_some_and(|k| k != input.breakpoints.len()) {
                return Err(Error::Shape(format!("k = {:?} but {} breakpoints", input.k, input.breakpoints.len())));
            }
            let shape = FujimotoShape::new(input.t, input.breakpoints, input.constants)?;
            let r = lemma41_forward_check(&shape, &input.a)?;
            Ok(if json {
                to_json(&r)
            } else {
                kv(&[
                    ("vanishes", r.vanishes.to_string()),
                    ("case", r.case.map_or("none".into(), |c| format!("{c:?}"))),
                    ("consistent", r.consistent.to_string()),
                ])
            })
        }
        Command::Borel => {
            let input: BorelInput = from_json(&text)?;
            let r = borel_check(&input.units()?)?;
            if json {
                return Ok(to_json(&r));
            }
            let mut out = kv(&[("is_zero", r.is_zero.to_string())]);
            for g in &r.groups {
                out.push_str(&format!("group {:?}: terms {:?}, constant sum {}\n", g.exponents, g.indices, g.constant_sum));
            }
            Ok(out)
        }
        Command::PairingIdentity => {
            let input: PairingInput = from_json(&text)?;
            let r = pairing_identity_check(input.n, &input.a, &input.c)?;
            Ok(if json {
                to_json(&r)
            } else {
                kv(&[("det_vanishes", r.det_vanishes.to_string()), ("forced_c", r.forced_c.to_string())])
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            print!("{}", to_json(&ErrorOutput::from_error(&e)));
            match e {
                Error::SizeLimit(_) => ExitCode::from(3),
                // a lemma check failed on valid input; not an input error
                Error::Counterexample(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
