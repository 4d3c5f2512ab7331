//! Enumerates every configuration whose P1/P2 determinant defines a
//! component of V and records the first exact zero. The whole enumeration is
//! always evaluated, so `configurations_checked` does not depend on where
//! (or whether) a zero turns up.

use std::fmt::Write as _;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fujimoto::{fujimoto_determinant, fujimoto_matrix, FujimotoShape};
use super::polys::{p1_matrix, p2_matrix, xi};
use crate::error::{Error, Result};
use crate::geometry::{general_position, normalize_block, HyperplaneFamily};
use crate::laurent::LaurentPoly;
use crate::ring::{det_by_minors, Matrix};
use crate::scalar::ExactScalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Evaluate P1 and P2 at η = 2.
    #[default]
    Paper,
    /// Test the full determinant in η for identical vanishing instead.
    Symbolic,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Enumeration {
    /// Unordered blocks, column-0 choice, special row, ξ-power bijection.
    #[default]
    Reduced,
    /// Every ordering σ of the 2n+2 hyperplanes.
    Reference,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenericityOptions {
    pub mode: Mode,
    pub enumeration: Enumeration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Generic,
    NonGeneric,
    NotGeneralPosition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Polynomial {
    P1,
    P2,
}

/// A configuration with vanishing determinant. All indices are 0-based
/// positions in the input family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub polynomial: Polynomial,
    /// Block hyperplanes in column order; `block[0]` is sent to coordinate 0.
    pub block: Vec<usize>,
    pub column0: usize,
    pub special_row: usize,
    /// Remaining hyperplanes in determinant row order.
    pub rows: Vec<usize>,
    /// The constant attached to each entry of `rows`.
    pub constants: Vec<ExactScalar>,
    /// The η = 2 determinant of the configuration.
    pub value: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericityCertificate {
    pub verdict: Verdict,
    pub n: usize,
    pub mode: Mode,
    pub enumeration: Enumeration,
    pub configurations_checked: u64,
    pub witness: Option<Witness>,
    pub violating_subset: Option<Vec<usize>>,
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// Number of configurations a Generic certificate has checked.
pub fn expected_configurations(n: usize, mode: Mode, enumeration: Enumeration) -> u64 {
    match enumeration {
        Enumeration::Reference => 2 * factorial(2 * n + 2),
        Enumeration::Reduced => {
            // at n = 1 the second family coincides with the first one
            let second = match (n, mode) {
                (1, _) => 0,
                (_, Mode::Paper) => 1,
                (_, Mode::Symbolic) => factorial(n),
            };
            let per_special = factorial(n) + second;
            binomial(2 * n + 2, n + 1) * (n as u64 + 1) * (n as u64 + 1) * per_special
        }
    }
}

/// One determinant to test: complement rows in order, with their constants.
struct Config {
    polynomial: Polynomial,
    rows: Vec<usize>,
    /// ξ-exponents for P1 rows; unused for P2.
    powers: Vec<u32>,
}

impl Config {
    fn p1(rows: Vec<usize>, powers: Vec<u32>) -> Self {
        Config { polynomial: Polynomial::P1, rows, powers }
    }

    fn p2(rows: Vec<usize>) -> Self {
        Config { polynomial: Polynomial::P2, rows, powers: vec![] }
    }

    fn special(&self) -> usize {
        match self.polynomial {
            Polynomial::P1 => self.rows[0],
            Polynomial::P2 => *self.rows.last().expect("non-empty"),
        }
    }

    fn constants(&self, n: usize) -> Vec<ExactScalar> {
        match self.polynomial {
            Polynomial::P1 => self.powers.iter().map(|&p| xi(n).pow(p as i64).expect("root of unity")).collect(),
            Polynomial::P2 => {
                let mut c = vec![ExactScalar::one(); n];
                c.push(ExactScalar::from_integer(if n.is_multiple_of(2) { 1 } else { -1 }));
                c
            }
        }
    }

    fn shape(&self, n: usize) -> FujimotoShape {
        let breakpoints = match self.polynomial {
            Polynomial::P1 => vec![n],
            Polynomial::P2 => (1..=n).collect(),
        };
        FujimotoShape::new(n, breakpoints, self.constants(n)).expect("valid shape")
    }

    fn paper_matrix(&self, n: usize, rows: &Matrix<ExactScalar>) -> Matrix<ExactScalar> {
        match self.polynomial {
            Polynomial::P1 => p1_matrix(n, rows, 0, &self.powers),
            Polynomial::P2 => p2_matrix(n, rows, n),
        }
        .expect("configuration shape is valid")
    }
}

/// Configurations for one ordered block: P1 with every special row and every
/// ξ-bijection, then (unless it coincides with P1) P2 for the same special row.
fn reduced_configs(n: usize, complement: &[usize], mode: Mode) -> Vec<Config> {
    let mut out = Vec::new();
    for &special in complement {
        let others: Vec<usize> = complement.iter().copied().filter(|&i| i != special).collect();
        let mut rows = vec![special];
        rows.extend(&others);
        for perm in (1..=n as u32).permutations(n) {
            let mut powers = vec![0];
            powers.extend(perm);
            out.push(Config::p1(rows.clone(), powers));
        }
        if n == 1 {
            continue;
        }
        match mode {
            Mode::Paper => out.push(Config::p2(others.iter().copied().chain([special]).collect())),
            Mode::Symbolic => {
                for perm in others.iter().copied().permutations(n) {
                    out.push(Config::p2(perm.into_iter().chain([special]).collect()));
                }
            }
        }
    }
    out
}

fn reference_configs(n: usize, sigma: &[usize]) -> Vec<Config> {
    let head = &sigma[..=n];
    vec![Config::p1(head.to_vec(), (0..=n as u32).collect()), Config::p2(head.to_vec())]
}

struct Outcome {
    checked: u64,
    witness: Option<Witness>,
}

fn transformed_rows(g: &HyperplaneFamily, rows: &[usize]) -> Matrix<ExactScalar> {
    rows.iter().map(|&i| g.row(i).to_vec()).collect()
}

/// Evaluates the configurations of one ordered block, keeping the first zero.
fn run_block(f: &HyperplaneFamily, block: &[usize], configs: Vec<Config>, mode: Mode) -> Result<Outcome> {
    let n = f.n();
    let g = normalize_block(f, block)?;
    let mut checked = 0;
    let mut first = None;
    for cfg in configs {
        checked += 1;
        let rows = transformed_rows(&g, &cfg.rows);
        let paper = cfg.paper_matrix(n, &rows);
        let vanishes = match mode {
            Mode::Paper => det_by_minors(&paper).is_zero(),
            Mode::Symbolic => {
                let shape = cfg.shape(n);
                let symbolic = fujimoto_matrix(&shape, &rows)?;
                let two = vec![ExactScalar::from_integer(2); n];
                for (srow, prow) in symbolic.iter().zip(&paper) {
                    for (s, p) in srow.iter().zip(prow) {
                        assert_eq!(s.evaluate(&two)?, *p, "η = 2 specialisation differs from the evaluated matrix");
                    }
                }
                fujimoto_determinant(&shape, &rows)?.is_zero()
            }
        };
        if vanishes && first.is_none() {
            let value = det_by_minors(&paper);
            assert!(value.is_zero(), "identically vanishing determinant is non-zero at η = 2");
            let witness = Witness {
                polynomial: cfg.polynomial,
                block: block.to_vec(),
                column0: block[0],
                special_row: cfg.special(),
                constants: cfg.constants(n),
                rows: cfg.rows,
                value,
            };
            first = Some(witness);
        }
    }
    Ok(Outcome { checked, witness: first })
}

/// Runs the units in parallel; the witness kept is the first one in unit
/// order, whatever order the units finish in.
fn first_witness<U: Sync>(units: &[U], eval: impl Fn(&U) -> Result<Outcome> + Sync) -> Result<(u64, Option<Witness>)> {
    let outcomes: Vec<Result<Outcome>> = units.par_iter().map(&eval).collect();
    let mut checked = 0;
    let mut witness = None;
    for out in outcomes {
        let out = out?;
        checked += out.checked;
        if witness.is_none() {
            witness = out.witness;
        }
    }
    Ok((checked, witness))
}

/// Decides whether the 2n+2 hyperplanes lie in V. The verdict is
/// `NotGeneralPosition` when some n+1 of them are dependent, `NonGeneric`
/// with the first vanishing configuration, `Generic` otherwise.
pub fn genericity_check(f: &HyperplaneFamily, opts: &GenericityOptions) -> Result<GenericityCertificate> {
    let n = f.n();
    let q = 2 * n + 2;
    if n < 1 || f.len() != q {
        return Err(Error::Parameters(format!("need 2n+2 = {q} hyperplanes in P^{n} with n >= 1, got {}", f.len())));
    }
    let mut cert = GenericityCertificate {
        verdict: Verdict::Generic,
        n,
        mode: opts.mode,
        enumeration: opts.enumeration,
        configurations_checked: 0,
        witness: None,
        violating_subset: None,
    };
    let gp = general_position(f)?;
    if !gp.ok {
        cert.verdict = Verdict::NotGeneralPosition;
        cert.violating_subset = gp.violating_subset;
        return Ok(cert);
    }
    let (checked, witness) = match opts.enumeration {
        Enumeration::Reduced => {
            let units: Vec<(Vec<usize>, Vec<usize>)> = (0..q)
                .combinations(n + 1)
                .flat_map(|block| {
                    let complement: Vec<usize> = (0..q).filter(|i| !block.contains(i)).collect();
                    block
                        .iter()
                        .map(|&c0| {
                            let mut order = vec![c0];
                            order.extend(block.iter().copied().filter(|&i| i != c0));
                            (order, complement.clone())
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
            first_witness(&units, |(order, complement)| {
                run_block(f, order, reduced_configs(n, complement, opts.mode), opts.mode)
            })?
        }
        Enumeration::Reference => {
            let units: Vec<Vec<usize>> = (0..q).permutations(q).collect();
            first_witness(&units, |sigma| run_block(f, &sigma[n + 1..], reference_configs(n, sigma), opts.mode))?
        }
    };
    assert_eq!(checked, expected_configurations(n, opts.mode, opts.enumeration));
    cert.configurations_checked = checked;
    if witness.is_some() {
        cert.verdict = Verdict::NonGeneric;
        cert.witness = witness;
    }
    Ok(cert)
}

/// Block-normalised rows and the η = 2 matrix of a witness, recomputed from
/// the family.
pub fn witness_matrices(f: &HyperplaneFamily, w: &Witness) -> Result<(Matrix<ExactScalar>, Matrix<ExactScalar>)> {
    let n = f.n();
    if w.block.len() != n + 1 || w.rows.len() != n + 1 || w.constants.len() != n + 1 || w.block[0] != w.column0 {
        return Err(Error::Shape("witness does not describe an (n+1)-block and n+1 rows".into()));
    }
    let mut all: Vec<usize> = w.block.iter().chain(&w.rows).copied().collect();
    all.sort_unstable();
    if all != (0..f.len()).collect::<Vec<_>>() {
        return Err(Error::Shape("witness block and rows must partition the family".into()));
    }
    let g = normalize_block(f, &w.block)?;
    let rows = transformed_rows(&g, &w.rows);
    let matrix = match w.polynomial {
        Polynomial::P1 => {
            if w.special_row != w.rows[0] {
                return Err(Error::Shape("P1 special row must come first".into()));
            }
            let xi = xi(n);
            let powers = w
                .constants
                .iter()
                .map(|c| (0..=n as u32).find(|&p| xi.pow(p as i64).expect("root of unity") == *c))
                .collect::<Option<Vec<u32>>>()
                .ok_or_else(|| Error::Shape("P1 constants must be powers of ξ".into()))?;
            p1_matrix(n, &rows, 0, &powers)?
        }
        Polynomial::P2 => {
            if w.special_row != w.rows[n] {
                return Err(Error::Shape("P2 special row must come last".into()));
            }
            p2_matrix(n, &rows, n)?
        }
    };
    Ok((rows, matrix))
}

/// Recomputes the witness determinant from the original family.
pub fn verify_witness(f: &HyperplaneFamily, w: &Witness) -> Result<ExactScalar> {
    Ok(det_by_minors(&witness_matrices(f, w)?.1))
}

fn fmt_row(row: &[ExactScalar]) -> String {
    format!("[{}]", row.iter().map(ToString::to_string).join(", "))
}

/// Human-readable report. For a witness it re-derives the normalised rows
/// and the determinant from `f`, so the zero can be checked by hand.
pub fn render_text(cert: &GenericityCertificate, f: &HyperplaneFamily) -> Result<String> {
    let mut out = String::new();
    let mode = match cert.mode {
        Mode::Paper => "paper",
        Mode::Symbolic => "symbolic",
    };
    let enumeration = match cert.enumeration {
        Enumeration::Reduced => "reduced",
        Enumeration::Reference => "reference",
    };
    writeln!(out, "verdict: {:?}", cert.verdict).unwrap();
    writeln!(out, "n: {}", cert.n).unwrap();
    writeln!(out, "mode: {mode} ({enumeration} enumeration)").unwrap();
    writeln!(out, "configurations checked: {}", cert.configurations_checked).unwrap();
    if let Some(v) = &cert.violating_subset {
        writeln!(out, "violating subset: {v:?}").unwrap();
        let det = f.minor(v);
        writeln!(out, "  determinant of these rows: {det}").unwrap();
    }
    if let Some(w) = &cert.witness {
        let (rows, matrix) = witness_matrices(f, w)?;
        writeln!(out, "witness: {:?}", w.polynomial).unwrap();
        writeln!(out, "  block (column order): {:?}", w.block).unwrap();
        writeln!(out, "  column 0: {}", w.column0).unwrap();
        writeln!(out, "  special row: {}", w.special_row).unwrap();
        writeln!(out, "  rows: {:?}", w.rows).unwrap();
        writeln!(out, "  constants: {}", fmt_row(&w.constants)).unwrap();
        writeln!(out, "  normalised rows:").unwrap();
        for (i, r) in w.rows.iter().zip(&rows) {
            writeln!(out, "    {i}: {}", fmt_row(r)).unwrap();
        }
        writeln!(out, "  matrix at eta = 2:").unwrap();
        for r in &matrix {
            writeln!(out, "    {}", fmt_row(r)).unwrap();
        }
        writeln!(out, "  determinant (recomputed): {}", det_by_minors(&matrix)).unwrap();
        writeln!(out, "  value: {}", w.value).unwrap();
    }
    Ok(out)
}

/// The symbolic determinant of a witness configuration, as a polynomial in
/// η_1 … η_n.
pub fn witness_symbolic(f: &HyperplaneFamily, w: &Witness) -> Result<LaurentPoly> {
    let n = f.n();
    let (rows, _) = witness_matrices(f, w)?;
    let breakpoints = match w.polynomial {
        Polynomial::P1 => vec![n],
        Polynomial::P2 => (1..=n).collect(),
    };
    fujimoto_determinant(&FujimotoShape::new(n, breakpoints, w.constants.clone())?, &rows)
}
