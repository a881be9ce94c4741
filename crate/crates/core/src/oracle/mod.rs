//! Brute-force characters from explicit representations.
//!
//! Each [`OracleTarget`] is realized as a filtered tensor product of finite
//! modules at distinct evaluation points ([`fusion`]), optionally divided by
//! an ideal, and read off as a [`LaurentPoly`] with `q` = filtration degree.
//! Runs go over a large prime field with random points (or over `Q` with
//! points `1, 2, …`); [`run_verified`] requires agreement of independent runs.

pub mod fusion;
pub mod linalg;
pub mod rep;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Field, PrimeField, PrimeFieldElt, RationalField, DEFAULT_PRIME};
use crate::characters::{ch_bigc, ch_mixc, ch_pi, ch_vm, ch_vmmbar, chi, kcal};
use crate::error::{Error, Result};
use crate::kostka::restricted_kostka;
use crate::poly::{LaurentPoly, Var};
use crate::qcomb::Composition;

pub use fusion::{FusionProblem, GradedDims, Grading, IdealOp, QuotientMode};
pub use rep::RepModule;

/// A second prime for cross-checking runs.
pub const SECOND_PRIME: u64 = 2_147_483_629;

/// Reading of `h_0` in the ideal of the mixed coinvariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MixedCartan {
    /// The Cartan element of the acting `sl2`.
    Diagonal,
    /// The operator `h̃`.
    HTilde,
}

/// What an oracle run computes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleTarget {
    /// `χ_m(q,z)` from the fusion product of `π_a`'s.
    Chi(Composition),
    /// `ch π_m`, the same fusion product without the shift.
    ChPi(Composition),
    /// `K^{(k)}_{l,m}(q)` as the graded quotient of the fusion product `π_m`.
    Kostka { k: u32, l: u32, m: Composition },
    /// Coinvariants of the first family via `N` copies of `ϖ^(k)`.
    ChBig { k: u32, l: u32, n: u32 },
    /// Coinvariants of the mixed family via `π^(k_i)` and `π̄^(k̄_j)`.
    ChMix { k: u32, l: u32, big: Composition, big_bar: Composition, cartan: MixedCartan },
    /// `𝒦_{l,M}(q,z)`: fusion of `ϖ^(a)`'s modulo `e''_0` and `h''_0 + l`.
    KCal { l: u32, big: Composition },
    /// `V_M`, fusion of `ϖ^(a)`'s graded by `h'` and `h''`.
    Vm(Composition),
    /// `V_{M,M̄}`, fusion of `Π_a`'s and `Π̄_a`'s over `sl3`.
    VmMbar(Composition, Composition),
}

/// Factors, acting generators, gradings and ideal of an oracle computation.
#[derive(Clone, Debug)]
pub struct Model {
    pub factors: Vec<RepModule>,
    pub acting: Vec<&'static str>,
    pub gradings: Vec<Grading>,
    pub ideal: Vec<IdealOp>,
    pub mode: QuotientMode,
}

fn half(name: &str) -> Var {
    Var::half_step(name)
}

fn check_kl(k: u32, l: u32) -> Result<()> {
    if l > k {
        return Err(Error::OutOfRange(format!("l = {} exceeds k = {}", l, k)));
    }
    Ok(())
}

fn check_len(c: &Composition, k: u32) -> Result<()> {
    if c.len() != k as usize {
        return Err(Error::LengthMismatch(c.len(), k as usize));
    }
    Ok(())
}

const SL2: [&str; 3] = ["e", "f", "h"];
const SL2_SECOND: [&str; 3] = ["e''", "f''", "h''"];

impl OracleTarget {
    pub fn name(&self) -> &'static str {
        match self {
            OracleTarget::Chi(_) => "chi",
            OracleTarget::ChPi(_) => "chpi",
            OracleTarget::Kostka { .. } => "kostka",
            OracleTarget::ChBig { .. } => "chbig",
            OracleTarget::ChMix { .. } => "chmix",
            OracleTarget::KCal { .. } => "kcal",
            OracleTarget::Vm(_) => "vm",
            OracleTarget::VmMbar(..) => "vmmbar",
        }
    }

    /// Parameters as `(name, value)` pairs, for reports.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        let c = |x: &Composition| x.to_string();
        match self {
            OracleTarget::Chi(m) | OracleTarget::ChPi(m) => vec![("m", c(m))],
            OracleTarget::Kostka { k, l, m } => vec![("k", k.to_string()), ("l", l.to_string()), ("m", c(m))],
            OracleTarget::ChBig { k, l, n } => vec![("k", k.to_string()), ("l", l.to_string()), ("N", n.to_string())],
            OracleTarget::ChMix { k, l, big, big_bar, cartan } => vec![
                ("k", k.to_string()),
                ("l", l.to_string()),
                ("M", c(big)),
                ("Mbar", c(big_bar)),
                ("cartan", String::from(if *cartan == MixedCartan::Diagonal { "diagonal" } else { "htilde" })),
            ],
            OracleTarget::KCal { l, big } => vec![("l", l.to_string()), ("M", c(big))],
            OracleTarget::Vm(big) => vec![("M", c(big))],
            OracleTarget::VmMbar(big, bar) => vec![("M", c(big)), ("Mbar", c(bar))],
        }
    }

    pub fn describe(&self) -> String {
        let p: Vec<String> = self.params().into_iter().map(|(k, v)| format!("{}={}", k, v)).collect();
        format!("{} {}", self.name(), p.join(" "))
    }

    pub fn model(&self) -> Result<Model> {
        let sl2_factors = |m: &Composition| m.levels().into_iter().map(rep::sl2_irrep).collect::<Vec<_>>();
        let varpi_factors = |m: &Composition| m.levels().into_iter().map(rep::varpi).collect::<Vec<_>>();
        let model = match self {
            OracleTarget::Chi(m) | OracleTarget::ChPi(m) => {
                let offset = if matches!(self, OracleTarget::Chi(_)) { m.weight() as i64 } else { 0 };
                Model {
                    factors: sl2_factors(m),
                    acting: SL2.to_vec(),
                    gradings: vec![Grading::new(half("z"), &[("h", 1)], offset)],
                    ideal: vec![],
                    mode: QuotientMode::Graded,
                }
            }
            OracleTarget::Kostka { k, l, m } => {
                check_kl(*k, *l)?;
                check_len(m, *k)?;
                Model {
                    factors: sl2_factors(m),
                    acting: SL2.to_vec(),
                    gradings: vec![],
                    ideal: vec![
                        IdealOp::power("e", 0, 1),
                        IdealOp::power("e", 1, k - l + 1),
                        IdealOp::shifted("h", *l as i64),
                    ],
                    mode: QuotientMode::Graded,
                }
            }
            OracleTarget::ChBig { k, l, n } => {
                check_kl(*k, *l)?;
                Model {
                    factors: (0..*n).map(|_| rep::varpi(*k)).collect(),
                    acting: SL2_SECOND.to_vec(),
                    gradings: vec![Grading::new(half("z"), &[("h'", 1)], 0)],
                    ideal: vec![
                        IdealOp::power("e''", 0, 1),
                        IdealOp::power("e''", 1, k - l + 1),
                        IdealOp::shifted("h''", *l as i64),
                    ],
                    mode: QuotientMode::Graded,
                }
            }
            OracleTarget::ChMix { k, l, big, big_bar, cartan } => {
                check_kl(*k, *l)?;
                check_len(big, *k)?;
                check_len(big_bar, *k)?;
                let mut factors: Vec<RepModule> = big.levels().into_iter().map(rep::pi_sum_lowest).collect();
                factors.extend(big_bar.levels().into_iter().map(rep::pi_sum_highest));
                let h = if *cartan == MixedCartan::Diagonal { "h" } else { "htilde" };
                Model {
                    factors,
                    acting: SL2.to_vec(),
                    gradings: vec![Grading::new(half("z"), &[("htilde", 2)], 0)],
                    ideal: vec![
                        IdealOp::power("e", 0, 1),
                        IdealOp::shifted(h, *l as i64),
                        IdealOp::power("e", 1, k - l + 1),
                    ],
                    mode: QuotientMode::Filtered,
                }
            }
            OracleTarget::KCal { l, big } => Model {
                factors: varpi_factors(big),
                acting: SL2_SECOND.to_vec(),
                gradings: vec![Grading::new(half("z"), &[("h'", 1)], 0)],
                ideal: vec![IdealOp::power("e''", 0, 1), IdealOp::shifted("h''", *l as i64)],
                mode: QuotientMode::Graded,
            },
            OracleTarget::Vm(big) => Model {
                factors: varpi_factors(big),
                acting: SL2_SECOND.to_vec(),
                gradings: vec![
                    Grading::new(half("z1"), &[("h'", 1)], 0),
                    Grading::new(half("z2"), &[("h''", 1)], 0),
                ],
                ideal: vec![],
                mode: QuotientMode::Graded,
            },
            OracleTarget::VmMbar(big, bar) => {
                if big.len() != bar.len() {
                    return Err(Error::LengthMismatch(big.len(), bar.len()));
                }
                let mut factors: Vec<RepModule> = big.levels().into_iter().map(rep::sl3_sym).collect();
                factors.extend(bar.levels().into_iter().map(rep::sl3_sym_dual));
                // Sixth steps: D_1 = (2 h12 + h23)/3, D_2 = (h12 + 2 h23)/3.
                Model {
                    factors,
                    acting: vec!["e12", "e13", "e23"],
                    gradings: vec![
                        Grading::new(Var::sixth_step("z1"), &[("h12", 4), ("h23", 2)], 0),
                        Grading::new(Var::sixth_step("z2"), &[("h12", 2), ("h23", 4)], 0),
                    ],
                    ideal: vec![],
                    mode: QuotientMode::Graded,
                }
            }
        };
        Ok(model)
    }

    /// The closed formula this target is compared with.
    pub fn formula(&self) -> Result<LaurentPoly> {
        match self {
            OracleTarget::Chi(m) => Ok(chi(m)),
            OracleTarget::ChPi(m) => Ok(ch_pi(m)),
            OracleTarget::Kostka { k, l, m } => restricted_kostka(*k, *l, m),
            OracleTarget::ChBig { k, l, n } => ch_bigc(*k, *l, *n),
            OracleTarget::ChMix { k, l, big, big_bar, .. } => ch_mixc(*k, *l, big, big_bar),
            OracleTarget::KCal { l, big } => Ok(kcal(*l, big)),
            OracleTarget::Vm(big) => Ok(ch_vm(big)),
            OracleTarget::VmMbar(big, bar) => ch_vmmbar(big, bar),
        }
    }
}

/// Field and evaluation points of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arithmetic {
    /// `Z/p` with points drawn from a ChaCha stream seeded by `seed`.
    Prime { modulus: u64, seed: u64 },
    /// `Q` with points `1, 2, …, N`.
    Rational,
}

impl Default for Arithmetic {
    fn default() -> Self {
        Arithmetic::Prime { modulus: DEFAULT_PRIME, seed: 0 }
    }
}

/// `n` distinct nonzero elements of the field, reproducible from `seed`.
pub fn random_zetas(field: &PrimeField, seed: u64, n: usize) -> Vec<PrimeFieldElt> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<PrimeFieldElt> = Vec::with_capacity(n);
    while out.len() < n {
        let z = field.elem(rng.gen_range(1..field.modulus()));
        if !out.contains(&z) {
            out.push(z);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleRun {
    pub target: OracleTarget,
    pub arithmetic: Arithmetic,
    pub zetas: Vec<String>,
    pub dims: GradedDims,
    pub poly: LaurentPoly,
}

fn solve<F: Field>(field: F, zetas: Vec<F::Elem>, model: &Model) -> Result<(Vec<String>, GradedDims)> {
    for m in &model.factors {
        m.check_brackets()?;
    }
    let shown = zetas.iter().map(|z| z.to_string()).collect();
    let p = FusionProblem::new(field, model.factors.clone(), zetas, &model.acting, model.gradings.clone())?;
    let dims = if model.ideal.is_empty() {
        p.graded_character()?
    } else {
        p.quotient_character(&model.ideal, model.mode)?
    };
    Ok((shown, dims))
}

/// One oracle computation.
pub fn run(target: &OracleTarget, arithmetic: Arithmetic) -> Result<OracleRun> {
    let model = target.model()?;
    let n = model.factors.len();
    let (zetas, dims) = match arithmetic {
        Arithmetic::Prime { modulus, seed } => {
            let field = PrimeField::new(modulus)?;
            let z = random_zetas(&field, seed, n);
            solve(field, z, &model)?
        }
        Arithmetic::Rational => {
            let z = (1..=n as i64).map(|i| RationalField.from_i64(i)).collect();
            solve(RationalField, z, &model)?
        }
    };
    let poly = dims.to_poly();
    Ok(OracleRun { target: target.clone(), arithmetic, zetas, dims, poly })
}

/// Agreeing runs over several primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifiedRun {
    pub runs: Vec<OracleRun>,
    pub attempts: u32,
}

impl VerifiedRun {
    pub fn poly(&self) -> &LaurentPoly {
        &self.runs[0].poly
    }
}

pub const MAX_ATTEMPTS: u32 = 3;

/// Runs the target once per prime (seeds `seed`, `seed+1`, …) and requires
/// identical characters; on disagreement retries with fresh seeds, and reports
/// [`Error::Degenerate`] if no attempt agrees.
pub fn run_verified(target: &OracleTarget, primes: &[u64], seed: u64) -> Result<VerifiedRun> {
    for attempt in 0..MAX_ATTEMPTS {
        let mut runs = Vec::with_capacity(primes.len());
        for (i, &p) in primes.iter().enumerate() {
            let s = seed.wrapping_add(attempt as u64 * 0x9E37_79B9).wrapping_add(i as u64);
            runs.push(run(target, Arithmetic::Prime { modulus: p, seed: s })?);
        }
        if runs.windows(2).all(|w| w[0].poly == w[1].poly) {
            return Ok(VerifiedRun { runs, attempts: attempt + 1 });
        }
    }
    Err(Error::Degenerate { attempts: MAX_ATTEMPTS })
}
