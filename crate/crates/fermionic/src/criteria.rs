//! The acceptance criteria as runnable checks, shared by `fermionic verify`
//! and the acceptance test target.

use std::fmt;
use std::time::{Duration, Instant};

use fermionic_core::characters::{ch_bigc, ch_bigc_alternating, ch_mixc};
use fermionic_core::kostka::{alternating_sum_kostka, restricted_kostka};
use fermionic_core::oracle::{run, run_verified, Arithmetic, MixedCartan, OracleTarget, SECOND_PRIME};
use fermionic_core::qcomb::{f_coeff, multinomial_expansion};
use fermionic_core::verlinde::{basis_product_coeff, dim_bigc, dim_mixc};
use fermionic_core::{Composition, DEFAULT_PRIME};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Check {
    fn equal<T: PartialEq + fmt::Display>(label: String, got: T, want: T) -> Self {
        let passed = got == want;
        let detail = (!passed).then(|| format!("got {}, expected {}", got, want));
        Check { label, passed, detail }
    }

    fn failed(label: String, detail: String) -> Self {
        Check { label, passed: false, detail: Some(detail) }
    }
}

#[derive(Clone, Debug)]
pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    pub limit: Duration,
    pub elapsed: Duration,
    pub checks: Vec<Check>,
}

impl Criterion {
    pub fn checks_passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn in_time(&self) -> bool {
        self.elapsed <= self.limit
    }

    pub fn passed(&self) -> bool {
        self.checks_passed() && self.in_time()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One line: verdict, id, title, case count and timing against the limit.
    pub fn summary_line(&self) -> String {
        format!(
            "{} [{}] {}: {}/{} cases, {:.3}s (limit {}s)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len(),
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )
    }
}

fn timed(id: u32, title: &'static str, limit_secs: u64, body: impl FnOnce() -> Vec<Check>) -> Criterion {
    let start = Instant::now();
    let checks = body();
    Criterion { id, title, limit: Duration::from_secs(limit_secs), elapsed: start.elapsed(), checks }
}

/// Primes and base seed for oracle runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleSettings {
    pub primes: [u64; 2],
    pub seed: u64,
}

impl Default for OracleSettings {
    fn default() -> Self {
        OracleSettings { primes: [DEFAULT_PRIME, SECOND_PRIME], seed: 1 }
    }
}

impl OracleSettings {
    /// `prime` first, paired with a different second prime.
    pub fn with_prime(prime: u64, seed: u64) -> Self {
        let second = if prime == SECOND_PRIME { DEFAULT_PRIME } else { SECOND_PRIME };
        OracleSettings { primes: [prime, second], seed }
    }
}

fn comp(v: Vec<u32>) -> Composition {
    Composition::new(v).expect("nonempty")
}

/// Compositions of length `k` with `Σ m_a <= max_count`.
pub fn compositions_by_count(k: usize, max_count: u32) -> Vec<Composition> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                let used: u32 = v.iter().sum();
                (0..=max_count - used).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(comp).collect()
}

/// Compositions of length `k` with `|m| = Σ a·m_a <= max_weight`.
pub fn compositions_by_weight(k: usize, max_weight: u64) -> Vec<Composition> {
    compositions_by_count(k, max_weight as u32).into_iter().filter(|m| m.weight() <= max_weight).collect()
}

/// Multisets of integers `>= min` with product at most `bound`, as
/// non-increasing lists.
fn factorizations(bound: u64, min: u64, dim: impl Fn(u64) -> u64 + Copy) -> Vec<Vec<u64>> {
    fn rec(left: u64, max: u64, min: u64, dim: &dyn Fn(u64) -> u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        out.push(cur.clone());
        let mut a = min;
        while a <= max && dim(a) <= left {
            cur.push(a);
            rec(left / dim(a), a, min, dim, cur, out);
            cur.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    rec(bound, u64::MAX, min, &dim, &mut Vec::new(), &mut out);
    out
}

/// Every `m` whose tensor product `⊗ π_a^{m_a}` has dimension at most `bound`,
/// as a composition of length equal to its largest level (length 1 for `m = 0`).
pub fn compositions_by_tensor_dim(bound: u64) -> Vec<Composition> {
    factorizations(bound, 1, |a| a + 1)
        .into_iter()
        .map(|levels| {
            let k = levels.iter().copied().max().unwrap_or(1) as usize;
            let levels: Vec<u32> = levels.iter().map(|&a| a as u32).collect();
            Composition::from_levels(k, &levels).expect("levels within k")
        })
        .collect()
}

pub fn multinomial_consistency() -> Criterion {
    timed(1, "q-multinomials at q=1 match the expansion", 1, || {
        let mut checks = Vec::new();
        for k in 1..=3 {
            for big in compositions_by_count(k, 4) {
                let expansion = multinomial_expansion(&big);
                let bound = big.count() as u32 + 1;
                let mut bad = None;
                for m in compositions_by_count(k, bound * k as u32) {
                    if m.entries().iter().any(|&x| x > bound) {
                        continue;
                    }
                    let got = f_coeff(&big, &m).map(|p| p.at_one());
                    let want = expansion.get(&m).cloned().unwrap_or_default();
                    if got.as_ref() != Ok(&want) {
                        bad = Some(format!("m={}: got {:?}, expected {}", m, got, want));
                        break;
                    }
                }
                checks.push(match bad {
                    None => Check { label: format!("M={}", big), passed: true, detail: None },
                    Some(d) => Check::failed(format!("M={}", big), d),
                });
            }
        }
        checks
    })
}

pub fn verlinde_kostka_consistency() -> Criterion {
    timed(2, "restricted Kostka at q=1 equals the Verlinde coefficient", 1, || {
        let mut checks = Vec::new();
        for k in 1..=3u32 {
            for m in compositions_by_count(k as usize, 4) {
                for l in 0..=k {
                    let label = format!("k={} l={} m={}", k, l, m);
                    match (restricted_kostka(k, l, &m), basis_product_coeff(k, l, &m)) {
                        (Ok(p), Ok(v)) => checks.push(Check::equal(label, p.at_one(), v)),
                        (a, b) => checks.push(Check::failed(label, format!("{:?} / {:?}", a.err(), b.err()))),
                    }
                }
            }
        }
        checks
    })
}

pub fn dimension_formulas() -> Criterion {
    timed(3, "coinvariant characters at q=z=1 equal the Verlinde dimensions", 10, || {
        let mut checks = Vec::new();
        for k in 1..=3u32 {
            for n in 0..=3 {
                for l in 0..=k {
                    let label = format!("bigc k={} l={} N={}", k, l, n);
                    match (ch_bigc(k, l, n), dim_bigc(k, l, n)) {
                        (Ok(p), Ok(d)) => checks.push(Check::equal(label, p.at_one(), d)),
                        (a, b) => checks.push(Check::failed(label, format!("{:?} / {:?}", a.err(), b.err()))),
                    }
                }
            }
            let comps = compositions_by_weight(k as usize, 5);
            for big in &comps {
                for bar in &comps {
                    if big.weight() + bar.weight() > 5 {
                        continue;
                    }
                    for l in 0..=k {
                        let label = format!("mixc k={} l={} M={} Mbar={}", k, l, big, bar);
                        match (ch_mixc(k, l, big, bar), dim_mixc(k, l, big, bar)) {
                            (Ok(p), Ok(d)) => checks.push(Check::equal(label, p.at_one(), d)),
                            (a, b) => checks.push(Check::failed(label, format!("{:?} / {:?}", a.err(), b.err()))),
                        }
                    }
                }
            }
        }
        checks
    })
}

pub fn alternating_identities() -> Criterion {
    timed(4, "alternating-sum forms agree exactly", 30, || {
        let mut checks = Vec::new();
        for k in 1..=3u32 {
            for n in 0..=3 {
                for l in 0..=k {
                    let label = format!("bigc k={} l={} N={}", k, l, n);
                    match (ch_bigc(k, l, n), ch_bigc_alternating(k, l, n)) {
                        (Ok(a), Ok(b)) => checks.push(Check::equal(label, a, b)),
                        (a, b) => checks.push(Check::failed(label, format!("{:?} / {:?}", a.err(), b.err()))),
                    }
                }
            }
        }
        for k in 1..=4u32 {
            for m in compositions_by_weight(k as usize, 8) {
                for l in 0..=k {
                    let label = format!("kostka k={} l={} m={}", k, l, m);
                    match (restricted_kostka(k, l, &m), alternating_sum_kostka(k, l, &m)) {
                        (Ok(a), Ok(b)) => checks.push(Check::equal(label, a, b)),
                        (a, b) => checks.push(Check::failed(label, format!("{:?} / {:?}", a.err(), b.err()))),
                    }
                }
            }
        }
        checks
    })
}

pub fn chi_targets() -> Vec<OracleTarget> {
    compositions_by_tensor_dim(36).into_iter().map(OracleTarget::Chi).collect()
}

pub fn kostka_targets() -> Vec<OracleTarget> {
    let mut out = Vec::new();
    for m in compositions_by_tensor_dim(36) {
        if m.len() > 2 {
            continue;
        }
        for k in m.len() as u32..=2 {
            let m = m.padded(k as usize);
            for l in 0..=k {
                out.push(OracleTarget::Kostka { k, l, m: m.clone() });
            }
        }
    }
    out
}

pub fn chbig_targets() -> Vec<OracleTarget> {
    let mut out = Vec::new();
    for (k, max_n) in [(1u32, 2u32), (2, 2), (3, 1)] {
        for n in 0..=max_n {
            for l in 0..=k {
                out.push(OracleTarget::ChBig { k, l, n });
            }
        }
    }
    out
}

pub fn chmix_targets() -> Vec<OracleTarget> {
    let mut out = Vec::new();
    for k in 1..=2u32 {
        let comps = compositions_by_count(k as usize, 3);
        for big in &comps {
            for bar in &comps {
                if big.count() + bar.count() > 3 {
                    continue;
                }
                for l in 0..=k {
                    out.push(OracleTarget::ChMix {
                        k,
                        l,
                        big: big.clone(),
                        big_bar: bar.clone(),
                        cartan: MixedCartan::Diagonal,
                    });
                }
            }
        }
    }
    out
}

fn sl3_dim(a: u64) -> u64 {
    (a + 1) * (a + 2) / 2
}

pub fn two_variable_targets() -> Vec<OracleTarget> {
    let mut out = Vec::new();
    for k in 1..=2 {
        for big in compositions_by_count(k, 2) {
            if k == 2 && big.entries()[1] == 0 {
                continue;
            }
            out.push(OracleTarget::Vm(big));
        }
    }
    // Factors Π_a and Π̄_a with total dimension at most 36; level `a` is
    // encoded as `2a` for Π_a and `2a+1` for Π̄_a so one multiset covers both.
    for code in factorizations(36, 2, |c| sl3_dim(c / 2)) {
        let levels: Vec<u32> = code.iter().filter(|&&c| c % 2 == 0).map(|&c| (c / 2) as u32).collect();
        let bar_levels: Vec<u32> = code.iter().filter(|&&c| c % 2 == 1).map(|&c| (c / 2) as u32).collect();
        let k = levels.iter().chain(&bar_levels).copied().max().unwrap_or(1) as usize;
        let big = Composition::from_levels(k, &levels).expect("levels within k");
        let bar = Composition::from_levels(k, &bar_levels).expect("levels within k");
        out.push(OracleTarget::VmMbar(big, bar));
    }
    out
}

fn oracle_checks(targets: &[OracleTarget], settings: &OracleSettings) -> Vec<Check> {
    targets
        .iter()
        .map(|t| {
            let label = t.describe();
            let formula = match t.formula() {
                Ok(f) => f,
                Err(e) => return Check::failed(label, format!("formula: {}", e)),
            };
            match run_verified(t, &settings.primes, settings.seed) {
                Ok(v) if *v.poly() == formula => Check { label, passed: true, detail: None },
                Ok(v) => Check::failed(label, format!("oracle {} vs formula {}", v.poly(), formula)),
                Err(e) => Check::failed(label, e.to_string()),
            }
        })
        .collect()
}

pub fn fusion_oracle(settings: &OracleSettings) -> Criterion {
    timed(5, "fusion characters from the oracle", 60, || oracle_checks(&chi_targets(), settings))
}

pub fn kostka_oracle(settings: &OracleSettings) -> Criterion {
    timed(6, "Kostka quotients from the oracle", 60, || oracle_checks(&kostka_targets(), settings))
}

pub fn first_family_oracle(settings: &OracleSettings) -> Criterion {
    timed(7, "first-family coinvariants from the oracle", 120, || oracle_checks(&chbig_targets(), settings))
}

pub fn mixed_family_oracle(settings: &OracleSettings) -> Criterion {
    timed(8, "mixed coinvariants from the oracle", 120, || oracle_checks(&chmix_targets(), settings))
}

pub fn two_variable_oracle(settings: &OracleSettings) -> Criterion {
    timed(9, "sl2 and sl3 two-variable fusion characters from the oracle", 120, || {
        oracle_checks(&two_variable_targets(), settings)
    })
}

pub fn all_oracle_targets() -> Vec<OracleTarget> {
    let mut t = chi_targets();
    t.extend(kostka_targets());
    t.extend(chbig_targets());
    t.extend(chmix_targets());
    t.extend(two_variable_targets());
    t
}

/// Every oracle target over both primes with three seeds each: all six
/// characters must coincide with each other and with the formula.
pub fn robustness(settings: &OracleSettings) -> Criterion {
    timed(10, "oracle characters independent of prime and evaluation points", 600, || {
        all_oracle_targets()
            .iter()
            .map(|t| {
                let label = t.describe();
                let formula = match t.formula() {
                    Ok(f) => f,
                    Err(e) => return Check::failed(label, format!("formula: {}", e)),
                };
                for &p in &settings.primes {
                    for draw in 0..3u64 {
                        let seed = settings.seed.wrapping_add(1000 * (draw + 1));
                        match run(t, Arithmetic::Prime { modulus: p, seed }) {
                            Ok(r) if r.poly == formula => {}
                            Ok(r) => {
                                return Check::failed(label, format!("prime {} seed {}: {} vs {}", p, seed, r.poly, formula))
                            }
                            Err(e) => return Check::failed(label, format!("prime {} seed {}: {}", p, seed, e)),
                        }
                    }
                }
                Check { label, passed: true, detail: None }
            })
            .collect()
    })
}

/// Named groups of criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Criteria 1-4: closed-formula identities.
    Identities,
    /// Oracle criteria 5-9 restricted to tensor spaces of dimension at most 30.
    OracleSmall,
    /// Oracle criteria 5-10 in full.
    OracleFull,
}

fn small(targets: Vec<OracleTarget>) -> Vec<OracleTarget> {
    targets
        .into_iter()
        .filter(|t| t.model().map(|m| m.factors.iter().map(|f| f.dim()).product::<usize>() <= 30).unwrap_or(true))
        .collect()
}

impl Suite {
    pub fn run(self, settings: &OracleSettings) -> Vec<Criterion> {
        match self {
            Suite::Identities => {
                vec![multinomial_consistency(), verlinde_kostka_consistency(), dimension_formulas(), alternating_identities()]
            }
            Suite::OracleSmall => {
                let groups: [(u32, &'static str, Vec<OracleTarget>); 5] = [
                    (5, "fusion characters from the oracle", chi_targets()),
                    (6, "Kostka quotients from the oracle", kostka_targets()),
                    (7, "first-family coinvariants from the oracle", chbig_targets()),
                    (8, "mixed coinvariants from the oracle", chmix_targets()),
                    (9, "sl2 and sl3 two-variable fusion characters from the oracle", two_variable_targets()),
                ];
                groups
                    .into_iter()
                    .map(|(id, title, targets)| timed(id, title, 60, || oracle_checks(&small(targets), settings)))
                    .collect()
            }
            Suite::OracleFull => vec![
                fusion_oracle(settings),
                kostka_oracle(settings),
                first_family_oracle(settings),
                mixed_family_oracle(settings),
                two_variable_oracle(settings),
                robustness(settings),
            ],
        }
    }
}
