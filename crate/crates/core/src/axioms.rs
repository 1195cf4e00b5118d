//! Randomized verification of the semiring laws.
//!
//! Every law is evaluated once per sampled triple `(u, v, w)` and compared
//! with exact equality. Components are sampled as integers, so `min`, `max`
//! and `+` on them are exact in `f64`.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{self, AlgebraMode, InfinityPolicy};
use crate::error::{Error, Result};
use crate::number::NeutroNumber;
use crate::scalar::ExtReal;

/// The operations under test. [`NeutroAlgebra`] is the real one; other
/// implementations let a test confirm that the checker can fail.
pub trait ScalarAlgebra {
    fn add(&self, x: NeutroNumber, z: NeutroNumber) -> NeutroNumber;
    fn mul(&self, x: NeutroNumber, z: NeutroNumber) -> Result<NeutroNumber>;
    fn zero(&self) -> NeutroNumber;
    fn one(&self) -> NeutroNumber;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeutroAlgebra {
    pub mode: AlgebraMode,
    pub policy: InfinityPolicy,
}

impl ScalarAlgebra for NeutroAlgebra {
    fn add(&self, x: NeutroNumber, z: NeutroNumber) -> NeutroNumber {
        self.mode.add(x, z)
    }

    fn mul(&self, x: NeutroNumber, z: NeutroNumber) -> Result<NeutroNumber> {
        algebra::mul_with_policy(x, z, self.mode, self.policy)
    }

    fn zero(&self) -> NeutroNumber {
        self.mode.additive_identity()
    }

    fn one(&self) -> NeutroNumber {
        algebra::multiplicative_identity()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomConfig {
    pub mode: AlgebraMode,
    pub sample_count: usize,
    pub seed: u64,
    pub component_range: RangeInclusive<i64>,
    pub include_infinities: bool,
    pub infinity_policy: InfinityPolicy,
}

impl AxiomConfig {
    /// 10,000 samples from `[-50, 50]`, seed 0, no infinities.
    pub fn new(mode: AlgebraMode) -> Self {
        AxiomConfig {
            mode,
            sample_count: 10_000,
            seed: 0,
            component_range: -50..=50,
            include_infinities: false,
            infinity_policy: InfinityPolicy::Resolve,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sample_count == 0 {
            return Err(Error::Domain("sample_count must be at least 1".into()));
        }
        if self.component_range.start() > self.component_range.end() {
            return Err(Error::Domain(format!(
                "empty component range [{}, {}]",
                self.component_range.start(),
                self.component_range.end()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    AddCommutativity,
    AddAssociativity,
    AddIdempotency,
    AddIdentity,
    MulCommutativity,
    MulAssociativity,
    MulIdentity,
    LeftDistributivity,
    RightDistributivity,
    Annihilation,
}

impl Law {
    pub const ALL: [Law; 10] = [
        Law::AddCommutativity,
        Law::AddAssociativity,
        Law::AddIdempotency,
        Law::AddIdentity,
        Law::MulCommutativity,
        Law::MulAssociativity,
        Law::MulIdentity,
        Law::LeftDistributivity,
        Law::RightDistributivity,
        Law::Annihilation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::AddCommutativity => "add-commutativity",
            Law::AddAssociativity => "add-associativity",
            Law::AddIdempotency => "add-idempotency",
            Law::AddIdentity => "add-identity",
            Law::MulCommutativity => "mul-commutativity",
            Law::MulAssociativity => "mul-associativity",
            Law::MulIdentity => "mul-identity",
            Law::LeftDistributivity => "left-distributivity",
            Law::RightDistributivity => "right-distributivity",
            Law::Annihilation => "annihilation",
        }
    }

    /// Checks the law on one triple. `Ok(None)` means it held.
    fn check<A: ScalarAlgebra>(
        self,
        alg: &A,
        u: NeutroNumber,
        v: NeutroNumber,
        w: NeutroNumber,
    ) -> Result<Option<Counterexample>> {
        let add = |x, z| alg.add(x, z);
        let mul = |x, z| alg.mul(x, z);
        let (zero, one) = (alg.zero(), alg.one());

        // Each law is a list of (expected, actual) pairs that must agree.
        let (operands, sides): (Vec<NeutroNumber>, Vec<(NeutroNumber, NeutroNumber)>) = match self {
            Law::AddCommutativity => (vec![u, v], vec![(add(u, v), add(v, u))]),
            Law::AddAssociativity => (vec![u, v, w], vec![(add(add(u, v), w), add(u, add(v, w)))]),
            Law::AddIdempotency => (vec![u], vec![(u, add(u, u))]),
            Law::AddIdentity => (vec![u], vec![(u, add(u, zero)), (u, add(zero, u))]),
            Law::MulCommutativity => (vec![u, v], vec![(mul(u, v)?, mul(v, u)?)]),
            Law::MulAssociativity => (
                vec![u, v, w],
                vec![(mul(mul(u, v)?, w)?, mul(u, mul(v, w)?)?)],
            ),
            Law::MulIdentity => (vec![u], vec![(u, mul(u, one)?), (u, mul(one, u)?)]),
            Law::LeftDistributivity => (
                vec![u, v, w],
                vec![(add(mul(u, v)?, mul(u, w)?), mul(u, add(v, w))?)],
            ),
            Law::RightDistributivity => (
                vec![u, v, w],
                vec![(add(mul(v, u)?, mul(w, u)?), mul(add(v, w), u)?)],
            ),
            Law::Annihilation => (vec![u], vec![(zero, mul(u, zero)?), (zero, mul(zero, u)?)]),
        };
        Ok(sides
            .into_iter()
            .find(|(expected, actual)| expected != actual)
            .map(|(expected, actual)| Counterexample {
                operands,
                expected,
                actual,
            }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub operands: Vec<NeutroNumber>,
    pub expected: NeutroNumber,
    pub actual: NeutroNumber,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawResult {
    pub law: Law,
    pub trials: usize,
    pub failures: usize,
    /// Trials that raised a domain error (strict infinity policy only).
    pub domain_errors: usize,
    pub counterexample: Option<Counterexample>,
    pub first_error: Option<String>,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.domain_errors == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub config: AxiomConfig,
    pub laws: Vec<LawResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawResult::passed)
    }

    pub fn total_failures(&self) -> usize {
        self.laws.iter().map(|l| l.failures).sum()
    }

    pub fn total_domain_errors(&self) -> usize {
        self.laws.iter().map(|l| l.domain_errors).sum()
    }

    pub fn law(&self, law: Law) -> Option<&LawResult> {
        self.laws.iter().find(|l| l.law == law)
    }

    /// One line per law (`name trials=N failures=N errors=N`), counterexamples
    /// indented beneath, then an overall verdict.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for l in &self.laws {
            let _ = writeln!(
                out,
                "{:<22} trials={} failures={} errors={}",
                l.law.name(),
                l.trials,
                l.failures,
                l.domain_errors
            );
            if let Some(c) = &l.counterexample {
                let ops: Vec<String> = c.operands.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    out,
                    "    counterexample: operands=({}) expected={} actual={}",
                    ops.join(", "),
                    c.expected,
                    c.actual
                );
            }
            if let Some(e) = &l.first_error {
                let _ = writeln!(out, "    first error: {e}");
            }
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "overall {verdict}");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is always serializable")
    }
}

/// Draws one number with integer components from `range`. With infinities
/// enabled each component is `+inf` with probability 1/16 and `-inf` with
/// probability 1/16.
pub fn sample_nn<R: Rng + ?Sized>(
    range: &RangeInclusive<i64>,
    include_infinities: bool,
    rng: &mut R,
) -> NeutroNumber {
    let mut component = || {
        if include_infinities {
            match rng.random_range(0..16u8) {
                0 => return ExtReal::POS_INF,
                1 => return ExtReal::NEG_INF,
                _ => {}
            }
        }
        let v = rng.random_range(range.clone());
        ExtReal::new(v as f64).expect("integers are not NaN")
    };
    let a = component();
    let b = component();
    NeutroNumber { a, b }
}

pub fn check_axioms(config: &AxiomConfig) -> Result<AxiomReport> {
    let alg = NeutroAlgebra {
        mode: config.mode,
        policy: config.infinity_policy,
    };
    check_axioms_with(config, &alg)
}

/// Runs the law suite against arbitrary operations; sampling still follows
/// `config`, only `config.mode`/`infinity_policy` are ignored.
pub fn check_axioms_with<A: ScalarAlgebra>(config: &AxiomConfig, alg: &A) -> Result<AxiomReport> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut laws: Vec<LawResult> = Law::ALL
        .iter()
        .map(|&law| LawResult {
            law,
            trials: 0,
            failures: 0,
            domain_errors: 0,
            counterexample: None,
            first_error: None,
        })
        .collect();

    for _ in 0..config.sample_count {
        let u = sample_nn(&config.component_range, config.include_infinities, &mut rng);
        let v = sample_nn(&config.component_range, config.include_infinities, &mut rng);
        let w = sample_nn(&config.component_range, config.include_infinities, &mut rng);
        for result in &mut laws {
            result.trials += 1;
            match result.law.check(alg, u, v, w) {
                Ok(None) => {}
                Ok(Some(cex)) => {
                    result.failures += 1;
                    result.counterexample.get_or_insert(cex);
                }
                Err(err) => {
                    result.domain_errors += 1;
                    result.first_error.get_or_insert_with(|| err.to_string());
                }
            }
        }
    }
    Ok(AxiomReport {
        config: config.clone(),
        laws,
    })
}
