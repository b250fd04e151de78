//! Stability analysis of binomials x^d - a over F_q.
//!
//! The engine never factors iterates. It walks the critical orbit
//! P_1 = a, P_n = P_(n-1)^d + (-1)^(d-1) a, which repeats within q + 1
//! steps, and decides stability from power-residue tests on the finitely
//! many orbit values: the binomial is stable exactly when no orbit value
//! is an l-th power (zero included) for a prime l dividing d. When a
//! failure exists, the minimal failing index is the first reducible
//! iterate, except that an orbit zero or a failure at index 1 makes the
//! binomial itself reducible.

use std::collections::HashMap;
use std::fmt;

use crate::arith::{distinct_prime_factors, gcd, is_prime, mod_pow, radical};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Why an orbit value fails the power-residue scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureCause {
    /// P_k(a) = 0.
    Zero,
    /// P_k(a) is an l-th power in F_q^*.
    Power { l: u64 },
}

/// First failing index in the orbit scan (ascending index; zero test
/// before the primes of d in ascending order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitFailure {
    /// 1-based orbit index k.
    pub index: usize,
    pub cause: FailureCause,
}

/// The critical orbit of a under t -> t^d + (-1)^(d-1) a.
#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub a: FieldElement,
    pub d: u64,
    /// P_1(a) .. P_(m0-1)(a); pairwise distinct.
    pub values: Vec<FieldElement>,
    /// Minimal indices with P_n0 = P_m0, n0 < m0 (n0 minimized first).
    pub n0: usize,
    pub m0: usize,
    pub contains_zero: bool,
    pub first_failure: Option<OrbitFailure>,
}

impl OrbitReport {
    /// The sequence as listed in table output: P_1 .. P_m0, i.e. the
    /// distinct values followed by the first repeat.
    pub fn printed_values(&self) -> Vec<FieldElement> {
        let mut out = self.values.clone();
        out.push(self.values[self.n0 - 1].clone());
        out
    }
}

/// Stability verdict for x^d - a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictKind {
    Stable,
    /// Iterates 1..n-1 are irreducible, iterate n is reducible.
    ReducibleAtIterate(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReducibleCause {
    /// p | d: the binomial is reducible outright.
    CharacteristicDividesDegree,
    /// Some orbit value vanishes, forcing the binomial itself reducible.
    OrbitZero { index: usize },
    /// P_index is an l-th power in F_q^*.
    OrbitPower { index: usize, l: u64, value: FieldElement },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub kind: VerdictKind,
    pub cause: Option<ReducibleCause>,
}

impl StabilityVerdict {
    pub fn is_stable(&self) -> bool {
        self.kind == VerdictKind::Stable
    }

    /// Witness root for a power failure, computed on demand by exhaustive
    /// search; `None` for stable verdicts and non-power causes.
    pub fn witness(&self) -> Result<Option<FieldElement>> {
        match &self.cause {
            Some(ReducibleCause::OrbitPower { l, value, .. }) => value.lth_root(*l),
            _ => Ok(None),
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictKind::Stable => write!(f, "stable"),
            VerdictKind::ReducibleAtIterate(n) => write!(f, "reducible at iterate {n}"),
        }
    }
}

fn require_nonzero(a: &FieldElement) -> Result<()> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(())
}

fn require_degree(d: u64) -> Result<()> {
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    Ok(())
}

/// Walks the orbit of a under t -> t^d + (-1)^(d-1) a until the first
/// repeat, recording values, the minimal repeat pair (n0, m0) and the
/// first power/zero failure. Terminates within q + 1 steps.
pub fn critical_orbit(a: &FieldElement, d: u64) -> Result<OrbitReport> {
    require_nonzero(a)?;
    require_degree(d)?;
    let field = a.field().clone();
    // (-1)^(d-1) a
    let step_add = if d % 2 == 1 { a.clone() } else { -a };
    let mut seen: HashMap<u64, usize> = HashMap::new();
    let mut values: Vec<FieldElement> = Vec::new();
    let mut cur = a.clone();
    let (n0, m0) = loop {
        let idx = values.len() + 1;
        if let Some(&first) = seen.get(&cur.code()) {
            break (first, idx);
        }
        seen.insert(cur.code(), idx);
        values.push(cur.clone());
        cur = cur.pow(d) + step_add.clone();
    };
    debug_assert!(m0 <= field.q() as usize + 1);
    let contains_zero = values.iter().any(|v| v.is_zero());
    let first_failure = scan_orbit(&values, d);
    Ok(OrbitReport { a: a.clone(), d, values, n0, m0, contains_zero, first_failure })
}

fn scan_orbit(values: &[FieldElement], d: u64) -> Option<OrbitFailure> {
    let primes = distinct_prime_factors(d);
    for (i, v) in values.iter().enumerate() {
        let index = i + 1;
        if v.is_zero() {
            return Some(OrbitFailure { index, cause: FailureCause::Zero });
        }
        for &l in &primes {
            if v.is_lth_power(l).expect("nonzero") {
                return Some(OrbitFailure { index, cause: FailureCause::Power { l } });
            }
        }
    }
    None
}

/// Irreducibility of x^d - a by power residues: no prime l | d may have
/// a as an l-th power, and when 4 | d additionally a must avoid -4
/// times fourth powers.
pub fn binomial_irreducible_lang(a: &FieldElement, d: u64) -> Result<bool> {
    require_nonzero(a)?;
    require_degree(d)?;
    for l in distinct_prime_factors(d) {
        if a.is_lth_power(l)? {
            return Ok(false);
        }
    }
    if d % 4 == 0 {
        // characteristic 2 never reaches this point: the l = 2 test above
        // already returned false (every element is a square there).
        let minus_four = a.field().from_int(-4);
        let c = a.clone() * minus_four.inverse().expect("p odd here");
        if c.is_mth_power_unchecked(4) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Irreducibility of x^d - a by the order criterion: every prime factor
/// of d divides the order e of a but not (q-1)/e, and q = 1 mod 4
/// whenever d = 0 mod 4.
pub fn binomial_irreducible_order(a: &FieldElement, d: u64) -> Result<bool> {
    require_nonzero(a)?;
    require_degree(d)?;
    let q = a.field().q();
    let e = a.order()?;
    let cofactor = (q - 1) / e;
    for l in distinct_prime_factors(d) {
        if e % l != 0 || cofactor % l == 0 {
            return Ok(false);
        }
    }
    if d % 4 == 0 && q % 4 != 1 {
        return Ok(false);
    }
    Ok(true)
}

/// Full stability decision. Rejects d = 0 mod 4 (outside the theorem's
/// hypothesis) and a = 0.
pub fn stability_verdict(a: &FieldElement, d: u64) -> Result<StabilityVerdict> {
    require_degree(d)?;
    if d % 4 == 0 {
        return Err(Error::DegreeDivisibleByFour(d));
    }
    require_nonzero(a)?;
    let p = a.field().p();
    if d % p == 0 {
        return Ok(StabilityVerdict {
            kind: VerdictKind::ReducibleAtIterate(1),
            cause: Some(ReducibleCause::CharacteristicDividesDegree),
        });
    }
    let orbit = critical_orbit(a, d)?;
    let verdict = match orbit.first_failure {
        None => StabilityVerdict { kind: VerdictKind::Stable, cause: None },
        Some(OrbitFailure { index, cause: FailureCause::Zero }) => StabilityVerdict {
            // a zero anywhere in the orbit makes f itself reducible
            kind: VerdictKind::ReducibleAtIterate(1),
            cause: Some(ReducibleCause::OrbitZero { index }),
        },
        Some(OrbitFailure { index, cause: FailureCause::Power { l } }) => StabilityVerdict {
            kind: VerdictKind::ReducibleAtIterate(index as u32),
            cause: Some(ReducibleCause::OrbitPower {
                index,
                l,
                value: orbit.values[index - 1].clone(),
            }),
        },
    };
    Ok(verdict)
}

/// Number of leading iterates whose irreducibility certifies stability on
/// a zero-free orbit: (q-1)/gcd(q-1, d) + 1.
pub fn early_stable_bound(a: &FieldElement, d: u64) -> Result<u64> {
    require_degree(d)?;
    if d % 4 == 0 {
        return Err(Error::DegreeDivisibleByFour(d));
    }
    require_nonzero(a)?;
    let q = a.field().q();
    Ok((q - 1) / gcd(q - 1, d) + 1)
}

/// Conjugates b x^d - c to monic form: finds lambda with lambda^(d-1) = b
/// (first solution in canonical order) and returns (lambda, a = c lambda),
/// so that b x^d - c and x^d - a have the same number of irreducible
/// factors at every iterate. `None` when no lambda exists.
pub fn normalize_nonmonic(
    b: &FieldElement,
    c: &FieldElement,
    d: u64,
) -> Result<Option<(FieldElement, FieldElement)>> {
    require_nonzero(b)?;
    require_degree(d)?;
    if b.field() != c.field() {
        return Err(Error::FieldMismatch);
    }
    let field = b.field();
    for code in 1..field.q() {
        let lambda = field.element(code).unwrap();
        if lambda.pow(d - 1) == *b {
            let a = c.clone() * lambda.clone();
            return Ok(Some((lambda, a)));
        }
    }
    Ok(None)
}

/// Self-check for odd d: x^d - a and x^d + a receive the same verdict
/// kind (their orbits are negatives of each other).
pub fn sign_flip_verdict_equal(a: &FieldElement, d: u64) -> Result<bool> {
    if d % 2 == 0 || d < 3 {
        return Err(Error::Hypothesis(format!("d = {d} must be odd and >= 3")));
    }
    let lhs = stability_verdict(a, d)?;
    let rhs = stability_verdict(&-a, d)?;
    Ok(lhs.kind == rhs.kind)
}

/// Coverage of a Mersenne scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanCoverage {
    /// Every alpha outside {0, 1}.
    Full,
    /// A deterministic stride sample (plus explicit non-generator probes
    /// g^l for each prime l | q - 1, so composite q - 1 always exhibits a
    /// counterexample).
    Sampled { count: u64 },
}

/// Outcome of scanning F_{2^m}: irreducibility and stability of
/// x^(q-1) - alpha across alpha, against the primality of 2^m - 1.
#[derive(Debug, Clone)]
pub struct MersenneReport {
    pub m: u32,
    pub q: u64,
    pub mersenne: u64,
    pub mersenne_prime: bool,
    pub coverage: ScanCoverage,
    pub all_irreducible: bool,
    pub all_stable: bool,
    /// First scanned alpha with x^(q-1) - alpha reducible.
    pub counterexample: Option<FieldElement>,
    /// Whether primality, all-irreducible and all-stable agreed on the
    /// scanned set.
    pub equivalence_holds: bool,
}

const MERSENNE_FULL_SCAN_MAX: u64 = 1 << 12;
const MERSENNE_SAMPLE: u64 = 1 << 12;

/// Builds F_{2^m} and scans x^(q-1) - alpha for irreducibility (order
/// test) and stability (orbit test); everything runs on exponent
/// arithmetic, no polynomial is ever built.
pub fn mersenne_report(m: u32) -> Result<MersenneReport> {
    if !(2..=20).contains(&m) {
        return Err(Error::MersenneRange(m));
    }
    let field = Field::new(2, m)?;
    let q = field.q();
    let d = q - 1;
    let mersenne_prime = is_prime(d);

    let mut candidates: Vec<u64>;
    let coverage;
    if q <= MERSENNE_FULL_SCAN_MAX {
        candidates = (2..q).collect();
        coverage = ScanCoverage::Full;
    } else {
        let stride = (q - 2) / MERSENNE_SAMPLE;
        candidates = (0..MERSENNE_SAMPLE).map(|i| 2 + i * stride).collect();
        // explicit non-generators so composite q - 1 cannot hide
        let g = field.generator()?;
        for l in distinct_prime_factors(d) {
            candidates.push(g.pow(l).code());
        }
        candidates.sort_unstable();
        candidates.dedup();
        coverage = ScanCoverage::Sampled { count: candidates.len() as u64 };
    }

    let mut all_irreducible = true;
    let mut all_stable = true;
    let mut counterexample = None;
    for code in candidates {
        let alpha = field.element(code)?;
        if alpha.is_zero() || alpha.is_one() {
            continue;
        }
        let irr = binomial_irreducible_order(&alpha, d)?;
        debug_assert_eq!(irr, alpha.order()? == d);
        let stable = stability_verdict(&alpha, d)?.is_stable();
        if !irr && counterexample.is_none() {
            counterexample = Some(alpha.clone());
        }
        all_irreducible &= irr;
        all_stable &= stable;
    }
    let equivalence_holds = all_irreducible == all_stable && all_irreducible == mersenne_prime;
    Ok(MersenneReport {
        m,
        q,
        mersenne: d,
        mersenne_prime,
        coverage,
        all_irreducible,
        all_stable,
        counterexample,
        equivalence_holds,
    })
}

/// One instance of the binomial transformation laws, all phrased through
/// the order criterion. Every variant evaluates its claim and returns
/// whether it holds for the given data (expected: always true).
#[derive(Debug, Clone)]
pub enum TransformItem {
    /// Irreducibility forces every prime factor of d to divide q - 1,
    /// and d | q^d - 1.
    PrimeFactorsDivide,
    /// Elements of equal order share the verdict at iterate one.
    EqualOrders { b: FieldElement },
    /// x^d - a and x^d + a agree (hypothesis: q != 3 mod 4 when d even).
    SignFlip,
    /// gcd(d, e) > 1 makes x^d - a^e reducible.
    PowerSharedFactor { e: u64 },
    /// gcd(d, e) = 1: x^d - a and x^d - a^e agree.
    PowerCoprime { e: u64 },
    /// Scaling a by a (squarefree part of d)-th power preserves the verdict.
    SquarefreeShift { b: FieldElement },
    /// Degrees with equal radical agree.
    SamePrimeRadical { d2: u64 },
    /// Coprime degrees combine: x^(d1 d2) - a1^d2 a2^d1 is irreducible
    /// iff both x^d1 - a1 and x^d2 - a2 are.
    CoprimeProduct { d2: u64, a2: FieldElement },
}

pub fn transform_suite(a: &FieldElement, d: u64, item: &TransformItem) -> Result<bool> {
    require_nonzero(a)?;
    require_degree(d)?;
    if d % 4 == 0 {
        return Err(Error::Hypothesis(format!("d = {d} is 0 mod 4")));
    }
    let q = a.field().q();
    match item {
        TransformItem::PrimeFactorsDivide => {
            if !binomial_irreducible_order(a, d)? {
                return Ok(true);
            }
            let primes_divide = distinct_prime_factors(d).iter().all(|&l| (q - 1) % l == 0);
            // d | q^d - 1, as modular exponentiation
            let divides = d == 1 || mod_pow(q % d, d, d) == 1 % d;
            Ok(primes_divide && divides)
        }
        TransformItem::EqualOrders { b } => {
            require_nonzero(b)?;
            if a.field() != b.field() {
                return Err(Error::FieldMismatch);
            }
            if a.order()? != b.order()? {
                return Err(Error::Hypothesis("orders differ".into()));
            }
            Ok(binomial_irreducible_order(a, d)? == binomial_irreducible_order(b, d)?)
        }
        TransformItem::SignFlip => {
            if d % 2 == 0 && q % 4 == 3 {
                return Err(Error::Hypothesis("q = 3 mod 4 with even d".into()));
            }
            Ok(binomial_irreducible_order(a, d)? == binomial_irreducible_order(&-a, d)?)
        }
        TransformItem::PowerSharedFactor { e } => {
            if *e == 0 || gcd(d, *e) == 1 {
                return Err(Error::Hypothesis("gcd(d, e) must exceed 1".into()));
            }
            let ae = a.pow(*e);
            if ae.is_zero() {
                return Err(Error::ZeroElement);
            }
            Ok(!binomial_irreducible_order(&ae, d)?)
        }
        TransformItem::PowerCoprime { e } => {
            if *e == 0 || gcd(d, *e) != 1 {
                return Err(Error::Hypothesis("gcd(d, e) must be 1".into()));
            }
            let ae = a.pow(*e);
            Ok(binomial_irreducible_order(a, d)? == binomial_irreducible_order(&ae, d)?)
        }
        TransformItem::SquarefreeShift { b } => {
            require_nonzero(b)?;
            if a.field() != b.field() {
                return Err(Error::FieldMismatch);
            }
            if !b.is_mth_power_unchecked(radical(d)) {
                return Err(Error::Hypothesis("b is not a radical(d)-th power".into()));
            }
            let ab = a.clone() * b.clone();
            Ok(binomial_irreducible_order(a, d)? == binomial_irreducible_order(&ab, d)?)
        }
        TransformItem::SamePrimeRadical { d2 } => {
            require_degree(*d2)?;
            if *d2 % 4 == 0 {
                return Err(Error::Hypothesis(format!("d2 = {d2} is 0 mod 4")));
            }
            if radical(d) != radical(*d2) {
                return Err(Error::Hypothesis("prime supports differ".into()));
            }
            Ok(binomial_irreducible_order(a, d)? == binomial_irreducible_order(a, *d2)?)
        }
        TransformItem::CoprimeProduct { d2, a2 } => {
            require_degree(*d2)?;
            require_nonzero(a2)?;
            if a.field() != a2.field() {
                return Err(Error::FieldMismatch);
            }
            if gcd(d, *d2) != 1 || *d2 % 4 == 0 || (d * d2) % 4 == 0 {
                return Err(Error::Hypothesis("degrees must be coprime, not 0 mod 4".into()));
            }
            let combined = a.pow(*d2) * a2.pow(d);
            let lhs = binomial_irreducible_order(&combined, d * d2)?;
            let rhs =
                binomial_irreducible_order(a, d)? && binomial_irreducible_order(a2, *d2)?;
            Ok(lhs == rhs)
        }
    }
}
