//! Brute-force ground truth: builds iterates explicitly and tests their
//! irreducibility generically, never consulting orbit data. Cross-checks
//! the orbit-based verdicts on every desk-scale instance.

use rayon::prelude::*;

use crate::arith::prime_powers_in;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::{Poly, DEFAULT_DEGREE_CAP};
use crate::stability::{stability_verdict, StabilityVerdict, VerdictKind};

/// Verdict comparison between the orbit analyzer and the factoring oracle.
#[derive(Debug, Clone)]
pub struct CrossCheckReport {
    pub field: Field,
    pub d: u64,
    pub a: FieldElement,
    pub analyzer: StabilityVerdict,
    /// Least n with iterate n reducible, among those the cap allows.
    pub oracle_first_reducible: Option<u32>,
    /// Largest n with d^n <= cap.
    pub max_iterate_checked: u32,
    pub agree: bool,
}

/// Least n with the n-th iterate of x^d - a reducible, testing every
/// iterate whose degree stays within `degree_cap`; `None` when all tested
/// iterates are irreducible.
pub fn oracle_first_reducible(
    a: &FieldElement,
    d: u64,
    degree_cap: usize,
) -> Result<Option<u32>> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    if (d as u128) > degree_cap as u128 {
        return Err(Error::DegreeCapExceeded { degree: d as u128, cap: degree_cap });
    }
    let f = Poly::binomial(d, a);
    let mut iterate = f.clone();
    let mut n = 1u32;
    loop {
        if !iterate.is_irreducible() {
            return Ok(Some(n));
        }
        let next_degree = (d as u128).pow(n + 1);
        if next_degree > degree_cap as u128 {
            return Ok(None);
        }
        iterate = iterate.compose(&f)?;
        n += 1;
    }
}

fn max_iterate_within(d: u64, degree_cap: usize) -> u32 {
    let mut n = 0u32;
    let mut deg = 1u128;
    loop {
        deg *= d as u128;
        if deg > degree_cap as u128 {
            return n;
        }
        n += 1;
    }
}

/// Runs both engines and records whether they agree: identical first
/// reducible iterate when it lies within the cap, or both stable as far
/// as the cap can see. An analyzer failure past the cap counts as
/// stable-to-cap, not as a disagreement.
pub fn cross_check(a: &FieldElement, d: u64, degree_cap: usize) -> Result<CrossCheckReport> {
    let analyzer = stability_verdict(a, d)?;
    let oracle = oracle_first_reducible(a, d, degree_cap)?;
    let max_iterate_checked = max_iterate_within(d, degree_cap);
    let analyzer_within_cap = match analyzer.kind {
        VerdictKind::Stable => None,
        VerdictKind::ReducibleAtIterate(n) if n <= max_iterate_checked => Some(n),
        VerdictKind::ReducibleAtIterate(_) => None,
    };
    let agree = analyzer_within_cap == oracle;
    Ok(CrossCheckReport {
        field: a.field().clone(),
        d,
        a: a.clone(),
        analyzer,
        oracle_first_reducible: oracle,
        max_iterate_checked,
        agree,
    })
}

/// Verifies the constant-term identity between iterates and orbit values:
/// for odd d, iterate n has constant term -P_n(a) for all n; for even d
/// the first iterate has constant term -a and later ones P_n(a).
pub fn constant_term_identity(a: &FieldElement, d: u64, n_max: u32) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    if (d as u128).pow(n_max) > DEFAULT_DEGREE_CAP as u128 {
        return Err(Error::DegreeCapExceeded {
            degree: (d as u128).pow(n_max),
            cap: DEFAULT_DEGREE_CAP,
        });
    }
    let f = Poly::binomial(d, a);
    // orbit values by the recurrence, continued past the repeat
    let step = if d % 2 == 1 { a.clone() } else { -a };
    let mut p_n = a.clone();
    let mut iterate = f.clone();
    for n in 1..=n_max {
        if n > 1 {
            iterate = iterate.compose(&f)?;
            p_n = p_n.pow(d) + step.clone();
        }
        let expected = if d % 2 == 1 || n == 1 { -&p_n } else { p_n.clone() };
        if iterate.coeff(0) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One (q, d, a) instance of the master sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepInstance {
    pub q: u64,
    pub d: u64,
    pub a_code: u64,
}

/// Every (q, d, a) with q a prime power in [q_min, q_max], d in
/// [d_min, d_max] with d != 0 mod 4, and a outside {0, 1}.
pub fn sweep_instances(q_min: u64, q_max: u64, d_min: u64, d_max: u64) -> Vec<SweepInstance> {
    let mut out = Vec::new();
    for q in prime_powers_in(q_min.max(3), q_max) {
        for d in d_min.max(2)..=d_max {
            if d % 4 == 0 {
                continue;
            }
            for a_code in 2..q {
                out.push(SweepInstance { q, d, a_code });
            }
        }
    }
    out
}

/// Cross-checks every instance in parallel. Output order matches input
/// order; internally the likely-expensive instances (high reachable
/// degree, large q) run first so stragglers do not serialize the tail.
pub fn run_sweep(instances: &[SweepInstance], degree_cap: usize) -> Result<Vec<CrossCheckReport>> {
    // fields are shared per q to reuse their arithmetic tables
    let mut fields: Vec<(u64, Field)> = Vec::new();
    for inst in instances {
        if fields.iter().all(|(q, _)| *q != inst.q) {
            fields.push((inst.q, Field::of_order(inst.q)?));
        }
    }
    let lookup = |q: u64| fields.iter().find(|(fq, _)| *fq == q).map(|(_, f)| f).unwrap();

    let mut order: Vec<usize> = (0..instances.len()).collect();
    let weight = |inst: &SweepInstance| {
        let reachable = (degree_cap as u128).max(1);
        let top = (inst.d as u128).pow(max_iterate_within(inst.d, degree_cap));
        (top.min(reachable), inst.q)
    };
    order.sort_by_key(|&i| std::cmp::Reverse(weight(&instances[i])));

    let mut computed: Vec<(usize, CrossCheckReport)> = order
        .into_par_iter()
        .map(|i| {
            let inst = &instances[i];
            let field = lookup(inst.q);
            let a = field.element(inst.a_code)?;
            cross_check(&a, inst.d, degree_cap).map(|r| (i, r))
        })
        .collect::<Result<_>>()?;
    computed.sort_by_key(|(i, _)| *i);
    Ok(computed.into_iter().map(|(_, r)| r).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stability::ReducibleCause;

    fn fq(q: u64) -> Field {
        Field::of_order(q).unwrap()
    }

    #[test]
    fn first_reducible_examples() {
        let f5 = fq(5);
        assert_eq!(oracle_first_reducible(&f5.from_int(-2), 2, 4096).unwrap(), Some(2));
        let f3 = fq(3);
        assert_eq!(oracle_first_reducible(&f3.from_int(-1), 2, 4096).unwrap(), None);
    }

    #[test]
    fn intro_example_f19() {
        // x^2 - 12 over F_19: iterates 1..5 irreducible, 6 reducible
        let f19 = fq(19);
        let a = f19.from_int(12);
        let f = Poly::binomial(2, &a);
        for n in 1..=5u32 {
            assert!(f.iterate(n).unwrap().is_irreducible(), "iterate {n}");
        }
        assert!(!f.iterate(6).unwrap().is_irreducible());
        assert_eq!(oracle_first_reducible(&a, 2, 4096).unwrap(), Some(6));
    }

    #[test]
    fn cross_check_examples() {
        let f7 = fq(7);
        let r = cross_check(&f7.from_int(2), 2, 512).unwrap();
        // 2 is a square mod 7: both engines see reducibility at once
        assert!(r.agree);
        assert_eq!(r.oracle_first_reducible, Some(1));

        let f11 = fq(11);
        let r = cross_check(&f11.from_int(10), 5, 512).unwrap();
        assert!(r.agree);
        assert_eq!(r.oracle_first_reducible, Some(1));
        assert!(matches!(
            r.analyzer.cause,
            Some(ReducibleCause::OrbitPower { index: 1, l: 5, .. })
        ));

        let f5 = fq(5);
        let r = cross_check(&f5.from_int(3), 2, 512).unwrap();
        assert!(r.agree);
        assert_eq!(r.oracle_first_reducible, Some(2));
    }

    #[test]
    fn truncation_is_not_disagreement() {
        // cap too small to reach the failing iterate: stable-to-cap
        let f19 = fq(19);
        let r = cross_check(&f19.from_int(12), 2, 16).unwrap();
        assert_eq!(r.analyzer.kind, VerdictKind::ReducibleAtIterate(6));
        assert_eq!(r.max_iterate_checked, 4);
        assert_eq!(r.oracle_first_reducible, None);
        assert!(r.agree);
    }

    #[test]
    fn characteristic_divides_degree() {
        // p | d: the oracle finds the first iterate reducible, matching
        // the analyzer's fast path
        for (q, d) in [(5u64, 5u64), (9, 3), (7, 7), (4, 6)] {
            let f = fq(q);
            for a in f.elements().skip(2).take(4) {
                let r = cross_check(&a, d, 256).unwrap();
                assert!(r.agree, "q={q} d={d} a={a}");
                assert_eq!(r.oracle_first_reducible, Some(1));
            }
        }
    }

    #[test]
    fn constant_term_examples() {
        let f5 = fq(5);
        // d even: f_1(0) = -a, f_2(0) = P_2
        assert!(constant_term_identity(&f5.from_int(-2), 2, 5).unwrap());
        let f7 = fq(7);
        assert!(constant_term_identity(&f7.from_int(2), 3, 4).unwrap());
        assert!(matches!(
            constant_term_identity(&f7.from_int(2), 2, 13),
            Err(Error::DegreeCapExceeded { .. })
        ));
    }

    #[test]
    fn small_sweep_agrees() {
        // a fast slice of the master sweep: q <= 9, cap 256
        let instances = sweep_instances(3, 9, 2, 7);
        let reports = run_sweep(&instances, 256).unwrap();
        assert_eq!(reports.len(), instances.len());
        for r in &reports {
            assert!(r.agree, "q={} d={} a={}", r.field.q(), r.d, r.a);
        }
    }
}
