use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::counters::OpCounters;
use crate::cubic_ring::{CubicResidue, CubicRing};
use crate::intmath::{is_perfect_cube, is_prime_u64, modpow};

/// Default cap on parameters tried per candidate before giving up.
pub const DEFAULT_RETRY_CAP: u64 = 1000;
/// Cap on k values examined inside a single next_param search.
pub const PARAM_SCAN_BOUND: u64 = 10_000_000;

/// The pair (k, a = 7 + k(k−1)) with the derived gcd-gate factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicParams {
    pub k: u64,
    pub a: BigUint,
    pub two_k_minus_1: BigUint,
    pub two_a_minus_1: BigUint,
}

impl CubicParams {
    pub fn from_k(k: u64) -> Self {
        assert!(k >= 1, "k must be positive");
        let kb = BigUint::from(k);
        let a = BigUint::from(7u32) + &kb * (&kb - 1u32);
        let two_a_minus_1 = (&a << 1) - 1u32;
        CubicParams { k, two_k_minus_1: (kb << 1) - 1u32, two_a_minus_1, a }
    }

    /// (2k−1) · a · (2a−1), the gcd-gate product.
    pub fn gcd_product(&self) -> BigUint {
        &self.two_k_minus_1 * &self.a * &self.two_a_minus_1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamPolicy {
    /// Skip k ≡ 2 (mod 3) (those force 3 | a) and require prime a.
    PrimeA,
    /// Next k unconditionally; composite a allowed.
    AnyA,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CubicError {
    #[error("candidate must be a positive integer >= 2")]
    InvalidCandidate,
    #[error("parameter search exhausted after {tried} parameters")]
    ParameterExhausted { tried: u64 },
}

/// Smallest k > k_start admitted by the policy.
pub fn next_param(k_start: u64, policy: ParamPolicy) -> Result<CubicParams, CubicError> {
    let mut k = k_start;
    let mut tried = 0u64;
    loop {
        k += 1;
        match policy {
            ParamPolicy::AnyA => return Ok(CubicParams::from_k(k)),
            ParamPolicy::PrimeA => {
                if k % 3 == 2 {
                    continue;
                }
                let p = CubicParams::from_k(k);
                if param_a_is_prime(&p.a) {
                    return Ok(p);
                }
                tried += 1;
                if tried >= PARAM_SCAN_BOUND {
                    return Err(CubicError::ParameterExhausted { tried });
                }
            }
        }
    }
}

fn param_a_is_prime(a: &BigUint) -> bool {
    match a.to_u64() {
        Some(v) => is_prime_u64(v),
        // beyond u64 (k > ~4.3e9) fall back to the probable-prime baseline
        None => crate::bpsw::bpsw(a).0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Screen {
    Pass,
    /// n^((a−1)/3) ≡ 1 (mod a): B ≡ 1 is overwhelmingly likely, pick a new a.
    Reject,
}

/// The prime-a screen: reject iff n^((a−1)/3) ≡ 1 (mod a).
/// Uses the unreduced a, which may exceed n.
pub fn screen_a(n: &BigUint, p: &CubicParams) -> Screen {
    debug_assert!(p.a != *n);
    let e = (&p.a - 1u32) / 3u32;
    if modpow(&(n % &p.a), &e, &p.a).is_one() {
        Screen::Reject
    } else {
        Screen::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GcdGate {
    Ok,
    /// g = n: the parameter is uninformative, try another.
    Restart,
    /// 1 < g < n: certified nontrivial factor.
    Composite(BigUint),
}

pub fn gcd_gate(n: &BigUint, p: &CubicParams) -> GcdGate {
    let g = p.gcd_product().gcd(n);
    if g.is_one() {
        GcdGate::Ok
    } else if g == *n {
        GcdGate::Restart
    } else {
        GcdGate::Composite(g)
    }
}

/// B² + B + 1 ≡ −x² + x + a, i.e. the residue (n−1, 1, a mod n).
/// Costs one square step.
pub fn strengthened_check(ring: &CubicRing, b: &CubicResidue, c: &mut OpCounters) -> bool {
    let n = ring.n();
    let b2 = ring.square_step(b, c);
    let lhs = CubicResidue {
        s: (&b2.s + &b.s) % n,
        t: (&b2.t + &b.t) % n,
        u: (&b2.u + &b.u + 1u32) % n,
    };
    let rhs = CubicResidue {
        s: n - 1u32,
        t: BigUint::one() % n,
        u: ring.a().clone(),
    };
    lhs == rhs
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompositeWitness {
    PerfectCube { root: BigUint },
    /// Nontrivial factor: 1 < g < n and g | n.
    Gcd { g: BigUint },
    /// B ≢ 1 but B² + B + 1 ≢ −x² + x + a for the given parameter.
    CongruenceFailed { k: u64, a: BigUint },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Composite(CompositeWitness),
    ProbablePrime { k: u64 },
    /// The a = n case: n is one of the parametric primes itself.
    Prime,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicOutcome {
    pub verdict: Verdict,
    pub counters: OpCounters,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestPolicy {
    /// Minimal k with prime a (the default): screen, gcd gate, retry on
    /// uninformative parameters.
    MinimalK,
    /// One fixed parameter, composite a allowed, screen skipped. An
    /// uninformative parameter (g = n or B ≡ 1) exhausts the search
    /// immediately since there is nothing to retry with.
    FixedK(u64),
}

pub fn cubic_test(n: &BigUint, policy: TestPolicy) -> Result<CubicOutcome, CubicError> {
    cubic_test_with_cap(n, policy, DEFAULT_RETRY_CAP)
}

/// The full decision procedure, in order: perfect cube → Composite;
/// per parameter: a = n → Prime; screen reject → next a; gcd gate restart →
/// next a, nontrivial → Composite; B ≡ 1 → next a; strengthened congruence
/// fails → Composite; holds → ProbablePrime.
pub fn cubic_test_with_cap(
    n: &BigUint,
    policy: TestPolicy,
    retry_cap: u64,
) -> Result<CubicOutcome, CubicError> {
    let two = BigUint::from(2u32);
    if *n < two {
        return Err(CubicError::InvalidCandidate);
    }
    let mut counters = OpCounters::new();
    if *n == two {
        return Ok(CubicOutcome { verdict: Verdict::Prime, counters });
    }
    if n.is_even() {
        return Ok(CubicOutcome {
            verdict: Verdict::Composite(CompositeWitness::Gcd { g: two }),
            counters,
        });
    }
    if let Some(root) = is_perfect_cube(n) {
        return Ok(CubicOutcome {
            verdict: Verdict::Composite(CompositeWitness::PerfectCube { root }),
            counters,
        });
    }

    let n_minus_1 = n - 1u32;
    let mut k_cursor = 0u64;
    let mut tried = 0u64;
    while tried < retry_cap {
        tried += 1;
        let params = match policy {
            TestPolicy::MinimalK => {
                let p = next_param(k_cursor, ParamPolicy::PrimeA)?;
                k_cursor = p.k;
                p
            }
            TestPolicy::FixedK(k) => {
                if tried > 1 {
                    // single parameter, nothing left to retry
                    return Err(CubicError::ParameterExhausted { tried: 1 });
                }
                if k < 1 {
                    return Err(CubicError::InvalidCandidate);
                }
                CubicParams::from_k(k)
            }
        };
        if params.a == *n {
            return Ok(CubicOutcome { verdict: Verdict::Prime, counters });
        }
        if policy == TestPolicy::MinimalK && screen_a(n, &params) == Screen::Reject {
            continue;
        }
        match gcd_gate(n, &params) {
            GcdGate::Restart => continue,
            GcdGate::Composite(g) => {
                return Ok(CubicOutcome {
                    verdict: Verdict::Composite(CompositeWitness::Gcd { g }),
                    counters,
                });
            }
            GcdGate::Ok => {}
        }
        let ring = CubicRing::new(n, &params.a);
        let b = ring.pow_x(&n_minus_1, &mut counters);
        if ring.is_one(&b) {
            continue;
        }
        let verdict = if strengthened_check(&ring, &b, &mut counters) {
            Verdict::ProbablePrime { k: params.k }
        } else {
            Verdict::Composite(CompositeWitness::CongruenceFailed { k: params.k, a: params.a })
        };
        return Ok(CubicOutcome { verdict, counters });
    }
    Err(CubicError::ParameterExhausted { tried })
}
