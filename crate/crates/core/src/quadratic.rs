use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::counters::OpCounters;
use crate::intmath::{jacobi, modpow_counted};
use crate::quad_ring::QuadRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadReason {
    EulerFailed,
    ZPowerFailed,
    /// gcd(n, 10) > 1 (n odd, so the factor is 5).
    SharedFactor { g: BigUint },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadVerdict {
    /// jacobi(5, n) ≠ −1: this test has nothing to say about n.
    Inapplicable,
    Composite { reason: QuadReason },
    ProbablePrime,
}

/// Base −4 Euler check: (−4)^((n−1)/2) ≡ jacobi(−4, n) (mod n), where
/// jacobi(−4, n) = jacobi(−1, n) since 4 is a square. n odd >= 3.
pub fn euler_check_base_neg4(n: &BigUint, c: &mut OpCounters) -> bool {
    let base = n - (BigUint::from(4u32) % n); // −4 mod n
    let lhs = modpow_counted(&base, &((n - 1u32) >> 1), n, c);
    let expect = match jacobi(&BigInt::from(-1), n) {
        1 => BigUint::one(),
        -1 => n - 1u32,
        _ => unreachable!("jacobi(-1, n) is ±1 for odd n"),
    };
    lhs == expect
}

/// z^((n+1)/2) ≡ jacobi(−1, n) (mod n, z² + 3z + 1): the power must have a
/// zero z-coefficient and the right constant term. n odd >= 3.
pub fn z_power_check(n: &BigUint, c: &mut OpCounters) -> bool {
    let ring = QuadRing::new(n);
    let r = ring.pow_z(&((n + 1u32) >> 1), c);
    let expect = match jacobi(&BigInt::from(-1), n) {
        1 => BigUint::one(),
        -1 => n - 1u32,
        _ => unreachable!(),
    };
    r.p.is_zero() && r.q == expect
}

/// The companion test for n ≡ 2, 3 (mod 5): Euler base −4 plus the z-power
/// congruence. Returns Inapplicable when jacobi(5, n) ≠ −1 (never guesses),
/// except that an n > 5 sharing a factor with 10 is reported Composite.
pub fn quadratic_test(n: &BigUint) -> (QuadVerdict, OpCounters) {
    debug_assert!(n.is_odd() && *n >= BigUint::from(3u32));
    let mut c = OpCounters::new();
    let five = BigUint::from(5u32);
    if *n == five {
        return (QuadVerdict::Inapplicable, c);
    }
    let g = n.gcd(&BigUint::from(10u32));
    if !g.is_one() {
        return (QuadVerdict::Composite { reason: QuadReason::SharedFactor { g } }, c);
    }
    if jacobi(&BigInt::from(5), n) != -1 {
        return (QuadVerdict::Inapplicable, c);
    }
    // scalar check first: it is the cheaper of the two
    if !euler_check_base_neg4(n, &mut c) {
        return (QuadVerdict::Composite { reason: QuadReason::EulerFailed }, c);
    }
    if !z_power_check(n, &mut c) {
        return (QuadVerdict::Composite { reason: QuadReason::ZPowerFailed }, c);
    }
    (QuadVerdict::ProbablePrime, c)
}
