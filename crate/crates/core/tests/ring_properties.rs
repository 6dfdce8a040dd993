//! The specialized ring arithmetic (asymmetric square step, shift-by-x,
//! left-to-right ladder) against a generic schoolbook polynomial oracle.

use cubic_primality::counters::OpCounters;
use cubic_primality::cubic_ring::CubicRing;
use cubic_primality::harness::prng::Prng;
use cubic_primality::intmath::jacobi;
use cubic_primality::poly_oracle::{cubic_pow_oracle, mul_residues};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;
use proptest::prelude::*;

fn ring_inputs() -> impl Strategy<Value = (BigUint, BigUint)> {
    // odd n in [3, 2^48), 1 <= a < n
    (3u64..(1 << 48), any::<u64>()).prop_map(|(n0, a0)| {
        let n = n0 | 1;
        let a = 1 + a0 % (n - 1);
        (BigUint::from(n), BigUint::from(a))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ladder_matches_oracle((n, a) in ring_inputs(), e in 1u64..1_000_000) {
        let ring = CubicRing::new(&n, &a);
        let mut c = OpCounters::new();
        let fast = ring.pow_x(&BigUint::from(e), &mut c);
        let slow = cubic_pow_oracle(&n, &a, &BigUint::from(e));
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn square_step_matches_general_product(
        (n, a) in ring_inputs(),
        s in any::<u64>(), t in any::<u64>(), u in any::<u64>(),
    ) {
        let ring = CubicRing::new(&n, &a);
        let r = ring.residue(&BigUint::from(s), &BigUint::from(t), &BigUint::from(u));
        let mut c = OpCounters::new();
        prop_assert_eq!(ring.square_step(&r, &mut c), mul_residues(&n, &a, &r, &r));
    }

    #[test]
    fn mul_by_x_matches_general_product(
        (n, a) in ring_inputs(),
        s in any::<u64>(), t in any::<u64>(), u in any::<u64>(),
    ) {
        let ring = CubicRing::new(&n, &a);
        let r = ring.residue(&BigUint::from(s), &BigUint::from(t), &BigUint::from(u));
        let mut c = OpCounters::new();
        prop_assert_eq!(ring.mul_by_x(&r, &mut c), mul_residues(&n, &a, &r, &ring.x()));
    }

    // With a word-sized a the ladder costs exactly 6 MUL and 3 MOD per
    // squaring step, independent of the exponent's set bits.
    #[test]
    fn word_parameter_ladder_cost_is_exact((n, a) in ring_inputs(), e in 2u64..) {
        let ring = CubicRing::new(&n, &a);
        let mut c = OpCounters::new();
        ring.pow_x(&BigUint::from(e), &mut c);
        let steps = 64 - u64::from(e.leading_zeros()) - 1;
        prop_assert_eq!(c.big_mul, 6 * steps);
        prop_assert_eq!(c.big_mod, 3 * steps);
        prop_assert_eq!(c.exp_bits, steps);
    }

    #[test]
    fn jacobi_of_square_is_one_or_zero(m in 2u64.., n0 in 1u64..(1 << 62)) {
        let n = BigUint::from((n0 | 1).max(3));
        let m_squared = BigInt::from(m) * BigInt::from(m);
        let j = jacobi(&m_squared, &n);
        if BigUint::from(m).gcd(&n).is_one() {
            prop_assert_eq!(j, 1);
        } else {
            prop_assert_eq!(j, 0);
        }
    }
}

#[test]
fn oracle_equivalence_on_ten_thousand_random_triples() {
    let mut g = Prng::new(0x5eed_0001);
    for round in 0..10_000u32 {
        let n = BigUint::from(3 + 2 * (g.next_value() % 499_999));
        let a = BigUint::from(1 + g.next_value() % 999_983);
        let e = BigUint::from(1 + g.next_value() % (1 << 20));
        let ring = CubicRing::new(&n, &a);
        let mut c = OpCounters::new();
        assert_eq!(
            ring.pow_x(&e, &mut c),
            cubic_pow_oracle(&n, &a, &e),
            "round {round}: n={n} a={a} e={e}"
        );
    }
}
