use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::counters::OpCounters;
use crate::intmath::{is_prime_u64, jacobi, modpow_counted, odd_part};

/// Selfridge method A parameters: first D in 5, −7, 9, −11, … with
/// jacobi(D, n) = −1; P = 1, Q = (1 − D)/4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasParams {
    pub d: BigInt,
    pub q: BigInt,
}

/// None means the D search proved n composite (jacobi hit 0, exposing a
/// shared factor). Skips |D| = n so small primes are not misjudged.
pub fn selfridge_params(n: &BigUint) -> Option<LucasParams> {
    let n_int = BigInt::from(n.clone());
    let mut d = BigInt::from(5);
    loop {
        if d.abs() == n_int {
            d = next_d(d);
            continue;
        }
        match jacobi(&d, n) {
            -1 => {
                let q = (BigInt::one() - &d) / 4;
                return Some(LucasParams { d, q });
            }
            0 => return None,
            _ => d = next_d(d),
        }
    }
}

fn next_d(d: BigInt) -> BigInt {
    if d.is_positive() {
        -(d + 2i32)
    } else {
        -(d - 2i32)
    }
}

/// Strong probable-prime test base 2: with n−1 = d·2^s, accept iff
/// 2^d ≡ ±1 or 2^(d·2^r) ≡ −1 for some r < s.
pub fn miller_rabin_base2(n: &BigUint) -> (bool, OpCounters) {
    debug_assert!(n.is_odd() && *n >= BigUint::from(3u32));
    let mut c = OpCounters::new();
    let n_minus_1 = n - 1u32;
    let (d, s) = odd_part(&n_minus_1);
    let mut x = modpow_counted(&BigUint::from(2u32), &d, n, &mut c);
    if x.is_one() || x == n_minus_1 {
        return (true, c);
    }
    for _ in 1..s {
        x = &x * &x % n;
        c.big_mul += 1;
        c.big_mod += 1;
        c.exp_bits += 1;
        if x == n_minus_1 {
            return (true, c);
        }
    }
    (false, c)
}

/// Strong Lucas probable-prime test with Selfridge parameters: with
/// n+1 = d·2^s, accept iff U_d ≡ 0 or V_(d·2^r) ≡ 0 for some r < s.
/// Perfect squares are rejected up front (no valid D exists for them).
pub fn strong_lucas(n: &BigUint) -> (bool, OpCounters) {
    debug_assert!(n.is_odd() && *n >= BigUint::from(3u32));
    let mut c = OpCounters::new();
    let r = n.sqrt();
    if &(&r * &r) == n {
        return (false, c);
    }
    let Some(params) = selfridge_params(n) else {
        return (false, c);
    };
    let (d, s) = odd_part(&(n + 1u32));

    // |D| and |Q| are word-sized: multiplications by them are not counted.
    let d_abs = params.d.abs().to_biguint().unwrap() % n;
    let d_neg = params.d.is_negative();
    let q_abs = params.q.abs().to_biguint().unwrap() % n;
    let q_neg = params.q.is_negative();
    let mul_q = |v: &BigUint| -> BigUint {
        let t = v * &q_abs % n;
        if q_neg && !t.is_zero() {
            n - t
        } else {
            t
        }
    };

    // U_1 = 1, V_1 = P = 1, Q^1
    let mut u = BigUint::one();
    let mut v = BigUint::one();
    let mut qk = mul_q(&BigUint::one());
    let two_n_sq = (n * n) << 1;
    for i in (0..d.bits() - 1).rev() {
        // (U, V, Q^m) -> (U·V, V² − 2Q^m, Q^2m): 3 multiplications, 3 reductions
        let new_u = &u * &v % n;
        v = (&v * &v + &two_n_sq - (&qk << 1)) % n;
        qk = &qk * &qk % n;
        u = new_u;
        c.big_mul += 3;
        c.big_mod += 3;
        c.exp_bits += 1;
        if d.bit(i) {
            // index +1 with P = 1: U' = (U+V)/2, V' = (D·U+V)/2, Q^m · Q —
            // all small-constant or additive work
            let du = &u * &d_abs;
            let dv = if d_neg { &v + &d_abs * n - du } else { &v + du };
            let su = &u + &v;
            u = half_mod(su, n);
            v = half_mod(dv, n);
            qk = mul_q(&qk);
        }
    }

    if u.is_zero() || v.is_zero() {
        return (true, c);
    }
    for _ in 1..s {
        // V_2m = V² − 2Q^m, then square Q^m
        v = (&v * &v + &two_n_sq - (&qk << 1)) % n;
        qk = &qk * &qk % n;
        c.big_mul += 2;
        c.big_mod += 2;
        c.exp_bits += 1;
        if v.is_zero() {
            return (true, c);
        }
    }
    (false, c)
}

fn half_mod(x: BigUint, n: &BigUint) -> BigUint {
    if x.is_odd() {
        (x + n) >> 1u32
    } else {
        x >> 1u32
    }
    .mod_floor(n)
}

/// Baillie-PSW: strong base-2 Miller-Rabin and the strong Lucas test. Both
/// halves always run; big_mul/big_mod sum the halves while exp_bits is set to
/// bits(n) − 1 so per-bit figures line up with the per-candidate cost model
/// (≈ 1+1 from MR plus ≈ 3+3 from Lucas per bit of n).
pub fn bpsw(n: &BigUint) -> (bool, OpCounters) {
    let two = BigUint::from(2u32);
    if *n < two {
        return (false, OpCounters::new());
    }
    if *n == two {
        return (true, OpCounters::new());
    }
    if n.is_even() {
        return (false, OpCounters::new());
    }
    let (mr_ok, mr_c) = miller_rabin_base2(n);
    let (lucas_ok, lucas_c) = strong_lucas(n);
    let counters = OpCounters {
        big_mul: mr_c.big_mul + lucas_c.big_mul,
        big_mod: mr_c.big_mod + lucas_c.big_mod,
        exp_bits: n.bits() - 1,
    };
    (mr_ok && lucas_ok, counters)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("oracle accepts n < 2^64 only")]
    OutOfRange,
}

/// Ground truth for desk-scale ranges: deterministic Miller-Rabin, n < 2^64.
pub fn is_prime_oracle(n: &BigUint) -> Result<bool, OracleError> {
    match n.to_u64() {
        Some(v) => Ok(is_prime_u64(v)),
        None => Err(OracleError::OutOfRange),
    }
}
