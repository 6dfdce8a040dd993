use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::counters::OpCounters;

/// Jacobi symbol (m/n) for odd n >= 1, by binary reciprocity.
/// Negative m is handled through reduction mod n.
pub fn jacobi(m: &BigInt, n: &BigUint) -> i32 {
    debug_assert!(n.is_odd(), "jacobi requires odd n");
    let n_int = BigInt::from(n.clone());
    let mut m = m.mod_floor(&n_int).to_biguint().unwrap();
    let mut n = n.clone();
    if n.is_one() {
        return 1;
    }
    let mut sign = 1i32;
    while !m.is_zero() {
        let tz = m.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            m >>= tz;
            // (2/n) = -1 iff n ≡ 3,5 (mod 8); only an odd count of 2s matters
            if tz.is_odd() {
                let n_mod_8 = (&n % 8u32).to_u32().unwrap();
                if n_mod_8 == 3 || n_mod_8 == 5 {
                    sign = -sign;
                }
            }
        }
        // quadratic reciprocity flip
        if (&m % 4u32).to_u32().unwrap() == 3 && (&n % 4u32).to_u32().unwrap() == 3 {
            sign = -sign;
        }
        std::mem::swap(&mut m, &mut n);
        m %= &n;
    }
    if n.is_one() {
        sign
    } else {
        0
    }
}

/// b^e mod m without instrumentation.
pub fn modpow(b: &BigUint, e: &BigUint, m: &BigUint) -> BigUint {
    b.modpow(e, m)
}

/// b^e mod m by a left-to-right ladder, tallying 1 MUL + 1 MOD per squaring
/// step and 1 + 1 more on set bits when the reduced base is wider than a
/// machine word (multiplies by a word-sized base are excluded, see OpCounters).
pub fn modpow_counted(b: &BigUint, e: &BigUint, m: &BigUint, c: &mut OpCounters) -> BigUint {
    let b = b % m;
    if e.is_zero() {
        return BigUint::one() % m;
    }
    let base_is_big = b.to_u64().is_none();
    let bits = e.bits();
    let mut acc = b.clone();
    for i in (0..bits - 1).rev() {
        acc = &acc * &acc % m;
        c.big_mul += 1;
        c.big_mod += 1;
        c.exp_bits += 1;
        if e.bit(i) {
            acc = acc * &b % m;
            if base_is_big {
                c.big_mul += 1;
                c.big_mod += 1;
            }
        }
    }
    acc
}

/// Exact cube-root check: Some(r) iff r^3 == n.
/// cbrt is Newton's method under the hood; the recheck keeps it exact.
pub fn is_perfect_cube(n: &BigUint) -> Option<BigUint> {
    let r = n.cbrt();
    if &(&r * &r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// n = d * 2^s with d odd; returns (d, s). n must be nonzero.
pub fn odd_part(n: &BigUint) -> (BigUint, u64) {
    let s = n.trailing_zeros().unwrap_or(0);
    (n >> s, s)
}

pub fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn modpow_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    b %= m;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod_u64(acc, b, m);
        }
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full u64 range
/// (witness set due to Sinclair: sufficient below 3.3 * 10^24).
const MR_WITNESSES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &MR_WITNESSES {
        let w = w % n;
        if w == 0 {
            continue;
        }
        let mut x = modpow_u64(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Multiplicative order of 2 modulo odd n > 1 with 2^(n-1) ≡ 1 (mod n),
/// by direct doubling.
pub fn mult_order_of_two(n: u64) -> u64 {
    debug_assert!(n > 1 && n % 2 == 1);
    let mut v = 2 % n;
    let mut t = 1u64;
    while v != 1 {
        v = mulmod_u64(v, 2, n);
        t += 1;
    }
    t
}

/// CRT combine: the unique x in [0, m1*m2) with x ≡ r1 (mod m1), x ≡ r2 (mod m2).
/// Moduli must be coprime.
pub fn crt_combine(r1: &BigUint, m1: &BigUint, r2: &BigUint, m2: &BigUint) -> BigUint {
    let (m1i, m2i) = (BigInt::from(m1.clone()), BigInt::from(m2.clone()));
    let ext = m1i.extended_gcd(&m2i);
    assert!(ext.gcd.is_one(), "crt_combine requires coprime moduli");
    let n = &m1i * &m2i;
    let (r1i, r2i) = (BigInt::from(r1.clone()), BigInt::from(r2.clone()));
    // x = r1 + m1 * (ext.x * (r2 - r1) mod m2)
    let t = (ext.x * (r2i - &r1i)).mod_floor(&m2i);
    (r1i + m1i * t).mod_floor(&n).to_biguint().unwrap()
}
