//! Word-sized engine for Z_r[x]/(x³−ax−a) used by the sweep campaigns.
//!
//! Campaign side-searches evaluate the congruence for millions of (r, a)
//! pairs with r < 2³². Running those through the arbitrary-precision ring
//! would dominate every sweep, so this module mirrors its arithmetic on
//! u64 words (u128 intermediates). The arbitrary-precision ring stays the
//! source of truth; the cross-check tests below tie the two together.

use crate::intmath::is_prime_u64;

/// a(k) = 7 + k(k−1) reduced mod r.
pub fn a_mod_u64(k: u64, r: u64) -> u64 {
    ((7 + (k as u128) * ((k - 1) as u128)) % r as u128) as u64
}

/// Residues are (s, t, u) for s·x² + t·x + u, matching the wide ring.
pub fn square_step_u64(r: u64, a: u64, (s, t, u): (u64, u64, u64)) -> (u64, u64, u64) {
    debug_assert!(r < 1 << 62, "term accumulation needs 4r² < 2^128");
    let m = r as u128;
    let (s, t, u, a) = (s as u128, t as u128, u as u128, a as u128);
    let ss = s * s % m;
    let tt = t * t % m;
    let uu = u * u % m;
    let st = s * t % m;
    let tu = t * u % m;
    let us = u * s % m;
    let s2 = (a * ss + 2 * us + tt) % m;
    let t2 = (a * ss + 2 * a % m * st + 2 * tu) % m;
    let u2 = (2 * a * st + uu) % m;
    (s2 as u64, t2 as u64, u2 as u64)
}

pub fn mul_by_x_u64(r: u64, a: u64, (s, t, u): (u64, u64, u64)) -> (u64, u64, u64) {
    let a_s = (a as u128 * s as u128 % r as u128) as u64;
    (t, ((u as u128 + a_s as u128) % r as u128) as u64, a_s)
}

/// x^e by square-and-multiply, top bit first.
pub fn pow_x_u64(r: u64, a: u64, e: u64) -> (u64, u64, u64) {
    assert!(e >= 1 && r >= 2);
    let mut res = (0, 1 % r, 0);
    for i in (0..63 - e.leading_zeros() as u64).rev() {
        res = square_step_u64(r, a, res);
        if (e >> i) & 1 == 1 {
            res = mul_by_x_u64(r, a, res);
        }
    }
    res
}

/// B² + B + 1 ≡ −x² + x + a (mod r, x³−ax−a) for B given as a residue.
pub fn strengthened_check_u64(r: u64, a: u64, b: (u64, u64, u64)) -> bool {
    let b2 = square_step_u64(r, a, b);
    let m = r as u128;
    let lhs = (
        ((b2.0 as u128 + b.0 as u128) % m) as u64,
        ((b2.1 as u128 + b.1 as u128) % m) as u64,
        ((b2.2 as u128 + b.2 as u128 + 1) % m) as u64,
    );
    lhs == (r - 1, 1 % r, a % r)
}

/// gcd((2k−1) · a(k) · (2a(k)−1), n), taken through residues mod n.
pub fn gcd_gate_u64(n: u64, k: u64) -> u64 {
    let m = n as u128;
    let a = a_mod_u64(k, n) as u128;
    let t1 = (2 * k as u128 - 1) % m;
    let t3 = (2 * a + m - 1) % m;
    let prod = (t1 * a % m * t3 % m) as u64;
    gcd_u64(prod, n)
}

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The full acceptance condition for odd n under parameter k: gcd gate
/// passes, B = x^(n−1) ≢ 1, and the strengthened congruence holds.
pub fn full_test_passes_u64(n: u64, k: u64) -> bool {
    if gcd_gate_u64(n, k) != 1 {
        return false;
    }
    let a = a_mod_u64(k, n);
    let b = pow_x_u64(n, a, n - 1);
    b != (0, 0, 1 % n) && strengthened_check_u64(n, a, b)
}

/// Parameters k and (1−k) mod n share the same a; this picks the class
/// representative a brute-force sweep over [1, n/2] would report.
pub fn canonical_k(k: u64, n: u64) -> u64 {
    let m = k % n;
    if m <= 1 {
        1
    } else {
        m.min(n + 1 - m)
    }
}

/// Every k ∈ [1, n/2] (class representatives) passing the full test.
pub fn brute_force_k_sweep(n: u64) -> Vec<u64> {
    assert!(n % 2 == 1 && n > 4 && !is_prime_u64(n));
    (1..=n / 2).filter(|&k| full_test_passes_u64(n, k)).collect()
}
