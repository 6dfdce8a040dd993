//! Slow, independent polynomial-arithmetic path used only to cross-check the
//! optimized ring ladders: schoolbook multiplication, explicit long division
//! by the monic cubic, and right-to-left powering (the fast path is
//! left-to-right with fused reduction formulas).

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::cubic_ring::CubicResidue;

/// Dense little-endian coefficient vector over Z_n.
type Poly = Vec<BigUint>;

fn schoolbook_mul(f: &Poly, g: &Poly, n: &BigUint) -> Poly {
    let mut out = vec![BigUint::zero(); f.len() + g.len() - 1];
    for (i, fi) in f.iter().enumerate() {
        for (j, gj) in g.iter().enumerate() {
            out[i + j] += fi * gj;
        }
    }
    for c in &mut out {
        *c %= n;
    }
    out
}

/// Long division remainder by the monic divisor x³ − a·x − a: repeatedly
/// eliminate the leading term, folding lead·(a·x + a) back in.
fn divide_by_cubic(mut f: Poly, a: &BigUint, n: &BigUint) -> Poly {
    while f.len() > 3 {
        let d = f.len() - 1;
        let lead = f.pop().unwrap();
        let add = lead * a % n;
        f[d - 2] = (&f[d - 2] + &add) % n;
        f[d - 3] = (&f[d - 3] + &add) % n;
    }
    f.resize(3, BigUint::zero());
    f
}

fn mul_mod(f: &Poly, g: &Poly, a: &BigUint, n: &BigUint) -> Poly {
    divide_by_cubic(schoolbook_mul(f, g, n), a, n)
}

/// General residue product (s₁x²+t₁x+u₁)·(s₂x²+t₂x+u₂) through the oracle
/// path; used by property tests to validate the fused square/mul formulas.
pub fn mul_residues(
    n: &BigUint,
    a: &BigUint,
    lhs: &CubicResidue,
    rhs: &CubicResidue,
) -> CubicResidue {
    let f = vec![lhs.u.clone() % n, lhs.t.clone() % n, lhs.s.clone() % n];
    let g = vec![rhs.u.clone() % n, rhs.t.clone() % n, rhs.s.clone() % n];
    let r = mul_mod(&f, &g, &(a % n), n);
    CubicResidue { s: r[2].clone(), t: r[1].clone(), u: r[0].clone() }
}

/// x^e mod (n, x³ − a·x − a) by right-to-left binary powering over the
/// schoolbook/long-division primitives. e >= 1.
pub fn cubic_pow_oracle(n: &BigUint, a: &BigUint, e: &BigUint) -> CubicResidue {
    assert!(!e.is_zero(), "cubic_pow_oracle requires e >= 1");
    let a = a % n;
    let mut acc = vec![BigUint::one() % n, BigUint::zero(), BigUint::zero()];
    let mut base = vec![BigUint::zero(), BigUint::one() % n, BigUint::zero()];
    let mut e = e.clone();
    while !e.is_zero() {
        if e.bit(0) {
            acc = mul_mod(&acc, &base, &a, n);
        }
        e >>= 1;
        if !e.is_zero() {
            base = mul_mod(&base, &base, &a, n);
        }
    }
    CubicResidue { s: acc[2].clone(), t: acc[1].clone(), u: acc[0].clone() }
}
