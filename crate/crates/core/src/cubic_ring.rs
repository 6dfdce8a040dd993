use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::counters::OpCounters;

/// Element s·x² + t·x + u of Z_n[x]/(x³ − a·x − a), coefficients in [0, n).
/// Residues are only comparable when produced by the same ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicResidue {
    pub s: BigUint,
    pub t: BigUint,
    pub u: BigUint,
}

/// The quotient ring Z_n[x]/(x³ − a·x − a). `a` is reduced mod n on
/// construction; when the reduced value fits a machine word, multiplications
/// by it are performed (and counted) as small-constant work.
pub struct CubicRing {
    n: BigUint,
    a: BigUint,
    a_word: Option<u64>,
}

impl CubicRing {
    pub fn new(n: &BigUint, a: &BigUint) -> Self {
        assert!(*n >= BigUint::from(2u32), "modulus must be >= 2");
        let a = a % n;
        let a_word = a.to_u64();
        Self { n: n.clone(), a, a_word }
    }

    pub fn n(&self) -> &BigUint {
        &self.n
    }

    /// a mod n, the coefficient actually used in the reduction x³ ≡ ax + a.
    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn residue(&self, s: &BigUint, t: &BigUint, u: &BigUint) -> CubicResidue {
        CubicResidue { s: s % &self.n, t: t % &self.n, u: u % &self.n }
    }

    pub fn one(&self) -> CubicResidue {
        CubicResidue {
            s: BigUint::zero(),
            t: BigUint::zero(),
            u: BigUint::one() % &self.n,
        }
    }

    pub fn x(&self) -> CubicResidue {
        CubicResidue {
            s: BigUint::zero(),
            t: BigUint::one() % &self.n,
            u: BigUint::zero(),
        }
    }

    pub fn is_one(&self, r: &CubicResidue) -> bool {
        *r == self.one()
    }

    /// r² reduced by x³ ≡ ax + a:
    ///   s' = a·s² + 2su + t²,  t' = a·s² + 2a·st + 2tu,  u' = 2a·st + u².
    /// Counts the 6 cross products (s², t², u², st, tu, us) and 3 reductions;
    /// the two multiplies by `a` join the count only when a is multi-word.
    pub fn square_step(&self, r: &CubicResidue, c: &mut OpCounters) -> CubicResidue {
        let n = &self.n;
        let ss = &r.s * &r.s;
        let tt = &r.t * &r.t;
        let uu = &r.u * &r.u;
        let st = &r.s * &r.t;
        let tu = &r.t * &r.u;
        let us = &r.u * &r.s;
        c.big_mul += 6;
        let (a_ss, a_st) = match self.a_word {
            Some(w) => (&ss * w, &st * w),
            None => {
                c.big_mul += 2;
                (&self.a * &ss, &self.a * &st)
            }
        };
        let s = (&a_ss + (us << 1) + tt) % n;
        let t = (&a_ss + (&a_st << 1) + (tu << 1)) % n;
        let u = ((a_st << 1) + uu) % n;
        c.big_mod += 3;
        c.exp_bits += 1;
        CubicResidue { s, t, u }
    }

    /// r·x = T·x² + (U + a·S)·x + a·S for r = S·x² + T·x + U.
    /// With word-sized a this is all small-constant work: nothing is counted.
    pub fn mul_by_x(&self, r: &CubicResidue, c: &mut OpCounters) -> CubicResidue {
        let n = &self.n;
        let a_s = match self.a_word {
            Some(w) => &r.s * w,
            None => {
                c.big_mul += 1;
                c.big_mod += 2;
                &self.a * &r.s
            }
        };
        CubicResidue {
            s: r.t.clone(),
            t: (&r.u + &a_s) % n,
            u: a_s % n,
        }
    }

    /// x^e for e >= 1, left-to-right square-and-multiply starting from x.
    pub fn pow_x(&self, e: &BigUint, c: &mut OpCounters) -> CubicResidue {
        assert!(!e.is_zero(), "pow_x requires e >= 1");
        let mut r = self.x();
        for i in (0..e.bits() - 1).rev() {
            r = self.square_step(&r, c);
            if e.bit(i) {
                r = self.mul_by_x(&r, c);
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn big(n: u64) -> BigUint {
        BigUint::from_u64(n).unwrap()
    }

    fn ring(n: u64, a: u64) -> CubicRing {
        CubicRing::new(&big(n), &big(a))
    }

    fn res(r: &CubicRing, s: u64, t: u64, u: u64) -> CubicResidue {
        r.residue(&big(s), &big(t), &big(u))
    }

    #[test]
    fn square_of_x_is_x_squared() {
        let r = ring(5, 7);
        let mut c = OpCounters::new();
        assert_eq!(r.square_step(&r.x(), &mut c), res(&r, 1, 0, 0));
        assert_eq!(c, OpCounters { big_mul: 6, big_mod: 3, exp_bits: 1 });
    }

    #[test]
    fn square_of_x_squared_reduces() {
        // x⁴ = a·x² + a·x ≡ 2x² + 2x over (n=5, a=7)
        let r = ring(5, 7);
        let mut c = OpCounters::new();
        let x2 = res(&r, 1, 0, 0);
        assert_eq!(r.square_step(&x2, &mut c), res(&r, 2, 2, 0));
    }

    #[test]
    fn square_of_one_is_one() {
        let r = ring(13, 7);
        let mut c = OpCounters::new();
        assert_eq!(r.square_step(&r.one(), &mut c), r.one());
    }

    #[test]
    fn mul_by_x_basics() {
        let r = ring(5, 7);
        let mut c = OpCounters::new();
        // x · x = x²
        assert_eq!(r.mul_by_x(&r.x(), &mut c), res(&r, 1, 0, 0));
        // x² · x = x³ ≡ ax + a = 7x + 7 ≡ 2x + 2
        assert_eq!(r.mul_by_x(&res(&r, 1, 0, 0), &mut c), res(&r, 0, 2, 2));
        // word-sized a: never counted
        assert_eq!(c, OpCounters::default());

        let r11 = ring(11, 7);
        assert_eq!(r11.mul_by_x(&r11.one(), &mut c), r11.x());
    }

    #[test]
    fn x_cubed_identity_holds_structurally() {
        // mul_by_x(x²) must equal a·x + a in every ctx
        for (n, a) in [(5u64, 7u64), (9, 7), (13, 13), (101, 69), (29, 8), (3, 7)] {
            let r = ring(n, a);
            let mut c = OpCounters::new();
            let got = r.mul_by_x(&r.residue(&big(1), &big(0), &big(0)), &mut c);
            assert_eq!(got, res(&r, 0, a % n, a % n), "n={n} a={a}");
        }
    }

    #[test]
    fn pow_x_examples() {
        let r = ring(5, 7);
        let mut c = OpCounters::new();
        assert_eq!(r.pow_x(&big(4), &mut c), res(&r, 2, 2, 0));
        // e = 4 = 100₂: two squarings, no set bits below the MSB
        assert_eq!(c, OpCounters { big_mul: 12, big_mod: 6, exp_bits: 2 });

        let r3 = ring(3, 7);
        let mut c3 = OpCounters::new();
        assert_eq!(r3.pow_x(&big(2), &mut c3), res(&r3, 1, 0, 0));
        assert_eq!(c3.exp_bits, 1);

        // e = 1 is x itself, zero work
        let mut c1 = OpCounters::new();
        assert_eq!(r.pow_x(&big(1), &mut c1), r.x());
        assert_eq!(c1, OpCounters::default());
    }

    #[test]
    fn pow_x_counter_exactness_small_a() {
        // With word-sized a: exactly 6·(L−1) MUL and 3·(L−1) MOD, regardless
        // of set bits (mul_by_x is free), exp_bits = L−1.
        let r = ring(1_000_003, 19);
        for e in [2u64, 3, 7, 340, 1023, 1024, 999_983] {
            let mut c = OpCounters::new();
            r.pow_x(&big(e), &mut c);
            let l = 64 - e.leading_zeros() as u64;
            assert_eq!(c.exp_bits, l - 1, "e={e}");
            assert_eq!(c.big_mul, 6 * (l - 1), "e={e}");
            assert_eq!(c.big_mod, 3 * (l - 1), "e={e}");
        }
    }

    #[test]
    fn pow_x_counter_exactness_big_a() {
        // Multi-word a: squares cost 8 MUL + 3 MOD, mul_by_x costs 1 MUL + 2 MOD.
        let n = BigUint::parse_bytes(b"340282366920938463463374607431768211507", 10).unwrap();
        let a = &n - 1u32;
        let r = CubicRing::new(&n, &a);
        assert!(r.a_word.is_none());
        let mut c = OpCounters::new();
        r.pow_x(&big(0b1101), &mut c); // 3 squares, 2 set bits below MSB
        assert_eq!(c.exp_bits, 3);
        assert_eq!(c.big_mul, 3 * 8 + 2);
        assert_eq!(c.big_mod, 3 * 3 + 2 * 2);
    }

    #[test]
    fn a_reduced_on_construction() {
        let r = ring(5, 7);
        assert_eq!(*r.a(), big(2));
        assert_eq!(r.a_word, Some(2));
    }

    #[test]
    fn known_composite_congruence_x3n_equals_a_xn_plus_a() {
        // n = 13040299 is composite yet satisfies x^(3n) ≡ a·x^n + a
        // for a = 69121405197 (= 7 + k(k−1) at k = 262910).
        let n = big(13040299);
        let a = big(69121405197);
        let r = CubicRing::new(&n, &a);
        let mut c = OpCounters::new();
        let lhs = r.pow_x(&(&n * 3u32), &mut c);
        let xn = r.pow_x(&n, &mut c);
        let am = r.a();
        let rhs = CubicResidue {
            s: &xn.s * am % &n,
            t: &xn.t * am % &n,
            u: (&xn.u * am + am) % &n,
        };
        assert_eq!(lhs, rhs);
    }

    #[test]
    #[should_panic(expected = "pow_x requires e >= 1")]
    fn pow_x_rejects_zero_exponent() {
        let r = ring(5, 7);
        r.pow_x(&BigUint::zero(), &mut OpCounters::new());
    }
}
