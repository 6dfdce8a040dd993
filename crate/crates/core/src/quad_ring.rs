use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::counters::OpCounters;

/// Element p·z + q of Z_n[z]/(z² + 3z + 1), coefficients in [0, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadResidue {
    pub p: BigUint,
    pub q: BigUint,
}

/// The quotient ring Z_n[z]/(z² + 3z + 1), i.e. z² ≡ −3z − 1.
pub struct QuadRing {
    n: BigUint,
    n_sq: BigUint, // n², kept to stay in unsigned arithmetic on subtractions
}

impl QuadRing {
    pub fn new(n: &BigUint) -> Self {
        assert!(*n >= BigUint::from(2u32), "modulus must be >= 2");
        Self { n: n.clone(), n_sq: n * n }
    }

    pub fn n(&self) -> &BigUint {
        &self.n
    }

    pub fn z(&self) -> QuadResidue {
        QuadResidue { p: BigUint::one() % &self.n, q: BigUint::zero() }
    }

    /// (pz + q)² = (2pq − 3p²)·z + (q² − p²); 3 products, 2 reductions.
    pub fn square_step(&self, r: &QuadResidue, c: &mut OpCounters) -> QuadResidue {
        let n = &self.n;
        let pq = &r.p * &r.q;
        let pp = &r.p * &r.p;
        let qq = &r.q * &r.q;
        c.big_mul += 3;
        // offset by 3n² ( > 3p² ) to keep subtractions nonnegative
        let p = ((pq << 1) + &self.n_sq * 3u32 - &pp * 3u32) % n;
        let q = (qq + &self.n_sq - pp) % n;
        c.big_mod += 2;
        c.exp_bits += 1;
        QuadResidue { p, q }
    }

    /// (pz + q)·z = (q − 3p)·z − p; small-constant work only, nothing counted.
    pub fn mul_by_z(&self, r: &QuadResidue, _c: &mut OpCounters) -> QuadResidue {
        let n = &self.n;
        QuadResidue {
            p: (&r.q + n * 3u32 - &r.p * 3u32) % n,
            q: (n - &r.p) % n,
        }
    }

    /// z^e for e >= 1.
    pub fn pow_z(&self, e: &BigUint, c: &mut OpCounters) -> QuadResidue {
        assert!(!e.is_zero(), "pow_z requires e >= 1");
        let mut r = self.z();
        for i in (0..e.bits() - 1).rev() {
            r = self.square_step(&r, c);
            if e.bit(i) {
                r = self.mul_by_z(&r, c);
            }
        }
        r
    }
}
