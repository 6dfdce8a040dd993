use serde::Serialize;

/// Per-invocation tallies of expensive big-integer work, returned by value
/// alongside results (never global state).
///
/// Counting convention, applied uniformly across the cubic ladder, the scalar
/// ladders, and the Lucas chain:
///
/// * `big_mul` counts products of two full-width operands. Multiplications
///   where one side is a word-sized constant (the reduced `a` when it fits a
///   machine word, 2, 3, a small exponentiation base, the Selfridge D/Q) are
///   excluded — they cost O(size), not a full multiply.
/// * `big_mod` counts reductions of full-width (double-size) products.
///   Reducing a `word × big` product or a sum is O(size) and is not counted.
/// * `exp_bits` counts squaring steps, i.e. exponent bits processed below the
///   most significant one. Per-bit figures are `big_mul / exp_bits` and
///   `big_mod / exp_bits`.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OpCounters {
    pub big_mul: u64,
    pub big_mod: u64,
    pub exp_bits: u64,
}

impl OpCounters {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn absorb(&mut self, other: OpCounters) {
        self.big_mul += other.big_mul;
        self.big_mod += other.big_mod;
        self.exp_bits += other.exp_bits;
    }

    pub fn mul_per_bit(&self) -> f64 {
        self.big_mul as f64 / self.exp_bits.max(1) as f64
    }

    pub fn mod_per_bit(&self) -> f64 {
        self.big_mod as f64 / self.exp_bits.max(1) as f64
    }
}
