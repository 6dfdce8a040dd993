/// 64-bit LCG-plus-shuffle generator used by the random sweep:
/// state' = state·13 + 137 (mod 2⁶⁴), output = state' ^ (state' >> 13) ^ (state' << 13).
/// Fixed default seed makes every sweep reproducible.
pub const DEFAULT_SEED: u64 = 0x1234_5678_1234_5678;

pub fn prng_next(state: u64) -> (u64, u64) {
    let s = state.wrapping_mul(13).wrapping_add(137);
    (s ^ (s >> 13) ^ (s << 13), s)
}

#[derive(Debug, Clone)]
pub struct Prng {
    state: u64,
}

impl Prng {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_value(&mut self) -> u64 {
        let (v, s) = prng_next(self.state);
        self.state = s;
        v
    }
}

impl Default for Prng {
    fn default() -> Self {
        Self::new(DEFAULT_SEED)
    }
}
