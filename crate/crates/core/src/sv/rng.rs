//! Reproducible PRNG for hyperplane coefficients: xorshift64* with the
//! multiplier 0x2545F4914F6CDD1D (shifts 12/25/27). Fixed here so traces
//! are bit-reproducible across implementations; a zero seed is remapped to
//! the odd constant 0x9E3779B97F4A7C15 since xorshift cannot leave state 0.

#[derive(Clone, Debug)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        XorShift64Star {
            state: if seed == 0 { 0x9E3779B97F4A7C15 } else { seed },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform-ish integer in [-bound, bound]: next_u64 mod (2·bound + 1),
    /// shifted. The modulo bias is ~(2B+1)/2^64 and irrelevant here; the
    /// derivation is fixed for reproducibility, not statistics.
    pub fn next_in_band(&mut self, bound: u64) -> i64 {
        let span = 2 * bound + 1;
        let r = self.next_u64() % span;
        r as i64 - bound as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_stream() {
        let mut a = XorShift64Star::new(1);
        let mut b = XorShift64Star::new(1);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn documented_first_values_from_seed_one() {
        // frozen: changing these breaks trace reproducibility
        let mut r = XorShift64Star::new(1);
        assert_eq!(r.next_u64(), 0x47E4CE4B896CDD1D);
        assert_eq!(r.next_u64(), 0xABCFA6A8E079651D);
    }

    #[test]
    fn band_stays_in_range() {
        let mut r = XorShift64Star::new(7);
        for _ in 0..1000 {
            let v = r.next_in_band(10_000);
            assert!((-10_000..=10_000).contains(&v));
        }
    }
}
