//! Stored zeros of the Airy function and its derivative.

use serde::Serialize;

/// Magnitudes `z_n` with `Ai(-z_n) = 0` and `z'_n` with `Ai'(-z'_n) = 0`.
///
/// The first ten of each are stored; higher indices fall back to the
/// standard large-`n` asymptotic forms.
#[derive(Debug, Clone, Serialize)]
pub struct AiryRootTable {
    pub ai_zeros: &'static [f64],
    pub ai_prime_zeros: &'static [f64],
}

#[allow(clippy::excessive_precision)]
const AI_ZEROS: [f64; 10] = [
    2.338_107_410_459_767,
    4.087_949_444_130_971,
    5.520_559_828_095_551,
    6.786_708_090_071_759,
    7.944_133_587_120_853,
    9.022_650_853_340_980,
    10.040_174_341_558_085,
    11.008_524_303_733_262,
    11.936_015_563_236_262,
    12.828_776_752_865_757,
];

#[allow(clippy::excessive_precision)]
const AI_PRIME_ZEROS: [f64; 10] = [
    1.018_792_971_647_471,
    3.248_197_582_179_837,
    4.820_099_211_178_736,
    6.163_307_355_639_487,
    7.372_177_255_047_770,
    8.488_486_734_019_722,
    9.535_449_052_433_547,
    10.527_660_396_957_407,
    11.475_056_633_480_245,
    12.384_788_371_845_747,
];

impl Default for AiryRootTable {
    fn default() -> Self {
        Self::STANDARD
    }
}

impl AiryRootTable {
    pub const STANDARD: AiryRootTable = AiryRootTable {
        ai_zeros: &AI_ZEROS,
        ai_prime_zeros: &AI_PRIME_ZEROS,
    };

    /// `z_n` for `n >= 1`.
    pub fn ai_zero(&self, n: u32) -> f64 {
        assert!(n >= 1, "Airy zeros are indexed from 1");
        match self.ai_zeros.get(n as usize - 1) {
            Some(&z) => z,
            None => {
                let t = 3.0 * std::f64::consts::PI / 8.0 * (4.0 * n as f64 - 1.0);
                t.powf(2.0 / 3.0) * (1.0 + 5.0 / 48.0 / (t * t))
            }
        }
    }

    /// `z'_n` for `n >= 1`.
    pub fn ai_prime_zero(&self, n: u32) -> f64 {
        assert!(n >= 1, "Airy zeros are indexed from 1");
        match self.ai_prime_zeros.get(n as usize - 1) {
            Some(&z) => z,
            None => {
                let t = 3.0 * std::f64::consts::PI / 8.0 * (4.0 * n as f64 - 3.0);
                t.powf(2.0 / 3.0) * (1.0 - 7.0 / 48.0 / (t * t))
            }
        }
    }
}
