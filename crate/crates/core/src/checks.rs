//! Named pass/fail results for the property suites, and the seeded sampling
//! of exact rational test inputs they use.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use serde::Serialize;

use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: bool,
    pub samples: usize,
}

impl PropertyCheck {
    pub fn new(name: impl Into<String>, passed: bool, samples: usize) -> Self {
        PropertyCheck {
            name: name.into(),
            passed,
            samples,
        }
    }
}

pub fn all_passed(checks: &[PropertyCheck]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// Deterministic generator of small exact rationals.
pub struct RationalSampler {
    rng: ChaCha8Rng,
    max_num: i64,
    max_den: i64,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_num: 12,
            max_den: 7,
        }
    }

    pub fn rational(&mut self) -> Q {
        let n = self.rng.gen_range(-self.max_num..=self.max_num);
        let d = self.rng.gen_range(1..=self.max_den);
        Q::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn nonzero_rational(&mut self) -> Q {
        loop {
            let x = self.rational();
            if x != Q::from_integer(0.into()) {
                return x;
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn bits(&mut self) -> u64 {
        self.rng.gen()
    }
}
