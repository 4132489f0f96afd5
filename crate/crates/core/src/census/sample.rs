//! Monte-Carlo estimate of the singular fraction among weight-`k` unital rows.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::circulant::ResidueTable;
use crate::cyclo::CyclotomicCache;

/// Trials drawn from one generator stream.
const CHUNK: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleOutcome {
    pub hits: u64,
    pub trials: u64,
}

impl SampleOutcome {
    pub fn rate(&self) -> f64 {
        self.hits as f64 / self.trials as f64
    }
}

/// Draws `trials` uniform `k`-subsets of `{0..n-1}`. Chunk `i` uses stream
/// `i` of a generator seeded with `seed`, so the result does not depend on
/// the number of worker threads.
pub fn sample_singularity(n: usize, k: usize, trials: u64, seed: u64) -> SampleOutcome {
    assert!(k <= n, "cannot choose {k} of {n} positions");
    let cache = CyclotomicCache::new();
    let table = ResidueTable::new(n, &cache);
    let chunks = trials.div_ceil(CHUNK);
    let hits = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk);
            let len = CHUNK.min(trials - chunk * CHUNK);
            (0..len)
                .filter(|_| {
                    let support = sample(&mut rng, n, k).into_vec();
                    table.is_singular_support(&support)
                })
                .count() as u64
        })
        .sum();
    SampleOutcome { hits, trials }
}
