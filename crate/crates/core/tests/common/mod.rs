#![allow(dead_code)]

pub use gicarkit::word::random_word;
use gicarkit::word::Word;
use rand::Rng;

/// A random word that starts at `source`.
pub fn random_word_from<R: Rng>(rng: &mut R, source: usize, max_size: usize, max_len: usize) -> Word {
    loop {
        let w = random_word(rng, max_size, max_len);
        if w.source() == source {
            return w;
        }
    }
}
