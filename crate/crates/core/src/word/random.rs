//! Random composable words for property checks.

use rand::Rng;

use super::{Letter, Word};

/// A random composable word with every intermediate object of size at most `max_size`.
pub fn random_word<R: Rng>(rng: &mut R, max_size: usize, max_len: usize) -> Word {
    let source = rng.gen_range(0..=max_size);
    let len = rng.gen_range(0..=max_len);
    let mut size = source;
    let mut acting = Vec::with_capacity(len);
    for _ in 0..len {
        let mut options = vec![Letter::Rotate(rng.gen_range(1..=3))];
        if size < max_size {
            options.push(Letter::Create(rng.gen_range(1..=size + 1)));
        }
        if size > 0 {
            options.push(Letter::Annihilate(rng.gen_range(1..=size)));
        }
        let l = options[rng.gen_range(0..options.len())];
        size = match l {
            Letter::Create(_) => size + 1,
            Letter::Annihilate(_) => size - 1,
            Letter::Rotate(_) => size,
        };
        acting.push(l);
    }
    acting.reverse();
    Word::new(source, &acting).expect("constructed letter by letter")
}
