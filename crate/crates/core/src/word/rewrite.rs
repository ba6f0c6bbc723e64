//! Normalization of words by an oriented rewrite system.
//!
//! Rules, tried in this order at the leftmost position where they match
//! (`X Y` means X is written left of Y, so Y acts first, on [s]):
//!
//! * cancellation: `a*i aj` becomes nothing (i = j), `a(j-1) a*i` (i < j) or `aj a*(i-1)` (i > j);
//! * sorting: `ax ay` with x ≤ y becomes `a(y+1) ax`; `a*x a*y` with x ≥ y becomes `a*y a*(x+1)`;
//! * rotation migration: `a*i t^r` becomes `t a*(i-1) t^(r-1)` (i ≥ 2) or `a*s t^(r-1)` (i = 1),
//!   and `t^r aj` becomes `t^(r-1) a(j+1) t` (j ≤ s) or `t^(r-1) a1` (j = s + 1);
//! * exponent reduction: `t^r` is taken modulo the size of its object and adjacent powers merge.

use super::{Letter, StandardWord, Word};
use crate::error::{Error, Result};

pub const DEFAULT_STEP_LIMIT: usize = 100_000;

/// Source sizes of each letter, leftmost first.
fn sources(m: usize, letters: &[Letter]) -> Vec<usize> {
    let mut out = vec![0; letters.len()];
    let mut size = m;
    for (k, l) in letters.iter().enumerate().rev() {
        out[k] = size;
        size = match l {
            Letter::Create(_) => size + 1,
            Letter::Annihilate(_) => size - 1,
            Letter::Rotate(_) => size,
        };
    }
    out
}

fn rot(r: usize) -> Option<Letter> {
    (r > 0).then_some(Letter::Rotate(r))
}

fn splice(letters: &[Letter], at: usize, width: usize, with: impl IntoIterator<Item = Option<Letter>>) -> Vec<Letter> {
    let mut out = letters[..at].to_vec();
    out.extend(with.into_iter().flatten());
    out.extend_from_slice(&letters[at + width..]);
    out
}

fn cancellation(letters: &[Letter]) -> Option<Vec<Letter>> {
    letters.windows(2).enumerate().find_map(|(k, w)| match (w[0], w[1]) {
        (Letter::Annihilate(i), Letter::Create(j)) => Some(if i == j {
            splice(letters, k, 2, [])
        } else if i < j {
            splice(letters, k, 2, [Some(Letter::Create(j - 1)), Some(Letter::Annihilate(i))])
        } else {
            splice(letters, k, 2, [Some(Letter::Create(j)), Some(Letter::Annihilate(i - 1))])
        }),
        _ => None,
    })
}

fn sorting(letters: &[Letter]) -> Option<Vec<Letter>> {
    letters.windows(2).enumerate().find_map(|(k, w)| match (w[0], w[1]) {
        (Letter::Create(x), Letter::Create(y)) if x <= y => {
            Some(splice(letters, k, 2, [Some(Letter::Create(y + 1)), Some(Letter::Create(x))]))
        }
        (Letter::Annihilate(x), Letter::Annihilate(y)) if x >= y => {
            Some(splice(letters, k, 2, [Some(Letter::Annihilate(y)), Some(Letter::Annihilate(x + 1))]))
        }
        _ => None,
    })
}

fn migration(letters: &[Letter], src: &[usize]) -> Option<Vec<Letter>> {
    (0..letters.len().saturating_sub(1)).find_map(|k| match (letters[k], letters[k + 1]) {
        (Letter::Annihilate(i), Letter::Rotate(r)) => {
            let s = src[k + 1];
            let r = r % s;
            if r == 0 {
                None
            } else if i >= 2 {
                Some(splice(letters, k, 2, [rot(1), Some(Letter::Annihilate(i - 1)), rot(r - 1)]))
            } else {
                Some(splice(letters, k, 2, [Some(Letter::Annihilate(s)), rot(r - 1)]))
            }
        }
        (Letter::Rotate(r), Letter::Create(j)) => {
            let s = src[k + 1];
            let r = r % (s + 1);
            if r == 0 {
                None
            } else if j <= s {
                Some(splice(letters, k, 2, [rot(r - 1), Some(Letter::Create(j + 1)), rot(1)]))
            } else {
                Some(splice(letters, k, 2, [rot(r - 1), Some(Letter::Create(1))]))
            }
        }
        _ => None,
    })
}

fn reduction(letters: &[Letter], src: &[usize]) -> Option<Vec<Letter>> {
    for k in 0..letters.len() {
        if let Letter::Rotate(r) = letters[k] {
            let s = src[k].max(1);
            if r % s == 0 {
                return Some(splice(letters, k, 1, []));
            }
            if r >= s {
                return Some(splice(letters, k, 1, [rot(r % s)]));
            }
            if let Some(Letter::Rotate(r2)) = letters.get(k + 1) {
                return Some(splice(letters, k, 2, [rot((r + r2) % s)]));
            }
        }
    }
    None
}

fn step(m: usize, letters: &[Letter]) -> Option<Vec<Letter>> {
    let src = sources(m, letters);
    cancellation(letters)
        .or_else(|| sorting(letters))
        .or_else(|| migration(letters, &src))
        .or_else(|| reduction(letters, &src))
}

fn read_standard(m: usize, letters: &[Letter]) -> Result<StandardWord> {
    let mut creations = Vec::new();
    let mut annihilations = Vec::new();
    let mut rotation = 0;
    let mut phase = 0;
    for &l in letters {
        match (l, phase) {
            (Letter::Create(i), 0) => creations.push(i),
            (Letter::Rotate(r), 0) => {
                rotation = r;
                phase = 1;
            }
            (Letter::Annihilate(j), _) => {
                annihilations.push(j);
                phase = 2;
            }
            _ => return Err(Error::MalformedWord(format!("irreducible word is not standard: {letters:?}"))),
        }
    }
    creations.reverse();
    StandardWord::new(m, creations, rotation, annihilations)
}

/// Normal form with an explicit bound on the number of rewrite steps.
pub fn normalize_with_limit(w: &Word, limit: usize) -> Result<StandardWord> {
    let m = w.source();
    let mut letters = w.letters();
    for _ in 0..limit {
        match step(m, &letters) {
            Some(next) => letters = next,
            None => return read_standard(m, &letters),
        }
    }
    Err(Error::RewriteLimit(limit))
}

pub fn normalize(w: &Word) -> Result<StandardWord> {
    normalize_with_limit(w, DEFAULT_STEP_LIMIT)
}

/// Every intermediate word of the rewriting, starting with `w` and ending with its normal form.
pub fn normalize_trace(w: &Word) -> Result<Vec<Word>> {
    let m = w.source();
    let mut trace = vec![w.clone()];
    let mut letters = w.letters();
    for _ in 0..DEFAULT_STEP_LIMIT {
        match step(m, &letters) {
            Some(next) => {
                letters = next;
                trace.push(Word::new(m, &letters)?);
            }
            None => return Ok(trace),
        }
    }
    Err(Error::RewriteLimit(DEFAULT_STEP_LIMIT))
}

/// Normal form of `w1` followed by `w2`.
pub fn compose_words(w1: &Word, w2: &Word) -> Result<StandardWord> {
    normalize(&w1.then(w2)?)
}
