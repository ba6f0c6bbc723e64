//! Words in the generators α_i, α_i*, τ of the annular GICAR category.
//!
//! Words are written in composition order: the rightmost letter acts first.
//! The text form `a3 a1 t^2 a*2 a*4 @5` is α₃α₁τ²α₂*α₄* on the object [5].

mod psi;
mod random;
mod relations;
mod rewrite;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use psi::{enumerate_standard, generator_diagram, psi, psi_inverse, psi_rect, tensor_words};
pub use random::random_word;
pub use relations::{defining_relations, Relation};
pub use rewrite::{compose_words, normalize, normalize_trace, normalize_with_limit, DEFAULT_STEP_LIMIT};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// α_i, inserting a new point at position i.
    Create(usize),
    /// α_i*, removing point i.
    Annihilate(usize),
    /// τ^r.
    Rotate(usize),
}

/// A letter together with the size of the object it acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub letter: Letter,
    pub source: usize,
}

impl Generator {
    pub fn new(letter: Letter, source: usize) -> Result<Self> {
        match letter {
            Letter::Create(i) if i == 0 || i > source + 1 => {
                Err(Error::MalformedWord(format!("a{i} is not defined on [{source}]")))
            }
            Letter::Annihilate(i) if i == 0 || i > source => {
                Err(Error::MalformedWord(format!("a*{i} is not defined on [{source}]")))
            }
            _ => Ok(Generator { letter, source }),
        }
    }

    pub fn target(&self) -> usize {
        match self.letter {
            Letter::Create(_) => self.source + 1,
            Letter::Annihilate(_) => self.source - 1,
            Letter::Rotate(_) => self.source,
        }
    }

    pub fn adjoint(&self) -> Generator {
        let letter = match self.letter {
            Letter::Create(i) => Letter::Annihilate(i),
            Letter::Annihilate(i) => Letter::Create(i),
            Letter::Rotate(r) => {
                let s = self.source.max(1);
                Letter::Rotate((s - r % s) % s)
            }
        };
        Generator { letter, source: self.target() }
    }
}

/// A composable sequence of generators; `letters[0]` is written leftmost and acts last.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    source: usize,
    letters: Vec<Generator>,
}

impl Word {
    pub fn new(source: usize, letters: &[Letter]) -> Result<Self> {
        let mut size = source;
        let mut gens = Vec::with_capacity(letters.len());
        for &l in letters.iter().rev() {
            let g = Generator::new(l, size)?;
            size = g.target();
            gens.push(g);
        }
        gens.reverse();
        Ok(Word { source, letters: gens })
    }

    pub fn identity(m: usize) -> Self {
        Word { source: m, letters: vec![] }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.letters.first().map_or(self.source, Generator::target)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.letters
    }

    pub fn letters(&self) -> Vec<Letter> {
        self.letters.iter().map(|g| g.letter).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `next`, i.e. the written word `next · self`.
    pub fn then(&self, next: &Word) -> Result<Word> {
        if self.target() != next.source {
            return Err(Error::BoundaryMismatch { left: self.target(), right: next.source });
        }
        let mut letters = next.letters.clone();
        letters.extend(self.letters.iter().copied());
        Ok(Word { source: self.source, letters })
    }

    /// Reversed word with every letter starred.
    pub fn adjoint(&self) -> Word {
        let letters = self.letters.iter().rev().map(Generator::adjoint).collect();
        Word { source: self.target(), letters }
    }

    /// True when no rotation letter occurs.
    pub fn is_rotation_free(&self) -> bool {
        self.letters.iter().all(|g| !matches!(g.letter, Letter::Rotate(_)))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Create(i) => write!(f, "a{i}"),
            Letter::Annihilate(i) => write!(f, "a*{i}"),
            Letter::Rotate(1) => write!(f, "t"),
            Letter::Rotate(r) => write!(f, "t^{r}"),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.letters {
            write!(f, "{} ", g.letter)?;
        }
        write!(f, "@{}", self.source)
    }
}

fn parse_index(s: &str, token: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("bad index in {token:?}")))
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(tok: &str) -> Result<Self> {
        if let Some(rest) = tok.strip_prefix("a*") {
            Ok(Letter::Annihilate(parse_index(rest, tok)?))
        } else if let Some(rest) = tok.strip_prefix('a') {
            Ok(Letter::Create(parse_index(rest, tok)?))
        } else if tok == "t" {
            Ok(Letter::Rotate(1))
        } else if let Some(rest) = tok.strip_prefix("t^") {
            Ok(Letter::Rotate(parse_index(rest, tok)?))
        } else {
            Err(Error::Parse(format!("unknown letter {tok:?}")))
        }
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut source = None;
        for tok in s.split_whitespace() {
            if let Some(rest) = tok.strip_prefix('@') {
                if source.is_some() {
                    return Err(Error::Parse("source object given twice".into()));
                }
                source = Some(parse_index(rest, tok)?);
            } else if tok != "id" {
                if source.is_some() {
                    return Err(Error::Parse("letters after the source marker".into()));
                }
                letters.push(tok.parse()?);
            }
        }
        let source = source.ok_or_else(|| Error::Parse("missing source object @m".into()))?;
        Word::new(source, &letters)
    }
}

/// The normal form α_{i_k}⋯α_{i_1} τ^r α*_{j_1}⋯α*_{j_ℓ}.
///
/// `annihilations` are the cap positions on [m], `creations` the cup positions
/// on the target, and 0 ≤ r < m − ℓ (r = 0 when m − ℓ ≤ 1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "StandardRepr", into = "StandardRepr")]
pub struct StandardWord {
    m: usize,
    creations: Vec<usize>,
    rotation: usize,
    annihilations: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct StandardRepr {
    m: usize,
    n: usize,
    creations: Vec<usize>,
    rotation: usize,
    annihilations: Vec<usize>,
}

impl From<StandardWord> for StandardRepr {
    fn from(w: StandardWord) -> Self {
        StandardRepr {
            m: w.m,
            n: w.target(),
            creations: w.creations,
            rotation: w.rotation,
            annihilations: w.annihilations,
        }
    }
}

impl TryFrom<StandardRepr> for StandardWord {
    type Error = Error;
    fn try_from(r: StandardRepr) -> Result<Self> {
        let w = StandardWord::new(r.m, r.creations, r.rotation, r.annihilations)?;
        if w.target() != r.n {
            return Err(Error::MalformedWord(format!("declared target {} but the word ends on [{}]", r.n, w.target())));
        }
        Ok(w)
    }
}

fn strictly_increasing_within(v: &[usize], bound: usize) -> bool {
    v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|&x| x >= 1 && x <= bound)
}

impl StandardWord {
    pub fn new(m: usize, creations: Vec<usize>, rotation: usize, annihilations: Vec<usize>) -> Result<Self> {
        if !strictly_increasing_within(&annihilations, m) {
            return Err(Error::MalformedWord(format!("annihilation positions {annihilations:?} on [{m}]")));
        }
        let t = m - annihilations.len();
        let n = t + creations.len();
        if !strictly_increasing_within(&creations, n) {
            return Err(Error::MalformedWord(format!("creation positions {creations:?} on [{n}]")));
        }
        if rotation >= t.max(1) {
            return Err(Error::MalformedWord(format!("rotation exponent {rotation} not below {}", t.max(1))));
        }
        Ok(StandardWord { m, creations, rotation, annihilations })
    }

    pub fn identity(m: usize) -> Self {
        StandardWord { m, creations: vec![], rotation: 0, annihilations: vec![] }
    }

    pub fn source(&self) -> usize {
        self.m
    }

    pub fn target(&self) -> usize {
        self.m - self.annihilations.len() + self.creations.len()
    }

    /// Number of through strings, the size of the object τ acts on.
    pub fn middle(&self) -> usize {
        self.m - self.annihilations.len()
    }

    pub fn creations(&self) -> &[usize] {
        &self.creations
    }

    pub fn annihilations(&self) -> &[usize] {
        &self.annihilations
    }

    pub fn rotation(&self) -> usize {
        self.rotation
    }

    pub fn is_rectangular(&self) -> bool {
        self.rotation == 0
    }

    /// Number of α and α* letters.
    pub fn length(&self) -> usize {
        self.creations.len() + self.annihilations.len()
    }

    pub fn to_word(&self) -> Word {
        let mut letters: Vec<Letter> = self.creations.iter().rev().map(|&i| Letter::Create(i)).collect();
        if self.rotation > 0 {
            letters.push(Letter::Rotate(self.rotation));
        }
        letters.extend(self.annihilations.iter().map(|&j| Letter::Annihilate(j)));
        Word::new(self.m, &letters).expect("standard words are well formed")
    }
}

impl fmt::Display for StandardWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

impl FromStr for StandardWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        normalize(&s.parse()?)
    }
}
