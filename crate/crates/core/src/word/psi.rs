//! The equivalence between words and annular diagrams.
//!
//! α_i on [s] is the injection p ↦ p (p < i), p + 1 (p ≥ i) with a cup at
//! upper point i; α_i* removes lower point i with a cap; τ is the one-click
//! cyclic shift p ↦ p + 1.

use super::{Generator, Letter, StandardWord, Word};
use crate::diagram::{subsets, AnnDiagram, Diagram, RectDiagram};
use crate::error::{Error, Result};

pub fn generator_diagram(g: &Generator) -> AnnDiagram {
    let s = g.source;
    let pairs = match g.letter {
        Letter::Create(i) => (1..=s).map(|p| (p, if p < i { p } else { p + 1 })).collect(),
        Letter::Annihilate(i) => (1..=s).filter(|&p| p != i).map(|p| (p, if p < i { p } else { p - 1 })).collect(),
        Letter::Rotate(r) => return AnnDiagram::rotation(s, r as i64),
    };
    AnnDiagram::from_pairs(s, g.target(), pairs).expect("generator images are planar")
}

/// Image of a word, computed letter by letter.
pub fn psi(w: &Word) -> AnnDiagram {
    w.generators()
        .iter()
        .rev()
        .fold(AnnDiagram::identity(w.source()), |acc, g| {
            acc.then(&generator_diagram(g)).expect("words are composable")
        })
}

/// Image of a rotation-free morphism as a rectangular diagram.
pub fn psi_rect(w: &Word) -> Result<RectDiagram> {
    psi(w).to_rect().ok_or(Error::NotRectangular)
}

impl StandardWord {
    /// Image under the equivalence, read off directly from the index sets.
    pub fn diagram(&self) -> AnnDiagram {
        let domain = (1..=self.source()).filter(|p| !self.annihilations().contains(p)).collect();
        let image = (1..=self.target()).filter(|p| !self.creations().contains(p)).collect();
        AnnDiagram::new(self.source(), self.target(), domain, image, self.rotation())
            .expect("standard words give valid diagrams")
    }

    /// Index-shifted juxtaposition of two rectangular standard words.
    pub fn tensor(&self, other: &StandardWord) -> Result<StandardWord> {
        if !self.is_rectangular() || !other.is_rectangular() {
            return Err(Error::NotRectangular);
        }
        let (m1, n1) = (self.source(), self.target());
        let mut creations = self.creations().to_vec();
        creations.extend(other.creations().iter().map(|i| i + n1));
        let mut annihilations = self.annihilations().to_vec();
        annihilations.extend(other.annihilations().iter().map(|j| j + m1));
        StandardWord::new(m1 + other.source(), creations, 0, annihilations)
    }
}

/// Caps give the annihilation positions, cups the creation positions and the offset the rotation.
pub fn psi_inverse(d: &AnnDiagram) -> StandardWord {
    StandardWord::new(d.source(), d.cups(), d.offset(), d.caps()).expect("diagram data is standard")
}

pub fn tensor_words(w1: &StandardWord, w2: &StandardWord) -> Result<StandardWord> {
    w1.tensor(w2)
}

/// All standard words [m] → [n], ordered by number of through strings, then annihilation set, creation set, rotation.
pub fn enumerate_standard(m: usize, n: usize) -> Vec<StandardWord> {
    let mut out = Vec::new();
    for t in 0..=m.min(n) {
        let mut js = subsets(m, m - t);
        js.reverse();
        let mut is = subsets(n, n - t);
        is.reverse();
        for j in &js {
            for i in &is {
                for r in 0..t.max(1) {
                    out.push(StandardWord::new(m, i.clone(), r, j.clone()).expect("bounded by construction"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::count_formula;

    #[test]
    fn creation_image() {
        let g = Generator::new(Letter::Create(2), 3).unwrap();
        assert_eq!(generator_diagram(&g).pairs(), vec![(1, 1), (2, 3), (3, 4)]);
        assert_eq!(generator_diagram(&g).cups(), vec![2]);
    }

    #[test]
    fn rotation_image() {
        let d = psi(&"t @4".parse().unwrap());
        assert_eq!(d.offset(), 1);
        assert_eq!(d.pairs(), vec![(1, 2), (2, 3), (3, 4), (4, 1)]);
    }

    #[test]
    fn adjoint_of_creation_is_annihilation() {
        let a = Generator::new(Letter::Create(2), 3).unwrap();
        assert_eq!(generator_diagram(&a).adjoint(), generator_diagram(&a.adjoint()));
    }

    #[test]
    fn empty_matching() {
        let d = AnnDiagram::new(3, 2, vec![], vec![], 0).unwrap();
        let w = psi_inverse(&d);
        assert_eq!((w.annihilations(), w.creations(), w.rotation()), (&[1, 2, 3][..], &[1, 2][..], 0));
    }

    #[test]
    fn roundtrip_generator_pair() {
        let w: Word = "a2 a*1 @3".parse().unwrap();
        let sw = super::super::normalize(&w).unwrap();
        assert_eq!(psi_inverse(&psi(&w)), sw);
        assert_eq!(sw.diagram(), psi(&w));
    }

    #[test]
    fn tensor_of_cups() {
        let a = StandardWord::new(0, vec![1], 0, vec![]).unwrap();
        assert_eq!(tensor_words(&a, &a).unwrap().to_string(), "a2 a1 @0");
    }

    #[test]
    fn standard_counts() {
        assert_eq!(enumerate_standard(0, 0).len(), 1);
        assert_eq!(enumerate_standard(2, 2).len(), 7);
        for m in 0..=5 {
            for n in 0..=5 {
                assert_eq!(enumerate_standard(m, n).len() as u128, count_formula(m, n, None));
            }
        }
    }
}
