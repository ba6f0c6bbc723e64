//! The module Hom(b, ·) of diagrams out of a fixed object, in the fully dotted basis.

use super::SequenceModule;
use crate::diagram::{then_lin, to_dotted_basis, DecoratedDiagram, Diagram, DiagramKind};
use crate::diagram::{enumerate_ann, enumerate_rect};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::ExactMatrix;
use crate::word::{generator_diagram, Generator, Letter};

fn build<D: Diagram>(
    kind: DiagramKind,
    m_max: usize,
    bases: Vec<Vec<D>>,
    lift: impl Fn(&Generator) -> Result<D>,
) -> Result<SequenceModule> {
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let action = |letter: Letter, m: usize| -> Result<ExactMatrix> {
        let g = Generator::new(letter, m)?;
        let to = g.target();
        let gen = LinComb::basis(lift(&g)?);
        let mut a = ExactMatrix::zeros(dims[to], dims[m]);
        for (c, x) in bases[m].iter().enumerate() {
            let image = to_dotted_basis(&then_lin(&DecoratedDiagram::all_dotted(x.clone()).expand(), &gen)?);
            for (d, v) in image.iter() {
                if d.dotted.len() != d.base.through_count() {
                    return Err(Error::InvalidSpec("image left the fully dotted span".into()));
                }
                let r = bases[to].iter().position(|y| *y == d.base).expect("basis diagram");
                a.set(r, c, v.clone());
            }
        }
        Ok(a)
    };
    let create = (0..m_max)
        .map(|m| (1..=m + 1).map(|i| action(Letter::Create(i), m)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let annihilate = (1..=m_max)
        .map(|m| (1..=m).map(|j| action(Letter::Annihilate(j), m)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let rotate = match kind {
        DiagramKind::Ann => Some((0..=m_max).map(|m| action(Letter::Rotate(1), m)).collect::<Result<_>>()?),
        DiagramKind::Rect => None,
    };
    let gram = dims.iter().map(|&d| ExactMatrix::identity(d)).collect();
    Ok(SequenceModule { kind, m_max, dims, gram, create, annihilate, rotate })
}

/// Hom(b, m) for m ≤ m_max with the fully dotted diagrams as an orthonormal basis.
/// The form is ⟨x, y⟩ = φ(y* x) for the trace φ on End(b) that is 1 on dotted
/// partial identities and 0 on the other dotted basis elements.
pub fn hom_module(kind: DiagramKind, b: usize, m_max: usize) -> Result<SequenceModule> {
    match kind {
        DiagramKind::Rect => {
            let bases = (0..=m_max).map(|m| enumerate_rect(b, m, None)).collect();
            build(kind, m_max, bases, |g| {
                generator_diagram(g).to_rect().ok_or(Error::NotRectangular)
            })
        }
        DiagramKind::Ann => {
            let bases = (0..=m_max).map(|m| enumerate_ann(b, m, None)).collect();
            build(kind, m_max, bases, |g| Ok(generator_diagram(g)))
        }
    }
}
