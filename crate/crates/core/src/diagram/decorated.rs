use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::Diagram;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::CycScalar;

/// A basis diagram some of whose through strings carry a dot.
///
/// A dotted string stands for the identity string minus the broken (cap over cup) string.
/// Dotted strings are named by their lower endpoint.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DecoratedDiagram<D> {
    #[serde(flatten)]
    pub base: D,
    pub dotted: Vec<usize>,
}

impl<D: Diagram> DecoratedDiagram<D> {
    pub fn new(base: D, mut dotted: Vec<usize>) -> Result<Self> {
        dotted.sort_unstable();
        dotted.dedup();
        let domain = base.domain();
        if let Some(p) = dotted.iter().find(|p| !domain.contains(p)) {
            return Err(Error::InvalidDiagram(format!("dot on {p}, which is not a through string")));
        }
        Ok(DecoratedDiagram { base, dotted })
    }

    pub fn plain(base: D) -> Self {
        DecoratedDiagram { base, dotted: vec![] }
    }

    pub fn all_dotted(base: D) -> Self {
        let dotted = base.domain();
        DecoratedDiagram { base, dotted }
    }

    /// Inclusion–exclusion expansion into plain diagrams.
    pub fn expand(&self) -> LinComb<D> {
        let mut out = LinComb::zero();
        for size in 0..=self.dotted.len() {
            let sign = CycScalar::from_int(if size % 2 == 0 { 1 } else { -1 });
            for broken in self.dotted.iter().copied().combinations(size) {
                out.add_term(sign.clone(), self.base.remove_strings(&broken));
            }
        }
        out
    }
}

pub fn expand_decorated<D: Diagram>(d: &DecoratedDiagram<D>) -> LinComb<D> {
    d.expand()
}

impl<D: Diagram> fmt::Display for DecoratedDiagram<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.dotted.iter().map(|p| p.to_string()).collect();
        write!(f, "{}[dots {}]", self.base, d.join(","))
    }
}

/// Rewrites a plain combination in the basis of fully dotted diagrams:
/// a plain diagram is the sum of the fully dotted diagrams obtained by breaking any subset of its strings.
pub fn to_dotted_basis<D: Diagram>(x: &LinComb<D>) -> LinComb<DecoratedDiagram<D>> {
    let mut out = LinComb::zero();
    for (d, c) in x.iter() {
        let dom = d.domain();
        for size in 0..=dom.len() {
            for broken in dom.iter().copied().combinations(size) {
                out.add_term(c.clone(), DecoratedDiagram::all_dotted(d.remove_strings(&broken)));
            }
        }
    }
    out
}

pub fn from_dotted_basis<D: Diagram>(x: &LinComb<DecoratedDiagram<D>>) -> LinComb<D> {
    let mut out = LinComb::zero();
    for (d, c) in x.iter() {
        out.add_assign_scaled(c, &d.expand());
    }
    out
}

/// Composite of two fully dotted diagrams, `first` applied before `second`.
///
/// A dotted string meeting a cap or cup vanishes, so the composite is zero unless the
/// image of `first` is the domain of `second`; otherwise it is the fully dotted composite.
pub fn dotted_then<D: Diagram>(first: &D, second: &D) -> Result<Option<D>> {
    if first.target() != second.source() {
        return Err(Error::BoundaryMismatch { left: first.target(), right: second.source() });
    }
    if first.image() != second.domain() {
        return Ok(None);
    }
    first.then(second).map(Some)
}

/// Product of combinations of fully dotted diagrams, `first` applied before `second`.
pub fn dotted_then_lin<D: Diagram>(
    first: &LinComb<DecoratedDiagram<D>>,
    second: &LinComb<DecoratedDiagram<D>>,
) -> Result<LinComb<DecoratedDiagram<D>>> {
    first.bilinear(second, |a, b| {
        Ok(dotted_then(&a.base, &b.base)?.map(|d| (CycScalar::one(), DecoratedDiagram::all_dotted(d))))
    })
}

pub fn dotted_adjoint_lin<D: Diagram>(x: &LinComb<DecoratedDiagram<D>>) -> LinComb<DecoratedDiagram<D>> {
    x.iter().map(|(d, c)| (c.conj(), DecoratedDiagram::all_dotted(d.base.adjoint()))).collect()
}
