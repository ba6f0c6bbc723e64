//! Basis diagrams of the rectangular and annular planar rook categories.
//!
//! A diagram is stored as the partial injection traced out by its through
//! strings. Lower (inner) points outside the domain carry caps, upper (outer)
//! points outside the image carry cups.

mod annular;
mod count;
mod decorated;
mod rect;

use std::fmt::{Debug, Display};

use serde::{Deserialize, Serialize};

pub use annular::AnnDiagram;
pub use count::{binomial, count_formula, count_total, rect_count, rect_count_total};
pub use decorated::{
    dotted_adjoint_lin, dotted_then, dotted_then_lin, expand_decorated, from_dotted_basis, to_dotted_basis, DecoratedDiagram,
};
pub use rect::RectDiagram;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::CycScalar;

/// Operations shared by rectangular and annular basis diagrams.
pub trait Diagram: Clone + Ord + Debug + Display {
    fn source(&self) -> usize;
    fn target(&self) -> usize;
    /// Through strings as (lower point, upper point), sorted by lower point.
    fn pairs(&self) -> Vec<(usize, usize)>;
    fn from_pairs(m: usize, n: usize, pairs: Vec<(usize, usize)>) -> Result<Self>;
    fn identity(n: usize) -> Self;

    fn through_count(&self) -> usize {
        self.pairs().len()
    }

    fn domain(&self) -> Vec<usize> {
        self.pairs().iter().map(|p| p.0).collect()
    }

    fn image(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.pairs().iter().map(|p| p.1).collect();
        v.sort_unstable();
        v
    }

    /// Lower points not on a through string.
    fn caps(&self) -> Vec<usize> {
        let d = self.domain();
        (1..=self.source()).filter(|p| !d.contains(p)).collect()
    }

    /// Upper points not on a through string.
    fn cups(&self) -> Vec<usize> {
        let im = self.image();
        (1..=self.target()).filter(|p| !im.contains(p)).collect()
    }

    /// `self` followed by `next`: the composite partial function next ∘ self.
    fn then(&self, next: &Self) -> Result<Self> {
        if self.target() != next.source() {
            return Err(Error::BoundaryMismatch { left: self.target(), right: next.source() });
        }
        let second = next.pairs();
        let pairs = self
            .pairs()
            .into_iter()
            .filter_map(|(a, b)| second.iter().find(|q| q.0 == b).map(|q| (a, q.1)))
            .collect();
        Self::from_pairs(self.source(), next.target(), pairs)
    }

    fn adjoint(&self) -> Self {
        let pairs = self.pairs().into_iter().map(|(a, b)| (b, a)).collect();
        Self::from_pairs(self.target(), self.source(), pairs).expect("inverse of a valid diagram is valid")
    }

    /// The same diagram with the strings starting at the given lower points broken into a cap and a cup.
    fn remove_strings(&self, lower: &[usize]) -> Self {
        let pairs = self.pairs().into_iter().filter(|p| !lower.contains(&p.0)).collect();
        Self::from_pairs(self.source(), self.target(), pairs).expect("sub-injection of a valid diagram is valid")
    }
}

/// Composite of linear combinations, `first` applied before `second`.
pub fn then_lin<D: Diagram>(first: &LinComb<D>, second: &LinComb<D>) -> Result<LinComb<D>> {
    first.bilinear(second, |a, b| Ok(Some((CycScalar::one(), a.then(b)?))))
}

pub fn adjoint_lin<D: Diagram>(x: &LinComb<D>) -> LinComb<D> {
    x.iter().map(|(d, c)| (c.conj(), d.adjoint())).collect()
}

/// Rectangular composition; `f` is applied first.
pub fn compose_rect(f: &RectDiagram, g: &RectDiagram) -> Result<RectDiagram> {
    f.then(g)
}

/// Annular composition; `f` is applied first.
pub fn compose_ann(f: &AnnDiagram, g: &AnnDiagram) -> Result<AnnDiagram> {
    f.then(g)
}

pub fn tensor_rect(f: &RectDiagram, g: &RectDiagram) -> RectDiagram {
    f.tensor(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramKind {
    Rect,
    Ann,
}

impl std::str::FromStr for DiagramKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rect" => Ok(DiagramKind::Rect),
            "ann" => Ok(DiagramKind::Ann),
            other => Err(Error::Parse(format!("unknown diagram kind {other:?}"))),
        }
    }
}

/// Either kind of basis diagram, as read from or written to JSON.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum AnyDiagram {
    Rect(RectDiagram),
    Ann(AnnDiagram),
}

#[derive(Serialize, Deserialize)]
pub(crate) struct DiagramRepr {
    pub kind: DiagramKind,
    pub m: usize,
    pub n: usize,
    pub through: Vec<(usize, usize)>,
    #[serde(default)]
    pub offset: usize,
}

impl Serialize for AnyDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            AnyDiagram::Rect(d) => d.serialize(s),
            AnyDiagram::Ann(d) => d.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for AnyDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = DiagramRepr::deserialize(d)?;
        match repr.kind {
            DiagramKind::Rect => RectDiagram::try_from(repr).map(AnyDiagram::Rect).map_err(D::Error::custom),
            DiagramKind::Ann => AnnDiagram::try_from(repr).map(AnyDiagram::Ann).map_err(D::Error::custom),
        }
    }
}

impl AnyDiagram {
    pub fn to_ann(&self) -> AnnDiagram {
        match self {
            AnyDiagram::Rect(d) => d.to_ann(),
            AnyDiagram::Ann(d) => d.clone(),
        }
    }

    pub fn compose(&self, next: &AnyDiagram) -> Result<AnyDiagram> {
        match (self, next) {
            (AnyDiagram::Rect(a), AnyDiagram::Rect(b)) => Ok(AnyDiagram::Rect(a.then(b)?)),
            _ => Ok(AnyDiagram::Ann(self.to_ann().then(&next.to_ann())?)),
        }
    }
}

impl Display for AnyDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AnyDiagram::Rect(d) => write!(f, "{d}"),
            AnyDiagram::Ann(d) => write!(f, "{d}"),
        }
    }
}

/// All k-element subsets of {1..n} in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (1..=n).combinations(k).collect()
}

/// Subsets of {1..n} ordered by (size, lexicographic).
pub fn all_subsets(n: usize) -> Vec<Vec<usize>> {
    (0..=n).flat_map(|k| subsets(n, k)).collect()
}

/// Basis diagrams in canonical order: by through-string count, then domain, image and offset.
pub fn enumerate_rect(m: usize, n: usize, k: Option<usize>) -> Vec<RectDiagram> {
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=m.min(n)).collect(),
    };
    let mut out = Vec::new();
    for t in ks {
        for s in subsets(m, t) {
            for u in subsets(n, t) {
                let pairs = s.iter().copied().zip(u.iter().copied()).collect();
                out.push(RectDiagram::from_pairs(m, n, pairs).expect("monotone by construction"));
            }
        }
    }
    out
}

pub fn enumerate_ann(m: usize, n: usize, k: Option<usize>) -> Vec<AnnDiagram> {
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..=m.min(n)).collect(),
    };
    let mut out = Vec::new();
    for t in ks {
        for s in subsets(m, t) {
            for u in subsets(n, t) {
                for o in 0..t.max(1) {
                    out.push(AnnDiagram::new(m, n, s.clone(), u.clone(), o).expect("valid by construction"));
                }
            }
        }
    }
    out
}

pub fn enumerate(kind: DiagramKind, m: usize, n: usize, k: Option<usize>) -> Vec<AnyDiagram> {
    match kind {
        DiagramKind::Rect => enumerate_rect(m, n, k).into_iter().map(AnyDiagram::Rect).collect(),
        DiagramKind::Ann => enumerate_ann(m, n, k).into_iter().map(AnyDiagram::Ann).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rook_example_from_matrix_product() {
        // x·y means x after y, so g·f is f first
        let f = RectDiagram::from_pairs(3, 3, vec![(2, 1), (3, 3)]).unwrap();
        let g = RectDiagram::from_pairs(3, 3, vec![(1, 2)]).unwrap();
        let gf = compose_rect(&f, &g).unwrap();
        assert_eq!(gf.pairs(), vec![(2, 2)]);
        // the displayed product of the matrices of g and f, read with the other factor first
        let fg = compose_rect(&g, &f).unwrap();
        assert_eq!(fg.pairs(), vec![(1, 1)]);
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_ann(2, 2, Some(1)).len(), 4);
        assert_eq!(enumerate_rect(2, 2, None).len(), 6);
        assert_eq!(enumerate_ann(3, 3, None).len(), 31);
    }

    #[test]
    fn rotation_inverse() {
        let r = AnnDiagram::rotation(5, 1);
        let r4 = AnnDiagram::rotation(5, 4);
        assert_eq!(compose_ann(&r, &r4).unwrap(), AnnDiagram::identity(5));
    }

    #[test]
    fn tensor_cap_cup() {
        let cap = RectDiagram::from_pairs(1, 0, vec![]).unwrap();
        let cup = RectDiagram::from_pairs(0, 1, vec![]).unwrap();
        let t = tensor_rect(&cap, &cup);
        assert_eq!((t.source(), t.target(), t.through_count()), (1, 1, 0));
    }

    #[test]
    fn boundary_mismatch() {
        let a = RectDiagram::identity(2);
        let b = RectDiagram::identity(3);
        assert!(matches!(a.then(&b), Err(Error::BoundaryMismatch { .. })));
    }

    #[test]
    fn json_shape() {
        let d = AnnDiagram::rotation(3, 1);
        let v = serde_json::to_value(AnyDiagram::Ann(d.clone())).unwrap();
        assert_eq!(v, serde_json::json!({"kind":"ann","m":3,"n":3,"through":[[1,2],[2,3],[3,1]],"offset":1}));
        let back: AnyDiagram = serde_json::from_value(v).unwrap();
        assert_eq!(back, AnyDiagram::Ann(d));
    }
}
