use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Diagram, DiagramKind, DiagramRepr, RectDiagram};
use crate::error::{Error, Result};

/// A cyclic-order-preserving partial injection ℤ/m ⇀ ℤ/n.
///
/// Stored as domain S = s₀<…<s_{t-1}, image T = u₀<…<u_{t-1} and an offset o,
/// with sⱼ ↦ u_{(j+o) mod t}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnnDiagram {
    m: usize,
    n: usize,
    domain: Vec<usize>,
    image: Vec<usize>,
    offset: usize,
}

fn check_strict(points: &[usize], bound: usize) -> Result<()> {
    if points.iter().any(|&p| p == 0 || p > bound) {
        return Err(Error::InvalidDiagram(format!("point outside 1..={bound}")));
    }
    if points.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidDiagram("boundary points must be strictly increasing".into()));
    }
    Ok(())
}

impl AnnDiagram {
    pub fn new(m: usize, n: usize, domain: Vec<usize>, image: Vec<usize>, offset: usize) -> Result<Self> {
        check_strict(&domain, m)?;
        check_strict(&image, n)?;
        if domain.len() != image.len() {
            return Err(Error::InvalidDiagram(format!(
                "{} lower and {} upper string ends",
                domain.len(),
                image.len()
            )));
        }
        if offset >= domain.len().max(1) {
            return Err(Error::InvalidDiagram(format!("offset {offset} with {} strings", domain.len())));
        }
        Ok(AnnDiagram { m, n, domain, image, offset })
    }

    /// τ^power on [n]: the full cyclic shift p ↦ p + power.
    pub fn rotation(n: usize, power: i64) -> Self {
        let o = if n == 0 { 0 } else { power.rem_euclid(n as i64) as usize };
        AnnDiagram { m: n, n, domain: (1..=n).collect(), image: (1..=n).collect(), offset: o }
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn domain_set(&self) -> &[usize] {
        &self.domain
    }

    pub fn image_set(&self) -> &[usize] {
        &self.image
    }

    /// The rectangular diagram with the same strings, if the matching is monotone.
    pub fn to_rect(&self) -> Option<RectDiagram> {
        RectDiagram::from_pairs(self.m, self.n, self.pairs()).ok()
    }
}

impl Diagram for AnnDiagram {
    fn source(&self) -> usize {
        self.m
    }

    fn target(&self) -> usize {
        self.n
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let t = self.domain.len();
        (0..t).map(|j| (self.domain[j], self.image[(j + self.offset) % t])).collect()
    }

    fn through_count(&self) -> usize {
        self.domain.len()
    }

    fn domain(&self) -> Vec<usize> {
        self.domain.clone()
    }

    fn image(&self) -> Vec<usize> {
        self.image.clone()
    }

    fn from_pairs(m: usize, n: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        pairs.sort_unstable();
        let domain: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let mut image: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        image.sort_unstable();
        check_strict(&domain, m)?;
        check_strict(&image, n)?;
        let t = pairs.len();
        if t == 0 {
            return Ok(AnnDiagram { m, n, domain, image, offset: 0 });
        }
        let offset = image.iter().position(|&u| u == pairs[0].1).expect("image contains every target");
        if (0..t).any(|j| pairs[j].1 != image[(j + offset) % t]) {
            return Err(Error::InvalidDiagram("strings do not preserve cyclic order".into()));
        }
        Ok(AnnDiagram { m, n, domain, image, offset })
    }

    fn identity(n: usize) -> Self {
        Self::rotation(n, 0)
    }
}

impl fmt::Display for AnnDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.pairs().iter().map(|(a, b)| format!("{a}->{b}")).collect();
        write!(f, "ann({},{}){{{}}}", self.m, self.n, s.join(","))
    }
}

impl TryFrom<DiagramRepr> for AnnDiagram {
    type Error = Error;
    fn try_from(r: DiagramRepr) -> Result<Self> {
        let d = AnnDiagram::from_pairs(r.m, r.n, r.through)?;
        if r.kind == DiagramKind::Ann && r.offset != d.offset {
            return Err(Error::InvalidDiagram(format!(
                "declared offset {} but the strings give {}",
                r.offset, d.offset
            )));
        }
        Ok(d)
    }
}

impl Serialize for AnnDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramRepr { kind: DiagramKind::Ann, m: self.m, n: self.n, through: self.pairs(), offset: self.offset }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AnnDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        AnnDiagram::try_from(DiagramRepr::deserialize(d)?).map_err(D::Error::custom)
    }
}
