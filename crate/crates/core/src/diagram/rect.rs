use std::fmt;

use serde::{Deserialize, Serialize};

use super::{AnnDiagram, Diagram, DiagramKind, DiagramRepr};
use crate::error::{Error, Result};

/// An order-preserving partial injection {1..m} ⇀ {1..n}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RectDiagram {
    m: usize,
    n: usize,
    through: Vec<(usize, usize)>,
}

impl RectDiagram {
    pub fn tensor(&self, other: &RectDiagram) -> RectDiagram {
        let mut through = self.through.clone();
        through.extend(other.through.iter().map(|&(a, b)| (a + self.m, b + self.n)));
        RectDiagram { m: self.m + other.m, n: self.n + other.n, through }
    }

    /// Offset-zero annular diagram with the same strings.
    pub fn to_ann(&self) -> AnnDiagram {
        AnnDiagram::from_pairs(self.m, self.n, self.through.clone()).expect("monotone maps are cyclically monotone")
    }

    /// The identity with a single cap-cup pair at position i.
    pub fn broken_at(n: usize, i: usize) -> Result<RectDiagram> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        Ok(Self::identity(n).remove_strings(&[i]))
    }

    pub fn through(&self) -> &[(usize, usize)] {
        &self.through
    }
}

impl Diagram for RectDiagram {
    fn source(&self) -> usize {
        self.m
    }

    fn target(&self) -> usize {
        self.n
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        self.through.clone()
    }

    fn through_count(&self) -> usize {
        self.through.len()
    }

    fn from_pairs(m: usize, n: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        pairs.sort_unstable();
        for &(a, b) in &pairs {
            if a == 0 || a > m || b == 0 || b > n {
                return Err(Error::InvalidDiagram(format!("string {a}->{b} outside {m}x{n}")));
            }
        }
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 || w[0].1 >= w[1].1 {
                return Err(Error::InvalidDiagram(format!(
                    "strings {}->{} and {}->{} are not strictly increasing",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
        }
        Ok(RectDiagram { m, n, through: pairs })
    }

    fn identity(n: usize) -> Self {
        RectDiagram { m: n, n, through: (1..=n).map(|i| (i, i)).collect() }
    }
}

impl fmt::Display for RectDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.through.iter().map(|(a, b)| format!("{a}->{b}")).collect();
        write!(f, "rect({},{}){{{}}}", self.m, self.n, s.join(","))
    }
}

impl TryFrom<DiagramRepr> for RectDiagram {
    type Error = Error;
    fn try_from(r: DiagramRepr) -> Result<Self> {
        if r.kind != DiagramKind::Rect || r.offset != 0 {
            return Err(Error::InvalidDiagram("expected a rectangular diagram with offset 0".into()));
        }
        RectDiagram::from_pairs(r.m, r.n, r.through)
    }
}

impl Serialize for RectDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramRepr { kind: DiagramKind::Rect, m: self.m, n: self.n, through: self.through.clone(), offset: 0 }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RectDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        RectDiagram::try_from(DiagramRepr::deserialize(d)?).map_err(D::Error::custom)
    }
}
