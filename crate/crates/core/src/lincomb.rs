//! Finite formal linear combinations of basis objects.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::scalar::CycScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, CycScalar>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(CycScalar::one(), b)
    }

    pub fn term(c: CycScalar, b: B) -> Self {
        let mut l = Self::zero();
        l.add_term(c, b);
        l
    }

    pub fn add_term(&mut self, c: CycScalar, b: B) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn add_assign_scaled(&mut self, c: &CycScalar, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (b, v) in &other.terms {
            self.add_term(v * c, b.clone());
        }
    }

    pub fn coeff(&self, b: &B) -> CycScalar {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &CycScalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        let mut out = Self::zero();
        out.add_assign_scaled(c, self);
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(&CycScalar::one(), other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(&CycScalar::from_int(-1), other);
        out
    }

    /// Linear extension of a map on basis elements.
    pub fn map_linear<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> Result<LinComb<C>>) -> Result<LinComb<C>> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_assign_scaled(c, &f(b)?);
        }
        Ok(out)
    }

    /// Bilinear extension of a product of basis elements; `None` means the product vanishes.
    pub fn bilinear<C: Ord + Clone, D: Ord + Clone>(
        &self,
        other: &LinComb<C>,
        mut f: impl FnMut(&B, &C) -> Result<Option<(CycScalar, D)>>,
    ) -> Result<LinComb<D>> {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((s, d)) = f(a, b)? {
                    out.add_term(&(x * y) * &s, d);
                }
            }
        }
        Ok(out)
    }
}

impl<B: Ord + Clone> FromIterator<(CycScalar, B)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (CycScalar, B)>>(iter: I) -> Self {
        let mut l = Self::zero();
        for (c, b) in iter {
            l.add_term(c, b);
        }
        l
    }
}

impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(b, c)| format!("({c}) {b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<B> {
    coeff: CycScalar,
    basis: B,
}

impl<B: Ord + Serialize> Serialize for LinComb<B> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (b, c) in &self.terms {
            seq.serialize_element(&TermRepr { coeff: c.clone(), basis: b })?;
        }
        seq.end()
    }
}

impl<'de, B: Ord + Clone + Deserialize<'de>> Deserialize<'de> for LinComb<B> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms: Vec<TermRepr<B>> = Vec::deserialize(d)?;
        Ok(terms.into_iter().map(|t| (t.coeff, t.basis)).collect())
    }
}
