//! Fermionic Fock space over n modes, the GICAR algebra acting on it, and its
//! diagrammatic model 𝒟_n.
//!
//! Basis vectors ξ_S are indexed by sorted subsets S ⊆ {1..n}; Ω is the empty set.
//! `a_i` creates ξ_i (ξ_i ∧ ·) and `a_i*` annihilates it.

mod theta;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use theta::{
    big_theta, d_action, d_matrix, normal_order, theta, theta_generator, theta_monomial, theta_pair, DVector,
    GicarGenerator,
};

use crate::diagram::all_subsets;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{CycScalar, ExactMatrix};

pub type Subset = Vec<usize>;

/// Wedge basis of 𝓕(ℋ_n), ordered by (size, lexicographic).
pub fn fock_basis(n: usize) -> Vec<Subset> {
    all_subsets(n)
}

fn basis_index(n: usize) -> impl Fn(&[usize]) -> usize {
    let basis = fock_basis(n);
    move |s: &[usize]| basis.iter().position(|b| b == s).expect("subset of the mode set")
}

fn check_mode(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::IndexOutOfRange { index: i, max: n })
    } else {
        Ok(())
    }
}

fn sign_before(s: &[usize], i: usize) -> CycScalar {
    let c = s.iter().filter(|&&j| j < i).count();
    CycScalar::from_int(if c % 2 == 0 { 1 } else { -1 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FockVector {
    pub n: usize,
    pub coeffs: LinComb<Subset>,
}

impl FockVector {
    pub fn zero(n: usize) -> Self {
        FockVector { n, coeffs: LinComb::zero() }
    }

    pub fn vacuum(n: usize) -> Self {
        Self::basis(n, vec![]).expect("empty set is valid")
    }

    pub fn basis(n: usize, mut s: Subset) -> Result<Self> {
        s.sort_unstable();
        s.dedup();
        for &i in &s {
            check_mode(i, n)?;
        }
        Ok(FockVector { n, coeffs: LinComb::basis(s) })
    }

    /// ⟨u, v⟩ in the orthonormal wedge basis, linear in `u`.
    pub fn inner(&self, other: &FockVector) -> CycScalar {
        let mut acc = CycScalar::zero();
        for (s, c) in self.coeffs.iter() {
            let d = other.coeffs.coeff(s);
            if !d.is_zero() {
                acc += &(c * &d.conj());
            }
        }
        acc
    }

    pub fn to_coords(&self) -> Vec<CycScalar> {
        fock_basis(self.n).iter().map(|s| self.coeffs.coeff(s)).collect()
    }

    pub fn from_coords(n: usize, coords: &[CycScalar]) -> Self {
        let coeffs = fock_basis(n).into_iter().zip(coords).map(|(s, c)| (c.clone(), s)).collect();
        FockVector { n, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }
}

/// a_i v: prepend ξ_i and sort, with sign (−1)^{#{j ∈ S : j < i}}.
pub fn car_create(i: usize, v: &FockVector) -> Result<FockVector> {
    check_mode(i, v.n)?;
    let mut out = LinComb::zero();
    for (s, c) in v.coeffs.iter() {
        if s.contains(&i) {
            continue;
        }
        let mut t = s.clone();
        let pos = t.partition_point(|&j| j < i);
        t.insert(pos, i);
        out.add_term(c * &sign_before(s, i), t);
    }
    Ok(FockVector { n: v.n, coeffs: out })
}

/// a_i* v: remove ξ_i with the sign of its position.
pub fn car_annihilate(i: usize, v: &FockVector) -> Result<FockVector> {
    check_mode(i, v.n)?;
    let mut out = LinComb::zero();
    for (s, c) in v.coeffs.iter() {
        if !s.contains(&i) {
            continue;
        }
        let t: Subset = s.iter().copied().filter(|&j| j != i).collect();
        out.add_term(c * &sign_before(s, i), t);
    }
    Ok(FockVector { n: v.n, coeffs: out })
}

/// A single CAR letter: `a_i` or `a_i*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FockOp {
    Create(usize),
    Annihilate(usize),
}

impl FockOp {
    pub fn adjoint(self) -> FockOp {
        match self {
            FockOp::Create(i) => FockOp::Annihilate(i),
            FockOp::Annihilate(i) => FockOp::Create(i),
        }
    }

    pub fn index(self) -> usize {
        match self {
            FockOp::Create(i) | FockOp::Annihilate(i) => i,
        }
    }

    pub fn apply(self, v: &FockVector) -> Result<FockVector> {
        match self {
            FockOp::Create(i) => car_create(i, v),
            FockOp::Annihilate(i) => car_annihilate(i, v),
        }
    }
}

/// A product of CAR letters in written order; the rightmost letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub Vec<FockOp>);

impl Monomial {
    pub fn identity() -> Self {
        Monomial(vec![])
    }

    /// a_x a_y*.
    pub fn pair(x: usize, y: usize) -> Self {
        Monomial(vec![FockOp::Create(x), FockOp::Annihilate(y)])
    }

    pub fn ops(&self) -> &[FockOp] {
        &self.0
    }

    pub fn creations(&self) -> usize {
        self.0.iter().filter(|o| matches!(o, FockOp::Create(_))).count()
    }

    pub fn annihilations(&self) -> usize {
        self.0.len() - self.creations()
    }

    pub fn is_gauge_invariant(&self) -> bool {
        self.creations() == self.annihilations()
    }

    pub fn check_gauge_invariant(&self) -> Result<()> {
        if self.is_gauge_invariant() {
            Ok(())
        } else {
            Err(Error::NotGaugeInvariant { creations: self.creations(), annihilations: self.annihilations() })
        }
    }

    pub fn max_index(&self) -> usize {
        self.0.iter().map(|o| o.index()).max().unwrap_or(0)
    }

    /// `self · other` (other acts first).
    pub fn times(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Monomial(v)
    }

    pub fn adjoint(&self) -> Monomial {
        Monomial(self.0.iter().rev().map(|o| o.adjoint()).collect())
    }

    pub fn apply(&self, v: &FockVector) -> Result<FockVector> {
        let mut out = v.clone();
        for op in self.0.iter().rev() {
            out = op.apply(&out)?;
        }
        Ok(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|o| match o {
                FockOp::Create(i) => format!("a{i}"),
                FockOp::Annihilate(i) => format!("a{i}*"),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Monomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut ops = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let body = tok.strip_prefix('a').ok_or_else(|| Error::Parse(format!("unknown operator {tok:?}")))?;
            let (star, digits) = if let Some(d) = body.strip_suffix('*') {
                (true, d)
            } else if let Some(d) = body.strip_prefix('*') {
                (true, d)
            } else {
                (false, body)
            };
            let i: usize = digits.parse().map_err(|_| Error::Parse(format!("bad mode index in {tok:?}")))?;
            if i == 0 {
                return Err(Error::Parse(format!("mode indices start at 1: {tok:?}")));
            }
            ops.push(if star { FockOp::Annihilate(i) } else { FockOp::Create(i) });
        }
        Ok(Monomial(ops))
    }
}

/// Matrix of a single letter on the 2ⁿ-dimensional space, in the (size, lex) basis.
pub fn op_matrix(op: FockOp, n: usize) -> Result<ExactMatrix> {
    check_mode(op.index(), n)?;
    let basis = fock_basis(n);
    let index = basis_index(n);
    let mut m = ExactMatrix::zeros(basis.len(), basis.len());
    for (col, s) in basis.iter().enumerate() {
        let img = op.apply(&FockVector::basis(n, s.clone())?)?;
        for (t, c) in img.coeffs.iter() {
            m.set(index(t), col, c.clone());
        }
    }
    Ok(m)
}

/// Matrix of a monomial on 𝓕(ℋ_n). Monomials that are not gauge invariant are allowed here.
pub fn gicar_element(word: &Monomial, n: usize) -> Result<ExactMatrix> {
    let mut m = ExactMatrix::identity(1 << n);
    for &op in word.ops() {
        m = m.try_mul(&op_matrix(op, n)?)?;
    }
    Ok(m)
}

/// All monomials a_{i_k}⋯a_{i_1} a*_{j_1}⋯a*_{j_k} with increasing index lists, spanning G_n.
pub fn gicar_monomials(n: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for k in 0..=n {
        for i in crate::diagram::subsets(n, k) {
            for j in crate::diagram::subsets(n, k) {
                let mut ops: Vec<FockOp> = i.iter().rev().map(|&x| FockOp::Create(x)).collect();
                ops.extend(j.iter().map(|&y| FockOp::Annihilate(y)));
                out.push(Monomial(ops));
            }
        }
    }
    out
}
