//! Finite-dimensional Hilbert modules over the rectangular and annular GICAR categories.
//!
//! A [`SequenceModule`] stores levels [0]..[m_max] with Gram matrices and the matrices of
//! every generator α_i, α_i* and (annular) τ. Inner products are ⟨x, y⟩ = y† G x.

mod decompose;
mod hom;

use serde::{Deserialize, Serialize};

pub use decompose::{decompose, lowest_weight_space, radical_quotient, rotation_eigenspaces, Component, Decomposition};
pub use hom::hom_module;

use crate::diagram::{binomial, subsets, DiagramKind};
use crate::error::{Error, Result};
use crate::scalar::{CycScalar, ExactMatrix};
use crate::word::{defining_relations, normalize, Generator, Letter, StandardWord, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceModule {
    pub kind: DiagramKind,
    pub m_max: usize,
    pub dims: Vec<usize>,
    pub gram: Vec<ExactMatrix>,
    /// `create[m][i - 1]` is α_i : level m → m + 1, for m < m_max.
    pub create: Vec<Vec<ExactMatrix>>,
    /// `annihilate[m - 1][j - 1]` is α_j* : level m → m − 1, for 1 ≤ m ≤ m_max.
    pub annihilate: Vec<Vec<ExactMatrix>>,
    /// `rotate[m]` is τ on level m (annular modules only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotate: Option<Vec<ExactMatrix>>,
}

/// Sesquilinear form ⟨x, y⟩ = y† G x.
pub fn gram_inner(g: &ExactMatrix, x: &[CycScalar], y: &[CycScalar]) -> CycScalar {
    let gx = g.mul_vec(x).expect("gram size");
    crate::scalar::inner(&gx, y)
}

impl SequenceModule {
    pub fn is_annular(&self) -> bool {
        self.kind == DiagramKind::Ann
    }

    pub fn generator_matrix(&self, g: &Generator) -> Result<ExactMatrix> {
        let m = g.source;
        let out_of_range = || Error::IndexOutOfRange { index: m, max: self.m_max };
        match g.letter {
            Letter::Create(i) => self.create.get(m).and_then(|v| v.get(i - 1)).cloned().ok_or_else(out_of_range),
            Letter::Annihilate(j) => {
                if m == 0 {
                    return Err(out_of_range());
                }
                self.annihilate.get(m - 1).and_then(|v| v.get(j - 1)).cloned().ok_or_else(out_of_range)
            }
            Letter::Rotate(r) => {
                let rot = self.rotate.as_ref().ok_or(Error::NotRectangular)?;
                let t = rot.get(m).ok_or_else(out_of_range)?;
                let mut acc = ExactMatrix::identity(self.dims[m]);
                for _ in 0..r {
                    acc = t.try_mul(&acc)?;
                }
                Ok(acc)
            }
        }
    }

    /// Matrix of a word; the rightmost letter acts first.
    pub fn word_matrix(&self, w: &Word) -> Result<ExactMatrix> {
        if w.source() > self.m_max || w.max_level() > self.m_max {
            return Err(Error::IndexOutOfRange { index: w.max_level(), max: self.m_max });
        }
        let mut acc = ExactMatrix::identity(self.dims[w.source()]);
        for g in w.generators().iter().rev() {
            acc = self.generator_matrix(g)?.try_mul(&acc)?;
        }
        Ok(acc)
    }

    /// Applies a word to a vector one generator at a time.
    pub fn apply_word(&self, w: &Word, v: &[CycScalar]) -> Result<Vec<CycScalar>> {
        if w.source() > self.m_max || w.max_level() > self.m_max {
            return Err(Error::IndexOutOfRange { index: w.max_level(), max: self.m_max });
        }
        let mut acc = v.to_vec();
        for g in w.generators().iter().rev() {
            let m = g.source;
            let (mat, times) = match g.letter {
                Letter::Create(i) => (&self.create[m][i - 1], 1),
                Letter::Annihilate(j) => (&self.annihilate[m - 1][j - 1], 1),
                Letter::Rotate(r) => (&self.rotate.as_ref().ok_or(Error::NotRectangular)?[m], r),
            };
            for _ in 0..times {
                acc = mat.mul_vec(&acc)?;
            }
        }
        Ok(acc)
    }

    /// All generators acting between levels within range, each paired with its matrix.
    pub fn generators(&self) -> Vec<(Generator, &ExactMatrix)> {
        let mut out = Vec::new();
        for (m, mats) in self.create.iter().enumerate() {
            for (i, a) in mats.iter().enumerate() {
                out.push((Generator { letter: Letter::Create(i + 1), source: m }, a));
            }
        }
        for (m, mats) in self.annihilate.iter().enumerate() {
            for (j, a) in mats.iter().enumerate() {
                out.push((Generator { letter: Letter::Annihilate(j + 1), source: m + 1 }, a));
            }
        }
        if let Some(rot) = &self.rotate {
            for (m, t) in rot.iter().enumerate() {
                out.push((Generator { letter: Letter::Rotate(1), source: m }, t));
            }
        }
        out
    }

    fn check_shapes(&self) -> Result<()> {
        let bad = |what: String| Err(Error::DimensionMismatch(what));
        if self.dims.len() != self.m_max + 1 || self.gram.len() != self.m_max + 1 {
            return bad(format!("expected {} levels", self.m_max + 1));
        }
        if self.create.len() != self.m_max || self.annihilate.len() != self.m_max {
            return bad("generator lists must cover levels 0..m_max".into());
        }
        for (m, g) in self.gram.iter().enumerate() {
            if g.rows() != self.dims[m] || g.cols() != self.dims[m] {
                return bad(format!("gram at level {m}"));
            }
        }
        for (m, mats) in self.create.iter().enumerate() {
            if mats.len() != m + 1 {
                return bad(format!("level {m} needs {} creation matrices", m + 1));
            }
            for a in mats {
                if a.rows() != self.dims[m + 1] || a.cols() != self.dims[m] {
                    return bad(format!("creation matrix at level {m}"));
                }
            }
        }
        for (m, mats) in self.annihilate.iter().enumerate() {
            if mats.len() != m + 1 {
                return bad(format!("level {} needs {} annihilation matrices", m + 1, m + 1));
            }
            for a in mats {
                if a.rows() != self.dims[m] || a.cols() != self.dims[m + 1] {
                    return bad(format!("annihilation matrix at level {}", m + 1));
                }
            }
        }
        match (&self.rotate, self.kind) {
            (Some(rot), DiagramKind::Ann) => {
                if rot.len() != self.m_max + 1 {
                    return bad("rotation list must cover every level".into());
                }
                for (m, t) in rot.iter().enumerate() {
                    if t.rows() != self.dims[m] || t.cols() != self.dims[m] {
                        return bad(format!("rotation at level {m}"));
                    }
                }
            }
            (None, DiagramKind::Rect) => {}
            (Some(_), DiagramKind::Rect) => return Err(Error::InvalidSpec("rectangular module with a rotation".into())),
            (None, DiagramKind::Ann) => return Err(Error::InvalidSpec("annular module without a rotation".into())),
        }
        Ok(())
    }

    /// Every identity a Hilbert module must satisfy, as a list of failures (empty when valid).
    pub fn check(&self) -> Result<Vec<String>> {
        self.check_shapes()?;
        let mut failures = Vec::new();
        for (m, g) in self.gram.iter().enumerate() {
            if g.conj_transpose() != *g {
                failures.push(format!("gram at level {m} is not hermitian"));
            }
        }
        for (m, (a, d)) in self.create.iter().zip(&self.annihilate).enumerate() {
            for (i, (ai, di)) in a.iter().zip(d).enumerate() {
                // ⟨α_i u, v⟩ = ⟨u, α_i* v⟩
                let lhs = self.gram[m + 1].try_mul(ai)?;
                let rhs = di.conj_transpose().try_mul(&self.gram[m])?;
                if lhs != rhs {
                    failures.push(format!("a{} and a*{} are not adjoint at level {m}", i + 1, i + 1));
                }
            }
        }
        if let Some(rot) = &self.rotate {
            for (m, t) in rot.iter().enumerate() {
                if t.conj_transpose().try_mul(&self.gram[m])?.try_mul(t)? != self.gram[m] {
                    failures.push(format!("t is not unitary at level {m}"));
                }
            }
        }
        for r in defining_relations(self.m_max, self.is_annular()) {
            if self.word_matrix(&r.lhs)? != self.word_matrix(&r.rhs)? {
                failures.push(r.name);
            }
        }
        Ok(failures)
    }

    pub fn validate(&self) -> Result<()> {
        match self.check()?.into_iter().next() {
            Some(f) => Err(Error::RelationViolated(f)),
            None => Ok(()),
        }
    }

    /// Orthogonal direct sum, blocks in the given order.
    pub fn direct_sum(parts: &[SequenceModule]) -> Result<SequenceModule> {
        let first = parts.first().ok_or_else(|| Error::InvalidSpec("empty direct sum".into()))?;
        if parts.iter().any(|p| p.kind != first.kind || p.m_max != first.m_max) {
            return Err(Error::InvalidSpec("summands differ in kind or level range".into()));
        }
        let m_max = first.m_max;
        let dims: Vec<usize> = (0..=m_max).map(|m| parts.iter().map(|p| p.dims[m]).sum()).collect();
        let block = |get: &dyn Fn(&SequenceModule) -> &ExactMatrix, rows: usize, cols: usize| {
            let mut out = ExactMatrix::zeros(rows, cols);
            let (mut r0, mut c0) = (0, 0);
            for p in parts {
                let b = get(p);
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        let v = b.get(r, c);
                        if !v.is_zero() {
                            out.set(r0 + r, c0 + c, v.clone());
                        }
                    }
                }
                r0 += b.rows();
                c0 += b.cols();
            }
            out
        };
        let gram = (0..=m_max).map(|m| block(&|p| &p.gram[m], dims[m], dims[m])).collect();
        let create = (0..m_max)
            .map(|m| (0..=m).map(|i| block(&|p| &p.create[m][i], dims[m + 1], dims[m])).collect())
            .collect();
        let annihilate = (0..m_max)
            .map(|m| (0..=m).map(|i| block(&|p| &p.annihilate[m][i], dims[m], dims[m + 1])).collect())
            .collect();
        let rotate = first
            .rotate
            .as_ref()
            .map(|_| (0..=m_max).map(|m| block(&|p| &p.rotate.as_ref().expect("annular")[m], dims[m], dims[m])).collect());
        Ok(SequenceModule { kind: first.kind, m_max, dims, gram, create, annihilate, rotate })
    }

    /// The same module in the basis given by the columns of `t[m]` at each level.
    pub fn change_basis(&self, t: &[ExactMatrix]) -> Result<SequenceModule> {
        if t.len() != self.m_max + 1 {
            return Err(Error::DimensionMismatch("one basis change per level".into()));
        }
        let inv: Vec<ExactMatrix> = t.iter().map(ExactMatrix::inverse).collect::<Result<_>>()?;
        let conj = |a: &ExactMatrix, to: usize, from: usize| inv[to].try_mul(a)?.try_mul(&t[from]);
        let gram = (0..=self.m_max)
            .map(|m| t[m].conj_transpose().try_mul(&self.gram[m])?.try_mul(&t[m]))
            .collect::<Result<_>>()?;
        let create = self
            .create
            .iter()
            .enumerate()
            .map(|(m, v)| v.iter().map(|a| conj(a, m + 1, m)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let annihilate = self
            .annihilate
            .iter()
            .enumerate()
            .map(|(m, v)| v.iter().map(|a| conj(a, m, m + 1)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let rotate = match &self.rotate {
            Some(r) => Some(r.iter().enumerate().map(|(m, a)| conj(a, m, m)).collect::<Result<_>>()?),
            None => None,
        };
        Ok(SequenceModule { kind: self.kind, m_max: self.m_max, dims: self.dims.clone(), gram, create, annihilate, rotate })
    }
}

/// Label of an irreducible module: weight k and, for annular modules, the eigenvalue index r of ω = ζ_k^r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IrrModuleSpec {
    pub kind: DiagramKind,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
}

impl IrrModuleSpec {
    pub fn rect(k: usize) -> Self {
        IrrModuleSpec { kind: DiagramKind::Rect, k, omega: None }
    }

    pub fn ann(k: usize, r: usize) -> Self {
        IrrModuleSpec { kind: DiagramKind::Ann, k, omega: Some(r) }
    }

    pub fn check(&self) -> Result<()> {
        match (self.kind, self.omega) {
            (DiagramKind::Rect, None) => Ok(()),
            (DiagramKind::Rect, Some(_)) => Err(Error::InvalidSpec("rectangular modules carry no eigenvalue".into())),
            (DiagramKind::Ann, Some(r)) if r < self.k.max(1) => Ok(()),
            (DiagramKind::Ann, r) => Err(Error::InvalidSpec(format!("eigenvalue index {r:?} at weight {}", self.k))),
        }
    }

    /// The rotation eigenvalue ω; 1 for rectangular modules and weights 0, 1.
    pub fn eigenvalue(&self) -> CycScalar {
        match self.omega {
            Some(r) if self.k >= 2 => CycScalar::root_of_unity(self.k as u32, r as i64),
            _ => CycScalar::one(),
        }
    }

    /// Every annular (rectangular) irreducible of weight at most `k_max`.
    pub fn all(kind: DiagramKind, k_max: usize) -> Vec<IrrModuleSpec> {
        (0..=k_max)
            .flat_map(|k| match kind {
                DiagramKind::Rect => vec![Self::rect(k)],
                DiagramKind::Ann => (0..k.max(1)).map(|r| Self::ann(k, r)).collect(),
            })
            .collect()
    }

    pub fn dim(&self, m: usize) -> usize {
        binomial(m, self.k) as usize
    }
}

/// Basis of level m: creation sets of size m − k, lexicographic.
pub fn irr_basis(k: usize, m: usize) -> Vec<Vec<usize>> {
    if m < k {
        return vec![];
    }
    subsets(m, m - k)
}

/// α_{i_l}⋯α_{i_1} as a word from [k], for creation set {i_1 < ⋯ < i_l}.
pub fn creation_word(k: usize, set: &[usize]) -> Word {
    StandardWord::new(k, set.to_vec(), 0, vec![]).expect("increasing creation set").to_word()
}

/// Value of a word applied to the lowest weight vector ξ: zero if it caps ξ, else ω^r times a basis vector.
fn reduce_on_xi(spec: &IrrModuleSpec, w: &Word) -> Result<Option<(CycScalar, Vec<usize>)>> {
    let sw = normalize(w)?;
    if !sw.annihilations().is_empty() {
        return Ok(None);
    }
    Ok(Some((spec.eigenvalue().pow(sw.rotation() as u32), sw.creations().to_vec())))
}

/// Gram matrix of the creation basis at level m, from ⟨aξ, bξ⟩ = ⟨b*a ξ, ξ⟩.
pub fn irr_gram(spec: &IrrModuleSpec, m: usize) -> Result<ExactMatrix> {
    let basis = irr_basis(spec.k, m);
    let words: Vec<Word> = basis.iter().map(|s| creation_word(spec.k, s)).collect();
    let mut g = ExactMatrix::zeros(basis.len(), basis.len());
    for (c, a) in words.iter().enumerate() {
        for (r, b) in words.iter().enumerate() {
            if let Some((v, rest)) = reduce_on_xi(spec, &a.then(&b.adjoint())?)? {
                debug_assert!(rest.is_empty());
                // ⟨a ξ, b ξ⟩ sits at row b, column a
                g.set(r, c, v);
            }
        }
    }
    Ok(g)
}

/// Generator matrices of V^k or V^{k,ω} on levels 0..=m_max, by reducing words on the lowest weight vector.
pub fn irr_matrices(spec: &IrrModuleSpec, m_max: usize) -> Result<SequenceModule> {
    spec.check()?;
    let dims: Vec<usize> = (0..=m_max).map(|m| spec.dim(m)).collect();
    let bases: Vec<Vec<Vec<usize>>> = (0..=m_max).map(|m| irr_basis(spec.k, m)).collect();
    let index = |m: usize, s: &[usize]| bases[m].iter().position(|b| b == s).expect("basis element");
    let action = |letter: Letter, m: usize| -> Result<ExactMatrix> {
        let g = Generator::new(letter, m)?;
        let to = g.target();
        let mut a = ExactMatrix::zeros(dims[to], dims[m]);
        for (c, s) in bases[m].iter().enumerate() {
            let w = creation_word(spec.k, s).then(&Word::new(m, &[letter])?)?;
            if let Some((v, set)) = reduce_on_xi(spec, &w)? {
                a.set(index(to, &set), c, v);
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
    let rotate = match spec.kind {
        DiagramKind::Ann => Some((0..=m_max).map(|m| action(Letter::Rotate(1), m)).collect::<Result<_>>()?),
        DiagramKind::Rect => None,
    };
    let gram = (0..=m_max).map(|m| irr_gram(spec, m)).collect::<Result<_>>()?;
    Ok(SequenceModule { kind: spec.kind, m_max, dims, gram, create, annihilate, rotate })
}

/// Degree-zero intertwiners a → b: families X_m with X_{m'} A_g = B_g X_m for every generator.
pub fn intertwiners(a: &SequenceModule, b: &SequenceModule) -> Result<Vec<Vec<ExactMatrix>>> {
    if a.kind != b.kind || a.m_max != b.m_max {
        return Err(Error::InvalidSpec("modules differ in kind or level range".into()));
    }
    let mut offsets = vec![0];
    for m in 0..=a.m_max {
        offsets.push(offsets[m] + b.dims[m] * a.dims[m]);
    }
    let unknowns = offsets[a.m_max + 1];
    let var = |m: usize, r: usize, c: usize| offsets[m] + r * a.dims[m] + c;
    let mut rows: Vec<Vec<(usize, CycScalar)>> = Vec::new();
    for ((g, ma), (_, mb)) in a.generators().into_iter().zip(b.generators()) {
        let (m, t) = (g.source, g.target());
        // (X_t A)[r][c] − (B X_m)[r][c]
        for r in 0..b.dims[t] {
            for c in 0..a.dims[m] {
                let mut row = Vec::new();
                for k in 0..a.dims[t] {
                    let v = ma.get(k, c);
                    if !v.is_zero() {
                        row.push((var(t, r, k), v.clone()));
                    }
                }
                for k in 0..b.dims[m] {
                    let v = mb.get(r, k);
                    if !v.is_zero() {
                        row.push((var(m, k, c), -v.clone()));
                    }
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let mut system = ExactMatrix::zeros(rows.len(), unknowns);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row {
            system.add_at(i, *j, v);
        }
    }
    Ok(system
        .kernel()
        .into_iter()
        .map(|v| {
            (0..=a.m_max)
                .map(|m| ExactMatrix::from_fn(b.dims[m], a.dims[m], |r, c| v[var(m, r, c)].clone()))
                .collect()
        })
        .collect())
}

/// Extends ξ ↦ η from the lowest weight level of an irreducible module to all levels:
/// α_I ξ ↦ α_I η on the creation basis.
pub fn extend_morphism(spec: &IrrModuleSpec, target: &SequenceModule, eta: &[CycScalar]) -> Result<Vec<ExactMatrix>> {
    let k = spec.k;
    if k > target.m_max || eta.len() != target.dims[k] {
        return Err(Error::DimensionMismatch("η must lie at the weight level of the target".into()));
    }
    (0..=target.m_max)
        .map(|m| {
            let basis = irr_basis(k, m);
            let cols = basis
                .iter()
                .map(|s| target.apply_word(&creation_word(k, s), eta))
                .collect::<Result<Vec<_>>>()?;
            if cols.is_empty() {
                Ok(ExactMatrix::zeros(target.dims[m], 0))
            } else {
                ExactMatrix::from_columns(target.dims[m], &cols)
            }
        })
        .collect()
}
