//! The categories acting on tensor powers of H = ℂζ ⊕ K with dim K = d, over the scalars.
//!
//! Level m is H^{⊗m} with the product basis e_{i_1}⊗⋯⊗e_{i_m}, indexed big-endian in base
//! d + 1. The basis vector e₀ is ζ and κ = e₁. α_i inserts ζ in slot i, α_i* contracts slot i
//! against ζ, and τ is the cyclic shift ξ₁⊗⋯⊗ξ_m ↦ ξ_m⊗ξ₁⊗⋯⊗ξ_{m−1}.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebra::{minimal_projection, ProjectionPattern};
use crate::cmodule::{decompose, IrrModuleSpec, SequenceModule};
use crate::diagram::{subsets, AnnDiagram, Diagram, DiagramKind};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{CycScalar, ExactMatrix};
use crate::word::{enumerate_standard, Letter, StandardWord, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToyContext {
    pub d: usize,
}

impl ToyContext {
    pub fn new(d: usize) -> Self {
        ToyContext { d }
    }

    pub fn level_dim(&self, m: usize) -> usize {
        (self.d + 1).pow(m as u32)
    }

    pub fn digits(&self, m: usize, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; m];
        for slot in out.iter_mut().rev() {
            *slot = index % (self.d + 1);
            index /= self.d + 1;
        }
        out
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &x| acc * (self.d + 1) + x)
    }

    /// The product vector with basis vector e_{slots[p]} in slot p + 1.
    pub fn product_vector(&self, slots: &[usize]) -> Vec<CycScalar> {
        let mut v = vec![CycScalar::zero(); self.level_dim(slots.len())];
        v[self.index(slots)] = CycScalar::one();
        v
    }

    /// κ^{⊗m} with ζ in the given (1-based) slots.
    pub fn zeta_kappa_vector(&self, m: usize, zeta_slots: &[usize]) -> Result<Vec<CycScalar>> {
        if self.d == 0 {
            return Err(Error::InvalidSpec("κ needs d ≥ 1".into()));
        }
        let slots: Vec<usize> = (1..=m).map(|p| if zeta_slots.contains(&p) { 0 } else { 1 }).collect();
        Ok(self.product_vector(&slots))
    }

    fn basis_map(&self, from: usize, to: usize, f: impl Fn(&[usize]) -> Option<Vec<usize>>) -> ExactMatrix {
        let mut a = ExactMatrix::zeros(self.level_dim(to), self.level_dim(from));
        for c in 0..self.level_dim(from) {
            if let Some(t) = f(&self.digits(from, c)) {
                a.set(self.index(&t), c, CycScalar::one());
            }
        }
        a
    }

    pub fn create_matrix(&self, i: usize, m: usize) -> Result<ExactMatrix> {
        if i == 0 || i > m + 1 {
            return Err(Error::IndexOutOfRange { index: i, max: m + 1 });
        }
        Ok(self.basis_map(m, m + 1, |s| {
            let mut t = s.to_vec();
            t.insert(i - 1, 0);
            Some(t)
        }))
    }

    pub fn annihilate_matrix(&self, i: usize, m: usize) -> Result<ExactMatrix> {
        if i == 0 || i > m {
            return Err(Error::IndexOutOfRange { index: i, max: m });
        }
        Ok(self.basis_map(m, m - 1, |s| {
            (s[i - 1] == 0).then(|| {
                let mut t = s.to_vec();
                t.remove(i - 1);
                t
            })
        }))
    }

    pub fn rotate_matrix(&self, m: usize) -> ExactMatrix {
        self.basis_map(m, m, |s| {
            let mut t = s.to_vec();
            if !t.is_empty() {
                t.rotate_right(1);
            }
            Some(t)
        })
    }
}

pub fn toy_create(ctx: &ToyContext, i: usize, v: &[CycScalar]) -> Result<Vec<CycScalar>> {
    let m = level_of(ctx, v)?;
    ctx.create_matrix(i, m)?.mul_vec(v)
}

pub fn toy_annihilate(ctx: &ToyContext, i: usize, v: &[CycScalar]) -> Result<Vec<CycScalar>> {
    let m = level_of(ctx, v)?;
    ctx.annihilate_matrix(i, m)?.mul_vec(v)
}

fn level_of(ctx: &ToyContext, v: &[CycScalar]) -> Result<usize> {
    (0..=32)
        .find(|&m| ctx.level_dim(m) == v.len())
        .filter(|_| ctx.d > 0 || v.len() == 1)
        .ok_or_else(|| Error::DimensionMismatch(format!("length {} is not a power of {}", v.len(), ctx.d + 1)))
}

/// e_{2i−1} = α_i α_i*: ζ⟨ζ| in slot i, identity elsewhere.
pub fn odd_jones(ctx: &ToyContext, i: usize, m: usize) -> Result<ExactMatrix> {
    let down = ctx.annihilate_matrix(i, m)?;
    ctx.create_matrix(i, m - 1)?.try_mul(&down)
}

/// Matrix of a word, generator by generator (rightmost acts first).
pub fn represent_word(ctx: &ToyContext, w: &Word) -> Result<ExactMatrix> {
    let mut acc = ExactMatrix::identity(ctx.level_dim(w.source()));
    for g in w.generators().iter().rev() {
        let m = g.source;
        let a = match g.letter {
            Letter::Create(i) => ctx.create_matrix(i, m)?,
            Letter::Annihilate(i) => ctx.annihilate_matrix(i, m)?,
            Letter::Rotate(r) => {
                let t = ctx.rotate_matrix(m);
                (0..r).try_fold(ExactMatrix::identity(ctx.level_dim(m)), |acc, _| t.try_mul(&acc))?
            }
        };
        acc = a.try_mul(&acc)?;
    }
    Ok(acc)
}

pub fn represent_standard(ctx: &ToyContext, w: &StandardWord) -> Result<ExactMatrix> {
    represent_word(ctx, &w.to_word())
}

/// Matrix of a diagram read off its strings: caps contract against ζ, cups insert ζ, through strings carry the slot.
pub fn represent_diagram(ctx: &ToyContext, d: &AnnDiagram) -> ExactMatrix {
    let pairs = d.pairs();
    let caps = d.caps();
    let (m, n) = (d.source(), d.target());
    ctx.basis_map(m, n, |s| {
        if caps.iter().any(|&p| s[p - 1] != 0) {
            return None;
        }
        let mut t = vec![0; n];
        for &(p, q) in &pairs {
            t[q - 1] = s[p - 1];
        }
        Some(t)
    })
}

pub fn represent_lin<D: Diagram>(ctx: &ToyContext, x: &LinComb<D>, to_ann: impl Fn(&D) -> AnnDiagram) -> Result<ExactMatrix> {
    let mut iter = x.iter();
    let Some((first, c)) = iter.next() else {
        return Err(Error::InvalidSpec("zero combination has no boundary".into()));
    };
    let mut acc = represent_diagram(ctx, &to_ann(first)).scale(c);
    for (d, c) in iter {
        acc = acc.try_add(&represent_diagram(ctx, &to_ann(d)).scale(c))?;
    }
    Ok(acc)
}

/// Trace of the image of a rectangular minimal projection.
pub fn minimal_projection_trace(ctx: &ToyContext, pattern: &ProjectionPattern) -> Result<CycScalar> {
    Ok(represent_lin(ctx, &minimal_projection(pattern), |d| d.to_ann())?.trace())
}

/// The toy representation as a Hilbert module on levels 0..=m_max (orthonormal product basis).
pub fn toy_module(ctx: &ToyContext, kind: DiagramKind, m_max: usize) -> Result<SequenceModule> {
    let dims: Vec<usize> = (0..=m_max).map(|m| ctx.level_dim(m)).collect();
    let create = (0..m_max)
        .map(|m| (1..=m + 1).map(|i| ctx.create_matrix(i, m)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let annihilate = (1..=m_max)
        .map(|m| (1..=m).map(|i| ctx.annihilate_matrix(i, m)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let rotate = match kind {
        DiagramKind::Ann => Some((0..=m_max).map(|m| ctx.rotate_matrix(m)).collect()),
        DiagramKind::Rect => None,
    };
    let gram = dims.iter().map(|&n| ExactMatrix::identity(n)).collect();
    Ok(SequenceModule { kind, m_max, dims, gram, create, annihilate, rotate })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatingResult {
    pub word: String,
    /// Slots of ξ and η holding e₀ = ζ (every other slot holds κ).
    pub xi_zeta: Vec<usize>,
    pub eta_zeta: Vec<usize>,
    pub value: CycScalar,
    /// Other standard words of at least the same length checked to vanish on (ξ, η).
    pub vanishing_checked: usize,
    pub vanishing_failures: Vec<String>,
}

impl SeparatingResult {
    pub fn ok(&self) -> bool {
        self.value.is_one() && self.vanishing_failures.is_empty()
    }
}

fn pairing(ctx: &ToyContext, w: &StandardWord, xi: &[CycScalar], eta: &[CycScalar]) -> Result<CycScalar> {
    Ok(crate::scalar::inner(&represent_standard(ctx, w)?.mul_vec(xi)?, eta))
}

/// ξ has ζ in the annihilated slots of x, η has ζ in its created slots; ⟨xξ, η⟩ = 1 and
/// every other rectangular standard word of at least the same length pairs to 0.
pub fn separating_test(ctx: &ToyContext, x: &StandardWord) -> Result<SeparatingResult> {
    if !x.is_rectangular() {
        return Err(Error::NotRectangular);
    }
    let (n, t) = (x.source(), x.target());
    let xi = ctx.zeta_kappa_vector(n, x.annihilations())?;
    let eta = ctx.zeta_kappa_vector(t, x.creations())?;
    let value = pairing(ctx, x, &xi, &eta)?;
    let mut checked = 0;
    let mut failures = Vec::new();
    for y in enumerate_standard(n, t) {
        if !y.is_rectangular() || y == *x || y.length() < x.length() {
            continue;
        }
        checked += 1;
        if !pairing(ctx, &y, &xi, &eta)?.is_zero() {
            failures.push(y.to_string());
        }
    }
    Ok(SeparatingResult {
        word: x.to_string(),
        xi_zeta: x.annihilations().to_vec(),
        eta_zeta: x.creations().to_vec(),
        value,
        vanishing_checked: checked,
        vanishing_failures: failures,
    })
}

/// Rank of the matrix ⟨wξ_J, η_I⟩ over rectangular standard words w: [m] → [n] and all ζ/κ
/// product vectors; equal to the number of words iff the words are linearly independent.
pub fn evaluation_rank(ctx: &ToyContext, m: usize, n: usize) -> Result<(usize, usize)> {
    let words: Vec<StandardWord> = enumerate_standard(m, n).into_iter().filter(StandardWord::is_rectangular).collect();
    let xis: Vec<Vec<CycScalar>> = (0..=m)
        .flat_map(|l| subsets(m, l))
        .map(|j| ctx.zeta_kappa_vector(m, &j))
        .collect::<Result<_>>()?;
    let etas: Vec<Vec<CycScalar>> = (0..=n)
        .flat_map(|l| subsets(n, l))
        .map(|i| ctx.zeta_kappa_vector(n, &i))
        .collect::<Result<_>>()?;
    let mut eval = ExactMatrix::zeros(words.len(), xis.len() * etas.len());
    for (r, w) in words.iter().enumerate() {
        let a = represent_standard(ctx, w)?;
        for (a_idx, xi) in xis.iter().enumerate() {
            let image = a.mul_vec(xi)?;
            for (b_idx, eta) in etas.iter().enumerate() {
                eval.set(r, a_idx * etas.len() + b_idx, crate::scalar::inner(&image, eta));
            }
        }
    }
    Ok((words.len(), eval.rank()))
}

/// (1/k) Σ_j ζ_k^{−rj} d^{gcd(j,k)}: the number of independent τ-eigenvectors with eigenvalue ζ_k^r in K^{⊗k}.
pub fn necklace_count(d: usize, k: usize, r: usize) -> Result<usize> {
    if k == 0 {
        return Ok(1);
    }
    let mut sum = CycScalar::zero();
    for j in 0..k {
        let g = num_integer::gcd(j, k) as u32;
        let w = CycScalar::root_of_unity(k as u32, -((r * j) as i64));
        sum += &(&w * &CycScalar::from_int((d as i64).pow(g)));
    }
    let value = &sum * &CycScalar::from_ratio(1, k as i64);
    value
        .to_rational()
        .filter(|q| q.is_integer())
        .and_then(|q| q.to_integer().to_usize())
        .ok_or_else(|| Error::InvalidSpec(format!("necklace sum {value} is not a natural number")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiplicity {
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub multiplicity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyReport {
    pub d: usize,
    pub m_max: usize,
    pub rect: Vec<Multiplicity>,
    pub ann: Vec<Multiplicity>,
    pub consistent: bool,
}

/// Multiplicity tables of the toy rectangular and annular modules; annular entries carry the necklace prediction
/// and rectangular ones the prediction d^k.
pub fn annular_degeneracy_report(ctx: &ToyContext, m_max: usize) -> Result<DegeneracyReport> {
    let rect_dec = decompose(&toy_module(ctx, DiagramKind::Rect, m_max)?)?;
    let ann_dec = decompose(&toy_module(ctx, DiagramKind::Ann, m_max)?)?;
    let mut consistent = true;
    let mut rect = Vec::new();
    let mut ann = Vec::new();
    for k in 0..=m_max {
        let got = rect_dec.multiplicity(&IrrModuleSpec::rect(k));
        let expected = ctx.d.pow(k as u32);
        consistent &= got == expected;
        rect.push(Multiplicity { k, r: None, multiplicity: got, expected: Some(expected) });
        for r in 0..k.max(1) {
            let got = ann_dec.multiplicity(&IrrModuleSpec::ann(k, r));
            let expected = necklace_count(ctx.d, k, r)?;
            consistent &= got == expected;
            ann.push(Multiplicity { k, r: Some(r), multiplicity: got, expected: Some(expected) });
        }
    }
    Ok(DegeneracyReport { d: ctx.d, m_max, rect, ann, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn create_on_the_vacuum_gives_zeta() {
        let ctx = ToyContext::new(2);
        assert_eq!(toy_create(&ctx, 1, &[CycScalar::one()]).unwrap(), ctx.product_vector(&[0]));
    }

    #[test]
    fn kappa_is_killed() {
        let ctx = ToyContext::new(2);
        let v = ctx.product_vector(&[0, 1, 2]);
        assert!(toy_annihilate(&ctx, 2, &v).unwrap().iter().all(CycScalar::is_zero));
        assert_eq!(toy_annihilate(&ctx, 1, &v).unwrap(), ctx.product_vector(&[1, 2]));
    }

    #[test]
    fn first_odd_jones_projection() {
        let ctx = ToyContext::new(3);
        let e = odd_jones(&ctx, 1, 1).unwrap();
        assert_eq!(e.trace(), CycScalar::one());
        assert_eq!(&e * &e, e);
    }

    #[test]
    fn two_letter_necklaces() {
        assert_eq!(necklace_count(2, 2, 0).unwrap(), 3);
        assert_eq!(necklace_count(2, 2, 1).unwrap(), 1);
    }
}
