//! Canonical decomposition of a Hilbert module into irreducibles, weight by weight.

use serde::{Deserialize, Serialize};

use super::{creation_word, gram_inner, irr_basis, IrrModuleSpec, SequenceModule};
use crate::diagram::DiagramKind;
use crate::error::{Error, Result};
use crate::scalar::{independent_subset, CycScalar, ExactMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub spec: IrrModuleSpec,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub kind: DiagramKind,
    pub m_max: usize,
    pub components: Vec<Component>,
    /// Level dimensions after removing the radical of the form.
    pub level_dims: Vec<usize>,
    pub radical_dims: Vec<usize>,
    /// Lowest weight generators of the summands, in quotient coordinates.
    #[serde(skip)]
    pub generators: Vec<(IrrModuleSpec, Vec<CycScalar>)>,
}

impl Decomposition {
    pub fn multiplicity(&self, spec: &IrrModuleSpec) -> usize {
        self.components.iter().find(|c| c.spec == *spec).map_or(0, |c| c.multiplicity)
    }
}

fn is_nonsingular_diagonal(g: &ExactMatrix) -> bool {
    (0..g.rows()).all(|r| (0..g.cols()).all(|c| (r == c) != g.get(r, c).is_zero()))
}

/// The module on V_m / rad(⟨·,·⟩) at every level, with the dimensions of the radicals.
pub fn radical_quotient(module: &SequenceModule) -> Result<(SequenceModule, Vec<usize>)> {
    if module.gram.iter().all(is_nonsingular_diagonal) {
        return Ok((module.clone(), vec![0; module.m_max + 1]));
    }
    let mut keep = Vec::new();
    let mut project = Vec::new();
    for g in &module.gram {
        let cols: Vec<Vec<CycScalar>> = (0..g.cols()).map(|c| g.column(c)).collect();
        let p = independent_subset(&cols);
        let inv = g.select(&p, &p).inverse()?;
        let rows = ExactMatrix::from_fn(p.len(), g.cols(), |r, c| g.get(p[r], c).clone());
        project.push(inv.try_mul(&rows)?);
        keep.push(p);
    }
    let embed = |m: usize| {
        let p = &keep[m];
        ExactMatrix::from_fn(module.dims[m], p.len(), |r, c| if p[c] == r { CycScalar::one() } else { CycScalar::zero() })
    };
    let conj = |a: &ExactMatrix, to: usize, from: usize| project[to].try_mul(a)?.try_mul(&embed(from));
    let dims: Vec<usize> = keep.iter().map(Vec::len).collect();
    let radical = module.dims.iter().zip(&dims).map(|(a, b)| a - b).collect();
    let gram = module.gram.iter().zip(&keep).map(|(g, p)| g.select(p, p)).collect();
    let create = module
        .create
        .iter()
        .enumerate()
        .map(|(m, v)| v.iter().map(|a| conj(a, m + 1, m)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let annihilate = module
        .annihilate
        .iter()
        .enumerate()
        .map(|(m, v)| v.iter().map(|a| conj(a, m, m + 1)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let rotate = match &module.rotate {
        Some(r) => Some(r.iter().enumerate().map(|(m, a)| conj(a, m, m)).collect::<Result<_>>()?),
        None => None,
    };
    let q = SequenceModule { kind: module.kind, m_max: module.m_max, dims, gram, create, annihilate, rotate };
    Ok((q, radical))
}

/// Basis of the vectors at level k killed by every α_j*.
pub fn lowest_weight_space(module: &SequenceModule, k: usize) -> Result<Vec<Vec<CycScalar>>> {
    if k > module.m_max {
        return Err(Error::IndexOutOfRange { index: k, max: module.m_max });
    }
    let dim = module.dims[k];
    if k == 0 {
        return Ok((0..dim).map(|i| (0..dim).map(|j| CycScalar::from_int((i == j) as i64)).collect()).collect());
    }
    let mut stacked = ExactMatrix::zeros(0, dim);
    for a in &module.annihilate[k - 1] {
        stacked = stacked.vstack(a)?;
    }
    Ok(stacked.kernel())
}

/// Splits a τ-invariant subspace of level k into eigenspaces of τ, indexed by r with eigenvalue ζ_k^r.
pub fn rotation_eigenspaces(
    module: &SequenceModule,
    k: usize,
    vectors: &[Vec<CycScalar>],
) -> Result<Vec<(usize, Vec<Vec<CycScalar>>)>> {
    let rot = module.rotate.as_ref().ok_or(Error::NotRectangular)?;
    if k <= 1 {
        return Ok(vec![(0, vectors.to_vec())]);
    }
    let t = &rot[k];
    let inv_k = CycScalar::from_ratio(1, k as i64);
    let mut out = Vec::new();
    for r in 0..k {
        let mut powers = ExactMatrix::identity(module.dims[k]);
        let mut proj = ExactMatrix::zeros(module.dims[k], module.dims[k]);
        for j in 0..k {
            let w = CycScalar::root_of_unity(k as u32, -((r * j) as i64));
            proj = proj.try_add(&powers.scale(&w))?;
            powers = t.try_mul(&powers)?;
        }
        let proj = proj.scale(&inv_k);
        let images: Vec<Vec<CycScalar>> = vectors.iter().map(|v| proj.mul_vec(v)).collect::<Result<_>>()?;
        let basis = independent_subset(&images).into_iter().map(|i| images[i].clone()).collect();
        out.push((r, basis));
    }
    Ok(out)
}

/// Gram–Schmidt without normalization.
fn orthogonalize(g: &ExactMatrix, vectors: Vec<Vec<CycScalar>>) -> Result<Vec<Vec<CycScalar>>> {
    let mut out: Vec<(Vec<CycScalar>, CycScalar)> = Vec::new();
    for mut v in vectors {
        for (u, uu) in &out {
            let c = gram_inner(g, &v, u);
            if !c.is_zero() {
                let f = &c * &uu.inv()?;
                for (x, y) in v.iter_mut().zip(u) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
        }
        let vv = gram_inner(g, &v, &v);
        if vv.is_zero() {
            return Err(Error::RelationViolated("isotropic lowest weight vector: the form is not positive".into()));
        }
        out.push((v, vv));
    }
    Ok(out.into_iter().map(|(v, _)| v).collect())
}

/// Decomposes a module into irreducibles: at each weight k the vectors killed by every α_j*
/// form the orthogonal complement of everything generated below k, and (annular case) split
/// by the eigenvalue of τ. The split is then checked to be orthogonal and exhaustive.
pub fn decompose(module: &SequenceModule) -> Result<Decomposition> {
    module.validate()?;
    let (q, radical_dims) = radical_quotient(module)?;
    let mut generators: Vec<(IrrModuleSpec, Vec<CycScalar>)> = Vec::new();
    let mut components = Vec::new();
    for k in 0..=q.m_max {
        let lowest = lowest_weight_space(&q, k)?;
        if lowest.is_empty() {
            continue;
        }
        let split = match q.kind {
            DiagramKind::Rect => vec![(IrrModuleSpec::rect(k), lowest)],
            DiagramKind::Ann => rotation_eigenspaces(&q, k, &lowest)?
                .into_iter()
                .map(|(r, vs)| (IrrModuleSpec::ann(k, r), vs))
                .collect(),
        };
        for (spec, vs) in split {
            if vs.is_empty() {
                continue;
            }
            let vs = orthogonalize(&q.gram[k], vs)?;
            components.push(Component { spec, multiplicity: vs.len() });
            generators.extend(vs.into_iter().map(|v| (spec, v)));
        }
    }
    verify_split(&q, &generators)?;
    Ok(Decomposition { kind: q.kind, m_max: q.m_max, components, level_dims: q.dims.clone(), radical_dims, generators })
}

/// Every summand α_I u is orthogonal to every other summand, has Gram ⟨u,u⟩·1, and together they span each level.
fn verify_split(q: &SequenceModule, generators: &[(IrrModuleSpec, Vec<CycScalar>)]) -> Result<()> {
    for m in 0..=q.m_max {
        let mut cols: Vec<Vec<CycScalar>> = Vec::new();
        let mut owner: Vec<usize> = Vec::new();
        let mut norms: Vec<CycScalar> = Vec::new();
        for (idx, (spec, u)) in generators.iter().enumerate() {
            norms.push(gram_inner(&q.gram[spec.k], u, u));
            for s in irr_basis(spec.k, m) {
                cols.push(q.apply_word(&creation_word(spec.k, &s), u)?);
                owner.push(idx);
            }
        }
        if cols.len() != q.dims[m] {
            return Err(Error::RelationViolated(format!(
                "summands give dimension {} at level {m}, module has {}",
                cols.len(),
                q.dims[m]
            )));
        }
        if cols.is_empty() {
            continue;
        }
        let v = ExactMatrix::from_columns(q.dims[m], &cols)?;
        let gv = v.conj_transpose().try_mul(&q.gram[m].try_mul(&v)?)?;
        for a in 0..cols.len() {
            for b in 0..cols.len() {
                let expected = if a == b { norms[owner[a]].clone() } else { CycScalar::zero() };
                if *gv.get(b, a) != expected {
                    return Err(Error::RelationViolated(format!("summands are not orthogonal at level {m}")));
                }
            }
        }
    }
    Ok(())
}
