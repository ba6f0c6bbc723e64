//! Semisimple structure of RP_n and AP_n.
//!
//! Everything here is computed in the basis of fully dotted diagrams, where the
//! minimal projections and matrix units have one or a few terms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{
    binomial, dotted_adjoint_lin, dotted_then_lin, enumerate_ann, enumerate_rect, from_dotted_basis, subsets,
    to_dotted_basis, AnnDiagram, DecoratedDiagram, Diagram, DiagramKind, RectDiagram,
};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::CycScalar;

/// A combination of fully dotted diagrams.
pub type Dotted<D> = LinComb<DecoratedDiagram<D>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strand {
    Broken,
    Dotted,
}

/// A simple tensor of broken (e₁) and dotted (1 − e₁) strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProjectionPattern {
    pub pattern: Vec<Strand>,
}

impl ProjectionPattern {
    pub fn n(&self) -> usize {
        self.pattern.len()
    }

    pub fn from_dotted(n: usize, dotted: &[usize]) -> Self {
        let pattern = (1..=n).map(|p| if dotted.contains(&p) { Strand::Dotted } else { Strand::Broken }).collect();
        ProjectionPattern { pattern }
    }

    pub fn dotted_positions(&self) -> Vec<usize> {
        self.pattern.iter().enumerate().filter(|(_, s)| **s == Strand::Dotted).map(|(i, _)| i + 1).collect()
    }

    pub fn dotted_count(&self) -> usize {
        self.dotted_positions().len()
    }

    /// All 2ⁿ patterns, ordered by dotted positions as (size, lex) subsets.
    pub fn all(n: usize) -> Vec<ProjectionPattern> {
        crate::diagram::all_subsets(n).iter().map(|d| Self::from_dotted(n, d)).collect()
    }
}

impl fmt::Display for ProjectionPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.pattern {
            write!(f, "{}", if *s == Strand::Broken { 'b' } else { 'd' })?;
        }
        Ok(())
    }
}

impl FromStr for ProjectionPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let pattern = s
            .chars()
            .map(|c| match c {
                'b' => Ok(Strand::Broken),
                'd' => Ok(Strand::Dotted),
                other => Err(Error::Parse(format!("pattern letters are b and d, found {other:?}"))),
            })
            .collect::<Result<_>>()?;
        Ok(ProjectionPattern { pattern })
    }
}

/// Fully dotted diagram joining lower `from` to upper `to` in order.
pub fn dotted_unit(n: usize, from: &[usize], to: &[usize]) -> Result<DecoratedDiagram<RectDiagram>> {
    if from.len() != to.len() {
        return Err(Error::DimensionMismatch(format!("{from:?} and {to:?} differ in size")));
    }
    let base = RectDiagram::from_pairs(n, n, from.iter().copied().zip(to.iter().copied()).collect())?;
    Ok(DecoratedDiagram::all_dotted(base))
}

pub fn minimal_projection_dotted(p: &ProjectionPattern) -> Dotted<RectDiagram> {
    let d = p.dotted_positions();
    LinComb::basis(dotted_unit(p.n(), &d, &d).expect("same set"))
}

/// The minimal projection as a combination of plain diagrams.
pub fn minimal_projection(p: &ProjectionPattern) -> LinComb<RectDiagram> {
    from_dotted_basis(&minimal_projection_dotted(p))
}

/// The fully dotted annular diagram rotating the strings at `dotted` by `j` steps among themselves.
pub fn dotted_rotation(n: usize, dotted: &[usize], j: usize) -> Result<DecoratedDiagram<AnnDiagram>> {
    let k = dotted.len().max(1);
    Ok(DecoratedDiagram::all_dotted(AnnDiagram::new(n, n, dotted.to_vec(), dotted.to_vec(), j % k)?))
}

/// (1/k) Σ_j ω^{−j} (dotted rotation of the strings at `dotted`)^j with ω = ζ_k^r, k = |dotted|.
pub fn refined_projection(n: usize, dotted: &[usize], r: usize) -> Result<Dotted<AnnDiagram>> {
    let k = dotted.len();
    if k == 0 {
        return Ok(LinComb::basis(dotted_rotation(n, dotted, 0)?));
    }
    if r >= k {
        return Err(Error::InvalidSpec(format!("eigenvalue index {r} with {k} dotted strings")));
    }
    let inv_k = CycScalar::from_ratio(1, k as i64);
    let mut out = LinComb::zero();
    for j in 0..k {
        let w = CycScalar::root_of_unity(k as u32, -((r * j) as i64));
        out.add_term(&w * &inv_k, dotted_rotation(n, dotted, j)?);
    }
    Ok(out)
}

/// The rotational idempotent p_k^ω on k points, expanded into plain annular diagrams.
pub fn rotational_idempotent(k: usize, r: usize) -> Result<LinComb<AnnDiagram>> {
    if k == 0 {
        return Err(Error::ZeroOrder);
    }
    let all: Vec<usize> = (1..=k).collect();
    Ok(from_dotted_basis(&refined_projection(k, &all, r)?))
}

/// A shortest path from `from` to `to` in the Johnson graph, moving one point to a free neighbour per step.
pub fn johnson_path(from: &[usize], to: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = from.to_vec();
    let mut path = vec![cur.clone()];
    for i in (0..cur.len()).rev() {
        while cur[i] < to[i] {
            cur[i] += 1;
            path.push(cur.clone());
        }
    }
    for i in 0..cur.len() {
        while cur[i] > to[i] {
            cur[i] -= 1;
            path.push(cur.clone());
        }
    }
    path
}

/// Partial isometry from the dotted strings at `from` to those at `to`, the product of one-step moves.
pub fn path_unit(n: usize, from: &[usize], to: &[usize]) -> Result<Dotted<RectDiagram>> {
    let path = johnson_path(from, to);
    let mut acc = LinComb::basis(dotted_unit(n, from, from)?);
    for w in path.windows(2) {
        acc = dotted_then_lin(&acc, &LinComb::basis(dotted_unit(n, &w[0], &w[1])?))?;
    }
    Ok(acc)
}

fn rect_to_ann(x: &Dotted<RectDiagram>) -> Dotted<AnnDiagram> {
    x.iter().map(|(d, c)| (c.clone(), DecoratedDiagram::all_dotted(d.base.to_ann()))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    /// Number of dotted through strings.
    pub weight: usize,
    /// Rotation eigenvalue index r (ω = ζ_k^r) for annular summands of weight ≥ 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedderburnReport {
    pub kind: DiagramKind,
    pub n: usize,
    pub summands: Vec<Summand>,
    pub dimension: usize,
    pub enumerated: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl WedderburnReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.dimension == self.enumerated
    }
}

struct UnitCheck<D: Diagram> {
    checks: usize,
    failures: Vec<String>,
    _marker: std::marker::PhantomData<D>,
}

impl<D: Diagram> UnitCheck<D> {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Matrix-unit relations within each block, orthogonality across blocks and completeness.
    fn run(&mut self, blocks: &[(String, Vec<Vec<Dotted<D>>>)], identity: D) -> Result<()> {
        let mul = |x: &Dotted<D>, y: &Dotted<D>| dotted_then_lin(y, x);
        let mut diagonal_sum = LinComb::zero();
        for (name, e) in blocks {
            let size = e.len();
            for a in 0..size {
                diagonal_sum = diagonal_sum.add(&e[a][a]);
                for b in 0..size {
                    self.expect(!e[a][b].is_zero(), || format!("{name}: E[{a}][{b}] vanishes"));
                    self.expect(dotted_adjoint_lin(&e[a][b]) == e[b][a], || format!("{name}: E[{a}][{b}]* ≠ E[{b}][{a}]"));
                    for c in 0..size {
                        for d in 0..size {
                            let prod = mul(&e[a][b], &e[c][d])?;
                            let ok = if b == c { prod == e[a][d] } else { prod.is_zero() };
                            self.expect(ok, || format!("{name}: E[{a}][{b}]·E[{c}][{d}]"));
                        }
                    }
                }
            }
        }
        for (i, (n1, e1)) in blocks.iter().enumerate() {
            for (n2, e2) in &blocks[i + 1..] {
                for x in e1.iter().enumerate().map(|(a, row)| &row[a]) {
                    for y in e2.iter().enumerate().map(|(a, row)| &row[a]) {
                        self.expect(mul(x, y)?.is_zero(), || format!("{n1} and {n2} are not orthogonal"));
                    }
                }
            }
        }
        let id = to_dotted_basis(&LinComb::basis(identity));
        self.expect(diagonal_sum == id, || "diagonal units do not sum to the identity".into());
        Ok(())
    }
}

fn rect_block(n: usize, k: usize) -> Result<Vec<Vec<Dotted<RectDiagram>>>> {
    let sets = subsets(n, k);
    sets.iter().map(|s| sets.iter().map(|t| path_unit(n, t, s)).collect()).collect()
}

/// Builds the full matrix-unit system of RP_n or AP_n and verifies it.
pub fn wedderburn_check(kind: DiagramKind, n: usize) -> Result<WedderburnReport> {
    let mut summands = Vec::new();
    let (checks, failures, enumerated) = match kind {
        DiagramKind::Rect => {
            let mut blocks = Vec::new();
            for k in 0..=n {
                let e = rect_block(n, k)?;
                summands.push(Summand { weight: k, omega: None, size: e.len() });
                blocks.push((format!("weight {k}"), e));
            }
            let mut uc = UnitCheck { checks: 0, failures: vec![], _marker: Default::default() };
            uc.run(&blocks, RectDiagram::identity(n))?;
            (uc.checks, uc.failures, enumerate_rect(n, n, None).len())
        }
        DiagramKind::Ann => {
            let mut blocks = Vec::new();
            for k in 0..=n {
                let base = (1..=k).collect::<Vec<_>>();
                let sets = subsets(n, k);
                let into_base: Vec<Dotted<AnnDiagram>> =
                    sets.iter().map(|t| path_unit(n, t, &base).map(|x| rect_to_ann(&x))).collect::<Result<_>>()?;
                let out_of_base: Vec<Dotted<AnnDiagram>> = into_base.iter().map(dotted_adjoint_lin).collect();
                for r in 0..k.max(1) {
                    let p = refined_projection(n, &base, r)?;
                    let mut e = Vec::with_capacity(sets.len());
                    for a in 0..sets.len() {
                        let mut row = Vec::with_capacity(sets.len());
                        for b in 0..sets.len() {
                            // E_ab = R_{a←base} p R_{base←b}
                            let x = dotted_then_lin(&into_base[b], &p)?;
                            row.push(dotted_then_lin(&x, &out_of_base[a])?);
                        }
                        e.push(row);
                    }
                    let omega = if k >= 1 { Some(r) } else { None };
                    summands.push(Summand { weight: k, omega, size: sets.len() });
                    blocks.push((format!("weight {k} ω-index {r}"), e));
                }
            }
            let mut uc = UnitCheck { checks: 0, failures: vec![], _marker: Default::default() };
            uc.run(&blocks, AnnDiagram::identity(n))?;
            (uc.checks, uc.failures, enumerate_ann(n, n, None).len())
        }
    };
    let dimension = summands.iter().map(|s| s.size * s.size).sum();
    let mut failures = failures;
    for s in &summands {
        if s.size as u128 != binomial(n, s.weight) {
            failures.push(format!("weight {} summand has size {}", s.weight, s.size));
        }
    }
    Ok(WedderburnReport { kind, n, summands, dimension, enumerated, checks, failures })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BratteliEdge {
    pub from: usize,
    pub to: usize,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BratteliRow {
    pub level: usize,
    /// Sizes of the simple summands, indexed by the number of dotted strings.
    pub multiplicities: Vec<usize>,
    /// Edges to the next level, by number of dotted strings.
    pub edges: Vec<BratteliEdge>,
}

/// Right inclusion RP_n → RP_{n+1}, adding a plain string on the right.
pub fn right_inclusion(x: &Dotted<RectDiagram>) -> Dotted<RectDiagram> {
    let plain = to_dotted_basis(&LinComb::basis(RectDiagram::identity(1)));
    x.bilinear(&plain, |a, b| Ok(Some((CycScalar::one(), DecoratedDiagram::all_dotted(a.base.tensor(&b.base))))))
        .expect("tensor products always exist")
}

/// Rows 0..=n_max of the Bratteli diagram of the tower RP_0 ⊂ RP_1 ⊂ ⋯, with edges computed by
/// splitting the image of each minimal projection under the right inclusion.
pub fn bratteli(n_max: usize) -> Result<Vec<BratteliRow>> {
    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let patterns = ProjectionPattern::all(n);
        let mut multiplicities = vec![0; n + 1];
        for p in &patterns {
            multiplicities[p.dotted_count()] += 1;
        }
        let mut edges: Vec<BratteliEdge> = Vec::new();
        if n < n_max {
            let next: Vec<(usize, Dotted<RectDiagram>)> = ProjectionPattern::all(n + 1)
                .iter()
                .map(|q| (q.dotted_count(), minimal_projection_dotted(q)))
                .collect();
            for k in 0..=n {
                let Some(p) = patterns.iter().find(|p| p.dotted_count() == k) else { continue };
                let image = right_inclusion(&minimal_projection_dotted(p));
                let mut counts = vec![0usize; n + 2];
                let mut sum = LinComb::zero();
                for (kk, q) in &next {
                    let qi = dotted_then_lin(&image, q)?;
                    if qi == *q {
                        counts[*kk] += 1;
                        sum = sum.add(q);
                    } else if !qi.is_zero() {
                        return Err(Error::RelationViolated(format!("level {} projection only partly below the image", n + 1)));
                    }
                }
                if sum != image {
                    return Err(Error::RelationViolated(format!("image of a level {n} projection is not a sum of minimal ones")));
                }
                for (to, &m) in counts.iter().enumerate() {
                    if m > 0 {
                        edges.push(BratteliEdge { from: k, to, multiplicity: m });
                    }
                }
            }
        }
        rows.push(BratteliRow { level: n, multiplicities, edges });
    }
    Ok(rows)
}

pub fn bratteli_dot(rows: &[BratteliRow]) -> String {
    let mut s = String::from("digraph bratteli {\n  rankdir=TB;\n");
    for row in rows {
        for (k, m) in row.multiplicities.iter().enumerate() {
            s.push_str(&format!("  n{}_{} [label=\"({},{}):{}\"];\n", row.level, k, row.level, k, m));
        }
    }
    for row in rows {
        for e in &row.edges {
            let label = if e.multiplicity > 1 { format!(" [label=\"{}\"]", e.multiplicity) } else { String::new() };
            s.push_str(&format!("  n{}_{} -> n{}_{}{};\n", row.level, e.from, row.level + 1, e.to, label));
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_round_trip() {
        let p: ProjectionPattern = "bdd".parse().unwrap();
        assert_eq!(p.dotted_positions(), vec![2, 3]);
        assert_eq!(p.to_string(), "bdd");
        assert!("bx".parse::<ProjectionPattern>().is_err());
    }

    #[test]
    fn single_strand_projections() {
        let broken = minimal_projection(&"b".parse().unwrap());
        assert_eq!(broken, LinComb::basis(RectDiagram::broken_at(1, 1).unwrap()));
        let dotted = minimal_projection(&"d".parse().unwrap());
        assert_eq!(dotted, LinComb::basis(RectDiagram::identity(1)).sub(&broken));
    }

    #[test]
    fn johnson_paths_are_adjacent_moves() {
        let p = johnson_path(&[1, 2, 5], &[3, 4, 6]);
        assert_eq!(p.first().unwrap(), &vec![1, 2, 5]);
        assert_eq!(p.last().unwrap(), &vec![3, 4, 6]);
        for w in p.windows(2) {
            let moved: usize = w[0].iter().zip(&w[1]).map(|(a, b)| a.abs_diff(*b)).sum();
            assert_eq!(moved, 1);
            assert!(w[1].windows(2).all(|x| x[0] < x[1]));
        }
    }

    #[test]
    fn small_wedderburn() {
        let r = wedderburn_check(DiagramKind::Rect, 3).unwrap();
        assert!(r.ok(), "{:?}", r.failures);
        assert_eq!(r.summands.iter().map(|s| s.size).collect::<Vec<_>>(), vec![1, 3, 3, 1]);
        let a = wedderburn_check(DiagramKind::Ann, 2).unwrap();
        assert!(a.ok(), "{:?}", a.failures);
        assert_eq!(a.dimension, 7);
    }

    #[test]
    fn pascal_rows() {
        let rows = bratteli(4).unwrap();
        assert_eq!(rows[0].multiplicities, vec![1]);
        assert_eq!(rows[4].multiplicities, vec![1, 4, 6, 4, 1]);
        assert!(rows.iter().flat_map(|r| &r.edges).all(|e| e.multiplicity == 1));
    }
}
