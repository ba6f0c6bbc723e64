//! Self-checking suites, one per acceptance criterion. Every check compares the engine
//! against an independent closed form or a direct computation.

use std::collections::BTreeMap;
use std::fmt::Debug;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::algebra::{bratteli, minimal_projection, wedderburn_check, ProjectionPattern};
use crate::cmodule::{decompose, intertwiners, irr_matrices, IrrModuleSpec, SequenceModule};
use crate::diagram::{
    adjoint_lin, count_formula, enumerate_ann, enumerate_rect, then_lin, to_dotted_basis, DecoratedDiagram,
    Diagram, DiagramKind, RectDiagram,
};
use crate::error::{Error, Result};
use crate::fock::{
    big_theta, d_action, fock_basis, gicar_element, gicar_monomials, theta_generator, theta_monomial, FockVector,
    GicarGenerator, Monomial,
};
use crate::lincomb::LinComb;
use crate::scalar::{commutant, span_rank, CycScalar, ExactMatrix};
use crate::tensorrep::{
    annular_degeneracy_report, evaluation_rank, minimal_projection_trace, necklace_count, odd_jones, represent_word, separating_test, toy_module,
    ToyContext,
};
use crate::word::{enumerate_standard, normalize, psi, psi_inverse, random_word, Letter, StandardWord, Word};

pub const SUITES: [&str; 9] = [
    "counting",
    "standard-form",
    "gicar",
    "theta",
    "gicar-reps",
    "annular-algebra",
    "irr-modules",
    "toy",
    "consistency",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    fn new(suite: &str) -> Self {
        VerifyReport { suite: suite.to_string(), checks: Vec::new(), passed: 0, failed: 0 }
    }

    fn push(&mut self, id: impl Into<String>, expected: String, got: String, pass: bool) {
        if pass {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.checks.push(Check { id: id.into(), expected, got, pass });
    }

    fn expect<T: PartialEq + Debug>(&mut self, id: impl Into<String>, expected: T, got: T) {
        let pass = expected == got;
        self.push(id, format!("{expected:?}"), format!("{got:?}"), pass);
    }

    /// A family of checks summarized as "count of successes out of total", listing the first failure.
    fn all(&mut self, id: impl Into<String>, total: usize, failures: Vec<String>) {
        let got = match failures.first() {
            None => format!("{total}/{total}"),
            Some(f) => format!("{}/{total}, first failure: {f}", total - failures.len()),
        };
        self.push(id, format!("{total}/{total}"), got, failures.is_empty());
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Upper bound applied to every size parameter of the suites.
    pub max: usize,
    pub random_words: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max: 8, random_words: 10_000, seed: 20_240_601 }
    }
}

impl VerifyConfig {
    fn bound(&self, full: usize) -> usize {
        full.min(self.max)
    }
}

pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<VerifyReport> {
    match name {
        "counting" => counting(cfg),
        "standard-form" => standard_form(cfg),
        "gicar" => gicar(cfg),
        "theta" => theta_suite(cfg),
        "gicar-reps" => gicar_reps(cfg),
        "annular-algebra" => annular_algebra(cfg),
        "irr-modules" => irr_modules(cfg),
        "toy" => toy(cfg),
        "consistency" => consistency(cfg),
        other => Err(Error::InvalidSpec(format!("unknown suite '{other}' (expected one of {})", SUITES.join(", ")))),
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<VerifyReport>> {
    SUITES.iter().map(|s| run_suite(s, cfg)).collect()
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn counting(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("counting");
    let b = cfg.bound(6);
    for n in 1..=b {
        for m in 1..=n {
            let expected: Vec<usize> = (1..=m).map(|k| m * binom(n, k) * binom(m - 1, k - 1)).collect();
            let got: Vec<usize> = (1..=m).map(|k| enumerate_ann(m, n, Some(k)).len()).collect();
            rep.expect(format!("|AP({m},{n};k)| for k=1..{m}"), expected.clone(), got);
            rep.expect(format!("|AP({m},{n})|"), 1 + expected.iter().sum::<usize>(), enumerate_ann(m, n, None).len());
        }
    }
    for n in 0..=cfg.bound(8) {
        let expected: usize = (0..=n).map(|k| binom(n, k).pow(2)).sum();
        rep.expect(format!("|RP({n},{n})|"), expected, enumerate_rect(n, n, None).len());
    }
    Ok(rep)
}

fn standard_form(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("standard-form");
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut failures = Vec::new();
    for _ in 0..cfg.random_words {
        let w = random_word(&mut rng, cfg.bound(6), 12);
        let fail = match normalize(&w) {
            Err(e) => Some(format!("{w}: {e}")),
            Ok(sw) => {
                if normalize(&sw.to_word()).as_ref() != Ok(&sw) {
                    Some(format!("{w}: normal form not idempotent"))
                } else if psi(&w) != sw.diagram() {
                    Some(format!("{w}: diagram changed"))
                } else {
                    None
                }
            }
        };
        failures.extend(fail);
    }
    rep.all("random words: terminates, idempotent, same diagram", cfg.random_words, failures);
    let b = cfg.bound(4);
    for m in 0..=b {
        for n in 0..=b {
            let diagrams = enumerate_ann(m, n, None);
            let bad: Vec<String> =
                diagrams.iter().filter(|d| psi_inverse(d).diagram() != **d).map(|d| d.to_string()).collect();
            rep.all(format!("Ψ∘Ψ⁻¹ = id on AP({m},{n})"), diagrams.len(), bad);
            let words = enumerate_standard(m, n);
            let bad: Vec<String> =
                words.iter().filter(|w| psi_inverse(&w.diagram()) != **w).map(|w| w.to_string()).collect();
            rep.all(format!("Ψ⁻¹∘Ψ = id on standard words {m}→{n}"), words.len(), bad);
        }
    }
    Ok(rep)
}

/// x·y with y applied first.
fn mul<D: Diagram>(x: &LinComb<D>, y: &LinComb<D>) -> Result<LinComb<D>> {
    then_lin(y, x)
}

fn gicar(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("gicar");
    for n in 1..=cfg.bound(4) {
        let vecs: Vec<Vec<CycScalar>> =
            gicar_monomials(n).iter().map(|m| gicar_element(m, n).map(|x| x.flatten())).collect::<Result<_>>()?;
        let expected: usize = (0..=n).map(|k| binom(n, k).pow(2)).sum();
        rep.expect(format!("dim span GICAR monomials, n={n}"), expected, span_rank(&vecs));
        let ps: Vec<LinComb<RectDiagram>> = ProjectionPattern::all(n).iter().map(minimal_projection).collect();
        let mut bad = Vec::new();
        let mut sum = LinComb::zero();
        for (i, p) in ps.iter().enumerate() {
            for (j, q) in ps.iter().enumerate() {
                let pq = mul(p, q)?;
                let ok = if i == j { pq == *p } else { pq.is_zero() };
                if !ok {
                    bad.push(format!("p{i}·p{j}"));
                }
            }
            sum = sum.add(p);
        }
        if sum != LinComb::basis(RectDiagram::identity(n)) {
            bad.push("sum is not the identity".into());
        }
        rep.expect(format!("number of minimal projections, n={n}"), 1usize << n, ps.len());
        rep.all(format!("minimal projections orthogonal and complete, n={n}"), ps.len() * ps.len() + 1, bad);
    }
    let rows = bratteli(cfg.bound(8))?;
    for row in &rows {
        let pascal: Vec<usize> = (0..=row.level).map(|k| binom(row.level, k)).collect();
        rep.expect(format!("Bratteli row {}", row.level), pascal, row.multiplicities.clone());
        let mults: Vec<usize> = row.edges.iter().map(|e| e.multiplicity).collect();
        if !mults.is_empty() {
            rep.expect(format!("Bratteli edge multiplicities from level {}", row.level), vec![1; mults.len()], mults);
        }
    }
    Ok(rep)
}

fn theta_suite(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("theta");
    let b = cfg.bound(4);
    for n in 1..=b {
        let basis = fock_basis(n);
        let images: Vec<_> = basis.iter().map(|s| FockVector::basis(n, s.clone()).map(|v| big_theta(&v))).collect::<Result<_>>()?;
        let mut bad = Vec::new();
        for (i, x) in images.iter().enumerate() {
            for (j, y) in images.iter().enumerate() {
                let expected = CycScalar::from_int((i == j) as i64);
                if x.inner(y) != expected {
                    bad.push(format!("{:?},{:?}", basis[i], basis[j]));
                }
            }
        }
        rep.all(format!("D1: Θ is unitary on the wedge basis, n={n}"), images.len().pow(2), bad);

        let gens: Vec<Monomial> = std::iter::once(Monomial::identity())
            .chain(GicarGenerator::all(n).into_iter().flat_map(|g| [g.monomial(), g.monomial().adjoint()]))
            .collect();
        let monos = gicar_monomials(n);
        let mut bad = Vec::new();
        let mut total = 0;
        for x in &monos {
            let tx = theta_monomial(x, n)?;
            total += 1;
            if theta_monomial(&x.adjoint(), n)? != adjoint_lin(&tx) {
                bad.push(format!("θ(({x})*)"));
            }
            for y in &gens {
                total += 1;
                let lhs = theta_monomial(&x.times(&y.adjoint()), n)?;
                let rhs = mul(&tx, &adjoint_lin(&theta_monomial(y, n)?))?;
                if lhs != rhs {
                    bad.push(format!("θ({x}·({y})*)"));
                }
            }
        }
        rep.all(format!("D2: θ(xy*) = θ(x)θ(y)*, n={n}"), total, bad);

        let mut bad = Vec::new();
        let mut total = 0;
        for g in GicarGenerator::all(n) {
            let tg = theta_generator(g, n)?;
            for s in &basis {
                total += 1;
                let v = FockVector::basis(n, s.clone())?;
                if big_theta(&g.monomial().apply(&v)?) != d_action(&tg, &big_theta(&v))? {
                    bad.push(format!("{g} on {s:?}"));
                }
            }
        }
        rep.all(format!("D3: Θ(xv) = θ(x)Θ(v) for f_i, u_i, n={n}"), total, bad);
    }
    if b >= 3 {
        let t = theta_monomial(&"a1 a3*".parse()?, 3)?;
        let a = DecoratedDiagram::all_dotted(RectDiagram::from_pairs(3, 3, vec![(1, 2), (2, 3)])?);
        let c = DecoratedDiagram::all_dotted(RectDiagram::from_pairs(3, 3, vec![(1, 3)])?);
        let expected: LinComb<_> = [(CycScalar::one(), a), (CycScalar::from_int(-1), c)].into_iter().collect();
        rep.expect("θ(a1 a3*) at n=3 in the dotted basis", expected.to_string(), to_dotted_basis(&t).to_string());
    }
    Ok(rep)
}

fn block_indices(n: usize, keep: impl Fn(&Vec<usize>) -> bool) -> Vec<usize> {
    fock_basis(n).iter().enumerate().filter(|(_, s)| keep(s)).map(|(i, _)| i).collect()
}

fn gicar_reps(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("gicar-reps");
    for n in 1..=cfg.bound(4) {
        let gens: Vec<ExactMatrix> =
            GicarGenerator::all(n).into_iter().map(|g| gicar_element(&g.monomial(), n)).collect::<Result<_>>()?;
        let all: Vec<ExactMatrix> = gicar_monomials(n).iter().map(|m| gicar_element(m, n)).collect::<Result<_>>()?;
        let mut commutants = Vec::new();
        let mut mults = Vec::new();
        for k in 0..=n {
            let idx = block_indices(n, |s| s.len() == k);
            let restricted: Vec<ExactMatrix> = gens.iter().map(|g| g.select(&idx, &idx)).collect();
            commutants.push(commutant(&restricted, idx.len())?.len());
            let dim = 1usize << n;
            let z = ExactMatrix::from_fn(dim, dim, |r, c| CycScalar::from_int((r == c && idx.contains(&r)) as i64));
            let rank = span_rank(&all.iter().map(|x| z.try_mul(x).map(|y| y.flatten())).collect::<Result<Vec<_>>>()?);
            mults.push(rank / idx.len());
        }
        rep.expect(format!("commutant dimension of each Λ^k, n={n}"), vec![1; n + 1], commutants);
        rep.expect(format!("regular representation multiplicities, n={n}"), (0..=n).map(|k| binom(n, k)).collect(), mults);
        if n >= 2 {
            let sub: Vec<ExactMatrix> = GicarGenerator::all(n - 1)
                .into_iter()
                .map(|g| gicar_element(&g.monomial(), n))
                .collect::<Result<_>>()?;
            for k in 1..n {
                let whole = block_indices(n, |s| s.len() == k);
                let without = block_indices(n, |s| s.len() == k && !s.contains(&n));
                let with = block_indices(n, |s| s.len() == k && s.contains(&n));
                let invariant = sub.iter().all(|g| g.select(&with, &without).is_zero() && g.select(&without, &with).is_zero());
                let pieces: Vec<usize> = [&without, &with]
                    .iter()
                    .map(|part| {
                        let r: Vec<ExactMatrix> = sub.iter().map(|g| g.select(part, part)).collect();
                        commutant(&r, part.len()).map(|c| c.len())
                    })
                    .collect::<Result<_>>()?;
                let r: Vec<ExactMatrix> = sub.iter().map(|g| g.select(&whole, &whole)).collect();
                let joint = commutant(&r, whole.len())?.len();
                rep.expect(
                    format!("Λ^{k}H_{n} restricted to G_{}: dims, invariance, commutants", n - 1),
                    (binom(n - 1, k), binom(n - 1, k - 1), true, vec![1, 1], 2),
                    (without.len(), with.len(), invariant, pieces, joint),
                );
            }
        }
    }
    Ok(rep)
}

fn annular_algebra(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("annular-algebra");
    for n in 0..=cfg.bound(4) {
        let w = wedderburn_check(DiagramKind::Ann, n)?;
        rep.all(format!("annular matrix units, n={n}"), w.checks.max(1), w.failures.iter().map(|f| format!("{f:?}")).collect());
        let mut expected = vec![(0, 1)];
        for k in 1..=n {
            expected.extend(std::iter::repeat_n((k, binom(n, k)), k));
        }
        let got: Vec<(usize, usize)> = w.summands.iter().map(|s| (s.weight, s.size)).collect();
        rep.expect(format!("summand pattern C ⊕ ⊕ k·M_C(n,k), n={n}"), expected, got);
        let dim = 1 + (1..=n).map(|k| k * binom(n, k).pow(2)).sum::<usize>();
        rep.expect(format!("dimension = |AP({n},{n})|, n={n}"), (dim, enumerate_ann(n, n, None).len()), (w.dimension, w.enumerated));
    }
    Ok(rep)
}

fn irr_specs(k_max: usize) -> Vec<IrrModuleSpec> {
    let mut v = IrrModuleSpec::all(DiagramKind::Rect, k_max);
    v.extend(IrrModuleSpec::all(DiagramKind::Ann, k_max));
    v
}

fn random_invertible(rng: &mut StdRng, n: usize) -> ExactMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut t = ExactMatrix::zeros(n, n);
    for (c, &r) in perm.iter().enumerate() {
        t.set(r, c, CycScalar::from_int([-2, -1, 1, 2, 3][rng.gen_range(0..5)]));
    }
    let mut u = ExactMatrix::identity(n);
    for _ in 0..n / 2 {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a < b {
            u.set(a, b, CycScalar::from_int(rng.gen_range(-1..=1)));
        }
    }
    u.try_mul(&t).expect("square")
}

fn irr_modules(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("irr-modules");
    let k_max = cfg.bound(3);
    let m_top = cfg.bound(6);
    for spec in irr_specs(k_max) {
        let v = irr_matrices(&spec, m_top)?;
        let label = spec_label(&spec);
        let dims: Vec<usize> = (0..=m_top).map(|m| binom(m, spec.k)).collect();
        rep.expect(format!("dim {label}_m, m ≤ {m_top}"), dims, v.dims.clone());
        rep.expect(format!("Gram = 1 on {label}, m ≤ {m_top}"), true, v.gram.iter().all(ExactMatrix::is_identity));
        rep.all(format!("adjointness and relations in {label}"), 1, v.check()?);
        let small = irr_matrices(&spec, cfg.bound(5))?;
        rep.expect(format!("End({label}) is scalar"), 1, intertwiners(&small, &small)?.len());
    }
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    for trial in 0..20 {
        let kind = if trial % 2 == 0 { DiagramKind::Rect } else { DiagramKind::Ann };
        let m_max = rng.gen_range(k_max.min(3)..=cfg.bound(5).max(k_max.min(3)));
        let mut pool = IrrModuleSpec::all(kind, k_max.min(m_max));
        pool.shuffle(&mut rng);
        let mut expected = BTreeMap::new();
        let mut parts = Vec::new();
        for spec in pool.into_iter().take(rng.gen_range(1..=3)) {
            let mult = rng.gen_range(1..=3);
            expected.insert(spec_label(&spec), mult);
            let v = irr_matrices(&spec, m_max)?;
            parts.extend(std::iter::repeat_n(v, mult));
        }
        parts.shuffle(&mut rng);
        let sum = SequenceModule::direct_sum(&parts)?;
        let t: Vec<ExactMatrix> = sum.dims.iter().map(|&d| random_invertible(&mut rng, d)).collect();
        let module = sum.change_basis(&t)?;
        let got: BTreeMap<String, usize> =
            decompose(&module)?.components.iter().map(|c| (spec_label(&c.spec), c.multiplicity)).collect();
        rep.expect(format!("decompose random assembly #{trial} ({kind:?}, m_max={m_max})"), expected, got);
    }
    Ok(rep)
}

pub fn spec_label(spec: &IrrModuleSpec) -> String {
    match spec.omega {
        Some(r) => format!("V^{{{},ζ^{r}}}", spec.k),
        None => format!("V^{}", spec.k),
    }
}

fn toy(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("toy");
    let m4 = cfg.bound(4);
    for d in 0..=2 {
        toy_relations(&mut rep, &ToyContext::new(d), m4)?;
    }
    for d in 1..=2 {
        toy_jones(&mut rep, &ToyContext::new(d), cfg.bound(3))?;
    }
    for d in 1..=3 {
        toy_traces(&mut rep, &ToyContext::new(d), m4)?;
    }
    for d in 1..=2 {
        toy_separating(&mut rep, &ToyContext::new(d), m4)?;
    }
    toy_rank(&mut rep, &ToyContext::new(1), m4)?;
    Ok(rep)
}

/// The identity suite of the tensor representation for one value of d.
pub fn toy_suite(ctx: &ToyContext, m_max: usize) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("toy");
    toy_relations(&mut rep, ctx, m_max)?;
    if ctx.d >= 1 {
        toy_jones(&mut rep, ctx, m_max.min(3))?;
        toy_traces(&mut rep, ctx, m_max)?;
        toy_separating(&mut rep, ctx, m_max)?;
        toy_rank(&mut rep, ctx, m_max.min(if ctx.d == 1 { 4 } else { 3 }))?;
    }
    let report = annular_degeneracy_report(ctx, m_max)?;
    let bad = report
        .rect
        .iter()
        .chain(&report.ann)
        .filter(|m| m.expected.is_some_and(|e| e != m.multiplicity))
        .map(|m| format!("k={} r={:?}: {} vs {:?}", m.k, m.r, m.multiplicity, m.expected))
        .collect();
    rep.all(format!("multiplicities match d^k and necklace counts, d={}", ctx.d), report.rect.len() + report.ann.len(), bad);
    Ok(rep)
}

fn toy_relations(rep: &mut VerifyReport, ctx: &ToyContext, m4: usize) -> Result<()> {
    let d = ctx.d;
    for kind in [DiagramKind::Rect, DiagramKind::Ann] {
        let m = toy_module(ctx, kind, m4)?;
        rep.all(format!("creation/annihilation relations, {kind:?}, d={d}, m ≤ {m4}"), 1, m.check()?);
    }
    let mut bad = Vec::new();
    for m in 0..=m4 {
        let t = ctx.rotate_matrix(m);
        let full = (0..m).try_fold(ExactMatrix::identity(ctx.level_dim(m)), |acc, _| t.try_mul(&acc))?;
        if !full.is_identity() || !t.conj_transpose().try_mul(&t)?.is_identity() {
            bad.push(format!("τ at level {m}"));
        }
        for i in 2..=m {
            let lhs = Word::new(m - 1, &[Letter::Create(i), Letter::Rotate(1)])?;
            let rhs = Word::new(m - 1, &[Letter::Rotate(1), Letter::Create(i - 1)])?;
            if represent_word(ctx, &lhs)? != represent_word(ctx, &rhs)? {
                bad.push(format!("α{i}τ = τα{} at level {}", i - 1, m - 1));
            }
        }
    }
    rep.all(format!("τ unitary, τ^m = 1 and α_iτ = τα_(i-1), d={d}"), m4 + 1, bad);
    Ok(())
}

fn toy_jones(rep: &mut VerifyReport, ctx: &ToyContext, m3: usize) -> Result<()> {
    let mut bad = Vec::new();
    let mut total = 0;
    for m in 1..=m3 {
        let es: Vec<ExactMatrix> = (1..=m).map(|i| odd_jones(ctx, i, m)).collect::<Result<_>>()?;
        for i in 1..=m {
            let e = &es[i - 1];
            total += 1;
            if e.try_mul(e)? != *e || e.conj_transpose() != *e {
                bad.push(format!("e{} at m={m} is not a projection", 2 * i - 1));
            }
            for j in (1..=m).filter(|&j| j != i) {
                total += 1;
                let hop = represent_word(ctx, &Word::new(m, &[Letter::Create(i), Letter::Annihilate(j)])?)?;
                let back = represent_word(ctx, &Word::new(m, &[Letter::Create(j), Letter::Annihilate(i)])?)?;
                if hop.try_mul(&back)? != *e || back.try_mul(&hop)? != es[j - 1] || *e == es[j - 1] {
                    bad.push(format!("(a{i}a{j}*)(a{j}a{i}*) at m={m}"));
                }
            }
        }
    }
    rep.all(format!("odd Jones projections and equivalences, d={}", ctx.d), total, bad);
    Ok(())
}

fn toy_traces(rep: &mut VerifyReport, ctx: &ToyContext, m4: usize) -> Result<()> {
    let d = ctx.d;
    let mut expected = Vec::new();
    let mut got = Vec::new();
    for n in 1..=m4 {
        for pat in ProjectionPattern::all(n) {
            expected.push((pat.to_string(), (d as i64).pow(pat.dotted_count() as u32)));
            let tr = minimal_projection_trace(ctx, &pat)?;
            got.push((pat.to_string(), tr.to_rational().map_or(-1, |q| q.to_integer().try_into().unwrap_or(-1))));
        }
    }
    rep.expect(format!("Tr of minimal projections = d^j, d={d}"), expected, got);
    Ok(())
}

fn toy_separating(rep: &mut VerifyReport, ctx: &ToyContext, m4: usize) -> Result<()> {
    let mut bad = Vec::new();
    let mut total = 0;
    for m in 0..=m4 {
        for n in 0..=m4 {
            for w in enumerate_standard(m, n).into_iter().filter(StandardWord::is_rectangular) {
                total += 1;
                let r = separating_test(ctx, &w)?;
                if !r.ok() {
                    bad.push(format!("{w}: value {}, vanishing failures {:?}", r.value, r.vanishing_failures));
                }
            }
        }
    }
    rep.all(format!("separating vectors give 1 and isolate the word, d={}", ctx.d), total, bad);
    Ok(())
}

fn toy_rank(rep: &mut VerifyReport, ctx: &ToyContext, m4: usize) -> Result<()> {
    for m in 0..=m4 {
        for n in 0..=m4 {
            let (words, rank) = evaluation_rank(ctx, m, n)?;
            rep.expect(format!("evaluation rank of RG({m},{n}), d={}", ctx.d), words, rank);
        }
    }
    Ok(())
}

fn consistency(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new("consistency");
    let b = cfg.bound(6);
    for m in 0..=b {
        for n in 0..=b {
            let f = count_formula(m, n, None) as usize;
            rep.expect(
                format!("count formula = standard words = diagrams, {m}→{n}"),
                (f, f),
                (enumerate_standard(m, n).len(), enumerate_ann(m, n, None).len()),
            );
        }
    }
    let k_max = cfg.bound(4);
    for d in 1..=3 {
        let dec = decompose(&toy_module(&ToyContext::new(d), DiagramKind::Ann, k_max)?)?;
        let mut expected = Vec::new();
        let mut got = Vec::new();
        for k in 0..=k_max {
            for r in 0..k.max(1) {
                expected.push(((k, r), necklace_count(d, k, r)?));
                got.push(((k, r), dec.multiplicity(&IrrModuleSpec::ann(k, r))));
            }
        }
        rep.expect(format!("toy annular multiplicities = necklace counts, d={d}"), expected, got);
    }
    Ok(rep)
}
