//! The intertwining pair θ_n : G_n → RP_n and Θ_n : 𝓕(ℋ_n) → 𝒟_n.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{check_mode, fock_basis, FockOp, FockVector, Monomial, Subset};
use crate::diagram::{adjoint_lin, then_lin, to_dotted_basis, DecoratedDiagram, Diagram, RectDiagram};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{CycScalar, ExactMatrix};

type Rp = LinComb<RectDiagram>;

/// Generators f_i = a_i*a_i and u_i = a_i*a_{i+1} of G_n, and the adjoints u_i*.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GicarGenerator {
    F(usize),
    U(usize),
    UStar(usize),
}

impl GicarGenerator {
    pub fn monomial(self) -> Monomial {
        match self {
            GicarGenerator::F(i) => Monomial(vec![FockOp::Annihilate(i), FockOp::Create(i)]),
            GicarGenerator::U(i) => Monomial(vec![FockOp::Annihilate(i), FockOp::Create(i + 1)]),
            GicarGenerator::UStar(i) => Monomial(vec![FockOp::Annihilate(i + 1), FockOp::Create(i)]),
        }
    }

    /// All generators f_1..f_n, u_1..u_{n-1}, u_1*..u_{n-1}*.
    pub fn all(n: usize) -> Vec<GicarGenerator> {
        let mut v: Vec<GicarGenerator> = (1..=n).map(GicarGenerator::F).collect();
        v.extend((1..n).map(GicarGenerator::U));
        v.extend((1..n).map(GicarGenerator::UStar));
        v
    }
}

impl fmt::Display for GicarGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GicarGenerator::F(i) => write!(f, "f{i}"),
            GicarGenerator::U(i) => write!(f, "u{i}"),
            GicarGenerator::UStar(i) => write!(f, "u{i}*"),
        }
    }
}

impl FromStr for GicarGenerator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown generator {s:?}"));
        let (head, rest) = s.split_at(1);
        let (star, digits) = match rest.strip_suffix('*') {
            Some(d) => (true, d),
            None => (false, rest),
        };
        let i: usize = digits.parse().map_err(|_| bad())?;
        match (head, star) {
            ("f", false) => Ok(GicarGenerator::F(i)),
            ("u", false) => Ok(GicarGenerator::U(i)),
            ("u", true) => Ok(GicarGenerator::UStar(i)),
            _ => Err(bad()),
        }
    }
}

/// θ(a_x a_{x+1}*): plain strings except a dotted string from lower x to upper x+1,
/// a cap at lower x+1 and a cup at upper x.
fn hop(x: usize, n: usize) -> Rp {
    let mut pairs: Vec<(usize, usize)> = (1..=n).filter(|&p| p != x && p != x + 1).map(|p| (p, p)).collect();
    pairs.push((x, x + 1));
    let base = RectDiagram::from_pairs(n, n, pairs).expect("planar");
    DecoratedDiagram::new(base, vec![x]).expect("dot on a through string").expand()
}

/// θ(a_x a_y*).
pub fn theta_pair(x: usize, y: usize, n: usize) -> Result<Rp> {
    check_mode(x, n)?;
    check_mode(y, n)?;
    Ok(if x == y {
        LinComb::basis(RectDiagram::broken_at(n, x)?)
    } else if y == x + 1 {
        hop(x, n)
    } else if x == y + 1 {
        adjoint_lin(&hop(y, n))
    } else if y > x {
        // a_x a_y* = a_x a_{x+1}* · a_{x+1} a_y* − a_{x+1} a_y* · a_x a_{x+1}*
        let near = theta_pair(x, x + 1, n)?;
        let far = theta_pair(x + 1, y, n)?;
        then_lin(&far, &near)?.sub(&then_lin(&near, &far)?)
    } else {
        adjoint_lin(&theta_pair(y, x, n)?)
    })
}

fn is_normal(ops: &[FockOp]) -> Option<usize> {
    ops.windows(2).position(|w| match (w[0], w[1]) {
        (FockOp::Annihilate(_), FockOp::Create(_)) => true,
        (FockOp::Create(i), FockOp::Create(j)) => i <= j,
        (FockOp::Annihilate(i), FockOp::Annihilate(j)) => i >= j,
        _ => false,
    })
}

/// CAR normal ordering: creations left with decreasing indices, annihilations right with increasing indices.
pub fn normal_order(m: &Monomial) -> LinComb<Monomial> {
    let mut out = LinComb::zero();
    let mut work = vec![(CycScalar::one(), m.0.clone())];
    let minus = CycScalar::from_int(-1);
    while let Some((c, ops)) = work.pop() {
        let Some(k) = is_normal(&ops) else {
            out.add_term(c, Monomial(ops));
            continue;
        };
        let mut swapped = ops.clone();
        swapped.swap(k, k + 1);
        match (ops[k], ops[k + 1]) {
            (FockOp::Annihilate(i), FockOp::Create(j)) => {
                if i == j {
                    let mut contracted = ops.clone();
                    contracted.drain(k..k + 2);
                    work.push((c.clone(), contracted));
                }
                work.push((&c * &minus, swapped));
            }
            (FockOp::Create(i), FockOp::Create(j)) | (FockOp::Annihilate(i), FockOp::Annihilate(j)) => {
                if i != j {
                    work.push((&c * &minus, swapped));
                }
            }
            _ => unreachable!("is_normal only reports violations"),
        }
    }
    out
}

fn theta_normal(m: &Monomial, n: usize, memo: &mut HashMap<Monomial, Rp>) -> Result<Rp> {
    if let Some(v) = memo.get(m) {
        return Ok(v.clone());
    }
    let k = m.creations();
    let creations: Vec<usize> = m.0[..k].iter().map(|o| o.index()).collect();
    let annihilations: Vec<usize> = m.0[k..].iter().map(|o| o.index()).collect();
    let value = match k {
        0 => LinComb::basis(RectDiagram::identity(n)),
        1 => theta_pair(creations[0], annihilations[0], n)?,
        _ => {
            // pair the s-th smallest creation with the s-th smallest annihilation
            let mut pairs = Vec::with_capacity(k);
            let mut product_ops = Vec::with_capacity(2 * k);
            for s in (0..k).rev() {
                let (x, y) = (creations[k - 1 - s], annihilations[s]);
                pairs.push((x, y));
                product_ops.push(FockOp::Create(x));
                product_ops.push(FockOp::Annihilate(y));
            }
            // pairs are listed leftmost first; the rightmost pair acts first
            let mut acc = LinComb::basis(RectDiagram::identity(n));
            for &(x, y) in pairs.iter().rev() {
                acc = then_lin(&acc, &theta_pair(x, y, n)?)?;
            }
            let expansion = normal_order(&Monomial(product_ops));
            let lead = expansion.coeff(m);
            let inv = lead.inv().map_err(|_| Error::RelationViolated(format!("{m} does not lead its pair product")))?;
            for (term, c) in expansion.iter() {
                if term != m {
                    acc.add_assign_scaled(&-c, &theta_normal(term, n, memo)?);
                }
            }
            acc.scale(&inv)
        }
    };
    memo.insert(m.clone(), value.clone());
    Ok(value)
}

/// θ of a gauge-invariant monomial.
pub fn theta_monomial(m: &Monomial, n: usize) -> Result<Rp> {
    theta(&LinComb::basis(m.clone()), n)
}

/// θ of a linear combination of gauge-invariant monomials.
pub fn theta(x: &LinComb<Monomial>, n: usize) -> Result<Rp> {
    let mut memo = HashMap::new();
    let mut out = LinComb::zero();
    for (m, c) in x.iter() {
        m.check_gauge_invariant()?;
        for op in m.ops() {
            check_mode(op.index(), n)?;
        }
        for (nm, d) in normal_order(m).iter() {
            out.add_assign_scaled(&(c * d), &theta_normal(nm, n, &mut memo)?);
        }
    }
    Ok(out)
}

pub fn theta_generator(g: GicarGenerator, n: usize) -> Result<Rp> {
    match g {
        GicarGenerator::F(i) => {
            check_mode(i, n)?;
            Ok(DecoratedDiagram::new(RectDiagram::identity(n), vec![i])?.expand())
        }
        GicarGenerator::U(i) => {
            check_mode(i + 1, n)?;
            Ok(adjoint_lin(&hop(i, n)).scale(&CycScalar::from_int(-1)))
        }
        GicarGenerator::UStar(i) => {
            check_mode(i + 1, n)?;
            Ok(hop(i, n).scale(&CycScalar::from_int(-1)))
        }
    }
}

/// An element of 𝒟_n, in the basis of cap-free fully dotted diagrams indexed by their cup sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DVector {
    pub n: usize,
    pub coeffs: LinComb<Subset>,
}

impl DVector {
    /// The basis diagram with cups at `cups` and dotted strings from the n − |cups| lower points.
    pub fn basis_diagram(n: usize, cups: &[usize]) -> DecoratedDiagram<RectDiagram> {
        let upper: Vec<usize> = (1..=n).filter(|p| !cups.contains(p)).collect();
        let pairs = upper.iter().enumerate().map(|(k, &u)| (k + 1, u)).collect();
        DecoratedDiagram::all_dotted(RectDiagram::from_pairs(upper.len(), n, pairs).expect("monotone"))
    }

    pub fn inner(&self, other: &DVector) -> CycScalar {
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
}

/// Θ_n: ξ_S ↦ the 𝒟_n basis diagram with cups at S.
pub fn big_theta(v: &FockVector) -> DVector {
    DVector { n: v.n, coeffs: v.coeffs.clone() }
}

/// Action of RP_n on 𝒟_n by stacking `c` on top and reducing with the dot relations.
pub fn d_action(c: &Rp, v: &DVector) -> Result<DVector> {
    let mut out = LinComb::zero();
    for (cups, coeff) in v.coeffs.iter() {
        let plain = DVector::basis_diagram(v.n, cups).expand();
        let composite = then_lin(&plain, c)?;
        for (d, x) in to_dotted_basis(&composite).iter() {
            if !d.base.caps().is_empty() {
                return Err(Error::InvalidDiagram(format!("{} left 𝒟_n", d.base)));
            }
            out.add_term(coeff * x, d.base.cups());
        }
    }
    Ok(DVector { n: v.n, coeffs: out })
}

/// Matrix of `c` acting on 𝒟_n in the (size, lex) ordering of cup sets.
pub fn d_matrix(c: &Rp, n: usize) -> Result<ExactMatrix> {
    let basis = fock_basis(n);
    let mut m = ExactMatrix::zeros(basis.len(), basis.len());
    for (col, s) in basis.iter().enumerate() {
        let img = d_action(c, &DVector { n, coeffs: LinComb::basis(s.clone()) })?;
        for (row, t) in basis.iter().enumerate() {
            m.set(row, col, img.coeffs.coeff(t));
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::from_dotted_basis;

    #[test]
    fn worked_example_a1_a3_star() {
        let t = theta_monomial(&"a1 a3*".parse().unwrap(), 3).unwrap();
        let a = DecoratedDiagram::all_dotted(RectDiagram::from_pairs(3, 3, vec![(1, 2), (2, 3)]).unwrap());
        let b = DecoratedDiagram::all_dotted(RectDiagram::from_pairs(3, 3, vec![(1, 3)]).unwrap());
        let expected: LinComb<_> = [(CycScalar::one(), a), (CycScalar::from_int(-1), b)].into_iter().collect();
        assert_eq!(to_dotted_basis(&t), expected);
        assert_eq!(t, from_dotted_basis(&expected));
    }

    #[test]
    fn number_operator_is_dotted_strand() {
        for i in 1..=3 {
            let via_monomial = theta(&LinComb::basis(GicarGenerator::F(i).monomial()), 3).unwrap();
            assert_eq!(via_monomial, theta_generator(GicarGenerator::F(i), 3).unwrap());
        }
    }

    #[test]
    fn hop_generators_agree_with_monomials() {
        for i in 1..3 {
            for g in [GicarGenerator::U(i), GicarGenerator::UStar(i)] {
                let via_monomial = theta(&LinComb::basis(g.monomial()), 3).unwrap();
                assert_eq!(via_monomial, theta_generator(g, 3).unwrap(), "{g}");
            }
        }
    }

    #[test]
    fn normal_ordering() {
        let m: Monomial = "a1* a1".parse().unwrap();
        let no = normal_order(&m);
        assert_eq!(no.coeff(&Monomial::identity()), CycScalar::one());
        assert_eq!(no.coeff(&"a1 a1*".parse().unwrap()), CycScalar::from_int(-1));
        assert!(normal_order(&"a2 a2".parse().unwrap()).is_zero());
    }

    #[test]
    fn gauge_check() {
        assert!(matches!(theta_monomial(&"a1".parse().unwrap(), 2), Err(Error::NotGaugeInvariant { .. })));
    }

    #[test]
    fn generator_parsing() {
        assert_eq!("u2*".parse::<GicarGenerator>().unwrap(), GicarGenerator::UStar(2));
        assert_eq!("f1".parse::<GicarGenerator>().unwrap(), GicarGenerator::F(1));
        assert!("g1".parse::<GicarGenerator>().is_err());
    }
}
