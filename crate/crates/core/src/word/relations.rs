//! The defining relations of the GICAR categories as pairs of words.

use super::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: Word,
    pub rhs: Word,
}

impl Word {
    /// Largest object passed through while evaluating the word.
    pub fn max_level(&self) -> usize {
        self.generators().iter().map(|g| g.source.max(g.target())).max().unwrap_or(self.source())
    }
}

fn push(out: &mut Vec<Relation>, max: usize, name: String, source: usize, lhs: &[Letter], rhs: &[Letter]) {
    let (Ok(l), Ok(r)) = (Word::new(source, lhs), Word::new(source, rhs)) else {
        return;
    };
    if l.max_level() <= max && r.max_level() <= max {
        out.push(Relation { name, lhs: l, rhs: r });
    }
}

/// Every instance of the defining relations whose words stay on objects [0]..[max].
/// With `annular` false only the rotation-free relations (those of the rectangular category) are listed.
pub fn defining_relations(max: usize, annular: bool) -> Vec<Relation> {
    use Letter::{Annihilate as D, Create as A, Rotate as T};
    let mut out = Vec::new();
    for s in 0..=max {
        for i in 1..=s + 2 {
            for j in i + 1..=s + 2 {
                push(&mut out, max, format!("AG1 a{i} a{} = a{j} a{i} @{s}", j - 1), s, &[A(i), A(j - 1)], &[A(j), A(i)]);
                push(&mut out, max, format!("AG1 a*{i} a*{j} = a*{} a*{i} @{s}", j - 1), s, &[D(i), D(j)], &[D(j - 1), D(i)]);
            }
        }
        for i in 1..=s + 1 {
            for j in 1..=s + 1 {
                let name = format!("AG2 a*{i} a{j} @{s}");
                match i.cmp(&j) {
                    std::cmp::Ordering::Equal => push(&mut out, max, name, s, &[D(i), A(j)], &[]),
                    std::cmp::Ordering::Less => push(&mut out, max, name, s, &[D(i), A(j)], &[A(j - 1), D(i)]),
                    std::cmp::Ordering::Greater => push(&mut out, max, name, s, &[D(i), A(j)], &[A(j), D(i - 1)]),
                }
            }
        }
        if !annular {
            continue;
        }
        if s >= 1 {
            let full: Vec<Letter> = vec![T(1); s];
            push(&mut out, max, format!("AG3 t^{s} = id @{s}"), s, &full, &[]);
        }
        for i in 2..=s + 1 {
            push(&mut out, max, format!("AG4 a{i} t = t a{} @{s}", i - 1), s, &[A(i), T(1)], &[T(1), A(i - 1)]);
        }
        for i in 2..=s {
            push(&mut out, max, format!("AG4 a*{i} t = t a*{} @{s}", i - 1), s, &[D(i), T(1)], &[T(1), D(i - 1)]);
        }
        push(&mut out, max, format!("AG5 a1 = t a{} @{s}", s + 1), s, &[A(1)], &[T(1), A(s + 1)]);
        if s >= 1 {
            push(&mut out, max, format!("AG5 a*1 t = a*{s} @{s}"), s, &[D(1), T(1)], &[D(s)]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{normalize, psi};

    #[test]
    fn relations_hold_in_diagrams_and_normal_forms() {
        let rels = defining_relations(4, true);
        assert!(rels.len() > 50);
        for r in &rels {
            assert_eq!(psi(&r.lhs), psi(&r.rhs), "{}", r.name);
            assert_eq!(normalize(&r.lhs).unwrap(), normalize(&r.rhs).unwrap(), "{}", r.name);
        }
    }

    #[test]
    fn level_bound_respected() {
        for r in defining_relations(2, true) {
            assert!(r.lhs.max_level() <= 2 && r.rhs.max_level() <= 2);
        }
        assert!(defining_relations(3, false).iter().all(|r| r.lhs.is_rotation_free() && r.rhs.is_rotation_free()));
    }
}
