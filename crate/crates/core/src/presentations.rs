//! Factorizations, R-classes, Betti elements and minimal presentations.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A point of ℕ^p: coefficients over the minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Factorization(pub Vec<u64>);

impl Factorization {
    pub fn zero(p: usize) -> Self {
        Factorization(vec![0; p])
    }

    pub fn unit(p: usize, i: usize) -> Self {
        let mut v = vec![0; p];
        v[i] = 1;
        Factorization(v)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    /// `|x|`, the number of atoms.
    pub fn length(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Image under the factorization homomorphism.
    pub fn evaluate(&self, gens: &[u64]) -> u64 {
        self.0.iter().zip(gens).map(|(a, g)| a * g).sum()
    }

    /// Whether the supports meet (`x · y ≠ 0`).
    pub fn shares_support(&self, other: &Factorization) -> bool {
        self.0.iter().zip(&other.0).any(|(&a, &b)| a > 0 && b > 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn is_below(&self, other: &Factorization) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn meet(&self, other: &Factorization) -> Factorization {
        Factorization(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[ ")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, " ]")
    }
}

/// One relation `(lhs, rhs)` of a presentation, both factorizations of `element`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: Factorization,
    pub rhs: Factorization,
    pub element: u64,
}

/// All factorizations of `s`, sorted lexicographically in descending order.
/// Empty exactly when `s` is not in the semigroup.
pub fn factorizations(sg: &NumericalSemigroup, s: u64) -> Vec<Factorization> {
    factorizations_over(sg.generators(), s)
}

/// Factorizations of `s` over an arbitrary list of positive generators.
pub fn factorizations_over(gens: &[u64], s: u64) -> Vec<Factorization> {
    let p = gens.len();
    let mut out = Vec::new();
    let mut cur = vec![0u64; p];
    // Largest generator first; the smallest one absorbs the remainder.
    fn descend(gens: &[u64], idx: usize, rest: u64, cur: &mut [u64], out: &mut Vec<Factorization>) {
        if idx == 0 {
            if rest.is_multiple_of(gens[0]) {
                cur[0] = rest / gens[0];
                out.push(Factorization(cur.to_vec()));
                cur[0] = 0;
            }
            return;
        }
        let g = gens[idx];
        for k in 0..=rest / g {
            cur[idx] = k;
            descend(gens, idx - 1, rest - k * g, cur, out);
        }
        cur[idx] = 0;
    }
    if p > 0 {
        descend(gens, p - 1, s, &mut cur, &mut out);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Connected components of the graph on `factors` joining factorizations with
/// common support. Each class is sorted ascending, classes by least member.
pub fn r_classes_of(factors: &[Factorization]) -> Vec<Vec<Factorization>> {
    let Some(first) = factors.first() else {
        return Vec::new();
    };
    let p = first.0.len();
    let mut uf = UnionFind::new(factors.len());
    let mut owner: Vec<Option<usize>> = vec![None; p];
    for (idx, f) in factors.iter().enumerate() {
        for (i, &a) in f.0.iter().enumerate() {
            if a > 0 {
                match owner[i] {
                    Some(o) => uf.union(o, idx),
                    None => owner[i] = Some(idx),
                }
            }
        }
    }
    let mut classes: Vec<Vec<Factorization>> = Vec::new();
    let mut root_slot: Vec<Option<usize>> = vec![None; factors.len()];
    for (idx, f) in factors.iter().enumerate() {
        let r = uf.find(idx);
        let slot = *root_slot[r].get_or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[slot].push(f.clone());
    }
    for c in &mut classes {
        c.sort();
    }
    classes.sort();
    classes
}

pub fn r_classes(sg: &NumericalSemigroup, s: u64) -> Result<Vec<Vec<Factorization>>> {
    if !sg.contains_u(s) {
        return Err(Error::NotMember(s as i64));
    }
    Ok(r_classes_of(&factorizations(sg, s)))
}

/// Candidates `n_i + w`, `i ≥ 2`, `w ∈ Ap(S, n_1)`: every Betti element is one.
pub fn betti_candidates(sg: &NumericalSemigroup) -> Vec<u64> {
    let ap = sg.apery_of_multiplicity();
    let mut c: Vec<u64> = sg.generators()[1..]
        .iter()
        .flat_map(|&g| ap.residues.iter().map(move |&w| g + w))
        .collect();
    c.sort_unstable();
    c.dedup();
    c
}

/// Elements whose factorization graph is disconnected, ascending.
pub fn betti_elements(sg: &NumericalSemigroup) -> Vec<u64> {
    betti_with_classes(sg).into_iter().map(|(b, _)| b).collect()
}

pub(crate) fn betti_with_classes(sg: &NumericalSemigroup) -> Vec<(u64, Vec<Vec<Factorization>>)> {
    use rayon::prelude::*;
    betti_candidates(sg)
        .into_par_iter()
        .filter_map(|s| {
            let classes = r_classes_of(&factorizations(sg, s));
            (classes.len() >= 2).then_some((s, classes))
        })
        .collect()
}

/// A minimal presentation: for every Betti element with R-classes
/// `R_1, ..., R_t` the relations `(min R_1, min R_k)`, `k = 2..t`.
pub fn minimal_presentation(sg: &NumericalSemigroup) -> Vec<Relation> {
    let mut rels = Vec::new();
    for (b, classes) in betti_with_classes(sg) {
        let root = classes[0][0].clone();
        for class in &classes[1..] {
            rels.push(Relation {
                lhs: root.clone(),
                rhs: class[0].clone(),
                element: b,
            });
        }
    }
    rels
}

/// Whether the congruence generated by `relations` joins every pair of
/// factorizations of `s`, i.e. `Z(s)` is one orbit under translated relation
/// moves.
pub fn kernel_reachability_check(
    sg: &NumericalSemigroup,
    relations: &[Relation],
    s: u64,
) -> Result<bool> {
    if !sg.contains_u(s) {
        return Err(Error::NotMember(s as i64));
    }
    let all = factorizations(sg, s);
    let Some(start) = all.first().cloned() else {
        return Ok(false);
    };
    let moves: Vec<(&Factorization, &Factorization)> = relations
        .iter()
        .flat_map(|r| [(&r.lhs, &r.rhs), (&r.rhs, &r.lhs)])
        .collect();
    let mut seen: HashSet<Factorization> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(z) = queue.pop_front() {
        for (from, to) in &moves {
            if from.is_below(&z) {
                let next = Factorization(
                    z.0.iter()
                        .zip(&from.0)
                        .zip(&to.0)
                        .map(|((&c, &a), &b)| c - a + b)
                        .collect(),
                );
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.len() == all.len())
}

/// Degree-reverse-lexicographic comparison of exponent vectors
/// (`x1 > x2 > ... > xp`).
fn degrevlex_greater(a: &Factorization, b: &Factorization) -> bool {
    if a.length() != b.length() {
        return a.length() > b.length();
    }
    for (x, y) in a.0.iter().zip(&b.0).rev() {
        if x != y {
            return x < y;
        }
    }
    false
}

fn monomial(f: &Factorization) -> String {
    let parts: Vec<String> =
        f.0.iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// The binomial `X^a - X^b` of a relation, leading term first in
/// degree-reverse-lexicographic order.
pub fn binomial_text(rel: &Relation) -> String {
    let (lead, tail) = if degrevlex_greater(&rel.rhs, &rel.lhs) {
        (&rel.rhs, &rel.lhs)
    } else {
        (&rel.lhs, &rel.rhs)
    };
    format!("{} - {}", monomial(lead), monomial(tail))
}

/// Binomial generators of the toric ideal, one per minimal presentation relation.
pub fn binomials_text(sg: &NumericalSemigroup) -> Vec<String> {
    minimal_presentation(sg).iter().map(binomial_text).collect()
}
