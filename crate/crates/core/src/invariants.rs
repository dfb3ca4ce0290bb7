//! Non-unique factorization invariants: sets of lengths, elasticity, Delta
//! sets, catenary degree and ω-primality.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentations::{betti_elements, factorizations, minimal_presentation, Factorization};
use crate::semigroup::NumericalSemigroup;

/// Default cap on the number of lattice points visited by [`omega_of`].
pub const DEFAULT_OMEGA_CAP: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthSet {
    pub element: u64,
    pub lengths: Vec<u64>,
}

impl LengthSet {
    pub fn min(&self) -> u64 {
        self.lengths[0]
    }

    pub fn max(&self) -> u64 {
        *self.lengths.last().unwrap()
    }

    /// Differences of consecutive lengths.
    pub fn delta(&self) -> BTreeSet<u64> {
        self.lengths.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

fn ensure_member(sg: &NumericalSemigroup, s: u64) -> Result<()> {
    if sg.contains_u(s) {
        Ok(())
    } else {
        Err(Error::NotMember(s as i64))
    }
}

pub fn lengths(sg: &NumericalSemigroup, s: u64) -> Result<LengthSet> {
    ensure_member(sg, s)?;
    let mut l: Vec<u64> = factorizations(sg, s)
        .iter()
        .map(Factorization::length)
        .collect();
    l.sort_unstable();
    l.dedup();
    Ok(LengthSet {
        element: s,
        lengths: l,
    })
}

/// `max L(s) / min L(s)`; 1 for `s = 0`.
pub fn elasticity_of(sg: &NumericalSemigroup, s: u64) -> Result<Ratio<u64>> {
    let l = lengths(sg, s)?;
    if l.max() == 0 {
        return Ok(Ratio::from_integer(1));
    }
    Ok(Ratio::new(l.max(), l.min()))
}

/// `ρ(S) = n_p / n_1`, attained at `n_1·n_p`.
pub fn elasticity(sg: &NumericalSemigroup) -> Ratio<u64> {
    let g = sg.generators();
    Ratio::new(*g.last().unwrap(), g[0])
}

pub fn delta_of(sg: &NumericalSemigroup, s: u64) -> Result<BTreeSet<u64>> {
    Ok(lengths(sg, s)?.delta())
}

/// `min Δ(S)`: the gcd of the length differences over a minimal presentation.
pub fn delta_min(sg: &NumericalSemigroup) -> Result<u64> {
    if sg.is_naturals() {
        return Err(Error::HalfFactorial);
    }
    let d = minimal_presentation(sg)
        .iter()
        .map(|r| r.lhs.length().abs_diff(r.rhs.length()))
        .fold(0u64, |acc, x| acc.gcd(&x));
    if d == 0 {
        return Err(Error::HalfFactorial);
    }
    Ok(d)
}

/// `max Δ(S)`: attained at a Betti element.
pub fn delta_max(sg: &NumericalSemigroup) -> Result<u64> {
    if sg.is_naturals() {
        return Err(Error::HalfFactorial);
    }
    betti_elements(sg)
        .into_iter()
        .filter_map(|b| delta_of(sg, b).ok()?.last().copied())
        .max()
        .ok_or(Error::HalfFactorial)
}

/// Sets of lengths of every `s ≤ bound` by dynamic programming; entry `s` is
/// empty when `s ∉ S`.
pub fn length_sets_up_to(sg: &NumericalSemigroup, bound: u64) -> Vec<Vec<u64>> {
    let n = bound as usize + 1;
    let mut table: Vec<Vec<u64>> = vec![Vec::new(); n];
    table[0] = vec![0];
    for s in 1..n {
        let mut acc = BTreeSet::new();
        for &g in sg.generators() {
            let g = g as usize;
            if g <= s {
                acc.extend(table[s - g].iter().map(|l| l + 1));
            }
        }
        table[s] = acc.into_iter().collect();
    }
    table
}

/// `⋃ Δ(s)` for `s ≤ bound`.
pub fn delta_up_to(sg: &NumericalSemigroup, bound: u64) -> BTreeSet<u64> {
    length_sets_up_to(sg, bound)
        .iter()
        .flat_map(|l| l.windows(2).map(|w| w[1] - w[0]).collect::<Vec<_>>())
        .collect()
}

/// `d(x, y) = max(|x - x∧y|, |y - x∧y|)`.
pub fn distance(x: &Factorization, y: &Factorization) -> Result<u64> {
    if x.0.len() != y.0.len() {
        return Err(Error::DimensionMismatch(x.0.len(), y.0.len()));
    }
    let m = x.meet(y);
    Ok((x.length() - m.length()).max(y.length() - m.length()))
}

fn dist(x: &Factorization, y: &Factorization) -> u64 {
    distance(x, y).expect("same dimension")
}

/// Minimum spanning tree of the complete distance graph (Prim), as parent links.
fn spanning_tree(z: &[Factorization]) -> Vec<Option<(usize, u64)>> {
    let n = z.len();
    let mut in_tree = vec![false; n];
    let mut best: Vec<(u64, usize)> = vec![(u64::MAX, 0); n];
    let mut parent = vec![None; n];
    if n == 0 {
        return parent;
    }
    best[0] = (0, 0);
    for _ in 0..n {
        let u = (0..n)
            .filter(|&i| !in_tree[i])
            .min_by_key(|&i| best[i].0)
            .unwrap();
        in_tree[u] = true;
        if u != 0 {
            parent[u] = Some((best[u].1, best[u].0));
        }
        for v in 0..n {
            if !in_tree[v] {
                let d = dist(&z[u], &z[v]);
                if d < best[v].0 {
                    best[v] = (d, u);
                }
            }
        }
    }
    parent
}

/// Catenary degree of a set of factorizations of one element: the largest
/// edge of a minimum spanning tree of its distance graph (0 for one point).
pub fn catenary_of_set(z: &[Factorization]) -> u64 {
    spanning_tree(z)
        .iter()
        .flatten()
        .map(|&(_, d)| d)
        .max()
        .unwrap_or(0)
}

pub fn catenary_of(sg: &NumericalSemigroup, s: u64) -> Result<u64> {
    ensure_member(sg, s)?;
    Ok(catenary_of_set(&factorizations(sg, s)))
}

/// Catenary degree of `s` as the least threshold `N` such that the graph with
/// edges of distance at most `N` is connected.
pub fn catenary_by_threshold(sg: &NumericalSemigroup, s: u64) -> Result<u64> {
    ensure_member(sg, s)?;
    let z = factorizations(sg, s);
    if z.len() <= 1 {
        return Ok(0);
    }
    let mut thresholds: Vec<u64> = (0..z.len())
        .flat_map(|i| (i + 1..z.len()).map(move |j| (i, j)))
        .map(|(i, j)| dist(&z[i], &z[j]))
        .collect();
    thresholds.sort_unstable();
    thresholds.dedup();
    let connected = |t: u64| {
        let mut seen = vec![false; z.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..z.len() {
                if !seen[v] && dist(&z[u], &z[v]) <= t {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.iter().all(|&b| b)
    };
    Ok(*thresholds.iter().find(|&&t| connected(t)).unwrap())
}

/// A chain from `x` to `y` inside `Z(s)` whose consecutive distances are at
/// most `c(s)`: the path joining them in a minimum spanning tree.
pub fn catenary_chain(
    sg: &NumericalSemigroup,
    x: &Factorization,
    y: &Factorization,
) -> Result<Vec<Factorization>> {
    let s = x.evaluate(sg.generators());
    if y.evaluate(sg.generators()) != s {
        return Err(Error::NotMember(s as i64));
    }
    let z = factorizations(sg, s);
    let ix = z
        .iter()
        .position(|f| f == x)
        .ok_or(Error::NotMember(s as i64))?;
    let iy = z
        .iter()
        .position(|f| f == y)
        .ok_or(Error::NotMember(s as i64))?;
    let parent = spanning_tree(&z);
    let path_to_root = |mut i: usize| {
        let mut p = vec![i];
        while let Some((q, _)) = parent[i] {
            p.push(q);
            i = q;
        }
        p
    };
    let px = path_to_root(ix);
    let py = path_to_root(iy);
    // Drop the common tail to the root, keep the meeting node once.
    let mut common = 0;
    while common < px.len().min(py.len()) && px[px.len() - 1 - common] == py[py.len() - 1 - common]
    {
        common += 1;
    }
    let mut chain: Vec<usize> = px[..px.len() - common + 1].to_vec();
    chain.extend(py[..py.len() - common].iter().rev());
    Ok(chain.into_iter().map(|i| z[i].clone()).collect())
}

/// `c(S)`: the maximum catenary degree over the Betti elements; 0 for ℕ.
pub fn catenary(sg: &NumericalSemigroup) -> u64 {
    betti_elements(sg)
        .into_iter()
        .map(|b| catenary_of(sg, b).expect("Betti elements are members"))
        .max()
        .unwrap_or(0)
}

/// Minimal elements of `Z(s + S)` for the componentwise order.
///
/// Walks the down-closed set `{z : φ(z) ∉ s + S}` from the origin, generating
/// each vector once (nondecreasing index of the last increment); its
/// immediate successors inside `Z(s + S)` that pass the local test are the
/// minimal ones.
pub fn minimal_factorizations_of_ideal(
    sg: &NumericalSemigroup,
    s: u64,
    cap: usize,
) -> Result<Vec<Factorization>> {
    ensure_member(sg, s)?;
    let gens = sg.generators();
    let p = gens.len();
    let in_ideal = |v: u64| v >= s && sg.contains_u(v - s);
    let mut minimal = Vec::new();
    if in_ideal(0) {
        return Ok(vec![Factorization::zero(p)]);
    }
    let mut stack: Vec<(Vec<u64>, u64, usize)> = vec![(vec![0; p], 0, 0)];
    let mut visited = 0usize;
    while let Some((z, value, last)) = stack.pop() {
        visited += 1;
        if visited > cap {
            return Err(Error::DiagnosticOverflow(cap));
        }
        for i in last..p {
            let mut next = z.clone();
            next[i] += 1;
            let v = value + gens[i];
            if in_ideal(v) {
                let is_min = (0..p)
                    .filter(|&j| next[j] > 0)
                    .all(|j| !in_ideal(v - gens[j]));
                if is_min {
                    minimal.push(Factorization(next));
                }
            } else {
                stack.push((next, v, i));
            }
        }
    }
    minimal.sort();
    minimal.dedup();
    Ok(minimal)
}

/// `ω(S, s)`: the largest length of a minimal element of `Z(s + S)`.
pub fn omega_of(sg: &NumericalSemigroup, s: u64) -> Result<u64> {
    omega_of_capped(sg, s, DEFAULT_OMEGA_CAP)
}

pub fn omega_of_capped(sg: &NumericalSemigroup, s: u64, cap: usize) -> Result<u64> {
    Ok(minimal_factorizations_of_ideal(sg, s, cap)?
        .iter()
        .map(Factorization::length)
        .max()
        .unwrap_or(0))
}

/// `ω(S)`: the maximum of `ω(S, n_i)` over the minimal generators.
pub fn omega(sg: &NumericalSemigroup) -> Result<u64> {
    let mut best = 0;
    for &g in sg.generators() {
        best = best.max(omega_of(sg, g)?);
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    #[serde(with = "ratio_text")]
    pub elasticity: Ratio<u64>,
    pub delta_min: Option<u64>,
    pub delta_max: Option<u64>,
    pub catenary: u64,
    pub omega: u64,
}

mod ratio_text {
    use num_rational::Ratio;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<u64>, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Elasticity, Delta extremes, catenary degree and ω-primality, checked
/// against `max Δ(S) + 2 ≤ c(S) ≤ ω(S)`.
pub fn invariant_report(sg: &NumericalSemigroup) -> Result<InvariantReport> {
    let (delta_min, delta_max) = if sg.is_naturals() {
        (None, None)
    } else {
        (Some(delta_min(sg)?), Some(delta_max(sg)?))
    };
    let catenary = catenary(sg);
    let omega = omega(sg)?;
    if let Some(dm) = delta_max {
        assert!(dm + 2 <= catenary, "max Δ + 2 ≤ c fails for {sg}");
    }
    assert!(catenary <= omega, "c ≤ ω fails for {sg}");
    Ok(InvariantReport {
        elasticity: elasticity(sg),
        delta_min,
        delta_max,
        catenary,
        omega,
    })
}
