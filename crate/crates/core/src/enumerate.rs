//! Exhaustive generation of numerical semigroups: by genus through the
//! semigroup tree, by Frobenius number, and the irreducible and free ones with
//! a given Frobenius number.

use rayon::prelude::*;

use crate::classify::is_free;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Subtrees above this depth are explored in parallel.
const PARALLEL_DEPTH: u64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_genus: u64,
    pub max_frobenius: i64,
    pub max_results: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_genus: 40,
            max_frobenius: 64,
            max_results: 5_000_000,
        }
    }
}

/// Entry point for the enumerations; carries resource limits and an optional
/// dedicated thread count.
#[derive(Debug, Clone, Default)]
pub struct Enumerator {
    pub limits: Limits,
    pub threads: Option<usize>,
}

/// A node of the semigroup tree. `decs[y]` counts the decompositions
/// `y = a + b` with `a ≤ b` both in the semigroup; `y` is a member iff the
/// count is positive and a minimal generator iff it equals 1.
#[derive(Clone)]
struct Node {
    decs: Vec<u16>,
    frobenius: i64,
    genus: u64,
}

impl Node {
    fn root(size: usize) -> Node {
        Node {
            decs: (0..size).map(|y| (y / 2 + 1) as u16).collect(),
            frobenius: -1,
            genus: 0,
        }
    }

    fn multiplicity(&self) -> usize {
        (1..self.decs.len()).find(|&y| self.decs[y] > 0).unwrap()
    }

    /// Minimal generators larger than the Frobenius number; all of them are
    /// below `C + m`.
    fn child_generators(&self) -> impl Iterator<Item = usize> + '_ {
        let start = (self.frobenius + 1) as usize;
        let end = (start + self.multiplicity() + 1).min(self.decs.len());
        (start.max(1)..end).filter(move |&y| self.decs[y] == 1)
    }

    fn remove(&self, x: usize) -> Node {
        let mut decs = self.decs.clone();
        for (d, &below) in decs[x..].iter_mut().zip(&self.decs) {
            if below > 0 {
                *d -= 1;
            }
        }
        Node {
            decs,
            frobenius: x as i64,
            genus: self.genus + 1,
        }
    }

    fn semigroup(&self) -> NumericalSemigroup {
        let members: Vec<bool> = self.decs[..=(self.frobenius + 1) as usize]
            .iter()
            .map(|&d| d > 0)
            .collect();
        NumericalSemigroup::from_membership(&members).expect("tree nodes are numerical semigroups")
    }
}

fn tree_size(gmax: u64) -> usize {
    3 * gmax as usize + 3
}

fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn count_subtree(node: &Node, gmax: u64) -> Vec<u64> {
    let mut counts = vec![0u64; gmax as usize + 1];
    counts[node.genus as usize] = 1;
    if node.genus == gmax {
        return counts;
    }
    if node.genus + 1 == gmax {
        counts[gmax as usize] = node.child_generators().count() as u64;
        return counts;
    }
    let children: Vec<usize> = node.child_generators().collect();
    let sub = |x: &usize| count_subtree(&node.remove(*x), gmax);
    let below = if node.genus < PARALLEL_DEPTH {
        children
            .par_iter()
            .map(sub)
            .reduce(|| vec![0; gmax as usize + 1], add_counts)
    } else {
        children
            .iter()
            .map(sub)
            .fold(vec![0; gmax as usize + 1], add_counts)
    };
    add_counts(counts, below)
}

fn collect_genus(node: &Node, g: u64) -> Vec<Node> {
    if node.genus == g {
        return vec![node.clone()];
    }
    let children: Vec<usize> = node.child_generators().collect();
    let sub = |x: &usize| collect_genus(&node.remove(*x), g);
    if node.genus < PARALLEL_DEPTH {
        children.par_iter().flat_map(sub).collect()
    } else {
        children.iter().flat_map(sub).collect()
    }
}

/// Search state for semigroups with a prescribed Frobenius number: membership
/// of `0..=F` decided left to right.
#[derive(Clone)]
struct Partial {
    f: usize,
    member: Vec<bool>,
}

impl Partial {
    fn new(f: usize) -> Partial {
        let mut member = vec![false; f + 1];
        member[0] = true;
        Partial { f, member }
    }

    fn is_sum(&self, y: usize) -> bool {
        (1..=y / 2).any(|a| self.member[a] && self.member[y - a])
    }

    fn finish(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_membership(&self.member).expect("closed by construction")
    }
}

fn frobenius_search(p: &mut Partial, y: usize, out: &mut Vec<NumericalSemigroup>) {
    if y == p.f {
        out.push(p.finish());
        return;
    }
    let blocked = p.f - y <= y && (p.f - y == y || p.member[p.f - y]);
    let forced = p.is_sum(y);
    if forced {
        if blocked {
            return;
        }
        p.member[y] = true;
        frobenius_search(p, y + 1, out);
        p.member[y] = false;
        return;
    }
    if y < PARALLEL_DEPTH as usize && !blocked {
        let mut with = p.clone();
        with.member[y] = true;
        let (mut a, b) = rayon::join(
            || {
                let mut v = Vec::new();
                frobenius_search(&mut with, y + 1, &mut v);
                v
            },
            || {
                let mut q = p.clone();
                let mut v = Vec::new();
                frobenius_search(&mut q, y + 1, &mut v);
                v
            },
        );
        a.extend(b);
        out.extend(a);
        return;
    }
    frobenius_search(p, y + 1, out);
    if !blocked {
        p.member[y] = true;
        frobenius_search(p, y + 1, out);
        p.member[y] = false;
    }
}

/// Irreducible search: only `L = S ∩ [1, F/2)` is chosen. Closure of the
/// full semigroup amounts to `L` being closed below `F/2`, no three elements
/// of `L` summing to `F`, and for even `F` no two summing to `F/2`.
fn irreducible_search(low: &mut Vec<bool>, f: usize, y: usize, out: &mut Vec<NumericalSemigroup>) {
    let half = f.div_ceil(2);
    if y == half {
        let mut member = vec![false; f + 1];
        member[0] = true;
        for x in 1..f {
            member[x] = if x < half {
                low[x]
            } else if 2 * x == f {
                false
            } else {
                !low[f - x]
            };
        }
        out.push(NumericalSemigroup::from_membership(&member).expect("closed by construction"));
        return;
    }
    let forced = (1..=y / 2).any(|a| low[a] && low[y - a]);
    let admissible = || {
        if f.is_multiple_of(2) {
            let a = f / 2 - y;
            if a >= 1 && a <= y && (low[a] || a == y) {
                return false;
            }
        }
        // a + b + y = F with a ≤ b ≤ y.
        for b in 1..=y {
            if b > f - y || !(low[b] || b == y) {
                continue;
            }
            let a = f - y - b;
            if a >= 1 && a <= b && (low[a] || a == y) {
                return false;
            }
        }
        true
    };
    if forced {
        if admissible() {
            low[y] = true;
            irreducible_search(low, f, y + 1, out);
            low[y] = false;
        }
        return;
    }
    let can_add = admissible();
    if y < PARALLEL_DEPTH as usize {
        let mut without = low.clone();
        let mut with = low.clone();
        with[y] = true;
        let (mut a, b) = rayon::join(
            || {
                let mut v = Vec::new();
                irreducible_search(&mut without, f, y + 1, &mut v);
                v
            },
            || {
                let mut v = Vec::new();
                if can_add {
                    irreducible_search(&mut with, f, y + 1, &mut v);
                }
                v
            },
        );
        a.extend(b);
        out.extend(a);
        return;
    }
    irreducible_search(low, f, y + 1, out);
    if can_add {
        low[y] = true;
        irreducible_search(low, f, y + 1, out);
        low[y] = false;
    }
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limits(limits: Limits) -> Self {
        Enumerator {
            limits,
            threads: None,
        }
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }

    fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.threads {
            None => Ok(f()),
            Some(k) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build()
                    .map_err(|e| Error::ResourceLimit(e.to_string()))?;
                Ok(pool.install(f))
            }
        }
    }

    fn check_genus(&self, g: u64) -> Result<()> {
        if g > self.limits.max_genus {
            return Err(Error::ResourceLimit(format!(
                "genus {g} exceeds the limit {}",
                self.limits.max_genus
            )));
        }
        Ok(())
    }

    fn check_frobenius(&self, f: i64) -> Result<()> {
        if f > self.limits.max_frobenius {
            return Err(Error::ResourceLimit(format!(
                "Frobenius number {f} exceeds the limit {}",
                self.limits.max_frobenius
            )));
        }
        Ok(())
    }

    fn check_results(&self, n: usize) -> Result<()> {
        if n > self.limits.max_results {
            return Err(Error::ResourceLimit(format!(
                "{n} results exceed the limit {}",
                self.limits.max_results
            )));
        }
        Ok(())
    }

    /// `[n_0, n_1, ..., n_gmax]`, the number of semigroups of each genus.
    pub fn count_by_genus(&self, gmax: u64) -> Result<Vec<u64>> {
        self.check_genus(gmax)?;
        self.install(|| count_subtree(&Node::root(tree_size(gmax)), gmax))
    }

    /// All semigroups of genus `g`, sorted by generators.
    pub fn with_genus(&self, g: u64) -> Result<Vec<NumericalSemigroup>> {
        self.check_genus(g)?;
        let nodes = self.install(|| collect_genus(&Node::root(tree_size(g)), g))?;
        self.check_results(nodes.len())?;
        let mut out: Vec<NumericalSemigroup> =
            self.install(|| nodes.par_iter().map(Node::semigroup).collect())?;
        out.sort();
        Ok(out)
    }

    /// Number of semigroups with each Frobenius number `-1..=fmax`, taken
    /// from the tree (all of them have genus at most `fmax`).
    pub fn count_by_frobenius(&self, fmax: i64) -> Result<Vec<u64>> {
        let gmax = fmax.max(0) as u64;
        self.check_genus(gmax)?;
        fn walk(node: &Node, fmax: i64, counts: &mut [u64]) {
            if node.frobenius <= fmax {
                counts[(node.frobenius + 1) as usize] += 1;
            }
            for x in node.child_generators().collect::<Vec<_>>() {
                if (x as i64) <= fmax {
                    walk(&node.remove(x), fmax, counts);
                }
            }
        }
        let mut counts = vec![0; (fmax + 2).max(1) as usize];
        walk(&Node::root(tree_size(gmax)), fmax, &mut counts);
        Ok(counts)
    }

    /// All semigroups with Frobenius number `f`, sorted by generators.
    pub fn with_frobenius(&self, f: i64) -> Result<Vec<NumericalSemigroup>> {
        if f == -1 {
            return Ok(vec![NumericalSemigroup::naturals()]);
        }
        if f < 1 {
            return Ok(Vec::new());
        }
        self.check_frobenius(f)?;
        let mut out = self.install(|| {
            let mut v = Vec::new();
            frobenius_search(&mut Partial::new(f as usize), 1, &mut v);
            v
        })?;
        self.check_results(out.len())?;
        out.sort();
        Ok(out)
    }

    /// Symmetric (odd `f`) or pseudo-symmetric (even `f`) semigroups with
    /// Frobenius number `f`.
    pub fn irreducible_with_frobenius(&self, f: i64) -> Result<Vec<NumericalSemigroup>> {
        if f == -1 {
            return Ok(vec![NumericalSemigroup::naturals()]);
        }
        if f < 1 {
            return Ok(Vec::new());
        }
        self.check_frobenius(f)?;
        let fu = f as usize;
        let mut out = self.install(|| {
            let mut v = Vec::new();
            irreducible_search(&mut vec![false; fu.div_ceil(2) + 1], fu, 1, &mut v);
            v
        })?;
        self.check_results(out.len())?;
        out.sort();
        Ok(out)
    }

    /// Free semigroups with Frobenius number `f`. Free semigroups are
    /// symmetric, so these are filtered from the irreducible ones.
    pub fn free_with_frobenius(&self, f: i64) -> Result<Vec<NumericalSemigroup>> {
        let irreducible = self.irreducible_with_frobenius(f)?;
        let flags: Vec<Result<bool>> =
            self.install(|| irreducible.par_iter().map(is_free).collect())?;
        let mut out = Vec::new();
        for (s, free) in irreducible.into_iter().zip(flags) {
            if free? {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// First semigroup of genus at most `gmax` violating Wilf's inequality.
    pub fn wilf_counterexample(&self, gmax: u64) -> Result<Option<NumericalSemigroup>> {
        for g in 0..=gmax {
            if let Some(s) = self.with_genus(g)?.into_iter().find(|s| !s.wilf_check()) {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }
}

pub fn count_by_genus(gmax: u64) -> Result<Vec<u64>> {
    Enumerator::new().count_by_genus(gmax)
}

pub fn with_genus(g: u64) -> Result<Vec<NumericalSemigroup>> {
    Enumerator::new().with_genus(g)
}

pub fn with_frobenius(f: i64) -> Result<Vec<NumericalSemigroup>> {
    Enumerator::new().with_frobenius(f)
}

pub fn irreducible_with_frobenius(f: i64) -> Result<Vec<NumericalSemigroup>> {
    Enumerator::new().irreducible_with_frobenius(f)
}

pub fn free_with_frobenius(f: i64) -> Result<Vec<NumericalSemigroup>> {
    Enumerator::new().free_with_frobenius(f)
}
