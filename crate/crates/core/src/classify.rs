//! Irreducibility: special gaps, unitary extensions, oversemigroups,
//! symmetric and pseudo-symmetric semigroups, decompositions into
//! irreducibles, maximal embedding dimension and free semigroups.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Largest embedding dimension for which [`is_free`] searches arrangements.
pub const MAX_FREE_SEARCH_GENERATORS: usize = 12;

/// Largest number of special gaps accepted by the exhaustive decomposition.
pub const MAX_EXHAUSTIVE_SPECIAL_GAPS: usize = 20;

/// Node cap for the oversemigroup search of the exhaustive decomposition.
pub const MAX_EXHAUSTIVE_NODES: usize = 200_000;

pub fn special_gaps(s: &NumericalSemigroup) -> Vec<u64> {
    s.special_gaps().to_vec()
}

/// `S ∪ {x}` for a special gap `x`.
pub fn add_special_gap(s: &NumericalSemigroup, x: u64) -> Result<NumericalSemigroup> {
    if !s.special_gaps().contains(&x) {
        return Err(Error::NotSpecialGap(x));
    }
    let mut gens = s.generators().to_vec();
    gens.push(x);
    NumericalSemigroup::from_generators(&gens)
}

/// `S \ {g}` for a minimal generator `g`.
pub fn remove_minimal_generator(s: &NumericalSemigroup, g: u64) -> Result<NumericalSemigroup> {
    if !s.generators().contains(&g) {
        return Err(Error::NotMinimalGenerator(g));
    }
    let mut gens: Vec<u64> = s.generators().iter().copied().filter(|&h| h != g).collect();
    let shifted: Vec<u64> = gens.iter().map(|&h| h + g).collect();
    gens.extend(shifted);
    gens.push(2 * g);
    gens.push(3 * g);
    NumericalSemigroup::from_generators(&gens)
}

/// Symmetric: `g(S) = (F(S) + 1) / 2`. ℕ counts as symmetric.
pub fn is_symmetric(s: &NumericalSemigroup) -> bool {
    2 * s.genus() as i64 == s.frobenius() + 1
}

/// Pseudo-symmetric: `g(S) = (F(S) + 2) / 2`.
pub fn is_pseudo_symmetric(s: &NumericalSemigroup) -> bool {
    2 * s.genus() as i64 == s.frobenius() + 2
}

pub fn is_irreducible(s: &NumericalSemigroup) -> bool {
    is_symmetric(s) || is_pseudo_symmetric(s)
}

/// Irreducibility class found by scanning the gaps: symmetric when `F - x ∈ S`
/// for every gap `x`, pseudo-symmetric when this holds for every gap but `F/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Irreducibility {
    Symmetric,
    PseudoSymmetric,
    Reducible,
}

pub fn irreducibility_by_gap_scan(s: &NumericalSemigroup) -> Irreducibility {
    let f = s.frobenius();
    let mirrored = |x: u64| s.contains(f - x as i64);
    if s.gaps().iter().all(|&x| mirrored(x)) {
        return Irreducibility::Symmetric;
    }
    if f % 2 == 0 && s.gaps().iter().all(|&x| 2 * x as i64 == f || mirrored(x)) {
        return Irreducibility::PseudoSymmetric;
    }
    Irreducibility::Reducible
}

pub fn irreducibility(s: &NumericalSemigroup) -> Irreducibility {
    if is_symmetric(s) {
        Irreducibility::Symmetric
    } else if is_pseudo_symmetric(s) {
        Irreducibility::PseudoSymmetric
    } else {
        Irreducibility::Reducible
    }
}

/// All numerical semigroups containing `s`, including `s` itself, ordered by
/// genus (ascending) and then by minimal generators.
///
/// Every proper oversemigroup is reached from `s` by adding special gaps one at
/// a time, so a breadth-first search over unitary extensions finds them all.
pub fn oversemigroups(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    seen.insert(s.gaps().to_vec());
    queue.push_back(s.clone());
    while let Some(t) = queue.pop_front() {
        for &x in t.special_gaps() {
            let u = add_special_gap(&t, x).expect("special gap");
            if seen.insert(u.gaps().to_vec()) {
                queue.push_back(u);
            }
        }
        out.push(t);
    }
    sort_by_genus(&mut out);
    out
}

fn sort_by_genus(list: &mut [NumericalSemigroup]) {
    list.sort_by(|a, b| {
        a.genus()
            .cmp(&b.genus())
            .then_with(|| a.generators().cmp(b.generators()))
    });
}

/// Largest oversemigroup of `s` not containing the special gap `h`.
///
/// Gaps are scanned downwards from `h - 1`; `x` is adjoined unless some
/// `h - kx` already lies in the current semigroup. The result has Frobenius
/// number `h` and is maximal for it, hence irreducible.
fn maximal_avoiding(s: &NumericalSemigroup, h: u64) -> NumericalSemigroup {
    let h = h as usize;
    let mut member: Vec<bool> = (0..=h).map(|x| s.contains_u(x as u64)).collect();
    member[h] = false;
    for x in (1..h).rev() {
        if member[x] {
            continue;
        }
        let blocked = (1..=h / x).any(|k| member[h - k * x]);
        if blocked {
            continue;
        }
        member[x] = true;
        for y in x..h {
            if member[y - x] {
                member[y] = true;
            }
        }
    }
    NumericalSemigroup::from_membership(&member).expect("membership table is a semigroup")
}

/// Whether `sg` (special gaps of the target) are all excluded by some component.
fn covers(components: &[&NumericalSemigroup], sg: &[u64]) -> bool {
    sg.iter()
        .all(|&h| components.iter().any(|c| !c.contains_u(h)))
}

/// Writes `s` as an irredundant intersection of irreducible numerical
/// semigroups, listed in generator order.
///
/// For every special gap `h` (ascending) the largest oversemigroup avoiding
/// `h` is an irreducible component; components that turn out to be
/// unnecessary are then dropped in order.
pub fn decompose_into_irreducibles(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    if is_irreducible(s) {
        return vec![s.clone()];
    }
    let sg = s.special_gaps().to_vec();
    let mut components: Vec<NumericalSemigroup> = Vec::new();
    for &h in &sg {
        let t = maximal_avoiding(s, h);
        if !components.contains(&t) {
            components.push(t);
        }
    }
    prune_redundant(components, &sg)
}

fn prune_redundant(mut components: Vec<NumericalSemigroup>, sg: &[u64]) -> Vec<NumericalSemigroup> {
    let mut i = 0;
    while i < components.len() {
        let rest: Vec<&NumericalSemigroup> = components
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, c)| c)
            .collect();
        if components.len() > 1 && covers(&rest, sg) {
            components.remove(i);
        } else {
            i += 1;
        }
    }
    components.sort();
    components
}

/// A decomposition into irreducibles with the fewest possible components,
/// chosen among the inclusion-minimal irreducible oversemigroups.
///
/// Exponential; refuses semigroups with more than
/// [`MAX_EXHAUSTIVE_SPECIAL_GAPS`] special gaps or whose relevant
/// oversemigroups exceed [`MAX_EXHAUSTIVE_NODES`].
pub fn decompose_minimum_cardinality(s: &NumericalSemigroup) -> Result<Vec<NumericalSemigroup>> {
    if is_irreducible(s) {
        return Ok(vec![s.clone()]);
    }
    let sg = s.special_gaps().to_vec();
    if sg.len() > MAX_EXHAUSTIVE_SPECIAL_GAPS {
        return Err(Error::ResourceLimit(format!(
            "{} special gaps, at most {MAX_EXHAUSTIVE_SPECIAL_GAPS} supported",
            sg.len()
        )));
    }
    // Oversemigroups that still miss some special gap of s.
    let mask_of = |t: &NumericalSemigroup| -> u32 {
        sg.iter()
            .enumerate()
            .filter(|&(_, &h)| !t.contains_u(h))
            .fold(0u32, |acc, (i, _)| acc | (1 << i))
    };
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut irreducibles = Vec::new();
    seen.insert(s.gaps().to_vec());
    queue.push_back(s.clone());
    while let Some(t) = queue.pop_front() {
        if seen.len() > MAX_EXHAUSTIVE_NODES {
            return Err(Error::ResourceLimit(format!(
                "more than {MAX_EXHAUSTIVE_NODES} oversemigroups"
            )));
        }
        for &x in t.special_gaps() {
            let u = add_special_gap(&t, x).expect("special gap");
            if mask_of(&u) != 0 && seen.insert(u.gaps().to_vec()) {
                queue.push_back(u);
            }
        }
        if is_irreducible(&t) {
            irreducibles.push(t);
        }
    }
    irreducibles.sort();
    let minimal: Vec<&NumericalSemigroup> = irreducibles
        .iter()
        .filter(|t| {
            !irreducibles
                .iter()
                .any(|u| u != *t && u.genus() > t.genus() && u.is_subset_of(t))
        })
        .collect();
    let masks: Vec<u32> = minimal.iter().map(|t| mask_of(t)).collect();
    let full = (1u32 << sg.len()) - 1;

    // Breadth-first over covered masks: the first time `full` is reached the
    // number of steps is minimal; parents are kept to read the choice back.
    let mut parent: Vec<Option<(u32, usize)>> = vec![None; 1 << sg.len()];
    let mut visited = vec![false; 1 << sg.len()];
    visited[0] = true;
    let mut frontier = VecDeque::from([0u32]);
    while let Some(cur) = frontier.pop_front() {
        if cur == full {
            break;
        }
        for (i, &m) in masks.iter().enumerate() {
            let next = cur | m;
            if !visited[next as usize] {
                visited[next as usize] = true;
                parent[next as usize] = Some((cur, i));
                frontier.push_back(next);
            }
        }
    }
    let mut chosen = Vec::new();
    let mut cur = full;
    while let Some((prev, i)) = parent[cur as usize] {
        chosen.push(minimal[i].clone());
        cur = prev;
    }
    chosen.sort();
    Ok(chosen)
}

/// Maximal embedding dimension: `e(S) = m(S)`.
pub fn is_med(s: &NumericalSemigroup) -> bool {
    s.embedding_dimension() as u64 == s.multiplicity()
}

/// `⟨{n} ∪ (n + Ap(S, n) \ {0})⟩`, the smallest MED semigroup of multiplicity
/// `n` containing `n + S` when `n = m(S)`.
pub fn med_closure(s: &NumericalSemigroup, n: u64) -> Result<NumericalSemigroup> {
    let ap = s.apery(n)?;
    let mut gens = vec![n];
    gens.extend(ap.residues.iter().filter(|&&w| w != 0).map(|&w| w + n));
    NumericalSemigroup::from_generators(&gens)
}

/// Gcd chain and freeness data of an arrangement `(a_0, ..., a_h)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementReport {
    pub arrangement: Vec<u64>,
    /// `d_1 ..= d_{h+1}`, with `d_1 = a_0`.
    pub d_seq: Vec<u64>,
    /// `e_1 ..= e_h`, `e_k = d_k / d_{k+1}`.
    pub e_seq: Vec<u64>,
    pub free: bool,
}

/// Whether `x` lies in the monoid generated by `gens`.
pub(crate) fn in_monoid(x: u64, gens: &[u64]) -> bool {
    if x == 0 {
        return true;
    }
    let d = gens.iter().fold(0u64, |acc, &g| acc.gcd(&g));
    if d == 0 || !x.is_multiple_of(d) {
        return false;
    }
    let target = (x / d) as usize;
    let reduced: Vec<usize> = gens.iter().map(|&g| (g / d) as usize).collect();
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for y in 1..=target {
        reach[y] = reduced.iter().any(|&g| g <= y && reach[y - g]);
    }
    reach[target]
}

/// Gcd chain of an arbitrary sequence, freeness included; no check that the
/// entries form a minimal generating system.
pub fn arrangement_of(seq: &[u64]) -> ArrangementReport {
    let mut d_seq = Vec::with_capacity(seq.len());
    let mut e_seq = Vec::with_capacity(seq.len().saturating_sub(1));
    let mut free = !seq.is_empty();
    if let Some(&a0) = seq.first() {
        d_seq.push(a0);
        for k in 1..seq.len() {
            let dk = *d_seq.last().unwrap();
            let next = dk.gcd(&seq[k]);
            d_seq.push(next);
            let e = dk / next;
            e_seq.push(e);
            if free && (e <= 1 || !in_monoid(e * seq[k], &seq[..k])) {
                free = false;
            }
        }
        if *d_seq.last().unwrap() != 1 {
            free = false;
        }
    }
    ArrangementReport {
        arrangement: seq.to_vec(),
        d_seq,
        e_seq,
        free,
    }
}

/// Arrangement report for a permutation of the minimal generators of `s`.
pub fn arrangement_report(s: &NumericalSemigroup, order: &[u64]) -> Result<ArrangementReport> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != s.generators() {
        return Err(Error::NotAPermutation);
    }
    Ok(arrangement_of(order))
}

/// Free for the increasing arrangement of the minimal generators.
pub fn is_telescopic(s: &NumericalSemigroup) -> bool {
    arrangement_of(s.generators()).free
}

/// Some arrangement of the minimal generators making `s` free, if any.
///
/// Arrangements are explored depth first in lexicographic order; a prefix is
/// abandoned as soon as its gcd stops dropping or the membership condition
/// fails.
pub fn free_arrangement(s: &NumericalSemigroup) -> Result<Option<Vec<u64>>> {
    Ok(free_arrangements_impl(s, true)?.into_iter().next())
}

/// Every arrangement of the minimal generators for which `s` is free.
pub fn free_arrangements(s: &NumericalSemigroup) -> Result<Vec<Vec<u64>>> {
    free_arrangements_impl(s, false)
}

fn free_arrangements_impl(s: &NumericalSemigroup, first_only: bool) -> Result<Vec<Vec<u64>>> {
    let p = s.embedding_dimension();
    let gens = s.generators();
    let mut out = Vec::new();
    // The gcd at least halves at each step after the first.
    let log2 = |x: u64| 63 - x.leading_zeros() as usize;
    if p - 1 > log2(*gens.last().unwrap()) {
        return Ok(out);
    }
    if p > MAX_FREE_SEARCH_GENERATORS {
        return Err(Error::TooManyGenerators(p));
    }
    for (i, &a0) in gens.iter().enumerate() {
        if p - 1 > log2(a0) {
            continue;
        }
        let mut prefix = vec![a0];
        let mut used = vec![false; p];
        used[i] = true;
        search_free(gens, &mut prefix, &mut used, a0, first_only, &mut out);
        if first_only && !out.is_empty() {
            break;
        }
    }
    Ok(out)
}

fn search_free(
    gens: &[u64],
    prefix: &mut Vec<u64>,
    used: &mut [bool],
    d: u64,
    first_only: bool,
    out: &mut Vec<Vec<u64>>,
) {
    if prefix.len() == gens.len() {
        if d == 1 {
            out.push(prefix.clone());
        }
        return;
    }
    for (i, &a) in gens.iter().enumerate() {
        if used[i] {
            continue;
        }
        let next = d.gcd(&a);
        let e = d / next;
        if e <= 1 || !in_monoid(e * a, prefix) {
            continue;
        }
        used[i] = true;
        prefix.push(a);
        search_free(gens, prefix, used, next, first_only, out);
        prefix.pop();
        used[i] = false;
        if first_only && !out.is_empty() {
            return;
        }
    }
}

pub fn is_free(s: &NumericalSemigroup) -> Result<bool> {
    Ok(free_arrangement(s)?.is_some())
}

/// Standard representation `x = Σ λ_k a_k` with `0 ≤ λ_k < e_k` for `k ≥ 1`.
///
/// `x` belongs to the semigroup exactly when `λ_0 ≥ 0`.
pub fn standard_representation(report: &ArrangementReport, x: i64) -> Result<Vec<i64>> {
    if !report.free {
        return Err(Error::NotFree);
    }
    let a = &report.arrangement;
    let h = a.len() - 1;
    let mut lambda = vec![0i64; h + 1];
    let mut rest = x as i128;
    for k in (1..=h).rev() {
        let e = report.e_seq[k - 1] as i128;
        let dk1 = report.d_seq[k] as i128;
        // rest lies in d_{k+1}ℤ; solve rest ≡ λ a_k (mod d_k)
        debug_assert_eq!(rest % dk1, 0);
        let ak = a[k] as i128 / dk1;
        let inv = ak.extended_gcd(&e).x.rem_euclid(e);
        let l = ((rest / dk1).rem_euclid(e) * inv).rem_euclid(e);
        lambda[k] = l as i64;
        rest -= l * a[k] as i128;
    }
    debug_assert_eq!(rest % a[0] as i128, 0);
    lambda[0] = (rest / a[0] as i128) as i64;
    Ok(lambda)
}

/// Apéry set of `a_0` for a free arrangement: all `Σ λ_k a_k` with
/// `0 ≤ λ_k < e_k`, sorted.
pub fn free_apery_set(report: &ArrangementReport) -> Result<Vec<u64>> {
    if !report.free {
        return Err(Error::NotFree);
    }
    let mut acc: BTreeSet<u64> = BTreeSet::from([0]);
    for (k, &e) in report.e_seq.iter().enumerate() {
        let a = report.arrangement[k + 1];
        acc = acc
            .iter()
            .flat_map(|&w| (0..e).map(move |l| w + l * a))
            .collect();
    }
    Ok(acc.into_iter().collect())
}
