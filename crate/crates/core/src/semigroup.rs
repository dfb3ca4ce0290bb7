//! Canonical representation of a numerical semigroup and its notable elements.
//!
//! A [`NumericalSemigroup`] is stored by its minimal generating system together
//! with the Apéry list of its multiplicity and the membership table of its small
//! elements (everything up to the conductor). Further data such as gaps,
//! pseudo-Frobenius numbers and Apéry lists for other moduli are computed on
//! demand and cached.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Apéry list of a semigroup with respect to a nonzero element.
///
/// `residues[i]` is the least element of the semigroup congruent to `i`
/// modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyList {
    pub modulus: u64,
    pub residues: Vec<u64>,
}

impl AperyList {
    pub fn max(&self) -> u64 {
        self.residues.iter().copied().max().unwrap_or(0)
    }

    pub fn sum(&self) -> u128 {
        self.residues.iter().map(|&w| w as u128).sum()
    }

    /// The residues as an ascending list.
    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.residues.clone();
        v.sort_unstable();
        v
    }
}

/// The notable elements of a semigroup in one record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotableElements {
    pub frobenius: i64,
    pub conductor: u64,
    pub genus: u64,
    pub gaps: Vec<u64>,
    pub multiplicity: u64,
    pub embedding_dimension: usize,
    /// Number of elements smaller than the Frobenius number, `n(S)`.
    pub sporadic_count: u64,
}

#[derive(Default)]
struct Memo {
    apery: RwLock<HashMap<u64, Arc<AperyList>>>,
    gaps: OnceLock<Vec<u64>>,
    pseudo_frobenius: OnceLock<Vec<u64>>,
    special_gaps: OnceLock<Vec<u64>>,
}

/// A numerical semigroup, i.e. a cofinite submonoid of (ℕ, +).
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    conductor: u64,
    small: Vec<bool>,
    apery_multiplicity: Arc<AperyList>,
    memo: Memo,
}

/// Least elements per residue class modulo `modulus` of the monoid generated by
/// `gens`, by the round-robin relaxation along the residue cycles of each
/// generator. Unreachable classes stay at `u64::MAX`.
pub(crate) fn round_robin_apery(modulus: u64, gens: &[u64]) -> Result<Vec<u64>> {
    let n = modulus as usize;
    let mut w = vec![u64::MAX; n];
    w[0] = 0;
    for &a in gens {
        let step = (a % modulus) as usize;
        if step == 0 {
            continue;
        }
        let d = n.gcd(&step);
        let cycle_len = n / d;
        for start in 0..d {
            // Locate the cycle minimum, then one pass around the cycle suffices.
            let mut pos = start;
            let mut best = start;
            for _ in 0..cycle_len {
                if w[pos] < w[best] {
                    best = pos;
                }
                pos = (pos + step) % n;
            }
            if w[best] == u64::MAX {
                continue;
            }
            let mut cur = best;
            for _ in 0..cycle_len {
                let next = (cur + step) % n;
                if w[cur] != u64::MAX {
                    let cand = w[cur].checked_add(a).ok_or(Error::Overflow)?;
                    if cand < w[next] {
                        w[next] = cand;
                    }
                }
                cur = next;
            }
        }
    }
    Ok(w)
}

/// Largest conductor for which the membership table is materialized.
pub const MAX_CONDUCTOR: u64 = 1 << 32;

pub(crate) fn gcd_all(gens: &[u64]) -> u64 {
    gens.iter().fold(0u64, |acc, &g| acc.gcd(&g))
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`, reduced to its minimal generating system.
    ///
    /// Order and repetitions in `gens` are irrelevant. Fails with
    /// [`Error::NotNumerical`] when the generators are not coprime; see
    /// [`NumericalSemigroup::from_generators_reduced`] for the quotient.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(Error::NonPositive);
        }
        let d = gcd_all(gens);
        if d != 1 {
            return Err(Error::NotNumerical(d));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0];
        if m > usize::MAX as u64 / 2 {
            return Err(Error::Overflow);
        }
        let residues = round_robin_apery(m, &sorted[1..])?;
        let apery = AperyList {
            modulus: m,
            residues,
        };
        let max_w = apery.max();
        // conductor = F + 1 = max Ap - m + 1, or 0 for ℕ
        let conductor = if m == 1 { 0 } else { max_w - m + 1 };
        let in_s = |x: u64| x >= apery.residues[(x % m) as usize];

        let mut generators = vec![m];
        for (idx, &g) in sorted.iter().enumerate().skip(1) {
            if apery.residues[(g % m) as usize] != g {
                continue; // g - m ∈ S
            }
            let decomposable = sorted[1..idx].iter().any(|&h| g > h && in_s(g - h));
            if !decomposable {
                generators.push(g);
            }
        }

        if conductor > i64::MAX as u64 {
            return Err(Error::Overflow);
        }
        if conductor > MAX_CONDUCTOR {
            return Err(Error::ResourceLimit(format!(
                "conductor {conductor} exceeds {MAX_CONDUCTOR}"
            )));
        }
        let size = conductor as usize + 1;
        let mut small = vec![false; size];
        small[0] = true;
        for x in 1..size {
            small[x] = generators
                .iter()
                .any(|&g| (g as usize) <= x && small[x - g as usize]);
        }

        Ok(NumericalSemigroup {
            generators,
            conductor,
            small,
            apery_multiplicity: Arc::new(apery),
            memo: Memo::default(),
        })
    }

    /// Divides the generators by their gcd first and returns it with the
    /// resulting numerical semigroup, which is isomorphic to `⟨gens⟩`.
    pub fn from_generators_reduced(gens: &[u64]) -> Result<(u64, Self)> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(Error::NonPositive);
        }
        let d = gcd_all(gens);
        let reduced: Vec<u64> = gens.iter().map(|g| g / d).collect();
        Ok((d, Self::from_generators(&reduced)?))
    }

    /// The semigroup whose elements below `members.len()` are those flagged in
    /// `members` and which contains every integer `>= members.len()`.
    pub fn from_membership(members: &[bool]) -> Result<Self> {
        let len = members.len() as u64;
        if len == 0 || !members[0] {
            return Ok(Self::naturals());
        }
        let m = (1..len).find(|&x| members[x as usize]).unwrap_or(len);
        let is_member = |x: u64| x >= len || members[x as usize];
        let mut gens = Vec::new();
        for x in m..len + m {
            if is_member(x) && !gens.iter().any(|&g| x > g && is_member(x - g)) {
                gens.push(x);
            }
        }
        Self::from_generators(&gens)
    }

    /// The semigroup ℕ = ⟨1⟩.
    pub fn naturals() -> Self {
        Self::from_generators(&[1]).expect("⟨1⟩ is numerical")
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest integer not in the semigroup; `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn is_naturals(&self) -> bool {
        self.generators == [1]
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        let m = self.multiplicity();
        x >= self.apery_multiplicity.residues[(x % m) as usize]
    }

    pub(crate) fn contains_u(&self, x: u64) -> bool {
        x >= self.conductor || self.small[x as usize]
    }

    /// Membership flags of `0..=conductor`.
    pub fn small_membership(&self) -> &[bool] {
        &self.small
    }

    /// Elements of the semigroup up to the conductor (inclusive).
    pub fn small_elements(&self) -> Vec<u64> {
        (0..self.small.len() as u64)
            .filter(|&x| self.small[x as usize])
            .collect()
    }

    /// `a ≤_S b`, that is `b - a ∈ S`.
    pub fn le_s(&self, a: i64, b: i64) -> bool {
        b.checked_sub(a).is_some_and(|d| self.contains(d))
    }

    /// Apéry list with respect to a nonzero element `n` of the semigroup.
    pub fn apery(&self, n: u64) -> Result<Arc<AperyList>> {
        if n == 0 || !self.contains_u(n) {
            return Err(Error::NotMember(n as i64));
        }
        if n == self.multiplicity() {
            return Ok(Arc::clone(&self.apery_multiplicity));
        }
        if let Some(hit) = self.memo.apery.read().unwrap().get(&n) {
            return Ok(Arc::clone(hit));
        }
        let residues = round_robin_apery(n, &self.generators)?;
        let list = Arc::new(AperyList {
            modulus: n,
            residues,
        });
        self.memo
            .apery
            .write()
            .unwrap()
            .entry(n)
            .or_insert_with(|| Arc::clone(&list));
        Ok(list)
    }

    /// Apéry list with respect to the multiplicity.
    pub fn apery_of_multiplicity(&self) -> &AperyList {
        &self.apery_multiplicity
    }

    /// `{s ∈ S : s - n ∉ S}` sorted; `n` need not belong to the semigroup.
    pub fn apery_wrt_integer(&self, n: u64) -> Vec<u64> {
        let top = self.conductor + n;
        (0..top)
            .filter(|&s| self.contains_u(s) && (s < n || !self.contains_u(s - n)))
            .collect()
    }

    pub fn gaps(&self) -> &[u64] {
        self.memo.gaps.get_or_init(|| {
            (1..self.conductor)
                .filter(|&x| !self.small[x as usize])
                .collect()
        })
    }

    pub fn genus(&self) -> u64 {
        self.gaps().len() as u64
    }

    /// `n(S)`: the number of elements below the conductor.
    pub fn sporadic_count(&self) -> u64 {
        self.conductor - self.genus()
    }

    pub fn notable_elements(&self) -> NotableElements {
        NotableElements {
            frobenius: self.frobenius(),
            conductor: self.conductor,
            genus: self.genus(),
            gaps: self.gaps().to_vec(),
            multiplicity: self.multiplicity(),
            embedding_dimension: self.embedding_dimension(),
            sporadic_count: self.sporadic_count(),
        }
    }

    /// Pseudo-Frobenius numbers, from the `≤_S`-maximal elements of the Apéry
    /// list of the multiplicity.
    pub fn pseudo_frobenius(&self) -> &[u64] {
        self.memo.pseudo_frobenius.get_or_init(|| {
            if self.is_naturals() {
                return Vec::new();
            }
            let m = self.multiplicity();
            let ap = &self.apery_multiplicity.residues;
            let mut pf: Vec<u64> = ap
                .iter()
                .filter(|&&w| {
                    w != 0
                        && self.generators[1..]
                            .iter()
                            .all(|&g| self.contains_u(w + g - m))
                })
                .map(|&w| w - m)
                .collect();
            pf.sort_unstable();
            pf
        })
    }

    /// Number of pseudo-Frobenius numbers; 0 for ℕ.
    pub fn type_(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// Pseudo-Frobenius numbers `x` with `2x ∈ S`.
    pub fn special_gaps(&self) -> &[u64] {
        self.memo.special_gaps.get_or_init(|| {
            self.pseudo_frobenius()
                .iter()
                .copied()
                .filter(|&x| self.contains_u(2 * x))
                .collect()
        })
    }

    /// Checks Wilf's inequality `F(S) + 1 ≤ e(S)·n(S)`.
    ///
    /// Also asserts the proven bound `F(S) + 1 ≤ (t(S) + 1)·n(S)`.
    pub fn wilf_check(&self) -> bool {
        let c = self.conductor as u128;
        let n = self.sporadic_count() as u128;
        assert!(
            c <= (self.type_() as u128 + 1) * n,
            "type bound violated for {self}"
        );
        c <= self.embedding_dimension() as u128 * n
    }

    /// Johnson's reduction with respect to the minimal generator `pivot`.
    ///
    /// Returns `d = gcd` of the remaining generators and
    /// `T = ⟨others / d, pivot⟩`, so that `Ap(S, pivot) = d·Ap(T, pivot)`.
    pub fn johnson_reduce(&self, pivot: u64) -> Result<(u64, NumericalSemigroup)> {
        if self.embedding_dimension() < 2 {
            return Err(Error::Underdetermined);
        }
        if !self.generators.contains(&pivot) {
            return Err(Error::NotMinimalGenerator(pivot));
        }
        let others: Vec<u64> = self
            .generators
            .iter()
            .copied()
            .filter(|&g| g != pivot)
            .collect();
        let d = gcd_all(&others);
        let mut t_gens: Vec<u64> = others.iter().map(|g| g / d).collect();
        t_gens.push(pivot);
        let t = NumericalSemigroup::from_generators(&t_gens)?;
        let lhs = self.frobenius() as i128;
        let rhs = d as i128 * t.frobenius() as i128 + (d as i128 - 1) * pivot as i128;
        debug_assert_eq!(lhs, rhs, "Johnson Frobenius formula");
        debug_assert_eq!(
            2 * self.genus() as i128,
            2 * d as i128 * t.genus() as i128 + (d as i128 - 1) * (pivot as i128 - 1),
            "Johnson genus formula"
        );
        Ok((d, t))
    }

    /// Whether every element of `self` belongs to `other`.
    pub fn is_subset_of(&self, other: &NumericalSemigroup) -> bool {
        other.conductor <= self.conductor
            && self.small_elements().iter().all(|&x| other.contains_u(x))
    }
}

/// Pseudo-Frobenius numbers through the `≤_S`-maximal elements of `Ap(S, n)`
/// for an arbitrary nonzero `n ∈ S`, by pairwise comparison.
pub fn pseudo_frobenius_wrt(s: &NumericalSemigroup, n: u64) -> Result<Vec<u64>> {
    let ap = s.apery(n)?;
    let w = &ap.residues;
    let mut pf: Vec<u64> = w
        .iter()
        .filter(|&&a| w.iter().all(|&b| b <= a || !s.contains_u(b - a)))
        .filter(|&&a| a != 0 || s.is_naturals())
        .filter_map(|&a| a.checked_sub(n))
        .collect();
    if s.is_naturals() {
        pf.clear();
    }
    pf.sort_unstable();
    Ok(pf)
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        NumericalSemigroup {
            generators: self.generators.clone(),
            conductor: self.conductor,
            small: self.small.clone(),
            apery_multiplicity: Arc::clone(&self.apery_multiplicity),
            memo: Memo::default(),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.generators.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the minimal generating systems.
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.generators.cmp(&other.generators)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{:?}", self.generators)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

#[derive(Serialize, Deserialize)]
struct GeneratorList {
    generators: Vec<u64>,
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        GeneratorList {
            generators: self.generators.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let list = GeneratorList::deserialize(deserializer)?;
        NumericalSemigroup::from_generators(&list.generators).map_err(serde::de::Error::custom)
    }
}
