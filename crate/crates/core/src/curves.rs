//! Characteristic sequences of plane branches and of curves with one place at
//! infinity, at the level of integers: the `m`, `d`, `r` and `e` sequences,
//! δ-sequences, conductors and the duality between `Γ∞(F)` and `Γ(F∞)`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::classify::arrangement_of;
use crate::enumerate::Limits;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Place {
    /// A branch `f ∈ K[[x]][y]`: `m_1 = r_1` and `m_{k+1} = m_k + r_{k+1} - r_k e_k`.
    Local,
    /// `f ∈ K[x⁻¹][y]` with one place at infinity, described through the
    /// positive generators `r_k` of `Γ∞(F)`: `m_1 = -r_1` and
    /// `m_{k+1} = m_k - (r_{k+1} - r_k e_k)`.
    AtInfinity,
}

/// `n = r_0 = d_1`; `m_seq = (m_1..m_h)`, `d_seq = (d_1..d_{h+1})`,
/// `r_seq = (r_0..r_h)`, `e_seq = (e_1..e_h)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharSequences {
    pub n: u64,
    pub m_seq: Vec<i64>,
    pub d_seq: Vec<u64>,
    pub r_seq: Vec<u64>,
    pub e_seq: Vec<u64>,
    pub place: Place,
}

impl CharSequences {
    pub fn h(&self) -> usize {
        self.e_seq.len()
    }
}

fn to_i64(x: u64) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// `d_1 = first`, `d_{k+1} = gcd(d_k, x_k)`; every step must drop and the
/// chain must end at 1.
fn gcd_chain(first: u64, rest: impl Iterator<Item = u64>) -> Result<(Vec<u64>, Vec<u64>)> {
    let mut d = vec![first];
    let mut e = Vec::new();
    for x in rest {
        let last = *d.last().unwrap();
        let next = last.gcd(&x);
        if next == last {
            return Err(Error::DegenerateGcdChain);
        }
        e.push(last / next);
        d.push(next);
    }
    if *d.last().unwrap() != 1 {
        return Err(Error::GcdNotOne);
    }
    Ok((d, e))
}

pub fn char_from_r(r_seq: &[u64], place: Place) -> Result<CharSequences> {
    let n = *r_seq.first().ok_or(Error::EmptyInput)?;
    if r_seq.contains(&0) {
        return Err(Error::NonPositive);
    }
    let (d_seq, e_seq) = gcd_chain(n, r_seq[1..].iter().copied())?;
    let sign = match place {
        Place::Local => 1,
        Place::AtInfinity => -1,
    };
    let mut m_seq: Vec<i64> = Vec::with_capacity(e_seq.len());
    for k in 1..r_seq.len() {
        let m = if k == 1 {
            sign * to_i64(r_seq[1])?
        } else {
            let prev = to_i64(r_seq[k - 1])?
                .checked_mul(to_i64(e_seq[k - 2])?)
                .ok_or(Error::Overflow)?;
            let step = to_i64(r_seq[k])? - prev;
            let m = m_seq[k - 2] + sign * step;
            if m <= m_seq[k - 2] {
                return Err(Error::NonIncreasing);
            }
            m
        };
        m_seq.push(m);
    }
    Ok(CharSequences {
        n,
        m_seq,
        d_seq,
        r_seq: r_seq.to_vec(),
        e_seq,
        place,
    })
}

pub fn char_from_m(n: u64, m_seq: &[i64], place: Place) -> Result<CharSequences> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    if m_seq.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonIncreasing);
    }
    let (d_seq, e_seq) = gcd_chain(n, m_seq.iter().map(|m| m.unsigned_abs()))?;
    let sign: i64 = match place {
        Place::Local => 1,
        Place::AtInfinity => -1,
    };
    let mut r_seq = vec![n];
    for (k, &m) in m_seq.iter().enumerate() {
        let r = if k == 0 {
            sign * m
        } else {
            to_i64(r_seq[k])?
                .checked_mul(to_i64(e_seq[k - 1])?)
                .ok_or(Error::Overflow)?
                + sign * (m - m_seq[k - 1])
        };
        if r <= 0 {
            return Err(Error::NonPositive);
        }
        r_seq.push(r as u64);
    }
    Ok(CharSequences {
        n,
        m_seq: m_seq.to_vec(),
        d_seq,
        r_seq,
        e_seq,
        place,
    })
}

fn weighted(c: &CharSequences) -> Vec<u128> {
    (1..c.r_seq.len())
        .map(|k| c.r_seq[k] as u128 * c.d_seq[k - 1] as u128)
        .collect()
}

fn is_free_arrangement(c: &CharSequences) -> bool {
    arrangement_of(&c.r_seq).free
}

/// `r_k d_k < r_{k+1} d_{k+1}` for `k ≥ 1` and the semigroup is free for the
/// arrangement `r_seq`.
pub fn is_local_branch(c: &CharSequences) -> bool {
    weighted(c).windows(2).all(|w| w[0] < w[1]) && is_free_arrangement(c)
}

/// `r_1 < r_0`, `r_k d_k > r_{k+1} d_{k+1}` for `k ≥ 1` and free for the
/// arrangement `r_seq`.
pub fn is_delta_sequence(c: &CharSequences) -> bool {
    if c.r_seq.len() > 1 && c.r_seq[1] >= c.n {
        return false;
    }
    weighted(c).windows(2).all(|w| w[0] > w[1]) && is_free_arrangement(c)
}

/// `r_k = d_{k+1}` for every `k ≥ 1`.
pub fn is_coordinate_like(c: &CharSequences) -> bool {
    (1..c.r_seq.len()).all(|k| c.r_seq[k] == c.d_seq[k])
}

/// `r_k = 2 d_{k+1}` for every `k ≥ 1`.
pub fn is_minimal_int(c: &CharSequences) -> bool {
    (1..c.r_seq.len()).all(|k| c.r_seq[k] == 2 * c.d_seq[k])
}

pub fn semigroup_of(c: &CharSequences) -> Result<NumericalSemigroup> {
    NumericalSemigroup::from_generators(&c.r_seq)
}

/// `Σ (e_k - 1) r_k - n + 1`.
pub fn conductor_of(c: &CharSequences) -> u64 {
    let s: u64 = c
        .e_seq
        .iter()
        .zip(&c.r_seq[1..])
        .map(|(e, r)| (e - 1) * r)
        .sum();
    s + 1 - c.n
}

/// Characteristic sequences of the local branch `F∞` from the δ-sequence of
/// `F`: `r̄_k = n·n/d_k - r_k`, `m̄_k = n + m_k`, same `d` sequence.
pub fn infinity_dual(c: &CharSequences) -> Result<CharSequences> {
    if c.place != Place::AtInfinity || !is_delta_sequence(c) {
        return Err(Error::NotDeltaSequence);
    }
    let n = c.n;
    let mut r = vec![n];
    for k in 1..c.r_seq.len() {
        r.push(n * (n / c.d_seq[k - 1]) - c.r_seq[k]);
    }
    let dual = char_from_r(&r, Place::Local)?;
    let nn = to_i64(n)?;
    debug_assert_eq!(dual.d_seq, c.d_seq);
    debug_assert!(dual.m_seq.iter().zip(&c.m_seq).all(|(a, b)| *a == nn + b));
    assert_eq!(
        conductor_of(c) + conductor_of(&dual),
        (n - 1) * (n.max(2) - 2),
        "conductor duality fails for {:?}",
        c.r_seq
    );
    Ok(dual)
}

/// `r_1 ∤ r_0`. Sequences failing it collapse to coordinate-like ones and
/// come in infinite families for a fixed Frobenius number, e.g. `(2n, 2, 3)`.
pub fn is_nondegenerate(c: &CharSequences) -> bool {
    c.r_seq.len() < 2 || !c.n.is_multiple_of(c.r_seq[1])
}

/// All nondegenerate δ-sequences `(r_0, ..., r_h)` whose semigroup has
/// Frobenius number `f`, sorted lexicographically.
///
/// Dropping the last entry and dividing by `d_h = e_h` leaves a shorter
/// δ-sequence with Frobenius number `f'`, and `f = e_h f' + (e_h - 1) r_h`;
/// the search runs this backwards from the trivial sequence `(1)`.
pub fn delta_sequences_with_frobenius(f: i64) -> Result<Vec<Vec<u64>>> {
    delta_sequences_with(&Limits::default(), f)
}

pub fn delta_sequences_with(limits: &Limits, f: i64) -> Result<Vec<Vec<u64>>> {
    if f == -1 {
        return Ok(vec![vec![1]]);
    }
    if f < 1 || f % 2 == 0 {
        return Ok(Vec::new());
    }
    if f > limits.max_frobenius {
        return Err(Error::ResourceLimit(format!(
            "Frobenius number {f} exceeds the limit {}",
            limits.max_frobenius
        )));
    }
    // by_frobenius[i] holds the sequences with Frobenius number i - 1.
    let mut by_frobenius: Vec<Vec<Vec<u64>>> = vec![Vec::new(); f as usize + 2];
    by_frobenius[0].push(vec![1]);
    for target in (1..=f).step_by(2) {
        let mut found = Vec::new();
        for fp in std::iter::once(-1).chain((1..target).step_by(2)) {
            for base in &by_frobenius[(fp + 1) as usize] {
                extend_delta(base, fp, target, &mut found);
            }
        }
        found.sort();
        by_frobenius[(target + 1) as usize] = found;
    }
    Ok(std::mem::take(&mut by_frobenius[(f + 1) as usize]))
}

fn extend_delta(base: &[u64], fp: i64, target: i64, out: &mut Vec<Vec<u64>>) {
    let base_sg = NumericalSemigroup::from_generators(base).expect("δ-sequences have gcd 1");
    let last_weight = match base.len() {
        1 => None,
        len => {
            let c = char_from_r(base, Place::AtInfinity).expect("valid δ-sequence");
            Some(base[len - 1] as i64 * c.d_seq[len - 2] as i64)
        }
    };
    // From (1): f = (d - 1) r - d with r ≥ 2, so d ≤ f + 2. Otherwise d f' < f.
    let dmax = if fp == -1 {
        target + 2
    } else {
        (target - 1) / fp
    };
    for d in 2..=dmax {
        let rest = target - d * fp;
        if rest % (d - 1) != 0 {
            continue;
        }
        let r = rest / (d - 1);
        if r < 2 || r.gcd(&d) != 1 || !base_sg.contains(r) {
            continue;
        }
        let mut seq: Vec<u64> = base.iter().map(|x| x * d as u64).collect();
        seq.push(r as u64);
        let ok = match last_weight {
            None => r < d && d % r != 0,
            Some(w) => r * d < d * d * w,
        };
        if ok {
            out.push(seq);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inf(r: &[u64]) -> CharSequences {
        char_from_r(r, Place::AtInfinity).unwrap()
    }

    #[test]
    fn sequences_from_r() {
        let c = inf(&[6, 4, 9]);
        assert_eq!(c.d_seq, vec![6, 2, 1]);
        assert_eq!(c.e_seq, vec![3, 2]);
        assert_eq!(c.m_seq, vec![-4, -1]);
        let l = char_from_r(&[4, 6, 13], Place::Local).unwrap();
        assert_eq!(
            (l.d_seq, l.e_seq, l.m_seq),
            (vec![4, 2, 1], vec![2, 2], vec![6, 7])
        );
        assert_eq!(
            char_from_r(&[4, 6, 9], Place::Local),
            Err(Error::NonIncreasing)
        );
        let h1 = char_from_r(&[5, 7], Place::Local).unwrap();
        assert_eq!((h1.d_seq, h1.e_seq), (vec![5, 1], vec![5]));
        assert_eq!(
            char_from_r(&[6, 4, 9], Place::Local),
            Err(Error::NonIncreasing)
        );
        assert_eq!(char_from_r(&[4, 6], Place::Local), Err(Error::GcdNotOne));
        assert_eq!(
            char_from_r(&[4, 2, 6, 1], Place::Local),
            Err(Error::DegenerateGcdChain)
        );
        assert_eq!(char_from_r(&[], Place::Local), Err(Error::EmptyInput));
        let trivial = char_from_r(&[1], Place::Local).unwrap();
        assert_eq!((trivial.h(), conductor_of(&trivial)), (0, 0));
    }

    #[test]
    fn constructors_are_inverse() {
        for (r, place) in [
            (vec![4u64, 6, 13], Place::Local),
            (vec![6, 4, 9], Place::AtInfinity),
            (vec![10, 4, 5], Place::AtInfinity),
            (vec![8, 12, 26, 53], Place::Local),
        ] {
            let c = char_from_r(&r, place).unwrap();
            assert_eq!(char_from_m(c.n, &c.m_seq, place).unwrap(), c);
        }
        assert_eq!(
            char_from_m(4, &[6, 5], Place::Local),
            Err(Error::NonIncreasing)
        );
        assert_eq!(char_from_m(4, &[6], Place::Local), Err(Error::GcdNotOne));
    }

    #[test]
    fn classification() {
        assert!(is_delta_sequence(&inf(&[5, 4])));
        assert!(!is_delta_sequence(&inf(&[4, 5])));
        assert!(is_delta_sequence(&inf(&[6, 4, 9])));
        assert!(is_local_branch(
            &char_from_r(&[4, 6, 13], Place::Local).unwrap()
        ));
        assert!(!is_local_branch(&inf(&[6, 4, 9])));
        assert!(is_local_branch(
            &char_from_r(&[2, 3], Place::Local).unwrap()
        ));
        assert!(is_delta_sequence(&inf(&[3, 2])));
        assert!(!is_delta_sequence(&inf(&[2, 3])));
        assert!(is_coordinate_like(&inf(&[6, 3, 1])));
        assert!(is_delta_sequence(&inf(&[6, 3, 1])));
        assert!(!is_nondegenerate(&inf(&[6, 3, 1])));
        assert!(is_delta_sequence(&inf(&[6, 2, 3])) && !is_nondegenerate(&inf(&[6, 2, 3])));
        assert!(is_minimal_int(&inf(&[5, 2])));
        assert!(is_minimal_int(&inf(&[15, 10, 2])));
    }

    #[test]
    fn semigroups_and_conductors() {
        let c = inf(&[6, 4, 9]);
        assert_eq!(semigroup_of(&c).unwrap().generators(), &[4, 6, 9]);
        assert_eq!(conductor_of(&c), 12);
        assert_eq!(conductor_of(&inf(&[5, 4])), 12);
        assert_eq!(semigroup_of(&inf(&[13, 2])).unwrap().frobenius(), 11);
    }

    #[test]
    fn duality() {
        let d = infinity_dual(&inf(&[5, 4])).unwrap();
        assert_eq!(d.r_seq, vec![5, 1]);
        assert_eq!(conductor_of(&d), 0);
        let d = infinity_dual(&inf(&[6, 4, 9])).unwrap();
        assert_eq!(
            (d.r_seq.clone(), d.m_seq.clone()),
            (vec![6, 2, 9], vec![2, 5])
        );
        assert_eq!(conductor_of(&d), 8);
        assert_eq!(semigroup_of(&d).unwrap().conductor(), 8);
        assert_eq!(infinity_dual(&inf(&[4, 5])), Err(Error::NotDeltaSequence));
        let one = char_from_r(&[1], Place::AtInfinity).unwrap();
        assert_eq!(infinity_dual(&one).unwrap().r_seq, vec![1]);
    }

    #[test]
    fn delta_sequences_eleven() {
        let seqs = delta_sequences_with_frobenius(11).unwrap();
        assert_eq!(
            seqs,
            vec![
                vec![5, 4],
                vec![6, 4, 9],
                vec![7, 3],
                vec![9, 6, 4],
                vec![10, 4, 5],
                vec![13, 2]
            ]
        );
        let gens: Vec<Vec<u64>> = seqs
            .iter()
            .map(|r| semigroup_of(&inf(r)).unwrap().generators().to_vec())
            .collect();
        assert_eq!(
            gens,
            vec![
                vec![4, 5],
                vec![4, 6, 9],
                vec![3, 7],
                vec![4, 6, 9],
                vec![4, 5],
                vec![2, 13]
            ]
        );
        assert_eq!(delta_sequences_with_frobenius(1).unwrap(), vec![vec![3, 2]]);
    }

    /// Nondegenerate δ-sequences with Frobenius number `f` by a depth-first
    /// search over prefixes, using `n ≤ f + 2` and `r_k < r_0²`.
    fn brute_delta(f: i64) -> Vec<Vec<u64>> {
        use crate::classify::in_monoid;
        let mut out = Vec::new();
        // (prefix, d_k, last r_k d_k)
        let mut stack: Vec<(Vec<u64>, u64, u64)> = (1..=(f + 2).max(1) as u64)
            .map(|n| (vec![n], n, u64::MAX))
            .collect();
        while let Some((r, d, w)) = stack.pop() {
            if d == 1 {
                let c = inf(&r);
                assert!(is_delta_sequence(&c));
                if is_nondegenerate(&c) && semigroup_of(&c).unwrap().frobenius() == f {
                    out.push(r);
                }
                continue;
            }
            for x in 1..r[0] * r[0] {
                let next_d = d.gcd(&x);
                if next_d == d || x * d >= w || (r.len() == 1 && x >= r[0]) {
                    continue;
                }
                if !in_monoid(d / next_d * x, &r) {
                    continue;
                }
                let mut next = r.clone();
                next.push(x);
                stack.push((next, next_d, x * d));
            }
        }
        out.sort();
        out
    }

    #[test]
    fn delta_sequences_match_brute_force() {
        for f in [-1, 1, 3, 5, 7, 9, 11, 13, 15, 17, 19] {
            assert_eq!(
                delta_sequences_with_frobenius(f).unwrap(),
                brute_delta(f),
                "F = {f}"
            );
        }
    }

    #[test]
    fn multiples_avoid_the_previous_group() {
        for r in delta_sequences_with_frobenius(21).unwrap() {
            let c = inf(&r);
            for k in 1..=c.h() {
                for i in 1..c.e_seq[k - 1] {
                    assert_ne!((i * c.r_seq[k]) % c.d_seq[k - 1], 0);
                }
            }
        }
    }
}
