#![allow(dead_code)]

use std::collections::BTreeSet;

use nsgps::classify::{
    self, arrangement_of, decompose_into_irreducibles, free_apery_set, is_irreducible, med_closure,
    oversemigroups,
};
use nsgps::curves::{self, Place};
use nsgps::enumerate::{
    count_by_genus, free_with_frobenius, irreducible_with_frobenius, with_frobenius,
};
use nsgps::invariants::{self, minimal_factorizations_of_ideal};
use nsgps::presentations::{
    betti_elements, kernel_reachability_check, minimal_presentation, Factorization,
};
use nsgps::NumericalSemigroup;
use num_integer::Integer;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

macro_rules! ensure_eq {
    ($left:expr, $right:expr, $($what:tt)+) => {{
        let (l, r) = (&$left, &$right);
        if l != r {
            return Err(format!("{}: got {:?}, expected {:?}", format!($($what)+), l, r));
        }
    }};
}

macro_rules! ensure {
    ($cond:expr, $($what:tt)+) => {{
        if !$cond {
            return Err(format!($($what)+));
        }
    }};
}

pub fn ns(g: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(g).unwrap()
}

fn gens_of(list: &[NumericalSemigroup]) -> Vec<Vec<u64>> {
    list.iter().map(|s| s.generators().to_vec()).collect()
}

pub fn golden_sessions() -> Check {
    let s = ns(&[5, 9, 21]);
    ensure_eq!(
        s.small_elements(),
        vec![0, 5, 9, 10, 14, 15, 18, 19, 20, 21, 23],
        "small elements of <5,9,21>"
    );
    ensure_eq!(
        s.apery(5).unwrap().residues,
        vec![0, 21, 27, 18, 9],
        "Ap(<5,9,21>, 5)"
    );
    ensure_eq!(
        s.apery_wrt_integer(6),
        vec![0, 5, 9, 10, 14, 18, 19, 23, 28],
        "Apéry list of <5,9,21> w.r.t. 6"
    );

    let s = ns(&[5, 7, 9]);
    let ap = s.apery(5).unwrap();
    ensure_eq!(s.frobenius(), 13, "F(<5,7,9>)");
    ensure_eq!(s.conductor(), 14, "C(<5,7,9>)");
    ensure_eq!(ap.residues, vec![0, 16, 7, 18, 9], "Ap(<5,7,9>, 5)");
    ensure_eq!(ap.max() - 5, 13, "max Ap - 5");
    ensure_eq!(ap.sum() / 5 - 2, 8, "Sum(ap)/5 - 2");
    ensure_eq!(s.genus(), 8, "genus of <5,7,9>");
    ensure_eq!(
        s.gaps().to_vec(),
        vec![1, 2, 3, 4, 6, 8, 11, 13],
        "gaps of <5,7,9>"
    );
    ensure_eq!(s.pseudo_frobenius().to_vec(), vec![11, 13], "PF(<5,7,9>)");
    ensure_eq!(s.type_(), 2, "type of <5,7,9>");
    ensure_eq!(s.multiplicity(), 5, "multiplicity of <5,7,9>");
    ensure_eq!(
        s.small_elements().len(),
        7,
        "length of the small elements of <5,7,9>"
    );
    ensure_eq!(s.sporadic_count(), 6, "n(<5,7,9>) = C - g");
    ensure!(s.wilf_check(), "Wilf for <5,7,9>");

    let s = ns(&[20, 30, 17]);
    ensure_eq!(
        (s.frobenius(), s.genus()),
        (163, 82),
        "F and g of <20,30,17>"
    );

    let s = ns(&[7, 9, 11, 17]);
    ensure_eq!(s.genus(), 12, "genus of <7,9,11,17>");
    ensure_eq!(
        s.gaps().to_vec(),
        vec![1, 2, 3, 4, 5, 6, 8, 10, 12, 13, 15, 19],
        "gaps of <7,9,11,17>"
    );
    ensure_eq!(
        s.special_gaps().to_vec(),
        vec![13, 15, 19],
        "SG(<7,9,11,17>)"
    );
    ensure_eq!(
        oversemigroups(&s).len(),
        51,
        "oversemigroups of <7,9,11,17>"
    );
    ensure_eq!(
        gens_of(&decompose_into_irreducibles(&s)),
        vec![
            vec![7, 8, 9, 10, 11, 12],
            vec![7, 9, 10, 11, 12, 13],
            vec![7, 9, 11, 13, 15, 17]
        ],
        "decomposition of <7,9,11,17>"
    );

    ensure_eq!(
        gens_of(&oversemigroups(&ns(&[3, 5, 7]))),
        vec![vec![1], vec![2, 3], vec![3, 4, 5], vec![3, 5, 7]],
        "oversemigroups of <3,5,7>"
    );

    let s = ns(&[4, 7, 9]);
    ensure_eq!(
        s.apery_of_multiplicity().residues,
        vec![0, 9, 14, 7],
        "Ap(<4,7,9>)"
    );
    ensure_eq!(
        med_closure(&s, 4).unwrap().generators().to_vec(),
        vec![4, 11, 13, 18],
        "MED closure of <4,7,9>"
    );
    Ok(())
}

pub const GENUS_COUNTS: [u64; 20] = [
    1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693, 2857, 4806, 8045, 13467, 22464,
    37396,
];

pub const FREE_IRREDUCIBLE: [(usize, usize); 26] = [
    (1, 1),
    (1, 1),
    (2, 2),
    (3, 3),
    (2, 3),
    (4, 6),
    (5, 8),
    (3, 7),
    (7, 15),
    (8, 20),
    (5, 18),
    (11, 36),
    (11, 44),
    (9, 45),
    (14, 83),
    (17, 109),
    (12, 101),
    (18, 174),
    (24, 246),
    (16, 227),
    (27, 420),
    (31, 546),
    (21, 498),
    (35, 926),
    (38, 1182),
    (27, 1121),
];

pub fn genus_census() -> Check {
    let counts = count_by_genus(20).map_err(|e| e.to_string())?;
    ensure_eq!(
        counts[1..].to_vec(),
        GENUS_COUNTS.to_vec(),
        "n_g for g = 1..20"
    );
    Ok(())
}

pub fn frobenius_census() -> Check {
    let all = with_frobenius(16).map_err(|e| e.to_string())?;
    ensure_eq!(all.len(), 205, "semigroups with Frobenius number 16");
    let type2: Vec<&NumericalSemigroup> = all.iter().filter(|s| s.type_() == 2).collect();
    ensure_eq!(type2.len(), 14, "type 2 semigroups with F = 16");
    let pseudo = type2
        .iter()
        .filter(|s| classify::is_pseudo_symmetric(s))
        .count();
    ensure_eq!(pseudo, 7, "pseudo-symmetric semigroups with F = 16");
    let rest: Vec<Vec<u64>> = type2
        .iter()
        .filter(|s| !classify::is_pseudo_symmetric(s))
        .map(|s| s.generators().to_vec())
        .collect();
    ensure_eq!(
        rest,
        vec![
            vec![3, 14, 19],
            vec![3, 17, 19],
            vec![5, 7, 18],
            vec![5, 9, 12],
            vec![6, 7, 11],
            vec![6, 9, 11, 13],
            vec![7, 10, 11, 12, 13],
        ],
        "type 2, not pseudo-symmetric, F = 16"
    );
    let pairs: Vec<(usize, usize)> = (1..=51)
        .step_by(2)
        .map(|f| {
            (
                free_with_frobenius(f).unwrap().len(),
                irreducible_with_frobenius(f).unwrap().len(),
            )
        })
        .collect();
    ensure_eq!(
        pairs,
        FREE_IRREDUCIBLE.to_vec(),
        "(free, irreducible) counts for odd F = 1..51"
    );
    Ok(())
}

fn f(v: &[u64]) -> Factorization {
    Factorization(v.to_vec())
}

pub fn presentation_suite() -> Check {
    let s = ns(&[5, 7, 11, 13]);
    ensure_eq!(
        betti_elements(&s),
        vec![18, 20, 21, 22, 24, 26],
        "Betti(<5,7,11,13>)"
    );
    ensure_eq!(
        minimal_presentation(&s).len(),
        6,
        "presentation size of <5,7,11,13>"
    );
    ensure_eq!(
        betti_elements(&ns(&[10, 11, 17, 23])),
        vec![33, 34, 40, 69],
        "Betti(<10,11,17,23>)"
    );

    let s = ns(&[3, 5, 7]);
    let expected: BTreeSet<BTreeSet<Factorization>> = [
        [f(&[0, 2, 0]), f(&[1, 0, 1])],
        [f(&[4, 0, 0]), f(&[0, 1, 1])],
        [f(&[3, 1, 0]), f(&[0, 0, 2])],
    ]
    .into_iter()
    .map(BTreeSet::from)
    .collect();
    let got: BTreeSet<BTreeSet<Factorization>> = minimal_presentation(&s)
        .into_iter()
        .map(|r| BTreeSet::from([r.lhs, r.rhs]))
        .collect();
    ensure_eq!(got, expected, "presentation of <3,5,7> up to orientation");

    for g in [&[3u64, 5, 7][..], &[5, 7, 11, 13], &[10, 11, 17, 23]] {
        let s = ns(g);
        let rel = minimal_presentation(&s);
        let bound = s.conductor() + 2 * s.generators().last().unwrap();
        for x in (0..=bound).filter(|&x| s.contains(x as i64)) {
            ensure!(
                kernel_reachability_check(&s, &rel, x).unwrap(),
                "presentation of {s} does not connect Z({x})"
            );
        }
        for i in 0..rel.len() {
            let mut fewer = rel.clone();
            let dropped = fewer.remove(i);
            ensure!(
                !kernel_reachability_check(&s, &fewer, dropped.element).unwrap(),
                "{s}: dropping relation {i} still connects Z({})",
                dropped.element
            );
        }
    }
    Ok(())
}

pub fn invariants_suite() -> Check {
    let s = ns(&[10, 11, 17, 23]);
    ensure_eq!(
        invariants::lengths(&s, 60).unwrap().lengths,
        vec![4, 5, 6],
        "L(60)"
    );
    ensure_eq!(
        invariants::elasticity_of(&s, 60).unwrap(),
        Ratio::new(3, 2),
        "ρ(60)"
    );
    ensure_eq!(
        invariants::delta_of(&s, 60).unwrap(),
        BTreeSet::from([1]),
        "Δ(60)"
    );
    ensure_eq!(invariants::elasticity(&s), Ratio::new(23, 10), "ρ(S)");
    let dmax = invariants::delta_max(&s).unwrap();
    ensure_eq!(dmax, 3, "max Δ(S)");
    ensure_eq!(invariants::catenary_of(&s, 60).unwrap(), 4, "c(60)");
    let c = invariants::catenary(&s);
    ensure_eq!(c, 6, "c(S)");
    let w = invariants::omega(&s).unwrap();
    ensure_eq!(w, 6, "ω(S)");
    ensure!(
        dmax + 2 <= c && c <= w,
        "chain max Δ + 2 ≤ c ≤ ω fails: {dmax}, {c}, {w}"
    );
    ensure_eq!(
        invariants::catenary_of(&ns(&[10, 11, 23, 35]), 77).unwrap(),
        3,
        "c(77) in <10,11,23,35>"
    );
    Ok(())
}

pub fn curves_suite() -> Check {
    let seqs = curves::delta_sequences_with_frobenius(11).map_err(|e| e.to_string())?;
    ensure_eq!(
        seqs,
        vec![
            vec![5, 4],
            vec![6, 4, 9],
            vec![7, 3],
            vec![9, 6, 4],
            vec![10, 4, 5],
            vec![13, 2]
        ],
        "δ-sequences with Frobenius number 11"
    );
    let gens: Vec<Vec<u64>> = seqs
        .iter()
        .map(|r| {
            let c = curves::char_from_r(r, Place::AtInfinity).unwrap();
            curves::semigroup_of(&c).unwrap().generators().to_vec()
        })
        .collect();
    ensure_eq!(
        gens,
        vec![
            vec![4, 5],
            vec![4, 6, 9],
            vec![3, 7],
            vec![4, 6, 9],
            vec![4, 5],
            vec![2, 13]
        ],
        "generators of the δ-sequence semigroups"
    );
    let mut checked = 0;
    for fr in (1..=31).step_by(2) {
        for r in curves::delta_sequences_with_frobenius(fr).unwrap() {
            let c = curves::char_from_r(&r, Place::AtInfinity).unwrap();
            let s = curves::semigroup_of(&c).unwrap();
            ensure_eq!(
                curves::conductor_of(&c),
                s.conductor(),
                "conductor of {r:?}"
            );
            ensure_eq!(s.frobenius(), fr, "Frobenius number of {r:?}");
            let dual = curves::infinity_dual(&c).unwrap();
            let ds = curves::semigroup_of(&dual).unwrap();
            ensure_eq!(
                curves::conductor_of(&dual),
                ds.conductor(),
                "conductor of the dual of {r:?}"
            );
            let n = c.n;
            ensure_eq!(
                s.conductor() + ds.conductor(),
                (n - 1) * (n - 2),
                "C + C̄ for {r:?}"
            );
            checked += 1;
        }
    }
    ensure!(checked > 100, "only {checked} δ-sequences with F ≤ 31");
    Ok(())
}

/// Random generator list with `p ≤ 6`, entries at most `max`, gcd 1.
pub fn random_generators(rng: &mut ChaCha8Rng, max: u64) -> Vec<u64> {
    loop {
        let p = rng.gen_range(1..=6);
        let g: Vec<u64> = (0..p).map(|_| rng.gen_range(1..=max)).collect();
        if g.iter().fold(0u64, |a, b| a.gcd(b)) == 1 {
            return g;
        }
    }
}

/// Coin-problem table over `[0, bound]`.
pub fn dp_membership(gens: &[u64], bound: u64) -> Vec<bool> {
    let mut t = vec![false; bound as usize + 1];
    t[0] = true;
    for x in 1..=bound as usize {
        t[x] = gens.iter().any(|&g| g as usize <= x && t[x - g as usize]);
    }
    t
}

/// Random free semigroup from a random arrangement (rejection sampling).
fn random_free(rng: &mut ChaCha8Rng, max: u64) -> Option<NumericalSemigroup> {
    let h = rng.gen_range(1..=3);
    let e: Vec<u64> = (0..h).map(|_| rng.gen_range(2..=4)).collect();
    let mut d: Vec<u64> = vec![1];
    for &x in e.iter().rev() {
        d.insert(0, d[0] * x);
    }
    let mut arr = vec![d[0]];
    for k in 1..=h {
        let b = (1..200)
            .map(|_| rng.gen_range(1..=max / d[k] + 1))
            .find(|b| {
                b.gcd(&e[k - 1]) == 1 && {
                    let mut t = arr.clone();
                    t.push(b * d[k]);
                    arrangement_of(&t).free
                }
            })?;
        arr.push(b * d[k]);
    }
    let s = NumericalSemigroup::from_generators(&arr).ok()?;
    (s.generators().len() == arr.len()).then_some(s)
}

/// Number of `z ∈ ℕ^p` with `φ(z) ≤ bound`.
fn lattice_points(gens: &[u64], bound: u64) -> u64 {
    let mut ways = vec![0u64; bound as usize + 1];
    ways[0] = 1;
    for &g in gens {
        for x in g as usize..=bound as usize {
            ways[x] = ways[x].saturating_add(ways[x - g as usize]);
        }
    }
    ways.iter().fold(0u64, |a, &b| a.saturating_add(b))
}

/// Minimal elements of `Z(s + S)` by listing every `z` with
/// `φ(z) ≤ s + F + n_p` and discarding the dominated ones.
fn minimal_by_scan(s: &NumericalSemigroup, x: u64) -> Vec<Factorization> {
    let gens = s.generators();
    let bound = (x as i64 + s.frobenius() + *gens.last().unwrap() as i64).max(0) as u64;
    let mut all: Vec<Vec<u64>> = vec![vec![]];
    for &g in gens {
        let mut next = Vec::new();
        for z in &all {
            let used: u64 = z.iter().zip(gens).map(|(a, b)| a * b).sum();
            let mut k = 0;
            while used + k * g <= bound {
                let mut w = z.clone();
                w.push(k);
                next.push(w);
                k += 1;
            }
        }
        all = next;
    }
    let members: Vec<Vec<u64>> = all
        .into_iter()
        .filter(|z| {
            let v: u64 = z.iter().zip(gens).map(|(a, b)| a * b).sum();
            v >= x && s.contains((v - x) as i64)
        })
        .collect();
    let mut minimal: Vec<Factorization> = members
        .iter()
        .filter(|z| {
            !members
                .iter()
                .any(|w| w != *z && w.iter().zip(z.iter()).all(|(a, b)| a <= b))
        })
        .map(|z| Factorization(z.clone()))
        .collect();
    minimal.sort();
    minimal
}

pub struct OracleStats {
    pub semigroups: usize,
    pub free: usize,
    pub omega_instances: usize,
}

pub fn oracle_suite(samples: usize, seed: u64) -> Result<OracleStats, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stats = OracleStats {
        semigroups: 0,
        free: 0,
        omega_instances: 0,
    };
    for _ in 0..samples {
        let raw = random_generators(&mut rng, 150);
        let s = NumericalSemigroup::from_generators(&raw).map_err(|e| format!("{raw:?}: {e}"))?;
        let gens = s.generators();
        let max = *gens.last().unwrap();
        stats.semigroups += 1;

        let bound = 3 * max * max;
        let table = dp_membership(gens, bound);
        for (x, &inside) in table.iter().enumerate() {
            ensure_eq!(s.contains(x as i64), inside, "membership of {x} in {s}");
        }

        for _ in 0..3 {
            let n = loop {
                let n = rng.gen_range(1..=s.conductor() + s.multiplicity());
                if s.contains(n as i64) {
                    break n;
                }
            };
            let ap = s.apery(n).unwrap();
            ensure_eq!(
                ap.max() as i64 - n as i64,
                s.frobenius(),
                "Selmer F for {s}, n = {n}"
            );
            ensure_eq!(
                ap.sum() as i128 * 2 - (n as i128) * (n as i128 - 1),
                2 * n as i128 * s.genus() as i128,
                "Selmer genus for {s}, n = {n}"
            );
            for x in (0..=2 * s.conductor()).filter(|&x| s.contains(x as i64)) {
                let reps = (0..=x / n)
                    .filter(|k| ap.residues[((x - k * n) % n) as usize] == x - k * n)
                    .count();
                ensure_eq!(reps, 1, "Apéry decomposition of {x} in {s} w.r.t. {n}");
            }
        }

        let gaps = s.gaps();
        let maximal: Vec<u64> = gaps
            .iter()
            .copied()
            .filter(|&x| gaps.iter().all(|&y| y <= x || !s.contains((y - x) as i64)))
            .collect();
        ensure_eq!(
            maximal,
            s.pseudo_frobenius().to_vec(),
            "PF of {s} by gap maximality"
        );

        let parts = decompose_into_irreducibles(&s);
        for x in 0..=s.conductor() {
            let all = parts.iter().all(|t| t.contains(x as i64));
            ensure_eq!(
                all,
                s.contains(x as i64),
                "{x} in the intersection of the decomposition of {s}"
            );
        }
        ensure!(
            parts.iter().all(is_irreducible),
            "reducible component in decomposition of {s}"
        );

        for &g in gens.iter().take(2) {
            let points = lattice_points(gens, g + (s.frobenius().max(0) as u64) + max);
            if points > 5000 {
                continue;
            }
            let local = minimal_factorizations_of_ideal(&s, g, usize::MAX).unwrap();
            ensure_eq!(local, minimal_by_scan(&s, g), "Minimals Z({g} + S) in {s}");
            stats.omega_instances += 1;
        }

        if let Some(t) = random_free(&mut rng, 150) {
            stats.free += 1;
            let arr = classify::free_arrangement(&t)
                .unwrap()
                .ok_or(format!("{t} should be free"))?;
            let report = classify::arrangement_report(&t, &arr).unwrap();
            let mut expected = t.apery(arr[0]).unwrap().sorted();
            expected.sort();
            let mut product = free_apery_set(&report).unwrap();
            product.sort();
            ensure_eq!(product, expected, "free Apéry set of {t} for {arr:?}");
        }
    }
    ensure!(
        stats.omega_instances >= 50,
        "only {} ω instances checked",
        stats.omega_instances
    );
    ensure!(
        stats.free >= 50,
        "only {} free semigroups generated",
        stats.free
    );
    Ok(stats)
}
