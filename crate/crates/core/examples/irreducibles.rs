//! Oversemigroups, decomposition into irreducibles, MED closure and free
//! arrangements.
//!
//! ```text
//! cargo run --example irreducibles -- 7 9 11 17
//! ```

use nsgps::classify::{
    arrangement_report, decompose_into_irreducibles, decompose_minimum_cardinality, free_apery_set,
    free_arrangements, irreducibility, is_med, med_closure, oversemigroups,
};
use nsgps::NumericalSemigroup;

fn main() -> nsgps::Result<()> {
    let mut gens: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    if gens.is_empty() {
        gens = vec![7, 9, 11, 17];
    }
    let s = NumericalSemigroup::from_generators(&gens)?;
    println!("S = {s}, {:?}", irreducibility(&s));
    println!("{} oversemigroups", oversemigroups(&s).len());

    println!("decomposition into irreducibles:");
    for t in decompose_into_irreducibles(&s) {
        println!("  {t} (F = {})", t.frobenius());
    }
    let fewest = decompose_minimum_cardinality(&s)?;
    println!("a shortest one has {} components", fewest.len());

    let med = med_closure(&s, s.multiplicity())?;
    println!("MED: {}; closure {med}", is_med(&s));

    // Free for two different arrangements.
    let t = NumericalSemigroup::from_generators(&[8, 12, 10, 13])?;
    for arr in free_arrangements(&t)? {
        let report = arrangement_report(&t, &arr)?;
        let mut ap = free_apery_set(&report)?;
        ap.sort();
        println!(
            "{t} is free for {arr:?}, e = {:?}, Ap = {ap:?}",
            report.e_seq
        );
    }
    Ok(())
}
