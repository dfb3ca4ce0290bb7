//! Lengths, elasticity, Delta sets, catenary degree and ω-primality.
//!
//! ```text
//! cargo run --example factorization_invariants -- 10 11 17 23
//! ```

use nsgps::invariants::{self, catenary_chain, invariant_report};
use nsgps::presentations::factorizations;
use nsgps::NumericalSemigroup;

fn main() -> nsgps::Result<()> {
    let mut gens: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    if gens.is_empty() {
        gens = vec![10, 11, 17, 23];
    }
    let s = NumericalSemigroup::from_generators(&gens)?;
    println!("S = {s}");

    let x = 6 * s.multiplicity();
    let l = invariants::lengths(&s, x)?;
    println!(
        "L({x}) = {:?}, ρ({x}) = {}, Δ({x}) = {:?}",
        l.lengths,
        invariants::elasticity_of(&s, x)?,
        l.delta()
    );
    println!(
        "c({x}) = {}, ω({x}) = {}",
        invariants::catenary_of(&s, x)?,
        invariants::omega_of(&s, x)?
    );

    // A chain between the longest and the shortest factorization.
    let z = factorizations(&s, x);
    let longest = z.iter().max_by_key(|f| f.length()).unwrap();
    let shortest = z.iter().min_by_key(|f| f.length()).unwrap();
    let chain = catenary_chain(&s, longest, shortest)?;
    let steps: Vec<String> = chain.iter().map(|f| f.to_string()).collect();
    println!("chain {}", steps.join(" -> "));

    let r = invariant_report(&s)?;
    println!(
        "ρ(S) = {}, min Δ(S) = {:?}, max Δ(S) = {:?}, c(S) = {}, ω(S) = {}",
        r.elasticity, r.delta_min, r.delta_max, r.catenary, r.omega
    );
    Ok(())
}
