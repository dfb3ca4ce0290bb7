//! Factorizations, R-classes, Betti elements and a minimal presentation with
//! its binomials.
//!
//! ```text
//! cargo run --example presentations -- 5 7 11 13
//! ```

use nsgps::presentations::{
    betti_elements, binomials_text, factorizations, kernel_reachability_check,
    minimal_presentation, r_classes,
};
use nsgps::NumericalSemigroup;

fn main() -> nsgps::Result<()> {
    let mut gens: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    if gens.is_empty() {
        gens = vec![5, 7, 11, 13];
    }
    let s = NumericalSemigroup::from_generators(&gens)?;
    println!("S = {s}");

    let betti = betti_elements(&s);
    println!("Betti elements {betti:?}");
    for &b in &betti {
        let z: Vec<String> = factorizations(&s, b)
            .iter()
            .map(|f| f.to_string())
            .collect();
        println!(
            "  Z({b}) = {{{}}}, {} R-classes",
            z.join(", "),
            r_classes(&s, b)?.len()
        );
    }

    let rel = minimal_presentation(&s);
    println!("minimal presentation, {} relations:", rel.len());
    for (r, text) in rel.iter().zip(binomials_text(&s)) {
        println!("  {} ~ {}   {text}", r.lhs, r.rhs);
    }

    // Every factorization set up to C + 2 n_p is connected by the relations.
    let bound = s.conductor() + 2 * s.generators().last().unwrap();
    let connected = (0..=bound)
        .filter(|&x| s.contains(x as i64))
        .all(|x| kernel_reachability_check(&s, &rel, x).unwrap_or(false));
    println!("relations connect every Z(s), s <= {bound}: {connected}");
    Ok(())
}
