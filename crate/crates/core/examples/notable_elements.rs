//! Frobenius number, genus, Apéry lists, pseudo-Frobenius numbers and the
//! Wilf check for a semigroup given on the command line.
//!
//! ```text
//! cargo run --example notable_elements -- 5 7 9
//! ```

use nsgps::NumericalSemigroup;

fn main() -> nsgps::Result<()> {
    let mut gens: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    if gens.is_empty() {
        gens = vec![5, 7, 9];
    }
    let s = NumericalSemigroup::from_generators(&gens)?;
    println!("S = {s}");
    println!(
        "multiplicity {}, embedding dimension {}",
        s.multiplicity(),
        s.embedding_dimension()
    );
    println!(
        "F = {}, C = {}, g = {}, n = {}",
        s.frobenius(),
        s.conductor(),
        s.genus(),
        s.sporadic_count()
    );
    println!("gaps {:?}", s.gaps());
    println!("small elements {:?}", s.small_elements());

    // Selmer: F = max Ap(S,n) - n and g = sum Ap(S,n) / n - (n-1)/2, for any n in S.
    let m = s.multiplicity();
    for n in [m, m + s.generators().last().unwrap()] {
        let ap = s.apery(n)?;
        println!(
            "Ap(S,{n}) = {:?}: max - n = {}, sum/n - (n-1)/2 = {}",
            ap.residues,
            ap.max() as i64 - n as i64,
            (2 * ap.sum() / n as u128 - (n as u128 - 1)) / 2
        );
    }

    println!("PF = {:?}, type {}", s.pseudo_frobenius(), s.type_());
    println!("special gaps {:?}", s.special_gaps());
    println!("Wilf C <= e n: {}", s.wilf_check());
    Ok(())
}
