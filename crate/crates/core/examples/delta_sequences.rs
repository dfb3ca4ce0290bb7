//! δ-sequences with a given Frobenius number, their semigroups, and the
//! duality between the semigroup at infinity and the local one.
//!
//! ```text
//! cargo run --example delta_sequences -- 11
//! ```

use nsgps::curves::{self, Place};

fn main() -> nsgps::Result<()> {
    let f: i64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(11);
    let seqs = curves::delta_sequences_with_frobenius(f)?;
    println!("{} δ-sequences with F = {f}", seqs.len());
    for r in seqs {
        let c = curves::char_from_r(&r, Place::AtInfinity)?;
        let s = curves::semigroup_of(&c)?;
        let dual = curves::infinity_dual(&c)?;
        let ds = curves::semigroup_of(&dual)?;
        println!(
            "  r = {r:?}: e = {:?}, semigroup {s}, conductor {}; dual {:?} with {ds}, C + C' = {} = (n-1)(n-2)",
            c.e_seq,
            curves::conductor_of(&c),
            dual.r_seq,
            s.conductor() + ds.conductor()
        );
    }
    Ok(())
}
