//! Counts of numerical semigroups by genus and by Frobenius number.
//!
//! ```text
//! cargo run --release --example genus_census -- 20
//! ```

use std::time::Instant;

use nsgps::enumerate::Enumerator;

fn main() -> nsgps::Result<()> {
    let gmax: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(20);
    let e = Enumerator::new();

    let t = Instant::now();
    let counts = e.count_by_genus(gmax)?;
    println!("n_g for g = 1..{gmax}: {:?}", &counts[1..]);
    let monotone = counts.windows(2).all(|w| w[0] <= w[1]);
    println!(
        "n_g <= n_(g+1) throughout: {monotone} ({:.2?})",
        t.elapsed()
    );

    let t = Instant::now();
    let pairs: Vec<[usize; 2]> = (1..=51)
        .step_by(2)
        .map(|f| {
            Ok([
                e.free_with_frobenius(f)?.len(),
                e.irreducible_with_frobenius(f)?.len(),
            ])
        })
        .collect::<nsgps::Result<_>>()?;
    println!(
        "(free, irreducible) for odd F = 1..51: {pairs:?} ({:.2?})",
        t.elapsed()
    );
    Ok(())
}
