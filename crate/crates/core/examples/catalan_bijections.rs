//! The maps H, J from restricted Catalan paths to threads, their inverses,
//! and the NEEN occurrence formula.

use snow_leopard::paths::{count_neen_formula, enumerate_enne, enumerate_neen, map_f, map_g, map_h, map_j};
use snow_leopard::Error;

fn main() -> Result<(), Error> {
    for q in enumerate_enne(3) {
        let a = map_h(&q)?;
        println!("H({q}) = {:<4} F back: {}", a.compact(), map_f(&a)?);
    }
    for q in enumerate_neen(3) {
        let b = map_j(&q)?;
        println!("J({q}) = {:<4} G back: {}", b.compact(), map_g(&b)?);
    }
    for n in 1..=8u64 {
        let row: Vec<String> = (0..n).map(|k| count_neen_formula(n, k).to_string()).collect();
        println!("a({n}, k) = {}", row.join(" "));
    }
    Ok(())
}
