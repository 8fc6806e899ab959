//! Even and odd threads, their decompositions, and entanglement.

use snow_leopard::threads::{
    eligible_connectors, entangled_partners, enumerate_threads, even_decompositions,
    leftmost_decomposition, odd_decompose, Side,
};
use snow_leopard::{Error, Perm};

fn main() -> Result<(), Error> {
    for n in -1..=6 {
        let t = enumerate_threads(n);
        println!("n = {n:>2}: {:>3} even, {:>3} odd", t.even_threads.len(), t.odd_threads.len());
    }

    let alpha: Perm = "653421".parse()?;
    println!("eligible connectors of {}: {:?}", alpha.compact(), eligible_connectors(&alpha));
    for (b1, a1) in even_decompositions(&alpha)? {
        println!("  c({}) ⊖ 1 ⊖ {}", b1.compact(), a1.compact());
    }
    let (b1, a1) = leftmost_decomposition(&alpha)?;
    println!("leftmost: ({}, {})", b1.compact(), a1.compact());

    let beta: Perm = "34512".parse()?;
    let (a2, b2) = odd_decompose(&beta)?;
    println!("{} = (1 ⊕ c({}) ⊕ 1) ⊖ {}", beta.compact(), a2.compact(), b2.compact());

    let partners: Vec<String> = entangled_partners(&alpha, Side::Even)?.iter().map(Perm::compact).collect();
    println!("odd threads entangled with {}: {}", alpha.compact(), partners.join(" "));
    Ok(())
}
