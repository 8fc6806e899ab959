//! Snow leopard permutations: enumeration, the definitional oracle, and
//! decomposition into `(1 ⊕ c(π₁) ⊕ 1) ⊖ 1 ⊖ π₂`.

use snow_leopard::baxter::{block_decompose, enumerate_slp, is_slp_oracle, slp_decompose};
use snow_leopard::{Error, Perm};

fn main() -> Result<(), Error> {
    for len in [1, 3, 5, 7] {
        let all = enumerate_slp(len);
        let shown: Vec<String> = all.iter().take(6).map(Perm::compact).collect();
        println!("length {len}: {} permutations, {}", all.len(), shown.join(" "));
    }

    let p: Perm = "587694321".parse()?;
    println!("oracle says {} is an SLP: {}", p.compact(), is_slp_oracle(&p));
    let d = slp_decompose(&p)?;
    println!(
        "π₁ = {}, π₂ = {}, connector {:?} at position {:?}",
        d.left.compact(),
        d.right.compact(),
        d.connector_value(&p),
        d.connector_position
    );
    let blocks: Vec<String> = block_decompose(&p)?.iter().map(Perm::compact).collect();
    println!("blocks: {}", blocks.join(", "));
    Ok(())
}
