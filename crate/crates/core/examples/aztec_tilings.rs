//! Aztec diamond tilings, their alternating-sign matrices, and the complete
//! Baxter permutations they carry.

use snow_leopard::aztec::{assemble_complete_baxter, enumerate_tilings, verify_canary};
use snow_leopard::verify::example_tiling;
use snow_leopard::Error;

fn main() -> Result<(), Error> {
    let t = example_tiling();
    let (large, small) = t.asm_pair();
    println!("{t}\n\n{large}\n\n{small}\n");
    println!("assembled: {}", assemble_complete_baxter(&t)?.compact());

    for n in 1..=4 {
        let r = verify_canary(n)?;
        println!(
            "order {n}: {} tilings, {} permutation large matrices, {} Baxter, {} with both matrices permutations",
            r.tilings, r.permutation_lasms, r.baxter, r.both_permutation
        );
    }
    let first_non_baxter = enumerate_tilings(3)?
        .into_iter()
        .find(|t| t.asm_pair().0.is_permutation_matrix() && assemble_complete_baxter(t).is_err());
    if let Some(t) = first_non_baxter {
        let (large, small) = t.asm_pair();
        println!("\nnon-Baxter permutation {}:\n{large}\n\n{small}", large.permutation().unwrap().compact());
    }
    Ok(())
}
