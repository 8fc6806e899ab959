//! Janus threads and the bijection K onto peakless Motzkin paths.

use snow_leopard::motzkin::{enumerate_jt, janus_decompose, k_direct_raw_word, map_k, map_k_direct};
use snow_leopard::{Error, Perm};

fn main() -> Result<(), Error> {
    for g in enumerate_jt(4) {
        println!("{:<5} K = {}", g.compact(), map_k(&g)?);
    }
    let gamma: Perm = "576894312".parse()?;
    println!("{:?}", janus_decompose(&gamma)?);
    println!("raw word {}, flipped {}", k_direct_raw_word(&gamma), map_k_direct(&gamma)?);
    Ok(())
}
