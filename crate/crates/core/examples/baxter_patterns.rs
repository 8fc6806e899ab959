//! Vincular pattern checks and the complete Baxter projections.

use snow_leopard::baxter::{anti_of, compatible, is_complete_baxter, reduce};
use snow_leopard::patterns::{vincular_witness, VincularPattern};
use snow_leopard::{Error, Perm};

fn main() -> Result<(), Error> {
    let p: Perm = "4613752".parse()?;
    for pat in VincularPattern::ALL {
        match vincular_witness(&p, pat) {
            Some(w) => println!("{} contains {pat}: {w:?}", p.compact()),
            None => println!("{} avoids {pat}", p.compact()),
        }
    }

    let w: Perm = "9 8 1 2 5 4 3 6 7".parse()?;
    println!("{} is complete Baxter: {}", w.compact(), is_complete_baxter(&w));
    let (odd, even) = (reduce(&w)?, anti_of(&w)?);
    println!("reduced {}, anti-Baxter {}", odd.compact(), even.compact());
    println!("compatible: {}", compatible(&odd, &even)?);
    Ok(())
}
