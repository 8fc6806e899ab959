//! Partners of layered threads and the Motzkin-product check.

use snow_leopard::entangle::{
    conjecture_check_upto, down_layered, partners_of_layered_odd, up_layered, LayerSpec,
};
use snow_leopard::threads::{entangled_partners, Side};
use snow_leopard::{Error, Perm};

fn main() -> Result<(), Error> {
    for spec in ["3", "2,2", "3,1,2"] {
        let spec: LayerSpec = spec.parse()?;
        let up = up_layered(&spec);
        let down = down_layered(&spec);
        let odd = partners_of_layered_odd(&spec);
        println!(
            "{spec}: {} has {} partners (product {}), {} has {}",
            up.compact(),
            odd.len(),
            spec.motzkin_product(),
            down.compact(),
            entangled_partners(&down, Side::Even)?.len()
        );
        let shown: Vec<String> = odd.iter().take(5).map(Perm::compact).collect();
        println!("  {}", shown.join(" "));
    }
    let r = conjecture_check_upto(8);
    println!(
        "{} even and {} odd threads checked, {} failures",
        r.even_checked,
        r.odd_checked,
        r.failures.len()
    );
    Ok(())
}
