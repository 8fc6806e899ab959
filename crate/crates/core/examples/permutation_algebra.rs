//! Direct and skew sums, complements, and how the antipermutation `@` is
//! absorbed next to a singleton.

use snow_leopard::{Error, Perm};

fn main() -> Result<(), Error> {
    let a: Perm = "231".parse()?;
    let b: Perm = "21".parse()?;
    println!("{} ⊕ {} = {}", a.compact(), b.compact(), a.direct_sum(&b)?.compact());
    println!("{} ⊖ {} = {}", a.compact(), b.compact(), a.skew_sum(&b)?.compact());
    println!("c({}) = {}, inverse = {}", a.compact(), a.complement().compact(), a.inverse().compact());

    let anti = Perm::anti();
    let up: Perm = "123".parse()?;
    println!("123 ⊕ @ = {}", up.direct_sum(&anti)?.compact());
    println!("@ ⊕ 123 = {}", anti.direct_sum(&up)?.compact());
    match a.direct_sum(&anti) {
        Ok(p) => println!("231 ⊕ @ = {p}"),
        Err(e) => println!("231 ⊕ @: {e}"),
    }

    let w: Perm = "9 8 1 2 5 4 3 6 7".parse()?;
    println!(
        "{} preserves parity: {}, odd part {}, even part {}",
        w.compact(),
        w.preserves_parity(),
        w.induced_odd()?.compact(),
        w.induced_even()?.compact()
    );
    Ok(())
}
