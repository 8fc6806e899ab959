//! Self-checks behind `slp verify`: each suite re-derives a family of
//! published values or structural facts and reports one line per check.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::aztec::{self, assemble_complete_baxter, verify_canary, DominoTiling, MAX_ORDER};
use crate::baxter::{anti_of, compatible, doubly_alternating_baxter, enumerate_slp, is_slp, reduce};
use crate::entangle::{
    conjecture_check_upto, down_layered, enumerate_3412_involutions, partners_of_layered_even,
    partners_of_layered_odd, up_layered, LayerSpec,
};
use crate::error::Error;
use crate::motzkin::{enumerate_jt, enumerate_ud, map_k, map_k_direct, motzkin_number};
use crate::paths::{
    catalan_number, enumerate_enne, enumerate_neen, map_f, map_g, map_h, map_j, CatalanPath,
};
use crate::perm::Perm;
use crate::threads::{enumerate_threads, entangled_partners, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Tables,
    Bijections,
    Conjecture,
    Canary,
    Closure,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["tables", "bijections", "conjecture", "canary", "closure", "all"];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite, Error> {
        Ok(match s {
            "tables" => Suite::Tables,
            "bijections" => Suite::Bijections,
            "conjecture" => Suite::Conjecture,
            "canary" => Suite::Canary,
            "closure" => Suite::Closure,
            "all" => Suite::All,
            _ => return Err(Error::UnknownKind(s.to_string())),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Summary on success, first counterexample on failure.
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} ({:.2?}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.elapsed,
            self.detail
        )
    }
}

type Outcome = Result<String, String>;

fn run(name: impl Into<String>, f: impl FnOnce() -> Outcome) -> Check {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check { name: name.into(), passed, detail, elapsed }
}

fn expect_eq<T: PartialEq + fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn perms(words: &[&str]) -> Vec<Perm> {
    let mut v: Vec<Perm> = words.iter().map(|w| w.parse().expect("literal")).collect();
    v.sort();
    v
}

fn path(s: &str) -> CatalanPath {
    s.parse().expect("literal")
}

pub const SLP_SMALL: [(isize, &[&str]); 3] = [
    (1, &["1"]),
    (3, &["123", "321"]),
    (5, &["12345", "14325", "34521", "54123", "54321"]),
];

/// `|ET_n|` and `|OT_n|` for `n = −1..6`.
pub const THREAD_COUNTS: [(usize, usize); 8] =
    [(1, 0), (1, 1), (1, 1), (2, 2), (6, 4), (17, 9), (46, 23), (128, 63)];

pub const H_VALUES: [(&str, &str); 11] = [
    ("", "@"),
    ("NE", "e"),
    ("NENE", "1"),
    ("NENENE", "21"),
    ("NNNEEE", "12"),
    ("NNNNEEEE", "123"),
    ("NNNENEEE", "132"),
    ("NNNEENEE", "213"),
    ("NNNEEENE", "312"),
    ("NENNNEEE", "231"),
    ("NENENENE", "321"),
];

pub const J_VALUES: [(&str, &str); 8] = [
    ("", "e"),
    ("NE", "1"),
    ("NENE", "12"),
    ("NNEE", "21"),
    ("NNNEEE", "321"),
    ("NNENEE", "312"),
    ("NENNEE", "231"),
    ("NENENE", "123"),
];

/// `|JT_n| = |UD_{n+1}|` for `n = −1..9`.
pub const JANUS_COUNTS: [usize; 11] = [1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423];

pub fn tables(nmax: usize) -> Vec<Check> {
    let mut out = Vec::new();
    out.push(run("snow leopard permutations of length 1, 3, 5", || {
        for (len, want) in SLP_SMALL {
            expect_eq(&format!("length {len}"), enumerate_slp(len), perms(want))?;
        }
        Ok("3 sets match".into())
    }));
    out.push(run(format!("snow leopard counts are Catalan, n <= {}", nmax.max(1)), || {
        for n in 1..=nmax.max(1) {
            let got = enumerate_slp(2 * n as isize - 1).len() as u128;
            expect_eq(&format!("length {}", 2 * n - 1), got, catalan_number(n))?;
        }
        Ok(format!("C_1..C_{}", nmax.max(1)))
    }));
    let top = nmax.min(6);
    out.push(run(format!("even/odd thread counts, n = -1..{top}"), || {
        for (i, &(et, ot)) in THREAD_COUNTS.iter().enumerate().take(top + 2) {
            let t = enumerate_threads(i as isize - 1);
            expect_eq(
                &format!("n = {}", i as isize - 1),
                (t.even_threads.len(), t.odd_threads.len()),
                (et, ot),
            )?;
        }
        Ok(format!("{} levels", top + 2))
    }));
    out.push(run("H and J on small paths", || {
        for (a, v) in H_VALUES {
            let got = map_h(&path(a)).map_err(|e| e.to_string())?;
            expect_eq(&format!("H({a})"), got.to_string(), v.parse::<Perm>().unwrap().to_string())?;
        }
        for (a, v) in J_VALUES {
            let got = map_j(&path(a)).map_err(|e| e.to_string())?;
            expect_eq(&format!("J({a})"), got.to_string(), v.parse::<Perm>().unwrap().to_string())?;
        }
        Ok("11 H-values, 8 J-values".into())
    }));
    let top = nmax.min(9);
    out.push(run(format!("Janus thread and peakless Motzkin counts, n = -1..{top}"), || {
        for (i, &want) in JANUS_COUNTS.iter().enumerate().take(top + 2) {
            let n = i as isize - 1;
            expect_eq(&format!("|JT_{n}|"), enumerate_jt(n).len(), want)?;
            expect_eq(&format!("|UD_{i}|"), enumerate_ud(i).len(), want)?;
        }
        Ok(format!("{} levels", top + 2))
    }));
    out
}

pub fn bijections(nmax: usize) -> Vec<Check> {
    let mut out = Vec::new();
    out.push(run(format!("H and F are inverse, n <= {nmax}"), || {
        for n in 0..=nmax {
            let ets = &enumerate_threads(n as isize).even_threads;
            let mut image = BTreeSet::new();
            for q in enumerate_enne(n + 1) {
                let a = map_h(&q).map_err(|e| e.to_string())?;
                expect_eq(&format!("F(H({q}))"), map_f(&a).map_err(|e| e.to_string())?, q)?;
                image.insert(a);
            }
            expect_eq(&format!("H(ENNE_{})", n + 1), &image, ets)?;
        }
        Ok("round trips and images agree".into())
    }));
    out.push(run(format!("J and G are inverse, n <= {nmax}"), || {
        for n in 0..=nmax {
            let ots = &enumerate_threads(n as isize).odd_threads;
            let mut image = BTreeSet::new();
            for q in enumerate_neen(n) {
                let b = map_j(&q).map_err(|e| e.to_string())?;
                expect_eq(&format!("G(J({q}))"), map_g(&b).map_err(|e| e.to_string())?, q)?;
                image.insert(b);
            }
            expect_eq(&format!("J(NEEN_{n})"), &image, ots)?;
        }
        Ok("round trips and images agree".into())
    }));
    out.push(run(format!("K is a bijection onto peakless paths and matches the direct form, n <= {nmax}"), || {
        for n in -1..=nmax as isize {
            let mut image = BTreeSet::new();
            for g in enumerate_jt(n) {
                let k = map_k(&g).map_err(|e| e.to_string())?;
                let kd = map_k_direct(&g).map_err(|e| e.to_string())?;
                expect_eq(&format!("K({g})"), &kd, &k)?;
                image.insert(k);
            }
            let ud: BTreeSet<_> = enumerate_ud((n + 1) as usize).into_iter().collect();
            expect_eq(&format!("K(JT_{n})"), image, ud)?;
        }
        Ok("K agrees pointwise and is onto".into())
    }));
    out
}

pub fn conjecture(nmax: usize) -> Vec<Check> {
    vec![run(format!("partner counts are products of Motzkin numbers, n <= {nmax}"), || {
        let r = conjecture_check_upto(nmax as isize);
        match r.failures.first() {
            None => Ok(format!("{} even and {} odd threads", r.even_checked, r.odd_checked)),
            Some(f) => Err(format!(
                "{:?} thread {} has {} partners ({} failures)",
                f.side,
                f.thread,
                f.partners,
                r.failures.len()
            )),
        }
    })]
}

pub fn canary(nmax: usize) -> Vec<Check> {
    let mut out = Vec::new();
    out.push(run("example tiling of order 3", || {
        let t = example_tiling();
        let (large, small) = t.asm_pair();
        expect_eq(
            "large matrix",
            large.rows(),
            vec![vec![0, 0, 0, 1], vec![1, 0, 0, 0], vec![0, 0, 1, 0], vec![0, 1, 0, 0]],
        )?;
        expect_eq("small matrix", small.rows(), vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]])?;
        let w = assemble_complete_baxter(&t).map_err(|e| e.to_string())?;
        Ok(format!("complete Baxter permutation {}", w.compact()))
    }));
    let top = nmax.clamp(1, MAX_ORDER);
    out.push(run(format!("permutation matrices and Baxter permutations, order <= {top}"), || {
        let mut total = 0;
        for n in 1..=top {
            let r = verify_canary(n).map_err(|e| e.to_string())?;
            if let Some(&k) = r.violations.first() {
                return Err(format!("order {n}, tiling #{k}"));
            }
            total += r.tilings;
        }
        Ok(format!("{total} tilings"))
    }));
    out.push(run(format!("asm validity and assembled permutations, order <= {}", top.min(4)), || {
        for n in 1..=top.min(4) {
            for (k, t) in aztec::enumerate_tilings(n).map_err(|e| e.to_string())?.iter().enumerate() {
                let (large, small) = t.asm_pair();
                if !large.is_valid() || !small.is_valid() {
                    return Err(format!("order {n}, tiling #{k}: not an ASM"));
                }
                if let Ok(w) = assemble_complete_baxter(t) {
                    if !crate::baxter::is_complete_baxter(&w)
                        || reduce(&w).ok() != large.permutation()
                        || anti_of(&w).ok() != small.permutation()
                    {
                        return Err(format!("order {n}, tiling #{k}: {w}"));
                    }
                }
            }
        }
        Ok("all valid".into())
    }));
    out
}

/// The order-3 tiling whose matrices are `[[0,0,0,1],[1,0,0,0],[0,0,1,0],[0,1,0,0]]`
/// and `[[0,0,1],[1,0,0],[0,1,0]]`.
pub fn example_tiling() -> DominoTiling {
    "0,2 0,3\n1,1 2,1\n1,2 2,2\n1,3 1,4\n2,0 3,0\n2,3 3,3\n2,4 2,5\n3,1 3,2\n3,4 3,5\n4,1 4,2\n4,3 4,4\n5,2 5,3"
        .parse()
        .expect("literal")
}

pub fn closure(nmax: usize) -> Vec<Check> {
    let mut out = Vec::new();
    out.push(run(format!("p - 1 - s is a snow leopard permutation, |p| + |s| <= {nmax}"), || {
        let odd = |len: usize| enumerate_slp(len as isize);
        let mut pairs = 0;
        for lp in (1..=nmax).step_by(2) {
            for ls in (1..=nmax.saturating_sub(lp)).step_by(2) {
                for p in odd(lp) {
                    for s in odd(ls) {
                        let w = Perm::skew_sum_all([&p, &Perm::one(), &s]).expect("no @");
                        if !is_slp(&w) {
                            return Err(format!("{p} and {s}"));
                        }
                        pairs += 1;
                    }
                }
            }
        }
        Ok(format!("{pairs} pairs"))
    }));
    out.push(run(format!("partners of identity and decreasing threads, n <= {}", nmax.min(8)), || {
        for n in 0..=nmax.min(8) {
            let inv: BTreeSet<Perm> = enumerate_3412_involutions(n.saturating_sub(1)).iter().cloned().collect();
            let got = entangled_partners(&Perm::identity(n), Side::Odd).map_err(|e| e.to_string())?;
            let want = if n == 0 { BTreeSet::from([Perm::anti()]) } else { inv };
            expect_eq(&format!("partners of 12..{n}"), got, want)?;
            if n < 8 {
                let got = entangled_partners(&Perm::decreasing(n), Side::Even).map_err(|e| e.to_string())?;
                let want: BTreeSet<Perm> =
                    enumerate_3412_involutions(n + 1).iter().map(Perm::complement).collect();
                expect_eq(&format!("partners of {n}..21"), got, want)?;
            }
        }
        Ok("matches 3412-avoiding involutions".into())
    }));
    out.push(run(format!("layered thread partner sets, total length <= {}", nmax.min(8)), || {
        let mut specs = 0;
        for total in 1..=nmax.min(8) {
            for spec in LayerSpec::compositions(total) {
                let up = up_layered(&spec);
                let got = entangled_partners(&up, Side::Odd).map_err(|e| e.to_string())?;
                let want = partners_of_layered_odd(&spec);
                expect_eq(&format!("partners of {up}"), got.len() as u128, spec.motzkin_product())?;
                expect_eq(&format!("partners of {up}"), &got, &want)?;
                let down = down_layered(&spec);
                let got = entangled_partners(&down, Side::Even).map_err(|e| e.to_string())?;
                let want = partners_of_layered_even(&spec);
                let count = match spec.layers() {
                    [l] => motzkin_number(l + 1),
                    _ => spec.motzkin_product(),
                };
                expect_eq(&format!("partners of {down}"), got.len() as u128, count)?;
                expect_eq(&format!("partners of {down}"), &got, &want)?;
                specs += 1;
            }
        }
        Ok(format!("{specs} layer specs on each side"))
    }));
    out.push(run(format!("compatibility pairs doubly alternating Baxter with snow leopards, m <= {}", nmax.min(8)), || {
        for m in 1..=nmax.min(8) {
            let slps = enumerate_slp(m as isize - 1);
            let mut partners: Vec<Perm> = doubly_alternating_baxter(m)
                .par_iter()
                .map(|sigma| {
                    let found: Vec<&Perm> = slps.iter().filter(|s| compatible(sigma, s).unwrap_or(false)).collect();
                    match found.as_slice() {
                        [one] => Ok((*one).clone()),
                        _ => Err(format!("{sigma} has {} compatible snow leopards", found.len())),
                    }
                })
                .collect::<Result<_, _>>()?;
            partners.sort();
            expect_eq(&format!("m = {m}"), partners, slps)?;
        }
        Ok("one-to-one".into())
    }));
    out
}

pub fn run_suite(suite: Suite, nmax: usize) -> Vec<Check> {
    match suite {
        Suite::Tables => tables(nmax),
        Suite::Bijections => bijections(nmax),
        Suite::Conjecture => conjecture(nmax),
        Suite::Canary => canary(nmax),
        Suite::Closure => closure(nmax),
        Suite::All => [Suite::Tables, Suite::Bijections, Suite::Conjecture, Suite::Canary, Suite::Closure]
            .into_iter()
            .flat_map(|s| run_suite(s, nmax))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Tables, Suite::Bijections, Suite::Conjecture, Suite::Canary, Suite::Closure] {
            for c in run_suite(suite, 5) {
                assert!(c.passed, "{c}");
            }
        }
    }

    #[test]
    fn example_tiling_parses() {
        assert_eq!(example_tiling().order(), 3);
    }

    #[test]
    fn suite_names() {
        for name in Suite::NAMES {
            assert!(name.parse::<Suite>().is_ok());
        }
        assert!("table".parse::<Suite>().is_err());
    }
}
