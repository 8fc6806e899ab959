//! Partners of layered threads, 3412-avoiding involutions, and a checker for
//! the claim that every partner count is a product of Motzkin numbers.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::memo::LevelCache;
use crate::motzkin::motzkin_number;
use crate::perm::Perm;
use crate::threads::{entanglement_graph, Side};

/// Layer lengths `l₁, …, l_m`, all positive, `m ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LayerSpec(Vec<usize>);

impl LayerSpec {
    pub fn new(layers: Vec<usize>) -> Result<LayerSpec> {
        if layers.is_empty() || layers.contains(&0) {
            return Err(Error::InvalidLayerSpec(format!("{layers:?}")));
        }
        Ok(LayerSpec(layers))
    }

    pub fn layers(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Every composition of `total` (every spec with that total length).
    pub fn compositions(total: usize) -> Vec<LayerSpec> {
        if total == 0 {
            return Vec::new();
        }
        (0..1usize << (total - 1))
            .map(|cuts| {
                let mut layers = Vec::new();
                let mut run = 1;
                for bit in 0..total - 1 {
                    if cuts >> bit & 1 == 1 {
                        layers.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                layers.push(run);
                LayerSpec(layers)
            })
            .collect()
    }

    /// `M_{l₁−1} ⋯ M_{l_m−1}`
    pub fn motzkin_product(&self) -> u128 {
        self.0.iter().map(|&l| motzkin_number(l - 1)).product()
    }
}

impl fmt::Display for LayerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl FromStr for LayerSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<LayerSpec> {
        let layers = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidLayerSpec(s.to_string()))?;
        LayerSpec::new(layers).map_err(|_| Error::InvalidLayerSpec(s.to_string()))
    }
}

static INVOLUTIONS: LevelCache<Vec<Perm>> = LevelCache::new();

/// The 3412-avoiding involutions of length `n`: `∅`, `1 ⊕ π₁`, or
/// `(1 ⊖ π₁ ⊖ 1) ⊕ π₂`.
pub fn enumerate_3412_involutions(n: usize) -> Arc<Vec<Perm>> {
    INVOLUTIONS.get(n, |n, lower| {
        if n == 0 {
            return vec![Perm::empty()];
        }
        let one = Perm::one();
        let mut out: Vec<Perm> = lower[n - 1]
            .iter()
            .map(|p1| one.direct_sum(p1).expect("no @"))
            .collect();
        for k in 0..(n.max(1) - 1) {
            for p1 in lower[k].iter() {
                let block = Perm::skew_sum_all([&one, p1, &one]).expect("no @");
                for p2 in lower[n - 2 - k].iter() {
                    out.push(block.direct_sum(p2).expect("no @"));
                }
            }
        }
        out.sort();
        out
    })
}

/// `12⋯l₁ ⊖ 12⋯l₂ ⊖ ⋯ ⊖ 12⋯l_m`
pub fn up_layered(spec: &LayerSpec) -> Perm {
    let parts: Vec<Perm> = spec.layers().iter().map(|&l| Perm::identity(l)).collect();
    Perm::skew_sum_all(&parts).expect("no @")
}

/// `l₁⋯21 ⊕ l₂⋯21 ⊕ ⋯ ⊕ l_m⋯21`
pub fn down_layered(spec: &LayerSpec) -> Perm {
    let parts: Vec<Perm> = spec.layers().iter().map(|&l| Perm::decreasing(l)).collect();
    Perm::direct_sum_all(&parts).expect("no @")
}

/// Even threads entangled with the up-layered odd thread: all
/// `π₁ ⊖ 1 ⊖ π₂ ⊖ ⋯ ⊖ 1 ⊖ π_m` with `π_j` a 3412-avoiding involution of
/// length `l_j − 1`.
pub fn partners_of_layered_odd(spec: &LayerSpec) -> BTreeSet<Perm> {
    let one = Perm::one();
    spec.layers()
        .iter()
        .map(|&l| enumerate_3412_involutions(l - 1).to_vec())
        .multi_cartesian_product()
        .map(|choice| {
            let mut parts = Vec::with_capacity(2 * choice.len());
            for (i, p) in choice.into_iter().enumerate() {
                if i > 0 {
                    parts.push(one.clone());
                }
                parts.push(p);
            }
            Perm::skew_sum_all(&parts).expect("no @")
        })
        .collect()
}

/// Odd threads entangled with the down-layered even thread.
///
/// With one layer `l` these are the complements of the 3412-avoiding
/// involutions of length `l + 1`. With `m ≥ 2` layers they are all
/// `1 ⊕ c(π₁) ⊕ 1 ⊕ ⋯ ⊕ 1 ⊕ c(π_m) ⊕ 1` with `π_j` a 3412-avoiding
/// involution of length `l_j − 1`.
pub fn partners_of_layered_even(spec: &LayerSpec) -> BTreeSet<Perm> {
    if let [l] = spec.layers() {
        return enumerate_3412_involutions(l + 1)
            .iter()
            .map(Perm::complement)
            .collect();
    }
    layered_even_product_form(spec)
}

/// `1 ⊕ c(π₁) ⊕ 1 ⊕ ⋯ ⊕ 1 ⊕ c(π_m) ⊕ 1` over all choices, for any `m`. For
/// `m = 1` this is only part of the partner set.
pub fn layered_even_product_form(spec: &LayerSpec) -> BTreeSet<Perm> {
    let one = Perm::one();
    spec.layers()
        .iter()
        .map(|&l| enumerate_3412_involutions(l - 1).to_vec())
        .multi_cartesian_product()
        .map(|choice| {
            let mut parts = vec![one.clone()];
            for p in choice {
                parts.push(p.complement());
                parts.push(one.clone());
            }
            Perm::direct_sum_all(&parts).expect("no @")
        })
        .collect()
}

/// Whether `x` is a product of Motzkin numbers `M_k`, `k ≥ 2` (1 is the
/// empty product).
pub fn is_motzkin_product(x: u128) -> bool {
    fn go(x: u128, gens: &[u128], memo: &mut HashMap<u128, bool>) -> bool {
        if x == 1 {
            return true;
        }
        if let Some(&v) = memo.get(&x) {
            return v;
        }
        let v = gens
            .iter()
            .take_while(|&&g| g <= x)
            .any(|&g| x % g == 0 && go(x / g, gens, memo));
        memo.insert(x, v);
        v
    }
    if x == 0 {
        return false;
    }
    let gens: Vec<u128> = (2..)
        .map(motzkin_number)
        .take_while(|&m| m <= x)
        .collect();
    go(x, &gens, &mut HashMap::new())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureFailure {
    pub side: Side,
    pub thread: Perm,
    pub partners: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConjectureReport {
    pub even_checked: usize,
    pub odd_checked: usize,
    pub failures: Vec<ConjectureFailure>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: ConjectureReport) {
        self.even_checked += other.even_checked;
        self.odd_checked += other.odd_checked;
        self.failures.extend(other.failures);
    }
}

/// Checks every even thread of length `n` and every odd thread of length
/// `n + 1`.
pub fn conjecture_check(n: isize) -> ConjectureReport {
    let graph = entanglement_graph(n);
    let mut even: HashMap<&Perm, usize> = HashMap::new();
    let mut odd: HashMap<&Perm, usize> = HashMap::new();
    for (a, b) in &graph.edges {
        *even.entry(a).or_default() += 1;
        *odd.entry(b).or_default() += 1;
    }
    let check = |side: Side, counts: &HashMap<&Perm, usize>| -> Vec<ConjectureFailure> {
        let mut bad: Vec<ConjectureFailure> = counts
            .par_iter()
            .filter(|(_, &c)| !is_motzkin_product(c as u128))
            .map(|(t, &c)| ConjectureFailure {
                side,
                thread: (*t).clone(),
                partners: c,
            })
            .collect();
        bad.sort_by(|x, y| x.thread.cmp(&y.thread));
        bad
    };
    let mut failures = check(Side::Even, &even);
    failures.extend(check(Side::Odd, &odd));
    ConjectureReport {
        even_checked: even.len(),
        odd_checked: odd.len(),
        failures,
    }
}

/// [`conjecture_check`] for every `n` from `−1` to `n_max`.
pub fn conjecture_check_upto(n_max: isize) -> ConjectureReport {
    let mut report = ConjectureReport::default();
    for n in -1..=n_max {
        report.merge(conjecture_check(n));
    }
    report
}
