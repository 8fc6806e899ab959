//! Even and odd threads of snow leopard permutations, their recursive
//! decompositions, and entanglement.
//!
//! For an SLP `π` of length `2n + 1` the even entries form the even thread
//! `π^e` of length `n` and the odd entries the odd thread `π^o` of length
//! `n + 1`. Two threads arising from one `π` are entangled.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::baxter::{bracket, slp_level};
use crate::error::{Error, Result};
use crate::memo::LevelCache;
use crate::perm::Perm;

/// `ET_n` and `OT_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreadSets {
    pub n: isize,
    pub even_threads: BTreeSet<Perm>,
    pub odd_threads: BTreeSet<Perm>,
}

static THREADS: LevelCache<ThreadSets> = LevelCache::new();

/// Both thread sets of length `n ≥ −1`, built from the recursive descriptions
/// `c(β₁) ⊖ 1 ⊖ α₁` and `(1 ⊕ c(α₂) ⊕ 1) ⊖ β₂`.
pub fn enumerate_threads(n: isize) -> Arc<ThreadSets> {
    assert!(n >= -1, "no threads of length {n}");
    THREADS.get((n + 1) as usize, |level, lower| {
        let n = level as isize - 1;
        let et = |k: isize| &lower[(k + 1) as usize].even_threads;
        let ot = |k: isize| &lower[(k + 1) as usize].odd_threads;
        if n == -1 {
            return ThreadSets {
                n,
                even_threads: BTreeSet::from([Perm::anti()]),
                odd_threads: BTreeSet::new(),
            };
        }

        let odd_threads: BTreeSet<Perm> = if n == 0 {
            BTreeSet::from([Perm::empty()])
        } else {
            (-1..=n - 2)
                .into_par_iter()
                .flat_map_iter(|k| {
                    let right = ot(n - 2 - k);
                    et(k).iter().flat_map(move |a2| {
                        let block = bracket(a2).expect("brackets absorb @");
                        right
                            .iter()
                            .map(move |b2| block.skew_sum(b2).expect("β₂ is a permutation"))
                    })
                })
                .collect()
        };

        let one = Perm::one();
        let odd_at = |k: isize| if k == n { &odd_threads } else { ot(k) };
        let even_threads: BTreeSet<Perm> = (0..=n)
            .into_par_iter()
            .flat_map_iter(|k| {
                let rest = et(n - k - 1);
                let one = &one;
                odd_at(k).iter().flat_map(move |b1| {
                    let head = b1.complement().skew_sum(one).expect("no @ on the left");
                    rest.iter()
                        .map(move |a1| head.skew_sum(a1).expect("head ends with 1"))
                })
            })
            .collect();

        ThreadSets {
            n,
            even_threads,
            odd_threads,
        }
    })
}

pub fn is_even_thread(p: &Perm) -> bool {
    enumerate_threads(p.len()).even_threads.contains(p)
}

pub fn is_odd_thread(p: &Perm) -> bool {
    p.len() >= 0 && enumerate_threads(p.len()).odd_threads.contains(p)
}

/// The unique `(α₂, β₂)` with `β = (1 ⊕ c(α₂) ⊕ 1) ⊖ β₂`.
pub fn odd_decompose(beta: &Perm) -> Result<(Perm, Perm)> {
    let not_odd = || Error::NotOddThread(beta.to_string());
    if beta.len() < 1 || !is_odd_thread(beta) {
        return Err(not_odd());
    }
    split_odd_shape(beta).ok_or_else(not_odd)
}

/// Splits by shape alone: the lower block `β₂` has `β(1) − 1` entries, all at
/// the end; the upper block starts with its minimum and ends with its maximum.
pub(crate) fn split_odd_shape(beta: &Perm) -> Option<(Perm, Perm)> {
    let v = beta.entries();
    let n = v.len();
    let right_len = v.first()? - 1;
    let block_len = n.checked_sub(right_len).filter(|&b| b > 0)?;
    let (block, tail) = v.split_at(block_len);
    if tail.iter().any(|&x| x > right_len) {
        return None;
    }
    let block = Perm::standardize(block);
    if block.first() != Some(1) || block.last() != Some(block_len) {
        return None;
    }
    let a2 = if block_len == 1 {
        Perm::anti()
    } else {
        Perm::standardize(&block.entries()[1..block_len - 1]).complement()
    };
    Some((a2, Perm::standardize(tail)))
}

/// Positions `j` (1-based) with `c(α)(j) = j` and `c(α)(j)` a left-to-right
/// maximum of `c(α)`.
pub fn eligible_connectors(alpha: &Perm) -> Vec<usize> {
    let c = alpha.complement();
    let mut out = Vec::new();
    let mut max = 0;
    for (i, &x) in c.entries().iter().enumerate() {
        if x > max {
            max = x;
            if x == i + 1 {
                out.push(i + 1);
            }
        }
    }
    out
}

/// `(β₁, α₁)` with `α = c(β₁) ⊖ 1 ⊖ α₁` and the separating 1 at position `j`.
fn split_at_connector(alpha: &Perm, j: usize) -> (Perm, Perm) {
    let v = alpha.entries();
    (
        Perm::standardize(&v[..j - 1]).complement(),
        Perm::standardize(&v[j..]),
    )
}

/// Every `(β₁, α₁)` with `β₁ ∈ OT`, `α₁ ∈ ET` and `α = c(β₁) ⊖ 1 ⊖ α₁`, by
/// increasing `|β₁|`.
pub fn even_decompositions(alpha: &Perm) -> Result<Vec<(Perm, Perm)>> {
    if !is_even_thread(alpha) {
        return Err(Error::NotEvenThread(alpha.to_string()));
    }
    let mut out = connector_decompositions(alpha)?;
    // The separating 1 may also be absorbed by α₁ = @.
    let whole = alpha.complement();
    if is_odd_thread(&whole) {
        out.push((whole, Perm::anti()));
    }
    Ok(out)
}

/// The decompositions whose separating 1 is an entry of `α`, i.e. all of
/// [`even_decompositions`] except `(c(α), @)`.
pub fn connector_decompositions(alpha: &Perm) -> Result<Vec<(Perm, Perm)>> {
    if !is_even_thread(alpha) {
        return Err(Error::NotEvenThread(alpha.to_string()));
    }
    Ok(eligible_connectors(alpha)
        .into_iter()
        .map(|j| split_at_connector(alpha, j))
        .filter(|(b1, a1)| is_odd_thread(b1) && is_even_thread(a1))
        .collect())
}

/// The decomposition whose separating 1 sits at the leftmost eligible
/// connector, or `(c(α), @)` when there is none.
pub fn leftmost_decomposition(alpha: &Perm) -> Result<(Perm, Perm)> {
    if alpha.is_anti() || !is_even_thread(alpha) {
        return Err(Error::NotEvenThread(alpha.to_string()));
    }
    Ok(match eligible_connectors(alpha).first() {
        Some(&j) => split_at_connector(alpha, j),
        None => (alpha.complement(), Perm::anti()),
    })
}

/// Edges `(α, β)` with `α ∈ ET_n`, `β ∈ OT_{n+1}` entangled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntanglementGraph {
    pub n: isize,
    pub edges: BTreeSet<(Perm, Perm)>,
}

impl EntanglementGraph {
    pub fn partners_of_even(&self, alpha: &Perm) -> BTreeSet<Perm> {
        self.edges
            .range((alpha.clone(), Perm::anti())..)
            .take_while(|(a, _)| a == alpha)
            .map(|(_, b)| b.clone())
            .collect()
    }

    pub fn partners_of_odd(&self, beta: &Perm) -> BTreeSet<Perm> {
        self.edges
            .iter()
            .filter(|(_, b)| b == beta)
            .map(|(a, _)| a.clone())
            .collect()
    }
}

static GRAPHS: LevelCache<EntanglementGraph> = LevelCache::new();

/// Projects every SLP of length `2n + 1`.
pub fn entanglement_graph(n: isize) -> Arc<EntanglementGraph> {
    assert!(n >= -1, "no threads of length {n}");
    GRAPHS.get((n + 1) as usize, |level, _| {
        let slps = slp_level(level);
        let edges = slps
            .par_iter()
            .map(|pi| {
                (
                    pi.induced_even().expect("SLPs preserve parity"),
                    pi.induced_odd().expect("SLPs preserve parity"),
                )
            })
            .collect();
        EntanglementGraph {
            n: level as isize - 1,
            edges,
        }
    })
}

pub fn entangled(alpha: &Perm, beta: &Perm) -> Result<bool> {
    if beta.len() != alpha.len() + 1 {
        return Err(Error::LengthMismatch(format!(
            "even thread {alpha} has length {}, odd thread {beta} has length {}",
            alpha.len(),
            beta.len()
        )));
    }
    Ok(entanglement_graph(alpha.len())
        .edges
        .contains(&(alpha.clone(), beta.clone())))
}

/// Which thread of an SLP a permutation is taken to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Even,
    Odd,
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "even" => Ok(Side::Even),
            "odd" => Ok(Side::Odd),
            _ => Err(format!("expected `even` or `odd`, got {s:?}")),
        }
    }
}

/// Threads entangled with `p`, read as a thread of the given side.
pub fn entangled_partners(p: &Perm, side: Side) -> Result<BTreeSet<Perm>> {
    match side {
        Side::Even => {
            if !is_even_thread(p) {
                return Err(Error::NotEvenThread(p.to_string()));
            }
            Ok(entanglement_graph(p.len()).partners_of_even(p))
        }
        Side::Odd => {
            if !is_odd_thread(p) {
                return Err(Error::NotOddThread(p.to_string()));
            }
            Ok(entanglement_graph(p.len() - 1).partners_of_odd(p))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baxter::enumerate_slp;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn table_counts() {
        let et = [1usize, 1, 1, 2, 6, 17, 46, 128];
        let ot = [0usize, 1, 1, 2, 4, 9, 23, 63];
        for n in -1..=6isize {
            let t = enumerate_threads(n);
            let i = (n + 1) as usize;
            assert_eq!((t.even_threads.len(), t.odd_threads.len()), (et[i], ot[i]), "n = {n}");
        }
        assert_eq!(enumerate_threads(0).even_threads, BTreeSet::from([Perm::empty()]));
        assert_eq!(enumerate_threads(0).odd_threads, BTreeSet::from([Perm::empty()]));
    }

    #[test]
    fn recursion_equals_projection() {
        for n in -1..=8isize {
            let t = enumerate_threads(n);
            let even: BTreeSet<Perm> = enumerate_slp(2 * n + 1)
                .iter()
                .map(|s| s.induced_even().unwrap())
                .collect();
            assert_eq!(t.even_threads, even, "ET_{n}");
            if n >= 0 {
                let odd: BTreeSet<Perm> = enumerate_slp(2 * n - 1)
                    .iter()
                    .map(|s| s.induced_odd().unwrap())
                    .collect();
                assert_eq!(t.odd_threads, odd, "OT_{n}");
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert!(is_even_thread(&p("4321")));
        assert!(!is_odd_thread(&p("42315")));
        assert!(is_odd_thread(&p("3412")));
        assert!(!is_even_thread(&p("3412")));
        assert!(is_even_thread(&Perm::anti()));
        assert!(!is_odd_thread(&Perm::anti()));
    }

    #[test]
    fn odd_decomposition_examples() {
        assert_eq!(odd_decompose(&p("4657312")).unwrap(), (p("12"), p("312")));
        assert_eq!(odd_decompose(&p("7243561")).unwrap(), (Perm::anti(), p("243561")));
        assert_eq!(odd_decompose(&p("1")).unwrap(), (Perm::anti(), Perm::empty()));
        assert!(matches!(odd_decompose(&p("42315")), Err(Error::NotOddThread(_))));
        assert!(odd_decompose(&Perm::empty()).is_err());
    }

    #[test]
    fn odd_decomposition_reassembles() {
        for n in 1..=8 {
            for b in enumerate_threads(n).odd_threads.iter() {
                let (a2, b2) = odd_decompose(b).unwrap();
                assert!(is_even_thread(&a2) && is_odd_thread(&b2), "{b}");
                assert_eq!(&bracket(&a2).unwrap().skew_sum(&b2).unwrap(), b);
            }
        }
    }

    #[test]
    fn even_decomposition_examples() {
        let listed = vec![(Perm::empty(), p("53421")), (p("1"), p("3421")), (p("12435"), Perm::empty())];
        assert_eq!(connector_decompositions(&p("653421")).unwrap(), listed);
        // 124356 = 1 ⊕ c(4231) ⊕ 1 is an odd thread, so @ can absorb the 1.
        let mut all = listed;
        all.push((p("124356"), Perm::anti()));
        assert_eq!(even_decompositions(&p("653421")).unwrap(), all);
        assert_eq!(connector_decompositions(&p("12")).unwrap(), vec![]);
        assert_eq!(even_decompositions(&p("12")).unwrap(), vec![(p("21"), Perm::anti())]);
        assert_eq!(even_decompositions(&Perm::empty()).unwrap(), vec![(Perm::empty(), Perm::anti())]);
        assert!(matches!(even_decompositions(&p("3412")), Err(Error::NotEvenThread(_))));
    }

    #[test]
    fn eligible_connector_examples() {
        assert_eq!(eligible_connectors(&p("354621")), vec![5, 6]);
        assert_eq!(eligible_connectors(&p("653421")), vec![1, 2, 5, 6]);
        assert_eq!(eligible_connectors(&p("12")), Vec::<usize>::new());
    }

    #[test]
    fn leftmost_examples() {
        assert_eq!(leftmost_decomposition(&p("653421")).unwrap(), (Perm::empty(), p("53421")));
        assert_eq!(leftmost_decomposition(&Perm::empty()).unwrap(), (Perm::empty(), Perm::anti()));
        assert_eq!(leftmost_decomposition(&p("4321")).unwrap(), (Perm::empty(), p("321")));
        assert_eq!(leftmost_decomposition(&p("12")).unwrap(), (p("21"), Perm::anti()));
    }

    /// Every decomposition found by brute force over all split points.
    fn decompositions_by_scan(alpha: &Perm) -> Vec<(Perm, Perm)> {
        let one = Perm::one();
        let n = alpha.size();
        let mut out = Vec::new();
        for j in 1..=n {
            let (b1, a1) = split_at_connector(alpha, j);
            let rebuilt = Perm::skew_sum_all([&b1.complement(), &one, &a1]).unwrap();
            if &rebuilt == alpha && is_odd_thread(&b1) && is_even_thread(&a1) {
                out.push((b1, a1));
            }
        }
        let whole = alpha.complement();
        if is_odd_thread(&whole) {
            out.push((whole, Perm::anti()));
        }
        out
    }

    #[test]
    fn decompositions_use_eligible_connectors_only() {
        for n in 0..=8 {
            for a in enumerate_threads(n).even_threads.iter() {
                let found = even_decompositions(a).unwrap();
                assert_eq!(found, decompositions_by_scan(a), "{a}");
                assert!(!found.is_empty(), "{a}");
                let one = Perm::one();
                for (b1, a1) in &found {
                    let rebuilt = Perm::skew_sum_all([&b1.complement(), &one, a1]).unwrap();
                    assert_eq!(&rebuilt, a);
                }
            }
        }
    }

    #[test]
    fn leftmost_decomposition_is_valid() {
        for n in 0..=8 {
            for a in enumerate_threads(n).even_threads.iter() {
                let (b1, a1) = leftmost_decomposition(a).unwrap();
                assert!(is_odd_thread(&b1) && is_even_thread(&a1), "{a}");
                assert_eq!(even_decompositions(a).unwrap()[0], (b1, a1));
            }
        }
    }

    #[test]
    fn leftmost_connector_has_a_witness() {
        for n in 0..=6isize {
            let graph_slps = enumerate_slp(2 * n + 1);
            for a in enumerate_threads(n).even_threads.iter() {
                let j = eligible_connectors(a).first().map_or(0, |&q| n as usize - q + 1);
                let witness = graph_slps
                    .iter()
                    .any(|s| s.at(1) == 2 * j + 1 && &s.induced_even().unwrap() == a);
                assert!(witness, "{a}");
            }
        }
    }

    #[test]
    fn misplaced_connector_forces_a_leading_maximum() {
        use crate::baxter::slp_decompose;
        for len in (1..=15).step_by(2) {
            for s in enumerate_slp(len) {
                let alpha = s.induced_even().unwrap();
                let d = slp_decompose(&s).unwrap();
                // The connector value π(1) − 1 is even, so it sits at an even
                // position 2q of π and at position q of π^e.
                let Some(pos) = d.connector_position else {
                    continue;
                };
                assert_eq!(pos % 2, 0);
                let eligible = eligible_connectors(&alpha);
                assert!(eligible.contains(&(pos / 2)), "{s}");
                if eligible.first() != Some(&(pos / 2)) {
                    assert!(alpha.begins_with_max(), "{s}");
                }
            }
        }
    }

    #[test]
    fn entanglement_examples() {
        assert!(entangled(&p("4321"), &p("34521")).unwrap());
        assert!(entangled(&Perm::empty(), &p("1")).unwrap());
        assert_eq!(
            entangled_partners(&p("21"), Side::Even).unwrap(),
            BTreeSet::from([p("123"), p("231"), p("312"), p("321")])
        );
        assert_eq!(entangled_partners(&p("1"), Side::Odd).unwrap(), BTreeSet::from([Perm::empty()]));
        assert!(matches!(entangled(&p("21"), &p("12")), Err(Error::LengthMismatch(_))));
    }

    #[test]
    fn skew_sums_of_odd_threads() {
        let one = Perm::one();
        for a in 0..=6isize {
            for b in 0..=6 - a {
                for b1 in enumerate_threads(a).odd_threads.iter() {
                    for b2 in enumerate_threads(b).odd_threads.iter() {
                        let sum = b1.skew_sum(b2).unwrap();
                        assert!(is_odd_thread(&sum), "{b1} ⊖ {b2}");
                        let expected: BTreeSet<Perm> = entangled_partners(b1, Side::Odd)
                            .unwrap()
                            .iter()
                            .flat_map(|a1| {
                                let one = &one;
                                entangled_partners(b2, Side::Odd).unwrap().into_iter().map(
                                    move |a2| Perm::skew_sum_all([a1, one, &a2]).unwrap(),
                                )
                            })
                            .collect();
                        assert_eq!(entangled_partners(&sum, Side::Odd).unwrap(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn removing_an_outer_one_keeps_odd_threads() {
        let one = Perm::one();
        for n in 1..=7 {
            for b in enumerate_threads(n).odd_threads.iter() {
                let v = b.entries();
                if v[0] == v.len() {
                    let rest = Perm::standardize(&v[1..]);
                    assert_eq!(&one.skew_sum(&rest).unwrap(), b);
                    assert!(is_odd_thread(&rest), "{b}");
                }
                if v[v.len() - 1] == 1 {
                    let rest = Perm::standardize(&v[..v.len() - 1]);
                    assert!(is_odd_thread(&rest), "{b}");
                }
            }
        }
    }

    #[test]
    fn skew_sums_of_even_threads() {
        let one = Perm::one();
        for a in -1..=5isize {
            for b in -1..=5 - a {
                for a1 in enumerate_threads(a).even_threads.iter() {
                    for a2 in enumerate_threads(b).even_threads.iter() {
                        let Ok(sum) = Perm::skew_sum_all([a1, &one, a2]) else {
                            continue;
                        };
                        assert!(is_even_thread(&sum), "{a1} ⊖ 1 ⊖ {a2}");
                        let partners = entangled_partners(&sum, Side::Even).unwrap();
                        for b1 in entangled_partners(a1, Side::Even).unwrap() {
                            for b2 in entangled_partners(a2, Side::Even).unwrap() {
                                assert!(partners.contains(&b1.skew_sum(&b2).unwrap()));
                            }
                        }
                    }
                }
            }
        }
        // The converse fails: 21 = ∅ ⊖ 1 ⊖ 1 is entangled with 123, but ∅
        // pairs only with 1 and 1 only with 12 and 21.
        let partners = entangled_partners(&p("21"), Side::Even).unwrap();
        assert!(partners.contains(&p("123")));
        assert_eq!(entangled_partners(&Perm::empty(), Side::Even).unwrap(), BTreeSet::from([p("1")]));
        assert_eq!(
            entangled_partners(&p("1"), Side::Even).unwrap(),
            BTreeSet::from([p("12"), p("21")])
        );
        assert_eq!(one.skew_sum(&p("12")).unwrap(), p("312"));
        assert_eq!(one.skew_sum(&p("21")).unwrap(), p("321"));
    }

    #[test]
    fn graph_edges_come_from_threads() {
        for n in -1..=6isize {
            let g = entanglement_graph(n);
            let t = enumerate_threads(n);
            let t1 = enumerate_threads(n + 1);
            for (a, b) in &g.edges {
                assert!(t.even_threads.contains(a) && t1.odd_threads.contains(b));
            }
            let evens: BTreeSet<Perm> = g.edges.iter().map(|(a, _)| a.clone()).collect();
            assert_eq!(evens, t.even_threads);
        }
    }
}
