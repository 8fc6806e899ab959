//! Complete Baxter permutations, compatibility, and snow leopard permutations.
//!
//! A snow leopard permutation (SLP) is an anti-Baxter permutation compatible
//! with a doubly alternating Baxter permutation. Those of odd positive length
//! are exactly the permutations `(1 ⊕ c(π₁) ⊕ 1) ⊖ 1 ⊖ π₂` for SLPs `π₁`, `π₂`
//! of odd length (possibly `@`); those of even length are `1 ⊕ c(σ)` for an
//! SLP `σ` of odd length. [`enumerate_slp`] builds them from that recursion and
//! [`SlpOracle`] checks the definition directly.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::memo::LevelCache;
use crate::patterns::{is_anti_baxter, is_reduced_baxter};
use crate::perm::Perm;

pub fn is_complete_baxter(w: &Perm) -> bool {
    if w.is_anti() || w.is_empty() {
        return true;
    }
    let v = w.entries();
    let n = v.len();
    if n % 2 == 0 || !w.preserves_parity() {
        return false;
    }
    let pos = w.inverse();
    for i in 1..n {
        let (x, y) = (pos.at(i), pos.at(i + 1));
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        let ok = v[lo..hi - 1].iter().all(|&z| {
            if i % 2 == 1 {
                z < i
            } else {
                z > i + 1
            }
        });
        if !ok {
            return false;
        }
    }
    true
}

/// The reduced Baxter permutation of a complete Baxter permutation (its odd
/// entries). The complete Baxter permutation `∅` reduces to `∅`.
pub fn reduce(w: &Perm) -> Result<Perm> {
    if !is_complete_baxter(w) {
        return Err(Error::NotCompleteBaxter(w.to_string()));
    }
    w.induced_odd()
}

/// The anti-Baxter permutation of a complete Baxter permutation (its even
/// entries). The complete Baxter permutation `∅` is paired with `@`.
pub fn anti_of(w: &Perm) -> Result<Perm> {
    if !is_complete_baxter(w) {
        return Err(Error::NotCompleteBaxter(w.to_string()));
    }
    if w.is_empty() {
        return Ok(Perm::anti());
    }
    w.induced_even()
}

/// The unique parity-preserving permutation with the given odd and even parts.
pub fn interleave(odd: &Perm, even: &Perm) -> Result<Perm> {
    if odd.len() != even.len() + 1 {
        return Err(Error::LengthMismatch(format!(
            "odd part {odd} has length {}, even part {even} has length {}",
            odd.len(),
            even.len()
        )));
    }
    if even.is_anti() {
        return Ok(Perm::anti());
    }
    let mut out = Vec::with_capacity(odd.size() + even.size());
    for (i, &o) in odd.entries().iter().enumerate() {
        out.push(2 * o - 1);
        if let Some(&e) = even.entries().get(i) {
            out.push(2 * e);
        }
    }
    Ok(Perm::from_vec_unchecked(out))
}

/// Whether a reduced Baxter and an anti-Baxter permutation are the odd and
/// even parts of one complete Baxter permutation.
pub fn compatible(baxter: &Perm, anti: &Perm) -> Result<bool> {
    if !is_reduced_baxter(baxter) {
        return Err(Error::NotReducedBaxter(baxter.to_string()));
    }
    if !is_anti_baxter(anti) {
        return Err(Error::NotAntiBaxter(anti.to_string()));
    }
    Ok(is_complete_baxter(&interleave(baxter, anti)?))
}

/// All doubly alternating reduced Baxter permutations of length `m`.
pub fn doubly_alternating_baxter(m: usize) -> Vec<Perm> {
    alternating_permutations(m)
        .into_iter()
        .filter(|p| p.inverse().is_alternating() && is_reduced_baxter(p))
        .collect()
}

/// Up-down permutations of length `m`, generated with prefix pruning.
pub fn alternating_permutations(m: usize) -> Vec<Perm> {
    fn go(m: usize, prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
        if prefix.len() == m {
            out.push(Perm::from_vec_unchecked(prefix.clone()));
            return;
        }
        for x in 1..=m {
            if used[x] {
                continue;
            }
            if let Some(&last) = prefix.last() {
                let want_ascent = prefix.len() % 2 == 1;
                if (last < x) != want_ascent {
                    continue;
                }
            }
            used[x] = true;
            prefix.push(x);
            go(m, prefix, used, out);
            prefix.pop();
            used[x] = false;
        }
    }
    let mut out = Vec::new();
    go(m, &mut Vec::new(), &mut vec![false; m + 1], &mut out);
    out
}

/// Definitional SLP test for permutations of one fixed length, with the
/// doubly alternating Baxter candidates precomputed.
pub struct SlpOracle {
    len: isize,
    candidates: Vec<Perm>,
}

impl SlpOracle {
    /// Oracle for permutations of length `len ≥ −1`.
    pub fn new(len: isize) -> SlpOracle {
        assert!(len >= -1);
        SlpOracle {
            len,
            candidates: doubly_alternating_baxter((len + 1) as usize),
        }
    }

    pub fn is_slp(&self, p: &Perm) -> bool {
        assert_eq!(p.len(), self.len, "oracle built for another length");
        is_anti_baxter(p)
            && self.candidates.iter().any(|sigma| {
                interleave(sigma, p).is_ok_and(|w| is_complete_baxter(&w))
            })
    }

    /// The doubly alternating Baxter permutations of length `len + 1`.
    pub fn candidates(&self) -> &[Perm] {
        &self.candidates
    }
}

/// Brute-force check of the definition.
pub fn is_slp_oracle(p: &Perm) -> bool {
    SlpOracle::new(p.len()).is_slp(p)
}

/// `1 ⊕ c(π) ⊕ 1`
pub(crate) fn bracket(p: &Perm) -> Result<Perm> {
    let one = Perm::one();
    Perm::direct_sum_all([&one, &p.complement(), &one])
}

/// `(1 ⊕ c(π₁) ⊕ 1) ⊖ 1 ⊖ π₂`
pub(crate) fn assemble(left: &Perm, right: &Perm) -> Result<Perm> {
    Perm::skew_sum_all([&bracket(left)?, &Perm::one(), right])
}

static SLP_LEVELS: LevelCache<BTreeSet<Perm>> = LevelCache::new();

/// SLPs of odd length `2k − 1`, cached by `k ≥ 0`.
pub(crate) fn slp_level(k: usize) -> Arc<BTreeSet<Perm>> {
    SLP_LEVELS.get(k, |k, lower| {
        if k == 0 {
            return BTreeSet::from([Perm::anti()]);
        }
        let mut out = BTreeSet::new();
        for a in 0..k {
            for left in lower[a].iter() {
                for right in lower[k - 1 - a].iter() {
                    out.insert(assemble(left, right).expect("SLP components absorb @"));
                }
            }
        }
        out
    })
}

/// All snow leopard permutations of length `len ≥ −1`, in sorted order.
pub fn enumerate_slp(len: isize) -> Vec<Perm> {
    assert!(len >= -1, "no permutations of length {len}");
    if len % 2 != 0 {
        slp_level(((len + 1) / 2) as usize).iter().cloned().collect()
    } else {
        let one = Perm::one();
        let mut out: Vec<Perm> = slp_level((len / 2) as usize)
            .iter()
            .map(|s| one.direct_sum(&s.complement()).expect("1 ⊕ c(@) = ∅"))
            .collect();
        out.sort();
        out
    }
}

pub fn is_slp(p: &Perm) -> bool {
    let len = p.len();
    if len % 2 != 0 {
        return slp_level(((len + 1) / 2) as usize).contains(p);
    }
    let rest = match p.first() {
        None => Perm::anti(),
        Some(1) => Perm::standardize(&p.entries()[1..]).complement(),
        Some(_) => return false,
    };
    slp_level((len / 2) as usize).contains(&rest)
}

/// `π = (1 ⊕ c(left) ⊕ 1) ⊖ 1 ⊖ right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlpDecomposition {
    pub left: Perm,
    pub right: Perm,
    /// 1-based position of the connector, absent when `π(1) = 1`.
    pub connector_position: Option<usize>,
}

impl SlpDecomposition {
    pub fn connector_value(&self, p: &Perm) -> Option<usize> {
        self.connector_position.map(|i| p.at(i))
    }

    pub fn reassemble(&self) -> Result<Perm> {
        assemble(&self.left, &self.right)
    }
}

/// Splits `p` into `(block, right)` by shape alone: `block` occupies the values
/// above `|right| + 1`, followed (when `right ≠ @`) by the connector and `right`.
fn split_shape(p: &Perm) -> Option<SlpDecomposition> {
    let v = p.entries();
    let n = v.len();
    let first = *v.first()?;
    let right_len = first as isize - 2;
    let block_len = (n as isize - right_len - 1).min(n as isize) as usize;
    let (right, connector_position) = if right_len < 0 {
        (Perm::anti(), None)
    } else {
        let r = right_len as usize;
        (Perm::standardize(&v[n - r..]), Some(n - r))
    };
    let block = &v[..block_len];
    let middle = match block_len {
        0 => return None,
        1 => Perm::anti(),
        _ => Perm::standardize(&block[1..block_len - 1]),
    };
    Some(SlpDecomposition {
        left: middle.complement(),
        right,
        connector_position,
    })
}

/// The unique decomposition of an SLP of odd positive length.
pub fn slp_decompose(p: &Perm) -> Result<SlpDecomposition> {
    let not_slp = || Error::NotSlp(p.to_string());
    if p.len() < 1 || p.len() % 2 == 0 {
        return Err(not_slp());
    }
    let d = split_shape(p).ok_or_else(not_slp)?;
    if d.reassemble().ok().as_ref() != Some(p) || !is_slp(&d.left) || !is_slp(&d.right) {
        return Err(not_slp());
    }
    Ok(d)
}

/// The block sequence `π₁, …, π_k` with
/// `π = (1 ⊕ c(π₁) ⊕ 1) ⊖ 1 ⊖ ⋯ ⊖ 1 ⊖ (1 ⊕ c(π_k) ⊕ 1)`.
pub fn block_decompose(p: &Perm) -> Result<Vec<Perm>> {
    let mut blocks = Vec::new();
    let mut rest = p.clone();
    loop {
        let d = slp_decompose(&rest)?;
        blocks.push(d.left);
        if d.right.is_anti() {
            return Ok(blocks);
        }
        rest = d.right;
    }
}

/// Inverse of [`block_decompose`].
pub fn assemble_blocks(blocks: &[Perm]) -> Result<Perm> {
    let one = Perm::one();
    let mut parts = Vec::with_capacity(2 * blocks.len());
    for (i, b) in blocks.iter().enumerate() {
        if i > 0 {
            parts.push(one.clone());
        }
        parts.push(bracket(b)?);
    }
    Perm::skew_sum_all(&parts)
}
