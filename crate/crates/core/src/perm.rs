//! Permutations in one-line notation, extended by the empty permutation and
//! the antipermutation `@` of length −1.
//!
//! `@` only combines with a neighbour that it can absorb one entry from:
//!
//! | expression | defined when           | result                         |
//! |------------|------------------------|--------------------------------|
//! | `q ⊕ @`    | `q` ends with its max  | `q` without its last entry     |
//! | `@ ⊕ q`    | `q` begins with 1      | `q` without its first entry    |
//! | `q ⊖ @`    | `q` ends with 1        | `q` without its last entry     |
//! | `@ ⊖ q`    | `q` begins with its max| `q` without its first entry    |
//!
//! The empty permutation is an identity for both sums, including against `@`.
//! With these rules `1 ⊕ @ = @ ⊕ 1 = 1 ⊖ @ = @ ⊖ 1 = ∅` and any chain of a
//! single operator evaluates to the same value under every bracketing that is
//! defined.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Anti,
    Seq(Vec<usize>),
}

/// A permutation of `{1, …, n}`, the empty permutation, or the antipermutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Repr);

impl Perm {
    /// The antipermutation `@`.
    pub const fn anti() -> Perm {
        Perm(Repr::Anti)
    }

    pub const fn empty() -> Perm {
        Perm(Repr::Seq(Vec::new()))
    }

    pub fn one() -> Perm {
        Perm(Repr::Seq(vec![1]))
    }

    /// `12…n`
    pub fn identity(n: usize) -> Perm {
        Perm(Repr::Seq((1..=n).collect()))
    }

    /// `n…21`
    pub fn decreasing(n: usize) -> Perm {
        Perm(Repr::Seq((1..=n).rev().collect()))
    }

    /// Builds a permutation from one-line notation, checking it is a bijection
    /// on `{1, …, n}`.
    pub fn new(entries: Vec<usize>) -> Result<Perm> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n || seen[v] {
                return Err(Error::MalformedPermutation(format!("{entries:?}")));
            }
            seen[v] = true;
        }
        Ok(Perm(Repr::Seq(entries)))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Perm {
        debug_assert!(Perm::new(entries.clone()).is_ok());
        Perm(Repr::Seq(entries))
    }

    /// The permutation order-isomorphic to a sequence of distinct values.
    pub fn standardize(values: &[usize]) -> Perm {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_unstable_by_key(|&i| values[i]);
        let mut out = vec![0; values.len()];
        for (rank, i) in order.into_iter().enumerate() {
            out[i] = rank + 1;
        }
        Perm(Repr::Seq(out))
    }

    /// Length, with `@` having length −1.
    pub fn len(&self) -> isize {
        match &self.0 {
            Repr::Anti => -1,
            Repr::Seq(v) => v.len() as isize,
        }
    }

    /// Number of entries (0 for both `∅` and `@`).
    pub fn size(&self) -> usize {
        self.entries().len()
    }

    pub fn is_anti(&self) -> bool {
        matches!(self.0, Repr::Anti)
    }

    /// True only for the empty permutation (not for `@`).
    pub fn is_empty(&self) -> bool {
        matches!(&self.0, Repr::Seq(v) if v.is_empty())
    }

    /// One-line entries; empty for both degenerate values.
    pub fn entries(&self) -> &[usize] {
        match &self.0 {
            Repr::Anti => &[],
            Repr::Seq(v) => v,
        }
    }

    /// 1-based access.
    pub fn at(&self, position: usize) -> usize {
        self.entries()[position - 1]
    }

    pub fn first(&self) -> Option<usize> {
        self.entries().first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.entries().last().copied()
    }

    pub fn begins_with_max(&self) -> bool {
        self.size() > 0 && self.first() == Some(self.size())
    }

    pub fn complement(&self) -> Perm {
        match &self.0 {
            Repr::Anti => Perm::anti(),
            Repr::Seq(v) => {
                let n = v.len();
                Perm(Repr::Seq(v.iter().map(|&x| n + 1 - x).collect()))
            }
        }
    }

    /// Inverse permutation; `@` is its own inverse.
    pub fn inverse(&self) -> Perm {
        match &self.0 {
            Repr::Anti => Perm::anti(),
            Repr::Seq(v) => {
                let mut inv = vec![0; v.len()];
                for (i, &x) in v.iter().enumerate() {
                    inv[x - 1] = i + 1;
                }
                Perm(Repr::Seq(inv))
            }
        }
    }

    /// `self ⊕ other`
    pub fn direct_sum(&self, other: &Perm) -> Result<Perm> {
        match (&self.0, &other.0) {
            (Repr::Seq(p), Repr::Seq(q)) => {
                let shift = p.len();
                let mut out = p.clone();
                out.extend(q.iter().map(|&x| x + shift));
                Ok(Perm(Repr::Seq(out)))
            }
            (Repr::Seq(p), Repr::Anti) if p.is_empty() => Ok(Perm::anti()),
            (Repr::Anti, Repr::Seq(q)) if q.is_empty() => Ok(Perm::anti()),
            (Repr::Seq(p), Repr::Anti) if p.last() == Some(&p.len()) => {
                Ok(Perm(Repr::Seq(p[..p.len() - 1].to_vec())))
            }
            (Repr::Anti, Repr::Seq(q)) if q.first() == Some(&1) => {
                Ok(Perm(Repr::Seq(q[1..].iter().map(|&x| x - 1).collect())))
            }
            _ => Err(Error::IllegalAnti(format!("{self} ⊕ {other}"))),
        }
    }

    /// `self ⊖ other`
    pub fn skew_sum(&self, other: &Perm) -> Result<Perm> {
        match (&self.0, &other.0) {
            (Repr::Seq(p), Repr::Seq(q)) => {
                let shift = q.len();
                let mut out: Vec<usize> = p.iter().map(|&x| x + shift).collect();
                out.extend_from_slice(q);
                Ok(Perm(Repr::Seq(out)))
            }
            (Repr::Seq(p), Repr::Anti) if p.is_empty() => Ok(Perm::anti()),
            (Repr::Anti, Repr::Seq(q)) if q.is_empty() => Ok(Perm::anti()),
            (Repr::Seq(p), Repr::Anti) if p.last() == Some(&1) => Ok(Perm(Repr::Seq(
                p[..p.len() - 1].iter().map(|&x| x - 1).collect(),
            ))),
            (Repr::Anti, Repr::Seq(q)) if q.first() == Some(&q.len()) => {
                Ok(Perm(Repr::Seq(q[1..].to_vec())))
            }
            _ => Err(Error::IllegalAnti(format!("{self} ⊖ {other}"))),
        }
    }

    /// Left-to-right `⊕` over a chain of operands.
    pub fn direct_sum_all<'a>(parts: impl IntoIterator<Item = &'a Perm>) -> Result<Perm> {
        parts
            .into_iter()
            .try_fold(Perm::empty(), |acc, p| acc.direct_sum(p))
    }

    /// Left-to-right `⊖` over a chain of operands.
    pub fn skew_sum_all<'a>(parts: impl IntoIterator<Item = &'a Perm>) -> Result<Perm> {
        parts
            .into_iter()
            .try_fold(Perm::empty(), |acc, p| acc.skew_sum(p))
    }

    /// True iff `p(j) ≡ j (mod 2)` for every position.
    pub fn preserves_parity(&self) -> bool {
        self.entries()
            .iter()
            .enumerate()
            .all(|(i, &x)| (i + 1) % 2 == x % 2)
    }

    /// The permutation induced on the odd entries, `π^o`. `@^o = ∅`.
    pub fn induced_odd(&self) -> Result<Perm> {
        self.induced(1)
    }

    /// The permutation induced on the even entries, `π^e`. `@^e = @`.
    pub fn induced_even(&self) -> Result<Perm> {
        if self.is_anti() {
            return Ok(Perm::anti());
        }
        self.induced(0)
    }

    fn induced(&self, parity: usize) -> Result<Perm> {
        if !self.preserves_parity() {
            return Err(Error::NotParityPreserving(self.to_string()));
        }
        let v = self
            .entries()
            .iter()
            .filter(|&&x| x % 2 == parity)
            .map(|&x| (x + parity) / 2)
            .collect();
        Ok(Perm(Repr::Seq(v)))
    }

    /// Up-down: begins with an ascent and ascents and descents alternate.
    /// Permutations of length at most one are vacuously alternating.
    pub fn is_alternating(&self) -> bool {
        self.entries()
            .windows(2)
            .enumerate()
            .all(|(i, w)| (w[0] < w[1]) == (i % 2 == 0))
    }

    pub fn is_doubly_alternating(&self) -> bool {
        self.is_alternating() && self.inverse().is_alternating()
    }

    pub fn is_involution(&self) -> bool {
        self.entries()
            .iter()
            .enumerate()
            .all(|(i, &x)| self.entries()[x - 1] == i + 1)
    }

    /// Digit string for `n ≤ 9`, space separated otherwise.
    pub fn compact(&self) -> String {
        match &self.0 {
            Repr::Seq(v) if !v.is_empty() && v.len() <= 9 => {
                v.iter().map(|x| char::from(b'0' + *x as u8)).collect()
            }
            _ => self.to_string(),
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Anti => f.write_str("@"),
            Repr::Seq(v) if v.is_empty() => f.write_str("e"),
            Repr::Seq(v) => {
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({})", self.compact())
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// `@`, `e` (or `∅`), whitespace/comma separated integers, or a compact
    /// digit string when the length is at most nine.
    fn from_str(s: &str) -> Result<Perm> {
        let s = s.trim();
        match s {
            "@" => return Ok(Perm::anti()),
            "e" | "∅" | "" => return Ok(Perm::empty()),
            _ => {}
        }
        let bad = || Error::MalformedPermutation(s.to_string());
        let entries: Vec<usize> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            if s.len() > 9 {
                return Err(bad());
            }
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Perm::new(entries).map_err(|_| bad())
    }
}
