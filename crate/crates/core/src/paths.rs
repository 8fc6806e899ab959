//! Catalan paths with no ascent of length exactly two (`ENNE`) or with no
//! factor `NEEN`, and the bijections `H`, `J` onto even and odd threads with
//! their inverses `F`, `G`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::baxter::bracket;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::threads::{is_even_thread, is_odd_thread, leftmost_decomposition, odd_decompose};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    N,
    E,
}

impl Step {
    fn flip(self) -> Step {
        match self {
            Step::N => Step::E,
            Step::E => Step::N,
        }
    }
}

/// A path from `(0,0)` to `(n,n)` never dropping below the diagonal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CatalanPath {
    steps: Vec<Step>,
}

impl CatalanPath {
    pub fn empty() -> CatalanPath {
        CatalanPath::default()
    }

    pub fn new(steps: Vec<Step>) -> Result<CatalanPath> {
        let mut height = 0i64;
        for &s in &steps {
            height += if s == Step::N { 1 } else { -1 };
            if height < 0 {
                break;
            }
        }
        if height != 0 {
            return Err(Error::MalformedPath(CatalanPath { steps }.to_string()));
        }
        Ok(CatalanPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of `N` steps.
    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }

    /// Reflection in the line `x + y = n`.
    pub fn reverse(&self) -> CatalanPath {
        CatalanPath {
            steps: self.steps.iter().rev().map(|s| s.flip()).collect(),
        }
    }

    /// No maximal run of `N` steps has length exactly two.
    pub fn is_enne(&self) -> bool {
        self.steps
            .split(|&s| s == Step::E)
            .all(|run| run.len() != 2)
    }

    /// No four consecutive steps `NEEN`.
    pub fn is_neen(&self) -> bool {
        self.neen_occurrences() == 0
    }

    /// Occurrences of the factor `NEEN`, overlapping ones included.
    pub fn neen_occurrences(&self) -> usize {
        self.steps
            .windows(4)
            .filter(|w| w == &[Step::N, Step::E, Step::E, Step::N])
            .count()
    }

    /// Splits at the last return to the diagonal before the end:
    /// `p = prefix N middle E`.
    fn split_last_return(&self) -> Option<(CatalanPath, CatalanPath)> {
        if self.steps.is_empty() {
            return None;
        }
        let mut height = 0i64;
        let mut last = 0;
        for (i, &s) in self.steps[..self.steps.len() - 1].iter().enumerate() {
            height += if s == Step::N { 1 } else { -1 };
            if height == 0 {
                last = i + 1;
            }
        }
        let len = self.steps.len();
        Some((
            CatalanPath { steps: self.steps[..last].to_vec() },
            CatalanPath { steps: self.steps[last + 1..len - 1].to_vec() },
        ))
    }

    fn wrap(prefix: &CatalanPath, middle: &CatalanPath) -> CatalanPath {
        let mut steps = Vec::with_capacity(prefix.steps.len() + middle.steps.len() + 2);
        steps.extend_from_slice(&prefix.steps);
        steps.push(Step::N);
        steps.extend_from_slice(&middle.steps);
        steps.push(Step::E);
        CatalanPath { steps }
    }
}

impl fmt::Display for CatalanPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for CatalanPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CatalanPath({self})")
    }
}

impl FromStr for CatalanPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<CatalanPath> {
        let t = s.trim();
        if t == "∅" || t == "e" {
            return Ok(CatalanPath::empty());
        }
        let steps = t
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c.to_ascii_uppercase() {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                _ => Err(Error::MalformedPath(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        CatalanPath::new(steps).map_err(|_| Error::MalformedPath(s.to_string()))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Class {
    Enne,
    Neen,
}

fn enumerate_class(n: usize, class: Class) -> Vec<CatalanPath> {
    fn go(n: usize, class: Class, steps: &mut Vec<Step>, ups: usize, run: usize, out: &mut Vec<CatalanPath>) {
        let downs = steps.len() - ups;
        if steps.len() == 2 * n {
            out.push(CatalanPath { steps: steps.clone() });
            return;
        }
        if ups < n {
            let blocked = class == Class::Neen && steps.ends_with(&[Step::N, Step::E, Step::E]);
            if !blocked {
                steps.push(Step::N);
                go(n, class, steps, ups + 1, run + 1, out);
                steps.pop();
            }
        }
        if downs < ups && !(class == Class::Enne && run == 2) {
            steps.push(Step::E);
            go(n, class, steps, ups, 0, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    go(n, class, &mut Vec::with_capacity(2 * n), 0, 0, &mut out);
    out
}

/// `ENNE_n` in lexicographic order (`N < E`).
pub fn enumerate_enne(n: usize) -> Vec<CatalanPath> {
    enumerate_class(n, Class::Enne)
}

/// `NEEN_n` in lexicographic order (`N < E`).
pub fn enumerate_neen(n: usize) -> Vec<CatalanPath> {
    enumerate_class(n, Class::Neen)
}

/// Every Catalan path with `n` up steps.
pub fn enumerate_catalan(n: usize) -> Vec<CatalanPath> {
    fn go(n: usize, steps: &mut Vec<Step>, ups: usize, out: &mut Vec<CatalanPath>) {
        if steps.len() == 2 * n {
            out.push(CatalanPath { steps: steps.clone() });
            return;
        }
        if ups < n {
            steps.push(Step::N);
            go(n, steps, ups + 1, out);
            steps.pop();
        }
        if steps.len() - ups < ups {
            steps.push(Step::E);
            go(n, steps, ups, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), 0, &mut out);
    out
}

/// `p = a N b^r E` with `a ∈ ENNE`, `b ∈ NEEN`.
pub fn decompose_enne(p: &CatalanPath) -> Result<(CatalanPath, CatalanPath)> {
    if !p.is_enne() {
        return Err(Error::NotInClass { path: p.to_string(), class: "ENNE" });
    }
    let (a, br) = p.split_last_return().ok_or_else(|| Error::NotInClass {
        path: p.to_string(),
        class: "ENNE of positive length",
    })?;
    Ok((a, br.reverse()))
}

/// `p = a^r N b E` with `a ∈ ENNE`, `b ∈ NEEN`.
pub fn decompose_neen(p: &CatalanPath) -> Result<(CatalanPath, CatalanPath)> {
    if !p.is_neen() {
        return Err(Error::NotInClass { path: p.to_string(), class: "NEEN" });
    }
    let (ar, b) = p.split_last_return().ok_or_else(|| Error::NotInClass {
        path: p.to_string(),
        class: "NEEN of positive length",
    })?;
    Ok((ar.reverse(), b))
}

pub fn assemble_enne(a: &CatalanPath, b: &CatalanPath) -> CatalanPath {
    CatalanPath::wrap(a, &b.reverse())
}

pub fn assemble_neen(a: &CatalanPath, b: &CatalanPath) -> CatalanPath {
    CatalanPath::wrap(&a.reverse(), b)
}

/// `H : ENNE_{n+1} → ET_n`.
pub fn map_h(p: &CatalanPath) -> Result<Perm> {
    if !p.is_enne() {
        return Err(Error::NotInClass { path: p.to_string(), class: "ENNE" });
    }
    Ok(h_unchecked(p))
}

/// `J : NEEN_n → OT_n`.
pub fn map_j(p: &CatalanPath) -> Result<Perm> {
    if !p.is_neen() {
        return Err(Error::NotInClass { path: p.to_string(), class: "NEEN" });
    }
    Ok(j_unchecked(p))
}

fn h_unchecked(p: &CatalanPath) -> Perm {
    let Some((a, br)) = p.split_last_return() else {
        return Perm::anti();
    };
    let b = br.reverse();
    Perm::skew_sum_all([&j_unchecked(&b).complement(), &Perm::one(), &h_unchecked(&a)])
        .expect("c(J(b)) ⊖ 1 absorbs @")
}

fn j_unchecked(p: &CatalanPath) -> Perm {
    let Some((ar, b)) = p.split_last_return() else {
        return Perm::empty();
    };
    let a = ar.reverse();
    bracket(&h_unchecked(&a))
        .and_then(|block| block.skew_sum(&j_unchecked(&b)))
        .expect("J(b) is never @")
}

/// `F : ET_n → ENNE_{n+1}`, the inverse of `H`.
pub fn map_f(alpha: &Perm) -> Result<CatalanPath> {
    if !is_even_thread(alpha) {
        return Err(Error::NotEvenThread(alpha.to_string()));
    }
    Ok(f_unchecked(alpha))
}

/// `G : OT_n → NEEN_n`, the inverse of `J`.
pub fn map_g(beta: &Perm) -> Result<CatalanPath> {
    if !is_odd_thread(beta) {
        return Err(Error::NotOddThread(beta.to_string()));
    }
    Ok(g_unchecked(beta))
}

fn f_unchecked(alpha: &Perm) -> CatalanPath {
    if alpha.is_anti() {
        return CatalanPath::empty();
    }
    let (b1, a1) = leftmost_decomposition(alpha).expect("parts of threads are threads");
    CatalanPath::wrap(&f_unchecked(&a1), &g_unchecked(&b1).reverse())
}

fn g_unchecked(beta: &Perm) -> CatalanPath {
    if beta.is_empty() {
        return CatalanPath::empty();
    }
    let (a2, b2) = odd_decompose(beta).expect("parts of threads are threads");
    CatalanPath::wrap(&f_unchecked(&a2).reverse(), &g_unchecked(&b2))
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C_n = binom(2n, n) / (n + 1)`, for `n ≤ 60`.
pub fn catalan_number(n: usize) -> u128 {
    (0..n as u128).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

/// Number of Catalan paths with `n` up steps and exactly `k` occurrences of
/// `NEEN`:
/// `a(n,k) = (1/n) C(n,k) Σ_{j=k}^{⌊(n−1)/2⌋} (−1)^{j−k} C(n−k, j−k) C(2n−3j, n−j+1)`.
pub fn count_neen_formula(n: u64, k: u64) -> BigUint {
    assert!(n >= 1, "the formula needs n ≥ 1");
    let mut sum = BigInt::zero();
    for j in k..=(n - 1) / 2 {
        let term = BigInt::from(binomial(n - k, j - k) * binomial(2 * n - 3 * j, n - j + 1));
        if (j - k) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let total = BigInt::from(binomial(n, k)) * sum;
    let n = BigInt::from(n);
    assert!((&total % &n).is_zero(), "n divides the sum");
    let value = total / n;
    assert!(!value.is_negative());
    value.magnitude().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::threads::enumerate_threads;
    use std::collections::BTreeSet;

    fn path(s: &str) -> CatalanPath {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(path("NENNEE").reverse(), path("NNEENE"));
        assert_eq!(CatalanPath::empty().reverse(), CatalanPath::empty());
        assert_eq!(path("NE").reverse(), path("NE"));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(path("nenE").to_string(), "NENE");
        assert_eq!(path("").to_string(), "");
        assert!("EN".parse::<CatalanPath>().is_err());
        assert!("NNE".parse::<CatalanPath>().is_err());
        assert!("NX".parse::<CatalanPath>().is_err());
    }

    #[test]
    fn class_examples() {
        assert!(!path("NNEENE").is_enne());
        assert!(path("NNNEEE").is_enne());
        assert!(!path("NNEENE").is_neen());
        assert!(!path("NENNEENE").is_neen());
        assert!(path("NNNEEE").is_neen());
        assert_eq!(path("NNEENNEE").neen_occurrences(), 1);
        assert_eq!(path("NNNEENEENE").neen_occurrences(), 2);
    }

    #[test]
    fn class_counts() {
        let neen = [1usize, 1, 2, 4, 9, 23];
        for (n, &c) in neen.iter().enumerate() {
            assert_eq!(enumerate_neen(n).len(), c);
        }
        let et = [1usize, 1, 1, 2, 6, 17, 46, 128];
        for (i, &c) in et.iter().enumerate() {
            assert_eq!(enumerate_enne(i).len(), c);
        }
        for n in 0..=8isize {
            let t = enumerate_threads(n);
            assert_eq!(enumerate_enne(n as usize + 1).len(), t.even_threads.len());
            assert_eq!(enumerate_neen(n as usize).len(), t.odd_threads.len());
        }
    }

    #[test]
    fn pruned_enumeration_matches_filtering() {
        for n in 0..=9 {
            let all = enumerate_catalan(n);
            let enne: Vec<_> = all.iter().filter(|q| q.is_enne()).cloned().collect();
            let neen: Vec<_> = all.iter().filter(|q| q.is_neen()).cloned().collect();
            assert_eq!(enumerate_enne(n), enne);
            assert_eq!(enumerate_neen(n), neen);
        }
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(decompose_enne(&path("NENNNEEE")).unwrap(), (path("NE"), path("NNEE")));
        assert_eq!(decompose_enne(&path("NNNEEE")).unwrap(), (path(""), path("NNEE")));
        assert_eq!(decompose_neen(&path("NE")).unwrap(), (path(""), path("")));
        assert_eq!(decompose_neen(&path("NENENE")).unwrap(), (path("NENE"), path("")));
        assert!(matches!(decompose_enne(&path("NNEE")), Err(Error::NotInClass { .. })));
        assert!(decompose_enne(&path("")).is_err());
    }

    #[test]
    fn decompositions_reassemble() {
        for n in 1..=10 {
            for q in enumerate_enne(n) {
                let (a, b) = decompose_enne(&q).unwrap();
                assert!(a.is_enne() && b.is_neen(), "{q}");
                assert!(!b.steps().ends_with(&[Step::N, Step::E]), "{q}");
                assert_eq!(assemble_enne(&a, &b), q);
            }
            for q in enumerate_neen(n) {
                let (a, b) = decompose_neen(&q).unwrap();
                assert!(a.is_enne() && b.is_neen(), "{q}");
                assert_eq!(assemble_neen(&a, &b), q);
            }
        }
    }

    #[test]
    fn catalan_numbers() {
        let first = [1u128, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in first.iter().enumerate() {
            assert_eq!(catalan_number(n), c);
            assert_eq!(enumerate_catalan(n).len() as u128, c);
        }
    }

    #[test]
    fn value_table() {
        let h = [
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
        for (a, v) in h {
            assert_eq!(map_h(&path(a)).unwrap(), p(v), "H({a})");
            assert_eq!(map_f(&p(v)).unwrap(), path(a), "F({v})");
        }
        let j = [
            ("", "e"),
            ("NE", "1"),
            ("NENE", "12"),
            ("NNEE", "21"),
            ("NNNEEE", "321"),
            ("NNENEE", "312"),
            ("NENNEE", "231"),
            ("NENENE", "123"),
        ];
        for (a, v) in j {
            assert_eq!(map_j(&path(a)).unwrap(), p(v), "J({a})");
            assert_eq!(map_g(&p(v)).unwrap(), path(a), "G({v})");
        }
    }

    #[test]
    fn maps_are_mutually_inverse_bijections() {
        for n in 0..=8usize {
            let t = enumerate_threads(n as isize);
            let hs: BTreeSet<Perm> = enumerate_enne(n + 1)
                .iter()
                .map(|q| {
                    let v = map_h(q).unwrap();
                    assert_eq!(&map_f(&v).unwrap(), q);
                    v
                })
                .collect();
            assert_eq!(hs, t.even_threads);
            let js: BTreeSet<Perm> = enumerate_neen(n)
                .iter()
                .map(|q| {
                    let v = map_j(q).unwrap();
                    assert_eq!(&map_g(&v).unwrap(), q);
                    v
                })
                .collect();
            assert_eq!(js, t.odd_threads);
            for a in &t.even_threads {
                assert_eq!(&map_h(&map_f(a).unwrap()).unwrap(), a);
            }
            for b in &t.odd_threads {
                assert_eq!(&map_j(&map_g(b).unwrap()).unwrap(), b);
            }
        }
    }

    #[test]
    fn maps_reject_wrong_inputs() {
        assert!(matches!(map_h(&path("NNEE")), Err(Error::NotInClass { .. })));
        assert!(matches!(map_j(&path("NNEENE")), Err(Error::NotInClass { .. })));
        assert!(matches!(map_f(&p("3412")), Err(Error::NotEvenThread(_))));
        assert!(matches!(map_g(&p("42315")), Err(Error::NotOddThread(_))));
    }

    #[test]
    fn formula_examples() {
        let first: Vec<BigUint> = (1..=5).map(|n| count_neen_formula(n, 0)).collect();
        assert_eq!(first, [1u32, 2, 4, 9, 23].map(BigUint::from));
    }

    #[test]
    fn formula_matches_occurrence_counts() {
        for n in 1..=12usize {
            let mut by_k = vec![0usize; n + 1];
            for q in enumerate_catalan(n) {
                by_k[q.neen_occurrences()] += 1;
            }
            for (k, &c) in by_k.iter().enumerate() {
                assert_eq!(count_neen_formula(n as u64, k as u64), BigUint::from(c), "a({n},{k})");
            }
            assert_eq!(count_neen_formula(n as u64, 0), BigUint::from(enumerate_neen(n).len()));
        }
    }
}
