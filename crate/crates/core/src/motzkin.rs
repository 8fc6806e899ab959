//! Motzkin paths, peakless Motzkin paths, and Janus threads (threads that are
//! both even and odd), with the bijection `K` between them and its direct
//! description.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::baxter::bracket;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::threads::{enumerate_threads, split_odd_shape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MStep {
    U,
    L,
    D,
}

/// A Motzkin path: up, level and down steps that end at height zero and
/// never go below it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MotzkinPath {
    steps: Vec<MStep>,
}

impl MotzkinPath {
    pub fn empty() -> MotzkinPath {
        MotzkinPath::default()
    }

    pub fn new(steps: Vec<MStep>) -> Result<MotzkinPath> {
        let path = MotzkinPath { steps };
        if !is_motzkin_word(&path.steps) {
            return Err(Error::MalformedPath(path.to_string()));
        }
        Ok(path)
    }

    pub fn steps(&self) -> &[MStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// No up step immediately followed by a down step.
    pub fn is_peakless(&self) -> bool {
        !self.steps.windows(2).any(|w| w == [MStep::U, MStep::D])
    }

    fn concat(parts: &[&[MStep]]) -> MotzkinPath {
        MotzkinPath {
            steps: parts.concat(),
        }
    }
}

fn is_motzkin_word(steps: &[MStep]) -> bool {
    let mut h = 0i64;
    for s in steps {
        h += match s {
            MStep::U => 1,
            MStep::L => 0,
            MStep::D => -1,
        };
        if h < 0 {
            return false;
        }
    }
    h == 0
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                MStep::U => "U",
                MStep::L => "L",
                MStep::D => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotzkinPath({self})")
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<MotzkinPath> {
        let t = s.trim();
        if t == "∅" || t == "e" {
            return Ok(MotzkinPath::empty());
        }
        let steps = t
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(MStep::U),
                'L' => Ok(MStep::L),
                'D' => Ok(MStep::D),
                _ => Err(Error::MalformedPath(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        MotzkinPath::new(steps).map_err(|_| Error::MalformedPath(s.to_string()))
    }
}

/// `M_0 = 1`, `M_n = M_{n−1} + Σ_{k=2}^{n} M_{k−2} M_{n−k}`.
pub fn motzkin_number(n: usize) -> u128 {
    let mut m: Vec<u128> = vec![1];
    for i in 1..=n {
        let mut next = m[i - 1];
        for k in 2..=i {
            next = next
                .checked_add(m[k - 2].checked_mul(m[i - k]).expect("overflow"))
                .expect("overflow");
        }
        m.push(next);
    }
    m[n]
}

/// `a_0 = a_1 = 1`, `a_n = a_{n−1} + Σ_{k=1}^{n−2} a_k a_{n−2−k}`.
pub fn gen_catalan_a(n: usize) -> u128 {
    let mut a: Vec<u128> = vec![1, 1];
    for i in 2..=n {
        let mut next = a[i - 1];
        for k in 1..=i - 2 {
            next = next
                .checked_add(a[k].checked_mul(a[i - 2 - k]).expect("overflow"))
                .expect("overflow");
        }
        a.push(next);
    }
    a[n]
}

fn enumerate_words(n: usize, peakless: bool) -> Vec<MotzkinPath> {
    fn go(n: usize, peakless: bool, steps: &mut Vec<MStep>, h: usize, out: &mut Vec<MotzkinPath>) {
        let left = n - steps.len();
        if left == 0 {
            out.push(MotzkinPath { steps: steps.clone() });
            return;
        }
        if h + 2 <= left {
            steps.push(MStep::U);
            go(n, peakless, steps, h + 1, out);
            steps.pop();
        }
        if h < left {
            steps.push(MStep::L);
            go(n, peakless, steps, h, out);
            steps.pop();
        }
        if h > 0 && !(peakless && steps.last() == Some(&MStep::U)) {
            steps.push(MStep::D);
            go(n, peakless, steps, h - 1, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    go(n, peakless, &mut Vec::with_capacity(n), 0, &mut out);
    out.sort();
    out
}

/// All Motzkin paths of length `n`.
pub fn enumerate_motzkin(n: usize) -> Vec<MotzkinPath> {
    enumerate_words(n, false)
}

/// `UD_n`, the peakless Motzkin paths of length `n`.
pub fn enumerate_ud(n: usize) -> Vec<MotzkinPath> {
    enumerate_words(n, true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UdDecomposition {
    /// `p = L a`
    Level(MotzkinPath),
    /// `p = U a D b` with `a` nonempty
    UpDown(MotzkinPath, MotzkinPath),
}

pub fn decompose_ud(p: &MotzkinPath) -> Result<UdDecomposition> {
    if !p.is_peakless() || p.is_empty() {
        return Err(Error::NotPeakless(p.to_string()));
    }
    let s = &p.steps;
    if s[0] == MStep::L {
        return Ok(UdDecomposition::Level(MotzkinPath { steps: s[1..].to_vec() }));
    }
    let mut h = 0i64;
    for (i, st) in s.iter().enumerate() {
        h += match st {
            MStep::U => 1,
            MStep::L => 0,
            MStep::D => -1,
        };
        if h == 0 {
            return Ok(UdDecomposition::UpDown(
                MotzkinPath { steps: s[1..i].to_vec() },
                MotzkinPath { steps: s[i + 1..].to_vec() },
            ));
        }
    }
    unreachable!("Motzkin paths return to height zero")
}

/// `JT_n = ET_n ∩ OT_n`, with `JT_{−1} = {@}`.
pub fn enumerate_jt(n: isize) -> BTreeSet<Perm> {
    if n == -1 {
        return BTreeSet::from([Perm::anti()]);
    }
    let t = enumerate_threads(n);
    t.even_threads.intersection(&t.odd_threads).cloned().collect()
}

pub fn is_janus(p: &Perm) -> bool {
    p.is_anti() || enumerate_jt(p.len()).contains(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JanusDecomposition {
    /// `γ = 1 ⊖ γ₁`
    LargestFirst(Perm),
    /// `γ = (1 ⊕ c(γ₁) ⊕ 1) ⊖ 1 ⊖ γ₂`
    Split(Perm, Perm),
}

/// Decomposes a Janus thread of positive length.
pub fn janus_decompose(gamma: &Perm) -> Result<JanusDecomposition> {
    let not_janus = || Error::NotJanus(gamma.to_string());
    if gamma.len() < 1 || !is_janus(gamma) {
        return Err(not_janus());
    }
    let d = janus_split(gamma).ok_or_else(not_janus)?;
    let parts_janus = match &d {
        JanusDecomposition::LargestFirst(g1) => is_janus(g1),
        JanusDecomposition::Split(g1, g2) => is_janus(g1) && is_janus(g2),
    };
    if !parts_janus {
        return Err(not_janus());
    }
    Ok(d)
}

fn janus_split(gamma: &Perm) -> Option<JanusDecomposition> {
    if gamma.begins_with_max() {
        return Some(JanusDecomposition::LargestFirst(Perm::standardize(&gamma.entries()[1..])));
    }
    let (g1, beta) = split_odd_shape(gamma)?;
    let g2 = match beta.entries() {
        [] => Perm::anti(),
        [first, rest @ ..] if *first == beta.size() => Perm::standardize(rest),
        _ => return None,
    };
    Some(JanusDecomposition::Split(g1, g2))
}

pub fn assemble_janus(d: &JanusDecomposition) -> Result<Perm> {
    let one = Perm::one();
    match d {
        JanusDecomposition::LargestFirst(g1) => one.skew_sum(g1),
        JanusDecomposition::Split(g1, g2) => Perm::skew_sum_all([&bracket(g1)?, &one, g2]),
    }
}

/// The recursive bijection `K : JT_n → UD_{n+1}`.
pub fn map_k(gamma: &Perm) -> Result<MotzkinPath> {
    if !is_janus(gamma) {
        return Err(Error::NotJanus(gamma.to_string()));
    }
    Ok(k_unchecked(gamma))
}

fn k_unchecked(gamma: &Perm) -> MotzkinPath {
    if gamma.is_anti() {
        return MotzkinPath::empty();
    }
    if gamma.is_empty() {
        return MotzkinPath { steps: vec![MStep::L] };
    }
    match janus_split(gamma).expect("Janus threads decompose") {
        JanusDecomposition::LargestFirst(g1) => MotzkinPath::concat(&[&[MStep::L], k_unchecked(&g1).steps()]),
        JanusDecomposition::Split(g1, g2) => MotzkinPath::concat(&[
            &[MStep::U],
            k_unchecked(&g1).steps(),
            &[MStep::D],
            k_unchecked(&g2).steps(),
        ]),
    }
}

/// The direct description of `K`: frame `γ` as `n+1, γ, 0`, read each
/// adjacent pair as `L` (values differ by one), `U` (ascent) or `D`
/// (descent), then swap the odd-numbered letters among the `U`s and `D`s.
pub fn map_k_direct(gamma: &Perm) -> Result<MotzkinPath> {
    if !is_janus(gamma) {
        return Err(Error::NotJanus(gamma.to_string()));
    }
    Ok(k_direct_unchecked(gamma))
}

fn k_direct_unchecked(gamma: &Perm) -> MotzkinPath {
    if gamma.is_anti() {
        return MotzkinPath::empty();
    }
    let n = gamma.size();
    let framed: Vec<usize> = std::iter::once(n + 1)
        .chain(gamma.entries().iter().copied())
        .chain(std::iter::once(0))
        .collect();
    let mut seen = 0;
    let steps = framed
        .windows(2)
        .map(|w| {
            if w[0].abs_diff(w[1]) == 1 {
                return MStep::L;
            }
            let raw = if w[0] < w[1] { MStep::U } else { MStep::D };
            seen += 1;
            match (raw, seen % 2 == 1) {
                (MStep::U, true) => MStep::D,
                (MStep::D, true) => MStep::U,
                (s, _) => s,
            }
        })
        .collect();
    MotzkinPath { steps }
}

/// The unflipped word from the first two steps of [`map_k_direct`].
pub fn k_direct_raw_word(gamma: &Perm) -> String {
    if gamma.is_anti() {
        return String::new();
    }
    let n = gamma.size();
    let framed: Vec<usize> = std::iter::once(n + 1)
        .chain(gamma.entries().iter().copied())
        .chain(std::iter::once(0))
        .collect();
    framed
        .windows(2)
        .map(|w| match w[0].abs_diff(w[1]) {
            1 => 'L',
            _ if w[0] < w[1] => 'U',
            _ => 'D',
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn m(s: &str) -> MotzkinPath {
        s.parse().unwrap()
    }

    #[test]
    fn motzkin_numbers() {
        assert_eq!(motzkin_number(0), 1);
        assert_eq!(motzkin_number(3), 4);
        for n in 0..=12 {
            assert_eq!(motzkin_number(n), enumerate_motzkin(n).len() as u128, "n = {n}");
        }
    }

    #[test]
    fn peakless_counts() {
        let table = [1u128, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423];
        for (n, &c) in table.iter().enumerate() {
            assert_eq!(enumerate_ud(n).len() as u128, c);
        }
        assert_eq!(gen_catalan_a(2), 1);
        assert_eq!(gen_catalan_a(4), 4);
        assert_eq!(gen_catalan_a(10), 423);
        for n in 0..=14 {
            let filtered = enumerate_motzkin(n).into_iter().filter(|q| q.is_peakless()).count();
            assert_eq!(gen_catalan_a(n), filtered as u128);
            assert_eq!(enumerate_ud(n).len(), filtered);
        }
    }

    #[test]
    fn ud5() {
        let ud5: BTreeSet<MotzkinPath> = enumerate_ud(5).into_iter().collect();
        let expected: BTreeSet<MotzkinPath> =
            ["LLLLL", "LLULD", "LULDL", "ULDLL", "LULLD", "ULLDL", "ULLLD", "UULDD"]
                .iter()
                .map(|s| m(s))
                .collect();
        assert_eq!(ud5, expected);
    }

    #[test]
    fn parse_rejects_non_motzkin_words() {
        assert!("DU".parse::<MotzkinPath>().is_err());
        assert!("UL".parse::<MotzkinPath>().is_err());
        assert!("ULX".parse::<MotzkinPath>().is_err());
        assert_eq!(m("uld").to_string(), "ULD");
    }

    #[test]
    fn ud_decomposition_examples() {
        assert_eq!(decompose_ud(&m("LLULD")).unwrap(), UdDecomposition::Level(m("LULD")));
        assert_eq!(decompose_ud(&m("ULLDL")).unwrap(), UdDecomposition::UpDown(m("LL"), m("L")));
        assert_eq!(decompose_ud(&m("L")).unwrap(), UdDecomposition::Level(MotzkinPath::empty()));
        assert!(matches!(decompose_ud(&m("UDL")), Err(Error::NotPeakless(_))));
        assert!(decompose_ud(&MotzkinPath::empty()).is_err());
    }

    #[test]
    fn ud_decomposition_components() {
        for n in 1..=12 {
            for q in enumerate_ud(n) {
                let rebuilt = match decompose_ud(&q).unwrap() {
                    UdDecomposition::Level(a) => {
                        assert!(a.is_peakless());
                        MotzkinPath::concat(&[&[MStep::L], a.steps()])
                    }
                    UdDecomposition::UpDown(a, b) => {
                        assert!(!a.is_empty() && a.is_peakless() && b.is_peakless());
                        MotzkinPath::concat(&[&[MStep::U], a.steps(), &[MStep::D], b.steps()])
                    }
                };
                assert_eq!(rebuilt, q);
            }
        }
    }

    #[test]
    fn janus_counts() {
        let table = [1usize, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423];
        for (i, &c) in table.iter().enumerate() {
            assert_eq!(enumerate_jt(i as isize - 1).len(), c, "n = {}", i as isize - 1);
        }
        assert!(!is_janus(&p("3412")));
        assert!(is_janus(&p("1")));
        assert!(is_janus(&Perm::anti()));
        assert!(!is_janus(&p("213")));
    }

    #[test]
    fn janus_decomposition_examples() {
        assert_eq!(janus_decompose(&p("21")).unwrap(), JanusDecomposition::LargestFirst(p("1")));
        assert_eq!(
            janus_decompose(&p("576894312")).unwrap(),
            JanusDecomposition::Split(p("231"), p("312"))
        );
        assert_eq!(
            janus_decompose(&p("12")).unwrap(),
            JanusDecomposition::Split(Perm::empty(), Perm::anti())
        );
        assert!(matches!(janus_decompose(&p("213")), Err(Error::NotJanus(_))));
        assert!(matches!(janus_decompose(&p("3412")), Err(Error::NotJanus(_))));
    }

    #[test]
    fn janus_decompositions_reassemble_into_janus_parts() {
        for n in 1..=9 {
            for g in enumerate_jt(n) {
                let d = janus_decompose(&g).unwrap();
                assert_eq!(assemble_janus(&d).unwrap(), g);
                if let JanusDecomposition::Split(g1, _) = &d {
                    assert!(g1.len() >= 0);
                    assert!(!g.begins_with_max());
                }
            }
        }
    }

    #[test]
    fn k_examples() {
        assert_eq!(map_k(&Perm::anti()).unwrap(), MotzkinPath::empty());
        assert_eq!(map_k(&Perm::empty()).unwrap(), m("L"));
        assert_eq!(map_k(&p("1")).unwrap(), m("LL"));
        assert_eq!(map_k(&p("12")).unwrap(), m("ULD"));
        assert_eq!(k_direct_raw_word(&p("576894312")), "DULULDLDLD");
        assert_eq!(map_k_direct(&p("576894312")).unwrap(), m("UULDLDLULD"));
        assert_eq!(map_k(&p("576894312")).unwrap(), m("UULDLDLULD"));
        assert_eq!(map_k_direct(&Perm::empty()).unwrap(), m("L"));
        assert_eq!(map_k_direct(&p("1")).unwrap(), m("LL"));
        assert!(matches!(map_k(&p("3412")), Err(Error::NotJanus(_))));
    }

    #[test]
    fn k_is_a_bijection_and_equals_direct_map() {
        for n in -1..=9isize {
            let jt = enumerate_jt(n);
            let mut image = BTreeSet::new();
            for g in &jt {
                let k = map_k(g).unwrap();
                assert_eq!(map_k_direct(g).unwrap(), k, "{g}");
                assert_eq!(k.len() as isize, n + 1);
                assert!(is_motzkin_word(k.steps()) && k.is_peakless(), "{g}");
                image.insert(k);
            }
            assert_eq!(image.len(), jt.len());
            let ud: BTreeSet<MotzkinPath> = enumerate_ud((n + 1) as usize).into_iter().collect();
            assert_eq!(image, ud);
        }
    }
}
