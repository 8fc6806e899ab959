//! Vincular patterns of length four with the middle pair bonded, and the
//! classical pattern 3412.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// A length-4 pattern whose entries in positions 2 and 3 must be adjacent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VincularPattern([u8; 4]);

impl VincularPattern {
    /// `3-14-2`
    pub const P3_14_2: VincularPattern = VincularPattern([3, 1, 4, 2]);
    /// `2-41-3`
    pub const P2_41_3: VincularPattern = VincularPattern([2, 4, 1, 3]);
    /// `3-41-2`
    pub const P3_41_2: VincularPattern = VincularPattern([3, 4, 1, 2]);
    /// `2-14-3`
    pub const P2_14_3: VincularPattern = VincularPattern([2, 1, 4, 3]);

    pub const ALL: [VincularPattern; 4] =
        [Self::P3_14_2, Self::P2_41_3, Self::P3_41_2, Self::P2_14_3];

    pub fn pattern(&self) -> [u8; 4] {
        self.0
    }

    fn matches(&self, vals: [usize; 4]) -> bool {
        (0..4).all(|a| (0..4).all(|b| (vals[a] < vals[b]) == (self.0[a] < self.0[b])))
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a}-{b}{c}-{d}")
    }
}

impl FromStr for VincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VincularPattern::ALL
            .into_iter()
            .find(|p| p.to_string() == s.trim())
            .ok_or_else(|| Error::UnknownPattern(s.to_string()))
    }
}

/// First occurrence `(p(i), p(j), p(j+1), p(k))` with `i < j` and `j+1 < k ≤ n`.
pub fn vincular_witness(p: &Perm, pat: VincularPattern) -> Option<[usize; 4]> {
    let v = p.entries();
    let n = v.len();
    for j in 1..n.saturating_sub(2) {
        for i in 0..j {
            for k in j + 2..n {
                let vals = [v[i], v[j], v[j + 1], v[k]];
                if pat.matches(vals) {
                    return Some(vals);
                }
            }
        }
    }
    None
}

pub fn contains_vincular(p: &Perm, pat: VincularPattern) -> bool {
    vincular_witness(p, pat).is_some()
}

/// Avoids `3-14-2` and `2-41-3`.
pub fn is_reduced_baxter(p: &Perm) -> bool {
    !contains_vincular(p, VincularPattern::P3_14_2) && !contains_vincular(p, VincularPattern::P2_41_3)
}

/// Avoids `3-41-2` and `2-14-3`.
pub fn is_anti_baxter(p: &Perm) -> bool {
    !contains_vincular(p, VincularPattern::P3_41_2) && !contains_vincular(p, VincularPattern::P2_14_3)
}

pub fn contains_3412(p: &Perm) -> bool {
    let v = p.entries();
    let n = v.len();
    // v[a] v[b] v[c] v[d] with v[c] < v[d] < v[a] < v[b]
    for a in 0..n {
        for b in a + 1..n {
            if v[b] < v[a] {
                continue;
            }
            for c in b + 1..n {
                if v[c] > v[a] {
                    continue;
                }
                if v[c + 1..].iter().any(|&d| d > v[c] && d < v[a]) {
                    return true;
                }
            }
        }
    }
    false
}

pub fn avoids_3412(p: &Perm) -> bool {
    !contains_3412(p)
}

/// A pattern accepted on the command line: one of the four vincular patterns
/// or the classical `3412`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedPattern {
    Vincular(VincularPattern),
    Classical3412,
}

impl NamedPattern {
    pub fn is_contained_in(&self, p: &Perm) -> bool {
        match self {
            NamedPattern::Vincular(v) => contains_vincular(p, *v),
            NamedPattern::Classical3412 => contains_3412(p),
        }
    }
}

impl FromStr for NamedPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "3412" {
            return Ok(NamedPattern::Classical3412);
        }
        s.parse().map(NamedPattern::Vincular)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn paper_examples() {
        assert_eq!(vincular_witness(&p("4613752"), VincularPattern::P3_14_2), Some([6, 3, 7, 5]));
        assert!(!contains_vincular(&p("2174653"), VincularPattern::P3_14_2));
        assert!(!contains_vincular(&p("2174653"), VincularPattern::P2_41_3));
        for pat in VincularPattern::ALL {
            assert!(!contains_vincular(&p("1234"), pat));
        }
        assert!(is_reduced_baxter(&p("51324")));
        assert!(!is_reduced_baxter(&p("4613752")));
        assert!(is_anti_baxter(&p("4123")));
        assert!(is_reduced_baxter(&Perm::anti()) && is_anti_baxter(&Perm::anti()));
        assert!(is_reduced_baxter(&Perm::empty()) && is_anti_baxter(&Perm::empty()));
    }

    #[test]
    fn occurrence_may_end_at_the_last_position() {
        // 2413 is the pattern 2-41-3 itself, with k = n.
        assert!(contains_vincular(&p("2413"), VincularPattern::P2_41_3));
        assert!(contains_vincular(&p("3142"), VincularPattern::P3_14_2));
    }

    #[test]
    fn classical_3412() {
        assert!(contains_3412(&p("3412")));
        assert!(avoids_3412(&p("4321")));
        assert!(contains_3412(&p("563412")));
        assert!(avoids_3412(&Perm::empty()));
    }

    /// Scan of every 4-subsequence, independent of the matcher above.
    fn contains_3412_brute(v: &[usize]) -> bool {
        (0..v.len()).combinations(4).any(|ix| {
            let s: Vec<usize> = ix.iter().map(|&i| v[i]).collect();
            Perm::standardize(&s) == p("3412")
        })
    }

    #[test]
    fn classical_matcher_agrees_with_subsequence_scan() {
        for n in 0..=7 {
            for v in (1..=n).permutations(n) {
                assert_eq!(contains_3412(&Perm::new(v.clone()).unwrap()), contains_3412_brute(&v));
            }
        }
    }

    /// The raw index conditions, written out separately for each pattern.
    fn anti_baxter_raw(v: &[usize]) -> bool {
        let n = v.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 2..n {
                    let (a, b, c, d) = (v[i], v[j], v[j + 1], v[k]);
                    if c < d && d < a && a < b {
                        return false;
                    }
                    if b < a && a < d && d < c {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn anti_baxter_matches_raw_index_scan() {
        for n in 0..=8 {
            for v in (1..=n).permutations(n) {
                let raw = anti_baxter_raw(&v);
                assert_eq!(is_anti_baxter(&Perm::new(v).unwrap()), raw);
            }
        }
    }

    #[test]
    fn reduced_baxter_counts_are_baxter_numbers() {
        let baxter = [1usize, 1, 2, 6, 22, 92, 422, 2074];
        for (n, &expected) in baxter.iter().enumerate() {
            let count = (1..=n)
                .permutations(n)
                .filter(|v| is_reduced_baxter(&Perm::from_vec_unchecked(v.clone())))
                .count();
            assert_eq!(count, expected, "n = {n}");
        }
    }

    #[test]
    fn both_classes_are_closed_under_complement() {
        for n in 0..=7 {
            for v in (1..=n).permutations(n) {
                let q = Perm::new(v).unwrap();
                let c = q.complement();
                assert_eq!(is_reduced_baxter(&q), is_reduced_baxter(&c));
                assert_eq!(is_anti_baxter(&q), is_anti_baxter(&c));
            }
        }
    }

    #[test]
    fn pattern_names_parse() {
        for name in ["3-14-2", "2-41-3", "3-41-2", "2-14-3"] {
            assert_eq!(name.parse::<VincularPattern>().unwrap().to_string(), name);
        }
        assert_eq!("3412".parse::<NamedPattern>().unwrap(), NamedPattern::Classical3412);
        assert!("1-23-4".parse::<NamedPattern>().is_err());
    }
}
