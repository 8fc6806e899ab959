//! Domino tilings of the Aztec diamond, their pair of alternating-sign
//! matrices, and the complete Baxter permutation read off a tiling whose
//! matrices are both permutation matrices.
//!
//! Cells are addressed `(row, col)` in the upright diamond: row 0 is the top
//! row of two squares, and a diamond of order `n` spans rows and columns
//! `0..2n`. Lattice corners are `(row, col)` in `0..=2n`. The matrices are read
//! from the diamond turned a quarter-turn on its side, so that the large
//! matrix's first row is the topmost row of black corners.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::baxter::interleave;
use crate::error::{Error, Result};
use crate::patterns::is_reduced_baxter;
use crate::perm::Perm;

pub const MAX_ORDER: usize = 5;

pub type Cell = (usize, usize);

fn in_diamond(n: usize, r: i64, c: i64) -> bool {
    let n = n as i64;
    if r < 0 || c < 0 || r >= 2 * n || c >= 2 * n {
        return false;
    }
    (2 * c - 2 * n + 1).abs() + (2 * n - 2 * r - 1).abs() <= 2 * n
}

/// Two edge-adjacent cells, the first one earlier in row-major order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Domino(pub Cell, pub Cell);

impl Domino {
    pub fn new(a: Cell, b: Cell) -> Domino {
        if a <= b {
            Domino(a, b)
        } else {
            Domino(b, a)
        }
    }

    pub fn is_horizontal(&self) -> bool {
        self.0 .0 == self.1 .0
    }

    fn is_adjacent(&self) -> bool {
        let (a, b) = (self.0, self.1);
        (a.0 == b.0 && a.1 + 1 == b.1) || (a.1 == b.1 && a.0 + 1 == b.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DominoTiling {
    order: usize,
    dominos: Vec<Domino>,
}

impl DominoTiling {
    /// Validates that the dominos cover every cell of the order-`order`
    /// diamond exactly once.
    pub fn new(order: usize, mut dominos: Vec<Domino>) -> Result<DominoTiling> {
        let side = 2 * order;
        let mut seen = vec![false; side * side];
        for d in &dominos {
            if !d.is_adjacent() {
                return Err(Error::MalformedTiling(format!("{d:?} is not a domino")));
            }
            for (r, c) in [d.0, d.1] {
                if !in_diamond(order, r as i64, c as i64) {
                    return Err(Error::MalformedTiling(format!("cell {r},{c} is outside the diamond")));
                }
                if std::mem::replace(&mut seen[r * side + c], true) {
                    return Err(Error::MalformedTiling(format!("cell {r},{c} is covered twice")));
                }
            }
        }
        if dominos.len() != order * (order + 1) {
            return Err(Error::MalformedTiling(format!(
                "{} dominos do not cover the order-{order} diamond",
                dominos.len()
            )));
        }
        dominos.sort();
        Ok(DominoTiling { order, dominos })
    }

    /// Every row filled left to right with horizontal dominos.
    pub fn all_horizontal(order: usize) -> DominoTiling {
        let mut dominos = Vec::new();
        for r in 0..2 * order {
            let cols: Vec<usize> = (0..2 * order)
                .filter(|&c| in_diamond(order, r as i64, c as i64))
                .collect();
            for pair in cols.chunks(2) {
                dominos.push(Domino((r, pair[0]), (r, pair[1])));
            }
        }
        DominoTiling { order, dominos }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dominos(&self) -> &[Domino] {
        &self.dominos
    }

    fn labels(&self) -> Vec<Option<usize>> {
        let side = 2 * self.order;
        let mut lab = vec![None; side * side];
        for (k, d) in self.dominos.iter().enumerate() {
            lab[d.0 .0 * side + d.0 .1] = Some(k);
            lab[d.1 .0 * side + d.1 .1] = Some(k);
        }
        lab
    }

    /// Degree of a lattice corner in the tiling graph. A unit segment is an
    /// edge unless both of its sides lie in the same domino; every cell
    /// outside the diamond counts as its own piece.
    fn corner_degree(&self, lab: &[Option<usize>], row: usize, col: usize) -> usize {
        let n = self.order;
        let side = 2 * n;
        let piece = |r: i64, c: i64| -> Result<usize, (i64, i64)> {
            if in_diamond(n, r, c) {
                Ok(lab[r as usize * side + c as usize].expect("tiling covers the diamond"))
            } else {
                Err((r, c))
            }
        };
        let (r, c) = (row as i64, col as i64);
        let nw = piece(r - 1, c - 1);
        let ne = piece(r - 1, c);
        let sw = piece(r, c - 1);
        let se = piece(r, c);
        [(nw, ne), (sw, se), (nw, sw), (ne, se)]
            .iter()
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Large and small alternating-sign matrices.
    pub fn asm_pair(&self) -> (Asm, Asm) {
        let n = self.order;
        let lab = self.labels();
        let mut large = vec![0i8; (n + 1) * (n + 1)];
        let mut small = vec![0i8; n * n];
        for row in 0..=2 * n {
            for col in 0..=2 * n {
                let x = col as i64 - n as i64;
                let y = n as i64 - row as i64;
                if x.abs() + y.abs() > n as i64 {
                    continue;
                }
                // position in the combined (2n+1)×(2n+1) grid
                let gr = (n + row - col) as i64;
                let gc = (col + row) as i64 - n as i64;
                let (gr, gc) = (gr as usize, gc as usize);
                let deg = self.corner_degree(&lab, row, col);
                let label = match deg {
                    4 => 1,
                    3 => 0,
                    2 => -1,
                    _ => unreachable!("corner of degree {deg}"),
                };
                if gr % 2 == 0 {
                    large[gr / 2 * (n + 1) + gc / 2] = label;
                } else {
                    small[gr / 2 * n + gc / 2] = -label;
                }
            }
        }
        (
            Asm { size: n + 1, entries: large },
            Asm { size: n, entries: small },
        )
    }
}

pub fn lasm(t: &DominoTiling) -> Asm {
    t.asm_pair().0
}

pub fn sasm(t: &DominoTiling) -> Asm {
    t.asm_pair().1
}

impl fmt::Display for DominoTiling {
    /// One domino per line, `r,c r,c`, in scan order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, Domino(a, b)) in self.dominos.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{},{} {},{}", a.0, a.1, b.0, b.1)?;
        }
        Ok(())
    }
}

impl FromStr for DominoTiling {
    type Err = Error;

    fn from_str(s: &str) -> Result<DominoTiling> {
        let bad = || Error::MalformedTiling(s.to_string());
        let cell = |t: &str| -> Result<Cell> {
            let (r, c) = t.split_once(',').ok_or_else(bad)?;
            Ok((r.trim().parse().map_err(|_| bad())?, c.trim().parse().map_err(|_| bad())?))
        };
        let mut dominos = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let mut parts = line.split_whitespace();
            let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(bad());
            };
            dominos.push(Domino::new(cell(a)?, cell(b)?));
        }
        let order = (1..=dominos.len()).find(|&n| n * (n + 1) >= dominos.len()).ok_or_else(bad)?;
        DominoTiling::new(order, dominos)
    }
}

/// Square matrix over `{−1, 0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Asm {
    size: usize,
    entries: Vec<i8>,
}

impl Asm {
    /// `None` unless the rows form a square matrix over `{−1, 0, 1}`. The
    /// alternating condition is checked separately by [`Asm::is_valid`].
    pub fn from_rows(rows: &[Vec<i8>]) -> Option<Asm> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return None;
        }
        let entries: Vec<i8> = rows.concat();
        entries
            .iter()
            .all(|v| (-1..=1).contains(v))
            .then_some(Asm { size, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.size + col]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.size.max(1)).map(<[i8]>::to_vec).collect()
    }

    /// Nonzero entries of every row and column alternate in sign, starting
    /// and ending with `1`.
    pub fn is_valid(&self) -> bool {
        let line_ok = |vals: &mut dyn Iterator<Item = i8>| {
            let mut sum = 0;
            for v in vals.filter(|&v| v != 0) {
                sum += v;
                if sum != 0 && sum != 1 {
                    return false;
                }
            }
            sum == 1
        };
        let m = self.size;
        (0..m).all(|r| line_ok(&mut (0..m).map(|c| self.get(r, c))))
            && (0..m).all(|c| line_ok(&mut (0..m).map(|r| self.get(r, c))))
    }

    /// The permutation `p` with `p(r)` the column of the `1` in row `r`, when
    /// the matrix is a permutation matrix.
    pub fn permutation(&self) -> Option<Perm> {
        let m = self.size;
        let mut p = Vec::with_capacity(m);
        for r in 0..m {
            let row = &self.entries[r * m..(r + 1) * m];
            if row.iter().any(|&v| v < 0) || row.iter().filter(|&&v| v == 1).count() != 1 {
                return None;
            }
            p.push(row.iter().position(|&v| v == 1).unwrap() + 1);
        }
        Perm::new(p).ok()
    }

    pub fn is_permutation_matrix(&self) -> bool {
        self.permutation().is_some()
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows().iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderTooLarge { order: n, max: MAX_ORDER })
    }
}

/// All tilings of the order-`n` diamond, ordered by their domino lists.
pub fn enumerate_tilings(n: usize) -> Result<Vec<DominoTiling>> {
    check_order(n)?;
    let side = 2 * n;
    let scan: Vec<Cell> = (0..side)
        .flat_map(|r| (0..side).map(move |c| (r, c)))
        .filter(|&(r, c)| in_diamond(n, r as i64, c as i64))
        .collect();

    fn placements(n: usize, used: &[bool], (r, c): Cell) -> Vec<Domino> {
        let side = 2 * n;
        [(r, c + 1), (r + 1, c)]
            .into_iter()
            .filter(|&(r2, c2)| in_diamond(n, r2 as i64, c2 as i64) && !used[r2 * side + c2])
            .map(|b| Domino((r, c), b))
            .collect()
    }

    fn rec(
        n: usize,
        scan: &[Cell],
        mut k: usize,
        used: &mut [bool],
        placed: &mut Vec<Domino>,
        out: &mut Vec<DominoTiling>,
    ) {
        let side = 2 * n;
        while k < scan.len() && used[scan[k].0 * side + scan[k].1] {
            k += 1;
        }
        if k == scan.len() {
            out.push(DominoTiling { order: n, dominos: placed.clone() });
            return;
        }
        for d in placements(n, used, scan[k]) {
            let (a, b) = (d.0 .0 * side + d.0 .1, d.1 .0 * side + d.1 .1);
            used[a] = true;
            used[b] = true;
            placed.push(d);
            rec(n, scan, k + 1, used, placed, out);
            placed.pop();
            used[a] = false;
            used[b] = false;
        }
    }

    let first = scan[0];
    let roots = placements(n, &vec![false; side * side], first);
    let chunks: Vec<Vec<DominoTiling>> = roots
        .into_par_iter()
        .map(|d| {
            let mut used = vec![false; side * side];
            used[d.0 .0 * side + d.0 .1] = true;
            used[d.1 .0 * side + d.1 .1] = true;
            let mut placed = vec![d];
            let mut out = Vec::new();
            rec(n, &scan, 1, &mut used, &mut placed, &mut out);
            out
        })
        .collect();
    let mut all: Vec<DominoTiling> = chunks.into_iter().flatten().collect();
    for t in &mut all {
        t.dominos.sort();
    }
    all.sort_by(|a, b| a.dominos.cmp(&b.dominos));
    Ok(all)
}

/// `(large matrix is a permutation matrix, its permutation is Baxter)`.
/// The second component is `false` when the first is.
pub fn canary_check(t: &DominoTiling) -> (bool, bool) {
    match lasm(t).permutation() {
        Some(p) => (true, is_reduced_baxter(&p)),
        None => (false, false),
    }
}

/// For a tiling whose large matrix is a permutation matrix: the small matrix
/// is a permutation matrix exactly when that permutation is Baxter.
pub fn canary_holds(t: &DominoTiling) -> bool {
    let (large, small) = t.asm_pair();
    match large.permutation() {
        Some(p) => is_reduced_baxter(&p) == small.is_permutation_matrix(),
        None => true,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CanaryReport {
    pub order: usize,
    pub tilings: usize,
    /// Tilings whose large matrix is a permutation matrix.
    pub permutation_lasms: usize,
    /// Of those, how many give a Baxter permutation.
    pub baxter: usize,
    /// Of those, how many also have a permutation small matrix.
    pub both_permutation: usize,
    /// Indices (into [`enumerate_tilings`]) where [`canary_holds`] fails.
    pub violations: Vec<usize>,
}

impl CanaryReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_canary(n: usize) -> Result<CanaryReport> {
    let tilings = enumerate_tilings(n)?;
    let mut report = CanaryReport { order: n, tilings: tilings.len(), ..Default::default() };
    for (k, t) in tilings.iter().enumerate() {
        let (large, small) = t.asm_pair();
        let Some(p) = large.permutation() else { continue };
        report.permutation_lasms += 1;
        let baxter = is_reduced_baxter(&p);
        let both = small.is_permutation_matrix();
        report.baxter += baxter as usize;
        report.both_permutation += both as usize;
        if baxter != both {
            report.violations.push(k);
        }
    }
    Ok(report)
}

/// Reads the permutation off the black, white and gray dots together: large
/// matrix entries in odd rows and columns, small matrix entries in even ones,
/// zeros at the cell centers.
pub fn assemble_complete_baxter(t: &DominoTiling) -> Result<Perm> {
    let (large, small) = t.asm_pair();
    let odd = large.permutation().ok_or(Error::NotPermutationLasm)?;
    let even = small
        .permutation()
        .ok_or_else(|| Error::NotCompleteBaxter(format!("dots of a tiling with large permutation {odd}")))?;
    interleave(&odd, &even)
}
