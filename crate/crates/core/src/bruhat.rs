//! Bruhat order on signed permutations.
//!
//! Two independent routes are provided.  The rank-matrix criterion for the
//! even-signed group compares the south-west rook counts entrywise and adds a
//! parity condition over shared empty rectangles.  The subword oracle walks a
//! reduced word and collects the full lower interval; it works for every
//! family and serves as ground truth for the matrix criterion.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::roots::Family;
use crate::weyl::{RootSystem, SignedPermutation};

/// Length cap for the subword oracle; W(D6) tops out at 30.
pub const DEFAULT_SUBWORD_CAP: usize = 32;

/// Rows and columns are labeled `1, ..., n, -n, ..., -1` in display order.
fn pos_of_label(label: i64, n: usize) -> usize {
    debug_assert!(label != 0 && label.unsigned_abs() as usize <= n);
    if label > 0 {
        label as usize
    } else {
        (2 * n as i64 + 1 + label) as usize
    }
}

/// The 2n x 2n permutation matrix of a signed permutation, with a rook in
/// column `j` at row `w(j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RookMatrix {
    n: usize,
    grid: Vec<Vec<bool>>,
}

/// South-west rook counts: entry `(i, j)` is the number of rooks weakly
/// below row `i` and weakly left of column `j` in display positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankMatrix {
    n: usize,
    grid: Vec<Vec<u32>>,
}

fn require_signed(w: &SignedPermutation, what: &str) -> Result<()> {
    if w.family() == Family::A {
        return Err(Error::InvalidInput(format!(
            "{what} works on the signed families B, C and D"
        )));
    }
    Ok(())
}

pub fn rook_matrix(w: &SignedPermutation) -> Result<RookMatrix> {
    require_signed(w, "rook_matrix")?;
    let n = w.n_letters();
    let mut grid = vec![vec![false; 2 * n]; 2 * n];
    for label in signed_labels(n) {
        let row = pos_of_label(w.apply(label), n);
        let col = pos_of_label(label, n);
        grid[row - 1][col - 1] = true;
    }
    Ok(RookMatrix { n, grid })
}

fn signed_labels(n: usize) -> impl Iterator<Item = i64> {
    (1..=n as i64).chain((1..=n as i64).rev().map(|i| -i))
}

pub fn rank_matrix(w: &SignedPermutation) -> Result<RankMatrix> {
    let rooks = rook_matrix(w)?;
    let n = rooks.n;
    let m = 2 * n;
    // Count rooks weakly south-west of each position by a sweep from the
    // bottom-left corner.
    let mut grid = vec![vec![0u32; m]; m];
    for i in (0..m).rev() {
        for j in 0..m {
            let here = rooks.grid[i][j] as u32;
            let below = if i + 1 < m { grid[i + 1][j] } else { 0 };
            let left = if j > 0 { grid[i][j - 1] } else { 0 };
            let below_left = if i + 1 < m && j > 0 { grid[i + 1][j - 1] } else { 0 };
            grid[i][j] = here + below + left - below_left;
        }
    }
    Ok(RankMatrix { n, grid })
}

impl RookMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry by display positions, 1-based.
    pub fn at(&self, row: usize, col: usize) -> bool {
        self.grid[row - 1][col - 1]
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .grid
            .iter()
            .map(|row| row.iter().map(|&b| b as u8).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for RookMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.grid {
            let line: Vec<&str> = row.iter().map(|&b| if b { "X" } else { "." }).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl RankMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry by display positions, 1-based.
    pub fn at(&self, row: usize, col: usize) -> u32 {
        self.grid[row - 1][col - 1]
    }

    /// Entry by row/column labels; a column label of 0 reads as 0 because
    /// there is nothing to the left of the first column.
    pub fn at_labels(&self, row_label: i64, col_label: i64) -> u32 {
        if col_label == 0 {
            return 0;
        }
        self.at(pos_of_label(row_label, self.n), pos_of_label(col_label, self.n))
    }

    pub fn leq(&self, other: &RankMatrix) -> bool {
        self.n == other.n
            && self
                .grid
                .iter()
                .zip(&other.grid)
                .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x <= y))
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.grid
    }

    pub fn to_json(&self) -> Value {
        json!(self.grid)
    }
}

impl fmt::Display for RankMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .grid
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for row in &self.grid {
            let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// True when no column with label of absolute value >= `b` carries a rook in
/// a row with label of absolute value >= `a`.
pub fn is_empty_rectangle(w: &SignedPermutation, a: usize, b: usize) -> Result<bool> {
    require_signed(w, "is_empty_rectangle")?;
    let n = w.n_letters();
    if a < 1 || a > n || b < 1 || b > n {
        return Err(Error::OutOfRange(format!(
            "empty rectangle bounds ({a}, {b}) for n = {n}"
        )));
    }
    Ok((b..=n).all(|i| w.apply(i as i64).unsigned_abs() < a as u64))
}

/// Rank-matrix Bruhat comparison for the even-signed group: entrywise rank
/// dominance plus, over every rectangle empty for both elements with matching
/// corner rank, matching parity of the south-west count in column `n`.
pub fn bruhat_leq(v: &SignedPermutation, w: &SignedPermutation) -> Result<bool> {
    if v.family() != Family::D || w.family() != Family::D {
        return Err(Error::Mismatch(
            "bruhat_leq compares family D elements; other families go through the subword oracle"
                .into(),
        ));
    }
    if v.n_letters() != w.n_letters() {
        return Err(Error::Mismatch(format!(
            "rank {} vs {}",
            v.n_letters(),
            w.n_letters()
        )));
    }
    let n = v.n_letters();
    let rv = rank_matrix(v)?;
    let rw = rank_matrix(w)?;
    if !rv.leq(&rw) {
        return Ok(false);
    }
    for a in 2..=n {
        for b in 2..=n {
            if is_empty_rectangle(v, a, b)?
                && is_empty_rectangle(w, a, b)?
                && rv.at_labels(-(a as i64 - 1), b as i64 - 1)
                    == rw.at_labels(-(a as i64 - 1), b as i64 - 1)
            {
                let pv = rv.at_labels(-(a as i64 - 1), n as i64);
                let pw = rw.at_labels(-(a as i64 - 1), n as i64);
                if pv % 2 != pw % 2 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The lower Bruhat interval `[id, w]`, collected by scanning the canonical
/// reduced word and extending each partial element only when its length grows.
pub fn lower_interval(
    sys: &RootSystem,
    w: &SignedPermutation,
) -> Result<BTreeSet<SignedPermutation>> {
    let word = sys.reduced_word(w);
    if word.len() > DEFAULT_SUBWORD_CAP {
        return Err(Error::ResourceLimit(format!(
            "l(w) = {} exceeds the subword budget {DEFAULT_SUBWORD_CAP}",
            word.len()
        )));
    }
    let mut interval: BTreeSet<SignedPermutation> = BTreeSet::new();
    interval.insert(sys.identity());
    for &i in &word {
        let alpha = &sys.simple_roots()[i - 1];
        let s = sys.simple_reflection(i)?.clone();
        let mut extended = Vec::new();
        for u in &interval {
            if u.act_on_root(alpha).is_positive() {
                extended.push(u.multiply(&s)?);
            }
        }
        interval.extend(extended);
    }
    Ok(interval)
}

/// Subword-property test: `v <= w` iff `v` appears as a reduced subword of a
/// reduced word of `w`.
pub fn bruhat_leq_subword(
    sys: &RootSystem,
    v: &SignedPermutation,
    w: &SignedPermutation,
) -> Result<bool> {
    Ok(lower_interval(sys, w)?.contains(v))
}

/// Zeroes everything on or above the main diagonal of the rank matrix.
pub fn strict_lower_rank(w: &SignedPermutation) -> Result<RankMatrix> {
    let mut r = rank_matrix(w)?;
    let m = 2 * r.n;
    for i in 0..m {
        for j in i..m {
            r.grid[i][j] = 0;
        }
    }
    Ok(r)
}

/// Entrywise comparison of the strictly lower-triangular rank matrices; for
/// involutions this is equivalent to comparing the full rank matrices.
pub fn involution_leq_star(sigma: &SignedPermutation, tau: &SignedPermutation) -> Result<bool> {
    for w in [sigma, tau] {
        if !w.is_involution() {
            return Err(Error::NotInvolution(w.to_string()));
        }
    }
    if sigma.n_letters() != tau.n_letters() || sigma.family() != tau.family() {
        return Err(Error::Mismatch("involution_leq_star needs equal specs".into()));
    }
    Ok(strict_lower_rank(sigma)?.leq(&strict_lower_rank(tau)?))
}
