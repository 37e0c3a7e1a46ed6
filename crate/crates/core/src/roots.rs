//! Root systems of types A, B, C and D in epsilon coordinates.
//!
//! A root is an integer vector over the standard basis `e1, ..., en`; a root
//! is positive when its first nonzero coordinate is positive.  For family A
//! of rank `r` the vectors live in `r + 1` coordinates, matching the
//! realization of the symmetric group on `r + 1` letters.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// One of the four classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::InvalidInput(format!("unknown family {other:?}"))),
        }
    }
}

/// A classical root system selected by family and Coxeter rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidInput("rank must be at least 1".into()));
        }
        if family == Family::D && rank < 2 {
            return Err(Error::InvalidInput("family D needs rank >= 2".into()));
        }
        Ok(RootSystemSpec { family, rank })
    }

    /// Number of epsilon coordinates (and of letters the Weyl group permutes).
    pub fn dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// Number of simple roots.
    pub fn num_simple(&self) -> usize {
        self.rank
    }

    /// Order of the Weyl group.
    pub fn group_order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        let n = self.dim() as u32;
        match self.family {
            Family::A => fact(self.dim()),
            Family::B | Family::C => 2u128.pow(n) * fact(self.dim()),
            Family::D => 2u128.pow(n - 1) * fact(self.dim()),
        }
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// An integer linear form in the epsilon coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

/// Linear forms and roots share the representation; `divide_by_linear` and
/// friends accept any nonzero form.
pub type LinearForm = Root;

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Root { coeffs: vec![0; dim] }
    }

    /// `e_i - e_j` with 1-based indices.
    pub fn eps_minus(i: usize, j: usize, dim: usize) -> Self {
        let mut coeffs = vec![0; dim];
        coeffs[i - 1] += 1;
        coeffs[j - 1] -= 1;
        Root { coeffs }
    }

    /// `e_i + e_j` with 1-based indices.
    pub fn eps_plus(i: usize, j: usize, dim: usize) -> Self {
        let mut coeffs = vec![0; dim];
        coeffs[i - 1] += 1;
        coeffs[j - 1] += 1;
        Root { coeffs }
    }

    /// The short root `e_i` of type B.
    pub fn eps(i: usize, dim: usize) -> Self {
        let mut coeffs = vec![0; dim];
        coeffs[i - 1] = 1;
        Root { coeffs }
    }

    /// The long root `2 e_i` of type C.
    pub fn two_eps(i: usize, dim: usize) -> Self {
        let mut coeffs = vec![0; dim];
        coeffs[i - 1] = 2;
        Root { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Positive means the first nonzero coordinate is positive.
    pub fn is_positive(&self) -> bool {
        match self.coeffs.iter().find(|&&c| c != 0) {
            Some(&c) => c > 0,
            None => false,
        }
    }

    pub fn negated(&self) -> Self {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Root) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Root {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Standard Euclidean inner product on epsilon coordinates.
    pub fn inner(&self, other: &Root) -> i64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn to_json(&self) -> Value {
        json!(self.coeffs)
    }

    pub fn to_tex(&self) -> String {
        render_form(&self.coeffs, |i| format!("\\epsilon_{{{}}}", i))
    }
}

fn render_form(coeffs: &[i64], var: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else if c < 0 {
            out.push('-');
        } else {
            out.push('+');
        }
        if mag != 1 {
            out.push_str(&mag.to_string());
        }
        out.push_str(&var(k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_form(&self.coeffs, |i| format!("e{i}")))
    }
}

/// The reflection `s_alpha(beta) = beta - 2 (alpha, beta) / (alpha, alpha) * alpha`.
pub fn reflect(alpha: &Root, beta: &Root) -> Result<Root> {
    if alpha.is_zero() {
        return Err(Error::InvalidInput("cannot reflect in the zero vector".into()));
    }
    if alpha.dim() != beta.dim() {
        return Err(Error::Mismatch(format!(
            "reflect: dimensions {} vs {}",
            alpha.dim(),
            beta.dim()
        )));
    }
    let num = 2 * alpha.inner(beta);
    let den = alpha.inner(alpha);
    if num % den != 0 {
        return Err(Error::InvalidInput(format!(
            "{beta} is not in the root lattice of {alpha}"
        )));
    }
    let c = num / den;
    Ok(Root {
        coeffs: beta
            .coeffs
            .iter()
            .zip(&alpha.coeffs)
            .map(|(b, a)| b - c * a)
            .collect(),
    })
}

/// Splits a positive root of shape `e_i -+ e_j` into `(i, j, plus)`.
fn split_two_coord(alpha: &Root) -> Result<(usize, usize, bool)> {
    let nonzero: Vec<(usize, i64)> = alpha
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| (k + 1, c))
        .collect();
    match nonzero.as_slice() {
        [(i, 1), (j, 1)] => Ok((*i, *j, true)),
        [(i, 1), (j, -1)] => Ok((*i, *j, false)),
        _ => Err(Error::InvalidInput(format!(
            "{alpha} does not have the shape e_i +- e_j"
        ))),
    }
}

/// `row(e_i - e_j) = j`, `row(e_i + e_j) = -j`.
pub fn row_of(alpha: &Root) -> Result<i64> {
    let (_, j, plus) = split_two_coord(alpha)?;
    Ok(if plus { -(j as i64) } else { j as i64 })
}

/// `col(e_i -+ e_j) = i`.
pub fn col_of(alpha: &Root) -> Result<usize> {
    let (i, _, _) = split_two_coord(alpha)?;
    Ok(i)
}

/// All positive roots, in a fixed deterministic order: grouped by column, and
/// inside the column `e_i` first pairs with `e_{i+1}, ..., e_n` subtracted,
/// then pairs with `e_n, ..., e_{i+1}` added, then the short or long root.
pub fn positive_roots(spec: &RootSystemSpec) -> Vec<Root> {
    let dim = spec.dim();
    let mut out = Vec::new();
    match spec.family {
        Family::A => {
            for i in 1..=dim {
                for j in i + 1..=dim {
                    out.push(Root::eps_minus(i, j, dim));
                }
            }
        }
        Family::B | Family::C | Family::D => {
            for i in 1..=dim {
                for j in i + 1..=dim {
                    out.push(Root::eps_minus(i, j, dim));
                }
                for j in (i + 1..=dim).rev() {
                    out.push(Root::eps_plus(i, j, dim));
                }
                match spec.family {
                    Family::B => out.push(Root::eps(i, dim)),
                    Family::C => out.push(Root::two_eps(i, dim)),
                    _ => {}
                }
            }
        }
    }
    out
}

/// Simple roots in index order; for D the last one is `e_{n-1} + e_n`.
pub fn simple_roots(spec: &RootSystemSpec) -> Vec<Root> {
    let dim = spec.dim();
    let n = spec.rank;
    let mut out = Vec::new();
    match spec.family {
        Family::A => {
            for i in 1..=n {
                out.push(Root::eps_minus(i, i + 1, dim));
            }
        }
        Family::B | Family::C => {
            for i in 1..n {
                out.push(Root::eps_minus(i, i + 1, dim));
            }
            if spec.family == Family::B {
                out.push(Root::eps(n, dim));
            } else {
                out.push(Root::two_eps(n, dim));
            }
        }
        Family::D => {
            for i in 1..n {
                out.push(Root::eps_minus(i, i + 1, dim));
            }
            out.push(Root::eps_plus(n - 1, n, dim));
        }
    }
    out
}

fn require_d(spec: &RootSystemSpec, what: &str) -> Result<()> {
    if spec.family != Family::D {
        return Err(Error::InvalidInput(format!(
            "{what} is defined for family D, got {}",
            spec.family
        )));
    }
    Ok(())
}

/// `C_k`: positive roots in column `k`.
pub fn column_set(spec: &RootSystemSpec, k: usize) -> Result<Vec<Root>> {
    require_d(spec, "column_set")?;
    if k < 1 || k > spec.rank {
        return Err(Error::OutOfRange(format!("column {k} of {spec}")));
    }
    Ok(positive_roots(spec)
        .into_iter()
        .filter(|alpha| col_of(alpha).is_ok_and(|c| c == k))
        .collect())
}

/// `R_k`: positive roots in row `k`, where `k` ranges over nonzero labels `-n..n`.
pub fn row_set(spec: &RootSystemSpec, k: i64) -> Result<Vec<Root>> {
    require_d(spec, "row_set")?;
    let n = spec.rank as i64;
    if k == 0 || k.abs() > n {
        return Err(Error::OutOfRange(format!("row {k} of {spec}")));
    }
    Ok(positive_roots(spec)
        .into_iter()
        .filter(|alpha| row_of(alpha).is_ok_and(|r| r == k))
        .collect())
}
