//! Exact sparse multivariate polynomials over the rationals, and fractions
//! whose denominators are multisets of positive roots.
//!
//! Restricting denominators to products of positive roots removes any need
//! for multivariate gcd: cancellation reduces to exact division by linear
//! forms, and the Weyl group acts by signed coordinate substitution.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::roots::{LinearForm, Root};
use crate::weyl::SignedPermutation;

/// A polynomial in the epsilon variables `e1, ..., en`, stored as a map from
/// exponent vectors to nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    n_vars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl SparsePolynomial {
    pub fn zero(n_vars: usize) -> Self {
        SparsePolynomial {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, BigRational::one())
    }

    pub fn constant(n_vars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; n_vars], c);
        }
        p
    }

    pub fn integer(n_vars: usize, c: i64) -> Self {
        Self::constant(n_vars, BigRational::from_integer(BigInt::from(c)))
    }

    /// The variable `e_i`, 1-based.
    pub fn variable(n_vars: usize, i: usize) -> Self {
        let mut exps = vec![0; n_vars];
        exps[i - 1] = 1;
        let mut p = Self::zero(n_vars);
        p.terms.insert(exps, BigRational::one());
        p
    }

    /// Degree-one polynomial with the coefficients of a linear form.
    pub fn from_linear_form(l: &LinearForm) -> Self {
        let mut p = Self::zero(l.dim());
        for (k, &c) in l.coeffs.iter().enumerate() {
            if c != 0 {
                let mut exps = vec![0; l.dim()];
                exps[k] = 1;
                p.terms.insert(exps, BigRational::from_integer(BigInt::from(c)));
            }
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).max()
    }

    fn insert_term(&mut self, exps: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        let mut out = self.clone();
        for (exps, c) in &other.terms {
            out.insert_term(exps.clone(), c.clone());
        }
        out
    }

    pub fn negate(&self) -> Self {
        SparsePolynomial {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        let mut out = Self::zero(self.n_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero(self.n_vars);
        }
        SparsePolynomial {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * q)).collect(),
        }
    }

    /// Substitutes `e_i -> sign(w(i)) * e_{|w(i)|}`.
    pub fn apply_signed_permutation(&self, w: &SignedPermutation) -> Self {
        assert_eq!(self.n_vars, w.n_letters(), "variable count mismatch");
        let images = w.images();
        let mut out = Self::zero(self.n_vars);
        for (exps, c) in &self.terms {
            let mut new_exps = vec![0u32; self.n_vars];
            let mut flip = false;
            for (k, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images[k];
                new_exps[(img.abs() - 1) as usize] = e;
                if img < 0 && e % 2 == 1 {
                    flip = !flip;
                }
            }
            out.insert_term(new_exps, if flip { -c } else { c.clone() });
        }
        out
    }

    /// Evaluates at an integer point.
    fn eval_int(&self, point: &[i64]) -> BigRational {
        let mut total = BigRational::zero();
        for (exps, c) in &self.terms {
            let mut m = BigInt::one();
            for (k, &e) in exps.iter().enumerate() {
                if e > 0 {
                    m *= BigInt::from(point[k]).pow(e);
                }
            }
            total += c * BigRational::from_integer(m);
        }
        total
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| json!({"coeff": c.to_string(), "exps": e}))
            .collect();
        json!({"n_vars": self.n_vars, "terms": terms})
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::InvalidInput("malformed polynomial JSON".into());
        let n_vars = value.get("n_vars").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let mut poly = Self::zero(n_vars);
        for term in value.get("terms").and_then(Value::as_array).ok_or_else(bad)? {
            let coeff: BigRational = term
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?;
            let exps: Vec<u32> = term
                .get("exps")
                .and_then(Value::as_array)
                .ok_or_else(bad)?
                .iter()
                .map(|v| v.as_u64().map(|x| x as u32).ok_or_else(bad))
                .collect::<Result<_>>()?;
            if exps.len() != n_vars {
                return Err(bad());
            }
            poly.insert_term(exps, coeff);
        }
        Ok(poly)
    }

    /// Terms in descending lexicographic exponent order, for display.
    fn sorted_terms(&self) -> Vec<(&Vec<u32>, &BigRational)> {
        self.terms.iter().rev().collect()
    }

    fn render(&self, var: impl Fn(usize) -> String, times: &str, pow: impl Fn(u32) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (exps, c) in self.sorted_terms() {
            let positive = c.is_positive();
            if out.is_empty() {
                if !positive {
                    out.push('-');
                }
            } else {
                out.push_str(if positive { " + " } else { " - " });
            }
            let mag = c.abs();
            let is_const = exps.iter().all(|&e| e == 0);
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || is_const {
                factors.push(mag.to_string());
            }
            for (k, &e) in exps.iter().enumerate() {
                if e == 1 {
                    factors.push(var(k + 1));
                } else if e > 1 {
                    factors.push(format!("{}{}", var(k + 1), pow(e)));
                }
            }
            out.push_str(&factors.join(times));
        }
        out
    }

    pub fn to_tex(&self) -> String {
        self.render(|i| format!("\\epsilon_{{{i}}}"), " ", |e| format!("^{{{e}}}"))
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|i| format!("e{i}"), "*", |e| format!("^{e}")))
    }
}

/// Exact division of `p` by a nonzero linear form; `None` when the form does
/// not divide `p`.
pub fn divide_by_linear(p: &SparsePolynomial, l: &LinearForm) -> Option<SparsePolynomial> {
    assert!(!l.is_zero(), "division by the zero form");
    assert_eq!(p.n_vars(), l.dim(), "variable count mismatch");
    if p.is_zero() {
        return Some(SparsePolynomial::zero(p.n_vars));
    }
    // A linear form divides p only if p vanishes on its hyperplane; test one
    // cheap sample point before running the division.
    if !eval_on_hyperplane(p, l).is_zero() {
        return None;
    }
    let pivot = l.coeffs.iter().position(|&c| c != 0).unwrap();
    let c_pivot = BigRational::from_integer(BigInt::from(l.coeffs[pivot]));
    // rest = l - c_pivot * e_pivot
    let mut rest = SparsePolynomial::from_linear_form(l);
    let mut pivot_exps = vec![0u32; l.dim()];
    pivot_exps[pivot] = 1;
    rest.terms.remove(&pivot_exps);

    let mut quotient = SparsePolynomial::zero(p.n_vars);
    let mut rem = p.clone();
    loop {
        let top_deg = rem.terms.keys().map(|e| e[pivot]).max().unwrap_or(0);
        if top_deg == 0 {
            break;
        }
        let mut block = SparsePolynomial::zero(p.n_vars);
        for (exps, c) in &rem.terms {
            if exps[pivot] == top_deg {
                let mut e = exps.clone();
                e[pivot] -= 1;
                block.terms.insert(e, c / &c_pivot);
            }
        }
        // rem -= block * l; the top bucket cancels exactly.
        let mut consumed = block.mul(&rest);
        for (exps, c) in &block.terms {
            let mut e = exps.clone();
            e[pivot] += 1;
            consumed.insert_term(e, c * &c_pivot);
        }
        rem = rem.sub(&consumed);
        quotient = quotient.add(&block);
    }
    if rem.is_zero() {
        Some(quotient)
    } else {
        None
    }
}

/// Evaluates `p` at an integer point chosen on the hyperplane of `l`.
fn eval_on_hyperplane(p: &SparsePolynomial, l: &LinearForm) -> BigRational {
    // Start from pairwise distinct primes and solve the pivot coordinate; the
    // point is scaled by the pivot coefficient to stay integral.
    const PRIMES: [i64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
    let n = p.n_vars();
    let pivot = l.coeffs.iter().position(|&c| c != 0).unwrap();
    let c_pivot = l.coeffs[pivot];
    let mut point: Vec<i64> = (0..n).map(|k| PRIMES[k % PRIMES.len()] * c_pivot).collect();
    let rest: i64 = (0..n)
        .filter(|&k| k != pivot)
        .map(|k| l.coeffs[k] * point[k])
        .sum();
    point[pivot] = -rest / c_pivot;
    debug_assert_eq!(
        (0..n).map(|k| l.coeffs[k] * point[k]).sum::<i64>(),
        0,
        "sample point must lie on the hyperplane"
    );
    p.eval_int(&point)
}

/// True when the positive root `alpha` divides `p` exactly.
pub fn divides_root(alpha: &Root, p: &SparsePolynomial) -> bool {
    divide_by_linear(p, alpha).is_some()
}

/// A polynomial numerator over a multiset of positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootFraction {
    num: SparsePolynomial,
    den: BTreeMap<Root, u32>,
}

impl RootFraction {
    pub fn from_polynomial(num: SparsePolynomial) -> Self {
        RootFraction {
            num,
            den: BTreeMap::new(),
        }
    }

    pub fn zero(n_vars: usize) -> Self {
        Self::from_polynomial(SparsePolynomial::zero(n_vars))
    }

    pub fn one(n_vars: usize) -> Self {
        Self::from_polynomial(SparsePolynomial::one(n_vars))
    }

    /// Builds `num / prod(den)`, normalizing root signs so the denominator
    /// stays a positive multiset.
    pub fn new(num: SparsePolynomial, den_roots: &[Root]) -> Self {
        let mut num = num;
        let mut den: BTreeMap<Root, u32> = BTreeMap::new();
        for root in den_roots {
            assert!(!root.is_zero(), "zero root in denominator");
            let positive = if root.is_positive() {
                root.clone()
            } else {
                num = num.negate();
                root.negated()
            };
            *den.entry(positive).or_insert(0) += 1;
        }
        RootFraction { num, den }.normalized()
    }

    /// `1 / root`, moving a sign into the numerator when the root is negative.
    pub fn inverse_root(root: &Root) -> Self {
        Self::new(SparsePolynomial::one(root.dim()), std::slice::from_ref(root))
    }

    pub fn num(&self) -> &SparsePolynomial {
        &self.num
    }

    pub fn den(&self) -> &BTreeMap<Root, u32> {
        &self.den
    }

    pub fn n_vars(&self) -> usize {
        self.num.n_vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn den_degree(&self) -> u32 {
        self.den.values().sum()
    }

    /// The expanded denominator product.
    pub fn den_polynomial(&self) -> SparsePolynomial {
        let mut out = SparsePolynomial::one(self.n_vars());
        for (root, &mult) in &self.den {
            let factor = SparsePolynomial::from_linear_form(root);
            for _ in 0..mult {
                out = out.mul(&factor);
            }
        }
        out
    }

    /// Cancels denominator roots that divide the numerator, repeatedly.
    pub fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let roots: Vec<Root> = self.den.keys().cloned().collect();
        for root in roots {
            while *self.den.get(&root).unwrap_or(&0) > 0 {
                match divide_by_linear(&self.num, &root) {
                    Some(q) => {
                        self.num = q;
                        let m = self.den.get_mut(&root).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&root);
                        }
                    }
                    None => break,
                }
            }
        }
        self
    }

    pub fn negate(&self) -> Self {
        RootFraction {
            num: self.num.negate(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero(self.n_vars());
        }
        RootFraction {
            num: self.num.scale(q),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars(), other.n_vars(), "variable count mismatch");
        // Common denominator: entrywise max of the two multisets.
        let mut union: BTreeMap<Root, u32> = self.den.clone();
        for (root, &mult) in &other.den {
            let entry = union.entry(root.clone()).or_insert(0);
            *entry = (*entry).max(mult);
        }
        let lift = |num: &SparsePolynomial, den: &BTreeMap<Root, u32>| {
            let mut out = num.clone();
            for (root, &mult) in &union {
                let have = den.get(root).copied().unwrap_or(0);
                let factor = SparsePolynomial::from_linear_form(root);
                for _ in have..mult {
                    out = out.mul(&factor);
                }
            }
            out
        };
        let num = lift(&self.num, &self.den).add(&lift(&other.num, &other.den));
        RootFraction { num, den: union }.normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n_vars(), other.n_vars(), "variable count mismatch");
        let num = self.num.mul(&other.num);
        let mut den = self.den.clone();
        for (root, &mult) in &other.den {
            *den.entry(root.clone()).or_insert(0) += mult;
        }
        RootFraction { num, den }.normalized()
    }

    pub fn mul_polynomial(&self, p: &SparsePolynomial) -> Self {
        RootFraction {
            num: self.num.mul(p),
            den: self.den.clone(),
        }
        .normalized()
    }

    /// The Weyl action: substitutes through numerator and denominator, moving
    /// signs of negated denominator roots into the numerator.
    pub fn weyl_act(&self, w: &SignedPermutation) -> Self {
        let mut num = self.num.apply_signed_permutation(w);
        let mut den: BTreeMap<Root, u32> = BTreeMap::new();
        for (root, &mult) in &self.den {
            let image = w.act_on_root(root);
            let positive = if image.is_positive() {
                image
            } else {
                if mult % 2 == 1 {
                    num = num.negate();
                }
                image.negated()
            };
            *den.entry(positive).or_insert(0) += mult;
        }
        RootFraction { num, den }.normalized()
    }

    /// Exact equality as rational functions, by cross-multiplication.
    pub fn equals(&self, other: &Self) -> bool {
        if self.n_vars() != other.n_vars() {
            return false;
        }
        let a = self.clone().normalized();
        let b = other.clone().normalized();
        if a.den == b.den {
            return a.num == b.num;
        }
        a.num.mul(&b.den_polynomial()) == b.num.mul(&a.den_polynomial())
    }

    pub fn to_json(&self) -> Value {
        let den: Vec<Value> = self
            .den
            .iter()
            .map(|(root, mult)| json!([root.to_json(), mult]))
            .collect();
        json!({"num": self.num.to_json(), "den": den})
    }

    pub fn to_tex(&self) -> String {
        if self.den.is_empty() {
            return self.num.to_tex();
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(root, &mult)| {
                let base = format!("({})", root.to_tex());
                if mult == 1 {
                    base
                } else {
                    format!("{base}^{{{mult}}}")
                }
            })
            .collect();
        format!("\\frac{{{}}}{{{}}}", self.num.to_tex(), den.join(""))
    }
}

impl fmt::Display for RootFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(root, &mult)| {
                if mult == 1 {
                    format!("({root})")
                } else {
                    format!("({root})^{mult}")
                }
            })
            .collect();
        let num = if self.num.num_terms() > 1 {
            format!("({})", self.num)
        } else {
            format!("{}", self.num)
        };
        write!(f, "{} / {}", num, den.join("*"))
    }
}
