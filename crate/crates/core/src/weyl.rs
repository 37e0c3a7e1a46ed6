//! Weyl group elements as signed permutations.
//!
//! An element is stored by its one-line notation `w(1), ..., w(n)` and is
//! extended to negative arguments by `w(-i) = -w(i)`.  Family A elements have
//! all images positive; family D elements flip an even number of signs.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::roots::{positive_roots, simple_roots, Family, Root, RootSystemSpec};

/// Hard ceiling for whole-group enumeration; the order of W(D6).
pub const MAX_GROUP_ORDER: u128 = 23040;

/// Default length cap for `all_reduced_words`.
pub const DEFAULT_WORD_CAP: usize = 8;

/// An element of a classical Weyl group in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    family: Family,
    images: Vec<i64>,
}

impl SignedPermutation {
    /// Validates and builds an element from its one-line notation.
    pub fn from_one_line(family: Family, images: Vec<i64>) -> Result<Self> {
        let n = images.len();
        let min_letters = match family {
            Family::A | Family::D => 2,
            Family::B | Family::C => 1,
        };
        if n < min_letters {
            return Err(Error::InvalidInput(format!(
                "family {family} needs at least {min_letters} letters, got {n}"
            )));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::InvalidInput(format!(
                    "image {x} out of range for {n} letters"
                )));
            }
            if seen[a - 1] {
                return Err(Error::InvalidInput(format!(
                    "repeated absolute value {a} in one-line notation"
                )));
            }
            seen[a - 1] = true;
        }
        let negatives = images.iter().filter(|&&x| x < 0).count();
        if family == Family::A && negatives > 0 {
            return Err(Error::InvalidInput(
                "family A elements must have positive images".into(),
            ));
        }
        if family == Family::D && negatives % 2 != 0 {
            return Err(Error::ParityViolation(format!(
                "family D requires an even number of negative images, got {negatives}"
            )));
        }
        Ok(SignedPermutation { family, images })
    }

    pub fn identity(spec: &RootSystemSpec) -> Self {
        SignedPermutation {
            family: spec.family,
            images: (1..=spec.dim() as i64).collect(),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of letters; `rank + 1` for family A, `rank` otherwise.
    pub fn n_letters(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i64] {
        &self.images
    }

    pub fn spec(&self) -> RootSystemSpec {
        let rank = match self.family {
            Family::A => self.n_letters() - 1,
            _ => self.n_letters(),
        };
        RootSystemSpec {
            family: self.family,
            rank,
        }
    }

    /// `w(i)` for a signed index `i`.
    pub fn apply(&self, i: i64) -> i64 {
        if i > 0 {
            self.images[(i - 1) as usize]
        } else {
            -self.images[(-i - 1) as usize]
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.family != other.family || self.n_letters() != other.n_letters() {
            return Err(Error::Mismatch(format!(
                "{}{} vs {}{}",
                self.family,
                self.n_letters(),
                other.family,
                other.n_letters()
            )));
        }
        Ok(())
    }

    /// Composition `(self * other)(i) = self(other(i))`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let images = (1..=self.n_letters() as i64)
            .map(|i| self.apply(other.apply(i)))
            .collect();
        Ok(SignedPermutation {
            family: self.family,
            images,
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n_letters()];
        for i in 1..=self.n_letters() as i64 {
            let j = self.apply(i);
            images[(j.abs() - 1) as usize] = if j > 0 { i } else { -i };
        }
        SignedPermutation {
            family: self.family,
            images,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &x)| x == k as i64 + 1)
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.n_letters() as i64).all(|i| self.apply(self.apply(i)) == i)
    }

    /// Basic means an involution with no letter sent to its own negative.
    pub fn is_basic_involution(&self) -> bool {
        self.is_involution() && (1..=self.n_letters() as i64).all(|i| self.apply(i) != -i)
    }

    /// Image of a root under the signed coordinate permutation.
    pub fn act_on_root(&self, root: &Root) -> Root {
        assert_eq!(root.dim(), self.n_letters(), "root dimension mismatch");
        let mut coeffs = vec![0; root.dim()];
        for (k, &c) in root.coeffs.iter().enumerate() {
            if c != 0 {
                let img = self.images[k];
                coeffs[(img.abs() - 1) as usize] += c * img.signum();
            }
        }
        Root::new(coeffs)
    }

    /// Counts the positive roots sent to negative ones; the closed-form
    /// Coxeter length for the standard simple systems.
    pub fn inversion_length(&self) -> usize {
        let w = &self.images;
        let n = w.len();
        let mut len = 0usize;
        // Pairs i < j contribute via e_i - e_j and (except in type A) e_i + e_j.
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (w[i], w[j]);
                if a.abs() > b.abs() {
                    len += 1;
                } else if a < 0 {
                    // |a| < |b| here, so both e_i - e_j and e_i + e_j flip.
                    len += 2;
                }
            }
        }
        match self.family {
            Family::A => {
                debug_assert!(w.iter().all(|&x| x > 0));
                len
            }
            Family::D => len,
            // Types B and C add the short or long root e_i per sign change.
            Family::B | Family::C => len + w.iter().filter(|&&x| x < 0).count(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!(self.images)
    }

    /// Parses "-2,4,1,-3".
    pub fn parse_one_line(family: Family, s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|piece| {
                piece.trim().parse::<i64>().map_err(|_| {
                    Error::InvalidInput(format!("bad one-line entry {:?}", piece.trim()))
                })
            })
            .collect::<Result<Vec<i64>>>()?;
        Self::from_one_line(family, images)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.images {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

/// The reflection `s_alpha` as a signed permutation:
/// `(i, j)(-i, -j)` for `e_i - e_j`, `(i, -j)(-i, j)` for `e_i + e_j`,
/// and the sign flip at `i` for `e_i` or `2 e_i`.
pub fn reflection(spec: &RootSystemSpec, alpha: &Root) -> Result<SignedPermutation> {
    if alpha.dim() != spec.dim() {
        return Err(Error::Mismatch(format!(
            "root dimension {} vs system dimension {}",
            alpha.dim(),
            spec.dim()
        )));
    }
    let nonzero: Vec<(usize, i64)> = alpha
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| (k + 1, c))
        .collect();
    let mut images: Vec<i64> = (1..=spec.dim() as i64).collect();
    match (spec.family, nonzero.as_slice()) {
        (_, [(i, 1), (j, 1)]) if spec.family != Family::A => {
            images[i - 1] = -(*j as i64);
            images[j - 1] = -(*i as i64);
        }
        (_, [(i, 1), (j, -1)]) => {
            images[i - 1] = *j as i64;
            images[j - 1] = *i as i64;
        }
        (Family::B, [(i, 1)]) | (Family::C, [(i, 2)]) => {
            images[i - 1] = -(*i as i64);
        }
        _ => {
            return Err(Error::InvalidInput(format!(
                "{alpha} is not a root of {spec}"
            )))
        }
    }
    SignedPermutation::from_one_line(spec.family, images)
}

/// A root system together with the data needed to work in its Weyl group.
///
/// `new` builds the standard system of a classical family.  `parabolic`
/// restricts to the subsystem generated by a subset of roots, keeping the
/// ambient letters; lengths and reduced words are then taken with respect to
/// the subsystem, which is what direct sums of smaller systems need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    spec: RootSystemSpec,
    positive: Vec<Root>,
    simple: Vec<Root>,
    simple_reflections: Vec<SignedPermutation>,
}

impl RootSystem {
    pub fn new(spec: RootSystemSpec) -> Result<Self> {
        let positive = positive_roots(&spec);
        let simple = simple_roots(&spec);
        let simple_reflections = simple
            .iter()
            .map(|alpha| reflection(&spec, alpha))
            .collect::<Result<Vec<_>>>()?;
        Ok(RootSystem {
            spec,
            positive,
            simple,
            simple_reflections,
        })
    }

    /// Subsystem generated by `simple` inside the ambient system `spec`.
    /// Elements outside the generated subgroup have no reduced word here.
    pub fn parabolic(spec: RootSystemSpec, simple: Vec<Root>) -> Result<Self> {
        let ambient: BTreeSet<Root> = positive_roots(&spec).into_iter().collect();
        for alpha in &simple {
            if !ambient.contains(alpha) {
                return Err(Error::InvalidInput(format!(
                    "{alpha} is not a positive root of {spec}"
                )));
            }
        }
        // Orbit closure of the chosen simple roots under their reflections.
        let mut positive: BTreeSet<Root> = simple.iter().cloned().collect();
        loop {
            let mut fresh = Vec::new();
            for alpha in &simple {
                for beta in &positive {
                    let image = crate::roots::reflect(alpha, beta)?;
                    let image = if image.is_positive() {
                        image
                    } else {
                        image.negated()
                    };
                    if !positive.contains(&image) {
                        fresh.push(image);
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            positive.extend(fresh);
        }
        let simple_reflections = simple
            .iter()
            .map(|alpha| reflection(&spec, alpha))
            .collect::<Result<Vec<_>>>()?;
        Ok(RootSystem {
            spec,
            positive: positive.into_iter().collect(),
            simple,
            simple_reflections,
        })
    }

    pub fn spec(&self) -> &RootSystemSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    pub fn num_simple(&self) -> usize {
        self.simple.len()
    }

    pub fn identity(&self) -> SignedPermutation {
        SignedPermutation::identity(&self.spec)
    }

    /// The simple reflection `s_i`, 1-based.
    pub fn simple_reflection(&self, i: usize) -> Result<&SignedPermutation> {
        self.simple_reflections
            .get(i - 1)
            .ok_or_else(|| Error::OutOfRange(format!("simple reflection index {i}")))
    }

    /// Smallest `i` with `w(alpha_i)` negative, if any.
    pub fn right_descent(&self, w: &SignedPermutation) -> Option<usize> {
        (1..=self.num_simple()).find(|&i| !w.act_on_root(&self.simple[i - 1]).is_positive())
    }

    /// Coxeter length via greedy right-descent reduction.
    pub fn length(&self, w: &SignedPermutation) -> usize {
        self.reduced_word(w).len()
    }

    /// Canonical reduced word: repeatedly strip the smallest right descent.
    pub fn reduced_word(&self, w: &SignedPermutation) -> Vec<usize> {
        let mut current = w.clone();
        let mut letters = Vec::new();
        while !current.is_identity() {
            let i = self
                .right_descent(&current)
                .expect("element has no descent in this root system");
            current = current.multiply(&self.simple_reflections[i - 1]).unwrap();
            letters.push(i);
        }
        letters.reverse();
        letters
    }

    /// Product `s_{word[0]} * s_{word[1]} * ...`.
    pub fn word_to_element(&self, word: &[usize]) -> Result<SignedPermutation> {
        let mut out = self.identity();
        for &i in word {
            out = out.multiply(self.simple_reflection(i)?)?;
        }
        Ok(out)
    }

    /// Every reduced word of `w`, for `l(w)` up to `cap`.
    pub fn all_reduced_words(&self, w: &SignedPermutation, cap: usize) -> Result<Vec<Vec<usize>>> {
        let len = self.length(w);
        if len > cap {
            return Err(Error::ResourceLimit(format!(
                "l(w) = {len} exceeds the reduced-word cap {cap}"
            )));
        }
        fn go(sys: &RootSystem, w: &SignedPermutation) -> Vec<Vec<usize>> {
            if w.is_identity() {
                return vec![Vec::new()];
            }
            let mut words = Vec::new();
            for i in 1..=sys.num_simple() {
                if !w.act_on_root(&sys.simple[i - 1]).is_positive() {
                    let shorter = w.multiply(&sys.simple_reflections[i - 1]).unwrap();
                    for mut word in go(sys, &shorter) {
                        word.push(i);
                        words.push(word);
                    }
                }
            }
            words
        }
        Ok(go(self, w))
    }
}

/// Every element of the Weyl group, enumerated deterministically.
pub fn enumerate_group(spec: &RootSystemSpec) -> Result<Vec<SignedPermutation>> {
    let order = spec.group_order();
    if order > MAX_GROUP_ORDER {
        return Err(Error::ResourceLimit(format!(
            "group order {order} of {spec} exceeds the enumeration budget {MAX_GROUP_ORDER}"
        )));
    }
    let n = spec.dim();
    let mut out = Vec::with_capacity(order as usize);
    for perm in (1..=n as i64).permutations(n) {
        match spec.family {
            Family::A => out.push(SignedPermutation {
                family: spec.family,
                images: perm,
            }),
            Family::B | Family::C | Family::D => {
                for mask in 0u32..(1 << n) {
                    if spec.family == Family::D && mask.count_ones() % 2 != 0 {
                        continue;
                    }
                    let images = perm
                        .iter()
                        .enumerate()
                        .map(|(k, &x)| if mask & (1 << k) != 0 { -x } else { x })
                        .collect();
                    out.push(SignedPermutation {
                        family: spec.family,
                        images,
                    });
                }
            }
        }
    }
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}

pub fn involutions(spec: &RootSystemSpec) -> Result<Vec<SignedPermutation>> {
    Ok(enumerate_group(spec)?
        .into_iter()
        .filter(SignedPermutation::is_involution)
        .collect())
}

pub fn basic_involutions(spec: &RootSystemSpec) -> Result<Vec<SignedPermutation>> {
    Ok(enumerate_group(spec)?
        .into_iter()
        .filter(SignedPermutation::is_basic_involution)
        .collect())
}

/// The support of a basic involution: the orthogonal set of positive roots
/// whose reflections multiply to it.  `w(i) = j` with `i < j` contributes
/// `e_i - e_j`; `w(i) = -j` contributes `e_i + e_j`.
pub fn support(w: &SignedPermutation) -> Result<Vec<Root>> {
    if !w.is_involution() {
        return Err(Error::NotInvolution(w.to_string()));
    }
    if !w.is_basic_involution() {
        return Err(Error::NotBasic(w.to_string()));
    }
    let n = w.n_letters();
    let mut out = Vec::new();
    for i in 1..=n as i64 {
        let j = w.apply(i);
        if j.abs() > i {
            if j > 0 {
                out.push(Root::eps_minus(i as usize, j as usize, n));
            } else {
                out.push(Root::eps_plus(i as usize, (-j) as usize, n));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize) -> RootSystem {
        RootSystem::new(RootSystemSpec::new(Family::D, n).unwrap()).unwrap()
    }

    fn dperm(images: &[i64]) -> SignedPermutation {
        SignedPermutation::from_one_line(Family::D, images.to_vec()).unwrap()
    }

    #[test]
    fn one_line_validation() {
        assert!(SignedPermutation::from_one_line(Family::D, vec![-2, 4, 1, -3]).is_ok());
        assert!(matches!(
            SignedPermutation::from_one_line(Family::D, vec![-1, 2, 3, 4]),
            Err(Error::ParityViolation(_))
        ));
        assert!(SignedPermutation::from_one_line(Family::D, vec![1, 1, 2, 3]).is_err());
        assert!(SignedPermutation::from_one_line(Family::D, vec![1, 2, 3, 5]).is_err());
        assert!(SignedPermutation::from_one_line(Family::A, vec![2, -1, 3]).is_err());
        let id = SignedPermutation::from_one_line(Family::D, vec![1, 2, 3, 4]).unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn multiply_matches_two_line_example() {
        // s_{e1+e5} s_{e2+e4} s_{e2-e4} = [-5,-2,3,-4,-1] in D5.
        let spec = RootSystemSpec::new(Family::D, 5).unwrap();
        let s15 = reflection(&spec, &Root::eps_plus(1, 5, 5)).unwrap();
        let s24p = reflection(&spec, &Root::eps_plus(2, 4, 5)).unwrap();
        let s24m = reflection(&spec, &Root::eps_minus(2, 4, 5)).unwrap();
        let product = s15.multiply(&s24p).unwrap().multiply(&s24m).unwrap();
        assert_eq!(product, dperm(&[-5, -2, 3, -4, -1]));
    }

    #[test]
    fn reflection_images() {
        let spec = RootSystemSpec::new(Family::D, 4).unwrap();
        assert_eq!(
            reflection(&spec, &Root::eps_minus(1, 2, 4)).unwrap(),
            dperm(&[2, 1, 3, 4])
        );
        assert_eq!(
            reflection(&spec, &Root::eps_plus(3, 4, 4)).unwrap(),
            dperm(&[1, 2, -4, -3])
        );
        for alpha in positive_roots(&spec) {
            let s = reflection(&spec, &alpha).unwrap();
            assert!(s.multiply(&s).unwrap().is_identity());
        }
    }

    #[test]
    fn inverse_of_example_element() {
        let w = dperm(&[-2, 4, 1, -3]);
        assert_eq!(w.inverse(), dperm(&[3, -1, -4, 2]));
        assert!(!w.is_involution());
        assert!(w.multiply(&w.inverse()).unwrap().is_identity());
    }

    #[test]
    fn act_on_root_signed() {
        let s15 = reflection(&RootSystemSpec::new(Family::D, 5).unwrap(), &Root::eps_plus(1, 5, 5))
            .unwrap();
        let image = s15.act_on_root(&Root::eps_minus(1, 2, 5));
        assert_eq!(image, Root::eps_plus(2, 5, 5).negated());
    }

    #[test]
    fn lengths_of_simple_cases() {
        let sys = d(4);
        assert_eq!(sys.length(&sys.identity()), 0);
        for i in 1..=4 {
            assert_eq!(sys.length(sys.simple_reflection(i).unwrap()), 1);
        }
        let w = dperm(&[-2, 4, 1, -3]);
        let word = sys.reduced_word(&w);
        assert_eq!(sys.length(&w), word.len());
        assert_eq!(sys.word_to_element(&word).unwrap(), w);
    }

    #[test]
    fn length_agrees_with_inversion_formula_on_d3() {
        let spec = RootSystemSpec::new(Family::D, 3).unwrap();
        let sys = RootSystem::new(spec).unwrap();
        for w in enumerate_group(&spec).unwrap() {
            assert_eq!(sys.length(&w), w.inversion_length(), "w = {w}");
        }
    }

    #[test]
    fn length_agrees_with_inversion_formula_on_b2_a3() {
        for spec in [
            RootSystemSpec::new(Family::B, 2).unwrap(),
            RootSystemSpec::new(Family::C, 2).unwrap(),
            RootSystemSpec::new(Family::A, 3).unwrap(),
        ] {
            let sys = RootSystem::new(spec).unwrap();
            for w in enumerate_group(&spec).unwrap() {
                assert_eq!(sys.length(&w), w.inversion_length(), "w = {w} in {spec}");
            }
        }
    }

    #[test]
    fn length_equals_negated_positive_root_count() {
        let spec = RootSystemSpec::new(Family::D, 4).unwrap();
        let sys = RootSystem::new(spec).unwrap();
        for w in enumerate_group(&spec).unwrap() {
            let by_roots = sys
                .positive_roots()
                .iter()
                .filter(|beta| !w.act_on_root(beta).is_positive())
                .count();
            assert_eq!(sys.length(&w), by_roots, "w = {w}");
        }
    }

    #[test]
    fn length_invariant_under_inverse_on_d4() {
        let spec = RootSystemSpec::new(Family::D, 4).unwrap();
        let sys = RootSystem::new(spec).unwrap();
        for w in enumerate_group(&spec).unwrap() {
            assert_eq!(sys.length(&w), sys.length(&w.inverse()));
        }
    }

    #[test]
    fn descents_change_length_by_one() {
        let spec = RootSystemSpec::new(Family::D, 4).unwrap();
        let sys = RootSystem::new(spec).unwrap();
        for w in enumerate_group(&spec).unwrap() {
            let lw = sys.length(&w);
            for i in 1..=4 {
                let ws = w.multiply(sys.simple_reflection(i).unwrap()).unwrap();
                let lws = sys.length(&ws);
                let descending = !w.act_on_root(&sys.simple_roots()[i - 1]).is_positive();
                if descending {
                    assert_eq!(lws, lw - 1);
                } else {
                    assert_eq!(lws, lw + 1);
                }
            }
        }
    }

    #[test]
    fn reduced_words_of_s1s2s1() {
        let spec = RootSystemSpec::new(Family::A, 2).unwrap();
        let sys = RootSystem::new(spec).unwrap();
        let w = sys.word_to_element(&[1, 2, 1]).unwrap();
        let words = sys.all_reduced_words(&w, DEFAULT_WORD_CAP).unwrap();
        let set: BTreeSet<Vec<usize>> = words.into_iter().collect();
        assert_eq!(
            set,
            BTreeSet::from([vec![1, 2, 1], vec![2, 1, 2]])
        );
        let canonical = sys.reduced_word(&w);
        assert!(set.contains(&canonical));
        for word in &set {
            assert_eq!(sys.word_to_element(word).unwrap(), w);
        }
        assert_eq!(
            sys.all_reduced_words(&sys.identity(), DEFAULT_WORD_CAP).unwrap(),
            vec![Vec::<usize>::new()]
        );
    }

    #[test]
    fn word_cap_is_enforced() {
        let sys = d(4);
        let w = dperm(&[-2, -1, -4, -3]);
        assert!(matches!(
            sys.all_reduced_words(&w, 3),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn group_orders() {
        assert_eq!(
            enumerate_group(&RootSystemSpec::new(Family::D, 2).unwrap())
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            enumerate_group(&RootSystemSpec::new(Family::D, 4).unwrap())
                .unwrap()
                .len(),
            192
        );
        assert_eq!(
            enumerate_group(&RootSystemSpec::new(Family::A, 3).unwrap())
                .unwrap()
                .len(),
            24
        );
        assert_eq!(
            enumerate_group(&RootSystemSpec::new(Family::B, 2).unwrap())
                .unwrap()
                .len(),
            8
        );
        assert!(enumerate_group(&RootSystemSpec::new(Family::B, 6).unwrap()).is_err());
    }

    #[test]
    fn involution_filters() {
        let spec = RootSystemSpec::new(Family::D, 4).unwrap();
        let inv = involutions(&spec).unwrap();
        assert!(inv.iter().all(|w| w.is_involution()));
        let basic = basic_involutions(&spec).unwrap();
        assert_eq!(basic.len(), 25);
        assert!(basic.contains(&SignedPermutation::identity(&spec)));
        assert!(basic.iter().all(|w| inv.contains(w)));
    }

    #[test]
    fn support_of_documented_example() {
        let sigma = SignedPermutation::from_one_line(Family::D, vec![-6, 2, 5, 4, 3, -1]).unwrap();
        let supp = support(&sigma).unwrap();
        assert_eq!(
            supp,
            vec![Root::eps_plus(1, 6, 6), Root::eps_minus(3, 5, 6)]
        );
    }

    #[test]
    fn support_edge_cases() {
        let spec = RootSystemSpec::new(Family::D, 4).unwrap();
        assert!(support(&SignedPermutation::identity(&spec)).unwrap().is_empty());
        let s12 = reflection(&spec, &Root::eps_minus(1, 2, 4)).unwrap();
        assert_eq!(support(&s12).unwrap(), vec![Root::eps_minus(1, 2, 4)]);
        let not_inv = dperm(&[-2, 4, 1, -3]);
        assert!(matches!(support(&not_inv), Err(Error::NotInvolution(_))));
        let not_basic = dperm(&[-1, -2, 3, 4]);
        assert!(matches!(support(&not_basic), Err(Error::NotBasic(_))));
    }

    #[test]
    fn support_properties_on_d4_d5() {
        for n in [4usize, 5] {
            let spec = RootSystemSpec::new(Family::D, n).unwrap();
            for sigma in basic_involutions(&spec).unwrap() {
                let supp = support(&sigma).unwrap();
                // Pairwise orthogonal.
                for (a, b) in supp.iter().tuple_combinations() {
                    assert_eq!(a.inner(b), 0);
                }
                // Product of the support reflections recovers sigma, in any order.
                let mut prod = SignedPermutation::identity(&spec);
                for beta in &supp {
                    prod = prod.multiply(&reflection(&spec, beta).unwrap()).unwrap();
                }
                assert_eq!(prod, sigma);
                let mut prod_rev = SignedPermutation::identity(&spec);
                for beta in supp.iter().rev() {
                    prod_rev = prod_rev.multiply(&reflection(&spec, beta).unwrap()).unwrap();
                }
                assert_eq!(prod_rev, sigma);
                // At most one support root per column and per row.
                for k in 1..=n {
                    let col = crate::roots::column_set(&spec, k).unwrap();
                    assert!(supp.iter().filter(|r| col.contains(r)).count() <= 1);
                }
                for k in 1..=n as i64 {
                    for key in [k, -k] {
                        let row = crate::roots::row_set(&spec, key).unwrap();
                        assert!(supp.iter().filter(|r| row.contains(r)).count() <= 1);
                    }
                }
            }
        }
    }

    #[test]
    fn parabolic_subsystem_of_d4() {
        let spec = RootSystemSpec::new(Family::D, 4).unwrap();
        // The A1 x A1 subsystem generated by e1-e2 and e3-e4.
        let sub = RootSystem::parabolic(
            spec,
            vec![Root::eps_minus(1, 2, 4), Root::eps_minus(3, 4, 4)],
        )
        .unwrap();
        assert_eq!(sub.positive_roots().len(), 2);
        let w = dperm(&[2, 1, 4, 3]);
        assert_eq!(sub.length(&w), 2);
        // Full D4 length of the same element differs from the subsystem length
        // only if the element leaves the subgroup; here it is 2 in both.
        let full = d(4);
        assert_eq!(full.length(&w), 2);
    }

    #[test]
    fn display_round_trip() {
        let w = dperm(&[-2, 4, 1, -3]);
        assert_eq!(w.to_string(), "-2,4,1,-3");
        assert_eq!(
            SignedPermutation::parse_one_line(Family::D, "-2,4,1,-3").unwrap(),
            w
        );
        assert!(SignedPermutation::parse_one_line(Family::D, "-2,4,x").is_err());
    }
}
