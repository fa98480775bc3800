//! Homogeneous polynomials, graded ideals and Hilbert functions.
//!
//! Monomials of one degree are ordered by graded reverse lexicographic order
//! with `z1 > z2 > ... > zn`: for equal degrees, `a > b` when the last nonzero
//! entry of `a - b` is negative. [`monomials_of_degree`] lists a basis of
//! `R_d` in *decreasing* order, so for two variables in degree two the basis
//! is `z1^2, z1 z2, z2^2`.
//!
//! `H_I(d) = dim I_d` is computed as the exact rank of the matrix whose rows
//! are the products `m * g` of every generator `g` of degree `e <= d` with
//! every monomial `m` of degree `d - e`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binom::{binom, shift_apply, Shift};
use crate::linalg::{rank, rank_mod_prime, LARGE_PRIMES};
use crate::scalar::Coefficient;
use crate::{Error, Ideal, Result};

/// Exponent vector of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    /// The variable `z_{j+1}` (zero-based `j`).
    pub fn var(n_vars: usize, j: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[j] = 1;
        Monomial(e)
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n_vars(), other.n_vars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Pure lexicographic comparison (`z1 > z2 > ...`), ignoring degree.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    // smaller trailing exponent wins
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of degree `d` in `n_vars` variables, in decreasing grevlex order.
pub fn monomials_of_degree(n_vars: usize, d: u32) -> Vec<Monomial> {
    fn fill(prefix: &mut Vec<u32>, left: usize, rem: u32, out: &mut Vec<Monomial>) {
        if left == 1 {
            prefix.push(rem);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=rem).rev() {
            prefix.push(e);
            fill(prefix, left - 1, rem - e, out);
            prefix.pop();
        }
    }
    if n_vars == 0 {
        return if d == 0 { vec![Monomial(Vec::new())] } else { Vec::new() };
    }
    let mut out = Vec::new();
    fill(&mut Vec::with_capacity(n_vars), n_vars, d, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Number of monomials of degree `d` in `n_vars` variables, `C(n_vars - 1 + d, d)`.
pub fn space_dim(n_vars: usize, d: u32) -> u64 {
    binom(n_vars as i64 - 1 + d as i64, d as i64)
        .to_u64()
        .expect("dimension fits in u64")
}

/// Position of each monomial in a basis list.
pub fn basis_index(basis: &[Monomial]) -> HashMap<Monomial, usize> {
    basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()
}

/// Homogeneous polynomial stored as a sparse map from monomial to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogPoly<F> {
    n_vars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Coefficient> HomogPoly<F> {
    pub fn zero(n_vars: usize, degree: u32) -> Self {
        HomogPoly {
            n_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: Monomial, coeff: F) -> Self {
        let mut p = HomogPoly::zero(m.n_vars(), m.degree());
        if !coeff.is_zero() {
            p.terms.insert(m, coeff);
        }
        p
    }

    /// The single variable `z_{j+1}`.
    pub fn var(n_vars: usize, j: usize) -> Self {
        HomogPoly::monomial(Monomial::var(n_vars, j), F::one())
    }

    /// Builds a polynomial of the given degree, summing repeated monomials
    /// and dropping zero coefficients.
    pub fn from_terms(n_vars: usize, degree: u32, terms: impl IntoIterator<Item = (Monomial, F)>) -> Result<Self> {
        let mut p = HomogPoly::zero(n_vars, degree);
        for (m, c) in terms {
            if m.n_vars() != n_vars {
                return Err(Error::VariableMismatch(n_vars, m.n_vars()));
            }
            if m.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: m.degree(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// `Some(m)` if this is a nonzero multiple of the single monomial `m`.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.len() {
            1 => self.terms.keys().next(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return HomogPoly::zero(self.n_vars, self.degree);
        }
        HomogPoly {
            n_vars: self.n_vars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = HomogPoly {
            n_vars: self.n_vars,
            degree,
            terms: self.terms.clone(),
        };
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        HomogPoly {
            n_vars: self.n_vars,
            degree: self.degree + m.degree(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = HomogPoly::zero(self.n_vars, self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x.clone() * y.clone());
            }
        }
        Ok(out)
    }

    /// Coefficient vector with respect to an indexed basis of the same degree.
    pub fn coefficients(&self, index: &HashMap<Monomial, usize>) -> Vec<F> {
        let mut row = vec![F::zero(); index.len()];
        for (m, c) in &self.terms {
            row[index[m]] = c.clone();
        }
        row
    }

    pub fn map_coeffs<G: Coefficient>(&self, f: impl Fn(&F) -> G) -> HomogPoly<G> {
        HomogPoly {
            n_vars: self.n_vars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let g = f(c);
                    (!g.is_zero()).then(|| (m.clone(), g))
                })
                .collect(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::VariableMismatch(self.n_vars, other.n_vars));
        }
        Ok(())
    }
}

/// Exact product of two homogeneous polynomials.
pub fn poly_multiply<F: Coefficient>(f: &HomogPoly<F>, g: &HomogPoly<F>) -> Result<HomogPoly<F>> {
    f.mul(g)
}

/// Homogeneous ideal given by generators; no generators means the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdeal<F> {
    n_vars: usize,
    generators: Vec<HomogPoly<F>>,
}

impl<F: Coefficient> GradedIdeal<F> {
    /// Zero generators are dropped.
    pub fn new(n_vars: usize, generators: Vec<HomogPoly<F>>) -> Result<Self> {
        if n_vars == 0 {
            return Err(Error::Precondition("an ideal needs at least one variable".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.n_vars() != n_vars) {
            return Err(Error::VariableMismatch(n_vars, g.n_vars()));
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(GradedIdeal { n_vars, generators })
    }

    pub fn zero(n_vars: usize) -> Self {
        GradedIdeal {
            n_vars,
            generators: Vec::new(),
        }
    }

    /// Monomial ideal with unit coefficients.
    pub fn monomial(n_vars: usize, monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        Self::new(
            n_vars,
            monomials
                .into_iter()
                .map(|m| HomogPoly::monomial(m, F::one()))
                .collect(),
        )
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn generators(&self) -> &[HomogPoly<F>] {
        &self.generators
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.as_monomial().is_some())
    }

    /// Rows spanning `I_d` in the basis `monomials_of_degree(n_vars, d)`.
    pub fn graded_piece_rows(&self, d: u32) -> Vec<Vec<F>> {
        let basis = monomials_of_degree(self.n_vars, d);
        let index = basis_index(&basis);
        let mut multipliers: HashMap<u32, Vec<Monomial>> = HashMap::new();
        let mut rows = Vec::new();
        for g in self.generators.iter().filter(|g| g.degree() <= d) {
            let ms = multipliers
                .entry(d - g.degree())
                .or_insert_with_key(|&e| monomials_of_degree(self.n_vars, e));
            for m in ms.iter() {
                rows.push(g.mul_monomial(m).coefficients(&index));
            }
        }
        rows
    }
}

/// `H_I(d) = dim I_d`, by exact fraction-free elimination.
pub fn graded_piece_dim<F: Coefficient>(ideal: &GradedIdeal<F>, d: u32) -> u64 {
    rank(&ideal.graded_piece_rows(d)) as u64
}

/// Ranks of the degree-`d` matrix modulo each of `primes` (`None` for a prime
/// dividing some denominator).
pub fn graded_piece_dim_mod_primes(ideal: &Ideal, d: u32, primes: &[u64]) -> Vec<Option<u64>> {
    let rows = ideal.graded_piece_rows(d);
    primes
        .iter()
        .map(|&p| rank_mod_prime(&rows, p).map(|r| r as u64))
        .collect()
}

/// How Hilbert function values are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMode {
    /// Fraction-free elimination over the rationals.
    #[default]
    Exact,
    /// Elimination modulo three large primes; accepted when all three agree,
    /// otherwise recomputed exactly.
    ModularChecked,
}

/// `H_I(d)` for a rational ideal under the chosen rank mode.
pub fn graded_piece_dim_with(ideal: &Ideal, d: u32, mode: RankMode) -> u64 {
    match mode {
        RankMode::Exact => graded_piece_dim(ideal, d),
        RankMode::ModularChecked => {
            let ranks = graded_piece_dim_mod_primes(ideal, d, &LARGE_PRIMES[..3]);
            match ranks.as_slice() {
                [Some(a), Some(b), Some(c)] if a == b && b == c => *a,
                _ => graded_piece_dim(ideal, d),
            }
        }
    }
}

/// One value of the Hilbert functions of `I` and `R/I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertRecord {
    pub degree: u32,
    pub h_ideal: u64,
    pub h_quotient: u64,
}

impl HilbertRecord {
    fn new(n_vars: usize, degree: u32, h_ideal: u64) -> Self {
        let total = space_dim(n_vars, degree);
        debug_assert!(h_ideal <= total);
        HilbertRecord {
            degree,
            h_ideal,
            h_quotient: total - h_ideal,
        }
    }
}

pub fn hilbert_record<F: Coefficient>(ideal: &GradedIdeal<F>, d: u32) -> HilbertRecord {
    HilbertRecord::new(ideal.n_vars(), d, graded_piece_dim(ideal, d))
}

/// `H_I(d)` and `H_{R/I}(d)` for `0 <= d <= d_max`; degrees are eliminated in parallel.
pub fn hilbert_function<F: Coefficient>(ideal: &GradedIdeal<F>, d_max: u32) -> Vec<HilbertRecord> {
    (0..=d_max).into_par_iter().map(|d| hilbert_record(ideal, d)).collect()
}

pub fn hilbert_function_with(ideal: &Ideal, d_max: u32, mode: RankMode) -> Vec<HilbertRecord> {
    (0..=d_max)
        .into_par_iter()
        .map(|d| HilbertRecord::new(ideal.n_vars(), d, graded_piece_dim_with(ideal, d, mode)))
        .collect()
}

/// Largest `H_{R/I}(d+1)` allowed given `H_{R/I}(d) = h_d`: `h_d_(d)|_1^1`.
pub fn macaulay_bound_quotient(h_d: &BigUint, d: u32) -> BigUint {
    assert!(d >= 1, "quotient bound needs d >= 1");
    shift_apply(h_d, d, Shift::new(1, 1))
}

/// Smallest `H_I(d+1)` allowed given `H_I(d) = h_d`: `h_d_(n-1)|_0^1`.
/// Independent of `d`.
pub fn macaulay_bound_ideal(h_d: &BigUint, n_vars: usize) -> BigUint {
    assert!(n_vars >= 2, "ideal bound needs at least two variables");
    shift_apply(h_d, (n_vars - 1) as u32, Shift::new(0, 1))
}

/// Largest `H_I(d)` allowed given `H_I(d+1) = h_next`: `h_next_(n-1)|_0^{-1}`.
pub fn macaulay_reverse_bound_ideal(h_next: &BigUint, n_vars: usize) -> BigUint {
    assert!(n_vars >= 2, "ideal bound needs at least two variables");
    shift_apply(h_next, (n_vars - 1) as u32, Shift::new(0, -1))
}

/// Outcome of the three Macaulay checks between degrees `d` and `d + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayCheck {
    pub degree: u32,
    pub h_ideal: u64,
    pub h_ideal_next: u64,
    pub h_quotient: u64,
    pub h_quotient_next: u64,
    /// `H_I(d)_(n-1)|_0^1`, lower bound for `H_I(d+1)`.
    #[serde(with = "crate::io::decimal")]
    pub ideal_bound: BigUint,
    /// `H_{R/I}(d)_(d)|_1^1`, upper bound for `H_{R/I}(d+1)`.
    #[serde(with = "crate::io::decimal")]
    pub quotient_bound: BigUint,
    /// `H_I(d+1)_(n-1)|_0^{-1}`, upper bound for `H_I(d)`.
    #[serde(with = "crate::io::decimal")]
    pub reverse_bound: BigUint,
    pub forward_ok: bool,
    pub quotient_ok: bool,
    pub reverse_ok: bool,
}

impl MacaulayCheck {
    pub fn all_ok(&self) -> bool {
        self.forward_ok && self.quotient_ok && self.reverse_ok
    }
}

/// Evaluates the checks on consecutive records of an `n_vars`-variable ideal.
/// Records must be indexed by degree starting at 0.
pub fn macaulay_checks(records: &[HilbertRecord], n_vars: usize) -> Vec<MacaulayCheck> {
    records
        .windows(2)
        .filter(|w| w[0].degree >= 1)
        .map(|w| {
            let (cur, next) = (w[0], w[1]);
            let ideal_bound = macaulay_bound_ideal(&cur.h_ideal.into(), n_vars);
            let quotient_bound = macaulay_bound_quotient(&cur.h_quotient.into(), cur.degree);
            let reverse_bound = macaulay_reverse_bound_ideal(&next.h_ideal.into(), n_vars);
            MacaulayCheck {
                degree: cur.degree,
                h_ideal: cur.h_ideal,
                h_ideal_next: next.h_ideal,
                h_quotient: cur.h_quotient,
                h_quotient_next: next.h_quotient,
                forward_ok: BigUint::from(next.h_ideal) >= ideal_bound,
                quotient_ok: BigUint::from(next.h_quotient) <= quotient_bound,
                reverse_ok: BigUint::from(cur.h_ideal) <= reverse_bound,
                ideal_bound,
                quotient_bound,
                reverse_bound,
            }
        })
        .collect()
}

/// Runs the three checks for every `1 <= d < d_max`.
pub fn verify_macaulay<F: Coefficient>(ideal: &GradedIdeal<F>, d_max: u32) -> Result<Vec<MacaulayCheck>> {
    check_verify_args(ideal.n_vars(), d_max)?;
    Ok(macaulay_checks(&hilbert_function(ideal, d_max), ideal.n_vars()))
}

pub fn verify_macaulay_with(ideal: &Ideal, d_max: u32, mode: RankMode) -> Result<Vec<MacaulayCheck>> {
    check_verify_args(ideal.n_vars(), d_max)?;
    Ok(macaulay_checks(
        &hilbert_function_with(ideal, d_max, mode),
        ideal.n_vars(),
    ))
}

fn check_verify_args(n_vars: usize, d_max: u32) -> Result<()> {
    if n_vars < 2 {
        return Err(Error::Precondition(
            "Macaulay checks need at least two variables".into(),
        ));
    }
    if d_max < 1 {
        return Err(Error::Precondition("d_max must be at least 1".into()));
    }
    Ok(())
}

/// For every split `A + B = C(n-1+d, d)`, checks
/// `A_(n-1)|_0^1 + B_(d)|_1^1 = C(n+d, d+1)`.
pub fn equivalence_bridge_check(n_vars: usize, d: u32) -> bool {
    assert!(n_vars >= 2 && d >= 1, "bridge needs n_vars >= 2 and d >= 1");
    let m = (n_vars - 1) as u32;
    let total = binom(m as i64 + d as i64, d as i64);
    let target = binom(n_vars as i64 + d as i64, d as i64 + 1);
    let mut a = BigUint::zero();
    while a <= total {
        let b = &total - &a;
        let lhs = shift_apply(&a, m, Shift::new(0, 1)) + shift_apply(&b, d, Shift::new(1, 1));
        if lhs != target {
            return false;
        }
        a += 1u32;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;
    use crate::{Poly, Rational};

    fn mono(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    fn poly(terms: &[(i64, &[u32])]) -> Poly {
        let degree = terms[0].1.iter().sum();
        Poly::from_terms(
            terms[0].1.len(),
            degree,
            terms.iter().map(|&(c, e)| (mono(e), rational(c, 1))),
        )
        .unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn basis_order() {
        assert_eq!(
            monomials_of_degree(2, 2),
            vec![mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])]
        );
        assert_eq!(monomials_of_degree(3, 0), vec![mono(&[0, 0, 0])]);
        let b = monomials_of_degree(3, 2);
        assert_eq!(b.len(), 6);
        // grevlex: z1^2 > z1z2 > z2^2 > z1z3 > z2z3 > z3^2
        assert_eq!(
            b,
            vec![
                mono(&[2, 0, 0]),
                mono(&[1, 1, 0]),
                mono(&[0, 2, 0]),
                mono(&[1, 0, 1]),
                mono(&[0, 1, 1]),
                mono(&[0, 0, 2])
            ]
        );
    }

    #[test]
    fn basis_sizes() {
        for n in 1..5 {
            for d in 0..6 {
                assert_eq!(monomials_of_degree(n, d).len() as u64, space_dim(n, d));
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let z1 = Poly::var(2, 0);
        let z2 = Poly::var(2, 1);
        assert_eq!(poly_multiply(&z1, &z2).unwrap(), poly(&[(1, &[1, 1])]));
        let one = Poly::monomial(Monomial::one(2), Rational::from_integer(1.into()));
        let f = poly(&[(3, &[2, 0]), (-1, &[0, 2])]);
        assert_eq!(poly_multiply(&f, &one).unwrap(), f);
        let sum = poly(&[(1, &[1, 0]), (1, &[0, 1])]);
        let diff = poly(&[(1, &[1, 0]), (-1, &[0, 1])]);
        assert_eq!(
            poly_multiply(&sum, &diff).unwrap(),
            poly(&[(1, &[2, 0]), (-1, &[0, 2])])
        );
    }

    #[test]
    fn multiply_rejects_variable_mismatch() {
        let a = Poly::var(2, 0);
        let b = Poly::var(3, 0);
        assert_eq!(poly_multiply(&a, &b), Err(Error::VariableMismatch(2, 3)));
    }

    #[test]
    fn from_terms_validates_degree() {
        let r = Poly::from_terms(2, 2, [(mono(&[1, 0]), rational(1, 1))]);
        assert_eq!(r, Err(Error::DegreeMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn cancellation_leaves_tagged_zero() {
        let p = Poly::from_terms(
            2,
            3,
            [(mono(&[3, 0]), rational(1, 2)), (mono(&[3, 0]), rational(-1, 2))],
        )
        .unwrap();
        assert!(p.is_zero());
        assert_eq!(p.degree(), 3);
    }

    #[test]
    fn graded_piece_examples() {
        let i = Ideal::monomial(2, [mono(&[1, 0])]).unwrap();
        assert_eq!(graded_piece_dim(&i, 3), 3);
        assert_eq!(graded_piece_dim(&Ideal::zero(3), 4), 0);
        let full = Ideal::monomial(2, [mono(&[1, 0]), mono(&[0, 1])]).unwrap();
        assert_eq!(graded_piece_dim(&full, 2), 3);
    }

    #[test]
    fn dependent_generators() {
        // (z1 + z2, z1 - z2, z1) has I_1 of dimension 2
        let i = Ideal::new(
            2,
            vec![
                poly(&[(1, &[1, 0]), (1, &[0, 1])]),
                poly(&[(1, &[1, 0]), (-1, &[0, 1])]),
                poly(&[(1, &[1, 0])]),
            ],
        )
        .unwrap();
        assert_eq!(graded_piece_dim(&i, 1), 2);
        assert_eq!(graded_piece_dim(&i, 0), 0);
    }

    #[test]
    fn hilbert_record_examples() {
        let r = hilbert_record(&Ideal::monomial(2, [mono(&[1, 0])]).unwrap(), 2);
        assert_eq!((r.h_ideal, r.h_quotient), (2, 1));
        let r = hilbert_record(&Ideal::zero(3), 2);
        assert_eq!((r.h_ideal, r.h_quotient), (0, 6));
        let r = hilbert_record(&Ideal::monomial(2, [mono(&[2, 0])]).unwrap(), 2);
        assert_eq!((r.h_ideal, r.h_quotient), (1, 2));
    }

    #[test]
    fn bound_examples() {
        assert_eq!(macaulay_bound_quotient(&big(1), 2), big(1));
        assert_eq!(macaulay_bound_quotient(&big(0), 3), big(0));
        assert_eq!(macaulay_bound_quotient(&big(3), 1), big(6));
        assert_eq!(macaulay_bound_ideal(&big(2), 2), big(3));
        assert_eq!(macaulay_bound_ideal(&big(0), 5), big(0));
        assert_eq!(macaulay_bound_ideal(&big(3), 4), big(9));
        assert_eq!(macaulay_reverse_bound_ideal(&big(3), 2), big(2));
        assert_eq!(macaulay_reverse_bound_ideal(&big(0), 3), big(0));
    }

    #[test]
    fn reverse_bound_consistent_with_forward() {
        // 9 = C(4,3) + C(3,2) + C(2,1) at index 3, so 9_(3)|_0^{-1} = C(3,3) + C(2,2) + C(1,1) = 3.
        let rev = macaulay_reverse_bound_ideal(&big(9), 4);
        assert_eq!(rev, big(3));
        assert!(macaulay_bound_ideal(&rev, 4) <= big(9));
    }

    #[test]
    fn verify_examples() {
        let checks = verify_macaulay(&Ideal::monomial(2, [mono(&[1, 0])]).unwrap(), 5).unwrap();
        assert_eq!(checks.len(), 4);
        assert!(checks.iter().all(MacaulayCheck::all_ok));
        assert_eq!(checks.iter().map(|c| c.h_ideal).collect::<Vec<_>>(), vec![1, 2, 3, 4]);

        assert!(verify_macaulay(&Ideal::zero(2), 5)
            .unwrap()
            .iter()
            .all(MacaulayCheck::all_ok));

        let i = Ideal::monomial(2, [mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])]).unwrap();
        let checks = verify_macaulay(&i, 4).unwrap();
        assert!(checks.iter().all(MacaulayCheck::all_ok));
        for c in checks.iter().filter(|c| c.degree >= 2) {
            assert_eq!(c.h_ideal, c.degree as u64 + 1);
        }
    }

    #[test]
    fn verify_rejects_single_variable() {
        assert!(verify_macaulay(&Ideal::zero(1), 3).is_err());
        assert!(verify_macaulay(&Ideal::zero(2), 0).is_err());
    }

    #[test]
    fn bridge_examples() {
        assert!(equivalence_bridge_check(2, 1));
        assert!(equivalence_bridge_check(3, 2));
        assert!(equivalence_bridge_check(5, 4));
    }

    #[test]
    fn modular_mode_matches_exact() {
        let i = Ideal::new(
            3,
            vec![
                poly(&[(2, &[1, 1, 0]), (-3, &[0, 0, 2])]),
                poly(&[(1, &[2, 0, 0]), (5, &[0, 1, 1])]),
            ],
        )
        .unwrap();
        for d in 0..6 {
            assert_eq!(
                graded_piece_dim_with(&i, d, RankMode::ModularChecked),
                graded_piece_dim(&i, d)
            );
        }
    }
}
