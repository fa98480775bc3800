//! Bihomogeneous Hermitian forms.
//!
//! A form `M(z, z̄)` of bidegree `(d, d)` in `n` variables is stored as its
//! Hermitian coefficient matrix with respect to the degree-`d` monomial basis
//! of [`monomials_of_degree`]: `M = Z_d^H · matrix · Z_d`, so the entry at
//! `(α, β)` is the coefficient of `z̄^α z^β`.
//!
//! Rank is computed by fraction-free elimination. Signature and the
//! decomposition into signed squared norms come from the same exact
//! congruence (rank-one) reduction: pick `x` with `α = x^H A x ≠ 0`, split off
//! `(1/α) (A x)(A x)^H` and continue on the remainder, whose rank is one less.
//! A nonzero diagonal entry gives `x = e_k`; if the diagonal vanishes, an
//! entry `a_ij ≠ 0` gives `x = e_i + conj(a_ij) e_j` with `α = 2|a_ij|^2`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::binom::{binom, shift_u64, Shift};
use crate::linalg::rank;
use crate::poly::{basis_index, graded_piece_dim, monomials_of_degree, GradedIdeal, HomogPoly, Monomial};
use crate::scalar::{sign, Coefficient};
use crate::{Error, GaussPoly, GaussianRational, Rational, Result};

/// `(p, q)`: numbers of positive and negative eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SignaturePair {
    pub p: u64,
    pub q: u64,
}

impl SignaturePair {
    pub fn rank(&self) -> u64 {
        self.p + self.q
    }
}

impl std::ops::Add for SignaturePair {
    type Output = SignaturePair;

    fn add(self, rhs: Self) -> Self {
        SignaturePair {
            p: self.p + rhs.p,
            q: self.q + rhs.q,
        }
    }
}

impl fmt::Display for SignaturePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// `|z_1|^2 + ... + |z_s|^2 - |z_{s+1}|^2 - ... - |z_{s+t}|^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedNorm {
    pub s: usize,
    pub t: usize,
}

impl SignedNorm {
    pub fn new(s: usize, t: usize) -> Result<Self> {
        if s + t == 0 {
            return Err(Error::Precondition("signed norm needs (s, t) != (0, 0)".into()));
        }
        Ok(SignedNorm { s, t })
    }

    /// The Euclidean norm `‖z‖^2` in `n` variables.
    pub fn euclidean(n_vars: usize) -> Self {
        SignedNorm { s: n_vars, t: 0 }
    }

    pub fn n_vars(&self) -> usize {
        self.s + self.t
    }

    fn sign_of(&self, j: usize) -> i8 {
        if j < self.s {
            1
        } else {
            -1
        }
    }
}

/// One term `sign · weight · |poly|^2` of a decomposition; `weight > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareTerm {
    pub sign: i8,
    pub weight: Rational,
    pub poly: GaussPoly,
}

impl SquareTerm {
    pub fn positive(poly: GaussPoly) -> Self {
        SquareTerm {
            sign: 1,
            weight: Rational::one(),
            poly,
        }
    }

    pub fn negative(poly: GaussPoly) -> Self {
        SquareTerm {
            sign: -1,
            weight: Rational::one(),
            poly,
        }
    }
}

/// Bihomogeneous Hermitian form of bidegree `(d, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianBiform {
    n_vars: usize,
    half_degree: u32,
    matrix: Vec<Vec<GaussianRational>>,
}

impl HermitianBiform {
    pub fn zero(n_vars: usize, half_degree: u32) -> Self {
        let dim = monomials_of_degree(n_vars, half_degree).len();
        HermitianBiform {
            n_vars,
            half_degree,
            matrix: vec![vec![GaussianRational::zero(); dim]; dim],
        }
    }

    /// Validates dimensions and Hermitian symmetry.
    pub fn from_matrix(n_vars: usize, half_degree: u32, matrix: Vec<Vec<GaussianRational>>) -> Result<Self> {
        if n_vars == 0 {
            return Err(Error::Precondition("a form needs at least one variable".into()));
        }
        let dim = monomials_of_degree(n_vars, half_degree).len();
        if matrix.len() != dim {
            return Err(Error::Precondition(format!("matrix must be {dim}x{dim}")));
        }
        check_hermitian(&matrix)?;
        Ok(HermitianBiform {
            n_vars,
            half_degree,
            matrix,
        })
    }

    /// Real diagonal form `Σ c_k |z^{α_k}|^2` over the basis.
    pub fn diagonal(n_vars: usize, half_degree: u32, diag: &[Rational]) -> Result<Self> {
        let mut b = HermitianBiform::zero(n_vars, half_degree);
        if diag.len() != b.dim() {
            return Err(Error::Precondition(format!("diagonal must have {} entries", b.dim())));
        }
        for (k, c) in diag.iter().enumerate() {
            b.matrix[k][k] = GaussianRational::from_rational(c.clone());
        }
        Ok(b)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn half_degree(&self) -> u32 {
        self.half_degree
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<GaussianRational>] {
        &self.matrix
    }

    pub fn basis(&self) -> Vec<Monomial> {
        monomials_of_degree(self.n_vars, self.half_degree)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Zero::is_zero)
    }

    /// Nonzero entries as `(α, β, coefficient of z̄^α z^β)`.
    pub fn entries(&self) -> Vec<(Monomial, Monomial, GaussianRational)> {
        let basis = self.basis();
        let mut out = Vec::new();
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push((basis[i].clone(), basis[j].clone(), c.clone()));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(HermitianBiform { matrix, ..self.clone() })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let c = GaussianRational::from_rational(c.clone());
        let matrix = self.matrix.iter().map(|r| r.iter().map(|x| x * &c).collect()).collect();
        HermitianBiform { matrix, ..self.clone() }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::VariableMismatch(self.n_vars, other.n_vars));
        }
        if self.half_degree != other.half_degree {
            return Err(Error::DegreeMismatch {
                expected: self.half_degree,
                found: other.half_degree,
            });
        }
        Ok(())
    }

    /// Product of two forms; bidegrees add.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.n_vars != other.n_vars {
            return Err(Error::VariableMismatch(self.n_vars, other.n_vars));
        }
        let mut out = HermitianBiform::zero(self.n_vars, self.half_degree + other.half_degree);
        let index = basis_index(&out.basis());
        let lhs = self.entries();
        for (a2, b2, y) in other.entries() {
            for (a1, b1, x) in &lhs {
                out.matrix[index[&a1.mul(&a2)]][index[&b1.mul(&b2)]] += x * &y;
            }
        }
        Ok(out)
    }

    /// `sign · weight · |f|^2` as a form.
    pub fn from_square(term: &SquareTerm) -> Self {
        let f = &term.poly;
        let mut out = HermitianBiform::zero(f.n_vars(), f.degree());
        let index = basis_index(&out.basis());
        let w = GaussianRational::from_rational(term.weight.clone() * Rational::from_integer(term.sign.into()));
        for (a, x) in f.terms() {
            for (b, y) in f.terms() {
                out.matrix[index[a]][index[b]] += x.conj() * y.clone() * w.clone();
            }
        }
        out
    }

    pub fn rank(&self) -> u64 {
        rank(&self.matrix) as u64
    }

    pub fn signature(&self) -> SignaturePair {
        signature_unchecked(&self.matrix)
    }

    /// `M = Σ sign_i · weight_i · |m_i|^2` with linearly independent `m_i`.
    pub fn decompose(&self) -> Vec<SquareTerm> {
        let basis = self.basis();
        let mut out = Vec::new();
        congruence_reduce(&self.matrix, |alpha, v| {
            // (1/α) v v^H = α u u^H with u = v/α, and Z^H u u^H Z = |Σ conj(u_β) z^β|^2
            let inv = GaussianRational::from_rational(alpha.recip());
            let poly = HomogPoly::from_terms(
                self.n_vars,
                self.half_degree,
                basis.iter().cloned().zip(v.iter().map(|c| c.conj() * inv.clone())),
            )
            .expect("basis monomials have the form's degree");
            out.push(SquareTerm {
                sign: sign(alpha),
                weight: alpha.abs(),
                poly,
            });
        });
        out
    }

    /// `M · ‖z‖^2_{s,t}`, of bidegree `(d+1, d+1)`.
    pub fn multiply_signed_norm(&self, norm: SignedNorm) -> Result<Self> {
        if norm.n_vars() != self.n_vars {
            return Err(Error::Precondition(format!(
                "signed norm ({}, {}) does not match {} variables",
                norm.s, norm.t, self.n_vars
            )));
        }
        let mut out = HermitianBiform::zero(self.n_vars, self.half_degree + 1);
        let index = basis_index(&out.basis());
        for (a, b, c) in self.entries() {
            for j in 0..self.n_vars {
                let e = Monomial::var(self.n_vars, j);
                let slot = &mut out.matrix[index[&a.mul(&e)]][index[&b.mul(&e)]];
                if norm.sign_of(j) > 0 {
                    *slot += &c;
                } else {
                    *slot -= &c;
                }
            }
        }
        Ok(out)
    }

    /// `M · ‖z‖^{2l}`.
    pub fn multiply_norm_power(&self, l: u32) -> Self {
        let norm = SignedNorm::euclidean(self.n_vars);
        (0..l).fold(self.clone(), |acc, _| {
            acc.multiply_signed_norm(norm).expect("euclidean norm matches")
        })
    }

    /// Whether the form is a sum of squared norms, i.e. its matrix is positive semidefinite.
    pub fn is_sum_of_squares(&self) -> bool {
        self.signature().q == 0
    }
}

/// Reassembles `Σ sign_i weight_i |m_i|^2`; all polynomials must share `n_vars` and degree.
pub fn recompose(n_vars: usize, half_degree: u32, terms: &[SquareTerm]) -> Result<HermitianBiform> {
    terms
        .iter()
        .try_fold(HermitianBiform::zero(n_vars, half_degree), |acc, t| {
            if t.poly.n_vars() != n_vars {
                return Err(Error::VariableMismatch(n_vars, t.poly.n_vars()));
            }
            if t.poly.degree() != half_degree && !t.poly.is_zero() {
                return Err(Error::DegreeMismatch {
                    expected: half_degree,
                    found: t.poly.degree(),
                });
            }
            if t.poly.is_zero() {
                return Ok(acc);
            }
            acc.add(&HermitianBiform::from_square(t))
        })
}

/// Inertia of an arbitrary square Hermitian matrix.
pub fn matrix_signature(matrix: &[Vec<GaussianRational>]) -> Result<SignaturePair> {
    check_hermitian(matrix)?;
    Ok(signature_unchecked(matrix))
}

fn check_hermitian(matrix: &[Vec<GaussianRational>]) -> Result<()> {
    let dim = matrix.len();
    if matrix.iter().any(|r| r.len() != dim) {
        return Err(Error::Precondition(format!("matrix must be {dim}x{dim}")));
    }
    for i in 0..dim {
        for j in i..dim {
            if matrix[i][j] != matrix[j][i].conj() {
                return Err(Error::NotHermitian(i, j));
            }
        }
    }
    Ok(())
}

fn signature_unchecked(matrix: &[Vec<GaussianRational>]) -> SignaturePair {
    let mut sig = SignaturePair::default();
    congruence_reduce(matrix, |alpha, _| {
        if alpha.is_positive() {
            sig.p += 1;
        } else {
            sig.q += 1;
        }
    });
    sig
}

/// Exact congruence reduction of a Hermitian matrix. Calls `emit(α, v)` once
/// per rank-one piece `(1/α) v v^H`; there are exactly `rank` pieces and the
/// pieces sum to the input.
fn congruence_reduce(matrix: &[Vec<GaussianRational>], mut emit: impl FnMut(&Rational, &[GaussianRational])) {
    let mut a = matrix.to_vec();
    let n = a.len();
    loop {
        let x: Vec<GaussianRational> = if let Some(k) = (0..n).find(|&k| !a[k][k].is_zero()) {
            unit(n, k, None)
        } else if let Some((i, j)) = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        {
            unit(n, i, Some((j, a[i][j].conj())))
        } else {
            break;
        };
        let v: Vec<GaussianRational> = a
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&x)
                    .filter(|(_, xj)| !xj.is_zero())
                    .map(|(r, xj)| r * xj)
                    .sum()
            })
            .collect();
        let alpha: GaussianRational = x.iter().zip(&v).map(|(xi, vi)| xi.conj() * vi).sum();
        debug_assert!(alpha.im.is_zero() && !alpha.re.is_zero());
        let inv = GaussianRational::from_rational(alpha.re.recip());
        for (r, vr) in v.iter().enumerate() {
            if vr.is_zero() {
                continue;
            }
            let scaled = vr * &inv;
            for (c, vc) in v.iter().enumerate() {
                if !vc.is_zero() {
                    a[r][c] -= &scaled * vc.conj();
                }
            }
        }
        emit(&alpha.re, &v);
    }
}

fn unit(n: usize, k: usize, extra: Option<(usize, GaussianRational)>) -> Vec<GaussianRational> {
    let mut x = vec![GaussianRational::zero(); n];
    x[k] = GaussianRational::one();
    if let Some((j, c)) = extra {
        x[j] = c;
    }
    x
}

pub fn biform_from_terms(
    n_vars: usize,
    half_degree: u32,
    terms: &[(Monomial, Monomial, GaussianRational)],
) -> Result<HermitianBiform> {
    let mut b = HermitianBiform::zero(n_vars, half_degree);
    let index = basis_index(&b.basis());
    for (a, c, x) in terms {
        for m in [a, c] {
            if m.n_vars() != n_vars {
                return Err(Error::VariableMismatch(n_vars, m.n_vars()));
            }
            if m.degree() != half_degree {
                return Err(Error::DegreeMismatch {
                    expected: half_degree,
                    found: m.degree(),
                });
            }
        }
        b.matrix[index[a]][index[c]] += x;
    }
    HermitianBiform::from_matrix(n_vars, half_degree, b.matrix)
}

pub fn biform_rank(f: &HermitianBiform) -> u64 {
    f.rank()
}

pub fn biform_signature(f: &HermitianBiform) -> SignaturePair {
    f.signature()
}

pub fn decompose(f: &HermitianBiform) -> Vec<SquareTerm> {
    f.decompose()
}

pub fn multiply_signed_norm(m: &HermitianBiform, norm: SignedNorm) -> Result<HermitianBiform> {
    m.multiply_signed_norm(norm)
}

pub fn multiply_norm_power(m: &HermitianBiform, l: u32) -> HermitianBiform {
    m.multiply_norm_power(l)
}

pub fn is_sum_of_squares(f: &HermitianBiform) -> bool {
    f.is_sum_of_squares()
}

/// Smallest `1 <= l <= l_max` with `M ‖z‖^{2l}` a sum of squared norms.
pub fn find_min_sos_exponent(m: &HermitianBiform, l_max: u32) -> Option<u32> {
    let norm = SignedNorm::euclidean(m.n_vars());
    let mut f = m.clone();
    for l in 1..=l_max {
        f = f.multiply_signed_norm(norm).expect("euclidean norm matches");
        if f.is_sum_of_squares() {
            return Some(l);
        }
    }
    None
}

/// Closed interval of integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "crate::io::decimal")]
    pub low: BigInt,
    #[serde(with = "crate::io::decimal")]
    pub high: BigInt,
}

impl Interval {
    pub fn new(low: impl Into<BigInt>, high: impl Into<BigInt>) -> Self {
        Interval {
            low: low.into(),
            high: high.into(),
        }
    }

    pub fn contains(&self, x: u64) -> bool {
        let x = BigInt::from(x);
        self.low <= x && x <= self.high
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.low, self.high)
    }
}

fn int(x: BigUint) -> BigInt {
    BigInt::from(x)
}

fn require_vars(n: usize) -> Result<u32> {
    if n < 2 {
        return Err(Error::Precondition("bounds need at least two variables".into()));
    }
    Ok((n - 1) as u32)
}

/// `C(n-1+l, l)`, the dimension of the degree-`l` monomials.
fn multiplier_dim(n: usize, l: u32) -> BigInt {
    int(binom(n as i64 - 1 + l as i64, l as i64))
}

/// `2 r_(n-1)|_0^1 - rn <= R <= rn` for the rank `R` of `M ‖z‖^2_{s,t}`.
pub fn rank_interval(r: u64, n: usize) -> Result<Interval> {
    let idx = require_vars(n)?;
    if r == 0 {
        return Err(Error::Precondition("rank bound needs r >= 1".into()));
    }
    let rn = BigInt::from(r) * n;
    Ok(Interval {
        low: 2 * int(shift_u64(r, idx, Shift::new(0, 1))) - &rn,
        high: rn,
    })
}

/// `rn - r(r-1) <= R <= rn`, valid for `1 <= r <= n - 1`.
pub fn rank_interval_closed_form(r: u64, n: usize) -> Result<Interval> {
    require_vars(n)?;
    if r == 0 || r > n as u64 - 1 {
        return Err(Error::Precondition(format!(
            "closed form needs 1 <= r <= n - 1, got r = {r}, n = {n}"
        )));
    }
    let rn = BigInt::from(r) * n;
    Ok(Interval {
        low: &rn - BigInt::from(r) * (r - 1),
        high: rn,
    })
}

/// `r_(n-1)|_0^l / C(n-1+l, l)`, a lower bound for `p`.
pub fn p_lower_bound(r: u64, n: usize, l: u32) -> Result<Rational> {
    let idx = require_vars(n)?;
    Ok(Rational::new(
        int(shift_u64(r, idx, Shift::new(0, l as i64))),
        multiplier_dim(n, l),
    ))
}

/// `p C(n-1+l, l) - p - p_(n-1)|_{-1}^{l-1}`, an upper bound for `q`.
pub fn q_upper_bound(p: u64, n: usize, l: u32) -> Result<BigInt> {
    q_bound_with_shift(p, n, l, Shift::new(-1, l as i64 - 1))
}

/// Variant with the shift `|_{-l}^{l-1}`; agrees with [`q_upper_bound`] for `l = 1`.
pub fn q_upper_bound_alt_shift(p: u64, n: usize, l: u32) -> Result<BigInt> {
    q_bound_with_shift(p, n, l, Shift::new(-(l as i64), l as i64 - 1))
}

fn q_bound_with_shift(p: u64, n: usize, l: u32, shift: Shift) -> Result<BigInt> {
    let idx = require_vars(n)?;
    if l == 0 || p == 0 {
        return Err(Error::Precondition("q bound needs p >= 1 and l >= 1".into()));
    }
    Ok(BigInt::from(p) * multiplier_dim(n, l) - p - int(shift_u64(p, idx, shift)))
}

/// `(p+q)_(n-1)|_0^l - q C(n-1+l, l) <= R <= p C(n-1+l, l)`.
pub fn sos_rank_interval(p: u64, q: u64, n: usize, l: u32) -> Result<Interval> {
    let idx = require_vars(n)?;
    if p + q == 0 || l == 0 {
        return Err(Error::Precondition("interval needs p + q >= 1 and l >= 1".into()));
    }
    let c = multiplier_dim(n, l);
    Ok(Interval {
        low: int(shift_u64(p + q, idx, Shift::new(0, l as i64))) - BigInt::from(q) * &c,
        high: BigInt::from(p) * c,
    })
}

/// Rank of `M ‖z‖^2_{s,t}` against the interval for `r = rank(M)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCheck {
    pub r: u64,
    pub product_rank: u64,
    pub interval: Interval,
    pub ok: bool,
}

/// `None` when `M = 0` (the interval needs `r >= 1`) or `n < 2`.
pub fn verify_rank_interval(m: &HermitianBiform, norm: SignedNorm) -> Result<Option<RankCheck>> {
    let f = m.multiply_signed_norm(norm)?;
    let r = m.rank();
    if r == 0 || m.n_vars() < 2 {
        return Ok(None);
    }
    let interval = rank_interval(r, m.n_vars())?;
    let product_rank = f.rank();
    Ok(Some(RankCheck {
        r,
        ok: interval.contains(product_rank),
        product_rank,
        interval,
    }))
}

/// All bounds that apply when `M ‖z‖^{2l}` is a sum of squared norms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SosBoundsCheck {
    pub l: u32,
    pub signature: SignaturePair,
    pub product_rank: u64,
    #[serde(with = "crate::io::rational_str")]
    pub p_lower: Rational,
    pub p_ok: bool,
    #[serde(with = "crate::io::decimal")]
    pub q_upper: BigInt,
    pub q_ok: bool,
    /// Reported only; see [`q_upper_bound_alt_shift`].
    #[serde(with = "crate::io::decimal")]
    pub q_upper_alt_shift: BigInt,
    pub interval: Interval,
    pub interval_ok: bool,
    /// `p_(n-1)|_0^l <= R`, checked when `q = 0`.
    pub pure_sos_ok: Option<bool>,
}

impl SosBoundsCheck {
    pub fn all_ok(&self) -> bool {
        self.p_ok && self.q_ok && self.interval_ok && self.pure_sos_ok.unwrap_or(true)
    }
}

/// `None` when the bounds do not apply: `M = 0`, `n < 2`, or `M ‖z‖^{2l}` is not
/// a sum of squared norms.
pub fn verify_sos_bounds(m: &HermitianBiform, l: u32) -> Result<Option<SosBoundsCheck>> {
    let n = m.n_vars();
    if l == 0 {
        return Err(Error::Precondition("l must be at least 1".into()));
    }
    let f = m.multiply_norm_power(l);
    let signature = m.signature();
    if signature.rank() == 0 || n < 2 || !f.is_sum_of_squares() {
        return Ok(None);
    }
    let SignaturePair { p, q } = signature;
    let product_rank = f.rank();
    let p_lower = p_lower_bound(p + q, n, l)?;
    let q_upper = q_upper_bound(p, n, l)?;
    let interval = sos_rank_interval(p, q, n, l)?;
    let pure_sos_ok =
        (q == 0).then(|| BigUint::from(product_rank) >= shift_u64(p, (n - 1) as u32, Shift::new(0, l as i64)));
    Ok(Some(SosBoundsCheck {
        l,
        signature,
        product_rank,
        p_ok: Rational::from_integer(p.into()) >= p_lower,
        p_lower,
        q_ok: BigInt::from(q) <= q_upper,
        q_upper,
        q_upper_alt_shift: q_upper_bound_alt_shift(p, n, l)?,
        interval_ok: interval.contains(product_rank),
        interval,
        pure_sos_ok,
    }))
}

/// Checks, in degree `d + l`, that the ideals generated by the negative part and
/// by `h` lie inside the ideal generated by the positive part, given a witness
/// `(Σ m⁺ - Σ m⁻) ‖z‖^{2l} = Σ h`.
///
/// Fails with [`Error::InvalidWitness`] when the identity does not hold.
pub fn verify_ideal_containment(
    m_plus: &[SquareTerm],
    m_minus: &[SquareTerm],
    h: &[SquareTerm],
    l: u32,
) -> Result<bool> {
    let Some(first) = m_plus.iter().chain(m_minus).map(|t| &t.poly).find(|p| !p.is_zero()) else {
        return Err(Error::InvalidWitness("no nonzero generator in m".into()));
    };
    let (n, d) = (first.n_vars(), first.degree());
    if m_plus.iter().chain(h).any(|t| t.sign != 1) || m_minus.iter().any(|t| t.sign != -1) {
        return Err(Error::Precondition(
            "m⁺ and h terms must be positive, m⁻ terms negative".into(),
        ));
    }
    let all_m: Vec<SquareTerm> = m_plus.iter().chain(m_minus).cloned().collect();
    let lhs = recompose(n, d, &all_m)?.multiply_norm_power(l);
    let rhs = recompose(n, d + l, h)?;
    if lhs != rhs {
        return Err(Error::InvalidWitness(
            "(Σ|m⁺|² - Σ|m⁻|²)‖z‖^{2l} differs from Σ|h|²".into(),
        ));
    }
    let ideal = |terms: &[&[SquareTerm]]| {
        GradedIdeal::new(
            n,
            terms.iter().flat_map(|ts| ts.iter().map(|t| t.poly.clone())).collect(),
        )
    };
    let top = d + l;
    let plus = graded_piece_dim(&ideal(&[m_plus])?, top);
    let minus = graded_piece_dim(&ideal(&[m_minus])?, top);
    let plus_minus = graded_piece_dim(&ideal(&[m_plus, m_minus])?, top);
    let plus_h = graded_piece_dim(&ideal(&[m_plus, h])?, top);
    Ok(minus <= plus && plus_minus == plus && plus_h == plus)
}

/// Index of each monomial in the form's basis.
pub fn basis_lookup(f: &HermitianBiform) -> HashMap<Monomial, usize> {
    basis_index(&f.basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gaussian, gaussian_int, rational};

    fn mono(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    fn diag(n: usize, d: u32, entries: &[i64]) -> HermitianBiform {
        HermitianBiform::diagonal(n, d, &entries.iter().map(|&x| rational(x, 1)).collect::<Vec<_>>()).unwrap()
    }

    fn swap_form() -> HermitianBiform {
        // z1 z̄2 + z2 z̄1
        biform_from_terms(
            2,
            1,
            &[
                (mono(&[1, 0]), mono(&[0, 1]), gaussian_int(1)),
                (mono(&[0, 1]), mono(&[1, 0]), gaussian_int(1)),
            ],
        )
        .unwrap()
    }

    fn sig(p: u64, q: u64) -> SignaturePair {
        SignaturePair { p, q }
    }

    #[test]
    fn from_terms_examples() {
        let b = biform_from_terms(2, 1, &[(mono(&[1, 0]), mono(&[1, 0]), gaussian_int(1))]).unwrap();
        assert_eq!(b, diag(2, 1, &[1, 0]));
        assert_eq!(swap_form().signature(), sig(1, 1));
    }

    #[test]
    fn from_terms_rejects_non_hermitian() {
        let one_sided = biform_from_terms(2, 1, &[(mono(&[1, 0]), mono(&[0, 1]), gaussian_int(1))]);
        assert_eq!(one_sided, Err(Error::NotHermitian(0, 1)));
        let i = gaussian(rational(0, 1), rational(1, 1));
        let complex_diag = biform_from_terms(2, 1, &[(mono(&[1, 0]), mono(&[1, 0]), i)]);
        assert_eq!(complex_diag, Err(Error::NotHermitian(0, 0)));
        let wrong_degree = biform_from_terms(2, 1, &[(mono(&[2, 0]), mono(&[2, 0]), gaussian_int(1))]);
        assert!(matches!(wrong_degree, Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(HermitianBiform::zero(2, 1).rank(), 0);
        assert_eq!(diag(2, 1, &[1, -1]).rank(), 2);
        let f = diag(2, 1, &[1, 0]).multiply_norm_power(1);
        assert_eq!(f, diag(2, 2, &[1, 1, 0]));
        assert_eq!(f.rank(), 2);
    }

    #[test]
    fn signature_examples() {
        assert_eq!(diag(2, 1, &[1, -1]).signature(), sig(1, 1));
        assert_eq!(diag(2, 1, &[1, 1]).signature(), sig(2, 0));
        assert_eq!(HermitianBiform::zero(3, 2).signature(), sig(0, 0));
    }

    #[test]
    fn complex_off_diagonal_signature() {
        // [[1, i], [-i, 1]] is singular PSD: eigenvalues 0 and 2
        let i = gaussian(rational(0, 1), rational(1, 1));
        let m = HermitianBiform::from_matrix(2, 1, vec![vec![gaussian_int(1), i.clone()], vec![-i, gaussian_int(1)]])
            .unwrap();
        assert_eq!(m.signature(), sig(1, 0));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn decompose_examples() {
        let d = diag(2, 1, &[1, -1]).decompose();
        assert_eq!(d.len(), 2);
        assert_eq!((d[0].sign, d[1].sign), (1, -1));
        assert_eq!(d[0].poly, GaussPoly::var(2, 0));
        assert_eq!(d[1].poly, GaussPoly::var(2, 1));
        assert!(HermitianBiform::zero(2, 1).decompose().is_empty());

        let swap = swap_form();
        let terms = swap.decompose();
        assert_eq!(terms.iter().map(|t| t.sign).collect::<Vec<_>>(), vec![1, -1]);
        assert_eq!(recompose(2, 1, &terms).unwrap(), swap);
    }

    #[test]
    fn multiply_signed_norm_examples() {
        let m = diag(2, 1, &[1, 0]);
        let f = m.multiply_signed_norm(SignedNorm::new(2, 0).unwrap()).unwrap();
        assert_eq!(f, diag(2, 2, &[1, 1, 0]));
        assert!(HermitianBiform::zero(2, 1)
            .multiply_signed_norm(SignedNorm::new(1, 1).unwrap())
            .unwrap()
            .is_zero());
        let f = m.multiply_signed_norm(SignedNorm::new(1, 1).unwrap()).unwrap();
        assert_eq!(f, diag(2, 2, &[1, -1, 0]));
        assert_eq!(f.signature(), sig(1, 1));
        assert!(m.multiply_signed_norm(SignedNorm::new(2, 1).unwrap()).is_err());
    }

    #[test]
    fn multiply_norm_power_examples() {
        assert_eq!(diag(2, 1, &[1, 0]).multiply_norm_power(1).rank(), 2);
        assert!(HermitianBiform::zero(2, 1).multiply_norm_power(3).is_zero());
        // (|z1|^2 - |z2|^2)(|z1|^2 + |z2|^2) = |z1|^4 - |z2|^4
        let f = diag(2, 1, &[1, -1]).multiply_norm_power(1);
        assert_eq!(f, diag(2, 2, &[1, 0, -1]));
        assert_eq!(f.signature(), sig(1, 1));
        assert!(!f.is_sum_of_squares());
    }

    #[test]
    fn sum_of_squares_examples() {
        assert!(diag(2, 2, &[1, 1, 0]).is_sum_of_squares());
        assert!(!diag(2, 1, &[1, -1]).is_sum_of_squares());
    }

    #[test]
    fn min_sos_examples() {
        assert_eq!(find_min_sos_exponent(&diag(2, 1, &[1, 1]), 3), Some(1));
        assert_eq!(find_min_sos_exponent(&diag(2, 1, &[1, -1]), 5), None);
        // |z1|^4 - |z1 z2|^2 + |z2|^4 is positive on the sphere but not SOS itself
        let m = diag(2, 2, &[1, -1, 1]);
        assert!(!m.is_sum_of_squares());
        let l = find_min_sos_exponent(&m, 6).expect("positive on the sphere");
        assert!(l >= 1);
        assert!(m.multiply_norm_power(l).is_sum_of_squares());
    }

    #[test]
    fn rank_interval_examples() {
        assert_eq!(rank_interval(3, 4).unwrap(), Interval::new(6, 12));
        assert_eq!(rank_interval(1, 2).unwrap(), Interval::new(2, 2));
        assert!(rank_interval(0, 3).is_err());
    }

    #[test]
    fn closed_form_interval_examples() {
        assert_eq!(rank_interval_closed_form(3, 4).unwrap(), Interval::new(6, 12));
        assert_eq!(rank_interval_closed_form(1, 5).unwrap(), Interval::new(5, 5));
        assert!(rank_interval_closed_form(5, 4).is_err());
    }

    #[test]
    fn p_lower_bound_examples() {
        assert_eq!(p_lower_bound(3, 4, 1).unwrap(), rational(9, 4));
        assert_eq!(p_lower_bound(1, 2, 1).unwrap(), rational(1, 1));
        assert_eq!(p_lower_bound(0, 3, 2).unwrap(), rational(0, 1));
    }

    #[test]
    fn q_upper_bound_examples() {
        assert_eq!(q_upper_bound(1, 2, 1).unwrap(), BigInt::from(0));
        assert_eq!(q_upper_bound(3, 4, 1).unwrap(), BigInt::from(3));
        // p = 1, n = 3, l = 2: 1 * C(4,2) - 1 - 1_(2)|_{-1}^{1} = 6 - 1 - C(3,1) = 2
        assert_eq!(q_upper_bound(1, 3, 2).unwrap(), BigInt::from(2));
        for (p, n) in [(1, 2), (3, 4), (2, 5)] {
            assert_eq!(
                q_upper_bound(p, n, 1).unwrap(),
                q_upper_bound_alt_shift(p, n, 1).unwrap()
            );
        }
    }

    #[test]
    fn sos_rank_interval_examples() {
        assert_eq!(sos_rank_interval(1, 0, 2, 1).unwrap(), Interval::new(2, 2));
        // 3_(2) = C(3,2), shifted C(4,2) = 6; low = 6 - 3 = 3
        assert_eq!(sos_rank_interval(2, 1, 3, 1).unwrap(), Interval::new(3, 6));
        assert_eq!(sos_rank_interval(0, 1, 2, 1).unwrap().high, BigInt::from(0));
    }

    #[test]
    fn verify_rank_examples() {
        let check = verify_rank_interval(&diag(2, 1, &[1, 0]), SignedNorm::euclidean(2))
            .unwrap()
            .unwrap();
        assert_eq!(
            (check.product_rank, check.interval.clone(), check.ok),
            (2, Interval::new(2, 2), true)
        );
        assert_eq!(
            verify_rank_interval(&HermitianBiform::zero(2, 1), SignedNorm::euclidean(2)).unwrap(),
            None
        );
    }

    #[test]
    fn containment_trivial_negative_part() {
        // (|z1|^2 + |z2|^2) ‖z‖^2 = |z1|^4 + 2|z1 z2|^2 + |z2|^4
        let plus = vec![
            SquareTerm::positive(GaussPoly::var(2, 0)),
            SquareTerm::positive(GaussPoly::var(2, 1)),
        ];
        let m = recompose(2, 1, &plus).unwrap();
        let h: Vec<SquareTerm> = m.multiply_norm_power(1).decompose();
        assert!(verify_ideal_containment(&plus, &[], &h, 1).unwrap());
    }

    #[test]
    fn containment_rejects_bad_witness() {
        let plus = vec![SquareTerm::positive(GaussPoly::var(2, 0))];
        let h = vec![SquareTerm::positive(HomogPoly::monomial(
            mono(&[2, 0]),
            gaussian_int(1),
        ))];
        assert!(matches!(
            verify_ideal_containment(&plus, &[], &h, 1),
            Err(Error::InvalidWitness(_))
        ));
    }

    #[test]
    fn sos_bounds_on_known_instance() {
        let m = diag(2, 2, &[1, -1, 1]);
        let l = find_min_sos_exponent(&m, 6).unwrap();
        let check = verify_sos_bounds(&m, l).unwrap().unwrap();
        assert_eq!(check.signature, sig(2, 1));
        assert!(check.all_ok(), "{check:?}");
        assert_eq!(verify_sos_bounds(&diag(2, 1, &[1, -1]), 1).unwrap(), None);
    }
}
