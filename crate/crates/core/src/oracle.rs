//! Brute-force references and seeded instance generators.
//!
//! Everything here is deliberately independent of the fast paths it is used
//! to check: representations are found by exhaustive search, monomial Hilbert
//! functions by counting, ranks by elimination modulo large primes.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)` (rand 0.9), so a
//! seed fully determines every generated corpus.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::binom::{shift_u64, BinomialTerm, MacaulayRep, Shift};
use crate::hermitian::{find_min_sos_exponent, recompose, HermitianBiform, SignedNorm, SquareTerm};
use crate::linalg::{rank_mod_prime, LARGE_PRIMES};
use crate::poly::{graded_piece_dim, monomials_of_degree, space_dim, HomogPoly, Monomial};
use crate::scalar::{gaussian, rational};
use crate::{Error, GaussPoly, GaussianRational, Ideal, Poly, Rational, Result};

pub const REP_ORACLE_MAX_VALUE: u64 = 100_000;
pub const REP_ORACLE_MAX_INDEX: u32 = 8;

fn small_binom(a: u64, j: u64) -> u128 {
    if j > a {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..j {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Finds the `n`-th Macaulay representation of `value` by exhaustive search
/// over all admissible sequences, failing unless exactly one exists.
pub fn brute_rep_oracle(value: u64, n: u32) -> Result<MacaulayRep> {
    if value > REP_ORACLE_MAX_VALUE || n > REP_ORACLE_MAX_INDEX || n == 0 {
        return Err(Error::CapExceeded(format!(
            "representation oracle needs value <= {REP_ORACLE_MAX_VALUE} and 1 <= n <= {REP_ORACLE_MAX_INDEX}"
        )));
    }

    fn search(j: u64, upper_limit: u64, remaining: u128, stack: &mut Vec<u64>, found: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            found.push(stack.clone());
            return;
        }
        if j == 0 {
            return;
        }
        for a in j..upper_limit {
            let c = small_binom(a, j);
            if c > remaining {
                break;
            }
            stack.push(a);
            search(j - 1, a, remaining - c, stack, found);
            stack.pop();
        }
    }

    let mut found = Vec::new();
    search(
        n as u64,
        value + n as u64 + 1,
        value as u128,
        &mut Vec::new(),
        &mut found,
    );
    if found.len() != 1 {
        return Err(Error::NotUnique(found.len()));
    }
    let terms = found[0]
        .iter()
        .enumerate()
        .map(|(i, &a)| BinomialTerm::new(a, n - i as u32))
        .collect();
    Ok(MacaulayRep { n, terms })
}

/// `H_I(d)` for a monomial ideal by counting degree-`d` monomials divisible
/// by some generator.
pub fn brute_hilbert_monomial(ideal: &Ideal, d: u32) -> Result<u64> {
    let gens: Vec<&Monomial> = ideal
        .generators()
        .iter()
        .map(|g| g.as_monomial().ok_or(Error::NotMonomial))
        .collect::<Result<_>>()?;
    Ok(monomials_of_degree(ideal.n_vars(), d)
        .iter()
        .filter(|m| gens.iter().any(|g| g.divides(m)))
        .count() as u64)
}

/// `H_I(d)` by elimination modulo three distinct primes chosen by `seed`;
/// `None` unless all three ranks exist and agree.
pub fn modular_rank_oracle(ideal: &Ideal, d: u32, seed: u64) -> Option<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = ideal.graded_piece_rows(d);
    let ranks: Vec<Option<usize>> = sample(&mut rng, LARGE_PRIMES.len(), 3)
        .into_iter()
        .map(|i| rank_mod_prime(&rows, LARGE_PRIMES[i]))
        .collect();
    match ranks.as_slice() {
        [Some(a), Some(b), Some(c)] if a == b && b == c => Some(*a as u64),
        _ => None,
    }
}

/// Ideal generated by the `k` lexicographically largest monomials of degree `d`.
pub fn lex_segment_ideal(n_vars: usize, d: u32, k: usize) -> Result<Ideal> {
    let mut basis = monomials_of_degree(n_vars, d);
    if k > basis.len() {
        return Err(Error::Precondition(format!(
            "k = {k} exceeds the {} monomials of degree {d}",
            basis.len()
        )));
    }
    basis.sort_by(|a, b| b.lex_cmp(a));
    basis.truncate(k);
    Ideal::monomial(n_vars, basis)
}

/// Every monomial ideal in `2..=max_vars` variables with at most `max_gens`
/// distinct generators of degree `1..=max_degree`, the zero ideal included.
pub fn exhaustive_monomial_corpus(max_vars: usize, max_gens: usize, max_degree: u32) -> Vec<Ideal> {
    let mut out = Vec::new();
    for n in 2..=max_vars {
        let pool: Vec<Monomial> = (1..=max_degree).flat_map(|e| monomials_of_degree(n, e)).collect();
        let mut chosen = Vec::new();
        fn subsets(
            pool: &[Monomial],
            start: usize,
            left: usize,
            chosen: &mut Vec<Monomial>,
            out: &mut Vec<Vec<Monomial>>,
        ) {
            out.push(chosen.clone());
            if left == 0 {
                return;
            }
            for i in start..pool.len() {
                chosen.push(pool[i].clone());
                subsets(pool, i + 1, left - 1, chosen, out);
                chosen.pop();
            }
        }
        let mut all = Vec::new();
        subsets(&pool, 0, max_gens, &mut chosen, &mut all);
        out.extend(
            all.into_iter()
                .map(|gens| Ideal::monomial(n, gens).expect("valid monomials")),
        );
    }
    out
}

/// Parameters of a seeded random corpus. Ranges are inclusive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub n_vars: (usize, usize),
    pub generators: (usize, usize),
    pub degrees: (u32, u32),
    /// Terms per generator for the rational-coefficient ideals.
    pub terms: (usize, usize),
    /// Number of ideals to draw.
    pub count: usize,
    /// Every `monomial_every`-th ideal is a monomial ideal; 0 disables them.
    pub monomial_every: usize,
    pub d_max: u32,
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            n_vars: (2, 4),
            generators: (1, 3),
            degrees: (1, 3),
            terms: (1, 3),
            count: 200,
            monomial_every: 0,
            d_max: 6,
            seed: 42,
        }
    }
}

impl CorpusSpec {
    fn validate(&self) -> Result<()> {
        let ranges = [self.n_vars, self.generators, self.terms];
        if ranges.iter().any(|(lo, hi)| lo > hi) || self.degrees.0 > self.degrees.1 {
            return Err(Error::Precondition("corpus ranges must be nonempty".into()));
        }
        if self.n_vars.0 == 0 || self.degrees.0 == 0 || self.terms.0 == 0 {
            return Err(Error::Precondition(
                "variables, degrees and term counts must be positive".into(),
            ));
        }
        Ok(())
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, d: u32) -> Monomial {
    let basis = monomials_of_degree(n, d);
    basis[rng.random_range(0..basis.len())].clone()
}

fn random_small_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    let mut num = 0;
    while num == 0 {
        num = rng.random_range(-max_num..=max_num);
    }
    rational(num, rng.random_range(1..=max_den))
}

/// Deterministic corpus of monomial and rational-coefficient ideals.
pub fn random_corpus(spec: &CorpusSpec) -> Result<Vec<Ideal>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    for i in 0..spec.count {
        let n = rng.random_range(spec.n_vars.0..=spec.n_vars.1);
        let g = rng.random_range(spec.generators.0..=spec.generators.1);
        let monomial = spec.monomial_every > 0 && i % spec.monomial_every == 0;
        let mut gens = Vec::with_capacity(g);
        while gens.len() < g {
            let d = rng.random_range(spec.degrees.0..=spec.degrees.1);
            let poly = if monomial {
                Poly::monomial(random_monomial(&mut rng, n, d), Rational::one())
            } else {
                let basis = monomials_of_degree(n, d);
                let t = rng.random_range(spec.terms.0..=spec.terms.1).min(basis.len());
                let picks = sample(&mut rng, basis.len(), t).into_vec();
                let terms: Vec<_> = picks
                    .into_iter()
                    .map(|k| (basis[k].clone(), random_small_rational(&mut rng, 5, 3)))
                    .collect();
                Poly::from_terms(n, d, terms)?
            };
            gens.push(poly);
        }
        out.push(Ideal::new(n, gens)?);
    }
    Ok(out)
}

fn random_gaussian(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> GaussianRational {
    let re = rational(rng.random_range(-max_num..=max_num), rng.random_range(1..=max_den));
    let im = rational(rng.random_range(-max_num..=max_num), rng.random_range(1..=max_den));
    gaussian(re, im)
}

/// Seeded Hermitian form with small-denominator Gaussian-rational entries.
pub fn random_hermitian_instance(n_vars: usize, half_degree: u32, seed: u64) -> HermitianBiform {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = space_dim(n_vars, half_degree) as usize;
    let mut m = vec![vec![GaussianRational::zero(); dim]; dim];
    for i in 0..dim {
        m[i][i] = gaussian(
            rational(rng.random_range(-3..=3), rng.random_range(1..=3)),
            Rational::zero(),
        );
        for j in i + 1..dim {
            // keep about half of the off-diagonal entries zero
            if rng.random_bool(0.5) {
                let z = random_gaussian(&mut rng, 3, 3);
                m[j][i] = z.conj();
                m[i][j] = z;
            }
        }
    }
    HermitianBiform::from_matrix(n_vars, half_degree, m).expect("symmetric by construction")
}

/// Random invertible matrix `P · L · D`: permutation, unit lower triangular,
/// nonzero diagonal.
pub fn random_invertible(dim: usize, seed: u64) -> Vec<Vec<GaussianRational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut l = vec![vec![GaussianRational::zero(); dim]; dim];
    for i in 0..dim {
        let mut d = GaussianRational::zero();
        while d.is_zero() {
            d = random_gaussian(&mut rng, 3, 2);
        }
        l[i][i] = d;
        for j in 0..i {
            l[i][j] = random_gaussian(&mut rng, 2, 2) * l[j][j].clone();
        }
    }
    let perm = sample(&mut rng, dim, dim).into_vec();
    perm.into_iter().map(|k| l[k].clone()).collect()
}

/// `C^H · A · C`.
pub fn congruence_transform(a: &[Vec<GaussianRational>], c: &[Vec<GaussianRational>]) -> Vec<Vec<GaussianRational>> {
    let n = a.len();
    let ac: Vec<Vec<GaussianRational>> = (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &c[k][j]).sum()).collect())
        .collect();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| c[k][i].conj() * &ac[k][j]).sum())
                .collect()
        })
        .collect()
}

/// A form `M` together with an exponent `l` making `M ‖z‖^{2l}` a sum of squared norms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SosInstance {
    pub m: HermitianBiform,
    pub l: u32,
    pub family: SosFamily,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SosFamily {
    /// `M = Σ |m_i|^2`.
    PureSquares,
    /// `M = G^2 + ε ‖z‖^4` with `G` an indefinite `(1, 1)` form; positive on
    /// the sphere, usually with an indefinite coefficient matrix.
    SquarePlusNorm,
}

fn random_gauss_poly(rng: &mut ChaCha8Rng, n: usize, d: u32) -> GaussPoly {
    loop {
        let mut terms = Vec::new();
        for m in monomials_of_degree(n, d) {
            if rng.random_bool(0.6) {
                let c = gaussian(
                    rational(rng.random_range(-2..=2), 1),
                    rational(rng.random_range(-1..=1), 1),
                );
                terms.push((m, c));
            }
        }
        let p = HomogPoly::from_terms(n, d, terms).expect("degrees match");
        if !p.is_zero() {
            return p;
        }
    }
}

fn pure_squares_candidate(rng: &mut ChaCha8Rng) -> HermitianBiform {
    let n = rng.random_range(2..=3);
    let d = rng.random_range(1..=2);
    let k = rng.random_range(1..=3);
    let terms: Vec<SquareTerm> = (0..k)
        .map(|_| SquareTerm::positive(random_gauss_poly(rng, n, d)))
        .collect();
    recompose(n, d, &terms).expect("shapes match")
}

fn square_plus_norm_candidate(rng: &mut ChaCha8Rng) -> HermitianBiform {
    let n = rng.random_range(2..=3);
    let g = loop {
        let g = random_hermitian_instance(n, 1, rng.random());
        let s = g.signature();
        if s.p > 0 && s.q > 0 {
            break g;
        }
    };
    let eps = rational(rng.random_range(1..=4), 1);
    let norm4 = HermitianBiform::diagonal(n, 0, &[Rational::one()])
        .expect("constant form")
        .multiply_norm_power(2);
    g.product(&g)
        .expect("same variables")
        .add(&norm4.scale(&eps))
        .expect("same shape")
}

/// Seeded forms `M` with a verified `l <= l_max` such that `M ‖z‖^{2l}` is a
/// sum of squared norms; `l` is the least such exponent. Candidates alternate
/// between the two families; candidates with no such `l` are skipped.
pub fn sos_instances(count: usize, l_max: u32, seed: u64) -> Vec<SosInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempt = 0usize;
    while out.len() < count {
        let family = if attempt.is_multiple_of(2) {
            SosFamily::SquarePlusNorm
        } else {
            SosFamily::PureSquares
        };
        attempt += 1;
        let m = match family {
            SosFamily::PureSquares => pure_squares_candidate(&mut rng),
            SosFamily::SquarePlusNorm => square_plus_norm_candidate(&mut rng),
        };
        if m.is_zero() {
            continue;
        }
        if let Some(l) = find_min_sos_exponent(&m, l_max) {
            out.push(SosInstance { m, l, family });
        }
    }
    out
}

/// How often lex-segment ideals meet the lower bound `H_I(d)_(n-1)|_0^1` for
/// `H_I(d+1)` exactly.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexSharpnessReport {
    pub cases: u64,
    pub sharp: u64,
    /// `(n, d, k, H_I(d+1), bound)` for the cases that were not sharp.
    pub slack: Vec<(usize, u32, usize, u64, u64)>,
}

pub fn lex_sharpness_report(max_vars: usize, max_degree: u32) -> LexSharpnessReport {
    let mut report = LexSharpnessReport::default();
    for n in 2..=max_vars {
        for d in 1..=max_degree {
            for k in 1..=space_dim(n, d) as usize {
                let ideal = lex_segment_ideal(n, d, k).expect("k within basis");
                let next = graded_piece_dim(&ideal, d + 1);
                let bound = shift_u64(k as u64, (n - 1) as u32, Shift::new(0, 1));
                let bound = u64::try_from(bound).expect("small bound");
                report.cases += 1;
                if next == bound {
                    report.sharp += 1;
                } else {
                    report.slack.push((n, d, k, next, bound));
                }
            }
        }
    }
    report
}

/// Signed norms `(s, t)` with `s + t = n`.
pub fn all_signed_norms(n: usize) -> Vec<SignedNorm> {
    (0..=n).map(|s| SignedNorm::new(s, n - s).expect("n >= 1")).collect()
}

/// Distinct monomials across all generators.
pub fn generator_monomials(ideal: &Ideal) -> BTreeSet<Monomial> {
    ideal
        .generators()
        .iter()
        .flat_map(|g| g.terms().map(|(m, _)| m.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binom::macaulay_rep;
    use num_bigint::BigUint;

    fn mono(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn rep_oracle_examples() {
        let r = brute_rep_oracle(3, 3).unwrap();
        assert_eq!(
            r.terms,
            vec![
                BinomialTerm::new(3u32, 3),
                BinomialTerm::new(2u32, 2),
                BinomialTerm::new(1u32, 1)
            ]
        );
        assert!(brute_rep_oracle(0, 2).unwrap().terms.is_empty());
        // 10 = C(5,2) is the search result, not C(4,2) + C(3,1) = 9
        let r = brute_rep_oracle(10, 2).unwrap();
        assert_eq!(r.value(), BigUint::from(10u32));
        assert_eq!(r, macaulay_rep(&BigUint::from(10u32), 2));
    }

    #[test]
    fn rep_oracle_caps() {
        assert!(matches!(
            brute_rep_oracle(REP_ORACLE_MAX_VALUE + 1, 2),
            Err(Error::CapExceeded(_))
        ));
        assert!(matches!(brute_rep_oracle(5, 9), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn hilbert_oracle_examples() {
        let i = Ideal::monomial(2, [mono(&[1, 0])]).unwrap();
        assert_eq!(brute_hilbert_monomial(&i, 3).unwrap(), 3);
        let i = Ideal::monomial(2, [mono(&[1, 0]), mono(&[0, 1])]).unwrap();
        assert_eq!(brute_hilbert_monomial(&i, 2).unwrap(), 3);
        let i = Ideal::monomial(2, [mono(&[1, 1])]).unwrap();
        assert_eq!(brute_hilbert_monomial(&i, 2).unwrap(), 1);
        let sum = Poly::from_terms(
            2,
            1,
            [(mono(&[1, 0]), Rational::one()), (mono(&[0, 1]), Rational::one())],
        )
        .unwrap();
        assert_eq!(
            brute_hilbert_monomial(&Ideal::new(2, vec![sum]).unwrap(), 2),
            Err(Error::NotMonomial)
        );
    }

    #[test]
    fn lex_segment_examples() {
        assert_eq!(
            lex_segment_ideal(2, 2, 1).unwrap(),
            Ideal::monomial(2, [mono(&[2, 0])]).unwrap()
        );
        assert_eq!(
            lex_segment_ideal(2, 2, 2).unwrap(),
            Ideal::monomial(2, [mono(&[2, 0]), mono(&[1, 1])]).unwrap()
        );
        assert_eq!(
            lex_segment_ideal(3, 1, 2).unwrap(),
            Ideal::monomial(3, [mono(&[1, 0, 0]), mono(&[0, 1, 0])]).unwrap()
        );
        // lex and grevlex disagree in degree 2 of three variables: z1 z3 >lex z2^2
        assert_eq!(
            lex_segment_ideal(3, 2, 3).unwrap(),
            Ideal::monomial(3, [mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[1, 0, 1])]).unwrap()
        );
        assert!(lex_segment_ideal(2, 2, 4).is_err());
    }

    #[test]
    fn corpus_is_deterministic() {
        let spec = CorpusSpec {
            count: 20,
            ..CorpusSpec::default()
        };
        assert_eq!(random_corpus(&spec).unwrap(), random_corpus(&spec).unwrap());
        let other = CorpusSpec {
            seed: 43,
            ..spec.clone()
        };
        assert_ne!(random_corpus(&spec).unwrap(), random_corpus(&other).unwrap());
    }

    #[test]
    fn corpus_respects_ranges() {
        let spec = CorpusSpec {
            n_vars: (2, 2),
            degrees: (1, 1),
            count: 30,
            monomial_every: 3,
            ..CorpusSpec::default()
        };
        let corpus = random_corpus(&spec).unwrap();
        assert_eq!(corpus.len(), 30);
        for (i, ideal) in corpus.iter().enumerate() {
            assert_eq!(ideal.n_vars(), 2);
            assert!((1..=3).contains(&ideal.generators().len()));
            assert!(ideal.generators().iter().all(|g| g.degree() == 1));
            if i % 3 == 0 {
                assert!(ideal.is_monomial());
            }
        }
        let bad = CorpusSpec {
            degrees: (3, 1),
            ..CorpusSpec::default()
        };
        assert!(random_corpus(&bad).is_err());
    }

    #[test]
    fn hermitian_instance_contract() {
        let a = random_hermitian_instance(2, 1, 7);
        assert_eq!(a.dim(), 2);
        assert_eq!(a, random_hermitian_instance(2, 1, 7));
        // from_matrix already enforces symmetry; rebuild to be explicit
        assert!(HermitianBiform::from_matrix(3, 2, random_hermitian_instance(3, 2, 11).matrix().to_vec()).is_ok());
    }

    #[test]
    fn exhaustive_corpus_size() {
        // n = 2: 9 monomials of degree 1..3; subsets of size <= 3: 1 + 9 + 36 + 84
        let corpus = exhaustive_monomial_corpus(2, 3, 3);
        assert_eq!(corpus.len(), 130);
    }

    #[test]
    fn lex_segments_are_sharp_in_small_cases() {
        let report = lex_sharpness_report(3, 3);
        assert!(report.cases > 0);
        assert_eq!(report.sharp + report.slack.len() as u64, report.cases);
    }

    #[test]
    fn sos_instances_are_valid() {
        let instances = sos_instances(6, 4, 5);
        assert_eq!(instances.len(), 6);
        for inst in &instances {
            assert!(inst.m.multiply_norm_power(inst.l).is_sum_of_squares());
            if inst.l > 1 {
                assert!(!inst.m.multiply_norm_power(inst.l - 1).is_sum_of_squares());
            }
        }
    }
}
