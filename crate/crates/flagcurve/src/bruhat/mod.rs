//! Permutation combinatorics and Bruhat cells of unitriangular matrices:
//! multiplicity vectors, cover updates, cell identification via corner ranks,
//! generator matrices, good-matrix construction, and itineraries.
//!
//! Permutations follow the exponent (right-action) convention: i^{στ} =
//! (i^σ)^τ, so the product στ applies σ first. Right multiplication by the
//! generator a_j therefore swaps the *values* j and j+1 in one-line notation.

mod good;

pub use good::{
    build_good_matrix, count_nontransversality, distinctify, good_matrix_from_taus, itinerary,
    verify_goodness, GoodMatrix, GoodMode, Itinerary, ItineraryEntry, NonTransversalityReport,
    SignChoice,
};

use crate::curve::{CurveError, LowerUni};
use crate::exactnum::{ExactError, Rational};
use num::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BruhatError {
    #[error("one-line notation is not a bijection of 1..={0}")]
    NotABijection(usize),
    #[error("generator index {j} out of range 1..={max}")]
    GeneratorRange { j: usize, max: usize },
    #[error("word is not reduced: product has {inversions} inversions but the word has length {length}")]
    NotReduced { inversions: usize, length: usize },
    #[error("sigma0 is not covered by sigma0 * a_{j}")]
    NotACover { j: usize },
    #[error("goodness not certified: {0}")]
    GoodnessNotCertified(String),
    #[error("itinerary undefined, distinctify first: {0}")]
    DegenerateItinerary(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A permutation of {1..n}, stored 0-based: `p[i] = i^σ − 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    p: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { p: (0..n).collect() }
    }

    /// The top permutation η: i ↦ n+1−i.
    pub fn eta(n: usize) -> Self {
        Permutation {
            p: (0..n).rev().collect(),
        }
    }

    /// From 1-based one-line notation (1^σ, …, n^σ).
    pub fn from_one_line(values: &[usize]) -> Result<Self, BruhatError> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(BruhatError::NotABijection(n));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            p: values.iter().map(|&v| v - 1).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.p.len()
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.p.iter().map(|&v| v + 1).collect()
    }

    /// i^σ for 1-based i.
    pub fn apply(&self, i: usize) -> usize {
        self.p[i - 1] + 1
    }

    /// Position (1-based) of the value v in one-line notation, i.e. v^{σ⁻¹}.
    pub fn position_of(&self, v: usize) -> usize {
        self.p.iter().position(|&x| x == v - 1).unwrap() + 1
    }

    /// Product στ in the right-action convention: i^{στ} = (i^σ)^τ.
    pub fn mul(&self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.n(), rhs.n());
        Permutation {
            p: self.p.iter().map(|&v| rhs.p[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut q = vec![0; self.n()];
        for (i, &v) in self.p.iter().enumerate() {
            q[v] = i;
        }
        Permutation { p: q }
    }

    /// σ·a_j: swaps the values j and j+1 (1 ≤ j ≤ n−1).
    pub fn times_gen(&self, j: usize) -> Result<Permutation, BruhatError> {
        if j == 0 || j >= self.n() {
            return Err(BruhatError::GeneratorRange {
                j,
                max: self.n() - 1,
            });
        }
        let a = self.p.iter().position(|&x| x == j - 1).unwrap();
        let b = self.p.iter().position(|&x| x == j).unwrap();
        let mut p = self.p.clone();
        p.swap(a, b);
        Ok(Permutation { p })
    }

    pub fn inversions(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.p[i] > self.p[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_identity(&self) -> bool {
        self.p.iter().enumerate().all(|(i, &v)| i == v)
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}]",
            self.one_line()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A sequence of generator indices a_{i₁}⋯a_{i_l} whose product has exactly
/// l inversions (reducedness is checked at construction).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedWord {
    n: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self, BruhatError> {
        for &j in &letters {
            if j == 0 || j >= n {
                return Err(BruhatError::GeneratorRange { j, max: n - 1 });
            }
        }
        let word = ReducedWord { n, letters };
        let inv = word.product().inversions();
        if inv != word.letters.len() {
            return Err(BruhatError::NotReduced {
                inversions: inv,
                length: word.letters.len(),
            });
        }
        Ok(word)
    }

    /// The staircase reduced word a₁ a₂a₁ a₃a₂a₁ ⋯ for the top permutation η,
    /// of length n(n−1)/2.
    pub fn eta_word(n: usize) -> Self {
        let mut letters = Vec::with_capacity(n * (n - 1) / 2);
        for block in 1..n {
            for j in (1..=block).rev() {
                letters.push(j);
            }
        }
        let word = ReducedWord { n, letters };
        debug_assert_eq!(word.product(), Permutation::eta(n));
        debug_assert_eq!(word.letters.len(), word.product().inversions());
        word
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn product(&self) -> Permutation {
        let mut acc = Permutation::identity(self.n);
        for &j in &self.letters {
            acc = acc.times_gen(j).unwrap();
        }
        acc
    }

    /// The permutations e, a_{i₁}, a_{i₁}a_{i₂}, …, ending at the product.
    pub fn prefix_products(&self) -> Vec<Permutation> {
        let mut acc = Permutation::identity(self.n);
        let mut out = vec![acc.clone()];
        for &j in &self.letters {
            acc = acc.times_gen(j).unwrap();
            out.push(acc.clone());
        }
        out
    }
}

/// Per-k zero multiplicities (k = 1..n−1): mult_k(σ) = (1^σ+⋯+k^σ) − (1+⋯+k).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiplicityVector {
    values: Vec<usize>,
}

impl MultiplicityVector {
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// mult_k for 1-based k.
    pub fn get(&self, k: usize) -> usize {
        self.values[k - 1]
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }
}

/// The multiplicity vector of σ by the defining partial-sum formula.
pub fn mult_vector(sigma: &Permutation) -> MultiplicityVector {
    let n = sigma.n();
    let mut values = Vec::with_capacity(n - 1);
    let mut image_sum = 0usize;
    let mut base_sum = 0usize;
    for k in 1..n {
        image_sum += sigma.apply(k);
        base_sum += k;
        let v = image_sum - base_sum;
        debug_assert!(v <= k * (n - k));
        values.push(v);
    }
    MultiplicityVector { values }
}

/// The multiplicity vector of σ₁ = σ₀a_j for a Bruhat cover σ₀ ◁ σ₁, by the
/// cover rule: +1 exactly on i₀ ≤ k < i₁ where i₀, i₁ are the one-line
/// positions of the values j, j+1 in σ₀ (cover ⇔ i₀ < i₁).
pub fn cover_update(sigma0: &Permutation, j: usize) -> Result<MultiplicityVector, BruhatError> {
    let n = sigma0.n();
    if j == 0 || j >= n {
        return Err(BruhatError::GeneratorRange { j, max: n - 1 });
    }
    let i0 = sigma0.position_of(j);
    let i1 = sigma0.position_of(j + 1);
    if i0 >= i1 {
        return Err(BruhatError::NotACover { j });
    }
    let mut values = mult_vector(sigma0).values;
    for k in i0..i1.min(n) {
        values[k - 1] += 1;
    }
    Ok(MultiplicityVector { values })
}

/// The unique ρ with L ∈ Bru_ρ (L = U₁P_ρU₂ for upper triangular U₁, U₂),
/// identified from corner ranks: with r(i,j) = rank of the submatrix on rows
/// i..n and columns 1..j, the permutation matrix P_ρ has its 1-entries where
/// r(i,j) − r(i+1,j) − r(i,j−1) + r(i+1,j−1) = 1, and row i's entry sits in
/// column i^ρ.
pub fn bruhat_cell(l: &LowerUni) -> Permutation {
    let n = l.n();
    // r[i][j] = rank of rows i..n (1-based), cols 1..j; borders are zero.
    let mut r = vec![vec![0usize; n + 1]; n + 2];
    let all_cols: Vec<usize> = (0..n).collect();
    for i in 1..=n {
        let rows: Vec<usize> = (i - 1..n).collect();
        for j in 1..=n {
            r[i][j] = l.matrix().submatrix(&rows, &all_cols[..j]).rank();
        }
    }
    let mut one_line = vec![0usize; n];
    for i in 1..=n {
        for j in 1..=n {
            let delta = r[i][j] + r[i + 1][j - 1];
            let other = r[i + 1][j] + r[i][j - 1];
            if delta == other + 1 {
                debug_assert_eq!(one_line[i - 1], 0);
                one_line[i - 1] = j;
            }
        }
    }
    Permutation::from_one_line(&one_line).expect("corner ranks yield a permutation")
}

/// λ_j(τ): identity plus τ in position (j+1, j), 1-based j ≤ n−1.
pub fn generator_matrix(n: usize, j: usize, tau: &Rational) -> Result<LowerUni, BruhatError> {
    if j == 0 || j >= n {
        return Err(BruhatError::GeneratorRange { j, max: n - 1 });
    }
    let mut m = crate::exactnum::QMatrix::identity(n);
    *m.get_mut(j, j - 1) = tau.clone();
    Ok(LowerUni::from_matrix(m).unwrap())
}

/// Product λ_{j₁}(τ₁)⋯λ_{j_l}(τ_l), left to right.
pub fn generator_product(
    n: usize,
    factors: &[(usize, Rational)],
) -> Result<LowerUni, BruhatError> {
    let mut acc = LowerUni::identity(n);
    for (j, tau) in factors {
        if tau.is_zero() {
            continue;
        }
        acc = acc.mul(&generator_matrix(n, *j, tau)?);
    }
    Ok(acc)
}
