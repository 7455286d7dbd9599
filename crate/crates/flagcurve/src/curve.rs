//! Polynomial flag-convex curves Γ(t) = L₀·exp(tN₀) in the lower-unitriangular
//! group, their southwest minors m_k and projected minors m_Y, total
//! positivity, positivity thresholds, curve extension, and duality.

use crate::exactnum::{
    rational_string, sign, ExactError, PolyMatrix, Polynomial, QMatrix, Rational,
};
use itertools::Itertools;
use num::{One, Signed, Zero};
use rand::Rng;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("subdiagonal entry {index} is not strictly positive")]
    NonPositiveSubdiagonal { index: usize },
    #[error("matrix is not lower-unitriangular")]
    NotUnitriangular,
    #[error("minor index k={k} out of range 1..={max}")]
    MinorIndex { k: usize, max: usize },
    #[error("malformed index pair {{i,j}}: need 1 <= i < j <= {n}")]
    BadPair { n: usize },
    #[error("positivity threshold search exceeded 64 doublings (internal error)")]
    ThresholdCap,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// The strictly positive subdiagonal data of a nilpotent generator N₀:
/// entry (j+1, j) = subdiag[j], all other entries zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NilpotentGenerator {
    n: usize,
    subdiag: Vec<Rational>,
}

impl NilpotentGenerator {
    pub fn new(n: usize, subdiag: Vec<Rational>) -> Result<Self, CurveError> {
        if subdiag.len() != n - 1 {
            return Err(CurveError::Dimension(format!(
                "need {} subdiagonal entries for n={}, got {}",
                n - 1,
                n,
                subdiag.len()
            )));
        }
        if let Some(i) = subdiag.iter().position(|c| !c.is_positive()) {
            return Err(CurveError::NonPositiveSubdiagonal { index: i });
        }
        Ok(NilpotentGenerator { n, subdiag })
    }

    /// Unit subdiagonal (the reference generator).
    pub fn unit(n: usize) -> Self {
        NilpotentGenerator {
            n,
            subdiag: vec![Rational::one(); n - 1],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subdiag(&self) -> &[Rational] {
        &self.subdiag
    }

    /// The generator with reversed subdiagonal (appears in the dual curve).
    pub fn reversed(&self) -> Self {
        let mut subdiag = self.subdiag.clone();
        subdiag.reverse();
        NilpotentGenerator { n: self.n, subdiag }
    }

    /// N₀ as a rational matrix.
    pub fn to_matrix(&self) -> QMatrix {
        let mut m = QMatrix::zero(self.n, self.n);
        for (j, c) in self.subdiag.iter().enumerate() {
            *m.get_mut(j + 1, j) = c.clone();
        }
        m
    }
}

/// Lower-unitriangular rational matrix: unit diagonal, zero above it.
#[derive(Clone, PartialEq, Eq)]
pub struct LowerUni {
    mat: QMatrix,
}

impl LowerUni {
    pub fn identity(n: usize) -> Self {
        LowerUni {
            mat: QMatrix::identity(n),
        }
    }

    pub fn from_matrix(mat: QMatrix) -> Result<Self, CurveError> {
        let n = mat.nrows();
        if mat.ncols() != n {
            return Err(CurveError::Dimension(format!(
                "{}x{} is not square",
                mat.nrows(),
                mat.ncols()
            )));
        }
        for i in 0..n {
            if !mat.get(i, i).is_one() {
                return Err(CurveError::NotUnitriangular);
            }
            for j in i + 1..n {
                if !mat.get(i, j).is_zero() {
                    return Err(CurveError::NotUnitriangular);
                }
            }
        }
        Ok(LowerUni { mat })
    }

    /// Builds from the strictly-lower-triangular entries, row by row:
    /// `strict[i]` holds row i+1's entries in columns 0..=i.
    pub fn from_strict_rows(n: usize, strict: Vec<Vec<Rational>>) -> Result<Self, CurveError> {
        if strict.len() != n - 1 || strict.iter().enumerate().any(|(i, r)| r.len() != i + 1) {
            return Err(CurveError::Dimension(
                "strictly lower rows must have lengths 1..n-1".into(),
            ));
        }
        let mut mat = QMatrix::identity(n);
        for (i, row) in strict.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                *mat.get_mut(i + 1, j) = v;
            }
        }
        Ok(LowerUni { mat })
    }

    pub fn n(&self) -> usize {
        self.mat.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.mat.get(i, j)
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.mat
    }

    pub fn mul(&self, rhs: &LowerUni) -> LowerUni {
        LowerUni {
            mat: self.mat.matmul(&rhs.mat),
        }
    }

    pub fn inverse(&self) -> LowerUni {
        LowerUni {
            mat: self.mat.inverse_lower_unitriangular(),
        }
    }

    /// P_η L^{−⊤} P_η: inverse-transpose conjugated by the index reversal.
    /// Lower-unitriangular again; the building block of the dual curve.
    pub fn dual(&self) -> LowerUni {
        LowerUni {
            mat: self.mat.inverse_lower_unitriangular().transpose().reversed(),
        }
    }

    /// PLP with P = diag(1,−1,1,…): flips the sign of entries with odd i+j.
    pub fn sign_conjugate(&self) -> LowerUni {
        let n = self.n();
        let mut mat = self.mat.clone();
        for i in 0..n {
            for j in 0..n {
                if (i + j) % 2 == 1 {
                    let v = -mat.get(i, j).clone();
                    *mat.get_mut(i, j) = v;
                }
            }
        }
        LowerUni { mat }
    }
}

impl std::fmt::Debug for LowerUni {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.mat)
    }
}

/// exp(tN₀) = Σ_{m<n} (tN₀)^m/m!, computed exactly. For the unit subdiagonal
/// the (i,j) entry is t^{i−j}/(i−j)!.
pub fn exp_nilpotent(n0: &NilpotentGenerator) -> PolyMatrix {
    let n = n0.n();
    let mut tn = PolyMatrix::zero(n, n);
    for (j, c) in n0.subdiag().iter().enumerate() {
        *tn.get_mut(j + 1, j) = Polynomial::monomial(c.clone(), 1);
    }
    let mut acc = PolyMatrix::identity(n);
    let mut term = PolyMatrix::identity(n);
    for m in 1..n {
        let inv_m = Rational::one() / Rational::from_integer(m.into());
        term = term.matmul(&tn).scale(&inv_m);
        acc = acc.add(&term);
    }
    acc
}

/// The flag-convex polynomial curve Γ(t) = L₀·exp(tN₀) with its cached
/// polynomial matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolynomialCurve {
    l0: LowerUni,
    n0: NilpotentGenerator,
    gamma: PolyMatrix,
}

/// Builds the curve and symbolically verifies flag-convexity: the logarithmic
/// derivative Γ⁻¹Γ′ equals N₀, checked as the equivalent identity Γ′ = Γ·N₀.
pub fn make_curve(l0: LowerUni, n0: NilpotentGenerator) -> Result<PolynomialCurve, CurveError> {
    if l0.n() != n0.n() {
        return Err(CurveError::Dimension(format!(
            "L0 is {0}x{0} but N0 has n={1}",
            l0.n(),
            n0.n()
        )));
    }
    let n = l0.n();
    let exp = exp_nilpotent(&n0);
    let mut l0poly = PolyMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..=i {
            *l0poly.get_mut(i, j) = Polynomial::constant(l0.get(i, j).clone());
        }
    }
    let gamma = l0poly.matmul(&exp);
    let mut n0poly = PolyMatrix::zero(n, n);
    for (j, c) in n0.subdiag().iter().enumerate() {
        *n0poly.get_mut(j + 1, j) = Polynomial::constant(c.clone());
    }
    let deriv = gamma.derivative();
    assert_eq!(
        deriv,
        gamma.matmul(&n0poly),
        "flag-convexity identity failed (internal error)"
    );
    Ok(PolynomialCurve { l0, n0, gamma })
}

impl PolynomialCurve {
    pub fn n(&self) -> usize {
        self.l0.n()
    }

    pub fn l0(&self) -> &LowerUni {
        &self.l0
    }

    pub fn n0(&self) -> &NilpotentGenerator {
        &self.n0
    }

    pub fn gamma(&self) -> &PolyMatrix {
        &self.gamma
    }

    /// Γ(t) for a rational t; exactly lower-unitriangular.
    pub fn eval(&self, t: &Rational) -> LowerUni {
        LowerUni {
            mat: self.gamma.eval(t),
        }
    }

    /// Southwest minor m_k(t): determinant of the last k rows, first k
    /// columns. Degree k(n−k) with strictly positive leading coefficient —
    /// asserted, since both hold for every L₀ and N₀.
    pub fn minor_k(&self, k: usize) -> Result<Polynomial, CurveError> {
        let n = self.n();
        if k == 0 || k > n - 1 {
            return Err(CurveError::MinorIndex { k, max: n - 1 });
        }
        let rows: Vec<usize> = (n - k..n).collect();
        let cols: Vec<usize> = (0..k).collect();
        let m = self.gamma.submatrix(&rows, &cols).det()?;
        assert_eq!(m.degree(), Some(k * (n - k)), "southwest minor degree");
        assert!(
            m.leading_coeff().unwrap().is_positive(),
            "southwest minor leading coefficient"
        );
        Ok(m)
    }

    /// All southwest minors m_1, …, m_{n−1}.
    pub fn minors(&self) -> Result<Vec<Polynomial>, CurveError> {
        (1..self.n()).map(|k| self.minor_k(k)).collect()
    }
}

/// The last two rows of Γ(t): a curve of 2×n matrices in the normalized
/// section 𝒞 (entries (1,n−1) = 1, (2,n) = 1, (1,n) = 0 as constants).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectedCurve {
    n: usize,
    rows: PolyMatrix,
}

/// Projection Π to the last two rows.
pub fn project(curve: &PolynomialCurve) -> ProjectedCurve {
    let n = curve.n();
    let rows = curve
        .gamma
        .submatrix(&[n - 2, n - 1], &(0..n).collect::<Vec<_>>());
    debug_assert_eq!(rows.get(0, n - 2), &Polynomial::one());
    debug_assert_eq!(rows.get(1, n - 1), &Polynomial::one());
    debug_assert!(rows.get(0, n - 1).is_zero());
    ProjectedCurve { n, rows }
}

impl ProjectedCurve {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &PolyMatrix {
        &self.rows
    }

    /// The 2×n rational matrix X = Π(Γ(t)) at a rational time.
    pub fn eval(&self, t: &Rational) -> QMatrix {
        self.rows.eval(t)
    }

    /// m_Y(t) = det(v_i, v_j) for Y = {i, j}, 1 ≤ i < j ≤ n (1-based labels).
    /// m_{{1,2}} coincides with the southwest minor m_2.
    pub fn minor_pair(&self, i: usize, j: usize) -> Result<Polynomial, CurveError> {
        if i == 0 || i >= j || j > self.n {
            return Err(CurveError::BadPair { n: self.n });
        }
        let (ci, cj) = (i - 1, j - 1);
        let a = &(self.rows.get(0, ci) * self.rows.get(1, cj));
        let b = &(self.rows.get(0, cj) * self.rows.get(1, ci));
        Ok(a - b)
    }

    /// All C(n,2) pair minors, keyed by (i, j) with i < j (1-based).
    pub fn all_pair_minors(&self) -> Vec<((usize, usize), Polynomial)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                out.push(((i, j), self.minor_pair(i, j).unwrap()));
            }
        }
        out
    }
}

/// The square minors of an n×n unitriangular matrix that are not identically
/// zero on the group: row set R, column set C (same size) qualify exactly
/// when the corresponding minor of the reference point exp(N)|_{t=1} is
/// nonzero. Cached per dimension.
fn testable_minors(n: usize) -> &'static [(Vec<usize>, Vec<usize>)] {
    static CACHE: OnceLock<Mutex<HashMap<usize, &'static [(Vec<usize>, Vec<usize>)]>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    map.entry(n).or_insert_with(|| {
        let reference = exp_nilpotent(&NilpotentGenerator::unit(n)).eval(&Rational::one());
        let mut list = Vec::new();
        for k in 1..=n {
            for rows in (0..n).combinations(k) {
                for cols in (0..n).combinations(k) {
                    let d = reference.submatrix(&rows, &cols).det().unwrap();
                    if !d.is_zero() {
                        list.push((rows.clone(), cols));
                    }
                }
            }
        }
        Box::leak(list.into_boxed_slice())
    })
}

/// Membership in Pos: every testable minor strictly positive. Returns false
/// on the boundary (some testable minor vanishing).
pub fn is_totally_positive(l: &LowerUni) -> bool {
    let n = l.n();
    testable_minors(n).iter().all(|(rows, cols)| {
        l.matrix()
            .submatrix(rows, cols)
            .det()
            .unwrap()
            .is_positive()
    })
}

/// Membership in Neg, via L ∈ Neg ⇔ PLP ∈ Pos with P = diag(1,−1,1,…).
pub fn is_totally_negative(l: &LowerUni) -> bool {
    is_totally_positive(&l.sign_conjugate())
}

/// Verified (not minimal) times t₋ < 0 < t₊ with G·exp(t₋N₀) totally negative
/// and G·exp(t₊N₀) totally positive, found by doubling from ∓1. Monotone
/// stability is spot-checked at t±·2^m for m ≤ 4.
pub fn positivity_thresholds(
    g: &LowerUni,
    n0: &NilpotentGenerator,
) -> Result<(Rational, Rational), CurveError> {
    let curve = make_curve(g.clone(), n0.clone())?;
    let two = Rational::from_integer(2.into());

    let mut t_plus = Rational::one();
    let mut steps = 0;
    while !is_totally_positive(&curve.eval(&t_plus)) {
        t_plus *= &two;
        steps += 1;
        if steps > 64 {
            return Err(CurveError::ThresholdCap);
        }
    }
    let mut t_minus = -Rational::one();
    steps = 0;
    while !is_totally_negative(&curve.eval(&t_minus)) {
        t_minus *= &two;
        steps += 1;
        if steps > 64 {
            return Err(CurveError::ThresholdCap);
        }
    }
    for m in 1..=4u32 {
        let scale = Rational::from_integer(num::BigInt::from(1u32 << m));
        assert!(
            is_totally_positive(&curve.eval(&(&t_plus * &scale))),
            "positivity must persist past the threshold"
        );
        assert!(
            is_totally_negative(&curve.eval(&(&t_minus * &scale))),
            "negativity must persist past the threshold"
        );
    }
    Ok((t_minus, t_plus))
}

/// One piece of an extended curve: a polynomial curve in the local parameter
/// u = t − offset, valid for global t ∈ [lo, hi].
#[derive(Clone, Debug)]
pub struct CurvePiece {
    pub curve: PolynomialCurve,
    pub offset: Rational,
    pub lo: Rational,
    pub hi: Rational,
}

impl CurvePiece {
    pub fn eval_global(&self, t: &Rational) -> LowerUni {
        self.curve.eval(&(t - &self.offset))
    }
}

/// A curve extended beyond [s, f] so that it starts totally negative and ends
/// totally positive: left piece Γ(s)·T(t−s) on [a, s], the original curve on
/// [s, f], right piece Γ(f)·T(t−f) on [f, b], with T(u) = exp(uN₀).
#[derive(Clone, Debug)]
pub struct ExtendedCurve {
    pub pieces: Vec<CurvePiece>,
    pub a: Rational,
    pub b: Rational,
}

impl ExtendedCurve {
    pub fn eval(&self, t: &Rational) -> LowerUni {
        let piece = self
            .pieces
            .iter()
            .find(|p| &p.lo <= t && t <= &p.hi)
            .unwrap_or_else(|| self.pieces.last().unwrap());
        piece.eval_global(t)
    }
}

/// Extends `curve` from [s, f] to [a, b] with Γ̃(a) ∈ Neg and Γ̃(b) ∈ Pos.
/// If an endpoint already lies in Neg/Pos the corresponding piece has zero
/// length. Endpoint memberships are verified exactly.
pub fn extend_curve(
    curve: &PolynomialCurve,
    s: &Rational,
    f: &Rational,
) -> Result<ExtendedCurve, CurveError> {
    assert!(s <= f, "domain must satisfy s <= f");
    let n0 = curve.n0().clone();
    let gs = curve.eval(s);
    let gf = curve.eval(f);

    let a = if is_totally_negative(&gs) {
        s.clone()
    } else {
        let (t_minus, _) = positivity_thresholds(&gs, &n0)?;
        s + &t_minus
    };
    let b = if is_totally_positive(&gf) {
        f.clone()
    } else {
        let (_, t_plus) = positivity_thresholds(&gf, &n0)?;
        f + &t_plus
    };

    let left = CurvePiece {
        curve: make_curve(gs, n0.clone())?,
        offset: s.clone(),
        lo: a.clone(),
        hi: s.clone(),
    };
    let middle = CurvePiece {
        curve: curve.clone(),
        offset: Rational::zero(),
        lo: s.clone(),
        hi: f.clone(),
    };
    let right = CurvePiece {
        curve: make_curve(gf, n0)?,
        offset: f.clone(),
        lo: f.clone(),
        hi: b.clone(),
    };
    let ext = ExtendedCurve {
        pieces: vec![left, middle, right],
        a,
        b,
    };
    assert!(is_totally_negative(&ext.eval(&ext.a)), "left endpoint not in Neg");
    assert!(is_totally_positive(&ext.eval(&ext.b)), "right endpoint not in Pos");
    Ok(ext)
}

/// The dual curve Γ⋆(t) = P_η(Γ(−t))^{−⊤}P_η, which is again a polynomial
/// flag-convex curve: L⋆ = P_ηL₀^{−⊤}P_η and N⋆ = N₀ with reversed
/// subdiagonal.
pub fn dual_curve(curve: &PolynomialCurve) -> PolynomialCurve {
    make_curve(curve.l0().dual(), curve.n0().reversed())
        .expect("dual of a flag-convex curve is flag-convex")
}

/// Verifies the duality identity m_{Γ⋆,k}(t) = ε·m_{Γ,n−k}(−t) exactly and
/// returns the sign ε ∈ {±1}. Panics if neither sign fits (would contradict
/// the identity).
pub fn dual_minor_sign(curve: &PolynomialCurve, k: usize) -> Result<i8, CurveError> {
    let n = curve.n();
    let star = dual_curve(curve);
    let lhs = star.minor_k(k)?;
    let rhs = curve.minor_k(n - k)?.reflect();
    if lhs == rhs {
        Ok(1)
    } else if lhs == -&rhs {
        Ok(-1)
    } else {
        panic!("duality identity failed for n={n}, k={k}: {lhs} vs ±({rhs})");
    }
}

/// Uniform random rational with numerator in [−bound, bound] and denominator
/// in [1, bound].
pub fn random_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    crate::exactnum::rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

/// Random lower-unitriangular matrix with small rational entries.
pub fn random_lower_uni(rng: &mut impl Rng, n: usize, bound: i64) -> LowerUni {
    let strict = (1..n)
        .map(|i| (0..i).map(|_| random_rational(rng, bound)).collect())
        .collect();
    LowerUni::from_strict_rows(n, strict).unwrap()
}

/// Random nilpotent generator with small strictly positive subdiagonal.
pub fn random_nilpotent(rng: &mut impl Rng, n: usize, bound: i64) -> NilpotentGenerator {
    let subdiag = (0..n - 1)
        .map(|_| {
            crate::exactnum::rat(rng.gen_range(1..=bound), rng.gen_range(1..=bound))
        })
        .collect();
    NilpotentGenerator::new(n, subdiag).unwrap()
}

/// Random flag-convex polynomial curve.
pub fn random_curve(rng: &mut impl Rng, n: usize, bound: i64) -> PolynomialCurve {
    make_curve(random_lower_uni(rng, n, bound), random_nilpotent(rng, n, bound)).unwrap()
}

/// The paper-style textual rendering of a lower-unitriangular matrix (used in
/// error messages and reports).
pub fn lower_uni_string(l: &LowerUni) -> String {
    let n = l.n();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| rational_string(l.get(i, j)))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Sign of m_Y at a specific matrix X (2×n), used for word/sign coherence
/// checks: det(v_i, v_j) with 1-based i < j.
pub fn pair_minor_sign_at(x: &QMatrix, i: usize, j: usize) -> i8 {
    let (ci, cj) = (i - 1, j - 1);
    let d = x.get(0, ci) * x.get(1, cj) - x.get(0, cj) * x.get(1, ci);
    sign(&d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{count_real_roots, isolate_roots, rat, rint};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// The worked n=4 example: L₀ with rows (1), (0 1), (1/6 0 1),
    /// (1/8 1/5 0 1) and unit subdiagonal N₀.
    pub(crate) fn example_curve_n4() -> PolynomialCurve {
        let l0 = LowerUni::from_strict_rows(
            4,
            vec![
                vec![rint(0)],
                vec![rat(1, 6), rint(0)],
                vec![rat(1, 8), rat(1, 5), rint(0)],
            ],
        )
        .unwrap();
        make_curve(l0, NilpotentGenerator::unit(4)).unwrap()
    }

    #[test]
    fn exp_unit_subdiagonal_entries() {
        let n = 5;
        let e = exp_nilpotent(&NilpotentGenerator::unit(n));
        let mut fact = vec![Rational::one()];
        for m in 1..n {
            let prev = fact[m - 1].clone();
            fact.push(prev * Rational::from_integer(m.into()));
        }
        for i in 0..n {
            for j in 0..n {
                let expect = if i >= j {
                    Polynomial::monomial(Rational::one() / &fact[i - j], i - j)
                } else {
                    Polynomial::zero()
                };
                assert_eq!(e.get(i, j), &expect, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn exp_at_zero_is_identity() {
        let e = exp_nilpotent(&NilpotentGenerator::unit(4));
        assert_eq!(e.eval(&rint(0)), QMatrix::identity(4));
    }

    #[test]
    fn exp_weighted_subdiagonal() {
        // n=3, subdiag (2,3): entry (3,1) = 2·3·t²/2! = 3t²
        let n0 = NilpotentGenerator::new(3, vec![rint(2), rint(3)]).unwrap();
        let e = exp_nilpotent(&n0);
        assert_eq!(e.get(2, 0), &Polynomial::monomial(rint(3), 2));
        assert_eq!(e.get(1, 0), &Polynomial::monomial(rint(2), 1));
        assert_eq!(e.get(2, 1), &Polynomial::monomial(rint(3), 1));
    }

    #[test]
    fn nilpotent_rejects_nonpositive() {
        assert_eq!(
            NilpotentGenerator::new(3, vec![rint(1), rint(0)]),
            Err(CurveError::NonPositiveSubdiagonal { index: 1 })
        );
        assert!(NilpotentGenerator::new(3, vec![rint(1)]).is_err());
    }

    #[test]
    fn make_curve_identity_l0() {
        let n0 = NilpotentGenerator::unit(4);
        let c = make_curve(LowerUni::identity(4), n0.clone()).unwrap();
        assert_eq!(c.gamma(), &exp_nilpotent(&n0));
    }

    #[test]
    fn make_curve_example_entry() {
        // Γ(t) entry (3,1) = t²/2 + 1/6 for the worked example.
        let c = example_curve_n4();
        let expect = Polynomial::from_coeffs(vec![rat(1, 6), rint(0), rat(1, 2)]);
        assert_eq!(c.gamma().get(2, 0), &expect);
    }

    #[test]
    fn make_curve_dimension_mismatch() {
        let err = make_curve(LowerUni::identity(3), NilpotentGenerator::unit(4));
        assert!(matches!(err, Err(CurveError::Dimension(_))));
    }

    #[test]
    fn minor_k_degree_and_sign() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for n in 2..=5 {
            let c = random_curve(&mut rng, n, 4);
            for k in 1..n {
                let m = c.minor_k(k).unwrap();
                assert_eq!(m.degree(), Some(k * (n - k)));
                assert!(m.leading_coeff().unwrap().is_positive());
            }
        }
    }

    #[test]
    fn minor_one_by_one_for_n2() {
        let c = make_curve(LowerUni::identity(2), NilpotentGenerator::unit(2)).unwrap();
        assert_eq!(c.minor_k(1).unwrap(), Polynomial::x());
        assert!(c.minor_k(0).is_err());
        assert!(c.minor_k(2).is_err());
    }

    #[test]
    fn example_m2_two_real_roots() {
        // m₂ of the worked example: degree 4, exactly two real roots
        // (near 0.26 and 1.11), both in (−1, 3/2].
        let c = example_curve_n4();
        let m2 = c.minor_k(2).unwrap();
        assert_eq!(m2.degree(), Some(4));
        assert_eq!(count_real_roots(&m2, None, None).unwrap(), 2);
        assert_eq!(
            count_real_roots(&m2, Some(&rint(-1)), Some(&rat(3, 2))).unwrap(),
            2
        );
        let ivs = isolate_roots(&m2).unwrap();
        let width = rat(1, 100);
        let r0 = crate::exactnum::refine_interval(&m2, &ivs[0], &width);
        let r1 = crate::exactnum::refine_interval(&m2, &ivs[1], &width);
        // paper prints t₃ ≈ 0.26, t₆ ≈ 1.11
        assert!(r0.lo < rat(27, 100) && rat(25, 100) < r0.hi);
        assert!(r1.lo < rat(112, 100) && rat(110, 100) < r1.hi);
    }

    #[test]
    fn pair_minor_matches_m2() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 3..=5 {
            let c = random_curve(&mut rng, n, 3);
            let pc = project(&c);
            assert_eq!(pc.minor_pair(1, 2).unwrap(), c.minor_k(2).unwrap());
        }
    }

    #[test]
    fn pair_minor_trivial_cases() {
        let n = 4;
        let c = make_curve(LowerUni::identity(n), NilpotentGenerator::unit(n)).unwrap();
        let pc = project(&c);
        // Y = {n−1, n} at t=0: det of the identity block = 1
        let m = pc.minor_pair(n - 1, n).unwrap();
        assert_eq!(m.eval(&rint(0)), rint(1));
        assert!(pc.minor_pair(2, 2).is_err());
        assert!(pc.minor_pair(0, 3).is_err());
        assert!(pc.minor_pair(1, 5).is_err());
    }

    #[test]
    fn example_pair_minor_vanishes_at_zero() {
        // Y = {2,4} vanishes at t = 0 exactly for the worked example.
        let c = example_curve_n4();
        let pc = project(&c);
        let m24 = pc.minor_pair(2, 4).unwrap();
        assert!(m24.eval(&rint(0)).is_zero());
    }

    #[test]
    fn reference_point_is_positive() {
        for n in 2..=5 {
            let e1 = make_curve(LowerUni::identity(n), NilpotentGenerator::unit(n))
                .unwrap()
                .eval(&rint(1));
            assert!(is_totally_positive(&e1), "exp(N)|_1 must be in Pos, n={n}");
            assert!(!is_totally_negative(&e1));
        }
    }

    #[test]
    fn identity_is_neither() {
        for n in 2..=5 {
            let id = LowerUni::identity(n);
            assert!(!is_totally_positive(&id));
            assert!(!is_totally_negative(&id));
        }
    }

    #[test]
    fn negative_via_sign_conjugation() {
        for n in 2..=5 {
            let em1 = make_curve(LowerUni::identity(n), NilpotentGenerator::unit(n))
                .unwrap()
                .eval(&rint(-1));
            assert!(is_totally_negative(&em1), "exp(−N) must be in Neg, n={n}");
            assert!(is_totally_positive(&em1.sign_conjugate()));
        }
    }

    #[test]
    fn thresholds_identity() {
        let (tm, tp) = positivity_thresholds(
            &LowerUni::identity(4),
            &NilpotentGenerator::unit(4),
        )
        .unwrap();
        assert_eq!(tp, rint(1));
        assert_eq!(tm, rint(-1));
    }

    #[test]
    fn thresholds_example_exceed_last_root() {
        // m₂(t) vanishes near 1.11, so the Pos threshold must lie beyond it.
        let c = example_curve_n4();
        let (tm, tp) = positivity_thresholds(c.l0(), c.n0()).unwrap();
        assert!(tp > rat(111, 100));
        assert!(tm < rint(0));
        assert!(is_totally_positive(&c.eval(&tp)));
        assert!(is_totally_negative(&c.eval(&tm)));
    }

    #[test]
    fn extend_identity_curve() {
        let c = make_curve(LowerUni::identity(4), NilpotentGenerator::unit(4)).unwrap();
        let ext = extend_curve(&c, &rint(0), &rint(0)).unwrap();
        assert_eq!(ext.a, rint(-1));
        assert_eq!(ext.b, rint(1));
        assert!(is_totally_negative(&ext.eval(&ext.a)));
        assert!(is_totally_positive(&ext.eval(&ext.b)));
    }

    #[test]
    fn extend_example_curve() {
        let c = example_curve_n4();
        let ext = extend_curve(&c, &rint(-1), &rat(3, 2)).unwrap();
        assert!(ext.a <= rint(-1) && ext.b >= rat(3, 2));
        // the three pieces of a polynomial curve agree analytically:
        // Γ(s)·exp((t−s)N₀) = Γ(t)
        for piece in &ext.pieces {
            let shifted = piece.curve.gamma().shift(&-piece.offset.clone());
            assert_eq!(&shifted, c.gamma());
        }
    }

    #[test]
    fn extend_noop_when_already_pos_ended() {
        let n0 = NilpotentGenerator::unit(3);
        let c = make_curve(LowerUni::identity(3), n0).unwrap();
        // Γ(2) ∈ Pos and Γ(−2) ∈ Neg already
        let ext = extend_curve(&c, &rint(-2), &rint(2)).unwrap();
        assert_eq!(ext.a, rint(-2));
        assert_eq!(ext.b, rint(2));
    }

    #[test]
    fn dual_curve_is_flag_convex_with_reversed_generator() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let c = random_curve(&mut rng, 4, 3);
        let d = dual_curve(&c);
        let mut rev = c.n0().subdiag().to_vec();
        rev.reverse();
        assert_eq!(d.n0().subdiag(), &rev[..]);
    }

    #[test]
    fn dual_identity_on_example() {
        let c = example_curve_n4();
        for k in 1..4 {
            let eps = dual_minor_sign(&c, k).unwrap();
            assert!(eps == 1 || eps == -1);
        }
    }

    #[test]
    fn dual_of_dual_reproduces_minors_up_to_reflection() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let c = random_curve(&mut rng, 4, 3);
        let dd = dual_curve(&dual_curve(&c));
        // double reflection: m_{Γ⋆⋆,k}(t) = ±m_{Γ,k}(t)
        for k in 1..4 {
            let a = dd.minor_k(k).unwrap();
            let b = c.minor_k(k).unwrap();
            assert!(a == b || a == -&b, "k={k}");
        }
    }

    #[test]
    fn lower_uni_construction_errors() {
        let mut bad = QMatrix::identity(3);
        *bad.get_mut(0, 2) = rint(5);
        assert_eq!(
            LowerUni::from_matrix(bad).unwrap_err(),
            CurveError::NotUnitriangular
        );
        let mut bad_diag = QMatrix::identity(3);
        *bad_diag.get_mut(1, 1) = rint(2);
        assert_eq!(
            LowerUni::from_matrix(bad_diag).unwrap_err(),
            CurveError::NotUnitriangular
        );
    }

    #[test]
    fn lower_uni_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let l = random_lower_uni(&mut rng, 5, 6);
        assert_eq!(l.mul(&l.inverse()), LowerUni::identity(5));
    }
}
