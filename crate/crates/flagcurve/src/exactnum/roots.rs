use super::{sign, ExactError, Polynomial, Rational};
use num::{One, Signed, Zero};

/// Open interval (lo, hi) isolating exactly one distinct real root of the
/// polynomial it was produced from, together with that root's multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, t: &Rational) -> bool {
        &self.lo < t && t < &self.hi
    }

    pub fn disjoint_from(&self, other: &RootInterval) -> bool {
        self.hi <= other.lo || other.hi <= self.lo
    }
}

/// Sturm chain of a squarefree polynomial. Sign variations V are computed
/// dropping zeros, which makes V right-continuous; V(a) − V(b) then counts
/// the distinct roots in the half-open interval (a, b].
struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    fn new(q: &Polynomial) -> Self {
        debug_assert!(!q.is_zero());
        let mut chain = vec![q.keep_sign_normalized()];
        if q.deg() >= 1 {
            chain.push(q.derivative().keep_sign_normalized());
            loop {
                let k = chain.len();
                let (_, r) = chain[k - 2].divrem(&chain[k - 1]).unwrap();
                if r.is_zero() {
                    break;
                }
                chain.push((-&r).keep_sign_normalized());
                if chain.last().unwrap().degree() == Some(0) {
                    break;
                }
            }
        }
        SturmChain { chain }
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut last: i8 = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|p| sign(&p.eval(x))))
    }

    fn variations_at_infinity(&self, minus: bool) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at_infinity(minus)))
    }

    /// Distinct roots in (a, b], requiring a < b.
    fn count_halfopen(&self, a: &Rational, b: &Rational) -> usize {
        debug_assert!(a < b);
        self.variations_at(a) - self.variations_at(b)
    }

    /// Distinct roots in (lo, hi] with `None` meaning −∞ / +∞.
    fn count(&self, lo: Option<&Rational>, hi: Option<&Rational>) -> usize {
        if let (Some(a), Some(b)) = (lo, hi) {
            if a >= b {
                return 0;
            }
        }
        let va = match lo {
            Some(a) => self.variations_at(a),
            None => self.variations_at_infinity(true),
        };
        let vb = match hi {
            Some(b) => self.variations_at(b),
            None => self.variations_at_infinity(false),
        };
        va - vb
    }
}

/// Number of distinct real roots of `p` in the half-open interval (lo, hi],
/// with `None` bounds meaning ∓∞. Uses a Sturm chain of the squarefree part,
/// so multiple roots are counted once.
pub fn count_real_roots(
    p: &Polynomial,
    lo: Option<&Rational>,
    hi: Option<&Rational>,
) -> Result<usize, ExactError> {
    let q = squarefree_part(p)?;
    Ok(SturmChain::new(&q).count(lo, hi))
}

/// Whether `p` (nonzero) has no repeated complex roots.
pub fn is_squarefree(p: &Polynomial) -> Result<bool, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if p.deg() == 0 {
        return Ok(true);
    }
    Ok(p.gcd(&p.derivative()).deg() == 0)
}

/// p divided by gcd(p, p′): same distinct roots, all simple. Keeps the
/// leading coefficient (and hence sign behaviour at ±∞) of `p`.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if p.deg() == 0 {
        return Ok(p.clone());
    }
    let g = p.gcd(&p.derivative());
    if g.deg() == 0 {
        Ok(p.clone())
    } else {
        Ok(p.exact_div(&g))
    }
}

/// Whether two nonzero polynomials share a complex root (gcd degree ≥ 1).
/// Shared *real* roots in particular are detected.
pub fn common_roots(p: &Polynomial, q: &Polynomial) -> Result<bool, ExactError> {
    if p.is_zero() || q.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    Ok(p.gcd(q).deg() >= 1)
}

/// Yun squarefree factorization: p = lc · Π fᵢ^i with the fᵢ monic,
/// squarefree, and pairwise coprime. Only factors of positive degree are
/// returned.
pub fn squarefree_decomposition(p: &Polynomial) -> Result<Vec<(Polynomial, usize)>, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if p.deg() == 0 {
        return Ok(Vec::new());
    }
    let g = p.gcd(&p.derivative());
    if g.deg() == 0 {
        return Ok(vec![(p.monic(), 1)]);
    }
    let mut out = Vec::new();
    let mut b = p.exact_div(&g).monic();
    let c = p.derivative().exact_div(&g);
    // c was divided by the same monic g as b but b was re-normalized; keep
    // the pairing exact by normalizing c with the leading coefficient of p.
    let lc_inv = Rational::one() / p.leading_coeff().unwrap();
    let mut d = &c.scale(&lc_inv) - &b.derivative();
    let mut i = 1;
    while b.deg() >= 1 {
        let a = b.gcd(&d);
        if a.deg() >= 1 {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a);
        let cnext = d.exact_div(&a);
        d = &cnext - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// Strict bound B with every real root of `p` inside (−B, B).
fn cauchy_bound(p: &Polynomial) -> Rational {
    let lc = p.leading_coeff().expect("nonzero polynomial").abs();
    let mut m = Rational::zero();
    for c in &p.coeffs()[..p.deg()] {
        let v = c.abs() / &lc;
        if v > m {
            m = v;
        }
    }
    Rational::one() + m
}

fn half(x: &Rational) -> Rational {
    x / Rational::from_integer(2.into())
}

/// Isolating intervals for a squarefree `q` of degree ≥ 1. Every returned
/// endpoint is a non-root of `q`, intervals are pairwise disjoint and sorted.
fn isolate_squarefree(q: &Polynomial) -> Vec<(Rational, Rational)> {
    let chain = SturmChain::new(q);
    let b = cauchy_bound(q);
    let a = -&b;
    let total = chain.count_halfopen(&a, &b);
    let mut out = Vec::new();
    let mut stack = vec![(a, b, total)];
    while let Some((lo, hi, cnt)) = stack.pop() {
        match cnt {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = half(&(&lo + &hi));
                if q.eval(&mid).is_zero() {
                    // The midpoint is itself a root: carve out a tight cell
                    // around it whose endpoints are non-roots.
                    let mut w = half(&half(&(&hi - &lo)));
                    loop {
                        let l = &mid - &w;
                        let h = &mid + &w;
                        if !q.eval(&l).is_zero()
                            && !q.eval(&h).is_zero()
                            && chain.count_halfopen(&l, &h) == 1
                        {
                            let left_cnt = chain.count_halfopen(&lo, &l);
                            let right_cnt = chain.count_halfopen(&h, &hi);
                            stack.push((lo, l.clone(), left_cnt));
                            out.push((l, h.clone()));
                            stack.push((h, hi, right_cnt));
                            break;
                        }
                        w = half(&w);
                    }
                } else {
                    let left_cnt = chain.count_halfopen(&lo, &mid);
                    stack.push((lo, mid.clone(), left_cnt));
                    stack.push((mid, hi, cnt - left_cnt));
                }
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Isolates every distinct real root of `p`: disjoint open intervals in
/// strictly increasing order, one per root, with multiplicities recovered
/// from the Yun factor the root belongs to.
pub fn isolate_roots(p: &Polynomial) -> Result<Vec<RootInterval>, ExactError> {
    let q = squarefree_part(p)?;
    if q.deg() == 0 {
        return Ok(Vec::new());
    }
    let cells = isolate_squarefree(&q);
    let factors = squarefree_decomposition(p)?;
    let chains: Vec<(SturmChain, usize)> = factors
        .iter()
        .map(|(f, m)| (SturmChain::new(f), *m))
        .collect();
    let mut out = Vec::with_capacity(cells.len());
    for (lo, hi) in cells {
        let multiplicity = if factors.len() == 1 {
            factors[0].1
        } else {
            // Endpoints are non-roots of q, hence of every factor, so the
            // half-open count equals the open count here.
            chains
                .iter()
                .find(|(c, _)| c.count_halfopen(&lo, &hi) == 1)
                .map(|(_, m)| *m)
                .expect("every isolated root lies in exactly one factor")
        };
        out.push(RootInterval { lo, hi, multiplicity });
    }
    Ok(out)
}

/// Shrinks an isolating interval below `width` by bisection. `f` must have
/// exactly one root in the interval, simple, with nonzero values of opposite
/// sign at the endpoints (as produced by [`isolate_roots`] for the squarefree
/// part, or against the root's own Yun factor).
pub fn refine_interval(f: &Polynomial, iv: &RootInterval, width: &Rational) -> RootInterval {
    assert!(width.is_positive(), "refinement width must be positive");
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let slo = sign(&f.eval(&lo));
    let shi = sign(&f.eval(&hi));
    assert!(slo != 0 && shi != 0 && slo != shi, "not a sign-isolating interval");
    while &hi - &lo > *width {
        let mid = half(&(&lo + &hi));
        match sign(&f.eval(&mid)) {
            // The root is exactly mid: return a tight symmetric interval.
            0 => {
                let w = half(&half(&(&hi - &lo).min(width.clone())));
                lo = &mid - &w;
                hi = &mid + &w;
                break;
            }
            s if s == slo => lo = mid,
            _ => hi = mid,
        }
    }
    RootInterval {
        lo,
        hi,
        multiplicity: iv.multiplicity,
    }
}

/// Isolates the real roots of a family of polynomials and refines until all
/// isolating intervals are pairwise disjoint, yielding one strictly ordered
/// timeline tagged by the family index. Multiplicities are per the owning
/// polynomial.
///
/// Callers must rule out shared roots between distinct members beforehand
/// (via [`common_roots`]); a shared root would make separation impossible,
/// which is reported as an error after a refinement cap.
pub fn ordered_roots_of_family(
    family: &[Polynomial],
) -> Result<Vec<(usize, RootInterval)>, ExactError> {
    let mut items: Vec<(usize, Polynomial, RootInterval)> = Vec::new();
    for (idx, p) in family.iter().enumerate() {
        let q = squarefree_part(p)?;
        if q.deg() == 0 {
            continue;
        }
        for iv in isolate_roots(p)? {
            items.push((idx, q.clone(), iv));
        }
    }
    let mut checked_pairs: std::collections::HashSet<(usize, usize)> =
        std::collections::HashSet::new();
    loop {
        let mut overlapping = None;
        'outer: for a in 0..items.len() {
            for b in a + 1..items.len() {
                if !items[a].2.disjoint_from(&items[b].2) {
                    overlapping = Some((a, b));
                    break 'outer;
                }
            }
        }
        let Some((a, b)) = overlapping else { break };
        // Rule out a genuinely shared root once per interval pair; without
        // this check the bisection below would never terminate on one.
        if checked_pairs.insert((a, b)) {
            let g = items[a].1.gcd(&items[b].1);
            if g.deg() >= 1 {
                let lo = items[a].2.lo.clone().min(items[b].2.lo.clone());
                let hi = items[a].2.hi.clone().max(items[b].2.hi.clone());
                if SturmChain::new(&g).count_halfopen(&lo, &hi) > 0 {
                    return Err(ExactError::Dimension(
                        "cannot separate equal roots of distinct family members".into(),
                    ));
                }
            }
        }
        for idx in [a, b] {
            let (_, q, iv) = &items[idx];
            let w = half(&half(&iv.width()));
            let refined = refine_interval(q, iv, &w);
            items[idx].2 = refined;
        }
    }
    items.sort_by(|x, y| x.2.lo.cmp(&y.2.lo));
    Ok(items.into_iter().map(|(idx, _, iv)| (idx, iv)).collect())
}
