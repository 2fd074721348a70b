//! Exact rational polynomials: characteristic polynomials, square-free
//! decomposition and Sturm-sequence real-root isolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Coefficients from the constant term upward, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Poly(Vec<BigRational>);

impl Poly {
    fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    fn derivative(&self) -> Poly {
        Poly::new(
            self.0.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(BigInt::from(k))).collect(),
        )
    }

    fn sub(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let zero = BigRational::zero();
        Poly::new((0..len).map(|k| self.0.get(k).unwrap_or(&zero) - other.0.get(k).unwrap_or(&zero)).collect())
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    fn monic(&self) -> Poly {
        let lead = self.lead().clone();
        Poly(self.0.iter().map(|c| c / &lead).collect())
    }

    /// Quotient and remainder.
    fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        let dd = divisor.degree();
        if self.is_zero() || self.degree() < dd {
            return (Poly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / divisor.lead();
            for (j, d) in divisor.0.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Characteristic polynomial `det(xI - M)` by Faddeev–LeVerrier.
    pub fn characteristic(matrix: &[Vec<i64>]) -> Poly {
        let n = matrix.len();
        let a: Vec<Vec<BigRational>> =
            matrix.iter().map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut m = vec![vec![BigRational::zero(); n]; n];
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = vec![vec![BigRational::zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    let mut s = BigRational::zero();
                    for l in 0..n {
                        s += &a[i][l] * &m[l][j];
                    }
                    if i == j {
                        s += &coeffs[n - k + 1];
                    }
                    next[i][j] = s;
                }
            }
            m = next;
            let mut trace = BigRational::zero();
            for i in 0..n {
                for l in 0..n {
                    trace += &a[i][l] * &m[l][i];
                }
            }
            coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
        }
        Poly::new(coeffs)
    }

    /// Yun's algorithm: `(factor, multiplicity)` with square-free, pairwise
    /// coprime factors whose product (with multiplicities) is `self` up to a constant.
    fn square_free_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            let b_next = b.div_rem(&a).0;
            let c_next = d.div_rem(&a).0;
            d = c_next.sub(&b_next.derivative());
            if a.degree() > 0 {
                out.push((a, i));
            }
            b = b_next;
            i += 1;
        }
        out
    }

    fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let k = seq.len();
            if seq[k - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[k - 2].div_rem(&seq[k - 1]).1.neg();
            if r.is_zero() {
                break;
            }
            seq.push(r);
        }
        seq
    }

    /// All real roots with multiplicity, ascending.
    pub fn real_roots(&self) -> Vec<f64> {
        let mut roots = Vec::new();
        for (factor, mult) in self.square_free_decomposition() {
            for r in real_roots_square_free(&factor) {
                roots.extend(std::iter::repeat_n(r, mult));
            }
        }
        roots.sort_by(f64::total_cmp);
        roots
    }
}

fn sign_changes(seq: &[Poly], x: &BigRational) -> usize {
    let signs: Vec<bool> = seq.iter().map(|p| p.eval(x)).filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn real_roots_square_free(p: &Poly) -> Vec<f64> {
    if p.degree() == 0 {
        return Vec::new();
    }
    let seq = p.sturm_sequence();
    // Cauchy bound: every root lies strictly inside (-bound, bound)
    let lead = p.lead().abs();
    let bound = p.0.iter().map(|c| c.abs() / &lead).fold(BigRational::zero(), |a, b| a.max(b))
        + BigRational::from_integer(2.into());
    let mut roots = Vec::new();
    // Work list of half-open intervals (lo, hi] with their root counts.
    let lo = -bound.clone();
    let count = sign_changes(&seq, &lo) - sign_changes(&seq, &bound);
    let mut pending = vec![(lo, bound, count)];
    let two = BigRational::from_integer(2.into());
    while let Some((lo, hi, count)) = pending.pop() {
        match count {
            0 => {}
            1 => roots.push(refine(p, lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                let left = sign_changes(&seq, &lo) - sign_changes(&seq, &mid);
                pending.push((lo, mid.clone(), left));
                pending.push((mid, hi, count - left));
            }
        }
    }
    roots
}

/// Bisects `(lo, hi]`, which holds exactly one simple root of `p`.
fn refine(p: &Poly, mut lo: BigRational, mut hi: BigRational) -> f64 {
    let two = BigRational::from_integer(2.into());
    let mut p_hi = p.eval(&hi);
    if p_hi.is_zero() {
        return hi.to_f64().unwrap_or(f64::NAN);
    }
    for _ in 0..200 {
        let width = (&hi - &lo).to_f64().unwrap_or(f64::INFINITY);
        let scale = hi.abs().to_f64().unwrap_or(1.0).max(1.0);
        if width <= 1e-15 * scale {
            break;
        }
        let mid = (&lo + &hi) / &two;
        let p_mid = p.eval(&mid);
        if p_mid.is_zero() {
            return mid.to_f64().unwrap_or(f64::NAN);
        }
        if p_mid.is_positive() != p_hi.is_positive() {
            lo = mid;
        } else {
            hi = mid;
            p_hi = p_mid;
        }
    }
    ((&lo + &hi) / &two).to_f64().unwrap_or(f64::NAN)
}
