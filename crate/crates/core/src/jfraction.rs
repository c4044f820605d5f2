//! Jacobi continued fractions: extraction from moment sequences, moment
//! reconstruction, the lambda-product formula for Hankel determinants, and
//! series evaluation of the continued fraction itself.
//!
//! Depth accounting: a prefix of 2m+1 moments determines m alphas and m
//! lambdas, and conversely.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::hankel::ldl_decompose;
use crate::numeric::Rat;
use crate::series::{PowerSeries, Sequence};

/// Coefficients (alpha_0..alpha_{m-1}; lambda_1..lambda_m) of the continued
/// fraction expansion of an ordinary generating function, together with the
/// leading moment mu_0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JFraction {
    alpha: Vec<Rat>,
    lambda: Vec<Rat>,
    mu0: Rat,
}

impl JFraction {
    /// lambda entries must be nonzero (regularity) and mu0 != 0.
    pub fn new(alpha: Vec<Rat>, lambda: Vec<Rat>, mu0: Rat) -> Result<Self> {
        if mu0.is_zero() {
            return Err(Error::SingularMinor(0));
        }
        if let Some(k) = lambda.iter().position(|l| l.is_zero()) {
            return Err(Error::SingularMinor(k + 1));
        }
        Ok(JFraction { alpha, lambda, mu0 })
    }

    pub fn alpha(&self) -> &[Rat] {
        &self.alpha
    }

    pub fn lambda(&self) -> &[Rat] {
        &self.lambda
    }

    pub fn mu0(&self) -> &Rat {
        &self.mu0
    }

    /// Number of (alpha, lambda) pairs.
    pub fn depth(&self) -> usize {
        self.alpha.len().min(self.lambda.len())
    }

    fn require_depth(&self, needed: usize) -> Result<()> {
        if self.depth() < needed {
            return Err(Error::InsufficientDepth {
                needed,
                have: self.depth(),
            });
        }
        Ok(())
    }
}

/// Read the J-fraction coefficients off the LDL^T factorization:
/// lambda_k = d_k / d_{k-1} and alpha_n = L_{n+1,n} - L_{n,n-1}
/// (with L_{0,-1} := 0). A prefix of 2m+1 terms yields depth m.
pub fn extract_jfraction(s: &Sequence) -> Result<JFraction> {
    let m = s.max_hankel_order();
    let ldl = ldl_decompose(s, m)?;
    let mut alpha = Vec::with_capacity(m);
    for n in 0..m {
        let below = ldl.l_entry(n + 1, n).clone();
        let prev = if n == 0 {
            Rat::zero()
        } else {
            ldl.l_entry(n, n - 1).clone()
        };
        alpha.push(below - prev);
    }
    let d = ldl.d();
    let lambda = (1..=m).map(|k| &d[k] / &d[k - 1]).collect();
    JFraction::new(alpha, lambda, d[0].clone())
}

/// Reconstruct mu_0..mu_N from the continued fraction by powers of the
/// Jacobi operator (diagonal alpha, superdiagonal 1, subdiagonal lambda):
/// mu_n = mu0 * (J^n)_{0,0}, equivalently a weighted Motzkin path count.
/// No divisions are involved.
pub fn moments_from_jfraction(j: &JFraction, n_terms_order: usize) -> Result<Sequence> {
    let depth = n_terms_order.div_ceil(2);
    j.require_depth(depth)?;
    // w[l] = weighted count of paths from level 0 to level l after the steps
    // taken so far. One step multiplies by J.
    let mut w = vec![Rat::zero(); depth + 2];
    w[0] = Rat::one();
    let mut moments = Vec::with_capacity(n_terms_order + 1);
    moments.push(j.mu0.clone());
    for _ in 1..=n_terms_order {
        let mut next = vec![Rat::zero(); depth + 2];
        for l in 0..=depth {
            if w[l].is_zero() {
                continue;
            }
            // up step to l+1 (weight 1)
            if l + 1 <= depth {
                let v = w[l].clone();
                next[l + 1] += v;
            }
            // level step (weight alpha_l)
            if l < j.alpha.len() {
                next[l] += &w[l] * &j.alpha[l];
            }
            // down step to l-1 (weight lambda_l)
            if l >= 1 {
                next[l - 1] += &w[l] * &j.lambda[l - 1];
            }
        }
        w = next;
        moments.push(&j.mu0 * &w[0]);
    }
    Sequence::new(moments)
}

/// Krattenthaler's product formula: h_n = mu0^(n+1) * prod lambda_k^(n+1-k),
/// for n = 0..N.
pub fn hankel_from_lambdas(j: &JFraction, n_max: usize) -> Result<Vec<Rat>> {
    if j.lambda.len() < n_max {
        return Err(Error::InsufficientDepth {
            needed: n_max,
            have: j.lambda.len(),
        });
    }
    let mut out = Vec::with_capacity(n_max + 1);
    let mut acc = j.mu0.clone();
    // running product of lambda_1..lambda_n picks up one more factor of each
    // lambda per step, matching the exponents n+1-k
    let mut lambda_prod = Rat::one();
    for n in 0..=n_max {
        if n > 0 {
            lambda_prod *= &j.lambda[n - 1];
            acc = acc * &j.mu0 * &lambda_prod;
        }
        out.push(acc.clone());
    }
    Ok(out)
}

/// Evaluate the continued fraction as a power series to order N by bottom-up
/// truncated evaluation. Equals the ordinary generating function of the
/// reconstructed moments.
pub fn cf_series(j: &JFraction, n_order: usize) -> Result<PowerSeries> {
    let depth = n_order.div_ceil(2);
    j.require_depth(depth)?;
    // tail_depth = 1; tail_l = 1 - alpha_l x - lambda_{l+1} x^2 / tail_{l+1}
    let mut tail = PowerSeries::one(n_order);
    for l in (0..depth).rev() {
        let mut head = PowerSeries::one(n_order);
        if n_order >= 1 {
            let lin = PowerSeries::x(n_order).scale(&j.alpha[l]);
            head = head.sub(&lin);
        }
        if n_order >= 2 {
            let x2 = PowerSeries::x(n_order).mul(&PowerSeries::x(n_order));
            let frac = x2.scale(&j.lambda[l]).div(&tail)?;
            head = head.sub(&frac);
        }
        tail = head;
    }
    PowerSeries::constant(j.mu0.clone(), n_order).div(&tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat_int;

    fn rats(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    fn jf(alpha: &[i64], lambda: &[i64]) -> JFraction {
        JFraction::new(rats(alpha), rats(lambda), rat_int(1)).unwrap()
    }

    #[test]
    fn extract_catalan() {
        let s = Sequence::from_ints(&[1, 1, 2, 5, 14, 42, 132, 429, 1430]);
        let j = extract_jfraction(&s).unwrap();
        assert_eq!(j.alpha(), rats(&[1, 2, 2, 2]).as_slice());
        assert_eq!(j.lambda(), rats(&[1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn extract_factorial() {
        let s = Sequence::from_ints(&[1, 1, 2, 6, 24, 120, 720]);
        let j = extract_jfraction(&s).unwrap();
        assert_eq!(j.alpha(), rats(&[1, 3, 5]).as_slice());
        assert_eq!(j.lambda(), rats(&[1, 4, 9]).as_slice());
    }

    #[test]
    fn extract_derangement() {
        let s = Sequence::from_ints(&[1, 0, 1, 2, 9, 44, 265]);
        let j = extract_jfraction(&s).unwrap();
        assert_eq!(j.alpha(), rats(&[0, 2, 4]).as_slice());
        assert_eq!(j.lambda(), rats(&[1, 4, 9]).as_slice());
    }

    #[test]
    fn moments_catalan() {
        let j = jf(&[1, 2, 2], &[1, 1, 1]);
        let s = moments_from_jfraction(&j, 5).unwrap();
        assert_eq!(s, Sequence::from_ints(&[1, 1, 2, 5, 14, 42]));
    }

    #[test]
    fn moments_central_binomial() {
        let j = jf(&[2, 2], &[2, 1]);
        let s = moments_from_jfraction(&j, 4).unwrap();
        assert_eq!(s, Sequence::from_ints(&[1, 2, 6, 20, 70]));
    }

    #[test]
    fn moments_depth_zero() {
        let j = JFraction::new(vec![], vec![], rat_int(3)).unwrap();
        assert_eq!(moments_from_jfraction(&j, 0).unwrap(), Sequence::from_ints(&[3]));
        assert_eq!(
            moments_from_jfraction(&j, 1),
            Err(Error::InsufficientDepth { needed: 1, have: 0 })
        );
    }

    #[test]
    fn lambda_product_schroeder() {
        let j = jf(&[2, 3, 3], &[2, 2, 2]);
        assert_eq!(
            hankel_from_lambdas(&j, 3).unwrap(),
            rats(&[1, 2, 8, 64])
        );
    }

    #[test]
    fn lambda_product_order_zero() {
        let j = JFraction::new(vec![], vec![], rat_int(7)).unwrap();
        assert_eq!(hankel_from_lambdas(&j, 0).unwrap(), rats(&[7]));
    }

    #[test]
    fn lambda_product_factorial() {
        let j = jf(&[1, 3, 5], &[1, 4, 9]);
        assert_eq!(
            hankel_from_lambdas(&j, 3).unwrap(),
            rats(&[1, 1, 4, 144])
        );
    }

    #[test]
    fn rejects_zero_lambda() {
        assert_eq!(
            JFraction::new(rats(&[1, 1]), rats(&[1, 0]), rat_int(1)),
            Err(Error::SingularMinor(2))
        );
    }

    #[test]
    fn cf_series_catalan() {
        let j = jf(&[1, 2, 2], &[1, 1, 1]);
        let g = cf_series(&j, 5).unwrap();
        assert_eq!(g, PowerSeries::from_ints(&[1, 1, 2, 5, 14, 42]));
    }

    #[test]
    fn cf_series_empty() {
        let j = JFraction::new(vec![], vec![], rat_int(4)).unwrap();
        assert_eq!(cf_series(&j, 0).unwrap(), PowerSeries::from_ints(&[4]));
    }

    #[test]
    fn cf_series_schroeder() {
        let j = jf(&[2, 3, 3], &[2, 2, 2]);
        let g = cf_series(&j, 5).unwrap();
        assert_eq!(g, PowerSeries::from_ints(&[1, 2, 6, 22, 90, 394]));
    }

    #[test]
    fn cf_series_matches_moments() {
        let j = jf(&[1, -2, 3, 0], &[2, 5, 1, 3]);
        let n = 8;
        let g = cf_series(&j, n).unwrap();
        let m = moments_from_jfraction(&j, n).unwrap();
        assert_eq!(g.coeffs(), m.terms());
    }

    #[test]
    fn round_trip_extract_of_moments() {
        let j = jf(&[1, -2, 3, 0], &[2, 5, 1, 3]);
        let m = moments_from_jfraction(&j, 8).unwrap();
        assert_eq!(extract_jfraction(&m).unwrap(), j);
    }

    #[test]
    fn binomial_shift_preserves_lambdas() {
        use crate::series::{binomial_transform, TransformSign};
        let s = Sequence::from_ints(&[1, 1, 2, 6, 24, 120, 720]);
        let j = extract_jfraction(&s).unwrap();
        let t = binomial_transform(&s, TransformSign::Minus);
        let jt = extract_jfraction(&t).unwrap();
        assert_eq!(j.lambda(), jt.lambda());
        for (a, b) in j.alpha().iter().zip(jt.alpha()) {
            assert_eq!(a - b, rat_int(1));
        }
    }
}
