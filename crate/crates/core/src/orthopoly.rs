//! Monic orthogonal polynomials from moments, by three independent routes:
//! the three-term recurrence, moment determinants, and inversion of the
//! LDL^T lower factor. The moment functional, the squared-polynomial
//! evaluation, and the coefficient-array product formula for the Hankel
//! transform live here too.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::hankel::{hankel_determinant, ldl_decompose, rational_det};
use crate::jfraction::JFraction;
use crate::numeric::Rat;
use crate::series::Sequence;

/// A dense polynomial with exact rational coefficients, constant term
/// first. Canonically trimmed: no trailing zeros, the zero polynomial has
/// an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![Rat::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
                let b = other.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
                a + b
            })
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Dense convolution product.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }

    /// Multiply by x.
    pub fn shift_up(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero()];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs }
    }
}

/// Lower-triangular coefficient array of a monic polynomial family: row n
/// holds the n+1 coefficients of P_n(x), constant term first, with a unit
/// last entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientArray {
    rows: Vec<Vec<Rat>>,
}

impl CoefficientArray {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        for (n, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n + 1, "row {n} must have {} entries", n + 1);
            assert!(row[n].is_one(), "row {n} is not monic");
        }
        CoefficientArray { rows }
    }

    /// Highest row index N.
    pub fn max_degree(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Rat] {
        &self.rows[n]
    }

    pub fn entry(&self, n: usize, k: usize) -> &Rat {
        &self.rows[n][k]
    }

    pub fn polynomial(&self, n: usize) -> Polynomial {
        Polynomial::new(self.rows[n].clone())
    }

    /// Exact inverse of this unit-lower-triangular matrix, by forward
    /// substitution. The result is again unit lower triangular.
    pub fn inverse_rows(&self) -> Vec<Vec<Rat>> {
        invert_unit_lower(&self.rows)
    }

    /// First column of the inverse; for a moment coefficient array this
    /// recovers the moments.
    pub fn inverse_first_column(&self) -> Vec<Rat> {
        self.inverse_rows().into_iter().map(|r| r[0].clone()).collect()
    }
}

/// Invert a unit lower triangular matrix given as ragged rows (row n has
/// n+1 entries).
pub(crate) fn invert_unit_lower(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = rows.len();
    let mut inv: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![Rat::zero(); i + 1];
        row[i] = Rat::one();
        // (rows * inv)[i][j] = 0 for j < i, solved top-down
        for j in 0..i {
            let mut acc = Rat::zero();
            for (k, prev) in inv.iter().enumerate().take(i).skip(j) {
                acc += &rows[i][k] * &prev[j];
            }
            row[j] = -acc;
        }
        inv.push(row);
    }
    inv
}

fn require_terms(s: &Sequence, needed: usize) -> Result<()> {
    if s.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            have: s.len(),
        });
    }
    Ok(())
}

/// Build rows 0..N by the three-term recurrence
/// P_{n+1} = (x - alpha_n) P_n - lambda_n P_{n-1}, with P_{-1} = 0, P_0 = 1.
pub fn polys_from_recurrence(j: &JFraction, n_max: usize) -> Result<CoefficientArray> {
    if j.alpha().len() < n_max || j.lambda().len() + 1 < n_max {
        return Err(Error::InsufficientDepth {
            needed: n_max,
            have: j.alpha().len().min(j.lambda().len() + 1),
        });
    }
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n_max + 1);
    let mut prev = Polynomial::zero();
    let mut cur = Polynomial::one();
    rows.push(vec![Rat::one()]);
    for n in 0..n_max {
        let mut next = cur.shift_up().sub(&cur.scale(&j.alpha()[n]));
        if n >= 1 {
            next = next.sub(&prev.scale(&j.lambda()[n - 1]));
        }
        let mut coeffs = next.coeffs().to_vec();
        coeffs.resize(n + 2, Rat::zero());
        rows.push(coeffs);
        prev = cur;
        cur = next;
    }
    Ok(CoefficientArray::from_rows(rows))
}

/// Build rows 0..N from moment determinants: P_n(x) = D_n(x) / D_{n-1},
/// where D_n(x) is the moment determinant with bottom row 1, x, ..., x^n
/// and D_{n-1} is the Hankel determinant of order n-1 (D_{-1} := 1).
/// The coefficient of x^j is the signed cofactor of the bottom row.
pub fn polys_from_determinants(s: &Sequence, n_max: usize) -> Result<CoefficientArray> {
    if n_max > 0 {
        require_terms(s, 2 * n_max)?;
    }
    let t = s.terms();
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![Rat::one()]);
    for n in 1..=n_max {
        let d_prev = hankel_determinant(s, n - 1)?;
        if d_prev.is_zero() {
            return Err(Error::SingularMinor(n - 1));
        }
        let mut row = Vec::with_capacity(n + 1);
        for j in 0..=n {
            // minor: the n x n moment block (mu_{i+k}), i = 0..n-1,
            // k = 0..n without column j
            let minor: Vec<Vec<Rat>> = (0..n)
                .map(|i| {
                    (0..=n)
                        .filter(|&k| k != j)
                        .map(|k| t[i + k].clone())
                        .collect()
                })
                .collect();
            let mut c = rational_det(&minor) / &d_prev;
            if (n + j) % 2 == 1 {
                c = -c;
            }
            row.push(c);
        }
        rows.push(row);
    }
    Ok(CoefficientArray::from_rows(rows))
}

/// Coefficient array as the inverse of the unit-lower-triangular L of the
/// LDL^T factorization.
pub fn polys_from_ldl(s: &Sequence, n_max: usize) -> Result<CoefficientArray> {
    let ldl = ldl_decompose(s, n_max)?;
    let full = invert_unit_lower(
        &ldl.l_rows()
            .iter()
            .enumerate()
            .map(|(i, r)| r[..=i].to_vec())
            .collect::<Vec<_>>(),
    );
    Ok(CoefficientArray::from_rows(full))
}

/// The moment functional: L(sum c_j x^j) = sum c_j mu_j.
pub fn apply_functional(s: &Sequence, p: &Polynomial) -> Result<Rat> {
    if let Some(d) = p.degree() {
        require_terms(s, d + 1)?;
    }
    let t = s.terms();
    let mut acc = Rat::zero();
    for (j, c) in p.coeffs().iter().enumerate() {
        acc += c * &t[j];
    }
    Ok(acc)
}

/// L(P_k^2) via the self-convolution of row k:
/// sum_{i=0}^{2k} (sum_{j=0}^i a_{k,j} a_{k,i-j}) mu_i.
pub fn functional_p_squared(s: &Sequence, a: &CoefficientArray, k: usize) -> Result<Rat> {
    require_terms(s, 2 * k + 1)?;
    let row = a.row(k);
    let t = s.terms();
    let mut acc = Rat::zero();
    for i in 0..=2 * k {
        let mut conv = Rat::zero();
        for j in i.saturating_sub(k)..=i.min(k) {
            conv += &row[j] * &row[i - j];
        }
        acc += conv * &t[i];
    }
    Ok(acc)
}

/// The coefficient-array product formula for the Hankel transform:
/// h_n = prod_{k=0}^n L(P_k^2), for n = 0..N.
pub fn hankel_via_coefficients(
    s: &Sequence,
    a: &CoefficientArray,
    n_max: usize,
) -> Result<Vec<Rat>> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut acc = Rat::one();
    for k in 0..=n_max {
        acc *= functional_p_squared(s, a, k)?;
        out.push(acc.clone());
    }
    Ok(out)
}

/// L(P_m P_n) by full polynomial product. Orthogonality makes this zero for
/// m != n and lambda_1 ... lambda_n for m = n.
pub fn orthogonality_check(
    s: &Sequence,
    a: &CoefficientArray,
    m: usize,
    n: usize,
) -> Result<Rat> {
    let p = a.polynomial(m).mul(&a.polynomial(n));
    apply_functional(s, &p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jfraction::extract_jfraction;
    use crate::numeric::rat_int;

    fn rats(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    fn jf(alpha: &[i64], lambda: &[i64]) -> JFraction {
        JFraction::new(rats(alpha), rats(lambda), rat_int(1)).unwrap()
    }

    #[test]
    fn polynomial_canonical_zero() {
        assert!(Polynomial::new(vec![Rat::zero(), Rat::zero()]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn polynomial_mul() {
        let p = Polynomial::new(rats(&[-1, 1])); // x - 1
        let q = Polynomial::new(rats(&[1, 1])); // x + 1
        assert_eq!(p.mul(&q), Polynomial::new(rats(&[-1, 0, 1])));
        assert_eq!(p.mul(&Polynomial::zero()), Polynomial::zero());
    }

    #[test]
    fn recurrence_catalan_row_2() {
        let j = jf(&[1, 2, 2], &[1, 1]);
        let a = polys_from_recurrence(&j, 2).unwrap();
        assert_eq!(a.row(2), rats(&[1, -3, 1]).as_slice());
        assert_eq!(a.row(0), rats(&[1]).as_slice());
    }

    #[test]
    fn recurrence_central_binomial_row_2() {
        let j = jf(&[2, 2], &[2]);
        let a = polys_from_recurrence(&j, 2).unwrap();
        assert_eq!(a.row(2), rats(&[2, -4, 1]).as_slice());
    }

    #[test]
    fn determinant_route_factorial_row_2() {
        let s = Sequence::from_ints(&[1, 1, 2, 6, 24]);
        let a = polys_from_determinants(&s, 2).unwrap();
        assert_eq!(a.row(2), rats(&[2, -4, 1]).as_slice());
        assert_eq!(a.row(0), rats(&[1]).as_slice());
    }

    #[test]
    fn determinant_route_schroeder_row_1() {
        let s = Sequence::from_ints(&[1, 2, 6, 22]);
        let a = polys_from_determinants(&s, 1).unwrap();
        assert_eq!(a.row(1), rats(&[-2, 1]).as_slice());
    }

    #[test]
    fn ldl_route_catalan_matches_closed_form() {
        // rows of (1/(1+x), x/(1+x)^2): a_{n,k} = (-1)^(n-k) C(n+k, 2k)
        let s = Sequence::from_ints(&[1, 1, 2, 5, 14, 42, 132]);
        let a = polys_from_ldl(&s, 3).unwrap();
        for n in 0..=3 {
            for k in 0..=n {
                let expected = {
                    let mut c = Rat::from_integer(crate::numeric::binomial(n + k, 2 * k));
                    if (n - k) % 2 == 1 {
                        c = -c;
                    }
                    c
                };
                assert_eq!(a.entry(n, k), &expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn three_routes_agree() {
        let s = Sequence::from_ints(&[1, 0, 1, 2, 9, 44, 265, 1854, 14833]);
        let n = 4;
        let j = extract_jfraction(&s).unwrap();
        let rec = polys_from_recurrence(&j, n).unwrap();
        let det = polys_from_determinants(&s, n).unwrap();
        let ldl = polys_from_ldl(&s, n).unwrap();
        assert_eq!(rec, det);
        assert_eq!(rec, ldl);
    }

    #[test]
    fn moment_recovery_from_inverse_first_column() {
        let s = Sequence::from_ints(&[1, 2, 6, 22, 90, 394, 1806]);
        let a = polys_from_ldl(&s, 3).unwrap();
        assert_eq!(a.inverse_first_column(), s.terms()[..4].to_vec());
    }

    #[test]
    fn functional_basics() {
        let catalan = Sequence::from_ints(&[1, 1, 2, 5, 14]);
        assert_eq!(apply_functional(&catalan, &Polynomial::one()).unwrap(), rat_int(1));
        let x2 = Polynomial::new(rats(&[0, 0, 1]));
        assert_eq!(apply_functional(&catalan, &x2).unwrap(), rat_int(2));
        let p1 = Polynomial::new(rats(&[-1, 1]));
        assert_eq!(apply_functional(&catalan, &p1).unwrap(), rat_int(0));
    }

    #[test]
    fn functional_degree_check() {
        let s = Sequence::from_ints(&[1, 1]);
        let x2 = Polynomial::new(rats(&[0, 0, 1]));
        assert_eq!(
            apply_functional(&s, &x2),
            Err(Error::InsufficientTerms { needed: 3, have: 2 })
        );
    }

    #[test]
    fn p_squared_catalan_all_ones() {
        let s = Sequence::from_ints(&[1, 1, 2, 5, 14, 42, 132, 429, 1430]);
        let a = polys_from_ldl(&s, 4).unwrap();
        for k in 0..=4 {
            assert_eq!(functional_p_squared(&s, &a, k).unwrap(), rat_int(1));
        }
    }

    #[test]
    fn p_squared_central_binomial() {
        let s = Sequence::from_ints(&[1, 2, 6, 20, 70, 252, 924]);
        let a = polys_from_ldl(&s, 3).unwrap();
        let got: Vec<Rat> = (0..=3)
            .map(|k| functional_p_squared(&s, &a, k).unwrap())
            .collect();
        assert_eq!(got, rats(&[1, 2, 2, 2]));
    }

    #[test]
    fn p_squared_factorial() {
        let s = Sequence::from_ints(&[1, 1, 2, 6, 24, 120, 720]);
        let a = polys_from_ldl(&s, 3).unwrap();
        let got: Vec<Rat> = (0..=3)
            .map(|k| functional_p_squared(&s, &a, k).unwrap())
            .collect();
        assert_eq!(got, rats(&[1, 1, 4, 36]));
    }

    #[test]
    fn p_squared_equals_ldl_diagonal() {
        let s = Sequence::from_ints(&[1, 2, 6, 22, 90, 394, 1806]);
        let a = polys_from_ldl(&s, 3).unwrap();
        let d = crate::hankel::ldl_decompose(&s, 3).unwrap();
        for k in 0..=3 {
            assert_eq!(&functional_p_squared(&s, &a, k).unwrap(), &d.d()[k]);
        }
    }

    #[test]
    fn hankel_via_coefficients_examples() {
        let schroeder = Sequence::from_ints(&[1, 2, 6, 22, 90, 394, 1806, 8558, 41586]);
        let a = polys_from_ldl(&schroeder, 4).unwrap();
        assert_eq!(
            hankel_via_coefficients(&schroeder, &a, 4).unwrap(),
            rats(&[1, 2, 8, 64, 1024])
        );

        let der = Sequence::from_ints(&[1, 0, 1, 2, 9, 44, 265]);
        let a = polys_from_ldl(&der, 3).unwrap();
        assert_eq!(
            hankel_via_coefficients(&der, &a, 3).unwrap(),
            rats(&[1, 1, 4, 144])
        );
    }

    #[test]
    fn hankel_via_coefficients_order_zero() {
        let s = Sequence::from_ints(&[3]);
        let a = polys_from_ldl(&s, 0).unwrap();
        assert_eq!(hankel_via_coefficients(&s, &a, 0).unwrap(), rats(&[3]));
    }

    #[test]
    fn orthogonality_values() {
        let catalan = Sequence::from_ints(&[1, 1, 2, 5, 14, 42, 132]);
        let a = polys_from_ldl(&catalan, 3).unwrap();
        assert_eq!(orthogonality_check(&catalan, &a, 1, 2).unwrap(), rat_int(0));
        assert_eq!(orthogonality_check(&catalan, &a, 3, 3).unwrap(), rat_int(1));

        let schroeder = Sequence::from_ints(&[1, 2, 6, 22, 90]);
        let a = polys_from_ldl(&schroeder, 2).unwrap();
        assert_eq!(orthogonality_check(&schroeder, &a, 2, 2).unwrap(), rat_int(4));
    }
}
