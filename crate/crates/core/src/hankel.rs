//! Hankel matrices, fraction-free determinants, the Hankel transform, and
//! the LDL^T factorization of a regular moment sequence.

use num::bigint::BigInt;
use num::{Integer, One, Zero};

use crate::error::{Error, Result};
use crate::numeric::Rat;
use crate::series::Sequence;

/// The (n+1) x (n+1) moment matrix with entry (i, j) = mu_{i+j}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelMatrix {
    order: usize,
    entries: Vec<Vec<Rat>>,
}

impl HankelMatrix {
    /// Number of rows, n + 1.
    pub fn size(&self) -> usize {
        self.order + 1
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.entries
    }
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

pub fn hankel_matrix(s: &Sequence, n: usize) -> Result<HankelMatrix> {
    require_terms(s, 2 * n + 1)?;
    let t = s.terms();
    let entries = (0..=n)
        .map(|i| (0..=n).map(|j| t[i + j].clone()).collect())
        .collect();
    Ok(HankelMatrix { order: n, entries })
}

/// Fraction-free (Bareiss) determinant of an integer matrix. All interior
/// divisions are exact.
pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Determinant of a rational matrix: clear denominators with the global lcm,
/// run Bareiss over integers, divide back.
pub(crate) fn rational_det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    let mut lcm = BigInt::one();
    for row in m {
        for e in row {
            lcm = lcm.lcm(e.denom());
        }
    }
    let im: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| e.numer() * (&lcm / e.denom()))
                .collect()
        })
        .collect();
    let det = bareiss_det(im);
    Rat::new(det, num::pow(lcm, n))
}

/// h_n = det(mu_{i+j}), 0 <= i,j <= n.
pub fn hankel_determinant(s: &Sequence, n: usize) -> Result<Rat> {
    let h = hankel_matrix(s, n)?;
    Ok(rational_det(h.rows()))
}

/// The Hankel transform h_0..h_N, with N the largest order the prefix
/// supports. Each determinant is computed independently.
pub fn hankel_transform(s: &Sequence) -> Vec<Rat> {
    let max_n = s.max_hankel_order();
    (0..=max_n)
        .map(|n| hankel_determinant(s, n).expect("length checked"))
        .collect()
}

/// Exact LDL^T factorization of a Hankel matrix: L unit lower triangular,
/// d the pivot diagonal with d_k = h_k / h_{k-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LdlDecomposition {
    l: Vec<Vec<Rat>>,
    d: Vec<Rat>,
}

impl LdlDecomposition {
    /// Order n + 1 of the factored matrix.
    pub fn size(&self) -> usize {
        self.d.len()
    }

    pub fn l_entry(&self, i: usize, j: usize) -> &Rat {
        &self.l[i][j]
    }

    /// Row-major unit-lower-triangular factor.
    pub fn l_rows(&self) -> &[Vec<Rat>] {
        &self.l
    }

    pub fn d(&self) -> &[Rat] {
        &self.d
    }

    /// L * diag(d) * L^T, for reconstruction checks.
    pub fn reconstruct(&self) -> Vec<Vec<Rat>> {
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = Rat::zero();
                        for k in 0..=i.min(j) {
                            acc += &self.l[i][k] * &self.d[k] * &self.l[j][k];
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }
}

/// Symmetric elimination over exact rationals. Fails fast with the index of
/// the first zero pivot, which is the first singular leading minor.
pub fn ldl_decompose(s: &Sequence, n: usize) -> Result<LdlDecomposition> {
    let h = hankel_matrix(s, n)?;
    let size = n + 1;
    let mut l = vec![vec![Rat::zero(); size]; size];
    let mut d = vec![Rat::zero(); size];
    for j in 0..size {
        let mut pivot = h.entry(j, j).clone();
        for k in 0..j {
            pivot -= &l[j][k] * &l[j][k] * &d[k];
        }
        if pivot.is_zero() {
            return Err(Error::SingularMinor(j));
        }
        d[j] = pivot;
        l[j][j] = Rat::one();
        for i in j + 1..size {
            let mut acc = h.entry(i, j).clone();
            for k in 0..j {
                acc -= &l[i][k] * &l[j][k] * &d[k];
            }
            l[i][j] = acc / &d[j];
        }
    }
    Ok(LdlDecomposition { l, d })
}

/// Result of scanning a prefix for Hankel regularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    /// Largest order checked, floor((len - 1) / 2).
    pub checked_through: usize,
    /// First n with h_n = 0, if any.
    pub first_zero: Option<usize>,
    /// The determinants h_0..h_checked.
    pub determinants: Vec<Rat>,
}

impl RegularityReport {
    /// Regular over the whole checkable range.
    pub fn is_regular(&self) -> bool {
        self.first_zero.is_none()
    }

    /// Largest n with h_0..h_n all nonzero, if h_0 itself is nonzero.
    pub fn regular_through(&self) -> Option<usize> {
        match self.first_zero {
            None => Some(self.checked_through),
            Some(0) => None,
            Some(k) => Some(k - 1),
        }
    }
}

pub fn is_regular(s: &Sequence) -> RegularityReport {
    let determinants = hankel_transform(s);
    let first_zero = determinants.iter().position(|h| h.is_zero());
    RegularityReport {
        checked_through: determinants.len() - 1,
        first_zero,
        determinants,
    }
}
