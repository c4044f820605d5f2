//! The five built-in example sequences, their closed-form Hankel transforms
//! and coefficient arrays, and literal verifiers for the displayed
//! identities.
//!
//! The `0^n` symbol follows the Kronecker convention 0^0 = 1 throughout
//! (see `numeric::zero_pow`).

use num::bigint::BigInt;
use num::{One, Zero};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numeric::{binomial, factorial, zero_pow, Rat};
use crate::series::Sequence;

/// The named sequences covered by the example suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Name {
    Catalan,
    CentralBinomial,
    Schroeder,
    Factorial,
    Derangement,
}

pub const ALL_NAMES: [Name; 5] = [
    Name::Catalan,
    Name::CentralBinomial,
    Name::Schroeder,
    Name::Factorial,
    Name::Derangement,
];

impl Name {
    pub fn oeis_id(self) -> &'static str {
        match self {
            Name::Catalan => "A000108",
            Name::CentralBinomial => "A000984",
            Name::Schroeder => "A006318",
            Name::Factorial => "A000142",
            Name::Derangement => "A000166",
        }
    }

    /// Example number in the verification suite (1..=5).
    pub fn example_number(self) -> usize {
        match self {
            Name::Catalan => 1,
            Name::CentralBinomial => 2,
            Name::Schroeder => 3,
            Name::Factorial => 4,
            Name::Derangement => 5,
        }
    }

    pub fn from_example_number(n: usize) -> Result<Name> {
        ALL_NAMES
            .into_iter()
            .find(|name| name.example_number() == n)
            .ok_or_else(|| Error::UnknownName(format!("example {n}")))
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Name::Catalan => "catalan",
            Name::CentralBinomial => "central_binomial",
            Name::Schroeder => "schroeder",
            Name::Factorial => "factorial",
            Name::Derangement => "derangement",
        };
        write!(f, "{s}")
    }
}

impl FromStr for Name {
    type Err = Error;

    fn from_str(s: &str) -> Result<Name> {
        match s.to_ascii_lowercase().as_str() {
            "catalan" | "a000108" => Ok(Name::Catalan),
            "central_binomial" | "central-binomial" | "a000984" => Ok(Name::CentralBinomial),
            "schroeder" | "schröder" | "a006318" => Ok(Name::Schroeder),
            "factorial" | "a000142" => Ok(Name::Factorial),
            "derangement" | "a000166" => Ok(Name::Derangement),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

fn catalan_number(n: usize) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

fn schroeder_number(n: usize) -> BigInt {
    (0..=n)
        .map(|k| binomial(n + k, 2 * k) * catalan_number(k))
        .sum()
}

fn derangement_number(n: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 0..=n {
        let term = binomial(n, k) * factorial(k);
        if (n - k) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// First N+1 terms of a named sequence, exactly.
pub fn generate(name: Name, n_max: usize) -> Sequence {
    let term = |n: usize| -> BigInt {
        match name {
            Name::Catalan => catalan_number(n),
            Name::CentralBinomial => binomial(2 * n, n),
            Name::Schroeder => schroeder_number(n),
            Name::Factorial => factorial(n),
            Name::Derangement => derangement_number(n),
        }
    };
    let terms = (0..=n_max).map(|n| Rat::from_integer(term(n))).collect();
    Sequence::new(terms).expect("n_max >= 0 gives at least one term")
}

/// The closed-form Hankel transform value h_n of a named sequence.
pub fn closed_hankel(name: Name, n: usize) -> Rat {
    let v: BigInt = match name {
        Name::Catalan => BigInt::one(),
        Name::CentralBinomial => BigInt::from(2).pow(n as u32),
        Name::Schroeder => BigInt::from(2).pow((n * (n + 1) / 2) as u32),
        Name::Factorial | Name::Derangement => {
            let mut acc = BigInt::one();
            for i in 0..=n {
                let f = factorial(i);
                acc *= &f * &f;
            }
            acc
        }
    };
    Rat::from_integer(v)
}

/// The closed-form coefficient a_{n,k} of the orthogonal polynomial
/// coefficient array of a named sequence.
pub fn closed_coeff(name: Name, n: usize, k: usize) -> Result<Rat> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let v: BigInt = match name {
        // (-1)^(n-k) C(n+k, 2k)
        Name::Catalan => sign(n - k) * binomial(n + k, 2 * k),
        // C(n+k, 2k) (2n + 0^(n+k)) / (n+k+0^(n+k)) (-1)^(n-k); the quotient
        // is always an integer but is reduced as a rational to be safe
        Name::CentralBinomial => {
            let z = zero_pow(n + k);
            let num = binomial(n + k, 2 * k) * (BigInt::from(2 * n) + &z);
            return Ok(Rat::new(sign(n - k) * num, BigInt::from(n + k) + z));
        }
        // (-1)^(n-k) sum_j C(n-j, k) C(n+k, j)
        Name::Schroeder => {
            let s: BigInt = (0..=n).map(|j| binomial(n - j, k) * binomial(n + k, j)).sum();
            sign(n - k) * s
        }
        // C(n,k) n!/k! (-1)^(n-k)
        Name::Factorial => sign(n - k) * binomial(n, k) * (factorial(n) / factorial(k)),
        // sum_j C(n,j) C(j,k) n!/j! (-1)^(n-j): row n of the Riordan product
        // [1/(1+x), x/(1+x)] * [e^x, x], equivalently the factorial
        // polynomial P_n evaluated at x+1. The reversed product order
        // (binomial matrix on the left) fails orthogonality against the
        // derangement moments, so it cannot be the coefficient array.
        Name::Derangement => (k..=n)
            .map(|j| sign(n - j) * binomial(n, j) * binomial(j, k) * (factorial(n) / factorial(j)))
            .sum(),
    };
    Ok(Rat::from_integer(v))
}

fn sign(parity: usize) -> BigInt {
    if parity % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Outcome of evaluating one displayed identity at index k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRecord {
    pub name: Name,
    pub k: usize,
    pub lhs: Rat,
    pub expected: Rat,
    pub pass: bool,
    /// Extra detail, e.g. which reading of an ambiguous display was used.
    pub note: Option<String>,
}

/// Evaluate the Example-k displayed identity literally (term by term, no
/// algebraic shortcuts) and compare with its closed form.
pub fn verify_identity(name: Name, k: usize) -> VerificationRecord {
    let (lhs, expected, note) = match name {
        Name::Catalan => (identity_catalan(k), Rat::one(), None),
        Name::CentralBinomial => {
            let symmetric = identity_central_binomial(k, true);
            let literal = identity_central_binomial(k, false);
            let expected = Rat::from_integer(BigInt::from(2) - zero_pow(k));
            let note = if literal == expected {
                "literal and symmetric denominator readings both match".to_string()
            } else {
                "symmetric denominator reading used; the literal k+j reading does not match"
                    .to_string()
            };
            (symmetric, expected, Some(note))
        }
        Name::Schroeder => (
            identity_schroeder(k),
            Rat::from_integer(BigInt::from(2).pow(k as u32)),
            None,
        ),
        Name::Factorial => {
            let f = factorial(k);
            (identity_factorial(k), Rat::from_integer(&f * &f), None)
        }
        Name::Derangement => {
            let f = factorial(k);
            let note = "coefficient array taken as [1/(1+x), x/(1+x)]*[e^x, x]; \
                        the reversed product order does not give orthogonal polynomials"
                .to_string();
            (identity_derangement(k), Rat::from_integer(&f * &f), Some(note))
        }
    };
    let pass = lhs == expected;
    VerificationRecord {
        name,
        k,
        lhs,
        expected,
        pass,
        note,
    }
}

/// sum_{i=0}^{2k} sum_{j=0}^i (-1)^i C(k+j, 2j) C(k+i-j, 2(i-j)) C_i = 1
fn identity_catalan(k: usize) -> Rat {
    let mut acc = BigInt::zero();
    for i in 0..=2 * k {
        let mut inner = BigInt::zero();
        for j in 0..=i {
            inner += binomial(k + j, 2 * j) * binomial(k + i - j, 2 * (i - j));
        }
        acc += sign(i) * inner * catalan_number(i);
    }
    Rat::from_integer(acc)
}

/// The Example-2 grand identity. `symmetric` selects the denominator
/// reading k+i-j for the second factor, `false` the literal repeat of k+j.
fn identity_central_binomial(k: usize, symmetric: bool) -> Rat {
    let factor = |m: usize, denom_m: usize| -> Rat {
        let z = zero_pow(k + m);
        let zd = zero_pow(k + denom_m);
        Rat::new(
            binomial(k + m, 2 * m) * (BigInt::from(2 * k) + z),
            BigInt::from(k + denom_m) + zd,
        )
    };
    let mut acc = Rat::zero();
    for i in 0..=2 * k {
        for j in 0..=i {
            let first = factor(j, j);
            let second = if symmetric {
                factor(i - j, i - j)
            } else {
                factor(i - j, j)
            };
            let term = first * second * Rat::from_integer(binomial(2 * i, i));
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
    }
    acc
}

/// The Example-3 triple sum with the (-1)^i sign carried by the a_{k,j}
/// product (without the sign the sum does not
/// equal 2^k).
fn identity_schroeder(k: usize) -> Rat {
    let bracket = |m_arg: usize| -> BigInt {
        (0..=k)
            .map(|l| binomial(k - l, m_arg) * binomial(k + m_arg, l))
            .sum()
    };
    let mut acc = BigInt::zero();
    for i in 0..=2 * k {
        let mut inner = BigInt::zero();
        for j in 0..=i {
            inner += bracket(j) * bracket(i - j);
        }
        acc += sign(i) * inner * schroeder_number(i);
    }
    Rat::from_integer(acc)
}

/// sum_{i=0}^{2k} (sum_j (-1)^i C(k,j) C(k,i-j) k!^2/(j!(i-j)!)) i! = k!^2
fn identity_factorial(k: usize) -> Rat {
    let kf = factorial(k);
    let kf2 = &kf * &kf;
    let mut acc = Rat::zero();
    for i in 0..=2 * k {
        let mut inner = Rat::zero();
        for j in 0..=i {
            let num = binomial(k, j) * binomial(k, i - j) * &kf2;
            let den = factorial(j) * factorial(i - j);
            inner += Rat::new(sign(i) * num, den);
        }
        acc += inner * Rat::from_integer(factorial(i));
    }
    acc
}

/// sum_{i=0}^{2k} (sum_j a_{k,j} a_{k,i-j}) sum_{l=0}^i C(i,l) (-1)^(i-l) l!
/// = k!^2, with a the derangement coefficient array.
fn identity_derangement(k: usize) -> Rat {
    let a = |m: usize| closed_coeff(Name::Derangement, k, m).expect("m <= k");
    let mut acc = Rat::zero();
    for i in 0..=2 * k {
        let mut inner = Rat::zero();
        for j in i.saturating_sub(k)..=i.min(k) {
            inner += a(j) * a(i - j);
        }
        // the bracketed moment is the derangement number d_i written as its
        // alternating sum
        let mut d = BigInt::zero();
        for l in 0..=i {
            d += sign(i - l) * binomial(i, l) * factorial(l);
        }
        acc += inner * Rat::from_integer(d);
    }
    acc
}

/// The Example-4 triangle: entry (k, i) = sum_j (-1)^i C(k,j) C(k,i-j) C(i,j)
/// for 0 <= i <= 2k. Every row sums to 1.
pub fn example4_triangle(k_max: usize) -> Vec<Vec<BigInt>> {
    (0..=k_max)
        .map(|k| {
            (0..=2 * k)
                .map(|i| {
                    let s: BigInt = (0..=i)
                        .map(|j| binomial(k, j) * binomial(k, i - j) * binomial(i, j))
                        .sum();
                    sign(i) * s
                })
                .collect()
        })
        .collect()
}
