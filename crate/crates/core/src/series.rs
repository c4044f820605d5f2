//! Exact sequences and truncated formal power series.
//!
//! A `PowerSeries` carries an explicit precision: coefficients beyond it are
//! unknown, not zero. Binary operations truncate to the minimum operand
//! precision; composition with an inner series of valuation `v >= 1` yields
//! precision `min(P_outer * v, P_inner)`.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::{binomial, factorial, parse_rat, Rat};

/// A finite prefix of an exact sequence, indexed from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    terms: Vec<Rat>,
}

impl Sequence {
    pub fn new(terms: Vec<Rat>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InsufficientTerms { needed: 1, have: 0 });
        }
        Ok(Sequence { terms })
    }

    pub fn from_ints(terms: &[i64]) -> Self {
        Sequence {
            terms: terms.iter().map(|&t| Rat::from_integer(t.into())).collect(),
        }
    }

    pub fn terms(&self) -> &[Rat] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest n such that a Hankel determinant of order n is computable
    /// from this prefix: floor((len - 1) / 2).
    pub fn max_hankel_order(&self) -> usize {
        (self.len() - 1) / 2
    }

    /// Parse the sequence text format: whitespace- or comma-separated terms,
    /// each `p` or `p/q` with q > 0. Lines beginning with `#` are comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            for token in line.split(|c: char| c.is_whitespace() || c == ',') {
                if token.is_empty() {
                    continue;
                }
                terms.push(parse_rat(token, i + 1)?);
            }
        }
        Sequence::new(terms)
    }

    /// Ordinary generating function prefix of this sequence.
    pub fn ogf(&self) -> PowerSeries {
        PowerSeries::new(self.terms.clone())
    }
}

/// Direction of the binomial transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformSign {
    Plus,
    Minus,
}

/// Binomial transform b_n = sum_k C(n,k) s_k, or its inverse
/// b_n = sum_k (-1)^(n-k) C(n,k) s_k. The two are mutually inverse and both
/// preserve the Hankel transform.
pub fn binomial_transform(s: &Sequence, sign: TransformSign) -> Sequence {
    let terms = s.terms();
    let out = (0..terms.len())
        .map(|n| {
            let mut acc = Rat::zero();
            for (k, t) in terms.iter().enumerate().take(n + 1) {
                let mut c = Rat::from_integer(binomial(n, k));
                if sign == TransformSign::Minus && (n - k) % 2 == 1 {
                    c = -c;
                }
                acc += c * t;
            }
            acc
        })
        .collect();
    Sequence { terms: out }
}

/// Direction of the OGF/EGF coefficient rescaling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvertDirection {
    ToEgf,
    ToOgf,
}

/// Rescale term n by 1/n! (toEGF) or n! (toOGF).
pub fn ogf_egf_convert(s: &Sequence, direction: ConvertDirection) -> Sequence {
    let terms = s
        .terms()
        .iter()
        .enumerate()
        .map(|(n, t)| {
            let f = Rat::from_integer(factorial(n));
            match direction {
                ConvertDirection::ToEgf => t / f,
                ConvertDirection::ToOgf => t * f,
            }
        })
        .collect();
    Sequence { terms }
}

/// A truncated formal power series with exact rational coefficients
/// c_0..c_P. Terms beyond P are unknown, not zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    /// coeffs holds c_0..c_P; must be non-empty.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least c_0");
        PowerSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        PowerSeries::new(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn constant(c: Rat, precision: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); precision + 1];
        coeffs[0] = c;
        PowerSeries { coeffs }
    }

    pub fn zero(precision: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rat::zero(); precision + 1],
        }
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(Rat::one(), precision)
    }

    /// The identity series x (requires precision >= 1).
    pub fn x(precision: usize) -> Self {
        assert!(precision >= 1);
        let mut coeffs = vec![Rat::zero(); precision + 1];
        coeffs[1] = Rat::one();
        PowerSeries { coeffs }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^i; i must be within precision.
    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let p = precision.min(self.precision());
        PowerSeries {
            coeffs: self.coeffs[..=p].to_vec(),
        }
    }

    /// Index of the first nonzero coefficient, if any within precision.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let p = self.precision().min(other.precision());
        let coeffs = (0..=p)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        let p = self.precision().min(other.precision());
        let coeffs = (0..=p)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }

    pub fn neg(&self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product, truncated to the minimum operand precision.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let p = self.precision().min(other.precision());
        let mut coeffs = vec![Rat::zero(); p + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(p + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(p + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs }
    }

    /// Long division: q with q * b = a up to the minimum precision.
    /// Requires b(0) != 0.
    pub fn div(&self, other: &PowerSeries) -> Result<PowerSeries> {
        if other.coeffs[0].is_zero() {
            return Err(Error::DivisorNotUnit);
        }
        let p = self.precision().min(other.precision());
        let mut q = vec![Rat::zero(); p + 1];
        for n in 0..=p {
            let mut acc = self.coeffs[n].clone();
            for k in 0..n {
                acc -= &q[k] * &other.coeffs[n - k];
            }
            q[n] = acc / &other.coeffs[0];
        }
        Ok(PowerSeries { coeffs: q })
    }

    /// Composition outer(inner(x)). Requires inner(0) = 0. Output precision
    /// is min(P_outer * v, P_inner) where v is the valuation of inner
    /// (an inner series that is zero to its whole precision acts as x^inf,
    /// so the result is the constant term at inner's precision).
    pub fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InnerNotNilpotent);
        }
        let p_inner = inner.precision();
        let p = match inner.valuation() {
            Some(v) => (self.precision().saturating_mul(v)).min(p_inner),
            None => p_inner,
        };
        Ok(PowerSeries {
            coeffs: compose_trunc(&self.coeffs, &inner.coeffs, p),
        })
    }

    /// Compositional inverse: the unique g with f(g(x)) = g(f(x)) = x.
    /// Requires f(0) = 0 and f'(0) = 1.
    pub fn revert(&self) -> Result<PowerSeries> {
        if self.precision() < 1
            || !self.coeffs[0].is_zero()
            || !self.coeffs[1].is_one()
        {
            return Err(Error::NotInvertible);
        }
        let p = self.precision();
        // Term by term: with g known through x^(n-1) and g_n = 0, the
        // coefficient of x^n in f(g(x)) is off from [x^n] x by exactly g_n
        // (f_1 = 1), so g_n is read off directly.
        let mut g = vec![Rat::zero(); p + 1];
        g[1] = Rat::one();
        for n in 2..=p {
            let composed = compose_trunc(&self.coeffs, &g, n);
            g[n] = -&composed[n];
        }
        Ok(PowerSeries { coeffs: g })
    }
}

/// Horner evaluation of outer at inner, truncated to order `trunc`.
/// inner must have zero constant term.
fn compose_trunc(outer: &[Rat], inner: &[Rat], trunc: usize) -> Vec<Rat> {
    let mul_trunc = |a: &[Rat], b: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); trunc + 1];
        for (i, x) in a.iter().enumerate().take(trunc + 1) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(trunc + 1 - i) {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        out
    };
    let mut acc = vec![Rat::zero(); trunc + 1];
    for c in outer.iter().rev() {
        acc = mul_trunc(&acc, inner);
        acc[0] += c;
    }
    acc
}

impl std::fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "x")?,
                1 => write!(f, "{mag}*x")?,
                _ if mag.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}*x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.precision() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat_int;

    fn geom(precision: usize) -> PowerSeries {
        // 1 + x + x^2 + ...
        PowerSeries::new(vec![Rat::one(); precision + 1])
    }

    #[test]
    fn add_cancellation() {
        let a = PowerSeries::from_ints(&[1, 1]);
        let b = PowerSeries::from_ints(&[1, -1]);
        assert_eq!(a.add(&b), PowerSeries::from_ints(&[2, 0]));
    }

    #[test]
    fn add_zero_identity() {
        let s = PowerSeries::from_ints(&[3, 1, 4]);
        assert_eq!(PowerSeries::zero(2).add(&s), s);
    }

    #[test]
    fn add_truncates_to_min_precision() {
        let a = PowerSeries::from_ints(&[1, 2, 3]);
        let b = PowerSeries::from_ints(&[1, 0, 0, 0, 0, 0]);
        let sum = a.add(&b);
        assert_eq!(sum, PowerSeries::from_ints(&[2, 2, 3]));
        assert_eq!(sum.precision(), 2);
    }

    #[test]
    fn mul_geometric_inverse() {
        let one_minus_x = PowerSeries::from_ints(&[1, -1, 0, 0, 0]);
        assert_eq!(one_minus_x.mul(&geom(4)), PowerSeries::from_ints(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn mul_square() {
        let a = PowerSeries::from_ints(&[1, 1, 0]);
        assert_eq!(a.mul(&a), PowerSeries::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn mul_x_by_x() {
        let x = PowerSeries::x(3);
        let sq = x.mul(&x);
        assert_eq!(sq, PowerSeries::from_ints(&[0, 0, 1, 0]));
        assert_eq!(sq.precision(), 3);
    }

    #[test]
    fn div_geometric() {
        let one = PowerSeries::one(5);
        let one_minus_x = PowerSeries::new({
            let mut c = vec![Rat::zero(); 6];
            c[0] = Rat::one();
            c[1] = -Rat::one();
            c
        });
        assert_eq!(one.div(&one_minus_x).unwrap(), geom(5));
    }

    #[test]
    fn div_self_is_one() {
        let a = PowerSeries::from_ints(&[2, 5, -1, 7]);
        assert_eq!(a.div(&a).unwrap(), PowerSeries::from_ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn div_long_division_oracle() {
        // 1 / (1 + 3x + 2x^2) = 1 - 3x + 7x^2 - 15x^3 + ...
        let one = PowerSeries::one(3);
        let b = PowerSeries::from_ints(&[1, 3, 2, 0]);
        assert_eq!(one.div(&b).unwrap(), PowerSeries::from_ints(&[1, -3, 7, -15]));
    }

    #[test]
    fn div_by_non_unit_fails() {
        let a = PowerSeries::one(2);
        assert_eq!(a.div(&PowerSeries::x(2)), Err(Error::DivisorNotUnit));
    }

    #[test]
    fn compose_with_x_is_identity() {
        let g = PowerSeries::from_ints(&[4, -2, 7, 1]);
        assert_eq!(g.compose(&PowerSeries::x(3)).unwrap(), g);
    }

    #[test]
    fn compose_geometric_oracle() {
        // (1/(1-x)) o (x/(1-x)) = (1-x)/(1-2x) = 1 + x + 2x^2 + 4x^3 + ...
        let outer = geom(3);
        let inner = PowerSeries::from_ints(&[0, 1, 1, 1]);
        let got = outer.compose(&inner).unwrap();
        assert_eq!(got, PowerSeries::from_ints(&[1, 1, 2, 4]));
    }

    #[test]
    fn compose_alternating_oracle() {
        // (1/(1+x)) o (x/(1-x)) = (1-x)/1 = 1 - x (then 0, 0, ...)
        let outer = PowerSeries::from_ints(&[1, -1, 1, -1]);
        let inner = PowerSeries::from_ints(&[0, 1, 1, 1]);
        let got = outer.compose(&inner).unwrap();
        assert_eq!(got, PowerSeries::from_ints(&[1, -1, 0, 0]));
    }

    #[test]
    fn compose_requires_nilpotent_inner() {
        let g = geom(3);
        assert_eq!(g.compose(&g), Err(Error::InnerNotNilpotent));
    }

    #[test]
    fn compose_precision_rule() {
        // inner valuation 2, outer precision 2, inner precision 6:
        // result precision min(2*2, 6) = 4.
        let outer = PowerSeries::from_ints(&[1, 1, 1]);
        let inner = PowerSeries::from_ints(&[0, 0, 1, 0, 0, 0, 0]);
        assert_eq!(outer.compose(&inner).unwrap().precision(), 4);
    }

    #[test]
    fn revert_x() {
        let x = PowerSeries::x(5);
        assert_eq!(x.revert().unwrap(), x);
    }

    #[test]
    fn revert_geometric_pair() {
        // revert(x/(1-x)) = x/(1+x)
        let f = PowerSeries::from_ints(&[0, 1, 1, 1, 1, 1]);
        let fbar = f.revert().unwrap();
        assert_eq!(fbar, PowerSeries::from_ints(&[0, 1, -1, 1, -1, 1]));
    }

    #[test]
    fn revert_round_trips() {
        // revert(x/(1+x)^2): check f(fbar(x)) = x and fbar(f(x)) = x.
        // x/(1+x)^2 = x - 2x^2 + 3x^3 - 4x^4 + ...
        let f = PowerSeries::from_ints(&[0, 1, -2, 3, -4, 5, -6, 7]);
        let fbar = f.revert().unwrap();
        let x = PowerSeries::x(7);
        assert_eq!(f.compose(&fbar).unwrap(), x);
        assert_eq!(fbar.compose(&f).unwrap(), x);
        // fbar is x times the Catalan g.f.: x + 2x^2 + 5x^3 + 14x^4 + ...
        assert_eq!(fbar, PowerSeries::from_ints(&[0, 1, 2, 5, 14, 42, 132, 429]));
    }

    #[test]
    fn revert_rejects_bad_normalization() {
        assert_eq!(PowerSeries::from_ints(&[1, 1]).revert(), Err(Error::NotInvertible));
        assert_eq!(PowerSeries::from_ints(&[0, 2, 1]).revert(), Err(Error::NotInvertible));
    }

    #[test]
    fn binomial_transform_factorial_derangement() {
        let fact = Sequence::from_ints(&[1, 1, 2, 6, 24]);
        let der = binomial_transform(&fact, TransformSign::Minus);
        assert_eq!(der, Sequence::from_ints(&[1, 0, 1, 2, 9]));
        let back = binomial_transform(&der, TransformSign::Plus);
        assert_eq!(back, fact);
    }

    #[test]
    fn binomial_transform_zeros() {
        let z = Sequence::from_ints(&[0, 0, 0, 0]);
        assert_eq!(binomial_transform(&z, TransformSign::Plus), z);
    }

    #[test]
    fn binomial_transform_involution_pair() {
        let s = Sequence::from_ints(&[1, 2, 6, 20, 70]);
        let t = binomial_transform(&binomial_transform(&s, TransformSign::Plus), TransformSign::Minus);
        assert_eq!(t, s);
    }

    #[test]
    fn ogf_egf_conversion() {
        let egf = Sequence::new(vec![
            rat_int(1),
            rat_int(1),
            crate::numeric::rat_frac(1, 2),
            crate::numeric::rat_frac(1, 6),
        ])
        .unwrap();
        let ogf = ogf_egf_convert(&egf, ConvertDirection::ToOgf);
        assert_eq!(ogf, Sequence::from_ints(&[1, 1, 1, 1]));
        assert_eq!(ogf_egf_convert(&ogf, ConvertDirection::ToEgf), egf);
    }

    #[test]
    fn sequence_parse_format() {
        let s = Sequence::parse("# moments\n1, 1 2\n5/1\n").unwrap();
        assert_eq!(s, Sequence::from_ints(&[1, 1, 2, 5]));
        assert!(Sequence::parse("# only a comment\n").is_err());
        assert!(Sequence::parse("1 2 x").is_err());
    }
}
