//! Ordinary and exponential Riordan arrays: entry generation, the group
//! law (g, f)(h, l) = (g * (h o f), l o f), and inverses via compositional
//! reversion. An array stores its generating pair; matrices are
//! materialized on demand.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{factorial, parse_rat, Rat};
use crate::series::PowerSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Ordinary,
    Exponential,
}

/// A Riordan array (g, f) or [g, f], normalized so that:
/// g(0) = 1, f(0) = 0, f'(0) = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiordanArray {
    g: PowerSeries,
    f: PowerSeries,
    kind: Kind,
}

impl RiordanArray {
    pub fn new(g: PowerSeries, f: PowerSeries, kind: Kind) -> Result<Self> {
        if !g.coeff(0).is_one() {
            return Err(Error::NotInvertible);
        }
        if f.precision() < 1 || !f.coeff(0).is_zero() || !f.coeff(1).is_one() {
            return Err(Error::NotInvertible);
        }
        Ok(RiordanArray { g, f, kind })
    }

    pub fn identity(kind: Kind, precision: usize) -> Self {
        RiordanArray {
            g: PowerSeries::one(precision),
            f: PowerSeries::x(precision),
            kind,
        }
    }

    pub fn g(&self) -> &PowerSeries {
        &self.g
    }

    pub fn f(&self) -> &PowerSeries {
        &self.f
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn precision(&self) -> usize {
        self.g.precision().min(self.f.precision())
    }

    /// Materialize rows 0..=n. Ordinary: a_{n,k} = [x^n] g f^k.
    /// Exponential: a_{n,k} = (n!/k!) [x^n] g f^k.
    pub fn entries(&self, n_max: usize) -> Result<Vec<Vec<Rat>>> {
        if self.precision() < n_max {
            return Err(Error::InsufficientPrecision {
                needed: n_max,
                have: self.precision(),
            });
        }
        let mut rows = vec![vec![Rat::zero(); 0]; n_max + 1];
        for (n, row) in rows.iter_mut().enumerate() {
            row.resize(n + 1, Rat::zero());
        }
        let mut col = self.g.truncate(n_max);
        for k in 0..=n_max {
            for (n, row) in rows.iter_mut().enumerate().skip(k) {
                let mut e = col.coeff(n).clone();
                if self.kind == Kind::Exponential {
                    e = e * Rat::from_integer(factorial(n)) / Rat::from_integer(factorial(k));
                }
                row[k] = e;
            }
            if k < n_max {
                col = col.mul(&self.f);
            }
        }
        Ok(rows)
    }

    /// Group law: (g, f)(h, l) = (g * (h o f), l o f). Same shape for the
    /// exponential kind.
    pub fn multiply(&self, other: &RiordanArray) -> Result<RiordanArray> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch);
        }
        let g = self.g.mul(&other.g.compose(&self.f)?);
        let f = other.f.compose(&self.f)?;
        RiordanArray::new(g, f, self.kind)
    }

    /// (g, f)^{-1} = (1 / (g o fbar), fbar).
    pub fn inverse(&self) -> Result<RiordanArray> {
        let fbar = self.f.revert()?;
        let g = PowerSeries::one(self.g.precision()).div(&self.g.compose(&fbar)?)?;
        RiordanArray::new(g, fbar, self.kind)
    }
}

/// Stock series used by the built-in examples, plus a tiny expression
/// grammar for the CLI.
pub mod stock {
    use super::*;

    /// p(x)/q(x) as a series to the given precision, from dense coefficient
    /// lists. q(0) must be nonzero.
    pub fn rational_function(num: &[Rat], den: &[Rat], precision: usize) -> Result<PowerSeries> {
        let pad = |c: &[Rat]| {
            let mut v = c.to_vec();
            v.resize(v.len().max(precision + 1), Rat::zero());
            PowerSeries::new(v).truncate(precision)
        };
        pad(num).div(&pad(den))
    }

    fn rf_ints(num: &[i64], den: &[i64], precision: usize) -> PowerSeries {
        let conv = |v: &[i64]| -> Vec<Rat> {
            v.iter().map(|&c| Rat::from_integer(c.into())).collect()
        };
        rational_function(&conv(num), &conv(den), precision).expect("unit denominator")
    }

    /// 1/(1-x)
    pub fn geometric(precision: usize) -> PowerSeries {
        rf_ints(&[1], &[1, -1], precision)
    }

    /// 1/(1+x)
    pub fn alternating(precision: usize) -> PowerSeries {
        rf_ints(&[1], &[1, 1], precision)
    }

    /// x/(1-x)
    pub fn x_over_one_minus_x(precision: usize) -> PowerSeries {
        rf_ints(&[0, 1], &[1, -1], precision)
    }

    /// x/(1+x)
    pub fn x_over_one_plus_x(precision: usize) -> PowerSeries {
        rf_ints(&[0, 1], &[1, 1], precision)
    }

    /// x/(1+x)^2
    pub fn x_over_one_plus_x_squared(precision: usize) -> PowerSeries {
        rf_ints(&[0, 1], &[1, 2, 1], precision)
    }

    /// (1-x)/(1+x)
    pub fn one_minus_x_over_one_plus_x(precision: usize) -> PowerSeries {
        rf_ints(&[1, -1], &[1, 1], precision)
    }

    /// 1/(1+2x)
    pub fn one_over_one_plus_2x(precision: usize) -> PowerSeries {
        rf_ints(&[1], &[1, 2], precision)
    }

    /// x/(1+3x+2x^2)
    pub fn x_over_schroeder_denominator(precision: usize) -> PowerSeries {
        rf_ints(&[0, 1], &[1, 3, 2], precision)
    }

    /// e^x
    pub fn exponential(precision: usize) -> PowerSeries {
        let coeffs = (0..=precision)
            .map(|n| Rat::new(1.into(), factorial(n)))
            .collect();
        PowerSeries::new(coeffs)
    }

    /// e^{-x}
    pub fn exponential_reciprocal(precision: usize) -> PowerSeries {
        let coeffs = (0..=precision)
            .map(|n| {
                let r = Rat::new(1.into(), factorial(n));
                if n % 2 == 1 {
                    -r
                } else {
                    r
                }
            })
            .collect();
        PowerSeries::new(coeffs)
    }

    /// Parse a series expression: `P`, `P/Q`, or the token `E` (= e^x) in
    /// either position, where P and Q are integer-coefficient polynomials in
    /// x like `1 - x`, `x`, `(1+3x+2x^2)`. Rational coefficients `p/q` are
    /// not supported inside polynomials (the slash separates numerator and
    /// denominator).
    pub fn parse_series_expr(expr: &str, precision: usize) -> Result<PowerSeries> {
        let expr = expr.trim();
        let (num, den) = match split_top_level_slash(expr) {
            Some((a, b)) => (a, Some(b)),
            None => (expr, None),
        };
        let num_s = parse_operand(num, precision)?;
        match den {
            None => Ok(num_s),
            Some(d) => num_s.div(&parse_operand(d, precision)?),
        }
    }

    fn split_top_level_slash(expr: &str) -> Option<(&str, &str)> {
        let mut depth = 0usize;
        for (i, c) in expr.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                '/' if depth == 0 => return Some((&expr[..i], &expr[i + 1..])),
                _ => {}
            }
        }
        None
    }

    fn parse_operand(s: &str, precision: usize) -> Result<PowerSeries> {
        let mut s = s.trim();
        while s.starts_with('(') && s.ends_with(')') && balanced_strip(s) {
            s = s[1..s.len() - 1].trim();
        }
        if s == "E" {
            return Ok(exponential(precision));
        }
        let coeffs = parse_polynomial(s)?;
        let mut v = coeffs;
        v.resize(v.len().max(precision + 1), Rat::zero());
        Ok(PowerSeries::new(v).truncate(precision))
    }

    fn balanced_strip(s: &str) -> bool {
        let inner = &s[1..s.len() - 1];
        let mut depth = 0i64;
        for c in inner.chars() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 {
                        return false;
                    }
                }
                _ => {}
            }
        }
        depth == 0
    }

    /// Dense coefficients of an integer polynomial in x, terms like
    /// `3x^2`, `-x`, `+ 5`.
    fn parse_polynomial(s: &str) -> Result<Vec<Rat>> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = |msg: &str| Error::ParseError {
            line: 1,
            msg: format!("{msg} in series expression {s:?}"),
        };
        if compact.is_empty() {
            return Err(err("empty polynomial"));
        }
        let mut coeffs: Vec<Rat> = Vec::new();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = 1i64;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r;
            } else if !first {
                return Err(err("expected + or - between terms"));
            }
            first = false;
            // split off one term: digits, optional x, optional ^power
            let end = rest
                .char_indices()
                .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            let (coeff_str, power) = match term.find('x') {
                None => (term, 0usize),
                Some(xi) => {
                    let after = &term[xi + 1..];
                    let p = if after.is_empty() {
                        1
                    } else if let Some(pw) = after.strip_prefix('^') {
                        pw.parse::<usize>().map_err(|_| err("bad exponent"))?
                    } else {
                        return Err(err("malformed term"));
                    };
                    (&term[..xi], p)
                }
            };
            let mut c = if coeff_str.is_empty() {
                Rat::one()
            } else {
                let coeff_str = coeff_str.strip_suffix('*').unwrap_or(coeff_str);
                if coeff_str.is_empty() {
                    Rat::one()
                } else {
                    parse_rat(coeff_str, 1).map_err(|_| err("bad coefficient"))?
                }
            };
            if sign < 0 {
                c = -c;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Rat::zero());
            }
            coeffs[power] += c;
        }
        Ok(coeffs)
    }
}
