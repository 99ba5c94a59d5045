//! Hilbert functions of graded ideals and their polynomial interpolants.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// How many consecutive degrees past the interpolation window must agree
/// with the interpolant before we accept it.
const VERIFY_BAND: i64 = 5;

/// A univariate polynomial over the rationals, written in the variable `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    /// `coeffs[i]` multiplies `n^i`; no trailing zeros.
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![BigRational::from_integer(BigInt::from(c))])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, n: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(n));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    /// Lagrange interpolation through `(xs[i], ys[i])`.
    pub fn interpolate(xs: &[i64], ys: &[BigRational]) -> Self {
        assert_eq!(xs.len(), ys.len());
        let mut acc = vec![BigRational::zero(); xs.len()];
        for (i, y) in ys.iter().enumerate() {
            // basis polynomial prod_{j != i} (n - x_j) / (x_i - x_j)
            let mut numer = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (j, &xj) in xs.iter().enumerate() {
                if j == i {
                    continue;
                }
                // numer *= (n - x_j)
                let shift = BigRational::from_integer(BigInt::from(xj));
                let mut next = vec![BigRational::zero(); numer.len() + 1];
                for (k, c) in numer.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * &shift;
                }
                numer = next;
                denom *= BigRational::from_integer(BigInt::from(xs[i] - xj));
            }
            let scale = y / denom;
            for (a, c) in acc.iter_mut().zip(&numer) {
                *a += c * &scale;
            }
        }
        UniPoly::new(acc)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            if i == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                if i == 1 {
                    write!(f, "n")?;
                } else {
                    write!(f, "n^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl Ideal {
    /// `dim_F (R/I)_n`, counted as the standard monomials of degree `n`
    /// outside the leading-term ideal of the reduced basis.
    pub fn hilbert_function(&self, n: i64) -> Result<u64> {
        if !self.is_graded()? {
            return Err(Error::NotGraded(format!("({})", self.canonical_key()?)));
        }
        let basis = self.reduced_basis()?;
        let leads: Vec<_> = basis
            .iter()
            .map(|g| {
                g.leading_term(crate::order::MonomialOrder::GrevLex)
                    .unwrap()
                    .0
                    .clone()
            })
            .collect();
        let count = self
            .ring()
            .graded_piece_basis(n)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .count();
        Ok(count as u64)
    }

    /// Interpolate the Hilbert function on `[window, window + nvars]` and
    /// verify agreement on the next few degrees; errors with
    /// [`Error::WindowTooSmall`] if the function has not stabilized yet.
    pub fn hilbert_polynomial(&self, window: i64) -> Result<UniPoly> {
        let n = self.ring().nvars() as i64;
        let xs: Vec<i64> = (window..=window + n).collect();
        let ys: Vec<BigRational> = xs
            .iter()
            .map(|&k| Ok(BigRational::from_integer(BigInt::from(self.hilbert_function(k)?))))
            .collect::<Result<Vec<_>>>()?;
        let poly = UniPoly::interpolate(&xs, &ys);
        for k in (window + n + 1)..=(window + n + VERIFY_BAND) {
            let actual = BigRational::from_integer(BigInt::from(self.hilbert_function(k)?));
            if poly.eval(k) != actual {
                return Err(Error::WindowTooSmall { window });
            }
        }
        Ok(poly)
    }

    /// Default interpolation window: the largest generator degree.
    pub fn default_hilbert_window(&self) -> Result<i64> {
        Ok(self
            .reduced_basis()?
            .iter()
            .filter_map(|g| g.single_degree())
            .max()
            .unwrap_or(0))
    }

    /// Hilbert polynomial with automatic window escalation.
    pub fn hilbert_polynomial_auto(&self) -> Result<UniPoly> {
        let mut window = self.default_hilbert_window()?;
        for _ in 0..8 {
            match self.hilbert_polynomial(window) {
                Ok(p) => return Ok(p),
                Err(Error::WindowTooSmall { .. }) => window += 4,
                Err(e) => return Err(e),
            }
        }
        Err(Error::WindowTooSmall { window })
    }
}

/// Parse a Hilbert-polynomial target such as `1`, `n + 1`, or
/// `1/2*n^2 + 3/2*n + 1`.
pub fn parse_unipoly(text: &str) -> Result<UniPoly> {
    let err = |msg: &str| Error::Parse {
        line: 1,
        col: 1,
        msg: format!("{} in Hilbert polynomial `{}`", msg, text),
    };
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(err("empty input"));
    }
    // split into signed summands
    let mut coeffs: Vec<BigRational> = Vec::new();
    let mut add = |deg: usize, c: BigRational| {
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, BigRational::zero());
        }
        coeffs[deg] += c;
    };
    let mut rest = cleaned.as_str();
    let mut sign = BigRational::one();
    loop {
        if let Some(r) = rest.strip_prefix('-') {
            sign = -BigRational::one();
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            sign = BigRational::one();
            rest = r;
        }
        let end = rest
            .char_indices()
            .find(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let (summand, tail) = rest.split_at(end);
        if summand.is_empty() {
            return Err(err("empty summand"));
        }
        // summand: [a[/b]] [* ] [n[^k]]
        let (coef_text, var_text) = match summand.find('n') {
            Some(i) => (&summand[..i], &summand[i..]),
            None => (summand, ""),
        };
        let coef_text = coef_text.strip_suffix('*').unwrap_or(coef_text);
        let coef = if coef_text.is_empty() {
            BigRational::one()
        } else {
            let (num, den) = match coef_text.split_once('/') {
                Some((a, b)) => (a, b),
                None => (coef_text, "1"),
            };
            let n: BigInt = num.parse().map_err(|_| err("bad coefficient"))?;
            let d: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            BigRational::new(n, d)
        };
        let deg = if var_text.is_empty() {
            0
        } else if var_text == "n" {
            1
        } else if let Some(exp) = var_text.strip_prefix("n^") {
            exp.parse::<usize>().map_err(|_| err("bad exponent"))?
        } else {
            return Err(err("bad monomial"));
        };
        add(deg, &sign * coef);
        if tail.is_empty() {
            break;
        }
        rest = tail;
    }
    Ok(UniPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::ring::Ring;

    fn ring(p: u64, vars: &[&str]) -> Ring {
        Ring::new(PrimeField::new(p).unwrap(), vars).unwrap()
    }

    #[test]
    fn hilbert_function_examples() {
        let r = ring(2, &["x", "y"]);
        let i = Ideal::parse(&r, &["x"]).unwrap();
        for n in 0..6 {
            assert_eq!(i.hilbert_function(n).unwrap(), 1);
        }
        let zero = Ideal::zero(&r);
        for n in 0..6 {
            assert_eq!(zero.hilbert_function(n).unwrap(), (n + 1) as u64);
        }
        let m2 = Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        assert_eq!(m2.hilbert_function(0).unwrap(), 1);
        assert_eq!(m2.hilbert_function(1).unwrap(), 2);
        for n in 2..6 {
            assert_eq!(m2.hilbert_function(n).unwrap(), 0);
        }
    }

    #[test]
    fn hilbert_function_rejects_non_graded() {
        let r = ring(2, &["x", "y"]);
        let i = Ideal::parse(&r, &["x + x^2"]).unwrap();
        assert!(matches!(i.hilbert_function(2), Err(Error::NotGraded(_))));
    }

    /// Rank-based oracle: dim (R/I)_n = dim R_n - rank of the span of
    /// { m*g : g in basis, deg = n }.
    #[test]
    fn standard_monomial_count_matches_rank_oracle() {
        use crate::linalg::MatFp;
        let r = ring(3, &["x", "y", "z"]);
        let ideals = [
            Ideal::parse(&r, &["x*y - z^2", "x^2 - y*z"]).unwrap(),
            Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap(),
            Ideal::parse(&r, &["x + y + z"]).unwrap(),
        ];
        for i in &ideals {
            let basis = i.reduced_basis().unwrap().to_vec();
            for n in 0..=8i64 {
                let target = r.graded_piece_basis(n);
                let mut mat = MatFp::zeros(*r.field(), 0, target.len());
                for g in &basis {
                    let d = g.single_degree().unwrap();
                    for m in r.graded_piece_basis(n - d) {
                        let prod = g.mul_term(&m, 1).unwrap();
                        let row: Vec<u64> = target.iter().map(|t| prod.coeff(t)).collect();
                        mat.push_row(&row);
                    }
                }
                let dim = target.len() - mat.rank();
                assert_eq!(i.hilbert_function(n).unwrap(), dim as u64, "degree {}", n);
            }
        }
    }

    #[test]
    fn hilbert_polynomial_examples() {
        let r = ring(2, &["x", "y"]);
        let i = Ideal::parse(&r, &["x"]).unwrap();
        assert_eq!(i.hilbert_polynomial(0).unwrap(), UniPoly::constant(1));

        let zero = Ideal::zero(&r);
        let p = zero.hilbert_polynomial(0).unwrap();
        assert_eq!(p, parse_unipoly("n + 1").unwrap());

        // (xy): h(n) = 2 for n >= 1
        let xy = Ideal::parse(&r, &["x*y"]).unwrap();
        assert_eq!(xy.hilbert_polynomial(1).unwrap(), UniPoly::constant(2));
        // window 0 sees h(0) = 1 != 2, so interpolation cannot stabilize
        assert!(matches!(
            xy.hilbert_polynomial(0),
            Err(Error::WindowTooSmall { .. })
        ));
        assert_eq!(xy.hilbert_polynomial_auto().unwrap(), UniPoly::constant(2));
    }

    #[test]
    fn unipoly_parse_and_display() {
        let p = parse_unipoly("1/2*n^2 + 3/2*n + 1").unwrap();
        assert_eq!(p.eval(0), BigRational::from_integer(BigInt::from(1)));
        assert_eq!(p.eval(2), BigRational::from_integer(BigInt::from(6)));
        assert_eq!(p.to_string(), "1/2*n^2 + 3/2*n + 1");
        assert_eq!(parse_unipoly("n+1").unwrap().to_string(), "n + 1");
        assert_eq!(parse_unipoly("2").unwrap(), UniPoly::constant(2));
        assert_eq!(parse_unipoly("n - 1").unwrap().eval(1), BigRational::zero());
        assert!(parse_unipoly("q + 1").is_err());
    }

    #[test]
    fn interpolation_reproduces_binomials() {
        // h(n) = C(n+2, 2) for the zero ideal in three variables
        let r = ring(2, &["x", "y", "z"]);
        let zero = Ideal::zero(&r);
        let p = zero.hilbert_polynomial(0).unwrap();
        assert_eq!(p, parse_unipoly("1/2*n^2 + 3/2*n + 1").unwrap());
    }
}
