//! Exact monomial arithmetic over a fixed variable set.
//!
//! Variables are indexed `1..=n` and print as `x1`, ..., `xn`. A monomial is
//! an exponent vector; the unit monomial has all exponents zero.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial in `n` variables, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// The unit monomial `1` in `width` variables.
    pub fn unit(width: usize) -> Self {
        Monomial {
            exponents: vec![0; width],
        }
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The single variable `x<var>` (1-based) in `width` variables.
    pub fn variable(var: usize, width: usize) -> Self {
        assert!(var >= 1 && var <= width, "variable index out of range");
        let mut exponents = vec![0; width];
        exponents[var - 1] = 1;
        Monomial { exponents }
    }

    /// A squarefree monomial with support given by 1-based vertex indices.
    pub fn squarefree(vars: impl IntoIterator<Item = usize>, width: usize) -> Self {
        let mut exponents = vec![0; width];
        for v in vars {
            assert!(v >= 1 && v <= width, "variable index out of range");
            exponents[v - 1] = 1;
        }
        Monomial { exponents }
    }

    pub fn width(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of the 1-based variable `var`.
    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Support as 1-based variable indices, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    fn check_width(&self, other: &Monomial) -> Result<()> {
        if self.width() != other.width() {
            return Err(Error::WidthMismatch(self.width(), other.width()));
        }
        Ok(())
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_width(other)?;
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        })
    }

    /// Componentwise maximum of exponents.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_width(other)?;
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        })
    }

    pub fn is_coprime(&self, other: &Monomial) -> Result<bool> {
        Ok(self.gcd(other)?.is_unit())
    }

    /// Product of monomials; overflow on an exponent is a bug in the caller's
    /// degree bounds and panics.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_width(other)?;
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        })
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_width(other)?;
        Ok(self
            .exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a <= b))
    }

    /// Splits each `x_i^a` into `a` distinct fresh squarefree variables.
    ///
    /// `budgets[i]` columns are reserved for variable `i+1`; the slot `(i, j)`
    /// flattens row-major to position `sum(budgets[..i]) + j` in the expanded
    /// ring of width `sum(budgets)`.
    pub fn polarize(&self, budgets: &[u32]) -> Result<Monomial> {
        assert_eq!(budgets.len(), self.width());
        let expanded: usize = budgets.iter().map(|&b| b as usize).sum();
        let mut exponents = vec![0u32; expanded];
        let mut offset = 0usize;
        for (i, (&e, &budget)) in self.exponents.iter().zip(budgets).enumerate() {
            if e > budget {
                return Err(Error::BudgetExceeded {
                    var: i + 1,
                    exponent: e,
                    budget,
                });
            }
            for j in 0..e as usize {
                exponents[offset + j] = 1;
            }
            offset += budget as usize;
        }
        Ok(Monomial { exponents })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the text syntax `x3`, `x1^2*x3`, `1`.
pub fn parse_monomial(s: &str, width: usize) -> Result<Monomial> {
    let s = s.trim();
    if s == "1" {
        return Ok(Monomial::unit(width));
    }
    let mut exponents = vec![0u32; width];
    for factor in s.split('*') {
        let factor = factor.trim();
        let (var_part, exp_part) = match factor.split_once('^') {
            Some((v, e)) => (v, Some(e)),
            None => (factor, None),
        };
        let var: usize = var_part
            .strip_prefix('x')
            .ok_or_else(|| Error::Parse(format!("bad factor `{factor}`")))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad variable in `{factor}`")))?;
        if var < 1 || var > width {
            return Err(Error::Parse(format!(
                "variable x{var} out of range for width {width}"
            )));
        }
        let exp: u32 = match exp_part {
            Some(e) => e
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
            None => 1,
        };
        exponents[var - 1] = exponents[var - 1]
            .checked_add(exp)
            .expect("exponent overflow");
    }
    Ok(Monomial { exponents })
}

/// Kind of monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lexicographic,
    GradedLexicographic,
}

/// A monomial order: lex or graded lex with an explicit variable precedence.
///
/// `precedence[0]` is the most significant (largest) variable, 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrderSpec {
    pub kind: OrderKind,
    pub precedence: Vec<usize>,
}

impl MonomialOrderSpec {
    /// Lexicographic with x1 > x2 > ... > xn, the default everywhere.
    pub fn default_lex(width: usize) -> Self {
        MonomialOrderSpec {
            kind: OrderKind::Lexicographic,
            precedence: (1..=width).collect(),
        }
    }

    pub fn graded_lex(width: usize) -> Self {
        MonomialOrderSpec {
            kind: OrderKind::GradedLexicographic,
            precedence: (1..=width).collect(),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.width() != b.width() {
            return Err(Error::WidthMismatch(a.width(), b.width()));
        }
        if self.kind == OrderKind::GradedLexicographic {
            match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {}
                ord => return Ok(ord),
            }
        }
        for &var in &self.precedence {
            match a.exponent(var).cmp(&b.exponent(var)) {
                Ordering::Equal => {}
                ord => return Ok(ord),
            }
        }
        Ok(Ordering::Equal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str, w: usize) -> Monomial {
        parse_monomial(s, w).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(m("x1^2*x2", 3).gcd(&m("x1*x3", 3)).unwrap(), m("x1", 3));
        assert_eq!(m("x1", 2).gcd(&m("x2", 2)).unwrap(), Monomial::unit(2));
        assert_eq!(
            m("x1^2*x2^3", 2).gcd(&m("x1^3*x2", 2)).unwrap(),
            m("x1^2*x2", 2)
        );
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(
            m("x1*x3", 4).lcm(&m("x2*x4", 4)).unwrap(),
            m("x1*x2*x3*x4", 4)
        );
        assert_eq!(m("x1^2", 1).lcm(&m("x1", 1)).unwrap(), m("x1^2", 1));
        let a = m("x1^2*x3", 3);
        assert_eq!(a.lcm(&Monomial::unit(3)).unwrap(), a);
    }

    #[test]
    fn divides_examples() {
        assert!(m("x1*x2", 3).divides(&m("x1^2*x2*x3", 3)).unwrap());
        assert!(!m("x1^2", 2).divides(&m("x1*x2", 2)).unwrap());
        assert!(Monomial::unit(3).divides(&m("x1*x2^4", 3)).unwrap());
    }

    #[test]
    fn width_mismatch_rejected() {
        assert!(m("x1", 2).gcd(&m("x1", 3)).is_err());
        assert!(m("x1", 2).lcm(&m("x1", 3)).is_err());
        assert!(m("x1", 2).divides(&m("x1", 3)).is_err());
    }

    #[test]
    fn lex_compare() {
        let ord = MonomialOrderSpec::default_lex(3);
        assert_eq!(
            ord.compare(&m("x1^2", 3), &m("x1*x2", 3)).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            ord.compare(&m("x1*x2", 3), &m("x1*x2", 3)).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            ord.compare(&m("x1*x3", 3), &m("x2*x3", 3)).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn graded_lex_compare() {
        let ord = MonomialOrderSpec::graded_lex(3);
        // degree wins before lex
        assert_eq!(
            ord.compare(&m("x3^3", 3), &m("x1^2", 3)).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn order_is_multiplicative_with_unit_minimum() {
        let ord = MonomialOrderSpec::default_lex(2);
        for mono in [m("x1", 2), m("x2", 2), m("x1*x2^3", 2)] {
            assert_eq!(
                ord.compare(&mono, &Monomial::unit(2)).unwrap(),
                Ordering::Greater
            );
        }
    }

    #[test]
    fn polarize_examples() {
        // x1^3 over budget [3]
        let p = m("x1^3", 1).polarize(&[3]).unwrap();
        assert_eq!(p, m("x1*x2*x3", 3));
        // x1^2*x2 over budgets [2, 1]
        let p = m("x1^2*x2", 2).polarize(&[2, 1]).unwrap();
        assert_eq!(p, m("x1*x2*x3", 3));
        // squarefree monomials are fixed up to renaming
        let p = m("x1*x2", 2).polarize(&[1, 1]).unwrap();
        assert_eq!(p, m("x1*x2", 2));
    }

    #[test]
    fn polarize_budget_exceeded() {
        assert!(matches!(
            m("x1^3", 1).polarize(&[2]),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn parse_print_roundtrip() {
        for s in ["1", "x1", "x2^4", "x1^2*x3", "x1*x2*x3*x4"] {
            let mono = m(s, 4);
            assert_eq!(mono.to_string(), s);
            assert_eq!(parse_monomial(&mono.to_string(), 4).unwrap(), mono);
        }
    }
}
