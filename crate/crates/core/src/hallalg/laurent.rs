use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Integer Laurent polynomial in `q`, stored sparsely without zero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LaurentPoly(BTreeMap<i32, i64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff · q^exp`.
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut m = BTreeMap::new();
        if coeff != 0 {
            m.insert(exp, coeff);
        }
        LaurentPoly(m)
    }

    /// From ascending coefficients of an ordinary polynomial.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        LaurentPoly(
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (e as i32, c))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e + k, c)).collect())
    }

    /// `P(q) ↦ P(q²)`.
    pub fn at_q_squared(&self) -> Self {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (2 * e, c)).collect())
    }

    /// `P(q) ↦ P(q⁻¹)`.
    pub fn bar(&self) -> Self {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (-e, c)).collect())
    }

    pub fn eval(&self, q: i64) -> Option<i128> {
        self.0.iter().try_fold(0i128, |acc, (&e, &c)| {
            let e = u32::try_from(e).ok()?;
            (q as i128)
                .checked_pow(e)
                .and_then(|v| v.checked_mul(c as i128))
                .and_then(|t| acc.checked_add(t))
        })
    }

    fn add_term(&mut self, exp: i32, coeff: i64) {
        let v = self.0.entry(exp).or_insert(0);
        *v += coeff;
        if *v == 0 {
            self.0.remove(&exp);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.0.iter().rev().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let a = c.abs();
            let body = match (a, e) {
                (_, 0) => a.to_string(),
                (1, 1) => "q".into(),
                (1, _) => format!("q^{e}"),
                (_, 1) => format!("{a}q"),
                _ => format!("{a}q^{e}"),
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}
