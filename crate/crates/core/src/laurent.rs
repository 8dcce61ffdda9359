//! Exact arithmetic in the Laurent polynomial ring `Z[q, q^-1]`.
//!
//! Coefficients are arbitrary-precision integers, so overflow is impossible
//! by construction. The representation is a sorted sparse map from exponent
//! to coefficient with zero coefficients never stored, which makes equality
//! structural.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

/// An element of `Z[q, q^-1]`.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(1, 0)
    }

    /// `c * q^e`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i32) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// `q^e`.
    pub fn q_pow(exp: i32) -> LaurentPoly {
        LaurentPoly::monomial(1, exp)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, BigInt)>) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self
            .terms
            .get(&0)
            .is_some_and(|c| *c == BigInt::from(1))
    }

    /// Coefficient of `q^e` (zero if absent).
    pub fn coeff(&self, exp: i32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exp: i32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The bar involution `q -> q^-1`: exponent `j -> -j` on every term.
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_bar_symmetric(&self) -> bool {
        *self == self.bar()
    }

    /// All coefficients nonnegative, i.e. membership in `N[q, q^-1]`.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Membership in `Z[q]`.
    pub fn is_polynomial_in_q(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    /// Membership in `q Z[q]`, i.e. vanishing at `q = 0`.
    pub fn vanishes_at_zero(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 1)
    }

    /// Multiplies by `q^e`.
    pub fn shifted(&self, e: i32) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect(),
        }
    }

    /// Exact division in `Z[q, q^-1]`; an inexact division reports a bug in
    /// operator application, never a user error.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        if den.is_zero() {
            return Err(Error::Internal("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let inexact = || Error::InexactDivision {
            num: self.to_string(),
            den: den.to_string(),
        };
        let den_max = den.max_exp().unwrap();
        let den_lead = den.terms.get(&den_max).unwrap();
        // If a quotient exists its exponents are bounded below by this.
        let quo_min = self.min_exp().unwrap() - den.min_exp().unwrap();
        let mut rem = self.clone();
        let mut quo = LaurentPoly::zero();
        while !rem.is_zero() {
            let rem_max = rem.max_exp().unwrap();
            let exp = rem_max - den_max;
            if exp < quo_min {
                return Err(inexact());
            }
            let lead = rem.terms.get(&rem_max).unwrap();
            let (c, r) = num_integer_div_rem(lead, den_lead);
            if !r.is_zero() {
                return Err(inexact());
            }
            for (e, dc) in den.iter() {
                rem.add_term(e + exp, -(dc * &c));
            }
            quo.add_term(exp, c);
        }
        Ok(quo)
    }

    /// The unique bar-fixed `g` with `self - g` in `q Z[q]`; concretely
    /// `g = a_0 + sum_{j<0} a_j (q^j + q^-j)`.
    pub fn fold_bar_symmetric(&self) -> LaurentPoly {
        let mut g = LaurentPoly::zero();
        for (e, c) in self.iter() {
            if e == 0 {
                g.add_term(0, c.clone());
            } else if e < 0 {
                g.add_term(e, c.clone());
                g.add_term(-e, c.clone());
            }
        }
        g
    }

    /// Specialization at `q = 0`, defined on `Z[q]` only.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.iter() {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.iter() {
            self.add_term(e, -c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in rhs.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// `q_i`: `q` for `i != n`, `q^2` for `i = n`.
pub fn q_i_exponent(color: u8, rank: u8) -> i32 {
    if color == rank {
        2
    } else {
        1
    }
}

/// The quantum integer `[m]_i = (q_i^m - q_i^-m) / (q_i - q_i^-1)`.
///
/// The rank is taken explicitly so the `q_i` convention is unambiguous at
/// call sites.
pub fn quantum_int(m: u32, color: u8, rank: u8) -> LaurentPoly {
    debug_assert!((1..=rank).contains(&color));
    let d = q_i_exponent(color, rank);
    let m = m as i32;
    LaurentPoly::from_terms((0..m).map(|k| (d * (m - 1 - 2 * k), BigInt::from(1))))
}

/// `[m]_i! = [m]_i [m-1]_i ... [1]_i`.
pub fn quantum_factorial(m: u32, color: u8, rank: u8) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for k in 1..=m {
        out = &out * &quantum_int(k, color, rank);
    }
    out
}

/// The quantum integer extended to negative arguments, `[-m] = -[m]`.
pub fn quantum_int_signed(m: i64, color: u8, rank: u8) -> LaurentPoly {
    if m >= 0 {
        quantum_int(m as u32, color, rank)
    } else {
        -&quantum_int((-m) as u32, color, rank)
    }
}

// Matrix-style rendering: "." for zero, terms by ascending exponent,
// e.g. "q+q^3", "2q^5+q^7", "-q^4", "q^-2+3+q^2".
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, ".");
        }
        let mut first = true;
        for (e, c) in self.iter() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let abs = c.abs();
            let unit = abs == BigInt::from(1);
            match (e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{abs}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{abs}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the display form: `"."`, `"1"`, `"q"`, `"q^-2+3+q^2"`, `"2q^5+q^7"`.
    fn from_str(s: &str) -> Result<LaurentPoly> {
        let s = s.trim();
        if s == "." || s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let bad = || Error::InvalidInput(format!("bad Laurent polynomial {s:?}"));
        let mut out = LaurentPoly::zero();
        // Split into sign-prefixed terms. A '-' in an exponent follows '^'.
        let mut terms: Vec<(i64, String)> = Vec::new();
        let mut sign = 1i64;
        let mut cur = String::new();
        let mut prev_caret = false;
        for ch in s.chars() {
            match ch {
                '+' | '-' if !prev_caret && !cur.is_empty() => {
                    terms.push((sign, std::mem::take(&mut cur)));
                    sign = if ch == '-' { -1 } else { 1 };
                }
                '-' if !prev_caret && cur.is_empty() => sign = -sign,
                ' ' => {}
                _ => {
                    prev_caret = ch == '^';
                    cur.push(ch);
                }
            }
        }
        if cur.is_empty() {
            return Err(bad());
        }
        terms.push((sign, cur));
        for (sgn, t) in terms {
            let (coeff_str, exp) = match t.find('q') {
                None => (t.as_str(), 0i32),
                Some(pos) => {
                    let exp = match t[pos + 1..].strip_prefix('^') {
                        None if t[pos + 1..].is_empty() => 1i32,
                        Some(e) => e.parse().map_err(|_| bad())?,
                        None => return Err(bad()),
                    };
                    (&t[..pos], exp)
                }
            };
            let coeff: BigInt = if coeff_str.is_empty() {
                BigInt::from(1)
            } else {
                coeff_str.parse().map_err(|_| bad())?
            };
            out.add_term(exp, coeff * BigInt::from(sgn));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_cancels_and_normalizes() {
        assert_eq!(&p("q+1") + &p("-1"), p("q"));
        assert_eq!(&LaurentPoly::zero() + &p("q^-2"), p("q^-2"));
        assert_eq!(&p("q+q^3") + &p("q^3"), p("q+2q^3"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("q") * &p("q^-1"), p("1"));
        assert_eq!(&p("q+q^-1") * &p("q+q^-1"), p("q^-2+2+q^2"));
        assert_eq!(&p("q+q^-1") * &LaurentPoly::zero(), LaurentPoly::zero());
    }

    #[test]
    fn bar_flips_exponents() {
        assert_eq!(p("q^3").bar(), p("q^-3"));
        assert_eq!(p("1+q").bar(), p("1+q^-1"));
        assert_eq!(p("q+q^-1").bar(), p("q+q^-1"));
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(quantum_int(1, 1, 3), p("1"));
        assert_eq!(quantum_int(2, 1, 3), p("q^-1+q"));
        assert_eq!(quantum_int(2, 3, 3), p("q^-2+q^2"));
        assert_eq!(quantum_int(0, 1, 3), LaurentPoly::zero());
        assert_eq!(quantum_factorial(3, 1, 3), p("q^-3+2q^-1+2q+q^3"));
        assert_eq!(quantum_factorial(0, 2, 3), p("1"));
    }

    #[test]
    fn exact_division() {
        let two = p("q+q^-1");
        assert_eq!(two.exact_div(&two).unwrap(), p("1"));
        assert_eq!(p("q^-2+2+q^2").exact_div(&two).unwrap(), two);
        assert!(p("1").exact_div(&two).is_err());
        assert!(p("q").exact_div(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn fold_examples() {
        assert_eq!(p("q^-2+3").fold_bar_symmetric(), p("q^-2+3+q^2"));
        assert_eq!(p("q+q^-1").fold_bar_symmetric(), p("q^-1+q"));
        assert_eq!(p("q^5").fold_bar_symmetric(), LaurentPoly::zero());
    }

    #[test]
    fn display_matches_matrix_style() {
        assert_eq!(LaurentPoly::zero().to_string(), ".");
        assert_eq!(p("1").to_string(), "1");
        assert_eq!(p("2q^5+q^7").to_string(), "2q^5+q^7");
        assert_eq!(p("-q^4").to_string(), "-q^4");
        assert_eq!(p("q^-2+3+q^2").to_string(), "q^-2+3+q^2");
        assert_eq!(p("q-q^2").to_string(), "q-q^2");
    }
}
