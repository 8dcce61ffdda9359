//! Canonical basis of the fundamental modules: the path algorithm on
//! admissible columns, and the closed-form expansion
//! `G(C) = sum_{X subset K_C} q^card(X) v_{C_X}`.

use crate::column::Column;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::letter::Letter;
use crate::tabloid::Tabloid;
use crate::wmodule::{act_f_divided, WVector};
use std::fmt;

/// A product of divided powers `f_{i_1}^{(r_1)} ... f_{i_s}^{(r_s)}` applied
/// to a highest weight vector; steps apply right to left.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MonomialWord {
    steps: Vec<(u8, u32)>,
}

impl MonomialWord {
    pub fn new(steps: Vec<(u8, u32)>) -> MonomialWord {
        debug_assert!(steps.iter().all(|&(_, r)| r >= 1));
        MonomialWord { steps }
    }

    pub fn steps(&self) -> &[(u8, u32)] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies the rightmost factor first.
    pub fn apply_to(&self, v: &WVector) -> Result<WVector> {
        let mut out = v.clone();
        for &(color, m) in self.steps.iter().rev() {
            out = act_f_divided(&out, color, m)?;
        }
        Ok(out)
    }
}

impl fmt::Display for MonomialWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(i, r) in &self.steps {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if r == 1 {
                write!(f, "f{i}")?;
            } else {
                write!(f, "f{i}^({r})")?;
            }
        }
        Ok(())
    }
}

/// The path joining `w(C)` to `w(C_p^0)`: repeatedly moves the lowest
/// movable letter by the matching case, recording the color and exponent of
/// the `e~` power realizing the move. Case (ii) contributes exponent 2, the
/// others exponent 1; consecutive equal colors are merged.
pub fn marsh_path(col: &Column) -> Result<MonomialWord> {
    col.require_admissible()?;
    let n = col.rank();
    let mut cur = col.clone();
    let mut steps: Vec<(u8, u32)> = Vec::new();
    while !cur.is_highest_weight() {
        let z = cur.lowest_movable().ok_or_else(|| {
            Error::Internal(format!(
                "column {cur} is not of highest weight but has no movable letter"
            ))
        })?;
        let (color, exp, next) = if !z.is_barred() {
            // z = i+1 unbarred
            let i = z.value() - 1;
            let i_bar = Letter::barred(i);
            let z_bar = Letter::barred(z.value());
            if cur.contains(i_bar) && !cur.contains(z_bar) {
                // (ii): C - {i bar, i+1} + {i+1 bar, i}
                let next = cur.replace_many(&[(i_bar, z_bar), (z, Letter::unbarred(i))]);
                (i, 2, next)
            } else {
                // (i): C - {i+1} + {i}
                (i, 1, cur.replace(z, Letter::unbarred(i)))
            }
        } else if z.value() == n {
            // (iv): C - {n bar} + {n}
            (n, 1, cur.replace(z, Letter::unbarred(n)))
        } else {
            // (iii): C - {i bar} + {i+1 bar}
            let i = z.value();
            (i, 1, cur.replace(z, Letter::barred(i + 1)))
        };
        match steps.last_mut() {
            Some((c, r)) if *c == color => *r += exp,
            _ => steps.push((color, exp)),
        }
        cur = next;
    }
    Ok(MonomialWord { steps })
}

/// Closed-form canonical basis vector of `V(Lambda_p)` on the column basis:
/// one term per subset `X` of `K_C`, replacing each pair `(x, xb)` with
/// `x` in `X` by its partner `(u, ub)` from `L_C`, with coefficient
/// `q^card(X)`.
pub fn g_fundamental_closed(col: &Column) -> Result<WVector> {
    let adm = col.require_admissible()?;
    let r = adm.k_set.len();
    let shape = Tabloid::single(col.clone()).shape();
    let mut terms = Vec::with_capacity(1 << r);
    for mask in 0u32..(1 << r) {
        let mut subs: Vec<(Letter, Letter)> = Vec::new();
        for j in 0..r {
            if mask & (1 << j) != 0 {
                let x = adm.k_set[j];
                let u = adm.l_set[j];
                subs.push((Letter::unbarred(x), Letter::unbarred(u)));
                subs.push((Letter::barred(x), Letter::barred(u)));
            }
        }
        let new_col = col.replace_many(&subs);
        let coeff = LaurentPoly::q_pow(mask.count_ones() as i32);
        terms.push((Tabloid::single(new_col), coeff));
    }
    Ok(WVector::from_terms(shape, col.rank(), terms))
}

/// The same vector computed along the path:
/// `G(C) = f_{i_1}^{(p_1)} ... f_{i_r}^{(p_r)} v_{Lambda_p}`.
pub fn g_fundamental_monomial(col: &Column) -> Result<WVector> {
    let path = marsh_path(col)?;
    let start = WVector::basis(Tabloid::single(Column::highest_weight(
        col.height() as u8,
        col.rank(),
    )));
    path.apply_to(&start)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::column::{enumerate_columns, parse_column};

    fn col(s: &str, n: u8) -> Column {
        parse_column(s, n).unwrap()
    }

    #[test]
    fn path_of_highest_weight_column_is_empty() {
        let c = Column::highest_weight(3, 3);
        let path = marsh_path(&c).unwrap();
        assert!(path.is_empty());
        assert_eq!(path.to_string(), "1");
    }

    #[test]
    fn path_of_the_two_bar_one_bar_column() {
        let path = marsh_path(&col("2b,1b", 3)).unwrap();
        assert_eq!(
            path.steps(),
            &[(2, 1), (3, 1), (2, 1), (1, 2), (2, 1), (3, 1), (2, 1)]
        );
        assert_eq!(path.to_string(), "f2 f3 f2 f1^(2) f2 f3 f2");
    }

    #[test]
    fn path_merges_consecutive_colors() {
        // over n = 2 the column (2,1b) walks through two color-1 moves
        let path = marsh_path(&col("2,1b", 2)).unwrap();
        assert_eq!(path.steps(), &[(1, 2), (2, 1)]);
    }

    #[test]
    fn path_rejects_non_admissible() {
        assert!(marsh_path(&col("2,3,3b,1b", 3)).is_err());
    }

    #[test]
    fn closed_form_with_empty_k_is_the_basis_vector() {
        let c = col("2,1b", 2);
        let g = g_fundamental_closed(&c).unwrap();
        assert_eq!(g, WVector::basis(Tabloid::single(c)));
    }

    #[test]
    fn closed_form_eight_term_expansion() {
        let n = 6;
        let c = col("3,5,6,6b,5b,3b", n);
        let g = g_fundamental_closed(&c).unwrap();
        let expected: [(&str, &str); 8] = [
            ("3,5,6,6b,5b,3b", "1"),
            ("2,5,6,6b,5b,2b", "q"),
            ("3,4,6,6b,4b,3b", "q"),
            ("1,3,5,5b,3b,1b", "q"),
            ("2,4,6,6b,4b,2b", "q^2"),
            ("1,2,5,5b,2b,1b", "q^2"),
            ("1,3,4,4b,3b,1b", "q^2"),
            ("1,2,4,4b,2b,1b", "q^3"),
        ];
        assert_eq!(g.len(), expected.len());
        for (cs, ps) in expected {
            assert_eq!(
                g.coeff(&Tabloid::single(col(cs, n))),
                ps.parse().unwrap(),
                "coefficient of {cs}"
            );
        }
    }

    #[test]
    fn monomial_route_agrees_with_closed_form() {
        for n in 1..=3u8 {
            for p in 1..=n {
                for c in enumerate_columns(n, p, true) {
                    let closed = g_fundamental_closed(&c).unwrap();
                    let monomial = g_fundamental_monomial(&c).unwrap();
                    assert_eq!(closed, monomial, "mismatch at {c} (n={n})");
                }
            }
        }
    }

    #[test]
    fn monomial_route_agrees_on_the_example_column() {
        let c = col("3,5,6,6b,5b,3b", 6);
        assert_eq!(
            g_fundamental_monomial(&c).unwrap(),
            g_fundamental_closed(&c).unwrap()
        );
    }
}
