//! The modules `W(Lambda_p)` and `W(lambda)`: sparse vectors over the
//! tabloid basis, the actions of the generators `e_i`, `f_i`, `q^{h_i}`,
//! and divided powers.
//!
//! The single-column action is a direct case table keyed on
//! `E = C and {i+1 bar, i bar, i, i+1}`; the tensor action follows
//! `f_i(u x v) = f_i u x v + t_i u x f_i v` and
//! `e_i(u x v) = e_i u x t_i^-1 v + u x e_i v`, with the first tensor
//! factor being the rightmost (shortest) column of the tabloid.

use crate::column::Column;
use crate::error::{Error, Result};
use crate::laurent::{q_i_exponent, quantum_factorial, LaurentPoly};
use crate::letter::Letter;
use crate::tabloid::{Shape, Tabloid};
use crate::weight::Weight;
use std::collections::BTreeMap;
use std::fmt;

/// Direction of a single-generator action.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Gen {
    Lower, // f_i
    Raise, // e_i
}

/// The image of `v_C` under `f_i` or `e_i` in `W(Lambda_h(C))`:
/// zero, one or two basis terms with coefficients in `{1, q, q^-1}`.
pub fn act_column(gen: Gen, col: &Column, color: u8) -> Vec<(Column, LaurentPoly)> {
    let n = col.rank();
    debug_assert!((1..=n).contains(&color));
    let i = color;
    if i == n {
        let un = Letter::unbarred(n);
        let bn = Letter::barred(n);
        return match gen {
            Gen::Lower => {
                if col.contains(bn) || !col.contains(un) {
                    vec![]
                } else {
                    vec![(col.replace(un, bn), LaurentPoly::one())]
                }
            }
            Gen::Raise => {
                if !col.contains(bn) || col.contains(un) {
                    vec![]
                } else {
                    vec![(col.replace(bn, un), LaurentPoly::one())]
                }
            }
        };
    }

    let lo = Letter::unbarred(i); // i
    let hi = Letter::unbarred(i + 1); // i+1
    let lo_bar = Letter::barred(i); // i bar
    let hi_bar = Letter::barred(i + 1); // i+1 bar
    let e = (
        col.contains(lo),
        col.contains(hi),
        col.contains(lo_bar),
        col.contains(hi_bar),
    );

    // The two moves of each generator. For f_i: move_a is i -> i+1 and
    // move_b is i+1 bar -> i bar. The e_i table is the image of the f_i
    // table under the bar flip i <-> i bar, i+1 <-> i+1 bar, which sends
    // move_a to i bar -> i+1 bar and move_b to i+1 -> i.
    let (a_from, a_to, b_from, b_to) = match gen {
        Gen::Lower => (lo, hi, hi_bar, lo_bar),
        Gen::Raise => (lo_bar, hi_bar, hi, lo),
    };
    let move_a = |coeff: LaurentPoly| (col.replace(a_from, a_to), coeff);
    let move_b = |coeff: LaurentPoly| (col.replace(b_from, b_to), coeff);

    // (has i, has i+1, has i bar, has i+1 bar), normalized to the f_i key
    // by the same bar flip.
    let key = match gen {
        Gen::Lower => e,
        Gen::Raise => (e.2, e.3, e.0, e.1),
    };
    match key {
        // (i):    E = {i}
        (true, false, false, false) => vec![move_a(LaurentPoly::one())],
        // (ii):   E = {i+1 bar, i bar, i}
        (true, false, true, true) => vec![move_a(LaurentPoly::one())],
        // (iii):  E = {i+1 bar}
        (false, false, false, true) => vec![move_b(LaurentPoly::one())],
        // (iv):   E = {i+1 bar, i, i+1}
        (true, true, false, true) => vec![move_b(LaurentPoly::one())],
        // (v):    E = {i+1 bar, i+1}
        (false, true, false, true) => vec![move_b(LaurentPoly::q_pow(-1))],
        // (vi):   E = {i bar, i}
        (true, false, true, false) => vec![move_a(LaurentPoly::one())],
        // (vii):  E = {i+1 bar, i}
        (true, false, false, true) => {
            vec![move_a(LaurentPoly::one()), move_b(LaurentPoly::q_pow(1))]
        }
        // (viii): everything else
        _ => vec![],
    }
}

/// A finitely supported map `Tabloid -> LaurentPoly`, an element of
/// `W(lambda)`. Immutable after construction; operations return new values.
#[derive(Clone, PartialEq, Eq)]
pub struct WVector {
    shape: Shape,
    rank: u8,
    support: BTreeMap<Tabloid, LaurentPoly>,
}

impl WVector {
    pub fn zero(shape: Shape, rank: u8) -> WVector {
        WVector {
            shape,
            rank,
            support: BTreeMap::new(),
        }
    }

    /// The basis vector `v_tau`.
    pub fn basis(tau: Tabloid) -> WVector {
        let rank = tau.rank();
        let shape = tau.shape();
        let mut support = BTreeMap::new();
        support.insert(tau, LaurentPoly::one());
        WVector {
            shape,
            rank,
            support,
        }
    }

    /// The highest weight vector `v_lambda = v_{T_lambda}`.
    pub fn highest_weight(shape: &Shape) -> WVector {
        WVector::basis(Tabloid::highest_weight(shape))
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn coeff(&self, tau: &Tabloid) -> LaurentPoly {
        self.support.get(tau).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tabloid, &LaurentPoly)> {
        self.support.iter()
    }

    pub fn from_terms(
        shape: Shape,
        rank: u8,
        terms: impl IntoIterator<Item = (Tabloid, LaurentPoly)>,
    ) -> WVector {
        let mut v = WVector::zero(shape, rank);
        for (t, c) in terms {
            v.add_term(t, c);
        }
        v
    }

    fn add_term(&mut self, tau: Tabloid, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(tau.rank(), self.rank);
        debug_assert_eq!(tau.shape(), self.shape);
        match self.support.entry(tau) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &WVector) -> WVector {
        let mut out = self.clone();
        for (t, c) in other.iter() {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn sub_scaled(&self, scale: &LaurentPoly, other: &WVector) -> WVector {
        let mut out = self.clone();
        for (t, c) in other.iter() {
            out.add_term(t.clone(), -&(scale * c));
        }
        out
    }

    pub fn scale(&self, scale: &LaurentPoly) -> WVector {
        WVector::from_terms(
            self.shape.clone(),
            self.rank,
            self.iter().map(|(t, c)| (t.clone(), scale * c)),
        )
    }

    /// The common content of the support, if the vector is homogeneous.
    pub fn weight(&self) -> Option<Weight> {
        let mut it = self.support.keys();
        let w = it.next()?.content();
        if it.all(|t| t.content() == w) {
            Some(w)
        } else {
            None
        }
    }

    /// Divides every coefficient exactly; inexactness signals a bug.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<WVector> {
        let mut out = WVector::zero(self.shape.clone(), self.rank);
        for (t, c) in self.iter() {
            out.add_term(t.clone(), c.exact_div(den)?);
        }
        Ok(out)
    }

    /// Checks `N[q, q^-1]` membership of every coefficient.
    pub fn is_nonnegative(&self) -> bool {
        self.support.values().all(|c| c.is_nonnegative())
    }
}

impl fmt::Display for WVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})[{t}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Applies `f_i` (`Gen::Lower`) or `e_i` (`Gen::Raise`) to a vector, by
/// linear extension over the support.
pub fn act(gen: Gen, v: &WVector, color: u8) -> WVector {
    let n = v.rank();
    let d = q_i_exponent(color, n);
    let mut out = WVector::zero(v.shape().clone(), n);
    for (tau, coeff) in v.iter() {
        let cols = tau.columns();
        let pairings: Vec<i64> = cols
            .iter()
            .map(|c| c.content().h_pairing(color))
            .collect();
        // Tensor order: first factor is the rightmost column. For f_i the
        // `t_i` eigenvalues of the factors before position k accumulate;
        // for e_i the `t_i^-1` eigenvalues of the factors after position k.
        for k in 0..cols.len() {
            let exponent: i64 = match gen {
                Gen::Lower => pairings[k + 1..].iter().sum(),
                Gen::Raise => -pairings[..k].iter().sum::<i64>(),
            };
            for (new_col, c) in act_column(gen, &cols[k], color) {
                let factor = LaurentPoly::q_pow((d as i64 * exponent) as i32);
                let term = &(&factor * &c) * coeff;
                out.add_term(tau.replace_column(k, new_col), term);
            }
        }
    }
    out
}

pub fn act_f(v: &WVector, color: u8) -> WVector {
    act(Gen::Lower, v, color)
}

pub fn act_e(v: &WVector, color: u8) -> WVector {
    act(Gen::Raise, v, color)
}

/// The divided power `f_i^{(m)} v = f_i^m v / [m]_i!`, computed by `m`
/// successive applications followed by one exact division.
pub fn act_f_divided(v: &WVector, color: u8, m: u32) -> Result<WVector> {
    act_divided(Gen::Lower, v, color, m)
}

pub fn act_e_divided(v: &WVector, color: u8, m: u32) -> Result<WVector> {
    act_divided(Gen::Raise, v, color, m)
}

pub fn act_divided(gen: Gen, v: &WVector, color: u8, m: u32) -> Result<WVector> {
    let mut out = v.clone();
    for _ in 0..m {
        out = act(gen, &out, color);
    }
    out.exact_div(&quantum_factorial(m, color, v.rank()))
}
