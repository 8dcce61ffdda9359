//! The canonical basis of `V(lambda)` on the tabloid basis of `W(lambda)`:
//! the monomial basis `A(T)`, the bar-symmetric folding correction, and the
//! coefficient matrix `D = [d_{tau,T}(q)]`.

use crate::error::{Error, Result};
use crate::fundamental::MonomialWord;
use crate::laurent::LaurentPoly;
use crate::letter::Letter;
use crate::tabloid::{enumerate_tabloids, Shape, Tabloid};
use crate::weight::Weight;
use crate::wmodule::WVector;

/// The raising color of a movable letter in the vector representation
/// chain: `e~_i(x) != 0` exactly for this `i`.
fn raising_color(x: Letter, rank: u8) -> u8 {
    if x.is_barred() {
        if x.value() == rank {
            rank
        } else {
            x.value()
        }
    } else {
        debug_assert!(x.value() >= 2);
        x.value() - 1
    }
}

/// One rewriting step of the monomial-word algorithm applied to the
/// reading, returning the color, the exponent and the next tableau.
fn monomial_step(t: &Tabloid) -> Result<(u8, u32, Tabloid)> {
    let n = t.rank();
    let cols = t.columns();
    let k = (0..cols.len())
        .rev()
        .find(|&k| !cols[k].is_highest_weight())
        .ok_or_else(|| Error::Internal("step requested on highest weight tableau".into()))?;
    let x = cols[k].lowest_movable().ok_or_else(|| {
        Error::Internal(format!("column {} has no movable letter", cols[k]))
    })?;
    let i = raising_color(x, n);

    // Candidates are raised by e~_i, blockers end the scanned factor.
    let (candidates, blockers): (Vec<Letter>, Vec<Letter>) = if i == n {
        (vec![Letter::barred(n)], vec![Letter::unbarred(n)])
    } else {
        (
            vec![Letter::barred(i), Letter::unbarred(i + 1)],
            vec![Letter::barred(i + 1), Letter::unbarred(i)],
        )
    };

    let mut reading = t.reading();
    // Position of x: the copy sitting inside column k of the reading.
    let offset: usize = cols[k + 1..].iter().map(|c| c.height()).sum();
    let in_col = cols[k]
        .letters()
        .iter()
        .position(|&l| l == x)
        .expect("movable letter is in its column");
    let x_pos = offset + in_col;

    // y: rightmost candidate such that the factor x..y has no blocker.
    let mut y_pos = x_pos;
    for (p, &l) in reading.iter().enumerate().skip(x_pos) {
        if blockers.contains(&l) {
            break;
        }
        if candidates.contains(&l) {
            y_pos = p;
        }
    }

    let mut count = 0u32;
    for l in reading.iter_mut().take(y_pos + 1).skip(x_pos) {
        if candidates.contains(l) {
            count += 1;
            *l = if i == n {
                Letter::unbarred(n)
            } else if l.is_barred() {
                Letter::barred(i + 1)
            } else {
                Letter::unbarred(i)
            };
        }
    }

    // Reassemble the reading into columns (rightmost column first).
    let mut new_cols: Vec<Column> = Vec::with_capacity(cols.len());
    let mut at = 0usize;
    for c in cols.iter().rev() {
        let h = c.height();
        let letters = reading[at..at + h].to_vec();
        at += h;
        new_cols.push(Column::new(letters, n).map_err(|e| {
            Error::Internal(format!("rewriting produced an invalid column: {e}"))
        })?);
    }
    new_cols.reverse();
    let next = Tabloid::new(new_cols, n)?;
    next.require_symplectic().map_err(|e| {
        Error::Internal(format!("rewriting left the symplectic tableaux: {e}"))
    })?;
    Ok((i, count, next))
}

use crate::column::Column;

/// The divided-power word with `A(T) = f_{i_1}^{(r_1)} ... f_{i_s}^{(r_s)}
/// v_lambda`, found by repeatedly raising the lowest movable letter of the
/// rightmost non-highest-weight column.
pub fn a_monomial_word(t: &Tabloid) -> Result<MonomialWord> {
    t.require_symplectic()?;
    let t_lambda = Tabloid::highest_weight(&t.shape());
    let mut cur = t.clone();
    let mut steps: Vec<(u8, u32)> = Vec::new();
    let budget = 4 * t.shape().num_cells() * (t.rank() as usize + 1) + 16;
    while cur != t_lambda {
        if steps.len() > budget {
            return Err(Error::Internal(format!(
                "monomial word for {t} did not terminate"
            )));
        }
        let (i, r, next) = monomial_step(&cur)?;
        steps.push((i, r));
        cur = next;
    }
    Ok(MonomialWord::new(steps))
}

/// `A(T)` expanded on the tabloid basis.
pub fn a_vector(t: &Tabloid) -> Result<WVector> {
    let word = a_monomial_word(t)?;
    let start = WVector::highest_weight(&t.shape());
    word.apply_to(&start)
}

/// The canonical basis of one weight space, together with the `A`-basis
/// data that produced it.
pub struct CanonicalBasis {
    pub rank: u8,
    pub shape: Shape,
    pub weight: Weight,
    /// Symplectic tableaux of the class, ascending for the reading order.
    pub tableaux: Vec<Tabloid>,
    /// All tabloids of the class, ascending.
    pub tabloids: Vec<Tabloid>,
    pub a_vectors: Vec<WVector>,
    pub g_vectors: Vec<WVector>,
    /// `a_change[m][j]`: coefficient of `A(T_j)` in `G(T_m)`.
    pub a_change: Vec<Vec<LaurentPoly>>,
}

/// Computes `{G(T)}` for every symplectic tableau of the given weight class
/// by correcting `A(T)` with bar-symmetric folds, descending through the
/// smaller tableaux. Postcondition failures are theorems failing, reported
/// as internal errors with the offending tableau and coefficient.
pub fn canonical_basis(rank: u8, shape: &Shape, weight: &Weight) -> Result<CanonicalBasis> {
    let tableaux = enumerate_tabloids(rank, shape, Some(weight), true);
    if tableaux.is_empty() {
        return Ok(CanonicalBasis {
            rank,
            shape: shape.clone(),
            weight: weight.clone(),
            tableaux,
            tabloids: Vec::new(),
            a_vectors: Vec::new(),
            g_vectors: Vec::new(),
            a_change: Vec::new(),
        });
    }

    let count = tableaux.len();
    let mut a_vectors = Vec::with_capacity(count);
    for t in &tableaux {
        let a = a_vector(t)?;
        if !a.coeff(t).is_one() {
            return Err(Error::Internal(format!(
                "A({t}) has coefficient {} on its own tabloid",
                a.coeff(t)
            )));
        }
        if !a.is_nonnegative() {
            return Err(Error::Internal(format!(
                "A({t}) has a coefficient outside N[q,q^-1]"
            )));
        }
        for (tau, _) in a.iter() {
            if tau > t {
                return Err(Error::Internal(format!(
                    "A({t}) is supported on the larger tabloid {tau}"
                )));
            }
            if tau.content() != *weight {
                return Err(Error::Internal(format!(
                    "A({t}) is supported on {tau} of a different weight"
                )));
            }
        }
        a_vectors.push(a);
    }

    let mut g_vectors: Vec<WVector> = Vec::with_capacity(count);
    let mut a_change: Vec<Vec<LaurentPoly>> = Vec::with_capacity(count);
    for m in 0..count {
        let mut g = a_vectors[m].clone();
        let mut beta = vec![LaurentPoly::zero(); count];
        beta[m] = LaurentPoly::one();
        // Corrections descend so earlier subtractions cannot reintroduce
        // non-positive parts at already cleaned positions above.
        for j in (0..m).rev() {
            let gamma = g.coeff(&tableaux[j]).fold_bar_symmetric();
            if gamma.is_zero() {
                continue;
            }
            g = g.sub_scaled(&gamma, &g_vectors[j]);
            for s in 0..=j {
                let delta = &gamma * &a_change[j][s];
                beta[s] -= &delta;
            }
        }
        // Lemma-backed shape of the result.
        if !g.coeff(&tableaux[m]).is_one() {
            return Err(Error::Internal(format!(
                "G({}) has diagonal coefficient {}",
                tableaux[m],
                g.coeff(&tableaux[m])
            )));
        }
        for (tau, d) in g.iter() {
            if *tau == tableaux[m] {
                continue;
            }
            if !d.vanishes_at_zero() || !d.is_polynomial_in_q() {
                return Err(Error::Internal(format!(
                    "G({}) has coefficient {d} on {tau}, not in qZ[q]",
                    tableaux[m]
                )));
            }
            if tau > &tableaux[m] {
                return Err(Error::Internal(format!(
                    "G({}) is supported on the larger tabloid {tau}",
                    tableaux[m]
                )));
            }
        }
        g_vectors.push(g);
        a_change.push(beta);
    }

    let tabloids = enumerate_tabloids(rank, shape, Some(weight), false);
    Ok(CanonicalBasis {
        rank,
        shape: shape.clone(),
        weight: weight.clone(),
        tableaux,
        tabloids,
        a_vectors,
        g_vectors,
        a_change,
    })
}

/// The distinct contents of `ST(n, lambda)`, sorted.
pub fn weight_classes(rank: u8, shape: &Shape) -> Vec<Weight> {
    let mut out: Vec<Weight> = enumerate_tabloids(rank, shape, None, true)
        .iter()
        .map(|t| t.content())
        .collect();
    out.sort();
    out.dedup();
    out
}

impl CanonicalBasis {
    /// Entry `d_{tau,T}` by row tabloid and column tableau index.
    pub fn entry(&self, row: usize, col: usize) -> LaurentPoly {
        self.g_vectors[col].coeff(&self.tabloids[row])
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }
}
