//! Columns on `C_n`: strictly increasing fillings of a column shape,
//! admissibility, the complement sets `K_C`, `L_C`, `J_C` and the spread
//! columns `rC`, `lC`.

use crate::error::{Error, Result};
use crate::letter::{parse_letter, Letter};
use crate::weight::Weight;
use std::fmt;

/// A column of height `h` on `C_n`, filled from top to bottom by strictly
/// increasing letters. Height 0 is permitted only as the empty column used
/// internally when splitting into unbarred/barred parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    letters: Vec<Letter>,
    rank: u8,
}

/// Result of a successful admissibility test.
///
/// `k_set` is `K_C = (x_1 < ... < x_r)`, the unbarred letters `x` with
/// `(x, xb)` contained in `C`. `l_set` is `L_C = (u_1, ..., u_r)` from the
/// greedy rule: `u_j` is the maximal unbarred letter with `u_j < x_j` and
/// `{u_j, u_j bar}` disjoint from `C` and from the previous choices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissibility {
    pub k_set: Vec<u8>,
    pub l_set: Vec<u8>,
}

impl Column {
    pub fn new(letters: Vec<Letter>, rank: u8) -> Result<Column> {
        for l in &letters {
            Letter::new(l.code(), rank)?;
        }
        if letters.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidColumn(format!(
                "letters must increase strictly, got {}",
                render(&letters)
            )));
        }
        if letters.len() > 2 * rank as usize {
            return Err(Error::InvalidColumn(format!(
                "height {} exceeds 2n = {}",
                letters.len(),
                2 * rank
            )));
        }
        Ok(Column { letters, rank })
    }

    pub fn from_codes(codes: &[i8], rank: u8) -> Result<Column> {
        let letters = codes
            .iter()
            .map(|&c| Letter::new(c, rank))
            .collect::<Result<Vec<_>>>()?;
        Column::new(letters, rank)
    }

    /// The highest weight column `C_p^0 = (1, 2, ..., p)`.
    pub fn highest_weight(height: u8, rank: u8) -> Column {
        debug_assert!(height <= rank);
        Column {
            letters: (1..=height).map(Letter::unbarred).collect(),
            rank,
        }
    }

    pub fn is_highest_weight(&self) -> bool {
        self.letters
            .iter()
            .enumerate()
            .all(|(k, l)| !l.is_barred() && l.value() as usize == k + 1)
    }

    pub fn height(&self) -> usize {
        self.letters.len()
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.letters.binary_search(&l).is_ok()
    }

    pub fn content(&self) -> Weight {
        Weight::of_letters(self.letters.iter(), self.rank)
    }

    /// Removes `old` and inserts `new`, keeping letters sorted.
    pub fn replace(&self, old: Letter, new: Letter) -> Column {
        self.replace_many(&[(old, new)])
    }

    pub fn replace_many(&self, subs: &[(Letter, Letter)]) -> Column {
        let mut letters = self.letters.clone();
        // Resolve every position against the original sorted letters before
        // touching anything.
        for &(old, new) in subs {
            let pos = self
                .letters
                .binary_search(&old)
                .unwrap_or_else(|_| panic!("letter {old} not in column {self}"));
            letters[pos] = new;
        }
        letters.sort();
        debug_assert!(letters.windows(2).all(|w| w[0] < w[1]));
        Column {
            letters,
            rank: self.rank,
        }
    }

    /// A letter is movable when its predecessor exists and is not in `C`.
    pub fn is_movable(&self, l: Letter) -> bool {
        l.pred(self.rank).is_some_and(|p| !self.contains(p))
    }

    /// The lowest movable letter in `C_n` order.
    pub fn lowest_movable(&self) -> Option<Letter> {
        self.letters.iter().copied().find(|&l| self.is_movable(l))
    }

    /// `I_C` as unbarred values, decreasing: the `z` with `(z, zb)` in `C`.
    pub fn pair_values_decreasing(&self) -> Vec<u8> {
        let mut zs: Vec<u8> = self
            .letters
            .iter()
            .filter(|l| !l.is_barred() && self.contains(l.bar_partner()))
            .map(|l| l.value())
            .collect();
        zs.sort_unstable_by(|a, b| b.cmp(a));
        zs
    }

    fn is_free(&self, v: u8) -> bool {
        !self.contains(Letter::unbarred(v)) && !self.contains(Letter::barred(v))
    }

    /// Admissibility test returning `K_C` and `L_C`, or `None` when the
    /// column is not admissible.
    pub fn admissibility(&self) -> Option<Admissibility> {
        let mut k_set = self.pair_values_decreasing();
        k_set.reverse(); // increasing x_1 < ... < x_r
        let mut l_set: Vec<u8> = Vec::with_capacity(k_set.len());
        for &x in &k_set {
            let u = (1..x)
                .rev()
                .find(|&u| self.is_free(u) && !l_set.contains(&u))?;
            l_set.push(u);
        }
        Some(Admissibility { k_set, l_set })
    }

    pub fn is_admissible(&self) -> bool {
        self.admissibility().is_some()
    }

    /// Like [`Column::admissibility`] but reporting the failing pair.
    pub fn require_admissible(&self) -> Result<Admissibility> {
        let k_set: Vec<u8> = {
            let mut zs = self.pair_values_decreasing();
            zs.reverse();
            zs
        };
        let mut l_set: Vec<u8> = Vec::with_capacity(k_set.len());
        for (j, &x) in k_set.iter().enumerate() {
            match (1..x)
                .rev()
                .find(|&u| self.is_free(u) && !l_set.contains(&u))
            {
                Some(u) => l_set.push(u),
                None => {
                    return Err(Error::NotAdmissible {
                        column: self.to_string(),
                        letter: x,
                        index: j,
                    })
                }
            }
        }
        Ok(Admissibility { k_set, l_set })
    }

    /// `J_C = (t_1 > ... > t_r)` by the greedy rule over decreasing `z`:
    /// `t_i` is the greatest letter with `t_i < min(t_{i-1}, z_i)` that is
    /// free in `C`. Returns `None` when no such set exists.
    pub fn j_set(&self) -> Option<Vec<u8>> {
        let zs = self.pair_values_decreasing();
        let mut ts: Vec<u8> = Vec::with_capacity(zs.len());
        for (i, &z) in zs.iter().enumerate() {
            let hi = if i == 0 { z } else { z.min(ts[i - 1]) };
            let t = (1..hi).rev().find(|&t| self.is_free(t))?;
            ts.push(t);
        }
        Some(ts)
    }

    /// `rC`: each barred pair member `z_i bar` replaced by `t_i bar`.
    pub fn spread_r(&self) -> Result<Column> {
        let (zs, ts) = self.spread_data()?;
        let subs: Vec<(Letter, Letter)> = zs
            .iter()
            .zip(&ts)
            .map(|(&z, &t)| (Letter::barred(z), Letter::barred(t)))
            .collect();
        Ok(self.replace_many(&subs))
    }

    /// `lC`: each unbarred pair member `z_i` replaced by `t_i`.
    pub fn spread_l(&self) -> Result<Column> {
        let (zs, ts) = self.spread_data()?;
        let subs: Vec<(Letter, Letter)> = zs
            .iter()
            .zip(&ts)
            .map(|(&z, &t)| (Letter::unbarred(z), Letter::unbarred(t)))
            .collect();
        Ok(self.replace_many(&subs))
    }

    fn spread_data(&self) -> Result<(Vec<u8>, Vec<u8>)> {
        self.require_admissible()?;
        let zs = self.pair_values_decreasing();
        let ts = self.j_set().ok_or_else(|| {
            Error::Internal(format!("admissible column {self} has no J set"))
        })?;
        Ok((zs, ts))
    }

    /// Row-wise comparison `C1 <= C2`: `h(C1) >= h(C2)` and the rows of the
    /// two-column tableau weakly increase (top-aligned).
    pub fn column_le(&self, other: &Column) -> bool {
        self.height() >= other.height()
            && other
                .letters
                .iter()
                .zip(&self.letters)
                .all(|(r, l)| l <= r)
    }
}

fn render(letters: &[Letter]) -> String {
    letters
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(&self.letters))
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", render(&self.letters))
    }
}

/// Parses `"3,5,6,6b,5b,3b"`.
pub fn parse_column(s: &str, rank: u8) -> Result<Column> {
    let letters = s
        .split(',')
        .map(|tok| parse_letter(tok.trim(), rank))
        .collect::<Result<Vec<_>>>()?;
    Column::new(letters, rank)
}

/// All columns of height `h` on `C_n`, in lexicographic `C_n` order.
pub fn enumerate_columns(rank: u8, height: u8, admissible_only: bool) -> Vec<Column> {
    let alphabet: Vec<Letter> = Letter::alphabet(rank).collect();
    let h = height as usize;
    let mut out = Vec::new();
    let mut stack: Vec<Letter> = Vec::with_capacity(h);
    fn rec(
        alphabet: &[Letter],
        start: usize,
        h: usize,
        rank: u8,
        stack: &mut Vec<Letter>,
        admissible_only: bool,
        out: &mut Vec<Column>,
    ) {
        if stack.len() == h {
            let col = Column {
                letters: stack.clone(),
                rank,
            };
            if !admissible_only || col.is_admissible() {
                out.push(col);
            }
            return;
        }
        let needed = h - stack.len();
        for i in start..=alphabet.len().saturating_sub(needed) {
            stack.push(alphabet[i]);
            rec(alphabet, i + 1, h, rank, stack, admissible_only, out);
            stack.pop();
        }
    }
    rec(&alphabet, 0, h, rank, &mut stack, admissible_only, &mut out);
    out
}
