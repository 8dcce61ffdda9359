//! Tabloids and symplectic tableaux: column sequences of a given shape,
//! readings, the total order on readings, and enumeration.

use crate::column::{enumerate_columns, parse_column, Column};
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::weight::Weight;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// A dominant weight given by its coefficients on the fundamental weights.
/// The shape has `lambda_p` columns of height `p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Shape {
    lambda: Vec<u32>,
}

impl Shape {
    pub fn new(lambda: Vec<u32>) -> Shape {
        Shape { lambda }
    }

    pub fn fundamental(p: u8, rank: u8) -> Shape {
        let mut lambda = vec![0; rank as usize];
        lambda[(p - 1) as usize] = 1;
        Shape { lambda }
    }

    pub fn rank(&self) -> u8 {
        self.lambda.len() as u8
    }

    pub fn lambda(&self) -> &[u32] {
        &self.lambda
    }

    /// Column heights, tallest first.
    pub fn heights(&self) -> Vec<u8> {
        let mut hs = Vec::new();
        for p in (1..=self.lambda.len()).rev() {
            for _ in 0..self.lambda[p - 1] {
                hs.push(p as u8);
            }
        }
        hs
    }

    pub fn num_cells(&self) -> usize {
        self.lambda
            .iter()
            .enumerate()
            .map(|(i, &m)| (i + 1) * m as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.iter().all(|&m| m == 0)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.lambda.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// A juxtaposition of columns with weakly decreasing heights, leftmost
/// tallest. Columns need not be admissible and there is no row condition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tabloid {
    cols: Vec<Column>,
    rank: u8,
}

impl Tabloid {
    pub fn new(cols: Vec<Column>, rank: u8) -> Result<Tabloid> {
        for c in &cols {
            if c.rank() != rank {
                return Err(Error::ShapeMismatch(format!(
                    "column rank {} differs from tabloid rank {rank}",
                    c.rank()
                )));
            }
        }
        if cols.windows(2).any(|w| w[0].height() < w[1].height()) {
            return Err(Error::ShapeMismatch(
                "column heights must weakly decrease left to right".into(),
            ));
        }
        Ok(Tabloid { cols, rank })
    }

    pub fn single(col: Column) -> Tabloid {
        let rank = col.rank();
        Tabloid {
            cols: vec![col],
            rank,
        }
    }

    /// `T_lambda`: the symplectic tableau whose `k`-th row is filled by `k`.
    pub fn highest_weight(shape: &Shape) -> Tabloid {
        let rank = shape.rank();
        Tabloid {
            cols: shape
                .heights()
                .into_iter()
                .map(|h| Column::highest_weight(h, rank))
                .collect(),
            rank,
        }
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn columns(&self) -> &[Column] {
        &self.cols
    }

    pub fn num_columns(&self) -> usize {
        self.cols.len()
    }

    pub fn heights(&self) -> Vec<u8> {
        self.cols.iter().map(|c| c.height() as u8).collect()
    }

    pub fn shape(&self) -> Shape {
        let mut lambda = vec![0u32; self.rank as usize];
        for c in &self.cols {
            if c.height() > 0 {
                lambda[c.height() - 1] += 1;
            }
        }
        Shape { lambda }
    }

    /// The reading `w(C_r) ... w(C_2) w(C_1)`: rightmost column first, each
    /// column top to bottom.
    pub fn reading(&self) -> Vec<Letter> {
        self.cols
            .iter()
            .rev()
            .flat_map(|c| c.letters().iter().copied())
            .collect()
    }

    pub fn content(&self) -> Weight {
        Weight::of_letters(self.cols.iter().flat_map(|c| c.letters()), self.rank)
    }

    pub fn replace_column(&self, idx: usize, col: Column) -> Tabloid {
        debug_assert_eq!(self.cols[idx].height(), col.height());
        let mut cols = self.cols.clone();
        cols[idx] = col;
        Tabloid {
            cols,
            rank: self.rank,
        }
    }

    /// Symplectic tableau test: every column admissible and
    /// `rC_i <= lC_{i+1}` for consecutive columns.
    pub fn is_symplectic(&self) -> bool {
        self.require_symplectic().is_ok()
    }

    pub fn require_symplectic(&self) -> Result<()> {
        let spreads: Vec<(Column, Column)> = self
            .cols
            .iter()
            .map(|c| Ok((c.spread_r()?, c.spread_l()?)))
            .collect::<Result<_>>()
            .map_err(|e| match e {
                Error::NotAdmissible { column, .. } => {
                    Error::NotSymplectic(format!("column {column} of {self} is not admissible"))
                }
                other => other,
            })?;
        for (i, w) in spreads.windows(2).enumerate() {
            let (r_left, l_right) = (&w[0].0, &w[1].1);
            if !r_left.column_le(l_right) {
                return Err(Error::NotSymplectic(format!(
                    "columns {i} and {} of {self} violate the spread condition",
                    i + 1
                )));
            }
        }
        Ok(())
    }
}

// Total order realizing the lexicographic order on readings within a fixed
// shape; across shapes, heights compare first so the order stays total.
impl Ord for Tabloid {
    fn cmp(&self, other: &Self) -> Ordering {
        self.heights()
            .cmp(&other.heights())
            .then_with(|| self.reading().cmp(&other.reading()))
    }
}

impl PartialOrd for Tabloid {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The order on readings; both tabloids must have the same shape and rank.
pub fn lex_compare(a: &Tabloid, b: &Tabloid) -> Result<Ordering> {
    if a.rank() != b.rank() {
        return Err(Error::ShapeMismatch(format!(
            "rank {} vs {}",
            a.rank(),
            b.rank()
        )));
    }
    if a.heights() != b.heights() {
        return Err(Error::ShapeMismatch(format!("{a} vs {b}")));
    }
    Ok(a.reading().cmp(&b.reading()))
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cols.is_empty() {
            return write!(f, "(empty)");
        }
        let strs: Vec<String> = self.cols.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", strs.join("|"))
    }
}

impl fmt::Debug for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"1,3,2b|1,3b,2b|2b,1b|1b"` (columns leftmost first).
pub fn parse_tabloid(s: &str, rank: u8) -> Result<Tabloid> {
    let cols = s
        .split('|')
        .map(|part| parse_column(part.trim(), rank))
        .collect::<Result<Vec<_>>>()?;
    Tabloid::new(cols, rank)
}

/// All tabloids (or symplectic tableaux) of the given shape, optionally
/// restricted to one content class, sorted ascending by the reading order.
pub fn enumerate_tabloids(
    rank: u8,
    shape: &Shape,
    weight_filter: Option<&Weight>,
    symplectic_only: bool,
) -> Vec<Tabloid> {
    let heights = shape.heights();
    let mut pool: HashMap<u8, Vec<Column>> = HashMap::new();
    for &h in &heights {
        pool.entry(h)
            .or_insert_with(|| enumerate_columns(rank, h, symplectic_only));
    }
    // Spreads are reused across adjacency checks.
    let spreads: HashMap<Column, (Column, Column)> = if symplectic_only {
        pool.values()
            .flatten()
            .map(|c| {
                (
                    c.clone(),
                    (c.spread_r().unwrap(), c.spread_l().unwrap()),
                )
            })
            .collect()
    } else {
        HashMap::new()
    };

    let mut out = Vec::new();
    let mut stack: Vec<Column> = Vec::with_capacity(heights.len());

    #[allow(clippy::too_many_arguments)]
    fn rec(
        heights: &[u8],
        pool: &HashMap<u8, Vec<Column>>,
        spreads: &HashMap<Column, (Column, Column)>,
        symplectic_only: bool,
        weight_filter: Option<&Weight>,
        rank: u8,
        stack: &mut Vec<Column>,
        partial: Weight,
        cells_left: usize,
        out: &mut Vec<Tabloid>,
    ) {
        if let Some(target) = weight_filter {
            // Each remaining cell changes one coordinate by one.
            let slack: i64 = target
                .0
                .iter()
                .zip(&partial.0)
                .map(|(t, p)| (t - p).unsigned_abs() as i64)
                .sum();
            if slack > cells_left as i64 {
                return;
            }
        }
        let idx = stack.len();
        if idx == heights.len() {
            out.push(Tabloid {
                cols: stack.clone(),
                rank,
            });
            return;
        }
        let h = heights[idx];
        for cand in &pool[&h] {
            if symplectic_only && idx > 0 {
                let r_left = &spreads[&stack[idx - 1]].0;
                let l_right = &spreads[cand].1;
                if !r_left.column_le(l_right) {
                    continue;
                }
            }
            let next_partial = partial.checked_add(&cand.content());
            stack.push(cand.clone());
            rec(
                heights,
                pool,
                spreads,
                symplectic_only,
                weight_filter,
                rank,
                stack,
                next_partial,
                cells_left - h as usize,
                out,
            );
            stack.pop();
        }
    }

    rec(
        &heights,
        &pool,
        &spreads,
        symplectic_only,
        weight_filter,
        rank,
        &mut stack,
        Weight::zero(rank),
        shape.num_cells(),
        &mut out,
    );
    if let Some(target) = weight_filter {
        out.retain(|t| t.content() == *target);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(s: &str, n: u8) -> Tabloid {
        parse_tabloid(s, n).unwrap()
    }

    #[test]
    fn t_lambda_rows_are_constant() {
        let shape = Shape::new(vec![1, 1, 2]);
        let t = Tabloid::highest_weight(&shape);
        assert_eq!(t.to_string(), "1,2,3|1,2,3|1,2|1");
        assert!(t.is_symplectic());
        assert_eq!(t.heights(), vec![3, 3, 2, 1]);
    }

    #[test]
    fn reading_reverses_columns() {
        let t = tab("1,2|1", 3);
        let codes: Vec<i8> = t.reading().iter().map(|l| l.code()).collect();
        assert_eq!(codes, vec![1, 1, 2]);
        let single = tab("2b,1b", 2);
        assert_eq!(single.content().0, vec![-1, -1]);
    }

    #[test]
    fn weight_of_t_lambda() {
        let shape = Shape::new(vec![0, 1, 0]);
        let t = Tabloid::highest_weight(&shape);
        assert_eq!(t.content().0, vec![1, 1, 0]);
    }

    #[test]
    fn symplectic_examples() {
        assert!(tab("2,3,3b|2,3b|3", 3).is_symplectic());
        assert!(tab("1,2,3", 3).is_symplectic());
        // non-admissible column inside
        assert!(!tab("2,3,3b,1b|1", 3).is_symplectic());
    }

    #[test]
    fn lex_order_has_t_lambda_minimal() {
        let shape = Shape::new(vec![1, 1, 0]);
        let t_lambda = Tabloid::highest_weight(&shape);
        for t in enumerate_tabloids(3, &shape, None, false) {
            assert!(lex_compare(&t_lambda, &t).unwrap() != Ordering::Greater);
        }
    }

    #[test]
    fn lex_compare_rejects_shape_mismatch() {
        let a = tab("1,2", 3);
        let b = tab("1", 3);
        assert!(lex_compare(&a, &b).is_err());
        assert_eq!(
            lex_compare(&a, &a).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn alphabet_order_drives_reading_comparison() {
        // readings "1 3 ..." vs "1 2b ...": 3 < 2b in C_n
        let a = tab("3,1b|1", 3);
        let b = tab("2b,1b|1", 3);
        assert_eq!(lex_compare(&a, &b).unwrap(), Ordering::Less);
    }

    #[test]
    fn enumerate_fundamental_shapes() {
        // ST(n, Lambda_p) = admissible columns of height p
        for n in 1..=3u8 {
            for p in 1..=n {
                let shape = Shape::fundamental(p, n);
                let st = enumerate_tabloids(n, &shape, None, true);
                let cols = enumerate_columns(n, p, true);
                assert_eq!(st.len(), cols.len());
            }
        }
    }

    #[test]
    fn empty_weight_class_is_empty() {
        let shape = Shape::fundamental(1, 2);
        let w = Weight(vec![5, 5]);
        assert!(enumerate_tabloids(2, &shape, Some(&w), false).is_empty());
    }

    #[test]
    fn twelve_tableaux_in_the_example_class() {
        let shape = Shape::new(vec![1, 1, 2]);
        let class = Weight(vec![0, -3, 0]);
        let st = enumerate_tabloids(3, &shape, Some(&class), true);
        assert_eq!(st.len(), 12);
        for t in &st {
            assert_eq!(t.content(), class);
        }
        for w in st.windows(2) {
            assert!(lex_compare(&w[0], &w[1]).unwrap() == Ordering::Less);
        }
    }
}
