//! Letters of the ordered alphabet `C_n = {1 < ... < n < nb < ... < 1b}`.
//!
//! A barred letter `kb` is encoded as `-k`, an unbarred letter `k` as `k`.
//! Barring a letter is therefore a sign flip, which keeps serialization
//! compact and makes the pair `(z, zb)` easy to detect.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// A single cell value from `C_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i8);

impl Letter {
    /// Builds a letter from its signed code, checking it against the rank.
    pub fn new(code: i8, rank: u8) -> Result<Letter> {
        if code == 0 || code.unsigned_abs() > rank {
            return Err(Error::InvalidLetter { code, rank });
        }
        Ok(Letter(code))
    }

    /// Unbarred letter `k`, `k >= 1`.
    pub fn unbarred(k: u8) -> Letter {
        debug_assert!(k >= 1);
        Letter(k as i8)
    }

    /// Barred letter `kb`, `k >= 1`.
    pub fn barred(k: u8) -> Letter {
        debug_assert!(k >= 1);
        Letter(-(k as i8))
    }

    pub fn code(self) -> i8 {
        self.0
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// The underlying value `k` of `k` or `kb`.
    pub fn value(self) -> u8 {
        self.0.unsigned_abs()
    }

    /// Flips `k <-> kb`.
    pub fn bar_partner(self) -> Letter {
        Letter(-self.0)
    }

    /// The largest letter strictly below `self` in `C_n`; absent for `1`.
    pub fn pred(self, rank: u8) -> Option<Letter> {
        let n = rank;
        match (self.is_barred(), self.value()) {
            (false, 1) => None,
            (false, k) => Some(Letter::unbarred(k - 1)),
            (true, k) if k == n => Some(Letter::unbarred(n)),
            (true, k) => Some(Letter::barred(k + 1)),
        }
    }

    /// The smallest letter strictly above `self` in `C_n`; absent for `1b`.
    pub fn succ(self, rank: u8) -> Option<Letter> {
        let n = rank;
        match (self.is_barred(), self.value()) {
            (true, 1) => None,
            (true, k) => Some(Letter::barred(k - 1)),
            (false, k) if k == n => Some(Letter::barred(n)),
            (false, k) => Some(Letter::unbarred(k + 1)),
        }
    }

    /// All of `C_n` in increasing order.
    pub fn alphabet(rank: u8) -> impl Iterator<Item = Letter> {
        (1..=rank)
            .map(Letter::unbarred)
            .chain((1..=rank).rev().map(Letter::barred))
    }

    /// Position in `C_n`, from 0 for letter `1` to `2n-1` for `1b`.
    pub fn index(self, rank: u8) -> usize {
        if self.is_barred() {
            (2 * rank - self.value()) as usize
        } else {
            (self.value() - 1) as usize
        }
    }
}

// Realizes 1 < 2 < ... < n < nb < ... < 1b. Unbarred letters compare by
// value, barred letters compare by signed code (-n < ... < -1), and every
// unbarred letter is below every barred one. No rank needed.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.is_barred(), self.0).cmp(&(other.is_barred(), other.0))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_barred() {
            write!(f, "{}b", self.value())
        } else {
            write!(f, "{}", self.value())
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"3"` or `"3b"`.
pub fn parse_letter(s: &str, rank: u8) -> Result<Letter> {
    let (digits, barred) = match s.strip_suffix('b') {
        Some(d) => (d, true),
        None => (s, false),
    };
    let k: u8 = digits
        .trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad letter {s:?}")))?;
    let code = if barred { -(k as i8) } else { k as i8 };
    Letter::new(code, rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_one_to_n_then_barred_down() {
        let n = 3;
        let letters: Vec<Letter> = Letter::alphabet(n).collect();
        let codes: Vec<i8> = letters.iter().map(|l| l.code()).collect();
        assert_eq!(codes, vec![1, 2, 3, -3, -2, -1]);
        for w in letters.windows(2) {
            assert!(w[0] < w[1]);
        }
        for (i, l) in letters.iter().enumerate() {
            assert_eq!(l.index(n), i);
        }
    }

    #[test]
    fn pred_matches_order_adjacency() {
        let n = 3;
        assert_eq!(Letter::barred(3).pred(n), Some(Letter::unbarred(3)));
        assert_eq!(Letter::unbarred(3).pred(n), Some(Letter::unbarred(2)));
        assert_eq!(Letter::unbarred(1).pred(n), None);
        assert_eq!(Letter::barred(1).pred(n), Some(Letter::barred(2)));
        // pred and succ are inverse on the whole alphabet
        for l in Letter::alphabet(n) {
            if let Some(p) = l.pred(n) {
                assert_eq!(p.succ(n), Some(l));
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for l in Letter::alphabet(4) {
            assert_eq!(parse_letter(&l.to_string(), 4).unwrap(), l);
        }
        assert!(parse_letter("5", 4).is_err());
        assert!(parse_letter("0", 4).is_err());
        assert!(parse_letter("x", 4).is_err());
    }
}
