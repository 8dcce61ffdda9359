//! Weights in content coordinates: `c_i = (#i) - (#ib)` over the letters of
//! a word, column or tabloid.

use crate::letter::Letter;
use std::fmt;

/// An integer weight vector in epsilon-coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(rank: u8) -> Weight {
        Weight(vec![0; rank as usize])
    }

    pub fn rank(&self) -> u8 {
        self.0.len() as u8
    }

    pub fn of_letters<'a>(letters: impl IntoIterator<Item = &'a Letter>, rank: u8) -> Weight {
        let mut w = Weight::zero(rank);
        for l in letters {
            w.add_letter(*l);
        }
        w
    }

    pub fn add_letter(&mut self, l: Letter) {
        let idx = (l.value() - 1) as usize;
        self.0[idx] += if l.is_barred() { -1 } else { 1 };
    }

    /// The simple root `alpha_i` in content coordinates.
    pub fn simple_root(color: u8, rank: u8) -> Weight {
        let mut w = Weight::zero(rank);
        let i = (color - 1) as usize;
        if color == rank {
            w.0[i] = 2;
        } else {
            w.0[i] = 1;
            w.0[i + 1] = -1;
        }
        w
    }

    /// `<h_i, mu>`: `c_i - c_{i+1}` for `i < n` and `c_n` for `i = n`.
    pub fn h_pairing(&self, color: u8) -> i64 {
        let n = self.rank();
        debug_assert!((1..=n).contains(&color));
        let i = (color - 1) as usize;
        if color == n {
            self.0[i] as i64
        } else {
            (self.0[i] - self.0[i + 1]) as i64
        }
    }

    /// Coefficients on the fundamental weights: `m_i = <h_i, mu>`.
    pub fn lambda_coeffs(&self) -> Vec<i64> {
        (1..=self.rank()).map(|i| self.h_pairing(i)).collect()
    }

    pub fn checked_add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn content_of_letters() {
        let n = 3;
        let ls = [Letter::barred(2), Letter::barred(1)];
        assert_eq!(Weight::of_letters(ls.iter(), n).0, vec![-1, -1, 0]);
    }

    #[test]
    fn pairing_conventions() {
        let n = 3;
        let mut w = Weight::zero(n);
        w.add_letter(Letter::unbarred(3));
        assert_eq!(w.h_pairing(3), 1);
        assert_eq!(w.h_pairing(2), -1);
        assert_eq!(Weight::zero(n).lambda_coeffs(), vec![0, 0, 0]);
        // <h_i, alpha_j> reproduces the Cartan pairing for sp_6
        let pair = |i: u8, j: u8| Weight::simple_root(j, n).h_pairing(i);
        assert_eq!(pair(1, 1), 2);
        assert_eq!(pair(2, 3), -2);
        assert_eq!(pair(3, 2), -1);
        assert_eq!(pair(1, 3), 0);
    }
}
