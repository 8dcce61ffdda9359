//! Words over `C_n` and the Kashiwara operators computed by the signature
//! rule: encode the letters relevant to a color `i` as `+` and `-`, cancel
//! `+-` factors, and act on the survivors.

use crate::letter::Letter;
use crate::tabloid::Tabloid;
use crate::weight::Weight;
use std::collections::HashMap;
use std::fmt;

/// A word on the alphabet `C_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
    rank: u8,
}

impl Word {
    pub fn new(letters: Vec<Letter>, rank: u8) -> Word {
        debug_assert!(letters.iter().all(|l| l.value() <= rank));
        Word { letters, rank }
    }

    pub fn from_tabloid(t: &Tabloid) -> Word {
        Word {
            letters: t.reading(),
            rank: t.rank(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn content(&self) -> Weight {
        Weight::of_letters(self.letters.iter(), self.rank)
    }
}

/// The `+`/`-` encoding of one letter for color `i`, if any.
fn sign_of(l: Letter, color: u8, rank: u8) -> Option<bool> {
    // true = '+', false = '-'
    if color == rank {
        if l == Letter::unbarred(rank) {
            return Some(true);
        }
        if l == Letter::barred(rank) {
            return Some(false);
        }
        return None;
    }
    if l == Letter::unbarred(color) || l == Letter::barred(color + 1) {
        Some(true)
    } else if l == Letter::unbarred(color + 1) || l == Letter::barred(color) {
        Some(false)
    } else {
        None
    }
}

/// Positions (in the original word) of the symbols surviving `+-`
/// cancellation. The survivors always form the pattern `-^r +^s`; the first
/// vector holds the `-` positions, the second the `+` positions.
///
/// A single left-to-right stack pass computes the same fixed point as
/// repeated deletion of adjacent `+-` factors.
pub fn signature_reduce(w: &Word, color: u8) -> (Vec<usize>, Vec<usize>) {
    let mut plus: Vec<usize> = Vec::new();
    let mut minus: Vec<usize> = Vec::new();
    for (pos, &l) in w.letters.iter().enumerate() {
        match sign_of(l, color, w.rank) {
            Some(true) => plus.push(pos),
            Some(false) => {
                if plus.pop().is_none() {
                    minus.push(pos);
                }
            }
            None => {}
        }
    }
    (minus, plus)
}

fn apply_plus_to_minus(l: Letter, color: u8, rank: u8) -> Letter {
    if color == rank {
        debug_assert_eq!(l, Letter::unbarred(rank));
        Letter::barred(rank)
    } else if l == Letter::unbarred(color) {
        Letter::unbarred(color + 1)
    } else {
        debug_assert_eq!(l, Letter::barred(color + 1));
        Letter::barred(color)
    }
}

fn apply_minus_to_plus(l: Letter, color: u8, rank: u8) -> Letter {
    if color == rank {
        debug_assert_eq!(l, Letter::barred(rank));
        Letter::unbarred(rank)
    } else if l == Letter::unbarred(color + 1) {
        Letter::unbarred(color)
    } else {
        debug_assert_eq!(l, Letter::barred(color));
        Letter::barred(color + 1)
    }
}

/// `f~_i`: changes the leftmost surviving `+` into its `-` partner;
/// absent when no `+` survives.
pub fn f_tilde(w: &Word, color: u8) -> Option<Word> {
    let (_, plus) = signature_reduce(w, color);
    let pos = *plus.first()?;
    let mut letters = w.letters.clone();
    letters[pos] = apply_plus_to_minus(letters[pos], color, w.rank);
    Some(Word {
        letters,
        rank: w.rank,
    })
}

/// `e~_i`: changes the rightmost surviving `-` into its `+` partner;
/// absent when no `-` survives.
pub fn e_tilde(w: &Word, color: u8) -> Option<Word> {
    let (minus, _) = signature_reduce(w, color);
    let pos = *minus.last()?;
    let mut letters = w.letters.clone();
    letters[pos] = apply_minus_to_plus(letters[pos], color, w.rank);
    Some(Word {
        letters,
        rank: w.rank,
    })
}

/// `eps_i = max{k : e~_i^k != 0}`, read off as the number of surviving `-`.
pub fn epsilon(w: &Word, color: u8) -> usize {
    signature_reduce(w, color).0.len()
}

/// `phi_i = max{k : f~_i^k != 0}`, the number of surviving `+`.
pub fn phi(w: &Word, color: u8) -> usize {
    signature_reduce(w, color).1.len()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite crystal graph: vertices are words, an arrow `(a, i, b)` means
/// `f~_i(a) = b`.
pub struct CrystalGraph {
    pub vertices: Vec<Word>,
    pub arrows: Vec<(usize, u8, usize)>,
}

/// BFS closure of a seed word under all `f~_i` and `e~_i`.
pub fn connected_component(seed: &Word, rank: u8) -> CrystalGraph {
    let mut index: HashMap<Word, usize> = HashMap::new();
    let mut vertices: Vec<Word> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    index.insert(seed.clone(), 0);
    vertices.push(seed.clone());
    queue.push(0);
    while let Some(v) = queue.pop() {
        let w = vertices[v].clone();
        for i in 1..=rank {
            for next in [f_tilde(&w, i), e_tilde(&w, i)].into_iter().flatten() {
                if !index.contains_key(&next) {
                    let id = vertices.len();
                    index.insert(next.clone(), id);
                    vertices.push(next);
                    queue.push(id);
                }
            }
        }
    }
    // Determinism: sort vertices, then record arrows.
    vertices.sort();
    let index: HashMap<Word, usize> = vertices
        .iter()
        .enumerate()
        .map(|(k, w)| (w.clone(), k))
        .collect();
    let mut arrows = Vec::new();
    for (src, w) in vertices.iter().enumerate() {
        for i in 1..=rank {
            if let Some(next) = f_tilde(w, i) {
                arrows.push((src, i, index[&next]));
            }
        }
    }
    CrystalGraph { vertices, arrows }
}

impl CrystalGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
        for (k, w) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{k} [label=\"{w}\"];\n"));
        }
        for &(a, i, b) in &self.arrows {
            out.push_str(&format!("  v{a} -> v{b} [label=\"{i}\"];\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "arrows": self.arrows.iter().map(|&(a, i, b)| serde_json::json!([a, i, b])).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::parse_letter;
    use crate::tabloid::{enumerate_tabloids, Shape};

    fn word(s: &str, n: u8) -> Word {
        if s.is_empty() {
            return Word::new(vec![], n);
        }
        Word::new(
            s.split(',').map(|t| parse_letter(t, n).unwrap()).collect(),
            n,
        )
    }

    #[test]
    fn plus_minus_factor_cancels() {
        let w = word("1,2", 3); // i (i+1) for i = 1
        let (minus, plus) = signature_reduce(&w, 1);
        assert!(minus.is_empty() && plus.is_empty());
        assert!(f_tilde(&w, 1).is_none());
        assert!(e_tilde(&w, 1).is_none());
    }

    #[test]
    fn single_letter_signature() {
        let w = word("1", 3);
        let (minus, plus) = signature_reduce(&w, 1);
        assert_eq!((minus.len(), plus.len()), (0, 1));
        assert_eq!(f_tilde(&w, 1).unwrap(), word("2", 3));
    }

    #[test]
    fn color_n_signature() {
        let n = 3;
        let w = word("3b,3", n);
        let (minus, plus) = signature_reduce(&w, n);
        assert_eq!((minus.len(), plus.len()), (1, 1));
        assert_eq!(f_tilde(&word("3", n), n).unwrap(), word("3b", n));
        assert_eq!(e_tilde(&word("3b", n), n).unwrap(), word("3", n));
    }

    #[test]
    fn highest_weight_reading_is_killed_by_e() {
        let shape = Shape::new(vec![1, 1, 2]);
        let w = Word::from_tabloid(&Tabloid::highest_weight(&shape));
        for i in 1..=3 {
            assert!(e_tilde(&w, i).is_none());
            assert_eq!(epsilon(&w, i), 0);
        }
    }

    #[test]
    fn marsh_example_chain() {
        // w(2b,1b) -> e2 -> w(3b,1b) -> e3 -> w(3,1b) -> e2 -> w(2,1b)
        //   -> e1^2 -> w(1,2b) -> e2 -> w(1,3b) -> e3 -> w(1,3) -> e2 -> w(1,2)
        let n = 3;
        let mut w = word("2b,1b", n);
        let steps: [(u8, usize); 7] =
            [(2, 1), (3, 1), (2, 1), (1, 2), (2, 1), (3, 1), (2, 1)];
        let expected = [
            "3b,1b", "3,1b", "2,1b", "1,2b", "1,3b", "1,3", "1,2",
        ];
        for ((i, m), exp) in steps.iter().zip(expected) {
            for _ in 0..*m {
                w = e_tilde(&w, *i).unwrap();
            }
            assert_eq!(w, word(exp, n));
        }
    }

    #[test]
    fn tilde_operators_are_mutually_inverse() {
        let n = 3;
        for t in enumerate_tabloids(n, &Shape::new(vec![1, 1, 0]), None, false) {
            let w = Word::from_tabloid(&t);
            for i in 1..=n {
                if let Some(fw) = f_tilde(&w, i) {
                    assert_eq!(e_tilde(&fw, i).unwrap(), w);
                }
                if let Some(ew) = e_tilde(&w, i) {
                    assert_eq!(f_tilde(&ew, i).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn epsilon_equals_iterated_e_tilde() {
        let n = 3;
        for t in enumerate_tabloids(n, &Shape::new(vec![0, 1, 1]), None, false) {
            let w = Word::from_tabloid(&t);
            for i in 1..=n {
                let mut count = 0;
                let mut cur = w.clone();
                while let Some(next) = e_tilde(&cur, i) {
                    cur = next;
                    count += 1;
                }
                assert_eq!(epsilon(&w, i), count);
                let mut count = 0;
                let mut cur = w.clone();
                while let Some(next) = f_tilde(&cur, i) {
                    cur = next;
                    count += 1;
                }
                assert_eq!(phi(&w, i), count);
            }
        }
    }

    #[test]
    fn weight_shifts_by_simple_roots() {
        let n = 3;
        for t in enumerate_tabloids(n, &Shape::new(vec![1, 0, 1]), None, false) {
            let w = Word::from_tabloid(&t);
            for i in 1..=n {
                if let Some(fw) = f_tilde(&w, i) {
                    assert_eq!(
                        fw.content(),
                        w.content().checked_sub(&Weight::simple_root(i, n))
                    );
                }
            }
        }
    }

    #[test]
    fn lambda_coefficients_equal_phi_minus_epsilon() {
        let n = 3;
        for t in enumerate_tabloids(n, &Shape::new(vec![0, 0, 1]), None, false) {
            let w = Word::from_tabloid(&t);
            let coeffs = w.content().lambda_coeffs();
            for i in 1..=n {
                assert_eq!(
                    coeffs[(i - 1) as usize],
                    phi(&w, i) as i64 - epsilon(&w, i) as i64
                );
            }
        }
    }

    #[test]
    fn vector_representation_component_is_a_chain() {
        let n = 3;
        let g = connected_component(&word("1", n), n);
        assert_eq!(g.vertices.len(), 2 * n as usize);
        assert_eq!(g.arrows.len(), 2 * n as usize - 1);
        // chain colors 1, 2, ..., n, ..., 2, 1
        let mut w = word("1", n);
        for i in [1, 2, 3, 2, 1u8] {
            w = f_tilde(&w, i).unwrap();
        }
        assert_eq!(w, word("1b", n));
        assert!((1..=n).all(|i| f_tilde(&w, i).is_none()));
    }

    #[test]
    fn fundamental_components_match_admissible_columns() {
        use crate::column::enumerate_columns;
        for n in 1..=3u8 {
            for p in 1..=n {
                let seed = Word::from_tabloid(&Tabloid::single(
                    crate::column::Column::highest_weight(p, n),
                ));
                let g = connected_component(&seed, n);
                assert_eq!(g.vertices.len(), enumerate_columns(n, p, true).len());
            }
        }
    }

    #[test]
    fn general_components_match_symplectic_tableaux() {
        for (n, lambda) in [(2u8, vec![1, 1]), (3, vec![1, 1, 0]), (3, vec![0, 1, 1])] {
            let shape = Shape::new(lambda);
            let seed = Word::from_tabloid(&Tabloid::highest_weight(&shape));
            let g = connected_component(&seed, n);
            let st = enumerate_tabloids(n, &shape, None, true);
            assert_eq!(g.vertices.len(), st.len());
            // vertex set = readings of ST
            let readings: std::collections::HashSet<Word> =
                st.iter().map(Word::from_tabloid).collect();
            assert!(g.vertices.iter().all(|w| readings.contains(w)));
        }
    }

    #[test]
    fn dot_export_mentions_every_vertex() {
        let g = connected_component(&word("1", 2), 2);
        let dot = g.to_dot();
        assert!(dot.contains("digraph"));
        assert_eq!(dot.matches("label=").count(), g.vertices.len() + g.arrows.len());
    }
}
