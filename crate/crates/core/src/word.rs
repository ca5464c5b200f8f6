//! Words over `[n]`, the elementary Knuth transformations, and a
//! Knuth-equivalence decision procedure.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::schensted::row_insert;
use crate::tableau::{Letter, Tableau};

/// A finite sequence of positive letters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// Panics on zero letters; letters must be positive.
    pub fn new(letters: Vec<Letter>) -> Self {
        assert!(letters.iter().all(|&x| x >= 1), "letters must be positive");
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest letter, or zero for the empty word.
    pub fn max_letter(&self) -> Letter {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// The prefix `w[k] = (w_1, ..., w_k)`.
    pub fn prefix(&self, k: usize) -> Word {
        Word {
            letters: self.letters[..k].to_vec(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn reversed(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses comma- or space-separated letters, optionally parenthesized.
    fn from_str(s: &str) -> Result<Self, Error> {
        let inner = s.trim();
        let inner = inner.strip_prefix('(').unwrap_or(inner);
        let inner = inner.strip_suffix(')').unwrap_or(inner);
        let mut letters = Vec::new();
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let x: Letter = tok.parse().map_err(|_| Error::Parse {
                line: 1,
                col: 1,
                msg: format!("invalid letter {tok:?}"),
            })?;
            if x == 0 {
                return Err(Error::Parse {
                    line: 1,
                    col: 1,
                    msg: "letters must be positive".into(),
                });
            }
            letters.push(x);
        }
        Ok(Word { letters })
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word::new(letters)
    }
}

/// All words reachable from `w` by one elementary Knuth transformation:
/// K1 `yzx -> yxz` (x < y <= z), K2 `xzy -> zxy` (x <= y < z), or an inverse
/// of either, applied at any position.
pub fn knuth_neighbors(w: &Word) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    let ls = w.letters();
    for i in 0..ls.len().saturating_sub(2) {
        let (a, b, c) = (ls[i], ls[i + 1], ls[i + 2]);
        let mut push = |x: Letter, y: Letter, z: Letter| {
            let mut v = ls.to_vec();
            v[i] = x;
            v[i + 1] = y;
            v[i + 2] = z;
            out.insert(Word::new(v));
        };
        // K1: (y,z,x) -> (y,x,z) when x < y <= z, and its inverse.
        if c < a && a <= b {
            push(a, c, b);
        }
        if b < a && a <= c {
            push(a, c, b);
        }
        // K2: (x,z,y) -> (z,x,y) when x <= y < z, and its inverse.
        if a <= c && c < b {
            push(b, a, c);
        }
        if b <= c && c < a {
            push(b, a, c);
        }
    }
    out
}

/// The full Knuth class of `w` by breadth-first closure.
///
/// Exponential in general; intended as a desk-scale oracle for tests.
pub fn knuth_class(w: &Word) -> BTreeSet<Word> {
    let mut seen = BTreeSet::new();
    let mut queue = vec![w.clone()];
    seen.insert(w.clone());
    while let Some(v) = queue.pop() {
        for u in knuth_neighbors(&v) {
            if seen.insert(u.clone()) {
                queue.push(u);
            }
        }
    }
    seen
}

/// The unique semistandard tableau whose row word is Knuth equivalent to
/// `w`, computed by row-inserting the letters left to right into the empty
/// tableau. Letters must lie in `[1, alphabet]`.
pub fn insertion_tableau(w: &Word, alphabet: usize) -> Tableau {
    let mut t = Tableau::empty(alphabet);
    for &x in w.letters() {
        t = row_insert(&t, x).result;
    }
    t
}

/// Whether `w` and `v` are related by a chain of elementary Knuth
/// transformations, decided by comparing insertion tableaux.
pub fn knuth_equivalent(w: &Word, v: &Word) -> bool {
    let bound = w.max_letter().max(v.max_letter()).max(1);
    insertion_tableau(w, bound) == insertion_tableau(v, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn word(ls: &[usize]) -> Word {
        Word::new(ls.to_vec())
    }

    #[test]
    fn neighbor_examples() {
        let n = knuth_neighbors(&word(&[2, 3, 1]));
        assert_eq!(n, BTreeSet::from([word(&[2, 1, 3])]));
        let n = knuth_neighbors(&word(&[1, 3, 2]));
        assert_eq!(n, BTreeSet::from([word(&[3, 1, 2])]));
        assert!(knuth_neighbors(&word(&[1, 1])).is_empty());
    }

    #[test]
    fn neighbors_are_symmetric() {
        for w in crate::enumerate::words(3, 4, crate::enumerate::WordMode::All) {
            for v in knuth_neighbors(&w) {
                assert!(knuth_neighbors(&v).contains(&w), "{w} -> {v} not reversible");
            }
        }
    }

    #[test]
    fn insertion_tableau_example() {
        let t = insertion_tableau(&word(&[5, 3, 2, 6, 4, 9, 8, 4, 2, 4]), 9);
        let expected = Tableau::new(
            vec![vec![2, 2, 4, 4], vec![3, 4, 8], vec![5, 6], vec![9]],
            9,
        )
        .unwrap();
        assert_eq!(t, expected);
        assert_eq!(insertion_tableau(&Word::empty(), 4), Tableau::empty(4));
    }

    #[test]
    fn insertion_recovers_tableau_from_row_word() {
        for lam in crate::enumerate::partitions(7, 7) {
            for t in crate::enumerate::sst(&lam, 3) {
                assert_eq!(insertion_tableau(&t.row_word(), 3), t);
            }
        }
    }

    #[test]
    fn equivalence_examples() {
        let t = fixtures::punctured_example();
        assert!(knuth_equivalent(&t.row_word(), &t.column_word()));
        assert!(!knuth_equivalent(&word(&[1, 2]), &word(&[2, 1])));
        let w = word(&[3, 1, 2]);
        assert!(knuth_equivalent(&w, &w));
    }

    #[test]
    fn bfs_closure_agrees_with_insertion_tableaux() {
        // Every word of length <= 6 over [4]: the move-closure class equals
        // the insertion-tableau fiber.
        use std::collections::BTreeMap;
        let mut by_tableau: BTreeMap<Tableau, BTreeSet<Word>> = BTreeMap::new();
        for len in 0..=6 {
            for w in crate::enumerate::words(4, len, crate::enumerate::WordMode::All) {
                by_tableau
                    .entry(insertion_tableau(&w, 4))
                    .or_default()
                    .insert(w);
            }
        }
        for (t, class) in &by_tableau {
            let rep = class.iter().next().unwrap();
            assert_eq!(&knuth_class(rep), class, "class of {rep} (tableau {t:?})");
        }
    }

    #[test]
    fn parse_display() {
        assert_eq!("(5,9,6,8)".parse::<Word>().unwrap(), word(&[5, 9, 6, 8]));
        assert_eq!("1 2 3".parse::<Word>().unwrap(), word(&[1, 2, 3]));
        assert_eq!("()".parse::<Word>().unwrap(), Word::empty());
        assert_eq!(word(&[2, 1]).to_string(), "(2,1)");
        assert!("(1,x)".parse::<Word>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn moves_preserve_length_and_content(
                ls in proptest::collection::vec(1usize..=4, 0..=6)
            ) {
                let w = Word::new(ls);
                let mut sorted = w.letters().to_vec();
                sorted.sort_unstable();
                for v in knuth_neighbors(&w) {
                    prop_assert_eq!(v.len(), w.len());
                    let mut vs = v.letters().to_vec();
                    vs.sort_unstable();
                    prop_assert_eq!(&vs, &sorted);
                }
            }

            #[test]
            fn equivalence_is_symmetric_and_reflexive(
                a in proptest::collection::vec(1usize..=3, 0..=5),
                b in proptest::collection::vec(1usize..=3, 0..=5),
            ) {
                let (w, v) = (Word::new(a), Word::new(b));
                prop_assert!(knuth_equivalent(&w, &w));
                prop_assert_eq!(knuth_equivalent(&w, &v), knuth_equivalent(&v, &w));
            }
        }
    }
}
