//! Punctured tableaux and their hole-free / skew specializations, with the
//! canonical text and JSON formats.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde_json::{json, Value};

use crate::error::Error;
use crate::partition::{Cell, Partition, PuncturedPartition};
use crate::word::Word;

/// Entries of tableaux are letters in `[1, alphabet]`.
pub type Letter = usize;

/// A filling of a punctured partition: each domain cell carries a letter,
/// holes carry nothing.
///
/// The value is the filling itself; the `alphabet` bound is a context
/// annotation (general contexts use `[n]`, symplectic ones `[2n]`) carried for
/// validation and enumeration. It never affects results, so equality,
/// ordering, and hashing deliberately ignore it. Constructors take the bound
/// explicitly; no operation infers it from the entries.
///
/// Entries are stored row-major, `rows[i][j]` holding the cell `(i+1, j+1)`
/// and `None` marking a hole. Out-of-domain cells compare as an infinite
/// sentinel inside the sliding and insertion algorithms; no sentinel value is
/// ever stored.
#[derive(Clone)]
pub struct PuncturedTableau {
    rows: Vec<Vec<Option<Letter>>>,
    alphabet: usize,
}

impl PartialEq for PuncturedTableau {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for PuncturedTableau {}

impl PartialOrd for PuncturedTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PuncturedTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rows.cmp(&other.rows)
    }
}

impl Hash for PuncturedTableau {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl PuncturedTableau {
    /// Builds a punctured tableau from row-major entries (`None` = hole).
    ///
    /// Row lengths must form a partition and entries must lie in
    /// `[1, alphabet]`. The filling need not be semistandard; that is a
    /// separate predicate.
    pub fn new(rows: Vec<Vec<Option<Letter>>>, alphabet: usize) -> Result<Self, Error> {
        if alphabet == 0 {
            return Err(Error::Invalid("alphabet bound must be positive".into()));
        }
        let lengths: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        if !lengths.windows(2).all(|w| w[0] >= w[1]) || lengths.contains(&0) {
            return Err(Error::Invalid(
                "row lengths must be positive and weakly decreasing".into(),
            ));
        }
        for row in &rows {
            for &e in row.iter().flatten() {
                if e == 0 || e > alphabet {
                    return Err(Error::LetterOutOfRange {
                        letter: e,
                        bound: alphabet,
                    });
                }
            }
        }
        Ok(PuncturedTableau { rows, alphabet })
    }

    /// The empty tableau.
    pub fn empty(alphabet: usize) -> Self {
        assert!(alphabet >= 1);
        PuncturedTableau {
            rows: Vec::new(),
            alphabet,
        }
    }

    pub fn rows(&self) -> &[Vec<Option<Letter>>] {
        &self.rows
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    /// Returns a copy annotated with a different alphabet bound.
    pub fn with_alphabet(&self, alphabet: usize) -> Result<Self, Error> {
        Self::new(self.rows.clone(), alphabet)
    }

    pub fn shape(&self) -> PuncturedPartition {
        let parts: Vec<usize> = self.rows.iter().map(|r| r.len()).collect();
        let holes: BTreeSet<Cell> = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter().enumerate().filter_map(move |(j, e)| {
                    e.is_none().then(|| Cell::new(i + 1, j + 1))
                })
            })
            .collect();
        PuncturedPartition::new(Partition::new(parts), holes).expect("holes lie in shape")
    }

    /// The entry at `(row, col)` (1-based); `None` for holes and cells
    /// outside the shape.
    pub fn get(&self, row: usize, col: usize) -> Option<Letter> {
        if row == 0 || col == 0 {
            return None;
        }
        self.rows.get(row - 1)?.get(col - 1).copied().flatten()
    }

    pub fn in_domain(&self, row: usize, col: usize) -> bool {
        self.get(row, col).is_some()
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, v: Option<Letter>) {
        self.rows[row - 1][col - 1] = v;
    }

    /// Number of filled cells.
    pub fn domain_size(&self) -> usize {
        self.rows.iter().map(|r| r.iter().flatten().count()).sum()
    }

    /// Rows weakly increase left to right, columns strictly increase top to
    /// bottom, comparing every same-row / same-column pair of domain cells.
    /// Holes are skipped, which makes consecutive domain cells the binding
    /// comparisons.
    pub fn is_semistandard(&self) -> bool {
        for row in &self.rows {
            let entries: Vec<Letter> = row.iter().copied().flatten().collect();
            if !entries.windows(2).all(|w| w[0] <= w[1]) {
                return false;
            }
        }
        let width = self.rows.first().map_or(0, |r| r.len());
        for j in 0..width {
            let entries: Vec<Letter> = self
                .rows
                .iter()
                .filter_map(|r| r.get(j).copied().flatten())
                .collect();
            if !entries.windows(2).all(|w| w[0] < w[1]) {
                return false;
            }
        }
        true
    }

    /// Row word: rows read left to right, bottom row first.
    pub fn row_word(&self) -> Word {
        let letters: Vec<Letter> = self
            .rows
            .iter()
            .rev()
            .flat_map(|r| r.iter().copied().flatten())
            .collect();
        Word::new(letters)
    }

    /// Column word: columns read bottom to top, leftmost column first.
    pub fn column_word(&self) -> Word {
        let width = self.rows.first().map_or(0, |r| r.len());
        let mut letters = Vec::new();
        for j in 0..width {
            for row in self.rows.iter().rev() {
                if let Some(Some(e)) = row.get(j) {
                    letters.push(*e);
                }
            }
        }
        Word::new(letters)
    }

    /// Reinterprets a tableau whose shape has no slidable holes as a plain
    /// tableau on the normalized partition shape.
    pub fn to_tableau(&self) -> Result<Tableau, Error> {
        let mu = self.shape().as_partition()?;
        let rows: Vec<Vec<Letter>> = (1..=mu.length())
            .map(|i| (1..=mu.part(i)).map(|j| self.get(i, j).unwrap()).collect())
            .collect();
        Ok(Tableau {
            rows,
            alphabet: self.alphabet,
        })
    }

    /// Reinterprets a tableau whose shape has no reversely slidable holes as
    /// a skew tableau, normalizing the hole set to the inner diagram.
    pub fn to_skew(&self) -> Result<SkewTableau, Error> {
        let skew = self.shape().as_skew()?;
        let outer = skew.outer().clone();
        let inner = skew.inner().clone();
        let rows: Vec<Vec<Option<Letter>>> = (1..=outer.length())
            .map(|i| {
                (1..=outer.part(i))
                    .map(|j| {
                        if inner.has_cell(i, j) {
                            None
                        } else {
                            Some(self.get(i, j).expect("domain matches skew diagram"))
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(SkewTableau(PuncturedTableau {
            rows,
            alphabet: self.alphabet,
        }))
    }

    /// Parses the canonical text format: newline-separated rows, single
    /// space-separated entries, `o` (case-insensitive) marking a hole. The
    /// empty string is the empty tableau.
    pub fn parse(text: &str, alphabet: usize) -> Result<Self, Error> {
        let mut rows = Vec::new();
        for (li, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for (ti, tok) in line.split_whitespace().enumerate() {
                if tok.eq_ignore_ascii_case("o") {
                    row.push(None);
                } else {
                    let e: Letter = tok.parse().map_err(|_| Error::Parse {
                        line: li + 1,
                        col: ti + 1,
                        msg: format!("expected an entry or 'o', found {tok:?}"),
                    })?;
                    row.push(Some(e));
                }
            }
            rows.push(row);
        }
        Self::new(rows, alphabet).map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::Parse {
                line: 1,
                col: 1,
                msg: other.to_string(),
            },
        })
    }

    /// Renders the canonical text format (inverse of [`Self::parse`]).
    pub fn render(&self) -> String {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        Some(v) => v.to_string(),
                        None => "o".to_string(),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// JSON form `{"rows": [[cell, ...], ...]}` with `"hole"` for holes.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|e| match e {
                            Some(v) => json!(v),
                            None => json!("hole"),
                        })
                        .collect(),
                )
            })
            .collect();
        json!({ "rows": rows })
    }

    pub fn from_json(v: &Value, alphabet: usize) -> Result<Self, Error> {
        let rows = v
            .get("rows")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse {
                line: 1,
                col: 1,
                msg: "expected an object with a \"rows\" array".into(),
            })?;
        let mut out = Vec::new();
        for row in rows {
            let row = row.as_array().ok_or_else(|| Error::Parse {
                line: 1,
                col: 1,
                msg: "rows must be arrays".into(),
            })?;
            let mut cells = Vec::new();
            for cell in row {
                match cell {
                    Value::Number(n) if n.as_u64().is_some() => {
                        cells.push(Some(n.as_u64().unwrap() as usize));
                    }
                    Value::String(s) if s == "hole" => cells.push(None),
                    other => {
                        return Err(Error::Parse {
                            line: 1,
                            col: 1,
                            msg: format!("cell must be a positive integer or \"hole\", found {other}"),
                        })
                    }
                }
            }
            out.push(cells);
        }
        Self::new(out, alphabet)
    }
}

impl fmt::Display for PuncturedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for PuncturedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            write!(f, "[empty]")
        } else {
            write!(f, "[{}]", self.render().replace('\n', " | "))
        }
    }
}

/// A hole-free semistandard-candidate tableau of partition shape.
///
/// Same identity convention as [`PuncturedTableau`]: the alphabet annotation
/// is ignored by comparisons.
#[derive(Clone)]
pub struct Tableau {
    rows: Vec<Vec<Letter>>,
    alphabet: usize,
}

impl PartialEq for Tableau {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for Tableau {}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rows.cmp(&other.rows)
    }
}

impl Hash for Tableau {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl Tableau {
    pub fn new(rows: Vec<Vec<Letter>>, alphabet: usize) -> Result<Self, Error> {
        let punctured: Vec<Vec<Option<Letter>>> = rows
            .iter()
            .map(|r| r.iter().map(|&e| Some(e)).collect())
            .collect();
        PuncturedTableau::new(punctured, alphabet)?;
        Ok(Tableau { rows, alphabet })
    }

    pub fn empty(alphabet: usize) -> Self {
        assert!(alphabet >= 1);
        Tableau {
            rows: Vec::new(),
            alphabet,
        }
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn with_alphabet(&self, alphabet: usize) -> Result<Self, Error> {
        Self::new(self.rows.clone(), alphabet)
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Letter> {
        if row == 0 || col == 0 {
            return None;
        }
        self.rows.get(row - 1)?.get(col - 1).copied()
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, v: Letter) {
        self.rows[row - 1][col - 1] = v;
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<Letter>> {
        &mut self.rows
    }

    pub fn is_semistandard(&self) -> bool {
        self.to_punctured().is_semistandard()
    }

    /// King's condition: the first-column entry of row `i` is at least
    /// `2i - 1`. Assumes a semistandard filling.
    pub fn is_symplectic(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, row)| row.first().map_or(true, |&e| e >= 2 * (i + 1) - 1))
    }

    pub fn row_word(&self) -> Word {
        Word::new(self.rows.iter().rev().flatten().copied().collect())
    }

    pub fn column_word(&self) -> Word {
        self.to_punctured().column_word()
    }

    /// Places `x` in the new box `(r, shape_r + 1)`; errors if `r` is not
    /// addable or the result is not semistandard.
    pub fn add_box(&self, r: usize, x: Letter) -> Result<Tableau, Error> {
        if !self.shape().is_addable_row(r) {
            return Err(Error::NotAddable { row: r });
        }
        if x == 0 || x > self.alphabet {
            return Err(Error::LetterOutOfRange {
                letter: x,
                bound: self.alphabet,
            });
        }
        let mut rows = self.rows.clone();
        if r == rows.len() + 1 {
            rows.push(vec![x]);
        } else {
            rows[r - 1].push(x);
        }
        let out = Tableau {
            rows,
            alphabet: self.alphabet,
        };
        if !out.is_semistandard() {
            return Err(Error::NotSemistandard);
        }
        Ok(out)
    }

    pub fn to_punctured(&self) -> PuncturedTableau {
        PuncturedTableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&e| Some(e)).collect())
                .collect(),
            alphabet: self.alphabet,
        }
    }

    pub fn parse(text: &str, alphabet: usize) -> Result<Self, Error> {
        let p = PuncturedTableau::parse(text, alphabet)?;
        p.to_tableau().map_err(|_| Error::Parse {
            line: 1,
            col: 1,
            msg: "tableau contains holes".into(),
        })
    }

    pub fn render(&self) -> String {
        self.to_punctured().render()
    }

    pub fn to_json(&self) -> Value {
        self.to_punctured().to_json()
    }

    pub fn from_json(v: &Value, alphabet: usize) -> Result<Self, Error> {
        let p = PuncturedTableau::from_json(v, alphabet)?;
        p.to_tableau().map_err(|_| Error::Parse {
            line: 1,
            col: 1,
            msg: "tableau contains holes".into(),
        })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            write!(f, "[empty]")
        } else {
            write!(f, "[{}]", self.render().replace('\n', " | "))
        }
    }
}

/// A skew tableau: a punctured tableau whose holes form the diagram of the
/// inner partition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewTableau(PuncturedTableau);

impl SkewTableau {
    /// Wraps a punctured tableau after checking its holes form an inner
    /// partition diagram.
    pub fn new(tab: PuncturedTableau) -> Result<Self, Error> {
        tab.to_skew()
    }

    /// The skew tableau of shape `outer/outer` (entirely holes).
    pub fn empty_of_shape(outer: &Partition, alphabet: usize) -> Self {
        let rows = (1..=outer.length())
            .map(|i| vec![None; outer.part(i)])
            .collect();
        SkewTableau(PuncturedTableau { rows, alphabet })
    }

    pub fn as_punctured(&self) -> &PuncturedTableau {
        &self.0
    }

    pub fn into_punctured(self) -> PuncturedTableau {
        self.0
    }

    pub fn outer(&self) -> Partition {
        self.0.shape().shape().clone()
    }

    pub fn inner(&self) -> Partition {
        self.0
            .shape()
            .as_skew()
            .expect("invariant: holes form an inner diagram")
            .inner()
            .clone()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Letter> {
        self.0.get(row, col)
    }

    pub fn render(&self) -> String {
        self.0.render()
    }

    pub fn to_json(&self) -> Value {
        self.0.to_json()
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.render())
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn punctured_example_is_semistandard() {
        let t = fixtures::punctured_example();
        assert!(t.is_semistandard());
        assert!(PuncturedTableau::empty(4).is_semistandard());
        let bad = Tableau::new(vec![vec![1, 1], vec![1]], 4).unwrap();
        assert!(!bad.is_semistandard());
    }

    #[test]
    fn semistandard_checks_across_holes() {
        // Non-adjacent same-row pair 3 > 2 must be caught.
        let t = PuncturedTableau::new(vec![vec![Some(3), None, Some(2)]], 4).unwrap();
        assert!(!t.is_semistandard());
        let t = PuncturedTableau::new(
            vec![vec![Some(2)], vec![None], vec![Some(2)]],
            4,
        )
        .unwrap();
        assert!(!t.is_semistandard());
    }

    #[test]
    fn symplectic_examples() {
        let t = fixtures::berele_input_example();
        assert!(t.is_symplectic());
        let t = Tableau::new(
            vec![
                vec![1, 1, 2, 2, 3],
                vec![3, 3, 3, 8],
                vec![4, 6, 8],
                vec![6, 8, 9],
                vec![8],
                vec![9],
            ],
            10,
        )
        .unwrap();
        assert!(!t.is_symplectic()); // row 3 starts with 4 < 5
        assert!(Tableau::empty(4).is_symplectic());
    }

    #[test]
    fn reading_words() {
        let t = fixtures::punctured_example();
        assert_eq!(t.row_word().letters(), &[5, 9, 6, 8, 3, 4, 4, 2, 2, 4]);
        assert_eq!(t.column_word().letters(), &[5, 3, 2, 6, 4, 9, 8, 4, 2, 4]);
        assert!(PuncturedTableau::empty(3).row_word().is_empty());
    }

    #[test]
    fn row_word_length_matches_size() {
        for lam in crate::enumerate::partitions(4, 4) {
            for t in crate::enumerate::sst(&lam, 3) {
                assert_eq!(t.row_word().len(), t.size());
            }
        }
    }

    #[test]
    fn add_box_examples() {
        let t = Tableau::new(vec![vec![1]], 4).unwrap();
        assert_eq!(
            t.add_box(2, 2).unwrap(),
            Tableau::new(vec![vec![1], vec![2]], 4).unwrap()
        );
        assert!(matches!(t.add_box(2, 1), Err(Error::NotSemistandard)));

        let t = fixtures::berele_input_example();
        // 9 below the existing 9 breaks column strictness
        assert!(matches!(t.add_box(6, 9), Err(Error::NotSemistandard)));
        let grown = t.add_box(6, 10).unwrap();
        assert_eq!(grown.shape(), Partition::new(vec![5, 4, 3, 3, 1, 1]));
        assert_eq!(grown.get(6, 1), Some(10));
    }

    #[test]
    fn parse_render_fixed_points() {
        let t = PuncturedTableau::parse("1 1 2\n3 4", 4).unwrap();
        assert_eq!(
            t,
            Tableau::new(vec![vec![1, 1, 2], vec![3, 4]], 4)
                .unwrap()
                .to_punctured()
        );
        assert_eq!(t.render(), "1 1 2\n3 4");

        let ex = fixtures::punctured_example();
        let text = "2 o o 2 4\n3 4 4 o\no 6 8\no o 9\n5";
        assert_eq!(PuncturedTableau::parse(text, 9).unwrap(), ex);
        assert_eq!(ex.render(), text);

        assert_eq!(PuncturedTableau::parse("", 4).unwrap(), PuncturedTableau::empty(4));
        assert_eq!(PuncturedTableau::empty(4).render(), "");

        assert!(PuncturedTableau::parse("1 x", 4).is_err());
        assert!(PuncturedTableau::parse("1\n2 2", 4).is_err());
    }

    #[test]
    fn json_round_trip() {
        let ex = fixtures::punctured_example();
        let v = ex.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"rows":[[2,"hole","hole",2,4],[3,4,4,"hole"],["hole",6,8],["hole","hole",9],[5]]}"#
        );
        assert_eq!(PuncturedTableau::from_json(&v, 9).unwrap(), ex);
    }

    #[test]
    fn normalization_views() {
        // No slidable holes: trailing holes are trimmed by to_tableau.
        let t = PuncturedTableau::new(
            vec![vec![Some(1), Some(2), None], vec![Some(2), None]],
            4,
        )
        .unwrap();
        let plain = t.to_tableau().unwrap();
        assert_eq!(plain.rows(), &[vec![1, 2], vec![2]]);

        let t = PuncturedTableau::new(vec![vec![None, Some(1)], vec![Some(2)]], 4).unwrap();
        let skew = t.to_skew().unwrap();
        assert_eq!(skew.outer(), Partition::new(vec![2, 1]));
        assert_eq!(skew.inner(), Partition::new(vec![1]));
    }

    #[test]
    fn single_row_symplectic_iff_semistandard() {
        for t in crate::enumerate::sst(&Partition::new(vec![3]), 4) {
            assert!(t.is_symplectic());
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        /// Any shape, any holes, any in-range entries; not necessarily
        /// semistandard.
        fn arb_punctured() -> impl Strategy<Value = PuncturedTableau> {
            (1usize..=4, proptest::collection::vec(1usize..=5, 1..=4)).prop_flat_map(
                |(alphabet, mut lens)| {
                    lens.sort_unstable_by(|a, b| b.cmp(a));
                    let rows: Vec<_> = lens
                        .into_iter()
                        .map(|l| {
                            proptest::collection::vec(
                                proptest::option::weighted(0.8, 1..=alphabet),
                                l..=l,
                            )
                        })
                        .collect();
                    rows.prop_map(move |rows| PuncturedTableau::new(rows, alphabet).unwrap())
                },
            )
        }

        proptest! {
            #[test]
            fn parse_render_round_trip(t in arb_punctured()) {
                let text = t.render();
                prop_assert_eq!(PuncturedTableau::parse(&text, t.alphabet()).unwrap(), t);
            }

            #[test]
            fn json_round_trip(t in arb_punctured()) {
                let v = t.to_json();
                prop_assert_eq!(PuncturedTableau::from_json(&v, t.alphabet()).unwrap(), t);
            }

            #[test]
            fn hole_insertion_preserves_semistandardness(
                t in arb_punctured(),
                pick in proptest::sample::select((0usize..16).collect::<Vec<_>>()),
            ) {
                prop_assume!(t.is_semistandard());
                let cells = t.shape().domain();
                prop_assume!(!cells.is_empty());
                let cell = cells[pick % cells.len()];
                let mut punched = t.clone();
                punched.set(cell.row, cell.col, None);
                prop_assert!(punched.is_semistandard());
            }
        }
    }
}
