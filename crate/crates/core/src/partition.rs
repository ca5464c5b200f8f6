//! Partitions, skew partitions, and punctured partitions (partitions with holes).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A box position in a Young diagram, 1-based.
///
/// The derived order is the lexicographic order: `(i,j) <= (k,l)` iff
/// `i < k`, or `i == k` and `j <= l`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A partition: a weakly decreasing finite sequence of positive integers.
///
/// Trailing zeros are never stored, so `()` is the unique empty partition.
/// Virtual part access is provided by [`Partition::part`]: `part(i) = 0` for
/// `i` beyond the length. The virtual part `part(0) = infinity` is never
/// materialized; comparisons against it are folded into the operations that
/// need them (row 1 is always addable, for example).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Creates a partition from weakly decreasing positive parts.
    ///
    /// Panics if the parts are not weakly decreasing or contain a zero.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        assert!(
            parts.last().map_or(true, |&p| p > 0),
            "partition parts must be positive"
        );
        Partition { parts }
    }

    /// The empty partition `()`.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Sum of parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (1-based); zero beyond the length.
    ///
    /// Panics on `i = 0`: the virtual part `part(0) = infinity` is a
    /// comparison rule, not a value.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "part(0) is the infinite sentinel, never a value");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Whether the box `(row, col)` lies in the Young diagram.
    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row)
    }

    /// All cells of the Young diagram in lexicographic order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push(Cell::new(i + 1, j));
            }
        }
        out
    }

    /// Rows `r` with `part(r) < part(r-1)`, ascending. Row `length()+1` is
    /// always addable, so the list is never empty.
    pub fn addable_rows(&self) -> Vec<usize> {
        let mut rows = Vec::new();
        for r in 1..=self.length() + 1 {
            if self.is_addable_row(r) {
                rows.push(r);
            }
        }
        rows
    }

    pub fn is_addable_row(&self, r: usize) -> bool {
        // part(0) = infinity, so row 1 is always addable.
        r >= 1 && r <= self.length() + 1 && (r == 1 || self.part(r) < self.part(r - 1))
    }

    /// Rows `r` with `part(r) > part(r+1)`, ascending.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.length()).filter(|&r| self.is_removable_row(r)).collect()
    }

    pub fn is_removable_row(&self, r: usize) -> bool {
        r >= 1 && self.part(r) > self.part(r + 1)
    }

    /// Increments part `r`; errors unless `r` is an addable row.
    pub fn add_row(&self, r: usize) -> Result<Partition, Error> {
        if !self.is_addable_row(r) {
            return Err(Error::NotAddable { row: r });
        }
        let mut parts = self.parts.clone();
        if r == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// Decrements part `r`; errors unless `r` is a removable row.
    pub fn remove_row(&self, r: usize) -> Result<Partition, Error> {
        if !self.is_removable_row(r) {
            return Err(Error::NotRemovable { row: r });
        }
        let mut parts = self.parts.clone();
        parts[r - 1] -= 1;
        if parts[r - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Containment of Young diagrams: `self_i <= other_i` for all `i`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p <= other.part(i + 1))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `(5,4,3,3,1)`; the empty partition is `()`. Parentheses are
    /// optional, whitespace around parts is ignored.
    fn from_str(s: &str) -> Result<Self, Error> {
        let inner = s.trim();
        let inner = inner.strip_prefix('(').unwrap_or(inner);
        let inner = inner.strip_suffix(')').unwrap_or(inner);
        let inner = inner.trim();
        let mut parts = Vec::new();
        if !inner.is_empty() {
            for piece in inner.split(',') {
                let p: usize = piece.trim().parse().map_err(|_| Error::Parse {
                    line: 1,
                    col: 1,
                    msg: format!("invalid partition part {piece:?}"),
                })?;
                parts.push(p);
            }
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) || parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse {
                line: 1,
                col: 1,
                msg: format!("{s:?} is not weakly decreasing with positive parts"),
            });
        }
        Ok(Partition { parts })
    }
}

impl From<Vec<usize>> for Partition {
    fn from(parts: Vec<usize>) -> Self {
        Partition::new(parts)
    }
}

/// A skew partition `outer/inner` with `inner` contained in `outer`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SkewPartition {
    outer: Partition,
    inner: Partition,
}

impl SkewPartition {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if !inner.contained_in(&outer) {
            return Err(Error::Invalid(format!(
                "inner {inner} is not contained in outer {outer}"
            )));
        }
        Ok(SkewPartition { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        self.outer.has_cell(row, col) && !self.inner.has_cell(row, col)
    }

    /// At most one box in each column: `inner_i >= outer_{i+1}` for all rows.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..=self.outer.length()).all(|i| self.inner.part(i) >= self.outer.part(i + 1))
    }

    /// At most one box in each row: `inner_i >= outer_i - 1` for all rows.
    pub fn is_vertical_strip(&self) -> bool {
        (1..=self.outer.length()).all(|i| self.inner.part(i) + 1 >= self.outer.part(i))
    }
}

impl fmt::Display for SkewPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A punctured partition `(shape, holes)`: a partition together with a set of
/// removed boxes. Its diagram is `D(shape) \ holes`.
///
/// Holes are kept in a sorted set, so "first" and "latest" hole queries are
/// deterministic in the lexicographic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PuncturedPartition {
    shape: Partition,
    holes: BTreeSet<Cell>,
}

impl PuncturedPartition {
    pub fn new(shape: Partition, holes: BTreeSet<Cell>) -> Result<Self, Error> {
        for h in &holes {
            if !shape.has_cell(h.row, h.col) {
                return Err(Error::Invalid(format!("hole {h} lies outside {shape}")));
            }
        }
        Ok(PuncturedPartition { shape, holes })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn holes(&self) -> &BTreeSet<Cell> {
        &self.holes
    }

    /// Whether `(row, col)` is in the diagram, i.e. inside the shape and not
    /// a hole.
    pub fn in_domain(&self, row: usize, col: usize) -> bool {
        self.shape.has_cell(row, col) && !self.holes.contains(&Cell::new(row, col))
    }

    /// Domain cells in lexicographic order.
    pub fn domain(&self) -> Vec<Cell> {
        self.shape
            .cells()
            .into_iter()
            .filter(|c| !self.holes.contains(c))
            .collect()
    }

    pub fn is_slidable(&self, hole: Cell) -> bool {
        self.holes.contains(&hole)
            && (self.in_domain(hole.row, hole.col + 1) || self.in_domain(hole.row + 1, hole.col))
    }

    pub fn is_reversely_slidable(&self, hole: Cell) -> bool {
        self.holes.contains(&hole)
            && (hole.col > 1 && self.in_domain(hole.row, hole.col - 1)
                || hole.row > 1 && self.in_domain(hole.row - 1, hole.col))
    }

    /// Holes with a domain cell to the right or below, in lexicographic order.
    pub fn slidable_holes(&self) -> Vec<Cell> {
        self.holes.iter().copied().filter(|&h| self.is_slidable(h)).collect()
    }

    /// Holes with a domain cell to the left or above, in lexicographic order.
    pub fn reversely_slidable_holes(&self) -> Vec<Cell> {
        self.holes
            .iter()
            .copied()
            .filter(|&h| self.is_reversely_slidable(h))
            .collect()
    }

    /// When there are no slidable holes the domain is itself the diagram of a
    /// partition; returns it.
    pub fn as_partition(&self) -> Result<Partition, Error> {
        if let Some(&h) = self.slidable_holes().first() {
            return Err(Error::HasSlidableHole { cell: h });
        }
        // mu_i = number of leading domain cells in row i.
        let mut parts = Vec::new();
        for i in 1..=self.shape.length() {
            let mut mu = 0;
            while self.in_domain(i, mu + 1) {
                mu += 1;
            }
            parts.push(mu);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let mu = Partition::new(parts);
        debug_assert_eq!(self.domain(), mu.cells());
        Ok(mu)
    }

    /// When there are no reversely slidable holes the domain is the diagram
    /// of a skew partition; returns it.
    pub fn as_skew(&self) -> Result<SkewPartition, Error> {
        if let Some(&h) = self.reversely_slidable_holes().first() {
            return Err(Error::HasReverselySlidableHole { cell: h });
        }
        // nu_i = number of leading non-domain cells in row i.
        let mut parts = Vec::new();
        for i in 1..=self.shape.length() {
            let mut nu = 0;
            while nu < self.shape.part(i) && !self.in_domain(i, nu + 1) {
                nu += 1;
            }
            parts.push(nu);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let skew = SkewPartition::new(self.shape.clone(), Partition::new(parts))?;
        debug_assert!(self
            .domain()
            .iter()
            .all(|c| skew.has_cell(c.row, c.col)));
        debug_assert_eq!(self.domain().len(), skew.size());
        Ok(skew)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn par(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn holes(cells: &[(usize, usize)]) -> BTreeSet<Cell> {
        cells.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn addable_rows_examples() {
        assert_eq!(par(&[5, 4, 3, 3, 1]).addable_rows(), vec![1, 2, 3, 5, 6]);
        assert_eq!(Partition::empty().addable_rows(), vec![1]);
        assert_eq!(par(&[2, 2]).addable_rows(), vec![1, 3]);
    }

    #[test]
    fn add_row_examples() {
        assert_eq!(
            par(&[5, 4, 3, 3, 1]).add_row(6).unwrap(),
            par(&[5, 4, 3, 3, 1, 1])
        );
        assert_eq!(Partition::empty().add_row(1).unwrap(), par(&[1]));
        assert_eq!(par(&[2, 2]).add_row(3).unwrap(), par(&[2, 2, 1]));
        assert!(matches!(
            par(&[2, 2]).add_row(2),
            Err(Error::NotAddable { row: 2 })
        ));
    }

    #[test]
    fn removable_rows_examples() {
        assert_eq!(par(&[5, 4, 3, 3, 1]).removable_rows(), vec![1, 2, 4, 5]);
        assert_eq!(
            par(&[5, 4, 3, 3, 1]).remove_row(2).unwrap(),
            par(&[5, 3, 3, 3, 1])
        );
        assert_eq!(par(&[1]).remove_row(1).unwrap(), Partition::empty());
        assert!(matches!(
            par(&[3, 3]).remove_row(1),
            Err(Error::NotRemovable { row: 1 })
        ));
    }

    #[test]
    fn add_remove_round_trip() {
        // add/remove in the same row are mutually inverse.
        for lam in [par(&[]), par(&[1]), par(&[5, 4, 3, 3, 1]), par(&[2, 2, 2])] {
            for r in lam.addable_rows() {
                assert_eq!(lam.add_row(r).unwrap().remove_row(r).unwrap(), lam);
            }
            for r in lam.removable_rows() {
                assert_eq!(lam.remove_row(r).unwrap().add_row(r).unwrap(), lam);
            }
        }
    }

    #[test]
    fn containment() {
        assert!(par(&[4, 3, 1]).contained_in(&par(&[5, 4, 3, 3, 1])));
        let lam = par(&[3, 2]);
        assert!(lam.contained_in(&lam));
        assert!(!par(&[3]).contained_in(&par(&[2, 2])));
    }

    #[test]
    fn strips() {
        let hor = SkewPartition::new(par(&[5, 4, 3, 3, 1]), par(&[4, 4, 3, 1, 1])).unwrap();
        assert!(hor.is_horizontal_strip());
        let ver = SkewPartition::new(par(&[5, 4, 3, 3, 1]), par(&[5, 3, 2, 2])).unwrap();
        assert!(ver.is_vertical_strip());
        let col = SkewPartition::new(par(&[2, 2]), Partition::empty()).unwrap();
        assert!(!col.is_horizontal_strip());
        assert!(SkewPartition::new(par(&[3]), par(&[4])).is_err());
    }

    #[test]
    fn horizontal_strip_matches_column_count() {
        // Inequality form vs geometric count, every nested pair of size <= 6.
        let all = crate::enumerate::partitions(6, 6);
        for outer in &all {
            for inner in &all {
                if !inner.contained_in(outer) {
                    continue;
                }
                let skew = SkewPartition::new(outer.clone(), inner.clone()).unwrap();
                let max_col = outer.part(1);
                let hor = (1..=max_col).all(|j| {
                    (1..=outer.length())
                        .filter(|&i| skew.has_cell(i, j))
                        .count()
                        <= 1
                });
                let ver = (1..=outer.length())
                    .all(|i| (1..=max_col).filter(|&j| skew.has_cell(i, j)).count() <= 1);
                assert_eq!(skew.is_horizontal_strip(), hor, "{skew}");
                assert_eq!(skew.is_vertical_strip(), ver, "{skew}");
            }
        }
    }

    #[test]
    fn slidable_hole_sets() {
        let pp = PuncturedPartition::new(
            par(&[5, 4, 3, 3, 1]),
            holes(&[(1, 2), (1, 3), (2, 4), (3, 1), (4, 1), (4, 2)]),
        )
        .unwrap();
        let sl: Vec<(usize, usize)> =
            pp.slidable_holes().iter().map(|c| (c.row, c.col)).collect();
        assert_eq!(sl, vec![(1, 2), (1, 3), (3, 1), (4, 1), (4, 2)]);
        let rev: Vec<(usize, usize)> = pp
            .reversely_slidable_holes()
            .iter()
            .map(|c| (c.row, c.col))
            .collect();
        assert_eq!(rev, vec![(1, 2), (2, 4), (3, 1), (4, 2)]);

        let no_holes = PuncturedPartition::new(par(&[3, 1]), BTreeSet::new()).unwrap();
        assert!(no_holes.slidable_holes().is_empty());
        assert!(no_holes.reversely_slidable_holes().is_empty());
    }

    #[test]
    fn normalization() {
        let pp = PuncturedPartition::new(par(&[3, 2]), holes(&[(1, 3), (2, 2)])).unwrap();
        assert_eq!(pp.as_partition().unwrap(), par(&[2, 1]));

        let plain = PuncturedPartition::new(par(&[4, 2]), BTreeSet::new()).unwrap();
        assert_eq!(plain.as_partition().unwrap(), par(&[4, 2]));

        let pp = PuncturedPartition::new(par(&[2, 1]), holes(&[(1, 1)])).unwrap();
        let skew = pp.as_skew().unwrap();
        assert_eq!(skew.outer(), &par(&[2, 1]));
        assert_eq!(skew.inner(), &par(&[1]));

        let bad = PuncturedPartition::new(par(&[2, 1]), holes(&[(1, 1)])).unwrap();
        assert!(matches!(
            bad.as_partition(),
            Err(Error::HasSlidableHole { .. })
        ));
    }

    #[test]
    fn as_partition_result_is_contained() {
        // Normalizing any hole-pattern without slidable holes yields a
        // partition inside the ambient shape.
        for lam in crate::enumerate::partitions(5, 5) {
            let cells = lam.cells();
            for mask in 0u32..(1 << cells.len().min(10)) {
                let hs: BTreeSet<Cell> = cells
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &c)| c)
                    .collect();
                let pp = PuncturedPartition::new(lam.clone(), hs).unwrap();
                if pp.slidable_holes().is_empty() {
                    let mu = pp.as_partition().unwrap();
                    assert!(mu.contained_in(&lam));
                }
                if pp.reversely_slidable_holes().is_empty() {
                    let skew = pp.as_skew().unwrap();
                    assert_eq!(skew.size(), pp.domain().len());
                }
            }
        }
    }

    #[test]
    fn lex_order_is_total() {
        let box_cells: Vec<Cell> = (1..=4)
            .flat_map(|r| (1..=4).map(move |c| Cell::new(r, c)))
            .collect();
        for &a in &box_cells {
            for &b in &box_cells {
                // antisymmetry + totality
                assert!(a <= b || b <= a);
                if a <= b && b <= a {
                    assert_eq!(a, b);
                }
                let expected = a.row < b.row || (a.row == b.row && a.col <= b.col);
                assert_eq!(a <= b, expected);
                for &c in &box_cells {
                    if a <= b && b <= c {
                        assert!(a <= c);
                    }
                }
            }
        }
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["(5,4,3,3,1)", "()", "(1)"] {
            let p: Partition = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert_eq!("3, 2, 1".parse::<Partition>().unwrap(), par(&[3, 2, 1]));
        assert!("(1,2)".parse::<Partition>().is_err());
        assert!("(0)".parse::<Partition>().is_err());
    }
}
