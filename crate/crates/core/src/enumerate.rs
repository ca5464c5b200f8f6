//! Exhaustive generators for the finite families the verification harness
//! quantifies over: partitions, tableaux, oscillating chains, and words.
//!
//! Generation is eager into vectors; the harness ranges are desk-scale by
//! design, so laziness buys nothing here. Orders are stable so failures are
//! reproducible: partitions come size-ascending then lexicographically
//! descending, fillings and words in lexicographic order.

use crate::correspondences::{ColumnStrictOT, OscillatingTableau, RowStrictOT};
use crate::partition::{Partition, PuncturedPartition};
use crate::tableau::{PuncturedTableau, Tableau};
use crate::word::Word;

/// Every partition with size at most `max_size` and length at most
/// `max_length`, exactly once.
pub fn partitions(max_size: usize, max_length: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|s| partitions_of(s, max_length))
        .collect()
}

/// Partitions of exactly `size` with at most `max_length` parts, in
/// lexicographically descending order.
pub fn partitions_of(size: usize, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(size, size, max_length, &mut stack, &mut out);
    out
}

fn descend(
    remaining: usize,
    cap: usize,
    slots: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::new(stack.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for first in (1..=cap.min(remaining)).rev() {
        stack.push(first);
        descend(remaining - first, first, slots - 1, stack, out);
        stack.pop();
    }
}

/// Every semistandard filling of `shape` with letters in `[alphabet]`.
pub fn sst(shape: &Partition, alphabet: usize) -> Vec<Tableau> {
    let pp = PuncturedPartition::new(shape.clone(), Default::default()).unwrap();
    sst_punctured(&pp, alphabet)
        .into_iter()
        .map(|t| t.to_tableau().unwrap())
        .collect()
}

/// Every semistandard filling of a punctured shape.
///
/// Cells are filled in lexicographic order; each cell's entry is bounded
/// below by its nearest filled neighbor to the left in the row (weakly) and
/// above in the column (strictly), which is exactly the semistandard
/// condition across holes.
pub fn sst_punctured(shape: &PuncturedPartition, alphabet: usize) -> Vec<PuncturedTableau> {
    let lam = shape.shape();
    let template: Vec<Vec<Option<usize>>> = (1..=lam.length())
        .map(|i| vec![None; lam.part(i)])
        .collect();
    let cells = shape.domain();
    let mut out = Vec::new();
    let mut rows = template;
    fill(shape, alphabet, &cells, 0, &mut rows, &mut out);
    out
}

fn fill(
    shape: &PuncturedPartition,
    alphabet: usize,
    cells: &[crate::partition::Cell],
    idx: usize,
    rows: &mut Vec<Vec<Option<usize>>>,
    out: &mut Vec<PuncturedTableau>,
) {
    if idx == cells.len() {
        out.push(PuncturedTableau::new(rows.clone(), alphabet).unwrap());
        return;
    }
    let cell = cells[idx];
    let mut lo = 1;
    // nearest filled neighbor leftwards in the row
    for j in (1..cell.col).rev() {
        if shape.in_domain(cell.row, j) {
            lo = lo.max(rows[cell.row - 1][j - 1].unwrap());
            break;
        }
    }
    // nearest filled neighbor upwards in the column
    for i in (1..cell.row).rev() {
        if shape.in_domain(i, cell.col) {
            lo = lo.max(rows[i - 1][cell.col - 1].unwrap() + 1);
            break;
        }
    }
    for v in lo..=alphabet {
        rows[cell.row - 1][cell.col - 1] = Some(v);
        fill(shape, alphabet, cells, idx + 1, rows, out);
    }
    rows[cell.row - 1][cell.col - 1] = None;
}

/// Every symplectic tableau of the given shape over `[two_n]`: the
/// semistandard fillings passed through the first-column filter.
pub fn spt(shape: &Partition, two_n: usize) -> Vec<Tableau> {
    sst(shape, two_n)
        .into_iter()
        .filter(Tableau::is_symplectic)
        .collect()
}

/// Every oscillating tableau of the given rank, size, and endpoint shapes.
pub fn ot(rank: usize, steps: usize, start: &Partition, end: &Partition) -> Vec<OscillatingTableau> {
    if start.length() > rank || end.length() > rank {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chain = vec![start.clone()];
    extend_ot(rank, steps, end, &mut chain, &mut out);
    out
}

fn extend_ot(
    rank: usize,
    steps: usize,
    end: &Partition,
    chain: &mut Vec<Partition>,
    out: &mut Vec<OscillatingTableau>,
) {
    let cur = chain.last().unwrap().clone();
    if steps == 0 {
        if cur == *end {
            out.push(OscillatingTableau::new(chain.clone(), rank).unwrap());
        }
        return;
    }
    // size parity must be able to reach the target
    let diff = cur.size().abs_diff(end.size());
    if diff > steps || (steps - diff) % 2 != 0 {
        return;
    }
    for r in cur.addable_rows() {
        if r <= rank {
            chain.push(cur.add_row(r).unwrap());
            extend_ot(rank, steps - 1, end, chain, out);
            chain.pop();
        }
    }
    for r in cur.removable_rows() {
        chain.push(cur.remove_row(r).unwrap());
        extend_ot(rank, steps - 1, end, chain, out);
        chain.pop();
    }
}

/// Partitions reachable from `lam` by removing a horizontal strip.
pub fn horizontal_strip_subs(lam: &Partition) -> Vec<Partition> {
    // mu_i ranges over [lam_{i+1}, lam_i] independently; the bounds force
    // weak decrease.
    let mut out = vec![Vec::new()];
    for i in 1..=lam.length() {
        let (lo, hi) = (lam.part(i + 1), lam.part(i));
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (lo..=hi).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|mut parts| {
            while parts.last() == Some(&0) {
                parts.pop();
            }
            Partition::new(parts)
        })
        .collect()
}

/// Partitions of length at most `rank` reaching `lam` by adding a
/// horizontal strip of exactly `added` boxes.
pub fn horizontal_strip_supers(lam: &Partition, rank: usize, added: usize) -> Vec<Partition> {
    let rows = (lam.length() + 1).min(rank);
    let mut out = Vec::new();
    let mut acc = Vec::new();
    hstrip_super_rec(lam, rows, 1, added, &mut acc, &mut out);
    out
}

fn hstrip_super_rec(
    lam: &Partition,
    rows: usize,
    i: usize,
    remaining: usize,
    acc: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if i > rows {
        if remaining == 0 {
            let mut parts = acc.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.push(Partition::new(parts));
        }
        return;
    }
    // xi_i in [lam_i, lam_{i-1}], capped by the boxes still available
    let lo = lam.part(i);
    let hi = if i == 1 {
        lam.part(1) + remaining
    } else {
        lam.part(i - 1).min(lam.part(i) + remaining)
    };
    for v in lo..=hi {
        acc.push(v);
        hstrip_super_rec(lam, rows, i + 1, remaining - (v - lo), acc, out);
        acc.pop();
    }
}

/// Partitions reachable from `lam` by removing a vertical strip of exactly
/// `removed` boxes.
pub fn vertical_strip_subs(lam: &Partition, removed: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let n = lam.length();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize != removed {
            continue;
        }
        let parts: Vec<usize> = (0..n)
            .map(|i| lam.part(i + 1) - ((mask >> i & 1) as usize))
            .collect();
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            let mut parts = parts;
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.push(Partition::new(parts));
        }
    }
    out
}

/// Partitions of length at most `rank` reaching `lam` by adding a vertical
/// strip of exactly `added` boxes.
pub fn vertical_strip_supers(lam: &Partition, rank: usize, added: usize) -> Vec<Partition> {
    let rows = (lam.length() + 1).min(rank);
    let mut out = Vec::new();
    for mask in 0u64..(1 << rows) {
        if mask.count_ones() as usize != added {
            continue;
        }
        let parts: Vec<usize> = (0..rows)
            .map(|i| lam.part(i + 1) + ((mask >> i & 1) as usize))
            .collect();
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            let mut parts = parts;
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.push(Partition::new(parts));
        }
    }
    out
}

/// Every column-strict oscillating chain with the given endpoints and
/// content.
pub fn csot(
    rank: usize,
    start: &Partition,
    end: &Partition,
    content: &[usize],
) -> Vec<ColumnStrictOT> {
    let mut out = Vec::new();
    let mut chain = vec![start.clone()];
    csot_rec(rank, end, content, &mut chain, &mut out);
    out
}

fn csot_rec(
    rank: usize,
    end: &Partition,
    content: &[usize],
    chain: &mut Vec<Partition>,
    out: &mut Vec<ColumnStrictOT>,
) {
    let Some((&l, rest)) = content.split_first() else {
        if chain.last().unwrap() == end {
            out.push(ColumnStrictOT::new(chain.clone(), rank).unwrap());
        }
        return;
    };
    let cur = chain.last().unwrap().clone();
    for mid in horizontal_strip_subs(&cur) {
        let removed = cur.size() - mid.size();
        if removed > l {
            continue;
        }
        for next in horizontal_strip_supers(&mid, rank, l - removed) {
            chain.push(mid.clone());
            chain.push(next);
            csot_rec(rank, end, rest, chain, out);
            chain.pop();
            chain.pop();
        }
    }
}

/// Every row-strict oscillating chain with the given endpoints and content.
pub fn rsot(
    rank: usize,
    start: &Partition,
    end: &Partition,
    content: &[usize],
) -> Vec<RowStrictOT> {
    let mut out = Vec::new();
    let mut chain = vec![start.clone()];
    rsot_rec(rank, end, content, &mut chain, &mut out);
    out
}

fn rsot_rec(
    rank: usize,
    end: &Partition,
    content: &[usize],
    chain: &mut Vec<Partition>,
    out: &mut Vec<RowStrictOT>,
) {
    let Some((&k, rest)) = content.split_first() else {
        if chain.last().unwrap() == end {
            out.push(RowStrictOT::new(chain.clone(), rank).unwrap());
        }
        return;
    };
    let cur = chain.last().unwrap().clone();
    for added in 0..=k {
        for mid in vertical_strip_supers(&cur, rank, added) {
            for next in vertical_strip_subs(&mid, k - added) {
                chain.push(mid.clone());
                chain.push(next.clone());
                rsot_rec(rank, end, rest, chain, out);
                chain.pop();
                chain.pop();
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordMode {
    All,
    WeaklyIncreasing,
    StrictlyDecreasing,
}

/// Every word of the given length over `[alphabet]` in the given mode, in
/// lexicographic order.
pub fn words(alphabet: usize, length: usize, mode: WordMode) -> Vec<Word> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    words_rec(alphabet, length, mode, &mut acc, &mut out);
    out
}

fn words_rec(
    alphabet: usize,
    length: usize,
    mode: WordMode,
    acc: &mut Vec<usize>,
    out: &mut Vec<Word>,
) {
    if acc.len() == length {
        out.push(Word::new(acc.clone()));
        return;
    }
    let range: Box<dyn Iterator<Item = usize>> = match (mode, acc.last()) {
        (WordMode::All, _) | (_, None) => Box::new(1..=alphabet),
        (WordMode::WeaklyIncreasing, Some(&last)) => Box::new(last..=alphabet),
        (WordMode::StrictlyDecreasing, Some(&last)) => Box::new(1..last),
    };
    for v in range {
        acc.push(v);
        words_rec(alphabet, length, mode, acc, out);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn par(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn partition_order_and_counts() {
        let ps = partitions(2, 2);
        assert_eq!(
            ps,
            vec![Partition::empty(), par(&[1]), par(&[2]), par(&[1, 1])]
        );
        assert_eq!(partitions(0, 3), vec![Partition::empty()]);
        assert_eq!(partitions(4, 4).len(), 12);
        // length cap: partitions of 4 with at most 2 parts
        assert_eq!(partitions_of(4, 2), vec![par(&[4]), par(&[3, 1]), par(&[2, 2])]);
    }

    #[test]
    fn no_duplicate_partitions() {
        let ps = partitions(6, 6);
        let set: std::collections::BTreeSet<_> = ps.iter().cloned().collect();
        assert_eq!(set.len(), ps.len());
    }

    #[test]
    fn sst_counts() {
        assert_eq!(sst(&par(&[1, 1]), 2).len(), 1);
        // single-row fillings are multisets
        assert_eq!(sst(&par(&[2]), 3).len(), 6);
        assert_eq!(sst(&par(&[1, 1, 1]), 2).len(), 0);
        // empty shape: one empty filling
        assert_eq!(sst(&Partition::empty(), 3).len(), 1);
    }

    #[test]
    fn sst_matches_filter_recount() {
        // backtracking must agree with brute-force filtering
        for lam in partitions(4, 4) {
            let fast = sst(&lam, 3);
            let cells = lam.cells();
            let mut slow = 0usize;
            let total = 3usize.pow(cells.len() as u32);
            for code in 0..total {
                let mut rows: Vec<Vec<Option<usize>>> = (1..=lam.length())
                    .map(|i| vec![None; lam.part(i)])
                    .collect();
                let mut c = code;
                for cell in &cells {
                    rows[cell.row - 1][cell.col - 1] = Some(c % 3 + 1);
                    c /= 3;
                }
                if PuncturedTableau::new(rows, 3).unwrap().is_semistandard() {
                    slow += 1;
                }
            }
            assert_eq!(fast.len(), slow, "shape {lam}");
        }
    }

    #[test]
    fn spt_counts() {
        assert_eq!(spt(&par(&[1]), 2).len(), 2);
        assert_eq!(spt(&par(&[1, 1]), 4).len(), 5);
        assert_eq!(spt(&par(&[2]), 4).len(), 10);
        assert_eq!(spt(&Partition::empty(), 4).len(), 1);
        assert_eq!(spt(&par(&[2]), 2).len(), 3);
        assert_eq!(spt(&par(&[1, 1]), 2).len(), 0);
    }

    #[test]
    fn spt_is_subset_of_sst() {
        for nu in partitions(4, 2) {
            let all: std::collections::BTreeSet<_> = sst(&nu, 4).into_iter().collect();
            for t in spt(&nu, 4) {
                assert!(all.contains(&t));
            }
        }
    }

    #[test]
    fn ot_counts() {
        assert_eq!(ot(1, 2, &Partition::empty(), &Partition::empty()).len(), 1);
        assert_eq!(ot(3, 1, &Partition::empty(), &par(&[1])).len(), 1);
        assert_eq!(ot(2, 2, &Partition::empty(), &par(&[2])).len(), 1);
        assert_eq!(ot(2, 2, &Partition::empty(), &Partition::empty()).len(), 1);
        // ties out with the rank-2 identity: 1*16 = 10 + 5 + 1
        assert_eq!(ot(2, 3, &Partition::empty(), &par(&[1])).len(), 3);
    }

    #[test]
    fn word_counts() {
        assert_eq!(
            words(2, 2, WordMode::WeaklyIncreasing)
                .iter()
                .map(|w| w.letters().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![1, 1], vec![1, 2], vec![2, 2]]
        );
        assert_eq!(words(3, 0, WordMode::All).len(), 1);
        assert_eq!(words(4, 2, WordMode::StrictlyDecreasing).len(), 6);
        assert_eq!(words(3, 3, WordMode::All).len(), 27);
        assert_eq!(words(3, 4, WordMode::StrictlyDecreasing).len(), 0);
    }

    #[test]
    fn strip_enumerators() {
        let lam = par(&[2, 1]);
        let subs = horizontal_strip_subs(&lam);
        // mu_1 in [1,2], mu_2 in [0,1]
        assert_eq!(subs.len(), 4);
        for mu in &subs {
            let sk = crate::partition::SkewPartition::new(lam.clone(), mu.clone()).unwrap();
            assert!(sk.is_horizontal_strip());
        }

        for added in 0..=2 {
            for xi in horizontal_strip_supers(&lam, 2, added) {
                let sk = crate::partition::SkewPartition::new(xi.clone(), lam.clone()).unwrap();
                assert!(sk.is_horizontal_strip());
                assert_eq!(sk.size(), added);
                assert!(xi.length() <= 2);
            }
        }

        for removed in 0..=2 {
            for mu in vertical_strip_subs(&lam, removed) {
                let sk = crate::partition::SkewPartition::new(lam.clone(), mu.clone()).unwrap();
                assert!(sk.is_vertical_strip());
                assert_eq!(sk.size(), removed);
            }
        }
        for added in 0..=2 {
            for xi in vertical_strip_supers(&lam, 3, added) {
                let sk = crate::partition::SkewPartition::new(xi.clone(), lam.clone()).unwrap();
                assert!(sk.is_vertical_strip());
                assert_eq!(sk.size(), added);
            }
        }
    }

    #[test]
    fn csot_single_step_matches_pieri_triples() {
        // depth-1 chains with content (l) are exactly the horizontal Pieri
        // triples produced by inserting weakly increasing words
        let start = Partition::empty();
        for l in 0..=3usize {
            let mut from_chains = std::collections::BTreeSet::new();
            for end in partitions(l, 2) {
                for u in csot(2, &start, &end, &[l]) {
                    from_chains.insert(u.chain().to_vec());
                }
            }
            let mut from_insertions = std::collections::BTreeSet::new();
            for w in words(4, l, WordMode::WeaklyIncreasing) {
                let (_, triple) =
                    crate::correspondences::pieri_split(&Tableau::empty(4), &w).unwrap();
                from_insertions.insert(vec![triple.start, triple.mid, triple.end]);
            }
            assert_eq!(from_chains, from_insertions, "content {l}");
        }
    }

    #[test]
    fn punctured_enumeration_counts() {
        let pp = PuncturedPartition::new(
            par(&[2, 1]),
            [crate::partition::Cell::new(1, 1)].into_iter().collect(),
        )
        .unwrap();
        // cells (1,2) and (2,1) are unconstrained against each other
        assert_eq!(sst_punctured(&pp, 2).len(), 4);
        for t in sst_punctured(&pp, 3) {
            assert!(t.is_semistandard());
        }
    }
}
