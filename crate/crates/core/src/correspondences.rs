//! The Robinson-Schensted correspondence driven by Berele insertion, the
//! Pieri-step RSK correspondence, and its dual, together with their
//! oscillating-tableau recording objects and inverses.

use std::fmt;

use serde_json::{json, Value};

use crate::berele::{berele_insert, berele_inverse, ShapeDelta, TerminalRow};
use crate::error::Error;
use crate::partition::Partition;
use crate::tableau::Tableau;
use crate::word::Word;

fn partition_to_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

fn chain_to_json(chain: &[Partition]) -> Value {
    Value::Array(chain.iter().map(partition_to_json).collect())
}

pub fn partition_from_json(v: &Value) -> Result<Partition, Error> {
    let arr = v.as_array().ok_or_else(|| Error::Parse {
        line: 1,
        col: 1,
        msg: "partition must be an array of parts".into(),
    })?;
    let mut parts = Vec::new();
    for x in arr {
        let p = x.as_u64().ok_or_else(|| Error::Parse {
            line: 1,
            col: 1,
            msg: format!("invalid part {x}"),
        })?;
        parts.push(p as usize);
    }
    if !parts.windows(2).all(|w| w[0] >= w[1]) || parts.contains(&0) {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "parts must be weakly decreasing and positive".into(),
        });
    }
    Ok(Partition::new(parts))
}

pub fn chain_from_json(v: &Value) -> Result<Vec<Partition>, Error> {
    let arr = v.as_array().ok_or_else(|| Error::Parse {
        line: 1,
        col: 1,
        msg: "chain must be an array of partitions".into(),
    })?;
    arr.iter().map(partition_from_json).collect()
}

/// A chain of partitions in which consecutive entries differ by exactly one
/// box, all of length at most `rank`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OscillatingTableau {
    chain: Vec<Partition>,
    rank: usize,
}

impl OscillatingTableau {
    pub fn new(chain: Vec<Partition>, rank: usize) -> Result<Self, Error> {
        if chain.is_empty() {
            return Err(Error::Invalid("chain must contain a starting shape".into()));
        }
        for p in &chain {
            if p.length() > rank {
                return Err(Error::Invalid(format!("{p} exceeds rank {rank}")));
            }
        }
        for pair in chain.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let ok = (a.contained_in(b) && b.size() == a.size() + 1)
                || (b.contained_in(a) && a.size() == b.size() + 1);
            if !ok {
                return Err(Error::Invalid(format!(
                    "consecutive shapes {a} and {b} do not differ by one box"
                )));
            }
        }
        Ok(OscillatingTableau { chain, rank })
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of steps.
    pub fn size(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn start(&self) -> &Partition {
        self.chain.first().unwrap()
    }

    pub fn end(&self) -> &Partition {
        self.chain.last().unwrap()
    }

    pub fn to_json(&self) -> Value {
        chain_to_json(&self.chain)
    }
}

impl fmt::Display for OscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.chain.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Pieri-step summary `(start, mid, end)`.
///
/// In the horizontal form `start >= mid <= end` with both differences
/// horizontal strips; in the vertical form `start <= mid >= end` with
/// vertical strips.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PieriTriple {
    pub start: Partition,
    pub mid: Partition,
    pub end: Partition,
}

impl PieriTriple {
    pub fn is_horizontal(&self) -> bool {
        self.mid.contained_in(&self.start)
            && self.mid.contained_in(&self.end)
            && crate::partition::SkewPartition::new(self.start.clone(), self.mid.clone())
                .map_or(false, |s| s.is_horizontal_strip())
            && crate::partition::SkewPartition::new(self.end.clone(), self.mid.clone())
                .map_or(false, |s| s.is_horizontal_strip())
    }

    pub fn is_vertical(&self) -> bool {
        self.start.contained_in(&self.mid)
            && self.end.contained_in(&self.mid)
            && crate::partition::SkewPartition::new(self.mid.clone(), self.start.clone())
                .map_or(false, |s| s.is_vertical_strip())
            && crate::partition::SkewPartition::new(self.mid.clone(), self.end.clone())
                .map_or(false, |s| s.is_vertical_strip())
    }

    pub fn to_json(&self) -> Value {
        chain_to_json(&[self.start.clone(), self.mid.clone(), self.end.clone()])
    }
}

/// An alternating chain `(xi_0, nu_1, xi_1, ..., nu_k, xi_k)` in which each
/// `nu_i` sits inside both neighbors by horizontal strips.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColumnStrictOT {
    chain: Vec<Partition>,
    rank: usize,
}

impl ColumnStrictOT {
    pub fn new(chain: Vec<Partition>, rank: usize) -> Result<Self, Error> {
        if chain.len() % 2 == 0 {
            return Err(Error::Invalid(
                "column-strict chain must have odd length".into(),
            ));
        }
        for p in &chain {
            if p.length() > rank {
                return Err(Error::Invalid(format!("{p} exceeds rank {rank}")));
            }
        }
        for i in 0..chain.len() / 2 {
            let triple = PieriTriple {
                start: chain[2 * i].clone(),
                mid: chain[2 * i + 1].clone(),
                end: chain[2 * i + 2].clone(),
            };
            if !triple.is_horizontal() {
                return Err(Error::Invalid(format!(
                    "step {} is not a pair of horizontal strips",
                    i + 1
                )));
            }
        }
        Ok(ColumnStrictOT { chain, rank })
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn depth(&self) -> usize {
        self.chain.len() / 2
    }

    pub fn start(&self) -> &Partition {
        self.chain.first().unwrap()
    }

    pub fn end(&self) -> &Partition {
        self.chain.last().unwrap()
    }

    /// `l_i = |xi_{i-1}/nu_i| + |xi_i/nu_i|`.
    pub fn content(&self) -> Vec<usize> {
        (0..self.depth())
            .map(|i| {
                let (before, mid, after) = (
                    &self.chain[2 * i],
                    &self.chain[2 * i + 1],
                    &self.chain[2 * i + 2],
                );
                before.size() + after.size() - 2 * mid.size()
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        chain_to_json(&self.chain)
    }
}

/// An alternating chain `(xi_0, nu_1, xi_1, ..., nu_l, xi_l)` in which each
/// `nu_i` contains both neighbors by vertical strips.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RowStrictOT {
    chain: Vec<Partition>,
    rank: usize,
}

impl RowStrictOT {
    pub fn new(chain: Vec<Partition>, rank: usize) -> Result<Self, Error> {
        if chain.len() % 2 == 0 {
            return Err(Error::Invalid("row-strict chain must have odd length".into()));
        }
        for p in &chain {
            if p.length() > rank {
                return Err(Error::Invalid(format!("{p} exceeds rank {rank}")));
            }
        }
        for i in 0..chain.len() / 2 {
            let triple = PieriTriple {
                start: chain[2 * i].clone(),
                mid: chain[2 * i + 1].clone(),
                end: chain[2 * i + 2].clone(),
            };
            if !triple.is_vertical() {
                return Err(Error::Invalid(format!(
                    "step {} is not a pair of vertical strips",
                    i + 1
                )));
            }
        }
        Ok(RowStrictOT { chain, rank })
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn width(&self) -> usize {
        self.chain.len() / 2
    }

    pub fn start(&self) -> &Partition {
        self.chain.first().unwrap()
    }

    pub fn end(&self) -> &Partition {
        self.chain.last().unwrap()
    }

    /// `k_i = |nu_i/xi_{i-1}| + |nu_i/xi_i|`.
    pub fn content(&self) -> Vec<usize> {
        (0..self.width())
            .map(|i| {
                let (before, mid, after) = (
                    &self.chain[2 * i],
                    &self.chain[2 * i + 1],
                    &self.chain[2 * i + 2],
                );
                2 * mid.size() - before.size() - after.size()
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        chain_to_json(&self.chain)
    }
}

/// Iterated Berele insertion of the letters of `word`, recording the chain
/// of intermediate shapes.
pub fn rs(t: &Tableau, word: &Word) -> Result<(Tableau, OscillatingTableau), Error> {
    let rank = t.alphabet() / 2;
    let mut p = t.clone();
    let mut chain = vec![p.shape()];
    for &x in word.letters() {
        p = berele_insert(&p, x)?.result;
        chain.push(p.shape());
    }
    let ot = OscillatingTableau::new(chain, rank)?;
    Ok((p, ot))
}

/// Walks the recording chain backwards, inverting one insertion per step.
pub fn rs_inverse(p: &Tableau, ot: &OscillatingTableau) -> Result<(Tableau, Word), Error> {
    if p.shape() != *ot.end() {
        return Err(Error::NoPreimage);
    }
    let mut cur = p.clone();
    let mut letters = Vec::new();
    for w in ot.chain().windows(2).rev() {
        let (prev, next) = (&w[0], &w[1]);
        let delta = delta_between(prev, next)?;
        let (back, x) = berele_inverse(&cur, delta)?;
        letters.push(x);
        cur = back;
    }
    letters.reverse();
    Ok((cur, Word::new(letters)))
}

/// The one-box delta leading from `prev` to `next`.
fn delta_between(prev: &Partition, next: &Partition) -> Result<ShapeDelta, Error> {
    if prev.contained_in(next) && next.size() == prev.size() + 1 {
        let r = (1..=next.length())
            .find(|&i| next.part(i) == prev.part(i) + 1)
            .unwrap();
        Ok(ShapeDelta::Added(r))
    } else if next.contained_in(prev) && prev.size() == next.size() + 1 {
        let r = (1..=prev.length())
            .find(|&i| prev.part(i) == next.part(i) + 1)
            .unwrap();
        Ok(ShapeDelta::Removed(r))
    } else {
        Err(Error::NoPreimage)
    }
}

/// Inserts a whole weakly increasing word, summarizing the shape movement by
/// the triple (start, after the barred steps, end). Terminal rows decrease
/// weakly along the word, so the box-removing steps come first.
pub fn pieri_split(t: &Tableau, word: &Word) -> Result<(Tableau, PieriTriple), Error> {
    if !word.is_weakly_increasing() {
        return Err(Error::NotWeaklyIncreasing);
    }
    let start = t.shape();
    let mut p = t.clone();
    let mut terminals = Vec::new();
    let mut shapes = vec![start.clone()];
    for &x in word.letters() {
        let rec = berele_insert(&p, x)?;
        terminals.push(rec.terminal);
        p = rec.result;
        shapes.push(p.shape());
    }
    debug_assert!(terminals.windows(2).all(|w| w[0] >= w[1]));
    let barred = terminals
        .iter()
        .filter(|r| matches!(r, TerminalRow::Barred(_)))
        .count();
    let triple = PieriTriple {
        start,
        mid: shapes[barred].clone(),
        end: p.shape(),
    };
    debug_assert!(triple.is_horizontal());
    Ok((p, triple))
}

/// Inserts a strictly decreasing word; terminal rows increase strictly, so
/// the box-adding steps come first.
pub fn dual_pieri_split(t: &Tableau, word: &Word) -> Result<(Tableau, PieriTriple), Error> {
    if !word.is_strictly_decreasing() {
        return Err(Error::NotStrictlyDecreasing);
    }
    let start = t.shape();
    let mut p = t.clone();
    let mut terminals = Vec::new();
    let mut shapes = vec![start.clone()];
    for &x in word.letters() {
        let rec = berele_insert(&p, x)?;
        terminals.push(rec.terminal);
        p = rec.result;
        shapes.push(p.shape());
    }
    debug_assert!(terminals.windows(2).all(|w| w[0] < w[1]));
    let unbarred = terminals
        .iter()
        .filter(|r| matches!(r, TerminalRow::Unbarred(_)))
        .count();
    let triple = PieriTriple {
        start,
        mid: shapes[unbarred].clone(),
        end: p.shape(),
    };
    debug_assert!(triple.is_vertical());
    Ok((p, triple))
}

/// Folds Pieri steps over the given weakly increasing words, accumulating a
/// column-strict recording chain whose content lists the word lengths.
pub fn rsk(t: &Tableau, words: &[Word]) -> Result<(Tableau, ColumnStrictOT), Error> {
    let rank = t.alphabet() / 2;
    let mut p = t.clone();
    let mut chain = vec![p.shape()];
    for w in words {
        let (next, triple) = pieri_split(&p, w)?;
        chain.push(triple.mid);
        chain.push(triple.end);
        p = next;
    }
    let ot = ColumnStrictOT::new(chain, rank)?;
    debug_assert_eq!(
        ot.content(),
        words.iter().map(Word::len).collect::<Vec<_>>()
    );
    Ok((p, ot))
}

/// Folds dual Pieri steps over strictly decreasing words.
pub fn drsk(t: &Tableau, words: &[Word]) -> Result<(Tableau, RowStrictOT), Error> {
    let rank = t.alphabet() / 2;
    let mut p = t.clone();
    let mut chain = vec![p.shape()];
    for w in words {
        let (next, triple) = dual_pieri_split(&p, w)?;
        chain.push(triple.mid);
        chain.push(triple.end);
        p = next;
    }
    let ot = RowStrictOT::new(chain, rank)?;
    debug_assert_eq!(
        ot.content(),
        words.iter().map(Word::len).collect::<Vec<_>>()
    );
    Ok((p, ot))
}

/// All orders in which single boxes can be removed to pass from `from` down
/// to `to`, as row sequences.
fn removal_orders(from: &Partition, to: &Partition) -> Vec<Vec<usize>> {
    if !to.contained_in(from) {
        return Vec::new();
    }
    if from == to {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for r in from.removable_rows() {
        if from.part(r) > to.part(r) {
            let smaller = from.remove_row(r).unwrap();
            for mut tail in removal_orders(&smaller, to) {
                tail.insert(0, r);
                out.push(tail);
            }
        }
    }
    out
}

/// All orders in which single boxes can be added to pass from `from` up to
/// `to`, as row sequences.
fn addition_orders(from: &Partition, to: &Partition) -> Vec<Vec<usize>> {
    if !from.contained_in(to) {
        return Vec::new();
    }
    if from == to {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for r in from.addable_rows() {
        if from.part(r) < to.part(r) {
            let larger = from.add_row(r).unwrap();
            for mut tail in addition_orders(&larger, to) {
                tail.insert(0, r);
                out.push(tail);
            }
        }
    }
    out
}

/// Inverts one Pieri step by searching the within-step shape chains the
/// triple leaves unspecified: removals from `start` to `mid`, then additions
/// up to `end`. The unique candidate whose forward image matches is
/// returned. Desk-scale search.
fn pieri_split_inverse(
    p: &Tableau,
    triple: &PieriTriple,
) -> Result<(Tableau, Word), Error> {
    if p.shape() != triple.end || !triple.is_horizontal() {
        return Err(Error::NoPreimage);
    }
    for removals in removal_orders(&triple.start, &triple.mid) {
        for additions in addition_orders(&triple.mid, &triple.end) {
            let mut deltas: Vec<ShapeDelta> =
                removals.iter().map(|&r| ShapeDelta::Removed(r)).collect();
            deltas.extend(additions.iter().map(|&r| ShapeDelta::Added(r)));
            if let Some((t, w)) = invert_chain(p, &deltas) {
                if !w.is_weakly_increasing() {
                    continue;
                }
                let (fp, ft) = pieri_split(&t, &w)?;
                if fp == *p && ft == *triple {
                    return Ok((t, w));
                }
            }
        }
    }
    Err(Error::NoPreimage)
}

/// The vertical counterpart: additions first, then removals.
fn dual_pieri_split_inverse(
    p: &Tableau,
    triple: &PieriTriple,
) -> Result<(Tableau, Word), Error> {
    if p.shape() != triple.end || !triple.is_vertical() {
        return Err(Error::NoPreimage);
    }
    for additions in addition_orders(&triple.start, &triple.mid) {
        for removals in removal_orders(&triple.mid, &triple.end) {
            let mut deltas: Vec<ShapeDelta> =
                additions.iter().map(|&r| ShapeDelta::Added(r)).collect();
            deltas.extend(removals.iter().map(|&r| ShapeDelta::Removed(r)));
            if let Some((t, w)) = invert_chain(p, &deltas) {
                if !w.is_strictly_decreasing() {
                    continue;
                }
                let (fp, ft) = dual_pieri_split(&t, &w)?;
                if fp == *p && ft == *triple {
                    return Ok((t, w));
                }
            }
        }
    }
    Err(Error::NoPreimage)
}

/// Inverts a run of insertions along an explicit delta sequence.
fn invert_chain(p: &Tableau, deltas: &[ShapeDelta]) -> Option<(Tableau, Word)> {
    let mut cur = p.clone();
    let mut letters = Vec::new();
    for &delta in deltas.iter().rev() {
        let (back, x) = berele_inverse(&cur, delta).ok()?;
        letters.push(x);
        cur = back;
    }
    letters.reverse();
    Some((cur, Word::new(letters)))
}

/// Inverts [`rsk`] by peeling Pieri steps off the back of the chain.
pub fn rsk_inverse(p: &Tableau, ot: &ColumnStrictOT) -> Result<(Tableau, Vec<Word>), Error> {
    if p.shape() != *ot.end() {
        return Err(Error::NoPreimage);
    }
    let chain = ot.chain();
    let mut cur = p.clone();
    let mut words = Vec::new();
    for i in (0..ot.depth()).rev() {
        let triple = PieriTriple {
            start: chain[2 * i].clone(),
            mid: chain[2 * i + 1].clone(),
            end: chain[2 * i + 2].clone(),
        };
        let (t, w) = pieri_split_inverse(&cur, &triple)?;
        words.push(w);
        cur = t;
    }
    words.reverse();
    Ok((cur, words))
}

/// Inverts [`drsk`].
pub fn drsk_inverse(p: &Tableau, ot: &RowStrictOT) -> Result<(Tableau, Vec<Word>), Error> {
    if p.shape() != *ot.end() {
        return Err(Error::NoPreimage);
    }
    let chain = ot.chain();
    let mut cur = p.clone();
    let mut words = Vec::new();
    for i in (0..ot.width()).rev() {
        let triple = PieriTriple {
            start: chain[2 * i].clone(),
            mid: chain[2 * i + 1].clone(),
            end: chain[2 * i + 2].clone(),
        };
        let (t, w) = dual_pieri_split_inverse(&cur, &triple)?;
        words.push(w);
        cur = t;
    }
    words.reverse();
    Ok((cur, words))
}
