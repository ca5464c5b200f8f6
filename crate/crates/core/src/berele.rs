//! Berele row-insertion on symplectic tableaux, its inverse, and the
//! first-column pruning machinery (`rem`/`red`, the tableau successor map,
//! and the Littlewood-Richardson map) whose composite with Schensted
//! insertion reproduces it.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::jdt::{reverse_slide_step, slide};
use crate::schensted::{reverse_bump, row_insert, row_insert_inverse};
use crate::tableau::{Letter, PuncturedTableau, SkewTableau, Tableau};
use crate::word::{insertion_tableau, Word};

/// A row index that is either unbarred (a box was added in that row) or
/// barred (a box was removed).
///
/// The order is the one the bumping lemma speaks about: unbarred indices
/// ascend, then barred indices descend, so `1 < 2 < ... < bar2 < bar1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TerminalRow {
    Unbarred(usize),
    Barred(usize),
}

impl PartialOrd for TerminalRow {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TerminalRow {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use TerminalRow::*;
        match (self, other) {
            (Unbarred(a), Unbarred(b)) => a.cmp(b),
            (Barred(a), Barred(b)) => b.cmp(a),
            (Unbarred(_), Barred(_)) => std::cmp::Ordering::Less,
            (Barred(_), Unbarred(_)) => std::cmp::Ordering::Greater,
        }
    }
}

impl fmt::Display for TerminalRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TerminalRow::Unbarred(r) => write!(f, "{}", r),
            TerminalRow::Barred(r) => write!(f, "bar{}", r),
        }
    }
}

/// How the shape changed: one box added in the given row, or one removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ShapeDelta {
    Added(usize),
    Removed(usize),
}

/// The route of a Berele insertion: the bumping columns alone when a box was
/// added, or the bumping columns followed by the sliding columns when the
/// cancellation fired.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BereleRoute {
    Bump(Vec<usize>),
    BumpSlide { bump: Vec<usize>, slide: Vec<usize> },
}

impl fmt::Display for BereleRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            BereleRoute::Bump(cs) => write!(f, "({})", join(cs)),
            BereleRoute::BumpSlide { bump, slide } => {
                write!(f, "({};{})", join(bump), join(slide))
            }
        }
    }
}

/// Full record of one Berele insertion.
///
/// `letters` are the bumped letters actually placed by the bumping phase
/// (all of them when a box was added; those through the cancellation row
/// otherwise).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BereleRecord {
    pub result: Tableau,
    pub delta: ShapeDelta,
    pub terminal: TerminalRow,
    pub route: BereleRoute,
    pub letters: Vec<Letter>,
}

fn validate_symplectic(t: &Tableau) -> Result<(), Error> {
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    if !t.is_symplectic() {
        return Err(Error::NotSymplectic);
    }
    Ok(())
}

fn validate_letter(t: &Tableau, x: Letter) -> Result<(), Error> {
    if x == 0 || x > t.alphabet() {
        return Err(Error::LetterOutOfRange {
            letter: x,
            bound: t.alphabet(),
        });
    }
    Ok(())
}

/// Inserts `x` into the symplectic tableau `t`.
///
/// Bumping proceeds as in Schensted insertion until either the carried
/// letter comes to rest (a box is added) or the cancellation fires: the
/// carry equals `2r - 1` and would bump a `2r` in row `r`, in which case the
/// `2r - 1` is written over the `2r`, the first-column cell `(r, 1)` (which
/// necessarily holds `2r - 1`, or is the written cell itself) becomes a
/// hole, and the hole is slid to rest, removing one box.
///
/// The result is checked against the equivalent formulation through a full
/// Schensted insertion followed by a single slide.
pub fn berele_insert(t: &Tableau, x: Letter) -> Result<BereleRecord, Error> {
    validate_letter(t, x)?;
    validate_symplectic(t)?;
    let nu = t.shape();

    let mut work = t.clone();
    let mut bump_route = Vec::new();
    let mut letters = Vec::new();
    let mut carry = x;
    let mut r = 1;
    let record = loop {
        letters.push(carry);
        let row_len = nu.part(r);
        let c = (1..=row_len)
            .find(|&j| work.get(r, j).unwrap() > carry)
            .unwrap_or(row_len + 1);
        bump_route.push(c);
        if c == row_len + 1 {
            let result = work.add_box(r, carry)?;
            break BereleRecord {
                result,
                delta: ShapeDelta::Added(r),
                terminal: TerminalRow::Unbarred(r),
                route: BereleRoute::Bump(bump_route),
                letters,
            };
        }
        let bumped = work.get(r, c).unwrap();
        if carry == 2 * r - 1 && bumped == 2 * r {
            // Cancellation: the 2r-1 and 2r annihilate through the first
            // column; the freed hole slides to rest.
            let mut punct = work.to_punctured();
            punct.set(r, c, Some(carry));
            punct.set(r, 1, None);
            let slid = slide(&punct, r, 1)?;
            let k = slid.terminal_row;
            let result = slid.tableau.to_tableau()?;
            break BereleRecord {
                result,
                delta: ShapeDelta::Removed(k),
                terminal: TerminalRow::Barred(k),
                route: BereleRoute::BumpSlide {
                    bump: bump_route,
                    slide: slid.route[1..].to_vec(),
                },
                letters,
            };
        }
        work.set(r, c, carry);
        carry = bumped;
        r += 1;
    };

    let (alt, alt_delta) = berele_via_insertion_and_slide(t, x)?;
    assert!(
        record.result == alt && record.delta == alt_delta,
        "bumping loop and insertion-plus-slide formulations disagree on ({t:?}, {x})"
    );
    Ok(record)
}

/// The sliding formulation: run the full Schensted insertion; if all bumped
/// letters stay on or above the symplectic threshold the insertion stands,
/// otherwise undo it from the first violating row, puncture, and rectify.
fn berele_via_insertion_and_slide(t: &Tableau, x: Letter) -> Result<(Tableau, ShapeDelta), Error> {
    let rec = row_insert(t, x);
    let violation = rec
        .letters
        .iter()
        .enumerate()
        .find(|(i, &xi)| xi < 2 * (i + 1) - 1);
    let Some((s_minus_1, _)) = violation else {
        return Ok((rec.result, ShapeDelta::Added(rec.final_row)));
    };
    let s = s_minus_1 + 1; // first violating row, 1-based
    let mut punct = t.to_punctured();
    punct.set(s - 1, 1, None);
    for i in 1..s {
        let c = rec.route[i - 1];
        // the write lands on domain cells only; (s-1, 1) stays a hole
        if !(i == s - 1 && c == 1) {
            punct.set(i, c, Some(rec.letters[i - 1]));
        }
    }
    let slid = slide(&punct, s - 1, 1)?;
    Ok((
        slid.tableau.to_tableau()?,
        ShapeDelta::Removed(slid.terminal_row),
    ))
}

/// The row-insertion defined through the Littlewood-Richardson map:
/// Schensted-insert, then project to the symplectic representative. Agrees
/// with [`berele_insert`] everywhere.
pub fn aii_insert(t: &Tableau, x: Letter) -> Result<Tableau, Error> {
    validate_letter(t, x)?;
    validate_symplectic(t)?;
    Ok(lr_map(&row_insert(t, x).result).p_tableau)
}

/// Inverts [`berele_insert`] given the output tableau and the shape delta
/// (which together encode the source shape).
///
/// Box added in row `r`: plain reverse bumping. Box removed in row `k`: the
/// hole is reverse-slid from the removed corner; every time it passes
/// through the first column the cancellation is tentatively undone (refill
/// `2r - 1`, reverse-bump a `2r` upward) and the candidate is accepted when
/// the forward insertion reproduces the input. A brute-force search over the
/// source fiber backs this up; the scan has never needed it.
pub fn berele_inverse(s: &Tableau, delta: ShapeDelta) -> Result<(Tableau, Letter), Error> {
    validate_symplectic(s)?;
    match delta {
        ShapeDelta::Added(r) => {
            let (t, x) = row_insert_inverse(s, r).map_err(|_| Error::NoPreimage)?;
            if !t.is_symplectic() {
                return Err(Error::NoPreimage);
            }
            let forward = berele_insert(&t, x)?;
            if forward.result == *s && forward.delta == delta {
                Ok((t, x))
            } else {
                Err(Error::NoPreimage)
            }
        }
        ShapeDelta::Removed(k) => {
            let xi = s.shape();
            let nu = xi.add_row(k).map_err(|_| Error::NoPreimage)?;
            // View s inside shape nu with a hole at the removed corner.
            let mut rows: Vec<Vec<Option<Letter>>> = s
                .rows()
                .iter()
                .map(|row| row.iter().map(|&e| Some(e)).collect())
                .collect();
            if k == rows.len() + 1 {
                rows.push(vec![None]);
            } else {
                rows[k - 1].push(None);
            }
            let mut punct = PuncturedTableau::new(rows, s.alphabet())?;
            let (mut hr, mut hc) = (k, nu.part(k));
            loop {
                if hc == 1 {
                    if let Some(found) = try_undo_cancellation(&punct, hr, s, delta) {
                        return Ok(found);
                    }
                }
                match reverse_slide_step(&mut punct, hr, hc) {
                    Some((nr, nc)) => (hr, hc) = (nr, nc),
                    None => break,
                }
            }
            // Fallback: brute-force the fiber. Desk-scale only.
            for t in crate::enumerate::spt(&nu, s.alphabet()) {
                for x in 1..=s.alphabet() {
                    let forward = berele_insert(&t, x)?;
                    if forward.result == *s && forward.delta == delta {
                        return Ok((t, x));
                    }
                }
            }
            Err(Error::NoPreimage)
        }
    }
}

/// Attempts to undo the cancellation from a state whose hole sits at
/// `(rho, 1)`: the hole refills with `2 rho - 1` and a `2 rho` is
/// reverse-bumped out. Returns the preimage only if the forward insertion
/// verifies.
fn try_undo_cancellation(
    punct: &PuncturedTableau,
    rho: usize,
    s: &Tableau,
    delta: ShapeDelta,
) -> Option<(Tableau, Letter)> {
    if 2 * rho - 1 > punct.alphabet() {
        return None;
    }
    let mut filled = punct.clone();
    filled.set(rho, 1, Some(2 * rho - 1));
    let t = filled.to_tableau().ok()?;
    let (t, x) = reverse_bump(t, rho, 2 * rho)?;
    if x == 0 || x > s.alphabet() || !t.is_semistandard() || !t.is_symplectic() {
        return None;
    }
    let forward = berele_insert(&t, x).ok()?;
    (forward.result == *s && forward.delta == delta).then_some((t, x))
}

/// The first-column pruning recursion: splits a strictly increasing word
/// into the removable pairs `rem` and the kept subword `red`.
///
/// A pair `(a_{l-1}, a_l)` is removed when `a_l` is even, `a_{l-1}`
/// immediately precedes it, and `a_l < 2l - |rem(prefix)| - 1`.
pub fn rem_red(a: &Word) -> Result<(Word, Word), Error> {
    if !a.is_strictly_increasing() {
        return Err(Error::NotStrictlyIncreasing);
    }
    let ls = a.letters();
    let mut rem_idx: Vec<Vec<usize>> = vec![Vec::new(); ls.len() + 1];
    for k in 2..=ls.len() {
        let last = ls[k - 1];
        if last % 2 == 0
            && ls[k - 2] + 1 == last
            && last + rem_idx[k - 2].len() + 1 < 2 * k
        {
            let mut v = rem_idx[k - 2].clone();
            v.push(k - 2);
            v.push(k - 1);
            rem_idx[k] = v;
        } else {
            rem_idx[k] = rem_idx[k - 1].clone();
        }
    }
    let chosen: BTreeSet<usize> = rem_idx[ls.len()].iter().copied().collect();
    let rem = Word::new(chosen.iter().map(|&i| ls[i]).collect());
    let red = Word::new(
        (0..ls.len())
            .filter(|i| !chosen.contains(i))
            .map(|i| ls[i])
            .collect(),
    );
    Ok((rem, red))
}

/// One pruning step: drop the removable pairs from the first column and
/// rebuild the unique semistandard tableau carrying the surviving word.
/// Symplectic tableaux are exactly the fixed points.
pub fn suc(t: &Tableau) -> Tableau {
    assert!(t.is_semistandard(), "suc requires a semistandard tableau");
    let column: Vec<Letter> = t.rows().iter().map(|row| row[0]).collect();
    let rest_rows: Vec<Vec<Letter>> = t
        .rows()
        .iter()
        .map(|row| row[1..].to_vec())
        .filter(|row| !row.is_empty())
        .collect();
    let rest = Tableau::new(rest_rows, t.alphabet()).expect("removing a column keeps a tableau");
    let (_, red) = rem_red(&Word::new(column)).expect("first column is strictly increasing");
    let word = red.reversed().concat(&rest.column_word());
    insertion_tableau(&word, t.alphabet())
}

/// Output of the Littlewood-Richardson map: the symplectic representative
/// and the recording tableau layering the boxes by the pruning step that
/// removed them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LrResult {
    pub p_tableau: Tableau,
    pub q_tableau: SkewTableau,
}

/// Iterates [`suc`] to its fixed point, recording in `q_tableau` the step at
/// which each box of the original shape was shed.
pub fn lr_map(t: &Tableau) -> LrResult {
    let lambda = t.shape();
    let mut layers: std::collections::BTreeMap<(usize, usize), usize> =
        std::collections::BTreeMap::new();
    let mut p = t.clone();
    let mut step = 0usize;
    loop {
        let next = suc(&p);
        if next == p {
            break;
        }
        step += 1;
        assert!(
            step <= lambda.size() + 1,
            "first-column pruning failed to converge"
        );
        let cur = p.shape();
        let smaller = next.shape();
        for cell in cur.cells() {
            if !smaller.has_cell(cell.row, cell.col) {
                layers.insert((cell.row, cell.col), step);
            }
        }
        p = next;
    }
    let nu = p.shape();
    let q_rows: Vec<Vec<Option<Letter>>> = (1..=lambda.length())
        .map(|i| {
            (1..=lambda.part(i))
                .map(|j| {
                    if nu.has_cell(i, j) {
                        None
                    } else {
                        Some(*layers
                            .get(&(i, j))
                            .expect("every shed box belongs to some pruning layer"))
                    }
                })
                .collect()
        })
        .collect();
    let alphabet = step.max(1);
    let q_tableau = PuncturedTableau::new(q_rows, alphabet)
        .expect("recording rows follow the original shape")
        .to_skew()
        .expect("pruning shrinks shapes cellwise");
    LrResult {
        p_tableau: p,
        q_tableau,
    }
}

/// The recording tableaux that occur for the given outer shape and
/// symplectic shape, computed extensionally by enumeration.
pub fn rec_set(
    lambda: &crate::partition::Partition,
    nu: &crate::partition::Partition,
    two_n: usize,
) -> BTreeSet<SkewTableau> {
    crate::enumerate::sst(lambda, two_n)
        .into_iter()
        .filter_map(|t| {
            let lr = lr_map(&t);
            (lr.p_tableau.shape() == *nu).then_some(lr.q_tableau)
        })
        .collect()
}
