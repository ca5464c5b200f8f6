//! Jeu de taquin: sliding a hole forward (right/down) or in reverse
//! (left/up), sliding routes, rectification, and reverse rectification.

use crate::error::Error;
use crate::partition::Cell;
use crate::tableau::{PuncturedTableau, SkewTableau, Tableau};

/// The result of sliding one hole to rest: the new tableau, the route
/// `(gamma_{r-1}, gamma_r, ..., gamma_k)` listing the starting column and
/// then the column at which the hole leaves (or ends in) each visited row,
/// and the terminal row `k`.
///
/// The route is weakly increasing and the final hole `(k, gamma_k)` is not
/// slidable. A hole that cannot slide yields route `(c, c)` and terminal
/// row `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlideResult {
    pub tableau: PuncturedTableau,
    pub route: Vec<usize>,
    pub terminal_row: usize,
}

/// One forward move of the hole at `(r, c)`: right if the right neighbor is
/// strictly smaller than the one below, down otherwise, with missing
/// neighbors treated as infinitely large. Returns the new hole position, or
/// `None` when the hole is not slidable.
fn slide_step(t: &mut PuncturedTableau, r: usize, c: usize) -> Option<(usize, usize)> {
    let right = t.get(r, c + 1);
    let below = t.get(r + 1, c);
    let (nr, nc) = match (right, below) {
        (None, None) => return None,
        (Some(_), None) => (r, c + 1),
        (None, Some(_)) => (r + 1, c),
        (Some(x), Some(y)) => {
            if x < y {
                (r, c + 1)
            } else {
                (r + 1, c)
            }
        }
    };
    t.set(r, c, t.get(nr, nc));
    t.set(nr, nc, None);
    Some((nr, nc))
}

/// One reverse move of the hole at `(r, c)`: left if the left neighbor is
/// strictly larger than the one above, up otherwise, with missing neighbors
/// treated as infinitely small. Returns the new hole position, or `None`
/// when the hole is not reversely slidable.
pub(crate) fn reverse_slide_step(
    t: &mut PuncturedTableau,
    r: usize,
    c: usize,
) -> Option<(usize, usize)> {
    let left = if c > 1 { t.get(r, c - 1) } else { None };
    let above = if r > 1 { t.get(r - 1, c) } else { None };
    let (nr, nc) = match (left, above) {
        (None, None) => return None,
        (Some(_), None) => (r, c - 1),
        (None, Some(_)) => (r - 1, c),
        (Some(x), Some(y)) => {
            if x > y {
                (r, c - 1)
            } else {
                (r - 1, c)
            }
        }
    };
    t.set(r, c, t.get(nr, nc));
    t.set(nr, nc, None);
    Some((nr, nc))
}

/// Slides the hole at `(r, c)` until it is no longer slidable, recording the
/// route and terminal row.
///
/// The input must be semistandard. The output is semistandard whenever the
/// other holes sit weakly above-left of the sliding region (single holes,
/// first-column holes, skew shapes); scattered hole patterns can merge
/// incomparable entries into one column, in which case the output is still
/// the literal algorithm result but no longer semistandard. The row word's
/// Knuth class is preserved whenever `(r, c)` is the lexicographically
/// latest slidable hole.
pub fn slide(t: &PuncturedTableau, r: usize, c: usize) -> Result<SlideResult, Error> {
    let shape = t.shape();
    if !shape.holes().contains(&Cell::new(r, c)) {
        return Err(Error::NotAHole { cell: Cell::new(r, c) });
    }
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    let mut out = t.clone();
    let (mut hr, mut hc) = (r, c);
    // gamma_{r-1} = c, then the column at which the hole leaves each row.
    let mut route = vec![c];
    loop {
        match slide_step(&mut out, hr, hc) {
            Some((nr, nc)) => {
                if nr > hr {
                    route.push(hc);
                }
                (hr, hc) = (nr, nc);
            }
            None => {
                route.push(hc);
                return Ok(SlideResult {
                    tableau: out,
                    route,
                    terminal_row: hr,
                });
            }
        }
    }
}

/// Reverse-slides the hole at `(r, c)` until it is no longer reversely
/// slidable.
pub fn reverse_slide(t: &PuncturedTableau, r: usize, c: usize) -> Result<PuncturedTableau, Error> {
    let shape = t.shape();
    if !shape.holes().contains(&Cell::new(r, c)) {
        return Err(Error::NotAHole { cell: Cell::new(r, c) });
    }
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    let mut out = t.clone();
    let (mut hr, mut hc) = (r, c);
    while let Some((nr, nc)) = reverse_slide_step(&mut out, hr, hc) {
        (hr, hc) = (nr, nc);
    }
    Ok(out)
}

/// Repeatedly slides the lexicographically latest slidable hole until none
/// remain, then reads the domain as a plain tableau.
///
/// Errors with `NotSemistandard` if an intermediate slide lands outside the
/// semistandard world (possible only for scattered multi-hole inputs; see
/// [`slide`]).
pub fn rectify(t: &PuncturedTableau) -> Result<Tableau, Error> {
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    let mut cur = t.clone();
    loop {
        let holes = cur.shape().slidable_holes();
        match holes.last() {
            Some(&h) => {
                cur = slide(&cur, h.row, h.col)?.tableau;
            }
            None => {
                return cur.to_tableau();
            }
        }
    }
}

/// Repeatedly reverse-slides the lexicographically first reversely slidable
/// hole until none remain, then reads the domain as a skew tableau.
pub fn reverse_rectify(t: &PuncturedTableau) -> Result<SkewTableau, Error> {
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    let mut cur = t.clone();
    loop {
        let holes = cur.shape().reversely_slidable_holes();
        match holes.first() {
            Some(&h) => {
                cur = reverse_slide(&cur, h.row, h.col)?;
            }
            None => {
                return cur.to_skew();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::partition::Partition;
    use crate::word::insertion_tableau;

    fn punctured(rows: Vec<Vec<Option<usize>>>, alphabet: usize) -> PuncturedTableau {
        PuncturedTableau::new(rows, alphabet).unwrap()
    }

    #[test]
    fn slide_worked_example() {
        let t = fixtures::sliding_example();
        let res = slide(&t, 2, 1).unwrap();
        assert_eq!(res.tableau, fixtures::sliding_example_result());
        assert_eq!(res.route, vec![1, 3, 3, 3]);
        assert_eq!(res.terminal_row, 4);
    }

    #[test]
    fn slide_stationary_hole() {
        // Nothing right or below: the tableau is unchanged.
        let t = punctured(vec![vec![Some(1), Some(2)], vec![Some(2), None]], 4);
        let res = slide(&t, 2, 2).unwrap();
        assert_eq!(res.tableau, t);
        assert_eq!(res.route, vec![2, 2]);
        assert_eq!(res.terminal_row, 2);
    }

    #[test]
    fn slide_single_step() {
        let t = punctured(vec![vec![None, Some(1)], vec![Some(2)]], 4);
        let res = slide(&t, 1, 1).unwrap();
        assert_eq!(
            res.tableau,
            punctured(vec![vec![Some(1), None], vec![Some(2)]], 4)
        );
        assert_eq!(res.route, vec![1, 2]);
        assert_eq!(res.terminal_row, 1);
    }

    #[test]
    fn slide_errors() {
        let t = punctured(vec![vec![Some(1), Some(2)]], 4);
        assert!(matches!(slide(&t, 1, 1), Err(Error::NotAHole { .. })));
        let bad = punctured(vec![vec![Some(2), Some(1), None]], 4);
        assert!(matches!(slide(&bad, 1, 3), Err(Error::NotSemistandard)));
    }

    #[test]
    fn route_matches_min_formula() {
        // gamma_i = min{ j >= gamma_{i-1} : T(i+1, j) <= T(i, j+1) } computed
        // on the original tableau, out-of-domain cells reading as infinity.
        let check = |t: &PuncturedTableau, r: usize, c: usize| {
            let res = slide(t, r, c).unwrap();
            let width = t.shape().shape().part(1) + 2;
            let le = |a: Option<usize>, b: Option<usize>| match (a, b) {
                (None, _) => b.is_none(),
                (Some(_), None) => true,
                (Some(x), Some(y)) => x <= y,
            };
            let mut prev = c;
            for (idx, &got) in res.route.iter().enumerate().skip(1) {
                let i = r + idx - 1;
                let gamma = (prev..=width)
                    .find(|&j| le(t.get(i + 1, j), t.get(i, j + 1)))
                    .unwrap();
                assert_eq!(got, gamma, "row {i} of route for {t:?}");
                prev = gamma;
            }
        };
        check(&fixtures::sliding_example(), 2, 1);
        for lam in crate::enumerate::partitions(5, 5) {
            for (t, hole) in one_hole_tableaux(&lam, 4) {
                check(&t, hole.row, hole.col);
            }
        }
    }

    fn one_hole_tableaux(
        lam: &Partition,
        alphabet: usize,
    ) -> Vec<(PuncturedTableau, Cell)> {
        let mut out = Vec::new();
        for cell in lam.cells() {
            let pp = crate::partition::PuncturedPartition::new(
                lam.clone(),
                [cell].into_iter().collect(),
            )
            .unwrap();
            for t in crate::enumerate::sst_punctured(&pp, alphabet) {
                out.push((t, cell));
            }
        }
        out
    }

    #[test]
    fn reverse_slide_worked_example() {
        let t = fixtures::sliding_example_result();
        let res = reverse_slide(&t, 4, 3).unwrap();
        let expected = punctured(
            vec![
                vec![None, Some(1), Some(2), Some(2), Some(3)],
                vec![Some(1), Some(3), Some(3), Some(8)],
                vec![Some(6), Some(6), Some(8)],
                vec![Some(8), Some(8), Some(9)],
                vec![Some(9)],
            ],
            9,
        );
        assert_eq!(res, expected);
    }

    #[test]
    fn reverse_slide_stationary() {
        let t = punctured(vec![vec![None, Some(1)], vec![Some(2)]], 4);
        assert_eq!(reverse_slide(&t, 1, 1).unwrap(), t);
    }

    #[test]
    fn slide_then_reverse_round_trip() {
        // For a single hole whose start is not reversely slidable and whose
        // forward route stays in one row or one column, the reverse slide
        // retraces it exactly. (Without the start condition the reverse
        // slide overshoots: [[1,o,2]] slides to [[1,2,o]] but reverses to
        // [[o,1,2]].)
        let t = punctured(vec![vec![Some(1), None, Some(2)]], 4);
        let fwd = slide(&t, 1, 2).unwrap();
        assert_eq!(
            reverse_slide(&fwd.tableau, 1, 3).unwrap(),
            punctured(vec![vec![None, Some(1), Some(2)]], 4)
        );

        let mut checked = 0usize;
        for lam in crate::enumerate::partitions(5, 5) {
            for (t, hole) in one_hole_tableaux(&lam, 4) {
                if t.shape().is_reversely_slidable(hole) {
                    continue;
                }
                let res = slide(&t, hole.row, hole.col).unwrap();
                let straight =
                    res.terminal_row == hole.row || res.route.iter().all(|&g| g == hole.col);
                if !straight {
                    continue;
                }
                let hr = res.terminal_row;
                let hc = *res.route.last().unwrap();
                assert_eq!(reverse_slide(&res.tableau, hr, hc).unwrap(), t, "{t:?}");
                checked += 1;
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn rectify_worked_example() {
        let t = fixtures::rectification_example();
        assert_eq!(rectify(&t).unwrap(), fixtures::rectification_example_result());
    }

    #[test]
    fn rectify_hole_free_is_identity() {
        let t = fixtures::berele_input_example();
        assert_eq!(rectify(&t.to_punctured()).unwrap(), t);
    }

    #[test]
    fn rectify_agrees_with_insertion_tableau() {
        let t = fixtures::punctured_example();
        assert_eq!(
            rectify(&t).unwrap(),
            insertion_tableau(&t.row_word(), t.alphabet())
        );
    }

    #[test]
    fn reverse_rectify_worked_example() {
        let t = punctured(
            vec![
                vec![Some(1), Some(1), Some(2), Some(2), Some(3)],
                vec![Some(3), Some(3), Some(8), Some(8)],
                vec![Some(6), Some(6), Some(9)],
                vec![Some(8), Some(8), None],
                vec![Some(9)],
                vec![None],
            ],
            9,
        );
        let skew = reverse_rectify(&t).unwrap();
        assert_eq!(skew.outer(), Partition::new(vec![5, 4, 3, 3, 1, 1]));
        assert_eq!(skew.inner(), Partition::new(vec![1, 1]));
        let expected = punctured(
            vec![
                vec![None, Some(1), Some(2), Some(2), Some(3)],
                vec![None, Some(3), Some(3), Some(8)],
                vec![Some(1), Some(6), Some(8)],
                vec![Some(6), Some(8), Some(9)],
                vec![Some(8)],
                vec![Some(9)],
            ],
            9,
        );
        assert_eq!(skew.as_punctured(), &expected);
    }

    #[test]
    fn reverse_rectify_hole_free() {
        let t = fixtures::berele_input_example().to_punctured();
        let skew = reverse_rectify(&t).unwrap();
        assert_eq!(skew.inner(), Partition::empty());
        assert_eq!(skew.as_punctured(), &t);
    }

    #[test]
    fn rectify_of_reverse_rectify_is_rectify() {
        let t = fixtures::rectification_example();
        let skew = reverse_rectify(&t).unwrap();
        assert_eq!(
            rectify(skew.as_punctured()).unwrap(),
            rectify(&t).unwrap()
        );
    }

    #[test]
    fn first_column_holes_give_column_word() {
        // When all holes sit in column 1, rectification realizes the column
        // word: w_row(Rect(T)) is Knuth equivalent to w_col(T).
        let mut cases = 0usize;
        for lam in crate::enumerate::partitions(6, 6) {
            let rows = lam.length();
            for mask in 0u32..(1 << rows) {
                let holes: std::collections::BTreeSet<Cell> = (0..rows)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| Cell::new(i + 1, 1))
                    .collect();
                let pp =
                    crate::partition::PuncturedPartition::new(lam.clone(), holes).unwrap();
                for t in crate::enumerate::sst_punctured(&pp, 3) {
                    let rect = rectify(&t).unwrap();
                    assert!(crate::word::knuth_equivalent(
                        &rect.row_word(),
                        &t.column_word()
                    ));
                    cases += 1;
                }
            }
        }
        assert!(cases > 500);
    }
}
