//! Schensted row-insertion with route/letter instrumentation, and the
//! reverse bumping that inverts it.

use crate::error::Error;
use crate::tableau::{Letter, Tableau};

/// The outcome of one row-insertion: the grown tableau plus the bumping
/// route `(c_1, ..., c_r)` (columns touched per row), the bumped letters
/// `(x_1, ..., x_r)`, and the row where the new box landed.
///
/// The route is weakly decreasing with `c_r = shape_r + 1`, the letters are
/// strictly increasing, and the result agrees with the input everywhere off
/// the route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowInsertionRecord {
    pub result: Tableau,
    pub route: Vec<usize>,
    pub letters: Vec<Letter>,
    pub final_row: usize,
}

/// Inserts `x` into `t` by row bumping.
///
/// `t` must be semistandard and hole-free, `x` in `[1, alphabet]`; the
/// operation is total on such inputs.
pub fn row_insert(t: &Tableau, x: Letter) -> RowInsertionRecord {
    assert!(
        x >= 1 && x <= t.alphabet(),
        "letter {x} outside [1, {}]",
        t.alphabet()
    );
    debug_assert!(t.is_semistandard());
    let mut result = t.clone();
    let mut route = Vec::new();
    let mut letters = Vec::new();
    let mut carry = x;
    let mut r = 1;
    loop {
        letters.push(carry);
        let row_len = result.shape().part(r);
        // First column whose entry exceeds the carried letter.
        let c = (1..=row_len)
            .find(|&j| result.get(r, j).unwrap() > carry)
            .unwrap_or(row_len + 1);
        route.push(c);
        if c == row_len + 1 {
            result = result.add_box(r, carry).expect("bumping keeps rows valid");
            return RowInsertionRecord {
                result,
                route,
                letters,
                final_row: r,
            };
        }
        let bumped = result.get(r, c).unwrap();
        result.set(r, c, carry);
        carry = bumped;
        r += 1;
    }
}

/// Undoes the rightmost-box insertion ending in row `r`: returns the unique
/// `(t, x)` with `row_insert(t, x).result == s` and `final_row == r`.
pub fn row_insert_inverse(s: &Tableau, r: usize) -> Result<(Tableau, Letter), Error> {
    let shape = s.shape();
    if !shape.is_removable_row(r) {
        return Err(Error::NotRemovable { row: r });
    }
    let mut t = s.clone();
    let carry = t.rows_mut()[r - 1].pop().unwrap();
    if t.rows_mut()[r - 1].is_empty() {
        t.rows_mut().pop();
    }
    // Column-strictness guarantees a strictly smaller entry in every row
    // above, so the walk cannot fail here.
    let (t, x) = reverse_bump(t, r - 1, carry).expect("semistandard input");
    Ok((t, x))
}

/// Walks a displaced value up from `start_row` to row 1, at each row trading
/// it with the rightmost entry strictly smaller than it. Returns the final
/// extracted letter, or `None` when some row has no smaller entry. This is
/// the unique choice that makes the round trip with `row_insert` exact.
pub(crate) fn reverse_bump(
    mut t: Tableau,
    start_row: usize,
    mut carry: Letter,
) -> Option<(Tableau, Letter)> {
    for i in (1..=start_row).rev() {
        let row = &t.rows()[i - 1];
        let j = row.iter().rposition(|&e| e < carry)?;
        let extracted = row[j];
        t.set(i, j + 1, carry);
        carry = extracted;
    }
    Some((t, carry))
}
