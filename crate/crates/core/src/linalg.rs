//! Exact rank of small integer matrices by fraction-free elimination.
//!
//! Entries stay integral throughout: every intermediate value is a minor of
//! the input matrix.  Inputs here have entries in `{-1, 0, 1}` and at most a
//! few dozen rows, so `i128` leaves orders of magnitude of headroom.

/// Rank of the matrix given as a list of rows.  Consumes its input.
pub fn rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    debug_assert!(m.iter().all(|r| r.len() == cols));
    let mut r = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pivot);
        for i in r + 1..rows {
            for j in c + 1..cols {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
    }
    r
}
