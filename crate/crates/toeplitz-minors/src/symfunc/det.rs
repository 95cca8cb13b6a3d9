//! Exact determinants of small matrices over [`SymPoly`].

use std::collections::HashMap;

use crate::symfunc::poly::SymPoly;

/// Determinant by Laplace expansion along rows, memoized on the set of
/// active columns. Intermediate results are shared across branches, so
/// the cost is 2^d * d polynomial multiplications; the matrices here
/// stay at d <= 8, and the expansion avoids division entirely.
///
/// Rows are consumed heaviest first (tracking the permutation sign), so
/// the deep, heavily reused minors are built from the lightest rows and
/// intermediate products stay small.
pub fn determinant(matrix: &[Vec<SymPoly>]) -> SymPoly {
    let d = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == d),
        "matrix must be square"
    );
    assert!(d <= 16, "Laplace expansion is for small matrices only");
    if d == 0 {
        return SymPoly::one();
    }

    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by_key(|&i| {
        std::cmp::Reverse(matrix[i].iter().map(SymPoly::num_terms).sum::<usize>())
    });
    let rows: Vec<&[SymPoly]> = order.iter().map(|&i| matrix[i].as_slice()).collect();

    let full_mask: u32 = (1u32 << d) - 1;
    let mut memo: HashMap<u32, SymPoly> = HashMap::new();
    let det = minor_det(&rows, full_mask, d, &mut memo);

    let mut inversions = 0;
    for i in 0..d {
        for j in i + 1..d {
            if order[i] > order[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        det
    } else {
        -&det
    }
}

fn minor_det(
    rows: &[&[SymPoly]],
    cols: u32,
    d: usize,
    memo: &mut HashMap<u32, SymPoly>,
) -> SymPoly {
    if cols == 0 {
        return SymPoly::one();
    }
    if let Some(cached) = memo.get(&cols) {
        return cached.clone();
    }
    // rows are consumed top-down: the submatrix on `cols` starts at this row
    let row = d - cols.count_ones() as usize;
    let mut det = SymPoly::zero();
    let mut parity_even = true;
    for j in 0..d {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &rows[row][j];
        if !entry.is_zero() {
            let sub = minor_det(rows, cols & !(1 << j), d, memo);
            let contribution = entry * &sub;
            det = if parity_even {
                &det + &contribution
            } else {
                &det - &contribution
            };
        }
        parity_even = !parity_even;
    }
    memo.insert(cols, det.clone());
    det
}
