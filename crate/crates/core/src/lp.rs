//! Phase-one simplex over exact rationals for `{x >= 0 : Ax = b}`.
//!
//! Dense tableau, one artificial variable per row, Bland's smallest-index
//! rule for both the entering and the leaving variable.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Q = BigRational;

/// A point of `{x >= 0 : Ax = b}`, or `None` when the system is infeasible.
///
/// Panics when the rows of `a` do not all have the same length as the
/// number of columns or `b` has the wrong length.
pub fn feasible_point(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let m = a.len();
    assert_eq!(b.len(), m, "rhs length");
    let n = a.first().map(|r| r.len()).unwrap_or(0);
    assert!(a.iter().all(|r| r.len() == n), "ragged constraint matrix");
    if m == 0 {
        return Some(vec![Q::zero(); n]);
    }

    // Columns: n originals, m artificials, then the right-hand side.
    let width = n + m + 1;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut r = Vec::with_capacity(width);
        r.extend(row.iter().map(|x| if flip { -x } else { x.clone() }));
        r.extend((0..m).map(|j| if j == i { Q::from_integer(1.into()) } else { Q::zero() }));
        r.push(if flip { -rhs } else { rhs.clone() });
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Reduced costs of the phase-one objective (sum of artificials).
    let mut z: Vec<Q> =
        (0..width).map(|j| if j >= n && j < n + m { Q::zero() } else { -t.iter().map(|r| &r[j]).sum::<Q>() }).collect();

    loop {
        let Some(enter) = (0..n).find(|&j| z[j].is_negative()) else { break };
        let mut leave: Option<(usize, Q)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // The phase-one objective is bounded below by 0.
        let (pr, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut t, &mut z, pr, enter);
        basis[pr] = enter;
    }

    if !z[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (i, &v) in basis.iter().enumerate() {
        if v < n {
            x[v] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

pub fn is_feasible(a: &[Vec<Q>], b: &[Q]) -> bool {
    feasible_point(a, b).is_some()
}

fn pivot(t: &mut [Vec<Q>], z: &mut [Q], pr: usize, pc: usize) {
    let p = t[pr][pc].clone();
    for x in t[pr].iter_mut() {
        *x /= &p;
    }
    let prow = t[pr].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i != pr && !row[pc].is_zero() {
            let f = row[pc].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }
    if !z[pc].is_zero() {
        let f = z[pc].clone();
        for (x, y) in z.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}
