//! A small dense simplex solver used only for feasibility questions.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Whether `{y ≥ 0 : M y = rhs}` is nonempty, decided by phase one of the
/// simplex method. Entering columns follow Dantzig's rule, falling back to
/// Bland's rule after a degenerate pivot so the method cannot cycle.
pub(crate) fn feasible(m: &[Vec<Rational>], rhs: &[Rational]) -> bool {
    let rows = m.len();
    if rows == 0 {
        return true;
    }
    let cols = m[0].len();
    // Tableau columns: original variables, one artificial per row, then rhs.
    let width = cols + rows + 1;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(rows + 1);
    for (i, (row, b)) in m.iter().zip(rhs).enumerate() {
        let flip = b.is_negative();
        let mut r: Vec<Rational> = row.iter().map(|v| if flip { -v } else { v.clone() }).collect();
        r.extend((0..rows).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        r.push(if flip { -b } else { b.clone() });
        tab.push(r);
    }
    // Objective row: minimize the sum of artificials, stored as reduced costs.
    let mut obj = vec![Rational::zero(); width];
    for r in &tab {
        for (j, v) in r.iter().enumerate() {
            if j < cols || j == width - 1 {
                obj[j] -= v;
            }
        }
    }
    tab.push(obj);
    let mut basis: Vec<usize> = (cols..cols + rows).collect();
    let mut degenerate = false;
    loop {
        let obj = &tab[rows];
        let enter = if degenerate {
            (0..width - 1).find(|&j| obj[j].is_negative())
        } else {
            (0..width - 1).filter(|&j| obj[j].is_negative()).min_by(|&a, &b| obj[a].cmp(&obj[b]))
        };
        let Some(enter) = enter else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for (i, r) in tab[..rows].iter().enumerate() {
            if r[enter].is_positive() {
                let ratio = &r[width - 1] / &r[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pr, ratio)) = leave else {
            break;
        };
        degenerate = ratio.is_zero();
        let pivot = tab[pr][enter].clone();
        for v in tab[pr].iter_mut() {
            *v /= &pivot;
        }
        let prow = tab[pr].clone();
        for (i, r) in tab.iter_mut().enumerate() {
            if i != pr && !r[enter].is_zero() {
                let k = r[enter].clone();
                for (v, p) in r.iter_mut().zip(&prow) {
                    if !p.is_zero() {
                        *v -= &k * p;
                    }
                }
            }
        }
        basis[pr] = enter;
    }
    tab[rows][width - 1].is_zero()
}
