//! Exact dense linear algebra over `Q(i)`.

use super::GaussianRational;

/// A row-major matrix.
pub type Matrix = Vec<Vec<GaussianRational>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce(rows: &mut Matrix) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..width {
        let Some(found) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, found);
        let inv = rows[next_row][col].inv().expect("pivot is nonzero");
        for entry in rows[next_row].iter_mut() {
            *entry = &*entry * &inv;
        }
        let pivot_row = rows[next_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *entry -= &(&factor * p);
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<GaussianRational>]) -> usize {
    let mut work = rows.to_vec();
    row_reduce(&mut work).len()
}

/// A basis of `{ v : M·v = 0 }` for an `r × c` matrix `M`.
pub fn kernel(rows: &[Vec<GaussianRational>], width: usize) -> Matrix {
    let mut work = rows.to_vec();
    let pivots = row_reduce(&mut work);
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![GaussianRational::zero(); width];
            v[f] = GaussianRational::one();
            for (row, &p) in work.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// `rows` transposed; `width` is the column count when `rows` may be empty.
pub fn transpose(rows: &[Vec<GaussianRational>], width: usize) -> Matrix {
    (0..width).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: i64) -> GaussianRational {
        GaussianRational::from(v)
    }

    #[test]
    fn rank_and_kernel() {
        let m = vec![vec![g(1), g(2), g(3)], vec![g(2), g(4), g(6)]];
        assert_eq!(rank(&m), 1);
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot = m[0].iter().zip(v).fold(g(0), |acc, (a, b)| &acc + &(a * b));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn complex_rank() {
        let i = GaussianRational::i();
        let m = vec![vec![g(1), i.clone()], vec![i.clone(), g(-1)]];
        assert_eq!(rank(&m), 1);
    }
}
