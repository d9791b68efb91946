//! Smith normal form of integer matrices, exact over `BigInt`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Elementary divisors of a `rows × cols` matrix given row-major, one per
/// column: the diagonal of the Smith normal form padded with zeros, so a
/// matrix with no rows yields `cols` zeros. Nonzero divisors come first and
/// each divides the next.
pub fn elementary_divisors(matrix: &[Vec<i64>], cols: usize) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            assert_eq!(row.len(), cols, "ragged matrix");
            row.iter().map(|&v| BigInt::from(v)).collect()
        })
        .collect();
    let rows = a.len();
    let mut out = Vec::with_capacity(cols);
    for t in 0..rows.min(cols) {
        // Smallest nonzero entry of the remaining block as pivot.
        let Some((pr, pc)) = smallest(&a, t) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut clean = true;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = &a[r][t] / &a[t][t];
                let pivot_row = a[t].clone();
                for (v, p) in a[r].iter_mut().zip(&pivot_row).skip(t) {
                    *v -= &q * p;
                }
                if !a[r][t].is_zero() {
                    clean = false;
                }
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = &a[t][c] / &a[t][t];
                for row in a.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[c] -= v;
                }
                if !a[t][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // The pivot must divide the rest of the block; if some entry
                // is not a multiple, fold its row in and reduce again.
                let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !(&a[r][c] % &a[t][t]).is_zero()));
                match bad {
                    None => break,
                    Some(r) => {
                        let row = a[r].clone();
                        for (v, p) in a[t].iter_mut().zip(&row).skip(t) {
                            *v += p;
                        }
                    }
                }
            }
            if let Some((pr, pc)) = smallest_in_cross(&a, t) {
                a.swap(t, pr);
                for row in a.iter_mut() {
                    row.swap(t, pc);
                }
            }
        }
        out.push(a[t][t].abs());
    }
    out.resize(cols, BigInt::zero());
    out
}

fn smallest(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in a.iter().enumerate().skip(t) {
        for (c, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.is_none_or(|(br, bc)| v.abs() < a[br][bc].abs()) {
                best = Some((r, c));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` of the block.
fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let cells = (t..a.len()).map(|r| (r, t)).chain((t + 1..a[t].len()).map(|c| (t, c)));
    cells.filter(|&(r, c)| !a[r][c].is_zero()).min_by_key(|&(r, c)| a[r][c].abs())
}

/// Whether the divisors describe the trivial group on `cols` generators.
pub fn is_trivial(divisors: &[BigInt]) -> bool {
    divisors.iter().all(|d| d.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn divs(m: &[Vec<i64>], cols: usize) -> Vec<i64> {
        elementary_divisors(m, cols).iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(divs(&[], 2), vec![0, 0]);
        assert_eq!(divs(&[vec![0, 0]], 2), vec![0, 0]);
        assert_eq!(divs(&[vec![2, 0], vec![0, 3]], 2), vec![1, 6]);
        assert_eq!(divs(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3), vec![2, 6, 12]);
        assert_eq!(divs(&[vec![1, -1], vec![1, 1]], 2), vec![1, 2]);
    }

    fn det(m: &[Vec<i64>]) -> i128 {
        if m.len() == 1 {
            return m[0][0] as i128;
        }
        (0..m.len())
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] as i128 * det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
            .collect()
    }

    /// gcd of all k×k minors.
    fn determinantal_divisor(m: &[Vec<i64>], cols: usize, k: usize) -> i128 {
        let mut g = 0i128;
        for rs in subsets(m.len(), k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = g.gcd(&det(&minor));
            }
        }
        g
    }

    proptest! {
        #[test]
        fn products_match_minor_gcds(
            (rows, cols, m) in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
                (Just(r), Just(c), prop::collection::vec(prop::collection::vec(-9i64..10, c), r))
            })
        ) {
            let d = divs(&m, cols);
            prop_assert_eq!(d.len(), cols);
            for w in d.windows(2) {
                let divides = if w[0] == 0 { w[1] == 0 } else { w[1] % w[0] == 0 };
                prop_assert!(divides);
            }
            let mut prod = 1i128;
            for k in 1..=rows.min(cols) {
                prod *= d[k - 1] as i128;
                prop_assert_eq!(prod, determinantal_divisor(&m, cols, k));
            }
        }
    }
}
