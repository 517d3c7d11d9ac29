//! Dense row reduction over `F_p`.

/// Row-reduces `rows` in place and returns the rank. Rows may have any
/// common length; entries must already lie in `[0, p)`.
pub fn rank_mod_p(rows: &mut [Vec<u32>], p: u32) -> usize {
    let p64 = p as u64;
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inverse(rows[rank][col], p);
        for v in rows[rank].iter_mut() {
            *v = (*v as u64 * inv as u64 % p64) as u32;
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (v, &pv) in row.iter_mut().zip(prow.iter()).skip(col) {
                *v = ((*v as u64 + (p64 - f as u64) * pv as u64) % p64) as u32;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank_of(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    rank_mod_p(&mut rows, p)
}

fn inverse(a: u32, p: u32) -> u32 {
    let (mut base, mut e, mut acc) = (a as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Product of a `rows x inner` and an `inner x cols` matrix, both row-major.
pub fn mat_mul(a: &[Vec<u32>], b: &[Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(0u64, |acc, (&x, brow)| (acc + x as u64 * brow[j] as u64) % p as u64)
                        as u32
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank_of(vec![], 5), 0);
        assert_eq!(rank_of(vec![vec![0, 0], vec![0, 0]], 5), 0);
        assert_eq!(rank_of(vec![vec![1, 2], vec![2, 4]], 5), 1);
        assert_eq!(rank_of(vec![vec![1, 1], vec![1, 0]], 2), 2);
        // Over F_2, x+y, y+z, x+z are dependent.
        assert_eq!(rank_of(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]], 2), 2);
        assert_eq!(rank_of(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]], 3), 3);
    }

    // Brute-force oracle: rank is the size of the largest independent set
    // found by enumerating all combinations over F_p.
    fn brute_rank(rows: &[Vec<u32>], p: u32) -> usize {
        let n = rows.len();
        let cols = rows.first().map_or(0, |r| r.len());
        let mut span: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
        let total = (p as usize).pow(n as u32);
        for idx in 0..total {
            let mut coeffs = Vec::with_capacity(n);
            let mut t = idx;
            for _ in 0..n {
                coeffs.push((t % p as usize) as u32);
                t /= p as usize;
            }
            let v: Vec<u32> = (0..cols)
                .map(|j| {
                    rows.iter()
                        .zip(&coeffs)
                        .fold(0u32, |acc, (r, c)| (acc + r[j] * c) % p)
                })
                .collect();
            span.insert(v);
        }
        let mut size = span.len();
        let mut r = 0;
        while size > 1 {
            size /= p as usize;
            r += 1;
        }
        r
    }

    proptest! {
        #[test]
        fn rank_matches_span_count(
            p in prop::sample::select(vec![2u32, 3]),
            rows in prop::collection::vec(prop::collection::vec(0u32..3, 3), 0..5),
        ) {
            let rows: Vec<Vec<u32>> = rows.into_iter().map(|r| r.into_iter().map(|v| v % p).collect()).collect();
            prop_assert_eq!(rank_of(rows.clone(), p), brute_rank(&rows, p));
        }
    }
}
