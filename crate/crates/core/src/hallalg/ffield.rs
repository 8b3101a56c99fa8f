//! Linear algebra over `F_p` and subspace enumeration.

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Row-reduces in place, drops zero rows, returns pivot columns.
pub(crate) fn rref_mod(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p);
        rows[r].iter_mut().for_each(|x| *x = *x * inv % p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank_mod(vectors: &[Vec<u64>], p: u64) -> usize {
    let mut rows = vectors.to_vec();
    rref_mod(&mut rows, p).len()
}

/// `m · v` where `m` has `rows × v.len()` entries.
pub(crate) fn apply(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (a, b)| (acc + a * b) % p))
        .collect()
}

pub(crate) fn mat_mul(
    a: &[Vec<u64>],
    b: &[Vec<u64>],
    inner: usize,
    cols: usize,
    p: u64,
) -> Vec<Vec<u64>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(0, |acc, k| (acc + row[k] * b[k][j]) % p))
                .collect()
        })
        .collect()
}

/// Calls `f` with a basis of every `k`-dimensional subspace of `F_p^d` containing
/// `span(base)`. Returns `false` early if `f` does.
pub(crate) fn for_each_superspace(
    d: usize,
    base: &[Vec<u64>],
    k: usize,
    p: u64,
    f: &mut dyn FnMut(&[Vec<u64>]) -> bool,
) -> bool {
    let mut s = base.to_vec();
    let pivots = rref_mod(&mut s, p);
    if s.len() > k {
        return true;
    }
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    let m = free.len();
    let extra = k - s.len();
    let mut chosen = Vec::with_capacity(extra);
    pivot_sets(m, extra, 0, &mut chosen, &mut |piv| {
        // Free entries of an RREF matrix with these pivots.
        let slots: Vec<(usize, usize)> = (0..extra)
            .flat_map(|r| {
                (piv[r] + 1..m)
                    .filter(|c| !piv.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut vals = vec![0u64; slots.len()];
        loop {
            let mut basis = s.clone();
            for r in 0..extra {
                let mut v = vec![0u64; d];
                v[free[piv[r]]] = 1;
                basis.push(v);
            }
            for (&(r, c), &x) in slots.iter().zip(&vals) {
                basis[s.len() + r][free[c]] = x;
            }
            if !f(&basis) {
                return false;
            }
            // Odometer over F_p^slots.
            let mut i = 0;
            while i < vals.len() {
                vals[i] += 1;
                if vals[i] < p {
                    break;
                }
                vals[i] = 0;
                i += 1;
            }
            if i == vals.len() {
                return true;
            }
        }
    })
}

fn pivot_sets(
    m: usize,
    k: usize,
    start: usize,
    cur: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if cur.len() == k {
        return f(cur);
    }
    for c in start..m {
        if m - c < k - cur.len() {
            break;
        }
        cur.push(c);
        let go = pivot_sets(m, k, c + 1, cur, f);
        cur.pop();
        if !go {
            return false;
        }
    }
    true
}

/// Number of `k`-dimensional subspaces of `F_p^d`.
pub(crate) fn gaussian_binomial(d: usize, k: usize, p: u64) -> f64 {
    if k > d {
        return 0.0;
    }
    let p = p as f64;
    (0..k)
        .map(|i| (p.powi((d - i) as i32) - 1.0) / (p.powi((i + 1) as i32) - 1.0))
        .product()
}

pub(crate) fn primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = 2u64;
    while out.len() < count {
        if out
            .iter()
            .take_while(|&&p| p * p <= c)
            .all(|&p| !c.is_multiple_of(p))
        {
            out.push(c);
        }
        c += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(d: usize, base: &[Vec<u64>], k: usize, p: u64) -> usize {
        let mut n = 0;
        for_each_superspace(d, base, k, p, &mut |_| {
            n += 1;
            true
        });
        n
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        for p in [2, 3, 5] {
            for d in 0..=4 {
                for k in 0..=d {
                    assert_eq!(
                        count(d, &[], k, p) as f64,
                        gaussian_binomial(d, k, p).round(),
                        "d={d} k={k} p={p}"
                    );
                }
            }
        }
        // Planes in F_3^3 through a fixed line: as many as lines in F_3^2.
        assert_eq!(count(3, &[vec![1, 1, 0]], 2, 3), 4);
        assert_eq!(count(2, &[vec![1, 0], vec![0, 1]], 1, 3), 0);
    }

    #[test]
    fn linear_algebra_mod_p() {
        assert_eq!(inv_mod(3, 7), 5);
        assert_eq!(rank_mod(&[vec![1, 2], vec![2, 4]], 5), 1);
        assert_eq!(rank_mod(&[vec![1, 2], vec![2, 4]], 3), 1);
        assert_eq!(rank_mod(&[vec![1, 1], vec![1, 2]], 2), 2);
        assert_eq!(apply(&[vec![1, 1]], &[1, 1], 2), vec![0]);
        assert_eq!(primes(8), vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
