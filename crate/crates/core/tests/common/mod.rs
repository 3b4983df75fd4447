//! Reference implementations used as oracles by the integration tests.  None
//! of these reuse the library's enumeration or arithmetic code.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::Rng;
use weylhom::Partition;

pub fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// Exact binomial coefficient.
pub fn binom_exact(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::from(0u32);
    }
    let b = b.min(a - b);
    let mut acc = BigUint::from(1u32);
    for i in 0..b {
        acc *= BigUint::from(a - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

pub fn binom_exact_mod(a: u64, b: u64, p: u64) -> u64 {
    let r = binom_exact(a, b) % BigUint::from(p);
    r.to_u64_digits().first().copied().unwrap_or(0)
}

/// Small binomials by Pascal's rule in i128, for coefficients that fit.
pub fn binom_small(a: u64, b: u64) -> i128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Number of fillings of the diagram of `mu` with entries `1..=n` having
/// content `alpha`, rows weakly increasing and columns strictly increasing.
/// Cell-by-cell backtracking over the diagram in reading order.
pub fn kostka_bruteforce(mu: &[u32], alpha: &[u32]) -> u64 {
    let cells: Vec<(usize, usize)> = mu
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<u32>> = mu.iter().map(|&l| vec![0; l as usize]).collect();
    let mut left = alpha.to_vec();
    fn rec(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, left: &mut Vec<u32>) -> u64 {
        if k == cells.len() {
            return left.iter().all(|&x| x == 0) as u64;
        }
        let (i, j) = cells[k];
        let mut total = 0;
        for e in 1..=left.len() as u32 {
            if left[e as usize - 1] == 0 {
                continue;
            }
            if j > 0 && grid[i][j - 1] > e {
                continue;
            }
            if i > 0 && grid[i - 1][j] >= e {
                continue;
            }
            grid[i][j] = e;
            left[e as usize - 1] -= 1;
            total += rec(k + 1, cells, grid, left);
            left[e as usize - 1] += 1;
        }
        total
    }
    rec(0, &cells, &mut grid, &mut left)
}

/// `Π_{i<j} (μ_i - μ_j + j - i) / (j - i)` over `n` letters.
pub fn weyl_dimension(mu: &[u32], n: usize) -> u128 {
    let m = |i: usize| mu.get(i).copied().unwrap_or(0) as i128;
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            num *= m(i) - m(j) + (j - i) as i128;
            den *= (j - i) as i128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    assert_eq!(den, 1);
    num as u128
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// All partitions of `r`, generated independently of the library.
pub fn partitions(r: u32) -> Vec<Vec<u32>> {
    fn rec(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for x in (1..=left.min(max)).rev() {
            cur.push(x);
            rec(left - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, &mut Vec::new(), &mut out);
    out
}

/// All vectors of length `n` with entries summing to `r`.
pub fn compositions(r: u32, n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if r == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=r {
        for mut rest in compositions(r - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every filling of the two-row diagram `(m1, m2)` with entries `1..=n` whose
/// rows are weakly increasing, as row-count matrices.
pub fn row_sorted_fillings(shape: &[u32], n: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out: Vec<Vec<Vec<u32>>> = vec![vec![]];
    for &len in shape {
        let rows = compositions(len, n);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                rows.iter().map(move |row| {
                    let mut v = prefix.clone();
                    v.push(row.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// Expected pre-straightening expansion of `φ_T(x_{i,t})` read off the closed
/// form: `Σ_{j_1+…+j_{i+1}=t} Π_{s≤i} C(a_{s,i}+j_s, j_s) · [T with j_s copies
/// of i+1 in row s replaced by i]`, reduced mod p with zero terms dropped.
/// `i` is 1-based; `counts[s][e]` is the number of `e+1` in row `s+1`.
pub fn closed_form_relation_image(
    counts: &[Vec<u32>],
    i: usize,
    t: u32,
    p: u64,
) -> BTreeMap<Vec<Vec<u32>>, u64> {
    let rows = counts.len();
    let mut out = BTreeMap::new();
    let head = (i + 1).min(rows);
    let bounds: Vec<u32> = (0..head).map(|s| counts[s][i]).collect();
    let mut js = vec![0u32; head];
    fn rec(
        s: usize,
        left: u32,
        bounds: &[u32],
        js: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if s == bounds.len() {
            if left == 0 {
                visit(js);
            }
            return;
        }
        for j in 0..=left.min(bounds[s]) {
            js[s] = j;
            rec(s + 1, left - j, bounds, js, visit);
        }
        js[s] = 0;
    }
    rec(0, t, &bounds, &mut js, &mut |js| {
        let mut coeff: u64 = 1;
        let mut c = counts.to_vec();
        for (s, &j) in js.iter().enumerate() {
            if s < i {
                coeff = coeff * binom_exact_mod((counts[s][i - 1] + j) as u64, j as u64, p) % p;
            }
            c[s][i - 1] += j;
            c[s][i] -= j;
        }
        if coeff != 0 {
            out.insert(c, coeff);
        }
    });
    out
}

pub fn random_partition<R: Rng>(rng: &mut R, r: u32) -> Vec<u32> {
    let all = partitions(r);
    all[rng.gen_range(0..all.len())].clone()
}
