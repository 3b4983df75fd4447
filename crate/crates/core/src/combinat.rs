//! Small enumeration helpers shared by the tableau and divided-power code.

/// Calls `f` on every vector `v` with `v[s] <= bounds[s]` and `Σ v = total`,
/// in lexicographic order.
pub fn for_each_bounded_composition<F: FnMut(&[u32])>(total: u32, bounds: &[u32], mut f: F) {
    let mut suffix = vec![0u64; bounds.len() + 1];
    for s in (0..bounds.len()).rev() {
        suffix[s] = suffix[s + 1] + bounds[s] as u64;
    }
    if suffix[0] < total as u64 {
        return;
    }
    let mut cur = vec![0u32; bounds.len()];
    rec(0, total, bounds, &suffix, &mut cur, &mut f);

    fn rec<F: FnMut(&[u32])>(
        s: usize,
        rest: u32,
        bounds: &[u32],
        suffix: &[u64],
        cur: &mut Vec<u32>,
        f: &mut F,
    ) {
        if s == bounds.len() {
            if rest == 0 {
                f(cur);
            }
            return;
        }
        let lo = (rest as u64).saturating_sub(suffix[s + 1]) as u32;
        let hi = bounds[s].min(rest);
        for x in lo..=hi {
            cur[s] = x;
            rec(s + 1, rest - x, bounds, suffix, cur, f);
        }
        cur[s] = 0;
    }
}

/// Calls `f` on every nonnegative integer matrix with the given row and
/// column sums, in lexicographic order of the concatenated rows.
pub fn for_each_contingency_table<F: FnMut(&[Vec<u32>])>(
    row_sums: &[u32],
    col_sums: &[u32],
    mut f: F,
) {
    let rs: u64 = row_sums.iter().map(|&x| x as u64).sum();
    let cs: u64 = col_sums.iter().map(|&x| x as u64).sum();
    if rs != cs {
        return;
    }
    let mut table = vec![vec![0u32; col_sums.len()]; row_sums.len()];
    let mut remaining = col_sums.to_vec();
    rec(0, row_sums, &mut remaining, &mut table, &mut f);

    fn rec<F: FnMut(&[Vec<u32>])>(
        i: usize,
        row_sums: &[u32],
        remaining: &mut Vec<u32>,
        table: &mut Vec<Vec<u32>>,
        f: &mut F,
    ) {
        if i == row_sums.len() {
            f(table);
            return;
        }
        if i + 1 == row_sums.len() {
            table[i].copy_from_slice(remaining);
            f(table);
            return;
        }
        let bounds = remaining.clone();
        for_each_bounded_composition(row_sums[i], &bounds, |row| {
            table[i].copy_from_slice(row);
            for (r, &x) in remaining.iter_mut().zip(row) {
                *r -= x;
            }
            rec(i + 1, row_sums, remaining, table, f);
            for (r, &x) in remaining.iter_mut().zip(row) {
                *r += x;
            }
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounded_compositions() {
        let mut seen = Vec::new();
        for_each_bounded_composition(2, &[1, 2, 1], |v| seen.push(v.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![0, 1, 1],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![1, 1, 0]
            ]
        );
        let mut count = 0;
        for_each_bounded_composition(5, &[1, 1], |_| count += 1);
        assert_eq!(count, 0);
        for_each_bounded_composition(0, &[], |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn contingency_tables_2x2() {
        let mut seen = Vec::new();
        for_each_contingency_table(&[2, 1], &[1, 2], |t| seen.push(t.to_vec()));
        assert_eq!(
            seen,
            vec![vec![vec![0, 2], vec![1, 0]], vec![vec![1, 1], vec![0, 1]]]
        );
    }
}
