//! Tableaux stored as counts matrices.
//!
//! Row `i` of a tableau is determined by how many times each entry occurs in
//! it, so a tableau of shape `μ` over the alphabet `{1, …, n}` is a matrix
//! `a[i][j]` (0-based here) with row sums `μ_i`.  This is exactly the
//! exponential notation `1^(3)2^(2)4 | 2^(2)34 | 25`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{dominates, Composition, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    shape: Partition,
    alphabet: usize,
    counts: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a tableau from its counts matrix; every row must have length
    /// `alphabet` and sum to the corresponding part of `shape`.
    pub fn new(shape: Partition, alphabet: usize, counts: Vec<Vec<u32>>) -> Result<Self> {
        if counts.len() != shape.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} count rows for shape {}",
                counts.len(),
                shape
            )));
        }
        for (i, row) in counts.iter().enumerate() {
            if row.len() != alphabet {
                return Err(Error::ShapeMismatch(format!(
                    "row {} has {} letters, alphabet is {}",
                    i + 1,
                    row.len(),
                    alphabet
                )));
            }
            let s: u64 = row.iter().map(|&x| x as u64).sum();
            if s != shape.part(i) as u64 {
                return Err(Error::ShapeMismatch(format!(
                    "row {} holds {} entries, shape {} needs {}",
                    i + 1,
                    s,
                    shape,
                    shape.part(i)
                )));
            }
        }
        Ok(Tableau {
            shape,
            alphabet,
            counts,
        })
    }

    /// Builds a tableau whose shape is read off the row sums.
    pub fn from_counts(alphabet: usize, counts: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(counts.iter().map(|r| r.iter().sum()).collect())?;
        let counts: Vec<Vec<u32>> = counts.into_iter().take(shape.len()).collect();
        Tableau::new(shape, alphabet, counts)
    }

    /// Builds a tableau from rows of 1-based entries, e.g. `[[1,1,2],[2]]`.
    pub fn from_entries(alphabet: usize, rows: &[&[u32]]) -> Result<Self> {
        let mut counts = Vec::with_capacity(rows.len());
        for row in rows {
            let mut c = vec![0u32; alphabet];
            for &e in *row {
                if e == 0 || e as usize > alphabet {
                    return Err(Error::ShapeMismatch(format!(
                        "entry {e} outside alphabet 1..={alphabet}"
                    )));
                }
                c[e as usize - 1] += 1;
            }
            counts.push(c);
        }
        Tableau::from_counts(alphabet, counts)
    }

    pub(crate) fn from_parts_unchecked(
        shape: Partition,
        alphabet: usize,
        counts: Vec<Vec<u32>>,
    ) -> Self {
        debug_assert!(Tableau::new(shape.clone(), alphabet, counts.clone()).is_ok());
        Tableau {
            shape,
            alphabet,
            counts,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn counts(&self) -> &[Vec<u32>] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<Vec<u32>> {
        self.counts
    }

    /// Multiplicity of entry `j` (0-based) in row `i` (0-based).
    pub fn count(&self, i: usize, j: usize) -> u32 {
        self.counts[i][j]
    }

    pub fn weight(&self) -> Composition {
        Composition::new(
            (0..self.alphabet)
                .map(|j| self.counts.iter().map(|r| r[j]).sum())
                .collect(),
        )
    }

    /// Rows as sorted lists of 1-based entries.
    pub fn rows_as_entries(&self) -> Vec<Vec<u32>> {
        self.counts
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .flat_map(|(j, &c)| std::iter::repeat_n(j as u32 + 1, c as usize))
                    .collect()
            })
            .collect()
    }

    /// Rows weakly increase by construction; columns strictly increase iff
    /// for every row `i ≥ 2` and entry `e`, the number of entries `≤ e` in
    /// row `i` is at most the number of entries `≤ e-1` in row `i-1`.
    pub fn is_standard(&self) -> bool {
        self.counts.windows(2).all(|pair| is_column_strict(&pair[0], &pair[1]))
    }

    /// `T⁺`: insert `m` ones at the start of the top row.
    pub fn plus(&self, m: u32) -> Tableau {
        if m == 0 {
            return self.clone();
        }
        let mut counts = self.counts.clone();
        let alphabet = self.alphabet.max(1);
        if counts.is_empty() {
            counts.push(vec![0; alphabet]);
        }
        for row in counts.iter_mut() {
            row.resize(alphabet, 0);
        }
        counts[0][0] += m;
        Tableau {
            shape: self.shape.add_to_first_row(m),
            alphabet,
            counts,
        }
    }

    /// Inverse of [`Tableau::plus`]: delete `m` ones from the top row.
    pub fn minus(&self, m: u32) -> Result<Tableau> {
        if m == 0 {
            return Ok(self.clone());
        }
        let ones = self.counts.first().and_then(|r| r.first()).copied().unwrap_or(0);
        if ones < m {
            return Err(Error::Precondition(format!(
                "top row holds {ones} ones, cannot delete {m}"
            )));
        }
        let mut counts = self.counts.clone();
        counts[0][0] -= m;
        let mut parts = self.shape.parts().to_vec();
        parts[0] -= m;
        let shape = Partition::new(parts)
            .map_err(|e| Error::Precondition(format!("deleting {m} ones breaks the shape: {e}")))?;
        counts.truncate(shape.len());
        Ok(Tableau {
            shape,
            alphabet: self.alphabet,
            counts,
        })
    }

    /// Membership in the class of tableaux whose top row starts with
    /// `1^(λ₁+t)`, `0 ≤ t ≤ λ₂`, and whose row `i` only holds entries `≥ i`.
    pub fn in_class_a(&self, lambda1: u32, lambda2: u32) -> bool {
        let Some(top) = self.counts.first() else {
            return false;
        };
        let ones = top.first().copied().unwrap_or(0);
        if ones < lambda1 || ones > lambda1 + lambda2 {
            return false;
        }
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .all(|(i, row)| row.iter().take(i).all(|&c| c == 0))
    }

    /// Exponential notation, rows separated by `" | "`.  Entries above 9 are
    /// written in braces, e.g. `{10}^(2)`.
    pub fn render(&self) -> String {
        if self.counts.is_empty() {
            return "∅".to_string();
        }
        self.counts
            .iter()
            .map(|row| {
                let mut s = String::new();
                for (j, &c) in row.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let label = if j < 9 {
                        (j + 1).to_string()
                    } else {
                        format!("{{{}}}", j + 1)
                    };
                    s.push_str(&label);
                    if c > 1 {
                        s.push_str(&format!("^({c})"));
                    }
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn is_column_strict(upper: &[u32], lower: &[u32]) -> bool {
    // lower[..=e] must fit under upper[..e].
    let mut up = 0u64;
    let mut lo = 0u64;
    for (u, l) in upper.iter().zip(lower) {
        lo += *l as u64;
        if lo > up {
            return false;
        }
        up += *u as u64;
    }
    true
}

/// `Std_α(μ)`: standard tableaux of shape `μ` and weight `α`, in
/// lexicographic order of the concatenated counts rows.
pub fn enumerate_standard(mu: &Partition, alpha: &Composition) -> Result<Vec<Tableau>> {
    if !dominates(mu, alpha)? {
        return Ok(Vec::new());
    }
    let n = alpha.len();
    let m = mu.len();
    let mut out = Vec::new();
    let mut counts = vec![vec![0u32; n]; m];
    let mut remaining = alpha.parts().to_vec();
    fill_row(0, mu, &mut remaining, &mut counts, &mut |c| {
        out.push(Tableau::from_parts_unchecked(mu.clone(), n, c.to_vec()))
    });
    Ok(out)
}

/// Number of standard tableaux without materializing them.
pub fn count_standard(mu: &Partition, alpha: &Composition) -> Result<usize> {
    if !dominates(mu, alpha)? {
        return Ok(0);
    }
    let n = alpha.len();
    let mut counts = vec![vec![0u32; n]; mu.len()];
    let mut remaining = alpha.parts().to_vec();
    let mut total = 0usize;
    fill_row(0, mu, &mut remaining, &mut counts, &mut |_| total += 1);
    Ok(total)
}

fn fill_row<F: FnMut(&[Vec<u32>])>(
    i: usize,
    mu: &Partition,
    remaining: &mut Vec<u32>,
    counts: &mut Vec<Vec<u32>>,
    emit: &mut F,
) {
    let m = mu.len();
    if i == m {
        if remaining.iter().all(|&x| x == 0) {
            emit(counts);
        }
        return;
    }
    let n = remaining.len();
    // Column-strictness budget: entries ≤ j in row i may not exceed entries
    // < j in row i-1.
    let budget: Vec<u64> = if i == 0 {
        vec![u64::MAX; n]
    } else {
        let mut b = Vec::with_capacity(n);
        let mut acc = 0u64;
        for j in 0..n {
            b.push(acc);
            acc += counts[i - 1][j] as u64;
        }
        b
    };
    let mut suffix = vec![0u64; n + 1];
    for j in (0..n).rev() {
        suffix[j] = suffix[j + 1] + remaining[j] as u64;
    }
    letter(i, 0, mu.part(i) as u64, 0, &budget, &suffix, mu, remaining, counts, emit);

    #[allow(clippy::too_many_arguments)]
    fn letter<F: FnMut(&[Vec<u32>])>(
        i: usize,
        j: usize,
        need: u64,
        prefix: u64,
        budget: &[u64],
        suffix: &[u64],
        mu: &Partition,
        remaining: &mut Vec<u32>,
        counts: &mut Vec<Vec<u32>>,
        emit: &mut F,
    ) {
        let n = remaining.len();
        if j == n {
            if need == 0 {
                fill_row(i + 1, mu, remaining, counts, emit);
            }
            return;
        }
        let last_row = i + 1 == mu.len();
        let avail = remaining[j] as u64;
        let lo = if last_row {
            avail
        } else {
            need.saturating_sub(suffix[j + 1])
        };
        let hi = avail.min(need).min(budget[j].saturating_sub(prefix));
        if lo > hi {
            return;
        }
        for x in lo..=hi {
            counts[i][j] = x as u32;
            remaining[j] -= x as u32;
            letter(i, j + 1, need - x, prefix + x, budget, suffix, mu, remaining, counts, emit);
            remaining[j] += x as u32;
        }
        counts[i][j] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn nonstandard_example_from_exponential_notation() {
        let t = Tableau::from_entries(5, &[&[1, 1, 1, 2, 2, 4], &[2, 2, 3, 4], &[2, 5]]).unwrap();
        assert_eq!(t.shape(), &part(&[6, 4, 2]));
        assert_eq!(t.weight(), comp(&[3, 5, 1, 2, 1]));
        assert!(!t.is_standard());
        assert_eq!(t.render(), "1^(3)2^(2)4 | 2^(2)34 | 25");
    }

    #[test]
    fn standardness_examples() {
        assert!(Tableau::from_entries(3, &[&[3, 1, 2, 2]]).unwrap().is_standard());
        assert!(!Tableau::from_entries(2, &[&[1, 2], &[1, 2]]).unwrap().is_standard());
        assert!(Tableau::from_entries(2, &[&[1, 1], &[2, 2]]).unwrap().is_standard());
        assert!(Tableau::from_entries(3, &[&[1, 2], &[2, 3]]).unwrap().is_standard());
        assert!(!Tableau::from_entries(3, &[&[1, 3], &[2, 2]]).unwrap().is_standard());
    }

    #[test]
    fn enumerate_examples() {
        let one_row = enumerate_standard(&part(&[11]), &comp(&[8, 3])).unwrap();
        assert_eq!(one_row.len(), 1);
        assert_eq!(one_row[0].render(), "1^(8)2^(3)");

        let square = enumerate_standard(&part(&[2, 2]), &comp(&[1, 1, 1, 1])).unwrap();
        let rendered: Vec<String> = square.iter().map(Tableau::render).collect();
        assert_eq!(rendered, vec!["13 | 24", "12 | 34"]);

        let hook = enumerate_standard(&part(&[3, 1]), &comp(&[2, 2])).unwrap();
        assert_eq!(hook.len(), 1);
        assert_eq!(hook[0].render(), "1^(2)2 | 2");

        assert!(enumerate_standard(&part(&[1, 1]), &comp(&[2])).unwrap().is_empty());
        assert!(enumerate_standard(&part(&[2]), &comp(&[1])).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_standard() {
        let list = enumerate_standard(&part(&[4, 2, 1]), &comp(&[2, 2, 2, 1])).unwrap();
        assert!(!list.is_empty());
        for w in list.windows(2) {
            assert!(w[0].counts() < w[1].counts());
        }
        assert!(list.iter().all(Tableau::is_standard));
        assert_eq!(
            count_standard(&part(&[4, 2, 1]), &comp(&[2, 2, 2, 1])).unwrap(),
            list.len()
        );
    }

    #[test]
    fn plus_and_minus() {
        let t = Tableau::from_entries(2, &[&[1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2]]).unwrap();
        let tp = t.plus(3);
        assert_eq!(tp.render(), "1^(11)2^(3)");
        assert_eq!(tp.shape(), &part(&[14]));
        assert_eq!(tp.minus(3).unwrap(), t);
        assert_eq!(t.plus(0), t);

        let ex = Tableau::from_entries(3, &[&[1, 1, 2, 2], &[2, 2, 3, 3]]).unwrap();
        let exp = ex.plus(9);
        assert_eq!(exp.render(), "1^(11)2^(2) | 2^(2)3^(2)");
        assert_eq!(exp.minus(9).unwrap(), ex);

        let small = Tableau::from_entries(2, &[&[1, 1, 2]]).unwrap();
        assert!(matches!(small.minus(3), Err(Error::Precondition(_))));
    }

    #[test]
    fn class_a_membership() {
        // λ = (3, 2): top row starts with 1^(3..=5), no 1 below.
        let u = Tableau::from_entries(3, &[&[1, 1, 1, 1, 3], &[2, 3]]).unwrap();
        assert!(u.in_class_a(3, 2));
        let low = Tableau::from_entries(3, &[&[1, 1, 2, 3, 3], &[2, 3]]).unwrap();
        assert!(!low.in_class_a(3, 2));
        let one_below = Tableau::from_entries(3, &[&[1, 1, 1, 2, 3], &[1, 3]]).unwrap();
        assert!(!one_below.in_class_a(3, 2));
    }
}
