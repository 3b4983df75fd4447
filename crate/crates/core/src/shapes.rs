//! Partitions, compositions, and the first-row stabilization `λ ↦ λ + (m)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.  Trailing zeros are
/// never stored, so two partitions are equal iff their parts are.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

/// An arbitrary finite sequence of nonnegative integers (a weight).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Partition {
    /// Validates and normalizes (trailing zeros are dropped).
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "parts {:?} are not weakly decreasing at index {}",
                parts,
                i + 1
            )));
        }
        if parts.contains(&0) {
            return Err(Error::Precondition(format!("zero inside partition {parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    pub fn transpose(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&x| x >= j).count() as u32)
                .collect(),
        )
    }

    /// `λ + (m)`: add `m` boxes to the first row.
    pub fn add_to_first_row(&self, m: u32) -> Partition {
        let mut parts = self.0.clone();
        if m == 0 {
            return self.clone();
        }
        if parts.is_empty() {
            parts.push(m);
        } else {
            parts[0] += m;
        }
        Partition(parts)
    }

    /// The partition with the first part deleted.
    pub fn without_first_row(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses `"a,b,c"` with the repetition shorthand `x^k` for `k` copies of `x`,
/// e.g. `"28,5,2^9"`.  `""` and `"0"` denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |position: usize, reason: &str| Error::Parse {
            input: s.to_string(),
            position,
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut offset = 0usize;
        for token in s.split(',') {
            let start = offset + 1;
            offset += token.len() + 1;
            let tok = token.trim();
            if tok.is_empty() {
                return Err(err(start, "empty entry"));
            }
            let (value, reps) = match tok.split_once('^') {
                Some((v, r)) => (v.trim(), r.trim()),
                None => (tok, "1"),
            };
            let value: u32 = value
                .parse()
                .map_err(|_| err(start, "expected a nonnegative integer"))?;
            let reps: usize = reps
                .parse()
                .map_err(|_| err(start, "expected a repetition count after '^'"))?;
            if let Some(&last) = parts.last() {
                if value > last {
                    return Err(err(start, "parts must be weakly decreasing"));
                }
            }
            parts.extend(std::iter::repeat_n(value, reps));
        }
        Partition::new(parts).map_err(|_| err(1, "zero part followed by a positive part"))
    }
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// The decreasing rearrangement of the nonzero parts.
    pub fn sorted(&self) -> Partition {
        let mut v: Vec<u32> = self.0.iter().copied().filter(|&x| x > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    /// `α + (m)`: add `m` to the first entry.
    pub fn add_to_first(&self, m: u32) -> Composition {
        let mut v = self.0.clone();
        if v.is_empty() {
            v.push(0);
        }
        v[0] += m;
        Composition(v)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        p.as_composition()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Dominance `μ ⊵ λ`: every prefix sum of `μ` is at least the corresponding
/// prefix sum of the decreasing rearrangement of `λ`.
pub fn dominates(mu: &Partition, lambda: &Composition) -> Result<bool> {
    if mu.degree() != lambda.degree() {
        return Err(Error::DegreeMismatch {
            left: mu.degree(),
            right: lambda.degree(),
        });
    }
    let lam = lambda.sorted();
    let n = mu.len().max(lam.len());
    let (mut sm, mut sl) = (0u64, 0u64);
    for i in 0..n {
        sm += mu.part(i) as u64;
        sl += lam.part(i) as u64;
        if sm < sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `k·p^d`, the number of boxes added by stabilization.
pub fn stabilization_amount(k: u64, d: u32, p: u64) -> Result<u32> {
    p.checked_pow(d)
        .and_then(|q| q.checked_mul(k))
        .and_then(|m| u32::try_from(m).ok())
        .ok_or_else(|| Error::Overflow(format!("{k}*{p}^{d}")))
}

/// `λ + (k·p^d)`.
pub fn stabilize(lambda: &Partition, k: u64, d: u32, p: u64) -> Result<Partition> {
    Ok(lambda.add_to_first_row(stabilization_amount(k, d, p)?))
}

/// All partitions of `r`, in reverse lexicographic order (`(r)` first).
pub fn partitions_of(r: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `r` into exactly `n` nonnegative parts, lexicographic.
pub fn compositions_of(r: u32, n: usize) -> Vec<Composition> {
    fn rec(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 1 {
            cur.push(rest);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for x in 0..=rest {
            cur.push(x);
            rec(rest - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if r == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    rec(r, n, &mut Vec::new(), &mut out);
    out
}
