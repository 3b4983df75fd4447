//! Arithmetic in the prime field GF(p) and sparse linear algebra over it.
//!
//! Residues are plain `u64` values in `[0, p)`; the [`PrimeField`] value
//! carries the modulus and does all reductions.  The modulus is restricted to
//! `p < 2^32` so that products of two residues fit in a `u64`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A prime modulus together with the field operations of GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1 << 32) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }

    /// Reduce a signed integer into `[0, p)`.
    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in GF({})", self.p);
        self.pow(a, self.p - 2)
    }

    /// `(-1)^e`.
    pub fn sign(&self, e: u64) -> u64 {
        if e.is_multiple_of(2) {
            1 % self.p
        } else {
            self.neg(1 % self.p)
        }
    }

    /// `C(n, k) mod p` for `n < p`, by the multiplicative formula.
    fn small_binom(&self, n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let k = k.min(n - k);
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num = self.mul(num, (n - i) % self.p);
            den = self.mul(den, (i + 1) % self.p);
        }
        self.mul(num, self.inv(den))
    }

    /// `C(a, b) mod p` via Lucas' theorem (base-p digits).
    pub fn binom(&self, mut a: u64, mut b: u64) -> u64 {
        if b > a {
            return 0;
        }
        let mut acc = 1 % self.p;
        while b > 0 {
            let (ad, bd) = (a % self.p, b % self.p);
            if bd > ad {
                return 0;
            }
            acc = self.mul(acc, self.small_binom(ad, bd));
            a /= self.p;
            b /= self.p;
        }
        acc
    }

    /// `(Σ parts)! / Π parts! mod p`, as a product of binomials over prefix sums.
    pub fn multinomial(&self, parts: &[u64]) -> u64 {
        let mut acc = 1 % self.p;
        let mut total = 0u64;
        for &part in parts {
            total += part;
            acc = self.mul(acc, self.binom(total, part));
            if acc == 0 {
                return 0;
            }
        }
        acc
    }
}

/// `C(a, b) mod p`; zero when `b > a`.
pub fn binom_mod(a: u64, b: u64, p: u64) -> Result<u64> {
    Ok(PrimeField::new(p)?.binom(a, b))
}

pub fn multinomial_mod(parts: &[u64], p: u64) -> Result<u64> {
    Ok(PrimeField::new(p)?.multinomial(parts))
}

/// A sparse row: `(column, value)` pairs with strictly increasing columns and
/// nonzero values.
pub type SparseRow = Vec<(usize, u64)>;

/// Row-major sparse matrix over GF(p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<SparseRow>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    /// Builds a matrix from dense rows, dropping zeros.
    pub fn from_dense(field: &PrimeField, ncols: usize, dense: &[Vec<u64>]) -> Self {
        let mut m = SparseMatrix::new(ncols);
        for row in dense {
            assert_eq!(row.len(), ncols);
            m.push_row(
                field,
                row.iter().enumerate().map(|(c, &v)| (c, v)).collect(),
            );
        }
        m
    }

    /// Appends a row given as arbitrary `(column, value)` pairs; entries are
    /// reduced, duplicate columns summed, and zeros dropped.
    pub fn push_row(&mut self, field: &PrimeField, entries: Vec<(usize, u64)>) {
        let mut acc: BTreeMap<usize, u64> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.ncols, "column {c} out of bounds ({})", self.ncols);
            let e = acc.entry(c).or_insert(0);
            *e = field.add(*e, field.reduce(v));
        }
        self.rows
            .push(acc.into_iter().filter(|&(_, v)| v != 0).collect());
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.rows[r]
            .binary_search_by_key(&c, |&(col, _)| col)
            .map(|i| self.rows[r][i].1)
            .unwrap_or(0)
    }

    pub fn mul_vec(&self, field: &PrimeField, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ncols);
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .fold(0, |acc, &(c, x)| field.add(acc, field.mul(x, v[c])))
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn rank(&self, field: &PrimeField) -> usize {
        let mut ech = Echelon::new(*field, self.ncols);
        for row in &self.rows {
            ech.insert(row.clone());
        }
        ech.rank()
    }
}

/// Incremental row echelon form.  Pivot rows are normalized to a leading 1 and
/// keyed by their leading column; [`Echelon::reduce`] produces the unique
/// reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
    reduced: bool,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            pivots: BTreeMap::new(),
            reduced: true,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `row` against the current pivots until its leading column is
    /// not a pivot; returns `true` if it was independent and has been added.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let f = self.field;
        let mut work: BTreeMap<usize, u64> = row.into_iter().filter(|&(_, v)| v != 0).collect();
        loop {
            let Some((&lead, &val)) = work.iter().next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(prow) => {
                    let factor = f.neg(val);
                    for &(c, x) in prow {
                        let e = work.entry(c).or_insert(0);
                        *e = f.add(*e, f.mul(factor, x));
                        if *e == 0 {
                            work.remove(&c);
                        }
                    }
                }
                None => {
                    let scale = f.inv(val);
                    let normalized: SparseRow =
                        work.into_iter().map(|(c, x)| (c, f.mul(x, scale))).collect();
                    self.pivots.insert(lead, normalized);
                    self.reduced = false;
                    return true;
                }
            }
        }
    }

    /// Back-substitutes so every pivot column is zero outside its own row.
    pub fn reduce(&mut self) {
        if self.reduced {
            return;
        }
        let f = self.field;
        let leads: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for lead in leads {
            let row = self.pivots[&lead].clone();
            let mut work: BTreeMap<usize, u64> = row.iter().copied().collect();
            for &(c, x) in row.iter().skip(1) {
                if let Some(prow) = self.pivots.get(&c) {
                    // prow is already reduced: its support is c plus free columns.
                    let factor = f.neg(x);
                    for &(pc, px) in prow {
                        let e = work.entry(pc).or_insert(0);
                        *e = f.add(*e, f.mul(factor, px));
                        if *e == 0 {
                            work.remove(&pc);
                        }
                    }
                }
            }
            self.pivots.insert(lead, work.into_iter().collect());
        }
        self.reduced = true;
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn pivot_row(&self, col: usize) -> Option<&SparseRow> {
        self.pivots.get(&col)
    }

    /// Kernel basis read off the reduced form: one vector per free column, in
    /// increasing order of the free column, with a 1 in that column.
    pub fn kernel(&mut self) -> Vec<Vec<u64>> {
        self.reduce();
        let f = self.field;
        let free: Vec<usize> = (0..self.ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .collect();
        let mut slot = vec![usize::MAX; self.ncols];
        for (i, &c) in free.iter().enumerate() {
            slot[c] = i;
        }
        let mut basis: Vec<Vec<u64>> = free
            .iter()
            .map(|&c| {
                let mut v = vec![0u64; self.ncols];
                v[c] = 1;
                v
            })
            .collect();
        for (&lead, row) in &self.pivots {
            for &(c, x) in row.iter().skip(1) {
                basis[slot[c]][lead] = f.neg(x);
            }
        }
        basis
    }
}

/// Reduced-echelon basis of `{v : M v = 0}`.
pub fn kernel_basis(field: &PrimeField, m: &SparseMatrix) -> Vec<Vec<u64>> {
    let mut ech = Echelon::new(*field, m.ncols());
    for row in m.rows() {
        ech.insert(row.clone());
    }
    ech.kernel()
}

/// Some solution of `M x = b`, or `None` if the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(field: &PrimeField, m: &SparseMatrix, b: &[u64]) -> Option<Vec<u64>> {
    assert_eq!(b.len(), m.nrows());
    let n = m.ncols();
    let mut ech = Echelon::new(*field, n + 1);
    for (row, &rhs) in m.rows().iter().zip(b) {
        let mut r = row.clone();
        if rhs % field.modulus() != 0 {
            r.push((n, field.reduce(rhs)));
        }
        ech.insert(r);
    }
    if ech.pivot_row(n).is_some() {
        return None;
    }
    ech.reduce();
    let mut x = vec![0u64; n];
    for lead in ech.pivot_columns().collect::<Vec<_>>() {
        let row = ech.pivot_row(lead).unwrap();
        if let Some(&(c, v)) = row.last() {
            if c == n {
                x[lead] = v;
            }
        }
    }
    Some(x)
}
