//! Symmetric-group cross-check: Specht modules from standard polytabloids over
//! GF(p), and Hom dimensions as solutions of intertwiner equations for the
//! adjacent transpositions.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfp::{kernel_basis, PrimeField, SparseMatrix};
use crate::homspace::HomSpace;
use crate::shapes::Partition;
use crate::weyl::Limits;

pub const DEFAULT_DEGREE_BOUND: u64 = 7;

/// Row index of each number `1..=r`, stored at position `number - 1`.
type Tabloid = Vec<u8>;
type TabloidVector = HashMap<Tabloid, u64>;

/// A standard Young tableau as rows of entries `1..=r`.
pub type YoungTableau = Vec<Vec<u32>>;

/// All standard Young tableaux of shape `shape`, in the order produced by
/// placing `1, 2, …, r` into the leftmost-topmost available corner first.
pub fn standard_young_tableaux(shape: &Partition) -> Vec<YoungTableau> {
    let r = shape.degree() as u32;
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.len()];
    fill(shape, 1, r, &mut rows, &mut out);
    return out;

    fn fill(shape: &Partition, next: u32, r: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<YoungTableau>) {
        if next > r {
            out.push(rows.clone());
            return;
        }
        for i in 0..rows.len() {
            let len = rows[i].len() as u32;
            let room = len < shape.part(i);
            let supported = i == 0 || (rows[i - 1].len() as u32) > len;
            if room && supported {
                rows[i].push(next);
                fill(shape, next + 1, r, rows, out);
                rows[i].pop();
            }
        }
    }
}

fn columns_of(t: &YoungTableau) -> Vec<Vec<u32>> {
    let width = t.first().map_or(0, Vec::len);
    (0..width)
        .map(|c| t.iter().take_while(|row| row.len() > c).map(|row| row[c]).collect())
        .collect()
}

fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, bool)> {
    // Heap's algorithm; each step is one transposition.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![(perm.clone(), false)];
    let mut c = vec![0usize; n];
    let mut odd = false;
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            odd = !odd;
            out.push((perm.clone(), odd));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Polytabloid `e_t = Σ_{σ ∈ C_t} sgn(σ) {σt}` for an arbitrary numbering `t`.
fn polytabloid(field: &PrimeField, t: &YoungTableau, r: usize) -> TabloidVector {
    let columns = columns_of(t);
    let per_column: Vec<Vec<(Vec<usize>, bool)>> =
        columns.iter().map(|col| permutations_with_sign(col.len())).collect();
    let mut out = TabloidVector::new();
    let mut tabloid: Tabloid = vec![0; r];
    let mut choice = vec![0usize; columns.len()];
    loop {
        let mut odd = false;
        for (c, col) in columns.iter().enumerate() {
            let (perm, sign) = &per_column[c][choice[c]];
            odd ^= *sign;
            for (row, &k) in perm.iter().enumerate() {
                tabloid[col[k] as usize - 1] = row as u8;
            }
        }
        let coeff = if odd { field.neg(1) } else { 1 };
        let entry = out.entry(tabloid.clone()).or_insert(0);
        *entry = field.add(*entry, coeff);
        // Odometer over the column permutations.
        let mut c = 0;
        loop {
            if c == columns.len() {
                out.retain(|_, v| *v != 0);
                return out;
            }
            choice[c] += 1;
            if choice[c] < per_column[c].len() {
                break;
            }
            choice[c] = 0;
            c += 1;
        }
    }
}

fn tabloid_of(t: &YoungTableau, r: usize) -> Tabloid {
    let mut out = vec![0u8; r];
    for (i, row) in t.iter().enumerate() {
        for &x in row {
            out[x as usize - 1] = i as u8;
        }
    }
    out
}

fn dense_inverse(field: &PrimeField, m: &[Vec<u64>]) -> Option<Vec<Vec<u64>>> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        let inv = field.inv(a[col][col]);
        for x in a[col].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                for j in 0..2 * n {
                    let sub = field.mul(f, a[col][j]);
                    a[r][j] = field.sub(a[r][j], sub);
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// The Specht module `S^λ` with the matrices of `s_1, …, s_{r-1}` acting on the
/// standard polytabloid basis (acting on the left, columns are images).
#[derive(Clone, Debug)]
pub struct SpechtRep {
    pub shape: Partition,
    pub field: PrimeField,
    pub basis: Vec<YoungTableau>,
    pub generators: Vec<Vec<Vec<u64>>>,
}

impl SpechtRep {
    pub fn new(shape: &Partition, p: u64) -> Result<Self> {
        Self::with_bound(shape, p, DEFAULT_DEGREE_BOUND)
    }

    pub fn with_bound(shape: &Partition, p: u64, bound: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let r = shape.degree();
        if r > bound {
            return Err(Error::DegreeBound { degree: r, bound });
        }
        let r = r as usize;
        let basis = standard_young_tableaux(shape);
        let f = basis.len();
        let polys: Vec<TabloidVector> = basis.iter().map(|t| polytabloid(&field, t, r)).collect();
        let leading: Vec<Tabloid> = basis.iter().map(|t| tabloid_of(t, r)).collect();
        let square: Vec<Vec<u64>> = leading
            .iter()
            .map(|tab| polys.iter().map(|e| e.get(tab).copied().unwrap_or(0)).collect())
            .collect();
        let inverse = dense_inverse(&field, &square)
            .ok_or_else(|| Error::Internal(format!("standard polytabloids of {shape} look dependent")))?;

        let coordinates = |v: &TabloidVector| -> Result<Vec<u64>> {
            let restricted: Vec<u64> = leading.iter().map(|tab| v.get(tab).copied().unwrap_or(0)).collect();
            let x: Vec<u64> = inverse
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&restricted)
                        .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
                })
                .collect();
            let mut residual = v.clone();
            for (k, &c) in x.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (tab, &e) in &polys[k] {
                    let entry = residual.entry(tab.clone()).or_insert(0);
                    *entry = field.sub(*entry, field.mul(c, e));
                }
            }
            if residual.values().any(|&c| c != 0) {
                return Err(Error::Internal(format!(
                    "vector outside the span of standard polytabloids for {shape}"
                )));
            }
            Ok(x)
        };

        let mut generators = Vec::with_capacity(r.saturating_sub(1));
        for i in 1..r as u32 {
            let mut m = vec![vec![0u64; f]; f];
            for (k, t) in basis.iter().enumerate() {
                let swapped: YoungTableau = t
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|&x| match x {
                                x if x == i => i + 1,
                                x if x == i + 1 => i,
                                x => x,
                            })
                            .collect()
                    })
                    .collect();
                let x = coordinates(&polytabloid(&field, &swapped, r))?;
                for (row, c) in x.into_iter().enumerate() {
                    m[row][k] = c;
                }
            }
            generators.push(m);
        }
        Ok(SpechtRep {
            shape: shape.clone(),
            field,
            basis,
            generators,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Number of linearly independent `X` with `B_g X = X A_g` for every
/// generator, where `A` acts on `source` and `B` on `target`.
pub fn intertwiner_dim(source: &SpechtRep, target: &SpechtRep) -> Result<usize> {
    if source.shape.degree() != target.shape.degree() {
        return Err(Error::DegreeMismatch {
            left: source.shape.degree(),
            right: target.shape.degree(),
        });
    }
    let field = source.field;
    let (fs, ft) = (source.dim(), target.dim());
    let var = |a: usize, b: usize| a * fs + b;
    let mut system = SparseMatrix::new(ft * fs);
    for (a_g, b_g) in source.generators.iter().zip(&target.generators) {
        for a in 0..ft {
            for c in 0..fs {
                let mut row = Vec::new();
                for b in 0..ft {
                    if b_g[a][b] != 0 {
                        row.push((var(b, c), b_g[a][b]));
                    }
                }
                for b in 0..fs {
                    if a_g[b][c] != 0 {
                        row.push((var(a, b), field.neg(a_g[b][c])));
                    }
                }
                system.push_row(&field, row);
            }
        }
    }
    Ok(kernel_basis(&field, &system).len())
}

/// `dim Hom(S^source, S^target)` over GF(p), `p` odd.
pub fn specht_hom_dim(source: &Partition, target: &Partition, p: u64) -> Result<usize> {
    specht_hom_dim_with_bound(source, target, p, DEFAULT_DEGREE_BOUND)
}

pub fn specht_hom_dim_with_bound(source: &Partition, target: &Partition, p: u64, bound: u64) -> Result<usize> {
    if p == 2 {
        return Err(Error::OracleRequiresOddPrime(p));
    }
    let a = SpechtRep::with_bound(source, p, bound)?;
    let b = SpechtRep::with_bound(target, p, bound)?;
    intertwiner_dim(&a, &b)
}

/// Which symmetric-group Hom space a Weyl-side `Hom(Δ(λ), Δ(μ))` is compared to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    /// `Hom(S^μ, S^λ)`.
    MuToLambda,
    /// `Hom(S^λ, S^μ)`.
    LambdaToMu,
}

impl Orientation {
    pub const ALL: [Orientation; 2] = [Orientation::MuToLambda, Orientation::LambdaToMu];

    pub fn oracle_dim(self, lambda: &Partition, mu: &Partition, p: u64, bound: u64) -> Result<usize> {
        match self {
            Orientation::MuToLambda => specht_hom_dim_with_bound(mu, lambda, p, bound),
            Orientation::LambdaToMu => specht_hom_dim_with_bound(lambda, mu, p, bound),
        }
    }
}

/// The orientation fixed by [`pin_orientation`]; frozen so that comparisons
/// do not re-derive it on every call.
pub const PINNED_ORIENTATION: Orientation = Orientation::MuToLambda;

/// Weyl-side reference values used to pin the orientation: `(λ, μ, p, dim)`.
pub fn pinning_instances() -> Vec<(Partition, Partition, u64, usize)> {
    let p = |v: &[u32]| Partition::new(v.to_vec()).expect("valid literal");
    vec![
        (p(&[8, 3]), p(&[11]), 3, 1),
        (p(&[11, 3]), p(&[14]), 3, 0),
        (p(&[1, 1, 1, 1]), p(&[2, 2]), 3, 1),
        (p(&[4, 1, 1, 1]), p(&[5, 2]), 3, 0),
    ]
}

/// Orientations whose oracle dimensions match every pinning instance.
pub fn pin_orientation() -> Result<Vec<Orientation>> {
    let instances = pinning_instances();
    let bound = instances.iter().map(|(l, _, _, _)| l.degree()).max().unwrap_or(0);
    let mut ok = Vec::new();
    for o in Orientation::ALL {
        let mut agrees = true;
        for (lambda, mu, p, expected) in &instances {
            agrees &= o.oracle_dim(lambda, mu, *p, bound)? == *expected;
        }
        if agrees {
            ok.push(o);
        }
    }
    Ok(ok)
}

/// Both sides of one comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleComparison {
    pub lambda: Partition,
    pub mu: Partition,
    pub p: u64,
    pub orientation: Orientation,
    pub weyl_dim: usize,
    pub specht_dim: usize,
    pub agree: bool,
}

pub fn oracle_compare(lambda: &Partition, mu: &Partition, p: u64) -> Result<OracleComparison> {
    oracle_compare_with(lambda, mu, p, DEFAULT_DEGREE_BOUND, Limits::from_env())
}

pub fn oracle_compare_with(
    lambda: &Partition,
    mu: &Partition,
    p: u64,
    bound: u64,
    limits: Limits,
) -> Result<OracleComparison> {
    let specht_dim = PINNED_ORIENTATION.oracle_dim(lambda, mu, p, bound)?;
    let weyl_dim = HomSpace::compute(lambda, mu, PrimeField::new(p)?, limits)?.dim();
    Ok(OracleComparison {
        lambda: lambda.clone(),
        mu: mu.clone(),
        p,
        orientation: PINNED_ORIENTATION,
        weyl_dim,
        specht_dim,
        agree: weyl_dim == specht_dim,
    })
}
