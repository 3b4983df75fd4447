//! Divided powers, exterior monomials, and the realization map
//! `d′_μ : D(μ) → Λ(μᵗ)`.
//!
//! A divided-power monomial `1^(a₁)2^(a₂)…` is stored as its exponent vector.
//! Multiplication is `x^(a)·x^(b) = C(a+b, a)·x^(a+b)` per letter;
//! comultiplication splits exponents with coefficient 1.

use std::collections::{BTreeMap, HashMap};

use crate::combinat::for_each_contingency_table;
use crate::error::{Error, Result};
use crate::gfp::PrimeField;
use crate::shapes::Partition;
use crate::tableaux::Tableau;

/// Divided-power monomial: `exps[j]` is the exponent of letter `j + 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DPMonomial {
    exps: Vec<u32>,
}

impl DPMonomial {
    pub fn new(exps: Vec<u32>) -> Self {
        DPMonomial { exps }
    }

    /// `j^(e)` for a 1-based letter `j` in an alphabet of size `n`.
    pub fn power(n: usize, letter: usize, e: u32) -> Self {
        let mut exps = vec![0; n];
        exps[letter - 1] = e;
        DPMonomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Number of distinct words with this letter content, saturating.
    pub fn word_count(&self) -> u128 {
        let mut acc: u128 = 1;
        let mut total: u64 = 0;
        for &e in &self.exps {
            for i in 1..=e as u64 {
                total += 1;
                acc = acc.saturating_mul(total as u128) / i as u128;
            }
        }
        acc
    }
}

/// `m1 · m2` in `DV`: returns the coefficient and the product monomial.
pub fn dp_mult(field: &PrimeField, m1: &DPMonomial, m2: &DPMonomial) -> (u64, DPMonomial) {
    let n = m1.exps.len().max(m2.exps.len());
    let mut coeff = 1 % field.modulus();
    let mut exps = vec![0u32; n];
    for (j, e) in exps.iter_mut().enumerate() {
        let a = m1.exps.get(j).copied().unwrap_or(0);
        let b = m2.exps.get(j).copied().unwrap_or(0);
        coeff = field.mul(coeff, field.binom((a + b) as u64, a as u64));
        *e = a + b;
    }
    (coeff, DPMonomial { exps })
}

/// The component of the comultiplication `D(deg m) → D(degrees…)` applied to
/// `m`: every way of splitting each exponent across the slots so that slot
/// `s` receives total degree `degrees[s]`.  All coefficients are 1.
pub fn dp_comult(m: &DPMonomial, degrees: &[u32]) -> Result<Vec<Vec<DPMonomial>>> {
    let total: u32 = degrees.iter().sum();
    if total != m.degree() {
        return Err(Error::DegreeMismatch {
            left: m.degree() as u64,
            right: total as u64,
        });
    }
    let n = m.exps.len();
    let mut out = Vec::new();
    for_each_contingency_table(&m.exps, degrees, |table| {
        out.push(
            (0..degrees.len())
                .map(|s| DPMonomial {
                    exps: (0..n).map(|j| table[j][s]).collect(),
                })
                .collect(),
        );
    });
    Ok(out)
}

/// A scalar multiple of a tensor of divided-power monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DPTensor {
    pub coeff: u64,
    pub factors: Vec<DPMonomial>,
}

impl DPTensor {
    pub fn new(coeff: u64, factors: Vec<DPMonomial>) -> Self {
        DPTensor { coeff, factors }
    }

    /// `x_T`: factor `i` is the content of row `i`.
    pub fn of_tableau(t: &Tableau) -> Self {
        DPTensor {
            coeff: 1,
            factors: t.counts().iter().map(|r| DPMonomial::new(r.clone())).collect(),
        }
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.factors.iter().map(DPMonomial::degree).collect()
    }
}

/// Exterior monomial of `Λ(μᵗ)`: one strictly increasing list of 0-based
/// letters per column of the diagram.
pub type ExtMonomial = Vec<Vec<u32>>;

/// Sparse vector of `Λ(μᵗ)`; never stores zero coefficients.
pub type ExtVector = BTreeMap<ExtMonomial, u64>;

/// Upper bound on the number of terms in the row-to-column expansion.
pub fn expansion_estimate(x: &DPTensor) -> u128 {
    x.factors
        .iter()
        .fold(1u128, |acc, m| acc.saturating_mul(m.word_count()))
}

/// `d′_μ(x)`.
///
/// Each row factor is comultiplied into single letters placed in columns
/// `1..=μ_i`; a column receiving a repeated letter vanishes, otherwise the
/// column (read top to bottom) is sorted with the sign of the sorting
/// permutation.  Partial expansions with equal column contents are merged as
/// they are built, row by row and cell by cell.
pub fn dprime(
    field: &PrimeField,
    mu: &Partition,
    x: &DPTensor,
    limit: u128,
) -> Result<ExtVector> {
    let degrees = x.degrees();
    if degrees.len() != mu.len() || degrees.iter().zip(mu.parts()).any(|(a, b)| a != b) {
        return Err(Error::ShapeMismatch(format!(
            "tensor of degrees {:?} is not of shape {}",
            degrees, mu
        )));
    }
    let estimate = expansion_estimate(x);
    if estimate > limit {
        return Err(Error::ExpansionTooLarge { estimate, limit });
    }
    let ncols = mu.part(0) as usize;
    let mut states: HashMap<ExtMonomial, u64> = HashMap::new();
    let c0 = field.reduce(x.coeff);
    if c0 == 0 {
        return Ok(ExtVector::new());
    }
    states.insert(vec![Vec::new(); ncols], c0);

    for factor in &x.factors {
        let mut row_states: HashMap<(ExtMonomial, Vec<u32>), u64> = states
            .into_iter()
            .map(|(cols, c)| ((cols, factor.exps.clone()), c))
            .collect();
        for cell in 0..factor.degree() as usize {
            let mut next: HashMap<(ExtMonomial, Vec<u32>), u64> = HashMap::new();
            for ((cols, rem), c) in row_states {
                for letter in 0..rem.len() {
                    if rem[letter] == 0 {
                        continue;
                    }
                    let column = &cols[cell];
                    let pos = match column.binary_search(&(letter as u32)) {
                        Ok(_) => continue,
                        Err(pos) => pos,
                    };
                    let larger = (column.len() - pos) as u64;
                    let mut new_cols = cols.clone();
                    new_cols[cell].insert(pos, letter as u32);
                    let mut new_rem = rem.clone();
                    new_rem[letter] -= 1;
                    let term = field.mul(c, field.sign(larger));
                    let e = next.entry((new_cols, new_rem)).or_insert(0);
                    *e = field.add(*e, term);
                }
            }
            next.retain(|_, c| *c != 0);
            row_states = next;
        }
        states = row_states.into_iter().map(|((cols, _), c)| (cols, c)).collect();
    }
    Ok(states.into_iter().filter(|&(_, c)| c != 0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn mono(e: &[u32]) -> DPMonomial {
        DPMonomial::new(e.to_vec())
    }

    #[test]
    fn mult_examples() {
        let f = gf(3);
        assert_eq!(dp_mult(&f, &mono(&[2]), &mono(&[3])), (1, mono(&[5])));
        assert_eq!(dp_mult(&f, &mono(&[1, 1]), &mono(&[])), (1, mono(&[1, 1])));
        assert_eq!(dp_mult(&f, &mono(&[1, 1]), &mono(&[1])), (2, mono(&[2, 1])));
    }

    #[test]
    fn comult_examples() {
        let pieces: BTreeSet<Vec<DPMonomial>> =
            dp_comult(&mono(&[2, 2]), &[2, 2]).unwrap().into_iter().collect();
        let expected: BTreeSet<Vec<DPMonomial>> = [
            vec![mono(&[2, 0]), mono(&[0, 2])],
            vec![mono(&[1, 1]), mono(&[1, 1])],
            vec![mono(&[0, 2]), mono(&[2, 0])],
        ]
        .into_iter()
        .collect();
        assert_eq!(pieces, expected);

        let m = mono(&[1, 3, 2]);
        assert_eq!(dp_comult(&m, &[6]).unwrap(), vec![vec![m.clone()]]);
        assert_eq!(
            dp_comult(&mono(&[2]), &[1, 1]).unwrap(),
            vec![vec![mono(&[1]), mono(&[1])]]
        );
        assert!(dp_comult(&m, &[2, 2]).is_err());
        assert!(dp_comult(&mono(&[1]), &[0, 1, 0]).unwrap().len() == 1);
    }

    #[test]
    fn mult_after_comult_is_multinomial_scaling() {
        let f = gf(7);
        let monos = [
            mono(&[3, 2, 1]),
            mono(&[2, 2]),
            mono(&[1, 1, 1, 1]),
            mono(&[6]),
            mono(&[0, 4, 1]),
        ];
        let splits: [&[u32]; 6] = [&[1, 5], &[2, 4], &[3, 3], &[2, 2, 2], &[1, 1, 4], &[0, 6]];
        for m in &monos {
            for &degrees in &splits {
                if degrees.iter().sum::<u32>() != m.degree() {
                    continue;
                }
                let mut total = 0u64;
                for pieces in dp_comult(m, degrees).unwrap() {
                    let (mut c, mut prod) = (1u64, DPMonomial::new(vec![0; m.exps().len()]));
                    for piece in &pieces {
                        let (c2, p2) = dp_mult(&f, &prod, piece);
                        c = f.mul(c, c2);
                        prod = p2;
                    }
                    assert_eq!(&prod, m);
                    total = f.add(total, c);
                }
                let parts: Vec<u64> = degrees.iter().map(|&d| d as u64).collect();
                assert_eq!(total, f.multinomial(&parts), "{m:?} into {degrees:?}");
            }
        }
    }

    fn two_by_two() -> Partition {
        Partition::new(vec![2, 2]).unwrap()
    }

    #[test]
    fn dprime_examples() {
        let f = gf(5);
        let x = DPTensor::new(1, vec![mono(&[2, 0]), mono(&[0, 2])]);
        let v = dprime(&f, &two_by_two(), &x, u128::MAX).unwrap();
        let col = vec![0u32, 1];
        assert_eq!(v.len(), 1);
        assert_eq!(v[&vec![col.clone(), col.clone()]], 1);

        let y = DPTensor::new(1, vec![mono(&[1, 1]), mono(&[1, 1])]);
        let w = dprime(&f, &two_by_two(), &y, u128::MAX).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[&vec![col.clone(), col]], f.from_i64(-2));

        let z = DPTensor::new(1, vec![mono(&[1]), mono(&[1])]);
        let one_one = Partition::new(vec![1, 1]).unwrap();
        assert!(dprime(&f, &one_one, &z, u128::MAX).unwrap().is_empty());
    }

    #[test]
    fn dprime_rejects_shape_mismatch_and_large_expansions() {
        let f = gf(3);
        let x = DPTensor::new(1, vec![mono(&[3])]);
        assert!(matches!(
            dprime(&f, &two_by_two(), &x, u128::MAX),
            Err(Error::ShapeMismatch(_))
        ));
        let big = DPTensor::new(1, vec![mono(&[1, 1, 1, 1])]);
        let four = Partition::new(vec![4]).unwrap();
        assert!(matches!(
            dprime(&f, &four, &big, 10),
            Err(Error::ExpansionTooLarge { estimate: 24, .. })
        ));
    }

    #[test]
    fn dprime_of_standard_tableaux_is_nonzero() {
        use crate::shapes::{compositions_of, partitions_of};
        use crate::tableaux::enumerate_standard;
        let f = gf(3);
        for r in 1..=6u32 {
            for mu in partitions_of(r) {
                for alpha in compositions_of(r, mu.len().max(3)) {
                    for t in enumerate_standard(&mu, &alpha).unwrap() {
                        let v = dprime(&f, &mu, &DPTensor::of_tableau(&t), u128::MAX).unwrap();
                        assert!(!v.is_empty(), "{t}");
                    }
                }
            }
        }
    }
}
