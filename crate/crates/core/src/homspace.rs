//! `Hom_S(Δ(λ), Δ(μ))` as the subspace of `Hom_S(D(λ), Δ(μ))` killing every
//! relation generator `x_{i,t}`, in the basis `{φ_T : T ∈ Std_λ(μ)}`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfp::{kernel_basis, PrimeField, SparseMatrix};
use crate::polyalg::{dp_comult, DPTensor};
use crate::shapes::{stabilization_amount, Partition};
use crate::tableaux::{enumerate_standard, Tableau};
use crate::weyl::{relation_generators, Limits, WeylCoords, WeylModule};

/// `Σ c_T φ_T`, with coefficients indexed by the enumeration of `Std_λ(μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomElement {
    pub lambda: Partition,
    pub mu: Partition,
    pub coeffs: Vec<u64>,
}

/// Expands `φ_T(x)` before straightening.
///
/// Factor `j` of `x` is comultiplied according to column `j` of the counts
/// matrix of `T` (piece `s` goes to row `s`), and the pieces landing in each
/// row are multiplied in the divided power algebra.  The result is a list of
/// tableaux of the shape of `T` with their coefficients, sorted by counts.
pub fn phi_expand(field: &PrimeField, t: &Tableau, x: &DPTensor) -> Result<Vec<(Tableau, u64)>> {
    let n = t.alphabet();
    let weight = t.weight();
    if x.factors.len() != n || x.degrees() != weight.parts() {
        return Err(Error::ShapeMismatch(format!(
            "tensor of degrees {:?} does not match the weight {} of {}",
            x.degrees(),
            weight,
            t
        )));
    }
    let rows = t.shape().len();
    let mut states: HashMap<Vec<Vec<u32>>, u64> = HashMap::new();
    let c0 = field.reduce(x.coeff);
    if c0 == 0 {
        return Ok(Vec::new());
    }
    states.insert(vec![vec![0u32; n]; rows], c0);
    for (j, factor) in x.factors.iter().enumerate() {
        if factor.exps().len() != n {
            return Err(Error::ShapeMismatch(format!(
                "factor {} lives over {} letters, expected {}",
                j + 1,
                factor.exps().len(),
                n
            )));
        }
        let column: Vec<u32> = (0..rows).map(|i| t.count(i, j)).collect();
        let splits = dp_comult(factor, &column)?;
        let mut next: HashMap<Vec<Vec<u32>>, u64> = HashMap::new();
        for (state, c) in &states {
            for pieces in &splits {
                let mut coeff = *c;
                let mut new_state = state.clone();
                for (row, piece) in new_state.iter_mut().zip(pieces) {
                    for (e, &add) in row.iter_mut().zip(piece.exps()) {
                        if add > 0 {
                            coeff = field.mul(coeff, field.binom((*e + add) as u64, add as u64));
                            *e += add;
                        }
                    }
                }
                if coeff == 0 {
                    continue;
                }
                let entry = next.entry(new_state).or_insert(0);
                *entry = field.add(*entry, coeff);
            }
        }
        next.retain(|_, c| *c != 0);
        states = next;
    }
    let sorted: BTreeMap<Vec<Vec<u32>>, u64> = states.into_iter().collect();
    Ok(sorted
        .into_iter()
        .map(|(counts, c)| (Tableau::from_parts_unchecked(t.shape().clone(), n, counts), c))
        .collect())
}

/// `φ_T(x)` in the standard basis of `Δ(μ)`.
pub fn phi_eval(module: &mut WeylModule, t: &Tableau, x: &DPTensor) -> Result<WeylCoords> {
    let field = *module.field();
    let terms = phi_expand(&field, t, x)?;
    let weight = match terms.first() {
        Some((u, _)) => u.weight(),
        None => {
            let n = x.factors.len();
            crate::shapes::Composition::new(
                (0..n)
                    .map(|j| x.factors.iter().map(|m| m.exps()[j]).sum())
                    .collect(),
            )
        }
    };
    module.straighten_sum(&weight, &terms)
}

/// Relation matrix and kernel for one pair `(λ, μ)`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub lambda: Partition,
    pub mu: Partition,
    pub field: PrimeField,
    /// `Std_λ(μ)`, indexing the columns.
    pub standard: Vec<Tableau>,
    /// Rows indexed by `(generator, standard coordinate)` in `(i, t)` order.
    pub relations: SparseMatrix,
    pub basis: Vec<HomElement>,
}

impl HomSpace {
    pub fn compute(lambda: &Partition, mu: &Partition, field: PrimeField, limits: Limits) -> Result<Self> {
        if lambda.degree() != mu.degree() {
            return Err(Error::DegreeMismatch {
                left: lambda.degree(),
                right: mu.degree(),
            });
        }
        let standard = enumerate_standard(mu, &lambda.as_composition())?;
        let mut module = WeylModule::with_limits(mu.clone(), field, limits);
        let relations = build_relation_matrix(&mut module, lambda, &standard)?;
        let basis = kernel_basis(&field, &relations)
            .into_iter()
            .map(|coeffs| HomElement {
                lambda: lambda.clone(),
                mu: mu.clone(),
                coeffs,
            })
            .collect();
        Ok(HomSpace {
            lambda: lambda.clone(),
            mu: mu.clone(),
            field,
            standard,
            relations,
            basis,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether `Σ c_T φ_T` kills every relation generator, read off the matrix.
    pub fn contains(&self, h: &HomElement) -> bool {
        h.coeffs.len() == self.standard.len()
            && self
                .relations
                .mul_vec(&self.field, &h.coeffs)
                .iter()
                .all(|&x| x == 0)
    }
}

fn build_relation_matrix(
    module: &mut WeylModule,
    lambda: &Partition,
    standard: &[Tableau],
) -> Result<SparseMatrix> {
    let field = *module.field();
    let mut matrix = SparseMatrix::new(standard.len());
    if standard.is_empty() {
        return Ok(matrix);
    }
    for gen in relation_generators(lambda) {
        let weight = gen.weight();
        let height = module.standard_basis(&weight)?.len();
        let mut rows: Vec<Vec<(usize, u64)>> = vec![Vec::new(); height];
        for (col, t) in standard.iter().enumerate() {
            let image = phi_eval(module, t, &gen.element)?;
            for (&q, &c) in &image.coeffs {
                rows[q].push((col, c));
            }
        }
        for row in rows {
            matrix.push_row(&field, row);
        }
    }
    Ok(matrix)
}

/// The relation matrix of `(λ, μ)` over GF(p).
pub fn relation_matrix(lambda: &Partition, mu: &Partition, p: u64) -> Result<SparseMatrix> {
    Ok(HomSpace::compute(lambda, mu, PrimeField::new(p)?, Limits::from_env())?.relations)
}

/// `dim Hom_S(Δ(λ), Δ(μ))` over GF(p) together with a kernel basis.
pub fn hom_dim(lambda: &Partition, mu: &Partition, p: u64) -> Result<(usize, Vec<HomElement>)> {
    let space = HomSpace::compute(lambda, mu, PrimeField::new(p)?, Limits::from_env())?;
    Ok((space.dim(), space.basis))
}

/// Re-evaluates `Σ c_T φ_T(x_{i,t})` for every generator through `phi_eval`
/// and checks that each vanishes.  Does not touch the relation matrix.
pub fn kills_relations(module: &mut WeylModule, h: &HomElement) -> Result<bool> {
    let field = *module.field();
    let standard = enumerate_standard(&h.mu, &h.lambda.as_composition())?;
    if standard.len() != h.coeffs.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} coefficients for {} standard tableaux",
            h.coeffs.len(),
            standard.len()
        )));
    }
    for gen in relation_generators(&h.lambda) {
        let mut acc = WeylCoords::zero(gen.weight());
        for (t, &c) in standard.iter().zip(&h.coeffs) {
            if c == 0 {
                continue;
            }
            let v = phi_eval(module, t, &gen.element)?;
            acc.add_scaled(&field, &v, c);
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Transports coefficients along `T ↦ T⁺` (adding `m` ones to the top row).
fn transport(h: &HomElement, m: u32) -> Result<HomElement> {
    if h.mu.part(1) > h.lambda.part(0) {
        return Err(Error::Precondition(format!(
            "μ₂ = {} exceeds λ₁ = {}",
            h.mu.part(1),
            h.lambda.part(0)
        )));
    }
    let lambda_plus = h.lambda.add_to_first_row(m);
    let mu_plus = h.mu.add_to_first_row(m);
    let source = enumerate_standard(&h.mu, &h.lambda.as_composition())?;
    let target = enumerate_standard(&mu_plus, &lambda_plus.as_composition())?;
    if source.len() != h.coeffs.len() || source.len() != target.len() {
        return Err(Error::Internal(format!(
            "|Std_λ(μ)| = {} but |Std_λ⁺(μ⁺)| = {}",
            source.len(),
            target.len()
        )));
    }
    let index: HashMap<&[Vec<u32>], usize> =
        target.iter().enumerate().map(|(i, t)| (t.counts(), i)).collect();
    let mut coeffs = vec![0u64; target.len()];
    for (t, &c) in source.iter().zip(&h.coeffs) {
        let tp = t.plus(m);
        let i = index
            .get(tp.counts())
            .ok_or_else(|| Error::Internal(format!("{tp} is not standard")))?;
        coeffs[*i] = c;
    }
    Ok(HomElement {
        lambda: lambda_plus,
        mu: mu_plus,
        coeffs,
    })
}

/// `Σ c_T φ_T ↦ Σ c_T φ⁺_{T⁺}` with `T⁺` obtained by adding `k·p^d` ones.
pub fn stabilize_hom(h: &HomElement, k: u64, d: u32, p: u64) -> Result<HomElement> {
    transport(h, stabilization_amount(k, d, p)?)
}

/// Inverse of [`stabilize_hom`]; `h` lives on `(λ⁺, μ⁺)`.
pub fn destabilize_hom(h: &HomElement, k: u64, d: u32, p: u64) -> Result<HomElement> {
    let m = stabilization_amount(k, d, p)?;
    let lambda = Partition::new({
        let mut v = h.lambda.parts().to_vec();
        match v.first_mut() {
            Some(x) if *x >= m => *x -= m,
            _ => return Err(Error::Precondition(format!("λ₁ < {m}"))),
        }
        v
    })?;
    let mu = Partition::new({
        let mut v = h.mu.parts().to_vec();
        match v.first_mut() {
            Some(x) if *x >= m => *x -= m,
            _ => return Err(Error::Precondition(format!("μ₁ < {m}"))),
        }
        v
    })?;
    if mu.part(1) > lambda.part(0) {
        return Err(Error::Precondition(format!(
            "μ₂ = {} exceeds λ₁ = {}",
            mu.part(1),
            lambda.part(0)
        )));
    }
    let source = enumerate_standard(&mu, &lambda.as_composition())?;
    let target = enumerate_standard(&h.mu, &h.lambda.as_composition())?;
    if source.len() != h.coeffs.len() || target.len() != h.coeffs.len() {
        return Err(Error::Internal("standard sets differ in size".into()));
    }
    let index: HashMap<&[Vec<u32>], usize> =
        target.iter().enumerate().map(|(i, t)| (t.counts(), i)).collect();
    let mut coeffs = vec![0u64; source.len()];
    for (i, t) in source.iter().enumerate() {
        let tp = t.plus(m);
        let j = index
            .get(tp.counts())
            .ok_or_else(|| Error::Internal(format!("{tp} is not standard")))?;
        coeffs[i] = h.coeffs[*j];
    }
    Ok(HomElement { lambda, mu, coeffs })
}

/// Hypotheses and both dimensions for one instance of the row-stabilization
/// statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationReport {
    pub p: u64,
    pub k: u64,
    pub d: u32,
    pub lambda: Partition,
    pub mu: Partition,
    pub lambda_plus: Partition,
    pub mu_plus: Partition,
    /// `p^d > min{λ₂, μ₁ - λ₁}`.
    pub power_exceeds_min: bool,
    /// `μ₂ ≤ λ₁`.
    pub second_row_fits: bool,
    pub dim: usize,
    pub dim_plus: usize,
    /// Whether `T ↦ T⁺` carries the kernel basis into the stabilized kernel
    /// and back; `None` when `μ₂ > λ₁` and the transport is undefined.
    pub basis_correspondence: Option<bool>,
    /// Hypotheses hold but the conclusion fails.
    pub violated: bool,
}

impl StabilizationReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.power_exceeds_min && self.second_row_fits
    }
}

pub fn verify_stabilization(
    lambda: &Partition,
    mu: &Partition,
    p: u64,
    k: u64,
    d: u32,
) -> Result<StabilizationReport> {
    verify_stabilization_with(lambda, mu, p, k, d, Limits::from_env())
}

pub fn verify_stabilization_with(
    lambda: &Partition,
    mu: &Partition,
    p: u64,
    k: u64,
    d: u32,
    limits: Limits,
) -> Result<StabilizationReport> {
    let field = PrimeField::new(p)?;
    let m = stabilization_amount(k, d, p)?;
    let pd = p
        .checked_pow(d)
        .ok_or_else(|| Error::Overflow(format!("{p}^{d}")))? as i128;
    let threshold = (lambda.part(1) as i128).min(mu.part(0) as i128 - lambda.part(0) as i128);
    let power_exceeds_min = pd > threshold;
    let second_row_fits = mu.part(1) <= lambda.part(0);

    let lambda_plus = lambda.add_to_first_row(m);
    let mu_plus = mu.add_to_first_row(m);
    let base = HomSpace::compute(lambda, mu, field, limits)?;
    let plus = HomSpace::compute(&lambda_plus, &mu_plus, field, limits)?;

    let basis_correspondence = if second_row_fits {
        let mut ok = true;
        for h in &base.basis {
            ok &= plus.contains(&transport(h, m)?);
        }
        for h in &plus.basis {
            ok &= base.contains(&destabilize_hom(h, k, d, p)?);
        }
        Some(ok)
    } else {
        None
    };
    let hypotheses = power_exceeds_min && second_row_fits;
    let violated = hypotheses && (base.dim() != plus.dim() || basis_correspondence != Some(true));
    Ok(StabilizationReport {
        p,
        k,
        d,
        lambda: lambda.clone(),
        mu: mu.clone(),
        lambda_plus,
        mu_plus,
        power_exceeds_min,
        second_row_fits,
        dim: base.dim(),
        dim_plus: plus.dim(),
        basis_correspondence,
        violated,
    })
}
