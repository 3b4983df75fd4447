//! Weyl modules `Δ(μ)` in coordinates over the standard basis.
//!
//! Every computation happens inside a single weight space.  The class `[U]`
//! of an arbitrary tableau is expressed in the basis of standard tableaux by
//! one of three routes:
//!
//! * the closed two-row formula that moves all 1s of the second row into the
//!   first row (used for shapes with at most two rows);
//! * reduction modulo the image of the box map `□_μ`, i.e. the presentation
//!   `⊕ D(…, μ_i + t, μ_{i+1} - t, …) → D(μ) → Δ(μ) → 0` (used for shapes with
//!   three or more rows, and for the two-row leftovers the closed formula does
//!   not make standard);
//! * the exterior realization `d′_μ` followed by a linear solve against the
//!   images of the standard tableaux (independent reference route, gated by
//!   an expansion-size estimate).

use std::collections::{BTreeMap, HashMap};

use crate::combinat::{for_each_bounded_composition, for_each_contingency_table};
use crate::error::{Error, Result};
use crate::gfp::{Echelon, PrimeField, SparseMatrix, SparseRow};
use crate::polyalg::{dprime, DPMonomial, DPTensor, ExtMonomial};
use crate::shapes::{Composition, Partition};
use crate::tableaux::{enumerate_standard, Tableau};

/// Resource limits for the two expensive straightening routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible exterior expansion (product of per-row word counts).
    pub max_expansion: u128,
    /// Largest admissible number of fillings in one weight space for the
    /// presentation route.
    pub max_weight_space: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_expansion: 5_000_000,
            max_weight_space: 250_000,
        }
    }
}

impl Limits {
    pub const EXPANSION_ENV: &'static str = "WEYLHOM_MAX_EXPANSION";
    pub const WEIGHT_SPACE_ENV: &'static str = "WEYLHOM_MAX_WEIGHT_SPACE";

    /// Defaults overridden by `WEYLHOM_MAX_EXPANSION` and
    /// `WEYLHOM_MAX_WEIGHT_SPACE` when set to valid integers.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = std::env::var(Self::EXPANSION_ENV).ok().and_then(|s| s.parse().ok()) {
            limits.max_expansion = v;
        }
        if let Some(v) = std::env::var(Self::WEIGHT_SPACE_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
        {
            limits.max_weight_space = v;
        }
        limits
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Two-row formula for at most two rows, presentation otherwise.
    Auto,
    TwoRow,
    Presentation,
    Exterior,
}

/// A vector of the weight-`weight` subspace of `Δ(shape)`, indexed by the
/// enumeration order of `Std_weight(shape)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylCoords {
    pub weight: Composition,
    pub coeffs: BTreeMap<usize, u64>,
}

impl WeylCoords {
    pub fn zero(weight: Composition) -> Self {
        WeylCoords {
            weight,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, field: &PrimeField, index: usize, c: u64) {
        let c = field.reduce(c);
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(index).or_insert(0);
        *e = field.add(*e, c);
        if *e == 0 {
            self.coeffs.remove(&index);
        }
    }

    pub fn add_scaled(&mut self, field: &PrimeField, other: &WeylCoords, scale: u64) {
        for (&i, &c) in &other.coeffs {
            self.add_term(field, i, field.mul(c, scale));
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<u64> {
        let mut v = vec![0; len];
        for (&i, &c) in &self.coeffs {
            v[i] = c;
        }
        v
    }
}

/// The cyclic generator `x_{i,t}` of the `(i, t)` relation summand:
/// `1^(λ₁) ⊗ … ⊗ i^(λ_i) ⊗ i^(t)(i+1)^(λ_{i+1}-t) ⊗ … ⊗ n^(λ_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationGenerator {
    /// 1-based row index `i`.
    pub row: usize,
    pub t: u32,
    pub element: DPTensor,
}

impl RelationGenerator {
    pub fn weight(&self) -> Composition {
        let n = self.element.factors.len();
        Composition::new(
            (0..n)
                .map(|j| self.element.factors.iter().map(|m| m.exps()[j]).sum())
                .collect(),
        )
    }
}

/// All `x_{i,t}` for `1 ≤ i < ℓ(λ)` and `1 ≤ t ≤ λ_{i+1}`, ordered by `(i, t)`.
pub fn relation_generators(lambda: &Partition) -> Vec<RelationGenerator> {
    let n = lambda.len();
    let mut out = Vec::new();
    for i in 1..n {
        for t in 1..=lambda.part(i) {
            let mut factors: Vec<DPMonomial> = (0..n)
                .map(|j| DPMonomial::power(n, j + 1, lambda.part(j)))
                .collect();
            let mut exps = vec![0u32; n];
            exps[i - 1] = t;
            exps[i] = lambda.part(i) - t;
            factors[i] = DPMonomial::new(exps);
            out.push(RelationGenerator {
                row: i,
                t,
                element: DPTensor::new(1, factors),
            });
        }
    }
    out
}

/// Closed form for two-row shapes: moves the 1s of the second
/// row into the first.  Returns `[U]` as a combination of tableaux with no 1
/// in the second row (which need not all be standard); an empty result means
/// `[U] = 0`.
pub fn two_row_closed_form(field: &PrimeField, u: &Tableau) -> Result<Vec<(Tableau, u64)>> {
    let shape = u.shape();
    if shape.len() > 2 {
        return Err(Error::ShapeMismatch(format!(
            "two-row straightening applied to shape {shape}"
        )));
    }
    if shape.len() < 2 || u.alphabet() == 0 || u.count(1, 0) == 0 {
        return Ok(vec![(u.clone(), 1)]);
    }
    let a = &u.counts()[0];
    let b = &u.counts()[1];
    let (a1, b1) = (a[0], b[0]);
    if a1 + b1 > shape.part(0) {
        return Ok(Vec::new());
    }
    let sign = field.sign(b1 as u64);
    let n = u.alphabet();
    let mut out = Vec::new();
    for_each_bounded_composition(b1, &a[1..], |moved| {
        let mut coeff = sign;
        for s in 1..n {
            coeff = field.mul(coeff, field.binom((b[s] + moved[s - 1]) as u64, b[s] as u64));
        }
        if coeff == 0 {
            return;
        }
        let mut top = vec![a1 + b1];
        let mut bottom = vec![0];
        for s in 1..n {
            top.push(a[s] - moved[s - 1]);
            bottom.push(b[s] + moved[s - 1]);
        }
        out.push((
            Tableau::from_parts_unchecked(shape.clone(), n, vec![top, bottom]),
            coeff,
        ));
    });
    Ok(out)
}

/// Cached linear-algebra data for the exterior route: the reduced echelon
/// form of `[images of standard tableaux | identity]`.
#[derive(Debug)]
struct ExteriorSolver {
    index: HashMap<ExtMonomial, usize>,
    nmono: usize,
    /// `(pivot monomial column, monomial part, combination part)`.
    rows: Vec<(usize, SparseRow, SparseRow)>,
}

impl ExteriorSolver {
    fn build(field: &PrimeField, mu: &Partition, standard: &[Tableau], limit: u128) -> Result<Self> {
        let images = standard
            .iter()
            .map(|t| dprime(field, mu, &DPTensor::of_tableau(t), limit))
            .collect::<Result<Vec<_>>>()?;
        let mut monos: Vec<&ExtMonomial> = images.iter().flat_map(|v| v.keys()).collect();
        monos.sort();
        monos.dedup();
        let index: HashMap<ExtMonomial, usize> =
            monos.iter().enumerate().map(|(i, &m)| (m.clone(), i)).collect();
        let nmono = index.len();
        let f = standard.len();
        let mut ech = Echelon::new(*field, nmono + f);
        for (k, img) in images.iter().enumerate() {
            let mut row: SparseRow = img.iter().map(|(m, &c)| (index[m], c)).collect();
            row.sort_unstable();
            row.push((nmono + k, 1));
            ech.insert(row);
        }
        ech.reduce();
        let mut rows = Vec::new();
        for lead in ech.pivot_columns().collect::<Vec<_>>() {
            if lead >= nmono {
                return Err(Error::Internal(format!(
                    "standard images of shape {mu} are linearly dependent"
                )));
            }
            let row = ech.pivot_row(lead).unwrap();
            let (mono, comb): (SparseRow, SparseRow) = row.iter().partition(|&&(c, _)| c < nmono);
            let comb = comb.into_iter().map(|(c, x)| (c - nmono, x)).collect();
            rows.push((lead, mono, comb));
        }
        Ok(ExteriorSolver { index, nmono, rows })
    }

    fn solve(&self, field: &PrimeField, target: &BTreeMap<ExtMonomial, u64>) -> Result<BTreeMap<usize, u64>> {
        let mut v: BTreeMap<usize, u64> = BTreeMap::new();
        for (m, &c) in target {
            let Some(&i) = self.index.get(m) else {
                return Err(Error::Internal(
                    "exterior image outside the span of the standard images".into(),
                ));
            };
            v.insert(i, c);
        }
        let mut residual = v.clone();
        let mut coords: BTreeMap<usize, u64> = BTreeMap::new();
        for (lead, mono, comb) in &self.rows {
            let Some(&scale) = v.get(lead) else { continue };
            for &(c, x) in mono {
                let e = residual.entry(c).or_insert(0);
                *e = field.sub(*e, field.mul(scale, x));
            }
            for &(l, x) in comb {
                let e = coords.entry(l).or_insert(0);
                *e = field.add(*e, field.mul(scale, x));
            }
        }
        if residual.values().any(|&x| x != 0) {
            return Err(Error::Internal(
                "exterior image outside the span of the standard images".into(),
            ));
        }
        debug_assert!(self.nmono >= coords.len());
        coords.retain(|_, c| *c != 0);
        Ok(coords)
    }
}

/// Standard expansion of each nonstandard filling, keyed by counts.
type PresentationTable = HashMap<Vec<Vec<u32>>, BTreeMap<usize, u64>>;

#[derive(Debug)]
struct WeightSpace {
    standard: Vec<Tableau>,
    index: HashMap<Vec<Vec<u32>>, usize>,
    /// Standard expansion of every nonstandard filling.
    presentation: Option<PresentationTable>,
    exterior: Option<ExteriorSolver>,
}

/// `Δ(shape)` over GF(p), with lazily built per-weight caches.
#[derive(Debug)]
pub struct WeylModule {
    shape: Partition,
    field: PrimeField,
    limits: Limits,
    spaces: HashMap<Composition, WeightSpace>,
}

impl WeylModule {
    pub fn new(shape: Partition, field: PrimeField) -> Self {
        WeylModule::with_limits(shape, field, Limits::default())
    }

    pub fn with_limits(shape: Partition, field: PrimeField, limits: Limits) -> Self {
        WeylModule {
            shape,
            field,
            limits,
            spaces: HashMap::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    fn space(&mut self, weight: &Composition) -> Result<&mut WeightSpace> {
        if !self.spaces.contains_key(weight) {
            let standard = if weight.degree() == self.shape.degree() {
                enumerate_standard(&self.shape, weight)?
            } else {
                return Err(Error::DegreeMismatch {
                    left: self.shape.degree(),
                    right: weight.degree(),
                });
            };
            let index = standard
                .iter()
                .enumerate()
                .map(|(i, t)| (t.counts().to_vec(), i))
                .collect();
            self.spaces.insert(
                weight.clone(),
                WeightSpace {
                    standard,
                    index,
                    presentation: None,
                    exterior: None,
                },
            );
        }
        Ok(self.spaces.get_mut(weight).unwrap())
    }

    /// `Std_weight(shape)` in enumeration order.
    pub fn standard_basis(&mut self, weight: &Composition) -> Result<&[Tableau]> {
        Ok(&self.space(weight)?.standard)
    }

    /// Index of a standard tableau in its weight space.
    pub fn index_of(&mut self, t: &Tableau) -> Result<Option<usize>> {
        let w = t.weight();
        Ok(self.space(&w)?.index.get(t.counts()).copied())
    }

    /// Coordinates of `c·[u]` in the standard basis.
    pub fn straighten(&mut self, u: &Tableau, c: u64) -> Result<WeylCoords> {
        self.straighten_with(u, c, Strategy::Auto)
    }

    pub fn straighten_with(&mut self, u: &Tableau, c: u64, strategy: Strategy) -> Result<WeylCoords> {
        if u.shape() != &self.shape {
            return Err(Error::ShapeMismatch(format!(
                "tableau of shape {} in Δ({})",
                u.shape(),
                self.shape
            )));
        }
        let field = self.field;
        let weight = u.weight();
        let mut out = WeylCoords::zero(weight.clone());
        let c = field.reduce(c);
        if c == 0 {
            return Ok(out);
        }
        let strategy = match strategy {
            Strategy::Auto if self.shape.len() <= 2 => Strategy::TwoRow,
            Strategy::Auto => Strategy::Presentation,
            s => s,
        };
        match strategy {
            Strategy::Exterior => {
                let limit = self.limits.max_expansion;
                let shape = self.shape.clone();
                let space = self.space(&weight)?;
                if space.exterior.is_none() {
                    space.exterior = Some(ExteriorSolver::build(&field, &shape, &space.standard, limit)?);
                }
                let image = dprime(&field, &shape, &DPTensor::of_tableau(u), limit)?;
                let coords = space.exterior.as_ref().unwrap().solve(&field, &image)?;
                for (i, x) in coords {
                    out.add_term(&field, i, field.mul(x, c));
                }
            }
            Strategy::TwoRow => {
                for (v, x) in two_row_closed_form(&field, u)? {
                    self.reduce_into(&v, field.mul(c, x), &mut out)?;
                }
            }
            Strategy::Presentation | Strategy::Auto => {
                self.reduce_into(u, c, &mut out)?;
            }
        }
        Ok(out)
    }

    /// Standard expansion of `Σ c_U [U]` for tableaux of a common weight.
    pub fn straighten_sum(&mut self, weight: &Composition, terms: &[(Tableau, u64)]) -> Result<WeylCoords> {
        let field = self.field;
        let mut out = WeylCoords::zero(weight.clone());
        for (u, c) in terms {
            if &u.weight() != weight {
                return Err(Error::ShapeMismatch(format!(
                    "tableau {u} does not have weight {weight}"
                )));
            }
            let v = self.straighten(u, *c)?;
            out.add_scaled(&field, &v, 1);
        }
        Ok(out)
    }

    /// Adds `c·[u]` to `out`: directly when `u` is standard, otherwise via the
    /// presentation table of its weight space.
    fn reduce_into(&mut self, u: &Tableau, c: u64, out: &mut WeylCoords) -> Result<()> {
        let field = self.field;
        let limits = self.limits;
        let shape = self.shape.clone();
        let space = self.space(&out.weight)?;
        if let Some(&i) = space.index.get(u.counts()) {
            out.add_term(&field, i, c);
            return Ok(());
        }
        if space.presentation.is_none() {
            space.presentation = Some(build_presentation_table(
                &field,
                &shape,
                &out.weight,
                &space.index,
                limits.max_weight_space,
            )?);
        }
        let table = space.presentation.as_ref().unwrap();
        let expansion = table.get(u.counts()).ok_or_else(|| {
            Error::Internal(format!("filling {u} missing from its weight space"))
        })?;
        for (&i, &x) in expansion {
            out.add_term(&field, i, field.mul(c, x));
        }
        Ok(())
    }
}

/// Builds the standard expansion of every nonstandard filling of the weight
/// space by row-reducing the images of the box map.  Columns are ordered
/// nonstandard first, so the reduced rows read `U + Σ c_T T`.
fn build_presentation_table(
    field: &PrimeField,
    shape: &Partition,
    weight: &Composition,
    std_index: &HashMap<Vec<Vec<u32>>, usize>,
    limit: usize,
) -> Result<PresentationTable> {
    let mut nonstandard: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut total = 0usize;
    let mut over = false;
    for_each_contingency_table(shape.parts(), weight.parts(), |t| {
        total += 1;
        if over {
            return;
        }
        if total > limit {
            over = true;
            return;
        }
        if !std_index.contains_key(t) {
            nonstandard.push(t.to_vec());
        }
    });
    if over {
        return Err(Error::WeightSpaceTooLarge { size: total, limit });
    }
    let ns = nonstandard.len();
    if ns == 0 {
        return Ok(HashMap::new());
    }
    let column: HashMap<&Vec<Vec<u32>>, usize> =
        nonstandard.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let col_of = |t: &[Vec<u32>]| -> usize {
        match std_index.get(t) {
            Some(&k) => ns + k,
            None => column[&t.to_vec()],
        }
    };

    let n = weight.len();
    let m = shape.len();
    let mut ech = Echelon::new(*field, ns + std_index.len());
    for i in 0..m.saturating_sub(1) {
        for t in 1..=shape.part(i + 1) {
            let mut sums = shape.parts().to_vec();
            sums[i] += t;
            sums[i + 1] -= t;
            for_each_contingency_table(&sums, weight.parts(), |y| {
                let mut row: Vec<(usize, u64)> = Vec::new();
                let mut image = y.to_vec();
                for_each_bounded_composition(t, &y[i], |v| {
                    let mut coeff = 1u64;
                    for j in 0..n {
                        coeff = field.mul(coeff, field.binom((y[i + 1][j] + v[j]) as u64, v[j] as u64));
                        image[i][j] = y[i][j] - v[j];
                        image[i + 1][j] = y[i + 1][j] + v[j];
                    }
                    if coeff != 0 {
                        row.push((col_of(&image), coeff));
                    }
                });
                let mut merged: BTreeMap<usize, u64> = BTreeMap::new();
                for (c, x) in row {
                    let e = merged.entry(c).or_insert(0);
                    *e = field.add(*e, x);
                }
                ech.insert(merged.into_iter().filter(|&(_, x)| x != 0).collect());
            });
        }
    }
    ech.reduce();
    if ech.rank() != ns || ech.pivot_columns().any(|c| c >= ns) {
        return Err(Error::Internal(format!(
            "box-map relations of rank {} do not span the {} nonstandard fillings of shape {} and weight {}",
            ech.rank(),
            ns,
            shape,
            weight
        )));
    }
    let mut table = HashMap::with_capacity(ns);
    for (c, filling) in nonstandard.into_iter().enumerate() {
        let row = ech.pivot_row(c).unwrap();
        let expansion: BTreeMap<usize, u64> = row
            .iter()
            .skip(1)
            .map(|&(col, x)| (col - ns, field.neg(x)))
            .collect();
        table.insert(filling, expansion);
    }
    Ok(table)
}

/// Matrix whose columns are `d′_μ(x_T)` for `T ∈ Std_α(μ)`, over the sorted
/// union of their exterior supports.
pub fn standard_image_matrix(
    field: &PrimeField,
    mu: &Partition,
    alpha: &Composition,
    limit: u128,
) -> Result<SparseMatrix> {
    let standard = enumerate_standard(mu, alpha)?;
    if standard.is_empty() {
        return Err(Error::Precondition(format!(
            "no standard tableaux of shape {mu} and weight {alpha}"
        )));
    }
    let images = standard
        .iter()
        .map(|t| dprime(field, mu, &DPTensor::of_tableau(t), limit))
        .collect::<Result<Vec<_>>>()?;
    let mut monos: Vec<&ExtMonomial> = images.iter().flat_map(|v| v.keys()).collect();
    monos.sort();
    monos.dedup();
    let mut m = SparseMatrix::new(standard.len());
    for mono in monos {
        let row = images
            .iter()
            .enumerate()
            .filter_map(|(k, img)| img.get(mono).map(|&c| (k, c)))
            .collect();
        m.push_row(field, row);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn tab(n: usize, rows: &[&[u32]]) -> Tableau {
        Tableau::from_entries(n, rows).unwrap()
    }

    #[test]
    fn generators_of_eight_three() {
        let gens = relation_generators(&part(&[8, 3]));
        assert_eq!(gens.len(), 3);
        let expected = [[1u32, 2], [2, 1], [3, 0]];
        for (g, e) in gens.iter().zip(expected) {
            assert_eq!(g.row, 1);
            assert_eq!(g.element.factors[0].exps(), &[8, 0]);
            assert_eq!(g.element.factors[1].exps(), &e);
        }
        assert!(relation_generators(&part(&[5])).is_empty());
        let hook = relation_generators(&part(&[1, 1, 1, 1]));
        assert_eq!(hook.len(), 3);
        assert!(hook.iter().all(|g| g.t == 1));
        assert_eq!(hook[1].element.factors[2].exps(), &[0, 1, 0, 0]);
        let lam = part(&[4, 3, 3, 1]);
        assert_eq!(relation_generators(&lam).len(), 3 + 3 + 1);
    }

    #[test]
    fn two_row_examples() {
        let f = gf(5);
        let mut w = WeylModule::new(part(&[2, 2]), f);
        let u = tab(2, &[&[1, 2], &[1, 2]]);
        let v = w.straighten(&u, 1).unwrap();
        let target = tab(2, &[&[1, 1], &[2, 2]]);
        let idx = w.index_of(&target).unwrap().unwrap();
        assert_eq!(v.coeffs, BTreeMap::from([(idx, f.from_i64(-2))]));
        let ext = w.straighten_with(&u, 1, Strategy::Exterior).unwrap();
        assert_eq!(ext, v);
        let pres = w.straighten_with(&u, 1, Strategy::Presentation).unwrap();
        assert_eq!(pres, v);

        let mut w32 = WeylModule::new(part(&[3, 2]), f);
        let vanishing = tab(2, &[&[1, 1, 2], &[1, 1]]);
        assert!(two_row_closed_form(&f, &vanishing).unwrap().is_empty());
        assert!(w32.straighten(&vanishing, 1).unwrap().is_zero());

        let std = tab(3, &[&[1, 1, 2], &[2, 3]]);
        let s = w32.straighten(&std, 4).unwrap();
        let i = w32.index_of(&std).unwrap().unwrap();
        assert_eq!(s.coeffs, BTreeMap::from([(i, 4)]));
    }

    #[test]
    fn leftover_after_closed_form_needs_more_work() {
        // 1 3 3 | 2 2 has no 1 in row two but is not standard; its expansion is
        // -[1 2 2 | 3 3] - [1 2 3 | 2 3].
        let f = gf(7);
        let mut w = WeylModule::new(part(&[3, 2]), f);
        let u = tab(3, &[&[1, 3, 3], &[2, 2]]);
        let got = w.straighten(&u, 1).unwrap();
        let t1 = w.index_of(&tab(3, &[&[1, 2, 2], &[3, 3]])).unwrap().unwrap();
        let t2 = w.index_of(&tab(3, &[&[1, 2, 3], &[2, 3]])).unwrap().unwrap();
        assert_eq!(got.coeffs, BTreeMap::from([(t1, 6), (t2, 6)]));
        assert_eq!(w.straighten_with(&u, 1, Strategy::Exterior).unwrap(), got);
    }

    #[test]
    fn one_row_straightening_is_trivial() {
        let f = gf(3);
        let mut w = WeylModule::new(part(&[4]), f);
        let u = tab(3, &[&[3, 1, 2, 2]]);
        let v = w.straighten(&u, 2).unwrap();
        assert_eq!(v.coeffs, BTreeMap::from([(0, 2)]));
        assert_eq!(w.straighten_with(&u, 2, Strategy::Exterior).unwrap(), v);
    }

    #[test]
    fn three_row_routes_agree() {
        let f = gf(3);
        let mut w = WeylModule::new(part(&[2, 2, 1]), f);
        let u = tab(3, &[&[2, 3], &[1, 2], &[1]]);
        let a = w.straighten_with(&u, 1, Strategy::Presentation).unwrap();
        let b = w.straighten_with(&u, 1, Strategy::Exterior).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn standard_image_matrix_examples() {
        let f = gf(3);
        let m = standard_image_matrix(&f, &part(&[2, 2]), &Composition::new(vec![1, 1, 1, 1]), u128::MAX)
            .unwrap();
        assert_eq!(m.ncols(), 2);
        assert_eq!(m.rank(&f), 2);
        let one = standard_image_matrix(&f, &part(&[3]), &Composition::new(vec![2, 1]), u128::MAX).unwrap();
        assert_eq!((one.nrows(), one.ncols(), one.rank(&f)), (3, 1, 1));
        let hook = standard_image_matrix(&f, &part(&[2, 1]), &Composition::new(vec![1, 1, 1]), u128::MAX)
            .unwrap();
        assert_eq!((hook.ncols(), hook.rank(&f)), (2, 2));
        assert!(standard_image_matrix(&f, &part(&[1, 1]), &Composition::new(vec![2]), u128::MAX).is_err());
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let mut w = WeylModule::new(part(&[2, 1]), gf(3));
        let u = tab(2, &[&[1, 1, 2]]);
        assert!(matches!(w.straighten(&u, 1), Err(Error::ShapeMismatch(_))));
        let three = tab(3, &[&[1], &[2], &[3]]);
        assert!(two_row_closed_form(&gf(3), &three).is_err());
    }

    #[test]
    fn weight_space_limit_is_reported() {
        let f = gf(3);
        let limits = Limits {
            max_expansion: 1,
            max_weight_space: 2,
        };
        let mut w = WeylModule::with_limits(part(&[2, 2, 1]), f, limits);
        let u = tab(3, &[&[2, 3], &[1, 2], &[1]]);
        assert!(matches!(
            w.straighten(&u, 1),
            Err(Error::WeightSpaceTooLarge { .. })
        ));
        assert!(matches!(
            w.straighten_with(&u, 1, Strategy::Exterior),
            Err(Error::ExpansionTooLarge { .. })
        ));
    }
}
