//! Adjoint rank, its exterior-power characterization, the minimal-rank
//! survey over the first layer, and the subspaces derived from a first-layer
//! subspace `W_1`: the generated subalgebra, the first-layer normalizer and
//! the bracket-closure space used by the rigidity rules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{CarnotAlgebra, Element};
use crate::error::{CarnotError, Result};
use crate::exec::{self, Execution};
use crate::linalg::{bareiss_rank_i128, exterior_power_norm, leading_negative, Matrix, Subspace};
use crate::rational::{qi, random_q, Q};

/// Exact rank of `ad(x)`.
pub fn rank_of(alg: &CarnotAlgebra, x: &Element) -> Result<usize> {
    Ok(alg.ad_matrix(x)?.rank())
}

/// Exact rank of `ad(x)` restricted to the domain `V_i`.
pub fn rank_on_layer(alg: &CarnotAlgebra, x: &Element, layer: usize) -> Result<usize> {
    Ok(alg.ad_matrix_on_layer(x, layer)?.rank())
}

fn restricted_rank(alg: &CarnotAlgebra, x: &Element, layer: Option<usize>) -> Result<usize> {
    match layer {
        Some(i) => rank_on_layer(alg, x, i),
        None => rank_of(alg, x),
    }
}

/// Whether the `(k+1)`-fold exterior power of `ad(x)` is the zero map, i.e.
/// whether every `(k+1) x (k+1)` minor of `ad(x)` vanishes. The minors are
/// not enumerated one by one: their sum of squares is read off the
/// characteristic polynomial of the Gram matrix (Cauchy-Binet), which is
/// zero exactly when each minor is.
pub fn wedge_rank_test(alg: &CarnotAlgebra, x: &Element, k: usize) -> Result<bool> {
    let n = alg.dim();
    if k + 1 > n {
        return Err(CarnotError::BadExponent { power: k + 1, dim: n });
    }
    let ad = alg.ad_matrix(x)?;
    Ok(exterior_power_norm(&ad, k + 1).is_zero())
}

/// How far the minimal rank found by a survey is certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Certification {
    /// The grid identity test proved `rank(x) <= r_min` for every `x` in `V_1`.
    ExactUniformBound,
    /// The minimum comes from the grid and random search only.
    HeuristicSearch,
}

impl Certification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Certification::ExactUniformBound => "exact-uniform-bound",
            Certification::HeuristicSearch => "heuristic-search",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurveyParams {
    /// Integer coefficients range over `[-grid_radius, grid_radius]`.
    pub grid_radius: u32,
    /// Grid vectors are supported on at most this many basis vectors.
    pub sparsity: usize,
    /// Number of seeded random rational samples.
    pub samples: usize,
    pub seed: u64,
    /// Cap on grid points plus samples.
    pub max_evaluations: u128,
    /// Cap on the grid used by [`uniform_rank_bound`] for certification.
    pub uniform_grid_cap: u128,
    pub execution: Execution,
}

impl Default for SurveyParams {
    fn default() -> Self {
        Self {
            grid_radius: 2,
            sparsity: 3,
            samples: 500,
            seed: 0,
            max_evaluations: 10_000_000,
            uniform_grid_cap: 1 << 24,
            execution: Execution::default(),
        }
    }
}

/// Outcome of [`min_rank_survey`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub layer_restriction: Option<usize>,
    pub r_min_found: usize,
    /// Every evaluated vector attaining `r_min_found`, grid first in
    /// lexicographic order, then random samples by index.
    pub witnesses: Vec<Element>,
    /// Echelon-canonical span of the witnesses (a subspace of `V_1`).
    pub span: Subspace,
    /// Largest rank observed; a lower bound on the generic rank.
    pub generic_rank: usize,
    pub certification: Certification,
    pub params: SurveyParams,
    pub evaluations: usize,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Grid vectors in first-layer coordinates, in lexicographic order:
/// by support size, then support, then coefficients from `-g` to `g`.
/// Only primitive vectors with positive leading coefficient are kept, since
/// rank is constant on lines.
fn grid_vectors(d1: usize, radius: i64, sparsity: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let coeffs: Vec<i64> = (-radius..=radius).filter(|&c| c != 0).collect();
    for size in 1..=sparsity.min(d1) {
        let mut support: Vec<usize> = (0..size).collect();
        loop {
            let mut idx = vec![0usize; size];
            loop {
                let cs: Vec<i64> = idx.iter().map(|&i| coeffs[i]).collect();
                let g = cs.iter().fold(0i64, |acc, c| acc.gcd(c));
                if cs[0] > 0 && g == 1 {
                    let mut v = vec![0i64; d1];
                    for (&s, &c) in support.iter().zip(&cs) {
                        v[s] = c;
                    }
                    out.push(v);
                }
                // next coefficient tuple, last position fastest
                let mut p = size;
                loop {
                    if p == 0 {
                        break;
                    }
                    p -= 1;
                    idx[p] += 1;
                    if idx[p] < coeffs.len() {
                        break;
                    }
                    idx[p] = 0;
                    if p == 0 {
                        p = usize::MAX;
                        break;
                    }
                }
                if p == usize::MAX || coeffs.is_empty() {
                    break;
                }
            }
            // next support in lexicographic order
            let mut i = size;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if support[i] < d1 - size + i {
                    support[i] += 1;
                    for j in i + 1..size {
                        support[j] = support[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    out
}

/// Deterministic random first-layer sample: stream `index` of the seeded
/// ChaCha generator, so samples do not depend on evaluation order.
pub fn random_first_layer_sample(d1: usize, seed: u64, index: u64) -> Vec<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    loop {
        let v: Vec<Q> = (0..d1).map(|_| random_q(&mut rng)).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// Searches `V_1` for elements of minimal rank (of `ad(x)`, or of
/// `ad(x)|_{V_i}` when `layer_restriction` is set): all basis vectors, all
/// sparse integer grid vectors, then seeded random samples.
pub fn min_rank_survey(
    alg: &CarnotAlgebra,
    layer_restriction: Option<usize>,
    params: &SurveyParams,
) -> Result<RankReport> {
    if let Some(i) = layer_restriction {
        alg.check_layer(i)?;
    }
    let d1 = alg.layer_dims()[0];
    if d1 == 0 {
        return Err(CarnotError::EmptyFirstLayer);
    }
    let radius = params.grid_radius as u128;
    let needed: u128 = (1..=params.sparsity.min(d1))
        .map(|j| binomial(d1, j).saturating_mul((2 * radius).saturating_pow(j as u32)))
        .fold(params.samples as u128, u128::saturating_add);
    if needed > params.max_evaluations {
        return Err(CarnotError::SearchBudgetExceeded { needed, cap: params.max_evaluations });
    }

    let mut candidates: Vec<Vec<Q>> = grid_vectors(d1, params.grid_radius as i64, params.sparsity)
        .into_iter()
        .map(|v| v.into_iter().map(qi).collect())
        .collect();
    let grid_len = candidates.len();
    candidates.extend(exec::map_indexed(params.execution, params.samples, |i| {
        random_first_layer_sample(d1, params.seed, i as u64)
    }));
    debug_assert!(grid_len <= candidates.len());

    let ranks: Vec<usize> = exec::map_slice(params.execution, &candidates, |c| {
        restricted_rank(alg, &alg.horizontal(c), layer_restriction).expect("checked layer index")
    });

    let r_min = *ranks.iter().min().expect("nonempty candidate list");
    let generic = *ranks.iter().max().expect("nonempty candidate list");
    let witnesses: Vec<Element> = candidates
        .iter()
        .zip(&ranks)
        .filter(|(_, &r)| r == r_min)
        .map(|(c, _)| alg.horizontal(c))
        .collect();
    let span = Subspace::span(
        alg.dim(),
        &witnesses.iter().map(|w| w.coords().to_vec()).collect::<Vec<_>>(),
    )
    .with_layer(1);

    let certification = match uniform_bound_impl(
        alg,
        r_min,
        layer_restriction,
        params.uniform_grid_cap,
        params.execution,
    ) {
        Ok(true) => Certification::ExactUniformBound,
        _ => Certification::HeuristicSearch,
    };

    Ok(RankReport {
        layer_restriction,
        r_min_found: r_min,
        witnesses,
        span,
        generic_rank: generic,
        certification,
        params: params.clone(),
        evaluations: candidates.len(),
    })
}

/// Decides whether every `x` in `V_1` has `rank(x) <= k`. Each
/// `(k+1)`-minor of `ad(x)` is a polynomial of degree at most `k+1` in each
/// first-layer coordinate, so it vanishes identically iff it vanishes on the
/// grid `{0, ..., k+1}^{d_1}`.
pub fn uniform_rank_bound(alg: &CarnotAlgebra, k: usize, cap: u128, exec: Execution) -> Result<bool> {
    uniform_bound_impl(alg, k, None, cap, exec)
}

/// As [`uniform_rank_bound`] for `ad(x)|_{V_i}`.
pub fn uniform_rank_bound_on_layer(
    alg: &CarnotAlgebra,
    k: usize,
    layer: usize,
    cap: u128,
    exec: Execution,
) -> Result<bool> {
    alg.check_layer(layer)?;
    uniform_bound_impl(alg, k, Some(layer), cap, exec)
}

fn uniform_bound_impl(
    alg: &CarnotAlgebra,
    k: usize,
    layer: Option<usize>,
    cap: u128,
    exec: Execution,
) -> Result<bool> {
    let d1 = alg.layer_dims()[0];
    let base = (k + 2) as u128;
    let needed = base.checked_pow(d1 as u32).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(CarnotError::GridBudgetExceeded { needed, cap });
    }
    let base = base as u64;
    let ads = integer_first_layer_ads(alg, layer);
    let violated = exec::any_indexed(exec, needed as u64, |mut idx| {
        let digits: Vec<i64> = (0..d1)
            .map(|_| {
                let c = idx % base;
                idx /= base;
                c as i64
            })
            .collect();
        // a multiple of a smaller grid point has the same rank
        if digits.iter().fold(0i64, |g, &c| g.gcd(&c)) != 1 {
            return false;
        }
        let fast = ads.as_ref().and_then(|ads| {
            let rows = ads[0].len();
            let cols = ads[0].first().map_or(0, Vec::len);
            let mut m = vec![vec![0i128; cols]; rows];
            for (a, &c) in ads.iter().zip(&digits) {
                if c == 0 {
                    continue;
                }
                for (mr, ar) in m.iter_mut().zip(a) {
                    for (x, y) in mr.iter_mut().zip(ar) {
                        *x += c as i128 * y;
                    }
                }
            }
            m.retain(|r| r.iter().any(|&x| x != 0));
            bareiss_rank_i128(m)
        });
        let rank = fast.unwrap_or_else(|| {
            let coords: Vec<Q> = digits.iter().map(|&c| qi(c)).collect();
            restricted_rank(alg, &alg.horizontal(&coords), layer).expect("checked layer index")
        });
        rank > k
    });
    Ok(!violated)
}

/// `D ad(e_i)` for each first-layer basis vector, with one common
/// denominator `D`; `None` if the entries are too large for the i128 path.
fn integer_first_layer_ads(alg: &CarnotAlgebra, layer: Option<usize>) -> Option<Vec<Vec<Vec<i128>>>> {
    let mats: Vec<Matrix> = alg
        .layer_range(1)
        .map(|i| {
            let e = alg.basis_element(i);
            match layer {
                Some(l) => alg.ad_matrix_on_layer(&e, l),
                None => alg.ad_matrix(&e),
            }
            .expect("checked layer index")
        })
        .collect();
    let mut den = BigInt::one();
    for m in &mats {
        for r in m.row_vecs() {
            for x in &r {
                den = den.lcm(x.denom());
            }
        }
    }
    let den = Q::from_integer(den);
    mats.iter()
        .map(|m| {
            m.row_vecs()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| (x * &den).to_integer().to_i64().map(i128::from))
                        .collect::<Option<Vec<i128>>>()
                })
                .collect()
        })
        .collect()
}

fn check_first_layer_subspace(alg: &CarnotAlgebra, w1: &Subspace) -> Result<()> {
    if w1.ambient() != alg.dim() {
        return Err(CarnotError::DimensionMismatch(format!(
            "subspace of dimension-{} space used with algebra of dimension {}",
            w1.ambient(),
            alg.dim()
        )));
    }
    if !w1.supported_in(alg.layer_range(1)) {
        return Err(CarnotError::NotInFirstLayer);
    }
    if w1.is_zero() {
        return Err(CarnotError::TrivialSubspace);
    }
    Ok(())
}

/// Like the internal nontrivial check, but also requires `W_1 != V_1`.
pub fn check_proper_first_layer_subspace(alg: &CarnotAlgebra, w1: &Subspace) -> Result<()> {
    check_first_layer_subspace(alg, w1)?;
    if w1.dim() == alg.layer_dims()[0] {
        return Err(CarnotError::NotProper);
    }
    Ok(())
}

/// A graded subalgebra `W_1 (+) ... (+) W_r` with `W_j` inside `V_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubalgebra {
    layers: Vec<Subspace>,
    generated: bool,
    induced: Option<InducedAlgebra>,
}

/// The subalgebra as a standalone Carnot algebra, with the embedding matrix
/// from its coordinates into the parent's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedAlgebra {
    pub algebra: CarnotAlgebra,
    pub embedding: Matrix,
}

impl GradedSubalgebra {
    /// Wraps explicit layers after checking `W_j` lies in `V_j` and
    /// `[W_a, W_b]` lies in `W_{a+b}`.
    pub fn from_layers(alg: &CarnotAlgebra, mut layers: Vec<Subspace>) -> Result<Self> {
        if layers.len() > alg.step() {
            return Err(CarnotError::NotSubalgebra);
        }
        layers.resize(alg.step(), Subspace::zero(alg.dim()));
        for (j, l) in layers.iter_mut().enumerate() {
            if l.ambient() != alg.dim() || !l.supported_in(alg.layer_range(j + 1)) {
                return Err(CarnotError::NotSubalgebra);
            }
            *l = l.clone().with_layer(j + 1);
        }
        for a in 0..alg.step() {
            for b in a..alg.step() {
                let target = layers.get(a + b + 1);
                for u in layers[a].basis() {
                    for v in layers[b].basis() {
                        let br = alg.bracket_unchecked(&Element::new(u.clone()), &Element::new(v.clone()));
                        let ok = match target {
                            Some(t) => t.contains(br.coords()),
                            None => br.is_zero(),
                        };
                        if !ok {
                            return Err(CarnotError::NotSubalgebra);
                        }
                    }
                }
            }
        }
        let generated = (1..alg.step()).all(|j| layers[j] == bracket_span(alg, &layers[0], &layers[j - 1]));
        let induced = if generated && !layers[0].is_zero() {
            Some(induce(alg, &layers)?)
        } else {
            None
        };
        Ok(Self { layers, generated, induced })
    }

    /// One subspace per parent layer (trailing ones may be zero).
    pub fn layers(&self) -> &[Subspace] {
        &self.layers
    }

    /// Dimensions of the nonzero layers `W_1 .. W_s`.
    pub fn dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.layers.iter().map(Subspace::dim).collect();
        while d.last() == Some(&0) {
            d.pop();
        }
        d
    }

    pub fn is_generated(&self) -> bool {
        self.generated
    }

    pub fn whole(&self) -> Subspace {
        let n = self.layers[0].ambient();
        self.layers.iter().fold(Subspace::zero(n), |acc, l| acc.sum(l))
    }

    pub fn induced(&self) -> Option<&InducedAlgebra> {
        self.induced.as_ref()
    }

    /// The standalone algebra; errors unless generated by a nonzero `W_1`.
    pub fn to_algebra(&self) -> Result<CarnotAlgebra> {
        self.induced
            .as_ref()
            .map(|i| i.algebra.clone())
            .ok_or(CarnotError::TrivialSubspace)
    }
}

/// `span{[u, v] : u in U, v in V}`.
pub fn bracket_span(alg: &CarnotAlgebra, u: &Subspace, v: &Subspace) -> Subspace {
    let vecs: Vec<Vec<Q>> = u
        .basis()
        .iter()
        .flat_map(|a| v.basis().iter().map(move |b| (a, b)))
        .map(|(a, b)| {
            alg.bracket_unchecked(&Element::new(a.clone()), &Element::new(b.clone()))
                .into_coords()
        })
        .collect();
    Subspace::span(alg.dim(), &vecs)
}

fn induce(alg: &CarnotAlgebra, layers: &[Subspace]) -> Result<InducedAlgebra> {
    let dims: Vec<usize> = layers.iter().map(Subspace::dim).take_while(|&d| d > 0).collect();
    let mut offsets = vec![0];
    for d in &dims {
        offsets.push(offsets.last().unwrap() + d);
    }
    let basis: Vec<(usize, &Vec<Q>)> = dims
        .iter()
        .enumerate()
        .flat_map(|(l, _)| layers[l].basis().iter().map(move |b| (l, b)))
        .collect();
    let mut relations = Vec::new();
    for (a, (la, va)) in basis.iter().enumerate() {
        for (b, (lb, vb)) in basis.iter().enumerate().skip(a + 1) {
            let br = alg.bracket_unchecked(&Element::new((*va).clone()), &Element::new((*vb).clone()));
            if br.is_zero() {
                continue;
            }
            let target = la + lb + 1;
            if target >= dims.len() {
                return Err(CarnotError::NotSubalgebra);
            }
            let coords = layers[target]
                .coordinates(br.coords())
                .ok_or(CarnotError::NotSubalgebra)?;
            let t: Vec<(usize, Q)> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (offsets[target] + i, c))
                .collect();
            relations.push((a, b, t));
        }
    }
    let mut labels: Vec<String> = basis
        .iter()
        .map(|(_, v)| alg.render_compact(&Element::new((*v).clone())))
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    for l in labels.iter_mut() {
        while seen.contains(l) {
            l.push('\'');
        }
        seen.insert(l.clone());
    }
    let algebra = CarnotAlgebra::from_relations(
        format!("generated({})", alg.name().replace(char::is_whitespace, "_")),
        dims,
        Some(labels),
        relations,
    )?;
    let cols: Vec<Vec<Q>> = basis.iter().map(|(_, v)| (*v).clone()).collect();
    let embedding = Matrix::from_columns(alg.dim(), &cols);
    Ok(InducedAlgebra { algebra, embedding })
}

/// The subalgebra generated by `W_1`: `W_{j+1} = span[W_1, W_j]` until zero.
pub fn generated_subalgebra(alg: &CarnotAlgebra, w1: &Subspace) -> Result<GradedSubalgebra> {
    check_first_layer_subspace(alg, w1)?;
    let mut layers = vec![w1.clone()];
    while layers.len() < alg.step() {
        let next = bracket_span(alg, w1, layers.last().unwrap());
        if next.is_zero() {
            break;
        }
        layers.push(next);
    }
    GradedSubalgebra::from_layers(alg, layers)
}

/// `{v in V_1 : [v, w] in target for every w in W}` by an exact linear solve.
fn first_layer_solve(alg: &CarnotAlgebra, w: &Subspace, target: &Subspace) -> Subspace {
    let v1 = alg.layer_range(1);
    let d1 = v1.len();
    let n = alg.dim();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for wv in w.basis() {
        let we = Element::new(wv.clone());
        let residuals: Vec<Vec<Q>> = v1
            .clone()
            .map(|i| target.reduce(alg.bracket_unchecked(&alg.basis_element(i), &we).coords()))
            .collect();
        for r in 0..n {
            if residuals.iter().all(|res| res[r].is_zero()) {
                continue;
            }
            rows.push(residuals.iter().map(|res| res[r].clone()).collect());
        }
    }
    let solutions = if rows.is_empty() {
        (0..d1)
            .map(|i| {
                let mut v = vec![Q::zero(); d1];
                v[i] = Q::one();
                v
            })
            .collect()
    } else {
        Matrix::from_rows(d1, &rows).nullspace()
    };
    let vecs: Vec<Vec<Q>> = solutions
        .into_iter()
        .map(|s| alg.horizontal(&s).into_coords())
        .collect();
    Subspace::span(n, &vecs).with_layer(1)
}

/// `N(W_1) = {v in V_1 : [v, W_1] in <W_1>}`; always contains `W_1`.
pub fn normalizer(alg: &CarnotAlgebra, w1: &Subspace) -> Result<Subspace> {
    let sub = generated_subalgebra(alg, w1)?;
    Ok(first_layer_solve(alg, w1, &sub.whole()))
}

/// `{X in V_1 : [X, W_1] in [W_1, W_1]}`.
pub fn theorem12_space(alg: &CarnotAlgebra, w1: &Subspace) -> Result<Subspace> {
    check_proper_first_layer_subspace(alg, w1)?;
    let target = bracket_span(alg, w1, w1);
    Ok(first_layer_solve(alg, w1, &target))
}

/// Whether `[e_j, W] lies in W` for every basis vector `e_j`.
pub fn is_ideal(alg: &CarnotAlgebra, sub: &GradedSubalgebra) -> Result<bool> {
    if sub.layers.len() != alg.step() || sub.layers[0].ambient() != alg.dim() {
        return Err(CarnotError::NotSubalgebra);
    }
    let whole = sub.whole();
    for k in 0..alg.dim() {
        let e = alg.basis_element(k);
        for w in whole.basis() {
            if !whole.contains(alg.bracket_unchecked(&e, &Element::new(w.clone())).coords()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A basis vector of `space` outside `w1`, scaled to integer coordinates
/// with positive leading entry, if one exists.
pub fn witness_outside(space: &Subspace, w1: &Subspace) -> Option<Element> {
    let v = space.basis().iter().find(|v| !w1.contains(v))?;
    let l: BigInt = crate::rational::denominator_lcm(v.iter());
    let mut out: Vec<Q> = v.iter().map(|x| x * Q::from_integer(l.clone())).collect();
    if leading_negative(&out) {
        out.iter_mut().for_each(|x| *x = -x.clone());
    }
    debug_assert!(out.iter().any(|x| !x.is_zero() && (x.is_positive() || x.is_negative())));
    Some(Element::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{abelian, heisenberg, model_filiform, paper_example_1, paper_example_3};
    use crate::rational::q;

    fn el(alg: &CarnotAlgebra, terms: &[(&str, i64)]) -> Element {
        let mut v = alg.zero();
        for (l, c) in terms {
            let k = alg.labels().iter().position(|x| x == l).unwrap();
            v.axpy(&qi(*c), &alg.basis_element(k));
        }
        v
    }

    #[test]
    fn grid_order_and_dedup() {
        let g = grid_vectors(2, 1, 2);
        assert_eq!(g, vec![vec![1, 0], vec![0, 1], vec![1, -1], vec![1, 1]]);
        // radius 2: (2, 0) is not primitive, (1, 2) is
        let g2 = grid_vectors(2, 2, 1);
        assert_eq!(g2, vec![vec![1, 0], vec![0, 1]]);
        assert!(grid_vectors(3, 2, 2).contains(&vec![1, 2, 0]));
    }

    #[test]
    fn ranks_in_example_3() {
        let a = paper_example_3();
        assert_eq!(rank_of(&a, &el(&a, &[("e1", 1)])).unwrap(), 5);
        assert_eq!(rank_of(&a, &el(&a, &[("e2", 1)])).unwrap(), 5);
        assert_eq!(rank_of(&a, &a.zero()).unwrap(), 0);
    }

    #[test]
    fn rank_one_in_example_1() {
        let a = paper_example_1();
        let v = el(&a, &[("X", 1), ("Y", -1)]);
        assert_eq!(rank_of(&a, &v).unwrap(), 1);
        assert!(wedge_rank_test(&a, &v, 1).unwrap());
        assert!(!wedge_rank_test(&a, &v, 0).unwrap());
        assert!(wedge_rank_test(&a, &a.zero(), 0).unwrap());
        assert!(matches!(
            wedge_rank_test(&a, &v, 10),
            Err(CarnotError::BadExponent { .. })
        ));
    }

    #[test]
    fn layer_rank() {
        let f = model_filiform(4).unwrap();
        let e1 = f.basis_element(0);
        assert_eq!(rank_on_layer(&f, &e1, 1).unwrap(), 1);
        assert_eq!(rank_on_layer(&f, &e1, 2).unwrap(), 1);
        assert_eq!(rank_on_layer(&f, &e1, 4).unwrap(), 0);
        assert!(matches!(rank_on_layer(&f, &e1, 5), Err(CarnotError::BadLayerIndex { .. })));
    }

    #[test]
    fn uniform_bounds() {
        let h = heisenberg(1).unwrap();
        let ex = Execution::Sequential;
        assert!(uniform_rank_bound(&h, 1, 1 << 20, ex).unwrap());
        assert!(!uniform_rank_bound(&h, 0, 1 << 20, ex).unwrap());
        let a = paper_example_3();
        assert!(!uniform_rank_bound(&a, 4, 1 << 24, Execution::default()).unwrap());
        assert!(matches!(
            uniform_rank_bound(&a, 4, 10, ex),
            Err(CarnotError::GridBudgetExceeded { .. })
        ));
    }

    #[test]
    fn survey_heisenberg_is_constant_rank() {
        let h = heisenberg(1).unwrap();
        let r = min_rank_survey(&h, None, &SurveyParams::default()).unwrap();
        assert_eq!(r.r_min_found, 1);
        assert_eq!(r.generic_rank, 1);
        assert_eq!(r.span, h.first_layer());
        assert_eq!(r.certification, Certification::ExactUniformBound);
    }

    #[test]
    fn survey_budget() {
        let a = paper_example_3();
        let p = SurveyParams { max_evaluations: 100, ..Default::default() };
        assert!(matches!(
            min_rank_survey(&a, None, &p),
            Err(CarnotError::SearchBudgetExceeded { .. })
        ));
    }

    #[test]
    fn survey_is_deterministic_across_execution_modes() {
        let a = paper_example_1();
        let p = SurveyParams { samples: 60, ..Default::default() };
        let s = SurveyParams { execution: Execution::Sequential, ..p.clone() };
        let r1 = min_rank_survey(&a, None, &p).unwrap();
        let r2 = min_rank_survey(&a, None, &s).unwrap();
        assert_eq!(r1.witnesses, r2.witnesses);
        assert_eq!(r1.span, r2.span);
        assert_eq!(r1.generic_rank, r2.generic_rank);
    }

    #[test]
    fn generated_and_normalizer_in_example_1() {
        let a = paper_example_1();
        let w1 = Subspace::span(
            a.dim(),
            &[
                el(&a, &[("X", 1), ("Y", -1)]).into_coords(),
                el(&a, &[("X", 1), ("X1", -1)]).into_coords(),
                el(&a, &[("X'", 1)]).into_coords(),
                el(&a, &[("Y'", 1)]).into_coords(),
            ],
        );
        let sub = generated_subalgebra(&a, &w1).unwrap();
        assert_eq!(sub.dims(), vec![4, 1]);
        assert!(sub.is_generated());
        let n = normalizer(&a, &w1).unwrap();
        assert!(w1.is_subspace_of(&n));
        assert!(n.contains(el(&a, &[("X1", 1)]).coords()));
        let t = theorem12_space(&a, &w1).unwrap();
        assert!(t.contains(el(&a, &[("X1", 1)]).coords()));
        assert!(!w1.contains(el(&a, &[("X1", 1)]).coords()));
    }

    #[test]
    fn example_3_subspaces() {
        let a = paper_example_3();
        let w1 = Subspace::coordinate(a.dim(), [0, 1]);
        let sub = generated_subalgebra(&a, &w1).unwrap();
        assert_eq!(sub.dims(), vec![2, 1, 1, 1]);
        assert!(!is_ideal(&a, &sub).unwrap());
        assert_eq!(normalizer(&a, &w1).unwrap(), w1);
        assert!(theorem12_space(&a, &w1).unwrap().is_subspace_of(&w1));
    }

    #[test]
    fn whole_algebra_and_center_are_ideals() {
        let h = heisenberg(1).unwrap();
        let all = generated_subalgebra(&h, &h.first_layer()).unwrap();
        assert_eq!(all.whole(), Subspace::full(3));
        assert!(is_ideal(&h, &all).unwrap());
        let center = GradedSubalgebra::from_layers(&h, vec![Subspace::zero(3), h.layer_subspace(2)]).unwrap();
        assert!(is_ideal(&h, &center).unwrap());
        assert!(!center.is_generated());
        assert!(center.to_algebra().is_err());
    }

    #[test]
    fn non_subalgebra_rejected() {
        let h = heisenberg(1).unwrap();
        let r = GradedSubalgebra::from_layers(&h, vec![h.first_layer()]);
        assert_eq!(r.unwrap_err(), CarnotError::NotSubalgebra);
    }

    #[test]
    fn abelian_subspaces() {
        let a = abelian(3).unwrap();
        let w1 = Subspace::coordinate(3, [0]);
        assert_eq!(normalizer(&a, &w1).unwrap(), a.first_layer());
        assert_eq!(theorem12_space(&a, &w1).unwrap(), a.first_layer());
    }

    #[test]
    fn subspace_argument_errors() {
        let h = heisenberg(1).unwrap();
        assert_eq!(
            generated_subalgebra(&h, &Subspace::coordinate(3, [2])).unwrap_err(),
            CarnotError::NotInFirstLayer
        );
        assert_eq!(
            generated_subalgebra(&h, &Subspace::zero(3)).unwrap_err(),
            CarnotError::TrivialSubspace
        );
        assert_eq!(theorem12_space(&h, &h.first_layer()).unwrap_err(), CarnotError::NotProper);
    }

    #[test]
    fn witness_is_integral() {
        let s = Subspace::span(2, &[vec![q(1, 2), q(1, 3)]]);
        let w = witness_outside(&s, &Subspace::zero(2)).unwrap();
        assert_eq!(w.coords(), &[qi(3), qi(2)]);
    }
}
