//! New Carnot algebras from old: direct products, quotients by graded
//! ideals, central products, level-one products, and the built-in catalog.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::algebra::{CarnotAlgebra, Element};
use crate::error::{CarnotError, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rational::Q;

/// A product algebra together with the embeddings of its two factors
/// (matrices from factor coordinates to product coordinates).
#[derive(Clone, Debug)]
pub struct Product {
    pub algebra: CarnotAlgebra,
    pub left: Matrix,
    pub right: Matrix,
}

/// A graded ideal, stored layer by layer; layer `j` lies in `V_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    layers: Vec<Subspace>,
}

impl GradedIdeal {
    /// Checks that each layer lies in the matching `V_j` and that the direct
    /// sum is an ideal.
    pub fn new(alg: &CarnotAlgebra, layers: Vec<Subspace>) -> Result<Self> {
        if layers.len() > alg.step() {
            return Err(CarnotError::NotGradedIdeal(format!(
                "{} layers for a step-{} algebra",
                layers.len(),
                alg.step()
            )));
        }
        for (j, l) in layers.iter().enumerate() {
            if l.ambient() != alg.dim() || !l.supported_in(alg.layer_range(j + 1)) {
                return Err(CarnotError::NotGradedIdeal(format!(
                    "layer {} is not contained in V_{}",
                    j + 1,
                    j + 1
                )));
            }
        }
        let whole = layers
            .iter()
            .fold(Subspace::zero(alg.dim()), |acc, l| acc.sum(l));
        for k in 0..alg.dim() {
            let e = alg.basis_element(k);
            for w in whole.basis() {
                let b = alg.bracket_unchecked(&e, &Element::new(w.clone()));
                if !whole.contains(b.coords()) {
                    return Err(CarnotError::NotGradedIdeal(format!(
                        "[{}, I] leaves I",
                        alg.labels()[k]
                    )));
                }
            }
        }
        Ok(Self { layers })
    }

    pub fn zero(alg: &CarnotAlgebra) -> Self {
        Self { layers: vec![Subspace::zero(alg.dim()); alg.step()] }
    }

    pub fn layers(&self) -> &[Subspace] {
        &self.layers
    }

    pub fn dims(&self) -> Vec<usize> {
        self.layers.iter().map(Subspace::dim).collect()
    }
}

fn dedupe_labels(labels: &mut [String]) {
    let mut seen = BTreeSet::new();
    for l in labels.iter_mut() {
        while seen.contains(l) {
            l.push('\'');
        }
        seen.insert(l.clone());
    }
}

fn name_of(a: &CarnotAlgebra) -> String {
    a.name().replace(char::is_whitespace, "_")
}

/// `A (+) B` with layers `V_i (+) V'_i`; the shorter algebra is padded with
/// zero layers. Cross brackets vanish.
pub fn direct_product(a: &CarnotAlgebra, b: &CarnotAlgebra) -> CarnotAlgebra {
    direct_product_with_embeddings(a, b).algebra
}

pub fn direct_product_with_embeddings(a: &CarnotAlgebra, b: &CarnotAlgebra) -> Product {
    let step = a.step().max(b.step());
    let mut a_map = vec![0; a.dim()];
    let mut b_map = vec![0; b.dim()];
    let mut dims = Vec::with_capacity(step);
    let mut labels = Vec::with_capacity(a.dim() + b.dim());
    let mut idx = 0;
    for layer in 1..=step {
        let mut d = 0;
        if layer <= a.step() {
            for k in a.layer_range(layer) {
                a_map[k] = idx;
                labels.push(a.labels()[k].clone());
                idx += 1;
                d += 1;
            }
        }
        if layer <= b.step() {
            for k in b.layer_range(layer) {
                b_map[k] = idx;
                labels.push(b.labels()[k].clone());
                idx += 1;
                d += 1;
            }
        }
        dims.push(d);
    }
    dedupe_labels(&mut labels);
    let relations = a
        .structure()
        .iter()
        .map(|((i, j), t)| (a_map[*i], a_map[*j], t.iter().map(|(k, c)| (a_map[*k], c.clone())).collect()))
        .chain(b.structure().iter().map(|((i, j), t)| {
            (b_map[*i], b_map[*j], t.iter().map(|(k, c)| (b_map[*k], c.clone())).collect())
        }));
    let algebra = CarnotAlgebra::from_relations(
        format!("direct({},{})", name_of(a), name_of(b)),
        dims,
        Some(labels),
        relations,
    )
    .expect("direct product of well-formed algebras is well-formed");
    let n = algebra.dim();
    let mut left = Matrix::zeros(n, a.dim());
    for (k, &m) in a_map.iter().enumerate() {
        left.set(m, k, Q::one());
    }
    let mut right = Matrix::zeros(n, b.dim());
    for (k, &m) in b_map.iter().enumerate() {
        right.set(m, k, Q::one());
    }
    Product { algebra, left, right }
}

/// Quotient by a graded ideal together with the projection matrix onto the
/// quotient coordinates.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: CarnotAlgebra,
    pub projection: Matrix,
}

/// `A / I`. The complement basis of each layer is the set of coordinate
/// vectors on the non-pivot columns of the echelon basis of `I`.
pub fn quotient_by_graded_ideal(a: &CarnotAlgebra, ideal: &GradedIdeal) -> Result<CarnotAlgebra> {
    quotient_with_projection(a, ideal).map(|q| q.algebra)
}

pub fn quotient_with_projection(a: &CarnotAlgebra, ideal: &GradedIdeal) -> Result<Quotient> {
    // re-run the ideal test so hand-built values cannot slip through
    let ideal = GradedIdeal::new(a, ideal.layers.clone())?;
    let whole = ideal
        .layers
        .iter()
        .fold(Subspace::zero(a.dim()), |acc, l| acc.sum(l));
    let keep = whole.complement_columns();
    let mut new_index = vec![usize::MAX; a.dim()];
    for (m, &k) in keep.iter().enumerate() {
        new_index[k] = m;
    }
    let mut dims: Vec<usize> = (1..=a.step())
        .map(|l| keep.iter().filter(|&&k| a.layer_of(k) == l).count())
        .collect();
    while dims.last() == Some(&0) {
        dims.pop();
    }
    if dims.is_empty() {
        return Err(CarnotError::QuotientNotCarnot("quotient is zero".into()));
    }
    if let Some(j) = dims.iter().position(|&d| d == 0) {
        return Err(CarnotError::QuotientNotCarnot(format!("layer {} vanishes", j + 1)));
    }
    let project = |v: &[Q]| -> Vec<(usize, Q)> {
        let r = whole.reduce(v);
        keep.iter()
            .enumerate()
            .filter(|(_, &k)| !r[k].is_zero())
            .map(|(m, &k)| (m, r[k].clone()))
            .collect()
    };
    let mut relations = Vec::new();
    for (x, &i) in keep.iter().enumerate() {
        for &j in &keep[x + 1..] {
            let br = a.bracket_basis(i, j);
            let t = project(br.coords());
            if !t.is_empty() {
                relations.push((new_index[i], new_index[j], t));
            }
        }
    }
    let labels: Vec<String> = keep.iter().map(|&k| a.labels()[k].clone()).collect();
    let algebra = CarnotAlgebra::from_relations(
        format!("quotient({})", name_of(a)),
        dims,
        Some(labels),
        relations,
    )?;
    let report = algebra.validate();
    if !report.passed() {
        return Err(CarnotError::QuotientNotCarnot(report.failures().join("; ")));
    }
    let mut projection = Matrix::zeros(keep.len(), a.dim());
    for j in 0..a.dim() {
        for (m, c) in project(a.basis_element(j).coords()) {
            projection.set(m, j, c);
        }
    }
    Ok(Quotient { algebra, projection })
}

/// Central product: `(A (+) B) / {f(w) - w : w in W}` for subspaces `W` of
/// the top layer of `A` and `W'` of the top layer of `B`, with `f` given as a
/// `dim W' x dim W` matrix in the echelon bases of `W` and `W'`.
pub fn central_product(
    a: &CarnotAlgebra,
    b: &CarnotAlgebra,
    w: &Subspace,
    w_prime: &Subspace,
    f: &Matrix,
) -> Result<CarnotAlgebra> {
    central_product_with_embeddings(a, b, w, w_prime, f).map(|p| p.algebra)
}

pub fn central_product_with_embeddings(
    a: &CarnotAlgebra,
    b: &CarnotAlgebra,
    w: &Subspace,
    w_prime: &Subspace,
    f: &Matrix,
) -> Result<Product> {
    if a.step() != b.step() {
        return Err(CarnotError::StepMismatch(a.step(), b.step()));
    }
    let m = a.step();
    if w.ambient() != a.dim() || !w.supported_in(a.layer_range(m)) {
        return Err(CarnotError::NotGradedIdeal("W is not in the top layer of the first factor".into()));
    }
    if w_prime.ambient() != b.dim() || !w_prime.supported_in(b.layer_range(m)) {
        return Err(CarnotError::NotGradedIdeal(
            "W' is not in the top layer of the second factor".into(),
        ));
    }
    if f.rows() != w_prime.dim() || f.cols() != w.dim() {
        return Err(CarnotError::DimensionMismatch(format!(
            "gluing map is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            w_prime.dim(),
            w.dim()
        )));
    }
    if f.rank() != w.dim() || w.dim() != w_prime.dim() {
        return Err(CarnotError::NotInvertible);
    }
    let prod = direct_product_with_embeddings(a, b);
    let n = prod.algebra.dim();
    let gens: Vec<Vec<Q>> = (0..w.dim())
        .map(|i| {
            let mut img = vec![Q::zero(); b.dim()];
            for (j, wp) in w_prime.basis().iter().enumerate() {
                let c = &f[(j, i)];
                if !c.is_zero() {
                    for (o, x) in img.iter_mut().zip(wp) {
                        *o += c * x;
                    }
                }
            }
            let fw = prod.right.mul_vec(&img);
            let lw = prod.left.mul_vec(&w.basis()[i]);
            fw.iter().zip(&lw).map(|(x, y)| x - y).collect()
        })
        .collect();
    let mut layers = vec![Subspace::zero(n); m];
    layers[m - 1] = Subspace::span(n, &gens);
    let ideal = GradedIdeal::new(&prod.algebra, layers)?;
    let quot = quotient_with_projection(&prod.algebra, &ideal)?;
    let algebra = quot
        .algebra
        .with_name(format!("central({},{})", name_of(a), name_of(b)));
    Ok(Product {
        left: quot.projection.mul(&prod.left),
        right: quot.projection.mul(&prod.right),
        algebra,
    })
}

/// Central product gluing the full top layers by the identity of their
/// standard bases. Requires equal steps and equal top-layer dimensions.
pub fn central_product_glue_top(a: &CarnotAlgebra, b: &CarnotAlgebra) -> Result<Product> {
    if a.step() != b.step() {
        return Err(CarnotError::StepMismatch(a.step(), b.step()));
    }
    let m = a.step();
    let w = a.layer_subspace(m);
    let wp = b.layer_subspace(m);
    if w.dim() != wp.dim() {
        return Err(CarnotError::NotInvertible);
    }
    central_product_with_embeddings(a, b, &w, &wp, &Matrix::identity(w.dim()))
}

/// Choice data for one factor of a level-one product: the distinguished
/// first-layer vector `X_0` and a complement `U_1` of the line through it.
#[derive(Clone, Debug)]
pub struct LevelOneFactor {
    pub x0: Element,
    pub u1: Subspace,
}

impl LevelOneFactor {
    /// `X_0` = first basis vector, `U_1` = span of the remaining `V_1` basis.
    pub fn default_for(alg: &CarnotAlgebra) -> Self {
        Self {
            x0: alg.basis_element(0),
            u1: Subspace::coordinate(alg.dim(), alg.layer_range(1).skip(1)),
        }
    }

    fn check(&self, alg: &CarnotAlgebra) -> Result<Matrix> {
        alg.check_element(&self.x0)?;
        let v1 = alg.layer_range(1);
        let d1 = v1.len();
        if self.x0.is_zero() || !Subspace::span(alg.dim(), &[self.x0.coords().to_vec()]).supported_in(v1.clone())
        {
            return Err(CarnotError::NotComplement);
        }
        if self.u1.ambient() != alg.dim() || !self.u1.supported_in(v1.clone()) || self.u1.dim() + 1 != d1 {
            return Err(CarnotError::NotComplement);
        }
        // columns: U_1 basis then X_0, restricted to V_1 coordinates
        let mut cols: Vec<Vec<Q>> = self.u1.basis().iter().map(|r| r[v1.clone()].to_vec()).collect();
        cols.push(self.x0.coords()[v1].to_vec());
        let basis = Matrix::from_columns(d1, &cols);
        basis.inverse().ok_or(CarnotError::NotComplement)
    }
}

/// Level-one product of two 2-step algebras: first layer
/// `U_1 (+) U'_1 (+) R X`, second layer `V_2 (+) V'_2`, with
/// `[u + u' + aX, v + v' + bX] = [u,v] + b[u,X_0] + [u',v'] + b[u',X'_0]
///  + a[X_0,v] + a[X'_0,v']`.
pub fn level_one_product(
    a: &CarnotAlgebra,
    b: &CarnotAlgebra,
    fa: &LevelOneFactor,
    fb: &LevelOneFactor,
) -> Result<CarnotAlgebra> {
    level_one_product_with_embeddings(a, b, fa, fb).map(|p| p.algebra)
}

pub fn level_one_product_with_embeddings(
    a: &CarnotAlgebra,
    b: &CarnotAlgebra,
    fa: &LevelOneFactor,
    fb: &LevelOneFactor,
) -> Result<Product> {
    if a.step() != 2 || b.step() != 2 {
        return Err(CarnotError::NotTwoStep);
    }
    let inv_a = fa.check(a)?;
    let inv_b = fb.check(b)?;
    let ka = fa.u1.dim();
    let kb = fb.u1.dim();
    let x_idx = ka + kb;
    let d1 = ka + kb + 1;
    let a2 = a.layer_range(2);
    let b2 = b.layer_range(2);
    let a2_off = d1;
    let b2_off = d1 + a2.len();
    let n = d1 + a2.len() + b2.len();

    let a_u: Vec<Element> = fa.u1.basis().iter().map(|r| Element::new(r.clone())).collect();
    let b_u: Vec<Element> = fb.u1.basis().iter().map(|r| Element::new(r.clone())).collect();

    let to_a2 = |v: &Element| -> Vec<(usize, Q)> {
        a2.clone()
            .filter(|&k| !v.coords()[k].is_zero())
            .map(|k| (a2_off + k - a2.start, v.coords()[k].clone()))
            .collect()
    };
    let to_b2 = |v: &Element| -> Vec<(usize, Q)> {
        b2.clone()
            .filter(|&k| !v.coords()[k].is_zero())
            .map(|k| (b2_off + k - b2.start, v.coords()[k].clone()))
            .collect()
    };

    let mut relations = Vec::new();
    for i in 0..ka {
        for j in i + 1..ka {
            relations.push((i, j, to_a2(&a.bracket_unchecked(&a_u[i], &a_u[j]))));
        }
        relations.push((i, x_idx, to_a2(&a.bracket_unchecked(&a_u[i], &fa.x0))));
    }
    for i in 0..kb {
        for j in i + 1..kb {
            relations.push((ka + i, ka + j, to_b2(&b.bracket_unchecked(&b_u[i], &b_u[j]))));
        }
        relations.push((ka + i, x_idx, to_b2(&b.bracket_unchecked(&b_u[i], &fb.x0))));
    }

    let mut labels: Vec<String> = a_u.iter().map(|u| a.render_compact(u)).collect();
    labels.extend(b_u.iter().map(|u| b.render_compact(u)));
    labels.push("X".into());
    labels.extend(a2.clone().map(|k| a.labels()[k].clone()));
    labels.extend(b2.clone().map(|k| b.labels()[k].clone()));
    dedupe_labels(&mut labels);

    let algebra = CarnotAlgebra::from_relations(
        format!("level_one({},{})", name_of(a), name_of(b)),
        vec![d1, a2.len() + b2.len()],
        Some(labels),
        relations,
    )?
    .validated()?;

    // factor embeddings: e_k in V_1 = u + c X_0 maps to u + c X
    let embed = |alg: &CarnotAlgebra, inv: &Matrix, u_off: usize, k_dim: usize, v2_off: usize| {
        let mut m = Matrix::zeros(n, alg.dim());
        for k in alg.layer_range(1) {
            let col = inv.column(k);
            for (c, x) in col.iter().enumerate().take(k_dim) {
                m.set(u_off + c, k, x.clone());
            }
            m.set(x_idx, k, col[k_dim].clone());
        }
        for k in alg.layer_range(2) {
            m.set(v2_off + k - alg.layer_range(2).start, k, Q::one());
        }
        m
    };
    let left = embed(a, &inv_a, 0, ka, a2_off);
    let right = embed(b, &inv_b, ka, kb, b2_off);
    Ok(Product { algebra, left, right })
}

/// Built-in algebra families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogFamily {
    Heisenberg,
    Abelian,
    ModelFiliform,
    FreeTwoStep,
    PaperExample1,
    PaperExample3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub family: CatalogFamily,
    pub param: Option<usize>,
    pub provenance: &'static str,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<CarnotAlgebra> {
        let p = self.param.unwrap_or(0);
        match self.family {
            CatalogFamily::Heisenberg => heisenberg(p),
            CatalogFamily::Abelian => abelian(p),
            CatalogFamily::ModelFiliform => model_filiform(p),
            CatalogFamily::FreeTwoStep => free_two_step(p),
            CatalogFamily::PaperExample1 => Ok(paper_example_1()),
            CatalogFamily::PaperExample3 => Ok(paper_example_3()),
        }
    }
}

/// Parses a catalog name such as `heisenberg_2`, `model_filiform_4` or
/// `paper_example_3`.
pub fn catalog_entry(name: &str) -> Result<CatalogEntry> {
    let families: [(&str, CatalogFamily, &str); 4] = [
        ("heisenberg", CatalogFamily::Heisenberg, "Heisenberg algebra [x_i, y_i] = z"),
        ("abelian", CatalogFamily::Abelian, "abelian algebra R^n"),
        ("model_filiform", CatalogFamily::ModelFiliform, "model filiform [e1, e_i] = e_(i+1)"),
        ("free_2step", CatalogFamily::FreeTwoStep, "free 2-step nilpotent [X_i, X_j] = X_ij"),
    ];
    match name {
        "paper_example_1" => {
            return Ok(CatalogEntry {
                name: name.into(),
                family: CatalogFamily::PaperExample1,
                param: None,
                provenance: "3-step example with W_1 of rank 1 and [X1, W_1] = 0",
            })
        }
        "paper_example_3" => {
            return Ok(CatalogEntry {
                name: name.into(),
                family: CatalogFamily::PaperExample3,
                param: None,
                provenance: "model filiform F^4 (+) free F_{2,6} with six extra brackets",
            })
        }
        _ => {}
    }
    for (prefix, family, provenance) in families {
        if let Some(rest) = name.strip_prefix(prefix) {
            let Some(p) = rest.strip_prefix('_') else {
                if rest.is_empty() {
                    return Err(CarnotError::BadParams(format!("`{prefix}` needs a size, e.g. {prefix}_2")));
                }
                continue;
            };
            let p: usize = p
                .parse()
                .map_err(|_| CarnotError::BadParams(format!("bad size in `{name}`")))?;
            let entry = CatalogEntry { name: name.into(), family, param: Some(p), provenance };
            entry.build()?;
            return Ok(entry);
        }
    }
    Err(CarnotError::UnknownCatalogName(name.into()))
}

/// Builds a catalog algebra by name.
pub fn catalog(name: &str) -> Result<CarnotAlgebra> {
    catalog_entry(name)?.build()
}

/// Representative catalog names, in a fixed order.
pub fn catalog_names() -> Vec<&'static str> {
    vec![
        "abelian_1",
        "abelian_2",
        "abelian_3",
        "heisenberg_1",
        "heisenberg_2",
        "heisenberg_3",
        "model_filiform_3",
        "model_filiform_4",
        "model_filiform_5",
        "model_filiform_6",
        "free_2step_2",
        "free_2step_3",
        "free_2step_4",
        "free_2step_6",
        "paper_example_1",
        "paper_example_3",
    ]
}

/// `h_n`: basis `x1 y1 ... xn yn | z`, `[x_i, y_i] = z`.
pub fn heisenberg(n: usize) -> Result<CarnotAlgebra> {
    if n == 0 {
        return Err(CarnotError::BadParams("heisenberg needs n >= 1".into()));
    }
    let mut labels = Vec::with_capacity(2 * n + 1);
    for i in 1..=n {
        labels.push(format!("x{i}"));
        labels.push(format!("y{i}"));
    }
    labels.push("z".into());
    let rel = (0..n).map(|i| (2 * i, 2 * i + 1, vec![(2 * n, Q::one())]));
    CarnotAlgebra::from_relations(format!("heisenberg_{n}"), vec![2 * n, 1], Some(labels), rel)
}

pub fn abelian(n: usize) -> Result<CarnotAlgebra> {
    if n == 0 {
        return Err(CarnotError::BadParams("abelian needs n >= 1".into()));
    }
    CarnotAlgebra::new(format!("abelian_{n}"), vec![n], None, Default::default())
}

/// `F^r`: basis `e1 e2 | e3 | ... | e_(r+1)`, `[e1, e_i] = e_(i+1)` for `2 <= i <= r`.
pub fn model_filiform(r: usize) -> Result<CarnotAlgebra> {
    if r < 2 {
        return Err(CarnotError::BadParams("model_filiform needs r >= 2".into()));
    }
    let mut dims = vec![2];
    dims.extend(std::iter::repeat_n(1, r - 1));
    let rel = (1..r).map(|i| (0, i, vec![(i + 1, Q::one())]));
    CarnotAlgebra::from_relations(format!("model_filiform_{r}"), dims, None, rel)
}

fn free_label(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("X{i}{j}")
    } else {
        format!("X{i}_{j}")
    }
}

/// `F_{2,n}`: basis `X1..Xn | X_ij (i < j, lexicographic)`, `[X_i, X_j] = X_ij`.
pub fn free_two_step(n: usize) -> Result<CarnotAlgebra> {
    if n < 2 {
        return Err(CarnotError::BadParams("free_2step needs n >= 2".into()));
    }
    let mut labels: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
    let mut rel = Vec::new();
    let mut idx = n;
    for i in 0..n {
        for j in i + 1..n {
            labels.push(free_label(i + 1, j + 1, n));
            rel.push((i, j, vec![(idx, Q::one())]));
            idx += 1;
        }
    }
    CarnotAlgebra::from_relations(
        format!("free_2step_{n}"),
        vec![n, n * (n - 1) / 2],
        Some(labels),
        rel,
    )
}

type Relation = (usize, usize, Vec<(usize, Q)>);

fn by_label(labels: &[String], relations: &[(&str, &str, &str)]) -> Vec<Relation> {
    let at = |l: &str| labels.iter().position(|x| x == l).expect("catalog label");
    relations
        .iter()
        .map(|(a, b, c)| (at(a), at(b), vec![(at(c), Q::one())]))
        .collect()
}

/// Basis `X Y X' Y' X1 X2 | Z X12 | X121 X122`.
pub fn paper_example_1() -> CarnotAlgebra {
    let labels: Vec<String> = ["X", "Y", "X'", "Y'", "X1", "X2", "Z", "X12", "X121", "X122"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let rel = by_label(
        &labels,
        &[
            ("X", "Y", "Z"),
            ("X'", "Y'", "Z"),
            ("X1", "X2", "X12"),
            ("X", "X2", "X12"),
            ("Y", "X2", "X12"),
            ("X12", "X1", "X121"),
            ("X12", "X", "X121"),
            ("X12", "Y", "X121"),
            ("X12", "X2", "X122"),
        ],
    );
    CarnotAlgebra::from_relations("paper_example_1", vec![6, 2, 2], Some(labels), rel)
        .expect("catalog algebra")
}

/// `F^4 (+) F_{2,6}` plus six brackets between the factors. Basis
/// `e1 e2 X1..X6 | e3 X12..X56 | e4 | e5`.
pub fn paper_example_3() -> CarnotAlgebra {
    let base = direct_product(
        &model_filiform(4).expect("catalog algebra"),
        &free_two_step(6).expect("catalog algebra"),
    );
    let labels = base.labels().to_vec();
    let mut rel: Vec<Relation> = base
        .structure()
        .iter()
        .map(|((i, j), t)| (*i, *j, t.clone()))
        .collect();
    rel.extend(by_label(
        &labels,
        &[
            ("e2", "X2", "X13"),
            ("e2", "X3", "X24"),
            ("e2", "X4", "X35"),
            ("e2", "X6", "X15"),
            ("e1", "X1", "X26"),
            ("e1", "X5", "X46"),
        ],
    ));
    CarnotAlgebra::from_relations("paper_example_3", base.layer_dims().to_vec(), Some(labels), rel)
        .expect("catalog algebra")
}
