//! Graded nilpotent Lie algebras given by exact structure constants.
//!
//! Basis vectors are ordered layer-major: all of `V_1` first, then `V_2`, and
//! so on, so every layer is a contiguous index range. Structure constants are
//! stored sparsely for `i < j` only; `[e_j, e_i] = -[e_i, e_j]` and
//! `[e_i, e_i] = 0` are synthesized.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Range, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{CarnotError, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rational::{fmt_q, Q};

/// Sparse bracket table: `(i, j)` with `i < j` maps to the nonzero
/// coefficients `(k, c)` of `[e_i, e_j] = sum c e_k`, sorted by `k`.
pub type BracketTable = BTreeMap<(usize, usize), Vec<(usize, Q)>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarnotAlgebra {
    name: String,
    layer_dims: Vec<usize>,
    labels: Vec<String>,
    structure: BracketTable,
    layer_of: Vec<usize>,
    offsets: Vec<usize>,
}

/// A vector of the algebra in basis coordinates. The same representation
/// serves as a group point in exponential coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(Vec<Q>);

impl Element {
    pub fn new(coords: Vec<Q>) -> Self {
        Element(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Element(vec![Q::zero(); dim])
    }

    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = vec![Q::zero(); dim];
        v[k] = Q::one();
        Element(v)
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Q> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Q) -> Element {
        Element(self.0.iter().map(|x| x * c).collect())
    }

    /// Adds `c * other` in place.
    pub fn axpy(&mut self, c: &Q, other: &Element) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element(self.0.iter().map(|a| -a).collect())
    }
}

impl From<Vec<Q>> for Element {
    fn from(v: Vec<Q>) -> Self {
        Element(v)
    }
}

/// Outcome of one structural check in a [`ValidationReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "fail" };
            if c.detail.is_empty() {
                writeln!(f, "{}: {}", c.name, status)?;
            } else {
                writeln!(f, "{}: {} ({})", c.name, status, c.detail)?;
            }
        }
        writeln!(f, "overall: {}", if self.passed() { "pass" } else { "fail" })
    }
}

/// Result of checking a linear map between two graded algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradedMapCheck {
    pub layer_preserving: bool,
    pub bracket_preserving: bool,
    pub injective: bool,
    pub surjective: bool,
}

impl GradedMapCheck {
    pub fn is_graded_homomorphism(&self) -> bool {
        self.layer_preserving && self.bracket_preserving
    }

    pub fn is_graded_monomorphism(&self) -> bool {
        self.is_graded_homomorphism() && self.injective
    }

    pub fn is_graded_isomorphism(&self) -> bool {
        self.is_graded_homomorphism() && self.injective && self.surjective
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

fn valid_label(l: &str) -> bool {
    !l.is_empty()
        && !l.chars().any(|c| c.is_whitespace() || c == ',')
        && l.parse::<f64>().is_err()
}

impl CarnotAlgebra {
    /// Builds an algebra from a table already keyed by `i < j`. Only
    /// structural well-formedness is checked here; see [`Self::validate`].
    pub fn new(
        name: impl Into<String>,
        layer_dims: Vec<usize>,
        labels: Option<Vec<String>>,
        structure: BracketTable,
    ) -> Result<Self> {
        if layer_dims.is_empty() {
            return Err(CarnotError::Malformed("no layers".into()));
        }
        if layer_dims.contains(&0) {
            return Err(CarnotError::Malformed("layer of dimension zero".into()));
        }
        let n: usize = layer_dims.iter().sum();
        let labels = labels.unwrap_or_else(|| default_labels(n));
        if labels.len() != n {
            return Err(CarnotError::Malformed(format!(
                "{} labels for dimension {n}",
                labels.len()
            )));
        }
        if let Some(bad) = labels.iter().find(|l| !valid_label(l)) {
            return Err(CarnotError::Malformed(format!("invalid basis label `{bad}`")));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(CarnotError::Malformed("duplicate basis labels".into()));
        }
        let mut clean = BracketTable::new();
        for ((i, j), targets) in structure {
            if i >= j {
                return Err(CarnotError::Malformed(format!(
                    "bracket key ({}, {}) must satisfy i < j",
                    i + 1,
                    j + 1
                )));
            }
            if j >= n {
                return Err(CarnotError::IndexOutOfRange { index: j + 1, dim: n });
            }
            let mut merged: BTreeMap<usize, Q> = BTreeMap::new();
            for (k, c) in targets {
                if k >= n {
                    return Err(CarnotError::IndexOutOfRange { index: k + 1, dim: n });
                }
                *merged.entry(k).or_insert_with(Q::zero) += c;
            }
            let v: Vec<(usize, Q)> = merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !v.is_empty() {
                clean.insert((i, j), v);
            }
        }
        let mut layer_of = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(layer_dims.len() + 1);
        let mut off = 0;
        for (l, &d) in layer_dims.iter().enumerate() {
            offsets.push(off);
            layer_of.extend(std::iter::repeat_n(l + 1, d));
            off += d;
        }
        offsets.push(off);
        Ok(Self {
            name: name.into(),
            layer_dims,
            labels,
            structure: clean,
            layer_of,
            offsets,
        })
    }

    /// Builds from bracket relations `[e_i, e_j] = sum c e_k` given in any
    /// order; `i > j` is flipped with a sign and repeated keys are summed.
    pub fn from_relations(
        name: impl Into<String>,
        layer_dims: Vec<usize>,
        labels: Option<Vec<String>>,
        relations: impl IntoIterator<Item = (usize, usize, Vec<(usize, Q)>)>,
    ) -> Result<Self> {
        let mut table = BracketTable::new();
        for (i, j, targets) in relations {
            if i == j {
                if targets.iter().any(|(_, c)| !c.is_zero()) {
                    return Err(CarnotError::Malformed(format!(
                        "diagonal bracket [e{0}, e{0}] must vanish",
                        i + 1
                    )));
                }
                continue;
            }
            let (key, sign) = if i < j { ((i, j), Q::one()) } else { ((j, i), -Q::one()) };
            table
                .entry(key)
                .or_default()
                .extend(targets.into_iter().map(|(k, c)| (k, c * &sign)));
        }
        Self::new(name, layer_dims, labels, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn step(&self) -> usize {
        self.layer_dims.len()
    }

    pub fn layer_dims(&self) -> &[usize] {
        &self.layer_dims
    }

    pub fn dim(&self) -> usize {
        self.layer_of.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure(&self) -> &BracketTable {
        &self.structure
    }

    /// 1-based layer of basis index `k`.
    pub fn layer_of(&self, k: usize) -> usize {
        self.layer_of[k]
    }

    /// Basis index range of layer `i` (1-based).
    pub fn layer_range(&self, i: usize) -> Range<usize> {
        self.offsets[i - 1]..self.offsets[i]
    }

    pub fn check_layer(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.step() {
            return Err(CarnotError::BadLayerIndex { index: i, max: self.step() });
        }
        Ok(())
    }

    /// `V_i` as a subspace of the whole algebra.
    pub fn layer_subspace(&self, i: usize) -> Subspace {
        Subspace::coordinate(self.dim(), self.layer_range(i)).with_layer(i)
    }

    pub fn first_layer(&self) -> Subspace {
        self.layer_subspace(1)
    }

    pub fn basis_element(&self, k: usize) -> Element {
        Element::basis(self.dim(), k)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.dim())
    }

    /// Element from first-layer coordinates (zero elsewhere).
    pub fn horizontal(&self, first_layer: &[Q]) -> Element {
        let mut v = vec![Q::zero(); self.dim()];
        v[..first_layer.len()].clone_from_slice(first_layer);
        Element(v)
    }

    pub fn check_element(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(CarnotError::AlgebraMismatch { expected: self.dim(), got: x.dim() });
        }
        Ok(())
    }

    /// `[e_i, e_j]` with antisymmetry synthesized.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Element {
        let mut out = self.zero();
        let (key, sign) = match i.cmp(&j) {
            std::cmp::Ordering::Equal => return out,
            std::cmp::Ordering::Less => ((i, j), Q::one()),
            std::cmp::Ordering::Greater => ((j, i), -Q::one()),
        };
        if let Some(t) = self.structure.get(&key) {
            for (k, c) in t {
                out.0[*k] = c * &sign;
            }
        }
        out
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &Element, y: &Element) -> Element {
        let mut out = vec![Q::zero(); self.dim()];
        let (xs, ys) = (&x.0, &y.0);
        for ((i, j), targets) in &self.structure {
            let (i, j) = (*i, *j);
            let c = match (xs[i].is_zero() || ys[j].is_zero(), xs[j].is_zero() || ys[i].is_zero()) {
                (true, true) => continue,
                (false, true) => &xs[i] * &ys[j],
                (true, false) => -(&xs[j] * &ys[i]),
                (false, false) => &xs[i] * &ys[j] - &xs[j] * &ys[i],
            };
            if c.is_zero() {
                continue;
            }
            for (k, s) in targets {
                out[*k] += &c * s;
            }
        }
        Element(out)
    }

    /// Matrix of `ad(x) = [x, .]`; column `j` is `[x, e_j]`.
    pub fn ad_matrix(&self, x: &Element) -> Result<Matrix> {
        self.check_element(x)?;
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for ((i, j), targets) in &self.structure {
            let (i, j) = (*i, *j);
            // [x, e_j] gets x_i [e_i, e_j]; [x, e_i] gets -x_j [e_i, e_j]
            for (k, c) in targets {
                if !x.0[i].is_zero() {
                    let v = &m[(*k, j)] + &x.0[i] * c;
                    m.set(*k, j, v);
                }
                if !x.0[j].is_zero() {
                    let v = &m[(*k, i)] - &x.0[j] * c;
                    m.set(*k, i, v);
                }
            }
        }
        Ok(m)
    }

    /// `ad(x)` restricted to the domain `V_i`: an `n x d_i` matrix.
    pub fn ad_matrix_on_layer(&self, x: &Element, i: usize) -> Result<Matrix> {
        self.check_layer(i)?;
        let full = self.ad_matrix(x)?;
        let rows: Vec<usize> = (0..self.dim()).collect();
        let cols: Vec<usize> = self.layer_range(i).collect();
        Ok(full.submatrix(&rows, &cols))
    }

    /// The dilation `lambda_t`: layer `i` scaled by `t^i`.
    pub fn dilate(&self, t: &Q, x: &Element) -> Result<Element> {
        self.check_element(x)?;
        if !t.is_positive() {
            return Err(CarnotError::NonPositiveScale);
        }
        let mut pow = Vec::with_capacity(self.step());
        let mut acc = Q::one();
        for _ in 0..self.step() {
            acc *= t;
            pow.push(acc.clone());
        }
        Ok(Element(
            x.0.iter()
                .enumerate()
                .map(|(k, c)| c * &pow[self.layer_of[k] - 1])
                .collect(),
        ))
    }

    /// `sum_i i * dim V_i`.
    pub fn hausdorff_dimension(&self) -> usize {
        self.layer_dims
            .iter()
            .enumerate()
            .map(|(i, d)| (i + 1) * d)
            .sum()
    }

    /// Checks storage antisymmetry, grading, the Jacobi identity on all basis
    /// triples and generation `[V_1, V_i] = V_{i+1}`, all exactly.
    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::with_capacity(4);

        let bad_key = self.structure.keys().find(|(i, j)| i >= j);
        checks.push(CheckOutcome {
            name: "antisymmetry",
            passed: bad_key.is_none(),
            detail: bad_key
                .map(|(i, j)| format!("stored key ({}, {})", i + 1, j + 1))
                .unwrap_or_default(),
        });

        let mut grading_detail = String::new();
        'outer: for ((i, j), targets) in &self.structure {
            let want = self.layer_of[*i] + self.layer_of[*j];
            for (k, _) in targets {
                if self.layer_of[*k] != want {
                    grading_detail = format!(
                        "[{}, {}] has a component on {} in layer {}, expected layer {}",
                        self.labels[*i], self.labels[*j], self.labels[*k], self.layer_of[*k], want
                    );
                    break 'outer;
                }
            }
        }
        checks.push(CheckOutcome {
            name: "grading",
            passed: grading_detail.is_empty(),
            detail: grading_detail,
        });

        let n = self.dim();
        let basis: Vec<Element> = (0..n).map(|k| self.basis_element(k)).collect();
        let brackets: Vec<Vec<Element>> = (0..n)
            .map(|i| (0..n).map(|j| self.bracket_basis(i, j)).collect())
            .collect();
        let mut jacobi_detail = String::new();
        'jac: for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket_unchecked(&basis[i], &brackets[j][k]);
                    let b = self.bracket_unchecked(&basis[j], &brackets[k][i]);
                    let c = self.bracket_unchecked(&basis[k], &brackets[i][j]);
                    let s = &(&a + &b) + &c;
                    if !s.is_zero() {
                        jacobi_detail = format!(
                            "fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        );
                        break 'jac;
                    }
                }
            }
        }
        checks.push(CheckOutcome {
            name: "jacobi",
            passed: jacobi_detail.is_empty(),
            detail: jacobi_detail,
        });

        let mut gen_detail = String::new();
        for layer in 1..self.step() {
            let vecs: Vec<Vec<Q>> = self
                .layer_range(1)
                .flat_map(|a| self.layer_range(layer).map(move |b| (a, b)))
                .map(|(a, b)| brackets[a][b].0.clone())
                .collect();
            let span = Subspace::span(n, &vecs);
            if span != self.layer_subspace(layer + 1) {
                gen_detail = format!(
                    "[V_1, V_{layer}] has dimension {} but V_{} has dimension {}",
                    span.dim(),
                    layer + 1,
                    self.layer_dims[layer]
                );
                break;
            }
        }
        checks.push(CheckOutcome {
            name: "generation",
            passed: gen_detail.is_empty(),
            detail: gen_detail,
        });

        ValidationReport { checks }
    }

    pub fn validated(self) -> Result<Self> {
        let report = self.validate();
        if report.passed() {
            Ok(self)
        } else {
            Err(CarnotError::InvalidAlgebra(report.failures().join("; ")))
        }
    }

    /// Checks whether `map` (a `target.dim() x self.dim()` matrix acting on
    /// basis coordinates) is layer preserving and bracket preserving.
    pub fn verify_graded_map(&self, target: &CarnotAlgebra, map: &Matrix) -> Result<GradedMapCheck> {
        if map.rows() != target.dim() || map.cols() != self.dim() {
            return Err(CarnotError::DimensionMismatch(format!(
                "map is {}x{}, expected {}x{}",
                map.rows(),
                map.cols(),
                target.dim(),
                self.dim()
            )));
        }
        let layer_preserving = (0..self.dim()).all(|j| {
            let layer = self.layer_of[j];
            (0..target.dim()).all(|i| map[(i, j)].is_zero() || target.layer_of[i] == layer)
        });
        let images: Vec<Element> = (0..self.dim()).map(|j| Element(map.column(j))).collect();
        let mut bracket_preserving = true;
        'pairs: for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let lhs = Element(map.mul_vec(self.bracket_basis(i, j).coords()));
                let rhs = target.bracket_unchecked(&images[i], &images[j]);
                if lhs != rhs {
                    bracket_preserving = false;
                    break 'pairs;
                }
            }
        }
        let rank = map.rank();
        Ok(GradedMapCheck {
            layer_preserving,
            bracket_preserving,
            injective: rank == self.dim(),
            surjective: rank == target.dim(),
        })
    }

    /// Renders an element as a linear combination of basis labels, for
    /// example `e1 + e2 + 1/2 e3`.
    pub fn render(&self, x: &Element) -> String {
        let mut out = String::new();
        for (k, c) in x.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&fmt_q(&mag));
                out.push(' ');
            }
            out.push_str(&self.labels[k]);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Compact label form without spaces, e.g. `X-Y` or `2*e1+1/2*e3`.
    pub fn render_compact(&self, x: &Element) -> String {
        self.render(x)
            .replace(" - ", "-")
            .replace(" + ", "+")
            .replace(' ', "*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    fn heis() -> CarnotAlgebra {
        CarnotAlgebra::from_relations("h", vec![2, 1], None, [(0, 1, vec![(2, qi(1))])]).unwrap()
    }

    #[test]
    fn heisenberg_validates_and_brackets() {
        let h = heis();
        assert!(h.validate().passed());
        let e = |k| h.basis_element(k);
        assert_eq!(h.bracket(&e(0), &e(1)).unwrap(), e(2));
        assert_eq!(h.bracket(&e(1), &e(0)).unwrap(), -&e(2));
        assert_eq!(h.hausdorff_dimension(), 4);
    }

    #[test]
    fn retargeted_bracket_fails_grading() {
        let bad =
            CarnotAlgebra::from_relations("bad", vec![2, 1], None, [(0, 1, vec![(0, qi(1))])]).unwrap();
        let r = bad.validate();
        assert!(!r.check("grading").unwrap().passed);
        assert!(!r.passed());
    }

    #[test]
    fn missing_generator_fails_generation() {
        let bad = CarnotAlgebra::from_relations("bad", vec![2, 1], None, []).unwrap();
        let r = bad.validate();
        assert!(r.check("grading").unwrap().passed);
        assert!(!r.check("generation").unwrap().passed);
    }

    #[test]
    fn jacobi_failure_detected() {
        // [e1,e2]=e4, [e2,e3]=e5, [e1,e5]=e6, [e3,e4]=e6 breaks Jacobi on (e1,e2,e3)
        let bad = CarnotAlgebra::from_relations(
            "bad",
            vec![3, 2, 1],
            None,
            [
                (0, 1, vec![(3, qi(1))]),
                (1, 2, vec![(4, qi(1))]),
                (0, 4, vec![(5, qi(1))]),
                (2, 3, vec![(5, qi(1))]),
            ],
        )
        .unwrap();
        assert!(!bad.validate().check("jacobi").unwrap().passed);
    }

    #[test]
    fn index_out_of_range_rejected() {
        let err = CarnotAlgebra::from_relations("x", vec![2, 1], None, [(0, 1, vec![(7, qi(1))])]);
        assert!(matches!(err, Err(CarnotError::IndexOutOfRange { .. })));
    }

    #[test]
    fn ad_matrix_columns_are_brackets() {
        let h = heis();
        let ad = h.ad_matrix(&h.basis_element(0)).unwrap();
        let mut expected = Matrix::zeros(3, 3);
        expected.set(2, 1, qi(1));
        assert_eq!(ad, expected);
        assert!(h.ad_matrix(&h.zero()).unwrap().is_zero());
        assert_eq!(h.ad_matrix_on_layer(&h.basis_element(0), 1).unwrap().cols(), 2);
        assert!(h.ad_matrix_on_layer(&h.basis_element(0), 3).is_err());
    }

    #[test]
    fn dilation() {
        let h = heis();
        let x = Element::new(vec![qi(1), qi(0), qi(1)]);
        assert_eq!(h.dilate(&qi(2), &x).unwrap(), Element::new(vec![qi(2), qi(0), qi(4)]));
        assert_eq!(h.dilate(&qi(0), &x), Err(CarnotError::NonPositiveScale));
        let back = h.dilate(&q(1, 2), &h.dilate(&qi(2), &x).unwrap()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn graded_maps() {
        let h = heis();
        let id = Matrix::identity(3);
        assert!(h.verify_graded_map(&h, &id).unwrap().is_graded_isomorphism());
        // swap e1 <-> e3 mixes layers
        let mut swap = Matrix::zeros(3, 3);
        swap.set(2, 0, qi(1));
        swap.set(1, 1, qi(1));
        swap.set(0, 2, qi(1));
        assert!(!h.verify_graded_map(&h, &swap).unwrap().is_graded_homomorphism());
        assert!(h.verify_graded_map(&h, &Matrix::identity(2)).is_err());
    }

    #[test]
    fn render_forms() {
        let h = heis();
        let x = Element::new(vec![qi(1), qi(-1), q(1, 2)]);
        assert_eq!(h.render(&x), "e1 - e2 + 1/2 e3");
        assert_eq!(h.render_compact(&x), "e1-e2+1/2*e3");
        assert_eq!(h.render(&h.zero()), "0");
        assert_eq!(h.render(&(-&h.basis_element(0))), "-e1");
    }
}
