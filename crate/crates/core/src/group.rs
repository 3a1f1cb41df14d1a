//! The Carnot group in exponential coordinates: the truncated
//! Baker-Campbell-Hausdorff product, dilations, and the homogeneous
//! quasi-norm `||x|| = sum_i |x_i|^(1/i)` with its left-invariant distance.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{CarnotAlgebra, Element};
use crate::error::{CarnotError, Result};
use crate::exec::{self, Execution};
use crate::rational::{qi, random_q, to_f64, Q};

/// Highest step handled by the BCH tables.
pub const MAX_BCH_ORDER: usize = 8;

/// Words in `X, Y` stored back to front: bit `j` is the letter at distance
/// `j` from the end, set for `Y`. entry `[m][bits]` is the Dynkin coefficient
/// of the right-nested bracket of that word of length `m`.
fn dynkin_table() -> &'static Vec<Vec<Q>> {
    static TABLE: OnceLock<Vec<Vec<Q>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = vec![Vec::new()];
        for m in 1..=MAX_BCH_ORDER {
            let row = (0..1u32 << m)
                .map(|bits| {
                    let word: Vec<bool> = (0..m).rev().map(|j| bits >> j & 1 == 1).collect();
                    dynkin_coefficient(&word)
                })
                .collect();
            table.push(row);
        }
        table
    })
}

fn factorial(n: usize) -> Q {
    (1..=n as i64).fold(Q::one(), |acc, k| acc * qi(k))
}

/// Sum over factorizations of `word` into blocks `X^a Y^b` (`a + b > 0`) of
/// `(-1)^(n-1) / (n * m * prod a! b!)`, `n` the number of blocks.
fn dynkin_coefficient(word: &[bool]) -> Q {
    let m = word.len();
    if m >= 2 && word[m - 1] == word[m - 2] {
        return Q::zero();
    }
    // ways[p][n]: sum of prod 1/(a! b!) over factorizations of word[p..] into n blocks
    let mut ways = vec![vec![Q::zero(); m + 1]; m + 1];
    ways[m][0] = Q::one();
    for p in (0..m).rev() {
        let xs = word[p..].iter().take_while(|&&y| !y).count();
        for a in 0..=xs {
            let rest = p + a;
            let ys = word[rest..].iter().take_while(|&&y| y).count();
            for b in 0..=ys {
                if a + b == 0 || (a < xs && b > 0) {
                    continue;
                }
                let end = rest + b;
                let w = Q::one() / (factorial(a) * factorial(b));
                for n in 0..m {
                    if !ways[end][n].is_zero() {
                        let add = &ways[end][n] * &w;
                        ways[p][n + 1] += add;
                    }
                }
            }
        }
    }
    let mut total = Q::zero();
    for n in 1..=m {
        let sign = if n % 2 == 1 { qi(1) } else { qi(-1) };
        total += sign * &ways[0][n] / qi((n * m) as i64);
    }
    total
}

/// Dynkin coefficient of the right-nested bracket of a word, written as a
/// string over `{'X', 'Y'}`.
pub fn bch_word_coefficient(word: &str) -> Option<Q> {
    let m = word.len();
    if m == 0 || m > MAX_BCH_ORDER {
        return None;
    }
    let mut bits = 0usize;
    for (j, c) in word.chars().rev().enumerate() {
        match c {
            'X' => {}
            'Y' => bits |= 1 << j,
            _ => return None,
        }
    }
    Some(dynkin_table()[m][bits].clone())
}

/// `x * y = log(exp x exp y)`, exact, truncated at the algebra's step.
pub fn bch_multiply(alg: &CarnotAlgebra, x: &Element, y: &Element) -> Result<Element> {
    alg.check_element(x)?;
    alg.check_element(y)?;
    let order = alg.step();
    if order > MAX_BCH_ORDER {
        return Err(CarnotError::UnsupportedStep { step: order, max: MAX_BCH_ORDER });
    }
    let table = dynkin_table();
    let mut acc = x + y;
    // depth-first over suffixes; prepending a letter brackets on the left
    let mut stack: Vec<(usize, usize, Element)> = Vec::new();
    for (bit, v) in [(0usize, x), (1usize, y)] {
        if !v.is_zero() {
            stack.push((1, bit, v.clone()));
        }
    }
    while let Some((len, bits, value)) = stack.pop() {
        if len >= 2 {
            let c = &table[len][bits];
            if !c.is_zero() {
                acc.axpy(c, &value);
            }
        }
        if len == order {
            continue;
        }
        for (bit, v) in [(0usize, x), (1usize, y)] {
            // words ending in a repeated letter vanish
            if len == 1 && bit == bits {
                continue;
            }
            let next = alg.bracket_unchecked(v, &value);
            if !next.is_zero() {
                stack.push((len + 1, bits | bit << len, next));
            }
        }
    }
    Ok(acc)
}

/// Inverse in exponential coordinates.
pub fn invert(x: &Element) -> Element {
    -x
}

/// Group dilation `Lambda_t`, which acts as `t^i` on layer `i`.
pub fn dilate(alg: &CarnotAlgebra, t: &Q, x: &Element) -> Result<Element> {
    alg.dilate(t, x)
}

/// Homogeneous quasi-norm with Euclidean norms on each layer.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HomogeneousMetric {
    pub tolerance: f64,
}

impl Default for HomogeneousMetric {
    fn default() -> Self {
        Self { tolerance: 1e-9 }
    }
}

impl HomogeneousMetric {
    /// `|x_i|` for each layer, Euclidean in the basis coordinates.
    pub fn layer_norms(&self, alg: &CarnotAlgebra, x: &Element) -> Vec<f64> {
        (1..=alg.step())
            .map(|i| {
                alg.layer_range(i)
                    .map(|k| to_f64(&x.coords()[k]).powi(2))
                    .sum::<f64>()
                    .sqrt()
            })
            .collect()
    }

    pub fn norm(&self, alg: &CarnotAlgebra, x: &Element) -> Result<f64> {
        alg.check_element(x)?;
        Ok(self
            .layer_norms(alg, x)
            .iter()
            .enumerate()
            .map(|(i, n)| n.powf(1.0 / (i + 1) as f64))
            .sum())
    }

    /// `d(p, q) = ||(-p) * q||`.
    pub fn distance(&self, alg: &CarnotAlgebra, p: &Element, q: &Element) -> Result<f64> {
        self.norm(alg, &bch_multiply(alg, &invert(p), q)?)
    }

    /// `(d(Lambda_t p, Lambda_t q), t d(p, q))`.
    pub fn dilation_similarity_check(
        &self,
        alg: &CarnotAlgebra,
        t: &Q,
        p: &Element,
        q: &Element,
    ) -> Result<(f64, f64)> {
        let lhs = self.distance(alg, &dilate(alg, t, p)?, &dilate(alg, t, q)?)?;
        Ok((lhs, to_f64(t) * self.distance(alg, p, q)?))
    }

    /// `(t, d(t w, v * t w) / t)` for each `t`.
    pub fn coset_divergence_probe(
        &self,
        alg: &CarnotAlgebra,
        w: &Element,
        v: &Element,
        t_values: &[Q],
    ) -> Result<Vec<(Q, f64)>> {
        alg.check_element(w)?;
        alg.check_element(v)?;
        if w.coords()[alg.layer_range(1).end..].iter().any(|c| !c.is_zero()) {
            return Err(CarnotError::NotHorizontal);
        }
        if t_values.iter().any(|t| t <= &Q::zero()) {
            return Err(CarnotError::NonPositiveScale);
        }
        t_values
            .iter()
            .map(|t| {
                let tw = w.scale(t);
                let moved = bch_multiply(alg, v, &tw)?;
                Ok((t.clone(), self.distance(alg, &tw, &moved)? / to_f64(t)))
            })
            .collect()
    }

    /// Largest observed `d(p, r) / (d(p, q) + d(q, r))` over seeded random
    /// triples; `1` or less is consistent with the triangle inequality.
    pub fn quasi_triangle_constant(
        &self,
        alg: &CarnotAlgebra,
        samples: usize,
        seed: u64,
        exec: Execution,
    ) -> Result<f64> {
        if alg.step() > MAX_BCH_ORDER {
            return Err(CarnotError::UnsupportedStep { step: alg.step(), max: MAX_BCH_ORDER });
        }
        let ratios = exec::map_indexed(exec, samples, |i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let mut pt = || Element::new((0..alg.dim()).map(|_| random_q(&mut rng)).collect());
            let (p, q, r) = (pt(), pt(), pt());
            let direct = self.distance(alg, &p, &r).unwrap();
            let detour = self.distance(alg, &p, &q).unwrap() + self.distance(alg, &q, &r).unwrap();
            if detour > 0.0 {
                direct / detour
            } else {
                0.0
            }
        });
        Ok(ratios.into_iter().fold(0.0, f64::max))
    }
}

/// Whether `a` and `b` agree within relative tolerance `tol`.
pub fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

/// All nonzero Dynkin coefficients up to `order`, keyed by word.
pub fn bch_terms(order: usize) -> BTreeMap<String, Q> {
    let table = dynkin_table();
    let mut out = BTreeMap::new();
    for m in 1..=order.min(MAX_BCH_ORDER) {
        for (bits, c) in table[m].iter().enumerate() {
            if !c.is_zero() {
                let word: String = (0..m).rev().map(|j| if bits >> j & 1 == 1 { 'Y' } else { 'X' }).collect();
                out.insert(word, c.clone());
            }
        }
    }
    out
}
