#![allow(dead_code)]

use carnot_core::constructions::{catalog, catalog_names};
use carnot_core::rational::random_q;
use carnot_core::{CarnotAlgebra, Element, Q};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_element(alg: &CarnotAlgebra, rng: &mut ChaCha8Rng) -> Element {
    Element::new((0..alg.dim()).map(|_| random_q(rng)).collect())
}

pub fn random_horizontal(alg: &CarnotAlgebra, rng: &mut ChaCha8Rng) -> Element {
    let d1 = alg.layer_dims()[0];
    alg.horizontal(&(0..d1).map(|_| random_q(rng)).collect::<Vec<Q>>())
}

/// Sum of `c * label` terms.
pub fn el(alg: &CarnotAlgebra, terms: &[(&str, i64)]) -> Element {
    let mut v = alg.zero();
    for (l, c) in terms {
        let k = alg
            .labels()
            .iter()
            .position(|x| x == l)
            .unwrap_or_else(|| panic!("no label {l}"));
        v.axpy(&Q::from_integer((*c).into()), &alg.basis_element(k));
    }
    v
}

pub fn all_catalog() -> Vec<CarnotAlgebra> {
    catalog_names().iter().map(|n| catalog(n).unwrap()).collect()
}
