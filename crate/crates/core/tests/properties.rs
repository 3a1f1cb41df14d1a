mod common;

use carnot_core::constructions::{
    abelian, catalog, catalog_names, central_product_glue_top, direct_product, direct_product_with_embeddings,
    free_two_step, heisenberg, level_one_product_with_embeddings, quotient_by_graded_ideal, GradedIdeal,
    LevelOneFactor,
};
use carnot_core::format::{emit_algebra, parse_algebra, parse_element};
use carnot_core::group::{bch_multiply, dilate, invert, HomogeneousMetric};
use carnot_core::rank::{
    generated_subalgebra, min_rank_survey, normalizer, rank_of, theorem12_space, SurveyParams,
};
use carnot_core::rational::{q, qi, random_nonzero_q, random_q, to_f64};
use carnot_core::rigidity::{certify, replay, CertifyOptions, Verdict};
use carnot_core::{CarnotAlgebra, Element, Execution, Matrix, Subspace, Q};
use common::{all_catalog, random_element, random_horizontal, rng};
use proptest::prelude::*;

fn add(x: &Element, y: &Element) -> Element {
    let mut s = x.clone();
    s.axpy(&qi(1), y);
    s
}

fn positive_q(r: &mut rand_chacha::ChaCha8Rng) -> Q {
    use num_traits::Signed;
    random_nonzero_q(r).abs()
}

fn catalog_at(i: usize) -> CarnotAlgebra {
    let names = catalog_names();
    catalog(names[i % names.len()]).unwrap()
}

fn bch_catalog_at(i: usize) -> CarnotAlgebra {
    let algs: Vec<_> = all_catalog().into_iter().filter(|a| a.step() <= 6).collect();
    algs[i % algs.len()].clone()
}

fn random_first_layer_subspace(alg: &CarnotAlgebra, seed: u64) -> Subspace {
    let mut r = rng(seed);
    let d1 = alg.layer_dims()[0];
    let k = 1 + (seed as usize) % d1.max(1);
    loop {
        let vs: Vec<_> = (0..k).map(|_| random_horizontal(alg, &mut r).into_coords()).collect();
        let w = Subspace::span(alg.dim(), &vs).with_layer(1);
        if !w.is_zero() {
            return w;
        }
    }
}

/// A random graded automorphism of the free 2-step algebra: a random
/// invertible map on the first layer, extended to brackets.
fn free_automorphism(alg: &CarnotAlgebra, seed: u64) -> Matrix {
    let mut r = rng(seed);
    let d1 = alg.layer_dims()[0];
    let g = loop {
        let rows: Vec<Vec<Q>> = (0..d1).map(|_| (0..d1).map(|_| random_q(&mut r)).collect()).collect();
        let m = Matrix::from_rows(d1, &rows);
        if m.rank() == d1 {
            break m;
        }
    };
    let image = |i: usize| alg.horizontal(&g.column(i));
    let mut cols = vec![Vec::new(); alg.dim()];
    for i in 0..d1 {
        cols[i] = image(i).into_coords();
        for j in i + 1..d1 {
            let b = alg.bracket_basis(i, j);
            let k = b.coords().iter().position(|c| c != &qi(0)).unwrap();
            let c = b.coords()[k].clone();
            cols[k] = alg.bracket(&image(i), &image(j)).unwrap().scale(&(qi(1) / c)).into_coords();
        }
    }
    Matrix::from_columns(alg.dim(), &cols)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn bracket_is_bilinear_antisymmetric_jacobi(i in 0usize..64, seed in any::<u64>()) {
        let alg = catalog_at(i);
        let mut r = rng(seed);
        let (x, y, z) = (random_element(&alg, &mut r), random_element(&alg, &mut r), random_element(&alg, &mut r));
        let c = random_q(&mut r);
        let br = |a: &Element, b: &Element| alg.bracket(a, b).unwrap();
        let mut xy = x.clone();
        xy.axpy(&c, &y);
        let mut lin = br(&x, &z);
        lin.axpy(&c, &br(&y, &z));
        prop_assert_eq!(br(&xy, &z), lin);
        prop_assert_eq!(br(&x, &y), br(&y, &x).scale(&qi(-1)));
        let jac = add(&add(&br(&x, &br(&y, &z)), &br(&y, &br(&z, &x))), &br(&z, &br(&x, &y)));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn dilations_are_automorphisms(i in 0usize..64, seed in any::<u64>()) {
        let alg = catalog_at(i);
        let mut r = rng(seed);
        let (x, y) = (random_element(&alg, &mut r), random_element(&alg, &mut r));
        let (s, t) = (positive_q(&mut r), positive_q(&mut r));
        let d = |t: &Q, v: &Element| alg.dilate(t, v).unwrap();
        prop_assert_eq!(d(&t, &alg.bracket(&x, &y).unwrap()), alg.bracket(&d(&t, &x), &d(&t, &y)).unwrap());
        prop_assert_eq!(d(&q(1, 2), &d(&qi(2), &x)), x.clone());
        prop_assert_eq!(d(&s, &d(&t, &x)), d(&(&s * &t), &x));
    }

    #[test]
    fn hausdorff_dimension_adds_over_direct_products(i in 0usize..64, j in 0usize..64) {
        let (a, b) = (catalog_at(i), catalog_at(j));
        prop_assert_eq!(direct_product(&a, &b).hausdorff_dimension(), a.hausdorff_dimension() + b.hausdorff_dimension());
    }

    #[test]
    fn rank_is_invariant_under_scaling_and_automorphisms(i in 0usize..64, n in 2usize..5, seed in any::<u64>()) {
        let alg = catalog_at(i);
        let mut r = rng(seed);
        let x = random_element(&alg, &mut r);
        let c = random_nonzero_q(&mut r);
        prop_assert_eq!(rank_of(&alg, &x.scale(&c)).unwrap(), rank_of(&alg, &x).unwrap());
        let t = positive_q(&mut r);
        prop_assert_eq!(rank_of(&alg, &alg.dilate(&t, &x).unwrap()).unwrap(), rank_of(&alg, &x).unwrap());

        let f = free_two_step(n).unwrap();
        let map = free_automorphism(&f, seed);
        prop_assert!(f.verify_graded_map(&f, &map).unwrap().is_graded_isomorphism());
        let y = random_element(&f, &mut r);
        let image = Element::new(map.mul_vec(y.coords()));
        prop_assert_eq!(rank_of(&f, &image).unwrap(), rank_of(&f, &y).unwrap());
    }

    #[test]
    fn first_layer_subspace_inclusions(i in 0usize..64, seed in any::<u64>()) {
        let alg = catalog_at(i);
        let w1 = random_first_layer_subspace(&alg, seed);
        if w1.dim() == alg.layer_dims()[0] {
            return Ok(());
        }
        let n = normalizer(&alg, &w1).unwrap();
        let t = theorem12_space(&alg, &w1).unwrap();
        prop_assert!(w1.is_subspace_of(&n));
        prop_assert!(n.is_subspace_of(&t));
        prop_assert!(t.is_subspace_of(&alg.first_layer()));

        let sub = generated_subalgebra(&alg, &w1).unwrap();
        let whole = sub.whole();
        prop_assert!(w1.is_subspace_of(&whole));
        for u in whole.basis() {
            for v in whole.basis() {
                let b = alg.bracket(&Element::new(u.clone()), &Element::new(v.clone())).unwrap();
                prop_assert!(whole.contains(b.coords()));
            }
        }
    }

    #[test]
    fn bch_group_laws(i in 0usize..64, seed in any::<u64>()) {
        let alg = bch_catalog_at(i);
        let mut r = rng(seed);
        let (x, y, z) = (random_element(&alg, &mut r), random_element(&alg, &mut r), random_element(&alg, &mut r));
        let m = |a: &Element, b: &Element| bch_multiply(&alg, a, b).unwrap();
        prop_assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)));
        prop_assert_eq!(m(&x, &alg.zero()), x.clone());
        prop_assert!(m(&x, &invert(&x)).is_zero());
        prop_assert_eq!(invert(&m(&x, &y)), m(&invert(&y), &invert(&x)));
        let t = positive_q(&mut r);
        let d = |v: &Element| dilate(&alg, &t, v).unwrap();
        prop_assert_eq!(d(&m(&x, &y)), m(&d(&x), &d(&y)));
    }

    #[test]
    fn generated_subgroups_are_closed(i in 0usize..64, seed in any::<u64>()) {
        let alg = bch_catalog_at(i);
        let w1 = random_first_layer_subspace(&alg, seed);
        let whole = generated_subalgebra(&alg, &w1).unwrap().whole();
        let mut r = rng(seed ^ 1);
        let mut pick = || {
            let mut v = alg.zero();
            for b in whole.basis() {
                v.axpy(&random_q(&mut r), &Element::new(b.clone()));
            }
            v
        };
        let (x, y) = (pick(), pick());
        prop_assert!(whole.contains(bch_multiply(&alg, &x, &y).unwrap().coords()));
    }

    #[test]
    fn metric_is_homogeneous_and_left_invariant(i in 0usize..64, seed in any::<u64>()) {
        let alg = bch_catalog_at(i);
        let metric = HomogeneousMetric::default();
        let mut r = rng(seed);
        let (p, g) = (random_element(&alg, &mut r), random_element(&alg, &mut r));
        let q_ = random_element(&alg, &mut r);
        let t = q(1 + (seed % 7) as i64, 1 + (seed % 3) as i64);
        let norm = |v: &Element| metric.norm(&alg, v).unwrap();
        let scaled = norm(&alg.dilate(&t, &p).unwrap());
        prop_assert!((scaled - to_f64(&t) * norm(&p)).abs() <= 1e-9 * (1.0 + scaled));
        let d = |a: &Element, b: &Element| metric.distance(&alg, a, b).unwrap();
        let gp = bch_multiply(&alg, &g, &p).unwrap();
        let gq = bch_multiply(&alg, &g, &q_).unwrap();
        let (lhs, rhs) = (d(&gp, &gq), d(&p, &q_));
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + rhs));
        prop_assert!((d(&p, &q_) - d(&q_, &p)).abs() <= 1e-9 * (1.0 + rhs));
        prop_assert_eq!(d(&p, &p), 0.0);
    }

    #[test]
    fn direct_and_central_product_rank_laws(i in 0usize..64, j in 0usize..64, seed in any::<u64>()) {
        let (a, b) = (catalog_at(i), catalog_at(j));
        let p = direct_product_with_embeddings(&a, &b);
        prop_assert!(a.verify_graded_map(&p.algebra, &p.left).unwrap().is_graded_monomorphism());
        prop_assert!(b.verify_graded_map(&p.algebra, &p.right).unwrap().is_graded_monomorphism());
        let mut r = rng(seed);
        let (x, y) = (random_element(&a, &mut r), random_element(&b, &mut r));
        let xy = add(&Element::new(p.left.mul_vec(x.coords())), &Element::new(p.right.mul_vec(y.coords())));
        let (rx, ry) = (rank_of(&a, &x).unwrap(), rank_of(&b, &y).unwrap());
        prop_assert_eq!(rank_of(&p.algebra, &xy).unwrap(), rx + ry);

        if a.step() == b.step() && a.layer_dims()[a.step() - 1] == b.layer_dims()[b.step() - 1] {
            let c = central_product_glue_top(&a, &b).unwrap();
            prop_assert!(a.verify_graded_map(&c.algebra, &c.left).unwrap().is_graded_monomorphism());
            prop_assert!(b.verify_graded_map(&c.algebra, &c.right).unwrap().is_graded_monomorphism());
            let s = add(&Element::new(c.left.mul_vec(x.coords())), &Element::new(c.right.mul_vec(y.coords())));
            prop_assert!(rank_of(&c.algebra, &s).unwrap() >= rx.max(ry));
        }
    }

    #[test]
    fn quotient_by_top_layer_piece(i in 0usize..64, seed in any::<u64>()) {
        let alg = catalog_at(i);
        let s = alg.step();
        let top = alg.layer_range(s);
        let mut r = rng(seed);
        let vs: Vec<_> = (0..1 + seed as usize % top.len())
            .map(|_| {
                let mut v = alg.zero();
                for k in top.clone() {
                    v.axpy(&random_q(&mut r), &alg.basis_element(k));
                }
                v.into_coords()
            })
            .collect();
        let w = Subspace::span(alg.dim(), &vs).with_layer(s);
        let mut layers: Vec<Subspace> = (1..s).map(|_| Subspace::zero(alg.dim())).collect();
        layers.push(w.clone());
        if w.dim() == alg.dim() {
            return Ok(());
        }
        let ideal = GradedIdeal::new(&alg, layers).unwrap();
        let quo = quotient_by_graded_ideal(&alg, &ideal).unwrap();
        prop_assert!(quo.validate().passed());
        prop_assert_eq!(quo.dim(), alg.dim() - w.dim());
    }

    #[test]
    fn level_one_product_embeds_factors(i in 0usize..64, j in 0usize..64) {
        let two_step: Vec<_> = all_catalog().into_iter().filter(|a| a.step() == 2).collect();
        let (a, b) = (two_step[i % two_step.len()].clone(), two_step[j % two_step.len()].clone());
        let (fa, fb) = (LevelOneFactor::default_for(&a), LevelOneFactor::default_for(&b));
        let p = level_one_product_with_embeddings(&a, &b, &fa, &fb).unwrap();
        prop_assert!(p.algebra.validate().passed());
        prop_assert!(a.verify_graded_map(&p.algebra, &p.left).unwrap().is_graded_monomorphism());
        prop_assert!(b.verify_graded_map(&p.algebra, &p.right).unwrap().is_graded_monomorphism());
    }

    #[test]
    fn emit_parse_round_trip(i in 0usize..64, j in 0usize..64, tag in "[a-z][a-z0-9_]{0,8}", seed in any::<u64>()) {
        let alg = direct_product(&catalog_at(i), &catalog_at(j)).with_name(tag);
        let back = parse_algebra(&emit_algebra(&alg)).unwrap();
        prop_assert_eq!(&back, &alg);
        prop_assert_eq!(emit_algebra(&back), emit_algebra(&alg));
        let x = random_element(&alg, &mut rng(seed));
        prop_assert_eq!(parse_element(&alg, &alg.render(&x)).unwrap(), x);
    }

    #[test]
    fn subspace_canonical_form_is_basis_independent(n in 1usize..7, seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = 1 + seed as usize % n;
        let vs: Vec<Vec<Q>> = (0..k).map(|_| (0..n).map(|_| random_q(&mut r)).collect()).collect();
        let a = Subspace::span(n, &vs);
        let mixed: Vec<Vec<Q>> = (0..k + 2)
            .map(|_| {
                let mut acc = vec![qi(0); n];
                for v in &vs {
                    let c = random_q(&mut r);
                    for (t, x) in acc.iter_mut().zip(v) {
                        *t += &c * x;
                    }
                }
                acc
            })
            .collect();
        let b = Subspace::span(n, &mixed);
        prop_assert!(b.is_subspace_of(&a));
        if b.dim() == a.dim() {
            prop_assert_eq!(a.canonical_text(), b.canonical_text());
        }
    }

    #[test]
    fn probe_ratios_eventually_decrease(i in 0usize..4, seed in any::<u64>()) {
        let alg = [heisenberg(2).unwrap(), catalog("model_filiform_3").unwrap(), catalog("paper_example_1").unwrap(), free_two_step(3).unwrap()][i].clone();
        let mut r = rng(seed);
        let (w, v) = (random_horizontal(&alg, &mut r), random_horizontal(&alg, &mut r));
        if w.is_zero() || alg.bracket(&w, &v).unwrap().is_zero() {
            return Ok(());
        }
        let ts: Vec<Q> = (6..12).map(|k| qi(1i64 << (2 * k))).collect();
        let ratios = HomogeneousMetric::default().coset_divergence_probe(&alg, &w, &v, &ts).unwrap();
        for pair in ratios.windows(2) {
            prop_assert!(pair[1].1 < pair[0].1, "{:?}", ratios);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 8, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn survey_is_deterministic_across_modes(i in 0usize..64, seed in any::<u64>()) {
        let alg = catalog_at(i);
        let params = |execution| SurveyParams { samples: 40, seed, execution, ..SurveyParams::default() };
        let a = min_rank_survey(&alg, None, &params(Execution::Sequential)).unwrap();
        let b = min_rank_survey(&alg, None, &params(Execution::Parallel)).unwrap();
        let c = min_rank_survey(&alg, None, &params(Execution::Sequential)).unwrap();
        prop_assert_eq!(&a.witnesses, &b.witnesses);
        prop_assert_eq!(&a.span, &b.span);
        prop_assert_eq!(a.r_min_found, c.r_min_found);
        prop_assert_eq!(&a.witnesses, &c.witnesses);
    }

    #[test]
    fn assertions_never_flip_a_known_verdict(i in 0usize..64, k in 0usize..64, seed in any::<u64>()) {
        let alg = catalog_at(i);
        if alg.dim() > 12 {
            return Ok(());
        }
        let survey = SurveyParams { samples: 20, seed, ..SurveyParams::default() };
        let base = certify(&alg, &CertifyOptions { survey: survey.clone(), ..CertifyOptions::default() }).unwrap();
        let names = catalog_names();
        let w1 = random_first_layer_subspace(&alg, seed);
        let opts = CertifyOptions {
            survey,
            user_w1: (w1.dim() < alg.layer_dims()[0]).then_some(w1),
            assume: vec![names[k % names.len()].to_string()],
            ..CertifyOptions::default()
        };
        let asserted = certify(&alg, &opts).unwrap();
        if base.verdict != Verdict::Unknown {
            prop_assert_eq!(asserted.verdict, base.verdict);
        }
        prop_assert_eq!(replay(&base).unwrap(), base.verdict);
    }
}

#[test]
fn abelian_and_heisenberg_ranks() {
    let a = abelian(3).unwrap();
    assert_eq!(rank_of(&a, &a.basis_element(0)).unwrap(), 0);
    let h = heisenberg(2).unwrap();
    let mut r = rng(1);
    for _ in 0..20 {
        let x = random_horizontal(&h, &mut r);
        assert_eq!(rank_of(&h, &x).unwrap(), if x.is_zero() { 0 } else { 1 });
    }
}
