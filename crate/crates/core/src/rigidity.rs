//! Rigidity certificates. A certificate is a tree of rule applications: a
//! leaf either cites a registry fact about a known family (matched through
//! an explicitly verified graded isomorphism) or one of the first-layer
//! criteria below, applied to an automorphism-invariant `W_1`; an inner node
//! passes rigidity up from the generated subalgebra `<W_1>`.
//!
//! | rule       | condition on the invariant, nontrivial, proper `W_1`        |
//! |------------|--------------------------------------------------------------|
//! | `T1.1`     | the algebra is 2-step                                        |
//! | `T1.2`     | some `X` in `V_1` outside `W_1` has `[X, W_1] in [W_1, W_1]` |
//! | `L3.3`     | `<W_1>` is an ideal                                          |
//! | `T3.4`     | the first-layer normalizer `N(W_1)` is larger than `W_1`     |
//! | `T1.3`     | `<W_1>` is itself rigid                                      |
//! | `REGISTRY` | isomorphic to a catalog family with a known answer           |

use std::fmt::{self, Write as _};

use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use crate::algebra::{CarnotAlgebra, Element};
use crate::constructions::{abelian, catalog_entry, heisenberg, model_filiform, CatalogFamily};
use crate::error::{CarnotError, Result};
use crate::format::structure_text;
use crate::linalg::{Matrix, Subspace};
use crate::rank::{
    check_proper_first_layer_subspace, generated_subalgebra, is_ideal, min_rank_survey, normalizer,
    theorem12_space, witness_outside, Certification, SurveyParams,
};
use crate::rational::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Rigid,
    NonRigidKnown,
    Unknown,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Rigid => "rigid",
            Verdict::NonRigidKnown => "non_rigid_known",
            Verdict::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleId {
    T11,
    T12,
    T13,
    L33,
    T34,
    Registry,
}

impl RuleId {
    pub fn as_str(&self) -> &'static str {
        match self {
            RuleId::T11 => "T1.1",
            RuleId::T12 => "T1.2",
            RuleId::T13 => "T1.3",
            RuleId::L33 => "L3.3",
            RuleId::T34 => "T3.4",
            RuleId::Registry => "REGISTRY",
        }
    }
}

/// Why the `W_1` (or registry match) at a node can be trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pedigree {
    /// Span of minimal-rank first-layer elements, found by the survey.
    MinRankSpan,
    /// Supplied by the user.
    UserAsserted,
    /// Registry match through a checked graded isomorphism.
    VerifiedIsomorphism,
}

impl Pedigree {
    pub fn as_str(&self) -> &'static str {
        match self {
            Pedigree::MinRankSpan => "min-rank-span",
            Pedigree::UserAsserted => "user-asserted",
            Pedigree::VerifiedIsomorphism => "verified-isomorphism",
        }
    }
}

/// A known answer for a whole family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegistryEntry {
    pub family: CatalogFamily,
    pub status: Verdict,
    pub citation: &'static str,
    /// Standard fact, not taken from the rigidity literature the other
    /// entries cite.
    pub conventional: bool,
}

pub const REGISTRY: &[RegistryEntry] = &[
    RegistryEntry {
        family: CatalogFamily::ModelFiliform,
        status: Verdict::Rigid,
        citation: "model filiform groups are quasisymmetrically rigid",
        conventional: false,
    },
    RegistryEntry {
        family: CatalogFamily::Heisenberg,
        status: Verdict::NonRigidKnown,
        citation: "non-biLipschitz quasiconformal maps on Heisenberg groups",
        conventional: false,
    },
    RegistryEntry {
        family: CatalogFamily::Abelian,
        status: Verdict::NonRigidKnown,
        citation: "standard radial-map example",
        conventional: true,
    },
];

pub fn registry_entry(family: CatalogFamily) -> Option<&'static RegistryEntry> {
    REGISTRY.iter().find(|e| e.family == family)
}

/// A registry hit: the catalog instance, and the map from it into the
/// algebra (columns are images of the catalog basis).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegistryMatch {
    pub entry: RegistryEntry,
    pub catalog_name: String,
    pub map: Option<Matrix>,
    pub pedigree: Pedigree,
}

fn first_layer_vectors(alg: &CarnotAlgebra) -> Vec<Vec<Q>> {
    alg.layer_range(1).map(|k| alg.basis_element(k).into_coords()).collect()
}

fn bracket_vec(alg: &CarnotAlgebra, u: &[Q], v: &[Q]) -> Vec<Q> {
    alg.bracket_unchecked(&Element::new(u.to_vec()), &Element::new(v.to_vec()))
        .into_coords()
}

fn combo(a: &[Q], ca: &Q, b: &[Q], cb: &Q) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x * ca + y * cb).collect()
}

/// Symplectic Gram-Schmidt on `V_1` for the form `[u, v] = w(u, v) z`.
fn heisenberg_normal_form(alg: &CarnotAlgebra) -> Option<(usize, Matrix)> {
    let dims = alg.layer_dims();
    if dims.len() != 2 || dims[1] != 1 || !dims[0].is_multiple_of(2) {
        return None;
    }
    let n = dims[0] / 2;
    let z = alg.layer_range(2).start;
    let omega = |u: &[Q], v: &[Q]| bracket_vec(alg, u, v)[z].clone();
    let mut rest = first_layer_vectors(alg);
    let mut cols: Vec<Vec<Q>> = Vec::new();
    while let Some(u) = rest.first().cloned() {
        rest.remove(0);
        let pos = rest.iter().position(|v| !omega(&u, v).is_zero())?;
        let v = rest.remove(pos);
        let s = omega(&u, &v);
        let v: Vec<Q> = v.iter().map(|x| x / &s).collect();
        rest = rest
            .into_iter()
            .map(|w| {
                let (a, b) = (omega(&w, &v), omega(&w, &u));
                let t = combo(&w, &Q::one(), &u, &-a);
                combo(&t, &Q::one(), &v, &b)
            })
            .collect();
        cols.push(u);
        cols.push(v);
    }
    cols.push(alg.basis_element(z).into_coords());
    Some((n, Matrix::from_columns(alg.dim(), &cols)))
}

/// `b` spans `{v in V_1 : [v, V_2] = 0}`, `a` is the first basis vector off
/// `b`, and the rest is the chain `[a, b], [a, [a, b]], ...`.
fn filiform_normal_form(alg: &CarnotAlgebra) -> Option<(usize, Matrix)> {
    let dims = alg.layer_dims();
    let r = dims.len();
    if r < 3 || dims[0] != 2 || dims[1..].iter().any(|&d| d != 1) {
        return None;
    }
    let v1 = first_layer_vectors(alg);
    let f = alg.basis_element(alg.layer_range(2).start).into_coords();
    let images: Vec<Vec<Q>> = v1.iter().map(|v| bracket_vec(alg, v, &f)).collect();
    let kernel = Matrix::from_columns(alg.dim(), &images).nullspace();
    if kernel.len() != 1 {
        return None;
    }
    let b: Vec<Q> = alg.horizontal(&kernel[0]).into_coords();
    let bspan = Subspace::span(alg.dim(), std::slice::from_ref(&b));
    let a = v1.into_iter().find(|v| !bspan.contains(v))?;
    let mut cols = vec![a.clone(), b.clone()];
    let mut c = bracket_vec(alg, &a, &b);
    for _ in 2..=r {
        cols.push(c.clone());
        c = bracket_vec(alg, &a, &c);
    }
    Some((r, Matrix::from_columns(alg.dim(), &cols)))
}

/// Looks for a verified graded isomorphism from a registered catalog
/// instance onto `alg`.
pub fn registry_lookup(alg: &CarnotAlgebra) -> Result<Option<RegistryMatch>> {
    let candidates: Vec<(CatalogFamily, CarnotAlgebra, Matrix)> = [
        (alg.step() == 1).then(|| {
            let n = alg.dim();
            (CatalogFamily::Abelian, abelian(n), Matrix::identity(n))
        }),
        heisenberg_normal_form(alg).map(|(n, m)| (CatalogFamily::Heisenberg, heisenberg(n), m)),
        filiform_normal_form(alg).map(|(r, m)| (CatalogFamily::ModelFiliform, model_filiform(r), m)),
    ]
    .into_iter()
    .flatten()
    .map(|(f, a, m)| a.map(|a| (f, a, m)))
    .collect::<Result<_>>()?;
    for (family, instance, map) in candidates {
        if instance.verify_graded_map(alg, &map)?.is_graded_isomorphism() {
            let entry = *registry_entry(family).expect("registered family");
            return Ok(Some(RegistryMatch {
                entry,
                catalog_name: instance.name().to_string(),
                map: Some(map),
                pedigree: Pedigree::VerifiedIsomorphism,
            }));
        }
    }
    Ok(None)
}

fn asserted_match(alg: &CarnotAlgebra, assumptions: &[String]) -> Result<Option<RegistryMatch>> {
    for name in assumptions {
        let entry = catalog_entry(name)?;
        let Some(reg) = registry_entry(entry.family) else {
            continue;
        };
        if entry.build()?.layer_dims() == alg.layer_dims() {
            return Ok(Some(RegistryMatch {
                entry: *reg,
                catalog_name: entry.name,
                map: None,
                pedigree: Pedigree::UserAsserted,
            }));
        }
    }
    Ok(None)
}

/// `T1.1`: fires for 2-step algebras.
pub fn check_t11(alg: &CarnotAlgebra, w1: &Subspace) -> Result<bool> {
    check_proper_first_layer_subspace(alg, w1)?;
    Ok(alg.step() == 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T12Outcome {
    pub fires: bool,
    pub space: Subspace,
    pub witness: Option<Element>,
}

/// `T1.2`: the space `{X : [X, W_1] in [W_1, W_1]}` is not
/// contained in `W_1`.
pub fn check_t12(alg: &CarnotAlgebra, w1: &Subspace) -> Result<T12Outcome> {
    let space = theorem12_space(alg, w1)?;
    let witness = witness_outside(&space, w1);
    Ok(T12Outcome { fires: witness.is_some(), space, witness })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubalgebraCriterion {
    Ideal,
    NormalizerStrict { witness: Element },
    Neither,
}

/// `L3.3` / `T3.4` on `<W_1>`. When both hold the normalizer
/// criterion is reported.
pub fn check_l33_t34(alg: &CarnotAlgebra, w1: &Subspace) -> Result<SubalgebraCriterion> {
    check_proper_first_layer_subspace(alg, w1)?;
    let sub = generated_subalgebra(alg, w1)?;
    if sub.whole().dim() == alg.dim() {
        return Err(CarnotError::NotProper);
    }
    // both can hold; the normalizer comes first and also yields a witness
    if let Some(witness) = witness_outside(&normalizer(alg, w1)?, w1) {
        return Ok(SubalgebraCriterion::NormalizerStrict { witness });
    }
    Ok(if is_ideal(alg, &sub)? { SubalgebraCriterion::Ideal } else { SubalgebraCriterion::Neither })
}

pub fn fingerprint_text(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))[..16].to_string()
}

/// Hash of layers and structure constants; labels and name do not count.
pub fn algebra_fingerprint(alg: &CarnotAlgebra) -> String {
    fingerprint_text(&structure_text(alg))
}

pub fn subspace_fingerprint(s: &Subspace) -> String {
    fingerprint_text(&s.canonical_text())
}

/// One rule application.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceNode {
    /// `None` when no rule concluded at this level.
    pub rule: Option<RuleId>,
    pub status: Verdict,
    pub algebra: CarnotAlgebra,
    pub w1: Option<Subspace>,
    pub pedigree: Option<Pedigree>,
    pub survey: Option<(SurveyParams, Certification)>,
    pub registry: Option<RegistryMatch>,
    pub witness: Option<Element>,
    pub note: Option<String>,
    pub children: Vec<TraceNode>,
}

impl TraceNode {
    fn new(alg: &CarnotAlgebra, status: Verdict) -> Self {
        Self {
            rule: None,
            status,
            algebra: alg.clone(),
            w1: None,
            pedigree: None,
            survey: None,
            registry: None,
            witness: None,
            note: None,
            children: Vec::new(),
        }
    }

    /// Every node of the tree, depth first.
    pub fn nodes(&self) -> Vec<&TraceNode> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.nodes());
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityCertificate {
    pub verdict: Verdict,
    pub trace: TraceNode,
    pub caveats: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub survey: SurveyParams,
    pub max_depth: usize,
    /// Replaces the surveyed `W_1` at the top level.
    pub user_w1: Option<Subspace>,
    /// Catalog names the user asserts the algebra (or a subalgebra met on
    /// the way) is isomorphic to, when dimensions agree.
    pub assume: Vec<String>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self { survey: SurveyParams::default(), max_depth: 8, user_w1: None, assume: Vec::new() }
    }
}

struct Ctx<'a> {
    opts: &'a CertifyOptions,
    assertions: bool,
    caveats: Vec<String>,
}

/// Builds a certificate. The search runs first without user assertions;
/// `user_w1` and `assume` are used only if that leaves the verdict unknown,
/// so they can never overturn a verdict reached without them.
pub fn certify(alg: &CarnotAlgebra, opts: &CertifyOptions) -> Result<RigidityCertificate> {
    let base = certify_with(alg, opts, false)?;
    if base.verdict != Verdict::Unknown || (opts.user_w1.is_none() && opts.assume.is_empty()) {
        return Ok(base);
    }
    let asserted = certify_with(alg, opts, true)?;
    if asserted.verdict == Verdict::Unknown {
        Ok(base)
    } else {
        Ok(asserted)
    }
}

fn certify_with(alg: &CarnotAlgebra, opts: &CertifyOptions, assertions: bool) -> Result<RigidityCertificate> {
    let report = alg.validate();
    if !report.passed() {
        return Err(CarnotError::InvalidAlgebra(report.failures().join("; ")));
    }
    let mut ctx = Ctx { opts, assertions, caveats: Vec::new() };
    let trace = certify_level(alg, 0, &mut ctx)?;
    let mut caveats = ctx.caveats;
    caveats.dedup();
    Ok(RigidityCertificate { verdict: trace.status, trace, caveats })
}

fn certify_level(alg: &CarnotAlgebra, depth: usize, ctx: &mut Ctx<'_>) -> Result<TraceNode> {
    if depth > ctx.opts.max_depth {
        return Err(CarnotError::RecursionDepthExceeded(ctx.opts.max_depth));
    }
    let mut hit = registry_lookup(alg)?;
    if hit.is_none() && ctx.assertions {
        hit = asserted_match(alg, &ctx.opts.assume)?;
        if let Some(m) = &hit {
            ctx.caveats.push(format!(
                "{} is assumed isomorphic to {} without a checked isomorphism",
                alg.name(),
                m.catalog_name
            ));
        }
    }
    if let Some(m) = hit {
        let mut node = TraceNode::new(alg, m.entry.status);
        node.rule = Some(RuleId::Registry);
        node.pedigree = Some(m.pedigree);
        node.registry = Some(m);
        return Ok(node);
    }

    let (w1, pedigree, survey) = match (&ctx.opts.user_w1, depth == 0 && ctx.assertions) {
        (Some(w), true) => {
            ctx.caveats.push(format!(
                "W1 of {} is user-asserted; its invariance under graded automorphisms is not checked",
                alg.name()
            ));
            (w.clone(), Pedigree::UserAsserted, None)
        }
        _ => {
            let report = min_rank_survey(alg, None, &ctx.opts.survey)?;
            (report.span, Pedigree::MinRankSpan, Some((ctx.opts.survey.clone(), report.certification)))
        }
    };
    let mut node = TraceNode::new(alg, Verdict::Unknown);
    node.w1 = Some(w1.clone());
    node.pedigree = Some(pedigree);
    node.survey = survey;

    if w1.is_zero() || w1.dim() == alg.layer_dims()[0] {
        node.note = Some("W1 is not a nontrivial proper subspace of V1".into());
        return Ok(node);
    }
    if matches!(node.survey, Some((_, Certification::HeuristicSearch))) {
        ctx.caveats.push(format!(
            "W1 of {} is the span of minimal-rank elements found by a finite search",
            alg.name()
        ));
    }

    if check_t11(alg, &w1)? {
        node.rule = Some(RuleId::T11);
        node.status = Verdict::Rigid;
        return Ok(node);
    }
    let t12 = check_t12(alg, &w1)?;
    if t12.fires {
        node.rule = Some(RuleId::T12);
        node.status = Verdict::Rigid;
        node.witness = t12.witness;
        return Ok(node);
    }
    match check_l33_t34(alg, &w1)? {
        SubalgebraCriterion::Ideal => {
            node.rule = Some(RuleId::L33);
            node.status = Verdict::Rigid;
            return Ok(node);
        }
        SubalgebraCriterion::NormalizerStrict { witness } => {
            node.rule = Some(RuleId::T34);
            node.status = Verdict::Rigid;
            node.witness = Some(witness);
            return Ok(node);
        }
        SubalgebraCriterion::Neither => {}
    }

    let sub = generated_subalgebra(alg, &w1)?.to_algebra()?;
    let child = certify_level(&sub, depth + 1, ctx)?;
    node.rule = Some(RuleId::T13);
    node.status = if child.status == Verdict::Rigid { Verdict::Rigid } else { Verdict::Unknown };
    if child.status == Verdict::NonRigidKnown {
        ctx.caveats.push(format!(
            "{} contains the non-rigid {}; rigidity does not pass up from it and nothing is concluded",
            alg.name(),
            sub.name()
        ));
    }
    node.children.push(child);
    Ok(node)
}

/// Re-runs every rule named in the trace against its stored inputs and
/// returns the verdict those checks support.
pub fn replay(cert: &RigidityCertificate) -> Result<Verdict> {
    let v = replay_node(&cert.trace)?;
    if v != cert.verdict {
        return Err(CarnotError::Malformed(format!(
            "certificate claims {} but its rules give {}",
            cert.verdict, v
        )));
    }
    Ok(v)
}

fn replay_node(node: &TraceNode) -> Result<Verdict> {
    let alg = &node.algebra;
    let mismatch = |what: &str| CarnotError::Malformed(format!("{what} does not hold for {}", alg.name()));
    if let (Some(w1), Some(Pedigree::MinRankSpan), Some((params, _))) = (&node.w1, node.pedigree, &node.survey) {
        if &min_rank_survey(alg, None, params)?.span != w1 {
            return Err(mismatch("stored W1 as minimal-rank span"));
        }
    }
    let w1 = || node.w1.as_ref().ok_or_else(|| mismatch("missing W1"));
    let got = match node.rule {
        None => Verdict::Unknown,
        Some(RuleId::Registry) => {
            let m = node.registry.as_ref().ok_or_else(|| mismatch("missing registry match"))?;
            if m.pedigree == Pedigree::VerifiedIsomorphism {
                let entry = catalog_entry(&m.catalog_name)?;
                let map = m.map.as_ref().ok_or_else(|| mismatch("missing isomorphism"))?;
                if !entry.build()?.verify_graded_map(alg, map)?.is_graded_isomorphism() {
                    return Err(mismatch("registry isomorphism"));
                }
            }
            m.entry.status
        }
        Some(RuleId::T11) => {
            if !check_t11(alg, w1()?)? {
                return Err(mismatch("T1.1"));
            }
            Verdict::Rigid
        }
        Some(RuleId::T12) => {
            let t = check_t12(alg, w1()?)?;
            let ok = t.fires && node.witness.as_ref().is_some_and(|x| t.space.contains(x.coords()));
            if !ok {
                return Err(mismatch("T1.2"));
            }
            Verdict::Rigid
        }
        Some(RuleId::L33) => {
            if check_l33_t34(alg, w1()?)? != SubalgebraCriterion::Ideal {
                return Err(mismatch("L3.3"));
            }
            Verdict::Rigid
        }
        Some(RuleId::T34) => {
            let w = w1()?;
            let n = normalizer(alg, w)?;
            let ok = node
                .witness
                .as_ref()
                .is_some_and(|x| n.contains(x.coords()) && !w.contains(x.coords()));
            if !ok {
                return Err(mismatch("T3.4"));
            }
            Verdict::Rigid
        }
        Some(RuleId::T13) => {
            let [child] = &node.children[..] else {
                return Err(mismatch("T1.3 with exactly one child"));
            };
            let sub = generated_subalgebra(alg, w1()?)?.to_algebra()?;
            if algebra_fingerprint(&sub) != algebra_fingerprint(&child.algebra) {
                return Err(mismatch("T1.3 child equal to <W1>"));
            }
            match replay_node(child)? {
                Verdict::Rigid => Verdict::Rigid,
                _ => Verdict::Unknown,
            }
        }
    };
    if got != node.status {
        return Err(mismatch("recorded node status"));
    }
    Ok(got)
}

fn render_basis(alg: &CarnotAlgebra, s: &Subspace) -> Vec<String> {
    s.basis().iter().map(|v| alg.render(&Element::new(v.clone()))).collect()
}

fn write_node(out: &mut String, node: &TraceNode, indent: usize) {
    let pad = " ".repeat(indent);
    let alg = &node.algebra;
    let line = |out: &mut String, k: &str, v: &str| {
        let _ = writeln!(out, "{pad}{k}: {v}");
    };
    line(out, "rule", node.rule.map(|r| r.as_str()).unwrap_or("none"));
    line(out, "status", node.status.as_str());
    line(out, "algebra", alg.name());
    let dims: Vec<String> = alg.layer_dims().iter().map(usize::to_string).collect();
    line(out, "layers", &dims.join(" "));
    line(out, "algebra_fingerprint", &algebra_fingerprint(alg));
    if let Some(p) = node.pedigree {
        line(out, "pedigree", p.as_str());
    }
    if let Some((params, cert)) = &node.survey {
        line(
            out,
            "survey",
            &format!(
                "grid {} sparsity {} samples {} seed {} ({})",
                params.grid_radius,
                params.sparsity,
                params.samples,
                params.seed,
                cert.as_str()
            ),
        );
    }
    if let Some(w1) = &node.w1 {
        line(out, "w1_dim", &w1.dim().to_string());
        line(out, "w1_fingerprint", &subspace_fingerprint(w1));
        let _ = writeln!(out, "{pad}w1_basis:");
        for b in render_basis(alg, w1) {
            let _ = writeln!(out, "{pad}  - {b}");
        }
    }
    if let Some(m) = &node.registry {
        line(out, "registry_family", &m.catalog_name);
        line(out, "registry_status", m.entry.status.as_str());
        line(out, "citation", m.entry.citation);
        if m.entry.conventional {
            line(out, "citation_kind", "conventional");
        }
        if let Some(map) = &m.map {
            let _ = writeln!(out, "{pad}isomorphism:");
            let instance = catalog_entry(&m.catalog_name).and_then(|e| e.build());
            for j in 0..map.cols() {
                let src = instance
                    .as_ref()
                    .map(|i| i.labels()[j].clone())
                    .unwrap_or_else(|_| format!("e{}", j + 1));
                let _ = writeln!(out, "{pad}  - {src} -> {}", alg.render(&Element::new(map.column(j))));
            }
        }
    }
    if let Some(w) = &node.witness {
        line(out, "witness", &alg.render(w));
    }
    if let Some(n) = &node.note {
        line(out, "note", n);
    }
    if !node.children.is_empty() {
        let _ = writeln!(out, "{pad}children:");
        for c in &node.children {
            let mut sub = String::new();
            write_node(&mut sub, c, indent + 4);
            // first line of each child carries the list marker
            let sub = sub.replacen(&" ".repeat(indent + 4), &format!("{pad}  - "), 1);
            out.push_str(&sub);
        }
    }
}

impl fmt::Display for RigidityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::from("certificate v1\n");
        let _ = writeln!(out, "verdict: {}", self.verdict);
        if self.caveats.is_empty() {
            out.push_str("caveats: []\n");
        } else {
            out.push_str("caveats:\n");
            for c in &self.caveats {
                let _ = writeln!(out, "  - {c}");
            }
        }
        out.push_str("trace:\n");
        write_node(&mut out, &self.trace, 2);
        f.write_str(&out)
    }
}
