//! Coset geometries of `PSL(3,3)` and `PSL(3,3):⟨σ⟩` on 144 points.
//!
//! Points are right cosets of the point subgroup, blocks are right cosets of
//! `L ≅ A₄`, and a point `Hx` is incident with a block `Ky` exactly when the
//! two cosets meet. Group elements act on cosets by right multiplication.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::design::IncidenceStructure;
use crate::gf::{generators, polarity_apply, GroupElement, ProjMatrix};
use crate::permgroup::{self, closure, Element, Group, Perm, PermGroup};
use crate::{Error, Result};

/// Upper bound handed to every closure in this module.
const CLOSURE_CAP: usize = 20_000;

/// Right cosets `Hx` of a subgroup, indexed in the order of their least
/// elements.
#[derive(Clone, Debug)]
pub struct CosetSpace<E> {
    reps: Vec<E>,
    index: HashMap<E, usize>,
    subgroup_order: usize,
}

impl<E: Element> CosetSpace<E> {
    pub fn right_cosets(parent: &Group<E>, sub: &Group<E>) -> Result<Self> {
        if !sub.is_subgroup_of(parent) {
            return Err(Error::NotSubgroup);
        }
        let mut reps = Vec::with_capacity(parent.order() / sub.order());
        let mut index = HashMap::with_capacity(parent.order());
        // parent elements are sorted, so the first unassigned one is the
        // least element of its coset
        for x in parent.elements() {
            if index.contains_key(x) {
                continue;
            }
            let c = reps.len();
            for h in sub.elements() {
                index.insert(h.compose(x), c);
            }
            reps.push(x.clone());
        }
        Ok(Self { reps, index, subgroup_order: sub.order() })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn subgroup_order(&self) -> usize {
        self.subgroup_order
    }

    pub fn reps(&self) -> &[E] {
        &self.reps
    }

    pub fn coset_of(&self, x: &E) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// `Hx_i ↦ Hx_i·g`.
    pub fn act(&self, i: usize, g: &E) -> usize {
        self.index[&self.reps[i].compose(g)]
    }

    pub fn perm_of(&self, g: &E) -> Perm {
        Perm::new((0..self.len()).map(|i| self.act(i, g)).collect())
            .expect("right multiplication permutes cosets")
    }
}

/// Product set `H·K` used for the incidence test.
pub fn product_lookup<E: Element>(h: &Group<E>, k: &Group<E>) -> BTreeSet<E> {
    permgroup::product_set(h.elements(), k.elements())
}

/// `Hx ∩ Ky ≠ ∅ ⟺ x·y⁻¹ ∈ H·K`.
pub fn incidence<E: Element>(hk: &BTreeSet<E>, x: &E, y: &E) -> bool {
    hk.contains(&x.compose(&y.inverse()))
}

/// A design realised on coset spaces, with the block list in block-coset
/// order.
#[derive(Clone, Debug)]
pub struct CosetDesign<E> {
    pub points: CosetSpace<E>,
    pub blocks: CosetSpace<E>,
    pub design: IncidenceStructure,
}

/// Builds the incidence structure with points `G/H`, blocks `G/K`, and
/// incidence `Hx ∩ Ky ≠ ∅`. The block `Ky` is the set of point cosets met by
/// its elements `k·y`.
pub fn build_design<E: Element>(
    parent: &Group<E>,
    point_sub: &Group<E>,
    block_sub: &Group<E>,
) -> Result<CosetDesign<E>> {
    let points = CosetSpace::right_cosets(parent, point_sub)?;
    let blocks = CosetSpace::right_cosets(parent, block_sub)?;
    let list = blocks
        .reps()
        .iter()
        .map(|y| {
            let set: BTreeSet<usize> = block_sub
                .elements()
                .iter()
                .map(|k| points.coset_of(&k.compose(y)).expect("element of parent"))
                .collect();
            set.into_iter().collect()
        })
        .collect();
    let design = IncidenceStructure::new(points.len(), list)?;
    Ok(CosetDesign { points, blocks, design })
}

/// `PSL(3,3)` with the Frobenius subgroup `P = ⟨η,ψ⟩ ≅ 13:3` and
/// `L = ⟨α,γ⟩ ≅ A₄`.
#[derive(Clone, Debug)]
pub struct Psl33 {
    pub g: Group<GroupElement>,
    pub p: Group<GroupElement>,
    pub eta_group: Group<GroupElement>,
    pub psi_group: Group<GroupElement>,
    pub l: Group<GroupElement>,
    pub eta: GroupElement,
    pub psi: GroupElement,
    pub alpha: GroupElement,
    pub gamma: GroupElement,
    /// `β = α^γ = γ⁻¹αγ`.
    pub beta: GroupElement,
    pub lambda3: CosetDesign<GroupElement>,
    /// The action of `G` on the 144 points.
    pub g_perm: PermGroup,
    /// The action of `P` on the 144 points.
    pub p_perm: PermGroup,
    pub base_point: usize,
}

fn lin(m: ProjMatrix) -> GroupElement {
    GroupElement::linear(m)
}

fn check(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Construction(what.to_string()))
    }
}

/// Enumerates `G`, `P`, `L`, the point and block coset spaces, and the
/// λ = 3 design.
pub fn build_psl33() -> Result<Psl33> {
    let eta = lin(generators::eta());
    let psi = lin(generators::psi());
    let alpha = lin(generators::alpha());
    let gamma = lin(generators::gamma());
    let beta = alpha.conjugate_by(&gamma);

    let g = closure(&[eta, psi, alpha, gamma], CLOSURE_CAP)?;
    check(g.order() == 5616, "|PSL(3,3)| = 5616")?;
    let p = closure(&[eta, psi], CLOSURE_CAP)?;
    check(p.order() == 39, "|P| = 39")?;
    let eta_group = closure(&[eta], CLOSURE_CAP)?;
    let psi_group = closure(&[psi], CLOSURE_CAP)?;
    check(
        permgroup::recognize_frobenius(&p, &eta_group, &psi_group)?,
        "P is Frobenius with kernel ⟨η⟩ and complement ⟨ψ⟩",
    )?;
    let l = closure(&[alpha, gamma], CLOSURE_CAP)?;
    check(permgroup::recognize_a4(&l), "L ≅ A4")?;

    let lambda3 = build_design(&g, &p, &l)?;
    check(lambda3.points.len() == 144, "144 point cosets")?;
    check(lambda3.blocks.len() == 468, "468 block cosets")?;

    let pts = &lambda3.points;
    let gens: Vec<Perm> = [eta, psi, alpha, gamma].iter().map(|x| pts.perm_of(x)).collect();
    let g_perm = closure(&gens, CLOSURE_CAP)?;
    check(g_perm.order() == 5616, "faithful action on 144 points")?;
    let p_perm = closure(&gens[..2], CLOSURE_CAP)?;
    let base_point = pts.coset_of(&g.identity()).expect("identity in G");

    Ok(Psl33 {
        g,
        p,
        eta_group,
        psi_group,
        l,
        eta,
        psi,
        alpha,
        gamma,
        beta,
        lambda3,
        g_perm,
        p_perm,
        base_point,
    })
}

/// `A = PSL(3,3):⟨σ⟩` and the objects built from it.
#[derive(Clone, Debug)]
pub struct Extension {
    pub a: Group<GroupElement>,
    /// Involution of `A ∖ G` normalizing `P`.
    pub involution: GroupElement,
    /// Whether the polarity `(1,1)` itself normalizes `P`.
    pub polarity_normalizes_p: bool,
    pub n_ap: Group<GroupElement>,
    pub lambda6: CosetDesign<GroupElement>,
    pub a_perm: PermGroup,
    pub involution_perm: Perm,
}

/// Enumerates `A`, finds the normalizing involution and `N_A(P)`, and builds
/// the λ = 6 design on the cosets of `N_A(P)`.
///
/// The cosets of `N_A(P)` are indexed exactly like the cosets of `P` in `G`
/// (every coset `N_A(P)x` meets `G` in `Px`, and twisted elements sort last),
/// which is checked here, so both designs share one point labelling.
pub fn build_extension(psl: &Psl33) -> Result<Extension> {
    let sigma = GroupElement::polarity(generators::MODULUS);
    let mut gens: Vec<GroupElement> = vec![psl.eta, psl.psi, psl.alpha, psl.gamma, sigma];
    let a = closure(&gens, CLOSURE_CAP)?;
    check(a.order() == 11232, "|A| = 11232")?;

    let normalizes = |t: &GroupElement| {
        psl.p.generators().iter().all(|h| psl.p.contains(&h.conjugate_by(t)))
    };
    let polarity_normalizes_p = normalizes(&sigma);
    let involution = if polarity_normalizes_p {
        sigma
    } else {
        *a.elements()
            .iter()
            .find(|t| t.twist() && t.order() == 2 && normalizes(t))
            .ok_or_else(|| Error::Construction("no involution of A∖G normalizes P".into()))?
    };
    let n_ap = permgroup::normalizer(&a, &psl.p)?;
    check(n_ap.order() == 78, "|N_A(P)| = 78")?;

    let lambda6 = build_design(&a, &n_ap, &psl.l)?;
    check(lambda6.points.len() == 144, "144 points for A")?;
    check(lambda6.blocks.len() == 936, "936 block cosets for A")?;
    check(
        lambda6.points.reps() == psl.lambda3.points.reps(),
        "cosets of N_A(P) align with cosets of P",
    )?;

    let pts = &lambda6.points;
    gens.pop();
    gens.push(involution);
    let perms: Vec<Perm> = gens.iter().map(|x| pts.perm_of(x)).collect();
    let a_perm = closure(&perms, CLOSURE_CAP)?;
    check(a_perm.order() == 11232, "faithful action of A on 144 points")?;
    let involution_perm = perms[4].clone();
    Ok(Extension { a, involution, polarity_normalizes_p, n_ap, lambda6, a_perm, involution_perm })
}

/// Both sides of the construction.
#[derive(Clone, Debug)]
pub struct GeometryBundle {
    pub psl: Psl33,
    pub ext: Extension,
}

impl GeometryBundle {
    pub fn build() -> Result<Self> {
        let psl = build_psl33()?;
        let ext = build_extension(&psl)?;
        Ok(Self { psl, ext })
    }

    /// The λ = 3 design `D` (blocks `B₀`).
    pub fn d(&self) -> &IncidenceStructure {
        &self.psl.lambda3.design
    }

    /// The λ = 6 design `D′`.
    pub fn d_prime(&self) -> &IncidenceStructure {
        &self.ext.lambda6.design
    }

    /// `B₀ ∪ B₀^σ`, assembled by moving `B₀` with the normalizing involution.
    pub fn b0_union_sigma(&self) -> IncidenceStructure {
        let img = self.d().image(&self.ext.involution_perm);
        let mut blocks = self.d().blocks().to_vec();
        blocks.extend(img.blocks().iter().cloned());
        IncidenceStructure::new(144, blocks).expect("valid blocks")
    }
}

/// Point-orbit containing the coset `P·y`.
pub fn orbit_of(psl: &Psl33, y: &GroupElement) -> Vec<usize> {
    let pt = psl.lambda3.points.coset_of(y).expect("element of G");
    permgroup::orbits(psl.p_perm.generators(), 144)
        .into_iter()
        .find(|o| o.binary_search(&pt).is_ok())
        .expect("orbits partition the points")
}

/// Labelled double-coset representatives `1, α, β, αβ, γ, γ⁻¹, γ^{αβ}, (γ^{αβ})⁻¹`.
pub fn double_coset_reps(psl: &Psl33) -> Vec<(&'static str, GroupElement)> {
    let ab = psl.alpha.compose(&psl.beta);
    let g_ab = psl.gamma.conjugate_by(&ab);
    vec![
        ("1", psl.g.identity()),
        ("alpha", psl.alpha),
        ("beta", psl.beta),
        ("alpha*beta", ab),
        ("gamma", psl.gamma),
        ("gamma^-1", psl.gamma.inverse()),
        ("gamma^(alpha*beta)", g_ab),
        ("(gamma^(alpha*beta))^-1", g_ab.inverse()),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct CentrlRow {
    pub label: &'static str,
    pub rep: GroupElement,
    pub double_coset_size: usize,
    pub expected: Vec<GroupElement>,
    pub found: Vec<GroupElement>,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CentrlReport {
    pub rows: Vec<CentrlRow>,
    /// The eight double cosets are pairwise disjoint and cover `G`.
    pub partition_of_g: bool,
    pub passed: bool,
}

/// Recomputes `PyP ∩ L` for each representative and compares with the
/// expected sets `{α, γ^β, (γ^β)⁻¹}`, `{β, γ^α, (γ^α)⁻¹}` and `{y}`.
pub fn centrl_audit(psl: &Psl33) -> CentrlReport {
    let reps = double_coset_reps(psl);
    let g_beta = psl.gamma.conjugate_by(&psl.beta);
    let g_alpha = psl.gamma.conjugate_by(&psl.alpha);
    let mut covered: BTreeSet<GroupElement> = BTreeSet::new();
    let mut total = 0;
    let mut rows = Vec::new();
    for (label, y) in reps {
        let dc = permgroup::double_coset(psl.p.elements(), &y, psl.p.elements());
        total += dc.len();
        covered.extend(dc.iter().copied());
        let mut found: Vec<GroupElement> =
            psl.l.elements().iter().filter(|x| dc.contains(x)).copied().collect();
        found.sort();
        let mut expected = match label {
            "alpha" => vec![psl.alpha, g_beta, g_beta.inverse()],
            "beta" => vec![psl.beta, g_alpha, g_alpha.inverse()],
            _ => vec![y],
        };
        expected.sort();
        expected.dedup();
        let matches = expected == found;
        rows.push(CentrlRow { label, rep: y, double_coset_size: dc.len(), expected, found, matches });
    }
    let partition_of_g = total == psl.g.order() && covered.len() == psl.g.order();
    let passed = partition_of_g && rows.iter().all(|r| r.matches);
    CentrlReport { rows, partition_of_g, passed }
}

/// The polarity map on `PSL(3,3)` lifted to group elements, for tests.
pub fn polarity_on(g: &GroupElement) -> GroupElement {
    GroupElement::new(polarity_apply(g.mat()), g.twist())
}
