//! Design-theoretic verification of incidence structures.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::geometry::GeometryBundle;
use crate::permgroup::{self, Element, Group, Perm, PermGroup};
use crate::{Error, Result};

/// Outcome of a single arithmetic or structural check. `HypothesisUnmet` marks a check
/// whose premise fails, so a vacuous pass is never reported as `Pass`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisUnmet,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// `v` points and a multiset of blocks, each a strictly increasing list of
/// point indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    v: usize,
    blocks: Vec<Vec<usize>>,
}

/// On-disk form: `{"v": …, "k": …, "blocks": [[…], …]}` with blocks sorted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DesignFile {
    pub v: usize,
    pub k: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    pub fn new(v: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        for (j, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidStructure(format!("block {j} is empty")));
            }
            if b.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidStructure(format!("block {j} is not strictly increasing")));
            }
            if b.last().is_some_and(|&x| x >= v) {
                return Err(Error::InvalidStructure(format!("block {j} has a point ≥ {v}")));
            }
        }
        Ok(Self { v, blocks })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Blocks in lexicographic order.
    pub fn sorted_blocks(&self) -> Vec<Vec<usize>> {
        let mut b = self.blocks.clone();
        b.sort();
        b
    }

    /// Image of the structure under a point permutation.
    pub fn image(&self, g: &Perm) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut img: Vec<usize> = b.iter().map(|&x| g.apply(x)).collect();
                img.sort_unstable();
                img
            })
            .collect();
        Self { v: self.v, blocks }
    }

    /// Equality of block multisets.
    pub fn same_blocks(&self, other: &Self) -> bool {
        self.v == other.v && self.sorted_blocks() == other.sorted_blocks()
    }

    pub fn blocks_through(&self, x: usize) -> Vec<&Vec<usize>> {
        self.blocks.iter().filter(|b| b.binary_search(&x).is_ok()).collect()
    }

    pub fn to_file(&self) -> Result<DesignFile> {
        let k = self.blocks.first().map_or(0, Vec::len);
        if self.blocks.iter().any(|b| b.len() != k) {
            return Err(Error::InvalidStructure("non-uniform block size".into()));
        }
        Ok(DesignFile { v: self.v, k, blocks: self.sorted_blocks() })
    }

    pub fn from_file(f: DesignFile) -> Result<Self> {
        if f.blocks.iter().any(|b| b.len() != f.k) {
            return Err(Error::InvalidStructure("block size differs from k".into()));
        }
        Self::new(f.v, f.blocks)
    }

    /// Plain-text form: a header `v k b`, then one block per line.
    pub fn to_text(&self) -> Result<String> {
        let f = self.to_file()?;
        let mut s = format!("{} {} {}\n", f.v, f.k, f.blocks.len());
        for b in &f.blocks {
            let line: Vec<String> = b.iter().map(ToString::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        Ok(s)
    }

    pub fn from_text(s: &str) -> Result<Self> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let bad = |m: &str| Error::InvalidStructure(m.to_string());
        let header: Vec<usize> = lines
            .next()
            .ok_or_else(|| bad("empty file"))?
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("bad header"))?;
        let [v, k, b] = header[..] else {
            return Err(bad("header must be `v k b`"));
        };
        let blocks: Vec<Vec<usize>> = lines
            .map(|l| l.split_whitespace().map(str::parse).collect::<std::result::Result<Vec<usize>, _>>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("bad block line"))?;
        if blocks.len() != b {
            return Err(bad("block count differs from header"));
        }
        Self::from_file(DesignFile { v, k, blocks })
    }
}

/// `2-(v,k,λ)` parameters with replication number `r` and block count `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignParams {
    pub v: u64,
    pub b: u64,
    pub k: u64,
    pub r: u64,
    pub lambda: u64,
}

impl DesignParams {
    /// `vr = bk` and `λ(v−1) = r(k−1)`.
    pub fn counting_identities_hold(&self) -> bool {
        self.v * self.r == self.b * self.k && self.lambda * (self.v - 1) == self.r * (self.k - 1)
    }

    /// `v = k²` and `λ | k`.
    pub fn in_square_family(&self) -> bool {
        self.v == self.k * self.k && self.lambda > 0 && self.k % self.lambda == 0
    }
}

/// First uniformity violation found by [`classify_design`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Diagnostic {
    NoBlocks,
    BlockSize { block: usize, size: usize, expected: usize },
    Replication { point: usize, count: usize, expected: usize },
    PairCount { pair: (usize, usize), count: usize, expected: usize },
}

fn point_block_bitsets(d: &IncidenceStructure) -> Vec<Vec<u64>> {
    let words = d.b().div_ceil(64);
    let mut rows = vec![vec![0u64; words]; d.v()];
    for (j, b) in d.blocks().iter().enumerate() {
        for &x in b {
            rows[x][j / 64] |= 1 << (j % 64);
        }
    }
    rows
}

/// Checks uniform block size, uniform replication and a constant pair count
/// over every pair of distinct points.
pub fn classify_design(d: &IncidenceStructure) -> std::result::Result<DesignParams, Diagnostic> {
    let k = d.blocks().first().ok_or(Diagnostic::NoBlocks)?.len();
    if let Some((j, b)) = d.blocks().iter().enumerate().find(|(_, b)| b.len() != k) {
        return Err(Diagnostic::BlockSize { block: j, size: b.len(), expected: k });
    }
    let rows = point_block_bitsets(d);
    let degree = |x: usize| rows[x].iter().map(|w| w.count_ones() as usize).sum::<usize>();
    let r = degree(0);
    if let Some(x) = (0..d.v()).find(|&x| degree(x) != r) {
        return Err(Diagnostic::Replication { point: x, count: degree(x), expected: r });
    }
    if d.v() < 2 {
        return Ok(DesignParams { v: d.v() as u64, b: d.b() as u64, k: k as u64, r: r as u64, lambda: 0 });
    }
    let pair = |x: usize, y: usize| {
        rows[x].iter().zip(&rows[y]).map(|(a, b)| (a & b).count_ones() as usize).sum::<usize>()
    };
    let lambda = pair(0, 1);
    // smallest violating pair, independent of scheduling
    let bad = (0..d.v())
        .into_par_iter()
        .filter_map(|x| {
            ((x + 1)..d.v()).find(|&y| pair(x, y) != lambda).map(|y| (x, y))
        })
        .min();
    if let Some((x, y)) = bad {
        return Err(Diagnostic::PairCount { pair: (x, y), count: pair(x, y), expected: lambda });
    }
    Ok(DesignParams { v: d.v() as u64, b: d.b() as u64, k: k as u64, r: r as u64, lambda: lambda as u64 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DesdesReport {
    pub r_equals_lambda_k_plus_1: Verdict,
    pub b_equals_lambda_k_k_plus_1: Verdict,
    pub ratio_square_exceeds_k_square: Verdict,
}

impl DesdesReport {
    pub fn all_pass(&self) -> bool {
        [self.r_equals_lambda_k_plus_1, self.b_equals_lambda_k_k_plus_1, self.ratio_square_exceeds_k_square]
            .iter()
            .all(|v| *v == Verdict::Pass)
    }
}

/// `r = λ(k+1)`, `b = λk(k+1)` and `(r/λ)² > k²` for a `v = k²` design.
pub fn desdes_identities(p: &DesignParams) -> DesdesReport {
    if p.v != p.k * p.k || p.lambda == 0 {
        return DesdesReport {
            r_equals_lambda_k_plus_1: Verdict::HypothesisUnmet,
            b_equals_lambda_k_k_plus_1: Verdict::HypothesisUnmet,
            ratio_square_exceeds_k_square: Verdict::HypothesisUnmet,
        };
    }
    DesdesReport {
        r_equals_lambda_k_plus_1: Verdict::from_bool(p.r == p.lambda * (p.k + 1)),
        b_equals_lambda_k_k_plus_1: Verdict::from_bool(p.b == p.lambda * p.k * (p.k + 1)),
        ratio_square_exceeds_k_square: Verdict::from_bool(p.r * p.r > p.k * p.k * p.lambda * p.lambda),
    }
}

fn block_lookup(d: &IncidenceStructure) -> HashMap<&[usize], Vec<usize>> {
    let mut m: HashMap<&[usize], Vec<usize>> = HashMap::new();
    for (j, b) in d.blocks().iter().enumerate() {
        m.entry(b.as_slice()).or_default().push(j);
    }
    m
}

/// Block permutation induced by `g`; repeated blocks are matched copy by copy.
fn block_action(d: &IncidenceStructure, lookup: &HashMap<&[usize], Vec<usize>>, g: &Perm) -> Option<Vec<usize>> {
    let mut out = vec![0; d.b()];
    for (b, copies) in lookup {
        let mut img: Vec<usize> = b.iter().map(|&x| g.apply(x)).collect();
        img.sort_unstable();
        let target = lookup.get(img.as_slice())?;
        if target.len() != copies.len() {
            return None;
        }
        for (&s, &t) in copies.iter().zip(target) {
            out[s] = t;
        }
    }
    Some(out)
}

/// Checks that every generator of `group` preserves the block multiset.
pub fn preserves_blocks(group: &PermGroup, d: &IncidenceStructure) -> Result<Vec<Vec<usize>>> {
    let lookup = block_lookup(d);
    group
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| block_action(d, &lookup, g).ok_or(Error::NotAutomorphism(i)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FlagReport {
    pub flags: usize,
    pub orbits: usize,
    pub transitive: bool,
}

/// Orbits of `group` on the flags `(x, B)`, `x ∈ B`.
pub fn flag_transitive(group: &PermGroup, d: &IncidenceStructure) -> Result<FlagReport> {
    if group.degree() != d.v() {
        return Err(Error::InvalidStructure("group degree differs from v".into()));
    }
    let block_perms = preserves_blocks(group, d)?;
    let mut offset = Vec::with_capacity(d.b() + 1);
    offset.push(0);
    for b in d.blocks() {
        offset.push(offset.last().unwrap() + b.len());
    }
    let flags = *offset.last().unwrap();
    let flag_id = |x: usize, j: usize| offset[j] + d.blocks()[j].binary_search(&x).expect("incident");
    let mut seen = vec![false; flags];
    let mut n_orbits = 0;
    for j0 in 0..d.b() {
        for &x0 in &d.blocks()[j0] {
            let f0 = flag_id(x0, j0);
            if seen[f0] {
                continue;
            }
            n_orbits += 1;
            seen[f0] = true;
            let mut stack = vec![(x0, j0)];
            while let Some((x, j)) = stack.pop() {
                for (g, bp) in group.generators().iter().zip(&block_perms) {
                    let (y, k) = (g.apply(x), bp[j]);
                    let f = flag_id(y, k);
                    if !seen[f] {
                        seen[f] = true;
                        stack.push((y, k));
                    }
                }
            }
        }
    }
    Ok(FlagReport { flags, orbits: n_orbits, transitive: n_orbits == 1 })
}

/// Sizes of the orbits of `group` on the blocks, in block order.
pub fn block_orbit_sizes(group: &PermGroup, d: &IncidenceStructure) -> Result<Vec<usize>> {
    let perms = preserves_blocks(group, d)?;
    let gens: Vec<Perm> = perms.into_iter().map(|p| Perm::new(p).expect("bijection")).collect();
    Ok(permgroup::orbits(&gens, d.b()).iter().map(Vec::len).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TacticalParams {
    pub v0: usize,
    pub b0: usize,
    pub k0: usize,
    pub r0: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum NotTactical {
    Empty,
    BlockMeets { block: usize, meets: usize, expected: usize },
    PointDegree { point: usize, degree: usize, expected: usize },
}

/// Tactical parameters of the substructure on `points` (sorted) and
/// `blocks`: each block must meet `points` in `k₀` points, each point lie on
/// `r₀` blocks.
pub fn tactical_params(points: &[usize], blocks: &[&Vec<usize>]) -> std::result::Result<TacticalParams, NotTactical> {
    if points.is_empty() || blocks.is_empty() {
        return Err(NotTactical::Empty);
    }
    let meets = |b: &Vec<usize>| b.iter().filter(|x| points.binary_search(x).is_ok()).count();
    let k0 = meets(blocks[0]);
    if let Some((j, b)) = blocks.iter().enumerate().find(|(_, b)| meets(b) != k0) {
        return Err(NotTactical::BlockMeets { block: j, meets: meets(b), expected: k0 });
    }
    let degree = |x: usize| blocks.iter().filter(|b| b.binary_search(&x).is_ok()).count();
    let r0 = degree(points[0]);
    if let Some(&x) = points.iter().find(|&&x| degree(x) != r0) {
        return Err(NotTactical::PointDegree { point: x, degree: degree(x), expected: r0 });
    }
    let t = TacticalParams { v0: points.len(), b0: blocks.len(), k0, r0 };
    debug_assert_eq!(t.v0 * t.r0, t.b0 * t.k0);
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pp3Report {
    pub point: usize,
    pub hypothesis: Verdict,
    /// Distinct `(|O|, |B ∩ O|)` pairs over orbits `O ≠ {x}` of `G_x` and
    /// blocks `B ∋ x`.
    pub pairs: Vec<(usize, usize)>,
    pub verdict: Verdict,
}

/// `|y^{G_x}| = (k+1)·|B ∩ y^{G_x}|` for every `y ≠ x` and `B ∋ x`.
pub fn pp3_orbit_check(group: &PermGroup, d: &IncidenceStructure, x: usize) -> Result<Pp3Report> {
    let ft = flag_transitive(group, d).map(|f| f.transitive).unwrap_or(false);
    pp3_with_hypothesis(group, d, x, ft)
}

/// [`pp3_orbit_check`] at every point, sharing one flag-transitivity test.
pub fn pp3_sweep(group: &PermGroup, d: &IncidenceStructure) -> Result<Vec<Pp3Report>> {
    let ft = flag_transitive(group, d).map(|f| f.transitive).unwrap_or(false);
    (0..d.v()).into_par_iter().map(|x| pp3_with_hypothesis(group, d, x, ft)).collect()
}

fn pp3_with_hypothesis(group: &PermGroup, d: &IncidenceStructure, x: usize, ft: bool) -> Result<Pp3Report> {
    let k = d.blocks().first().map_or(0, Vec::len);
    let stab = permgroup::stabilizer(group, x)?;
    let orbs = permgroup::orbits(stab.generators(), d.v());
    let through = d.blocks_through(x);
    let mut pairs = std::collections::BTreeSet::new();
    let mut ok = true;
    for o in orbs.iter().filter(|o| o.as_slice() != [x]) {
        for b in &through {
            let meet = b.iter().filter(|y| o.binary_search(y).is_ok()).count();
            ok &= o.len() == (k + 1) * meet;
            pairs.insert((o.len(), meet));
        }
    }
    let verdict = match (ft, ok) {
        (false, _) => Verdict::HypothesisUnmet,
        (true, ok) => Verdict::from_bool(ok),
    };
    Ok(Pp3Report {
        point: x,
        hypothesis: Verdict::from_bool(ft),
        pairs: pairs.into_iter().collect(),
        verdict,
    })
}

/// `|G| < |G_x|³`.
pub fn largeness_check(order_g: u128, order_gx: u128) -> Result<bool> {
    if order_gx == 0 || order_g % order_gx != 0 {
        return Err(Error::Divisibility(order_gx.to_string(), order_g.to_string()));
    }
    Ok(order_gx.checked_pow(3).map_or(true, |c| order_g < c))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TripleFactorization {
    pub covers: bool,
    pub degenerate: bool,
    pub product_size: usize,
    pub triple_product_size: usize,
}

/// `G = N·L·N` (covers) and `G = N·L` (degenerate) by element-set products.
pub fn triple_factorization<E: Element>(g: &Group<E>, n: &Group<E>, l: &Group<E>) -> Result<TripleFactorization> {
    if !n.is_subgroup_of(g) || !l.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    let nl: Vec<E> = permgroup::product_set(n.elements(), l.elements()).into_iter().collect();
    let nln = permgroup::product_set(&nl, n.elements());
    Ok(TripleFactorization {
        covers: nln.len() == g.order(),
        degenerate: nl.len() == g.order(),
        product_size: nl.len(),
        triple_product_size: nln.len(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedCheck {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct UniquenessReport {
    pub checks: Vec<NamedCheck>,
    pub passed: bool,
}

impl UniquenessReport {
    pub fn check(&self, id: &str) -> Option<&NamedCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// The orbit argument showing `Aut(D) = G` for the λ = 3 design, run with
/// `b0` as the block set `B₀` on the common 144-point labelling.
pub fn extension_uniqueness_audit_with(bundle: &GeometryBundle, b0: &IncidenceStructure) -> Result<UniquenessReport> {
    let base = bundle.psl.base_point;
    let n = b0.v();
    let a_p = permgroup::stabilizer(&bundle.ext.a_perm, base)?;
    let g_p = permgroup::stabilizer(&bundle.psl.g_perm, base)?;
    let a_orbits = permgroup::orbits(a_p.generators(), n);
    let g_orbits = permgroup::orbits(g_p.generators(), n);
    let mut checks = Vec::new();

    let mut lens: Vec<usize> = a_orbits.iter().map(Vec::len).collect();
    lens.sort_unstable();
    checks.push(NamedCheck {
        id: "a",
        name: "A_P-orbit lengths are {1,13,13,13,26,39,39}",
        passed: lens == [1, 13, 13, 13, 26, 39, 39],
        detail: format!("{lens:?}"),
    });

    let long: Vec<&Vec<usize>> = a_orbits.iter().filter(|o| o.len() == 26).collect();
    let merged = long.first().map(|o| {
        let parts: Vec<&Vec<usize>> = g_orbits.iter().filter(|g| g.iter().any(|x| o.binary_search(x).is_ok())).collect();
        let exact = parts.iter().all(|g| g.iter().all(|x| o.binary_search(x).is_ok()));
        (parts.iter().map(|g| g.len()).collect::<Vec<_>>(), exact)
    });
    checks.push(NamedCheck {
        id: "b",
        name: "exactly one orbit of length 26, a union of two G_P-orbits of length 13",
        passed: long.len() == 1 && matches!(&merged, Some((parts, true)) if parts == &[13, 13]),
        detail: format!("26-orbits: {}, G_P parts: {:?}", long.len(), merged.as_ref().map(|m| &m.0)),
    });

    let o: Vec<usize> = long.first().map(|o| o.to_vec()).unwrap_or_default();
    let through = b0.blocks_through(base);
    let meets: Vec<usize> = through
        .iter()
        .map(|b| b.iter().filter(|x| o.binary_search(x).is_ok()).count())
        .collect();
    checks.push(NamedCheck {
        id: "c",
        name: "every block through P meets O in exactly 4 points",
        passed: !meets.is_empty() && meets.iter().all(|&m| m == 4),
        detail: format!("{} blocks, meets {:?}", meets.len(), meets.iter().collect::<std::collections::BTreeSet<_>>()),
    });

    let tact = tactical_params(&o, &through);
    checks.push(NamedCheck {
        id: "d",
        name: "(O, B_P) is tactical with parameters (26,39,4,6)",
        passed: tact == Ok(TacticalParams { v0: 26, b0: 39, k0: 4, r0: 6 }),
        detail: format!("{tact:?}"),
    });

    let lambda = classify_design(b0).map(|p| p.lambda).ok();
    let r0 = tact.as_ref().map(|t| t.r0).ok();
    checks.push(NamedCheck {
        id: "e",
        name: "r0 = 6 differs from λ = 3",
        passed: r0 == Some(6) && lambda == Some(3),
        detail: format!("r0 = {r0:?}, lambda = {lambda:?}"),
    });

    let img = b0.image(&bundle.ext.involution_perm);
    let differs = !img.same_blocks(b0);
    checks.push(NamedCheck {
        id: "f",
        name: "B0^sigma differs from B0",
        passed: differs,
        detail: format!("shared blocks: {}", shared_blocks(b0, &img)),
    });

    let passed = checks.iter().all(|c| c.passed);
    Ok(UniquenessReport { checks, passed })
}

/// [`extension_uniqueness_audit_with`] on the constructed `D`.
pub fn extension_uniqueness_audit(bundle: &GeometryBundle) -> Result<UniquenessReport> {
    extension_uniqueness_audit_with(bundle, bundle.d())
}

fn shared_blocks(a: &IncidenceStructure, b: &IncidenceStructure) -> usize {
    let mut count: BTreeMap<&Vec<usize>, usize> = BTreeMap::new();
    for blk in a.blocks() {
        *count.entry(blk).or_default() += 1;
    }
    b.blocks()
        .iter()
        .filter(|blk| match count.get_mut(blk) {
            Some(c) if *c > 0 => {
                *c -= 1;
                true
            }
            _ => false,
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::closure;

    fn pair_design() -> IncidenceStructure {
        IncidenceStructure::new(2, vec![vec![0, 1]]).unwrap()
    }

    /// Fano plane, the 2-(7,3,1) design.
    fn fano() -> IncidenceStructure {
        let blocks = (0..7).map(|i| {
            let mut b = vec![i, (i + 1) % 7, (i + 3) % 7];
            b.sort();
            b
        });
        IncidenceStructure::new(7, blocks.collect()).unwrap()
    }

    #[test]
    fn rejects_malformed_blocks() {
        assert!(IncidenceStructure::new(3, vec![vec![]]).is_err());
        assert!(IncidenceStructure::new(3, vec![vec![1, 0]]).is_err());
        assert!(IncidenceStructure::new(3, vec![vec![0, 3]]).is_err());
    }

    #[test]
    fn classify_pair() {
        let p = classify_design(&pair_design()).unwrap();
        assert_eq!(p, DesignParams { v: 2, b: 1, k: 2, r: 1, lambda: 1 });
    }

    #[test]
    fn classify_fano() {
        let p = classify_design(&fano()).unwrap();
        assert_eq!((p.v, p.b, p.k, p.r, p.lambda), (7, 7, 3, 3, 1));
        assert!(p.counting_identities_hold());
    }

    #[test]
    fn classify_diagnostics() {
        let d = IncidenceStructure::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert!(matches!(classify_design(&d), Err(Diagnostic::BlockSize { block: 1, .. })));
        let d = IncidenceStructure::new(3, vec![vec![0, 1], vec![0, 2]]).unwrap();
        assert!(matches!(classify_design(&d), Err(Diagnostic::Replication { point: 1, .. })));
        let d = IncidenceStructure::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(
            classify_design(&d),
            Err(Diagnostic::PairCount { pair: (0, 2), count: 0, expected: 1 })
        );
    }

    #[test]
    fn desdes_examples() {
        let d3 = DesignParams { v: 144, b: 468, k: 12, r: 39, lambda: 3 };
        assert!(desdes_identities(&d3).all_pass());
        let d6 = DesignParams { v: 144, b: 936, k: 12, r: 78, lambda: 6 };
        assert!(desdes_identities(&d6).all_pass());
        let d2 = DesignParams { v: 36, b: 84, k: 6, r: 14, lambda: 2 };
        assert_eq!(desdes_identities(&d2).r_equals_lambda_k_plus_1, Verdict::Pass);
        let fano = DesignParams { v: 7, b: 7, k: 3, r: 3, lambda: 1 };
        assert_eq!(desdes_identities(&fano).r_equals_lambda_k_plus_1, Verdict::HypothesisUnmet);
    }

    #[test]
    fn flag_transitive_pair() {
        let g = closure(&[Perm::from_cycles(2, &[&[0, 1]]).unwrap()], 2).unwrap();
        let r = flag_transitive(&g, &pair_design()).unwrap();
        assert_eq!(r, FlagReport { flags: 2, orbits: 1, transitive: true });
    }

    #[test]
    fn flag_transitive_fano_cyclic() {
        // the cyclic group of order 7 has 3 orbits on the 21 flags
        let c: Vec<usize> = (0..7).collect();
        let g = closure(&[Perm::from_cycles(7, &[&c]).unwrap()], 7).unwrap();
        let r = flag_transitive(&g, &fano()).unwrap();
        assert_eq!((r.flags, r.orbits), (21, 3));
    }

    #[test]
    fn non_automorphism_detected() {
        let g = closure(&[Perm::from_cycles(7, &[&[0, 1]]).unwrap()], 2).unwrap();
        assert!(matches!(flag_transitive(&g, &fano()), Err(Error::NotAutomorphism(0))));
    }

    #[test]
    fn tactical_examples() {
        let f = fano();
        let blocks: Vec<&Vec<usize>> = f.blocks().iter().collect();
        let all: Vec<usize> = (0..7).collect();
        assert_eq!(tactical_params(&all, &blocks), Ok(TacticalParams { v0: 7, b0: 7, k0: 3, r0: 3 }));
        assert!(matches!(tactical_params(&[0, 1], &blocks), Err(NotTactical::BlockMeets { .. })));
    }

    #[test]
    fn largeness_examples() {
        assert!(largeness_check(5616, 39).unwrap());
        assert!(largeness_check(11232, 78).unwrap());
        assert!(!largeness_check(120, 2).unwrap());
        assert!(largeness_check(120, 7).is_err());
    }

    #[test]
    fn triple_factorization_trivial() {
        let a = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let g = closure(&[a.clone(), b.clone()], 6).unwrap();
        let h = closure(&[b], 2).unwrap();
        let t = triple_factorization(&g, &g, &h).unwrap();
        assert!(t.covers && t.degenerate);
        let k = closure(&[a], 3).unwrap();
        let t = triple_factorization(&g, &k, &h).unwrap();
        assert!(t.covers && t.degenerate);
        let t = triple_factorization(&g, &h, &h).unwrap();
        assert!(!t.covers && !t.degenerate);
    }

    #[test]
    fn text_roundtrip() {
        let f = fano();
        let back = IncidenceStructure::from_text(&f.to_text().unwrap()).unwrap();
        assert!(back.same_blocks(&f));
        assert!(IncidenceStructure::from_text("3 2 1\n0 1 2\n").is_err());
    }
}
