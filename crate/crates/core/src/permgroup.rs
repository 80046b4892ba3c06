//! Brute-force finite group machinery.
//!
//! Every group handled by this crate has order at most 11232, so groups are
//! stored with their full, sorted element list. That makes membership a
//! binary search and keeps every downstream index reproducible.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use crate::{Error, Result};

/// A group element with composition written left to right: `a.compose(b)`
/// acts as `a` first, then `b`.
pub trait Element: Clone + Eq + Ord + Hash + Debug + Send + Sync {
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn identity_like(&self) -> Self;

    fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    /// `g⁻¹·self·g`.
    fn conjugate_by(&self, g: &Self) -> Self {
        g.inverse().compose(self).compose(g)
    }

    fn order(&self) -> usize {
        let mut x = self.clone();
        let mut n = 1;
        while !x.is_identity() {
            x = x.compose(self);
            n += 1;
        }
        n
    }
}

/// A permutation of `{0, …, n−1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::BadGenerators);
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(degree: usize) -> Self {
        Self { images: (0..degree).collect() }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                if a >= degree {
                    return Err(Error::BadGenerators);
                }
                images[a] = cyc[(i + 1) % cyc.len()];
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] == i).collect()
    }
}

impl Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

impl Element for Perm {
    fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        Self { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Self { images }
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.degree())
    }
}

/// A finite group with its generators and its complete, sorted element list.
#[derive(Clone, Debug)]
pub struct Group<E> {
    generators: Vec<E>,
    elements: Vec<E>,
}

pub type PermGroup = Group<Perm>;

/// Breadth-first product closure of `gens`.
pub fn closure<E: Element>(gens: &[E], cap: usize) -> Result<Group<E>> {
    let first = gens.first().ok_or(Error::BadGenerators)?;
    let id = first.identity_like();
    if gens.iter().any(|g| g.identity_like() != id) {
        return Err(Error::BadGenerators);
    }
    let mut seen: HashSet<E> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::ClosureOverflow(cap));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<E> = seen.into_iter().collect();
    elements.sort();
    Ok(Group { generators: gens.to_vec(), elements })
}

impl<E: Element> Group<E> {
    /// Wraps a list of elements already known to form a subgroup, choosing a
    /// small generating set greedily in element order.
    pub fn from_elements(mut elements: Vec<E>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let first = elements.first().ok_or(Error::BadGenerators)?;
        let id = first.identity_like();
        if elements.binary_search(&id).is_err() {
            return Err(Error::NotSubgroup);
        }
        let mut gens: Vec<E> = Vec::new();
        let mut current = vec![id.clone()];
        for e in &elements {
            if current.binary_search(e).is_err() {
                gens.push(e.clone());
                current = closure(&gens, elements.len())
                    .map_err(|_| Error::NotSubgroup)?
                    .elements;
            }
        }
        if current != elements {
            return Err(Error::NotSubgroup);
        }
        if gens.is_empty() {
            gens.push(id);
        }
        Ok(Self { generators: gens, elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn identity(&self) -> E {
        self.elements[0].identity_like()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    pub fn is_subgroup_of(&self, parent: &Self) -> bool {
        self.elements.iter().all(|e| parent.contains(e))
    }

    /// Subgroup of elements satisfying `pred`; the caller guarantees closure.
    pub fn subgroup_where(&self, pred: impl Fn(&E) -> bool) -> Result<Self> {
        Self::from_elements(self.elements.iter().filter(|e| pred(e)).cloned().collect())
    }

    pub fn is_normal_in(&self, parent: &Self) -> bool {
        parent
            .generators
            .iter()
            .all(|g| self.generators.iter().all(|h| self.contains(&h.conjugate_by(g))))
    }
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }
}

/// Orbits of the group generated by `gens` on `{0, …, degree−1}`; each orbit
/// sorted, orbits ordered by their least point.
pub fn orbits(gens: &[Perm], degree: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

pub fn orbit_lengths(gens: &[Perm], degree: usize) -> Vec<usize> {
    let mut lens: Vec<usize> = orbits(gens, degree).iter().map(Vec::len).collect();
    lens.sort_unstable();
    lens
}

pub fn stabilizer(group: &PermGroup, point: usize) -> Result<PermGroup> {
    group.subgroup_where(|g| g.apply(point) == point)
}

/// `{g ∈ G : g⁻¹Hg = H}` by a linear scan over `G`.
pub fn normalizer<E: Element>(group: &Group<E>, sub: &Group<E>) -> Result<Group<E>> {
    if !sub.is_subgroup_of(group) {
        return Err(Error::NotSubgroup);
    }
    group.subgroup_where(|g| sub.generators.iter().all(|h| sub.contains(&h.conjugate_by(g))))
}

pub fn centralizer<E: Element>(group: &Group<E>, sub: &Group<E>) -> Result<Group<E>> {
    group.subgroup_where(|g| sub.generators.iter().all(|h| h.compose(g) == g.compose(h)))
}

/// `H·g·K` as a deduplicated set.
pub fn double_coset<E: Element>(h: &[E], g: &E, k: &[E]) -> BTreeSet<E> {
    let hg: Vec<E> = h.iter().map(|x| x.compose(g)).collect();
    product_set(&hg, k)
}

/// `H·K` as a deduplicated set.
pub fn product_set<E: Element>(h: &[E], k: &[E]) -> BTreeSet<E> {
    h.iter().flat_map(|x| k.iter().map(move |y| x.compose(y))).collect()
}

pub fn is_transitive(gens: &[Perm], degree: usize) -> bool {
    orbits(gens, degree).len() == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Primitivity {
    Primitive,
    /// A nontrivial block system, blocks sorted by least point.
    Imprimitive { blocks: Vec<Vec<usize>> },
}

/// Primitivity test: for each `b ≠ 0`, the finest invariant partition joining
/// `0` and `b` is built by union-find closure under the generators.
pub fn is_primitive(group: &PermGroup) -> Result<Primitivity> {
    let n = group.degree();
    let gens = group.generators();
    if !is_transitive(gens, n) {
        return Err(Error::Intransitive(n));
    }
    for b in 1..n {
        let classes = minimal_block_system(gens, n, 0, b);
        if classes.len() > 1 {
            return Ok(Primitivity::Imprimitive { blocks: classes });
        }
    }
    Ok(Primitivity::Primitive)
}

fn minimal_block_system(gens: &[Perm], n: usize, a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut queue = VecDeque::new();
    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
    parent[rb] = ra;
    queue.push_back((a, b));
    while let Some((x, y)) = queue.pop_front() {
        for g in gens {
            let (gx, gy) = (g.apply(x), g.apply(y));
            let (u, v) = (find(&mut parent, gx), find(&mut parent, gy));
            if u != v {
                parent[v.max(u)] = u.min(v);
                queue.push_back((gx, gy));
            }
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..n {
        let r = find(&mut parent, x);
        classes.entry(r).or_default().push(x);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort();
    out
}

/// Whether `G = K ⋊ H` is Frobenius with kernel `K` and complement `H`:
/// no nonidentity element of `H` centralizes a nonidentity element of `K`.
pub fn recognize_frobenius<E: Element>(g: &Group<E>, k: &Group<E>, h: &Group<E>) -> Result<bool> {
    if !k.is_subgroup_of(g) || !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    if !k.is_normal_in(g) {
        return Err(Error::NotComplement("kernel is not normal"));
    }
    if k.order() * h.order() != g.order() {
        return Err(Error::NotComplement("orders do not multiply"));
    }
    if h.elements.iter().any(|x| !x.is_identity() && k.contains(x)) {
        return Err(Error::NotComplement("kernel and complement intersect"));
    }
    let frob = h.elements.iter().filter(|x| !x.is_identity()).all(|x| {
        k.elements
            .iter()
            .filter(|y| !y.is_identity())
            .all(|y| y.conjugate_by(x) != *y)
    });
    Ok(frob)
}

/// Element-order census: `|G| = 12` with three involutions and eight
/// elements of order 3 characterises `A₄`.
pub fn recognize_a4<E: Element>(g: &Group<E>) -> bool {
    if g.order() != 12 {
        return false;
    }
    let census = order_census(g);
    census.get(&2) == Some(&3) && census.get(&3) == Some(&8)
}

pub fn order_census<E: Element>(g: &Group<E>) -> std::collections::BTreeMap<usize, usize> {
    let mut m = std::collections::BTreeMap::new();
    for e in &g.elements {
        *m.entry(e.order()).or_insert(0) += 1;
    }
    m
}

/// Dihedral of order `2m`: a cyclic subgroup of order `m` inverted by an
/// involution outside it.
pub fn recognize_dihedral<E: Element>(g: &Group<E>) -> bool {
    let n = g.order();
    if n % 2 != 0 || n < 4 {
        return false;
    }
    let m = n / 2;
    let Some(r) = g.elements.iter().find(|e| e.order() == m) else {
        return false;
    };
    let rot = match closure(std::slice::from_ref(r), m) {
        Ok(c) => c,
        Err(_) => return false,
    };
    g.elements.iter().any(|s| {
        !rot.contains(s) && s.order() == 2 && r.conjugate_by(s) == r.inverse()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        closure(
            &[Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap(), Perm::from_cycles(3, &[&[0, 1]]).unwrap()],
            10,
        )
        .unwrap()
    }

    fn cyclic(n: usize) -> PermGroup {
        let c: Vec<usize> = (0..n).collect();
        closure(&[Perm::from_cycles(n, &[&c]).unwrap()], n).unwrap()
    }

    /// Dihedral group of order 2n acting on an n-gon.
    fn dihedral(n: usize) -> PermGroup {
        let c: Vec<usize> = (0..n).collect();
        let r = Perm::from_cycles(n, &[&c]).unwrap();
        let s = Perm::new((0..n).map(|i| (n - i) % n).collect()).unwrap();
        closure(&[r, s], 2 * n).unwrap()
    }

    #[test]
    fn trivial_closure() {
        let g = closure(&[Perm::identity(4)], 10).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn closure_overflow() {
        let r = closure(&s3().generators().to_vec(), 5);
        assert!(matches!(r, Err(Error::ClosureOverflow(5))));
    }

    #[test]
    fn closure_rejects_mixed_degree() {
        assert!(closure(&[Perm::identity(3), Perm::identity(4)], 10).is_err());
    }

    #[test]
    fn trivial_orbits() {
        let g = closure(&[Perm::identity(5)], 1).unwrap();
        assert_eq!(orbits(g.generators(), 5), vec![vec![0], vec![1], vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn s3_stabilizer() {
        assert_eq!(stabilizer(&s3(), 0).unwrap().order(), 2);
    }

    #[test]
    fn normalizer_of_whole_group() {
        let g = s3();
        assert_eq!(normalizer(&g, &g).unwrap().order(), 6);
    }

    #[test]
    fn normalizer_rejects_non_subgroup() {
        let g = closure(&[Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()], 3).unwrap();
        let h = closure(&[Perm::from_cycles(3, &[&[0, 1]]).unwrap()], 2).unwrap();
        assert!(matches!(normalizer(&g, &h), Err(Error::NotSubgroup)));
    }

    #[test]
    fn double_coset_trivial() {
        let id = [Perm::identity(3)];
        let g = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let dc = double_coset(&id, &g, &id);
        assert_eq!(dc.into_iter().collect::<Vec<_>>(), vec![g]);
    }

    #[test]
    fn product_set_identity() {
        let g = s3();
        let id = [Perm::identity(3)];
        assert_eq!(product_set(g.elements(), &id).len(), 6);
        assert_eq!(product_set(g.elements(), g.elements()).len(), 6);
    }

    #[test]
    fn primitivity_examples() {
        assert_eq!(is_primitive(&s3()).unwrap(), Primitivity::Primitive);
        assert_eq!(
            is_primitive(&cyclic(4)).unwrap(),
            Primitivity::Imprimitive { blocks: vec![vec![0, 2], vec![1, 3]] }
        );
        let intrans = closure(&[Perm::from_cycles(4, &[&[0, 1]]).unwrap()], 2).unwrap();
        assert!(matches!(is_primitive(&intrans), Err(Error::Intransitive(4))));
    }

    /// Exhaustive oracle: a set partition is a block system iff every
    /// generator maps blocks onto blocks.
    #[test]
    fn primitivity_agrees_with_exhaustive_partitions() {
        fn partitions(n: usize) -> Vec<Vec<usize>> {
            // restricted growth strings
            let mut out = Vec::new();
            let mut a = vec![0usize; n];
            loop {
                out.push(a.clone());
                let mut i = n - 1;
                loop {
                    if i == 0 {
                        return out;
                    }
                    let mx = *a[..i].iter().max().unwrap();
                    if a[i] <= mx {
                        a[i] += 1;
                        for x in a.iter_mut().skip(i + 1) {
                            *x = 0;
                        }
                        break;
                    }
                    i -= 1;
                }
            }
        }
        let groups = [cyclic(4), cyclic(5), cyclic(6), dihedral(4), dihedral(5), dihedral(6), s3()];
        for g in &groups {
            let n = g.degree();
            let nontrivial_system = partitions(n).into_iter().any(|label| {
                let classes = label.iter().max().unwrap() + 1;
                if classes == 1 || classes == n {
                    return false;
                }
                g.generators().iter().all(|p| {
                    (0..n).all(|x| (0..n).all(|y| (label[x] == label[y]) == (label[p.apply(x)] == label[p.apply(y)])))
                })
            });
            let computed = matches!(is_primitive(g).unwrap(), Primitivity::Imprimitive { .. });
            assert_eq!(computed, nontrivial_system, "degree {n}");
        }
    }

    #[test]
    fn frobenius_examples() {
        let g = s3();
        let k = closure(&[Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()], 3).unwrap();
        let h = closure(&[Perm::from_cycles(3, &[&[0, 1]]).unwrap()], 2).unwrap();
        assert!(recognize_frobenius(&g, &k, &h).unwrap());

        // C3 × C2 on 5 points
        let a = Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap();
        let b = Perm::from_cycles(5, &[&[3, 4]]).unwrap();
        let g = closure(&[a.clone(), b.clone()], 6).unwrap();
        let k = closure(&[a], 3).unwrap();
        let h = closure(&[b], 2).unwrap();
        assert!(!recognize_frobenius(&g, &k, &h).unwrap());
        assert!(recognize_frobenius(&g, &k, &k).is_err());
    }

    #[test]
    fn a4_examples() {
        let a4 = closure(
            &[Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap(), Perm::from_cycles(4, &[&[1, 2, 3]]).unwrap()],
            12,
        )
        .unwrap();
        assert!(recognize_a4(&a4));
        assert!(!recognize_a4(&cyclic(12)));
        let d12 = dihedral(6);
        assert_eq!(d12.order(), 12);
        // census oracle: D12 has 7 involutions and 2 elements of order 3
        let census = order_census(&d12);
        assert_eq!(census.get(&2), Some(&7));
        assert_eq!(census.get(&3), Some(&2));
        assert!(!recognize_a4(&d12));
    }

    #[test]
    fn dihedral_recognizers() {
        assert!(recognize_dihedral(&dihedral(9)));
        assert!(!recognize_dihedral(&cyclic(6)));
        // S3 × C3 has order 18 but no element of order 9
        let a = Perm::from_cycles(6, &[&[0, 1, 2]]).unwrap();
        let b = Perm::from_cycles(6, &[&[0, 1]]).unwrap();
        let c = Perm::from_cycles(6, &[&[3, 4, 5]]).unwrap();
        let g = closure(&[a, b, c], 18).unwrap();
        assert_eq!(g.order(), 18);
        assert!(!recognize_dihedral(&g));
    }

    #[test]
    fn from_elements_picks_generators() {
        let g = s3();
        let h = Group::from_elements(g.elements().to_vec()).unwrap();
        assert_eq!(h.elements(), g.elements());
        assert!(h.generators().len() <= 2);
    }
}
