use std::collections::{HashMap, VecDeque};

use super::{vp, Group, Idx};
use crate::error::{Error, Result};

/// A subgroup of a parent [`Group`], stored as the sorted list of parent
/// indices together with a generating set. Equality compares elements only.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elems: Vec<Idx>,
    gens: Vec<Idx>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

/// A conjugacy class: canonical (least) representative and sorted members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub rep: Idx,
    pub members: Vec<Idx>,
}

impl ConjClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl Subgroup {
    pub(crate) fn from_parts(elems: Vec<Idx>, gens: Vec<Idx>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elems, gens }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[Idx] {
        &self.elems
    }

    pub fn gens(&self) -> &[Idx] {
        &self.gens
    }

    pub fn contains(&self, x: Idx) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.elems.iter().all(|&x| other.contains(x))
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }
}

impl Group {
    /// The subgroup generated by `gens`.
    pub fn closure(&self, gens: &[Idx]) -> Subgroup {
        let mut gens: Vec<Idx> = gens.iter().copied().filter(|&g| g != self.identity).collect();
        gens.sort_unstable();
        gens.dedup();
        let mut seen = vec![false; self.order()];
        let mut out = vec![self.identity];
        seen[self.identity as usize] = true;
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        Subgroup::from_parts(out, gens)
    }

    /// Wraps a known-closed sorted element set, choosing generators greedily in
    /// index order.
    pub fn subgroup_from_elems(&self, mut elems: Vec<Idx>) -> Subgroup {
        elems.sort_unstable();
        elems.dedup();
        let mut gens = Vec::new();
        let mut cur = self.trivial();
        for &x in &elems {
            if cur.order() == elems.len() {
                break;
            }
            if !cur.contains(x) {
                gens.push(x);
                cur = self.closure(&gens);
            }
        }
        debug_assert_eq!(cur.elems, elems, "element set is not closed");
        Subgroup::from_parts(elems, gens)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let gens: Vec<Idx> = a.gens.iter().chain(b.gens.iter()).copied().collect();
        self.closure(&gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let (small, big) = if a.order() <= b.order() { (a, b) } else { (b, a) };
        let elems: Vec<Idx> = small.elems.iter().copied().filter(|&x| big.contains(x)).collect();
        self.subgroup_from_elems(elems)
    }

    /// Product set A·B when it is a subgroup (for instance when B normalizes A).
    pub fn product(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.join(a, b)
    }

    /// Sorted element list of g K g⁻¹.
    pub fn conjugate_elems(&self, g: Idx, k: &[Idx]) -> Vec<Idx> {
        let mut out: Vec<Idx> = k.iter().map(|&x| self.conj(g, x)).collect();
        out.sort_unstable();
        out
    }

    pub fn conjugate(&self, g: Idx, k: &Subgroup) -> Subgroup {
        let elems = self.conjugate_elems(g, &k.elems);
        let gens = k.gens.iter().map(|&x| self.conj(g, x)).collect();
        Subgroup::from_parts(elems, gens)
    }

    pub fn centralizer_in(&self, h: &Subgroup, x: Idx) -> Subgroup {
        let elems = h
            .elems
            .iter()
            .copied()
            .filter(|&g| self.mul(g, x) == self.mul(x, g))
            .collect();
        self.subgroup_from_elems(elems)
    }

    /// C_H(K): elements of H commuting with every generator of K.
    pub fn centralizer_of_subgroup(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let elems = h
            .elems
            .iter()
            .copied()
            .filter(|&g| k.gens.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        self.subgroup_from_elems(elems)
    }

    /// N_H(K) for K a subgroup of the parent.
    pub fn normalizer_in(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let elems = h
            .elems
            .iter()
            .copied()
            .filter(|&g| k.gens.iter().all(|&x| k.contains(self.conj(g, x))))
            .collect();
        self.subgroup_from_elems(elems)
    }

    pub fn center(&self, h: &Subgroup) -> Subgroup {
        self.centralizer_of_subgroup(h, h)
    }

    /// Is K normalized by every generator of H?
    pub fn is_normalized_by(&self, h: &Subgroup, k: &Subgroup) -> bool {
        h.gens
            .iter()
            .all(|&g| k.gens.iter().all(|&x| k.contains(self.conj(g, x))))
    }

    pub fn is_normal(&self, h: &Subgroup, k: &Subgroup) -> bool {
        k.is_subset_of(h) && self.is_normalized_by(h, k)
    }

    pub fn is_abelian(&self, h: &Subgroup) -> bool {
        h.gens
            .iter()
            .all(|&a| h.gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_p_group(&self, h: &Subgroup, p: u64) -> bool {
        let n = h.order() as u64;
        n / p.pow(vp(n, p)) == 1
    }

    pub fn exponent(&self, h: &Subgroup) -> u64 {
        h.elems
            .iter()
            .fold(1u64, |acc, &x| lcm(acc, self.elem_order(x)))
    }

    /// Normal closure of a set of elements inside H.
    pub fn normal_closure(&self, h: &Subgroup, xs: &[Idx]) -> Subgroup {
        let mut k = self.closure(xs);
        loop {
            let extra: Vec<Idx> = h
                .gens
                .iter()
                .flat_map(|&g| k.gens.iter().map(move |&x| (g, x)))
                .map(|(g, x)| self.conj(g, x))
                .filter(|y| !k.contains(*y))
                .collect();
            if extra.is_empty() {
                return k;
            }
            let gens: Vec<Idx> = k.gens.iter().copied().chain(extra).collect();
            k = self.closure(&gens);
        }
    }

    pub fn derived(&self, h: &Subgroup) -> Subgroup {
        let comms: Vec<Idx> = h
            .gens
            .iter()
            .flat_map(|&a| h.gens.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.normal_closure(h, &comms)
    }

    /// Φ(Q) = [Q,Q]·Q^p for a p-group Q.
    pub fn frattini(&self, q: &Subgroup, p: u64) -> Result<Subgroup> {
        if !self.is_p_group(q, p) {
            return Err(Error::NotPGroup(format!("order {}", q.order())));
        }
        let d = self.derived(q);
        let gens: Vec<Idx> = d
            .gens
            .iter()
            .copied()
            .chain(q.elems.iter().map(|&x| self.pow(x, p)))
            .collect();
        Ok(self.closure(&gens))
    }

    /// Conjugacy classes of H, sorted by representative.
    pub fn classes(&self, h: &Subgroup) -> Vec<ConjClass> {
        let mut class_of: HashMap<Idx, usize> = HashMap::with_capacity(h.order());
        let mut out = Vec::new();
        for &x in &h.elems {
            if class_of.contains_key(&x) {
                continue;
            }
            let id = out.len();
            let mut members = vec![x];
            class_of.insert(x, id);
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for &g in &h.gens {
                    let z = self.conj(g, y);
                    if let std::collections::hash_map::Entry::Vacant(e) = class_of.entry(z) {
                        e.insert(id);
                        members.push(z);
                        queue.push_back(z);
                    }
                }
            }
            members.sort_unstable();
            out.push(ConjClass { rep: x, members });
        }
        out
    }

    pub fn class_count(&self, h: &Subgroup) -> usize {
        self.classes(h).len()
    }

    /// A Sylow p-subgroup of H, grown deterministically from the trivial group.
    pub fn sylow(&self, h: &Subgroup, p: u64) -> Subgroup {
        let target = p.pow(vp(h.order() as u64, p)) as usize;
        let mut s = self.trivial();
        while s.order() < target {
            let n = self.normalizer_in(h, &s);
            let x = n
                .elems
                .iter()
                .copied()
                .find(|&x| !s.contains(x) && s.contains(self.pow(x, p)))
                .expect("Cauchy element in N(P)/P");
            let gens: Vec<Idx> = s.gens.iter().copied().chain([x]).collect();
            s = self.closure(&gens);
        }
        s
    }

    /// The H-conjugacy class of subgroup K (K need not lie in H), as distinct
    /// sorted element lists in canonical order.
    pub fn subgroup_orbit(&self, h: &Subgroup, k: &Subgroup) -> Vec<Vec<Idx>> {
        let mut seen: HashMap<Vec<Idx>, ()> = HashMap::new();
        let mut list = vec![k.elems.clone()];
        seen.insert(k.elems.clone(), ());
        let mut head = 0;
        while head < list.len() {
            let cur = list[head].clone();
            head += 1;
            for &g in &h.gens {
                let img = self.conjugate_elems(g, &cur);
                if !seen.contains_key(&img) {
                    seen.insert(img.clone(), ());
                    list.push(img);
                }
            }
        }
        list.sort();
        list
    }

    /// O_p(H): intersection of all Sylow p-subgroups.
    pub fn p_core(&self, h: &Subgroup, p: u64) -> Subgroup {
        let s = self.sylow(h, p);
        if s.is_trivial() {
            return s;
        }
        let orbit = self.subgroup_orbit(h, &s);
        let mut core = s.elems.clone();
        for other in &orbit {
            core.retain(|x| other.binary_search(x).is_ok());
        }
        self.subgroup_from_elems(core)
    }

    /// Canonical form of K under H-conjugation: the least element list in its orbit.
    pub fn canonical_conjugate(&self, h: &Subgroup, k: &Subgroup) -> Vec<Idx> {
        self.subgroup_orbit(h, k).into_iter().next().unwrap()
    }

    /// Left cosets x·N of N in H, each as a sorted list; ordered by least element.
    pub fn left_cosets(&self, h: &Subgroup, n: &Subgroup) -> Vec<Vec<Idx>> {
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for &x in &h.elems {
            if seen.contains_key(&x) {
                continue;
            }
            let mut c: Vec<Idx> = n.elems.iter().map(|&y| self.mul(x, y)).collect();
            c.sort_unstable();
            for &y in &c {
                seen.insert(y, ());
            }
            out.push(c);
        }
        out
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
