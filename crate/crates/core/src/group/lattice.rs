//! Subgroup enumeration: all p-subgroups, p-subgroup classes, and general
//! subgroup classes for small groups.

use std::collections::{HashMap, HashSet};

use super::{Group, Idx, Subgroup};
use crate::error::{Error, Result};

/// Default order cap for unrestricted subgroup-class enumeration.
pub const DEFAULT_SUBGROUP_CAP: usize = 2000;

/// Extensions ⟨P, x⟩ of index p over P, for x ranging over N_H(P).
fn p_extensions(group: &Group, h: &Subgroup, pg: &Subgroup, p: u64) -> Vec<Subgroup> {
    let n = group.normalizer_in(h, pg);
    let mut covered: HashSet<Idx> = pg.elems().iter().copied().collect();
    let mut out = Vec::new();
    for &x in n.elems() {
        if covered.contains(&x) || !pg.contains(group.pow(x, p)) {
            continue;
        }
        let gens: Vec<Idx> = pg.gens().iter().copied().chain([x]).collect();
        let r = group.closure(&gens);
        covered.extend(r.elems().iter().copied());
        out.push(r);
    }
    out
}

/// Every p-subgroup of H (not up to conjugacy), ordered by (order, elements).
pub fn all_p_subgroups(group: &Group, h: &Subgroup, p: u64) -> Vec<Subgroup> {
    let mut layer = vec![group.trivial()];
    let mut out = layer.clone();
    while !layer.is_empty() {
        let mut next: HashMap<Vec<Idx>, Subgroup> = HashMap::new();
        for pg in &layer {
            for r in p_extensions(group, h, pg, p) {
                next.entry(r.elems().to_vec()).or_insert(r);
            }
        }
        let mut next: Vec<Subgroup> = next.into_values().collect();
        next.sort_by(|a, b| a.elems().cmp(b.elems()));
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// One representative (the canonical conjugate) per H-class of p-subgroups of H.
pub fn p_subgroup_classes(group: &Group, h: &Subgroup, p: u64) -> Vec<Subgroup> {
    let mut layer = vec![group.trivial()];
    let mut out = layer.clone();
    while !layer.is_empty() {
        let mut next: HashMap<Vec<Idx>, ()> = HashMap::new();
        for pg in &layer {
            for r in p_extensions(group, h, pg, p) {
                next.insert(group.canonical_conjugate(h, &r), ());
            }
        }
        let mut keys: Vec<Vec<Idx>> = next.into_keys().collect();
        keys.sort();
        layer = keys.into_iter().map(|e| group.subgroup_from_elems(e)).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

impl Group {
    /// One representative per H-conjugacy class of subgroups satisfying `pred`.
    /// Explores the full subgroup lattice, so |H| must not exceed `cap`.
    pub fn subgroups_up_to_conjugacy(
        &self,
        h: &Subgroup,
        pred: impl Fn(&Group, &Subgroup) -> bool,
        cap: usize,
    ) -> Result<Vec<Subgroup>> {
        if h.order() > cap {
            return Err(Error::SubgroupCap { order: h.order(), cap });
        }
        let mut found: HashMap<Vec<Idx>, ()> = HashMap::new();
        let start = self.trivial();
        found.insert(start.elems().to_vec(), ());
        let mut queue = vec![start];
        let mut all = Vec::new();
        while let Some(k) = queue.pop() {
            for &x in h.elems() {
                if k.contains(x) {
                    continue;
                }
                let gens: Vec<Idx> = k.gens().iter().copied().chain([x]).collect();
                let l = self.closure(&gens);
                let canon = self.canonical_conjugate(h, &l);
                if !found.contains_key(&canon) {
                    found.insert(canon.clone(), ());
                    queue.push(self.subgroup_from_elems(canon));
                }
            }
            all.push(k);
        }
        let mut out: Vec<Subgroup> = all.into_iter().filter(|k| pred(self, k)).collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elems().cmp(b.elems())));
        Ok(out)
    }

    /// All subgroups of a p-group S (not up to conjugacy).
    pub fn subgroups_of_p_group(&self, s: &Subgroup, p: u64) -> Result<Vec<Subgroup>> {
        if !self.is_p_group(s, p) {
            return Err(Error::NotPGroup(format!("order {}", s.order())));
        }
        Ok(all_p_subgroups(self, s, p))
    }
}
