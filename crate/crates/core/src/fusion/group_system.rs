use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::{CentricReport, LocalData};
use crate::error::{Error, Result};
use crate::group::{vp, Group, Idx, Subgroup};

/// Default cap on |S| for the chain-model machinery.
pub const DEFAULT_CHAIN_S_CAP: usize = 64;

/// The fusion system F_S(H) of a subgroup H of a materialized group, with S
/// a Sylow p-subgroup of H. Centralizer subsystems reuse the same parent group.
#[derive(Clone, Debug)]
pub struct GroupSystem {
    pub label: String,
    pub g: Arc<Group>,
    pub h: Subgroup,
    pub p: u64,
    pub s: Subgroup,
}

/// An F-conjugacy class of subgroups of S: a representative and every
/// member lying in S.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub rep: Subgroup,
    pub members: Vec<Subgroup>,
}

/// A chain Q₀ < … < Q_m of centric subgroups, each normal in Q_m, with
/// N_H(σ) = ⋂ N_H(Q_i) and C_H(Q_m).
#[derive(Clone, Debug)]
pub struct CentricChain {
    pub terms: Vec<Subgroup>,
    pub normalizer: Subgroup,
    pub top_centralizer: Subgroup,
}

impl CentricChain {
    pub fn bottom(&self) -> &Subgroup {
        &self.terms[0]
    }

    pub fn top(&self) -> &Subgroup {
        self.terms.last().unwrap()
    }

    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }
}

impl GroupSystem {
    pub fn new(label: impl Into<String>, g: Arc<Group>, h: Subgroup, p: u64, s: Subgroup) -> Result<Self> {
        if !s.is_subset_of(&h) || !g.is_p_group(&s, p) {
            return Err(Error::NotSylow(format!("order {} is not a p-subgroup of H", s.order())));
        }
        let full = p.pow(vp(h.order() as u64, p)) as usize;
        if s.order() != full {
            return Err(Error::NotSylow(format!(
                "order {} but the Sylow {p}-subgroups of H have order {full}",
                s.order()
            )));
        }
        Ok(GroupSystem { label: label.into(), g, h, p, s })
    }

    /// F_S(G) with S the deterministic Sylow subgroup of G.
    pub fn from_group(label: impl Into<String>, g: Group, p: u64) -> Result<Self> {
        let h = g.whole();
        let s = g.sylow(&h, p);
        Self::new(label, Arc::new(g), h, p, s)
    }

    /// F-classes of subgroups of S, ordered by representative order then elements.
    pub fn subgroup_classes(&self) -> Result<Vec<SubgroupClass>> {
        let subs = self.g.subgroups_of_p_group(&self.s, self.p)?;
        let mut assigned: HashSet<Vec<Idx>> = HashSet::new();
        let by_elems: HashMap<Vec<Idx>, &Subgroup> = subs.iter().map(|q| (q.elems().to_vec(), q)).collect();
        let mut out = Vec::new();
        for q in &subs {
            if assigned.contains(q.elems()) {
                continue;
            }
            let members: Vec<Subgroup> = self
                .g
                .subgroup_orbit(&self.h, q)
                .into_iter()
                .filter_map(|e| by_elems.get(&e).map(|x| (*x).clone()))
                .collect();
            for m in &members {
                assigned.insert(m.elems().to_vec());
            }
            out.push(SubgroupClass { rep: members[0].clone(), members });
        }
        out.sort_by(|a, b| {
            a.rep
                .order()
                .cmp(&b.rep.order())
                .then_with(|| a.rep.elems().cmp(b.rep.elems()))
        });
        Ok(out)
    }

    fn centric_members(&self, members: &[Subgroup]) -> bool {
        members
            .iter()
            .all(|q| self.g.centralizer_of_subgroup(&self.s, q).is_subset_of(q))
    }

    /// C_S(Q′) ≤ Q′ for every F-conjugate Q′ of Q in S.
    pub fn is_centric(&self, q: &Subgroup) -> bool {
        let members: Vec<Subgroup> = self
            .g
            .subgroup_orbit(&self.h, q)
            .into_iter()
            .filter(|e| e.iter().all(|&x| self.s.contains(x)))
            .map(|e| self.g.subgroup_from_elems(e))
            .collect();
        self.centric_members(&members)
    }

    /// Out_F(Q) = N_H(Q)/Q·C_H(Q), acting on Q by conjugation through coset representatives.
    pub fn local_data(&self, label: impl Into<String>, q: &Subgroup) -> Result<LocalData> {
        let n = self.g.normalizer_in(&self.h, q);
        let qc = self.g.product(q, &self.g.centralizer_of_subgroup(&self.h, q));
        let quot = self.g.quotient(&n, &qc)?;
        let reps: Vec<Idx> = (0..quot.group.order() as Idx).map(|x| quot.rep(x)).collect();
        let out = Arc::new(quot.group);
        let parent = self.g.clone();
        let hook_parent = self.g.clone();
        let aut = Arc::new(move |g: Idx, x: Idx| hook_parent.conj(reps[g as usize], x));
        Ok(LocalData::new(label.into(), parent, q.clone(), out, self.p, false, aut))
    }

    pub fn is_radical(&self, q: &Subgroup) -> Result<bool> {
        Ok(self.local_data("", q)?.is_radical)
    }

    /// Every F-class of centric subgroups with its local data.
    pub fn centric_reports(&self) -> Result<Vec<CentricReport>> {
        let mut out = Vec::new();
        for (i, c) in self.subgroup_classes()?.iter().enumerate() {
            if !self.centric_members(&c.members) {
                continue;
            }
            let local = self.local_data(format!("Q{i}"), &c.rep)?;
            out.push(CentricReport {
                label: local.label.clone(),
                q_order: c.rep.order(),
                is_centric: true,
                is_radical: local.is_radical,
                out_order: local.out.order(),
                local,
            });
        }
        Ok(out)
    }

    pub fn centric_radical_reps(&self) -> Result<Vec<CentricReport>> {
        Ok(self.centric_reports()?.into_iter().filter(|r| r.is_radical).collect())
    }

    /// One element per F-class of elements of S, with |C_S(x)| maximal in its class
    /// (least index among ties), paired with C_S(x).
    pub fn fully_centralized_element_reps(&self) -> Vec<(Idx, Subgroup)> {
        let mut assigned: HashSet<Idx> = HashSet::new();
        let mut out = Vec::new();
        for &x in self.s.elems() {
            if assigned.contains(&x) {
                continue;
            }
            let class = self.h_class(x);
            let in_s: Vec<Idx> = class.into_iter().filter(|&y| self.s.contains(y)).collect();
            assigned.extend(in_s.iter().copied());
            let best = in_s
                .iter()
                .map(|&y| (self.g.centralizer_in(&self.s, y), y))
                .max_by(|a, b| a.0.order().cmp(&b.0.order()).then_with(|| b.1.cmp(&a.1)))
                .unwrap();
            out.push((best.1, best.0));
        }
        out
    }

    fn h_class(&self, x: Idx) -> Vec<Idx> {
        let mut seen: HashSet<Idx> = HashSet::from([x]);
        let mut list = vec![x];
        let mut head = 0;
        while head < list.len() {
            let y = list[head];
            head += 1;
            for &g in self.h.gens() {
                let z = self.g.conj(g, y);
                if seen.insert(z) {
                    list.push(z);
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// Is ⟨x⟩ fully F-centralized?
    pub fn is_fully_centralized(&self, x: Idx) -> bool {
        let own = self.g.centralizer_in(&self.s, x).order();
        self.h_class(x)
            .into_iter()
            .filter(|&y| self.s.contains(y))
            .all(|y| self.g.centralizer_in(&self.s, y).order() <= own)
    }

    /// C_F(x) = F_{C_S(x)}(C_H(x)).
    pub fn centralizer_system(&self, x: Idx) -> Result<GroupSystem> {
        if !self.s.contains(x) || !self.is_fully_centralized(x) {
            return Err(Error::NotFullyCentralized);
        }
        let ch = self.g.centralizer_in(&self.h, x);
        let cs = self.g.centralizer_in(&self.s, x);
        GroupSystem::new(format!("{}/C({x})", self.label), self.g.clone(), ch, self.p, cs)
    }

    /// F-class representatives of chains Q₀ < … < Q_m of centric subgroups of S
    /// with every Q_i normal in Q_m.
    pub fn centric_normal_chain_reps(&self, cap: usize) -> Result<Vec<CentricChain>> {
        if self.s.order() > cap {
            return Err(Error::ChainCap { order: self.s.order(), cap });
        }
        let centric: Vec<Subgroup> = self
            .subgroup_classes()?
            .into_iter()
            .filter(|c| self.centric_members(&c.members))
            .flat_map(|c| c.members)
            .collect();
        let index: HashMap<Vec<Idx>, usize> =
            centric.iter().enumerate().map(|(i, q)| (q.elems().to_vec(), i)).collect();
        let below = |a: usize, b: usize| centric[a].order() < centric[b].order() && centric[a].is_subset_of(&centric[b]);
        let mut chains: Vec<Vec<usize>> = Vec::new();
        for top in 0..centric.len() {
            let inner: Vec<usize> = (0..centric.len())
                .filter(|&i| below(i, top) && self.g.is_normal(&centric[top], &centric[i]))
                .collect();
            let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
            while let Some(c) = stack.pop() {
                let mut full = c.clone();
                full.push(top);
                chains.push(full);
                for &i in &inner {
                    if c.last().map_or(true, |&l| below(l, i)) {
                        let mut d = c.clone();
                        d.push(i);
                        stack.push(d);
                    }
                }
            }
        }
        chains.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut out = Vec::new();
        for c in chains {
            if seen.contains(&c) {
                continue;
            }
            for &g in self.h.elems() {
                let img: Option<Vec<usize>> = c
                    .iter()
                    .map(|&i| index.get(&self.g.conjugate_elems(g, centric[i].elems())).copied())
                    .collect();
                if let Some(img) = img {
                    seen.insert(img);
                }
            }
            let terms: Vec<Subgroup> = c.iter().map(|&i| centric[i].clone()).collect();
            let mut normalizer = self.h.clone();
            for t in &terms {
                normalizer = self.g.normalizer_in(&normalizer, t);
            }
            let top_centralizer = self.g.centralizer_of_subgroup(&self.h, terms.last().unwrap());
            out.push(CentricChain { terms, normalizer, top_centralizer });
        }
        Ok(out)
    }

    /// Checks that every element of each generating coset of Out_F(Q) induces
    /// the same permutation of Q^cl.
    pub fn out_action_well_defined(&self, q: &Subgroup) -> Result<bool> {
        let n = self.g.normalizer_in(&self.h, q);
        let qc = self.g.product(q, &self.g.centralizer_of_subgroup(&self.h, q));
        let quot = self.g.quotient(&n, &qc)?;
        let classes = self.g.classes(q);
        let mut class_of = HashMap::new();
        for (i, c) in classes.iter().enumerate() {
            for &x in &c.members {
                class_of.insert(x, i);
            }
        }
        let perm = |g: Idx| -> Vec<usize> { classes.iter().map(|c| class_of[&self.g.conj(g, c.rep)]).collect() };
        for &gen in quot.group.gens() {
            let expected = perm(quot.rep(gen));
            for &x in n.elems() {
                if quot.project(x) == gen && perm(x) != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;

    fn s4() -> GroupSystem {
        GroupSystem::from_group("S4", symmetric(4), 2).unwrap()
    }

    #[test]
    fn sylow_enforced() {
        let g = Arc::new(symmetric(4));
        let h = g.whole();
        let small = g.closure(&[g.gens()[0]]);
        assert!(GroupSystem::new("x", g.clone(), h.clone(), 3, small).is_err());
    }

    #[test]
    fn s4_centric_radicals() {
        let f = s4();
        let reports = f.centric_reports().unwrap();
        // D₈, the normal V₄, a non-normal V₄ and C₄
        assert_eq!(reports.len(), 4);
        let cr: Vec<(usize, usize)> = reports
            .iter()
            .filter(|r| r.is_radical)
            .map(|r| (r.q_order, r.out_order))
            .collect();
        assert_eq!(cr, vec![(4, 6), (8, 1)]);
        for r in &reports {
            assert!(f.out_action_well_defined(&r.local.q).unwrap());
            let z = f.g.center(&f.s);
            assert!(z.is_subset_of(&r.local.q));
        }
    }

    #[test]
    fn extraspecial_lines_are_centric() {
        let s = extraspecial(3);
        let f = GroupSystem::from_group("3^{1+2}", s, 3).unwrap();
        let classes = f.subgroup_classes().unwrap();
        let centric: Vec<usize> = classes
            .iter()
            .filter(|c| f.is_centric(&c.rep))
            .map(|c| c.rep.order())
            .collect();
        assert_eq!(centric, vec![9, 9, 9, 9, 27]);
        let z = f.g.center(&f.s);
        assert!(!f.is_centric(&z));
        // a p-group: only S is centric radical
        let cr = f.centric_radical_reps().unwrap();
        assert_eq!(cr.len(), 1);
        assert_eq!(cr[0].q_order, 27);
    }

    #[test]
    fn s4_elements_and_centralizers() {
        let f = s4();
        let reps = f.fully_centralized_element_reps();
        let mut orders: Vec<(u64, usize)> = reps.iter().map(|(x, c)| (f.g.elem_order(*x), c.order())).collect();
        orders.sort();
        // 1, transposition, double transposition, 4-cycle
        assert_eq!(orders, vec![(1, 8), (2, 4), (2, 8), (4, 4)]);
        for (x, _) in &reps {
            let c = f.centralizer_system(*x).unwrap();
            assert_eq!(c.s.order(), f.g.centralizer_in(&f.s, *x).order());
        }
        let (dt, _) = reps.iter().find(|(x, c)| f.g.elem_order(*x) == 2 && c.order() == 8).unwrap();
        let c = f.centralizer_system(*dt).unwrap();
        assert_eq!(c.h.order(), 8);
    }

    #[test]
    fn s4_chains() {
        let f = s4();
        let chains = f.centric_normal_chain_reps(DEFAULT_CHAIN_S_CAP).unwrap();
        let singles = chains.iter().filter(|c| c.length() == 0).count();
        assert_eq!(singles, f.centric_reports().unwrap().len());
        for c in &chains {
            assert!(c.terms.iter().all(|t| f.g.is_normal(c.top(), t)));
        }
        assert!(f.centric_normal_chain_reps(4).is_err());
    }
}
