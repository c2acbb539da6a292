//! Chains 1 = X₀ < X₁ < … < X_m of p-subgroups of an ambient group, with the
//! conjugation action used for orbit sums.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{all_p_subgroups, orbits, Action, Group, Idx, Subgroup};

/// Default cap on the number of chains in one universe.
pub const DEFAULT_CHAIN_CAP: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainKind {
    /// every strictly increasing chain of p-subgroups
    All,
    /// chains whose terms are all normal in the top term
    Normal,
    /// normal chains of elementary abelian subgroups
    ElementaryAbelian,
}

/// All chains of a given kind inside H, indexed for the conjugation action of H.
pub struct ChainUniverse<'a> {
    group: &'a Group,
    pub kind: ChainKind,
    pub subgroups: Vec<Subgroup>,
    sub_index: HashMap<Vec<Idx>, usize>,
    /// subgroup ids of X₁, …, X_m (X₀ = 1 is implicit)
    chains: Vec<Vec<usize>>,
    chain_index: HashMap<Vec<usize>, usize>,
}

/// One H-orbit of chains with its stabilizer I(σ) = ⋂ N_H(X_i).
#[derive(Clone, Debug)]
pub struct ChainOrbit {
    pub rep: usize,
    pub terms: Vec<Subgroup>,
    pub orbit_len: usize,
    pub stabilizer: Subgroup,
}

impl ChainOrbit {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sign(&self) -> i64 {
        if self.terms.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl<'a> ChainUniverse<'a> {
    pub fn new(group: &'a Group, h: &Subgroup, p: u64, kind: ChainKind, cap: usize) -> Result<Self> {
        let mut subgroups = all_p_subgroups(group, h, p);
        subgroups.remove(0);
        if kind == ChainKind::ElementaryAbelian {
            subgroups.retain(|x| group.is_abelian(x) && group.exponent(x) == p);
        }
        let sub_index: HashMap<Vec<Idx>, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, x)| (x.elems().to_vec(), i))
            .collect();
        let n = subgroups.len();
        let below = |a: usize, b: usize| {
            subgroups[a].order() < subgroups[b].order() && subgroups[a].is_subset_of(&subgroups[b])
        };
        let mut chains: Vec<Vec<usize>> = vec![Vec::new()];
        let overflow = |len: usize| -> Result<()> {
            if len > cap {
                Err(Error::ChainCap { order: h.order(), cap })
            } else {
                Ok(())
            }
        };
        match kind {
            ChainKind::All => {
                let mut frontier: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
                while !frontier.is_empty() {
                    chains.extend(frontier.iter().cloned());
                    overflow(chains.len())?;
                    let mut next = Vec::new();
                    for c in &frontier {
                        let last = *c.last().unwrap();
                        for j in 0..n {
                            if below(last, j) {
                                let mut d = c.clone();
                                d.push(j);
                                next.push(d);
                            }
                        }
                    }
                    frontier = next;
                }
            }
            ChainKind::Normal | ChainKind::ElementaryAbelian => {
                for top in 0..n {
                    let inner: Vec<usize> = (0..n)
                        .filter(|&i| below(i, top) && group.is_normal(&subgroups[top], &subgroups[i]))
                        .collect();
                    // increasing sequences among the normal subgroups of `top`
                    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
                    while let Some(c) = stack.pop() {
                        let mut full = c.clone();
                        full.push(top);
                        chains.push(full);
                        overflow(chains.len())?;
                        for &i in &inner {
                            if c.last().map_or(true, |&l| below(l, i)) {
                                let mut d = c.clone();
                                d.push(i);
                                stack.push(d);
                            }
                        }
                    }
                }
            }
        }
        chains.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let chain_index = chains.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        Ok(ChainUniverse { group, kind, subgroups, sub_index, chains, chain_index })
    }

    pub fn count(&self) -> usize {
        self.chains.len()
    }

    pub fn length(&self, c: usize) -> usize {
        self.chains[c].len()
    }

    pub fn sign(&self, c: usize) -> i64 {
        if self.chains[c].len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn terms(&self, c: usize) -> Vec<Subgroup> {
        self.chains[c].iter().map(|&i| self.subgroups[i].clone()).collect()
    }

    /// I(σ) inside H: the intersection of the normalizers of the terms.
    pub fn stabilizer(&self, h: &Subgroup, c: usize) -> Subgroup {
        let mut st = h.clone();
        for &i in &self.chains[c] {
            st = self.group.normalizer_in(&st, &self.subgroups[i]);
        }
        st
    }

    /// H-orbits on the chains, each with I(σ) of its representative.
    pub fn orbits(&self, h: &Subgroup) -> Vec<ChainOrbit> {
        let all: Vec<usize> = (0..self.count()).collect();
        orbits(h, self, &all)
            .into_iter()
            .map(|o| {
                let stabilizer = self.stabilizer(h, o.rep);
                debug_assert_eq!(o.members.len() * stabilizer.order(), h.order());
                ChainOrbit {
                    rep: o.rep,
                    terms: self.terms(o.rep),
                    orbit_len: o.members.len(),
                    stabilizer,
                }
            })
            .collect()
    }
}

impl Action for ChainUniverse<'_> {
    fn degree(&self) -> usize {
        self.chains.len()
    }

    fn act(&self, g: Idx, c: usize) -> usize {
        let img: Vec<usize> = self.chains[c]
            .iter()
            .map(|&i| self.sub_index[&self.group.conjugate_elems(g, self.subgroups[i].elems())])
            .collect();
        self.chain_index[&img]
    }
}

/// Normal chains of p-subgroups of H up to H-conjugacy, with I(σ).
pub fn normal_chains(group: &Group, h: &Subgroup, p: u64, elementary_abelian: bool) -> Result<Vec<ChainOrbit>> {
    let kind = if elementary_abelian {
        ChainKind::ElementaryAbelian
    } else {
        ChainKind::Normal
    };
    Ok(ChainUniverse::new(group, h, p, kind, DEFAULT_CHAIN_CAP)?.orbits(h))
}

/// The three orbit sums Σ (−1)^|σ| f(N_H(σ)) over all, normal and
/// elementary abelian chains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReduction {
    pub all: i64,
    pub normal: i64,
    pub elementary_abelian: i64,
    pub p_core_trivial: bool,
    pub pass: bool,
}

pub fn chain_reduction_crosscheck(
    group: &Group,
    h: &Subgroup,
    p: u64,
    f: impl Fn(&Group, &Subgroup) -> i64,
) -> Result<ChainReduction> {
    let sum = |kind| -> Result<i64> {
        let u = ChainUniverse::new(group, h, p, kind, DEFAULT_CHAIN_CAP)?;
        Ok(u.orbits(h).iter().map(|o| o.sign() * f(group, &o.stabilizer)).sum())
    };
    let all = sum(ChainKind::All)?;
    let normal = sum(ChainKind::Normal)?;
    let elementary_abelian = sum(ChainKind::ElementaryAbelian)?;
    let p_core_trivial = group.p_core(h, p).is_trivial();
    let pass = all == normal && normal == elementary_abelian && (p_core_trivial || normal == 0);
    Ok(ChainReduction { all, normal, elementary_abelian, p_core_trivial, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;

    #[test]
    fn trivial_and_p_prime() {
        let g = symmetric(3);
        let orbits = normal_chains(&g, &g.trivial(), 3, false).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].len(), 0);
        let c = perm_group(5, &[&[2, 3, 4, 5, 1]]);
        let orbits = normal_chains(&c, &c.whole(), 2, false).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].stabilizer.order(), 5);
    }

    #[test]
    fn gl2_normal_chains() {
        let g = gl2(7);
        let orbits = normal_chains(&g, &g.whole(), 7, false).unwrap();
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[1].len(), 1);
        assert_eq!(orbits[1].stabilizer.order(), 7 * 36);
        assert_eq!(orbits[1].orbit_len, 8);
    }

    #[test]
    fn s4_chain_counts() {
        // 2-subgroups of S₄: 1, 9 of order 2, 7 of order 4, 3 of order 8.
        let g = symmetric(4);
        let u = ChainUniverse::new(&g, &g.whole(), 2, ChainKind::All, DEFAULT_CHAIN_CAP).unwrap();
        assert_eq!(u.subgroups.len(), 19);
        let n = ChainUniverse::new(&g, &g.whole(), 2, ChainKind::Normal, DEFAULT_CHAIN_CAP).unwrap();
        assert!(n.count() < u.count());
        for c in 0..n.count() {
            let t = n.terms(c);
            let top = t.last().cloned().unwrap_or_else(|| g.trivial());
            assert!(t.iter().all(|x| g.is_normal(&top, x)));
        }
    }

    #[test]
    fn reduction_sums_agree() {
        let f = |g: &Group, h: &Subgroup| g.class_count(h) as i64;
        for (g, p) in [(symmetric(4), 2), (gl2(3), 3), (gl2(3), 2), (symmetric(4), 3)] {
            let r = chain_reduction_crosscheck(&g, &g.whole(), p, f).unwrap();
            assert!(r.pass, "{r:?}");
        }
        let d8 = dihedral8();
        let r = chain_reduction_crosscheck(&d8, &d8.whole(), 2, f).unwrap();
        assert!(!r.p_core_trivial);
        assert_eq!(r.normal, 0);
        assert!(r.pass);
    }
}
