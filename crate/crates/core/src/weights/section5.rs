//! m* rewritten as a sum over pairs (σ, x) with σ a chain Q₀ < … < Q_m of
//! centric subgroups normal in Q_m and x ∈ Q₀, together with the four
//! filtered variants that cancel down to k.

use serde::Serialize;

use super::report::k_of_group_system;
use crate::error::Result;
use crate::fusion::GroupSystem;
use crate::group::{orbits, ConjugationOn};
use crate::modular::{z_count, CocycleData};

/// The five chain-model sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChainModelSums {
    /// all pairs
    pub m_star_via_chains: i64,
    /// Q_m/Q₀ elementary abelian
    pub m_e: i64,
    /// C_{Q_m}(x) ≤ Q₀
    pub m_circ: i64,
    pub m_e_circ: i64,
    /// additionally C_{Q_m}(x)Φ(Q_m) centric
    pub m_e_circ_c: i64,
}

impl ChainModelSums {
    pub fn values(&self) -> [i64; 5] {
        [self.m_star_via_chains, self.m_e, self.m_circ, self.m_e_circ, self.m_e_circ_c]
    }

    pub fn all_equal(&self, k: i64) -> bool {
        self.values().iter().all(|&v| v == k)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainModelReport {
    pub sums: ChainModelSums,
    pub k: i64,
    pub chain_classes: usize,
    /// number of (σ, x) classes kept by each of the five sums
    pub pair_counts: [usize; 5],
    pub pass: bool,
}

/// The five sums for F_S(H), by direct enumeration of chain classes and of
/// N_H(σ)-orbits on Q₀.
pub fn chain_model_sums(f: &GroupSystem, s_cap: usize) -> Result<(ChainModelSums, usize, [usize; 5])> {
    let g = &*f.g;
    let chains = f.centric_normal_chain_reps(s_cap)?;
    let mut sums = ChainModelSums { m_star_via_chains: 0, m_e: 0, m_circ: 0, m_e_circ: 0, m_e_circ_c: 0 };
    let mut counts = [0usize; 5];
    for c in &chains {
        let q0 = c.bottom();
        let qm = c.top();
        let sign = if c.length() % 2 == 0 { 1 } else { -1 };
        let e = {
            let quot = g.quotient(qm, q0)?;
            let whole = quot.group.whole();
            quot.group.is_abelian(&whole) && quot.group.exponent(&whole) <= f.p
        };
        let phi = g.frattini(qm, f.p)?;
        let base = g.product(q0, &c.top_centralizer);
        let action = ConjugationOn::new(g, q0.elems());
        let all: Vec<usize> = (0..q0.order()).collect();
        for o in orbits(&c.normalizer, &action, &all) {
            let x = q0.elems()[o.rep];
            let num = g.product(&g.centralizer_in(&c.normalizer, x), &base);
            let quot = g.quotient(&num, &base)?;
            let z = z_count(&quot.group, &quot.group.whole(), f.p, &CocycleData::Trivial, false)?.value as i64;
            let term = sign * z;
            let cq = g.centralizer_in(qm, x);
            let circ = cq.is_subset_of(q0);
            let cent = circ && e && f.is_centric(&g.product(&cq, &phi));
            let keep = [true, e, circ, e && circ, cent];
            let slots = [
                &mut sums.m_star_via_chains,
                &mut sums.m_e,
                &mut sums.m_circ,
                &mut sums.m_e_circ,
                &mut sums.m_e_circ_c,
            ];
            for (i, slot) in slots.into_iter().enumerate() {
                if keep[i] {
                    *slot += term;
                    counts[i] += 1;
                }
            }
        }
    }
    Ok((sums, chains.len(), counts))
}

/// The five sums compared against k computed from centralizer subsystems.
pub fn chain_model_check(f: &GroupSystem, s_cap: usize) -> Result<ChainModelReport> {
    let (sums, chain_classes, pair_counts) = chain_model_sums(f, s_cap)?;
    let (k, _) = k_of_group_system(f)?;
    Ok(ChainModelReport { sums, k, chain_classes, pair_counts, pass: sums.all_equal(k) })
}
