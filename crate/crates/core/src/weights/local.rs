//! Per-subgroup sums w*_Q, w_Q and w_Q(d), each evaluated in three orders.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::chains::{ChainKind, ChainUniverse, DEFAULT_CHAIN_CAP};
use crate::error::{Error, Result};
use crate::fusion::LocalData;
use crate::group::{orbits, orbits_with_stabilizers, stabilizer, vp, Action, Idx, Subgroup};
use crate::modular::{z_count, CocycleData, ZRule};

/// One z evaluation and the rule that produced it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ZRecord {
    pub context: String,
    pub subgroup_order: usize,
    pub value: u64,
    pub rule: ZRule,
}

/// Memoized z(k·H) for subgroups H of one Out_F(Q), at the trivial cocycle.
pub struct ZOracle<'a> {
    local: &'a LocalData,
    cache: RefCell<HashMap<Vec<Idx>, u64>>,
    records: RefCell<Vec<ZRecord>>,
}

impl<'a> ZOracle<'a> {
    pub fn new(local: &'a LocalData) -> Self {
        ZOracle { local, cache: RefCell::default(), records: RefCell::default() }
    }

    pub fn z(&self, h: &Subgroup) -> Result<u64> {
        if let Some(&v) = self.cache.borrow().get(h.elems()) {
            return Ok(v);
        }
        let tagged = self.local.sl_tagged && h.order() == self.local.out.order();
        let e = z_count(&self.local.out, h, self.local.p, &CocycleData::Trivial, tagged)?;
        self.cache.borrow_mut().insert(h.elems().to_vec(), e.value);
        self.records.borrow_mut().push(ZRecord {
            context: self.local.label.clone(),
            subgroup_order: h.order(),
            value: e.value,
            rule: e.rule,
        });
        Ok(e.value)
    }

    pub fn into_records(self) -> Vec<ZRecord> {
        self.records.into_inner()
    }
}

/// An alternating sum evaluated in the three orders: chain orbits then point
/// orbits, point orbits then chain orbits, and orbits on pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrderedSums {
    pub chain_first: i64,
    pub point_first: i64,
    pub pairs: i64,
}

impl OrderedSums {
    pub fn agree(&self) -> bool {
        self.chain_first == self.point_first && self.point_first == self.pairs
    }

    pub fn value(&self) -> i64 {
        self.chain_first
    }
}

struct PairAction<'a, A: Action + ?Sized> {
    chains: &'a ChainUniverse<'a>,
    points: &'a A,
}

impl<A: Action + ?Sized> Action for PairAction<'_, A> {
    fn degree(&self) -> usize {
        self.chains.count() * self.points.degree()
    }

    fn act(&self, g: Idx, x: usize) -> usize {
        let n = self.points.degree();
        self.chains.act(g, x / n) * n + self.points.act(g, x % n)
    }
}

/// Σ (−1)^|σ| z(I(σ, μ)) over Out-orbits of pairs (σ, μ), μ ranging over the
/// invariant subset `points`.
pub fn orbit_sum<A: Action + ?Sized>(
    local: &LocalData,
    z: &ZOracle,
    chains: &ChainUniverse,
    action: &A,
    points: &[usize],
) -> Result<OrderedSums> {
    let out = &*local.out;
    let whole = out.whole();
    let chain_orbits = chains.orbits(&whole);

    let mut chain_first = 0i64;
    for o in &chain_orbits {
        for (_, st) in orbits_with_stabilizers(out, &o.stabilizer, action, points) {
            chain_first += o.sign() * z.z(&st)? as i64;
        }
    }

    let mut point_first = 0i64;
    let all_chains: Vec<usize> = (0..chains.count()).collect();
    for (_, imu) in orbits_with_stabilizers(out, &whole, action, points) {
        for c in orbits(&imu, chains, &all_chains) {
            let st = chains.stabilizer(&imu, c.rep);
            point_first += chains.sign(c.rep) * z.z(&st)? as i64;
        }
    }

    let pair_action = PairAction { chains, points: action };
    let n = action.degree();
    let pair_points: Vec<usize> = all_chains
        .iter()
        .flat_map(|&c| points.iter().map(move |&m| c * n + m))
        .collect();
    let mut pairs = 0i64;
    for o in orbits(&whole, &pair_action, &pair_points) {
        let st = stabilizer(out, &whole, &pair_action, o.rep);
        pairs += chains.sign(o.rep / n) * z.z(&st)? as i64;
    }
    Ok(OrderedSums { chain_first, point_first, pairs })
}

/// Everything computed for one centric subgroup Q.
#[derive(Clone, Debug, Serialize)]
pub struct LocalWeights {
    pub label: String,
    pub q_order: usize,
    pub out_order: usize,
    pub is_radical: bool,
    /// z(k Out_F(Q)), the summand of w
    pub z_out: u64,
    pub w_star: i64,
    /// w*_Q recomputed over elementary abelian chains only
    pub w_star_elementary: i64,
    /// `None` when Irr(Q) is outside the supported families
    pub w: Option<i64>,
    pub w_by_defect: Option<BTreeMap<u32, i64>>,
    /// all three summation orders agreed for every sum above
    pub reindex_agree: bool,
    pub sums: BTreeMap<String, OrderedSums>,
}

/// w*_Q, w_Q and w_Q(d) for one local datum.
pub fn local_weights(local: &LocalData) -> Result<(LocalWeights, Vec<ZRecord>)> {
    let oracle = ZOracle::new(local);
    let out = &*local.out;
    let z_out = oracle.z(&out.whole())?;
    let normal = ChainUniverse::new(out, &out.whole(), local.p, ChainKind::Normal, DEFAULT_CHAIN_CAP)?;
    let elem = ChainUniverse::new(out, &out.whole(), local.p, ChainKind::ElementaryAbelian, DEFAULT_CHAIN_CAP)?;

    let mut sums = BTreeMap::new();
    let classes = local.class_action();
    let all_classes: Vec<usize> = (0..classes.degree()).collect();
    let star = orbit_sum(local, &oracle, &normal, &classes, &all_classes)?;
    sums.insert("w_star".to_string(), star);
    let star_e = orbit_sum(local, &oracle, &elem, &classes, &all_classes)?;
    sums.insert("w_star_elementary".to_string(), star_e);

    let (w, w_by_defect) = match local.irr_action() {
        Ok(irr) => {
            let mut by_d = BTreeMap::new();
            for d in 0..=vp(local.q.order() as u64, local.p) {
                let pts = irr.irr.with_defect(d);
                let s = if pts.is_empty() {
                    OrderedSums { chain_first: 0, point_first: 0, pairs: 0 }
                } else {
                    orbit_sum(local, &oracle, &normal, &irr, &pts)?
                };
                by_d.insert(d, s.value());
                sums.insert(format!("w_d{d}"), s);
            }
            (Some(by_d.values().sum()), Some(by_d))
        }
        Err(Error::UnsupportedIrr(_)) => (None, None),
        Err(e) => return Err(e),
    };
    let reindex_agree = sums.values().all(|s| s.agree());
    let lw = LocalWeights {
        label: local.label.clone(),
        q_order: local.q.order(),
        out_order: out.order(),
        is_radical: local.is_radical,
        z_out,
        w_star: star.value(),
        w_star_elementary: star_e.value(),
        w,
        w_by_defect,
        reindex_agree,
        sums,
    };
    Ok((lw, oracle.into_records()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::GroupSystem;
    use crate::group::named::*;

    #[test]
    fn s4_local_weights() {
        let f = GroupSystem::from_group("S4", symmetric(4), 2).unwrap();
        let mut total_star = 0;
        for r in f.centric_reports().unwrap() {
            let (lw, recs) = local_weights(&r.local).unwrap();
            assert!(lw.reindex_agree, "{lw:?}");
            assert_eq!(lw.w_star, lw.w_star_elementary);
            assert!(!recs.is_empty());
            if !r.is_radical {
                assert_eq!(lw.w_star, 0);
                assert_eq!(lw.z_out, 0);
                if let Some(w) = lw.w {
                    assert_eq!(w, 0);
                }
            }
            total_star += lw.w_star;
        }
        // k(S₄) at p = 2 is the number of ordinary characters of the principal block, 5
        assert_eq!(total_star, 5);
    }
}
