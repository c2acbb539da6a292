//! Counting invariants of modular group algebras: ℓ(kG), z(k_αG), character
//! degrees and labeled irreducible characters of small p-groups.

mod degrees;
mod irr;

pub use degrees::{character_degrees, working_prime, CharacterDegreeMultiset};
pub use irr::{irr_with_defects, IrrChar, IrrFamily, LabeledIrrSet};

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{vp, Group, Idx, Mat2, Subgroup};

/// ℓ(kH): the number of p-regular conjugacy classes of H.
pub fn ell_count(group: &Group, h: &Subgroup, p: u64) -> usize {
    group
        .classes(h)
        .iter()
        .filter(|c| group.elem_order(c.rep) % p != 0)
        .count()
}

/// A twisted group algebra k_αG presented by a central extension
/// 1 → Z → G̃ → G → 1 with Z cyclic of p′-order and a faithful-or-not
/// character η of Z, given by its index: η(z₀^j) = ζ^{η·j} with ζ = e^{2πi/|Z|}.
pub struct CentralExtension {
    pub ext: Group,
    pub z: Subgroup,
    /// generator z₀ of Z
    pub z_gen: Idx,
    pub eta: u64,
    /// image in G of each element of G̃
    pub proj: Vec<Idx>,
}

pub enum CocycleData<'a> {
    Trivial,
    CentralExtension(&'a CentralExtension),
}

impl CentralExtension {
    /// Validates centrality, p′-order of Z, and that the projection is a
    /// surjective homomorphism onto `base` with kernel Z.
    pub fn new(base: &Group, ext: Group, z: Subgroup, z_gen: Idx, eta: u64, proj: Vec<Idx>, p: u64) -> Result<Self> {
        let bad = |m: &str| Err(Error::Input(format!("central extension: {m}")));
        if z.order() as u64 % p == 0 {
            return bad("Z has order divisible by p");
        }
        if ext.center(&ext.whole()).elems().iter().filter(|x| z.contains(**x)).count() != z.order() {
            return bad("Z is not central");
        }
        if ext.closure(&[z_gen]) != z {
            return bad("z_gen does not generate Z");
        }
        let kernel: Vec<Idx> = (0..ext.order() as Idx)
            .filter(|&x| proj[x as usize] == base.identity())
            .collect();
        if kernel != z.elems() || ext.order() != base.order() * z.order() {
            return bad("projection kernel is not Z");
        }
        for &a in ext.gens() {
            for b in 0..ext.order() as Idx {
                if proj[ext.mul(a, b) as usize] != base.mul(proj[a as usize], proj[b as usize]) {
                    return bad("projection is not a homomorphism");
                }
            }
        }
        Ok(CentralExtension { ext, z, z_gen, eta, proj })
    }

    /// Preimage of a subgroup of the base group.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        let elems = (0..self.ext.order() as Idx)
            .filter(|&x| h.contains(self.proj[x as usize]))
            .collect();
        self.ext.subgroup_from_elems(elems)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, PartialOrd, Ord)]
#[serde(rename_all = "snake_case")]
pub enum ZRule {
    /// O_p(G) ≠ 1 forces z = 0
    PCore,
    /// p ∤ |G|: every simple module is projective
    PPrime,
    /// SL₂(p) ≤ G ≤ GL₂(p): z = |G : SL₂(p)|
    SlIndex,
    /// count of p-defect-zero ordinary characters
    DefectZero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZEval {
    pub value: u64,
    pub rule: ZRule,
}

/// Does H contain SL₂(p) as a matrix group over F_p?
fn contains_sl2(group: &Group, h: &Subgroup, p: u64) -> bool {
    let Some(a) = Mat2::new(p as u32, [1, 1, 0, 1]).ok() else { return false };
    let Some(b) = Mat2::new(p as u32, [1, 0, 1, 1]).ok() else { return false };
    [a, b].iter().all(|m| {
        group
            .index_of(&crate::group::Elem::Mat2(*m))
            .is_some_and(|i| h.contains(i))
    })
}

fn sl2_order(p: u64) -> u64 {
    p * (p * p - 1)
}

/// Evaluates one z rule, or `None` if its hypothesis fails.
pub fn z_rule(
    group: &Group,
    h: &Subgroup,
    p: u64,
    cocycle: &CocycleData,
    sl_tagged: bool,
    rule: ZRule,
) -> Result<Option<u64>> {
    match (rule, cocycle) {
        (ZRule::PCore, CocycleData::Trivial) => {
            Ok((!group.p_core(h, p).is_trivial()).then_some(0))
        }
        (ZRule::PCore, CocycleData::CentralExtension(ce)) => {
            let pre = ce.preimage(h);
            Ok((!ce.ext.p_core(&pre, p).is_trivial()).then_some(0))
        }
        (ZRule::PPrime, _) if h.order() as u64 % p == 0 => Ok(None),
        (ZRule::PPrime, CocycleData::Trivial) => Ok(Some(group.class_count(h) as u64)),
        (ZRule::PPrime, CocycleData::CentralExtension(ce)) => Ok(Some(twisted_class_count(ce, h))),
        (ZRule::SlIndex, CocycleData::Trivial) => {
            if sl_tagged && contains_sl2(group, h, p) {
                Ok(Some(h.order() as u64 / sl2_order(p)))
            } else {
                Ok(None)
            }
        }
        (ZRule::SlIndex, CocycleData::CentralExtension(_)) => Ok(None),
        (ZRule::DefectZero, CocycleData::Trivial) => {
            let d = character_degrees(group, h)?;
            let top = vp(h.order() as u64, p);
            Ok(Some(
                d.degrees
                    .iter()
                    .filter(|(&deg, _)| vp(deg, p) == top)
                    .map(|(_, &m)| m as u64)
                    .sum(),
            ))
        }
        (ZRule::DefectZero, CocycleData::CentralExtension(_)) => Err(Error::UnsupportedTwistedZ(
            "defect-zero counting needs the trivial cocycle".into(),
        )),
    }
}

const CASCADE: [ZRule; 4] = [ZRule::PCore, ZRule::PPrime, ZRule::SlIndex, ZRule::DefectZero];

/// z(k_αH) by the first applicable rule of the cascade.
pub fn z_count(group: &Group, h: &Subgroup, p: u64, cocycle: &CocycleData, sl_tagged: bool) -> Result<ZEval> {
    for rule in CASCADE {
        if let Some(value) = z_rule(group, h, p, cocycle, sl_tagged, rule)? {
            return Ok(ZEval { value, rule });
        }
    }
    unreachable!("defect-zero rule always applies at trivial cocycle")
}

/// Every rule whose hypothesis holds, with its value (for consistency checks).
/// The defect-zero rule is skipped above `degree_cap`.
pub fn z_all_rules(
    group: &Group,
    h: &Subgroup,
    p: u64,
    sl_tagged: bool,
    degree_cap: usize,
) -> Result<Vec<(ZRule, u64)>> {
    let mut out = Vec::new();
    for rule in CASCADE {
        if rule == ZRule::DefectZero && h.order() > degree_cap {
            continue;
        }
        if let Some(v) = z_rule(group, h, p, &CocycleData::Trivial, sl_tagged, rule)? {
            out.push((rule, v));
        }
    }
    Ok(out)
}

/// Number of irreducible characters of the preimage of H lying over η: orbits
/// of Z on the classes of the preimage (C ↦ C·z₀) whose stabilizer lies in ker η.
fn twisted_class_count(ce: &CentralExtension, h: &Subgroup) -> u64 {
    let pre = ce.preimage(h);
    let classes = ce.ext.classes(&pre);
    let mut class_of: HashMap<Idx, usize> = HashMap::new();
    for (i, c) in classes.iter().enumerate() {
        for &x in &c.members {
            class_of.insert(x, i);
        }
    }
    let n = ce.z.order() as u64;
    let mut seen = vec![false; classes.len()];
    let mut count = 0;
    for start in 0..classes.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut cur = start;
        loop {
            seen[cur] = true;
            len += 1;
            cur = class_of[&ce.ext.mul(classes[cur].rep, ce.z_gen)];
            if cur == start {
                break;
            }
        }
        if (ce.eta * len) % n == 0 {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;

    fn z(g: &Group, p: u64) -> ZEval {
        z_count(g, &g.whole(), p, &CocycleData::Trivial, false).unwrap()
    }

    #[test]
    fn ell_counts() {
        let s3 = symmetric(3);
        assert_eq!(ell_count(&s3, &s3.whole(), 3), 2);
        let s4 = symmetric(4);
        assert_eq!(ell_count(&s4, &s4.whole(), 2), 2);
        assert_eq!(ell_count(&s4, &s4.whole(), 5), 5);
    }

    #[test]
    fn z_rules() {
        assert_eq!(z(&symmetric(4), 2), ZEval { value: 0, rule: ZRule::PCore });
        assert_eq!(z(&symmetric(3), 2).value, 1);
        let sl = sl2(3);
        assert_eq!(
            z_count(&sl, &sl.whole(), 3, &CocycleData::Trivial, true).unwrap(),
            ZEval { value: 1, rule: ZRule::SlIndex }
        );
        assert_eq!(z(&sl, 3), ZEval { value: 1, rule: ZRule::DefectZero });
        let wr = mat_group(7, &[[3, 0, 0, 1], [1, 0, 0, 3], [0, 1, 1, 0]]);
        assert_eq!(z(&wr, 7), ZEval { value: 27, rule: ZRule::PPrime });
    }

    #[test]
    fn gl2_3_by_two_rules() {
        let g = gl2(3);
        let all = z_all_rules(&g, &g.whole(), 3, true, 5000).unwrap();
        assert_eq!(all, vec![(ZRule::SlIndex, 2), (ZRule::DefectZero, 2)]);
    }

    #[test]
    fn z_le_ell_le_classes() {
        for (g, p) in [(symmetric(4), 3), (gl2(3), 2), (alternating(5), 5), (sl2(5), 5)] {
            let zv = z(&g, p).value as usize;
            let l = ell_count(&g, &g.whole(), p);
            assert!(zv <= l && l <= g.class_count(&g.whole()));
        }
    }

    fn q8() -> Group {
        mat_group(3, &[[0, -1, 1, 0], [1, 1, 1, -1]])
    }

    fn extension_by_center(ext: Group, z: Subgroup, eta: u64, p: u64) -> (Group, CentralExtension) {
        let quo = ext.quotient(&ext.whole(), &z).unwrap();
        let proj: Vec<Idx> = (0..ext.order() as Idx).map(|x| quo.project(x)).collect();
        let zgen = *z.gens().first().unwrap();
        let base = Group::generate(
            &quo.group.gens().iter().map(|&g| quo.group.elem(g).clone()).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(base.elems(), quo.group.elems());
        let ce = CentralExtension::new(&base, ext, z, zgen, eta, proj, p).unwrap();
        (base, ce)
    }

    #[test]
    fn twisted_quaternion_over_klein_four() {
        // Q₈ → V₄ with Z = {±1}: at p = 3 the nontrivial class has exactly one
        // projective irreducible (the 2-dimensional one).
        let g = q8();
        assert_eq!(g.order(), 8);
        let z = g.center(&g.whole());
        let (base, ce) = extension_by_center(g, z.clone(), 1, 3);
        let tw = CocycleData::CentralExtension(&ce);
        assert_eq!(
            z_count(&base, &base.whole(), 3, &tw, false).unwrap(),
            ZEval { value: 1, rule: ZRule::PPrime }
        );
        assert_eq!(z_count(&base, &base.whole(), 2, &tw, false).unwrap().value, 0);
        let (base0, ce0) = extension_by_center(q8(), z, 0, 3);
        let triv = CocycleData::CentralExtension(&ce0);
        assert_eq!(z_count(&base0, &base0.whole(), 3, &triv, false).unwrap().value, 4);
    }

    #[test]
    fn twisted_needs_defect_zero_is_unsupported() {
        // C₃ × S₃ over S₃ at p = 2: O_2 = 1 and 2 | 6, so only rule 4 would apply.
        let g = perm_group(6, &[&[2, 1, 3, 4, 5, 6], &[2, 3, 1, 4, 5, 6], &[1, 2, 3, 5, 6, 4]]);
        let z = g.center(&g.whole());
        assert_eq!(z.order(), 3);
        let (base, ce) = extension_by_center(g, z, 1, 2);
        assert!(matches!(
            z_count(&base, &base.whole(), 2, &CocycleData::CentralExtension(&ce), false),
            Err(Error::UnsupportedTwistedZ(_))
        ));
    }
}
