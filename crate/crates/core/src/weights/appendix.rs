//! For Q a normal p-subgroup of G: Σ over G-orbits of classes [x] of Q of
//! ℓ(k C_G([x])) equals Σ over G-orbits of μ ∈ Irr(Q) of ℓ(k C_G(μ)).

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{orbits_with_stabilizers, Action, Group, Idx, Subgroup};
use crate::modular::{ell_count, irr_with_defects, LabeledIrrSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixIdentity {
    pub class_side: u64,
    pub character_side: u64,
    pub class_orbits: usize,
    pub character_orbits: usize,
    pub pass: bool,
}

struct ClassesOf<'a> {
    group: &'a Group,
    reps: Vec<Idx>,
    class_of: HashMap<Idx, usize>,
}

impl Action for ClassesOf<'_> {
    fn degree(&self) -> usize {
        self.reps.len()
    }

    fn act(&self, g: Idx, c: usize) -> usize {
        self.class_of[&self.group.conj(g, self.reps[c])]
    }
}

struct CharactersOf<'a> {
    group: &'a Group,
    irr: &'a LabeledIrrSet,
}

impl Action for CharactersOf<'_> {
    fn degree(&self) -> usize {
        self.irr.len()
    }

    fn act(&self, g: Idx, mu: usize) -> usize {
        let gi = self.group.inv(g);
        self.irr.act(|t| self.group.conj(gi, t), mu)
    }
}

/// Both sides of the identity for Q ⊴ H.
pub fn appendix_identity_check(group: &Group, h: &Subgroup, q: &Subgroup, p: u64) -> Result<AppendixIdentity> {
    if !q.is_subset_of(h) || !group.is_normal(h, q) {
        return Err(Error::NotNormal(format!("Q of order {} in H of order {}", q.order(), h.order())));
    }
    let irr = irr_with_defects(group, q, p)?;

    let classes = group.classes(q);
    let mut class_of = HashMap::new();
    for (i, c) in classes.iter().enumerate() {
        for &x in &c.members {
            class_of.insert(x, i);
        }
    }
    let on_classes = ClassesOf { group, reps: classes.iter().map(|c| c.rep).collect(), class_of };
    let pts: Vec<usize> = (0..on_classes.degree()).collect();
    let class_orbits = orbits_with_stabilizers(group, h, &on_classes, &pts);
    let class_side = class_orbits.iter().map(|(_, st)| ell_count(group, st, p) as u64).sum();

    let on_chars = CharactersOf { group, irr: &irr };
    let pts: Vec<usize> = (0..irr.len()).collect();
    let char_orbits = orbits_with_stabilizers(group, h, &on_chars, &pts);
    let character_side = char_orbits.iter().map(|(_, st)| ell_count(group, st, p) as u64).sum();

    Ok(AppendixIdentity {
        class_side,
        character_side,
        class_orbits: class_orbits.len(),
        character_orbits: char_orbits.len(),
        pass: class_side == character_side,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;

    #[test]
    fn trivial_q() {
        let g = symmetric(4);
        let r = appendix_identity_check(&g, &g.whole(), &g.trivial(), 2).unwrap();
        // ℓ(kS₄) at p = 2 is 2
        assert_eq!((r.class_side, r.character_side), (2, 2));
    }

    #[test]
    fn s4_v4() {
        let g = symmetric(4);
        let v4 = g.p_core(&g.whole(), 2);
        assert_eq!(v4.order(), 4);
        let r = appendix_identity_check(&g, &g.whole(), &v4, 2).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.class_orbits, 2);
    }

    #[test]
    fn not_normal_rejected() {
        let g = symmetric(4);
        let t = g.closure(&[g.gens()[0]]);
        if !g.is_normal(&g.whole(), &t) {
            assert!(appendix_identity_check(&g, &g.whole(), &t, 2).is_err());
        }
    }
}
