//! Labeled irreducible characters of abelian p-groups and of p^{1+2}_+ (p odd),
//! with the action μ ↦ μ∘φ⁻¹ of automorphisms.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{vp, Backing, Elem, Group, Heis, Idx, Subgroup};

/// Value of an irreducible character: `None` for 0, otherwise `degree·ε^k`
/// with ε a fixed primitive root of unity of order `exponent`.
type Val = Option<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrrFamily {
    Abelian,
    Extraspecial,
}

#[derive(Clone, Debug)]
pub struct IrrChar {
    pub label: String,
    pub degree: u64,
    pub defect: u32,
}

#[derive(Clone, Debug)]
pub struct LabeledIrrSet {
    pub family: IrrFamily,
    pub chars: Vec<IrrChar>,
    /// elements whose values separate the characters
    test_points: Vec<Idx>,
    /// values[char][position in Q]
    values: Vec<Vec<Val>>,
    q_elems: Vec<Idx>,
    by_signature: HashMap<(u64, Vec<Val>), usize>,
}

impl LabeledIrrSet {
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    fn value(&self, mu: usize, x: Idx) -> Val {
        let pos = self.q_elems.binary_search(&x).expect("element of Q");
        self.values[mu][pos]
    }

    /// Index of μ∘φ⁻¹, where `phi_inv` maps Q's elements (parent indices) to
    /// their images under φ⁻¹.
    pub fn act(&self, phi_inv: impl Fn(Idx) -> Idx, mu: usize) -> usize {
        let sig: Vec<Val> = self
            .test_points
            .iter()
            .map(|&t| self.value(mu, phi_inv(t)))
            .collect();
        self.by_signature[&(self.chars[mu].degree, sig)]
    }

    pub fn with_defect(&self, d: u32) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.chars[i].defect == d).collect()
    }
}

/// Complete labeled Irr(Q) for Q abelian or Q ≅ p^{1+2}_+ with p odd.
pub fn irr_with_defects(group: &Group, q: &Subgroup, p: u64) -> Result<LabeledIrrSet> {
    if !group.is_p_group(q, p) {
        return Err(Error::NotPGroup(format!("order {}", q.order())));
    }
    if group.is_abelian(q) {
        return Ok(abelian_irr(group, q, p));
    }
    let n = q.order() as u64;
    if p == 2 || n != p * p * p || group.exponent(q) != p {
        return Err(Error::UnsupportedIrr(format!(
            "nonabelian group of order {n} is not p^(1+2)_+ with p odd"
        )));
    }
    Ok(extraspecial_irr(group, q, p))
}

fn finish(
    family: IrrFamily,
    chars: Vec<IrrChar>,
    test_points: Vec<Idx>,
    values: Vec<Vec<Val>>,
    q: &Subgroup,
) -> LabeledIrrSet {
    let q_elems = q.elems().to_vec();
    let mut set = LabeledIrrSet {
        family,
        chars,
        test_points,
        values,
        q_elems,
        by_signature: HashMap::new(),
    };
    for mu in 0..set.len() {
        let sig: Vec<Val> = set.test_points.iter().map(|&t| set.value(mu, t)).collect();
        let prev = set.by_signature.insert((set.chars[mu].degree, sig), mu);
        assert!(prev.is_none(), "test points do not separate characters");
    }
    set
}

fn abelian_irr(group: &Group, q: &Subgroup, p: u64) -> LabeledIrrSet {
    let e = group.exponent(q) as u32;
    let pos = |x: Idx| q.elems().binary_search(&x).unwrap();
    let n = q.order();
    let mut members = vec![group.identity()];
    let mut values: Vec<Vec<Val>> = vec![{
        let mut v = vec![None; n];
        v[pos(group.identity())] = Some(0);
        v
    }];
    let mut labels: Vec<Vec<u32>> = vec![Vec::new()];
    let mut used_gens = Vec::new();
    for &g in q.gens() {
        let in_h = |x: Idx, vals: &Vec<Val>| vals[pos(x)].is_some() || x == group.identity();
        if in_h(g, &values[0]) {
            continue;
        }
        let mut m = 1u32;
        let mut gm = g;
        while !in_h(gm, &values[0]) {
            gm = group.mul(gm, g);
            m += 1;
        }
        let mut new_members = members.clone();
        let mut gi = group.identity();
        let mut powers = Vec::new();
        for i in 1..m {
            gi = group.mul(gi, g);
            powers.push((i, gi));
            for &h in &members {
                new_members.push(group.mul(h, gi));
            }
        }
        let mut new_values = Vec::new();
        let mut new_labels = Vec::new();
        for (vals, lab) in values.iter().zip(&labels) {
            let a = vals[pos(gm)].unwrap();
            for k in 0..m {
                let v = (a / m + k * (e / m)) % e;
                let mut nv = vals.clone();
                for &(i, gi) in &powers {
                    for &h in &members {
                        nv[pos(group.mul(h, gi))] = Some((vals[pos(h)].unwrap() + i * v) % e);
                    }
                }
                new_values.push(nv);
                let mut nl = lab.clone();
                nl.push(v);
                new_labels.push(nl);
            }
        }
        members = new_members;
        values = new_values;
        labels = new_labels;
        used_gens.push(g);
    }
    let d = vp(q.order() as u64, p);
    let chars = labels
        .iter()
        .map(|l| IrrChar {
            label: format!("lambda{l:?}"),
            degree: 1,
            defect: d,
        })
        .collect();
    finish(IrrFamily::Abelian, chars, used_gens, values, q)
}

fn extraspecial_irr(group: &Group, q: &Subgroup, p: u64) -> LabeledIrrSet {
    // Native backing uses α, β themselves so labels match (u, v) coordinates.
    let native = matches!(group.backing(), Backing::Heis(_));
    let (a, b) = if native {
        let pp = p as u32;
        (
            group.index_of(&Elem::Heis(Heis::new(pp, 1, 0, 0))).unwrap(),
            group.index_of(&Elem::Heis(Heis::new(pp, 0, 1, 0))).unwrap(),
        )
    } else {
        let els = q.elems();
        let a = els.iter().copied().find(|&x| x != group.identity()).unwrap();
        let b = els
            .iter()
            .copied()
            .find(|&y| group.mul(a, y) != group.mul(y, a))
            .unwrap();
        (a, b)
    };
    let c = group.commutator(a, b);
    let n = q.order();
    let pu = p as u32;
    // coords of a^r b^s c^t
    let mut coords = vec![(0u32, 0u32, 0u32); n];
    let pos = |x: Idx| q.elems().binary_search(&x).unwrap();
    for r in 0..pu {
        let ar = group.pow(a, r as u64);
        for s in 0..pu {
            let ab = group.mul(ar, group.pow(b, s as u64));
            for t in 0..pu {
                coords[pos(group.mul(ab, group.pow(c, t as u64)))] = (r, s, t);
            }
        }
    }
    let mut chars = Vec::new();
    let mut values = Vec::new();
    for u in 0..pu {
        for v in 0..pu {
            chars.push(IrrChar { label: format!("chi({u},{v})"), degree: 1, defect: 3 });
            values.push(coords.iter().map(|&(r, s, _)| Some((r * u + s * v) % pu)).collect());
        }
    }
    for u in 1..pu {
        chars.push(IrrChar { label: format!("phi({u})"), degree: p, defect: 2 });
        values.push(
            coords
                .iter()
                .map(|&(r, s, t)| (r == 0 && s == 0).then_some((u * t) % pu))
                .collect(),
        );
    }
    finish(IrrFamily::Extraspecial, chars, vec![a, b, c], values, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;
    use crate::group::Mat2;

    #[test]
    fn elementary_abelian_dual() {
        let g = perm_group(6, &[&[2, 3, 1, 4, 5, 6], &[1, 2, 3, 5, 6, 4]]);
        let irr = irr_with_defects(&g, &g.whole(), 3).unwrap();
        assert_eq!(irr.len(), 9);
        assert!(irr.chars.iter().all(|c| c.degree == 1 && c.defect == 2));
    }

    #[test]
    fn cyclic_and_mixed_abelian() {
        let c8 = perm_group(8, &[&[2, 3, 4, 5, 6, 7, 8, 1]]);
        assert_eq!(irr_with_defects(&c8, &c8.whole(), 2).unwrap().len(), 8);
        let c4c2 = perm_group(6, &[&[2, 3, 4, 1, 5, 6], &[1, 2, 3, 4, 6, 5]]);
        let irr = irr_with_defects(&c4c2, &c4c2.whole(), 2).unwrap();
        assert_eq!(irr.len(), 8);
        assert!(irr.chars.iter().all(|c| c.defect == 3));
    }

    #[test]
    fn extraspecial_7() {
        let s = extraspecial(7);
        let irr = irr_with_defects(&s, &s.whole(), 7).unwrap();
        assert_eq!(irr.len(), 55);
        assert_eq!(irr.with_defect(3).len(), 49);
        assert_eq!(irr.with_defect(2).len(), 6);
        let sumsq: u64 = irr.chars.iter().map(|c| c.degree * c.degree).sum();
        assert_eq!(sumsq, 343);
    }

    #[test]
    fn unsupported_families() {
        let d8 = dihedral8();
        assert!(matches!(
            irr_with_defects(&d8, &d8.whole(), 2),
            Err(Error::UnsupportedIrr(_))
        ));
        let s3 = symmetric(3);
        assert!(irr_with_defects(&s3, &s3.whole(), 3).is_err());
    }

    #[test]
    fn inner_automorphisms_fix_characters() {
        let s = extraspecial(5);
        let irr = irr_with_defects(&s, &s.whole(), 5).unwrap();
        for &g in s.gens() {
            let gi = s.inv(g);
            for mu in 0..irr.len() {
                assert_eq!(irr.act(|x| s.conj(gi, x), mu), mu);
            }
        }
    }

    #[test]
    fn diagonal_action_on_linear_characters() {
        // diag(ω,1) on S/Z = F_p² acts on χ_{u,v} by the inverse transpose.
        let p = 5u32;
        let s = extraspecial(p);
        let irr = irr_with_defects(&s, &s.whole(), p as u64).unwrap();
        let w = crate::catalog::primitive_root(p);
        let x = Mat2::new(p, [w as i64, 0, 0, 1]).unwrap();
        let phi_inv = crate::catalog::automorphism_of(&x.inv());
        let act = |mu: usize| irr.act(|y| s.index_of(&Elem::Heis(phi_inv(heis(&s, y)))).unwrap(), mu);
        assert_eq!(act(0), 0);
        let mut orbits = 0;
        let mut seen = vec![false; irr.len()];
        for mu in 0..(p * p) as usize {
            if seen[mu] {
                continue;
            }
            orbits += 1;
            let mut cur = mu;
            while !seen[cur] {
                seen[cur] = true;
                cur = act(cur);
            }
        }
        // χ_{u,v} ↦ χ_{u/ω, v}: orbits {u = 0} fixed (p of them) plus one orbit per v.
        assert_eq!(orbits, 2 * p as usize);
    }

    fn heis(s: &Group, x: Idx) -> Heis {
        match s.elem(x) {
            Elem::Heis(h) => *h,
            _ => unreachable!(),
        }
    }
}
