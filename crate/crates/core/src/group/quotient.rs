use super::{Elem, Group, Idx, Perm, Subgroup};
use crate::error::{Error, Result};

/// H/N realized by the regular action of H on the left cosets of N.
pub struct Quotient {
    pub group: Group,
    /// coset label of each parent element (`u32::MAX` outside H)
    coset_of: Vec<u32>,
    /// quotient element index of each coset label
    coset_to_elem: Vec<Idx>,
    /// least parent element of the coset for each quotient element
    reps: Vec<Idx>,
}

impl Quotient {
    /// Image of a parent element of H in the quotient.
    pub fn project(&self, x: Idx) -> Idx {
        let c = self.coset_of[x as usize];
        assert!(c != u32::MAX, "element outside the numerator");
        self.coset_to_elem[c as usize]
    }

    /// A parent element of H mapping to quotient element `q`.
    pub fn rep(&self, q: Idx) -> Idx {
        self.reps[q as usize]
    }

    /// Preimage in the parent of a subgroup of the quotient.
    pub fn preimage(&self, parent: &Group, k: &Subgroup) -> Subgroup {
        let mut elems: Vec<Idx> = (0..self.coset_of.len() as Idx)
            .filter(|&x| {
                let c = self.coset_of[x as usize];
                c != u32::MAX && k.contains(self.coset_to_elem[c as usize])
            })
            .collect();
        elems.sort_unstable();
        parent.subgroup_from_elems(elems)
    }
}

impl Group {
    /// H/N for N normal in H.
    pub fn quotient(&self, h: &Subgroup, n: &Subgroup) -> Result<Quotient> {
        if !self.is_normal(h, n) {
            return Err(Error::NotNormal(format!(
                "subgroup of order {} in group of order {}",
                n.order(),
                h.order()
            )));
        }
        let cosets = self.left_cosets(h, n);
        let mut coset_of = vec![u32::MAX; self.order()];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                coset_of[x as usize] = i as u32;
            }
        }
        let k = cosets.len();
        let action_of = |g: Idx| -> Elem {
            let images: Vec<u16> = cosets
                .iter()
                .map(|c| coset_of[self.mul(g, c[0]) as usize] as u16)
                .collect();
            Elem::Perm(Perm::from_images(images))
        };
        let mut gens: Vec<Elem> = h.gens().iter().map(|&g| action_of(g)).collect();
        if gens.is_empty() {
            gens.push(Elem::Perm(Perm::identity(k)));
        }
        let group = Group::generate(&gens)?;
        debug_assert_eq!(group.order(), k);
        let base = coset_of[self.identity() as usize] as usize;
        let mut coset_to_elem = vec![0; k];
        let mut reps = vec![0; k];
        for q in 0..group.order() as Idx {
            let Elem::Perm(pi) = group.elem(q) else { unreachable!() };
            let c = pi.apply(base);
            coset_to_elem[c] = q;
            reps[q as usize] = cosets[c][0];
        }
        Ok(Quotient { group, coset_of, coset_to_elem, reps })
    }
}

#[cfg(test)]
mod tests {
    use super::super::named::*;

    #[test]
    fn trivial_and_full_quotients() {
        let s4 = symmetric(4);
        let q = s4.quotient(&s4.whole(), &s4.whole()).unwrap();
        assert_eq!(q.group.order(), 1);
        let q = s4.quotient(&s4.whole(), &s4.trivial()).unwrap();
        assert_eq!(q.group.order(), 24);
        assert_eq!(q.group.class_count(&q.group.whole()), 5);
    }

    #[test]
    fn s4_mod_v4_is_s3() {
        let s4 = symmetric(4);
        let v4 = s4.p_core(&s4.whole(), 2);
        let q = s4.quotient(&s4.whole(), &v4).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian(&q.group.whole()));
        for x in 0..24 {
            for y in 0..24 {
                assert_eq!(
                    q.project(s4.mul(x, y)),
                    q.group.mul(q.project(x), q.project(y))
                );
            }
        }
        assert_eq!(q.preimage(&s4, &q.group.trivial()), v4);
    }

    #[test]
    fn extraspecial_mod_center_is_elementary_abelian() {
        let s = extraspecial(5);
        let z = s.center(&s.whole());
        let q = s.quotient(&s.whole(), &z).unwrap();
        assert_eq!(q.group.order(), 25);
        assert!(q.group.is_abelian(&q.group.whole()));
        assert_eq!(q.group.exponent(&q.group.whole()), 5);
    }

    #[test]
    fn non_normal_rejected() {
        let s4 = symmetric(4);
        let t = s4.closure(&[1]);
        assert!(!s4.is_normal(&s4.whole(), &t) || t.order() == 1);
        if t.order() == 2 {
            assert!(s4.quotient(&s4.whole(), &t).is_err());
        }
    }

    #[test]
    fn nested_quotients() {
        // (G/N)/(M/N) has order |G/M|.
        let s4 = symmetric(4);
        let v4 = s4.p_core(&s4.whole(), 2);
        let a4 = s4.derived(&s4.whole());
        let q = s4.quotient(&s4.whole(), &v4).unwrap();
        let img: Vec<u32> = a4.elems().iter().map(|&x| q.project(x)).collect();
        let m = q.group.subgroup_from_elems(img);
        let qq = q.group.quotient(&q.group.whole(), &m).unwrap();
        assert_eq!(qq.group.order(), s4.order() / a4.order());
    }
}
