use super::{Group, Idx, Subgroup};

/// An action of a parent group on the points `0..degree()`.
pub trait Action {
    fn degree(&self) -> usize;
    /// Image of point `x` under parent element `g`.
    fn act(&self, g: Idx, x: usize) -> usize;
}

/// One orbit: its least point (the representative) and sorted members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub rep: usize,
    pub members: Vec<usize>,
}

/// Orbits of H on the subset `points` (which must be H-invariant), using H's generators.
pub fn orbits<A: Action + ?Sized>(h: &Subgroup, action: &A, points: &[usize]) -> Vec<Orbit> {
    let mut seen = vec![false; action.degree()];
    let mut out = Vec::new();
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    for &x in &sorted {
        if seen[x] {
            continue;
        }
        seen[x] = true;
        let mut members = vec![x];
        let mut head = 0;
        while head < members.len() {
            let y = members[head];
            head += 1;
            for &g in h.gens() {
                let z = action.act(g, y);
                if !seen[z] {
                    seen[z] = true;
                    members.push(z);
                }
            }
        }
        members.sort_unstable();
        out.push(Orbit { rep: x, members });
    }
    out
}

/// Stab_H(x), by testing every element of H.
pub fn stabilizer<A: Action + ?Sized>(group: &Group, h: &Subgroup, action: &A, x: usize) -> Subgroup {
    let elems = h
        .elems()
        .iter()
        .copied()
        .filter(|&g| action.act(g, x) == x)
        .collect();
    group.subgroup_from_elems(elems)
}

/// Orbits of H on `points`, each paired with the stabilizer of its representative.
pub fn orbits_with_stabilizers<A: Action + ?Sized>(
    group: &Group,
    h: &Subgroup,
    action: &A,
    points: &[usize],
) -> Vec<(Orbit, Subgroup)> {
    orbits(h, action, points)
        .into_iter()
        .map(|o| {
            let st = stabilizer(group, h, action, o.rep);
            debug_assert_eq!(o.members.len() * st.order(), h.order());
            (o, st)
        })
        .collect()
}

/// Conjugation action of a group on a fixed list of its own elements.
pub struct ConjugationOn<'a> {
    pub group: &'a Group,
    pub points: &'a [Idx],
    pub index: std::collections::HashMap<Idx, usize>,
}

impl<'a> ConjugationOn<'a> {
    pub fn new(group: &'a Group, points: &'a [Idx]) -> Self {
        let index = points.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        ConjugationOn { group, points, index }
    }
}

impl Action for ConjugationOn<'_> {
    fn degree(&self) -> usize {
        self.points.len()
    }

    fn act(&self, g: Idx, x: usize) -> usize {
        self.index[&self.group.conj(g, self.points[x])]
    }
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    #[test]
    fn orbit_stabilizer_on_conjugation() {
        for g in [symmetric(4), gl2(3), extraspecial(3)] {
            let pts: Vec<Idx> = (0..g.order() as Idx).collect();
            let act = ConjugationOn::new(&g, &pts);
            let all: Vec<usize> = (0..pts.len()).collect();
            let orbs = orbits_with_stabilizers(&g, &g.whole(), &act, &all);
            assert_eq!(orbs.len(), g.class_count(&g.whole()));
            for (o, st) in &orbs {
                assert_eq!(o.members.len() * st.order(), g.order());
                assert_eq!(o.rep, o.members[0]);
            }
            let total: usize = orbs.iter().map(|(o, _)| o.members.len()).sum();
            assert_eq!(total, g.order());
        }
    }
}
