use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::extraspecial::{automorphism_of, line_of, line_subgroup, line_vector, primitive_root};
use super::spec::{OutStarShape, RvSpec};
use crate::error::{Error, Result};
use crate::fusion::{CentricReport, LocalData};
use crate::group::named::{extraspecial, mat_group};
use crate::group::{inv_mod, orbits, stabilizer, Action, Elem, Group, Heis, Idx, Mat2, Subgroup};
use crate::modular::{z_count, CocycleData};

fn mat(g: &Group, x: Idx) -> Mat2 {
    match g.elem(x) {
        Elem::Mat2(m) => *m,
        _ => unreachable!("matrix backing"),
    }
}

fn heis(g: &Group, x: Idx) -> Heis {
    match g.elem(x) {
        Elem::Heis(h) => *h,
        _ => unreachable!("native backing"),
    }
}

/// A subgroup of GL₂(p) acting on the points of P¹(F_p), indexed as lines.
struct LineAction<'a> {
    out: &'a Group,
    p: u32,
}

impl Action for LineAction<'_> {
    fn degree(&self) -> usize {
        self.p as usize + 1
    }

    fn act(&self, g: Idx, i: usize) -> usize {
        line_of(self.p, mat(self.out, g).apply(line_vector(self.p, i as u32))) as usize
    }
}

/// Column action X·v on F_p² (vectors indexed r·p + s).
struct VectorAction<'a> {
    out: &'a Group,
    p: u32,
}

impl Action for VectorAction<'_> {
    fn degree(&self) -> usize {
        (self.p * self.p) as usize
    }

    fn act(&self, g: Idx, v: usize) -> usize {
        let p = self.p;
        let (r, s) = mat(self.out, g).apply((v as u32 / p, v as u32 % p));
        (r * p + s) as usize
    }
}

/// Action on labels (u, v) of linear characters: χ ↦ χ∘φ_X⁻¹ is the inverse transpose.
struct DualAction<'a> {
    out: &'a Group,
    p: u32,
}

impl Action for DualAction<'_> {
    fn degree(&self) -> usize {
        (self.p * self.p) as usize
    }

    fn act(&self, g: Idx, v: usize) -> usize {
        let p = self.p;
        let m = mat(self.out, g).inv().transpose();
        let (u, w) = m.apply((v as u32 / p, v as u32 % p));
        (u * p + w) as usize
    }
}

#[derive(Clone, Debug)]
pub struct LineOrbit {
    pub rep: u32,
    pub members: Vec<u32>,
    /// stabilizer of the representative line in Out_F(S)
    pub stabilizer: Subgroup,
    /// |Out_F(Q_i) : SL₂(p)| for radical lines
    pub radical_index: Option<u64>,
}

/// One named nonconstrained fusion system on S = p^{1+2}_+.
#[derive(Clone, Debug)]
pub struct CatalogSystem {
    pub spec: RvSpec,
    pub p: u32,
    pub s: Arc<Group>,
    pub out_s: Arc<Group>,
    pub lines: Vec<LineOrbit>,
}

/// One orbit of Out_F(S) on vectors or character labels, with its stabilizer.
#[derive(Clone, Debug)]
pub struct VectorOrbit {
    pub rep: (u32, u32),
    pub size: usize,
    pub stabilizer: Subgroup,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogCheck {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl CatalogSystem {
    pub fn new(spec: RvSpec) -> Result<Self> {
        let p = spec.p;
        for g in &spec.generators {
            Mat2::new(p, *g).map_err(|_| Error::Input(format!("{}: singular generator {g:?}", spec.name)))?;
        }
        let out_s = mat_group(p, &spec.generators);
        if out_s.order() as u64 % p as u64 == 0 {
            return Err(Error::Input(format!("{}: Out_F(S) has order divisible by p", spec.name)));
        }
        let action = LineAction { out: &out_s, p };
        let whole = out_s.whole();
        let all: Vec<usize> = (0..=p as usize).collect();
        let mut lines = Vec::new();
        for o in orbits(&whole, &action, &all) {
            let radical_index = spec
                .radical
                .iter()
                .find(|(i, _)| o.members.contains(&(*i as usize)))
                .map(|&(_, a)| a);
            lines.push(LineOrbit {
                rep: o.rep as u32,
                members: o.members.iter().map(|&m| m as u32).collect(),
                stabilizer: stabilizer(&out_s, &whole, &action, o.rep),
                radical_index,
            });
        }
        for (i, _) in &spec.radical {
            if *i > p {
                return Err(Error::Input(format!("{}: radical line {i} out of range", spec.name)));
            }
        }
        let s = Arc::new(extraspecial(p));
        Ok(CatalogSystem { spec, p, s, out_s: Arc::new(out_s), lines })
    }

    pub fn lookup(name: &str, p: u32) -> Result<Self> {
        Self::new(RvSpec::lookup(name, p)?)
    }

    pub fn label(&self) -> String {
        format!("{}@{}", self.spec.name, self.p)
    }

    /// Out_F(S) acting on S through the GL₂(p) → Out(S) dictionary.
    pub fn local_s(&self) -> LocalData {
        let s = self.s.clone();
        let out = self.out_s.clone();
        let aut = Arc::new(move |g: Idx, x: Idx| {
            let f = automorphism_of(&mat(&out, g));
            s.index_of(&Elem::Heis(f(heis(&s, x)))).unwrap()
        });
        LocalData::new(
            "S".into(),
            self.s.clone(),
            self.s.whole(),
            self.out_s.clone(),
            self.p as u64,
            false,
            aut,
        )
    }

    /// Out_F(Q_i) for a line orbit, acting on Q_i = ⟨γ, v⟩ in the basis (γ, v).
    pub fn local_line(&self, orbit: &LineOrbit) -> Result<LocalData> {
        let p = self.p;
        let i = orbit.rep;
        let q = line_subgroup(&self.s, p, i);
        let (vr, vs) = line_vector(p, i);
        let gamma = Heis::new(p, 0, 0, 1);
        let v = Heis::new(p, vr as i64, vs as i64, 0);
        let mut table = vec![0 as Idx; (p * p) as usize];
        let mut coords: HashMap<Idx, (u32, u32)> = HashMap::new();
        for a in 0..p {
            for b in 0..p {
                let x = gamma.pow(a).mul(&v.pow(b));
                let idx = self.s.index_of(&Elem::Heis(x)).unwrap();
                table[(a * p + b) as usize] = idx;
                coords.insert(idx, (a, b));
            }
        }
        let (out, tagged) = match orbit.radical_index {
            Some(a) => {
                if (p as u64 - 1) % a != 0 {
                    return Err(Error::Input(format!("automizer index {a} does not divide p − 1")));
                }
                let w = primitive_root(p) as i64;
                let e = (p as u64 - 1) / a;
                let d = crate::group::pow_mod(w as u64, e, p as u64) as i64;
                (mat_group(p, &[[1, 1, 0, 1], [1, 0, 1, 1], [d, 0, 0, 1]]), true)
            }
            None => {
                let mut gens = vec![[1, 1, 0, 1]];
                for &x in orbit.stabilizer.gens() {
                    let m = mat(&self.out_s, x);
                    let (r, s) = m.apply((vr, vs));
                    let lambda = if vr != 0 {
                        r * inv_mod(vr, p) % p
                    } else {
                        s * inv_mod(vs, p) % p
                    };
                    gens.push([m.det() as i64, 0, 0, lambda as i64]);
                }
                (mat_group(p, &gens), false)
            }
        };
        let out = Arc::new(out);
        let hook_out = out.clone();
        let aut = Arc::new(move |g: Idx, x: Idx| {
            let (a, b) = hook_out_apply(&hook_out, g, coords[&x]);
            table[(a * p + b) as usize]
        });
        let label = format!("Q{i}");
        Ok(LocalData::new(label, self.s.clone(), q, out, p as u64, tagged, aut))
    }

    /// S and one Q_i per line orbit, radical or not (all are centric).
    pub fn centric_reports(&self) -> Result<Vec<CentricReport>> {
        let mut locals = vec![self.local_s()];
        for l in &self.lines {
            locals.push(self.local_line(l)?);
        }
        Ok(locals
            .into_iter()
            .map(|local| CentricReport {
                label: local.label.clone(),
                q_order: local.q.order(),
                is_centric: true,
                is_radical: local.is_radical,
                out_order: local.out.order(),
                local,
            })
            .collect())
    }

    /// Out*_F(S) = Out_F(S) ∩ SL₂(p).
    pub fn out_star(&self) -> Subgroup {
        let elems = (0..self.out_s.order() as Idx)
            .filter(|&x| mat(&self.out_s, x).det() == 1)
            .collect();
        self.out_s.subgroup_from_elems(elems)
    }

    /// l = |Out_F(S) : Out*_F(S)|, the order of the determinant image.
    pub fn l(&self) -> u64 {
        (self.out_s.order() / self.out_star().order()) as u64
    }

    fn z(&self, h: &Subgroup) -> Result<u64> {
        Ok(z_count(&self.out_s, h, self.p as u64, &CocycleData::Trivial, false)?.value)
    }

    /// Orbits of Out_F(S) on linear character labels (u, v).
    pub fn character_orbits(&self) -> Vec<VectorOrbit> {
        let action = DualAction { out: &self.out_s, p: self.p };
        self.vector_orbits(&action, (0..(self.p * self.p) as usize).collect())
    }

    /// Orbits of Out_F(S) on nonzero vectors of S/Z lying on non-radical lines:
    /// the F-classes of noncentral elements outside radical subgroups.
    pub fn element_orbits(&self) -> Vec<VectorOrbit> {
        let p = self.p;
        let radical_lines: Vec<u32> = self
            .lines
            .iter()
            .filter(|l| l.radical_index.is_some())
            .flat_map(|l| l.members.iter().copied())
            .collect();
        let points = (1..(p * p) as usize)
            .filter(|&v| !radical_lines.contains(&line_of(p, (v as u32 / p, v as u32 % p))))
            .collect();
        let action = VectorAction { out: &self.out_s, p };
        self.vector_orbits(&action, points)
    }

    fn vector_orbits(&self, action: &dyn Action, points: Vec<usize>) -> Vec<VectorOrbit> {
        let whole = self.out_s.whole();
        orbits(&whole, action, &points)
            .into_iter()
            .map(|o| VectorOrbit {
                rep: (o.rep as u32 / self.p, o.rep as u32 % self.p),
                size: o.members.len(),
                stabilizer: stabilizer(&self.out_s, &whole, action, o.rep),
            })
            .collect()
    }

    /// w from the radical data: z(Out_F(S)) + Σ automizer indices.
    pub fn w_from_automizers(&self) -> Result<i64> {
        let base = self.z(&self.out_s.whole())? as i64;
        Ok(base + self.lines.iter().filter_map(|l| l.radical_index).sum::<u64>() as i64)
    }

    /// m(F,0,d) from the structural closed forms: 0 below d = 2,
    /// (p−1)/l·|Out*^cl| at d = 2, and Σ z(stabilizers of linear characters) at d = 3.
    pub fn m_d_closed_form(&self, d: u32) -> Result<i64> {
        Ok(match d {
            2 => ((self.p as u64 - 1) / self.l() * self.out_s.class_count(&self.out_star()) as u64) as i64,
            3 => {
                let mut t = 0;
                for o in self.character_orbits() {
                    t += self.z(&o.stabilizer)?;
                }
                t as i64
            }
            _ => 0,
        })
    }

    /// k(F,0) = w + (p−1)/l·|Out*^cl| + Σ z(stabilizers of noncentral classes outside radicals).
    pub fn k_closed_form(&self) -> Result<i64> {
        let mut t = self.w_from_automizers()? + self.m_d_closed_form(2)?;
        for o in self.element_orbits() {
            t += self.z(&o.stabilizer)? as i64;
        }
        Ok(t)
    }

    /// Consistency checks of the transcribed data against live computation.
    pub fn validate(&self) -> Vec<CatalogCheck> {
        let p = self.p as u64;
        let mut out = Vec::new();
        let mut check = |name: &str, expected: String, computed: String| {
            out.push(CatalogCheck {
                name: name.into(),
                pass: expected == computed,
                expected,
                computed,
            });
        };
        let sorted = |mut v: Vec<u64>| {
            v.sort_unstable();
            format!("{v:?}")
        };
        check(
            "char_stabilizer_orders",
            sorted(self.spec.char_stabilizer_orders.clone()),
            sorted(self.character_orbits().iter().map(|o| o.stabilizer.order() as u64).collect()),
        );
        check(
            "element_stabilizer_orders",
            sorted(self.spec.element_stabilizer_orders.clone()),
            sorted(self.element_orbits().iter().map(|o| o.stabilizer.order() as u64).collect()),
        );
        let star = self.out_star();
        check("out_star_order", self.spec.out_star_order.to_string(), star.order().to_string());
        if let Some(shape) = self.spec.out_star_shape {
            let computed = if !self.out_s.is_abelian(&star) {
                "NonAbelian"
            } else if self.out_s.exponent(&star) == star.order() as u64 {
                "Cyclic"
            } else {
                "NonCyclicAbelian"
            };
            let expected = match shape {
                OutStarShape::Cyclic => "Cyclic",
                OutStarShape::NonAbelian => "NonAbelian",
            };
            check("out_star_shape", expected.into(), computed.into());
        }
        check("l_equals_p_minus_1", (p - 1).to_string(), self.l().to_string());
        for l in &self.lines {
            if let Some(a) = l.radical_index {
                check(
                    &format!("automizer_index_line_{}", l.rep),
                    a.to_string(),
                    (l.stabilizer.order() as u64 / (p - 1)).to_string(),
                );
                check(
                    &format!("antidiagonal_line_{}", l.rep),
                    "true".into(),
                    self.contains_antidiagonal(l).to_string(),
                );
            }
        }
        let declared: usize = self.spec.radical.len();
        let found = self.lines.iter().filter(|l| l.radical_index.is_some()).count();
        check("radical_orbits_distinct", declared.to_string(), found.to_string());
        out
    }

    /// Does the (det, eigenvalue) image of the line stabilizer contain every (t, t⁻¹)?
    fn contains_antidiagonal(&self, l: &LineOrbit) -> bool {
        let p = self.p;
        let (vr, vs) = line_vector(p, l.rep);
        let image: std::collections::HashSet<(u32, u32)> = l
            .stabilizer
            .elems()
            .iter()
            .map(|&x| {
                let m = mat(&self.out_s, x);
                let (r, s) = m.apply((vr, vs));
                let lambda = if vr != 0 { r * inv_mod(vr, p) % p } else { s * inv_mod(vs, p) % p };
                (m.det(), lambda)
            })
            .collect();
        (1..p).all(|t| image.contains(&(t, inv_mod(t, p))))
    }
}

fn hook_out_apply(out: &Group, g: Idx, v: (u32, u32)) -> (u32, u32) {
    mat(out, g).apply(v)
}

/// The four matrix groups whose class numbers have closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassCountKind {
    /// C_{p−1} ≀ C₂
    Wreath,
    /// ⟨diag(ω, ω⁻¹), [[0,−1],[1,0]]⟩
    CyclicByTwo,
    /// ⟨diag(ω³,1), ωI, [[0,1],[1,0]]⟩
    WreathIndexThree,
    /// ⟨diag(ω³, ω⁻³), [[0,−1],[1,0]]⟩
    CyclicByTwoIndexThree,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassCountOracle {
    pub kind: ClassCountKind,
    pub p: u32,
    pub closed_form: u64,
    pub group_order: usize,
    pub brute_force: usize,
}

/// Closed-form class count and the brute-force count of the generated group.
/// The last kind is a dicyclic group of order 2(p−1)/3 with (p+17)/6 classes.
pub fn class_count_oracle(kind: ClassCountKind, p: u32) -> Result<ClassCountOracle> {
    use ClassCountKind::*;
    let q = p as u64 - 1;
    if matches!(kind, WreathIndexThree | CyclicByTwoIndexThree) && q % 3 != 0 {
        return Err(Error::Input(format!("{kind:?} needs 3 | p − 1, which fails at p = {p}")));
    }
    let w = primitive_root(p) as i64;
    let pi = p as i64;
    let w3 = w * w % pi * w % pi;
    let gens: Vec<[i64; 4]> = match kind {
        Wreath => vec![[w, 0, 0, 1], [1, 0, 0, w], [0, 1, 1, 0]],
        CyclicByTwo => vec![[w, 0, 0, inv_mod(w as u32, p) as i64], [0, -1, 1, 0]],
        WreathIndexThree => vec![[w3, 0, 0, 1], [w, 0, 0, w], [0, 1, 1, 0]],
        CyclicByTwoIndexThree => vec![[w3, 0, 0, inv_mod(w3 as u32, p) as i64], [0, -1, 1, 0]],
    };
    let closed_form = match kind {
        Wreath => q * (p as u64 + 2) / 2,
        CyclicByTwo => (p as u64 + 5) / 2,
        WreathIndexThree => q * (p as u64 + 8) / 6,
        CyclicByTwoIndexThree => (p as u64 + 17) / 6,
    };
    let g = mat_group(p, &gens);
    Ok(ClassCountOracle {
        kind,
        p,
        closed_form,
        group_order: g.order(),
        brute_force: g.class_count(&g.whole()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn he_structure() {
        let f = CatalogSystem::lookup("He", 7).unwrap();
        assert_eq!(f.out_s.order(), 18);
        assert_eq!(f.l(), 6);
        assert_eq!(f.m_d_closed_form(2).unwrap(), 3);
        assert_eq!(f.m_d_closed_form(3).unwrap(), 20);
        assert_eq!(f.w_from_automizers().unwrap(), 10);
        assert!(f.validate().iter().all(|c| c.pass), "{:?}", f.validate());
    }

    #[test]
    fn rv1_k() {
        let f = CatalogSystem::lookup("RV1", 7).unwrap();
        assert_eq!(f.w_from_automizers().unwrap(), 35);
        assert_eq!(f.k_closed_form().unwrap(), 41);
    }

    #[test]
    fn psl3_p5_k() {
        let f = CatalogSystem::lookup("PSL3", 5).unwrap();
        assert_eq!(f.w_from_automizers().unwrap(), 24);
        assert_eq!(f.k_closed_form().unwrap(), 29);
    }

    #[test]
    fn he2_k() {
        let f = CatalogSystem::lookup("He:2", 7).unwrap();
        assert_eq!(f.k_closed_form().unwrap(), 31);
    }

    #[test]
    fn line_local_data() {
        let f = CatalogSystem::lookup("RV1", 7).unwrap();
        for l in &f.lines {
            let local = f.local_line(l).unwrap();
            assert_eq!(local.q.order(), 49);
            assert_eq!(local.is_radical, l.radical_index.is_some());
            // the hook is an action by automorphisms of Q_i
            for &g in local.out.gens() {
                for &x in local.q.gens() {
                    for &y in local.q.gens() {
                        let xy = f.s.mul(x, y);
                        assert_eq!(local.apply(g, xy), f.s.mul(local.apply(g, x), local.apply(g, y)));
                    }
                }
            }
        }
    }

    #[test]
    fn class_counts() {
        use ClassCountKind::*;
        let r = class_count_oracle(Wreath, 7).unwrap();
        assert_eq!((r.closed_form, r.brute_force), (27, 27));
        let r = class_count_oracle(CyclicByTwo, 13).unwrap();
        assert_eq!((r.closed_form, r.brute_force), (9, 9));
        let r = class_count_oracle(CyclicByTwoIndexThree, 13).unwrap();
        assert_eq!((r.group_order, r.brute_force), (8, 5));
        assert!(class_count_oracle(WreathIndexThree, 5).is_err());
    }
}
