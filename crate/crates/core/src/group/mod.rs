//! Exact finite-group engine: closure from generators, subgroups,
//! conjugacy, quotients and the p-local operators the weight sums need.
//!
//! A [`Group`] materializes all of its elements in canonical (lexicographic)
//! order, so element indices double as canonical ranks: the least index in a
//! class or subgroup orbit is its canonical representative.

mod action;
mod elem;
pub mod input;
mod lattice;
mod quotient;
mod subgroup;

pub use action::{orbits, orbits_with_stabilizers, stabilizer, Action, ConjugationOn, Orbit};
pub use elem::{inv_mod, pow_mod, Backing, Elem, Heis, Mat2, Perm};
pub use lattice::{all_p_subgroups, p_subgroup_classes, DEFAULT_SUBGROUP_CAP};
pub use quotient::Quotient;
pub use subgroup::{ConjClass, Subgroup};

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type Idx = u32;

/// Default cap on the number of elements produced by a closure.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// Groups up to this order keep a full multiplication table.
const TABLE_LIMIT: usize = 1024;

enum Lookup {
    Hash(HashMap<Elem, Idx>),
    Dense(Vec<Idx>),
}

pub struct Group {
    elems: Vec<Elem>,
    lookup: Lookup,
    gens: Vec<Idx>,
    identity: Idx,
    inverses: Vec<Idx>,
    table: Option<Vec<Idx>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("order", &self.order())
            .field("gens", &self.gens.len())
            .finish()
    }
}

impl Group {
    /// Closes `gens` under products with the default element cap.
    pub fn generate(gens: &[Elem]) -> Result<Group> {
        Self::generate_capped(gens, DEFAULT_ELEMENT_CAP)
    }

    pub fn generate_capped(gens: &[Elem], cap: usize) -> Result<Group> {
        let first = gens
            .first()
            .ok_or_else(|| Error::IncompatibleBacking("empty generator list".into()))?;
        let backing = first.backing();
        if let Some(g) = gens.iter().find(|g| g.backing() != backing) {
            return Err(Error::IncompatibleBacking(format!(
                "{:?} vs {:?}",
                backing,
                g.backing()
            )));
        }
        let id = first.identity_like();
        let mut seen: HashMap<Elem, ()> = HashMap::new();
        let mut list = vec![id.clone()];
        seen.insert(id, ());
        let mut head = 0;
        while head < list.len() {
            let x = list[head].clone();
            head += 1;
            for g in gens {
                let y = x.mul(g);
                if !seen.contains_key(&y) {
                    if list.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    seen.insert(y.clone(), ());
                    list.push(y);
                }
            }
        }
        drop(seen);
        list.sort();
        let lookup = build_lookup(&list, backing);
        let mut g = Group {
            elems: list,
            lookup,
            gens: Vec::new(),
            identity: 0,
            inverses: Vec::new(),
            table: None,
        };
        let mut gen_idx: Vec<Idx> = gens.iter().map(|x| g.index_of(x).unwrap()).collect();
        gen_idx.dedup();
        g.gens = gen_idx;
        g.identity = g.index_of(&first.identity_like()).unwrap();
        if g.order() <= TABLE_LIMIT {
            let n = g.order();
            let mut t = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    let y = g.elems[a].mul(&g.elems[b]);
                    t.push(g.index_of(&y).unwrap());
                }
            }
            g.table = Some(t);
        }
        g.inverses = (0..g.order())
            .map(|a| g.index_of(&g.elems[a].inv()).unwrap())
            .collect();
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elem(&self, i: Idx) -> &Elem {
        &self.elems[i as usize]
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn gens(&self) -> &[Idx] {
        &self.gens
    }

    pub fn identity(&self) -> Idx {
        self.identity
    }

    pub fn backing(&self) -> Backing {
        self.elems[0].backing()
    }

    pub fn index_of(&self, x: &Elem) -> Option<Idx> {
        match &self.lookup {
            Lookup::Hash(m) => m.get(x).copied(),
            Lookup::Dense(t) => {
                let k = x.dense_key()?;
                t.get(k).copied().filter(|&i| i != Idx::MAX)
            }
        }
    }

    pub fn mul(&self, a: Idx, b: Idx) -> Idx {
        match &self.table {
            Some(t) => t[a as usize * self.order() + b as usize],
            None => {
                let y = self.elems[a as usize].mul(&self.elems[b as usize]);
                self.index_of(&y).expect("group not closed under product")
            }
        }
    }

    pub fn inv(&self, a: Idx) -> Idx {
        self.inverses[a as usize]
    }

    /// g x g⁻¹
    pub fn conj(&self, g: Idx, x: Idx) -> Idx {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// x⁻¹ y⁻¹ x y
    pub fn commutator(&self, x: Idx, y: Idx) -> Idx {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: Idx, n: u64) -> Idx {
        let mut acc = self.identity;
        let mut b = x;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn elem_order(&self, x: Idx) -> u64 {
        let mut y = x;
        let mut n = 1;
        while y != self.identity {
            y = self.mul(y, x);
            n += 1;
        }
        n
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(&self) -> Subgroup {
        Subgroup::from_parts((0..self.order() as Idx).collect(), self.gens.clone())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_parts(vec![self.identity], Vec::new())
    }
}

fn build_lookup(list: &[Elem], backing: Backing) -> Lookup {
    match backing.dense_size() {
        Some(n) => {
            let mut t = vec![Idx::MAX; n];
            for (i, x) in list.iter().enumerate() {
                t[x.dense_key().unwrap()] = i as Idx;
            }
            Lookup::Dense(t)
        }
        None => Lookup::Hash(
            list.iter()
                .enumerate()
                .map(|(i, x)| (x.clone(), i as Idx))
                .collect(),
        ),
    }
}

/// p-adic valuation of n (n > 0).
pub fn vp(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Convenience constructors for small named groups used in tests and examples.
pub mod named {
    use super::*;

    pub fn perm_group(degree: usize, gens: &[&[u32]]) -> Group {
        let gens: Vec<Elem> = gens
            .iter()
            .map(|g| {
                let mut v = g.to_vec();
                v.extend((v.len() as u32 + 1)..=(degree as u32));
                Elem::Perm(Perm::from_one_based(&v).unwrap())
            })
            .collect();
        Group::generate(&gens).unwrap()
    }

    pub fn mat_group(p: u32, gens: &[[i64; 4]]) -> Group {
        let gens: Vec<Elem> = gens
            .iter()
            .map(|e| Elem::Mat2(Mat2::new(p, *e).unwrap()))
            .collect();
        Group::generate(&gens).unwrap()
    }

    pub fn symmetric(n: usize) -> Group {
        let cyc: Vec<u32> = (2..=n as u32).chain(std::iter::once(1)).collect();
        perm_group(n, &[&[2, 1], &cyc])
    }

    pub fn alternating(n: usize) -> Group {
        let gens: Vec<Vec<u32>> = (3..=n as u32)
            .map(|k| {
                let mut v: Vec<u32> = (1..=n as u32).collect();
                v[0] = 2;
                v[1] = k;
                v[k as usize - 1] = 1;
                v
            })
            .collect();
        let refs: Vec<&[u32]> = gens.iter().map(|v| v.as_slice()).collect();
        perm_group(n, &refs)
    }

    pub fn dihedral8() -> Group {
        perm_group(4, &[&[2, 3, 4, 1], &[1, 4, 3, 2]])
    }

    pub fn gl2(p: u32) -> Group {
        let w = crate::catalog::primitive_root(p) as i64;
        mat_group(p, &[[w, 0, 0, 1], [-1, 1, -1, 0]])
    }

    pub fn sl2(p: u32) -> Group {
        mat_group(p, &[[1, 1, 0, 1], [1, 0, 1, 1]])
    }

    /// p^{1+2}_+ in native triple backing.
    pub fn extraspecial(p: u32) -> Group {
        Group::generate(&[
            Elem::Heis(Heis::new(p, 1, 0, 0)),
            Elem::Heis(Heis::new(p, 0, 1, 0)),
        ])
        .unwrap()
    }

    /// C_p ⋊ C_q with the C_q acting by multiplication by an element of order q mod p.
    pub fn frobenius(p: u32, q: u32) -> Group {
        let w = crate::catalog::primitive_root(p);
        let a = pow_mod(w as u64, ((p - 1) / q) as u64, p as u64) as u32;
        let shift: Vec<u32> = (0..p).map(|i| (i + 1) % p + 1).collect();
        let mult: Vec<u32> = (0..p).map(|i| (i * a) % p + 1).collect();
        perm_group(p as usize, &[&shift, &mult])
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn closure_orders() {
        assert_eq!(perm_group(2, &[&[2, 1]]).order(), 2);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(gl2(3).order(), 48);
        assert_eq!(gl2(7).order(), (49 - 1) * (49 - 7));
        assert_eq!(sl2(3).order(), 24);
        assert_eq!(extraspecial(7).order(), 343);
        assert_eq!(frobenius(7, 3).order(), 21);
    }

    #[test]
    fn unitriangular_mod_7_has_order_343() {
        // 3×3 unitriangular matrices acting on F_7^3 as permutations of 343 vectors.
        let p = 7u32;
        let idx = |v: [u32; 3]| (v[0] * 49 + v[1] * 7 + v[2]) as usize;
        let mk = |f: &dyn Fn([u32; 3]) -> [u32; 3]| {
            let mut img = vec![0u32; 343];
            for a in 0..p {
                for b in 0..p {
                    for c in 0..p {
                        img[idx([a, b, c])] = idx(f([a, b, c])) as u32 + 1;
                    }
                }
            }
            Elem::Perm(Perm::from_one_based(&img).unwrap())
        };
        let x = mk(&|v| [(v[0] + v[1]) % p, v[1], v[2]]);
        let y = mk(&|v| [v[0], (v[1] + v[2]) % p, v[2]]);
        assert_eq!(Group::generate(&[x, y]).unwrap().order(), 343);
    }

    #[test]
    fn cap_and_backing_errors() {
        let s5 = symmetric(5);
        let gens: Vec<Elem> = s5.gens().iter().map(|&g| s5.elem(g).clone()).collect();
        assert_eq!(
            Group::generate_capped(&gens, 100).unwrap_err(),
            Error::GroupTooLarge { cap: 100 }
        );
        let mixed = [
            Elem::Perm(Perm::identity(3)),
            Elem::Mat2(Mat2::identity(3)),
        ];
        assert!(matches!(
            Group::generate(&mixed),
            Err(Error::IncompatibleBacking(_))
        ));
        let degrees = [Elem::Perm(Perm::identity(3)), Elem::Perm(Perm::identity(4))];
        assert!(Group::generate(&degrees).is_err());
    }

    #[test]
    fn canonical_order_is_deterministic() {
        let a = symmetric(4);
        let b = symmetric(4);
        assert_eq!(a.elems(), b.elems());
        assert_eq!(a.identity(), 0);
        assert!(a.elems().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn inverses_and_powers() {
        let g = gl2(5);
        for x in 0..g.order() as Idx {
            assert_eq!(g.mul(x, g.inv(x)), g.identity());
            assert_eq!(g.pow(x, g.elem_order(x)), g.identity());
        }
    }
}
