//! Concrete element backings: permutations, 2×2 matrices over F_p and
//! native triples for the extraspecial group p^{1+2}_+.
//!
//! Products compose right-to-left: `a.mul(b)` applies `b` first.

use crate::error::{Error, Result};

/// A permutation of `0..n`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Box<[u16]>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u16).collect())
    }

    /// Builds a permutation from 1-based images, validating bijectivity.
    pub fn from_one_based(images: &[u32]) -> Result<Self> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(Error::InvalidElement(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &i in images {
            if i == 0 || i as usize > n || seen[i as usize - 1] {
                return Err(Error::InvalidElement(format!(
                    "images {images:?} are not a permutation of 1..{n}"
                )));
            }
            seen[i as usize - 1] = true;
            out.push((i - 1) as u16);
        }
        Ok(Perm(out.into()))
    }

    pub fn from_images(images: Vec<u16>) -> Self {
        Perm(images.into())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn mul(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&j| self.0[j as usize]).collect())
    }

    pub fn inv(&self) -> Perm {
        let mut out = vec![0u16; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            out[j as usize] = i as u16;
        }
        Perm(out.into())
    }
}

/// An invertible 2×2 matrix `[[a, b], [c, d]]` over F_p, stored row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub p: u16,
    pub e: [u16; 4],
}

impl Mat2 {
    pub fn new(p: u32, e: [i64; 4]) -> Result<Self> {
        let m = Mat2 {
            p: p as u16,
            e: e.map(|x| x.rem_euclid(p as i64) as u16),
        };
        if m.det() == 0 {
            return Err(Error::InvalidElement(format!("singular matrix {e:?} mod {p}")));
        }
        Ok(m)
    }

    pub fn identity(p: u32) -> Self {
        Mat2 { p: p as u16, e: [1, 0, 0, 1] }
    }

    pub fn det(&self) -> u32 {
        let p = self.p as u32;
        let [a, b, c, d] = self.e.map(|x| x as u32);
        (a * d + p * p - b * c) % p
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let p = self.p as u32;
        let [a, b, c, d] = self.e.map(|x| x as u32);
        let [w, x, y, z] = o.e.map(|x| x as u32);
        Mat2 {
            p: self.p,
            e: [
                ((a * w + b * y) % p) as u16,
                ((a * x + b * z) % p) as u16,
                ((c * w + d * y) % p) as u16,
                ((c * x + d * z) % p) as u16,
            ],
        }
    }

    pub fn inv(&self) -> Mat2 {
        let p = self.p as u32;
        let di = inv_mod(self.det(), p);
        let [a, b, c, d] = self.e.map(|x| x as u32);
        let f = |x: u32| ((x % p) * di % p) as u16;
        Mat2 { p: self.p, e: [f(d), f(p - b), f(p - c), f(a)] }
    }

    pub fn transpose(&self) -> Mat2 {
        let [a, b, c, d] = self.e;
        Mat2 { p: self.p, e: [a, c, b, d] }
    }

    /// Applies the matrix to the column vector `(x, y)`.
    pub fn apply(&self, v: (u32, u32)) -> (u32, u32) {
        let p = self.p as u32;
        let [a, b, c, d] = self.e.map(|x| x as u32);
        ((a * v.0 + b * v.1) % p, (c * v.0 + d * v.1) % p)
    }
}

/// The element α^r β^s γ^t of p^{1+2}_+ = ⟨α, β | [α,β] = γ central, exponent p⟩,
/// with the commutator convention [x,y] = x⁻¹y⁻¹xy, so βα = αβγ⁻¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Heis {
    pub p: u16,
    pub r: u16,
    pub s: u16,
    pub t: u16,
}

impl Heis {
    pub fn new(p: u32, r: i64, s: i64, t: i64) -> Self {
        let m = |x: i64| x.rem_euclid(p as i64) as u16;
        Heis { p: p as u16, r: m(r), s: m(s), t: m(t) }
    }

    pub fn identity(p: u32) -> Self {
        Heis { p: p as u16, r: 0, s: 0, t: 0 }
    }

    pub fn mul(&self, o: &Heis) -> Heis {
        let p = self.p as u32;
        let t = (self.t as u32 + o.t as u32 + p * p - (self.s as u32 * o.r as u32) % (p * p)) % p;
        Heis {
            p: self.p,
            r: ((self.r + o.r) as u32 % p) as u16,
            s: ((self.s + o.s) as u32 % p) as u16,
            t: t as u16,
        }
    }

    pub fn inv(&self) -> Heis {
        // (r,s,t)⁻¹ = (−r, −s, −t − s·r) from (r,s,t)(−r,−s,t') = (0,0,t + t' + s·r).
        let p = self.p as i64;
        Heis::new(p as u32, -(self.r as i64), -(self.s as i64), -(self.t as i64) - self.s as i64 * self.r as i64)
    }

    pub fn pow(&self, n: u32) -> Heis {
        let mut acc = Heis::identity(self.p as u32);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Perm(Perm),
    Mat2(Mat2),
    Heis(Heis),
}

/// Shape of a backing: kind plus degree or field size. Generators must agree on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backing {
    Perm(usize),
    Mat2(u32),
    Heis(u32),
}

impl Elem {
    pub fn backing(&self) -> Backing {
        match self {
            Elem::Perm(x) => Backing::Perm(x.degree()),
            Elem::Mat2(m) => Backing::Mat2(m.p as u32),
            Elem::Heis(h) => Backing::Heis(h.p as u32),
        }
    }

    pub fn mul(&self, o: &Elem) -> Elem {
        match (self, o) {
            (Elem::Perm(a), Elem::Perm(b)) => Elem::Perm(a.mul(b)),
            (Elem::Mat2(a), Elem::Mat2(b)) => Elem::Mat2(a.mul(b)),
            (Elem::Heis(a), Elem::Heis(b)) => Elem::Heis(a.mul(b)),
            _ => panic!("product of elements with different backings"),
        }
    }

    pub fn inv(&self) -> Elem {
        match self {
            Elem::Perm(a) => Elem::Perm(a.inv()),
            Elem::Mat2(a) => Elem::Mat2(a.inv()),
            Elem::Heis(a) => Elem::Heis(a.inv()),
        }
    }

    pub fn identity_like(&self) -> Elem {
        match self.backing() {
            Backing::Perm(n) => Elem::Perm(Perm::identity(n)),
            Backing::Mat2(p) => Elem::Mat2(Mat2::identity(p)),
            Backing::Heis(p) => Elem::Heis(Heis::identity(p)),
        }
    }

    /// Position in a dense table, for backings small enough to index directly.
    pub(crate) fn dense_key(&self) -> Option<usize> {
        match self {
            Elem::Perm(_) => None,
            Elem::Mat2(m) => {
                let p = m.p as usize;
                let [a, b, c, d] = m.e.map(|x| x as usize);
                Some(((a * p + b) * p + c) * p + d)
            }
            Elem::Heis(h) => {
                let p = h.p as usize;
                Some((h.r as usize * p + h.s as usize) * p + h.t as usize)
            }
        }
    }
}

impl Backing {
    pub(crate) fn dense_size(&self) -> Option<usize> {
        match *self {
            Backing::Perm(_) => None,
            Backing::Mat2(p) => Some((p as usize).pow(4)),
            Backing::Heis(p) => Some((p as usize).pow(3)),
        }
    }
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a as u64, (p - 2) as u64, p as u64) as u32
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}
