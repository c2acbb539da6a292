//! The GL₂(p) ↔ Out(p^{1+2}_+) dictionary on native triples.

use crate::error::{Error, Result};
use crate::group::{pow_mod, Group, Heis, Idx, Mat2, Subgroup};

/// Least primitive root modulo the prime p.
pub fn primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let n = (p - 1) as u64;
    let factors: Vec<u64> = (2..=n).filter(|&d| n % d == 0 && crate::group::is_prime(d)).collect();
    (2..p)
        .find(|&g| factors.iter().all(|&f| pow_mod(g as u64, n / f, p as u64) != 1))
        .expect("primitive root exists")
}

/// The automorphism attached to X = [[x, y], [z, w]]:
/// α ↦ α^x β^z, β ↦ α^y β^w, γ ↦ γ^{det X}.
pub fn automorphism_of(m: &Mat2) -> impl Fn(Heis) -> Heis {
    let p = m.p as u32;
    let [x, y, z, w] = m.e.map(|v| v as i64);
    let img_a = Heis::new(p, x, z, 0);
    let img_b = Heis::new(p, y, w, 0);
    let det = m.det() as i64;
    move |h: Heis| {
        img_a
            .pow(h.r as u32)
            .mul(&img_b.pow(h.s as u32))
            .mul(&Heis::new(p, 0, 0, h.t as i64 * det))
    }
}

/// Checked variant of [`automorphism_of`] for raw matrix entries.
pub fn out_of_matrix(p: u32, e: [i64; 4]) -> Result<impl Fn(Heis) -> Heis> {
    let m = Mat2::new(p, e).map_err(|_| Error::InvalidElement(format!("singular matrix {e:?}")))?;
    Ok(automorphism_of(&m))
}

/// Q_i = ⟨γ, αβ^i⟩ for 0 ≤ i < p and Q_p = ⟨γ, β⟩, inside a native S.
pub fn line_subgroup(s: &Group, p: u32, i: u32) -> Subgroup {
    let v = line_vector(p, i);
    let gens: Vec<Idx> = [Heis::new(p, 0, 0, 1), Heis::new(p, v.0 as i64, v.1 as i64, 0)]
        .iter()
        .map(|h| s.index_of(&crate::group::Elem::Heis(*h)).unwrap())
        .collect();
    s.closure(&gens)
}

/// Spanning vector (r, s) of line i in S/Z = F_p².
pub fn line_vector(p: u32, i: u32) -> (u32, u32) {
    if i == p {
        (0, 1)
    } else {
        (1, i)
    }
}

/// Line index of the nonzero vector (r, s).
pub fn line_of(p: u32, v: (u32, u32)) -> u32 {
    if v.0 == 0 {
        p
    } else {
        let inv = crate::group::inv_mod(v.0, p);
        (v.1 * inv) % p
    }
}
