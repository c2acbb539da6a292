//! Ordinary character degrees from the class algebra, computed over a prime
//! field F_q with q ≡ 1 (mod exp G).
//!
//! The central characters ω_χ(K_j) = |C_j| χ(g_j)/χ(1) are the common
//! eigenvectors of the class multiplication matrices. Once each common
//! eigenspace is one-dimensional, χ(1)² = |G| / Σ_k ω_k ω_{k*} / |C_k|.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::group::{is_prime, pow_mod, Group, Idx, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterDegreeMultiset {
    pub group_order: u64,
    /// degree → multiplicity
    pub degrees: BTreeMap<u64, usize>,
}

impl CharacterDegreeMultiset {
    pub fn count(&self) -> usize {
        self.degrees.values().sum()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.degrees.iter().map(|(d, m)| d * d * *m as u64).sum()
    }

    pub fn as_sorted_vec(&self) -> Vec<u64> {
        self.degrees
            .iter()
            .flat_map(|(&d, &m)| std::iter::repeat(d).take(m))
            .collect()
    }
}

/// Smallest prime q ≡ 1 (mod e) with q > 2√n.
pub fn working_prime(e: u64, n: u64) -> Result<u64> {
    let bound = 2.0 * (n as f64).sqrt();
    let limit = 1u64 << 40;
    let mut q = e + 1;
    while q <= limit {
        if q as f64 > bound && is_prime(q) {
            return Ok(q);
        }
        q += e;
    }
    Err(Error::NoWorkingPrime(limit))
}

fn inv_q(a: u64, q: u64) -> u64 {
    pow_mod(a, q - 2, q)
}

/// Exact degree multiset of H.
pub fn character_degrees(group: &Group, h: &Subgroup) -> Result<CharacterDegreeMultiset> {
    let n = h.order() as u64;
    if group.is_abelian(h) {
        return Ok(CharacterDegreeMultiset {
            group_order: n,
            degrees: BTreeMap::from([(1, h.order())]),
        });
    }
    let classes = group.classes(h);
    let r = classes.len();
    let mut class_of: HashMap<Idx, usize> = HashMap::with_capacity(h.order());
    for (i, c) in classes.iter().enumerate() {
        for &x in &c.members {
            class_of.insert(x, i);
        }
    }
    let q = working_prime(group.exponent(h), n)?;
    let sizes: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();
    let id_class = class_of[&group.identity()];
    let inv_class: Vec<usize> = classes.iter().map(|c| class_of[&group.inv(c.rep)]).collect();

    // mats[j][i][k] = #{x ∈ C_j : x⁻¹ z_k ∈ C_i}
    let mut mats = vec![vec![vec![0u64; r]; r]; r];
    for (k, ck) in classes.iter().enumerate() {
        let z = ck.rep;
        for (j, cj) in classes.iter().enumerate() {
            for &x in &cj.members {
                let i = class_of[&group.mul(group.inv(x), z)];
                mats[j][i][k] += 1;
            }
        }
    }
    for m in mats.iter_mut() {
        for row in m.iter_mut() {
            for v in row.iter_mut() {
                *v %= q;
            }
        }
    }

    let eigvecs = common_eigenvectors(&mats, q)?;
    if eigvecs.len() != r {
        return Err(Error::Input(format!(
            "degree engine separated {} of {r} characters",
            eigvecs.len()
        )));
    }
    let mut degrees = BTreeMap::new();
    for v in eigvecs {
        let s = inv_q(v[id_class], q);
        let w: Vec<u64> = v.iter().map(|x| x * s % q).collect();
        let mut acc = 0u64;
        for k in 0..r {
            acc = (acc + w[k] * w[inv_class[k]] % q * inv_q(sizes[k] % q, q)) % q;
        }
        let sq = n % q * inv_q(acc, q) % q;
        let d = (1..=((n as f64).sqrt() as u64 + 1))
            .find(|d| d * d % q == sq)
            .ok_or_else(|| Error::Input("no integer square root for a degree".into()))?;
        *degrees.entry(d).or_insert(0) += 1;
    }
    let out = CharacterDegreeMultiset { group_order: n, degrees };
    if out.sum_of_squares() != n {
        return Err(Error::Input(format!(
            "degree engine inconsistency: Σd² = {} ≠ {n}",
            out.sum_of_squares()
        )));
    }
    Ok(out)
}

/// A subspace of F_q^r in reduced row-echelon form.
struct Space {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

fn rref(mut rows: Vec<Vec<u64>>, q: u64) -> Space {
    let mut pivots = Vec::new();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(rank, pr);
        let inv = inv_q(rows[rank][col], q);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % q;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let f = rows[i][col];
                for c in 0..ncols {
                    rows[i][c] = (rows[i][c] + q * q - f * rows[rank][c] % q) % q;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Space { rows, pivots }
}

/// Restriction of M (acting on column vectors) to an invariant subspace, in the
/// subspace's row basis.
fn restrict(m: &[Vec<u64>], sp: &Space, q: u64) -> Vec<Vec<u64>> {
    let d = sp.rows.len();
    let mut out = vec![vec![0u64; d]; d];
    for (i, b) in sp.rows.iter().enumerate() {
        for (l, &pl) in sp.pivots.iter().enumerate() {
            let v = m[pl].iter().zip(b).fold(0u64, |acc, (x, y)| (acc + x * y) % q);
            out[l][i] = v;
        }
    }
    out
}

/// Characteristic polynomial det(xI − A), coefficients low to high, via
/// Hessenberg reduction.
fn charpoly(a: &[Vec<u64>], q: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    let sub = |x: u64, y: u64| (x + q - y % q) % q;
    for col in 0..n.saturating_sub(2) {
        let Some(piv) = (col + 1..n).find(|&i| h[i][col] != 0) else { continue };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for row in h.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        let inv = inv_q(h[col + 1][col], q);
        for i in col + 2..n {
            let f = h[i][col] * inv % q;
            if f == 0 {
                continue;
            }
            for c in 0..n {
                let t = f * h[col + 1][c] % q;
                h[i][c] = sub(h[i][c], t);
            }
            for row in h.iter_mut() {
                let t = f * row[i] % q;
                row[col + 1] = (row[col + 1] + t) % q;
            }
        }
    }
    // p_k = charpoly of the leading k×k block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // p_{k+1} = (x − h_kk) p_k − Σ_{i<k} h_{i,k} (Π_{j=i+1..k} h_{j,j−1}) p_i
        let mut next = vec![0u64; k + 2];
        for (i, &c) in polys[k].iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % q;
            next[i] = sub(next[i], h[k][k] * c % q);
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = prod * h[i + 1][i] % q;
            let f = h[i][k] * prod % q;
            if f == 0 {
                continue;
            }
            for (t, &c) in polys[i].iter().enumerate() {
                next[t] = sub(next[t], f * c % q);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn roots(poly: &[u64], q: u64) -> Vec<u64> {
    (0..q)
        .filter(|&x| poly.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % q) == 0)
        .collect()
}

/// Null space of a d×d matrix (rows), as row vectors.
fn null_space(a: &[Vec<u64>], q: u64) -> Vec<Vec<u64>> {
    let d = a.len();
    let sp = rref(a.to_vec(), q);
    let free: Vec<usize> = (0..d).filter(|c| !sp.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; d];
            v[f] = 1;
            for (row, &pc) in sp.rows.iter().zip(&sp.pivots) {
                v[pc] = (q - row[f]) % q;
            }
            v
        })
        .collect()
}

/// Split `sp` into eigenspaces of M; returns None if M acts as a scalar.
fn split(m: &[Vec<u64>], sp: &Space, q: u64) -> Option<Vec<Space>> {
    let d = sp.rows.len();
    let r = restrict(m, sp, q);
    let cp = charpoly(&r, q);
    let lambdas = roots(&cp, q);
    if lambdas.len() <= 1 {
        return None;
    }
    let mut out = Vec::new();
    for l in lambdas {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|i| (0..d).map(|j| (r[i][j] + if i == j { q - l } else { 0 }) % q).collect())
            .collect();
        let coords = null_space(&shifted, q);
        let vecs: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                let mut v = vec![0u64; sp.rows[0].len()];
                for (coef, b) in c.iter().zip(&sp.rows) {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = (*x + coef * y) % q;
                    }
                }
                v
            })
            .collect();
        out.push(rref(vecs, q));
    }
    Some(out)
}

fn common_eigenvectors(mats: &[Vec<Vec<u64>>], q: u64) -> Result<Vec<Vec<u64>>> {
    let r = mats.len();
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    // Deterministic combination first; it usually separates everything at once.
    let mut comb = vec![vec![0u64; r]; r];
    let mut c = 1u64;
    for m in mats {
        c = (c * 7919 + 104_729) % q;
        for i in 0..r {
            for j in 0..r {
                comb[i][j] = (comb[i][j] + c * m[i][j]) % q;
            }
        }
    }
    let mut pending = vec![rref(identity, q)];
    let mut done = Vec::new();
    let order: Vec<&Vec<Vec<u64>>> = std::iter::once(&comb).chain(mats.iter()).collect();
    for m in order {
        let mut next = Vec::new();
        for sp in pending {
            if sp.rows.len() == 1 {
                done.push(sp);
                continue;
            }
            match split(m, &sp, q) {
                Some(parts) => next.extend(parts),
                None => next.push(sp),
            }
        }
        pending = next;
        if pending.is_empty() {
            break;
        }
    }
    done.extend(pending);
    if done.iter().any(|sp| sp.rows.len() != 1) {
        return Err(Error::Input("class matrices failed to separate characters".into()));
    }
    Ok(done.into_iter().map(|sp| sp.rows.into_iter().next().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;

    fn degs(g: &Group) -> Vec<u64> {
        character_degrees(g, &g.whole()).unwrap().as_sorted_vec()
    }

    #[test]
    fn small_groups() {
        assert_eq!(degs(&symmetric(3)), vec![1, 1, 2]);
        assert_eq!(degs(&symmetric(4)), vec![1, 1, 2, 3, 3]);
        assert_eq!(degs(&sl2(3)), vec![1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(degs(&gl2(3)), vec![1, 1, 2, 2, 2, 3, 3, 4]);
        assert_eq!(degs(&alternating(5)), vec![1, 3, 3, 4, 5]);
        assert_eq!(degs(&dihedral8()), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn extraspecial_degrees() {
        let s = extraspecial(7);
        let d = character_degrees(&s, &s.whole()).unwrap();
        assert_eq!(d.degrees, BTreeMap::from([(1, 49), (7, 6)]));
    }

    #[test]
    fn abelian_all_linear() {
        let c = perm_group(6, &[&[2, 3, 4, 5, 6, 1]]);
        assert_eq!(degs(&c), vec![1; 6]);
    }

    #[test]
    fn gl2_5_degrees() {
        let g = gl2(5);
        let d = character_degrees(&g, &g.whole()).unwrap();
        assert_eq!(d.sum_of_squares(), 480);
        assert_eq!(d.count(), g.class_count(&g.whole()));
        assert_eq!(d.degrees, BTreeMap::from([(1, 4), (4, 10), (5, 4), (6, 6)]));
    }

    #[test]
    fn working_primes() {
        assert_eq!(working_prime(6, 24).unwrap(), 13);
        assert_eq!(working_prime(2, 4).unwrap(), 5);
    }
}
