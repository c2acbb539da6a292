//! Generator data for the nonconstrained fusion systems on p^{1+2}_+.

use serde::Serialize;

use super::primitive_root;
use crate::error::{Error, Result};
use crate::group::is_prime;

/// Largest prime accepted for the parametric PSL₃ families.
pub const MAX_GENERIC_PRIME: u32 = 13;

/// Shape of Out*_F(S) = Out_F(S) ∩ SL₂(p) as printed in the published table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OutStarShape {
    Cyclic,
    NonAbelian,
}

#[derive(Clone, Debug, Serialize)]
pub struct RvSpec {
    pub name: String,
    pub p: u32,
    /// Out_F(S) generators, row-major [a, b, c, d]
    pub generators: Vec<[i64; 4]>,
    /// radical line orbits: (representative line index, |Out_F(Q_i) : SL₂(p)|)
    pub radical: Vec<(u32, u64)>,
    /// stabilizer orders of the Out_F(S)-orbits on linear characters
    pub char_stabilizer_orders: Vec<u64>,
    /// stabilizer orders of the F-classes of noncentral elements outside radical lines
    pub element_stabilizer_orders: Vec<u64>,
    pub out_star_order: u64,
    /// `None` where the printed descriptor is an extension that fixes only the order
    pub out_star_shape: Option<OutStarShape>,
}

/// Names accepted by [`RvSpec::lookup`], in table order.
pub const SYSTEM_NAMES: [&str; 17] = [
    "PSL3", "PSL3:2", "PSL3:3", "PSL3:S3", "2F4(2)'", "J4", "Th", "He", "He:2", "Fi24'", "Fi24", "RV1",
    "ON", "ON:2", "RV2", "RV2:2", "M",
];

type SporadicRow = (u32, Vec<[i64; 4]>, Vec<(u32, u64)>, Vec<u64>, Vec<u64>, u64, OutStarShape);

fn sporadic(name: &str) -> Option<SporadicRow> {
    use OutStarShape::*;
    let d = |a: i64, b: i64| [a, 0, 0, b];
    let row = match name {
        "2F4(2)'" => (3, vec![d(2, 1), d(1, 2), [0, 1, 1, 0]], vec![(0, 2), (1, 2)], vec![8, 2, 2], vec![], 4, Cyclic),
        "J4" => (3, vec![d(2, 1), d(1, 2), [1, 2, 2, 2]], vec![(0, 2)], vec![16, 2], vec![], 8, NonAbelian),
        "Th" => (5, vec![d(2, 1), d(1, 2), [3, 3, 4, 1]], vec![(0, 4)], vec![96, 4], vec![], 24, NonAbelian),
        "He" => (7, vec![d(2, 1), d(1, 2), [0, 6, 6, 0]], vec![(1, 1)], vec![18, 3, 3, 1, 2, 2], vec![3, 3, 2, 2], 3, Cyclic),
        "He:2" => (7, vec![d(2, 1), d(3, 3), [0, 1, 1, 0]], vec![(1, 2)], vec![36, 3, 2, 2], vec![3, 2], 6, Cyclic),
        "Fi24'" => (7, vec![d(2, 1), d(3, 3), [0, 6, 6, 0]], vec![(1, 2), (3, 2)], vec![36, 3, 2, 2], vec![3], 6, Cyclic),
        "Fi24" => (7, vec![d(3, 1), d(1, 3), [0, 1, 1, 0]], vec![(1, 2)], vec![72, 6, 2], vec![6], 12, NonAbelian),
        "RV1" => (7, vec![d(3, 1), d(1, 3), [0, 1, 1, 0]], vec![(0, 6), (1, 2)], vec![72, 6, 2], vec![], 12, NonAbelian),
        "ON" => (7, vec![d(3, 3), d(1, 6), [0, 2, 3, 0]], vec![(0, 2), (3, 2)], vec![24, 2, 1, 2], vec![1], 4, Cyclic),
        "ON:2" => (7, vec![d(3, 3), d(1, 6), [2, 4, 6, 2]], vec![(0, 2)], vec![48, 2, 2], vec![2], 8, Cyclic),
        "RV2" => (7, vec![d(3, 3), d(1, 6), [2, 4, 6, 2]], vec![(0, 2), (1, 2)], vec![48, 2, 2], vec![], 8, Cyclic),
        "RV2:2" => (7, vec![d(3, 3), d(1, 6), [2, 1, 5, 2]], vec![(0, 2)], vec![96, 2], vec![], 16, NonAbelian),
        "M" => (13, vec![d(1, 8), d(2, 2), [10, 9, 5, 2]], vec![(0, 4)], vec![288, 4, 3], vec![3], 24, NonAbelian),
        _ => return None,
    };
    Some(row)
}

impl RvSpec {
    /// The catalog system `name` at the prime p.
    pub fn lookup(name: &str, p: u32) -> Result<RvSpec> {
        if let Some((q, generators, radical, chars, elems, star, shape)) = sporadic(name) {
            if q != p {
                return Err(Error::UnknownSystem(format!("{name} exists only at p = {q}")));
            }
            return Ok(RvSpec {
                name: name.to_string(),
                p,
                generators,
                radical,
                char_stabilizer_orders: chars,
                element_stabilizer_orders: elems,
                out_star_order: star,
                out_star_shape: Some(shape),
            });
        }
        generic(name, p)
    }

    pub fn is_generic(name: &str) -> bool {
        name.starts_with("PSL3")
    }

    /// Does 3 divide p − 1 (which selects the variant of the parametric rows)?
    pub fn three_divides(&self) -> bool {
        (self.p - 1) % 3 == 0
    }
}

fn generic(name: &str, p: u32) -> Result<RvSpec> {
    if !SYSTEM_NAMES.contains(&name) {
        return Err(Error::UnknownSystem(name.to_string()));
    }
    if p < 3 || p > MAX_GENERIC_PRIME || !is_prime(p as u64) {
        return Err(Error::UnknownSystem(format!("{name} at p = {p}: unsupported prime")));
    }
    let w = primitive_root(p) as i64;
    let q = p as u64 - 1;
    let three = q % 3 == 0;
    let w3 = (w * w * w) % p as i64;
    let d = |a: i64, b: i64| [a, 0, 0, b];
    let swap = [0, 1, 1, 0];
    use OutStarShape::*;
    let (generators, radical, chars, elems, star, shape) = match (name, three) {
        ("PSL3", false) | ("PSL3:3", true) => (
            vec![d(w, 1), d(1, w)],
            vec![(0, q), (p, q)],
            vec![q * q, q, q, 1],
            vec![1],
            q,
            Some(Cyclic),
        ),
        ("PSL3:2", false) | ("PSL3:S3", true) => (
            vec![d(w, 1), d(1, w), swap],
            vec![(0, q)],
            vec![2 * q * q, q, 2],
            vec![2],
            2 * q,
            None,
        ),
        ("PSL3", true) => (
            vec![d(w3, 1), d(w, w)],
            vec![(0, q / 3), (p, q / 3)],
            vec![q * q / 3, q / 3, q / 3, 1, 1, 1],
            vec![1, 1, 1],
            q / 3,
            Some(Cyclic),
        ),
        ("PSL3:2", true) => (
            vec![d(w3, 1), d(w, w), swap],
            vec![(0, q / 3)],
            vec![2 * q * q / 3, q / 3, 2, 1],
            vec![2, 1],
            2 * q / 3,
            None,
        ),
        _ => {
            return Err(Error::UnknownSystem(format!(
                "{name} requires 3 | p − 1, which fails at p = {p}"
            )))
        }
    };
    Ok(RvSpec {
        name: name.to_string(),
        p,
        generators,
        radical,
        char_stabilizer_orders: chars,
        element_stabilizer_orders: elems,
        out_star_order: star,
        out_star_shape: shape,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        assert_eq!(RvSpec::lookup("RV1", 7).unwrap().generators.len(), 3);
        assert!(matches!(RvSpec::lookup("RV1", 5), Err(Error::UnknownSystem(_))));
        assert!(RvSpec::lookup("PSL3:3", 5).is_err());
        assert!(RvSpec::lookup("PSL3:3", 7).is_ok());
        assert!(RvSpec::lookup("PSL3", 9).is_err());
        assert!(RvSpec::lookup("Foo", 7).is_err());
        let s = RvSpec::lookup("PSL3", 13).unwrap();
        assert!(s.three_divides());
        assert_eq!(s.radical, vec![(0, 4), (13, 4)]);
    }
}
