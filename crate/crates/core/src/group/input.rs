//! JSON group input: permutations as 1-based image lists, or 2×2 matrices mod p.

use serde::{Deserialize, Serialize};

use super::{Elem, Group, Mat2, Perm};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Perm { degree: usize, generators: Vec<Vec<u32>> },
    Mat2 { prime: u32, generators: Vec<[[i64; 2]; 2]> },
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
    }

    pub fn elements(&self) -> Result<Vec<Elem>> {
        match self {
            GroupSpec::Perm { degree, generators } => generators
                .iter()
                .map(|g| {
                    if g.len() != *degree {
                        return Err(Error::InvalidElement(format!(
                            "permutation {g:?} does not have degree {degree}"
                        )));
                    }
                    Perm::from_one_based(g).map(Elem::Perm)
                })
                .collect(),
            GroupSpec::Mat2 { prime, generators } => {
                if !super::is_prime(*prime as u64) {
                    return Err(Error::Input(format!("{prime} is not prime")));
                }
                generators
                    .iter()
                    .map(|m| Mat2::new(*prime, [m[0][0], m[0][1], m[1][0], m[1][1]]).map(Elem::Mat2))
                    .collect()
            }
        }
    }

    pub fn build(&self, cap: usize) -> Result<Group> {
        let gens = self.elements()?;
        if gens.is_empty() {
            return Err(Error::Input("no generators".into()));
        }
        Group::generate_capped(&gens, cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_perm_and_mat() {
        let g = GroupSpec::from_json(r#"{"kind":"perm","degree":4,"generators":[[2,3,4,1],[2,1,3,4]]}"#)
            .unwrap()
            .build(1000)
            .unwrap();
        assert_eq!(g.order(), 24);
        let m = GroupSpec::from_json(r#"{"kind":"mat2","prime":3,"generators":[[[2,0],[0,1]],[[2,1],[2,0]]]}"#)
            .unwrap()
            .build(1000)
            .unwrap();
        assert_eq!(m.order(), 48);
    }

    #[test]
    fn bad_inputs() {
        assert!(GroupSpec::from_json(r#"{"kind":"perm","degree":3,"generators":[[1,1,2]]}"#)
            .unwrap()
            .build(10)
            .is_err());
        assert!(GroupSpec::from_json(r#"{"kind":"mat2","prime":4,"generators":[[[1,0],[0,1]]]}"#)
            .unwrap()
            .build(10)
            .is_err());
        assert!(GroupSpec::from_json(r#"{"kind":"other"}"#).is_err());
    }
}
