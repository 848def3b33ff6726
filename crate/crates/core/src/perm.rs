//! Signed permutations of the coordinates of ℝ⁷, i.e. the isometry group of
//! the lattice ℤ⁷ (the hyperoctahedral group of order 2⁷·7!).

use std::fmt;

use serde::Serialize;

use crate::forms::{LinearMap7, DIM};
use crate::rational::q;

/// `e_j ↦ signs[j] · e_{perm[j]}` (0-based internally).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedPermutation {
    perm: [u8; 7],
    signs: [i8; 7],
}

impl SignedPermutation {
    pub fn identity() -> Self {
        SignedPermutation {
            perm: [0, 1, 2, 3, 4, 5, 6],
            signs: [1; 7],
        }
    }

    /// `perm` maps 0-based coordinates; `signs` entries must be ±1.
    pub fn new(perm: [u8; 7], signs: [i8; 7]) -> Option<Self> {
        let mut seen = [false; 7];
        for &p in &perm {
            if p as usize >= DIM || seen[p as usize] {
                return None;
            }
            seen[p as usize] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return None;
        }
        Some(SignedPermutation { perm, signs })
    }

    pub fn diagonal(signs: [i8; 7]) -> Self {
        SignedPermutation::new([0, 1, 2, 3, 4, 5, 6], signs).expect("diagonal signs must be ±1")
    }

    pub fn perm(&self) -> [u8; 7] {
        self.perm
    }

    pub fn signs(&self) -> [i8; 7] {
        self.signs
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    /// Matrix entry `M[row][col]`.
    pub fn entry(&self, row: usize, col: usize) -> i8 {
        if self.perm[col] as usize == row {
            self.signs[col]
        } else {
            0
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let mut perm = [0u8; 7];
        let mut signs = [1i8; 7];
        for j in 0..DIM {
            let mid = other.perm[j] as usize;
            perm[j] = self.perm[mid];
            signs[j] = other.signs[j] * self.signs[mid];
        }
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut perm = [0u8; 7];
        let mut signs = [1i8; 7];
        for j in 0..DIM {
            let i = self.perm[j] as usize;
            perm[i] = j as u8;
            signs[i] = self.signs[j];
        }
        SignedPermutation { perm, signs }
    }

    /// Row `i` of the matrix as (column, negated): `(M v)_i = ±v_col`.
    pub fn row_images(&self) -> [(usize, bool); 7] {
        let mut rows = [(0usize, false); 7];
        for j in 0..DIM {
            rows[self.perm[j] as usize] = (j, self.signs[j] < 0);
        }
        rows
    }

    pub fn to_linear_map(&self) -> LinearMap7 {
        LinearMap7(std::array::from_fn(|i| std::array::from_fn(|j| q(self.entry(i, j) as i64))))
    }

    /// All 2⁷·7! = 645,120 signed permutations, in a fixed order.
    pub fn all() -> impl Iterator<Item = SignedPermutation> {
        permutations7()
            .into_iter()
            .flat_map(|perm| {
                (0u8..128).map(move |mask| SignedPermutation {
                    perm,
                    signs: std::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 }),
                })
            })
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // image of each basis vector, e.g. "(+1 -3 +2 …)"
        let parts: Vec<String> = (0..DIM)
            .map(|j| format!("{}{}", if self.signs[j] < 0 { '-' } else { '+' }, self.perm[j] + 1))
            .collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// All permutations of 0..7 in lexicographic order.
fn permutations7() -> Vec<[u8; 7]> {
    let mut out = Vec::with_capacity(5040);
    let mut p: [u8; 7] = [0, 1, 2, 3, 4, 5, 6];
    loop {
        out.push(p);
        let Some(i) = (0..6).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..7).rev().find(|&j| p[j] > p[i]).expect("successor exists");
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_hyperoctahedral_group() {
        assert_eq!(permutations7().len(), 5040);
        assert_eq!(SignedPermutation::all().count(), 645_120);
    }

    #[test]
    fn composition_matches_matrix_product() {
        let a = SignedPermutation::new([1, 0, 2, 4, 3, 6, 5], [1, -1, 1, 1, -1, -1, 1]).unwrap();
        let b = SignedPermutation::new([6, 5, 4, 3, 2, 1, 0], [-1, 1, 1, -1, 1, 1, -1]).unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.to_linear_map(), a.to_linear_map().compose(&b.to_linear_map()));
        assert_eq!(a.compose(&a.inverse()), SignedPermutation::identity());
        assert_eq!(b.inverse().compose(&b), SignedPermutation::identity());
    }

    #[test]
    fn rejects_invalid() {
        assert!(SignedPermutation::new([0, 0, 2, 3, 4, 5, 6], [1; 7]).is_none());
        assert!(SignedPermutation::new([0, 1, 2, 3, 4, 5, 7], [1; 7]).is_none());
        assert!(SignedPermutation::new([0, 1, 2, 3, 4, 5, 6], [1, 1, 1, 1, 1, 1, 0]).is_none());
    }
}
