use proptest::prelude::*;

use kummer_g2::census::{classify, reference, HolonomyAssignment, TargetElement, ASSIGNMENT_COUNT};

/// Applies a permutation of the labels {a, b, c} to every image.
fn relabel(rho: &HolonomyAssignment, perm: [usize; 3]) -> HolonomyAssignment {
    let images = rho.images().map(|t| match t.code() {
        0 => TargetElement::I,
        c => TargetElement::from_code(perm[c as usize - 1] as u8 + 1),
    });
    HolonomyAssignment::new(images)
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

proptest! {
    #[test]
    fn relabeling_preserves_classification(code in 0..ASSIGNMENT_COUNT, p in 0usize..6) {
        let rho = HolonomyAssignment::from_code(code);
        prop_assert_eq!(classify(&rho), classify(&relabel(&rho, PERMS[p])));
    }

    #[test]
    fn code_round_trip(code in 0..ASSIGNMENT_COUNT) {
        let rho = HolonomyAssignment::from_code(code);
        prop_assert_eq!(rho.code(), code);
        prop_assert_eq!(HolonomyAssignment::parse_letters(&rho.letters()).unwrap(), rho);
    }
}

#[test]
fn relabeling_preserves_counts_over_the_census() {
    for perm in PERMS {
        let (mut irr, mut rig, mut nonflat) = (0u64, 0u64, 0u64);
        for code in 0..ASSIGNMENT_COUNT {
            let c = classify(&relabel(&HolonomyAssignment::from_code(code), perm));
            irr += c.irreducible as u64;
            rig += c.rigid as u64;
            nonflat += (c.irreducible_and_rigid() && !c.flat_on_resolution) as u64;
        }
        assert_eq!(nonflat, 1_008_126, "{perm:?}");
        let base = (0..ASSIGNMENT_COUNT).map(|c| classify(&HolonomyAssignment::from_code(c)));
        let (bi, br) = base.fold((0u64, 0u64), |(i, r), c| (i + c.irreducible as u64, r + c.rigid as u64));
        assert_eq!((irr, rig), (bi, br));
    }
}

#[test]
fn sign_grid_matches_kernel_oracle_on_random_assignments() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let rho = HolonomyAssignment::from_code(rng.gen_range(0..ASSIGNMENT_COUNT));
        let c = classify(&rho);
        assert_eq!(c.irreducible, reference::so3_fixed_dim(&rho) == 0, "{rho}");
        assert_eq!(c.rigid, reference::tensor_fixed_dim(&rho) == 0, "{rho}");
    }
}
