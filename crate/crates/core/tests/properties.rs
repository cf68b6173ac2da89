use freeprod::automorphism::{AutWord, Letter};
use freeprod::covering::{build_cover, free_basis};
use freeprod::restriction::restrict;
use freeprod::{GroupSpec, SubgroupSpec, Word};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn groups() -> Vec<GroupSpec> {
    vec![
        GroupSpec::coxeter(3),
        GroupSpec::coxeter(4),
        GroupSpec::with_cyclic(1, &[3]).unwrap(),
        GroupSpec::with_cyclic(2, &[3, 3]).unwrap(),
        GroupSpec::with_cyclic(0, &[2, 3, 4]).unwrap(),
        GroupSpec::free(2),
    ]
}

fn word(g: &GroupSpec, seed: u64, len: usize) -> Word {
    g.random_word(&mut ChaCha8Rng::seed_from_u64(seed), len, 3)
}

fn aut(g: &GroupSpec, seed: u64, len: usize) -> AutWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = g.standard_generators();
    AutWord::from_letters(
        (0..len)
            .map(|_| Letter::new(gens.choose(&mut rng).unwrap().clone(), if rng.gen_bool(0.5) { 1 } else { -1 }))
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(gi in 0usize..6, s in any::<u64>(), l in 0usize..8) {
        let g = &groups()[gi];
        let (x, y, z) = (word(g, s, l), word(g, s ^ 1, l), word(g, s ^ 2, l));
        prop_assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
        prop_assert!(g.mul(&x, &g.invert(&x)).is_identity());
        prop_assert!(g.validate_word(&g.mul(&x, &y)).is_ok());
    }

    #[test]
    fn automorphisms_invert(gi in 0usize..6, s in any::<u64>(), l in 0usize..4, wl in 0usize..8) {
        let g = &groups()[gi];
        let a = aut(g, s, l);
        let w = word(g, s ^ 7, wl);
        prop_assert_eq!(g.apply(&a.inverse(), &g.apply(&a, &w)), w.clone());
        let v = word(g, s ^ 9, wl);
        prop_assert_eq!(g.apply(&a, &g.mul(&w, &v)), g.mul(&g.apply(&a, &w), &g.apply(&a, &v)));
    }

    #[test]
    fn images_of_n_stay_in_n(s in any::<u64>(), l in 0usize..4, wl in 0usize..8) {
        for (g, r) in [(GroupSpec::coxeter(4), 2), (GroupSpec::with_cyclic(2, &[3, 3]).unwrap(), 3)] {
            let n = SubgroupSpec::Uniform(r);
            let w = word(&g, s, wl);
            let a = aut(&g, s ^ 3, l);
            prop_assert_eq!(g.in_subgroup(&w, &n), g.in_subgroup(&g.apply(&a, &w), &n));
        }
    }

    #[test]
    fn rewriting_round_trips(s in any::<u64>(), wl in 0usize..10) {
        let g = GroupSpec::with_cyclic(1, &[3, 3]).unwrap();
        let n = SubgroupSpec::Uniform(3);
        let b = free_basis(&build_cover(&g, &n).unwrap()).unwrap();
        let w = word(&g, s, wl);
        let p = g.pow(&w, 3);
        prop_assert!(g.in_subgroup(&p, &n));
        prop_assert_eq!(b.evaluate(&b.rewrite(&p).unwrap()), p.clone());
        let q = g.commutator(&w, &word(&g, s ^ 5, wl));
        prop_assert_eq!(b.evaluate(&b.rewrite(&q).unwrap()), q);
    }

    #[test]
    fn restriction_is_multiplicative(s in any::<u64>(), l1 in 0usize..3, l2 in 0usize..3) {
        let g = GroupSpec::coxeter(3);
        let b = free_basis(&build_cover(&g, &SubgroupSpec::Uniform(2)).unwrap()).unwrap();
        let (x, y) = (aut(&g, s, l1), aut(&g, s ^ 4, l2));
        let lhs = restrict(&x.compose(&y), &b).unwrap();
        let rhs = restrict(&x, &b).unwrap().compose(&restrict(&y, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs.images, rhs.images);
    }
}
