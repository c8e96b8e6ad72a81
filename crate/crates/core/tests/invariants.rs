mod common;

use common::{random_generator, random_monomial, random_type};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use z4class::weights::{enumerator, weight_profile, EnumeratorKind};
use z4class::{apply_monomial, dual, inner_product, residue, span};

fn code_params() -> impl Strategy<Value = (u64, usize)> {
    (any::<u64>(), 1usize..=6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dual_is_an_involution((seed, n) in code_params()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (k1, k2) = random_type(&mut rng, n);
        let g = random_generator(&mut rng, n, k1, k2);
        let c = span(&g);
        let d = dual(&g);
        let dc = d.code();
        prop_assert_eq!(c.size() * dc.size(), 1usize << (2 * n));
        for x in c.generators() {
            for y in dc.generators() {
                prop_assert_eq!(inner_product(&x, &y).unwrap().value(), 0);
            }
        }
        let dd = dual(&d.generator).code().map_coordinates(&d.coordinate_order).unwrap();
        prop_assert_eq!(dd, c);
    }

    #[test]
    fn enumerators_survive_monomials((seed, n) in code_params()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (k1, k2) = random_type(&mut rng, n);
        let c = span(&random_generator(&mut rng, n, k1, k2));
        let moved = apply_monomial(&c, &random_monomial(&mut rng, n)).unwrap();
        for kind in [EnumeratorKind::Hamming, EnumeratorKind::Lee, EnumeratorKind::Symmetrized] {
            prop_assert_eq!(enumerator(&c, kind), enumerator(&moved, kind));
        }
        prop_assert_eq!(weight_profile(&c), weight_profile(&moved));
    }

    #[test]
    fn residue_is_the_mod_two_image((seed, n) in code_params()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (k1, k2) = random_type(&mut rng, n);
        let g = random_generator(&mut rng, n, k1, k2);
        let res = residue(&g);
        prop_assert_eq!(res.dimension(), k1);
        let mut images: Vec<Vec<u8>> = span(&g).codewords().iter()
            .map(|w| w.entries().iter().map(|x| x.value() & 1).collect())
            .collect();
        images.sort();
        images.dedup();
        let mut words = res.codewords();
        words.sort();
        prop_assert_eq!(images, words);
    }

    #[test]
    fn weight_order_holds((seed, n) in code_params()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (k1, k2) = random_type(&mut rng, n);
        let p = weight_profile(&span(&random_generator(&mut rng, n, k1, k2)));
        prop_assert!(p.d_h <= p.d_l && p.d_l <= p.d_e);
    }
}
