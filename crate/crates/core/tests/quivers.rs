mod common;

use common::*;
use cyclic_moduli::{CyclicQuiver, Error};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn eta_matches_listed_words() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..150 {
        let n = rng.gen_range(2..=5);
        let t = rng.gen_range(0..=12 / n as i64);
        let quiver = admissible_quiver(&mut rng, n, t);
        let parts: Vec<usize> = quiver.map_degrees().iter().map(|&d| d as usize).collect();
        assert_eq!(quiver.eta(), brute_multinomial(&parts), "{quiver:?}");
    }
}

#[test]
fn dimension_identities() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let t = rng.gen_range(0..=6);
        let quiver = admissible_quiver(&mut rng, n, t);
        let d = quiver.moduli_descriptor();
        assert_eq!(d.moduli_dim, d.rep_dim - (n as i64 - 1));
        assert_eq!(d.nilcone_dims.iter().sum::<i64>() + d.bundle_rank, d.moduli_dim);
        assert_eq!(d.moduli_dim, n as i64 * t + 1);
    }
}

#[test]
fn canonical_rotation_lets_last_map_vanish() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..300 {
        let quiver = any_quiver(&mut rng, 6);
        match quiver.reindex_canonical() {
            Ok(c) => {
                assert!(quiver.admits_stable());
                assert!((0..quiver.n()).any(|r| {
                    let mut rotated = quiver.degrees().to_vec();
                    rotated.rotate_left(r);
                    rotated == c.degrees()
                }));
                if quiver.is_coprime() {
                    // the chain with φ_n = 0 must be stable
                    let limit = random_rep(&mut rng, &c, 0.0).flow_limit();
                    assert!(limit.is_stable(), "{c:?}");
                }
            }
            Err(e) => {
                assert_eq!(e, Error::NoStableIndexing);
                assert!(!quiver.admits_stable());
            }
        }
    }
}

proptest! {
    #[test]
    fn reindex_is_idempotent(t in 0i64..=4, degrees in prop::collection::vec(-4i64..=4, 2..=6)) {
        let quiver = CyclicQuiver::new(t, degrees).unwrap();
        if let Ok(c) = quiver.reindex_canonical() {
            prop_assert_eq!(c.reindex_canonical().unwrap(), c.clone());
            prop_assert!(c.is_canonical());
            prop_assert_eq!(c.eta(), quiver.eta());
        }
    }

    #[test]
    fn eta_is_rotation_invariant(t in 0i64..=4, degrees in prop::collection::vec(-3i64..=3, 2..=5), r in 0usize..5) {
        let mut rotated = degrees.clone();
        let len = rotated.len();
        rotated.rotate_left(r % len);
        prop_assert_eq!(
            CyclicQuiver::new(t, degrees).unwrap().eta(),
            CyclicQuiver::new(t, rotated).unwrap().eta()
        );
    }
}
