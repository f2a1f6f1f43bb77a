mod common;

use common::{brute_dual, g2c5_pairing, g2c5_partitions, random_pointed_cone, v};
use nefkit::cones::{dual_cone, identity, CycleDataset};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn pieri_oracle_reproduces_shipped_grassmannian_data() {
    let ds = CycleDataset::grassmannian_g2c5();
    assert_eq!(ds.classes().len(), 10);
    let label = |(a, b): (u32, u32)| format!("sigma({a},{b})");
    let mut checked = 0;
    for lambda in g2c5_partitions() {
        for mu in g2c5_partitions() {
            if lambda.0 + lambda.1 + mu.0 + mu.1 != 6 {
                continue;
            }
            let expected = g2c5_pairing(lambda, mu);
            assert_eq!(expected, g2c5_pairing(mu, lambda));
            assert_eq!(ds.pair(&label(lambda), &label(mu)).unwrap(), expected.into());
            // Poincare duality in the 2 x 3 box
            let dual = (3 - mu.1, 3 - mu.0);
            assert_eq!(expected, i64::from(lambda == dual));
            checked += 1;
        }
    }
    assert!(checked >= 10);
}

#[test]
fn pieri_sanity() {
    // sigma_1^6 = 5 on G(2,5)
    let mut x: std::collections::BTreeMap<(u32, u32), i64> = [((0, 0), 1)].into_iter().collect();
    for _ in 0..6 {
        let mut next = std::collections::BTreeMap::new();
        for (&l, &c) in &x {
            for nu in common::pieri(l, 1) {
                *next.entry(nu).or_default() += c;
            }
        }
        x = next;
    }
    assert_eq!(x[&(3, 3)], 5);
}

#[test]
fn dual_matches_brute_force_in_low_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..200 {
        let d = 2 + round % 2;
        let gens = random_pointed_cone(&mut rng, d);
        let dual = dual_cone(&gens, &identity(d)).unwrap();
        assert_eq!(dual.generators(), brute_dual(&gens).as_slice(), "{gens:?}");
    }
}

#[test]
fn dual_of_dual_on_a_hexagonal_cone() {
    let gens = vec![
        v(&[2, 0, 1]),
        v(&[1, 2, 1]),
        v(&[-1, 2, 1]),
        v(&[-2, 0, 1]),
        v(&[-1, -2, 1]),
        v(&[1, -2, 1]),
        v(&[0, 0, 1]),
    ];
    let dual = dual_cone(&gens, &identity(3)).unwrap();
    assert_eq!(dual.generators().len(), 6);
    let back = dual_cone(dual.generators(), &identity(3)).unwrap();
    let mut expected = gens[..6].to_vec();
    expected.sort();
    assert_eq!(back.generators(), expected.as_slice());
}
