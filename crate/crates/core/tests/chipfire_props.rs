mod common;

use chipfas::chipfire::{
    active_vertices, fire, is_stable, stabilize, stabilize_with, FiringPolicy,
    DEFAULT_STEP_BUDGET,
};
use chipfas::Error;
use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn policies_agree_with_odometers(seed: u64, policy_seed: u64) {
        let mut r = rng(seed);
        let (g, s) = global_sink(&mut r, 8);
        let c = random_configuration(&mut r, &g, s);
        let base = stabilize(&g, &c).unwrap();
        let mut policies = FiringPolicy::ALL_DETERMINISTIC.to_vec();
        policies.push(FiringPolicy::Random { seed: policy_seed });
        for p in policies {
            prop_assert_eq!(&stabilize_with(&g, &c, p, DEFAULT_STEP_BUDGET).unwrap(), &base);
        }
    }

    #[test]
    fn chips_lost_only_to_the_sink(seed: u64) {
        let mut r = rng(seed);
        let (g, s) = global_sink(&mut r, 8);
        let c = random_configuration(&mut r, &g, s);
        let (stable, odo) = stabilize(&g, &c).unwrap();
        let lost: u128 = (0..g.n())
            .map(|v| odo.get(v) as u128 * g.out_neighbors(v).iter().filter(|&&w| w == s).count() as u128)
            .sum();
        prop_assert_eq!(stable.total(), c.total() - lost);
        prop_assert!(is_stable(&g, &stable));
    }

    #[test]
    fn stabilize_is_a_projection(seed: u64) {
        let mut r = rng(seed);
        let (g, s) = global_sink(&mut r, 8);
        let (stable, _) = stabilize(&g, &random_configuration(&mut r, &g, s)).unwrap();
        let (again, odo) = stabilize(&g, &stable).unwrap();
        prop_assert_eq!(again, stable);
        prop_assert!(odo.is_zero());
    }

    #[test]
    fn only_active_vertices_fire(seed: u64) {
        let mut r = rng(seed);
        let (g, s) = global_sink(&mut r, 8);
        let c = random_configuration(&mut r, &g, s);
        let active = active_vertices(&g, &c);
        for v in (0..g.n()).filter(|&v| v != s) {
            let fired = fire(&g, &c, v);
            if active.contains(&v) {
                let next = fired.unwrap();
                prop_assert_eq!(next.get(v), c.get(v) - g.outdeg(v) as u64);
            } else {
                prop_assert_eq!(fired, Err(Error::IllegalFiring { vertex: v }));
            }
        }
    }
}
