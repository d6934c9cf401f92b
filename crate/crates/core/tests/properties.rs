//! Property tests for the algebraic plumbing: randomized group
//! constructions, enumeration counts, and classical cohomology values for
//! cyclic data where closed forms are known.

use proptest::prelude::*;
use xcoh_core::cocycle::{all_cochains0, c0_inv_plain, c0_mul_braided, c0_mul_plain, Cochain0};
use xcoh_core::enumerate::PointedMapIter;
use xcoh_core::exact::classical_cohomology_oracle;
use xcoh_core::group::{make_semidirect, FiniteGroup, GroupAction, Side};
use xcoh_core::instances::built_ins;
use xcoh_core::Budget;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

proptest! {
    #[test]
    fn product_element_orders(n in 1usize..=6, m in 1usize..=6, a in 0usize..6, b in 0usize..6) {
        let (a, b) = (a % n, b % m);
        let gn = FiniteGroup::cyclic(n).unwrap();
        let gm = FiniteGroup::cyclic(m).unwrap();
        let p = FiniteGroup::direct_product(&gn, &gm);
        let idx = a * m + b;
        prop_assert_eq!(p.element_order(idx), lcm(gn.element_order(a), gm.element_order(b)));
    }

    #[test]
    fn trivial_semidirect_is_direct(n in 1usize..=5, h in 1usize..=5) {
        let gn = FiniteGroup::cyclic(n).unwrap();
        let gh = FiniteGroup::cyclic(h).unwrap();
        let act = GroupAction::trivial(&gh, &gn, Side::Left);
        let (sd, _, _) = make_semidirect(&gn, &gh, &act).unwrap();
        let dp = FiniteGroup::direct_product(&gn, &gh);
        for x in sd.elements() {
            for y in sd.elements() {
                prop_assert_eq!(sd.mul(x, y), dp.mul(x, y));
            }
        }
    }

    #[test]
    fn unfiltered_enumeration_counts(s in 1usize..=4, t in 1usize..=4) {
        let maps = PointedMapIter::new(s, t, |_| true, 1_000_000)
            .collect::<Result<Vec<_>, _>>()
            .unwrap();
        prop_assert_eq!(maps.len(), t.pow(s as u32 - 1));
    }

    #[test]
    fn cyclic_cohomology_closed_forms(n in 1usize..=4, m in 1usize..=6) {
        // for a trivial action of C_n on C_m:
        // |H^0| = m, |H^1| = |H^2| = gcd(n, m)
        let gamma = FiniteGroup::cyclic(n).unwrap();
        let a = FiniteGroup::cyclic(m).unwrap();
        let act = GroupAction::trivial(&gamma, &a, Side::Left);
        let h0 = classical_cohomology_oracle(&gamma, &a, &act, 0).unwrap();
        prop_assert_eq!(h0.order(), m);
        let h1 = classical_cohomology_oracle(&gamma, &a, &act, 1).unwrap();
        prop_assert_eq!(h1.order(), gcd(n, m));
        let h2 = classical_cohomology_oracle(&gamma, &a, &act, 2).unwrap();
        prop_assert_eq!(h2.order(), gcd(n, m));
    }

    #[test]
    fn plain_product_group_laws_on_random_triples(
        inst_idx in 0usize..17,
        picks in prop::collection::vec(0usize..64, 3),
    ) {
        let instances = built_ins();
        let inst = &instances[inst_idx % instances.len()];
        let all = all_cochains0(&inst.gx, Budget::default()).unwrap();
        let pick = |i: usize| -> &Cochain0 { &all[picks[i] % all.len()] };
        let (x, y, z) = (pick(0), pick(1), pick(2));
        let xy = c0_mul_plain(&inst.gx, x, y);
        prop_assert_eq!(
            c0_mul_plain(&inst.gx, &xy, z),
            c0_mul_plain(&inst.gx, x, &c0_mul_plain(&inst.gx, y, z))
        );
        let e = Cochain0::identity(&inst.gx);
        prop_assert_eq!(&c0_mul_plain(&inst.gx, x, &e), x);
        prop_assert_eq!(c0_mul_plain(&inst.gx, x, &c0_inv_plain(&inst.gx, x)), e);
    }

    #[test]
    fn braided_product_group_laws_on_random_triples(
        inst_idx in 0usize..17,
        picks in prop::collection::vec(0usize..64, 3),
    ) {
        let instances: Vec<_> = built_ins().into_iter().filter(|i| i.braiding.is_some()).collect();
        let inst = &instances[inst_idx % instances.len()];
        let br = inst.braiding.as_ref().unwrap();
        let all = all_cochains0(&inst.gx, Budget::default()).unwrap();
        let pick = |i: usize| -> &Cochain0 { &all[picks[i] % all.len()] };
        let (x, y, z) = (pick(0), pick(1), pick(2));
        let xy = c0_mul_braided(&inst.gx, br, x, y);
        prop_assert_eq!(
            c0_mul_braided(&inst.gx, br, &xy, z),
            c0_mul_braided(&inst.gx, br, x, &c0_mul_braided(&inst.gx, br, y, z))
        );
    }
}
