//! Built-in desk-scale coefficient instances used by the verification
//! suites and the CLI selftest.

use crate::error::Result;
use crate::group::{FiniteGroup, GroupAction, GroupHom, GroupRef, Side};
use crate::xmod::{Braiding, BraidingLevel, CrossedModule, GammaCrossedModule};

pub struct Instance {
    pub name: &'static str,
    pub gx: GammaCrossedModule,
    pub braiding: Option<Braiding>,
    /// highest braiding level the attached bracket satisfies
    pub level: Option<BraidingLevel>,
}

impl Instance {
    pub fn symmetric(&self) -> bool {
        matches!(
            self.level,
            Some(BraidingLevel::Symmetric | BraidingLevel::Picard)
        )
    }
}

fn cyc(n: usize) -> GroupRef {
    FiniteGroup::cyclic(n).expect("positive order")
}

fn klein() -> GroupRef {
    let c2 = cyc(2);
    FiniteGroup::direct_product(&c2, &c2)
}

/// The order-3 automorphism of C2 x C2 cycling the involutions 1 -> 2 -> 3.
fn klein_rotation(gamma: &GroupRef, v4: &GroupRef) -> Result<GroupAction> {
    let step = [0usize, 2, 3, 1];
    GroupAction::from_fn(gamma, v4, Side::Left, |s, x| {
        let mut v = x;
        for _ in 0..s {
            v = step[v];
        }
        v
    })
}

/// The factor swap on C2 x C2 as a C2-action.
fn klein_swap(gamma: &GroupRef, v4: &GroupRef) -> Result<GroupAction> {
    GroupAction::from_fn(gamma, v4, Side::Left, |s, x| {
        if s == 0 {
            x
        } else {
            (x % 2) * 2 + x / 2
        }
    })
}

fn discrete_kernel_instance(
    name: &'static str,
    a: GroupRef,
    gamma: GroupRef,
    act1: GroupAction,
) -> Instance {
    let base = CrossedModule::discrete_kernel(&a);
    let one = base.g0.clone();
    let braiding = Some(Braiding::trivial(&base));
    let gx = GammaCrossedModule::new(
        base,
        gamma.clone(),
        act1,
        GroupAction::trivial(&gamma, &one, Side::Left),
    )
    .expect("valid instance");
    Instance {
        name,
        gx,
        braiding,
        level: Some(BraidingLevel::Picard),
    }
}

fn discrete_quotient_instance(
    name: &'static str,
    g: GroupRef,
    gamma: GroupRef,
    act0: GroupAction,
) -> Instance {
    let base = CrossedModule::discrete_quotient(&g);
    let one = base.g1.clone();
    let braiding = if g.is_abelian() {
        Some(Braiding::trivial(&base))
    } else {
        None
    };
    let level = braiding.as_ref().map(|_| BraidingLevel::Picard);
    let gx = GammaCrossedModule::new(
        base,
        gamma.clone(),
        GroupAction::trivial(&gamma, &one, Side::Left),
        act0,
    )
    .expect("valid instance");
    Instance {
        name,
        gx,
        braiding,
        level,
    }
}

/// [C2 ->0 C2] with the multiplicative bracket {a,b} = ab: symmetric but
/// not Picard.
pub fn braided_z2() -> Instance {
    let c2 = cyc(2);
    let base = CrossedModule::new(
        "[C2->C2]",
        c2.clone(),
        c2.clone(),
        GroupHom::trivial(&c2, &c2),
        GroupAction::trivial(&c2, &c2, Side::Right),
    )
    .expect("valid");
    let braiding = Braiding::from_fn(&base, |g, h| g & h);
    let gx = GammaCrossedModule::with_trivial_action(base, &c2);
    Instance {
        name: "z2-mul",
        gx,
        braiding: Some(braiding),
        level: Some(BraidingLevel::Symmetric),
    }
}

/// [C4 -> C4, x2] with the bracket {g,h} = 2 for g,h both odd.
pub fn times2(nontrivial_action: bool) -> Instance {
    let c4 = cyc(4);
    let base = CrossedModule::new(
        "[C4->C4 x2]",
        c4.clone(),
        c4.clone(),
        GroupHom::new(c4.clone(), c4.clone(), vec![0, 2, 0, 2]).expect("x2"),
        GroupAction::trivial(&c4, &c4, Side::Right),
    )
    .expect("valid");
    let braiding = Braiding::from_fn(&base, |g, h| if g % 2 == 1 && h % 2 == 1 { 2 } else { 0 });
    let gamma = cyc(2);
    let gx = if nontrivial_action {
        let act1 = GroupAction::inversion(&gamma, &c4, Side::Left).expect("inversion");
        let act0 = GroupAction::inversion(&gamma, &c4, Side::Left).expect("inversion");
        GammaCrossedModule::new(base, gamma, act1, act0).expect("valid instance")
    } else {
        GammaCrossedModule::with_trivial_action(base, &gamma)
    };
    Instance {
        name: if nontrivial_action {
            "times2-inv"
        } else {
            "times2"
        },
        gx,
        braiding: Some(braiding),
        level: Some(BraidingLevel::Symmetric),
    }
}

/// [C4 ->id C4], the inner crossed-module of C4, with the trivial bracket.
pub fn inner_c4() -> Instance {
    let c4 = cyc(4);
    let base = CrossedModule::inner(&c4);
    let braiding = Some(Braiding::trivial(&base));
    let gx = GammaCrossedModule::with_trivial_action(base, &cyc(2));
    Instance {
        name: "inner-c4",
        gx,
        braiding,
        level: Some(BraidingLevel::Picard),
    }
}

/// Every built-in instance, in a fixed order.
pub fn built_ins() -> Vec<Instance> {
    let c2 = cyc(2);
    let c3 = cyc(3);
    let c4 = cyc(4);
    let v4 = klein();
    let s3 = {
        let inv = GroupAction::inversion(&c2, &c3, Side::Left).expect("inversion");
        crate::group::make_semidirect(&c3, &c2, &inv).expect("S3").0
    };
    vec![
        // coefficients [A -> 1]: the degree-shifted classical theory
        discrete_kernel_instance(
            "c2-shift-g2",
            c2.clone(),
            c2.clone(),
            GroupAction::trivial(&c2, &c2, Side::Left),
        ),
        discrete_kernel_instance(
            "c2-shift-g3",
            c2.clone(),
            c3.clone(),
            GroupAction::trivial(&c3, &c2, Side::Left),
        ),
        discrete_kernel_instance(
            "c3-shift-g2",
            c3.clone(),
            c2.clone(),
            GroupAction::trivial(&c2, &c3, Side::Left),
        ),
        discrete_kernel_instance(
            "c3-shift-g2-inv",
            c3.clone(),
            c2.clone(),
            GroupAction::inversion(&c2, &c3, Side::Left).expect("inversion"),
        ),
        discrete_kernel_instance(
            "c3-shift-g3",
            c3.clone(),
            c3.clone(),
            GroupAction::trivial(&c3, &c3, Side::Left),
        ),
        discrete_kernel_instance(
            "v4-shift-g2",
            v4.clone(),
            c2.clone(),
            GroupAction::trivial(&c2, &v4, Side::Left),
        ),
        discrete_kernel_instance(
            "v4-shift-g2-swap",
            v4.clone(),
            c2.clone(),
            klein_swap(&c2, &v4).expect("swap"),
        ),
        discrete_kernel_instance(
            "v4-shift-g3",
            v4.clone(),
            c3.clone(),
            GroupAction::trivial(&c3, &v4, Side::Left),
        ),
        discrete_kernel_instance(
            "v4-shift-g3-rot",
            v4.clone(),
            c3.clone(),
            klein_rotation(&c3, &v4).expect("rotation"),
        ),
        discrete_kernel_instance(
            "c2-shift-g4",
            c2.clone(),
            c4.clone(),
            GroupAction::trivial(&c4, &c2, Side::Left),
        ),
        // coefficients [1 -> G]: the classical degree 0/1 theory
        discrete_quotient_instance(
            "c2-classic",
            c2.clone(),
            c2.clone(),
            GroupAction::trivial(&c2, &c2, Side::Left),
        ),
        discrete_quotient_instance(
            "c4-classic",
            c4.clone(),
            c2.clone(),
            GroupAction::trivial(&c2, &c4, Side::Left),
        ),
        discrete_quotient_instance(
            "c4-classic-inv",
            c4.clone(),
            c2.clone(),
            GroupAction::inversion(&c2, &c4, Side::Left).expect("inversion"),
        ),
        discrete_quotient_instance(
            "s3-classic",
            s3.clone(),
            c2.clone(),
            GroupAction::trivial(&c2, &s3, Side::Left),
        ),
        discrete_quotient_instance(
            "c4-classic-g4",
            c4.clone(),
            c4.clone(),
            GroupAction::from_fn(
                &c4,
                &c4,
                Side::Left,
                |s, x| {
                    if s % 2 == 1 {
                        c4.inv(x)
                    } else {
                        x
                    }
                },
            )
            .expect("alternating inversion"),
        ),
        // genuinely 2-dimensional coefficients
        braided_z2(),
        times2(false),
        times2(true),
        inner_c4(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xmod::validate_braiding;

    #[test]
    fn every_built_in_validates() {
        for inst in built_ins() {
            let rep = inst.gx.validation_report();
            assert!(rep.ok(), "{}: {rep}", inst.name);
            if let (Some(br), Some(level)) = (&inst.braiding, inst.level) {
                let rep = validate_braiding(&inst.gx.base, br, level, Some(&inst.gx));
                assert!(rep.ok(), "{}: {rep}", inst.name);
            }
        }
    }

    #[test]
    fn times2_bracket_is_not_picard() {
        let inst = times2(false);
        let br = inst.braiding.as_ref().unwrap();
        let rep = validate_braiding(&inst.gx.base, br, BraidingLevel::Picard, Some(&inst.gx));
        assert!(!rep.ok());
    }
}
