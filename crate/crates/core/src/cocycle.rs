//! Explicit cocycle cohomology in degrees -1, 0, 1.
//!
//! A 0-cochain is a pair (g, theta) with g in G0 and theta: Gamma -> G1
//! pointed; a 1-cochain is a pair (p, eps) of pointed maps p: Gamma -> G0,
//! eps: Gamma x Gamma -> G1. Cocycle conditions, the coboundary map, the
//! right action of 0-cochains on 1-cocycles, and (for braided coefficients)
//! the second product on 0-cochains, the product on 1-cochains, and the
//! differential d are all transcribed with explicit parenthesization; group
//! scans in the tests confirm each transcription.

use crate::enumerate::{pointed_map_estimate, PointedMapIter};
use crate::error::{Budget, Error, Result};
use crate::group::{
    quotient_by_normal, subgroup_as_group, FiniteGroup, GroupAction, GroupHom, GroupRef, Side,
};
use crate::report::ValidationReport;
use crate::xmod::{Braiding, CrossedModule, GammaCrossedModule};

/// 0-cochain (g, theta); `theta[s]` is the value at the Gamma-element `s`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cochain0 {
    pub g: usize,
    pub theta: Vec<usize>,
}

impl Cochain0 {
    pub fn identity(gx: &GammaCrossedModule) -> Self {
        Cochain0 {
            g: 0,
            theta: vec![0; gx.gamma.order()],
        }
    }

    /// Canonical key: [g, theta(0), ..., theta(n-1)].
    pub fn key(&self) -> Vec<usize> {
        let mut k = Vec::with_capacity(1 + self.theta.len());
        k.push(self.g);
        k.extend_from_slice(&self.theta);
        k
    }
}

/// 1-cochain (p, eps); `eps[s * n + t]` is the value at (s, t).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cochain1 {
    pub p: Vec<usize>,
    pub eps: Vec<usize>,
}

impl Cochain1 {
    pub fn identity(gx: &GammaCrossedModule) -> Self {
        let n = gx.gamma.order();
        Cochain1 {
            p: vec![0; n],
            eps: vec![0; n * n],
        }
    }

    #[inline]
    pub fn eps_at(&self, n: usize, s: usize, t: usize) -> usize {
        self.eps[s * n + t]
    }

    /// Canonical key: p-table then eps-table, row-major.
    pub fn key(&self) -> Vec<usize> {
        let mut k = Vec::with_capacity(self.p.len() + self.eps.len());
        k.extend_from_slice(&self.p);
        k.extend_from_slice(&self.eps);
        k
    }

    pub fn is_pointed(&self, n: usize) -> bool {
        self.p[0] == 0 && (0..n).all(|s| self.eps[s * n] == 0 && self.eps[s] == 0)
    }
}

/// theta_mu: s -> mu^-1 * (s . mu)
pub fn theta_mu(gx: &GammaCrossedModule, mu: usize) -> Vec<usize> {
    let g1 = gx.g1();
    gx.gamma
        .elements()
        .map(|s| g1.mul(g1.inv(mu), gx.gact1(s, mu)))
        .collect()
}

/// The coboundary of mu: (d mu, theta_mu).
pub fn coboundary0(gx: &GammaCrossedModule, mu: usize) -> Cochain0 {
    Cochain0 {
        g: gx.d(mu),
        theta: theta_mu(gx, mu),
    }
}

/// Plain product (g1, t1)(g2, t2) = (g1 g2, s -> t1(s)^(g2) * t2(s)).
pub fn c0_mul_plain(gx: &GammaCrossedModule, a: &Cochain0, b: &Cochain0) -> Cochain0 {
    let g1 = gx.g1();
    Cochain0 {
        g: gx.g0().mul(a.g, b.g),
        theta: gx
            .gamma
            .elements()
            .map(|s| g1.mul(gx.act0_on_1(a.theta[s], b.g), b.theta[s]))
            .collect(),
    }
}

pub fn c0_inv_plain(gx: &GammaCrossedModule, a: &Cochain0) -> Cochain0 {
    let g1 = gx.g1();
    let ginv = gx.g0().inv(a.g);
    Cochain0 {
        g: ginv,
        theta: gx
            .gamma
            .elements()
            .map(|s| gx.act0_on_1(g1.inv(a.theta[s]), ginv))
            .collect(),
    }
}

/// The second product on 0-cochains, defined when the coefficients carry a
/// Gamma-equivariant braiding:
/// (g1,t1)(g2,t2) = (g1 g2, s -> t1(s)^(p2 s) * t2(s) * {g2^-1, g1^-1 * s.g1}^(s.g2))
/// with p2(s) = g2^-1 * (s.g2) * d(t2 s)^-1.
pub fn c0_mul_braided(
    gx: &GammaCrossedModule,
    br: &Braiding,
    a: &Cochain0,
    b: &Cochain0,
) -> Cochain0 {
    let g0 = gx.g0();
    let g1 = gx.g1();
    let n0 = g0.order();
    let theta = gx
        .gamma
        .elements()
        .map(|s| {
            let p2 = g0.mul(
                g0.mul(g0.inv(b.g), gx.gact0(s, b.g)),
                g0.inv(gx.d(b.theta[s])),
            );
            let bracket = br.br(n0, g0.inv(b.g), g0.mul(g0.inv(a.g), gx.gact0(s, a.g)));
            g1.mul(
                g1.mul(gx.act0_on_1(a.theta[s], p2), b.theta[s]),
                gx.act0_on_1(bracket, gx.gact0(s, b.g)),
            )
        })
        .collect();
    Cochain0 {
        g: g0.mul(a.g, b.g),
        theta,
    }
}

/// Both 0-cocycle conditions.
pub fn is_zero_cocycle(gx: &GammaCrossedModule, c: &Cochain0) -> bool {
    let g0 = gx.g0();
    let g1 = gx.g1();
    let n = gx.gamma.order();
    for s in 0..n {
        if gx.d(c.theta[s]) != g0.mul(g0.inv(c.g), gx.gact0(s, c.g)) {
            return false;
        }
    }
    for s in 0..n {
        for t in 0..n {
            let st = gx.gamma.mul(s, t);
            if c.theta[st] != g1.mul(c.theta[s], gx.gact1(s, c.theta[t])) {
                return false;
            }
        }
    }
    true
}

/// All 0-cochains (no condition), in lexicographic key order.
pub fn all_cochains0(gx: &GammaCrossedModule, budget: Budget) -> Result<Vec<Cochain0>> {
    let n = gx.gamma.order();
    let est = (gx.g0().order() as u128).saturating_mul(pointed_map_estimate(n, gx.g1().order()));
    budget.check(est)?;
    let mut out = Vec::new();
    for g in gx.g0().elements() {
        for theta in PointedMapIter::new(n, gx.g1().order(), |_| true, budget.0) {
            out.push(Cochain0 { g, theta: theta? });
        }
    }
    out.sort();
    Ok(out)
}

/// All 0-cocycles, enumerated with prefix pruning, sorted by key.
pub fn zero_cocycles(gx: &GammaCrossedModule, budget: Budget) -> Result<Vec<Cochain0>> {
    let n = gx.gamma.order();
    let g0 = gx.g0();
    let g1 = gx.g1();
    let est = (g0.order() as u128).saturating_mul(pointed_map_estimate(n, g1.order()));
    budget.check(est)?;
    let mut out = Vec::new();
    for g in g0.elements() {
        let filter = |prefix: &[usize]| {
            let m = prefix.len();
            let s = m - 1;
            if gx.d(prefix[s]) != g0.mul(g0.inv(g), gx.gact0(s, g)) {
                return false;
            }
            for a in 0..m {
                for b in 0..m {
                    let ab = gx.gamma.mul(a, b);
                    if ab < m && prefix[ab] != g1.mul(prefix[a], gx.gact1(a, prefix[b])) {
                        return false;
                    }
                }
            }
            true
        };
        for theta in PointedMapIter::new(n, g1.order(), filter, budget.0) {
            out.push(Cochain0 { g, theta: theta? });
        }
    }
    out.sort();
    Ok(out)
}

/// The 0-coboundaries (d mu, theta_mu), deduplicated and sorted.
pub fn zero_coboundaries(gx: &GammaCrossedModule) -> Vec<Cochain0> {
    let mut out: Vec<Cochain0> = gx.g1().elements().map(|mu| coboundary0(gx, mu)).collect();
    out.sort();
    out.dedup();
    out
}

/// A list of cochains realized as a group table. The list must be closed
/// under the supplied product and sorted by key.
#[derive(Debug, Clone)]
pub struct C0Realization {
    pub list: Vec<Cochain0>,
    pub group: GroupRef,
}

impl C0Realization {
    pub fn index_of(&self, c: &Cochain0) -> Option<usize> {
        self.list.binary_search(c).ok()
    }

    fn build(
        label: &str,
        list: Vec<Cochain0>,
        mul: impl Fn(&Cochain0, &Cochain0) -> Cochain0,
    ) -> Result<Self> {
        let n = list.len();
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let prod = mul(&list[i], &list[j]);
                let k = list
                    .binary_search(&prod)
                    .map_err(|_| Error::Invalid(format!("{label}: not closed under product")))?;
                table[i * n + j] = k;
            }
        }
        let group = FiniteGroup::from_mul_table(label, n, table)?;
        Ok(C0Realization { list, group })
    }
}

/// Z0 with the plain product, as a group.
pub fn z0_realization(gx: &GammaCrossedModule, budget: Budget) -> Result<C0Realization> {
    let list = zero_cocycles(gx, budget)?;
    C0Realization::build("Z0", list, |a, b| c0_mul_plain(gx, a, b))
}

/// C0 with the braided product, as a group. The group axioms holding at all
/// is a consequence of the braiding axioms, checked here by table validation.
pub fn c0_braided_realization(
    gx: &GammaCrossedModule,
    br: &Braiding,
    budget: Budget,
) -> Result<C0Realization> {
    let list = all_cochains0(gx, budget)?;
    C0Realization::build("C0", list, |a, b| c0_mul_braided(gx, br, a, b))
}

/// Canonical representatives plus optional group structure on them.
#[derive(Debug, Clone)]
pub struct CohomologySet {
    pub degree: i32,
    /// canonical (lexicographically least) representative keys, sorted
    pub reps: Vec<Vec<usize>>,
    pub group: Option<GroupRef>,
    pub abelian: Option<bool>,
}

impl CohomologySet {
    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// Group tables isomorphic, or (absent tables) equal cardinality.
    pub fn same_shape_as(&self, other: &CohomologySet) -> bool {
        if self.order() != other.order() {
            return false;
        }
        match (&self.group, &other.group) {
            (Some(a), Some(b)) => a.isomorphic_to(b).is_some(),
            _ => true,
        }
    }
}

/// H^-1 = fixed points of Gamma on ker d, an abelian group.
pub fn h_minus1(gx: &GammaCrossedModule) -> CohomologySet {
    let ker = gx.base.boundary.kernel();
    let fixed: Vec<usize> = ker
        .iter()
        .copied()
        .filter(|&mu| gx.gamma.elements().all(|s| gx.gact1(s, mu) == mu))
        .collect();
    let (group, incl) =
        subgroup_as_group(gx.g1(), &fixed, "H-1").expect("fixed kernel is a subgroup");
    let abelian = group.is_abelian();
    CohomologySet {
        degree: -1,
        reps: incl.map.iter().map(|&mu| vec![mu]).collect(),
        group: Some(group),
        abelian: Some(abelian),
    }
}

/// H^0 = Z0 / B0 on minimal coset representatives. With a valid
/// Gamma-equivariant braiding attached this group is abelian; the flag
/// records the scan either way.
pub fn h_zero(gx: &GammaCrossedModule, budget: Budget) -> Result<CohomologySet> {
    let z0 = z0_realization(gx, budget)?;
    let b0 = zero_coboundaries(gx);
    let b0_idx: Vec<usize> = b0
        .iter()
        .map(|c| {
            z0.index_of(c)
                .ok_or_else(|| Error::Invalid("B0 not inside Z0".into()))
        })
        .collect::<Result<_>>()?;
    let (q, proj) = quotient_by_normal(&z0.group, &b0_idx)
        .map_err(|e| Error::Invalid(format!("B0 not normal in Z0: {e}")))?;
    // rep of each coset: minimal Z0 index = lexicographically least cochain
    let mut reps = vec![usize::MAX; q.order()];
    for i in 0..z0.group.order() {
        let c = proj.apply(i);
        if reps[c] == usize::MAX || i < reps[c] {
            reps[c] = i;
        }
    }
    let abelian = q.is_abelian();
    Ok(CohomologySet {
        degree: 0,
        reps: reps.iter().map(|&i| z0.list[i].key()).collect(),
        group: Some(q),
        abelian: Some(abelian),
    })
}

/// The crossed-module [G1 -> Z0] with boundary mu -> (d mu, theta_mu) and
/// action mu^(g, theta) = mu^g; with braided coefficients the bracket
/// {(g,t),(g',t')} = {g,g'} makes it braided.
pub fn z0_crossed_module(
    gx: &GammaCrossedModule,
    br: Option<&Braiding>,
    budget: Budget,
) -> Result<(CrossedModule, Option<Braiding>, C0Realization)> {
    let z0 = z0_realization(gx, budget)?;
    let boundary = GroupHom::new(
        gx.g1().clone(),
        z0.group.clone(),
        gx.g1()
            .elements()
            .map(|mu| {
                z0.index_of(&coboundary0(gx, mu))
                    .ok_or_else(|| Error::Invalid("coboundary escapes Z0".into()))
            })
            .collect::<Result<_>>()?,
    )?;
    let act = GroupAction::new(z0.group.clone(), gx.g1().clone(), Side::Right, {
        let n1 = gx.g1().order();
        let mut t = vec![0usize; z0.group.order() * n1];
        for (i, c) in z0.list.iter().enumerate() {
            for mu in 0..n1 {
                t[i * n1 + mu] = gx.act0_on_1(mu, c.g);
            }
        }
        t
    })?;
    let xm = CrossedModule::new("[G1->Z0]", gx.g1().clone(), z0.group.clone(), boundary, act)?;
    let zbr = br.map(|b| {
        let n = z0.list.len();
        let mut bracket = vec![0usize; n * n];
        for (i, a) in z0.list.iter().enumerate() {
            for (j, c) in z0.list.iter().enumerate() {
                bracket[i * n + j] = b.br(gx.g0().order(), a.g, c.g);
            }
        }
        Braiding {
            bracket,
            gamma_equivariant: false,
        }
    });
    Ok((xm, zbr, z0))
}

/// Both 1-cocycle conditions.
pub fn is_one_cocycle(gx: &GammaCrossedModule, c: &Cochain1) -> bool {
    let g0 = gx.g0();
    let g1 = gx.g1();
    let n = gx.gamma.order();
    if !c.is_pointed(n) {
        return false;
    }
    for s in 0..n {
        for t in 0..n {
            let st = gx.gamma.mul(s, t);
            if g0.mul(c.p[st], gx.d(c.eps_at(n, s, t))) != g0.mul(c.p[s], gx.gact0(s, c.p[t])) {
                return false;
            }
        }
    }
    for s in 0..n {
        for t in 0..n {
            for u in 0..n {
                let tu = gx.gamma.mul(t, u);
                let st = gx.gamma.mul(s, t);
                let lhs = g1.mul(c.eps_at(n, s, tu), gx.gact1(s, c.eps_at(n, t, u)));
                let rhs = g1.mul(
                    c.eps_at(n, st, u),
                    gx.act0_on_1(c.eps_at(n, s, t), gx.gact0(st, c.p[u])),
                );
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// All 1-cocycles. The p-component is enumerated with the prefix condition
/// p(st)^-1 p(s) (s.p(t)) in im(d); for each surviving p the eps-values
/// range over cosets of ker(d) and are pruned by the degree-2 condition.
pub fn one_cocycles(gx: &GammaCrossedModule, budget: Budget) -> Result<Vec<Cochain1>> {
    let n = gx.gamma.order();
    let g0 = gx.g0();
    let g1 = gx.g1();
    let ker = gx.base.boundary.kernel();
    let est = pointed_map_estimate(n, g0.order()).saturating_mul({
        let mut e: u128 = 1;
        for _ in 0..(n.saturating_sub(1)).pow(2) {
            e = e.saturating_mul(ker.len().max(1) as u128);
        }
        e
    });
    budget.check(est)?;
    // preimages of each g0 element under d, in increasing order
    let mut preimages: Vec<Vec<usize>> = vec![Vec::new(); g0.order()];
    for mu in g1.elements() {
        preimages[gx.d(mu)].push(mu);
    }
    let image_member: Vec<bool> = (0..g0.order()).map(|g| !preimages[g].is_empty()).collect();

    let mut out = Vec::new();
    let p_filter = |prefix: &[usize]| {
        let m = prefix.len();
        for a in 0..m {
            for b in 0..m {
                let ab = gx.gamma.mul(a, b);
                if ab < m {
                    let defect = g0.mul(
                        g0.inv(prefix[ab]),
                        g0.mul(prefix[a], gx.gact0(a, prefix[b])),
                    );
                    if !image_member[defect] {
                        return false;
                    }
                }
            }
        }
        true
    };
    for p in PointedMapIter::new(n, g0.order(), p_filter, budget.0) {
        let p = p?;
        // eps entries for s,t >= 1, row-major; each ranges over a ker-coset
        let positions: Vec<(usize, usize)> =
            (1..n).flat_map(|s| (1..n).map(move |t| (s, t))).collect();
        let fibers: Vec<Vec<usize>> = positions
            .iter()
            .map(|&(s, t)| {
                let st = gx.gamma.mul(s, t);
                let defect = g0.mul(g0.inv(p[st]), g0.mul(p[s], gx.gact0(s, p[t])));
                preimages[defect].clone()
            })
            .collect();
        let pos_index = |s: usize, t: usize| -> Option<usize> {
            if s == 0 || t == 0 {
                None
            } else {
                Some((s - 1) * (n - 1) + (t - 1))
            }
        };
        // depth-first over the fibers with incremental degree-2 checking
        let eps_val = |choice: &[usize], s: usize, t: usize| -> Option<usize> {
            match pos_index(s, t) {
                None => Some(0),
                Some(i) => choice.get(i).map(|&c| fibers[i][c]),
            }
        };
        #[allow(clippy::needless_range_loop)] // u indexes both gamma and p
        let check_prefix = |choice: &[usize]| -> bool {
            for s in 0..n {
                for t in 0..n {
                    for u in 0..n {
                        let tu = gx.gamma.mul(t, u);
                        let st = gx.gamma.mul(s, t);
                        let (Some(e_s_tu), Some(e_t_u), Some(e_st_u), Some(e_s_t)) = (
                            eps_val(choice, s, tu),
                            eps_val(choice, t, u),
                            eps_val(choice, st, u),
                            eps_val(choice, s, t),
                        ) else {
                            continue;
                        };
                        let lhs = g1.mul(e_s_tu, gx.gact1(s, e_t_u));
                        let rhs = g1.mul(e_st_u, gx.act0_on_1(e_s_t, gx.gact0(st, p[u])));
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
            true
        };
        let total = positions.len();
        if total == 0 {
            let c = Cochain1 {
                p: p.clone(),
                eps: vec![0; n * n],
            };
            if is_one_cocycle(gx, &c) {
                out.push(c);
            }
            continue;
        }
        // iterative DFS over choice indices
        let mut choice: Vec<usize> = Vec::new();
        let mut nodes: u64 = 0;
        loop {
            nodes += 1;
            if nodes > budget.0 {
                return Err(Error::Budget {
                    estimate: nodes as u128,
                    budget: budget.0,
                });
            }
            let depth = choice.len();
            let ok = check_prefix(&choice);
            if ok && depth == total {
                let mut eps = vec![0usize; n * n];
                for (i, &(s, t)) in positions.iter().enumerate() {
                    eps[s * n + t] = fibers[i][choice[i]];
                }
                let c = Cochain1 { p: p.clone(), eps };
                debug_assert!(is_one_cocycle(gx, &c));
                out.push(c);
            }
            if ok && depth < total && !fibers[depth].is_empty() {
                choice.push(0);
                continue;
            }
            // backtrack
            loop {
                match choice.pop() {
                    None => break,
                    Some(c) => {
                        let d = choice.len();
                        if c + 1 < fibers[d].len() {
                            choice.push(c + 1);
                            break;
                        }
                    }
                }
            }
            if choice.is_empty() {
                break;
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Right action of a 0-cochain on a 1-cocycle:
/// p2(s) = g^-1 p1(s) (s.g) d(theta s)^-1,
/// eps2(s,t) = theta(st) * eps1(s,t)^(st.g) * (s.theta(t))^-1 * (theta(s)^-1)^(s.p2(t)).
pub fn act_c0_on_z1(gx: &GammaCrossedModule, c: &Cochain1, a: &Cochain0) -> Cochain1 {
    let g0 = gx.g0();
    let g1 = gx.g1();
    let n = gx.gamma.order();
    let p2: Vec<usize> = (0..n)
        .map(|s| {
            g0.mul(
                g0.mul(g0.inv(a.g), g0.mul(c.p[s], gx.gact0(s, a.g))),
                g0.inv(gx.d(a.theta[s])),
            )
        })
        .collect();
    let mut eps2 = vec![0usize; n * n];
    for s in 0..n {
        for t in 0..n {
            let st = gx.gamma.mul(s, t);
            let t1 = a.theta[st];
            let t2 = gx.act0_on_1(c.eps_at(n, s, t), gx.gact0(st, a.g));
            let t3 = g1.inv(gx.gact1(s, a.theta[t]));
            let t4 = gx.act0_on_1(g1.inv(a.theta[s]), gx.gact0(s, p2[t]));
            eps2[s * n + t] = g1.mul(g1.mul(t1, t2), g1.mul(t3, t4));
        }
    }
    let out = Cochain1 { p: p2, eps: eps2 };
    assert!(
        is_one_cocycle(gx, &out),
        "action of a 0-cochain left the 1-cocycle set; this is a bug"
    );
    out
}

/// Orbit decomposition of Z1 under the C0-action, with minimal-key
/// representatives.
pub struct OrbitData {
    pub cocycles: Vec<Cochain1>,
    pub orbit_of: Vec<usize>,
    pub rep_indices: Vec<usize>,
}

impl OrbitData {
    pub fn class_of(&self, c: &Cochain1) -> Option<usize> {
        self.cocycles
            .binary_search(c)
            .ok()
            .map(|i| self.orbit_of[i])
    }
}

pub fn z1_orbits(gx: &GammaCrossedModule, budget: Budget) -> Result<OrbitData> {
    let cocycles = one_cocycles(gx, budget)?;
    let cochains = all_cochains0(gx, budget)?;
    let mut orbit_of = vec![usize::MAX; cocycles.len()];
    let mut next = 0usize;
    for i in 0..cocycles.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let id = next;
        next += 1;
        let mut stack = vec![i];
        orbit_of[i] = id;
        while let Some(j) = stack.pop() {
            for a in &cochains {
                let moved = act_c0_on_z1(gx, &cocycles[j], a);
                let img = cocycles.binary_search(&moved).expect("action stays in Z1");
                if orbit_of[img] == usize::MAX {
                    orbit_of[img] = id;
                    stack.push(img);
                }
            }
        }
    }
    // minimal index in each orbit; cocycles are sorted, so the first hit wins
    let mut rep_indices = vec![usize::MAX; next];
    for (i, &o) in orbit_of.iter().enumerate() {
        if rep_indices[o] == usize::MAX {
            rep_indices[o] = i;
        }
    }
    Ok(OrbitData {
        cocycles,
        orbit_of,
        rep_indices,
    })
}

/// H^1 as the pointed set of C0-orbits on Z1; with a Gamma-equivariant
/// braiding the class set carries a group table through the Z1 product.
pub fn h_one(
    gx: &GammaCrossedModule,
    br: Option<&Braiding>,
    budget: Budget,
) -> Result<CohomologySet> {
    let orbits = z1_orbits(gx, budget)?;
    let reps: Vec<Vec<usize>> = orbits
        .rep_indices
        .iter()
        .map(|&i| orbits.cocycles[i].key())
        .collect();
    // sort classes by representative key; the basepoint (all zeros) is first
    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_by(|&a, &b| reps[a].cmp(&reps[b]));
    let sorted_reps: Vec<Vec<usize>> = order.iter().map(|&i| reps[i].clone()).collect();
    let mut group = None;
    let mut abelian = None;
    if let Some(br) = br {
        let rank_of = {
            let mut rank = vec![0usize; reps.len()];
            for (pos, &o) in order.iter().enumerate() {
                rank[o] = pos;
            }
            rank
        };
        let k = sorted_reps.len();
        let mut table = vec![0usize; k * k];
        for (pos_a, &oa) in order.iter().enumerate() {
            let ca = &orbits.cocycles[orbits.rep_indices[oa]];
            for (pos_b, &ob) in order.iter().enumerate() {
                let cb = &orbits.cocycles[orbits.rep_indices[ob]];
                let prod = c1_mul(gx, br, ca, cb);
                let idx = orbits
                    .cocycles
                    .binary_search(&prod)
                    .map_err(|_| Error::Invalid("Z1 product escaped Z1".into()))?;
                table[pos_a * k + pos_b] = rank_of[orbits.orbit_of[idx]];
            }
        }
        // well-definedness on classes: products of arbitrary orbit members
        // land in the class the table predicts
        for (i, ca) in orbits.cocycles.iter().enumerate() {
            for (j, cb) in orbits.cocycles.iter().enumerate() {
                let prod = c1_mul(gx, br, ca, cb);
                let idx = orbits
                    .cocycles
                    .binary_search(&prod)
                    .map_err(|_| Error::Invalid("Z1 product escaped Z1".into()))?;
                let expect = table[rank_of[orbits.orbit_of[i]] * k + rank_of[orbits.orbit_of[j]]];
                if rank_of[orbits.orbit_of[idx]] != expect {
                    return Err(Error::Invalid(
                        "H1 product not well-defined on classes".into(),
                    ));
                }
            }
        }
        let g = FiniteGroup::from_mul_table("H1", k, table)?;
        abelian = Some(g.is_abelian());
        group = Some(g);
    }
    Ok(CohomologySet {
        degree: 1,
        reps: sorted_reps,
        group,
        abelian,
    })
}

/// Product on 1-cochains (braided coefficients):
/// p = p1 p2, eps(s,t) = eps1(s,t)^(p2(st)) * eps2(s,t) * {p2(s), s.p1(t)}^(s.p2(t)).
pub fn c1_mul(gx: &GammaCrossedModule, br: &Braiding, a: &Cochain1, b: &Cochain1) -> Cochain1 {
    let g0 = gx.g0();
    let g1 = gx.g1();
    let n = gx.gamma.order();
    let n0 = g0.order();
    let p: Vec<usize> = (0..n).map(|s| g0.mul(a.p[s], b.p[s])).collect();
    let mut eps = vec![0usize; n * n];
    for s in 0..n {
        for t in 0..n {
            let st = gx.gamma.mul(s, t);
            let t1 = gx.act0_on_1(a.eps_at(n, s, t), b.p[st]);
            let t2 = b.eps_at(n, s, t);
            let t3 = gx.act0_on_1(br.br(n0, b.p[s], gx.gact0(s, a.p[t])), gx.gact0(s, b.p[t]));
            eps[s * n + t] = g1.mul(g1.mul(t1, t2), t3);
        }
    }
    Cochain1 { p, eps }
}

/// Inverse for the 1-cochain product:
/// q = p^-1, lambda(s,t) = (eps(s,t)^-1)^(p(st)^-1) * {p(s)^-1, (s.p(t))^-1}.
pub fn c1_inv(gx: &GammaCrossedModule, br: &Braiding, a: &Cochain1) -> Cochain1 {
    let g0 = gx.g0();
    let g1 = gx.g1();
    let n = gx.gamma.order();
    let n0 = g0.order();
    let p: Vec<usize> = (0..n).map(|s| g0.inv(a.p[s])).collect();
    let mut eps = vec![0usize; n * n];
    for s in 0..n {
        for t in 0..n {
            let st = gx.gamma.mul(s, t);
            let t1 = gx.act0_on_1(g1.inv(a.eps_at(n, s, t)), g0.inv(a.p[st]));
            let t2 = br.br(n0, g0.inv(a.p[s]), g0.inv(gx.gact0(s, a.p[t])));
            eps[s * n + t] = g1.mul(t1, t2);
        }
    }
    Cochain1 { p, eps }
}

/// The differential d: C0 -> Z1 for braided coefficients:
/// p(s) = g^-1 (s.g) d(theta s)^-1,
/// eps(s,t) = theta(st) * (theta(s)^-1)^((s.g)^-1 (st.g)) * (s.theta(t))^-1.
pub fn d_map(gx: &GammaCrossedModule, a: &Cochain0) -> Cochain1 {
    let g0 = gx.g0();
    let g1 = gx.g1();
    let n = gx.gamma.order();
    let p: Vec<usize> = (0..n)
        .map(|s| {
            g0.mul(
                g0.mul(g0.inv(a.g), gx.gact0(s, a.g)),
                g0.inv(gx.d(a.theta[s])),
            )
        })
        .collect();
    let mut eps = vec![0usize; n * n];
    for s in 0..n {
        for t in 0..n {
            let st = gx.gamma.mul(s, t);
            let expo = g0.mul(g0.inv(gx.gact0(s, a.g)), gx.gact0(st, a.g));
            let t1 = a.theta[st];
            let t2 = gx.act0_on_1(g1.inv(a.theta[s]), expo);
            let t3 = g1.inv(gx.gact1(s, a.theta[t]));
            eps[s * n + t] = g1.mul(g1.mul(t1, t2), t3);
        }
    }
    let out = Cochain1 { p, eps };
    assert!(is_one_cocycle(gx, &out), "d left Z1; this is a bug");
    out
}

/// The right action of Z1 on C0 that turns [d: C0/B0 -> Z1] into a
/// crossed-module: (g, theta)^(p, eps) = (g, v) with
/// v(s) = theta(s)^(p s) * {p(s), s.g} * {g, p(s)}^(g^-1 (s.g)).
pub fn act_z1_on_c0(
    gx: &GammaCrossedModule,
    br: &Braiding,
    a: &Cochain0,
    c: &Cochain1,
) -> Cochain0 {
    let g0 = gx.g0();
    let g1 = gx.g1();
    let n0 = g0.order();
    let theta = gx
        .gamma
        .elements()
        .map(|s| {
            let t1 = gx.act0_on_1(a.theta[s], c.p[s]);
            let t2 = br.br(n0, c.p[s], gx.gact0(s, a.g));
            let t3 = gx.act0_on_1(
                br.br(n0, a.g, c.p[s]),
                g0.mul(g0.inv(a.g), gx.gact0(s, a.g)),
            );
            g1.mul(g1.mul(t1, t2), t3)
        })
        .collect();
    Cochain0 { g: a.g, theta }
}

/// The comparison of the two actions of C0 on Z1:
/// (p,eps)^(g,theta) = (p,eps) * d(g, theta * delta(p,g)) with
/// delta(p,g)(s) = {g, p(s)}^(g^-1 (s.g)); consequently C0-orbits are
/// exactly the cosets of im(d).
pub fn verify_coincide(
    gx: &GammaCrossedModule,
    br: &Braiding,
    budget: Budget,
) -> Result<ValidationReport> {
    let mut rep = ValidationReport::new("action/multiplication comparison");
    let g0 = gx.g0();
    let g1 = gx.g1();
    let n0 = g0.order();
    let orbits = z1_orbits(gx, budget)?;
    let cochains = all_cochains0(gx, budget)?;
    for c in &orbits.cocycles {
        for a in &cochains {
            let lhs = act_c0_on_z1(gx, c, a);
            let twisted = Cochain0 {
                g: a.g,
                theta: gx
                    .gamma
                    .elements()
                    .map(|s| {
                        let delta = gx.act0_on_1(
                            br.br(n0, a.g, c.p[s]),
                            g0.mul(g0.inv(a.g), gx.gact0(s, a.g)),
                        );
                        g1.mul(a.theta[s], delta)
                    })
                    .collect(),
            };
            let rhs = c1_mul(gx, br, c, &d_map(gx, &twisted));
            rep.check(lhs == rhs, "coincide", || {
                format!("cocycle {:?}, cochain {:?}", c.key(), a.key())
            });
        }
    }
    // orbit partition vs im(d)-coset partition
    let image: Vec<Cochain1> = {
        let mut im: Vec<Cochain1> = cochains.iter().map(|a| d_map(gx, a)).collect();
        im.sort();
        im.dedup();
        im
    };
    for (i, c) in orbits.cocycles.iter().enumerate() {
        let mut coset = Vec::with_capacity(image.len());
        for e in &image {
            match orbits.cocycles.binary_search(&c1_mul(gx, br, c, e)) {
                Ok(j) => coset.push(j),
                Err(_) => {
                    rep.push("coset_in_z1", format!("cocycle {:?}", c.key()));
                }
            }
        }
        coset.sort_unstable();
        coset.dedup();
        let orbit: Vec<usize> = (0..orbits.cocycles.len())
            .filter(|&j| orbits.orbit_of[j] == orbits.orbit_of[i])
            .collect();
        rep.check(coset == orbit, "orbits_are_cosets", || {
            format!("cocycle {:?}", c.key())
        });
    }
    Ok(rep)
}

/// The crossed-module [d: C0/B0 -> Z1] with its action, plus the symmetric
/// braiding {(p1,e1),(p2,e2)} = (1, {p2,p1}) (reverse order) when the base
/// braiding is symmetric. Also returns the kernel and cokernel of d, which
/// must coincide with h_zero and h_one respectively.
pub struct H1CrossedModule {
    pub xmod: CrossedModule,
    pub braiding: Option<Braiding>,
    /// C0 with the braided product
    pub c0: C0Realization,
    /// quotient C0/B0 and the projection from c0.group
    pub q: GroupRef,
    pub proj: GroupHom,
    /// minimal C0-list index representing each coset
    pub q_reps: Vec<usize>,
    /// Z1 with the cochain product
    pub z1_list: Vec<Cochain1>,
    pub z1_group: GroupRef,
    pub h0_from_kernel: CohomologySet,
    pub h1_from_cokernel: CohomologySet,
}

pub fn build_h1_crossed_module(
    gx: &GammaCrossedModule,
    br: &Braiding,
    symmetric: bool,
    budget: Budget,
) -> Result<H1CrossedModule> {
    let c0 = c0_braided_realization(gx, br, budget)?;
    let b0 = zero_coboundaries(gx);
    let b0_idx: Vec<usize> = b0
        .iter()
        .map(|c| {
            c0.index_of(c)
                .ok_or_else(|| Error::Invalid("B0 not in C0".into()))
        })
        .collect::<Result<_>>()?;
    let (q, proj) = quotient_by_normal(&c0.group, &b0_idx)?;
    let mut q_reps = vec![usize::MAX; q.order()];
    for i in 0..c0.group.order() {
        let c = proj.apply(i);
        if q_reps[c] == usize::MAX || i < q_reps[c] {
            q_reps[c] = i;
        }
    }

    let z1_list = one_cocycles(gx, budget)?;
    let z1_index = |c: &Cochain1| -> Result<usize> {
        z1_list
            .binary_search(c)
            .map_err(|_| Error::Invalid("Z1 product escaped Z1".into()))
    };
    let nz = z1_list.len();
    let mut z1_table = vec![0usize; nz * nz];
    for i in 0..nz {
        for j in 0..nz {
            z1_table[i * nz + j] = z1_index(&c1_mul(gx, br, &z1_list[i], &z1_list[j]))?;
        }
    }
    let z1_group = FiniteGroup::from_mul_table("Z1", nz, z1_table)?;

    // d bar on cosets; d vanishes on B0, so it must be constant on cosets
    let d_on_c0: Vec<usize> = c0
        .list
        .iter()
        .map(|a| z1_index(&d_map(gx, a)))
        .collect::<Result<_>>()?;
    for i in 0..c0.list.len() {
        if d_on_c0[i] != d_on_c0[q_reps[proj.apply(i)]] {
            return Err(Error::Invalid("d is not constant on B0-cosets".into()));
        }
    }
    let dbar = GroupHom::new(
        q.clone(),
        z1_group.clone(),
        q_reps.iter().map(|&i| d_on_c0[i]).collect(),
    )?;

    // action of Z1 on C0/B0, checked well-defined on cosets
    let act = {
        let mut t = vec![0usize; z1_group.order() * q.order()];
        for (zi, z) in z1_list.iter().enumerate() {
            for ci in 0..q.order() {
                let moved = act_z1_on_c0(gx, br, &c0.list[q_reps[ci]], z);
                let idx = c0
                    .index_of(&moved)
                    .ok_or_else(|| Error::Invalid("Z1 action escaped C0".into()))?;
                t[zi * q.order() + ci] = proj.apply(idx);
            }
        }
        for (zi, z) in z1_list.iter().enumerate() {
            for (i, a) in c0.list.iter().enumerate() {
                let moved = act_z1_on_c0(gx, br, a, z);
                let idx = c0
                    .index_of(&moved)
                    .ok_or_else(|| Error::Invalid("Z1 action escaped C0".into()))?;
                if proj.apply(idx) != t[zi * q.order() + proj.apply(i)] {
                    return Err(Error::Invalid("Z1 action not well-defined on C0/B0".into()));
                }
            }
        }
        GroupAction::new(z1_group.clone(), q.clone(), Side::Right, t)?
    };
    let xmod = CrossedModule::new(
        "[C0/B0->Z1]",
        q.clone(),
        z1_group.clone(),
        dbar.clone(),
        act,
    )?;

    let braiding = if symmetric {
        let mut bracket = vec![0usize; nz * nz];
        for i in 0..nz {
            for j in 0..nz {
                // reverse order: the bracket of (c_i, c_j) is the class of
                // the 0-cochain (1, s -> {p_j(s), p_i(s)})
                let theta: Vec<usize> = gx
                    .gamma
                    .elements()
                    .map(|s| br.br(gx.g0().order(), z1_list[j].p[s], z1_list[i].p[s]))
                    .collect();
                let c = Cochain0 { g: 0, theta };
                let idx = c0
                    .index_of(&c)
                    .ok_or_else(|| Error::Invalid("bracket value escaped C0".into()))?;
                bracket[i * nz + j] = proj.apply(idx);
            }
        }
        Some(Braiding {
            bracket,
            gamma_equivariant: false,
        })
    } else {
        None
    };

    // kernel of d bar is H0 on the nose (same cosets, same minimal reps)
    let h0_from_kernel = {
        let ker: Vec<usize> = q.elements().filter(|&i| dbar.apply(i) == 0).collect();
        let (kg, incl) = subgroup_as_group(&q, &ker, "ker dbar")?;
        let abelian = kg.is_abelian();
        CohomologySet {
            degree: 0,
            reps: incl
                .map
                .iter()
                .map(|&ci| c0.list[q_reps[ci]].key())
                .collect(),
            group: Some(kg),
            abelian: Some(abelian),
        }
    };
    // cokernel of d bar is H1
    let h1_from_cokernel = {
        let im = dbar.image();
        let (cg, cproj) = quotient_by_normal(&z1_group, &im)?;
        let mut reps = vec![usize::MAX; cg.order()];
        for i in 0..nz {
            let c = cproj.apply(i);
            if reps[c] == usize::MAX || i < reps[c] {
                reps[c] = i;
            }
        }
        let abelian = cg.is_abelian();
        CohomologySet {
            degree: 1,
            reps: reps.iter().map(|&i| z1_list[i].key()).collect(),
            group: Some(cg),
            abelian: Some(abelian),
        }
    };

    Ok(H1CrossedModule {
        xmod,
        braiding,
        c0,
        q,
        proj,
        q_reps,
        z1_list,
        z1_group,
        h0_from_kernel,
        h1_from_cokernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::xmod::{validate_braiding, BraidingLevel};

    fn c(n: usize) -> GroupRef {
        FiniteGroup::cyclic(n).unwrap()
    }

    /// [1 -> C2] with trivial C2-action.
    fn coeff_1_to_c2() -> GammaCrossedModule {
        let x = CrossedModule::discrete_quotient(&c(2));
        GammaCrossedModule::with_trivial_action(x, &c(2))
    }

    /// [C2 -> 1] with trivial C2-action.
    fn coeff_c2_to_1() -> GammaCrossedModule {
        let x = CrossedModule::discrete_kernel(&c(2));
        GammaCrossedModule::with_trivial_action(x, &c(2))
    }

    /// [C2 ->0 C2] with {a,b} = ab, trivial Gamma = C2 action.
    fn coeff_braided() -> (GammaCrossedModule, Braiding) {
        let c2 = c(2);
        let x = CrossedModule::new(
            "[C2->C2]",
            c2.clone(),
            c2.clone(),
            GroupHom::trivial(&c2, &c2),
            GroupAction::trivial(&c2, &c2, Side::Right),
        )
        .unwrap();
        let br = Braiding::from_fn(&x, |g, h| g & h);
        let gx = GammaCrossedModule::with_trivial_action(x, &c2);
        (gx, br)
    }

    #[test]
    fn zero_cocycle_counts() {
        let b = Budget::default();
        // gamma trivial: Z0 = {(g, 1)}
        let x = CrossedModule::discrete_quotient(&c(4));
        let gx = GammaCrossedModule::with_trivial_action(x, &FiniteGroup::trivial());
        assert_eq!(zero_cocycles(&gx, b).unwrap().len(), 4);
        // [1 -> C2], gamma C2: two cocycles
        assert_eq!(zero_cocycles(&coeff_1_to_c2(), b).unwrap().len(), 2);
        // [C2 -> 1], gamma C2: both pointed maps qualify
        let z = zero_cocycles(&coeff_c2_to_1(), b).unwrap();
        assert_eq!(z.len(), 2);
        assert!(z.iter().all(|c| c.g == 0));
    }

    #[test]
    fn zero_coboundary_examples() {
        // G1 trivial: B0 = {1}
        let gx = coeff_1_to_c2();
        assert_eq!(zero_coboundaries(&gx), vec![Cochain0::identity(&gx)]);
        // [C2 -> 1] trivial action: theta_mu = 1, so B0 = {(1,1)}
        let gx = coeff_c2_to_1();
        assert_eq!(zero_coboundaries(&gx).len(), 1);
        // gamma trivial: B0 = {(d mu, 1)}
        let x = CrossedModule::inner(&c(4));
        let gx = GammaCrossedModule::with_trivial_action(x, &FiniteGroup::trivial());
        assert_eq!(zero_coboundaries(&gx).len(), 4);
        // B0 is normal in all of C0 under the plain product
        for gx in [coeff_c2_to_1(), coeff_1_to_c2(), coeff_braided().0] {
            let b0 = zero_coboundaries(&gx);
            let all = all_cochains0(&gx, Budget::default()).unwrap();
            for a in &all {
                for b in &b0 {
                    let conj = c0_mul_plain(&gx, &c0_mul_plain(&gx, &c0_inv_plain(&gx, a), b), a);
                    assert!(b0.binary_search(&conj).is_ok(), "B0 must be normal in C0");
                }
            }
        }
    }

    #[test]
    fn h_minus1_examples() {
        let gx = coeff_c2_to_1();
        let h = h_minus1(&gx);
        assert_eq!(h.order(), 2);
        assert_eq!(h.abelian, Some(true));
        let inner = CrossedModule::inner(&c(4));
        let h = h_minus1(&GammaCrossedModule::with_trivial_action(inner, &c(2)));
        assert_eq!(h.order(), 1);
        // [C4 -> C4, x2]: kernel {0, 2}
        let c4 = c(4);
        let x = CrossedModule::new(
            "[C4->C4 x2]",
            c4.clone(),
            c4.clone(),
            GroupHom::new(c4.clone(), c4.clone(), vec![0, 2, 0, 2]).unwrap(),
            GroupAction::trivial(&c4, &c4, Side::Right),
        )
        .unwrap();
        let h = h_minus1(&GammaCrossedModule::with_trivial_action(
            x,
            &FiniteGroup::trivial(),
        ));
        assert_eq!(h.order(), 2);
        assert_eq!(h.reps, vec![vec![0], vec![2]]);
    }

    #[test]
    fn h_zero_examples() {
        let b = Budget::default();
        // gamma trivial: coker d
        let c4 = c(4);
        let x = CrossedModule::new(
            "[C4->C4 x2]",
            c4.clone(),
            c4.clone(),
            GroupHom::new(c4.clone(), c4.clone(), vec![0, 2, 0, 2]).unwrap(),
            GroupAction::trivial(&c4, &c4, Side::Right),
        )
        .unwrap();
        let gx = GammaCrossedModule::with_trivial_action(x, &FiniteGroup::trivial());
        assert_eq!(h_zero(&gx, b).unwrap().order(), 2);
        // [1 -> C2], gamma C2 trivial: fixed points = C2
        let h = h_zero(&coeff_1_to_c2(), b).unwrap();
        assert_eq!(h.order(), 2);
        // [C2 -> 1], gamma C2 trivial: crossed homs C2 -> C2 = 2 classes
        let h = h_zero(&coeff_c2_to_1(), b).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(h.abelian, Some(true));
    }

    #[test]
    fn c0_plain_group_axioms_scan() {
        let b = Budget::default();
        for gx in [coeff_1_to_c2(), coeff_c2_to_1()] {
            let all = all_cochains0(&gx, b).unwrap();
            let e = Cochain0::identity(&gx);
            for x in &all {
                assert_eq!(&c0_mul_plain(&gx, x, &e), x);
                assert_eq!(&c0_mul_plain(&gx, &e, x), x);
                assert_eq!(c0_mul_plain(&gx, x, &c0_inv_plain(&gx, x)), e);
                for y in &all {
                    let xy = c0_mul_plain(&gx, x, y);
                    for z in &all {
                        assert_eq!(
                            c0_mul_plain(&gx, &xy, z),
                            c0_mul_plain(&gx, x, &c0_mul_plain(&gx, y, z))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn braided_c0_is_a_group_and_agrees_on_z0() {
        let b = Budget::default();
        let (gx, br) = coeff_braided();
        assert!(validate_braiding(&gx.base, &br, BraidingLevel::Symmetric, Some(&gx)).ok());
        // group axioms via table validation
        let c0 = c0_braided_realization(&gx, &br, b).unwrap();
        assert_eq!(c0.group.order(), 4);
        // the two products agree on Z0
        let z0 = zero_cocycles(&gx, b).unwrap();
        for x in &z0 {
            for y in &z0 {
                assert_eq!(c0_mul_plain(&gx, x, y), c0_mul_braided(&gx, &br, x, y));
            }
        }
    }

    #[test]
    fn one_cocycle_counts() {
        let b = Budget::default();
        // gamma trivial: only the base cocycle
        let x = CrossedModule::inner(&c(4));
        let gx = GammaCrossedModule::with_trivial_action(x, &FiniteGroup::trivial());
        assert_eq!(one_cocycles(&gx, b).unwrap().len(), 1);
        // [1 -> C2]: crossed homs C2 -> C2: 2 cocycles
        assert_eq!(one_cocycles(&coeff_1_to_c2(), b).unwrap().len(), 2);
        // [C2 -> 1]: p forced trivial, eps has one free normalized value
        let z = one_cocycles(&coeff_c2_to_1(), b).unwrap();
        assert_eq!(z.len(), 2);
        assert!(z.iter().all(|c| c.p.iter().all(|&v| v == 0)));
    }

    #[test]
    fn action_examples() {
        let b = Budget::default();
        let gx = coeff_1_to_c2();
        let cocycles = one_cocycles(&gx, b).unwrap();
        let e = Cochain0::identity(&gx);
        for c in &cocycles {
            assert_eq!(&act_c0_on_z1(&gx, c, &e), c);
        }
        // action-then-action equals action-by-product
        let cochains = all_cochains0(&gx, b).unwrap();
        for c in &cocycles {
            for a in &cochains {
                for b2 in &cochains {
                    let one = act_c0_on_z1(&gx, &act_c0_on_z1(&gx, c, a), b2);
                    let two = act_c0_on_z1(&gx, c, &c0_mul_plain(&gx, a, b2));
                    assert_eq!(one, two);
                }
            }
        }
        // coboundaries stabilize the base cocycle
        let base = Cochain1::identity(&gx);
        for mu in gx.g1().elements() {
            assert_eq!(act_c0_on_z1(&gx, &base, &coboundary0(&gx, mu)), base);
        }
    }

    #[test]
    fn h_one_counts_match_classical() {
        let b = Budget::default();
        // gamma trivial: one class
        let x = CrossedModule::inner(&c(4));
        let gx = GammaCrossedModule::with_trivial_action(x, &FiniteGroup::trivial());
        assert_eq!(h_one(&gx, None, b).unwrap().order(), 1);
        // [1 -> C2]: classical H^1(C2, C2) has 2 classes
        assert_eq!(h_one(&coeff_1_to_c2(), None, b).unwrap().order(), 2);
        // [C2 -> 1]: classical H^2(C2, C2) has 2 classes
        assert_eq!(h_one(&coeff_c2_to_1(), None, b).unwrap().order(), 2);
    }

    #[test]
    fn c1_group_axioms_scan() {
        let b = Budget::default();
        let (gx, br) = coeff_braided();
        let n = gx.gamma.order();
        // materialize all of C1 for this small instance
        let mut all = Vec::new();
        for p1 in 0..gx.g0().order() {
            for e11 in 0..gx.g1().order() {
                let mut eps = vec![0usize; n * n];
                eps[n + 1] = e11;
                all.push(Cochain1 {
                    p: vec![0, p1],
                    eps,
                });
            }
        }
        let e = Cochain1::identity(&gx);
        for x in &all {
            assert_eq!(&c1_mul(&gx, &br, x, &e), x);
            assert_eq!(&c1_mul(&gx, &br, &e, x), x);
            assert_eq!(c1_mul(&gx, &br, x, &c1_inv(&gx, &br, x)), e);
            for y in &all {
                let xy = c1_mul(&gx, &br, x, y);
                for z in &all {
                    assert_eq!(
                        c1_mul(&gx, &br, &xy, z),
                        c1_mul(&gx, &br, x, &c1_mul(&gx, &br, y, z))
                    );
                }
            }
        }
        // Z1 is a subgroup: closed under product and inverse
        let z1 = one_cocycles(&gx, b).unwrap();
        for x in &z1 {
            assert!(is_one_cocycle(&gx, &c1_inv(&gx, &br, x)));
            for y in &z1 {
                assert!(is_one_cocycle(&gx, &c1_mul(&gx, &br, x, y)));
            }
        }
    }

    #[test]
    fn d_map_is_a_homomorphism_killing_b0() {
        let b = Budget::default();
        let (gx, br) = coeff_braided();
        let e1 = Cochain1::identity(&gx);
        assert_eq!(d_map(&gx, &Cochain0::identity(&gx)), e1);
        for mu in gx.g1().elements() {
            assert_eq!(d_map(&gx, &coboundary0(&gx, mu)), e1);
        }
        let all = all_cochains0(&gx, b).unwrap();
        for x in &all {
            for y in &all {
                assert_eq!(
                    d_map(&gx, &c0_mul_braided(&gx, &br, x, y)),
                    c1_mul(&gx, &br, &d_map(&gx, x), &d_map(&gx, y))
                );
            }
        }
    }

    #[test]
    fn coincide_and_h1_crossed_module() {
        let b = Budget::default();
        let (gx, br) = coeff_braided();
        let rep = verify_coincide(&gx, &br, b).unwrap();
        assert!(rep.ok(), "{rep}");
        let h1x = build_h1_crossed_module(&gx, &br, true, b).unwrap();
        assert!(crate::xmod::validate_crossed_module(&h1x.xmod).ok());
        let zbr = h1x.braiding.as_ref().unwrap();
        assert!(validate_braiding(&h1x.xmod, zbr, BraidingLevel::Symmetric, None).ok());
        // kernel of d bar is H0, cokernel is H1
        let h0 = h_zero(&gx, b).unwrap();
        assert_eq!(h1x.h0_from_kernel.reps, h0.reps);
        let h1 = h_one(&gx, Some(&br), b).unwrap();
        assert_eq!(h1x.h1_from_cokernel.reps, h1.reps);
        assert_eq!(h1.abelian, Some(true));
        // braided coefficients make H0 abelian
        assert_eq!(h0.abelian, Some(true));
    }

    #[test]
    fn z0_crossed_module_examples() {
        let b = Budget::default();
        let (gx, br) = coeff_braided();
        let (xm, zbr, z0) = z0_crossed_module(&gx, Some(&br), b).unwrap();
        assert!(crate::xmod::validate_crossed_module(&xm).ok());
        let zbr = zbr.unwrap();
        assert!(validate_braiding(&xm, &zbr, BraidingLevel::Braided, None).ok());
        // commutator of 0-cocycles is the coboundary of the bracket
        for (i, x) in z0.list.iter().enumerate() {
            for (j, y) in z0.list.iter().enumerate() {
                let comm = z0.group.commutator(i, j);
                let mu = br.br(gx.g0().order(), x.g, y.g);
                let expect = z0.index_of(&coboundary0(&gx, mu)).unwrap();
                assert_eq!(comm, expect);
            }
        }
        // [C2 -> 1]: boundary lands in B0 = {identity}
        let gx2 = coeff_c2_to_1();
        let (xm2, _, _) = z0_crossed_module(&gx2, None, b).unwrap();
        assert!(xm2.boundary.map.iter().all(|&v| v == 0));
    }
}
