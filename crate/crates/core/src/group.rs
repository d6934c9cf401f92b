//! Finite groups as explicit multiplication tables on element indices.
//!
//! Everything downstream (cocycles, butterflies, exact sequences) works with
//! element indices into these tables, so all arithmetic is exact and every
//! axiom is a finite scan. The identity is always index 0, and "the same
//! group" always means "the same table"; nothing here tests isomorphism
//! structurally.

use crate::error::{Error, Result};
use crate::report::ValidationReport;
use std::fmt;
use std::sync::Arc;

pub type GroupRef = Arc<FiniteGroup>;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.order)
    }
}

impl FiniteGroup {
    /// Build a group from a full multiplication table, checking the axioms.
    ///
    /// `mul` is row-major: `mul[a * order + b]` is the product `a * b`.
    /// Index 0 must be a two-sided identity.
    pub fn from_mul_table(
        label: impl Into<String>,
        order: usize,
        mul: Vec<usize>,
    ) -> Result<GroupRef> {
        let label = label.into();
        if order == 0 {
            return Err(Error::InvalidGroup {
                label,
                detail: "order must be positive".into(),
            });
        }
        if mul.len() != order * order {
            return Err(Error::InvalidGroup {
                label,
                detail: format!(
                    "table has {} entries, expected {}",
                    mul.len(),
                    order * order
                ),
            });
        }
        if let Some(&bad) = mul.iter().find(|&&x| x >= order) {
            return Err(Error::InvalidGroup {
                label,
                detail: format!("entry {bad} out of range"),
            });
        }
        // identity
        for a in 0..order {
            if mul[a] != a || mul[a * order] != a {
                return Err(Error::InvalidGroup {
                    label,
                    detail: format!("index 0 is not a two-sided identity at {a}"),
                });
            }
        }
        // inverses: every row and column must contain the identity exactly once
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    if inv[a] != usize::MAX && inv[a] != b {
                        return Err(Error::InvalidGroup {
                            label,
                            detail: format!("element {a} has two right inverses"),
                        });
                    }
                    inv[a] = b;
                }
            }
            if inv[a] == usize::MAX {
                return Err(Error::InvalidGroup {
                    label,
                    detail: format!("element {a} has no inverse"),
                });
            }
            if mul[inv[a] * order + a] != 0 {
                return Err(Error::InvalidGroup {
                    label,
                    detail: format!("inverse of {a} is not two-sided"),
                });
            }
        }
        // associativity, full scan
        for a in 0..order {
            for b in 0..order {
                let ab = mul[a * order + b];
                for c in 0..order {
                    if mul[ab * order + c] != mul[a * order + mul[b * order + c]] {
                        return Err(Error::InvalidGroup {
                            label,
                            detail: format!("associativity fails at ({a},{b},{c})"),
                        });
                    }
                }
            }
        }
        Ok(Arc::new(FiniteGroup {
            label,
            order,
            mul,
            inv,
        }))
    }

    /// Cyclic group Z/n with addition; rejects n = 0.
    pub fn cyclic(n: usize) -> Result<GroupRef> {
        if n == 0 {
            return Err(Error::InvalidGroup {
                label: format!("C{n}"),
                detail: "order must be positive".into(),
            });
        }
        let mut mul = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = (a + b) % n;
            }
        }
        FiniteGroup::from_mul_table(format!("C{n}"), n, mul)
    }

    pub fn trivial() -> GroupRef {
        FiniteGroup::cyclic(1).expect("trivial group")
    }

    /// Direct product with lexicographic index pairing: (x, y) -> x * |b| + y.
    pub fn direct_product(a: &GroupRef, b: &GroupRef) -> GroupRef {
        let n = a.order * b.order;
        let mut mul = vec![0usize; n * n];
        for x1 in 0..a.order {
            for y1 in 0..b.order {
                let i = x1 * b.order + y1;
                for x2 in 0..a.order {
                    for y2 in 0..b.order {
                        let j = x2 * b.order + y2;
                        mul[i * n + j] = a.mul(x1, x2) * b.order + b.mul(y1, y2);
                    }
                }
            }
        }
        FiniteGroup::from_mul_table(format!("{}x{}", a.label, b.label), n, mul)
            .expect("product of valid groups is valid")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// g^-1 * a * g
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// a^-1 * b^-1 * a * b
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut n = 1;
        while acc != 0 {
            acc = self.mul(acc, a);
            n += 1;
        }
        n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.order {
            for b in 0..a {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Closure of a generating set, as a sorted element list.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                for y in [self.mul(x, g), self.mul(x, self.inv(g))] {
                    if !seen[y] {
                        seen[y] = true;
                        frontier.push(y);
                    }
                }
            }
        }
        (0..self.order).filter(|&i| seen[i]).collect()
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        if !set.contains(&0) {
            return false;
        }
        let member = self.membership(set);
        set.iter()
            .all(|&a| member[self.inv(a)] && set.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn is_normal(&self, set: &[usize]) -> bool {
        self.is_subgroup(set)
            && set
                .iter()
                .all(|&n| (0..self.order).all(|g| self.membership(set)[self.conj(n, g)]))
    }

    fn membership(&self, set: &[usize]) -> Vec<bool> {
        let mut m = vec![false; self.order];
        for &x in set {
            m[x] = true;
        }
        m
    }

    /// Greedy minimal generating sequence: repeatedly adjoin the least element
    /// outside the subgroup generated so far. Deterministic.
    pub fn minimal_generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut have = self.subgroup_closure(&gens);
        while have.len() < self.order {
            let next = (0..self.order).find(|i| !have.contains(i)).unwrap();
            gens.push(next);
            have = self.subgroup_closure(&gens);
        }
        gens
    }

    /// Word expression of every element over `gens`: BFS from the identity,
    /// multiplying generators on the right. Returns for each element either
    /// the identity marker or (previous element, generator position).
    pub fn word_table(&self, gens: &[usize]) -> Option<Vec<(usize, usize)>> {
        let mut parent = vec![usize::MAX; self.order];
        let mut via = vec![usize::MAX; self.order];
        parent[0] = 0;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, &g) in gens.iter().enumerate() {
                let y = self.mul(x, g);
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    via[y] = gi;
                    queue.push_back(y);
                }
            }
        }
        if parent.contains(&usize::MAX) {
            return None;
        }
        Some(parent.into_iter().zip(via).collect())
    }

    /// Brute-force isomorphism search; returns an isomorphism table if one
    /// exists. Intended for desk-scale groups only.
    pub fn isomorphic_to(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order != other.order {
            return None;
        }
        let gens = self.minimal_generators();
        let words = self.word_table(&gens).expect("generators generate");
        // candidate images must match element orders
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let o = self.element_order(g);
                other
                    .elements()
                    .filter(|&h| other.element_order(h) == o)
                    .collect()
            })
            .collect();
        let mut choice = vec![0usize; gens.len()];
        fn rec(
            this: &FiniteGroup,
            other: &FiniteGroup,
            words: &[(usize, usize)],
            candidates: &[Vec<usize>],
            choice: &mut Vec<usize>,
            pos: usize,
        ) -> Option<Vec<usize>> {
            if pos == candidates.len() {
                // extend along words, then check bijectivity + hom
                let mut map = vec![usize::MAX; this.order()];
                map[0] = 0;
                let mut order_idx: Vec<usize> = (0..this.order()).collect();
                // BFS order: repeatedly resolve entries whose parent is resolved
                let mut progressed = true;
                while progressed {
                    progressed = false;
                    for &e in order_idx.iter() {
                        if map[e] != usize::MAX {
                            continue;
                        }
                        let (par, gi) = words[e];
                        if map[par] != usize::MAX {
                            map[e] = other.mul(map[par], choice[gi]);
                            progressed = true;
                        }
                    }
                }
                order_idx.sort_unstable();
                if map.contains(&usize::MAX) {
                    return None;
                }
                let mut seen = vec![false; this.order()];
                for &m in &map {
                    if seen[m] {
                        return None;
                    }
                    seen[m] = true;
                }
                for a in 0..this.order() {
                    for b in 0..this.order() {
                        if map[this.mul(a, b)] != other.mul(map[a], map[b]) {
                            return None;
                        }
                    }
                }
                return Some(map);
            }
            for &c in &candidates[pos] {
                choice[pos] = c;
                if let Some(m) = rec(this, other, words, candidates, choice, pos + 1) {
                    return Some(m);
                }
            }
            None
        }
        rec(self, other, &words, &candidates, &mut choice, 0)
    }

    /// Multiset of element orders; a cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }
}

/// Realize a closed subset of `g` as a group in its own right.
/// Returns the group plus the inclusion homomorphism.
pub fn subgroup_as_group(g: &GroupRef, set: &[usize], label: &str) -> Result<(GroupRef, GroupHom)> {
    if !g.is_subgroup(set) {
        return Err(Error::Invalid(format!(
            "{set:?} is not a subgroup of {}",
            g.label()
        )));
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    let index_of = |x: usize| sorted.binary_search(&x).expect("closed");
    let n = sorted.len();
    let mut mul = vec![0usize; n * n];
    for (i, &a) in sorted.iter().enumerate() {
        for (j, &b) in sorted.iter().enumerate() {
            mul[i * n + j] = index_of(g.mul(a, b));
        }
    }
    let sub = FiniteGroup::from_mul_table(label, n, mul)?;
    let incl = GroupHom::new(sub.clone(), g.clone(), sorted)?;
    Ok((sub, incl))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    pub source: GroupRef,
    pub target: GroupRef,
    pub map: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: GroupRef, target: GroupRef, map: Vec<usize>) -> Result<Self> {
        let h = GroupHom {
            source,
            target,
            map,
        };
        h.validate()?;
        Ok(h)
    }

    /// No validation; for negative-control fixtures in tests.
    pub fn new_unchecked(source: GroupRef, target: GroupRef, map: Vec<usize>) -> Self {
        GroupHom {
            source,
            target,
            map,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.map.len() != self.source.order() {
            return Err(Error::InvalidHom(format!(
                "map has {} entries, expected {}",
                self.map.len(),
                self.source.order()
            )));
        }
        if let Some(&bad) = self.map.iter().find(|&&x| x >= self.target.order()) {
            return Err(Error::InvalidHom(format!("value {bad} out of range")));
        }
        if self.map[0] != 0 {
            return Err(Error::InvalidHom("identity not preserved".into()));
        }
        for a in self.source.elements() {
            for b in self.source.elements() {
                if self.map[self.source.mul(a, b)] != self.target.mul(self.map[a], self.map[b]) {
                    return Err(Error::InvalidHom(format!(
                        "not multiplicative at ({a},{b})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn identity(g: &GroupRef) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            map: (0..g.order()).collect(),
        }
    }

    pub fn trivial(source: &GroupRef, target: &GroupRef) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            map: vec![0; source.order()],
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// self then other.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom> {
        if !std::ptr::eq(Arc::as_ptr(&self.target), Arc::as_ptr(&other.source))
            && self.target != other.source
        {
            return Err(Error::InvalidHom("composition mismatch".into()));
        }
        GroupHom::new(
            self.source.clone(),
            other.target.clone(),
            self.map.iter().map(|&x| other.map[x]).collect(),
        )
    }

    pub fn kernel(&self) -> Vec<usize> {
        self.source
            .elements()
            .filter(|&x| self.map[x] == 0)
            .collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.map.clone();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.order()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }

    /// Elements of the target fiber over `y`, in increasing order.
    pub fn fiber(&self, y: usize) -> Vec<usize> {
        self.source
            .elements()
            .filter(|&x| self.map[x] == y)
            .collect()
    }
}

/// Kernel and image as sorted element sets, both verified closed.
pub fn hom_kernel_image(f: &GroupHom) -> (Vec<usize>, Vec<usize>) {
    let ker = f.kernel();
    let im = f.image();
    debug_assert!(f.source.is_subgroup(&ker));
    debug_assert!(f.target.is_subgroup(&im));
    (ker, im)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A group action by automorphisms, stored as a full table.
///
/// For a left action, `(xy) . c = x . (y . c)`; for a right action,
/// `c^(xy) = (c^x)^y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    pub actor: GroupRef,
    pub carrier: GroupRef,
    pub side: Side,
    pub table: Vec<usize>,
}

impl GroupAction {
    pub fn new(actor: GroupRef, carrier: GroupRef, side: Side, table: Vec<usize>) -> Result<Self> {
        let a = GroupAction {
            actor,
            carrier,
            side,
            table,
        };
        a.validate()?;
        Ok(a)
    }

    pub fn new_unchecked(
        actor: GroupRef,
        carrier: GroupRef,
        side: Side,
        table: Vec<usize>,
    ) -> Self {
        GroupAction {
            actor,
            carrier,
            side,
            table,
        }
    }

    pub fn trivial(actor: &GroupRef, carrier: &GroupRef, side: Side) -> Self {
        let mut table = vec![0usize; actor.order() * carrier.order()];
        for x in actor.elements() {
            for c in carrier.elements() {
                table[x * carrier.order() + c] = c;
            }
        }
        GroupAction {
            actor: actor.clone(),
            carrier: carrier.clone(),
            side,
            table,
        }
    }

    /// Every non-identity actor element inverts the carrier. Valid only when
    /// that assignment is consistent (e.g. actor of exponent 2 on an abelian
    /// carrier); `new` performs the check.
    pub fn inversion(actor: &GroupRef, carrier: &GroupRef, side: Side) -> Result<Self> {
        let mut table = vec![0usize; actor.order() * carrier.order()];
        for x in actor.elements() {
            for c in carrier.elements() {
                table[x * carrier.order() + c] = if x == 0 { c } else { carrier.inv(c) };
            }
        }
        GroupAction::new(actor.clone(), carrier.clone(), side, table)
    }

    pub fn from_fn(
        actor: &GroupRef,
        carrier: &GroupRef,
        side: Side,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let mut table = vec![0usize; actor.order() * carrier.order()];
        for x in actor.elements() {
            for c in carrier.elements() {
                table[x * carrier.order() + c] = f(x, c);
            }
        }
        GroupAction::new(actor.clone(), carrier.clone(), side, table)
    }

    #[inline]
    pub fn apply(&self, x: usize, c: usize) -> usize {
        self.table[x * self.carrier.order() + c]
    }

    pub fn validate(&self) -> Result<()> {
        let report = self.validation_report();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidAction(format!("{} [{}]", v.axiom, v.witness))),
        }
    }

    pub fn validation_report(&self) -> ValidationReport {
        let mut rep = ValidationReport::new(format!(
            "action of {} on {}",
            self.actor.label(),
            self.carrier.label()
        ));
        let n = self.carrier.order();
        if self.table.len() != self.actor.order() * n {
            rep.push("table_size", format!("{} entries", self.table.len()));
            return rep;
        }
        if let Some(&bad) = self.table.iter().find(|&&v| v >= n) {
            rep.push("table_range", format!("value {bad}"));
            return rep;
        }
        for c in 0..n {
            rep.check(self.apply(0, c) == c, "identity_acts_trivially", || {
                format!("c={c}")
            });
        }
        for x in self.actor.elements() {
            // automorphism of the carrier
            let mut seen = vec![false; n];
            for c in 0..n {
                let v = self.apply(x, c);
                if seen[v] {
                    rep.push("actor_bijective", format!("x={x}"));
                    break;
                }
                seen[v] = true;
            }
            for c in 0..n {
                for d in 0..n {
                    rep.check(
                        self.apply(x, self.carrier.mul(c, d))
                            == self.carrier.mul(self.apply(x, c), self.apply(x, d)),
                        "actor_automorphism",
                        || format!("x={x}, c={c}, d={d}"),
                    );
                }
            }
        }
        for x in self.actor.elements() {
            for y in self.actor.elements() {
                let xy = self.actor.mul(x, y);
                for c in 0..n {
                    let lhs = self.apply(xy, c);
                    let rhs = match self.side {
                        Side::Left => self.apply(x, self.apply(y, c)),
                        Side::Right => self.apply(y, self.apply(x, c)),
                    };
                    rep.check(lhs == rhs, "composition_law", || {
                        format!("x={x}, y={y}, c={c}")
                    });
                }
            }
        }
        rep
    }

    /// Elements fixed by every actor element.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.carrier
            .elements()
            .filter(|&c| self.actor.elements().all(|x| self.apply(x, c) == c))
            .collect()
    }
}

/// Set of carrier elements fixed by every actor element.
pub fn fixed_points(act: &GroupAction) -> Vec<usize> {
    act.fixed_points()
}

/// Semidirect product N x| H for a left action of `h` on `n` by automorphisms.
///
/// Elements are pairs (n-part, h-part) with index `x * |h| + y`, multiplied by
/// (x1, y1)(x2, y2) = (x1 * (y1 . x2), y1 * y2). Returns the group together
/// with the inclusion of `n` and the projection onto `h`.
pub fn make_semidirect(
    n: &GroupRef,
    h: &GroupRef,
    act: &GroupAction,
) -> Result<(GroupRef, GroupHom, GroupHom)> {
    if act.side != Side::Left {
        return Err(Error::InvalidAction(
            "semidirect product needs a left action".into(),
        ));
    }
    if act.actor != *h || act.carrier != *n {
        return Err(Error::InvalidAction(
            "action does not match semidirect factors".into(),
        ));
    }
    act.validate()?;
    let ord = n.order() * h.order();
    let mut mul = vec![0usize; ord * ord];
    for x1 in n.elements() {
        for y1 in h.elements() {
            let i = x1 * h.order() + y1;
            for x2 in n.elements() {
                for y2 in h.elements() {
                    let j = x2 * h.order() + y2;
                    mul[i * ord + j] = n.mul(x1, act.apply(y1, x2)) * h.order() + h.mul(y1, y2);
                }
            }
        }
    }
    let g = FiniteGroup::from_mul_table(format!("{}:{}", n.label(), h.label()), ord, mul)?;
    let incl = GroupHom::new(
        n.clone(),
        g.clone(),
        n.elements().map(|x| x * h.order()).collect(),
    )?;
    let proj = GroupHom::new(
        g.clone(),
        h.clone(),
        (0..ord).map(|i| i % h.order()).collect(),
    )?;
    Ok((g, incl, proj))
}

/// Quotient by a normal subgroup. Cosets are represented by their minimal
/// element index and the quotient is ordered by representative.
pub fn quotient_by_normal(g: &GroupRef, n: &[usize]) -> Result<(GroupRef, GroupHom)> {
    if !g.is_subgroup(n) {
        return Err(Error::Normality(format!(
            "{n:?} is not a subgroup of {}",
            g.label()
        )));
    }
    if !g.is_normal(n) {
        let witness = n
            .iter()
            .find_map(|&x| {
                g.elements()
                    .find(|&h| {
                        let c = g.conj(x, h);
                        !n.contains(&c)
                    })
                    .map(|h| (x, h))
            })
            .unwrap();
        return Err(Error::Normality(format!(
            "subgroup not normal in {}: conjugate of {} by {} escapes",
            g.label(),
            witness.0,
            witness.1
        )));
    }
    let mut coset_rep = vec![usize::MAX; g.order()];
    let mut reps: Vec<usize> = Vec::new();
    for x in g.elements() {
        if coset_rep[x] != usize::MAX {
            continue;
        }
        // right coset xN; minimal member is the representative
        let members: Vec<usize> = n.iter().map(|&m| g.mul(x, m)).collect();
        let rep = *members.iter().min().unwrap();
        for &y in &members {
            coset_rep[y] = rep;
        }
        if !reps.contains(&rep) {
            reps.push(rep);
        }
    }
    reps.sort_unstable();
    let index_of = |rep: usize| reps.binary_search(&rep).expect("known rep");
    let k = reps.len();
    let mut mul = vec![0usize; k * k];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * k + j] = index_of(coset_rep[g.mul(a, b)]);
        }
    }
    let q = FiniteGroup::from_mul_table(format!("{}/N", g.label()), k, mul)?;
    let proj = GroupHom::new(
        g.clone(),
        q.clone(),
        (0..g.order()).map(|x| index_of(coset_rep[x])).collect(),
    )?;
    Ok((q, proj))
}

/// A map of pointed sets between group element ranges: fixes the identity,
/// no multiplicativity required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedMap {
    pub source: GroupRef,
    pub target: GroupRef,
    pub map: Vec<usize>,
}

impl PointedMap {
    pub fn new(source: GroupRef, target: GroupRef, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::Invalid(format!(
                "pointed map has {} entries, expected {}",
                map.len(),
                source.order()
            )));
        }
        if map[0] != 0 {
            return Err(Error::Invalid("pointed map must fix the identity".into()));
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= target.order()) {
            return Err(Error::Invalid(format!(
                "pointed map value {bad} out of range"
            )));
        }
        Ok(PointedMap {
            source,
            target,
            map,
        })
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        assert!(FiniteGroup::cyclic(0).is_err());
        let c1 = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(c1.order(), 1);
        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(c2.mul(1, 1), 0);
        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(c4.inv(1), 3);
    }

    #[test]
    fn direct_product_examples() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let v4 = FiniteGroup::direct_product(&c2, &c2);
        assert_eq!(v4.order(), 4);
        for a in 1..4 {
            assert_eq!(v4.inv(a), a);
        }
        let c1 = FiniteGroup::cyclic(1).unwrap();
        let g = FiniteGroup::direct_product(&c1, &c3);
        assert_eq!(g.mul[..], c3.mul[..]);
        // (1,1) in C2 x C3 has order 6, by repeated multiplication
        let c6 = FiniteGroup::direct_product(&c2, &c3);
        let e = 3 + 1;
        assert_eq!(c6.element_order(e), 6);
    }

    #[test]
    fn semidirect_examples() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c3 = FiniteGroup::cyclic(3).unwrap();
        // trivial action gives the direct product table
        let triv = GroupAction::trivial(&c2, &c3, Side::Left);
        let (g, _, _) = make_semidirect(&c3, &c2, &triv).unwrap();
        let dp = FiniteGroup::direct_product(&c3, &c2);
        assert_eq!(g.mul[..], dp.mul[..]);
        // inversion gives S3: nonabelian with exactly 3 elements of order 2
        let inv = GroupAction::inversion(&c2, &c3, Side::Left).unwrap();
        let (s3, _, _) = make_semidirect(&c3, &c2, &inv).unwrap();
        assert!(!s3.is_abelian());
        let twos = s3.elements().filter(|&x| s3.element_order(x) == 2).count();
        assert_eq!(twos, 3);
        // C1 acting leaves the table unchanged
        let c1 = FiniteGroup::cyclic(1).unwrap();
        let t = GroupAction::trivial(&c1, &c3, Side::Left);
        let (same, _, _) = make_semidirect(&c3, &c1, &t).unwrap();
        assert_eq!(same.mul[..], c3.mul[..]);
    }

    #[test]
    fn kernel_image_examples() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let idh = GroupHom::identity(&c4);
        let (k, im) = hom_kernel_image(&idh);
        assert_eq!(k, vec![0]);
        assert_eq!(im, vec![0, 1, 2, 3]);
        let double = GroupHom::new(c4.clone(), c4.clone(), vec![0, 2, 0, 2]).unwrap();
        let (k, im) = hom_kernel_image(&double);
        assert_eq!(k, vec![0, 2]);
        assert_eq!(im, vec![0, 2]);
        let zero = GroupHom::trivial(&c4, &c4);
        let (k, im) = hom_kernel_image(&zero);
        assert_eq!(k, vec![0, 1, 2, 3]);
        assert_eq!(im, vec![0]);
    }

    #[test]
    fn quotient_examples() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let (q, proj) = quotient_by_normal(&c4, &[0]).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(proj.map, vec![0, 1, 2, 3]);
        let (q, _) = quotient_by_normal(&c4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(q.order(), 1);
        let (q, proj) = quotient_by_normal(&c4, &[0, 2]).unwrap();
        assert_eq!(q.order(), 2);
        // kernel of the projection is the subgroup we quotiented by
        let (k, _) = hom_kernel_image(&proj);
        assert_eq!(k, vec![0, 2]);
        // non-normal subgroup rejected
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let inv =
            GroupAction::inversion(&c2, &FiniteGroup::cyclic(3).unwrap(), Side::Left).unwrap();
        let (s3, _, _) = make_semidirect(&FiniteGroup::cyclic(3).unwrap(), &c2, &inv).unwrap();
        let refl = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let sub = s3.subgroup_closure(&[refl]);
        assert!(matches!(
            quotient_by_normal(&s3, &sub),
            Err(Error::Normality(_))
        ));
    }

    #[test]
    fn fixed_point_examples() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(
            GroupAction::trivial(&c2, &c3, Side::Left).fixed_points(),
            vec![0, 1, 2]
        );
        assert_eq!(
            GroupAction::inversion(&c2, &c3, Side::Left)
                .unwrap()
                .fixed_points(),
            vec![0]
        );
        assert_eq!(
            GroupAction::inversion(&c2, &c4, Side::Left)
                .unwrap()
                .fixed_points(),
            vec![0, 2]
        );
    }

    #[test]
    fn iso_search_finds_klein_vs_c4_distinction() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let v4 = FiniteGroup::direct_product(&c2, &c2);
        assert!(c4.isomorphic_to(&v4).is_none());
        let v4b = FiniteGroup::direct_product(&c2, &c2);
        assert!(v4.isomorphic_to(&v4b).is_some());
    }
}
