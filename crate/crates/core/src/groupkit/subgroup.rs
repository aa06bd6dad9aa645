use std::collections::BTreeMap;

use rayon::prelude::*;

use super::codeset::CodeSet;
use super::kernel;
use super::{AbelianType, GroupError, PackedElement, TruncatedGroup, MAX_GROUP_ORDER};

/// Number of elements of each order.
pub type OrderCensus = BTreeMap<u64, u64>;

/// An enumerated subgroup: generators plus the sorted list of all elements.
#[derive(Clone, Debug)]
pub struct SubgroupTable {
    group: TruncatedGroup,
    generators: Vec<PackedElement>,
    elements: Vec<PackedElement>,
    set: CodeSet,
}

impl PartialEq for SubgroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.elements == other.elements
    }
}

impl Eq for SubgroupTable {}

/// Incremental closure: the element list stays closed under right
/// multiplication by every generator added so far.
struct Builder {
    group: TruncatedGroup,
    gens: Vec<PackedElement>,
    elems: Vec<PackedElement>,
    set: CodeSet,
}

impl Builder {
    fn new(group: TruncatedGroup) -> Self {
        let mut set = CodeSet::with_space(group.order());
        set.insert(0);
        Builder { group, gens: Vec::new(), elems: vec![PackedElement::IDENTITY], set }
    }

    fn push(&mut self, y: PackedElement) -> Result<(), GroupError> {
        if self.set.insert(y.0) {
            self.elems.push(y);
            if self.elems.len() as u64 > MAX_GROUP_ORDER {
                return Err(GroupError::SizeCap { limit: MAX_GROUP_ORDER });
            }
        }
        Ok(())
    }

    /// Adds `s` as a generator unless it is already an element.
    fn add_generator(&mut self, s: PackedElement) -> Result<bool, GroupError> {
        if self.set.contains(s.0) {
            return Ok(false);
        }
        self.gens.push(s);
        let old = self.elems.len();
        for i in 0..old {
            let y = self.group.mul(self.elems[i], s);
            self.push(y)?;
        }
        let mut i = old;
        while i < self.elems.len() {
            let x = self.elems[i];
            for j in 0..self.gens.len() {
                let y = self.group.mul(x, self.gens[j]);
                self.push(y)?;
            }
            i += 1;
        }
        Ok(true)
    }

    fn contains(&self, x: PackedElement) -> bool {
        self.set.contains(x.0)
    }

    fn finish(mut self) -> SubgroupTable {
        self.elems.sort_unstable();
        SubgroupTable { group: self.group, generators: self.gens, elements: self.elems, set: self.set }
    }
}

impl SubgroupTable {
    /// The subgroup generated by `gens`. Generators that are already
    /// produced by earlier ones are not recorded.
    pub fn closure(group: TruncatedGroup, gens: &[PackedElement]) -> Result<Self, GroupError> {
        let mut b = Builder::new(group);
        for &s in gens {
            b.add_generator(s)?;
        }
        Ok(b.finish())
    }

    pub fn trivial(group: TruncatedGroup) -> Self {
        Builder::new(group).finish()
    }

    pub fn group(&self) -> TruncatedGroup {
        self.group
    }

    pub fn generators(&self) -> &[PackedElement] {
        &self.generators
    }

    /// All elements in increasing code order.
    pub fn elements(&self) -> &[PackedElement] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, x: PackedElement) -> bool {
        self.set.contains(x.0)
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.group == other.group && self.generators.iter().all(|&h| other.contains(h))
    }

    /// Every generator conjugated by every generator of `other` stays inside.
    pub fn is_normal_in(&self, other: &Self) -> bool {
        self.is_subgroup_of(other)
            && other.generators.iter().all(|&a| {
                let ai = self.group.inv(a);
                self.generators
                    .iter()
                    .all(|&h| self.contains(self.group.mul(self.group.mul(ai, h), a)))
            })
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.group;
        self.generators.iter().enumerate().all(|(i, &x)| {
            self.generators[i + 1..]
                .iter()
                .all(|&y| g.mul(x, y) == g.mul(y, x))
        })
    }

    /// Sorted element codes as hex strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "group": self.group.to_string(),
            "order": self.order().to_string(),
            "generators": self.generators.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "elements": self.elements.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// The smallest subgroup containing `seed` and closed under conjugation by
/// `ambient_gens`.
pub fn normal_closure(
    group: TruncatedGroup,
    seed: &[PackedElement],
    ambient_gens: &[PackedElement],
) -> Result<SubgroupTable, GroupError> {
    let mut b = Builder::new(group);
    for &s in seed {
        b.add_generator(s)?;
    }
    let conj: Vec<(PackedElement, PackedElement)> =
        ambient_gens.iter().map(|&a| (group.inv(a), a)).collect();
    let mut i = 0;
    while i < b.gens.len() {
        let k = b.gens[i];
        for &(ai, a) in &conj {
            let c = group.mul(group.mul(ai, k), a);
            if !b.contains(c) {
                b.add_generator(c)?;
            }
        }
        i += 1;
    }
    Ok(b.finish())
}

fn check_pair(h: &SubgroupTable, g: &SubgroupTable) -> Result<(), GroupError> {
    if h.group != g.group {
        return Err(GroupError::GroupMismatch);
    }
    if !h.is_subgroup_of(g) {
        return Err(GroupError::NotSubgroup);
    }
    Ok(())
}

/// `[H, G]` as the normal closure in `G` of the commutators of generators.
pub fn commutator_subgroup(h: &SubgroupTable, g: &SubgroupTable) -> Result<SubgroupTable, GroupError> {
    check_pair(h, g)?;
    if !h.is_normal_in(g) {
        return Err(GroupError::NotNormal);
    }
    let grp = h.group;
    let seed: Vec<PackedElement> = h
        .generators
        .iter()
        .flat_map(|&x| g.generators.iter().map(move |&y| grp.commutator(x, y)))
        .collect();
    normal_closure(grp, &seed, &g.generators)
}

/// Codes above this bound do not get per-code lookup tables.
const TABLE_LIMIT: u64 = 1 << 17;

/// `[H, G]` as the closure of `{[h, g] : h in H, g in G}`, every pair
/// evaluated. Kept as the reference for [`commutator_subgroup`].
pub fn commutator_subgroup_brute(
    h: &SubgroupTable,
    g: &SubgroupTable,
) -> Result<SubgroupTable, GroupError> {
    check_pair(h, g)?;
    let grp = h.group;
    let found = if grp.is_binary() && grp.order() <= TABLE_LIMIT {
        binary_commutators(h, g)
    } else {
        generic_commutators(h, g)
    };
    let mut b = Builder::new(grp);
    for c in found.sorted() {
        b.add_generator(PackedElement(c))?;
    }
    Ok(b.finish())
}

fn generic_commutators(h: &SubgroupTable, g: &SubgroupTable) -> CodeSet {
    let grp = h.group;
    let g_inv: Vec<PackedElement> = g.elements.par_iter().map(|&y| grp.inv(y)).collect();
    h.elements
        .par_iter()
        .fold(
            || CodeSet::with_space(grp.order()),
            |mut set, &x| {
                let xi = grp.inv(x);
                for (&y, &yi) in g.elements.iter().zip(&g_inv) {
                    let c = grp.mul(grp.mul(xi, yi), grp.mul(x, y));
                    set.insert(c.0);
                }
                set
            },
        )
        .reduce(|| CodeSet::with_space(grp.order()), CodeSet::union)
}

/// Binary fast path: `[h, g] = (gh)^-1 (hg)` with the powers of every `f`
/// and every inverse looked up by code.
fn binary_commutators(h: &SubgroupTable, g: &SubgroupTable) -> CodeSet {
    let grp = h.group;
    let n = grp.level();
    let stride = n + 1;
    let space = grp.order() as usize;
    let mask = kernel::series_mask(n);

    let mut pows = vec![0u64; space * stride];
    let mut inv = vec![0u64; space];
    pows.par_chunks_mut(stride)
        .zip(inv.par_iter_mut())
        .enumerate()
        .for_each(|(code, (p, iv))| {
            let (gc, fc) = kernel::decode2(code as u64, n);
            kernel::powers2(fc, n, p);
            let (gi, fi) = kernel::inv2(gc, fc, n);
            *iv = kernel::encode2(gi, fi, n);
        });

    // [g, h] is the inverse of [h, g], so when both sides are the same
    // subgroup the pairs with g after h already generate everything.
    let same = h == g;
    let gs = &g.elements;
    h.elements
        .par_iter()
        .enumerate()
        .fold(
            || CodeSet::with_space(grp.order()),
            |mut set, (idx, &x)| {
                let (gx, fx) = kernel::decode2(x.0, n);
                let px = &pows[x.0 as usize * stride..][..stride];
                let start = if same { idx + 1 } else { 0 };
                for &y in &gs[start..] {
                    let (gy, fy) = kernel::decode2(y.0, n);
                    let py = &pows[y.0 as usize * stride..][..stride];
                    let (gu, fu) = kernel::mul2_with(gy, gx, fx, py, mask);
                    let (gv, fv) = kernel::mul2_with(gx, gy, fy, px, mask);
                    let w = inv[kernel::encode2(gu, fu, n) as usize];
                    let (gw, _) = kernel::decode2(w, n);
                    let pw = &pows[w as usize * stride..][..stride];
                    let (gc, fc) = kernel::mul2_with(gw, gv, fv, pw, mask);
                    set.insert(kernel::encode2(gc, fc, n));
                }
                set
            },
        )
        .reduce(|| CodeSet::with_space(grp.order()), CodeSet::union)
}

/// `[gamma_1 = G, gamma_2, ...]` with `gamma_(i+1) = [gamma_i, G]`, stopping
/// after the first trivial term or after `max_terms` terms.
pub fn lower_central_series(g: &SubgroupTable, max_terms: usize) -> Result<Vec<SubgroupTable>, GroupError> {
    let mut terms = vec![g.clone()];
    while terms.len() < max_terms {
        let last = terms.last().expect("non-empty");
        if last.is_trivial() {
            break;
        }
        let next = commutator_subgroup(last, g)?;
        terms.push(next);
    }
    Ok(terms)
}

/// `gamma_i` of the group generated by `gens`, built as the normal closure of
/// the left-normed commutators `[y_1, ..., y_i]` of generators. Only the term
/// itself is enumerated, so it reaches levels where the whole group is too big.
pub fn lower_central_term(
    group: TruncatedGroup,
    gens: &[PackedElement],
    i: usize,
) -> Result<SubgroupTable, GroupError> {
    if i <= 1 {
        return SubgroupTable::closure(group, gens);
    }
    let mut layer: Vec<PackedElement> = gens.to_vec();
    for _ in 1..i {
        let mut next: Vec<PackedElement> = layer
            .iter()
            .flat_map(|&c| gens.iter().map(move |&y| group.commutator(c, y)))
            .filter(|c| !c.is_identity())
            .collect();
        next.sort_unstable();
        next.dedup();
        layer = next;
    }
    normal_closure(group, &layer, gens)
}

pub fn order_census(g: &SubgroupTable) -> OrderCensus {
    let grp = g.group;
    g.elements
        .par_iter()
        .fold(OrderCensus::new, |mut m, &x| {
            *m.entry(grp.element_order(x)).or_default() += 1;
            m
        })
        .reduce(OrderCensus::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        })
}

pub fn abelian_invariants(a: &SubgroupTable) -> Result<AbelianType, GroupError> {
    if !a.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    AbelianType::from_census(&order_census(a))
}

/// Order census of `G/N` on the minimal code of each coset.
pub fn quotient_census(g: &SubgroupTable, n: &SubgroupTable) -> Result<OrderCensus, GroupError> {
    if g.group != n.group {
        return Err(GroupError::GroupMismatch);
    }
    if !n.is_normal_in(g) {
        return Err(GroupError::QuotientNotNormal);
    }
    let grp = g.group;
    let mut assigned = CodeSet::with_space(grp.order());
    let mut reps = Vec::new();
    for &x in &g.elements {
        if assigned.contains(x.0) {
            continue;
        }
        reps.push(x);
        for &k in &n.elements {
            assigned.insert(grp.mul(x, k).0);
        }
    }
    let census = reps
        .par_iter()
        .map(|&x| {
            let mut y = x;
            let mut k = 1;
            while !n.contains(y) {
                y = grp.mul(y, x);
                k += 1;
            }
            k
        })
        .fold(OrderCensus::new, |mut m, k| {
            *m.entry(k).or_default() += 1;
            m
        })
        .reduce(OrderCensus::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(census)
}

/// Invariant factors of the abelian quotient `G/N`.
pub fn quotient_abelian_invariants(g: &SubgroupTable, n: &SubgroupTable) -> Result<AbelianType, GroupError> {
    if !n.is_normal_in(g) {
        return Err(GroupError::QuotientNotNormal);
    }
    let grp = g.group;
    let gens = &g.generators;
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i + 1..] {
            if !n.contains(grp.commutator(x, y)) {
                return Err(GroupError::QuotientNotAbelian);
            }
        }
    }
    AbelianType::from_census(&quotient_census(g, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(n: usize) -> (TruncatedGroup, SubgroupTable) {
        let grp = TruncatedGroup::binary(n).unwrap();
        let full = grp.full().unwrap();
        (grp, full)
    }

    #[test]
    fn closure_examples() {
        let grp = TruncatedGroup::binary(2).unwrap();
        let a1 = grp.elem_a(1, 1).unwrap();
        assert_eq!(SubgroupTable::closure(grp, &[a1]).unwrap().order(), 4);
        let e1 = grp.elem_e(1, 1);
        assert_eq!(SubgroupTable::closure(grp, &[a1, e1]).unwrap().order(), 8);
        assert_eq!(SubgroupTable::closure(grp, &[]).unwrap().order(), 1);
    }

    #[test]
    fn closure_ignores_generator_order() {
        let (grp, full) = tr(4);
        let mut gens = grp.generators();
        gens.reverse();
        assert_eq!(SubgroupTable::closure(grp, &gens).unwrap(), full);
        let again = SubgroupTable::closure(grp, full.elements()).unwrap();
        assert_eq!(again, full);
    }

    #[test]
    fn normal_closure_examples() {
        let (grp, full) = tr(4);
        assert!(normal_closure(grp, &[grp.identity()], full.generators()).unwrap().is_trivial());
        let a2 = grp.elem_a(2, 1).unwrap();
        let nc = normal_closure(grp, &[a2], full.generators()).unwrap();
        // Oracle: the subgroup generated by every conjugate of a2.
        let conjugates: Vec<PackedElement> =
            full.elements().iter().map(|&x| grp.conjugate(a2, x)).collect();
        assert_eq!(nc, SubgroupTable::closure(grp, &conjugates).unwrap());
        assert!(nc.contains(grp.elem_a(4, 1).unwrap()));
        // Conjugating 1 + t^2 by a substitution gives 1 + fbar(t)^2, which
        // over F2 has even-degree terms only.
        assert!(!nc.contains(grp.elem_a(3, 1).unwrap()));
        assert!(nc.elements().iter().all(|&x| grp.is_appell(x)));
        let appell = grp.appell().unwrap();
        let nc = normal_closure(grp, appell.generators(), full.generators()).unwrap();
        assert_eq!(nc, appell);
    }

    #[test]
    fn commutators_of_d4() {
        let (grp, full) = tr(2);
        let d = commutator_subgroup(&full, &full).unwrap();
        assert_eq!(d.order(), 2);
        assert_eq!(commutator_subgroup_brute(&full, &full).unwrap(), d);
        let triv = SubgroupTable::trivial(grp);
        assert!(commutator_subgroup(&full, &triv).is_err());
        assert!(commutator_subgroup(&triv, &full).unwrap().is_trivial());
        let q = quotient_abelian_invariants(&full, &d).unwrap();
        assert_eq!(q.factors(), &[2, 2]);
    }

    #[test]
    fn non_normal_first_argument_is_rejected() {
        let (grp, full) = tr(3);
        let h = SubgroupTable::closure(grp, &[grp.elem_e(1, 1)]).unwrap();
        let err = commutator_subgroup(&h, &full).unwrap_err();
        assert_eq!(err.to_string(), "commutator requires normal first argument");
        assert!(quotient_abelian_invariants(&full, &h).is_err());
    }

    #[test]
    fn lower_central_series_small() {
        let (_, full) = tr(1);
        let s = lower_central_series(&full, 10).unwrap();
        assert_eq!(s.iter().map(|t| t.order()).collect::<Vec<_>>(), vec![2, 1]);
        let (_, full) = tr(2);
        let s = lower_central_series(&full, 10).unwrap();
        assert_eq!(s.iter().map(|t| t.order()).collect::<Vec<_>>(), vec![8, 2, 1]);
    }

    #[test]
    fn weight_commutators_match_iterated_series() {
        for n in 1..=6 {
            let (grp, full) = tr(n);
            let series = lower_central_series(&full, 20).unwrap();
            for (k, term) in series.iter().enumerate() {
                let direct = lower_central_term(grp, full.generators(), k + 1).unwrap();
                assert_eq!(&direct, term, "n={n} i={}", k + 1);
            }
            let past = lower_central_term(grp, full.generators(), series.len() + 1).unwrap();
            assert!(past.is_trivial());
        }
    }

    #[test]
    fn censuses() {
        let (_, full) = tr(2);
        assert_eq!(order_census(&full), OrderCensus::from([(1, 1), (2, 5), (4, 2)]));
        let (_, full) = tr(3);
        assert_eq!(order_census(&full), OrderCensus::from([(1, 1), (2, 19), (4, 12)]));
        let grp = TruncatedGroup::binary(4).unwrap();
        let a = grp.appell().unwrap();
        assert_eq!(order_census(&a), OrderCensus::from([(1, 1), (2, 3), (4, 4), (8, 8)]));
        assert_eq!(abelian_invariants(&a).unwrap().factors(), &[8, 2]);
    }

    #[test]
    fn abelian_invariants_small() {
        let grp = TruncatedGroup::binary(2).unwrap();
        assert_eq!(abelian_invariants(&grp.appell().unwrap()).unwrap().factors(), &[4]);
        assert!(abelian_invariants(&SubgroupTable::trivial(grp)).unwrap().factors().is_empty());
        assert!(abelian_invariants(&grp.full().unwrap()).is_err());
        let (_, full) = tr(3);
        assert!(quotient_abelian_invariants(&full, &full).unwrap().factors().is_empty());
    }
}
