//! Subgroup structure: closures, series, the normal lattice, p-cores and the
//! Fitting subgroup.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::classes::{class_coefficients, conjugacy_classes};
use crate::error::Error;
use crate::group::{PermGroup, ENUMERATION_LIMIT};
use crate::perm::Permutation;

/// Normal lattices are computed only for groups with at most this many classes.
pub const LATTICE_CLASS_LIMIT: usize = 40;

fn check_degree(a: &PermGroup, b: &PermGroup) -> Result<(), Error> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors, ascending.
pub fn prime_divisors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d as u64);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

/// True iff `n` is a power of `p` (including `p^0 = 1`).
pub fn is_power_of(mut n: u128, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    let p = p as u128;
    if p < 2 {
        return n == 1;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// True iff `n` is a prime power `p^k` with `k >= 1`.
pub fn is_prime_power(n: u128) -> bool {
    let ps = prime_divisors(n);
    ps.len() == 1
}

pub fn generated(degree: usize, elements: &[Permutation]) -> Result<PermGroup, Error> {
    PermGroup::new(degree, elements.to_vec())
}

/// Subgroup generated by the union of two groups' generators.
pub fn join(a: &PermGroup, b: &PermGroup) -> Result<PermGroup, Error> {
    check_degree(a, b)?;
    let mut gens = a.generators().to_vec();
    gens.extend_from_slice(b.generators());
    PermGroup::new(a.degree(), gens)
}

pub fn is_subgroup(h: &PermGroup, g: &PermGroup) -> Result<bool, Error> {
    check_degree(h, g)?;
    Ok(h.generators().iter().all(|x| g.has(x)))
}

pub fn is_normal(h: &PermGroup, g: &PermGroup) -> Result<bool, Error> {
    if !is_subgroup(h, g)? {
        return Ok(false);
    }
    Ok(g
        .generators()
        .iter()
        .all(|s| h.generators().iter().all(|x| h.has(&x.conjugate(s)))))
}

/// Smallest normal subgroup of `g` containing `elements`.
pub fn normal_closure(g: &PermGroup, elements: &[Permutation]) -> PermGroup {
    let degree = g.degree();
    let mut gens: Vec<Permutation> = elements.iter().filter(|x| !x.is_identity()).cloned().collect();
    let mut n = PermGroup::new(degree, gens.clone()).unwrap();
    let mut i = 0;
    while i < gens.len() {
        let x = gens[i].clone();
        for s in g.generators() {
            let y = x.conjugate(s);
            if !n.has(&y) {
                gens.push(y);
                n = PermGroup::new(degree, gens.clone()).unwrap();
            }
        }
        i += 1;
    }
    n
}

fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    a.inverse().mul_unchecked(&b.inverse()).mul_unchecked(a).mul_unchecked(b)
}

/// `[A, B]` for `A`, `B` normal in `g`.
pub fn commutator_subgroup(g: &PermGroup, a: &PermGroup, b: &PermGroup) -> PermGroup {
    let mut comms = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            let c = commutator(x, y);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    commutator_subgroup(g, g, g)
}

/// `G, G', G'', ...` ending at the first repeated term.
pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = alloc::vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn derived_length(g: &PermGroup) -> Option<usize> {
    let series = derived_series(g);
    if series.last().unwrap().is_trivial() {
        Some(series.len() - 1)
    } else {
        None
    }
}

pub fn is_perfect(g: &PermGroup) -> bool {
    derived_subgroup(g).order() == g.order()
}

pub fn is_solvable(g: &PermGroup) -> bool {
    derived_series(g).last().unwrap().is_trivial()
}

pub fn is_abelian(g: &PermGroup) -> bool {
    let gens = g.generators();
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a * b == b * a))
}

/// `G = γ_1 >= γ_2 = [G, G] >= ...` ending at the first repeated term.
pub fn lower_central_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = alloc::vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, last, g);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_nilpotent(g: &PermGroup) -> bool {
    lower_central_series(g).last().unwrap().is_trivial()
}

pub fn is_cyclic(g: &PermGroup) -> Result<bool, Error> {
    if g.is_trivial() {
        return Ok(true);
    }
    if !is_abelian(g) {
        return Ok(false);
    }
    let n = g.order();
    Ok(g.elements()?.iter().any(|x| x.order() as u128 == n))
}

/// `H ∩ K` by filtering the elements of the smaller group.
pub fn intersection(h: &PermGroup, k: &PermGroup) -> Result<PermGroup, Error> {
    check_degree(h, k)?;
    let (small, large) = if h.order() <= k.order() { (h, k) } else { (k, h) };
    if small.order() > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            op: "intersection",
            order: small.order(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let elems = small.elements()?;
    Ok(PermGroup::from_elements(
        h.degree(),
        elems.iter().filter(|x| large.has(x)),
    ))
}

/// A normal subgroup recorded together with the set of classes it is a union of.
#[derive(Clone, Debug)]
pub struct NormalSubgroup {
    pub group: PermGroup,
    /// Bit `i` set iff class `i` of the parent lies in the subgroup.
    pub classes: u64,
    pub order: u128,
}

/// All normal subgroups of a group, ordered by order and then by class set.
#[derive(Clone, Debug)]
pub struct NormalLattice {
    members: Vec<NormalSubgroup>,
    class_sizes: Vec<usize>,
    coefficients: Vec<u32>,
}

impl NormalLattice {
    pub fn members(&self) -> &[NormalSubgroup] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, i: usize) -> &NormalSubgroup {
        &self.members[i]
    }

    pub fn trivial(&self) -> &NormalSubgroup {
        &self.members[0]
    }

    pub fn whole(&self) -> &NormalSubgroup {
        self.members.last().unwrap()
    }

    pub fn position(&self, classes: u64) -> Option<usize> {
        self.members.iter().position(|m| m.classes == classes)
    }

    /// `members[i] <= members[j]`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.members[i].classes & !self.members[j].classes == 0
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.position(self.members[i].classes & self.members[j].classes)
            .expect("lattice not closed under meet")
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        let mask = closure_mask(
            self.members[i].classes | self.members[j].classes,
            &self.coefficients,
            self.class_sizes.len(),
        );
        self.position(mask).expect("lattice not closed under join")
    }

    /// Indices of the atoms: nontrivial members containing no other nontrivial member.
    pub fn minimal(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| !(1..self.len()).any(|j| j != i && self.le(j, i)))
            .collect()
    }

    /// Index of the member whose class set is the normal closure of `classes`.
    pub fn closure_of(&self, classes: u64) -> usize {
        let mask = closure_mask(classes, &self.coefficients, self.class_sizes.len());
        self.position(mask).unwrap()
    }
}

/// Smallest union of classes containing `mask` and the identity class that is
/// closed under multiplication, read off the class coefficients.
fn closure_mask(mask: u64, coeffs: &[u32], r: usize) -> u64 {
    let mut cur = mask | 1;
    loop {
        let mut next = cur;
        for i in (0..r).filter(|i| cur >> i & 1 == 1) {
            for j in (0..r).filter(|j| cur >> j & 1 == 1) {
                for k in 0..r {
                    if coeffs[(i * r + j) * r + k] != 0 {
                        next |= 1 << k;
                    }
                }
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn build_lattice(g: &PermGroup) -> Result<NormalLattice, Error> {
    let classes = conjugacy_classes(g)?;
    let r = classes.len();
    if r > LATTICE_CLASS_LIMIT {
        return Err(Error::TooManyClasses {
            count: r,
            limit: LATTICE_CLASS_LIMIT,
        });
    }
    let coeffs = class_coefficients(g)?.to_vec();
    let full: u64 = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };

    let mut masks: Vec<u64> = alloc::vec![1];
    for c in 0..r {
        let m = closure_mask(1 << c, &coeffs, r);
        if !masks.contains(&m) {
            masks.push(m);
        }
    }
    let mut i = 0;
    while i < masks.len() {
        for j in 0..i {
            let m = closure_mask(masks[i] | masks[j], &coeffs, r);
            if !masks.contains(&m) {
                masks.push(m);
            }
        }
        i += 1;
    }
    debug_assert!(masks.contains(&full));

    let sizes = classes.sizes();
    let order_of = |m: u64| -> u128 { (0..r).filter(|i| m >> i & 1 == 1).map(|i| sizes[i] as u128).sum() };
    masks.sort_by_key(|&m| (order_of(m), m));

    let table = g.elements()?;
    let mut members = Vec::with_capacity(masks.len());
    for m in masks {
        let group = if m == full {
            g.clone()
        } else if m == 1 {
            PermGroup::trivial(g.degree())
        } else {
            let elems = (0..r)
                .filter(|i| m >> i & 1 == 1)
                .flat_map(|i| classes.members(i).iter().map(|&e| table.get(e as usize)));
            PermGroup::from_elements(g.degree(), elems)
        };
        let order = order_of(m);
        debug_assert_eq!(group.order(), order);
        members.push(NormalSubgroup {
            group,
            classes: m,
            order,
        });
    }
    Ok(NormalLattice {
        members,
        class_sizes: sizes,
        coefficients: coeffs,
    })
}

/// Every normal subgroup of `g`, as the join-closure of the normal closures
/// of single conjugacy classes.
pub fn normal_subgroups(g: &PermGroup) -> Result<&NormalLattice, Error> {
    if let Some(l) = g.lattice_cache().get() {
        return Ok(l);
    }
    let lattice = build_lattice(g)?;
    Ok(g.lattice_cache().get_or_init(|| Box::new(lattice)))
}

pub fn minimal_normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>, Error> {
    let lattice = normal_subgroups(g)?;
    Ok(lattice.minimal().into_iter().map(|i| lattice.get(i).group.clone()).collect())
}

fn p_core_index(lattice: &NormalLattice, p: u64) -> usize {
    (0..lattice.len())
        .filter(|&i| is_power_of(lattice.get(i).order, p))
        .max_by_key(|&i| lattice.get(i).order)
        .unwrap()
}

/// `O_p(G)`: the largest normal `p`-subgroup.
pub fn p_core(g: &PermGroup, p: u64) -> Result<PermGroup, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let lattice = normal_subgroups(g)?;
    Ok(lattice.get(p_core_index(lattice, p)).group.clone())
}

/// Lattice index of `F(G)`, the join of all p-cores.
pub fn fitting_index(g: &PermGroup) -> Result<usize, Error> {
    let lattice = normal_subgroups(g)?;
    let mut idx = 0;
    for p in prime_divisors(g.order()) {
        idx = lattice.join(idx, p_core_index(lattice, p));
    }
    Ok(idx)
}

pub fn fitting_subgroup(g: &PermGroup) -> Result<PermGroup, Error> {
    let lattice = normal_subgroups(g)?;
    Ok(lattice.get(fitting_index(g)?).group.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(degree, gens.iter().map(|s| parse_cycles(s, degree).unwrap()).collect()).unwrap()
    }

    fn orders(l: &NormalLattice) -> Vec<u128> {
        l.members().iter().map(|m| m.order).collect()
    }

    #[test]
    fn arithmetic_helpers() {
        assert!(is_prime(2) && is_prime(7) && !is_prime(1) && !is_prime(9));
        assert_eq!(prime_divisors(25920), alloc::vec![2, 3, 5]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert!(is_power_of(81, 3) && is_power_of(1, 3) && !is_power_of(12, 2));
        assert!(is_power_of(1, 1) && !is_power_of(2, 1));
        assert!(is_prime_power(7) && is_prime_power(16) && !is_prime_power(1) && !is_prime_power(6));
    }

    #[test]
    fn derived_and_series() {
        let s4 = PermGroup::symmetric(4);
        let d = derived_subgroup(&s4);
        assert_eq!(d.order(), 12);
        assert!(d.same_elements(&PermGroup::alternating(4)));
        assert!(is_perfect(&PermGroup::alternating(5)));
        assert!(!is_perfect(&s4));
        assert!(is_solvable(&s4));
        assert!(!is_solvable(&PermGroup::alternating(5)));
        assert_eq!(derived_length(&s4), Some(3));
        assert!(!is_nilpotent(&PermGroup::dihedral(6)));
        assert!(is_nilpotent(&PermGroup::cyclic(12)));
        assert!(is_nilpotent(&PermGroup::dihedral(8)));
        assert!(!is_nilpotent(&s4));
    }

    #[test]
    fn normal_lattices() {
        let a5 = PermGroup::alternating(5);
        assert_eq!(orders(normal_subgroups(&a5).unwrap()), alloc::vec![1, 60]);
        let s4 = PermGroup::symmetric(4);
        let l = normal_subgroups(&s4).unwrap();
        assert_eq!(orders(l), alloc::vec![1, 4, 12, 24]);
        for m in l.members() {
            assert!(is_normal(&m.group, &s4).unwrap());
        }
        let mins = minimal_normal_subgroups(&s4).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);
        let mins = minimal_normal_subgroups(&a5).unwrap();
        assert_eq!(mins.len(), 1);
        assert!(mins[0].same_elements(&a5));
    }

    #[test]
    fn lattice_join_meet() {
        let g = PermGroup::cyclic(12);
        let l = normal_subgroups(&g).unwrap();
        assert_eq!(orders(l), alloc::vec![1, 2, 3, 4, 6, 12]);
        for i in 0..l.len() {
            for j in 0..l.len() {
                let m = l.get(l.meet(i, j)).order;
                let jn = l.get(l.join(i, j)).order;
                let (a, b) = (l.get(i).order, l.get(j).order);
                assert_eq!(m, num_integer::gcd(a, b));
                assert_eq!(jn, num_integer::lcm(a, b));
            }
        }
    }

    #[test]
    fn cores_and_fitting() {
        let s4 = PermGroup::symmetric(4);
        assert_eq!(p_core(&s4, 2).unwrap().order(), 4);
        assert_eq!(p_core(&s4, 3).unwrap().order(), 1);
        assert_eq!(fitting_subgroup(&s4).unwrap().order(), 4);
        assert!(!is_cyclic(&fitting_subgroup(&s4).unwrap()).unwrap());
        let a5 = PermGroup::alternating(5);
        for p in [2, 3, 5] {
            assert!(p_core(&a5, p).unwrap().is_trivial());
        }
        assert!(fitting_subgroup(&a5).unwrap().is_trivial());
        let c12 = PermGroup::cyclic(12);
        let o2 = p_core(&c12, 2).unwrap();
        assert_eq!(o2.order(), 4);
        assert!(is_cyclic(&o2).unwrap());
        assert!(fitting_subgroup(&c12).unwrap().same_elements(&c12));
        assert!(matches!(p_core(&c12, 4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn cyclicity() {
        assert!(is_cyclic(&PermGroup::cyclic(12)).unwrap());
        assert!(!is_cyclic(&PermGroup::dihedral(4)).unwrap());
        assert!(is_cyclic(&PermGroup::trivial(2)).unwrap());
        assert!(is_cyclic(&group(5, &["(1,2)", "(3,4,5)"])).unwrap());
    }

    #[test]
    fn intersections() {
        let s4 = PermGroup::symmetric(4);
        let a = group(4, &["(1,2,3)", "(1,2)"]);
        let b = group(4, &["(2,3,4)", "(2,3)"]);
        let i = intersection(&a, &b).unwrap();
        assert_eq!(i.order(), 2);
        assert!(intersection(&s4, &s4).unwrap().same_elements(&s4));
        assert!(intersection(&s4, &PermGroup::symmetric(5)).is_err());
    }

    #[test]
    fn normality() {
        let s4 = PermGroup::symmetric(4);
        let v4 = group(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert!(is_normal(&v4, &s4).unwrap());
        let s3 = group(4, &["(1,2,3)", "(1,2)"]);
        assert!(!is_normal(&s3, &s4).unwrap());
        assert!(is_subgroup(&s3, &s4).unwrap());
        assert!(!is_subgroup(&s4, &s3).unwrap());
        let n = normal_closure(&s4, &[parse_cycles("(1,2)(3,4)", 4).unwrap()]);
        assert_eq!(n.order(), 4);
    }
}
