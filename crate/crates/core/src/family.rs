//! Membership in the families `G_p^q` of groups with a normal series
//! `P ⊴ H ⊴ G` where `P` is a `p`-group, `H/P` is cyclic and `G/H` is a
//! `q`-group, and the Oliver groups lying outside all of them.

use alloc::vec::Vec;

use crate::error::Error;
use crate::group::{coset_action, direct_product, PermGroup};
use crate::structure::{
    derived_subgroup, fitting_subgroup, is_cyclic, is_normal, is_power_of, normal_subgroups,
    prime_divisors,
};
use crate::subgroups::enumerate_subgroups;

/// A normal series `P ⊴ H ⊴ G` showing `G` lies in `G_p^q`. A value of 1 for
/// `p` (resp. `q`) means `P` (resp. `G/H`) is trivial.
#[derive(Clone, Debug)]
pub struct FamilyWitness {
    pub p: u64,
    pub q: u64,
    pub p_group: PermGroup,
    pub h: PermGroup,
}

fn quotient_is_cyclic(h: &PermGroup, p: &PermGroup) -> Result<bool, Error> {
    if !derived_subgroup(h).generators().iter().all(|x| p.has(x)) {
        return Ok(false);
    }
    is_cyclic(&coset_action(h, p)?.image)
}

/// First witness for `G ∈ G_p^q`, with pairs `(P, H)` tried by `|P|` ascending
/// and then `|H|` descending.
pub fn in_family(g: &PermGroup, p: u64, q: u64) -> Result<Option<FamilyWitness>, Error> {
    let lattice = normal_subgroups(g)?;
    let n = g.order();
    let mut pairs = Vec::new();
    for i in 0..lattice.len() {
        if !is_power_of(lattice.get(i).order, p) {
            continue;
        }
        for j in 0..lattice.len() {
            if lattice.le(i, j) && is_power_of(n / lattice.get(j).order, q) {
                pairs.push((i, j));
            }
        }
    }
    pairs.sort_by_key(|&(i, j)| (lattice.get(i).order, core::cmp::Reverse(lattice.get(j).order), i, j));
    for (i, j) in pairs {
        let pg = &lattice.get(i).group;
        let h = &lattice.get(j).group;
        if quotient_is_cyclic(h, pg)? {
            return Ok(Some(FamilyWitness {
                p,
                q,
                p_group: pg.clone(),
                h: h.clone(),
            }));
        }
    }
    Ok(None)
}

/// Re-checks every defining property of a witness from scratch.
pub fn validate_witness(g: &PermGroup, w: &FamilyWitness) -> Result<bool, Error> {
    let ok = is_normal(&w.p_group, g)?
        && is_normal(&w.h, g)?
        && w.p_group.generators().iter().all(|x| w.h.has(x))
        && is_power_of(w.p_group.order(), w.p)
        && is_power_of(g.order() / w.h.order(), w.q)
        && is_cyclic(&coset_action(&w.h, &w.p_group)?.image)?;
    Ok(ok)
}

/// `{1}` followed by the primes dividing `|G|`.
pub fn family_parameters(g: &PermGroup) -> Vec<u64> {
    let mut v = alloc::vec![1];
    v.extend(prime_divisors(g.order()));
    v
}

/// Some `(p, q)` and witness with `G ∈ G_p^q`, searching `p` and `q` over
/// [`family_parameters`]; primes not dividing `|G|` add nothing.
pub fn in_g_calligraphic(g: &PermGroup) -> Result<Option<FamilyWitness>, Error> {
    let params = family_parameters(g);
    for &p in &params {
        for &q in &params {
            if let Some(w) = in_family(g, p, q)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

pub fn is_oliver(g: &PermGroup) -> Result<bool, Error> {
    Ok(in_g_calligraphic(g)?.is_none())
}

/// Outcome of checking every subgroup of a product of dihedral groups.
#[derive(Clone, Debug)]
pub struct DihedralReport {
    pub factors: Vec<usize>,
    pub order: u128,
    pub subgroups: usize,
    /// Subgroups whose Fitting subgroup is cyclic.
    pub cyclic_fitting: usize,
    /// Subgroups with cyclic Fitting subgroup but no `G_1^2` witness.
    pub failures: Vec<PermGroup>,
}

impl DihedralReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For `D = D_{2l} x D_{2m} (x D_{2n})`, checks that every subgroup with
/// cyclic Fitting subgroup lies in `G_1^2`.
pub fn dihedral_product_check(factors: &[usize]) -> Result<DihedralReport, Error> {
    if factors.is_empty() || factors.contains(&0) {
        return Err(Error::Precondition("factors must be positive"));
    }
    let order: u128 = factors.iter().map(|&f| 2 * f as u128).product();
    if order > crate::subgroups::SUBGROUP_LIMIT {
        return Err(Error::TooLarge {
            op: "dihedral product check",
            order,
            limit: crate::subgroups::SUBGROUP_LIMIT,
        });
    }
    let mut d = PermGroup::dihedral(2 * factors[0]);
    for &f in &factors[1..] {
        d = direct_product(&d, &PermGroup::dihedral(2 * f)).group;
    }
    let subs = enumerate_subgroups(&d)?;
    let mut cyclic_fitting = 0;
    let mut failures = Vec::new();
    for s in &subs {
        if !is_cyclic(&fitting_subgroup(s)?)? {
            continue;
        }
        cyclic_fitting += 1;
        if in_family(s, 1, 2)?.is_none() {
            failures.push(s.clone());
        }
    }
    Ok(DihedralReport {
        factors: factors.to_vec(),
        order,
        subgroups: subs.len(),
        cyclic_fitting,
        failures,
    })
}
