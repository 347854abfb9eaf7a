//! Conjugacy classes, power maps and class multiplication coefficients.

use alloc::boxed::Box;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::Error;
use crate::group::{PermGroup, ENUMERATION_LIMIT};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Smallest member in the element-table order.
    pub representative: Permutation,
    pub size: usize,
    pub element_order: u64,
}

/// Conjugacy classes of a fully enumerated group.
///
/// Classes are ordered by element order, then size, then representative;
/// class 0 is always the identity.
pub struct ClassData {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
    members: Vec<Vec<u32>>,
    rep_index: Vec<usize>,
    coefficients: OnceBox<Vec<u32>>,
}

impl ClassData {
    fn compute(group: &PermGroup) -> Result<Self, Error> {
        let table = group.elements()?;
        let n = table.len();
        let gens = group.generators();
        let gen_inv: Vec<Permutation> = gens.iter().map(|g| g.inverse()).collect();
        let unassigned = u32::MAX;
        let mut raw_class = alloc::vec![unassigned; n];
        let mut raw_members: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if raw_class[start] != unassigned {
                continue;
            }
            let id = raw_members.len() as u32;
            raw_class[start] = id;
            let mut orbit = alloc::vec![start as u32];
            let mut head = 0;
            while head < orbit.len() {
                let x = table.get(orbit[head] as usize);
                head += 1;
                for (g, gi) in gens.iter().zip(&gen_inv) {
                    let y = gi.mul_unchecked(x).mul_unchecked(g);
                    let j = table.index_of(&y).expect("conjugate outside group");
                    if raw_class[j] == unassigned {
                        raw_class[j] = id;
                        orbit.push(j as u32);
                    }
                }
            }
            orbit.sort_unstable();
            raw_members.push(orbit);
        }

        let mut order: Vec<usize> = (0..raw_members.len()).collect();
        let key = |c: usize| {
            let rep = raw_members[c][0] as usize;
            (table.get(rep).order(), raw_members[c].len(), rep)
        };
        order.sort_by_key(|&c| key(c));
        let mut relabel = alloc::vec![0u32; order.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new as u32;
        }
        let class_of: Vec<u32> = raw_class.iter().map(|&c| relabel[c as usize]).collect();
        let members: Vec<Vec<u32>> = order.iter().map(|&c| core::mem::take(&mut raw_members[c])).collect();
        let rep_index: Vec<usize> = members.iter().map(|m| m[0] as usize).collect();
        let classes = members
            .iter()
            .map(|m| {
                let rep = table.get(m[0] as usize).clone();
                ConjugacyClass {
                    element_order: rep.order(),
                    representative: rep,
                    size: m.len(),
                }
            })
            .collect();
        Ok(ClassData {
            classes,
            class_of,
            members,
            rep_index,
            coefficients: OnceBox::new(),
        })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &ConjugacyClass {
        &self.classes[i]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    /// Class index of the element with table index `element`.
    pub fn class_of_index(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    /// Element-table indices of the members of class `i`, ascending.
    pub fn members(&self, i: usize) -> &[u32] {
        &self.members[i]
    }

    pub fn representative_index(&self, i: usize) -> usize {
        self.rep_index[i]
    }
}

/// Conjugacy classes of `group`, computed once by full enumeration.
pub fn conjugacy_classes(group: &PermGroup) -> Result<&ClassData, Error> {
    if let Some(c) = group.class_cache().get() {
        return Ok(c);
    }
    if group.order() > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            op: "conjugacy classes",
            order: group.order(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let data = ClassData::compute(group)?;
    Ok(group.class_cache().get_or_init(|| Box::new(data)))
}

/// Class index of an arbitrary group element.
pub fn class_of(group: &PermGroup, g: &Permutation) -> Result<usize, Error> {
    let classes = conjugacy_classes(group)?;
    let i = group
        .elements()?
        .index_of(g)
        .ok_or(Error::NotASubgroup("element not in group"))?;
    Ok(classes.class_of_index(i))
}

/// Maps class `i` to the class of `g^k` for `g` in class `i`. Negative `k`
/// is allowed; `k = -1` gives the inverse-class map.
pub fn power_map(group: &PermGroup, k: i64) -> Result<Vec<usize>, Error> {
    let classes = conjugacy_classes(group)?;
    let table = group.elements()?;
    Ok(classes
        .classes()
        .iter()
        .map(|c| classes.class_of_index(table.index_of(&c.representative.pow(k)).unwrap()))
        .collect())
}

/// Class multiplication coefficients, flattened: entry `(i, j, k)` at
/// `(i * r + j) * r + k` counts pairs `(x, y)` in `C_i x C_j` with `x y = z`
/// for a fixed `z` in `C_k`.
pub fn class_coefficients(group: &PermGroup) -> Result<&[u32], Error> {
    let classes = conjugacy_classes(group)?;
    if let Some(c) = classes.coefficients.get() {
        return Ok(c);
    }
    let table = group.elements()?;
    let r = classes.len();
    let mut coeffs = alloc::vec![0u32; r * r * r];
    for k in 0..r {
        let z = &classes.class(k).representative;
        for i in 0..r {
            for &x in classes.members(i) {
                let y = table.get(x as usize).inverse().mul_unchecked(z);
                let j = classes.class_of_index(table.index_of(&y).unwrap());
                coeffs[(i * r + j) * r + k] += 1;
            }
        }
    }
    Ok(classes.coefficients.get_or_init(|| Box::new(coeffs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a5_classes() {
        let g = PermGroup::alternating(5);
        let c = conjugacy_classes(&g).unwrap();
        assert_eq!(c.sizes(), alloc::vec![1, 15, 20, 12, 12]);
        let orders: Vec<u64> = c.classes().iter().map(|x| x.element_order).collect();
        assert_eq!(orders, alloc::vec![1, 2, 3, 5, 5]);
        for (i, cl) in c.classes().iter().enumerate() {
            assert_eq!(60 % cl.size, 0);
            assert_eq!(class_of(&g, &cl.representative).unwrap(), i);
        }
    }

    #[test]
    fn trivial_group_one_class() {
        let g = PermGroup::trivial(3);
        assert_eq!(conjugacy_classes(&g).unwrap().len(), 1);
    }

    #[test]
    fn power_maps() {
        let g = PermGroup::alternating(5);
        let r = conjugacy_classes(&g).unwrap().len();
        assert_eq!(power_map(&g, 1).unwrap(), (0..r).collect::<Vec<_>>());
        assert_eq!(power_map(&g, 60).unwrap(), alloc::vec![0; r]);
        let sq = power_map(&g, 2).unwrap();
        assert_eq!(sq[1], 0);
        // squaring swaps the two classes of 5-cycles
        assert_eq!((sq[3], sq[4]), (4, 3));
        // every A5 element is conjugate to its inverse
        assert_eq!(power_map(&g, -1).unwrap(), (0..r).collect::<Vec<_>>());
    }

    #[test]
    fn coefficients_count_products() {
        let g = PermGroup::symmetric(3);
        let c = conjugacy_classes(&g).unwrap();
        let r = c.len();
        let a = class_coefficients(&g).unwrap();
        // with z = identity, a_{i j 0} = |C_i| if C_j = C_i^-1
        for i in 0..r {
            for j in 0..r {
                let expect = if i == j { c.class(i).size as u32 } else { 0 };
                assert_eq!(a[(i * r + j) * r], expect);
            }
        }
        // sum over j of a_{ijk} = |C_i|
        for i in 0..r {
            for k in 0..r {
                let s: u32 = (0..r).map(|j| a[(i * r + j) * r + k]).sum();
                assert_eq!(s, c.class(i).size as u32);
            }
        }
    }
}
