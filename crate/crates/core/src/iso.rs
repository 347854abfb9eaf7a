//! Isomorphism testing for small groups by backtracking over generator images.

use alloc::vec::Vec;

use crate::classes::conjugacy_classes;
use crate::error::Error;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::derived_length;

/// Largest order for which [`is_isomorphic`] searches.
pub const ISOMORPHISM_LIMIT: u128 = 500;

/// An isomorphism `G -> H`, determined by the images of a generating sequence.
#[derive(Clone, Debug)]
pub struct Isomorphism {
    pub generators: Vec<Permutation>,
    pub images: Vec<Permutation>,
    /// `map[i]` is the index in `H`'s element table of the image of element `i` of `G`.
    pub map: Vec<u32>,
}

impl Isomorphism {
    pub fn apply(&self, g: &PermGroup, h: &PermGroup, x: &Permutation) -> Option<Permutation> {
        let i = g.elements().ok()?.index_of(x)?;
        Some(h.elements().ok()?.get(self.map[i] as usize).clone())
    }
}

struct Small {
    mul: Vec<u32>,
    orders: Vec<u64>,
    class_size: Vec<usize>,
    n: usize,
}

impl Small {
    fn new(g: &PermGroup) -> Result<Self, Error> {
        let table = g.elements()?;
        let n = table.len();
        let mut mul = alloc::vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = table.mul_index(a, b) as u32;
            }
        }
        let classes = conjugacy_classes(g)?;
        let class_size = (0..n).map(|i| classes.class(classes.class_of_index(i)).size).collect();
        let orders = table.iter().map(|x| x.order()).collect();
        Ok(Small {
            mul,
            orders,
            class_size,
            n,
        })
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    fn profile(&self) -> Vec<(u64, usize)> {
        let mut v: Vec<(u64, usize)> = self.orders.iter().copied().zip(self.class_size.iter().copied()).collect();
        v.sort_unstable();
        v
    }

    /// Greedy generating sequence: repeatedly the element of largest order
    /// outside the current subgroup.
    fn generating_sequence(&self) -> Vec<usize> {
        let mut inside = alloc::vec![false; self.n];
        inside[0] = true;
        let mut gens = Vec::new();
        let mut members = alloc::vec![0usize];
        while members.len() < self.n {
            let pick = (0..self.n)
                .filter(|&i| !inside[i])
                .max_by_key(|&i| (self.orders[i], core::cmp::Reverse(i)))
                .unwrap();
            gens.push(pick);
            members = self.closure(&gens);
            inside.iter_mut().for_each(|x| *x = false);
            for &m in &members {
                inside[m] = true;
            }
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = alloc::vec![false; self.n];
        seen[0] = true;
        let mut out = alloc::vec![0usize];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out
    }
}

/// Extends `gens[..k] -> imgs[..k]` over the generated subgroup; `None` if the
/// assignment is not a well-defined injective homomorphism on it.
fn extend(g: &Small, h: &Small, gens: &[usize], imgs: &[usize]) -> Option<Vec<u32>> {
    let unset = u32::MAX;
    let mut map = alloc::vec![unset; g.n];
    let mut used = alloc::vec![false; h.n];
    map[0] = 0;
    used[0] = true;
    let mut queue = alloc::vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = g.mul(x, s);
            let fy = h.mul(map[x] as usize, t);
            if map[y] == unset {
                if used[fy] {
                    return None;
                }
                map[y] = fy as u32;
                used[fy] = true;
                queue.push(y);
            } else if map[y] as usize != fy {
                return None;
            }
        }
    }
    Some(map)
}

fn search(g: &Small, h: &Small, gens: &[usize], imgs: &mut Vec<usize>) -> Option<Vec<u32>> {
    let k = imgs.len();
    if k == gens.len() {
        return extend(g, h, gens, imgs);
    }
    let s = gens[k];
    for t in 0..h.n {
        if h.orders[t] != g.orders[s] || h.class_size[t] != g.class_size[s] {
            continue;
        }
        imgs.push(t);
        if extend(g, h, &gens[..=k], imgs).is_some() {
            if let Some(m) = search(g, h, gens, imgs) {
                return Some(m);
            }
        }
        imgs.pop();
    }
    None
}

/// Decides `G ≅ H` for `|G| = |H| <= 500`, returning an isomorphism if one exists.
pub fn is_isomorphic(g: &PermGroup, h: &PermGroup) -> Result<Option<Isomorphism>, Error> {
    if g.order() != h.order() {
        return Ok(None);
    }
    if g.order() > ISOMORPHISM_LIMIT {
        return Err(Error::TooLarge {
            op: "isomorphism test",
            order: g.order(),
            limit: ISOMORPHISM_LIMIT,
        });
    }
    let sg = Small::new(g)?;
    let sh = Small::new(h)?;
    if sg.profile() != sh.profile() || derived_length(g) != derived_length(h) {
        return Ok(None);
    }
    let gens = sg.generating_sequence();
    let mut imgs = Vec::new();
    let Some(map) = search(&sg, &sh, &gens, &mut imgs) else {
        return Ok(None);
    };
    let ge = g.elements()?;
    let he = h.elements()?;
    Ok(Some(Isomorphism {
        generators: gens.iter().map(|&i| ge.get(i).clone()).collect(),
        images: imgs.iter().map(|&i| he.get(i).clone()).collect(),
        map,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    #[test]
    fn cyclic_is_not_symmetric() {
        let c6 = PermGroup::cyclic(6);
        let s3 = PermGroup::symmetric(3);
        assert!(is_isomorphic(&c6, &s3).unwrap().is_none());
    }

    #[test]
    fn s4_on_cosets() {
        // S4 acting on the six 2-subsets of {1,2,3,4}
        let a = parse_cycles("(1,4,6,3)(2,5)", 6).unwrap();
        let b = parse_cycles("(2,4)(3,5)", 6).unwrap();
        let g = PermGroup::new(6, alloc::vec![a, b]).unwrap();
        assert_eq!(g.order(), 24);
        let iso = is_isomorphic(&g, &PermGroup::symmetric(4)).unwrap().unwrap();
        let mut seen = iso.map.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn too_large_is_reported() {
        let a7 = PermGroup::alternating(7);
        assert!(matches!(is_isomorphic(&a7, &a7), Err(Error::TooLarge { .. })));
    }
}
