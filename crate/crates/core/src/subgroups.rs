//! Full subgroup enumeration for small groups.

use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::error::Error;
use crate::group::PermGroup;

/// Largest order accepted by [`enumerate_subgroups`].
pub const SUBGROUP_LIMIT: u128 = 300;

/// Every subgroup of `g`, ordered by order and then by element set.
///
/// Each subgroup is the join of its cyclic subgroups, so starting from the
/// cyclic subgroups and repeatedly adjoining one more cyclic subgroup
/// reaches all of them.
pub fn enumerate_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>, Error> {
    if g.order() > SUBGROUP_LIMIT {
        return Err(Error::TooLarge {
            op: "subgroup enumeration",
            order: g.order(),
            limit: SUBGROUP_LIMIT,
        });
    }
    let table = g.elements()?;
    let n = table.len();
    let words = n.div_ceil(64);
    let mul: Vec<u32> = (0..n * n).map(|ab| table.mul_index(ab / n, ab % n) as u32).collect();

    let closure = |gens: &[usize]| -> Vec<u64> {
        let mut bits = alloc::vec![0u64; words];
        bits[0] |= 1;
        let mut queue = alloc::vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &s in gens {
                let y = mul[x * n + s] as usize;
                if bits[y / 64] >> (y % 64) & 1 == 0 {
                    bits[y / 64] |= 1 << (y % 64);
                    queue.push(y);
                }
            }
        }
        bits
    };
    let contains = |bits: &[u64], x: usize| bits[x / 64] >> (x % 64) & 1 == 1;

    // distinct cyclic subgroups, each with one generator
    let mut cyclic: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut seen_cyclic: HashSet<Vec<u64>> = HashSet::new();
    for x in 1..n {
        let bits = closure(&[x]);
        if seen_cyclic.insert(bits.clone()) {
            cyclic.push((x, bits));
        }
    }

    let mut found: Vec<(Vec<usize>, Vec<u64>)> = alloc::vec![(Vec::new(), closure(&[]))];
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    seen.insert(found[0].1.clone());
    let mut head = 0;
    while head < found.len() {
        let (gens, bits) = found[head].clone();
        head += 1;
        for (x, _) in &cyclic {
            if contains(&bits, *x) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(*x);
            let next = closure(&next_gens);
            if seen.insert(next.clone()) {
                found.push((next_gens, next));
            }
        }
    }

    let mut out: Vec<(u32, Vec<u64>, Vec<usize>)> = found
        .into_iter()
        .map(|(gens, bits)| (bits.iter().map(|w| w.count_ones()).sum(), bits, gens))
        .collect();
    out.sort();
    Ok(out
        .into_iter()
        .map(|(_, _, gens)| {
            PermGroup::new(g.degree(), gens.iter().map(|&i| table.get(i).clone()).collect()).unwrap()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_subgroups(&PermGroup::cyclic(6)).unwrap().len(), 4);
        assert_eq!(enumerate_subgroups(&PermGroup::symmetric(3)).unwrap().len(), 6);
        assert_eq!(enumerate_subgroups(&PermGroup::symmetric(4)).unwrap().len(), 30);
        assert_eq!(enumerate_subgroups(&PermGroup::alternating(5)).unwrap().len(), 59);
    }

    #[test]
    fn sorted_by_order() {
        let subs = enumerate_subgroups(&PermGroup::dihedral(8)).unwrap();
        assert_eq!(subs.len(), 10);
        assert!(subs.windows(2).all(|w| w[0].order() <= w[1].order()));
        assert_eq!(subs[0].order(), 1);
        assert_eq!(subs.last().unwrap().order(), 8);
    }
}
