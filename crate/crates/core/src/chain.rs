//! Base and strong generating set via deterministic Schreier–Sims.

use alloc::vec::Vec;

use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Strong generators fixing all earlier base points.
    gens: Vec<Permutation>,
    /// Orbit of `base` in discovery order.
    orbit: Vec<usize>,
    /// `transversal[x]` maps `base` to `x`, for `x` in the orbit.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = alloc::vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: alloc::vec![base],
            transversal,
        }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = alloc::vec![None; degree];
        self.transversal[self.base] = Some(Permutation::identity(degree));
        self.orbit = alloc::vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for g in &self.gens {
                let y = g.apply(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().unwrap().mul_unchecked(g);
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

/// A stabilizer chain `G = G_0 > G_1 > ... > G_k = 1` with base points
/// `b_0..b_{k-1}`, where `G_{i+1}` is the pointwise stabilizer of `b_0..b_i`.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Builds the chain for the group generated by `gens`. The base is made
    /// of the smallest moved points, taken in increasing order as needed.
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return chain;
        }
        // No generator may fix every base point.
        let mut base: Vec<usize> = Vec::new();
        let mut sorted = gens.clone();
        sorted.sort_by_key(|g| g.first_moved());
        for g in &sorted {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved().unwrap());
            }
        }
        for (i, &b) in base.iter().enumerate() {
            let mut level = Level::new(b, degree);
            level.gens = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&p| g.apply(p) == p))
                .cloned()
                .collect();
            level.rebuild_orbit();
            chain.levels.push(level);
        }
        chain.complete();
        chain
    }

    /// Holt's SCHREIERSIMS: walk the levels bottom-up, sifting every Schreier
    /// generator and restarting at the level where a residue was inserted.
    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let li = i as usize;
            let orbit = self.levels[li].orbit.clone();
            let gens = self.levels[li].gens.clone();
            for &beta in &orbit {
                for s in &gens {
                    let u_beta = self.levels[li].transversal[beta].as_ref().unwrap();
                    let image = s.apply(beta);
                    let u_image = self.levels[li].transversal[image].as_ref().unwrap();
                    let schreier = u_beta.mul_unchecked(s).mul_unchecked(&u_image.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, drop) = self.strip_from(&schreier, li + 1);
                    let extend = if drop < self.levels.len() {
                        true
                    } else if !residue.is_identity() {
                        let point = residue.first_moved().unwrap();
                        self.levels.push(Level::new(point, self.degree));
                        true
                    } else {
                        false
                    };
                    if extend {
                        let top = drop.min(self.levels.len() - 1);
                        for l in li + 1..=top {
                            self.levels[l].gens.push(residue.clone());
                            self.levels[l].rebuild_orbit();
                        }
                        i = top as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Sifts `g` starting at level `start`. Returns the residue and the
    /// level at which sifting stopped (`levels.len()` if it passed all).
    fn strip_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let image = h.apply(level.base);
            match &level.transversal[image] {
                Some(u) => h = h.mul_unchecked(&u.inverse()),
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    pub fn strip(&self, g: &Permutation) -> (Permutation, usize) {
        self.strip_from(g, 0)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, l) = self.strip(g);
        l == self.levels.len() && h.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// All strong generators without repetition, in level order.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Transversal elements of a level in orbit order.
    pub fn transversal(&self, level: usize) -> impl Iterator<Item = &Permutation> {
        let l = &self.levels[level];
        l.orbit.iter().map(move |&x| l.transversal[x].as_ref().unwrap())
    }

    /// Every group element, as products `u_{k-1} ... u_1 u_0` of transversal
    /// elements (unsorted).
    pub fn elements(&self) -> Vec<Permutation> {
        let mut acc = alloc::vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
            for x in &level.orbit {
                let u = level.transversal[*x].as_ref().unwrap();
                for a in &acc {
                    next.push(a.mul_unchecked(u));
                }
            }
            acc = next;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn chain(degree: usize, gens: &[&str]) -> StabilizerChain {
        let gens: Vec<_> = gens.iter().map(|s| parse_cycles(s, degree).unwrap()).collect();
        StabilizerChain::new(degree, &gens)
    }

    #[test]
    fn symmetric_and_alternating() {
        assert_eq!(chain(5, &["(1,2,3,4,5)", "(1,2)"]).order(), 120);
        assert_eq!(chain(5, &["(1,2,3,4,5)", "(1,2,3)"]).order(), 60);
        assert_eq!(chain(7, &["(1,2,3,4,5,6,7)", "(5,6,7)"]).order(), 2520);
        assert_eq!(chain(8, &["(3,5,7)(4,8,6)", "(1,2,6)(3,4,8)"]).order(), 168);
    }

    #[test]
    fn trivial_group() {
        let c = chain(4, &["()"]);
        assert_eq!(c.order(), 1);
        assert_eq!(c.depth(), 0);
        assert_eq!(c.elements().len(), 1);
        assert!(c.contains(&Permutation::identity(4)));
    }

    #[test]
    fn base_is_smallest_moved_points() {
        let c = chain(6, &["(4,5,6)"]);
        assert_eq!(c.base(), alloc::vec![3]);
        let c = chain(5, &["(1,2,3,4,5)", "(1,2)"]);
        assert_eq!(c.base()[0], 0);
    }

    #[test]
    fn membership() {
        let c = chain(5, &["(1,2,3,4,5)", "(1,2,3)"]);
        assert!(c.contains(&parse_cycles("(1,2)(3,4)", 5).unwrap()));
        assert!(!c.contains(&parse_cycles("(1,2)", 5).unwrap()));
        assert!(!c.contains(&Permutation::identity(6)));
    }

    #[test]
    fn elements_are_distinct() {
        let c = chain(5, &["(1,2,3,4,5)", "(1,2)"]);
        let mut e = c.elements();
        e.sort();
        e.dedup();
        assert_eq!(e.len(), 120);
    }
}
