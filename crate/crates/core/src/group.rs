//! Permutation groups given by generators.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;
use once_cell::race::OnceBox;

use crate::chain::StabilizerChain;
use crate::classes::ClassData;
use crate::error::Error;
use crate::perm::Permutation;
use crate::structure::NormalLattice;

/// Groups up to this order may be fully enumerated.
pub const ENUMERATION_LIMIT: u128 = 1_000_000;

/// The elements of a group in increasing lexicographic order of their image
/// lists (the identity is always index 0), with a reverse index.
pub struct ElementTable {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

impl ElementTable {
    fn new(mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        ElementTable { elements, index }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.elements
    }

    /// Index of the product `elements[a] * elements[b]`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].mul_unchecked(&self.elements[b]);
        self.index[&p] as usize
    }
}

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabilizerChain,
    elements: OnceBox<ElementTable>,
    classes: OnceBox<ClassData>,
    lattice: OnceBox<NormalLattice>,
}

/// A permutation group. Cloning is cheap and shares every cached table.
///
/// The stabilizer chain is built eagerly on construction; element tables,
/// conjugacy classes and the normal lattice are computed at most once on
/// first use and are safe to read from several threads.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, Error> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let chain = StabilizerChain::new(degree, &generators);
        Ok(PermGroup {
            inner: Arc::new(Inner {
                degree,
                generators,
                chain,
                elements: OnceBox::new(),
                classes: OnceBox::new(),
                lattice: OnceBox::new(),
            }),
        })
    }

    /// Group generated by `generators`, which must be nonempty.
    pub fn from_generators(generators: Vec<Permutation>) -> Result<Self, Error> {
        let degree = generators.first().ok_or(Error::EmptyGenerators)?.degree();
        Self::new(degree, generators)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).unwrap()
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            let cycle: Vec<usize> = (0..n).collect();
            gens.push(Permutation::from_cycles(n, &[&cycle]).unwrap());
            gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
        }
        Self::new(n, gens).unwrap()
    }

    pub fn alternating(n: usize) -> Self {
        let mut gens = Vec::new();
        for k in 2..n {
            gens.push(Permutation::from_cycles(n, &[&[0, 1, k]]).unwrap());
        }
        Self::new(n, gens).unwrap()
    }

    pub fn cyclic(n: usize) -> Self {
        if n == 1 {
            return Self::trivial(1);
        }
        let cycle: Vec<usize> = (0..n).collect();
        Self::new(n, alloc::vec![Permutation::from_cycles(n, &[&cycle]).unwrap()]).unwrap()
    }

    /// Dihedral group of order `2n` acting on `n` points (for `n >= 3`);
    /// `D_2 = C_2` and `D_4 = C_2 x C_2` act on 2 and 4 points.
    pub fn dihedral(order: usize) -> Self {
        assert!(order >= 2 && order % 2 == 0, "dihedral order must be even");
        let n = order / 2;
        match n {
            1 => Self::cyclic(2),
            2 => Self::new(
                4,
                alloc::vec![
                    Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                    Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
                ],
            )
            .unwrap(),
            _ => {
                let rot: Vec<usize> = (0..n).collect();
                let refl: Vec<[usize; 2]> = (1..n).take_while(|&i| i < n - i).map(|i| [i, n - i]).collect();
                let refl_slices: Vec<&[usize]> = refl.iter().map(|c| &c[..]).collect();
                Self::new(
                    n,
                    alloc::vec![
                        Permutation::from_cycles(n, &[&rot]).unwrap(),
                        Permutation::from_cycles(n, &refl_slices).unwrap(),
                    ],
                )
                .unwrap()
            }
        }
    }

    /// Smallest generating subset chosen greedily from `elements` in order.
    pub fn from_elements<'a, I>(degree: usize, elements: I) -> Self
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut group = Self::trivial(degree);
        let mut gens: Vec<Permutation> = Vec::new();
        for e in elements {
            if !group.has(e) {
                gens.push(e.clone());
                group = Self::new(degree, gens.clone()).unwrap();
            }
        }
        group
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.inner.chain
    }

    pub fn order(&self) -> u128 {
        self.inner.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, Error> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: p.degree(),
            });
        }
        Ok(self.inner.chain.contains(p))
    }

    /// Membership; permutations of another degree are never members.
    pub fn has(&self, p: &Permutation) -> bool {
        self.inner.chain.contains(p)
    }

    /// The sorted element table, enumerated once.
    pub fn elements(&self) -> Result<&ElementTable, Error> {
        if let Some(t) = self.inner.elements.get() {
            return Ok(t);
        }
        let order = self.order();
        if order > ENUMERATION_LIMIT {
            return Err(Error::TooLarge {
                op: "element enumeration",
                order,
                limit: ENUMERATION_LIMIT,
            });
        }
        Ok(self
            .inner
            .elements
            .get_or_init(|| alloc::boxed::Box::new(ElementTable::new(self.inner.chain.elements()))))
    }

    pub(crate) fn class_cache(&self) -> &OnceBox<ClassData> {
        &self.inner.classes
    }

    pub(crate) fn lattice_cache(&self) -> &OnceBox<NormalLattice> {
        &self.inner.lattice
    }

    /// Same group with generators conjugated by `by` (a relabelling of points).
    pub fn conjugate(&self, by: &Permutation) -> Self {
        let gens = self.generators().iter().map(|g| g.conjugate(by)).collect();
        Self::new(self.degree(), gens).unwrap()
    }

    /// The same set of elements, regardless of generators.
    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree()
            && self.order() == other.order()
            && other.generators().iter().all(|g| self.has(g))
    }

    /// Orbits of the group on `0..degree`, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for g in self.generators() {
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi] = lo;
                }
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for x in 0..n {
            let r = find(&mut parent, x);
            groups.entry(r).or_default().push(x);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, order {}, gens [", self.degree(), self.order())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g)?;
        }
        f.write_str("])")
    }
}

/// `G x H` acting on the disjoint union of the two point sets: `G` on the
/// first `left_degree` points and `H` on the rest.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: PermGroup,
    pub left: PermGroup,
    pub right: PermGroup,
}

impl DirectProduct {
    pub fn left_degree(&self) -> usize {
        self.left.degree()
    }

    pub fn right_degree(&self) -> usize {
        self.right.degree()
    }

    pub fn embed_left(&self, g: &Permutation) -> Permutation {
        g.shift(0, self.group.degree())
    }

    pub fn embed_right(&self, h: &Permutation) -> Permutation {
        h.shift(self.left_degree(), self.group.degree())
    }

    /// `(g, h)` as a single permutation.
    pub fn pair(&self, g: &Permutation, h: &Permutation) -> Permutation {
        &self.embed_left(g) * &self.embed_right(h)
    }

    /// Components of an element of the product.
    pub fn split(&self, p: &Permutation) -> Result<(Permutation, Permutation), Error> {
        let a = p
            .restrict_block(0, self.left_degree())
            .ok_or(Error::NotInProduct("left block not invariant"))?;
        let b = p
            .restrict_block(self.left_degree(), self.right_degree())
            .ok_or(Error::NotInProduct("right block not invariant"))?;
        Ok((a, b))
    }

    /// The subgroup `A x B` for `A <= G`, `B <= H`.
    pub fn product_subgroup(&self, a: &PermGroup, b: &PermGroup) -> PermGroup {
        let mut gens: Vec<Permutation> = a.generators().iter().map(|g| self.embed_left(g)).collect();
        gens.extend(b.generators().iter().map(|h| self.embed_right(h)));
        PermGroup::new(self.group.degree(), gens).unwrap()
    }

    /// `G x 1`, recovered as the pointwise stabilizer of the right block.
    pub fn left_factor(&self) -> PermGroup {
        self.product_subgroup(&self.left, &PermGroup::trivial(self.right_degree()))
    }

    pub fn right_factor(&self) -> PermGroup {
        self.product_subgroup(&PermGroup::trivial(self.left_degree()), &self.right)
    }
}

pub fn direct_product(g: &PermGroup, h: &PermGroup) -> DirectProduct {
    let degree = g.degree() + h.degree();
    let mut gens: Vec<Permutation> = g.generators().iter().map(|x| x.shift(0, degree)).collect();
    gens.extend(h.generators().iter().map(|x| x.shift(g.degree(), degree)));
    DirectProduct {
        group: PermGroup::new(degree, gens).unwrap(),
        left: g.clone(),
        right: h.clone(),
    }
}

/// The action of `G` on the right cosets `Hx` of a subgroup `H`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    /// Image of `G` acting on `0..[G:H]`; coset 0 is `H` itself.
    pub image: PermGroup,
    /// A representative of each coset.
    pub representatives: Vec<Permutation>,
    coset_of: Vec<u32>,
    group: PermGroup,
}

impl CosetAction {
    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    /// Coset containing `g`.
    pub fn coset_of(&self, g: &Permutation) -> Option<usize> {
        let table = self.group.elements().ok()?;
        table.index_of(g).map(|i| self.coset_of[i] as usize)
    }

    /// Image of an element of `G` under the action homomorphism.
    pub fn map(&self, g: &Permutation) -> Option<Permutation> {
        let table = self.group.elements().ok()?;
        let mut images = Vec::with_capacity(self.index());
        for r in &self.representatives {
            let i = table.index_of(&r.mul_unchecked(g))?;
            images.push(self.coset_of[i]);
        }
        Some(Permutation::from_images_unchecked(images))
    }

    /// Kernel of the action: the core of `H` in `G`.
    pub fn kernel(&self) -> Result<PermGroup, Error> {
        let table = self.group.elements()?;
        let kernel: Vec<&Permutation> = table
            .iter()
            .filter(|g| self.map(g).map(|p| p.is_identity()).unwrap_or(false))
            .collect();
        Ok(PermGroup::from_elements(self.group.degree(), kernel))
    }
}

/// Permutation action of `g` on the right cosets of `h`. When `h` is normal
/// the image is isomorphic to `G/H`.
pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<CosetAction, Error> {
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch {
            left: g.degree(),
            right: h.degree(),
        });
    }
    if !h.generators().iter().all(|x| g.has(x)) {
        return Err(Error::NotASubgroup("coset action requires H <= G"));
    }
    let table = g.elements()?;
    let h_elems = h.elements()?;
    let unassigned = u32::MAX;
    let mut coset_of = alloc::vec![unassigned; table.len()];
    let mut representatives = Vec::new();
    // Cosets discovered breadth-first from H under the generators of G.
    let mut queue: Vec<usize> = alloc::vec![0];
    let assign = |rep: &Permutation, id: u32, coset_of: &mut Vec<u32>| {
        for x in h_elems.iter() {
            let i = table.index_of(&x.mul_unchecked(rep)).unwrap();
            coset_of[i] = id;
        }
    };
    representatives.push(g.identity());
    assign(&g.identity(), 0, &mut coset_of);
    let mut head = 0;
    while head < queue.len() {
        let c = queue[head];
        head += 1;
        for s in g.generators() {
            let next = representatives[c].mul_unchecked(s);
            let i = table.index_of(&next).unwrap();
            if coset_of[i] == unassigned {
                let id = representatives.len() as u32;
                assign(&next, id, &mut coset_of);
                representatives.push(next);
                queue.push(id as usize);
            }
        }
    }
    let index = representatives.len();
    let mut gens = Vec::with_capacity(g.generators().len());
    for s in g.generators() {
        let images: Vec<u32> = representatives
            .iter()
            .map(|r| coset_of[table.index_of(&r.mul_unchecked(s)).unwrap()])
            .collect();
        gens.push(Permutation::from_images_unchecked(images));
    }
    Ok(CosetAction {
        image: PermGroup::new(index, gens)?,
        representatives,
        coset_of,
        group: g.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(degree, gens.iter().map(|s| parse_cycles(s, degree).unwrap()).collect()).unwrap()
    }

    #[test]
    fn standard_families() {
        assert_eq!(PermGroup::symmetric(4).order(), 24);
        assert_eq!(PermGroup::alternating(5).order(), 60);
        assert_eq!(PermGroup::alternating(6).order(), 360);
        assert_eq!(PermGroup::cyclic(12).order(), 12);
        for n in [2, 4, 6, 8, 10, 12] {
            assert_eq!(PermGroup::dihedral(n).order(), n as u128);
        }
        assert_eq!(PermGroup::symmetric(1).order(), 1);
    }

    #[test]
    fn element_table_sorted_identity_first() {
        let g = PermGroup::symmetric(4);
        let t = g.elements().unwrap();
        assert_eq!(t.len(), 24);
        assert!(t.get(0).is_identity());
        assert!(t.as_slice().windows(2).all(|w| w[0] < w[1]));
        for (i, p) in t.iter().enumerate() {
            assert_eq!(t.index_of(p), Some(i));
        }
    }

    #[test]
    fn contains_checks_degree() {
        let g = PermGroup::alternating(5);
        assert_eq!(g.contains(&g.identity()), Ok(true));
        assert_eq!(g.contains(&parse_cycles("(1,2)", 5).unwrap()), Ok(false));
        assert!(g.contains(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn direct_products() {
        let a5 = PermGroup::alternating(5);
        let p = direct_product(&a5, &a5);
        assert_eq!(p.group.order(), 3600);
        assert_eq!(p.left_factor().order(), 60);
        let d = direct_product(&PermGroup::dihedral(6), &PermGroup::dihedral(10));
        assert_eq!(d.group.order(), 60);
        let t = direct_product(&a5, &PermGroup::trivial(1));
        assert_eq!(t.group.order(), 60);
        let x = parse_cycles("(1,2,3)", 5).unwrap();
        let y = parse_cycles("(1,2)(3,4)", 5).unwrap();
        let (a, b) = p.split(&p.pair(&x, &y)).unwrap();
        assert_eq!((a, b), (x, y));
    }

    #[test]
    fn coset_actions() {
        let s4 = PermGroup::symmetric(4);
        let a4 = PermGroup::alternating(4);
        let act = coset_action(&s4, &a4).unwrap();
        assert_eq!(act.index(), 2);
        assert_eq!(act.image.order(), 2);
        assert_eq!(act.kernel().unwrap().order(), 12);

        let v4 = group(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let act = coset_action(&a4, &v4).unwrap();
        assert_eq!(act.image.order(), 3);

        let act = coset_action(&s4, &s4).unwrap();
        assert_eq!(act.index(), 1);
        assert_eq!(act.image.order(), 1);

        // non-normal: S4 on cosets of S3 is faithful
        let s3 = group(4, &["(1,2,3)", "(1,2)"]);
        let act = coset_action(&s4, &s3).unwrap();
        assert_eq!(act.image.order(), 24);
        assert!(act.kernel().unwrap().is_trivial());

        assert!(coset_action(&a4, &s3).is_err());
    }

    #[test]
    fn coset_map_is_homomorphism() {
        let s4 = PermGroup::symmetric(4);
        let s3 = group(4, &["(1,2,3)", "(1,2)"]);
        let act = coset_action(&s4, &s3).unwrap();
        let t = s4.elements().unwrap();
        for a in t.iter().step_by(5) {
            for b in t.iter().step_by(7) {
                let ab = act.map(&(a * b)).unwrap();
                assert_eq!(ab, &act.map(a).unwrap() * &act.map(b).unwrap());
            }
        }
    }

    #[test]
    fn orbits() {
        let g = group(6, &["(1,2)", "(4,5,6)"]);
        assert_eq!(g.orbits(), alloc::vec![alloc::vec![0, 1], alloc::vec![2], alloc::vec![3, 4, 5]]);
    }
}
