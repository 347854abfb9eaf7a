//! Moving characters between groups: restriction, induction, outer tensor
//! products, fixed-point dimensions, fixed-subspace characters and kernels.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::character::{CharacterTable, ClassFunction};
use crate::classes::conjugacy_classes;
use crate::cyclotomic::{Cyclotomic, ProductAccumulator};
use crate::error::Error;
use crate::group::{DirectProduct, PermGroup};
use crate::structure::{is_normal, normal_closure};

fn rational(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn check_subgroup(h: &PermGroup, g: &PermGroup) -> Result<(), Error> {
    if h.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            left: h.degree(),
            right: g.degree(),
        });
    }
    if !h.generators().iter().all(|x| g.has(x)) {
        return Err(Error::NotASubgroup("H is not contained in G"));
    }
    Ok(())
}

fn nonnegative_integer(q: BigRational, what: &'static str) -> Result<u64, Error> {
    if !q.is_integer() || q.is_negative() {
        return Err(Error::Defect(what));
    }
    q.to_integer().to_u64().ok_or(Error::Defect(what))
}

/// Number of elements of `h` in each class of `g`.
pub fn class_counts(table: &CharacterTable, h: &PermGroup) -> Result<Vec<u64>, Error> {
    let g = table.group();
    check_subgroup(h, g)?;
    let classes = table.classes();
    let elems = g.elements()?;
    let mut counts = alloc::vec![0u64; table.num_classes()];
    for x in h.elements()?.iter() {
        let i = elems
            .index_of(x)
            .ok_or(Error::NotASubgroup("element outside G"))?;
        counts[classes.class_of_index(i)] += 1;
    }
    Ok(counts)
}

/// `dim V^H = (1/|H|) Σ_{h in H} χ(h)` for a character `χ` of `G`.
pub fn fixed_dim(table: &CharacterTable, chi: &[Cyclotomic], h: &PermGroup) -> Result<u64, Error> {
    table.check_len(chi)?;
    let counts = class_counts(table, h)?;
    fixed_dim_from_counts(table, chi, &counts, h.order())
}

/// [`fixed_dim`] with the class counts of `H` already known.
pub fn fixed_dim_from_counts(
    table: &CharacterTable,
    chi: &[Cyclotomic],
    counts: &[u64],
    h_order: u128,
) -> Result<u64, Error> {
    let mut acc = ProductAccumulator::new(table.exponent());
    for (k, &c) in counts.iter().enumerate() {
        if c != 0 {
            acc.add(&chi[k], &rational(c));
        }
    }
    let total = acc
        .finish()
        .to_rational()
        .ok_or(Error::Defect("fixed-point sum is not rational"))?;
    nonnegative_integer(total / rational(h_order), "fixed-point dimension is not a nonnegative integer")
}

/// For each class of `H`, the class of `G` containing it.
pub fn fusion_map(table_g: &CharacterTable, table_h: &CharacterTable) -> Result<Vec<usize>, Error> {
    let g = table_g.group();
    check_subgroup(table_h.group(), g)?;
    let elems = g.elements()?;
    let classes = table_g.classes();
    table_h
        .classes()
        .classes()
        .iter()
        .map(|c| {
            elems
                .index_of(&c.representative)
                .map(|i| classes.class_of_index(i))
                .ok_or(Error::NotASubgroup("element outside G"))
        })
        .collect()
}

/// Restriction of a class function of `G` to `H`.
pub fn restrict_function(
    table_g: &CharacterTable,
    chi: &[Cyclotomic],
    table_h: &CharacterTable,
) -> Result<ClassFunction, Error> {
    table_g.check_len(chi)?;
    let fusion = fusion_map(table_g, table_h)?;
    Ok(fusion.iter().map(|&k| chi[k].clone()).collect())
}

/// Multiplicities of the irreducibles of `H` in the restriction of `chi`.
pub fn restrict(
    table_g: &CharacterTable,
    chi: &[Cyclotomic],
    table_h: &CharacterTable,
) -> Result<Vec<u64>, Error> {
    let res = restrict_function(table_g, chi, table_h)?;
    table_h.constituents(&res)
}

/// Induced class function `χ^G(g) = |G| / (|H| |C_g|) Σ_{h in C_g ∩ H} χ(h)`.
pub fn induce(
    table_h: &CharacterTable,
    chi: &[Cyclotomic],
    table_g: &CharacterTable,
) -> Result<ClassFunction, Error> {
    table_h.check_len(chi)?;
    let g = table_g.group();
    let h = table_h.group();
    check_subgroup(h, g)?;
    let g_elems = g.elements()?;
    let g_classes = table_g.classes();
    let h_elems = h.elements()?;
    let h_classes = conjugacy_classes(h)?;
    let r_g = table_g.num_classes();
    let r_h = table_h.num_classes();
    // counts[k][j] = |C_k ∩ D_j| for G-class k and H-class j
    let mut counts = alloc::vec![alloc::vec![0u64; r_h]; r_g];
    for (i, x) in h_elems.iter().enumerate() {
        let k = g_classes.class_of_index(g_elems.index_of(x).unwrap());
        counts[k][h_classes.class_of_index(i)] += 1;
    }
    let conductor = table_g.exponent();
    if chi.iter().any(|x| conductor % x.conductor() != 0) {
        return Err(Error::Defect("character values outside the field of G"));
    }
    let mut out = Vec::with_capacity(r_g);
    for (k, row) in counts.iter().enumerate() {
        let mut acc = ProductAccumulator::new(conductor);
        for (j, &c) in row.iter().enumerate() {
            if c != 0 {
                acc.add(&chi[j], &rational(c));
            }
        }
        let scale = rational(g.order()) / (rational(h.order()) * rational(table_g.class_sizes()[k]));
        out.push(acc.finish().scale(&scale));
    }
    Ok(out)
}

/// Character of `A ⊗ B` on `G x H`: the value at `(g, h)` is `α(g) β(h)`.
pub fn outer_tensor(
    product: &DirectProduct,
    table_p: &CharacterTable,
    table_a: &CharacterTable,
    alpha: &[Cyclotomic],
    table_b: &CharacterTable,
    beta: &[Cyclotomic],
) -> Result<ClassFunction, Error> {
    table_a.check_len(alpha)?;
    table_b.check_len(beta)?;
    let a_elems = table_a.group().elements()?;
    let b_elems = table_b.group().elements()?;
    let a_classes = table_a.classes();
    let b_classes = table_b.classes();
    table_p
        .classes()
        .classes()
        .iter()
        .map(|c| {
            let (x, y) = product.split(&c.representative)?;
            let i = a_elems
                .index_of(&x)
                .ok_or(Error::NotInProduct("left component outside the factor"))?;
            let j = b_elems
                .index_of(&y)
                .ok_or(Error::NotInProduct("right component outside the factor"))?;
            let v = &alpha[a_classes.class_of_index(i)] * &beta[b_classes.class_of_index(j)];
            Ok(v.lift(table_p.exponent()))
        })
        .collect()
}

/// `χ` of `G` viewed on `G x H` through the first projection.
pub fn inflate_left(
    product: &DirectProduct,
    table_p: &CharacterTable,
    table_a: &CharacterTable,
    alpha: &[Cyclotomic],
) -> Result<ClassFunction, Error> {
    let one_b = crate::character::character_table(&product.right)?;
    let triv = one_b.trivial_character();
    outer_tensor(product, table_p, table_a, alpha, &one_b, &triv)
}

/// `χ^L(g) = (1/|L|) Σ_{l in L} χ(g l)`, the character of the `L`-fixed part.
pub fn fixed_subspace_character(
    table: &CharacterTable,
    chi: &[Cyclotomic],
    l: &PermGroup,
) -> Result<ClassFunction, Error> {
    table.check_len(chi)?;
    let g = table.group();
    if !is_normal(l, g)? {
        return Err(Error::NotNormal);
    }
    let g_elems = g.elements()?;
    let classes = table.classes();
    let l_elems = l.elements()?;
    let inv_order = BigRational::new(BigInt::from(1), BigInt::from(l.order()));
    let mut out = Vec::with_capacity(table.num_classes());
    for c in classes.classes() {
        let mut counts = alloc::vec![0u64; table.num_classes()];
        for x in l_elems.iter() {
            let i = g_elems.index_of(&c.representative.mul_unchecked(x)).unwrap();
            counts[classes.class_of_index(i)] += 1;
        }
        let mut acc = ProductAccumulator::new(table.exponent());
        for (k, &n) in counts.iter().enumerate() {
            if n != 0 {
                acc.add(&chi[k], &rational(n));
            }
        }
        out.push(acc.finish().scale(&inv_order));
    }
    Ok(out)
}

/// Normal subgroup of elements `g` with `χ(g) = χ(1)`.
pub fn kernel_of_character(table: &CharacterTable, chi: &[Cyclotomic]) -> Result<PermGroup, Error> {
    table.check_len(chi)?;
    let reps: Vec<_> = table
        .classes()
        .classes()
        .iter()
        .zip(chi)
        .filter(|(_, v)| *v == &chi[0])
        .map(|(c, _)| c.representative.clone())
        .collect();
    Ok(normal_closure(table.group(), &reps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::{character_table, permutation_character};
    use crate::perm::parse_cycles;
    use crate::structure::p_core;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(degree, gens.iter().map(|s| parse_cycles(s, degree).unwrap()).collect()).unwrap()
    }

    #[test]
    fn fixed_dim_of_trivial_subgroup_is_degree() {
        let t = character_table(&PermGroup::alternating(5)).unwrap();
        let e = PermGroup::trivial(5);
        for (i, row) in t.rows().iter().enumerate() {
            assert_eq!(fixed_dim(&t, row, &e).unwrap(), t.degree(i));
        }
    }

    #[test]
    fn burnside_orbit_count() {
        let g = PermGroup::symmetric(5);
        let t = character_table(&g).unwrap();
        let pi = permutation_character(&t);
        let h = group(5, &["(1,2)", "(3,4,5)"]);
        assert_eq!(fixed_dim(&t, &pi, &h).unwrap(), 2);
    }

    #[test]
    fn restriction_to_whole_group_is_identity() {
        let t = character_table(&PermGroup::symmetric(4)).unwrap();
        for (i, row) in t.rows().iter().enumerate() {
            let m = restrict(&t, row, &t).unwrap();
            let mut expect = alloc::vec![0; t.rows().len()];
            expect[i] = 1;
            assert_eq!(m, expect);
        }
    }

    #[test]
    fn induced_trivial_character_has_index_degree() {
        let g = PermGroup::symmetric(4);
        let h = group(4, &["(1,2,3)"]);
        let tg = character_table(&g).unwrap();
        let th = character_table(&h).unwrap();
        let ind = induce(&th, &th.trivial_character(), &tg).unwrap();
        assert_eq!(ind[0].to_integer(), Some(8));
    }

    #[test]
    fn kernel_of_s3_character_is_v4() {
        let g = PermGroup::symmetric(4);
        let t = character_table(&g).unwrap();
        let v4 = p_core(&g, 2).unwrap();
        let two = t.degrees().iter().position(|&d| d == 2).unwrap();
        let k = kernel_of_character(&t, &t.rows()[two]).unwrap();
        assert!(k.same_elements(&v4));
        assert!(kernel_of_character(&t, &t.trivial_character()).unwrap().same_elements(&g));
    }

    #[test]
    fn fixed_subspace_characters() {
        let g = PermGroup::symmetric(4);
        let t = character_table(&g).unwrap();
        let v4 = p_core(&g, 2).unwrap();
        for row in t.rows() {
            let fixed = fixed_subspace_character(&t, row, &v4).unwrap();
            let dim = fixed[0].to_integer().unwrap() as u64;
            assert_eq!(dim, fixed_dim(&t, row, &v4).unwrap());
            t.constituents(&fixed).unwrap();
            t.constituents(&crate::character::sub_functions(row, &fixed)).unwrap();
        }
        let e = PermGroup::trivial(4);
        assert_eq!(fixed_subspace_character(&t, &t.rows()[3], &e).unwrap(), t.rows()[3]);
    }
}
