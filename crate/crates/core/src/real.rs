//! Frobenius–Schur indicators and real forms of complex irreducibles.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::character::{add_functions, CharacterTable, ClassFunction};
use crate::cyclotomic::{Cyclotomic, ProductAccumulator};
use crate::error::Error;

/// `(1/|G|) Σ_g χ(g^2)`, always -1, 0 or 1 for an irreducible.
pub fn frobenius_schur(table: &CharacterTable, row: usize) -> Result<i8, Error> {
    let chi = table.row(row)?;
    let squares = table.power_map(2);
    let mut acc = ProductAccumulator::new(table.exponent());
    for (k, &size) in table.class_sizes().iter().enumerate() {
        acc.add(&chi[squares[k]], &BigRational::from_integer(BigInt::from(size)));
    }
    let total = acc
        .finish()
        .to_rational()
        .ok_or(Error::Defect("indicator sum is not rational"))?;
    let nu = total / BigRational::from_integer(BigInt::from(table.order()));
    if !nu.is_integer() {
        return Err(Error::Defect("indicator is not an integer"));
    }
    match nu.to_integer().to_i8() {
        Some(v @ -1..=1) => Ok(v),
        _ => Err(Error::Defect("indicator outside {-1, 0, 1}")),
    }
}

/// An irreducible real representation, described by its character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealModule {
    /// Real degree, with a `.i` suffix when several modules share it.
    pub name: String,
    /// The complex row, and its conjugate partner when the indicator is 0.
    pub source: Vec<usize>,
    pub fs_indicator: i8,
    pub real_degree: u64,
    pub real_character: ClassFunction,
}

impl RealModule {
    pub fn row(&self) -> usize {
        self.source[0]
    }
}

/// Real form of complex row `row`. The name is left empty; see [`real_modules`].
pub fn realify(table: &CharacterTable, row: usize) -> Result<RealModule, Error> {
    let chi = table.row(row)?;
    let fs = frobenius_schur(table, row)?;
    let degree = table.degree(row);
    let (source, real_character, real_degree) = match fs {
        1 => (alloc::vec![row], chi.clone(), degree),
        0 => {
            let conj = table.conjugate_character(chi);
            let partner = table
                .find_row(&conj)
                .ok_or(Error::Defect("conjugate character is not a row"))?;
            if partner == row {
                return Err(Error::Defect("indicator 0 on a real character"));
            }
            (alloc::vec![row, partner], add_functions(chi, &conj), 2 * degree)
        }
        _ => (alloc::vec![row], add_functions(chi, chi), 2 * degree),
    };
    Ok(RealModule {
        name: String::new(),
        source,
        fs_indicator: fs,
        real_degree,
        real_character,
    })
}

/// The real form of every row, in row order, named by real degree.
///
/// Conjugate pairs are not merged, so each member of a pair contributes its
/// own (equal) real module.
pub fn real_modules(table: &CharacterTable) -> Result<Vec<RealModule>, Error> {
    let mut modules = (0..table.rows().len())
        .map(|i| realify(table, i))
        .collect::<Result<Vec<_>, _>>()?;
    let degrees: Vec<u64> = modules.iter().map(|m| m.real_degree).collect();
    for (i, m) in modules.iter_mut().enumerate() {
        let same = degrees.iter().filter(|&&d| d == m.real_degree).count();
        m.name = if same == 1 {
            format!("{}", m.real_degree)
        } else {
            let idx = degrees[..=i].iter().filter(|&&d| d == m.real_degree).count();
            format!("{}.{}", m.real_degree, idx)
        };
    }
    Ok(modules)
}

/// Real modules of degree at most `d_max` whose character has trivial kernel.
pub fn faithful_real_dims(table: &CharacterTable, d_max: u64) -> Result<Vec<RealModule>, Error> {
    Ok(real_modules(table)?
        .into_iter()
        .filter(|m| m.real_degree <= d_max && is_faithful(&m.real_character))
        .collect())
}

/// A character is faithful iff only the identity class attains the degree.
pub fn is_faithful(chi: &[Cyclotomic]) -> bool {
    chi.iter().skip(1).all(|v| v != &chi[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::character_table;
    use crate::group::PermGroup;

    #[test]
    fn a5_modules_are_real() {
        let t = character_table(&PermGroup::alternating(5)).unwrap();
        let ms = real_modules(&t).unwrap();
        let names: Vec<&str> = ms.iter().map(|m| m.name.as_str()).collect();
        assert_eq!(names, ["1", "3.1", "3.2", "4", "5"]);
        assert!(ms.iter().all(|m| m.fs_indicator == 1));
    }

    #[test]
    fn cyclic_group_of_order_three() {
        let t = character_table(&PermGroup::cyclic(3)).unwrap();
        assert_eq!(frobenius_schur(&t, 0).unwrap(), 1);
        let m = realify(&t, 1).unwrap();
        assert_eq!(m.fs_indicator, 0);
        assert_eq!(m.real_degree, 2);
        assert_eq!(m.source, alloc::vec![1, 2]);
        assert_eq!(m.real_character[1].to_integer(), Some(-1));
    }

    #[test]
    fn quaternion_group_is_quaternionic() {
        // Q8 acting regularly on itself
        let i = crate::perm::parse_cycles("(1,2,3,4)(5,6,7,8)", 8).unwrap();
        let j = crate::perm::parse_cycles("(1,5,3,7)(2,8,4,6)", 8).unwrap();
        let q8 = PermGroup::new(8, alloc::vec![i, j]).unwrap();
        assert_eq!(q8.order(), 8);
        let t = character_table(&q8).unwrap();
        assert_eq!(t.degrees(), alloc::vec![1, 1, 1, 1, 2]);
        assert_eq!(frobenius_schur(&t, 4).unwrap(), -1);
        assert_eq!(realify(&t, 4).unwrap().real_degree, 4);
    }

    #[test]
    fn faithful_modules_of_a5() {
        let t = character_table(&PermGroup::alternating(5)).unwrap();
        let f = faithful_real_dims(&t, 3).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|m| m.real_degree == 3));
    }
}
