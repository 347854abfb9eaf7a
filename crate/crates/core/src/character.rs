//! Exact complex character tables by the Dixon–Schneider method.
//!
//! The class sums of `G` span the centre of the group algebra, and for each
//! irreducible `χ` the central character `ω_χ(C_k) = |C_k| χ(g_k) / χ(1)`
//! is a common eigenvector of the class multiplication matrices
//! `(M_i)_{jk} = a_{ijk}`. Working modulo a prime `p ≡ 1 (mod exp G)` with
//! `p > 2 sqrt|G|`, the common eigenspaces are found by splitting with one
//! class matrix at a time. Each modular character is then lifted to
//! `Q(ζ_e)` from the eigenvalue multiplicities of `ρ(g)`, which are
//! integers below `χ(1) < p/2`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::classes::{class_coefficients, conjugacy_classes, power_map, ClassData};
use crate::cyclotomic::{Cyclotomic, ProductAccumulator};
use crate::error::Error;
use crate::group::PermGroup;
use crate::modp::{is_prime_u64, PrimeField};
use crate::structure::LATTICE_CLASS_LIMIT;

/// Values of a class function, one per conjugacy class.
pub type ClassFunction = Vec<Cyclotomic>;

/// Smallest prime `p ≡ 1 (mod exponent)` with `p^2 > 4 |G|`.
pub fn dixon_prime(exponent: u64, order: u128) -> u64 {
    let mut p = exponent + 1;
    loop {
        if is_prime_u64(p) && (p as u128) * (p as u128) > 4 * order {
            return p;
        }
        p += exponent;
    }
}

pub struct CharacterTable {
    group: PermGroup,
    exponent: u32,
    prime: u64,
    class_sizes: Vec<usize>,
    element_orders: Vec<u64>,
    inverse_classes: Vec<usize>,
    /// `(k, map)` for every divisor `k` of the exponent.
    power_maps: Vec<(u32, Vec<usize>)>,
    irreducibles: Vec<ClassFunction>,
}

impl core::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("CharacterTable")
            .field("order", &self.order())
            .field("classes", &self.num_classes())
            .field("degrees", &self.degrees())
            .finish()
    }
}

impl CharacterTable {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &ClassData {
        conjugacy_classes(&self.group).expect("classes computed at construction")
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.element_orders
    }

    pub fn inverse_classes(&self) -> &[usize] {
        &self.inverse_classes
    }

    pub fn power_maps(&self) -> &[(u32, Vec<usize>)] {
        &self.power_maps
    }

    /// Class of `g^k` for `g` in each class.
    pub fn power_map(&self, k: i64) -> Vec<usize> {
        let e = self.exponent as i64;
        let kk = k.rem_euclid(e) as u32;
        if let Some((_, m)) = self.power_maps.iter().find(|(d, _)| *d == kk) {
            return m.clone();
        }
        power_map(&self.group, k).expect("classes computed at construction")
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn row(&self, i: usize) -> Result<&ClassFunction, Error> {
        self.irreducibles.get(i).ok_or(Error::InvalidRow(i))
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.irreducibles[i][0].to_integer().unwrap() as u64
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.irreducibles.len()).map(|i| self.degree(i)).collect()
    }

    pub fn trivial_character(&self) -> ClassFunction {
        alloc::vec![Cyclotomic::from_integer(self.exponent, 1); self.num_classes()]
    }

    /// `(1/|G|) Σ_k |C_k| a_k conj(b_k)`.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<BigRational, Error> {
        self.check_len(a)?;
        self.check_len(b)?;
        let conductor = a
            .iter()
            .chain(b)
            .fold(1u32, |acc, x| acc.lcm(&x.conductor()));
        let mut acc = ProductAccumulator::new(conductor);
        for k in 0..a.len() {
            let w = BigRational::from_integer(BigInt::from(self.class_sizes[k]));
            acc.add_product_conj(&a[k], &b[k], &w);
        }
        let total = acc.finish();
        let q = total
            .to_rational()
            .ok_or(Error::Defect("inner product is not rational"))?;
        Ok(q / BigRational::from_integer(BigInt::from(self.order())))
    }

    /// Multiplicities `<f, χ_i>` of every irreducible in a class function.
    pub fn decompose(&self, f: &[Cyclotomic]) -> Result<Vec<BigRational>, Error> {
        self.irreducibles.iter().map(|chi| self.inner_product(f, chi)).collect()
    }

    /// Decomposition of a character; fails if a multiplicity is not a
    /// nonnegative integer.
    pub fn constituents(&self, f: &[Cyclotomic]) -> Result<Vec<u64>, Error> {
        self.decompose(f)?
            .into_iter()
            .map(|q| {
                if q.is_integer() && !q.numer().is_negative_int() {
                    Ok(q.to_integer().to_u64().unwrap())
                } else {
                    Err(Error::Defect("multiplicity is not a nonnegative integer"))
                }
            })
            .collect()
    }

    pub(crate) fn check_len(&self, f: &[Cyclotomic]) -> Result<(), Error> {
        if f.len() != self.num_classes() {
            return Err(Error::ClassCountMismatch {
                expected: self.num_classes(),
                got: f.len(),
            });
        }
        Ok(())
    }

    /// Index of the row equal to `f`, if any.
    pub fn find_row(&self, f: &[Cyclotomic]) -> Option<usize> {
        self.irreducibles.iter().position(|r| r.as_slice() == f)
    }

    /// Complex conjugate of a character via the inverse-class map.
    pub fn conjugate_character(&self, f: &[Cyclotomic]) -> ClassFunction {
        self.inverse_classes.iter().map(|&k| f[k].clone()).collect()
    }
}

trait NegativeInt {
    fn is_negative_int(&self) -> bool;
}

impl NegativeInt for BigInt {
    fn is_negative_int(&self) -> bool {
        self.sign() == num_bigint::Sign::Minus
    }
}

/// Reduced row echelon basis of a subspace with its pivot columns.
fn echelon(field: PrimeField, mut rows: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<usize>) {
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..cols {
                    let t = field.mul(f, rows[r][j]);
                    rows[i][j] = field.sub(rows[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Splits `space` into common eigenspaces of the class matrix `M_i`.
fn split_space(
    field: PrimeField,
    coeffs: &[u32],
    r: usize,
    i: usize,
    space: Vec<Vec<u64>>,
) -> Result<Vec<Vec<Vec<u64>>>, Error> {
    let d = space.len();
    if d == 1 {
        return Ok(alloc::vec![space]);
    }
    let (basis, pivots) = echelon(field, space);
    // A[s][t] = (M_i w_t)[pivot s]
    let mut a = alloc::vec![alloc::vec![0u64; d]; d];
    for (t, w) in basis.iter().enumerate() {
        for (s, &j) in pivots.iter().enumerate() {
            let mut acc = 0u64;
            for k in 0..r {
                let c = coeffs[(i * r + j) * r + k] as u64;
                if c != 0 && w[k] != 0 {
                    acc = field.add(acc, field.mul(c % field.p, w[k]));
                }
            }
            a[s][t] = acc;
        }
    }
    let mut out = Vec::new();
    let mut found = 0;
    for lambda in 0..field.p {
        let shifted: Vec<Vec<u64>> = a
            .iter()
            .enumerate()
            .map(|(s, row)| {
                row.iter()
                    .enumerate()
                    .map(|(t, &x)| if s == t { field.sub(x, lambda) } else { x })
                    .collect()
            })
            .collect();
        let ns = field.null_space(&shifted, d);
        if ns.is_empty() {
            continue;
        }
        found += ns.len();
        let vectors = ns
            .iter()
            .map(|coords| {
                let mut v = alloc::vec![0u64; r];
                for (t, &c) in coords.iter().enumerate() {
                    if c != 0 {
                        for k in 0..r {
                            v[k] = field.add(v[k], field.mul(c, basis[t][k]));
                        }
                    }
                }
                v
            })
            .collect();
        out.push(vectors);
        if found == d {
            return Ok(out);
        }
    }
    Err(Error::Defect("class matrix is not diagonalizable over GF(p)"))
}

fn isqrt(n: u128) -> u128 {
    let mut x = libm::sqrt(n as f64) as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

fn cmp_floats(a: f64, b: f64) -> Ordering {
    let qa = libm::round(a * 1e6) as i64;
    let qb = libm::round(b * 1e6) as i64;
    qa.cmp(&qb)
}

/// Exact irreducible characters of `group`.
///
/// Rows are sorted by degree, then by the real parts of the values (class
/// order, descending), then by imaginary parts (descending), so the trivial
/// character is row 0.
pub fn character_table(group: &PermGroup) -> Result<CharacterTable, Error> {
    let classes = conjugacy_classes(group)?;
    let r = classes.len();
    if r > LATTICE_CLASS_LIMIT {
        return Err(Error::TooManyClasses {
            count: r,
            limit: LATTICE_CLASS_LIMIT,
        });
    }
    let order = group.order();
    let class_sizes = classes.sizes();
    let element_orders: Vec<u64> = classes.classes().iter().map(|c| c.element_order).collect();
    let exponent = element_orders.iter().fold(1u64, |acc, &o| acc.lcm(&o));
    let e = exponent as u32;
    let prime = dixon_prime(exponent, order);
    let field = PrimeField::new(prime);
    let coeffs = class_coefficients(group)?;
    let inverse_classes = power_map(group, -1)?;

    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let mut v = alloc::vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut spaces = alloc::vec![identity];
    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for s in spaces {
            next.extend(split_space(field, coeffs, r, i, s)?);
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::Defect("class matrices do not separate the characters"));
    }

    // class of g^l for every class and every l up to the element order
    let powers: Vec<Vec<usize>> = (0..r)
        .map(|k| {
            let table = group.elements().unwrap();
            let rep = &classes.class(k).representative;
            let mut out = Vec::with_capacity(element_orders[k] as usize);
            let mut x = group.identity();
            for _ in 0..element_orders[k] {
                out.push(classes.class_of_index(table.index_of(&x).unwrap()));
                x = x.mul_unchecked(rep);
            }
            out
        })
        .collect();

    let z_e = field.pow(field.primitive_root(), (prime - 1) / exponent);
    let max_degree = isqrt(order);
    let mut rows: Vec<ClassFunction> = Vec::with_capacity(r);
    for space in &spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(Error::Defect("central character vanishes at the identity"));
        }
        let inv0 = field.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| field.mul(x, inv0)).collect();
        let mut s = 0u64;
        for k in 0..r {
            let t = field.mul(omega[k], omega[inverse_classes[k]]);
            s = field.add(s, field.mul(t, field.inv(class_sizes[k] as u64 % prime)));
        }
        let target = field.mul((order % prime as u128) as u64, field.inv(s));
        let degree = (1..=max_degree)
            .find(|&d| field.mul((d % prime as u128) as u64, (d % prime as u128) as u64) == target)
            .ok_or(Error::Defect("no degree with the required square"))? as u64;
        let chi_mod: Vec<u64> = (0..r)
            .map(|k| field.mul(field.mul(omega[k], degree), field.inv(class_sizes[k] as u64 % prime)))
            .collect();

        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let o = element_orders[k];
            let z_o = field.pow(z_e, exponent / o);
            let inv_o = field.inv(o % prime);
            let mut terms = Vec::new();
            let mut check = 0u64;
            for j in 0..o {
                let mut m = 0u64;
                for l in 0..o {
                    let w = field.pow(z_o, (o - (j * l) % o) % o);
                    m = field.add(m, field.mul(chi_mod[powers[k][l as usize]], w));
                }
                m = field.mul(m, inv_o);
                if m > degree {
                    return Err(Error::Defect("eigenvalue multiplicity exceeds the degree"));
                }
                if m != 0 {
                    check = field.add(check, field.mul(m, field.pow(z_o, j)));
                    terms.push(((j * (exponent / o)) as i64, BigRational::from_integer(BigInt::from(m))));
                }
            }
            if check != chi_mod[k] {
                return Err(Error::Defect("lifted value disagrees with the modular character"));
            }
            row.push(Cyclotomic::from_terms(e, &terms));
        }
        rows.push(row);
    }

    let floats: Vec<Vec<(f64, f64)>> = rows
        .iter()
        .map(|row| row.iter().map(|x| x.to_complex()).collect())
        .collect();
    let mut idx: Vec<usize> = (0..rows.len()).collect();
    idx.sort_by(|&a, &b| {
        let da = rows[a][0].to_integer().unwrap();
        let db = rows[b][0].to_integer().unwrap();
        da.cmp(&db)
            .then_with(|| {
                floats[a]
                    .iter()
                    .zip(&floats[b])
                    .map(|(x, y)| cmp_floats(y.0, x.0))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            })
            .then_with(|| {
                floats[a]
                    .iter()
                    .zip(&floats[b])
                    .map(|(x, y)| cmp_floats(y.1, x.1))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            })
    });
    let mut slots: Vec<Option<ClassFunction>> = rows.into_iter().map(Some).collect();
    let irreducibles: Vec<ClassFunction> = idx.iter().map(|&i| slots[i].take().unwrap()).collect();

    let sum_sq: u128 = irreducibles
        .iter()
        .map(|row| {
            let d = row[0].to_integer().unwrap() as u128;
            d * d
        })
        .sum();
    if sum_sq != order {
        return Err(Error::Defect("sum of squared degrees differs from the group order"));
    }

    let power_maps = (1..=e)
        .filter(|k| e % k == 0)
        .map(|k| (k % e, power_map(group, k as i64).unwrap()))
        .collect();

    Ok(CharacterTable {
        group: group.clone(),
        exponent: e,
        prime,
        class_sizes,
        element_orders,
        inverse_classes,
        power_maps,
        irreducibles,
    })
}

/// Permutation character: number of fixed points of each class representative.
pub fn permutation_character(table: &CharacterTable) -> ClassFunction {
    table
        .classes()
        .classes()
        .iter()
        .map(|c| Cyclotomic::from_integer(table.exponent(), c.representative.fixed_points() as i64))
        .collect()
}

/// `Σ c_i χ_i` over integer coefficients.
pub fn combine(table: &CharacterTable, coefficients: &[(usize, i64)]) -> ClassFunction {
    let mut out = alloc::vec![Cyclotomic::zero(table.exponent()); table.num_classes()];
    for &(row, c) in coefficients {
        let w = BigRational::from_integer(BigInt::from(c));
        for (o, v) in out.iter_mut().zip(&table.rows()[row]) {
            *o = &*o + &v.scale(&w);
        }
    }
    out
}

pub fn is_zero_function(f: &[Cyclotomic]) -> bool {
    f.iter().all(|x| x.is_zero())
}

pub fn add_functions(a: &[Cyclotomic], b: &[Cyclotomic]) -> ClassFunction {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_functions(a: &[Cyclotomic], b: &[Cyclotomic]) -> ClassFunction {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}
