//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};
use std::fs;
use std::path::Path;

use nalgebra::{Complex, DMatrix};
use repcert_core::character::{character_table, permutation_character, CharacterTable};
use repcert_core::cyclotomic::Cyclotomic;
use repcert_core::family::{family_parameters, in_family, in_g_calligraphic, validate_witness};
use repcert_core::group::{direct_product, PermGroup};
use repcert_core::groupfile::parse_group_file;
use repcert_core::induction::fixed_dim;
use repcert_core::perm::{parse_cycles, Permutation};
use repcert_core::structure::{is_normal, normal_subgroups};
use repcert_core::subgroups::enumerate_subgroups;

pub type C64 = Complex<f64>;

pub fn perm(text: &str, degree: usize) -> Permutation {
    parse_cycles(text, degree).unwrap()
}

pub fn group(degree: usize, gens: &[&str]) -> PermGroup {
    PermGroup::new(degree, gens.iter().map(|g| perm(g, degree)).collect()).unwrap()
}

/// Quaternion group acting regularly on 8 points.
pub fn q8() -> PermGroup {
    group(8, &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"])
}

/// Small groups built from standard constructions.
pub fn zoo() -> Vec<(String, PermGroup)> {
    let dp = |a: PermGroup, b: PermGroup| direct_product(&a, &b).group;
    vec![
        ("trivial".into(), PermGroup::trivial(1)),
        ("C2".into(), PermGroup::cyclic(2)),
        ("C3".into(), PermGroup::cyclic(3)),
        ("C4".into(), PermGroup::cyclic(4)),
        ("V4".into(), PermGroup::dihedral(4)),
        ("C6".into(), PermGroup::cyclic(6)),
        ("S3".into(), PermGroup::symmetric(3)),
        ("C7".into(), PermGroup::cyclic(7)),
        ("C8".into(), PermGroup::cyclic(8)),
        ("D8".into(), PermGroup::dihedral(8)),
        ("Q8".into(), q8()),
        ("C2xC4".into(), dp(PermGroup::cyclic(2), PermGroup::cyclic(4))),
        ("C2^3".into(), dp(PermGroup::dihedral(4), PermGroup::cyclic(2))),
        ("D10".into(), PermGroup::dihedral(10)),
        ("C12".into(), PermGroup::cyclic(12)),
        ("D12".into(), PermGroup::dihedral(12)),
        ("A4".into(), PermGroup::alternating(4)),
        ("C3xS3".into(), dp(PermGroup::cyclic(3), PermGroup::symmetric(3))),
        ("D16".into(), PermGroup::dihedral(16)),
        ("S4".into(), PermGroup::symmetric(4)),
        ("A4xC2".into(), dp(PermGroup::alternating(4), PermGroup::cyclic(2))),
        ("D4xD6".into(), dp(PermGroup::dihedral(4), PermGroup::dihedral(6))),
        ("D24".into(), PermGroup::dihedral(24)),
        ("S3xS3".into(), dp(PermGroup::symmetric(3), PermGroup::symmetric(3))),
        ("A5".into(), PermGroup::alternating(5)),
        ("S5".into(), PermGroup::symmetric(5)),
    ]
}

pub fn data_dir() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../repcert/data/groups")
}

/// Every shipped group file, by name.
pub fn shipped() -> Vec<(String, PermGroup)> {
    let mut files: Vec<_> = fs::read_dir(data_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "grp"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let spec = parse_group_file(&fs::read_to_string(&p).unwrap()).unwrap();
            let name = spec.name.clone().unwrap();
            (name, spec.group().unwrap())
        })
        .collect()
}

pub fn shipped_group(name: &str) -> PermGroup {
    shipped().into_iter().find(|(n, _)| n == name).unwrap().1
}

/// Zoo plus shipped groups with at most `max_order` elements.
pub fn corpus(max_order: u128) -> Vec<(String, PermGroup)> {
    zoo().into_iter().chain(shipped()).filter(|(_, g)| g.order() <= max_order).collect()
}

/// Closure of the generators under right multiplication, without the stabilizer chain.
pub fn closure_bfs(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen = HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for s in gens {
            let y = &x * s;
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen
}

pub fn element_set(g: &PermGroup) -> BTreeSet<Permutation> {
    g.elements().unwrap().iter().cloned().collect()
}

pub fn orbit_count(degree: usize, gens: &[Permutation]) -> usize {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for g in gens {
        for x in 0..degree {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
            parent[a] = b;
        }
    }
    (0..degree).filter(|&x| find(&mut parent, x) == x).count()
}

pub fn c64(v: &Cyclotomic) -> C64 {
    let (re, im) = v.to_complex();
    C64::new(re, im)
}

fn max_abs(m: &DMatrix<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Checks the table against the regular representation: the central
/// idempotents built from the rows are orthogonal projections of rank
/// `deg^2` summing to the identity, and each row is recovered as a trace.
pub fn regular_representation_oracle(g: &PermGroup, table: &CharacterTable) -> Result<(), String> {
    let elems = g.elements().map_err(|e| e.to_string())?;
    let n = elems.len();
    let classes = table.classes();
    // right regular action x -> x g
    let reg: Vec<DMatrix<C64>> = (0..n)
        .map(|gi| {
            let mut m = DMatrix::<C64>::zeros(n, n);
            for x in 0..n {
                m[(elems.mul_index(x, gi), x)] = C64::new(1.0, 0.0);
            }
            m
        })
        .collect();
    let tol = 1e-9;
    let mut total = DMatrix::<C64>::zeros(n, n);
    let mut idempotents = Vec::new();
    for (r, row) in table.rows().iter().enumerate() {
        let d = table.degree(r) as f64;
        let mut e = DMatrix::<C64>::zeros(n, n);
        for (gi, m) in reg.iter().enumerate() {
            let chi = c64(&row[classes.class_of_index(gi)]);
            e += m * (chi.conj() * (d / n as f64));
        }
        if max_abs(&(&e * &e - &e)) > tol {
            return Err(format!("row {} does not give an idempotent", r));
        }
        if (e.trace() - C64::new(d * d, 0.0)).norm() > tol {
            return Err(format!("row {}: trace {} but degree^2 = {}", r, e.trace(), d * d));
        }
        // χ(1) χ(g) or its conjugate, depending on the side of the action
        let traces: Vec<C64> = reg.iter().map(|m| (m * &e).trace() / d).collect();
        let direct = (0..n).all(|gi| (traces[gi] - c64(&row[classes.class_of_index(gi)])).norm() < tol);
        let conj = (0..n).all(|gi| (traces[gi] - c64(&row[classes.class_of_index(gi)]).conj()).norm() < tol);
        if !direct && !conj {
            return Err(format!("row {} is not recovered by traces", r));
        }
        total += &e;
        idempotents.push(e);
    }
    for i in 0..idempotents.len() {
        for j in 0..i {
            if max_abs(&(&idempotents[i] * &idempotents[j])) > tol {
                return Err(format!("rows {} and {} give non-orthogonal idempotents", i, j));
            }
        }
    }
    if max_abs(&(total - DMatrix::<C64>::identity(n, n))) > tol {
        return Err("idempotents do not sum to the identity".into());
    }
    Ok(())
}

/// Exact row and column orthogonality and `Σ deg^2 = |G|`.
pub fn exact_orthogonality(table: &CharacterTable) -> Result<(), String> {
    let rows = table.rows();
    for i in 0..rows.len() {
        for j in 0..=i {
            let ip = table.inner_product(&rows[i], &rows[j]).map_err(|e| e.to_string())?;
            let want = if i == j { 1 } else { 0 };
            if ip != num_rational::BigRational::from_integer(want.into()) {
                return Err(format!("<chi_{}, chi_{}> = {}", i, j, ip));
            }
        }
    }
    let e = table.exponent();
    let k = table.num_classes();
    for a in 0..k {
        for b in 0..=a {
            let mut sum = Cyclotomic::zero(e);
            for row in rows {
                sum = &sum + &(&row[a] * &row[b].conj());
            }
            let want = if a == b {
                (table.order() / table.class_sizes()[a] as u128) as i64
            } else {
                0
            };
            if sum != Cyclotomic::from_integer(e, want) {
                return Err(format!("column sum ({}, {}) = {:?}", a, b, sum));
            }
        }
    }
    let squares: u128 = table.degrees().iter().map(|&d| (d * d) as u128).sum();
    if squares != table.order() {
        return Err(format!("sum of squared degrees {} != {}", squares, table.order()));
    }
    Ok(())
}

/// Row orthogonality in floating point, within `tol`.
pub fn float_orthogonality(table: &CharacterTable, tol: f64) -> Result<(), String> {
    let rows: Vec<Vec<C64>> = table.rows().iter().map(|r| r.iter().map(c64).collect()).collect();
    let sizes = table.class_sizes();
    let n = table.order() as f64;
    for i in 0..rows.len() {
        for j in 0..rows.len() {
            let ip: C64 = (0..sizes.len())
                .map(|k| rows[i][k] * rows[j][k].conj() * sizes[k] as f64)
                .sum::<C64>()
                / n;
            let want = if i == j { 1.0 } else { 0.0 };
            if (ip - C64::new(want, 0.0)).norm() > tol {
                return Err(format!("float <chi_{}, chi_{}> = {}", i, j, ip));
            }
        }
    }
    Ok(())
}

/// Burnside: the fixed subspace of the permutation module has one dimension per orbit.
pub fn burnside(table: &CharacterTable, subgroups: &[PermGroup]) -> Result<(), String> {
    let pi = permutation_character(table);
    let degree = table.group().degree();
    for h in subgroups {
        let dim = fixed_dim(table, &pi, h).map_err(|e| e.to_string())?;
        let orbits = orbit_count(degree, h.generators());
        if dim as usize != orbits {
            return Err(format!("subgroup of order {}: dim {} but {} orbits", h.order(), dim, orbits));
        }
    }
    Ok(())
}

/// Cyclic subgroups generated by class representatives, plus `G` and `1`.
pub fn sample_subgroups(table: &CharacterTable) -> Vec<PermGroup> {
    let g = table.group();
    let mut out = vec![PermGroup::trivial(g.degree()), g.clone()];
    for c in table.classes().classes() {
        out.push(PermGroup::new(g.degree(), vec![c.representative.clone()]).unwrap());
    }
    out
}

/// Normal subgroups from the lattice equal the normal members of the full subgroup list.
pub fn lattice_matches_enumeration(g: &PermGroup) -> Result<(), String> {
    let lattice = normal_subgroups(g).map_err(|e| e.to_string())?;
    let from_lattice: BTreeSet<BTreeSet<Permutation>> =
        lattice.members().iter().map(|m| element_set(&m.group)).collect();
    let mut from_enumeration = BTreeSet::new();
    for s in enumerate_subgroups(g).map_err(|e| e.to_string())? {
        if is_normal(&s, g).map_err(|e| e.to_string())? {
            from_enumeration.insert(element_set(&s));
        }
    }
    if from_lattice != from_enumeration {
        return Err(format!(
            "lattice has {} members, enumeration finds {} normal subgroups",
            from_lattice.len(),
            from_enumeration.len()
        ));
    }
    Ok(())
}

/// Every witness the family search returns passes independent validation.
pub fn witnesses_revalidate(g: &PermGroup) -> Result<usize, String> {
    let mut count = 0;
    let params = family_parameters(g);
    for &p in &params {
        for &q in &params {
            if let Some(w) = in_family(g, p, q).map_err(|e| e.to_string())? {
                if !validate_witness(g, &w).map_err(|e| e.to_string())? {
                    return Err(format!("witness for G_{}^{} fails validation", p, q));
                }
                count += 1;
            }
        }
    }
    if let Some(w) = in_g_calligraphic(g).map_err(|e| e.to_string())? {
        if !validate_witness(g, &w).map_err(|e| e.to_string())? {
            return Err("family witness fails validation".into());
        }
    }
    Ok(count)
}

/// `ψ^G(g) = (1/|H|) Σ_{x in G} ψ°(x g x^-1)`, with `ψ°` zero off `H`.
pub fn induce_by_definition(table_h: &CharacterTable, psi: &[Cyclotomic], table_g: &CharacterTable) -> Vec<C64> {
    let g = table_g.group();
    let h = table_h.group();
    let h_elems = h.elements().unwrap();
    let h_classes = table_h.classes();
    let g_elems = g.elements().unwrap();
    table_g
        .classes()
        .classes()
        .iter()
        .map(|c| {
            let mut sum = C64::new(0.0, 0.0);
            for x in g_elems.iter() {
                let y = &(&x.inverse() * &c.representative) * x;
                if let Some(i) = h_elems.index_of(&y) {
                    sum += c64(&psi[h_classes.class_of_index(i)]);
                }
            }
            sum / h.order() as f64
        })
        .collect()
}

pub fn table(g: &PermGroup) -> CharacterTable {
    character_table(g).unwrap()
}
