//! The verification battery: every shipped expectation is recomputed from the
//! registry groups and recorded as a [`Check`].

use std::fmt::Display;
use std::thread;
use std::time::Instant;

use repcert_core::analysis::{check_s0_conditions, fitting_kernel_check, goursat, sov_split, Named};
use repcert_core::character::{character_table, CharacterTable};
use repcert_core::family::{dihedral_product_check, in_family, in_g_calligraphic, is_oliver, validate_witness};
use repcert_core::group::{coset_action, direct_product, PermGroup};
use repcert_core::induction::{fixed_dim, induce, outer_tensor, restrict};
use repcert_core::iso::is_isomorphic;
use repcert_core::perm::parse_cycles;
use repcert_core::real::{faithful_real_dims, frobenius_schur, real_modules, realify, RealModule};
use repcert_core::structure::{
    fitting_subgroup, intersection, is_nilpotent, is_normal, is_perfect, is_prime_power,
    is_solvable, join, minimal_normal_subgroups, normal_subgroups, p_core,
};
use serde_json::{json, Value};

use crate::expectations::{DimensionTable, Expectations, Structure};
use crate::registry::{Registry, RegistryError};
use crate::report::{Check, Report, Timing};

#[derive(Debug, thiserror::Error)]
pub enum ContextError {
    #[error(transparent)]
    Registry(#[from] RegistryError),
    #[error("expectations: {0}")]
    Expectations(#[from] toml::de::Error),
}

/// Registry plus expectations; sections share its caches.
pub struct Context {
    pub registry: Registry,
    pub expectations: Expectations,
}

impl Context {
    pub fn embedded() -> Result<Self, ContextError> {
        Ok(Context {
            registry: Registry::embedded()?,
            expectations: Expectations::embedded()?,
        })
    }

    pub fn with_expectations(text: &str) -> Result<Self, ContextError> {
        Ok(Context {
            registry: Registry::embedded()?,
            expectations: Expectations::parse(text)?,
        })
    }

    fn group(&self, name: &str) -> Result<&PermGroup, String> {
        self.registry.group(name).map_err(|e| e.to_string())
    }

    fn table(&self, name: &str) -> Result<&CharacterTable, String> {
        self.registry.table(name).map_err(|e| e.to_string())
    }

    fn modules(&self, name: &str) -> Result<Vec<RealModule>, String> {
        real_modules(self.table(name)?).map_err(|e| e.to_string())
    }

    fn module(&self, group: &str, module: &str) -> Result<RealModule, String> {
        self.modules(group)?
            .into_iter()
            .find(|m| m.name == module)
            .ok_or_else(|| format!("{} has no real module {}", group, module))
    }
}

trait Stringify<T> {
    fn s(self) -> Result<T, String>;
}

impl<T, E: Display> Stringify<T> for Result<T, E> {
    fn s(self) -> Result<T, String> {
        self.map_err(|e| e.to_string())
    }
}

/// Runs `f` and compares its value with `expected`.
fn check<T, F>(id: impl Into<String>, anchor: &str, expected: T, f: F) -> Check
where
    T: serde::Serialize,
    F: FnOnce() -> Result<T, String>,
{
    let id = id.into();
    match f() {
        Ok(v) => Check::compare(id, anchor, expected, v),
        Err(e) => Check::error(id, anchor, expected, &e),
    }
}

/// Like [`check`] for claims whose computed witness differs in shape from the
/// expectation; `f` returns the witness and whether the claim holds.
fn claim<F>(id: impl Into<String>, anchor: &str, expected: Value, f: F) -> Check
where
    F: FnOnce() -> Result<(Value, bool), String>,
{
    let id = id.into();
    match f() {
        Ok((computed, pass)) => Check {
            id,
            anchor: anchor.to_string(),
            expected,
            computed,
            pass,
        },
        Err(e) => Check::error(id, anchor, expected, &e),
    }
}

fn slug(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == ',' { '_' } else { c })
        .collect()
}

fn dimension_table(ctx: &Context, t: &DimensionTable) -> Vec<Check> {
    let mut out = Vec::new();
    for row in &t.rows {
        let module = ctx.module(&t.group, &row.module);
        for ((col, sub), &want) in t.columns.iter().zip(&t.subgroups).zip(&row.dims) {
            let id = format!("{}.{}{}.{}", t.id, t.prefix, row.module, col);
            let anchor = format!("{}, row {}_{}, column {}", t.anchor, t.prefix, row.module, col);
            out.push(check(id, &anchor, want, || {
                let m = module.as_ref().map_err(Clone::clone)?;
                let table = ctx.table(&t.group)?;
                fixed_dim(table, &m.real_character, ctx.group(sub)?).s()
            }));
        }
    }
    out
}

fn tables_for(ctx: &Context, ids: &[&str]) -> Vec<Check> {
    let mut out = Vec::new();
    for id in ids {
        match ctx.expectations.table(id) {
            Some(t) => out.extend(dimension_table(ctx, t)),
            None => out.push(Check::error(*id, id, "table present", "table missing from expectations")),
        }
    }
    out
}

fn no_faithful(ctx: &Context, groups: impl Fn(&str) -> bool) -> Vec<Check> {
    ctx.expectations
        .no_faithful
        .iter()
        .filter(|e| groups(&e.group))
        .map(|e| {
            let id = format!("faithful.none.{}.le{}", slug(&e.group), e.max_degree);
            check(id, &e.anchor, Vec::<String>::new(), || {
                let fs = faithful_real_dims(ctx.table(&e.group)?, e.max_degree).s()?;
                Ok(fs.into_iter().map(|m| m.name).collect())
            })
        })
        .collect()
}

fn real_module_counts(ctx: &Context, groups: impl Fn(&str) -> bool) -> Vec<Check> {
    ctx.expectations
        .real_module_count
        .iter()
        .filter(|e| groups(&e.group))
        .map(|e| {
            let id = format!("modules.{}.degree{}", slug(&e.group), e.degree);
            check(id, &e.anchor, e.count, || {
                Ok(ctx.modules(&e.group)?.iter().filter(|m| m.real_degree == e.degree).count())
            })
        })
        .collect()
}

pub fn verify_table_a5(ctx: &Context) -> Vec<Check> {
    tables_for(ctx, &["table2"])
}

pub fn verify_table_a6(ctx: &Context) -> Vec<Check> {
    let is_a6 = |g: &str| g == "A6";
    let mut out = tables_for(ctx, &["table3"]);
    out.extend(no_faithful(ctx, is_a6));
    out.extend(real_module_counts(ctx, is_a6));
    let e = &ctx.expectations.a6_subgroups;
    out.push(check("a6.normal", &e.anchor, true, || {
        is_normal(ctx.group(&e.normal)?, ctx.group(&e.overgroup)?).s()
    }));
    out
}

/// The `occurrence`-th complex row (1-based) of the given degree.
fn nth_row_of_degree(table: &CharacterTable, degree: u64, occurrence: usize) -> Result<usize, String> {
    table
        .degrees()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == degree)
        .map(|(i, _)| i)
        .nth(occurrence.wrapping_sub(1))
        .ok_or_else(|| format!("no row {} of degree {}", occurrence, degree))
}

pub fn verify_table_fs(ctx: &Context) -> Vec<Check> {
    let mut out = Vec::new();
    for (n, e) in ctx.expectations.indicator.iter().enumerate() {
        let row = || -> Result<(usize, &CharacterTable), String> {
            let t = ctx.table(&e.group)?;
            Ok((nth_row_of_degree(t, e.degree, e.occurrence)?, t))
        };
        out.push(check(format!("table1.row{}.indicator", n + 1), &format!("{}, indicator", e.anchor), e.fs, || {
            let (r, t) = row()?;
            frobenius_schur(t, r).s()
        }));
        out.push(check(
            format!("table1.row{}.real_degree", n + 1),
            &format!("{}, real degree", e.anchor),
            e.real_degree,
            || {
                let (r, t) = row()?;
                Ok(realify(t, r).s()?.real_degree)
            },
        ));
    }
    for e in &ctx.expectations.degree_count {
        let id = format!("degrees.{}.{}", slug(&e.group), e.degree);
        out.push(check(id, &e.anchor, e.count, || {
            Ok(ctx.table(&e.group)?.degrees().iter().filter(|&&d| d == e.degree).count())
        }));
    }
    out
}

/// `Cn`, `Dn` (order `n`), `Sn`, `An`, and `x`-separated direct products of these.
pub fn model_group(label: &str) -> Result<PermGroup, String> {
    let mut acc: Option<PermGroup> = None;
    for factor in label.split('x') {
        let (kind, n) = factor.split_at(1);
        let n: usize = n.parse().map_err(|_| format!("bad factor `{}`", factor))?;
        let g = match kind {
            "C" => PermGroup::cyclic(n),
            "D" if n % 2 == 0 => PermGroup::dihedral(n),
            "S" => PermGroup::symmetric(n),
            "A" => PermGroup::alternating(n),
            _ => return Err(format!("bad factor `{}`", factor)),
        };
        acc = Some(match acc {
            None => g,
            Some(a) => direct_product(&a, &g).group,
        });
    }
    acc.ok_or_else(|| "empty label".to_string())
}

/// `G` has a chain `G = N_0 ⊵ N_1 ⊵ ... ⊵ N_k` with `N_{i}/N_{i+1}` isomorphic
/// to `series[i]` and `N_k` isomorphic to the last entry.
pub fn series_holds(g: &PermGroup, series: &[PermGroup]) -> Result<bool, String> {
    match series {
        [] => Ok(g.is_trivial()),
        [last] => Ok(is_isomorphic(g, last).s()?.is_some()),
        [top, rest @ ..] => {
            let lattice = normal_subgroups(g).s()?;
            for m in lattice.members() {
                if m.order * top.order() != g.order() {
                    continue;
                }
                let quotient = coset_action(g, &m.group).s()?.image;
                if is_isomorphic(&quotient, top).s()?.is_none() {
                    continue;
                }
                if series_holds(&m.group, rest)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

/// Order and solvability implied by a series of labels.
fn label_profile(series: &[String]) -> Result<Value, String> {
    let models = series.iter().map(|s| model_group(s)).collect::<Result<Vec<_>, _>>()?;
    let order: u128 = models.iter().map(|m| m.order()).product();
    Ok(json!({
        "order": order,
        "solvable": models.iter().all(is_solvable),
        "p_group": is_prime_power(order),
    }))
}

fn structure_checks(ctx: &Context, e: &Structure) -> Vec<Check> {
    let name = slug(&e.group);
    let mut out = Vec::new();
    if e.simple {
        out.push(check(format!("structure.{}.simple", name), &e.anchor, 2usize, || {
            Ok(normal_subgroups(ctx.group(&e.group)?).s()?.len())
        }));
    }
    if !e.series.is_empty() {
        out.push(check(format!("structure.{}.series", name), &e.anchor, e.series.clone(), || {
            let models = e.series.iter().map(|s| model_group(s)).collect::<Result<Vec<_>, _>>()?;
            Ok(if series_holds(ctx.group(&e.group)?, &models)? {
                e.series.clone()
            } else {
                Vec::new()
            })
        }));
        out.push(check(
            format!("structure.{}.profile", name),
            &e.anchor,
            label_profile(&e.series).unwrap_or(Value::Null),
            || {
                let g = ctx.group(&e.group)?;
                Ok(json!({
                    "order": g.order(),
                    "solvable": is_solvable(g),
                    "p_group": is_prime_power(g.order()) && is_nilpotent(g),
                }))
            },
        ));
    }
    out
}

fn five_condition_checks(ctx: &Context) -> Vec<Check> {
    let e = &ctx.expectations.five_conditions;
    let mut out = Vec::new();
    for case in &e.cases {
        let base = format!("conditions.{}.V{}", case.group, case.module);
        let report = (|| {
            let table = ctx.table(&case.group)?;
            let module = ctx.module(&case.group, &case.module)?;
            let groups = case
                .subgroups
                .iter()
                .map(|s| ctx.group(s))
                .collect::<Result<Vec<_>, _>>()?;
            let named: [Named<'_>; 4] = std::array::from_fn(|i| Named {
                name: &case.subgroups[i],
                group: groups[i],
            });
            check_s0_conditions(&case.group, table, &module, named).s()
        })();
        for i in 0..5 {
            let id = format!("{}.{}", base, i + 1);
            let anchor = format!("{}, ({}) for V_{}({})", e.anchor, i + 1, case.module, case.group);
            out.push(match &report {
                Ok(r) => {
                    let holds = r.conditions[i];
                    // (1) and (5) are statements about dimensions; show them
                    let computed = match i {
                        0 => json!({ "holds": holds, "dim_Q": r.dims[0] }),
                        4 => json!({ "holds": holds, "dim_P2": r.dims[1], "dim_H": r.dims[2], "dim_K": r.dims[3] }),
                        _ => json!({ "holds": holds }),
                    };
                    Check {
                        id,
                        anchor,
                        expected: json!({ "holds": true }),
                        computed,
                        pass: holds,
                    }
                }
                Err(m) => Check::error(id, &anchor, json!({ "holds": true }), m),
            });
        }
        let anchor = format!("{}, witnesses for H and K", e.anchor);
        out.push(claim(format!("{}.witnesses", base), &anchor, json!("valid"), || {
            let r = report.as_ref().map_err(Clone::clone)?;
            let mut ok = true;
            for (w, s) in [(&r.h_witness, &case.subgroups[2]), (&r.k_witness, &case.subgroups[3])] {
                ok &= match w {
                    Some(w) => validate_witness(ctx.group(s)?, w).s()?,
                    None => false,
                };
            }
            Ok((json!(if ok { "valid" } else { "invalid" }), ok))
        }));
    }
    out
}

fn g1_generator_checks(ctx: &Context) -> Vec<Check> {
    let e = &ctx.expectations.g1_generators;
    vec![
        check("g1.listed_contains_subgroups", &e.anchor, e.contains_subgroups, || {
            let listed = ctx.group(&e.listed)?;
            for s in &e.subgroups {
                if !ctx.group(s)?.generators().iter().all(|x| listed.has(x)) {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        check("g1.listed_isomorphic", &e.anchor, e.isomorphic, || {
            Ok(is_isomorphic(ctx.group(&e.listed)?, ctx.group(&e.generated)?).s()?.is_some())
        }),
        check("g1.listed_conjugate", &format!("{}, conjugate by {}", e.anchor, e.conjugator), true, || {
            let listed = ctx.group(&e.listed)?;
            let sigma = parse_cycles(&e.conjugator, listed.degree()).s()?;
            Ok(listed.conjugate(&sigma).same_elements(ctx.group(&e.generated)?))
        }),
    ]
}

pub fn verify_table_g123_and_conditions(ctx: &Context) -> Vec<Check> {
    let mut out = tables_for(ctx, &["table4.G1", "table4.G2", "table4.G3"]);
    out.extend(g1_generator_checks(ctx));
    out.extend(five_condition_checks(ctx));
    for s in &ctx.expectations.structure {
        out.extend(structure_checks(ctx, s));
    }
    let g123 = |g: &str| matches!(g, "G1" | "G2" | "G3");
    out.extend(no_faithful(ctx, g123));
    out.extend(real_module_counts(ctx, g123));
    out
}

pub fn verify_orders(ctx: &Context) -> Vec<Check> {
    let mut out = Vec::new();
    for e in &ctx.expectations.order {
        let id = format!("order.{}", slug(&e.group));
        out.push(check(id, &e.anchor, e.order, || Ok(ctx.group(&e.group)?.order())));
    }
    for entry in ctx.registry.entries() {
        let id = format!("registry.{}", slug(&entry.name));
        let anchor = match &entry.parent {
            Some(p) => format!("registry: {} <= {}, order {}", entry.name, p, entry.order),
            None => format!("registry: {}, order {}", entry.name, entry.order),
        };
        out.push(check(id, &anchor, true, || ctx.registry.consistent(&entry.name).s()));
    }
    out
}

fn s5_checks(ctx: &Context) -> Vec<Check> {
    let e = &ctx.expectations.s5;
    let mut out = Vec::new();
    out.push(check(
        "s5.induced",
        &format!("{}, induced from U_{}", e.anchor, e.induced_from),
        json!({ "irreducible": true, "degree": e.degree }),
        || {
            let t_h = ctx.table(&e.subgroup)?;
            let t_g = ctx.table(&e.group)?;
            let u = ctx.module(&e.subgroup, &e.induced_from)?;
            let chi = t_h.row(u.row()).s()?;
            let ind = induce(t_h, chi, t_g).s()?;
            let row = t_g.find_row(&ind);
            Ok(json!({
                "irreducible": row.is_some(),
                "degree": ind[0].to_integer(),
            }))
        },
    ));
    out.push(check(
        "s5.restriction",
        &format!("{}, restriction to {}", e.anchor, e.subgroup),
        e.restriction.clone(),
        || {
            let t_h = ctx.table(&e.subgroup)?;
            let t_g = ctx.table(&e.group)?;
            let v = ctx
                .modules(&e.group)?
                .into_iter()
                .find(|m| m.real_degree == e.degree)
                .ok_or("no module of that degree")?;
            let mult = restrict(t_g, &v.real_character, t_h).s()?;
            let names = ctx.modules(&e.subgroup)?;
            let mut out = Vec::new();
            for (row, &k) in mult.iter().enumerate() {
                let name = names.iter().find(|m| m.row() == row).map(|m| m.name.clone());
                for _ in 0..k {
                    out.push(name.clone().unwrap_or_else(|| format!("row {}", row)));
                }
            }
            Ok(out)
        },
    ));
    let v6 = || -> Result<(RealModule, &CharacterTable), String> {
        let v = ctx
            .modules(&e.group)?
            .into_iter()
            .find(|m| m.real_degree == e.degree)
            .ok_or("no module of that degree")?;
        Ok((v, ctx.table(&e.group)?))
    };
    out.push(check(
        "s5.fixed_dim",
        &format!("{}, dim V_6 fixed by {}", e.anchor, e.c2),
        e.fixed_dim_c2,
        || {
            let (v, t) = v6()?;
            fixed_dim(t, &v.real_character, ctx.group(&e.c2)?).s()
        },
    ));
    out.push(check(
        "s5.fixed_dim.all_transpositions",
        &format!("{}, any order-2 subgroup outside A5 generated by a transposition", e.anchor),
        vec![e.fixed_dim_c2; 10],
        || {
            let (v, t) = v6()?;
            let mut dims = Vec::new();
            for i in 1..=5 {
                for j in i + 1..=5 {
                    let x = parse_cycles(&format!("({},{})", i, j), 5).s()?;
                    let c = PermGroup::new(5, vec![x]).s()?;
                    dims.push(fixed_dim(t, &v.real_character, &c).s()?);
                }
            }
            Ok(dims)
        },
    ));
    out
}

fn a5xa5_checks(ctx: &Context) -> Vec<Check> {
    let e = &ctx.expectations.a5xa5;
    let mut out = Vec::new();
    let setup = || -> Result<_, String> {
        let a = ctx.group(&e.factor)?;
        let product = direct_product(a, a);
        let registered = ctx.group(&e.group)?;
        if !product.group.same_elements(registered) {
            return Err("registered product differs from the constructed one".into());
        }
        Ok((product, ctx.table(&e.factor)?, ctx.table(&e.group)?))
    };
    let setup = setup();
    let threes: Vec<String> = ctx
        .modules(&e.factor)
        .map(|ms| ms.into_iter().filter(|m| m.real_degree == 3).map(|m| m.name).collect())
        .unwrap_or_default();
    for u in &threes {
        for v in &threes {
            let id = format!("a5xa5.U{}_V{}", u, v);
            let anchor = format!("{}, U = U_{}, V = U_{}", e.anchor, u, v);
            let mut expected = e.dims.to_vec();
            expected.extend(e.whole_factor_dims);
            out.push(check(id, &anchor, expected, || {
                let (product, ta, tp) = setup.as_ref().map_err(Clone::clone)?;
                let one = ta.trivial_character();
                let uu = ctx.module(&e.factor, u)?;
                let vv = ctx.module(&e.factor, v)?;
                let left = outer_tensor(product, tp, ta, &uu.real_character, ta, &one).s()?;
                let right = outer_tensor(product, tp, ta, &one, ta, &vv.real_character).s()?;
                let chi = repcert_core::character::add_functions(&left, &right);
                let h1 = ctx.group(&e.h1)?;
                let a = ctx.group(&e.factor)?;
                let e1 = PermGroup::trivial(a.degree());
                let at = |x: &PermGroup, y: &PermGroup| fixed_dim(tp, &chi, &product.product_subgroup(x, y)).s();
                Ok(vec![at(h1, &e1)?, at(&e1, h1)?, at(h1, h1)?, at(a, &e1)?, at(&e1, a)?])
            }));
        }
    }
    out.push(check(
        "a5xa5.minimal_normal",
        &format!("{}, minimal normal subgroups", e.anchor),
        vec!["left factor", "right factor"],
        || {
            let (product, _, _) = setup.as_ref().map_err(Clone::clone)?;
            let mins = minimal_normal_subgroups(&product.group).s()?;
            let (l, r) = (product.left_factor(), product.right_factor());
            let mut names: Vec<&str> = mins
                .iter()
                .map(|m| {
                    if m.same_elements(&l) {
                        "left factor"
                    } else if m.same_elements(&r) {
                        "right factor"
                    } else {
                        "other"
                    }
                })
                .collect();
            names.sort_unstable();
            Ok(names)
        },
    ));
    out
}

fn a5xc2_checks(ctx: &Context) -> Vec<Check> {
    let e = &ctx.expectations.a5xc2;
    let mut out = Vec::new();
    let threes: Vec<String> = ctx
        .modules(&e.factor)
        .map(|ms| ms.into_iter().filter(|m| m.real_degree == 3).map(|m| m.name).collect())
        .unwrap_or_default();
    for u in &threes {
        for v in &threes {
            let id = format!("a5xc2.U{}_U{}", u, v);
            let anchor = format!("{}, U_{} with trivial Z-action plus U_{} with the sign", e.anchor, u, v);
            out.push(check(id, &anchor, e.fixed_dim_z, || {
                let a = ctx.group(&e.factor)?;
                let z = PermGroup::cyclic(2);
                let product = direct_product(a, &z);
                if !product.group.same_elements(ctx.group(&e.group)?) {
                    return Err("registered product differs from the constructed one".into());
                }
                let ta = ctx.table(&e.factor)?;
                let tz = character_table(&z).s()?;
                let tp = ctx.table(&e.group)?;
                let trivial = tz.trivial_character();
                let sign = tz
                    .rows()
                    .iter()
                    .find(|r| *r != &trivial)
                    .ok_or("Z has one character")?
                    .clone();
                let uu = ctx.module(&e.factor, u)?;
                let vv = ctx.module(&e.factor, v)?;
                let chi = repcert_core::character::add_functions(
                    &outer_tensor(&product, tp, ta, &uu.real_character, &tz, &trivial).s()?,
                    &outer_tensor(&product, tp, ta, &vv.real_character, &tz, &sign).s()?,
                );
                let zz = product.product_subgroup(&PermGroup::trivial(a.degree()), &z);
                fixed_dim(tp, &chi, &zz).s()
            }));
        }
    }
    out
}

fn a5_subgroup_checks(ctx: &Context) -> Vec<Check> {
    let e = &ctx.expectations.a5_subgroups;
    let mut out = vec![
        check("a5.c2_is_d4_meet_d6", &e.anchor, true, || {
            Ok(intersection(ctx.group(&e.d4)?, ctx.group(&e.d6)?).s()?.same_elements(ctx.group(&e.c2)?))
        }),
        check("a5.d4_join_d6", &e.anchor, 60u128, || {
            Ok(join(ctx.group(&e.d4)?, ctx.group(&e.d6)?).s()?.order())
        }),
        check("a5.d4_normal_in_a4", &e.anchor, true, || {
            is_normal(ctx.group(&e.d4)?, ctx.group(&e.a4)?).s()
        }),
    ];
    // fixed dimensions do not depend on the representative of a conjugacy class
    for sub in [&e.c2, &e.d4, &e.d6] {
        let id = format!("a5.conjugation_invariance.{}", slug(sub));
        let anchor = format!("{}, choice of {} up to conjugacy", e.anchor, sub);
        let dims = |h: &PermGroup| -> Result<Vec<u64>, String> {
            let t = ctx.table(&e.group)?;
            ctx.modules(&e.group)?
                .iter()
                .map(|m| fixed_dim(t, &m.real_character, h).s())
                .collect()
        };
        let base = ctx.group(sub).and_then(dims);
        out.push(check(id, &anchor, base.clone().unwrap_or_default(), || {
            let base = base?;
            for x in ctx.group(&e.group)?.elements().s()?.iter() {
                let d = dims(&ctx.group(sub)?.conjugate(x))?;
                if d != base {
                    return Ok(d);
                }
            }
            Ok(base)
        }));
    }
    out
}

pub fn verify_products_and_misc(ctx: &Context) -> Vec<Check> {
    let mut out = s5_checks(ctx);
    out.extend(a5xa5_checks(ctx));
    out.extend(a5xc2_checks(ctx));
    out.extend(a5_subgroup_checks(ctx));
    let other = |g: &str| !matches!(g, "A6" | "G1" | "G2" | "G3");
    out.extend(no_faithful(ctx, other));
    out.extend(real_module_counts(ctx, other));
    for e in &ctx.expectations.faithful_six {
        for g in &e.groups {
            let id = format!("faithful.some.{}.le{}", slug(g), e.max_degree);
            out.push(claim(id, &e.anchor, json!("nonempty"), || {
                let names: Vec<String> = faithful_real_dims(ctx.table(g)?, e.max_degree)
                    .s()?
                    .into_iter()
                    .map(|m| m.name)
                    .collect();
                let ok = !names.is_empty();
                Ok((json!(names), ok))
            }));
            // a perfect group has no nontrivial sign, so every real module is orientation-preserving
            let id = format!("faithful.orientation.{}", slug(g));
            out.push(check(id, &format!("{}, orientation", e.anchor), true, || {
                Ok(is_perfect(ctx.group(g)?))
            }));
        }
    }
    let e = &ctx.expectations.oliver;
    for g in &e.groups {
        out.push(check(format!("oliver.{}", slug(g)), &e.anchor, true, || {
            is_oliver(ctx.group(g)?).s()
        }));
    }
    out
}

fn faithful_row(table: &CharacterTable, degree: u64) -> Result<Vec<repcert_core::cyclotomic::Cyclotomic>, String> {
    real_modules(table)
        .s()?
        .into_iter()
        .find(|m| m.real_degree == degree && repcert_core::real::is_faithful(&m.real_character))
        .map(|m| m.real_character)
        .ok_or_else(|| format!("no faithful real module of degree {}", degree))
}

/// Small worked examples for splitting, family membership and products.
pub fn verify_desk_checks(ctx: &Context) -> Vec<Check> {
    let anchor_sov = ctx.expectations.desk.sov_anchor.as_str();
    let mut out = Vec::new();
    let exemplars: [(&str, PermGroup, u64); 2] = [("S4", PermGroup::symmetric(4), 3), ("C6", PermGroup::cyclic(6), 2)];
    for (name, g, degree) in exemplars {
        out.push(check(
            format!("desk.sov.{}", name),
            anchor_sov,
            json!({ "claims": [true, true, true, true, true, true], "fitting_kernel_trivial": true }),
            || {
                let t = character_table(&g).s()?;
                let chi = faithful_row(&t, degree)?;
                let l = fitting_subgroup(&g).s()?;
                let split = sov_split(&t, &chi, &l).s()?;
                Ok(json!({
                    "claims": split.claims,
                    "fitting_kernel_trivial": fitting_kernel_check(&t, &split).s()?,
                }))
            },
        ));
    }
    let desk = &ctx.expectations.desk;
    for factors in &desk.dihedral_products {
        let id = format!(
            "desk.dihedral.{}",
            factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("_")
        );
        let anchor = format!("{}, D_2l x D_2m x D_2n with (l, m, n) = {:?}", desk.anchor, factors);
        out.push(claim(id, &anchor, json!({ "failures": 0 }), || {
            let r = dihedral_product_check(factors).s()?;
            Ok((
                json!({
                    "failures": r.failures.len(),
                    "order": r.order,
                    "subgroups": r.subgroups,
                    "cyclic_fitting": r.cyclic_fitting,
                }),
                r.passed(),
            ))
        }));
    }

    let anchor_family = ctx.expectations.desk.family_anchor.as_str();
    let v4_a4 = || -> Result<Value, String> {
        let g = PermGroup::symmetric(4);
        let w = in_g_calligraphic(&g).s()?.ok_or("S4 not in any family")?;
        let v4 = p_core(&g, 2).s()?;
        Ok(json!({
            "p": w.p,
            "q": w.q,
            "P_is_V4": w.p_group.same_elements(&v4),
            "H_order": w.h.order(),
            "valid": validate_witness(&g, &w).s()?,
        }))
    };
    out.push(check(
        "desk.family.S4",
        anchor_family,
        json!({ "p": 2, "q": 2, "P_is_V4": true, "H_order": 12, "valid": true }),
        v4_a4,
    ));
    out.push(check(
        "desk.family.C6_1_1",
        anchor_family,
        json!({ "P_order": 1, "H_order": 6, "valid": true }),
        || {
            let g = PermGroup::cyclic(6);
            let w = in_family(&g, 1, 1).s()?.ok_or("C6 not in G_1^1")?;
            Ok(json!({
                "P_order": w.p_group.order(),
                "H_order": w.h.order(),
                "valid": validate_witness(&g, &w).s()?,
            }))
        },
    ));
    out.push(check("desk.family.trivial", anchor_family, false, || {
        is_oliver(&PermGroup::trivial(1)).s()
    }));
    out.push(check("desk.family.A5", anchor_family, true, || {
        is_oliver(&PermGroup::alternating(5)).s()
    }));
    out.push(claim("desk.family.solvable_small", anchor_family, json!([]), || {
        // small solvable groups, each expected to lie in some G_p^q
        let groups = [
            PermGroup::symmetric(3),
            PermGroup::symmetric(4),
            PermGroup::alternating(4),
            PermGroup::dihedral(8),
            PermGroup::dihedral(12),
            direct_product(&PermGroup::cyclic(3), &PermGroup::symmetric(3)).group,
        ];
        let mut bad = Vec::new();
        for (i, g) in groups.iter().enumerate() {
            match in_g_calligraphic(g).s()? {
                Some(w) if validate_witness(g, &w).s()? => {}
                _ => bad.push(i),
            }
        }
        let ok = bad.is_empty();
        Ok((json!(bad), ok))
    }));

    let anchor_goursat = ctx.expectations.desk.goursat_anchor.as_str();
    out.push(check(
        "desk.goursat.full",
        anchor_goursat,
        json!({ "h1": 60, "k1": 60, "identity": true, "bijection": true, "isomorphic": true }),
        || {
            let a = PermGroup::alternating(5);
            let p = direct_product(&a, &a);
            let r = goursat(&p, &p.group).s()?;
            Ok(goursat_summary(&r))
        },
    ));
    out.push(check(
        "desk.goursat.diagonal",
        anchor_goursat,
        json!({ "h1": 1, "k1": 1, "identity": true, "bijection": true, "isomorphic": true }),
        || {
            let a = PermGroup::alternating(5);
            let p = direct_product(&a, &a);
            let diag = PermGroup::new(10, a.generators().iter().map(|x| p.pair(x, x)).collect()).s()?;
            Ok(goursat_summary(&goursat(&p, &diag).s()?))
        },
    ));
    out.push(check(
        "desk.goursat.c4xc4_index2",
        anchor_goursat,
        json!({ "h1": 2, "k1": 2, "identity": true, "bijection": true, "isomorphic": true }),
        || {
            let c = PermGroup::cyclic(4);
            let p = direct_product(&c, &c);
            let a = &c.generators()[0];
            let id = c.identity();
            let sq = a.pow(2);
            let g = PermGroup::new(8, vec![p.pair(a, a), p.pair(&sq, &id), p.pair(&id, &sq)]).s()?;
            Ok(goursat_summary(&goursat(&p, &g).s()?))
        },
    ));
    out.push(check("desk.fitting.S4", "Fitting subgroup as product of p-cores", json!([4, 4, 1]), || {
        let g = PermGroup::symmetric(4);
        Ok(json!([
            fitting_subgroup(&g).s()?.order(),
            p_core(&g, 2).s()?.order(),
            p_core(&g, 3).s()?.order(),
        ]))
    }));
    out
}

fn goursat_summary(r: &repcert_core::analysis::Goursat) -> Value {
    json!({
        "h1": r.h1.order(),
        "k1": r.k1.order(),
        "identity": r.order_identity,
        "bijection": r.graph_is_bijection,
        "isomorphic": r.quotients_isomorphic,
    })
}

pub type Section = fn(&Context) -> Vec<Check>;

pub const SECTIONS: &[(&str, Section)] = &[
    ("table_a5", verify_table_a5),
    ("table_a6", verify_table_a6),
    ("table_fs", verify_table_fs),
    ("table_g123_and_conditions", verify_table_g123_and_conditions),
    ("orders", verify_orders),
    ("products_and_misc", verify_products_and_misc),
    ("desk_checks", verify_desk_checks),
];

/// Runs every section on its own thread and merges the results by check id.
pub fn verify_all(ctx: &Context) -> Report {
    let results: Vec<(Vec<Check>, Timing)> = thread::scope(|scope| {
        let handles: Vec<_> = SECTIONS
            .iter()
            .map(|&(name, section)| {
                let handle = scope.spawn(move || {
                    let start = Instant::now();
                    let checks = section(ctx);
                    (checks, start.elapsed().as_secs_f64())
                });
                (name, handle)
            })
            .collect();
        handles
            .into_iter()
            .map(|(name, handle)| {
                let (checks, seconds) = handle.join().unwrap_or_else(|_| {
                    let id = format!("section.{}", name);
                    (vec![Check::error(id, name, "completed", "section panicked")], 0.0)
                });
                (
                    checks,
                    Timing {
                        section: name.to_string(),
                        seconds,
                    },
                )
            })
            .collect()
    });
    let mut checks = Vec::new();
    let mut timings = Vec::new();
    for (c, t) in results {
        checks.extend(c);
        timings.push(t);
    }
    Report::assemble(checks, timings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_labels() {
        assert_eq!(model_group("D4").unwrap().order(), 4);
        assert_eq!(model_group("D4xC3").unwrap().order(), 12);
        assert_eq!(model_group("C2xC2xC2xC2").unwrap().order(), 16);
        assert!(model_group("Q8").is_err());
        assert!(model_group("D5").is_err());
    }

    #[test]
    fn s4_series() {
        let s4 = PermGroup::symmetric(4);
        let series = ["C2", "C3", "C2xC2"].map(|s| model_group(s).unwrap());
        assert!(series_holds(&s4, &series).unwrap());
        let wrong = ["C3", "C2xC2xC2"].map(|s| model_group(s).unwrap());
        assert!(!series_holds(&s4, &wrong).unwrap());
    }

    #[test]
    fn a5_section_passes() {
        let ctx = Context::embedded().unwrap();
        let checks = verify_table_a5(&ctx);
        assert_eq!(checks.len(), 32);
        let bad: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        assert!(bad.is_empty(), "{:?}", bad);
    }
}
