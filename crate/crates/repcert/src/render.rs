//! Text renderings of reports and character tables.

use std::fmt::Write;

use repcert_core::character::CharacterTable;
use repcert_core::cyclotomic::Cyclotomic;
use serde_json::{json, Value};

use crate::expectations::Expectations;
use crate::report::Report;

/// Dihedral groups are named by their order throughout: `D4` is the Klein
/// four-group, `D8` the symmetries of a square.
pub const DIHEDRAL_NOTE: &str = "Dn denotes the dihedral group of order n (D4 = C2 x C2).";

fn cell(v: Option<&Value>) -> String {
    match v {
        None => "?".into(),
        Some(Value::String(s)) => s.clone(),
        Some(v) => v.to_string(),
    }
}

/// `expected` when computed agrees, else `expected / computed !`.
fn pair(report: &Report, id: &str) -> String {
    match report.get(id) {
        None => "missing".into(),
        Some(c) if c.pass => cell(Some(&c.expected)),
        Some(c) => format!("{} / {} !", cell(Some(&c.expected)), cell(Some(&c.computed))),
    }
}

pub fn markdown(report: &Report, expectations: &Expectations) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# Certificate report\n");
    let _ = writeln!(
        s,
        "{} of {} checks pass; overall **{}**.\n",
        report.summary.passed,
        report.summary.total,
        if report.pass() { "PASS" } else { "FAIL" }
    );
    let _ = writeln!(s, "Cells show the expected value; a mismatch is shown as `expected / computed !`. {}\n", DIHEDRAL_NOTE);

    let _ = writeln!(s, "## Indicators and real degrees\n");
    let _ = writeln!(s, "| row | group | complex degree | indicator | real degree |");
    let _ = writeln!(s, "|---|---|---|---|---|");
    for (n, e) in expectations.indicator.iter().enumerate() {
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} |",
            n + 1,
            e.group,
            e.degree,
            pair(report, &format!("table1.row{}.indicator", n + 1)),
            pair(report, &format!("table1.row{}.real_degree", n + 1)),
        );
    }
    s.push('\n');

    for t in &expectations.dimension_table {
        let _ = writeln!(s, "## {} ({})\n", t.anchor, t.group);
        let _ = writeln!(s, "| | {} |", t.columns.join(" | "));
        let _ = writeln!(s, "|---|{}", "---|".repeat(t.columns.len()));
        for row in &t.rows {
            let cells: Vec<String> = t
                .columns
                .iter()
                .map(|c| pair(report, &format!("{}.{}{}.{}", t.id, t.prefix, row.module, c)))
                .collect();
            let _ = writeln!(s, "| {}_{} | {} |", t.prefix, row.module, cells.join(" | "));
        }
        s.push('\n');
    }

    let _ = writeln!(s, "## All checks\n");
    let _ = writeln!(s, "| id | anchor | expected | computed | pass |");
    let _ = writeln!(s, "|---|---|---|---|---|");
    for c in &report.checks {
        let _ = writeln!(
            s,
            "| `{}` | {} | `{}` | `{}` | {} |",
            c.id,
            c.anchor.replace('|', "\\|"),
            cell(Some(&c.expected)).replace('|', "\\|"),
            cell(Some(&c.computed)).replace('|', "\\|"),
            if c.pass { "yes" } else { "**no**" }
        );
    }
    s
}

pub fn plain(report: &Report) -> String {
    let mut s = String::new();
    for c in &report.checks {
        let _ = writeln!(s, "{} {}  [{}]", if c.pass { "PASS" } else { "FAIL" }, c.id, c.anchor);
        if !c.pass {
            let _ = writeln!(s, "     expected {}", cell(Some(&c.expected)));
            let _ = writeln!(s, "     computed {}", cell(Some(&c.computed)));
        }
    }
    let _ = writeln!(
        s,
        "{} passed, {} failed, {} total",
        report.summary.passed, report.summary.failed, report.summary.total
    );
    s
}

/// `x` to six significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    let text = format!("{:.*}", decimals, x);
    let text = if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        text
    };
    if text == "-0" {
        "0".into()
    } else {
        text
    }
}

pub fn approx(v: &Cyclotomic) -> String {
    let (re, im) = v.to_complex();
    let im = if im.abs() < 1e-12 { 0.0 } else { im };
    if im == 0.0 {
        sig6(re)
    } else {
        let sign = if im < 0.0 { '-' } else { '+' };
        format!("{} {} {}i", sig6(re), sign, sig6(im.abs()))
    }
}

fn value_text(table: &CharacterTable, v: &Cyclotomic) -> String {
    v.lift(table.exponent()).render()
}

pub fn char_table_plain(name: &str, table: &CharacterTable) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# {}: order {}, {} classes", name, table.order(), table.num_classes());
    let _ = writeln!(s, "z = zeta_{}", table.exponent());
    let _ = writeln!(s);
    let _ = writeln!(s, "class  size  order  representative");
    for (i, c) in table.classes().classes().iter().enumerate() {
        let _ = writeln!(
            s,
            "{:<6} {:<5} {:<6} {}",
            format!("c{}", i + 1),
            c.size,
            c.element_order,
            c.representative.to_cycle_string()
        );
    }
    for (r, row) in table.rows().iter().enumerate() {
        let _ = writeln!(s);
        let _ = writeln!(s, "chi_{} (degree {})", r + 1, table.degree(r));
        for (k, v) in row.iter().enumerate() {
            let text = value_text(table, v);
            if v.to_rational().is_some() {
                let _ = writeln!(s, "  c{}: {}", k + 1, text);
            } else {
                let _ = writeln!(s, "  c{}: {}  # {}", k + 1, text, approx(v));
            }
        }
    }
    s
}

pub fn char_table_json(name: &str, table: &CharacterTable) -> Value {
    let classes: Vec<Value> = table
        .classes()
        .classes()
        .iter()
        .map(|c| {
            json!({
                "size": c.size,
                "order": c.element_order,
                "representative": c.representative.to_cycle_string(),
            })
        })
        .collect();
    let rows: Vec<Value> = table
        .rows()
        .iter()
        .map(|row| Value::from(row.iter().map(|v| value_text(table, v)).collect::<Vec<_>>()))
        .collect();
    json!({
        "group": name,
        "order": table.order(),
        "zeta": table.exponent(),
        "classes": classes,
        "rows": rows,
    })
}
