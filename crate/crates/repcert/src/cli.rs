//! Command-line interface. Exit codes: 0 success, 1 verification mismatch,
//! 2 input or I/O error.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use repcert_core::analysis::goursat;
use repcert_core::character::character_table;
use repcert_core::family::{family_parameters, in_family, in_g_calligraphic, FamilyWitness};
use repcert_core::group::{direct_product, PermGroup};
use repcert_core::groupfile::parse_group_file;
use repcert_core::induction::fixed_dim;
use repcert_core::real::real_modules;
use repcert_core::structure::{fitting_subgroup, is_prime, is_subgroup, p_core, prime_divisors};
use serde_json::{json, Value};

use crate::certificate::{verify_all, Context};
use crate::registry::Registry;
use crate::render;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
    Plain,
}

#[derive(Debug, Parser)]
#[command(
    name = "repcert",
    version,
    about = "Character tables, fixed-point dimensions and family membership for permutation groups",
    after_help = "Group arguments are group files, or @NAME for a registry group (e.g. @A5, @G1, @Q(G3)).\nDn denotes the dihedral group of order n (D4 = C2 x C2)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value = "plain", global = true)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(short, long, global = true)]
    pub verbose: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute every shipped expectation and report the outcome.
    VerifyPaper {
        /// Expectations file to use instead of the embedded one.
        #[arg(long)]
        expectations: Option<PathBuf>,
    },
    /// Conjugacy classes and the exact character table.
    CharTable { group: String },
    /// Dimension of the subspace fixed by a subgroup in a real irreducible module.
    Fixdim {
        group: String,
        subgroup: String,
        /// Real degree with an optional index and letter prefix: `U5`, `V6`, `6.3`.
        module: String,
    },
    /// A witness `P ⊴ H ⊴ G` for membership in some G_p^q, or OLIVER.
    Oliver {
        group: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
    },
    /// p-cores, the Fitting subgroup and membership in each G_p^q.
    Family { group: String },
    /// Goursat data of a subgroup of LEFT x RIGHT.
    Goursat { left: String, right: String, subgroup: String },
}

#[derive(Debug)]
pub enum Failure {
    /// Bad input or I/O; exit 2.
    Input(String),
    /// A verification mismatch; exit 1.
    Mismatch,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Output {
    plain: String,
    json: Value,
}

fn load_group(arg: &str) -> Result<(String, PermGroup), Failure> {
    if let Some(name) = arg.strip_prefix('@') {
        let registry = Registry::embedded()?;
        let g = registry.group(name)?.clone();
        return Ok((registry.entry(name)?.name.clone(), g));
    }
    let text = fs::read_to_string(arg).map_err(|e| Failure::Input(format!("{}: {}", arg, e)))?;
    let spec = parse_group_file(&text).map_err(|e| Failure::Input(format!("{}: {}", arg, e)))?;
    let group = spec.group().map_err(|e| Failure::Input(format!("{}: {}", arg, e)))?;
    let name = spec.name.clone().unwrap_or_else(|| {
        Path::new(arg)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| arg.to_string())
    });
    Ok((name, group))
}

fn generators_text(g: &PermGroup) -> Vec<String> {
    g.generators().iter().map(|x| x.to_cycle_string()).collect()
}

fn witness_json(w: &FamilyWitness) -> Value {
    json!({
        "p": w.p,
        "q": w.q,
        "P": { "order": w.p_group.order(), "generators": generators_text(&w.p_group) },
        "H": { "order": w.h.order(), "generators": generators_text(&w.h) },
    })
}

fn witness_plain(w: &FamilyWitness) -> String {
    let list = |g: &PermGroup| {
        let gens = generators_text(g);
        if gens.is_empty() {
            "()".to_string()
        } else {
            gens.join(", ")
        }
    };
    format!(
        "witness in G_{}^{}\nP: order {}, generated by {}\nH: order {}, generated by {}\n",
        w.p,
        w.q,
        w.p_group.order(),
        list(&w.p_group),
        w.h.order(),
        list(&w.h)
    )
}

fn parameter(v: u64) -> Result<u64, Failure> {
    if v == 1 || is_prime(v) {
        Ok(v)
    } else {
        Err(Failure::Input(format!("{} is neither 1 nor a prime", v)))
    }
}

fn cmd_char_table(group: &str) -> Result<Output, Failure> {
    let (name, g) = load_group(group)?;
    let t = character_table(&g)?;
    Ok(Output {
        plain: render::char_table_plain(&name, &t),
        json: render::char_table_json(&name, &t),
    })
}

fn cmd_fixdim(group: &str, subgroup: &str, selector: &str) -> Result<Output, Failure> {
    let (gname, g) = load_group(group)?;
    let (hname, h) = load_group(subgroup)?;
    if h.degree() != g.degree() || !is_subgroup(&h, &g)? {
        return Err(Failure::Input(format!("{} is not a subgroup of {}", hname, gname)));
    }
    let t = character_table(&g)?;
    let modules = real_modules(&t)?;
    let wanted = selector.trim_start_matches(|c: char| c.is_ascii_alphabetic());
    let module = match modules.iter().find(|m| m.name == wanted) {
        Some(m) => m,
        None => {
            let names: Vec<&str> = modules.iter().map(|m| m.name.as_str()).collect();
            return Err(Failure::Input(format!(
                "no real module `{}` of {}; available: {}",
                selector,
                gname,
                names.join(", ")
            )));
        }
    };
    let d = fixed_dim(&t, &module.real_character, &h)?;
    Ok(Output {
        plain: format!("{}\n", d),
        json: json!({ "group": gname, "subgroup": hname, "module": module.name, "fixed_dim": d }),
    })
}

fn cmd_oliver(group: &str, p: Option<u64>, q: Option<u64>) -> Result<Output, Failure> {
    let (name, g) = load_group(group)?;
    let (plain, json) = match (p, q) {
        (None, None) => match in_g_calligraphic(&g)? {
            Some(w) => (witness_plain(&w), json!({ "group": name, "oliver": false, "witness": witness_json(&w) })),
            None => ("OLIVER\n".to_string(), json!({ "group": name, "oliver": true })),
        },
        (Some(p), Some(q)) => {
            let (p, q) = (parameter(p)?, parameter(q)?);
            match in_family(&g, p, q)? {
                Some(w) => (witness_plain(&w), json!({ "group": name, "member": true, "witness": witness_json(&w) })),
                None => (
                    format!("not in G_{}^{}\n", p, q),
                    json!({ "group": name, "p": p, "q": q, "member": false }),
                ),
            }
        }
        _ => return Err(Failure::Input("give both --p and --q, or neither".into())),
    };
    Ok(Output { plain, json })
}

fn cmd_family(group: &str) -> Result<Output, Failure> {
    let (name, g) = load_group(group)?;
    let mut plain = format!("{}: order {}\n", name, g.order());
    let mut cores = Vec::new();
    for p in prime_divisors(g.order()) {
        let c = p_core(&g, p)?;
        plain += &format!("O_{}: order {}\n", p, c.order());
        cores.push(json!({ "p": p, "order": c.order() }));
    }
    let fitting = fitting_subgroup(&g)?;
    plain += &format!("Fitting subgroup: order {}\n", fitting.order());
    let params = family_parameters(&g);
    let mut members = Vec::new();
    for &p in &params {
        for &q in &params {
            let w = in_family(&g, p, q)?;
            plain += &format!("G_{}^{}: {}\n", p, q, if w.is_some() { "yes" } else { "no" });
            members.push(json!({ "p": p, "q": q, "member": w.is_some() }));
        }
    }
    let oliver = members.iter().all(|m| m["member"] == json!(false));
    plain += &format!("Oliver: {}\n", if oliver { "yes" } else { "no" });
    Ok(Output {
        plain,
        json: json!({
            "group": name,
            "order": g.order(),
            "p_cores": cores,
            "fitting_order": fitting.order(),
            "families": members,
            "oliver": oliver,
        }),
    })
}

fn cmd_goursat(left: &str, right: &str, subgroup: &str) -> Result<Output, Failure> {
    let (_, a) = load_group(left)?;
    let (_, b) = load_group(right)?;
    let (sname, s) = load_group(subgroup)?;
    let product = direct_product(&a, &b);
    if s.degree() != product.group.degree() || !is_subgroup(&s, &product.group)? {
        return Err(Failure::Input(format!("{} is not a subgroup of the product", sname)));
    }
    let r = goursat(&product, &s)?;
    let iso = match r.quotients_isomorphic {
        Some(true) => "yes",
        Some(false) => "no",
        None => "not tested (too large)",
    };
    let plain = format!(
        "H: order {}\nK: order {}\nH1: order {}\nK1: order {}\n|G| = |H1| |K1| [H : H1]: {}\ngraph is a bijection H/H1 -> K/K1: {}\nH/H1 isomorphic to K/K1: {}\n",
        r.h.order(),
        r.k.order(),
        r.h1.order(),
        r.k1.order(),
        r.order_identity,
        r.graph_is_bijection,
        iso
    );
    let json = json!({
        "H": r.h.order(),
        "K": r.k.order(),
        "H1": r.h1.order(),
        "K1": r.k1.order(),
        "order_identity": r.order_identity,
        "graph_is_bijection": r.graph_is_bijection,
        "quotients_isomorphic": r.quotients_isomorphic,
    });
    Ok(Output { plain, json })
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {}", path.display(), e))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Input(e.to_string()))
        }
    }
}

fn render_output(out: Output, format: Format) -> String {
    match format {
        Format::Plain => out.plain,
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&out.json).unwrap_or_default()),
        Format::Markdown => format!("```\n{}```\n", out.plain),
    }
}

fn cmd_verify_paper(cli: &Cli, expectations: Option<&Path>) -> Result<(), Failure> {
    let ctx = match expectations {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))?;
            Context::with_expectations(&text)?
        }
        None => Context::embedded()?,
    };
    let report = verify_all(&ctx);
    if cli.verbose {
        for t in &report.timings {
            eprintln!("{:<28} {:>8.3} s", t.section, t.seconds);
        }
        for c in report.failures() {
            eprintln!("FAIL {} [{}]", c.id, c.anchor);
        }
    }
    let text = match cli.format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Markdown => render::markdown(&report, &ctx.expectations),
        Format::Plain => render::plain(&report),
    };
    emit(&text, cli.output.as_deref())?;
    if report.pass() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

pub fn execute(cli: &Cli) -> Result<(), Failure> {
    let out = match &cli.command {
        Command::VerifyPaper { expectations } => return cmd_verify_paper(cli, expectations.as_deref()),
        Command::CharTable { group } => cmd_char_table(group)?,
        Command::Fixdim { group, subgroup, module } => cmd_fixdim(group, subgroup, module)?,
        Command::Oliver { group, p, q } => cmd_oliver(group, *p, *q)?,
        Command::Family { group } => cmd_family(group)?,
        Command::Goursat { left, right, subgroup } => cmd_goursat(left, right, subgroup)?,
    };
    emit(&render_output(out, cli.format), cli.output.as_deref())
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(Failure::Mismatch) => 1,
        Err(Failure::Input(m)) => {
            eprintln!("error: {}", m);
            2
        }
    }
}
