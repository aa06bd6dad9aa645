use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context as _, Result};
use riordan_core::groupkit::{abelian_invariants, TruncatedGroup};
use riordan_core::literal::{integers_from_json, pair_from_json, pair_to_json, parse_pair};
use riordan_core::theorems::{self, Suite, SuiteOptions};
use riordan_core::{RingSpec, RiordanPair};
use serde_json::{json, Value};

use crate::output::{self, csv_rows, factors_json, object, pretty, render_reports, reports_json, Context, Format};
use crate::{GroupName, Outcome};

/// Largest table index with a closed form row, and with an engine cross-check.
const TABLE_MAX: u64 = 64;
const TABLE_VERIFY_MAX: u64 = 16;
/// Step bound when an order cannot be taken in a packed group.
const ORDER_SEARCH_LIMIT: u64 = 1 << 12;

/// JSON numbers go out as decimal strings.
fn s(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn table1(ctx: &Context, n: u64, verify: bool) -> Result<Outcome> {
    if n > TABLE_MAX {
        bail!("table rows are available up to n = {TABLE_MAX}, got {n}");
    }
    if verify && n > TABLE_VERIFY_MAX {
        bail!("engine cross-check is available up to n = {TABLE_VERIFY_MAX}, got {n}");
    }
    struct Row {
        n: u64,
        factors: riordan_core::groupkit::AbelianType,
        engine: Option<riordan_core::groupkit::AbelianType>,
    }
    let mut rows = Vec::new();
    for k in 1..=n {
        let engine = if verify {
            let grp = TruncatedGroup::binary(k as usize)?;
            Some(abelian_invariants(&grp.appell()?)?)
        } else {
            None
        };
        rows.push(Row { n: k, factors: theorems::appell_invariants_for_index(k), engine });
    }
    let ok = |r: &Row| r.engine.as_ref().is_none_or(|e| *e == r.factors);
    let verdict = |r: &Row| if ok(r) { "pass" } else { "fail" };
    let body = match ctx.format {
        Format::Csv => {
            let header: &[&str] = if verify { &["n", "factors", "engine", "verdict"] } else { &["n", "factors"] };
            csv_rows(
                header,
                rows.iter().map(|r| {
                    let mut v = vec![r.n.to_string(), r.factors.to_plain()];
                    if let Some(e) = &r.engine {
                        v.push(e.to_plain());
                        v.push(verdict(r).to_string());
                    }
                    v
                }),
            )?
        }
        Format::Json => pretty(&Value::Array(
            rows.iter()
                .map(|r| {
                    let mut o = object(&[("n", s(r.n)), ("factors", factors_json(&r.factors))]);
                    if let Some(e) = &r.engine {
                        o["engine"] = factors_json(e);
                        o["verdict"] = s(verdict(r));
                    }
                    o
                })
                .collect(),
        )),
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                match &r.engine {
                    Some(e) => writeln!(out, "{:>2}  {}  engine {}  {}", r.n, r.factors, e, verdict(r))?,
                    None => writeln!(out, "{:>2}  {}", r.n, r.factors)?,
                }
            }
            out
        }
    };
    ctx.emit(&body)?;
    Ok(rows.iter().all(ok))
}

pub enum Action {
    Show,
    Mul(String),
    Inv,
    Matrix,
    Order,
}

fn read_pair(expr: &str, ring: &RingSpec, n: usize) -> Result<RiordanPair> {
    let t = expr.trim();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).context("pair JSON")?;
        Ok(pair_from_json(&v, *ring, Some(n))?)
    } else {
        Ok(parse_pair(t, *ring, n)?)
    }
}

fn check_member(p: &RiordanPair, group: GroupName) -> Result<()> {
    let one_g = p.g().is_one();
    let f1_one = p.f().coeff(1) == 1.into() || p.order() == 0;
    let ok = match group {
        GroupName::Tr => true,
        GroupName::Ta => p.is_appell(),
        GroupName::Tn => one_g,
        GroupName::Tj => one_g && f1_one,
    };
    if !ok {
        bail!("{p} is not in {group}_{}", p.order());
    }
    Ok(())
}

fn element_order(p: &RiordanPair) -> Result<u64> {
    if let Ok(grp) = TruncatedGroup::new(p.ring(), p.order()) {
        if let Ok(x) = grp.pack(p) {
            return Ok(grp.element_order(x));
        }
    }
    let mut x = p.clone();
    for k in 1..=ORDER_SEARCH_LIMIT {
        if x.is_identity() {
            return Ok(k);
        }
        x = x.mul(p)?;
    }
    Err(anyhow!("no finite order up to {ORDER_SEARCH_LIMIT}"))
}

fn pair_text(p: &RiordanPair) -> String {
    format!("{p}\n")
}

fn pair_csv(p: &RiordanPair) -> Result<String> {
    let join = |s: &riordan_core::TruncatedSeries| {
        s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    };
    csv_rows(&["series", "coefficients"], [["g".to_string(), join(p.g())], ["f".to_string(), join(p.f())]])
}

pub fn element(
    ctx: &Context,
    expr: &str,
    n: usize,
    ring: &RingSpec,
    action: Action,
    group: GroupName,
) -> Result<Outcome> {
    let p = read_pair(expr, ring, n)?;
    check_member(&p, group)?;
    let show_pair = |q: &RiordanPair| -> Result<String> {
        Ok(match ctx.format {
            Format::Json => pretty(&pair_to_json(q)),
            Format::Csv => pair_csv(q)?,
            Format::Text => pair_text(q),
        })
    };
    let body = match action {
        Action::Show => show_pair(&p)?,
        Action::Inv => show_pair(&p.inverse())?,
        Action::Mul(other) => {
            let q = read_pair(&other, ring, n)?;
            check_member(&q, group)?;
            show_pair(&p.mul(&q)?)?
        }
        Action::Matrix => {
            let m = p.to_matrix();
            match ctx.format {
                Format::Json => pretty(&m.to_json()),
                Format::Csv => m.to_csv(),
                Format::Text => m.to_string(),
            }
        }
        Action::Order => {
            let k = element_order(&p)?;
            match ctx.format {
                Format::Json => pretty(&json!({ "order": s(k) })),
                Format::Csv => csv_rows(&["order"], [[k.to_string()]])?,
                Format::Text => format!("{k}\n"),
            }
        }
    };
    ctx.emit(&body)?;
    Ok(true)
}

pub fn group_order(ctx: &Context, n: usize, ring: &RingSpec, group: GroupName) -> Result<Outcome> {
    let grp = TruncatedGroup::new(*ring, n)?;
    let table = match group {
        GroupName::Tr => grp.full()?,
        GroupName::Ta => grp.appell()?,
        GroupName::Tj => grp.substitution()?,
        GroupName::Tn => bail!("TN is enumerated only through verify --suites abelianization"),
    };
    let name = group.to_string();
    let body = match ctx.format {
        Format::Json => pretty(&json!({ "group": name, "n": s(n), "ring": s(ring), "order": s(table.order()) })),
        Format::Csv => csv_rows(&["group", "n", "ring", "order"], [[name, n.to_string(), ring.to_string(), table.order().to_string()]])?,
        Format::Text => format!("|{name}_{n}({ring})| = {}\n", table.order()),
    };
    ctx.emit(&body)?;
    Ok(true)
}

pub fn lcs(ctx: &Context, n: usize, depth: usize) -> Result<Outcome> {
    let lcs = theorems::verify_lcs_quotients(n, depth)?;
    let stable = |x: Option<bool>| match x {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    };
    let reports = ctx.scrub(&lcs.reports);
    let body = match ctx.format {
        Format::Json => pretty(&object(&[
            ("level", s(lcs.level)),
            ("depth", s(depth)),
            ("term_orders", Value::Array(lcs.term_orders.iter().map(s).collect())),
            (
                "rows",
                Value::Array(
                    lcs.rows
                        .iter()
                        .map(|r| {
                            json!({
                                "i": s(r.index),
                                "term_order": s(&r.term_order),
                                "quotient": factors_json(&r.quotient),
                                "predicted": factors_json(&r.predicted),
                                "stable": stable(r.stable),
                            })
                        })
                        .collect(),
                ),
            ),
            ("window", Value::Array(lcs.window.iter().map(s).collect())),
            ("reports", reports_json(&reports)),
        ])),
        Format::Csv => csv_rows(
            &["i", "term_order", "quotient", "predicted", "stable"],
            lcs.rows.iter().map(|r| {
                [
                    r.index.to_string(),
                    r.term_order.clone(),
                    r.quotient.to_plain(),
                    r.predicted.to_plain(),
                    stable(r.stable).to_string(),
                ]
            }),
        )?,
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "TR_{}(F2), depth {depth}", lcs.level)?;
            writeln!(out, "|gamma_i|: {}", lcs.term_orders.join(" "))?;
            for r in &lcs.rows {
                writeln!(
                    out,
                    "i={}  |gamma_i|={}  quotient {}  predicted {}  stable {}",
                    r.index,
                    r.term_order,
                    r.quotient,
                    r.predicted,
                    stable(r.stable)
                )?;
            }
            let w: Vec<String> = lcs.window.iter().map(|i| i.to_string()).collect();
            writeln!(out, "stable window: i in {{{}}}", w.join(","))?;
            out.push_str(&ctx.report_lines(&reports));
            out
        }
    };
    ctx.emit(&body)?;
    Ok(reports.iter().all(|r| r.passed()))
}

pub fn abelianization(ctx: &Context, n: usize, ring: &RingSpec) -> Result<Outcome> {
    let mut reports = vec![theorems::verify_abelianization_splitting(*ring, n)?];
    if *ring == RingSpec::F2 {
        reports.extend(theorems::verify_nottingham_abelianization(n)?);
        reports.push(theorems::abelianization_stabilization(n)?.report);
    }
    finish_reports(ctx, &reports)
}

pub fn dihedral(ctx: &Context, n: u32) -> Result<Outcome> {
    if !(1..=8).contains(&n) {
        bail!("dihedral embeddings are checked for 1 <= n <= 8, got {n}");
    }
    let (r, sx, mut reports) = theorems::dihedral_embedding(n)?;
    reports.extend(theorems::infinite_dihedral_relations(1 << n)?);
    let reports = ctx.scrub(&reports);
    let body = match ctx.format {
        Format::Json => pretty(&json!({
            "r": pair_to_json(&r),
            "s": pair_to_json(&sx),
            "reports": reports_json(&reports),
        })),
        Format::Csv => output::reports_csv(&reports, ctx.timings)?,
        Format::Text => format!("r = {r}\ns = {sx}\n{}", render_reports(ctx, &reports)?),
    };
    ctx.emit(&body)?;
    Ok(reports.iter().all(|x| x.passed()))
}

pub fn shapiro(ctx: &Context, input: &str) -> Result<Outcome> {
    let text = if input.trim_start().starts_with('{') {
        input.to_string()
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    let v: Value = serde_json::from_str(&text).context("shapiro input JSON")?;
    let g = integers_from_json(&v, "g")?;
    let f = integers_from_json(&v, "f")?;
    let verdict = theorems::shapiro_membership(&g, &f)?;
    let reasons: Vec<String> = verdict.failed.iter().map(|c| c.to_string()).collect();
    let word = if verdict.member { "member" } else { "non-member" };
    let body = match ctx.format {
        Format::Json => pretty(&json!({ "verdict": word, "failed": reasons })),
        Format::Csv => csv_rows(&["verdict", "failed"], [[word.to_string(), reasons.join("; ")]])?,
        Format::Text => format!("{verdict}\n"),
    };
    ctx.emit(&body)?;
    Ok(true)
}

fn finish_reports(ctx: &Context, reports: &[theorems::VerificationReport]) -> Result<Outcome> {
    ctx.emit(&render_reports(ctx, reports)?)?;
    Ok(reports.iter().all(|r| r.passed()))
}

pub fn verify(ctx: &Context, suites: &str, n_max: usize, depth: usize) -> Result<Outcome> {
    let suites = Suite::parse_list(suites)?;
    let reports = theorems::run_suites(&suites, SuiteOptions { n_max, depth });
    let ok = reports.iter().all(|r| r.passed());
    match &ctx.out {
        // The file always gets the JSON report array; stdout keeps the summary.
        Some(path) => {
            let json = pretty(&reports_json(&ctx.scrub(&reports)));
            std::fs::write(path, json).with_context(|| format!("writing {}", path.display()))?;
            let summary = Context { format: ctx.format, out: None, timings: ctx.timings };
            summary.emit(&render_reports(&summary, &reports)?)?;
        }
        None => ctx.emit(&render_reports(ctx, &reports)?)?,
    }
    Ok(ok)
}
