//! One function per subcommand; each yields a JSON result, a text report and a pass flag.

use std::fmt::Write;

use nichols::classify::{classify, enumerate_standard, FamilyType, CLASSIFY_ORBIT_CAP};
use nichols::freealgebra::BraidingMatrix;
use nichols::nichols::{
    closed_formula_dim, coproduct_identities_check, dim_nichols, hilbert_prefix, pbw_generators, root_heights,
    root_word, verify_presentation, Dimension, Height,
};
use nichols::weyl::{cartan_matrix, finite_type, is_standard, m_matrix, FiniteType, DEFAULT_CARTAN_CAP};
use serde_json::{json, Value};

use crate::render;

pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub pass: bool,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Outcome {
        Outcome { json, text, pass: true }
    }
}

fn height(h: &Height) -> String {
    match h {
        Height::Finite(n) => n.to_string(),
        Height::Infinite => "inf".into(),
    }
}

pub fn analyze(b: &BraidingMatrix) -> Result<Outcome, String> {
    let m = m_matrix(b, DEFAULT_CARTAN_CAP);
    let components = match cartan_matrix(b, DEFAULT_CARTAN_CAP).map(|c| finite_type(&c)) {
        Ok(FiniteType::Finite { components }) => Some(components),
        _ => None,
    };
    let std = is_standard(b, CLASSIFY_ORBIT_CAP).map_err(|e| e.to_string())?;
    let class = classify(b);

    let mut t = String::new();
    writeln!(t, "braiding:\n{}", render::braiding(b)).unwrap();
    let mrows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(render::m_entry).collect()).collect();
    writeln!(t, "m-matrix:\n{}", render::matrix(&mrows)).unwrap();
    match &components {
        Some(cs) => {
            let parts: Vec<String> = cs
                .iter()
                .map(|c| {
                    let v: Vec<String> = c.vertices.iter().map(|v| (v + 1).to_string()).collect();
                    format!("{c} on vertices {}", v.join(","))
                })
                .collect();
            writeln!(t, "cartan type: {}", parts.join("; ")).unwrap();
        }
        None => writeln!(t, "cartan type: not of finite type").unwrap(),
    }
    writeln!(t, "standard: {} (orbit of {} points)", std.standard, std.orbit.len()).unwrap();
    if let Some(r) = &std.reason {
        writeln!(t, "reason: {r}").unwrap();
    }
    writeln!(t, "class: {}", class.class).unwrap();

    let json = json!({
        "m_matrix": m,
        "cartan_components": components,
        "standard": std.standard,
        "orbit_size": std.orbit.len(),
        "reason": std.reason,
        "classification": class,
    });
    Ok(Outcome::ok(json, t))
}

pub fn reflect(b: &BraidingMatrix, vertex: usize) -> Result<Outcome, String> {
    if vertex == 0 || vertex > b.theta() {
        return Err(format!("--vertex: {vertex} is outside 1..={}", b.theta()));
    }
    let r = nichols::weyl::reflect(b, vertex - 1).map_err(|e| e.to_string())?;
    let text = format!("reflection at vertex {vertex}:\n{}", render::braiding(&r));
    Ok(Outcome::ok(json!({ "vertex": vertex, "braiding": r }), text))
}

pub fn orbit(b: &BraidingMatrix) -> Result<Outcome, String> {
    let rep = is_standard(b, CLASSIFY_ORBIT_CAP).map_err(|e| e.to_string())?;
    let mut t = format!("orbit: {} points, standard: {}\n", rep.orbit.len(), rep.standard);
    if let Some(r) = &rep.reason {
        writeln!(t, "reason: {r}").unwrap();
    }
    for (k, p) in rep.orbit.iter().enumerate() {
        writeln!(t, "point {k}:\n{}", render::braiding(&p.braiding)).unwrap();
    }
    let json = json!({
        "standard": rep.standard,
        "reason": rep.reason,
        "points": rep.orbit,
    });
    Ok(Outcome::ok(json, t))
}

pub fn roots(b: &BraidingMatrix) -> Result<Outcome, String> {
    let hs = root_heights(b).map_err(|e| e.to_string())?;
    let mut rows = Vec::new();
    let mut t = format!("{} positive roots\n", hs.len());
    for (alpha, h) in &hs {
        let w = root_word(b, alpha).map_err(|e| e.to_string())?;
        writeln!(t, "{:<20} {:<20} N = {}", render::root(alpha), w.to_string(), height(h)).unwrap();
        rows.push(json!({ "root": alpha, "word": w, "q_alpha": b.chi_deg(alpha, alpha), "height": h }));
    }
    Ok(Outcome::ok(json!({ "roots": rows }), t))
}

pub fn pbw(b: &BraidingMatrix, cap: u32) -> Result<Outcome, String> {
    let gens = pbw_generators(b, cap).map_err(|e| e.to_string())?;
    let mut t = format!("{} PBW generators up to degree {cap}\n", gens.len());
    for g in &gens {
        writeln!(t, "{:<20} {:<20} N = {}", render::root(&g.alpha), g.lyndon.to_string(), height(&g.height)).unwrap();
    }
    Ok(Outcome::ok(json!({ "cap": cap, "generators": gens }), t))
}

pub fn hilbert(b: &BraidingMatrix, cap: u32) -> Result<Outcome, String> {
    let h = hilbert_prefix(b, cap).map_err(|e| e.to_string())?;
    let mut by_total = vec![0u64; cap as usize + 1];
    let mut t = String::new();
    let mut rows: Vec<(&Vec<u32>, u64)> = h.dims.iter().filter(|(_, &n)| n > 0).map(|(d, &n)| (d, n)).collect();
    rows.sort_by_key(|(d, _)| (d.iter().sum::<u32>(), std::cmp::Reverse((*d).clone())));
    for (d, n) in rows {
        by_total[d.iter().sum::<u32>() as usize] += n;
        writeln!(t, "{:<20} {n}", render::root(d)).unwrap();
    }
    let totals: Vec<String> = by_total.iter().map(|n| n.to_string()).collect();
    writeln!(t, "by total degree: {}", totals.join(" ")).unwrap();
    writeln!(t, "sum: {}", h.total()).unwrap();
    Ok(Outcome::ok(json!({ "prefix": h, "by_total_degree": by_total, "sum": h.total() }), t))
}

pub fn dim(b: &BraidingMatrix) -> Result<Outcome, String> {
    let oracle = dim_nichols(b).map_err(|e| e.to_string())?;
    let class = classify(b).class;
    let formula = closed_formula_dim(&class).map(Dimension::Finite);
    let agree = formula.as_ref().ok().map(|f| *f == oracle);
    let mut t = format!("class: {class}\noracle: {oracle}\n");
    match &formula {
        Ok(f) => writeln!(t, "formula: {f}\nagree: {}", agree.unwrap()).unwrap(),
        Err(e) => writeln!(t, "formula: unavailable ({e})").unwrap(),
    }
    let json = json!({
        "oracle": oracle,
        "formula": formula.as_ref().ok(),
        "formula_error": formula.as_ref().err().map(|e| e.to_string()),
        "agree": agree,
    });
    Ok(Outcome { json, text: t, pass: agree != Some(false) })
}

pub fn check_relations(b: &BraidingMatrix, cap: u32) -> Result<Outcome, String> {
    let rep = verify_presentation(b, cap).map_err(|e| e.to_string())?;
    let mut t = String::new();
    for r in &rep.relations {
        let status = match r.in_ideal {
            Some(true) => "ok",
            Some(false) => "FAIL",
            None => "beyond cap",
        };
        writeln!(t, "{:<28} {:<20} {status}", r.label, render::root(&r.degree)).unwrap();
    }
    writeln!(t, "hilbert series matches PBW product up to degree {cap}: {}", rep.hilbert_match).unwrap();
    writeln!(t, "pass: {}", rep.pass()).unwrap();
    let pass = rep.pass();
    Ok(Outcome { json: serde_json::to_value(&rep).expect("report serializes"), text: t, pass })
}

pub fn check_coproducts(b: &BraidingMatrix) -> Result<Outcome, String> {
    let rep = coproduct_identities_check(b).map_err(|e| e.to_string())?;
    let mut t = String::new();
    for c in &rep.cases {
        writeln!(t, "{:<16} {:<24} shape {} holds {}", c.identity, c.label, c.shape, c.holds).unwrap();
        for (k, v) in &c.constants {
            writeln!(t, "    {k} = {v}").unwrap();
        }
        if let Some(d) = &c.detail {
            writeln!(t, "    {d}").unwrap();
        }
    }
    writeln!(t, "pass: {}", rep.pass).unwrap();
    let pass = rep.pass;
    Ok(Outcome { json: serde_json::to_value(&rep).expect("report serializes"), text: t, pass })
}

pub fn enumerate(ty: FamilyType, theta: usize, conductor: u32) -> Outcome {
    let e = enumerate_standard(ty, theta, conductor);
    let mut t = format!("{} braidings\n", e.items.len());
    if let Some(d) = &e.diagnostic {
        writeln!(t, "note: {d}").unwrap();
    }
    for it in &e.items {
        writeln!(t, "{}\n{}", it.class, render::braiding(&it.braiding)).unwrap();
    }
    Outcome::ok(serde_json::to_value(&e).expect("enumeration serializes"), t)
}
