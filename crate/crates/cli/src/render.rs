use posr_core::analysis::{ConditionOutcome, ConditionReport, ElementAnalysis};
use posr_core::graphs::{graph_metrics, GraphShape, ZdGraph};
use posr_core::harness::TheoremReport;
use posr_core::ElemSet;

pub fn set(names: &[String], s: &ElemSet) -> String {
    list(names, s.iter())
}

pub fn list(names: &[String], xs: impl IntoIterator<Item = usize>) -> String {
    let parts: Vec<&str> = xs.into_iter().map(|x| names[x].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

fn condition(names: &[String], id: &str, c: &ConditionOutcome) -> String {
    match c.counterexample {
        Some(x) => format!("{id} = false (fails at {})", names[x]),
        None => format!("{id} = true"),
    }
}

pub fn analysis(names: &[String], e: &ElementAnalysis, c: &ConditionReport) -> String {
    let nil: Vec<String> = e
        .nilpotency
        .iter()
        .filter_map(|(&x, k)| k.map(|k| format!("{}:{k}", names[x])))
        .collect();
    let lines = [
        format!("order = {}", names.len()),
        format!("Z = {}", set(names, &e.zero_divisors)),
        format!("nilpotent = {{{}}}", nil.join(",")),
        format!("idempotents = {}", set(names, &e.idempotents)),
        format!(
            "primitive-idempotents = {}",
            set(names, &e.primitive_idempotents)
        ),
        format!("primes = {}", set(names, &e.primes)),
        format!("maximals = {}", set(names, &e.maximals)),
        format!("minimals = {}", set(names, &e.minimals)),
        condition(names, "c1", &c.c1),
        condition(names, "c2", &c.c2),
        condition(names, "c3", &c.c3),
    ];
    lines.join("\n") + "\n"
}

/// The shape line, followed by the graph itself unless `shape_only`.
pub fn graph(names: &[String], g: &ZdGraph, shape: &GraphShape, shape_only: bool) -> String {
    let mut out = format!("{shape}\n");
    if shape_only {
        return out;
    }
    let edges: Vec<String> = g
        .edges()
        .map(|(i, j)| format!("{}-{}", names[g.vertices[i]], names[g.vertices[j]]))
        .collect();
    let m = graph_metrics(g);
    let show = |d: Option<usize>| d.map_or("none".to_string(), |d| d.to_string());
    out.push_str(&format!(
        "vertices = {}\n",
        list(names, g.vertices.iter().copied())
    ));
    out.push_str(&format!("edges = {{{}}}\n", edges.join(",")));
    out.push_str(&format!("diameter = {}\n", show(m.diameter)));
    out.push_str(&format!("girth = {}\n", show(m.girth)));
    out.push_str(&format!("clique-number = {}\n", m.clique_number));
    out.push_str(&format!("components = {}\n", m.component_count));
    out
}

pub fn theorems(report: &TheoremReport) -> String {
    let mut out = String::new();
    for e in &report.entries {
        let result = serde_json::to_value(e.result).expect("plain enum");
        out.push_str(&format!(
            "{} {} {}",
            e.check,
            e.instance,
            result.as_str().unwrap_or_default()
        ));
        if let Some(w) = &e.witness {
            let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!(" witness=[{}]", w.join(",")));
        }
        if let Some(d) = &e.detail {
            out.push_str(&format!(" ({d})"));
        }
        if !e.annotations.is_empty() {
            out.push_str(&format!(" [{}]", e.annotations.join(",")));
        }
        out.push('\n');
    }
    for (id, c) in &report.per_check {
        out.push_str(&format!(
            "summary {id} pass={} fail={} not-applicable={}\n",
            c.pass, c.fail, c.not_applicable
        ));
    }
    let t = report.totals;
    out.push_str(&format!(
        "total pass={} fail={} not-applicable={}\n",
        t.pass, t.fail, t.not_applicable
    ));
    out
}
