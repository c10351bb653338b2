//! Plain-text rendering: a claims table followed by ramification tables
//! laid out as G_i ranges.

use std::fmt::Write;

use serde_json::Value;

use crate::report::{Report, Status};

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        _ => v.to_string(),
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Match => "match",
        Status::Mismatch => "MISMATCH",
        Status::UnverifiedAdvisory => "advisory",
    }
}

/// Rows "index range | subgroup | order" from a profile JSON value.
fn filtration_table(out: &mut String, title: &str, profile: &Value) {
    let (Some(group), Some(mode), Some(breaks)) =
        (profile["group"].as_str(), profile["mode"].as_str(), profile["breaks"].as_array())
    else {
        return;
    };
    let sym = if mode == "upper" { "u" } else { "i" };
    let _ = writeln!(out, "\n{} ({} numbering, G = {})", title, mode, group);
    let _ = writeln!(out, "  {:<16} {:<12} {:>6}", format!("{} range", sym), "G_", "order");
    let mut prev: Option<String> = None;
    for b in breaks {
        let at = compact(&b[0]);
        let range = match &prev {
            None => format!("<= {}", at),
            Some(p) => format!("({}, {}]", p, at),
        };
        let _ = writeln!(out, "  {:<16} {:<12} {:>6}", range, compact(&b[1]), compact(&b[2]));
        prev = Some(at);
    }
    if let Some(p) = prev {
        let _ = writeln!(out, "  {:<16} {:<12} {:>6}", format!("> {}", p), "1", 1);
    }
}

pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let kind = r.scenario["kind"].as_str().unwrap_or("?");
    let _ = writeln!(out, "{} [{}]", kind, r.schema);
    let _ = writeln!(out, "{}", compact(&r.scenario));
    let _ = writeln!(out);
    let width = r.claims.iter().map(|c| c.id.len()).max().unwrap_or(0).max(5);
    let _ = writeln!(out, "{:<width$}  {:<9}  computed / expected", "claim", "status", width = width);
    for c in &r.claims {
        let expected = c.expected.as_ref().map_or(String::from("-"), compact);
        let _ = writeln!(
            out,
            "{:<width$}  {:<9}  {} / {}",
            c.id,
            status_word(c.status),
            compact(&c.computed),
            expected,
            width = width
        );
    }
    for (key, title) in [("filtration_lower", "Lower filtration"), ("filtration_upper", "Upper filtration")] {
        if let Some(p) = r.details.get(key) {
            filtration_table(&mut out, title, p);
        }
    }
    if let Some(ledger) = r.details.get("conductor").and_then(|c| c["ledger"].as_array()) {
        let c = &r.details["conductor"];
        let _ = writeln!(out, "\nSwan ledger (epsilon = {}, sw = {}, f = {})", c["epsilon"], c["sw"], c["f"]);
        let _ = writeln!(out, "  {:<12} {:<10} {:>6} {:>6} {:>8}", "i", "G_i", "|G_i|", "codim", "amount");
        for e in ledger {
            let _ = writeln!(
                out,
                "  {:<12} {:<10} {:>6} {:>6} {:>8}",
                format!("[{}, {}]", e["from"], e["to"]),
                compact(&e["label"]),
                compact(&e["order"]),
                compact(&e["codim"]),
                compact(&e["amount"])
            );
        }
    }
    let verdict = if r.has_mismatch() { "MISMATCH" } else { "ok" };
    let _ = writeln!(out, "\n{}", verdict);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_tables() {
        let mut r = Report::new(json!({"kind": "filtration-algebra"}));
        r.pinned("product.upper", "filtration.product", json!([1, "3/2"]), json!([1, "3/2"]));
        r.detail("filtration_upper", json!({"group": "G", "mode": "upper", "breaks": [[1, "G", 8], ["3/2", "Z", 2]]}));
        let text = render_text(&r);
        assert!(text.contains("(1, 3/2]"));
        assert!(text.contains("> 3/2"));
        assert!(text.trim_end().ends_with("ok"));
    }
}
