//! Plain-text renderings of the JSON reports. Nothing here is computed; every
//! line comes from a field of the report.

use std::fmt::Write;

use serde_json::Value;

fn set(v: &Value) -> String {
    match v.as_array() {
        Some(a) if a.is_empty() => "∅".into(),
        Some(a) => format!("{{{}}}", a.iter().map(scalar).collect::<Vec<_>>().join(",")),
        None => scalar(v),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

pub fn lattice(z: &Value) -> String {
    let mut s = String::new();
    for f in z["flats"].as_array().into_iter().flatten() {
        let _ = writeln!(s, "({},{})", set(&f["set"]), f["rank"]);
    }
    s
}

fn bound_table(s: &mut String, rows: &Value) {
    let _ = writeln!(s, "{:<12} {:>6} {:>5} {:>5}  note", "bound", "value", "used", "gap");
    for b in rows.as_array().into_iter().flatten() {
        let _ = writeln!(
            s,
            "{:<12} {:>6} {:>5} {:>5}  {}",
            scalar(&b["name"]),
            scalar(&b["value"]),
            if b["applicable"] == true { "yes" } else { "no" },
            scalar(&b["gap"]),
            scalar(&b["note"]),
        );
    }
}

pub fn bounds(r: &Value) -> String {
    let mut s = String::new();
    let p = if r["achieved"].is_object() { &r["achieved"] } else { &r["params"] };
    let _ = writeln!(
        s,
        "n={} k={} r={} delta={} t={}{}  scope {}",
        p["n"],
        p["k"],
        p["r"],
        p["delta"],
        p["t"],
        if p["d"].is_null() { String::new() } else { format!(" d={}", p["d"]) },
        scalar(&r["scope"]),
    );
    let _ = writeln!(s, "in P(n,k,r,delta): {}", r["in_p"]);
    bound_table(&mut s, &r["bounds"]);
    if !r["best_bound"].is_null() {
        let _ = writeln!(
            s,
            "best bound {}; {}",
            r["best_bound"],
            if r["singleton_optimal"] == true { "Singleton-optimal" } else { "not optimal" }
        );
    }
    if !r["d_max_lower_bound"].is_null() {
        let _ = writeln!(s, "d_max >= {}", r["d_max_lower_bound"]);
    }
    if let Some(c) = r.get("cadambe") {
        let _ = writeln!(s, "alphabet-aware: k <= {} (s = {}), k permitted: {}", c["k_max"], c["argmin_s"], c["permitted"]);
    }
    s
}

pub fn analyze(r: &Value) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", scalar(&r["input"]));
    let _ = writeln!(s, "(n, k, d) = ({}, {}, {})", r["n"], r["k"], scalar(&r["d"]));
    let _ = writeln!(s, "non-degenerate: {}", r["non_degenerate"]);
    if let Some(is) = r["information_sets"].as_array() {
        let _ = writeln!(s, "information sets: {}", is.len());
    }
    if r["lattice"].is_object() {
        let _ = writeln!(s, "cyclic flats:");
        for line in lattice(&r["lattice"]).lines() {
            let _ = writeln!(s, "  {line}");
        }
    }
    if let Some(loc) = r.get("locality") {
        let _ = writeln!(
            s,
            "locality r={} delta={} t={}: {}",
            loc["r"],
            loc["delta"],
            loc["t"],
            if loc["scope"].is_null() { "none".into() } else { scalar(&loc["scope"]) }
        );
        for c in loc["coordinates"].as_array().into_iter().flatten() {
            let sets: Vec<String> = c["repair_sets"]
                .as_array()
                .map(|a| a.iter().map(|rs| set(&rs["members"])).collect())
                .unwrap_or_else(|| vec!["-".into()]);
            let _ = writeln!(s, "  {}: {}", scalar(&c["x"]), sets.join(" "));
        }
    }
    if let Some(v) = r.get("verdict") {
        bound_table(&mut s, &v["bounds"]);
        let _ = writeln!(
            s,
            "best bound {}; {}",
            scalar(&v["best_bound"]),
            if v["singleton_optimal"] == true { "Singleton-optimal" } else { "not optimal" }
        );
    }
    for d in r["diagnostics"].as_array().into_iter().flatten() {
        let _ = writeln!(s, "note: {}", scalar(d));
    }
    s
}

pub fn construct(b: &Value) -> String {
    let mut s = String::new();
    let m = &b["matrix"];
    let _ = writeln!(s, "generator {}x{} over GF({}^{})", m["rows"], m["cols"], m["field"]["p"], m["field"]["m"]);
    for row in m["entries"].as_array().into_iter().flatten() {
        let cells: Vec<String> = row.as_array().into_iter().flatten().map(scalar).collect();
        let _ = writeln!(s, "  {}", cells.join(" "));
    }
    if let Some(p) = b.get("params") {
        let _ = writeln!(s, "(n,k,d,r,delta) = ({},{},{},{},{})", p["n"], p["k"], p["d"], p["r"], p["delta"]);
    }
    if let Some(r) = b.get("report") {
        if let Some(p) = r.get("params") {
            let _ = writeln!(s, "(n,k,d) = ({},{},{}), bound {}", p["n"], p["k"], p["d"], r["bound"]);
        }
        if let Some(ok) = r.get("success") {
            let _ = writeln!(s, "events A_i {}, B {}, success {ok}; d = {}", r["events_a"], r["event_b"], scalar(&r["d"]));
            let _ = writeln!(s, "seed {}", r["seed"]);
        }
    }
    if let Some(seed) = b.get("seed") {
        let _ = writeln!(s, "seed {seed}, attempt {}", b["attempt"]);
    }
    s
}
