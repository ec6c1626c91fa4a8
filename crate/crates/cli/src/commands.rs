//! Command implementations. Each returns the reports to render.

use std::fs;
use std::path::Path;

use orbit_bell::bell_bounds::{round_significant, CLASSIFY_BUDGET};
use orbit_bell::orbits::canonical_solid;
use orbit_bell::table1::{self, CLASSICAL_TOLERANCE};
use orbit_bell::z4_model::{
    z4_classical_closed_form, z4_evaluate, z4_minimize_classical, z4_quantum_value, z4_scan_grid, Z4InitialVector,
};
use orbit_bell::{
    classical_bound_with, classify_classical_vectors, gram, oh_rep, s4_irrep, signed_sum, z4_rep, BoundResult64,
    Error, Orbit64, OrbitRecord, Rep64, SearchOptions, Solid, Vec3d,
};
use serde_json::{json, Value};

use crate::report::Report;
use crate::CliError;

const SIG: usize = 10;

/// Rounding residue such as `-1e-17` is shown as zero.
fn clean(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        0.0
    } else {
        x
    }
}

fn num(x: f64) -> Value {
    json!(round_significant(clean(x), SIG))
}

fn fixed(x: f64) -> String {
    format!("{:.6}", clean(x))
}

fn plain(x: f64) -> String {
    format!("{}", round_significant(clean(x), SIG))
}

fn vec_string(v: Vec3d) -> String {
    format!("({:.6}, {:.6}, {:.6})", v.x, v.y, v.z)
}

/// `Some(k)` when `c² ≈ k` for an integer `k` and `c` itself is not an integer.
pub fn sqrt_annotation(c: f64) -> Option<u64> {
    let sq = c * c;
    let k = sq.round();
    let integral_square = k >= 1.0 && (sq - k).abs() <= 1e-6;
    let integral_value = (c - c.round()).abs() <= 1e-6;
    (integral_square && !integral_value).then_some(k as u64)
}

fn annotated(c: f64) -> String {
    match sqrt_annotation(c) {
        Some(k) => format!("{} = √{k}", fixed(c)),
        None => fixed(c),
    }
}

/// A solid name, or a path to an orbit record in JSON.
pub fn load_orbit(arg: &str) -> Result<Orbit64, CliError> {
    if let Ok(solid) = arg.parse::<Solid>() {
        return Ok(canonical_solid(solid));
    }
    let path = Path::new(arg);
    if !path.is_file() {
        return Err(Error::UnknownSolid(arg.to_owned()).into());
    }
    let text = fs::read_to_string(path)?;
    let record: OrbitRecord =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(Orbit64::from_record(&record)?)
}

fn rep_for(orbit: &Orbit64) -> Result<Rep64, CliError> {
    match orbit.rep_name.as_str() {
        "S4" => Ok(s4_irrep()),
        "O_h" => Ok(oh_rep()),
        "Z4" => Ok(z4_rep()),
        other => Err(CliError::Usage(format!("no group named {other:?} to classify {} with", orbit.label))),
    }
}

pub fn solids() -> Result<Vec<Report>, CliError> {
    let mut r = Report::new("canonical solids", vec!["solid", "group", "N", "stabilizer", "initial_vector"]);
    let mut records = Vec::new();
    for s in Solid::ALL {
        let o = canonical_solid::<f64>(s);
        r.push(vec![
            s.name().into(),
            s.generating_group().name().into(),
            o.len().to_string(),
            o.stabilizer_order.to_string(),
            vec_string(o.initial_vector),
        ]);
        records.push(o.to_record());
    }
    r.set("solids", serde_json::to_value(records).expect("orbit records serialize"));
    Ok(vec![r])
}

fn bound_rows(r: &mut Report, b: &BoundResult64) {
    let ratio = if b.ratio.is_finite() { fixed(b.ratio) } else { "inf".into() };
    for (k, v) in [
        ("alice", format!("{} (N={})", b.alice_label, b.n_a())),
        ("bob", format!("{} (N={})", b.bob_label, b.n_b())),
        ("classical bound C", annotated(b.classical_bound)),
        ("quantum value B", fixed(b.quantum_value)),
        ("ratio B/C", ratio),
        ("violated", b.is_violated().to_string()),
        ("alice strategy", b.alice_strategy.to_string()),
        ("bob strategy", b.bob_strategy.to_string()),
    ] {
        r.push(vec![k.into(), v]);
    }
}

pub fn bounds(alice: &str, bob: &str, options: &SearchOptions) -> Result<Vec<Report>, CliError> {
    let a = load_orbit(alice)?;
    let b = load_orbit(bob)?;
    let result = classical_bound_with(&gram(&a, &b), options)?;
    let mut r = Report::new(format!("bounds {} x {}", a.label, b.label), vec!["quantity", "value"]);
    bound_rows(&mut r, &result);
    r.data = match serde_json::to_value(result.to_record()).expect("bound record serializes") {
        Value::Object(m) => m,
        _ => unreachable!("records serialize as objects"),
    };
    r.set("violated", result.is_violated());
    r.set("classical_bound_squared", sqrt_annotation(result.classical_bound));
    Ok(vec![r])
}

pub fn table1(check: bool, options: &SearchOptions) -> Result<(Vec<Report>, usize), CliError> {
    let rows = table1::compute_rows(options)?;
    let mut columns = vec!["alice", "bob", "N_A", "N_B", "C", "B", "ratio", "saturated"];
    if check {
        columns.extend(["C_ref", "delta_C", "B_ref", "status"]);
    }
    let mut r = Report::new("classical bounds and quantum values", columns);
    let mut failures = 0;
    let mut data = Vec::new();
    for row in &rows {
        let res = &row.result;
        let mut cells = vec![
            row.reference.alice.name().to_owned(),
            row.reference.bob.name().to_owned(),
            res.n_a().to_string(),
            res.n_b().to_string(),
            plain(res.classical_bound),
            plain(res.quantum_value),
            plain(res.ratio),
            (!res.is_violated()).to_string(),
        ];
        let mut entry = serde_json::to_value(res.to_record()).expect("bound record serializes");
        if check {
            let ok = row.passes();
            failures += usize::from(!ok);
            cells.extend([
                plain(row.reference.classical),
                format!("{:.1e}", row.classical_delta()),
                plain(row.reference.quantum),
                if ok { "ok" } else { "FAIL" }.to_owned(),
            ]);
            entry["reference_classical"] = json!(row.reference.classical);
            entry["reference_quantum"] = json!(row.reference.quantum);
            entry["delta_classical"] = num(row.classical_delta());
            entry["pass"] = json!(ok);
        }
        r.push(cells);
        data.push(entry);
    }
    r.set("rows", data);
    if check {
        r.notes.push(format!(
            "check: {} of {} rows within {CLASSICAL_TOLERANCE:e} of the reference values",
            rows.len() - failures,
            rows.len()
        ));
        r.set("tolerance", CLASSICAL_TOLERANCE);
        r.set("failures", failures);
    }
    Ok((vec![r], failures))
}

pub fn classify(target: &str, pair: Option<&str>, options: &SearchOptions) -> Result<Vec<Report>, CliError> {
    let alice = load_orbit(target)?;
    // (orbit, classical vector realising the bound with its plus-count)
    let mut sides: Vec<(Orbit64, Option<(usize, Vec3d)>)> = Vec::new();
    let mut header = None;
    let mut skipped = false;
    match pair {
        None => sides.push((alice, None)),
        Some(p) => {
            let bob = load_orbit(p)?;
            let best = classical_bound_with(&gram(&alice, &bob), options)?;
            let v = signed_sum(&alice, &best.alice_strategy)?;
            let w = signed_sum(&bob, &best.bob_strategy)?;
            header = Some(best.clone());
            let duplicate = alice.label == bob.label && best.alice_strategy == best.bob_strategy;
            sides.push((alice, Some((best.alice_strategy.plus_count(), v))));
            if bob.len() > CLASSIFY_BUDGET {
                skipped = true;
            } else if !duplicate {
                sides.push((bob, Some((best.bob_strategy.plus_count(), w))));
            }
        }
    }

    let mut reports = Vec::new();
    if let Some(best) = &header {
        let mut r = Report::new(
            format!("classical maximizer for {} x {}", best.alice_label, best.bob_label),
            vec!["quantity", "value"],
        );
        bound_rows(&mut r, best);
        let v = signed_sum(&sides[0].0, &best.alice_strategy)?;
        r.push(vec!["V".into(), vec_string(v)]);
        r.set("bound", serde_json::to_value(best.to_record()).expect("bound record serializes"));
        if skipped {
            r.notes.push(format!("{} has more than {CLASSIFY_BUDGET} settings; its decomposition is skipped", best.bob_label));
        }
        reports.push(r);
    }

    for (orbit, mark) in &sides {
        let rep = rep_for(orbit)?;
        let d = classify_classical_vectors(orbit, &rep)?;
        let marked = mark.and_then(|(plus, v)| d.locate(plus, v)).map(|o| (o.plus_count, o.representative));
        let mut r = Report::new(
            format!("classical orbits of {} under {} ({} strategies)", d.orbit_label, d.rep_name, d.total_multiplicity()),
            vec!["plus_count", "x", "y", "z", "size", "multiplicity", "length", "maximizer"],
        );
        let mut entries = Vec::new();
        for o in d.orbits() {
            let is_max = marked.is_some_and(|(p, rep)| p == o.plus_count && rep.approx_eq(o.representative, 1e-9));
            let v = o.representative;
            r.push(vec![
                o.plus_count.to_string(),
                fixed(v.x),
                fixed(v.y),
                fixed(v.z),
                o.size.to_string(),
                o.multiplicity.to_string(),
                annotated(o.length),
                if is_max { "*" } else { "" }.to_owned(),
            ]);
            entries.push(json!({
                "plus_count": o.plus_count,
                "representative": [num(v.x), num(v.y), num(v.z)],
                "size": o.size,
                "multiplicity": o.multiplicity,
                "length": num(o.length),
                "maximizer": is_max,
            }));
        }
        r.set("orbit", d.orbit_label.clone());
        r.set("group", d.rep_name.clone());
        r.set("settings", d.settings);
        r.set("orbits", entries);
        reports.push(r);
    }
    Ok(reports)
}

/// Parses `a,b,c` and normalises it onto the unit sphere.
pub fn parse_point(s: &str) -> Result<Z4InitialVector<f64>, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    let [a, b, c] = parts[..] else {
        return Err(format!("expected three comma-separated numbers, got {s:?}"));
    };
    let v = Vec3d::new(a, b, c);
    let n = v.norm();
    if !(n.is_finite() && n > 0.0) {
        return Err(format!("{s:?} is not a nonzero finite vector"));
    }
    Z4InitialVector::from_vec3(v.scale(1.0 / n)).map_err(|e| e.to_string())
}

pub fn z4_scan(steps: usize, points: &[Z4InitialVector<f64>], options: &SearchOptions) -> Result<Vec<Report>, CliError> {
    let samples = if points.is_empty() { z4_scan_grid(steps) } else { points.to_vec() };
    let mut r = Report::new(
        "Z4 scan over Bob's initial vector",
        vec!["a", "b", "c", "C_closed_form", "C_search", "quantum", "ratio", "violated", "note"],
    );
    let tetra = Z4InitialVector::tetrahedral();
    let mut entries = Vec::new();
    for w in samples {
        let head = vec![plain(w.a), plain(w.b), plain(w.c)];
        let row = match z4_evaluate(w, options) {
            Ok(e) => {
                entries.push(json!({
                    "a": num(w.a), "b": num(w.b), "c": num(w.c),
                    "closed_form": num(e.closed_form), "search": num(e.search),
                    "quantum": num(e.quantum), "ratio": num(e.ratio), "violated": e.violated,
                }));
                [plain(e.closed_form), plain(e.search), plain(e.quantum), plain(e.ratio), e.violated.to_string(), String::new()]
            }
            Err(Error::DegenerateOrbit { distinct, .. }) => {
                let closed = z4_classical_closed_form(w);
                let quantum = z4_quantum_value(tetra, w);
                let note = format!("degenerate orbit ({distinct} distinct vertices)");
                entries.push(json!({
                    "a": num(w.a), "b": num(w.b), "c": num(w.c),
                    "closed_form": num(closed), "quantum": num(quantum), "note": note,
                }));
                [plain(closed), String::new(), plain(quantum), String::new(), String::new(), note]
            }
            Err(e) => return Err(e.into()),
        };
        r.push(head.into_iter().chain(row).collect());
    }
    r.set("samples", entries);
    Ok(vec![r])
}

pub fn z4_min() -> Result<Vec<Report>, CliError> {
    let m = z4_minimize_classical::<f64>();
    let w = m.minimizer;
    let mut r = Report::new("Z4 minimum of the classical bound", vec!["quantity", "value"]);
    for (k, v) in [
        ("minimizer (a, b, c)", vec_string(w.to_vec3())),
        ("classical bound C", fixed(m.value)),
        ("16/sqrt(15)", fixed(16.0 / 15f64.sqrt())),
        ("quantum value B", fixed(m.quantum)),
        ("ratio B/C", fixed(m.quantum / m.value)),
        ("violated", m.violated.to_string()),
        ("sphere samples", m.samples.to_string()),
        ("sampled minimum", fixed(m.sampled_min)),
    ] {
        r.push(vec![k.into(), v]);
    }
    r.set("minimizer", vec![num(w.a), num(w.b), num(w.c)]);
    r.set("classical_bound", num(m.value));
    r.set("quantum_value", num(m.quantum));
    r.set("ratio", num(m.quantum / m.value));
    r.set("violated", m.violated);
    r.set("samples", m.samples);
    r.set("sampled_min", num(m.sampled_min));
    Ok(vec![r])
}
