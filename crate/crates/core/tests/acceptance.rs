//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

mod common;

use std::time::{Duration, Instant};

use common::{listed, random_mirror_orbit, solid};
use orbit_bell::bell_bounds::ORACLE_BUDGET;
use orbit_bell::representations::{oh_rep, s4_irrep, verify_orthogonality};
use orbit_bell::table1::{self, CLASSICAL_TOLERANCE, QUANTUM_RELATIVE_TOLERANCE};
use orbit_bell::z4_model::{
    z4_classical_closed_form, z4_evaluate, z4_minimize_classical, z4_orbit, z4_quantum_value, Z4InitialVector,
};
use orbit_bell::{
    classical_bound, classical_bound_oracle, classical_bound_with, classify_classical_vectors, evaluate_strategies,
    gram, phi_plus_quantum_value, quantum_value, reflect_y, signed_sum, Orbit, Orbit64, SearchOptions, Solid,
    Strategy, Vec3d,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const EXACT: f64 = 1e-9;
const TABLE1_TIME_LIMIT: Duration = Duration::from_secs(60);

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn unordered_pairs() -> Vec<(Solid, Solid)> {
    let mut out = Vec::new();
    for (i, &a) in Solid::ALL.iter().enumerate() {
        for &b in &Solid::ALL[i..] {
            out.push((a, b));
        }
    }
    out
}

fn ordered_pairs() -> Vec<(Solid, Solid)> {
    Solid::ALL.iter().flat_map(|&a| Solid::ALL.iter().map(move |&b| (a, b))).collect()
}

fn ac1_table1() -> Check {
    let start = Instant::now();
    let rows = table1::TABLE1
        .iter()
        .map(|&r| table1::compute_row(r, &SearchOptions::default()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let mut worst = 0.0f64;
    for row in &rows {
        let r = row.reference;
        ensure(
            row.quantum_relative_delta().abs() <= QUANTUM_RELATIVE_TOLERANCE,
            format!("{}-{}: quantum {} vs {}", r.alice, r.bob, row.result.quantum_value, r.quantum),
        )?;
        ensure(
            row.classical_delta().abs() <= CLASSICAL_TOLERANCE,
            format!("{}-{}: classical {} vs {}", r.alice, r.bob, row.result.classical_bound, r.classical),
        )?;
        worst = worst.max(row.classical_delta().abs());
    }
    ensure(elapsed <= TABLE1_TIME_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!("11 rows, max |ΔC| = {worst:.2e} (tol {CLASSICAL_TOLERANCE:e}), {:.2}s", elapsed.as_secs_f64()))
}

fn ac2_closed_form() -> Check {
    let pairs = unordered_pairs();
    let mut worst = 0.0f64;
    for &(a, b) in &pairs {
        let (oa, ob) = (solid(a), solid(b));
        let expected = (oa.len() * ob.len()) as f64 / 3.0;
        let d = rel(quantum_value(&gram(&oa, &ob)), expected);
        ensure(d <= EXACT, format!("{a}-{b}: rel err {d:e}"))?;
        worst = worst.max(d);
    }
    Ok(format!("{} unordered pairs, max rel err {worst:.1e}", pairs.len()))
}

fn ac3_no_violation() -> Check {
    let cases = [
        (Solid::Tetrahedron, Solid::Tetrahedron, 16.0 / 3.0),
        (Solid::Cube, Solid::Cube, 64.0 / 3.0),
        (Solid::Tetrahedron, Solid::Cube, 32.0 / 3.0),
    ];
    for (a, b, value) in cases {
        let r = classical_bound(&gram(&solid(a), &solid(b))).map_err(|e| e.to_string())?;
        ensure((r.classical_bound - value).abs() <= EXACT, format!("{a}-{b}: C = {}", r.classical_bound))?;
        ensure((r.quantum_value - value).abs() <= EXACT, format!("{a}-{b}: B = {}", r.quantum_value))?;
        ensure((r.ratio - 1.0).abs() <= EXACT, format!("{a}-{b}: ratio = {}", r.ratio))?;
    }
    Ok("C = B for tetra-tetra (16/3), cube-cube (64/3), tetra-cube (32/3)".into())
}

fn oracle_agrees(a: &Orbit64, b: &Orbit64) -> Result<f64, String> {
    let g = gram(a, b);
    let fast = classical_bound(&g).map_err(|e| e.to_string())?.classical_bound;
    let slow = classical_bound_oracle(&g).map_err(|e| e.to_string())?;
    let d = (fast - slow).abs();
    ensure(d <= EXACT, format!("{}-{}: search {fast} vs oracle {slow}", a.label, b.label))?;
    Ok(d)
}

fn ac4_oracle() -> Check {
    let mut canonical = 0;
    let mut worst = 0.0f64;
    for (a, b) in ordered_pairs() {
        let (oa, ob) = (solid(a), solid(b));
        if oa.len() + ob.len() <= ORACLE_BUDGET {
            worst = worst.max(oracle_agrees(&oa, &ob)?);
            canonical += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2020);
    for k in 0..50 {
        let a = random_mirror_orbit(&mut rng, &format!("random_a{k}"));
        let b = random_mirror_orbit(&mut rng, &format!("random_b{k}"));
        worst = worst.max(oracle_agrees(&a, &b)?);
    }
    Ok(format!("{canonical} canonical + 50 random 12x12 S4 pairs, max |Δ| = {worst:.1e}"))
}

fn ac5_z4() -> Check {
    let tetra = Z4InitialVector::<f64>::tetrahedral();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let w = Z4InitialVector::from_vec3(common::random_unit(&mut rng)).map_err(|e| e.to_string())?;
        let q = z4_quantum_value(tetra, w);
        ensure((q - 16.0 / 3.0).abs() <= EXACT, format!("quantum {q} at {w:?}"))?;
        let alice = z4_orbit(tetra).map_err(|e| e.to_string())?;
        let bob = z4_orbit(w).map_err(|e| e.to_string())?;
        let direct = quantum_value(&gram(&alice, &bob));
        ensure((q - direct).abs() <= EXACT, format!("diagonal-basis {q} vs Gram sum {direct}"))?;
        let eval = z4_evaluate(w, &SearchOptions::threads(1)).map_err(|e| e.to_string())?;
        let closed = z4_classical_closed_form(w);
        ensure(
            (eval.search - closed).abs() <= EXACT,
            format!("closed form {closed} vs search {} at {w:?}", eval.search),
        )?;
    }
    let m = z4_minimize_classical::<f64>();
    let target = 16.0 / 15f64.sqrt();
    ensure((m.value - target).abs() <= EXACT, format!("minimum {} vs 16/√15", m.value))?;
    ensure(m.violated, "violation flag not set")?;
    ensure(m.sampled_min >= m.value - EXACT, format!("sample {} below minimum", m.sampled_min))?;
    Ok(format!("100 random Bob vectors; min C = {:.6} (16/√15), {} samples ≥ min", m.value, m.samples))
}

fn ac6_classical_orbits() -> Check {
    let t = solid(Solid::Tetrahedron);
    let d = classify_classical_vectors(&t, &s4_irrep()).map_err(|e| e.to_string())?;
    let mut sizes: Vec<usize> = d.orbits().map(|o| o.size).collect();
    sizes.sort();
    ensure(sizes == vec![1, 1, 4, 4, 6], format!("sizes {sizes:?}"))?;
    let mut lengths: Vec<f64> = d.orbits().map(|o| o.length).collect();
    lengths.sort_by(f64::total_cmp);
    let expected = [0.0, 0.0, 2.0, 2.0, 4.0 / 3f64.sqrt()];
    let mut expected_sorted = expected;
    expected_sorted.sort_by(f64::total_cmp);
    for (l, e) in lengths.iter().zip(expected_sorted) {
        ensure((l - e).abs() <= EXACT, format!("lengths {lengths:?}"))?;
    }

    let s4 = s4_irrep::<f64>();
    let tetra = Orbit::from_vertices("tetrahedron", &s4, listed(Solid::Tetrahedron)).map_err(|e| e.to_string())?;
    let octa = Orbit::from_vertices("octahedron", &s4, listed(Solid::Octahedron)).map_err(|e| e.to_string())?;
    let a: Strategy = "++-+".parse().unwrap();
    let b: Strategy = "-+-+-+".parse().unwrap();
    let v = signed_sum(&tetra, &a).map_err(|e| e.to_string())?;
    let w = signed_sum(&octa, &b).map_err(|e| e.to_string())?;
    let s2 = 2f64.sqrt();
    ensure(v.approx_eq(Vec3d::new(2.0 / 3.0, -4.0 * s2 / 3.0, 0.0), EXACT), format!("V = {v:?}"))?;
    ensure(
        w.approx_eq(Vec3d::new(2.0 / 3f64.sqrt(), -4.0 * (2.0f64 / 3.0).sqrt(), 0.0), EXACT),
        format!("W = {w:?}"),
    )?;
    let g = gram(&tetra, &octa);
    let vw = evaluate_strategies(&g, &a, &b).map_err(|e| e.to_string())?;
    let bound = classical_bound(&g).map_err(|e| e.to_string())?.classical_bound;
    ensure((vw - 4.0 * 3f64.sqrt()).abs() <= EXACT, format!("V.W = {vw}"))?;
    ensure((vw - bound).abs() <= EXACT, format!("V.W = {vw} vs C = {bound}"))?;
    Ok(format!("tetrahedron orbits {{1,1,4,4,6}}, V.W = {vw:.4} = C"))
}

fn ac7_representations() -> Check {
    let s4 = s4_irrep::<f64>();
    let oh = oh_rep::<f64>();
    let rs = verify_orthogonality(&s4);
    let ro = verify_orthogonality(&oh);
    ensure(rs < 1e-9 && ro < 1e-9, format!("residuals {rs:e}, {ro:e}"))?;
    s4.verify_axioms().map_err(|e| e.to_string())?;
    oh.verify_axioms().map_err(|e| e.to_string())?;
    for s in Solid::ALL {
        let o = solid(s);
        let order = s.generating_group().rep::<f64>().order();
        ensure(o.len() * o.stabilizer_order == order, format!("{s}: {} x {} != {order}", o.len(), o.stabilizer_order))?;
    }
    Ok(format!("orthogonality residuals {rs:.1e} (S4), {ro:.1e} (O_h); axioms hold; |orbit|·|stab| = |G|"))
}

fn ac8_phi_plus() -> Check {
    let mut invariant_pairs = 0;
    for (a, b) in ordered_pairs() {
        let (oa, ob) = (solid(a), solid(b));
        let q = quantum_value(&gram(&oa, &ob));
        let p = phi_plus_quantum_value(&oa, &ob);
        ensure(rel(p, q) <= EXACT, format!("{a}-{b}: φ+ {p} vs singlet {q}"))?;
        if oa.is_reflect_y_invariant() || ob.is_reflect_y_invariant() {
            invariant_pairs += 1;
            let c = classical_bound(&gram(&oa, &ob)).map_err(|e| e.to_string())?.classical_bound;
            let cr = classical_bound(&gram(&oa, &reflect_y(&ob))).map_err(|e| e.to_string())?.classical_bound;
            ensure((c - cr).abs() <= EXACT, format!("{a}-{b}: {c} vs reflected {cr}"))?;
        }
    }
    // an explicitly reflection-invariant setting against every canonical solid
    let axes: Vec<Vec3d> = [[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, -1.0]]
        .into_iter()
        .map(Vec3d::from_f64)
        .collect();
    let axes = Orbit64 {
        label: "axes".into(),
        rep_name: "explicit".into(),
        initial_vector: axes[0],
        vertices: axes,
        stabilizer_order: 8,
    };
    for s in Solid::ALL {
        let o = solid(s);
        for (x, y) in [(&axes, &o), (&o, &axes)] {
            let c = classical_bound(&gram(x, y)).map_err(|e| e.to_string())?.classical_bound;
            let cr = classical_bound(&gram(x, &reflect_y(y))).map_err(|e| e.to_string())?.classical_bound;
            ensure((c - cr).abs() <= EXACT, format!("axes/{s}: {c} vs reflected {cr}"))?;
        }
    }
    Ok(format!(
        "φ+ = singlet on 25 ordered pairs; {invariant_pairs} canonical pairs meet the invariance precondition; reflected bounds equal for the invariant axes orbit vs all 5 solids"
    ))
}

fn ac9_determinism() -> Check {
    let pairs = [
        (Solid::TruncatedOctahedron, Solid::Cuboctahedron),
        (Solid::TruncatedOctahedron, Solid::Cube),
        (Solid::Cuboctahedron, Solid::Cuboctahedron),
        (Solid::Tetrahedron, Solid::Tetrahedron),
    ];
    let threads = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(4).max(2);
    for (a, b) in pairs {
        let g = gram(&solid(a), &solid(b));
        let render = |t: usize| -> Result<String, String> {
            let r = classical_bound_with(&g, &SearchOptions::threads(t)).map_err(|e| e.to_string())?;
            serde_json::to_string(&r.to_record()).map_err(|e| e.to_string())
        };
        let reference = render(1)?;
        for t in [1, threads, 0, 3] {
            let again = render(t)?;
            ensure(again == reference, format!("{a}-{b}: threads={t} differs:\n{again}\n{reference}"))?;
        }
    }
    Ok(format!("identical BoundResult records for 1, 3, {threads} and auto threads, repeated"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("AC1 reference table", ac1_table1),
        ("AC2 closed-form quantum value", ac2_closed_form),
        ("AC3 no-violation cases", ac3_no_violation),
        ("AC4 oracle equivalence", ac4_oracle),
        ("AC5 Z4 suite", ac5_z4),
        ("AC6 classical-orbit decomposition", ac6_classical_orbits),
        ("AC7 representation health", ac7_representations),
        ("AC8 phi+ variant", ac8_phi_plus),
        ("AC9 determinism", ac9_determinism),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail} [{:.2}s]", start.elapsed().as_secs_f64()),
            Err(why) => {
                failures += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 9 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
