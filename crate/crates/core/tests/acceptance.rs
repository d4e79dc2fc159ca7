//! One PASS/FAIL line per acceptance criterion; the test fails if any does.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use matroid_lrc::codes::{GeneralCode, LinearCode, Polymatroid, RankValue};
use matroid_lrc::construct::{construct_matroid, gammoid_graph, represent, tamo_barg};
use matroid_lrc::lrc::bounds::{classify_optimality, prakash, Achieved};
use matroid_lrc::lrc::{check_structure_theorem, verify_hierarchy, verify_locality, Level, Scope};
use matroid_lrc::subset::Subset;
use matroid_lrc::zlattice::{cyclic_flats, matroid_from_z};
use matroid_lrc::{Field, Matrix, Matroid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(t: Instant, limit: Duration) -> Outcome {
    ensure!(t.elapsed() < limit, "took {:?}, limit {:?}", t.elapsed(), limit);
    Ok(())
}

fn c1_dss_params() -> Outcome {
    let t = Instant::now();
    let code = LinearCode::new(common::dss());
    let p = code.params().map_err(|e| e.to_string())?;
    ensure!((p.n, p.k, p.d) == (9, 4, 3), "(n,k,d) = ({},{},{})", p.n, p.k, p.d);
    let g = code.ground().clone();
    for (labels, want) in [
        (vec![1, 2, 3, 5, 6, 7], (6, 3, 3)),
        (vec![1, 2, 5], (3, 2, 2)),
        (vec![2, 6, 7], (3, 2, 2)),
    ] {
        let x = g.set(labels.clone()).unwrap();
        let q = code.puncture(x).unwrap().params().map_err(|e| e.to_string())?;
        ensure!((q.n, q.k, q.d) == want, "{labels:?}: got ({},{},{})", q.n, q.k, q.d);
    }
    within(t, Duration::from_secs(1))
}

fn c2_dss_lattice() -> Outcome {
    let m = Matroid::from_matrix(&common::dss());
    let z = cyclic_flats(&m).map_err(|e| e.to_string())?;
    let g = m.ground().clone();
    let mut want: Vec<(Subset, u32)> = [
        (vec![], 0),
        (vec![1, 2, 5], 2),
        (vec![2, 6, 7], 2),
        (vec![3, 5, 7], 2),
        (vec![1, 3, 6], 2),
        (vec![4, 8, 9], 2),
        (vec![1, 2, 3, 5, 6, 7], 3),
        (vec![1, 2, 4, 5, 8, 9], 3),
        ((1..=9).collect(), 4),
    ]
    .into_iter()
    .map(|(s, r): (Vec<i32>, u32)| (g.set(s).unwrap(), r))
    .collect();
    let mut got: Vec<(Subset, u32)> = z.flats().iter().map(|f| (f.set, f.rank)).collect();
    want.sort();
    got.sort();
    ensure!(got == want, "lattice {:?}", got.iter().map(|(s, r)| (g.fmt_set(*s), *r)).collect::<Vec<_>>());
    Ok(())
}

fn c3_round_trip() -> Outcome {
    let t = Instant::now();
    let m = Matroid::from_matrix(&common::dss());
    let back = matroid_from_z(&cyclic_flats(&m).unwrap()).map_err(|e| e.to_string())?;
    let diff = Subset::all(9).find(|&x| back.rank(x) != m.rank(x));
    ensure!(diff.is_none(), "ranks differ on {:?}", diff);
    within(t, Duration::from_secs(5))
}

fn c4_singleton_optimal() -> Outcome {
    let t = Instant::now();
    let z = common::lattice("singleton_optimal_lattice.json");
    let zr = z.check_z_axioms();
    ensure!(zr.passed(), "Z axioms: {:?}", zr.checks.iter().filter(|c| !c.passed).map(|c| c.axiom).collect::<Vec<_>>());
    let m = matroid_from_z(&z).map_err(|e| e.to_string())?;
    let p = m.local_params(m.full());
    ensure!((p.n, p.k, p.d) == (16, 7, Some(6)), "(n,k,d) = {p:?}");
    ensure!(z.min_distance() == Some(6), "d via Z = {:?}", z.min_distance());
    let b = prakash(16, 7, 3, 3).unwrap();
    ensure!(b == 6, "bound_prakash = {b}");
    let v = classify_optimality(Achieved { n: 16, k: 7, d: 6, r: 3, delta: 3, t: 1 }, Scope::All);
    ensure!(v.singleton_optimal, "classify: {:?}", v.best_bound);
    let g = m.ground().clone();
    let xs = [g.set(1..=5), g.set(5..=9), g.set(9..=13), g.set([1, 13, 14, 15, 16])].map(|s| s.unwrap());
    let repair: Vec<Subset> = (1..=16)
        .map(|e| match e {
            1..=5 => xs[0],
            6..=9 => xs[1],
            10..=13 => xs[2],
            _ => xs[3],
        })
        .collect();
    for (x, &r) in repair.iter().enumerate() {
        ensure!(verify_locality(&m, x, &[r], 3, 3, 1).unwrap().holds, "locality at {}", g.label(x));
    }
    let s = check_structure_theorem(&m, &repair, 3, 3).map_err(|e| e.to_string())?;
    ensure!(s.passed(), "structure: {:?}", s.checks.iter().filter(|c| !c.passed).map(|c| c.condition).collect::<Vec<_>>());
    within(t, Duration::from_secs(30))
}

fn c5_construction() -> Outcome {
    let c = construct_matroid(&common::system("construction_z.json")).map_err(|e| e.to_string())?;
    let p = c.params;
    ensure!((p.n, p.k, p.d, p.r, p.delta) == (12, 7, 3, 3, 2), "params {p:?}");
    ensure!(c.matroid.min_distance() == Some(3), "brute d = {:?}", c.matroid.min_distance());
    let v = classify_optimality(Achieved { n: 12, k: 7, d: 3, r: 3, delta: 2, t: 1 }, Scope::All);
    ensure!(v.best_bound == Some(4) && !v.singleton_optimal, "bound {:?}", v.best_bound);
    let g = c.matroid.ground().clone();
    let r = |v: Vec<u32>| g.set(v).unwrap();
    let f1: Vec<u32> = (1..=4).collect();
    let f2: Vec<u32> = (3..=6).collect();
    let f3: Vec<u32> = (7..=10).collect();
    let f4: Vec<u32> = (10..=12).collect();
    let u = |sets: &[&Vec<u32>]| r(sets.iter().flat_map(|s| s.iter().copied()).collect());
    let mut want = vec![
        (Subset::EMPTY, 0),
        (u(&[&f1]), 3),
        (u(&[&f2]), 3),
        (u(&[&f3]), 3),
        (u(&[&f4]), 2),
        (u(&[&f1, &f2]), 4),
        (u(&[&f1, &f3]), 6),
        (u(&[&f1, &f4]), 5),
        (u(&[&f2, &f3]), 6),
        (u(&[&f2, &f4]), 5),
        (u(&[&f3, &f4]), 4),
        (u(&[&f1, &f2, &f4]), 6),
        (g.full(), 7),
    ];
    let mut got: Vec<(Subset, u32)> = c.lattice.flats().iter().map(|f| (f.set, f.rank)).collect();
    want.sort();
    got.sort();
    ensure!(got == want, "lattice has {} flats", got.len());
    // the figure's edges, by node: 0 = ∅, 1..=4 the F_i, 5..=10 the pairs
    // in the order above, 11 = F_1 ∪ F_2 ∪ F_4, 12 = E
    let fig = [
        Subset::EMPTY,
        u(&[&f1]),
        u(&[&f2]),
        u(&[&f3]),
        u(&[&f4]),
        u(&[&f1, &f2]),
        u(&[&f1, &f3]),
        u(&[&f1, &f4]),
        u(&[&f2, &f3]),
        u(&[&f2, &f4]),
        u(&[&f3, &f4]),
        u(&[&f1, &f2, &f4]),
        g.full(),
    ];
    let figure_edges = [
        (0, 1), (0, 2), (0, 3), (0, 4),
        (1, 5), (1, 6), (1, 7), (2, 5), (2, 8), (2, 9), (3, 6), (3, 8), (3, 10), (4, 7), (4, 9), (4, 10),
        (5, 11), (7, 11), (9, 11), (11, 12), (6, 12), (8, 12), (10, 12),
    ];
    let mut want_edges: Vec<(Subset, Subset)> = figure_edges.iter().map(|&(a, b)| (fig[a], fig[b])).collect();
    let fl = c.lattice.flats();
    let mut got_edges: Vec<(Subset, Subset)> = c
        .lattice
        .hasse()
        .iter()
        .map(|&(a, b)| if fl[a].set.is_subset_of(fl[b].set) { (fl[a].set, fl[b].set) } else { (fl[b].set, fl[a].set) })
        .collect();
    want_edges.sort();
    got_edges.sort();
    ensure!(got_edges == want_edges, "Hasse diagram differs from the figure ({} edges)", got_edges.len());
    Ok(())
}

fn c6_gammoid() -> Outcome {
    let t = Instant::now();
    let sys = common::system("construction_z.json");
    let gg = gammoid_graph(&sys).map_err(|e| e.to_string())?;
    let sizes = (gg.sources.len(), gg.middle.len(), gg.sinks.len());
    ensure!(sizes == (12, 8, 7), "layer sizes {sizes:?}");
    let c = construct_matroid(&sys).unwrap();
    let gm = gg.matroid().map_err(|e| e.to_string())?;
    let diff = c.matroid.first_difference(&gm).map_err(|e| e.to_string())?;
    ensure!(diff.is_none(), "differ on {:?}", diff.map(|d| c.matroid.ground().fmt_set(d)));
    within(t, Duration::from_secs(60))
}

fn c7_representations() -> Outcome {
    let sys = common::system("construction_z.json");
    let c = construct_matroid(&sys).unwrap();
    let f = Field::prime(4099).unwrap();
    for seed in 0..10 {
        let rep = represent(&sys, &f, seed, 10).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure!(Matroid::from_matrix(&rep.generator).equals(&c.matroid).unwrap(), "seed {seed} not equal");
    }
    let printed = Matroid::from_matrix(&common::matrix("code_12_7_gf5.json"));
    let diff = c.matroid.first_difference(&printed).unwrap();
    ensure!(
        diff.is_none(),
        "printed GF(5) matrix differs from the construction, e.g. rank of {} is {} vs {}",
        printed.ground().fmt_set(diff.unwrap()),
        printed.rank(diff.unwrap()),
        c.matroid.rank(diff.unwrap())
    );
    Ok(())
}

fn c8_tamo_barg() -> Outcome {
    let t = Instant::now();
    let tb = tamo_barg(9, 2, 2, 4).map_err(|e| e.to_string())?;
    let p = tb.report.params;
    ensure!((p.n, p.k) == (9, 4), "(n,k) = ({},{})", p.n, p.k);
    let brute = common::brute_d(tb.code.matroid());
    ensure!(brute == Some(5) && p.d == 5, "d = {}, brute {:?}", p.d, brute);
    ensure!(prakash(9, 4, 2, 2).unwrap() == 5, "bound");
    ensure!(tb.locality_sets.len() == 3, "{} cosets", tb.locality_sets.len());
    for (x, chk) in tb.report.locality.iter().enumerate() {
        ensure!(chk.holds, "locality fails at coordinate {x}");
    }
    within(t, Duration::from_secs(10))
}

fn c9_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..200 {
        let m = common::random_matroid(&mut rng, i, 10);
        let v = common::matroid_violations(&m);
        ensure!(v.is_empty(), "matroid {i}: {v:?}");
    }
    Ok(())
}

fn c10_polymatroids() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..50 {
        let q = [2u32, 3, 4, 5][rng.gen_range(0..4)];
        let f = Field::with_order(q).unwrap();
        let n = rng.gen_range(2..=8usize);
        let max_k = (1..=n).rev().find(|&k| (q as u64).pow(k as u32) <= 4096).unwrap_or(1);
        let k = rng.gen_range(1..=max_k);
        let entries = (0..k * n).map(|_| rng.gen_range(0..q)).collect();
        let code = LinearCode::new(Matrix::new(&f, k, n, entries, None).unwrap());
        let p = Polymatroid::from_code(&code.to_general().unwrap()).unwrap();
        for x in Subset::all(n) {
            let h = p.unscaled_rank(x);
            let rank = code.matroid().rank(x) as i64;
            let want = RankValue::int(rank);
            let ok = match h {
                RankValue::Exact(r) => *r.numer() == rank && *r.denom() == 1,
                RankValue::Approx(_) => h.approx_eq(want),
            };
            ensure!(ok, "linear code {i}: entropy {h} vs rank {want} on {x:?}");
        }
    }
    for i in 0..20 {
        let s = rng.gen_range(2..=4u32);
        let n = rng.gen_range(2..=8usize);
        let size = rng.gen_range(2..=64usize.min((s as usize).pow(n as u32)));
        let mut words: Vec<Vec<u32>> = Vec::new();
        while words.len() < size {
            let w: Vec<u32> = (0..n).map(|_| rng.gen_range(0..s)).collect();
            if !words.contains(&w) {
                words.push(w);
            }
        }
        let p = Polymatroid::from_code(&GeneralCode::new(s, n, words).unwrap()).unwrap();
        for c in p.check_axioms().iter().filter(|c| ["R1", "R2", "R3"].contains(&c.axiom)) {
            ensure!(c.passed, "nonlinear code {i}: {} fails", c.axiom);
        }
        let full = p.unscaled_rank(Subset::full(n)).to_f64();
        ensure!((f64::from(s).powf(full) - size as f64).abs() < 1e-9 * size as f64, "nonlinear code {i}: s^rho = {}", f64::from(s).powf(full));
    }
    Ok(())
}

fn c11_hierarchy() -> Outcome {
    let m = Matroid::from_matrix(&common::dss());
    let x = m.ground().index(2).unwrap();
    let two = [Level { n: 6, k: 3, d: 3, t: 1 }, Level { n: 3, k: 2, d: 2, t: 2 }];
    let h = verify_hierarchy(&m, x, &two).map_err(|e| e.to_string())?;
    ensure!(h.holds, "two-level availability not confirmed");
    let bad = verify_hierarchy(&m, x, &[Level { n: 6, k: 3, d: 4, t: 1 }]).map_err(|e| e.to_string())?;
    ensure!(!bad.holds, "(6,3,4,1) accepted with witness {:?}", bad.witness);
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("dss code parameters and punctured codes", c1_dss_params),
        ("dss cyclic-flat lattice", c2_dss_lattice),
        ("lattice round trip on all subsets", c3_round_trip),
        ("16-element Singleton-optimal matroid", c4_singleton_optimal),
        ("cyclic-flat construction (12,7,3,3,2)", c5_construction),
        ("gammoid digraph equals construction", c6_gammoid),
        ("printed GF(5) matrix and GF(4099) representations", c7_representations),
        ("evaluation code over GF(9)", c8_tamo_barg),
        ("property suite on 200 random matroids", c9_properties),
        ("entropy polymatroids of random codes", c10_polymatroids),
        ("two-level hierarchy at coordinate 2", c11_hierarchy),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({:.2?})", i + 1, t.elapsed()),
            Err(why) => {
                println!("FAIL {:>2} {name} ({:.2?}): {why}", i + 1, t.elapsed());
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
