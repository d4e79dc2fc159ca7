#![allow(dead_code)]

use std::path::PathBuf;

use matroid_lrc::construct::RepairSetSystem;
use matroid_lrc::linalg::{Matrix, MatrixJson};
use matroid_lrc::CyclicFlatLattice;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(data(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn matrix(name: &str) -> Matrix {
    let j: MatrixJson = serde_json::from_str(&read(name)).unwrap();
    Matrix::from_json(&j).unwrap()
}

pub fn lattice(name: &str) -> CyclicFlatLattice {
    CyclicFlatLattice::from_json(&serde_json::from_str(&read(name)).unwrap()).unwrap()
}

pub fn system(name: &str) -> RepairSetSystem {
    serde_json::from_str(&read(name)).unwrap()
}

pub fn dss() -> Matrix {
    matrix("dss_code.json")
}

use matroid_lrc::matroid::gammoid::Digraph;
use matroid_lrc::matroid::graph::Graph;
use matroid_lrc::subset::{Label, Subset};
use matroid_lrc::{Field, Matroid};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// d by definition: the smallest Y whose removal drops the rank.
pub fn brute_d(m: &Matroid) -> Option<u32> {
    let k = m.full_rank();
    if k == 0 {
        return None;
    }
    Subset::all(m.len()).filter(|&y| m.rank(m.full() - y) < k).map(|y| y.len() as u32).min()
}

pub fn random_linear(rng: &mut ChaCha8Rng, max_n: usize) -> Matroid {
    let q = [2u32, 3, 5][rng.gen_range(0..3)];
    let f = Field::prime(q).unwrap();
    let n = rng.gen_range(3..=max_n);
    let rows = rng.gen_range(1..=4.min(n));
    let entries = (0..rows).map(|_| (0..n).map(|_| rng.gen_range(0..q as i64)).collect()).collect::<Vec<_>>();
    Matroid::from_matrix(&matroid_lrc::Matrix::from_ints(&f, &entries).unwrap())
}

pub fn random_graphic(rng: &mut ChaCha8Rng, max_n: usize) -> Matroid {
    let v = rng.gen_range(2..=6);
    let n = rng.gen_range(3..=max_n);
    let edges: Vec<(usize, usize, usize)> = (1..=n).map(|e| (e, rng.gen_range(0..v), rng.gen_range(0..v))).collect();
    Matroid::from_graph(&Graph::from_edges(edges.into_iter().map(|(e, a, b)| (e, format!("v{a}"), format!("v{b}")))).unwrap())
}

pub fn random_gammoid(rng: &mut ChaCha8Rng, max_n: usize) -> Matroid {
    let n = rng.gen_range(3..=max_n);
    let mid = rng.gen_range(1..=4);
    let sinks = rng.gen_range(1..=4);
    let src: Vec<Label> = (1..=n).map(Label::from).collect();
    let m: Vec<Label> = (1..=mid).map(|i| Label::new(format!("m{i}"))).collect();
    let t: Vec<Label> = (1..=sinks).map(|i| Label::new(format!("t{i}"))).collect();
    let mut arcs = Vec::new();
    for s in &src {
        for v in m.iter().chain(&t) {
            if rng.gen_bool(0.3) {
                arcs.push((s.clone(), v.clone()));
            }
        }
    }
    for a in &m {
        for b in m.iter().chain(&t) {
            if a != b && rng.gen_bool(0.4) {
                arcs.push((a.clone(), b.clone()));
            }
        }
    }
    let vertices: Vec<Label> = src.iter().chain(&m).chain(&t).cloned().collect();
    Matroid::from_gammoid(&Digraph::new(vertices, arcs).unwrap(), &src, &t).unwrap()
}

pub fn random_matroid(rng: &mut ChaCha8Rng, i: usize, max_n: usize) -> Matroid {
    match i % 3 {
        0 => random_linear(rng, max_n),
        1 => random_graphic(rng, max_n),
        _ => random_gammoid(rng, max_n),
    }
}

/// Violations found on one matroid: axioms, d via the lattice against the
/// brute force, and bound/δ checks on every locality assignment found.
pub fn matroid_violations(m: &Matroid) -> Vec<String> {
    use matroid_lrc::lrc::{analyze_locality, bounds, verify_locality};
    let mut out = Vec::new();
    let ax = m.check_axioms();
    if !ax.passed() {
        out.push(format!("axioms failed: {:?}", ax.failures()));
    }
    let z = matroid_lrc::zlattice::cyclic_flats(m).unwrap();
    let bd = brute_d(m);
    if z.min_distance() != bd || m.min_distance() != bd {
        out.push(format!("d via Z {:?}, via drop sets {:?}, brute {:?}", z.min_distance(), m.min_distance(), bd));
    }
    let k = m.full_rank();
    let Some(d) = bd else { return out };
    for r in 1..=k {
        for delta in 2..=3u32 {
            let rep = analyze_locality(m, r, delta, 1).unwrap();
            if rep.scope.is_none() {
                continue;
            }
            for (x, c) in rep.coordinates.iter().enumerate() {
                if let Some(sets) = &c.repair_sets {
                    let s: Vec<Subset> = sets.iter().map(|s| s.set).collect();
                    if !verify_locality(m, x, &s, r, delta, 1).unwrap().holds {
                        out.push(format!("found sets for {x} do not verify"));
                    }
                }
            }
            let b = bounds::prakash(m.len() as i64, k as i64, r as i64, delta as i64).unwrap();
            if d as i64 > b || d < delta {
                out.push(format!("(n,k,d,r,delta)=({},{k},{d},{r},{delta}) vs bound {b}", m.len()));
            }
        }
    }
    out
}
