//! Lattices of cyclic flats: enumeration, the (Z0)-(Z3) axiom scheme, rank
//! reconstruction, and the cyclic-set / parameter / information-set tests
//! that work directly on the lattice.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matroid::{LocalParams, Matroid};
use crate::subset::{Ground, Label, Subset};

/// Above this many elements the flats are found by closure expansion
/// instead of scanning every subset.
pub const RAW_SCAN_LIMIT: usize = 12;
pub const LATTICE_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flat {
    pub set: Subset,
    pub rank: u32,
}

/// Flats are kept sorted by (rank, lexicographic label order); `hasse`
/// holds cover pairs `(lower, upper)` as indices into `flats`.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicFlatLattice {
    ground: Ground,
    flats: Vec<Flat>,
    hasse: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct FlatJson {
    set: Vec<Label>,
    rank: u32,
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    ground: Vec<Label>,
    flats: Vec<FlatJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZCheck {
    pub axiom: &'static str,
    pub passed: bool,
    pub witness: Vec<Vec<Label>>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZReport {
    pub checks: Vec<ZCheck>,
}

impl ZReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&ZCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    fn first_failure(&self) -> Option<&ZCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Re-indexes `x ⊆ within` relative to the elements of `within`.
fn compress(x: Subset, within: Subset) -> Subset {
    within.iter().enumerate().filter(|&(_, e)| x.contains(e)).map(|(i, _)| i).collect()
}

impl CyclicFlatLattice {
    /// Builds a lattice from `(set, rank)` pairs without checking the axioms.
    pub fn new(ground: Ground, flats: impl IntoIterator<Item = (Subset, u32)>) -> Result<Self> {
        let mut fs: Vec<Flat> = flats.into_iter().map(|(set, rank)| Flat { set, rank }).collect();
        for f in &fs {
            if !f.set.is_subset_of(ground.full()) {
                return Err(Error::UnknownElement(format!("flat {:?} leaves the ground set", f.set)));
            }
        }
        fs.sort_by(|a, b| a.rank.cmp(&b.rank).then(a.set.lex_cmp(b.set)));
        if let Some(w) = fs.windows(2).find(|w| w[0].set == w[1].set) {
            return Err(Error::BadParams(format!("flat {} listed twice", ground.fmt_set(w[0].set))));
        }
        let hasse = hasse_diagram(&fs);
        Ok(CyclicFlatLattice { ground, flats: fs, hasse })
    }

    /// Convenience constructor from label lists.
    pub fn from_labels<L, S, F>(ground: impl IntoIterator<Item = L>, flats: impl IntoIterator<Item = (F, u32)>) -> Result<Self>
    where
        L: Into<Label>,
        S: Into<Label>,
        F: IntoIterator<Item = S>,
    {
        let ground = Ground::new(ground)?;
        let fs = flats.into_iter().map(|(f, r)| Ok((ground.set(f)?, r))).collect::<Result<Vec<_>>>()?;
        CyclicFlatLattice::new(ground, fs)
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn contains(&self, x: Subset) -> bool {
        self.flats.iter().any(|f| f.set == x)
    }

    pub fn rank_of_flat(&self, x: Subset) -> Option<u32> {
        self.flats.iter().find(|f| f.set == x).map(|f| f.rank)
    }

    /// The flat contained in every flat, if any.
    pub fn bottom(&self) -> Option<Flat> {
        self.flats.iter().find(|f| self.flats.iter().all(|g| f.set.is_subset_of(g.set))).copied()
    }

    /// The flat containing every flat, if any.
    pub fn top(&self) -> Option<Flat> {
        self.flats.iter().find(|f| self.flats.iter().all(|g| g.set.is_subset_of(f.set))).copied()
    }

    /// Least flat containing `x`.
    pub fn join_of(&self, x: Subset) -> Option<Flat> {
        let ups: Vec<&Flat> = self.flats.iter().filter(|f| x.is_subset_of(f.set)).collect();
        ups.iter().find(|f| ups.iter().all(|g| f.set.is_subset_of(g.set))).map(|f| **f)
    }

    /// Greatest flat contained in `x`.
    pub fn meet_of(&self, x: Subset) -> Option<Flat> {
        let downs: Vec<&Flat> = self.flats.iter().filter(|f| f.set.is_subset_of(x)).collect();
        downs.iter().find(|f| downs.iter().all(|g| g.set.is_subset_of(f.set))).map(|f| **f)
    }

    pub fn join(&self, a: Subset, b: Subset) -> Option<Flat> {
        self.join_of(a | b)
    }

    pub fn meet(&self, a: Subset, b: Subset) -> Option<Flat> {
        self.meet_of(a & b)
    }

    /// ρ(X) = min { ρ(F) + |X \ F| : F in Z }
    pub fn rank_formula(&self, x: Subset) -> u32 {
        self.flats.iter().map(|f| f.rank + (x - f.set).len() as u32).min().unwrap_or(x.len() as u32)
    }

    /// Checks (Z0)-(Z3), reporting the first violating pair for each.
    pub fn check_z_axioms(&self) -> ZReport {
        let g = &self.ground;
        let pairs: Vec<(usize, usize)> =
            (0..self.len()).flat_map(|i| (i..self.len()).map(move |j| (i, j))).collect();

        let z0 = if self.flats.is_empty() {
            ZCheck { axiom: "Z0", passed: false, witness: vec![], detail: "no flats".into() }
        } else {
            let bad = pairs.par_iter().find_first(|&&(i, j)| {
                let (a, b) = (self.flats[i].set, self.flats[j].set);
                self.join(a, b).is_none() || self.meet(a, b).is_none()
            });
            match bad {
                None => ZCheck { axiom: "Z0", passed: true, witness: vec![], detail: String::new() },
                Some(&(i, j)) => ZCheck {
                    axiom: "Z0",
                    passed: false,
                    witness: vec![g.labels_of(self.flats[i].set), g.labels_of(self.flats[j].set)],
                    detail: format!(
                        "{} and {} have no join or no meet in Z",
                        g.fmt_set(self.flats[i].set),
                        g.fmt_set(self.flats[j].set)
                    ),
                },
            }
        };

        let z1 = match self.bottom() {
            Some(b) if b.rank == 0 => ZCheck { axiom: "Z1", passed: true, witness: vec![], detail: String::new() },
            Some(b) => ZCheck {
                axiom: "Z1",
                passed: false,
                witness: vec![g.labels_of(b.set)],
                detail: format!("bottom {} has rank {}", g.fmt_set(b.set), b.rank),
            },
            None => ZCheck { axiom: "Z1", passed: false, witness: vec![], detail: "no bottom element".into() },
        };

        let z2_bad = pairs.par_iter().find_map_first(|&(i, j)| {
            let (x, y) = (self.flats[i], self.flats[j]);
            let (x, y) = if x.set.is_proper_subset_of(y.set) {
                (x, y)
            } else if y.set.is_proper_subset_of(x.set) {
                (y, x)
            } else {
                return None;
            };
            let dr = y.rank as i64 - x.rank as i64;
            let ds = y.set.len() as i64 - x.set.len() as i64;
            (!(0 < dr && dr < ds)).then_some((x, y, dr, ds))
        });
        let z2 = match z2_bad {
            None => ZCheck { axiom: "Z2", passed: true, witness: vec![], detail: String::new() },
            Some((x, y, dr, ds)) => ZCheck {
                axiom: "Z2",
                passed: false,
                witness: vec![g.labels_of(x.set), g.labels_of(y.set)],
                detail: format!(
                    "{} ⊊ {} but rank difference {dr} is not strictly between 0 and {ds}",
                    g.fmt_set(x.set),
                    g.fmt_set(y.set)
                ),
            },
        };

        let z3_bad = pairs.par_iter().find_map_first(|&(i, j)| {
            let (x, y) = (self.flats[i], self.flats[j]);
            let (jn, mt) = (self.join(x.set, y.set)?, self.meet(x.set, y.set)?);
            let extra = ((x.set & y.set) - mt.set).len() as u32;
            (x.rank + y.rank < jn.rank + mt.rank + extra).then_some((x, y))
        });
        let z3 = match z3_bad {
            None => ZCheck { axiom: "Z3", passed: true, witness: vec![], detail: String::new() },
            Some((x, y)) => ZCheck {
                axiom: "Z3",
                passed: false,
                witness: vec![g.labels_of(x.set), g.labels_of(y.set)],
                detail: format!("{} and {} violate the join/meet inequality", g.fmt_set(x.set), g.fmt_set(y.set)),
            },
        };

        ZReport { checks: vec![z0, z1, z2, z3] }
    }

    /// 0_Z = ∅ and 1_Z = E.
    pub fn non_degenerate(&self) -> bool {
        self.bottom().is_some_and(|b| b.set.is_empty()) && self.top().is_some_and(|t| t.set == self.ground.full())
    }

    fn require_non_degenerate(&self) -> Result<()> {
        if self.non_degenerate() {
            Ok(())
        } else {
            Err(Error::DegenerateLattice)
        }
    }

    /// F^X, the meet of all flats containing X.
    pub fn f_upper(&self, x: Subset) -> Result<Flat> {
        let inter = self.flats.iter().filter(|f| x.is_subset_of(f.set)).fold(self.ground.full(), |a, f| a & f.set);
        self.meet_of(inter).ok_or_else(|| Error::ZAxiomViolation {
            axiom: "Z0",
            detail: format!("no meet of the flats above {}", self.ground.fmt_set(x)),
        })
    }

    /// Whether X is a union of circuits, decided on the lattice alone:
    /// ρ(F) + |X \ F| > ρ(F^X) for every F ⊊ F^X in Z. Returns F^X too.
    pub fn is_cyclic_set(&self, x: Subset) -> Result<(bool, Subset)> {
        self.require_non_degenerate()?;
        let top = self.f_upper(x)?;
        // for cyclic X the meet is cl(X), so it has to contain X
        let ok = x.is_subset_of(top.set)
            && self
                .flats
                .iter()
                .filter(|f| f.set.is_proper_subset_of(top.set))
                .all(|f| f.rank + (x - f.set).len() as u32 > top.rank);
        Ok((ok, top.set))
    }

    /// Z(M|X) = { X ∩ F cyclic : F in Z, F ⊆ F^X }, with ρ(Y) = ρ(F^Y),
    /// on the ground set X.
    pub fn restricted_lattice(&self, x: Subset) -> Result<CyclicFlatLattice> {
        let (cyclic, fx) = self.is_cyclic_set(x)?;
        if !cyclic {
            return Err(Error::NotCyclic(self.ground.fmt_set(x)));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for f in self.flats.iter().filter(|f| f.set.is_subset_of(fx)) {
            let y = x & f.set;
            if seen.insert(y) && self.is_cyclic_set(y)?.0 {
                out.push((compress(y, x), self.f_upper(y)?.rank));
            }
        }
        CyclicFlatLattice::new(Ground::new(self.ground.labels_of(x))?, out)
    }

    /// (n_X, k_X, d_X) for a cyclic set X, with
    /// d_X = n_X - k_X + 1 - max { η(Y) : Y in Z(M|X), Y ≠ X } (empty max = 0).
    pub fn params_via_z(&self, x: Subset) -> Result<LocalParams> {
        let zx = self.restricted_lattice(x)?;
        let n = x.len() as u32;
        let k = zx.top().map_or(0, |t| t.rank);
        let full = zx.ground.full();
        let eta = zx.flats.iter().filter(|f| f.set != full).map(|f| f.set.len() as u32 - f.rank).max().unwrap_or(0);
        Ok(LocalParams { n, k, d: (k > 0).then(|| n - k + 1 - eta) })
    }

    /// Minimum distance of the whole matroid, valid for degenerate lattices
    /// too: n - k + 1 - max { η(F) : F in Z, ρ(F) < k }. With coloops the
    /// top flat is smaller than E, and k = ρ(1_Z) + |E \ 1_Z|.
    pub fn min_distance(&self) -> Option<u32> {
        let n = self.ground.len() as u32;
        let k = self.rank_formula(self.ground.full());
        if k == 0 {
            return None;
        }
        let eta = self.flats.iter().filter(|f| f.rank < k).map(|f| f.set.len() as u32 - f.rank).max().unwrap_or(0);
        Some(n - k + 1 - eta)
    }

    /// |X| = ρ(1_Z) and |X ∩ F| <= ρ(F) for every F in Z.
    pub fn is_information_set(&self, x: Subset) -> Result<bool> {
        self.require_non_degenerate()?;
        let k = self.top().map_or(0, |t| t.rank);
        Ok(x.len() as u32 == k && self.flats.iter().all(|f| (x & f.set).len() as u32 <= f.rank))
    }

    /// DOT rendering of the Hasse diagram with "(set,rank)" node labels.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph Z {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, f) in self.flats.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"({},{})\"];\n", self.ground.fmt_set(f.set), f.rank));
        }
        for &(a, b) in &self.hasse {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        let j = LatticeJson {
            ground: self.ground.labels().to_vec(),
            flats: self.flats.iter().map(|f| FlatJson { set: self.ground.labels_of(f.set), rank: f.rank }).collect(),
        };
        serde_json::to_value(j).expect("lattice serializes")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let j: LatticeJson = serde_json::from_value(v.clone())?;
        CyclicFlatLattice::from_labels(j.ground, j.flats.into_iter().map(|f| (f.set, f.rank)))
    }
}

impl Serialize for CyclicFlatLattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Cover relation of the containment order.
fn hasse_diagram(fs: &[Flat]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (j, hi) in fs.iter().enumerate() {
        let below: Vec<usize> = (0..fs.len()).filter(|&i| fs[i].set.is_proper_subset_of(hi.set)).collect();
        for &i in &below {
            if !below.iter().any(|&m| fs[i].set.is_proper_subset_of(fs[m].set)) {
                out.push((i, j));
            }
        }
    }
    out.sort_unstable();
    out
}

/// All cyclic flats of M with their ranks.
pub fn cyclic_flats(m: &Matroid) -> Result<CyclicFlatLattice> {
    let n = m.len();
    if n > LATTICE_LIMIT {
        return Err(Error::GroundTooLarge { n, limit: LATTICE_LIMIT, what: "cyclic-flat enumeration" });
    }
    let sets: Vec<Subset> = if n <= RAW_SCAN_LIMIT {
        (0..1u64 << n).into_par_iter().map(Subset).filter(|&x| m.is_cyclic_flat(x)).collect()
    } else {
        let mut flats: HashSet<Subset> = HashSet::new();
        let mut frontier = vec![m.closure(Subset::EMPTY)];
        flats.insert(frontier[0]);
        while !frontier.is_empty() {
            let next: Vec<Subset> = frontier
                .par_iter()
                .flat_map_iter(|&f| (m.full() - f).iter().map(move |y| (f, y)))
                .map(|(f, y)| m.closure(f.with(y)))
                .collect();
            frontier = next.into_iter().filter(|g| flats.insert(*g)).collect();
        }
        flats.into_par_iter().filter(|&f| m.is_cyclic(f)).collect()
    };
    CyclicFlatLattice::new(m.ground().clone(), sets.into_iter().map(|x| (x, m.rank(x))))
}

/// The matroid whose cyclic flats and ranks are Z. Fails on the first
/// axiom that does not hold.
pub fn matroid_from_z(z: &CyclicFlatLattice) -> Result<Matroid> {
    if let Some(c) = z.check_z_axioms().first_failure() {
        return Err(Error::ZAxiomViolation { axiom: c.axiom, detail: c.detail.clone() });
    }
    Ok(Matroid::from_lattice_unchecked(z))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::matroid::tests::dss_matrix;

    pub(crate) fn dss_lattice() -> CyclicFlatLattice {
        CyclicFlatLattice::from_labels(1..=9, [
            (vec![], 0),
            (vec![1, 2, 5], 2),
            (vec![2, 6, 7], 2),
            (vec![3, 5, 7], 2),
            (vec![1, 3, 6], 2),
            (vec![4, 8, 9], 2),
            (vec![1, 2, 3, 5, 6, 7], 3),
            (vec![1, 2, 4, 5, 8, 9], 3),
            ((1..=9).collect(), 4),
        ])
        .unwrap()
    }

    fn dss() -> Matroid {
        Matroid::from_matrix(&dss_matrix())
    }

    #[test]
    fn dss_lattice_matches() {
        let z = cyclic_flats(&dss()).unwrap();
        assert_eq!(z, dss_lattice());
        assert_eq!(z.hasse().len(), 13);
        assert!(z.check_z_axioms().passed());
    }

    #[test]
    fn uniform_and_free_lattices() {
        let z = cyclic_flats(&Matroid::uniform(6, 3).unwrap()).unwrap();
        assert_eq!(z.flats(), &[Flat { set: Subset::EMPTY, rank: 0 }, Flat { set: Subset::full(6), rank: 3 }]);
        let f = cyclic_flats(&Matroid::free(4).unwrap()).unwrap();
        assert_eq!(f.flats(), &[Flat { set: Subset::EMPTY, rank: 0 }]);
        assert!(!f.non_degenerate());
        assert!(z.non_degenerate());
    }

    #[test]
    fn closure_expansion_agrees_with_raw_scan() {
        // 13 elements forces closure expansion; compare with a direct filter
        let m = Matroid::uniform(4, 2).unwrap().direct_sum(&Matroid::from_matrix(&dss_matrix()), true).unwrap();
        assert_eq!(m.len(), 13);
        let z = cyclic_flats(&m).unwrap();
        let raw: Vec<Subset> = Subset::all(13).filter(|&x| m.is_cyclic_flat(x)).collect();
        assert_eq!(z.len(), raw.len());
        assert!(raw.iter().all(|&x| z.contains(x)));
    }

    #[test]
    fn round_trip_through_rank_formula() {
        let m = dss();
        let back = matroid_from_z(&dss_lattice()).unwrap();
        assert!(back.equals(&m).unwrap());
        assert_eq!(cyclic_flats(&back).unwrap(), dss_lattice());
        let u = CyclicFlatLattice::from_labels(1..=5, [(vec![], 0), ((1..=5).collect(), 2)]).unwrap();
        assert!(matroid_from_z(&u).unwrap().equals(&Matroid::uniform(5, 2).unwrap()).unwrap());
    }

    #[test]
    fn altered_rank_breaks_z2() {
        let z = dss_lattice();
        let g = z.ground().clone();
        let altered = CyclicFlatLattice::new(
            g.clone(),
            z.flats().iter().map(|f| (f.set, if f.set == g.set([1, 2, 5]).unwrap() { 3 } else { f.rank })),
        )
        .unwrap();
        let r = altered.check_z_axioms();
        assert!(!r.get("Z2").unwrap().passed);
        assert!(matches!(matroid_from_z(&altered), Err(Error::ZAxiomViolation { axiom: "Z2", .. })));
    }

    #[test]
    fn cyclic_sets_via_lattice() {
        let z = dss_lattice();
        let g = z.ground().clone();
        let y1 = g.set([1, 2, 3, 5, 6, 7]).unwrap();
        assert_eq!(z.is_cyclic_set(g.set([1, 2, 3, 7]).unwrap()).unwrap(), (true, y1));
        assert_eq!(z.is_cyclic_set(g.set([1, 2, 3]).unwrap()).unwrap(), (false, y1));
        assert!(z.is_cyclic_set(Subset::EMPTY).unwrap().0);
        let free = cyclic_flats(&Matroid::free(3).unwrap()).unwrap();
        assert!(matches!(free.is_cyclic_set(Subset::EMPTY), Err(Error::DegenerateLattice)));
    }

    #[test]
    fn restricted_lattices() {
        let z = dss_lattice();
        let g = z.ground().clone();
        let x = g.set([1, 2, 3, 7]).unwrap();
        let zx = z.restricted_lattice(x).unwrap();
        assert_eq!(zx.flats(), &[Flat { set: Subset::EMPTY, rank: 0 }, Flat { set: Subset::full(4), rank: 3 }]);
        assert_eq!(z.restricted_lattice(g.full()).unwrap(), z);
        assert!(matches!(z.restricted_lattice(g.set([1, 2, 3]).unwrap()), Err(Error::NotCyclic(_))));

        // Y_1 against a direct enumeration of the restriction
        let y1 = g.set([1, 2, 3, 5, 6, 7]).unwrap();
        let direct = cyclic_flats(&dss().restriction(y1).unwrap()).unwrap();
        let via = z.restricted_lattice(y1).unwrap();
        assert_eq!(via, direct);
        assert_eq!(via.len(), 6);
    }

    #[test]
    fn params_from_lattice() {
        let z = dss_lattice();
        let g = z.ground().clone();
        assert_eq!(z.params_via_z(g.full()).unwrap(), LocalParams { n: 9, k: 4, d: Some(3) });
        assert_eq!(z.params_via_z(g.set([1, 2, 3, 7]).unwrap()).unwrap(), LocalParams { n: 4, k: 3, d: Some(2) });
        assert_eq!(
            z.params_via_z(g.set([1, 2, 3, 5, 6, 7]).unwrap()).unwrap(),
            LocalParams { n: 6, k: 3, d: Some(3) }
        );
        assert_eq!(z.min_distance(), Some(3));
    }

    #[test]
    fn information_sets_from_lattice() {
        let z = dss_lattice();
        let g = z.ground().clone();
        assert!(z.is_information_set(g.set([1, 2, 3, 4]).unwrap()).unwrap());
        assert!(!z.is_information_set(g.set([1, 2, 8, 9]).unwrap()).unwrap());
        assert!(!z.is_information_set(g.set([1, 2, 3]).unwrap()).unwrap());
    }

    #[test]
    fn join_and_meet_match_closure_and_core() {
        let m = dss();
        let z = cyclic_flats(&m).unwrap();
        for a in z.flats() {
            for b in z.flats() {
                assert_eq!(z.join(a.set, b.set).unwrap().set, m.closure(a.set | b.set));
                assert_eq!(z.meet(a.set, b.set).unwrap().set, m.cyclic_core(a.set & b.set));
            }
        }
    }

    #[test]
    fn dot_and_json() {
        let z = dss_lattice();
        let dot = z.to_dot();
        assert_eq!(dot.matches("[label=").count(), 9);
        assert!(dot.contains("({1,2,5},2)"));
        assert!(dot.contains("(∅,0)"));
        assert_eq!(CyclicFlatLattice::from_json(&z.to_json()).unwrap(), z);
    }
}
