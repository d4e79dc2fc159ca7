//! Locality, availability and hierarchy on matroids, repair-set search, the
//! structure check for Singleton-optimal matroids, and the bound suite.

pub mod bounds;

use serde::Serialize;

pub use bounds::{bound_rows, classify_optimality, Achieved, BoundRow, CadambeVerdict, HLevel, Verdict};

use crate::error::{Error, Result};
use crate::matroid::{LocalParams, Matroid};
use crate::subset::{Label, Subset};
use crate::zlattice::cyclic_flats;

/// Exhaustive repair-set search up to this many elements; beyond it the
/// search is capped at [`SEARCH_BUDGET`] candidate evaluations.
pub const EXHAUSTIVE_SEARCH_LIMIT: usize = 20;
pub const SEARCH_BUDGET: usize = 200_000;
pub const STRUCTURE_SET_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Scope {
    #[serde(rename = "information-symbol")]
    Information,
    #[serde(rename = "systematic-symbol")]
    Systematic,
    #[serde(rename = "all-symbol")]
    All,
}

#[derive(Debug, Clone, Serialize)]
pub struct RepairSet {
    pub x: Label,
    pub members: Vec<Label>,
    #[serde(skip)]
    pub set: Subset,
    pub params: LocalParams,
    pub cyclic: bool,
}

impl RepairSet {
    fn new(m: &Matroid, x: usize, set: Subset) -> Self {
        RepairSet {
            x: m.ground().label(x).clone(),
            members: m.ground().labels_of(set),
            set,
            params: m.local_params(set),
            cyclic: m.is_cyclic(set),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SetCheck {
    pub repair_set: RepairSet,
    /// (i) x in R
    pub contains_x: bool,
    /// (ii) |R| <= r + δ - 1
    pub size_ok: bool,
    /// (iii) d_R >= δ
    pub distance_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalityCheck {
    pub x: Label,
    pub sets: Vec<SetCheck>,
    /// at least t sets were given
    pub count_ok: bool,
    /// (iv) pairwise intersections are exactly {x}
    pub disjoint_ok: bool,
    pub holds: bool,
}

fn check_coordinate(m: &Matroid, x: usize) -> Result<()> {
    if x >= m.len() {
        return Err(Error::UnknownCoordinate(format!("index {x}")));
    }
    Ok(())
}

/// Checks conditions (i)-(iv) for coordinate `x` with the given repair sets.
pub fn verify_locality(m: &Matroid, x: usize, sets: &[Subset], r: u32, delta: u32, t: usize) -> Result<LocalityCheck> {
    check_coordinate(m, x)?;
    for s in sets {
        if !s.is_subset_of(m.full()) {
            return Err(Error::UnknownCoordinate(format!("{:?}", *s - m.full())));
        }
    }
    let checks: Vec<SetCheck> = sets
        .iter()
        .map(|&s| {
            let rs = RepairSet::new(m, x, s);
            SetCheck {
                contains_x: s.contains(x),
                size_ok: (s.len() as u32) < r + delta,
                distance_ok: rs.params.d.is_some_and(|d| d >= delta),
                repair_set: rs,
            }
        })
        .collect();
    let disjoint_ok = sets
        .iter()
        .enumerate()
        .all(|(i, a)| sets[i + 1..].iter().all(|b| (*a & *b) == Subset::singleton(x)));
    let count_ok = sets.len() >= t;
    let holds = count_ok && disjoint_ok && checks.iter().all(|c| c.contains_x && c.size_ok && c.distance_ok);
    Ok(LocalityCheck { x: m.ground().label(x).clone(), sets: checks, count_ok, disjoint_ok, holds })
}

/// Picks `t` of `cands` meeting pairwise only in `x`, first in candidate order.
fn pack(cands: &[Subset], x: usize, t: usize) -> Option<Vec<Subset>> {
    fn go(cands: &[Subset], x: usize, t: usize, from: usize, used: Subset, acc: &mut Vec<Subset>) -> bool {
        if acc.len() == t {
            return true;
        }
        for i in from..cands.len() {
            let c = cands[i];
            if (c & used).is_empty() {
                acc.push(c);
                if go(cands, x, t, i + 1, used | c.without(x), acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    go(cands, x, t, 0, Subset::EMPTY, &mut acc).then_some(acc)
}

/// Searches for `t` repair sets of `x` with (r, δ)-locality, preferring
/// smaller sets and then lexicographic order. `Ok(None)` is definitive: no
/// such sets exist (within the budget when the ground set is large, where
/// running out yields [`Error::SearchBudgetExceeded`] instead). A loop
/// coordinate has no repair sets.
pub fn find_repair_sets(m: &Matroid, x: usize, r: u32, delta: u32, t: usize) -> Result<Option<Vec<RepairSet>>> {
    check_coordinate(m, x)?;
    if m.rank(Subset::singleton(x)) == 0 || t == 0 {
        return Ok((t == 0).then(Vec::new));
    }
    let budgeted = m.len() > EXHAUSTIVE_SEARCH_LIMIT;
    let max_size = (r + delta - 1) as usize;
    let others = m.full().without(x);
    let mut cands: Vec<Subset> = Vec::new();
    let mut evaluated = 0usize;
    for size in 1..=max_size.min(m.len()) {
        let mut level: Vec<Subset> = others.combinations(size - 1).into_iter().map(|s| s.with(x)).collect();
        if budgeted && evaluated + level.len() > SEARCH_BUDGET {
            return Err(Error::SearchBudgetExceeded(SEARCH_BUDGET));
        }
        evaluated += level.len();
        level.sort_by(|a, b| a.lex_cmp(*b));
        cands.extend(level.into_iter().filter(|&s| m.local_params(s).d.is_some_and(|d| d >= delta)));
        if let Some(found) = pack(&cands, x, t) {
            return Ok(Some(found.into_iter().map(|s| RepairSet::new(m, x, s)).collect()));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalityReport {
    pub scope: Option<Scope>,
    pub n: u32,
    pub k: u32,
    pub d: Option<u32>,
    pub r: u32,
    pub delta: u32,
    pub t: usize,
    /// Coordinates for which repair sets were found, with the sets.
    pub coordinates: Vec<CoordinateLocality>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoordinateLocality {
    pub x: Label,
    pub repair_sets: Option<Vec<RepairSet>>,
}

/// Runs the repair-set search on every coordinate and reports the strongest
/// scope achieved: all-symbol when every coordinate succeeded, information-
/// symbol when the successful ones contain a basis.
pub fn analyze_locality(m: &Matroid, r: u32, delta: u32, t: usize) -> Result<LocalityReport> {
    let mut coords = Vec::new();
    let mut ok = Subset::EMPTY;
    for x in 0..m.len() {
        let found = find_repair_sets(m, x, r, delta, t)?;
        if found.is_some() {
            ok = ok.with(x);
        }
        coords.push(CoordinateLocality { x: m.ground().label(x).clone(), repair_sets: found });
    }
    let k = m.full_rank();
    let scope = if ok == m.full() {
        Some(Scope::All)
    } else if m.rank(ok) == k && k > 0 {
        Some(Scope::Information)
    } else {
        None
    };
    Ok(LocalityReport {
        scope,
        n: m.len() as u32,
        k,
        d: m.min_distance(),
        r,
        delta,
        t,
        coordinates: coords,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Level {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub t: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct HierarchyCheck {
    pub holds: bool,
    /// The first-level sets X_1..X_t when the check holds.
    pub witness: Vec<Vec<Label>>,
}

fn hierarchy_sets(m: &Matroid, x: usize, levels: &[Level]) -> Option<Vec<Subset>> {
    if !m.is_non_degenerate() {
        return None;
    }
    let Some((lv, rest)) = levels.split_first() else {
        return Some(Vec::new());
    };
    let others = m.full().without(x);
    let mut cands = Vec::new();
    for size in 1..=(lv.n as usize).min(m.len()) {
        let mut level: Vec<Subset> = others.combinations(size - 1).into_iter().map(|s| s.with(x)).collect();
        level.sort_by(|a, b| a.lex_cmp(*b));
        for s in level {
            let p = m.local_params(s);
            if p.k != lv.k || !p.d.is_some_and(|d| d >= lv.d) {
                continue;
            }
            let sub = m.restriction(s).expect("subset of ground");
            let xi = (s & Subset((1u64 << x) - 1)).len();
            if hierarchy_sets(&sub, xi, rest).is_some() {
                cands.push(s);
            }
        }
    }
    pack(&cands, x, lv.t)
}

/// Whether coordinate `x` has hierarchical availability with the given
/// levels, outermost first. The matroid and every witness restriction must
/// be non-degenerate; an empty level list asks only for that.
pub fn verify_hierarchy(m: &Matroid, x: usize, levels: &[Level]) -> Result<HierarchyCheck> {
    check_coordinate(m, x)?;
    if m.len() > EXHAUSTIVE_SEARCH_LIMIT {
        return Err(Error::GroundTooLarge { n: m.len(), limit: EXHAUSTIVE_SEARCH_LIMIT, what: "hierarchy search" });
    }
    Ok(match hierarchy_sets(m, x, levels) {
        Some(sets) => HierarchyCheck { holds: true, witness: sets.iter().map(|&s| m.ground().labels_of(s)).collect() },
        None => HierarchyCheck { holds: false, witness: Vec::new() },
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureCheck {
    pub condition: &'static str,
    pub passed: bool,
    pub witness: Vec<Vec<Label>>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub ceil_k_over_r: u32,
    pub distinct_repair_sets: usize,
    pub checks: Vec<StructureCheck>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, condition: &str) -> Option<&StructureCheck> {
        self.checks.iter().find(|c| c.condition == condition)
    }
}

/// Evaluates the necessary conditions (i), (ii a-b) and (iii c-f) that a
/// Singleton-optimal all-symbol matroid imposes on its repair sets.
/// `repair[x]` is the repair set of element x. Nontrivial unions R_Y are
/// enumerated over families of distinct repair sets, where no member is
/// covered by the others.
pub fn check_structure_theorem(m: &Matroid, repair: &[Subset], r: u32, delta: u32) -> Result<StructureReport> {
    let k = m.full_rank();
    if r >= k {
        return Err(Error::BadParams(format!("the structure conditions need r < k, got r={r}, k={k}")));
    }
    if repair.len() != m.len() {
        return Err(Error::Shape(format!("{} repair sets for {} elements", repair.len(), m.len())));
    }
    let g = m.ground();
    for (x, &s) in repair.iter().enumerate() {
        if !s.contains(x) || !s.is_subset_of(m.full()) {
            return Err(Error::BadParams(format!("repair set {} does not contain {}", g.fmt_set(s), g.label(x))));
        }
    }
    let z = cyclic_flats(m)?;
    let mut distinct: Vec<Subset> = repair.to_vec();
    distinct.sort_by(|a, b| a.lex_cmp(*b));
    distinct.dedup();
    if distinct.len() > STRUCTURE_SET_LIMIT {
        return Err(Error::GroundTooLarge {
            n: distinct.len(),
            limit: STRUCTURE_SET_LIMIT,
            what: "distinct repair sets in the structure check",
        });
    }
    let c = k.div_ceil(r) as usize;
    let eta = |s: Subset| s.len() as u32 - m.rank(s);
    let pass = |condition| StructureCheck { condition, passed: true, witness: vec![], detail: String::new() };
    let fail = |condition, sets: &[Subset], detail: String| StructureCheck {
        condition,
        passed: false,
        witness: sets.iter().map(|&s| g.labels_of(s)).collect(),
        detail,
    };
    let mut checks = Vec::new();

    let bottom = z.bottom().map(|b| b.set);
    checks.push(match bottom {
        Some(b) if b.is_empty() => pass("i"),
        Some(b) => fail("i", &[b], "bottom cyclic flat is not empty".into()),
        None => fail("i", &[], "no bottom cyclic flat".into()),
    });

    let is_atom = |s: Subset| {
        z.contains(s)
            && bottom.is_some_and(|b| b.is_proper_subset_of(s))
            && !z.flats().iter().any(|f| bottom.is_some_and(|b| b.is_proper_subset_of(f.set)) && f.set.is_proper_subset_of(s))
    };
    checks.push(match distinct.iter().find(|&&s| !is_atom(s)) {
        None => pass("ii.a"),
        Some(&s) => fail("ii.a", &[s], format!("{} is not an atom of the lattice", g.fmt_set(s))),
    });
    checks.push(match distinct.iter().find(|&&s| eta(s) != delta - 1) {
        None => pass("ii.b"),
        Some(&s) => fail("ii.b", &[s], format!("nullity of {} is {}, expected {}", g.fmt_set(s), eta(s), delta - 1)),
    });

    // nontrivial families of distinct repair sets
    let mut fams: Vec<Vec<Subset>> = Vec::new();
    for mask in 1u64..1 << distinct.len() {
        let fam: Vec<Subset> = Subset(mask).iter().map(|i| distinct[i]).collect();
        let nontrivial = fam.iter().enumerate().all(|(i, &a)| {
            let rest = fam.iter().enumerate().filter(|&(j, _)| j != i).fold(Subset::EMPTY, |u, (_, &b)| u | b);
            !a.is_subset_of(rest)
        });
        if nontrivial {
            fams.push(fam);
        }
    }
    let union = |fam: &[Subset]| fam.iter().fold(Subset::EMPTY, |u, &b| u | b);
    let find = |pred: &dyn Fn(&[Subset]) -> Option<String>| fams.iter().find_map(|f| pred(f).map(|d| (f.clone(), d)));

    let cond_c = find(&|f| (f.len() < c && !z.contains(union(f))).then(|| "union is not a cyclic flat".to_string()));
    let cond_d = find(&|f| {
        let u = union(f);
        let want = u.len() as i64 - f.len() as i64 * (delta as i64 - 1);
        (f.len() < c && m.rank(u) as i64 != want).then(|| format!("rank of union is {}, expected {want}", m.rank(u)))
    });
    let cond_e = find(&|f| {
        if f.len() > c {
            return None;
        }
        f.iter().enumerate().find_map(|(i, &a)| {
            let rest = f.iter().enumerate().filter(|&(j, _)| j != i).fold(Subset::EMPTY, |u, (_, &b)| u | b);
            let inter = (a & rest).len() as i64;
            (inter > a.len() as i64 - delta as i64)
                .then(|| format!("{} meets the others in {inter} elements", g.fmt_set(a)))
        })
    });
    let cond_f = find(&|f| {
        let u = union(f);
        let above: Vec<Subset> = z.flats().iter().filter(|fl| u.is_subset_of(fl.set)).map(|fl| fl.set).collect();
        (f.len() >= c && above != vec![m.full()]).then(|| format!("{} cyclic flats contain the union", above.len()))
    });
    for (name, res) in [("iii.c", cond_c), ("iii.d", cond_d), ("iii.e", cond_e), ("iii.f", cond_f)] {
        checks.push(match res {
            None => pass(name),
            Some((fam, detail)) => fail(name, &fam, detail),
        });
    }

    Ok(StructureReport { ceil_k_over_r: c as u32, distinct_repair_sets: distinct.len(), checks })
}
