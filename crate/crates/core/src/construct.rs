//! Constructions: matroids from repair-set systems via cyclic flats, their
//! gammoid digraphs and verified linear representations, evaluation codes
//! with a good polynomial, and random LRCs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::codes::{CodeParams, LinearCode};
use crate::error::{Condition, Error, Result};
use crate::gf::{prime_power, Field};
use crate::linalg::Matrix;
use crate::lrc::bounds::{d_max_lower_bound, in_p, prakash};
use crate::lrc::{verify_locality, LocalityCheck};
use crate::matroid::gammoid::Digraph;
use crate::matroid::{Matroid, EXHAUSTIVE_LIMIT};
use crate::subset::{Ground, Label, Subset};
use crate::zlattice::{cyclic_flats, matroid_from_z, CyclicFlatLattice, LATTICE_LIMIT};

/// Every union of repair sets is enumerated, so m is capped.
pub const MAX_REPAIR_SETS: usize = 16;

/// Repair sets F_1..F_m covering E with assigned ranks and rank(E).
#[derive(Debug, Clone, PartialEq)]
pub struct RepairSetSystem {
    ground: Ground,
    sets: Vec<Subset>,
    ranks: Vec<u32>,
    rank_e: u32,
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    #[serde(rename = "E")]
    e: Vec<Label>,
    sets: Vec<SetJson>,
    #[serde(rename = "rankE")]
    rank_e: u32,
}

#[derive(Serialize, Deserialize)]
struct SetJson {
    #[serde(rename = "F")]
    f: Vec<Label>,
    rank: u32,
}

impl Serialize for RepairSetSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SystemJson {
            e: self.ground.labels().to_vec(),
            sets: self
                .sets
                .iter()
                .zip(&self.ranks)
                .map(|(&f, &rank)| SetJson { f: self.ground.labels_of(f), rank })
                .collect(),
            rank_e: self.rank_e,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RepairSetSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SystemJson::deserialize(d)?;
        let ground = Ground::new(j.e).map_err(serde::de::Error::custom)?;
        let sets = j
            .sets
            .into_iter()
            .map(|s| Ok((ground.set(s.f)?, s.rank)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        RepairSetSystem::new(ground, sets, j.rank_e).map_err(serde::de::Error::custom)
    }
}

impl RepairSetSystem {
    /// Only shape is checked here; [`validate`](Self::validate) checks the
    /// construction conditions.
    pub fn new(ground: Ground, sets: Vec<(Subset, u32)>, rank_e: u32) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::BadParams("a repair-set system needs at least one set".into()));
        }
        if sets.len() > MAX_REPAIR_SETS {
            return Err(Error::GroundTooLarge { n: sets.len(), limit: MAX_REPAIR_SETS, what: "repair sets" });
        }
        if let Some((s, _)) = sets.iter().find(|(s, _)| !s.is_subset_of(ground.full())) {
            return Err(Error::UnknownElement(format!("{:?}", *s - ground.full())));
        }
        let (sets, ranks) = sets.into_iter().unzip();
        Ok(RepairSetSystem { ground, sets, ranks, rank_e })
    }

    pub fn from_labels<L, S, I>(ground: impl IntoIterator<Item = L>, sets: impl IntoIterator<Item = (I, u32)>, rank_e: u32) -> Result<Self>
    where
        L: Into<Label>,
        S: Into<Label>,
        I: IntoIterator<Item = S>,
    {
        let ground = Ground::new(ground)?;
        let sets = sets.into_iter().map(|(f, r)| Ok((ground.set(f)?, r))).collect::<Result<Vec<_>>>()?;
        RepairSetSystem::new(ground, sets, rank_e)
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn rank_e(&self) -> u32 {
        self.rank_e
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    /// η(F_i) = |F_i| - ρ(F_i), saturating at 0 for invalid systems.
    pub fn nullity(&self, i: usize) -> u32 {
        (self.sets[i].len() as u32).saturating_sub(self.ranks[i])
    }

    /// s(x): indices of the sets containing element x.
    pub fn coverage(&self, x: usize) -> Vec<usize> {
        (0..self.m()).filter(|&i| self.sets[i].contains(x)).collect()
    }

    /// F_I for I given as a mask over set indices.
    pub fn union(&self, i: u64) -> Subset {
        Subset(i).iter().fold(Subset::EMPTY, |u, j| u | self.sets[j])
    }

    fn nullity_sum(&self, i: u64) -> u32 {
        Subset(i).iter().map(|j| self.nullity(j)).sum()
    }

    /// ρ(F_I) = min(|F_I| - Σ η(F_i), ρ(E)).
    pub fn union_rank(&self, i: u64) -> u32 {
        (self.union(i).len() as u32).saturating_sub(self.nullity_sum(i)).min(self.rank_e)
    }

    /// Checks coverage and conditions (i)-(iv) in that order.
    pub fn validate(&self) -> Result<()> {
        let g = &self.ground;
        let all = self.union((1u64 << self.m()) - 1);
        if all != g.full() {
            return Err(Error::ConditionViolated(
                Condition::Coverage,
                format!("{} is not covered", g.fmt_set(g.full() - all)),
            ));
        }
        for (i, (&f, &r)) in self.sets.iter().zip(&self.ranks).enumerate() {
            if r == 0 || r >= f.len() as u32 {
                return Err(Error::ConditionViolated(
                    Condition::I,
                    format!("F_{} = {} has rank {r}, need 0 < rank < {}", i + 1, g.fmt_set(f), f.len()),
                ));
            }
        }
        for (i, &r) in self.ranks.iter().enumerate() {
            if r >= self.rank_e {
                return Err(Error::ConditionViolated(
                    Condition::II,
                    format!("F_{} has rank {r}, not below rank(E) = {}", i + 1, self.rank_e),
                ));
            }
        }
        let total: u32 = (0..self.m()).map(|i| self.nullity(i)).sum();
        if self.rank_e as i64 > g.len() as i64 - total as i64 {
            return Err(Error::ConditionViolated(
                Condition::III,
                format!("rank(E) = {} exceeds |E| - Σ η = {}", self.rank_e, g.len() as i64 - total as i64),
            ));
        }
        let full = (1u64 << self.m()) - 1;
        for j in 0..self.m() {
            let inter = (self.union(full & !(1 << j)) & self.sets[j]).len() as u32;
            if inter >= self.ranks[j] {
                return Err(Error::ConditionViolated(
                    Condition::IV,
                    format!("F_{} meets the other sets in {inter} elements, rank is {}", j + 1, self.ranks[j]),
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstructionParams {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub r: u32,
    pub delta: u32,
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub matroid: Matroid,
    pub lattice: CyclicFlatLattice,
    pub params: ConstructionParams,
}

/// The matroid whose cyclic flats are the unions F_I of rank below rank(E),
/// together with E.
pub fn construct_matroid(sys: &RepairSetSystem) -> Result<Construction> {
    sys.validate()?;
    let m = sys.m();
    let mut flats = Vec::new();
    let mut max_eta = 0;
    for i in 0..1u64 << m {
        let rank = sys.union_rank(i);
        if rank < sys.rank_e {
            flats.push((sys.union(i), rank));
            max_eta = max_eta.max(sys.nullity_sum(i));
        }
    }
    flats.push((sys.ground.full(), sys.rank_e));
    let lattice = CyclicFlatLattice::new(sys.ground.clone(), flats)?;
    let matroid = matroid_from_z(&lattice)?;
    let n = sys.ground.len() as u32;
    let k = sys.rank_e;
    let params = ConstructionParams {
        n,
        k,
        d: n - k + 1 - max_eta,
        r: *sys.ranks.iter().max().expect("nonempty"),
        delta: 1 + (0..m).map(|i| sys.nullity(i)).min().expect("nonempty"),
    };
    Ok(Construction { matroid, lattice, params })
}

/// The three-layer digraph E -> H -> T whose gammoid is the constructed
/// matroid.
#[derive(Debug, Clone)]
pub struct GammoidGraph {
    pub digraph: Digraph,
    pub sources: Vec<Label>,
    pub middle: Vec<Label>,
    pub sinks: Vec<Label>,
}

impl GammoidGraph {
    pub fn matroid(&self) -> Result<Matroid> {
        Matroid::from_gammoid(&self.digraph, &self.sources, &self.sinks)
    }

    pub fn to_dot(&self) -> String {
        self.digraph.to_dot(&[self.sources.clone(), self.middle.clone(), self.sinks.clone()])
    }
}

/// Middle-layer vertices are `H{i}.{j}` (the j-th copy for F_i) and `h.{y}`
/// for elements y in two or more sets; sinks are `t1..tk`.
pub fn gammoid_graph(sys: &RepairSetSystem) -> Result<GammoidGraph> {
    sys.validate()?;
    let g = &sys.ground;
    let cov: Vec<Vec<usize>> = (0..g.len()).map(|x| sys.coverage(x)).collect();
    let shared: Vec<usize> = (0..g.len()).filter(|&x| cov[x].len() >= 2).collect();
    let mut middle: Vec<Label> = Vec::new();
    let mut arcs: Vec<(Label, Label)> = Vec::new();
    for i in 0..sys.m() {
        let multi = sys.sets[i].iter().filter(|&x| cov[x].len() >= 2).count() as u32;
        let size = sys.ranks[i].saturating_sub(multi);
        for j in 1..=size {
            let h = Label::new(format!("H{}.{j}", i + 1));
            for x in sys.sets[i].iter().filter(|&x| cov[x] == [i]) {
                arcs.push((g.label(x).clone(), h.clone()));
            }
            middle.push(h);
        }
    }
    for &y in &shared {
        let h = Label::new(format!("h.{}", g.label(y)));
        for x in 0..g.len() {
            if cov[x].iter().all(|i| cov[y].contains(i)) {
                arcs.push((g.label(x).clone(), h.clone()));
            }
        }
        middle.push(h);
    }
    let sinks: Vec<Label> = (1..=sys.rank_e).map(|t| Label::new(format!("t{t}"))).collect();
    for h in &middle {
        for t in &sinks {
            arcs.push((h.clone(), t.clone()));
        }
    }
    let sources = g.labels().to_vec();
    let vertices: Vec<Label> = sources.iter().chain(&middle).chain(&sinks).cloned().collect();
    let digraph = Digraph::new(vertices, arcs)?;
    Ok(GammoidGraph { digraph, sources, middle, sinks })
}

#[derive(Debug, Clone)]
pub struct Representation {
    pub generator: Matrix,
    /// Zero-based index of the draw that verified.
    pub attempt: u32,
    pub seed: u64,
}

/// Equality of matroids on the same labels, exhaustive up to 16 elements and
/// through the cyclic-flat lattices (flats and ranks) above that.
fn same_matroid(a: &Matroid, b: &Matroid, lattice_b: &CyclicFlatLattice) -> Result<bool> {
    if a.len() <= EXHAUSTIVE_LIMIT {
        return a.equals(b);
    }
    let za = cyclic_flats(a)?;
    if za.len() != lattice_b.len() {
        return Ok(false);
    }
    Ok(za.flats().iter().all(|f| lattice_b.contains(f.set) && lattice_b.rank_of_flat(f.set) == Some(f.rank)))
}

/// Draws random arc weights on the gammoid digraph and returns the first
/// generator matrix whose matroid equals the construction. G = B·A with A
/// supported on the E -> H arcs and B dense (H -> T is complete). Draw `i`
/// uses ChaCha8 seeded with `seed` on stream `i`.
pub fn represent(sys: &RepairSetSystem, field: &Field, seed: u64, attempts: u32) -> Result<Representation> {
    let target = construct_matroid(sys)?;
    let gg = gammoid_graph(sys)?;
    let n = gg.sources.len();
    if n > LATTICE_LIMIT {
        return Err(Error::GroundTooLarge { n, limit: LATTICE_LIMIT, what: "verified representation" });
    }
    let h = gg.middle.len();
    let k = gg.sinks.len();
    let q = field.order();
    let d = &gg.digraph;
    let support: Vec<(usize, usize)> = d
        .arcs()
        .iter()
        .filter(|&&(a, b)| a < n && b >= n && b < n + h)
        .map(|&(a, b)| (b - n, a))
        .collect();
    for attempt in 0..attempts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt as u64);
        let mut a = Matrix::zeros(field, h, n);
        for &(row, col) in &support {
            a.set(row, col, rng.gen_range(1..q));
        }
        let mut b = Matrix::zeros(field, k, h);
        for r in 0..k {
            for c in 0..h {
                b.set(r, c, rng.gen_range(1..q));
            }
        }
        let g = b.mul(&a)?.with_labels(sys.ground.clone())?;
        if same_matroid(&Matroid::from_matrix(&g), &target.matroid, &target.lattice)? {
            return Ok(Representation { generator: g, attempt, seed });
        }
    }
    Err(Error::RepresentationNotFound { q, attempts, n })
}

#[derive(Debug, Clone, Serialize)]
pub struct TamoBargReport {
    pub q: u32,
    pub r: u32,
    pub delta: u32,
    pub k: u32,
    /// Elements of the subgroup A, as field element integers.
    pub subgroup: Vec<u32>,
    /// Coefficients of g, constant term first.
    pub good_polynomial: Vec<u32>,
    pub params: CodeParams,
    pub bound: i64,
    pub locality: Vec<LocalityCheck>,
}

#[derive(Debug, Clone)]
pub struct TamoBarg {
    pub code: LinearCode,
    /// The cosets of A, as coordinate sets.
    pub locality_sets: Vec<Subset>,
    pub report: TamoBargReport,
}

fn poly_mul(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

fn poly_eval(f: &Field, p: &[u32], x: u32) -> u32 {
    p.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Evaluation code over all of GF(q) (n = q) with locality sets the cosets
/// of an additive subgroup A of size r+δ-1, spanned over the prime field by
/// 1, α, ..., α^{j-1}. Row (j, i) of the generator evaluates g(x)^j x^i.
/// The reported parameters are measured on the resulting code.
pub fn tamo_barg(q: u32, r: u32, delta: u32, k: u32) -> Result<TamoBarg> {
    if r == 0 || delta < 2 || k == 0 {
        return Err(Error::BadParams(format!("need r >= 1, delta >= 2, k >= 1; got r={r}, delta={delta}, k={k}")));
    }
    let (p, m) = prime_power(q as u64).ok_or_else(|| Error::BadParams(format!("{q} is not a prime power")))?;
    let s = r + delta - 1;
    if !k.is_multiple_of(r) {
        return Err(Error::DivisibilityViolated(format!("r = {r} does not divide k = {k}")));
    }
    if !q.is_multiple_of(s) {
        return Err(Error::DivisibilityViolated(format!("r+delta-1 = {s} does not divide n = {q}")));
    }
    // s | p^m forces s = p^j
    let j = (0..=m).find(|&j| (p as u32).pow(j) == s).expect("divisor of a prime power");
    let blocks = k / r;
    if j == m && blocks > 1 {
        return Err(Error::SubgroupUnavailable(format!(
            "the only additive subgroup of size {s} is GF({q}) itself, on which g vanishes; k/r must be 1"
        )));
    }
    let n = q;
    if (k + (delta - 1) * blocks) as u64 > n as u64 {
        return Err(Error::BadParams(format!("need k <= n - (delta-1)k/r, got n={n}, k={k}, r={r}, delta={delta}")));
    }
    let field = Field::with_order(q)?;
    // with base-p digit encoding the span of 1..α^{j-1} is {0, ..., p^j - 1}
    let subgroup: Vec<u32> = (0..s).collect();
    let mut g = vec![1u32];
    for &a in &subgroup {
        g = poly_mul(&field, &g, &[field.neg(a), 1]);
    }
    let mut entries = Vec::with_capacity((k * n) as usize);
    for jj in 0..blocks {
        for i in 0..r {
            for x in 0..n {
                let gx = field.pow(poly_eval(&field, &g, x), jj as u64);
                entries.push(field.mul(gx, field.pow(x, i as u64)));
            }
        }
    }
    let generator = Matrix::new(&field, k as usize, n as usize, entries, None)?;
    let code = LinearCode::new(generator);
    let params = code.params()?;
    // cosets a + A: elements sharing every digit above position j
    let mut locality_sets: Vec<Subset> = Vec::new();
    for c in 0..n / s {
        locality_sets.push(Subset::from_indices((c * s..(c + 1) * s).map(|x| x as usize)));
    }
    let mat = code.matroid();
    let locality = (0..n as usize)
        .map(|x| {
            let set = *locality_sets.iter().find(|s| s.contains(x)).expect("cosets partition");
            verify_locality(mat, x, &[set], r, delta, 1)
        })
        .collect::<Result<Vec<_>>>()?;
    let bound = prakash(n as i64, k as i64, r as i64, delta as i64)?;
    let report = TamoBargReport {
        q,
        r,
        delta,
        k,
        subgroup,
        good_polynomial: g,
        params,
        bound,
        locality,
    };
    Ok(TamoBarg { code, locality_sets, report })
}

#[derive(Debug, Clone, Serialize)]
pub struct RandomLrcReport {
    pub seed: u64,
    pub n: u32,
    pub k: u32,
    pub r: u32,
    pub delta: u32,
    pub q: u32,
    pub locality_sets: Vec<Vec<Label>>,
    /// Event A_i per locality set: every r_i columns of the block are independent.
    pub events_a: Vec<bool>,
    /// Event B: the generator has full rank k.
    pub event_b: bool,
    pub success: bool,
    /// n - k + 1 - ⌈k/r⌉(δ-1)
    pub target_d: i64,
    /// Measured by the drop-set definition when the code has positive rank.
    pub d: Option<u32>,
}

#[derive(Debug, Clone)]
pub struct RandomLrc {
    pub code: LinearCode,
    pub locality_sets: Vec<Subset>,
    pub report: RandomLrcReport,
}

/// Locality sets of size r+δ-1 (the last may be smaller, keeping
/// r_last = s_last - δ + 1 >= 1). Each block has r_i uniformly random columns
/// in GF(q)^k followed by δ-1 random combinations of them.
pub fn random_lrc(n: u32, k: u32, r: u32, delta: u32, field: &Field, seed: u64) -> Result<RandomLrc> {
    let (ni, ki, ri, di) = (n as i64, k as i64, r as i64, delta as i64);
    if !in_p(ni, ki, ri, di) {
        return Err(Error::OutsideP(format!("(n,k,r,delta) = ({n},{k},{r},{delta})")));
    }
    let s = (r + delta - 1) as usize;
    let mut sizes = vec![s; n as usize / s];
    if !(n as usize).is_multiple_of(s) {
        sizes.push(n as usize % s);
    }
    let last = *sizes.last().expect("n >= 1");
    if last < delta as usize {
        return Err(Error::BadParams(format!(
            "last locality set has {last} elements, leaving no information symbols for delta={delta}"
        )));
    }
    let rs: Vec<usize> = sizes.iter().map(|&si| si - delta as usize + 1).collect();
    if rs.iter().sum::<usize>() < k as usize {
        return Err(Error::BadParams(format!("locality sets carry rank at most {} < k = {k}", rs.iter().sum::<usize>())));
    }
    let q = field.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kk = k as usize;
    let mut g = Matrix::zeros(field, kk, n as usize);
    let mut locality_sets = Vec::new();
    let mut col = 0;
    for (&si, &ri) in sizes.iter().zip(&rs) {
        let start = col;
        for _ in 0..ri {
            for row in 0..kk {
                g.set(row, col, rng.gen_range(0..q));
            }
            col += 1;
        }
        for _ in 0..delta - 1 {
            let coeffs: Vec<u32> = (0..ri).map(|_| rng.gen_range(0..q)).collect();
            for row in 0..kk {
                let v = coeffs
                    .iter()
                    .enumerate()
                    .fold(0, |acc, (c, &a)| field.add(acc, field.mul(a, g.get(row, start + c))));
                g.set(row, col, v);
            }
            col += 1;
        }
        locality_sets.push(Subset::from_indices(start..start + si));
    }
    let events_a: Vec<bool> = locality_sets
        .iter()
        .zip(&rs)
        .map(|(set, &ri)| set.combinations(ri).iter().all(|&c| g.rank_of(c) == ri))
        .collect();
    let event_b = g.rank() == kk;
    let code = LinearCode::new(g);
    let d = code.matroid().min_distance();
    let report = RandomLrcReport {
        seed,
        n,
        k,
        r,
        delta,
        q,
        locality_sets: locality_sets.iter().map(|&s| code.ground().labels_of(s)).collect(),
        success: event_b && events_a.iter().all(|&a| a),
        events_a,
        event_b,
        target_d: d_max_lower_bound(ni, ki, ri, di)?,
        d,
    };
    Ok(RandomLrc { code, locality_sets, report })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn example_system() -> RepairSetSystem {
        RepairSetSystem::from_labels(
            1..=12,
            [(vec![1, 2, 3, 4], 3), (vec![3, 4, 5, 6], 3), (vec![7, 8, 9, 10], 3), (vec![10, 11, 12], 2)],
            7,
        )
        .unwrap()
    }

    #[test]
    fn example_construction() {
        let c = construct_matroid(&example_system()).unwrap();
        assert_eq!(c.params, ConstructionParams { n: 12, k: 7, d: 3, r: 3, delta: 2 });
        assert_eq!(c.lattice.len(), 13);
        assert!(c.lattice.check_z_axioms().passed());
        assert_eq!(c.matroid.min_distance(), Some(3));
    }

    #[test]
    fn condition_violations() {
        let one = RepairSetSystem::from_labels(1..=4, [(vec![1, 2, 3, 4], 3)], 3).unwrap();
        assert!(matches!(construct_matroid(&one), Err(Error::ConditionViolated(Condition::II, _))));
        let gap = RepairSetSystem::from_labels(1..=5, [(vec![1, 2, 3], 2), (vec![3, 4], 1)], 3).unwrap();
        assert!(matches!(gap.validate(), Err(Error::ConditionViolated(Condition::Coverage, _))));
        let full = RepairSetSystem::from_labels(1..=4, [(vec![1, 2], 2), (vec![3, 4], 1)], 3).unwrap();
        assert!(matches!(full.validate(), Err(Error::ConditionViolated(Condition::I, _))));
        let big = RepairSetSystem::from_labels(1..=4, [(vec![1, 2], 1), (vec![3, 4], 1)], 3).unwrap();
        assert!(matches!(big.validate(), Err(Error::ConditionViolated(Condition::III, _))));
        // with two sets (iv) already follows from (ii) and (iii)
        let overlap = RepairSetSystem::from_labels(
            1..=9,
            [(vec![1, 2, 3], 2), (vec![1, 4, 5, 6], 3), (vec![2, 7, 8, 9], 3)],
            4,
        )
        .unwrap();
        assert!(matches!(overlap.validate(), Err(Error::ConditionViolated(Condition::IV, _))));
    }

    #[test]
    fn gammoid_middle_layer() {
        let gg = gammoid_graph(&example_system()).unwrap();
        assert_eq!(gg.middle.len(), 8);
        assert_eq!(gg.sinks.len(), 7);
    }

    #[test]
    fn tamo_barg_rejects() {
        assert!(matches!(tamo_barg(9, 2, 2, 3), Err(Error::DivisibilityViolated(_))));
        assert!(matches!(tamo_barg(7, 2, 2, 4), Err(Error::DivisibilityViolated(_))));
        assert!(matches!(tamo_barg(9, 7, 3, 14), Err(Error::SubgroupUnavailable(_))));
    }

    #[test]
    fn random_rejects_outside_p() {
        let f = Field::prime(257).unwrap();
        assert!(matches!(random_lrc(4, 4, 2, 3, &f, 0), Err(Error::OutsideP(_))));
    }
}
