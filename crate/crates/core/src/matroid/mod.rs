//! Matroids given by a rank oracle over a labelled ground set.
//!
//! A [`Matroid`] is cheap to clone. Ranks are memoised per instance in a
//! concurrent map, so exhaustive scans may run in parallel.

mod axioms;
pub mod gammoid;
pub mod graph;

use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;
use rayon::prelude::*;
use serde_json::{json, Value};

pub use axioms::{AxiomCheck, AxiomReport};
pub use gammoid::{Digraph, Gammoid};
pub use graph::{Edge, Graph};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::subset::{Ground, Label, Subset};
use crate::zlattice::CyclicFlatLattice;

/// Largest ground set for which exhaustive equality and axiom checks run.
pub const EXHAUSTIVE_LIMIT: usize = 16;

pub type RankFn = Arc<dyn Fn(Subset) -> u32 + Send + Sync>;

#[derive(Clone)]
pub enum Realization {
    Linear(Matrix),
    Graphic(Graph),
    Gammoid(Gammoid),
    Uniform { n: usize, k: usize },
    CyclicFlats(CyclicFlatLattice),
    Derived(Derived),
    Oracle(RankFn),
}

#[derive(Clone)]
pub enum Derived {
    /// `map[i]` is the parent index of element `i`.
    Restriction { parent: Matroid, map: Vec<usize> },
    Contraction { parent: Matroid, map: Vec<usize>, contracted: Subset, base: u32 },
    Dual { parent: Matroid },
    Truncation { parent: Matroid, k: u32 },
    /// Left elements come first, then right.
    DirectSum { left: Matroid, right: Matroid },
    Relaxation { parent: Matroid, circuit: Subset, closure: Subset },
}

impl Derived {
    pub fn op(&self) -> &'static str {
        match self {
            Derived::Restriction { .. } => "restriction",
            Derived::Contraction { .. } => "contraction",
            Derived::Dual { .. } => "dual",
            Derived::Truncation { .. } => "truncation",
            Derived::DirectSum { .. } => "direct_sum",
            Derived::Relaxation { .. } => "relaxation",
        }
    }
}

struct Inner {
    ground: Ground,
    realization: Realization,
    memo: Option<DashMap<u64, u32>>,
}

#[derive(Clone)]
pub struct Matroid(Arc<Inner>);

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid({}, ground={:?}, rank={})", self.tag(), self.ground(), self.full_rank())
    }
}

/// `(n_X, k_X, d_X)` of a restriction; `d` is `None` when `k_X = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct LocalParams {
    pub n: u32,
    pub k: u32,
    pub d: Option<u32>,
}

fn map_subset(x: Subset, map: &[usize]) -> Subset {
    x.iter().map(|i| map[i]).collect()
}

impl Matroid {
    fn build(ground: Ground, realization: Realization) -> Self {
        let memo = match realization {
            Realization::Uniform { .. } => None,
            _ => Some(DashMap::new()),
        };
        Matroid(Arc::new(Inner { ground, realization, memo }))
    }

    /// The column matroid: rank of a set is the rank of those columns.
    pub fn from_matrix(g: &Matrix) -> Self {
        Matroid::build(g.labels().clone(), Realization::Linear(g.clone()))
    }

    /// U_n^k on labels `1..=n`.
    pub fn uniform(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::BadParams(format!("uniform matroid needs k <= n, got k={k}, n={n}")));
        }
        if n > crate::subset::MAX_GROUND {
            return Err(Error::GroundTooLarge { n, limit: crate::subset::MAX_GROUND, what: "subset masks" });
        }
        Ok(Matroid::build(Ground::numbered(n), Realization::Uniform { n, k }))
    }

    pub fn free(n: usize) -> Result<Self> {
        Matroid::uniform(n, n)
    }

    pub fn from_graph(g: &Graph) -> Self {
        Matroid::build(g.ground().clone(), Realization::Graphic(g.clone()))
    }

    /// Gammoid on sources `e` with sinks `t`.
    pub fn from_gammoid(d: &Digraph, e: &[Label], t: &[Label]) -> Result<Self> {
        let g = Gammoid::new(d.clone(), e, t)?;
        Ok(Matroid::build(g.ground().clone(), Realization::Gammoid(g)))
    }

    /// Rank via `min { rank(F) + |X \ F| : F in Z }`. The lattice is taken
    /// as given; use [`crate::zlattice::matroid_from_z`] to validate first.
    pub(crate) fn from_lattice_unchecked(z: &CyclicFlatLattice) -> Self {
        Matroid::build(z.ground().clone(), Realization::CyclicFlats(z.clone()))
    }

    /// Wraps an arbitrary rank function. Nothing is validated; run
    /// [`Matroid::check_axioms`] if the oracle is untrusted.
    pub fn from_rank_fn(ground: Ground, f: impl Fn(Subset) -> u32 + Send + Sync + 'static) -> Self {
        Matroid::build(ground, Realization::Oracle(Arc::new(f)))
    }

    pub fn ground(&self) -> &Ground {
        &self.0.ground
    }

    pub fn len(&self) -> usize {
        self.0.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.ground.is_empty()
    }

    pub fn full(&self) -> Subset {
        self.0.ground.full()
    }

    pub fn realization(&self) -> &Realization {
        &self.0.realization
    }

    pub fn tag(&self) -> &'static str {
        match &self.0.realization {
            Realization::Linear(_) => "linear",
            Realization::Graphic(_) => "graphic",
            Realization::Gammoid(_) => "gammoid",
            Realization::Uniform { .. } => "uniform",
            Realization::CyclicFlats(_) => "cyclic_flats",
            Realization::Derived(d) => d.op(),
            Realization::Oracle(_) => "oracle",
        }
    }

    /// Converts labels to a subset of this ground set.
    pub fn set<I, L>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = L>,
        L: Into<Label>,
    {
        self.0.ground.set(labels)
    }

    fn check_subset(&self, x: Subset) -> Result<()> {
        if x.is_subset_of(self.full()) {
            Ok(())
        } else {
            let bad = (x - self.full()).first().unwrap();
            Err(Error::UnknownElement(format!("index {bad}")))
        }
    }

    pub fn rank(&self, x: Subset) -> u32 {
        debug_assert!(x.is_subset_of(self.full()), "subset {x:?} outside ground {:?}", self.ground());
        match &self.0.memo {
            None => self.compute_rank(x),
            Some(memo) => {
                if let Some(r) = memo.get(&x.0) {
                    return *r;
                }
                let r = self.compute_rank(x);
                memo.insert(x.0, r);
                r
            }
        }
    }

    fn compute_rank(&self, x: Subset) -> u32 {
        match &self.0.realization {
            Realization::Linear(m) => m.rank_of(x) as u32,
            Realization::Graphic(g) => g.rank(x),
            Realization::Gammoid(g) => g.rank(x),
            Realization::Uniform { k, .. } => x.len().min(*k) as u32,
            Realization::CyclicFlats(z) => z.rank_formula(x),
            Realization::Oracle(f) => f(x),
            Realization::Derived(d) => match d {
                Derived::Restriction { parent, map } => parent.rank(map_subset(x, map)),
                Derived::Contraction { parent, map, contracted, base } => {
                    parent.rank(map_subset(x, map) | *contracted) - base
                }
                Derived::Dual { parent } => {
                    let e = parent.full();
                    x.len() as u32 + parent.rank(e - x) - parent.rank(e)
                }
                Derived::Truncation { parent, k } => parent.rank(x).min(*k),
                Derived::DirectSum { left, right } => {
                    let nl = left.len();
                    let lmask = left.full();
                    left.rank(x & lmask) + right.rank(Subset(x.0 >> nl))
                }
                Derived::Relaxation { parent, circuit, closure } => {
                    let r = parent.rank(x);
                    if circuit.is_subset_of(x) && x.is_subset_of(*closure) {
                        r + 1
                    } else {
                        r
                    }
                }
            },
        }
    }

    pub fn rank_of<I, L>(&self, labels: I) -> Result<u32>
    where
        I: IntoIterator<Item = L>,
        L: Into<Label>,
    {
        Ok(self.rank(self.set(labels)?))
    }

    pub fn full_rank(&self) -> u32 {
        self.rank(self.full())
    }

    /// η(X) = |X| - ρ(X)
    pub fn nullity(&self, x: Subset) -> u32 {
        x.len() as u32 - self.rank(x)
    }

    pub fn is_independent(&self, x: Subset) -> bool {
        self.rank(x) as usize == x.len()
    }

    pub fn is_circuit(&self, x: Subset) -> bool {
        !x.is_empty()
            && self.rank(x) as usize == x.len() - 1
            && x.iter().all(|i| self.is_independent(x.without(i)))
    }

    pub fn is_flat(&self, x: Subset) -> bool {
        let r = self.rank(x);
        (self.full() - x).iter().all(|y| self.rank(x.with(y)) > r)
    }

    pub fn is_cyclic(&self, x: Subset) -> bool {
        let r = self.rank(x);
        x.iter().all(|i| self.rank(x.without(i)) == r)
    }

    pub fn is_cyclic_flat(&self, x: Subset) -> bool {
        self.is_cyclic(x) && self.is_flat(x)
    }

    /// cl(X) = { y : ρ(X ∪ y) = ρ(X) }
    pub fn closure(&self, x: Subset) -> Subset {
        let r = self.rank(x);
        (self.full() - x).iter().filter(|&y| self.rank(x.with(y)) == r).fold(x, |acc, y| acc.with(y))
    }

    /// cyc(X) = { x in X : ρ(X \ x) = ρ(X) }
    pub fn cyclic_core(&self, x: Subset) -> Subset {
        let r = self.rank(x);
        x.iter().filter(|&i| self.rank(x.without(i)) == r).collect()
    }

    fn require_small(&self, limit: usize, what: &'static str) -> Result<()> {
        if self.len() > limit {
            return Err(Error::GroundTooLarge { n: self.len(), limit, what });
        }
        Ok(())
    }

    /// All circuits, ordered by size then lexicographically.
    pub fn circuits(&self) -> Result<Vec<Subset>> {
        self.require_small(20, "circuit enumeration")?;
        let mut out = Vec::new();
        for size in 1..=self.full_rank() as usize + 1 {
            let found: Vec<Subset> =
                self.full().combinations(size).into_par_iter().filter(|&c| self.is_circuit(c)).collect();
            out.extend(found);
        }
        Ok(out)
    }

    /// All bases in lexicographic order.
    pub fn bases(&self) -> Result<Vec<Subset>> {
        self.require_small(20, "basis enumeration")?;
        let k = self.full_rank() as usize;
        Ok(self.full().combinations(k).into_par_iter().filter(|&b| self.is_independent(b)).collect())
    }

    /// Punctured parameters of X by the drop-set definition:
    /// d_X = min { |Y| : Y ⊆ X, ρ(X \ Y) < ρ(X) }.
    /// Small drop sets are tried first; once that costs more than scanning
    /// the (k-1)-subsets, d_X is taken as |X| minus the largest hyperplane
    /// of M|X, each hyperplane being the closure in X of k-1 independent
    /// elements.
    pub fn local_params(&self, x: Subset) -> LocalParams {
        let k = self.rank(x);
        let n = x.len();
        let d = (k > 0).then(|| {
            let hyper_cost = binomial(n, k as usize - 1);
            let mut spent = 0u128;
            for s in 1..=n {
                spent += binomial(n, s);
                if spent > hyper_cost {
                    return (n - self.largest_hyperplane(x, k)) as u32;
                }
                if x.combinations(s).into_par_iter().any(|y| self.rank(x - y) < k) {
                    return s as u32;
                }
            }
            unreachable!("dropping all of X drops the rank")
        });
        LocalParams { n: n as u32, k, d }
    }

    fn largest_hyperplane(&self, x: Subset, k: u32) -> usize {
        x.combinations(k as usize - 1)
            .into_par_iter()
            .filter(|&s| self.rank(s) == k - 1)
            .map(|s| x.iter().filter(|&e| s.contains(e) || self.rank(s.with(e)) == k - 1).count())
            .max()
            .expect("X has an independent set of size k-1")
    }

    /// Minimum distance of the whole matroid (None for rank 0).
    pub fn min_distance(&self) -> Option<u32> {
        self.local_params(self.full()).d
    }

    /// No loops and d >= 2.
    pub fn is_non_degenerate(&self) -> bool {
        (0..self.len()).all(|i| self.rank(Subset::singleton(i)) > 0) && self.min_distance().is_some_and(|d| d >= 2)
    }

    /// M|X with labels in ground order.
    pub fn restriction(&self, x: Subset) -> Result<Matroid> {
        self.check_subset(x)?;
        let map = x.indices();
        let ground = Ground::new(self.ground().labels_of(x))?;
        Ok(Matroid::build(ground, Realization::Derived(Derived::Restriction { parent: self.clone(), map })))
    }

    /// M/X on E \ X with ρ'(Y) = ρ(Y ∪ X) - ρ(X).
    pub fn contraction(&self, x: Subset) -> Result<Matroid> {
        self.check_subset(x)?;
        let rest = self.full() - x;
        let map = rest.indices();
        let ground = Ground::new(self.ground().labels_of(rest))?;
        let base = self.rank(x);
        Ok(Matroid::build(
            ground,
            Realization::Derived(Derived::Contraction { parent: self.clone(), map, contracted: x, base }),
        ))
    }

    /// ρ*(X) = |X| + ρ(E \ X) - ρ(E)
    pub fn dual(&self) -> Matroid {
        Matroid::build(self.ground().clone(), Realization::Derived(Derived::Dual { parent: self.clone() }))
    }

    /// ρ'(X) = min(ρ(X), k) for 0 <= k <= ρ(E).
    pub fn truncation(&self, k: u32) -> Result<Matroid> {
        if k > self.full_rank() {
            return Err(Error::BadParams(format!("truncation rank {k} exceeds rank {}", self.full_rank())));
        }
        Ok(Matroid::build(self.ground().clone(), Realization::Derived(Derived::Truncation { parent: self.clone(), k })))
    }

    /// M ⊕ N. With `prefix` the labels become `L.x` and `R.y`; without it a
    /// shared label is a [`Error::LabelCollision`].
    pub fn direct_sum(&self, other: &Matroid, prefix: bool) -> Result<Matroid> {
        let (l, r): (Vec<Label>, Vec<Label>) = if prefix {
            (
                self.ground().labels().iter().map(|x| Label::new(format!("L.{x}"))).collect(),
                other.ground().labels().iter().map(|x| Label::new(format!("R.{x}"))).collect(),
            )
        } else {
            if let Some(c) = other.ground().labels().iter().find(|x| self.ground().index_of(x).is_some()) {
                return Err(Error::LabelCollision(c.to_string()));
            }
            (self.ground().labels().to_vec(), other.ground().labels().to_vec())
        };
        let ground = Ground::new(l.into_iter().chain(r))?;
        Ok(Matroid::build(
            ground,
            Realization::Derived(Derived::DirectSum { left: self.clone(), right: other.clone() }),
        ))
    }

    /// Adds the circuit C as a new basis. C must be a circuit with
    /// ρ(C) = ρ(E) - 1, and the result must satisfy the matroid axioms.
    pub fn relaxation(&self, c: Subset) -> Result<Matroid> {
        self.check_subset(c)?;
        if !self.is_circuit(c) {
            return Err(Error::NotARelaxableCircuit(format!("{} is not a circuit", self.ground().fmt_set(c))));
        }
        if self.rank(c) + 1 != self.full_rank() {
            return Err(Error::NotARelaxableCircuit(format!(
                "{} has rank {}, expected rank(E) - 1 = {}",
                self.ground().fmt_set(c),
                self.rank(c),
                self.full_rank() as i64 - 1
            )));
        }
        let closure = self.closure(c);
        let m = Matroid::build(
            self.ground().clone(),
            Realization::Derived(Derived::Relaxation { parent: self.clone(), circuit: c, closure }),
        );
        let report = m.check_axioms();
        if !report.passed() {
            return Err(Error::NotARelaxableCircuit(format!(
                "relaxing {} breaks the matroid axioms ({})",
                self.ground().fmt_set(c),
                report.failures().join(", ")
            )));
        }
        Ok(m)
    }

    /// Maps each of our indices to the index of the same label in `other`.
    fn align(&self, other: &Matroid) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        self.ground().labels().iter().map(|l| other.ground().index_of(l)).collect()
    }

    /// First subset (in mask order of our ground) on which the ranks differ,
    /// `Ok(None)` when the matroids are equal. Ground sets are compared as
    /// label sets; a mismatch is reported as a difference on the full set.
    pub fn first_difference(&self, other: &Matroid) -> Result<Option<Subset>> {
        let n = self.len().max(other.len());
        if n > EXHAUSTIVE_LIMIT {
            return Err(Error::EqualityRefused(n));
        }
        let Some(perm) = self.align(other) else {
            return Ok(Some(self.full()));
        };
        let hit = (0..1u64 << self.len())
            .into_par_iter()
            .find_first(|&m| self.rank(Subset(m)) != other.rank(map_subset(Subset(m), &perm)));
        Ok(hit.map(Subset))
    }

    /// Same ground set and same rank on every subset. Refused above 16 elements.
    pub fn equals(&self, other: &Matroid) -> Result<bool> {
        Ok(self.first_difference(other)?.is_none())
    }

    /// Exchange format `{"ground": [...], "realization": {...}}`.
    pub fn to_json(&self) -> Value {
        let real = match &self.0.realization {
            Realization::Linear(m) => json!({"type": "linear", "matrix": m}),
            Realization::Graphic(g) => json!({"type": "graphic", "graph": g}),
            Realization::Gammoid(g) => json!({
                "type": "gammoid",
                "digraph": g.digraph(),
                "sources": g.ground().labels(),
                "sinks": g.sinks(),
            }),
            Realization::Uniform { n, k } => json!({"type": "uniform", "n": n, "k": k}),
            Realization::CyclicFlats(z) => json!({"type": "cyclic_flats", "lattice": z.to_json()}),
            Realization::Derived(d) => json!({"type": "derived", "op": d.op()}),
            Realization::Oracle(_) => json!({"type": "oracle"}),
        };
        json!({"ground": self.ground().labels(), "realization": real})
    }

    /// Inverse of [`Matroid::to_json`] for the concrete realizations.
    pub fn from_json(v: &Value) -> Result<Matroid> {
        let real = &v["realization"];
        let ty = real["type"].as_str().ok_or_else(|| Error::Parse("realization.type missing".into()))?;
        match ty {
            "linear" => Ok(Matroid::from_matrix(&serde_json::from_value(real["matrix"].clone())?)),
            "graphic" => Ok(Matroid::from_graph(&serde_json::from_value(real["graph"].clone())?)),
            "gammoid" => {
                let d: Digraph = serde_json::from_value(real["digraph"].clone())?;
                let e: Vec<Label> = serde_json::from_value(real["sources"].clone())?;
                let t: Vec<Label> = serde_json::from_value(real["sinks"].clone())?;
                Matroid::from_gammoid(&d, &e, &t)
            }
            "uniform" => {
                let n = real["n"].as_u64().ok_or_else(|| Error::Parse("uniform.n".into()))?;
                let k = real["k"].as_u64().ok_or_else(|| Error::Parse("uniform.k".into()))?;
                Matroid::uniform(n as usize, k as usize)
            }
            "cyclic_flats" => crate::zlattice::matroid_from_z(&CyclicFlatLattice::from_json(&real["lattice"])?),
            other => Err(Error::Parse(format!("cannot load realization type {other}"))),
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::gf::Field;

    pub(crate) fn dss_matrix() -> Matrix {
        let f = Field::prime(3).unwrap();
        Matrix::from_ints(&f, &[
            vec![1, 0, 0, 0, 1, 1, 1, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1, 2, 2],
            vec![0, 0, 1, 0, 0, 1, 1, 0, 0],
            vec![0, 0, 0, 1, 0, 0, 0, 1, 2],
        ])
        .unwrap()
    }

    fn all_ranks(m: &Matroid) -> Vec<u32> {
        Subset::all(m.len()).map(|x| m.rank(x)).collect()
    }

    #[test]
    fn linear_examples() {
        let m = Matroid::from_matrix(&dss_matrix());
        assert_eq!(m.rank_of([1, 2, 5]).unwrap(), 2);
        assert_eq!(m.cyclic_core(m.set([1, 2, 3]).unwrap()), Subset::EMPTY);
        let c = m.set([1, 2, 5]).unwrap();
        assert_eq!(m.closure(c), c);
        let bases = m.bases().unwrap();
        assert!(bases.contains(&m.set([1, 2, 3, 4]).unwrap()));
        assert!(bases.contains(&m.set([1, 2, 6, 8]).unwrap()));
        let id = Matroid::from_matrix(&Matrix::identity(&Field::prime(5).unwrap(), 4));
        assert!(Subset::all(4).all(|x| id.rank(x) as usize == x.len()));
    }

    #[test]
    fn uniform_examples() {
        let u = Matroid::uniform(4, 2).unwrap();
        assert_eq!(u.rank_of([1, 2, 3]).unwrap(), 2);
        assert!(matches!(Matroid::uniform(2, 3), Err(Error::BadParams(_))));
        let f = Matroid::free(5).unwrap();
        assert!(f.is_independent(f.full()));
    }

    #[test]
    fn mds_matrix_gives_uniform() {
        // Vandermonde rows x^0..x^2 evaluated at 0..6 over GF(7)
        let f = Field::prime(7).unwrap();
        let rows: Vec<Vec<i64>> = (0..3).map(|i| (0..7).map(|x: i64| x.pow(i)).collect()).collect();
        let m = Matroid::from_matrix(&Matrix::from_ints(&f, &rows).unwrap());
        assert!(m.equals(&Matroid::uniform(7, 3).unwrap()).unwrap());
    }

    #[test]
    fn restriction_contraction_dual() {
        let m = Matroid::from_matrix(&dss_matrix());
        assert!(m.restriction(m.full()).unwrap().equals(&m).unwrap());
        let r = m.restriction(m.set([1, 2, 3, 7]).unwrap()).unwrap();
        assert_eq!(r.full_rank(), 3);
        assert_eq!(m.restriction(Subset::EMPTY).unwrap().full_rank(), 0);
        assert!(m.contraction(Subset::EMPTY).unwrap().equals(&m).unwrap());

        let u = Matroid::uniform(4, 2).unwrap();
        let c = u.contraction(u.set([1]).unwrap()).unwrap();
        let u31 = Matroid::uniform(3, 1).unwrap();
        assert_eq!(all_ranks(&c), all_ranks(&u31));

        for n in 0..=6 {
            for k in 0..=n {
                let d = Matroid::uniform(n, k).unwrap().dual();
                assert!(d.equals(&Matroid::uniform(n, n - k).unwrap()).unwrap());
            }
        }
        assert!(m.dual().dual().equals(&m).unwrap());
    }

    #[test]
    fn dual_of_linear_is_orthogonal_complement() {
        let g = dss_matrix();
        let h = g.null_space();
        let d = Matroid::from_matrix(&g).dual();
        assert!(d.equals(&Matroid::from_matrix(&h)).unwrap());
    }

    #[test]
    fn truncation_and_direct_sum() {
        let f = Matroid::free(5).unwrap();
        assert!(f.truncation(2).unwrap().equals(&Matroid::uniform(5, 2).unwrap()).unwrap());
        assert!(f.truncation(6).is_err());
        let u = Matroid::uniform(2, 1).unwrap();
        let s = u.direct_sum(&u, true).unwrap();
        assert_eq!(s.full_rank(), 2);
        assert_eq!(s.ground().labels()[2], Label::from("R.1"));
        assert!(matches!(u.direct_sum(&u, false), Err(Error::LabelCollision(_))));
        let zero = Matroid::uniform(0, 0).unwrap();
        assert_eq!(all_ranks(&u.direct_sum(&zero, true).unwrap()), all_ranks(&u));
    }

    fn pappus() -> Matroid {
        // 1/2 = 4, -1/2 = 3 over GF(7)
        let f = Field::prime(7).unwrap();
        let g = Matrix::from_ints(&f, &[
            vec![1, 0, -1, 4, 0, 3, 1, 0, -1],
            vec![1, 1, 1, 0, 0, 0, -1, -1, -1],
            vec![1, 1, 1, 1, 1, 1, 1, 1, 1],
        ])
        .unwrap();
        Matroid::from_matrix(&g)
    }

    #[test]
    fn non_pappus_by_relaxation() {
        let p = pappus();
        let c = p.set([4, 5, 6]).unwrap();
        assert_eq!(p.rank(c), 2);
        let np = p.relaxation(c).unwrap();
        assert!(np.is_independent(c));
        // the two differ exactly on C ⊆ X ⊆ cl(C)
        let cl = p.closure(c);
        for x in Subset::all(9) {
            let differs = p.is_independent(x) != np.is_independent(x) || p.rank(x) != np.rank(x);
            assert_eq!(differs, c.is_subset_of(x) && x.is_subset_of(cl), "{x:?}");
        }
        assert!(matches!(p.relaxation(p.set([1, 2, 4]).unwrap()), Err(Error::NotARelaxableCircuit(_))));
    }

    #[test]
    fn graphic_matches_representation() {
        let g = Graph::from_edges([
            (1, "A", "B"),
            (2, "B", "C"),
            (3, "D", "C"),
            (4, "E", "C"),
            (5, "E", "D"),
            (6, "A", "D"),
            (7, "A", "E"),
        ])
        .unwrap();
        let mg = Matroid::from_graph(&g);
        for p in [2, 3, 5] {
            let f = Field::prime(p).unwrap();
            let mm = Matroid::from_matrix(&g.representation(&f, None).unwrap());
            assert!(mg.equals(&mm).unwrap());
        }
        assert!(mg.is_independent(mg.set([3, 4, 6]).unwrap()));
        assert!(!mg.is_independent(mg.set([5, 6, 7]).unwrap()));
        assert!(mg.is_independent(mg.set([1, 2, 3, 5]).unwrap()));
        assert!(mg.is_independent(mg.set([2, 3, 4, 6]).unwrap()));
    }

    #[test]
    fn graphic_contraction_is_edge_contraction() {
        let g = Graph::from_edges([(1, "a", "b"), (2, "b", "c"), (3, "c", "a"), (4, "c", "d"), (5, "b", "d")]).unwrap();
        let m = Matroid::from_graph(&g);
        for e in 1..=5 {
            let c = m.contraction(m.set([e]).unwrap()).unwrap();
            let h = Matroid::from_graph(&g.contract_edge(&Label::from(e)).unwrap());
            assert!(c.equals(&h).unwrap(), "edge {e}");
        }
    }

    #[test]
    fn contraction_duality_identity() {
        let m = Matroid::from_matrix(&dss_matrix());
        let x = m.set([2, 5, 9]).unwrap();
        let lhs = m.contraction(x).unwrap();
        let rhs = m.dual().restriction(m.full() - x).unwrap().dual();
        assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn equality_refused_above_sixteen() {
        let u = Matroid::uniform(17, 3).unwrap();
        assert!(matches!(u.equals(&u), Err(Error::EqualityRefused(17))));
    }

    #[test]
    fn local_params_of_dss() {
        let m = Matroid::from_matrix(&dss_matrix());
        assert_eq!(m.local_params(m.full()), LocalParams { n: 9, k: 4, d: Some(3) });
        assert_eq!(m.local_params(m.set([1, 2, 3, 5, 6, 7]).unwrap()), LocalParams { n: 6, k: 3, d: Some(3) });
        assert_eq!(m.local_params(m.set([2, 6, 7]).unwrap()), LocalParams { n: 3, k: 2, d: Some(2) });
        assert!(m.is_non_degenerate());
    }

    #[test]
    fn json_round_trip() {
        let m = Matroid::from_matrix(&dss_matrix());
        let back = Matroid::from_json(&m.to_json()).unwrap();
        assert!(back.equals(&m).unwrap());
        let u = Matroid::uniform(5, 2).unwrap();
        assert!(Matroid::from_json(&u.to_json()).unwrap().equals(&u).unwrap());
    }
}
