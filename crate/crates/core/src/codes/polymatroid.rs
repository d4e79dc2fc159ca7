//! Entropy polymatroids of general codes.
//!
//! Rank values stay exact rationals while every log_s term is an integer
//! (|C| / multiplicity a power of s) and fall back to f64 otherwise. Strict
//! comparisons involving a float use the tolerance [`EPS`].

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use super::{exact_log, GeneralCode};
use crate::error::{Error, Result};
use crate::subset::{Ground, Label, Subset};

pub const EPS: f64 = 1e-9;
pub const POLYMATROID_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy)]
pub enum RankValue {
    Exact(Ratio<i64>),
    Approx(f64),
}

impl RankValue {
    pub fn int(v: i64) -> Self {
        RankValue::Exact(Ratio::from_integer(v))
    }

    pub fn to_f64(self) -> f64 {
        match self {
            RankValue::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            RankValue::Approx(x) => x,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, RankValue::Exact(_))
    }

    fn combine(self, o: Self, exact: impl Fn(Ratio<i64>, Ratio<i64>) -> Ratio<i64>, approx: impl Fn(f64, f64) -> f64) -> Self {
        match (self, o) {
            (RankValue::Exact(a), RankValue::Exact(b)) => RankValue::Exact(exact(a, b)),
            _ => RankValue::Approx(approx(self.to_f64(), o.to_f64())),
        }
    }

    pub fn add(self, o: Self) -> Self {
        self.combine(o, |a, b| a + b, |a, b| a + b)
    }

    pub fn sub(self, o: Self) -> Self {
        self.combine(o, |a, b| a - b, |a, b| a - b)
    }

    pub fn mul(self, o: Self) -> Self {
        self.combine(o, |a, b| a * b, |a, b| a * b)
    }

    /// Strictly less; with a float involved, by more than EPS.
    pub fn lt(self, o: Self) -> bool {
        match (self, o) {
            (RankValue::Exact(a), RankValue::Exact(b)) => a < b,
            _ => self.to_f64() < o.to_f64() - EPS,
        }
    }

    pub fn le(self, o: Self) -> bool {
        !o.lt(self)
    }

    pub fn approx_eq(self, o: Self) -> bool {
        self.le(o) && o.le(self)
    }

    pub fn floor(self) -> i64 {
        match self {
            RankValue::Exact(r) => r.floor().to_integer(),
            RankValue::Approx(x) => (x + EPS).floor() as i64,
        }
    }

    pub fn ceil(self) -> i64 {
        match self {
            RankValue::Exact(r) => r.ceil().to_integer(),
            RankValue::Approx(x) => (x - EPS).ceil() as i64,
        }
    }
}

impl fmt::Display for RankValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankValue::Exact(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            RankValue::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            RankValue::Approx(x) => write!(f, "{x:.9}"),
        }
    }
}

impl Serialize for RankValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.to_f64())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PolyCheck {
    pub axiom: &'static str,
    pub passed: bool,
    pub witness: Vec<Vec<Label>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolyParams {
    pub n: u32,
    pub k: RankValue,
    pub d: i64,
    pub cyclic_flats: usize,
}

/// A rank table over all subsets of a small ground set, times a scale c.
#[derive(Debug, Clone)]
pub struct Polymatroid {
    ground: Ground,
    raw: Vec<RankValue>,
    scale: RankValue,
    note: String,
}

fn entropy(counts: impl Iterator<Item = u64>, total: u64, s: u64) -> RankValue {
    let mut exact = Ratio::from_integer(0i64);
    let mut approx = 0.0f64;
    let mut all_exact = true;
    let ln_s = (s as f64).ln();
    for m in counts {
        let p = m as f64 / total as f64;
        match total.is_multiple_of(m).then(|| exact_log(s, total / m)).flatten() {
            Some(e) => {
                exact += Ratio::new(m as i64 * e as i64, total as i64);
                approx += p * e as f64;
            }
            None => {
                all_exact = false;
                approx += p * (total as f64 / m as f64).ln() / ln_s;
            }
        }
    }
    if all_exact {
        RankValue::Exact(exact)
    } else {
        RankValue::Approx(approx)
    }
}

impl Polymatroid {
    /// ρ_C(X) = Σ_z (m_z/|C|) log_s(|C|/m_z) over the projections z of C
    /// onto X, m_z the number of codewords projecting to z. Uses the
    /// default scale.
    pub fn from_code(code: &GeneralCode) -> Result<Self> {
        let n = code.n();
        if n > POLYMATROID_LIMIT {
            return Err(Error::GroundTooLarge { n, limit: POLYMATROID_LIMIT, what: "entropy rank table" });
        }
        let total = code.size() as u64;
        let s = code.s() as u64;
        let raw: Vec<RankValue> = (0..1u64 << n)
            .into_par_iter()
            .map(|m| {
                let x = Subset(m);
                let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
                for w in code.codewords() {
                    *counts.entry(x.iter().map(|i| w[i]).collect()).or_default() += 1;
                }
                entropy(counts.into_values(), total, s)
            })
            .collect();
        Polymatroid::from_values(Ground::numbered(n), raw)
    }

    /// A rank table indexed by subset mask, with the default scale.
    pub fn from_values(ground: Ground, raw: Vec<RankValue>) -> Result<Self> {
        if raw.len() != 1usize << ground.len() {
            return Err(Error::Shape(format!("{} rank values for {} elements", raw.len(), ground.len())));
        }
        let mut p = Polymatroid { ground, raw, scale: RankValue::int(1), note: String::new() };
        let c = p.default_scale();
        p.scale = c;
        p.note = format!("scaled by c = {c}: min over non-loop singletons of 1/rank, clipped to at most 1");
        Ok(p)
    }

    /// min over singletons x with ρ({x}) > 0 of 1/ρ({x}), clipped to <= 1.
    fn default_scale(&self) -> RankValue {
        let one = RankValue::int(1);
        let mut c = one;
        for i in 0..self.ground.len() {
            let r = self.raw[1usize << i];
            if RankValue::int(0).lt(r) {
                let inv = match r {
                    RankValue::Exact(q) => RankValue::Exact(q.recip()),
                    RankValue::Approx(x) => RankValue::Approx(1.0 / x),
                };
                if inv.lt(c) {
                    c = inv;
                }
            }
        }
        c
    }

    /// The same table with an explicit scale c.
    pub fn scaled(&self, c: RankValue) -> Polymatroid {
        Polymatroid { ground: self.ground.clone(), raw: self.raw.clone(), scale: c, note: format!("scaled by c = {c}") }
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn scale(&self) -> RankValue {
        self.scale
    }

    pub fn scaling_note(&self) -> &str {
        &self.note
    }

    pub fn rank(&self, x: Subset) -> RankValue {
        self.scale.mul(self.raw[x.0 as usize])
    }

    pub fn unscaled_rank(&self, x: Subset) -> RankValue {
        self.raw[x.0 as usize]
    }

    /// (R1)-(R3) and (R5), exhaustively. (R2)/(R3) in local form.
    pub fn check_axioms(&self) -> Vec<PolyCheck> {
        let n = self.len();
        let full = self.ground.full();
        let wit = |v: Option<Vec<Subset>>| v.map(|s| s.iter().map(|&x| self.ground.labels_of(x)).collect::<Vec<_>>());
        let mk = |axiom, v: Option<Vec<Subset>>| {
            let w = wit(v);
            PolyCheck { axiom, passed: w.is_none(), witness: w.unwrap_or_default() }
        };
        let masks = || (0..1u64 << n).into_par_iter().map(Subset);
        let r1 = (!self.rank(Subset::EMPTY).approx_eq(RankValue::int(0))).then(|| vec![Subset::EMPTY]);
        let r2 = masks().find_map_first(|x| {
            (full - x).iter().map(|y| x.with(y)).find(|&xy| self.rank(xy).lt(self.rank(x))).map(|xy| vec![x, xy])
        });
        let r3 = masks().find_map_first(|x| {
            let rest = (full - x).indices();
            for (i, &a) in rest.iter().enumerate() {
                for &b in &rest[i + 1..] {
                    let lhs = self.rank(x.with(a)).add(self.rank(x.with(b)));
                    let rhs = self.rank(x.with(a).with(b)).add(self.rank(x));
                    if lhs.lt(rhs) {
                        return Some(vec![x.with(a), x.with(b)]);
                    }
                }
            }
            None
        });
        let r5 = masks().find_first(|&x| RankValue::int(x.len() as i64).lt(self.rank(x))).map(|x| vec![x]);
        vec![mk("R1", r1), mk("R2", r2), mk("R3", r3), mk("R5", r5)]
    }

    /// ρ(X ∪ e) > ρ(X) for e outside X, and ρ(X) - ρ(X \ x) < 1 for x in X.
    pub fn is_cyclic_flat(&self, x: Subset) -> bool {
        let r = self.rank(x);
        let one = RankValue::int(1);
        (self.ground.full() - x).iter().all(|e| r.lt(self.rank(x.with(e))))
            && x.iter().all(|i| r.sub(self.rank(x.without(i))).lt(one))
    }

    pub fn cyclic_flats(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> =
            (0..1u64 << self.len()).into_par_iter().map(Subset).filter(|&x| self.is_cyclic_flat(x)).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
        out
    }

    /// n = |E|, k = ρ(E), d = ⌊n - k + 1 - max { |X| - ρ(X) : X in Z \ E }⌋.
    pub fn params(&self) -> Result<PolyParams> {
        let full = self.ground.full();
        if !self.is_cyclic_flat(full) {
            return Err(Error::TopNotCyclicFlat);
        }
        let z = self.cyclic_flats();
        let n = self.len() as i64;
        let k = self.rank(full);
        let eta = z
            .iter()
            .filter(|&&x| x != full)
            .map(|&x| RankValue::int(x.len() as i64).sub(self.rank(x)))
            .fold(RankValue::int(0), |a, b| if a.lt(b) { b } else { a });
        let d = RankValue::int(n + 1).sub(k).sub(eta).floor();
        Ok(PolyParams { n: n as u32, k, d, cyclic_flats: z.len() })
    }

    /// min { |Y| : ρ(E \ Y) < ρ(E) }, None when ρ(E) = 0.
    pub fn drop_set_d(&self) -> Option<u32> {
        let full = self.ground.full();
        let k = self.rank(full);
        (1..=self.len()).find(|&t| full.combinations(t).iter().any(|&y| self.rank(full - y).lt(k))).map(|t| t as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::LinearCode;
    use crate::matroid::tests::dss_matrix;

    #[test]
    fn linear_code_entropy_is_matroid_rank() {
        let c = LinearCode::new(dss_matrix());
        let p = c.to_general().unwrap().polymatroid().unwrap();
        let m = c.matroid();
        for x in Subset::all(9) {
            let r = p.rank(x);
            assert!(r.is_exact());
            assert!(r.approx_eq(RankValue::int(m.rank(x) as i64)), "{x:?}");
        }
        let pp = p.params().unwrap();
        assert_eq!((pp.n, pp.k.floor(), pp.d), (9, 4, 3));
        assert_eq!(pp.cyclic_flats, 9);
        assert!(p.check_axioms().iter().all(|c| c.passed));
    }

    #[test]
    fn small_nonlinear_entropy() {
        let c = GeneralCode::new(3, 2, vec![vec![0, 0], vec![0, 1], vec![1, 2]]).unwrap();
        let p = c.polymatroid().unwrap();
        let r = p.rank(Subset::singleton(0));
        assert!(!r.is_exact());
        let expect = (2.0 / 3.0) * (1.5f64).ln() / 3f64.ln() + 1.0 / 3.0;
        assert!((r.to_f64() - expect).abs() < 1e-12);
        assert!((r.to_f64() - 0.5793).abs() < 1e-4);
        // |C| = s^ρ(E)
        assert!(p.rank(Subset::full(2)).approx_eq(RankValue::int(1)));
        assert!(p.check_axioms().iter().all(|c| c.passed));
    }

    #[test]
    fn full_space_top_is_not_cyclic() {
        let c = GeneralCode::new(2, 3, (0..8).map(|i| vec![i & 1, (i >> 1) & 1, i >> 2]).collect()).unwrap();
        let p = c.polymatroid().unwrap();
        for x in Subset::all(3) {
            assert!(p.rank(x).approx_eq(RankValue::int(x.len() as i64)));
        }
        assert!(matches!(p.params(), Err(Error::TopNotCyclicFlat)));

        let half = p.scaled(RankValue::Exact(Ratio::new(1, 2)));
        let pp = half.params().unwrap();
        assert!(pp.k.approx_eq(RankValue::Exact(Ratio::new(3, 2))));
        assert_eq!(pp.cyclic_flats, 8);
        assert_eq!(pp.d, 1);
    }

    #[test]
    fn default_scale_clips_to_one() {
        let g = Ground::numbered(2);
        let raw = vec![RankValue::int(0), RankValue::int(2), RankValue::int(2), RankValue::int(3)];
        let p = Polymatroid::from_values(g, raw).unwrap();
        assert!(p.scale().approx_eq(RankValue::Exact(Ratio::new(1, 2))));
        assert!(p.check_axioms().iter().all(|c| c.passed));
    }
}
