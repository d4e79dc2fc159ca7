//! Linear codes given by generator matrices and general codes given by an
//! explicit codeword list.

mod polymatroid;

use std::collections::HashSet;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use polymatroid::{PolyParams, Polymatroid, RankValue, EPS};

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::Matrix;
use crate::matroid::Matroid;
use crate::subset::{Ground, Subset};

/// Codeword enumeration cap, for both min-weight checks and general codes.
pub const MAX_CODEWORDS: usize = 1 << 20;
pub const INFO_SET_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    /// Minimum nonzero codeword weight, when q^k was small enough to enumerate.
    pub min_weight: Option<u32>,
}

pub struct LinearCode {
    generator: Matrix,
    matroid: OnceLock<Matroid>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        LinearCode { generator: self.generator.clone(), matroid: self.matroid.clone() }
    }
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LinearCode").field("generator", &self.generator).finish()
    }
}

impl LinearCode {
    pub fn new(generator: Matrix) -> Self {
        LinearCode { generator, matroid: OnceLock::new() }
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn ground(&self) -> &Ground {
        self.generator.labels()
    }

    pub fn matroid(&self) -> &Matroid {
        self.matroid.get_or_init(|| Matroid::from_matrix(&self.generator))
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> u32 {
        self.matroid().full_rank()
    }

    /// C_X = R(G(X)).
    pub fn puncture(&self, x: Subset) -> Result<LinearCode> {
        if x.is_empty() {
            return Err(Error::EmptyX);
        }
        if !x.is_subset_of(self.ground().full()) {
            return Err(Error::UnknownCoordinate(format!("{:?}", x - self.ground().full())));
        }
        Ok(LinearCode::new(self.generator.select_cols(x)))
    }

    /// Smallest weight of a nonzero codeword, by enumerating all q^k
    /// messages. None when that exceeds [`MAX_CODEWORDS`] or k = 0.
    pub fn min_weight(&self) -> Option<u32> {
        let basis = self.generator.row_basis();
        let k = basis.rows();
        let q = self.field().order() as u64;
        let total = q.checked_pow(k as u32).filter(|&t| t <= MAX_CODEWORDS as u64)?;
        if k == 0 {
            return None;
        }
        (1..total)
            .into_par_iter()
            .map(|mut idx| {
                let mut msg = vec![0u32; k];
                for m in msg.iter_mut() {
                    *m = (idx % q) as u32;
                    idx /= q;
                }
                basis.encode(&msg).iter().filter(|&&c| c != 0).count() as u32
            })
            .min()
    }

    /// (n, k, d) with d from the drop-set definition.
    pub fn params(&self) -> Result<CodeParams> {
        let m = self.matroid();
        let lp = m.local_params(m.full());
        let d = lp.d.ok_or(Error::ZeroCode)?;
        Ok(CodeParams { n: lp.n, k: lp.k, d, min_weight: self.min_weight() })
    }

    /// d >= 2 and no zero column.
    pub fn non_degenerate(&self) -> bool {
        (0..self.n()).all(|c| !self.generator.is_zero_column(c)) && self.matroid().min_distance().is_some_and(|d| d >= 2)
    }

    /// Every X with k_X = |X| = k, in lexicographic order.
    pub fn information_sets(&self) -> Result<Vec<Subset>> {
        if self.n() > INFO_SET_LIMIT {
            return Err(Error::GroundTooLarge { n: self.n(), limit: INFO_SET_LIMIT, what: "information-set enumeration" });
        }
        self.matroid().bases()
    }

    pub fn is_information_set(&self, x: Subset) -> bool {
        x.len() as u32 == self.k() && self.matroid().is_independent(x)
    }

    /// All codewords as a general code over an alphabet of size q, with field
    /// elements as symbols.
    pub fn to_general(&self) -> Result<GeneralCode> {
        let basis = self.generator.row_basis();
        let k = basis.rows();
        let q = self.field().order() as u64;
        let total = q
            .checked_pow(k as u32)
            .filter(|&t| t <= MAX_CODEWORDS as u64)
            .ok_or_else(|| Error::BadParams(format!("q^k exceeds {MAX_CODEWORDS} codewords")))?;
        let words: Vec<Vec<u32>> = (0..total)
            .into_par_iter()
            .map(|mut idx| {
                let mut msg = vec![0u32; k];
                for m in msg.iter_mut() {
                    *m = (idx % q) as u32;
                    idx /= q;
                }
                basis.encode(&msg)
            })
            .collect();
        GeneralCode::new(self.field().order(), self.n(), words)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneralParams {
    pub n: u32,
    pub size: usize,
    pub s: u32,
    /// log_s |C|
    pub k: f64,
    /// k when |C| is an exact power of s.
    pub k_exact: Option<u32>,
    pub d: u32,
}

/// A nonempty set of words of length n over {0..s-1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralCode {
    s: u32,
    n: usize,
    codewords: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct GeneralJson {
    s: u32,
    n: usize,
    codewords: Vec<Vec<u32>>,
}

impl Serialize for GeneralCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GeneralJson { s: self.s, n: self.n, codewords: self.codewords.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneralCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GeneralJson::deserialize(d)?;
        GeneralCode::new(j.s, j.n, j.codewords).map_err(serde::de::Error::custom)
    }
}

/// `log_s(x)` when x is an exact power of s.
pub(crate) fn exact_log(s: u64, mut x: u64) -> Option<u32> {
    let mut e = 0;
    while x > 1 {
        if !x.is_multiple_of(s) {
            return None;
        }
        x /= s;
        e += 1;
    }
    (x == 1).then_some(e)
}

impl GeneralCode {
    /// Duplicate words collapse; the stored list is sorted.
    pub fn new(s: u32, n: usize, codewords: Vec<Vec<u32>>) -> Result<Self> {
        if s < 2 {
            return Err(Error::BadParams(format!("alphabet size must be at least 2, got {s}")));
        }
        if n > crate::subset::MAX_GROUND {
            return Err(Error::GroundTooLarge { n, limit: crate::subset::MAX_GROUND, what: "code length" });
        }
        if codewords.is_empty() {
            return Err(Error::BadParams("a code needs at least one codeword".into()));
        }
        if codewords.len() > MAX_CODEWORDS {
            return Err(Error::BadParams(format!("more than {MAX_CODEWORDS} codewords")));
        }
        for w in &codewords {
            if w.len() != n {
                return Err(Error::Shape(format!("codeword of length {} in a length-{n} code", w.len())));
            }
            if let Some(&a) = w.iter().find(|&&a| a >= s) {
                return Err(Error::BadParams(format!("symbol {a} outside alphabet of size {s}")));
            }
        }
        let mut codewords = codewords;
        codewords.sort_unstable();
        codewords.dedup();
        Ok(GeneralCode { s, n, codewords })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn codewords(&self) -> &[Vec<u32>] {
        &self.codewords
    }

    pub fn size(&self) -> usize {
        self.codewords.len()
    }

    pub fn ground(&self) -> Ground {
        Ground::numbered(self.n)
    }

    pub fn k(&self) -> f64 {
        (self.size() as f64).ln() / (self.s as f64).ln()
    }

    pub fn k_exact(&self) -> Option<u32> {
        exact_log(self.s as u64, self.size() as u64)
    }

    fn project(&self, w: &[u32], x: Subset) -> Vec<u32> {
        x.iter().map(|i| w[i]).collect()
    }

    /// |C_X|
    pub fn projection_size(&self, x: Subset) -> usize {
        self.codewords.iter().map(|w| self.project(w, x)).collect::<HashSet<_>>().len()
    }

    pub fn puncture(&self, x: Subset) -> Result<GeneralCode> {
        if x.is_empty() {
            return Err(Error::EmptyX);
        }
        if !x.is_subset_of(Subset::full(self.n)) {
            return Err(Error::UnknownCoordinate(format!("{:?}", x - Subset::full(self.n))));
        }
        let words = self.codewords.iter().map(|w| self.project(w, x)).collect();
        GeneralCode::new(self.s, x.len(), words)
    }

    /// d_X = min { |Y| : |C_{X \ Y}| < |C_X| }, None when |C_X| = 1.
    pub fn local_d(&self, x: Subset) -> Option<u32> {
        let size = self.projection_size(x);
        if size <= 1 {
            return None;
        }
        (1..=x.len())
            .find(|&t| x.combinations(t).into_par_iter().any(|y| self.projection_size(x - y) < size))
            .map(|t| t as u32)
    }

    pub fn params(&self) -> Result<GeneralParams> {
        let d = self.local_d(Subset::full(self.n)).ok_or(Error::ZeroCode)?;
        Ok(GeneralParams { n: self.n as u32, size: self.size(), s: self.s, k: self.k(), k_exact: self.k_exact(), d })
    }

    /// d >= 2 and every coordinate takes at least two values.
    pub fn non_degenerate(&self) -> bool {
        (0..self.n).all(|i| self.projection_size(Subset::singleton(i)) > 1)
            && self.local_d(Subset::full(self.n)).is_some_and(|d| d >= 2)
    }

    /// k is an integer, |X| = k and C_X = A^k.
    pub fn is_systematic(&self, x: Subset) -> bool {
        self.k_exact().is_some_and(|k| x.len() == k as usize && self.projection_size(x) == self.size())
    }

    /// X with |C_X| = |C| and |C_Y| < |C| for every Y ⊊ X.
    pub fn is_information_set(&self, x: Subset) -> bool {
        let full = self.size();
        self.projection_size(x) == full && x.iter().all(|i| self.projection_size(x.without(i)) < full)
    }

    pub fn information_sets(&self) -> Result<Vec<Subset>> {
        if self.n > INFO_SET_LIMIT {
            return Err(Error::GroundTooLarge { n: self.n, limit: INFO_SET_LIMIT, what: "information-set enumeration" });
        }
        let mut out: Vec<Subset> =
            (0..1u64 << self.n).into_par_iter().map(Subset).filter(|&x| self.is_information_set(x)).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
        Ok(out)
    }

    /// The entropy polymatroid with the default scaling.
    pub fn polymatroid(&self) -> Result<Polymatroid> {
        Polymatroid::from_code(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::tests::dss_matrix;

    fn dss() -> LinearCode {
        LinearCode::new(dss_matrix())
    }

    #[test]
    fn dss_parameters() {
        let c = dss();
        assert_eq!(c.params().unwrap(), CodeParams { n: 9, k: 4, d: 3, min_weight: Some(3) });
        let g = c.ground().clone();
        let p = c.puncture(g.set([1, 2, 5]).unwrap()).unwrap().params().unwrap();
        assert_eq!((p.n, p.k, p.d), (3, 2, 2));
        let all = c.puncture(g.full()).unwrap();
        assert!(all.matroid().equals(c.matroid()).unwrap());
        assert!(matches!(c.puncture(Subset::EMPTY), Err(Error::EmptyX)));
        assert!(c.non_degenerate());
    }

    #[test]
    fn repetition_code() {
        let f = Field::prime(2).unwrap();
        let c = LinearCode::new(Matrix::from_ints(&f, &[vec![1; 5]]).unwrap());
        let p = c.params().unwrap();
        assert_eq!((p.n, p.k, p.d), (5, 1, 5));
    }

    #[test]
    fn zero_code_and_zero_column() {
        let f = Field::prime(3).unwrap();
        let z = LinearCode::new(Matrix::zeros(&f, 2, 3));
        assert!(matches!(z.params(), Err(Error::ZeroCode)));
        let c = LinearCode::new(Matrix::from_ints(&f, &[vec![1, 1, 0], vec![1, 2, 0]]).unwrap());
        assert!(!c.non_degenerate());
    }

    #[test]
    fn information_sets_of_dss_and_mds() {
        let c = dss();
        let g = c.ground().clone();
        let is = c.information_sets().unwrap();
        assert!(is.contains(&g.set([1, 2, 3, 4]).unwrap()));
        assert!(is.contains(&g.set([1, 2, 6, 8]).unwrap()));
        assert!(!is.contains(&g.set([1, 2, 8, 9]).unwrap()));

        let f = Field::prime(7).unwrap();
        let rows: Vec<Vec<i64>> = (0..3).map(|i| (0..6).map(|x: i64| x.pow(i)).collect()).collect();
        let mds = LinearCode::new(Matrix::from_ints(&f, &rows).unwrap());
        assert_eq!(mds.information_sets().unwrap().len(), 20);
    }

    #[test]
    fn general_code_basics() {
        let c = GeneralCode::new(2, 3, vec![vec![0, 0, 0], vec![0, 1, 1]]).unwrap();
        let p = c.puncture(Subset::singleton(0)).unwrap();
        assert_eq!(p.size(), 1);
        assert!(!c.non_degenerate());
        assert_eq!(c.params().unwrap().d, 2);

        let full = GeneralCode::new(3, 2, (0..9).map(|i| vec![i / 3, i % 3]).collect()).unwrap();
        assert!(full.is_systematic(Subset::full(2)));
        assert_eq!(full.k_exact(), Some(2));
        assert!(matches!(GeneralCode::new(2, 2, vec![vec![0, 2]]), Err(Error::BadParams(_))));
    }

    #[test]
    fn general_distance_matches_hamming() {
        let words = vec![vec![0, 0, 0, 0], vec![1, 1, 0, 0], vec![0, 1, 1, 1], vec![2, 2, 2, 1]];
        let c = GeneralCode::new(3, 4, words.clone()).unwrap();
        let ham = words
            .iter()
            .enumerate()
            .flat_map(|(i, a)| words[i + 1..].iter().map(move |b| a.iter().zip(b).filter(|(x, y)| x != y).count()))
            .min()
            .unwrap();
        assert_eq!(c.params().unwrap().d as usize, ham);
    }

    #[test]
    fn linear_as_general_agrees() {
        let c = dss();
        let g = c.to_general().unwrap();
        assert_eq!(g.size(), 81);
        assert_eq!(g.params().unwrap().d, 3);
        let m = c.matroid();
        for x in Subset::all(9) {
            assert_eq!(g.projection_size(x) as u64, 3u64.pow(m.rank(x)));
        }
        assert!(g.is_information_set(c.ground().set([1, 2, 6, 8]).unwrap()));
    }

    #[test]
    fn json_round_trip_general() {
        let c = GeneralCode::new(3, 2, vec![vec![0, 0], vec![0, 1], vec![1, 2]]).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        let back: GeneralCode = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
