//! Rank and independence axiom checks with witnesses.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{Matroid, EXHAUSTIVE_LIMIT};
use crate::subset::{Label, Subset};

/// Independence axioms are checked pair-wise, which is far costlier.
const INDEPENDENCE_LIMIT: usize = 10;
const SAMPLES: usize = 20_000;
const SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    /// Sets exhibiting the violation; empty when passed.
    pub witness: Vec<Vec<Label>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    /// False when some checks were sampled rather than exhaustive.
    pub exhaustive: bool,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.axiom).collect()
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

/// Either every mask below 2^n, or a fixed pseudo-random sample of them.
fn masks(n: usize, exhaustive: bool) -> Vec<u64> {
    if exhaustive {
        (0..1u64 << n).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        (0..SAMPLES).map(|_| rng.gen::<u64>() & full).collect()
    }
}

impl Matroid {
    /// Checks (R1)-(R3) and (I1)-(I3). Submodularity and monotonicity are
    /// checked in their local forms, which are equivalent to the global ones.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.len();
        let full = self.full();
        let rank_exhaustive = n <= EXHAUSTIVE_LIMIT;
        let ind_exhaustive = n <= INDEPENDENCE_LIMIT;
        let xs = masks(n, rank_exhaustive);
        let wit = |sets: &[Subset]| -> Vec<Vec<Label>> { sets.iter().map(|&s| self.ground().labels_of(s)).collect() };
        let mk = |axiom, found: Option<Vec<Subset>>| AxiomCheck {
            axiom,
            passed: found.is_none(),
            witness: found.map(|f| wit(&f)).unwrap_or_default(),
        };

        let r1 = xs.par_iter().map(|&m| Subset(m)).find_first(|&x| self.rank(x) as usize > x.len()).map(|x| vec![x]);

        let r2 = xs.par_iter().find_map_first(|&m| {
            let x = Subset(m);
            (full - x).iter().map(|y| x.with(y)).find(|&xy| self.rank(xy) < self.rank(x)).map(|xy| vec![x, xy])
        });

        let r3 = xs.par_iter().find_map_first(|&m| {
            let x = Subset(m);
            let rest: Vec<usize> = (full - x).indices();
            let rx = self.rank(x);
            for (i, &a) in rest.iter().enumerate() {
                let ra = self.rank(x.with(a));
                for &b in &rest[i + 1..] {
                    if ra + self.rank(x.with(b)) < self.rank(x.with(a).with(b)) + rx {
                        return Some(vec![x.with(a), x.with(b)]);
                    }
                }
            }
            None
        });

        let i1 = (self.rank(Subset::EMPTY) != 0).then(|| vec![Subset::EMPTY]);

        let indep = |x: Subset| self.rank(x) as usize == x.len();
        let ys = if ind_exhaustive { xs.clone() } else { masks(n, false) };
        let i2 = ys.par_iter().map(|&m| Subset(m)).filter(|&x| indep(x)).find_map_first(|x| {
            x.iter().map(|i| x.without(i)).find(|&y| !indep(y)).map(|y| vec![x, y])
        });

        // augmentation against sets one larger suffices given (I2)
        let i3 = if ind_exhaustive {
            let all: Vec<Subset> = xs.iter().map(|&m| Subset(m)).filter(|&x| indep(x)).collect();
            all.par_iter().find_map_first(|&i| {
                all.iter()
                    .filter(|j| j.len() == i.len() + 1)
                    .find(|&&j| !(j - i).iter().any(|y| indep(i.with(y))))
                    .map(|&j| vec![i, j])
            })
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
            let pairs: Vec<(Subset, Subset)> =
                (0..SAMPLES).map(|_| (Subset(rng.gen::<u64>() & full.0), Subset(rng.gen::<u64>() & full.0))).collect();
            pairs.par_iter().find_map_first(|&(a, b)| {
                // shrink to independent sets with |I| < |J|
                let shrink = |mut s: Subset| {
                    while !indep(s) {
                        s = s.without(s.indices().last().copied().unwrap());
                    }
                    s
                };
                let (i, j) = (shrink(a), shrink(b));
                let (i, j) = if i.len() < j.len() { (i, j) } else { (j, i) };
                (i.len() < j.len() && !(j - i).iter().any(|y| indep(i.with(y)))).then(|| vec![i, j])
            })
        };

        AxiomReport {
            exhaustive: rank_exhaustive && ind_exhaustive,
            checks: vec![mk("R1", r1), mk("R2", r2), mk("R3", r3), mk("I1", i1), mk("I2", i2), mk("I3", i3)],
        }
    }
}
