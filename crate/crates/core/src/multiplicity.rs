//! Weight multiplicities of the crystal basis of the extremal weight module
//! of `λ = Λ₁ − Λ₂` for the symmetric matrix with off-diagonal `−a`, `a ≥ 3`.
//!
//! Everything reduces to counting sequences whose successive entries are
//! bounded by `F(x) = ⌊γx⌋` (or `F'(x) = ⌈γx⌉` on the other side), where
//! `γ = (a + √(a² − 4))/2`.

use std::collections::{BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{CartanData, IntegralWeight, RootCoords, ShapeWeight};
use crate::crystal::{ball, Moves};
use crate::embedding::{Embedding, Report};
use crate::polyhedral::TensorElement;
use crate::lspath::{LsCrystal, LsPath};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MultiplicityError {
    #[error("the counting algorithm needs a >= 3, got a = {0}")]
    ParameterTooSmall(i64),
    #[error("invalid count key {0:?}")]
    InvalidKey(CountKey),
}

/// Which half of the weight lattice a count lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    /// `n₁, n₂ ≥ 0`, sequences `(…, y₂, y₁)` with `y₁ = m`.
    Minus,
    /// `n₁, n₂ ≤ 0`, sequences `(y₀, y₋₁, …)` with `y₀ = m`.
    Plus,
}

/// `(n₁, n₂; m)` on one side: odd-position sum `n₁`, even-position sum
/// `n₂`, first entry `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CountKey {
    pub n1: i64,
    pub n2: i64,
    pub m: i64,
    pub side: Side,
}

impl CountKey {
    pub fn new(n1: i64, n2: i64, m: i64, side: Side) -> Result<Self, MultiplicityError> {
        let key = CountKey { n1, n2, m, side };
        let ok = match side {
            Side::Minus => n1 >= 0 && n2 >= 0 && 0 <= m && m <= n1,
            Side::Plus => n1 <= 0 && n2 <= 0 && n2 <= m && m <= 0,
        };
        if ok {
            Ok(key)
        } else {
            Err(MultiplicityError::InvalidKey(key))
        }
    }
}

/// The symmetric Cartan datum `a₁ = a₂ = a ≥ 3` with `λ = Λ₁ − Λ₂`.
#[derive(Clone, Debug)]
pub struct SymmetricConfig {
    a: i64,
    shape: ShapeWeight,
}

impl SymmetricConfig {
    pub fn new(a: i64) -> Result<Self, MultiplicityError> {
        if a < 3 {
            return Err(MultiplicityError::ParameterTooSmall(a));
        }
        let cartan = CartanData::symmetric(a).expect("a >= 3 is hyperbolic");
        let shape = ShapeWeight::new(&cartan, 1, 1).expect("Λ₁ − Λ₂ is admissible for a >= 3");
        Ok(SymmetricConfig { a, shape })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn shape(&self) -> &ShapeWeight {
        &self.shape
    }

    /// `F(x) = ⌊γx⌋` for `x ≥ 0`, computed as `(ax + ⌊√((a²−4)x²)⌋) div 2`.
    ///
    /// With `r = ⌊√((a²−4)x²)⌋`, the irrational `ax + √(…)` lies strictly
    /// between `ax + r` and `ax + r + 1`, so halving and flooring agree with
    /// halving the integer `ax + r` and flooring.
    pub fn big_f(&self, x: &BigInt) -> BigInt {
        assert!(!x.is_negative(), "F is defined for x >= 0, got {x}");
        let disc = BigInt::from(self.a * self.a - 4) * x * x;
        (x * self.a + disc.sqrt()).div_floor(&BigInt::from(2))
    }

    /// `F'(x) = ⌈γx⌉` for `x ≤ 0`. Since `γ` is irrational, `⌈γx⌉ = −⌊γ(−x)⌋`.
    pub fn big_f_prime(&self, x: &BigInt) -> BigInt {
        assert!(!x.is_positive(), "F' is defined for x <= 0, got {x}");
        -self.big_f(&-x)
    }

    /// `n(x)` for `x ≥ 1`: `p_{n−1} < x ≤ p_n`, with `n(1) = 1`.
    pub fn n_of(&self, x: &BigInt) -> i64 {
        assert!(x.is_positive(), "n(x) needs x >= 1, got {x}");
        if x.is_one() {
            return 1;
        }
        let mut n = 1;
        while &self.shape.p(n) < x {
            n += 1;
        }
        n
    }

    /// `n'(x)` for `x ≤ −1`: `−p_{n'} ≤ x < −p_{n'+1}`, with `n'(−1) = 0`.
    pub fn n_prime_of(&self, x: &BigInt) -> i64 {
        assert!(x.is_negative(), "n'(x) needs x <= -1, got {x}");
        let y = -x;
        if y.is_one() {
            return 0;
        }
        let mut n = 0;
        while self.shape.p(n) < y {
            n -= 1;
        }
        n
    }

    /// `F` from its defining inequality `F/p_{n+1} ≤ x/p_n < (F+1)/p_{n+1}`,
    /// `n = n(x)`.
    pub fn big_f_by_sequence(&self, x: &BigInt) -> BigInt {
        if x.is_zero() {
            return BigInt::zero();
        }
        let n = self.n_of(x);
        (x * self.shape.p(n + 1)).div_floor(&self.shape.p(n))
    }

    /// `F'` from `(F'−1)/p_{n'−1} < x/p_{n'} ≤ F'/p_{n'−1}`, `n' = n'(x)`.
    pub fn big_f_prime_by_sequence(&self, x: &BigInt) -> BigInt {
        if x.is_zero() {
            return BigInt::zero();
        }
        let n = self.n_prime_of(x);
        (x * self.shape.p(n - 1)).div_ceil(&self.shape.p(n))
    }

    /// `F(x)/p_{m+1} ≤ x/p_m < (F(x)+1)/p_{m+1}` for `x ≥ 1`.
    pub fn stability_holds(&self, x: &BigInt, m: i64) -> bool {
        let f = self.big_f(x);
        let (pm, pm1) = (self.shape.p(m), self.shape.p(m + 1));
        &f * &pm <= x * &pm1 && x * &pm1 < (f + 1) * pm
    }

    /// `(F'(x)−1)/p_{m−1} < x/p_m ≤ F'(x)/p_{m−1}` for `x ≤ −1`.
    pub fn stability_prime_holds(&self, x: &BigInt, m: i64) -> bool {
        let f = self.big_f_prime(x);
        let (pm, pm_1) = (self.shape.p(m), self.shape.p(m - 1));
        (&f - 1) * &pm < x * &pm_1 && x * &pm_1 <= f * pm
    }

    fn f_small(&self, x: i64) -> i64 {
        self.big_f(&BigInt::from(x))
            .to_i64()
            .expect("F of a machine integer fits")
    }

    fn f_prime_small(&self, x: i64) -> i64 {
        self.big_f_prime(&BigInt::from(x))
            .to_i64()
            .expect("F' of a machine integer fits")
    }

    /// The number of sequences counted by `key`, by the recursion on the
    /// second entry.
    pub fn count_y(&self, key: CountKey) -> BigUint {
        YCounter::new(self).count(key)
    }

    /// `#B(λ)_μ`.
    pub fn multiplicity(&self, mu: &IntegralWeight) -> BigUint {
        if mu == &self.shape.lambda() {
            return BigUint::one();
        }
        let Some(RootCoords { n1, n2 }) = self.shape.root_coords(mu) else {
            return BigUint::zero();
        };
        let (Some(n1), Some(n2)) = (n1.to_i64(), n2.to_i64()) else {
            panic!("root coordinates of {mu} exceed the machine range");
        };
        let key = if n1 >= 0 && n2 >= 0 {
            CountKey::new(n1, n2, 1, Side::Minus)
        } else if n1 <= 0 && n2 <= 0 {
            CountKey::new(n1, n2, -1, Side::Plus)
        } else {
            return BigUint::zero();
        };
        // An invalid key (n₁ = 0 or n₂ = 0 on the wrong side) has no sequences.
        key.map_or_else(|_| BigUint::zero(), |k| self.count_y(k))
    }

    /// `#B(λ)_μ` for `μ = λ − n₁α₁ − n₂α₂`.
    pub fn multiplicity_at(&self, n1: i64, n2: i64) -> BigUint {
        self.multiplicity(&self.shape.weight_at(&RootCoords::new(n1, n2)))
    }

    /// Counts the sequences of `key` by depth-first enumeration, using `F`
    /// from its defining inequality. Sequences longer than `support_bound`
    /// are not explored.
    pub fn brute_force_y(&self, key: CountKey, support_bound: usize) -> u64 {
        let mut count = 0;
        match key.side {
            Side::Minus => self.dfs_minus(
                &mut vec![key.m],
                key.n1 - key.m,
                key.n2,
                true,
                support_bound,
                &mut |_| count += 1,
            ),
            Side::Plus => self.dfs_plus(
                &mut vec![key.m],
                key.n1,
                key.n2 - key.m,
                true,
                support_bound,
                &mut |_| count += 1,
            ),
        }
        count
    }

    /// Extends `prefix = [y_1, …]` with `y_{j+1} ≤ F(y_j)` until the
    /// odd-position remainder `odd` and even-position remainder `even` are
    /// used up. `at_odd` says whether the last entry sits at an odd position.
    fn dfs_minus(
        &self,
        prefix: &mut Vec<i64>,
        odd: i64,
        even: i64,
        at_odd: bool,
        bound: usize,
        visit: &mut dyn FnMut(&[i64]),
    ) {
        if odd < 0 || even < 0 {
            return;
        }
        let current = *prefix.last().expect("nonempty");
        if odd == 0 && even == 0 {
            visit(prefix);
            // Continuing would need a positive entry.
            return;
        }
        if current == 0 || prefix.len() >= bound {
            return;
        }
        let cap = self
            .big_f_by_sequence(&BigInt::from(current))
            .to_i64()
            .expect("fits");
        // The next entry sits at the other parity.
        let budget = if at_odd { even } else { odd };
        for next in 1..=cap.min(budget) {
            prefix.push(next);
            let (o, e) = if at_odd { (odd, even - next) } else { (odd - next, even) };
            self.dfs_minus(prefix, o, e, !at_odd, bound, visit);
            prefix.pop();
        }
    }

    /// Mirror of `dfs_minus` for `prefix = [y_0, y_{-1}, …]`.
    fn dfs_plus(
        &self,
        prefix: &mut Vec<i64>,
        odd: i64,
        even: i64,
        at_even: bool,
        bound: usize,
        visit: &mut dyn FnMut(&[i64]),
    ) {
        if odd > 0 || even > 0 {
            return;
        }
        let current = *prefix.last().expect("nonempty");
        if odd == 0 && even == 0 {
            visit(prefix);
            return;
        }
        if current == 0 || prefix.len() >= bound {
            return;
        }
        let floor = self
            .big_f_prime_by_sequence(&BigInt::from(current))
            .to_i64()
            .expect("fits");
        let budget = if at_even { odd } else { even };
        for next in (floor.max(budget)..=-1).rev() {
            prefix.push(next);
            let (o, e) = if at_even { (odd - next, even) } else { (odd, even - next) };
            self.dfs_plus(prefix, o, e, !at_even, bound, visit);
            prefix.pop();
        }
    }

    /// All `(…, y₂, y₁)` with `y₁ = 1`, `y_{j+1} ≤ F(y_j)` and entry sum at
    /// most `bound`, listed as `[y₁, y₂, …]`.
    pub fn enumerate_y_minus(&self, bound: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut prefix = vec![1];
        self.grow(&mut prefix, bound - 1, 1, &mut |s| out.push(s.to_vec()));
        out
    }

    /// All `(y₀, y₋₁, …)` with `y₀ = −1`, `F'(y_j) ≤ y_{j−1}` and absolute
    /// entry sum at most `bound`, listed as `[y₀, y₋₁, …]`.
    pub fn enumerate_y_plus(&self, bound: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut prefix = vec![-1];
        self.grow(&mut prefix, bound - 1, -1, &mut |s| out.push(s.to_vec()));
        out
    }

    fn grow(&self, prefix: &mut Vec<i64>, budget: i64, sign: i64, visit: &mut dyn FnMut(&[i64])) {
        visit(prefix);
        let current = *prefix.last().expect("nonempty");
        let cap = if sign > 0 {
            self.f_small(current)
        } else {
            -self.f_prime_small(current)
        };
        for next in 1..=cap.min(budget) {
            prefix.push(sign * next);
            self.grow(prefix, budget - next, sign, visit);
            prefix.pop();
        }
    }

    /// Checks that the sequences with first entry `±1` and entry sum at most
    /// `bound` are exactly the nonzero sides of images of canonical paths,
    /// on both sides.
    pub fn z_equals_y_check(&self, bound: i64) -> Report {
        let emb = Embedding::new(self.shape.clone());
        let mut report = Report::new(format!("a={} bound={bound}", self.a));

        let ys: BTreeSet<Vec<i64>> = self.enumerate_y_minus(bound).into_iter().collect();
        let mut decoded = 0usize;
        for y in &ys {
            let path = self.decode_minus(y);
            let ok = path.as_ref().is_some_and(|p| {
                let image = emb.theta(p);
                image.minus.is_zero() && plus_as_vec(&image) == *y
            });
            decoded += ok as usize;
            if !ok {
                report.record("Y- element is an image", false, format!("{y:?}"));
            }
        }
        report.record("Y- decodes", decoded == ys.len(), format!("{decoded}/{}", ys.len()));
        let zs: BTreeSet<Vec<i64>> = self
            .paths_with_plus_sum(bound)
            .iter()
            .map(|p| plus_as_vec(&emb.theta(p)))
            .collect();
        report.record(
            "Z- equals Y-",
            zs == ys,
            format!("{} images, {} sequences", zs.len(), ys.len()),
        );

        let ys: BTreeSet<Vec<i64>> = self.enumerate_y_plus(bound).into_iter().collect();
        let mut decoded = 0usize;
        for y in &ys {
            let path = self.decode_plus(y);
            let ok = path.as_ref().is_some_and(|p| {
                let image = emb.theta(p);
                image.plus.is_zero() && minus_as_vec(&image) == *y
            });
            decoded += ok as usize;
            if !ok {
                report.record("Y+ element is an image", false, format!("{y:?}"));
            }
        }
        report.record("Y+ decodes", decoded == ys.len(), format!("{decoded}/{}", ys.len()));
        let zs: BTreeSet<Vec<i64>> = self
            .paths_with_minus_sum(bound)
            .iter()
            .map(|p| minus_as_vec(&emb.theta(p)))
            .collect();
        report.record(
            "Z+ equals Y+",
            zs == ys,
            format!("{} images, {} sequences", zs.len(), ys.len()),
        );
        report
    }

    /// `[y₁, …, y_M]` back to a path: the leading run equal to `p₁, p₂, …`
    /// fixes `n`, the rest are numerators.
    fn decode_minus(&self, y: &[i64]) -> Option<LsPath> {
        let n = y
            .iter()
            .enumerate()
            .take_while(|(idx, v)| self.shape.p(*idx as i64 + 1) == BigInt::from(**v))
            .count() as i64;
        let m = y.len() as i64;
        let q: Vec<BigInt> = (n + 1..=m).rev().map(|j| BigInt::from(y[(j - 1) as usize])).collect();
        LsCrystal::new(self.shape.clone()).validate(m, n, q).ok()
    }

    /// `[y₀, …, y_M]` back to a path: the leading run equal to
    /// `−p₀, −p₋₁, …` fixes `m`, the rest are `q_j − p_j`.
    fn decode_plus(&self, y: &[i64]) -> Option<LsPath> {
        let run = y
            .iter()
            .enumerate()
            .take_while(|(idx, v)| -self.shape.p(-(*idx as i64)) == BigInt::from(**v))
            .count() as i64;
        let m = -run;
        let n = -(y.len() as i64);
        let q: Vec<BigInt> = (n + 1..=m)
            .rev()
            .map(|j| BigInt::from(y[(-j) as usize]) + self.shape.p(j))
            .collect();
        LsCrystal::new(self.shape.clone()).validate(m, n, q).ok()
    }

    /// Paths with `m ≥ 1` whose image has plus-side sum at most `bound`.
    fn paths_with_plus_sum(&self, bound: i64) -> Vec<LsPath> {
        let big_bound = BigInt::from(bound);
        let mut out = Vec::new();
        let mut base = BigInt::zero();
        for n in 1.. {
            base += self.shape.p(n);
            if base > big_bound {
                break;
            }
            let room = &big_bound - &base;
            let mut q = Vec::new();
            self.numerators_up(n, n + 1, &BigRational::one(), &room, &mut q, &mut out);
        }
        out
    }

    /// Paths with `n ≤ −1` whose image has minus-side absolute sum at most
    /// `bound`.
    fn paths_with_minus_sum(&self, bound: i64) -> Vec<LsPath> {
        let big_bound = BigInt::from(bound);
        let mut out = Vec::new();
        let mut base = BigInt::zero();
        for m in (-64..=-1).rev() {
            // entries −p_0, …, −p_{m+1}
            base += self.shape.p(m + 1);
            if base > big_bound {
                break;
            }
            let room = &big_bound - &base;
            let mut q = Vec::new();
            self.numerators_down(m, m, &BigRational::one(), &room, &mut q, &mut out);
        }
        out
    }

    /// Extends numerators `q_{n+1}, q_{n+2}, …` (stored in that order in
    /// `acc`) keeping `q_j/p_j` strictly decreasing in `j` and the sum within
    /// `room`. Each prefix yields one path with `m = n + acc.len()`.
    fn numerators_up(
        &self,
        n: i64,
        j: i64,
        ceiling: &BigRational,
        room: &BigInt,
        acc: &mut Vec<BigInt>,
        out: &mut Vec<LsPath>,
    ) {
        let m = j - 1;
        let q: Vec<BigInt> = acc.iter().rev().cloned().collect();
        out.push(
            LsCrystal::new(self.shape.clone())
                .validate(m, n, q)
                .expect("enumerated numerators are canonical"),
        );
        let p = self.shape.p(j);
        let mut qj = BigInt::one();
        while &qj <= room && qj < p && BigRational::new(qj.clone(), p.clone()) < *ceiling {
            acc.push(qj.clone());
            let next_ceiling = BigRational::new(qj.clone(), p.clone());
            self.numerators_up(n, j + 1, &next_ceiling, &(room - &qj), acc, out);
            acc.pop();
            qj += 1;
        }
    }

    /// Extends numerators `q_m, q_{m−1}, …` downward keeping `q_j/p_j`
    /// strictly increasing as `j` decreases, with `p_j − q_j` summed within
    /// `room`. Each prefix yields one path with `n = j`.
    fn numerators_down(
        &self,
        m: i64,
        j: i64,
        floor: &BigRational,
        room: &BigInt,
        acc: &mut Vec<BigInt>,
        out: &mut Vec<LsPath>,
    ) {
        out.push(
            LsCrystal::new(self.shape.clone())
                .validate(m, j, acc.clone())
                .expect("enumerated numerators are canonical"),
        );
        let p = self.shape.p(j);
        let start = if acc.is_empty() {
            BigRational::zero()
        } else {
            floor.clone()
        };
        let mut qj: BigInt = &p - 1;
        while qj.is_positive() {
            let cost = &p - &qj;
            let ratio = BigRational::new(qj.clone(), p.clone());
            if &cost > room || ratio <= start {
                break;
            }
            acc.push(qj.clone());
            self.numerators_down(m, j - 1, &ratio, &(room - &cost), acc, out);
            acc.pop();
            qj -= 1;
        }
    }

    /// Number of vertices of each weight `λ − n₁α₁ − n₂α₂` in the ball of
    /// the given radius around `π_λ` following only `f` (or only `e`).
    pub fn crystal_counts(&self, radius: usize, moves: Moves) -> HashMap<(i64, i64), u64> {
        let paths = LsCrystal::new(self.shape.clone());
        let b = ball(&paths, paths.straight_line(), radius, moves).expect("infallible");
        let mut counts = HashMap::new();
        for p in &b.vertices {
            let rc = self
                .shape
                .root_coords(&paths.weight(p))
                .expect("path weights lie in the root lattice offset of λ");
            let key = (rc.n1.to_i64().expect("small"), rc.n2.to_i64().expect("small"));
            *counts.entry(key).or_insert(0) += 1;
        }
        counts
    }
}

fn plus_as_vec(y: &TensorElement) -> Vec<i64> {
    let top = y.plus.max_key().unwrap_or(0);
    (1..=top)
        .map(|k| y.plus.get(k).to_i64().expect("small"))
        .collect()
}

fn minus_as_vec(y: &TensorElement) -> Vec<i64> {
    let bottom = y.minus.min_key().unwrap_or(1);
    (bottom..=0)
        .rev()
        .map(|k| y.minus.get(k).to_i64().expect("small"))
        .collect()
}

/// Memoized counter for one configuration.
struct YCounter<'a> {
    cfg: &'a SymmetricConfig,
    memo: HashMap<CountKey, BigUint>,
}

impl<'a> YCounter<'a> {
    fn new(cfg: &'a SymmetricConfig) -> Self {
        YCounter {
            cfg,
            memo: HashMap::new(),
        }
    }

    fn count(&mut self, key: CountKey) -> BigUint {
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let CountKey { n1, n2, m, side } = key;
        let value = match side {
            Side::Minus => {
                if m == 0 {
                    BigUint::from((n1 == 0 && n2 == 0) as u8)
                } else if n2 == 0 {
                    BigUint::from((m == n1) as u8)
                } else {
                    let top = self.cfg.f_small(m).min(n2);
                    let mut total = BigUint::zero();
                    for l in 1..=top {
                        let next = CountKey {
                            n1: n2,
                            n2: n1 - m,
                            m: l,
                            side,
                        };
                        assert!(next.n1 + next.n2 < n1 + n2, "count recursion must shrink");
                        total += self.count(next);
                    }
                    total
                }
            }
            Side::Plus => {
                if m == 0 {
                    BigUint::from((n1 == 0 && n2 == 0) as u8)
                } else if n1 == 0 {
                    BigUint::from((m == n2) as u8)
                } else {
                    let bottom = self.cfg.f_prime_small(m).max(n1);
                    let mut total = BigUint::zero();
                    for l in bottom..=-1 {
                        let next = CountKey {
                            n1: n2 - m,
                            n2: n1,
                            m: l,
                            side,
                        };
                        assert!(next.n1 + next.n2 > n1 + n2, "count recursion must shrink");
                        total += self.count(next);
                    }
                    total
                }
            }
        };
        self.memo.insert(key, value.clone());
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(a: i64) -> SymmetricConfig {
        SymmetricConfig::new(a).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn rejects_small_parameter() {
        assert_eq!(
            SymmetricConfig::new(2).unwrap_err(),
            MultiplicityError::ParameterTooSmall(2)
        );
    }

    #[test]
    fn f_examples() {
        let c = cfg(3);
        let fs: Vec<i64> = (0..=5).map(|x| c.big_f(&int(x)).to_i64().unwrap()).collect();
        assert_eq!(fs, vec![0, 2, 5, 7, 10, 13]);
        assert_eq!(c.big_f_by_sequence(&int(3)), int(7));
        assert_eq!(c.n_of(&int(3)), 3);
        assert_eq!(c.n_of(&int(1)), 1);
        assert_eq!(c.big_f_prime(&int(0)), int(0));
        assert_eq!(c.big_f_prime(&int(-2)), int(-5));
        assert_eq!(c.big_f_prime_by_sequence(&int(-2)), int(-5));
        assert_eq!(c.big_f_prime_by_sequence(&int(-1)), int(-2));
        assert_eq!(c.n_prime_of(&int(-1)), 0);
        assert_eq!(c.n_prime_of(&int(-2)), -1);
        assert_eq!(c.n_prime_of(&int(-3)), -2);
    }

    #[test]
    fn count_examples() {
        let c = cfg(3);
        let minus = |n1, n2, m| c.count_y(CountKey::new(n1, n2, m, Side::Minus).unwrap());
        assert_eq!(minus(3, 0, 3), BigUint::from(1u8));
        assert_eq!(minus(3, 0, 2), BigUint::zero());
        assert_eq!(minus(1, 1, 1), BigUint::from(1u8));
        assert_eq!(minus(2, 2, 1), BigUint::from(2u8));
        assert_eq!(minus(0, 0, 0), BigUint::from(1u8));
        assert_eq!(minus(1, 0, 0), BigUint::zero());
        assert!(CountKey::new(1, 1, 2, Side::Minus).is_err());
        assert!(CountKey::new(-1, -1, -2, Side::Plus).is_err());
    }

    #[test]
    fn brute_force_examples() {
        let c = cfg(3);
        let key = CountKey::new(2, 2, 1, Side::Minus).unwrap();
        assert_eq!(c.brute_force_y(key, 8), 2);
        let key = CountKey::new(4, 0, 4, Side::Minus).unwrap();
        assert_eq!(c.brute_force_y(key, 8), 1);
        let key = CountKey::new(4, 0, 3, Side::Minus).unwrap();
        assert_eq!(c.brute_force_y(key, 8), 0);
    }

    #[test]
    fn multiplicity_examples() {
        let c = cfg(3);
        let lambda = c.shape().lambda();
        assert_eq!(c.multiplicity(&lambda), BigUint::one());
        assert_eq!(c.multiplicity_at(1, 1), BigUint::one());
        assert_eq!(c.multiplicity_at(2, 2), BigUint::from(2u8));
        assert_eq!(c.multiplicity_at(1, 0), BigUint::one());
        assert_eq!(c.multiplicity_at(2, 0), BigUint::zero());
        assert_eq!(c.multiplicity_at(0, 1), BigUint::zero());
        assert_eq!(c.multiplicity_at(1, -1), BigUint::zero());
        assert_eq!(c.multiplicity_at(0, -1), BigUint::one());
        assert_eq!(c.multiplicity(&(&lambda - &IntegralWeight::new(1, 0))), BigUint::zero());
    }

    #[test]
    fn z_equals_y_small() {
        let c = cfg(3);
        let y = c.enumerate_y_minus(2);
        assert_eq!(y, vec![vec![1], vec![1, 1]]);
        let r = c.z_equals_y_check(6);
        assert!(r.passed(), "{r:?}");
    }
}
