//! Lakshmibai–Seshadri paths of a fixed admissible shape whose directions
//! step down the Weyl orbit one position at a time.
//!
//! Such a path is determined by integers `n ≤ m` and numerators
//! `q_m, …, q_{n+1}`: it runs in direction `x_mλ` on `[0, q_m/p_m]`, then
//! `x_{m−1}λ` up to `q_{m−1}/p_{m−1}`, and so on, ending with `x_nλ` on
//! `[q_{n+1}/p_{n+1}, 1]`.

use std::convert::Infallible;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{CartanData, Index, IntegralWeight, OrbitIndex, ShapeWeight};
use crate::crystal::Crystal;

/// A path in canonical form. Equality is equality of paths once the shape
/// is fixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LsPath {
    m: i64,
    n: i64,
    /// `q_m, q_{m−1}, …, q_{n+1}`.
    q: Vec<BigInt>,
}

impl LsPath {
    /// The straight line to `x_nλ`.
    pub fn straight(n: i64) -> Self {
        LsPath {
            m: n,
            n,
            q: Vec::new(),
        }
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// The numerators in stored order `q_m, …, q_{n+1}`.
    pub fn numerators(&self) -> &[BigInt] {
        &self.q
    }

    /// `q_j` for `n < j ≤ m`.
    pub fn q(&self, j: i64) -> Option<&BigInt> {
        if j > self.n && j <= self.m {
            self.q.get((self.m - j) as usize)
        } else {
            None
        }
    }
}

impl fmt::Display for LsPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:[", self.m, self.n)?;
        for (idx, q) in self.q.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse path {input:?}: expected m:n:[q_m,...,q_(n+1)]")]
pub struct PathParseError {
    input: String,
}

/// Parses the textual form `m:n:[q_m,…,q_{n+1}]`. The result is not
/// validated against any shape.
impl FromStr for LsPath {
    type Err = PathParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PathParseError {
            input: s.to_string(),
        };
        let mut parts = s.trim().splitn(3, ':');
        let m: i64 = parts.next().ok_or_else(err)?.trim().parse().map_err(|_| err())?;
        let n: i64 = parts.next().ok_or_else(err)?.trim().parse().map_err(|_| err())?;
        let list = parts.next().ok_or_else(err)?.trim();
        let inner = list
            .strip_prefix('[')
            .and_then(|l| l.strip_suffix(']'))
            .ok_or_else(err)?;
        let q = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|x| x.trim().parse::<BigInt>().map_err(|_| err()))
                .collect::<Result<_, _>>()?
        };
        Ok(LsPath { m, n, q })
    }
}

/// The first broken condition of a candidate canonical form.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("n = {n} exceeds m = {m}")]
    Reversed { m: i64, n: i64 },
    #[error("expected {expected} numerators for m - n, got {got}")]
    WrongLength { expected: u64, got: usize },
    #[error("need 0 < q_{j} < p_{j}, got q = {q}, p = {p}")]
    NumeratorOutOfRange { j: i64, q: BigInt, p: BigInt },
    #[error("need q_{next}/p_{next} < q_{j}/p_{j}, got {lhs} >= {rhs}")]
    NotIncreasing {
        j: i64,
        next: i64,
        lhs: Box<BigRational>,
        rhs: Box<BigRational>,
    },
}

/// A point `c₁Λ₁ + c₂Λ₂` of the real weight space with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalWeight {
    pub c1: BigRational,
    pub c2: BigRational,
}

impl RationalWeight {
    pub fn zero() -> Self {
        RationalWeight {
            c1: BigRational::zero(),
            c2: BigRational::zero(),
        }
    }

    pub fn pairing(&self, i: Index) -> BigRational {
        match i {
            Index::One => self.c1.clone(),
            Index::Two => self.c2.clone(),
        }
    }

    fn add_scaled(&mut self, w: &IntegralWeight, s: &BigRational) {
        self.c1 += s * BigRational::from_integer(w.c1().clone());
        self.c2 += s * BigRational::from_integer(w.c2().clone());
    }

    /// The lattice point, if both coordinates are integers.
    pub fn to_integral(&self) -> Option<IntegralWeight> {
        (self.c1.is_integer() && self.c2.is_integer())
            .then(|| IntegralWeight::new(self.c1.to_integer(), self.c2.to_integer()))
    }
}

impl From<&IntegralWeight> for RationalWeight {
    fn from(w: &IntegralWeight) -> Self {
        RationalWeight {
            c1: BigRational::from_integer(w.c1().clone()),
            c2: BigRational::from_integer(w.c2().clone()),
        }
    }
}

/// A turning time together with the direction of the segment that starts
/// there; the final point `t = 1` carries no direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Breakpoint {
    pub t: BigRational,
    pub direction: Option<OrbitIndex>,
}

#[derive(Clone, Debug)]
struct Piece {
    start: BigRational,
    end: BigRational,
    dir: OrbitIndex,
}

/// The crystal of canonical paths of one shape.
#[derive(Clone, Debug)]
pub struct LsCrystal {
    shape: ShapeWeight,
}

impl LsCrystal {
    pub fn new(shape: ShapeWeight) -> Self {
        LsCrystal { shape }
    }

    pub fn shape(&self) -> &ShapeWeight {
        &self.shape
    }

    /// `π_λ`.
    pub fn straight_line(&self) -> LsPath {
        LsPath::straight(0)
    }

    /// Builds a path after checking `0 < q_j < p_j` and strict growth of
    /// the turning times.
    pub fn validate(&self, m: i64, n: i64, q: Vec<BigInt>) -> Result<LsPath, PathError> {
        if n > m {
            return Err(PathError::Reversed { m, n });
        }
        let expected = m.abs_diff(n);
        if q.len() as u64 != expected {
            return Err(PathError::WrongLength {
                expected,
                got: q.len(),
            });
        }
        for (idx, qj) in q.iter().enumerate() {
            let j = m - idx as i64;
            let p = self.shape.p(j);
            if !qj.is_positive() || qj >= &p {
                return Err(PathError::NumeratorOutOfRange {
                    j,
                    q: qj.clone(),
                    p,
                });
            }
        }
        for (idx, pair) in q.windows(2).enumerate() {
            let next = m - idx as i64;
            let lhs = BigRational::new(pair[0].clone(), self.shape.p(next));
            let rhs = BigRational::new(pair[1].clone(), self.shape.p(next - 1));
            if lhs >= rhs {
                return Err(PathError::NotIncreasing {
                    j: next - 1,
                    next,
                    lhs: Box::new(lhs),
                    rhs: Box::new(rhs),
                });
            }
        }
        Ok(LsPath { m, n, q })
    }

    /// Parses and validates the textual form.
    pub fn parse(&self, s: &str) -> Result<LsPath, ParseOrPathError> {
        let raw: LsPath = s.parse()?;
        Ok(self.validate(raw.m, raw.n, raw.q)?)
    }

    /// The turning time `q_j/p_j` for `n < j ≤ m`, `0` for `j > m` and `1`
    /// for `j ≤ n`.
    pub fn time_of(&self, path: &LsPath, j: i64) -> BigRational {
        if j > path.m {
            BigRational::zero()
        } else if j <= path.n {
            BigRational::one()
        } else {
            let q = path.q(j).expect("index inside numerator range").clone();
            BigRational::new(q, self.shape.p(j))
        }
    }

    fn pieces(&self, path: &LsPath) -> Vec<Piece> {
        let mut out = Vec::with_capacity(path.q.len() + 1);
        let mut start = BigRational::zero();
        for d in (path.n..=path.m).rev() {
            let end = self.time_of(path, d);
            out.push(Piece {
                start: std::mem::replace(&mut start, end.clone()),
                end,
                dir: OrbitIndex(d),
            });
        }
        out
    }

    pub fn breakpoints(&self, path: &LsPath) -> Vec<Breakpoint> {
        let mut out: Vec<Breakpoint> = self
            .pieces(path)
            .into_iter()
            .map(|p| Breakpoint {
                t: p.start,
                direction: Some(p.dir),
            })
            .collect();
        out.push(Breakpoint {
            t: BigRational::one(),
            direction: None,
        });
        out
    }

    /// `π(t)` for `0 ≤ t ≤ 1`.
    pub fn evaluate(&self, path: &LsPath, t: &BigRational) -> RationalWeight {
        assert!(
            !t.is_negative() && t <= &BigRational::one(),
            "time {t} outside [0, 1]"
        );
        let mut acc = RationalWeight::zero();
        for piece in self.pieces(path) {
            if &piece.start >= t {
                break;
            }
            let stop = if &piece.end < t { &piece.end } else { t };
            acc.add_scaled(&self.shape.orbit_weight(piece.dir), &(stop - &piece.start));
        }
        acc
    }

    /// `H_i(t) = ⟨π(t), α_i^∨⟩`.
    pub fn h_at(&self, path: &LsPath, i: Index, t: &BigRational) -> BigRational {
        self.evaluate(path, t).pairing(i)
    }

    /// `x_nλ − Σ_{j=n+1}^{m} q_j α_{i_j}`.
    pub fn weight(&self, path: &LsPath) -> IntegralWeight {
        let cartan = self.shape.cartan();
        let mut w = self.shape.orbit_weight(OrbitIndex(path.n));
        for j in path.n + 1..=path.m {
            let q = path.q(j).expect("index inside numerator range");
            w = &w - &cartan.simple_root(Index::at(j)).scaled(q);
        }
        w
    }

    fn slope(&self, dir: OrbitIndex, i: Index) -> BigRational {
        BigRational::from_integer(self.shape.orbit_pairing(dir, i))
    }

    fn h_values(&self, pieces: &[Piece], i: Index) -> Vec<BigRational> {
        let mut out = Vec::with_capacity(pieces.len() + 1);
        let mut h = BigRational::zero();
        out.push(h.clone());
        for p in pieces {
            h += (&p.end - &p.start) * self.slope(p.dir, i);
            out.push(h.clone());
        }
        out
    }

    /// `H_i` at every breakpoint, including `0` and `1`.
    pub fn h_at_breakpoints(&self, path: &LsPath, i: Index) -> Vec<BigRational> {
        self.h_values(&self.pieces(path), i)
    }

    /// The minimum of `H_i` and the first time it is attained.
    ///
    /// `H_i` is linear and never flat between breakpoints, so extrema sit at
    /// breakpoints. Panics if a local minimum is not an integer.
    pub fn h_min(&self, path: &LsPath, i: Index) -> (BigInt, BigRational) {
        let pieces = self.pieces(path);
        let h = self.h_values(&pieces, i);
        let (idx, min) = first_min(&h);
        for (k, v) in h.iter().enumerate() {
            let left_higher = k == 0 || h[k - 1] > *v;
            let right_higher = k + 1 == h.len() || h[k + 1] > *v;
            if left_higher && right_higher {
                assert!(v.is_integer(), "non-integral local minimum {v} of H_{i} on {path}");
            }
        }
        let t = if idx == pieces.len() {
            BigRational::one()
        } else {
            pieces[idx].start.clone()
        };
        (min.to_integer(), t)
    }

    /// `(ε_i, φ_i)`.
    pub fn eps_phi(&self, path: &LsPath, i: Index) -> (BigInt, BigInt) {
        let h = self.h_at_breakpoints(path, i);
        let (_, min) = first_min(&h);
        assert!(min.is_integer(), "non-integral minimum {min} of H_{i} on {path}");
        let end = h.last().expect("nonempty").to_integer();
        let min = min.to_integer();
        (-&min, end - min)
    }

    /// Littelmann's `e_i`.
    pub fn raising(&self, path: &LsPath, i: Index) -> Option<LsPath> {
        let pieces = self.pieces(path);
        let h = self.h_values(&pieces, i);
        let (t1_idx, min) = first_min(&h);
        if min.is_zero() {
            return None;
        }
        let target = &min + BigRational::one();
        // Walk back from the first minimum to the last crossing of min + 1.
        let t0 = (0..t1_idx)
            .rev()
            .find(|&j| h[j] >= target)
            .map(|j| &pieces[j].start + (&target - &h[j]) / self.slope(pieces[j].dir, i))
            .expect("H(0) = 0 lies above a negative minimum");
        let t1 = pieces
            .get(t1_idx)
            .map(|p| p.start.clone())
            .unwrap_or_else(BigRational::one);
        Some(self.reflect_between(&pieces, &t0, &t1, i))
    }

    /// Littelmann's `f_i`.
    pub fn lowering(&self, path: &LsPath, i: Index) -> Option<LsPath> {
        let pieces = self.pieces(path);
        let h = self.h_values(&pieces, i);
        let (_, min) = first_min(&h);
        let end = h.last().expect("nonempty");
        if end == &min {
            return None;
        }
        let t0_idx = h
            .iter()
            .rposition(|v| *v == min)
            .expect("minimum is attained");
        let target = &min + BigRational::one();
        let t1 = (t0_idx..pieces.len())
            .find(|&j| h[j + 1] >= target)
            .map(|j| &pieces[j].start + (&target - &h[j]) / self.slope(pieces[j].dir, i))
            .expect("H(1) exceeds the minimum by at least one");
        let t0 = pieces[t0_idx].start.clone();
        Some(self.reflect_between(&pieces, &t0, &t1, i))
    }

    /// Replaces the directions on `[t0, t1]` by their `s_i`-images and
    /// re-derives the canonical form.
    fn reflect_between(
        &self,
        pieces: &[Piece],
        t0: &BigRational,
        t1: &BigRational,
        i: Index,
    ) -> LsPath {
        let mut cut: Vec<Piece> = Vec::with_capacity(pieces.len() + 2);
        for p in pieces {
            let mut start = p.start.clone();
            for t in [t0, t1] {
                if &start < t && t < &p.end {
                    cut.push(Piece {
                        start: std::mem::replace(&mut start, t.clone()),
                        end: t.clone(),
                        dir: p.dir,
                    });
                }
            }
            cut.push(Piece {
                start,
                end: p.end.clone(),
                dir: p.dir,
            });
        }
        let mut merged: Vec<Piece> = Vec::with_capacity(cut.len());
        for mut p in cut {
            if &p.start >= t0 && &p.end <= t1 {
                p.dir = p.dir.reflect(i);
            }
            match merged.last_mut() {
                Some(last) if last.dir == p.dir => last.end = p.end,
                _ => merged.push(p),
            }
        }
        self.assemble(&merged)
    }

    fn assemble(&self, pieces: &[Piece]) -> LsPath {
        let m = pieces.first().expect("at least one piece").dir.0;
        let n = pieces.last().expect("at least one piece").dir.0;
        let mut q = Vec::with_capacity(pieces.len() - 1);
        for pair in pieces.windows(2) {
            let j = pair[0].dir.0;
            assert_eq!(
                pair[1].dir.0,
                j - 1,
                "directions must step down the orbit one at a time"
            );
            let scaled = &pair[0].end * BigRational::from_integer(self.shape.p(j));
            assert!(scaled.is_integer(), "turning time {} is not q/p_{j}", pair[0].end);
            q.push(scaled.to_integer());
        }
        self.validate(m, n, q)
            .unwrap_or_else(|e| panic!("operator left canonical form: {e}"))
    }
}

fn first_min(h: &[BigRational]) -> (usize, BigRational) {
    let mut best = 0;
    for (k, v) in h.iter().enumerate() {
        if v < &h[best] {
            best = k;
        }
    }
    (best, h[best].clone())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseOrPathError {
    #[error(transparent)]
    Parse(#[from] PathParseError),
    #[error(transparent)]
    Invalid(#[from] PathError),
}

impl Crystal for LsCrystal {
    type Element = LsPath;
    type Error = Infallible;

    fn cartan(&self) -> &CartanData {
        self.shape.cartan()
    }

    fn weight(&self, b: &LsPath) -> IntegralWeight {
        LsCrystal::weight(self, b)
    }

    fn epsilon(&self, b: &LsPath, i: Index) -> BigInt {
        self.eps_phi(b, i).0
    }

    fn phi(&self, b: &LsPath, i: Index) -> BigInt {
        self.eps_phi(b, i).1
    }

    fn raise(&self, b: &LsPath, i: Index) -> Result<Option<LsPath>, Infallible> {
        Ok(self.raising(b, i))
    }

    fn lower(&self, b: &LsPath, i: Index) -> Result<Option<LsPath>, Infallible> {
        Ok(self.lowering(b, i))
    }
}
