//! The polyhedral tensor crystal `ℤ^{+∞} ⊗ T_t ⊗ ℤ^{−∞}` for the reduced
//! words `(…, 2, 1, 2, 1)` and `(2, 1, 2, 1, …)`.
//!
//! Position `k` carries color `1` when odd and `2` when even. Positions
//! `k ≥ 1` form the plus side (entries `≥ 0`), positions `k ≤ 0` the minus
//! side (entries `≤ 0`).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{CartanData, Index, IntegralWeight};
use crate::crystal::Crystal;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyhedralError {
    #[error("entry y_{k} = {value} has the wrong sign for its side")]
    SignViolation { k: i64, value: BigInt },
    #[error("{side} part lies outside the image of the polyhedral embedding")]
    NotInImage { side: Side },
    #[error("the maximizing positions of color {i} are unbounded")]
    UnboundedMaximizers { i: Index },
    #[error("reflection along color {i} hit the null element")]
    ReflectionFailed { i: Index },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Plus,
    Minus,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Plus => write!(f, "plus"),
            Side::Minus => write!(f, "minus"),
        }
    }
}

/// Finitely supported `(…, y_2, y_1)` with `y_k ≥ 0`. Zero entries are not
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfSeqPlus(BTreeMap<i64, BigInt>);

/// Finitely supported `(y_0, y_{−1}, …)` with `y_k ≤ 0`. Zero entries are
/// not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfSeqMinus(BTreeMap<i64, BigInt>);

impl HalfSeqPlus {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_entries<V: Into<BigInt>>(
        entries: impl IntoIterator<Item = (i64, V)>,
    ) -> Result<Self, PolyhedralError> {
        let mut out = Self::zero();
        for (k, v) in entries {
            let v = v.into();
            if k < 1 || v.is_negative() {
                return Err(PolyhedralError::SignViolation { k, value: v });
            }
            if !v.is_zero() {
                out.0.insert(k, v);
            }
        }
        Ok(out)
    }

    pub fn get(&self, k: i64) -> BigInt {
        self.0.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonzero entries in increasing `k`.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn max_key(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    fn add(&mut self, k: i64, delta: &BigInt) -> Result<(), PolyhedralError> {
        bump(&mut self.0, k, delta, |v| !v.is_negative())
    }
}

impl HalfSeqMinus {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_entries<V: Into<BigInt>>(
        entries: impl IntoIterator<Item = (i64, V)>,
    ) -> Result<Self, PolyhedralError> {
        let mut out = Self::zero();
        for (k, v) in entries {
            let v = v.into();
            if k > 0 || v.is_positive() {
                return Err(PolyhedralError::SignViolation { k, value: v });
            }
            if !v.is_zero() {
                out.0.insert(k, v);
            }
        }
        Ok(out)
    }

    pub fn get(&self, k: i64) -> BigInt {
        self.0.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonzero entries in increasing `k`.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn min_key(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    fn add(&mut self, k: i64, delta: &BigInt) -> Result<(), PolyhedralError> {
        bump(&mut self.0, k, delta, |v| !v.is_positive())
    }
}

fn bump(
    map: &mut BTreeMap<i64, BigInt>,
    k: i64,
    delta: &BigInt,
    allowed: impl Fn(&BigInt) -> bool,
) -> Result<(), PolyhedralError> {
    let value = map.get(&k).cloned().unwrap_or_default() + delta;
    if !allowed(&value) {
        return Err(PolyhedralError::SignViolation { k, value });
    }
    if value.is_zero() {
        map.remove(&k);
    } else {
        map.insert(k, value);
    }
    Ok(())
}

fn fmt_map<'a>(
    f: &mut fmt::Formatter<'_>,
    entries: impl Iterator<Item = (i64, &'a BigInt)>,
) -> fmt::Result {
    write!(f, "{{")?;
    for (idx, (k, v)) in entries.enumerate() {
        if idx > 0 {
            write!(f, ",")?;
        }
        write!(f, "{k}:{v}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for HalfSeqPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_map(f, self.iter().rev())
    }
}

impl fmt::Display for HalfSeqMinus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_map(f, self.iter().rev())
    }
}

/// `y⁺ ⊗ t ⊗ y⁻`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorElement {
    pub plus: HalfSeqPlus,
    pub t: IntegralWeight,
    pub minus: HalfSeqMinus,
}

impl TensorElement {
    /// `(…, 0) ⊗ t ⊗ (0, …)`.
    pub fn vacuum(t: IntegralWeight) -> Self {
        TensorElement {
            plus: HalfSeqPlus::zero(),
            t,
            minus: HalfSeqMinus::zero(),
        }
    }

    pub fn y(&self, k: i64) -> BigInt {
        if k >= 1 {
            self.plus.get(k)
        } else {
            self.minus.get(k)
        }
    }

    fn add(&mut self, k: i64, delta: &BigInt) -> Result<(), PolyhedralError> {
        if k >= 1 {
            self.plus.add(k, delta)
        } else {
            self.minus.add(k, delta)
        }
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}", self.plus, self.t, self.minus)
    }
}

/// `σ_k` for every `k` in `[lo, lo + vals.len())`.
struct SigmaWindow {
    lo: i64,
    vals: Vec<BigInt>,
    /// Positions `k ≥ upper_tail` all have `σ_k = 0`.
    upper_tail: i64,
    /// Positions `k < lower_tail` have `σ_k` depending on color only.
    lower_tail: i64,
}

impl SigmaWindow {
    fn of_color(&self, i: Index) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.vals
            .iter()
            .enumerate()
            .map(move |(idx, v)| (self.lo + idx as i64, v))
            .filter(move |(k, _)| Index::at(*k) == i)
    }

    fn max(&self, i: Index) -> BigInt {
        self.of_color(i)
            .map(|(_, v)| v)
            .max()
            .expect("window holds both colors")
            .clone()
    }
}

/// The tensor crystal for a fixed Cartan datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralCrystal {
    cartan: CartanData,
}

impl PolyhedralCrystal {
    pub fn new(cartan: CartanData) -> Self {
        PolyhedralCrystal { cartan }
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    fn a(&self, i: Index, j: Index) -> BigInt {
        BigInt::from(self.cartan.entry(i, j))
    }

    /// `wt(y) = t − Σ_j y_j α_{i_j}`.
    pub fn weight(&self, y: &TensorElement) -> IntegralWeight {
        let mut w = y.t.clone();
        for (k, v) in y.plus.iter().chain(y.minus.iter()) {
            w = &w - &self.cartan.simple_root(Index::at(k)).scaled(v);
        }
        w
    }

    /// Sum of `y_k α_{i_k}` over one side.
    fn root_sum<'a>(&self, entries: impl Iterator<Item = (i64, &'a BigInt)>) -> IntegralWeight {
        let mut w = IntegralWeight::zero();
        for (k, v) in entries {
            w = &w + &self.cartan.simple_root(Index::at(k)).scaled(v);
        }
        w
    }

    fn sigma_window(&self, y: &TensorElement) -> SigmaWindow {
        let upper_tail = y.plus.max_key().map_or(1, |k| k + 1);
        let lower_tail = y.minus.min_key().unwrap_or(1);
        let lo = lower_tail - 2;
        let hi = upper_tail + 1;
        let mut vals = vec![BigInt::zero(); (hi - lo + 1) as usize];
        let wt = self.weight(y);

        // Plus side: suffix sums by color of y_j, j > k.
        let mut suffix = [BigInt::zero(), BigInt::zero()];
        for k in (1..=hi).rev() {
            let (c, o) = (Index::at(k), Index::at(k + 1));
            let yk = y.plus.get(k);
            vals[(k - lo) as usize] = &yk
                + self.a(c, c) * &suffix[slot(c)]
                + self.a(c, o) * &suffix[slot(o)];
            suffix[slot(c)] += yk;
        }
        // Minus side: prefix sums by color of y_j, j < k.
        let mut prefix = [BigInt::zero(), BigInt::zero()];
        for k in lo..=0 {
            let (c, o) = (Index::at(k), Index::at(k + 1));
            let yk = y.minus.get(k);
            vals[(k - lo) as usize] = -&yk
                - self.a(c, c) * &prefix[slot(c)]
                - self.a(c, o) * &prefix[slot(o)]
                - wt.pairing(c);
            prefix[slot(c)] += yk;
        }
        SigmaWindow {
            lo,
            vals,
            upper_tail,
            lower_tail,
        }
    }

    /// `σ_k(y)`.
    pub fn sigma_k(&self, y: &TensorElement, k: i64) -> BigInt {
        let w = self.sigma_window(y);
        let idx = k.clamp(w.lo, w.lo + w.vals.len() as i64 - 1);
        // Outside the window σ is constant per color along each tail; pick a
        // representative of the same parity.
        let idx = if Index::at(idx) == Index::at(k) {
            idx
        } else if idx == w.lo {
            idx + 1
        } else {
            idx - 1
        };
        w.vals[(idx - w.lo) as usize].clone()
    }

    pub fn epsilon(&self, y: &TensorElement, i: Index) -> BigInt {
        self.sigma_window(y).max(i)
    }

    pub fn phi(&self, y: &TensorElement, i: Index) -> BigInt {
        self.epsilon(y, i) + self.weight(y).pairing(i)
    }

    /// `e_i^count y`, or `None` if `ε_i(y) < count`.
    pub fn raise_pow(
        &self,
        y: &TensorElement,
        i: Index,
        count: &BigInt,
    ) -> Result<Option<TensorElement>, PolyhedralError> {
        if self.epsilon(y, i) < *count {
            return Ok(None);
        }
        let mut cur = y.clone();
        let mut remaining = count.clone();
        while remaining.is_positive() {
            let w = self.sigma_window(&cur);
            let max = w.max(i);
            let k0 = w
                .of_color(i)
                .filter(|(_, v)| **v == max)
                .map(|(k, _)| k)
                .last()
                .expect("maximum is attained");
            if k0 >= w.upper_tail {
                return Err(PolyhedralError::UnboundedMaximizers { i });
            }
            // σ_k for k > k0 stays put while σ_{k0} drops by one per step.
            let gap = w
                .of_color(i)
                .filter(|(k, _)| *k > k0)
                .map(|(_, v)| &max - v)
                .min()
                .expect("upper tail lies in the window");
            let steps = gap.min(remaining.clone());
            cur.add(k0, &-&steps)?;
            remaining -= steps;
        }
        Ok(Some(cur))
    }

    /// `f_i^count y`, or `None` if `φ_i(y) < count`.
    pub fn lower_pow(
        &self,
        y: &TensorElement,
        i: Index,
        count: &BigInt,
    ) -> Result<Option<TensorElement>, PolyhedralError> {
        if self.phi(y, i) < *count {
            return Ok(None);
        }
        let mut cur = y.clone();
        let mut remaining = count.clone();
        while remaining.is_positive() {
            let w = self.sigma_window(&cur);
            let max = w.max(i);
            let k0 = w
                .of_color(i)
                .find(|(_, v)| **v == max)
                .map(|(k, _)| k)
                .expect("maximum is attained");
            if k0 < w.lower_tail {
                return Err(PolyhedralError::UnboundedMaximizers { i });
            }
            // σ_{k0} grows by one per step, σ_k for k < k0 by two.
            let gap = w
                .of_color(i)
                .filter(|(k, _)| *k < k0)
                .map(|(_, v)| &max - v)
                .min()
                .expect("lower tail lies in the window");
            let steps = gap.min(remaining.clone());
            cur.add(k0, &steps)?;
            remaining -= steps;
        }
        Ok(Some(cur))
    }

    pub fn raising(
        &self,
        y: &TensorElement,
        i: Index,
    ) -> Result<Option<TensorElement>, PolyhedralError> {
        self.raise_pow(y, i, &BigInt::one())
    }

    pub fn lowering(
        &self,
        y: &TensorElement,
        i: Index,
    ) -> Result<Option<TensorElement>, PolyhedralError> {
        self.lower_pow(y, i, &BigInt::one())
    }

    /// `σ⁺_k` on `[1, max_key + 2]`.
    fn plus_sigmas(&self, y: &HalfSeqPlus) -> Vec<(i64, BigInt)> {
        let hi = y.max_key().unwrap_or(0) + 2;
        let mut suffix = [BigInt::zero(), BigInt::zero()];
        let mut out = Vec::with_capacity(hi as usize);
        for k in (1..=hi).rev() {
            let (c, o) = (Index::at(k), Index::at(k + 1));
            let yk = y.get(k);
            out.push((
                k,
                &yk + self.a(c, c) * &suffix[slot(c)] + self.a(c, o) * &suffix[slot(o)],
            ));
            suffix[slot(c)] += yk;
        }
        out.reverse();
        out
    }

    /// `σ⁻_k` on `[min_key − 2, 0]`.
    fn minus_sigmas(&self, y: &HalfSeqMinus) -> Vec<(i64, BigInt)> {
        let lo = y.min_key().unwrap_or(1) - 2;
        let mut prefix = [BigInt::zero(), BigInt::zero()];
        let mut out = Vec::with_capacity((1 - lo) as usize);
        for k in lo..=0 {
            let (c, o) = (Index::at(k), Index::at(k + 1));
            let yk = y.get(k);
            out.push((
                k,
                -&yk - self.a(c, c) * &prefix[slot(c)] - self.a(c, o) * &prefix[slot(o)],
            ));
            prefix[slot(c)] += yk;
        }
        out
    }

    /// `f_i^count` in the crystal `ℤ^{+∞}` alone.
    pub fn plus_lower_pow(&self, y: &HalfSeqPlus, i: Index, count: &BigInt) -> HalfSeqPlus {
        let mut cur = y.clone();
        let mut remaining = count.clone();
        while remaining.is_positive() {
            let sig: Vec<_> = self
                .plus_sigmas(&cur)
                .into_iter()
                .filter(|(k, _)| Index::at(*k) == i)
                .collect();
            let max = sig.iter().map(|(_, v)| v).max().expect("nonempty").clone();
            let pos = sig.iter().position(|(_, v)| *v == max).expect("attained");
            let k0 = sig[pos].0;
            let steps = sig[..pos]
                .iter()
                .map(|(_, v)| &max - v)
                .min()
                .map_or(remaining.clone(), |g| g.min(remaining.clone()));
            cur.add(k0, &steps).expect("adding keeps entries nonnegative");
            remaining -= steps;
        }
        cur
    }

    /// `e_i^count` in the crystal `ℤ^{−∞}` alone.
    pub fn minus_raise_pow(&self, y: &HalfSeqMinus, i: Index, count: &BigInt) -> HalfSeqMinus {
        let mut cur = y.clone();
        let mut remaining = count.clone();
        while remaining.is_positive() {
            let sig: Vec<_> = self
                .minus_sigmas(&cur)
                .into_iter()
                .filter(|(k, _)| Index::at(*k) == i)
                .collect();
            let max = sig.iter().map(|(_, v)| v).max().expect("nonempty").clone();
            let pos = sig.iter().rposition(|(_, v)| *v == max).expect("attained");
            let k0 = sig[pos].0;
            let steps = sig[pos + 1..]
                .iter()
                .map(|(_, v)| &max - v)
                .min()
                .map_or(remaining.clone(), |g| g.min(remaining.clone()));
            cur.add(k0, &-&steps)
                .expect("subtracting keeps entries nonpositive");
            remaining -= steps;
        }
        cur
    }

    /// `c_l y_l − c_{l−1} y_{l+1} ≥ 0` for all `l ≥ 2`.
    pub fn membership_plus(&self, y: &HalfSeqPlus) -> bool {
        let Some(top) = y.max_key() else {
            return true;
        };
        (2..=top).all(|l| {
            let lhs = self.cartan.c_seq(l) * y.get(l) - self.cartan.c_seq(l - 1) * y.get(l + 1);
            !lhs.is_negative()
        })
    }

    /// `c_l y_l − c_{l+1} y_{l−1} ≤ 0` for all `l ≤ −1`.
    pub fn membership_minus(&self, y: &HalfSeqMinus) -> bool {
        let Some(bottom) = y.min_key() else {
            return true;
        };
        (bottom.min(-1)..=-1).all(|l| {
            let lhs = self.cartan.c_seq(l) * y.get(l) - self.cartan.c_seq(l + 1) * y.get(l - 1);
            !lhs.is_positive()
        })
    }

    /// The `∗`-involution on `Im ⊗ T ⊗ Im`.
    pub fn star(&self, y: &TensorElement) -> Result<TensorElement, PolyhedralError> {
        if !self.membership_plus(&y.plus) {
            return Err(PolyhedralError::NotInImage { side: Side::Plus });
        }
        if !self.membership_minus(&y.minus) {
            return Err(PolyhedralError::NotInImage { side: Side::Minus });
        }
        let mut plus = HalfSeqPlus::zero();
        for (k, v) in y.plus.iter().rev() {
            plus = self.plus_lower_pow(&plus, Index::at(k), v);
        }
        let mut minus = HalfSeqMinus::zero();
        for (k, v) in y.minus.iter() {
            minus = self.minus_raise_pow(&minus, Index::at(k), &-v);
        }
        let t = &(&-&y.t + &self.root_sum(y.plus.iter())) + &self.root_sum(y.minus.iter());
        Ok(TensorElement { plus, t, minus })
    }

    /// `S_i`: `f_i^h` if `h = ⟨wt, α_i^∨⟩ ≥ 0`, else `e_i^{−h}`.
    pub fn simple_action(
        &self,
        y: &TensorElement,
        i: Index,
    ) -> Result<TensorElement, PolyhedralError> {
        let h = self.weight(y).pairing(i);
        let out = if h.is_negative() {
            self.raise_pow(y, i, &-h)?
        } else {
            self.lower_pow(y, i, &h)?
        };
        out.ok_or(PolyhedralError::ReflectionFailed { i })
    }

    /// `S_w y` for `w = s_{w[0]} s_{w[1]} ⋯`; the rightmost letter acts
    /// first, so `wt(S_w y) = w·wt(y)`.
    pub fn weyl_action(
        &self,
        y: &TensorElement,
        word: &[Index],
    ) -> Result<TensorElement, PolyhedralError> {
        word.iter()
            .rev()
            .try_fold(y.clone(), |acc, &i| self.simple_action(&acc, i))
    }

    fn extremal_here(&self, y: &TensorElement) -> Result<bool, PolyhedralError> {
        let w = self.sigma_window(y);
        let wt = self.weight(y);
        for i in Index::ALL {
            let h = wt.pairing(i);
            let eps = w.max(i);
            let phi = &eps + &h;
            if !h.is_negative() && !eps.is_zero() {
                return Ok(false);
            }
            if !h.is_positive() && !phi.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn extremal_checked(&self, y: &TensorElement, depth: usize) -> Result<bool, PolyhedralError> {
        if !self.extremal_here(y)? {
            return Ok(false);
        }
        // x_{m+1} = s_{i_{m+1}} x_m and x_{m−1} = s_{i_m} x_m.
        let mut forward = y.clone();
        let mut backward = y.clone();
        for step in 1..=depth as i64 {
            forward = self.simple_action(&forward, Index::at(step))?;
            backward = self.simple_action(&backward, Index::at(1 - step))?;
            if !self.extremal_here(&forward)? || !self.extremal_here(&backward)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Tests extremality against the Weyl group elements `x_m`, `|m| ≤ depth`.
    /// `true` is a verdict at that depth only. An operator failing along the
    /// way counts as a violation.
    pub fn is_extremal_truncated(&self, y: &TensorElement, depth: usize) -> bool {
        self.extremal_checked(y, depth).unwrap_or(false)
    }

    /// `y` lies in the crystal basis of the extremal weight module iff `y^∗`
    /// is extremal; here checked to the given depth.
    pub fn is_in_crystal_basis(
        &self,
        y: &TensorElement,
        depth: usize,
    ) -> Result<bool, PolyhedralError> {
        Ok(self.is_extremal_truncated(&self.star(y)?, depth))
    }
}

fn slot(i: Index) -> usize {
    match i {
        Index::One => 0,
        Index::Two => 1,
    }
}

/// The default Weyl-word depth for extremality checks.
pub const DEFAULT_EXTREMALITY_DEPTH: usize = 8;

impl Crystal for PolyhedralCrystal {
    type Element = TensorElement;
    type Error = PolyhedralError;

    fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    fn weight(&self, b: &TensorElement) -> IntegralWeight {
        PolyhedralCrystal::weight(self, b)
    }

    fn epsilon(&self, b: &TensorElement, i: Index) -> BigInt {
        PolyhedralCrystal::epsilon(self, b, i)
    }

    fn phi(&self, b: &TensorElement, i: Index) -> BigInt {
        PolyhedralCrystal::phi(self, b, i)
    }

    fn raise(&self, b: &TensorElement, i: Index) -> Result<Option<TensorElement>, PolyhedralError> {
        self.raising(b, i)
    }

    fn lower(&self, b: &TensorElement, i: Index) -> Result<Option<TensorElement>, PolyhedralError> {
        self.lowering(b, i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ShapeWeight;

    fn setup() -> (PolyhedralCrystal, TensorElement) {
        let cartan = CartanData::symmetric(3).unwrap();
        let shape = ShapeWeight::new(&cartan, 1, 1).unwrap();
        (
            PolyhedralCrystal::new(cartan),
            TensorElement::vacuum(shape.lambda()),
        )
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn plus(entries: &[(i64, i64)]) -> HalfSeqPlus {
        HalfSeqPlus::from_entries(entries.iter().copied()).unwrap()
    }

    fn minus(entries: &[(i64, i64)]) -> HalfSeqMinus {
        HalfSeqMinus::from_entries(entries.iter().copied()).unwrap()
    }

    #[test]
    fn sigma_of_vacuum() {
        let (pc, z) = setup();
        for k in 1..6 {
            assert_eq!(pc.sigma_k(&z, k), int(0));
        }
        assert_eq!(pc.sigma_k(&z, 0), int(1));
        assert_eq!(pc.sigma_k(&z, -1), int(-1));
        assert_eq!(pc.sigma_k(&z, -40), int(1));
        assert_eq!(pc.sigma_k(&z, -41), int(-1));
    }

    #[test]
    fn sigma_matches_definition() {
        let cartan = CartanData::new(3, 4).unwrap();
        let pc = PolyhedralCrystal::new(cartan.clone());
        let y = TensorElement {
            plus: plus(&[(1, 2), (2, 5), (4, 1)]),
            t: IntegralWeight::new(2, -1),
            minus: minus(&[(0, -1), (-3, -2)]),
        };
        let wt = pc.weight(&y);
        for k in -8..8 {
            let c = Index::at(k);
            let direct = if k >= 1 {
                (k + 1..10).fold(y.y(k), |acc, j| {
                    acc + BigInt::from(cartan.entry(c, Index::at(j))) * y.y(j)
                })
            } else {
                (-12..k).fold(-y.y(k), |acc, j| {
                    acc - BigInt::from(cartan.entry(c, Index::at(j))) * y.y(j)
                }) - wt.pairing(c)
            };
            assert_eq!(pc.sigma_k(&y, k), direct, "k = {k}");
        }
    }

    #[test]
    fn statistics_of_vacuum() {
        let (pc, z) = setup();
        assert_eq!(pc.weight(&z), z.t);
        assert_eq!(pc.epsilon(&z, Index::Two), int(1));
        assert_eq!(pc.phi(&z, Index::Two), int(0));
        assert_eq!(pc.epsilon(&z, Index::One), int(0));
        assert_eq!(pc.phi(&z, Index::One), int(1));
    }

    #[test]
    fn operators_on_vacuum() {
        let (pc, z) = setup();
        let f1 = pc.lowering(&z, Index::One).unwrap().unwrap();
        assert_eq!(f1.plus, plus(&[(1, 1)]));
        assert!(f1.minus.is_zero());
        assert_eq!(pc.lowering(&z, Index::Two).unwrap(), None);
        let e2 = pc.raising(&z, Index::Two).unwrap().unwrap();
        assert!(e2.plus.is_zero());
        assert_eq!(e2.minus, minus(&[(0, -1)]));
        assert_eq!(pc.raising(&z, Index::One).unwrap(), None);
    }

    #[test]
    fn membership_examples() {
        let (pc, _) = setup();
        assert!(pc.membership_plus(&HalfSeqPlus::zero()));
        assert!(pc.membership_plus(&plus(&[(2, 2), (1, 1)])));
        assert!(pc.membership_plus(&plus(&[(3, 1), (2, 3), (1, 1)])));
        assert!(!pc.membership_plus(&plus(&[(3, 1)])));
        assert!(pc.membership_minus(&HalfSeqMinus::zero()));
        assert!(pc.membership_minus(&minus(&[(0, -1), (-1, -2)])));
        assert!(!pc.membership_minus(&minus(&[(-2, -1)])));
    }

    #[test]
    fn sides_reject_wrong_signs() {
        assert!(HalfSeqPlus::from_entries([(1, -1)]).is_err());
        assert!(HalfSeqPlus::from_entries([(0, 1)]).is_err());
        assert!(HalfSeqMinus::from_entries([(0, 1)]).is_err());
        assert!(HalfSeqMinus::from_entries([(1, -1)]).is_err());
        assert!(HalfSeqPlus::from_entries([(2, 0)]).unwrap().is_zero());
    }

    #[test]
    fn star_examples() {
        let (pc, z) = setup();
        let s = pc.star(&z).unwrap();
        assert_eq!(s, TensorElement::vacuum(-&z.t));
        let f1 = pc.lowering(&z, Index::One).unwrap().unwrap();
        let s1 = pc.star(&f1).unwrap();
        assert_eq!(pc.weight(&s1), -&z.t);
        assert_eq!(pc.star(&s1).unwrap(), f1);
        let bad = TensorElement {
            plus: plus(&[(3, 1)]),
            ..z.clone()
        };
        assert_eq!(
            pc.star(&bad),
            Err(PolyhedralError::NotInImage { side: Side::Plus })
        );
        let bad_minus = TensorElement {
            minus: minus(&[(-2, -1)]),
            ..z
        };
        assert_eq!(
            pc.star(&bad_minus),
            Err(PolyhedralError::NotInImage { side: Side::Minus })
        );
    }

    #[test]
    fn weyl_action_examples() {
        let (pc, z) = setup();
        let cartan = pc.cartan().clone();
        let s1 = pc.simple_action(&z, Index::One).unwrap();
        assert_eq!(pc.weight(&s1), IntegralWeight::new(-1, 2));
        assert_eq!(pc.simple_action(&s1, Index::One).unwrap(), z);
        let word = [Index::Two, Index::One, Index::Two];
        let moved = pc.weyl_action(&z, &word).unwrap();
        let expected = word
            .iter()
            .rev()
            .fold(z.t.clone(), |w, &i| cartan.simple_reflection(&w, i));
        assert_eq!(pc.weight(&moved), expected);
        assert!(pc.membership_plus(&moved.plus) && pc.membership_minus(&moved.minus));
    }

    #[test]
    fn extremality_examples() {
        let (pc, z) = setup();
        assert!(pc.is_extremal_truncated(&z, 6));
        assert!(pc.is_in_crystal_basis(&z, 6).unwrap());
        let f1 = pc.lowering(&z, Index::One).unwrap().unwrap();
        assert!(pc.is_extremal_truncated(&pc.star(&f1).unwrap(), 6));
        // y₁ = 1 on both sides at once is not in the crystal basis.
        let mixed = TensorElement {
            plus: plus(&[(1, 1)]),
            t: z.t.clone(),
            minus: minus(&[(0, -1)]),
        };
        assert!(!pc.is_in_crystal_basis(&mixed, 6).unwrap());
    }

    #[test]
    fn powers_agree_with_unit_steps() {
        let (pc, z) = setup();
        let mut y = z;
        for i in [Index::One, Index::Two, Index::One, Index::One, Index::Two] {
            y = pc.lowering(&y, i).unwrap().unwrap_or(y);
        }
        for i in Index::ALL {
            let phi = pc.phi(&y, i);
            let mut step = y.clone();
            let mut n = 0i64;
            while let Some(next) = pc.lowering(&step, i).unwrap() {
                n += 1;
                step = next;
                assert_eq!(pc.lower_pow(&y, i, &int(n)).unwrap(), Some(step.clone()));
            }
            assert_eq!(int(n), phi);
            assert_eq!(pc.lower_pow(&y, i, &int(n + 1)).unwrap(), None);
        }
    }
}
