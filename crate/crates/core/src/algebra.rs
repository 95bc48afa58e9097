//! Rank-2 Cartan data, integral weights, the Weyl orbit `x_m λ` and the
//! admissibility classification of shapes `λ = k₁Λ₁ − k₂Λ₂`.
//!
//! The generalized Cartan matrix is
//!
//! ```text
//!     ( 2   -a1 )
//!     ( -a2   2 )        a1, a2 >= 2,  a1 * a2 > 4
//! ```
//!
//! so that `α₁ = 2Λ₁ − a₂Λ₂` and `α₂ = −a₁Λ₁ + 2Λ₂` in the basis of
//! fundamental weights. Weights are stored by their coordinates in that basis,
//! which are exactly the pairings with the simple coroots.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::memo::{Domain, Recurrence};

/// A simple root index, `1` or `2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Index {
    One,
    Two,
}

impl Index {
    pub const ALL: [Index; 2] = [Index::One, Index::Two];

    /// The color `i_k` attached to position `k` of the reduced words
    /// `(…, 2, 1, 2, 1)` and `(2, 1, 2, 1, …)`: `1` for odd `k`, `2` for even `k`.
    pub fn at(k: i64) -> Index {
        if k.rem_euclid(2) == 0 {
            Index::Two
        } else {
            Index::One
        }
    }

    pub fn other(self) -> Index {
        match self {
            Index::One => Index::Two,
            Index::Two => Index::One,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Index::One => 1,
            Index::Two => 2,
        }
    }
}

impl TryFrom<u8> for Index {
    type Error = u8;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        match value {
            1 => Ok(Index::One),
            2 => Ok(Index::Two),
            other => Err(other),
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// A point `c₁Λ₁ + c₂Λ₂` of the weight lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntegralWeight {
    c1: BigInt,
    c2: BigInt,
}

impl IntegralWeight {
    pub fn new(c1: impl Into<BigInt>, c2: impl Into<BigInt>) -> Self {
        IntegralWeight {
            c1: c1.into(),
            c2: c2.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The fundamental weight `Λ_i`.
    pub fn fundamental(i: Index) -> Self {
        match i {
            Index::One => IntegralWeight::new(1, 0),
            Index::Two => IntegralWeight::new(0, 1),
        }
    }

    pub fn c1(&self) -> &BigInt {
        &self.c1
    }

    pub fn c2(&self) -> &BigInt {
        &self.c2
    }

    /// `⟨w, α_i^∨⟩`, the `i`-th coordinate.
    pub fn pairing(&self, i: Index) -> BigInt {
        match i {
            Index::One => self.c1.clone(),
            Index::Two => self.c2.clone(),
        }
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        IntegralWeight {
            c1: &self.c1 * k,
            c2: &self.c2 * k,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }
}

impl Add for &IntegralWeight {
    type Output = IntegralWeight;
    fn add(self, rhs: &IntegralWeight) -> IntegralWeight {
        IntegralWeight {
            c1: &self.c1 + &rhs.c1,
            c2: &self.c2 + &rhs.c2,
        }
    }
}

impl Add for IntegralWeight {
    type Output = IntegralWeight;
    fn add(self, rhs: IntegralWeight) -> IntegralWeight {
        &self + &rhs
    }
}

impl Sub for &IntegralWeight {
    type Output = IntegralWeight;
    fn sub(self, rhs: &IntegralWeight) -> IntegralWeight {
        IntegralWeight {
            c1: &self.c1 - &rhs.c1,
            c2: &self.c2 - &rhs.c2,
        }
    }
}

impl Sub for IntegralWeight {
    type Output = IntegralWeight;
    fn sub(self, rhs: IntegralWeight) -> IntegralWeight {
        &self - &rhs
    }
}

impl Neg for &IntegralWeight {
    type Output = IntegralWeight;
    fn neg(self) -> IntegralWeight {
        IntegralWeight {
            c1: -&self.c1,
            c2: -&self.c2,
        }
    }
}

impl Neg for IntegralWeight {
    type Output = IntegralWeight;
    fn neg(self) -> IntegralWeight {
        -&self
    }
}

impl fmt::Display for IntegralWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c1, self.c2)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error("a1 = {a1} and a2 = {a2} must both be at least 2")]
    EntryTooSmall { a1: i64, a2: i64 },
    #[error("a1 * a2 = {product} must exceed 4 for a hyperbolic rank-2 algebra")]
    NotHyperbolic { product: i64 },
}

/// The pair `(a₁, a₂)` of a hyperbolic rank-2 generalized Cartan matrix,
/// together with the memoized sequence `c_j` that cuts out the polyhedral
/// images.
#[derive(Clone)]
pub struct CartanData {
    a1: i64,
    a2: i64,
    c_up: Arc<Recurrence>,
    c_down: Arc<Recurrence>,
}

impl CartanData {
    pub fn new(a1: i64, a2: i64) -> Result<Self, CartanError> {
        if a1 < 2 || a2 < 2 {
            return Err(CartanError::EntryTooSmall { a1, a2 });
        }
        let product = a1.checked_mul(a2).unwrap_or(i64::MAX);
        if product <= 4 {
            return Err(CartanError::NotHyperbolic { product });
        }
        // Both halves obey c_j + c_{j+2} = (a1 if j even else a2) c_{j+1}.
        let c_up = Recurrence::new(1, BigInt::one(), a1.into(), a1, a2, Domain::AtLeast(1));
        let c_down = Recurrence::new(-1, a2.into(), BigInt::one(), a1, a2, Domain::AtMost(0));
        Ok(CartanData {
            a1,
            a2,
            c_up: Arc::new(c_up),
            c_down: Arc::new(c_down),
        })
    }

    pub fn symmetric(a: i64) -> Result<Self, CartanError> {
        Self::new(a, a)
    }

    pub fn a1(&self) -> i64 {
        self.a1
    }

    pub fn a2(&self) -> i64 {
        self.a2
    }

    pub fn is_symmetric(&self) -> bool {
        self.a1 == self.a2
    }

    /// Matrix entry `⟨α_j, α_i^∨⟩`.
    pub fn entry(&self, i: Index, j: Index) -> i64 {
        match (i, j) {
            (Index::One, Index::One) | (Index::Two, Index::Two) => 2,
            (Index::One, Index::Two) => -self.a1,
            (Index::Two, Index::One) => -self.a2,
        }
    }

    pub fn simple_root(&self, i: Index) -> IntegralWeight {
        match i {
            Index::One => IntegralWeight::new(2, -self.a2),
            Index::Two => IntegralWeight::new(-self.a1, 2),
        }
    }

    /// `n₁α₁ + n₂α₂`.
    pub fn root_combination(&self, n1: &BigInt, n2: &BigInt) -> IntegralWeight {
        &self.simple_root(Index::One).scaled(n1) + &self.simple_root(Index::Two).scaled(n2)
    }

    /// `s_i(w) = w − ⟨w, α_i^∨⟩ α_i`.
    pub fn simple_reflection(&self, w: &IntegralWeight, i: Index) -> IntegralWeight {
        w - &self.simple_root(i).scaled(&w.pairing(i))
    }

    /// Solves `d = n₁α₁ + n₂α₂` over the integers.
    pub fn root_coordinates_of(&self, d: &IntegralWeight) -> Option<RootCoords> {
        let det = BigInt::from(4 - self.a1 * self.a2);
        let n1_num: BigInt = d.c1() * 2 + d.c2() * self.a1;
        let n2_num: BigInt = d.c1() * self.a2 + d.c2() * 2;
        let (n1, r1) = n1_num.div_rem(&det);
        let (n2, r2) = n2_num.div_rem(&det);
        (r1.is_zero() && r2.is_zero()).then_some(RootCoords { n1, n2 })
    }

    /// The sequence `c_j`, `j ∈ ℤ`: `c₁ = 1, c₂ = a₁` upward and
    /// `c₀ = 1, c₋₁ = a₂` downward.
    pub fn c_seq(&self, j: i64) -> BigInt {
        if j >= 1 {
            self.c_up.get(j)
        } else {
            self.c_down.get(j)
        }
    }
}

impl PartialEq for CartanData {
    fn eq(&self, other: &Self) -> bool {
        self.a1 == other.a1 && self.a2 == other.a2
    }
}

impl Eq for CartanData {}

impl std::hash::Hash for CartanData {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.a1.hash(state);
        self.a2.hash(state);
    }
}

impl fmt::Debug for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CartanData")
            .field("a1", &self.a1)
            .field("a2", &self.a2)
            .finish()
    }
}

/// Offset `(n₁, n₂)` with `μ = λ − n₁α₁ − n₂α₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootCoords {
    pub n1: BigInt,
    pub n2: BigInt,
}

impl RootCoords {
    pub fn new(n1: impl Into<BigInt>, n2: impl Into<BigInt>) -> Self {
        RootCoords {
            n1: n1.into(),
            n2: n2.into(),
        }
    }
}

impl fmt::Display for RootCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.n1, self.n2)
    }
}

/// Which of the two admissible inequality chains a shape satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ShapeCase {
    /// `k₂ ≤ k₁ < (a₁ − 1)k₂`
    CaseI,
    /// `k₁ < k₂ ≤ (a₂ − 1)k₁`
    CaseII,
}

/// Why an integral weight is not an admissible shape.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightRejection {
    #[error("weight {0} is dominant")]
    Dominant(IntegralWeight),
    #[error("weight {0} is antidominant")]
    Antidominant(IntegralWeight),
    #[error("weight {0} is not of the form k1*L1 - k2*L2 with k1, k2 > 0")]
    WrongSigns(IntegralWeight),
    #[error("k2 <= k1 holds but k1 < (a1-1)*k2 fails: k1 = {k1}, (a1-1)*k2 = {bound}")]
    CaseIUpperBound { k1: BigInt, bound: BigInt },
    #[error("k1 < k2 holds but k2 <= (a2-1)*k1 fails: k2 = {k2}, (a2-1)*k1 = {bound}")]
    CaseIIUpperBound { k2: BigInt, bound: BigInt },
}

/// Position `m` on the Hasse chain `… ← x₁λ ← x₀λ ← x₋₁λ ← …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitIndex(pub i64);

impl OrbitIndex {
    /// `i(m)`: the simple root with `⟨x_mλ, α_{i(m)}^∨⟩ = −p_m`.
    pub fn descent(self) -> Index {
        Index::at(self.0)
    }

    /// `i'(m)`: the simple root with `⟨x_mλ, α_{i'(m)}^∨⟩ = p_{m+1}`.
    pub fn ascent(self) -> Index {
        Index::at(self.0).other()
    }

    /// The orbit index of `s_i(x_mλ)`.
    pub fn reflect(self, i: Index) -> OrbitIndex {
        if Index::at(self.0 + 1) == i {
            OrbitIndex(self.0 + 1)
        } else {
            OrbitIndex(self.0 - 1)
        }
    }
}

impl fmt::Display for OrbitIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

struct ShapeInner {
    cartan: CartanData,
    k1: BigInt,
    k2: BigInt,
    case: ShapeCase,
    p: Recurrence,
}

/// An admissible shape `λ = k₁Λ₁ − k₂Λ₂` together with its memoized
/// sequence `p_m`.
///
/// Cloning is cheap; clones share the memo table.
#[derive(Clone)]
pub struct ShapeWeight {
    inner: Arc<ShapeInner>,
}

/// Accepts `w = k₁Λ₁ − k₂Λ₂` when it satisfies one of the two admissible
/// inequality chains. Nothing is normalized: a weight that is only
/// W-conjugate to an admissible one is rejected.
pub fn classify_weight(
    cartan: &CartanData,
    w: &IntegralWeight,
) -> Result<ShapeWeight, WeightRejection> {
    let (c1, c2) = (w.c1(), w.c2());
    if !c1.is_negative() && !c2.is_negative() {
        return Err(WeightRejection::Dominant(w.clone()));
    }
    if !c1.is_positive() && !c2.is_positive() {
        return Err(WeightRejection::Antidominant(w.clone()));
    }
    if !(c1.is_positive() && c2.is_negative()) {
        return Err(WeightRejection::WrongSigns(w.clone()));
    }
    let k1 = c1.clone();
    let k2 = -c2;
    let case = if k2 <= k1 {
        let bound = &k2 * (cartan.a1() - 1);
        if k1 >= bound {
            return Err(WeightRejection::CaseIUpperBound { k1, bound });
        }
        ShapeCase::CaseI
    } else {
        let bound = &k1 * (cartan.a2() - 1);
        if k2 > bound {
            return Err(WeightRejection::CaseIIUpperBound { k2, bound });
        }
        ShapeCase::CaseII
    };
    // p_m + p_{m+2} = (a2 if m even else a1) p_{m+1}, p_0 = k2, p_1 = k1.
    let p = Recurrence::new(
        0,
        k2.clone(),
        k1.clone(),
        cartan.a2(),
        cartan.a1(),
        Domain::All,
    );
    Ok(ShapeWeight {
        inner: Arc::new(ShapeInner {
            cartan: cartan.clone(),
            k1,
            k2,
            case,
            p,
        }),
    })
}

impl ShapeWeight {
    pub fn new(
        cartan: &CartanData,
        k1: impl Into<BigInt>,
        k2: impl Into<BigInt>,
    ) -> Result<Self, WeightRejection> {
        let k2: BigInt = k2.into();
        classify_weight(cartan, &IntegralWeight::new(k1, -k2))
    }

    pub fn cartan(&self) -> &CartanData {
        &self.inner.cartan
    }

    pub fn k1(&self) -> &BigInt {
        &self.inner.k1
    }

    pub fn k2(&self) -> &BigInt {
        &self.inner.k2
    }

    pub fn case(&self) -> ShapeCase {
        self.inner.case
    }

    pub fn lambda(&self) -> IntegralWeight {
        IntegralWeight::new(self.inner.k1.clone(), -&self.inner.k2)
    }

    /// `p_m` for any integer `m`; always positive.
    pub fn p(&self, m: i64) -> BigInt {
        self.inner.p.get(m)
    }

    /// `x_mλ`: `p_{m+1}Λ₁ − p_mΛ₂` for even `m`, `−p_mΛ₁ + p_{m+1}Λ₂` for odd `m`.
    pub fn orbit_weight(&self, m: OrbitIndex) -> IntegralWeight {
        let (pm, pm1) = (self.p(m.0), self.p(m.0 + 1));
        if m.0.rem_euclid(2) == 0 {
            IntegralWeight::new(pm1, -pm)
        } else {
            IntegralWeight::new(-pm, pm1)
        }
    }

    /// `⟨x_mλ, α_i^∨⟩` without materializing the weight.
    pub fn orbit_pairing(&self, m: OrbitIndex, i: Index) -> BigInt {
        if i == m.descent() {
            -self.p(m.0)
        } else {
            self.p(m.0 + 1)
        }
    }

    /// `λ − n₁α₁ − n₂α₂`.
    pub fn weight_at(&self, coords: &RootCoords) -> IntegralWeight {
        &self.lambda() - &self.cartan().root_combination(&coords.n1, &coords.n2)
    }

    /// The `(n₁, n₂)` with `μ = λ − n₁α₁ − n₂α₂`, if `λ − μ` lies in the
    /// root lattice.
    pub fn root_coords(&self, mu: &IntegralWeight) -> Option<RootCoords> {
        self.cartan().root_coordinates_of(&(&self.lambda() - mu))
    }

    pub fn is_coprime(&self) -> bool {
        self.inner.k1.gcd(&self.inner.k2).is_one()
    }
}

impl PartialEq for ShapeWeight {
    fn eq(&self, other: &Self) -> bool {
        self.inner.cartan == other.inner.cartan
            && self.inner.k1 == other.inner.k1
            && self.inner.k2 == other.inner.k2
    }
}

impl Eq for ShapeWeight {}

impl fmt::Debug for ShapeWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ShapeWeight")
            .field("cartan", &self.inner.cartan)
            .field("k1", &self.inner.k1)
            .field("k2", &self.inner.k2)
            .field("case", &self.inner.case)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> CartanData {
        CartanData::symmetric(3).unwrap()
    }

    fn w(c1: i64, c2: i64) -> IntegralWeight {
        IntegralWeight::new(c1, c2)
    }

    #[test]
    fn cartan_rejects_finite_and_affine() {
        assert!(matches!(
            CartanData::new(1, 5),
            Err(CartanError::EntryTooSmall { .. })
        ));
        assert!(matches!(
            CartanData::new(2, 2),
            Err(CartanError::NotHyperbolic { product: 4 })
        ));
        assert!(CartanData::new(2, 3).is_ok());
    }

    #[test]
    fn pairings_of_simple_roots() {
        let c = CartanData::new(3, 4).unwrap();
        let a1 = c.simple_root(Index::One);
        assert_eq!(a1.pairing(Index::One), BigInt::from(2));
        assert_eq!(a1.pairing(Index::Two), BigInt::from(-4));
        let a2 = c.simple_root(Index::Two);
        assert_eq!(a2.pairing(Index::One), BigInt::from(-3));
        for i in Index::ALL {
            for j in Index::ALL {
                assert_eq!(
                    c.simple_root(j).pairing(i),
                    BigInt::from(c.entry(i, j)),
                    "entry ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn simple_reflections() {
        let c = a3();
        let l1 = IntegralWeight::fundamental(Index::One);
        assert_eq!(
            c.simple_reflection(&l1, Index::One),
            &l1 - &c.simple_root(Index::One)
        );
        assert_eq!(c.simple_reflection(&l1, Index::Two), l1);
        assert_eq!(c.simple_reflection(&w(1, -1), Index::One), w(-1, 2));
    }

    #[test]
    fn classification_examples() {
        let c = a3();
        let shape = classify_weight(&c, &w(1, -1)).unwrap();
        assert_eq!(shape.case(), ShapeCase::CaseI);
        assert!(matches!(
            classify_weight(&c, &w(2, -1)),
            Err(WeightRejection::CaseIUpperBound { .. })
        ));
        assert!(matches!(
            classify_weight(&c, &w(1, 1)),
            Err(WeightRejection::Dominant(_))
        ));
        assert!(matches!(
            classify_weight(&c, &w(-1, -1)),
            Err(WeightRejection::Antidominant(_))
        ));
        assert!(matches!(
            classify_weight(&c, &w(-1, 2)),
            Err(WeightRejection::WrongSigns(_))
        ));
        assert!(matches!(
            classify_weight(&c, &IntegralWeight::zero()),
            Err(WeightRejection::Dominant(_))
        ));
        let c4 = CartanData::symmetric(4).unwrap();
        assert_eq!(
            ShapeWeight::new(&c4, 1, 2).unwrap().case(),
            ShapeCase::CaseII
        );
        assert!(matches!(
            ShapeWeight::new(&c4, 1, 4),
            Err(WeightRejection::CaseIIUpperBound { .. })
        ));
    }

    #[test]
    fn p_sequence_values() {
        let shape = ShapeWeight::new(&a3(), 1, 1).unwrap();
        let got: Vec<i64> = (-2..=4)
            .map(|m| i64::try_from(shape.p(m)).unwrap())
            .collect();
        // m = -2, -1, 0, 1, 2, 3, 4
        assert_eq!(got, vec![5, 2, 1, 1, 2, 5, 13]);
    }

    #[test]
    fn c_sequence_values() {
        let c = a3();
        let got: Vec<i64> = (-2..=4)
            .map(|j| i64::try_from(c.c_seq(j)).unwrap())
            .collect();
        // j = -2, -1, 0, 1, 2, 3, 4
        assert_eq!(got, vec![8, 3, 1, 1, 3, 8, 21]);
        let c34 = CartanData::new(3, 4).unwrap();
        assert_eq!(c34.c_seq(2), BigInt::from(3));
        assert_eq!(c34.c_seq(3), BigInt::from(11));
        assert_eq!(c34.c_seq(-1), BigInt::from(4));
        assert_eq!(c34.c_seq(-2), BigInt::from(11));
    }

    #[test]
    fn orbit_weights_match_reflections() {
        let c = a3();
        let shape = ShapeWeight::new(&c, 1, 1).unwrap();
        let lambda = shape.lambda();
        assert_eq!(shape.orbit_weight(OrbitIndex(0)), lambda);
        assert_eq!(
            shape.orbit_weight(OrbitIndex(1)),
            c.simple_reflection(&lambda, Index::One)
        );
        assert_eq!(shape.orbit_weight(OrbitIndex(1)), w(-1, 2));
        assert_eq!(
            shape.orbit_weight(OrbitIndex(-1)),
            c.simple_reflection(&lambda, Index::Two)
        );
        assert_eq!(shape.orbit_weight(OrbitIndex(-1)), w(-2, 1));
    }

    #[test]
    fn orbit_index_reflection_matches_weights() {
        let c = CartanData::new(5, 3).unwrap();
        let shape = ShapeWeight::new(&c, 2, 1).unwrap();
        for m in -10..=10 {
            let m = OrbitIndex(m);
            for i in Index::ALL {
                let reflected = c.simple_reflection(&shape.orbit_weight(m), i);
                assert_eq!(shape.orbit_weight(m.reflect(i)), reflected);
                assert_eq!(shape.orbit_weight(m).pairing(i), shape.orbit_pairing(m, i));
            }
        }
    }

    #[test]
    fn root_coordinates() {
        let c = a3();
        let shape = ShapeWeight::new(&c, 1, 1).unwrap();
        let lambda = shape.lambda();
        assert_eq!(shape.root_coords(&lambda), Some(RootCoords::new(0, 0)));
        let mu = &lambda - &c.simple_root(Index::One);
        assert_eq!(shape.root_coords(&mu), Some(RootCoords::new(1, 0)));
        assert_eq!(shape.root_coords(&w(2, 0)), Some(RootCoords::new(1, 1)));
        // 5 = |det|; Λ1 alone is not in the root lattice offset from λ.
        assert_eq!(shape.root_coords(&(&lambda - &w(1, 0))), None);
    }
}
