//! A minimal crystal interface shared by the path model and the polyhedral
//! model, with breadth-first balls and a checker for the normal-crystal
//! axioms.

use std::collections::{HashMap, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::{CartanData, Index, IntegralWeight};

/// A crystal for a rank-2 Cartan datum.
///
/// `raise` and `lower` return `Ok(None)` for the null element. `Err` is
/// reserved for inputs that leave the model's domain.
pub trait Crystal {
    type Element: Clone + Eq + Hash + Debug;
    type Error: std::error::Error;

    fn cartan(&self) -> &CartanData;
    fn weight(&self, b: &Self::Element) -> IntegralWeight;
    fn epsilon(&self, b: &Self::Element, i: Index) -> BigInt;
    fn phi(&self, b: &Self::Element, i: Index) -> BigInt;
    fn raise(&self, b: &Self::Element, i: Index) -> Result<Option<Self::Element>, Self::Error>;
    fn lower(&self, b: &Self::Element, i: Index) -> Result<Option<Self::Element>, Self::Error>;
}

/// Which operators a ball is allowed to follow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Moves {
    All,
    LoweringOnly,
    RaisingOnly,
}

/// Elements within a fixed operator distance of a seed, in BFS order.
///
/// Neighbours are visited in the order `f₁, f₂, e₁, e₂`.
#[derive(Clone, Debug)]
pub struct Ball<E> {
    pub vertices: Vec<E>,
    pub depth: Vec<usize>,
    pub index: HashMap<E, usize>,
    /// `(u, v, i)` with `f_i(u) = v`, both endpoints in the ball. Sorted by
    /// `u`, then `i`.
    pub edges: Vec<(usize, usize, Index)>,
}

impl<E: Clone + Eq + Hash> Ball<E> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, b: &E) -> bool {
        self.index.contains_key(b)
    }
}

pub fn ball<C: Crystal>(
    crystal: &C,
    seed: C::Element,
    radius: usize,
    moves: Moves,
) -> Result<Ball<C::Element>, C::Error> {
    let mut vertices = vec![seed.clone()];
    let mut depth = vec![0];
    let mut index = HashMap::from([(seed, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        if depth[u] == radius {
            continue;
        }
        let b = vertices[u].clone();
        let mut next = Vec::with_capacity(4);
        if moves != Moves::RaisingOnly {
            for i in Index::ALL {
                next.push(crystal.lower(&b, i)?);
            }
        }
        if moves != Moves::LoweringOnly {
            for i in Index::ALL {
                next.push(crystal.raise(&b, i)?);
            }
        }
        for v in next.into_iter().flatten() {
            if !index.contains_key(&v) {
                index.insert(v.clone(), vertices.len());
                queue.push_back(vertices.len());
                vertices.push(v);
                depth.push(depth[u] + 1);
            }
        }
    }
    let mut edges = Vec::new();
    for (u, b) in vertices.iter().enumerate() {
        for i in Index::ALL {
            if let Some(v) = crystal.lower(b, i)? {
                if let Some(&v) = index.get(&v) {
                    edges.push((u, v, i));
                }
            }
        }
    }
    Ok(Ball {
        vertices,
        depth,
        index,
        edges,
    })
}

#[derive(Debug, Error)]
pub enum AxiomViolation<E: Debug, Err: std::error::Error> {
    #[error("at {element:?}, i = {index}: {what}")]
    Broken {
        element: E,
        index: Index,
        what: String,
    },
    #[error("operator failed: {0}")]
    Operator(Err),
}

/// Longest `e`/`f` string checked explicitly against `ε`/`φ`.
pub const STRING_CHECK_CAP: u64 = 64;

/// Checks, for `b` and `i`: `ε, φ ≥ 0`; `φ − ε = ⟨wt, α_i^∨⟩`; `e_i` and
/// `f_i` are mutually inverse; weights move by `∓α_i`; `ε`/`φ` move by one;
/// nullity of `e_i`/`f_i` matches `ε = 0`/`φ = 0`; and, when short enough,
/// `ε`/`φ` equal the actual string lengths. Returns the number of
/// individual checks performed.
pub fn check_normal_at<C: Crystal>(
    crystal: &C,
    b: &C::Element,
    i: Index,
) -> Result<usize, AxiomViolation<C::Element, C::Error>> {
    let mut count = 0usize;
    let mut require = |ok: bool, what: &dyn Fn() -> String| {
        count += 1;
        if ok {
            Ok(())
        } else {
            Err(AxiomViolation::Broken {
                element: b.clone(),
                index: i,
                what: what(),
            })
        }
    };
    let cartan = crystal.cartan();
    let alpha = cartan.simple_root(i);
    let wt = crystal.weight(b);
    let eps = crystal.epsilon(b, i);
    let phi = crystal.phi(b, i);
    require(!eps.is_negative(), &|| format!("ε = {eps} < 0"))?;
    require(!phi.is_negative(), &|| format!("φ = {phi} < 0"))?;
    require(&phi - &eps == wt.pairing(i), &|| {
        format!("φ − ε = {} but ⟨wt, α^∨⟩ = {}", &phi - &eps, wt.pairing(i))
    })?;

    let lowered = crystal.lower(b, i).map_err(AxiomViolation::Operator)?;
    require(lowered.is_none() == phi.is_zero(), &|| {
        format!("f is null: {}, φ = {phi}", lowered.is_none())
    })?;
    if let Some(fb) = &lowered {
        let back = crystal.raise(fb, i).map_err(AxiomViolation::Operator)?;
        require(back.as_ref() == Some(b), &|| format!("e(f b) = {back:?}"))?;
        require(crystal.weight(fb) == &wt - &alpha, &|| {
            format!("wt(f b) = {}", crystal.weight(fb))
        })?;
        require(crystal.epsilon(fb, i) == &eps + 1, &|| {
            format!("ε(f b) = {}", crystal.epsilon(fb, i))
        })?;
        require(crystal.phi(fb, i) == &phi - 1, &|| {
            format!("φ(f b) = {}", crystal.phi(fb, i))
        })?;
    }

    let raised = crystal.raise(b, i).map_err(AxiomViolation::Operator)?;
    require(raised.is_none() == eps.is_zero(), &|| {
        format!("e is null: {}, ε = {eps}", raised.is_none())
    })?;
    if let Some(eb) = &raised {
        let back = crystal.lower(eb, i).map_err(AxiomViolation::Operator)?;
        require(back.as_ref() == Some(b), &|| format!("f(e b) = {back:?}"))?;
        require(crystal.weight(eb) == &wt + &alpha, &|| {
            format!("wt(e b) = {}", crystal.weight(eb))
        })?;
        require(crystal.epsilon(eb, i) == &eps - 1, &|| {
            format!("ε(e b) = {}", crystal.epsilon(eb, i))
        })?;
        require(crystal.phi(eb, i) == &phi + 1, &|| {
            format!("φ(e b) = {}", crystal.phi(eb, i))
        })?;
    }

    if let Some(n) = eps.to_u64().filter(|&n| n <= STRING_CHECK_CAP) {
        let len = string_length(b, n + 1, |x| crystal.raise(x, i))
            .map_err(AxiomViolation::Operator)?;
        require(len == n, &|| format!("e-string has length {len}, ε = {n}"))?;
    }
    if let Some(n) = phi.to_u64().filter(|&n| n <= STRING_CHECK_CAP) {
        let len = string_length(b, n + 1, |x| crystal.lower(x, i))
            .map_err(AxiomViolation::Operator)?;
        require(len == n, &|| format!("f-string has length {len}, φ = {n}"))?;
    }
    Ok(count)
}

fn string_length<E: Clone, Err>(
    start: &E,
    limit: u64,
    mut step: impl FnMut(&E) -> Result<Option<E>, Err>,
) -> Result<u64, Err> {
    let mut current = start.clone();
    let mut len = 0;
    while len < limit {
        match step(&current)? {
            Some(next) => {
                current = next;
                len += 1;
            }
            None => break,
        }
    }
    Ok(len)
}

/// Runs [`check_normal_at`] over every element of `elements` and both
/// indices.
pub fn check_normal_axioms<'a, C: Crystal>(
    crystal: &C,
    elements: impl IntoIterator<Item = &'a C::Element>,
) -> Result<usize, AxiomViolation<C::Element, C::Error>>
where
    C::Element: 'a,
{
    let mut total = 0;
    for b in elements {
        for i in Index::ALL {
            total += check_normal_at(crystal, b, i)?;
        }
    }
    Ok(total)
}
