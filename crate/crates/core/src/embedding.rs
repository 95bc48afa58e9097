//! The map from canonical paths into the polyhedral tensor crystal, and a
//! harness that checks it is a crystal morphism.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::{Index, ShapeWeight};
use crate::lspath::{LsCrystal, LsPath};
use crate::polyhedral::{HalfSeqMinus, HalfSeqPlus, PolyhedralCrystal, TensorElement};

/// One named check and its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A list of checks about one subject.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn compare<T: PartialEq + fmt::Debug>(&mut self, name: &str, left: &T, right: &T) {
        let passed = left == right;
        let detail = if passed {
            String::new()
        } else {
            format!("{left:?} != {right:?}")
        };
        self.record(name, passed, detail);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Both models for one shape, and the map between them.
#[derive(Clone, Debug)]
pub struct Embedding {
    paths: LsCrystal,
    tensor: PolyhedralCrystal,
}

impl Embedding {
    pub fn new(shape: ShapeWeight) -> Self {
        let tensor = PolyhedralCrystal::new(shape.cartan().clone());
        Embedding {
            paths: LsCrystal::new(shape),
            tensor,
        }
    }

    pub fn paths(&self) -> &LsCrystal {
        &self.paths
    }

    pub fn tensor(&self) -> &PolyhedralCrystal {
        &self.tensor
    }

    pub fn shape(&self) -> &ShapeWeight {
        self.paths.shape()
    }

    /// `z_k = q_k` or `p_k` on the plus side, `q_k − p_k` or `−p_k` on the
    /// minus side, tensored with `t_λ`.
    pub fn theta(&self, path: &LsPath) -> TensorElement {
        let shape = self.shape();
        let (m, n) = (path.m(), path.n());
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for k in n + 1..=m {
            let q = path.q(k).expect("index inside numerator range").clone();
            if k >= 1 {
                plus.push((k, q));
            } else {
                minus.push((k, q - shape.p(k)));
            }
        }
        for k in 1..=n {
            plus.push((k, shape.p(k)));
        }
        for k in m + 1..=0 {
            minus.push((k, -shape.p(k)));
        }
        TensorElement {
            plus: HalfSeqPlus::from_entries(plus).expect("plus entries are positive"),
            t: shape.lambda(),
            minus: HalfSeqMinus::from_entries(minus).expect("minus entries are negative"),
        }
    }

    /// Checks weight, `ε_i`, `φ_i` and commutation with `e_i`, `f_i` at
    /// `path`.
    pub fn verify_morphism(&self, path: &LsPath, i: Index) -> Report {
        self.verify_morphism_with(path, i, &|p| self.theta(p))
    }

    /// As [`Embedding::verify_morphism`], with the map supplied by the
    /// caller.
    pub fn verify_morphism_with(
        &self,
        path: &LsPath,
        i: Index,
        theta: &dyn Fn(&LsPath) -> TensorElement,
    ) -> Report {
        let mut report = Report::new(format!("{path} i={i}"));
        let image = theta(path);
        report.compare(
            "weight",
            &self.paths.weight(path),
            &self.tensor.weight(&image),
        );
        let (eps, phi) = self.paths.eps_phi(path, i);
        report.compare("epsilon", &eps, &self.tensor.epsilon(&image, i));
        report.compare("phi", &phi, &self.tensor.phi(&image, i));
        let raised = self.paths.raising(path, i).map(|p| theta(&p));
        match self.tensor.raising(&image, i) {
            Ok(r) => report.compare("raise commutes", &raised, &r),
            Err(e) => report.record("raise commutes", false, e.to_string()),
        }
        let lowered = self.paths.lowering(path, i).map(|p| theta(&p));
        match self.tensor.lowering(&image, i) {
            Ok(l) => report.compare("lower commutes", &lowered, &l),
            Err(e) => report.record("lower commutes", false, e.to_string()),
        }
        report
    }

    /// Checks `−σ_k(Θπ) = H_{i_k}(t_k)` with `t_k = 0` for `k > m`,
    /// `q_k/p_k` for `n < k ≤ m` and `1` for `k ≤ n`, over a window two
    /// past the support on each side.
    pub fn sigma_cross_check(&self, path: &LsPath) -> Report {
        let mut report = Report::new(path.to_string());
        let image = self.theta(path);
        let lo = path.n().min(0) - 2;
        let hi = path.m().max(1) + 2;
        for k in lo..=hi {
            let t = self.paths.time_of(path, k);
            let h = self.paths.h_at(path, Index::at(k), &t);
            let sigma = BigRational::from_integer(-self.tensor.sigma_k(&image, k));
            report.compare(&format!("sigma_{k}"), &sigma, &h);
        }
        report
    }

    /// Checks that `Θπ` satisfies the image inequalities and lies in the
    /// crystal basis up to the given Weyl-word depth.
    pub fn image_check(&self, path: &LsPath, depth: usize) -> Report {
        let mut report = Report::new(path.to_string());
        let image = self.theta(path);
        report.record(
            "plus inequalities",
            self.tensor.membership_plus(&image.plus),
            image.plus.to_string(),
        );
        report.record(
            "minus inequalities",
            self.tensor.membership_minus(&image.minus),
            image.minus.to_string(),
        );
        match self.tensor.is_in_crystal_basis(&image, depth) {
            Ok(ok) => report.record("crystal basis", ok, format!("depth {depth}")),
            Err(e) => report.record("crystal basis", false, e.to_string()),
        }
        report
    }

    /// `−σ_k(Θπ)` as an integer, for display.
    pub fn sigma_of_image(&self, path: &LsPath, k: i64) -> BigInt {
        self.tensor.sigma_k(&self.theta(path), k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CartanData;
    use crate::polyhedral::PolyhedralError;

    fn a3() -> Embedding {
        let c = CartanData::symmetric(3).unwrap();
        Embedding::new(ShapeWeight::new(&c, 1, 1).unwrap())
    }

    fn plus(e: &[(i64, i64)]) -> HalfSeqPlus {
        HalfSeqPlus::from_entries(e.iter().copied()).unwrap()
    }

    fn minus(e: &[(i64, i64)]) -> HalfSeqMinus {
        HalfSeqMinus::from_entries(e.iter().copied()).unwrap()
    }

    #[test]
    fn theta_examples() {
        let emb = a3();
        let lambda = emb.shape().lambda();
        assert_eq!(
            emb.theta(&emb.paths().straight_line()),
            TensorElement::vacuum(lambda.clone())
        );
        let t1 = emb.theta(&LsPath::straight(1));
        assert_eq!(t1.plus, plus(&[(1, 1)]));
        assert!(t1.minus.is_zero());
        let tm1 = emb.theta(&LsPath::straight(-1));
        assert!(tm1.plus.is_zero());
        assert_eq!(tm1.minus, minus(&[(0, -1)]));
        let p = emb.paths().parse("2:1:[1]").unwrap();
        assert_eq!(emb.theta(&p).plus, plus(&[(2, 1), (1, 1)]));
    }

    /// The case list for the image of a path, one shape with `k₁, k₂ > 1`
    /// so every case is populated.
    #[test]
    fn theta_case_table() {
        let c = CartanData::symmetric(4).unwrap();
        let emb = Embedding::new(ShapeWeight::new(&c, 2, 3).unwrap());
        let shape = emb.shape().clone();
        let p = |k: i64| i64::try_from(shape.p(k)).unwrap();
        let z = |s: &str| emb.theta(&emb.paths().parse(s).unwrap());
        // n = m = 0
        assert_eq!(z("0:0:[]"), TensorElement::vacuum(shape.lambda()));
        // 0 < n = m
        assert_eq!(z("2:2:[]").plus, plus(&[(2, p(2)), (1, p(1))]));
        // n = m < 0
        assert_eq!(z("-2:-2:[]").minus, minus(&[(0, -p(0)), (-1, -p(-1))]));
        // 0 ≤ n < m
        let y = z("2:0:[1,1]");
        assert_eq!(y.plus, plus(&[(2, 1), (1, 1)]));
        assert!(y.minus.is_zero());
        // n < m ≤ 0
        let y = z("0:-1:[1]");
        assert!(y.plus.is_zero());
        assert_eq!(y.minus, minus(&[(0, 1 - p(0))]));
        // n < 0 < m
        let y = z("1:-1:[1,2]");
        assert_eq!(y.plus, plus(&[(1, 1)]));
        assert_eq!(y.minus, minus(&[(0, 2 - p(0))]));
        // 0 < n < m
        let y = z("2:1:[1]");
        assert_eq!(y.plus, plus(&[(2, 1), (1, p(1))]));
        // n < m < 0
        let y = z("-1:-2:[1]");
        assert_eq!(y.minus, minus(&[(0, -p(0)), (-1, 1 - p(-1))]));
    }

    #[test]
    fn morphism_examples() {
        let emb = a3();
        let straight = emb.paths().straight_line();
        for i in Index::ALL {
            let r = emb.verify_morphism(&straight, i);
            assert!(r.passed(), "{r:?}");
        }
        let f1 = emb
            .tensor()
            .lowering(&emb.theta(&straight), Index::One)
            .unwrap()
            .unwrap();
        assert_eq!(f1.plus, plus(&[(1, 1)]));
        assert_eq!(
            emb.tensor().lowering(&emb.theta(&straight), Index::Two),
            Ok::<_, PolyhedralError>(None)
        );
    }

    #[test]
    fn corrupted_map_is_detected() {
        let emb = a3();
        let straight = emb.paths().straight_line();
        let bad = |p: &LsPath| {
            let mut y = emb.theta(p);
            y.plus = plus(&[(3, 1)]);
            y
        };
        let r = emb.verify_morphism_with(&straight, Index::One, &bad);
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().name, "weight");
    }

    #[test]
    fn sigma_examples() {
        let emb = a3();
        assert!(emb.sigma_cross_check(&emb.paths().straight_line()).passed());
        let p = emb.paths().parse("2:1:[1]").unwrap();
        let r = emb.sigma_cross_check(&p);
        assert!(r.passed(), "{r:?}");
        assert_eq!(emb.sigma_of_image(&p, 2), BigInt::from(1));
        assert_eq!(emb.sigma_of_image(&p, 1), BigInt::from(-2));
    }

    #[test]
    fn image_examples() {
        let emb = a3();
        for s in ["0:0:[]", "1:1:[]", "-1:-1:[]", "2:1:[1]"] {
            let p = emb.paths().parse(s).unwrap();
            let r = emb.image_check(&p, 6);
            assert!(r.passed(), "{r:?}");
        }
    }
}
