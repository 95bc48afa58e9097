use rank2_crystal::crystal::{ball, Moves};
use rank2_crystal::embedding::Embedding;
use rank2_crystal::lspath::{ParseOrPathError, PathError};
use rank2_crystal::{CartanData, Index, ShapeCase, ShapeWeight};

fn embedding(a1: i64, a2: i64, k1: i64, k2: i64) -> Embedding {
    let cartan = CartanData::new(a1, a2).unwrap();
    Embedding::new(ShapeWeight::new(&cartan, k1, k2).unwrap())
}

fn assert_all_checks(emb: &Embedding, radius: usize) -> usize {
    let b = ball(emb.paths(), emb.paths().straight_line(), radius, Moves::All).unwrap();
    for p in &b.vertices {
        for i in Index::ALL {
            let r = emb.verify_morphism(p, i);
            assert!(r.passed(), "{:?}", r.first_failure());
        }
        let r = emb.sigma_cross_check(p);
        assert!(r.passed(), "{:?}", r.first_failure());
        let r = emb.image_check(p, 6);
        assert!(r.passed(), "{:?}", r.first_failure());
    }
    b.len()
}

#[test]
fn non_coprime_shape_component() {
    let emb = embedding(3, 3, 2, 2);
    assert!(!emb.shape().is_coprime());
    assert!(assert_all_checks(&emb, 6) > 1);
}

#[test]
fn case_two_shapes() {
    for (a1, a2, k1, k2) in [(3, 4, 1, 2), (3, 5, 2, 3), (4, 6, 3, 4), (4, 4, 2, 3)] {
        let emb = embedding(a1, a2, k1, k2);
        assert_eq!(emb.shape().case(), ShapeCase::CaseII);
        assert_all_checks(&emb, 6);
    }
}

#[test]
fn case_one_shapes() {
    for (a1, a2, k1, k2) in [(4, 4, 3, 2), (6, 5, 7, 2), (5, 3, 3, 2)] {
        let emb = embedding(a1, a2, k1, k2);
        assert_eq!(emb.shape().case(), ShapeCase::CaseI);
        assert_all_checks(&emb, 6);
    }
}

#[test]
fn parse_rejects_non_canonical_data() {
    let emb = embedding(3, 3, 1, 1);
    let paths = emb.paths();
    assert!(matches!(
        paths.parse("1:2:[]"),
        Err(ParseOrPathError::Invalid(PathError::Reversed { .. }))
    ));
    assert!(matches!(
        paths.parse("2:1:[]"),
        Err(ParseOrPathError::Invalid(PathError::WrongLength { .. }))
    ));
    // p_1 = 1 leaves no room for a numerator at index 1.
    assert!(matches!(
        paths.parse("1:0:[1]"),
        Err(ParseOrPathError::Invalid(PathError::NumeratorOutOfRange { .. }))
    ));
    assert!(matches!(paths.parse("x"), Err(ParseOrPathError::Parse(_))));
}
