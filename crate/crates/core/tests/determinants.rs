use easygram::algebra::numbers::int;
use easygram::categories::CategoryId;
use easygram::gram::{
    bn_det, difrancesco_det, gram_det_direct, gram_det_symbolic, lindstrom_det, on_det, Factored,
};
use easygram::partition::ColoredWord;

const NS: [u64; 4] = [2, 3, 5, 7];

fn agree(cat: CategoryId, k: usize, formula: &Factored) {
    for n in NS {
        let direct = gram_det_direct(cat, &ColoredWord::plain(k), n).unwrap();
        assert_eq!(formula.eval(&int(n as i64)), direct, "{cat} k={k} N={n}");
    }
}

#[test]
fn lindstrom() {
    for k in 0..=5 {
        agree(CategoryId::P, k, &lindstrom_det(CategoryId::P, k).unwrap());
    }
    for k in 0..=6 {
        agree(CategoryId::PEven, k, &lindstrom_det(CategoryId::PEven, k).unwrap());
    }
}

#[test]
fn orthogonal_young() {
    for k in (2..=8).step_by(2) {
        agree(CategoryId::P2, k, &on_det(k).unwrap());
    }
}

#[test]
fn bistochastic() {
    for k in 1..=5 {
        agree(CategoryId::P12, k, &bn_det(k).unwrap());
    }
}

#[test]
fn free_pairings() {
    for k in (2..=10).step_by(2) {
        agree(CategoryId::NC2, k, &difrancesco_det(CategoryId::NC2, k).unwrap());
    }
}

#[test]
fn free_symmetric() {
    for k in 1..=6 {
        agree(CategoryId::NC, k, &difrancesco_det(CategoryId::NC, k).unwrap());
    }
}

#[test]
fn free_bistochastic() {
    for k in 1..=6 {
        agree(CategoryId::NC12, k, &difrancesco_det(CategoryId::NC12, k).unwrap());
    }
}

#[test]
fn free_hyperoctahedral() {
    for k in (2..=6).step_by(2) {
        agree(CategoryId::NCEven, k, &difrancesco_det(CategoryId::NCEven, k).unwrap());
    }
}

#[test]
fn symbolic_agrees_with_formulas() {
    let cases = [
        (CategoryId::NC2, 6, difrancesco_det(CategoryId::NC2, 6).unwrap()),
        (CategoryId::NC, 3, difrancesco_det(CategoryId::NC, 3).unwrap()),
        (CategoryId::P2, 4, on_det(4).unwrap()),
        (CategoryId::P, 3, lindstrom_det(CategoryId::P, 3).unwrap()),
        (CategoryId::P12, 3, bn_det(3).unwrap()),
    ];
    for (cat, k, f) in cases {
        assert_eq!(gram_det_symbolic(cat, &ColoredWord::plain(k)).unwrap(), f.expand().unwrap(), "{cat} k={k}");
    }
}
