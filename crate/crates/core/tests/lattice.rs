use easygram::algebra::numbers::{binomial, int};
use easygram::algebra::Matrix;
use easygram::categories::{horizontal_concat, involute, verify_axioms, vertical_concat, CategoryId, SParam};
use easygram::diagram_maps::{check_functoriality, is_fixed_vector_float, random_unitary, xi};
use easygram::partition::{
    enumerate, enumerate_two_row, fatten, kernel, mobius, shrink, ClassFilter, Color, ColoredWord, Partition,
};
use easygram::verify::colored_words;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn all(k: usize) -> Vec<Partition> {
    enumerate(&ColoredWord::plain(k), ClassFilter::All).unwrap()
}

#[test]
fn refinement_is_a_lattice() {
    for k in 1..=6 {
        let ps = all(k);
        for a in &ps {
            assert!(a.leq(a).unwrap());
            for b in &ps {
                if a.leq(b).unwrap() && b.leq(a).unwrap() {
                    assert_eq!(a, b);
                }
                let j = a.join(b).unwrap();
                assert!(a.leq(&j).unwrap() && b.leq(&j).unwrap());
                if k <= 5 {
                    for c in &ps {
                        if a.leq(c).unwrap() && b.leq(c).unwrap() {
                            assert!(j.leq(c).unwrap(), "{a} v {b} = {j} is not below {c}");
                        }
                        if a.leq(b).unwrap() && b.leq(c).unwrap() {
                            assert!(a.leq(c).unwrap());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn mobius_inverts_adjacency() {
    for k in 1..=5 {
        let ps = all(k);
        let n = ps.len();
        let a = Matrix::from_fn(n, n, |i, j| BigInt::from(ps[i].leq(&ps[j]).unwrap() as i64));
        let m = Matrix::from_fn(n, n, |i, j| {
            if ps[i].leq(&ps[j]).unwrap() {
                BigInt::from(mobius(&ps[i], &ps[j]).unwrap())
            } else {
                BigInt::from(0)
            }
        });
        assert_eq!(a.mul(&m).unwrap(), Matrix::identity(n), "k={k}");
    }
}

#[test]
fn bell_recurrence() {
    let mut bell = vec![int(1)];
    for k in 0..10 {
        let next: BigInt = (0..=k).map(|s| binomial(k as i64, s as i64) * &bell[k - s]).sum();
        bell.push(next);
    }
    for (k, b) in bell.iter().enumerate().skip(1) {
        let counted: u64 = CategoryId::P.block_counts(&ColoredWord::plain(k)).unwrap().iter().sum();
        assert_eq!(BigInt::from(counted), *b, "k={k}");
    }
}

#[test]
fn fattening_is_a_bijection() {
    for k in 1..=7 {
        let nc = enumerate(&ColoredWord::plain(k), ClassFilter::Noncrossing).unwrap();
        let pairings = enumerate(&ColoredWord::plain(2 * k), ClassFilter::NoncrossingPairings).unwrap();
        assert_eq!(nc.len(), pairings.len());
        let mut images: Vec<Partition> = nc.iter().map(|p| fatten(p).unwrap()).collect();
        for (p, f) in nc.iter().zip(&images) {
            assert!(f.is_pairing() && f.is_noncrossing());
            assert_eq!(&shrink(f).unwrap(), p);
        }
        images.sort();
        images.dedup();
        assert_eq!(images.len(), nc.len());
    }
}

#[test]
fn kernel_dominates_exactly_when_constant_on_blocks() {
    let ps = all(4);
    let mut tuples = vec![vec![]];
    for _ in 0..4 {
        tuples = tuples.into_iter().flat_map(|t: Vec<usize>| (1..=3).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    for i in &tuples {
        let ker = kernel(i).unwrap();
        for p in &ps {
            let constant = p.block_indices().iter().all(|b| b.iter().all(|&x| i[x] == i[b[0]]));
            assert_eq!(p.leq(&ker).unwrap(), constant, "{p} against {i:?}");
        }
    }
}

const CATEGORIES: [CategoryId; 15] = [
    CategoryId::P,
    CategoryId::PEven,
    CategoryId::CPEven,
    CategoryId::Ps(SParam::Finite(3)),
    CategoryId::P2,
    CategoryId::CP2,
    CategoryId::P12,
    CategoryId::CP12,
    CategoryId::NC,
    CategoryId::NCEven,
    CategoryId::CNCEven,
    CategoryId::NCs(SParam::Finite(4)),
    CategoryId::NC2,
    CategoryId::CNC2,
    CategoryId::NC12,
];

#[test]
fn category_axioms() {
    for cat in CATEGORIES {
        let r = verify_axioms(&cat, 6).unwrap();
        assert!(r.passed, "{cat}: {:?}", r.failure);
    }
}

fn two_row_words(total: usize) -> Vec<(ColoredWord, ColoredWord)> {
    let mut out = Vec::new();
    for k in 0..=total {
        for up in colored_words(k) {
            for low in colored_words(total - k) {
                out.push((up.clone(), low));
            }
        }
    }
    out
}

#[test]
fn parameter_families_specialize() {
    let s = |v| SParam::Finite(v);
    for total in 0..=6 {
        for (up, low) in two_row_words(total) {
            for p in enumerate_two_row(&up, &low, ClassFilter::All).unwrap() {
                assert_eq!(CategoryId::Ps(s(1)).contains(&p), CategoryId::P.contains(&p), "{p}");
                assert_eq!(CategoryId::Ps(s(2)).contains(&p), CategoryId::PEven.contains(&p), "{p}");
                for v in 1..=4 {
                    assert_eq!(
                        CategoryId::NCs(s(v)).contains(&p),
                        CategoryId::Ps(s(v)).contains(&p) && p.is_noncrossing(),
                        "{p} at s={v}"
                    );
                }
            }
        }
    }
}

#[test]
fn inclusion_cube() {
    use CategoryId::*;
    let edges = [
        (NC2, NCEven),
        (NC2, NC12),
        (NC2, P2),
        (NCEven, NC),
        (NCEven, PEven),
        (NC12, NC),
        (NC12, P12),
        (NC, P),
        (P2, PEven),
        (P2, P12),
        (PEven, P),
        (P12, P),
        (CNC2, CP2),
        (CNC2, NC2),
        (CP2, P2),
        (CP2, CPEven),
        (CPEven, PEven),
        (CNCEven, CPEven),
    ];
    for total in 0..=6 {
        for (up, low) in two_row_words(total) {
            for p in enumerate_two_row(&up, &low, ClassFilter::All).unwrap() {
                for (small, big) in edges {
                    assert!(!small.contains(&p) || big.contains(&p), "{p} in {small} but not in {big}");
                }
            }
        }
    }
}

#[test]
fn functoriality_on_small_rows() {
    let mut shapes = Vec::new();
    for k in 0..=2 {
        for l in 0..=2 {
            shapes.push(enumerate_two_row(&ColoredWord::plain(k), &ColoredWord::plain(l), ClassFilter::All).unwrap());
        }
    }
    let three = enumerate_two_row(&ColoredWord::plain(3), &ColoredWord::plain(3), ClassFilter::Noncrossing).unwrap();
    shapes.push(three);
    let everything: Vec<&Partition> = shapes.iter().flatten().collect();
    for n in [2, 3] {
        for a in &everything {
            for b in &everything {
                if a.num_legs() + b.num_legs() > 8 {
                    continue;
                }
                let r = check_functoriality(a, b, n).unwrap();
                assert!(r.passed(), "{a} and {b} at N={n}: {r:?}");
            }
        }
    }
}

#[test]
fn partition_vectors_give_the_gram_form() {
    let ps = all(4);
    for n in [2, 3, 5] {
        let vs: Vec<Vec<i64>> = ps.iter().map(|p| xi(p, n).unwrap()).collect();
        for (a, va) in ps.iter().zip(&vs) {
            for (b, vb) in ps.iter().zip(&vs) {
                let dot: i64 = va.iter().zip(vb).map(|(x, y)| x * y).sum();
                assert_eq!(dot, (n as i64).pow(a.join(b).unwrap().num_blocks() as u32));
            }
        }
    }
}

#[test]
fn color_convention() {
    let word = |c: [Color; 2]| ColoredWord(c.to_vec());
    let pair = |w: ColoredWord| Partition::one_row(w, &[0, 0]).unwrap();
    let mixed = pair(word([Color::White, Color::Black]));
    let same = pair(word([Color::White, Color::White]));
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut same_fails = false;
    for _ in 0..200 {
        let g = random_unitary(3, &mut rng);
        assert!(is_fixed_vector_float(&mixed, &g, 1e-9).unwrap());
        same_fails |= !is_fixed_vector_float(&same, &g, 1e-9).unwrap();
    }
    assert!(same_fails);
}

fn partition_strategy(max: usize) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|k| proptest::collection::vec(1..=k, k)).prop_map(|v| kernel(&v).unwrap())
}

fn pair_strategy(max: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max).prop_flat_map(|k| {
        (proptest::collection::vec(1..=k, k), proptest::collection::vec(1..=k, k))
            .prop_map(|(a, b)| (kernel(&a).unwrap(), kernel(&b).unwrap()))
    })
}

proptest! {
    #[test]
    fn join_is_commutative_and_idempotent((a, b) in pair_strategy(9)) {
        let j = a.join(&b).unwrap();
        prop_assert_eq!(&j, &b.join(&a).unwrap());
        prop_assert_eq!(&a.join(&a).unwrap(), &a);
        prop_assert_eq!(j.num_blocks(), a.join_blocks(&b));
        prop_assert_eq!(a.leq(&b).unwrap(), j == b);
    }

    #[test]
    fn involution_is_an_involution(p in partition_strategy(8)) {
        prop_assert_eq!(&involute(&involute(&p)), &p);
        let h = horizontal_concat(&p, &p);
        prop_assert_eq!(h.num_blocks(), 2 * p.num_blocks());
    }

    #[test]
    fn closing_two_partitions_counts_their_join((a, b) in pair_strategy(7)) {
        let c = vertical_concat(&involute(&b).uncolored(), &a).unwrap();
        prop_assert_eq!(c.loops, a.join_blocks(&b));
        prop_assert_eq!(c.result.num_legs(), 0);
    }
}
