use easygram::algebra::linalg;
use easygram::algebra::numbers::int;
use easygram::categories::{CategoryId, SParam};
use easygram::gram::{adjacency, gram_matrix, gram_rank, integrate_monomial, lower_factor, members};
use easygram::group_oracle::{character_law, fix_dim, integrate_exact, symmetric_character_closed, GroupSpec};
use easygram::partition::{shrink, ColoredWord};
use easygram::verify::{colored_words, convergence_gaps, monomial_agreement, pinv_identities};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn gram_factors_into_triangular_parts() {
    for k in 1..=4 {
        let ms = members(CategoryId::P, &ColoredWord::plain(k)).unwrap();
        let a = adjacency(&ms).unwrap();
        for n in [2u64, 3, 5] {
            let l = lower_factor(&ms, &BigInt::from(n)).unwrap();
            let g = gram_matrix(CategoryId::P, &ColoredWord::plain(k), n).unwrap();
            assert_eq!(a.mul(&l).unwrap(), g.matrix, "k={k} N={n}");
        }
    }
}

#[test]
fn pseudo_inverse_identities_with_colors() {
    for cat in [CategoryId::CP2, CategoryId::CNC2, CategoryId::Ps(SParam::Finite(3)), CategoryId::CPEven] {
        for len in 1..=4 {
            for w in colored_words(len) {
                for n in 1..=3 {
                    pinv_identities(cat, &w, n).unwrap();
                }
            }
        }
    }
}

#[test]
fn weingarten_matches_group_averages() {
    for n in [3, 4, 5] {
        for k in 1..=4 {
            monomial_agreement(GroupSpec::Symmetric(n), CategoryId::P, k).unwrap();
        }
    }
    for n in [2, 3] {
        for k in 1..=4 {
            monomial_agreement(GroupSpec::Hyperoctahedral(n), CategoryId::PEven, k).unwrap();
        }
    }
}

#[test]
fn exact_integrals_agree_with_the_formula() {
    let cases = [(GroupSpec::Symmetric(3), CategoryId::P), (GroupSpec::Hyperoctahedral(2), CategoryId::PEven)];
    for (g, cat) in cases {
        let n = g.dim();
        for k in 1..=3 {
            let w = ColoredWord::plain(k);
            let total = n.pow(k as u32);
            let tuple = |mut x: usize| -> Vec<usize> {
                (0..k).map(|_| {
                    let d = x % n + 1;
                    x /= n;
                    d
                }).collect()
            };
            for a in 0..total {
                for b in 0..total {
                    let (i, j) = (tuple(a), tuple(b));
                    let exact = integrate_exact(g, &w, &i, &j).unwrap().as_scalar().unwrap();
                    assert_eq!(exact, integrate_monomial(cat, n as u64, &w, &i, &j).unwrap(), "{g} {i:?} {j:?}");
                }
            }
        }
    }
}

#[test]
fn moments_approach_the_limit() {
    let gaps = convergence_gaps(&[8, 16, 32]).unwrap();
    assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2], "{gaps:?}");
}

#[test]
fn fattened_gram_matrices() {
    for k in 1..=4 {
        let nc2 = members(CategoryId::NC2, &ColoredWord::plain(2 * k)).unwrap();
        for n in [2u64, 3] {
            let big = gram_matrix(CategoryId::NC2, &ColoredWord::plain(2 * k), n).unwrap();
            let small = gram_matrix(CategoryId::NC, &ColoredWord::plain(k), n * n).unwrap();
            let n = int(n as i64);
            for (a, pa) in nc2.iter().enumerate() {
                for (b, pb) in nc2.iter().enumerate() {
                    let (sa, sb) = (shrink(pa).unwrap(), shrink(pb).unwrap());
                    let entry = small.entry(&sa, &sb).unwrap();
                    // G_2k(π, σ) Δ(π') Δ(σ') = n^k G_k(π', σ') with Δ = n^{|·|}
                    let lhs = big.matrix.get(a, b) * num_traits::pow(n.clone(), sa.num_blocks() + sb.num_blocks());
                    let rhs = num_traits::pow(n.clone(), k) * entry;
                    assert_eq!(lhs, rhs, "k={k} {pa} {pb}");
                }
            }
        }
    }
}

#[test]
fn fixed_points_match_gram_ranks() {
    for n in 1..=4 {
        for k in 1..=4 {
            let w = ColoredWord::plain(k);
            assert_eq!(
                fix_dim(GroupSpec::Symmetric(n), &w).unwrap() as usize,
                gram_rank(CategoryId::P, &w, n as u64).unwrap()
            );
            assert_eq!(
                fix_dim(GroupSpec::Hyperoctahedral(n), &w).unwrap() as usize,
                gram_rank(CategoryId::PEven, &w, n as u64).unwrap()
            );
        }
        for s in 1..=4u32 {
            for len in 1..=4 {
                for w in colored_words(len) {
                    let g = GroupSpec::ComplexReflection(n, s);
                    assert_eq!(
                        fix_dim(g, &w).unwrap() as usize,
                        gram_rank(CategoryId::Ps(SParam::Finite(s)), &w, n as u64).unwrap(),
                        "{g} on {w}"
                    );
                }
            }
        }
    }
}

#[test]
fn fixed_points_stabilize() {
    for k in 1..=5 {
        let w = ColoredWord::plain(k);
        let stable = fix_dim(GroupSpec::Symmetric(k), &w).unwrap();
        for n in k + 1..=7 {
            assert_eq!(fix_dim(GroupSpec::Symmetric(n), &w).unwrap(), stable);
        }
    }
}

#[test]
fn symmetric_character_laws() {
    for n in 1..=7 {
        assert_eq!(character_law(GroupSpec::Symmetric(n)).unwrap(), symmetric_character_closed(n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weingarten_rows_integrate_to_orthogonality(n in 2u64..=4, i in 1usize..=4, j in 1usize..=4) {
        // ∫ u_ij u_ij over O_N is 1/N
        prop_assume!(i as u64 <= n && j as u64 <= n);
        let w = ColoredWord::plain(2);
        let v = integrate_monomial(CategoryId::P2, n, &w, &[i, i], &[j, j]).unwrap();
        prop_assert_eq!(v, easygram::algebra::numbers::rat(1, n as i64));
    }

    #[test]
    fn gram_is_symmetric_with_rank_bound(k in 1usize..=5, n in 1u64..=5) {
        let g = gram_matrix(CategoryId::P, &ColoredWord::plain(k), n).unwrap();
        prop_assert_eq!(&g.matrix.transpose(), &g.matrix);
        let r = linalg::rank(&linalg::to_rational(&g.matrix));
        prop_assert!(r <= g.size());
        prop_assert_eq!(r == g.size(), n as usize >= k);
    }
}
