use easygram::algebra::numbers::{binomial, rat};
use easygram::algebra::Rational;
use easygram::cumulants::{
    bp_inverse, bp_map, cumulants_to_moments_classical, cumulants_to_moments_free, extend_to_partition,
    moments_to_cumulants_classical, moments_to_cumulants_free,
};
use easygram::partition::{enumerate, ClassFilter, ColoredWord};
use easygram::prob_laws::{moments, LawSpec};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rationals(max_len: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((-20i64..=20, 1i64..=6).prop_map(|(p, q)| rat(p, q)), 1..=max_len)
}

fn scale(m: &[Rational], c: &Rational) -> Vec<Rational> {
    let mut power = Rational::one();
    m.iter()
        .map(|x| {
            power *= c;
            x * &power
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cumulant_roundtrips(m in rationals(8)) {
        let n = m.len();
        prop_assert_eq!(&cumulants_to_moments_classical(&moments_to_cumulants_classical(&m, n).unwrap(), n).unwrap(), &m);
        prop_assert_eq!(&cumulants_to_moments_free(&moments_to_cumulants_free(&m, n).unwrap(), n).unwrap(), &m);
        prop_assert_eq!(&bp_inverse(&bp_map(&m, n).unwrap(), n).unwrap(), &m);
    }

    #[test]
    fn cumulants_scale_homogeneously(m in rationals(8), p in -5i64..=5, q in 1i64..=4) {
        let n = m.len();
        let c = rat(p, q);
        let scaled = scale(&m, &c);
        prop_assert_eq!(
            moments_to_cumulants_classical(&scaled, n).unwrap(),
            scale(&moments_to_cumulants_classical(&m, n).unwrap(), &c)
        );
        prop_assert_eq!(
            moments_to_cumulants_free(&scaled, n).unwrap(),
            scale(&moments_to_cumulants_free(&m, n).unwrap(), &c)
        );
    }

    #[test]
    fn shifts_move_only_the_mean(m in rationals(8), p in -5i64..=5, q in 1i64..=4) {
        let n = m.len();
        let d = rat(p, q);
        // moments of f + d: Σ_j C(n, j) d^{n−j} M_j with M_0 = 1
        let shifted: Vec<Rational> = (1..=n)
            .map(|r| {
                (0..=r).fold(Rational::zero(), |acc, j| {
                    let mj = if j == 0 { Rational::one() } else { m[j - 1].clone() };
                    let c = Rational::from_integer(binomial(r as i64, j as i64));
                    acc + c * num_traits::pow(d.clone(), r - j) * mj
                })
            })
            .collect();
        let before = moments_to_cumulants_classical(&m, n).unwrap();
        let after = moments_to_cumulants_classical(&shifted, n).unwrap();
        prop_assert_eq!(&after[0], &(&before[0] + &d));
        prop_assert_eq!(&after[1..], &before[1..]);
    }

    #[test]
    fn partition_moments_sum_cumulants(m in proptest::collection::vec((-9i64..=9).prop_map(|v| rat(v, 1)), 4)) {
        let k = moments_to_cumulants_classical(&m, 4).unwrap();
        let ps = enumerate(&ColoredWord::plain(4), ClassFilter::All).unwrap();
        for pi in &ps {
            let total = ps
                .iter()
                .filter(|nu| nu.leq(pi).unwrap())
                .fold(Rational::zero(), |acc, nu| acc + extend_to_partition(&k, nu));
            prop_assert_eq!(extend_to_partition(&m, pi), total);
        }
    }
}

#[test]
fn catalan_and_bell_under_the_bijection() {
    let bell: Vec<Rational> = [1, 2, 5, 15, 52, 203, 877, 4140].iter().map(|&v| rat(v, 1)).collect();
    let catalan: Vec<Rational> = [1, 2, 5, 14, 42, 132, 429, 1430].iter().map(|&v| rat(v, 1)).collect();
    assert_eq!(bp_map(&bell, 8).unwrap(), catalan);
    assert_eq!(bp_inverse(&catalan, 8).unwrap(), bell);
    let free = moments(&LawSpec::MarchenkoPastur(rat(1, 1)), 8).unwrap();
    assert_eq!(free, catalan);
    assert_eq!(moments(&LawSpec::Poisson(rat(1, 1)), 8).unwrap(), bell);
}
