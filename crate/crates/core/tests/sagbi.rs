use doset_hibi::determinantal::{all_gammas, GammaTuple, Group};
use doset_hibi::sagbi::{
    distinct_lm_of_standard_monomials, initial_algebra_hilbert_match, verify_lm_lemmas, PolyMatrix,
    Polynomial, SagbiSetup,
};

fn g(s: &str) -> GammaTuple {
    s.parse().unwrap()
}

/// Determinant by cofactor expansion along the first row.
fn laplace(m: &PolyMatrix, vars: usize, rows: &[usize], cols: &[usize]) -> Polynomial {
    if rows.is_empty() {
        return Polynomial::constant(vars, 1.into());
    }
    let mut total = Polynomial::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = m.get(rows[0] - 1, c - 1);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.mul(&laplace(m, vars, &rows[1..], &rest));
        total = if k % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    total
}

#[test]
fn leibniz_minors_match_cofactor_expansion() {
    for (m, n, gamma) in [(2, 3, "1,2"), (3, 4, "1,2,4"), (3, 5, "2,3,5")] {
        let setup = SagbiSetup::new(m, n, &g(gamma)).unwrap();
        let vars = setup.order.vars().len();
        for size in 1..=m {
            for rows in doset_hibi::sagbi::subsets(m, size) {
                for cols in doset_hibi::sagbi::subsets(n, size) {
                    assert_eq!(setup.z.minor(&rows, &cols).unwrap(), laplace(&setup.z, vars, &rows, &cols));
                }
                for cols in doset_hibi::sagbi::subsets(m, size) {
                    assert_eq!(setup.w.minor(&rows, &cols).unwrap(), laplace(&setup.w, vars, &rows, &cols));
                }
            }
        }
    }
}

#[test]
fn closed_form_on_a_small_minor() {
    let setup = SagbiSetup::new(2, 3, &g("1,3")).unwrap();
    let minor = setup.z.minor(&[1, 2], &[1, 3]).unwrap();
    let lm = minor.leading_monomial().unwrap();
    assert_eq!(lm, &setup.lm_wu(&[1, 2], &[1, 3]));
    assert_eq!(setup.order.format(lm), "W1_1*W2_2*U1_1*U2_3");
}

#[test]
fn lemmas_at_desk_scale() {
    for m in 1..=2 {
        for n in m..=4 {
            for gamma in all_gammas(m, n) {
                let report = verify_lm_lemmas(m, n, &gamma).unwrap();
                assert!(report.passed(), "({m},{n},{gamma}): {report:?}");
                assert!(report.cauchy_binet_checked > 0);
            }
        }
    }
}

#[test]
fn standard_monomials_have_distinct_leading_monomials() {
    for (m, n, gamma) in [(1, 3, "2"), (2, 3, "1,3"), (2, 4, "1,3")] {
        assert!(distinct_lm_of_standard_monomials(m, n, &g(gamma), 2).unwrap());
    }
}

#[test]
fn hilbert_match_examples() {
    let one = initial_algebra_hilbert_match(1, 2, &g("1"), Group::O, 4).unwrap();
    assert!(one.matches(), "{one:?}");
    for group in [Group::O, Group::SO] {
        let hm = initial_algebra_hilbert_match(2, 3, &g("1,2"), group, 2).unwrap();
        assert!(hm.matches(), "{hm:?}");
        assert_eq!(hm.lm_counts[0], 1);
    }
}

#[test]
fn degree_zero_and_one_counts() {
    // O: only weight-2 generators, so nothing in odd weight
    let hm = initial_algebra_hilbert_match(2, 4, &g("1,3"), Group::O, 3).unwrap();
    assert_eq!(hm.lm_counts[1], 0);
    assert_eq!(hm.lm_counts[3], 0);
    assert!(hm.matches());
}
