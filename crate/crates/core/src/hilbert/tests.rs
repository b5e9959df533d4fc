use super::*;
use crate::polyring::{parse_polynomial, Polynomial, VarSet};

fn ideal(gens: &[&str]) -> Ideal {
    Ideal::parse(&VarSet::xyz(), gens).unwrap()
}

/// Brute-force `HF(S/I, d)`: monomials of degree d minus the rank of
/// `{m·g}` in degree d.
fn brute_hf(i: &Ideal, d: u32) -> u64 {
    let monos = Monomial::all_of_degree(3, d);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in i.generators() {
        let dg = g.total_degree().unwrap();
        if dg > d {
            continue;
        }
        for m in Monomial::all_of_degree(3, d - dg) {
            let p = g.mul_monomial(&m);
            rows.push(monos.iter().map(|mm| p.coefficient(mm)).collect());
        }
    }
    let rank = crate::linalg::rank_rational(&rows);
    monos.len() as u64 - rank as u64
}

#[test]
fn binomials() {
    assert_eq!(binomial_truncated(5, 2), 10);
    assert_eq!(binomial_truncated(1, 2), 0);
    assert_eq!(binomial_truncated(-3, 2), 0);
    let p = QPoly::binomial(2, 2);
    for d in 0..10 {
        assert_eq!(p.eval(d), Rational::from_integer(binomial_truncated(d + 2, 2).into()));
    }
    // polynomial convention: C(d - 5 + 2, 2) at d = 0 is C(-3, 2) = 6
    assert_eq!(QPoly::binomial(-3, 2).eval(0), Rational::from_integer(6.into()));
}

#[test]
fn qpoly_display() {
    let p = QPoly::new(vec![
        Rational::from_integer(1.into()),
        Rational::new((-1).into(), 2.into()),
        Rational::new(3.into(), 2.into()),
    ]);
    assert_eq!(p.to_string(), "3/2*d^2 - 1/2*d + 1");
    assert_eq!(QPoly::from_ints(&[-4, 1]).to_string(), "d - 4");
    assert_eq!(QPoly::zero().to_string(), "0");
}

#[test]
fn numerator_examples() {
    let v = VarSet::xyz();
    assert_eq!(hilbert_series_numerator(&Ideal::zero(&v)).unwrap().coefficients, [1]);
    assert_eq!(hilbert_series_numerator(&ideal(&["x"])).unwrap().coefficients, [1, -1]);
    assert_eq!(
        hilbert_series_numerator(&ideal(&["x^2", "x*y", "y^2"])).unwrap().coefficients,
        [1, 0, -3, 2]
    );
    assert!(matches!(
        hilbert_series_numerator(&ideal(&["x + y"])),
        Err(HilbertError::NotMonomial(_))
    ));
}

#[test]
fn function_examples() {
    let v = VarSet::xyz();
    let s = hilbert_data(&Ideal::zero(&v)).unwrap();
    assert_eq!((0..5).map(|d| s.value(d)).collect::<Vec<_>>(), [1, 3, 6, 10, 15]);
    assert_eq!(s.hp.to_string(), "1/2*d^2 + 3/2*d + 1");
    assert_eq!(s.postulation, -1);
    let pt = hilbert_data(&ideal(&["x", "y"])).unwrap();
    assert!((0..8).all(|d| pt.value(d) == 1));
    assert_eq!(pt.multiplicity, Multiplicity::Finite(1));
    // two cubics meeting in nine points
    let ci = ideal(&["x^3 - x*z^2", "y^3 - y*z^2"]);
    let hf: Vec<u64> = (0..7).map(|d| hilbert_function(&ci, d).unwrap()).collect();
    assert_eq!(hf, [1, 3, 6, 8, 9, 9, 9]);
    assert_eq!(multiplicity(&ci).unwrap(), Multiplicity::Finite(9));
    assert_eq!(postulation_number(&ci).unwrap(), 3);
    assert!(matches!(hilbert_function(&ideal(&["x + y^2"]), 1), Err(HilbertError::NotHomogeneous)));
}

#[test]
fn positive_dimensional() {
    let m = multiplicity(&ideal(&["x^2 + y*z"])).unwrap();
    assert_eq!(
        m,
        Multiplicity::PositiveDimensional {
            dimension: 1,
            degree: 2
        }
    );
}

#[test]
fn hilbert_burch_of_tangent_cone() {
    let hb = hilbert_burch_degrees(&ideal(&["x^5", "x^4*y", "y^5"])).unwrap();
    assert_eq!(hb.generators, [5, 5, 5]);
    assert_eq!(hb.relations, [6, 9]);
    assert_eq!(hb.relation_spread(), 3);
    let hb = hilbert_burch_degrees(&ideal(&["x^2", "y^2", "x^2 + 2*x*y + y^2"])).unwrap();
    assert_eq!(hb.relations, [3, 3]);
    assert_eq!(multiplicity(&ideal(&["x^5", "x^4*y", "y^5"])).unwrap(), Multiplicity::Finite(21));
}

#[test]
fn minimal_generators_drop_redundant() {
    let m = minimal_generators(&ideal(&["x^2", "x*y", "x^2*y + x*y^2", "y^3"])).unwrap();
    assert_eq!(m.generators().len(), 3);
}

#[test]
fn complete_intersection_formula() {
    let b = |m: i64| binomial_truncated(m, 2) as u64;
    for (f, g, a, c) in [("x^2 + y*z", "y^3 - x*z^2", 2i64, 3i64), ("x*y", "x^2 + y^2 + z^2", 2, 2)] {
        let i = Ideal::new(
            &VarSet::xyz(),
            vec![parse_polynomial(f, &VarSet::xyz()).unwrap(), parse_polynomial(g, &VarSet::xyz()).unwrap()],
        )
        .unwrap();
        let data = hilbert_data(&i).unwrap();
        for d in 0..12i64 {
            let expect = b(d + 2) + b(d - a - c + 2) - b(d - a + 2) - b(d - c + 2);
            assert_eq!(data.value(d as u32), expect);
        }
    }
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn arb_form(deg: u32) -> impl Strategy<Value = Polynomial> {
        let monos = Monomial::all_of_degree(3, deg);
        let k = monos.len();
        prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..4], k).prop_map(move |cs| {
            Polynomial::from_terms(
                &VarSet::xyz(),
                monos
                    .iter()
                    .cloned()
                    .zip(cs)
                    .map(|(m, c)| (m, Rational::from_integer(c.into()))),
            )
        })
    }

    fn arb_monomials() -> impl Strategy<Value = Vec<Monomial>> {
        prop::collection::vec((0u32..5, 0u32..5, 0u32..5), 1..7)
            .prop_map(|v| v.into_iter().map(|(a, b, c)| Monomial::new(&[a, b, c])).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn standard_monomials_match_linear_algebra(f in arb_form(2), g in arb_form(2), h in arb_form(3)) {
            let i = Ideal::new(&VarSet::xyz(), vec![f, g, h]).unwrap();
            let data = hilbert_data(&i).unwrap();
            for d in 0..=6 {
                prop_assert_eq!(data.value(d), brute_hf(&i, d));
            }
            // HF agrees with HP strictly past the postulation number
            for d in (data.postulation + 1)..(data.postulation + 8) {
                prop_assert_eq!(Rational::from_integer(data.value(d as u32).into()), data.hp.eval(d));
            }
            if data.postulation >= 0 {
                let d = data.postulation;
                prop_assert_ne!(Rational::from_integer(data.value(d as u32).into()), data.hp.eval(d));
            }
        }

        #[test]
        fn monomial_numerator_matches_counting(ms in arb_monomials()) {
            let num = numerator_of_monomials(&ms, 3);
            for d in 0..10 {
                let count = Monomial::all_of_degree(3, d)
                    .into_iter()
                    .filter(|m| !ms.iter().any(|g| g.divides(m)))
                    .count() as u64;
                prop_assert_eq!(num.series_coefficient(d), count);
            }
        }

        #[test]
        fn multiplicity_survives_saturation(f in arb_form(2), g in arb_form(2)) {
            let z = Polynomial::var(&VarSet::xyz(), 2);
            let i = Ideal::new(&VarSet::xyz(), vec![&f * &z, &g * &z, f.clone(), g]).unwrap();
            let s = crate::groebner::saturate_irrelevant(&i).unwrap();
            prop_assert_eq!(multiplicity(&i).unwrap(), multiplicity(&s).unwrap());
        }
    }
}
