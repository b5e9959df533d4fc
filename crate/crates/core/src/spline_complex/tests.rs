use super::*;
use crate::polyring::parse_polynomial;

const LINE_TWO_CIRCLES: [&str; 3] = ["x", "x^2 + y^2 - 2*y*z", "x^2 + y^2 - 2*x*z + 2*y*z"];
const PENCIL: [&str; 3] = [
    "x^2 - 6*x*y + y^2 - 2*x*z + 6*y*z",
    "x^2 + 6*x*y + y^2 - 2*x*z - 6*y*z",
    "10*x^2 - 6*x*y + 10*y^2 - 20*x*z + 6*y*z",
];
const REPEATED_TANGENT: [&str; 3] = ["y*z - x^2", "x*z + y^2", "y*z^2 - x^3"];

fn p(s: &str) -> Polynomial {
    parse_polynomial(s, &VarSet::xyz()).unwrap()
}

#[test]
fn validation() {
    let c = StarComplex::parse_forms(&LINE_TWO_CIRCLES, 0).unwrap();
    assert_eq!(c.num_edges(), 3);
    assert_eq!(c.degrees(), [1, 2, 2]);
    assert!(matches!(
        StarComplex::parse_forms(&["x^2", "x^2"], 0),
        Err(SplineError::Invalid(v)) if v == [Violation::AdjacentProportional { first: 0, second: 1 }]
    ));
    assert!(matches!(
        StarComplex::parse_forms(&["x + z", "y"], 0),
        Err(SplineError::Invalid(v)) if v == [Violation::NotVanishingAtVertex { edge: 0 }]
    ));
    assert!(matches!(
        StarComplex::parse_forms(&["x^2 + y", "y"], 0),
        Err(SplineError::Invalid(v)) if v == [Violation::NotHomogeneous { edge: 0 }]
    ));
    assert!(matches!(StarComplex::parse_forms(&["x"], 0), Err(SplineError::Invalid(_))));
    let warned = StarComplex::parse_forms(&["x*z", "y"], 0).unwrap();
    assert_eq!(warned.warnings().len(), 1);
}

#[test]
fn affine_input_is_translated_and_homogenized() {
    let zero = || Rational::from_integer(0.into());
    let c = StarComplex::from_affine(
        &[("x", None), ("x^2 + y^2 - 2*y", None), ("x^2 + y^2 - 2*x + 2*y", Some(1))],
        (zero(), zero()),
        0,
    )
    .unwrap();
    assert_eq!(c.form(1), &p("x^2 + y^2 - 2*y*z"));
    assert_eq!(c.smoothness(2), 1);
    assert_eq!(c.uniform_smoothness(), None);
    // the same circle written around the vertex (1, 1)
    let one = || Rational::from_integer(1.into());
    let moved = StarComplex::from_affine(
        &[("x - 1", None), ("(x-1)^2 + (y-1)^2 - 2*(y-1)", None)],
        (one(), one()),
        0,
    )
    .unwrap();
    assert_eq!(moved.form(1), &p("x^2 + y^2 - 2*y*z"));
}

#[test]
fn classification() {
    let fig = StarComplex::parse_forms(&LINE_TWO_CIRCLES, 0).unwrap();
    let conf = classify_configuration(&fig);
    assert_eq!(conf.to_string(), "DistinctTangent, degrees 1,2,2");
    match conf {
        Configuration::DistinctTangent { tangents, .. } => {
            assert_eq!(tangents, [p("x"), p("-2*y"), p("-2*x + 2*y")]);
        }
        other => panic!("{other}"),
    }
    let pen = classify_configuration(&StarComplex::parse_forms(&PENCIL, 0).unwrap());
    assert_eq!(pen.to_string(), "Pencil N=3 s=3 n=2");
    assert_eq!(pen.t(0), Some(2));
    assert_eq!(pen.t(1), Some(3));
    let rep = classify_configuration(&StarComplex::parse_forms(&REPEATED_TANGENT, 0).unwrap());
    assert_eq!(rep.to_string(), "Other: repeated tangent y (edges 1,3)");
    // two lines: a pencil of lines, preferred over distinct tangents
    let two = classify_configuration(&StarComplex::parse_forms(&["x", "y"], 0).unwrap());
    assert_eq!(two.to_string(), "Pencil N=2 s=2 n=1");
    // all three curves also pass through (0, 2)
    let extra = StarComplex::parse_forms(&["x", "x^2 + y^2 - 2*y*z", "x^2 + 3*x*y + y^2 - 2*x*z - 2*y*z"], 0).unwrap();
    assert_eq!(
        classify_configuration(&extra),
        Configuration::Other {
            degrees: vec![1, 2, 2],
            diagnostics: vec![Diagnostic::ExtraCommonZeros]
        }
    );
}

#[test]
fn line_two_circles_dimensions() {
    let fig = StarComplex::parse_forms(&LINE_TWO_CIRCLES, 0).unwrap();
    assert_eq!(dim_formula(&fig, 0, 3).unwrap(), 13);
    assert_eq!(dim_kernel(&fig, 3), 13);
    let r1 = fig.with_smoothness(1);
    assert_eq!(dim_formula(&r1, 1, 6).unwrap(), 30);
    assert_eq!(dim_kernel(&r1, 6), 30);
    let r2 = fig.with_smoothness(2);
    assert_eq!(dim_formula(&r2, 2, 4).unwrap(), 15);
    assert_eq!(dim_kernel(&r2, 4), 15);
    assert_eq!(dim_kernel(&fig, 0), 1);
    assert!(matches!(dim_formula(&fig, 1, 3), Err(SplineError::MixedSmoothness { .. })));
}

#[test]
fn oracles_agree_on_small_grid() {
    for forms in [&LINE_TWO_CIRCLES[..], &PENCIL[..], &REPEATED_TANGENT[..], &["x", "y"][..], &["x", "y", "x - y", "x + 2*y"][..]] {
        let base = StarComplex::parse_forms(forms, 0).unwrap();
        for r in 0..=1 {
            let c = base.with_smoothness(r);
            let oracle = FormulaOracle::new(&c, r).unwrap();
            for d in 0..=7 {
                assert_eq!(oracle.dim(d), dim_kernel(&c, d), "{forms:?} r={r} d={d}");
            }
        }
    }
}

#[test]
fn bases_are_splines() {
    let fig = StarComplex::parse_forms(&LINE_TWO_CIRCLES, 0).unwrap();
    let b = spline_basis(&fig, 3);
    assert_eq!(b.len(), 13);
    let global = b.iter().filter(|s| s.parts.windows(2).all(|w| w[0] == w[1])).count();
    assert_eq!(global, 10);
    for s in &b {
        assert!(is_spline(&fig, &s.parts).unwrap(), "{s}");
    }
    let r1 = fig.with_smoothness(1);
    assert_eq!(spline_basis(&r1, 6).len(), 30);
    let b0 = spline_basis(&fig, 0);
    assert_eq!(b0.len(), 1);
    assert_eq!(b0[0].to_string(), "[1, 1, 1]");
}

#[test]
fn spline_predicate() {
    let c = StarComplex::parse_forms(&["x", "y", "x - y"], 0).unwrap();
    let f = p("x^2 + y*z");
    assert!(is_spline(&c, &[f.clone(), f.clone(), f.clone()]).unwrap());
    // only the difference across edge 1 (faces 0 and 1) is nonzero, and it is a multiple of y
    assert!(!is_spline(&c, &[p("0"), p("y"), p("0")]).unwrap());
    assert!(is_spline(&c, &[p("0"), p("x*y - y^2"), p("0")]).unwrap());
    // face 2 differs from face 0 by x (edge 0) and from face 1 by x (edge 2 is x - y): fails
    assert!(!is_spline(&c, &[p("0"), p("0"), p("x")]).unwrap());
    assert!(matches!(is_spline(&c, &[p("x"), p("x^2"), p("0")]), Err(SplineError::DegreeMismatch)));
    assert!(matches!(is_spline(&c, &[p("x")]), Err(SplineError::WrongPartCount { .. })));
}

#[test]
fn mixed_smoothness_kernel() {
    let mut c = StarComplex::parse_forms(&["x", "y", "x - y"], 0).unwrap();
    let uniform = dim_kernel(&c, 4);
    c = validate_star(
        vec![
            Edge { form: p("x"), smoothness: Some(1) },
            Edge { form: p("y"), smoothness: None },
            Edge { form: p("x - y"), smoothness: None },
        ],
        0,
    )
    .unwrap();
    let raised = dim_kernel(&c, 4);
    assert!(raised <= uniform);
    assert!(raised >= 15);
}

#[test]
fn pencil_generator_degrees() {
    let c = StarComplex::parse_forms(&PENCIL, 1).unwrap();
    assert_eq!(generator_degrees(&c, 10), [0, 6, 6]);
    let c0 = c.with_smoothness(0);
    assert_eq!(generator_degrees(&c0, 6), [0, 2, 4]);
}

#[test]
fn spline_hilbert_polynomials() {
    let fig = StarComplex::parse_forms(&LINE_TWO_CIRCLES, 0).unwrap();
    let expect = [
        ("3/2*d^2 - 1/2*d + 1", 1),
        ("3/2*d^2 - 11/2*d + 9", 5),
        ("3/2*d^2 - 21/2*d + 28", 9),
        ("3/2*d^2 - 31/2*d + 57", 13),
    ];
    for (r, (hp, d0)) in expect.iter().enumerate() {
        let o = FormulaOracle::new(&fig.with_smoothness(r as u32), r as u32).unwrap();
        assert_eq!(o.hilbert_polynomial().to_string(), *hp);
        assert_eq!(o.postulation(), *d0);
    }
}
