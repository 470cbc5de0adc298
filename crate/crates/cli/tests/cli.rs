use std::process::Command;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use prozeta::exactalg::{BiPoly, BiRatFunc};
use prozeta::IntPoly;
use prozeta_cli::commands::{EXIT_OK, EXIT_USAGE};
use prozeta_cli::output::*;
use prozeta_cli::{execute, parse_poly};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut full = vec!["prozeta"];
    full.extend_from_slice(args);
    execute(full)
}

fn run_json(args: &[&str]) -> OutputDoc {
    let mut full = args.to_vec();
    full.push("--json");
    let (code, out, err) = run(&full);
    assert!(code == 0 || code == 1, "{args:?} exited {code}: {err}");
    OutputDoc::from_json(&out).unwrap()
}

fn poly(t: &[(u32, u32, i64)]) -> BiPoly {
    BiPoly::from_int_terms(t)
}

fn one_minus_all(ms: &[(u32, u32)]) -> BiPoly {
    ms.iter().fold(BiPoly::one(), |acc, &(a, b)| {
        &acc * &BiPoly::one_minus(a, b)
    })
}

fn local_value(poly_src: &str, p: &str) -> BiRatFunc {
    match run_json(&["zeta-local", poly_src, p]) {
        OutputDoc::LocalFactor(d) => d.value.to_ratfunc().unwrap(),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn cube_root_of_two_local_factors() {
    let four = one_minus_all(&[(12, 5), (13, 5), (14, 5), (15, 5)]);
    let two = one_minus_all(&[(12, 5), (15, 5)]);
    let split = BiRatFunc::normalize(
        poly(&[(0, 0, 1), (13, 5, 2), (14, 5, 2), (27, 10, 1)]),
        four.clone(),
    );
    let inert = BiRatFunc::normalize(BiPoly::one(), two.clone());
    let mixed = BiRatFunc::normalize(poly(&[(0, 0, 1), (27, 10, -1)]), four);
    let ramified = BiRatFunc::normalize(poly(&[(0, 0, 1), (13, 5, 1), (14, 5, 1)]), two);
    assert_eq!(local_value("x^3-2", "31"), split.unwrap());
    assert_eq!(local_value("x^3-2", "7"), inert.unwrap());
    assert_eq!(local_value("x^3-2", "5"), mixed.unwrap());
    let ramified = ramified.unwrap();
    assert_eq!(local_value("x^3-2", "2"), ramified);
    assert_eq!(local_value("x^3-2", "3"), ramified);
}

#[test]
fn factored_denominators() {
    let OutputDoc::LocalFactor(d) = run_json(&["zeta-local", "x^3-2", "5"]) else {
        panic!()
    };
    assert_eq!(
        d.den_factored,
        Some(vec![(12, 5, 1), (13, 5, 1), (14, 5, 1), (15, 5, 1)])
    );
    assert_eq!(
        d.value.num,
        vec![TermDoc(0, 0, "1".into()), TermDoc(27, 10, "-1".into())]
    );
    let OutputDoc::LocalFactor(d) = run_json(&["zeta-local", "x^3-2", "7"]) else {
        panic!()
    };
    let den: Vec<(u32, u32, String)> = d
        .value
        .den
        .iter()
        .map(|t| (t.0, t.1, t.2.clone()))
        .collect();
    assert_eq!(
        den,
        vec![
            (0, 0, "1".into()),
            (12, 5, "-1".into()),
            (15, 5, "-1".into()),
            (27, 10, "1".into())
        ]
    );
    assert_eq!(d.family, "general");
}

#[test]
fn quadratic_routes_to_its_family() {
    let OutputDoc::LocalFactor(d) = run_json(&["zeta-local", "x^2+1", "5"]) else {
        panic!()
    };
    assert_eq!(d.family, "quadratic");
    assert_eq!(d.ty.f, vec![1, 1]);
    assert_eq!(d.den_factored, Some(vec![(4, 2, 2), (5, 2, 2)]));
}

#[test]
fn decomp_golden() {
    let (code, out, _) = run(&["decomp", "x^3-2", "31"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("e=(1,1,1) f=(1,1,1)"), "{out}");
    let OutputDoc::Decomp(d) = run_json(&["decomp", "x^3 - 2", "5"]) else {
        panic!()
    };
    assert_eq!((d.ty.e, d.ty.f), (vec![1, 1], vec![1, 2]));
    // the randomized splitting does not change the answer
    let OutputDoc::Decomp(s) = run_json(&["decomp", "x^3 - 2", "31", "--seed", "12345"]) else {
        panic!()
    };
    assert_eq!(s.ty.f, vec![1, 1, 1]);
}

#[test]
fn coset_golden() {
    let (code, out, _) = run(&["oracle", "coset", "--q", "3", "--e", "1", "--v", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("count: 13"), "{out}");
    assert!(out.contains("formula: 13"));
    assert!(out.contains("agree: yes"));
}

#[test]
fn funceq_from_polynomial_and_type() {
    let OutputDoc::FuncEq(d) = run_json(&["funceq", "x^3-2", "31"]) else {
        panic!()
    };
    assert_eq!(
        d.symmetry,
        Some(SymmetryDoc {
            sign: 1,
            a: 27,
            b: 10
        })
    );
    assert_eq!(d.agree, Some(true));
    let OutputDoc::FuncEq(d) = run_json(&["funceq", "--type", "n=3", "e=1,1", "f=1,2"]) else {
        panic!()
    };
    assert_eq!(
        d.symmetry,
        Some(SymmetryDoc {
            sign: -1,
            a: 27,
            b: 10
        })
    );
    let OutputDoc::FuncEq(d) = run_json(&["funceq", "--type", "n=3", "e=3", "f=1"]) else {
        panic!()
    };
    assert_eq!((d.symmetry, d.expected, d.agree), (None, None, None));
    let OutputDoc::FuncEq(d) = run_json(&["funceq", "x^2+1", "2"]) else {
        panic!()
    };
    assert_eq!(
        d.symmetry,
        Some(SymmetryDoc {
            sign: 1,
            a: 9,
            b: 4
        })
    );
    assert_eq!(run(&["funceq", "--type", "n=4", "f=1,2"]).0, EXIT_USAGE);
    assert_eq!(run(&["funceq", "x^3-2"]).0, EXIT_USAGE);
}

#[test]
fn coeffs_columns() {
    let OutputDoc::Coeffs(d) = run_json(&["coeffs", "x^3-2", "7", "--max-k", "10"]) else {
        panic!()
    };
    assert_eq!(d.agree, Some(true));
    assert_eq!(d.rows.len(), 11);
    // inert cubic: 1/((1 - p^12 Y^5)(1 - p^15 Y^5)) gives b_{p^5} = p^12 + p^15
    let p = BigInt::from(7);
    assert_eq!(d.rows[5].series.0, p.pow(12) + p.pow(15));
    let OutputDoc::Coeffs(d) = run_json(&["coeffs", "x^2+1", "3", "--max-k", "4"]) else {
        panic!()
    };
    assert_eq!(d.agree, None);
    assert!(d.rows.iter().all(|r| r.vsum.is_none()));
    let (_, text, _) = run(&["coeffs", "x^2+1", "3", "--max-k", "4"]);
    assert!(text.contains("n/a"));
}

#[test]
fn euler_table() {
    let OutputDoc::Euler(d) = run_json(&["euler", "x^3-2", "--primes", "7", "--index", "100"])
    else {
        panic!()
    };
    assert_eq!(
        d.entries[0],
        EulerEntry {
            m: 1,
            b: Int(1.into())
        }
    );
    assert!(d
        .entries
        .iter()
        .all(|e| e.m <= 100 && e.b.0 >= BigInt::from(0)));
}

#[test]
fn lie_commands() {
    let OutputDoc::LieCheck(d) = run_json(&["lie", "check", "x^3-2", "--ell", "2"]) else {
        panic!()
    };
    assert!(d.passed);
    assert_eq!(d.rank, 14);
    let OutputDoc::LieSigma(d) = run_json(&["lie", "sigma", "x^2+3*x+5"]) else {
        panic!()
    };
    let rows: Vec<Vec<i64>> = d
        .sigma
        .iter()
        .map(|r| r.iter().map(|c| c.0.to_string().parse().unwrap()).collect())
        .collect();
    assert_eq!(rows, vec![vec![3, 1], vec![1, 0]]);
    assert!(d.passed);
    let OutputDoc::LieIso(d) = run_json(&["lie", "iso", "x^2-2"]) else {
        panic!()
    };
    assert!(d.passed);
    assert_eq!(run(&["lie", "iso", "x^3-2"]).0, EXIT_USAGE);
}

#[test]
fn input_errors_exit_two() {
    let cases: &[(&[&str], &str)] = &[
        (&["decomp", "x^2 + 1/2", "3"], "non-integer coefficient"),
        (&["decomp", "2*x^2+1", "3"], "monic"),
        (&["decomp", "x^2-1", "3"], "reducible"),
        (&["decomp", "x^2+1", "4"], "not prime"),
        (&["zeta-local", "x^2-5", "2"], "inapplicable"),
        (
            &["euler", "x^2-5", "--primes", "10", "--index", "10"],
            "inapplicable",
        ),
        (&["frobnicate"], "unrecognized subcommand"),
        (&["coeffs", "x^3-2", "5"], "--max-k"),
    ];
    for (args, needle) in cases {
        let (code, out, err) = run(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty());
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn binary_honors_exit_codes_and_environment() {
    let bin = env!("CARGO_BIN_EXE_prozeta");
    let out = Command::new(bin)
        .args(["decomp", "x^3-2", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("f=(3)"));
    let out = Command::new(bin)
        .args(["zeta-local", "x^2-8", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("conductor"));
    let out = Command::new(bin)
        .args([
            "oracle", "coset", "--q", "2", "--e", "2", "--v", "2", "--json",
        ])
        .env("PROZETA_ENUM_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let OutputDoc::Coset(d) = OutputDoc::from_json(&String::from_utf8_lossy(&out.stdout)).unwrap()
    else {
        panic!()
    };
    assert_eq!(d.method, "digit-tree");
    assert_eq!(d.count.0, BigInt::from(31));
    let out = Command::new(bin)
        .args([
            "oracle", "coset", "--q", "2", "--e", "1", "--v", "1", "--json",
        ])
        .env("PROZETA_PRECISION", "9")
        .output()
        .unwrap();
    let OutputDoc::Coset(d) = OutputDoc::from_json(&String::from_utf8_lossy(&out.stdout)).unwrap()
    else {
        panic!()
    };
    assert_eq!(d.precision, 9);
}

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(any::<i64>(), 0..=9)
        .prop_map(|c| IntPoly::new(c.into_iter().map(BigInt::from).collect()))
}

fn big() -> impl Strategy<Value = Int> {
    (any::<i64>(), 0u32..4).prop_map(|(v, k)| Int(BigInt::from(v) * BigInt::from(10).pow(20 * k)))
}

fn type_doc() -> impl Strategy<Value = TypeDoc> {
    (
        1u32..9,
        prop::collection::vec(1u32..4, 1..4),
        prop::collection::vec(1u32..4, 1..4),
    )
        .prop_map(|(n, e, f)| TypeDoc { n, e, f })
}

fn ratfunc_doc() -> impl Strategy<Value = RatFuncDoc> {
    let term = (0u32..60, 0u32..30, any::<i32>(), 1u32..5)
        .prop_map(|(a, b, c, d)| TermDoc(a, b, BigRational::new(c.into(), d.into()).to_string()));
    (
        prop::collection::vec(term.clone(), 0..6),
        prop::collection::vec(term, 1..6),
    )
        .prop_map(|(num, den)| RatFuncDoc { num, den })
}

fn sym() -> impl Strategy<Value = Option<SymmetryDoc>> {
    prop::option::of((
        prop_oneof![Just(1i8), Just(-1i8)],
        -100i64..100,
        -100i64..100,
    ))
    .prop_map(|o| o.map(|(sign, a, b)| SymmetryDoc { sign, a, b }))
}

fn output_doc() -> impl Strategy<Value = OutputDoc> {
    let name = "[a-z0-9^*+ -]{0,12}";
    prop_oneof![
        (name, any::<u64>(), type_doc()).prop_map(|(poly, p, ty)| OutputDoc::Decomp(DecompDoc {
            poly,
            p,
            ty
        })),
        (
            prop::option::of(name),
            prop::option::of(any::<u64>()),
            type_doc(),
            ratfunc_doc(),
            prop::option::of(prop::collection::vec((0u32..50, 0u32..20, 1u32..4), 0..5))
        )
            .prop_map(|(poly, p, ty, value, den_factored)| OutputDoc::LocalFactor(
                LocalFactorDoc {
                    poly,
                    p,
                    ty,
                    family: "general".into(),
                    value,
                    den_factored
                }
            )),
        (
            prop::option::of(name),
            prop::option::of(any::<u64>()),
            type_doc(),
            sym(),
            sym(),
            prop::option::of(any::<bool>())
        )
            .prop_map(
                |(poly, p, ty, symmetry, expected, agree)| OutputDoc::FuncEq(FuncEqDoc {
                    poly,
                    p,
                    ty,
                    symmetry,
                    expected,
                    agree
                })
            ),
        (
            name,
            any::<u64>(),
            type_doc(),
            prop::collection::vec((big(), big(), prop::option::of(big())), 0..5),
            prop::option::of(any::<bool>())
        )
            .prop_map(|(poly, p, ty, rows, agree)| OutputDoc::Coeffs(CoeffsDoc {
                poly,
                p,
                ty,
                agree,
                rows: rows
                    .into_iter()
                    .enumerate()
                    .map(|(k, (index, series, vsum))| CoeffRow {
                        k,
                        index,
                        series,
                        vsum
                    })
                    .collect(),
            })),
        (
            name,
            any::<u64>(),
            any::<u64>(),
            prop::collection::vec((any::<u64>(), big()), 0..5)
        )
            .prop_map(
                |(poly, prime_bound, max_index, e)| OutputDoc::Euler(EulerDoc {
                    poly,
                    prime_bound,
                    max_index,
                    entries: e.into_iter().map(|(m, b)| EulerEntry { m, b }).collect(),
                })
            ),
        (
            any::<u64>(),
            any::<u32>(),
            any::<u32>(),
            any::<u32>(),
            big(),
            big(),
            any::<bool>(),
            prop::option::of((any::<u32>(), any::<usize>(), any::<usize>(), any::<usize>()))
        )
            .prop_map(
                |(q, e, v, precision, count, formula, agree, dist)| OutputDoc::Coset(CosetDoc {
                    q,
                    e,
                    v,
                    precision,
                    count,
                    formula,
                    agree,
                    method: "exhaustive".into(),
                    distinctness: dist.map(|(max_m, reps, pairs_checked, collisions)| {
                        DistinctnessDoc {
                            max_m,
                            reps,
                            pairs_checked,
                            collisions,
                        }
                    }),
                })
            ),
        (
            name,
            any::<u32>(),
            any::<usize>(),
            any::<usize>(),
            any::<usize>(),
            any::<usize>(),
            any::<bool>(),
            any::<bool>()
        )
            .prop_map(|(poly, ell, rank, a, j, center_dim, center_is_z, passed)| {
                OutputDoc::LieCheck(LieCheckDoc {
                    poly,
                    ell,
                    rank,
                    antisymmetry_violations: a,
                    jacobi_violations: j,
                    center_dim,
                    center_is_z,
                    passed,
                })
            }),
        (
            name,
            prop::collection::vec(prop::collection::vec(big(), 0..4), 0..4),
            any::<[bool; 4]>()
        )
            .prop_map(|(poly, sigma, b)| OutputDoc::LieSigma(LieSigmaDoc {
                poly,
                sigma,
                symmetric: b[0],
                unimodular: b[1],
                intertwines: b[2],
                passed: b[3]
            })),
        (name, any::<bool>())
            .prop_map(|(poly, passed)| OutputDoc::LieIso(LieIsoDoc { poly, passed })),
    ]
}

proptest! {
    #[test]
    fn parse_inverts_display(p in int_poly()) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn json_round_trip(doc in output_doc()) {
        let text = doc.to_json();
        prop_assert_eq!(OutputDoc::from_json(&text).unwrap(), doc);
    }

    #[test]
    fn ratfunc_doc_round_trip(
        n in prop::collection::vec((0u32..20, 0u32..10, -9i64..10), 0..5),
        d in prop::collection::vec((0u32..20, 0u32..10, -9i64..10), 1..5),
    ) {
        let den = BiPoly::from_int_terms(&d);
        prop_assume!(!den.is_zero());
        let r = BiRatFunc::normalize(BiPoly::from_int_terms(&n), den).unwrap();
        prop_assert_eq!(RatFuncDoc::from(&r).to_ratfunc().unwrap(), r);
    }
}
