use commutant::cli::{
    run_with_budget, EXIT_INVALID_F, EXIT_MISMATCH, EXIT_OK, EXIT_ORACLE_TOO_LARGE,
    EXIT_UNSUPPORTED, EXIT_USAGE,
};
use commutant::{commutes, DensePolynomial, FieldContext};
use serde_json::Value;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &str) -> Outcome {
    run_budget(args, None)
}

fn run_budget(args: &str, budget: Option<&str>) -> Outcome {
    let argv = std::iter::once("commutant").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with_budget(argv, budget, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn count_examples() {
    let o = run("count --p 3 --f 1,1 --degree 6");
    assert_eq!((o.code, o.stdout.as_str()), (EXIT_OK, "18\n"));
    let o = run("count --p 5 --f 2,0 --degree 5");
    assert_eq!((o.code, o.stdout.as_str()), (EXIT_OK, "20\n"));
    let o = run("count --p 3 --f 1,0 --degree 4");
    assert_eq!(o.code, EXIT_INVALID_F);
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn count_formats() {
    let o = run("count --p 3 --f 1,1 --degree 6 --format json");
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["p"], 3);
    assert_eq!(v["f"], serde_json::json!([1, 1]));
    assert_eq!(v["d"], 6);
    assert_eq!(v["count"], 18);
    assert_eq!(v["branch"], "monic");

    let o = run("count --p 5 --f 2,0 --degree 4 --format json");
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(
        (v["count"].clone(), v["branch"].clone()),
        (Value::from(0), Value::from("zero"))
    );

    let o = run("count --p 5 --f 2,0 --degree 5 --format csv");
    assert_eq!(o.stdout, "p,a,b,d,count,branch\n5,2,0,5,20,nonmonic\n");
}

#[test]
fn invalid_f_and_usage_errors() {
    assert_eq!(run("count --p 3 --f 0,1 --degree 3").code, EXIT_INVALID_F);
    assert_eq!(run("count --p 3 --f 3,1 --degree 3").code, EXIT_INVALID_F);
    assert_eq!(run("count --p 3 --f 1,3 --degree 3").code, EXIT_INVALID_F);
    assert_eq!(run("count --p 4 --f 1,1 --degree 3").code, EXIT_USAGE);
    assert_eq!(run("count --p 2 --f 1,1 --degree 2").code, EXIT_USAGE);
    assert_eq!(run("count --p 3 --f 1 --degree 3").code, EXIT_USAGE);
    assert_eq!(run("count --p 3 --degree 3").code, EXIT_USAGE);
    assert_eq!(run("frobnicate").code, EXIT_USAGE);
    assert_eq!(run("").code, EXIT_USAGE);
    assert_eq!(
        run("count --p 3 --f 1,1 --degree 3 --format xml").code,
        EXIT_USAGE
    );
}

#[test]
fn unsupported_degree() {
    let o = run("count --p 3 --f 1,1 --degree 12");
    assert_eq!(o.code, EXIT_UNSUPPORTED);
    assert!(o.stderr.contains("12"));
    assert_eq!(
        run("enumerate --p 3 --f 1,2 --degree 27").code,
        EXIT_UNSUPPORTED
    );
    // p ∤ d is 0 at any degree
    let o = run("enumerate --p 3 --f 1,2 --degree 10");
    assert_eq!((o.code, o.stdout.as_str()), (EXIT_OK, ""));
    // non-monic degrees are not capped
    assert_eq!(run("count --p 3 --f 2,0 --degree 11").code, EXIT_OK);
}

#[test]
fn enumerate_examples() {
    let o = run("enumerate --p 3 --f 1,1 --degree 3 --format text");
    assert_eq!(o.code, EXIT_OK);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 6);
    // c1 = 1 - c3: x^3 and 2x^3 + 2x are members, x^3 + 2x is not
    assert!(lines.contains(&"x^3"));
    assert!(lines.contains(&"2x^3 + 2x"));
    assert!(!lines.contains(&"x^3 + 2x"));

    let o = run("enumerate --p 3 --f 1,1 --degree 6");
    assert!(o
        .stdout
        .lines()
        .any(|l| l == "2x^6 + 2x^4 + x^3 + 2x^2 + 1"));
    assert_eq!(o.stdout.lines().count(), 18);

    let o = run("enumerate --p 5 --f 4,0 --degree 2");
    assert_eq!((o.code, o.stdout.as_str()), (EXIT_OK, ""));
    let o = run("enumerate --p 5 --f 4,0 --degree 2 --format json");
    assert_eq!(o.stdout.trim(), "[]");
}

#[test]
fn enumerate_json_round_trip() {
    for (p, a, b, d) in [
        (3, 1, 1, 6),
        (3, 1, 2, 9),
        (5, 2, 1, 5),
        (5, 3, 4, 9),
        (7, 6, 3, 5),
    ] {
        let o = run(&format!(
            "enumerate --p {p} --f {a},{b} --degree {d} --format json"
        ));
        assert_eq!(o.code, EXIT_OK);
        let arrays: Vec<Vec<u64>> = serde_json::from_str(&o.stdout).unwrap();
        assert!(!arrays.is_empty());
        let ctx = FieldContext::new(p).unwrap();
        let f = DensePolynomial::from_coeffs(ctx, &[b, a]);
        for coeffs in arrays {
            // constant term first, leading coefficient last
            assert_eq!(coeffs.len() as u64, d + 1);
            assert_ne!(*coeffs.last().unwrap(), 0);
            assert!(commutes(&f, &DensePolynomial::from_coeffs(ctx, &coeffs)));
        }
    }
}

#[test]
fn enumerate_csv_is_zero_filled() {
    let o = run("enumerate --p 3 --f 1,1 --degree 3 --format csv");
    let mut lines = o.stdout.lines();
    assert_eq!(lines.next(), Some("c0,c1,c2,c3"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.split(',').count() == 4));
    assert!(rows.contains(&"0,2,0,2"));
}

#[test]
fn oracle_matches_enumerate() {
    for args in [
        "--p 3 --f 1,1 --degree 6",
        "--p 3 --f 2,2 --degree 5",
        "--p 5 --f 1,3 --degree 5",
    ] {
        let a = run(&format!("enumerate {args}"));
        let b = run(&format!("oracle {args}"));
        assert_eq!((a.code, b.code), (EXIT_OK, EXIT_OK));
        let mut x: Vec<&str> = a.stdout.lines().collect();
        let mut y: Vec<&str> = b.stdout.lines().collect();
        x.sort_unstable();
        y.sort_unstable();
        assert_eq!(x, y);
    }
}

#[test]
fn orbits_examples() {
    let o = run("orbits --p 5 --k 2");
    assert_eq!(o.code, EXIT_OK);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines[0], "k | T_k | R_k | S_k");
    assert_eq!(lines.len(), 4);
    assert!(lines[3].starts_with("2 | {2,6,10} | "));
    assert!(lines[3].ends_with(" | {3,4,7,8,9}"));

    let o = run("orbits --p 5 --k 5");
    assert!(o.stdout.lines().last().unwrap().starts_with("5 | {25} | "));

    let o = run("orbits --p 3 --k 0 --format json");
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(
        v,
        serde_json::json!([{"k": 0, "T": [0], "R": [0], "S": []}])
    );

    let o = run("orbits --p 3 --k 1 --format csv");
    assert_eq!(o.stdout, "k,T,R,S\n0,0,0,\n1,1 3,0 1 3,2\n");

    assert_eq!(run("orbits --p 3 --k 4").code, EXIT_UNSUPPORTED);
}

#[test]
fn verify_examples() {
    let o = run("verify --p 3 --f 1,1 --degree 6");
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("formula: 18"));
    assert!(o.stdout.contains("oracle: 18"));
    assert!(o.stdout.ends_with("result: agree\n"));

    let o = run("verify --p 3 --f 1,2 --degree 3 --format json");
    assert_eq!(o.code, EXIT_OK);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(
        (v["formula"].clone(), v["agree"].clone()),
        (Value::from(6), Value::Bool(true))
    );

    let o = run("verify --p 5 --f 1,1 --degree 25");
    assert_eq!(o.code, EXIT_ORACLE_TOO_LARGE);
    assert!(o.stdout.is_empty());
}

#[test]
fn budget_override() {
    // 2 * 3^6 = 1458 candidates
    assert_eq!(
        run_budget("verify --p 3 --f 1,1 --degree 6", Some("1457")).code,
        EXIT_ORACLE_TOO_LARGE
    );
    assert_eq!(
        run_budget("verify --p 3 --f 1,1 --degree 6", Some("1458")).code,
        EXIT_OK
    );
    assert_eq!(
        run_budget("oracle --p 3 --f 1,1 --degree 6", Some("100")).code,
        EXIT_ORACLE_TOO_LARGE
    );
    assert_eq!(
        run_budget("oracle --p 3 --f 1,1 --degree 6", Some("nope")).code,
        EXIT_USAGE
    );
    // the budget only applies to exhaustive search
    assert_eq!(
        run_budget("enumerate --p 5 --f 1,1 --degree 25", Some("1")).code,
        EXIT_OK
    );
}

#[test]
fn mismatch_code_is_distinct() {
    let codes = [
        EXIT_OK,
        EXIT_USAGE,
        EXIT_INVALID_F,
        EXIT_UNSUPPORTED,
        EXIT_MISMATCH,
        EXIT_ORACLE_TOO_LARGE,
    ];
    assert_eq!(codes, [0, 1, 2, 3, 4, 5]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        "enumerate --p 5 --f 1,1 --degree 10 --format json",
        "enumerate --p 7 --f 3,2 --degree 7 --format csv",
        "oracle --p 3 --f 2,1 --degree 7",
        "orbits --p 7 --k 7",
        "verify --p 5 --f 3,4 --degree 5 --format json",
    ] {
        let first = run(args);
        for _ in 0..3 {
            assert_eq!(run(args).stdout, first.stdout, "{args}");
        }
    }
}

#[test]
fn out_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("members.json");
    let o = run(&format!(
        "enumerate --p 3 --f 1,1 --degree 6 --format json --out {}",
        path.display()
    ));
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        written,
        run("enumerate --p 3 --f 1,1 --degree 6 --format json").stdout
    );

    // overwrite in place, no stray temp files
    let o = run(&format!(
        "count --p 3 --f 1,1 --degree 6 --out {}",
        path.display()
    ));
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "18\n");
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);

    let missing = dir.path().join("no/such/dir/out.txt");
    let o = run(&format!(
        "count --p 3 --f 1,1 --degree 6 --out {}",
        missing.display()
    ));
    assert_eq!(o.code, EXIT_USAGE);
}
