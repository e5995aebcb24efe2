//! CLI acceptance: every documented invocation reproduces its golden
//! bytes, repeated runs are byte-identical, and the exit-code contract
//! holds (0 success, 1 verification/membership failure, 2 usage/parse
//! error).

use std::process::{Command, Output};
use std::time::Instant;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superschur"))
        .args(args)
        .env_remove("SUPERSCHUR_BUDGET")
        .output()
        .expect("binary runs")
}

fn run_with_budget(args: &[&str], budget: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superschur"))
        .args(args)
        .env("SUPERSCHUR_BUDGET", budget)
        .output()
        .expect("binary runs")
}

fn assert_golden(args: &[&str], expected_stdout: &str) {
    let first = run(args);
    assert_eq!(
        String::from_utf8_lossy(&first.stdout),
        expected_stdout,
        "stdout mismatch for {:?}",
        args
    );
    assert_eq!(first.status.code(), Some(0), "exit code for {:?}", args);
    // byte determinism across repeated identical invocations
    let second = run(args);
    assert_eq!(
        first.stdout, second.stdout,
        "nondeterministic bytes for {:?}",
        args
    );
}

#[test]
fn criterion_12_cli_determinism() {
    let started = Instant::now();

    assert_golden(
        &["gen", "--m", "1", "--n", "0", "--k", "3", "--kind", "H"],
        "x1^3\n",
    );
    assert_golden(
        &["gen", "--m", "2", "--n", "0", "--k", "-1", "--kind", "H"],
        "0\n",
    );
    assert_golden(
        &["gen", "--m", "2", "--n", "0", "--k", "2", "--kind", "h"],
        "x1^2 + x1*x2 + x2^2\n",
    );
    assert_golden(&["euler", "--m", "2", "--n", "0", "--lambda", "0,0"], "1\n");
    assert_golden(
        &["kac", "--m", "1", "--n", "1", "--lambda", "0", "--mu", "0"],
        "1 - x1^-1*y1\n",
    );
    assert_golden(
        &["euler", "--m", "2", "--n", "0", "--lambda", "-2,0"],
        "-x1^-1*x2^-1\n",
    );

    // documented verification suites finish clean
    for args in [
        vec![
            "verify",
            "jacobi-trudi",
            "--m",
            "2",
            "--n",
            "1",
            "--window",
            "2",
        ],
        vec!["verify", "minor-sum", "--trials", "200"],
        vec![
            "verify",
            "presentation",
            "--m",
            "1",
            "--n",
            "1",
            "--kind",
            "U",
        ],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "suite {:?} failed", args);
        let stdout = String::from_utf8_lossy(&out.stdout);
        assert!(
            stdout.contains("\"failures\":[]"),
            "suite {:?}: {}",
            args,
            stdout
        );
        let again = run(&args);
        assert_eq!(
            out.stdout, again.stdout,
            "suite {:?} is nondeterministic",
            args
        );
    }

    // basis expansion golden: the square of the degree-one generator
    assert_golden(
        &[
            "expand", "--m", "1", "--n", "1", "--ring", "pm", "--input",
            "x1^2 - 2*x1*y1 + y1^2",
        ],
        "{\"context\":{\"m\":1,\"n\":1},\"ring\":\"pm\",\"window\":{\"index_bound\":4,\"degree_bound\":6},\"coefficients\":[{\"i\":[2],\"j\":[0],\"coeff\":\"1\"},{\"i\":[2],\"j\":[1],\"coeff\":\"-1\"}]}\n",
    );

    // expanding zero yields the empty coefficient list
    assert_golden(
        &["expand", "--m", "1", "--n", "1", "--ring", "pm", "--input", "0"],
        "{\"context\":{\"m\":1,\"n\":1},\"ring\":\"pm\",\"window\":{\"index_bound\":4,\"degree_bound\":6},\"coefficients\":[]}\n",
    );

    // JSON polynomial output is part of the wire contract
    assert_golden(
        &["gen", "--m", "1", "--n", "1", "--k", "1", "--kind", "H", "--format", "json"],
        "{\"context\":{\"m\":1,\"n\":1},\"terms\":[{\"coeff\":\"1\",\"x\":[1],\"y\":[0]},{\"coeff\":\"-1\",\"x\":[0],\"y\":[1]}]}\n",
    );

    // the remaining generator kinds
    assert_golden(
        &["gen", "--m", "2", "--n", "0", "--k", "2", "--kind", "hstar"],
        "x2^-2 + x1^-1*x2^-1 + x1^-2\n",
    );
    assert_golden(
        &["gen", "--m", "2", "--n", "0", "--k", "-2", "--kind", "hinf"],
        "x1^-1*x2^-1\n",
    );
    assert_golden(
        &[
            "gen", "--m", "2", "--n", "2", "--k", "2", "--kind", "e", "--sector", "y",
        ],
        "y1*y2\n",
    );

    // the weighted alternant through the euler subcommand
    assert_golden(
        &[
            "euler", "--m", "1", "--n", "1", "--lambda", "0", "--mu", "0",
        ],
        "1 - x1^-1*y1\n",
    );

    let elapsed = started.elapsed().as_secs_f64();
    let ok = elapsed < 10.0;
    println!(
        "criterion 12 cli determinism: {} ({:.2}s, limit 10s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed
    );
    assert!(
        ok,
        "criterion 12 exceeded its runtime budget: {:.2}s",
        elapsed
    );
}

#[test]
fn exit_code_contract() {
    // usage / parse errors exit 2
    let out = run(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["gen", "--m", "2", "--badflag"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["expand", "--m", "1", "--n", "0", "--input", "x1 +"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["euler", "--m", "2", "--n", "0", "--lambda", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));

    // semantic failures on well-formed input exit 1
    let out = run(&[
        "expand", "--m", "1", "--n", "1", "--ring", "pm", "--input", "x1 + y1",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // an expansion window too small to span the input exits 1
    let out = run(&[
        "expand",
        "--m",
        "1",
        "--n",
        "1",
        "--ring",
        "pm",
        "--input",
        "x1^2 - 2*x1*y1 + y1^2",
        "--window",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // the permutation budget is enforced through the environment
    let out = run_with_budget(&["euler", "--m", "3", "--n", "0", "--lambda", "1,0,0"], "2");
    assert_eq!(out.status.code(), Some(1));
    let out = run_with_budget(
        &["euler", "--m", "3", "--n", "0", "--lambda", "1,0,0"],
        "1000",
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reports_carry_the_documented_shape() {
    let out = run(&[
        "verify",
        "vanishing",
        "--m",
        "1",
        "--n",
        "1",
        "--window",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    for key in [
        "\"ring\"",
        "\"kind\"",
        "\"window\"",
        "\"instances_checked\"",
        "\"failures\"",
    ] {
        assert!(stdout.contains(key), "missing {} in {}", key, stdout);
    }
}
