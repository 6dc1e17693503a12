use std::process::{Command, Output};

use malcev_cli::parse;
use malcev_core::alternative::{lift, mul_a, project};
use malcev_core::envelope::{associator_u, mul_u};
use malcev_core::random::Sampler;
use proptest::prelude::*;

fn malcev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_malcev"))
        .args(args)
        .env_remove("MALCEV_MEMO_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

#[test]
fn associator_golden() {
    let o = malcev(&["assoc", "abd", "abd", "abd"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "1/6 abcd^2e - 1/6 abde^2 - 1/6 c^2d^2e + 11/36 cde^2 - 1/12 e^3\n"
    );
}

#[test]
fn alternator_vanishes_in_quotient() {
    let o = malcev(&["assoc", "--algebra", "a", "ab", "ab", "d"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "0\n"));
    let o = malcev(&["assoc", "ab", "ab", "d"]);
    assert_eq!(stdout(&o), "-1/6 ce\n");
}

#[test]
fn speciality_check_passes() {
    let o = malcev(&["check", "special"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("special: pass (30 cases)\n"));
}

#[test]
fn exit_codes_for_bad_input() {
    for args in [
        &["mul", "ba", "a"][..],
        &["mul", "a"],
        &["check", "everything"],
        &["assoc", "--algebra", "z", "a", "b", "c"],
        &["mul", "2a +", "b"],
    ] {
        let o = malcev(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn memo_limit_variable() {
    let o = Command::new(env!("CARGO_BIN_EXE_malcev"))
        .args(["check", "oracle", "--max-degree", "2"])
        .env("MALCEV_MEMO_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_malcev"))
        .args(["check", "oracle"])
        .env("MALCEV_MEMO_LIMIT", "-1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_output_is_deterministic() {
    let args = ["check", "malcev", "--seed", "17", "--samples", "50"];
    let (a, b) = (malcev(&args), malcev(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        stdout(&a),
        "max-degree 5, samples 50, seed 17\n\
         malcev\n  ok   Malcev identity in degree one (50 cases)\n  ok   brackets of M embed (75 cases)\n\
         malcev: pass (125 cases)\n"
    );
}

#[test]
fn json_output() {
    let o = malcev(&["--format", "json", "mul", "d", "c"]);
    assert_eq!(
        stdout(&o),
        "[{\"coeff\":\"1\",\"exp\":[0,0,1,1,0]},{\"coeff\":\"-1\",\"exp\":[0,0,0,0,1]}]\n"
    );
    let o = malcev(&["project", "--format", "json", "cd - e + ce"]);
    let parsed: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(parsed[1]["type"], 1);
    assert_eq!(parsed[1]["exp"], serde_json::json!([0, 0, 0, 0, 1]));
}

#[test]
fn operators_from_the_command_line() {
    assert_eq!(stdout(&malcev(&["apply-op", "rho", "d", "c"])), "e\n");
    assert_eq!(stdout(&malcev(&["apply-op", "l", "d", "c"])), "cd - e\n");
    assert_eq!(
        stdout(&malcev(&["bracket", "--algebra", "a", "a", "b"])),
        "c\n"
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn printed_products_parse_back(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (x, y, z) = (s.u_element(3, 2), s.u_element(3, 2), s.u_element(2, 1));
        for v in [x.clone(), mul_u(&x, &y), associator_u(&x, &y, &z)] {
            prop_assert_eq!(parse(&v.to_string()).unwrap(), v);
        }
    }

    #[test]
    fn printed_quotient_elements_parse_back(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let v = mul_a(&s.a_element(4, 3), &s.a_element(4, 3));
        let reparsed = parse(&v.to_string()).unwrap();
        prop_assert_eq!(&reparsed, &lift(&v));
        prop_assert_eq!(project(&reparsed), v);
    }
}
