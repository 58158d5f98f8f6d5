mod support;

use spanforge::fincat::Budget;
use spanforge::io::{self, Fact, Value};
use support::{fixtures, golden, run, run_fixture};

#[test]
fn exit_codes_follow_the_contract() {
    let mut seen = std::collections::BTreeMap::<&str, [bool; 3]>::new();
    for (args, code) in fixtures() {
        let r = run_fixture(&args, &[]);
        assert_eq!(r.code, code, "{args:?}\nstdout: {}\nstderr: {}", r.stdout, r.stderr);
        seen.entry(args[0]).or_default()[code as usize] = true;
        match code {
            2 => assert!(
                r.stdout.is_empty() && r.stderr.starts_with("error: "),
                "{args:?}: {}",
                r.stderr
            ),
            _ => assert!(r.stderr.is_empty(), "{args:?}: {}", r.stderr),
        }
    }
    assert_eq!(seen.len(), 15);
    for (cmd, codes) in seen {
        assert_eq!(codes, [true; 3], "{cmd} lacks a fixture for some exit code");
    }
}

#[test]
fn structured_reports_are_deterministic_documents() {
    for (args, code) in fixtures().into_iter().filter(|(_, c)| *c != 2) {
        let a = run_fixture(&args, &["--report", "structured"]);
        let b = run_fixture(&args, &["--report", "structured"]);
        assert_eq!(a.code, code);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        let Value::Report(r) = io::parse(&a.stdout, &Budget::default()).unwrap() else {
            panic!("kind")
        };
        assert_eq!(r.command, args[0]);
        assert_eq!(r.report.is_ok(), code == 0);
        if code == 1 {
            assert!(!r.report.violations[0].witness.is_empty() || !r.report.violations[0].detail.is_empty());
        }
    }
}

fn fact(args: &[&'static str], key: &str) -> Fact {
    let r = run_fixture(args, &["--report", "structured"]);
    let Value::Report(r) = io::parse(&r.stdout, &Budget::default()).unwrap() else {
        panic!("kind")
    };
    r.facts[key].clone()
}

#[test]
fn reported_facts() {
    assert_eq!(fact(&["center", "s3_discrete"], "object_count"), Fact::Int(1));
    assert_eq!(fact(&["mueger", "z3_bichar"], "object_count"), Fact::Int(1));
    assert_eq!(fact(&["mueger", "z3_bichar"], "symmetric"), Fact::Bool(true));
    assert_eq!(fact(&["validate", "z2_cocycle"], "kind"), Fact::Text("monoidal".into()));
    let s = fact(
        &["module-structures", "z2_bz2_module", "z2_bz2_module", "bz2_id"],
        "structures",
    );
    assert_eq!(
        s,
        fact(
            &["module-structures", "z2_bz2_module", "z2_bz2_module", "bz2_id"],
            "lifts"
        )
    );
}

#[test]
fn mismatched_bases_name_both() {
    let r = run_fixture(&["build-span", "z2_bz2_module", "z3_disc3_module", "bz2_to_disc3"], &[]);
    assert_eq!(r.code, 2);
    let (a, b) = (
        io::parse(
            &std::fs::read_to_string(golden("z2_bz2_module.json")).unwrap(),
            &Budget::default(),
        )
        .unwrap(),
        io::parse(
            &std::fs::read_to_string(golden("z3_disc3_module.json")).unwrap(),
            &Budget::default(),
        )
        .unwrap(),
    );
    let (Value::Module(a), Value::Module(b)) = (a, b) else {
        panic!("kind")
    };
    assert!(r.stderr.contains(a.acting().base().name()), "{}", r.stderr);
    assert!(r.stderr.contains(b.acting().base().name()), "{}", r.stderr);
}

#[test]
fn stdin_and_out_files() {
    let text = std::fs::read_to_string(golden("z2_cocycle.json")).unwrap();
    let r = run(&["validate", "-"], &text);
    assert_eq!((r.code, r.stdout.as_str()), (0, "validate: ok\n  kind: monoidal\n"));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let out_s = out.to_str().unwrap();
    let emit = dir.path().join("center.json");
    let emit_s = emit.to_str().unwrap();
    let s3 = golden("s3_discrete.json");
    let r = run(
        &[
            "center",
            &s3,
            "--report",
            "structured",
            "--out",
            out_s,
            "--emit",
            emit_s,
        ],
        "",
    );
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let report = std::fs::read_to_string(&out).unwrap();
    assert!(matches!(
        io::parse(&report, &Budget::default()).unwrap(),
        Value::Report(_)
    ));
    let Value::Braiding(b) = io::parse(&std::fs::read_to_string(&emit).unwrap(), &Budget::default()).unwrap() else {
        panic!("center artifact is a braiding")
    };
    assert_eq!(b.monoidal().base().object_count(), 1);

    let failed = dir.path().join("failed.json");
    let sk = golden("sk_z2.json");
    let r = run(&["center", &sk, "--cap", "1", "--out", failed.to_str().unwrap()], "");
    assert_eq!(r.code, 2);
    assert!(!failed.exists());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"], "").code, 2);
    assert_eq!(run(&["build-span"], "").code, 2);
    assert_eq!(run(&["comma", "a", "b", "--orientation", "sideways"], "").code, 2);
    assert_eq!(run(&["--help"], "").code, 0);
}
