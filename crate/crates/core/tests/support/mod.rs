#![allow(dead_code)]

use std::path::PathBuf;

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn golden(name: &str) -> String {
    golden_dir().join(name).to_string_lossy().into_owned()
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line in-process; `stdin` feeds any `-` input.
pub fn run(args: &[&str], stdin: &str) -> Run {
    let mut argv = vec!["spanforge"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = spanforge::cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).expect("utf-8 stdout"),
        stderr: String::from_utf8(err).expect("utf-8 stderr"),
    }
}

/// `(subcommand args, expected exit)`; golden names are resolved to paths.
pub fn fixtures() -> Vec<(Vec<&'static str>, i32)> {
    vec![
        (vec!["validate", "z2_cocycle"], 0),
        (vec!["validate", "broken_monoidal"], 1),
        (vec!["validate", "malformed_dangling"], 2),
        (vec!["center", "s3_discrete"], 0),
        (vec!["center", "broken_monoidal"], 1),
        (vec!["center", "sk_z2", "--cap", "1"], 2),
        (vec!["mueger", "z3_bichar"], 0),
        (vec!["mueger", "broken_braiding"], 1),
        (vec!["mueger", "sk_z2"], 2),
        (vec!["centralizer", "sk_z2_id"], 0),
        (vec!["centralizer", "sk_z2_id", "z2_bichar"], 0),
        (vec!["centralizer", "broken_mon_functor"], 1),
        (vec!["centralizer", "missing_file"], 2),
        (vec!["intertwiner", "z2_id", "z2_id"], 0),
        (vec!["intertwiner", "z2_id", "broken_mon_functor"], 1),
        (vec!["intertwiner", "z2_id", "z3_id"], 2),
        (vec!["fiber-product", "chain1_to_pt", "disc2_to_pt"], 0),
        (vec!["fiber-product", "broken_functor", "disc2_to_pt"], 1),
        (vec!["fiber-product", "chain1_to_pt", "bz2_id"], 2),
        (
            vec!["comma", "chain1_to_pt", "disc2_to_pt", "--orientation", "reverse"],
            0,
        ),
        (vec!["comma", "broken_functor", "bz2_id"], 1),
        (vec!["comma", "chain1_to_pt", "bz2_id"], 2),
        (vec!["end", "chain1"], 0),
        (vec!["end", "broken_category"], 1),
        (vec!["end", "chain1", "--cap", "1"], 2),
        (vec!["build-span", "z2_character"], 0),
        (vec!["build-span", "z2_bz2_module", "z2_bz2_module", "bz2_id"], 0),
        (vec!["build-span", "broken_module_functor"], 1),
        (
            vec!["build-span", "z2_bz2_module", "z3_disc3_module", "bz2_to_disc3"],
            2,
        ),
        (vec!["build-2span", "const0_to_id"], 0),
        (vec!["build-2span", "const0_to_id", "--orientation", "reverse"], 0),
        (vec!["build-2span", "broken_module_nattrans"], 1),
        (vec!["build-2span", "z2_character"], 2),
        (vec!["laxator", "chain_a", "chain_b"], 0),
        (vec!["laxator", "broken_module_functor", "z2_character"], 1),
        (vec!["laxator", "chain_a", "z2_swap"], 2),
        (vec!["laxator-coherence", "chain_a", "chain_b", "chain_c"], 0),
        (vec!["laxator-coherence", "chain_a", "chain_b", "chain_c", "chain_d"], 0),
        (
            vec![
                "laxator-coherence",
                "broken_module_functor",
                "z2_character",
                "z2_character",
            ],
            1,
        ),
        (vec!["laxator-coherence", "chain_a", "chain_b", "z2_swap"], 2),
        (vec!["module-structures", "z2_bz2_module", "z2_bz2_module", "bz2_id"], 0),
        (vec!["module-structures", "broken_module", "z2_bz2_module", "bz2_id"], 1),
        (
            vec!["module-structures", "z2_bz2_module", "z3_disc3_module", "bz2_to_disc3"],
            2,
        ),
        (vec!["central-check", "sk_z2_id", "z2_bichar", "z2_bichar"], 0),
        (
            vec![
                "central-check",
                "sk_z2_id",
                "z2_bichar",
                "z2_bichar",
                "--center",
                "mueger",
            ],
            0,
        ),
        (vec!["central-check", "sk_z2_id", "broken_braiding", "z2_bichar"], 1),
        (vec!["central-check", "sk_z2_id", "sk_z2", "z2_bichar"], 2),
        (vec!["normalize-check", "z2_bz2_module"], 0),
        (vec!["normalize-check", "broken_module"], 1),
        (vec!["normalize-check", "z2_cocycle"], 2),
    ]
}

fn resolve(args: &[&'static str]) -> Vec<String> {
    let mut out = Vec::new();
    let mut flag_value = false;
    for a in args {
        if flag_value || a.starts_with("--") || out.is_empty() {
            flag_value = a.starts_with("--");
            out.push(a.to_string());
        } else {
            out.push(golden(&format!("{a}.json")));
        }
    }
    out
}

pub fn run_fixture(args: &[&'static str], extra: &[&str]) -> Run {
    let mut argv = resolve(args);
    argv.extend(extra.iter().map(|s| s.to_string()));
    let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
    run(&argv, "")
}
