use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_inv3412"));
    for (k, _) in std::env::vars() {
        if k.starts_with("INV3412_") {
            cmd.env_remove(k);
        }
    }
    cmd.args(args).envs(env.iter().copied());
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_env(args, &[])
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let r = run(&all);
    assert_eq!(r.code, 0, "{}", r.stderr);
    serde_json::from_str(&r.stdout).unwrap()
}

fn one_line(shape: &Value) -> String {
    shape.as_array().unwrap().iter().map(|d| d.to_string()).collect()
}

fn shapes(v: &Value) -> Vec<String> {
    v["data"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| one_line(&s["shape"]))
        .collect()
}

#[test]
fn genfun_r1_text() {
    let r = run(&["genfun", "--r", "1"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("I_1(x) ="), "{}", r.stdout);
    assert!(r.stdout.contains("0, 0, 0, 0, 1, 5, 20, 70, 231"));
    assert!(r.stdout.contains("# content-sha256: "));
}

#[test]
fn genfun_r0_is_motzkin() {
    let v = json(&["genfun", "--r", "0", "--order", "12"]);
    let docs = v["data"]["results"].as_array().unwrap();
    let i0 = docs.iter().find(|d| d["kind"] == "I" && d["r"] == 0).unwrap();
    let series: Vec<&str> = i0["series"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap())
        .collect();
    assert_eq!(
        series,
        ["1", "1", "2", "4", "9", "21", "51", "127", "323", "835", "2188", "5798", "15511"]
    );
    assert_eq!(i0["order"], 12);
}

#[test]
fn genfun_paper_style() {
    let r = run(&["genfun", "--r", "2", "--style", "paper"]);
    assert_eq!(r.code, 0);
    assert!(r
        .stdout
        .contains("I_2(x) = F_2(x)/(2*x^2) + G_2(x)/(2*x^2)*sqrt(1 - 2*x - 3*x^2)^(-3)"));
    assert!(r.stdout.contains("(1 - x)*F_2(x) = 1 - 2*x"));
    assert!(r.stdout.contains("(1 + x^2)*P_1(x) = 1 - x + 2*x^3"));
    assert!(r.stdout.contains("P_0(x) = -1 + x"));
}

#[test]
fn shape_catalogs() {
    let v = json(&["shapes", "--r", "1"]);
    assert_eq!(shapes(&v), ["3412"]);
    let rec = &v["data"][0];
    assert_eq!(
        (rec["f"].as_u64(), rec["dd"].as_u64(), rec["d"].as_u64()),
        (Some(3), Some(1), Some(0))
    );
    assert_eq!(shapes(&json(&["shapes", "--r", "2"])), ["3412", "351624"]);
    let v = json(&["shapes", "--r", "3"]);
    let psi = v["data"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| one_line(&s["shape"]) == "35172846")
        .expect("psi^3 listed");
    assert_eq!((psi["c"].as_u64(), psi["s"].as_u64()), (Some(3), Some(8)));
}

#[test]
fn table_rows_and_csv() {
    let r = run(&["--format", "csv", "table", "--n", "5", "--r", "1"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.lines().any(|l| l == "1,0,0,0,0,1,5"), "{}", r.stdout);
    // provenance goes to stderr when writing CSV to stdout
    let meta: Value = serde_json::from_str(r.stderr.trim()).unwrap();
    assert!(meta["content_sha256"].as_str().unwrap().len() == 64);
}

#[test]
fn golden_tables() {
    assert_eq!(run(&["table", "--n", "12", "--r", "6", "--golden"]).code, 0);
    // three printed even cells are wrong; the diff must say so
    let r = run(&["table", "--n", "12", "--r", "6", "--parity", "--golden"]);
    assert_eq!(r.code, 1);
    for cell in ["321", "482", "2247", "2747"] {
        assert!(r.stdout.contains(cell), "{}", r.stdout);
    }
}

#[test]
fn verify_passes() {
    let r = run(&["verify", "--r", "1", "--n", "9"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    let v = json(&["verify", "--r", "1", "--n", "13"]);
    assert_eq!(v["data"]["passed"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bogus"]).code, 2);
    assert_eq!(run(&["table", "--n", "nine"]).code, 2);
    assert_eq!(run(&["--cap", "8", "table", "--n", "9"]).code, 3);
    assert_eq!(run(&["classify", "1324"]).code, 2);
    let r = run(&["genfun", "--r", "9"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("--force"));
}

#[test]
fn environment_and_precedence() {
    let env = run_env(&["--format", "json", "shapes"], &[("INV3412_R_MAX", "1")]);
    assert_eq!(shapes(&serde_json::from_str(&env.stdout).unwrap()), ["3412"]);
    let flag = run_env(&["--format", "json", "shapes", "--r", "2"], &[("INV3412_R_MAX", "1")]);
    assert_eq!(shapes(&serde_json::from_str(&flag.stdout).unwrap()), ["3412", "351624"]);
    let fmt = run_env(&["shapes", "--r", "1"], &[("INV3412_FORMAT", "json")]);
    assert!(serde_json::from_str::<Value>(&fmt.stdout).is_ok());
    assert_eq!(run_env(&["table", "--n", "9"], &[("INV3412_CAP", "8")]).code, 3);
}

#[test]
fn json_embeds_config_and_hash() {
    let v = json(&["table", "--n", "6", "--r", "2"]);
    assert_eq!(v["config"]["command"]["command"], "table");
    assert_eq!(v["config"]["command"]["n_max"], 6);
    assert_eq!(v["config"]["global"]["cap"], 14);
    assert_eq!(v["content_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn output_is_independent_of_threads() {
    let a = run(&[
        "--threads",
        "1",
        "--format",
        "json",
        "table",
        "--n",
        "11",
        "--r",
        "3",
        "--parity",
    ]);
    let b = run(&[
        "--threads",
        "2",
        "--format",
        "json",
        "table",
        "--n",
        "11",
        "--r",
        "3",
        "--parity",
    ]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file_and_sidecar() {
    let dir = std::env::temp_dir().join(format!("inv3412-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.csv");
    let r = run(&[
        "--format",
        "csv",
        "-o",
        path.to_str().unwrap(),
        "table",
        "--n",
        "4",
        "--r",
        "0",
    ]);
    assert_eq!(r.code, 0);
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("r,0,1,2,3,4"));
    let meta: Value = serde_json::from_str(&std::fs::read_to_string(dir.join("t.csv.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["config"]["command"]["n_max"], 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn classify_report() {
    let r = run(&["classify", "3 5 1 6 2 4", "--validate", "10"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("351624"));
}
