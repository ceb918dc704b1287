use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use detcx::cohomology::{predicted_support, CohomologyReport, EulerReport};
use detcx::complex::ComplexDescription;
use detcx::lattice::Lattice;
use detcx::region::RegionDiagram;

fn detcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detcx"))
        .args(args)
        .env_remove("DETCX_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = detcx(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

const FIGURES: [i64; 6] = [3, 1, 0, -1, -2, -6];

#[test]
fn figure_goldens_are_stable() {
    for i in FIGURES {
        let flag = format!("--i={i}");
        let text = stdout(&[
            "region-diagram",
            "--f",
            "12",
            "--g",
            "6",
            &flag,
            "--output",
            "text",
        ]);
        assert_eq!(text, golden(&format!("region_f12_g6_i{i}.txt")), "i={i}");
        assert_eq!(
            text,
            stdout(&[
                "region-diagram",
                "--f",
                "12",
                "--g",
                "6",
                &flag,
                "--output",
                "text"
            ])
        );
        let js = stdout(&["region-diagram", "--f", "12", "--g", "6", &flag]);
        assert_eq!(js, golden(&format!("region_f12_g6_i{i}.json")), "i={i}");
    }
    let text = stdout(&[
        "region-diagram",
        "--f",
        "12",
        "--g",
        "6",
        "--i",
        "6",
        "--k",
        "3",
        "--output",
        "text",
    ]);
    assert_eq!(text, golden("region_f12_g6_i6_k3.txt"));
}

#[test]
fn diagram_intersections_come_from_the_engine() {
    for i in FIGURES {
        let flag = format!("--i={i}");
        let d: RegionDiagram =
            serde_json::from_value(json(&["region-diagram", "--f", "12", "--g", "6", &flag]))
                .unwrap();
        let engine = predicted_support(i, 12, 6).unwrap().grid_points(6);
        assert_eq!(
            serde_json::to_string(&d.intersections).unwrap(),
            serde_json::to_string(&engine).unwrap()
        );
    }
    let d = json(&["region-diagram", "--f", "12", "--g", "6", "--i", "3"]);
    assert_eq!(
        d["intersections"],
        serde_json::json!([{ "n": 0, "p": 0, "q": 0 }])
    );
    let d = json(&["region-diagram", "--f", "12", "--g", "6", "--i=-2"]);
    assert_eq!(d["intersections"].as_array().unwrap().len(), 2);
    let d = json(&["region-diagram", "--f", "12", "--g", "6", "--i", "0"]);
    assert_eq!(
        d["splice_arrow"],
        serde_json::json!({ "from": [-6, 5], "to": [0, 0] })
    );
}

#[test]
fn cohom_example() {
    let v = json(&[
        "cohom", "--f", "12", "--g", "6", "--i", "-2", "--q", "1", "--maxdeg", "6",
    ]);
    assert_eq!(v["lowest_degree"], 4);
    assert_eq!(v["required_maxdeg"], 4);
    let r: CohomologyReport = serde_json::from_value(v.clone()).unwrap();
    assert!(!r.is_zero_up_to_maxdeg());
    assert_eq!(serde_json::to_value(&r).unwrap(), v);
}

#[test]
fn euler_example() {
    let v = json(&[
        "euler-check",
        "--f",
        "2",
        "--g",
        "2",
        "--i",
        "-2",
        "--maxdeg",
        "10",
    ]);
    assert_eq!(v["balanced"], true);
    let r: EulerReport = serde_json::from_value(v).unwrap();
    let coeffs: Vec<String> = (0..=10i64)
        .map(|d| ((d + 1) * (1 - d)).to_string())
        .collect();
    assert_eq!(
        serde_json::to_value(&r.complex_side).unwrap(),
        serde_json::json!(coeffs)
    );
    let text = stdout(&[
        "euler-check",
        "--f",
        "2",
        "--g",
        "2",
        "--i",
        "-2",
        "--output",
        "text",
    ]);
    assert!(text.starts_with("balanced"));
}

#[test]
fn reports_round_trip() {
    let v = json(&["complex", "--f", "3", "--g", "2", "--i", "0"]);
    let c: ComplexDescription = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&c).unwrap(), v);
    let v = json(&[
        "lattice", "--f", "4", "--g", "4", "--i", "-3", "--q", "1", "--maxdeg", "7",
    ]);
    let l: Lattice = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&l).unwrap(), v);
    let v = json(&["d-ik", "--f", "12", "--g", "6", "--i", "6", "--k", "3"]);
    let c: ComplexDescription = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(serde_json::to_value(&c).unwrap(), v);
}

#[test]
fn keys_are_sorted_and_big_integers_are_strings() {
    let text = stdout(&["complex", "--f", "12", "--g", "6", "--i", "-6"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    let term = &v["terms"][0];
    let keys: Vec<&String> = term.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(term["rank"].is_string());
}

#[test]
fn every_command_answers() {
    let cases: [&[&str]; 11] = [
        &["bbw", "--i", "-3", "--g", "3", "--lam", "2,0", "--tangent"],
        &["pieri", "--lam", "2,1", "--k", "2", "--n", "3"],
        &[
            "cauchy", "--f", "3", "--g", "2", "--d", "3", "--kind", "ext",
        ],
        &["complex", "--f", "4", "--g", "2", "--i", "1", "--duality"],
        &["d-ik", "--f", "4", "--g", "3", "--i", "0", "--k", "1"],
        &[
            "cohom", "--f", "3", "--g", "3", "--i", "-3", "--q", "0", "--method", "strrep",
        ],
        &["euler-check", "--f", "3", "--g", "2", "--i", "0"],
        &[
            "lattice", "--f", "3", "--g", "3", "--kind", "ideal", "--lam", "2,2", "--maxdeg", "6",
        ],
        &["projdim", "--f", "12", "--g", "6", "--i", "-2", "--q", "0"],
        &[
            "lift-check",
            "--g",
            "3",
            "--i",
            "0",
            "--k",
            "1",
            "--maxdeg",
            "6",
        ],
        &[
            "region-diagram",
            "--f",
            "12",
            "--g",
            "6",
            "--i",
            "-2",
            "--output",
            "svg",
        ],
    ];
    for args in cases {
        let out = detcx(args);
        assert!(
            out.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stdout.is_empty());
    }
    let v = json(&["projdim", "--f", "12", "--g", "6", "--i", "-2", "--q", "0"]);
    assert_eq!(v["lower_bound"], 7);
    assert_eq!(
        v["witnesses"][7]["witness"]["partition"],
        serde_json::json!([1, 1, 1, 1, 1, 1, 1])
    );
    let v = json(&[
        "lift-check",
        "--g",
        "3",
        "--i",
        "2",
        "--k",
        "1",
        "--maxdeg",
        "6",
    ]);
    assert_eq!(v["obstructed"], false);
}

#[test]
fn usage_errors_exit_with_two() {
    let bad: [&[&str]; 6] = [
        &["cohom", "--f", "2", "--g", "3", "--i", "-1", "--q", "0"],
        &["cohom", "--f", "6", "--g", "3", "--i", "-1", "--q", "3"],
        &["d-ik", "--f", "6", "--g", "3", "--i", "0", "--k", "3"],
        &[
            "complex", "--f", "6", "--g", "3", "--i", "0", "--output", "svg",
        ],
        &["nonsense"],
        &[
            "cohom", "--f", "6", "--g", "3", "--i", "-1", "--q", "0", "--maxdeg", "1000",
        ],
    ];
    for args in bad {
        let out = detcx(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(err["error"]["kind"], "usage");
        assert_eq!(err["error"]["exit_code"], 2);
    }
    let out = detcx(&["cohom", "--f", "6", "--g", "3", "--i", "-1", "--q", "3"]);
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"]["message"]
        .as_str()
        .unwrap()
        .contains("q must lie in [0, g-1]"));
}

#[test]
fn output_directory() {
    let dir = std::env::temp_dir().join(format!("detcx-out-{}", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_detcx"))
        .args([
            "region-diagram",
            "--f",
            "12",
            "--g",
            "6",
            "--i",
            "3",
            "--output",
            "text",
        ])
        .env("DETCX_OUTPUT_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let written = std::fs::read_to_string(dir.join("region-diagram.txt")).unwrap();
    assert_eq!(written.as_bytes(), &out.stdout[..]);
    std::fs::remove_dir_all(dir).unwrap();
}
