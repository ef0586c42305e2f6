use std::fs;
use std::process::{Command, Output};

use namematch::cli::CompareReport;

fn namematch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_namematch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ratio_line(o: &Output) -> String {
    stdout(o)
        .lines()
        .find(|l| l.starts_with("ratio:"))
        .unwrap_or_default()
        .to_string()
}

#[test]
fn compare_text() {
    let o = namematch(&[
        "compare",
        "FirstLightAFire",
        "LightTheFireFirst",
        "--method",
        "ordered-words",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(ratio_line(&o), "ratio: 0.400");
    assert!(stdout(&o).contains("words1: first light a fire"));
    let o = namematch(&[
        "compare",
        "MultiplyDigitExponent",
        "DigitsPowerMultiplying",
        "--method",
        "ordered-semantic",
    ]);
    let r: f64 = ratio_line(&o)["ratio: ".len()..].parse().unwrap();
    assert!((r - 0.519).abs() <= 0.005, "{r}");
}

#[test]
fn compare_defaults_to_ordered_words() {
    let o = namematch(&[
        "compare",
        "FirstLightAFire",
        "LightTheFireFirst",
        "--ignore-stop-words",
    ]);
    assert_eq!(ratio_line(&o), "ratio: 0.625");
}

#[test]
fn compare_json_round_trips() {
    let o = namematch(&[
        "compare", "x", "x", "--method", "ordered", "--output", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: CompareReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report.ratio, 1.0);
    assert_eq!(report.method, "ordered");

    let cases: &[&[&str]] = &[
        &["compare", "xaby", "abxy", "--method", "unedit"],
        &[
            "compare",
            "MultiplyDigitExponent",
            "DigitsPowerMultiplying",
            "--method",
            "unordered-semantic",
        ],
        &[
            "compare",
            "FirstLightAFire",
            "LightTheFireFirst",
            "--method",
            "unordered",
            "--continuity-heavy-weight",
        ],
        &[
            "compare",
            "multiword_name",
            "multiple_words_name",
            "--min-word-match-degree",
            "0.5",
        ],
        &[
            "compare",
            "first_light_a_fire",
            "light_the_fire",
            "--ignore-stop-words",
            "--method",
            "unordered-words",
        ],
    ];
    for args in cases {
        let mut args = args.to_vec();
        args.extend(["--output", "json"]);
        let o = namematch(&args);
        let report: CompareReport = serde_json::from_slice(&o.stdout).unwrap();
        let blocks = report.to_blocks().unwrap();
        assert_eq!(blocks.rescore().unwrap(), report.ratio, "{args:?}");
        let value: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        for key in [
            "name1",
            "name2",
            "method",
            "params",
            "normalized",
            "words",
            "matches",
            "ratio",
        ] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
        for m in value["matches"].as_array().unwrap() {
            for key in ["pos1", "pos2", "length", "letters", "degree"] {
                assert!(m.get(key).is_some());
            }
        }
    }
}

#[test]
fn compare_baseline() {
    let o = namematch(&[
        "compare",
        "FirstLightAFire",
        "LightTheFireFirst",
        "--method",
        "gestalt",
    ]);
    assert!(stdout(&o).contains("score: 0.312"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        namematch(&["compare", "a", "b", "--method", "fastest"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(namematch(&["compare", "a"]).status.code(), Some(2));
    assert_eq!(
        namematch(&["compare", "a", "b", "--min-len", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        namematch(&["compare", "a", "b", "--min-word-match-degree", "1.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        namematch(&["compare", "a", "b", "--numbers", "drop"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(namematch(&["split", ""]).status.code(), Some(2));
    assert_eq!(namematch(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn runtime_errors_exit_1() {
    let o = namematch(&["compare", "__", "abc", "--method", "ordered-words"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    let o = namematch(&["compare", "a", "b", "--stop-words", "/nonexistent/stop.txt"]);
    assert_eq!(o.status.code(), Some(1));
    let o = namematch(&[
        "compare",
        "a",
        "b",
        "--method",
        "ordered-semantic",
        "--thesaurus",
        "/nonexistent.jsonl",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn split_words() {
    let o = namematch(&["split", "FileMenu_saveAsOption"]);
    assert_eq!(stdout(&o).lines().count(), 5);
    assert_eq!(stdout(&namematch(&["split", "USAToday"])), "usa\ntoday\n");
    assert_eq!(
        stdout(&namematch(&["split", "save2disk", "--numbers", "ignore"])),
        "save\ndisk\n"
    );
    assert_eq!(
        stdout(&namematch(&["split", "save2disk", "--numbers", "leave"])),
        "save2disk\n"
    );
    assert_eq!(
        stdout(&namematch(&[
            "split",
            "a-b",
            "--separators",
            "-",
            "--output",
            "json"
        ])),
        "[\"a\",\"b\"]\n"
    );
    assert_eq!(
        stdout(&namematch(&[
            "split",
            "CamelCase",
            "--no-camel-case",
            "--case-sensitive"
        ])),
        "CamelCase\n"
    );
}

#[test]
fn custom_stop_words() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("stop.txt");
    fs::write(&path, "light\n").unwrap();
    let p = path.to_str().unwrap();
    let o = namematch(&[
        "compare",
        "light_fire",
        "fire_light",
        "--ignore-stop-words",
        "--stop-words",
        p,
    ]);
    assert_eq!(ratio_line(&o), "ratio: 1.000");
}

#[test]
fn custom_thesaurus() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.jsonl");
    fs::write(&path, "{\"word\": \"alpha\", \"synonyms\": [\"omega\"]}\n").unwrap();
    let p = path.to_str().unwrap();
    let o = namematch(&[
        "compare",
        "alpha",
        "omega",
        "--method",
        "ordered-semantic",
        "--thesaurus",
        p,
    ]);
    assert_eq!(ratio_line(&o), "ratio: 0.667");
}

#[test]
fn batch_scores_every_row() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pairs.csv");
    let output = dir.path().join("scores.csv");
    fs::write(
        &input,
        "name1,name2\nfirstlightafire,lightthefirefirst\nx,x\n,abc\n",
    )
    .unwrap();
    let run = || {
        namematch(&[
            "batch",
            "--input",
            input.to_str().unwrap(),
            "--methods",
            "ordered,unordered",
            "--output",
            output.to_str().unwrap(),
        ])
    };
    assert_eq!(run().status.code(), Some(0));
    let text = fs::read_to_string(&output).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "name1,name2,ordered,unordered,error");
    assert_eq!(lines[1], "firstlightafire,lightthefirefirst,0.557,0.867,");
    assert_eq!(lines[2], "x,x,1.000,1.000,");
    assert!(lines[3].starts_with(",abc,,,"), "{}", lines[3]);
    assert!(lines[3].len() > ",abc,,,".len());
    assert_eq!(lines.len(), 4);

    run();
    assert_eq!(fs::read_to_string(&output).unwrap(), text);
}

#[test]
fn batch_tab_and_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pairs.tsv");
    fs::write(
        &input,
        "name1\tname2\nmultiword_name\tmultiple_words_name\n",
    )
    .unwrap();
    let o = namematch(&[
        "batch",
        "--tab",
        "--input",
        input.to_str().unwrap(),
        "--methods",
        "ordered-words,gestalt,levenshtein",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "name1\tname2\tordered-words\tgestalt\tlevenshtein\terror\nmultiword_name\tmultiple_words_name\t0.286\t0.867\t4.000\t\n"
    );
}

#[test]
fn batch_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.csv");
    fs::write(&input, "left,right\na,b\n").unwrap();
    let o = namematch(&["batch", "--input", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = namematch(&["batch", "--input", "/nonexistent.csv"]);
    assert_eq!(o.status.code(), Some(1));
    let o = namematch(&[
        "batch",
        "--input",
        input.to_str().unwrap(),
        "--methods",
        "ordered,bogus",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
