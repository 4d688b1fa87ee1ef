#![allow(dead_code)]

use std::process::Command;

use n2sc::dto::{
    classify_payload, invariant_payload, spectrum_payload, ClassifyPayload, Envelope, InvariantPayload,
    SpectrumPayload,
};
use n2sc_core::{classify, theta_from_subgroup, CurrentGroup, ExceptionalId, Level, RawLabel, Theta};
use serde::de::DeserializeOwned;

pub struct Run {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

impl Run {
    pub fn out(&self) -> String {
        String::from_utf8(self.stdout.clone()).unwrap()
    }

    pub fn err(&self) -> String {
        String::from_utf8(self.stderr.clone()).unwrap()
    }
}

pub fn n2sc(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_n2sc")).args(args).output().expect("binary runs");
    Run { code: out.status.code().expect("exited normally"), stdout: out.stdout, stderr: out.stderr }
}

pub fn json<P: DeserializeOwned>(args: &[&str]) -> Envelope<P> {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let run = n2sc(&full);
    assert_eq!(run.code, 0, "{:?}: {}", args, run.err());
    serde_json::from_slice(&run.stdout).expect("valid envelope")
}

/// (arguments, expected exit code)
pub const EXIT_MATRIX: &[(&[&str], i32)] = &[
    (&["spectrum", "0"], 0),
    (&["spectrum", "4"], 0),
    (&["--format", "json", "spectrum", "3"], 0),
    (&["fuse", "2", "1", "1", "1", "1"], 0),
    (&["fuse", "2", "1", "-1", "1", "1"], 0),
    (&["fuse", "0", "0", "0", "0", "0"], 0),
    (&["classify", "4"], 0),
    (&["--quiet", "classify", "10"], 0),
    (&["simple-currents", "3"], 0),
    (&["max-cyclic", "6"], 0),
    (&["invariant", "4", "--subgroup", "4,0"], 0),
    (&["invariant", "4", "--subgroup", "0,6"], 1),
    (&["invariant", "10", "--exceptional", "c"], 0),
    (&["unitarity", "1", "1/6", "-1/3"], 0),
    (&["unitarity", "1", "5", "17"], 0),
    (&["--help"], 0),
    (&["--version"], 0),
    (&["invariant", "4", "--subgroup", "0,2"], 1),
    (&["invariant", "4", "--subgroup", "4,6"], 1),
    (&[], 2),
    (&["spectrum"], 2),
    (&["spectrum", "-1"], 2),
    (&["spectrum", "x"], 2),
    (&["spectrum", "2000000"], 2),
    (&["fuse", "2", "1", "2", "1", "1"], 2),
    (&["fuse", "2", "3", "1", "1", "1"], 2),
    (&["classify", "0"], 2),
    (&["simple-currents", "0"], 2),
    (&["max-cyclic", "0"], 2),
    (&["invariant", "4"], 2),
    (&["invariant", "4", "--exceptional", "a"], 2),
    (&["invariant", "10", "--exceptional", "e"], 2),
    (&["invariant", "4", "--subgroup", "1,2"], 2),
    (&["invariant", "10", "--subgroup", "0,12", "--exceptional", "b"], 2),
    (&["unitarity", "1", "1/0", "0"], 2),
    (&["unitarity", "1", "half", "0"], 2),
    (&["--format", "xml", "spectrum", "1"], 2),
    (&["frobnicate"], 2),
];

pub fn exit_matrix_failures() -> Vec<String> {
    EXIT_MATRIX
        .iter()
        .filter_map(|(args, want)| {
            let got = n2sc(args).code;
            (got != *want).then(|| format!("{args:?}: expected exit {want}, got {got}"))
        })
        .collect()
}

pub fn determinism_failures() -> Vec<String> {
    let cases: &[&[&str]] = &[
        &["spectrum", "12"],
        &["--format", "json", "spectrum", "12"],
        &["--format", "json", "classify", "10"],
        &["classify", "28"],
        &["--format", "json", "simple-currents", "8"],
        &["--format", "json", "max-cyclic", "14"],
        &["--format", "json", "invariant", "28", "--exceptional", "d"],
        &["fuse", "10", "6", "0", "2", "0"],
    ];
    cases
        .iter()
        .filter_map(|args| {
            let a = n2sc(args);
            let b = n2sc(args);
            (a.stdout != b.stdout || a.stderr != b.stderr || a.code != b.code)
                .then(|| format!("{args:?} differs between runs"))
        })
        .collect()
}

fn level(n: u32) -> Level {
    Level::new(n).unwrap()
}

pub fn round_trip_failures() -> Vec<String> {
    let mut bad = Vec::new();
    for n in [0u32, 1, 2, 7, 10] {
        let s = n.to_string();
        let env: Envelope<SpectrumPayload> = json(&["spectrum", &s]);
        let want = Envelope::new(Some(n), "spectrum", spectrum_payload(level(n)), vec![]);
        if env != want {
            bad.push(format!("spectrum {n}"));
        }
    }
    for n in [1u32, 4, 6, 10, 12, 28] {
        let s = n.to_string();
        let env: Envelope<ClassifyPayload> = json(&["classify", &s]);
        let c = classify(level(n)).unwrap();
        if env.payload != classify_payload(&c) || env.level != Some(n) || env.command != "classify" {
            bad.push(format!("classify {n}"));
        }
    }
    let mut invariants: Vec<(Vec<&str>, u32, Theta)> = Vec::new();
    for id in ExceptionalId::ALL {
        let letter = id.letter().to_string();
        let n = id.level();
        invariants.push((
            vec![
                "invariant",
                Box::leak(n.to_string().into_boxed_str()),
                "--exceptional",
                Box::leak(letter.into_boxed_str()),
            ],
            n,
            Theta::exceptional(id),
        ));
    }
    let h = CurrentGroup::generated_by(level(6), &[RawLabel { l: 6, m: 4 }]).unwrap();
    invariants.push((
        vec!["invariant", "6", "--subgroup", "6,4"],
        6,
        theta_from_subgroup(level(6), &h).unwrap(),
    ));
    for (args, n, theta) in invariants {
        let env: Envelope<InvariantPayload> = json(&args);
        let want = Envelope::new(Some(n), "invariant", invariant_payload(level(n), &theta), vec![]);
        if env != want {
            bad.push(args.join(" "));
        }
    }
    bad
}
