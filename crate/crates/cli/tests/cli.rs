use std::process::{Command, Output};

use mahonian::distribution::ALL_COLUMNS;
use mahonian::record::{render_tsv, OutputRecord};
use mahonian::{code, foata_j, phi_on_class, Permutation, VincularPattern, Word};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn mahonian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mahonian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn stats_rows() {
    let o = mahonian(&["stats", "2112"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "word\tAdj\tdes\tides\tF\tIMAJ\tMAJ\tSTAT\tD\tId\tSh"
    );
    assert_eq!(
        lines.next().unwrap(),
        "2112\t0\t1\t1\t2\t2\t1\t2\t{1}\t{2}\t{1,3}"
    );

    let text = stdout(&mahonian(&["stats", "1"]));
    assert_eq!(
        text.lines().nth(1).unwrap(),
        "1\t1\t0\t0\t1\t0\t0\t0\t{}\t{}\t{}"
    );

    let text = stdout(&mahonian(&["stats", "434421651", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v[0]["des"], 5);
    assert_eq!(v[0]["Id"], "{2,3,4,8}");
    assert_eq!(v[0]["F"], 4);
    assert_eq!(v[0]["MAJ"], 25);
    assert_eq!(v[0]["STAT"], 21);
}

#[test]
fn large_letters_need_separators() {
    let o = mahonian(&["stats", "10,2,10,3"]);
    assert!(o.status.success());
    assert!(stdout(&o)
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("10,2,10,3\t"));
    assert_eq!(mahonian(&["stats", "1023"]).status.code(), Some(2));
}

#[test]
fn rsk_rendering() {
    let o = mahonian(&["rsk", "4312"]);
    assert_eq!(stdout(&o), "P:\n1 2\n3\n4\nQ:\n1 4\n2\n3\n");
    assert_eq!(mahonian(&["rsk", "4412"]).status.code(), Some(2));
}

#[test]
fn table_is_byte_stable() {
    let a = mahonian(&["table", "1122"]);
    let b = mahonian(&["table", "2121"]);
    assert_eq!(a.stdout, b.stdout);
    let json = stdout(&mahonian(&["table", "12", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[0]["word"], "12");
    assert_eq!(v[1]["word"], "21");
    let custom = stdout(&mahonian(&[
        "table",
        "1122",
        "--schema",
        "des,Id-set,F,maj,stat",
    ]));
    assert_eq!(
        custom.lines().next().unwrap(),
        "word\tdes\tId\tF\tMAJ\tSTAT"
    );
    assert_eq!(custom.lines().nth(2).unwrap(), "1212\t1\t{2}\t1\t2\t3");
}

#[test]
fn verify_outputs_and_exit_codes() {
    let o = mahonian(&["verify", "thm-1.3", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n=6: 720 instances"));

    let o = mahonian(&["verify", "cor-1.4", "--word", "1122"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("total: 6 instances"));

    let o = mahonian(&["verify", "all", "--n", "5", "--alphabet", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches(": PASS").count(), 10);

    let o = mahonian(&["verify", "lemma-3.4", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["passed"], true);
    assert_eq!(v[0]["instances"], 9);

    assert_eq!(
        mahonian(&["verify", "thm-1.3", "--n", "12"]).status.code(),
        Some(2)
    );
    assert_eq!(mahonian(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(
        mahonian(&["verify", "thm-1.3", "--n", "x"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_is_identical_across_job_counts() {
    let a = mahonian(&["verify", "all", "--n", "5", "--jobs", "1"]);
    let b = mahonian(&["verify", "all", "--n", "5", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

fn random_word(rng: &mut StdRng) -> Word {
    let n = rng.random_range(1..=8);
    let m = rng.random_range(1..=5);
    Word::new((0..n).map(|_| rng.random_range(1..=m)).collect()).unwrap()
}

#[test]
fn cli_output_matches_library_on_random_inputs() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let w = random_word(&mut rng);
        let text = w.to_string();

        let record = OutputRecord::new(w.clone(), &ALL_COLUMNS).unwrap();
        assert_eq!(
            stdout(&mahonian(&["stats", &text])),
            render_tsv(&[record], &ALL_COLUMNS)
        );

        let phi = phi_on_class(&w).unwrap();
        assert_eq!(
            stdout(&mahonian(&["map", "phi", &text])),
            format!("{phi}\n")
        );
        assert_eq!(
            stdout(&mahonian(&["map", "code", &text])),
            format!("{}\n", code(&w).unwrap())
        );

        let mut letters: Vec<u32> = (1..=w.len() as u32).collect();
        letters.shuffle(&mut rng);
        let p = Permutation::new(letters).unwrap();
        assert_eq!(
            stdout(&mahonian(&["map", "j", &p.to_string()])),
            format!("{}\n", foata_j(&p).unwrap())
        );

        let pattern: VincularPattern = ["21", "1-32", "21-2", "3-1-2"][rng.random_range(0..4)]
            .parse()
            .unwrap();
        assert_eq!(
            stdout(&mahonian(&["pattern", &pattern.to_string(), &text])),
            format!("{}\n", pattern.count_in(&w))
        );
    }
}
