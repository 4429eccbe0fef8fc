use symai::surveyor::{self, survey, write_csv, write_json, Filter};
use symai::symfn::is_trivial_balanced;

fn render(n: usize, filter: Filter) -> (Vec<u8>, Vec<u8>) {
    let records = survey(n, filter).unwrap();
    let mut json = Vec::new();
    write_json(&mut json, &records).unwrap();
    let mut csv = Vec::new();
    write_csv(&mut csv, &records).unwrap();
    (json, csv)
}

#[test]
fn output_is_identical_across_thread_counts() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| render(8, Filter::All))
    };
    let single = run(1);
    assert_eq!(single, run(4));
    assert_eq!(single, run(4));
}

#[test]
fn verification_report_json_fields() {
    let report = surveyor::verify_theorems(7).unwrap();
    let mut buf = Vec::new();
    write_json(&mut buf, &report).unwrap();
    let value: serde_json::Value = serde_json::from_slice(&buf).unwrap();
    for key in [
        "n",
        "total",
        "max_ai_functions",
        "trivial_balanced_max_ai",
        "theorem2_holds",
        "lemma2_holds",
        "theorem3_holds",
    ] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    assert_eq!(value["total"], 256);
    assert_eq!(
        value["trivial_balanced_max_ai"],
        serde_json::json!(["11110000", "00001111"])
    );
    assert_eq!(value["theorem2_holds"], true);
}

#[test]
fn verify_nine() {
    let report = surveyor::verify_theorems(9).unwrap();
    assert_eq!(report.total, 1024);
    assert!(report.all_hold());
    assert!(report.theorem1_witnesses_hold);
}

#[test]
fn every_maximal_ai_function_on_odd_n_is_balanced() {
    for n in [3usize, 5, 7, 9] {
        for r in survey(n, Filter::All).unwrap() {
            if r.has_max_ai() {
                assert!(r.balanced, "n={n} {}", r.value_vector);
            }
        }
    }
}

/// Informational: balanced symmetric functions on 13 variables that are
/// not trivially balanced, with their AI. Nothing is asserted about the AI.
#[test]
fn thirteen_variable_balanced_exploration() {
    let records = survey(13, Filter::Balanced).unwrap();
    let nontrivial: Vec<_> = records.iter().filter(|r| !r.trivial_balanced).collect();
    for r in &nontrivial {
        println!("n=13 non-trivially balanced {} ai={}", r.value_vector, r.ai);
        r.check_invariants().unwrap();
    }
    assert!(records.iter().filter(|r| r.trivial_balanced).count() == 128);
    for r in &nontrivial {
        assert!(!is_trivial_balanced(&r.value_vector.parse().unwrap()));
    }
}
