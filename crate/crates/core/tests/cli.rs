use alv::classify::Verdict;
use alv::cli::{exit_code, run, ReportDocument};

fn alv(args: &str) -> (i32, String, String) {
    run(std::iter::once("alv").chain(args.split_whitespace()))
}

#[test]
fn main_theorem_json_is_deterministic_and_round_trips() {
    let (code, first, _) = alv("main-theorem --format json");
    assert_eq!(code, 0);
    let (_, second, _) = alv("main-theorem --format json");
    assert_eq!(first, second);
    let doc: ReportDocument = serde_json::from_str(&first).unwrap();
    assert_eq!(doc.summary, Verdict::Confirmed);
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", first);
    let last = doc.cases.last().unwrap();
    assert_eq!(last.values["extremal_types"].as_array().unwrap().len(), 7);
}

#[test]
fn exit_status_follows_summary() {
    assert_eq!(alv("lattice-exclude --type D10+A9").0, 0);
    // a survivor is not excluded
    let (code, out, _) = alv("lattice-exclude --type D16+A3 --format json");
    let doc: ReportDocument = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.summary, Verdict::Refuted);
    assert_eq!(code, exit_code(doc.summary));
    assert_eq!(code, 1);
}

#[test]
fn labelings_print_the_catalog_row() {
    let (code, out, _) = alv("labelings --order 3 --type A4");
    assert_eq!(code, 0);
    assert!(out.contains("(2, 1)"), "{out}");
}

#[test]
fn bad_input_is_a_usage_error() {
    for args in ["labelings --order 5 --type A4", "basis --type X7", "enumerate --index 4", "frobnicate", "verify-config --case 8"] {
        let (code, out, err) = alv(args);
        assert_eq!(code, 2, "{args}");
        assert!(out.is_empty() && !err.is_empty(), "{args}");
    }
    let (code, _, err) = alv("basis --type D10+A9");
    assert_eq!(code, 2);
    assert!(err.contains("not one of the surviving"));
}

#[test]
fn text_and_json_agree_on_verdicts() {
    for sub in ["indices", "lefschetz", "enumerate --index 2", "enumerate --index 3", "exclude --index 4", "exclude --index 6", "verify-config --case 7"] {
        let (c1, text, _) = alv(sub);
        let (c2, json, _) = alv(&format!("{sub} --format json"));
        assert_eq!(c1, 0, "{sub}");
        assert_eq!(c1, c2);
        assert!(text.ends_with("summary: confirmed\n"));
        let doc: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(doc.cases.len(), 1);
    }
}
