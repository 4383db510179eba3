//! Golden-file checks shared by the CLI tests and the acceptance suite.

use std::path::{Path, PathBuf};

use linfty_core::gallery;
use linfty_cwl::document::{export, parse, same_objects, to_json};
use linfty_cwl::run::{run, RunOptions};

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// `skeletal_string[level=1]` becomes `skeletal_string-level-1`.
pub fn file_stem(name: &str) -> String {
    name.chars()
        .filter(|&c| c != ']')
        .map(|c| match c {
            '[' | '=' => '-',
            c if c.is_ascii_alphanumeric() || c == '_' || c == '-' => c,
            _ => '_',
        })
        .collect()
}

/// Set `UPDATE_GOLDEN=1` to rewrite the golden files instead of comparing.
#[allow(dead_code)]
pub fn updating() -> bool {
    std::env::var("UPDATE_GOLDEN").is_ok_and(|v| v == "1")
}

fn compare(path: &Path, actual: &str, update: bool, problems: &mut Vec<String>) {
    if update {
        if let Err(e) = std::fs::write(path, actual) {
            problems.push(format!("{}: {e}", path.display()));
        }
        return;
    }
    match std::fs::read_to_string(path) {
        Ok(expected) if expected == actual => {}
        Ok(_) => problems.push(format!("{} differs from the current output", path.display())),
        Err(e) => problems.push(format!("{}: {e}", path.display())),
    }
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool").install(f)
}

/// Round trip, determinism and golden comparison for one gallery instance; returns the problems found.
pub fn check_instance(name: &str, update: bool) -> Vec<String> {
    let mut problems = Vec::new();
    let instance = match gallery::by_name(name) {
        Ok(g) => g,
        Err(e) => return vec![format!("{name}: {e}")],
    };
    let text = to_json(&export(&instance));
    let doc = match parse(&text) {
        Ok(d) => d,
        Err(e) => return vec![format!("{name}: exported document does not parse: {e}")],
    };
    if !same_objects(&doc.objects, &instance) {
        problems.push(format!("{name}: parse(export(x)) differs from x"));
    }
    if to_json(&export(&doc.objects)) != text {
        problems.push(format!("{name}: re-export is not byte-identical"));
    }
    let opts = RunOptions::default();
    let serial = in_pool(1, || run(&doc, &opts));
    let parallel = in_pool(4, || run(&doc, &opts));
    let (report_text, report_json) = (serial.to_text(), serial.to_json());
    if parallel.to_text() != report_text || parallel.to_json() != report_json {
        problems.push(format!("{name}: report depends on the thread count"));
    }
    if serial.exit_code() != 0 {
        problems.push(format!("{name}: report does not pass:\n{report_text}"));
    }
    let stem = file_stem(name);
    let dir = golden_dir();
    compare(&dir.join(format!("{stem}.json")), &text, update, &mut problems);
    compare(&dir.join(format!("{stem}.report.txt")), &report_text, update, &mut problems);
    compare(&dir.join(format!("{stem}.report.json")), &report_json, update, &mut problems);
    problems
}
