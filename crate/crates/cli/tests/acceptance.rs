use std::process::Command;

use trilie::suite::{run_suite, DEFAULT_SEED};

fn verify_paper_json() -> (Vec<u8>, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_trilie"))
        .args(["verify-paper", "--format", "json"])
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code())
}

fn main() {
    let items = run_suite(DEFAULT_SEED);
    assert_eq!(items.len(), 10);
    let mut lines = Vec::new();
    for item in &items {
        let mut line = format!("{:>2} {} {}", item.number, if item.report.passed { "PASS" } else { "FAIL" }, item.name);
        if let Some(w) = &item.report.witness {
            line.push_str(&format!("  witness {:?} residual {}", w.indices, w.residual));
        }
        lines.push((item.report.passed, line));
    }

    let (first, code1) = verify_paper_json();
    let (second, code2) = verify_paper_json();
    let parsed: serde_json::Value = serde_json::from_slice(&first).expect("verify-paper emits JSON");
    let deterministic = !first.is_empty()
        && first == second
        && code1 == Some(0)
        && code2 == Some(0)
        && parsed.as_array().map(Vec::len) == Some(10);
    lines.push((deterministic, format!("11 {} cli_determinism", if deterministic { "PASS" } else { "FAIL" })));

    for (_, line) in &lines {
        println!("{line}");
    }
    let failed = lines.iter().filter(|(ok, _)| !ok).count();
    println!("acceptance: {} of {} criteria pass", lines.len() - failed, lines.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
