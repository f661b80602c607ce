//! Prints one PASS/FAIL line per acceptance criterion. Pass criterion ids as
//! arguments to run a subset.

use std::process::ExitCode;

fn main() -> ExitCode {
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for c in tropnet::acceptance::CRITERIA.iter().filter(|c| only.is_empty() || only.contains(&c.id)) {
        let result = c.run();
        println!("{}", result.line());
        if !result.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
