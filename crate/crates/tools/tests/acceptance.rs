//! Runs every acceptance criterion and prints one PASS/FAIL line each.

use std::io::Write as _;
use std::process::ExitCode;

use homwarm::suite::run_paper_suite;

fn main() -> ExitCode {
    println!("acceptance criteria");
    let report = run_paper_suite(&[], |r| {
        println!("{}", r.line());
        let _ = std::io::stdout().flush();
    });
    let failed = report.results.iter().filter(|r| !r.passed).count();
    println!("{} of {} criteria passed", report.results.len() - failed, report.results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
