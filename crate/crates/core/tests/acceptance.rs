//! Runs every acceptance criterion and prints one line each.

use std::process::ExitCode;
use std::time::Instant;

use spinrefl::selftest::{self, Context};

fn main() -> ExitCode {
    let ctx = Context::default();
    let mut failed = 0;
    for id in 1..=selftest::TITLES.len() as u32 {
        let start = Instant::now();
        let outcome = selftest::run(&ctx, id);
        println!("{} ({:.1}s)", outcome.line(), start.elapsed().as_secs_f64());
        if !outcome.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", selftest::TITLES.len() - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
