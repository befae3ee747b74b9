//! Runs the verification suite, or the criteria named on the command line.
//!
//! cargo run --release --example acceptance_suite -- 5 8

use spinrefl::selftest::{self, Context};

fn main() {
    let ids: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids = if ids.is_empty() { (1..=selftest::TITLES.len() as u32).collect() } else { ids };
    let ctx = Context::default();
    for id in ids {
        println!("{}", selftest::run(&ctx, id).line());
    }
}
