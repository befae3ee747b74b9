//! Root systems and their reflection groups: orders, classes, elliptic classes, parabolics.
//!
//! cargo run --release --example reflection_groups

use spinrefl::report;
use spinrefl::rootsys::RootType;
use spinrefl::system::SpinSystem;

fn main() -> Result<(), spinrefl::Error> {
    for kind in [RootType::I2(5), RootType::I2(8), RootType::H3, RootType::H4] {
        let sys = SpinSystem::new(kind)?;
        let w = sys.weyl();
        println!(
            "{kind}: {} roots, |W| = {}, longest element has length {}",
            sys.root_system().num_roots(),
            w.order(),
            w.length(w.longest())
        );
        print!("{}", report::group_info(&sys)?.text());
        println!();
    }
    Ok(())
}
