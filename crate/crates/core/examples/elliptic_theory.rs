//! Elliptic pairing, spin modules and the spin map, plus the orthonormal basis for odd dihedral groups.
//!
//! cargo run --release --example elliptic_theory

use spinrefl::elliptic;
use spinrefl::report;
use spinrefl::rootsys::RootType;
use spinrefl::system::SpinSystem;

fn main() -> Result<(), spinrefl::Error> {
    for kind in [RootType::I2(7), RootType::I2(8), RootType::H3, RootType::H4] {
        let sys = SpinSystem::new(kind)?;
        let rep = elliptic::analyze(&sys)?;
        print!("{}", report::elliptic(&sys, &rep)?.text());
        println!("  S+ - S- on W~': {:?}", rep.spin.difference.iter().map(|x| x.to_string()).collect::<Vec<_>>());
        println!();
    }
    Ok(())
}
