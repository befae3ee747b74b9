//! The map from genuine characters to solvable orbits, matched by a-value against norm.
//!
//! cargo run --release --example spin_correspondence

use spinrefl::phi;
use spinrefl::report;
use spinrefl::rootsys::{ParameterFunction, RootType};
use spinrefl::scalars::rat;
use spinrefl::system::SpinSystem;

fn main() -> Result<(), spinrefl::Error> {
    for kind in [RootType::I2(7), RootType::H3, RootType::H4] {
        let sys = SpinSystem::new(kind)?;
        let c = ParameterFunction::constant(sys.root_system(), rat(1, 1));
        let map = phi::compute(&sys, &c)?;
        print!("{}", report::phi(&sys, &c, &map).text());
        for (orbit, size) in map.collisions() {
            println!("  orbit {orbit} (norm2 {}) receives {size} classes", map.orbits[orbit].norm2);
        }
        println!();
    }

    // for even n, bijectivity is decided by a finite cosine condition
    let sys = SpinSystem::new(RootType::I2(6))?;
    for (c1, c2) in [(1, 1), (1, 2), (1, 3), (2, 3)] {
        let cond = phi::bijectivity_condition(6, &rat(c1, 1), &rat(c2, 1));
        let c = ParameterFunction::per_orbit(sys.root_system(), vec![rat(c1, 1), rat(c2, 1)])?;
        let map = phi::compute(&sys, &c)?;
        println!("I2(6) at ({c1},{c2}): cosine condition {}, bijective {}", cond.holds, map.is_bijective());
    }
    Ok(())
}
