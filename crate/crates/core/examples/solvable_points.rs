//! Solvable points for equal and unequal parameters.
//!
//! cargo run --release --example solvable_points

use spinrefl::points::{i2_even_solvable, PointSpace};
use spinrefl::report;
use spinrefl::rootsys::{ParameterFunction, RootSystem, RootType};
use spinrefl::scalars::rat;

fn main() -> Result<(), spinrefl::Error> {
    for kind in [RootType::I2(9), RootType::H3] {
        let rs = RootSystem::build(kind)?;
        let points = PointSpace::new(&rs)?.solvable_points(&ParameterFunction::constant(&rs, rat(1, 1)));
        print!("{}", report::solvable_text(&kind, &report::solvable(&points)));
    }

    // unequal parameters on the two root orbits of I2(8)
    let rs = RootSystem::build(RootType::I2(8))?;
    let c = ParameterFunction::per_orbit(&rs, vec![rat(1, 1), rat(3, 1)])?;
    let points = PointSpace::new(&rs)?.solvable_points(&c);
    print!("{}", report::solvable_text(&rs.kind(), &report::solvable(&points)));

    // the closed-form family for even n, with its distinguishedness test
    for p in i2_even_solvable(8, &rat(1, 1), &rat(3, 1))? {
        println!("  gamma_{}: norm2 {} distinguished {}", p.k, p.norm2, p.distinguished);
    }
    Ok(())
}
