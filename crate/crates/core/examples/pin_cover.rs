//! The Pin double cover: defining relations, the central element Ω and the root-pair census.
//!
//! cargo run --release --example pin_cover

use spinrefl::report;
use spinrefl::rootsys::{ParameterFunction, RootType};
use spinrefl::scalars::rat;
use spinrefl::system::SpinSystem;

fn main() -> Result<(), spinrefl::Error> {
    let sys = SpinSystem::new(RootType::I2(7))?;
    let cover = sys.cover()?;
    let g = cover.group();
    let simple = sys.root_system().simple();
    let (f1, f2) = (cover.f_index(simple[0]), cover.f_index(simple[1]));
    let minus_one = cover.minus_one();
    println!("I2(7): |cover| = {}", cover.order());
    println!("  f1^2 = -1: {}", g.mul(f1, f1) == minus_one);
    println!("  (f1 f2)^7 = -1: {}", g.pow(g.mul(f1, f2), 7) == minus_one);
    println!("  f1 as a Clifford element: {}", cover.element(f1));

    for kind in [RootType::H3, RootType::H4] {
        let sys = SpinSystem::new(kind)?;
        let cover = sys.cover()?;
        let omega = cover.omega(&ParameterFunction::constant(sys.root_system(), rat(1, 1)));
        println!("\n{kind}: Omega at c = 1 is central: {}", omega.is_central());
        println!("  Omega = {}", omega.element);
        print!("{}", report::cover_info(&sys)?.text());
    }
    Ok(())
}
