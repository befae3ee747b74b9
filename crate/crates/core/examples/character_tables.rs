//! Character tables of W and of its double cover, with the genuine rows singled out.
//!
//! cargo run --release --example character_tables

use spinrefl::reference;
use spinrefl::report;
use spinrefl::rootsys::RootType;
use spinrefl::system::SpinSystem;

fn main() -> Result<(), spinrefl::Error> {
    let h3 = SpinSystem::new(RootType::H3)?;
    print!("{}", report::chartable(&h3, true)?.text());

    // label the genuine rows by the icosahedral reference table
    let labels = reference::match_h3(&h3).map_err(spinrefl::Error::Consistency)?;
    for (label, rows) in labels {
        println!("{label:?}: rows {rows:?}");
    }

    let i2 = SpinSystem::new(RootType::I2(6))?;
    let labels = reference::match_dihedral(&i2).map_err(spinrefl::Error::Consistency)?;
    println!("\nI2(6) rows by closed-form label:");
    for (label, row) in labels {
        println!("  {label:<8} -> row {row}{}", if label.is_genuine() { " (genuine)" } else { "" });
    }

    let h4 = SpinSystem::new(RootType::H4)?;
    let ct = h4.cover_table()?;
    let mut dims: Vec<usize> = ct.genuine.iter().map(|&i| ct.table.dim(i)).collect();
    dims.sort_unstable();
    println!("\nH4 cover: {} classes, genuine degrees {dims:?}", ct.table.num_classes());
    Ok(())
}
