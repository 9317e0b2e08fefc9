//! Full native-basis classification sweep: for every irreducible type in the
//! enumerable range and every maximal parabolic, decide whether `Q[x_J]` has
//! a native basis and whether it is integral, and compare against the
//! expected classification.
//!
//! ```bash
//! cargo run --release -p coxeter-descent --example classify
//! ```

use coxeter_descent::coxeter::{CoxeterSystem, CoxeterType};
use coxeter_descent::subalgebra::classify_all_maximal;

fn main() -> coxeter_descent::Result<()> {
    let mut specs: Vec<String> = Vec::new();
    specs.extend((1..=5).map(|n| format!("A{n}")));
    specs.extend((2..=4).map(|n| format!("B{n}")));
    specs.extend((3..=5).map(|n| format!("D{n}")));
    specs.extend((3..=10).map(|m| format!("I2:{m}")));
    specs.extend(["H3", "H4", "F4", "E6"].map(String::from));

    println!("{:<6} {:<4} {:<4} {:<8} {:<9} reason", "type", "s", "dim", "native", "integral");
    for spec in specs {
        let sys = CoxeterSystem::build(CoxeterType::parse(&spec)?)?;
        for row in classify_all_maximal(&sys)? {
            println!(
                "{:<6} s{:<3} {:<4} {:<8} {:<9} {}",
                spec, row.s, row.dim, row.native, row.integral, row.reason
            );
        }
    }
    Ok(())
}
