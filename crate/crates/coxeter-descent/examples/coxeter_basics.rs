//! Build finite Coxeter systems and query elements: lengths, descents,
//! longest elements, reduced words.
//!
//! ```bash
//! cargo run -p coxeter-descent --example coxeter_basics
//! ```

use coxeter_descent::coxeter::{CoxeterSystem, CoxeterType};
use coxeter_descent::SubsetMask;

fn main() -> coxeter_descent::Result<()> {
    for spec in ["A3", "B3", "D4", "I2:7", "H3", "F4", "E8"] {
        let sys = CoxeterSystem::build(CoxeterType::parse(spec)?)?;
        println!("{spec}: rank {}, order {}", sys.rank(), sys.group_order());
        print!("  coxeter matrix:");
        for row in sys.coxeter_matrix() {
            print!(" {row:?}");
        }
        println!();

        // The longest element comes from greedy ascent and never needs the
        // group enumerated, so this works for E8 too.
        let w0 = sys.longest_element(sys.full_set());
        println!("  longest element has length {}", w0.length());

        // Words multiply left to right; elements answer descent queries in
        // constant time.
        let w = sys.element_from_word(&[1, 2, 1])?;
        println!(
            "  w = s1 s2 s1 has length {}, canonical word '{}'",
            w.length(),
            sys.element_to_text(&w)
        );
        for i in 1..=sys.rank() {
            if !w.has_right_ascent(i)? {
                println!("  s{i} is a right descent of w");
            }
        }
        println!();
    }

    // Parabolic longest elements: w_K for K = {s1, s3} in A3 is s1 s3.
    let a3 = CoxeterSystem::build(CoxeterType::parse("A3")?)?;
    let k = SubsetMask::from_indices(&[1, 3]);
    let wk = a3.longest_element(k);
    println!(
        "A3, K = {{{k}}}: w_K = '{}' of length {}",
        a3.element_to_text(&wk),
        wk.length()
    );
    Ok(())
}
