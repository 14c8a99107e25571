//! Domino tilings of the Aztec diamond, counted as perfect matchings of its
//! dual, next to the two ASM sums that give the same numbers.
//!
//! cargo run --example aztec

use lucas_count::asm_grid::{aztec_dual, verify_theorem1};
use lucas_count::matchings::count_perfect_matchings;

fn main() -> lucas_count::Result<()> {
    for n in 1..=4 {
        let r = verify_theorem1(n)?;
        println!(
            "AD({n}): {} tilings, sum 2^N+ = {}, sum 2^N- = {}",
            r.matchings, r.plus_sum, r.minus_sum
        );
    }
    for n in 5..=10 {
        println!("AD({n}): {} tilings", count_perfect_matchings(&aztec_dual(n)?).0);
    }
    Ok(())
}
