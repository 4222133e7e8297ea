//! The queue-based membership test for deterministic returning automata
//! and its scaling on long inputs.
//!
//! `cargo run --release --example fast_membership`

use std::error::Error;

use translucent::fast::{bench, bench_word, FastMachine};
use translucent::fixtures;

pub fn run() -> Result<(), Box<dyn Error>> {
    let aut = fixtures::a_vee_c();
    let m = FastMachine::new(&aut)?;
    let r = m.run("aabbcba")?;
    println!("accepted {} after {} marker moves", r.accepted, r.marker_moves);
    for (state, pos) in &r.reads {
        println!("  {state} reads input position {pos}");
    }

    let word = bench_word(&aut.alphabet, 30);
    println!("{word}: {}", m.accepts(&word)?);

    println!("{:>8} {:>12}", "length", "time");
    for row in bench(&fixtures::l_eq(), &[1 << 10, 1 << 11, 1 << 12])? {
        println!("{:>8} {:>12?}", row.length, row.time);
    }

    // Nondeterministic or non-returning automata are refused.
    if let Err(e) = FastMachine::new(&fixtures::regular_ab_abb()) {
        println!("regular_ab_abb: {e}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
