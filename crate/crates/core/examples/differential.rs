//! Seeded random automata checked against the brute-force acceptor.
//!
//! `cargo run --example differential -- 7`

use std::error::Error;

use translucent::automaton::{EndMode, HeadMode};
use translucent::oracle::{brute_accepts, words_up_to};
use translucent::random::{Generator, RandomSpec};
use translucent::{accepts, classify};

pub fn run_with(seed: u64) -> Result<(), Box<dyn Error>> {
    let mut g = Generator::new(seed);
    let specs = [
        RandomSpec::new(HeadMode::Returning, EndMode::Repetitive, false),
        RandomSpec::new(HeadMode::NonReturning, EndMode::Repetitive, true),
        RandomSpec::new(HeadMode::RotatingJump, EndMode::Halting, true),
    ];
    for spec in &specs {
        for aut in g.automata(spec, 5) {
            let mut agreed = 0;
            for w in words_up_to(&aut.alphabet, 5) {
                let (fast, slow) = (accepts(&aut, &w)?, brute_accepts(&aut, &w)?);
                if fast != slow {
                    return Err(format!("{} disagrees on {w:?}", aut.name).into());
                }
                agreed += 1;
            }
            println!("{:<9} {:<12} {} states, {agreed} words agree", aut.name, classify(&aut)?.to_string(), aut.states.len());
        }
    }
    Ok(())
}

pub fn run() -> Result<(), Box<dyn Error>> {
    run_with(7)
}

fn main() -> Result<(), Box<dyn Error>> {
    let seed = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(7);
    run_with(seed)
}
