//! Classifying automata and reading validation reports.
//!
//! `cargo run --example variants`

use std::error::Error;

use translucent::automaton::{Alphabet, EndAction, EndMode, HeadMode};
use translucent::{classify, fixtures, validate, TlAutomaton};

pub fn run() -> Result<(), Box<dyn Error>> {
    for aut in fixtures::all() {
        println!("{:<20} {}", aut.name, classify(&aut)?);
    }

    // Two mistakes: a transition on a translucent letter and an unknown
    // target state.
    let mut bad = TlAutomaton::empty("broken", Alphabet::new(['a', 'b']), HeadMode::Returning, EndMode::Repetitive);
    bad.add_state("p");
    bad.add_state("r");
    bad.initial.insert("p".into());
    bad.set_translucent("p", ['a']);
    bad.add_transition("p", 'a', "r");
    bad.add_transition("r", 'b', "nowhere");
    bad.set_end("r", EndAction::Accept);
    let report = validate(&bad);
    println!("\nvalid: {}", report.is_valid());
    print!("{report}");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
