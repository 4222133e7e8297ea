//! The construction pipeline: every step returns the automaton together
//! with a report on state blow-up, and the result is checked against the
//! input on all short words.
//!
//! `cargo run --example constructions`

use std::error::Error;

use translucent::constructions as cons;
use translucent::oracle::{equivalent_up_to, Source};
use translucent::{fixtures, TlAutomaton};

fn check(before: &TlAutomaton, after: &TlAutomaton, max_len: usize) -> Result<(), Box<dyn Error>> {
    let report = equivalent_up_to(&Source::Automaton(before.clone()), &Source::Automaton(after.clone()), max_len)?;
    println!("  check against input: {report}\n");
    Ok(())
}

pub fn run() -> Result<(), Box<dyn Error>> {
    let aut = fixtures::a_vee_c();
    for c in [
        cons::eliminate_end_loops(&aut)?,
        cons::complete_reading(&aut)?,
        cons::normalize(&aut)?,
        cons::repetitive_to_plain(&aut)?,
        cons::repetitive_to_nonreturning(&aut)?,
        cons::first_letter_normalize(&aut)?,
    ] {
        print!("{}", c.report);
        check(&aut, &c.automaton, 6)?;
    }

    // Marker loops are cut without changing the language.
    let looping = fixtures::loop_or_accept();
    let c = cons::eliminate_end_loops(&looping)?;
    print!("{}", c.report);
    check(&looping, &c.automaton, 6)?;

    let halting = fixtures::l_eq();
    let c = cons::embed_repetitive(&halting)?;
    print!("{}", c.report);
    check(&halting, &c.automaton, 8)?;

    let nrnr = fixtures::nrnr_skip_b();
    let c = cons::nrnr_to_nfa(&nrnr)?;
    print!("{}", c.report);
    check(&nrnr, &c.automaton, 8)?;

    // Wrong input variants are refused with a typed error.
    if let Err(e) = cons::embed_repetitive(&aut) {
        println!("embed on {}: {e}", aut.name);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
