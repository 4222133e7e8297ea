//! Building an automaton in code, writing it as a document and reading it
//! back.
//!
//! `cargo run --example documents`

use std::error::Error;

use translucent::automaton::{Alphabet, EndAction, EndMode, HeadMode};
use translucent::{canonicalize, parse, serialize, TlAutomaton};

pub fn run() -> Result<(), Box<dyn Error>> {
    // |w|_a = |w|_b: read an a (b translucent), then a b.
    let mut aut = TlAutomaton::empty("even", Alphabet::new(['a', 'b']), HeadMode::Returning, EndMode::Repetitive);
    aut.add_state("wait_a");
    aut.add_state("wait_b");
    aut.initial.insert("wait_a".into());
    aut.set_translucent("wait_a", ['b']);
    aut.set_translucent("wait_b", ['a']);
    aut.add_transition("wait_a", 'a', "wait_b");
    aut.add_transition("wait_b", 'b', "wait_a");
    aut.set_end("wait_a", EndAction::Accept);

    let text = serialize(&aut);
    print!("{text}");
    let back = parse(&text)?;
    assert_eq!(serialize(&back), text);

    let canon = canonicalize(&back);
    println!("canonical states: {:?}", canon.states);

    match parse(&text.replace("\"b\"\n  ],\n  \"states\"", "\"bb\"\n  ],\n  \"states\"")) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("bad letter: {e}"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
