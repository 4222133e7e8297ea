//! Step-by-step computations of the RDFAwtl for
//! `{w : |w|_c = 1, |w|_a = |w|_b} ∪ {w ∈ {a,b}* : 2|w|_a = |w|_b}`.
//!
//! `cargo run --example trace`

use std::error::Error;

use translucent::exec::SearchLimits;
use translucent::{fixtures, render_trace, run_deterministic, run_nondeterministic};

pub fn run() -> Result<(), Box<dyn Error>> {
    let aut = fixtures::a_vee_c();
    for word in ["aabbcba", "bbaabb", "", "ab"] {
        let trace = run_deterministic(&aut, word, None)?;
        println!("word {word:?}: {} steps", trace.len());
        print!("{}", render_trace(&trace));
        let order: Vec<String> = trace.input_positions().iter().map(|p| p.to_string()).collect();
        println!("input positions read: [{}]\n", order.join(", "));
    }

    // Nondeterministic automata get a breadth-first search; an accepting
    // computation comes back as a witness.
    let nfa = fixtures::regular_ab_abb();
    let out = run_nondeterministic(&nfa, "abbabb", SearchLimits::default())?;
    println!("{} on abbabb: {}", nfa.name, out.verdict);
    if let Some(w) = out.witness {
        print!("{}", render_trace(&w));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
