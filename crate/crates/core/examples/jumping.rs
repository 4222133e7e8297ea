//! Non-returning and rotating-jump heads on the same tape.
//!
//! `cargo run --example jumping`

use std::error::Error;

use translucent::exec::{step, Configuration, StepResult};
use translucent::{accepts, fixtures, render_trace, run_deterministic};

pub fn run() -> Result<(), Box<dyn Error>> {
    // The non-returning head keeps skipped a's as a prefix.
    let nr = fixtures::l2_nr();
    let t = run_deterministic(&nr, "aabb", None)?;
    print!("{}", render_trace(&t));
    for w in ["ab", "aabb", "abab", "aab"] {
        println!("{} accepts {w}: {}", nr.name, accepts(&nr, w)?);
    }

    // The rotating-jump head moves the skipped prefix behind the rest.
    let j = fixtures::rowjfa_eq();
    if let StepResult::Successors(next) = step(&j, &Configuration::new("j1", "aab"))? {
        for (kind, cfg) in next {
            println!("j1 aab<| --{kind:?}--> {cfg}");
        }
    }
    let t = run_deterministic(&j, "aabbab", None)?;
    print!("{}", render_trace(&t));

    // Without the repetitive end mode a non-returning head is plain regular.
    let skip = fixtures::nrnr_skip_b();
    for w in ["a", "bba", "bab", "b"] {
        println!("{} accepts {w}: {}", skip.name, accepts(&skip, w)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
