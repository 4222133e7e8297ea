//! Complement, left quotient and disjoint shuffle, each compared with the
//! matching operation on predicate languages.
//!
//! `cargo run --example closure`

use std::error::Error;

use translucent::constructions as cons;
use translucent::oracle::{builtin_language, equivalent_up_to, LanguageSpec, Source};
use translucent::{fixtures, Alphabet};

fn compare(name: &str, aut: translucent::TlAutomaton, lang: LanguageSpec, max_len: usize) -> Result<(), Box<dyn Error>> {
    let r = equivalent_up_to(&Source::Automaton(aut), &Source::Language(lang), max_len)?;
    println!("{name}: {r}");
    Ok(())
}

pub fn run() -> Result<(), Box<dyn Error>> {
    let vee_c = builtin_language("L_vee_c")?;

    let c = cons::complement_deterministic(&fixtures::a_vee_c())?;
    println!("complement has {} states", c.automaton.states.len());
    compare("complement(A_vee_c) = complement(L_vee_c)", c.automaton, vee_c.complement(), 6)?;

    // c⟍L_vee_c is L_eq, seen over {a,b,c}.
    let q = cons::left_quotient(&fixtures::a_vee_c(), "c")?;
    compare("c\\A_vee_c = c\\L_vee_c", q.automaton.clone(), vee_c.quotient("c"), 6)?;
    let l_eq = builtin_language("L_eq")?.widen(&Alphabet::new(['a', 'b', 'c']));
    compare("c\\A_vee_c = L_eq", q.automaton, l_eq, 6)?;

    let q = cons::left_quotient(&fixtures::l_eq(), "ab")?;
    compare("ab\\A_eq = L_eq", q.automaton, builtin_language("L_eq")?, 8)?;

    let s = cons::disjoint_shuffle(&fixtures::l_eq(), &fixtures::l_2eq_prime())?;
    print!("{}", s.report);
    let expected = builtin_language("L_eq")?.shuffle(&builtin_language("L_2eq_prime")?);
    compare("A_eq shuffled with A_2eq' = L_eq shuffled with L_2eq'", s.automaton, expected, 6)?;
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
