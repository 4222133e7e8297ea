//! Bounded equivalence against predicate languages and the combinator
//! expressions of the oracle.
//!
//! `cargo run --example oracle_lab`

use std::error::Error;

use translucent::oracle::{builtin_language, enumerate, equivalent_up_to, LanguageSpec, Source, BUILTIN_NAMES};
use translucent::{fixtures, Alphabet};

fn lang(expr: &str) -> Result<Source, Box<dyn Error>> {
    Ok(Source::Language(builtin_language(expr)?))
}

pub fn run() -> Result<(), Box<dyn Error>> {
    println!("builtin languages: {}", BUILTIN_NAMES.join(", "));

    let pairs = [
        (fixtures::a_vee_c(), "L_vee_c"),
        (fixtures::l_eq(), "L_eq"),
        (fixtures::l_geq(), "L_geq"),
        (fixtures::l2_nr(), "L_2"),
        (fixtures::rowjfa_eq(), "L_eq"),
        (fixtures::l_eq(), "L_geq"),
    ];
    for (aut, name) in pairs {
        let report = equivalent_up_to(&Source::Automaton(aut.clone()), &lang(name)?, 8)?;
        println!("{} vs {name}: {report} ({} words)", aut.name, report.words_checked);
    }

    // Different alphabets are an error; widening one side fixes that.
    let vee = builtin_language("L_vee")?;
    let aut = Source::Automaton(fixtures::a_vee_c());
    if let Err(e) = equivalent_up_to(&aut, &Source::Language(vee.clone()), 4) {
        println!("A_vee_c vs L_vee: {e}");
    }
    let wide = vee.widen(&Alphabet::new(['a', 'b', 'c']));
    println!("A_vee_c vs widened L_vee: {}", equivalent_up_to(&aut, &Source::Language(wide), 4)?);

    // Combinators build new predicates from old ones.
    let e = enumerate(&lang("shuffle(L_eq,L_2eq_prime)")?, 4)?;
    println!("shuffle(L_eq,L_2eq_prime) up to 4: {e:?}");
    let star = builtin_language("L_2")?.star();
    println!("L_2* up to 6: {:?}", enumerate(&Source::Language(star), 6)?);
    let custom = LanguageSpec::new("palindromes", Alphabet::new(['a', 'b']), |w| w.iter().eq(w.iter().rev()));
    println!("palindromes up to 3: {:?}", enumerate(&Source::Language(custom), 3)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
