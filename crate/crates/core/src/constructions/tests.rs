use super::*;
use crate::automaton::{Alphabet, EndAction, VariantName};
use crate::exec::{run_deterministic, run_nondeterministic, SearchLimits, StepKind, Verdict};
use crate::fixtures;
use crate::oracle::{builtin_language, enumerate, equivalent_up_to, LanguageSpec, Source};
use crate::random::{Generator, RandomSpec};

fn assert_equiv(a: &TlAutomaton, b: &TlAutomaton, max_len: usize) {
    let r = equivalent_up_to(&Source::Automaton(a.clone()), &Source::Automaton(b.clone()), max_len).unwrap();
    assert!(r.is_equivalent(), "{} vs {}: {r}", a.name, b.name);
}

fn assert_lang(a: &TlAutomaton, l: LanguageSpec, max_len: usize) {
    let r = equivalent_up_to(&Source::Automaton(a.clone()), &Source::Language(l), max_len).unwrap();
    assert!(r.is_equivalent(), "{}: {r}", a.name);
}

fn single_state(accept: bool) -> TlAutomaton {
    let mut a = TlAutomaton::empty("one", Alphabet::new(['a', 'b']), HeadMode::Returning, EndMode::Repetitive);
    a.add_state("q0");
    a.initial.insert("q0".into());
    if accept {
        a.set_end("q0", EndAction::Accept);
    }
    a
}

fn empty_language(end: EndMode) -> TlAutomaton {
    let mut a = TlAutomaton::empty("none", Alphabet::new(['a', 'b']), HeadMode::Returning, end);
    a.add_state("z");
    a.initial.insert("z".into());
    a
}

#[test]
fn embed_a_star() {
    let mut dfa = TlAutomaton::empty("a*", Alphabet::new(['a', 'b']), HeadMode::Returning, EndMode::Halting);
    dfa.add_state("q0");
    dfa.initial.insert("q0".into());
    dfa.finals.insert("q0".into());
    dfa.add_transition("q0", 'a', "q0");
    let out = embed_repetitive(&dfa).unwrap();
    assert_eq!(out.report.output_descriptor.canonical_name, VariantName::Rdfawtl);
    assert_eq!(enumerate(&Source::Automaton(out.automaton), 3).unwrap(), ["", "a", "aa", "aaa"]);
}

#[test]
fn embed_l_eq_and_empty() {
    let out = embed_repetitive(&fixtures::l_eq()).unwrap().automaton;
    assert_equiv(&out, &fixtures::l_eq(), 8);
    let out = embed_repetitive(&empty_language(EndMode::Halting)).unwrap().automaton;
    assert!(enumerate(&Source::Automaton(out), 5).unwrap().is_empty());
    assert!(matches!(
        embed_repetitive(&fixtures::a_vee_c()),
        Err(ConstructionError::WrongVariant { .. })
    ));
}

#[test]
fn nrnr_collapse() {
    let aut = fixtures::nrnr_skip_b();
    let out = nrnr_to_nfa(&aut).unwrap();
    assert!(out.automaton.translucency.is_empty());
    assert_eq!(out.report.output_descriptor.canonical_name, VariantName::Dfawtl);
    assert_equiv(&out.automaton, &aut, 7);
    // b*a: qf has no moves, so any letter left visible after the a rejects.
    assert_eq!(enumerate(&Source::Automaton(out.automaton), 3).unwrap(), ["a", "ba", "bba"]);
}

#[test]
fn nrnr_without_translucency_is_unchanged() {
    let mut aut = fixtures::regular_ab_abb();
    aut.head_mode = HeadMode::NonReturning;
    let out = nrnr_to_nfa(&aut).unwrap().automaton;
    assert_eq!(out.transitions, aut.transitions);
}

#[test]
fn nonreturning_simulation_of_example() {
    let out = repetitive_to_nonreturning(&fixtures::a_vee_c()).unwrap();
    assert_eq!(out.automaton.states.len(), 16);
    assert_eq!(out.report.output_descriptor.canonical_name, VariantName::NrDfawtl);
    assert_equiv(&out.automaton, &fixtures::a_vee_c(), 7);
    let all = repetitive_to_nonreturning(&fixtures::accept_all()).unwrap().automaton;
    assert_eq!(all.states.len(), 2);
    assert_equiv(&all, &fixtures::accept_all(), 6);
}

#[test]
fn marker_moves_survive_the_nonreturning_simulation() {
    // A_vee_c needs q0 -> q4 at the marker for words without c.
    let out = repetitive_to_nonreturning(&fixtures::a_vee_c()).unwrap().automaton;
    assert_eq!(out.end_action("q0"), EndAction::goto("q4"));
    assert!(crate::accepts(&out, "abb").unwrap());
}

#[test]
fn loop_elimination() {
    let out = eliminate_end_loops(&fixtures::marker_loop()).unwrap().automaton;
    let t = run_deterministic(&out, "", None).unwrap();
    assert_eq!(t.verdict, Verdict::Reject);
    assert_equiv(&out, &fixtures::marker_loop(), 5);
    let out = eliminate_end_loops(&fixtures::loop_or_accept()).unwrap().automaton;
    assert_equiv(&out, &fixtures::loop_or_accept(), 6);
    let out = eliminate_end_loops(&fixtures::a_vee_c()).unwrap();
    assert!(out.automaton.has_state("(q4|S:q0)"));
    assert!(out.report.output_descriptor.deterministic);
    assert_equiv(&out.automaton, &fixtures::a_vee_c(), 7);
}

#[test]
fn complete_reading_ends_on_empty_tape() {
    let out = complete_reading(&fixtures::a_vee_c()).unwrap().automaton;
    assert_equiv(&out, &fixtures::a_vee_c(), 7);
    let w = run_nondeterministic(&out, "aabbcba", SearchLimits::default())
        .unwrap()
        .witness
        .unwrap();
    let last = w.last_config();
    assert_eq!((last.state.as_str(), last.remaining.as_str()), ("q_e", ""));
    let none = complete_reading(&single_state(false)).unwrap().automaton;
    assert!(enumerate(&Source::Automaton(none), 4).unwrap().is_empty());
    let all = complete_reading(&fixtures::accept_all()).unwrap().automaton;
    assert_equiv(&all, &fixtures::accept_all(), 5);
}

#[test]
fn normalize_terminates_and_reads_everything() {
    for aut in [fixtures::marker_loop(), fixtures::loop_or_accept(), fixtures::a_vee_c()] {
        let out = normalize(&aut).unwrap().automaton;
        assert_equiv(&out, &aut, 6);
        let det = out.initial.len() == 1 && classify(&out).unwrap().deterministic;
        for w in crate::oracle::words_up_to(&out.alphabet, 5) {
            if det {
                assert_ne!(run_deterministic(&out, &w, None).unwrap().verdict, Verdict::StepLimit);
            }
            if let Some(t) = run_nondeterministic(&out, &w, SearchLimits::default()).unwrap().witness {
                assert_eq!(t.last_config().remaining, "");
            }
        }
    }
}

#[test]
fn repetitive_to_plain_example() {
    let out = repetitive_to_plain(&fixtures::a_vee_c()).unwrap();
    assert_eq!(out.report.output_descriptor.end_mode, EndMode::Halting);
    assert_lang(&out.automaton, builtin_language("L_vee_c").unwrap(), 7);
    let looped = repetitive_to_plain(&fixtures::loop_or_accept()).unwrap().automaton;
    assert_equiv(&looped, &fixtures::loop_or_accept(), 6);
}

#[test]
fn complement_of_example() {
    let c = complement_deterministic(&fixtures::a_vee_c()).unwrap().automaton;
    assert!(crate::accepts(&c, "ab").unwrap());
    assert!(!crate::accepts(&c, "abc").unwrap());
    assert_lang(&c, builtin_language("complement(L_vee_c)").unwrap(), 6);
    let cc = complement_deterministic(&c).unwrap().automaton;
    assert_equiv(&cc, &fixtures::a_vee_c(), 6);
    let none = complement_deterministic(&fixtures::accept_all()).unwrap().automaton;
    assert!(enumerate(&Source::Automaton(none), 6).unwrap().is_empty());
    assert!(matches!(
        complement_deterministic(&fixtures::loop_or_accept()),
        Err(ConstructionError::NotDeterministic(_))
    ));
    let halting = complement_deterministic(&fixtures::l_eq()).unwrap().automaton;
    assert_lang(&halting, builtin_language("complement(L_eq)").unwrap(), 6);
}

#[test]
fn first_letter_reads_position_zero() {
    let out = first_letter_normalize(&fixtures::a_vee_c()).unwrap();
    let aut = out.automaton;
    assert!(out.report.output_descriptor.deterministic);
    assert_equiv(&aut, &fixtures::a_vee_c(), 6);
    for w in ["aabbcba", "bbaabb", "cab", "ba"] {
        let t = run_deterministic(&aut, w, None).unwrap();
        assert_eq!(
            t.steps[0].kind,
            StepKind::ReadLetter { letter: w.chars().next().unwrap(), position: 0 },
            "{w}"
        );
    }
}

#[test]
fn first_letter_on_random_automata() {
    let mut g = Generator::new(11);
    let spec = RandomSpec::new(HeadMode::Returning, EndMode::Repetitive, true);
    for aut in g.automata(&spec, 20) {
        let out = first_letter_normalize(&aut).unwrap().automaton;
        assert!(classify(&out).unwrap().deterministic);
        assert_equiv(&out, &aut, 5);
    }
}

#[test]
fn quotients() {
    let q = left_quotient(&fixtures::a_vee_c(), "c").unwrap().automaton;
    let l_eq = builtin_language("L_eq").unwrap().widen(&Alphabet::new(['c']));
    assert_lang(&q, l_eq, 6);
    let same = left_quotient(&fixtures::a_vee_c(), "").unwrap().automaton;
    assert_equiv(&same, &fixtures::a_vee_c(), 6);
    let none = left_quotient(&fixtures::a_vee_c(), "cc").unwrap().automaton;
    assert!(enumerate(&Source::Automaton(none), 6).unwrap().is_empty());
    let ab = left_quotient(&fixtures::a_vee_c(), "ab").unwrap().automaton;
    assert_lang(&ab, builtin_language("L_vee_c").unwrap().quotient("ab"), 6);
    assert!(matches!(
        left_quotient(&fixtures::a_vee_c(), "x"),
        Err(ConstructionError::LetterOutsideAlphabet('x'))
    ));
}

#[test]
fn shuffles() {
    let s = disjoint_shuffle(&fixtures::l_eq(), &fixtures::l_2eq_prime()).unwrap();
    assert!(s.report.output_descriptor.deterministic);
    let aut = s.automaton;
    assert_eq!(aut.alphabet, Alphabet::new(['a', 'b', 'c', 'd']));
    for w in ["abcdd", "cadbd", "abccdddd"] {
        assert!(crate::accepts(&aut, w).unwrap(), "{w}");
    }
    assert_lang(&aut, builtin_language("shuffle(L_eq,L_2eq_prime)").unwrap(), 6);

    let mut eps = TlAutomaton::empty("eps", Alphabet::new(['c']), HeadMode::Returning, EndMode::Repetitive);
    eps.add_state("e");
    eps.initial.insert("e".into());
    eps.set_end("e", EndAction::Accept);
    let with_eps = disjoint_shuffle(&fixtures::l_eq(), &eps).unwrap().automaton;
    assert_lang(&with_eps, builtin_language("L_eq").unwrap().widen(&Alphabet::new(['c'])), 6);

    let mut nothing = eps.clone();
    nothing.end_transitions.clear();
    let with_nothing = disjoint_shuffle(&fixtures::l_eq(), &nothing).unwrap().automaton;
    assert!(enumerate(&Source::Automaton(with_nothing), 6).unwrap().is_empty());

    assert!(matches!(
        disjoint_shuffle(&fixtures::l_eq(), &fixtures::l_geq()),
        Err(ConstructionError::AlphabetOverlap(_))
    ));
}

#[test]
fn clashing_state_names_are_renamed() {
    let s = disjoint_shuffle(&fixtures::a_vee_c(), &fixtures::single_c());
    assert!(matches!(s, Err(ConstructionError::AlphabetOverlap(_))));
    let mut b = crate::document::parse(&crate::serialize(&fixtures::l_2eq_prime()).replace("\"t0\"", "\"q_e\"")).unwrap();
    b.name = "clash".into();
    let s = disjoint_shuffle(&fixtures::l_eq(), &b).unwrap();
    assert!(s.report.notes.iter().any(|n| n.contains("renamed")));
    assert_lang(&s.automaton, builtin_language("shuffle(L_eq,L_2eq_prime)").unwrap(), 5);
}

#[test]
fn reports() {
    let out = repetitive_to_nonreturning(&fixtures::a_vee_c()).unwrap();
    assert_eq!(out.report.state_blowup, 2.0);
    let text = out.report.to_string();
    assert!(text.contains("input: RDFAwtl (8 states)"), "{text}");
    assert!(text.contains("output: nr-DFAwtl (16 states)"), "{text}");
    let out = normalize(&fixtures::marker_loop()).unwrap();
    assert_eq!(out.report.notes, ["1 end-marker loop(s) cut"]);
}
