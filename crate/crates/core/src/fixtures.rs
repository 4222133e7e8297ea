//! Shipped example automata.
//!
//! The documents live in `fixtures/` next to the crate manifest and are
//! compiled in, so examples and tests can use them without touching the
//! file system.

use crate::document::parse;
use crate::TlAutomaton;

pub const A_VEE_C_DOC: &str = include_str!("../fixtures/a_vee_c.tla");
pub const L_EQ_DOC: &str = include_str!("../fixtures/l_eq.tla");
pub const L_2EQ_DOC: &str = include_str!("../fixtures/l_2eq.tla");
pub const L_2EQ_PRIME_DOC: &str = include_str!("../fixtures/l_2eq_prime.tla");
pub const L_GEQ_DOC: &str = include_str!("../fixtures/l_geq.tla");
pub const L_C_REV_DOC: &str = include_str!("../fixtures/l_c_rev.tla");
pub const SINGLE_C_DOC: &str = include_str!("../fixtures/single_c.tla");
pub const L2_NR_DOC: &str = include_str!("../fixtures/l2_nr.tla");
pub const REGULAR_AB_ABB_DOC: &str = include_str!("../fixtures/regular_ab_abb.tla");
pub const ROWJFA_EQ_DOC: &str = include_str!("../fixtures/rowjfa_eq.tla");
pub const NRNR_SKIP_B_DOC: &str = include_str!("../fixtures/nrnr_skip_b.tla");
pub const MARKER_LOOP_DOC: &str = include_str!("../fixtures/marker_loop.tla");
pub const LOOP_OR_ACCEPT_DOC: &str = include_str!("../fixtures/loop_or_accept.tla");

fn load(doc: &str) -> TlAutomaton {
    parse(doc).expect("shipped fixtures are valid")
}

/// The RDFAwtl for `{w : |w|_c = 1, |w|_a = |w|_b} ∪ {w ∈ {a,b}* : 2|w|_a = |w|_b}`.
pub fn a_vee_c() -> TlAutomaton {
    load(A_VEE_C_DOC)
}

/// DFAwtl for `|w|_a = |w|_b` over {a,b}.
pub fn l_eq() -> TlAutomaton {
    load(L_EQ_DOC)
}

/// DFAwtl for `2|w|_a = |w|_b` over {a,b}.
pub fn l_2eq() -> TlAutomaton {
    load(L_2EQ_DOC)
}

/// DFAwtl for `2|w|_c = |w|_d` over {c,d}.
pub fn l_2eq_prime() -> TlAutomaton {
    load(L_2EQ_PRIME_DOC)
}

/// DFAwtl for `|w|_a >= |w|_b` over {a,b}.
pub fn l_geq() -> TlAutomaton {
    load(L_GEQ_DOC)
}

/// DFAwtl for `{c w : w ∈ {a,b}*, |w|_a >= |w|_b}`.
pub fn l_c_rev() -> TlAutomaton {
    load(L_C_REV_DOC)
}

/// DFAwtl for `{c}` over {a,b,c}.
pub fn single_c() -> TlAutomaton {
    load(SINGLE_C_DOC)
}

/// nr-DFAwtl for `{a^n b^n : n >= 0}`.
pub fn l2_nr() -> TlAutomaton {
    load(L2_NR_DOC)
}

/// A classical NFA for `(ab)* + (abb)*`.
pub fn regular_ab_abb() -> TlAutomaton {
    load(REGULAR_AB_ABB_DOC)
}

/// ROWJFA for `|w|_a = |w|_b`.
pub fn rowjfa_eq() -> TlAutomaton {
    load(ROWJFA_EQ_DOC)
}

/// nr-nr-DFAwtl that skips b's and accepts after its first a.
pub fn nrnr_skip_b() -> TlAutomaton {
    load(NRNR_SKIP_B_DOC)
}

/// Repetitive automaton that loops at the marker forever and accepts nothing.
pub fn marker_loop() -> TlAutomaton {
    load(MARKER_LOOP_DOC)
}

/// Nondeterministic repetitive automaton with marker loops next to an
/// accepting branch.
pub fn loop_or_accept() -> TlAutomaton {
    load(LOOP_OR_ACCEPT_DOC)
}

/// Single-state RDFAwtl accepting every word over {a,b}.
pub fn accept_all() -> TlAutomaton {
    use crate::automaton::{Alphabet, EndAction, EndMode, HeadMode};
    let mut a = TlAutomaton::empty("accept_all", Alphabet::new(['a', 'b']), HeadMode::Returning, EndMode::Repetitive);
    a.add_state("q0");
    a.initial.insert("q0".into());
    a.add_transition("q0", 'a', "q0");
    a.add_transition("q0", 'b', "q0");
    a.set_end("q0", EndAction::Accept);
    a
}

/// Every shipped fixture.
pub fn all() -> Vec<TlAutomaton> {
    vec![
        a_vee_c(),
        l_eq(),
        l_2eq(),
        l_2eq_prime(),
        l_geq(),
        l_c_rev(),
        single_c(),
        l2_nr(),
        regular_ab_abb(),
        rowjfa_eq(),
        nrnr_skip_b(),
        marker_loop(),
        loop_or_accept(),
        accept_all(),
    ]
}

/// Looks a fixture up by its file stem, e.g. `a_vee_c`.
pub fn by_name(name: &str) -> Option<TlAutomaton> {
    Some(match name {
        "a_vee_c" => a_vee_c(),
        "l_eq" => l_eq(),
        "l_2eq" => l_2eq(),
        "l_2eq_prime" => l_2eq_prime(),
        "l_geq" => l_geq(),
        "l_c_rev" => l_c_rev(),
        "single_c" => single_c(),
        "l2_nr" => l2_nr(),
        "regular_ab_abb" => regular_ab_abb(),
        "rowjfa_eq" => rowjfa_eq(),
        "nrnr_skip_b" => nrnr_skip_b(),
        "marker_loop" => marker_loop(),
        "loop_or_accept" => loop_or_accept(),
        "accept_all" => accept_all(),
        _ => return None,
    })
}
