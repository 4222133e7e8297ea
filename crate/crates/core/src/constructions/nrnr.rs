use std::collections::BTreeMap;

use crate::automaton::{EndMode, HeadMode};
use crate::TlAutomaton;

use super::{expect, finish, Construction, Result};

/// Collapses a non-returning, non-repetitive automaton to a classical finite
/// automaton: a translucent letter becomes a self-loop.
pub fn nrnr_to_nfa(aut: &TlAutomaton) -> Result<Construction> {
    let d = expect(
        "nrnr-to-nfa",
        "nr-nr-DFAwtl or nr-nr-NFAwtl",
        aut,
        &[HeadMode::NonReturning],
        &[EndMode::Halting],
    )?;
    let mut out = aut.clone();
    out.head_mode = HeadMode::Returning;
    out.translucency = BTreeMap::new();
    for (q, tau) in &aut.translucency {
        for &a in tau {
            out.add_transition(q.clone(), a, q.clone());
        }
    }
    finish("nrnr-to-nfa", aut, d, out, Vec::new())
}
