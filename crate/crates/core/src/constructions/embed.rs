use crate::automaton::{EndAction, EndMode, HeadMode};
use crate::TlAutomaton;

use super::{expect, finish, Construction, Result};

/// Turns a halting returning automaton into a repetitive one: final states
/// accept at the end marker, all others reject.
pub fn embed_repetitive(aut: &TlAutomaton) -> Result<Construction> {
    let d = expect("embed", "DFAwtl or NFAwtl", aut, &[HeadMode::Returning], &[EndMode::Halting])?;
    let mut out = aut.clone();
    out.end_mode = EndMode::Repetitive;
    out.finals.clear();
    out.end_transitions.clear();
    for q in &aut.states {
        if aut.finals.contains(q) {
            out.set_end(q.clone(), EndAction::Accept);
        }
    }
    finish("embed", aut, d, out, Vec::new())
}
