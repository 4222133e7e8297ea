use crate::automaton::{EndAction, EndMode, HeadMode};
use crate::TlAutomaton;

use super::{embed_repetitive, expect, finish, fresh_name, normalize, Construction, ConstructionError, Result};

/// Complement of a deterministic returning automaton.
///
/// Halting inputs are embedded first, then the automaton is normalized so
/// that every computation ends in a verdict. A fresh sink `q_a` reads the
/// rest of the tape and accepts; missing letter moves and rejecting marker
/// moves go there, while marker `Accept`s become rejections.
pub fn complement_deterministic(aut: &TlAutomaton) -> Result<Construction> {
    let d = expect(
        "complement",
        "DFAwtl or RDFAwtl",
        aut,
        &[HeadMode::Returning],
        &[EndMode::Halting, EndMode::Repetitive],
    )?;
    if !d.deterministic {
        return Err(ConstructionError::NotDeterministic("complement"));
    }
    let mut notes = Vec::new();
    let repetitive = if d.end_mode == EndMode::Halting {
        notes.push("halting input embedded first".to_string());
        embed_repetitive(aut)?.automaton
    } else {
        aut.clone()
    };
    let normal = normalize(&repetitive)?.automaton;
    notes.push(format!("input normalized first ({} states)", normal.states.len()));

    let mut out = normal.clone();
    out.name = format!("{}.complement", aut.name);
    let sink = fresh_name(&normal, &Default::default(), "q_a");
    for q in &normal.states {
        for &a in normal.alphabet.letters() {
            if !normal.is_translucent(q, a) && normal.targets(q, a).is_empty() {
                out.add_transition(q.clone(), a, sink.clone());
            }
        }
        match normal.end_action(q) {
            EndAction::Accept => {
                out.end_transitions.remove(q);
            }
            EndAction::Goto(t) if t.is_empty() => out.set_end(q.clone(), EndAction::goto(sink.clone())),
            EndAction::Goto(_) => {}
        }
    }
    out.add_state(sink.clone());
    for &a in normal.alphabet.letters() {
        out.add_transition(sink.clone(), a, sink.clone());
    }
    out.set_end(sink, EndAction::Accept);
    finish("complement", aut, d, out, notes)
}
