use std::collections::{BTreeMap, BTreeSet};

use crate::automaton::{EndAction, EndMode, HeadMode, State};
use crate::TlAutomaton;

use super::{embed_repetitive, expect, finish, fresh_name, normalize, Construction, ConstructionError, Result};

fn repetitive(aut: &TlAutomaton, notes: &mut Vec<String>, which: &str) -> Result<TlAutomaton> {
    Ok(if aut.end_mode == EndMode::Halting {
        notes.push(format!("{which} operand embedded first"));
        embed_repetitive(aut)?.automaton
    } else {
        aut.clone()
    })
}

/// Disjoint shuffle of two returning automata over disjoint alphabets.
///
/// `a` (normalized first) runs with all letters of `b` translucent; where it
/// would accept at the marker it enters the initial state of `b`, which then
/// reads the remaining word, now over `b`'s alphabet only.
pub fn disjoint_shuffle(a: &TlAutomaton, b: &TlAutomaton) -> Result<Construction> {
    let modes = [EndMode::Halting, EndMode::Repetitive];
    let d = expect("shuffle", "returning automata", a, &[HeadMode::Returning], &modes)?;
    expect("shuffle", "returning automata", b, &[HeadMode::Returning], &modes)?;
    let overlap: Vec<char> = a.alphabet.letters().iter().copied().filter(|&c| b.alphabet.contains(c)).collect();
    if !overlap.is_empty() {
        return Err(ConstructionError::AlphabetOverlap(overlap));
    }
    let mut notes = Vec::new();
    let a_rep = repetitive(a, &mut notes, "left")?;
    let b_rep = repetitive(b, &mut notes, "right")?;
    let na = normalize(&a_rep)?.automaton;
    notes.push(format!("left operand normalized first ({} states)", na.states.len()));

    // Rename b's states that clash with a's.
    let mut taken: BTreeSet<State> = BTreeSet::new();
    let mut rename: BTreeMap<State, State> = BTreeMap::new();
    for q in &b_rep.states {
        let r = fresh_name(&na, &taken, q);
        taken.insert(r.clone());
        rename.insert(q.clone(), r);
    }
    if rename.iter().any(|(k, v)| k != v) {
        notes.push("right operand states renamed to avoid clashes".to_string());
    }
    let rn = |q: &State| rename[q].clone();
    let b_initial: BTreeSet<State> = b_rep.initial.iter().map(rn).collect();

    let mut out = TlAutomaton::empty(
        format!("shuffle({},{})", a.name, b.name),
        a.alphabet.union(&b.alphabet),
        HeadMode::Returning,
        EndMode::Repetitive,
    );
    out.states = na.states.clone();
    out.states.extend(b_rep.states.iter().map(rn));
    out.initial = na.initial.clone();
    for q in &na.states {
        out.set_translucent(q.clone(), na.translucent(q).into_iter().chain(b.alphabet.letters().iter().copied()));
        match na.end_action(q) {
            EndAction::Accept => out.set_end(q.clone(), EndAction::Goto(b_initial.clone())),
            EndAction::Goto(t) if !t.is_empty() => out.set_end(q.clone(), EndAction::Goto(t)),
            EndAction::Goto(_) => {}
        }
    }
    for ((q, c), t) in &na.transitions {
        out.transitions.insert((q.clone(), *c), t.clone());
    }
    for q in &b_rep.states {
        out.set_translucent(rn(q), b_rep.translucent(q));
        if let Some(action) = b_rep.end_transitions.get(q) {
            let action = match action {
                EndAction::Accept => EndAction::Accept,
                EndAction::Goto(t) => EndAction::Goto(t.iter().map(rn).collect()),
            };
            out.set_end(rn(q), action);
        }
    }
    for ((q, c), t) in &b_rep.transitions {
        out.transitions.insert((rn(q), *c), t.iter().map(rn).collect());
    }
    finish("shuffle", a, d, out, notes)
}
