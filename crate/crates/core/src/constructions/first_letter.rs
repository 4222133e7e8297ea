use std::collections::{BTreeSet, VecDeque};

use crate::automaton::{EndAction, EndMode, HeadMode, State, VariantDescriptor};
use crate::TlAutomaton;

use super::{embed_repetitive, expect, finish, fresh_name, normalize, Construction, ConstructionError, Result};

/// Embeds halting input, checks determinism and normalizes.
fn prepare(construction: &'static str, aut: &TlAutomaton) -> Result<(VariantDescriptor, TlAutomaton, Vec<String>)> {
    let d = expect(
        construction,
        "DFAwtl or RDFAwtl",
        aut,
        &[HeadMode::Returning],
        &[EndMode::Halting, EndMode::Repetitive],
    )?;
    if !d.deterministic {
        return Err(ConstructionError::NotDeterministic(construction));
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
    Ok((d, normal, notes))
}

fn re_entered(aut: &TlAutomaton, q: &str) -> bool {
    aut.transitions.values().any(|t| t.contains(q))
        || aut.end_transitions.values().any(|e| e.targets().any(|p| p == q))
}

/// The pairing step on a normalized deterministic automaton.
fn pair_first_letter(n: &TlAutomaton, notes: &mut Vec<String>) -> TlAutomaton {
    let mut m = n.clone();
    let Some(q0) = n.initial.iter().next().cloned() else {
        return m;
    };
    let start = if re_entered(n, &q0) {
        let copy = fresh_name(n, &BTreeSet::new(), &format!("({q0}|init)"));
        m.states.insert(0, copy.clone());
        m.set_translucent(copy.clone(), n.translucent(&q0));
        for &a in n.alphabet.letters() {
            for p in n.targets(&q0, a) {
                m.add_transition(copy.clone(), a, p);
            }
        }
        if let Some(action) = n.end_transitions.get(&q0) {
            m.set_end(copy.clone(), action.clone());
        }
        m.initial = BTreeSet::from([copy.clone()]);
        notes.push(format!("initial state {q0} is re-entered and was split into {copy}"));
        copy
    } else {
        q0
    };

    let pair = |q: &State, a: char| format!("({q}|L:{a})");
    let mut out = m.clone();
    out.name = format!("{}.first", n.name);
    out.set_translucent(start.clone(), []);
    let mut queue: VecDeque<(State, char)> = VecDeque::new();
    let mut seen: BTreeSet<(State, char)> = BTreeSet::new();
    for &a in m.alphabet.letters() {
        if m.is_translucent(&start, a) {
            out.transitions.insert((start.clone(), a), BTreeSet::from([pair(&start, a)]));
            if seen.insert((start.clone(), a)) {
                queue.push_back((start.clone(), a));
            }
        }
    }

    // (q,a): `m` is in q and the swallowed a ∈ τ(q) still sits in front of
    // the tape. After a move to p the a is read at once unless a ∈ τ(p).
    while let Some((q, a)) = queue.pop_front() {
        let me = pair(&q, a);
        out.add_state(me.clone());
        out.set_translucent(me.clone(), m.translucent(&q));
        let mut after = |p: State, queue: &mut VecDeque<(State, char)>| -> BTreeSet<State> {
            if m.is_translucent(&p, a) {
                if seen.insert((p.clone(), a)) {
                    queue.push_back((p.clone(), a));
                }
                BTreeSet::from([pair(&p, a)])
            } else {
                m.targets(&p, a)
            }
        };
        for &b in m.alphabet.letters() {
            if m.is_translucent(&q, b) {
                continue;
            }
            let targets: BTreeSet<State> = m
                .targets(&q, b)
                .into_iter()
                .flat_map(|p| after(p, &mut queue))
                .collect();
            if !targets.is_empty() {
                out.transitions.insert((me.clone(), b), targets);
            }
        }
        match m.end_action(&q) {
            EndAction::Accept => out.set_end(me, EndAction::Accept),
            EndAction::Goto(t) => {
                let targets: BTreeSet<State> = t.into_iter().flat_map(|p| after(p, &mut queue)).collect();
                if !targets.is_empty() {
                    out.set_end(me, EndAction::Goto(targets));
                }
            }
        }
    }
    notes.push(format!(
        "{} pair state(s); each pair (q,a) has a ∈ τ(q), so a second a is translucent there and the (q,a),a case never arises",
        seen.len()
    ));
    out
}

/// An equivalent deterministic automaton whose first step reads input
/// position 0.
///
/// The initial state (split off if it is re-entered) loses its translucent
/// letters. Reading a letter `a` that used to be translucent moves to a pair
/// state `(q0,a)`, which runs the original automaton while remembering that
/// `a` is still virtually in front of the tape.
pub fn first_letter_normalize(aut: &TlAutomaton) -> Result<Construction> {
    let (d, normal, mut notes) = prepare("first-letter", aut)?;
    let out = pair_first_letter(&normal, &mut notes);
    finish("first-letter", aut, d, out, notes)
}

fn dead(aut: &TlAutomaton, name: String) -> TlAutomaton {
    let mut out = TlAutomaton::empty(name, aut.alphabet.clone(), HeadMode::Returning, EndMode::Repetitive);
    out.add_state("dead");
    out.initial.insert("dead".into());
    out
}

/// `word⟍L`: for each letter, apply the first-letter construction and make
/// the target of the initial state's move on that letter the new initial
/// state.
pub fn left_quotient(aut: &TlAutomaton, word: &str) -> Result<Construction> {
    if let Err(c) = aut.alphabet.check_word(word) {
        return Err(ConstructionError::LetterOutsideAlphabet(c));
    }
    let (d, mut cur, mut notes) = prepare("quotient", aut)?;
    let name = format!("{}.quotient({word})", aut.name);
    for a in word.chars() {
        let mut paired = pair_first_letter(&cur, &mut notes);
        let Some(q0) = paired.initial.iter().next().cloned() else {
            cur = dead(aut, name.clone());
            break;
        };
        let targets = paired.targets(&q0, a);
        let Some(next) = targets.into_iter().next() else {
            notes.push(format!("no move on '{a}' from the initial state: empty language"));
            cur = dead(aut, name.clone());
            break;
        };
        paired.initial = BTreeSet::from([next]);
        paired.prune_unreachable();
        cur = paired;
    }
    cur.name = name;
    finish("quotient", aut, d, cur, notes)
}
