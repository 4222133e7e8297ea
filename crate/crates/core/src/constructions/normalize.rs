use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::automaton::{EndAction, EndMode, HeadMode, State};
use crate::TlAutomaton;

use super::{expect, finish, fresh_name, state_list, Construction, Result};

const REPETITIVE: &[EndMode] = &[EndMode::Repetitive];
const LINEAR_HEADS: &[HeadMode] = &[HeadMode::Returning, HeadMode::NonReturning];

/// Removes infinite computations at the end marker.
///
/// States become pairs `(q,S)` where `S` is the set of states left by an
/// end-marker move since the last letter was read. Reading a letter resets
/// `S`; a marker move out of `q` is dropped when `q ∈ S`, because the tape is
/// unchanged and the computation would repeat. Only reachable pairs are built.
pub fn eliminate_end_loops(aut: &TlAutomaton) -> Result<Construction> {
    let d = expect("eliminate-loops", "a repetitive automaton", aut, LINEAR_HEADS, REPETITIVE)?;
    let name = |q: &State, s: &BTreeSet<State>| format!("({q}|S:{})", state_list(aut, s));

    let mut out = TlAutomaton::empty(format!("{}.noloop", aut.name), aut.alphabet.clone(), aut.head_mode, EndMode::Repetitive);
    let mut queue: VecDeque<(State, BTreeSet<State>)> = VecDeque::new();
    let mut seen: BTreeSet<(State, BTreeSet<State>)> = BTreeSet::new();
    let mut push = |q: &State, s: BTreeSet<State>, queue: &mut VecDeque<_>| {
        let key = (q.clone(), s);
        let n = name(&key.0, &key.1);
        if seen.insert(key.clone()) {
            queue.push_back(key);
        }
        n
    };

    for q in aut.states.iter().filter(|q| aut.initial.contains(*q)) {
        let n = push(q, BTreeSet::new(), &mut queue);
        out.initial.insert(n);
    }
    let mut blocked = 0usize;
    while let Some((q, s)) = queue.pop_front() {
        let me = name(&q, &s);
        out.add_state(me.clone());
        out.set_translucent(me.clone(), aut.translucent(&q));
        for &a in aut.alphabet.letters() {
            for p in aut.targets(&q, a) {
                let n = push(&p, BTreeSet::new(), &mut queue);
                out.add_transition(me.clone(), a, n);
            }
        }
        match aut.end_action(&q) {
            EndAction::Accept => out.set_end(me, EndAction::Accept),
            EndAction::Goto(targets) if !targets.is_empty() => {
                if s.contains(&q) {
                    blocked += 1;
                    continue;
                }
                let mut s2 = s.clone();
                s2.insert(q.clone());
                let goto: BTreeSet<State> = targets
                    .iter()
                    .map(|p| push(p, s2.clone(), &mut queue))
                    .collect();
                out.set_end(me, EndAction::Goto(goto));
            }
            EndAction::Goto(_) => {}
        }
    }
    let notes = vec![format!("{blocked} end-marker loop(s) cut")];
    finish("eliminate-loops", aut, d, out, notes)
}

/// Makes every accepting computation read the whole tape: each `Accept` at
/// the end marker becomes a move into a fresh sink that reads all letters and
/// then accepts.
pub fn complete_reading(aut: &TlAutomaton) -> Result<Construction> {
    let d = expect("complete-reading", "a repetitive automaton", aut, LINEAR_HEADS, REPETITIVE)?;
    let (out, _) = add_reading_sink(aut, "q_e");
    finish("complete-reading", aut, d, out, Vec::new())
}

/// Adds a sink `q_e` (τ = ∅, loops on every letter, accepts at the marker)
/// and reroutes all marker `Accept`s into it.
fn add_reading_sink(aut: &TlAutomaton, base: &str) -> (TlAutomaton, State) {
    let mut out = aut.clone();
    out.name = format!("{}.complete", aut.name);
    let sink = fresh_name(aut, &BTreeSet::new(), base);
    let mut ends: BTreeMap<State, EndAction> = BTreeMap::new();
    for (q, action) in &aut.end_transitions {
        let action = if action.is_accept() {
            EndAction::goto(sink.clone())
        } else {
            action.clone()
        };
        ends.insert(q.clone(), action);
    }
    out.end_transitions = ends;
    out.add_state(sink.clone());
    for &a in aut.alphabet.letters() {
        out.add_transition(sink.clone(), a, sink.clone());
    }
    out.set_end(sink.clone(), EndAction::Accept);
    (out, sink)
}

/// Loop elimination followed by complete reading: the result has no infinite
/// computation and accepts only on an empty tape.
pub fn normalize(aut: &TlAutomaton) -> Result<Construction> {
    let d = expect("normalize", "a repetitive automaton", aut, LINEAR_HEADS, REPETITIVE)?;
    let loops = eliminate_end_loops(aut)?;
    let (mut out, _) = add_reading_sink(&loops.automaton, "q_e");
    out.name = format!("{}.normal", aut.name);
    finish("normalize", aut, d, out, loops.report.notes)
}
