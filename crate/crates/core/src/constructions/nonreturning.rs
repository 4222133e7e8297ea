use std::collections::{BTreeMap, BTreeSet};

use crate::automaton::{EndAction, EndMode, HeadMode, State};
use crate::TlAutomaton;

use super::{expect, fresh_name, finish, Construction, Result};

/// Simulates a returning repetitive automaton by a non-returning one.
///
/// Every state `q` gets a primed copy `q'` that is translucent for the whole
/// alphabet and jumps back to `q` at the end marker. A letter read now leads
/// into the primed copy of its target, so the head runs to the marker and
/// starts over at the left end, exactly like a returning head.
pub fn repetitive_to_nonreturning(aut: &TlAutomaton) -> Result<Construction> {
    let d = expect(
        "to-nonreturning",
        "RDFAwtl or RNFAwtl",
        aut,
        &[HeadMode::Returning],
        &[EndMode::Repetitive],
    )?;
    let mut taken = BTreeSet::new();
    let mut primed: BTreeMap<&State, State> = BTreeMap::new();
    for q in &aut.states {
        let p = fresh_name(aut, &taken, &format!("{q}'"));
        taken.insert(p.clone());
        primed.insert(q, p);
    }

    let mut out = TlAutomaton::empty(
        format!("{}.nr", aut.name),
        aut.alphabet.clone(),
        HeadMode::NonReturning,
        EndMode::Repetitive,
    );
    out.states = aut.states.clone();
    out.states.extend(aut.states.iter().map(|q| primed[q].clone()));
    out.initial = aut.initial.clone();
    out.translucency = aut.translucency.clone();
    for q in &aut.states {
        let p = &primed[q];
        out.set_translucent(p.clone(), aut.alphabet.letters().iter().copied());
        out.set_end(p.clone(), EndAction::goto(q.clone()));
        if let Some(action) = aut.end_transitions.get(q) {
            out.set_end(q.clone(), action.clone());
        }
    }
    for ((q, a), targets) in &aut.transitions {
        for t in targets {
            out.add_transition(q.clone(), *a, primed[t].clone());
        }
    }
    finish("to-nonreturning", aut, d, out, Vec::new())
}
