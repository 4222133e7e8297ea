use std::collections::{BTreeSet, VecDeque};

use crate::automaton::{EndAction, EndMode, HeadMode, LetterSet, State};
use crate::TlAutomaton;

use super::{expect, finish, letter_list, normalize, Construction, Result};

type Node = (State, LetterSet);

/// Converts a returning repetitive automaton into a halting one.
///
/// The input is normalized first. States of the result are pairs `(q,Γ)`
/// where `Γ` is the set of letters that may still be on the tape. An
/// end-marker move `q → q'` is only possible when the tape is in `τ(q)*`, so
/// it is folded into the letter read that entered `q`: that read may also go
/// to `(q', Γ ∩ τ(q))`. Chains of marker moves are folded transitively. A
/// wrong guess leaves a letter outside `Γ` on the tape, which can never be
/// read. `(q,Γ)` is final iff `q` accepts at the marker.
pub fn repetitive_to_plain(aut: &TlAutomaton) -> Result<Construction> {
    let d = expect("to-plain", "RDFAwtl or RNFAwtl", aut, &[HeadMode::Returning], &[EndMode::Repetitive])?;
    let normal = normalize(aut)?;
    let n = &normal.automaton;
    let name = |(q, g): &Node| format!("({q}|G:{})", letter_list(n, g));

    // (q,Γ) together with every pair reachable from it by marker moves.
    let closure = |start: Node| -> Vec<Node> {
        let mut out = vec![start.clone()];
        let mut seen: BTreeSet<Node> = BTreeSet::from([start.clone()]);
        let mut stack = vec![start];
        while let Some((q, g)) = stack.pop() {
            if let EndAction::Goto(targets) = n.end_action(&q) {
                let g2: LetterSet = g.intersection(&n.translucent(&q)).copied().collect();
                for p in targets {
                    let node = (p, g2.clone());
                    if seen.insert(node.clone()) {
                        out.push(node.clone());
                        stack.push(node);
                    }
                }
            }
        }
        out
    };

    let mut out = TlAutomaton::empty(format!("{}.plain", aut.name), aut.alphabet.clone(), HeadMode::Returning, EndMode::Halting);
    let mut seen: BTreeSet<Node> = BTreeSet::new();
    let mut queue: VecDeque<Node> = VecDeque::new();
    let sigma = aut.alphabet.to_set();
    for q in n.states.iter().filter(|q| n.initial.contains(*q)) {
        for node in closure((q.clone(), sigma.clone())) {
            out.initial.insert(name(&node));
            if seen.insert(node.clone()) {
                queue.push_back(node);
            }
        }
    }
    while let Some(node) = queue.pop_front() {
        let me = name(&node);
        let (q, g) = &node;
        out.add_state(me.clone());
        let tau: LetterSet = n.translucent(q).intersection(g).copied().collect();
        out.set_translucent(me.clone(), tau);
        if n.end_action(q).is_accept() {
            out.finals.insert(me.clone());
        }
        for &a in aut.alphabet.letters().iter().filter(|a| g.contains(a)) {
            for p in n.targets(q, a) {
                for next in closure((p, g.clone())) {
                    out.add_transition(me.clone(), a, name(&next));
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    let notes = vec![format!("input normalized first ({} states)", n.states.len())];
    finish("to-plain", aut, d, out, notes)
}
