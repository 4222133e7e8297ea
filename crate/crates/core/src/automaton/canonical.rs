use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use super::{EndAction, State, TlAutomaton};

/// Renames states to `q0, q1, ...` in breadth-first order from the initial
/// states (declared order), visiting letter successors in alphabet order and
/// then end-marker successors. Unreachable states follow in declared order.
///
/// Empty translucency sets, empty transition sets and rejecting end entries
/// are dropped, so two automata that differ only in state names or in
/// redundant entries get identical canonical forms.
pub fn canonicalize(aut: &TlAutomaton) -> TlAutomaton {
    let position: HashMap<&str, usize> = aut
        .states
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i))
        .collect();
    let by_position = |set: &BTreeSet<State>| -> Vec<State> {
        let mut v: Vec<State> = set.iter().cloned().collect();
        v.sort_by_key(|s| position.get(s.as_str()).copied().unwrap_or(usize::MAX));
        v
    };

    let mut order: Vec<State> = Vec::with_capacity(aut.states.len());
    let mut seen: BTreeSet<State> = BTreeSet::new();
    let mut queue: VecDeque<State> = VecDeque::new();
    let roots: Vec<State> = by_position(&aut.initial)
        .into_iter()
        .chain(aut.states.iter().cloned())
        .collect();
    for root in roots {
        if !seen.insert(root.clone()) {
            continue;
        }
        queue.push_back(root);
        while let Some(q) = queue.pop_front() {
            order.push(q.clone());
            let mut next = Vec::new();
            for &a in aut.alphabet.letters() {
                next.extend(by_position(&aut.targets(&q, a)));
            }
            if let EndAction::Goto(t) = aut.end_action(&q) {
                next.extend(by_position(&t));
            }
            for p in next {
                if seen.insert(p.clone()) {
                    queue.push_back(p);
                }
            }
        }
    }

    let rename: HashMap<State, State> = order
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), format!("q{i}")))
        .collect();
    let r = |s: &State| rename.get(s).cloned().unwrap_or_else(|| s.clone());
    let rs = |set: &BTreeSet<State>| set.iter().map(r).collect::<BTreeSet<State>>();

    let mut transitions = BTreeMap::new();
    for ((s, a), t) in &aut.transitions {
        if !t.is_empty() {
            transitions.insert((r(s), *a), rs(t));
        }
    }
    let mut end_transitions = BTreeMap::new();
    for (s, action) in &aut.end_transitions {
        match action {
            EndAction::Accept => {
                end_transitions.insert(r(s), EndAction::Accept);
            }
            EndAction::Goto(t) if !t.is_empty() => {
                end_transitions.insert(r(s), EndAction::Goto(rs(t)));
            }
            EndAction::Goto(_) => {}
        }
    }

    TlAutomaton {
        name: aut.name.clone(),
        alphabet: aut.alphabet.clone(),
        head_mode: aut.head_mode,
        end_mode: aut.end_mode,
        states: order.iter().map(r).collect(),
        initial: rs(&aut.initial),
        finals: rs(&aut.finals),
        translucency: aut
            .translucency
            .iter()
            .filter(|(_, t)| !t.is_empty())
            .map(|(s, t)| (r(s), t.clone()))
            .collect(),
        transitions,
        end_transitions,
    }
}
