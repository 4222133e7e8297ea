//! A deliberately naive membership oracle.
//!
//! It works on `char` vectors straight from the [`TlAutomaton`] tables and
//! shares no code with the execution engine, so the two can be checked
//! against each other.

use std::collections::HashSet;

use crate::automaton::{EndAction, EndMode, HeadMode};
use crate::TlAutomaton;

use super::OracleError;

pub const BRUTE_MAX_LEN: usize = 12;

type Key = (Vec<char>, String, Vec<char>);

/// Depth-first search over every computation, with a visited set so marker
/// loops and jump cycles terminate.
pub fn brute_accepts(aut: &TlAutomaton, word: &str) -> Result<bool, OracleError> {
    let w: Vec<char> = word.chars().collect();
    if w.len() > BRUTE_MAX_LEN {
        return Err(OracleError::LengthGuard { len: w.len() });
    }
    if let Err(c) = aut.alphabet.check_word(word) {
        return Err(crate::exec::ExecError::LetterOutsideAlphabet(c).into());
    }
    let mut seen = HashSet::new();
    Ok(aut
        .initial
        .iter()
        .any(|q| explore(aut, Vec::new(), q, w.clone(), &mut seen)))
}

fn explore(aut: &TlAutomaton, prefix: Vec<char>, q: &str, rest: Vec<char>, seen: &mut HashSet<Key>) -> bool {
    if !seen.insert((prefix.clone(), q.to_string(), rest.clone())) {
        return false;
    }
    if aut.head_mode == HeadMode::RotatingJump {
        let Some(i) = rest.iter().position(|&c| !aut.targets(q, c).is_empty()) else {
            return rest.is_empty() && aut.finals.contains(q);
        };
        let mut rotated = rest[i + 1..].to_vec();
        rotated.extend_from_slice(&rest[..i]);
        return aut
            .targets(q, rest[i])
            .iter()
            .any(|p| explore(aut, Vec::new(), p, rotated.clone(), seen));
    }

    let tau = aut.translucent(q);
    match rest.iter().position(|c| !tau.contains(c)) {
        Some(i) => {
            let a = rest[i];
            aut.targets(q, a).iter().any(|p| {
                if aut.head_mode == HeadMode::NonReturning {
                    let mut skipped = prefix.clone();
                    skipped.extend_from_slice(&rest[..i]);
                    explore(aut, skipped, p, rest[i + 1..].to_vec(), seen)
                } else {
                    let mut left = rest.clone();
                    left.remove(i);
                    explore(aut, Vec::new(), p, left, seen)
                }
            })
        }
        None => match aut.end_mode {
            EndMode::Halting => aut.finals.contains(q),
            EndMode::Repetitive => match aut.end_action(q) {
                EndAction::Accept => true,
                EndAction::Goto(targets) => {
                    let mut tape = prefix.clone();
                    tape.extend_from_slice(&rest);
                    targets
                        .iter()
                        .any(|p| explore(aut, Vec::new(), p, tape.clone(), seen))
                }
            },
        },
    }
}
