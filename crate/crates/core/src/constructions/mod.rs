//! Automaton-to-automaton transformations.
//!
//! Every construction returns the new automaton together with a
//! [`ConstructionReport`]. Constructions that need a normalized input (no
//! end-marker loops, acceptance only on an empty tape) normalize it
//! themselves and say so in the report notes.

mod complement;
mod embed;
mod first_letter;
mod nonreturning;
mod normalize;
mod nrnr;
mod plain;
mod shuffle;

use std::collections::BTreeSet;
use std::fmt;

use crate::automaton::{classify, EndMode, HeadMode, LetterSet, State, ValidationReport, VariantDescriptor};
use crate::TlAutomaton;

pub use complement::complement_deterministic;
pub use embed::embed_repetitive;
pub use first_letter::{first_letter_normalize, left_quotient};
pub use nonreturning::repetitive_to_nonreturning;
pub use normalize::{complete_reading, eliminate_end_loops, normalize};
pub use nrnr::nrnr_to_nfa;
pub use plain::repetitive_to_plain;
pub use shuffle::disjoint_shuffle;

#[derive(Debug, Clone, thiserror::Error)]
pub enum ConstructionError {
    #[error("invalid input automaton:\n{0}")]
    Invalid(ValidationReport),
    #[error("{construction} expects {expected}, got {found}")]
    WrongVariant {
        construction: &'static str,
        expected: &'static str,
        found: VariantDescriptor,
    },
    #[error("{0} needs a deterministic automaton")]
    NotDeterministic(&'static str),
    #[error("alphabets overlap in {0:?}")]
    AlphabetOverlap(Vec<char>),
    #[error("letter '{0}' is not in the alphabet")]
    LetterOutsideAlphabet(char),
}

/// What a construction did.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionReport {
    pub construction: &'static str,
    pub input_descriptor: VariantDescriptor,
    pub output_descriptor: VariantDescriptor,
    pub input_states: usize,
    pub output_states: usize,
    /// `output_states / input_states` (input counted as at least 1).
    pub state_blowup: f64,
    pub notes: Vec<String>,
}

impl fmt::Display for ConstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "construction: {}", self.construction)?;
        writeln!(f, "input: {} ({} states)", self.input_descriptor, self.input_states)?;
        writeln!(f, "output: {} ({} states)", self.output_descriptor, self.output_states)?;
        writeln!(f, "state blowup: {:.2}", self.state_blowup)?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// A constructed automaton with its report.
#[derive(Clone, Debug)]
pub struct Construction {
    pub automaton: TlAutomaton,
    pub report: ConstructionReport,
}

pub type Result<T, E = ConstructionError> = std::result::Result<T, E>;

pub(crate) fn descriptor(aut: &TlAutomaton) -> Result<VariantDescriptor> {
    classify(aut).map_err(|e| ConstructionError::Invalid(e.0))
}

/// Checks head and end mode; `None` accepts any.
pub(crate) fn expect(
    construction: &'static str,
    expected: &'static str,
    aut: &TlAutomaton,
    head: &[HeadMode],
    end: &[EndMode],
) -> Result<VariantDescriptor> {
    let d = descriptor(aut)?;
    if !head.contains(&d.head_mode) || !end.contains(&d.end_mode) {
        return Err(ConstructionError::WrongVariant {
            construction,
            expected,
            found: d,
        });
    }
    Ok(d)
}

pub(crate) fn finish(
    construction: &'static str,
    input: &TlAutomaton,
    input_descriptor: VariantDescriptor,
    automaton: TlAutomaton,
    notes: Vec<String>,
) -> Result<Construction> {
    let output_descriptor = descriptor(&automaton)?;
    let input_states = input.states.len();
    let output_states = automaton.states.len();
    Ok(Construction {
        report: ConstructionReport {
            construction,
            input_descriptor,
            output_descriptor,
            input_states,
            output_states,
            state_blowup: output_states as f64 / input_states.max(1) as f64,
            notes,
        },
        automaton,
    })
}

/// Joins states in the declared order of `aut`, e.g. `q0,q3`.
pub(crate) fn state_list(aut: &TlAutomaton, set: &BTreeSet<State>) -> String {
    aut.states
        .iter()
        .filter(|s| set.contains(*s))
        .cloned()
        .collect::<Vec<_>>()
        .join(",")
}

/// Joins letters in alphabet order, e.g. `a,b`.
pub(crate) fn letter_list(aut: &TlAutomaton, set: &LetterSet) -> String {
    aut.alphabet
        .letters()
        .iter()
        .filter(|a| set.contains(a))
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// A name not yet used in `aut` nor in `taken`.
pub(crate) fn fresh_name(aut: &TlAutomaton, taken: &BTreeSet<State>, base: &str) -> State {
    (0..)
        .map(|i| format!("{base}{}", "'".repeat(i)))
        .find(|s| !aut.has_state(s) && !taken.contains(s))
        .expect("infinite supply of names")
}

#[cfg(test)]
mod tests;
