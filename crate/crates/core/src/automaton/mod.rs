//! The unified automaton model.
//!
//! A single [`TlAutomaton`] covers every variant of the family: the head mode
//! (returning, non-returning, rotating jump), the end mode (halting or
//! repetitive) and determinism together pick one of the ten canonical classes.
//! The structure is plain data with public fields; [`validate`] reports every
//! structural problem instead of refusing to build.

mod canonical;
mod validate;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use canonical::canonicalize;
pub use validate::{classify, validate, ClassifyError, ValidationReport, Violation};

/// A state identifier. States are opaque names.
pub type State = String;

/// A set of letters, e.g. the translucency set of a state.
pub type LetterSet = BTreeSet<char>;

/// Rendering of the end-of-tape marker.
pub const END_MARKER: &str = "<|";

/// Rendering of the empty word in text output.
pub const EMPTY_WORD: &str = "ε";

/// Letters that may never be part of an alphabet.
///
/// `<` and `|` would make the rendered end-of-tape marker ambiguous, `ε`
/// renders the empty word.
pub const RESERVED_LETTERS: &[char] = &['<', '|', 'ε'];

/// An ordered input alphabet. The declared order is the enumeration order
/// used everywhere (length-lexicographic word order, transition tie-breaks).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Alphabet(Vec<char>);

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Self {
        Alphabet(letters.into_iter().collect())
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, letter: char) -> bool {
        self.0.contains(&letter)
    }

    pub fn index_of(&self, letter: char) -> Option<usize> {
        self.0.iter().position(|&l| l == letter)
    }

    pub fn to_set(&self) -> LetterSet {
        self.0.iter().copied().collect()
    }

    /// Same letters, ignoring order.
    pub fn same_letters(&self, other: &Alphabet) -> bool {
        self.to_set() == other.to_set()
    }

    /// Letters of `self` followed by the letters of `other` not already present.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut letters = self.0.clone();
        for &l in &other.0 {
            if !letters.contains(&l) {
                letters.push(l);
            }
        }
        Alphabet(letters)
    }

    /// Checks that every letter of `word` belongs to the alphabet.
    pub fn check_word(&self, word: &str) -> Result<(), char> {
        match word.chars().find(|&c| !self.contains(c)) {
            Some(c) => Err(c),
            None => Ok(()),
        }
    }
}

impl FromIterator<char> for Alphabet {
    fn from_iter<I: IntoIterator<Item = char>>(iter: I) -> Self {
        Alphabet::new(iter)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// How the head moves after a letter has been read and deleted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HeadMode {
    /// The head returns to the leftmost remaining letter.
    Returning,
    /// The head continues right of the deleted letter.
    NonReturning,
    /// The skipped prefix is rotated to the end of the tape.
    RotatingJump,
}

/// What happens when the head sees the end-of-tape marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndMode {
    /// Halt, accepting iff the current state is final.
    Halting,
    /// Follow the end transition of the current state.
    Repetitive,
}

/// The value of the transition on the end-of-tape marker in repetitive mode.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EndAction {
    Accept,
    /// Change state (head back to the left end). An empty set rejects.
    Goto(BTreeSet<State>),
}

impl EndAction {
    pub fn reject() -> Self {
        EndAction::Goto(BTreeSet::new())
    }

    pub fn goto(state: impl Into<State>) -> Self {
        EndAction::Goto(BTreeSet::from([state.into()]))
    }

    pub fn is_accept(&self) -> bool {
        matches!(self, EndAction::Accept)
    }

    /// Target states of a state change; empty for `Accept`.
    pub fn targets(&self) -> impl Iterator<Item = &State> {
        let set = match self {
            EndAction::Accept => None,
            EndAction::Goto(t) => Some(t),
        };
        set.into_iter().flatten()
    }
}

/// An automaton with translucent letters, in any of its variants.
///
/// Missing entries in `translucency`, `transitions` and `end_transitions`
/// stand for the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlAutomaton {
    pub name: String,
    pub alphabet: Alphabet,
    pub head_mode: HeadMode,
    pub end_mode: EndMode,
    /// Declared state order.
    pub states: Vec<State>,
    pub initial: BTreeSet<State>,
    /// Only meaningful in halting mode.
    pub finals: BTreeSet<State>,
    /// Absent in rotating-jump mode.
    pub translucency: BTreeMap<State, LetterSet>,
    pub transitions: BTreeMap<(State, char), BTreeSet<State>>,
    /// Only present in repetitive mode.
    pub end_transitions: BTreeMap<State, EndAction>,
}

impl TlAutomaton {
    /// An automaton without states. It accepts nothing.
    pub fn empty(
        name: impl Into<String>,
        alphabet: Alphabet,
        head_mode: HeadMode,
        end_mode: EndMode,
    ) -> Self {
        TlAutomaton {
            name: name.into(),
            alphabet,
            head_mode,
            end_mode,
            states: Vec::new(),
            initial: BTreeSet::new(),
            finals: BTreeSet::new(),
            translucency: BTreeMap::new(),
            transitions: BTreeMap::new(),
            end_transitions: BTreeMap::new(),
        }
    }

    pub fn has_state(&self, state: &str) -> bool {
        self.states.iter().any(|s| s == state)
    }

    pub fn state_index(&self, state: &str) -> Option<usize> {
        self.states.iter().position(|s| s == state)
    }

    /// Adds a state if it is not present yet.
    pub fn add_state(&mut self, state: impl Into<State>) {
        let state = state.into();
        if !self.has_state(&state) {
            self.states.push(state);
        }
    }

    /// τ(q); empty when unset.
    pub fn translucent(&self, state: &str) -> LetterSet {
        self.translucency.get(state).cloned().unwrap_or_default()
    }

    pub fn is_translucent(&self, state: &str, letter: char) -> bool {
        self.translucency
            .get(state)
            .is_some_and(|t| t.contains(&letter))
    }

    pub fn set_translucent(&mut self, state: impl Into<State>, letters: impl IntoIterator<Item = char>) {
        let set: LetterSet = letters.into_iter().collect();
        let state = state.into();
        if set.is_empty() {
            self.translucency.remove(&state);
        } else {
            self.translucency.insert(state, set);
        }
    }

    /// δ(q,a); empty when unset.
    pub fn targets(&self, state: &str, letter: char) -> BTreeSet<State> {
        self.transitions
            .get(&(state.to_string(), letter))
            .cloned()
            .unwrap_or_default()
    }

    pub fn add_transition(&mut self, from: impl Into<State>, letter: char, to: impl Into<State>) {
        self.transitions
            .entry((from.into(), letter))
            .or_default()
            .insert(to.into());
    }

    /// δ(q,⊲); a rejecting `Goto(∅)` when unset.
    pub fn end_action(&self, state: &str) -> EndAction {
        self.end_transitions
            .get(state)
            .cloned()
            .unwrap_or_else(EndAction::reject)
    }

    pub fn set_end(&mut self, state: impl Into<State>, action: EndAction) {
        self.end_transitions.insert(state.into(), action);
    }

    /// Σ_q, the letters that can be read in `state`.
    pub fn readable(&self, state: &str) -> LetterSet {
        self.alphabet
            .letters()
            .iter()
            .copied()
            .filter(|&a| !self.targets(state, a).is_empty())
            .collect()
    }

    /// A state name not used yet, derived from `base`.
    pub fn fresh_state(&self, base: &str) -> State {
        if !self.has_state(base) {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}{}", "'".repeat(i)))
            .find(|s| !self.has_state(s))
            .expect("infinite supply of names")
    }

    /// Removes states not reachable from an initial state, keeping the declared
    /// order of the rest.
    pub fn prune_unreachable(&mut self) {
        let mut seen: BTreeSet<State> = self.initial.clone();
        let mut work: Vec<State> = self.initial.iter().cloned().collect();
        while let Some(q) = work.pop() {
            let mut next: Vec<State> = Vec::new();
            for &a in self.alphabet.letters() {
                next.extend(self.targets(&q, a));
            }
            if let Some(action) = self.end_transitions.get(&q) {
                next.extend(action.targets().cloned());
            }
            for p in next {
                if seen.insert(p.clone()) {
                    work.push(p);
                }
            }
        }
        self.states.retain(|s| seen.contains(s));
        self.finals.retain(|s| seen.contains(s));
        self.translucency.retain(|s, _| seen.contains(s));
        self.transitions.retain(|(s, _), _| seen.contains(s));
        self.end_transitions.retain(|s, _| seen.contains(s));
    }
}

/// The ten canonical classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VariantName {
    Dfawtl,
    Nfawtl,
    Rdfawtl,
    Rnfawtl,
    NrNrDfawtl,
    NrNrNfawtl,
    NrDfawtl,
    NrNfawtl,
    Rowjfa,
    Nrowjfa,
}

impl VariantName {
    pub fn of(deterministic: bool, head_mode: HeadMode, end_mode: EndMode) -> Self {
        use VariantName::*;
        match (head_mode, end_mode, deterministic) {
            (HeadMode::Returning, EndMode::Halting, true) => Dfawtl,
            (HeadMode::Returning, EndMode::Halting, false) => Nfawtl,
            (HeadMode::Returning, EndMode::Repetitive, true) => Rdfawtl,
            (HeadMode::Returning, EndMode::Repetitive, false) => Rnfawtl,
            (HeadMode::NonReturning, EndMode::Halting, true) => NrNrDfawtl,
            (HeadMode::NonReturning, EndMode::Halting, false) => NrNrNfawtl,
            (HeadMode::NonReturning, EndMode::Repetitive, true) => NrDfawtl,
            (HeadMode::NonReturning, EndMode::Repetitive, false) => NrNfawtl,
            (HeadMode::RotatingJump, _, true) => Rowjfa,
            (HeadMode::RotatingJump, _, false) => Nrowjfa,
        }
    }

    pub fn as_str(self) -> &'static str {
        use VariantName::*;
        match self {
            Dfawtl => "DFAwtl",
            Nfawtl => "NFAwtl",
            Rdfawtl => "RDFAwtl",
            Rnfawtl => "RNFAwtl",
            NrNrDfawtl => "nr-nr-DFAwtl",
            NrNrNfawtl => "nr-nr-NFAwtl",
            NrDfawtl => "nr-DFAwtl",
            NrNfawtl => "nr-NFAwtl",
            Rowjfa => "ROWJFA",
            Nrowjfa => "NROWJFA",
        }
    }
}

impl fmt::Display for VariantName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VariantDescriptor {
    pub deterministic: bool,
    pub head_mode: HeadMode,
    pub end_mode: EndMode,
    pub canonical_name: VariantName,
}

impl VariantDescriptor {
    pub fn new(deterministic: bool, head_mode: HeadMode, end_mode: EndMode) -> Self {
        VariantDescriptor {
            deterministic,
            head_mode,
            end_mode,
            canonical_name: VariantName::of(deterministic, head_mode, end_mode),
        }
    }
}

impl fmt::Display for VariantDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.canonical_name.as_str())
    }
}
