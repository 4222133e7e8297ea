use std::collections::BTreeSet;
use std::fmt;

use super::{EndMode, HeadMode, TlAutomaton, VariantDescriptor, RESERVED_LETTERS};

/// Largest supported alphabet; letter sets are compiled to 64-bit masks.
pub const MAX_ALPHABET: usize = 64;

/// A single broken structural invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateLetter(char),
    ReservedLetter(char),
    AlphabetTooLarge(usize),
    EmptyAlphabet,
    DuplicateState(String),
    BadStateName(String),
    NoInitialState,
    UnknownState { field: &'static str, state: String },
    UnknownLetter { field: &'static str, letter: char },
    TranslucencyBlocking { state: String, letter: char },
    FinalsInRepetitiveMode,
    EndTransitionsInHaltingMode,
    TranslucencyInJumpMode,
    RepetitiveJumpMode,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            DuplicateLetter(c) => write!(f, "duplicate letter '{c}' in alphabet"),
            ReservedLetter(c) => write!(f, "reserved letter '{c}' in alphabet"),
            AlphabetTooLarge(n) => {
                write!(f, "alphabet has {n} letters, at most {MAX_ALPHABET} are supported")
            }
            EmptyAlphabet => write!(f, "empty alphabet with letter transitions"),
            DuplicateState(s) => write!(f, "duplicate state {s}"),
            BadStateName(s) => write!(f, "invalid state name {s:?}"),
            NoInitialState => write!(f, "no initial state"),
            UnknownState { field, state } => write!(f, "unknown state {state} in {field}"),
            UnknownLetter { field, letter } => write!(f, "unknown letter '{letter}' in {field}"),
            TranslucencyBlocking { state, letter } => {
                write!(f, "translucency blocking at ({state},{letter})")
            }
            FinalsInRepetitiveMode => write!(f, "repetitive automaton declares final states"),
            EndTransitionsInHaltingMode => {
                write!(f, "halting automaton declares end-marker transitions")
            }
            TranslucencyInJumpMode => {
                write!(f, "rotating-jump automaton declares translucent letters")
            }
            RepetitiveJumpMode => write!(f, "rotating-jump automaton must use halting end mode"),
        }
    }
}

/// All violations found by [`validate`]; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, thiserror::Error)]
#[error("invalid automaton:\n{0}")]
pub struct ClassifyError(pub ValidationReport);

/// Checks every structural invariant of the model.
pub fn validate(aut: &TlAutomaton) -> ValidationReport {
    let mut out = Vec::new();

    let mut letters = BTreeSet::new();
    for &c in aut.alphabet.letters() {
        if !letters.insert(c) {
            out.push(Violation::DuplicateLetter(c));
        }
        if RESERVED_LETTERS.contains(&c) || c.is_whitespace() || c.is_control() {
            out.push(Violation::ReservedLetter(c));
        }
    }
    if letters.len() > MAX_ALPHABET {
        out.push(Violation::AlphabetTooLarge(letters.len()));
    }
    if letters.is_empty() && !aut.transitions.is_empty() {
        out.push(Violation::EmptyAlphabet);
    }

    let mut states = BTreeSet::new();
    for s in &aut.states {
        if !states.insert(s.as_str()) {
            out.push(Violation::DuplicateState(s.clone()));
        }
        if s.is_empty() || s.chars().any(|c| c.is_whitespace() || c.is_control()) {
            out.push(Violation::BadStateName(s.clone()));
        }
    }
    let check_state = |out: &mut Vec<Violation>, field: &'static str, s: &str| {
        if !states.contains(s) {
            out.push(Violation::UnknownState {
                field,
                state: s.to_string(),
            });
        }
    };

    if !aut.states.is_empty() && aut.initial.is_empty() {
        out.push(Violation::NoInitialState);
    }
    for s in &aut.initial {
        check_state(&mut out, "initial", s);
    }
    for s in &aut.finals {
        check_state(&mut out, "finals", s);
    }
    for (s, set) in &aut.translucency {
        check_state(&mut out, "translucency", s);
        for &c in set {
            if !letters.contains(&c) {
                out.push(Violation::UnknownLetter {
                    field: "translucency",
                    letter: c,
                });
            }
        }
    }
    for ((s, a), targets) in &aut.transitions {
        check_state(&mut out, "transitions", s);
        if !letters.contains(a) {
            out.push(Violation::UnknownLetter {
                field: "transitions",
                letter: *a,
            });
        }
        for t in targets {
            check_state(&mut out, "transitions", t);
        }
        if !targets.is_empty() && aut.is_translucent(s, *a) {
            out.push(Violation::TranslucencyBlocking {
                state: s.clone(),
                letter: *a,
            });
        }
    }
    for (s, action) in &aut.end_transitions {
        check_state(&mut out, "end_transitions", s);
        for t in action.targets() {
            check_state(&mut out, "end_transitions", t);
        }
    }

    match aut.end_mode {
        EndMode::Repetitive if !aut.finals.is_empty() => out.push(Violation::FinalsInRepetitiveMode),
        EndMode::Halting if !aut.end_transitions.is_empty() => {
            out.push(Violation::EndTransitionsInHaltingMode)
        }
        _ => {}
    }
    if aut.head_mode == HeadMode::RotatingJump {
        if aut.translucency.values().any(|t| !t.is_empty()) {
            out.push(Violation::TranslucencyInJumpMode);
        }
        if aut.end_mode == EndMode::Repetitive {
            out.push(Violation::RepetitiveJumpMode);
        }
    }

    ValidationReport { violations: out }
}

/// Determinism and canonical class of a valid automaton.
pub fn classify(aut: &TlAutomaton) -> Result<VariantDescriptor, ClassifyError> {
    let report = validate(aut);
    if !report.is_valid() {
        return Err(ClassifyError(report));
    }
    let deterministic = aut.initial.len() == 1
        && aut.transitions.values().all(|t| t.len() <= 1)
        && aut.end_transitions.values().all(|a| a.targets().count() <= 1);
    Ok(VariantDescriptor::new(
        deterministic,
        aut.head_mode,
        aut.end_mode,
    ))
}
