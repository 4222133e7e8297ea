//! Single-step semantics, full runs and traces.
//!
//! * Returning mode reads the leftmost letter that is not translucent for the
//!   current state and returns the head to the left end.
//! * Non-returning mode keeps reading to the right; skipped letters become the
//!   consumed prefix until an end-marker move puts them back in front.
//! * Rotating-jump mode reads the leftmost readable letter and moves the
//!   skipped prefix to the end of the tape.

mod machine;
mod trace;

use std::fmt;

use crate::automaton::{HeadMode, ValidationReport};

pub use machine::{Machine, SearchLimits, SearchOutcome};
pub(crate) use machine::Step;
pub use trace::render_trace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExecError {
    #[error("invalid automaton:\n{0}")]
    Invalid(ValidationReport),
    #[error("letter '{0}' is not in the alphabet")]
    LetterOutsideAlphabet(char),
    #[error("unknown state {0}")]
    UnknownState(String),
    #[error("malformed configuration: {0}")]
    MalformedConfiguration(String),
    #[error("automaton is not deterministic")]
    NotDeterministic,
    #[error("step limit exhausted before a verdict")]
    StepLimit,
}

/// A tape snapshot `x q w <|`. The prefix `x` is only used in non-returning
/// mode, where the head sits between prefix and remaining word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub consumed_prefix: String,
    pub state: String,
    pub remaining: String,
}

impl Configuration {
    pub fn new(state: impl Into<String>, remaining: impl Into<String>) -> Self {
        Configuration {
            consumed_prefix: String::new(),
            state: state.into(),
            remaining: remaining.into(),
        }
    }

    pub fn with_prefix(
        prefix: impl Into<String>,
        state: impl Into<String>,
        remaining: impl Into<String>,
    ) -> Self {
        Configuration {
            consumed_prefix: prefix.into(),
            state: state.into(),
            remaining: remaining.into(),
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.consumed_prefix.is_empty() {
            write!(f, "{} ", self.consumed_prefix)?;
        }
        write!(f, "{} {}{}", self.state, self.remaining, crate::automaton::END_MARKER)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Accept,
    Reject,
    /// A caller-supplied bound ran out.
    StepLimit,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Accept => "Accept",
            Verdict::Reject => "Reject",
            Verdict::StepLimit => "StepLimit",
        })
    }
}

/// How a configuration was left. `position` is the offset of the read letter
/// in the current tape contents (prefix included).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    ReadLetter { letter: char, position: usize },
    EndMarkerMove,
    Terminal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub config: Configuration,
    pub kind: StepKind,
}

/// A computation: every configuration with the step taken from it. Exactly
/// the last entry is `Terminal`, and it is followed by the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub head_mode: HeadMode,
    pub steps: Vec<TraceStep>,
    pub verdict: Verdict,
}

impl Trace {
    /// Number of computation steps, counting the final verdict step.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn last_config(&self) -> &Configuration {
        &self.steps.last().expect("traces are never empty").config
    }

    /// `(state, letter, tape position)` of every letter read, in order.
    pub fn reads(&self) -> Vec<(String, char, usize)> {
        self.steps
            .iter()
            .filter_map(|s| match s.kind {
                StepKind::ReadLetter { letter, position } => {
                    Some((s.config.state.clone(), letter, position))
                }
                _ => None,
            })
            .collect()
    }

    /// Input positions of the letters read, obtained by replaying the
    /// deletions (and rotations) on the original positions.
    pub fn input_positions(&self) -> Vec<usize> {
        let Some(first) = self.steps.first() else {
            return Vec::new();
        };
        let n = first.config.consumed_prefix.chars().count() + first.config.remaining.chars().count();
        let mut tape: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        for s in &self.steps {
            if let StepKind::ReadLetter { position, .. } = s.kind {
                out.push(tape[position]);
                if self.head_mode == HeadMode::RotatingJump {
                    let mut rotated = tape[position + 1..].to_vec();
                    rotated.extend_from_slice(&tape[..position]);
                    tape = rotated;
                } else {
                    tape.remove(position);
                }
            }
        }
        out
    }
}

/// Result of a single step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepResult {
    Verdict(Verdict),
    Successors(Vec<(StepKind, Configuration)>),
}

/// All one-step successors of `cfg`, or the verdict reached from it.
pub fn step(aut: &crate::TlAutomaton, cfg: &Configuration) -> Result<StepResult, ExecError> {
    let m = Machine::new(aut)?;
    let tape = m.tape_of(cfg)?;
    Ok(match m.successors(&tape) {
        Step::Halt(v) => StepResult::Verdict(v),
        Step::Moves(moves) => StepResult::Successors(
            moves
                .into_iter()
                .map(|(mv, t)| (m.to_kind(mv), m.to_configuration(&t)))
                .collect(),
        ),
    })
}

/// The computation of a deterministic automaton on `word`. Without an explicit
/// limit, [`Machine::default_step_limit`] is used.
pub fn run_deterministic(
    aut: &crate::TlAutomaton,
    word: &str,
    step_limit: Option<usize>,
) -> Result<Trace, ExecError> {
    Machine::new(aut)?.run_deterministic(word, step_limit)
}

pub fn run_nondeterministic(
    aut: &crate::TlAutomaton,
    word: &str,
    limits: SearchLimits,
) -> Result<SearchOutcome, ExecError> {
    Machine::new(aut)?.run_nondeterministic(word, limits)
}

/// Membership test with default limits.
pub fn accepts(aut: &crate::TlAutomaton, word: &str) -> Result<bool, ExecError> {
    Machine::new(aut)?.accepts(word)
}
