//! Bounded ground truth: predicate languages, length-lexicographic
//! enumeration, bounded equivalence and an independent brute-force
//! membership oracle.

mod brute;
mod language;

use std::fmt;

use crate::automaton::Alphabet;
use crate::exec::{ExecError, Machine};
use crate::TlAutomaton;

pub use brute::{brute_accepts, BRUTE_MAX_LEN};
pub use language::{builtin_language, LanguageSpec, BUILTIN_NAMES};

/// Most words [`enumerate`] and [`equivalent_up_to`] will look at.
pub const ENUMERATION_GUARD: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("unknown language {0:?}")]
    UnknownLanguage(String),
    #[error("cannot parse language expression {expr:?}: {message}")]
    Expression { expr: String, message: String },
    #[error("{words} words up to length {max_len} exceed the enumeration guard of {ENUMERATION_GUARD}")]
    GuardExceeded { words: u128, max_len: usize },
    #[error("alphabets differ: {left} vs {right}")]
    AlphabetMismatch { left: Alphabet, right: Alphabet },
    #[error("word of length {len} exceeds the brute-force limit of {BRUTE_MAX_LEN}")]
    LengthGuard { len: usize },
    #[error(transparent)]
    Exec(#[from] ExecError),
}

/// Something with a membership test: an automaton or a predicate language.
#[derive(Clone)]
pub enum Source {
    Automaton(TlAutomaton),
    Language(LanguageSpec),
}

impl Source {
    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Source::Automaton(a) => &a.alphabet,
            Source::Language(l) => &l.alphabet,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Source::Automaton(a) => &a.name,
            Source::Language(l) => &l.name,
        }
    }

    fn tester(&self) -> Result<Tester<'_>, OracleError> {
        Ok(match self {
            Source::Automaton(a) => Tester::Machine(Machine::new(a)?),
            Source::Language(l) => Tester::Language(l),
        })
    }
}

impl From<TlAutomaton> for Source {
    fn from(a: TlAutomaton) -> Self {
        Source::Automaton(a)
    }
}

impl From<LanguageSpec> for Source {
    fn from(l: LanguageSpec) -> Self {
        Source::Language(l)
    }
}

impl fmt::Debug for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Automaton(a) => write!(f, "Automaton({})", a.name),
            Source::Language(l) => write!(f, "Language({})", l.name),
        }
    }
}

enum Tester<'a> {
    Machine(Machine<'a>),
    Language(&'a LanguageSpec),
}

impl Tester<'_> {
    fn test(&self, word: &str) -> Result<bool, OracleError> {
        match self {
            Tester::Machine(m) => Ok(m.accepts(word)?),
            Tester::Language(l) => Ok(l.contains(word)),
        }
    }
}

/// Number of words of length at most `max_len` over `k` letters.
pub fn word_count(k: usize, max_len: usize) -> u128 {
    let mut total: u128 = 0;
    let mut layer: u128 = 1;
    for _ in 0..=max_len {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(k as u128);
    }
    total
}

/// All words of length at most `max_len` in length-lexicographic order, using
/// the declared letter order.
pub fn words_up_to(alphabet: &Alphabet, max_len: usize) -> impl Iterator<Item = String> + '_ {
    let letters = alphabet.letters();
    (0..=max_len).flat_map(move |len| {
        let mut digits: Option<Vec<usize>> = if len > 0 && letters.is_empty() {
            None
        } else {
            Some(vec![0; len])
        };
        std::iter::from_fn(move || {
            let current = digits.as_mut()?;
            let word: String = current.iter().map(|&d| letters[d]).collect();
            // Advance like an odometer, rightmost digit fastest.
            let mut i = current.len();
            loop {
                if i == 0 {
                    digits = None;
                    break;
                }
                i -= 1;
                current[i] += 1;
                if current[i] < letters.len() {
                    break;
                }
                current[i] = 0;
            }
            Some(word)
        })
    })
}

fn guard(alphabet: &Alphabet, max_len: usize) -> Result<(), OracleError> {
    let words = word_count(alphabet.len(), max_len);
    if words > ENUMERATION_GUARD {
        return Err(OracleError::GuardExceeded { words, max_len });
    }
    Ok(())
}

/// Accepted words of length at most `max_len`, length-lexicographically.
pub fn enumerate(source: &Source, max_len: usize) -> Result<Vec<String>, OracleError> {
    guard(source.alphabet(), max_len)?;
    let tester = source.tester()?;
    let mut out = Vec::new();
    for w in words_up_to(source.alphabet(), max_len) {
        if tester.test(&w)? {
            out.push(w);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Outcome of a bounded comparison.
///
/// `equivalent_up_to` is the largest length at which both sides agree on all
/// shorter-or-equal words; it is `None` when they already disagree on the
/// empty word. A counterexample is present iff `equivalent_up_to < max_len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub max_len: usize,
    pub equivalent_up_to: Option<usize>,
    pub counterexample: Option<String>,
    /// The operand that accepts the counterexample.
    pub side: Option<Side>,
    pub words_checked: usize,
}

impl EquivalenceReport {
    pub fn is_equivalent(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.counterexample, self.side) {
            (Some(w), Some(side)) => {
                let shown = if w.is_empty() { crate::automaton::EMPTY_WORD } else { w };
                write!(f, "counterexample {shown} (accepted by the {side} operand)")
            }
            _ => write!(f, "equivalent up to {}", self.max_len),
        }
    }
}

/// Compares membership word by word in length-lexicographic order and stops at
/// the first disagreement. The alphabets must contain the same letters; the
/// left operand's order is used.
pub fn equivalent_up_to(a: &Source, b: &Source, max_len: usize) -> Result<EquivalenceReport, OracleError> {
    if !a.alphabet().same_letters(b.alphabet()) {
        return Err(OracleError::AlphabetMismatch {
            left: a.alphabet().clone(),
            right: b.alphabet().clone(),
        });
    }
    guard(a.alphabet(), max_len)?;
    let (ta, tb) = (a.tester()?, b.tester()?);
    let mut checked = 0;
    for w in words_up_to(a.alphabet(), max_len) {
        checked += 1;
        let (x, y) = (ta.test(&w)?, tb.test(&w)?);
        if x != y {
            let len = w.chars().count();
            return Ok(EquivalenceReport {
                max_len,
                equivalent_up_to: len.checked_sub(1),
                counterexample: Some(w),
                side: Some(if x { Side::Left } else { Side::Right }),
                words_checked: checked,
            });
        }
    }
    Ok(EquivalenceReport {
        max_len,
        equivalent_up_to: Some(max_len),
        counterexample: None,
        side: None,
        words_checked: checked,
    })
}
