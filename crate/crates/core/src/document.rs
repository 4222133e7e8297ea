//! The automaton document format (`format_version: 1`).
//!
//! Documents are JSON objects with ordered lists, so serialization is
//! deterministic and diffable:
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "name": "example",
//!   "variant": { "head_mode": "returning", "end_mode": "repetitive" },
//!   "alphabet": ["a", "b"],
//!   "states": ["q0", "q1"],
//!   "initial": ["q0"],
//!   "translucency": { "q0": ["b"] },
//!   "transitions": [ { "from": "q0", "on": "a", "to": ["q1"] } ],
//!   "end_transitions": [ { "from": "q1", "to": "accept" } ]
//! }
//! ```
//!
//! `finals` is only allowed in halting mode, `end_transitions` only in
//! repetitive mode, and rotating-jump documents carry no `translucency`.
//! States built by constructions use composite names with `|` as separator,
//! e.g. `(q1|S:q0,q3)` or `(q2|G:a,b)`.

use std::collections::{BTreeMap, BTreeSet};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::automaton::{
    validate, Alphabet, EndAction, EndMode, HeadMode, TlAutomaton, ValidationReport,
};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariantDoc {
    pub head_mode: HeadMode,
    pub end_mode: EndMode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionDoc {
    pub from: String,
    pub on: String,
    pub to: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EndTargetDoc {
    States(Vec<String>),
    Keyword(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndTransitionDoc {
    pub from: String,
    pub to: EndTargetDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonDocument {
    pub format_version: u32,
    pub name: String,
    pub variant: VariantDoc,
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub initial: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finals: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub translucency: Option<IndexMap<String, Vec<String>>>,
    #[serde(default)]
    pub transitions: Vec<TransitionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub end_transitions: Option<Vec<EndTransitionDoc>>,
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("unsupported format_version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("invalid automaton:\n{0}")]
    Invalid(ValidationReport),
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Field {
        field: field.into(),
        message: message.into(),
    }
}

fn single_letter(field: String, s: &str) -> Result<char, ParseError> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(field_err(field, format!("{s:?} is not a single letter"))),
    }
}

impl AutomatonDocument {
    /// Builds the automaton without running [`validate`].
    pub fn to_automaton(&self) -> Result<TlAutomaton, ParseError> {
        if self.format_version != FORMAT_VERSION {
            return Err(ParseError::Version(self.format_version));
        }
        let head_mode = self.variant.head_mode;
        let end_mode = self.variant.end_mode;
        if end_mode == EndMode::Repetitive && self.finals.is_some() {
            return Err(field_err("finals", "not allowed for repetitive automata"));
        }
        if end_mode == EndMode::Halting && self.end_transitions.is_some() {
            return Err(field_err("end_transitions", "not allowed for halting automata"));
        }
        if head_mode == HeadMode::RotatingJump && self.translucency.is_some() {
            return Err(field_err("translucency", "not allowed for rotating-jump automata"));
        }

        let letters = self
            .alphabet
            .iter()
            .enumerate()
            .map(|(i, s)| single_letter(format!("alphabet[{i}]"), s))
            .collect::<Result<Vec<char>, _>>()?;
        let mut aut = TlAutomaton::empty(self.name.clone(), Alphabet::new(letters), head_mode, end_mode);
        aut.states = self.states.clone();
        aut.initial = self.initial.iter().cloned().collect();
        aut.finals = self.finals.iter().flatten().cloned().collect();

        for (state, letters) in self.translucency.iter().flatten() {
            let set = letters
                .iter()
                .map(|s| single_letter(format!("translucency.{state}"), s))
                .collect::<Result<BTreeSet<char>, _>>()?;
            aut.translucency.insert(state.clone(), set);
        }
        for (i, t) in self.transitions.iter().enumerate() {
            let a = single_letter(format!("transitions[{i}].on"), &t.on)?;
            let key = (t.from.clone(), a);
            if aut.transitions.contains_key(&key) {
                return Err(field_err(
                    format!("transitions[{i}]"),
                    format!("duplicate transition from {} on {a}", t.from),
                ));
            }
            aut.transitions.insert(key, t.to.iter().cloned().collect());
        }
        for (i, e) in self.end_transitions.iter().flatten().enumerate() {
            let action = match &e.to {
                EndTargetDoc::States(s) => EndAction::Goto(s.iter().cloned().collect()),
                EndTargetDoc::Keyword(k) if k == "accept" => EndAction::Accept,
                EndTargetDoc::Keyword(k) => {
                    return Err(field_err(
                        format!("end_transitions[{i}].to"),
                        format!("expected a state list or \"accept\", found {k:?}"),
                    ))
                }
            };
            if aut.end_transitions.insert(e.from.clone(), action).is_some() {
                return Err(field_err(
                    format!("end_transitions[{i}]"),
                    format!("duplicate end transition from {}", e.from),
                ));
            }
        }
        Ok(aut)
    }

    /// The canonical document of an automaton: lists follow the declared
    /// state order and alphabet order, empty entries are left out.
    pub fn from_automaton(aut: &TlAutomaton) -> Self {
        let order: BTreeMap<&str, usize> = aut
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let ordered = |set: &BTreeSet<String>| -> Vec<String> {
            let mut v: Vec<String> = set.iter().cloned().collect();
            v.sort_by_key(|s| order.get(s.as_str()).copied().unwrap_or(usize::MAX));
            v
        };
        let letter_list = |set: &BTreeSet<char>| -> Vec<String> {
            aut.alphabet
                .letters()
                .iter()
                .filter(|a| set.contains(a))
                .map(|a| a.to_string())
                .collect()
        };

        let mut translucency = IndexMap::new();
        let mut transitions = Vec::new();
        let mut end_transitions = Vec::new();
        for q in &aut.states {
            let t = aut.translucent(q);
            if !t.is_empty() {
                translucency.insert(q.clone(), letter_list(&t));
            }
            for &a in aut.alphabet.letters() {
                let to = aut.targets(q, a);
                if !to.is_empty() {
                    transitions.push(TransitionDoc {
                        from: q.clone(),
                        on: a.to_string(),
                        to: ordered(&to),
                    });
                }
            }
            match aut.end_transitions.get(q) {
                Some(EndAction::Accept) => end_transitions.push(EndTransitionDoc {
                    from: q.clone(),
                    to: EndTargetDoc::Keyword("accept".into()),
                }),
                Some(EndAction::Goto(t)) if !t.is_empty() => end_transitions.push(EndTransitionDoc {
                    from: q.clone(),
                    to: EndTargetDoc::States(ordered(t)),
                }),
                _ => {}
            }
        }

        AutomatonDocument {
            format_version: FORMAT_VERSION,
            name: aut.name.clone(),
            variant: VariantDoc {
                head_mode: aut.head_mode,
                end_mode: aut.end_mode,
            },
            alphabet: aut.alphabet.letters().iter().map(|c| c.to_string()).collect(),
            states: aut.states.clone(),
            initial: ordered(&aut.initial),
            finals: (aut.end_mode == EndMode::Halting).then(|| ordered(&aut.finals)),
            translucency: (aut.head_mode != HeadMode::RotatingJump).then_some(translucency),
            transitions,
            end_transitions: (aut.end_mode == EndMode::Repetitive).then_some(end_transitions),
        }
    }
}

/// Parses a document without validating the automaton.
pub fn parse_unchecked(text: &str) -> Result<TlAutomaton, ParseError> {
    let doc: AutomatonDocument = serde_json::from_str(text)?;
    doc.to_automaton()
}

/// Parses and validates a document.
pub fn parse(text: &str) -> Result<TlAutomaton, ParseError> {
    let aut = parse_unchecked(text)?;
    let report = validate(&aut);
    if !report.is_valid() {
        return Err(ParseError::Invalid(report));
    }
    Ok(aut)
}

pub fn serialize(aut: &TlAutomaton) -> String {
    let doc = AutomatonDocument::from_automaton(aut);
    let mut s = serde_json::to_string_pretty(&doc).expect("documents always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn a_vee_c_fixture_document() {
        let aut = parse(fixtures::A_VEE_C_DOC).unwrap();
        assert_eq!(aut.states.len(), 8);
        assert_eq!(aut.translucent("q0"), BTreeSet::from(['a', 'b']));
        assert_eq!(aut.end_action("q1"), EndAction::Accept);
        assert_eq!(aut.end_action("q0"), EndAction::goto("q4"));
        assert_eq!(aut.targets("q7", 'a'), BTreeSet::from(["q6".to_string()]));
    }

    #[test]
    fn finals_and_end_transitions_are_exclusive() {
        let text = fixtures::A_VEE_C_DOC.replacen("\"initial\"", "\"finals\": [\"q1\"],\n  \"initial\"", 1);
        let err = parse(&text).unwrap_err();
        assert!(matches!(&err, ParseError::Field { field, .. } if field == "finals"), "{err}");
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = fixtures::A_VEE_C_DOC.replacen("\"initial\"", "\"colour\": 3,\n  \"initial\"", 1);
        let err = parse(&text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("unknown field `colour`"), "{msg}");
        assert!(msg.contains("line"), "{msg}");
    }

    #[test]
    fn validation_failures_surface() {
        let text = fixtures::A_VEE_C_DOC.replacen("\"to\": [\"q1\"]", "\"to\": [\"q99\"]", 1);
        assert!(matches!(parse(&text), Err(ParseError::Invalid(_))));
        assert!(parse_unchecked(&text).is_ok());
    }

    #[test]
    fn bad_end_keyword() {
        let text = fixtures::A_VEE_C_DOC.replacen("\"accept\"", "\"maybe\"", 1);
        assert!(matches!(parse(&text), Err(ParseError::Field { .. })));
    }

    #[test]
    fn round_trip_is_canonical() {
        for aut in fixtures::all() {
            let text = serialize(&aut);
            let back = parse(&text).unwrap();
            assert_eq!(serialize(&back), text, "{}", aut.name);
        }
        let once = serialize(&parse(fixtures::A_VEE_C_DOC).unwrap());
        assert_eq!(serialize(&parse(&once).unwrap()), once);
    }
}
