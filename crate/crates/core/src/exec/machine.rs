use std::collections::{HashMap, VecDeque};

use crate::automaton::{classify, EndAction, EndMode, HeadMode, TlAutomaton};

use super::{Configuration, ExecError, StepKind, Trace, TraceStep, Verdict};

/// Internal configuration over letter indices and state indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Tape {
    pub prefix: Vec<u8>,
    pub state: u32,
    pub rest: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Move {
    Read { letter: u8, position: usize },
    Marker,
}

pub(crate) enum Step {
    Halt(Verdict),
    Moves(Vec<(Move, Tape)>),
}

#[derive(Clone, Debug)]
enum EndRule {
    Accept,
    Goto(Vec<u32>),
}

/// An automaton compiled to dense tables for execution.
///
/// Compiling once and reusing the machine is much cheaper than the
/// convenience functions in the parent module when many words are checked
/// against the same automaton.
#[derive(Clone, Debug)]
pub struct Machine<'a> {
    aut: &'a TlAutomaton,
    letters: Vec<char>,
    translucent: Vec<u64>,
    readable: Vec<u64>,
    delta: Vec<Vec<Vec<u32>>>,
    end: Vec<EndRule>,
    finals: Vec<bool>,
    initial: Vec<u32>,
    deterministic: bool,
}

/// Limits for the breadth-first search over configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_configs: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_configs: 2_000_000,
        }
    }
}

/// Result of a nondeterministic run. A witness is present iff the verdict is
/// `Accept`; it is a shortest accepting computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub witness: Option<Trace>,
    pub explored: usize,
}

fn mask(bit: u8) -> u64 {
    1u64 << bit
}

impl<'a> Machine<'a> {
    pub fn new(aut: &'a TlAutomaton) -> Result<Self, ExecError> {
        let descriptor = classify(aut).map_err(|e| ExecError::Invalid(e.0))?;
        let letters: Vec<char> = aut.alphabet.letters().to_vec();
        let index: HashMap<&str, u32> = aut
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i as u32))
            .collect();
        let sorted = |set: &std::collections::BTreeSet<String>| -> Vec<u32> {
            let mut v: Vec<u32> = set.iter().map(|s| index[s.as_str()]).collect();
            v.sort_unstable();
            v
        };

        let n = aut.states.len();
        let mut translucent = vec![0u64; n];
        let mut readable = vec![0u64; n];
        let mut delta = vec![vec![Vec::new(); letters.len()]; n];
        let mut end = vec![EndRule::Goto(Vec::new()); n];
        let mut finals = vec![false; n];
        for (qi, q) in aut.states.iter().enumerate() {
            for (ai, &a) in letters.iter().enumerate() {
                if aut.is_translucent(q, a) {
                    translucent[qi] |= mask(ai as u8);
                }
                let t = sorted(&aut.targets(q, a));
                if !t.is_empty() {
                    readable[qi] |= mask(ai as u8);
                }
                delta[qi][ai] = t;
            }
            end[qi] = match aut.end_action(q) {
                EndAction::Accept => EndRule::Accept,
                EndAction::Goto(t) => EndRule::Goto(sorted(&t)),
            };
            finals[qi] = aut.finals.contains(q);
        }
        Ok(Machine {
            aut,
            letters,
            translucent,
            readable,
            delta,
            end,
            finals,
            initial: sorted(&aut.initial),
            deterministic: descriptor.deterministic,
        })
    }

    pub fn automaton(&self) -> &TlAutomaton {
        self.aut
    }

    pub fn is_deterministic(&self) -> bool {
        self.deterministic
    }

    pub(crate) fn encode(&self, word: &str) -> Result<Vec<u8>, ExecError> {
        word.chars()
            .map(|c| {
                self.letters
                    .iter()
                    .position(|&l| l == c)
                    .map(|i| i as u8)
                    .ok_or(ExecError::LetterOutsideAlphabet(c))
            })
            .collect()
    }

    fn decode(&self, letters: &[u8]) -> String {
        letters.iter().map(|&l| self.letters[l as usize]).collect()
    }

    pub(crate) fn to_configuration(&self, tape: &Tape) -> Configuration {
        Configuration {
            consumed_prefix: self.decode(&tape.prefix),
            state: self.aut.states[tape.state as usize].clone(),
            remaining: self.decode(&tape.rest),
        }
    }

    pub(crate) fn tape_of(&self, cfg: &Configuration) -> Result<Tape, ExecError> {
        let state = self
            .aut
            .state_index(&cfg.state)
            .ok_or_else(|| ExecError::UnknownState(cfg.state.clone()))?;
        if !cfg.consumed_prefix.is_empty() && self.aut.head_mode != HeadMode::NonReturning {
            return Err(ExecError::MalformedConfiguration(
                "only non-returning configurations carry a consumed prefix".into(),
            ));
        }
        Ok(Tape {
            prefix: self.encode(&cfg.consumed_prefix)?,
            state: state as u32,
            rest: self.encode(&cfg.remaining)?,
        })
    }

    pub(crate) fn to_kind(&self, mv: Move) -> StepKind {
        match mv {
            Move::Read { letter, position } => StepKind::ReadLetter {
                letter: self.letters[letter as usize],
                position,
            },
            Move::Marker => StepKind::EndMarkerMove,
        }
    }

    fn initial_tapes(&self, word: &[u8]) -> impl Iterator<Item = Tape> + '_ {
        let word = word.to_vec();
        self.initial.iter().map(move |&q| Tape {
            prefix: Vec::new(),
            state: q,
            rest: word.clone(),
        })
    }

    /// All one-step successors of a configuration, or its verdict.
    pub(crate) fn successors(&self, tape: &Tape) -> Step {
        let q = tape.state as usize;
        match self.aut.head_mode {
            HeadMode::Returning | HeadMode::NonReturning => {
                let hidden = self.translucent[q];
                let visible = tape.rest.iter().position(|&l| hidden & mask(l) == 0);
                let Some(i) = visible else {
                    return self.at_marker(tape);
                };
                let a = tape.rest[i];
                let targets = &self.delta[q][a as usize];
                if targets.is_empty() {
                    return Step::Halt(Verdict::Reject);
                }
                let position = tape.prefix.len() + i;
                let mv = Move::Read {
                    letter: a,
                    position,
                };
                let (prefix, rest) = if self.aut.head_mode == HeadMode::Returning {
                    let mut rest = tape.rest.clone();
                    rest.remove(i);
                    (Vec::new(), rest)
                } else {
                    let mut prefix = tape.prefix.clone();
                    prefix.extend_from_slice(&tape.rest[..i]);
                    (prefix, tape.rest[i + 1..].to_vec())
                };
                Step::Moves(
                    targets
                        .iter()
                        .map(|&t| {
                            (
                                mv,
                                Tape {
                                    prefix: prefix.clone(),
                                    state: t,
                                    rest: rest.clone(),
                                },
                            )
                        })
                        .collect(),
                )
            }
            HeadMode::RotatingJump => {
                let can_read = self.readable[q];
                let Some(i) = tape.rest.iter().position(|&l| can_read & mask(l) != 0) else {
                    let accept = self.finals[q] && tape.rest.is_empty();
                    return Step::Halt(if accept {
                        Verdict::Accept
                    } else {
                        Verdict::Reject
                    });
                };
                let a = tape.rest[i];
                let mut rotated = tape.rest[i + 1..].to_vec();
                rotated.extend_from_slice(&tape.rest[..i]);
                let mv = Move::Read {
                    letter: a,
                    position: i,
                };
                Step::Moves(
                    self.delta[q][a as usize]
                        .iter()
                        .map(|&t| {
                            (
                                mv,
                                Tape {
                                    prefix: Vec::new(),
                                    state: t,
                                    rest: rotated.clone(),
                                },
                            )
                        })
                        .collect(),
                )
            }
        }
    }

    fn at_marker(&self, tape: &Tape) -> Step {
        let q = tape.state as usize;
        match self.aut.end_mode {
            EndMode::Halting => Step::Halt(if self.finals[q] {
                Verdict::Accept
            } else {
                Verdict::Reject
            }),
            EndMode::Repetitive => match &self.end[q] {
                EndRule::Accept => Step::Halt(Verdict::Accept),
                EndRule::Goto(t) if t.is_empty() => Step::Halt(Verdict::Reject),
                EndRule::Goto(t) => {
                    let mut rest = tape.prefix.clone();
                    rest.extend_from_slice(&tape.rest);
                    Step::Moves(
                        t.iter()
                            .map(|&p| {
                                (
                                    Move::Marker,
                                    Tape {
                                        prefix: Vec::new(),
                                        state: p,
                                        rest: rest.clone(),
                                    },
                                )
                            })
                            .collect(),
                    )
                }
            },
        }
    }

    /// Upper bound on the length of any computation that does not loop at the
    /// end marker: `|w|·(|Σ|+1) + (|Q|+1)·(|w|+1)`.
    pub fn default_step_limit(&self, word_len: usize) -> usize {
        word_len * (self.letters.len() + 1) + (self.aut.states.len() + 1) * (word_len + 1)
    }

    /// Follows the unique computation on `word` for at most `step_limit` steps.
    pub fn run_deterministic(&self, word: &str, step_limit: Option<usize>) -> Result<Trace, ExecError> {
        if !self.deterministic {
            return Err(ExecError::NotDeterministic);
        }
        let encoded = self.encode(word)?;
        let limit = step_limit.unwrap_or_else(|| self.default_step_limit(encoded.len()));
        let mut tape = self
            .initial_tapes(&encoded)
            .next()
            .expect("deterministic automata have one initial state");
        let mut steps = Vec::new();
        let verdict = loop {
            if steps.len() >= limit {
                steps.push(TraceStep {
                    config: self.to_configuration(&tape),
                    kind: StepKind::Terminal,
                });
                break Verdict::StepLimit;
            }
            match self.successors(&tape) {
                Step::Halt(v) => {
                    steps.push(TraceStep {
                        config: self.to_configuration(&tape),
                        kind: StepKind::Terminal,
                    });
                    break v;
                }
                Step::Moves(mut moves) => {
                    debug_assert_eq!(moves.len(), 1);
                    let (mv, next) = moves.swap_remove(0);
                    steps.push(TraceStep {
                        config: self.to_configuration(&tape),
                        kind: self.to_kind(mv),
                    });
                    tape = next;
                }
            }
        };
        Ok(Trace {
            head_mode: self.aut.head_mode,
            steps,
            verdict,
        })
    }

    /// Breadth-first search of the configuration graph with a visited set.
    pub fn run_nondeterministic(&self, word: &str, limits: SearchLimits) -> Result<SearchOutcome, ExecError> {
        let encoded = self.encode(word)?;
        let mut nodes: Vec<(Tape, Option<(usize, Move)>)> = Vec::new();
        let mut index: HashMap<Tape, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for tape in self.initial_tapes(&encoded) {
            if !index.contains_key(&tape) {
                index.insert(tape.clone(), nodes.len());
                queue.push_back(nodes.len());
                nodes.push((tape, None));
            }
        }
        while let Some(id) = queue.pop_front() {
            match self.successors(&nodes[id].0) {
                Step::Halt(Verdict::Accept) => {
                    return Ok(SearchOutcome {
                        verdict: Verdict::Accept,
                        witness: Some(self.witness(&nodes, id)),
                        explored: nodes.len(),
                    });
                }
                Step::Halt(_) => {}
                Step::Moves(moves) => {
                    for (mv, next) in moves {
                        if index.contains_key(&next) {
                            continue;
                        }
                        if nodes.len() >= limits.max_configs {
                            return Ok(SearchOutcome {
                                verdict: Verdict::StepLimit,
                                witness: None,
                                explored: nodes.len(),
                            });
                        }
                        index.insert(next.clone(), nodes.len());
                        queue.push_back(nodes.len());
                        nodes.push((next, Some((id, mv))));
                    }
                }
            }
        }
        Ok(SearchOutcome {
            verdict: Verdict::Reject,
            witness: None,
            explored: nodes.len(),
        })
    }

    fn witness(&self, nodes: &[(Tape, Option<(usize, Move)>)], last: usize) -> Trace {
        let mut steps = vec![TraceStep {
            config: self.to_configuration(&nodes[last].0),
            kind: StepKind::Terminal,
        }];
        let mut cur = last;
        while let Some((parent, mv)) = nodes[cur].1 {
            steps.push(TraceStep {
                config: self.to_configuration(&nodes[parent].0),
                kind: self.to_kind(mv),
            });
            cur = parent;
        }
        steps.reverse();
        Trace {
            head_mode: self.aut.head_mode,
            steps,
            verdict: Verdict::Accept,
        }
    }

    /// Membership. Deterministic automata follow their single computation; if
    /// that exceeds the default step bound (an end-marker loop), the verdict is
    /// settled by the visited-set search, which always terminates.
    pub fn accepts(&self, word: &str) -> Result<bool, ExecError> {
        if self.deterministic {
            let trace = self.run_deterministic(word, None)?;
            if trace.verdict != Verdict::StepLimit {
                return Ok(trace.verdict == Verdict::Accept);
            }
        }
        match self.run_nondeterministic(word, SearchLimits::default())?.verdict {
            Verdict::Accept => Ok(true),
            Verdict::Reject => Ok(false),
            Verdict::StepLimit => Err(ExecError::StepLimit),
        }
    }
}
