//! Near-linear membership for deterministic returning automata.
//!
//! In returning mode the occurrences of each letter are consumed from left
//! to right, so the tape can be kept as one FIFO queue of input positions
//! per letter. The letter read in state `q` is the queue front with the
//! smallest position among the letters not in `τ(q)`. End-marker moves keep
//! a set of states already left at the marker since the last read; hitting
//! one again means the deterministic computation loops, hence rejects.

use std::time::{Duration, Instant};

use crate::automaton::{classify, Alphabet, EndAction, EndMode, HeadMode, ValidationReport};
use crate::TlAutomaton;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FastError {
    #[error("invalid automaton:\n{0}")]
    Invalid(ValidationReport),
    #[error("fast membership needs a deterministic automaton")]
    NotDeterministic,
    #[error("fast membership needs a returning automaton")]
    NotReturning,
    #[error("letter '{0}' is not in the alphabet")]
    LetterOutsideAlphabet(char),
    #[error("input longer than {} letters", u32::MAX)]
    TooLong,
}

#[derive(Clone, Copy, Debug)]
enum End {
    Accept,
    Reject,
    Goto(u32),
}

/// A deterministic returning automaton compiled for [`FastMachine::accepts`].
#[derive(Clone, Debug)]
pub struct FastMachine {
    letters: Vec<char>,
    states: Vec<String>,
    translucent: Vec<u64>,
    delta: Vec<Vec<Option<u32>>>,
    end: Vec<End>,
    finals: Vec<bool>,
    initial: Option<u32>,
    repetitive: bool,
}

/// A run with the read sequence: `(state, input position)` for every letter
/// read, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastRun {
    pub accepted: bool,
    pub reads: Vec<(String, usize)>,
    pub marker_moves: usize,
}

impl FastMachine {
    pub fn new(aut: &TlAutomaton) -> Result<Self, FastError> {
        let d = classify(aut).map_err(|e| FastError::Invalid(e.0))?;
        if d.head_mode != HeadMode::Returning {
            return Err(FastError::NotReturning);
        }
        if !d.deterministic {
            return Err(FastError::NotDeterministic);
        }
        let idx = |s: &str| aut.state_index(s).expect("validated") as u32;
        let letters = aut.alphabet.letters().to_vec();
        let mut m = FastMachine {
            states: aut.states.clone(),
            translucent: Vec::new(),
            delta: Vec::new(),
            end: Vec::new(),
            finals: Vec::new(),
            initial: aut.initial.iter().next().map(|s| idx(s)),
            repetitive: aut.end_mode == EndMode::Repetitive,
            letters,
        };
        for q in &aut.states {
            let mut mask = 0u64;
            let mut row = Vec::with_capacity(m.letters.len());
            for (i, &a) in m.letters.iter().enumerate() {
                if aut.is_translucent(q, a) {
                    mask |= 1 << i;
                }
                row.push(aut.targets(q, a).iter().next().map(|p| idx(p)));
            }
            m.translucent.push(mask);
            m.delta.push(row);
            m.end.push(match aut.end_action(q) {
                EndAction::Accept => End::Accept,
                EndAction::Goto(t) => t.iter().next().map_or(End::Reject, |p| End::Goto(idx(p))),
            });
            m.finals.push(aut.finals.contains(q));
        }
        Ok(m)
    }

    pub fn accepts(&self, word: &str) -> Result<bool, FastError> {
        self.execute(word, None)
    }

    /// Like [`accepts`](Self::accepts), also recording every read.
    pub fn run(&self, word: &str) -> Result<FastRun, FastError> {
        let mut log = Log::default();
        let accepted = self.execute(word, Some(&mut log))?;
        Ok(FastRun {
            accepted,
            reads: log.reads.into_iter().map(|(q, p)| (self.states[q as usize].clone(), p as usize)).collect(),
            marker_moves: log.marker_moves,
        })
    }

    fn execute(&self, word: &str, mut log: Option<&mut Log>) -> Result<bool, FastError> {
        let k = self.letters.len();
        let mut queues: Vec<Vec<u32>> = vec![Vec::new(); k];
        for (pos, c) in word.chars().enumerate() {
            let i = self
                .letters
                .iter()
                .position(|&l| l == c)
                .ok_or(FastError::LetterOutsideAlphabet(c))?;
            queues[i].push(u32::try_from(pos).map_err(|_| FastError::TooLong)?);
        }
        let Some(mut q) = self.initial else {
            return Ok(false);
        };
        let mut heads = vec![0usize; k];
        // visited[q] == epoch: q was left at the marker since the last read.
        let mut visited = vec![0u64; self.states.len()];
        let mut epoch = 1u64;
        loop {
            let qi = q as usize;
            let mask = self.translucent[qi];
            let mut best: Option<(u32, usize)> = None;
            for i in 0..k {
                if mask >> i & 1 == 1 {
                    continue;
                }
                if let Some(&p) = queues[i].get(heads[i]) {
                    if best.is_none_or(|(bp, _)| p < bp) {
                        best = Some((p, i));
                    }
                }
            }
            match best {
                Some((pos, i)) => {
                    let Some(next) = self.delta[qi][i] else {
                        return Ok(false);
                    };
                    if let Some(log) = log.as_deref_mut() {
                        log.reads.push((q, pos));
                    }
                    heads[i] += 1;
                    q = next;
                    epoch += 1;
                }
                None if !self.repetitive => return Ok(self.finals[qi]),
                None => match self.end[qi] {
                    End::Accept => return Ok(true),
                    End::Reject => return Ok(false),
                    End::Goto(p) => {
                        if visited[qi] == epoch {
                            return Ok(false);
                        }
                        visited[qi] = epoch;
                        if let Some(log) = log.as_deref_mut() {
                            log.marker_moves += 1;
                        }
                        q = p;
                    }
                },
            }
        }
    }
}

#[derive(Default)]
struct Log {
    reads: Vec<(u32, u32)>,
    marker_moves: usize,
}

/// One-shot convenience wrapper around [`FastMachine`].
pub fn fast_accepts(aut: &TlAutomaton, word: &str) -> Result<bool, FastError> {
    FastMachine::new(aut)?.accepts(word)
}

/// The benchmark input of length `n`: the alphabet repeated cyclically, so
/// `(ab)^k` over {a,b}.
pub fn bench_word(alphabet: &Alphabet, n: usize) -> String {
    alphabet.letters().iter().cycle().take(n).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub length: usize,
    pub accepted: bool,
    /// Best observed time of one membership test.
    pub time: Duration,
}

/// Times [`FastMachine::accepts`] on [`bench_word`]s. Every length is run
/// in batches of at least ten milliseconds; batches are interleaved across
/// lengths round by round and the fastest batch per length is kept, so a
/// transient slowdown does not hit a single length only.
pub fn bench(aut: &TlAutomaton, lengths: &[usize]) -> Result<Vec<BenchRow>, FastError> {
    const ROUNDS: usize = 7;
    const MIN_BATCH: Duration = Duration::from_millis(10);
    let m = FastMachine::new(aut)?;
    let batch = |w: &str, reps: u32| -> Result<Duration, FastError> {
        let t = Instant::now();
        for _ in 0..reps {
            std::hint::black_box(m.accepts(std::hint::black_box(w))?);
        }
        Ok(t.elapsed())
    };
    let mut words = Vec::new();
    let mut rows = Vec::new();
    let mut reps = Vec::new();
    for &n in lengths {
        let w = bench_word(&aut.alphabet, n);
        let mut r = 1u32;
        while batch(&w, r)? < MIN_BATCH && r < 1 << 20 {
            r *= 2;
        }
        rows.push(BenchRow {
            length: n,
            accepted: m.accepts(&w)?,
            time: Duration::MAX,
        });
        words.push(w);
        reps.push(r);
    }
    for _ in 0..ROUNDS {
        for (i, w) in words.iter().enumerate() {
            let per_run = batch(w, reps[i])? / reps[i];
            rows[i].time = rows[i].time.min(per_run);
        }
    }
    Ok(rows)
}
