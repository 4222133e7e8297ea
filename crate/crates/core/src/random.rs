//! Seeded random automata and words for differential testing.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::{Alphabet, EndAction, EndMode, HeadMode};
use crate::TlAutomaton;

/// Shape of the automata to draw. Sizes are drawn uniformly from
/// `1..=max_states` and `1..=max_letters`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub max_states: usize,
    pub max_letters: usize,
    pub head_mode: HeadMode,
    pub end_mode: EndMode,
    pub deterministic: bool,
}

impl RandomSpec {
    pub fn new(head_mode: HeadMode, end_mode: EndMode, deterministic: bool) -> Self {
        RandomSpec {
            max_states: 4,
            max_letters: 3,
            head_mode,
            end_mode,
            deterministic,
        }
    }
}

const LETTERS: &[char] = &['a', 'b', 'c', 'd', 'e', 'f'];

pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn subset(&mut self, states: &[String], max: usize) -> Vec<String> {
        let k = self.rng.gen_range(0..=max.min(states.len()));
        states.choose_multiple(&mut self.rng, k).cloned().collect()
    }

    pub fn automaton(&mut self, spec: &RandomSpec) -> TlAutomaton {
        let n = self.rng.gen_range(1..=spec.max_states);
        let k = self.rng.gen_range(1..=spec.max_letters.min(LETTERS.len()));
        let letters = &LETTERS[..k];
        let mut aut = TlAutomaton::empty("random", Alphabet::new(letters.iter().copied()), spec.head_mode, spec.end_mode);
        let states: Vec<String> = (0..n).map(|i| format!("q{i}")).collect();
        for s in &states {
            aut.add_state(s.clone());
        }
        if spec.deterministic {
            aut.initial.insert(states[0].clone());
        } else {
            let mut init = self.subset(&states, 2);
            if init.is_empty() {
                init.push(states[0].clone());
            }
            aut.initial.extend(init);
        }
        let fan_out = if spec.deterministic { 1 } else { 2 };
        for q in &states {
            if spec.head_mode != HeadMode::RotatingJump {
                let tau: Vec<char> = letters.iter().copied().filter(|_| self.rng.gen_bool(0.35)).collect();
                aut.set_translucent(q.clone(), tau);
            }
            for &a in letters {
                if aut.is_translucent(q, a) || !self.rng.gen_bool(0.7) {
                    continue;
                }
                let mut targets = self.subset(&states, fan_out);
                if targets.is_empty() {
                    targets.push(states.choose(&mut self.rng).unwrap().clone());
                }
                for t in targets {
                    aut.add_transition(q.clone(), a, t);
                }
            }
            match spec.end_mode {
                EndMode::Halting => {
                    if self.rng.gen_bool(0.4) {
                        aut.finals.insert(q.clone());
                    }
                }
                EndMode::Repetitive => {
                    let roll: f64 = self.rng.gen();
                    if roll < 0.3 {
                        aut.set_end(q.clone(), EndAction::Accept);
                    } else if roll < 0.75 {
                        let targets = self.subset(&states, fan_out);
                        if !targets.is_empty() {
                            aut.set_end(q.clone(), EndAction::Goto(targets.into_iter().collect()));
                        }
                    }
                }
            }
        }
        aut
    }

    pub fn automata(&mut self, spec: &RandomSpec, count: usize) -> Vec<TlAutomaton> {
        (0..count)
            .map(|i| {
                let mut a = self.automaton(spec);
                a.name = format!("random{i}");
                a
            })
            .collect()
    }

    /// A word over `alphabet` with length drawn from `0..=max_len`.
    pub fn word(&mut self, alphabet: &Alphabet, max_len: usize) -> String {
        let len = self.rng.gen_range(0..=max_len);
        (0..len)
            .map(|_| *alphabet.letters().choose(&mut self.rng).expect("non-empty alphabet"))
            .collect()
    }
}
