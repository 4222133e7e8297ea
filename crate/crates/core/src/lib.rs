//! Finite automata with translucent letters.
//!
//! One parametric [`TlAutomaton`] covers the returning, non-returning and
//! rotating-jump head modes, halting and repetitive end modes, deterministic
//! and nondeterministic. On top of it:
//!
//! * [`exec`] runs automata step by step and renders traces,
//! * [`constructions`] holds the automaton-to-automaton transformations,
//! * [`oracle`] has predicate languages, bounded enumeration and equivalence,
//! * [`fast`] decides membership for deterministic returning automata in
//!   near-linear time,
//! * [`document`] reads and writes the JSON document format.
//!
//! The `examples/` directory has one runnable program per capability.

pub mod automaton;
pub mod cli;
pub mod constructions;
pub mod document;
pub mod exec;
pub mod fast;
pub mod fixtures;
pub mod oracle;
pub mod random;

pub use automaton::{
    canonicalize, classify, validate, Alphabet, EndAction, EndMode, HeadMode, TlAutomaton,
    VariantDescriptor, VariantName,
};
pub use document::{parse, serialize, ParseError};
pub use exec::{accepts, render_trace, run_deterministic, run_nondeterministic, Configuration, Trace, Verdict};
