use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::automaton::Alphabet;
use crate::exec::Machine;
use crate::TlAutomaton;

use super::OracleError;

type Predicate = Arc<dyn Fn(&[char]) -> bool + Send + Sync>;

/// A named decidable language: a total predicate over `alphabet*`.
///
/// Words containing letters outside the alphabet are never members.
#[derive(Clone)]
pub struct LanguageSpec {
    pub name: String,
    pub alphabet: Alphabet,
    predicate: Predicate,
}

impl fmt::Debug for LanguageSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LanguageSpec")
            .field("name", &self.name)
            .field("alphabet", &self.alphabet)
            .finish_non_exhaustive()
    }
}

fn count(w: &[char], c: char) -> usize {
    w.iter().filter(|&&x| x == c).count()
}

fn abc() -> Alphabet {
    Alphabet::new(['a', 'b', 'c'])
}

fn ab() -> Alphabet {
    Alphabet::new(['a', 'b'])
}

pub const BUILTIN_NAMES: &[&str] = &[
    "L_vee_c",
    "L_vee",
    "L_eq",
    "L_2eq",
    "L_2eq_prime",
    "L_2",
    "L_c",
    "L_c_rev",
    "L_geq",
    "L_sandwich",
];

/// Distinct permutations of `w` in lexicographic order of letter codes.
fn permutations(w: &[char]) -> Vec<Vec<char>> {
    let mut cur = w.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

impl LanguageSpec {
    pub fn new(
        name: impl Into<String>,
        alphabet: Alphabet,
        predicate: impl Fn(&[char]) -> bool + Send + Sync + 'static,
    ) -> Self {
        LanguageSpec {
            name: name.into(),
            alphabet,
            predicate: Arc::new(predicate),
        }
    }

    pub fn contains(&self, word: &str) -> bool {
        let w: Vec<char> = word.chars().collect();
        self.contains_chars(&w)
    }

    pub fn contains_chars(&self, word: &[char]) -> bool {
        word.iter().all(|&c| self.alphabet.contains(c)) && (self.predicate)(word)
    }

    /// The language of an automaton, decided by the execution engine.
    /// Verdicts are memoized.
    ///
    /// Panics if a run exceeds the search limits, so a missing verdict is
    /// never mistaken for rejection.
    pub fn from_automaton(aut: TlAutomaton) -> Result<Self, OracleError> {
        Machine::new(&aut)?;
        let name = format!("L({})", aut.name);
        let alphabet = aut.alphabet.clone();
        let cache: Mutex<HashMap<Vec<char>, bool>> = Mutex::new(HashMap::new());
        Ok(LanguageSpec::new(name, alphabet, move |w| {
            if let Some(&v) = cache.lock().unwrap().get(w) {
                return v;
            }
            let word: String = w.iter().collect();
            let v = Machine::new(&aut)
                .and_then(|m| m.accepts(&word))
                .unwrap_or_else(|e| panic!("no verdict for {word:?}: {e}"));
            cache.lock().unwrap().insert(w.to_vec(), v);
            v
        }))
    }

    /// `com(L)`: words letter-equivalent to a member.
    pub fn com(&self) -> Self {
        let inner = self.clone();
        LanguageSpec::new(format!("com({})", self.name), self.alphabet.clone(), move |w| {
            permutations(w).iter().any(|p| inner.contains_chars(p))
        })
    }

    /// Interleavings `u1 v1 u2 v2 ...` of a member of `self` with a member of
    /// `other`. Alphabets may overlap.
    pub fn shuffle(&self, other: &LanguageSpec) -> Self {
        let (l, r) = (self.clone(), other.clone());
        LanguageSpec::new(
            format!("shuffle({},{})", self.name, other.name),
            self.alphabet.union(&other.alphabet),
            move |w| {
                assert!(w.len() < 64, "shuffle oracle limited to words shorter than 64");
                (0u64..1 << w.len()).any(|mask| {
                    let (mut u, mut v) = (Vec::new(), Vec::new());
                    for (i, &c) in w.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            u.push(c);
                        } else {
                            v.push(c);
                        }
                    }
                    l.contains_chars(&u) && r.contains_chars(&v)
                })
            },
        )
    }

    pub fn reverse(&self) -> Self {
        let inner = self.clone();
        LanguageSpec::new(format!("reverse({})", self.name), self.alphabet.clone(), move |w| {
            let r: Vec<char> = w.iter().rev().copied().collect();
            inner.contains_chars(&r)
        })
    }

    /// Concatenation.
    pub fn product(&self, other: &LanguageSpec) -> Self {
        let (l, r) = (self.clone(), other.clone());
        LanguageSpec::new(
            format!("product({},{})", self.name, other.name),
            self.alphabet.union(&other.alphabet),
            move |w| (0..=w.len()).any(|i| l.contains_chars(&w[..i]) && r.contains_chars(&w[i..])),
        )
    }

    /// Kleene star.
    pub fn star(&self) -> Self {
        let inner = self.clone();
        LanguageSpec::new(format!("star({})", self.name), self.alphabet.clone(), move |w| {
            let mut ok = vec![false; w.len() + 1];
            ok[0] = true;
            for j in 1..=w.len() {
                ok[j] = (0..j).any(|i| ok[i] && inner.contains_chars(&w[i..j]));
            }
            ok[w.len()]
        })
    }

    pub fn complement(&self) -> Self {
        let inner = self.clone();
        LanguageSpec::new(format!("complement({})", self.name), self.alphabet.clone(), move |w| {
            !inner.contains_chars(w)
        })
    }

    /// `prefix⟍L = {z : prefix·z ∈ L}`.
    pub fn quotient(&self, prefix: &str) -> Self {
        let inner = self.clone();
        let p: Vec<char> = prefix.chars().collect();
        LanguageSpec::new(format!("quotient({prefix},{})", self.name), self.alphabet.clone(), move |w| {
            let mut full = p.clone();
            full.extend_from_slice(w);
            inner.contains_chars(&full)
        })
    }

    /// The same language seen over a larger alphabet.
    /// Words using the extra letters are not members.
    pub fn widen(&self, alphabet: &Alphabet) -> Self {
        let inner = self.clone();
        LanguageSpec::new(
            format!("widen({},{})", self.name, alphabet.letters().iter().collect::<String>()),
            self.alphabet.union(alphabet),
            move |w| inner.contains_chars(w),
        )
    }
}

fn named(name: &str) -> Option<LanguageSpec> {
    let spec = match name {
        "L_vee_c" => LanguageSpec::new(name, abc(), |w| {
            let (a, b, c) = (count(w, 'a'), count(w, 'b'), count(w, 'c'));
            (c == 1 && a == b) || (c == 0 && 2 * a == b)
        }),
        "L_vee" => LanguageSpec::new(name, ab(), |w| {
            let (a, b) = (count(w, 'a'), count(w, 'b'));
            b == a || b == 2 * a
        }),
        "L_eq" => LanguageSpec::new(name, ab(), |w| count(w, 'a') == count(w, 'b')),
        "L_2eq" => LanguageSpec::new(name, ab(), |w| 2 * count(w, 'a') == count(w, 'b')),
        "L_2eq_prime" => LanguageSpec::new(name, Alphabet::new(['c', 'd']), |w| {
            2 * count(w, 'c') == count(w, 'd')
        }),
        "L_2" => LanguageSpec::new(name, ab(), |w| {
            let n = w.len() / 2;
            w.len() % 2 == 0 && w[..n].iter().all(|&c| c == 'a') && w[n..].iter().all(|&c| c == 'b')
        }),
        "L_c" => LanguageSpec::new(name, abc(), |w| match w.split_last() {
            Some((&'c', rest)) => count(rest, 'c') == 0 && count(rest, 'a') >= count(rest, 'b'),
            _ => false,
        }),
        "L_c_rev" => LanguageSpec::new(name, abc(), |w| match w.split_first() {
            Some((&'c', rest)) => count(rest, 'c') == 0 && count(rest, 'a') >= count(rest, 'b'),
            _ => false,
        }),
        "L_geq" => LanguageSpec::new(name, ab(), |w| count(w, 'a') >= count(w, 'b')),
        "L_sandwich" => LanguageSpec::new(name, ab(), |w| {
            let (a, b) = (count(w, 'a'), count(w, 'b'));
            a <= b && b <= 2 * a
        }),
        _ => return None,
    };
    Some(spec)
}

/// Looks up a builtin language. Besides the plain names of [`BUILTIN_NAMES`],
/// combinator expressions are accepted: `com(L)`, `reverse(L)`, `star(L)`,
/// `complement(L)`, `shuffle(L1,L2)` and `product(L1,L2)`, e.g.
/// `shuffle(L_eq,L_2eq)`.
pub fn builtin_language(expr: &str) -> Result<LanguageSpec, OracleError> {
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let mut parser = ExprParser {
        src: &compact,
        pos: 0,
        expr,
    };
    let spec = parser.expr()?;
    if parser.pos != compact.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(spec)
}

struct ExprParser<'a> {
    src: &'a str,
    pos: usize,
    expr: &'a str,
}

impl ExprParser<'_> {
    fn error(&self, message: &str) -> OracleError {
        OracleError::Expression {
            expr: self.expr.to_string(),
            message: format!("{message} at offset {}", self.pos),
        }
    }

    fn eat(&mut self, c: char) -> Result<(), OracleError> {
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<LanguageSpec, OracleError> {
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        let ident = &rest[..len];
        if ident.is_empty() {
            return Err(self.error("expected a language name"));
        }
        self.pos += len;
        if !self.src[self.pos..].starts_with('(') {
            return named(ident).ok_or_else(|| OracleError::UnknownLanguage(ident.to_string()));
        }
        self.eat('(')?;
        let first = self.expr()?;
        let spec = match ident {
            "com" => first.com(),
            "reverse" => first.reverse(),
            "star" => first.star(),
            "complement" => first.complement(),
            "shuffle" | "product" => {
                self.eat(',')?;
                let second = self.expr()?;
                if ident == "shuffle" {
                    first.shuffle(&second)
                } else {
                    first.product(&second)
                }
            }
            other => return Err(OracleError::UnknownLanguage(other.to_string())),
        };
        self.eat(')')?;
        Ok(spec)
    }
}
