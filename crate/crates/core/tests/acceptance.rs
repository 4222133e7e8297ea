//! Acceptance criteria 1 to 10. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use translucent::automaton::{Alphabet, EndMode, HeadMode};
use translucent::constructions::{self, Construction, ConstructionError};
use translucent::exec::{Machine, SearchLimits, Verdict};
use translucent::fast::{bench, FastMachine};
use translucent::fixtures;
use translucent::oracle::{
    brute_accepts, builtin_language, enumerate, equivalent_up_to, words_up_to, LanguageSpec, Source,
};
use translucent::random::{Generator, RandomSpec};
use translucent::{classify, TlAutomaton};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn equal(a: Source, b: Source, max_len: usize) -> Result<(), String> {
    let (na, nb) = (a.name().to_string(), b.name().to_string());
    let r = equivalent_up_to(&a, &b, max_len).map_err(|e| e.to_string())?;
    ensure(r.is_equivalent(), || format!("{na} vs {nb}: {r}"))
}

fn lang(aut: &TlAutomaton) -> LanguageSpec {
    LanguageSpec::from_automaton(aut.clone()).expect("valid automaton")
}

fn random(seed: u64, count: usize, head: HeadMode, end: EndMode) -> Vec<TlAutomaton> {
    let mut g = Generator::new(seed);
    (0..count)
        .map(|i| {
            let mut a = g.automaton(&RandomSpec::new(head, end, i % 2 == 0));
            a.name = format!("random{seed}.{i}");
            a
        })
        .collect()
}

fn random_det(seed: u64, count: usize, head: HeadMode, end: EndMode) -> Vec<TlAutomaton> {
    let mut g = Generator::new(seed);
    (0..count)
        .map(|i| {
            let mut a = g.automaton(&RandomSpec::new(head, end, true));
            a.name = format!("random{seed}.{i}");
            a
        })
        .collect()
}

/// Fixtures a construction accepts, plus 50 random automata of its input
/// variant.
fn inputs(f: fn(&TlAutomaton) -> Result<Construction, ConstructionError>, random_set: Vec<TlAutomaton>) -> Vec<TlAutomaton> {
    let mut v: Vec<TlAutomaton> = fixtures::all().into_iter().filter(|a| f(a).is_ok()).collect();
    v.extend(random_set);
    v
}

fn relabel(aut: &TlAutomaton, map: &BTreeMap<char, char>) -> TlAutomaton {
    let mut out = aut.clone();
    out.alphabet = Alphabet::new(aut.alphabet.letters().iter().map(|c| map[c]));
    out.translucency = aut
        .translucency
        .iter()
        .map(|(q, t)| (q.clone(), t.iter().map(|c| map[c]).collect()))
        .collect();
    out.transitions = aut
        .transitions
        .iter()
        .map(|((q, c), t)| ((q.clone(), map[c]), t.clone()))
        .collect();
    out
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let aut = enumerate(&Source::Automaton(fixtures::a_vee_c()), 8).map_err(|e| e.to_string())?;
    let spec = enumerate(&Source::Language(builtin_language("L_vee_c").unwrap()), 8).map_err(|e| e.to_string())?;
    ensure(aut == spec, || "enumerations differ at max_len 8".into())?;
    let six = aut.iter().filter(|w| w.chars().count() <= 6).count();
    ensure(six == 56, || format!("{six} words up to length 6, expected 56"))?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(10), || format!("took {t:?}"))?;
    Ok(format!("{} words up to 8, 56 up to 6, {:.2}s", aut.len(), t.as_secs_f64()))
}

fn criterion_2() -> Check {
    let dir = manifest_dir();
    let fixture = dir.join("fixtures/a_vee_c.tla");
    for (word, golden) in [("aabbcba", "aabbcba.trace"), ("bbaabb", "bbaabb.trace")] {
        let out = Command::new(env!("CARGO_BIN_EXE_tla"))
            .arg("run")
            .arg(&fixture)
            .arg(word)
            .arg("--trace")
            .output()
            .map_err(|e| e.to_string())?;
        let expected = std::fs::read(dir.join("tests/golden").join(golden)).map_err(|e| e.to_string())?;
        ensure(out.stdout == expected, || {
            format!("{word}: got\n{}", String::from_utf8_lossy(&out.stdout))
        })?;
        ensure(out.status.code() == Some(0), || format!("{word}: exit {:?}", out.status.code()))?;
    }
    Ok("both traces bit-exact".into())
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let mut checked = 0usize;
    type F = fn(&TlAutomaton) -> Result<Construction, ConstructionError>;
    let rr = |seed| random(seed, 50, HeadMode::Returning, EndMode::Repetitive);
    let rep_any = |seed| {
        let mut v = random(seed, 25, HeadMode::Returning, EndMode::Repetitive);
        v.extend(random(seed + 1000, 25, HeadMode::NonReturning, EndMode::Repetitive));
        v
    };
    let same_language: Vec<(&str, F, Vec<TlAutomaton>)> = vec![
        ("embed", constructions::embed_repetitive, random(1, 50, HeadMode::Returning, EndMode::Halting)),
        ("nrnr-to-nfa", constructions::nrnr_to_nfa, random(2, 50, HeadMode::NonReturning, EndMode::Halting)),
        ("to-nonreturning", constructions::repetitive_to_nonreturning, rr(3)),
        ("eliminate-loops", constructions::eliminate_end_loops, rep_any(4)),
        ("complete-reading", constructions::complete_reading, rep_any(5)),
        ("normalize", constructions::normalize, rep_any(6)),
        ("to-plain", constructions::repetitive_to_plain, rr(7)),
        (
            "first-letter",
            constructions::first_letter_normalize,
            random_det(8, 50, HeadMode::Returning, EndMode::Repetitive),
        ),
    ];
    for (name, f, set) in same_language {
        for aut in inputs(f, set) {
            let out = f(&aut).map_err(|e| format!("{name} on {}: {e}", aut.name))?.automaton;
            equal(Source::Automaton(aut.clone()), Source::Automaton(out), 6).map_err(|e| format!("{name}: {e}"))?;
            checked += 1;
        }
    }

    // Complement: L(out) = Σ* \ L(in).
    let det = random_det(9, 50, HeadMode::Returning, EndMode::Repetitive);
    for aut in inputs(constructions::complement_deterministic, det) {
        let out = constructions::complement_deterministic(&aut).map_err(|e| e.to_string())?.automaton;
        equal(Source::Automaton(out), Source::Language(lang(&aut).complement()), 6)
            .map_err(|e| format!("complement: {e}"))?;
        checked += 1;
    }

    // Quotient: L(out) = w⟍L(in).
    let mut g = Generator::new(10);
    let det = random_det(11, 50, HeadMode::Returning, EndMode::Repetitive);
    for aut in inputs(constructions::first_letter_normalize, det) {
        let word = g.word(&aut.alphabet, 2);
        let out = constructions::left_quotient(&aut, &word).map_err(|e| e.to_string())?.automaton;
        equal(Source::Automaton(out), Source::Language(lang(&aut).quotient(&word)), 6)
            .map_err(|e| format!("quotient by {word:?}: {e}"))?;
        checked += 1;
    }

    // Shuffle: L(out) = L(a) ⧢ L(b).
    let mut pairs = vec![
        (fixtures::l_eq(), fixtures::l_2eq_prime()),
        (fixtures::l_geq(), fixtures::l_2eq_prime()),
        (fixtures::a_vee_c(), relabel(&fixtures::l_eq(), &BTreeMap::from([('a', 'd'), ('b', 'e')]))),
    ];
    let mut g = Generator::new(12);
    let spec = RandomSpec {
        max_letters: 2,
        ..RandomSpec::new(HeadMode::Returning, EndMode::Repetitive, true)
    };
    let to_de = BTreeMap::from([('a', 'd'), ('b', 'e')]);
    for _ in 0..50 {
        let a = g.automaton(&spec);
        let b = relabel(&g.automaton(&spec), &to_de);
        pairs.push((a, b));
    }
    for (a, b) in pairs {
        let out = constructions::disjoint_shuffle(&a, &b).map_err(|e| e.to_string())?.automaton;
        equal(Source::Automaton(out), Source::Language(lang(&a).shuffle(&lang(&b))), 6)
            .map_err(|e| format!("shuffle {} {}: {e}", a.name, b.name))?;
        checked += 1;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(300), || format!("took {t:?}"))?;
    Ok(format!("{checked} construction runs, zero counterexamples, {:.1}s", t.as_secs_f64()))
}

fn criterion_4() -> Check {
    type F = fn(&TlAutomaton) -> Result<Construction, ConstructionError>;
    let all: Vec<(&str, F)> = vec![
        ("embed", constructions::embed_repetitive),
        ("nrnr-to-nfa", constructions::nrnr_to_nfa),
        ("to-nonreturning", constructions::repetitive_to_nonreturning),
        ("eliminate-loops", constructions::eliminate_end_loops),
        ("complete-reading", constructions::complete_reading),
        ("normalize", constructions::normalize),
        ("complement", constructions::complement_deterministic),
        ("first-letter", constructions::first_letter_normalize),
    ];
    let mut pool = fixtures::all();
    for (seed, head, end) in [
        (20, HeadMode::Returning, EndMode::Halting),
        (21, HeadMode::Returning, EndMode::Repetitive),
        (22, HeadMode::NonReturning, EndMode::Halting),
        (23, HeadMode::NonReturning, EndMode::Repetitive),
    ] {
        pool.extend(random_det(seed, 50, head, end));
    }
    let pool: Vec<TlAutomaton> = pool.into_iter().filter(|a| classify(a).unwrap().deterministic).collect();
    let mut checked = 0;
    let det_out = |name: &str, aut: &TlAutomaton, out: &TlAutomaton| {
        ensure(classify(out).unwrap().deterministic, || format!("{name} on {} lost determinism", aut.name))
    };
    for aut in &pool {
        for (name, f) in &all {
            if let Ok(out) = f(aut) {
                det_out(name, aut, &out.automaton)?;
                checked += 1;
            }
        }
        if let Ok(out) = constructions::left_quotient(aut, "ab") {
            det_out("quotient", aut, &out.automaton)?;
            checked += 1;
        }
        let partner = fixtures::l_2eq_prime();
        if let Ok(out) = constructions::disjoint_shuffle(aut, &partner) {
            det_out("shuffle", aut, &out.automaton)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} deterministic inputs stayed deterministic"))
}

fn criterion_5() -> Check {
    let mut pool: Vec<TlAutomaton> = fixtures::all()
        .into_iter()
        .filter(|a| constructions::normalize(a).is_ok())
        .collect();
    pool.extend(random(30, 50, HeadMode::Returning, EndMode::Repetitive));
    pool.extend(random(31, 50, HeadMode::NonReturning, EndMode::Repetitive));
    let mut runs = 0;
    for aut in &pool {
        let out = constructions::normalize(aut).map_err(|e| e.to_string())?.automaton;
        let m = Machine::new(&out).map_err(|e| e.to_string())?;
        for w in words_up_to(&out.alphabet, 6) {
            if m.is_deterministic() {
                let t = m.run_deterministic(&w, None).map_err(|e| e.to_string())?;
                ensure(t.verdict != Verdict::StepLimit, || format!("{}: StepLimit on {w:?}", aut.name))?;
            }
            let s = m.run_nondeterministic(&w, SearchLimits::default()).map_err(|e| e.to_string())?;
            ensure(s.verdict != Verdict::StepLimit, || format!("{}: search limit on {w:?}", aut.name))?;
            if let Some(t) = s.witness {
                ensure(t.last_config().remaining.is_empty() && t.last_config().consumed_prefix.is_empty(), || {
                    format!("{}: witness for {w:?} ends on {}", aut.name, t.last_config())
                })?;
            }
            runs += 1;
        }
    }
    Ok(format!("{} normalized automata, {runs} runs", pool.len()))
}

fn criterion_6() -> Check {
    let set = random(40, 50, HeadMode::NonReturning, EndMode::Halting);
    for aut in &set {
        let out = constructions::nrnr_to_nfa(aut).map_err(|e| e.to_string())?.automaton;
        let d = classify(&out).map_err(|e| e.to_string())?;
        ensure(
            out.translucency.values().all(|t| t.is_empty()) && d.head_mode == HeadMode::Returning && d.end_mode == EndMode::Halting,
            || format!("{}: output is not a classical automaton", aut.name),
        )?;
        equal(Source::Automaton(aut.clone()), Source::Automaton(out), 7)?;
    }
    Ok(format!("{} random nr-nr automata", set.len()))
}

fn criterion_7() -> Check {
    let com = lang(&fixtures::regular_ab_abb()).com();
    equal(Source::Language(com), Source::Language(builtin_language("L_vee").unwrap()), 8)?;
    let shuffle = builtin_language("shuffle(L_eq,L_2eq)").unwrap();
    equal(Source::Language(shuffle), Source::Language(builtin_language("L_sandwich").unwrap()), 8)?;
    Ok("com((ab)*+(abb)*) = L_vee and L_eq shuffle L_2eq = L_sandwich up to 8".into())
}

fn criterion_8() -> Check {
    let aut = fixtures::l2_nr();
    let l2 = builtin_language("L_2").unwrap();
    let accepted = enumerate(&Source::Automaton(aut.clone()), 12).map_err(|e| e.to_string())?;
    let expected: Vec<String> = (0..=6).map(|n| format!("{}{}", "a".repeat(n), "b".repeat(n))).collect();
    ensure(accepted == expected, || format!("accepted {accepted:?}"))?;
    equal(Source::Automaton(aut), Source::Language(l2), 12)?;
    Ok("a^n b^n exactly, up to length 12".into())
}

fn criterion_9() -> Check {
    let mut compared = 0;
    for aut in fixtures::all() {
        let m = Machine::new(&aut).map_err(|e| e.to_string())?;
        for w in words_up_to(&aut.alphabet, 6) {
            let (x, y) = (brute_accepts(&aut, &w).map_err(|e| e.to_string())?, m.accepts(&w).map_err(|e| e.to_string())?);
            ensure(x == y, || format!("{} on {w:?}: brute {x}, engine {y}", aut.name))?;
            compared += 1;
        }
    }
    let mut g = Generator::new(50);
    let kinds = [
        (HeadMode::Returning, EndMode::Halting),
        (HeadMode::Returning, EndMode::Repetitive),
        (HeadMode::NonReturning, EndMode::Halting),
        (HeadMode::NonReturning, EndMode::Repetitive),
        (HeadMode::RotatingJump, EndMode::Halting),
    ];
    for i in 0..10_000 {
        let (head, end) = kinds[i % kinds.len()];
        let aut = g.automaton(&RandomSpec::new(head, end, i % 3 == 0));
        let w = g.word(&aut.alphabet, 10);
        let x = brute_accepts(&aut, &w).map_err(|e| e.to_string())?;
        let y = translucent::accepts(&aut, &w).map_err(|e| e.to_string())?;
        ensure(x == y, || format!("random pair {i} ({head:?}, {end:?}) on {w:?}: brute {x}, engine {y}"))?;
        compared += 1;
    }
    Ok(format!("{compared} comparisons"))
}

fn criterion_10() -> Check {
    let mut pool: Vec<TlAutomaton> = fixtures::all().into_iter().filter(|a| FastMachine::new(a).is_ok()).collect();
    pool.extend(random_det(60, 25, HeadMode::Returning, EndMode::Halting));
    pool.extend(random_det(61, 25, HeadMode::Returning, EndMode::Repetitive));
    let agree = |aut: &TlAutomaton, fm: &FastMachine, m: &Machine, w: &str| -> Result<(), String> {
        let fast = fm.accepts(w).map_err(|e| e.to_string())?;
        let t = m.run_deterministic(w, None).map_err(|e| e.to_string())?;
        // A step-limited run is a marker loop, which rejects.
        let slow = t.verdict == Verdict::Accept;
        ensure(fast == slow, || format!("{} on {w:?}: fast {fast}, engine {:?}", aut.name, t.verdict))
    };
    let mut exhaustive = 0;
    for aut in &pool {
        let (fm, m) = (FastMachine::new(aut).unwrap(), Machine::new(aut).unwrap());
        for w in words_up_to(&aut.alphabet, 6) {
            agree(aut, &fm, &m, &w)?;
            exhaustive += 1;
        }
    }
    let mut g = Generator::new(62);
    for i in 0..10_000 {
        let aut = &pool[i % pool.len()];
        let (fm, m) = (FastMachine::new(aut).unwrap(), Machine::new(aut).unwrap());
        let w = g.word(&aut.alphabet, 64);
        agree(aut, &fm, &m, &w)?;
    }

    let start = Instant::now();
    let lengths: Vec<usize> = (10..=19).map(|k| 1usize << k).collect();
    let rows = bench(&fixtures::l_eq(), &lengths).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let mut worst: f64 = 0.0;
    for pair in rows.windows(2) {
        let ratio = pair[1].time.as_secs_f64() / pair[0].time.as_secs_f64();
        worst = worst.max(ratio);
        ensure(ratio <= 2.5, || {
            format!("ratio {ratio:.2} from {} to {}", pair[0].length, pair[1].length)
        })?;
    }
    ensure(rows.iter().all(|r| r.accepted), || "(ab)^k must be accepted".into())?;
    ensure(elapsed < Duration::from_secs(60), || format!("bench took {elapsed:?}"))?;
    Ok(format!(
        "{exhaustive} exhaustive + 10000 random agreements; worst doubling ratio {worst:.2}; bench {:.1}s",
        elapsed.as_secs_f64()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("example-language identity", criterion_1),
        ("golden traces", criterion_2),
        ("construction soundness", criterion_3),
        ("determinism preservation", criterion_4),
        ("normalization postconditions", criterion_5),
        ("nr-nr collapse", criterion_6),
        ("non-closure witnesses", criterion_7),
        ("separation fixture", criterion_8),
        ("engine vs independent oracle", criterion_9),
        ("fast membership", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
