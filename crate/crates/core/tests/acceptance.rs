//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use circdict::corpus::{self, TrialShape};
use circdict::oracle::{check_bounds, check_index, Report};
use circdict::tables::{compare_running_example, RUNNING_EXAMPLE};
use circdict::{persist, BuildOptions, CdmIndex, Dictionary};

const SEED: u64 = 20_240_601;
const TRIALS: usize = 1000;
const RATES: [usize; 4] = [1, 2, 3, 5];
const GOLDEN_CDM: [(usize, usize); 4] = [(1, 9), (1, 13), (2, 10), (4, 14)];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn from_report(r: &Report, extra: &str) -> Outcome {
    let first = r
        .failures
        .first()
        .map(|f| format!("; first: {f}"))
        .unwrap_or_default();
    outcome(
        r.ok(),
        format!(
            "{} checks, {} failures{extra}{first}",
            r.checks,
            r.failures.len()
        ),
    )
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.detail = format!("{} [{took:.2?}]", o.detail);
    if let Some(limit) = limit {
        if took > limit {
            o.ok = false;
            o.detail.push_str(&format!(" exceeds {limit:?}"));
        }
    }
    o
}

fn running_index() -> CdmIndex {
    let t = Dictionary::new(&RUNNING_EXAMPLE).unwrap();
    CdmIndex::build(&t, BuildOptions::with_samples(2, 2))
}

fn golden_tables(idx: &CdmIndex) -> Outcome {
    let diffs = compare_running_example(idx);
    match diffs.first() {
        None => outcome(true, "all reference tables reproduced"),
        Some((name, got, want)) => outcome(false, format!("{name}: got {got}, want {want}")),
    }
}

fn golden_query(idx: &CdmIndex) -> Outcome {
    let got: Vec<(usize, usize)> = idx.cdm(b"abcbca").iter().map(|o| (o.i, o.k)).collect();
    outcome(got == GOLDEN_CDM, format!("cdm(abcbca) = {got:?}"))
}

struct Trial {
    dict: Dictionary,
    opts: BuildOptions,
    patterns: Vec<Vec<u8>>,
}

fn random_corpus() -> Vec<Trial> {
    let shape = TrialShape::default();
    let mut rng = corpus::rng(SEED);
    (0..TRIALS)
        .map(|trial| {
            let dict = corpus::random_dictionary(&mut rng, &shape);
            let patterns = (0..3)
                .map(|_| corpus::random_pattern(&mut rng, &dict, shape.max_m))
                .collect();
            Trial {
                dict,
                opts: BuildOptions::with_samples(RATES[trial % 4], RATES[(trial / 4) % 4]),
                patterns,
            }
        })
        .collect()
}

fn oracle_equivalence(corpus: &[Trial]) -> Outcome {
    let mut r = Report::default();
    for t in corpus {
        r.merge(check_index(
            &t.dict,
            &CdmIndex::build(&t.dict, t.opts),
            &t.patterns,
        ));
    }
    from_report(&r, &format!(" over {} trials", corpus.len()))
}

fn edge_dictionaries() -> Outcome {
    let cases: [&[&str]; 4] = [
        &["aa"],
        &["ab", "ba"],
        &["abab", "abab"],
        &["a", "aa", "aaa"],
    ];
    let patterns: Vec<Vec<u8>> = [
        "a", "aa", "aaaaaaa", "ab", "ba", "abab", "babababa", "aabbaab", "c", "abcba",
    ]
    .iter()
    .map(|p| p.as_bytes().to_vec())
    .collect();
    let mut r = Report::default();
    for strings in cases {
        let dict = Dictionary::new(strings).unwrap();
        for s in 1..=3 {
            r.merge(check_index(
                &dict,
                &CdmIndex::build(&dict, BuildOptions::with_samples(s, s)),
                &patterns,
            ));
        }
    }
    from_report(&r, "")
}

fn complexity_counters(corpus: &[Trial]) -> Outcome {
    let mut r = Report::default();
    for t in corpus {
        r.merge(check_bounds(&CdmIndex::build(&t.dict, t.opts), &t.patterns));
    }
    from_report(&r, "")
}

fn adaptive_equivalence(corpus: &[Trial]) -> Outcome {
    let mut mismatches = 0;
    let mut compared = 0;
    for t in corpus {
        let idx = CdmIndex::build(&t.dict, t.opts);
        for p in &t.patterns {
            compared += 1;
            if idx.cdm(p) != idx.cdm_adaptive(p) {
                mismatches += 1;
            }
        }
    }
    // Unary dictionary: every start position reports every rotation, so the
    // output outgrows n right away.
    let dict = Dictionary::new(&["a", "aa", "aaa"]).unwrap();
    let idx = CdmIndex::build(&dict, BuildOptions::with_samples(3, 3));
    let p = vec![b'a'; 20];
    let (plain, _) = idx.cdm_with_stats(&p);
    let (adaptive, st) = idx.cdm_adaptive_with_stats(&p);
    let forced = plain.len() >= idx.n() && st.switched_at.is_some() && plain == adaptive;
    outcome(
        mismatches == 0 && forced,
        format!(
            "{compared} patterns, {mismatches} mismatches; forced case occ={} n={} switched_at={:?}",
            plain.len(),
            idx.n(),
            st.switched_at
        ),
    )
}

fn scratch_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("circdict-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn persistence() -> Outcome {
    let idx = running_index();
    let bytes = persist::to_bytes(&idx);
    let back = match persist::from_bytes(&bytes) {
        Ok(b) => b,
        Err(e) => return outcome(false, format!("reload failed: {e}")),
    };
    let tables = golden_tables(&back);
    let query = golden_query(&back);

    let dir = scratch_dir();
    let path = dir.join("corrupt.cdmi");
    let mut bad = bytes.clone();
    let pos = persist::HEADER_LEN + (bytes.len() - persist::HEADER_LEN) / 2;
    bad[pos] ^= 0x40;
    std::fs::write(&path, &bad).unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_circdict"))
        .arg("query")
        .arg(&path)
        .arg("abc")
        .output()
        .expect("run circdict");
    let _ = std::fs::remove_dir_all(&dir);
    let code = status.status.code();
    outcome(
        tables.ok && query.ok && back == idx && code == Some(3),
        format!(
            "round trip: tables {}, query {}; corrupted byte {pos}: exit {code:?}",
            if tables.ok { "ok" } else { "differ" },
            if query.ok { "ok" } else { "differs" },
        ),
    )
}

fn space() -> Outcome {
    let n = 1_000_000;
    let dict = corpus::uniform_dictionary(SEED, n, 100, 4);
    let idx = CdmIndex::build(&dict, BuildOptions::default());
    let size = persist::to_bytes(&idx).len();
    let s = &dict.strings()[dict.d() / 2];
    let sample: Vec<u8> = s.iter().chain(s).copied().collect();
    let hits = idx.cdm(&sample).len();
    outcome(
        size <= 4 * n && hits >= s.len(),
        format!(
            "n={n} sigma=4 d={}: {size} bytes, {:.3} bytes/symbol (limit 4.000), {hits} hits on a doubled string",
            idx.d(),
            size as f64 / n as f64
        ),
    )
}

fn main() {
    let corpus = random_corpus();
    let idx = running_index();
    let criteria: Vec<(&str, Outcome)> = vec![
        (
            "running-example tables",
            timed(Some(Duration::from_secs(1)), || golden_tables(&idx)),
        ),
        (
            "running-example query",
            timed(Some(Duration::from_secs(1)), || golden_query(&idx)),
        ),
        (
            "oracle equivalence",
            timed(Some(Duration::from_secs(60)), || {
                oracle_equivalence(&corpus)
            }),
        ),
        ("edge dictionaries", timed(None, edge_dictionaries)),
        (
            "work counters",
            timed(None, || complexity_counters(&corpus)),
        ),
        (
            "adaptive equivalence",
            timed(None, || adaptive_equivalence(&corpus)),
        ),
        ("persistence", timed(None, persistence)),
        (
            "space at n=10^6",
            timed(Some(Duration::from_secs(120)), space),
        ),
    ];
    let mut failed = 0;
    for (x, (name, o)) in criteria.iter().enumerate() {
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {tag} {name}: {}", x + 1, o.detail);
        failed += usize::from(!o.ok);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
