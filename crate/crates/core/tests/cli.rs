use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use circdict::tables::RUNNING_EXAMPLE_TABLES;

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("circdict-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn circdict<I: IntoIterator<Item = S>, S: AsRef<std::ffi::OsStr>>(args: I) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circdict"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn build_running(dir: &Scratch) -> PathBuf {
    let input = dir.path("t.txt");
    std::fs::write(&input, "abcabc\nbcabc\ncab\n").unwrap();
    let index = dir.path("t.cdmi");
    let o = circdict([
        "build",
        p(&input),
        p(&index),
        "--sa-sample",
        "2",
        "--lcp-sample",
        "2",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    index
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn query_reports_occurrences() {
    let dir = Scratch::new("query");
    let index = build_running(&dir);
    let o = circdict(["query", p(&index), "abcbca"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "# pattern=abcbca occurrences=4\n1\t9\t2\t3\n1\t13\t3\t2\n2\t10\t2\t4\n4\t14\t3\t3\n"
    );
    let adaptive = circdict(["query", p(&index), "abcbca", "--adaptive"]);
    assert_eq!(stdout(&adaptive), stdout(&o));
}

#[test]
fn query_reads_pattern_file() {
    let dir = Scratch::new("pfile");
    let index = build_running(&dir);
    let patterns = dir.path("p.txt");
    std::fs::write(&patterns, "cab\nzzz\n").unwrap();
    let o = circdict(["query", p(&index), "--pattern-file", p(&patterns)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "# pattern=cab occurrences=1\n1\t12\t3\t1\n# pattern=zzz occurrences=0\n"
    );
}

#[test]
fn dump_reproduces_reference_tables() {
    let dir = Scratch::new("dump");
    let index = build_running(&dir);
    let all = stdout(&circdict(["dump", p(&index)]));
    for (name, want) in RUNNING_EXAMPLE_TABLES {
        assert!(
            all.lines().any(|l| l == format!("{name}: {want}")),
            "{name}"
        );
    }
    assert_eq!(stdout(&circdict(["dump", p(&index), "bwt"])), "ccacabbb\n");
}

#[test]
fn verify_passes_and_catches_faults() {
    let dir = Scratch::new("verify");
    let input = dir.path("t.txt");
    std::fs::write(&input, "abcabc\nbcabc\ncab\n").unwrap();
    let golden = circdict(["verify", p(&input)]);
    assert_eq!(golden.status.code(), Some(0));
    assert!(stdout(&golden).contains("golden bwt"));
    assert_eq!(
        circdict(["verify", "--trials", "100"]).status.code(),
        Some(0)
    );
    assert_eq!(
        circdict(["verify", "--trials", "100", "--inject-fault"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        circdict(["verify", p(&input), "--inject-fault"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn exit_codes() {
    let dir = Scratch::new("exit");
    let index = build_running(&dir);
    assert_eq!(circdict(["frobnicate"]).status.code(), Some(2));
    assert_eq!(circdict(["query", p(&index)]).status.code(), Some(2));
    assert_eq!(circdict(["dump", p(&index), "nope"]).status.code(), Some(2));
    assert_eq!(
        circdict(["query", p(&dir.path("missing")), "a"])
            .status
            .code(),
        Some(3)
    );

    let empty = dir.path("empty.txt");
    std::fs::write(&empty, "ab\n\ncd\n").unwrap();
    assert_eq!(
        circdict(["build", p(&empty), p(&dir.path("x"))])
            .status
            .code(),
        Some(3)
    );

    let mut bytes = std::fs::read(&index).unwrap();
    let last = bytes.len() - 1;
    bytes[last] ^= 0x10;
    let bad = dir.path("bad.cdmi");
    std::fs::write(&bad, bytes).unwrap();
    let o = circdict(["query", p(&bad), "abc"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("corrupt"));
}

#[test]
fn binary_dictionary_input() {
    let dir = Scratch::new("binary");
    let dict = circdict::Dictionary::new(&["ab\nc", "ca"]).unwrap();
    let input = dir.path("t.bin");
    std::fs::write(&input, dict.to_binary()).unwrap();
    let index = dir.path("t.cdmi");
    let o = circdict(["build", p(&input), p(&index), "--binary-input"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let o = circdict(["query", p(&index), "acab"]);
    assert_eq!(
        stdout(&o),
        "# pattern=acab occurrences=2\n1\t6\t2\t2\n2\t5\t2\t1\n"
    );
}
