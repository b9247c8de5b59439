//! Text rendering of index tables, plus the reference tables of the running
//! example `T = (abcabc, bcabc, cab)` with both sampling factors set to 2.

use crate::index::CdmIndex;
use crate::succinct::BitVector;

/// Section names accepted by [`render`], in display order.
pub const SECTIONS: &[&str] = &[
    "bwt",
    "bwt-star",
    "partition",
    "b1",
    "b2",
    "b3",
    "sa",
    "b4",
    "b5",
    "sa-star",
    "len",
    "lcp",
    "b6",
    "lcp-star",
    "z",
    "b7",
    "b8",
    "z-star",
    "marked",
];

pub const RUNNING_EXAMPLE: [&str; 3] = ["abcabc", "bcabc", "cab"];

pub const RUNNING_EXAMPLE_TABLES: &[(&str, &str)] = &[
    ("bwt", "ccacabbb"),
    ("bwt-star", "aabbbccc"),
    (
        "partition",
        "{1,4,13} {9} {2,5,14} {7} {10} {3,6,12} {8} {11}",
    ),
    ("b1", "10000010000100"),
    ("b2", "10100100"),
    ("b3", "10010000100"),
    ("sa", "1 13 9 2 14 7 10 3 12 8 11"),
    ("b4", "10110111011"),
    ("b5", "10101101101"),
    ("sa-star", "1 9 14 7 3 12 11"),
    ("len", "6 3 5 6 3 5 5 6 3 5 5"),
    ("lcp", "3 0 5 2 0 4 1"),
    ("b6", "1000001"),
    ("lcp-star", "3 1"),
    ("z", "1110100111010010011101001000"),
    ("b7", "0010100001010010000101001000"),
    ("b8", "1000110001111000000001100001"),
    ("z-star", "1101010100"),
    ("marked", "[1,8] [2,2] [3,3] [4,4] [7,7]"),
];

fn join<I: IntoIterator<Item = T>, T: ToString>(it: I) -> String {
    it.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn bits(b: &BitVector) -> String {
    b.to_bit_string()
}

/// One table as a single line, or `None` for an unknown section.
pub fn render(idx: &CdmIndex, section: &str) -> Option<String> {
    let sym = |c: u32| idx.alphabet().byte_of(c) as char;
    Some(match section {
        "bwt" => idx.ebwt().bwt().iter().map(sym).collect(),
        "bwt-star" => (1..=idx.n_prime())
            .map(|j| sym(idx.ebwt().first_symbol(j)))
            .collect(),
        "partition" => join((1..=idx.n_prime()).map(|j| {
            let d: Vec<String> = idx.expand_dj(j).iter().map(|k| k.to_string()).collect();
            format!("{{{}}}", d.join(","))
        })),
        "b1" => bits(idx.maps().b1()),
        "b2" => bits(idx.ebwt().b2()),
        "b3" => bits(idx.maps().b3()),
        "sa" => join(idx.materialize_sa()),
        "b4" => bits(idx.suffix_array().b4()),
        "b5" => bits(idx.suffix_array().b5()),
        "sa-star" => join(idx.suffix_array().samples().iter()),
        "len" => join((1..=idx.n_star()).map(|t| idx.len_at_slot(t))),
        "lcp" => join(idx.materialize_lcp().into_iter().skip(1)),
        "b6" => bits(idx.lcp().b6()),
        "lcp-star" => join(idx.lcp().samples().iter()),
        "z" => bits(idx.tree().z().bits()),
        "b7" => bits(idx.tree().b7()),
        "b8" => bits(idx.tree().b8()),
        "z-star" => bits(idx.tree().z_star().bits()),
        "marked" => join(
            idx.tree()
                .marked_intervals()
                .into_iter()
                .map(|(l, r)| format!("[{l},{r}]")),
        ),
        _ => return None,
    })
}

/// `(section, got, want)` for every reference table that differs.
pub fn compare_running_example(idx: &CdmIndex) -> Vec<(&'static str, String, &'static str)> {
    RUNNING_EXAMPLE_TABLES
        .iter()
        .filter_map(|&(name, want)| {
            let got = render(idx, name).expect("known section");
            (got != want).then_some((name, got, want))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BuildOptions, Dictionary};

    #[test]
    fn running_example_matches_reference() {
        let t = Dictionary::new(&RUNNING_EXAMPLE).unwrap();
        let idx = CdmIndex::build(&t, BuildOptions::with_samples(2, 2));
        assert_eq!(compare_running_example(&idx), vec![]);
        assert!(render(&idx, "nope").is_none());
        for s in SECTIONS {
            assert!(render(&idx, s).is_some());
        }
    }
}
