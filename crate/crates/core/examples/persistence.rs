//! Save an index, load it back and show that damage is detected.

use circdict::{persist, BuildOptions, CdmIndex, Dictionary, Error};

fn main() -> circdict::Result<()> {
    let dict = Dictionary::new(&["abcabc", "bcabc", "cab"])?;
    let index = CdmIndex::build(&dict, BuildOptions::with_samples(2, 2));
    let path = std::env::temp_dir().join("circdict-example.cdmi");

    persist::save(&index, &path)?;
    let loaded = persist::load(&path)?;
    println!(
        "{} bytes written to {}",
        std::fs::metadata(&path)?.len(),
        path.display()
    );
    assert_eq!(loaded.cdm(b"abcbca"), index.cdm(b"abcbca"));

    let mut bytes = std::fs::read(&path)?;
    let last = bytes.len() - 1;
    bytes[last] ^= 1;
    match persist::from_bytes(&bytes) {
        Err(Error::Corrupt(why)) => println!("flipped bit rejected: {why}"),
        other => panic!("damage went unnoticed: {other:?}"),
    }
    std::fs::remove_file(&path)?;
    Ok(())
}
