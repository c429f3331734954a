//! Writing, reading and checking rif-family/1 files, also through the CLI.

use rif::construct::neq2k_construction;
use rif::io::{format_family, parse_family, read_family, write_family};

pub fn run() -> rif::Result<()> {
    let f = neq2k_construction(4)?;
    let text = format_family(&f);
    println!("{}", text.lines().take(6).collect::<Vec<_>>().join("\n"));
    println!("  ...");
    assert_eq!(parse_family(&text)?, f);

    let path = std::env::temp_dir().join(format!("rif-example-{}.json", std::process::id()));
    write_family(&path, &f)?;
    assert_eq!(read_family(&path)?, f);

    let mut out = Vec::new();
    let code = rif::cli::run(
        ["rif", "verify", "--input", path.to_str().unwrap()],
        &mut std::io::empty(),
        &mut out,
        &mut std::io::sink(),
    );
    print!(
        "rif verify (exit {code}):\n{}",
        String::from_utf8_lossy(&out)
    );
    let _ = std::fs::remove_file(&path);
    Ok(())
}

#[allow(dead_code)]
fn main() -> rif::Result<()> {
    run()
}
