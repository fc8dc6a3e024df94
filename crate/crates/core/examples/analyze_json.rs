//! Loads an algebra from JSON and prints the full analysis.
//! Usage: `analyze_json [path]` (defaults to `examples/data/two_dim_lie.json`).

use nilplab::algebra::Algebra;
use nilplab::cli::analyze;

fn main() -> nilplab::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| format!("{}/examples/data/two_dim_lie.json", env!("CARGO_MANIFEST_DIR")));
    let text = std::fs::read_to_string(&path).map_err(|e| nilplab::Error::Parse(format!("{path}: {e}")))?;
    let algebra = Algebra::from_json(&text)?;
    println!("{}", analyze(&algebra)?);
    Ok(())
}
