//! Builds a truncated free algebra from a JSON presentation and lists its
//! basis words by degree.

use nilplab::freetrunc::{build_truncated, Presentation};

const PRESENTATION: &str = r#"{
    "alphabet": ["x", "w"],
    "sandwich": [["w", "x", "w"]],
    "degree": 6
}"#;

fn main() -> nilplab::Result<()> {
    let text = std::env::args()
        .nth(1)
        .map(std::fs::read_to_string)
        .transpose()
        .map_err(|e| nilplab::Error::Parse(e.to_string()))?;
    let p = Presentation::from_json(text.as_deref().unwrap_or(PRESENTATION))?;
    let a = build_truncated(&p)?;
    println!("dimension {}", a.dim());
    for len in 1..p.degree {
        let words: Vec<String> = a.words().iter().filter(|w| w.len() == len).map(|w| w.to_string()).collect();
        println!("  degree {len}: {}", words.join(" "));
    }
    Ok(())
}
