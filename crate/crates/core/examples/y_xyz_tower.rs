//! Rank growth of the right coefficients of `y = w + xyz` along the
//! truncation tower. Pass degrees as arguments (default `4 6 8 10 12`).

use nilplab::freetrunc::DEFAULT_MAX_DIM;
use nilplab::scenarios::{build_xwz, run_tower, y_xyz_element};

fn main() -> nilplab::Result<()> {
    let degrees: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let degrees = if degrees.is_empty() { vec![4, 6, 8, 10, 12] } else { degrees };

    let top = *degrees.iter().max().unwrap();
    let a = build_xwz(top, DEFAULT_MAX_DIM)?;
    let y = y_xyz_element(&a)?;
    println!("stage {top}: dim {}, y = {}", a.dim(), a.algebra().format(&y));

    let report = run_tower("y-xyz", &degrees, DEFAULT_MAX_DIM, false)?;
    println!("{report}");
    Ok(())
}
