//! `y = w + xy - yx` modulo `w x^i w`: the geometric series in `l_x - r_x`
//! and the closed binomial form give the same element.

use nilplab::freetrunc::DEFAULT_MAX_DIM;
use nilplab::scenarios::{build_sandwich, y_xy_yx_binomial, y_xy_yx_geometric, y_xy_yx_rank};

fn main() -> nilplab::Result<()> {
    let d: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let a = build_sandwich(d, DEFAULT_MAX_DIM)?;
    let geometric = y_xy_yx_geometric(&a)?;
    let binomial = y_xy_yx_binomial(&a)?;
    println!("stage {d}: dim {}", a.dim());
    for (w, c) in a.terms(&geometric) {
        println!("  {c:>4} {w}");
    }
    println!("geometric == binomial: {}", geometric == binomial);
    for k in 2..=d + 2 {
        println!("rank of the coefficient family at stage {k}: {}", y_xy_yx_rank(k, DEFAULT_MAX_DIM)?);
    }
    Ok(())
}
