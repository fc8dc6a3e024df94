//! Left, right and associator nilpotence indices of the families where
//! they come apart.

use nilplab::algebra::Algebra;
use nilplab::multiplication::OperatorAlgebra;
use nilplab::scenarios::{build_alternating, build_xwi};

fn row(name: &str, a: &Algebra) {
    let show = |v: Option<usize>| v.map_or("none".to_string(), |v| v.to_string());
    println!(
        "{name:<14} dim {:>2}  M_l {:>4}  M_r {:>4}  M_a {:>4}  N1 {:>4}",
        a.dim(),
        show(OperatorAlgebra::mult_algebra_left(a).nilpotency_index()),
        show(OperatorAlgebra::mult_algebra_right(a).nilpotency_index()),
        show(OperatorAlgebra::mult_algebra_assoc(a).nilpotency_index()),
        show(a.weak_series().vanishing_index),
    );
}

fn main() -> nilplab::Result<()> {
    for d in [2, 4, 6, 8] {
        row(&format!("x w_i, d={d}"), &build_xwi(d)?);
    }
    for d in [2, 4, 6, 8] {
        row(&format!("alt, d={d}"), &build_alternating(d)?);
    }
    Ok(())
}
