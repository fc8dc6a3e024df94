//! The `(p+2)`-dimensional Lie algebra spanned by `D`, `XD` and `x^n e^x`
//! reduced mod `p`. Usage: `modp_lie [p]`.

use nilplab::scenarios::{build_modp_lie, run_modp_lie};

fn main() -> nilplab::Result<()> {
    let p: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let b = build_modp_lie(p)?;
    println!("brackets over F_{p}:");
    for i in 0..b.dim() {
        for j in i + 1..b.dim() {
            let e = b.multiply(&b.basis_element(i), &b.basis_element(j))?;
            if !e.is_zero() {
                println!("  [{}, {}] = {}", b.label(i), b.label(j), b.format(&e));
            }
        }
    }
    println!("{}", run_modp_lie(p)?);
    Ok(())
}
