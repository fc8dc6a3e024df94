//! The squares chain `x_m x_m = x_{m+1}` attains the largest possible gap
//! between the weak and strong nilpotence indices.

use nilplab::multiplication::nilpotence_report;
use nilplab::scenarios::build_xixi;

fn main() -> nilplab::Result<()> {
    println!("{:>3} {:>4} {:>4} {:>4} {:>14}", "n", "N1", "N2", "N3", "2^(n-2)+1");
    for n in 2..=8 {
        let r = nilpotence_report(&build_xixi(n)?)?;
        let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        println!("{n:>3} {:>4} {:>4} {:>4} {:>14}", show(r.n1), show(r.n2), show(r.n3), (1 << (n - 2)) + 1);
    }
    Ok(())
}
