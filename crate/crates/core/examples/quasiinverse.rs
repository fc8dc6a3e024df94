//! Quasiinverses of nilpotent multiplication operators, and solving
//! `(1 - l_x r_z) y = w` in a finite stage.

use nilplab::freetrunc::solve_unipotent;
use nilplab::multiplication::{left_op, quasi_mult, quasiinverse, right_op, LinearOperator};
use nilplab::scenarios::build_xwz;

fn main() -> nilplab::Result<()> {
    let a = build_xwz(7, 512)?;
    let alg = a.algebra();
    let lr = left_op(alg, &a.word("x")?)?.compose(&right_op(alg, &a.word("z")?)?);
    let u = lr.scale(&a.field().from_i64(-1));
    let q = quasiinverse(&u)?;
    println!("u * q = 0: {}", quasi_mult(&u, &q)?.is_zero());

    let y = solve_unipotent(&lr, &a.word("w")?)?;
    println!("y = {}", alg.format(&y));
    println!("y = w + q(w): {}", y == a.word("w")?.add(&q.apply(&a.word("w")?)));

    let minus_id = LinearOperator::identity(a.field(), a.dim()).scale(&a.field().from_i64(-1));
    match quasiinverse(&minus_id) {
        Ok(_) => println!("-1 is quasiinvertible"),
        Err(e) => println!("-1: {e}"),
    }
    Ok(())
}
