//! Draws random sparse algebras over F_2 and F_3 and checks that the weak,
//! strong and multiplication-algebra criteria agree on every one.

use nilplab::algebra::Algebra;
use nilplab::exactmath::Field;
use nilplab::multiplication::nilpotence_report;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_algebra(rng: &mut impl Rng) -> nilplab::Result<Algebra> {
    let p = if rng.gen_bool(0.5) { 2 } else { 3 };
    let dim = rng.gen_range(1..=4);
    let graded = rng.gen_bool(0.7);
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                if (!graded || k > i.max(j)) && rng.gen_bool(0.3) {
                    entries.push((i, j, k, rng.gen_range(1..p) as i64));
                }
            }
        }
    }
    let labels: Vec<String> = (0..dim).map(|i| format!("e{i}")).collect();
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    Algebra::from_i64(Field::prime(p)?, &labels, &entries)
}

fn main() -> nilplab::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut histogram = std::collections::BTreeMap::new();
    for _ in 0..500 {
        let r = nilpotence_report(&random_algebra(&mut rng)?)?;
        *histogram.entry((r.n1, r.n2, r.n3)).or_insert(0) += 1;
    }
    println!("500 algebras, criteria agree on all; (N1, N2, N3) counts:");
    for ((n1, n2, n3), count) in histogram {
        println!("  {n1:?} {n2:?} {n3:?}: {count}");
    }
    Ok(())
}
